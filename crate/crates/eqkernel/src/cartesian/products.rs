//! Product and coproduct structure of the shipped instances.
//!
//! Relations and matrices take Kronecker-style products and block-diagonal
//! coproducts; spans take componentwise products and disjoint unions of
//! apexes. Both constructions come with invertible laxators (identities
//! for matrices, relabelings for spans), packaged as double functors
//! `D^n -> D` by the callers.

use crate::core::dualities::PowerInstance;
use crate::core::{
    Arrow, Cell, CoreError, CoreResult, DoubleCategoryOps, Instance, ObjectRef, Payload, Proarrow,
};
use crate::instances::finset::{
    coproduct_set, inj_label, pair_label, product_tuples, tuple_label, FinFunction, FinSet,
};
use crate::instances::mat::{MatInstance, QMatrix};
use crate::instances::semiring::OrderedSemiring;
use crate::instances::span::{SpanData, SpanInstance};

/// Which payload family an instance uses, for dispatching the product and
/// coproduct constructions.
#[derive(Clone)]
pub enum InstanceKind {
    Mat(OrderedSemiring),
    Span,
}

pub fn instance_kind(d: &Instance) -> CoreResult<InstanceKind> {
    if let Some(m) = d.as_any().downcast_ref::<MatInstance>() {
        return Ok(InstanceKind::Mat(m.ring.clone()));
    }
    if d.as_any().downcast_ref::<SpanInstance>().is_some() {
        return Ok(InstanceKind::Span);
    }
    Err(CoreError::Unsupported(format!(
        "instance {} has no product/coproduct structure",
        d.id()
    )))
}

fn set_of(x: &ObjectRef) -> CoreResult<&FinSet> {
    x.payload
        .as_set()
        .ok_or_else(|| CoreError::Unsupported("expected a finite-set object".into()))
}

fn fun_of(f: &Arrow) -> CoreResult<&FinFunction> {
    f.payload
        .as_map()
        .ok_or_else(|| CoreError::Unsupported("expected a function arrow".into()))
}

/// n-ary product of objects (tuple labels).
pub fn product_object(d: &Instance, xs: &[ObjectRef]) -> CoreResult<ObjectRef> {
    let sets: CoreResult<Vec<&FinSet>> = xs.iter().map(set_of).collect();
    let sets = sets?;
    Ok(ObjectRef::new(
        d.id().clone(),
        Payload::Set(crate::instances::finset::product_set(&sets)),
    ))
}

/// n-ary product of arrows: acts tuple-wise on labels.
pub fn product_arrow(d: &Instance, fs: &[Arrow]) -> CoreResult<Arrow> {
    let srcs: Vec<ObjectRef> = fs.iter().map(|f| f.src.clone()).collect();
    let tgts: Vec<ObjectRef> = fs.iter().map(|f| f.tgt.clone()).collect();
    let src = product_object(d, &srcs)?;
    let tgt = product_object(d, &tgts)?;
    let funs: CoreResult<Vec<&FinFunction>> = fs.iter().map(fun_of).collect();
    let funs = funs?;
    let src_sets: CoreResult<Vec<&FinSet>> = srcs.iter().map(set_of).collect();
    let src_sets = src_sets?;
    let mut pairs = Vec::new();
    for (parts, label) in product_tuples(&src_sets) {
        let image: Vec<String> = parts
            .iter()
            .zip(funs.iter())
            .map(|(p, f)| f.apply(p).expect("total function").to_string())
            .collect();
        let image_l = tuple_label(&image.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        pairs.push((label, image_l));
    }
    let table = FinFunction::from_pairs(
        set_of(&src)?.clone(),
        set_of(&tgt)?.clone(),
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
    .ok_or_else(|| CoreError::Unsupported("product arrow not total".into()))?;
    Ok(Arrow::new(src, tgt, Payload::Map(table)))
}

/// n-ary product of parallel proarrows.
pub fn product_pro(d: &Instance, kind: &InstanceKind, ms: &[Proarrow]) -> CoreResult<Proarrow> {
    let srcs: Vec<ObjectRef> = ms.iter().map(|m| m.src.clone()).collect();
    let tgts: Vec<ObjectRef> = ms.iter().map(|m| m.tgt.clone()).collect();
    let src = product_object(d, &srcs)?;
    let tgt = product_object(d, &tgts)?;
    match kind {
        InstanceKind::Mat(ring) => {
            let mats: Vec<&QMatrix> = ms
                .iter()
                .map(|m| m.payload.as_mat().expect("matrix proarrow"))
                .collect();
            let s = set_of(&src)?.clone();
            let t = set_of(&tgt)?.clone();
            let src_sets: Vec<&FinSet> = mats.iter().map(|m| &m.src).collect();
            let tgt_sets: Vec<&FinSet> = mats.iter().map(|m| &m.tgt).collect();
            let mut out = QMatrix::constant(s.clone(), t.clone(), ring.zero());
            for (sparts, slabel) in product_tuples(&src_sets) {
                for (tparts, tlabel) in product_tuples(&tgt_sets) {
                    let mut v = ring.one();
                    for ((a, b), m) in sparts.iter().zip(tparts.iter()).zip(mats.iter()) {
                        v = ring.mul(v, m.get_labels(a, b).expect("entry"));
                    }
                    let i = s.index_of(&slabel).unwrap();
                    let j = t.index_of(&tlabel).unwrap();
                    out.set(i, j, v);
                }
            }
            Ok(Proarrow::new(src, tgt, Payload::Mat(out)))
        }
        InstanceKind::Span => {
            let spans: Vec<&SpanData> = ms
                .iter()
                .map(|m| m.payload.as_span().expect("span proarrow"))
                .collect();
            let apexes: Vec<&FinSet> = spans.iter().map(|s| &s.apex).collect();
            let apex = crate::instances::finset::product_set(&apexes);
            let mut left_pairs = Vec::new();
            let mut right_pairs = Vec::new();
            for (parts, label) in product_tuples(&apexes) {
                let l: Vec<&str> = parts
                    .iter()
                    .zip(spans.iter())
                    .map(|(p, s)| s.left.apply(p).unwrap())
                    .collect();
                let r: Vec<&str> = parts
                    .iter()
                    .zip(spans.iter())
                    .map(|(p, s)| s.right.apply(p).unwrap())
                    .collect();
                left_pairs.push((label.clone(), tuple_label(&l)));
                right_pairs.push((label, tuple_label(&r)));
            }
            let left = FinFunction::from_pairs(
                apex.clone(),
                set_of(&src)?.clone(),
                left_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .unwrap();
            let right = FinFunction::from_pairs(
                apex.clone(),
                set_of(&tgt)?.clone(),
                right_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .unwrap();
            Ok(Proarrow::new(
                src,
                tgt,
                Payload::Span(SpanData::new(apex, left, right).unwrap()),
            ))
        }
    }
}

/// n-ary product of cells.
pub fn product_cell(d: &Instance, kind: &InstanceKind, cs: &[Cell]) -> CoreResult<Cell> {
    let top = product_pro(d, kind, &cs.iter().map(|c| c.top.clone()).collect::<Vec<_>>())?;
    let bottom = product_pro(
        d,
        kind,
        &cs.iter().map(|c| c.bottom.clone()).collect::<Vec<_>>(),
    )?;
    let left = product_arrow(d, &cs.iter().map(|c| c.left.clone()).collect::<Vec<_>>())?;
    let right = product_arrow(d, &cs.iter().map(|c| c.right.clone()).collect::<Vec<_>>())?;
    let payload = match kind {
        InstanceKind::Mat(_) => Payload::Posetal,
        InstanceKind::Span => {
            let tops: Vec<&FinSet> = cs
                .iter()
                .map(|c| &c.top.payload.as_span().unwrap().apex)
                .collect();
            let wits: Vec<&FinFunction> =
                cs.iter().map(|c| c.payload.as_map().expect("witness")).collect();
            let mut pairs = Vec::new();
            for (parts, label) in product_tuples(&tops) {
                let image: Vec<&str> = parts
                    .iter()
                    .zip(wits.iter())
                    .map(|(p, w)| w.apply(p).unwrap())
                    .collect();
                pairs.push((label, tuple_label(&image)));
            }
            let w = FinFunction::from_pairs(
                top.payload.as_span().unwrap().apex.clone(),
                bottom.payload.as_span().unwrap().apex.clone(),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .ok_or_else(|| CoreError::Unsupported("product witness not total".into()))?;
            Payload::Map(w)
        }
    };
    let cell = Cell::new(top, bottom, left, right, payload);
    if !d.check_cell(&cell) {
        return Err(CoreError::Unsupported(
            "product cell fails the instance cell criterion".into(),
        ));
    }
    Ok(cell)
}

/// The laxator of the product functor: `Π(m⃗) ⊙ Π(n⃗) => Π(m⃗ ⊙ n⃗)`.
/// Identity for matrices (products are strict there), a relabeling of
/// matched tuples for spans.
pub fn product_laxator(
    d: &Instance,
    kind: &InstanceKind,
    ms: &[Proarrow],
    ns: &[Proarrow],
) -> CoreResult<Cell> {
    let pm = product_pro(d, kind, ms)?;
    let pn = product_pro(d, kind, ns)?;
    let lhs = d.compose_pro(&pm, &pn)?;
    let composites: CoreResult<Vec<Proarrow>> = ms
        .iter()
        .zip(ns.iter())
        .map(|(m, n)| d.compose_pro(m, n))
        .collect();
    let rhs = product_pro(d, kind, &composites?)?;
    match kind {
        InstanceKind::Mat(_) => {
            if lhs != rhs {
                return Err(CoreError::Unsupported(
                    "matrix product laxator expected strictness".into(),
                ));
            }
            Ok(d.id_cell_on_pro(&lhs))
        }
        InstanceKind::Span => {
            // ((u1..uk),(v1..vk)) ↦ ((u1,v1)..(uk,vk))
            let lspan = lhs.payload.as_span().unwrap();
            let rspan = rhs.payload.as_span().unwrap();
            let m_apexes: Vec<&FinSet> = ms
                .iter()
                .map(|m| &m.payload.as_span().unwrap().apex)
                .collect();
            let n_apexes: Vec<&FinSet> = ns
                .iter()
                .map(|n| &n.payload.as_span().unwrap().apex)
                .collect();
            let mut pairs = Vec::new();
            for (mparts, mlabel) in product_tuples(&m_apexes) {
                for (nparts, nlabel) in product_tuples(&n_apexes) {
                    let from = pair_label(&mlabel, &nlabel);
                    if !lspan.apex.contains(&from) {
                        continue;
                    }
                    let comps: Vec<String> = mparts
                        .iter()
                        .zip(nparts.iter())
                        .map(|(u, v)| pair_label(u, v))
                        .collect();
                    let to = tuple_label(&comps.iter().map(|s| s.as_str()).collect::<Vec<_>>());
                    pairs.push((from, to));
                }
            }
            let w = FinFunction::from_pairs(
                lspan.apex.clone(),
                rspan.apex.clone(),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .ok_or_else(|| CoreError::Unsupported("product laxator relabeling not total".into()))?;
            let cell = Cell::new(
                lhs.clone(),
                rhs,
                d.id_arrow(&lhs.src),
                d.id_arrow(&lhs.tgt),
                Payload::Map(w),
            );
            if !d.check_cell(&cell) {
                return Err(CoreError::Unsupported("product laxator rejected".into()));
            }
            Ok(cell)
        }
    }
}

// ---------------------------------------------------------------------------
// coproducts

pub fn coproduct_object(d: &Instance, xs: &[ObjectRef]) -> CoreResult<ObjectRef> {
    let sets: CoreResult<Vec<&FinSet>> = xs.iter().map(set_of).collect();
    Ok(ObjectRef::new(
        d.id().clone(),
        Payload::Set(coproduct_set(&sets?)),
    ))
}

pub fn coproduct_arrow(d: &Instance, fs: &[Arrow]) -> CoreResult<Arrow> {
    let n = fs.len();
    let srcs: Vec<ObjectRef> = fs.iter().map(|f| f.src.clone()).collect();
    let tgts: Vec<ObjectRef> = fs.iter().map(|f| f.tgt.clone()).collect();
    let src = coproduct_object(d, &srcs)?;
    let tgt = coproduct_object(d, &tgts)?;
    let mut pairs = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        let fun = fun_of(f)?;
        for l in fun.src.labels() {
            pairs.push((
                inj_label(n, i, l),
                inj_label(n, i, fun.apply(l).unwrap()),
            ));
        }
    }
    let table = FinFunction::from_pairs(
        set_of(&src)?.clone(),
        set_of(&tgt)?.clone(),
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
    .ok_or_else(|| CoreError::Unsupported("coproduct arrow not total".into()))?;
    Ok(Arrow::new(src, tgt, Payload::Map(table)))
}

/// Block-diagonal coproduct of parallel proarrows: zero off-blocks for
/// matrices, disjoint-union apexes for spans.
pub fn coproduct_pro(d: &Instance, kind: &InstanceKind, ms: &[Proarrow]) -> CoreResult<Proarrow> {
    let n = ms.len();
    let srcs: Vec<ObjectRef> = ms.iter().map(|m| m.src.clone()).collect();
    let tgts: Vec<ObjectRef> = ms.iter().map(|m| m.tgt.clone()).collect();
    let src = coproduct_object(d, &srcs)?;
    let tgt = coproduct_object(d, &tgts)?;
    match kind {
        InstanceKind::Mat(ring) => {
            let s = set_of(&src)?.clone();
            let t = set_of(&tgt)?.clone();
            let mut out = QMatrix::constant(s.clone(), t.clone(), ring.zero());
            for (i, m) in ms.iter().enumerate() {
                let mat = m.payload.as_mat().expect("matrix proarrow");
                for a in mat.src.labels() {
                    for b in mat.tgt.labels() {
                        let si = s.index_of(&inj_label(n, i, a)).unwrap();
                        let tj = t.index_of(&inj_label(n, i, b)).unwrap();
                        out.set(si, tj, mat.get_labels(a, b).unwrap());
                    }
                }
            }
            Ok(Proarrow::new(src, tgt, Payload::Mat(out)))
        }
        InstanceKind::Span => {
            let spans: Vec<&SpanData> = ms
                .iter()
                .map(|m| m.payload.as_span().expect("span proarrow"))
                .collect();
            let apexes: Vec<&FinSet> = spans.iter().map(|s| &s.apex).collect();
            let apex = coproduct_set(&apexes);
            let mut left_pairs = Vec::new();
            let mut right_pairs = Vec::new();
            for (i, s) in spans.iter().enumerate() {
                for u in s.apex.labels() {
                    left_pairs.push((
                        inj_label(n, i, u),
                        inj_label(n, i, s.left.apply(u).unwrap()),
                    ));
                    right_pairs.push((
                        inj_label(n, i, u),
                        inj_label(n, i, s.right.apply(u).unwrap()),
                    ));
                }
            }
            let left = FinFunction::from_pairs(
                apex.clone(),
                set_of(&src)?.clone(),
                left_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .unwrap();
            let right = FinFunction::from_pairs(
                apex.clone(),
                set_of(&tgt)?.clone(),
                right_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .unwrap();
            Ok(Proarrow::new(
                src,
                tgt,
                Payload::Span(SpanData::new(apex, left, right).unwrap()),
            ))
        }
    }
}

pub fn coproduct_cell(d: &Instance, kind: &InstanceKind, cs: &[Cell]) -> CoreResult<Cell> {
    let n = cs.len();
    let top = coproduct_pro(d, kind, &cs.iter().map(|c| c.top.clone()).collect::<Vec<_>>())?;
    let bottom = coproduct_pro(
        d,
        kind,
        &cs.iter().map(|c| c.bottom.clone()).collect::<Vec<_>>(),
    )?;
    let left = coproduct_arrow(d, &cs.iter().map(|c| c.left.clone()).collect::<Vec<_>>())?;
    let right = coproduct_arrow(d, &cs.iter().map(|c| c.right.clone()).collect::<Vec<_>>())?;
    let payload = match kind {
        InstanceKind::Mat(_) => Payload::Posetal,
        InstanceKind::Span => {
            let mut pairs = Vec::new();
            for (i, c) in cs.iter().enumerate() {
                let w = c.payload.as_map().expect("witness");
                for u in w.src.labels() {
                    pairs.push((inj_label(n, i, u), inj_label(n, i, w.apply(u).unwrap())));
                }
            }
            let w = FinFunction::from_pairs(
                top.payload.as_span().unwrap().apex.clone(),
                bottom.payload.as_span().unwrap().apex.clone(),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .ok_or_else(|| CoreError::Unsupported("coproduct witness not total".into()))?;
            Payload::Map(w)
        }
    };
    let cell = Cell::new(top, bottom, left, right, payload);
    if !d.check_cell(&cell) {
        return Err(CoreError::Unsupported(
            "coproduct cell fails the instance cell criterion".into(),
        ));
    }
    Ok(cell)
}

/// The laxator of the coproduct functor: `Σ(m⃗) ⊙ Σ(n⃗) => Σ(m⃗ ⊙ n⃗)`.
pub fn coproduct_laxator(
    d: &Instance,
    kind: &InstanceKind,
    ms: &[Proarrow],
    ns: &[Proarrow],
) -> CoreResult<Cell> {
    let n = ms.len();
    let pm = coproduct_pro(d, kind, ms)?;
    let pn = coproduct_pro(d, kind, ns)?;
    let lhs = d.compose_pro(&pm, &pn)?;
    let composites: CoreResult<Vec<Proarrow>> = ms
        .iter()
        .zip(ns.iter())
        .map(|(m, nn)| d.compose_pro(m, nn))
        .collect();
    let rhs = coproduct_pro(d, kind, &composites?)?;
    match kind {
        InstanceKind::Mat(_) => {
            if lhs != rhs {
                return Err(CoreError::Unsupported(
                    "matrix coproduct laxator expected strictness".into(),
                ));
            }
            Ok(d.id_cell_on_pro(&lhs))
        }
        InstanceKind::Span => {
            // matched pairs live in the same block: (inᵢ·u, inᵢ·v) ↦ inᵢ·(u,v)
            let lspan = lhs.payload.as_span().unwrap();
            let rspan = rhs.payload.as_span().unwrap();
            let mut pairs = Vec::new();
            for (i, (m, nn)) in ms.iter().zip(ns.iter()).enumerate() {
                let ma = &m.payload.as_span().unwrap().apex;
                let na = &nn.payload.as_span().unwrap().apex;
                for u in ma.labels() {
                    for v in na.labels() {
                        let from = pair_label(&inj_label(n, i, u), &inj_label(n, i, v));
                        if lspan.apex.contains(&from) {
                            pairs.push((from, inj_label(n, i, &pair_label(u, v))));
                        }
                    }
                }
            }
            let w = FinFunction::from_pairs(
                lspan.apex.clone(),
                rspan.apex.clone(),
                pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )
            .ok_or_else(|| {
                CoreError::Unsupported("coproduct laxator relabeling not total".into())
            })?;
            let cell = Cell::new(
                lhs.clone(),
                rhs,
                d.id_arrow(&lhs.src),
                d.id_arrow(&lhs.tgt),
                Payload::Map(w),
            );
            if !d.check_cell(&cell) {
                return Err(CoreError::Unsupported("coproduct laxator rejected".into()));
            }
            Ok(cell)
        }
    }
}

/// Unwraps the components of a power-instance value through the given
/// power instance.
pub fn power_components_ob(p: &PowerInstance, x: &ObjectRef) -> Vec<ObjectRef> {
    (0..p.width()).map(|i| p.obj_component(x, i)).collect()
}

pub fn power_components_arr(p: &PowerInstance, f: &Arrow) -> Vec<Arrow> {
    (0..p.width()).map(|i| p.arr_component(f, i)).collect()
}

pub fn power_components_pro(p: &PowerInstance, m: &Proarrow) -> Vec<Proarrow> {
    (0..p.width()).map(|i| p.pro_component(m, i)).collect()
}

pub fn power_components_cell(p: &PowerInstance, c: &Cell) -> Vec<Cell> {
    (0..p.width()).map(|i| p.cell_component(c, i)).collect()
}
