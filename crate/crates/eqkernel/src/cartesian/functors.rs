//! Product functors and the structure transformations between products.

use super::products::{
    instance_kind, power_components_arr, power_components_cell, power_components_ob,
    power_components_pro, product_arrow, product_cell, product_laxator, product_object,
    product_pro, InstanceKind,
};
use crate::core::dualities::power_instance;
use crate::core::{
    Arrow, Cell, CoreError, CoreResult, Instance, ObjectRef, Payload, Proarrow,
};
use crate::functors::{
    as_power, compose_functors, identity_functor, reindex_functor, DoubleFunctor, FunctorClass,
    NaturalTransformation,
};
use crate::instances::finset::{tuple_label, FinFunction, FinSet};
use std::sync::Arc;

fn power_of(d: &Instance, n: usize) -> Instance {
    power_instance(d, n)
}

/// The n-ary product double functor `Π: D^n -> D` for the shipped
/// finite-set instances. Pseudo, with invertible laxators (identities for
/// matrices, relabelings for spans).
pub fn general_product_functor(d: &Instance, n: usize) -> CoreResult<DoubleFunctor> {
    let kind = instance_kind(d)?;
    let src = power_of(d, n);
    let (d1, s1, k1) = (d.clone(), src.clone(), kind.clone());
    let (d2, s2, k2) = (d.clone(), src.clone(), kind.clone());
    let (d3, s3, k3) = (d.clone(), src.clone(), kind.clone());
    let (d4, s4, k4) = (d.clone(), src.clone(), kind.clone());
    let (d5, s5, k5) = (d.clone(), src.clone(), kind.clone());
    let (d6, s6, k6) = (d.clone(), src.clone(), kind.clone());
    let _ = (&k1, &k2);
    Ok(DoubleFunctor {
        name: format!("Π{}[{}]", n, d.id()),
        src: src.clone(),
        tgt: d.clone(),
        class: FunctorClass::Pseudo,
        normal: true,
        ob: Arc::new(move |x| {
            let p = as_power(&s1).expect("power source");
            product_object(&d1, &power_components_ob(p, x))
        }),
        arr: Arc::new(move |f| {
            let p = as_power(&s2).expect("power source");
            product_arrow(&d2, &power_components_arr(p, f))
        }),
        pro: Arc::new(move |m| {
            let p = as_power(&s3).expect("power source");
            product_pro(&d3, &k3, &power_components_pro(p, m))
        }),
        cell: Arc::new(move |c| {
            let p = as_power(&s4).expect("power source");
            product_cell(&d4, &k4, &power_components_cell(p, c))
        }),
        comp_comparison: Arc::new(move |m, n2| {
            let p = as_power(&s5).expect("power source");
            product_laxator(
                &d5,
                &k5,
                &power_components_pro(p, m),
                &power_components_pro(p, n2),
            )
        }),
        unit_comparison: Arc::new(move |x| {
            let p = as_power(&s6).expect("power source");
            let px = product_object(&d6, &power_components_ob(p, x))?;
            // identity proarrow on a product equals the product of
            // identity proarrows, so the comparison is the identity cell
            let ids: Vec<Proarrow> = power_components_ob(p, x)
                .iter()
                .map(|o| d6.id_pro(o))
                .collect();
            let rhs = product_pro(&d6, &k6, &ids)?;
            if rhs != d6.id_pro(&px) {
                return Err(CoreError::Unsupported(
                    "product unit comparison is not an identity".into(),
                ));
            }
            Ok(d6.id_cell_on_pro(&rhs))
        }),
    })
}

/// Binary product `×: D² -> D`.
pub fn product_functor(d: &Instance) -> CoreResult<DoubleFunctor> {
    general_product_functor(d, 2)
}

/// The terminal functor `1: 𝟙 -> D` from the empty power.
pub fn terminal_functor(d: &Instance) -> CoreResult<DoubleFunctor> {
    general_product_functor(d, 0)
}

/// The unique functor `!: D -> 𝟙` into the empty power.
pub fn bang_functor(d: &Instance) -> DoubleFunctor {
    let t = power_of(d, 0);
    let tid = t.id().clone();
    let (t1, t2, t3) = (tid.clone(), tid.clone(), tid.clone());
    let t4 = tid.clone();
    let term1 = t.clone();
    let term2 = t.clone();
    let unique_ob = move |tid: &crate::core::InstanceId| {
        ObjectRef::new(tid.clone(), Payload::Tuple(Vec::new()))
    };
    let u1 = unique_ob.clone();
    let u2 = unique_ob.clone();
    let u3 = unique_ob.clone();
    let u4 = unique_ob;
    DoubleFunctor {
        name: format!("![{}]", d.id()),
        src: d.clone(),
        tgt: t.clone(),
        class: FunctorClass::Strict,
        normal: true,
        ob: Arc::new(move |_| Ok(u1(&t1))),
        arr: Arc::new(move |_| {
            let o = u2(&t2);
            Ok(Arrow::new(o.clone(), o, Payload::Tuple(Vec::new())))
        }),
        pro: Arc::new(move |_| {
            let o = u3(&t3);
            Ok(Proarrow::new(o.clone(), o, Payload::Tuple(Vec::new())))
        }),
        cell: Arc::new(move |_| {
            let o = u4(&t4);
            let pro = Proarrow::new(o.clone(), o.clone(), Payload::Tuple(Vec::new()));
            let arr = Arrow::new(o.clone(), o, Payload::Tuple(Vec::new()));
            Ok(Cell::new(
                pro.clone(),
                pro,
                arr.clone(),
                arr,
                Payload::Tuple(Vec::new()),
            ))
        }),
        comp_comparison: Arc::new(move |_, _| {
            let x = ObjectRef::new(term1.id().clone(), Payload::Tuple(Vec::new()));
            Ok(term1.id_cell_on_pro(&term1.id_pro(&x)))
        }),
        unit_comparison: Arc::new(move |_| {
            let x = ObjectRef::new(term2.id().clone(), Payload::Tuple(Vec::new()));
            Ok(term2.id_cell_on_pro(&term2.id_pro(&x)))
        }),
    }
}

fn set_of(x: &ObjectRef) -> &FinSet {
    x.payload.as_set().expect("finite-set object")
}

/// The arrow `Δ_x: x -> x^n` duplicating each element.
pub fn diag_arrow(d: &Instance, x: &ObjectRef, n: usize) -> CoreResult<Arrow> {
    let tgt = product_object(d, &vec![x.clone(); n])?;
    let f = FinFunction::from_fn(set_of(x).clone(), set_of(&tgt).clone(), |l| {
        tuple_label(&vec![l; n])
    })
    .ok_or_else(|| CoreError::Unsupported("diagonal arrow not total".into()))?;
    Ok(Arrow::new(x.clone(), tgt, Payload::Map(f)))
}

/// The diagonal natural transformation `Δ: 1_D => Δ_D ; Π_n` with
/// components `Δ_x` and cell components `Δ_m: m => Π(m,…,m)`.
pub fn diag_transformation(d: &Instance, n: usize) -> CoreResult<NaturalTransformation> {
    let kind = instance_kind(d)?;
    let tgt = compose_functors(
        &crate::functors::diagonal_functor(d, n),
        &general_product_functor(d, n)?,
    );
    let (d1, k1) = (d.clone(), kind.clone());
    let (d2, k2) = (d.clone(), kind);
    Ok(NaturalTransformation {
        name: format!("Δ{}[{}]", n, d.id()),
        src: identity_functor(d),
        tgt,
        ob: Arc::new(move |x| {
            let _ = &k1;
            diag_arrow(&d1, x, n)
        }),
        pro: Arc::new(move |m| {
            let top = m.clone();
            let bottom = product_pro(&d2, &k2, &vec![m.clone(); n])?;
            let left = diag_arrow(&d2, &m.src, n)?;
            let right = diag_arrow(&d2, &m.tgt, n)?;
            let payload = match &k2 {
                InstanceKind::Mat(_) => Payload::Posetal,
                InstanceKind::Span => {
                    let apex = &m.payload.as_span().unwrap().apex;
                    let bapex = bottom.payload.as_span().unwrap().apex.clone();
                    let w = FinFunction::from_fn(apex.clone(), bapex, |u| {
                        tuple_label(&vec![u; n])
                    })
                    .ok_or_else(|| {
                        CoreError::Unsupported("diagonal witness not total".into())
                    })?;
                    Payload::Map(w)
                }
            };
            let cell = Cell::new(top, bottom, left, right, payload);
            if !d2.check_cell(&cell) {
                return Err(CoreError::Unsupported(format!(
                    "diagonal structure cell does not exist in {}",
                    d2.id()
                )));
            }
            Ok(cell)
        }),
    })
}

/// The arrow `Π(f0)_x⃗: Πx⃗ -> Πf0*(x⃗)`, reindexing product tuples.
pub fn reindex_product_arrow(
    d: &Instance,
    xs: &[ObjectRef],
    f0: &[usize],
) -> CoreResult<Arrow> {
    let src = product_object(d, xs)?;
    let picked: Vec<ObjectRef> = f0.iter().map(|&i| xs[i].clone()).collect();
    let tgt = product_object(d, &picked)?;
    let sets: Vec<&FinSet> = xs.iter().map(|x| set_of(x)).collect();
    let mut pairs = Vec::new();
    for (parts, label) in crate::instances::finset::product_tuples(&sets) {
        let image: Vec<&str> = f0.iter().map(|&i| parts[i].as_str()).collect();
        pairs.push((label, tuple_label(&image)));
    }
    let f = FinFunction::from_pairs(
        set_of(&src).clone(),
        set_of(&tgt).clone(),
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
    .ok_or_else(|| CoreError::Unsupported("structure arrow not total".into()))?;
    Ok(Arrow::new(src, tgt, Payload::Map(f)))
}

/// The structure transformation `Π(f0): Π_I => D^{f0} ; Π_J` for a
/// function `f0: J -> I` between finite index sets, with components the
/// reindexing arrows and cells.
pub fn pi_structure_transformation(
    d: &Instance,
    i_size: usize,
    f0: &[usize],
) -> CoreResult<NaturalTransformation> {
    let kind = instance_kind(d)?;
    let src_f = general_product_functor(d, i_size)?;
    let tgt_f = compose_functors(
        &reindex_functor(d, i_size, f0),
        &general_product_functor(d, f0.len())?,
    );
    let power = power_of(d, i_size);
    let f0v = f0.to_vec();
    let (d1, p1, f1) = (d.clone(), power.clone(), f0v.clone());
    let (d2, p2, f2, k2) = (d.clone(), power, f0v, kind);
    Ok(NaturalTransformation {
        name: format!("Π({:?})[{}]", f0, d.id()),
        src: src_f,
        tgt: tgt_f,
        ob: Arc::new(move |x| {
            let p = as_power(&p1).expect("power");
            reindex_product_arrow(&d1, &power_components_ob(p, x), &f1)
        }),
        pro: Arc::new(move |m| {
            let p = as_power(&p2).expect("power");
            let ms = power_components_pro(p, m);
            let xs: Vec<ObjectRef> = ms.iter().map(|mm| mm.src.clone()).collect();
            let ys: Vec<ObjectRef> = ms.iter().map(|mm| mm.tgt.clone()).collect();
            let top = product_pro(&d2, &k2, &ms)?;
            let picked: Vec<Proarrow> = f2.iter().map(|&i| ms[i].clone()).collect();
            let bottom = product_pro(&d2, &k2, &picked)?;
            let left = reindex_product_arrow(&d2, &xs, &f2)?;
            let right = reindex_product_arrow(&d2, &ys, &f2)?;
            let payload = match &k2 {
                InstanceKind::Mat(_) => Payload::Posetal,
                InstanceKind::Span => {
                    let apexes: Vec<&FinSet> = ms
                        .iter()
                        .map(|mm| &mm.payload.as_span().unwrap().apex)
                        .collect();
                    let mut pairs = Vec::new();
                    for (parts, label) in crate::instances::finset::product_tuples(&apexes) {
                        let image: Vec<&str> =
                            f2.iter().map(|&i| parts[i].as_str()).collect();
                        pairs.push((label, tuple_label(&image)));
                    }
                    let w = FinFunction::from_pairs(
                        top.payload.as_span().unwrap().apex.clone(),
                        bottom.payload.as_span().unwrap().apex.clone(),
                        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
                    )
                    .ok_or_else(|| {
                        CoreError::Unsupported("structure witness not total".into())
                    })?;
                    Payload::Map(w)
                }
            };
            let cell = Cell::new(top, bottom, left, right, payload);
            if !d2.check_cell(&cell) {
                return Err(CoreError::Unsupported(format!(
                    "structure cell Π(f0) does not exist in {}",
                    d2.id()
                )));
            }
            Ok(cell)
        }),
    })
}

/// The projection-pair transformation `Π = (Π¹, Π²): × ; Δ => 1_{D²}`,
/// the counit of the product adjunction.
pub fn proj_transformation(d: &Instance) -> CoreResult<NaturalTransformation> {
    let kind = instance_kind(d)?;
    let d2 = power_of(d, 2);
    let x_functor = product_functor(d)?;
    let src = compose_functors(&x_functor, &crate::functors::diagonal_functor(d, 2));
    let (dd1, p1) = (d.clone(), d2.clone());
    let (dd2, p2, k2) = (d.clone(), d2.clone(), kind);
    let proj_arrow = move |d: &Instance, xs: &[ObjectRef], j: usize| -> CoreResult<Arrow> {
        // π_j: x0 × x1 -> xj
        let src = product_object(d, xs)?;
        let sets: Vec<&FinSet> = xs.iter().map(|x| set_of(x)).collect();
        let mut pairs = Vec::new();
        for (parts, label) in crate::instances::finset::product_tuples(&sets) {
            pairs.push((label, parts[j].clone()));
        }
        let f = FinFunction::from_pairs(
            set_of(&src).clone(),
            set_of(&xs[j]).clone(),
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .ok_or_else(|| CoreError::Unsupported("projection not total".into()))?;
        Ok(Arrow::new(src, xs[j].clone(), Payload::Map(f)))
    };
    let pa1 = proj_arrow.clone();
    let pa2 = proj_arrow;
    Ok(NaturalTransformation {
        name: format!("Π-proj[{}]", d.id()),
        src,
        tgt: identity_functor(&d2),
        ob: Arc::new(move |x| {
            // component at (x0,x1): the pair of projections, an arrow of D²
            let p = as_power(&p1).expect("power");
            let xs = power_components_ob(p, x);
            let pi0 = pa1(&dd1, &xs, 0)?;
            let pi1 = pa1(&dd1, &xs, 1)?;
            Ok(p.arr_from_components(&[pi0, pi1]))
        }),
        pro: Arc::new(move |m| {
            let p = as_power(&p2).expect("power");
            let ms = power_components_pro(p, m);
            let xs: Vec<ObjectRef> = ms.iter().map(|mm| mm.src.clone()).collect();
            let ys: Vec<ObjectRef> = ms.iter().map(|mm| mm.tgt.clone()).collect();
            let prod = product_pro(&dd2, &k2, &ms)?;
            let mut cells = Vec::new();
            for j in 0..2 {
                let left = pa2(&dd2, &xs, j)?;
                let right = pa2(&dd2, &ys, j)?;
                let payload = match &k2 {
                    InstanceKind::Mat(_) => Payload::Posetal,
                    InstanceKind::Span => {
                        let apexes: Vec<&FinSet> = ms
                            .iter()
                            .map(|mm| &mm.payload.as_span().unwrap().apex)
                            .collect();
                        let mut pairs = Vec::new();
                        for (parts, label) in crate::instances::finset::product_tuples(&apexes)
                        {
                            pairs.push((label, parts[j].clone()));
                        }
                        let w = FinFunction::from_pairs(
                            prod.payload.as_span().unwrap().apex.clone(),
                            ms[j].payload.as_span().unwrap().apex.clone(),
                            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
                        )
                        .ok_or_else(|| {
                            CoreError::Unsupported("projection witness not total".into())
                        })?;
                        Payload::Map(w)
                    }
                };
                let cell = Cell::new(prod.clone(), ms[j].clone(), left, right, payload);
                if !dd2.check_cell(&cell) {
                    return Err(CoreError::Unsupported(
                        "projection structure cell does not exist".into(),
                    ));
                }
                cells.push(cell);
            }
            Ok(p.cell_from_components(&cells))
        }),
    })
}

/// The deletion transformation `!: 1_D => !_D ; 1`, with components
/// `!_x: x -> •`.
pub fn bang_transformation(d: &Instance) -> CoreResult<NaturalTransformation> {
    let kind = instance_kind(d)?;
    let tgt = compose_functors(&bang_functor(d), &terminal_functor(d)?);
    let (d1, _k1) = (d.clone(), kind.clone());
    let (d2, k2) = (d.clone(), kind);
    let bang_arrow = |d: &Instance, x: &ObjectRef| -> CoreResult<Arrow> {
        let t = ObjectRef::new(d.id().clone(), Payload::Set(FinSet::singleton()));
        let f = FinFunction::from_fn(set_of(x).clone(), FinSet::singleton(), |_| "•".into())
            .ok_or_else(|| CoreError::Unsupported("deletion arrow not total".into()))?;
        Ok(Arrow::new(x.clone(), t, Payload::Map(f)))
    };
    let b1 = bang_arrow;
    Ok(NaturalTransformation {
        name: format!("![{}]", d.id()),
        src: identity_functor(d),
        tgt,
        ob: Arc::new(move |x| b1(&d1, x)),
        pro: Arc::new(move |m| {
            let t = ObjectRef::new(d2.id().clone(), Payload::Set(FinSet::singleton()));
            let bottom = d2.id_pro(&t);
            let left = b1(&d2, &m.src)?;
            let right = b1(&d2, &m.tgt)?;
            let payload = match &k2 {
                InstanceKind::Mat(_) => Payload::Posetal,
                InstanceKind::Span => {
                    let apex = &m.payload.as_span().unwrap().apex;
                    let w = FinFunction::from_fn(apex.clone(), FinSet::singleton(), |_| {
                        "•".into()
                    })
                    .ok_or_else(|| {
                        CoreError::Unsupported("deletion witness not total".into())
                    })?;
                    Payload::Map(w)
                }
            };
            let cell = Cell::new(m.clone(), bottom, left, right, payload);
            if !d2.check_cell(&cell) {
                return Err(CoreError::Unsupported(format!(
                    "deletion structure cell does not exist in {}",
                    d2.id()
                )));
            }
            Ok(cell)
        }),
    })
}

/// The swap arrow `σ: x × x' -> x' × x`.
pub fn swap_arrow(d: &Instance, x0: &ObjectRef, x1: &ObjectRef) -> CoreResult<Arrow> {
    let src = product_object(d, &[x0.clone(), x1.clone()])?;
    let tgt = product_object(d, &[x1.clone(), x0.clone()])?;
    let sets = [set_of(x0), set_of(x1)];
    let mut pairs = Vec::new();
    for (parts, label) in crate::instances::finset::product_tuples(&sets) {
        pairs.push((label, tuple_label(&[&parts[1], &parts[0]])));
    }
    let f = FinFunction::from_pairs(
        set_of(&src).clone(),
        set_of(&tgt).clone(),
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )
    .ok_or_else(|| CoreError::Unsupported("swap not total".into()))?;
    Ok(Arrow::new(src, tgt, Payload::Map(f)))
}
