//! Spans of finite sets as a pseudo double category.
//!
//! Proarrows are spans `x <- apex -> y`; cells carry a witness function
//! between apexes making both leg squares commute. External composition is
//! the pullback span whose apex labels are the matched pairs themselves,
//! so associators and unitors are canonical relabelings.

use crate::core::{
    boundary_error, Arrow, Cell, CellBoundary, CoreResult, DoubleCategoryOps, Instance,
    InstanceId, ObjectRef, Payload, Proarrow,
};
use crate::instances::finset::{all_functions, pair_label, FinFunction, FinSet};
use crate::instances::mat::canonical_objects;
use crate::instances::probe::{ProbeConfig, SplitMix};
use serde::Serialize;
use std::any::Any;
use std::fmt;
use std::sync::Arc;

/// A span of finite sets with an explicitly labelled apex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpanData {
    pub apex: FinSet,
    pub left: FinFunction,
    pub right: FinFunction,
}

impl SpanData {
    /// Builds a span; the legs must share the apex as source.
    pub fn new(apex: FinSet, left: FinFunction, right: FinFunction) -> Option<Self> {
        if left.src != apex || right.src != apex {
            return None;
        }
        Some(SpanData { apex, left, right })
    }

    pub fn identity(x: &FinSet) -> Self {
        SpanData {
            apex: x.clone(),
            left: FinFunction::identity(x),
            right: FinFunction::identity(x),
        }
    }

    /// The span `src <-id- src -f-> tgt`, the chosen companion shape.
    pub fn graph(f: &FinFunction) -> Self {
        SpanData {
            apex: f.src.clone(),
            left: FinFunction::identity(&f.src),
            right: f.clone(),
        }
    }

    /// The span `tgt <-f- src -id-> src`, the chosen conjoint shape.
    pub fn cograph(f: &FinFunction) -> Self {
        SpanData {
            apex: f.src.clone(),
            left: f.clone(),
            right: FinFunction::identity(&f.src),
        }
    }

    pub fn src(&self) -> &FinSet {
        &self.left.tgt
    }

    pub fn tgt(&self) -> &FinSet {
        &self.right.tgt
    }
}

impl fmt::Debug for SpanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{:?} ←{:?}– {:?} –{:?}→ {:?}⟩",
            self.src(),
            self.left,
            self.apex,
            self.right,
            self.tgt()
        )
    }
}

/// The double category of spans of finite sets.
pub struct SpanInstance {
    id: InstanceId,
}

pub fn make_span_instance() -> Instance {
    Arc::new(SpanInstance {
        id: InstanceId::new("span"),
    })
}

impl SpanInstance {
    fn obj(&self, s: FinSet) -> ObjectRef {
        ObjectRef::new(self.id.clone(), Payload::Set(s))
    }

    fn set_of<'a>(&self, x: &'a ObjectRef) -> &'a FinSet {
        x.payload.as_set().expect("span instance object payload")
    }

    fn span_of<'a>(&self, m: &'a Proarrow) -> &'a SpanData {
        m.payload.as_span().expect("span instance proarrow payload")
    }

    fn fun_of<'a>(&self, f: &'a Arrow) -> &'a FinFunction {
        f.payload.as_map().expect("span instance arrow payload")
    }

    fn witness_of<'a>(&self, c: &'a Cell) -> &'a FinFunction {
        c.payload.as_map().expect("span instance cell payload")
    }

    pub fn pro(&self, s: SpanData) -> Proarrow {
        Proarrow::new(
            self.obj(s.src().clone()),
            self.obj(s.tgt().clone()),
            Payload::Span(s),
        )
    }

    pub fn arr(&self, f: FinFunction) -> Arrow {
        Arrow::new(
            self.obj(f.src.clone()),
            self.obj(f.tgt.clone()),
            Payload::Map(f),
        )
    }

    /// Builds a cell from a candidate witness, checking both leg equations
    /// `w;bottom.left = top.left;f` and `w;bottom.right = top.right;g`.
    pub fn mk_cell(
        &self,
        top: &Proarrow,
        bottom: &Proarrow,
        left: &Arrow,
        right: &Arrow,
        witness: FinFunction,
    ) -> Option<Cell> {
        let t = self.span_of(top);
        let b = self.span_of(bottom);
        let f = self.fun_of(left);
        let g = self.fun_of(right);
        if witness.src != t.apex || witness.tgt != b.apex {
            return None;
        }
        let lhs_l = witness.then(&b.left)?;
        let rhs_l = t.left.then(f)?;
        let lhs_r = witness.then(&b.right)?;
        let rhs_r = t.right.then(g)?;
        if lhs_l != rhs_l || lhs_r != rhs_r {
            return None;
        }
        Some(Cell::new(
            top.clone(),
            bottom.clone(),
            left.clone(),
            right.clone(),
            Payload::Map(witness),
        ))
    }

    /// Pullback span together with the projections to the two apexes,
    /// expressed on labels. Apex labels are the matched pairs "(u,v)".
    fn pullback(&self, m: &SpanData, n: &SpanData) -> (SpanData, FinFunction, FinFunction) {
        let mut labels = Vec::new();
        let mut left_pairs = Vec::new();
        let mut right_pairs = Vec::new();
        let mut to_m = Vec::new();
        let mut to_n = Vec::new();
        for u in m.apex.labels() {
            for v in n.apex.labels() {
                if m.right.apply(u) == n.left.apply(v) {
                    let l = pair_label(u, v);
                    left_pairs.push((l.clone(), m.left.apply(u).unwrap().to_string()));
                    right_pairs.push((l.clone(), n.right.apply(v).unwrap().to_string()));
                    to_m.push((l.clone(), u.clone()));
                    to_n.push((l.clone(), v.clone()));
                    labels.push(l);
                }
            }
        }
        let apex = FinSet::new_strict(labels);
        let left = FinFunction::from_pairs(
            apex.clone(),
            m.src().clone(),
            left_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .unwrap();
        let right = FinFunction::from_pairs(
            apex.clone(),
            n.tgt().clone(),
            right_pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .unwrap();
        let proj_m = FinFunction::from_pairs(
            apex.clone(),
            m.apex.clone(),
            to_m.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .unwrap();
        let proj_n = FinFunction::from_pairs(
            apex.clone(),
            n.apex.clone(),
            to_n.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .unwrap();
        (SpanData::new(apex, left, right).unwrap(), proj_m, proj_n)
    }

    /// Canonical globular cell between composites, given the witness on
    /// apexes. Used for associators and unitors.
    fn globular(&self, from: &Proarrow, to: &Proarrow, witness: FinFunction) -> Cell {
        self.mk_cell(
            from,
            to,
            &self.id_arrow(&from.src),
            &self.id_arrow(&from.tgt),
            witness,
        )
        .expect("canonical coherence witness")
    }
}

impl DoubleCategoryOps for SpanInstance {
    fn id(&self) -> &InstanceId {
        &self.id
    }

    fn is_strict(&self) -> bool {
        false
    }

    fn as_any(&self) -> &dyn Any {
        self
    }

    fn compose_arrows(&self, f: &Arrow, g: &Arrow) -> CoreResult<Arrow> {
        if f.tgt != g.src {
            return Err(boundary_error("compose_arrows", "f.tgt != g.src"));
        }
        let fg = self
            .fun_of(f)
            .then(self.fun_of(g))
            .ok_or_else(|| boundary_error("compose_arrows", "tables do not chain"))?;
        Ok(self.arr(fg))
    }

    fn id_arrow(&self, x: &ObjectRef) -> Arrow {
        self.arr(FinFunction::identity(self.set_of(x)))
    }

    fn compose_pro(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Proarrow> {
        if m.tgt != n.src {
            return Err(boundary_error("compose_pro", "m.tgt != n.src"));
        }
        let (span, _, _) = self.pullback(self.span_of(m), self.span_of(n));
        Ok(self.pro(span))
    }

    fn id_pro(&self, x: &ObjectRef) -> Proarrow {
        self.pro(SpanData::identity(self.set_of(x)))
    }

    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.bottom != b.top {
            return Err(boundary_error("vcomp", "a.bottom != b.top"));
        }
        let left = self.compose_arrows(&a.left, &b.left)?;
        let right = self.compose_arrows(&a.right, &b.right)?;
        let w = self
            .witness_of(a)
            .then(self.witness_of(b))
            .ok_or_else(|| boundary_error("vcomp", "witnesses do not chain"))?;
        self.mk_cell(&a.top, &b.bottom, &left, &right, w)
            .ok_or_else(|| boundary_error("vcomp", "leg equations failed on composite"))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.right != b.left {
            return Err(boundary_error("hcomp", "a.right != b.left"));
        }
        let top = self.compose_pro(&a.top, &b.top)?;
        let bottom = self.compose_pro(&a.bottom, &b.bottom)?;
        // witness on pullback apexes: (u,v) ↦ (wa(u), wb(v))
        let wa = self.witness_of(a);
        let wb = self.witness_of(b);
        let top_apex = &self.span_of(&top).apex;
        let bottom_apex = &self.span_of(&bottom).apex;
        let (t, _, _) = self.pullback(self.span_of(&a.top), self.span_of(&b.top));
        debug_assert_eq!(&t.apex, top_apex);
        let mut pairs = Vec::new();
        for u in self.span_of(&a.top).apex.labels() {
            for v in self.span_of(&b.top).apex.labels() {
                if self.span_of(&a.top).right.apply(u) == self.span_of(&b.top).left.apply(v) {
                    let from = pair_label(u, v);
                    let to = pair_label(wa.apply(u).unwrap(), wb.apply(v).unwrap());
                    pairs.push((from, to));
                }
            }
        }
        let w = FinFunction::from_pairs(
            top_apex.clone(),
            bottom_apex.clone(),
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .ok_or_else(|| boundary_error("hcomp", "induced witness not total"))?;
        self.mk_cell(&top, &bottom, &a.left, &b.right, w)
            .ok_or_else(|| boundary_error("hcomp", "leg equations failed on composite"))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        let fun = self.fun_of(f).clone();
        self.mk_cell(
            &self.id_pro(&f.src),
            &self.id_pro(&f.tgt),
            f,
            f,
            fun,
        )
        .expect("identity cell on arrow")
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        let w = FinFunction::identity(&self.span_of(m).apex);
        self.mk_cell(m, m, &self.id_arrow(&m.src), &self.id_arrow(&m.tgt), w)
            .expect("identity cell on proarrow")
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let mn = self.compose_pro(m, n)?;
        let mn_p = self.compose_pro(&mn, p)?;
        let np = self.compose_pro(n, p)?;
        let m_np = self.compose_pro(m, &np)?;
        // relabeling ((u,v),w) ↦ (u,(v,w))
        let sm = self.span_of(m);
        let sn = self.span_of(n);
        let sp = self.span_of(p);
        let mut pairs = Vec::new();
        for u in sm.apex.labels() {
            for v in sn.apex.labels() {
                if sm.right.apply(u) != sn.left.apply(v) {
                    continue;
                }
                for w in sp.apex.labels() {
                    if sn.right.apply(v) != sp.left.apply(w) {
                        continue;
                    }
                    let from = pair_label(&pair_label(u, v), w);
                    let to = pair_label(u, &pair_label(v, w));
                    pairs.push((from, to));
                }
            }
        }
        let apex_from = self.span_of(&mn_p).apex.clone();
        let apex_to = self.span_of(&m_np).apex.clone();
        let w = FinFunction::from_pairs(
            apex_from,
            apex_to,
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .ok_or_else(|| boundary_error("associator", "relabeling not total"))?;
        Ok(self.globular(&mn_p, &m_np, w))
    }

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let a = self.associator(m, n, p)?;
        self.invert_cell(&a)
            .ok_or_else(|| boundary_error("associator_inv", "associator not invertible"))
    }

    fn lunitor(&self, m: &Proarrow) -> Cell {
        // (a,u) ↦ u, where a = left(u)
        let s = self.span_of(m);
        let idm = self.compose_pro(&self.id_pro(&m.src), m).unwrap();
        let apex_from = self.span_of(&idm).apex.clone();
        let pairs: Vec<(String, String)> = s
            .apex
            .labels()
            .iter()
            .map(|u| (pair_label(s.left.apply(u).unwrap(), u), u.clone()))
            .collect();
        let w = FinFunction::from_pairs(
            apex_from,
            s.apex.clone(),
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .expect("lunitor relabeling");
        self.globular(&idm, m, w)
    }

    fn lunitor_inv(&self, m: &Proarrow) -> Cell {
        let l = self.lunitor(m);
        self.invert_cell(&l).expect("lunitor invertible")
    }

    fn runitor(&self, m: &Proarrow) -> Cell {
        let s = self.span_of(m);
        let mid = self.compose_pro(m, &self.id_pro(&m.tgt)).unwrap();
        let apex_from = self.span_of(&mid).apex.clone();
        let pairs: Vec<(String, String)> = s
            .apex
            .labels()
            .iter()
            .map(|u| (pair_label(u, s.right.apply(u).unwrap()), u.clone()))
            .collect();
        let w = FinFunction::from_pairs(
            apex_from,
            s.apex.clone(),
            pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
        .expect("runitor relabeling");
        self.globular(&mid, m, w)
    }

    fn runitor_inv(&self, m: &Proarrow) -> Cell {
        let r = self.runitor(m);
        self.invert_cell(&r).expect("runitor invertible")
    }

    fn check_cell(&self, c: &Cell) -> bool {
        if !c.boundary_ok() {
            return false;
        }
        match &c.payload {
            Payload::Map(w) => self
                .mk_cell(&c.top, &c.bottom, &c.left, &c.right, w.clone())
                .is_some(),
            _ => false,
        }
    }

    fn invert_cell(&self, c: &Cell) -> Option<Cell> {
        let left_inv = self.invert_arrow(&c.left)?;
        let right_inv = self.invert_arrow(&c.right)?;
        let w = self.witness_of(c).inverse()?;
        self.mk_cell(&c.bottom, &c.top, &left_inv, &right_inv, w)
    }

    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow> {
        self.fun_of(f).inverse().map(|g| self.arr(g))
    }

    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let fun = self.fun_of(f);
        let comp = self.pro(SpanData::graph(fun));
        // unit witness: identity on src; counit witness: f itself
        let unit = self.mk_cell(
            &self.id_pro(&f.src),
            &comp,
            &self.id_arrow(&f.src),
            f,
            FinFunction::identity(&fun.src),
        )?;
        let counit = self.mk_cell(
            &comp,
            &self.id_pro(&f.tgt),
            f,
            &self.id_arrow(&f.tgt),
            fun.clone(),
        )?;
        Some((comp, unit, counit))
    }

    fn conjoint_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let fun = self.fun_of(f);
        let conj = self.pro(SpanData::cograph(fun));
        let unit = self.mk_cell(
            &self.id_pro(&f.src),
            &conj,
            f,
            &self.id_arrow(&f.src),
            FinFunction::identity(&fun.src),
        )?;
        let counit = self.mk_cell(
            &conj,
            &self.id_pro(&f.tgt),
            &self.id_arrow(&f.tgt),
            f,
            fun.clone(),
        )?;
        Some((conj, unit, counit))
    }

    fn perturb_pro(&self, m: &Proarrow, seed: u64) -> Option<(Proarrow, Cell, Cell)> {
        // rename apex labels by a seeded decoration; the proarrow stays
        // isomorphic via the relabeling witness
        let s = self.span_of(m);
        let mut rng = SplitMix::new(seed);
        let tag = rng.below(1000);
        let renamed: Vec<(String, String)> = s
            .apex
            .labels()
            .iter()
            .map(|l| (l.clone(), format!("p{tag}·{l}")))
            .collect();
        let apex2 = FinSet::new_strict(renamed.iter().map(|(_, b)| b.clone()));
        let rename = FinFunction::from_pairs(
            s.apex.clone(),
            apex2.clone(),
            renamed.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        let rename_inv = rename.inverse()?;
        let left2 = rename_inv.then(&s.left)?;
        let right2 = rename_inv.then(&s.right)?;
        let m2 = self.pro(SpanData::new(apex2, left2, right2)?);
        let iso = self.mk_cell(
            m,
            &m2,
            &self.id_arrow(&m.src),
            &self.id_arrow(&m.tgt),
            rename,
        )?;
        let iso_inv = self.mk_cell(
            &m2,
            m,
            &self.id_arrow(&m.src),
            &self.id_arrow(&m.tgt),
            rename_inv,
        )?;
        Some((m2, iso, iso_inv))
    }

    fn enumerate_objects(&self, cfg: &ProbeConfig) -> Vec<ObjectRef> {
        canonical_objects(cfg.max_object_size)
            .into_iter()
            .map(|s| self.obj(s))
            .collect()
    }

    fn enumerate_arrows(&self, x: &ObjectRef, y: &ObjectRef) -> Vec<Arrow> {
        all_functions(self.set_of(x), self.set_of(y))
            .into_iter()
            .map(|f| self.arr(f))
            .collect()
    }

    fn enumerate_proarrows(
        &self,
        x: &ObjectRef,
        y: &ObjectRef,
        cfg: &ProbeConfig,
    ) -> Vec<Proarrow> {
        // apex choice is unbounded, so span enumeration is always seeded
        // sampling over apexes up to the configured bound
        let xs = self.set_of(x);
        let ys = self.set_of(y);
        let mut rng = SplitMix::new(
            cfg.seed ^ ((xs.len() as u64) << 8) ^ ((ys.len() as u64) << 16),
        );
        let mut out = Vec::new();
        // graph spans of a few functions keep companion-shaped proarrows in
        // every universe
        for f in all_functions(xs, ys).into_iter().take(4) {
            let p = self.pro(SpanData::graph(&f));
            if !out.contains(&p) {
                out.push(p);
            }
        }
        let apex_names = ["u", "v", "w"];
        for _ in 0..cfg.budget {
            let k = rng.below(cfg.max_apex_size + 1);
            let apex = FinSet::new_strict(apex_names[..k].iter().map(|s| s.to_string()));
            if (xs.is_empty() || ys.is_empty()) && k > 0 {
                continue;
            }
            let left = random_function(&apex, xs, &mut rng);
            let right = random_function(&apex, ys, &mut rng);
            if let (Some(l), Some(r)) = (left, right) {
                let p = self.pro(SpanData::new(apex, l, r).unwrap());
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell> {
        let t = self.span_of(&b.top);
        let bo = self.span_of(&b.bottom);
        all_functions(&t.apex, &bo.apex)
            .into_iter()
            .filter_map(|w| self.mk_cell(&b.top, &b.bottom, &b.left, &b.right, w))
            .collect()
    }
}

fn random_function(src: &FinSet, tgt: &FinSet, rng: &mut SplitMix) -> Option<FinFunction> {
    if src.is_empty() {
        return FinFunction::from_table(src.clone(), tgt.clone(), Vec::new());
    }
    if tgt.is_empty() {
        return None;
    }
    let table = (0..src.len()).map(|_| rng.below(tgt.len())).collect();
    FinFunction::from_table(src.clone(), tgt.clone(), table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span() -> Instance {
        make_span_instance()
    }

    fn obj(d: &Instance, labels: &[&str]) -> ObjectRef {
        ObjectRef::new(d.id().clone(), Payload::Set(FinSet::new(labels.to_vec())))
    }

    #[test]
    fn graph_composition_apex_is_function_graph() {
        let d = span();
        let sp = d.as_any().downcast_ref::<SpanInstance>().unwrap();
        let x = FinSet::new(["a", "b"]);
        let y = FinSet::new(["0", "1"]);
        let z = FinSet::new(["p"]);
        let f = FinFunction::from_pairs(x.clone(), y.clone(), [("a", "0"), ("b", "1")]).unwrap();
        let g = FinFunction::from_pairs(y.clone(), z.clone(), [("0", "p"), ("1", "p")]).unwrap();
        let m = sp.pro(SpanData::graph(&f));
        let n = sp.pro(SpanData::graph(&g));
        let mn = d.compose_pro(&m, &n).unwrap();
        // apex is {(x, f(x))}: canonically bijective to x
        let apex = mn.payload.as_span().unwrap().apex.clone();
        assert_eq!(apex, FinSet::new(["(a,0)", "(b,1)"]));
    }

    #[test]
    fn cell_enumeration_filters_by_leg_equations() {
        let d = span();
        let sp = d.as_any().downcast_ref::<SpanInstance>().unwrap();
        let x = FinSet::new(["a", "b"]);
        let apex_top = FinSet::new(["u", "v"]);
        let apex_bot = FinSet::new(["p", "q", "r"]);
        let top = sp.pro(
            SpanData::new(
                apex_top.clone(),
                FinFunction::from_pairs(apex_top.clone(), x.clone(), [("u", "a"), ("v", "b")])
                    .unwrap(),
                FinFunction::from_pairs(apex_top.clone(), x.clone(), [("u", "a"), ("v", "b")])
                    .unwrap(),
            )
            .unwrap(),
        );
        let bottom = sp.pro(
            SpanData::new(
                apex_bot.clone(),
                FinFunction::from_pairs(
                    apex_bot.clone(),
                    x.clone(),
                    [("p", "a"), ("q", "b"), ("r", "b")],
                )
                .unwrap(),
                FinFunction::from_pairs(
                    apex_bot.clone(),
                    x.clone(),
                    [("p", "a"), ("q", "b"), ("r", "a")],
                )
                .unwrap(),
            )
            .unwrap(),
        );
        let idx = d.id_arrow(&obj(&d, &["a", "b"]));
        let cells = d.enumerate_cells(&CellBoundary {
            top: top.clone(),
            bottom: bottom.clone(),
            left: idx.clone(),
            right: idx.clone(),
        });
        // 3^2 candidate witnesses, only u↦p, v↦q survives both legs
        assert_eq!(cells.len(), 1);
        let w = cells[0].payload.as_map().unwrap();
        assert_eq!(w.apply("u"), Some("p"));
        assert_eq!(w.apply("v"), Some("q"));
        // a candidate violating a leg equation is rejected
        let bad = FinFunction::from_pairs(apex_top, apex_bot, [("u", "q"), ("v", "q")]).unwrap();
        assert!(sp.mk_cell(&top, &bottom, &idx, &idx, bad).is_none());
    }

    #[test]
    fn associator_is_the_reassociating_bijection() {
        let d = span();
        let sp = d.as_any().downcast_ref::<SpanInstance>().unwrap();
        let x = FinSet::new(["a"]);
        let f = FinFunction::identity(&x);
        let m = sp.pro(SpanData::graph(&f));
        let a = d.associator(&m, &m, &m).unwrap();
        let w = a.payload.as_map().unwrap();
        assert_eq!(w.apply("((a,a),a)"), Some("(a,(a,a))"));
        // invertible by enumeration of the two-sided inverse
        let inv = d.invert_cell(&a).unwrap();
        let round = d.vcomp(&a, &inv).unwrap();
        assert_eq!(round, d.id_cell_on_pro(&round.top.clone()));
    }

    #[test]
    fn seeded_enumeration_is_reproducible() {
        let d = span();
        let x = obj(&d, &["a", "b"]);
        let cfg = ProbeConfig::seeded(2, 99, 12);
        let p1 = d.enumerate_proarrows(&x, &x, &cfg);
        let p2 = d.enumerate_proarrows(&x, &x, &cfg);
        assert_eq!(p1, p2);
        assert!(!p1.is_empty());
    }
}
