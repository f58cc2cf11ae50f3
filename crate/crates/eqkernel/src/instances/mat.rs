//! Matrices over an ordered commutative semiring, as a strict double
//! category. Objects are finite sets, arrows are functions, proarrows are
//! matrices and a cell `m => n` along `(f, g)` exists exactly when
//! `m[a,b] ≤ n[f a, g b]` for all entries, so the instance is locally
//! posetal. Relations are the Boolean case, exposed as the named instance
//! `rel` with matrices serialized as sorted pair lists.

use crate::core::{
    boundary_error, Arrow, Cell, CellBoundary, CoreResult, DoubleCategoryOps, Instance,
    InstanceId, ObjectRef, Payload, Proarrow,
};
use crate::instances::finset::{all_functions, FinFunction, FinSet};
use crate::instances::probe::{ProbeConfig, ProbeMode, SplitMix};
use crate::instances::semiring::{OrderedSemiring, SValue};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::any::Any;
use std::fmt;
use std::sync::Arc;

/// A dense row-major matrix of semiring values, indexed by the labels of
/// its source and target sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    pub src: FinSet,
    pub tgt: FinSet,
    entries: Vec<SValue>,
}

impl QMatrix {
    pub fn new(src: FinSet, tgt: FinSet, entries: Vec<SValue>) -> Option<Self> {
        if entries.len() != src.len() * tgt.len() {
            return None;
        }
        Some(QMatrix { src, tgt, entries })
    }

    pub fn constant(src: FinSet, tgt: FinSet, v: SValue) -> Self {
        let n = src.len() * tgt.len();
        QMatrix {
            src,
            tgt,
            entries: vec![v; n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> SValue {
        self.entries[i * self.tgt.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SValue) {
        self.entries[i * self.tgt.len() + j] = v;
    }

    pub fn get_labels(&self, a: &str, b: &str) -> Option<SValue> {
        Some(self.get(self.src.index_of(a)?, self.tgt.index_of(b)?))
    }

    pub fn entries(&self) -> &[SValue] {
        &self.entries
    }

    /// Boolean matrix from a list of related label pairs.
    pub fn from_pairs<'a, I>(src: FinSet, tgt: FinSet, pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut m = QMatrix::constant(src, tgt, SValue::B(false));
        for (a, b) in pairs {
            let i = m.src.index_of(a)?;
            let j = m.tgt.index_of(b)?;
            m.set(i, j, SValue::B(true));
        }
        Some(m)
    }

    /// The related pairs of a Boolean matrix, sorted.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, a) in self.src.labels().iter().enumerate() {
            for (j, b) in self.tgt.labels().iter().enumerate() {
                if self.get(i, j) == SValue::B(true) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    fn is_boolean(&self) -> bool {
        self.entries.iter().all(|v| matches!(v, SValue::B(_)))
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_boolean() {
            let pairs: Vec<String> = self
                .to_pairs()
                .into_iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect();
            write!(f, "{{{}}}", pairs.join(","))
        } else {
            write!(f, "[")?;
            for i in 0..self.src.len() {
                if i > 0 {
                    write!(f, "; ")?;
                }
                for j in 0..self.tgt.len() {
                    if j > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{:?}", self.get(i, j))?;
                }
            }
            write!(f, "]")
        }
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Boolean matrices serialize as sorted pair lists, the canonical
        // certificate form for relations; other carriers as dense rows.
        if self.is_boolean() {
            let mut st = serializer.serialize_struct("Relation", 3)?;
            st.serialize_field("src", self.src.labels())?;
            st.serialize_field("tgt", self.tgt.labels())?;
            st.serialize_field("pairs", &self.to_pairs())?;
            st.end()
        } else {
            let rows: Vec<Vec<SValue>> = (0..self.src.len())
                .map(|i| (0..self.tgt.len()).map(|j| self.get(i, j)).collect())
                .collect();
            let mut st = serializer.serialize_struct("Matrix", 3)?;
            st.serialize_field("src", self.src.labels())?;
            st.serialize_field("tgt", self.tgt.labels())?;
            st.serialize_field("rows", &rows)?;
            st.end()
        }
    }
}

/// The double category of matrices over one semiring.
pub struct MatInstance {
    id: InstanceId,
    pub ring: OrderedSemiring,
}

/// Relations on finite sets: Boolean matrices under the name `rel`.
pub fn make_rel_instance() -> Instance {
    Arc::new(MatInstance {
        id: InstanceId::new("rel"),
        ring: OrderedSemiring::Bool,
    })
}

/// Matrices over the given semiring; fails when the sampled semiring laws
/// do not hold.
pub fn make_mat_instance(ring: OrderedSemiring) -> CoreResult<Instance> {
    ring.validate()?;
    Ok(Arc::new(MatInstance {
        id: InstanceId::new(&format!("mat({})", ring.name())),
        ring,
    }))
}

impl MatInstance {
    fn obj(&self, s: FinSet) -> ObjectRef {
        ObjectRef::new(self.id.clone(), Payload::Set(s))
    }

    fn set_of<'a>(&self, x: &'a ObjectRef) -> &'a FinSet {
        x.payload.as_set().expect("matrix instance object payload")
    }

    fn mat_of<'a>(&self, m: &'a Proarrow) -> &'a QMatrix {
        m.payload.as_mat().expect("matrix instance proarrow payload")
    }

    fn fun_of<'a>(&self, f: &'a Arrow) -> &'a FinFunction {
        f.payload.as_map().expect("matrix instance arrow payload")
    }

    pub fn pro(&self, m: QMatrix) -> Proarrow {
        Proarrow::new(
            self.obj(m.src.clone()),
            self.obj(m.tgt.clone()),
            Payload::Mat(m),
        )
    }

    pub fn arr(&self, f: FinFunction) -> Arrow {
        Arrow::new(
            self.obj(f.src.clone()),
            self.obj(f.tgt.clone()),
            Payload::Map(f),
        )
    }

    /// The unique cell on a boundary, when the posetal criterion holds.
    fn cell_if_leq(&self, b: &CellBoundary) -> Option<Cell> {
        let m = self.mat_of(&b.top);
        let n = self.mat_of(&b.bottom);
        let f = self.fun_of(&b.left);
        let g = self.fun_of(&b.right);
        for i in 0..m.src.len() {
            for j in 0..m.tgt.len() {
                let lhs = m.get(i, j);
                let rhs = n.get(f.apply_index(i), g.apply_index(j));
                if !self.ring.leq(lhs, rhs) {
                    return None;
                }
            }
        }
        Some(Cell::new(
            b.top.clone(),
            b.bottom.clone(),
            b.left.clone(),
            b.right.clone(),
            Payload::Posetal,
        ))
    }

    fn graph_matrix(&self, f: &FinFunction) -> QMatrix {
        let mut m = QMatrix::constant(f.src.clone(), f.tgt.clone(), self.ring.zero());
        for i in 0..f.src.len() {
            m.set(i, f.apply_index(i), self.ring.one());
        }
        m
    }

    fn identity_cell(&self, m: &Proarrow) -> Cell {
        Cell::new(
            m.clone(),
            m.clone(),
            self.id_arrow(&m.src),
            self.id_arrow(&m.tgt),
            Payload::Posetal,
        )
    }
}

impl DoubleCategoryOps for MatInstance {
    fn id(&self) -> &InstanceId {
        &self.id
    }

    fn is_strict(&self) -> bool {
        true
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
        let a = self.mat_of(m);
        let b = self.mat_of(n);
        let mut out = QMatrix::constant(a.src.clone(), b.tgt.clone(), self.ring.zero());
        for i in 0..a.src.len() {
            for j in 0..b.tgt.len() {
                let mut acc = self.ring.zero();
                for k in 0..a.tgt.len() {
                    acc = self.ring.add(acc, self.ring.mul(a.get(i, k), b.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(self.pro(out))
    }

    fn id_pro(&self, x: &ObjectRef) -> Proarrow {
        self.pro(self.graph_matrix(&FinFunction::identity(self.set_of(x))))
    }

    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.bottom != b.top {
            return Err(boundary_error("vcomp", "a.bottom != b.top"));
        }
        let left = self.compose_arrows(&a.left, &b.left)?;
        let right = self.compose_arrows(&a.right, &b.right)?;
        self.cell_if_leq(&CellBoundary {
            top: a.top.clone(),
            bottom: b.bottom.clone(),
            left,
            right,
        })
        .ok_or_else(|| boundary_error("vcomp", "posetal criterion failed on composite"))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.right != b.left {
            return Err(boundary_error("hcomp", "a.right != b.left"));
        }
        let top = self.compose_pro(&a.top, &b.top)?;
        let bottom = self.compose_pro(&a.bottom, &b.bottom)?;
        self.cell_if_leq(&CellBoundary {
            top,
            bottom,
            left: a.left.clone(),
            right: b.right.clone(),
        })
        .ok_or_else(|| boundary_error("hcomp", "posetal criterion failed on composite"))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        Cell::new(
            self.id_pro(&f.src),
            self.id_pro(&f.tgt),
            f.clone(),
            f.clone(),
            Payload::Posetal,
        )
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        self.identity_cell(m)
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let mn = self.compose_pro(m, n)?;
        let mnp = self.compose_pro(&mn, p)?;
        Ok(self.identity_cell(&mnp))
    }

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        self.associator(m, n, p)
    }

    fn lunitor(&self, m: &Proarrow) -> Cell {
        self.identity_cell(m)
    }

    fn lunitor_inv(&self, m: &Proarrow) -> Cell {
        self.identity_cell(m)
    }

    fn runitor(&self, m: &Proarrow) -> Cell {
        self.identity_cell(m)
    }

    fn runitor_inv(&self, m: &Proarrow) -> Cell {
        self.identity_cell(m)
    }

    fn check_cell(&self, c: &Cell) -> bool {
        c.boundary_ok()
            && c.payload == Payload::Posetal
            && self
                .cell_if_leq(&CellBoundary {
                    top: c.top.clone(),
                    bottom: c.bottom.clone(),
                    left: c.left.clone(),
                    right: c.right.clone(),
                })
                .is_some()
    }

    fn invert_cell(&self, c: &Cell) -> Option<Cell> {
        let left_inv = self.invert_arrow(&c.left)?;
        let right_inv = self.invert_arrow(&c.right)?;
        self.cell_if_leq(&CellBoundary {
            top: c.bottom.clone(),
            bottom: c.top.clone(),
            left: left_inv,
            right: right_inv,
        })
    }

    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow> {
        self.fun_of(f).inverse().map(|g| self.arr(g))
    }

    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let fun = self.fun_of(f);
        let graph = self.pro(self.graph_matrix(fun));
        let unit = Cell::new(
            self.id_pro(&f.src),
            graph.clone(),
            self.id_arrow(&f.src),
            f.clone(),
            Payload::Posetal,
        );
        let counit = Cell::new(
            graph.clone(),
            self.id_pro(&f.tgt),
            f.clone(),
            self.id_arrow(&f.tgt),
            Payload::Posetal,
        );
        Some((graph, unit, counit))
    }

    fn conjoint_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let fun = self.fun_of(f);
        // converse of the graph: entry one at (f a, a)
        let mut m = QMatrix::constant(fun.tgt.clone(), fun.src.clone(), self.ring.zero());
        for i in 0..fun.src.len() {
            m.set(fun.apply_index(i), i, self.ring.one());
        }
        let conj = self.pro(m);
        let unit = Cell::new(
            self.id_pro(&f.src),
            conj.clone(),
            f.clone(),
            self.id_arrow(&f.src),
            Payload::Posetal,
        );
        let counit = Cell::new(
            conj.clone(),
            self.id_pro(&f.tgt),
            self.id_arrow(&f.tgt),
            f.clone(),
            Payload::Posetal,
        );
        Some((conj, unit, counit))
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
        let xs = self.set_of(x);
        let ys = self.set_of(y);
        let sample = self.ring.sample();
        let cells = xs.len() * ys.len();
        let exhaustive_count = (sample.len() as f64).powi(cells as i32);
        if cfg.mode == ProbeMode::Exhaustive && exhaustive_count <= 4096.0 {
            // all matrices with entries from the carrier sample
            let mut out = Vec::new();
            let mut idx = vec![0usize; cells];
            loop {
                let entries: Vec<SValue> = idx.iter().map(|&i| sample[i]).collect();
                out.push(self.pro(QMatrix::new(xs.clone(), ys.clone(), entries).unwrap()));
                let mut k = 0;
                loop {
                    if k == cells {
                        return out;
                    }
                    idx[k] += 1;
                    if idx[k] < sample.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
            }
        } else {
            let mut rng = SplitMix::new(
                cfg.seed ^ (xs.len() as u64) << 8 ^ (ys.len() as u64) << 16,
            );
            let mut out = Vec::new();
            for _ in 0..cfg.budget {
                let entries: Vec<SValue> =
                    (0..cells).map(|_| sample[rng.below(sample.len())]).collect();
                let p = self.pro(QMatrix::new(xs.clone(), ys.clone(), entries).unwrap());
                if !out.contains(&p) {
                    out.push(p);
                }
            }
            out
        }
    }

    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell> {
        self.cell_if_leq(b).into_iter().collect()
    }
}

/// The canonical probe objects: one set per size, ∅ and the singleton
/// included.
pub fn canonical_objects(max_size: usize) -> Vec<FinSet> {
    let mut out = vec![FinSet::empty()];
    if max_size >= 1 {
        out.push(FinSet::singleton());
    }
    let alphabet = ["a", "b", "c", "d", "e", "f"];
    for n in 2..=max_size.min(alphabet.len()) {
        out.push(FinSet::new(alphabet[..n].to_vec()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel() -> Instance {
        make_rel_instance()
    }

    fn obj(d: &Instance, labels: &[&str]) -> ObjectRef {
        ObjectRef::new(d.id().clone(), Payload::Set(FinSet::new(labels.to_vec())))
    }

    #[test]
    fn one_step_relational_composite() {
        let d = rel();
        let x = obj(&d, &["a"]);
        let y = obj(&d, &["0"]);
        let z = obj(&d, &["p"]);
        let m = Proarrow::new(
            x.clone(),
            y.clone(),
            Payload::Mat(
                QMatrix::from_pairs(FinSet::new(["a"]), FinSet::new(["0"]), [("a", "0")]).unwrap(),
            ),
        );
        let n = Proarrow::new(
            y,
            z.clone(),
            Payload::Mat(
                QMatrix::from_pairs(FinSet::new(["0"]), FinSet::new(["p"]), [("0", "p")]).unwrap(),
            ),
        );
        let mn = d.compose_pro(&m, &n).unwrap();
        assert_eq!(
            mn.payload.as_mat().unwrap().to_pairs(),
            vec![("a".to_string(), "p".to_string())]
        );
    }

    #[test]
    fn unit_proarrow_is_diagonal_and_strict() {
        let d = rel();
        let x = obj(&d, &["a", "b"]);
        let idx = d.id_pro(&x);
        assert_eq!(
            idx.payload.as_mat().unwrap().to_pairs(),
            vec![
                ("a".to_string(), "a".to_string()),
                ("b".to_string(), "b".to_string())
            ]
        );
        let y = obj(&d, &["0"]);
        let m = Proarrow::new(
            x.clone(),
            y,
            Payload::Mat(
                QMatrix::from_pairs(
                    FinSet::new(["a", "b"]),
                    FinSet::new(["0"]),
                    [("a", "0")],
                )
                .unwrap(),
            ),
        );
        assert_eq!(d.compose_pro(&idx, &m).unwrap(), m);
        assert_eq!(d.compose_pro(&m, &d.id_pro(&m.tgt)).unwrap(), m);
    }

    #[test]
    fn arrow_composition_tables() {
        let d = rel();
        let x = obj(&d, &["a", "b"]);
        let y = obj(&d, &["0", "1"]);
        let z = obj(&d, &["•"]);
        let f = Arrow::new(
            x.clone(),
            y.clone(),
            Payload::Map(
                FinFunction::from_pairs(
                    FinSet::new(["a", "b"]),
                    FinSet::new(["0", "1"]),
                    [("a", "0"), ("b", "1")],
                )
                .unwrap(),
            ),
        );
        let g = Arrow::new(
            y,
            z.clone(),
            Payload::Map(
                FinFunction::from_pairs(
                    FinSet::new(["0", "1"]),
                    FinSet::singleton(),
                    [("0", "•"), ("1", "•")],
                )
                .unwrap(),
            ),
        );
        let fg = d.compose_arrows(&f, &g).unwrap();
        let fun = fg.payload.as_map().unwrap();
        assert_eq!(fun.apply("a"), Some("•"));
        assert_eq!(fun.apply("b"), Some("•"));
        // identity laws
        assert_eq!(d.compose_arrows(&d.id_arrow(&x), &f).unwrap(), f);
        assert_eq!(d.compose_arrows(&f, &d.id_arrow(&f.tgt)).unwrap(), f);
    }

    #[test]
    fn posetal_cell_criterion() {
        let d = rel();
        let x = obj(&d, &["a"]);
        let y = obj(&d, &["0"]);
        let xp = obj(&d, &["a'"]);
        let yp = obj(&d, &["0'"]);
        let m = Proarrow::new(
            x.clone(),
            y.clone(),
            Payload::Mat(
                QMatrix::from_pairs(FinSet::new(["a"]), FinSet::new(["0"]), [("a", "0")]).unwrap(),
            ),
        );
        let n = Proarrow::new(
            xp.clone(),
            yp.clone(),
            Payload::Mat(
                QMatrix::from_pairs(FinSet::new(["a'"]), FinSet::new(["0'"]), [("a'", "0'")])
                    .unwrap(),
            ),
        );
        let f = Arrow::new(
            x,
            xp,
            Payload::Map(
                FinFunction::from_pairs(FinSet::new(["a"]), FinSet::new(["a'"]), [("a", "a'")])
                    .unwrap(),
            ),
        );
        let g = Arrow::new(
            y,
            yp,
            Payload::Map(
                FinFunction::from_pairs(FinSet::new(["0"]), FinSet::new(["0'"]), [("0", "0'")])
                    .unwrap(),
            ),
        );
        let cells = d.enumerate_cells(&CellBoundary {
            top: m,
            bottom: n,
            left: f,
            right: g,
        });
        assert_eq!(cells.len(), 1);
    }

    #[test]
    fn counting_relations() {
        let d = rel();
        let x = obj(&d, &["a", "b"]);
        let y = obj(&d, &["0"]);
        let cfg = ProbeConfig::exhaustive(2);
        assert_eq!(d.enumerate_proarrows(&x, &y, &cfg).len(), 4);
        let z = obj(&d, &["0", "1"]);
        assert_eq!(d.enumerate_proarrows(&x, &z, &cfg).len(), 16);
        assert_eq!(d.enumerate_arrows(&x, &y).len(), 1);
    }
}
