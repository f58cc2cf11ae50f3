//! The strict double category of companion-admitting arrows.
//!
//! `Comp(D)` has the objects of `D`; its arrows are the arrows of `D` that
//! have companions, its proarrows are arbitrary arrows of `D`, and a cell
//! bounded by `(top h, bottom k, left f, right g)` is a cell of `D` from
//! `id` to `id` bounded by the composite arrows `h · g` and `f · k`. Every
//! arrow is its own canonical companion, with the external identity giving
//! both binding cells. The counit functor evaluates squares of the
//! transpose of `Comp(D)` back in `D` by sliding.

use super::{companion_of, slide_general};
use crate::core::dualities::TransposeInstance;
use crate::core::{
    boundary_error, vcomp_list, Arrow, Cell, CellBoundary, CoreError, CoreResult,
    DoubleCategoryOps, Instance, InstanceId, ObjectRef, Proarrow,
};
use crate::instances::probe::ProbeConfig;
use std::any::Any;
use std::sync::Arc;

pub struct CompInstance {
    id: InstanceId,
    base: Instance,
}

/// Builds `Comp(D)`. Requires decidable companion existence, which the
/// shipped instances provide through their chosen companion data.
pub fn comp_instance(base: &Instance) -> Instance {
    Arc::new(CompInstance {
        id: InstanceId::new(&format!("comp({})", base.id())),
        base: base.clone(),
    })
}

impl CompInstance {
    pub fn base(&self) -> &Instance {
        &self.base
    }

    fn obj_to_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.base.id().clone(), x.payload.clone())
    }

    fn obj_from_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.id.clone(), x.payload.clone())
    }

    /// Arrows of Comp(D) are arrows of D (with companions).
    pub fn arr_to_base(&self, f: &Arrow) -> Arrow {
        Arrow::new(
            self.obj_to_base(&f.src),
            self.obj_to_base(&f.tgt),
            f.payload.clone(),
        )
    }

    pub fn arr_from_base(&self, f: &Arrow) -> Arrow {
        Arrow::new(
            self.obj_from_base(&f.src),
            self.obj_from_base(&f.tgt),
            f.payload.clone(),
        )
    }

    /// Proarrows of Comp(D) are arbitrary arrows of D.
    pub fn pro_to_base_arr(&self, m: &Proarrow) -> Arrow {
        Arrow::new(
            self.obj_to_base(&m.src),
            self.obj_to_base(&m.tgt),
            m.payload.clone(),
        )
    }

    pub fn pro_from_base_arr(&self, f: &Arrow) -> Proarrow {
        Proarrow::new(
            self.obj_from_base(&f.src),
            self.obj_from_base(&f.tgt),
            f.payload.clone(),
        )
    }

    /// The special cell in D underlying a Comp(D) cell: from `id` to `id`,
    /// bounded on the left by `top · right` and on the right by
    /// `left · bottom`.
    pub fn cell_to_base(&self, c: &Cell) -> CoreResult<Cell> {
        let h = self.pro_to_base_arr(&c.top);
        let k = self.pro_to_base_arr(&c.bottom);
        let f = self.arr_to_base(&c.left);
        let g = self.arr_to_base(&c.right);
        let left = self.base.compose_arrows(&h, &g)?;
        let right = self.base.compose_arrows(&f, &k)?;
        Ok(Cell::new(
            self.base.id_pro(&h.src),
            self.base.id_pro(&g.tgt),
            left,
            right,
            c.payload.clone(),
        ))
    }

    fn cell_from_base(&self, b: &CellBoundary, base_payload: crate::core::Payload) -> Cell {
        Cell::new(
            b.top.clone(),
            b.bottom.clone(),
            b.left.clone(),
            b.right.clone(),
            base_payload,
        )
    }

    /// Sequential composite of two special cells `u => v` and `v => w`
    /// (both from `id` to `id`), via horizontal pasting conjugated by
    /// unitors.
    fn seq(&self, b1: &Cell, b2: &Cell) -> CoreResult<Cell> {
        let x = &b1.top.src;
        let z = &b1.bottom.src;
        let mid = self.base.hcomp(b1, b2)?;
        vcomp_list(
            &*self.base,
            &[
                self.base.lunitor_inv(&self.base.id_pro(x)),
                mid,
                self.base.lunitor(&self.base.id_pro(z)),
            ],
        )
    }
}

impl DoubleCategoryOps for CompInstance {
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
        let r = self
            .base
            .compose_arrows(&self.arr_to_base(f), &self.arr_to_base(g))?;
        Ok(self.arr_from_base(&r))
    }

    fn id_arrow(&self, x: &ObjectRef) -> Arrow {
        self.arr_from_base(&self.base.id_arrow(&self.obj_to_base(x)))
    }

    fn compose_pro(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Proarrow> {
        let r = self
            .base
            .compose_arrows(&self.pro_to_base_arr(m), &self.pro_to_base_arr(n))?;
        Ok(self.pro_from_base_arr(&r))
    }

    fn id_pro(&self, x: &ObjectRef) -> Proarrow {
        self.pro_from_base_arr(&self.base.id_arrow(&self.obj_to_base(x)))
    }

    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.bottom != b.top {
            return Err(boundary_error("vcomp", "a.bottom != b.top"));
        }
        let a0 = self.cell_to_base(a)?;
        let b0 = self.cell_to_base(b)?;
        // right-whisker a by b.right, left-whisker b by a.left, then chain
        let gp = self.arr_to_base(&b.right);
        let fl = self.arr_to_base(&a.left);
        let w1 = self.base.vcomp(&a0, &self.base.id_cell_on_arrow(&gp))?;
        let w2 = self.base.vcomp(&self.base.id_cell_on_arrow(&fl), &b0)?;
        let base = self.seq(&w1, &w2)?;
        let boundary = CellBoundary {
            top: a.top.clone(),
            bottom: b.bottom.clone(),
            left: self.compose_arrows(&a.left, &b.left)?,
            right: self.compose_arrows(&a.right, &b.right)?,
        };
        Ok(self.cell_from_base(&boundary, base.payload))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.right != b.left {
            return Err(boundary_error("hcomp", "a.right != b.left"));
        }
        let a0 = self.cell_to_base(a)?;
        let b0 = self.cell_to_base(b)?;
        let h = self.pro_to_base_arr(&a.top);
        let kp = self.pro_to_base_arr(&b.bottom);
        // left-whisker b by the top proarrow h, right-whisker a by k'
        let w1 = self.base.vcomp(&self.base.id_cell_on_arrow(&h), &b0)?;
        let w2 = self.base.vcomp(&a0, &self.base.id_cell_on_arrow(&kp))?;
        let base = self.seq(&w1, &w2)?;
        let boundary = CellBoundary {
            top: self.compose_pro(&a.top, &b.top)?,
            bottom: self.compose_pro(&a.bottom, &b.bottom)?,
            left: a.left.clone(),
            right: b.right.clone(),
        };
        Ok(self.cell_from_base(&boundary, base.payload))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        let base = self.base.id_cell_on_arrow(&self.arr_to_base(f));
        Cell::new(
            self.id_pro(&f.src),
            self.id_pro(&f.tgt),
            f.clone(),
            f.clone(),
            base.payload,
        )
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        let base = self.base.id_cell_on_arrow(&self.pro_to_base_arr(m));
        Cell::new(
            m.clone(),
            m.clone(),
            self.id_arrow(&m.src),
            self.id_arrow(&m.tgt),
            base.payload,
        )
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let mn = self.compose_pro(m, n)?;
        let mnp = self.compose_pro(&mn, p)?;
        Ok(self.id_cell_on_pro(&mnp))
    }

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        self.associator(m, n, p)
    }

    fn lunitor(&self, m: &Proarrow) -> Cell {
        self.id_cell_on_pro(m)
    }

    fn lunitor_inv(&self, m: &Proarrow) -> Cell {
        self.id_cell_on_pro(m)
    }

    fn runitor(&self, m: &Proarrow) -> Cell {
        self.id_cell_on_pro(m)
    }

    fn runitor_inv(&self, m: &Proarrow) -> Cell {
        self.id_cell_on_pro(m)
    }

    fn check_cell(&self, c: &Cell) -> bool {
        c.boundary_ok()
            && match self.cell_to_base(c) {
                Ok(b) => self.base.check_cell(&b),
                Err(_) => false,
            }
    }

    fn invert_cell(&self, _c: &Cell) -> Option<Cell> {
        None
    }

    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow> {
        let inv = self.base.invert_arrow(&self.arr_to_base(f))?;
        self.base.companion_data(&inv)?;
        Some(self.arr_from_base(&inv))
    }

    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        // every arrow is its own companion, bound by external identities
        let base_f = self.arr_to_base(f);
        self.base.companion_data(&base_f)?;
        let idf = self.base.id_cell_on_arrow(&base_f);
        let pro = self.pro_from_base_arr(&base_f);
        let unit = Cell::new(
            self.id_pro(&f.src),
            pro.clone(),
            self.id_arrow(&f.src),
            f.clone(),
            idf.payload.clone(),
        );
        let counit = Cell::new(
            pro.clone(),
            self.id_pro(&f.tgt),
            f.clone(),
            self.id_arrow(&f.tgt),
            idf.payload,
        );
        Some((pro, unit, counit))
    }

    fn conjoint_data(&self, _f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        None
    }

    fn enumerate_objects(&self, cfg: &ProbeConfig) -> Vec<ObjectRef> {
        self.base
            .enumerate_objects(cfg)
            .iter()
            .map(|x| self.obj_from_base(x))
            .collect()
    }

    fn enumerate_arrows(&self, x: &ObjectRef, y: &ObjectRef) -> Vec<Arrow> {
        self.base
            .enumerate_arrows(&self.obj_to_base(x), &self.obj_to_base(y))
            .iter()
            .filter(|f| self.base.companion_data(f).is_some())
            .map(|f| self.arr_from_base(f))
            .collect()
    }

    fn enumerate_proarrows(
        &self,
        x: &ObjectRef,
        y: &ObjectRef,
        _cfg: &ProbeConfig,
    ) -> Vec<Proarrow> {
        self.base
            .enumerate_arrows(&self.obj_to_base(x), &self.obj_to_base(y))
            .iter()
            .map(|f| self.pro_from_base_arr(f))
            .collect()
    }

    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell> {
        let h = self.pro_to_base_arr(&b.top);
        let k = self.pro_to_base_arr(&b.bottom);
        let f = self.arr_to_base(&b.left);
        let g = self.arr_to_base(&b.right);
        let left = match self.base.compose_arrows(&h, &g) {
            Ok(a) => a,
            Err(_) => return Vec::new(),
        };
        let right = match self.base.compose_arrows(&f, &k) {
            Ok(a) => a,
            Err(_) => return Vec::new(),
        };
        self.base
            .enumerate_cells(&CellBoundary {
                top: self.base.id_pro(&h.src),
                bottom: self.base.id_pro(&g.tgt),
                left,
                right,
            })
            .into_iter()
            .map(|c| self.cell_from_base(b, c.payload))
            .collect()
    }
}

/// Evaluates the counit of the transposition–companions biadjunction on a
/// square of `transpose(comp(D))`: the result is the cell of `D` obtained
/// by sliding, bounded by companions of the square's top and bottom
/// proarrows.
pub fn counit_functor_eval(d: &Instance, square: &Cell) -> CoreResult<Cell> {
    // decode the square through the transpose and Comp layers
    let expected = format!("transpose(comp({}))", d.id());
    if square.instance().as_str() != expected {
        return Err(CoreError::InstanceMismatch(format!(
            "expected a square of {expected}, got {}",
            square.instance()
        )));
    }
    let to_base_arrow = |src: &ObjectRef, tgt: &ObjectRef, payload: &crate::core::Payload| {
        Arrow::new(
            ObjectRef::new(d.id().clone(), src.payload.clone()),
            ObjectRef::new(d.id().clone(), tgt.payload.clone()),
            payload.clone(),
        )
    };
    // transpose proarrows are Comp arrows (companion-admitting D-arrows)
    let p = to_base_arrow(&square.top.src, &square.top.tgt, &square.top.payload);
    let q = to_base_arrow(
        &square.bottom.src,
        &square.bottom.tgt,
        &square.bottom.payload,
    );
    // transpose arrows are Comp proarrows (arbitrary D-arrows)
    let a = to_base_arrow(&square.left.src, &square.left.tgt, &square.left.payload);
    let b = to_base_arrow(&square.right.src, &square.right.tgt, &square.right.payload);
    let alpha = Cell::new(
        d.id_pro(&p.src),
        d.id_pro(&q.tgt),
        d.compose_arrows(&a, &q)?,
        d.compose_arrows(&p, &b)?,
        square.payload.clone(),
    );
    let p_pair = companion_of(d, &p)?;
    let q_pair = companion_of(d, &q)?;
    let slid = slide_general(d, &alpha, &a, &q_pair, &p_pair, &b)?;
    // normalize id ⊙ p_! and q_! ⊙ id away
    vcomp_list(
        &**d,
        &[
            d.lunitor_inv(&p_pair.pro),
            slid,
            d.runitor(&q_pair.pro),
        ],
    )
}

/// Convenience: the transpose of `Comp(D)`, always defined since `Comp(D)`
/// is strict.
pub fn transpose_comp(d: &Instance) -> Instance {
    let comp = comp_instance(d);
    crate::core::dualities::transpose_strict_instance(&comp).expect("Comp(D) is strict")
}

/// Downcast helper used by tests exercising the Comp layer directly.
pub fn as_comp(d: &Instance) -> Option<&CompInstance> {
    d.as_any().downcast_ref::<CompInstance>()
}

/// Downcast helper for transpose instances.
pub fn as_transpose(d: &Instance) -> Option<&TransposeInstance> {
    d.as_any().downcast_ref::<TransposeInstance>()
}
