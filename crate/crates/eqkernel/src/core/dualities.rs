//! Derived double categories: reversal, opposites, finite powers and the
//! transpose of a strict double category.
//!
//! Derived instances keep the payloads of the base instance untouched and
//! translate boundaries. Reversal swaps the source and target of
//! proarrows (mirroring cells left–right), so conjoints in the base become
//! companions in the reverse. Opposites reverse arrows and the internal
//! direction of cells. Powers act componentwise; the empty power is the
//! terminal double category. The transpose exchanges arrows and proarrows
//! and is only defined for strict instances.

use super::{
    boundary_error, Arrow, Cell, CellBoundary, CoreError, CoreResult, DoubleCategoryOps, Instance,
    InstanceId, ObjectRef, Payload, Proarrow,
};
use crate::instances::probe::ProbeConfig;
use std::any::Any;
use std::sync::Arc;

// ---------------------------------------------------------------------------
// reversal

pub struct ReverseInstance {
    id: InstanceId,
    base: Instance,
}

/// The reverse double category: proarrows swap source and target, cells
/// mirror left–right, arrows are unchanged.
pub fn reverse_instance(base: &Instance) -> Instance {
    Arc::new(ReverseInstance {
        id: InstanceId::new(&format!("rev({})", base.id())),
        base: base.clone(),
    })
}

impl ReverseInstance {
    pub fn base(&self) -> &Instance {
        &self.base
    }

    fn obj_to_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.base.id().clone(), x.payload.clone())
    }

    fn obj_from_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.id.clone(), x.payload.clone())
    }

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

    pub fn pro_to_base(&self, m: &Proarrow) -> Proarrow {
        Proarrow::new(
            self.obj_to_base(&m.tgt),
            self.obj_to_base(&m.src),
            m.payload.clone(),
        )
    }

    pub fn pro_from_base(&self, m: &Proarrow) -> Proarrow {
        Proarrow::new(
            self.obj_from_base(&m.tgt),
            self.obj_from_base(&m.src),
            m.payload.clone(),
        )
    }

    pub fn cell_to_base(&self, c: &Cell) -> Cell {
        Cell::new(
            self.pro_to_base(&c.top),
            self.pro_to_base(&c.bottom),
            self.arr_to_base(&c.right),
            self.arr_to_base(&c.left),
            c.payload.clone(),
        )
    }

    pub fn cell_from_base(&self, c: &Cell) -> Cell {
        Cell::new(
            self.pro_from_base(&c.top),
            self.pro_from_base(&c.bottom),
            self.arr_from_base(&c.right),
            self.arr_from_base(&c.left),
            c.payload.clone(),
        )
    }
}

impl DoubleCategoryOps for ReverseInstance {
    fn id(&self) -> &InstanceId {
        &self.id
    }

    fn is_strict(&self) -> bool {
        self.base.is_strict()
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
        if m.tgt != n.src {
            return Err(boundary_error("compose_pro", "m.tgt != n.src"));
        }
        let r = self
            .base
            .compose_pro(&self.pro_to_base(n), &self.pro_to_base(m))?;
        Ok(self.pro_from_base(&r))
    }

    fn id_pro(&self, x: &ObjectRef) -> Proarrow {
        self.pro_from_base(&self.base.id_pro(&self.obj_to_base(x)))
    }

    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        let r = self
            .base
            .vcomp(&self.cell_to_base(a), &self.cell_to_base(b))?;
        Ok(self.cell_from_base(&r))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.right != b.left {
            return Err(boundary_error("hcomp", "a.right != b.left"));
        }
        let r = self
            .base
            .hcomp(&self.cell_to_base(b), &self.cell_to_base(a))?;
        Ok(self.cell_from_base(&r))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        self.cell_from_base(&self.base.id_cell_on_arrow(&self.arr_to_base(f)))
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.id_cell_on_pro(&self.pro_to_base(m)))
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let r = self.base.associator_inv(
            &self.pro_to_base(p),
            &self.pro_to_base(n),
            &self.pro_to_base(m),
        )?;
        Ok(self.cell_from_base(&r))
    }

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let r = self.base.associator(
            &self.pro_to_base(p),
            &self.pro_to_base(n),
            &self.pro_to_base(m),
        )?;
        Ok(self.cell_from_base(&r))
    }

    fn lunitor(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.runitor(&self.pro_to_base(m)))
    }

    fn lunitor_inv(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.runitor_inv(&self.pro_to_base(m)))
    }

    fn runitor(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.lunitor(&self.pro_to_base(m)))
    }

    fn runitor_inv(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.lunitor_inv(&self.pro_to_base(m)))
    }

    fn check_cell(&self, c: &Cell) -> bool {
        c.boundary_ok() && self.base.check_cell(&self.cell_to_base(c))
    }

    fn invert_cell(&self, c: &Cell) -> Option<Cell> {
        let r = self.base.invert_cell(&self.cell_to_base(c))?;
        Some(self.cell_from_base(&r))
    }

    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow> {
        let r = self.base.invert_arrow(&self.arr_to_base(f))?;
        Some(self.arr_from_base(&r))
    }

    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let (p, unit, counit) = self.base.conjoint_data(&self.arr_to_base(f))?;
        Some((
            self.pro_from_base(&p),
            self.cell_from_base(&unit),
            self.cell_from_base(&counit),
        ))
    }

    fn conjoint_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let (p, unit, counit) = self.base.companion_data(&self.arr_to_base(f))?;
        Some((
            self.pro_from_base(&p),
            self.cell_from_base(&unit),
            self.cell_from_base(&counit),
        ))
    }

    fn perturb_pro(&self, m: &Proarrow, seed: u64) -> Option<(Proarrow, Cell, Cell)> {
        let (p, iso, iso_inv) = self.base.perturb_pro(&self.pro_to_base(m), seed)?;
        Some((
            self.pro_from_base(&p),
            self.cell_from_base(&iso),
            self.cell_from_base(&iso_inv),
        ))
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
            .map(|f| self.arr_from_base(f))
            .collect()
    }

    fn enumerate_proarrows(
        &self,
        x: &ObjectRef,
        y: &ObjectRef,
        cfg: &ProbeConfig,
    ) -> Vec<Proarrow> {
        self.base
            .enumerate_proarrows(&self.obj_to_base(y), &self.obj_to_base(x), cfg)
            .iter()
            .map(|m| self.pro_from_base(m))
            .collect()
    }

    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell> {
        self.base
            .enumerate_cells(&CellBoundary {
                top: self.pro_to_base(&b.top),
                bottom: self.pro_to_base(&b.bottom),
                left: self.arr_to_base(&b.right),
                right: self.arr_to_base(&b.left),
            })
            .iter()
            .map(|c| self.cell_from_base(c))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// opposite

pub struct OppositeInstance {
    id: InstanceId,
    base: Instance,
}

/// The opposite double category: arrows and the internal direction of
/// cells are reversed.
pub fn opposite_instance(base: &Instance) -> Instance {
    Arc::new(OppositeInstance {
        id: InstanceId::new(&format!("op({})", base.id())),
        base: base.clone(),
    })
}

impl OppositeInstance {
    pub fn base(&self) -> &Instance {
        &self.base
    }

    fn obj_to_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.base.id().clone(), x.payload.clone())
    }

    fn obj_from_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.id.clone(), x.payload.clone())
    }

    pub fn arr_to_base(&self, f: &Arrow) -> Arrow {
        Arrow::new(
            self.obj_to_base(&f.tgt),
            self.obj_to_base(&f.src),
            f.payload.clone(),
        )
    }

    pub fn arr_from_base(&self, f: &Arrow) -> Arrow {
        Arrow::new(
            self.obj_from_base(&f.tgt),
            self.obj_from_base(&f.src),
            f.payload.clone(),
        )
    }

    pub fn pro_to_base(&self, m: &Proarrow) -> Proarrow {
        Proarrow::new(
            self.obj_to_base(&m.src),
            self.obj_to_base(&m.tgt),
            m.payload.clone(),
        )
    }

    pub fn pro_from_base(&self, m: &Proarrow) -> Proarrow {
        Proarrow::new(
            self.obj_from_base(&m.src),
            self.obj_from_base(&m.tgt),
            m.payload.clone(),
        )
    }

    pub fn cell_to_base(&self, c: &Cell) -> Cell {
        Cell::new(
            self.pro_to_base(&c.bottom),
            self.pro_to_base(&c.top),
            self.arr_to_base(&c.left),
            self.arr_to_base(&c.right),
            c.payload.clone(),
        )
    }

    pub fn cell_from_base(&self, c: &Cell) -> Cell {
        Cell::new(
            self.pro_from_base(&c.bottom),
            self.pro_from_base(&c.top),
            self.arr_from_base(&c.left),
            self.arr_from_base(&c.right),
            c.payload.clone(),
        )
    }
}

impl DoubleCategoryOps for OppositeInstance {
    fn id(&self) -> &InstanceId {
        &self.id
    }

    fn is_strict(&self) -> bool {
        self.base.is_strict()
    }

    fn as_any(&self) -> &dyn Any {
        self
    }

    fn compose_arrows(&self, f: &Arrow, g: &Arrow) -> CoreResult<Arrow> {
        if f.tgt != g.src {
            return Err(boundary_error("compose_arrows", "f.tgt != g.src"));
        }
        let r = self
            .base
            .compose_arrows(&self.arr_to_base(g), &self.arr_to_base(f))?;
        Ok(self.arr_from_base(&r))
    }

    fn id_arrow(&self, x: &ObjectRef) -> Arrow {
        self.arr_from_base(&self.base.id_arrow(&self.obj_to_base(x)))
    }

    fn compose_pro(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Proarrow> {
        let r = self
            .base
            .compose_pro(&self.pro_to_base(m), &self.pro_to_base(n))?;
        Ok(self.pro_from_base(&r))
    }

    fn id_pro(&self, x: &ObjectRef) -> Proarrow {
        self.pro_from_base(&self.base.id_pro(&self.obj_to_base(x)))
    }

    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.bottom != b.top {
            return Err(boundary_error("vcomp", "a.bottom != b.top"));
        }
        let r = self
            .base
            .vcomp(&self.cell_to_base(b), &self.cell_to_base(a))?;
        Ok(self.cell_from_base(&r))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        let r = self
            .base
            .hcomp(&self.cell_to_base(a), &self.cell_to_base(b))?;
        Ok(self.cell_from_base(&r))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        self.cell_from_base(&self.base.id_cell_on_arrow(&self.arr_to_base(f)))
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.id_cell_on_pro(&self.pro_to_base(m)))
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let r = self.base.associator_inv(
            &self.pro_to_base(m),
            &self.pro_to_base(n),
            &self.pro_to_base(p),
        )?;
        Ok(self.cell_from_base(&r))
    }

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let r = self.base.associator(
            &self.pro_to_base(m),
            &self.pro_to_base(n),
            &self.pro_to_base(p),
        )?;
        Ok(self.cell_from_base(&r))
    }

    fn lunitor(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.lunitor_inv(&self.pro_to_base(m)))
    }

    fn lunitor_inv(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.lunitor(&self.pro_to_base(m)))
    }

    fn runitor(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.runitor_inv(&self.pro_to_base(m)))
    }

    fn runitor_inv(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.runitor(&self.pro_to_base(m)))
    }

    fn check_cell(&self, c: &Cell) -> bool {
        c.boundary_ok() && self.base.check_cell(&self.cell_to_base(c))
    }

    fn invert_cell(&self, c: &Cell) -> Option<Cell> {
        let r = self.base.invert_cell(&self.cell_to_base(c))?;
        Some(self.cell_from_base(&r))
    }

    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow> {
        let r = self.base.invert_arrow(&self.arr_to_base(f))?;
        Some(self.arr_from_base(&r))
    }

    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let (p, unit, counit) = self.base.conjoint_data(&self.arr_to_base(f))?;
        Some((
            self.pro_from_base(&p),
            self.cell_from_base(&counit),
            self.cell_from_base(&unit),
        ))
    }

    fn conjoint_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let (p, unit, counit) = self.base.companion_data(&self.arr_to_base(f))?;
        Some((
            self.pro_from_base(&p),
            self.cell_from_base(&counit),
            self.cell_from_base(&unit),
        ))
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
            .enumerate_arrows(&self.obj_to_base(y), &self.obj_to_base(x))
            .iter()
            .map(|f| self.arr_from_base(f))
            .collect()
    }

    fn enumerate_proarrows(
        &self,
        x: &ObjectRef,
        y: &ObjectRef,
        cfg: &ProbeConfig,
    ) -> Vec<Proarrow> {
        self.base
            .enumerate_proarrows(&self.obj_to_base(x), &self.obj_to_base(y), cfg)
            .iter()
            .map(|m| self.pro_from_base(m))
            .collect()
    }

    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell> {
        self.base
            .enumerate_cells(&CellBoundary {
                top: self.pro_to_base(&b.bottom),
                bottom: self.pro_to_base(&b.top),
                left: self.arr_to_base(&b.left),
                right: self.arr_to_base(&b.right),
            })
            .iter()
            .map(|c| self.cell_from_base(c))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// finite powers

pub struct PowerInstance {
    id: InstanceId,
    base: Instance,
    n: usize,
}

/// The componentwise power `D^n`. The empty power is the terminal double
/// category.
pub fn power_instance(base: &Instance, n: usize) -> Instance {
    Arc::new(PowerInstance {
        id: InstanceId::new(&format!("pow({},{})", base.id(), n)),
        base: base.clone(),
        n,
    })
}

impl PowerInstance {
    pub fn base(&self) -> &Instance {
        &self.base
    }

    pub fn width(&self) -> usize {
        self.n
    }

    fn parts<'a>(&self, p: &'a Payload) -> &'a [Payload] {
        p.as_tuple().expect("power instance payload")
    }

    pub fn obj_component(&self, x: &ObjectRef, i: usize) -> ObjectRef {
        ObjectRef::new(self.base.id().clone(), self.parts(&x.payload)[i].clone())
    }

    pub fn arr_component(&self, f: &Arrow, i: usize) -> Arrow {
        Arrow::new(
            self.obj_component(&f.src, i),
            self.obj_component(&f.tgt, i),
            self.parts(&f.payload)[i].clone(),
        )
    }

    pub fn pro_component(&self, m: &Proarrow, i: usize) -> Proarrow {
        Proarrow::new(
            self.obj_component(&m.src, i),
            self.obj_component(&m.tgt, i),
            self.parts(&m.payload)[i].clone(),
        )
    }

    pub fn cell_component(&self, c: &Cell, i: usize) -> Cell {
        Cell::new(
            self.pro_component(&c.top, i),
            self.pro_component(&c.bottom, i),
            self.arr_component(&c.left, i),
            self.arr_component(&c.right, i),
            self.parts(&c.payload)[i].clone(),
        )
    }

    pub fn obj_from_components(&self, xs: &[ObjectRef]) -> ObjectRef {
        assert_eq!(xs.len(), self.n);
        ObjectRef::new(
            self.id.clone(),
            Payload::Tuple(xs.iter().map(|x| x.payload.clone()).collect()),
        )
    }

    pub fn arr_from_components(&self, fs: &[Arrow]) -> Arrow {
        assert_eq!(fs.len(), self.n);
        Arrow::new(
            self.obj_from_components(&fs.iter().map(|f| f.src.clone()).collect::<Vec<_>>()),
            self.obj_from_components(&fs.iter().map(|f| f.tgt.clone()).collect::<Vec<_>>()),
            Payload::Tuple(fs.iter().map(|f| f.payload.clone()).collect()),
        )
    }

    pub fn pro_from_components(&self, ms: &[Proarrow]) -> Proarrow {
        assert_eq!(ms.len(), self.n);
        Proarrow::new(
            self.obj_from_components(&ms.iter().map(|m| m.src.clone()).collect::<Vec<_>>()),
            self.obj_from_components(&ms.iter().map(|m| m.tgt.clone()).collect::<Vec<_>>()),
            Payload::Tuple(ms.iter().map(|m| m.payload.clone()).collect()),
        )
    }

    pub fn cell_from_components(&self, cs: &[Cell]) -> Cell {
        assert_eq!(cs.len(), self.n);
        Cell::new(
            self.pro_from_components(&cs.iter().map(|c| c.top.clone()).collect::<Vec<_>>()),
            self.pro_from_components(&cs.iter().map(|c| c.bottom.clone()).collect::<Vec<_>>()),
            self.arr_from_components(&cs.iter().map(|c| c.left.clone()).collect::<Vec<_>>()),
            self.arr_from_components(&cs.iter().map(|c| c.right.clone()).collect::<Vec<_>>()),
            Payload::Tuple(cs.iter().map(|c| c.payload.clone()).collect()),
        )
    }

    fn map_components<T, U>(
        &self,
        split: impl Fn(usize) -> T,
        op: impl Fn(T) -> CoreResult<U>,
    ) -> CoreResult<Vec<U>> {
        (0..self.n).map(|i| op(split(i))).collect()
    }
}

impl DoubleCategoryOps for PowerInstance {
    fn id(&self) -> &InstanceId {
        &self.id
    }

    fn is_strict(&self) -> bool {
        self.n == 0 || self.base.is_strict()
    }

    fn as_any(&self) -> &dyn Any {
        self
    }

    fn compose_arrows(&self, f: &Arrow, g: &Arrow) -> CoreResult<Arrow> {
        if f.tgt != g.src {
            return Err(boundary_error("compose_arrows", "f.tgt != g.src"));
        }
        let parts = self.map_components(
            |i| (self.arr_component(f, i), self.arr_component(g, i)),
            |(a, b)| self.base.compose_arrows(&a, &b),
        )?;
        Ok(self.arr_from_components(&parts))
    }

    fn id_arrow(&self, x: &ObjectRef) -> Arrow {
        let parts: Vec<Arrow> = (0..self.n)
            .map(|i| self.base.id_arrow(&self.obj_component(x, i)))
            .collect();
        self.arr_from_components(&parts)
    }

    fn compose_pro(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Proarrow> {
        if m.tgt != n.src {
            return Err(boundary_error("compose_pro", "m.tgt != n.src"));
        }
        let parts = self.map_components(
            |i| (self.pro_component(m, i), self.pro_component(n, i)),
            |(a, b)| self.base.compose_pro(&a, &b),
        )?;
        Ok(self.pro_from_components(&parts))
    }

    fn id_pro(&self, x: &ObjectRef) -> Proarrow {
        let parts: Vec<Proarrow> = (0..self.n)
            .map(|i| self.base.id_pro(&self.obj_component(x, i)))
            .collect();
        self.pro_from_components(&parts)
    }

    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.bottom != b.top {
            return Err(boundary_error("vcomp", "a.bottom != b.top"));
        }
        let parts = self.map_components(
            |i| (self.cell_component(a, i), self.cell_component(b, i)),
            |(x, y)| self.base.vcomp(&x, &y),
        )?;
        Ok(self.cell_from_components(&parts))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        if a.right != b.left {
            return Err(boundary_error("hcomp", "a.right != b.left"));
        }
        let parts = self.map_components(
            |i| (self.cell_component(a, i), self.cell_component(b, i)),
            |(x, y)| self.base.hcomp(&x, &y),
        )?;
        Ok(self.cell_from_components(&parts))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        let parts: Vec<Cell> = (0..self.n)
            .map(|i| self.base.id_cell_on_arrow(&self.arr_component(f, i)))
            .collect();
        self.cell_from_components(&parts)
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        let parts: Vec<Cell> = (0..self.n)
            .map(|i| self.base.id_cell_on_pro(&self.pro_component(m, i)))
            .collect();
        self.cell_from_components(&parts)
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let parts = self.map_components(
            |i| {
                (
                    self.pro_component(m, i),
                    self.pro_component(n, i),
                    self.pro_component(p, i),
                )
            },
            |(a, b, c)| self.base.associator(&a, &b, &c),
        )?;
        Ok(self.cell_from_components(&parts))
    }

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        let parts = self.map_components(
            |i| {
                (
                    self.pro_component(m, i),
                    self.pro_component(n, i),
                    self.pro_component(p, i),
                )
            },
            |(a, b, c)| self.base.associator_inv(&a, &b, &c),
        )?;
        Ok(self.cell_from_components(&parts))
    }

    fn lunitor(&self, m: &Proarrow) -> Cell {
        let parts: Vec<Cell> = (0..self.n)
            .map(|i| self.base.lunitor(&self.pro_component(m, i)))
            .collect();
        self.cell_from_components(&parts)
    }

    fn lunitor_inv(&self, m: &Proarrow) -> Cell {
        let parts: Vec<Cell> = (0..self.n)
            .map(|i| self.base.lunitor_inv(&self.pro_component(m, i)))
            .collect();
        self.cell_from_components(&parts)
    }

    fn runitor(&self, m: &Proarrow) -> Cell {
        let parts: Vec<Cell> = (0..self.n)
            .map(|i| self.base.runitor(&self.pro_component(m, i)))
            .collect();
        self.cell_from_components(&parts)
    }

    fn runitor_inv(&self, m: &Proarrow) -> Cell {
        let parts: Vec<Cell> = (0..self.n)
            .map(|i| self.base.runitor_inv(&self.pro_component(m, i)))
            .collect();
        self.cell_from_components(&parts)
    }

    fn check_cell(&self, c: &Cell) -> bool {
        if !c.boundary_ok() {
            return false;
        }
        match c.payload.as_tuple() {
            Some(ps) if ps.len() == self.n => {
                (0..self.n).all(|i| self.base.check_cell(&self.cell_component(c, i)))
            }
            _ => false,
        }
    }

    fn invert_cell(&self, c: &Cell) -> Option<Cell> {
        let parts: Option<Vec<Cell>> = (0..self.n)
            .map(|i| self.base.invert_cell(&self.cell_component(c, i)))
            .collect();
        Some(self.cell_from_components(&parts?))
    }

    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow> {
        let parts: Option<Vec<Arrow>> = (0..self.n)
            .map(|i| self.base.invert_arrow(&self.arr_component(f, i)))
            .collect();
        Some(self.arr_from_components(&parts?))
    }

    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let mut pros = Vec::new();
        let mut units = Vec::new();
        let mut counits = Vec::new();
        for i in 0..self.n {
            let (p, u, c) = self.base.companion_data(&self.arr_component(f, i))?;
            pros.push(p);
            units.push(u);
            counits.push(c);
        }
        Some((
            self.pro_from_components(&pros),
            self.cell_from_components(&units),
            self.cell_from_components(&counits),
        ))
    }

    fn conjoint_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        let mut pros = Vec::new();
        let mut units = Vec::new();
        let mut counits = Vec::new();
        for i in 0..self.n {
            let (p, u, c) = self.base.conjoint_data(&self.arr_component(f, i))?;
            pros.push(p);
            units.push(u);
            counits.push(c);
        }
        Some((
            self.pro_from_components(&pros),
            self.cell_from_components(&units),
            self.cell_from_components(&counits),
        ))
    }

    fn perturb_pro(&self, m: &Proarrow, seed: u64) -> Option<(Proarrow, Cell, Cell)> {
        let mut pros = Vec::new();
        let mut isos = Vec::new();
        let mut invs = Vec::new();
        for i in 0..self.n {
            let (p, iso, inv) = self
                .base
                .perturb_pro(&self.pro_component(m, i), seed.wrapping_add(i as u64))?;
            pros.push(p);
            isos.push(iso);
            invs.push(inv);
        }
        Some((
            self.pro_from_components(&pros),
            self.cell_from_components(&isos),
            self.cell_from_components(&invs),
        ))
    }

    fn enumerate_objects(&self, cfg: &ProbeConfig) -> Vec<ObjectRef> {
        let base_objs = self.base.enumerate_objects(cfg);
        tuples(&base_objs, self.n)
            .into_iter()
            .map(|xs| self.obj_from_components(&xs))
            .collect()
    }

    fn enumerate_arrows(&self, x: &ObjectRef, y: &ObjectRef) -> Vec<Arrow> {
        let per: Vec<Vec<Arrow>> = (0..self.n)
            .map(|i| {
                self.base
                    .enumerate_arrows(&self.obj_component(x, i), &self.obj_component(y, i))
            })
            .collect();
        cross(&per)
            .into_iter()
            .map(|fs| self.arr_from_components(&fs))
            .collect()
    }

    fn enumerate_proarrows(
        &self,
        x: &ObjectRef,
        y: &ObjectRef,
        cfg: &ProbeConfig,
    ) -> Vec<Proarrow> {
        let per: Vec<Vec<Proarrow>> = (0..self.n)
            .map(|i| {
                self.base.enumerate_proarrows(
                    &self.obj_component(x, i),
                    &self.obj_component(y, i),
                    cfg,
                )
            })
            .collect();
        cross(&per)
            .into_iter()
            .map(|ms| self.pro_from_components(&ms))
            .collect()
    }

    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell> {
        let per: Vec<Vec<Cell>> = (0..self.n)
            .map(|i| {
                self.base.enumerate_cells(&CellBoundary {
                    top: self.pro_component(&b.top, i),
                    bottom: self.pro_component(&b.bottom, i),
                    left: self.arr_component(&b.left, i),
                    right: self.arr_component(&b.right, i),
                })
            })
            .collect();
        cross(&per)
            .into_iter()
            .map(|cs| self.cell_from_components(&cs))
            .collect()
    }
}

fn tuples<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * items.len());
        for prefix in &out {
            for item in items {
                let mut p = prefix.clone();
                p.push(item.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn cross<T: Clone>(per: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for options in per {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for item in options {
                let mut p = prefix.clone();
                p.push(item.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

// ---------------------------------------------------------------------------
// transpose of a strict double category

pub struct TransposeInstance {
    id: InstanceId,
    base: Instance,
    enum_cfg: ProbeConfig,
}

/// The transpose of a strict double category: arrows and proarrows are
/// exchanged and cells are transposed. Fails with `NotStrict` when the
/// base has nontrivial coherence cells.
pub fn transpose_strict_instance(base: &Instance) -> CoreResult<Instance> {
    transpose_strict_instance_with(base, ProbeConfig::default())
}

pub fn transpose_strict_instance_with(
    base: &Instance,
    enum_cfg: ProbeConfig,
) -> CoreResult<Instance> {
    if !base.is_strict() {
        return Err(CoreError::NotStrict(format!(
            "transpose of {} requires a strict instance",
            base.id()
        )));
    }
    Ok(Arc::new(TransposeInstance {
        id: InstanceId::new(&format!("transpose({})", base.id())),
        base: base.clone(),
        enum_cfg,
    }))
}

impl TransposeInstance {
    pub fn base(&self) -> &Instance {
        &self.base
    }

    fn obj_to_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.base.id().clone(), x.payload.clone())
    }

    fn obj_from_base(&self, x: &ObjectRef) -> ObjectRef {
        ObjectRef::new(self.id.clone(), x.payload.clone())
    }

    /// A transpose arrow is a base proarrow.
    pub fn arr_to_base_pro(&self, f: &Arrow) -> Proarrow {
        Proarrow::new(
            self.obj_to_base(&f.src),
            self.obj_to_base(&f.tgt),
            f.payload.clone(),
        )
    }

    pub fn arr_from_base_pro(&self, m: &Proarrow) -> Arrow {
        Arrow::new(
            self.obj_from_base(&m.src),
            self.obj_from_base(&m.tgt),
            m.payload.clone(),
        )
    }

    /// A transpose proarrow is a base arrow.
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

    pub fn cell_to_base(&self, c: &Cell) -> Cell {
        Cell::new(
            self.arr_to_base_pro(&c.left),
            self.arr_to_base_pro(&c.right),
            self.pro_to_base_arr(&c.top),
            self.pro_to_base_arr(&c.bottom),
            c.payload.clone(),
        )
    }

    pub fn cell_from_base(&self, c: &Cell) -> Cell {
        Cell::new(
            self.pro_from_base_arr(&c.left),
            self.pro_from_base_arr(&c.right),
            self.arr_from_base_pro(&c.top),
            self.arr_from_base_pro(&c.bottom),
            c.payload.clone(),
        )
    }
}

impl DoubleCategoryOps for TransposeInstance {
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
            .compose_pro(&self.arr_to_base_pro(f), &self.arr_to_base_pro(g))?;
        Ok(self.arr_from_base_pro(&r))
    }

    fn id_arrow(&self, x: &ObjectRef) -> Arrow {
        self.arr_from_base_pro(&self.base.id_pro(&self.obj_to_base(x)))
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
        let r = self
            .base
            .hcomp(&self.cell_to_base(a), &self.cell_to_base(b))?;
        Ok(self.cell_from_base(&r))
    }

    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell> {
        let r = self
            .base
            .vcomp(&self.cell_to_base(a), &self.cell_to_base(b))?;
        Ok(self.cell_from_base(&r))
    }

    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell {
        self.cell_from_base(&self.base.id_cell_on_pro(&self.arr_to_base_pro(f)))
    }

    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell {
        self.cell_from_base(&self.base.id_cell_on_arrow(&self.pro_to_base_arr(m)))
    }

    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell> {
        // strict by construction
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
        c.boundary_ok() && self.base.check_cell(&self.cell_to_base(c))
    }

    fn invert_cell(&self, _c: &Cell) -> Option<Cell> {
        // would need invertible base proarrows; not used by the calculus
        None
    }

    fn invert_arrow(&self, _f: &Arrow) -> Option<Arrow> {
        None
    }

    fn companion_data(&self, _f: &Arrow) -> Option<(Proarrow, Cell, Cell)> {
        None
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
            .enumerate_proarrows(&self.obj_to_base(x), &self.obj_to_base(y), &self.enum_cfg)
            .iter()
            .map(|m| self.arr_from_base_pro(m))
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
        self.base
            .enumerate_cells(&CellBoundary {
                top: self.arr_to_base_pro(&b.left),
                bottom: self.arr_to_base_pro(&b.right),
                left: self.pro_to_base_arr(&b.top),
                right: self.pro_to_base_arr(&b.bottom),
            })
            .iter()
            .map(|c| self.cell_from_base(c))
            .collect()
    }
}
