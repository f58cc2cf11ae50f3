//! The operation suite every double-category instance supplies.

use super::{Arrow, Cell, CoreError, CoreResult, InstanceId, ObjectRef, Proarrow};
use crate::instances::probe::ProbeConfig;
use std::any::Any;
use std::sync::Arc;

/// Shared handle to an instance's operation suite.
pub type Instance = Arc<dyn DoubleCategoryOps>;

/// Boundary of a cell, used when enumerating all cells filling a square.
#[derive(Clone, Debug)]
pub struct CellBoundary {
    pub top: Proarrow,
    pub bottom: Proarrow,
    pub left: Arrow,
    pub right: Arrow,
}

/// The operations of one concrete double category.
///
/// All operations are pure; values are immutable and may be shared between
/// threads freely. Composition in the weak direction (`compose_pro`,
/// `hcomp`) is associative and unital only up to the coherence cells
/// returned by `associator` and the unitors; when `is_strict` returns true
/// those coherence cells are identity cells and composition is exact.
pub trait DoubleCategoryOps: Send + Sync {
    fn id(&self) -> &InstanceId;

    /// Whether external composition is strictly associative and unital.
    fn is_strict(&self) -> bool;

    fn as_any(&self) -> &dyn Any;

    // -- strict-direction composition ------------------------------------

    fn compose_arrows(&self, f: &Arrow, g: &Arrow) -> CoreResult<Arrow>;

    fn id_arrow(&self, x: &ObjectRef) -> Arrow;

    // -- weak-direction composition --------------------------------------

    fn compose_pro(&self, m: &Proarrow, n: &Proarrow) -> CoreResult<Proarrow>;

    fn id_pro(&self, x: &ObjectRef) -> Proarrow;

    /// Internal (tight-direction) composite of vertically stacked cells.
    fn vcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell>;

    /// External composite of horizontally adjacent cells.
    fn hcomp(&self, a: &Cell, b: &Cell) -> CoreResult<Cell>;

    /// External identity cell on an arrow: `id_pro(src) => id_pro(tgt)`.
    fn id_cell_on_arrow(&self, f: &Arrow) -> Cell;

    /// Internal identity cell on a proarrow.
    fn id_cell_on_pro(&self, m: &Proarrow) -> Cell;

    // -- coherence cells ---------------------------------------------------

    /// Invertible globular cell `(m ⊙ n) ⊙ p => m ⊙ (n ⊙ p)`.
    fn associator(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell>;

    fn associator_inv(&self, m: &Proarrow, n: &Proarrow, p: &Proarrow) -> CoreResult<Cell>;

    /// Invertible globular cell `id ⊙ m => m`.
    fn lunitor(&self, m: &Proarrow) -> Cell;

    fn lunitor_inv(&self, m: &Proarrow) -> Cell;

    /// Invertible globular cell `m ⊙ id => m`.
    fn runitor(&self, m: &Proarrow) -> Cell;

    fn runitor_inv(&self, m: &Proarrow) -> Cell;

    // -- instance-specific structure ---------------------------------------

    /// Validity of a candidate cell, payload included.
    fn check_cell(&self, c: &Cell) -> bool;

    /// Direct inversion criterion: a two-sided inverse of the cell, if one
    /// exists. Boundary arrows must be invertible for a non-globular cell.
    fn invert_cell(&self, c: &Cell) -> Option<Cell>;

    /// Inverse of an arrow, when the arrow is invertible.
    fn invert_arrow(&self, f: &Arrow) -> Option<Arrow>;

    /// The instance's chosen companion of an arrow: the proarrow together
    /// with the unit and counit binding cells. `None` when the arrow has no
    /// companion in this instance.
    fn companion_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)>;

    /// The instance's chosen conjoint, dually.
    fn conjoint_data(&self, f: &Arrow) -> Option<(Proarrow, Cell, Cell)>;

    /// Relabels a proarrow into an isomorphic copy, returning the copy with
    /// the canonical iso cells `m => m'` and `m' => m`. Used to perturb
    /// companion choices; `None` when the instance has no nontrivial
    /// relabelings (locally posetal instances).
    fn perturb_pro(&self, _m: &Proarrow, _seed: u64) -> Option<(Proarrow, Cell, Cell)> {
        None
    }

    // -- enumeration --------------------------------------------------------

    fn enumerate_objects(&self, cfg: &ProbeConfig) -> Vec<ObjectRef>;

    fn enumerate_arrows(&self, x: &ObjectRef, y: &ObjectRef) -> Vec<Arrow>;

    fn enumerate_proarrows(&self, x: &ObjectRef, y: &ObjectRef, cfg: &ProbeConfig)
        -> Vec<Proarrow>;

    /// All cells filling the given boundary. Locally posetal instances
    /// return at most one cell.
    fn enumerate_cells(&self, b: &CellBoundary) -> Vec<Cell>;
}

/// Instance-id equality of two values' owners.
pub fn same_instance(a: &InstanceId, b: &InstanceId) -> bool {
    a == b
}

pub fn boundary_error(op: &str, detail: &str) -> CoreError {
    CoreError::Boundary(format!("{op}: {detail}"))
}

/// Left-to-right fold of `vcomp` over a nonempty list of cells.
pub fn vcomp_list(ops: &dyn DoubleCategoryOps, cells: &[Cell]) -> CoreResult<Cell> {
    let mut it = cells.iter();
    let first = it
        .next()
        .ok_or_else(|| boundary_error("vcomp_list", "empty list"))?;
    let mut acc = first.clone();
    for c in it {
        acc = ops.vcomp(&acc, c)?;
    }
    Ok(acc)
}

/// Left-to-right fold of `hcomp` over a nonempty list of cells. The result
/// has left-bracketed top and bottom composites.
pub fn hcomp_list(ops: &dyn DoubleCategoryOps, cells: &[Cell]) -> CoreResult<Cell> {
    let mut it = cells.iter();
    let first = it
        .next()
        .ok_or_else(|| boundary_error("hcomp_list", "empty list"))?;
    let mut acc = first.clone();
    for c in it {
        acc = ops.hcomp(&acc, c)?;
    }
    Ok(acc)
}
