//! Data model and operation interface for pseudo double categories.
//!
//! A double category is presented here as a bundle of operations
//! ([`DoubleCategoryOps`]) acting on four sorts of values: objects, arrows
//! (the strict direction), proarrows (the weak direction) and cells
//! (squares). Payloads are instance-specific but drawn from one closed
//! universe ([`Payload`]), so equality is decidable everywhere and derived
//! instances (reversal, opposites, powers, transposes) can share data
//! without translation layers.

mod ops;
pub mod dualities;

pub use ops::{
    boundary_error, hcomp_list, same_instance, vcomp_list, CellBoundary, DoubleCategoryOps,
    Instance,
};

use crate::instances::finset::{FinFunction, FinSet};
use crate::instances::mat::QMatrix;
use crate::instances::span::SpanData;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Identifier of a double-category instance.
///
/// Every value carries the id of the instance it belongs to, so that
/// cross-instance composition is rejected early instead of producing
/// garbage.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InstanceId(Arc<str>);

impl InstanceId {
    pub fn new(name: &str) -> Self {
        InstanceId(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Instance-specific datum attached to an object, arrow, proarrow or cell.
///
/// The universe is closed: the shipped instances (relations, matrices,
/// spans) and every derived instance built from them draw their payloads
/// from these variants. `Tuple` is used componentwise by power instances,
/// including the empty power (the terminal double category).
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Payload {
    /// A finite set (objects of the shipped instances).
    Set(FinSet),
    /// A total function between finite sets (arrows; span cell witnesses).
    Map(FinFunction),
    /// A semiring-valued matrix (proarrows of relation/matrix instances).
    Mat(QMatrix),
    /// A span of finite sets (proarrows of the span instance).
    Span(SpanData),
    /// The unique witness of a cell in a locally posetal instance.
    Posetal,
    /// Componentwise data of a power instance.
    Tuple(Vec<Payload>),
}

impl fmt::Debug for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Set(s) => write!(f, "{s:?}"),
            Payload::Map(m) => write!(f, "{m:?}"),
            Payload::Mat(m) => write!(f, "{m:?}"),
            Payload::Span(s) => write!(f, "{s:?}"),
            Payload::Posetal => write!(f, "·"),
            Payload::Tuple(ps) => {
                write!(f, "⟨")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p:?}")?;
                }
                write!(f, "⟩")
            }
        }
    }
}

impl Payload {
    pub fn as_set(&self) -> Option<&FinSet> {
        match self {
            Payload::Set(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_map(&self) -> Option<&FinFunction> {
        match self {
            Payload::Map(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_mat(&self) -> Option<&QMatrix> {
        match self {
            Payload::Mat(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_span(&self) -> Option<&SpanData> {
        match self {
            Payload::Span(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Payload]> {
        match self {
            Payload::Tuple(ps) => Some(ps),
            _ => None,
        }
    }
}

/// An object of a double category, tagged with its instance.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct ObjectRef {
    pub instance: InstanceId,
    pub payload: Payload,
}

impl ObjectRef {
    pub fn new(instance: InstanceId, payload: Payload) -> Self {
        ObjectRef { instance, payload }
    }
}

/// An arrow `f: x -> y` in the strict direction.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct Arrow {
    pub src: ObjectRef,
    pub tgt: ObjectRef,
    pub payload: Payload,
}

impl Arrow {
    pub fn new(src: ObjectRef, tgt: ObjectRef, payload: Payload) -> Self {
        Arrow { src, tgt, payload }
    }

    pub fn instance(&self) -> &InstanceId {
        &self.src.instance
    }
}

/// A proarrow `m: x -|-> y` in the weak direction.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct Proarrow {
    pub src: ObjectRef,
    pub tgt: ObjectRef,
    pub payload: Payload,
}

impl Proarrow {
    pub fn new(src: ObjectRef, tgt: ObjectRef, payload: Payload) -> Self {
        Proarrow { src, tgt, payload }
    }

    pub fn instance(&self) -> &InstanceId {
        &self.src.instance
    }
}

/// A cell: a square bounded by proarrows on top and bottom and arrows on
/// the left and right.
///
/// Boundary compatibility means `left.src = top.src`, `right.src =
/// top.tgt`, `left.tgt = bottom.src` and `right.tgt = bottom.tgt`. A cell
/// is globular when both boundary arrows are identities.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct Cell {
    pub top: Proarrow,
    pub bottom: Proarrow,
    pub left: Arrow,
    pub right: Arrow,
    pub payload: Payload,
}

impl Cell {
    pub fn new(top: Proarrow, bottom: Proarrow, left: Arrow, right: Arrow, payload: Payload) -> Self {
        Cell {
            top,
            bottom,
            left,
            right,
            payload,
        }
    }

    pub fn instance(&self) -> &InstanceId {
        &self.top.src.instance
    }

    /// Boundary compatibility of the four sides (ignores the payload).
    pub fn boundary_ok(&self) -> bool {
        self.left.src == self.top.src
            && self.right.src == self.top.tgt
            && self.left.tgt == self.bottom.src
            && self.right.tgt == self.bottom.tgt
    }
}

/// Errors shared by all core and instance operations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("instance mismatch: {0}")]
    InstanceMismatch(String),
    #[error("instance is not strict: {0}")]
    NotStrict(String),
    #[error("no companion: {0}")]
    NoCompanion(String),
    #[error("no conjoint: {0}")]
    NoConjoint(String),
    #[error("invalid semiring: {0}")]
    InvalidSemiring(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("protransformation variants do not compose: {0}")]
    VariantMismatch(String),
    #[error("functor is not pseudo: {0}")]
    NotPseudo(String),
    #[error("unsupported operation for this instance: {0}")]
    Unsupported(String),
    #[error("triangle identity failed: {0}")]
    TriangleFailure(String),
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
}

pub type CoreResult<T> = Result<T, CoreError>;
