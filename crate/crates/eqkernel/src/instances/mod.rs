//! Concrete computable double categories and probe-universe enumerators.

pub mod finset;
pub mod mat;
pub mod probe;
pub mod semiring;
pub mod span;

pub use mat::{make_mat_instance, make_rel_instance, MatInstance, QMatrix};
pub use probe::{ProbeConfig, ProbeMode, ProbeUniverse};
pub use semiring::{OrderedSemiring, SValue, Trop};
pub use span::{make_span_instance, SpanData, SpanInstance};

use crate::core::{Arrow, Cell, Instance, ObjectRef, Payload, Proarrow};

/// Retags a value into another instance with the same payload semantics.
/// Meaningful only between instances that interpret payloads identically,
/// such as `rel` and `mat(bool)`.
pub fn transport_object(x: &ObjectRef, to: &Instance) -> ObjectRef {
    ObjectRef::new(to.id().clone(), x.payload.clone())
}

pub fn transport_arrow(f: &Arrow, to: &Instance) -> Arrow {
    Arrow::new(
        transport_object(&f.src, to),
        transport_object(&f.tgt, to),
        f.payload.clone(),
    )
}

pub fn transport_pro(m: &Proarrow, to: &Instance) -> Proarrow {
    Proarrow::new(
        transport_object(&m.src, to),
        transport_object(&m.tgt, to),
        m.payload.clone(),
    )
}

pub fn transport_cell(c: &Cell, to: &Instance) -> Cell {
    Cell::new(
        transport_pro(&c.top, to),
        transport_pro(&c.bottom, to),
        transport_arrow(&c.left, to),
        transport_arrow(&c.right, to),
        c.payload.clone(),
    )
}

/// Convenience constructors for objects of the finite-set based instances.
pub fn finset_object(d: &Instance, labels: &[&str]) -> ObjectRef {
    ObjectRef::new(
        d.id().clone(),
        Payload::Set(finset::FinSet::new(labels.to_vec())),
    )
}
