//! eqkernel: a computational engine for pseudo double categories.
//!
//! The crate implements three concrete double categories — relations on
//! finite sets, spans of finite sets, and matrices over ordered commutative
//! semirings — together with the calculus that transposes structure from
//! the strict direction to the weak one: companions and conjoints, cell
//! sliding, protransformations between double functors, transposition of
//! double adjunctions into lax adjunctions, and the extraction of cartesian
//! and direct-sum structure on the underlying bicategories. Every law is
//! verified by enumeration over finite probe universes, producing reports
//! with witnesses or counterexamples.

pub mod companions;
pub mod functors;
pub mod core;
pub mod instances;

pub use crate::companions::{CompanionPair, ConjointPair, LawReport, LawStatus};
pub use crate::core::{
    Arrow, Cell, CellBoundary, CoreError, CoreResult, DoubleCategoryOps, Instance, InstanceId,
    ObjectRef, Payload, Proarrow,
};
