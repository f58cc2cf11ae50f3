//! Ordered commutative semirings for the matrix instances.
//!
//! Matrix instances are locally posetal: a cell exists when every entry of
//! the top matrix is ≤ the corresponding entry of the reindexed bottom
//! matrix. For external composition of cells to be well defined, addition
//! must be the join of the order (so the carrier is a commutative
//! quantale on the sampled fragment); the sampled law check enforces this
//! along with the usual semiring laws.

use crate::core::{CoreError, CoreResult};
use serde::Serialize;
use std::fmt;

/// A value in a semiring carrier.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SValue {
    /// Boolean carrier.
    B(bool),
    /// Natural numbers (max-times).
    N(u64),
    /// Tropical carrier: naturals plus infinity (min-plus).
    T(Trop),
    /// Index into the carrier sample of a custom table-based semiring.
    C(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Trop {
    Fin(u64),
    Inf,
}

impl fmt::Debug for SValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SValue::B(b) => write!(f, "{}", if *b { 1 } else { 0 }),
            SValue::N(n) => write!(f, "{n}"),
            SValue::T(Trop::Fin(n)) => write!(f, "{n}"),
            SValue::T(Trop::Inf) => write!(f, "∞"),
            SValue::C(i) => write!(f, "#{i}"),
        }
    }
}

/// A table-based finite semiring fragment, for user-defined carriers.
#[derive(Clone, PartialEq, Eq)]
pub struct CustomSemiring {
    pub name: String,
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
}

/// An ordered commutative semiring with decidable operations.
#[derive(Clone)]
pub enum OrderedSemiring {
    /// Booleans with ∨, ∧ and false ≤ true. Relations are matrices over
    /// this carrier.
    Bool,
    /// Naturals up to `cap` with max as addition and saturating product,
    /// ordered numerically.
    NatMaxTimes { cap: u64 },
    /// Naturals plus infinity with min as addition and saturating sum as
    /// product. The semiring order is the reversed numeric order, making
    /// ∞ the bottom and min the join.
    MinPlus { cap: u64 },
    /// Custom finite fragment; validated by the sampled law check.
    Custom(std::sync::Arc<CustomSemiring>),
}

impl fmt::Debug for OrderedSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl OrderedSemiring {
    pub fn name(&self) -> &str {
        match self {
            OrderedSemiring::Bool => "bool",
            OrderedSemiring::NatMaxTimes { .. } => "nat",
            OrderedSemiring::MinPlus { .. } => "minplus",
            OrderedSemiring::Custom(c) => &c.name,
        }
    }

    pub fn zero(&self) -> SValue {
        match self {
            OrderedSemiring::Bool => SValue::B(false),
            OrderedSemiring::NatMaxTimes { .. } => SValue::N(0),
            OrderedSemiring::MinPlus { .. } => SValue::T(Trop::Inf),
            OrderedSemiring::Custom(c) => SValue::C(c.zero),
        }
    }

    pub fn one(&self) -> SValue {
        match self {
            OrderedSemiring::Bool => SValue::B(true),
            OrderedSemiring::NatMaxTimes { .. } => SValue::N(1),
            OrderedSemiring::MinPlus { .. } => SValue::T(Trop::Fin(0)),
            OrderedSemiring::Custom(c) => SValue::C(c.one),
        }
    }

    pub fn add(&self, a: SValue, b: SValue) -> SValue {
        match (self, a, b) {
            (OrderedSemiring::Bool, SValue::B(x), SValue::B(y)) => SValue::B(x || y),
            (OrderedSemiring::NatMaxTimes { .. }, SValue::N(x), SValue::N(y)) => {
                SValue::N(x.max(y))
            }
            (OrderedSemiring::MinPlus { .. }, SValue::T(x), SValue::T(y)) => SValue::T(match (x, y)
            {
                (Trop::Inf, t) | (t, Trop::Inf) => t,
                (Trop::Fin(u), Trop::Fin(v)) => Trop::Fin(u.min(v)),
            }),
            (OrderedSemiring::Custom(c), SValue::C(i), SValue::C(j)) => SValue::C(c.add[i][j]),
            _ => panic!("semiring value from a different carrier"),
        }
    }

    pub fn mul(&self, a: SValue, b: SValue) -> SValue {
        match (self, a, b) {
            (OrderedSemiring::Bool, SValue::B(x), SValue::B(y)) => SValue::B(x && y),
            (OrderedSemiring::NatMaxTimes { cap }, SValue::N(x), SValue::N(y)) => {
                SValue::N((x.saturating_mul(y)).min(*cap))
            }
            (OrderedSemiring::MinPlus { cap }, SValue::T(x), SValue::T(y)) => {
                SValue::T(match (x, y) {
                    (Trop::Inf, _) | (_, Trop::Inf) => Trop::Inf,
                    (Trop::Fin(u), Trop::Fin(v)) => Trop::Fin((u.saturating_add(v)).min(*cap)),
                })
            }
            (OrderedSemiring::Custom(c), SValue::C(i), SValue::C(j)) => SValue::C(c.mul[i][j]),
            _ => panic!("semiring value from a different carrier"),
        }
    }

    pub fn leq(&self, a: SValue, b: SValue) -> bool {
        match (self, a, b) {
            (OrderedSemiring::Bool, SValue::B(x), SValue::B(y)) => !x || y,
            (OrderedSemiring::NatMaxTimes { .. }, SValue::N(x), SValue::N(y)) => x <= y,
            // reversed numeric order: ∞ is the bottom
            (OrderedSemiring::MinPlus { .. }, SValue::T(x), SValue::T(y)) => match (x, y) {
                (Trop::Inf, _) => true,
                (_, Trop::Inf) => false,
                (Trop::Fin(u), Trop::Fin(v)) => v <= u,
            },
            (OrderedSemiring::Custom(c), SValue::C(i), SValue::C(j)) => c.leq[i][j],
            _ => panic!("semiring value from a different carrier"),
        }
    }

    /// Finite sample of carrier values used for law checks and matrix
    /// enumeration. Capped at a small magnitude (plus ∞ for min-plus).
    pub fn sample(&self) -> Vec<SValue> {
        match self {
            OrderedSemiring::Bool => vec![SValue::B(false), SValue::B(true)],
            OrderedSemiring::NatMaxTimes { cap } => {
                (0..=(*cap).min(7)).map(SValue::N).collect()
            }
            OrderedSemiring::MinPlus { cap } => {
                let mut v: Vec<SValue> =
                    (0..=(*cap).min(7)).map(|n| SValue::T(Trop::Fin(n))).collect();
                v.push(SValue::T(Trop::Inf));
                v
            }
            OrderedSemiring::Custom(c) => (0..c.size).map(SValue::C).collect(),
        }
    }

    /// Sampled law check: commutative monoids, distributivity, order laws,
    /// and the join-semilattice laws that make the posetal cell calculus
    /// compose (addition idempotent and equal to the join; zero bottom).
    pub fn validate(&self) -> CoreResult<()> {
        let sample = self.sample();
        let fail = |law: &str| Err(CoreError::InvalidSemiring(format!("{}: {law}", self.name())));
        let zero = self.zero();
        let one = self.one();
        for &a in &sample {
            if self.add(a, zero) != a {
                return fail("additive unit");
            }
            if self.mul(a, one) != a {
                return fail("multiplicative unit");
            }
            if self.mul(a, zero) != zero {
                return fail("zero absorbs");
            }
            if self.add(a, a) != a {
                return fail("addition idempotent");
            }
            if !self.leq(zero, a) {
                return fail("zero is bottom");
            }
            if !self.leq(a, a) {
                return fail("order reflexive");
            }
            for &b in &sample {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition commutative");
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplication commutative");
                }
                // a + b is the least upper bound of a and b
                let j = self.add(a, b);
                if !self.leq(a, j) || !self.leq(b, j) {
                    return fail("addition is an upper bound");
                }
                if self.leq(a, b) && self.leq(b, a) && a != b {
                    return fail("order antisymmetric");
                }
                for &c in &sample {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("addition associative");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplication associative");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return fail("order transitive");
                    }
                    if self.leq(a, b) && !self.leq(self.mul(a, c), self.mul(b, c)) {
                        return fail("multiplication monotone");
                    }
                    // join is least among upper bounds
                    if self.leq(a, c) && self.leq(b, c) && !self.leq(self.add(a, b), c) {
                        return fail("addition is the least upper bound");
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_semirings_pass_sampled_laws() {
        OrderedSemiring::Bool.validate().unwrap();
        OrderedSemiring::NatMaxTimes { cap: 7 }.validate().unwrap();
        OrderedSemiring::MinPlus { cap: 7 }.validate().unwrap();
    }

    #[test]
    fn broken_custom_semiring_is_rejected() {
        // two-element "semiring" whose addition is not idempotent
        let c = CustomSemiring {
            name: "broken".into(),
            size: 2,
            zero: 0,
            one: 1,
            add: vec![vec![0, 1], vec![1, 0]],
            mul: vec![vec![0, 0], vec![0, 1]],
            leq: vec![vec![true, true], vec![false, true]],
        };
        let r = OrderedSemiring::Custom(std::sync::Arc::new(c)).validate();
        assert!(matches!(r, Err(CoreError::InvalidSemiring(_))));
    }

    #[test]
    fn minplus_order_is_reversed() {
        let s = OrderedSemiring::MinPlus { cap: 7 };
        assert!(s.leq(SValue::T(Trop::Inf), SValue::T(Trop::Fin(0))));
        assert!(s.leq(SValue::T(Trop::Fin(5)), SValue::T(Trop::Fin(2))));
        assert!(!s.leq(SValue::T(Trop::Fin(2)), SValue::T(Trop::Fin(5))));
    }
}
