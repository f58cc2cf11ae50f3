//! Finite sets and total functions, the base of every shipped instance.
//!
//! Sets are stored as sorted lists of distinct string labels, so equality
//! is order-independent. Products and coproducts render composite labels
//! ("(a,b)", "inl·a") to keep certificates human-readable.

use serde::Serialize;
use std::fmt;

/// A finite set of distinct string labels, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FinSet {
    labels: Vec<String>,
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}

impl FinSet {
    /// Builds a set from labels; sorts and rejects duplicates.
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(labels: I) -> Self {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        labels.dedup();
        FinSet { labels }
    }

    /// Builds a set, panicking if the input contains duplicates. Used by
    /// constructors that must not silently collapse labels.
    pub fn new_strict<I: IntoIterator<Item = S>, S: Into<String>>(labels: I) -> Self {
        let raw: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = raw.len();
        let s = FinSet::new(raw);
        assert_eq!(s.len(), n, "duplicate labels in finite set");
        s
    }

    pub fn empty() -> Self {
        FinSet { labels: Vec::new() }
    }

    /// The canonical one-element set used as terminal object.
    pub fn singleton() -> Self {
        FinSet::new(["•"])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }
}

/// A total function between finite sets, stored as an index table.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinFunction {
    pub src: FinSet,
    pub tgt: FinSet,
    table: Vec<usize>,
}

impl fmt::Debug for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .src
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{l}↦{}", self.tgt.labels()[self.table[i]]))
            .collect();
        write!(f, "[{}]", entries.join(","))
    }
}

impl FinFunction {
    /// Builds a function from an index table; every index must be in range.
    pub fn from_table(src: FinSet, tgt: FinSet, table: Vec<usize>) -> Option<Self> {
        if table.len() != src.len() || table.iter().any(|&i| i >= tgt.len()) {
            return None;
        }
        Some(FinFunction { src, tgt, table })
    }

    /// Builds a function from label pairs; must be total on `src`.
    pub fn from_pairs<'a, I>(src: FinSet, tgt: FinSet, pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut table = vec![usize::MAX; src.len()];
        for (a, b) in pairs {
            let i = src.index_of(a)?;
            let j = tgt.index_of(b)?;
            table[i] = j;
        }
        if table.iter().any(|&i| i == usize::MAX) {
            return None;
        }
        Some(FinFunction { src, tgt, table })
    }

    /// Builds a function by applying `f` to every source label.
    pub fn from_fn(src: FinSet, tgt: FinSet, f: impl Fn(&str) -> String) -> Option<Self> {
        let mut table = Vec::with_capacity(src.len());
        for l in src.labels() {
            table.push(tgt.index_of(&f(l))?);
        }
        Some(FinFunction { src, tgt, table })
    }

    pub fn identity(x: &FinSet) -> Self {
        FinFunction {
            src: x.clone(),
            tgt: x.clone(),
            table: (0..x.len()).collect(),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, label: &str) -> Option<&str> {
        let i = self.src.index_of(label)?;
        Some(&self.tgt.labels()[self.table[i]])
    }

    /// Diagrammatic composition: `self` then `g`.
    pub fn then(&self, g: &FinFunction) -> Option<FinFunction> {
        if self.tgt != g.src {
            return None;
        }
        Some(FinFunction {
            src: self.src.clone(),
            tgt: g.tgt.clone(),
            table: self.table.iter().map(|&i| g.table[i]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.table.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.tgt.len()];
        for &j in &self.table {
            if seen[j] {
                return false;
            }
            seen[j] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.tgt.len()];
        for &j in &self.table {
            seen[j] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.src.len() == self.tgt.len() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<FinFunction> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0usize; self.tgt.len()];
        for (i, &j) in self.table.iter().enumerate() {
            table[j] = i;
        }
        Some(FinFunction {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            table,
        })
    }
}

/// Enumerates every total function from `x` to `y` (|y|^|x| functions, in
/// lexicographic table order). The empty product convention gives exactly
/// one function out of the empty set.
pub fn all_functions(x: &FinSet, y: &FinSet) -> Vec<FinFunction> {
    if x.is_empty() {
        return vec![FinFunction {
            src: x.clone(),
            tgt: y.clone(),
            table: Vec::new(),
        }];
    }
    if y.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut table = vec![0usize; x.len()];
    loop {
        out.push(FinFunction {
            src: x.clone(),
            tgt: y.clone(),
            table: table.clone(),
        });
        let mut k = 0;
        loop {
            if k == table.len() {
                return out;
            }
            table[k] += 1;
            if table[k] < y.len() {
                break;
            }
            table[k] = 0;
            k += 1;
        }
    }
}

/// Label of a tuple in a product set. Nullary products use the terminal
/// label, unary products keep the component label.
pub fn tuple_label(parts: &[&str]) -> String {
    match parts.len() {
        0 => "•".to_string(),
        1 => parts[0].to_string(),
        _ => format!("({})", parts.join(",")),
    }
}

/// Label of a pair, always parenthesized (used for span pullback apexes).
pub fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Label of a tagged element in a coproduct. Binary coproducts use the
/// inl/inr convention; other arities tag with the index.
pub fn inj_label(arity: usize, idx: usize, l: &str) -> String {
    if arity == 2 {
        if idx == 0 {
            format!("inl·{l}")
        } else {
            format!("inr·{l}")
        }
    } else {
        format!("in{idx}·{l}")
    }
}

/// Product of a family of sets, with tuple labels.
pub fn product_set(xs: &[&FinSet]) -> FinSet {
    let mut labels = vec![Vec::<&str>::new()];
    for x in xs {
        let mut next = Vec::with_capacity(labels.len() * x.len());
        for prefix in &labels {
            for l in x.labels() {
                let mut p = prefix.clone();
                p.push(l);
                next.push(p);
            }
        }
        labels = next;
    }
    FinSet::new_strict(labels.iter().map(|parts| tuple_label(parts)))
}

/// The tuples of a product set, in the same order as `product_set` builds
/// labels (before sorting). Each entry is (tuple of component labels, label).
pub fn product_tuples(xs: &[&FinSet]) -> Vec<(Vec<String>, String)> {
    let mut tuples = vec![Vec::<String>::new()];
    for x in xs {
        let mut next = Vec::with_capacity(tuples.len() * x.len());
        for prefix in &tuples {
            for l in x.labels() {
                let mut p = prefix.clone();
                p.push(l.clone());
                next.push(p);
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().map(|s| s.as_str()).collect();
            let label = tuple_label(&parts);
            (t, label)
        })
        .collect()
}

/// Coproduct (tagged disjoint union) of a family of sets.
pub fn coproduct_set(xs: &[&FinSet]) -> FinSet {
    let n = xs.len();
    let mut labels = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        for l in x.labels() {
            labels.push(inj_label(n, i, l));
        }
    }
    FinSet::new_strict(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_equality_is_order_independent() {
        assert_eq!(FinSet::new(["b", "a"]), FinSet::new(["a", "b"]));
    }

    #[test]
    fn function_counting() {
        let x = FinSet::new(["a", "b"]);
        let y = FinSet::new(["0"]);
        assert_eq!(all_functions(&x, &y).len(), 1);
        let z = FinSet::new(["0", "1", "2"]);
        assert_eq!(all_functions(&x, &z).len(), 9);
        assert_eq!(all_functions(&FinSet::empty(), &z).len(), 1);
        assert_eq!(all_functions(&x, &FinSet::empty()).len(), 0);
    }

    #[test]
    fn product_and_coproduct_labels() {
        let x = FinSet::new(["a", "b"]);
        let y = FinSet::new(["0"]);
        assert_eq!(
            product_set(&[&x, &y]),
            FinSet::new(["(a,0)", "(b,0)"])
        );
        assert_eq!(product_set(&[]), FinSet::singleton());
        assert_eq!(product_set(&[&x]), x);
        assert_eq!(
            coproduct_set(&[&y, &y]),
            FinSet::new(["inl·0", "inr·0"])
        );
        assert_eq!(coproduct_set(&[]), FinSet::empty());
    }

    #[test]
    fn composition_and_inverse() {
        let x = FinSet::new(["a", "b"]);
        let y = FinSet::new(["0", "1"]);
        let f = FinFunction::from_pairs(x.clone(), y.clone(), [("a", "1"), ("b", "0")]).unwrap();
        let g = f.inverse().unwrap();
        assert!(f.then(&g).unwrap().is_identity());
        assert!(g.then(&f).unwrap().is_identity());
    }
}
