//! The character lattice of the 2-torus G = C* x C*.
//!
//! A weight (m,n) is the character (s,t) -> s^m t^n. A finite-dimensional
//! G-representation is determined by its multiset of weights, stored here as
//! a [`WeightRep`]. One-parameter U(1)-subgroups {(lambda^p, lambda^q)} are
//! named by primitive directions (p,q); a weight restricts trivially to such
//! a subgroup exactly when m*p + n*q = 0.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::gcd;

use crate::error::{Error, Result};

/// A character (m,n) of the 2-torus: (s,t) -> s^m t^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub m: i64,
    pub n: i64,
}

impl Weight {
    pub const fn new(m: i64, n: i64) -> Self {
        Weight { m, n }
    }

    pub const fn trivial() -> Self {
        Weight { m: 0, n: 0 }
    }

    pub fn negated(self) -> Self {
        Weight::new(-self.m, -self.n)
    }

    pub fn is_trivial(self) -> bool {
        self.m == 0 && self.n == 0
    }

    /// Sort key for reports: lexicographic on (n, m).
    fn report_key(self) -> (i64, i64) {
        (self.n, self.m)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A finite multiset of weights: a torus representation up to isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightRep {
    entries: BTreeMap<Weight, usize>,
}

impl WeightRep {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(weights: I) -> Self {
        let mut rep = Self::new();
        for w in weights {
            rep.add(w, 1);
        }
        rep
    }

    /// Adds `mult` copies of `w`; a zero multiplicity is a no-op.
    pub fn add(&mut self, w: Weight, mult: usize) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    /// Multiset union with another representation.
    pub fn extend(&mut self, other: &WeightRep) {
        for (&w, &mult) in &other.entries {
            self.add(w, mult);
        }
    }

    pub fn dimension(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: Weight) -> usize {
        self.entries.get(&w).copied().unwrap_or(0)
    }

    /// Entries in canonical report order: lexicographic on (n, m).
    pub fn entries(&self) -> Vec<(Weight, usize)> {
        let mut out: Vec<(Weight, usize)> = self.entries.iter().map(|(&w, &k)| (w, k)).collect();
        out.sort_by_key(|(w, _)| w.report_key());
        out
    }

    /// All weights expanded with multiplicity, in report order.
    pub fn weights(&self) -> Vec<Weight> {
        let mut out = Vec::with_capacity(self.dimension());
        for (w, mult) in self.entries() {
            out.extend(std::iter::repeat_n(w, mult));
        }
        out
    }

    /// The sub-multiset of weights killed by the subgroup direction `k`:
    /// the weights of the k-fixed subspace.
    pub fn fixed_subrep(&self, k: SubgroupDirection) -> WeightRep {
        WeightRep {
            entries: self
                .entries
                .iter()
                .filter(|(&w, _)| k.fixes(w))
                .map(|(&w, &mult)| (w, mult))
                .collect(),
        }
    }

    /// Replaces every weight by its negative, preserving multiplicities.
    pub fn negated(&self) -> WeightRep {
        WeightRep {
            entries: self
                .entries
                .iter()
                .map(|(&w, &mult)| (w.negated(), mult))
                .collect(),
        }
    }
}

impl fmt::Display for WeightRep {
    /// Space-separated `(m,n)xk` entries, e.g. `(-1,0)x2 (0,0)x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .entries()
            .iter()
            .map(|(w, mult)| format!("{w}x{mult}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromIterator<Weight> for WeightRep {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        WeightRep::from_weights(iter)
    }
}

/// A primitive integer direction (p,q) naming the U(1)-subgroup
/// {(lambda^p, lambda^q)}. Canonical form: p > 0, or p = 0 and q = 1, so
/// each subgroup is named exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupDirection {
    p: i64,
    q: i64,
}

impl SubgroupDirection {
    /// Normalizes (p,q): divides by the gcd and fixes the sign. Two inputs
    /// name the same subgroup iff they normalize equally.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroDirection);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if p < 0 || (p == 0 && q < 0) {
            p = -p;
            q = -q;
        }
        Ok(SubgroupDirection { p, q })
    }

    /// K_0 = {(1, t)}: the subgroup with s = 1.
    pub fn k0() -> Self {
        SubgroupDirection { p: 0, q: 1 }
    }

    /// K_i = {(s, s^i)}: the subgroup cut out by t = s^i.
    pub fn k(i: i64) -> Self {
        SubgroupDirection { p: 1, q: i }
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// The integer m*p + n*q by which the subgroup parameter scales a vector
    /// of weight (m,n).
    pub fn pairing(self, w: Weight) -> i64 {
        w.m * self.p + w.n * self.q
    }

    /// True iff the weight restricts to the trivial character of this subgroup.
    pub fn fixes(self, w: Weight) -> bool {
        self.pairing(w) == 0
    }
}

impl fmt::Display for SubgroupDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_gcd_reduction() {
        assert_eq!(
            SubgroupDirection::new(2, -4).unwrap(),
            SubgroupDirection::new(1, -2).unwrap()
        );
        let d = SubgroupDirection::new(2, -4).unwrap();
        assert_eq!((d.p(), d.q()), (1, -2));
    }

    #[test]
    fn normalize_sign_canon() {
        let d = SubgroupDirection::new(0, -3).unwrap();
        assert_eq!((d.p(), d.q()), (0, 1));
        assert_eq!(d, SubgroupDirection::k0());
        let e = SubgroupDirection::new(-3, 6).unwrap();
        assert_eq!((e.p(), e.q()), (1, -2));
    }

    #[test]
    fn normalize_k2() {
        assert_eq!(
            SubgroupDirection::new(1, 2).unwrap(),
            SubgroupDirection::k(2)
        );
    }

    #[test]
    fn zero_direction_rejected() {
        assert_eq!(SubgroupDirection::new(0, 0), Err(Error::ZeroDirection));
    }

    #[test]
    fn fixes_examples() {
        let any = SubgroupDirection::new(3, -7).unwrap();
        assert!(any.fixes(Weight::trivial()));
        assert!(SubgroupDirection::k(2).fixes(Weight::new(-2, 1)));
        for i in 0..10 {
            assert!(!SubgroupDirection::k(i).fixes(Weight::new(1, 0)));
        }
    }

    #[test]
    fn fixed_subrep_filters_entries() {
        let rep = WeightRep::from_weights([
            Weight::new(0, 0),
            Weight::new(0, 0),
            Weight::new(-2, 1),
            Weight::new(1, 0),
        ]);
        let fixed = rep.fixed_subrep(SubgroupDirection::k(2));
        assert_eq!(fixed.dimension(), 3);
        assert_eq!(fixed.multiplicity(Weight::new(-2, 1)), 1);
        assert_eq!(fixed.multiplicity(Weight::new(1, 0)), 0);

        assert!(WeightRep::new()
            .fixed_subrep(SubgroupDirection::k0())
            .is_empty());
    }

    #[test]
    fn negation_is_an_involution() {
        let rep = WeightRep::from_weights([Weight::new(-2, 1), Weight::new(3, 0)]);
        assert_eq!(rep.negated().multiplicity(Weight::new(2, -1)), 1);
        assert_eq!(rep.negated().negated(), rep);
    }

    #[test]
    fn display_formats() {
        assert_eq!(Weight::new(-2, 1).to_string(), "(-2,1)");
        let mut rep = WeightRep::new();
        rep.add(Weight::new(0, 0), 2);
        rep.add(Weight::new(1, 0), 1);
        rep.add(Weight::new(-1, 0), 1);
        assert_eq!(rep.to_string(), "(-1,0)x1 (0,0)x2 (1,0)x1");
        assert_eq!(SubgroupDirection::k(4).to_string(), "(1,4)");
    }

    #[test]
    fn report_order_is_lex_on_n_then_m() {
        let rep = WeightRep::from_weights([
            Weight::new(2, -1),
            Weight::new(-2, 1),
            Weight::new(0, 0),
            Weight::new(1, -1),
        ]);
        let order: Vec<Weight> = rep.entries().iter().map(|(w, _)| *w).collect();
        assert_eq!(
            order,
            vec![
                Weight::new(1, -1),
                Weight::new(2, -1),
                Weight::new(0, 0),
                Weight::new(-2, 1)
            ]
        );
    }
}
