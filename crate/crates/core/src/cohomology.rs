//! Line-bundle cohomology on P^1 and on the quadric Q = P^1 x P^1, plus
//! equivariant Cech H^1 weight bases on P^1.
//!
//! On P^1, h^0(O(d)) = max(d+1, 0) and h^1(O(d)) = max(-d-1, 0). On Q the
//! dimensions follow by the Kunneth formula. For an equivariant O(d) with
//! d <= -2, H^1 is spanned by the Cech classes zeta_k: v -> v^{-k},
//! k = 1..-d-1, on the overlap chart; their weights are read off from the
//! character by which the fiber coordinate transforms.

use crate::error::{Error, Result};
use crate::weights::{Weight, WeightRep};

/// The line bundle O(d) on P^1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineBundleP1 {
    pub degree: i64,
}

impl LineBundleP1 {
    pub fn h0(self) -> usize {
        self.degree.saturating_add(1).max(0) as usize
    }

    pub fn h1(self) -> usize {
        (-self.degree - 1).max(0) as usize
    }
}

/// The line bundle O(a,b) on Q = P^1 x P^1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineBundleQ {
    pub a: i64,
    pub b: i64,
}

impl LineBundleQ {
    /// h^i via Kunneth: sum over j+k = i of h^j(O(a)) * h^k(O(b)).
    pub fn h(self, i: u8) -> Result<usize> {
        let fa = LineBundleP1 { degree: self.a };
        let fb = LineBundleP1 { degree: self.b };
        match i {
            0 => Ok(fa.h0() * fb.h0()),
            1 => Ok(fa.h0() * fb.h1() + fa.h1() * fb.h0()),
            2 => Ok(fa.h1() * fb.h1()),
            _ => Err(Error::BadCohomologyDegree { got: i, max: 2 }),
        }
    }
}

/// h^i(O(d)) on P^1. The curve is one-dimensional, so i must be 0 or 1.
pub fn h_p1(d: i64, i: u8) -> Result<usize> {
    let bundle = LineBundleP1 { degree: d };
    match i {
        0 => Ok(bundle.h0()),
        1 => Ok(bundle.h1()),
        _ => Err(Error::BadCohomologyDegree { got: i, max: 1 }),
    }
}

/// h^i(O(a,b)) on Q.
pub fn h_q(a: i64, b: i64, i: u8) -> Result<usize> {
    LineBundleQ { a, b }.h(i)
}

/// Equivariant structure of a line bundle on P^1, given over the chart where
/// the base coordinate transforms as v -> s v: the character (alpha, beta)
/// by which the fiber coordinate transforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivariantChart {
    pub fiber_character: Weight,
}

impl EquivariantChart {
    pub const fn new(fiber_character: Weight) -> Self {
        EquivariantChart { fiber_character }
    }
}

/// Weights of H^1(O(d)) in the Cech basis zeta_k: v -> v^{-k}.
///
/// The class zeta_k picks up s^k from the base substitution on top of the
/// fiber character, so its weight is (alpha + k, beta) for k = 1..-d-1.
/// Degrees d >= -1 have vanishing H^1 and yield the empty representation.
pub fn cech_h1_weights(d: i64, chart: EquivariantChart) -> WeightRep {
    let Weight { m: alpha, n: beta } = chart.fiber_character;
    let mut rep = WeightRep::new();
    for k in 1..=(-d - 1).max(0) {
        rep.add(Weight::new(alpha + k, beta), 1);
    }
    rep
}
