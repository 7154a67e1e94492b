//! The torus-invariant cycle of 2n+4 rational curves in Z and the isotropy
//! data of U(1)-subgroups along it.
//!
//! The string C0bar + B0 + E_1 + ... + E_{n-1} + Bn + C0, closed up by the
//! conjugate curves B0bar + E_1bar + ... + E_{n-1}bar + Bnbar, carries every
//! isolated torus fixed point of Z. Each curve gets the character by which
//! the torus scales its distinguished affine coordinate; from those
//! characters come the pointwise stabilizers K_0, ..., K_{n-1}, the isotropy
//! weights of arbitrary subgroup directions, and the semi-freeness test that
//! separates LeBrun-compatible deformations from the rest.

use std::fmt;

use crate::error::{Error, Result};
use crate::weights::{SubgroupDirection, Weight};

/// Position of a curve in the invariant cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveLabel {
    /// The contracted curve over (u,v) = (infinity, infinity).
    C0Bar,
    /// The curve joining C0bar to the first exceptional curve.
    B0,
    /// The j-th exceptional curve of the small resolution, 1 <= j <= n-1.
    E(usize),
    /// The curve joining the last exceptional curve to C0.
    Bn,
    /// The contracted curve over (u,v) = (0, 0).
    C0,
    B0Bar,
    EBar(usize),
    BnBar,
}

impl CurveLabel {
    pub fn is_conjugate(self) -> bool {
        matches!(
            self,
            CurveLabel::B0Bar | CurveLabel::EBar(_) | CurveLabel::BnBar
        )
    }

    /// The label of the curve swapped with this one by the real structure.
    pub fn conjugate(self) -> CurveLabel {
        match self {
            CurveLabel::C0Bar => CurveLabel::C0,
            CurveLabel::C0 => CurveLabel::C0Bar,
            CurveLabel::B0 => CurveLabel::B0Bar,
            CurveLabel::B0Bar => CurveLabel::B0,
            CurveLabel::E(j) => CurveLabel::EBar(j),
            CurveLabel::EBar(j) => CurveLabel::E(j),
            CurveLabel::Bn => CurveLabel::BnBar,
            CurveLabel::BnBar => CurveLabel::Bn,
        }
    }

    /// Rendered name with the summand count filled in, e.g. `B3` for n = 3.
    pub fn name(self, n: usize) -> String {
        match self {
            CurveLabel::C0Bar => "C0bar".to_string(),
            CurveLabel::B0 => "B0".to_string(),
            CurveLabel::E(j) => format!("E{j}"),
            CurveLabel::Bn => format!("B{n}"),
            CurveLabel::C0 => "C0".to_string(),
            CurveLabel::B0Bar => "B0bar".to_string(),
            CurveLabel::EBar(j) => format!("E{j}bar"),
            CurveLabel::BnBar => format!("B{n}bar"),
        }
    }
}

/// One rational curve of the invariant cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCurve {
    pub label: CurveLabel,
    /// Character by which the torus scales the distinguished affine
    /// coordinate on the curve.
    pub tangent_character: Weight,
    /// The coordinate the character refers to.
    pub coordinate_name: String,
}

/// The full cycle of 2n+4 curves, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleModel {
    pub n: usize,
    pub curves: Vec<CycleCurve>,
}

impl CycleModel {
    pub fn curve(&self, label: CurveLabel) -> Option<&CycleCurve> {
        self.curves.iter().find(|c| c.label == label)
    }
}

fn curve(label: CurveLabel, m: i64, n: i64, coordinate_name: impl Into<String>) -> CycleCurve {
    CycleCurve {
        label,
        tangent_character: Weight::new(m, n),
        coordinate_name: coordinate_name.into(),
    }
}

/// Builds the invariant cycle with its tangent characters.
///
/// The characters follow from the torus action (u,v,x,y,z) ->
/// (su, sv, tx, s^n t^-1 y, z) and the resolution coordinates: x~ = x/z
/// scales by t, each blow-up substitution x~_j = x~_{j-1}/(v - a_j u)
/// divides by an s-weight, and y~ = y/z scales by s^n t^-1. Contraction of
/// the two sections needs n > 2, hence the precondition n >= 3.
pub fn build_cycle(n: usize) -> Result<CycleModel> {
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    let ni = n as i64;
    let mut curves = Vec::with_capacity(2 * n + 4);
    curves.push(curve(CurveLabel::C0Bar, 1, 0, "v"));
    curves.push(curve(CurveLabel::B0, 0, 1, "x~ = x/z"));
    for j in 1..n {
        curves.push(curve(CurveLabel::E(j), -(j as i64), 1, format!("x~_{j}")));
    }
    curves.push(curve(CurveLabel::Bn, ni, -1, "y~ = y/z"));
    curves.push(curve(CurveLabel::C0, 1, 0, "u"));
    // Conjugates close the cycle, with negated characters.
    curves.push(curve(CurveLabel::B0Bar, 0, -1, "x~ (conj)"));
    for j in 1..n {
        curves.push(curve(
            CurveLabel::EBar(j),
            j as i64,
            -1,
            format!("x~_{j} (conj)"),
        ));
    }
    curves.push(curve(CurveLabel::BnBar, -ni, 1, "y~ (conj)"));
    Ok(CycleModel { n, curves })
}

/// The U(1)-subgroup fixing the curve pointwise: the primitive annihilator
/// of the tangent character.
pub fn pointwise_stabilizer(curve: &CycleCurve) -> Result<SubgroupDirection> {
    let Weight { m, n } = curve.tangent_character;
    if m == 0 && n == 0 {
        return Err(Error::ZeroCharacter);
    }
    SubgroupDirection::new(n, -m)
}

/// The integer weight by which the subgroup parameter scales the curve
/// coordinate; 0 means the curve is pointwise fixed.
pub fn isotropy_weight(curve: &CycleCurve, k: SubgroupDirection) -> i64 {
    k.pairing(curve.tangent_character)
}

/// Outcome of the semi-freeness test along the invariant cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// True iff every isotropy weight on the cycle lies in {-1, 0, 1}.
    pub semifree: bool,
    /// False exactly when the subgroup is one of K_1..K_{n-1} and carries an
    /// isotropy weight of absolute value >= 2: such equivariant deformations
    /// leave the LeBrun family.
    pub lebrun_compatible: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, {}",
            if self.semifree {
                "semi-free"
            } else {
                "not semi-free"
            },
            if self.lebrun_compatible {
                "LeBrun-compatible"
            } else {
                "non-LeBrun"
            }
        )
    }
}

/// Classification against an already-built cycle.
pub fn classify_on(cycle: &CycleModel, k: SubgroupDirection) -> Classification {
    let max_abs = cycle
        .curves
        .iter()
        .map(|c| isotropy_weight(c, k).abs())
        .max()
        .expect("cycle is nonempty");
    let semifree = max_abs <= 1;
    let is_exceptional_stabilizer = k.p() == 1 && (1..cycle.n as i64).contains(&k.q());
    Classification {
        semifree,
        lebrun_compatible: !(is_exceptional_stabilizer && max_abs >= 2),
    }
}

/// Classifies a subgroup direction by its isotropy along the cycle.
pub fn classify_subgroup(n: usize, k: SubgroupDirection) -> Result<Classification> {
    Ok(classify_on(&build_cycle(n)?, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_2n_plus_4_curves() {
        assert_eq!(build_cycle(3).unwrap().curves.len(), 10);
        assert_eq!(build_cycle(7).unwrap().curves.len(), 18);
        assert!(build_cycle(2).is_err());
    }

    #[test]
    fn tangent_characters_from_coordinate_chain() {
        // Independent recomputation: x~ carries (0,1); each substitution
        // x~_j = x~_{j-1}/(v - a_j u) removes one (1,0); y~ carries (n,-1).
        let n = 5usize;
        let cycle = build_cycle(n).unwrap();
        let x_tilde = (0i64, 1i64);
        for j in 1..n {
            let expected = (x_tilde.0 - j as i64, x_tilde.1);
            let e = cycle.curve(CurveLabel::E(j)).unwrap();
            assert_eq!((e.tangent_character.m, e.tangent_character.n), expected);
        }
        let bn = cycle.curve(CurveLabel::Bn).unwrap();
        assert_eq!((bn.tangent_character.m, bn.tangent_character.n), (5, -1));

        let e2 = cycle.curve(CurveLabel::E(2)).unwrap();
        assert_eq!(e2.tangent_character, Weight::new(-2, 1));
    }

    #[test]
    fn stabilizers_recover_the_distinguished_subgroups() {
        let cycle = build_cycle(5).unwrap();
        let c0 = cycle.curve(CurveLabel::C0).unwrap();
        assert_eq!(pointwise_stabilizer(c0).unwrap(), SubgroupDirection::k0());
        let e2 = cycle.curve(CurveLabel::E(2)).unwrap();
        assert_eq!(pointwise_stabilizer(e2).unwrap(), SubgroupDirection::k(2));
        let b0 = cycle.curve(CurveLabel::B0).unwrap();
        assert_eq!(
            pointwise_stabilizer(b0).unwrap(),
            SubgroupDirection::new(1, 0).unwrap()
        );
    }

    #[test]
    fn isotropy_weight_examples() {
        let cycle = build_cycle(5).unwrap();
        let b0 = cycle.curve(CurveLabel::B0).unwrap();
        assert_eq!(isotropy_weight(b0, SubgroupDirection::k(2)), 2);
        let bn = cycle.curve(CurveLabel::Bn).unwrap();
        assert_eq!(isotropy_weight(bn, SubgroupDirection::k(1)), 4);
        let e3 = cycle.curve(CurveLabel::E(3)).unwrap();
        assert_eq!(isotropy_weight(e3, SubgroupDirection::k(3)), 0);
    }

    #[test]
    fn classification_examples() {
        let c = classify_subgroup(4, SubgroupDirection::k(2)).unwrap();
        assert!(!c.semifree && !c.lebrun_compatible);

        let c = classify_subgroup(3, SubgroupDirection::k(1)).unwrap();
        assert!(!c.semifree && !c.lebrun_compatible);

        let c = classify_subgroup(5, SubgroupDirection::k0()).unwrap();
        assert!(c.semifree && c.lebrun_compatible);

        // Not one of the excess subgroups: large isotropy but no verdict
        // against the LeBrun family.
        let c = classify_subgroup(3, SubgroupDirection::new(1, 5).unwrap()).unwrap();
        assert!(!c.semifree && c.lebrun_compatible);
    }

    #[test]
    fn conjugate_curves_negate_isotropy() {
        let n = 6;
        let cycle = build_cycle(n).unwrap();
        let k = SubgroupDirection::new(2, -3).unwrap();
        for c in &cycle.curves {
            if c.label.is_conjugate() {
                continue;
            }
            let conj = cycle.curve(c.label.conjugate()).unwrap();
            assert_eq!(
                pointwise_stabilizer(c).unwrap(),
                pointwise_stabilizer(conj).unwrap()
            );
            if c.label != CurveLabel::C0 && c.label != CurveLabel::C0Bar {
                assert_eq!(isotropy_weight(c, k), -isotropy_weight(conj, k));
            } else {
                // The two contracted curves are mutual conjugates; their
                // coordinates u and v carry the same character.
                assert_eq!(isotropy_weight(c, k).abs(), isotropy_weight(conj, k).abs());
            }
        }
    }

    #[test]
    fn adjacent_curves_have_independent_tangents() {
        let cycle = build_cycle(5).unwrap();
        let len = cycle.curves.len();
        for i in 0..len {
            let a = cycle.curves[i].tangent_character;
            let b = cycle.curves[(i + 1) % len].tangent_character;
            assert_ne!(
                a.m * b.n - a.n * b.m,
                0,
                "curves {i} and {} parallel",
                (i + 1) % len
            );
        }
    }
}
