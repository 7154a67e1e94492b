//! Subgroup scanning and moduli dimensions of equivariant deformations.
//!
//! A U(1)-subgroup K admits an equivariant deformation breaking the full
//! torus symmetry exactly when its fixed subspace in H^1(Theta_Z) strictly
//! contains the (n-1)-dimensional torus-invariant part. Scanning primitive
//! directions finds exactly n such subgroups, K_0 = (0,1) and K_i = (1,i)
//! for 1 <= i <= n-1; the local moduli of metrics obtained from an excess
//! subgroup is the fixed dimension minus one residual circle direction.
//!
//! Weights of the assembled representation satisfy |n-part| <= 1 and
//! |m-part| <= n-1, so a direction (p,q) fixing a weight (m,+-1) forces
//! q = -+ m p with |p| = 1 by primitivity, and p = 0 forces the direction
//! (0,1). The excess set is therefore complete once the scan height reaches
//! n-1; larger bounds cannot add subgroups.

use crate::cycle::Classification;
use crate::deformation::closed_form_rep;
use crate::error::{Error, Result};
use crate::weights::{SubgroupDirection, Weight};

/// Scan outcome for one primitive direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupReport {
    pub direction: SubgroupDirection,
    /// `K0`..`K{n-1}` for the distinguished stabilizers, absent otherwise.
    pub k_label: Option<String>,
    pub fixed_dim: usize,
    /// True iff the fixed subspace strictly exceeds the torus-invariant part.
    pub is_excess: bool,
    /// `fixed_dim - 1` when excess holds, absent otherwise.
    pub moduli_dim: Option<usize>,
    pub classification: Classification,
}

/// A full scan over primitive directions up to a height bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub n: usize,
    pub torus_invariant_dim: usize,
    pub reports: Vec<SubgroupReport>,
    pub excess_set: Vec<SubgroupDirection>,
}

/// Default scan height: enough to certify the excess set for this n.
pub fn default_height(n: usize) -> usize {
    n + 5
}

/// Dimension of the K-fixed subspace of H^1(Theta_Z), from the closed-form
/// weight lists.
pub fn fixed_dimension(n: usize, k: SubgroupDirection) -> Result<usize> {
    Ok(closed_form_rep(n)?.total().fixed_subrep(k).dimension())
}

/// Multiplicity of the trivial weight in H^1(Theta_Z): always n-1.
pub fn torus_invariant_dimension(n: usize) -> Result<usize> {
    Ok(closed_form_rep(n)?.total().multiplicity(Weight::trivial()))
}

/// The label K_i when the direction is one of the distinguished stabilizers.
pub fn k_label(n: usize, k: SubgroupDirection) -> Option<String> {
    if k == SubgroupDirection::k0() {
        Some("K0".to_string())
    } else if k.p() == 1 && (1..n as i64).contains(&k.q()) {
        Some(format!("K{}", k.q()))
    } else {
        None
    }
}

/// All primitive directions with max(|p|,|q|) <= height, in canonical form,
/// sorted lexicographically on (p,q).
pub fn primitive_directions(height: usize) -> Vec<SubgroupDirection> {
    let h = height as i64;
    let mut out = vec![SubgroupDirection::k0()];
    for p in 1..=h {
        for q in -h..=h {
            if num::integer::gcd(p, q) == 1 {
                out.push(SubgroupDirection::new(p, q).expect("nonzero"));
            }
        }
    }
    out.sort();
    out
}

/// Directions within the height bound whose fixed subspace strictly exceeds
/// the torus-invariant part. For height >= n-1 this is exactly
/// {(0,1)} and {(1,i) : 1 <= i <= n-1} when n >= 3, and empty when n = 2.
pub fn excess_subgroups(n: usize, height_bound: usize) -> Result<Vec<SubgroupDirection>> {
    if height_bound < 1 {
        return Err(Error::InvalidConfiguration(
            "height bound must be at least 1".to_string(),
        ));
    }
    let total = closed_form_rep(n)?.total();
    let invariant = total.multiplicity(Weight::trivial());
    let directions = primitive_directions(height_bound);
    let fixed = crate::par::try_map_slice(&directions, |&k| {
        Ok::<usize, Error>(total.fixed_subrep(k).dimension())
    })?;
    Ok(directions
        .into_iter()
        .zip(fixed)
        .filter(|&(_, dim)| dim > invariant)
        .map(|(k, _)| k)
        .collect())
}

/// Moduli dimension of K-equivariant deformations: the fixed dimension minus
/// the residual circle orbit, present exactly when the subgroup is excess.
pub fn moduli_dimension(n: usize, k: SubgroupDirection) -> Result<Option<usize>> {
    if n < 3 {
        return Err(Error::NTooSmall { n, min: 3 });
    }
    let fixed = fixed_dimension(n, k)?;
    let invariant = torus_invariant_dimension(n)?;
    Ok((fixed > invariant).then(|| fixed - 1))
}

/// Shared state for scanning many directions at one n: the assembled weight
/// multiset and the invariant cycle are built once.
struct ScanContext {
    n: usize,
    total: crate::weights::WeightRep,
    invariant: usize,
    cycle: crate::cycle::CycleModel,
}

impl ScanContext {
    fn new(n: usize) -> Result<Self> {
        let total = closed_form_rep(n)?.total();
        let invariant = total.multiplicity(Weight::trivial());
        Ok(ScanContext {
            n,
            total,
            invariant,
            cycle: crate::cycle::build_cycle(n)?,
        })
    }

    fn report(&self, k: SubgroupDirection) -> SubgroupReport {
        let fixed_dim = self.total.fixed_subrep(k).dimension();
        let is_excess = fixed_dim > self.invariant;
        SubgroupReport {
            direction: k,
            k_label: k_label(self.n, k),
            fixed_dim,
            is_excess,
            moduli_dim: is_excess.then(|| fixed_dim - 1),
            classification: crate::cycle::classify_on(&self.cycle, k),
        }
    }
}

/// Builds the report for one direction.
pub fn report_for(n: usize, k: SubgroupDirection) -> Result<SubgroupReport> {
    Ok(ScanContext::new(n)?.report(k))
}

fn scan_with(n: usize, height_bound: usize, parallel: bool) -> Result<ScanResult> {
    if height_bound < 1 {
        return Err(Error::InvalidConfiguration(
            "height bound must be at least 1".to_string(),
        ));
    }
    let ctx = ScanContext::new(n)?;
    let directions = primitive_directions(height_bound);
    let reports = if parallel {
        crate::par::try_map_slice(&directions, |&k| Ok::<_, Error>(ctx.report(k)))?
    } else {
        directions.iter().map(|&k| ctx.report(k)).collect()
    };
    let excess_set = reports
        .iter()
        .filter(|r| r.is_excess)
        .map(|r| r.direction)
        .collect();
    Ok(ScanResult {
        n,
        torus_invariant_dim: ctx.invariant,
        reports,
        excess_set,
    })
}

/// Scans every primitive direction within the bound. Runs in parallel when
/// the `parallel` feature is on; the result is identical to [`scan_seq`].
pub fn scan(n: usize, height_bound: usize) -> Result<ScanResult> {
    scan_with(n, height_bound, true)
}

/// Sequential reference scan, kept for the benches and the equivalence test.
pub fn scan_seq(n: usize, height_bound: usize) -> Result<ScanResult> {
    scan_with(n, height_bound, false)
}
