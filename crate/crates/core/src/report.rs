//! Serializable report types with stable field names.
//!
//! The JSON layout is part of the external contract:
//!
//! ```json
//! {"n": 3,
//!  "rep": {"rep1": [["(m,n)", mult], ...], "rep2": [...], "rep3": [...]},
//!  "dims": {"rep1": 4, "rep2": 2, "rep3": 2, "total": 8},
//!  "subgroups": [{"p": 0, "q": 1, "k_label": "K0", "fixed_dim": 4,
//!                 "excess": true, "moduli_dim": 3,
//!                 "semifree": true, "lebrun": true}, ...]}
//! ```
//!
//! All numbers are exact integers; rationals elsewhere serialize as
//! `"num/den"` strings.

use serde::Serialize;

use crate::cycle::{pointwise_stabilizer, CycleCurve, CycleModel};
use crate::deformation::AssembledRep;
use crate::moduli::{ScanResult, SubgroupReport};
use crate::weights::WeightRep;

/// The three weight lists, each as `["(m,n)", multiplicity]` pairs in
/// canonical order.
#[derive(Clone, Debug, Serialize)]
pub struct RepJson {
    pub rep1: Vec<(String, usize)>,
    pub rep2: Vec<(String, usize)>,
    pub rep3: Vec<(String, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimsJson {
    pub rep1: usize,
    pub rep2: usize,
    pub rep3: usize,
    pub total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupJson {
    pub p: i64,
    pub q: i64,
    pub k_label: Option<String>,
    pub fixed_dim: usize,
    pub excess: bool,
    pub moduli_dim: Option<usize>,
    pub semifree: bool,
    pub lebrun: bool,
}

/// Report for one value of n.
#[derive(Clone, Debug, Serialize)]
pub struct NReport {
    pub n: usize,
    pub rep: RepJson,
    pub dims: DimsJson,
    pub subgroups: Vec<SubgroupJson>,
}

fn rep_entries(rep: &WeightRep) -> Vec<(String, usize)> {
    rep.entries()
        .into_iter()
        .map(|(w, mult)| (w.to_string(), mult))
        .collect()
}

impl From<&AssembledRep> for RepJson {
    fn from(rep: &AssembledRep) -> Self {
        RepJson {
            rep1: rep_entries(&rep.rep1),
            rep2: rep_entries(&rep.rep2),
            rep3: rep_entries(&rep.rep3),
        }
    }
}

impl From<&AssembledRep> for DimsJson {
    fn from(rep: &AssembledRep) -> Self {
        DimsJson {
            rep1: rep.rep1.dimension(),
            rep2: rep.rep2.dimension(),
            rep3: rep.rep3.dimension(),
            total: rep.dimension(),
        }
    }
}

impl From<&SubgroupReport> for SubgroupJson {
    fn from(r: &SubgroupReport) -> Self {
        SubgroupJson {
            p: r.direction.p(),
            q: r.direction.q(),
            k_label: r.k_label.clone(),
            fixed_dim: r.fixed_dim,
            excess: r.is_excess,
            moduli_dim: r.moduli_dim,
            semifree: r.classification.semifree,
            lebrun: r.classification.lebrun_compatible,
        }
    }
}

impl NReport {
    pub fn new(n: usize, rep: &AssembledRep, subgroups: &[SubgroupReport]) -> Self {
        NReport {
            n,
            rep: rep.into(),
            dims: rep.into(),
            subgroups: subgroups.iter().map(SubgroupJson::from).collect(),
        }
    }

    pub fn from_scan(rep: &AssembledRep, scan: &ScanResult) -> Self {
        NReport::new(scan.n, rep, &scan.reports)
    }
}

/// One row of the cycle table.
#[derive(Clone, Debug, Serialize)]
pub struct CycleRowJson {
    pub label: String,
    pub coordinate_name: String,
    pub tangent_character: String,
    pub stabilizer: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isotropy: Option<i64>,
}

impl CycleRowJson {
    pub fn new(model: &CycleModel, curve: &CycleCurve, isotropy: Option<i64>) -> Self {
        CycleRowJson {
            label: curve.label.name(model.n),
            coordinate_name: curve.coordinate_name.clone(),
            tangent_character: curve.tangent_character.to_string(),
            stabilizer: pointwise_stabilizer(curve)
                .map(|d| d.to_string())
                .unwrap_or_else(|_| "-".to_string()),
            isotropy,
        }
    }
}
