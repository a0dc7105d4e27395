//! Serializable report shapes shared by the CLI and the browser demo.
//! Integers only; maps are keyed by 1-based node label.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::blowup::{Bigness, BlowUp, CurveClass, DivisorClass, Verdict};
use crate::error::Result;
use crate::flag::FlagVariety;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    /// `S_P`, the nodes contained in `P`.
    pub parabolic: Vec<usize>,
    /// `S ∖ S_P`, echoed back to avoid convention confusion.
    pub complement: Vec<usize>,
    pub dim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codim: Option<i64>,
}

impl InputEcho {
    pub fn new(fv: &FlagVariety, codim: Option<i64>) -> Self {
        let spec = fv.root_system().spec();
        InputEcho {
            family: spec.family().to_string(),
            rank: spec.rank(),
            parabolic: fv.parabolic().members(),
            complement: fv.picard_basis(),
            dim: fv.dimension(),
            codim,
        }
    }
}

/// A divisor over `{Bl*D_α} ∪ {E_Z}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackBasis {
    pub pullback: BTreeMap<usize, i64>,
    pub exceptional: i64,
}

/// A divisor over `{Bl*D_α} ∪ {H - E_Z}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefBasis {
    pub nef: BTreeMap<usize, i64>,
    pub h_minus_e: i64,
}

/// A curve over `{C̃_α} ∪ {e}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveBasis {
    pub tilde: BTreeMap<usize, i64>,
    pub e: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anticanonical {
    pub basis1: PullbackBasis,
    pub basis2: NefBasis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cones {
    pub nef_generators: Vec<PullbackBasis>,
    pub mori_generators: Vec<CurveBasis>,
    /// Rows follow `nef_generators`, columns `mori_generators`.
    pub intersection_matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facts {
    pub gg_equals_nef: bool,
    pub h_minus_e_big: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub input: InputEcho,
    pub betas: BTreeMap<usize, i64>,
    pub margins: BTreeMap<usize, i64>,
    pub verdict: Verdict,
    pub anticanonical_big: Bigness,
    pub anticanonical: Anticanonical,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cones: Option<Cones>,
    pub facts: Facts,
}

fn keyed(basis: &[usize], values: &[i64]) -> BTreeMap<usize, i64> {
    basis.iter().copied().zip(values.iter().copied()).collect()
}

fn divisor_json(basis: &[usize], d: &DivisorClass) -> PullbackBasis {
    PullbackBasis {
        pullback: keyed(basis, &d.pullback_coeffs),
        exceptional: d.exceptional_coeff,
    }
}

fn curve_json(basis: &[usize], k: &CurveClass) -> CurveBasis {
    CurveBasis {
        tilde: keyed(basis, &k.tilde_coeffs),
        e: k.e_coeff,
    }
}

impl ClassifyReport {
    pub fn build(bl: &BlowUp, with_cones: bool) -> Result<Self> {
        let fv = bl.flag_variety();
        let basis = fv.picard_basis();
        let report = bl.classify();
        let k = bl.anticanonical_class()?;
        let cone_report = bl.cones();
        let cones = if with_cones {
            Some(Cones {
                nef_generators: cone_report
                    .nef_generators
                    .iter()
                    .map(|d| divisor_json(&basis, d))
                    .collect(),
                mori_generators: cone_report
                    .mori_generators
                    .iter()
                    .map(|c| curve_json(&basis, c))
                    .collect(),
                intersection_matrix: bl.intersection_matrix()?,
            })
        } else {
            None
        };
        Ok(ClassifyReport {
            input: InputEcho::new(fv, Some(bl.codim())),
            betas: report.betas.as_map().clone(),
            margins: report.margins,
            verdict: report.verdict,
            anticanonical_big: report.anticanonical_big,
            anticanonical: Anticanonical {
                basis1: divisor_json(&basis, &k.divisor),
                basis2: NefBasis {
                    nef: keyed(&basis, &k.nef_basis.per_alpha),
                    h_minus_e: k.nef_basis.h_minus_e,
                },
            },
            cones,
            facts: Facts {
                gg_equals_nef: cone_report.globally_generated_equals_nef,
                h_minus_e_big: cone_report.h_minus_e_is_big,
            },
        })
    }
}

/// One row of a sweep over flag varieties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub input: InputEcho,
    pub betas: BTreeMap<usize, i64>,
    /// Largest codimension with a Fano blow-up: `min β_α + 1`.
    pub fano_max_codim: i64,
    /// Codimension where the blow-up is weak-Fano but not Fano: `min β_α + 2`.
    pub weak_fano_boundary: i64,
}

impl TableRow {
    pub fn build(fv: &FlagVariety) -> Self {
        let betas = fv.beta_values();
        let min = betas.min();
        TableRow {
            input: InputEcho::new(fv, None),
            betas: betas.as_map().clone(),
            fano_max_codim: min + 1,
            weak_fano_boundary: min + 2,
        }
    }
}

/// Verdict for every admissible codimension `2..=dim X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimSweep {
    pub input: InputEcho,
    pub betas: BTreeMap<usize, i64>,
    pub verdicts: Vec<(i64, Verdict)>,
}

impl CodimSweep {
    pub fn build(fv: &FlagVariety) -> Result<Self> {
        let verdicts = (2..=fv.dimension())
            .map(|c| Ok((c, BlowUp::new(fv.clone(), c)?.classify().verdict)))
            .collect::<Result<_>>()?;
        Ok(CodimSweep {
            input: InputEcho::new(fv, None),
            betas: fv.beta_values().as_map().clone(),
            verdicts,
        })
    }
}
