//! Divisor and curve classes on the blow-up `Bl_Z X` of a flag variety along
//! a smooth Schubert variety of codimension `c`, the nef and Mori cone
//! generators, the anticanonical class, and the Fano / weak-Fano verdict.
//!
//! Divisors are written over `{Bl*D_α} ∪ {E_Z}` and curves over
//! `{C̃_α} ∪ {e}` with `C̃_α = Bl*C_α - e`, both indexed by `S ∖ S_P`.
//! The intersection table is
//!
//! ```text
//! Bl*D_α · Bl*C_β = δ_αβ    Bl*D_α · e = 0
//! E_Z    · Bl*C_β = 0       E_Z    · e = -1
//! ```
//!
//! With `H = Σ Bl*D_α`, a divisor `Σ a_α Bl*D_α + b E_Z` equals
//! `Σ (a_α + b) Bl*D_α + (-b)(H - E_Z)`; nef means both kinds of coordinate
//! are `≥ 0`, ample means `> 0`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::flag::{BetaVector, FlagVariety, SchubertDatum};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    /// Coefficients of `Bl*D_α`, in Picard-basis order.
    pub pullback_coeffs: Vec<i64>,
    /// Coefficient of `E_Z`.
    pub exceptional_coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    /// Coefficients of `C̃_α`, in Picard-basis order.
    pub tilde_coeffs: Vec<i64>,
    /// Coefficient of `e`, the class of a line in a fibre of `E_Z → Z`.
    pub e_coeff: i64,
}

/// A divisor in the nef-cone basis `{Bl*D_α} ∪ {H - E_Z}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NefCoordinates {
    pub per_alpha: Vec<i64>,
    pub h_minus_e: i64,
}

impl DivisorClass {
    pub fn new(pullback_coeffs: Vec<i64>, exceptional_coeff: i64) -> Self {
        DivisorClass {
            pullback_coeffs,
            exceptional_coeff,
        }
    }

    pub fn zero(picard_rank: usize) -> Self {
        DivisorClass::new(vec![0; picard_rank], 0)
    }

    /// `Bl*D_α` at 0-based position `k` of the Picard basis.
    pub fn pullback(picard_rank: usize, k: usize) -> Self {
        let mut v = vec![0; picard_rank];
        v[k] = 1;
        DivisorClass::new(v, 0)
    }

    pub fn exceptional(picard_rank: usize) -> Self {
        DivisorClass::new(vec![0; picard_rank], 1)
    }

    /// `H - E_Z`.
    pub fn h_minus_e(picard_rank: usize) -> Self {
        DivisorClass::new(vec![1; picard_rank], -1)
    }

    pub fn picard_rank(&self) -> usize {
        self.pullback_coeffs.len()
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        Ok(DivisorClass::new(
            self.pullback_coeffs
                .iter()
                .map(|&a| arith::mul(a, k))
                .collect::<Result<_>>()?,
            arith::mul(self.exceptional_coeff, k)?,
        ))
    }

    pub fn to_nef_basis(&self) -> Result<NefCoordinates> {
        let b = self.exceptional_coeff;
        Ok(NefCoordinates {
            per_alpha: self
                .pullback_coeffs
                .iter()
                .map(|&a| arith::add(a, b))
                .collect::<Result<_>>()?,
            h_minus_e: arith::mul(b, -1)?,
        })
    }

    pub fn is_nef(&self) -> bool {
        self.to_nef_basis()
            .map(|n| n.h_minus_e >= 0 && n.per_alpha.iter().all(|&x| x >= 0))
            .unwrap_or(false)
    }

    pub fn is_ample(&self) -> bool {
        self.to_nef_basis()
            .map(|n| n.h_minus_e > 0 && n.per_alpha.iter().all(|&x| x > 0))
            .unwrap_or(false)
    }

    /// Globally generated line bundles on `Bl_Z X` are exactly the nef ones.
    pub fn is_globally_generated(&self) -> bool {
        self.is_nef()
    }
}

impl NefCoordinates {
    pub fn to_divisor(&self) -> Result<DivisorClass> {
        let b = arith::mul(self.h_minus_e, -1)?;
        Ok(DivisorClass::new(
            self.per_alpha
                .iter()
                .map(|&x| arith::sub(x, b))
                .collect::<Result<_>>()?,
            b,
        ))
    }
}

impl CurveClass {
    pub fn new(tilde_coeffs: Vec<i64>, e_coeff: i64) -> Self {
        CurveClass {
            tilde_coeffs,
            e_coeff,
        }
    }

    /// `C̃_α` at 0-based position `k`.
    pub fn tilde(picard_rank: usize, k: usize) -> Self {
        let mut v = vec![0; picard_rank];
        v[k] = 1;
        CurveClass::new(v, 0)
    }

    pub fn fibre_line(picard_rank: usize) -> Self {
        CurveClass::new(vec![0; picard_rank], 1)
    }
}

/// Intersection number `d · k`, expanding `C̃_α = Bl*C_α - e` first.
pub fn intersect(d: &DivisorClass, k: &CurveClass) -> Result<i64> {
    if d.pullback_coeffs.len() != k.tilde_coeffs.len() {
        return Err(Error::BasisMismatch {
            divisor: d.pullback_coeffs.len(),
            curve: k.tilde_coeffs.len(),
        });
    }
    // k = Σ t_α Bl*C_α + (u - Σ t_α) e
    let t_sum = arith::sum(&k.tilde_coeffs)?;
    let e_total = arith::sub(k.e_coeff, t_sum)?;
    let pullback_part = arith::dot(&d.pullback_coeffs, &k.tilde_coeffs)?;
    // E_Z · e = -1, all other cross terms vanish.
    let exceptional_part = arith::mul(arith::mul(d.exceptional_coeff, e_total)?, -1)?;
    arith::add(pullback_part, exceptional_part)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Fano,
    WeakFanoNotFano,
    NotWeakFano,
}

impl Verdict {
    /// Verdict from the margins `β_α - c + 2`.
    pub fn from_margins<I: IntoIterator<Item = i64>>(margins: I) -> Self {
        let margins: Vec<i64> = margins.into_iter().collect();
        if margins.iter().all(|&m| m > 0) {
            Verdict::Fano
        } else if margins.iter().all(|&m| m >= 0) {
            Verdict::WeakFanoNotFano
        } else {
            Verdict::NotWeakFano
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Fano => "FANO",
            Verdict::WeakFanoNotFano => "WEAK_FANO_NOT_FANO",
            Verdict::NotWeakFano => "NOT_WEAK_FANO",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Bigness of `-K`. `False` is never produced: only a sufficient criterion is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bigness {
    True,
    False,
    Unknown,
}

impl Bigness {
    pub fn as_str(self) -> &'static str {
        match self {
            Bigness::True => "true",
            Bigness::False => "false",
            Bigness::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoReport {
    pub betas: BetaVector,
    pub codim: i64,
    /// `β_α - c + 2` per node of `S ∖ S_P`.
    pub margins: BTreeMap<usize, i64>,
    pub verdict: Verdict,
    pub anticanonical_big: Bigness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReport {
    pub nef_generators: Vec<DivisorClass>,
    pub mori_generators: Vec<CurveClass>,
    /// Stored fact: the globally generated cone equals the nef cone.
    pub globally_generated_equals_nef: bool,
    /// Stored fact: `H - E_Z` is big.
    pub h_minus_e_is_big: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnticanonicalClass {
    /// `Σ (1 + β_α) Bl*D_α - (c - 1) E_Z`.
    pub divisor: DivisorClass,
    /// `Σ (β_α + 2 - c) Bl*D_α + (c - 1)(H - E_Z)`.
    pub nef_basis: NefCoordinates,
}

/// `Bl_Z X` for a flag variety `X` and a smooth Schubert centre of codimension `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowUp {
    fv: FlagVariety,
    codim: i64,
    betas: BetaVector,
}

impl BlowUp {
    /// Requires `2 <= c <= dim X`.
    pub fn new(fv: FlagVariety, codim: i64) -> Result<Self> {
        let max = fv.dimension();
        if codim < 2 || codim > max {
            return Err(Error::CodimOutOfRange { codim, min: 2, max });
        }
        let betas = fv.beta_values();
        Ok(BlowUp { fv, codim, betas })
    }

    /// Reads `c` from a Schubert datum.
    pub fn along(fv: FlagVariety, z: &SchubertDatum) -> Result<Self> {
        BlowUp::new(fv, z.codim)
    }

    pub fn flag_variety(&self) -> &FlagVariety {
        &self.fv
    }

    pub fn codim(&self) -> i64 {
        self.codim
    }

    pub fn betas(&self) -> &BetaVector {
        &self.betas
    }

    pub fn picard_rank(&self) -> usize {
        self.betas.as_map().len()
    }

    /// `{Bl*D_α} ∪ {H - E_Z}`.
    pub fn nef_generators(&self) -> Vec<DivisorClass> {
        let n = self.picard_rank();
        (0..n)
            .map(|k| DivisorClass::pullback(n, k))
            .chain(std::iter::once(DivisorClass::h_minus_e(n)))
            .collect()
    }

    /// `{C̃_α} ∪ {e}`.
    pub fn mori_generators(&self) -> Vec<CurveClass> {
        let n = self.picard_rank();
        (0..n)
            .map(|k| CurveClass::tilde(n, k))
            .chain(std::iter::once(CurveClass::fibre_line(n)))
            .collect()
    }

    /// Rows: nef generators; columns: Mori generators.
    pub fn intersection_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let curves = self.mori_generators();
        self.nef_generators()
            .iter()
            .map(|d| curves.iter().map(|k| intersect(d, k)).collect())
            .collect()
    }

    pub fn cones(&self) -> ConeReport {
        ConeReport {
            nef_generators: self.nef_generators(),
            mori_generators: self.mori_generators(),
            globally_generated_equals_nef: true,
            h_minus_e_is_big: true,
        }
    }

    pub fn anticanonical_class(&self) -> Result<AnticanonicalClass> {
        let c = self.codim;
        let divisor = DivisorClass::new(
            self.betas.values().iter().map(|b| 1 + b).collect(),
            -(c - 1),
        );
        let nef_basis = NefCoordinates {
            per_alpha: self.betas.values().iter().map(|b| b + 2 - c).collect(),
            h_minus_e: c - 1,
        };
        if divisor.to_nef_basis()? != nef_basis || nef_basis.to_divisor()? != divisor {
            unreachable!("change of basis disagrees with the closed form");
        }
        Ok(AnticanonicalClass { divisor, nef_basis })
    }

    pub fn margins(&self) -> BTreeMap<usize, i64> {
        self.betas
            .iter()
            .map(|(a, b)| (a, b - self.codim + 2))
            .collect()
    }

    pub fn classify(&self) -> FanoReport {
        let margins = self.margins();
        let verdict = Verdict::from_margins(margins.values().copied());
        let anticanonical_big = if margins.values().all(|&m| m >= 0) {
            Bigness::True
        } else {
            Bigness::Unknown
        };
        FanoReport {
            betas: self.betas.clone(),
            codim: self.codim,
            margins,
            verdict,
            anticanonical_big,
        }
    }
}

/// Shorthand for `BlowUp::new(fv, c)?.classify()`.
pub fn classify(fv: &FlagVariety, codim: i64) -> Result<FanoReport> {
    Ok(BlowUp::new(fv.clone(), codim)?.classify())
}
