//! Generalized flag varieties `G/P`: dimension, Picard basis, `β_α`,
//! anticanonical weight and Schubert codimension.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{pairing, RootSystem, Weight};
use crate::weyl::{self, act, is_minimal_coset_rep, ParabolicSubset, WeylWord};

/// `G/P` for a simple `G` and a proper parabolic `P ⊃ B` given by `S_P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVariety {
    rs: RootSystem,
    par: ParabolicSubset,
    longest: WeylWord,
}

/// `β_α = <w_{0,P}(ρ), α^∨>` for each `α ∈ S ∖ S_P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaVector(BTreeMap<usize, i64>);

impl BetaVector {
    pub fn new(values: BTreeMap<usize, i64>) -> Self {
        BetaVector(values)
    }

    /// `β_α`; nodes in `S_P` have no `β` and are an error.
    pub fn get(&self, node: usize) -> Result<i64> {
        self.0
            .get(&node)
            .copied()
            .ok_or(Error::NodeInParabolic(node))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.values().copied().collect()
    }

    pub fn min(&self) -> i64 {
        self.0
            .values()
            .copied()
            .min()
            .expect("complement is nonempty")
    }

    pub fn as_map(&self) -> &BTreeMap<usize, i64> {
        &self.0
    }
}

/// A Schubert variety `Z_w ⊂ G/P` recorded by its word and (co)dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertDatum {
    pub word: WeylWord,
    pub dim: i64,
    pub codim: i64,
    /// Caller-supplied: the engine never decides smoothness.
    pub smooth_asserted: bool,
}

impl FlagVariety {
    pub fn new(rs: RootSystem, par: ParabolicSubset) -> Result<Self> {
        let par = ParabolicSubset::new(par.members(), rs.rank())?;
        if par.len() == rs.rank() {
            return Err(Error::DegenerateParabolic);
        }
        let longest = weyl::longest_element(&par, &rs)?;
        Ok(FlagVariety { rs, par, longest })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.par
    }

    /// Reduced word for `w_{0,P}`.
    pub fn longest_word(&self) -> &WeylWord {
        &self.longest
    }

    /// `|R⁺| - |R_P⁺|`.
    pub fn dimension(&self) -> i64 {
        let levi = self
            .rs
            .positive_roots_supported_on(&self.par.members())
            .len();
        (self.rs.positive_roots().len() - levi) as i64
    }

    /// `S ∖ S_P` ascending; indexes `D_α` and `C_α`.
    pub fn picard_basis(&self) -> Vec<usize> {
        self.par.complement(self.rs.rank())
    }

    /// Coefficients of `L_λ` over `{D_α}` for a character `λ` of `P`.
    pub fn weight_to_divisor(&self, lambda: &Weight) -> Result<Vec<i64>> {
        self.rs.check_rank(lambda.rank())?;
        for i in self.par.members() {
            let value = lambda.coeffs()[i - 1];
            if value != 0 {
                return Err(Error::NotAPCharacter { index: i, value });
            }
        }
        Ok(self
            .picard_basis()
            .into_iter()
            .map(|a| lambda.coeffs()[a - 1])
            .collect())
    }

    /// `w_{0,P}(ρ)`.
    pub fn longest_rho(&self) -> Weight {
        act(&self.longest, &self.rs.rho(), &self.rs).expect("letters in range")
    }

    pub fn beta_values(&self) -> BetaVector {
        let w0_rho = self.longest_rho();
        BetaVector(
            self.picard_basis()
                .into_iter()
                .map(|a| {
                    let coroot = self.rs.simple_coroot(a).expect("node in range");
                    (a, pairing(&w0_rho, &coroot).expect("same rank"))
                })
                .collect(),
        )
    }

    /// `ρ + w_{0,P}(ρ)`, the weight of `-K_{G/P}`.
    pub fn anticanonical_weight(&self) -> Weight {
        let w0_rho = self.longest_rho();
        Weight::new(
            self.rs
                .rho()
                .coeffs()
                .iter()
                .zip(w0_rho.coeffs())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Dimension `ℓ(w)` and codimension of the Schubert variety of `w ∈ W^P`.
    pub fn schubert_codim(&self, word: &WeylWord) -> Result<SchubertDatum> {
        if !is_minimal_coset_rep(word, &self.par, &self.rs)? {
            return Err(Error::NotMinimalRep(word.letters().to_vec()));
        }
        let dim = weyl::length(word, &self.rs)? as i64;
        Ok(SchubertDatum {
            word: word.clone(),
            dim,
            codim: self.dimension() - dim,
            smooth_asserted: false,
        })
    }
}
