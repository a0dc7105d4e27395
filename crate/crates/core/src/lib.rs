//! Exact combinatorics for blow-ups of generalized flag varieties `G/P` along
//! smooth Schubert varieties: root systems, Weyl-group words, `β_α`
//! invariants, nef and Mori cone generators, the anticanonical class, and
//! the Fano / weak-Fano verdict, together with closed-form laws for
//! Grassmannians, cominuscule Grassmannians and full flag varieties.
//!
//! Node labels follow Bourbaki; see [`conventions`].

mod arith;
pub mod blowup;
pub mod conventions;
pub mod error;
pub mod flag;
pub mod report;
pub mod rootsys;
pub mod special;
pub mod weyl;

pub use blowup::{
    intersect, AnticanonicalClass, Bigness, BlowUp, ConeReport, CurveClass, DivisorClass,
    FanoReport, NefCoordinates, Verdict,
};
pub use error::{Error, Result};
pub use flag::{BetaVector, FlagVariety, SchubertDatum};
pub use rootsys::{
    build_root_system, height, pairing, CartanMatrix, Coroot, Family, Root, RootSystem, TypeSpec,
    Weight,
};
pub use weyl::{ParabolicSubset, WeylWord};

/// Builds `G/P` from a type and the list of nodes in `S_P`.
pub fn flag_variety(family: Family, rank: usize, parabolic: &[usize]) -> Result<FlagVariety> {
    let rs = RootSystem::new(TypeSpec::new(family, rank)?)?;
    let par = ParabolicSubset::new(parabolic.iter().copied(), rank)?;
    FlagVariety::new(rs, par)
}
