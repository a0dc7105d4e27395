//! Closed-form classification laws for Grassmannians, cominuscule
//! Grassmannians and full flag varieties.
//!
//! Nothing here touches Weyl-group words except [`kannan_saha_check`]; the
//! laws are plain inequalities, so agreement with [`crate::blowup`] is a
//! two-path check.

use std::collections::BTreeSet;

use crate::blowup::Verdict;
use crate::error::{Error, Result};
use crate::rootsys::{Coroot, RootSystem};
use crate::weyl::{self, ParabolicSubset};

/// Verdict from a threshold `t`: Fano iff `c < t`, weak-Fano boundary at `c = t`.
fn threshold_verdict(c: i64, t: i64) -> Verdict {
    match c.cmp(&t) {
        std::cmp::Ordering::Less => Verdict::Fano,
        std::cmp::Ordering::Equal => Verdict::WeakFanoNotFano,
        std::cmp::Ordering::Greater => Verdict::NotWeakFano,
    }
}

fn check_grassmannian(r: i64, n: i64) -> Result<()> {
    if r < 1 || r > n - 1 {
        return Err(Error::OutOfRange(format!(
            "Gr({r},{n}) needs 1 <= r <= n-1"
        )));
    }
    Ok(())
}

/// `Bl_Z Gr(r, n)` for a smooth Schubert `Z` of codimension `c`:
/// Fano iff `c <= n`, weak-Fano but not Fano iff `c = n + 1`.
pub fn grassmannian_classify(r: i64, n: i64, c: i64) -> Result<Verdict> {
    check_grassmannian(r, n)?;
    let dim = r * (n - r);
    if c < 2 || c > dim {
        return Err(Error::OutOfRange(format!(
            "codimension {c} outside 2..={dim} for Gr({r},{n})"
        )));
    }
    Ok(threshold_verdict(c, n + 1))
}

/// Blow-up of `Gr(r, n)` at a point, decided by comparing `n + 1` with `r(n - r)`.
pub fn grassmannian_point_classify(r: i64, n: i64) -> Result<Verdict> {
    check_grassmannian(r, n)?;
    let dim = r * (n - r);
    if dim < 2 {
        return Err(Error::OutOfRange(format!(
            "a point of Gr({r},{n}) has codimension {dim} < 2"
        )));
    }
    Ok(threshold_verdict(dim, n + 1))
}

/// Nodes whose simple root has coefficient 1 in the highest root.
pub fn cominuscule_nodes(rs: &RootSystem) -> BTreeSet<usize> {
    rs.highest_root()
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k == 1)
        .map(|(i, _)| i + 1)
        .collect()
}

fn require_cominuscule(rs: &RootSystem, node: usize) -> Result<()> {
    if cominuscule_nodes(rs).contains(&node) {
        Ok(())
    } else {
        Err(Error::NotCominuscule {
            node,
            type_name: rs.spec().to_string(),
        })
    }
}

/// `β_{α_r}` on a cominuscule Grassmannian: `<ρ, α_0^∨>`, the coroot height
/// of the highest root. Equals `ht(α_0)` exactly when the type is simply laced.
pub fn cominuscule_beta(rs: &RootSystem) -> i64 {
    rs.highest_root_coroot_height()
}

/// Dimension of the cominuscule Grassmannian `G/P_node`: the number of
/// positive roots with coefficient 1 on `node`.
pub fn cominuscule_dimension(rs: &RootSystem, node: usize) -> Result<i64> {
    require_cominuscule(rs, node)?;
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| r.coeffs()[node - 1] > 0)
        .count() as i64)
}

/// Fano iff `c < <ρ, α_0^∨> + 2`, weak-Fano boundary at equality.
pub fn cominuscule_classify(rs: &RootSystem, node: usize, c: i64) -> Result<Verdict> {
    let dim = cominuscule_dimension(rs, node)?;
    if c < 2 || c > dim {
        return Err(Error::OutOfRange(format!(
            "codimension {c} outside 2..={dim} for {} / P_{node}",
            rs.spec()
        )));
    }
    Ok(threshold_verdict(c, cominuscule_beta(rs) + 2))
}

/// `G/B`: every `β_α = 1`, so Fano iff `c < 3`.
pub fn full_flag_classify(rs: &RootSystem, c: i64) -> Result<Verdict> {
    let dim = rs.positive_roots().len() as i64;
    if c < 2 || c > dim {
        return Err(Error::OutOfRange(format!(
            "codimension {c} outside 2..={dim} for {} / B",
            rs.spec()
        )));
    }
    Ok(threshold_verdict(c, 3))
}

/// Checks `w_{0, S∖{α_r}}(α_r^∨) = α_0^∨` for a cominuscule node `r`.
pub fn kannan_saha_check(rs: &RootSystem, node: usize) -> Result<bool> {
    require_cominuscule(rs, node)?;
    let par = ParabolicSubset::maximal(rs.rank(), node)?;
    let w0 = weyl::longest_element(&par, rs)?;
    let image: Coroot = weyl::act(&w0, &rs.simple_coroot(node)?, rs)?;
    Ok(image == rs.highest_root_coroot())
}
