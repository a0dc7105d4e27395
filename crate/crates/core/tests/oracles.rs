//! Cross-checks against independent brute-force computations.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use blowup_core::weyl::{self, brute_force_group, OracleElement};
use blowup_core::{
    flag_variety, pairing, Coroot, Family, ParabolicSubset, Root, RootSystem, TypeSpec, Weight,
    WeylWord,
};

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(TypeSpec::new(f, n).unwrap()).unwrap()
}

/// Roots as the Weyl orbit of the simple roots, by repeated reflection in the
/// ambient symmetrized form (no string criterion, no Cartan closure).
fn orbit_roots(rs: &RootSystem) -> BTreeSet<Vec<i64>> {
    let n = rs.rank();
    let mut seen: BTreeSet<Vec<i64>> = (1..=n).map(|i| Root::unit(n, i).into_coeffs()).collect();
    let mut frontier: Vec<Vec<i64>> = seen.iter().cloned().collect();
    let sym = |x: &[i64], y: &[i64]| -> i64 {
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] * y[j] * rs.symmetrizers()[i] * rs.cartan().get(i, j);
            }
        }
        acc
    };
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            let alpha = Root::unit(n, i + 1).into_coeffs();
            let k = 2 * sym(&beta, &alpha) / sym(&alpha, &alpha);
            let mut image = beta.clone();
            image[i] -= k;
            if seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    seen
}

#[test]
fn closure_matches_weyl_orbit() {
    for spec in TypeSpec::all_up_to(8) {
        let r = RootSystem::new(spec).unwrap();
        let orbit = orbit_roots(&r);
        let positive: BTreeSet<Vec<i64>> = orbit
            .iter()
            .filter(|v| v.iter().all(|&x| x >= 0))
            .cloned()
            .collect();
        assert_eq!(positive.len() * 2, orbit.len(), "{spec}");
        let closure: BTreeSet<Vec<i64>> = r
            .positive_roots()
            .iter()
            .map(|x| x.coeffs().to_vec())
            .collect();
        assert_eq!(closure, positive, "{spec}");
    }
}

#[test]
fn g2_roots_from_oracle() {
    let g2 = rs(Family::G, 2);
    let orbit = orbit_roots(&g2);
    assert_eq!(orbit.len(), 12);
    assert!(orbit.contains(&vec![3, 2]));
    assert_eq!(g2.highest_root(), &Root::new(vec![3, 2]));
}

/// Coroot via the ambient form `2β/(β,β)` written in simple-coroot coordinates,
/// computed with rationals by hand rather than through `coroot_of`.
fn coroot_by_form(rs: &RootSystem, beta: &Root) -> Coroot {
    let n = rs.rank();
    let d = rs.symmetrizers();
    let mut norm = 0;
    for i in 0..n {
        for j in 0..n {
            norm += beta.coeffs()[i] * beta.coeffs()[j] * d[i] * rs.cartan().get(i, j);
        }
    }
    // α_i^∨ = α_i / d_i, so β^∨ = Σ (2 k_i d_i / (β,β)) α_i^∨.
    Coroot::new(
        (0..n)
            .map(|i| {
                let num = 2 * beta.coeffs()[i] * d[i];
                assert_eq!(num % norm, 0);
                num / norm
            })
            .collect(),
    )
}

#[test]
fn coroot_action_matches_reflected_root() {
    // s_i(β)^∨ = s_i(β^∨) for every root and every simple reflection.
    for spec in TypeSpec::all_up_to(6) {
        let r = RootSystem::new(spec).unwrap();
        for beta in r.positive_roots() {
            let cb = r.coroot_of(beta).unwrap();
            assert_eq!(cb, coroot_by_form(&r, beta), "{spec} {beta}");
            for i in 1..=r.rank() {
                let lhs = r
                    .coroot_of(&weyl::reflect_root(i, beta, &r).unwrap())
                    .unwrap();
                let rhs = weyl::reflect_coroot(i, &cb, &r).unwrap();
                assert_eq!(lhs, rhs, "{spec} s{i} {beta}");
            }
        }
    }
}

#[test]
fn b2_coroot_reflection_in_oracle_orbit() {
    let b2 = rs(Family::B, 2);
    let image = weyl::reflect_coroot(2, &Coroot::unit(2, 1), &b2).unwrap();
    let orbit_coroots: BTreeSet<Coroot> = orbit_roots(&b2)
        .into_iter()
        .map(|v| coroot_by_form(&b2, &Root::new(v)))
        .collect();
    assert!(orbit_coroots.contains(&image));
    assert_eq!(image, Coroot::new(vec![1, 1]));
}

fn oracle_parabolic(group: &[OracleElement], par: &ParabolicSubset) -> Vec<OracleElement> {
    group
        .iter()
        .filter(|e| e.word.letters().iter().all(|&i| par.contains(i)))
        .cloned()
        .collect()
}

fn oracle_types() -> Vec<RootSystem> {
    [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::G, 2),
    ]
    .into_iter()
    .map(|(f, n)| rs(f, n))
    .collect()
}

#[test]
fn longest_element_matches_oracle() {
    for r in oracle_types() {
        let group = brute_force_group(&r).unwrap();
        for par in ParabolicSubset::all_proper(r.rank())
            .into_iter()
            .chain([ParabolicSubset::full(r.rank())])
        {
            let sub = oracle_parabolic(&group, &par);
            let longest = sub.iter().max_by_key(|e| e.word.len()).unwrap();
            let w0 = weyl::longest_element(&par, &r).unwrap();
            // W2: length equals the number of roots supported on S_P.
            let levi = r.positive_roots_supported_on(&par.members()).len();
            assert_eq!(weyl::length(&w0, &r).unwrap(), levi);
            assert_eq!(w0.len(), longest.word.len());
            // Same group element.
            assert_eq!(weyl::act(&w0, &r.rho(), &r).unwrap(), longest.rho_image);
            // W1: involution.
            for i in 1..=r.rank() {
                let w = r.fundamental_weight(i).unwrap();
                let twice = weyl::act(&w0.concat(&w0), &w, &r).unwrap();
                assert_eq!(twice, w);
            }
        }
    }
}

#[test]
fn coset_counts_match_oracle() {
    for r in oracle_types() {
        let group = brute_force_group(&r).unwrap();
        for par in ParabolicSubset::all_proper(r.rank()) {
            let wp = oracle_parabolic(&group, &par).len();
            let reps = weyl::enumerate_coset_reps(&par, &r, None).unwrap();
            assert_eq!(reps.len() * wp, group.len(), "{} {:?}", r.spec(), par);
            for w in &reps {
                assert_eq!(weyl::length(w, &r).unwrap(), w.len());
            }
        }
    }
}

#[test]
fn a2_coset_reps_are_oracle_elements() {
    let a2 = rs(Family::A, 2);
    let group = brute_force_group(&a2).unwrap();
    let par = ParabolicSubset::new([2], 2).unwrap();
    let reps = weyl::enumerate_coset_reps(&par, &a2, Some(2)).unwrap();
    assert_eq!(reps.len(), 3);
    assert_eq!(group.len() / 2, 3);
    let lengths: Vec<usize> = reps.iter().map(|w| w.len()).collect();
    assert_eq!(lengths, vec![0, 1, 2]);
}

#[test]
fn involutions_square_to_identity() {
    for r in oracle_types() {
        let group = brute_force_group(&r).unwrap();
        let rho = r.rho();
        for el in &group {
            let twice = el.apply(&el.apply(&rho));
            if twice == rho {
                for i in 1..=r.rank() {
                    let w = r.fundamental_weight(i).unwrap();
                    let once = weyl::act(&el.word, &w, &r).unwrap();
                    assert_eq!(weyl::act(&el.word, &once, &r).unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn a2_longest_word_is_s1s2s1() {
    let a2 = rs(Family::A, 2);
    let group = brute_force_group(&a2).unwrap();
    let longest = group.iter().max_by_key(|e| e.word.len()).unwrap();
    assert_eq!(longest.rho_image, Weight::new(vec![-1, -1]));
    let w0 = weyl::longest_element(&ParabolicSubset::full(2), &a2).unwrap();
    assert_eq!(w0, WeylWord::new(vec![1, 2, 1]));
}

/// `β_α` by brute force: apply the longest element of `W_P` found by the oracle.
fn oracle_betas(r: &RootSystem, par: &ParabolicSubset) -> Vec<i64> {
    let group = brute_force_group(r).unwrap();
    let sub = oracle_parabolic(&group, par);
    let longest = sub.iter().max_by_key(|e| e.word.len()).unwrap();
    par.complement(r.rank())
        .into_iter()
        .map(|a| pairing(&longest.rho_image, &Coroot::unit(r.rank(), a)).unwrap())
        .collect()
}

#[test]
fn b3_betas_from_oracle() {
    let b3 = rs(Family::B, 3);
    let par = ParabolicSubset::new([1, 2], 3).unwrap();
    // Frozen from the oracle: B3 with S_P = {1, 2} is the 6-dim spinor-type
    // quotient SO(7)/P_3 ≅ OG(3,7) with -K = 6 ϖ_3.
    let expected = oracle_betas(&b3, &par);
    assert_eq!(expected, vec![5]);
    let fv = flag_variety(Family::B, 3, &[1, 2]).unwrap();
    assert_eq!(fv.beta_values().values(), expected);
    assert_eq!(fv.dimension(), 6);
}

#[test]
fn betas_match_oracle_everywhere_small() {
    for r in oracle_types() {
        for par in ParabolicSubset::all_proper(r.rank()) {
            let fv = blowup_core::FlagVariety::new(r.clone(), par.clone()).unwrap();
            assert_eq!(
                fv.beta_values().values(),
                oracle_betas(&r, &par),
                "{} {:?}",
                r.spec(),
                par
            );
        }
    }
}

#[test]
fn b2_anticanonical_from_oracle() {
    let b2 = rs(Family::B, 2);
    let par = ParabolicSubset::new([1], 2).unwrap();
    let beta = oracle_betas(&b2, &par)[0];
    let fv = flag_variety(Family::B, 2, &[1]).unwrap();
    assert_eq!(fv.anticanonical_weight(), Weight::new(vec![0, 1 + beta]));
    assert_eq!(beta, 3);
}

#[test]
fn longest_word_choice_does_not_matter() {
    // F3: any reduced word of w_{0,P} gives the same betas; use the oracle's word.
    for r in oracle_types() {
        let group = brute_force_group(&r).unwrap();
        for par in ParabolicSubset::all_proper(r.rank()) {
            let sub = oracle_parabolic(&group, &par);
            let longest = sub.iter().max_by_key(|e| e.word.len()).unwrap();
            let via_oracle_word = weyl::act(&longest.word, &r.rho(), &r).unwrap();
            let fv = blowup_core::FlagVariety::new(r.clone(), par.clone()).unwrap();
            assert_eq!(fv.longest_rho(), via_oracle_word);
        }
    }
}
