//! Built-in invariant suites for `flagblow check`.
//!
//! Every suite runs over a caller-supplied list of root systems and filters
//! it down to its own scale, so a single corrupted system poisons exactly
//! the suites that touch it.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::panic::{self, AssertUnwindSafe};

use blowup_core::rootsys::positive_roots_in_order;
use blowup_core::weyl::{self, brute_force_group, OracleElement};
use blowup_core::{
    intersect, pairing, special, BlowUp, CurveClass, Error, Family, FlagVariety, ParabolicSubset,
    Root, RootSystem, TypeSpec, Verdict, Weight,
};

use crate::{Outcome, EXIT_CHECK_FAILED, EXIT_OK};

/// Largest rank each group of suites visits.
const ROOT_RANK: usize = 8;
const WEYL_RANK: usize = 5;
const ORACLE_RANK: usize = 3;
const FLAG_RANK: usize = 6;
const BLOWUP_RANK: usize = 5;
const FULL_FLAG_RANK: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub id: &'static str,
    pub title: &'static str,
    /// Number of cases examined, or the first failure.
    pub result: Result<usize, String>,
}

impl CheckLine {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string())
    }
}

type Check = Result<usize, Fail>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Fail(format!($($fmt)+)));
        }
    };
}

fn upto(systems: &[RootSystem], max_rank: usize) -> impl Iterator<Item = &RootSystem> {
    systems.iter().filter(move |rs| rs.rank() <= max_rank)
}

fn with_full(rank: usize) -> Vec<ParabolicSubset> {
    let mut all = ParabolicSubset::all_proper(rank);
    all.push(ParabolicSubset::full(rank));
    all
}

fn i0(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        rs.cartan().validate(rs.symmetrizers())?;
        let mut sum = vec![0i64; rs.rank()];
        for r in rs.positive_roots() {
            let w = rs.root_as_weight(r)?;
            for (s, x) in sum.iter_mut().zip(w.coeffs()) {
                *s += x;
            }
        }
        ensure!(
            sum.iter().all(|&x| x == 2),
            "{}: sum of positive roots is {:?}, expected 2ρ",
            rs.spec(),
            sum
        );
        n += 1;
    }
    Ok(n)
}

fn i1(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        let r = rs.rank();
        let mut orders: Vec<Vec<usize>> = vec![(0..r).rev().collect()];
        for shift in 1..r {
            orders.push((0..r).map(|i| (i + shift) % r).collect());
        }
        for order in orders {
            let roots = positive_roots_in_order(rs.cartan(), &order)?;
            ensure!(
                roots.as_slice() == rs.positive_roots(),
                "{}: order {:?} changes the root set",
                rs.spec(),
                order
            );
            n += 1;
        }
    }
    Ok(n)
}

fn i2(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        for r in rs.positive_roots() {
            ensure!(
                r.coeffs().iter().all(|&k| k >= 0),
                "{}: mixed signs in {r}",
                rs.spec()
            );
            n += 1;
        }
    }
    Ok(n)
}

fn i3(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        let lhs = pairing(&rs.rho(), &rs.coroot_of(rs.highest_root())?)?;
        let ht = rs.highest_root().height();
        if rs.is_simply_laced() {
            ensure!(
                lhs == ht,
                "{}: <ρ, α_0^∨> = {lhs} but ht(α_0) = {ht}",
                rs.spec()
            );
        } else {
            ensure!(
                lhs < ht,
                "{}: <ρ, α_0^∨> = {lhs} not below ht(α_0) = {ht}",
                rs.spec()
            );
        }
        n += 1;
    }
    Ok(n)
}

fn i4(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        let images = rs
            .positive_roots()
            .iter()
            .map(|r| rs.root_as_weight(r))
            .collect::<Result<BTreeSet<Weight>, _>>()?;
        ensure!(
            images.len() == rs.positive_roots().len(),
            "{}: root_as_weight collides",
            rs.spec()
        );
        n += 1;
    }
    Ok(n)
}

fn i5(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK).filter(|rs| rs.is_simply_laced()) {
        for r in rs.positive_roots() {
            ensure!(
                rs.coroot_of(r)?.coeffs() == r.coeffs(),
                "{}: coroot of {r} differs",
                rs.spec()
            );
            n += 1;
        }
    }
    Ok(n)
}

fn w1(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, WEYL_RANK) {
        let mut probes = vec![rs.rho()];
        for i in 1..=rs.rank() {
            probes.push(rs.fundamental_weight(i)?);
        }
        for par in with_full(rs.rank()) {
            let w0 = weyl::longest_element(&par, rs)?;
            let sq = w0.concat(&w0);
            for p in &probes {
                ensure!(
                    weyl::act(&sq, p, rs)? == *p,
                    "{} {:?}: w0² moves {p}",
                    rs.spec(),
                    par.members()
                );
            }
            n += 1;
        }
    }
    Ok(n)
}

fn w2(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, WEYL_RANK) {
        for par in with_full(rs.rank()) {
            let w0 = weyl::longest_element(&par, rs)?;
            let levi = rs.positive_roots_supported_on(&par.members()).len();
            let len = weyl::length(&w0, rs)?;
            ensure!(
                len == levi,
                "{} {:?}: ℓ(w0) = {len}, |R_P+| = {levi}",
                rs.spec(),
                par.members()
            );
            n += 1;
        }
    }
    Ok(n)
}

fn w3(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, WEYL_RANK) {
        for par in ParabolicSubset::all_proper(rs.rank()) {
            let members = par.members();
            let w0 = weyl::longest_element(&par, rs)?;
            let mut others = BTreeSet::new();
            for beta in rs.positive_roots() {
                let image: Root = weyl::act(&w0, beta, rs)?;
                if beta.supported_on(&members) {
                    ensure!(
                        image.is_negative() && image.negated().supported_on(&members),
                        "{} {:?}: Levi root {beta} not sent to a negative Levi root",
                        rs.spec(),
                        members
                    );
                } else {
                    others.insert(image);
                }
            }
            let expected: BTreeSet<Root> = rs
                .positive_roots()
                .iter()
                .filter(|b| !b.supported_on(&members))
                .cloned()
                .collect();
            ensure!(
                others == expected,
                "{} {:?}: unipotent roots not permuted",
                rs.spec(),
                members
            );
            n += 1;
        }
    }
    Ok(n)
}

fn levi_part(group: &[OracleElement], par: &ParabolicSubset) -> usize {
    group
        .iter()
        .filter(|e| e.word.letters().iter().all(|&i| par.contains(i)))
        .count()
}

fn w4(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ORACLE_RANK) {
        let group = brute_force_group(rs)?;
        for par in ParabolicSubset::all_proper(rs.rank()) {
            let reps = weyl::enumerate_coset_reps(&par, rs, None)?;
            let wp = levi_part(&group, &par);
            ensure!(
                reps.len() * wp == group.len(),
                "{} {:?}: |W^P| = {}, |W_P| = {wp}, |W| = {}",
                rs.spec(),
                par.members(),
                reps.len(),
                group.len()
            );
            n += 1;
        }
    }
    Ok(n)
}

fn w5(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, WEYL_RANK) {
        for par in with_full(rs.rank()) {
            let mut words = vec![weyl::longest_element(&par, rs)?];
            if rs.rank() <= ORACLE_RANK && par.len() < rs.rank() {
                words.extend(weyl::enumerate_coset_reps(&par, rs, None)?);
            }
            for w in &words {
                ensure!(
                    weyl::length(w, rs)? == w.len(),
                    "{}: word {w} is not reduced",
                    rs.spec()
                );
                n += 1;
            }
        }
    }
    Ok(n)
}

fn flags(systems: &[RootSystem], max_rank: usize) -> Result<Vec<FlagVariety>, Fail> {
    let mut out = Vec::new();
    for rs in upto(systems, max_rank) {
        for par in ParabolicSubset::all_proper(rs.rank()) {
            out.push(FlagVariety::new(rs.clone(), par)?);
        }
    }
    Ok(out)
}

fn describe(fv: &FlagVariety) -> String {
    format!(
        "{} S_P={:?}",
        fv.root_system().spec(),
        fv.parabolic().members()
    )
}

fn f1(systems: &[RootSystem]) -> Check {
    let fvs = flags(systems, FLAG_RANK)?;
    for fv in &fvs {
        let k = fv.anticanonical_weight();
        for i in fv.parabolic().members() {
            ensure!(
                k.coeffs()[i - 1] == 0,
                "{}: -K weight {k} not a P-character",
                describe(fv)
            );
        }
    }
    Ok(fvs.len())
}

fn f2(systems: &[RootSystem]) -> Check {
    let fvs = flags(systems, FLAG_RANK)?;
    for fv in &fvs {
        ensure!(
            fv.beta_values().min() >= 1,
            "{}: some β below 1",
            describe(fv)
        );
    }
    Ok(fvs.len())
}

fn f3(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ORACLE_RANK) {
        let group = brute_force_group(rs)?;
        for par in ParabolicSubset::all_proper(rs.rank()) {
            let longest = group
                .iter()
                .filter(|e| e.word.letters().iter().all(|&i| par.contains(i)))
                .max_by_key(|e| e.word.len())
                .ok_or_else(|| Fail("empty parabolic subgroup".into()))?;
            let fv = FlagVariety::new(rs.clone(), par)?;
            let other = weyl::act(&longest.word, &rs.rho(), rs)?;
            ensure!(
                other == fv.longest_rho(),
                "{}: β depends on the reduced word ({} vs {})",
                describe(&fv),
                longest.word,
                fv.longest_word()
            );
            n += 1;
        }
    }
    Ok(n)
}

fn grassmannians(systems: &[RootSystem]) -> impl Iterator<Item = &RootSystem> {
    upto(systems, ROOT_RANK).filter(|rs| rs.spec().family() == Family::A)
}

fn f4(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in grassmannians(systems) {
        let big_n = rs.rank() as i64 + 1;
        for r in 1..=rs.rank() {
            let fv = FlagVariety::new(rs.clone(), ParabolicSubset::maximal(rs.rank(), r)?)?;
            let r = r as i64;
            ensure!(
                fv.dimension() == r * (big_n - r),
                "Gr({r},{big_n}): dim {}",
                fv.dimension()
            );
            ensure!(
                fv.beta_values().values() == vec![big_n - 1],
                "Gr({r},{big_n}): β = {:?}",
                fv.beta_values().values()
            );
            n += 1;
        }
    }
    Ok(n)
}

/// Runs `f` on every blow-up with `rank <= BLOWUP_RANK` and admissible `c`.
fn each_blowup(systems: &[RootSystem], mut f: impl FnMut(&BlowUp) -> Result<(), Fail>) -> Check {
    let mut n = 0;
    for fv in flags(systems, BLOWUP_RANK)? {
        for c in 2..=fv.dimension() {
            f(&BlowUp::new(fv.clone(), c)?)?;
            n += 1;
        }
    }
    Ok(n)
}

fn b1(systems: &[RootSystem]) -> Check {
    each_blowup(systems, |bl| {
        let m = bl.intersection_matrix()?;
        let ok = m
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)));
        ensure!(
            ok,
            "{} c={}: pairing {m:?}",
            describe(bl.flag_variety()),
            bl.codim()
        );
        Ok(())
    })
}

fn b2(systems: &[RootSystem]) -> Check {
    each_blowup(systems, |bl| {
        let k = bl.anticanonical_class()?;
        ensure!(
            k.nef_basis.to_divisor()? == k.divisor && k.divisor.to_nef_basis()? == k.nef_basis,
            "{} c={}: basis round trip fails",
            describe(bl.flag_variety()),
            bl.codim()
        );
        Ok(())
    })
}

fn b3(systems: &[RootSystem]) -> Check {
    each_blowup(systems, |bl| {
        let k = bl.anticanonical_class()?.divisor;
        let expected = if k.is_ample() {
            Verdict::Fano
        } else if k.is_nef() {
            Verdict::WeakFanoNotFano
        } else {
            Verdict::NotWeakFano
        };
        let got = bl.classify().verdict;
        ensure!(
            got == expected,
            "{} c={}: {got} vs cone test {expected}",
            describe(bl.flag_variety()),
            bl.codim()
        );
        Ok(())
    })
}

fn b4(systems: &[RootSystem]) -> Check {
    each_blowup(systems, |bl| {
        let k = bl.anticanonical_class()?.divisor;
        for s in 1..=3 {
            let ks = k.scaled(s)?;
            ensure!(
                ks.is_nef() == k.is_nef() && ks.is_ample() == k.is_ample(),
                "{} c={}: scaling by {s} changes positivity",
                describe(bl.flag_variety()),
                bl.codim()
            );
        }
        Ok(())
    })
}

fn b5(systems: &[RootSystem]) -> Check {
    each_blowup(systems, |bl| {
        let k = bl.anticanonical_class()?.divisor;
        let p = bl.picard_rank();
        let c = bl.codim();
        for (j, (_, beta)) in bl.betas().iter().enumerate() {
            let x = intersect(&k, &CurveClass::tilde(p, j))?;
            ensure!(
                x == beta - c + 2,
                "{} c={c}: -K·C~ = {x}, β = {beta}",
                describe(bl.flag_variety())
            );
        }
        let x = intersect(&k, &CurveClass::fibre_line(p))?;
        ensure!(
            x == c - 1,
            "{} c={c}: -K·e = {x}",
            describe(bl.flag_variety())
        );
        Ok(())
    })
}

fn s1(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in grassmannians(systems) {
        let big_n = rs.rank() as i64 + 1;
        for r in 1..=rs.rank() {
            let fv = FlagVariety::new(rs.clone(), ParabolicSubset::maximal(rs.rank(), r)?)?;
            for c in 2..=fv.dimension() {
                let engine = BlowUp::new(fv.clone(), c)?.classify().verdict;
                let law = special::grassmannian_classify(r as i64, big_n, c)?;
                ensure!(
                    engine == law,
                    "Gr({r},{big_n}) c={c}: engine {engine}, law {law}"
                );
                n += 1;
            }
        }
    }
    Ok(n)
}

fn s2(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in grassmannians(systems) {
        let big_n = rs.rank() as i64 + 1;
        for r in 1..=rs.rank() {
            let fv = FlagVariety::new(rs.clone(), ParabolicSubset::maximal(rs.rank(), r)?)?;
            let dim = fv.dimension();
            if dim < 2 {
                continue;
            }
            let engine = BlowUp::new(fv, dim)?.classify().verdict;
            let law = special::grassmannian_point_classify(r as i64, big_n)?;
            ensure!(
                engine == law,
                "Gr({r},{big_n}) point: engine {engine}, law {law}"
            );
            n += 1;
        }
    }
    Ok(n)
}

fn s3(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        for node in special::cominuscule_nodes(rs) {
            let fv = FlagVariety::new(rs.clone(), ParabolicSubset::maximal(rs.rank(), node)?)?;
            for c in 2..=fv.dimension() {
                let engine = BlowUp::new(fv.clone(), c)?.classify().verdict;
                let law = special::cominuscule_classify(rs, node, c)?;
                ensure!(
                    engine == law,
                    "{} node {node} c={c}: engine {engine}, law {law}",
                    rs.spec()
                );
                n += 1;
            }
        }
    }
    Ok(n)
}

fn s4(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, FULL_FLAG_RANK) {
        let fv = FlagVariety::new(rs.clone(), ParabolicSubset::borel())?;
        for c in 2..=fv.dimension() {
            let engine = BlowUp::new(fv.clone(), c)?.classify().verdict;
            let law = special::full_flag_classify(rs, c)?;
            ensure!(
                engine == law,
                "{} G/B c={c}: engine {engine}, law {law}",
                rs.spec()
            );
            n += 1;
        }
    }
    Ok(n)
}

fn s5(systems: &[RootSystem]) -> Check {
    let mut n = 0;
    for rs in upto(systems, ROOT_RANK) {
        for node in special::cominuscule_nodes(rs) {
            ensure!(
                special::kannan_saha_check(rs, node)?,
                "{} node {node}: w0(α_r^∨) ≠ α_0^∨",
                rs.spec()
            );
            let fv = FlagVariety::new(rs.clone(), ParabolicSubset::maximal(rs.rank(), node)?)?;
            let beta = fv.beta_values().get(node)?;
            let expected = special::cominuscule_beta(rs);
            ensure!(
                beta == expected,
                "{} node {node}: β = {beta}, <ρ, α_0^∨> = {expected}",
                rs.spec()
            );
            n += 1;
        }
    }
    Ok(n)
}

type Suite = (&'static str, &'static str, fn(&[RootSystem]) -> Check);

const SUITES: &[Suite] = &[
    ("I0", "Cartan axioms, half-sum of positive roots is rho", i0),
    ("I1", "root closure independent of processing order", i1),
    ("I2", "positive roots have non-negative coefficients", i2),
    ("I3", "<rho, highest coroot> vs height of highest root", i3),
    ("I4", "roots embed injectively into weights", i4),
    ("I5", "simply-laced coroots copy root coefficients", i5),
    ("W1", "longest parabolic element is an involution", w1),
    ("W2", "length of w_0,P equals |R_P+|", w2),
    ("W3", "w_0,P permutes roots as expected", w3),
    ("W4", "|W^P| * |W_P| = |W| against brute force", w4),
    ("W5", "generated words are reduced", w5),
    ("F1", "anticanonical weight is a character of P", f1),
    ("F2", "every beta is at least 1", f2),
    ("F3", "betas independent of the reduced word", f3),
    ("F4", "Grassmannian dimension and beta", f4),
    ("B1", "nef/Mori pairing is the identity", b1),
    ("B2", "anticanonical class basis round trip", b2),
    ("B3", "verdict agrees with the cone test", b3),
    ("B4", "positive scaling preserves nef and ample", b4),
    ("B5", "anticanonical margins as intersection numbers", b5),
    ("S1", "Grassmannian law vs engine", s1),
    ("S2", "Grassmannian point blow-up law vs engine", s2),
    ("S3", "cominuscule law vs engine", s3),
    ("S4", "full flag law vs engine", s4),
    ("S5", "cominuscule beta via w_0(alpha_r coroot)", s5),
];

pub fn run_checks_on(systems: &[RootSystem]) -> Vec<CheckLine> {
    SUITES
        .iter()
        .map(|&(id, title, f)| {
            let result = match panic::catch_unwind(AssertUnwindSafe(|| f(systems))) {
                Ok(Ok(n)) => Ok(n),
                Ok(Err(Fail(msg))) => Err(msg),
                Err(_) => Err("panicked".to_string()),
            };
            CheckLine { id, title, result }
        })
        .collect()
}

/// Every simple type of rank at most 8.
pub fn default_systems() -> Vec<RootSystem> {
    TypeSpec::all_up_to(ROOT_RANK)
        .into_iter()
        .map(|spec| RootSystem::new(spec).expect("built-in types are valid"))
        .collect()
}

pub fn run_default() -> Vec<CheckLine> {
    run_checks_on(&default_systems())
}

pub fn render(lines: &[CheckLine]) -> String {
    let mut out = String::new();
    for line in lines {
        match &line.result {
            Ok(n) => {
                let _ = writeln!(out, "PASS  {}  {} ({n} cases)", line.id, line.title);
            }
            Err(msg) => {
                let _ = writeln!(out, "FAIL  {}  {}: {msg}", line.id, line.title);
            }
        }
    }
    let failed = lines.iter().filter(|l| !l.passed()).count();
    let _ = writeln!(out, "\n{} passed, {failed} failed", lines.len() - failed);
    out
}

pub fn outcome(lines: &[CheckLine]) -> Outcome {
    let code = if lines.iter().all(CheckLine::passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Outcome {
        stdout: render(lines),
        stderr: String::new(),
        code,
    }
}
