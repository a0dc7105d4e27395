//! Weyl-group words, their action on weights, roots and coroots, lengths,
//! parabolic longest elements and minimal coset representatives.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::rootsys::{Coroot, Root, RootSystem, Weight};

/// A word `s_{i_1} s_{i_2} ⋯ s_{i_k}` in simple reflections, 1-based letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Right multiplication by `s_i`.
    pub fn push(&mut self, i: usize) {
        self.0.push(i);
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        WeylWord(self.0.iter().chain(&other.0).copied().collect())
    }

    fn check(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i == 0 || i > rank) {
            Some(&index) => Err(Error::IndexOutOfRange { index, rank }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `S_P`: the simple roots (1-based node labels) whose root groups lie in `P`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParabolicSubset(BTreeSet<usize>);

impl ParabolicSubset {
    pub fn new<I: IntoIterator<Item = usize>>(members: I, rank: usize) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&index) = set.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        Ok(ParabolicSubset(set))
    }

    /// The Borel subgroup: `S_P = ∅`.
    pub fn borel() -> Self {
        ParabolicSubset(BTreeSet::new())
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSubset((1..=rank).collect())
    }

    /// Maximal parabolic with `S ∖ S_P = {node}`.
    pub fn maximal(rank: usize, node: usize) -> Result<Self> {
        if node == 0 || node > rank {
            return Err(Error::IndexOutOfRange { index: node, rank });
        }
        Ok(ParabolicSubset((1..=rank).filter(|&i| i != node).collect()))
    }

    /// Every subset of `{1..rank}` except the full set, ordered by bitmask.
    pub fn all_proper(rank: usize) -> Vec<Self> {
        (0u32..(1u32 << rank) - 1)
            .map(|mask| {
                ParabolicSubset((1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect())
            })
            .collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn members(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `S ∖ S_P`, ascending.
    pub fn complement(&self, rank: usize) -> Vec<usize> {
        (1..=rank).filter(|i| !self.0.contains(i)).collect()
    }
}

/// Anything the Weyl group acts on through simple reflections.
pub trait WeylModule: Sized {
    fn coords_len(&self) -> usize;
    fn reflect(&self, i: usize, rs: &RootSystem) -> Result<Self>;
}

impl WeylModule for Weight {
    fn coords_len(&self) -> usize {
        self.rank()
    }

    fn reflect(&self, i: usize, rs: &RootSystem) -> Result<Self> {
        reflect_weight(i, self, rs)
    }
}

impl WeylModule for Root {
    fn coords_len(&self) -> usize {
        self.rank()
    }

    fn reflect(&self, i: usize, rs: &RootSystem) -> Result<Self> {
        reflect_root(i, self, rs)
    }
}

impl WeylModule for Coroot {
    fn coords_len(&self) -> usize {
        self.rank()
    }

    fn reflect(&self, i: usize, rs: &RootSystem) -> Result<Self> {
        reflect_coroot(i, self, rs)
    }
}

/// `s_i(λ) = λ - <λ, α_i^∨> α_i`, with `α_i` read from column `i` of the Cartan matrix.
pub fn reflect_weight(i: usize, w: &Weight, rs: &RootSystem) -> Result<Weight> {
    rs.check_node(i)?;
    rs.check_rank(w.rank())?;
    let k = w.coeffs()[i - 1];
    let column = rs.cartan().column(i - 1);
    Ok(Weight::new(arith::sub_scaled(w.coeffs(), k, &column)?))
}

/// `s_i(β) = β - <β, α_i^∨> α_i` in simple-root coordinates.
pub fn reflect_root(i: usize, r: &Root, rs: &RootSystem) -> Result<Root> {
    rs.check_node(i)?;
    rs.check_rank(r.rank())?;
    let k = arith::dot(rs.cartan().row(i - 1), r.coeffs())?;
    let mut out = r.coeffs().to_vec();
    out[i - 1] = arith::sub(out[i - 1], k)?;
    Ok(Root::new(out))
}

/// `s_i(γ) = γ - <α_i, γ> α_i^∨`; `<α_i, α_j^∨> = C[j][i]` is the transposed entry.
pub fn reflect_coroot(i: usize, c: &Coroot, rs: &RootSystem) -> Result<Coroot> {
    rs.check_node(i)?;
    rs.check_rank(c.rank())?;
    let column = rs.cartan().column(i - 1);
    let k = arith::dot(&column, c.coeffs())?;
    let mut out = c.coeffs().to_vec();
    out[i - 1] = arith::sub(out[i - 1], k)?;
    Ok(Coroot::new(out))
}

/// `s_{i_1}(s_{i_2}(⋯ s_{i_k}(x)))`.
pub fn act<T: WeylModule + Clone>(word: &WeylWord, x: &T, rs: &RootSystem) -> Result<T> {
    word.check(rs.rank())?;
    rs.check_rank(x.coords_len())?;
    word.letters()
        .iter()
        .rev()
        .try_fold(x.clone(), |acc, &i| acc.reflect(i, rs))
}

/// Inversion count: positive roots sent negative.
pub fn length(word: &WeylWord, rs: &RootSystem) -> Result<usize> {
    word.check(rs.rank())?;
    let mut count = 0;
    for beta in rs.positive_roots() {
        if act(word, beta, rs)?.is_negative() {
            count += 1;
        }
    }
    Ok(count)
}

/// Reduced word for the longest element `w_{0,P}` of `W_P`, built by greedy
/// ascent with the smallest admissible letter at each step.
pub fn longest_element(par: &ParabolicSubset, rs: &RootSystem) -> Result<WeylWord> {
    let members = par.members();
    if let Some(&index) = members.iter().find(|&&i| i > rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index,
            rank: rs.rank(),
        });
    }
    let bound = rs.positive_roots().len();
    let mut word = WeylWord::identity();
    loop {
        if word.len() > bound {
            return Err(Error::InvalidCartan(
                "parabolic subgroup is infinite (greedy ascent did not stop)".into(),
            ));
        }
        let mut ascent = None;
        for &i in &members {
            if act(&word, &rs.simple_root(i)?, rs)?.is_positive() {
                ascent = Some(i);
                break;
            }
        }
        match ascent {
            Some(i) => word.push(i),
            None => return Ok(word),
        }
    }
}

/// `w ∈ W^P` iff `w(α_i) > 0` for every `i ∈ S_P`.
pub fn is_minimal_coset_rep(
    word: &WeylWord,
    par: &ParabolicSubset,
    rs: &RootSystem,
) -> Result<bool> {
    for i in par.members() {
        if !act(word, &rs.simple_root(i)?, rs)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal coset representatives of `W/W_P` up to `max_length` (`None` for
/// all of them), sorted by `(length, word)`.
///
/// Every `w ∈ W^P` of positive length is `s_i w'` with `w' ∈ W^P` one
/// shorter, so the search prepends letters level by level. Elements are
/// identified by their image of `ρ`.
pub fn enumerate_coset_reps(
    par: &ParabolicSubset,
    rs: &RootSystem,
    max_length: Option<usize>,
) -> Result<Vec<WeylWord>> {
    let rho = rs.rho();
    let mut out = vec![WeylWord::identity()];
    let mut level: BTreeMap<Vec<i64>, WeylWord> = BTreeMap::new();
    level.insert(rho.coeffs().to_vec(), WeylWord::identity());
    let mut len = 0usize;
    while !level.is_empty() && max_length.is_none_or(|m| len < m) {
        let mut next: BTreeMap<Vec<i64>, WeylWord> = BTreeMap::new();
        for (image, word) in &level {
            for i in 1..=rs.rank() {
                // ℓ(s_i w) > ℓ(w) iff <wρ, α_i^∨> > 0.
                if image[i - 1] <= 0 {
                    continue;
                }
                let candidate = WeylWord::new(
                    std::iter::once(i)
                        .chain(word.letters().iter().copied())
                        .collect(),
                );
                if !is_minimal_coset_rep(&candidate, par, rs)? {
                    continue;
                }
                let key = reflect_weight(i, &Weight::new(image.clone()), rs)?.into_coeffs();
                match next.get(&key) {
                    Some(existing) if existing <= &candidate => {}
                    _ => {
                        next.insert(key, candidate);
                    }
                }
            }
        }
        len += 1;
        let mut words: Vec<WeylWord> = next.values().cloned().collect();
        words.sort();
        out.extend(words);
        level = next;
    }
    Ok(out)
}

/// An element of `W` found by the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleElement {
    /// A shortest word (first found in breadth-first order).
    pub word: WeylWord,
    /// Matrix of the action on fundamental-weight coordinates, row-major.
    pub matrix: Vec<Vec<i64>>,
    pub rho_image: Weight,
}

impl OracleElement {
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(w.coeffs()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

const ORACLE_MAX_RANK: usize = 3;
// |W(B3)| = 48 is the largest finite order in rank 3.
const ORACLE_MAX_ORDER: usize = 48;

/// Closure of the simple reflections as explicit matrices on weight space.
/// Independent of [`act`] and [`length`]; intended as a test oracle.
pub fn brute_force_group(rs: &RootSystem) -> Result<Vec<OracleElement>> {
    let n = rs.rank();
    if n > ORACLE_MAX_RANK {
        return Err(Error::RankTooLargeForOracle(n));
    }
    // s_i as a matrix: e_j ↦ e_j - δ_ij α_i, i.e. M = I - (column α_i) ⊗ e_i.
    let generators: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            let alpha = rs.cartan().column(i);
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| i64::from(r == c) - if c == i { alpha[r] } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    let rho = vec![1i64; n];
    let image = |m: &Vec<Vec<i64>>| -> Vec<i64> {
        m.iter()
            .map(|row| row.iter().zip(&rho).map(|(a, b)| a * b).sum())
            .collect()
    };

    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut elements: Vec<OracleElement> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    seen.insert(image(&identity), 0);
    elements.push(OracleElement {
        word: WeylWord::identity(),
        rho_image: Weight::new(image(&identity)),
        matrix: identity,
    });
    queue.push_back(0);
    while let Some(idx) = queue.pop_front() {
        if elements.len() > ORACLE_MAX_ORDER {
            return Err(Error::InvalidCartan("Weyl group is not finite".into()));
        }
        for (g, gen) in generators.iter().enumerate() {
            let current = &elements[idx].matrix;
            let product: Vec<Vec<i64>> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| (0..n).map(|k| current[r][k] * gen[k][c]).sum())
                        .collect()
                })
                .collect();
            let key = image(&product);
            if seen.contains_key(&key) {
                continue;
            }
            let mut word = elements[idx].word.clone();
            word.push(g + 1);
            seen.insert(key.clone(), elements.len());
            elements.push(OracleElement {
                word,
                matrix: product,
                rho_image: Weight::new(key),
            });
            queue.push_back(elements.len() - 1);
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, TypeSpec};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(TypeSpec::new(f, n).unwrap()).unwrap()
    }

    #[test]
    fn reflections_a2() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            reflect_weight(1, &a2.rho(), &a2).unwrap(),
            Weight::new(vec![-1, 2])
        );
        assert_eq!(
            reflect_root(1, &Root::unit(2, 2), &a2).unwrap(),
            Root::new(vec![1, 1])
        );
        assert_eq!(
            reflect_root(2, &Root::unit(2, 2), &a2).unwrap(),
            Root::new(vec![0, -1])
        );
        let fixed = Weight::new(vec![0, 5]);
        assert_eq!(reflect_weight(1, &fixed, &a2).unwrap(), fixed);
        assert_eq!(
            reflect_weight(3, &fixed, &a2),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
    }

    #[test]
    fn reflect_coroot_b2() {
        // B2: α_1 long, α_2 short. s_2(α_1^∨) = α_1^∨ - <α_2, α_1^∨> α_2^∨ = α_1^∨ + α_2^∨.
        let b2 = rs(Family::B, 2);
        assert_eq!(
            reflect_coroot(2, &Coroot::unit(2, 1), &b2).unwrap(),
            Coroot::new(vec![1, 1])
        );
        // s_1(α_2^∨) = α_2^∨ - <α_1, α_2^∨> α_1^∨ = α_2^∨ + 2α_1^∨.
        assert_eq!(
            reflect_coroot(1, &Coroot::unit(2, 2), &b2).unwrap(),
            Coroot::new(vec![2, 1])
        );
    }

    #[test]
    fn act_and_length_basics() {
        let a2 = rs(Family::A, 2);
        let e = WeylWord::identity();
        assert_eq!(act(&e, &a2.rho(), &a2).unwrap(), a2.rho());
        assert_eq!(length(&e, &a2).unwrap(), 0);
        assert_eq!(length(&WeylWord::new(vec![1]), &a2).unwrap(), 1);
        let w0 = longest_element(&ParabolicSubset::full(2), &a2).unwrap();
        assert_eq!(w0, WeylWord::new(vec![1, 2, 1]));
        assert_eq!(act(&w0, &a2.rho(), &a2).unwrap(), Weight::new(vec![-1, -1]));
        assert_eq!(
            act(&WeylWord::new(vec![1, 4]), &a2.rho(), &a2),
            Err(Error::IndexOutOfRange { index: 4, rank: 2 })
        );
    }

    #[test]
    fn longest_elements() {
        let a3 = rs(Family::A, 3);
        assert!(longest_element(&ParabolicSubset::borel(), &a3)
            .unwrap()
            .is_empty());
        let w0 = longest_element(&ParabolicSubset::full(3), &a3).unwrap();
        assert_eq!(length(&w0, &a3).unwrap(), 6);
        let b2 = rs(Family::B, 2);
        assert_eq!(
            longest_element(&ParabolicSubset::full(2), &b2)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn coset_rep_membership() {
        let a3 = rs(Family::A, 3);
        let par = ParabolicSubset::new([1, 3], 3).unwrap();
        assert!(is_minimal_coset_rep(&WeylWord::identity(), &par, &a3).unwrap());
        assert!(is_minimal_coset_rep(&WeylWord::new(vec![2]), &par, &a3).unwrap());
        assert!(!is_minimal_coset_rep(&WeylWord::new(vec![1]), &par, &a3).unwrap());
    }

    #[test]
    fn coset_enumeration_counts() {
        let a2 = rs(Family::A, 2);
        let par = ParabolicSubset::new([2], 2).unwrap();
        assert_eq!(
            enumerate_coset_reps(&par, &a2, Some(0)).unwrap(),
            vec![WeylWord::identity()]
        );
        let reps = enumerate_coset_reps(&par, &a2, Some(2)).unwrap();
        assert_eq!(
            reps,
            vec![
                WeylWord::identity(),
                WeylWord::new(vec![1]),
                WeylWord::new(vec![2, 1])
            ]
        );
        let a3 = rs(Family::A, 3);
        let gr24 = ParabolicSubset::new([1, 3], 3).unwrap();
        assert_eq!(enumerate_coset_reps(&gr24, &a3, None).unwrap().len(), 6);
    }

    #[test]
    fn oracle_orders() {
        for (f, n, order) in [
            (Family::A, 1, 2),
            (Family::A, 2, 6),
            (Family::B, 2, 8),
            (Family::G, 2, 12),
            (Family::A, 3, 24),
            (Family::B, 3, 48),
            (Family::C, 3, 48),
        ] {
            assert_eq!(brute_force_group(&rs(f, n)).unwrap().len(), order, "{f}{n}");
        }
        assert_eq!(
            brute_force_group(&rs(Family::A, 4)),
            Err(Error::RankTooLargeForOracle(4))
        );
    }

    #[test]
    fn oracle_agrees_with_act() {
        let g2 = rs(Family::G, 2);
        for el in brute_force_group(&g2).unwrap() {
            for i in 1..=2 {
                let w = g2.fundamental_weight(i).unwrap();
                assert_eq!(el.apply(&w), act(&el.word, &w, &g2).unwrap());
            }
        }
    }
}
