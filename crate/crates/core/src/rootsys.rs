//! Root systems of simple types: Cartan matrix, positive roots by closure,
//! heights, coroots, `ρ`, and the weight/coroot pairing.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Largest rank accepted by [`TypeSpec::new`].
pub const MAX_RANK: usize = 16;

/// Upper bound on the number of positive roots the closure may produce
/// before the input is declared non-finite.
const CLOSURE_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Admissible ranks up to `max_rank`, in increasing order.
    pub fn ranks_up_to(self, max_rank: usize) -> Vec<usize> {
        (1..=max_rank.min(MAX_RANK))
            .filter(|&r| TypeSpec::new(self, r).is_ok())
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A simple Lie type `X_n` with an admissible rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeSpec {
    family: Family,
    rank: usize,
}

impl TypeSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason| {
            Err(Error::InadmissibleRank {
                family: family.letter(),
                rank,
                reason,
            })
        };
        if rank > MAX_RANK {
            return reject("rank is capped at 16");
        }
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(TypeSpec { family, rank })
        } else {
            reject(match family {
                Family::A => "A needs rank >= 1",
                Family::B => "B needs rank >= 2",
                Family::C => "C needs rank >= 2",
                Family::D => "D needs rank >= 4",
                Family::E => "E needs rank 6, 7 or 8",
                Family::F => "F needs rank 4",
                Family::G => "G needs rank 2",
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, ordered by family then rank.
    pub fn all_up_to(max_rank: usize) -> Vec<TypeSpec> {
        Family::ALL
            .iter()
            .flat_map(|&f| {
                f.ranks_up_to(max_rank)
                    .into_iter()
                    .map(move |r| TypeSpec { family: f, rank: r })
            })
            .collect()
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

macro_rules! coordinate_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub struct $name(Vec<i64>);

        impl $name {
            pub fn new(coeffs: Vec<i64>) -> Self {
                $name(coeffs)
            }

            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            /// Unit vector at the 1-based node `i`.
            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = vec![0; rank];
                v[i - 1] = 1;
                $name(v)
            }

            pub fn coeffs(&self) -> &[i64] {
                &self.0
            }

            pub fn into_coeffs(self) -> Vec<i64> {
                self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn negated(&self) -> Self {
                $name(self.0.iter().map(|x| -x).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, c) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

coordinate_vector!(
    /// Integer coordinates over the simple roots `α_1, …, α_ℓ`.
    Root
);
coordinate_vector!(
    /// Integer coordinates over the simple coroots `α_1^∨, …, α_ℓ^∨`.
    Coroot
);
coordinate_vector!(
    /// Integer coordinates over the fundamental weights `ϖ_1, …, ϖ_ℓ`;
    /// coordinate `i` is `<λ, α_i^∨>`.
    Weight
);

impl Root {
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    /// Sum of simple-root coefficients; negative for negative roots.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// True when every nonzero coefficient sits on a node in `nodes` (1-based).
    pub fn supported_on(&self, nodes: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &k)| k == 0 || nodes.contains(&(i + 1)))
    }
}

impl Coroot {
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }
}

/// Height of a root.
pub fn height(r: &Root) -> i64 {
    r.height()
}

/// `<λ, c>`, a dot product because `<ϖ_j, α_i^∨> = δ_ij`.
pub fn pairing(w: &Weight, c: &Coroot) -> Result<i64> {
    if w.rank() != c.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            got: c.rank(),
        });
    }
    arith::dot(w.coeffs(), c.coeffs())
}

/// Square integer matrix with `C[i][j] = <α_j, α_i^∨>` (0-based storage).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                got: bad.len(),
            });
        }
        Ok(CartanMatrix {
            rank,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Bourbaki-numbered Cartan matrix of a simple type.
    pub fn for_type(spec: TypeSpec) -> Self {
        let n = spec.rank();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        // 1-based bond helper: a_ij = <α_j, α_i^∨>.
        let mut bond = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
            m[i - 1][j - 1] = a_ij;
            m[j - 1][i - 1] = a_ji;
        };
        match spec.family() {
            Family::A => (1..n).for_each(|i| bond(i, i + 1, -1, -1)),
            Family::B => {
                (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
                // α_n short: <α_{n-1}, α_n^∨> = -2
                bond(n - 1, n, -1, -2);
            }
            Family::C => {
                (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 1, n, -2, -1);
            }
            Family::D => {
                (1..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n, -1, -1);
            }
            Family::E => {
                bond(1, 3, -1, -1);
                bond(2, 4, -1, -1);
                (3..n).for_each(|i| bond(i, i + 1, -1, -1));
            }
            Family::F => {
                bond(1, 2, -1, -1);
                bond(2, 3, -1, -2);
                bond(3, 4, -1, -1);
            }
            Family::G => bond(1, 2, -3, -1),
        }
        CartanMatrix::from_rows(m).expect("square by construction")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    /// Overwrites one entry; only meant for building negative fixtures.
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.rank + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.rank..(i + 1) * self.rank]
    }

    /// Column `j`: the weight coordinates of `α_{j+1}`.
    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| self.row(i).to_vec()).collect()
    }

    /// Checks the generalized Cartan axioms and symmetrizability by `d`.
    pub fn validate(&self, symmetrizers: &[i64]) -> Result<()> {
        let n = self.rank;
        if symmetrizers.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: symmetrizers.len(),
            });
        }
        if symmetrizers.iter().any(|&d| d <= 0) {
            return Err(Error::InvalidCartan("symmetrizers must be positive".into()));
        }
        for i in 0..n {
            if self.get(i, i) != 2 {
                return Err(Error::InvalidCartan(format!("C[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let a = self.get(i, j);
                if !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!("C[{i}][{j}] = {a}")));
                }
                if (a == 0) != (self.get(j, i) == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({i}, {j})"
                    )));
                }
                if symmetrizers[i] * a != symmetrizers[j] * self.get(j, i) {
                    return Err(Error::InvalidCartan(format!(
                        "D*C not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Symmetrizer diagonal for a Bourbaki-numbered simple type (short roots have 1).
pub fn symmetrizers_for_type(spec: TypeSpec) -> Vec<i64> {
    let n = spec.rank();
    match spec.family() {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => (1..=n).map(|i| if i < n { 2 } else { 1 }).collect(),
        Family::C => (1..=n).map(|i| if i < n { 1 } else { 2 }).collect(),
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

/// Positive roots generated from the simple roots by the string criterion,
/// processing simple roots in the given (0-based) order at each height.
///
/// For a positive root `β` and simple `α_i`, let `p` be the largest `k` with
/// `β - kα_i` a root; then `β + α_i` is a root iff `p - <β, α_i^∨> > 0`.
/// Roots are produced height by height, so every `β - kα_i` is already known.
pub fn positive_roots_in_order(cartan: &CartanMatrix, order: &[usize]) -> Result<Vec<Root>> {
    let n = cartan.rank();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (1..=n).map(|i| Root::unit(n, i).into_coeffs()).collect();
    known.extend(level.iter().cloned());
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for &i in order {
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !known.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                let coroot_pairing = arith::dot(cartan.row(i), beta)?;
                if p - coroot_pairing > 0 {
                    let mut up = beta.clone();
                    up[i] = arith::add(up[i], 1)?;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if known.len() > CLOSURE_CAP {
            return Err(Error::InvalidCartan(
                "root closure does not terminate (not of finite type)".into(),
            ));
        }
        level = next;
    }
    let mut roots: Vec<Root> = known.into_iter().map(Root).collect();
    sort_roots(&mut roots);
    Ok(roots)
}

/// Sorts by `(height, lexicographic coefficients)`.
pub fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
}

/// The combinatorial datum of a simple type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    spec: TypeSpec,
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
    highest_root: Root,
    symmetrizers: Vec<i64>,
}

/// Builds the root system of an admissible type.
pub fn build_root_system(spec: TypeSpec) -> Result<RootSystem> {
    RootSystem::new(spec)
}

impl RootSystem {
    pub fn new(spec: TypeSpec) -> Result<Self> {
        // Re-validate in case the TypeSpec was deserialized.
        let spec = TypeSpec::new(spec.family(), spec.rank())?;
        let cartan = CartanMatrix::for_type(spec);
        let symmetrizers = symmetrizers_for_type(spec);
        cartan.validate(&symmetrizers)?;
        Self::assemble(spec, cartan, symmetrizers)
    }

    /// Builds from an arbitrary matrix without checking the Cartan axioms.
    /// Used to feed deliberately corrupted data to the self-check suite.
    pub fn from_cartan_unchecked(
        spec: TypeSpec,
        cartan: CartanMatrix,
        symmetrizers: Vec<i64>,
    ) -> Result<Self> {
        Self::assemble(spec, cartan, symmetrizers)
    }

    fn assemble(spec: TypeSpec, cartan: CartanMatrix, symmetrizers: Vec<i64>) -> Result<Self> {
        if cartan.rank() != spec.rank() {
            return Err(Error::RankMismatch {
                expected: spec.rank(),
                got: cartan.rank(),
            });
        }
        let order: Vec<usize> = (0..spec.rank()).collect();
        let positive_roots = positive_roots_in_order(&cartan, &order)?;
        let top = positive_roots
            .last()
            .expect("at least the simple roots")
            .height();
        let mut at_top = positive_roots.iter().filter(|r| r.height() == top);
        let highest_root = at_top.next().cloned().expect("nonempty");
        if at_top.next().is_some() {
            return Err(Error::InvalidCartan(
                "no unique root of maximal height (decomposable system)".into(),
            ));
        }
        Ok(RootSystem {
            spec,
            cartan,
            positive_roots,
            highest_root,
            symmetrizers,
        })
    }

    pub fn spec(&self) -> TypeSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizers.iter().all(|&d| d == self.symmetrizers[0])
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_node(i)?;
        Ok(Root::unit(self.rank(), i))
    }

    pub fn simple_coroot(&self, i: usize) -> Result<Coroot> {
        self.check_node(i)?;
        Ok(Coroot::unit(self.rank(), i))
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_node(i)?;
        Ok(Weight::unit(self.rank(), i))
    }

    pub(crate) fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_rank(&self, got: usize) -> Result<()> {
        if got != self.rank() {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got,
            })
        } else {
            Ok(())
        }
    }

    /// Whether `r` is a (positive or negative) root.
    pub fn is_root(&self, r: &Root) -> bool {
        if r.rank() != self.rank() {
            return false;
        }
        let probe = if r.is_negative() {
            r.negated()
        } else {
            r.clone()
        };
        self.positive_roots
            .binary_search_by(|x| (x.height(), &x.0).cmp(&(probe.height(), &probe.0)))
            .is_ok()
    }

    /// Positive roots whose support lies inside `nodes` (1-based labels).
    pub fn positive_roots_supported_on(&self, nodes: &[usize]) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.supported_on(nodes))
            .cloned()
            .collect()
    }

    /// Symmetrized form `(x, y) = Σ k_i l_j d_i C[i][j]` on root coordinates.
    pub fn inner_product(&self, x: &Root, y: &Root) -> Result<i64> {
        self.check_rank(x.rank())?;
        self.check_rank(y.rank())?;
        let n = self.rank();
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                let term = arith::mul(
                    arith::mul(x.0[i], y.0[j])?,
                    arith::mul(self.symmetrizers[i], self.cartan.get(i, j))?,
                )?;
                acc = arith::add(acc, term)?;
            }
        }
        Ok(acc)
    }

    /// `r^∨ = 2r/(r,r)`: coefficient on `α_i^∨` is `k_i (α_i,α_i)/(r,r)`.
    pub fn coroot_of(&self, r: &Root) -> Result<Coroot> {
        if !self.is_root(r) {
            return Err(Error::NotARoot(r.coeffs().to_vec()));
        }
        let norm = self.inner_product(r, r)?;
        r.0.iter()
            .zip(&self.symmetrizers)
            .map(|(&k, &d)| {
                let num = arith::mul(arith::mul(k, 2)?, d)?;
                if num % norm != 0 {
                    Err(Error::InvalidCartan(format!(
                        "non-integral coroot for {r}: {num}/{norm}"
                    )))
                } else {
                    Ok(num / norm)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Coroot)
    }

    /// Weight coordinates of a root-lattice vector: `λ_i = Σ_j C[i][j] k_j`.
    pub fn root_as_weight(&self, r: &Root) -> Result<Weight> {
        self.check_rank(r.rank())?;
        (0..self.rank())
            .map(|i| arith::dot(self.cartan.row(i), &r.0))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    /// `ρ`, the all-ones weight.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `α_0^∨`, the coroot of the highest root.
    pub fn highest_root_coroot(&self) -> Coroot {
        self.coroot_of(&self.highest_root)
            .expect("highest root is a root")
    }

    /// `<ρ, α_0^∨>`, the height of `α_0^∨` in the coroot basis.
    pub fn highest_root_coroot_height(&self) -> i64 {
        self.highest_root_coroot().coeffs().iter().sum()
    }
}
