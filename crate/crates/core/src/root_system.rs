//! Finite irreducible crystallographic root systems in simple-root
//! coordinates.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::affine::ExtendedDiagram;
use crate::linalg;
use crate::{Error, Rational, Result};

/// Largest rank accepted by [`Family::new`]; index sets are `u32` bitmasks.
pub const MAX_RANK: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            _ => return None,
        })
    }
}

/// Cartan-Killing type of an irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    letter: Letter,
    rank: usize,
}

impl Family {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let reason = match letter {
            Letter::A if rank < 1 => Some("type A needs rank >= 1"),
            Letter::B if rank < 2 => Some("type B needs rank >= 2"),
            Letter::C if rank < 2 => Some("type C needs rank >= 2"),
            Letter::D if rank < 4 => Some("type D needs rank >= 4"),
            Letter::E if !(6..=8).contains(&rank) => Some("type E needs rank 6, 7 or 8"),
            Letter::F if rank != 4 => Some("type F needs rank 4"),
            Letter::G if rank != 2 => Some("type G needs rank 2"),
            _ if rank > MAX_RANK => Some("rank exceeds the supported maximum of 30"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidFamily {
                letter: letter.as_char(),
                rank,
                reason,
            }),
            None => Ok(Family { letter, rank }),
        }
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of roots, from the classical formulas.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 1),
            Letter::B | Letter::C => 2 * n * n,
            Letter::D => 2 * n * (n - 1),
            Letter::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Letter::F => 48,
            Letter::G => 12,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.letter, Letter::A | Letter::D | Letter::E)
    }

    /// Squared lengths of the simple roots (long roots have length 2) and the
    /// edges of the Dynkin diagram, 0-based, in Bourbaki numbering.
    fn dynkin_data(self) -> (Vec<Rational>, Vec<(usize, usize)>) {
        let n = self.rank;
        let long = Rational::from_integer(2);
        let short = Rational::one();
        let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.letter {
            Letter::A => (vec![long; n], chain(n)),
            Letter::B => {
                let mut lengths = vec![long; n];
                lengths[n - 1] = short;
                (lengths, chain(n))
            }
            Letter::C => {
                let mut lengths = vec![short; n];
                lengths[n - 1] = long;
                (lengths, chain(n))
            }
            Letter::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![long; n], edges)
            }
            Letter::E => {
                // 1-3-4-5-...-n with 2 attached to 4
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![long; n], edges)
            }
            Letter::F => (vec![long, long, short, short], chain(4)),
            Letter::G => (vec![Rational::new(2, 3), long], chain(2)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `"B3"`, `"e8"` and the like: one letter followed by a decimal
    /// rank.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .and_then(Letter::from_char)
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 3 {
            return Err(Error::Parse(s.to_string()));
        }
        let rank = digits.parse().map_err(|_| Error::Parse(s.to_string()))?;
        Family::new(letter, rank)
    }
}

/// Cartan matrix with `entry(i, j) = <alpha_j, alpha_i^vee>`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthClass {
    Long,
    Short,
}

/// A root, as its integer coordinates in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<i64>,
    length: LengthClass,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `c_i` for a 1-based simple root index.
    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn length_class(&self) -> LengthClass {
        self.length
    }

    pub fn is_long(&self) -> bool {
        self.length == LengthClass::Long
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Indices (1-based) of the simple roots in the support.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.coords.iter().map(|&c| Rational::from_integer(c.into())).collect()
    }

    pub fn to_i128(&self) -> Vec<i128> {
        self.coords.iter().map(|&c| c.into()).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Fundamental coweight in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightVector {
    coords: Vec<Rational>,
}

impl CoweightVector {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    cartan: CartanMatrix,
    gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    lookup: BTreeMap<Vec<i64>, usize>,
    num_positive: usize,
    theta: usize,
    theta_s: usize,
    marks: Vec<i64>,
    coweights: Vec<CoweightVector>,
    extended: ExtendedDiagram,
}

impl RootSystem {
    /// Builds the root system of `family` by closing the simple roots under
    /// the simple reflections.
    pub fn new(family: Family) -> Result<Self> {
        let n = family.rank();
        let (lengths, edges) = family.dynkin_data();
        let mut gram = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            gram[i][i] = lengths[i];
        }
        for &(i, j) in &edges {
            let b = -core::cmp::max(lengths[i], lengths[j]) / Rational::from_integer(2);
            gram[i][j] = b;
            gram[j][i] = b;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = Rational::from_integer(2) * gram[i][j] / gram[i][i];
                        debug_assert!(a.is_integer());
                        a.to_integer() as i64
                    })
                    .collect()
            })
            .collect();
        let cartan = CartanMatrix(cartan);

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..n {
                let y = reflect_integer(&cartan, i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        if seen.len() != family.root_count() {
            return Err(Error::Internal(format!(
                "{family}: reflection closure produced {} roots, expected {}",
                seen.len(),
                family.root_count()
            )));
        }

        let norm = |c: &[i64]| -> Rational {
            let mut s = Rational::zero();
            for i in 0..n {
                if c[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += gram[i][j] * Rational::from_integer((c[i] * c[j]).into());
                }
            }
            s
        };
        let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        let make = |c: Vec<i64>| {
            let length = if norm(&c) == Rational::from_integer(2) {
                LengthClass::Long
            } else {
                LengthClass::Short
            };
            Root { coords: c, length }
        };
        let mut roots: Vec<Root> = positive.iter().cloned().map(make).collect();
        let num_positive = roots.len();
        let negatives: Vec<Root> = roots
            .iter()
            .map(|r| Root {
                coords: r.coords.iter().map(|c| -c).collect(),
                length: r.length,
            })
            .collect();
        roots.extend(negatives);
        let lookup = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();

        // positive roots are sorted by height, so the last ones are maximal
        let theta = num_positive - 1;
        let theta_s = (0..num_positive)
            .rev()
            .find(|&k| !roots[k].is_long())
            .unwrap_or(theta);
        let marks = roots[theta].coords.clone();

        let coweights = (0..n)
            .map(|i| {
                let mut e = vec![Rational::zero(); n];
                e[i] = Rational::one();
                linalg::solve(&gram, &e)
                    .map(|coords| CoweightVector { coords })
                    .ok_or_else(|| Error::Internal("singular Gram matrix".into()))
            })
            .collect::<Result<Vec<_>>>()?;

        let extended = ExtendedDiagram::from_parts(&cartan, &gram, &marks);
        let rs = RootSystem {
            family,
            cartan,
            gram,
            roots,
            lookup,
            num_positive,
            theta,
            theta_s,
            marks,
            coweights,
            extended,
        };
        rs.check_highest_root()?;
        Ok(rs)
    }

    fn check_highest_root(&self) -> Result<()> {
        let theta = self.theta();
        if self.positive_roots().iter().any(|b| !self.root_poset_leq(b, theta)) {
            return Err(Error::Internal("highest root is not the maximum".into()));
        }
        if (1..=self.rank()).any(|i| self.cartan_pairing(theta, i) < 0) {
            return Err(Error::Internal("highest root is not dominant".into()));
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Gram matrix `(alpha_j, alpha_k)`, 0-based, long roots of length 2.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// All roots: positive roots sorted by height, then their negatives in
    /// the same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn long_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_long())
    }

    pub fn theta(&self) -> &Root {
        &self.roots[self.theta]
    }

    /// Highest short root; equal to the highest root when simply laced.
    pub fn theta_s(&self) -> &Root {
        &self.roots[self.theta_s]
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Mark `m_i` for a 1-based index.
    pub fn mark(&self, i: usize) -> i64 {
        self.marks[i - 1]
    }

    /// Fundamental coweight for a 1-based index.
    pub fn coweight(&self, i: usize) -> &CoweightVector {
        &self.coweights[i - 1]
    }

    pub fn is_simply_laced(&self) -> bool {
        self.family.is_simply_laced()
    }

    pub fn extended(&self) -> &ExtendedDiagram {
        &self.extended
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        self.root(&unit(self.rank(), i)).expect("simple roots are roots")
    }

    pub fn root(&self, coords: &[i64]) -> Option<&Root> {
        self.lookup.get(coords).map(|&k| &self.roots[k])
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.lookup.contains_key(coords)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// `x^T B y` for vectors in simple-root coordinates.
    pub fn inner_product(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += *xi * self.gram[i][j] * *yj;
            }
        }
        s
    }

    pub fn root_inner(&self, a: &Root, b: &Root) -> Rational {
        self.inner_product_int(&a.coords, &b.coords)
    }

    pub fn inner_product_int(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    s += self.gram[i][j] * Rational::from_integer((xi * yj).into());
                }
            }
        }
        s
    }

    /// `(beta, omega_i^vee)`, which is the coordinate `c_i(beta)`.
    pub fn coweight_pairing(&self, beta: &Root, i: usize) -> i64 {
        beta.coord(i)
    }

    /// `<x, alpha_i^vee>` for an integer vector and a 1-based index.
    pub fn cartan_pairing(&self, x: &Root, i: usize) -> i64 {
        let row = &self.cartan.0[i - 1];
        x.coords.iter().zip(row).map(|(a, b)| a * b).sum()
    }

    /// `s_i(x) = x - <x, alpha_i^vee> alpha_i`.
    pub fn simple_reflection(&self, i: usize, x: &[Rational]) -> Vec<Rational> {
        let row = &self.cartan.0[i - 1];
        let pairing: Rational = x
            .iter()
            .zip(row)
            .map(|(a, &b)| *a * Rational::from_integer(b.into()))
            .sum();
        let mut y = x.to_vec();
        y[i - 1] -= pairing;
        y
    }

    /// Image of a root under `s_i`.
    pub fn reflect_root(&self, i: usize, beta: &Root) -> &Root {
        let y = reflect_integer(&self.cartan, i - 1, &beta.coords);
        self.root(&y).expect("reflections permute the roots")
    }

    /// The `alpha`-string through `beta`, from its origin upwards.
    pub fn root_string(&self, alpha: &Root, beta: &Root) -> Result<Vec<Root>> {
        if !self.is_root(&alpha.coords) || !self.is_root(&beta.coords) {
            return Err(Error::NotARoot);
        }
        let neg: Vec<i64> = alpha.coords.iter().map(|c| -c).collect();
        if alpha.coords == beta.coords || neg == beta.coords {
            return Err(Error::ProportionalRoots);
        }
        let shift = |x: &[i64], k: i64| -> Vec<i64> {
            x.iter().zip(&alpha.coords).map(|(a, b)| a + k * b).collect()
        };
        let mut origin = beta.coords.clone();
        loop {
            let down = shift(&origin, -1);
            if !self.is_root(&down) {
                break;
            }
            origin = down;
        }
        let mut string = Vec::new();
        let mut cur = origin;
        while let Some(r) = self.root(&cur) {
            string.push(r.clone());
            cur = shift(&cur, 1);
        }
        Ok(string)
    }

    /// `alpha <= beta` in the root poset: `beta - alpha` has nonnegative
    /// coordinates.
    pub fn root_poset_leq(&self, alpha: &Root, beta: &Root) -> bool {
        alpha.coords.iter().zip(&beta.coords).all(|(a, b)| b >= a)
    }

    /// Builds a root from coordinates that are known to be a root.
    pub fn expect_root(&self, coords: &[i64]) -> Result<&Root> {
        self.root(coords).ok_or(Error::NotARoot)
    }
}

/// Unit vector `alpha_i` (1-based).
pub fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i - 1] = 1;
    e
}

fn reflect_integer(cartan: &CartanMatrix, i: usize, x: &[i64]) -> Vec<i64> {
    let pairing: i64 = x.iter().zip(&cartan.0[i]).map(|(a, b)| a * b).sum();
    let mut y = x.to_vec();
    y[i] -= pairing;
    y
}
