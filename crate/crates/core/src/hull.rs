//! Independent convex-hull oracle in exact integer arithmetic.
//!
//! Facets are found by brute force over affinely independent `n`-subsets
//! of the input, which is only practical in low dimension. The search is
//! split into blocks keyed by the smallest point index so that callers can
//! run blocks concurrently and merge the results.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::affine::IndexSet;
use crate::enumeration::{self, SkeletonClass};
use crate::faces;
use crate::linalg;
use crate::root_system::{Family, Root, RootSystem};
use crate::{Error, Rational, Result};

/// Default bound on the dimension accepted by the oracle.
pub const DEFAULT_MAX_DIM: usize = 5;

/// Maximum number of input points (one bit each).
pub const MAX_POINTS: usize = 128;

/// A set of input points, as a bitmask over point indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(pub u128);

impl PointSet {
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_POINTS).filter(move |&i| self.contains(i))
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> PointSet {
        PointSet(indices.into_iter().fold(0, |acc, i| acc | 1 << i))
    }
}

/// A supporting inequality `functional . x <= bound` with primitive
/// integer coefficients, and the input points on which it is tight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FacetCertificate {
    pub functional: Vec<i128>,
    pub bound: i128,
    pub incident: PointSet,
}

/// Validated input for the facet search.
#[derive(Debug, Clone)]
pub struct HullInput {
    points: Vec<Vec<i128>>,
    dim: usize,
}

impl HullInput {
    /// Rejects inputs of dimension above `max_dim`, with more than
    /// `MAX_POINTS` points, or not spanning their ambient space.
    pub fn new(points: &[Vec<Rational>], max_dim: usize) -> Result<Self> {
        Self::from_integer(linalg::integerize(points), max_dim)
    }

    pub fn from_integer(points: Vec<Vec<i128>>, max_dim: usize) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if dim > max_dim {
            return Err(Error::RankBound { rank: dim, bound: max_dim });
        }
        if points.len() > MAX_POINTS {
            return Err(Error::LimitExceeded {
                what: "hull input points",
                limit: MAX_POINTS,
            });
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::Parse(String::from("points of mixed dimension")));
        }
        let found = linalg::affine_dimension(&points).unwrap_or(0);
        if dim == 0 || found != dim {
            return Err(Error::Degenerate { expected: dim, found });
        }
        Ok(HullInput { points, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i128>] {
        &self.points
    }

    pub fn num_blocks(&self) -> usize {
        self.points.len()
    }

    /// Facets spanned by an `n`-subset whose smallest index is `first`.
    pub fn search_block(&self, first: usize) -> Vec<FacetCertificate> {
        let n = self.dim;
        let m = self.points.len();
        let base = &self.points[first];
        let diffs: Vec<Vec<i128>> = self
            .points
            .iter()
            .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let mut found = BTreeSet::new();
        let mut chosen: Vec<usize> = (first + 1..first + n).collect();
        if n == 1 {
            chosen.clear();
        } else if chosen.last().is_none_or(|&l| l >= m) {
            return Vec::new();
        }
        loop {
            let rows: Vec<Vec<i128>> = chosen.iter().map(|&k| diffs[k].clone()).collect();
            let normal = linalg::cofactor_normal(&rows);
            if normal.iter().any(|&x| x != 0) {
                if let Some(f) = self.certify(normal, base) {
                    found.insert(f);
                }
            }
            if !next_combination(&mut chosen, m) {
                break;
            }
        }
        found.into_iter().collect()
    }

    fn certify(&self, mut normal: Vec<i128>, base: &[i128]) -> Option<FacetCertificate> {
        let dot = |a: &[i128], b: &[i128]| -> i128 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let b = dot(&normal, base);
        let (mut above, mut below) = (false, false);
        for p in &self.points {
            match dot(&normal, p).cmp(&b) {
                core::cmp::Ordering::Greater => above = true,
                core::cmp::Ordering::Less => below = true,
                core::cmp::Ordering::Equal => {}
            }
            if above && below {
                return None;
            }
        }
        if above {
            normal.iter_mut().for_each(|x| *x = -*x);
        }
        normal.push(if above { -b } else { b });
        linalg::primitive(&mut normal);
        let bound = normal.pop().unwrap_or(0);
        let incident = PointSet::from_indices((0..self.points.len()).filter(|&k| dot(&normal, &self.points[k]) == bound));
        Some(FacetCertificate {
            functional: normal,
            bound,
            incident,
        })
    }
}

/// Advances a strictly increasing index tuple with entries below `m`.
fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < m - (k - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Deduplicates and sorts facets collected from several blocks.
pub fn merge_facets(blocks: impl IntoIterator<Item = Vec<FacetCertificate>>) -> Vec<FacetCertificate> {
    let set: BTreeSet<FacetCertificate> = blocks.into_iter().flatten().collect();
    set.into_iter().collect()
}

/// Sequential facet enumeration.
pub fn hull_facets(input: &HullInput) -> Vec<FacetCertificate> {
    merge_facets((0..input.num_blocks()).map(|b| input.search_block(b)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFace {
    pub points: PointSet,
    /// Affine dimension; `-1` for the empty face.
    pub dim: isize,
}

/// Face lattice of the hull, including the empty face and the polytope.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub dim: usize,
    pub faces: Vec<LatticeFace>,
    /// Pairs `(lower, upper)` of indices into `faces`.
    pub covers: Vec<(usize, usize)>,
    /// Number of faces of each dimension `0..dim`.
    pub f_vector: Vec<usize>,
}

impl FaceLattice {
    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = &LatticeFace> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    pub fn vertices(&self) -> PointSet {
        PointSet(self.faces_of_dim(0).fold(0, |acc, f| acc | f.points.0))
    }

    pub fn find(&self, points: PointSet) -> Option<&LatticeFace> {
        self.faces.iter().find(|f| f.points == points)
    }
}

/// Closes the facet incidence sets under intersection.
pub fn face_lattice(input: &HullInput, facets: &[FacetCertificate]) -> FaceLattice {
    let n = input.dim;
    let mut seen: BTreeSet<u128> = facets.iter().map(|f| f.incident.0).collect();
    let mut work: Vec<u128> = seen.iter().copied().collect();
    while let Some(f) = work.pop() {
        for g in facets {
            let h = f & g.incident.0;
            if h != 0 && seen.insert(h) {
                work.push(h);
            }
        }
    }
    let dim_of = |s: u128| -> isize {
        let pts: Vec<Vec<i128>> = PointSet(s).iter().map(|k| input.points[k].clone()).collect();
        linalg::affine_dimension(&pts).map_or(-1, |d| d as isize)
    };
    let all = PointSet::from_indices(0..input.points.len()).0;
    let mut by_key: BTreeMap<(isize, u128), ()> = BTreeMap::new();
    by_key.insert((-1, 0), ());
    by_key.insert((n as isize, all), ());
    for s in seen {
        by_key.insert((dim_of(s), s), ());
    }
    let faces: Vec<LatticeFace> = by_key
        .into_keys()
        .map(|(dim, s)| LatticeFace {
            points: PointSet(s),
            dim,
        })
        .collect();
    let mut covers = Vec::new();
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate() {
            if b.dim == a.dim + 1 && a.points.is_subset(b.points) {
                covers.push((i, j));
            }
        }
    }
    let mut f_vector = vec![0; n];
    for f in &faces {
        if f.dim >= 0 && (f.dim as usize) < n {
            f_vector[f.dim as usize] += 1;
        }
    }
    FaceLattice {
        dim: n,
        faces,
        covers,
        f_vector,
    }
}

/// Proper edges of an oracle lattice built on `rs.roots()`, each
/// classified as a two-root or three-root string.
pub fn one_skeleton(rs: &RootSystem, lattice: &FaceLattice) -> Result<Vec<(Vec<Root>, SkeletonClass)>> {
    lattice
        .faces_of_dim(1)
        .filter(|_| lattice.dim > 1)
        .map(|e| {
            let roots: Vec<Root> = e.points.iter().map(|k| rs.roots()[k].clone()).collect();
            let class = enumeration::classify_edge(rs, &roots)?;
            Ok((roots, class))
        })
        .collect()
}

/// Hull input whose point `k` is the `k`-th root of `rs`, in simple-root
/// coordinates.
pub fn root_input(rs: &RootSystem, max_dim: usize) -> Result<HullInput> {
    HullInput::from_integer(rs.roots().iter().map(Root::to_i128).collect(), max_dim)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of comparing the combinatorial formulas with the oracle.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub family: Family,
    pub f_vector: Vec<usize>,
    pub num_facets: usize,
    pub checks: Vec<Check>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs the oracle sequentially and cross-validates.
pub fn cross_validate(rs: &RootSystem, max_dim: usize) -> Result<CrossValidation> {
    let input = root_input(rs, max_dim)?;
    let facets = hull_facets(&input);
    cross_validate_with(rs, &input, &facets)
}

/// Cross-validates against facets computed elsewhere (e.g. in parallel).
pub fn cross_validate_with(rs: &RootSystem, input: &HullInput, facets: &[FacetCertificate]) -> Result<CrossValidation> {
    let n = rs.rank();
    let lattice = face_lattice(input, facets);
    let mut checks = Vec::new();
    let mut check = |name: &'static str, passed: bool, detail: String| checks.push(Check { name, passed, detail });

    let long = PointSet::from_indices((0..rs.roots().len()).filter(|&k| rs.roots()[k].is_long()));
    check(
        "vertices are the long roots",
        lattice.vertices() == long,
        format!("{} vertices, {} long roots", lattice.vertices().len(), long.len()),
    );

    let fpoly = enumeration::f_polynomial(rs)?;
    let expected: Vec<BigUint> = fpoly.proper_f_vector().to_vec();
    let got: Vec<BigUint> = lattice.f_vector.iter().map(|&x| BigUint::from(x)).collect();
    check(
        "f-vector equals f-polynomial",
        expected == got && fpoly.coeffs[n] == BigUint::from(1u8),
        format!("formula {expected:?}, oracle {got:?}"),
    );

    let h = enumeration::h_representation(rs, enumeration::DEFAULT_INEQUALITY_LIMIT)?;
    let oracle_ineqs: BTreeSet<(Vec<i128>, i128)> = facets.iter().map(|f| (f.functional.clone(), f.bound)).collect();
    let formula_ineqs: Option<BTreeSet<(Vec<i128>, i128)>> = h.inequalities.as_ref().map(|v| {
        v.iter()
            .map(|q| {
                let mut c: Vec<i128> = q.covector.iter().map(|&x| x.into()).collect();
                c.push(q.bound.into());
                linalg::primitive(&mut c);
                let b = c.pop().unwrap_or(0);
                (c, b)
            })
            .collect()
    });
    check(
        "facets equal the half-space representation",
        h.total == BigUint::from(facets.len()) && formula_ineqs.is_none_or(|s| s == oracle_ineqs),
        format!("formula {} facets, oracle {}", h.total, facets.len()),
    );

    let parabolic = enumeration::orbit_decomposition(rs)?;
    let mut missing = Vec::new();
    for (face, _) in &parabolic {
        let pts = PointSet::from_indices(face.roots.iter().filter_map(|r| rs.root_index(r.coords())));
        let ok = lattice.find(pts).is_some_and(|f| f.dim == face.dim as isize)
            && pts.intersection(long).len() == face.num_vertices();
        if !ok {
            missing.push(face.closure);
        }
    }
    check(
        "standard parabolic faces are oracle faces",
        missing.is_empty(),
        if missing.is_empty() {
            format!("{} faces", parabolic.len())
        } else {
            let names: Vec<String> = missing.iter().map(|c| format!("{c}")).collect();
            format!("mismatched closures {}", names.join(" "))
        },
    );

    let mut orbit_sums = vec![BigUint::from(0u8); n];
    for (face, size) in &parabolic {
        orbit_sums[face.dim] += size;
    }
    check(
        "orbits partition the faces",
        orbit_sums == got,
        format!("orbit sums {orbit_sums:?}"),
    );

    let symmetric = facets.iter().all(|f| {
        let neg: Vec<i128> = f.functional.iter().map(|x| -x).collect();
        oracle_ineqs.contains(&(neg, f.bound))
    });
    check("facets are centrally symmetric", symmetric, String::new());

    let euler: i64 = lattice
        .f_vector
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum();
    let target = if n.is_multiple_of(2) { 0 } else { 2 };
    check("Euler relation", euler == target, format!("alternating sum {euler}"));

    let skeleton = one_skeleton(rs, &lattice);
    let class = enumeration::skeleton_classification(rs)?;
    let (ok, detail) = match &skeleton {
        Ok(edges) => (
            edges.iter().all(|(_, c)| *c == class),
            format!("{} edges, {}", edges.len(), match class {
                SkeletonClass::LongEdges => "two-root strings",
                SkeletonClass::DoubledShortEdges => "three-root strings",
            }),
        ),
        Err(e) => (false, format!("{e}")),
    };
    check("edges are long-root strings", ok, detail);

    if !rs.is_simply_laced() {
        let (_, expected_dim) = enumeration::short_root_face(rs)?;
        let short = PointSet(!long.0 & PointSet::from_indices(0..rs.roots().len()).0);
        let min = lattice
            .faces
            .iter()
            .filter(|f| f.dim >= 0 && (f.dim as usize) < n && !f.points.intersection(short).is_empty())
            .map(|f| f.dim as usize)
            .min()
            .unwrap_or(n);
        check(
            "smallest faces meeting short roots",
            min == expected_dim,
            format!("formula {expected_dim}, oracle {min}"),
        );
    }

    let facet_closures: Vec<IndexSet> = parabolic
        .iter()
        .filter(|(f, _)| f.dim + 1 == n)
        .map(|(f, _)| f.closure)
        .collect();
    let coord_ok = (1..=n).all(|i| {
        let is_facet = faces::coordinate_facet_test(rs, i).unwrap_or(false);
        is_facet == facet_closures.contains(&IndexSet::singleton(i))
    });
    check(
        "coordinate facets",
        coord_ok,
        {
            let names: Vec<String> = facet_closures.iter().map(|c| format!("{c}")).collect();
            format!("facet closures {}", names.join(" "))
        },
    );

    Ok(CrossValidation {
        family: rs.family(),
        f_vector: lattice.f_vector,
        num_facets: facets.len(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i128]]) -> HullInput {
        HullInput::from_integer(v.iter().map(|p| p.to_vec()).collect(), 5).unwrap()
    }

    #[test]
    fn square_with_interior_point() {
        let input = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]]);
        let facets = hull_facets(&input);
        assert_eq!(facets.len(), 4);
        let lattice = face_lattice(&input, &facets);
        assert_eq!(lattice.f_vector, vec![4, 4]);
        assert!(!lattice.vertices().contains(4));
        assert!(!lattice.vertices().contains(5));
    }

    #[test]
    fn refusals() {
        let line = HullInput::from_integer(vec![vec![0, 0], vec![1, 1], vec![2, 2]], 5);
        assert_eq!(line.unwrap_err(), Error::Degenerate { expected: 2, found: 1 });
        let big = HullInput::from_integer(vec![vec![0; 6]], 5);
        assert_eq!(big.unwrap_err(), Error::RankBound { rank: 6, bound: 5 });
    }

    #[test]
    fn segment() {
        let input = pts(&[&[-1], &[1], &[0]]);
        let facets = hull_facets(&input);
        assert_eq!(facets.len(), 2);
        assert_eq!(face_lattice(&input, &facets).f_vector, vec![2]);
    }

    #[test]
    fn small_root_systems_validate() {
        for s in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
            let rs = RootSystem::new(s.parse().unwrap()).unwrap();
            let report = cross_validate(&rs, DEFAULT_MAX_DIM).unwrap();
            assert!(report.passed(), "{s}: {:?}", report.failures().collect::<Vec<_>>());
        }
    }
}
