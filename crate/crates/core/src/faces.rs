//! Standard parabolic faces `F_I` and coordinate faces `F_i`.
//!
//! `F_I` is the face of the root polytope cut out by the hyperplanes
//! `(omega_i^vee, x) = m_i` for `i` in `I`; its roots are exactly the roots
//! whose `i`-th coordinate equals the mark `m_i`. Faces are identified by
//! their closed index set.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::affine::IndexSet;
use crate::linalg;
use crate::root_system::{Root, RootSystem};
use crate::weyl;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub closure: IndexSet,
    pub border: IndexSet,
    /// `V_I`, in the order of [`RootSystem::roots`].
    pub roots: Vec<Root>,
    /// `eta_I`, the minimum of `V_I` in the root poset.
    pub min_root: Root,
    pub dim: usize,
    /// The long roots of `V_I`.
    pub vertices: Vec<Root>,
}

impl Face {
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealReport {
    pub is_dual_order_ideal: bool,
    pub is_abelian: bool,
    pub has_minimum: bool,
}

/// Split of the stabilizer `W<Π \ Π_∂I>` into the part fixing the face
/// pointwise and the part acting faithfully on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilizerGenerators {
    pub generators: IndexSet,
    pub pointwise: IndexSet,
    pub faithful: IndexSet,
}

/// `F_i ⊆ F_j` relation on coordinate faces, computed three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateOrder {
    rank: usize,
    /// `leq[i-1][j-1]` iff `F_i ⊆ F_j`.
    leq: Vec<Vec<bool>>,
}

impl CoordinateOrder {
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i - 1][j - 1]
    }

    /// Covering pairs `(i, j)` with `F_i ⊊ F_j` and nothing in between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let covered = (1..=n).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !covered {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Indices of the maximal coordinate faces.
    pub fn maximal(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| (1..=self.rank).all(|j| j == i || !self.leq(i, j)))
            .collect()
    }
}

fn check_set(rs: &RootSystem, i: IndexSet) -> Result<()> {
    if let Some(bad) = i.iter().find(|&k| k > rs.rank()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: rs.rank(),
        });
    }
    Ok(())
}

fn nonempty(rs: &RootSystem, i: IndexSet) -> Result<()> {
    check_set(rs, i)?;
    if i.is_empty() {
        Err(Error::EmptyIndexSet)
    } else {
        Ok(())
    }
}

/// `V_I`: roots whose `i`-th coordinate equals `m_i` for every `i` in `I`.
pub fn face_roots(rs: &RootSystem, i: IndexSet) -> Vec<Root> {
    rs.roots()
        .iter()
        .filter(|b| i.iter().all(|k| b.coord(k) == rs.mark(k)))
        .cloned()
        .collect()
}

/// `eta_I`, the minimum of `V_I`.
pub fn minimal_root(rs: &RootSystem, i: IndexSet) -> Result<Root> {
    nonempty(rs, i)?;
    let v = face_roots(rs, i);
    minimum_of(rs, &v)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("V_{i} has no minimum")))
}

fn minimum_of<'a>(rs: &RootSystem, v: &'a [Root]) -> Option<&'a Root> {
    let candidate = v.iter().min_by_key(|r| r.height())?;
    v.iter()
        .all(|b| rs.root_poset_leq(candidate, b))
        .then_some(candidate)
}

/// `|V_I|` from the orders of the affine component and the finite part:
/// `(|Φ̂(Π̂ \ Π_Ī)| - |Φ(Π \ Π_Ī)|) / 2`.
pub fn root_count_formula(rs: &RootSystem, i: IndexSet) -> Result<usize> {
    let d = rs.extended();
    let closure = d.closure(i);
    let component = d.component_of_affine(i);
    let affine = weyl::classify_nodes(d, component)?.root_count();
    let finite = weyl::classify_nodes(d, closure.complement(rs.rank()).as_nodes())?.root_count();
    Ok((affine - finite) / 2)
}

/// Full description of `F_I`, cross-checked against the root-count formula.
pub fn face_descriptor(rs: &RootSystem, i: IndexSet) -> Result<Face> {
    nonempty(rs, i)?;
    let d = rs.extended();
    let closure = d.closure(i);
    let border = d.border(i);
    let roots = face_roots(rs, i);
    let min_root = minimum_of(rs, &roots)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("V_{i} has no minimum")))?;
    let vertices: Vec<Root> = roots.iter().filter(|r| r.is_long()).cloned().collect();
    let expected = root_count_formula(rs, i)?;
    if expected != roots.len() {
        return Err(Error::Internal(format!(
            "|V_{i}| = {} but the affine formula gives {expected}",
            roots.len()
        )));
    }
    Ok(Face {
        closure,
        border,
        roots,
        min_root,
        dim: rs.rank() - closure.len(),
        vertices,
    })
}

/// Affine dimension of the convex hull of a set of roots.
pub fn affine_dimension(roots: &[Root]) -> Option<usize> {
    let pts: Vec<Vec<i128>> = roots.iter().map(Root::to_i128).collect();
    linalg::affine_dimension(&pts)
}

/// `[W<Π \ Π_Ī> : W<(Π \ Π_Ī) ∩ theta^⊥>]`, checked against the number of
/// long roots in `V_I`. For `I = ∅` this is the number of long roots.
pub fn vertex_count_formula(rs: &RootSystem, i: IndexSet) -> Result<BigUint> {
    check_set(rs, i)?;
    let d = rs.extended();
    let free = d.closure(i).complement(rs.rank());
    let fixing = free.difference(d.neighbors(0).finite_part());
    let count = weyl::coset_index(rs, fixing, free)?;
    let direct = face_roots(rs, i).iter().filter(|r| r.is_long()).count();
    if count != BigUint::from(direct) {
        return Err(Error::Internal(format!(
            "vertex count of F_{i}: formula {count}, direct count {direct}"
        )));
    }
    Ok(count)
}

/// Simple reflections generating the stabilizer of `F_I`.
pub fn stabilizer_generators(rs: &RootSystem, i: IndexSet) -> Result<StabilizerGenerators> {
    nonempty(rs, i)?;
    let d = rs.extended();
    let n = rs.rank();
    let closure = d.closure(i);
    let border = d.border(i);
    Ok(StabilizerGenerators {
        generators: border.complement(n),
        pointwise: closure.difference(border),
        faithful: closure.complement(n),
    })
}

/// Sum of the roots of `V_I` (not divided by their number).
pub fn barycenter(rs: &RootSystem, i: IndexSet) -> Result<Vec<i64>> {
    nonempty(rs, i)?;
    let mut b = alloc::vec![0i64; rs.rank()];
    for r in face_roots(rs, i) {
        for (x, c) in b.iter_mut().zip(r.coords()) {
            *x += c;
        }
    }
    Ok(b)
}

/// Coefficient `m_i |V_i| / (omega_i^vee, omega_i^vee)` expected in front of
/// `omega_i^vee` in the barycenter of a coordinate face.
pub fn coordinate_barycenter_coefficient(rs: &RootSystem, i: usize) -> Result<Rational> {
    rs.check_index(i)?;
    let w = rs.coweight(i).coords();
    let size = face_roots(rs, IndexSet::singleton(i)).len() as i128;
    Ok(Rational::from_integer(i128::from(rs.mark(i)) * size) / rs.inner_product(w, w))
}

/// Dual order ideal, abelian and minimum tests on a set of positive roots.
pub fn ideal_report(rs: &RootSystem, v: &[Root]) -> IdealReport {
    let members: BTreeSet<&[i64]> = v.iter().map(Root::coords).collect();
    let is_dual_order_ideal = v.iter().all(|a| {
        rs.positive_roots()
            .iter()
            .filter(|b| rs.root_poset_leq(a, b))
            .all(|b| members.contains(b.coords()))
    });
    let is_abelian = v.iter().enumerate().all(|(k, a)| {
        v[k..].iter().all(|b| {
            let sum: Vec<i64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect();
            !rs.is_root(&sum)
        })
    });
    IdealReport {
        is_dual_order_ideal,
        is_abelian,
        has_minimum: minimum_of(rs, v).is_some(),
    }
}

/// `I(eta) = {i : c_i(eta) = m_i}` together with the predicate
/// "`eta` is long and `(eta, alpha_i) <= 0` for every `i` outside `I(eta)`",
/// which holds exactly when `eta` is the minimum of `V_{I(eta)}`.
pub fn classify_root_minimum(rs: &RootSystem, eta: &Root) -> (IndexSet, bool) {
    let n = rs.rank();
    let set = IndexSet::from_indices((1..=n).filter(|&i| eta.coord(i) == rs.mark(i)), n)
        .expect("indices are in range");
    let predicate = eta.is_long()
        && set
            .complement(n)
            .iter()
            .all(|i| rs.cartan_pairing(eta, i) <= 0);
    (set, predicate)
}

/// Roots of the form `min V_I`, one per standard parabolic face.
pub fn face_minimal_roots(rs: &RootSystem) -> Vec<Root> {
    rs.positive_roots()
        .iter()
        .filter(|eta| {
            let (set, ok) = classify_root_minimum(rs, eta);
            ok && !set.is_empty()
        })
        .cloned()
        .collect()
}

/// The seven equivalent facet conditions for the coordinate face `F_i`,
/// in the order: facet dimension, irreducibility of `Π̂ \ {alpha_i}`,
/// coordinates of `eta_i`, closedness of `{i}`, witness roots, nontrivial
/// strings, maximality.
pub fn coordinate_facet_conditions(rs: &RootSystem, i: usize) -> Result<[bool; 7]> {
    rs.check_index(i)?;
    let n = rs.rank();
    let d = rs.extended();
    let single = IndexSet::singleton(i);
    let v = face_roots(rs, single);
    let others: Vec<usize> = (1..=n).filter(|&j| j != i).collect();

    let facet_dim = affine_dimension(&v) == Some(n - 1);
    let irreducible = d.is_irreducible_subsystem(d.all_nodes().without(i));
    let eta = minimal_root(rs, single)?;
    let eta_test = others.iter().all(|&j| eta.coord(j) != rs.mark(j));
    let closed = d.closure(single) == single;
    let witnesses = others
        .iter()
        .all(|&j| v.iter().any(|a| a.coord(j) != rs.mark(j)));
    let strings = others.iter().all(|&j| {
        v.iter().any(|a| {
            let mut up = a.coords().to_vec();
            up[j - 1] += 1;
            rs.is_root(&up)
        })
    });
    let own: BTreeSet<&[i64]> = v.iter().map(Root::coords).collect();
    let maximal = others.iter().all(|&j| {
        let vj = face_roots(rs, IndexSet::singleton(j));
        !(vj.len() > v.len() && own.iter().all(|c| vj.iter().any(|r| r.coords() == *c)))
    });
    Ok([facet_dim, irreducible, eta_test, closed, witnesses, strings, maximal])
}

/// Whether `F_i` is a facet, after checking that all seven conditions agree.
pub fn coordinate_facet_test(rs: &RootSystem, i: usize) -> Result<bool> {
    let c = coordinate_facet_conditions(rs, i)?;
    if c.iter().any(|&x| x != c[0]) {
        return Err(Error::Internal(format!(
            "{}: facet conditions for F_{i} disagree: {c:?}",
            rs.family()
        )));
    }
    Ok(c[0])
}

/// Inclusion order of the coordinate faces, computed from root sets, from
/// closures and from paths to the affine node; all three must agree.
pub fn coordinate_face_order(rs: &RootSystem) -> Result<CoordinateOrder> {
    let n = rs.rank();
    let d = rs.extended();
    let sets: Vec<BTreeSet<Vec<i64>>> = (1..=n)
        .map(|i| {
            face_roots(rs, IndexSet::singleton(i))
                .into_iter()
                .map(|r| r.coords().to_vec())
                .collect()
        })
        .collect();
    let closures: Vec<IndexSet> = (1..=n).map(|i| d.closure(IndexSet::singleton(i))).collect();
    let mut leq = alloc::vec![alloc::vec![false; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            let by_roots = sets[i - 1].is_subset(&sets[j - 1]);
            let by_closure = closures[j - 1].is_subset(closures[i - 1]);
            let by_paths = d.on_every_path(i, j, 0);
            if by_roots != by_closure || by_roots != by_paths {
                return Err(Error::Internal(format!(
                    "{}: order of F_{i}, F_{j} disagrees (roots {by_roots}, closure {by_closure}, paths {by_paths})",
                    rs.family()
                )));
            }
            leq[i - 1][j - 1] = by_roots;
        }
    }
    Ok(CoordinateOrder { rank: n, leq })
}

/// Whether the graph on `v` joining non-orthogonal pairs is connected.
pub fn is_orthogonally_connected(rs: &RootSystem, v: &[Root]) -> bool {
    if v.is_empty() {
        return true;
    }
    let mut reached = alloc::vec![false; v.len()];
    reached[0] = true;
    let mut stack = alloc::vec![0];
    while let Some(a) = stack.pop() {
        for b in 0..v.len() {
            if !reached[b] && !rs.root_inner(&v[a], &v[b]).is_zero() {
                reached[b] = true;
                stack.push(b);
            }
        }
    }
    reached.into_iter().all(|x| x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied(), 30).unwrap()
    }

    fn coords(v: &[Root]) -> Vec<Vec<i64>> {
        v.iter().map(|r| r.coords().to_vec()).collect()
    }

    #[test]
    fn face_roots_small() {
        let a2 = rs("A2");
        assert_eq!(face_roots(&a2, IndexSet::empty()).len(), 6);
        assert_eq!(coords(&face_roots(&a2, set(&[1]))), vec![vec![1, 0], vec![1, 1]]);
        // C2: theta = 2 a1 + a2, marks (2, 1)
        let c2 = rs("C2");
        let v = face_roots(&c2, set(&[2]));
        assert_eq!(v.len(), 3);
        assert_eq!(v.iter().filter(|r| r.is_long()).count(), 2);
    }

    #[test]
    fn minimal_roots() {
        let a2 = rs("A2");
        assert_eq!(minimal_root(&a2, set(&[1, 2])).unwrap(), *a2.theta());
        assert_eq!(minimal_root(&a2, set(&[1])).unwrap().coords(), &[1, 0]);
        assert_eq!(minimal_root(&a2, IndexSet::empty()), Err(Error::EmptyIndexSet));
        let d5 = rs("D5");
        for i in 1..=5 {
            if d5.mark(i) == 1 {
                assert_eq!(&minimal_root(&d5, set(&[i])).unwrap(), d5.simple_root(i));
            }
        }
    }

    #[test]
    fn descriptors() {
        let a2 = rs("A2");
        let f = face_descriptor(&a2, set(&[1])).unwrap();
        assert_eq!((f.dim, f.num_roots(), f.num_vertices()), (1, 2, 2));
        let b9 = rs("B9");
        let f = face_descriptor(&b9, set(&[5, 7])).unwrap();
        assert_eq!(f.dim, 4);
        assert_eq!(f.closure, set(&[5, 6, 7, 8, 9]));
        assert_eq!(f.border, set(&[5]));
        let f = face_descriptor(&b9, IndexSet::full(9)).unwrap();
        assert_eq!((f.dim, f.num_vertices()), (0, 1));
        assert!(face_descriptor(&a2, set(&[3])).is_err());
    }

    #[test]
    fn vertex_counts() {
        let a2 = rs("A2");
        assert_eq!(vertex_count_formula(&a2, set(&[1])).unwrap(), BigUint::from(2u8));
        assert_eq!(vertex_count_formula(&a2, IndexSet::full(2)).unwrap(), BigUint::from(1u8));
        for s in ["A3", "B4", "C3", "F4", "G2"] {
            let r = rs(s);
            let long = r.long_roots().count();
            assert_eq!(vertex_count_formula(&r, IndexSet::empty()).unwrap(), BigUint::from(long));
        }
    }

    #[test]
    fn stabilizers() {
        let a2 = rs("A2");
        let s = stabilizer_generators(&a2, set(&[1])).unwrap();
        assert_eq!(s.generators, set(&[2]));
        let c2 = rs("C2");
        assert_eq!(stabilizer_generators(&c2, set(&[2])).unwrap().generators, set(&[1]));
    }

    #[test]
    fn barycenters() {
        let a2 = rs("A2");
        assert_eq!(barycenter(&a2, set(&[1])).unwrap(), vec![2, 1]);
        // omega_1 = (2 a1 + a2) / 3 and the coefficient is 1 * 2 / (2/3) = 3
        assert_eq!(coordinate_barycenter_coefficient(&a2, 1).unwrap(), Rational::from_integer(3));
        let c2 = rs("C2");
        let b = barycenter(&c2, set(&[2])).unwrap();
        let k = coordinate_barycenter_coefficient(&c2, 2).unwrap();
        let w = c2.coweight(2).coords();
        for (x, y) in b.iter().zip(w) {
            assert_eq!(Rational::from_integer((*x).into()), k * y);
        }
        let f = face_descriptor(&a2, IndexSet::full(2)).unwrap();
        assert_eq!(barycenter(&a2, IndexSet::full(2)).unwrap(), f.vertices[0].coords());
    }

    #[test]
    fn ideal_reports() {
        let a2 = rs("A2");
        let r = ideal_report(&a2, &[a2.theta().clone()]);
        assert_eq!((r.is_dual_order_ideal, r.is_abelian, r.has_minimum), (true, true, true));
        let r = ideal_report(&a2, a2.positive_roots());
        assert!(r.is_dual_order_ideal);
        assert!(!r.is_abelian);
        assert!(!r.has_minimum);
    }

    #[test]
    fn root_minimum_classification() {
        let a2 = rs("A2");
        assert_eq!(classify_root_minimum(&a2, a2.theta()), (IndexSet::full(2), true));
        assert_eq!(classify_root_minimum(&a2, a2.simple_root(1)), (set(&[1]), true));
        let b2 = rs("B2");
        let short = b2.root(&[1, 1]).unwrap();
        assert!(!short.is_long());
        assert!(!classify_root_minimum(&b2, short).1);
    }

    #[test]
    fn facet_tests_small() {
        let a3 = rs("A3");
        assert!((1..=3).all(|i| coordinate_facet_test(&a3, i).unwrap()));
        let c3 = rs("C3");
        let v: Vec<bool> = (1..=3).map(|i| coordinate_facet_test(&c3, i).unwrap()).collect();
        assert_eq!(v, vec![false, false, true]);
    }

    #[test]
    fn coordinate_orders_small() {
        let c3 = rs("C3");
        let o = coordinate_face_order(&c3).unwrap();
        assert_eq!(o.hasse(), vec![(1, 2), (2, 3)]);
        let a3 = rs("A3");
        assert!(coordinate_face_order(&a3).unwrap().hasse().is_empty());
        let g2 = rs("G2");
        assert_eq!(coordinate_face_order(&g2).unwrap().hasse(), vec![(2, 1)]);
    }
}
