//! Census of standard parabolic faces: f-polynomial, orbit decomposition,
//! minimal half-space representation and low-dimensional faces.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::affine::IndexSet;
use crate::faces::{self, Face};
use crate::root_system::{Root, RootSystem};
use crate::weyl;
use crate::{Error, Rational, Result};

/// Default bound on the number of explicit inequalities.
pub const DEFAULT_INEQUALITY_LIMIT: usize = 100_000;

/// Face counts by dimension. The top coefficient is the polytope itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPolynomial {
    pub coeffs: Vec<BigUint>,
}

impl FPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients of degree below `n`, i.e. the f-vector of proper faces.
    pub fn proper_f_vector(&self) -> &[BigUint] {
        &self.coeffs[..self.degree()]
    }
}

/// One orbit of facets: the `W`-orbit of `(omega_i^vee, x) <= m_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetClass {
    pub index: usize,
    pub bound: i64,
    pub count: BigUint,
}

/// Inequality `(normal, x) <= bound`, equivalently `covector . x <= bound`
/// with `covector_j = (normal, alpha_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub class: usize,
    pub covector: Vec<i64>,
    pub normal: Vec<Rational>,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepresentation {
    pub classes: Vec<FacetClass>,
    pub total: BigUint,
    /// Present when `total` is within the requested limit.
    pub inequalities: Option<Vec<Inequality>>,
}

impl HRepresentation {
    pub fn is_explicit(&self) -> bool {
        self.inequalities.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeletonClass {
    /// Every edge joins two non-orthogonal long roots differing by a root.
    LongEdges,
    /// Every edge is a three-root string whose midpoint is short.
    DoubledShortEdges,
}

/// Index sets `Γ ⊆ [n]` with `{0} ∪ Γ` connected in the extended diagram.
pub fn affine_connected_subsets(rs: &RootSystem) -> impl Iterator<Item = IndexSet> + '_ {
    let d = rs.extended();
    IndexSet::all_subsets(rs.rank()).filter(move |g| d.is_irreducible_subsystem(g.as_nodes().with(0)))
}

/// One face per connected subdiagram containing the affine node, other than
/// the whole diagram; sorted by dimension, then closure.
pub fn all_standard_parabolic_faces(rs: &RootSystem) -> Result<Vec<Face>> {
    let n = rs.rank();
    let mut out = Vec::new();
    for gamma in affine_connected_subsets(rs) {
        if gamma == IndexSet::full(n) {
            continue;
        }
        let closed = gamma.complement(n);
        if rs.extended().closure(closed) != closed {
            return Err(Error::Internal(format!("complement of {gamma} is not closed")));
        }
        out.push(faces::face_descriptor(rs, closed)?);
    }
    out.sort_by_key(|f| (f.dim, f.closure.to_vec()));
    Ok(out)
}

/// `sum over Γ of [W : W<Γ*>] t^|Γ|` with `Γ* = Γ ∪ (Γ̂^⊥ ∩ Π)`.
pub fn f_polynomial(rs: &RootSystem) -> Result<FPolynomial> {
    let n = rs.rank();
    let d = rs.extended();
    let mut coeffs = vec![BigUint::zero(); n + 1];
    for gamma in affine_connected_subsets(rs) {
        let hat = gamma.as_nodes().with(0);
        let mut star = gamma;
        for j in gamma.complement(n).iter() {
            if d.neighbors(j).intersection(hat).is_empty() {
                star.insert(j);
            }
        }
        coeffs[gamma.len()] += weyl::coset_index(rs, star, IndexSet::full(n))?;
    }
    Ok(FPolynomial { coeffs })
}

/// Each standard parabolic face with the size of its `W`-orbit,
/// `[W : W<Π \ Π_∂I>]`.
pub fn orbit_decomposition(rs: &RootSystem) -> Result<Vec<(Face, BigUint)>> {
    let n = rs.rank();
    all_standard_parabolic_faces(rs)?
        .into_iter()
        .map(|f| {
            let stab = faces::stabilizer_generators(rs, f.closure)?;
            let size = weyl::coset_index(rs, stab.generators, IndexSet::full(n))?;
            Ok((f, size))
        })
        .collect()
}

/// Indices `i` whose removal keeps the extended diagram connected.
pub fn facet_indices(rs: &RootSystem) -> Vec<usize> {
    let d = rs.extended();
    (1..=rs.rank())
        .filter(|&i| d.is_irreducible_subsystem(d.all_nodes().without(i)))
        .collect()
}

/// Minimal half-space representation. Explicit inequalities are generated
/// as the `W`-orbits of the facet coweights when their total count is at
/// most `limit`; otherwise only the symbolic classes are returned.
pub fn h_representation(rs: &RootSystem, limit: usize) -> Result<HRepresentation> {
    let n = rs.rank();
    let all = IndexSet::full(n);
    let classes = facet_indices(rs)
        .into_iter()
        .map(|i| {
            Ok(FacetClass {
                index: i,
                bound: rs.mark(i),
                count: weyl::coset_index(rs, all.without(i), all)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let total: BigUint = classes.iter().map(|c| &c.count).sum();
    if total > BigUint::from(limit) {
        return Ok(HRepresentation {
            classes,
            total,
            inequalities: None,
        });
    }
    let mut inequalities = Vec::new();
    for class in &classes {
        let mut seed = vec![0i64; n];
        seed[class.index - 1] = 1;
        let orbit = weyl::covector_orbit(rs, &seed, all, limit)?;
        if BigUint::from(orbit.len()) != class.count {
            return Err(Error::Internal(format!(
                "orbit of coweight {} has {} elements, coset index is {}",
                class.index,
                orbit.len(),
                class.count
            )));
        }
        for covector in orbit {
            let mut normal = vec![Rational::zero(); n];
            for (j, &y) in covector.iter().enumerate() {
                if y != 0 {
                    let w = rs.coweight(j + 1).coords();
                    for (x, c) in normal.iter_mut().zip(w) {
                        *x += Rational::from_integer(y.into()) * c;
                    }
                }
            }
            inequalities.push(Inequality {
                class: class.index,
                covector,
                normal,
                bound: class.bound,
            });
        }
    }
    Ok(HRepresentation {
        classes,
        total,
        inequalities: Some(inequalities),
    })
}

/// `I(theta_s)` and the dimension `n - |I(theta_s)|` of the smallest faces
/// containing short roots; `n` means the short roots are interior.
pub fn short_root_face(rs: &RootSystem) -> Result<(IndexSet, usize)> {
    if rs.is_simply_laced() {
        return Err(Error::SimplyLaced);
    }
    let (set, _) = faces::classify_root_minimum(rs, rs.theta_s());
    if rs.extended().closure(set) != set {
        return Err(Error::Internal(format!("I(theta_s) = {set} is not closed")));
    }
    Ok((set, rs.rank() - set.len()))
}

/// Classifies the standard parabolic edges as two-root or three-root
/// strings. A rank-one system has no proper edges and reports long edges.
pub fn skeleton_classification(rs: &RootSystem) -> Result<SkeletonClass> {
    let mut found: Option<SkeletonClass> = None;
    for face in all_standard_parabolic_faces(rs)?.iter().filter(|f| f.dim == 1) {
        let class = classify_edge(rs, &face.roots)?;
        match found {
            Some(c) if c != class => {
                return Err(Error::Internal(format!("{}: mixed edge classes", rs.family())));
            }
            _ => found = Some(class),
        }
    }
    Ok(found.unwrap_or(SkeletonClass::LongEdges))
}

/// Checks that the roots on an edge form a string of two long roots, or of
/// two orthogonal long roots with a short midpoint.
pub fn classify_edge(rs: &RootSystem, roots: &[Root]) -> Result<SkeletonClass> {
    let long: Vec<&Root> = roots.iter().filter(|r| r.is_long()).collect();
    let short: Vec<&Root> = roots.iter().filter(|r| !r.is_long()).collect();
    let diff = |a: &Root, b: &Root| -> Vec<i64> { a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect() };
    let bad = || Error::Internal(format!("{}: edge {roots:?} is not a 2- or 3-root string", rs.family()));
    if long.len() != 2 {
        return Err(bad());
    }
    let (g, h) = (long[0], long[1]);
    match short.as_slice() {
        [] if rs.is_root(&diff(g, h)) && !rs.root_inner(g, h).is_zero() => Ok(SkeletonClass::LongEdges),
        [mid] if rs.root_inner(g, h).is_zero() && diff(g, mid) == diff(mid, h) && rs.is_root(&diff(g, mid)) => {
            Ok(SkeletonClass::DoubledShortEdges)
        }
        _ => Err(bad()),
    }
}
