//! Finite-type classification of subdiagrams, Weyl group orders, coset
//! indices and reflection orbits.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::affine::{ExtendedDiagram, IndexSet, NodeSet};
use crate::root_system::{Family, Letter, RootSystem};
use crate::{Error, Rational, Result};

/// Default bound on the size of a reflection orbit.
pub const DEFAULT_ORBIT_LIMIT: usize = 1_000_000;

/// Irreducible components of a finite-type diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecomposition {
    pub components: Vec<(Family, Vec<usize>)>,
}

impl TypeDecomposition {
    /// Component types sorted, for comparisons that ignore labels.
    pub fn signature(&self) -> Vec<Family> {
        let mut v: Vec<Family> = self.components.iter().map(|(f, _)| *f).collect();
        v.sort();
        v
    }

    /// Total number of roots of the subsystem.
    pub fn root_count(&self) -> usize {
        self.components.iter().map(|(f, _)| f.root_count()).sum()
    }
}

/// Order of a Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupOrder(pub BigUint);

/// Classifies the subdiagram induced on `nodes` by a Cartan matrix with
/// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
pub fn classify(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<TypeDecomposition> {
    let mut remaining: BTreeSet<usize> = nodes.iter().copied().collect();
    let linked = |i: usize, j: usize| i != j && (cartan[i][j] != 0 || cartan[j][i] != 0);
    let mut components = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut comp = vec![start];
        remaining.remove(&start);
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            let next: Vec<usize> = remaining.iter().copied().filter(|&w| linked(v, w)).collect();
            for w in next {
                remaining.remove(&w);
                comp.push(w);
            }
            k += 1;
        }
        comp.sort_unstable();
        let family = classify_connected(cartan, &comp)?;
        components.push((family, comp));
    }
    Ok(TypeDecomposition { components })
}

/// Classifies the subdiagram of the extended diagram induced on `s`.
pub fn classify_nodes(d: &ExtendedDiagram, s: NodeSet) -> Result<TypeDecomposition> {
    classify(d.cartan_rows(), &s.to_vec())
}

fn classify_connected(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<Family> {
    let k = nodes.len();
    let fail = |why: &str| Err(Error::Unclassifiable(format!("{why} on nodes {nodes:?}")));
    if k == 1 {
        return Family::new(Letter::A, 1);
    }
    let mut neighbors: BTreeMap<usize, Vec<usize>> = nodes.iter().map(|&v| (v, Vec::new())).collect();
    let mut edges = Vec::new();
    for (a, &i) in nodes.iter().enumerate() {
        for &j in &nodes[a + 1..] {
            if cartan[i][j] != 0 || cartan[j][i] != 0 {
                let mult = cartan[i][j] * cartan[j][i];
                if !(1..=3).contains(&mult) {
                    return fail("bond of infinite or invalid multiplicity");
                }
                edges.push((i, j, mult));
                neighbors.get_mut(&i).unwrap().push(j);
                neighbors.get_mut(&j).unwrap().push(i);
            }
        }
    }
    if edges.len() != k - 1 {
        return fail("diagram contains a cycle");
    }
    let degree = |v: usize| neighbors[&v].len();
    let max_degree = nodes.iter().map(|&v| degree(v)).max().unwrap_or(0);
    let multiple: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();

    if multiple.iter().any(|e| e.2 == 3) {
        return if k == 2 { Family::new(Letter::G, 2) } else { fail("triple bond in a larger diagram") };
    }
    if max_degree > 3 {
        return fail("node of degree > 3");
    }
    if !multiple.is_empty() {
        if multiple.len() > 1 || max_degree > 2 {
            return fail("double bond with a branch or a second multiple bond");
        }
        let path = walk_path(&neighbors, nodes);
        let &&(a, b, _) = multiple.first().unwrap();
        let pa = path.iter().position(|&v| v == a).unwrap();
        let pb = path.iter().position(|&v| v == b).unwrap();
        let lo = pa.min(pb);
        if k == 2 {
            return Family::new(Letter::B, 2);
        }
        if lo == 0 || lo == k - 2 {
            let (leaf, inner) = if lo == 0 { (path[0], path[1]) } else { (path[k - 1], path[k - 2]) };
            // |<alpha_leaf, alpha_inner^vee>| > |<alpha_inner, alpha_leaf^vee>| iff leaf is longer
            let leaf_longer = cartan[inner][leaf].abs() > cartan[leaf][inner].abs();
            return Family::new(if leaf_longer { Letter::C } else { Letter::B }, k);
        }
        if k == 4 && lo == 1 {
            return Family::new(Letter::F, 4);
        }
        return fail("double bond in an interior position");
    }
    if max_degree <= 2 {
        return Family::new(Letter::A, k);
    }
    let branches: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) == 3).collect();
    if branches.len() != 1 {
        return fail("more than one branch node");
    }
    let center = branches[0];
    let mut arms: Vec<usize> = neighbors[&center]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            loop {
                let next = neighbors[&cur].iter().copied().find(|&w| w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Family::new(Letter::D, k),
        [1, 2, 2] => Family::new(Letter::E, 6),
        [1, 2, 3] => Family::new(Letter::E, 7),
        [1, 2, 4] => Family::new(Letter::E, 8),
        _ => fail("branch arms of affine or hyperbolic shape"),
    }
}

fn walk_path(neighbors: &BTreeMap<usize, Vec<usize>>, nodes: &[usize]) -> Vec<usize> {
    let start = nodes.iter().copied().find(|v| neighbors[v].len() <= 1).unwrap();
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = neighbors[&cur].iter().copied().find(|&w| w != prev) {
        prev = cur;
        cur = next;
        path.push(cur);
    }
    path
}

/// Order of the Weyl group of a single irreducible type.
pub fn family_order(f: Family) -> BigUint {
    let n = f.rank() as u64;
    let factorial = |m: u64| (1..=m).fold(BigUint::one(), |acc, x| acc * x);
    match f.letter() {
        Letter::A => factorial(n + 1),
        Letter::B | Letter::C => (BigUint::one() << n) * factorial(n),
        Letter::D => (BigUint::one() << (n - 1)) * factorial(n),
        Letter::E => BigUint::from(match n {
            6 => 51_840u64,
            7 => 2_903_040,
            _ => 696_729_600,
        }),
        Letter::F => BigUint::from(1152u32),
        Letter::G => BigUint::from(12u32),
    }
}

/// Product of the component orders; the empty diagram gives 1.
pub fn group_order(decomp: &TypeDecomposition) -> GroupOrder {
    GroupOrder(
        decomp
            .components
            .iter()
            .fold(BigUint::one(), |acc, (f, _)| acc * family_order(*f)),
    )
}

/// Order of the parabolic subgroup `W<Π_S>` of a root system.
pub fn parabolic_order(rs: &RootSystem, s: IndexSet) -> Result<GroupOrder> {
    Ok(group_order(&classify_nodes(rs.extended(), s.as_nodes())?))
}

/// `[W<Π_super> : W<Π_sub>]`.
pub fn coset_index(rs: &RootSystem, sub: IndexSet, sup: IndexSet) -> Result<BigUint> {
    if !sub.is_subset(sup) {
        return Err(Error::Internal(format!("{sub} is not a subset of {sup}")));
    }
    let big = parabolic_order(rs, sup)?.0;
    let small = parabolic_order(rs, sub)?.0;
    let (q, r) = big.div_rem(&small);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "order of W<{sub}> does not divide the order of W<{sup}>"
        )));
    }
    Ok(q)
}

/// Closure of `seed` under the simple reflections indexed by `generators`.
pub fn reflection_orbit(
    rs: &RootSystem,
    seed: &[Rational],
    generators: IndexSet,
    limit: usize,
) -> Result<BTreeSet<Vec<Rational>>> {
    let mut orbit = BTreeSet::from([seed.to_vec()]);
    let mut queue = VecDeque::from([seed.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in generators.iter() {
            let y = rs.simple_reflection(i, &x);
            if !orbit.contains(&y) {
                if orbit.len() >= limit {
                    return Err(Error::LimitExceeded {
                        what: "reflection orbit",
                        limit,
                    });
                }
                orbit.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(orbit)
}

/// Orbit of a covector `y_j = (x, alpha_j)` under `W<Π_generators>`.
///
/// Working with covectors keeps the orbit of a coweight integral:
/// `s_k` acts by `y_j -> y_j - <alpha_j, alpha_k^vee> y_k`.
pub fn covector_orbit(
    rs: &RootSystem,
    seed: &[i64],
    generators: IndexSet,
    limit: usize,
) -> Result<BTreeSet<Vec<i64>>> {
    let cartan = rs.cartan();
    let mut orbit = BTreeSet::from([seed.to_vec()]);
    let mut queue = VecDeque::from([seed.to_vec()]);
    while let Some(y) = queue.pop_front() {
        for k in generators.iter() {
            let yk = y[k - 1];
            if yk == 0 {
                continue;
            }
            let z: Vec<i64> = y
                .iter()
                .enumerate()
                .map(|(j, &v)| v - cartan.entry(k - 1, j) * yk)
                .collect();
            if !orbit.contains(&z) {
                if orbit.len() >= limit {
                    return Err(Error::LimitExceeded {
                        what: "covector orbit",
                        limit,
                    });
                }
                orbit.insert(z.clone());
                queue.push_back(z);
            }
        }
    }
    Ok(orbit)
}

/// Element of a parabolic subgroup, as an integer matrix acting on
/// simple-root coordinates, with its Coxeter length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub length: usize,
}

impl WeylElement {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Enumerates every element of `W<Π_generators>` by breadth-first search on
/// the Cayley graph; the BFS depth is the Coxeter length.
pub fn parabolic_elements(rs: &RootSystem, generators: IndexSet, limit: usize) -> Result<Vec<WeylElement>> {
    let n = rs.rank();
    let cartan = rs.cartan();
    let identity: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    // s_i as a matrix: column j is e_j - A_ij e_i
    let reflections: Vec<(usize, Vec<Vec<i64>>)> = generators
        .iter()
        .map(|i| {
            let mut m = identity.clone();
            for j in 0..n {
                m[i - 1][j] -= cartan.entry(i - 1, j);
            }
            (i, m)
        })
        .collect();
    let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    };
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut out = vec![WeylElement {
        matrix: identity.clone(),
        length: 0,
    }];
    let mut k = 0;
    while k < out.len() {
        let (m, len) = (out[k].matrix.clone(), out[k].length);
        for (_, s) in &reflections {
            let w = mul(&m, s);
            if seen.insert(w.clone()) {
                if out.len() >= limit {
                    return Err(Error::LimitExceeded {
                        what: "group enumeration",
                        limit,
                    });
                }
                out.push(WeylElement {
                    matrix: w,
                    length: len + 1,
                });
            }
        }
        k += 1;
    }
    Ok(out)
}
