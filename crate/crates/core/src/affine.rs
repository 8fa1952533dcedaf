//! Extended Dynkin diagram and the closure/border operators on index sets.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::root_system::{CartanMatrix, RootSystem};
use crate::{Error, Rational, Result};

macro_rules! bitset {
    ($name:ident, $lo:expr) => {
        impl $name {
            pub const fn empty() -> Self {
                $name(0)
            }

            pub const fn from_bits(bits: u32) -> Self {
                $name(bits)
            }

            pub const fn bits(self) -> u32 {
                self.0
            }

            pub fn contains(self, i: usize) -> bool {
                i < 32 && self.0 & (1 << i) != 0
            }

            pub fn insert(&mut self, i: usize) {
                self.0 |= 1 << i;
            }

            pub fn remove(&mut self, i: usize) {
                self.0 &= !(1 << i);
            }

            pub fn with(mut self, i: usize) -> Self {
                self.insert(i);
                self
            }

            pub fn without(mut self, i: usize) -> Self {
                self.remove(i);
                self
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn union(self, other: Self) -> Self {
                $name(self.0 | other.0)
            }

            pub fn intersection(self, other: Self) -> Self {
                $name(self.0 & other.0)
            }

            pub fn difference(self, other: Self) -> Self {
                $name(self.0 & !other.0)
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            /// Members in increasing order.
            pub fn iter(self) -> impl Iterator<Item = usize> {
                ($lo..32).filter(move |&i| self.0 & (1 << i) != 0)
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (k, i) in self.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "}}")
            }
        }
    };
}

/// Subset of `[n] = {1, ..., n}`, stored as a bitmask with bit `i` for
/// `alpha_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(u32);

bitset!(IndexSet, 1);

impl IndexSet {
    /// `[n]`.
    pub fn full(n: usize) -> Self {
        IndexSet(((1u64 << (n + 1)) - 2) as u32)
    }

    /// Builds a set from 1-based indices, rejecting anything outside `1..=n`.
    pub fn from_indices(indices: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut s = IndexSet::empty();
        for i in indices {
            if !(1..=n).contains(&i) {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(1 << i)
    }

    pub fn complement(self, n: usize) -> Self {
        IndexSet::full(n).difference(self)
    }

    /// All `2^n` subsets of `[n]`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = IndexSet> {
        (0u32..(1u32 << n)).map(|b| IndexSet(b << 1))
    }

    pub fn as_nodes(self) -> NodeSet {
        NodeSet(self.0)
    }
}

/// Subset of the nodes `{0, 1, ..., n}` of the extended diagram; node `0` is
/// the affine node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet(u32);

bitset!(NodeSet, 0);

impl NodeSet {
    /// `{0, 1, ..., n}`.
    pub fn full(n: usize) -> Self {
        NodeSet(((1u64 << (n + 1)) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        NodeSet(1 << i)
    }

    /// The finite nodes, as an index set.
    pub fn finite_part(self) -> IndexSet {
        IndexSet(self.0 & !1)
    }
}

/// Diagram of `{alpha_0} ∪ Π` with `alpha_0 = -theta + delta`.
///
/// `cartan(i, j) = <alpha_j, alpha_i^vee>` on nodes `0..=n`; two nodes are
/// joined when either Cartan integer is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedDiagram {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<Rational>,
    adjacency: Vec<NodeSet>,
}

/// Builds the extended diagram of a root system.
pub fn extend(rs: &RootSystem) -> ExtendedDiagram {
    ExtendedDiagram::from_parts(rs.cartan(), rs.gram(), rs.marks())
}

impl ExtendedDiagram {
    pub(crate) fn from_parts(cartan: &CartanMatrix, gram: &[Vec<Rational>], marks: &[i64]) -> Self {
        let n = cartan.size();
        let mut c = vec![vec![0i64; n + 1]; n + 1];
        c[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                c[i + 1][j + 1] = cartan.entry(i, j);
            }
        }
        for k in 0..n {
            // <alpha_0, alpha_k^vee> = -<theta, alpha_k^vee>
            let pairing: i64 = (0..n).map(|j| marks[j] * cartan.entry(k, j)).sum();
            c[k + 1][0] = -pairing;
            // <alpha_k, alpha_0^vee> = -2 (alpha_k, theta) / (theta, theta) = -(alpha_k, theta)
            let mut ip = Rational::zero();
            for j in 0..n {
                ip += gram[k][j] * Rational::from_integer(marks[j].into());
            }
            debug_assert!(ip.is_integer());
            c[0][k + 1] = -ip.to_integer() as i64;
        }
        let mut lengths = vec![Rational::from_integer(2)];
        lengths.extend((0..n).map(|i| gram[i][i]));
        let adjacency = (0..=n)
            .map(|i| {
                let mut s = NodeSet::empty();
                for j in 0..=n {
                    if i != j && (c[i][j] != 0 || c[j][i] != 0) {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        ExtendedDiagram {
            rank: n,
            cartan: c,
            lengths,
            adjacency,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `<alpha_j, alpha_i^vee>` for nodes `i, j` in `0..=n`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_rows(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared length of node `i`; the affine node has the length of theta.
    pub fn length(&self, i: usize) -> Rational {
        self.lengths[i]
    }

    pub fn bond(&self, i: usize, j: usize) -> (i64, i64) {
        (self.cartan[i][j], self.cartan[j][i])
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> NodeSet {
        self.adjacency[i]
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank)
    }

    /// Connected component of `start` inside `within`.
    pub fn component(&self, within: NodeSet, start: usize) -> NodeSet {
        if !within.contains(start) {
            return NodeSet::empty();
        }
        let mut comp = NodeSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.adjacency[v].intersection(within).iter() {
                if !comp.contains(w) {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        comp
    }

    /// Connected components of the induced subdiagram.
    pub fn components(&self, within: NodeSet) -> Vec<NodeSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.iter().next() {
            let c = self.component(rest, v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Component of the affine node in the subdiagram on `{0} ∪ ([n] \ I)`.
    pub fn component_of_affine(&self, i: IndexSet) -> NodeSet {
        let within = self.all_nodes().difference(i.as_nodes());
        self.component(within, 0)
    }

    /// Closure: the finite nodes outside the affine component.
    pub fn closure(&self, i: IndexSet) -> IndexSet {
        let comp = self.component_of_affine(i);
        IndexSet::full(self.rank).difference(comp.finite_part())
    }

    /// Border: the nodes of the closure adjacent to the affine component.
    pub fn border(&self, i: IndexSet) -> IndexSet {
        let comp = self.component_of_affine(i);
        let closure = IndexSet::full(self.rank).difference(comp.finite_part());
        let mut out = IndexSet::empty();
        for j in closure.iter() {
            if !self.adjacency[j].intersection(comp).is_empty() {
                out.insert(j);
            }
        }
        out
    }

    /// Whether the induced subdiagram on `s` is nonempty and connected.
    pub fn is_irreducible_subsystem(&self, s: NodeSet) -> bool {
        match s.iter().next() {
            Some(v) => self.component(s, v) == s,
            None => false,
        }
    }

    /// Length of a shortest path from `from` to `to` inside `within`.
    pub fn distance(&self, within: NodeSet, from: usize, to: usize) -> Option<usize> {
        if !within.contains(from) || !within.contains(to) {
            return None;
        }
        let mut dist = vec![usize::MAX; self.rank + 1];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return Some(dist[v]);
            }
            for w in self.adjacency[v].intersection(within).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Whether every simple path from `from` to `to` passes through `via`,
    /// i.e. whether removing `via` separates them.
    pub fn on_every_path(&self, via: usize, from: usize, to: usize) -> bool {
        if via == from || via == to {
            return true;
        }
        self.distance(self.all_nodes().without(via), from, to).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::RootSystem;

    fn diagram(s: &str) -> ExtendedDiagram {
        extend(&RootSystem::new(s.parse().unwrap()).unwrap())
    }

    fn set(v: &[usize], n: usize) -> IndexSet {
        IndexSet::from_indices(v.iter().copied(), n).unwrap()
    }

    #[test]
    fn affine_node_neighbors() {
        let a2 = diagram("A2");
        assert_eq!(a2.neighbors(0).to_vec(), vec![1, 2]);
        let b2 = diagram("B2");
        assert_eq!(b2.neighbors(0).to_vec(), vec![2]);
        assert_eq!(b2.bond(0, 2), (-1, -2));
        let g2 = diagram("G2");
        assert_eq!(g2.neighbors(0).to_vec(), vec![2]);
        let c3 = diagram("C3");
        assert_eq!(c3.neighbors(0).to_vec(), vec![1]);
        let e8 = diagram("E8");
        assert_eq!(e8.neighbors(0).to_vec(), vec![8]);
        let e7 = diagram("E7");
        assert_eq!(e7.neighbors(0).to_vec(), vec![1]);
        let e6 = diagram("E6");
        assert_eq!(e6.neighbors(0).to_vec(), vec![2]);
        for s in ["A1", "B5", "D6", "F4"] {
            assert!(!diagram(s).neighbors(0).is_empty());
        }
    }

    #[test]
    fn b9_worked_example() {
        let b9 = diagram("B9");
        let i = set(&[5, 7], 9);
        assert_eq!(b9.component_of_affine(i).to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(b9.closure(i).to_vec(), vec![5, 6, 7, 8, 9]);
        assert_eq!(b9.border(i).to_vec(), vec![5]);
        let s = NodeSet::full(9).without(5);
        assert!(!b9.is_irreducible_subsystem(s));
        assert_eq!(b9.components(s).len(), 2);
    }

    #[test]
    fn small_cases() {
        let a2 = diagram("A2");
        let i = set(&[1], 2);
        assert_eq!(a2.component_of_affine(i).to_vec(), vec![0, 2]);
        assert_eq!(a2.closure(i).to_vec(), vec![1]);
        assert_eq!(a2.border(i).to_vec(), vec![1]);
        assert!(a2.is_irreducible_subsystem(NodeSet::from_bits(0b011)));
        assert_eq!(a2.closure(IndexSet::empty()), IndexSet::empty());
        assert_eq!(a2.border(IndexSet::empty()), IndexSet::empty());
        assert_eq!(a2.component_of_affine(IndexSet::empty()), NodeSet::full(2));
        assert!(a2.is_irreducible_subsystem(NodeSet::full(2)));
    }

    #[test]
    fn index_set_bounds() {
        assert!(IndexSet::from_indices([3], 2).is_err());
        assert!(IndexSet::from_indices([0], 2).is_err());
        assert_eq!(IndexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(IndexSet::all_subsets(3).count(), 8);
        assert_eq!(set(&[1, 3], 3).to_string(), "{1,3}");
    }

    #[test]
    fn path_criterion() {
        // B4: 1 - 2 - 3 => 4, with 0 attached to 2
        let b4 = diagram("B4");
        assert!(b4.on_every_path(2, 4, 0));
        assert!(b4.on_every_path(3, 4, 0));
        assert!(!b4.on_every_path(1, 4, 0));
        // on the A4 cycle the shortest path from 2 to 0 is unique but
        // another path avoids 1
        let a4 = diagram("A4");
        assert_eq!(a4.distance(a4.all_nodes().without(1), 2, 0), Some(3));
        assert!(!a4.on_every_path(1, 2, 0));
    }
}
