use rootpoly_core::enumeration::{self, SkeletonClass};
use rootpoly_core::hull::{self, FaceLattice, HullInput, PointSet, DEFAULT_MAX_DIM};
use rootpoly_core::{Error, Rational, RootSystem};

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap()).unwrap()
}

fn lattice(points: Vec<Vec<i128>>) -> FaceLattice {
    let input = HullInput::from_integer(points, DEFAULT_MAX_DIM).unwrap();
    let facets = hull::hull_facets(&input);
    hull::face_lattice(&input, &facets)
}

/// All sign and coordinate permutations of a pattern, without repeats.
fn signed_permutations(pattern: &[i128]) -> Vec<Vec<i128>> {
    let n = pattern.len();
    let mut out = std::collections::BTreeSet::new();
    let mut idx: Vec<usize> = (0..n).collect();
    permute(&mut idx, 0, &mut |perm| {
        for signs in 0..1u32 << n {
            let p: Vec<i128> = perm
                .iter()
                .enumerate()
                .map(|(k, &j)| if signs >> k & 1 == 1 { -pattern[j] } else { pattern[j] })
                .collect();
            out.insert(p);
        }
    });
    out.into_iter().collect()
}

fn permute(idx: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        f(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, f);
        idx.swap(k, i);
    }
}

fn root_f_vector(t: &str) -> Vec<usize> {
    let r = rs(t);
    let input = hull::root_input(&r, DEFAULT_MAX_DIM).unwrap();
    hull::face_lattice(&input, &hull::hull_facets(&input)).f_vector
}

#[test]
fn regular_hexagon() {
    let hex = vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![-1, 0], vec![0, -1], vec![1, -1]];
    assert_eq!(lattice(hex).f_vector, vec![6, 6]);
}

#[test]
fn cross_polytopes() {
    assert_eq!(lattice(signed_permutations(&[1, 0])).f_vector, vec![4, 4]);
    assert_eq!(lattice(signed_permutations(&[1, 0, 0])).f_vector, vec![6, 12, 8]);
    assert_eq!(lattice(signed_permutations(&[1, 0, 0, 0])).f_vector, vec![8, 24, 32, 16]);
}

#[test]
fn cuboctahedron_and_24_cell() {
    assert_eq!(lattice(signed_permutations(&[1, 1, 0])).f_vector, vec![12, 24, 14]);
    assert_eq!(lattice(signed_permutations(&[1, 1, 0, 0])).f_vector, vec![24, 96, 96, 24]);
}

#[test]
fn cube_ignores_interior_and_edge_points() {
    let mut pts = signed_permutations(&[2, 2, 2]);
    pts.extend(signed_permutations(&[2, 0, 0]));
    pts.extend(signed_permutations(&[2, 2, 0]));
    pts.push(vec![0, 0, 0]);
    let l = lattice(pts);
    assert_eq!(l.f_vector, vec![8, 12, 6]);
    assert_eq!(l.vertices().len(), 8);
}

#[test]
fn root_polytopes_match_classical_solids() {
    assert_eq!(root_f_vector("A2"), vec![6, 6]);
    assert_eq!(root_f_vector("C2"), vec![4, 4]);
    assert_eq!(root_f_vector("C3"), vec![6, 12, 8]);
    assert_eq!(root_f_vector("A3"), vec![12, 24, 14]);
    assert_eq!(root_f_vector("D4"), vec![24, 96, 96, 24]);
    assert_eq!(root_f_vector("B3"), root_f_vector("A3"));
    assert_eq!(root_f_vector("B4"), root_f_vector("D4"));
    assert_eq!(root_f_vector("F4"), root_f_vector("D4"));
    assert_eq!(root_f_vector("G2"), root_f_vector("A2"));
}

#[test]
fn lattice_is_closed_under_intersection() {
    for t in ["A3", "B3", "C3", "G2", "C4"] {
        let r = rs(t);
        let input = hull::root_input(&r, DEFAULT_MAX_DIM).unwrap();
        let facets = hull::hull_facets(&input);
        let l = hull::face_lattice(&input, &facets);
        for a in &l.faces {
            for b in &l.faces {
                assert!(l.find(a.points.intersection(b.points)).is_some(), "{t}");
            }
        }
        for f in &facets {
            let tight: Vec<Vec<i128>> = f.incident.iter().map(|k| input.points()[k].clone()).collect();
            assert_eq!(rootpoly_core::linalg::affine_dimension(&tight), Some(r.rank() - 1));
        }
    }
}

#[test]
fn parallel_blocks_merge_to_sequential_result() {
    let r = rs("B4");
    let input = hull::root_input(&r, DEFAULT_MAX_DIM).unwrap();
    let sequential = hull::hull_facets(&input);
    let reversed = hull::merge_facets((0..input.num_blocks()).rev().map(|b| input.search_block(b)));
    assert_eq!(sequential, reversed);
}

#[test]
fn explicit_inequalities_are_facets() {
    for t in ["A2", "A3", "B3", "C3", "B4", "C4", "D4", "F4", "G2"] {
        let r = rs(t);
        let h = enumeration::h_representation(&r, 10_000).unwrap();
        for q in h.inequalities.unwrap() {
            let tight: Vec<Vec<i128>> = r
                .long_roots()
                .filter(|b| b.coords().iter().zip(&q.covector).map(|(x, y)| x * y).sum::<i64>() == q.bound)
                .map(|b| b.to_i128())
                .collect();
            assert_eq!(rootpoly_core::linalg::affine_dimension(&tight), Some(r.rank() - 1), "{t}");
        }
    }
}

#[test]
fn edges_follow_root_strings() {
    for (t, class) in [
        ("A3", SkeletonClass::LongEdges),
        ("B3", SkeletonClass::LongEdges),
        ("C2", SkeletonClass::DoubledShortEdges),
        ("C3", SkeletonClass::DoubledShortEdges),
        ("C4", SkeletonClass::DoubledShortEdges),
        ("F4", SkeletonClass::LongEdges),
        ("G2", SkeletonClass::LongEdges),
    ] {
        let r = rs(t);
        let input = hull::root_input(&r, DEFAULT_MAX_DIM).unwrap();
        let l = hull::face_lattice(&input, &hull::hull_facets(&input));
        let edges = hull::one_skeleton(&r, &l).unwrap();
        assert!(!edges.is_empty());
        assert!(edges.iter().all(|(_, c)| *c == class), "{t}");
    }
}

#[test]
fn refusals_name_the_bound() {
    assert_eq!(
        hull::cross_validate(&rs("E6"), DEFAULT_MAX_DIM).unwrap_err(),
        Error::RankBound { rank: 6, bound: 5 }
    );
    let flat: Vec<Vec<Rational>> = (0..4).map(|k| vec![Rational::from_integer(k), Rational::from_integer(0)]).collect();
    assert!(matches!(
        HullInput::new(&flat, 5).unwrap_err(),
        Error::Degenerate { expected: 2, found: 1 }
    ));
    assert_eq!(PointSet::from_indices([0, 2]).len(), 2);
}

#[test]
fn every_type_up_to_rank_five_validates() {
    let types = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4", "D5", "G2", "F4",
    ];
    for t in types {
        let report = hull::cross_validate(&rs(t), DEFAULT_MAX_DIM).unwrap();
        assert!(report.passed(), "{t}: {:?}", report.failures().collect::<Vec<_>>());
    }
}
