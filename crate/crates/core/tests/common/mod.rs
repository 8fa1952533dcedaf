#![allow(dead_code)]

use rootpoly_core::RootSystem;

pub fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap()).unwrap()
}

/// Every irreducible type of rank at most `max`, plus the exceptional ones
/// when `exceptional` is set.
pub fn types_up_to(max: usize, exceptional: bool) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(format!("A{n}"));
    }
    for n in 2..=max {
        out.push(format!("B{n}"));
        out.push(format!("C{n}"));
    }
    for n in 4..=max {
        out.push(format!("D{n}"));
    }
    if exceptional {
        out.extend(["G2", "F4", "E6", "E7", "E8"].map(String::from));
    } else {
        for t in ["G2", "F4", "E6", "E7", "E8"] {
            if t[1..].parse::<usize>().unwrap() <= max {
                out.push(t.to_string());
            }
        }
    }
    out
}

/// Coordinate facet indices for each type.
pub fn expected_facets(t: &str) -> Vec<usize> {
    let n: usize = t[1..].parse().unwrap();
    match (&t[..1], n) {
        ("A", _) => (1..=n).collect(),
        ("B", 2) => vec![1],
        ("B", _) => vec![1, n],
        ("C", _) => vec![n],
        ("D", _) => vec![1, n - 1, n],
        ("E", 6) => vec![1, 6],
        ("E", 7) => vec![2, 7],
        ("E", 8) => vec![1, 2],
        ("F", _) => vec![4],
        ("G", _) => vec![1],
        _ => unreachable!(),
    }
}

/// Covering pairs `(i, j)` meaning `F_i ⊊ F_j`.
pub fn expected_hasse(t: &str) -> Vec<(usize, usize)> {
    let n: usize = t[1..].parse().unwrap();
    let chain = |a: usize, b: usize| (a..b).map(|k| (k, k + 1)).collect::<Vec<_>>();
    let mut h = match (&t[..1], n) {
        ("A", _) => vec![],
        ("B", _) => {
            let mut v = chain(2, n);
            v.push((2, 1));
            v
        }
        ("C", _) => chain(1, n),
        ("D", _) => {
            let mut v = chain(2, n - 2);
            v.extend([(n - 2, n - 1), (n - 2, n), (2, 1)]);
            v
        }
        ("E", 6) => vec![(2, 4), (4, 3), (3, 1), (4, 5), (5, 6)],
        ("E", 7) => vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 2)],
        ("E", 8) => vec![(8, 7), (7, 6), (6, 5), (5, 4), (4, 3), (3, 1), (4, 2)],
        ("F", _) => chain(1, 4),
        ("G", _) => vec![(2, 1)],
        _ => unreachable!(),
    };
    h.sort();
    h
}
