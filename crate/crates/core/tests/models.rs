//! Root systems built directly from Euclidean coordinates, compared with
//! the closure construction in simple-root coordinates.

use std::collections::BTreeSet;

use num_rational::Ratio;
use rootpoly_core::RootSystem;

type Q = Ratio<i128>;

struct Model {
    roots: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn e(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn add(a: &[i64], b: &[i64], s: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

fn pm_pairs(n: usize, scale: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = s * scale;
                v[j] = t * scale;
                out.push(v);
            }
        }
    }
    out
}

fn model_a(n: usize) -> Model {
    let d = n + 1;
    let mut roots = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                roots.push(add(&e(d, i), &e(d, j), -1));
            }
        }
    }
    let simple = (0..n).map(|i| add(&e(n + 1, i), &e(n + 1, i + 1), -1)).collect();
    Model { roots, simple }
}

fn model_bcd(letter: char, n: usize) -> Model {
    let mut roots = pm_pairs(n, 1);
    let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&e(n, i), &e(n, i + 1), -1)).collect();
    match letter {
        'B' => {
            for i in 0..n {
                roots.push(e(n, i));
                roots.push(add(&vec![0; n], &e(n, i), -1));
            }
            simple.push(e(n, n - 1));
        }
        'C' => {
            for i in 0..n {
                roots.push(add(&vec![0; n], &e(n, i), 2));
                roots.push(add(&vec![0; n], &e(n, i), -2));
            }
            simple.push(add(&vec![0; n], &e(n, n - 1), 2));
        }
        _ => simple.push(add(&e(n, n - 2), &e(n, n - 1), 1)),
    }
    Model { roots, simple }
}

fn model_g2() -> Model {
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(add(&e(3, i), &e(3, j), -1));
                let k = 3 - i - j;
                let long = add(&add(&add(&[0; 3], &e(3, i), 2), &e(3, j), -1), &e(3, k), -1);
                if !roots.contains(&long) {
                    roots.push(long.clone());
                    roots.push(long.iter().map(|x| -x).collect());
                }
            }
        }
    }
    let simple = vec![vec![1, -1, 0], vec![-2, 1, 1]];
    Model { roots, simple }
}

/// Coordinates doubled so that half-integer vectors stay integral.
fn model_f4() -> Model {
    let mut roots = pm_pairs(4, 2);
    for i in 0..4 {
        roots.push(add(&[0; 4], &e(4, i), 2));
        roots.push(add(&[0; 4], &e(4, i), -2));
    }
    for signs in 0..16 {
        roots.push((0..4).map(|k| if signs >> k & 1 == 1 { -1 } else { 1 }).collect());
    }
    let simple = vec![vec![0, 2, -2, 0], vec![0, 0, 2, -2], vec![0, 0, 0, 2], vec![1, -1, -1, -1]];
    Model { roots, simple }
}

/// E8 in doubled coordinates; E7 and E6 are the roots orthogonal to
/// `e7 + e8`, and additionally to `e6 - e7`.
fn model_e(n: usize) -> Model {
    let mut roots = pm_pairs(8, 2);
    for signs in 0..256u32 {
        if signs.count_ones() % 2 == 0 {
            roots.push((0..8).map(|k| if signs >> k & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], add(&e(8, 0), &e(8, 1), 1)];
    for i in 0..6 {
        simple.push(add(&e(8, i + 1), &e(8, i), -1).iter().map(|x| 2 * x).collect());
    }
    simple[1] = simple[1].iter().map(|x| 2 * x).collect();
    let mut cuts = Vec::new();
    if n <= 7 {
        cuts.push(add(&e(8, 6), &e(8, 7), 1));
    }
    if n == 6 {
        cuts.push(add(&e(8, 5), &e(8, 6), -1));
    }
    roots.retain(|r| cuts.iter().all(|c| dot(r, c) == 0));
    simple.truncate(n);
    Model { roots, simple }
}

fn solve(m: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Vec<Q> {
    let n = m.len();
    let mut a = m;
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != Q::from_integer(0)).unwrap();
        a.swap(c, p);
        rhs.swap(c, p);
        for r in 0..n {
            if r != c && a[r][c] != Q::from_integer(0) {
                let f = a[r][c] / a[c][c];
                for k in 0..n {
                    let v = a[c][k];
                    a[r][k] -= f * v;
                }
                let v = rhs[c];
                rhs[r] -= f * v;
            }
        }
    }
    (0..n).map(|i| rhs[i] / a[i][i]).collect()
}

fn simple_coords(m: &Model, v: &[i64]) -> Vec<i64> {
    let gram: Vec<Vec<Q>> = m
        .simple
        .iter()
        .map(|a| m.simple.iter().map(|b| Q::from_integer(dot(a, b).into())).collect())
        .collect();
    let rhs = m.simple.iter().map(|a| Q::from_integer(dot(a, v).into())).collect();
    solve(gram, rhs)
        .into_iter()
        .map(|q| {
            assert!(q.is_integer(), "non-integral coordinate");
            *q.numer() as i64
        })
        .collect()
}

fn compare(name: &str, m: Model) {
    let rs = RootSystem::new(name.parse().unwrap()).unwrap();
    let n = rs.rank();
    let max_len = m.roots.iter().map(|r| dot(r, r)).max().unwrap();
    let model: BTreeSet<(Vec<i64>, bool)> = m
        .roots
        .iter()
        .map(|r| (simple_coords(&m, r), dot(r, r) == max_len))
        .collect();
    assert_eq!(model.len(), m.roots.len(), "{name}: duplicate roots");
    let built: BTreeSet<(Vec<i64>, bool)> = rs.roots().iter().map(|r| (r.coords().to_vec(), r.is_long())).collect();
    assert_eq!(model, built, "{name}: root sets differ");

    for i in 0..n {
        for j in 0..n {
            let aij = 2 * dot(&m.simple[j], &m.simple[i]) / dot(&m.simple[i], &m.simple[i]);
            assert_eq!(rs.cartan().entry(i, j), aij, "{name}: Cartan ({i},{j})");
            let g = Q::new((2 * dot(&m.simple[i], &m.simple[j])).into(), max_len.into());
            assert_eq!(rs.gram()[i][j], g, "{name}: Gram ({i},{j})");
        }
    }

    let highest = model.iter().max_by_key(|(c, _)| c.iter().sum::<i64>()).unwrap();
    assert_eq!(rs.theta().coords(), &highest.0[..], "{name}: highest root");
    for (c, _) in &model {
        assert!(c.iter().zip(rs.marks()).all(|(x, m)| x <= m), "{name}: {c:?} exceeds the marks");
    }
}

#[test]
fn type_a() {
    for n in 1..=8 {
        compare(&format!("A{n}"), model_a(n));
    }
}

#[test]
fn types_bcd() {
    for n in 2..=8 {
        compare(&format!("B{n}"), model_bcd('B', n));
        compare(&format!("C{n}"), model_bcd('C', n));
    }
    for n in 4..=8 {
        compare(&format!("D{n}"), model_bcd('D', n));
    }
}

#[test]
fn exceptional_types() {
    compare("G2", model_g2());
    compare("F4", model_f4());
    compare("E6", model_e(6));
    compare("E7", model_e(7));
    compare("E8", model_e(8));
}

#[test]
fn highest_roots() {
    let marks = |s: &str| RootSystem::new(s.parse().unwrap()).unwrap().marks().to_vec();
    assert_eq!(marks("E6"), vec![1, 2, 2, 3, 2, 1]);
    assert_eq!(marks("E7"), vec![2, 2, 3, 4, 3, 2, 1]);
    assert_eq!(marks("E8"), vec![2, 3, 4, 6, 5, 4, 3, 2]);
    assert_eq!(marks("F4"), vec![2, 3, 4, 2]);
    assert_eq!(marks("G2"), vec![3, 2]);
    assert_eq!(marks("B4"), vec![1, 2, 2, 2]);
    assert_eq!(marks("C4"), vec![2, 2, 2, 1]);
    assert_eq!(marks("D5"), vec![1, 2, 2, 1, 1]);
    let theta_s = |s: &str| RootSystem::new(s.parse().unwrap()).unwrap().theta_s().coords().to_vec();
    assert_eq!(theta_s("B3"), vec![1, 1, 1]);
    assert_eq!(theta_s("C3"), vec![1, 2, 1]);
    assert_eq!(theta_s("F4"), vec![1, 2, 3, 2]);
    assert_eq!(theta_s("G2"), vec![2, 1]);
}
