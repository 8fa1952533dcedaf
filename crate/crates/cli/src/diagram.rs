//! ASCII drawings of extended Dynkin diagrams in the usual layout.

use rootpoly_core::root_system::Letter;
use rootpoly_core::{ExtendedDiagram, RootSystem};

/// A horizontal row of nodes, plus short vertical arms hanging above or
/// below a row node. `wrap` joins the two ends of the row through node 0.
struct Layout {
    row: Vec<usize>,
    above: Vec<(usize, Vec<usize>)>,
    below: Vec<(usize, Vec<usize>)>,
    wrap: bool,
}

fn layout(rs: &RootSystem) -> Layout {
    let n = rs.rank();
    let f = rs.family();
    let (mut above, mut below) = (Vec::new(), Vec::new());
    let mut wrap = false;
    let row: Vec<usize> = match (f.letter(), n) {
        (Letter::A, 1) => vec![0, 1],
        (Letter::A, _) => {
            wrap = true;
            (1..=n).collect()
        }
        (Letter::B, 2) => vec![1, 2, 0],
        (Letter::B, _) => {
            above.push((2, vec![0]));
            (1..=n).collect()
        }
        (Letter::C, _) => (0..=n).collect(),
        (Letter::D, 4) => {
            above.push((2, vec![0]));
            below.push((2, vec![4]));
            vec![1, 2, 3]
        }
        (Letter::D, _) => {
            above.push((2, vec![0]));
            above.push((n - 2, vec![n]));
            (1..n).collect()
        }
        (Letter::E, 6) => {
            below.push((4, vec![2, 0]));
            vec![1, 3, 4, 5, 6]
        }
        (Letter::E, 7) => {
            below.push((4, vec![2]));
            vec![0, 1, 3, 4, 5, 6, 7]
        }
        (Letter::E, _) => {
            below.push((4, vec![2]));
            vec![1, 3, 4, 5, 6, 7, 8, 0]
        }
        (Letter::F, _) => (0..=4).collect(),
        (Letter::G, _) => vec![0, 2, 1],
    };
    Layout { row, above, below, wrap }
}

fn label(i: usize, facets: &[usize]) -> String {
    if i == 0 {
        "(0)".to_string()
    } else if facets.contains(&i) {
        format!("[{i}]")
    } else {
        i.to_string()
    }
}

/// Bond between horizontally adjacent nodes; arrows point to the shorter root.
fn bond(d: &ExtendedDiagram, a: usize, b: usize) -> &'static str {
    let (ab, ba) = d.bond(a, b);
    match (ab.abs(), ba.abs()) {
        (1, 1) => "---",
        (2, 2) => "<=>",
        (1, 2) => "==>",
        (2, 1) => "<==",
        (1, 3) => "=>>",
        (3, 1) => "<<=",
        _ => " ? ",
    }
}

fn put(line: &mut Vec<char>, col: usize, s: &str) {
    let end = col + s.chars().count();
    if line.len() < end {
        line.resize(end, ' ');
    }
    for (k, c) in s.chars().enumerate() {
        line[col + k] = c;
    }
}

fn finish(line: Vec<char>) -> String {
    line.into_iter().collect::<String>().trim_end().to_string()
}

/// Renders the extended diagram; facet-defining nodes appear as `[i]`.
pub fn render(rs: &RootSystem, facets: &[usize]) -> String {
    let d = rs.extended();
    let lay = layout(rs);
    let margin = if lay.wrap { 2 } else { 0 };
    let mut row = Vec::new();
    let mut centers = Vec::new();
    let mut col = margin;
    for (k, &v) in lay.row.iter().enumerate() {
        let l = label(v, facets);
        centers.push(col + l.chars().count() / 2);
        put(&mut row, col, &l);
        col += l.chars().count();
        if let Some(&w) = lay.row.get(k + 1) {
            put(&mut row, col, &format!(" {} ", bond(d, v, w)));
            col += 5;
        }
    }
    let center_of = |v: usize| centers[lay.row.iter().position(|&x| x == v).expect("attachment on row")];
    let arm = |nodes: &[usize], at: usize| -> Vec<Vec<char>> {
        let mut lines = Vec::new();
        for &v in nodes {
            let l = label(v, facets);
            let mut bar = Vec::new();
            put(&mut bar, at, "|");
            let mut text = Vec::new();
            put(&mut text, at.saturating_sub(l.chars().count() / 2), &l);
            lines.push(bar);
            lines.push(text);
        }
        lines
    };

    let mut out: Vec<String> = Vec::new();
    if lay.wrap {
        let (left, right) = (centers[0], *centers.last().expect("nonempty row"));
        let mut top = Vec::new();
        put(&mut top, left, &"-".repeat(right - left + 1));
        put(&mut top, left, "+");
        put(&mut top, right, "+");
        let mid = (left + right) / 2;
        put(&mut top, mid - 1, "(0)");
        let mut bars = Vec::new();
        put(&mut bars, left, "|");
        put(&mut bars, right, "|");
        out.push(finish(top));
        out.push(finish(bars));
    }
    let mut upper: Vec<Vec<char>> = Vec::new();
    for (at, nodes) in &lay.above {
        let lines = arm(nodes, center_of(*at));
        // arms above are drawn bottom-up
        for (k, line) in lines.into_iter().enumerate() {
            if upper.len() <= k {
                upper.push(Vec::new());
            }
            for (c, ch) in line.into_iter().enumerate() {
                if ch != ' ' {
                    put(&mut upper[k], c, &ch.to_string());
                }
            }
        }
    }
    for line in upper.into_iter().rev() {
        out.push(finish(line));
    }
    out.push(finish(row));
    for (at, nodes) in &lay.below {
        for line in arm(nodes, center_of(*at)) {
            out.push(finish(line));
        }
    }
    let mut text = out.join("\n");
    text.push('\n');
    text
}

/// Number of bonds drawn by `render`, for consistency checks.
pub fn drawn_edges(rs: &RootSystem) -> usize {
    let lay = layout(rs);
    let arms: usize = lay.above.iter().chain(&lay.below).map(|(_, v)| v.len()).sum();
    lay.row.len() - 1 + arms + if lay.wrap { 2 } else { 0 }
}
