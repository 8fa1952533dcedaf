//! Command implementations: each builds a typed payload and a plain-text
//! rendering of it.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;
use rootpoly_core::enumeration::{self, SkeletonClass};
use rootpoly_core::faces::{self, Face};
use rootpoly_core::hull::{self, DEFAULT_MAX_DIM};
use rootpoly_core::weyl;
use rootpoly_core::{Error, IndexSet, Root, RootSystem};

use crate::diagram;
use crate::report::*;

/// Environment variable holding the worker count for the hull oracle.
pub const WORKERS_ENV: &str = "ROOTPOLY_WORKERS";

pub struct Output {
    pub report: Report,
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(report: Report, text: String) -> Self {
        Output {
            report,
            text,
            exit_code: 0,
        }
    }
}

fn list(v: &[impl std::fmt::Display]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn coords(r: &Root) -> Vec<i64> {
    r.coords().to_vec()
}

pub fn info(rs: &RootSystem) -> Result<Output, Error> {
    let n = rs.rank();
    let long = rs.long_roots().count();
    let order = weyl::parabolic_order(rs, IndexSet::full(n))?.0;
    let payload = InfoPayload {
        rank: n,
        num_roots: rs.roots().len(),
        num_positive_roots: rs.positive_roots().len(),
        num_long_roots: long,
        num_short_roots: rs.roots().len() - long,
        simply_laced: rs.is_simply_laced(),
        theta: coords(rs.theta()),
        theta_s: (!rs.is_simply_laced()).then(|| coords(rs.theta_s())),
        marks: rs.marks().to_vec(),
        cartan: rs.cartan().rows().to_vec(),
        weyl_group_order: order.into(),
    };
    let mut text = String::new();
    writeln!(text, "type {}", rs.family()).unwrap();
    writeln!(text, "rank {n}").unwrap();
    writeln!(
        text,
        "roots {} ({} positive; {} long, {} short)",
        payload.num_roots, payload.num_positive_roots, payload.num_long_roots, payload.num_short_roots
    )
    .unwrap();
    writeln!(text, "highest root {}", list(&payload.theta)).unwrap();
    if let Some(ts) = &payload.theta_s {
        writeln!(text, "highest short root {}", list(ts)).unwrap();
    }
    writeln!(text, "marks {}", list(&payload.marks)).unwrap();
    writeln!(text, "Weyl group order {}", payload.weyl_group_order).unwrap();
    Ok(Output::ok(Report::new(rs.family().to_string(), "info", payload), text))
}

fn orbit_size(rs: &RootSystem, face: &Face) -> Result<BigUint, Error> {
    let stab = faces::stabilizer_generators(rs, face.closure)?;
    weyl::coset_index(rs, stab.generators, IndexSet::full(rs.rank()))
}

fn summary(rs: &RootSystem, face: &Face, orbit: BigUint) -> Result<FaceSummary, Error> {
    Ok(FaceSummary {
        closure: face.closure.to_vec(),
        border: face.border.to_vec(),
        dim: face.dim,
        num_roots: face.num_roots(),
        num_vertices: face.num_vertices(),
        min_root: coords(&face.min_root),
        barycenter: faces::barycenter(rs, face.closure)?,
        orbit_size: orbit.into(),
    })
}

fn hrep_dto(h: &enumeration::HRepresentation) -> HRepDto {
    HRepDto {
        mode: if h.is_explicit() { "explicit" } else { "symbolic" }.to_string(),
        classes: h
            .classes
            .iter()
            .map(|c| FacetClassDto {
                index: c.index,
                bound: c.bound,
                count: c.count.clone().into(),
            })
            .collect(),
        total: h.total.clone().into(),
        inequalities: h.inequalities.as_ref().map(|v| {
            v.iter()
                .map(|q| InequalityDto {
                    class: q.class,
                    covector: q.covector.clone(),
                    normal: q.normal.iter().map(|&x| Fraction(x)).collect(),
                    bound: q.bound,
                })
                .collect()
        }),
    }
}

fn skeleton_name(c: SkeletonClass) -> &'static str {
    match c {
        SkeletonClass::LongEdges => "long-edges",
        SkeletonClass::DoubledShortEdges => "doubled-short-edges",
    }
}

fn short_face(rs: &RootSystem) -> Result<Option<ShortFaceDto>, Error> {
    if rs.is_simply_laced() {
        return Ok(None);
    }
    let (set, dim) = enumeration::short_root_face(rs)?;
    Ok(Some(ShortFaceDto {
        index_set: set.to_vec(),
        dim,
        theta_s: coords(rs.theta_s()),
    }))
}

pub fn faces_census(rs: &RootSystem) -> Result<Output, Error> {
    let fpoly = enumeration::f_polynomial(rs)?;
    let faces = enumeration::orbit_decomposition(rs)?
        .into_iter()
        .map(|(f, size)| summary(rs, &f, size))
        .collect::<Result<Vec<_>, _>>()?;
    let h = enumeration::h_representation(rs, 0)?;
    let payload = CensusPayload {
        rank: rs.rank(),
        f_polynomial: fpoly.coeffs.iter().cloned().map(Count::from).collect(),
        faces,
        h_representation: hrep_dto(&h),
        skeleton_class: skeleton_name(enumeration::skeleton_classification(rs)?).to_string(),
        short_root_face: short_face(rs)?,
    };
    let mut text = String::new();
    writeln!(text, "{} standard parabolic faces of {}", payload.faces.len(), rs.family()).unwrap();
    writeln!(text, "{:>4}  {:<16} {:<12} {:>6} {:>9} {:>12}", "dim", "closure", "border", "roots", "vertices", "orbit").unwrap();
    for f in &payload.faces {
        writeln!(
            text,
            "{:>4}  {:<16} {:<12} {:>6} {:>9} {:>12}",
            f.dim,
            list(&f.closure),
            list(&f.border),
            f.num_roots,
            f.num_vertices,
            f.orbit_size.to_string()
        )
        .unwrap();
    }
    writeln!(text, "f-polynomial {}", list(&payload.f_polynomial)).unwrap();
    writeln!(text, "facets {}", payload.h_representation.total).unwrap();
    writeln!(text, "skeleton {}", payload.skeleton_class).unwrap();
    Ok(Output::ok(Report::new(rs.family().to_string(), "faces", payload), text))
}

pub fn face_detail(rs: &RootSystem, indices: &[usize]) -> Result<Output, Error> {
    let set = IndexSet::from_indices(indices.iter().copied(), rs.rank())?;
    let face = faces::face_descriptor(rs, set)?;
    let stab = faces::stabilizer_generators(rs, set)?;
    let orbit = orbit_size(rs, &face)?;
    let payload = FaceDetail {
        requested: set.to_vec(),
        closure: face.closure.to_vec(),
        border: face.border.to_vec(),
        dim: face.dim,
        num_roots: face.num_roots(),
        num_vertices: face.num_vertices(),
        min_root: coords(&face.min_root),
        barycenter: faces::barycenter(rs, set)?,
        orbit_size: orbit.into(),
        stabilizer: Stabilizer {
            generators: stab.generators.to_vec(),
            pointwise: stab.pointwise.to_vec(),
            faithful: stab.faithful.to_vec(),
        },
        roots: face.roots.iter().map(coords).collect(),
        vertices: face.vertices.iter().map(coords).collect(),
    };
    let mut text = String::new();
    writeln!(text, "face F_I of {} with I = {}", rs.family(), set).unwrap();
    writeln!(text, "closure {}", face.closure).unwrap();
    writeln!(text, "border {}", face.border).unwrap();
    writeln!(text, "dim {}", face.dim).unwrap();
    writeln!(text, "roots {} ({} vertices)", payload.num_roots, payload.num_vertices).unwrap();
    writeln!(text, "minimal root {}", list(&payload.min_root)).unwrap();
    writeln!(text, "stabilizer generated by {}", stab.generators).unwrap();
    writeln!(text, "orbit size {}", payload.orbit_size).unwrap();
    Ok(Output::ok(Report::new(rs.family().to_string(), "faces", payload), text))
}

pub fn fpoly(rs: &RootSystem) -> Result<Output, Error> {
    let f = enumeration::f_polynomial(rs)?;
    let payload = FPolyPayload {
        coefficients: f.coeffs.iter().cloned().map(Count::from).collect(),
    };
    let text = format!("{}\n", list(&payload.coefficients));
    Ok(Output::ok(Report::new(rs.family().to_string(), "fpoly", payload), text))
}

pub fn hrep(rs: &RootSystem, limit: usize) -> Result<Output, Error> {
    let h = enumeration::h_representation(rs, limit)?;
    let payload = hrep_dto(&h);
    let mut text = String::new();
    writeln!(text, "{} facets in {} classes ({})", payload.total, payload.classes.len(), payload.mode).unwrap();
    for c in &payload.classes {
        writeln!(text, "class i={}: W-orbit of (omega_{}^vee, x) <= {}, {} inequalities", c.index, c.index, c.bound, c.count).unwrap();
    }
    if let Some(ineqs) = &payload.inequalities {
        for q in ineqs {
            let terms: Vec<String> = q
                .covector
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, c)| format!("{c}*x{}", j + 1))
                .collect();
            writeln!(text, "{} <= {}", terms.join(" + ").replace("+ -", "- "), q.bound).unwrap();
        }
    } else {
        writeln!(text, "explicit list omitted: more than {limit} inequalities").unwrap();
    }
    Ok(Output::ok(Report::new(rs.family().to_string(), "hrep", payload), text))
}

/// Worker count from the environment; `None` lets rayon decide.
pub fn workers_from_env() -> Result<Option<usize>, String> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(format!("{WORKERS_ENV} must be a positive integer, got {v:?}")),
        },
    }
}

pub fn verify(rs: &RootSystem, max_rank: usize, workers: Option<usize>) -> Result<Output, Error> {
    let input = hull::root_input(rs, max_rank)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = workers {
        builder = builder.num_threads(k);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let blocks = input.num_blocks();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let noisy = rs.rank() >= DEFAULT_MAX_DIM;
    let found = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| {
                let f = input.search_block(b);
                let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
                if noisy && k * 4 % blocks < 4 {
                    eprintln!("verify {}: {k}/{blocks} blocks", rs.family());
                }
                f
            })
            .collect::<Vec<_>>()
    });
    let facets = hull::merge_facets(found);
    let cv = hull::cross_validate_with(rs, &input, &facets)?;
    let payload = VerifyPayload {
        passed: cv.passed(),
        f_vector: cv.f_vector.clone(),
        num_facets: cv.num_facets,
        max_rank,
        checks: cv
            .checks
            .iter()
            .map(|c| CheckDto {
                name: c.name.to_string(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    };
    let mut text = String::new();
    writeln!(text, "oracle f-vector of {}: {}", rs.family(), list(&payload.f_vector)).unwrap();
    for c in &payload.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            writeln!(text, "{mark} {}", c.name).unwrap();
        } else {
            writeln!(text, "{mark} {}: {}", c.name, c.detail).unwrap();
        }
    }
    let exit_code = if payload.passed { 0 } else { 2 };
    Ok(Output {
        report: Report::new(rs.family().to_string(), "verify", payload),
        text,
        exit_code,
    })
}

pub fn diagram(rs: &RootSystem) -> Result<Output, Error> {
    let d = rs.extended();
    let n = rs.rank();
    let facets = enumeration::facet_indices(rs);
    let ascii = diagram::render(rs, &facets);
    let nodes = (0..=n)
        .map(|i| DiagramNode {
            index: i,
            long: d.length(i) == rootpoly_core::Rational::from_integer(2),
            mark: if i == 0 { 1 } else { rs.mark(i) },
            facet: facets.contains(&i),
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..=n {
        for b in a + 1..=n {
            if d.adjacent(a, b) {
                let (ab, ba) = d.bond(a, b);
                edges.push(DiagramEdge {
                    nodes: [a, b],
                    cartan: [ab, ba],
                });
            }
        }
    }
    let mut text = ascii.clone();
    text.push_str("[i] marks the nodes whose coordinate faces are facets\n");
    let payload = DiagramPayload { nodes, edges, ascii };
    Ok(Output::ok(Report::new(rs.family().to_string(), "diagram", payload), text))
}

pub fn skeleton(rs: &RootSystem) -> Result<Output, Error> {
    let class = enumeration::skeleton_classification(rs)?;
    let edges = enumeration::orbit_decomposition(rs)?
        .into_iter()
        .filter(|(f, _)| f.dim == 1 && rs.rank() > 1)
        .map(|(f, size)| summary(rs, &f, size))
        .collect::<Result<Vec<_>, _>>()?;
    let total: BigUint = edges.iter().map(|e| &e.orbit_size.0).sum();
    let payload = SkeletonPayload {
        class: skeleton_name(class).to_string(),
        num_edges: total.into(),
        edge_orbits: edges,
    };
    let text = format!(
        "{}: {} edges in {} orbits, {}\n",
        rs.family(),
        payload.num_edges,
        payload.edge_orbits.len(),
        payload.class
    );
    Ok(Output::ok(Report::new(rs.family().to_string(), "skeleton", payload), text))
}

pub fn shortface(rs: &RootSystem) -> Result<Output, Error> {
    let dto = short_face(rs)?.ok_or(Error::SimplyLaced)?;
    let text = if dto.dim == rs.rank() {
        format!(
            "I(theta_s) = {}: short roots lie in the interior (no proper face contains one)\n",
            list(&dto.index_set)
        )
    } else {
        format!(
            "I(theta_s) = {}: smallest faces containing short roots have dimension {}\n",
            list(&dto.index_set),
            dto.dim
        )
    };
    Ok(Output::ok(Report::new(rs.family().to_string(), "shortface", dto), text))
}
