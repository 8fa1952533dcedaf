//! Versioned JSON report types.
//!
//! Integers that may exceed double precision are written as JSON numbers
//! below 2^53 and as decimal strings otherwise. Rationals are always
//! strings `"p/q"` in lowest terms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rootpoly_core::Rational;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

const EXACT_FLOAT_LIMIT: u64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    #[serde(rename = "type")]
    pub kind: String,
    pub schema_version: u32,
    pub command: String,
    pub payload: Value,
}

impl Report {
    pub fn new(kind: impl Into<String>, command: &str, payload: impl Serialize) -> Self {
        Report {
            kind: kind.into(),
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            payload: serde_json::to_value(payload).expect("payloads serialize"),
        }
    }

    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&value).expect("values serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Count(pub BigUint);

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) if v < EXACT_FLOAT_LIMIT => s.serialize_u64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct CountVisitor;
        impl Visitor<'_> for CountVisitor {
            type Value = Count;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or decimal string")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Count, E> {
                Ok(Count(BigUint::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Count, E> {
                BigUint::from_str(v).map(Count).map_err(E::custom)
            }
        }
        d.deserialize_any(CountVisitor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction(pub Rational);

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| de::Error::custom(format!("expected p/q, got {s:?}")))?;
        let p: i128 = p.parse().map_err(de::Error::custom)?;
        let q: i128 = q.parse().map_err(de::Error::custom)?;
        if q <= 0 {
            return Err(de::Error::custom("denominator must be positive"));
        }
        let r = Rational::new(p, q);
        if *r.numer() != p {
            return Err(de::Error::custom(format!("{s:?} is not in lowest terms")));
        }
        Ok(Fraction(r))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfoPayload {
    pub rank: usize,
    pub num_roots: usize,
    pub num_positive_roots: usize,
    pub num_long_roots: usize,
    pub num_short_roots: usize,
    pub simply_laced: bool,
    pub theta: Vec<i64>,
    pub theta_s: Option<Vec<i64>>,
    pub marks: Vec<i64>,
    pub cartan: Vec<Vec<i64>>,
    pub weyl_group_order: Count,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceSummary {
    pub closure: Vec<usize>,
    pub border: Vec<usize>,
    pub dim: usize,
    pub num_roots: usize,
    pub num_vertices: usize,
    pub min_root: Vec<i64>,
    pub barycenter: Vec<i64>,
    pub orbit_size: Count,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stabilizer {
    pub generators: Vec<usize>,
    pub pointwise: Vec<usize>,
    pub faithful: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceDetail {
    pub requested: Vec<usize>,
    pub closure: Vec<usize>,
    pub border: Vec<usize>,
    pub dim: usize,
    pub num_roots: usize,
    pub num_vertices: usize,
    pub min_root: Vec<i64>,
    pub barycenter: Vec<i64>,
    pub orbit_size: Count,
    pub stabilizer: Stabilizer,
    pub roots: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FacetClassDto {
    pub index: usize,
    pub bound: i64,
    pub count: Count,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityDto {
    pub class: usize,
    pub covector: Vec<i64>,
    pub normal: Vec<Fraction>,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HRepDto {
    /// `"explicit"` or `"symbolic"`.
    pub mode: String,
    pub classes: Vec<FacetClassDto>,
    pub total: Count,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<InequalityDto>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortFaceDto {
    pub index_set: Vec<usize>,
    pub dim: usize,
    pub theta_s: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusPayload {
    pub rank: usize,
    pub f_polynomial: Vec<Count>,
    pub faces: Vec<FaceSummary>,
    pub h_representation: HRepDto,
    pub skeleton_class: String,
    pub short_root_face: Option<ShortFaceDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FPolyPayload {
    pub coefficients: Vec<Count>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub passed: bool,
    pub f_vector: Vec<usize>,
    pub num_facets: usize,
    pub max_rank: usize,
    pub checks: Vec<CheckDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramNode {
    pub index: usize,
    pub long: bool,
    /// Coefficient of the node in the null root; 1 for the affine node.
    pub mark: i64,
    pub facet: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramEdge {
    pub nodes: [usize; 2],
    /// Cartan integers `<alpha_b, alpha_a^vee>` and `<alpha_a, alpha_b^vee>`.
    pub cartan: [i64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramPayload {
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
    pub ascii: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkeletonPayload {
    /// `"long-edges"` or `"doubled-short-edges"`.
    pub class: String,
    pub num_edges: Count,
    pub edge_orbits: Vec<FaceSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorPayload {
    pub error: String,
    pub exit_code: i32,
}
