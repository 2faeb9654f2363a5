//! Polygon files.
//!
//! A polygon file is a JSON object:
//!
//! ```text
//! {
//!   "name": "nonagon",            optional string
//!   "vertices": [[0, 0], [1, 5], ["1/2", 3]],
//!   "metadata": { ... }            optional, any JSON object
//! }
//! ```
//!
//! Each coordinate is a JSON integer or a string `"p"` or `"p/q"` with
//! decimal integers `p`, `q` (`q != 0`, optional leading `-`). Fractions
//! with exponents or decimal points are rejected so no value is ever
//! rounded. Unknown top-level keys are rejected.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::{Point, Rational};
use crate::polygon::{PolygonError, SimplePolygon};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid polygon: {0}")]
    Validation(#[from] PolygonError),
}

/// A parsed polygon file.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonFile {
    pub name: Option<String>,
    pub polygon: SimplePolygon,
    pub metadata: Option<BTreeMap<String, Value>>,
}

struct Coord(Rational);

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coord;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coord, E> {
                Ok(Coord(Rational::from_integer(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coord, E> {
                Ok(Coord(Rational::from(num_bigint::BigInt::from(v))))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coord, E> {
                Err(E::custom(format_args!(
                    "floating-point coordinate {v} is not accepted; write it as a \"p/q\" string"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coord, E> {
                v.parse()
                    .map(Coord)
                    .map_err(|e| E::custom(format_args!("bad rational {v:?}: {e}")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: Option<String>,
    vertices: Vec<(Coord, Coord)>,
    metadata: Option<BTreeMap<String, Value>>,
}

pub fn parse_polygon_file(text: &str) -> Result<PolygonFile, IoError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| IoError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let vertices = raw
        .vertices
        .into_iter()
        .map(|(x, y)| Point::new(x.0, y.0))
        .collect();
    Ok(PolygonFile {
        name: raw.name,
        polygon: SimplePolygon::new(vertices)?,
        metadata: raw.metadata,
    })
}

pub fn parse_polygon(text: &str) -> Result<SimplePolygon, IoError> {
    parse_polygon_file(text).map(|f| f.polygon)
}

/// Integer when it fits in `i64`, otherwise the canonical `"p/q"` string.
pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    match r.is_integer().then(|| r.numer().to_i64()).flatten() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&r.to_string()),
    }
}

struct R<'a>(&'a Rational);

impl Serialize for R<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser_rational(self.0, s)
    }
}

struct P<'a>(&'a Point);

impl Serialize for P<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (R(&self.0.x), R(&self.0.y)).serialize(s)
    }
}

pub fn ser_point<S: Serializer>(p: &Point, s: S) -> Result<S::Ok, S::Error> {
    P(p).serialize(s)
}

pub fn ser_points<S: Serializer>(pts: &[Point], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(pts.len()))?;
    for p in pts {
        seq.serialize_element(&P(p))?;
    }
    seq.end()
}

pub fn ser_segment<S: Serializer>(seg: &crate::exact::Segment, s: S) -> Result<S::Ok, S::Error> {
    (P(&seg.a), P(&seg.b)).serialize(s)
}

pub fn ser_triangles<S: Serializer>(tris: &[[Point; 3]], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(tris.len()))?;
    for [a, b, c] in tris {
        seq.serialize_element(&(P(a), P(b), P(c)))?;
    }
    seq.end()
}

/// `{"vertices": [...]}` as a JSON value.
pub fn polygon_json(poly: &SimplePolygon) -> Value {
    let vs: Vec<(R, R)> = poly.vertices().iter().map(|p| (R(&p.x), R(&p.y))).collect();
    serde_json::json!({ "vertices": vs })
}

fn emit(
    name: Option<&str>,
    poly: &SimplePolygon,
    metadata: Option<&BTreeMap<String, Value>>,
) -> String {
    let mut out = String::from("{\n");
    if let Some(n) = name {
        out += &format!("  \"name\": {},\n", Value::from(n));
    }
    if let Some(m) = metadata {
        out += &format!(
            "  \"metadata\": {},\n",
            serde_json::to_string(m).expect("JSON map")
        );
    }
    out += "  \"vertices\": [\n";
    let n = poly.len();
    for (i, p) in poly.vertices().iter().enumerate() {
        let pair = serde_json::to_string(&P(p)).expect("point serializes");
        out += &format!("    {pair}{}\n", if i + 1 < n { "," } else { "" });
    }
    out += "  ]\n}\n";
    out
}

/// Canonical text form: one vertex per line, coordinates reduced.
pub fn emit_polygon(poly: &SimplePolygon) -> String {
    emit(None, poly, None)
}

pub fn emit_polygon_file(file: &PolygonFile) -> String {
    emit(file.name.as_deref(), &file.polygon, file.metadata.as_ref())
}
