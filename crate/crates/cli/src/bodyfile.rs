//! JSON body files: `{"dim": n, "vertices": [["p/q", ...], ...]}`.
//!
//! The canonical form lists the hull vertices sorted lexicographically by
//! their `(numerator, denominator)` coordinate tuples, with reduced fractions.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use polymix::arith::{parse_rat, rat_string};
use polymix::{Polytope, Vector};

use crate::error::CliError;

/// How a body file is turned into a polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Load {
    /// Full-dimensional hulls only; anything flatter is a `DimensionError`.
    Strict,
    /// Any affine dimension (segments, polygons in space, points).
    Permissive,
}

pub struct LoadedBody {
    pub body: Polytope,
    pub sha256: String,
}

fn canonical_key(v: &Vector) -> Vec<(BigInt, BigInt)> {
    v.coords().iter().map(|c| (c.numer().clone(), c.denom().clone())).collect()
}

pub fn body_to_json(p: &Polytope) -> Value {
    let mut verts: Vec<&Vector> = p.vertices().iter().collect();
    verts.sort_by_key(|v| canonical_key(v));
    let rows: Vec<Value> = verts
        .iter()
        .map(|v| Value::Array(v.coords().iter().map(|c| Value::String(rat_string(c))).collect()))
        .collect();
    json!({ "dim": p.dim(), "vertices": rows })
}

pub fn serialize_body(p: &Polytope) -> String {
    let mut s = serde_json::to_string_pretty(&body_to_json(p)).expect("serializable");
    s.push('\n');
    s
}

fn coordinate(v: &Value) -> Result<polymix::Rat, CliError> {
    match v {
        Value::String(s) => parse_rat(s).ok_or_else(|| CliError::Parse(format!("bad rational {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(polymix::arith::int(n.as_i64().unwrap_or_default())),
        other => Err(CliError::Parse(format!("coordinate must be a \"p/q\" string, got {other}"))),
    }
}

/// The point list of a body file.
pub fn parse_points(text: &str) -> Result<Vec<Vector>, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let dim = doc
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Parse("missing integer \"dim\"".into()))? as usize;
    let rows = doc
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("missing array \"vertices\"".into()))?;
    rows.iter()
        .map(|row| {
            let coords = row
                .as_array()
                .ok_or_else(|| CliError::Parse("vertex must be an array".into()))?;
            if coords.len() != dim {
                return Err(CliError::Parse(format!(
                    "vertex has {} coordinates, expected {dim}",
                    coords.len()
                )));
            }
            Ok(Vector::new(coords.iter().map(coordinate).collect::<Result<_, _>>()?))
        })
        .collect()
}

pub fn parse_body(text: &str, mode: Load) -> Result<Polytope, CliError> {
    let pts = parse_points(text)?;
    let body = match mode {
        Load::Strict => Polytope::convex_hull(&pts)?,
        Load::Permissive => Polytope::from_points(&pts)?,
    };
    Ok(body)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load(path: &Path, mode: Load) -> Result<LoadedBody, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(LoadedBody {
        body: parse_body(text, mode)?,
        sha256: sha256_hex(&bytes),
    })
}
