//! JSON wire formats.
//!
//! | value          | form                                                      |
//! |----------------|-----------------------------------------------------------|
//! | cone           | `{"r1":[x,y],"r2":[x,y],"winding":w}`                     |
//! | angle          | `{"dir":[x,y],"winding":w}`                               |
//! | plumbing       | `{"chain":[s1,…,sn]}`                                     |
//! | classification | `{"lens":{"k":…,"l":…},"contact":"tight","h1":[…]}`       |
//! | rational       | `{"num":n,"den":d}`                                       |
//! | invariants     | `{"chi":…,"sigma":…,"c1_sq":{…},"theta":{…}}`             |
//!
//! Integers are written exactly, with no size limit; there are no floats on
//! the wire. Rays must be primitive: `[2,4]` is rejected, not reduced.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::classify::ClassificationResult;
use crate::cone::MomentCone;
use crate::error::Error;
use crate::exact_angle::{Direction, ExactAngle};
use crate::fourmanifold::{InvariantsReport, Rational};
use crate::plumbing::Plumbing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WireError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Schema(String),
    #[error("malformed chain: {0}")]
    Chain(String),
    #[error(transparent)]
    Domain(#[from] Error),
}

impl WireError {
    pub fn code(&self) -> &'static str {
        match self {
            WireError::Json(_) => "invalid_json",
            WireError::Schema(_) => "invalid_schema",
            WireError::Chain(_) => "invalid_chain",
            WireError::Domain(e) => e.code(),
        }
    }
}

type Result<T> = std::result::Result<T, WireError>;

pub fn int_to_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer is a JSON number"))
}

fn int_from_json(v: &Value, what: &str) -> Result<BigInt> {
    let schema = || WireError::Schema(format!("{what} must be an integer"));
    let Value::Number(n) = v else { return Err(schema()) };
    BigInt::from_str(&n.to_string()).map_err(|_| schema())
}

fn direction_to_json(d: &Direction) -> Value {
    json!([int_to_json(d.x()), int_to_json(d.y())])
}

fn direction_from_json(v: &Value, what: &str) -> Result<Direction> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => {
            let (x, y) = (int_from_json(x, what)?, int_from_json(y, what)?);
            let d = Direction::new(x.clone(), y.clone())?;
            // The library reduces; the wire format insists on primitive rays.
            if (d.x(), d.y()) != (&x, &y) {
                return Err(Error::NotCoprime(format!("{what} = ({x},{y}) is not primitive")).into());
            }
            Ok(d)
        }
        _ => Err(WireError::Schema(format!("{what} must be a two-element integer array"))),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| WireError::Schema(format!("missing field \"{key}\"")))
}

fn winding_from_json(v: &Value) -> Result<u64> {
    v.as_u64().ok_or_else(|| WireError::Schema("winding must be a non-negative integer".into()))
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| WireError::Json(e.to_string()))
}

pub fn cone_to_json(c: &MomentCone) -> Value {
    json!({
        "r1": direction_to_json(c.r1()),
        "r2": direction_to_json(c.r2()),
        "winding": c.winding(),
    })
}

pub fn cone_from_json(v: &Value) -> Result<MomentCone> {
    let obj = v.as_object().ok_or_else(|| WireError::Schema("cone must be a JSON object".into()))?;
    let r1 = direction_from_json(field(obj, "r1")?, "r1")?;
    let r2 = direction_from_json(field(obj, "r2")?, "r2")?;
    let winding = winding_from_json(field(obj, "winding")?)?;
    Ok(MomentCone::new(r1, r2, winding)?)
}

pub fn parse_cone(text: &str) -> Result<MomentCone> {
    cone_from_json(&parse_json(text)?)
}

pub fn angle_to_json(a: &ExactAngle) -> Value {
    json!({ "dir": direction_to_json(&a.dir), "winding": a.winding })
}

pub fn angle_from_json(v: &Value) -> Result<ExactAngle> {
    let obj = v.as_object().ok_or_else(|| WireError::Schema("angle must be a JSON object".into()))?;
    let dir = direction_from_json(field(obj, "dir")?, "dir")?;
    Ok(ExactAngle::new(dir, winding_from_json(field(obj, "winding")?)?))
}

pub fn plumbing_to_json(p: &Plumbing) -> Value {
    json!({ "chain": p.chain().iter().map(int_to_json).collect::<Vec<_>>() })
}

pub fn plumbing_from_json(v: &Value) -> Result<Plumbing> {
    let chain = v
        .get("chain")
        .and_then(Value::as_array)
        .ok_or_else(|| WireError::Schema("plumbing must be {\"chain\":[…]}".into()))?;
    let chain = chain.iter().map(|s| int_from_json(s, "chain entry")).collect::<Result<Vec<_>>>()?;
    Ok(Plumbing::validate(chain)?)
}

/// Comma-separated integers, e.g. `0,0,-2`. Whitespace around entries is
/// ignored.
pub fn parse_chain(text: &str) -> Result<Plumbing> {
    let chain = text
        .split(',')
        .map(|s| {
            BigInt::from_str(s.trim())
                .map_err(|_| WireError::Chain(format!("\"{}\" is not an integer", s.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Plumbing::validate(chain)?)
}

pub fn classification_to_json(r: &ClassificationResult) -> Value {
    json!({
        "lens": { "k": int_to_json(r.lens.k()), "l": int_to_json(r.lens.l()) },
        "contact": r.contact.as_str(),
        "h1": r.h1.iter().map(int_to_json).collect::<Vec<_>>(),
    })
}

pub fn rational_to_json(q: &Rational) -> Value {
    json!({ "num": int_to_json(q.numer()), "den": int_to_json(q.denom()) })
}

pub fn invariants_to_json(r: &InvariantsReport) -> Value {
    json!({
        "chi": r.chi,
        "sigma": r.sigma,
        "c1_sq": rational_to_json(&r.c1_sq),
        "theta": rational_to_json(&r.theta),
    })
}
