//! Reading inputs: JSON documents, group names and the degree budget.

use std::fs;
use std::io::Read;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use straightlab::ab::FGAbGroup;
use straightlab::sset::{named_set, SetJson, SimplicialSet};

/// Input problems; the process exits with status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<straightlab::Error> for InputError {
    fn from(e: straightlab::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Input<T> = std::result::Result<T, InputError>;

/// Reads `path`, or standard input when `path` is `-` or absent.
pub fn read_text(path: Option<&str>) -> Input<String> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| InputError(format!("reading standard input: {e}")))?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| InputError(format!("reading {p}: {e}"))),
    }
}

pub fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Input<T> {
    serde_json::from_str(text).map_err(|e| InputError(format!("{what}: {e}")))
}

/// Degree budget: the flag, then `STRAIGHTLAB_CUTOFF`, then `fallback`.
pub fn cutoff(flag: Option<usize>, fallback: usize) -> Input<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("STRAIGHTLAB_CUTOFF") {
        Ok(v) => v.trim().parse().map_err(|_| InputError(format!("STRAIGHTLAB_CUTOFF={v:?} is not a degree"))),
        Err(_) => Ok(fallback),
    }
}

/// A set argument: a builder name, a path to a set document, or `-`.
pub fn load_set(arg: &str, cutoff: usize) -> Input<Arc<SimplicialSet>> {
    if arg != "-" && !std::path::Path::new(arg).exists() {
        return Ok(Arc::new(named_set(arg, cutoff)?));
    }
    set_from_text(&read_text(Some(arg))?, cutoff)
}

pub fn set_from_text(text: &str, cutoff: usize) -> Input<Arc<SimplicialSet>> {
    let j: SetJson = parse_json(text, "simplicial set")?;
    Ok(Arc::new(j.to_set(cutoff)?))
}

/// A set given inline in a document: either a builder name or a set object.
pub fn set_from_value(v: &Value, cutoff: usize) -> Input<Arc<SimplicialSet>> {
    match v {
        Value::String(name) => Ok(Arc::new(named_set(name, cutoff)?)),
        other => {
            let j: SetJson = serde_json::from_value(other.clone()).map_err(|e| InputError(format!("simplicial set: {e}")))?;
            Ok(Arc::new(j.to_set(cutoff)?))
        }
    }
}

/// Groups written as `0`, `Z`, `Z^2`, `Z/4`, joined by `+`.
pub fn parse_group(text: &str) -> Input<FGAbGroup> {
    let bad = || InputError(format!("cannot read group {text:?}"));
    let mut orders = Vec::new();
    for part in text.split('+').map(str::trim) {
        if part == "0" {
            continue;
        } else if part == "Z" {
            orders.push(0);
        } else if let Some(r) = part.strip_prefix("Z^") {
            let r: usize = r.parse().map_err(|_| bad())?;
            orders.extend(std::iter::repeat_n(0, r));
        } else if let Some(m) = part.strip_prefix("Z/") {
            let m: u64 = m.parse().map_err(|_| bad())?;
            if m == 0 {
                return Err(bad());
            }
            orders.push(m);
        } else {
            return Err(bad());
        }
    }
    Ok(FGAbGroup::from_orders(&orders))
}

/// Integers in a document, written as JSON numbers or decimal strings.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Number(i64),
    Text(String),
}

impl Int {
    pub fn to_big(&self) -> Input<BigInt> {
        match self {
            Int::Number(n) => Ok(BigInt::from(*n)),
            Int::Text(s) => s.trim().parse().map_err(|_| InputError(format!("{s:?} is not an integer"))),
        }
    }
}

/// A value in `M`: one integer per generator, or a bare integer when `M` has one generator.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Value1 {
    Scalar(Int),
    Vector(Vec<Int>),
}

impl Value1 {
    pub fn to_element(&self, group: &FGAbGroup) -> Input<Vec<BigInt>> {
        let v = match self {
            Value1::Scalar(i) => vec![i.to_big()?],
            Value1::Vector(vs) => vs.iter().map(Int::to_big).collect::<Input<Vec<_>>>()?,
        };
        if v.len() != group.ngens() {
            return Err(InputError(format!("value has {} entries, the group has {} generators", v.len(), group.ngens())));
        }
        Ok(v)
    }
}
