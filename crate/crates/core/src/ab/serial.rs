//! JSON forms with integers written as decimal strings.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::IntMatrix;

fn parse(s: &str) -> std::result::Result<BigInt, String> {
    s.trim().parse::<BigInt>().map_err(|_| format!("not a decimal integer: {s:?}"))
}

/// Accepts a decimal string or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
enum Loose {
    Text(String),
    Number(i64),
}

impl Loose {
    fn value(self) -> std::result::Result<BigInt, String> {
        match self {
            Loose::Text(s) => parse(&s),
            Loose::Number(n) => Ok(BigInt::from(n)),
        }
    }
}

pub mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        Loose::deserialize(d)?.value().map_err(D::Error::custom)
    }
}

pub mod decimal_vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(|v| v.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        Vec::<Loose>::deserialize(d)?.into_iter().map(|l| l.value().map_err(D::Error::custom)).collect()
    }
}

pub mod decimal_vecs {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(|v| v.iter().map(|e| e.to_string()).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<Loose>>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_iter().map(|l| l.value().map_err(D::Error::custom)).collect())
            .collect()
    }
}

pub fn decimal_strings(x: &[BigInt]) -> Vec<String> {
    x.iter().map(|v| v.to_string()).collect()
}

#[derive(Serialize, Deserialize)]
struct MatrixForm {
    rows: usize,
    cols: usize,
    #[serde(with = "decimal_vecs")]
    entries: Vec<Vec<BigInt>>,
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixForm { rows: self.rows(), cols: self.cols(), entries: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = MatrixForm::deserialize(d)?;
        if f.entries.len() != f.rows {
            return Err(D::Error::custom("row count does not match entries"));
        }
        IntMatrix::try_from_big_rows(f.entries, f.cols).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = IntMatrix::from_rows(&[vec![1, -2], vec![123456789012i64, 0]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":2,"cols":2,"entries":[["1","-2"],["123456789012","0"]]}"#);
        assert_eq!(serde_json::from_str::<IntMatrix>(&s).unwrap(), m);
        let e: IntMatrix = serde_json::from_str(r#"{"rows":0,"cols":3,"entries":[]}"#).unwrap();
        assert_eq!(e.cols(), 3);
        assert!(serde_json::from_str::<IntMatrix>(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#).is_err());
    }
}
