use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::Array(vec![
        Value::String(r.numer().to_string()),
        Value::String(r.denom().to_string()),
    ])
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse(format!("expected [num, den], got {v}")))?;
    let parse = |x: &Value| -> Result<BigInt> {
        let s = x
            .as_str()
            .ok_or_else(|| Error::Parse(format!("expected decimal string, got {x}")))?;
        s.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    };
    let (n, d) = (parse(&pair[0])?, parse(&pair[1])?);
    if d == BigInt::from(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}
