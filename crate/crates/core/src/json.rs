use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Number, Value};

use crate::intlin::IntMatrix;

pub(crate) fn big_to_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

/// Integer value of a JSON number; `None` for fractions and exponent forms.
pub(crate) fn number_to_big(n: &Number) -> Option<BigInt> {
    let s = n.to_string();
    if s.contains(['.', 'e', 'E']) {
        return None;
    }
    BigInt::from_str(&s).ok()
}

pub(crate) fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::Number(big_to_number(x))).collect())
}

/// Row-major nested arrays.
pub(crate) fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r)).collect())
}
