//! Canonical text form and JSON form of [`LaurentPoly`].
//!
//! Text: terms in lexicographic exponent order, joined by ` + ` / ` - `,
//! e.g. `-2*t1^-2*t2 + 3 + t1`. The zero polynomial prints as `0`.
//!
//! JSON: `{"vars": n, "terms": [[e_1, ..., e_n, coeff], ...]}` with terms in the
//! same order. Coefficients that do not fit an `i64` are written as strings.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::LaurentPoly;
use crate::error::{Error, Result};

pub(super) fn to_text(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        for (i, &x) in e.iter().enumerate() {
            match x {
                0 => {}
                1 => factors.push(format!("t{}", i + 1)),
                _ => factors.push(format!("t{}^{}", i + 1, x)),
            }
        }
        if factors.is_empty() {
            write!(out, "{abs}").unwrap();
        } else if abs.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            write!(out, "{abs}*{}", factors.join("*")).unwrap();
        }
    }
    out
}

impl LaurentPoly {
    /// Parses the canonical text form (any term order, `t` accepted for `t1`).
    pub fn parse(text: &str, num_vars: usize) -> Result<LaurentPoly> {
        let terms = parse_terms(text)?;
        let mut p = LaurentPoly::zero(num_vars);
        for (factors, c) in terms {
            let mut e = vec![0i64; num_vars];
            for (var, x) in factors {
                if var >= num_vars {
                    return Err(Error::Parse(format!(
                        "variable t{} exceeds {num_vars} variables",
                        var + 1
                    )));
                }
                e[var] += x;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Parses text, taking the variable count from the highest index used.
    pub fn parse_infer(text: &str) -> Result<LaurentPoly> {
        let terms = parse_terms(text)?;
        let n = terms
            .iter()
            .flat_map(|(f, _)| f.iter().map(|(v, _)| v + 1))
            .max()
            .unwrap_or(1);
        LaurentPoly::parse(text, n)
    }

    pub fn to_json_value(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(e, c)| {
                let mut row: Vec<Value> = e.iter().map(|&x| Value::from(x)).collect();
                row.push(coeff_to_json(c));
                Value::Array(row)
            })
            .collect();
        serde_json::json!({ "vars": self.num_vars(), "terms": terms })
    }

    pub fn from_json_value(v: &Value) -> Result<LaurentPoly> {
        let bad = |m: &str| Error::Parse(format!("polynomial JSON: {m}"));
        let n = v
            .get("vars")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing `vars`"))? as usize;
        let rows = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms`"))?;
        let mut p = LaurentPoly::zero(n);
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("term is not an array"))?;
            if row.len() != n + 1 {
                return Err(bad("term length must be vars + 1"));
            }
            let e = row[..n]
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("exponent is not an integer")))
                .collect::<Result<Vec<_>>>()?;
            let c = coeff_from_json(&row[n]).ok_or_else(|| bad("bad coefficient"))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn coeff_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(c.to_string()),
    }
}

fn coeff_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        LaurentPoly::from_json_value(&v).map_err(D::Error::custom)
    }
}

type ParsedTerm = (Vec<(usize, i64)>, BigInt);

fn parse_terms(text: &str) -> Result<Vec<ParsedTerm>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut first = true;
    while pos < chars.len() {
        let mut sign = BigInt::one();
        match chars[pos] {
            '+' => pos += 1,
            '-' => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            c => return Err(Error::Parse(format!("expected + or -, found `{c}`"))),
        }
        first = false;
        let (factors, coeff) = parse_term(&chars, &mut pos)?;
        terms.push((factors, coeff * sign));
    }
    Ok(terms)
}

fn parse_term(chars: &[char], pos: &mut usize) -> Result<ParsedTerm> {
    let mut coeff = BigInt::one();
    let mut factors = Vec::new();
    loop {
        match chars.get(*pos) {
            Some(c) if c.is_ascii_digit() => {
                let n = read_digits(chars, pos);
                coeff *= n.parse::<BigInt>().expect("digits");
            }
            Some('t') => {
                *pos += 1;
                let var = if chars.get(*pos).is_some_and(char::is_ascii_digit) {
                    let idx: usize = read_digits(chars, pos)
                        .parse()
                        .map_err(|_| Error::Parse("variable index too large".into()))?;
                    if idx == 0 {
                        return Err(Error::Parse("variables are numbered from t1".into()));
                    }
                    idx - 1
                } else {
                    0
                };
                let mut x = 1i64;
                if chars.get(*pos) == Some(&'^') {
                    *pos += 1;
                    let neg = match chars.get(*pos) {
                        Some('-') => {
                            *pos += 1;
                            true
                        }
                        Some('+') => {
                            *pos += 1;
                            false
                        }
                        _ => false,
                    };
                    let d = read_digits(chars, pos);
                    if d.is_empty() {
                        return Err(Error::Parse("missing exponent after ^".into()));
                    }
                    x = d
                        .parse()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    if neg {
                        x = -x;
                    }
                }
                factors.push((var, x));
            }
            Some(c) => return Err(Error::Parse(format!("unexpected `{c}`"))),
            None => return Err(Error::Parse("dangling sign".into())),
        }
        match chars.get(*pos) {
            Some('*') => *pos += 1,
            Some('+') | Some('-') | None => break,
            Some(c) => return Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
    if coeff.is_zero() {
        factors.clear();
    }
    Ok((factors, coeff))
}

fn read_digits(chars: &[char], pos: &mut usize) -> String {
    let start = *pos;
    while chars.get(*pos).is_some_and(char::is_ascii_digit) {
        *pos += 1;
    }
    chars[start..*pos].iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_text() {
        assert_eq!(
            LaurentPoly::univariate(0, &[1, -1, 1]).to_string(),
            "1 - t1 + t1^2"
        );
        assert_eq!(
            LaurentPoly::univariate(-1, &[1, -1, 1]).to_string(),
            "t1^-1 - 1 + t1"
        );
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        let p =
            LaurentPoly::from_terms(2, vec![(vec![-2, 1], -2), (vec![0, 0], 3), (vec![1, 0], 1)])
                .unwrap();
        assert_eq!(p.to_string(), "-2*t1^-2*t2 + 3 + t1");
    }

    #[test]
    fn parse_accepts_loose_forms() {
        let p = LaurentPoly::parse("t^2 - t + 1", 1).unwrap();
        assert_eq!(p, LaurentPoly::univariate(0, &[1, -1, 1]));
        let q = LaurentPoly::parse("t1*t2 + t2*t1 - 3", 2).unwrap();
        assert_eq!(q.to_string(), "-3 + 2*t1*t2");
        assert!(LaurentPoly::parse("t3", 2).is_err());
        assert!(LaurentPoly::parse("t^", 1).is_err());
        assert!(LaurentPoly::parse("", 1).is_err());
        assert_eq!(LaurentPoly::parse_infer("t2^-1").unwrap().num_vars(), 2);
    }

    #[test]
    fn json_shape() {
        let p = LaurentPoly::univariate(-1, &[1, -1, 1]);
        let v = serde_json::to_string(&p).unwrap();
        assert_eq!(v, r#"{"terms":[[-1,1],[0,-1],[1,1]],"vars":1}"#);
        let big = LaurentPoly::constant(
            1,
            "123456789012345678901234567890".parse::<BigInt>().unwrap(),
        );
        let back: LaurentPoly =
            serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (1usize..4).prop_flat_map(|n| {
            prop::collection::vec((prop::collection::vec(-4i64..5, n), -20i64..21), 0..6)
                .prop_map(move |ts| LaurentPoly::from_terms(n, ts).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(p in arb_poly()) {
            prop_assert_eq!(LaurentPoly::parse(&p.to_string(), p.num_vars()).unwrap(), p.clone());
            let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
