use std::path::Path;

use kuramoto_core::{fixtures, ModelInput};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use crate::failure::{Failure, Outcome};

#[derive(Deserialize)]
#[serde(untagged)]
enum Instance {
    Model {
        omega: Vec<f64>,
        k: Vec<f64>,
    },
    PowerFlow {
        #[serde(rename = "P")]
        p: Vec<f64>,
        #[serde(rename = "V")]
        v: Vec<f64>,
    },
}

/// Parses `{"omega", "k"}` or the power-flow form `{"P", "V"}` with `ω = P`
/// and `k = 2|V|`.
pub fn parse_instance(text: &str) -> Outcome<ModelInput> {
    let inst: Instance = serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))?;
    let (omega, k) = match inst {
        Instance::Model { omega, k } => (omega, k),
        Instance::PowerFlow { p, v } => (p, v.iter().map(|x| 2.0 * x.abs()).collect()),
    };
    ModelInput::new(omega, k).map_err(|e| Failure::Invalid(e.to_string()))
}

pub fn read_instance(path: &Path) -> Outcome<ModelInput> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    parse_instance(&text)
}

pub fn fixture(name: &str) -> Outcome<fixtures::Fixture> {
    fixtures::by_name(name)
        .ok_or_else(|| Failure::Parse(format!("unknown fixture {name:?}; known: {}", fixtures::names().join(", "))))
}

/// Exact rational from `a/b`, an integer, or a decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Outcome<BigRational> {
    let bad = || Failure::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    Ok(BigRational::new(numer, BigInt::from(10).pow(frac.len() as u32)))
}
