//! Structured verdicts for identity and theorem checkers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Hypotheses hold and the claimed relation was confirmed.
    Holds,
    /// Hypotheses hold and the relation failed by more than the guard band.
    Violated,
    /// Hypotheses unmet, or the claimed lower bound is nonpositive.
    Vacuous,
    /// The comparison fell inside the floating-point guard band.
    Borderline,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Vacuous => "vacuous",
            Verdict::Borderline => "borderline",
        };
        f.write_str(s)
    }
}

/// Verdict of a single verification together with the compared quantities
/// and enough context to reproduce the comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub hypotheses_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            hypotheses_met: false,
            lhs: None,
            rhs: None,
            witness: None,
            verdict: Verdict::Vacuous,
            details: BTreeMap::new(),
        }
    }

    pub fn detail<T: fmt::Display>(&mut self, key: &str, value: T) -> &mut Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    /// Process exit code contract: 0 for holds/vacuous/borderline, 2 for a
    /// violation.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Violated => 2,
            _ => 0,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "check {}: {} (hypotheses {})\n",
            self.name,
            self.verdict,
            if self.hypotheses_met { "met" } else { "not met" }
        );
        if let Some(l) = &self.lhs {
            out.push_str(&format!("  lhs = {l}\n"));
        }
        if let Some(r) = &self.rhs {
            out.push_str(&format!("  rhs = {r}\n"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("  witness = {w}\n"));
        }
        for (k, v) in &self.details {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        out
    }
}

/// Relative guard band for comparisons whose right-hand side involves
/// transcendental factors evaluated in floating point. A comparison landing
/// inside the band is reported borderline, never violated.
pub const GUARD_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuardedCmp {
    Above,
    Below,
    Within,
}

/// Compare `lhs` with `rhs` up to the guard band scaled by magnitude.
pub fn guarded_compare(lhs: f64, rhs: f64) -> GuardedCmp {
    let band = GUARD_BAND * lhs.abs().max(rhs.abs()).max(1.0);
    if lhs > rhs + band {
        GuardedCmp::Above
    } else if lhs < rhs - band {
        GuardedCmp::Below
    } else {
        GuardedCmp::Within
    }
}

/// Verdict for a claimed strict/weak lower bound `lhs > rhs` (or `>=`):
/// both collapse to the same three-way outcome under the guard band.
pub fn verdict_lower_bound(lhs: f64, rhs: f64) -> Verdict {
    match guarded_compare(lhs, rhs) {
        GuardedCmp::Above => Verdict::Holds,
        GuardedCmp::Below => Verdict::Violated,
        GuardedCmp::Within => Verdict::Borderline,
    }
}

/// Lossy but monotone float view of an exact rational.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `p/q` display, collapsing to the integer when `q = 1`.
pub fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `p/q`, or a plain decimal such as `0.25` into an exact
/// rational.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q == BigInt::from(0) {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        let int: BigInt = if int.is_empty() { BigInt::from(0) } else { int.parse().ok()? };
        let frac_val: BigInt = if frac.is_empty() { BigInt::from(0) } else { frac.parse().ok()? };
        let den = BigInt::from(10u32).pow(digits);
        let neg = s.trim_start().starts_with('-');
        let num = int * &den + if neg { -frac_val } else { frac_val };
        return Some(BigRational::new(num, den));
    }
    let p: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_band_semantics() {
        assert_eq!(verdict_lower_bound(10.0, 5.0), Verdict::Holds);
        assert_eq!(verdict_lower_bound(5.0, 10.0), Verdict::Violated);
        assert_eq!(verdict_lower_bound(5.0, 5.0 + 1e-12), Verdict::Borderline);
        assert_eq!(verdict_lower_bound(1e12, 1e12 * (1.0 - 1e-12)), Verdict::Borderline);
    }

    #[test]
    fn rational_parsing() {
        let r = parse_rat("3/10").unwrap();
        assert_eq!(fmt_rat(&r), "3/10");
        let r = parse_rat("0.25").unwrap();
        assert_eq!(fmt_rat(&r), "1/4");
        let r = parse_rat("-0.5").unwrap();
        assert_eq!(fmt_rat(&r), "-1/2");
        let r = parse_rat("7").unwrap();
        assert_eq!(fmt_rat(&r), "7");
        assert!(parse_rat("1/0").is_none());
    }
}
