//! Arbitrary-precision numeric corroboration of the analytic identities.
//!
//! Both sides of an identity are summed independently at sample points
//! inside its convergence region and compared within an explicit
//! tolerance. Series are summed until five consecutive terms fall below
//! `tol/100`.

mod checks;
mod qpoch;
mod spot;
mod value;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;

pub use checks::{check_identity_numeric, check_qqq, sum_until_small, Summed, NUMERIC_IDENTITIES};
pub use qpoch::{qpoch_infinite, qpoch_num, InfiniteProduct, PochLen};
pub use spot::{eval_ratfun, eval_series, spot_check_pair, spot_check_series, ClosedForm};
pub use value::{parse_rational, BigComplex, BigReal, DEFAULT_PRECISION};

/// Assignment of symbol names to values, in a fixed order.
pub type NumericPoint = Vec<(String, BigComplex)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericReport {
    pub name: String,
    pub point: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub abs_diff: String,
    pub tolerance: String,
    pub passed: bool,
    pub status: Status,
    /// Terms summed across both sides.
    pub terms: usize,
    #[serde(skip)]
    pub abs_diff_value: BigReal,
}

impl NumericReport {
    pub(crate) fn compare(
        name: &str,
        point: Vec<(String, String)>,
        lhs: BigComplex,
        rhs: BigComplex,
        tolerance: BigReal,
        terms: usize,
    ) -> Self {
        let diff = (&lhs - &rhs).abs();
        let passed = diff <= tolerance;
        NumericReport {
            name: name.to_string(),
            point,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            abs_diff: diff.to_decimal_string(6),
            tolerance: tolerance.to_decimal_string(6),
            passed,
            status: if passed { Status::Passed } else { Status::Failed },
            terms,
            abs_diff_value: diff,
        }
    }
}

/// Parses a value: a real literal such as `"0.3"`, `"1/3"` or `"-2e-1"`, a
/// JSON number, or a `[re, im]` pair of either.
pub fn parse_value(v: &serde_json::Value, bits: usize) -> Result<BigComplex> {
    let real = |v: &serde_json::Value| -> Result<BigReal> {
        match v {
            serde_json::Value::String(s) => BigReal::parse(s, bits),
            serde_json::Value::Number(n) => BigReal::parse(&n.to_string(), bits),
            other => Err(Error::Parse { pos: 0, msg: format!("expected a number, got {other}") }),
        }
    };
    match v {
        serde_json::Value::Array(parts) if parts.len() == 2 => {
            Ok(BigComplex::new(real(&parts[0])?, real(&parts[1])?))
        }
        other => Ok(BigComplex::real(real(other)?)),
    }
}

/// Parses a points file: a JSON array of objects mapping symbol names to
/// values, e.g. `[{"q": "0.1", "a": "0.3", "b": "0.5", "z": "0.2"}]`.
pub fn parse_points(json: &str, bits: usize) -> Result<Vec<NumericPoint>> {
    let v: serde_json::Value = serde_json::from_str(json)
        .map_err(|e| Error::Parse { pos: e.column(), msg: format!("points file: {e}") })?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse { pos: 0, msg: "points file must hold a JSON array".into() })?;
    arr.iter()
        .map(|p| {
            let obj = p
                .as_object()
                .ok_or_else(|| Error::Parse { pos: 0, msg: "each point must be a JSON object".into() })?;
            let mut point: NumericPoint =
                obj.iter().map(|(k, v)| Ok((k.clone(), parse_value(v, bits)?))).collect::<Result<_>>()?;
            point.sort_by(|x, y| x.0.cmp(&y.0));
            Ok(point)
        })
        .collect()
}

fn grid_point(entries: &[(&str, &str)], bits: usize) -> NumericPoint {
    let mut point: NumericPoint = entries
        .iter()
        .map(|(k, v)| {
            let value = match v.split_once(',') {
                Some((re, im)) => BigComplex::new(
                    BigReal::parse(re, bits).expect("grid literal"),
                    BigReal::parse(im, bits).expect("grid literal"),
                ),
                None => BigComplex::real(BigReal::parse(v, bits).expect("grid literal")),
            };
            (k.to_string(), value)
        })
        .collect();
    point.sort_by(|x, y| x.0.cmp(&y.0));
    point
}

/// Default in-region sample points for `name`; `re,im` marks a complex value.
pub fn default_points(name: &str, bits: usize) -> Vec<NumericPoint> {
    let raw: &[&[(&str, &str)]] = match name {
        "rogers_fine" => &[
            &[("q", "0.1"), ("a", "0.3"), ("b", "0.5"), ("z", "0.2")],
            &[("q", "0.5"), ("a", "-0.7"), ("b", "0.25"), ("z", "0.6")],
            &[("q", "0.4"), ("a", "0.3,0.2"), ("b", "-0.6"), ("z", "0.1,-0.5")],
        ],
        "coogan_ono" => &[
            &[("q", "0.3"), ("z", "0.4")],
            &[("q", "0.6"), ("z", "-0.8")],
            &[("q", "0.5"), ("z", "0.2,0.3")],
        ],
        "lemma13" => &[
            &[("q", "0.2"), ("z", "0.7")],
            &[("q", "0.55"), ("z", "-0.5")],
            &[("q", "0.35"), ("z", "0.1,0.6")],
        ],
        "ramanujan_1psi1" => &[
            &[("q", "0.2"), ("a", "2.0"), ("b", "0.1"), ("z", "0.5")],
            &[("q", "0.5"), ("a", "-1.5"), ("b", "0.3"), ("z", "0.7")],
            &[("q", "0.3"), ("a", "1,1"), ("b", "0.2"), ("z", "0.6,0.2")],
        ],
        _ => &[],
    };
    raw.iter().map(|p| grid_point(p, bits)).collect()
}

/// `(m, q)` pairs checked for the finite theta sum.
pub const QQQ_GRID: &[(u32, &str)] = &[(1, "1/2"), (1, "1/3"), (2, "1/2"), (2, "1/3"), (3, "1/2"), (3, "1/3")];

enum GridJob {
    Identity(&'static str, NumericPoint),
    Qqq(u32, BigReal),
}

/// Every default numeric check at the given precision and tolerance, in a
/// fixed order.
pub fn run_grid(bits: usize, tol: &str, mode: Exec) -> Result<Vec<NumericReport>> {
    let tol = BigReal::parse(tol, bits)?;
    let mut jobs = Vec::new();
    for name in NUMERIC_IDENTITIES {
        jobs.extend(default_points(name, bits).into_iter().map(|p| GridJob::Identity(name, p)));
    }
    for (m, q) in QQQ_GRID {
        jobs.push(GridJob::Qqq(*m, BigReal::parse(q, bits)?));
    }
    mode.map(jobs, |job| match job {
        GridJob::Identity(name, point) => check_identity_numeric(name, &point, &tol),
        GridJob::Qqq(m, q) => check_qqq(m, &q, &tol),
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_file_round_trip() {
        let pts = parse_points(r#"[{"q": "0.1", "z": ["0.2", "-0.1"]}, {"z": 0.5, "q": "1/3"}]"#, 128).unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0][0].0, "q");
        assert!(!pts[0][1].1.im.is_zero());
        assert_eq!(pts[1][0].0, "q");
        assert!(parse_points("{}", 128).is_err());
        assert!(parse_points(r#"[{"q": true}]"#, 128).is_err());
    }

    #[test]
    fn grid_points_are_in_region() {
        for name in NUMERIC_IDENTITIES {
            let pts = default_points(name, 128);
            assert!(pts.len() >= 3, "{name}");
        }
    }
}
