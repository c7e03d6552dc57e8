//! Numeric evaluation of truncated series and comparison with closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeffring::{MultiPoly, RatFun};
use crate::error::{Error, Result};
use crate::series::TruncSeries;

use super::checks::sum_until_small;
use super::qpoch::{qpoch_num, PochLen};
use super::value::{BigComplex, BigReal};
use super::{NumericPoint, NumericReport, Status};

fn value_of<'a>(point: &'a NumericPoint, name: &str) -> Result<&'a BigComplex> {
    point
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::Domain(format!("point does not assign `{name}`")))
}

fn bits_of(point: &NumericPoint) -> usize {
    point.iter().map(|(_, v)| v.precision()).max().unwrap_or(super::DEFAULT_PRECISION)
}

fn eval_poly(p: &MultiPoly, vals: &[BigComplex], bits: usize) -> BigComplex {
    let n = vals.len();
    let mut maxe = vec![0usize; n];
    for (m, _) in p.terms() {
        for (i, e) in maxe.iter_mut().enumerate() {
            *e = (*e).max(m.exp(i) as usize);
        }
    }
    let powers: Vec<Vec<BigComplex>> = (0..n)
        .map(|i| {
            let mut v = vec![BigComplex::one(bits)];
            for k in 1..=maxe[i] {
                let next = &v[k - 1] * &vals[i];
                v.push(next);
            }
            v
        })
        .collect();
    let mut acc = BigComplex::zero(bits);
    for (m, c) in p.terms() {
        let mut t = BigComplex::from_rational(&BigRational::from_integer(c.clone()), bits);
        for (i, pw) in powers.iter().enumerate() {
            let e = m.exp(i) as usize;
            if e > 0 {
                t = &t * &pw[e];
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Numeric value of `f` with every symbol of its table taken from `point`.
pub fn eval_ratfun(f: &RatFun, point: &NumericPoint) -> Result<BigComplex> {
    let bits = bits_of(point);
    let vals: Vec<BigComplex> =
        f.table().names().iter().map(|n| value_of(point, n).cloned()).collect::<Result<_>>()?;
    let num = eval_poly(f.numer(), &vals, bits);
    let den = eval_poly(&f.denom(), &vals, bits);
    if den.is_zero() {
        return Err(Error::Pole(format!("denominator of {f} vanishes at the point")));
    }
    num.checked_div(&den)
}

/// Partial sum `sum_n c_n z^n` and a geometric estimate of the omitted tail,
/// taken from the last three nonzero terms. `None` means the terms do not
/// decay.
pub fn eval_series(s: &TruncSeries, point: &NumericPoint) -> Result<(BigComplex, Option<BigReal>)> {
    let bits = bits_of(point);
    let z = value_of(point, "z")?;
    let mut acc = BigComplex::zero(bits);
    let mut zn = BigComplex::one(bits);
    let mut tail_terms: Vec<(usize, BigReal)> = Vec::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let t = &eval_ratfun(c, point)? * &zn;
            let a = t.abs();
            if !a.is_zero() {
                tail_terms.push((n, a));
            }
            acc = &acc + &t;
        }
        zn = &zn * z;
    }
    let last: Vec<&(usize, BigReal)> = tail_terms.iter().rev().take(3).collect();
    if last.len() < 2 {
        return Ok((acc, Some(BigReal::zero(bits))));
    }
    // per-index ratio from consecutive nonzero terms, worst case
    let one = BigReal::one(bits);
    let mut ratio = BigReal::zero(bits);
    for w in last.windows(2) {
        let ((j, aj), (i, ai)) = (w[0], w[1]);
        let r = (aj / ai).ln();
        let r = (&r / &BigReal::from_i64((j - i) as i64, bits)).exp();
        if r > ratio {
            ratio = r;
        }
    }
    if ratio >= one {
        return Ok((acc, None));
    }
    let tail = &(&last[0].1 * &ratio) / &(&one - &ratio);
    Ok((acc, Some(tail)))
}

/// Named closed forms for series in `z`.
#[derive(Clone, Debug)]
pub enum ClosedForm {
    Constant(BigComplex),
    /// `(cz;q)_inf` for the symbol `c` of the point.
    PochInfinite(String),
    /// `1/(cz;q)_inf` for the symbol `c` of the point.
    InvPochInfinite(String),
    /// `sum_n (-1)^n z^{2n} q^{n^2}`.
    Theta,
}

impl ClosedForm {
    pub fn name(&self) -> String {
        match self {
            ClosedForm::Constant(c) => format!("constant {c}"),
            ClosedForm::PochInfinite(c) => format!("({c}z;q)_inf"),
            ClosedForm::InvPochInfinite(c) => format!("1/({c}z;q)_inf"),
            ClosedForm::Theta => "theta".into(),
        }
    }

    pub fn evaluate(&self, point: &NumericPoint, tol: &BigReal) -> Result<BigComplex> {
        let bits = bits_of(point);
        match self {
            ClosedForm::Constant(c) => Ok(c.clone()),
            ClosedForm::PochInfinite(c) | ClosedForm::InvPochInfinite(c) => {
                let cz = value_of(point, c)? * value_of(point, "z")?;
                let p = qpoch_num(&cz, PochLen::Infinite, value_of(point, "q")?)?;
                match self {
                    ClosedForm::PochInfinite(_) => Ok(p),
                    _ => p.inv(),
                }
            }
            ClosedForm::Theta => {
                let (z, q) = (value_of(point, "z")?, value_of(point, "q")?);
                let cutoff = tol / &BigReal::from_i64(100, bits);
                let s = sum_until_small(bits, &cutoff, 0, |n| {
                    let n = n as i64;
                    let sign = BigComplex::from_rational(&BigRational::from_integer(BigInt::from(1 - 2 * (n % 2))), bits);
                    Ok(&(&sign * &z.powi(2 * n)?) * &q.powi(n * n)?)
                })?;
                Ok(s.value)
            }
        }
    }
}

fn spot_report(
    name: String,
    point: &NumericPoint,
    lhs: BigComplex,
    rhs: BigComplex,
    tail: Option<BigReal>,
    tol: &BigReal,
    terms: usize,
) -> NumericReport {
    let shown = point.iter().map(|(n, v)| (n.clone(), v.to_string())).collect();
    let mut r = NumericReport::compare(&name, shown, lhs, rhs, tol.clone(), terms);
    match tail {
        Some(t) if t <= *tol => {}
        _ => {
            r.passed = false;
            r.status = Status::Inconclusive;
        }
    }
    r
}

/// Compares the truncated sum of `s` at `point` with a closed form. A tail
/// estimate above `tol` gives an inconclusive report.
pub fn spot_check_series(
    s: &TruncSeries,
    point: &NumericPoint,
    closed: &ClosedForm,
    tol: &BigReal,
) -> Result<NumericReport> {
    let (sum, tail) = eval_series(s, point)?;
    let exact = closed.evaluate(point, tol)?;
    Ok(spot_report(format!("series vs {}", closed.name()), point, sum, exact, tail, tol, s.order() + 1))
}

/// Compares the truncated sums of two series at `point`.
pub fn spot_check_pair(a: &TruncSeries, b: &TruncSeries, point: &NumericPoint, tol: &BigReal) -> Result<NumericReport> {
    let (sa, ta) = eval_series(a, point)?;
    let (sb, tb) = eval_series(b, point)?;
    let tail = match (ta, tb) {
        (Some(x), Some(y)) => Some(if x > y { x } else { y }),
        _ => None,
    };
    Ok(spot_report("series pair".into(), point, sa, sb, tail, tol, a.order() + b.order() + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{pochhammer_infinite, QCtx};
    use crate::SymbolTable;

    fn pt(entries: &[(&str, &str)]) -> NumericPoint {
        entries.iter().map(|(k, v)| (k.to_string(), BigComplex::real(BigReal::parse(v, 128).unwrap()))).collect()
    }

    #[test]
    fn pochhammer_series_matches_product() {
        let ctx = QCtx::new(&SymbolTable::standard::<&str>(&[]).unwrap()).unwrap();
        let a = ctx.sym("a").unwrap();
        let s = pochhammer_infinite(&ctx, &a, 20);
        let point = pt(&[("a", "0.2"), ("b", "0"), ("q", "0.3"), ("z", "0.1")]);
        let tol = BigReal::parse("1e-20", 128).unwrap();
        let r = spot_check_series(&s, &point, &ClosedForm::PochInfinite("a".into()), &tol).unwrap();
        assert_eq!(r.status, Status::Passed, "{r:?}");
    }

    #[test]
    fn constant_series() {
        let t = SymbolTable::new(&["q"]).unwrap();
        let s = TruncSeries::one(&t, 4);
        let point = pt(&[("q", "0.5"), ("z", "0.3")]);
        let tol = BigReal::parse("1e-25", 128).unwrap();
        let r = spot_check_series(&s, &point, &ClosedForm::Constant(BigComplex::one(128)), &tol).unwrap();
        assert_eq!(r.status, Status::Passed);
    }

    #[test]
    fn near_radius_is_inconclusive() {
        // 1/(z;q)_inf has radius 1
        let ctx = QCtx::new(&SymbolTable::new(&["q", "c"]).unwrap()).unwrap();
        let c = ctx.sym("c").unwrap();
        let s = crate::series::inv_pochhammer_infinite(&ctx, &c, 4);
        let point = pt(&[("c", "1"), ("q", "0.5"), ("z", "0.95")]);
        let tol = BigReal::parse("1e-10", 128).unwrap();
        let r = spot_check_series(&s, &point, &ClosedForm::InvPochInfinite("c".into()), &tol).unwrap();
        assert_eq!(r.status, Status::Inconclusive);
        assert!(!r.passed);
    }

    #[test]
    fn ratfun_evaluation() {
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        let f = crate::coeffring::parse_ratfun("(a - b)/(1 - q)", &t).unwrap();
        let v = eval_ratfun(&f, &pt(&[("a", "1"), ("b", "2"), ("q", "0.5")])).unwrap();
        assert_eq!(v, BigComplex::from_i64(-2, 128));
        assert!(matches!(eval_ratfun(&f, &pt(&[("a", "1"), ("b", "2"), ("q", "1")])), Err(Error::Pole(_))));
    }
}
