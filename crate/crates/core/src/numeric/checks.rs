//! Numeric evaluation of both sides of the analytic identities.

use crate::error::{Error, Result};

use super::qpoch::{qpoch_num, PochLen};
use super::value::{BigComplex, BigReal};
use super::{NumericPoint, NumericReport};

/// Identities with a numeric check, in name order.
pub const NUMERIC_IDENTITIES: &[&str] = &["coogan_ono", "lemma13", "ramanujan_1psi1", "rogers_fine"];

const STABLE_RUN: usize = 5;
const MAX_TERMS: usize = 100_000;

/// Outcome of summing a series term by term.
#[derive(Clone, Debug)]
pub struct Summed {
    pub value: BigComplex,
    pub terms: usize,
}

/// Sums `term(0), term(1), ...` until `STABLE_RUN` consecutive terms fall
/// below `cutoff`, considering stopping only from index `settle` on.
pub fn sum_until_small(
    bits: usize,
    cutoff: &BigReal,
    settle: usize,
    mut term: impl FnMut(usize) -> Result<BigComplex>,
) -> Result<Summed> {
    let mut acc = BigComplex::zero(bits);
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let t = term(k)?;
        if t.abs() < *cutoff {
            small += 1;
        } else {
            small = 0;
        }
        acc = &acc + &t;
        if k >= settle && small >= STABLE_RUN {
            return Ok(Summed { value: acc, terms: k + 1 });
        }
    }
    Err(Error::Domain(format!("series did not settle within {MAX_TERMS} terms")))
}

struct Ctx {
    bits: usize,
    cutoff: BigReal,
}

impl Ctx {
    fn new(bits: usize, tol: &BigReal) -> Self {
        Ctx { bits, cutoff: tol / &BigReal::from_i64(100, bits) }
    }

    fn one(&self) -> BigComplex {
        BigComplex::one(self.bits)
    }

    fn int(&self, i: i64) -> BigComplex {
        BigComplex::from_i64(i, self.bits)
    }

    fn sum(&self, term: impl FnMut(usize) -> Result<BigComplex>) -> Result<Summed> {
        sum_until_small(self.bits, &self.cutoff, 0, term)
    }
}

fn lookup<'a>(point: &'a NumericPoint, name: &str) -> Result<&'a BigComplex> {
    point
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, v)| v)
        .ok_or_else(|| Error::Domain(format!("point does not assign `{name}`")))
}

fn require_only(point: &NumericPoint, names: &[&str]) -> Result<()> {
    for (n, _) in point {
        if !names.contains(&n.as_str()) {
            return Err(Error::Domain(format!("unexpected symbol `{n}`; expected {}", names.join(", "))));
        }
    }
    Ok(())
}

fn inside_unit_disc(name: &str, v: &BigComplex) -> Result<()> {
    if v.abs() < BigReal::one(v.precision()) {
        Ok(())
    } else {
        Err(Error::Domain(format!("convergence needs |{name}| < 1, got |{name}| = {}", v.abs())))
    }
}

fn poch(c: &BigComplex, n: i64, q: &BigComplex) -> Result<BigComplex> {
    qpoch_num(c, PochLen::Finite(n), q)
}

fn poch_inf(c: &BigComplex, q: &BigComplex) -> Result<BigComplex> {
    qpoch_num(c, PochLen::Infinite, q)
}

/// `sum_n (-1)^n x^{2n} q^{n^2}`, starting at `n = start`.
fn theta_tail(cx: &Ctx, x: &BigComplex, q: &BigComplex, start: usize) -> Result<Summed> {
    cx.sum(|k| {
        let n = (k + start) as i64;
        let sign = if n % 2 == 0 { cx.one() } else { cx.int(-1) };
        Ok(&(&sign * &x.powi(2 * n)?) * &q.powi(n * n)?)
    })
}

struct Sides {
    lhs: Summed,
    rhs: Summed,
}

/// `sum_n z^n (z;q)_n/(-z;q)_{n+1} = sum_n (-1)^n z^{2n} q^{n^2}`, `|z| < 1`.
fn coogan_ono(cx: &Ctx, point: &NumericPoint) -> Result<Sides> {
    require_only(point, &["q", "z"])?;
    let (q, z) = (lookup(point, "q")?, lookup(point, "z")?);
    inside_unit_disc("q", q)?;
    inside_unit_disc("z", z)?;
    let negz = -z;
    let lhs = cx.sum(|n| {
        let n = n as i64;
        (&z.powi(n)? * &poch(z, n, q)?).checked_div(&poch(&negz, n + 1, q)?)
    })?;
    let rhs = theta_tail(cx, z, q, 0)?;
    Ok(Sides { lhs, rhs })
}

/// `sum_n z^n (z;q)_{n+1}/(-zq;q)_n = 1 + 2 sum_{n>=1} (-1)^n z^{2n} q^{n^2}`.
fn lemma13(cx: &Ctx, point: &NumericPoint) -> Result<Sides> {
    require_only(point, &["q", "z"])?;
    let (q, z) = (lookup(point, "q")?, lookup(point, "z")?);
    inside_unit_disc("q", q)?;
    inside_unit_disc("z", z)?;
    let negzq = -&(z * q);
    let lhs = cx.sum(|n| {
        let n = n as i64;
        (&z.powi(n)? * &poch(z, n + 1, q)?).checked_div(&poch(&negzq, n, q)?)
    })?;
    let tail = theta_tail(cx, z, q, 1)?;
    let rhs = Summed { value: &cx.one() + &(&cx.int(2) * &tail.value), terms: tail.terms };
    Ok(Sides { lhs, rhs })
}

/// `sum_n (aq;q)_n/(bq;q)_n z^n
///   = sum_n (aq, azq/b;q)_n/(bq;q)_n (bz)^n q^{n^2} (1 - azq^{2n+1}) / (z;q)_{n+1}`.
fn rogers_fine(cx: &Ctx, point: &NumericPoint) -> Result<Sides> {
    require_only(point, &["a", "b", "q", "z"])?;
    let (a, b, q, z) = (lookup(point, "a")?, lookup(point, "b")?, lookup(point, "q")?, lookup(point, "z")?);
    inside_unit_disc("q", q)?;
    inside_unit_disc("z", z)?;
    if b.is_zero() {
        return Err(Error::Domain("rogers_fine needs b != 0".into()));
    }
    let aq = a * q;
    let bq = b * q;
    let lhs = cx.sum(|n| {
        let n = n as i64;
        (&poch(&aq, n, q)? * &z.powi(n)?).checked_div(&poch(&bq, n, q)?)
    })?;
    let azq_b = (&aq * z).checked_div(b)?;
    let az = a * z;
    let bz = b * z;
    let rhs = cx.sum(|n| {
        let n = n as i64;
        let num = &(&poch(&aq, n, q)? * &poch(&azq_b, n, q)?) * &(&bz.powi(n)? * &q.powi(n * n)?);
        let lin = &cx.one() - &(&az * &q.powi(2 * n + 1)?);
        (&num * &lin).checked_div(&(&poch(&bq, n, q)? * &poch(z, n + 1, q)?))
    })?;
    Ok(Sides { lhs, rhs })
}

/// `sum_{k in Z} (a;q)_k/(b;q)_k z^k
///   = (q, b/a, az, q/(az);q)_inf / (b, q/a, z, b/(az);q)_inf`, `|b/a| < |z| < 1`.
fn ramanujan_1psi1(cx: &Ctx, point: &NumericPoint) -> Result<Sides> {
    require_only(point, &["a", "b", "q", "z"])?;
    let (a, b, q, z) = (lookup(point, "a")?, lookup(point, "b")?, lookup(point, "q")?, lookup(point, "z")?);
    inside_unit_disc("q", q)?;
    inside_unit_disc("z", z)?;
    if a.is_zero() || z.is_zero() {
        return Err(Error::Domain("ramanujan_1psi1 needs a != 0 and z != 0".into()));
    }
    let b_over_a = b.checked_div(a)?;
    if b_over_a.abs() >= z.abs() {
        return Err(Error::Domain(format!(
            "convergence needs |b/a| < |z|, got |b/a| = {} and |z| = {}",
            b_over_a.abs(),
            z.abs()
        )));
    }
    let upper = cx.sum(|k| {
        let k = k as i64;
        (&poch(a, k, q)? * &z.powi(k)?).checked_div(&poch(b, k, q)?)
    })?;
    let lower = cx.sum(|k| {
        let k = -(k as i64) - 1;
        (&poch(a, k, q)? * &z.powi(k)?).checked_div(&poch(b, k, q)?)
    })?;
    let lhs = Summed { value: &upper.value + &lower.value, terms: upper.terms + lower.terms };
    let az = a * z;
    let num = [q.clone(), b_over_a.clone(), az.clone(), q.checked_div(&az)?];
    let den = [b.clone(), q.checked_div(a)?, z.clone(), b.checked_div(&az)?];
    let mut value = cx.one();
    for c in &num {
        value = &value * &poch_inf(c, q)?;
    }
    for c in &den {
        value = value.checked_div(&poch_inf(c, q)?)?;
    }
    Ok(Sides { lhs, rhs: Summed { value, terms: 0 } })
}

fn report(name: &str, point: &NumericPoint, sides: Sides, tol: &BigReal) -> NumericReport {
    NumericReport::compare(
        name,
        point.iter().map(|(n, v)| (n.clone(), v.to_string())).collect(),
        sides.lhs.value,
        sides.rhs.value,
        tol.clone(),
        sides.lhs.terms + sides.rhs.terms,
    )
}

/// Evaluates both sides of `name` at `point` and compares within `tol`.
pub fn check_identity_numeric(name: &str, point: &NumericPoint, tol: &BigReal) -> Result<NumericReport> {
    let bits = point.iter().map(|(_, v)| v.precision()).max().unwrap_or(tol.precision());
    let cx = Ctx::new(bits, tol);
    let sides = match name {
        "coogan_ono" => coogan_ono(&cx, point)?,
        "lemma13" => lemma13(&cx, point)?,
        "rogers_fine" => rogers_fine(&cx, point)?,
        "ramanujan_1psi1" => ramanujan_1psi1(&cx, point)?,
        _ => {
            return Err(Error::Domain(format!(
                "unknown numeric identity `{name}`; known: {}",
                NUMERIC_IDENTITIES.join(", ")
            )))
        }
    };
    Ok(report(name, point, sides, tol))
}

fn q_binomial(m: i64, n: i64, q: &BigComplex) -> Result<BigComplex> {
    poch(q, m, q)?.checked_div(&(&poch(q, n, q)? * &poch(q, m - n, q)?))
}

/// Finite theta sum at `z = q^-m`:
/// `sum_{n=0}^m (-1;q)_n/(-q^{1-m};q)_n [m,n]_q q^{(3n^2+n)/2-2nm}
///   = sum_{n=0}^m (-1;q)_n/(-q^{1-m};q)_n [m,n]_q q^{(3n^2-n)/2-2nm}
///     (1+q^n+q^{n-m}-q^{2n-m}) theta(q^{2n-2m+1}; q^2)`,
/// with `theta(x; p) = sum_k (-1)^k p^{k(k-1)/2} x^k`.
pub fn check_qqq(m: u32, q: &BigReal, tol: &BigReal) -> Result<NumericReport> {
    if m == 0 {
        return Err(Error::Domain("check_qqq needs m >= 1".into()));
    }
    let bits = q.precision();
    if !(BigReal::zero(bits) < *q && *q < BigReal::one(bits)) {
        return Err(Error::Domain(format!("check_qqq needs 0 < q < 1, got {q}")));
    }
    let cx = Ctx::new(bits, tol);
    let qc = BigComplex::real(q.clone());
    let m = m as i64;
    let neg_one = cx.int(-1);
    let low = -&qc.powi(1 - m)?;
    let pref = |n: i64| -> Result<BigComplex> {
        (&poch(&neg_one, n, &qc)? * &q_binomial(m, n, &qc)?).checked_div(&poch(&low, n, &qc)?)
    };
    let mut lhs = cx.int(0);
    let mut rhs = cx.int(0);
    let mut terms = 0;
    for n in 0..=m {
        let p = pref(n)?;
        // 3n^2 +- n is always even
        lhs = &lhs + &(&p * &qc.powi((3 * n * n + n) / 2 - 2 * n * m)?);
        let lin = &(&(&cx.one() + &qc.powi(n)?) + &qc.powi(n - m)?) - &qc.powi(2 * n - m)?;
        // theta(q^{2n-2m+1}; q^2) = sum_k (-1)^k q^{k(k+2n-2m)}; the exponent
        // increases from k = 2(m-n) on
        let settle = (2 * (m - n)).max(0) as usize;
        let theta = sum_until_small(bits, &cx.cutoff, settle, |k| {
            let k = k as i64;
            let sign = if k % 2 == 0 { cx.one() } else { cx.int(-1) };
            Ok(&sign * &qc.powi(k * (k + 2 * n - 2 * m))?)
        })?;
        terms += theta.terms;
        rhs = &rhs + &(&(&p * &qc.powi((3 * n * n - n) / 2 - 2 * n * m)?) * &(&lin * &theta.value));
    }
    let point = vec![("m".to_string(), m.to_string()), ("q".to_string(), q.to_string())];
    Ok(NumericReport::compare("qqq", point, lhs, rhs, tol.clone(), terms))
}
