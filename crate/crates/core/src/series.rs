//! Truncated formal power series in `z` over [`RatFun`], with the
//! q-Pochhammer, basic hypergeometric and partial theta constructors.
//!
//! Two kinds of Pochhammer symbols appear side by side: parameter products
//! `(c;q)_n` are plain [`RatFun`] values ([`param_pochhammer`]), while
//! `(cz;q)_n` depends on `z` and is a [`TruncSeries`] ([`pochhammer_finite`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::coeffring::{RatFun, SymbolTable};
use crate::error::{Error, Result};

/// Symbol table together with the value used for the base `q`.
///
/// `q` is normally the symbol `q`, but may be specialised to any nonzero
/// rational function (a rational number, say) for fast numeric spot checks.
#[derive(Clone, Debug)]
pub struct QCtx {
    table: Arc<SymbolTable>,
    q: RatFun,
}

impl QCtx {
    /// Uses the declared symbol `q` as the base.
    pub fn new(table: &Arc<SymbolTable>) -> Result<Self> {
        Ok(QCtx { table: table.clone(), q: RatFun::symbol(table, "q")? })
    }

    pub fn with_base(q: RatFun) -> Self {
        QCtx { table: q.table().clone(), q }
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn q(&self) -> &RatFun {
        &self.q
    }

    pub fn q_pow(&self, k: i64) -> RatFun {
        self.q.pow(k).expect("base q must be nonzero")
    }

    pub fn one(&self) -> RatFun {
        RatFun::one(&self.table)
    }

    pub fn zero(&self) -> RatFun {
        RatFun::zero(&self.table)
    }

    pub fn int(&self, c: i64) -> RatFun {
        RatFun::from_int(&self.table, c)
    }

    pub fn sym(&self, name: &str) -> Result<RatFun> {
        RatFun::symbol(&self.table, name)
    }
}

/// Power series `c_0 + c_1 z + ... + c_N z^N`, exact up to order `N`.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    coeffs: Vec<RatFun>,
}

#[derive(Serialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl TruncSeries {
    pub fn from_coeffs(coeffs: Vec<RatFun>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least c_0");
        TruncSeries { coeffs }
    }

    pub fn zero(table: &Arc<SymbolTable>, order: usize) -> Self {
        Self::from_coeffs(vec![RatFun::zero(table); order + 1])
    }

    pub fn constant(c: RatFun, order: usize) -> Self {
        let mut s = Self::zero(c.table(), order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(table: &Arc<SymbolTable>, order: usize) -> Self {
        Self::constant(RatFun::one(table), order)
    }

    /// `c z^k`; zero when `k > order`.
    pub fn monomial(c: RatFun, k: usize, order: usize) -> Self {
        let mut s = Self::zero(c.table(), order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series whose coefficients are the given values (padded with zeros).
    pub fn from_poly(table: &Arc<SymbolTable>, coeffs: &[RatFun], order: usize) -> Self {
        let mut s = Self::zero(table, order);
        for (i, c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        self.coeffs[0].table()
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    /// `[z^n]`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> RatFun {
        self.coeffs.get(n).cloned().unwrap_or_else(|| RatFun::zero(self.table()))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        while c.len() < order + 1 {
            c.push(RatFun::zero(self.table()));
        }
        Self::from_coeffs(c)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// First index at which the two series differ, compared up to the
    /// smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| !self.coeffs[i].equals(&other.coeffs[i]))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        let c = (0..=n)
            .map(|i| self.coeffs[i].checked_add(&other.coeffs[i]))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(c))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        let c = (0..=n)
            .map(|i| self.coeffs[i].checked_sub(&other.coeffs[i]))
            .collect::<Result<_>>()?;
        Ok(Self::from_coeffs(c))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let n = self.order().min(other.order());
        let table = self.table().clone();
        let lo_a = self.valuation();
        let lo_b = other.valuation();
        let mut out = vec![RatFun::zero(&table); n + 1];
        if let (Some(va), Some(vb)) = (lo_a, lo_b) {
            for (m, slot) in out.iter_mut().enumerate().skip(va + vb) {
                let mut terms = Vec::new();
                for i in va..=(m - vb) {
                    let (x, y) = (&self.coeffs[i], &other.coeffs[m - i]);
                    if !x.is_zero() && !y.is_zero() {
                        terms.push(x.checked_mul(y)?);
                    }
                }
                *slot = RatFun::checked_sum(&table, &terms)?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// Sum of several series, truncated to the smallest order.
    pub fn checked_sum(terms: &[TruncSeries]) -> Result<Self> {
        let first = terms.first().ok_or_else(|| Error::Domain("empty sum".into()))?;
        let table = first.table().clone();
        let n = terms.iter().map(|t| t.order()).min().unwrap_or(0);
        let coeffs = (0..=n)
            .map(|i| {
                let col: Vec<RatFun> = terms.iter().map(|t| t.coeffs[i].clone()).collect();
                RatFun::checked_sum(&table, &col)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn scalar_mul(&self, c: &RatFun) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `z^k`, dropping powers past the order.
    pub fn mul_z_pow(&self, k: usize) -> Self {
        let n = self.order();
        let table = self.table().clone();
        let c = (0..=n)
            .map(|i| if i >= k { self.coeffs[i - k].clone() } else { RatFun::zero(&table) })
            .collect();
        Self::from_coeffs(c)
    }

    /// In place `self *= (1 - w z^d)`.
    pub fn mul_binomial(&mut self, w: &RatFun, d: usize) {
        if w.is_zero() || d > self.order() {
            return;
        }
        for j in (d..=self.order()).rev() {
            if self.coeffs[j - d].is_zero() {
                continue;
            }
            let t = w * &self.coeffs[j - d];
            self.coeffs[j] = &self.coeffs[j] - &t;
        }
    }

    /// In place `self /= (1 - w z^d)` for `d >= 1`.
    pub fn div_binomial(&mut self, w: &RatFun, d: usize) {
        assert!(d >= 1, "constant binomials are divided as scalars");
        if w.is_zero() || d > self.order() {
            return;
        }
        for j in d..=self.order() {
            if self.coeffs[j - d].is_zero() {
                continue;
            }
            let t = w * &self.coeffs[j - d];
            self.coeffs[j] = &self.coeffs[j] + &t;
        }
    }

    /// Multiplicative inverse to the same order.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let inv0 = c0.inv()?;
        let n = self.order();
        let mut out: Vec<RatFun> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = RatFun::zero(self.table());
            for i in 1..=m {
                if self.coeffs[i].is_zero() || out[m - i].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[i] * &out[m - i]);
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Self::from_coeffs(out))
    }

    /// Substitution `z -> z q^k`: `c_n -> c_n q^{kn}`.
    pub fn shift_z_by_q_power(&self, ctx: &QCtx, k: i64) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, x)| if x.is_zero() { x.clone() } else { x * &ctx.q_pow(k * n as i64) })
            .collect();
        Self::from_coeffs(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.table(), self.order());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Applies [`RatFun::substitute`] to every coefficient.
    pub fn substitute(&self, assignments: &[(crate::Symbol, RatFun)]) -> Result<Self> {
        let c = self.coeffs.iter().map(|x| x.substitute(assignments)).collect::<Result<_>>()?;
        Ok(Self::from_coeffs(c))
    }

    /// `{"order": N, "coeffs": [...]}` with canonical coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        })
        .expect("series json")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_add(rhs).expect("series arithmetic failed")
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_sub(rhs).expect("series arithmetic failed")
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_mul(rhs).expect("series arithmetic failed")
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Parameter Pochhammer `(c;q)_n` as a rational function, for any integer
/// `n`. Negative indices use `(c;q)_{-m} = 1 / prod_{j=1}^{m} (1 - c q^{-j})`.
pub fn param_pochhammer(ctx: &QCtx, c: &RatFun, n: i64) -> Result<RatFun> {
    if n < 0 {
        return inv_factors(ctx, c, (1..=-n).map(|j| -j), n);
    }
    let one = ctx.one();
    let mut acc = one.clone();
    for i in 0..n {
        acc = &acc * &(&one - &(c * &ctx.q_pow(i)));
    }
    Ok(acc)
}

/// `1/(c;q)_n`. Each factor is inverted on its own so that denominators
/// stay split into small factors.
pub fn param_pochhammer_inv(ctx: &QCtx, c: &RatFun, n: i64) -> Result<RatFun> {
    if n < 0 {
        return param_pochhammer(ctx, c, n)?.inv();
    }
    inv_factors(ctx, c, 0..n, n)
}

fn inv_factors(ctx: &QCtx, c: &RatFun, exps: impl Iterator<Item = i64>, n: i64) -> Result<RatFun> {
    let one = ctx.one();
    let mut acc = one.clone();
    for e in exps {
        let f = &one - &(c * &ctx.q_pow(e));
        if f.is_zero() {
            return Err(Error::Pole(format!("({c};q)_{n} has a vanishing factor")));
        }
        acc = &acc * &f.inv()?;
    }
    Ok(acc)
}

/// `(cz;q)_n` truncated at `order`, for any integer `n`.
pub fn pochhammer_finite(ctx: &QCtx, c: &RatFun, n: i64, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(ctx.table(), order);
    if n >= 0 {
        for i in 0..n {
            s.mul_binomial(&(c * &ctx.q_pow(i)), 1);
        }
    } else {
        for j in 1..=(-n) {
            s.div_binomial(&(c * &ctx.q_pow(-j)), 1);
        }
    }
    s
}

/// `1/(q;q)_m` for `m = 0..=order`.
fn inv_q_factorials(ctx: &QCtx, order: usize) -> Vec<RatFun> {
    let one = ctx.one();
    let mut out = Vec::with_capacity(order + 1);
    let mut acc = one.clone();
    out.push(acc.clone());
    for m in 1..=order {
        acc = &acc / &(&one - &ctx.q_pow(m as i64));
        out.push(acc.clone());
    }
    out
}

/// `(cz;q)_inf = sum_m (-c)^m q^{m(m-1)/2} z^m / (q;q)_m` (Euler).
pub fn pochhammer_infinite(ctx: &QCtx, c: &RatFun, order: usize) -> TruncSeries {
    let inv = inv_q_factorials(ctx, order);
    let coeffs = (0..=order)
        .map(|m| {
            let sign = if m % 2 == 0 { ctx.one() } else { ctx.int(-1) };
            let m64 = m as i64;
            &(&sign * &c.pow(m64).expect("power")) * &(&ctx.q_pow(m64 * (m64 - 1) / 2) * &inv[m])
        })
        .collect();
    TruncSeries::from_coeffs(coeffs)
}

/// `1/(cz;q)_inf = sum_m c^m z^m / (q;q)_m`.
pub fn inv_pochhammer_infinite(ctx: &QCtx, c: &RatFun, order: usize) -> TruncSeries {
    let inv = inv_q_factorials(ctx, order);
    let coeffs = (0..=order).map(|m| &c.pow(m as i64).expect("power") * &inv[m]).collect();
    TruncSeries::from_coeffs(coeffs)
}

/// Base element `z^n (az;q)_n / (bz;q)_n`.
pub fn base_element(ctx: &QCtx, n: usize, a: &RatFun, b: &RatFun, order: usize) -> Result<TruncSeries> {
    if n > order {
        return Err(Error::Order { index: n, order });
    }
    Ok(base_ratio(ctx, n, a, b, order - n).mul_z_pow_extend(n, order))
}

/// `(az;q)_k / (bz;q)_k` to the given order.
pub fn base_ratio(ctx: &QCtx, k: usize, a: &RatFun, b: &RatFun, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(ctx.table(), order);
    s.mul_base_ratio(ctx, k, a, b);
    s
}

impl TruncSeries {
    /// In place `self *= (az;q)_k / (bz;q)_k`.
    pub fn mul_base_ratio(&mut self, ctx: &QCtx, k: usize, a: &RatFun, b: &RatFun) {
        for i in 0..k as i64 {
            let qi = ctx.q_pow(i);
            self.mul_binomial(&(a * &qi), 1);
            self.div_binomial(&(b * &qi), 1);
        }
    }

    /// `z^k * self`, re-expressed at a (larger) target order.
    pub fn mul_z_pow_extend(&self, k: usize, order: usize) -> TruncSeries {
        let table = self.table().clone();
        let c = (0..=order)
            .map(|i| if i >= k { self.coeff(i - k) } else { RatFun::zero(&table) })
            .collect();
        TruncSeries::from_coeffs(c)
    }
}

/// A parameter of the form `c z^d`. With `d = 0` it is a plain parameter;
/// with `d >= 1` its Pochhammer symbol is a series in `z`.
#[derive(Clone, Debug)]
pub struct ZMono {
    pub coeff: RatFun,
    pub zpow: usize,
}

impl ZMono {
    pub fn constant(c: RatFun) -> Self {
        ZMono { coeff: c, zpow: 0 }
    }

    pub fn linear(c: RatFun) -> Self {
        ZMono { coeff: c, zpow: 1 }
    }

    pub fn new(c: RatFun, zpow: usize) -> Self {
        ZMono { coeff: c, zpow }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        ZMono { coeff: &self.coeff * c, zpow: self.zpow }
    }

    /// `(c z^d)^n`.
    pub fn pow(&self, n: usize) -> Result<Self> {
        Ok(ZMono { coeff: self.coeff.pow(n as i64)?, zpow: self.zpow * n })
    }

    /// `c z^d` as a series.
    pub fn series(&self, order: usize) -> TruncSeries {
        TruncSeries::monomial(self.coeff.clone(), self.zpow, order)
    }

    /// `self * s`.
    pub fn mul_series(&self, s: &TruncSeries) -> TruncSeries {
        s.scalar_mul(&self.coeff).mul_z_pow(self.zpow)
    }
}

/// `s * (m;q)_n` for `n >= 0`.
pub fn mul_zmono_pochhammer(ctx: &QCtx, s: &TruncSeries, m: &ZMono, n: usize) -> TruncSeries {
    let mut out = s.clone();
    for j in 0..n as i64 {
        let w = &m.coeff * &ctx.q_pow(j);
        if m.zpow == 0 {
            out = out.scalar_mul(&(&ctx.one() - &w));
        } else {
            out.mul_binomial(&w, m.zpow);
        }
    }
    out
}

/// `s / (m;q)_n` for `n >= 0`; a vanishing constant factor is a pole.
pub fn div_zmono_pochhammer(ctx: &QCtx, s: &TruncSeries, m: &ZMono, n: usize) -> Result<TruncSeries> {
    let mut out = s.clone();
    for j in 0..n as i64 {
        let w = &m.coeff * &ctx.q_pow(j);
        if m.zpow == 0 {
            let f = &ctx.one() - &w;
            if f.is_zero() {
                return Err(Error::Pole(format!("({};q)_{n} vanishes at index {j}", m.coeff)));
            }
            out = out.scalar_mul(&f.inv()?);
        } else {
            out.div_binomial(&w, m.zpow);
        }
    }
    Ok(out)
}

/// General `sum_k (u_1..;q)_k / (q, l_1..;q)_k * arg^k` where parameters and
/// the argument may carry powers of `z`. The argument must contain `z`, so
/// term `k` starts at `z^{k*d}` and the sum truncates soundly.
pub fn qhyper_general(
    ctx: &QCtx,
    uppers: &[ZMono],
    lowers: &[ZMono],
    arg: &ZMono,
    order: usize,
) -> Result<TruncSeries> {
    if arg.zpow == 0 {
        return Err(Error::Domain("hypergeometric argument must contain z".into()));
    }
    let one = ctx.one();
    let mut total = TruncSeries::one(ctx.table(), order);
    let mut term = TruncSeries::one(ctx.table(), order);
    let mut k = 1usize;
    while k * arg.zpow <= order {
        let qk = ctx.q_pow(k as i64 - 1);
        let mut scalar = &arg.coeff / &(&one - &ctx.q_pow(k as i64));
        for u in uppers {
            let w = &u.coeff * &qk;
            if u.zpow == 0 {
                scalar = &scalar * &(&one - &w);
            } else {
                term.mul_binomial(&w, u.zpow);
            }
        }
        for (idx, l) in lowers.iter().enumerate() {
            let w = &l.coeff * &qk;
            if l.zpow == 0 {
                let f = &one - &w;
                if f.is_zero() {
                    return Err(Error::Pole(format!(
                        "lower parameter #{idx} ({}) gives a zero factor at index {}",
                        l.coeff,
                        k - 1
                    )));
                }
                scalar = &scalar / &f;
            } else {
                term.div_binomial(&w, l.zpow);
            }
        }
        term = term.scalar_mul(&scalar).mul_z_pow(arg.zpow);
        if term.is_zero() {
            break;
        }
        total = &total + &term;
        k += 1;
    }
    Ok(total)
}

/// `r+1 phi r (uppers; lowers; q, cz)` with constant parameters.
pub fn qhyper(ctx: &QCtx, uppers: &[RatFun], lowers: &[RatFun], c: &RatFun, order: usize) -> Result<TruncSeries> {
    let up: Vec<_> = uppers.iter().cloned().map(ZMono::constant).collect();
    let lo: Vec<_> = lowers.iter().cloned().map(ZMono::constant).collect();
    qhyper_general(ctx, &up, &lo, &ZMono::linear(c.clone()), order)
}

/// `sum_k (-1)^k q^{B k(k-1)/2} c^k z^{pk}`. The partial theta function
/// `theta(z;q)` is `B=1, c=1, p=1`; `theta(x z^2; q^2)` is `B=2, c=x, p=2`.
pub fn partial_theta(ctx: &QCtx, base_exp: u32, c: &RatFun, p: usize, order: usize) -> TruncSeries {
    assert!(p >= 1);
    let mut s = TruncSeries::zero(ctx.table(), order);
    let mut k = 0usize;
    while p * k <= order {
        let k64 = k as i64;
        let sign = if k % 2 == 0 { ctx.one() } else { ctx.int(-1) };
        let coeff = &sign * &(&ctx.q_pow(base_exp as i64 * k64 * (k64 - 1) / 2) * &c.pow(k64).expect("power"));
        s.coeffs[p * k] = coeff;
        k += 1;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::parse_ratfun;

    fn ctx() -> QCtx {
        QCtx::new(&SymbolTable::standard(&["c", "A"]).unwrap()).unwrap()
    }

    fn p(ctx: &QCtx, s: &str) -> RatFun {
        parse_ratfun(s, ctx.table()).unwrap()
    }

    fn series(ctx: &QCtx, cs: &[&str], order: usize) -> TruncSeries {
        let v: Vec<RatFun> = cs.iter().map(|s| p(ctx, s)).collect();
        TruncSeries::from_poly(ctx.table(), &v, order)
    }

    fn assert_series_eq(x: &TruncSeries, y: &TruncSeries) {
        assert_eq!(x.first_difference(y), None, "\n{x}\n{y}");
    }

    #[test]
    fn arithmetic_examples() {
        let c = ctx();
        let s = &series(&c, &["1", "1"], 2) * &series(&c, &["1", "-1"], 2);
        assert_series_eq(&s, &series(&c, &["1", "0", "-1"], 2));
        let geo = pochhammer_finite(&c, &p(&c, "b"), 1, 4).invert().unwrap();
        let scaled = geo.scalar_mul(&p(&c, "b"));
        assert_series_eq(&scaled, &series(&c, &["b", "b^2", "b^3", "b^4", "b^5"], 4));
        assert!((&s + &(-&s)).is_zero());
    }

    #[test]
    fn unequal_orders_truncate() {
        let c = ctx();
        let x = series(&c, &["1", "1", "1", "1"], 3);
        let y = series(&c, &["1", "2"], 1);
        assert_eq!((&x * &y).order(), 1);
        assert_eq!((&x + &y).order(), 1);
    }

    #[test]
    fn inversion() {
        let c = ctx();
        let one = TruncSeries::one(c.table(), 3);
        assert_series_eq(&one.invert().unwrap(), &one);
        let s = pochhammer_finite(&c, &p(&c, "b"), 2, 2);
        let inv = s.invert().unwrap();
        assert_series_eq(&(&s * &inv), &TruncSeries::one(c.table(), 2));
        // [z^1] = b(1+q), [z^2] = b^2 (1 + q + q^2)
        assert_eq!(inv.coeff(1), p(&c, "b*(1+q)"));
        assert_eq!(inv.coeff(2), p(&c, "b^2*(1+q+q^2)"));
        let z = series(&c, &["0", "1"], 2);
        assert_eq!(z.invert().unwrap_err(), Error::NonInvertible);
    }

    #[test]
    fn q_shift() {
        let c = ctx();
        let s = series(&c, &["1", "1"], 1);
        assert_series_eq(&s.shift_z_by_q_power(&c, 1), &series(&c, &["1", "q"], 1));
        let g = series(&c, &["1", "1", "1", "1"], 3);
        let back = g.shift_z_by_q_power(&c, 2).shift_z_by_q_power(&c, -2);
        assert_series_eq(&back, &g);
        assert_series_eq(&g.shift_z_by_q_power(&c, 2), &series(&c, &["1", "q^2", "q^4", "q^6"], 3));
    }

    #[test]
    fn finite_pochhammers() {
        let c = ctx();
        assert_series_eq(&pochhammer_finite(&c, &p(&c, "a"), 1, 3), &series(&c, &["1", "-a"], 3));
        assert_series_eq(
            &pochhammer_finite(&c, &p(&c, "a"), 2, 3),
            &series(&c, &["1", "-a*(1+q)", "a^2*q"], 3),
        );
        // (bz;q)_{-1} = 1/(1 - bz/q)
        let neg = pochhammer_finite(&c, &p(&c, "b"), -1, 3);
        assert_series_eq(&neg, &series(&c, &["1", "b/q", "b^2/q^2", "b^3/q^3"], 3));
    }

    #[test]
    fn parameter_pochhammers() {
        let c = ctx();
        assert_eq!(param_pochhammer(&c, &p(&c, "a"), 2).unwrap(), p(&c, "(1-a)*(1-a*q)"));
        assert_eq!(param_pochhammer(&c, &p(&c, "a"), -1).unwrap(), p(&c, "1/(1-a/q)"));
        assert!(param_pochhammer(&c, &p(&c, "q"), -1).is_err());
        assert!(param_pochhammer(&c, &p(&c, "q^-2"), 3).unwrap().is_zero());
    }

    #[test]
    fn euler_expansions() {
        let c = ctx();
        let cc = p(&c, "c");
        let e = pochhammer_infinite(&c, &cc, 4);
        assert!(e.coeff(0).is_one());
        assert_eq!(e.coeff(1), p(&c, "-c/(1-q)"));
        assert_eq!(e.coeff(2), p(&c, "c^2*q/((1-q)*(1-q^2))"));
        let ie = inv_pochhammer_infinite(&c, &cc, 4);
        assert_eq!(ie.coeff(1), p(&c, "c/(1-q)"));
        assert_series_eq(&(&e * &ie), &TruncSeries::one(c.table(), 4));
        let z = inv_pochhammer_infinite(&c, &c.zero(), 4);
        assert_series_eq(&z, &TruncSeries::one(c.table(), 4));
    }

    #[test]
    fn euler_product_stabilises() {
        // low coefficients of prod_{i<K}(1 - c q^i z) agree with the closed
        // form after expanding 1/(q;q)_m as a power series in q
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        let q = RatFun::from_ratio(&t, &num_rational::BigRational::new(1.into(), 7.into()));
        let c = QCtx::with_base(q);
        let cc = RatFun::from_int(&t, 3);
        let closed = pochhammer_infinite(&c, &cc, 3);
        let prod = pochhammer_finite(&c, &cc, 360, 3);
        for m in 0..=3 {
            let diff = (&closed.coeff(m) - &prod.coeff(m)).as_rational().unwrap();
            let tiny = num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(300));
            assert!(num_traits::Signed::abs(&diff) < tiny);
        }
    }

    #[test]
    fn base_elements() {
        let c = ctx();
        let (a, b) = (p(&c, "a"), p(&c, "b"));
        assert_series_eq(&base_element(&c, 0, &a, &b, 3).unwrap(), &TruncSeries::one(c.table(), 3));
        let e1 = base_element(&c, 1, &a, &b, 3).unwrap();
        assert_series_eq(&e1, &series(&c, &["0", "1", "b-a", "b*(b-a)"], 3));
        for n in 0..=5 {
            let e = base_element(&c, n, &a, &b, 5).unwrap();
            assert_eq!(e.valuation(), Some(n));
            assert!(e.coeff(n).is_one());
        }
        assert!(matches!(base_element(&c, 4, &a, &b, 3), Err(Error::Order { .. })));
    }

    #[test]
    fn basic_hypergeometric() {
        let c = ctx();
        let s = qhyper(&c, &[p(&c, "A")], &[], &p(&c, "c"), 3).unwrap();
        assert!(s.coeff(0).is_one());
        assert_eq!(s.coeff(1), p(&c, "(1-A)*c/(1-q)"));
        // q-binomial theorem: 1phi0(A; cz) = (Acz;q)_inf / (cz;q)_inf
        let rhs = &pochhammer_infinite(&c, &p(&c, "A*c"), 5) * &inv_pochhammer_infinite(&c, &p(&c, "c"), 5);
        assert_series_eq(&qhyper(&c, &[p(&c, "A")], &[], &p(&c, "c"), 5).unwrap(), &rhs);
        let pole = qhyper(&c, &[p(&c, "A")], &[p(&c, "q^-1")], &p(&c, "c"), 4);
        assert!(matches!(pole, Err(Error::Pole(_))));
    }

    #[test]
    fn partial_thetas() {
        let c = ctx();
        let th = partial_theta(&c, 1, &c.one(), 1, 3);
        assert_series_eq(&th, &series(&c, &["1", "-1", "q", "-q^3"], 3));
        let th2 = partial_theta(&c, 2, &p(&c, "q"), 2, 4);
        assert_series_eq(&th2, &series(&c, &["1", "0", "-q", "0", "q^4"], 4));
        assert_series_eq(&partial_theta(&c, 1, &c.zero(), 1, 3), &TruncSeries::one(c.table(), 3));
    }

    #[test]
    fn json_shape() {
        let c = ctx();
        let s = series(&c, &["1", "a - b"], 1);
        assert_eq!(s.to_json().to_string(), r#"{"order":1,"coeffs":["1","a - b"]}"#);
    }
}
