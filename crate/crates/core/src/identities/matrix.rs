//! Structural properties of the inverse matrix `B` and agreement between
//! independent routes to the expansion coefficients.

use crate::coeffring::{RatFun, SymbolTable};
use crate::error::Result;
use crate::inversion::{
    b_column1, b_zero_coeffs, base_matrix, carlitz_coeffs, coro310_coeffs, expand_theorem15, expand_theorem15_with,
    expand_triangular, finite_gf_rhs, gn_polynomials, kernel, lt_inverse, polynomial_f_coeffs, sn_polynomial,
    thm25_matrix, ExpansionResult, LTMatrix,
};
use crate::rng::CoeffRng;
use crate::series::{partial_theta, QCtx, TruncSeries};

use super::{symbolic_params, Failure, PropertyOutcome};

/// Number of random series in the dual-path coefficient check.
pub const DUAL_PATH_CASES: usize = 25;
const CONSISTENCY_CASES: usize = 5;

fn ctx() -> Result<QCtx> {
    QCtx::new(&SymbolTable::standard(&["y", "t"])?)
}

fn ab(ctx: &QCtx) -> Result<(RatFun, RatFun)> {
    Ok((ctx.sym("a")?, ctx.sym("b")?))
}

fn entry(n: usize, k: usize, lhs: &RatFun, rhs: &RatFun) -> Failure {
    Failure::new(n, lhs, rhs).with_note(format!("k={k}"))
}

fn symbolic(failure: Option<Failure>) -> Result<PropertyOutcome> {
    Ok(PropertyOutcome { parameters: symbolic_params(&["a", "b"]), failure })
}

fn first_entry_diff(l: &LTMatrix, r: &LTMatrix) -> Option<Failure> {
    l.first_difference(r).map(|(n, k)| entry(n, k, &l.get(n, k), &r.get(n, k)))
}

fn first_coeff_diff(l: &ExpansionResult, r: &ExpansionResult, note: String) -> Option<Failure> {
    l.first_difference(r)
        .map(|i| Failure::new(i, &l.coeffs[i], &r.coeffs[i]).with_note(note))
}

fn inverse_of_base(ctx: &QCtx, a: &RatFun, b: &RatFun, order: usize) -> Result<(LTMatrix, LTMatrix)> {
    let am = base_matrix(ctx, a, b, order);
    let bm = lt_inverse(&am)?;
    Ok((am, bm))
}

/// `A B = B A = I` exactly.
pub fn inverse_pair(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let (am, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    let id = LTMatrix::identity(&ctx, order);
    let failure = first_entry_diff(&am.mul(&bm), &id)
        .or_else(|| first_entry_diff(&bm.mul(&am), &id).map(|f| f.with_note("B*A")));
    symbolic(failure)
}

/// Closed coefficient formula against the triangular solve on `cases`
/// seeded random series.
pub fn dual_path_coefficients(order: usize, seed: u64, cases: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let bcol = b_column1(&ctx, &a, &b, order);
    for i in 0..cases {
        let f = CoeffRng::stream(seed, i as u64).series(ctx.table(), order);
        let fast = expand_theorem15_with(&ctx, &f, &a, &b, &bcol);
        let slow = expand_triangular(&ctx, &f, &a, &b);
        if let Some(fail) = first_coeff_diff(&fast, &slow, format!("case {i}")) {
            return symbolic(Some(fail));
        }
    }
    symbolic(None)
}

/// Entry-wise closed form of `B` against forward substitution.
pub fn dual_path_entries(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let (_, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    symbolic(first_entry_diff(&thm25_matrix(&ctx, &a, &b, order), &bm))
}

/// Greedy peel of `z` against column 1 of `B`.
pub fn b_column_peel(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let (_, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    let col = b_column1(&ctx, &a, &b, order);
    let failure = (1..=order)
        .find(|&n| !col[n].equals(&bm.get(n, 1)))
        .map(|n| entry(n, 1, &col[n], &bm.get(n, 1)));
    symbolic(failure)
}

/// `B_{n,k+1} + (b-a) sum_{i=k+2}^{n} b^{i-k-2} B_{n,i} = q^{n-k-1} B_{n-1,k}`.
pub fn recurrence(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let (_, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    let bma = &b - &a;
    for n in 1..=order {
        for k in 0..n {
            let mut sum = ctx.zero();
            for i in (k + 2)..=n {
                sum = &sum + &(&b.pow((i - k - 2) as i64)? * &bm.get(n, i));
            }
            let lhs = &bm.get(n, k + 1) + &(&bma * &sum);
            let rhs = &ctx.q_pow((n - k - 1) as i64) * &bm.get(n - 1, k);
            if !lhs.equals(&rhs) {
                return symbolic(Some(entry(n, k, &lhs, &rhs)));
            }
        }
    }
    symbolic(None)
}

/// `B_{n,k} - a B_{n,k+1} = q^{n-k} B_{n-1,k-1} - b q^{n-k-1} B_{n-1,k}`.
pub fn three_term(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let (_, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    for n in 1..=order {
        for k in 1..=n {
            let d = (n - k) as i64;
            let lhs = &bm.get(n, k) - &(&a * &bm.get(n, k + 1));
            let rhs = &(&ctx.q_pow(d) * &bm.get(n - 1, k - 1)) - &(&(&b * &ctx.q_pow(d - 1)) * &bm.get(n - 1, k));
            if !lhs.equals(&rhs) {
                return symbolic(Some(entry(n, k, &lhs, &rhs)));
            }
        }
    }
    symbolic(None)
}

/// With `G_k(z) = sum_n B_{n,k} z^n`:
/// `G_k(z) - a G_{k+1}(z) = z q^{1-k} G_{k-1}(qz) - b z q^{-k} G_k(qz)`.
pub fn column_functional(order: usize, kmax: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let (_, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    for k in 1..=kmax.min(order) {
        let k64 = k as i64;
        let lhs = &bm.column_series(k) - &bm.column_series(k + 1).scalar_mul(&a);
        let first = bm.column_series(k - 1).shift_z_by_q_power(&ctx, 1).scalar_mul(&ctx.q_pow(1 - k64));
        let second = bm.column_series(k).shift_z_by_q_power(&ctx, 1).scalar_mul(&(&b * &ctx.q_pow(-k64)));
        let rhs = (&first - &second).mul_z_pow(1);
        if let Some(i) = lhs.first_difference(&rhs) {
            let f = Failure::new(i, &lhs.coeff(i), &rhs.coeff(i)).with_note(format!("column {k}"));
            return symbolic(Some(f));
        }
    }
    symbolic(None)
}

/// `sum_k B_{n,k} y^k` against its closed finite generating function.
pub fn finite_gf(nmax: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let y = ctx.sym("y")?;
    let (_, bm) = inverse_of_base(&ctx, &a, &b, nmax)?;
    let bcol = b_column1(&ctx, &a, &b, nmax);
    for n in 1..=nmax {
        let mut lhs = ctx.zero();
        for k in 0..=n {
            lhs = &lhs + &(&bm.get(n, k) * &y.pow(k as i64)?);
        }
        let rhs = finite_gf_rhs(&ctx, n, &a, &b, &bcol, &y)?;
        if !lhs.equals(&rhs) {
            return symbolic(Some(Failure::new(n, &lhs, &rhs)));
        }
    }
    symbolic(None)
}

/// `S_n(y)` has numerator divisible by `y - a q^k` for each `k < n`.
pub fn sn_divisibility(nmax: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let y = ctx.sym("y")?;
    let bcol = b_column1(&ctx, &a, &b, nmax);
    for n in 1..=nmax {
        let s = sn_polynomial(&ctx, n, &a, &b, &bcol, &y)?;
        for k in 0..n {
            let factor = &y - &(&a * &ctx.q_pow(k as i64));
            if s.numer().div_exact(factor.numer()).is_none() {
                let f = Failure { index: n, lhs: s.to_string(), rhs: format!("multiple of {factor}"), note: None };
                return symbolic(Some(f.with_note(format!("k={k}"))));
            }
        }
    }
    symbolic(None)
}

/// `B_{n,k}(at, bt) = B_{n,k}(a, b) t^{n-k}`.
pub fn homogeneity(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let t = ctx.sym("t")?;
    let table = ctx.table();
    let subs = [(table.symbol("a")?, &a * &t), (table.symbol("b")?, &b * &t)];
    let (_, bm) = inverse_of_base(&ctx, &a, &b, order)?;
    for n in 0..=order {
        for k in 0..=n {
            let lhs = bm.get(n, k).substitute(&subs)?;
            let rhs = &bm.get(n, k) * &t.pow((n - k) as i64)?;
            if !lhs.equals(&rhs) {
                return symbolic(Some(entry(n, k, &lhs, &rhs)));
            }
        }
    }
    symbolic(None)
}

/// `[z^n]{(bz;q)_{n-1}/(az;q)_n}
///   = a sum_{i<n} B_{n-i,1} q^{(n-i)i} [z^i]{(bz;q)_i/(az;q)_{i+1}}` for `n >= 1`.
pub fn k0_identity(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let (a, b) = ab(&ctx)?;
    let bcol = b_column1(&ctx, &a, &b, order);
    for n in 1..=order {
        let lhs = kernel(&ctx, n as i64 - 1, &a, &b, n).coeff(n);
        let mut sum = ctx.zero();
        for i in 0..n {
            let x = kernel(&ctx, i as i64, &a, &b, i).coeff(i);
            sum = &sum + &(&(&bcol[n - i] * &ctx.q_pow(((n - i) * i) as i64)) * &x);
        }
        let rhs = &a * &sum;
        if !lhs.equals(&rhs) {
            return symbolic(Some(Failure::new(n, &lhs, &rhs)));
        }
    }
    symbolic(None)
}

/// `B_{n,1}(a, aq) = g_n(q) a^{n-1}`.
pub fn gn_specialization(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let a = ctx.sym("a")?;
    let bcol = b_column1(&ctx, &a, &(&a * ctx.q()), order);
    let g = gn_polynomials(&ctx, order);
    let failure = (1..=order).find_map(|n| {
        let rhs = &g[n - 1] * &a.pow(n as i64 - 1).expect("power");
        (!bcol[n].equals(&rhs)).then(|| Failure::new(n, &bcol[n], &rhs))
    });
    Ok(PropertyOutcome { parameters: vec![("b".into(), "a*q".into())], failure })
}

fn random_cases(ctx: &QCtx, order: usize, seed: u64, salt: u64) -> Vec<TruncSeries> {
    (0..CONSISTENCY_CASES as u64)
        .map(|i| CoeffRng::stream(seed, salt * 1000 + i).series(ctx.table(), order))
        .collect()
}

fn consistency(
    cases: Vec<TruncSeries>,
    parameters: Vec<(String, String)>,
    mut route: impl FnMut(&TruncSeries) -> (ExpansionResult, ExpansionResult),
) -> Result<PropertyOutcome> {
    for (i, f) in cases.iter().enumerate() {
        let (l, r) = route(f);
        if let Some(fail) = first_coeff_diff(&l, &r, format!("case {i}")) {
            return Ok(PropertyOutcome { parameters, failure: Some(fail) });
        }
    }
    Ok(PropertyOutcome { parameters, failure: None })
}

/// `a = 0` formula against the triangular solve, including `F = 1/(1-bz)`.
pub fn carlitz_consistency(order: usize, seed: u64) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let b = ctx.sym("b")?;
    let zero = ctx.zero();
    let mut cases = random_cases(&ctx, order, seed, 1);
    let mut geo = TruncSeries::one(ctx.table(), order);
    geo.div_binomial(&b, 1);
    cases.push(geo);
    let params = vec![("a".into(), "0".into()), ("b".into(), "b".into())];
    consistency(cases, params, |f| (carlitz_coeffs(&ctx, f, &b), expand_triangular(&ctx, f, &zero, &b)))
}

/// `b = 0` formula against the triangular solve.
pub fn b_zero_consistency(order: usize, seed: u64) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let a = ctx.sym("a")?;
    let zero = ctx.zero();
    let params = vec![("a".into(), "a".into()), ("b".into(), "0".into())];
    consistency(random_cases(&ctx, order, seed, 2), params, |f| {
        (b_zero_coeffs(&ctx, f, &a), expand_triangular(&ctx, f, &a, &zero))
    })
}

/// `b = aq` formula against the triangular solve.
pub fn b_eq_aq_consistency(order: usize, seed: u64) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let a = ctx.sym("a")?;
    let aq = &a * ctx.q();
    let params = vec![("a".into(), "a".into()), ("b".into(), "a*q".into())];
    consistency(random_cases(&ctx, order, seed, 3), params, |f| {
        (coro310_coeffs(&ctx, f, &a), expand_triangular(&ctx, f, &a, &aq))
    })
}

/// Polynomial `F = (1-az) prod (1 - t_i z)` with the printed bound
/// `min(m, n-1)`, for `m = 1` (`t`) and `m = 2` (`t`, `y`).
pub fn polynomial_f(order: usize) -> Result<PropertyOutcome> {
    let ctx = ctx()?;
    let a = ctx.sym("a")?;
    let aq = &a * ctx.q();
    let params = vec![("a".into(), "a".into()), ("b".into(), "a*q".into())];
    let t = ctx.sym("t")?;
    let y = ctx.sym("y")?;
    for ts in [vec![t.clone()], vec![t, y]] {
        let mut f = TruncSeries::one(ctx.table(), order);
        f.mul_binomial(&a, 1);
        for ti in &ts {
            f.mul_binomial(ti, 1);
        }
        let l = polynomial_f_coeffs(&ctx, &ts, &a, order);
        let r = expand_triangular(&ctx, &f, &a, &aq);
        if let Some(fail) = first_coeff_diff(&l, &r, format!("m={}", ts.len())) {
            return Ok(PropertyOutcome { parameters: params, failure: Some(fail) });
        }
    }
    Ok(PropertyOutcome { parameters: params, failure: None })
}

/// `a = 1`, `b = -q`, `F = (1+z) sum (-1)^n z^{2n} q^{n^2}` gives `c_n = 1`
/// by both routes.
pub fn coogan_ono_expansion(order: usize) -> Result<PropertyOutcome> {
    let ctx = QCtx::new(&SymbolTable::new(&["q"])?)?;
    let (a, b) = (ctx.one(), -ctx.q().clone());
    let mut f = partial_theta(&ctx, 2, ctx.q(), 2, order);
    f.mul_binomial(&ctx.int(-1), 1);
    let params = vec![("a".into(), "1".into()), ("b".into(), "-q".into())];
    let ones = ExpansionResult { coeffs: vec![ctx.one(); order + 1], method: crate::inversion::Method::TriangularSolve };
    for r in [expand_theorem15(&ctx, &f, &a, &b), expand_triangular(&ctx, &f, &a, &b)] {
        if let Some(fail) = first_coeff_diff(&r, &ones, format!("{:?}", r.method)) {
            return Ok(PropertyOutcome { parameters: params, failure: Some(fail) });
        }
    }
    Ok(PropertyOutcome { parameters: params, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_pass() {
        for (name, o) in [
            ("inverse", inverse_pair(5)),
            ("dual coeffs", dual_path_coefficients(5, 7, 3)),
            ("dual entries", dual_path_entries(5)),
            ("peel", b_column_peel(5)),
            ("recurrence", recurrence(5)),
            ("three term", three_term(5)),
            ("column", column_functional(5, 4)),
            ("fff", finite_gf(4)),
            ("sn", sn_divisibility(3)),
            ("homogeneity", homogeneity(5)),
            ("k0", k0_identity(5)),
            ("gn", gn_specialization(6)),
            ("carlitz", carlitz_consistency(5, 7)),
            ("b0", b_zero_consistency(5, 7)),
            ("baq", b_eq_aq_consistency(5, 7)),
            ("poly", polynomial_f(6)),
            ("co", coogan_ono_expansion(8)),
        ] {
            let o = o.unwrap();
            assert!(o.failure.is_none(), "{name}: {:?}", o.failure);
        }
    }
}
