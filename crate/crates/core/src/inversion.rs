//! Base-change matrix `A` for the base `z^n (az;q)_n/(bz;q)_n`, its inverse
//! `B = A^{-1}`, and the coefficient formulas built on them.

use serde::Serialize;

use crate::coeffring::RatFun;
use crate::error::{Error, Result};
use crate::series::{
    base_element, base_ratio, param_pochhammer, param_pochhammer_inv, pochhammer_finite, QCtx, TruncSeries,
};

/// Lower-triangular `(N+1) x (N+1)` matrix; row `n` stores columns `0..=n`.
#[derive(Clone, Debug)]
pub struct LTMatrix {
    rows: Vec<Vec<RatFun>>,
}

#[derive(Serialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<String>>,
}

impl LTMatrix {
    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Self {
        for (n, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n + 1, "row {n} must hold {} entries", n + 1);
        }
        assert!(!rows.is_empty());
        LTMatrix { rows }
    }

    pub fn identity(ctx: &QCtx, order: usize) -> Self {
        let rows = (0..=order)
            .map(|n| (0..=n).map(|k| if k == n { ctx.one() } else { ctx.zero() }).collect())
            .collect();
        LTMatrix { rows }
    }

    /// Largest index `N` (the matrix is `(N+1) x (N+1)`).
    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> RatFun {
        if k > n {
            RatFun::zero(self.rows[0][0].table())
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn entry(&self, n: usize, k: usize) -> Option<&RatFun> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    pub fn rows(&self) -> &[Vec<RatFun>] {
        &self.rows
    }

    /// Column `k` as the series `sum_n M_{n,k} z^n`.
    pub fn column_series(&self, k: usize) -> TruncSeries {
        let table = self.rows[0][0].table().clone();
        let c = (0..=self.order())
            .map(|n| if k <= n { self.rows[n][k].clone() } else { RatFun::zero(&table) })
            .collect();
        TruncSeries::from_coeffs(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let table = self.rows[0][0].table().clone();
        let rows = (0..=n)
            .map(|i| {
                (0..=i)
                    .map(|k| {
                        let mut acc = RatFun::zero(&table);
                        for j in k..=i {
                            let x = &self.rows[i][j];
                            let y = &other.rows[j][k];
                            if !x.is_zero() && !y.is_zero() {
                                acc = &acc + &(x * y);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        LTMatrix { rows }
    }

    /// First `(n, k)` that differs from the identity.
    pub fn first_non_identity(&self) -> Option<(usize, usize)> {
        for (n, row) in self.rows.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                let ok = if n == k { x.is_one() } else { x.is_zero() };
                if !ok {
                    return Some((n, k));
                }
            }
        }
        None
    }

    /// First `(n, k)` where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let n = self.order().min(other.order());
        for i in 0..=n {
            for k in 0..=i {
                if !self.rows[i][k].equals(&other.rows[i][k]) {
                    return Some((i, k));
                }
            }
        }
        None
    }

    /// `{"n": N, "entries": [[...], ...]}` in row-major lower-triangular layout.
    pub fn to_json(&self) -> serde_json::Value {
        let entries = self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        serde_json::to_value(MatrixJson { n: self.order(), entries }).expect("matrix json")
    }
}

/// `A_{n,k} = [z^{n-k}] (az;q)_k / (bz;q)_k`.
pub fn base_matrix(ctx: &QCtx, a: &RatFun, b: &RatFun, order: usize) -> LTMatrix {
    let mut rows: Vec<Vec<RatFun>> = (0..=order).map(|n| Vec::with_capacity(n + 1)).collect();
    for k in 0..=order {
        let col = base_ratio(ctx, k, a, b, order - k);
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row.push(col.coeff(n - k));
        }
    }
    LTMatrix { rows }
}

/// Inverse of a unit lower-triangular matrix by forward substitution.
pub fn lt_inverse(m: &LTMatrix) -> Result<LTMatrix> {
    let n = m.order();
    for i in 0..=n {
        if !m.rows[i][i].is_one() {
            return Err(Error::Singular(i));
        }
    }
    let table = m.rows[0][0].table().clone();
    let mut inv: Vec<Vec<RatFun>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = Vec::with_capacity(i + 1);
        for k in 0..i {
            // sum_{j=k}^{i} M_{i,j} Inv_{j,k} = 0
            let mut acc = RatFun::zero(&table);
            for j in k..i {
                let x = &m.rows[i][j];
                let y = &inv[j][k];
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            row.push(-acc);
        }
        row.push(RatFun::one(&table));
        inv.push(row);
    }
    Ok(LTMatrix { rows: inv })
}

/// `B_{n,1}(a,b)` for `n = 0..=order` (with `B_{0,1} = 0`), by peeling
/// `z = sum_n B_{n,1} z^n (az;q)_n/(bz;q)_n` one base element at a time.
pub fn b_column1(ctx: &QCtx, a: &RatFun, b: &RatFun, order: usize) -> Vec<RatFun> {
    let mut out = vec![ctx.zero()];
    if order == 0 {
        return out;
    }
    let mut residual = TruncSeries::monomial(ctx.one(), 1, order);
    for n in 1..=order {
        let c = residual.coeff(n);
        if !c.is_zero() {
            let e = base_element(ctx, n, a, b, order).expect("n <= order");
            residual = &residual - &e.scalar_mul(&c);
        }
        out.push(c);
    }
    debug_assert!(residual.is_zero());
    out
}

/// Which route produced a coefficient vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    TriangularSolve,
    Theorem15,
    Carlitz,
    BZero,
    BEqAq,
    PolynomialF,
}

/// Coefficients `c_0..c_N` of `F = sum_n c_n z^n (az;q)_n/(bz;q)_n`.
#[derive(Debug, Clone)]
pub struct ExpansionResult {
    pub coeffs: Vec<RatFun>,
    pub method: Method,
}

impl ExpansionResult {
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(x, y)| !x.equals(y))
    }
}

/// `sum_n c_n z^n (az;q)_n/(bz;q)_n` to the given order.
pub fn reconstruct(ctx: &QCtx, coeffs: &[RatFun], a: &RatFun, b: &RatFun, order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(ctx.table(), order);
    for (n, c) in coeffs.iter().enumerate().take(order + 1) {
        if !c.is_zero() {
            s = &s + &base_element(ctx, n, a, b, order).expect("n <= order").scalar_mul(c);
        }
    }
    s
}

/// Definitional route: solve `A c = f` by forward substitution.
pub fn expand_triangular(ctx: &QCtx, f: &TruncSeries, a: &RatFun, b: &RatFun) -> ExpansionResult {
    let a_mat = base_matrix(ctx, a, b, f.order());
    let mut c: Vec<RatFun> = Vec::with_capacity(f.order() + 1);
    for n in 0..=f.order() {
        let mut acc = f.coeff(n);
        for (k, ck) in c.iter().enumerate() {
            let x = &a_mat.rows[n][k];
            if !x.is_zero() && !ck.is_zero() {
                acc = &acc - &(x * ck);
            }
        }
        c.push(acc);
    }
    ExpansionResult { coeffs: c, method: Method::TriangularSolve }
}

pub(crate) fn product_coeff(f: &TruncSeries, r: &TruncSeries, n: usize) -> RatFun {
    let mut acc = RatFun::zero(f.table());
    for j in 0..=n {
        let x = f.coeff(j);
        let y = r.coeff(n - j);
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(&x * &y);
        }
    }
    acc
}

/// `(bz;q)_{m} / (az;q)_{m+1}` for `m >= -1`, to the given order.
pub(crate) fn kernel(ctx: &QCtx, m: i64, a: &RatFun, b: &RatFun, order: usize) -> TruncSeries {
    let mut s = pochhammer_finite(ctx, b, m, order);
    for i in 0..=m {
        s.div_binomial(&(a * &ctx.q_pow(i)), 1);
    }
    s
}

/// Closed coefficient formula:
/// `c_n = [z^n]{F (bz;q)_{n-1}/(az;q)_n}
///        - a sum_{k<n} B_{n-k,1} q^{(n-k)k} [z^k]{F (bz;q)_k/(az;q)_{k+1}}`.
pub fn expand_theorem15(ctx: &QCtx, f: &TruncSeries, a: &RatFun, b: &RatFun) -> ExpansionResult {
    let bcol = b_column1(ctx, a, b, f.order());
    expand_theorem15_with(ctx, f, a, b, &bcol)
}

/// [`expand_theorem15`] with a precomputed `B_{n,1}` column.
pub fn expand_theorem15_with(ctx: &QCtx, f: &TruncSeries, a: &RatFun, b: &RatFun, bcol: &[RatFun]) -> ExpansionResult {
    let n_max = f.order();
    // inner[k] = [z^k]{F (bz;q)_k/(az;q)_{k+1}}
    let inner: Vec<RatFun> = (0..n_max)
        .map(|k| product_coeff(f, &kernel(ctx, k as i64, a, b, k), k))
        .collect();
    let coeffs = (0..=n_max)
        .map(|n| {
            let lead = product_coeff(f, &kernel(ctx, n as i64 - 1, a, b, n), n);
            let mut sum = ctx.zero();
            for (k, ik) in inner.iter().enumerate().take(n) {
                if ik.is_zero() || bcol[n - k].is_zero() {
                    continue;
                }
                let w = &bcol[n - k] * &ctx.q_pow(((n - k) * k) as i64);
                sum = &sum + &(&w * ik);
            }
            &lead - &(a * &sum)
        })
        .collect();
    ExpansionResult { coeffs, method: Method::Theorem15 }
}

/// Entry-wise closed form for `B = A^{-1}`:
/// `B_{n,k} = [z^{n-k}]{(bz;q)_{n-1}/(az;q)_n}
///            - a sum_{i=k}^{n-1} B_{n-i,1} q^{(n-i)i} [z^{i-k}]{(bz;q)_i/(az;q)_{i+1}}`.
pub fn matrix_entry_thm25(ctx: &QCtx, n: usize, k: usize, a: &RatFun, b: &RatFun, bcol: &[RatFun]) -> RatFun {
    if k > n {
        return ctx.zero();
    }
    let lead = kernel(ctx, n as i64 - 1, a, b, n - k).coeff(n - k);
    let mut sum = ctx.zero();
    for i in k..n {
        if bcol[n - i].is_zero() {
            continue;
        }
        let x = kernel(ctx, i as i64, a, b, i - k).coeff(i - k);
        sum = &sum + &(&(&bcol[n - i] * &ctx.q_pow(((n - i) * i) as i64)) * &x);
    }
    &lead - &(a * &sum)
}

/// The whole inverse matrix from the entry-wise closed form.
pub fn thm25_matrix(ctx: &QCtx, a: &RatFun, b: &RatFun, order: usize) -> LTMatrix {
    let bcol = b_column1(ctx, a, b, order);
    // kernels[i] = (bz;q)_{i-1}/(az;q)_i and (bz;q)_i/(az;q)_{i+1}
    let lead: Vec<TruncSeries> = (0..=order).map(|n| kernel(ctx, n as i64 - 1, a, b, order)).collect();
    let inner: Vec<TruncSeries> = (0..=order).map(|i| kernel(ctx, i as i64, a, b, order)).collect();
    let rows = (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let mut sum = ctx.zero();
                    for i in k..n {
                        if bcol[n - i].is_zero() {
                            continue;
                        }
                        let w = &bcol[n - i] * &ctx.q_pow(((n - i) * i) as i64);
                        sum = &sum + &(&w * &inner[i].coeff(i - k));
                    }
                    &lead[n].coeff(n - k) - &(a * &sum)
                })
                .collect()
        })
        .collect();
    LTMatrix { rows }
}

/// `g_1..g_N` with `g_n = 1 - sum_{i=1}^{n-1} g_{n-i} q^{(n-i)i}`; entry
/// `i` of the result is `g_{i+1}`.
pub fn gn_polynomials(ctx: &QCtx, order: usize) -> Vec<RatFun> {
    let mut g: Vec<RatFun> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut acc = ctx.one();
        for i in 1..n {
            acc = &acc - &(&g[n - i - 1] * &ctx.q_pow(((n - i) * i) as i64));
        }
        g.push(acc);
    }
    g
}

/// Carlitz expansion (`a = 0`): `c_n = [z^n]{F (bz;q)_{n-1}}`.
pub fn carlitz_coeffs(ctx: &QCtx, f: &TruncSeries, b: &RatFun) -> ExpansionResult {
    let coeffs = (0..=f.order())
        .map(|n| product_coeff(f, &pochhammer_finite(ctx, b, n as i64 - 1, n), n))
        .collect();
    ExpansionResult { coeffs, method: Method::Carlitz }
}

/// Expansion in the base `z^n (az;q)_n` (`b = 0`).
pub fn b_zero_coeffs(ctx: &QCtx, f: &TruncSeries, a: &RatFun) -> ExpansionResult {
    let n_max = f.order();
    let zero = ctx.zero();
    let bcol = b_column1(ctx, a, &zero, n_max);
    let inv_poch = |m: usize, order: usize| -> TruncSeries {
        let mut s = TruncSeries::one(ctx.table(), order);
        for i in 0..m as i64 {
            s.div_binomial(&(a * &ctx.q_pow(i)), 1);
        }
        s
    };
    let inner: Vec<RatFun> = (0..n_max).map(|k| product_coeff(f, &inv_poch(k + 1, k), k)).collect();
    let coeffs = (0..=n_max)
        .map(|n| {
            let lead = product_coeff(f, &inv_poch(n, n), n);
            let mut sum = ctx.zero();
            for (k, ik) in inner.iter().enumerate().take(n) {
                let w = &bcol[n - k] * &ctx.q_pow(((n - k) * k) as i64);
                sum = &sum + &(&w * ik);
            }
            &lead - &(a * &sum)
        })
        .collect();
    ExpansionResult { coeffs, method: Method::BZero }
}

/// Expansion for `b = aq`, i.e. `F/(1-az) = sum_n c_n z^n/(1-azq^n)`:
/// `c_0 = F(0)`, `c_n = sum_{k<n} g_{n-k} q^{(n-k)k} [z^n]{(F - F_k)/(1-az)}`.
pub fn coro310_coeffs(ctx: &QCtx, f: &TruncSeries, a: &RatFun) -> ExpansionResult {
    let n_max = f.order();
    let g = gn_polynomials(ctx, n_max);
    let a_pows: Vec<RatFun> = (0..=n_max as i64).map(|e| a.pow(e).expect("power")).collect();
    // [z^n]{(F - F_k)/(1-az)} = sum_{j=k+1}^{n} f_j a^{n-j}
    let tail = |k: usize, n: usize| -> RatFun {
        let mut acc = ctx.zero();
        for j in (k + 1)..=n {
            acc = &acc + &(&f.coeff(j) * &a_pows[n - j]);
        }
        acc
    };
    let mut coeffs = vec![f.coeff(0)];
    for n in 1..=n_max {
        let mut acc = ctx.zero();
        for k in 0..n {
            let w = &g[n - k - 1] * &ctx.q_pow(((n - k) * k) as i64);
            acc = &acc + &(&w * &tail(k, n));
        }
        coeffs.push(acc);
    }
    ExpansionResult { coeffs, method: Method::BEqAq }
}

/// Polynomial case `F = (1-az) prod_{i=1}^{m} (1 - t_i z)` of the `b = aq`
/// expansion, with the inner sum bounded by `min(m, n-1)`.
pub fn polynomial_f_coeffs(ctx: &QCtx, ts: &[RatFun], a: &RatFun, order: usize) -> ExpansionResult {
    let m = ts.len();
    let g = gn_polynomials(ctx, order);
    let mut prod_t = TruncSeries::one(ctx.table(), order);
    for t in ts {
        prod_t.mul_binomial(t, 1);
    }
    let mut f = prod_t.clone();
    f.mul_binomial(a, 1);
    let mut coeffs = vec![ctx.one()];
    for n in 1..=order {
        let mut acc = ctx.zero();
        for k in 0..=m.min(n - 1) {
            // [z^n]{prod(1 - t_i z) - F_k/(1-az)}
            let fk = f.truncate(k).truncate(order);
            let mut geo = fk.clone();
            geo.div_binomial(a, 1);
            let x = &prod_t.coeff(n) - &geo.coeff(n);
            let w = &g[n - k - 1] * &ctx.q_pow(((n - k) * k) as i64);
            acc = &acc + &(&w * &x);
        }
        coeffs.push(acc);
    }
    ExpansionResult { coeffs, method: Method::PolynomialF }
}

/// Right-hand side of the finite generating function
/// `sum_k B_{n,k} y^k = (b/y;q)_{n-1}/(a/y;q)_n y^n
///     - a sum_{k<n} B_{n-k,1} q^{(n-k)k} (b/y;q)_k/(a/y;q)_{k+1} y^k`.
pub fn finite_gf_rhs(ctx: &QCtx, n: usize, a: &RatFun, b: &RatFun, bcol: &[RatFun], y: &RatFun) -> Result<RatFun> {
    let by = b / y;
    let ay = a / y;
    let lead = &(&param_pochhammer(ctx, &by, n as i64 - 1)? * &param_pochhammer_inv(ctx, &ay, n as i64)?)
        * &y.pow(n as i64)?;
    let mut sum = ctx.zero();
    for k in 0..n {
        if bcol[n - k].is_zero() {
            continue;
        }
        let ratio = &param_pochhammer(ctx, &by, k as i64)? * &param_pochhammer_inv(ctx, &ay, k as i64 + 1)?;
        let w = &(&bcol[n - k] * &ctx.q_pow(((n - k) * k) as i64)) * &ratio;
        sum = &sum + &(&w * &y.pow(k as i64)?);
    }
    Ok(&lead - &(a * &sum))
}

/// `S_n(y) = prod_{k<n} (y - a q^k) * finite_gf_rhs(n)`.
pub fn sn_polynomial(ctx: &QCtx, n: usize, a: &RatFun, b: &RatFun, bcol: &[RatFun], y: &RatFun) -> Result<RatFun> {
    let mut prod = ctx.one();
    for k in 0..n {
        prod = &prod * &(y - &(a * &ctx.q_pow(k as i64)));
    }
    Ok(&prod * &finite_gf_rhs(ctx, n, a, b, bcol, y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{parse_ratfun, SymbolTable};

    fn ctx() -> QCtx {
        QCtx::new(&SymbolTable::standard(&["y", "t"]).unwrap()).unwrap()
    }

    fn p(c: &QCtx, s: &str) -> RatFun {
        parse_ratfun(s, c.table()).unwrap()
    }

    #[test]
    fn base_matrix_entries() {
        let c = ctx();
        let m = base_matrix(&c, &p(&c, "a"), &p(&c, "b"), 4);
        for k in 0..=4 {
            assert!(m.get(k, k).is_one());
        }
        assert_eq!(m.get(2, 1), p(&c, "b - a"));
        assert_eq!(m.get(3, 2), p(&c, "(1+q)*(b-a)"));
        assert!(m.get(1, 3).is_zero());
    }

    #[test]
    fn inverse_entries() {
        let c = ctx();
        let id = LTMatrix::identity(&c, 3);
        assert_eq!(lt_inverse(&id).unwrap().first_non_identity(), None);
        let b = lt_inverse(&base_matrix(&c, &p(&c, "a"), &p(&c, "b"), 4)).unwrap();
        assert_eq!(b.get(2, 1), p(&c, "a - b"));
        assert_eq!(b.get(3, 2), p(&c, "(1+q)*(a-b)"));
        for n in 1..=4 {
            assert!(b.get(n, 0).is_zero());
        }
    }

    #[test]
    fn singular_diagonal_rejected() {
        let c = ctx();
        let m = LTMatrix::from_rows(vec![vec![c.one()], vec![c.zero(), c.int(2)]]);
        assert_eq!(lt_inverse(&m).unwrap_err(), Error::Singular(1));
    }

    #[test]
    fn peeled_column() {
        let c = ctx();
        let (a, b) = (p(&c, "a"), p(&c, "b"));
        let col = b_column1(&c, &a, &b, 5);
        assert!(col[1].is_one());
        assert_eq!(col[2], p(&c, "a - b"));
        let inv = lt_inverse(&base_matrix(&c, &a, &b, 5)).unwrap();
        for n in 1..=5 {
            assert_eq!(col[n], inv.get(n, 1));
        }
        let same = b_column1(&c, &a, &a, 5);
        assert!(same[2..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn trivial_expansions() {
        let c = ctx();
        let (a, b) = (p(&c, "a"), p(&c, "b"));
        let one = TruncSeries::one(c.table(), 5);
        for r in [expand_triangular(&c, &one, &a, &b), expand_theorem15(&c, &one, &a, &b)] {
            assert!(r.coeffs[0].is_one());
            assert!(r.coeffs[1..].iter().all(|x| x.is_zero()), "{:?}", r.method);
        }
        let e3 = base_element(&c, 3, &a, &b, 5).unwrap();
        let r = expand_triangular(&c, &e3, &a, &b);
        for (n, x) in r.coeffs.iter().enumerate() {
            assert_eq!(x.is_one(), n == 3);
            assert_eq!(x.is_zero(), n != 3);
        }
    }

    #[test]
    fn entrywise_closed_form() {
        let c = ctx();
        let (a, b) = (p(&c, "a"), p(&c, "b"));
        let bcol = b_column1(&c, &a, &b, 5);
        for n in 0..=5 {
            assert!(matrix_entry_thm25(&c, n, n, &a, &b, &bcol).is_one());
        }
        assert_eq!(matrix_entry_thm25(&c, 2, 1, &a, &b, &bcol), p(&c, "a - b"));
        for n in 1..=5 {
            assert!(matrix_entry_thm25(&c, n, 0, &a, &b, &bcol).is_zero());
        }
        let inv = lt_inverse(&base_matrix(&c, &a, &b, 5)).unwrap();
        assert_eq!(thm25_matrix(&c, &a, &b, 5).first_difference(&inv), None);
    }

    #[test]
    fn gn_values() {
        let c = ctx();
        let g = gn_polynomials(&c, 4);
        assert!(g[0].is_one());
        assert_eq!(g[1], p(&c, "1 - q"));
        assert_eq!(g[2], p(&c, "1 - 2*q^2 + q^3"));
    }

    #[test]
    fn carlitz_trivial() {
        let c = ctx();
        let one = TruncSeries::one(c.table(), 4);
        let r = carlitz_coeffs(&c, &one, &p(&c, "b"));
        assert!(r.coeffs[0].is_one());
        assert!(r.coeffs[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn coro310_trivial() {
        let c = ctx();
        let one = TruncSeries::one(c.table(), 4);
        let r = coro310_coeffs(&c, &one, &p(&c, "a"));
        assert!(r.coeffs[0].is_one());
        assert!(r.coeffs[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn s1_vanishes_at_a() {
        let c = ctx();
        let (a, b, y) = (p(&c, "a"), p(&c, "b"), p(&c, "y"));
        let bcol = b_column1(&c, &a, &b, 3);
        let s1 = sn_polynomial(&c, 1, &a, &b, &bcol, &y).unwrap();
        let ys = c.table().symbol("y").unwrap();
        assert!(s1.substitute(&[(ys, a.clone())]).unwrap().is_zero());
    }

    #[test]
    fn json_layout() {
        let c = ctx();
        let m = base_matrix(&c, &p(&c, "a"), &p(&c, "b"), 2);
        assert_eq!(
            m.to_json().to_string(),
            r#"{"n":2,"entries":[["1"],["0","1"],["0","-a + b","1"]]}"#
        );
    }
}
