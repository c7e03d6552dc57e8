//! Identities stated coefficient by coefficient: the one-sided form of the
//! `1psi1` coefficient identity and the floor-sum identity.

use crate::coeffring::{RatFun, SymbolTable};
use crate::error::Result;
use crate::inversion::{b_column1, base_matrix, kernel, lt_inverse, product_coeff};
use crate::series::{base_element, QCtx, TruncSeries};

use super::{symbolic_params, Built, IdentityReport, Sides};

fn series_from_fn(order: usize, f: impl Fn(usize) -> RatFun) -> TruncSeries {
    TruncSeries::from_coeffs((0..=order).map(f).collect())
}

/// With `f(z) = sum_k z^k (aqz;q)_k/(bqz;q)_k`, for every `n >= 0`
/// `1 = [z^n]{f (bqz;q)_{n-1}/(aqz;q)_n}
///      - aq sum_{k<n} B_{n-k,1}(aq,bq) q^{(n-k)k} [z^k]{f (bqz;q)_k/(aqz;q)_{k+1}}`.
/// Term 0 of the right side carries the first bracket in its `z^n`
/// coefficient; term `k+1` carries the `k`-th summand for every `n > k`.
pub fn psi_coeff_sides(ctx: &QCtx, a: &RatFun, b: &RatFun, order: usize) -> Result<Sides> {
    let aq = a * ctx.q();
    let bq = b * ctx.q();
    let mut f = TruncSeries::zero(ctx.table(), order);
    for k in 0..=order {
        f = &f + &base_element(ctx, k, &aq, &bq, order)?;
    }
    let bcol = b_column1(ctx, &aq, &bq, order);
    let lead = series_from_fn(order, |n| product_coeff(&f, &kernel(ctx, n as i64 - 1, &aq, &bq, n), n));
    let mut rhs = vec![lead];
    for k in 0..order {
        let inner = product_coeff(&f, &kernel(ctx, k as i64, &aq, &bq, k), k);
        let w = -(&aq * &inner);
        rhs.push(series_from_fn(order, |n| {
            if n <= k {
                ctx.zero()
            } else {
                &(&bcol[n - k] * &ctx.q_pow(((n - k) * k) as i64)) * &w
            }
        }));
    }
    let ones = series_from_fn(order, |_| ctx.one());
    Ok(Sides::new(vec![ones], rhs))
}

/// `sum_{k} B_{n,2k}(1,-q) (-1)^k q^{k^2} + sum_k B_{n,2k+1}(1,-q) (-1)^k q^{k^2} = 1`.
/// Right-hand term `j` is column `j` of `B(1,-q)` weighted by `(-1)^{j/2} q^{(j/2)^2}`.
pub fn floor_sum_sides(ctx: &QCtx, order: usize) -> Result<Sides> {
    let bm = lt_inverse(&base_matrix(ctx, &ctx.one(), &-ctx.q().clone(), order))?;
    let mut rhs = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let k = (j / 2) as i64;
        let sign = if k % 2 == 0 { ctx.one() } else { ctx.int(-1) };
        let w = &sign * &ctx.q_pow(k * k);
        rhs.push(bm.column_series(j).scalar_mul(&w));
    }
    let ones = series_from_fn(order, |_| ctx.one());
    Ok(Sides::new(vec![ones], rhs))
}

pub(super) fn psi_coeff_built(order: usize) -> Result<Built> {
    let ctx = QCtx::new(&SymbolTable::standard::<&str>(&[])?)?;
    let (a, b) = (ctx.sym("a")?, ctx.sym("b")?);
    let sides = psi_coeff_sides(&ctx, &a, &b, order)?;
    Ok(Built { ctx, parameters: symbolic_params(&["a", "b"]), sides })
}

pub(super) fn floor_sum_built(order: usize) -> Result<Built> {
    let ctx = QCtx::new(&SymbolTable::new(&["q"])?)?;
    let sides = floor_sum_sides(&ctx, order)?;
    let params = vec![("a".to_string(), "1".to_string()), ("b".to_string(), "-q".to_string())];
    Ok(Built { ctx, parameters: params, sides })
}

pub fn check_1psi1_coeff(order: usize) -> Result<IdentityReport> {
    Ok(psi_coeff_built(order)?.report("1psi1_coeff", order))
}

pub fn check_floor_sum(order: usize) -> Result<IdentityReport> {
    Ok(floor_sum_built(order)?.report("floor_sum", order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_symbolic() {
        let r = check_1psi1_coeff(6).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn psi_at_a_eq_b_is_geometric() {
        let ctx = QCtx::new(&SymbolTable::standard::<&str>(&[]).unwrap()).unwrap();
        let a = ctx.sym("a").unwrap();
        let s = psi_coeff_sides(&ctx, &a, &a, 6).unwrap();
        let mut geo = TruncSeries::one(ctx.table(), 6);
        geo.div_binomial(&ctx.one(), 1);
        assert_eq!(s.compare(), None);
        let f: TruncSeries = (0..=6).fold(TruncSeries::zero(ctx.table(), 6), |acc, k| {
            &acc + &base_element(&ctx, k, &(&a * ctx.q()), &(&a * ctx.q()), 6).unwrap()
        });
        assert_eq!(f.first_difference(&geo), None);
    }

    #[test]
    fn floor_low_rows() {
        let b = floor_sum_built(12).unwrap();
        assert_eq!(b.sides.compare(), None);
        assert!(b.sides.rhs[0].coeff(0).is_one());
        assert!(b.sides.rhs[1].coeff(1).is_one());
    }
}
