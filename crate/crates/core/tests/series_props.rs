use num_rational::BigRational;
use proptest::prelude::*;
use qexpand_core::series::{base_element, pochhammer_finite, pochhammer_infinite, QCtx, TruncSeries};
use qexpand_core::{RatFun, SymbolTable};

fn ctx() -> QCtx {
    QCtx::new(&SymbolTable::standard::<&str>(&[]).unwrap()).unwrap()
}

/// `r * s * q^j` with `s` one of `1, a, b`.
fn param(ctx: &QCtx, num: i64, den: i64, sym: usize, j: i64) -> RatFun {
    let r = RatFun::from_ratio(ctx.table(), &BigRational::new(num.into(), den.into()));
    let s = match sym {
        0 => ctx.one(),
        1 => ctx.sym("a").unwrap(),
        _ => ctx.sym("b").unwrap(),
    };
    &(&r * &s) * &ctx.q_pow(j)
}

fn param_strategy() -> impl Strategy<Value = (i64, i64, usize, i64)> {
    ((-5i64..=5).prop_filter("nonzero", |n| *n != 0), 1i64..=4, 0usize..3, -2i64..=2)
}

fn rational_series(order: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=9), order + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn finite_pochhammer_splits(p in param_strategy(), n in -4i64..=6, m in -4i64..=6, order in 0usize..7) {
        let ctx = ctx();
        let c = param(&ctx, p.0, p.1, p.2, p.3);
        let shifted = &c * &ctx.q_pow(n);
        let lhs = pochhammer_finite(&ctx, &c, n, order).checked_mul(&pochhammer_finite(&ctx, &shifted, m, order)).unwrap();
        let rhs = pochhammer_finite(&ctx, &c, n + m, order);
        prop_assert_eq!(lhs.first_difference(&rhs), None);
    }

    #[test]
    fn infinite_pochhammer_quotient(p in param_strategy(), n in 0i64..=6, order in 0usize..8) {
        let ctx = ctx();
        let c = param(&ctx, p.0, p.1, p.2, p.3);
        let shifted = &c * &ctx.q_pow(n);
        let rhs = pochhammer_finite(&ctx, &c, n, order).checked_mul(&pochhammer_infinite(&ctx, &shifted, order)).unwrap();
        prop_assert_eq!(pochhammer_infinite(&ctx, &c, order).first_difference(&rhs), None);
    }

    #[test]
    fn inverse_round_trip(coeffs in rational_series(8), extra in param_strategy()) {
        let ctx = ctx();
        prop_assume!(coeffs[0].0 != 0);
        let mut cs: Vec<RatFun> = coeffs
            .iter()
            .map(|(n, d)| RatFun::from_ratio(ctx.table(), &BigRational::new((*n).into(), (*d).into())))
            .collect();
        cs[1] = &cs[1] + &param(&ctx, extra.0, extra.1, extra.2, extra.3);
        let s = TruncSeries::from_coeffs(cs);
        let inv = s.invert().unwrap();
        let one = TruncSeries::one(ctx.table(), s.order());
        prop_assert_eq!(s.checked_mul(&inv).unwrap().first_difference(&one), None);
    }

    #[test]
    fn base_element_starts_at_z_n(n in 0usize..7, extra in 0usize..4, pa in param_strategy(), pb in param_strategy()) {
        let ctx = ctx();
        let a = param(&ctx, pa.0, pa.1, pa.2, pa.3);
        let b = param(&ctx, pb.0, pb.1, pb.2, pb.3);
        let order = n + extra;
        let e = base_element(&ctx, n, &a, &b, order).unwrap();
        for m in 0..n {
            prop_assert!(e.coeff(m).is_zero());
        }
        prop_assert!(e.coeff(n).is_one());
    }
}
