use num_rational::BigRational;
use proptest::prelude::*;
use qexpand_core::inversion::{
    b_column1, base_matrix, carlitz_coeffs, expand_theorem15, expand_triangular, lt_inverse, reconstruct, thm25_matrix,
};
use qexpand_core::series::{QCtx, TruncSeries};
use qexpand_core::{RatFun, SymbolTable};

fn ctx() -> QCtx {
    QCtx::new(&SymbolTable::standard::<&str>(&[]).unwrap()).unwrap()
}

fn rat(ctx: &QCtx, n: i64, d: i64) -> RatFun {
    RatFun::from_ratio(ctx.table(), &BigRational::new(n.into(), d.into()))
}

fn series(ctx: &QCtx, coeffs: &[(i64, i64)]) -> TruncSeries {
    TruncSeries::from_coeffs(coeffs.iter().map(|(n, d)| rat(ctx, *n, *d)).collect())
}

/// `a` and `b` as a symbol or a small rational times a power of `q`.
fn param(ctx: &QCtx, choice: (bool, i64, i64, i64), name: &str) -> RatFun {
    let (symbolic, n, d, j) = choice;
    if symbolic {
        ctx.sym(name).unwrap()
    } else {
        &rat(ctx, n, d) * &ctx.q_pow(j)
    }
}

fn param_strategy() -> impl Strategy<Value = (bool, i64, i64, i64)> {
    (any::<bool>(), (-4i64..=4).prop_filter("nonzero", |n| *n != 0), 1i64..=3, 0i64..=2)
}

fn coeff_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    (0usize..7).prop_flat_map(|n| prop::collection::vec((-9i64..=9, 1i64..=9), n + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coefficient_routes_agree(f in coeff_strategy(), pa in param_strategy(), pb in param_strategy()) {
        let ctx = ctx();
        let (a, b) = (param(&ctx, pa, "a"), param(&ctx, pb, "b"));
        prop_assume!(!(&a - &b).is_zero());
        let f = series(&ctx, &f);
        let tri = expand_triangular(&ctx, &f, &a, &b);
        let thm = expand_theorem15(&ctx, &f, &a, &b);
        prop_assert_eq!(tri.first_difference(&thm), None);
        let back = reconstruct(&ctx, &tri.coeffs, &a, &b, f.order());
        prop_assert_eq!(back.first_difference(&f), None);
    }

    #[test]
    fn inverse_pair_and_entry_formula(order in 0usize..7, pa in param_strategy(), pb in param_strategy()) {
        let ctx = ctx();
        let (a, b) = (param(&ctx, pa, "a"), param(&ctx, pb, "b"));
        let m = base_matrix(&ctx, &a, &b, order);
        let inv = lt_inverse(&m).unwrap();
        prop_assert_eq!(m.mul(&inv).first_non_identity(), None);
        prop_assert_eq!(inv.mul(&m).first_non_identity(), None);
        prop_assert_eq!(thm25_matrix(&ctx, &a, &b, order).first_difference(&inv), None);
        let col = b_column1(&ctx, &a, &b, order);
        for n in 1..=order {
            prop_assert!(col[n].equals(&inv.get(n, 1)));
        }
    }

    #[test]
    fn carlitz_matches_triangular(f in coeff_strategy(), pb in param_strategy()) {
        let ctx = ctx();
        let b = param(&ctx, pb, "b");
        let f = series(&ctx, &f);
        let direct = carlitz_coeffs(&ctx, &f, &b);
        let tri = expand_triangular(&ctx, &f, &ctx.zero(), &b);
        prop_assert_eq!(direct.first_difference(&tri), None);
    }
}
