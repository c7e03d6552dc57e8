use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qexpand_core::coeffring::Monomial;
use qexpand_core::{MultiPoly, RatFun, SymbolTable};

fn table() -> Arc<SymbolTable> {
    SymbolTable::standard::<&str>(&[]).unwrap()
}

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u16..4, 0u16..3, 0u16..3), -12i64..=12), 0..=max_terms).prop_map(|terms| {
        let t = table();
        MultiPoly::from_terms(&t, terms.into_iter().map(|((e0, e1, e2), c)| (Monomial::from_exps(&[e0, e1, e2]), BigInt::from(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly_strategy(3).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun_strategy() -> impl Strategy<Value = RatFun> {
    (poly_strategy(3), nonzero_poly()).prop_map(|(n, d)| RatFun::from_parts(n, &d).unwrap())
}

fn nonzero_ratfun() -> impl Strategy<Value = RatFun> {
    (nonzero_poly(), nonzero_poly()).prop_map(|(n, d)| RatFun::from_parts(n, &d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn multipoly_ring_axioms(x in poly_strategy(4), y in poly_strategy(4), z in poly_strategy(4)) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &MultiPoly::one(&table()), x.clone());
    }

    #[test]
    fn exact_division_inverts_product(x in poly_strategy(4), d in nonzero_poly()) {
        let p = &x * &d;
        prop_assert_eq!(p.div_exact(&d), Some(x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ratfun_equality_is_an_equivalence(f in ratfun_strategy(), g in ratfun_strategy(), h in nonzero_ratfun(), k in nonzero_ratfun()) {
        prop_assert!(f.equals(&f));
        prop_assert_eq!(f.equals(&g), g.equals(&f));
        // two rewrites of f that share no intermediate form
        let f1 = &(&f * &h) / &h;
        let f2 = &(&f1 * &k) / &k;
        prop_assert!(f.equals(&f1));
        prop_assert!(f1.equals(&f2));
        prop_assert!(f.equals(&f2));
    }

    #[test]
    fn ratfun_times_inverse_is_one(f in nonzero_ratfun()) {
        let inv = f.inv().unwrap();
        prop_assert!((&f * &inv).is_one());
    }

    #[test]
    fn ratfun_field_axioms(f in ratfun_strategy(), g in ratfun_strategy(), h in ratfun_strategy()) {
        prop_assert!((&(&f + &g) * &h).equals(&(&(&f * &h) + &(&g * &h))));
        prop_assert!((&(&f - &g) + &g).equals(&f));
    }

    #[test]
    fn substitution_is_a_homomorphism(
        f in ratfun_strategy(),
        g in ratfun_strategy(),
        num in poly_strategy(2),
        den in nonzero_poly(),
        c in -6i64..=6,
    ) {
        let t = table();
        let a = t.symbol("a").unwrap();
        // a -> (something in q, b) / den, with `a` itself removed
        let no_a = |p: &MultiPoly| {
            MultiPoly::from_terms(&t, p.terms().iter().map(|(m, c)| {
                let e = m.exps();
                (Monomial::from_exps(&[e[0], 0, e[2]]), c.clone())
            }))
        };
        let den = no_a(&den);
        let den = if den.is_zero() { MultiPoly::one(&t) } else { den };
        let value = &RatFun::from_parts(no_a(&num), &den).unwrap()
            + &RatFun::from_ratio(&t, &BigRational::from_integer(c.into()));
        let s = [(a, value)];
        let (sf, sg) = match (f.substitute(&s), g.substitute(&s)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Ok(()),
        };
        if let Ok(prod) = (&f * &g).substitute(&s) {
            prop_assert!(prod.equals(&(&sf * &sg)));
        }
        if let Ok(sum) = (&f + &g).substitute(&s) {
            prop_assert!(sum.equals(&(&sf + &sg)));
        }
    }
}
