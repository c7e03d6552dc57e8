//! Coogan–Ono, its companion with `(z;q)_{n+1}`, and Rogers–Fine.

use crate::coeffring::{RatFun, SymbolTable};
use crate::error::Result;
use crate::series::{
    base_element, div_zmono_pochhammer, mul_zmono_pochhammer, partial_theta, QCtx, TruncSeries, ZMono,
};

use super::{symbolic_params, Built, IdentityReport, Sides};

fn q_only() -> Result<QCtx> {
    QCtx::new(&SymbolTable::new(&["q"])?)
}

/// `sum_n z^n (z;q)_n/(-z;q)_{n+1} = sum_n (-1)^n z^{2n} q^{n^2}`.
/// Every Pochhammer symbol here is a series in `z`.
pub fn coogan_ono_sides(ctx: &QCtx, order: usize) -> Result<Sides> {
    let one = ctx.one();
    let neg = ctx.int(-1);
    let mut lhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut t = base_element(ctx, n, &one, &neg, order)?;
        t.div_binomial(&-ctx.q_pow(n as i64), 1);
        lhs.push(t);
    }
    Ok(Sides::new(lhs, vec![partial_theta(ctx, 2, ctx.q(), 2, order)]))
}

/// `sum_n z^n (z;q)_{n+1}/(-zq;q)_n = 1 + 2 sum_{n>=1} (-1)^n z^{2n} q^{n^2}`.
pub fn lemma13_sides(ctx: &QCtx, order: usize) -> Result<Sides> {
    let one = ctx.one();
    let negq = -ctx.q().clone();
    let mut lhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut t = base_element(ctx, n, &one, &negq, order)?;
        t.mul_binomial(&ctx.q_pow(n as i64), 1);
        lhs.push(t);
    }
    let theta = partial_theta(ctx, 2, ctx.q(), 2, order);
    let tail = (&theta - &TruncSeries::one(ctx.table(), order)).scalar_mul(&ctx.int(2));
    Ok(Sides::new(lhs, vec![TruncSeries::one(ctx.table(), order), tail]))
}

/// Parameters of Rogers–Fine, each of the form `c z^d` so that
/// specialisations tying `a` or `b` to `z` stay exact.
#[derive(Clone, Debug)]
pub struct RogersFineParams {
    /// `aq`
    pub aq: ZMono,
    /// `bq`
    pub bq: ZMono,
    /// `azq/b`
    pub azq_over_b: ZMono,
    /// `bz`
    pub bz: ZMono,
    /// `az`
    pub az: ZMono,
}

impl RogersFineParams {
    pub fn symbolic(ctx: &QCtx, a: &RatFun, b: &RatFun) -> Self {
        let q = ctx.q();
        RogersFineParams {
            aq: ZMono::constant(a * q),
            bq: ZMono::constant(b * q),
            azq_over_b: ZMono::linear(&(a * q) / b),
            bz: ZMono::linear(b.clone()),
            az: ZMono::linear(a.clone()),
        }
    }

    /// `aq = z = -b`.
    pub fn at_aq_z_negb(ctx: &QCtx) -> Self {
        RogersFineParams {
            aq: ZMono::linear(ctx.one()),
            bq: ZMono::linear(-ctx.q().clone()),
            azq_over_b: ZMono::linear(ctx.int(-1)),
            bz: ZMono::new(ctx.int(-1), 2),
            az: ZMono::new(ctx.q_pow(-1), 2),
        }
    }

    /// `a = z = -b`.
    pub fn at_a_z_negb(ctx: &QCtx) -> Self {
        RogersFineParams {
            aq: ZMono::linear(ctx.q().clone()),
            bq: ZMono::linear(-ctx.q().clone()),
            azq_over_b: ZMono::linear(-ctx.q().clone()),
            bz: ZMono::new(ctx.int(-1), 2),
            az: ZMono::new(ctx.one(), 2),
        }
    }
}

/// `(1-z) sum_n z^n (aq;q)_n/(bq;q)_n
///   = sum_n (1 - azq^{2n+1}) (bz)^n q^{n^2} (aq, azq/b;q)_n/(bq, zq;q)_n`.
/// `(zq;q)_n` and `(azq/b;q)_n` are always series in `z`; `(aq;q)_n` and
/// `(bq;q)_n` are series exactly when the parameters carry `z`.
pub fn rogers_fine_sides(ctx: &QCtx, p: &RogersFineParams, order: usize) -> Result<Sides> {
    let zq = ZMono::linear(ctx.q().clone());
    let mut lhs = Vec::with_capacity(order + 1);
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut t = TruncSeries::monomial(ctx.one(), n, order);
        t = mul_zmono_pochhammer(ctx, &t, &p.aq, n);
        t = div_zmono_pochhammer(ctx, &t, &p.bq, n)?;
        t.mul_binomial(&ctx.one(), 1);
        lhs.push(t);

        let n64 = n as i64;
        let mut r = p.bz.pow(n)?.scale(&ctx.q_pow(n64 * n64)).series(order);
        r.mul_binomial(&(&p.az.coeff * &ctx.q_pow(2 * n64 + 1)), p.az.zpow);
        r = mul_zmono_pochhammer(ctx, &r, &p.aq, n);
        r = mul_zmono_pochhammer(ctx, &r, &p.azq_over_b, n);
        r = div_zmono_pochhammer(ctx, &r, &p.bq, n)?;
        r = div_zmono_pochhammer(ctx, &r, &zq, n)?;
        rhs.push(r);
    }
    Ok(Sides::new(lhs, rhs))
}

pub(super) fn coogan_ono_built(order: usize) -> Result<Built> {
    let ctx = q_only()?;
    let sides = coogan_ono_sides(&ctx, order)?;
    Ok(Built { ctx, parameters: Vec::new(), sides })
}

pub(super) fn lemma13_built(order: usize) -> Result<Built> {
    let ctx = q_only()?;
    let sides = lemma13_sides(&ctx, order)?;
    Ok(Built { ctx, parameters: Vec::new(), sides })
}

pub(super) fn rogers_fine_built(order: usize) -> Result<Built> {
    let ctx = QCtx::new(&SymbolTable::standard::<&str>(&[])?)?;
    let p = RogersFineParams::symbolic(&ctx, &ctx.sym("a")?, &ctx.sym("b")?);
    let sides = rogers_fine_sides(&ctx, &p, order)?;
    Ok(Built { ctx, parameters: symbolic_params(&["a", "b"]), sides })
}

pub(super) fn rf_coogan_ono_built(order: usize) -> Result<Built> {
    let ctx = q_only()?;
    let sides = rogers_fine_sides(&ctx, &RogersFineParams::at_aq_z_negb(&ctx), order)?;
    let params = vec![("a".to_string(), "z/q".to_string()), ("b".to_string(), "-z".to_string())];
    Ok(Built { ctx, parameters: params, sides })
}

pub(super) fn rf_lemma13_built(order: usize) -> Result<Built> {
    let ctx = q_only()?;
    let sides = rogers_fine_sides(&ctx, &RogersFineParams::at_a_z_negb(&ctx), order)?;
    let params = vec![("a".to_string(), "z".to_string()), ("b".to_string(), "-z".to_string())];
    Ok(Built { ctx, parameters: params, sides })
}

pub fn check_coogan_ono(order: usize) -> Result<IdentityReport> {
    Ok(coogan_ono_built(order)?.report("coogan_ono", order))
}

pub fn check_lemma13(order: usize) -> Result<IdentityReport> {
    Ok(lemma13_built(order)?.report("lemma13", order))
}

pub fn check_rogers_fine(order: usize) -> Result<IdentityReport> {
    Ok(rogers_fine_built(order)?.report("rogers_fine", order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coogan_ono_low_coefficients() {
        let ctx = q_only().unwrap();
        let s = coogan_ono_sides(&ctx, 6).unwrap();
        let (l, r) = (s.lhs_sum(), s.rhs_sum());
        assert!(l.coeff(1).is_zero() && r.coeff(1).is_zero());
        assert_eq!(l.coeff(2), -ctx.q().clone());
        assert_eq!(r.coeff(2), -ctx.q().clone());
        assert!(check_coogan_ono(12).unwrap().passed);
    }

    #[test]
    fn lemma13_low_coefficients() {
        let ctx = q_only().unwrap();
        let s = lemma13_sides(&ctx, 6).unwrap();
        let (l, r) = (s.lhs_sum(), s.rhs_sum());
        assert!(l.coeff(0).is_one() && r.coeff(0).is_one());
        let m2q = ctx.q().clone() * ctx.int(-2);
        assert_eq!(l.coeff(2), m2q);
        assert_eq!(r.coeff(2), m2q);
        assert!(check_lemma13(12).unwrap().passed);
    }

    #[test]
    fn rogers_fine_symbolic() {
        assert!(check_rogers_fine(6).unwrap().passed);
    }

    #[test]
    fn specialisations_match_their_sources() {
        let ctx = q_only().unwrap();
        let n = 10;
        let mut one_minus_z2 = TruncSeries::one(ctx.table(), n);
        one_minus_z2.mul_binomial(&ctx.one(), 2);

        let rf = rogers_fine_sides(&ctx, &RogersFineParams::at_aq_z_negb(&ctx), n).unwrap();
        let co = coogan_ono_sides(&ctx, n).unwrap();
        assert_eq!(rf.lhs_sum().first_difference(&(&one_minus_z2 * &co.lhs_sum())), None);
        assert_eq!(rf.rhs_sum().first_difference(&(&one_minus_z2 * &co.rhs_sum())), None);

        let rf = rogers_fine_sides(&ctx, &RogersFineParams::at_a_z_negb(&ctx), n).unwrap();
        let l13 = lemma13_sides(&ctx, n).unwrap();
        assert_eq!(rf.lhs_sum().first_difference(&l13.lhs_sum()), None);
        assert_eq!(rf.rhs_sum().first_difference(&l13.rhs_sum()), None);
    }
}
