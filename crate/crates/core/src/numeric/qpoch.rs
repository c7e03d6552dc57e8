//! Numeric q-Pochhammer symbols.

use crate::error::{Error, Result};

use super::value::{BigComplex, BigReal};

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(i64),
    Infinite,
}

/// `(c;q)_inf` together with how it was truncated.
#[derive(Clone, Debug)]
pub struct InfiniteProduct {
    pub value: BigComplex,
    /// Number of factors multiplied in.
    pub factors: usize,
    /// Bound on `|log|` of the omitted tail.
    pub tail_bound: BigReal,
}

const MAX_FACTORS: usize = 1 << 20;

fn working_bits(c: &BigComplex, q: &BigComplex) -> usize {
    c.precision().max(q.precision())
}

/// `(c;q)_n` for any integer `n`, or `n = inf` when `|q| < 1`.
pub fn qpoch_num(c: &BigComplex, n: PochLen, q: &BigComplex) -> Result<BigComplex> {
    match n {
        PochLen::Infinite => Ok(qpoch_infinite(c, q)?.value),
        PochLen::Finite(n) => qpoch_finite(c, n, q),
    }
}

fn qpoch_finite(c: &BigComplex, n: i64, q: &BigComplex) -> Result<BigComplex> {
    let bits = working_bits(c, q);
    let one = BigComplex::one(bits);
    let mut acc = one.clone();
    if n >= 0 {
        let mut t = c.clone();
        for _ in 0..n {
            acc = &acc * &(&one - &t);
            t = &t * q;
        }
        return Ok(acc);
    }
    // (c;q)_{-m} = 1 / prod_{i=1}^{m} (1 - c q^{-i})
    let qinv = q.inv().map_err(|_| Error::Pole("negative-index Pochhammer with q = 0".into()))?;
    let mut t = c * &qinv;
    for i in 1..=n.unsigned_abs() {
        let f = &one - &t;
        if f.is_zero() {
            return Err(Error::Pole(format!("factor 1 - c q^-{i} vanishes")));
        }
        acc = &acc * &f;
        t = &t * &qinv;
    }
    acc.inv()
}

/// `(c;q)_inf`, truncated once `|c q^i|` drops below `2^-(bits+8)`.
pub fn qpoch_infinite(c: &BigComplex, q: &BigComplex) -> Result<InfiniteProduct> {
    let bits = working_bits(c, q);
    let one_r = BigReal::one(bits);
    let qabs = q.abs();
    if qabs >= one_r {
        return Err(Error::Domain(format!("infinite product needs |q| < 1, got |q| = {qabs}")));
    }
    let one = BigComplex::one(bits);
    let threshold = BigReal::pow2_neg(bits + 8, bits);
    let mut acc = one.clone();
    let mut t = c.clone();
    let mut factors = 0;
    loop {
        let tabs = t.abs();
        if tabs < threshold {
            // sum_{j>=i} |t q^j| / (1 - |t q^j|) <= |t| / ((1 - |q|)(1 - |t|))
            let tail_bound = &tabs / &(&(&one_r - &qabs) * &(&one_r - &tabs));
            return Ok(InfiniteProduct { value: acc, factors, tail_bound });
        }
        if factors >= MAX_FACTORS {
            return Err(Error::Domain(format!("infinite product did not settle within {MAX_FACTORS} factors")));
        }
        acc = &acc * &(&one - &t);
        t = &t * q;
        factors += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigComplex {
        BigComplex::real(BigReal::parse(s, 128).unwrap())
    }

    fn close(x: &BigComplex, y: &BigComplex, bits: usize) -> bool {
        (x - y).abs() < BigReal::pow2_neg(bits, 128)
    }

    #[test]
    fn trivial_cases() {
        let q = r("0.5");
        assert_eq!(qpoch_num(&r("0"), PochLen::Infinite, &q).unwrap(), BigComplex::one(128));
        assert_eq!(qpoch_num(&r("0.3"), PochLen::Finite(0), &q).unwrap(), BigComplex::one(128));
        let two = qpoch_num(&r("0.5"), PochLen::Finite(2), &q).unwrap();
        assert!(close(&two, &r("0.375"), 120));
    }

    #[test]
    fn negative_index() {
        // (c;q)_{-1} = 1/(1 - c/q)
        let v = qpoch_num(&r("0.25"), PochLen::Finite(-1), &r("0.5")).unwrap();
        assert!(close(&v, &r("2"), 120));
        assert!(matches!(qpoch_num(&r("0.5"), PochLen::Finite(-1), &r("0.5")), Err(Error::Pole(_))));
    }

    #[test]
    fn infinite_needs_unit_disc() {
        assert!(matches!(qpoch_num(&r("0.5"), PochLen::Infinite, &r("1")), Err(Error::Domain(_))));
        assert!(qpoch_num(&r("0.5"), PochLen::Finite(3), &r("2")).is_ok());
    }

    #[test]
    fn tail_bound_recorded() {
        let p = qpoch_infinite(&r("0.5"), &r("0.5")).unwrap();
        assert!(p.factors > 128);
        assert!(p.tail_bound < BigReal::pow2_neg(128, 128));
    }
}
