//! Fast rejection of non-divisibility by reduction to one variable modulo
//! the prime `2^61 - 1`.
//!
//! All variables but one are fixed at deterministic points; if `d` divides
//! `n` then the specialised `d` divides the specialised `n` whenever the
//! leading coefficient of `d` survives. A nonzero univariate remainder
//! therefore proves that `d` does not divide `n`.

use num_bigint::{BigInt, Sign};

use super::poly::MultiPoly;

const P: u64 = (1 << 61) - 1;

fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & P;
    let hi = (x >> 61) as u64;
    let s = lo + (hi & P) + ((x >> 122) as u64);
    let s = (s & P) + (s >> 61);
    if s >= P {
        s - P
    } else {
        s
    }
}

fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn of_bigint(c: &BigInt) -> u64 {
    // 2^64 = 8 (mod 2^61 - 1)
    let mut acc = 0u64;
    for d in c.iter_u64_digits().rev() {
        acc = add(mul(acc, 8), reduce(d as u128));
    }
    if c.sign() == Sign::Minus {
        sub(0, acc)
    } else {
        acc
    }
}

/// Fixed evaluation point for variable `i`.
fn point(i: usize) -> u64 {
    let mut z = (i as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    z % (P - 2) + 2
}

/// Coefficients (low to high) in variable `x` after fixing the others.
fn specialise(p: &MultiPoly, x: usize, nvars: usize) -> Vec<u64> {
    let mut maxe = vec![0usize; nvars];
    for (m, _) in p.terms() {
        for (i, e) in maxe.iter_mut().enumerate() {
            *e = (*e).max(m.exp(i) as usize);
        }
    }
    let powers: Vec<Vec<u64>> = (0..nvars)
        .map(|i| {
            let base = point(i);
            let mut v = Vec::with_capacity(maxe[i] + 1);
            let mut acc = 1u64;
            for _ in 0..=maxe[i] {
                v.push(acc);
                acc = mul(acc, base);
            }
            v
        })
        .collect();
    let mut out = vec![0u64; maxe[x] + 1];
    for (m, c) in p.terms() {
        let mut v = of_bigint(c);
        for (i, pw) in powers.iter().enumerate() {
            let e = m.exp(i) as usize;
            if i != x && e > 0 {
                v = mul(v, pw[e]);
            }
        }
        let k = m.exp(x) as usize;
        out[k] = add(out[k], v);
    }
    out
}

/// `false` only when `d` certainly does not divide `n`.
#[cfg(test)]
fn may_divide(n: &MultiPoly, d: &MultiPoly) -> bool {
    Filter::default().may_divide(n, d)
}

/// Divisibility filter that reuses the specialisations of one numerator
/// across many candidate divisors. Call `reset` when the numerator changes.
#[derive(Default)]
pub(crate) struct Filter {
    cache: Vec<Option<Vec<u64>>>,
}

impl Filter {
    pub(crate) fn reset(&mut self) {
        self.cache.clear();
    }

    pub(crate) fn may_divide(&mut self, n: &MultiPoly, d: &MultiPoly) -> bool {
        let nvars = n.table().len();
        let Some(x) =
            (0..nvars).max_by_key(|&i| d.terms().iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0))
        else {
            return true;
        };
        let dv = specialise(d, x, nvars);
        let dd = dv.len() - 1;
        if dd == 0 || dv[dd] == 0 {
            return true;
        }
        if self.cache.len() < nvars {
            self.cache.resize(nvars, None);
        }
        let mut r = self.cache[x].get_or_insert_with(|| specialise(n, x, nvars)).clone();
        if r.len() <= dd {
            return r.iter().all(|&c| c == 0);
        }
        let lc_inv = inv(dv[dd]);
        for top in (dd..r.len()).rev() {
            let f = mul(r[top], lc_inv);
            if f == 0 {
                continue;
            }
            let shift = top - dd;
            for (j, &dc) in dv.iter().enumerate() {
                r[shift + j] = sub(r[shift + j], mul(f, dc));
            }
        }
        r[..dd].iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{parse_ratfun, SymbolTable};

    fn poly(s: &str) -> MultiPoly {
        let t = SymbolTable::standard(&["A"]).unwrap();
        parse_ratfun(s, &t).unwrap().numer().clone()
    }

    #[test]
    fn filter_is_sound() {
        let f = poly("1 - a*q^2");
        let g = poly("(1 - a*q^2)*(b - A*q)^2 + 0");
        assert!(may_divide(&g, &f));
        assert!(!may_divide(&poly("(1 - a*q^3)*(b - A*q)^2"), &f));
        assert!(may_divide(&poly("(1+q+q^2)*(1-q)*a"), &poly("1+q+q^2")));
        assert!(!may_divide(&poly("1+q^2"), &poly("1+q")));
    }

    #[test]
    fn bigint_reduction() {
        let big: BigInt = BigInt::from(1u8) << 200;
        let expect = pow(2, 200);
        assert_eq!(of_bigint(&big), expect);
        assert_eq!(of_bigint(&-big), sub(0, expect));
    }
}
