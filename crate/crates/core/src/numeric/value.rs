//! Fixed-precision binary floats and complex numbers over them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::ops::SquareRoot;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: usize = 128;

fn to_ibig(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let mag = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// Parses `3`, `-0.25`, `1.5e-3` or `2/7` exactly.
pub fn parse_rational(src: &str) -> Result<BigRational> {
    let s = src.trim();
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: `{src}`") };
    if s.is_empty() {
        return Err(bad("empty number"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigRational = parse_rational(n)?;
        let d: BigRational = parse_rational(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(n / d);
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad("bad exponent"))?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad("no digits"));
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad("not a number"));
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad("not a number"))?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10u8);
    let mut r = BigRational::from_integer(digits);
    if shift >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Ok(if neg { -r } else { r })
}

/// A real number carried at a fixed binary precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigReal(FBig);

impl BigReal {
    pub fn from_rational(r: &BigRational, bits: usize) -> Self {
        let n = FBig::from(to_ibig(r.numer())).with_precision(bits).value();
        let d = FBig::from(to_ibig(r.denom())).with_precision(bits).value();
        BigReal(n / d)
    }

    pub fn from_i64(i: i64, bits: usize) -> Self {
        BigReal(FBig::from(i).with_precision(bits).value())
    }

    pub fn parse(src: &str, bits: usize) -> Result<Self> {
        Ok(Self::from_rational(&parse_rational(src)?, bits))
    }

    pub fn zero(bits: usize) -> Self {
        Self::from_i64(0, bits)
    }

    pub fn one(bits: usize) -> Self {
        Self::from_i64(1, bits)
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    pub fn with_precision(&self, bits: usize) -> Self {
        BigReal(self.0.clone().with_precision(bits).value())
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().is_zero()
    }

    pub fn abs(&self) -> Self {
        if *self.0.repr().significand() < IBig::ZERO {
            -self
        } else {
            self.clone()
        }
    }

    pub fn sqrt(&self) -> Self {
        BigReal(self.0.sqrt())
    }

    pub fn ln(&self) -> Self {
        BigReal(self.0.ln())
    }

    pub fn exp(&self) -> Self {
        BigReal(self.0.exp())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// `2^-k` at the given precision.
    pub fn pow2_neg(k: usize, bits: usize) -> Self {
        BigReal(FBig::from_parts(IBig::ONE, -(k as isize)).with_precision(bits).value())
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let d = self.0.to_decimal().value().with_precision(digits).value();
        let (sig, exp) = (d.repr().significand().clone(), d.repr().exponent());
        let neg = sig < IBig::ZERO;
        let s = if neg { (-sig).to_string() } else { sig.to_string() };
        let s = s.trim_end_matches('0');
        let dropped = d.repr().significand().to_string().trim_start_matches('-').len() - s.len();
        let sci = exp + dropped as isize + s.len() as isize - 1;
        let (head, tail) = s.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{sci}")
        } else {
            format!("{sign}{head}.{tail}e{sci}")
        }
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(40))
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &BigReal) -> BigReal {
                BigReal($tr::$m(&self.0, &rhs.0))
            }
        }
    };
}
real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0.clone())
    }
}

/// A complex number whose parts share one binary precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn real(re: BigReal) -> Self {
        let im = BigReal::zero(re.precision());
        BigComplex { re, im }
    }

    pub fn from_i64(i: i64, bits: usize) -> Self {
        Self::real(BigReal::from_i64(i, bits))
    }

    pub fn from_rational(r: &BigRational, bits: usize) -> Self {
        Self::real(BigReal::from_rational(r, bits))
    }

    pub fn zero(bits: usize) -> Self {
        Self::from_i64(0, bits)
    }

    pub fn one(bits: usize) -> Self {
        Self::from_i64(1, bits)
    }

    pub fn precision(&self) -> usize {
        self.re.precision()
    }

    pub fn with_precision(&self, bits: usize) -> Self {
        BigComplex { re: self.re.with_precision(bits), im: self.im.with_precision(bits) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> BigReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> BigReal {
        if self.im.is_zero() {
            self.re.abs()
        } else {
            self.norm_sqr().sqrt()
        }
    }

    pub fn scale(&self, r: &BigReal) -> Self {
        BigComplex { re: &self.re * r, im: &self.im * r }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(BigComplex { re: &self.re / &n, im: &(-&self.im) / &n })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = BigComplex::one(self.precision());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let neg = self.im < BigReal::zero(self.precision());
        let sign = if neg { '-' } else { '+' };
        write!(f, "{} {} {}i", self.re, sign, self.im.abs())
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return BigComplex::real(&self.re * &rhs.re);
        }
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_forms() {
        let r = |s: &str| parse_rational(s).unwrap();
        assert_eq!(r("0.1"), BigRational::new(1.into(), 10.into()));
        assert_eq!(r("-2.5e-3"), BigRational::new((-1).into(), 400.into()));
        assert_eq!(r("1/3"), BigRational::new(1.into(), 3.into()));
        assert_eq!(r("12"), BigRational::from_integer(12.into()));
        assert_eq!(r(".5"), BigRational::new(1.into(), 2.into()));
        assert!(parse_rational("1x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn arithmetic_at_precision() {
        let third = BigReal::parse("1/3", 128).unwrap();
        assert_eq!(third.precision(), 128);
        let back = &third * &BigReal::from_i64(3, 128);
        let err = (&back - &BigReal::one(128)).abs();
        assert!(err < BigReal::pow2_neg(120, 128));
        let i = BigComplex::new(BigReal::zero(128), BigReal::one(128));
        assert_eq!(&i * &i, BigComplex::from_i64(-1, 128));
        assert_eq!(i.powi(-2).unwrap(), BigComplex::from_i64(-1, 128));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(BigReal::parse("0.25", 64).unwrap().to_decimal_string(10), "2.5e-1");
        assert_eq!(BigReal::parse("-1500", 64).unwrap().to_decimal_string(10), "-1.5e3");
        assert_eq!(BigReal::zero(64).to_decimal_string(10), "0");
    }
}
