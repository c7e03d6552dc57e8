use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::symbols::{Symbol, SymbolTable};
use crate::error::{Error, Result};

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted in descending graded lexicographic order with no
/// zero coefficients, so structural equality is mathematical equality.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    table: Arc<SymbolTable>,
    terms: Vec<(Monomial, BigInt)>,
}

impl MultiPoly {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        MultiPoly { table: table.clone(), terms: Vec::new() }
    }

    pub fn one(table: &Arc<SymbolTable>) -> Self {
        Self::constant(table, BigInt::one())
    }

    pub fn constant(table: &Arc<SymbolTable>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::ONE, c)] };
        MultiPoly { table: table.clone(), terms }
    }

    pub fn var(table: &Arc<SymbolTable>, s: Symbol) -> Self {
        Self::monomial(table, Monomial::var(s.index(), 1), BigInt::one())
    }

    pub fn monomial(table: &Arc<SymbolTable>, m: Monomial, c: BigInt) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiPoly { table: table.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(table: &Arc<SymbolTable>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(table, acc)
    }

    fn from_map(table: &Arc<SymbolTable>, acc: FxHashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        MultiPoly { table: table.clone(), terms }
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        &self.table
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Highest exponent of symbol `s`.
    pub fn degree_in(&self, s: Symbol) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(s.index())).max().unwrap_or(0)
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return Monomial::ONE };
        it.fold(*first, |g, (m, _)| g.gcd(m))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        SymbolTable::check_same(&self.table, &other.table)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        SymbolTable::check_same(&self.table, &other.table)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        SymbolTable::check_same(&self.table, &other.table)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() || j < y.len() {
            let ord = match (x.get(i), y.get(j)) {
                (Some(a), Some(b)) => b.0.cmp(&a.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&y[j].1 } else { y[j].1.clone() };
                    out.push((y[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly { table: self.table.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.table);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (m0, c0) = &single.terms[0];
            // multiplying by one term preserves the order
            let terms = many.terms.iter().map(|(m, c)| (m.mul(m0), c * c0)).collect();
            return MultiPoly { table: self.table.clone(), terms };
        }
        let mut acc: FxHashMap<Monomial, BigInt> =
            FxHashMap::with_capacity_and_hasher(self.terms.len() * other.terms.len(), Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Self::from_map(&self.table, acc)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        MultiPoly { table: self.table.clone(), terms }
    }

    /// Exact division by an integer known to divide every coefficient.
    pub fn div_exact_int(&self, c: &BigInt) -> Self {
        let terms = self.terms.iter().map(|(m, x)| (*m, x / c)).collect();
        MultiPoly { table: self.table.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        MultiPoly { table: self.table.clone(), terms }
    }

    /// Divides every term by a monomial known to divide all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (m.div_into(t), c.clone())).collect();
        MultiPoly { table: self.table.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d` over the integers, or `None` when `d` does not
    /// divide `self`. With a single divisor the division algorithm leaves a
    /// zero remainder exactly when the division is exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(&self.table));
        }
        let (dm, dc) = d.terms[0].clone();
        if d.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                let (qc, rc) = c.div_rem(&dc);
                if !rc.is_zero() {
                    return None;
                }
                terms.push((dm.div_into(m), qc));
            }
            return Some(MultiPoly { table: self.table.clone(), terms });
        }
        if self.total_degree() < d.total_degree() {
            return None;
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if !dm.divides(&m) {
                return None;
            }
            let (qc, rc) = c.div_rem(&dc);
            if !rc.is_zero() {
                return None;
            }
            let qm = dm.div_into(&m);
            for (tm, tc) in &d.terms {
                let key = tm.mul(&qm);
                let prod = tc * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= prod;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MultiPoly { table: self.table.clone(), terms: quot })
    }

    /// Evaluates at exact rational values, one per declared symbol.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut sum = BigRational::zero();
        let mut powers: Vec<Vec<BigRational>> = point.iter().map(|v| vec![BigRational::one(), v.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = pw.last().unwrap() * &pw[1];
                    pw.push(next);
                }
                t *= &pw[e];
            }
            sum += t;
        }
        sum
    }

    /// Re-expresses the polynomial over a table that contains every symbol
    /// of the current one.
    pub fn embed(&self, table: &Arc<SymbolTable>) -> Result<Self> {
        let map: Vec<usize> = self
            .table
            .names()
            .iter()
            .map(|n| table.symbol(n).map(|s| s.index()))
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = [0u16; super::symbols::MAX_SYMBOLS];
            for (i, &j) in map.iter().enumerate() {
                e[j] = m.exp(i);
            }
            (Monomial::from_exps(&e[..table.len()]), c.clone())
        });
        Ok(Self::from_terms(table, terms))
    }

    pub(crate) fn same_table(&self, other: &Self) -> Result<()> {
        SymbolTable::check_same(&self.table, &other.table)
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, name) in self.table.names().iter().enumerate() {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

// Operator impls panic on symbol-table mismatch; use the `checked_*`
// methods where tables may differ.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("symbol table mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("symbol table mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("symbol table mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        MultiPoly { table: self.table.clone(), terms }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Error helper used when a caller expects a polynomial to be nonzero.
pub(crate) fn nonzero(p: &MultiPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Arc<SymbolTable>, MultiPoly, MultiPoly, MultiPoly) {
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        let q = MultiPoly::var(&t, t.symbol("q").unwrap());
        let a = MultiPoly::var(&t, t.symbol("a").unwrap());
        let b = MultiPoly::var(&t, t.symbol("b").unwrap());
        (t, q, a, b)
    }

    #[test]
    fn difference_of_squares() {
        let (t, q, _, _) = setup();
        let one = MultiPoly::one(&t);
        let p = &(&one + &q) * &(&one - &q);
        assert_eq!(p, &one - &q.pow(2));
    }

    #[test]
    fn add_and_annihilate() {
        let (t, q, a, b) = setup();
        assert_eq!((&a + &b).to_string(), "a + b");
        assert!((&(&a - &q) * &MultiPoly::zero(&t)).is_zero());
        assert!((&(&a - &b) + &(&b - &a)).is_zero());
    }

    #[test]
    fn display_uses_grlex() {
        let (t, q, a, _) = setup();
        let p = &(&q.pow(2) - &a.scale(&BigInt::from(3))) + &MultiPoly::one(&t);
        assert_eq!(p.to_string(), "q^2 - 3*a + 1");
        assert_eq!((-&q).to_string(), "-q");
    }

    #[test]
    fn exact_division() {
        let (t, q, a, b) = setup();
        let one = MultiPoly::one(&t);
        let f = &one - &(&a * &q);
        let g = &b + &q.pow(3);
        let p = &f * &g;
        assert_eq!(p.div_exact(&f), Some(g.clone()));
        assert_eq!(p.div_exact(&g), Some(f.clone()));
        assert_eq!(g.div_exact(&f), None);
        assert_eq!((&one + &q).div_exact(&q.scale(&BigInt::from(2))), None);
    }

    #[test]
    fn mismatched_tables_error() {
        let (_, q, _, _) = setup();
        let t2 = SymbolTable::new(&["x"]).unwrap();
        let x = MultiPoly::var(&t2, t2.symbol("x").unwrap());
        assert!(matches!(q.checked_add(&x), Err(Error::SymbolMismatch { .. })));
        assert!(q.checked_mul(&x).is_err());
    }

    #[test]
    fn embed_reorders() {
        let (_, q, a, _) = setup();
        let t2 = SymbolTable::new(&["a", "t", "q", "b"]).unwrap();
        let p = (&q * &a).embed(&t2).unwrap();
        assert_eq!(p.to_string(), "a*q");
    }
}
