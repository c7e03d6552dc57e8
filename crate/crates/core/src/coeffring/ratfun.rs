use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::monomial::Monomial;
use super::poly::{nonzero, MultiPoly};
use super::symbols::{Symbol, SymbolTable};
use crate::error::{Error, Result};

/// Denominator kept as `scale * prod(factor^mult)`.
///
/// Every factor is primitive, non-constant, has a positive leading
/// coefficient, and no factor divides another one.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Den {
    scale: BigInt,
    factors: Vec<(MultiPoly, u32)>,
}

impl Den {
    fn one() -> Self {
        Den { scale: BigInt::one(), factors: Vec::new() }
    }

    fn is_one(&self) -> bool {
        self.factors.is_empty() && self.scale.is_one()
    }

    fn expand(&self, table: &Arc<SymbolTable>) -> MultiPoly {
        let mut p = MultiPoly::constant(table, self.scale.clone());
        for (f, m) in &self.factors {
            p = &p * &f.pow(*m);
        }
        p
    }

    /// Multiplies the denominator by `p`; returns true when the caller must
    /// negate its numerator to keep the leading coefficient positive.
    fn absorb(&mut self, p: &MultiPoly, mult: u32) -> bool {
        debug_assert!(!p.is_zero());
        let content = p.content();
        let negative = p.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let mut prim = p.div_exact_int(&content);
        if negative {
            prim = -prim;
        }
        self.scale *= content.pow(mult);
        let mono = prim.monomial_content();
        if !mono.is_one() {
            prim = prim.div_monomial(&mono);
            let table = p.table().clone();
            for i in 0..table.len() {
                let e = mono.exp(i);
                if e > 0 {
                    let v = MultiPoly::monomial(&table, Monomial::var(i, 1), BigInt::one());
                    self.insert(v, e as u32 * mult);
                }
            }
        }
        if !prim.is_constant() {
            self.insert(prim, mult);
        }
        negative && mult % 2 == 1
    }

    fn insert(&mut self, f: MultiPoly, mult: u32) {
        let mut f = f;
        'outer: loop {
            for (g, mg) in self.factors.iter_mut() {
                if let Some(h) = trial_div(&f, g) {
                    *mg += mult;
                    f = h;
                    if f.is_constant() {
                        return;
                    }
                    continue 'outer;
                }
            }
            break;
        }
        // split existing factors that `f` divides
        let mut total = mult;
        let mut rest = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            if let Some(h) = trial_div(&self.factors[i].0, &f) {
                let (_, mg) = self.factors.remove(i);
                total += mg;
                rest.push((h, mg));
                continue;
            }
            i += 1;
        }
        self.push_merge(f, total);
        for (h, mg) in rest {
            if !h.is_constant() {
                self.insert(h, mg);
            }
        }
    }

    fn push_merge(&mut self, f: MultiPoly, mult: u32) {
        match self.factors.binary_search_by(|(g, _)| g.cmp(&f)) {
            Ok(i) => self.factors[i].1 += mult,
            Err(i) => self.factors.insert(i, (f, mult)),
        }
    }

    /// A common multiple: union of factors with maximal multiplicity.
    fn union(&self, other: &Den) -> Den {
        let mut out = self.clone();
        out.scale = self.scale.lcm(&other.scale);
        for (g, mg) in &other.factors {
            match out.factors.binary_search_by(|(f, _)| f.cmp(g)) {
                Ok(i) => out.factors[i].1 = out.factors[i].1.max(*mg),
                Err(i) => out.factors.insert(i, (g.clone(), *mg)),
            }
        }
        out
    }

    /// `self / sub` for `sub` dividing `self` factor-wise.
    fn cofactor(&self, sub: &Den, table: &Arc<SymbolTable>) -> MultiPoly {
        let mut p = MultiPoly::constant(table, &self.scale / &sub.scale);
        for (f, m) in &self.factors {
            let ms = sub
                .factors
                .binary_search_by(|(g, _)| g.cmp(f))
                .map(|i| sub.factors[i].1)
                .unwrap_or(0);
            if *m > ms {
                p = &p * &f.pow(m - ms);
            }
        }
        p
    }
}

fn trial_div(num: &MultiPoly, f: &MultiPoly) -> Option<MultiPoly> {
    if may_divide(num, f) {
        num.div_exact(f)
    } else {
        None
    }
}

fn may_divide(num: &MultiPoly, f: &MultiPoly) -> bool {
    may_divide_with(&mut modp::Filter::default(), num, f)
}

fn may_divide_with(filter: &mut modp::Filter, num: &MultiPoly, f: &MultiPoly) -> bool {
    let (Some((nm, nc)), Some((fm, fc))) = (num.leading(), f.leading()) else {
        return false;
    };
    if !fm.divides(nm) || !nc.is_multiple_of(fc) {
        return false;
    }
    let (Some((tm, _)), Some((sm, _))) = (num.terms().last(), f.terms().last()) else {
        return false;
    };
    sm.divides(tm) && filter.may_divide(num, f)
}

/// Quotient of two multivariate polynomials: an element of the coefficient
/// field Q(q, a, b, ...).
///
/// Only integer content, sign, and known denominator factors are cancelled;
/// no multivariate gcd is computed. Equality is decided exactly by
/// cross-multiplication, never by sampling.
#[derive(Clone, Debug)]
pub struct RatFun {
    num: MultiPoly,
    den: Den,
}

impl RatFun {
    pub fn zero(table: &Arc<SymbolTable>) -> Self {
        Self::from_poly(MultiPoly::zero(table))
    }

    pub fn one(table: &Arc<SymbolTable>) -> Self {
        Self::from_poly(MultiPoly::one(table))
    }

    pub fn from_int(table: &Arc<SymbolTable>, c: impl Into<BigInt>) -> Self {
        Self::from_poly(MultiPoly::constant(table, c))
    }

    pub fn from_ratio(table: &Arc<SymbolTable>, r: &BigRational) -> Self {
        let mut den = Den::one();
        den.scale = r.denom().clone();
        RatFun { num: MultiPoly::constant(table, r.numer().clone()), den }.normalized()
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFun { num: p, den: Den::one() }
    }

    /// The RatFun `num / den`.
    pub fn from_parts(num: MultiPoly, den: &MultiPoly) -> Result<Self> {
        num.same_table(den)?;
        Self::from_poly(num).checked_div(&Self::from_poly(den.clone()))
    }

    pub fn var(table: &Arc<SymbolTable>, s: Symbol) -> Self {
        Self::from_poly(MultiPoly::var(table, s))
    }

    /// Symbol by name; fails if `name` is not declared.
    pub fn symbol(table: &Arc<SymbolTable>, name: &str) -> Result<Self> {
        Ok(Self::var(table, table.symbol(name)?))
    }

    pub fn table(&self) -> &Arc<SymbolTable> {
        self.num.table()
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    /// Fully expanded denominator.
    /// Denominator as `scale * prod f^m`; the factors need not be coprime.
    pub fn denom_factors(&self) -> (&BigInt, Vec<(&MultiPoly, u32)>) {
        (&self.den.scale, self.den.factors.iter().map(|(f, m)| (f, *m)).collect())
    }

    pub fn denom(&self) -> MultiPoly {
        self.den.expand(self.num.table())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value, if the function does not depend on any symbol.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.den.factors.is_empty() {
            return None;
        }
        self.num
            .as_constant()
            .map(|c| BigRational::new(c, self.den.scale.clone()))
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Den::one();
            return self;
        }
        let mut filter = modp::Filter::default();
        for i in 0..self.den.factors.len() {
            while self.den.factors[i].1 > 0
                && may_divide_with(&mut filter, &self.num, &self.den.factors[i].0)
            {
                match self.num.div_exact(&self.den.factors[i].0) {
                    Some(h) => {
                        self.num = h;
                        filter.reset();
                        self.den.factors[i].1 -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.factors.retain(|(_, m)| *m > 0);
        if !self.den.scale.is_one() {
            let g = self.num.content().gcd(&self.den.scale);
            if !g.is_one() {
                self.num = self.num.div_exact_int(&g);
                self.den.scale /= &g;
            }
        }
        self
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.num.same_table(&other.num)?;
        if self.den == other.den {
            let r = RatFun { num: &self.num + &other.num, den: self.den.clone() };
            return Ok(if r.den.is_one() { r } else { r.normalized() });
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let table = self.table();
        let l = self.den.union(&other.den);
        let left = &self.num * &l.cofactor(&self.den, table);
        let right = &other.num * &l.cofactor(&other.den, table);
        Ok(RatFun { num: &left + &right, den: l }.normalized())
    }

    /// Sum over a common denominator with a single normalisation.
    pub fn checked_sum(table: &Arc<SymbolTable>, terms: &[RatFun]) -> Result<Self> {
        let terms: Vec<&RatFun> = terms.iter().filter(|t| !t.is_zero()).collect();
        match terms.len() {
            0 => return Ok(RatFun::zero(table)),
            1 => return Ok(terms[0].clone()),
            _ => {}
        }
        let mut l = terms[0].den.clone();
        for t in &terms[1..] {
            t.num.same_table(&terms[0].num)?;
            if t.den != l {
                l = l.union(&t.den);
            }
        }
        let mut num = MultiPoly::zero(table);
        for t in &terms {
            if t.den == l {
                num = &num + &t.num;
            } else {
                num = &num + &(&t.num * &l.cofactor(&t.den, table));
            }
        }
        Ok(RatFun { num, den: l }.normalized())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.num.same_table(&other.num)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.table()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(&self.num * &other.num));
        }
        let mut den = self.den.clone();
        den.scale *= &other.den.scale;
        for (f, m) in &other.den.factors {
            den.insert(f.clone(), *m);
        }
        let left = RatFun { num: self.num.clone(), den }.normalized();
        let right = RatFun { num: other.num.clone(), den: left.den.clone() }.normalized();
        Ok(RatFun { num: &left.num * &right.num, den: right.den }.normalized())
    }

    pub fn inv(&self) -> Result<Self> {
        nonzero(&self.num)?;
        let mut den = Den::one();
        let negate = den.absorb(&self.num, 1);
        let num = self.den.expand(self.table());
        let num = if negate { -num } else { num };
        Ok(RatFun { num, den }.normalized())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.num.same_table(&other.num)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Self {
        RatFun { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if self.den.is_one() {
            return Ok(Self::from_poly(self.num.pow(e as u32)));
        }
        let mut result = Self::one(self.table());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Exact equality: `num(f)*den(g) - num(g)*den(f) == 0`, computed over a
    /// common multiple of the factored denominators.
    pub fn equals(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        if self.num.is_zero() || other.num.is_zero() {
            return self.num.is_zero() && other.num.is_zero();
        }
        let table = self.table();
        let l = self.den.union(&other.den);
        &self.num * &l.cofactor(&self.den, table) == &other.num * &l.cofactor(&other.den, table)
    }

    /// Simultaneous substitution of symbols by rational functions. The result
    /// lives in the table of the assigned values (or the current one when no
    /// assignment is given); unassigned symbols carry over by name.
    pub fn substitute(&self, assignments: &[(Symbol, RatFun)]) -> Result<Self> {
        let src = self.table().clone();
        let target = assignments.first().map(|(_, v)| v.table().clone()).unwrap_or_else(|| src.clone());
        for (i, (s, v)) in assignments.iter().enumerate() {
            SymbolTable::check_same(v.table(), &target)?;
            if assignments[..i].iter().any(|(t, _)| t == s) {
                return Err(Error::Domain(format!("symbol `{}` assigned twice", src.name(*s))));
            }
        }
        let mut values: Vec<RatFun> = Vec::with_capacity(src.len());
        for (i, name) in src.names().iter().enumerate() {
            match assignments.iter().find(|(s, _)| s.index() == i) {
                Some((_, v)) => values.push(v.clone()),
                None => values.push(Self::symbol(&target, name)?),
            }
        }
        let num = subst_poly(&self.num, &values, &target)?;
        let mut den = Self::from_int(&target, self.den.scale.clone());
        for (f, m) in &self.den.factors {
            let v = subst_poly(f, &values, &target)?;
            if v.is_zero() {
                return Err(Error::DivisionByZero);
            }
            den = &den * &v.pow(*m as i64)?;
        }
        num.checked_div(&den)
    }

    /// Exact value at a rational point assigning every symbol.
    pub fn eval_rational(&self, point: &[(Symbol, BigRational)]) -> Result<BigRational> {
        let table = self.table();
        let mut vals = Vec::with_capacity(table.len());
        for i in 0..table.len() {
            match point.iter().find(|(s, _)| s.index() == i) {
                Some((_, v)) => vals.push(v.clone()),
                None => {
                    // symbols that do not occur need no value
                    let used = self.num.degree_in(Symbol(i)) > 0
                        || self.den.factors.iter().any(|(f, _)| f.degree_in(Symbol(i)) > 0);
                    if used {
                        return Err(Error::Domain(format!("no value for symbol `{}`", table.names()[i])));
                    }
                    vals.push(BigRational::zero());
                }
            }
        }
        let mut d = BigRational::from_integer(self.den.scale.clone());
        for (f, m) in &self.den.factors {
            let v = f.eval(&vals);
            if v.is_zero() {
                return Err(Error::Pole(format!("denominator factor {f} vanishes")));
            }
            d *= num_traits::pow(v, *m as usize);
        }
        Ok(self.num.eval(&vals) / d)
    }

    /// Re-expresses the value over a larger table.
    pub fn embed(&self, table: &Arc<SymbolTable>) -> Result<Self> {
        let num = self.num.embed(table)?;
        let den = self.denom().embed(table)?;
        Self::from_parts(num, &den)
    }
}

fn subst_poly(p: &MultiPoly, values: &[RatFun], target: &Arc<SymbolTable>) -> Result<RatFun> {
    let all_poly = values.iter().all(|v| v.is_polynomial());
    let mut cache: Vec<Vec<RatFun>> = values.iter().map(|v| vec![RatFun::one(target), v.clone()]).collect();
    let mut power = |i: usize, e: usize| -> RatFun {
        let pw = &mut cache[i];
        while pw.len() <= e {
            let next = pw.last().unwrap() * &pw[1];
            pw.push(next);
        }
        pw[e].clone()
    };
    if all_poly {
        let mut acc = MultiPoly::zero(target);
        for (m, c) in p.terms() {
            let mut t = MultiPoly::constant(target, c.clone());
            for i in 0..values.len() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = &t * power(i, e).numer();
                }
            }
            acc = &acc + &t;
        }
        return Ok(RatFun::from_poly(acc));
    }
    let mut acc = RatFun::zero(target);
    for (m, c) in p.terms() {
        let mut t = RatFun::from_int(target, c.clone());
        for i in 0..values.len() {
            let e = m.exp(i) as usize;
            if e > 0 {
                t = &t * &power(i, e);
            }
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.denom())
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                self.$checked(rhs).expect("RatFun arithmetic failed")
            }
        }
        impl $tr for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
    };
}

// Operators panic on table mismatch or division by zero; the `checked_*`
// methods report those as errors.
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        self.neg_ref()
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Ctx {
        t: Arc<SymbolTable>,
        q: RatFun,
        a: RatFun,
        b: RatFun,
        one: RatFun,
    }

    fn ctx() -> Ctx {
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        Ctx {
            q: RatFun::symbol(&t, "q").unwrap(),
            a: RatFun::symbol(&t, "a").unwrap(),
            b: RatFun::symbol(&t, "b").unwrap(),
            one: RatFun::one(&t),
            t,
        }
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn geometric_inverse() {
        let c = ctx();
        let f = &c.one / &(&c.one - &c.q);
        assert_eq!(f.to_string(), "(-1)/(q - 1)");
        let back = &f * &(&c.one - &c.q);
        assert!(back.is_one());
    }

    #[test]
    fn cancellation_and_equality() {
        let c = ctx();
        let num = &c.one - &(&c.q * &c.q);
        let f = &num / &(&c.one - &c.q);
        assert!(f.is_polynomial());
        assert_eq!(f, &c.one + &c.q);
        assert!(!(&c.b - &c.a).equals(&(&c.a - &c.b)));
        let z = &(&c.b - &c.a) + &(&c.a - &c.b);
        assert!(z.is_zero());
    }

    #[test]
    fn equal_q_powers() {
        let c = ctx();
        let (n, k) = (5i64, 2i64);
        let x = c.q.pow((n - k) * k).unwrap();
        let y = c.q.pow(6).unwrap();
        assert_eq!(x, y);
        let r = c.q.pow(-3).unwrap();
        assert_eq!(&r * &c.q.pow(3).unwrap(), c.one);
    }

    #[test]
    fn division_by_zero() {
        let c = ctx();
        assert_eq!(c.one.checked_div(&RatFun::zero(&c.t)), Err(Error::DivisionByZero));
        assert!(RatFun::zero(&c.t).inv().is_err());
    }

    #[test]
    fn substitution_examples() {
        let c = ctx();
        let qs = c.t.symbol("q").unwrap();
        let as_ = c.t.symbol("a").unwrap();
        let bs = c.t.symbol("b").unwrap();
        let f = &c.a - &c.b;
        let g = f.substitute(&[(bs, &c.a * &c.q)]).unwrap();
        assert_eq!(g, &c.a * &(&c.one - &c.q));

        let t2 = c.t.extended(&["t"]).unwrap();
        let tt = RatFun::symbol(&t2, "t").unwrap();
        let a2 = RatFun::symbol(&t2, "a").unwrap();
        let b2 = RatFun::symbol(&t2, "b").unwrap();
        let h = f.substitute(&[(as_, &a2 * &tt), (bs, &b2 * &tt)]).unwrap();
        assert_eq!(h, &(&a2 - &b2) * &tt);

        let geo = &c.one / &(&c.one - &c.q);
        let at0 = geo.substitute(&[(qs, RatFun::zero(&c.t))]).unwrap();
        assert!(at0.is_one());
        let pole = geo.substitute(&[(qs, c.one.clone())]);
        assert_eq!(pole, Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_evaluation() {
        let c = ctx();
        let qs = c.t.symbol("q").unwrap();
        let as_ = c.t.symbol("a").unwrap();
        let bs = c.t.symbol("b").unwrap();
        let v = (&c.one + &c.q).eval_rational(&[(qs, rat(1, 2))]).unwrap();
        assert_eq!(v, rat(3, 2));
        let v = (&c.b - &c.a).eval_rational(&[(as_, rat(1, 1)), (bs, rat(2, 1))]).unwrap();
        assert_eq!(v, rat(1, 1));
        let geo = &c.one / &(&c.one - &c.q);
        assert!(matches!(geo.eval_rational(&[(qs, rat(1, 1))]), Err(Error::Pole(_))));
    }

    #[test]
    fn sign_and_content_normalization() {
        let c = ctx();
        let two = RatFun::from_int(&c.t, 2);
        let f = &(&two * &c.a) / &(&(&two * &c.b) - &two.clone().mul(&c.q));
        // leading term of the denominator is positive and content is reduced
        let d = f.denom();
        assert!(d.leading().unwrap().1 > BigInt::zero());
        let g = f.numer().content().gcd(&d.content());
        assert!(g.is_one());
        assert_eq!(f, &c.a / &(&c.b - &c.q));
    }

    #[test]
    fn factor_splitting_keeps_denominators_small() {
        let c = ctx();
        let f1 = &c.one / &(&c.one - &c.q);
        let f2 = &c.one / &(&c.one - &c.q.pow(2).unwrap());
        let s = &f1 + &f2;
        // (1-q^2) splits into (q-1)(q+1) against the existing (q-1) factor
        assert!(s.denom().total_degree() <= 2);
        let expect = &(&c.q + &RatFun::from_int(&c.t, 2)) / &(&c.one - &c.q.pow(2).unwrap());
        assert_eq!(s, expect);
    }

    #[test]
    fn smaller_factor_splits_existing_one() {
        let c = ctx();
        let qp = |k: i64| &c.one - &c.q.pow(k).unwrap();
        // (1-q^6) first, then (1-q^2) and (1-q^3) each split it
        let f = &(&(&c.one / &qp(6)) / &qp(2)) / &qp(3);
        let (_, factors) = f.denom_factors();
        for (i, (g, _)) in factors.iter().enumerate() {
            for (h, _) in &factors[i + 1..] {
                assert!(g.div_exact(h).is_none() && h.div_exact(g).is_none(), "{g} / {h}");
            }
        }
        let expect = RatFun::from_poly((&(&qp(6) * &qp(2)) * &qp(3)).numer().clone()).inv().unwrap();
        assert_eq!(f, expect);
        assert_eq!(&f * &(&(&qp(6) * &qp(2)) * &qp(3)), c.one);
    }
}
