use std::cmp::Ordering;

use super::symbols::MAX_SYMBOLS;

/// Exponent vector with cached total degree. Field order makes the derived
/// `Ord` the graded lexicographic order (earlier symbols dominate).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_SYMBOLS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, exps: [0; MAX_SYMBOLS] };

    pub fn var(i: usize, e: u16) -> Self {
        let mut m = Self::ONE;
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut m = Self::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            m.deg += e as u32;
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16; MAX_SYMBOLS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for i in 0..MAX_SYMBOLS {
            m.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        m.deg = self.deg + other.deg;
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && (0..MAX_SYMBOLS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn div_into(&self, other: &Self) -> Self {
        let mut m = *other;
        for i in 0..MAX_SYMBOLS {
            m.exps[i] -= self.exps[i];
        }
        m.deg = other.deg - self.deg;
        m
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = Self::ONE;
        for i in 0..MAX_SYMBOLS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| self.exps.cmp(&other.exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let q = Monomial::var(0, 1);
        let a = Monomial::var(1, 1);
        let q2 = Monomial::var(0, 2);
        let qa = q.mul(&a);
        assert!(q > a);
        assert!(q2 > qa);
        assert!(qa > q);
        assert!(a > Monomial::ONE);
    }

    #[test]
    fn divide_and_gcd() {
        let m = Monomial::from_exps(&[2, 1, 0]);
        let n = Monomial::from_exps(&[1, 3, 1]);
        let g = m.gcd(&n);
        assert_eq!(g, Monomial::from_exps(&[1, 1, 0]));
        assert!(g.divides(&m));
        assert_eq!(g.div_into(&n), Monomial::from_exps(&[0, 2, 1]));
    }
}
