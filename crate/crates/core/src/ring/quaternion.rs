//! Hamilton quaternions `(-1,-1)_Q` with exact rational components.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// `re + i*i + j*j + k*k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Quaternion {
    pub re: BigRational,
    pub i: BigRational,
    pub j: BigRational,
    pub k: BigRational,
}

impl Quaternion {
    pub fn new(re: BigRational, i: BigRational, j: BigRational, k: BigRational) -> Self {
        Quaternion { re, i, j, k }
    }

    pub fn from_ints(re: i64, i: i64, j: i64, k: i64) -> Self {
        let r = |n: i64| BigRational::from_integer(n.into());
        Self::new(r(re), r(i), r(j), r(k))
    }

    pub fn scalar(re: BigRational) -> Self {
        Self::new(re, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(BigRational::one())
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.re, &self.i, &self.j, &self.k]
    }

    pub fn from_components(c: [BigRational; 4]) -> Self {
        let [re, i, j, k] = c;
        Self::new(re, i, j, k)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.i + &o.i, &self.j + &o.j, &self.k + &o.k)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.i - &o.i, &self.j - &o.j, &self.k - &o.k)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.i, -&self.j, -&self.k)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.re, &self.i, &self.j, &self.k);
        let (a2, b2, c2, d2) = (&o.re, &o.i, &o.j, &o.k);
        Self::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(&self.re * s, &self.i * s, &self.j * s, &self.k * s)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.i, -&self.j, -&self.k)
    }

    /// Reduced norm `q * conj(q)`.
    pub fn norm(&self) -> BigRational {
        self.components().iter().map(|c| *c * *c).fold(BigRational::zero(), |a, b| a + b)
    }

    /// Reduced trace `q + conj(q)`.
    pub fn trace(&self) -> BigRational {
        &self.re + &self.re
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        (!n.is_zero()).then(|| self.conj().scale(&n.recip()))
    }

    pub fn pure_part(&self) -> Self {
        Self::new(BigRational::zero(), self.i.clone(), self.j.clone(), self.k.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let i = Quaternion::from_ints(0, 1, 0, 0);
        let j = Quaternion::from_ints(0, 0, 1, 0);
        let k = Quaternion::from_ints(0, 0, 0, 1);
        let m1 = Quaternion::from_ints(-1, 0, 0, 0);
        assert_eq!(i.mul(&i), m1);
        assert_eq!(j.mul(&j), m1);
        assert_eq!(k.mul(&k), m1);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&j).mul(&k), m1);
    }

    #[test]
    fn inverse_both_sides() {
        let q = Quaternion::from_ints(1, 2, -3, 4);
        let inv = q.inv().unwrap();
        assert_eq!(q.mul(&inv), Quaternion::one());
        assert_eq!(inv.mul(&q), Quaternion::one());
        assert!(Quaternion::zero().inv().is_none());
    }
}
