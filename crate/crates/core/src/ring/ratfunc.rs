//! Rational functions `Q(x)` in canonical form: coprime numerator and
//! denominator with the denominator monic.

use crate::qpoly::QPoly;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Normalizes `num/den`. Panics on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let lead = den.leading().unwrap().recip();
            return RatFunc { num: num.scale(&lead), den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn var() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        // with d = gcd of the denominators, only d can share factors with the sum
        let d = self.den.gcd(&o.den);
        let (a, b) = (self.den.exact_div(&d).unwrap(), o.den.exact_div(&d).unwrap());
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&d);
        let num = num.exact_div(&g).unwrap();
        let den = a.mul(&b).mul(&d.exact_div(&g).unwrap());
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        // both factors are reduced, so cancelling crosswise leaves a reduced product
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let num = self.num.exact_div(&g1).unwrap().mul(&o.num.exact_div(&g2).unwrap());
        let den = self.den.exact_div(&g2).unwrap().mul(&o.den.exact_div(&g1).unwrap());
        let lead = den.leading().unwrap().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn derivative(&self) -> Self {
        // (n/d)' = (n' d - n d') / d^2
        Self::new(
            self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    /// `r(x) -> r(x^2)`.
    pub fn compose_square(&self) -> Self {
        // substitution preserves coprimality and keeps the denominator monic
        RatFunc { num: self.num.compose_square(), den: self.den.compose_square() }
    }

    /// Preimage under `r(x) -> r(x^2)`: `r` is in the image iff `r(x) = r(-x)`.
    /// Writing `r = p(x) q(-x) / (q(x) q(-x))` the denominator is even, so
    /// evenness of the new numerator decides membership.
    pub fn square_preimage(&self) -> Option<Self> {
        let qr = self.den.reflect();
        let num = self.num.mul(&qr);
        let den = self.den.mul(&qr);
        let n = num.halve_exponents()?;
        let d = den.halve_exponents().expect("q(x)q(-x) is even");
        Some(Self::new(n, d))
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::constant(BigRational::new(n.into(), d.into()))
    }

    pub fn max_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self::constant(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn canonical_form_is_unique() {
        // (2x + 2)/(2x^2 - 2) = 1/(x - 1)
        let a = RatFunc::new(poly(&[2, 2]), poly(&[-2, 0, 2]));
        let b = RatFunc::new(poly(&[1]), poly(&[-1, 1]));
        assert_eq!(a, b);
        assert!(a.den().is_monic());
    }

    #[test]
    fn square_preimage_detects_even_functions() {
        let x = RatFunc::var();
        let xp1 = x.add(&RatFunc::one());
        let img = xp1.compose_square();
        assert_eq!(img.square_preimage(), Some(xp1));
        assert_eq!(x.square_preimage(), None);
        // 1/(x^2 + x) is not even; x/(x^3 - x) = 1/(x^2 - 1) is
        assert_eq!(RatFunc::new(poly(&[1]), poly(&[0, 1, 1])).square_preimage(), None);
        let r = RatFunc::new(poly(&[0, 1]), poly(&[0, -1, 0, 1]));
        assert_eq!(r.square_preimage(), Some(RatFunc::new(poly(&[1]), poly(&[-1, 1]))));
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/x = -1/x^2
        let inv_x = RatFunc::var().inv().unwrap();
        assert_eq!(inv_x.derivative(), RatFunc::new(poly(&[-1]), poly(&[0, 0, 1])));
    }
}
