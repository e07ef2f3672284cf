//! Small random elements for sampling checks and tests.

use super::{Backend, Elem, Quaternion, RatFunc};
use crate::qpoly::QPoly;
use num_rational::BigRational;
use rand::Rng;

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    let n: i64 = rng.gen_range(-4..=4);
    let d: i64 = rng.gen_range(1..=3);
    BigRational::new(n.into(), d.into())
}

fn small_poly<R: Rng>(rng: &mut R, max_deg: usize) -> QPoly {
    let deg = rng.gen_range(0..=max_deg);
    QPoly::new((0..=deg).map(|_| small_rational(rng)).collect())
}

/// A random element with small coefficients; may be zero.
pub fn element<R: Rng>(backend: &Backend, rng: &mut R) -> Elem {
    match backend {
        Backend::Rationals => Elem::Rat(small_rational(rng)),
        Backend::FiniteField(f) => Elem::Gf(rng.gen_range(0..f.order())),
        Backend::RationalFunctions { .. } => {
            let num = small_poly(rng, 2);
            let den = if rng.gen_bool(0.3) {
                let d = small_poly(rng, 2);
                if d.is_zero() {
                    QPoly::one()
                } else {
                    d
                }
            } else {
                QPoly::one()
            };
            Elem::Func(RatFunc::new(num, den))
        }
        Backend::Quaternions => Elem::Quat(Quaternion::new(
            small_rational(rng),
            small_rational(rng),
            small_rational(rng),
            small_rational(rng),
        )),
    }
}

/// A random nonzero element.
pub fn nonzero<R: Rng>(backend: &Backend, rng: &mut R) -> Elem {
    loop {
        let a = element(backend, rng);
        if !backend.is_zero(&a) {
            return a;
        }
    }
}
