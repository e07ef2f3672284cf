//! Computable division rings and the `(K, S, D)` contexts built on them.
//!
//! Four backends are offered: the rationals, finite fields `F_p[w]/(m)`,
//! rational functions `Q(x)` in one named variable, and the rational
//! Hamilton quaternions. Elements are tagged values; a context knows which
//! tag it expects and performs all arithmetic.

mod context;
mod format;
pub mod gf;
pub mod quaternion;
pub mod random;
pub mod ratfunc;

pub use context::{Capabilities, Derivation, Endomorphism, OreContext};
pub use gf::FiniteField;
pub use quaternion::Quaternion;
pub use ratfunc::RatFunc;

use crate::qpoly::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// A ring element in canonical form. Equality of values is equality of
/// the elements they denote.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Rat(BigRational),
    Gf(u32),
    Func(RatFunc),
    Quat(Quaternion),
}

/// The underlying division ring `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Rationals,
    FiniteField(FiniteField),
    RationalFunctions { var: char },
    Quaternions,
}

impl Backend {
    pub fn f2() -> Self {
        Backend::FiniteField(FiniteField::prime(2).expect("2 is prime"))
    }

    pub fn f4() -> Self {
        Backend::FiniteField(FiniteField::f4())
    }

    pub fn f8() -> Self {
        Backend::FiniteField(FiniteField::f8())
    }

    /// Short tag used by the CLI and in reports.
    pub fn tag(&self) -> String {
        match self {
            Backend::Rationals => "Q".into(),
            Backend::FiniteField(f) => {
                if *f == FiniteField::f4() {
                    "F4".into()
                } else if *f == FiniteField::f8() {
                    "F8".into()
                } else if f.degree() == 1 {
                    format!("F{}", f.characteristic())
                } else {
                    format!("F{}^{}", f.characteristic(), f.degree())
                }
            }
            Backend::RationalFunctions { var } => format!("Q{var}"),
            Backend::Quaternions => "HQ".into(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self, Backend::Quaternions)
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Backend::FiniteField(f) => f.characteristic(),
            _ => 0,
        }
    }

    /// Name of the adjoined symbol of the backend, if any.
    pub fn variable(&self) -> Option<char> {
        match self {
            Backend::FiniteField(f) if f.degree() > 1 => Some('w'),
            Backend::RationalFunctions { var } => Some(*var),
            _ => None,
        }
    }

    pub fn contains(&self, a: &Elem) -> bool {
        match (self, a) {
            (Backend::Rationals, Elem::Rat(_)) => true,
            (Backend::FiniteField(f), Elem::Gf(x)) => f.contains(*x),
            (Backend::RationalFunctions { .. }, Elem::Func(_)) => true,
            (Backend::Quaternions, Elem::Quat(_)) => true,
            _ => false,
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_i64(0)
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_rational(&BigRational::from_integer(n.into()))
            .expect("integers embed in every backend")
    }

    /// Image of a rational number; `None` when the denominator vanishes in
    /// positive characteristic.
    pub fn from_rational(&self, r: &BigRational) -> Option<Elem> {
        Some(match self {
            Backend::Rationals => Elem::Rat(r.clone()),
            Backend::FiniteField(f) => {
                let p = BigInt::from(f.characteristic());
                let n = (r.numer() % &p).to_i64()?;
                let d = (r.denom() % &p).to_i64()?;
                let d = f.inv(f.from_i64(d))?;
                Elem::Gf(f.mul(f.from_i64(n), d))
            }
            Backend::RationalFunctions { .. } => Elem::Func(RatFunc::from(r.clone())),
            Backend::Quaternions => Elem::Quat(Quaternion::scalar(r.clone())),
        })
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_zero(),
            Elem::Gf(x) => *x == 0,
            Elem::Func(r) => r.is_zero(),
            Elem::Quat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Backend::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Backend::FiniteField(f), Elem::Gf(x), Elem::Gf(y)) => Elem::Gf(f.add(*x, *y)),
            (Backend::RationalFunctions { .. }, Elem::Func(x), Elem::Func(y)) => Elem::Func(x.add(y)),
            (Backend::Quaternions, Elem::Quat(x), Elem::Quat(y)) => Elem::Quat(x.add(y)),
            _ => panic!("element does not belong to {}", self.tag()),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Backend::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Backend::FiniteField(f), Elem::Gf(x)) => Elem::Gf(f.neg(*x)),
            (Backend::RationalFunctions { .. }, Elem::Func(x)) => Elem::Func(x.neg()),
            (Backend::Quaternions, Elem::Quat(x)) => Elem::Quat(x.neg()),
            _ => panic!("element does not belong to {}", self.tag()),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Backend::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Backend::FiniteField(f), Elem::Gf(x), Elem::Gf(y)) => Elem::Gf(f.mul(*x, *y)),
            (Backend::RationalFunctions { .. }, Elem::Func(x), Elem::Func(y)) => Elem::Func(x.mul(y)),
            (Backend::Quaternions, Elem::Quat(x), Elem::Quat(y)) => Elem::Quat(x.mul(y)),
            _ => panic!("element does not belong to {}", self.tag()),
        }
    }

    /// Two-sided inverse, `None` for zero.
    pub fn checked_inv(&self, a: &Elem) -> Option<Elem> {
        match (self, a) {
            (Backend::Rationals, Elem::Rat(x)) => (!x.is_zero()).then(|| Elem::Rat(x.recip())),
            (Backend::FiniteField(f), Elem::Gf(x)) => f.inv(*x).map(Elem::Gf),
            (Backend::RationalFunctions { .. }, Elem::Func(x)) => x.inv().map(Elem::Func),
            (Backend::Quaternions, Elem::Quat(x)) => x.inv().map(Elem::Quat),
            _ => panic!("element does not belong to {}", self.tag()),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Elem) -> Elem {
        self.checked_inv(a).expect("inverse of zero")
    }

    pub fn pow(&self, a: &Elem, n: u32) -> Elem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Every element exactly once, zero first, when the ring is finite.
    pub fn enumerate(&self) -> Option<Vec<Elem>> {
        match self {
            Backend::FiniteField(f) => Some((0..f.order()).map(Elem::Gf).collect()),
            _ => None,
        }
    }

    /// The central subfield over which this ring is finite-dimensional:
    /// `Q` for `Q` and the quaternions, `F_p` for `F_{p^k}`.
    pub fn base_field(&self) -> Option<BaseField> {
        match self {
            Backend::Rationals | Backend::Quaternions => Some(BaseField::Rationals),
            Backend::FiniteField(f) => Some(BaseField::Prime(f.characteristic())),
            Backend::RationalFunctions { .. } => None,
        }
    }

    /// Dimension over [`Backend::base_field`].
    pub fn base_dimension(&self) -> Option<usize> {
        match self {
            Backend::Rationals => Some(1),
            Backend::Quaternions => Some(4),
            Backend::FiniteField(f) => Some(f.degree() as usize),
            Backend::RationalFunctions { .. } => None,
        }
    }

    /// The standard basis over the base field: `{1}`, `{1, i, j, k}` or
    /// `{1, w, ..., w^(k-1)}`.
    pub fn base_basis(&self) -> Option<Vec<Elem>> {
        let n = self.base_dimension()?;
        let bf = self.base_field()?;
        Some(
            (0..n)
                .map(|i| {
                    let mut c = vec![bf.zero(); n];
                    c[i] = bf.one();
                    self.from_coordinates(&c)
                })
                .collect(),
        )
    }

    /// Coordinates in the standard basis, as base-field scalars.
    pub fn coordinates(&self, a: &Elem) -> Option<Vec<Elem>> {
        match (self, a) {
            (Backend::Rationals, Elem::Rat(_)) => Some(vec![a.clone()]),
            (Backend::Quaternions, Elem::Quat(q)) => {
                Some(q.components().iter().map(|c| Elem::Rat((*c).clone())).collect())
            }
            (Backend::FiniteField(f), Elem::Gf(x)) => Some(f.digits(*x).into_iter().map(Elem::Gf).collect()),
            _ => None,
        }
    }

    pub fn from_coordinates(&self, c: &[Elem]) -> Elem {
        let rat = |e: &Elem| match e {
            Elem::Rat(r) => r.clone(),
            _ => panic!("expected a rational coordinate"),
        };
        match self {
            Backend::Rationals => Elem::Rat(rat(&c[0])),
            Backend::Quaternions => {
                Elem::Quat(Quaternion::new(rat(&c[0]), rat(&c[1]), rat(&c[2]), rat(&c[3])))
            }
            Backend::FiniteField(f) => {
                let d: Vec<u32> = c
                    .iter()
                    .map(|e| match e {
                        Elem::Gf(x) => *x,
                        _ => panic!("expected a prime-field coordinate"),
                    })
                    .collect();
                Elem::Gf(f.pack(&d))
            }
            Backend::RationalFunctions { .. } => panic!("rational functions have no finite base"),
        }
    }

    /// Whether `a` lies in the center.
    pub fn is_central(&self, a: &Elem) -> bool {
        match a {
            Elem::Quat(q) => q.is_scalar(),
            _ => true,
        }
    }

    pub fn display<'a>(&'a self, a: &'a Elem) -> DisplayElem<'a> {
        DisplayElem { backend: self, elem: a }
    }

    pub fn format(&self, a: &Elem) -> String {
        format::format_elem(self, a)
    }

    /// The adjoined variable as an element (`w`, `x`, `u`), if any.
    pub fn variable_elem(&self) -> Option<Elem> {
        match self {
            Backend::FiniteField(f) if f.degree() > 1 => Some(Elem::Gf(f.generator())),
            Backend::RationalFunctions { .. } => Some(Elem::Func(RatFunc::var())),
            _ => None,
        }
    }

    pub fn quaternion_unit(&self, unit: char) -> Option<Elem> {
        if !matches!(self, Backend::Quaternions) {
            return None;
        }
        Some(Elem::Quat(match unit {
            'i' => Quaternion::from_ints(0, 1, 0, 0),
            'j' => Quaternion::from_ints(0, 0, 1, 0),
            'k' => Quaternion::from_ints(0, 0, 0, 1),
            _ => return None,
        }))
    }

    /// For the rational-function backend, wraps a polynomial in the variable.
    pub fn poly_elem(&self, p: QPoly) -> Option<Elem> {
        matches!(self, Backend::RationalFunctions { .. }).then(|| Elem::Func(RatFunc::from_poly(p)))
    }
}

pub struct DisplayElem<'a> {
    backend: &'a Backend,
    elem: &'a Elem,
}

impl fmt::Display for DisplayElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::format_elem(self.backend, self.elem))
    }
}

/// A commutative central subfield: `Q` or `F_p`. Scalars are carried as
/// [`Elem::Rat`] or [`Elem::Gf`] values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    Rationals,
    Prime(u32),
}

impl BaseField {
    pub fn zero(&self) -> Elem {
        self.from_i64(0)
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match self {
            BaseField::Rationals => Elem::Rat(BigRational::from_integer(n.into())),
            BaseField::Prime(p) => Elem::Gf(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_zero(),
            Elem::Gf(x) => *x == 0,
            _ => panic!("not a base scalar"),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (BaseField::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (BaseField::Prime(p), Elem::Gf(x), Elem::Gf(y)) => Elem::Gf((x + y) % p),
            _ => panic!("not a base scalar"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (BaseField::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (BaseField::Prime(p), Elem::Gf(x)) => Elem::Gf((p - x) % p),
            _ => panic!("not a base scalar"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (BaseField::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (BaseField::Prime(p), Elem::Gf(x), Elem::Gf(y)) => {
                Elem::Gf(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("not a base scalar"),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Elem) -> Elem {
        match (self, a) {
            (BaseField::Rationals, Elem::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Elem::Rat(x.recip())
            }
            (BaseField::Prime(p), Elem::Gf(x)) => {
                assert!(*x != 0, "inverse of zero");
                let (p, mut acc, mut base, mut e) = (*p as u64, 1u64, *x as u64, *p as u64 - 2);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                Elem::Gf(acc as u32)
            }
            _ => panic!("not a base scalar"),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    /// Elements of the field when finite.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match self {
            BaseField::Prime(p) => Some((0..*p).map(Elem::Gf).collect()),
            BaseField::Rationals => None,
        }
    }
}
