use super::{random, Backend, Elem};
use crate::error::{Error, Result};
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::fmt;

/// The ring endomorphism `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endomorphism {
    Identity,
    /// `a -> a^(p^e)` on a finite field.
    Frobenius(u32),
    /// `r(x) -> r(x^2)` on rational functions.
    SquareVariable,
}

/// The `S`-derivation `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Zero,
    /// `D(x) = d x - S(x) d`.
    Inner(Elem),
    /// `d/dx` on rational functions; requires `S = id`.
    Formal,
}

/// What a context can decide, used to pick algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub finitely_enumerable: bool,
    pub s_is_automorphism: bool,
    pub s_preimage_decidable: bool,
    /// Dimension and basis over a central subfield on which `S` and `D` act
    /// linearly.
    pub finite_dimensional: Option<(usize, Vec<Elem>)>,
    pub characteristic: u32,
}

/// A division ring `K` together with an endomorphism `S` and an
/// `S`-derivation `D`; the coefficient data of `R = K[t, S, D]`.
///
/// Contexts are immutable and validated on construction: `S` must be
/// available on the backend, `d/dx` requires `S = id`, and the
/// multiplicativity of `S` and the twisted Leibniz rule
/// `D(ab) = S(a) D(b) + D(a) b` are checked on a fixed sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreContext {
    backend: Backend,
    endo: Endomorphism,
    deriv: Derivation,
}

impl OreContext {
    pub fn new(backend: Backend, endo: Endomorphism, deriv: Derivation) -> Result<Self> {
        match (&backend, &endo) {
            (_, Endomorphism::Identity) => {}
            (Backend::FiniteField(_), Endomorphism::Frobenius(_)) => {}
            (Backend::RationalFunctions { .. }, Endomorphism::SquareVariable) => {}
            (b, e) => {
                return Err(Error::InvalidContext(format!("{e:?} is not available on {}", b.tag())));
            }
        }
        match &deriv {
            Derivation::Zero => {}
            Derivation::Inner(d) => {
                if !backend.contains(d) {
                    return Err(Error::InvalidContext("inner derivation element is not in the ring".into()));
                }
            }
            Derivation::Formal => {
                if !matches!(backend, Backend::RationalFunctions { .. }) || endo != Endomorphism::Identity {
                    return Err(Error::InvalidContext(
                        "the formal derivative needs rational functions and S = id".into(),
                    ));
                }
            }
        }
        let ctx = OreContext { backend, endo, deriv };
        ctx.check_laws()?;
        Ok(ctx)
    }

    /// `(S, D) = (id, 0)`.
    pub fn classical(backend: Backend) -> Self {
        Self::new(backend, Endomorphism::Identity, Derivation::Zero).expect("classical context is valid")
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn endomorphism(&self) -> &Endomorphism {
        &self.endo
    }

    pub fn derivation(&self) -> &Derivation {
        &self.deriv
    }

    pub fn is_classical(&self) -> bool {
        self.s_is_identity() && self.d_is_zero()
    }

    pub fn s_is_identity(&self) -> bool {
        match (&self.endo, &self.backend) {
            (Endomorphism::Identity, _) => true,
            (Endomorphism::Frobenius(e), Backend::FiniteField(f)) => e % f.degree() == 0,
            _ => false,
        }
    }

    pub fn d_is_zero(&self) -> bool {
        match &self.deriv {
            Derivation::Zero => true,
            Derivation::Formal => false,
            // d x - S(x) d vanishes identically iff it vanishes on a basis; for the
            // backends here that means on 1 and the generators.
            Derivation::Inner(_) => self.generators().iter().all(|g| self.backend.is_zero(&self.apply_d(g))),
        }
    }

    fn generators(&self) -> Vec<Elem> {
        let b = &self.backend;
        let mut g = vec![b.one()];
        g.extend(b.variable_elem());
        for u in ['i', 'j', 'k'] {
            g.extend(b.quaternion_unit(u));
        }
        g
    }

    pub fn capabilities(&self) -> Capabilities {
        let finite_dimensional = match (self.backend.base_dimension(), self.backend.base_basis()) {
            (Some(n), Some(basis)) => Some((n, basis)),
            _ => None,
        };
        Capabilities {
            finitely_enumerable: matches!(self.backend, Backend::FiniteField(_)),
            s_is_automorphism: !matches!(self.endo, Endomorphism::SquareVariable),
            s_preimage_decidable: true,
            finite_dimensional,
            characteristic: self.backend.characteristic(),
        }
    }

    /// Short description such as `HQ; S=id; D=zero`.
    pub fn describe(&self) -> String {
        let s = match &self.endo {
            Endomorphism::Identity => "id".to_string(),
            Endomorphism::Frobenius(1) => "frob".to_string(),
            Endomorphism::Frobenius(e) => format!("frob:{e}"),
            Endomorphism::SquareVariable => "xsq".to_string(),
        };
        let d = match &self.deriv {
            Derivation::Zero => "zero".to_string(),
            Derivation::Formal => "ddx".to_string(),
            Derivation::Inner(e) => format!("inner:{}", self.fmt(e)),
        };
        format!("{}; S={s}; D={d}", self.backend.tag())
    }

    // ---- element arithmetic, delegated to the backend ----

    pub fn zero(&self) -> Elem {
        self.backend.zero()
    }

    pub fn one(&self) -> Elem {
        self.backend.one()
    }

    pub fn int(&self, n: i64) -> Elem {
        self.backend.from_i64(n)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        self.backend.is_zero(a)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.backend.add(a, b)
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.backend.sub(a, b)
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.backend.neg(a)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.backend.mul(a, b)
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Elem) -> Elem {
        self.backend.inv(a)
    }

    pub fn checked_inv(&self, a: &Elem) -> Option<Elem> {
        self.backend.checked_inv(a)
    }

    pub fn contains(&self, a: &Elem) -> bool {
        self.backend.contains(a)
    }

    pub fn fmt(&self, a: &Elem) -> String {
        self.backend.format(a)
    }

    /// Parses an element literal in this context's grammar.
    pub fn elem(&self, text: &str) -> Result<Elem> {
        crate::parse::parse_element(text, self)
    }

    // ---- S and D ----

    pub fn apply_s(&self, a: &Elem) -> Elem {
        match (&self.endo, &self.backend, a) {
            (Endomorphism::Identity, _, _) => a.clone(),
            (Endomorphism::Frobenius(e), Backend::FiniteField(f), Elem::Gf(x)) => Elem::Gf(f.frobenius(*x, *e)),
            (Endomorphism::SquareVariable, _, Elem::Func(r)) => Elem::Func(r.compose_square()),
            _ => panic!("element does not belong to {}", self.backend.tag()),
        }
    }

    /// `S^n(a)`.
    pub fn apply_s_n(&self, a: &Elem, n: usize) -> Elem {
        (0..n).fold(a.clone(), |x, _| self.apply_s(&x))
    }

    pub fn apply_d(&self, a: &Elem) -> Elem {
        match (&self.deriv, a) {
            (Derivation::Zero, _) => self.zero(),
            (Derivation::Inner(d), _) => self.sub(&self.mul(d, a), &self.mul(&self.apply_s(a), d)),
            (Derivation::Formal, Elem::Func(r)) => Elem::Func(r.derivative()),
            (Derivation::Formal, _) => panic!("element does not belong to {}", self.backend.tag()),
        }
    }

    /// Some `b` with `S(b) = a`, or `None` when `a` is not in `S(K)`.
    pub fn s_preimage(&self, a: &Elem) -> Result<Option<Elem>> {
        Ok(match (&self.endo, &self.backend, a) {
            (Endomorphism::Identity, _, _) => Some(a.clone()),
            (Endomorphism::Frobenius(e), Backend::FiniteField(f), Elem::Gf(x)) => {
                let k = f.degree();
                Some(Elem::Gf(f.frobenius(*x, (k - e % k) % k)))
            }
            (Endomorphism::SquareVariable, _, Elem::Func(r)) => r.square_preimage().map(Elem::Func),
            _ => return Err(Error::CapabilityMissing("S-preimage for this element".into())),
        })
    }

    pub fn in_s_image(&self, a: &Elem) -> Result<bool> {
        Ok(self.s_preimage(a)?.is_some())
    }

    /// All elements, zero first, in canonical order.
    pub fn enumerate(&self) -> Result<Vec<Elem>> {
        self.backend
            .enumerate()
            .ok_or_else(|| Error::CapabilityMissing(format!("{} is not finite", self.backend.tag())))
    }

    /// The `(S, D)`-conjugate `a^c = S(c) a c^-1 + D(c) c^-1`.
    pub fn conjugate(&self, a: &Elem, c: &Elem) -> Result<Elem> {
        let ci = self.checked_inv(c).ok_or(Error::ZeroConjugator)?;
        let sc = self.apply_s(c);
        Ok(self.add(&self.mul(&self.mul(&sc, a), &ci), &self.mul(&self.apply_d(c), &ci)))
    }

    fn check_laws(&self) -> Result<()> {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let one = self.one();
        if self.apply_s(&one) != one || !self.is_zero(&self.apply_d(&one)) {
            return Err(Error::InvalidContext("S(1) = 1 and D(1) = 0 must hold".into()));
        }
        for _ in 0..12 {
            let a = random::element(&self.backend, &mut rng);
            let b = random::element(&self.backend, &mut rng);
            let s_mul = self.apply_s(&self.mul(&a, &b)) == self.mul(&self.apply_s(&a), &self.apply_s(&b));
            let s_add = self.apply_s(&self.add(&a, &b)) == self.add(&self.apply_s(&a), &self.apply_s(&b));
            let leibniz = self.apply_d(&self.mul(&a, &b))
                == self.add(&self.mul(&self.apply_s(&a), &self.apply_d(&b)), &self.mul(&self.apply_d(&a), &b));
            if !(s_mul && s_add && leibniz) {
                return Err(Error::InvalidContext("S or D violates its defining law".into()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for OreContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RatFunc;

    fn f4_frob() -> OreContext {
        OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Zero).unwrap()
    }

    #[test]
    fn frobenius_on_f4() {
        let ctx = f4_frob();
        let w = ctx.elem("w").unwrap();
        assert_eq!(ctx.apply_s(&w), ctx.elem("w+1").unwrap());
        assert_eq!(ctx.apply_s(&w), ctx.mul(&w, &w));
    }

    #[test]
    fn square_substitution() {
        let ctx = OreContext::new(
            Backend::RationalFunctions { var: 'x' },
            Endomorphism::SquareVariable,
            Derivation::Zero,
        )
        .unwrap();
        let a = ctx.elem("x+1").unwrap();
        assert_eq!(ctx.apply_s(&a), ctx.elem("x^2+1").unwrap());
        assert_eq!(ctx.s_preimage(&ctx.elem("x^2+1").unwrap()).unwrap(), Some(a));
        assert_eq!(ctx.s_preimage(&ctx.elem("x").unwrap()).unwrap(), None);
    }

    #[test]
    fn derivations() {
        let qu = OreContext::new(Backend::RationalFunctions { var: 'u' }, Endomorphism::Identity, Derivation::Formal)
            .unwrap();
        let u2 = qu.elem("u^2").unwrap();
        assert_eq!(qu.apply_d(&u2), qu.elem("2u").unwrap());

        let w = Backend::f4().variable_elem().unwrap();
        let ctx = OreContext::new(Backend::f4(), Endomorphism::Frobenius(1), Derivation::Inner(w.clone())).unwrap();
        // w*w - w^2*w = w^2 + 1 = w
        assert_eq!(ctx.apply_d(&w), w);
        assert!(!ctx.d_is_zero());
        assert!(ctx.is_zero(&ctx.apply_d(&ctx.zero())));
    }

    #[test]
    fn invalid_combinations_rejected() {
        assert!(OreContext::new(Backend::Quaternions, Endomorphism::Frobenius(1), Derivation::Zero).is_err());
        assert!(OreContext::new(
            Backend::RationalFunctions { var: 'x' },
            Endomorphism::SquareVariable,
            Derivation::Formal
        )
        .is_err());
        assert!(OreContext::new(Backend::Rationals, Endomorphism::Identity, Derivation::Formal).is_err());
        assert!(OreContext::new(Backend::f4(), Endomorphism::Identity, Derivation::Inner(Elem::Func(RatFunc::one())))
            .is_err());
    }

    #[test]
    fn enumeration_order() {
        let ctx = f4_frob();
        let all: Vec<String> = ctx.enumerate().unwrap().iter().map(|a| ctx.fmt(a)).collect();
        assert_eq!(all, ["0", "1", "w", "w+1"]);
        assert_eq!(OreContext::classical(Backend::f2()).enumerate().unwrap().len(), 2);
        assert_eq!(OreContext::classical(Backend::f8()).enumerate().unwrap().len(), 8);
        assert!(OreContext::classical(Backend::Quaternions).enumerate().is_err());
    }

    #[test]
    fn inner_derivation_on_quaternions_is_inner() {
        let i = Backend::Quaternions.quaternion_unit('i').unwrap();
        let ctx = OreContext::new(Backend::Quaternions, Endomorphism::Identity, Derivation::Inner(i.clone())).unwrap();
        let j = ctx.elem("j").unwrap();
        // i j - j i = 2k
        assert_eq!(ctx.apply_d(&j), ctx.elem("2k").unwrap());
    }
}
