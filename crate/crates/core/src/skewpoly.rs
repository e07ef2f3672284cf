//! Polynomials `sum b_i t^i` in `R = K[t, S, D]`, coefficients on the left,
//! multiplied by the rule `t b = S(b) t + D(b)`.

use crate::error::{Error, Result};
use crate::ring::{Elem, OreContext};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Degree of a skew polynomial. The zero polynomial has degree `NegInf`,
/// which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(n) => Some(n),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SkewPoly {
    ctx: Arc<OreContext>,
    coeffs: Vec<Elem>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewPoly {}

impl std::hash::Hash for SkewPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state)
    }
}

pub(crate) fn same_ctx(a: &Arc<OreContext>, b: &Arc<OreContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SkewPoly {
    /// Builds `sum coeffs[i] t^i`, trimming zero leading coefficients.
    pub fn new(ctx: &Arc<OreContext>, coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| ctx.contains(c)));
        let mut p = SkewPoly { ctx: ctx.clone(), coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ctx.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn zero(ctx: &Arc<OreContext>) -> Self {
        SkewPoly { ctx: ctx.clone(), coeffs: vec![] }
    }

    pub fn one(ctx: &Arc<OreContext>) -> Self {
        Self::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &Arc<OreContext>, c: Elem) -> Self {
        Self::new(ctx, vec![c])
    }

    /// `c t^k`.
    pub fn monomial(ctx: &Arc<OreContext>, c: Elem, k: usize) -> Self {
        let mut coeffs = vec![ctx.zero(); k];
        coeffs.push(c);
        Self::new(ctx, coeffs)
    }

    pub fn t(ctx: &Arc<OreContext>) -> Self {
        Self::monomial(ctx, ctx.one(), 1)
    }

    /// `t - a`.
    pub fn linear(ctx: &Arc<OreContext>, a: &Elem) -> Self {
        Self::new(ctx, vec![ctx.neg(a), ctx.one()])
    }

    /// `(t - a_n) ... (t - a_1)` for `roots = [a_1, ..., a_n]`.
    pub fn from_linear_factors(ctx: &Arc<OreContext>, roots: &[Elem]) -> Self {
        roots.iter().fold(Self::one(ctx), |acc, a| &Self::linear(ctx, a) * &acc)
    }

    pub fn context(&self) -> &Arc<OreContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a number; panics on the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().finite().expect("degree of the zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.ctx.backend().is_one(&self.coeffs[0])
    }

    pub fn leading(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.ctx.backend().is_one(c))
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ctx.add(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::new(&self.ctx, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let ctx = &self.ctx;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(ctx));
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![ctx.zero(); n];
        // power = t^i * other, built one factor of t at a time
        let mut power = other.coeffs.clone();
        for (i, b) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = self.t_times(&power);
            }
            if ctx.is_zero(b) {
                continue;
            }
            for (j, c) in power.iter().enumerate() {
                out[j] = ctx.add(&out[j], &ctx.mul(b, c));
            }
        }
        Ok(Self::new(ctx, out))
    }

    /// `t * sum c_j t^j = sum (S(c_j) t^(j+1) + D(c_j) t^j)`.
    fn t_times(&self, c: &[Elem]) -> Vec<Elem> {
        let ctx = &self.ctx;
        let mut out = vec![ctx.zero(); c.len() + 1];
        for (j, cj) in c.iter().enumerate() {
            out[j + 1] = ctx.add(&out[j + 1], &ctx.apply_s(cj));
            out[j] = ctx.add(&out[j], &ctx.apply_d(cj));
        }
        out
    }

    /// `c * f`, scaling every coefficient on the left.
    pub fn left_scale(&self, c: &Elem) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|b| self.ctx.mul(c, b)).collect())
    }

    /// `lc^-1 * f`. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.left_scale(&self.ctx.inv(lc)),
        }
    }

    /// `f = q g + r` with `deg r < deg g`.
    pub fn right_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_same(g)?;
        let ctx = &self.ctx;
        let m = match g.degree() {
            Degree::NegInf => return Err(Error::DivisionByZeroPoly),
            Degree::Finite(m) => m,
        };
        let n = match self.degree() {
            Degree::Finite(n) if n >= m => n,
            _ => return Ok((Self::zero(ctx), self.clone())),
        };
        // shifted[k] = t^k g and its leading coefficient S^k(lc g)
        let mut shifted = vec![g.coeffs.clone()];
        for k in 1..=n - m {
            let next = self.t_times(&shifted[k - 1]);
            shifted.push(next);
        }
        let mut q = vec![ctx.zero(); n - m + 1];
        let mut r = self.coeffs.clone();
        for deg in (m..=n).rev() {
            let lead = &r[deg];
            if ctx.is_zero(lead) {
                continue;
            }
            let k = deg - m;
            let qk = ctx.mul(lead, &ctx.inv(&shifted[k][deg]));
            for (j, c) in shifted[k].iter().enumerate() {
                r[j] = ctx.sub(&r[j], &ctx.mul(&qk, c));
            }
            debug_assert!(ctx.is_zero(&r[deg]));
            q[k] = qk;
        }
        r.truncate(m);
        Ok((Self::new(ctx, q), Self::new(ctx, r)))
    }

    pub fn right_rem(&self, g: &Self) -> Result<Self> {
        Ok(self.right_divmod(g)?.1)
    }

    /// Whether `g` right-divides `f`, i.e. `f` is in `R g`.
    pub fn right_divisible_by(&self, g: &Self) -> Result<bool> {
        Ok(self.right_rem(g)?.is_zero())
    }

    /// `f = g q + r` with `deg r < deg g`, or `None` when some step needs an
    /// `S`-preimage that does not exist. The quotient coefficients are
    /// forced from the top: `g c t^k` has leading term `lc(g) S^m(c) t^(m+k)`.
    pub fn left_divmod(&self, g: &Self) -> Result<Option<(Self, Self)>> {
        self.check_same(g)?;
        let ctx = &self.ctx;
        let m = match g.degree() {
            Degree::NegInf => return Err(Error::DivisionByZeroPoly),
            Degree::Finite(m) => m,
        };
        let n = match self.degree() {
            Degree::Finite(n) if n >= m => n,
            _ => return Ok(Some((Self::zero(ctx), self.clone()))),
        };
        let lc_inv = ctx.inv(g.leading().unwrap());
        let mut q = vec![ctx.zero(); n - m + 1];
        let mut r = self.clone();
        for deg in (m..=n).rev() {
            let lead = r.coeff(deg);
            if ctx.is_zero(&lead) {
                continue;
            }
            let mut c = ctx.mul(&lc_inv, &lead);
            for _ in 0..m {
                match ctx.s_preimage(&c)? {
                    Some(p) => c = p,
                    None => return Ok(None),
                }
            }
            let k = deg - m;
            r = &r - &(g * &Self::monomial(ctx, c.clone(), k));
            debug_assert!(r.degree() < Degree::Finite(deg));
            q[k] = c;
        }
        Ok(Some((Self::new(ctx, q), r)))
    }

    /// Whether `g` left-divides `f`, i.e. `f` is in `g R`. `None` when the
    /// division procedure could not be carried out.
    pub fn left_divisible_by(&self, g: &Self) -> Result<Option<bool>> {
        Ok(self.left_divmod(g)?.map(|(_, r)| r.is_zero()))
    }

    /// Monic right gcd and monic least left common multiple.
    ///
    /// The remainder sequence `r_(i-1) = q_i r_i + r_(i+1)` is tracked with
    /// left cofactors `r_i = u_i f + v_i g`; when `r_(N+1) = 0` the element
    /// `u_(N+1) f = -v_(N+1) g` generates `Rf ∩ Rg`. `rgcd(f, 0) = monic(f)`
    /// and `llcm(f, 0) = 0`.
    pub fn rgcd_llcm(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_same(g)?;
        let ctx = &self.ctx;
        match (self.is_zero(), g.is_zero()) {
            (true, true) => return Err(Error::Precondition("rgcd of two zero polynomials".into())),
            (false, true) => return Ok((self.monic(), Self::zero(ctx))),
            (true, false) => return Ok((g.monic(), Self::zero(ctx))),
            _ => {}
        }
        // Remainders are kept monic, with their cofactors scaled alike; this
        // curbs coefficient growth over function fields.
        let lc_inv = ctx.inv(self.leading().unwrap());
        let (mut r0, mut r1) = (self.left_scale(&lc_inv), g.monic());
        let (mut u0, mut u1) = (Self::constant(ctx, lc_inv), Self::zero(ctx));
        while !r1.is_zero() {
            let (q, mut r2) = r0.right_divmod(&r1)?;
            let mut u2 = &u0 - &(&q * &u1);
            if let Some(l) = r2.leading() {
                let l = ctx.inv(l);
                r2 = r2.left_scale(&l);
                u2 = u2.left_scale(&l);
            }
            r0 = std::mem::replace(&mut r1, r2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        let m = (&u1 * self).monic();
        Ok((r0.monic(), m))
    }

    pub fn rgcd(&self, g: &Self) -> Result<Self> {
        Ok(self.rgcd_llcm(g)?.0)
    }

    pub fn llcm(&self, g: &Self) -> Result<Self> {
        Ok(self.rgcd_llcm(g)?.1)
    }

    /// `f(a) = sum b_i N_i(a)`.
    pub fn eval(&self, a: &Elem) -> Elem {
        crate::eval::evaluate(self, a)
    }

    /// Applies a map to each coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Elem) -> Elem) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(f).collect())
    }

    /// Canonical text, e.g. `t^2-[1+i]*t+[j]`.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let ctx = &self.ctx;
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if ctx.is_zero(c) {
                continue;
            }
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let text = ctx.fmt(c);
            let neg_text = ctx.fmt(&ctx.neg(c));
            let (sign, body) = if text.starts_with('-') && !neg_text.contains(['+', '-']) {
                ("-", neg_text)
            } else {
                ("+", text)
            };
            if sign == "-" || !out.is_empty() {
                out.push_str(sign);
            }
            if body == "1" && k > 0 {
                out.push_str(&tpow);
            } else if k == 0 {
                out.push_str(&format!("[{body}]"));
            } else {
                out.push_str(&format!("[{body}]*{tpow}"));
            }
        }
        out
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_add(rhs).expect("context mismatch")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_sub(rhs).expect("context mismatch")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_mul(rhs).expect("context mismatch")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        self.map_coeffs(|c| self.ctx.neg(c))
    }
}
