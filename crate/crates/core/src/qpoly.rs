//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored low degree first and trimmed, so the zero
//! polynomial is the empty vector. This is the workhorse behind the
//! rational-function backend and the norm-polynomial class search for
//! quaternions.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^n`.
    pub fn monomial(c: BigRational, n: usize) -> Self {
        let mut v = vec![BigRational::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`. Runs a primitive remainder sequence over
    /// the integers, which keeps coefficients small.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.add(other).make_monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = (self.primitive_integer(), other.primitive_integer());
        if let Some(g) = heuristic_gcd(&a, &b) {
            return Self::new(g.into_iter().map(BigRational::from_integer).collect()).make_monic();
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive(pseudo_rem(a, &b));
            a = b;
            b = r;
        }
        Self::new(a.into_iter().map(BigRational::from_integer).collect()).make_monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut v = vec![BigRational::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / BigRational::from_integer(BigInt::from(i + 1))),
        );
        Self::new(v)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(x) -> p(x^2)`.
    pub fn compose_square(&self) -> Self {
        let mut v = vec![BigRational::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        Self::new(v)
    }

    /// `p(x) -> p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// For an even polynomial `p(x) = q(x^2)` returns `q`.
    pub fn halve_exponents(&self) -> Option<Self> {
        self.is_even()
            .then(|| Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Monic square-free part `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.make_monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").make_monic()
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    /// Rational roots, each listed once, in increasing order.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return roots;
        }
        let mut p = self.squarefree_part();
        if p.coeff(0).is_zero() {
            roots.push(BigRational::zero());
            p = p.exact_div(&QPoly::x()).expect("x divides");
        }
        if p.is_constant() {
            return roots;
        }
        let ints = p.primitive_integer();
        let lead = ints.last().unwrap().abs();
        let cst = ints[0].abs();
        let small = |n: &BigInt| n.to_u64().is_some_and(|v| v <= 1_000_000_000_000);
        let candidates: Vec<BigRational> = if small(&lead) && small(&cst) {
            let ps = divisors(cst.to_u64().unwrap());
            let qs = divisors(lead.to_u64().unwrap());
            let mut c = Vec::new();
            for &a in &ps {
                for &b in &qs {
                    let r = BigRational::new(BigInt::from(a), BigInt::from(b));
                    c.push(r.clone());
                    c.push(-r);
                }
            }
            c
        } else {
            // Root r = a/b has b | lead, so r * lead is an integer.
            p.complex_roots()
                .into_iter()
                .filter(|z| z.im.abs() < 1e-6 * (1.0 + z.re.abs()))
                .filter_map(|z| {
                    let l = lead.to_f64()?;
                    let n = (z.re * l).round();
                    n.is_finite().then(|| {
                        BigRational::new(BigInt::from(n as i64), lead.clone())
                    })
                })
                .collect()
        };
        for r in candidates {
            if p.eval(&r).is_zero() && !roots.contains(&r) {
                roots.push(r);
            }
        }
        roots.sort();
        roots
    }

    /// Numerical complex roots (Aberth iteration). Intended for square-free input;
    /// callers must verify anything derived from these exactly.
    pub fn complex_roots(&self) -> Vec<Complex64> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Vec::new(),
        };
        let lead = self.leading().unwrap().clone();
        let c: Vec<Complex64> = self
            .coeffs
            .iter()
            .map(|a| Complex64::new((a / &lead).to_f64().unwrap_or(f64::NAN), 0.0))
            .collect();
        let eval = |z: Complex64| -> (Complex64, Complex64) {
            let mut p = Complex64::new(0.0, 0.0);
            let mut dp = Complex64::new(0.0, 0.0);
            for a in c.iter().rev() {
                dp = dp * z + p;
                p = p * z + a;
            }
            (p, dp)
        };
        let radius = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
                Complex64::from_polar(radius * 0.5, theta)
            })
            .collect();
        for _ in 0..2000 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let (p, dp) = eval(z[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let ratio = p / dp;
                let s: Complex64 = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                    .sum();
                let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
            if moved < 1e-15 {
                break;
            }
        }
        z
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| l.is_one())
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Compares by degree first, then coefficients from the top. Used for the
/// deterministic ordering of quaternion conjugacy classes.
pub fn cmp_deg_lex(a: &QPoly, b: &QPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
}

/// Heuristic gcd of primitive integer polynomials: evaluate at a large
/// integer, take the integer gcd and read the polynomial back from its
/// balanced digits. A candidate is accepted only if it divides both inputs,
/// which for this choice of evaluation point proves it is the gcd.
fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let norm = |p: &[BigInt]| p.iter().map(|c| c.abs()).max().unwrap();
    let mut xi = BigInt::from(2) * norm(a).min(norm(b)) + 29;
    for _ in 0..6 {
        let (va, vb) = (horner(a, &xi), horner(b, &xi));
        let mut gamma = va.gcd(&vb);
        let mut g = Vec::new();
        let half = &xi / 2;
        while !gamma.is_zero() {
            let mut d = gamma.mod_floor(&xi);
            if d > half {
                d -= &xi;
            }
            gamma = (gamma - &d) / &xi;
            g.push(d);
        }
        let mut g = primitive(g);
        if g.last().is_some_and(|c| c.is_negative()) {
            g = g.into_iter().map(|c| -c).collect();
        }
        if !g.is_empty() && int_divides(&g, a) && int_divides(&g, b) {
            return Some(g);
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn horner(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Whether `d` divides `p` in `Z[x]`.
fn int_divides(d: &[BigInt], p: &[BigInt]) -> bool {
    let ld = d.last().unwrap();
    let mut r = p.to_vec();
    while r.len() >= d.len() {
        let (q, rem) = r.last().unwrap().div_rem(ld);
        if !rem.is_zero() {
            return false;
        }
        let shift = r.len() - d.len();
        for (i, c) in d.iter().enumerate() {
            r[i + shift] -= &q * c;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r.is_empty()
}

/// Pseudo-remainder of integer polynomials (low degree first, trimmed).
fn pseudo_rem(mut r: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}
