//! Finite fields `F_p[w]/(m(w))`.
//!
//! An element is packed into a `u32` as its base-`p` digit string
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, where `c_i` is the coefficient of
//! `w^i`. Enumerating `0..q` in numeric order is therefore the canonical
//! enumeration order (zero first, then coefficient sequences read from the
//! top coefficient down).

use crate::error::{Error, Result};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    /// Monic modulus, low degree first, length `k + 1`.
    modulus: Vec<u32>,
    order: u32,
    tables: Option<Arc<Tables>>,
}

#[derive(Debug)]
struct Tables {
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

const TABLE_LIMIT: u32 = 256;

impl FiniteField {
    /// Builds `F_p[w]/(modulus)`; `modulus` is monic, low degree first.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::InvalidContext(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidContext("modulus must be monic with reduced coefficients".into()));
        }
        let k = (modulus.len() - 1) as u32;
        let order = p
            .checked_pow(k)
            .filter(|&q| q <= 1 << 24)
            .ok_or_else(|| Error::InvalidContext("field too large".into()))?;
        let mut field = FiniteField { p, k, modulus, order, tables: None };
        if !field.modulus_is_irreducible() {
            return Err(Error::InvalidContext("modulus is reducible".into()));
        }
        if order <= TABLE_LIMIT {
            let q = order as usize;
            let mut mul = vec![0u32; q * q];
            for a in 0..order {
                for b in 0..order {
                    mul[a as usize * q + b as usize] = field.mul_raw(a, b);
                }
            }
            let mut inv = vec![0u32; q];
            for a in 1..order {
                inv[a as usize] = (1..order).find(|&b| mul[a as usize * q + b as usize] == 1).unwrap();
            }
            field.tables = Some(Arc::new(Tables { mul, inv }));
        }
        Ok(field)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, vec![0, 1])
    }

    /// `F_4 = F_2[w]/(w^2 + w + 1)`.
    pub fn f4() -> Self {
        Self::new(2, vec![1, 1, 1]).expect("w^2+w+1 is irreducible")
    }

    /// `F_8 = F_2[w]/(w^3 + w + 1)`.
    pub fn f8() -> Self {
        Self::new(2, vec![1, 1, 0, 1]).expect("w^3+w+1 is irreducible")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    pub fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    /// Embeds an integer through the prime field.
    pub fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// The class of `w`; equals the prime-field image of 0 when `k = 1`.
    pub fn generator(&self) -> u32 {
        if self.k == 1 {
            (self.p - self.modulus[0]) % self.p
        } else {
            self.p
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&s)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.order as usize + b as usize],
            None => self.mul_raw(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.inv[a as usize]),
            // a^(q-2)
            None => Some(self.pow(a, (self.order - 2) as u64)),
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a -> a^(p^e)`.
    pub fn frobenius(&self, a: u32, e: u32) -> u32 {
        let mut x = a;
        for _ in 0..(e % self.k.max(1)) {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                for (j, &m) in self.modulus.iter().enumerate().take(k) {
                    let idx = deg - k + j;
                    prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
                }
                prod[deg] = 0;
            }
        }
        let d: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack(&d)
    }

    fn modulus_is_irreducible(&self) -> bool {
        let k = self.k as usize;
        if k == 1 {
            return true;
        }
        // Trial division by every monic polynomial of degree 1..=k/2.
        let p = self.p as u64;
        for d in 1..=k / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut div = Vec::with_capacity(d + 1);
                let mut n = idx;
                for _ in 0..d {
                    div.push(n % p);
                    n /= p;
                }
                div.push(1);
                if poly_rem_mod_p(&self.modulus.iter().map(|&c| c as u64).collect::<Vec<_>>(), &div, p)
                    .iter()
                    .all(|&c| c == 0)
                {
                    return false;
                }
            }
        }
        true
    }
}

fn poly_rem_mod_p(a: &[u64], monic: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let c = r.pop().unwrap();
        if c != 0 {
            let base = r.len() - d;
            for (j, &m) in monic.iter().enumerate().take(d) {
                r[base + j] = (r[base + j] + (p - c) * m % p) % p;
            }
        }
    }
    r
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_arithmetic() {
        let f = FiniteField::f4();
        let w = f.generator();
        assert_eq!(w, 2);
        // w^2 = w + 1
        assert_eq!(f.mul(w, w), 3);
        assert_eq!(f.mul(w, 3), 1);
        assert_eq!(f.inv(w), Some(3));
        assert_eq!(f.frobenius(w, 1), 3);
    }

    #[test]
    fn f8_every_nonzero_element_inverts() {
        let f = FiniteField::f8();
        for a in 1..8 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // w^2 + 1 = (w + 1)^2 over F_2
        assert!(FiniteField::new(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::new(4, vec![1, 1]).is_err());
    }

    #[test]
    fn larger_field_without_tables() {
        // F_3[w]/(w^6 + 2w^4 + w^2 + 2w + 2) has 729 elements; pick an
        // irreducible sextic by search instead of trusting a literal.
        let f = (0..729u32)
            .filter_map(|n| {
                let mut m: Vec<u32> = (0..6).map(|i| n / 3u32.pow(i) % 3).collect();
                m.push(1);
                FiniteField::new(3, m).ok()
            })
            .next()
            .unwrap();
        assert_eq!(f.order(), 729);
        for a in [1, 2, 5, 100, 728] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
