#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::Arc;
use wedderburn::ring::{random, Backend, Derivation, Elem, Endomorphism, OreContext};
use wedderburn::skewpoly::SkewPoly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ctx(backend: Backend, endo: Endomorphism, deriv: Derivation) -> Arc<OreContext> {
    Arc::new(OreContext::new(backend, endo, deriv).expect("valid context"))
}

pub fn hq() -> Arc<OreContext> {
    Arc::new(OreContext::classical(Backend::Quaternions))
}

pub fn finite(backend: Backend, inner: Option<u32>) -> Arc<OreContext> {
    let d = inner.map_or(Derivation::Zero, |w| Derivation::Inner(Elem::Gf(w)));
    ctx(backend, Endomorphism::Frobenius(1), d)
}

/// One context per backend, with a twist or derivation wherever the
/// backend admits one.
pub fn backends() -> Vec<(&'static str, Arc<OreContext>)> {
    let qx = Backend::RationalFunctions { var: 'x' };
    vec![
        ("Q", ctx(Backend::Rationals, Endomorphism::Identity, Derivation::Zero)),
        ("F4 frob", finite(Backend::f4(), None)),
        ("F8 frob inner", finite(Backend::f8(), Some(2))),
        ("Q(x) d/dx", ctx(qx.clone(), Endomorphism::Identity, Derivation::Formal)),
        ("Q(x) x->x^2", ctx(qx, Endomorphism::SquareVariable, Derivation::Zero)),
        ("HQ", hq()),
        (
            "HQ inner j",
            ctx(Backend::Quaternions, Endomorphism::Identity, Derivation::Inner(OreContext::classical(Backend::Quaternions).elem("j").unwrap())),
        ),
    ]
}

pub fn elem<R: Rng>(ctx: &OreContext, rng: &mut R) -> Elem {
    random::element(ctx.backend(), rng)
}

pub fn nonzero<R: Rng>(ctx: &OreContext, rng: &mut R) -> Elem {
    random::nonzero(ctx.backend(), rng)
}

/// A random polynomial of degree exactly `deg`.
pub fn poly_of_degree<R: Rng>(ctx: &Arc<OreContext>, rng: &mut R, deg: usize) -> SkewPoly {
    let mut cs: Vec<Elem> = (0..deg).map(|_| elem(ctx, rng)).collect();
    cs.push(nonzero(ctx, rng));
    SkewPoly::new(ctx, cs)
}

pub fn poly<R: Rng>(ctx: &Arc<OreContext>, rng: &mut R, max_deg: usize) -> SkewPoly {
    let d = rng.gen_range(0..=max_deg);
    poly_of_degree(ctx, rng, d)
}

/// Brute-force rank oracle over a finite field: the rank of a set is the
/// least degree of a monic polynomial vanishing on it. Only evaluation is
/// used, never the adjoin recursion.
pub struct RankOracle {
    pub universe: Vec<Elem>,
    /// (degree, zero mask) of every monic polynomial up to `max_deg`.
    zero_masks: Vec<(usize, u64)>,
    cache: HashMap<u64, usize>,
}

impl RankOracle {
    pub fn new(ctx: &Arc<OreContext>, max_deg: usize) -> Self {
        let universe = ctx.enumerate().unwrap();
        let mut zero_masks = Vec::new();
        let mut layer = vec![Vec::<Elem>::new()];
        for d in 0..=max_deg {
            for lower in &layer {
                let mut cs = lower.clone();
                cs.push(ctx.one());
                let f = SkewPoly::new(ctx, cs);
                let mask = universe
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| ctx.is_zero(&f.eval(x)))
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                zero_masks.push((d, mask));
            }
            layer = layer
                .iter()
                .flat_map(|l| universe.iter().map(move |c| [vec![c.clone()], l.clone()].concat()))
                .collect();
        }
        RankOracle { universe, zero_masks, cache: HashMap::new() }
    }

    pub fn mask(&self, xs: &[Elem]) -> u64 {
        xs.iter().map(|x| 1u64 << self.universe.iter().position(|u| u == x).unwrap()).fold(0, |a, b| a | b)
    }

    pub fn elements(&self, m: u64) -> Vec<Elem> {
        self.universe.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| x.clone()).collect()
    }

    pub fn rank(&mut self, m: u64) -> usize {
        if let Some(&r) = self.cache.get(&m) {
            return r;
        }
        let r = self
            .zero_masks
            .iter()
            .filter(|(_, z)| z & m == m)
            .map(|(d, _)| *d)
            .min()
            .expect("max_deg too small for oracle");
        self.cache.insert(m, r);
        r
    }

    /// Common zeros of all minimal-degree polynomials vanishing on `m`.
    pub fn closure(&mut self, m: u64) -> u64 {
        let r = self.rank(m);
        self.zero_masks.iter().filter(|(d, z)| *d == r && z & m == m).fold(u64::MAX, |acc, (_, z)| acc & z)
    }

    pub fn zero_mask(&self, f: &SkewPoly) -> u64 {
        let ctx = f.context();
        self.universe.iter().enumerate().filter(|(_, x)| ctx.is_zero(&f.eval(x))).fold(0u64, |m, (i, _)| m | 1 << i)
    }
}
