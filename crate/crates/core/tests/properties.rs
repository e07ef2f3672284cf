mod common;

use common::{backends, finite, hq, nonzero, poly, poly_of_degree, rng};
use proptest::prelude::*;
use std::sync::Arc;
use wedderburn::algset::{closure, is_p_independent, minimal_polynomial};
use wedderburn::eval::{phi_transform, right_roots};
use wedderburn::metro::{metro_lhs, solve_metro, MetroStatus};
use wedderburn::parse::{parse_element, parse_polynomial};
use wedderburn::ring::{Backend, Derivation, Elem, Endomorphism, OreContext, RatFunc};
use wedderburn::skewpoly::SkewPoly;
use wedderburn::wedd::expspace::{dimension_sum, finite_classes};
use wedderburn::wedd::{diagonalization_check, is_wedderburn};
use wedderburn::Error;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn contexts() -> Vec<(&'static str, Arc<OreContext>)> {
    backends()
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn endomorphism_and_derivation_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in contexts() {
            let (a, b) = (common::elem(&ctx, &mut r), common::elem(&ctx, &mut r));
            let ab = ctx.mul(&a, &b);
            prop_assert_eq!(ctx.apply_s(&ab), ctx.mul(&ctx.apply_s(&a), &ctx.apply_s(&b)), "{}", name);
            let leibniz = ctx.add(&ctx.mul(&ctx.apply_s(&a), &ctx.apply_d(&b)), &ctx.mul(&ctx.apply_d(&a), &b));
            prop_assert_eq!(ctx.apply_d(&ab), leibniz, "{}", name);
            if !ctx.is_zero(&a) {
                let inv = ctx.inv(&a);
                prop_assert!(ctx.mul(&a, &inv) == ctx.one() && ctx.mul(&inv, &a) == ctx.one());
            }
        }
    }

    #[test]
    fn square_image_is_evenness(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = common::ctx(Backend::RationalFunctions { var: 'x' }, Endomorphism::SquareVariable, Derivation::Zero);
        let mut a = common::elem(&ctx, &mut r);
        if seed % 2 == 0 {
            a = ctx.apply_s(&a);
        }
        let Elem::Func(f) = &a else { unreachable!() };
        let reflected = RatFunc::new(f.num().reflect(), f.den().reflect());
        prop_assert_eq!(ctx.in_s_image(&a).unwrap(), reflected == *f);
    }

    #[test]
    fn right_division(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in contexts() {
            let f = poly(&ctx, &mut r, 4);
            let g = poly(&ctx, &mut r, 2);
            let (q, rem) = f.right_divmod(&g).unwrap();
            prop_assert!(rem.is_zero() || rem.deg() < g.deg(), "{}", name);
            prop_assert_eq!(&(&q * &g) + &rem, f, "{}", name);
        }
    }

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in contexts() {
            let (f, g, h) = (poly(&ctx, &mut r, 2), poly(&ctx, &mut r, 2), poly(&ctx, &mut r, 2));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h), "{}", name);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h), "{}", name);
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h), "{}", name);
        }
    }

    #[test]
    fn transform_stays_in_class(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in contexts() {
            let h = poly(&ctx, &mut r, 2);
            let x = common::elem(&ctx, &mut r);
            let hx = h.eval(&x);
            match phi_transform(&h, &x) {
                Ok(y) => prop_assert_eq!(y, ctx.conjugate(&x, &hx).unwrap(), "{}", name),
                Err(_) => prop_assert!(ctx.is_zero(&hx), "{}", name),
            }
        }
    }

    #[test]
    fn metro_solutions_substitute(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in [("F8", finite(Backend::f8(), Some(3))), ("HQ", hq()), ("Q", contexts()[0].1.clone())] {
            let (a, b, c) = (common::elem(&ctx, &mut r), common::elem(&ctx, &mut r), nonzero(&ctx, &mut r));
            let rep = solve_metro(&ctx, &a, &b, &c).unwrap();
            if let MetroStatus::Solution(x) = &rep.status {
                prop_assert_eq!(metro_lhs(&ctx, &a, &b, x), c, "{}", name);
            }
            prop_assert_eq!(solve_metro(&ctx, &a, &b, &ctx.zero()).unwrap_err(), Error::ZeroC);
            prop_assert!(ctx.is_zero(&metro_lhs(&ctx, &a, &b, &ctx.zero())));
        }
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn llcm_and_rgcd_divide(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in contexts().into_iter().filter(|(_, c)| !matches!(c.backend(), Backend::RationalFunctions { .. })) {
            let c = poly_of_degree(&ctx, &mut r, 1);
            let f = &poly(&ctx, &mut r, 2) * &c;
            let g = &poly(&ctx, &mut r, 2) * &c;
            let (d, m) = f.rgcd_llcm(&g).unwrap();
            prop_assert!(f.right_divisible_by(&d).unwrap() && g.right_divisible_by(&d).unwrap(), "{}", name);
            prop_assert!(m.right_divisible_by(&f).unwrap() && m.right_divisible_by(&g).unwrap(), "{}", name);
            prop_assert!(d.right_divisible_by(&c.monic()).unwrap(), "{}", name);
            prop_assert_eq!(f.deg() + g.deg(), d.deg() + m.deg());
        }
    }

    #[test]
    fn minimal_polynomial_properties(seed in any::<u64>(), n in 1usize..5) {
        let mut r = rng(seed);
        for ctx in [finite(Backend::f8(), Some(2)), hq()] {
            let gens: Vec<Elem> = (0..n).map(|_| common::elem(&ctx, &mut r)).collect();
            let m = minimal_polynomial(&ctx, &gens);
            prop_assert!(gens.iter().all(|a| ctx.is_zero(&m.poly.eval(a))));
            // any polynomial vanishing on the set is a left multiple
            let common_multiple = gens.iter().fold(SkewPoly::one(&ctx), |acc, a| acc.llcm(&SkewPoly::linear(&ctx, a)).unwrap());
            let vanishing = &poly(&ctx, &mut r, 2) * &common_multiple;
            prop_assert!(gens.iter().all(|a| ctx.is_zero(&vanishing.eval(a))));
            prop_assert!(vanishing.right_divisible_by(&m.poly).unwrap());
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(&minimal_polynomial(&ctx, &rev).poly, &m.poly);
            prop_assert!(m.rank() <= gens.len());
            let mut distinct = gens.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(m.rank() == distinct.len(), is_p_independent(&ctx, &distinct));
            if ctx.capabilities().finitely_enumerable {
                let cl = closure(&ctx, &gens, None).unwrap();
                prop_assert_eq!(minimal_polynomial(&ctx, &cl).poly, m.poly);
            }
        }
    }

    #[test]
    fn certificates_are_sound(seed in any::<u64>()) {
        let mut r = rng(seed);
        for ctx in [finite(Backend::f4(), Some(2)), finite(Backend::f8(), None), hq()] {
            let f = poly_of_degree(&ctx, &mut r, 1 + (seed % 3) as usize).monic();
            let cert = is_wedderburn(&f).unwrap();
            prop_assert!(cert.verify());
            if let Some(roots) = cert.is_w().then(|| cert.roots().to_vec()) {
                prop_assert!(diagonalization_check(&f, &roots).unwrap());
            }
            if ctx.capabilities().finitely_enumerable {
                let reps: Vec<Elem> = finite_classes(&ctx).unwrap().into_iter().map(|c| c[0].clone()).collect();
                let (sum, _) = dimension_sum(&f, &reps).unwrap();
                prop_assert!(sum <= f.deg());
                prop_assert_eq!(sum == f.deg(), cert.is_w());
                let roots = right_roots(&f, None).unwrap();
                prop_assert_eq!(minimal_polynomial(&ctx, &roots).poly == f, cert.is_w());
            }
        }
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn parse_format_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, ctx) in contexts() {
            let a = common::elem(&ctx, &mut r);
            prop_assert_eq!(parse_element(&ctx.fmt(&a), &ctx).unwrap(), a, "{}", name);
            let f = poly(&ctx, &mut r, 3);
            prop_assert_eq!(parse_polynomial(&f.to_string(), &ctx).unwrap(), f, "{}", name);
        }
    }
}
