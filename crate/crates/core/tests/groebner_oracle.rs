mod common;

use std::cmp::Ordering;

use common::*;
use pbw_core::groebner::{
    buchberger, compare_leads, intersect_left, is_groebner, member, normal_form, pair_with, spoly, syzygies,
    ModRing,
};
use pbw_core::oracle::{Comparison, Oracle};
use pbw_core::{Datum, Poly};
use proptest::prelude::*;
use rand::Rng;

fn inputs<R: Rng>(r: &mut R, d: &Datum, ncomp: usize) -> Vec<Poly> {
    let k = r.gen_range(1..=3);
    (0..k).map(|_| random_nonzero(r, d, 2, 2, ncomp)).collect()
}

/// Inputs for the syzygy-based tests. Quadratic syzygy problems over A2 can
/// take minutes in a debug build, so A2 gets linear generators there.
fn syz_inputs<R: Rng>(r: &mut R, name: &str, d: &Datum) -> Vec<Poly> {
    let k = r.gen_range(1..=2);
    let deg = if name == "A2" { 1 } else { 2 };
    (0..k).map(|_| random_nonzero(r, d, 2, deg, 1)).collect()
}

fn same_set(a: &[Poly], b: &[Poly]) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.contains(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bases_are_closed(seed in any::<u64>(), ncomp in 1usize..=2) {
        let mut r = rng(seed);
        for (_, d) in families() {
            let ctx = ModRing::top(d.clone(), ncomp).unwrap();
            let gens = inputs(&mut r, &d, ncomp);
            let gb = buchberger(&ctx, &gens, true).unwrap();
            prop_assert!(is_groebner(&ctx, &gb.gens));
            for g in &gens {
                prop_assert!(normal_form(&ctx, g, &gb.gens, false).0.is_zero());
            }
            for a in &gb.gens {
                for b in &gb.gens {
                    let s = spoly(&ctx, a, b);
                    prop_assert!(normal_form(&ctx, &s, &gb.gens, false).0.is_zero());
                }
            }
        }
    }

    #[test]
    fn standard_representation(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, d) in families() {
            let ctx = ModRing::top(d.clone(), 1).unwrap();
            let gb = buchberger(&ctx, &inputs(&mut r, &d, 1), true).unwrap();
            let a = random_nonzero(&mut r, &d, 4, 4, 1);
            let (rem, q) = normal_form(&ctx, &a, &gb.gens, false);
            let mut total = rem.clone();
            for (qi, gi) in q.iter().zip(&gb.gens) {
                let prod = ctx.mul(qi, gi);
                prop_assert_ne!(compare_leads(&ctx, &prod, &a), Ordering::Greater);
                total = total.add(&prod);
            }
            prop_assert_eq!(total, a);
            if let Some((m, _)) = ctx.lead(&rem) {
                for g in &gb.gens {
                    prop_assert!(!ctx.lead(g).unwrap().0.divides(&m));
                }
            }
        }
    }

    #[test]
    fn reduced_basis_ignores_input_order(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, d) in families() {
            let ctx = ModRing::top(d.clone(), 1).unwrap();
            let gens = inputs(&mut r, &d, 1);
            let mut shuffled = gens.clone();
            shuffled.reverse();
            let g1 = buchberger(&ctx, &gens, true).unwrap().gens;
            let g2 = buchberger(&ctx, &shuffled, true).unwrap().gens;
            prop_assert!(same_set(&g1, &g2));
        }
    }

    #[test]
    fn membership_returns_certificates(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, d) in families() {
            let ctx = ModRing::top(d.clone(), 1).unwrap();
            let gens = inputs(&mut r, &d, 1);
            let mut m = Poly::zero();
            for g in &gens {
                let c = random_poly(&mut r, &d, 2, 2, 1);
                m = m.add(&d.mul(&c, g));
            }
            let coeffs = member(&ctx, &m, &gens).unwrap().expect("combination is a member");
            let back = coeffs.iter().zip(&gens).fold(Poly::zero(), |acc, (c, g)| acc.add(&d.mul(c, g)));
            prop_assert_eq!(back, m);
        }
    }

    #[test]
    fn syzygies_vanish(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, d) in families() {
            let h = syz_inputs(&mut r, name, &d);
            for a in syzygies(&d, &h, 1).unwrap() {
                prop_assert!(pair_with(&d, &a, &h).is_zero());
            }
        }
    }
}

const DEGREE: u32 = 5;

/// Reducing modulo the ideal lowers degree in the parabola, so products above
/// the bound can still land below it.
fn slack(family: &str) -> u32 {
    if family == "parabola" {
        3
    } else {
        0
    }
}

/// Span of `M_{<= DEGREE}` from a Gröbner basis under a degree-compatible order.
fn truncated(o: &Oracle, ctx: &ModRing, gens: &[Poly]) -> pbw_core::oracle::Span {
    let gb = buchberger(ctx, gens, true).unwrap();
    o.span_of(&gb.gens, &all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn membership_matches_linear_algebra(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, d) in families() {
            let ctx = ModRing::top(d.clone(), 1).unwrap();
            let gens = inputs(&mut r, &d, 1);
            let o = Oracle::new(d.clone(), 1, DEGREE, slack(name));
            let span = truncated(&o, &ctx, &gens);
            for _ in 0..4 {
                let p = random_poly(&mut r, &d, 3, DEGREE, 1);
                let gb_says = member(&ctx, &p, &gens).unwrap().is_some();
                prop_assert_eq!(gb_says, o.contains(&span, &p));
            }
        }
    }

    #[test]
    fn intersection_matches_linear_algebra(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (name, d) in families() {
            let ctx = ModRing::top(d.clone(), 1).unwrap();
            let m1 = syz_inputs(&mut r, name, &d);
            let m2 = syz_inputs(&mut r, name, &d);
            let o = Oracle::new(d.clone(), 1, DEGREE, slack(name));
            let low = |s: &pbw_core::oracle::Span| o.restrict(s, &|m: &pbw_core::Mon| m.degree() <= u64::from(DEGREE));
            let meet = intersect_left(&ctx, &m1, &m2).unwrap();
            let lhs = low(&o.span_of(&meet, &all));
            let rhs = o.intersect(&low(&truncated(&o, &ctx, &m1)), &low(&truncated(&o, &ctx, &m2)));
            prop_assert_eq!(o.compare(&lhs, &rhs), Comparison::Equal);
        }
    }
}
