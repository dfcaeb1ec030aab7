mod common;

use common::*;
use pbw_core::bifilt::BifiltContext;
use pbw_core::groebner::{intersect_left, member, ModRing};
use pbw_core::oracle::{Comparison, Oracle, Span};
use pbw_core::order::dot;
use pbw_core::{Datum, Poly};
use proptest::prelude::*;
use rand::Rng;

const DEGREE: u32 = 6;
const SLACK: u32 = 8;

fn weyl_context() -> BifiltContext {
    BifiltContext::new(a1(), &[-1, 1], &[0, 1]).unwrap()
}

/// Random element of `F_d^v A^ncomp`.
fn in_level<R: Rng>(r: &mut R, d: &Datum, v: &[i64], level: i64, ncomp: usize) -> Poly {
    loop {
        let p = random_poly(r, d, 3, 3, ncomp);
        let p = Poly::from_terms(p.terms.into_iter().filter(|(m, _)| dot(v, &m.exp) <= level));
        if !p.is_zero() {
            return p;
        }
    }
}

/// `F_0^v A`-span of `gens` inside the truncated space.
fn v0_span(o: &Oracle, v: &[i64], gens: &[Poly]) -> Span {
    o.span_of(gens, &|a: &[u32]| dot(v, a) <= 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn omega_inverts_upsilon(seed in any::<u64>(), level in 0i64..=2, ncomp in 1usize..=2) {
        let mut r = rng(seed);
        let ctx = weyl_context();
        let m: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, level, ncomp)).collect();
        let lifted = ctx.upsilon(ncomp, &m, Some(level)).unwrap();
        prop_assert_eq!(ctx.omega(&lifted.level, ncomp, &lifted.elems), m);
        for k in ctx.omega(&lifted.level, ncomp, &lifted.kernel) {
            prop_assert!(k.is_zero());
        }
    }

    #[test]
    fn lifting_preserves_sums(seed in any::<u64>(), level in 0i64..=2) {
        let mut r = rng(seed);
        let ctx = weyl_context();
        let j1: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, level, 1)).collect();
        let j2: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, level, 1)).collect();
        let both: Vec<Poly> = j1.iter().chain(&j2).cloned().collect();
        let y1 = ctx.upsilon(1, &j1, Some(level)).unwrap();
        let y2 = ctx.upsilon(1, &j2, Some(level)).unwrap();
        let y12 = ctx.upsilon(1, &both, Some(level)).unwrap();
        let ring = ModRing::top(ctx.sub_datum().clone(), y12.width()).unwrap();
        let sum: Vec<Poly> = y1.preimage().into_iter().chain(y2.preimage()).collect();
        for p in y12.preimage() {
            prop_assert!(member(&ring, &p, &sum).unwrap().is_some());
        }
        for p in &sum {
            prop_assert!(member(&ring, p, &y12.preimage()).unwrap().is_some());
        }
    }

    #[test]
    fn membership_coefficients_reconstruct(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = weyl_context();
        let gens: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, 1, 1)).collect();
        let c: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, 0, 1)).collect();
        let p = c.iter().zip(&gens).fold(Poly::zero(), |acc, (a, g)| acc.add(&ctx.datum.mul(a, g)));
        let got = ctx.v0_member(1, std::slice::from_ref(&p), &gens).unwrap();
        prop_assert!(got.member);
        let coeffs = &got.coefficients.unwrap()[0];
        let back = coeffs.iter().zip(&gens).fold(Poly::zero(), |acc, (a, g)| acc.add(&ctx.datum.mul(a, g)));
        prop_assert_eq!(back, p);
        for a in coeffs {
            prop_assert!(a.weighted_degree(&ctx.v, &[0]).is_none_or(|k| k <= 0));
        }
    }
}

#[test]
fn lifting_preserves_intersections() {
    let ctx = weyl_context();
    let o = Oracle::new(ctx.datum.clone(), 1, DEGREE, SLACK);
    let mut r = rng(7);
    for case in 0..10 {
        let level = case % 3;
        let j1: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, level, 1)).collect();
        let j2: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, level, 1)).collect();
        let y1 = ctx.upsilon(1, &j1, Some(level)).unwrap();
        let y2 = ctx.upsilon(1, &j2, Some(level)).unwrap();
        let ring = ModRing::top(ctx.sub_datum().clone(), y1.width()).unwrap();
        let meet = intersect_left(&ring, &y1.preimage(), &y2.preimage()).unwrap();
        let pushed = ctx.omega(&y1.level, 1, &meet);
        let lhs = v0_span(&o, &ctx.v, &pushed);
        let rhs = o.intersect(&v0_span(&o, &ctx.v, &j1), &v0_span(&o, &ctx.v, &j2));
        assert_eq!(o.compare(&lhs, &rhs), Comparison::Equal, "case {case}: {j1:?} / {j2:?}");
    }
}

#[test]
fn generated_modules_stay_in_their_level() {
    let ctx = weyl_context();
    let o = Oracle::new(ctx.datum.clone(), 1, DEGREE, SLACK);
    let mut r = rng(11);
    for _ in 0..10 {
        let gens: Vec<Poly> = (0..2).map(|_| random_nonzero(&mut r, &ctx.datum, 3, 3, 1)).collect();
        let bound = ctx.v_degree(&gens).unwrap();
        let span = v0_span(&o, &ctx.v, &gens);
        assert_eq!(o.compare(&o.filtration_part(&span, &ctx.v, &[0], bound), &span), Comparison::Equal);
        let top = o.filtration_part(&span, &ctx.v, &[0], bound - 1);
        assert!(top.dim() < span.dim());
    }
}

fn induced_matches_oracle(ctx: &BifiltContext, v_gens: &[Poly], s: &[i64], ks: std::ops::RangeInclusive<i64>) {
    let ncomp = s.len();
    let fg = ctx.induced_w_filtration(ncomp, v_gens, s).unwrap();
    for (g, t) in fg.gens.iter().zip(&fg.degrees) {
        assert_eq!(g.weighted_degree(&ctx.w, s), Some(*t));
    }
    let o = Oracle::new(ctx.datum.clone(), ncomp, DEGREE, SLACK);
    let module = v0_span(&o, &ctx.v, v_gens);
    for k in ks {
        let expected = o.filtration_part(&module, &ctx.w, s, k);
        let got = o.span_of_indexed(&fg.gens, &|i: usize, a: &[u32]| dot(&ctx.v, a) <= 0 && dot(&ctx.w, a) <= k - fg.degrees[i]);
        assert_eq!(o.compare(&got, &expected), Comparison::Equal, "k = {k}, V = {v_gens:?}, G = {:?}", fg.gens);
    }
}

#[test]
fn induced_filtrations_match_oracle() {
    let ctx = weyl_context();
    induced_matches_oracle(&ctx, &[ctx.datum.one()], &[0], -1..=3);
    induced_matches_oracle(&ctx, &[ctx.datum.parse("x*d").unwrap()], &[1], -1..=3);
    let mut r = rng(3);
    for _ in 0..6 {
        let gens: Vec<Poly> = (0..2).map(|_| in_level(&mut r, &ctx.datum, &ctx.v, 1, 1)).collect();
        induced_matches_oracle(&ctx, &gens, &[0], -1..=3);
    }
    let kx_ctx = BifiltContext::new(kx(), &[-1], &[1]).unwrap();
    induced_matches_oracle(&kx_ctx, &[kx_ctx.datum.parse("x^2").unwrap()], &[0], 0..=4);
}

#[test]
fn graded_generators_are_leading_parts() {
    let ctx = weyl_context();
    let (gr, gens) = ctx.gr_w_of_v(1, &[ctx.datum.parse("x*d").unwrap()], &[0]).unwrap();
    assert!(gr.datum.commutator(&gr.datum.var(0), &gr.datum.var(1)).is_zero());
    assert_eq!(gens, vec![gr.datum.parse("x*d").unwrap()]);
}
