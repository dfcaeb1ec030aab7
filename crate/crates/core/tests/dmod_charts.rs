mod common;

use std::sync::Arc;

use common::*;
use pbw_core::bifilt::BifiltContext;
use pbw_core::dmod::{build_tx, build_txv, check_embedding, hodge_weights, identify_tx0z, AffineChart};
use pbw_core::order::dot;
use pbw_core::weights::FiltGens;
use pbw_core::{Datum, Poly};
use proptest::prelude::*;

fn hodge_parabola() -> (Datum, BifiltContext) {
    let chart = parabola_chart().reembed("t");
    let tx: Datum = Arc::new(build_tx(&chart).unwrap());
    let pres = build_txv(&chart).unwrap();
    check_embedding(&pres, &tx).unwrap();
    let h = hodge_weights(chart.n(), chart.m());
    let ctx = BifiltContext::with_presentation(tx.clone(), &h.v, &h.w, pres).unwrap();
    (tx, ctx)
}

#[test]
fn hodge_levels_agree_with_generic_levels() {
    let (_, ctx) = hodge_parabola();
    let h = hodge_weights(3, 1);
    assert!(ctx.trusted());
    for d in -3..=3 {
        assert_eq!(ctx.level(d), h.level(d), "d = {d}");
    }
}

#[test]
fn structure_sheaf_filtration() {
    let (tx, ctx) = hodge_parabola();
    let fg = ctx.induced_w_filtration(1, &[tx.one()], &[0]).unwrap();
    assert_eq!(fg, FiltGens { gens: vec![tx.one()], degrees: vec![0] });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn v_ring_embedding_is_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (tx, ctx) = hodge_parabola();
        let b = ctx.sub_datum().clone();
        let p = random_poly(&mut r, &b, 2, 2, 1);
        let q = random_poly(&mut r, &b, 2, 2, 1);
        let lhs = ctx.subalg.evaluate(&tx, &b.mul(&p, &q));
        let rhs = tx.mul(&ctx.subalg.evaluate(&tx, &p), &ctx.subalg.evaluate(&tx, &q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parabola_lifts_round_trip(seed in any::<u64>(), level in -1i64..=2) {
        let mut r = rng(seed);
        let (tx, ctx) = hodge_parabola();
        let m: Vec<Poly> = (0..2)
            .map(|_| loop {
                let p = random_poly(&mut r, &tx, 3, 3, 1);
                let p = Poly::from_terms(p.terms.into_iter().filter(|(m, _)| dot(&ctx.v, &m.exp) <= level));
                if !p.is_zero() {
                    break p;
                }
            })
            .collect();
        let lifted = ctx.upsilon(1, &m, Some(level)).unwrap();
        prop_assert_eq!(ctx.omega(&lifted.level, 1, &lifted.elems), m);
    }
}

#[test]
fn divisor_of_the_plane() {
    let id = identify_tx0z(&AffineChart::affine_space(2)).unwrap();
    let weyl = pbw_core::PbwDatum::weyl(1, pbw_core::Order::DegLex).unwrap();
    let t0 = build_tx(&id.divisor_chart).unwrap();
    assert_eq!(t0.relations_list(), weyl.relations_list());
    let q = &id.quotient;
    let mut r = rng(5);
    for _ in 0..10 {
        let a = random_poly(&mut r, q, 2, 2, 1);
        let z = q.var(q.n - 1);
        assert_eq!(q.mul(&z, &a), q.mul(&a, &z));
    }
}

#[test]
fn charts_with_wrong_derivations_are_rejected() {
    let mut c = parabola_chart();
    c.theta[0][1] = c.theta[0][1].scale(&pbw_core::coeff::int(3));
    assert!(c.validate().is_err());
    assert!(build_tx(&c).is_err());
    assert!(build_txv(&parabola_chart()).is_err());
}
