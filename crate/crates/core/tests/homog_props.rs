mod common;

use common::*;
use pbw_core::groebner::{buchberger, ModRing};
use pbw_core::homog::{
    dehomogenize, dehomogenize_free, find_positive_weight, gb_any_ordering, homogenize, homogenize_algebra, homogenize_free,
    is_weight_vector, lift_to,
};
use pbw_core::oracle::{Comparison, Oracle};
use pbw_core::weights::{filtration_gens, filtration_order};
use pbw_core::{Datum, Order, Poly};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dehomogenization_inverts_homogenization(seed in any::<u64>(), w in prop::collection::vec(0i64..4, 2), s in prop::collection::vec(-2i64..3, 2)) {
        let mut r = rng(seed);
        let d = a1();
        let p = random_poly(&mut r, &d, 5, 4, 2);
        let hp = homogenize(&p, &w, &s).unwrap();
        prop_assert_eq!(dehomogenize(&hp), p.clone());
        if let Some(top) = p.weighted_degree(&w, &s) {
            let lw: Vec<i64> = std::iter::once(1).chain(w.iter().copied()).collect();
            prop_assert!(hp.is_homogeneous(&lw, &s));
            prop_assert_eq!(hp.weighted_degree(&lw, &s), Some(top));
        }
        let f = random_word_element(&mut r, 2);
        let hf = homogenize_free(&f, 2, &w, &[0]).unwrap();
        prop_assert_eq!(dehomogenize_free(&hf), f);
    }
}

#[test]
fn negative_weights_are_rejected() {
    let p = kxy().parse("x + y").unwrap();
    assert!(homogenize(&p, &[1, -1], &[]).is_err());
}

#[test]
fn positive_weights_respect_relations() {
    for (_, d) in families() {
        let w = find_positive_weight(&d, &d.order).unwrap();
        assert!(w.iter().all(|&x| x > 0), "{w:?}");
        assert!(is_weight_vector(&d, &w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn homogenized_leads_dehomogenize(seed in any::<u64>()) {
        let mut r = rng(seed);
        for (_, d) in families() {
            let w = find_positive_weight(&d, &d.order).unwrap();
            let hd = homogenize_algebra(&d, &w, &d.order).unwrap();
            let up = Order::homogenized(w.clone(), d.order.clone());
            let p = random_nonzero(&mut r, &d, 4, 4, 1);
            let hp = lift_to(&hd, &p).unwrap();
            prop_assert!(hp.is_homogeneous(&hd.lifted_weight(), &[]));
            let lead_up = Poly::monomial(hp.lead_mon(&up).unwrap().exp, 0);
            let lead_down = p.lead_mon(&d.order).unwrap();
            prop_assert_eq!(dehomogenize(&lead_up).lead_mon(&d.order).unwrap(), lead_down);
        }
    }

    #[test]
    fn weighted_bases_are_computed_upstairs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cases: Vec<(Datum, Vec<i64>)> = vec![(a1(), vec![-1, 1]), (a1(), vec![1, -1]), (kxy(), vec![-1, 0]), (a2(), vec![-1, 0, 1, 0])];
        for (d, u) in cases {
            let gens = vec![random_nonzero(&mut r, &d, 2, 2, 1)];
            let basis = gb_any_ordering(&d, &filtration_order(&d, &u, &[0]), 1, &gens, true).unwrap();
            prop_assert!(basis.weight.is_some());
            prop_assert!(!basis.gens.is_empty());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn members_lie_in_generated_piece(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = a1();
        let u = vec![-1, 1];
        let s = vec![0, r.gen_range(-1..=1)];
        let gens = vec![random_nonzero(&mut r, &d, 2, 2, 2), random_nonzero(&mut r, &d, 2, 2, 2)];
        let fg = filtration_gens(&d, 2, &gens, &u, &s).unwrap();
        for (g, t) in fg.gens.iter().zip(&fg.degrees) {
            prop_assert_eq!(g.weighted_degree(&u, &s), Some(*t));
        }
        let mut m = Poly::zero();
        for g in &gens {
            m = m.add(&d.mul(&random_poly(&mut r, &d, 2, 1, 1), g));
        }
        prop_assume!(!m.is_zero() && m.total_degree().unwrap() <= DEGREE as u64);
        let k = m.weighted_degree(&u, &s).unwrap();
        let o = Oracle::new(d.clone(), 2, DEGREE, SLACK);
        prop_assert!(o.contains(&generated_span(&o, &fg, &u, k, &all), &m));
    }
}

const DEGREE: u32 = 6;
const SLACK: u32 = 4;

#[test]
fn filtration_pieces_match_oracle() {
    let d = a1();
    let u = vec![-1, 1];
    let mut r = rng(4);
    for case in 0..10 {
        let ncomp = 1 + case % 2;
        let s: Vec<i64> = (0..ncomp).map(|e| if e == 0 { 0 } else { r.gen_range(-1..=1) }).collect();
        let gens: Vec<Poly> = (0..r.gen_range(1..=2)).map(|_| random_nonzero(&mut r, &d, 2, 2, ncomp)).collect();
        let fg = filtration_gens(&d, ncomp, &gens, &u, &s).unwrap();
        let o = Oracle::new(d.clone(), ncomp, DEGREE, SLACK);
        let ctx = ModRing::top(d.clone(), ncomp).unwrap();
        let gb = buchberger(&ctx, &gens, true).unwrap();
        let module = o.span_of(&gb.gens, &all);
        for k in -3..=3 {
            let expected = o.filtration_part(&module, &u, &s, k);
            let got = generated_span(&o, &fg, &u, k, &all);
            assert_eq!(o.compare(&got, &expected), Comparison::Equal, "case {case}, k = {k}, gens {gens:?}");
        }
    }
}
