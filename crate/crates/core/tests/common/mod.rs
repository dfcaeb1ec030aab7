#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use pbw_core::algebra::names;
use pbw_core::coeff::{self, Coeff};
use pbw_core::dmod::{build_tx, AffineChart};
use pbw_core::oracle::{Oracle, Span};
use pbw_core::order::dot;
use pbw_core::weights::FiltGens;
use pbw_core::{Datum, FreeElement, Mon, Order, PbwDatum, Poly, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn kxy() -> Datum {
    Arc::new(PbwDatum::polynomial_ring(names(&["x", "y"]), Order::DegLex).unwrap())
}

pub fn kx() -> Datum {
    Arc::new(PbwDatum::polynomial_ring(names(&["x"]), Order::DegLex).unwrap())
}

pub fn a1() -> Datum {
    Arc::new(PbwDatum::weyl(1, Order::DegLex).unwrap())
}

pub fn a2() -> Datum {
    Arc::new(PbwDatum::weyl(2, Order::DegLex).unwrap())
}

pub fn parabola_chart() -> AffineChart {
    let x = names(&["x1", "x2"]);
    let r = PbwDatum::polynomial_ring(x.clone(), Order::DegRevLex).unwrap();
    AffineChart {
        x_names: x,
        y_names: names(&["y1"]),
        ideal: vec![r.parse("x2 - x1^2").unwrap()],
        theta: vec![vec![r.parse("1").unwrap(), r.parse("2*x1").unwrap()]],
        f: vec![r.parse("x1").unwrap()],
    }
}

pub fn parabola() -> Datum {
    Arc::new(build_tx(&parabola_chart()).unwrap())
}

pub fn families() -> Vec<(&'static str, Datum)> {
    vec![("K[x,y]", kxy()), ("A1", a1()), ("A2", a2()), ("parabola", parabola())]
}

pub fn random_exp<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Vec<u32> {
    let deg = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..deg {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// Canonical element with up to `terms` terms of degree at most `max_deg`
/// spread over `ncomp` components.
pub fn random_poly<R: Rng>(rng: &mut R, d: &PbwDatum, terms: usize, max_deg: u32, ncomp: usize) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..terms {
        let e = random_exp(rng, d.n, max_deg);
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        p.add_term(Mon::new(e, rng.gen_range(0..ncomp)), coeff::int(c));
    }
    d.reduce_ideal(p)
}

pub fn random_nonzero<R: Rng>(rng: &mut R, d: &PbwDatum, terms: usize, max_deg: u32, ncomp: usize) -> Poly {
    loop {
        let p = random_poly(rng, d, terms, max_deg, ncomp);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_word_element<R: Rng>(rng: &mut R, n: usize) -> FreeElement {
    let mut f = FreeElement::zero();
    for _ in 0..rng.gen_range(1..4) {
        let len = rng.gen_range(0..5);
        let w = Word((0..len).map(|_| rng.gen_range(0..n)).collect());
        f.add_term((w, 0), coeff::int(rng.gen_range(1..4)));
    }
    f
}

/// Span of `sum_g F_{k - t_g} g` where the multiplier exponents obey `extra`
/// and have `u`-degree at most `k - t_g`.
pub fn generated_span(o: &Oracle, fg: &FiltGens, u: &[i64], k: i64, extra: &dyn Fn(&[u32]) -> bool) -> Span {
    o.span_of_indexed(&fg.gens, &|i: usize, a: &[u32]| dot(u, a) <= k - fg.degrees[i] && extra(a))
}

pub fn all(_: &[u32]) -> bool {
    true
}

/// Independent commutative Buchberger over `Q[x_1..x_n]` on plain maps.
pub mod reference {
    use super::*;

    pub type CPoly = BTreeMap<Vec<u32>, Coeff>;

    fn deglex(a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    }

    fn lead(p: &CPoly) -> Option<(&Vec<u32>, &Coeff)> {
        p.iter().max_by(|x, y| deglex(x.0, y.0))
    }

    fn add_mul(p: &mut CPoly, q: &CPoly, c: &Coeff, shift: &[u32]) {
        for (e, qc) in q {
            let key: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            let v = p.entry(key.clone()).or_insert_with(Coeff::zero);
            *v += qc * c;
            if v.is_zero() {
                p.remove(&key);
            }
        }
    }

    fn divides(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn reduce(p: &CPoly, g: &[CPoly]) -> CPoly {
        let mut p = p.clone();
        let mut rem = CPoly::new();
        while let Some((e, c)) = lead(&p).map(|(e, c)| (e.clone(), c.clone())) {
            let hit = g.iter().find(|h| divides(lead(h).unwrap().0, &e));
            match hit {
                Some(h) => {
                    let (he, hc) = lead(h).unwrap();
                    let shift: Vec<u32> = e.iter().zip(he).map(|(a, b)| a - b).collect();
                    let f = -(c / hc);
                    add_mul(&mut p, h, &f, &shift);
                }
                None => {
                    p.remove(&e);
                    rem.insert(e, c);
                }
            }
        }
        rem
    }

    fn spoly(a: &CPoly, b: &CPoly) -> CPoly {
        let (ea, ca) = lead(a).unwrap();
        let (eb, cb) = lead(b).unwrap();
        let l: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| *x.max(y)).collect();
        let sa: Vec<u32> = l.iter().zip(ea).map(|(x, y)| x - y).collect();
        let sb: Vec<u32> = l.iter().zip(eb).map(|(x, y)| x - y).collect();
        let mut out = CPoly::new();
        add_mul(&mut out, a, &(Coeff::one() / ca), &sa);
        add_mul(&mut out, b, &(-(Coeff::one() / cb)), &sb);
        out
    }

    /// Reduced monic Gröbner basis under deglex, sorted by leading monomial.
    pub fn groebner(gens: &[CPoly]) -> Vec<CPoly> {
        let mut g: Vec<CPoly> = gens.iter().filter(|p| !p.is_empty()).cloned().collect();
        let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            let r = reduce(&spoly(&g[i], &g[j]), &g);
            if !r.is_empty() {
                let k = g.len();
                g.push(r);
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
        let mut min: Vec<CPoly> = Vec::new();
        for (i, p) in g.iter().enumerate() {
            let e = lead(p).unwrap().0;
            let redundant = g.iter().enumerate().any(|(j, q)| {
                let f = lead(q).unwrap().0;
                j != i && divides(f, e) && (f != e || j < i)
            });
            if !redundant {
                min.push(p.clone());
            }
        }
        let mut out: Vec<CPoly> = Vec::new();
        for (i, p) in min.iter().enumerate() {
            let others: Vec<CPoly> = min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            let (e, c) = lead(p).map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let mut tail = p.clone();
            tail.remove(&e);
            let mut r = reduce(&tail, &others);
            r.insert(e, c.clone());
            let inv = Coeff::one() / c;
            out.push(r.into_iter().map(|(e, v)| (e, v * &inv)).collect());
        }
        out.sort_by(|a, b| deglex(lead(a).unwrap().0, lead(b).unwrap().0));
        out
    }

    pub fn from_poly(p: &Poly) -> CPoly {
        p.terms.iter().map(|(m, c)| (m.exp.clone(), c.clone())).collect()
    }

    pub fn to_poly(p: &CPoly) -> Poly {
        Poly::from_terms(p.iter().map(|(e, c)| (Mon::new(e.clone(), 0), c.clone())))
    }
}
