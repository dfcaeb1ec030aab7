//! Weight filtrations: generators of `F_0^u A` and of the levels `F_j^u A`,
//! filtration generators of submodules and associated graded objects.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{commutative_gb, Datum, PbwDatum, Provenance};
use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::homog::{dehomogenize, find_positive_weight, gb_any_ordering, homogenize_algebra};
use crate::linalg::Echelon;
use crate::order::{dot, Order};
use crate::poly::{exp_add, exp_divides, Mon, Poly};

fn is_zero_vec(a: &[u32]) -> bool {
    a.iter().all(|&x| x == 0)
}

fn leq(a: &[u32], b: &[u32]) -> bool {
    exp_divides(a, b)
}

/// Componentwise minimal nonzero solutions of `a . x = 0` in `N^k`, by
/// Contejean-Devie completion.
pub fn minimal_solutions(a: &[i64]) -> Vec<Vec<u32>> {
    let k = a.len();
    let value = |x: &[u32]| dot(a, x);
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut frontier: BTreeSet<Vec<u32>> = (0..k)
        .map(|i| {
            let mut e = vec![0u32; k];
            e[i] = 1;
            e
        })
        .collect();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for x in &frontier {
            if value(x) == 0 && !found.iter().any(|b| leq(b, x)) {
                found.push(x.clone());
            }
        }
        for x in &frontier {
            let vx = value(x);
            if vx == 0 {
                continue;
            }
            for j in 0..k {
                if a[j] * vx < 0 {
                    let mut y = x.clone();
                    y[j] += 1;
                    if !found.iter().any(|b| leq(b, &y)) {
                        next.insert(y);
                    }
                }
            }
        }
        frontier = next;
    }
    found
}

/// Order used to list exponent sets: total degree, then lexicographic.
pub fn exponent_key(a: &[u32]) -> (u64, Vec<u32>) {
    (a.iter().map(|&e| e as u64).sum(), a.to_vec())
}

/// Minimal generating set of the monoid `{a in N^n : <u, a> <= 0}`.
pub fn hilbert_basis_leq(u: &[i64]) -> Vec<Vec<u32>> {
    let mut eq = u.to_vec();
    eq.push(1);
    let mut out: Vec<Vec<u32>> = minimal_solutions(&eq).into_iter().map(|mut x| {
        x.pop();
        x
    }).filter(|x| !is_zero_vec(x)).collect();
    out.sort_by_key(|a| exponent_key(a));
    out.dedup();
    out
}

/// Exponent set `V_j` with `{a : <u, a> <= j} = U_0 + V_j`.
pub fn level_gens(u: &[i64], j: i64) -> Vec<Vec<u32>> {
    let n = u.len();
    if j == 0 {
        return vec![vec![0; n]];
    }
    let deg = |a: &[u32]| dot(u, a);
    let mut cands: Vec<Vec<u32>> = Vec::new();
    if j < 0 {
        let hb = hilbert_basis_leq(u);
        let below: Vec<Vec<u32>> = hb.iter().filter(|a| deg(a) <= j).cloned().collect();
        let between: Vec<Vec<u32>> = hb.iter().filter(|a| j < deg(a) && deg(a) < 0).cloned().collect();
        cands.extend(below);
        // Sums of at most |j| elements of `between` that reach level j.
        let mut layer: BTreeSet<Vec<u32>> = BTreeSet::new();
        layer.insert(vec![0; n]);
        for _ in 0..j.unsigned_abs() {
            let mut next = BTreeSet::new();
            for s in &layer {
                for d in &between {
                    let t = exp_add(s, d);
                    if deg(&t) <= j {
                        cands.push(t);
                    } else {
                        next.insert(t);
                    }
                }
            }
            layer = next;
        }
    } else {
        let neg: Vec<i64> = u.iter().map(|x| -x).collect();
        let gamma: Vec<Vec<u32>> = hilbert_basis_leq(&neg).into_iter().filter(|a| deg(a) > 0 && deg(a) <= j).collect();
        cands.push(vec![0; n]);
        let mut layer: BTreeSet<Vec<u32>> = BTreeSet::new();
        layer.insert(vec![0; n]);
        for _ in 0..j {
            let mut next = BTreeSet::new();
            for s in &layer {
                for g in &gamma {
                    let t = exp_add(s, g);
                    if deg(&t) <= j {
                        cands.push(t.clone());
                        next.insert(t);
                    }
                }
            }
            layer = next;
        }
    }
    minimize_levels(u, cands)
}

/// Drops every `v` that lies in `v' + U_0` for another kept `v'`.
fn minimize_levels(u: &[i64], mut cands: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    cands.sort_by_key(|a| exponent_key(a));
    cands.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for v in cands {
        let covered = kept.iter().any(|w| {
            leq(w, &v) && dot(u, &v.iter().zip(w).map(|(a, b)| a - b).collect::<Vec<u32>>()) <= 0
        });
        if !covered {
            kept.push(v);
        }
    }
    kept
}

/// Multiplicities `l` with `sum l_i basis_i = a`, first found by a
/// depth-first search over the generators in order.
pub fn decompose(a: &[u32], basis: &[Vec<u32>]) -> Option<Vec<u32>> {
    fn go(rest: &[u32], basis: &[Vec<u32>], i: usize, acc: &mut Vec<u32>) -> bool {
        if is_zero_vec(rest) {
            return true;
        }
        if i == basis.len() {
            return false;
        }
        let g = &basis[i];
        let max = g
            .iter()
            .zip(rest)
            .filter(|(x, _)| **x > 0)
            .map(|(x, r)| r / x)
            .min()
            .unwrap_or(0);
        for l in (0..=max).rev() {
            let next: Vec<u32> = rest.iter().zip(g).map(|(r, x)| r - l * x).collect();
            acc[i] = l;
            if go(&next, basis, i + 1, acc) {
                return true;
            }
        }
        acc[i] = 0;
        false
    }
    let mut acc = vec![0u32; basis.len()];
    if go(a, basis, 0, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

/// `prod_i (x^{basis_i})^{l_i}` in `A`, factors in index order.
pub fn monoid_product(d: &PbwDatum, basis: &[Vec<u32>], l: &[u32]) -> Poly {
    let mut acc = d.one();
    for (g, &k) in basis.iter().zip(l) {
        for _ in 0..k {
            acc = d.mul(&acc, &Poly::monomial(g.clone(), 0));
        }
    }
    acc
}

fn largest_term(d: &PbwDatum, p: &Poly) -> Option<(Mon, Coeff)> {
    p.leading(&Order::top(d.order.clone())).map(|(m, c)| (m.clone(), c.clone()))
}

/// Writes an element of `F_0^u A^E` as a combination of ordered products of
/// the monoid generators. The result is a polynomial in one variable per
/// generator; `y^l (e)` stands for `prod (x^{basis_i})^{l_i} (e)`.
pub fn express_in_f0(d: &PbwDatum, u: &[i64], basis: &[Vec<u32>], a: &Poly) -> Result<Poly> {
    let mut rest = d.reduce_ideal(a.clone());
    let mut out = Poly::zero();
    while let Some((m, c)) = largest_term(d, &rest) {
        if dot(u, &m.exp) > 0 {
            return Err(Error::Invalid("element is not in the degree zero part of the filtration".into()));
        }
        let l = decompose(&m.exp, basis)
            .ok_or_else(|| Error::Invalid("exponent is not generated by the monoid generators".into()))?;
        let prod = monoid_product(d, basis, &l).with_comp(m.comp);
        let f = prod.coeff_of(&m);
        let factor = c / f;
        rest.add_scaled(&prod, &-factor.clone());
        out.add_term(Mon::new(l, m.comp), factor);
    }
    Ok(out)
}

/// Inverse of [`express_in_f0`].
pub fn evaluate_f0(d: &PbwDatum, basis: &[Vec<u32>], expr: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &expr.terms {
        out.add_scaled(&monoid_product(d, basis, &m.exp).with_comp(m.comp), c);
    }
    out
}

/// Writes `a` in `F_j^u A^E` as `sum_v q_v x^v` over `v` in `levels` with
/// `q_v` in `F_0^u A^E`.
pub fn express_in_level(d: &PbwDatum, u: &[i64], levels: &[Vec<u32>], a: &Poly) -> Result<Vec<Poly>> {
    let mut rest = d.reduce_ideal(a.clone());
    let mut q = vec![Poly::zero(); levels.len()];
    while let Some((m, c)) = largest_term(d, &rest) {
        let k = levels
            .iter()
            .position(|v| leq(v, &m.exp) && dot(u, &m.exp) - dot(u, v) <= 0)
            .ok_or_else(|| Error::Invalid("element lies above the requested level".into()))?;
        let gamma: Vec<u32> = m.exp.iter().zip(&levels[k]).map(|(a, b)| a - b).collect();
        let prod = d.mul(&Poly::monomial(gamma.clone(), 0), &Poly::monomial(levels[k].clone(), 0)).with_comp(m.comp);
        let factor = c / prod.coeff_of(&m);
        rest.add_scaled(&prod, &-factor.clone());
        q[k].add_term(Mon::new(gamma, m.comp), factor);
    }
    Ok(q)
}

/// Generators `g` with degrees `t_g`, standing for `sum_g F_{k - t_g} A g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltGens {
    pub gens: Vec<Poly>,
    pub degrees: Vec<i64>,
}

impl FiltGens {
    pub fn empty() -> FiltGens {
        FiltGens { gens: Vec::new(), degrees: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Module ordering used for `u[s]`-filtrations.
pub fn filtration_order(d: &PbwDatum, u: &[i64], s: &[i64]) -> Order {
    Order::shifted(u.to_vec(), s.to_vec(), Order::top(d.order.clone()))
}

/// Filtration generators of the submodule generated by `gens` in `A^ncomp`.
pub fn filtration_gens(d: &Datum, ncomp: usize, gens: &[Poly], u: &[i64], s: &[i64]) -> Result<FiltGens> {
    check_shift(ncomp, s)?;
    let order = filtration_order(d, u, s);
    let gb = gb_any_ordering(d, &order, ncomp, gens, true)?;
    let degrees = gb.gens.iter().map(|g| g.weighted_degree(u, s).expect("nonzero basis element")).collect();
    Ok(FiltGens { gens: gb.gens, degrees })
}

fn check_shift(ncomp: usize, s: &[i64]) -> Result<()> {
    if s.len() != ncomp {
        return Err(Error::Dimension(format!("shift vector has {} entries for {ncomp} components", s.len())));
    }
    Ok(())
}

/// `F_0^u A`-generators of `F_k` of a filtration given by generators.
pub fn filtration_piece(d: &PbwDatum, fg: &FiltGens, u: &[i64], k: i64) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, t) in fg.gens.iter().zip(&fg.degrees) {
        for v in level_gens(u, k - t) {
            let p = d.mul(&Poly::monomial(v, 0), g);
            if !p.is_zero() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// The associated graded algebra, on the same variables.
#[derive(Clone, Debug)]
pub struct GradedDatum {
    pub datum: Datum,
    pub u: Vec<i64>,
}

/// `u`-leading parts of the commutation relations.
fn leading_relations(d: &PbwDatum, u: &[i64]) -> Vec<(usize, usize, Coeff, Poly)> {
    d.relations_list()
        .into_iter()
        .map(|(i, j, c, dd)| {
            let top = u[i] + u[j];
            let lt = match dd.weighted_degree(u, &[]) {
                Some(k) if k == top => dd.weighted_leading_part(u, &[]),
                _ => Poly::zero(),
            };
            (i, j, c, lt)
        })
        .collect()
}

pub fn gr_algebra(d: &Datum, u: &[i64]) -> Result<GradedDatum> {
    let rels = leading_relations(d, u);
    let refined = Order::weighted(u.to_vec(), d.order.clone());
    let ideal: Vec<Poly> = if d.ideal.is_empty() {
        Vec::new()
    } else if refined.is_well() {
        d.with_order(refined)?.ideal
    } else {
        let w = find_positive_weight(d, &d.order)?;
        let hd = homogenize_algebra(d, &w, &refined)?;
        hd.datum.ideal.iter().map(dehomogenize).collect()
    };
    let lt: Vec<Poly> = ideal.iter().map(|g| g.weighted_leading_part(u, &[])).collect();
    let provenance = match (&d.provenance, lt.is_empty()) {
        (_, true) => Provenance::Pbw,
        (Provenance::Elementary { .. }, false) => Provenance::Elementary { gens: lt.clone() },
        _ => Provenance::Trusted,
    };
    let lt = if lt.is_empty() { lt } else { commutative_gb(&d.names, &lt, &d.order)? };
    let datum = PbwDatum::new(d.names.clone(), rels, lt, d.order.clone(), provenance)?;
    Ok(GradedDatum { datum: Arc::new(datum), u: u.to_vec() })
}

/// `u[s]`-homogeneous generators of the associated graded module.
pub fn gr_module(d: &Datum, ncomp: usize, gens: &[Poly], u: &[i64], s: &[i64]) -> Result<(GradedDatum, Vec<Poly>)> {
    let gr = gr_algebra(d, u)?;
    let fg = filtration_gens(d, ncomp, gens, u, s)?;
    let out = fg
        .gens
        .iter()
        .map(|g| gr.datum.reduce_ideal(g.weighted_leading_part(u, s)))
        .filter(|g| !g.is_zero())
        .collect();
    Ok((gr, out))
}

/// Presentation of `F_0^v A` by generators `y_i -> x^{images_i}`.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation {
    pub datum: Datum,
    pub images: Vec<Vec<u32>>,
    /// Supplied rather than derived.
    pub trusted: bool,
}

impl SubalgebraPresentation {
    pub fn ngens(&self) -> usize {
        self.images.len()
    }

    /// Weight on the generators induced by a weight on `A`.
    pub fn induced_weight(&self, w: &[i64]) -> Vec<i64> {
        self.images.iter().map(|a| dot(w, a)).collect()
    }

    /// Image in `A^E` of an element of the presented algebra's free module.
    pub fn evaluate(&self, base: &PbwDatum, p: &Poly) -> Poly {
        evaluate_f0(base, &self.images, p)
    }

    /// Preimage of an element of `F_0^v A^E`.
    pub fn pull(&self, base: &PbwDatum, v: &[i64], a: &Poly) -> Result<Poly> {
        let y = express_in_f0(base, v, &self.images, a)?;
        Ok(self.datum.reduce_ideal(y))
    }
}

fn independent(vectors: &[Vec<u32>]) -> bool {
    let mut ech = Echelon::new();
    vectors.iter().all(|v| {
        ech.insert(v.iter().enumerate().filter(|(_, x)| **x > 0).map(|(i, x)| (i, coeff::int(*x as i64))).collect())
    })
}

fn generator_names(d: &PbwDatum, images: &[Vec<u32>]) -> Vec<String> {
    let composite = images.iter().filter(|a| a.iter().sum::<u32>() != 1).count();
    let mut k = 0;
    images
        .iter()
        .map(|a| {
            if a.iter().sum::<u32>() == 1 {
                d.names[a.iter().position(|&x| x == 1).unwrap()].clone()
            } else {
                k += 1;
                if composite == 1 {
                    "z".to_string()
                } else {
                    format!("z{k}")
                }
            }
        })
        .collect()
}

/// Presentation of `F_0^v A` when the monoid `{<v, a> <= 0}` is free and
/// the ideal part only involves variables that are themselves generators.
pub fn subalgebra_presentation(d: &Datum, v: &[i64]) -> Result<SubalgebraPresentation> {
    let n = d.n;
    if v.len() != n {
        return Err(Error::Dimension(format!("weight vector has {} entries, expected {n}", v.len())));
    }
    if v.iter().all(|&x| x == 0) {
        let images = (0..n).map(|i| crate::poly::unit_exp(n, i)).collect();
        return Ok(SubalgebraPresentation { datum: d.clone(), images, trusted: false });
    }
    let mut images = hilbert_basis_leq(v);
    images.sort_by(|a, b| d.order.cmp_exp(a, b));
    if !independent(&images) {
        return Err(Error::Unsupported(
            "degree zero part is not a free monoid; no presentation is derived for it".into(),
        ));
    }
    let s = images.len();
    let var_of = |i: usize| images.iter().position(|a| *a == crate::poly::unit_exp(n, i));
    let mut pulled = Vec::new();
    if !d.ideal.is_empty() {
        let Provenance::Elementary { gens } = &d.provenance else {
            return Err(Error::Unsupported("presentation of a non-elementary quotient".into()));
        };
        for g in gens {
            let mut p = Poly::zero();
            for (m, c) in &g.terms {
                let mut e = vec![0u32; s];
                for (i, &k) in m.exp.iter().enumerate() {
                    if k > 0 {
                        let Some(y) = var_of(i) else {
                            return Err(Error::Unsupported(format!(
                                "ideal part involves {} which is not a generator of the degree zero part",
                                d.names[i]
                            )));
                        };
                        e[y] = k;
                    }
                }
                p.add_term(Mon::new(e, 0), c.clone());
            }
            pulled.push(p);
        }
    }
    let order = Order::Pullback { images: images.clone(), outer: Box::new(d.order.clone()), tie: Box::new(Order::DegLex) };
    let names = generator_names(d, &images);
    let mut rels = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            let xi = Poly::monomial(images[i].clone(), 0);
            let xj = Poly::monomial(images[j].clone(), 0);
            let forward = d.mul(&xi, &xj);
            let backward = d.mul(&xj, &xi);
            let top = Mon::new(exp_add(&images[i], &images[j]), 0);
            let f = backward.coeff_of(&top) / forward.coeff_of(&top);
            let g = backward.sub(&forward.scale(&f));
            let expr = express_in_f0(d, v, &images, &g)?;
            if f.is_zero() {
                return Err(Error::Invalid("degenerate product of monoid generators".into()));
            }
            rels.push((i, j, f, expr));
        }
    }
    let (ideal, provenance) = if pulled.is_empty() {
        (Vec::new(), Provenance::Pbw)
    } else {
        (commutative_gb(&names, &pulled, &order)?, Provenance::Elementary { gens: pulled })
    };
    let datum = PbwDatum::new(names, rels, ideal, order, provenance)?;
    Ok(SubalgebraPresentation { datum: Arc::new(datum), images, trusted: false })
}

/// Degrees `t_p = <w, p>` of the level generators, for weights where the
/// two filtrations are compatible on monomials.
pub fn level_degrees(levels: &[Vec<u32>], w: &[i64]) -> Vec<i64> {
    levels.iter().map(|v| dot(w, v)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::names;

    fn a1() -> Datum {
        Arc::new(PbwDatum::weyl(1, Order::DegLex).unwrap())
    }

    #[test]
    fn hilbert_bases() {
        assert_eq!(hilbert_basis_leq(&[1, -1]), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(hilbert_basis_leq(&[-1, 1]), vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(hilbert_basis_leq(&[0, 0]), vec![vec![0, 1], vec![1, 0]]);
        assert!(hilbert_basis_leq(&[1, 2]).is_empty());
        assert_eq!(hilbert_basis_leq(&[2, -3]), vec![vec![0, 1], vec![1, 1], vec![3, 2]]);
    }

    #[test]
    fn weyl_levels() {
        let v = [-1, 1];
        assert_eq!(level_gens(&v, 0), vec![vec![0, 0]]);
        assert_eq!(level_gens(&v, -2), vec![vec![2, 0]]);
        assert_eq!(level_gens(&v, 2), vec![vec![0, 0], vec![0, 1], vec![0, 2]]);
        assert!(level_gens(&[1, 0], -1).is_empty());
    }

    #[test]
    fn levels_cover_by_brute_force() {
        for u in [[-1i64, 1], [2, -3], [1, -1], [-2, 1], [0, 1]] {
            let hb = hilbert_basis_leq(&u);
            for j in -3..=3 {
                let lv = level_gens(&u, j);
                for a in crate::algebra::monomials_up_to(2, 7) {
                    let inside = dot(&u, &a) <= j;
                    let covered = lv.iter().any(|v| {
                        leq(v, &a) && {
                            let rest: Vec<u32> = a.iter().zip(v).map(|(x, y)| x - y).collect();
                            decompose(&rest, &hb).is_some()
                        }
                    });
                    assert_eq!(inside, covered, "u={u:?} j={j} a={a:?}");
                }
            }
        }
    }

    #[test]
    fn express_x2d() {
        let a = a1();
        let v = [-1, 1];
        let hb = hilbert_basis_leq(&v);
        let p = a.parse("x^2*d").unwrap();
        let e = express_in_f0(&a, &v, &hb, &p).unwrap();
        assert_eq!(evaluate_f0(&a, &hb, &e), p);
        assert_eq!(express_in_f0(&a, &v, &hb, &a.one()).unwrap(), Poly::one(2));
        assert!(express_in_f0(&a, &v, &hb, &a.var(1)).is_err());
        let lv = level_gens(&v, 1);
        let q = express_in_level(&a, &v, &lv, &a.parse("x*d^2 + d").unwrap()).unwrap();
        let back = q.iter().zip(&lv).fold(Poly::zero(), |acc, (qk, l)| acc.add(&a.mul(qk, &Poly::monomial(l.clone(), 0))));
        assert_eq!(back, a.parse("x*d^2 + d").unwrap());
    }

    #[test]
    fn order_filtration_generators() {
        let a = a1();
        let g = a.parse("x*d + 1").unwrap();
        let fg = filtration_gens(&a, 1, &[g.clone()], &[0, 1], &[0]).unwrap();
        assert_eq!(fg, FiltGens { gens: vec![g], degrees: vec![1] });
        let unit = filtration_gens(&a, 1, &[a.var(0), a.var(1)], &[-1, 1], &[0]).unwrap();
        let one = unit.gens.iter().position(|g| *g == a.one()).expect("unit ideal contains 1");
        assert_eq!(unit.degrees[one], 0);
        let piece = filtration_piece(&a, &unit, &[-1, 1], -1);
        assert!(piece.contains(&a.var(0)));
        assert!(piece.iter().all(|p| p.weighted_degree(&[-1, 1], &[0]) <= Some(-1)));
        let kx = Arc::new(PbwDatum::polynomial_ring(names(&["x"]), Order::Lex).unwrap());
        let f = kx.parse("x + x^2").unwrap();
        let fg = filtration_gens(&kx, 1, &[f.clone()], &[-1], &[0]).unwrap();
        assert_eq!(fg, FiltGens { gens: vec![f], degrees: vec![-1] });
    }

    #[test]
    fn pieces() {
        let a = a1();
        let fg = filtration_gens(&a, 1, &[a.var(1)], &[0, 1], &[0]).unwrap();
        assert_eq!(filtration_piece(&a, &fg, &[0, 1], 1), vec![a.var(1)]);
        assert!(filtration_piece(&a, &fg, &[0, 1], 0).is_empty());
    }

    #[test]
    fn graded_weyl() {
        let a = a1();
        let gr = gr_algebra(&a, &[0, 1]).unwrap();
        let g = &gr.datum;
        assert!(g.commutator(&g.var(0), &g.var(1)).is_zero());
        let (_, gens) = gr_module(&a, 1, &[a.parse("x*d + 1").unwrap()], &[0, 1], &[0]).unwrap();
        assert_eq!(gens, vec![a.parse("x*d").unwrap()]);
        let kx = Arc::new(PbwDatum::polynomial_ring(names(&["x"]), Order::DegLex).unwrap());
        let (_, gens) = gr_module(&kx, 1, &[kx.parse("x + x^2").unwrap()], &[1], &[0]).unwrap();
        assert_eq!(gens, vec![kx.parse("x^2").unwrap()]);
    }

    #[test]
    fn weyl_v_presentation() {
        let a = a1();
        let p = subalgebra_presentation(&a, &[-1, 1]).unwrap();
        assert_eq!(p.datum.names, names(&["x", "z"]));
        assert_eq!(p.images, vec![vec![1, 0], vec![1, 1]]);
        let y = &p.datum;
        assert_eq!(y.render(&y.parse("z*x - x*z").unwrap()), "x");
        for (i, j, c, dd) in y.relations_list() {
            let lhs = a.mul(&Poly::monomial(p.images[j].clone(), 0), &Poly::monomial(p.images[i].clone(), 0));
            let rhs = a.mul(&Poly::monomial(p.images[i].clone(), 0), &Poly::monomial(p.images[j].clone(), 0)).scale(&c).add(&p.evaluate(&a, &dd));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(p.induced_weight(&[0, 1]), vec![0, 1]);
        let id = subalgebra_presentation(&a, &[0, 0]).unwrap();
        assert_eq!(id.images, vec![vec![1, 0], vec![0, 1]]);
    }
}
