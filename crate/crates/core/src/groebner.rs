//! Left Gröbner bases of submodules of free modules over a PBW-reduction algebra.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::Datum;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::order::Order;
use crate::poly::{exp_lcm, Mon, Poly};

/// A free module `A^E` with a well module ordering. The datum's ordering is
/// the restriction of the module ordering.
#[derive(Clone, Debug)]
pub struct ModRing {
    pub datum: Datum,
    pub order: Order,
    pub ncomp: usize,
}

impl ModRing {
    pub fn new(datum: Datum, order: Order, ncomp: usize) -> Result<ModRing> {
        order.check_arity(datum.n)?;
        if !order.is_well() {
            return Err(Error::NotWellOrdered(format!("{order:?}")));
        }
        let restricted = order.restrict();
        let datum = if restricted != datum.order { Arc::new(datum.with_order(restricted)?) } else { datum };
        Ok(ModRing { datum, order, ncomp })
    }

    /// Term-over-position ordering built on the datum's own ordering.
    pub fn top(datum: Datum, ncomp: usize) -> Result<ModRing> {
        let order = Order::top(datum.order.clone());
        ModRing::new(datum, order, ncomp)
    }

    pub fn n(&self) -> usize {
        self.datum.n
    }

    pub fn canon(&self, p: &Poly) -> Poly {
        self.datum.reduce_ideal(p.clone())
    }

    pub fn lead(&self, p: &Poly) -> Option<(Mon, Coeff)> {
        p.leading(&self.order).map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn monic(&self, p: &Poly) -> Poly {
        p.monic(&self.order)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.datum.mul(a, b)
    }
}

/// Result of a Gröbner basis computation.
#[derive(Clone, Debug)]
pub struct GBasis {
    pub gens: Vec<Poly>,
    /// `lifts[k][i]`: coefficient of input `i` in `gens[k]`.
    pub lifts: Option<Vec<Vec<Poly>>>,
    pub reduced: bool,
}

fn lead_or_panic(ctx: &ModRing, p: &Poly) -> (Mon, Coeff) {
    ctx.lead(p).expect("nonzero element")
}

/// Left normal form; returns the remainder and the quotients.
pub fn normal_form(ctx: &ModRing, a: &Poly, g: &[Poly], reduced: bool) -> (Poly, Vec<Poly>) {
    let leads: Vec<Option<Mon>> = g.iter().map(|x| ctx.lead(x).map(|(m, _)| m)).collect();
    let mut p = ctx.canon(a);
    let mut rem = Poly::zero();
    let mut quot = vec![Poly::zero(); g.len()];
    while let Some((m, c)) = ctx.lead(&p) {
        let hit = leads.iter().position(|l| l.as_ref().is_some_and(|l| l.divides(&m)));
        match hit {
            Some(k) => {
                let gamma = leads[k].as_ref().unwrap().quotient(&m);
                let prod = ctx.datum.mul_mono_left(&gamma, &g[k]);
                let lc = prod.coeff_of(&m);
                let f = c / lc;
                p.add_scaled(&prod, &-f.clone());
                quot[k].add_term(Mon::new(gamma, 0), f);
            }
            None => {
                if !reduced {
                    rem.add_scaled(&p, &Coeff::one());
                    break;
                }
                p.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
    }
    (rem, quot)
}

/// S-polynomial of two elements.
pub fn spoly(ctx: &ModRing, a: &Poly, b: &Poly) -> Poly {
    let (Some((ma, _)), Some((mb, _))) = (ctx.lead(a), ctx.lead(b)) else { return Poly::zero() };
    if ma.comp != mb.comp {
        return Poly::zero();
    }
    let lcm = exp_lcm(&ma.exp, &mb.exp);
    if ctx.datum.in_lead_ideal(&lcm) {
        return Poly::zero();
    }
    let target = Mon::new(lcm.clone(), ma.comp);
    let xa = ctx.datum.mul_mono_left(&Mon::new(ma.exp.clone(), ma.comp).quotient(&target), a);
    let xb = ctx.datum.mul_mono_left(&Mon::new(mb.exp.clone(), mb.comp).quotient(&target), b);
    let ca = Coeff::one() / xa.coeff_of(&target);
    let cb = Coeff::one() / xb.coeff_of(&target);
    let mut s = xa.scale(&ca);
    s.add_scaled(&xb, &-cb);
    s
}

/// S-polynomial of an element against an ideal generator on component `comp`.
pub fn spoly_ideal(ctx: &ModRing, a: &Poly, p: &Poly, comp: usize) -> Poly {
    let Some((ma, _)) = ctx.lead(a) else { return Poly::zero() };
    if ma.comp != comp {
        return Poly::zero();
    }
    let lp = p.lead_mon(&ctx.datum.order).expect("nonzero ideal generator");
    let c: Vec<u32> = ma.exp.iter().zip(&lp.exp).map(|(a, b)| (*a).max(*b) - a).collect();
    ctx.datum.mul_mono_left(&c, a)
}

#[derive(Clone, Debug)]
enum Pair {
    Elements(usize, usize),
    Ideal(usize, usize),
}

struct Critical {
    bound: Mon,
    seq: usize,
    pair: Pair,
}

fn pair_bound(ctx: &ModRing, g: &[Poly], pair: &Pair) -> Option<Mon> {
    match *pair {
        Pair::Elements(i, j) => {
            let (a, _) = lead_or_panic(ctx, &g[i]);
            let (b, _) = lead_or_panic(ctx, &g[j]);
            (a.comp == b.comp).then(|| Mon::new(exp_lcm(&a.exp, &b.exp), a.comp))
        }
        Pair::Ideal(i, k) => {
            let (a, _) = lead_or_panic(ctx, &g[i]);
            let lp = ctx.datum.ideal[k].lead_mon(&ctx.datum.order).unwrap();
            Some(Mon::new(exp_lcm(&a.exp, &lp.exp), a.comp))
        }
    }
}

fn lift_combine(ctx: &ModRing, acc: &mut [Poly], coeff: &Poly, lift: &[Poly]) {
    for (dst, l) in acc.iter_mut().zip(lift) {
        if l.is_zero() {
            continue;
        }
        let prod = ctx.mul(coeff, l);
        dst.add_scaled(&prod, &Coeff::one());
    }
}

/// Buchberger's algorithm with the extra pairs against the ideal part.
pub fn buchberger(ctx: &ModRing, gens: &[Poly], reduced: bool) -> Result<GBasis> {
    run_buchberger(ctx, gens, reduced, false, None)
}

/// As [`buchberger`], recording each basis element as a combination of the inputs.
pub fn buchberger_with_lifts(ctx: &ModRing, gens: &[Poly], reduced: bool) -> Result<GBasis> {
    run_buchberger(ctx, gens, reduced, true, None)
}

/// Buchberger run that calls `check` on every element added to the basis.
pub fn buchberger_checked(
    ctx: &ModRing,
    gens: &[Poly],
    reduced: bool,
    check: &dyn Fn(&Poly) -> Result<()>,
) -> Result<GBasis> {
    run_buchberger(ctx, gens, reduced, false, Some(check))
}

fn run_buchberger(
    ctx: &ModRing,
    gens: &[Poly],
    reduced: bool,
    track: bool,
    check: Option<&dyn Fn(&Poly) -> Result<()>>,
) -> Result<GBasis> {
    let ninputs = gens.len();
    let mut basis: Vec<Poly> = Vec::new();
    let mut lifts: Vec<Vec<Poly>> = Vec::new();
    let mut queue: Vec<Critical> = Vec::new();
    let mut seq = 0usize;
    let nideal = ctx.datum.ideal.len();

    let mut add = |basis: &mut Vec<Poly>, lifts: &mut Vec<Vec<Poly>>, queue: &mut Vec<Critical>, p: Poly, lift: Vec<Poly>| -> Result<()> {
        let (_, lc) = lead_or_panic(ctx, &p);
        let inv = Coeff::one() / lc;
        let p = p.scale(&inv);
        if let Some(f) = check {
            f(&p)?;
        }
        let idx = basis.len();
        basis.push(p);
        if track {
            lifts.push(lift.into_iter().map(|l| l.scale(&inv)).collect());
        }
        for i in 0..idx {
            let pair = Pair::Elements(i, idx);
            if let Some(bound) = pair_bound(ctx, basis, &pair) {
                queue.push(Critical { bound, seq, pair });
                seq += 1;
            }
        }
        for k in 0..nideal {
            let pair = Pair::Ideal(idx, k);
            if let Some(bound) = pair_bound(ctx, basis, &pair) {
                queue.push(Critical { bound, seq, pair });
                seq += 1;
            }
        }
        Ok(())
    };

    for (i, g) in gens.iter().enumerate() {
        let p = ctx.canon(g);
        let (r, q) = normal_form(ctx, &p, &basis, false);
        if r.is_zero() {
            continue;
        }
        let lift = if track {
            let mut l = vec![Poly::zero(); ninputs];
            l[i] = ctx.datum.one();
            for (k, qk) in q.iter().enumerate() {
                if !qk.is_zero() {
                    let neg = qk.neg();
                    lift_combine(ctx, &mut l, &neg, &lifts[k]);
                }
            }
            l
        } else {
            Vec::new()
        };
        add(&mut basis, &mut lifts, &mut queue, r, lift)?;
    }

    while !queue.is_empty() {
        let best = (0..queue.len())
            .min_by(|&a, &b| {
                let (x, y) = (&queue[a], &queue[b]);
                ctx.order
                    .compare(&x.bound.exp, x.bound.comp, &y.bound.exp, y.bound.comp)
                    .then(x.seq.cmp(&y.seq))
            })
            .unwrap();
        let crit = queue.swap_remove(best);
        let (s, slift) = match crit.pair {
            Pair::Elements(i, j) => {
                let s = spoly(ctx, &basis[i], &basis[j]);
                let lift = if track && !s.is_zero() { spoly_lift(ctx, &basis, &lifts, i, j, ninputs) } else { Vec::new() };
                (s, lift)
            }
            Pair::Ideal(i, k) => {
                let comp = lead_or_panic(ctx, &basis[i]).0.comp;
                let s = spoly_ideal(ctx, &basis[i], &ctx.datum.ideal[k], comp);
                let lift = if track && !s.is_zero() {
                    let (ma, _) = lead_or_panic(ctx, &basis[i]);
                    let lp = ctx.datum.ideal[k].lead_mon(&ctx.datum.order).unwrap();
                    let c: Vec<u32> = ma.exp.iter().zip(&lp.exp).map(|(a, b)| (*a).max(*b) - a).collect();
                    let mut l = vec![Poly::zero(); ninputs];
                    lift_combine(ctx, &mut l, &Poly::monomial(c, 0), &lifts[i]);
                    l
                } else {
                    Vec::new()
                };
                (s, lift)
            }
        };
        if s.is_zero() {
            continue;
        }
        let (r, q) = normal_form(ctx, &s, &basis, false);
        if r.is_zero() {
            continue;
        }
        let lift = if track {
            let mut l = slift;
            for (k, qk) in q.iter().enumerate() {
                if !qk.is_zero() {
                    lift_combine(ctx, &mut l, &qk.neg(), &lifts[k]);
                }
            }
            l
        } else {
            Vec::new()
        };
        add(&mut basis, &mut lifts, &mut queue, r, lift)?;
    }

    let mut out = GBasis { gens: basis, lifts: track.then_some(lifts), reduced: false };
    if reduced {
        out = reduce_basis(ctx, out);
    }
    Ok(out)
}

fn spoly_lift(ctx: &ModRing, basis: &[Poly], lifts: &[Vec<Poly>], i: usize, j: usize, ninputs: usize) -> Vec<Poly> {
    let (ma, _) = lead_or_panic(ctx, &basis[i]);
    let (mb, _) = lead_or_panic(ctx, &basis[j]);
    let target = Mon::new(exp_lcm(&ma.exp, &mb.exp), ma.comp);
    let ga = ma.quotient(&target);
    let gb = mb.quotient(&target);
    let ca = Coeff::one() / ctx.datum.mul_mono_left(&ga, &basis[i]).coeff_of(&target);
    let cb = Coeff::one() / ctx.datum.mul_mono_left(&gb, &basis[j]).coeff_of(&target);
    let mut l = vec![Poly::zero(); ninputs];
    lift_combine(ctx, &mut l, &Poly::monomial(ga, 0).scale(&ca), &lifts[i]);
    lift_combine(ctx, &mut l, &Poly::monomial(gb, 0).scale(&-cb), &lifts[j]);
    l
}

/// Minimalize, inter-reduce and normalize a Gröbner basis.
pub fn reduce_basis(ctx: &ModRing, gb: GBasis) -> GBasis {
    let GBasis { gens, lifts, .. } = gb;
    let leads: Vec<Mon> = gens.iter().map(|g| lead_or_panic(ctx, g).0).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..gens.len() {
        let redundant = (0..gens.len()).any(|j| {
            j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    keep.sort_by(|&a, &b| ctx.order.compare(&leads[a].exp, leads[a].comp, &leads[b].exp, leads[b].comp));
    let mut new_gens: Vec<Poly> = keep.iter().map(|&i| gens[i].clone()).collect();
    let mut new_lifts: Option<Vec<Vec<Poly>>> = lifts.as_ref().map(|l| keep.iter().map(|&i| l[i].clone()).collect());
    for k in 0..new_gens.len() {
        let (lm, _) = lead_or_panic(ctx, &new_gens[k]);
        let others: Vec<Poly> =
            new_gens.iter().enumerate().map(|(j, g)| if j == k { Poly::zero() } else { g.clone() }).collect();
        let mut tail = new_gens[k].clone();
        let lt_c = tail.coeff_of(&lm);
        tail.terms.remove(&lm);
        let (r, q) = normal_form(ctx, &tail, &others, true);
        let mut g = r;
        g.add_term(lm, lt_c.clone());
        let inv = Coeff::one() / lt_c;
        new_gens[k] = g.scale(&inv);
        if let Some(ls) = new_lifts.as_mut() {
            let mut l = ls[k].clone();
            for (j, qj) in q.iter().enumerate() {
                if !qj.is_zero() {
                    let src = ls[j].clone();
                    lift_combine(ctx, &mut l, &qj.neg(), &src);
                }
            }
            ls[k] = l.into_iter().map(|x| x.scale(&inv)).collect();
        }
    }
    GBasis { gens: new_gens, lifts: new_lifts, reduced: true }
}

/// Checks the Buchberger criterion on a finite set.
pub fn is_groebner(ctx: &ModRing, g: &[Poly]) -> bool {
    let g: Vec<Poly> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = spoly(ctx, &g[i], &g[j]);
            if !normal_form(ctx, &s, &g, false).0.is_zero() {
                return false;
            }
        }
        let comp = lead_or_panic(ctx, &g[i]).0.comp;
        for p in &ctx.datum.ideal {
            let s = spoly_ideal(ctx, &g[i], p, comp);
            if !normal_form(ctx, &s, &g, false).0.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Generators of the syzygy module of `h` (elements of `A^ncomp`), as
/// elements of `A^{h.len()}`.
pub fn syzygies(datum: &Datum, h: &[Poly], ncomp: usize) -> Result<Vec<Poly>> {
    let s = h.len();
    if s == 0 {
        return Ok(Vec::new());
    }
    let n = datum.n;
    let mut block_of = vec![0usize; ncomp];
    block_of.extend(std::iter::repeat_n(1, s));
    let order = Order::block(block_of, Order::top(datum.order.clone()));
    let ctx = ModRing::new(datum.clone(), order, ncomp + s)?;
    let tagged: Vec<Poly> = h
        .iter()
        .enumerate()
        .map(|(k, p)| ctx.canon(p).add(&Poly::basis(n, ncomp + k)))
        .collect();
    let gb = buchberger(&ctx, &tagged, true)?;
    Ok(gb
        .gens
        .into_iter()
        .filter(|g| g.terms.keys().all(|m| m.comp >= ncomp))
        .map(|g| g.map_comp(|c| c - ncomp))
        .collect())
}

/// `sum_k a_k h_k` for a syzygy-shaped vector `a` in `A^{h.len()}`.
pub fn pair_with(datum: &Datum, a: &Poly, h: &[Poly]) -> Poly {
    let mut out = Poly::zero();
    for (k, hk) in h.iter().enumerate() {
        let ak = a.component(k);
        if !ak.is_zero() {
            out.add_scaled(&datum.mul(&ak, hk), &Coeff::one());
        }
    }
    out
}

/// Right multiplication by a variable, on every component.
pub fn mul_right_var(datum: &Datum, p: &Poly, k: usize) -> Poly {
    datum.reduce_ideal(datum.mul_poly_var(p, k))
}

/// Left generators of the two-sided module generated by `gens`.
pub fn two_sided_closure(ctx: &ModRing, gens: &[Poly]) -> Result<Vec<Poly>> {
    let mut current = buchberger(ctx, gens, true)?.gens;
    loop {
        let mut extra = Vec::new();
        for g in &current {
            for k in 0..ctx.n() {
                let q = mul_right_var(&ctx.datum, g, k);
                let all: Vec<Poly> = current.iter().chain(extra.iter()).cloned().collect();
                let (r, _) = normal_form(ctx, &q, &all, false);
                if !r.is_zero() {
                    extra.push(r);
                }
            }
        }
        if extra.is_empty() {
            return Ok(current);
        }
        current.extend(extra);
        current = buchberger(ctx, &current, true)?.gens;
    }
}

/// Membership test; on success returns `a` with `m = sum a_i gens_i`.
pub fn member(ctx: &ModRing, m: &Poly, gens: &[Poly]) -> Result<Option<Vec<Poly>>> {
    let gb = buchberger_with_lifts(ctx, gens, false)?;
    let (r, q) = normal_form(ctx, m, &gb.gens, false);
    if !r.is_zero() {
        return Ok(None);
    }
    let lifts = gb.lifts.unwrap();
    let mut coeffs = vec![Poly::zero(); gens.len()];
    for (k, qk) in q.iter().enumerate() {
        if !qk.is_zero() {
            lift_combine(ctx, &mut coeffs, qk, &lifts[k]);
        }
    }
    Ok(Some(coeffs))
}

/// Reduced Gröbner basis of the intersection of two submodules.
pub fn intersect_left(ctx: &ModRing, m1: &[Poly], m2: &[Poly]) -> Result<Vec<Poly>> {
    let m1: Vec<Poly> = m1.iter().map(|p| ctx.canon(p)).filter(|p| !p.is_zero()).collect();
    let m2: Vec<Poly> = m2.iter().map(|p| ctx.canon(p)).filter(|p| !p.is_zero()).collect();
    if m1.is_empty() || m2.is_empty() {
        return Ok(Vec::new());
    }
    let mut h = m1.clone();
    h.extend(m2.iter().map(|p| p.neg()));
    let syz = syzygies(&ctx.datum, &h, ctx.ncomp)?;
    let elems: Vec<Poly> = syz
        .iter()
        .map(|a| {
            let first = Poly::from_terms(a.terms.iter().filter(|(m, _)| m.comp < m1.len()).map(|(m, c)| (m.clone(), c.clone())));
            pair_with(&ctx.datum, &first, &m1)
        })
        .filter(|p| !p.is_zero())
        .collect();
    Ok(buchberger(ctx, &elems, true)?.gens)
}

/// Leading-term order comparison of two elements (bottom for zero).
pub fn compare_leads(ctx: &ModRing, a: &Poly, b: &Poly) -> Ordering {
    a.lead_exp(&ctx.order).compare(&b.lead_exp(&ctx.order), &ctx.order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{names, PbwDatum};

    fn kxy() -> Datum {
        Arc::new(PbwDatum::polynomial_ring(names(&["x", "y"]), Order::DegLex).unwrap())
    }

    fn a1() -> Datum {
        Arc::new(PbwDatum::weyl(1, Order::DegLex).unwrap())
    }

    fn parse(d: &Datum, s: &str) -> Poly {
        d.parse(s).unwrap()
    }

    #[test]
    fn commutative_spoly_and_nf() {
        let d = kxy();
        let ctx = ModRing::top(d.clone(), 1).unwrap();
        let s = spoly(&ctx, &parse(&d, "x^2 + y"), &parse(&d, "x*y + x"));
        assert_eq!(s, parse(&d, "y^2 - x^2"));
        let (r, q) = normal_form(&ctx, &parse(&d, "x^2*y"), &[parse(&d, "x^2 + y")], false);
        assert_eq!(r, parse(&d, "-y^2"));
        assert_eq!(q[0], parse(&d, "y"));
    }

    #[test]
    fn commutative_reduced_basis() {
        let d = kxy();
        let ctx = ModRing::top(d.clone(), 1).unwrap();
        let gb = buchberger(&ctx, &[parse(&d, "x^2 + y"), parse(&d, "x*y + x")], true).unwrap();
        let want = vec![parse(&d, "y^2 + y"), parse(&d, "x*y + x"), parse(&d, "x^2 + y")];
        assert_eq!(gb.gens, want);
        assert!(is_groebner(&ctx, &gb.gens));
    }

    #[test]
    fn weyl_unit_ideal() {
        let d = a1();
        let ctx = ModRing::top(d.clone(), 1).unwrap();
        assert_eq!(spoly(&ctx, &parse(&d, "x"), &parse(&d, "d")), d.one());
        let gb = buchberger(&ctx, &[parse(&d, "x"), parse(&d, "d")], true).unwrap();
        assert_eq!(gb.gens, vec![d.one()]);
        let gens = [parse(&d, "x"), parse(&d, "d")];
        let coeffs = member(&ctx, &d.one(), &gens).unwrap().unwrap();
        let back = pair_with(&d, &coeffs[0].add(&coeffs[1].with_comp(1)), &gens);
        assert_eq!(back, d.one());
    }

    #[test]
    fn zero_input() {
        let d = kxy();
        let ctx = ModRing::top(d, 1).unwrap();
        assert!(buchberger(&ctx, &[Poly::zero()], true).unwrap().gens.is_empty());
    }

    #[test]
    fn syzygies_of_xy() {
        let d = kxy();
        let syz = syzygies(&d, &[parse(&d, "x"), parse(&d, "y")], 1).unwrap();
        assert_eq!(syz.len(), 1);
        let h = [parse(&d, "x"), parse(&d, "y")];
        assert!(pair_with(&d, &syz[0], &h).is_zero());
        assert!(syzygies(&d, &[d.one()], 1).unwrap().is_empty());
        let w = a1();
        let h = [parse(&w, "x"), parse(&w, "d")];
        let syz = syzygies(&w, &h, 1).unwrap();
        assert!(!syz.is_empty());
        for s in &syz {
            assert!(pair_with(&w, s, &h).is_zero());
        }
    }

    #[test]
    fn intersections() {
        let d = Arc::new(PbwDatum::polynomial_ring(names(&["x"]), Order::DegLex).unwrap());
        let ctx = ModRing::top(d.clone(), 1).unwrap();
        let r = intersect_left(&ctx, &[parse(&d, "x")], &[parse(&d, "x^2")]).unwrap();
        assert_eq!(r, vec![parse(&d, "x^2")]);
    }

    #[test]
    fn two_sided_weyl() {
        let d = a1();
        let ctx = ModRing::top(d.clone(), 1).unwrap();
        let c = two_sided_closure(&ctx, &[parse(&d, "x")]).unwrap();
        assert_eq!(c, vec![d.one()]);
        assert!(two_sided_closure(&ctx, &[]).unwrap().is_empty());
    }
}
