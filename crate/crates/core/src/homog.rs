//! Homogenization with respect to a positive weight vector, and Gröbner
//! bases for orderings that are not well-orderings.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{commutative_gb, Datum, PbwDatum, Provenance};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_checked, two_sided_closure, ModRing};
use crate::order::{dot, Order};
use crate::poly::{shift_at, FreeElement, Mon, Poly, Word};

fn check_nonnegative(w: &[i64]) -> Result<()> {
    if w.iter().any(|&x| x < 0) {
        return Err(Error::Invalid(format!("homogenization weights must be nonnegative, got {w:?}")));
    }
    Ok(())
}

/// `(1, w)` weights on the homogenized variables.
pub fn lifted_weight(w: &[i64]) -> Vec<i64> {
    let mut out = vec![1];
    out.extend_from_slice(w);
    out
}

/// `w[s]`-homogenization; `h` becomes variable 0.
pub fn homogenize(p: &Poly, w: &[i64], s: &[i64]) -> Result<Poly> {
    check_nonnegative(w)?;
    let Some(top) = p.weighted_degree(w, s) else { return Ok(Poly::zero()) };
    homogenize_to(p, w, s, top)
}

/// Homogenization to a prescribed degree `top >= deg_{w[s]}(p)`.
pub fn homogenize_to(p: &Poly, w: &[i64], s: &[i64], top: i64) -> Result<Poly> {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        let gap = top - dot(w, &m.exp) - shift_at(s, m.comp);
        if gap < 0 {
            return Err(Error::Invalid(format!("degree {top} is below a term of weight {}", top - gap)));
        }
        let mut e = vec![gap as u32];
        e.extend_from_slice(&m.exp);
        out.add_term(Mon::new(e, m.comp), c.clone());
    }
    Ok(out)
}

pub fn dehomogenize(p: &Poly) -> Poly {
    Poly::from_terms(p.terms.iter().map(|(m, c)| (Mon::new(m.exp[1..].to_vec(), m.comp), c.clone())))
}

/// Word version of [`homogenize`]; the powers of `h` are put in front.
pub fn homogenize_free(f: &FreeElement, n: usize, w: &[i64], s: &[i64]) -> Result<FreeElement> {
    check_nonnegative(w)?;
    let Some(top) = f.weighted_degree(n, w, s) else { return Ok(FreeElement::zero()) };
    let mut out = FreeElement::zero();
    for ((word, e), c) in &f.terms {
        let gap = top - dot(w, &word.exponent(n)) - shift_at(s, *e);
        let mut letters = vec![0usize; gap as usize];
        letters.extend(word.0.iter().map(|&k| k + 1));
        out.add_term((Word(letters), *e), c.clone());
    }
    Ok(out)
}

pub fn dehomogenize_free(f: &FreeElement) -> FreeElement {
    FreeElement::from_terms(f.terms.iter().map(|((word, e), c)| {
        let letters = word.0.iter().filter(|&&k| k != 0).map(|&k| k - 1).collect();
        ((Word(letters), *e), c.clone())
    }))
}

/// One inequality `coeffs . w >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Ineq {
    coeffs: Vec<Coeff>,
    rhs: Coeff,
}

/// Feasible rational point of `{w : A w >= b}` by Fourier-Motzkin elimination.
fn fourier_motzkin(n: usize, system: Vec<Ineq>) -> Option<Vec<Coeff>> {
    // stages[k] holds the inequalities in the variables 0..=k.
    let mut stages: Vec<Vec<Ineq>> = vec![Vec::new(); n];
    let mut current = system;
    for k in (0..n).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for q in current {
            if q.coeffs[k].is_positive() {
                pos.push(q);
            } else if q.coeffs[k].is_negative() {
                neg.push(q);
            } else {
                rest.push(q);
            }
        }
        stages[k] = pos.iter().chain(neg.iter()).chain(rest.iter()).cloned().collect();
        for p in &pos {
            for q in &neg {
                let a = p.coeffs[k].clone();
                let b = -q.coeffs[k].clone();
                let coeffs: Vec<Coeff> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x / &a + y / &b).collect();
                let combined = Ineq { coeffs, rhs: &p.rhs / &a + &q.rhs / &b };
                if !rest.contains(&combined) {
                    rest.push(combined);
                }
            }
        }
        current = rest;
    }
    if current.iter().any(|q| q.rhs.is_positive()) {
        return None;
    }
    let mut point: Vec<Coeff> = vec![Coeff::zero(); n];
    for k in 0..n {
        let mut lower: Option<Coeff> = None;
        let mut upper: Option<Coeff> = None;
        for q in &stages[k] {
            let c = &q.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let known: Coeff = (0..k).map(|i| &q.coeffs[i] * &point[i]).sum();
            let bound = (&q.rhs - known) / c;
            if c.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l: Coeff| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u: Coeff| u.min(bound)));
            }
        }
        point[k] = match (lower, upper) {
            (Some(l), _) => l,
            (None, Some(u)) => u,
            (None, None) => Coeff::zero(),
        };
    }
    Some(point)
}

/// Primitive integer multiple of a positive rational vector.
fn primitive(v: &[Coeff]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * Coeff::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| (x / &g).to_i64().expect("weight fits in i64")).collect()
}

fn satisfies(w: &[i64], rows: &[Vec<i64>]) -> bool {
    rows.iter().all(|r| r.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() >= 1)
}

/// Lexicographically first vector in `[1, m]^n` with some entry `m` that satisfies `rows`.
fn search_box(n: usize, m: i64, rows: &[Vec<i64>], budget: &mut u64) -> Option<Vec<i64>> {
    let mut w = vec![1i64; n];
    loop {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        if w.contains(&m) && satisfies(&w, rows) {
            return Some(w);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if w[i] < m {
                w[i] += 1;
                for x in &mut w[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Strictly positive weight vector inducing `order` on the standard
/// monomials occurring in the commutation system. Among all such vectors the
/// one with the smallest maximal entry, and among those the lexicographically
/// first, is returned.
pub fn find_positive_weight(datum: &PbwDatum, order: &Order) -> Result<Vec<i64>> {
    let n = datum.n;
    let mut support: Vec<Vec<u32>> = Vec::new();
    for (i, j, _, d) in datum.relations_list() {
        let mut xixj = vec![0u32; n];
        xixj[i] += 1;
        xixj[j] += 1;
        for m in d.terms.keys() {
            if order.cmp_exp(&m.exp, &xixj) != Ordering::Less {
                return Err(Error::Invalid(format!(
                    "ordering does not rank the correction of ({}, {}) below its leading pair",
                    datum.names[i], datum.names[j]
                )));
            }
            support.push(m.exp.clone());
        }
        support.push(xixj);
    }
    support.sort();
    support.dedup();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for a in &support {
        for b in &support {
            if order.cmp_exp(a, b) == Ordering::Less {
                rows.push((0..n).map(|k| b[k] as i64 - a[k] as i64).collect());
            }
        }
    }
    let mut system: Vec<Ineq> = rows
        .iter()
        .map(|r| Ineq { coeffs: r.iter().map(|&x| Coeff::from_integer(x.into())).collect(), rhs: Coeff::one() })
        .collect();
    for k in 0..n {
        let mut coeffs = vec![Coeff::zero(); n];
        coeffs[k] = Coeff::one();
        system.push(Ineq { coeffs, rhs: Coeff::one() });
    }
    let point = fourier_motzkin(n, system)
        .ok_or_else(|| Error::Invalid("no positive weight vector is compatible with the commutation system".into()))?;
    let fm = primitive(&point);
    let cap = fm.iter().copied().max().unwrap_or(1);
    let mut budget: u64 = 1_000_000;
    for m in 1..=cap {
        match search_box(n, m, &rows, &mut budget) {
            Some(w) => return Ok(w),
            None if budget == 0 => break,
            None => {}
        }
    }
    Ok(fm)
}

/// Whether `w` is a weight vector on the datum: no correction term exceeds
/// the weight of its leading pair.
pub fn is_weight_vector(datum: &PbwDatum, w: &[i64]) -> bool {
    datum.relations_list().iter().all(|(i, j, _, d)| match d.weighted_degree(w, &[]) {
        None => true,
        Some(dw) => dw <= w[*i] + w[*j],
    })
}

/// The homogenized algebra `A^w` in the variables `h, x_1, ..., x_n`.
#[derive(Clone, Debug)]
pub struct HomogenizedDatum {
    pub base: Datum,
    pub w: Vec<i64>,
    /// Ordering on `A` whose homogenization orders `A^w`.
    pub target: Order,
    pub datum: Datum,
}

impl HomogenizedDatum {
    pub fn lifted_weight(&self) -> Vec<i64> {
        lifted_weight(&self.w)
    }
}

/// Builds `A^w` for `w > 0`; its ordering is the homogenization of `target`.
pub fn homogenize_algebra(d: &Datum, w: &[i64], target: &Order) -> Result<HomogenizedDatum> {
    let n = d.n;
    if w.len() != n {
        return Err(Error::Dimension(format!("weight vector has {} entries, expected {n}", w.len())));
    }
    if w.iter().any(|&x| x <= 0) {
        return Err(Error::Invalid(format!("homogenization needs a strictly positive weight, got {w:?}")));
    }
    if !is_weight_vector(d, w) {
        return Err(Error::Invalid(format!("{w:?} is not a weight vector on the algebra")));
    }
    target.check_arity(n)?;
    let lw = lifted_weight(w);
    let horder = Order::homogenized(w.to_vec(), target.clone());
    let mut names = vec!["h".to_string()];
    names.extend(d.names.iter().cloned());
    if d.names.iter().any(|s| s == "h") {
        names[0] = "h_".to_string();
    }
    let mut rels = Vec::new();
    for (i, j, c, dij) in d.relations_list() {
        let dw = homogenize_to(&dij, w, &[], w[i] + w[j])?;
        rels.push((i + 1, j + 1, c, dw));
    }
    let ideal: Vec<Poly> = match &d.provenance {
        Provenance::Pbw => Vec::new(),
        Provenance::Elementary { gens } => {
            let refined = commutative_gb(&d.names, gens, &Order::weighted(w.to_vec(), target.clone()))?;
            let lifted: Vec<Poly> = refined.iter().map(|g| homogenize(g, w, &[])).collect::<Result<_>>()?;
            commutative_gb(&names, &lifted, &horder)?
        }
        Provenance::Factor { base, gens } => {
            let below = homogenize_algebra(base, w, target)?;
            let refined = Arc::new(base.with_order(Order::weighted(w.to_vec(), target.clone()))?);
            let ctx = ModRing::top(refined, 1)?;
            let closure = two_sided_closure(&ctx, gens)?;
            let g = buchberger(&ctx, &closure, true)?.gens;
            let lifted: Vec<Poly> = g.iter().map(|p| homogenize(p, w, &[])).collect::<Result<_>>()?;
            let up = ModRing::top(below.datum.clone(), 1)?;
            let gw = buchberger(&up, &lifted, true)?.gens;
            let mut ideal = below.datum.ideal.clone();
            ideal.extend(gw);
            ideal
        }
        Provenance::Trusted => {
            if d.ideal.is_empty() {
                Vec::new()
            } else {
                return Err(Error::Unsupported(
                    "homogenizing a trusted ideal part requires a user supplied homogenized ideal".into(),
                ));
            }
        }
    };
    for (_, _, _, r) in &rels {
        debug_assert!(r.is_homogeneous(&lw, &[]));
    }
    for g in &ideal {
        if !g.is_homogeneous(&lw, &[]) {
            return Err(Error::Invalid("homogenized ideal part is not homogeneous".into()));
        }
    }
    let provenance = if ideal.is_empty() { Provenance::Pbw } else { Provenance::Trusted };
    let datum = PbwDatum::new(names, rels, ideal, horder, provenance)?;
    Ok(HomogenizedDatum { base: d.clone(), w: w.to_vec(), target: target.clone(), datum: Arc::new(datum) })
}

/// Canonical image of an element of `A` in `A^w`.
pub fn lift_to(hd: &HomogenizedDatum, p: &Poly) -> Result<Poly> {
    Ok(hd.datum.reduce_ideal(homogenize(p, &hd.w, &[])?))
}

/// Gröbner basis for an arbitrary (module) ordering.
#[derive(Clone, Debug)]
pub struct AnyBasis {
    /// Representatives whose leading terms generate the leading module.
    pub gens: Vec<Poly>,
    /// Canonical forms of the same elements.
    pub canonical: Vec<Poly>,
    /// Homogenization weight, when one was needed.
    pub weight: Option<Vec<i64>>,
}

pub fn gb_any_ordering(d: &Datum, order: &Order, ncomp: usize, gens: &[Poly], reduced: bool) -> Result<AnyBasis> {
    order.check_arity(d.n)?;
    if order.is_well() {
        let ctx = ModRing::new(d.clone(), order.clone(), ncomp)?;
        let gb = buchberger(&ctx, gens, reduced)?;
        let canonical = gb.gens.iter().map(|g| d.reduce_ideal(g.clone())).collect();
        return Ok(AnyBasis { canonical, gens: gb.gens, weight: None });
    }
    let target = order.restrict();
    let w = find_positive_weight(d, &d.order)?;
    let hd = homogenize_algebra(d, &w, &target)?;
    let up = ModRing::new(hd.datum.clone(), Order::homogenized(w.clone(), order.clone()), ncomp)?;
    let lifted: Vec<Poly> = gens
        .iter()
        .map(|g| homogenize(&d.reduce_ideal(g.clone()), &w, &[]))
        .collect::<Result<_>>()?;
    let lw = lifted_weight(&w);
    let check = |p: &Poly| -> Result<()> {
        if p.is_homogeneous(&lw, &[]) {
            Ok(())
        } else {
            Err(Error::Invalid("homogenized Gröbner basis element lost homogeneity".into()))
        }
    };
    let gb = buchberger_checked(&up, &lifted, reduced, &check)?;
    let gens: Vec<Poly> = gb.gens.iter().map(dehomogenize).collect();
    let canonical = gens.iter().map(|g| d.reduce_ideal(g.clone())).collect();
    Ok(AnyBasis { gens, canonical, weight: Some(w) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_elementary, names, ElementarySpec};
    use crate::text::parse_free;

    fn kxy() -> Datum {
        Arc::new(PbwDatum::polynomial_ring(names(&["x", "y"]), Order::DegLex).unwrap())
    }

    fn a1() -> Datum {
        Arc::new(PbwDatum::weyl(1, Order::DegLex).unwrap())
    }

    #[test]
    fn homogenize_polynomials() {
        let d = kxy();
        let p = d.parse("x^2 + y").unwrap();
        let hp = homogenize(&p, &[1, 1], &[]).unwrap();
        assert_eq!(hp.render(&names(&["h", "x", "y"]), None), "h*y + x^2");
        assert_eq!(dehomogenize(&hp), p);
        let q = d.parse("x*y").unwrap();
        assert_eq!(dehomogenize(&homogenize(&q, &[1, 1], &[]).unwrap()), q);
        assert!(homogenize(&p, &[-1, 1], &[]).is_err());
        let h3 = Poly::monomial(vec![3, 0, 0], 0);
        assert_eq!(dehomogenize(&h3), Poly::one(2));
    }

    #[test]
    fn homogenize_words() {
        let nm = names(&["x", "d"]);
        let f = parse_free("d*x + 1", &nm).unwrap();
        let hf = homogenize_free(&f, 2, &[0, 1], &[]).unwrap();
        let expect = parse_free("d*x + h", &names(&["h", "x", "d"])).unwrap();
        assert_eq!(hf, expect);
        assert_eq!(dehomogenize_free(&hf), f);
    }

    #[test]
    fn weights_for_weyl_and_commutative() {
        let a = a1();
        assert_eq!(find_positive_weight(&a, &a.order).unwrap(), vec![1, 1]);
        assert_eq!(find_positive_weight(&kxy(), &Order::DegLex).unwrap(), vec![1, 1]);
    }

    #[test]
    fn weyl_homogenized_relation() {
        let a = a1();
        let hd = homogenize_algebra(&a, &[1, 1], &Order::DegLex).unwrap();
        let up = &hd.datum;
        assert_eq!(up.render(&up.parse("d*x - x*d").unwrap()), "h^2");
        assert_eq!(up.parse("h*x - x*h").unwrap(), Poly::zero());
        assert!(up.ideal.is_empty());
    }

    #[test]
    fn homogenized_commutative_quotient() {
        let nm = names(&["x", "y"]);
        let gens = vec![parse_free("y - x^2", &nm).unwrap().as_standard(2).unwrap()];
        let d = Arc::new(
            make_elementary(&ElementarySpec {
                x_names: nm,
                y_names: vec![],
                f: vec![vec![], vec![]],
                d: vec![],
                ideal_gens: gens,
                order: Some(Order::DegLex),
            })
            .unwrap(),
        );
        let hd = homogenize_algebra(&d, &[1, 1], &Order::DegLex).unwrap();
        let rendered: Vec<String> = hd.datum.ideal.iter().map(|g| hd.datum.render(&g.monic(&hd.datum.order))).collect();
        assert_eq!(rendered, vec!["-h*y + x^2"]);
    }

    #[test]
    fn negative_weight_single_generator() {
        let d = Arc::new(PbwDatum::polynomial_ring(names(&["x"]), Order::Lex).unwrap());
        let order = Order::top(Order::weighted(vec![-1], Order::Lex));
        let g = d.parse("x + x^2").unwrap();
        let gb = gb_any_ordering(&d, &order, 1, &[g.clone()], true).unwrap();
        assert_eq!(gb.gens, vec![g]);
        let lead = gb.gens[0].lead_mon(&order).unwrap();
        assert_eq!(lead.exp, vec![1]);
    }

    #[test]
    fn weyl_v_filtration_basis() {
        let a = a1();
        let order = Order::top(Order::weighted(vec![-1, 1], Order::DegLex));
        let g = a.parse("x*d + 1").unwrap();
        let gb = gb_any_ordering(&a, &order, 1, &[g.clone()], true).unwrap();
        assert_eq!(gb.gens, vec![g]);
    }
}
