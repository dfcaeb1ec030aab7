//! Brute-force verifier: truncated linear algebra over the canonical
//! monomial basis. Independent of the Gröbner engine; it only uses the
//! canonical product of the algebra.

use std::collections::HashMap;

use crate::algebra::{monomials_up_to, Datum};
use crate::linalg::{Echelon, Row};
use crate::order::dot;
use crate::poly::{shift_at, Mon, Poly};

/// Canonical monomials of total degree at most `degree + slack` on each
/// component. Spans are reported inside degree `degree`.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub datum: Datum,
    pub ncomp: usize,
    pub degree: u32,
    pub slack: u32,
    cols: Vec<Mon>,
    index: HashMap<Mon, usize>,
}

/// A subspace of the truncated space.
#[derive(Clone, Debug)]
pub struct Span {
    ech: Echelon,
    /// Some product left the truncated space and was dropped.
    pub overflow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// Left span is strictly contained in the right; witness lies in the right only.
    LeftInRight(Poly),
    RightInLeft(Poly),
    Incomparable(Poly, Poly),
}

impl Span {
    pub fn dim(&self) -> usize {
        self.ech.rank()
    }
}

impl Oracle {
    pub fn new(datum: Datum, ncomp: usize, degree: u32, slack: u32) -> Oracle {
        let n = datum.n;
        let mut cols: Vec<Mon> = Vec::new();
        for e in 0..ncomp {
            for a in monomials_up_to(n, degree + slack) {
                if !datum.in_lead_ideal(&a) {
                    cols.push(Mon::new(a, e));
                }
            }
        }
        // Higher degree first so that the low-degree coordinates form a terminal segment.
        cols.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        let index = cols.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Oracle { datum, ncomp, degree, slack, cols, index }
    }

    pub fn vector(&self, p: &Poly) -> Option<Row> {
        let mut row = Row::new();
        for (m, c) in &p.terms {
            row.insert(*self.index.get(m)?, c.clone());
        }
        Some(row)
    }

    pub fn poly(&self, row: &Row) -> Poly {
        Poly::from_terms(row.iter().map(|(i, c)| (self.cols[*i].clone(), c.clone())))
    }

    /// `K`-span of the given elements (dropping those outside the space), cut to `degree`.
    pub fn linear_span(&self, elems: &[Poly]) -> Span {
        let mut ech = Echelon::new();
        let mut overflow = false;
        for p in elems {
            let p = self.datum.reduce_ideal(p.clone());
            match self.vector(&p) {
                Some(r) => {
                    ech.insert(r);
                }
                None => overflow = true,
            }
        }
        self.cut(Span { ech, overflow })
    }

    /// Span of `x^g * m` over generators `m` and multiplier exponents `g`
    /// accepted by `mult`, cut to `degree`.
    pub fn span_of(&self, gens: &[Poly], mult: &dyn Fn(&[u32]) -> bool) -> Span {
        self.span_of_indexed(gens, &|_, a: &[u32]| mult(a))
    }

    /// Like `span_of`, with a multiplier filter that also sees the generator
    /// index. The cut to `degree` happens after summing over all generators.
    pub fn span_of_indexed(&self, gens: &[Poly], mult: &dyn Fn(usize, &[u32]) -> bool) -> Span {
        let n = self.datum.n;
        let top = self.degree + self.slack;
        let mults = monomials_up_to(n, top);
        let mut ech = Echelon::new();
        let mut overflow = false;
        for (i, g) in gens.iter().enumerate() {
            let g = self.datum.reduce_ideal(g.clone());
            let Some(gd) = g.total_degree() else { continue };
            for a in mults.iter().filter(|a| mult(i, a)) {
                let ad: u64 = a.iter().map(|&e| e as u64).sum();
                if ad + gd > top as u64 {
                    overflow = true;
                    continue;
                }
                let prod = self.datum.mul_mono_left(a, &g);
                match self.vector(&prod) {
                    Some(r) => {
                        ech.insert(r);
                    }
                    None => overflow = true,
                }
            }
        }
        self.cut(Span { ech, overflow })
    }

    pub fn full_multipliers() -> impl Fn(&[u32]) -> bool {
        |_: &[u32]| true
    }

    /// Multipliers `x^g` with `<u, g> <= k`.
    pub fn weight_multipliers(u: Vec<i64>, k: i64) -> impl Fn(&[u32]) -> bool {
        move |a: &[u32]| dot(&u, a) <= k
    }

    fn cut(&self, span: Span) -> Span {
        let d = self.degree as u64;
        self.restrict(&span, &|m: &Mon| m.degree() <= d)
    }

    /// Intersection with the coordinate subspace of the monomials accepted by `keep`.
    pub fn restrict(&self, span: &Span, keep: &dyn Fn(&Mon) -> bool) -> Span {
        let ncols = self.cols.len();
        let kept: Vec<bool> = self.cols.iter().map(keep).collect();
        // Dropped columns first, then kept columns, each in the original order.
        let mut perm = vec![0usize; ncols];
        let mut next = 0;
        for (i, k) in kept.iter().enumerate() {
            if !k {
                perm[i] = next;
                next += 1;
            }
        }
        let split = next;
        for (i, k) in kept.iter().enumerate() {
            if *k {
                perm[i] = next;
                next += 1;
            }
        }
        let mut inv = vec![0usize; ncols];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let permuted = Echelon::from_rows(span.ech.basis().into_iter().map(|r| r.into_iter().map(|(c, v)| (perm[c], v)).collect()));
        let rows = permuted.rows_within(|c| c >= split);
        let ech = Echelon::from_rows(rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (inv[c], v)).collect()));
        Span { ech, overflow: span.overflow }
    }

    /// Elements of `span` of `u[s]`-degree at most `k`.
    pub fn filtration_part(&self, span: &Span, u: &[i64], s: &[i64], k: i64) -> Span {
        self.restrict(span, &|m: &Mon| dot(u, &m.exp) + shift_at(s, m.comp) <= k)
    }

    pub fn sum(&self, a: &Span, b: &Span) -> Span {
        let mut ech = a.ech.clone();
        for r in b.ech.basis() {
            ech.insert(r);
        }
        Span { ech, overflow: a.overflow || b.overflow }
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, a: &Span, b: &Span) -> Span {
        let nc = self.cols.len();
        let mut ech = Echelon::new();
        for r in a.ech.basis() {
            let mut row = r.clone();
            for (c, v) in r {
                row.insert(c + nc, v);
            }
            ech.insert(row);
        }
        for r in b.ech.basis() {
            ech.insert(r);
        }
        let rows = ech.rows_within(|c| c >= nc);
        let ech = Echelon::from_rows(rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c - nc, v)).collect()));
        Span { ech, overflow: a.overflow || b.overflow }
    }

    pub fn contains(&self, span: &Span, p: &Poly) -> bool {
        let p = self.datum.reduce_ideal(p.clone());
        match self.vector(&p) {
            Some(r) => span.ech.contains(&r),
            None => false,
        }
    }

    pub fn compare(&self, a: &Span, b: &Span) -> Comparison {
        let missing_in_b = a.ech.basis().into_iter().find(|r| !b.ech.contains(r));
        let missing_in_a = b.ech.basis().into_iter().find(|r| !a.ech.contains(r));
        match (missing_in_b, missing_in_a) {
            (None, None) => Comparison::Equal,
            (None, Some(w)) => Comparison::LeftInRight(self.poly(&w)),
            (Some(w), None) => Comparison::RightInLeft(self.poly(&w)),
            (Some(x), Some(y)) => Comparison::Incomparable(self.poly(&x), self.poly(&y)),
        }
    }

    /// Reduced echelon basis as polynomials.
    pub fn basis(&self, span: &Span) -> Vec<Poly> {
        span.ech.basis().iter().map(|r| self.poly(r)).collect()
    }
}
