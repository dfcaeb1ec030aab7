//! Standard polynomials over a finite component set and free-algebra elements.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{self, Coeff};
use crate::order::{dot, LeadExp, Order};

/// Exponent together with a component index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mon {
    pub exp: Vec<u32>,
    pub comp: usize,
}

impl Mon {
    pub fn new(exp: Vec<u32>, comp: usize) -> Mon {
        Mon { exp, comp }
    }

    pub fn one(n: usize) -> Mon {
        Mon { exp: vec![0; n], comp: 0 }
    }

    pub fn degree(&self) -> u64 {
        self.exp.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Mon) -> bool {
        self.comp == other.comp && self.exp.iter().zip(&other.exp).all(|(a, b)| a <= b)
    }

    /// `other - self`, assuming `self` divides `other`.
    pub fn quotient(&self, other: &Mon) -> Vec<u32> {
        other.exp.iter().zip(&self.exp).map(|(a, b)| a - b).collect()
    }
}

pub fn exp_add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn unit_exp(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// A finite sum of `coefficient * x^a (e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    pub terms: BTreeMap<Mon, Coeff>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(n: usize, c: Coeff) -> Poly {
        Poly::term(Mon::one(n), c)
    }

    pub fn one(n: usize) -> Poly {
        Poly::constant(n, Coeff::one())
    }

    pub fn term(m: Mon, c: Coeff) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn monomial(exp: Vec<u32>, comp: usize) -> Poly {
        Poly::term(Mon::new(exp, comp), Coeff::one())
    }

    pub fn var(n: usize, i: usize) -> Poly {
        Poly::monomial(unit_exp(n, i), 0)
    }

    /// Unit vector `e` of the free module.
    pub fn basis(n: usize, comp: usize) -> Poly {
        Poly::monomial(vec![0; n], comp)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mon, Coeff)>>(it: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mon, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled(other, &Coeff::one());
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled(other, &-Coeff::one());
        r
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Number of variables, if any term is present.
    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.exp.len())
    }

    pub fn coeff_of(&self, m: &Mon) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn components(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|m| m.comp).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Component `e` as a single-component polynomial (component 0).
    pub fn component(&self, e: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.comp == e)
                .map(|(m, c)| (Mon::new(m.exp.clone(), 0), c.clone()))
                .collect(),
        }
    }

    /// Move every term of a single-component polynomial to component `e`.
    pub fn with_comp(&self, e: usize) -> Poly {
        self.map_comp(|_| e)
    }

    pub fn map_comp<F: Fn(usize) -> usize>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (Mon::new(m.exp.clone(), f(m.comp)), c.clone())))
    }

    pub fn map_exp<F: Fn(&[u32]) -> Vec<u32>>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (Mon::new(f(&m.exp), m.comp), c.clone())))
    }

    /// Commutative product with a monomial (no commutation relations).
    pub fn shift_exp(&self, by: &[u32]) -> Poly {
        self.map_exp(|e| exp_add(e, by))
    }

    /// Commutative product; components of `other` are kept.
    pub fn mul_commutative(&self, other: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                r.add_term(Mon::new(exp_add(&a.exp, &b.exp), b.comp), ca * cb);
            }
        }
        r
    }

    pub fn leading(&self, order: &Order) -> Option<(&Mon, &Coeff)> {
        let mut best: Option<(&Mon, &Coeff)> = None;
        for (m, c) in &self.terms {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if order.compare(&m.exp, m.comp, &bm.exp, bm.comp) == Ordering::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        best
    }

    pub fn lead_mon(&self, order: &Order) -> Option<Mon> {
        self.leading(order).map(|(m, _)| m.clone())
    }

    pub fn lead_coeff(&self, order: &Order) -> Coeff {
        self.leading(order).map(|(_, c)| c.clone()).unwrap_or_else(Coeff::zero)
    }

    pub fn lead_exp(&self, order: &Order) -> LeadExp {
        match self.leading(order) {
            None => LeadExp::Bottom,
            Some((m, _)) => LeadExp::At(m.exp.clone(), m.comp),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, order: &Order) -> Poly {
        match self.leading(order) {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = Coeff::one() / c;
                self.scale(&inv)
            }
        }
    }

    /// Terms sorted from largest to smallest.
    pub fn sorted_terms(&self, order: &Order) -> Vec<(Mon, Coeff)> {
        let mut v: Vec<(Mon, Coeff)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.compare(&b.0.exp, b.0.comp, &a.0.exp, a.0.comp));
        v
    }

    /// `max <u, a> + s_e` over the terms; `None` stands for minus infinity.
    pub fn weighted_degree(&self, u: &[i64], s: &[i64]) -> Option<i64> {
        self.terms.keys().map(|m| dot(u, &m.exp) + shift_at(s, m.comp)).max()
    }

    /// Terms of maximal `u[s]`-degree.
    pub fn weighted_leading_part(&self, u: &[i64], s: &[i64]) -> Poly {
        match self.weighted_degree(u, s) {
            None => Poly::zero(),
            Some(d) => Poly {
                terms: self
                    .terms
                    .iter()
                    .filter(|(m, _)| dot(u, &m.exp) + shift_at(s, m.comp) == d)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            },
        }
    }

    pub fn is_homogeneous(&self, u: &[i64], s: &[i64]) -> bool {
        let mut it = self.terms.keys().map(|m| dot(u, &m.exp) + shift_at(s, m.comp));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Embedding into the free algebra via the canonical word.
    pub fn to_free(&self) -> FreeElement {
        FreeElement::from_terms(
            self.terms.iter().map(|(m, c)| ((Word::standard(&m.exp), m.comp), c.clone())),
        )
    }

    pub fn render(&self, names: &[String], labels: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let order = Order::DegLex;
        let sorted = self.sorted_terms(&order);
        let mut out = String::new();
        for (i, (m, c)) in sorted.iter().enumerate() {
            let (neg, abs) = if coeff::is_neg(c) { (true, -c.clone()) } else { (false, c.clone()) };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = render_exp(&m.exp, names);
            match (abs.is_one(), body.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&body),
                (false, true) => out.push_str(&coeff::render(&abs)),
                (false, false) => {
                    out.push_str(&coeff::render(&abs));
                    out.push('*');
                    out.push_str(&body);
                }
            }
            if let Some(ls) = labels {
                out.push_str(&format!("({})", ls.get(m.comp).cloned().unwrap_or_else(|| m.comp.to_string())));
            }
        }
        out
    }
}

pub(crate) fn shift_at(s: &[i64], e: usize) -> i64 {
    s.get(e).copied().unwrap_or(0)
}

fn render_exp(exp: &[u32], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.nvars().unwrap_or(0);
        let many = self.components().iter().any(|&e| e != 0);
        let labels: Vec<String> = (0..=self.components().last().copied().unwrap_or(0)).map(|e| e.to_string()).collect();
        write!(f, "{}", self.render(&default_names(n), if many { Some(&labels) } else { None }))
    }
}

/// A word in the free monoid on the variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Word {
        Word(vec![i])
    }

    /// The sorted word `x_0^a0 x_1^a1 ...`.
    pub fn standard(exp: &[u32]) -> Word {
        let mut w = Vec::new();
        for (i, &e) in exp.iter().enumerate() {
            for _ in 0..e {
                w.push(i);
            }
        }
        Word(w)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        for &i in &self.0 {
            e[i] += 1;
        }
        e
    }

    pub fn is_standard(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Position of the leftmost adjacent pair `x_j x_i` with `i < j`.
    pub fn first_inversion(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] > w[1])
    }

    /// Exponent under `order`, then length, then lexicographic on letters.
    pub fn compare(&self, ea: usize, other: &Word, eb: usize, n: usize, order: &Order) -> Ordering {
        order
            .compare(&self.exponent(n), ea, &other.exponent(n), eb)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A finite sum of `coefficient * word (e)` in the free module over the free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeElement {
    pub terms: BTreeMap<(Word, usize), Coeff>,
}

impl FreeElement {
    pub fn zero() -> FreeElement {
        FreeElement::default()
    }

    pub fn word(w: Word, comp: usize) -> FreeElement {
        FreeElement::from_terms([((w, comp), Coeff::one())])
    }

    pub fn constant(c: Coeff) -> FreeElement {
        FreeElement::from_terms([((Word::empty(), 0), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = ((Word, usize), Coeff)>>(it: I) -> FreeElement {
        let mut f = FreeElement::zero();
        for (k, c) in it {
            f.add_term(k, c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: (Word, usize), c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FreeElement, c: &Coeff) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut r = self.clone();
        r.add_scaled(other, &Coeff::one());
        r
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        let mut r = self.clone();
        r.add_scaled(other, &-Coeff::one());
        r
    }

    pub fn scale(&self, c: &Coeff) -> FreeElement {
        FreeElement::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Product in the free algebra; the component of `other` wins unless it is 0.
    pub fn mul(&self, other: &FreeElement) -> FreeElement {
        let mut r = FreeElement::zero();
        for ((wa, ea), ca) in &self.terms {
            for ((wb, eb), cb) in &other.terms {
                r.add_term((wa.concat(wb), (*ea).max(*eb)), ca * cb);
            }
        }
        r
    }

    /// `t * self * t'` for words `t, t'`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> FreeElement {
        FreeElement::from_terms(
            self.terms.iter().map(|((w, e), c)| ((left.concat(w).concat(right), *e), c.clone())),
        )
    }

    pub fn with_comp(&self, e: usize) -> FreeElement {
        FreeElement::from_terms(self.terms.iter().map(|((w, _), c)| ((w.clone(), e), c.clone())))
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().flat_map(|(w, _)| w.0.iter().copied()).max()
    }

    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(|(w, _)| w.is_standard())
    }

    /// The standard polynomial, if every word is standard.
    pub fn as_standard(&self, n: usize) -> Option<Poly> {
        if !self.is_standard() {
            return None;
        }
        Some(Poly::from_terms(
            self.terms.iter().map(|((w, e), c)| (Mon::new(w.exponent(n), *e), c.clone())),
        ))
    }

    pub fn leading(&self, n: usize, order: &Order) -> Option<((Word, usize), Coeff)> {
        let mut best: Option<(&(Word, usize), &Coeff)> = None;
        for (k, c) in &self.terms {
            best = match best {
                Some((bk, _)) if k.0.compare(k.1, &bk.0, bk.1, n, order) != Ordering::Greater => best,
                _ => Some((k, c)),
            };
        }
        best.map(|(k, c)| (k.clone(), c.clone()))
    }

    pub fn lead_exp(&self, n: usize, order: &Order) -> LeadExp {
        match self.leading(n, order) {
            None => LeadExp::Bottom,
            Some(((w, e), _)) => LeadExp::At(w.exponent(n), e),
        }
    }

    pub fn weighted_degree(&self, n: usize, u: &[i64], s: &[i64]) -> Option<i64> {
        self.terms.keys().map(|(w, e)| dot(u, &w.exponent(n)) + shift_at(s, *e)).max()
    }
}
