//! PBW-reduction data: commutation systems, a commutative ideal part and a
//! well-ordering. Elements are kept as canonical standard polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Row};
use crate::order::Order;
use crate::poly::{exp_add, exp_divides, unit_exp, FreeElement, Mon, Poly, Word};
use crate::text;

/// How the ideal part of a datum was obtained; decides whether it can be
/// recomputed for another ordering.
#[derive(Clone, Debug)]
pub enum Provenance {
    /// No ideal part.
    Pbw,
    /// Ideal part is a commutative Gröbner basis of `gens`.
    Elementary { gens: Vec<Poly> },
    /// Quotient of `base` by the two-sided ideal generated by `gens`.
    Factor { base: Arc<PbwDatum>, gens: Vec<Poly> },
    /// Supplied by the user; taken on faith.
    Trusted,
}

/// `x_j x_i = c x_i x_j + d` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub c: Coeff,
    pub d: Poly,
}

pub struct PbwDatum {
    pub n: usize,
    pub names: Vec<String>,
    relations: BTreeMap<(usize, usize), Relation>,
    pub ideal: Vec<Poly>,
    ideal_lead: Vec<Vec<u32>>,
    pub order: Order,
    pub provenance: Provenance,
    commutative: bool,
    var_cache: Mutex<HashMap<(Vec<u32>, usize), Poly>>,
    mono_cache: Mutex<HashMap<(Vec<u32>, Vec<u32>), Poly>>,
}

impl Clone for PbwDatum {
    fn clone(&self) -> Self {
        PbwDatum {
            n: self.n,
            names: self.names.clone(),
            relations: self.relations.clone(),
            ideal: self.ideal.clone(),
            ideal_lead: self.ideal_lead.clone(),
            order: self.order.clone(),
            provenance: self.provenance.clone(),
            commutative: self.commutative,
            var_cache: Mutex::new(HashMap::new()),
            mono_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for PbwDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PbwDatum")
            .field("names", &self.names)
            .field("relations", &self.relations_list())
            .field("ideal", &self.ideal.iter().map(|p| self.render(p)).collect::<Vec<_>>())
            .field("order", &self.order)
            .finish()
    }
}

pub type Datum = Arc<PbwDatum>;

/// One commutation step `coeff * left * (x_j x_i - c x_i x_j - d) * right` on component `comp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommStep {
    pub coeff: Coeff,
    pub left: Word,
    pub pair: (usize, usize),
    pub right: Word,
    pub comp: usize,
}

/// Witness for `p = residue + sum a_g g + sum t s t'`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub residue: Poly,
    /// `(ideal generator, component) -> left coefficient`.
    pub ideal_part: BTreeMap<(usize, usize), Poly>,
    pub comm_part: Vec<CommStep>,
}

impl PbwDatum {
    pub fn new(
        names: Vec<String>,
        relations: Vec<(usize, usize, Coeff, Poly)>,
        ideal: Vec<Poly>,
        order: Order,
        provenance: Provenance,
    ) -> Result<PbwDatum> {
        let n = names.len();
        order.check_arity(n)?;
        if !order.is_well() {
            return Err(Error::NotWellOrdered(format!("{order:?}")));
        }
        let mut rels = BTreeMap::new();
        for (i, j, c, d) in relations {
            if i >= j || j >= n {
                return Err(Error::Invalid(format!("relation indices ({i}, {j}) must satisfy i < j < {n}")));
            }
            if c.is_zero() {
                return Err(Error::Invalid(format!("relation ({i}, {j}) has zero coefficient")));
            }
            check_poly(&d, n)?;
            if c.is_one() && d.is_zero() {
                continue;
            }
            rels.insert((i, j), Relation { c, d });
        }
        let ideal: Vec<Poly> = ideal.into_iter().filter(|p| !p.is_zero()).collect();
        for g in &ideal {
            check_poly(g, n)?;
        }
        let commutative = rels.is_empty();
        let datum = PbwDatum {
            n,
            names,
            relations: rels,
            ideal_lead: Vec::new(),
            ideal,
            order,
            provenance,
            commutative,
            var_cache: Mutex::new(HashMap::new()),
            mono_cache: Mutex::new(HashMap::new()),
        };
        datum.check_relations(&datum.order)?;
        Ok(datum.refresh_leads())
    }

    fn refresh_leads(mut self) -> PbwDatum {
        self.ideal_lead = self.ideal.iter().map(|g| g.lead_mon(&self.order).unwrap().exp).collect();
        self
    }

    /// `lm(d_ij) < x_i x_j` under `order`.
    pub fn check_relations(&self, order: &Order) -> Result<()> {
        for (&(i, j), r) in &self.relations {
            let xixj = exp_add(&unit_exp(self.n, i), &unit_exp(self.n, j));
            if let Some(m) = r.d.lead_mon(order) {
                if order.cmp_exp(&m.exp, &xixj) != Ordering::Less {
                    return Err(Error::Invalid(format!(
                        "relation for ({}, {}) is not a commutation relation: leading term of the correction is not below {}*{}",
                        self.names[i], self.names[j], self.names[i], self.names[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn polynomial_ring(names: Vec<String>, order: Order) -> Result<PbwDatum> {
        PbwDatum::new(names, vec![], vec![], order, Provenance::Pbw)
    }

    /// Algebra without ideal part.
    pub fn pbw(names: Vec<String>, relations: Vec<(usize, usize, Coeff, Poly)>, order: Order) -> Result<PbwDatum> {
        PbwDatum::new(names, relations, vec![], order, Provenance::Pbw)
    }

    /// Weyl algebra in `x1..xk, d1..dk` (or `x, d` when `k = 1`).
    pub fn weyl(k: usize, order: Order) -> Result<PbwDatum> {
        let mut names = Vec::new();
        if k == 1 {
            names.push("x".to_string());
            names.push("d".to_string());
        } else {
            names.extend((1..=k).map(|i| format!("x{i}")));
            names.extend((1..=k).map(|i| format!("d{i}")));
        }
        let n = 2 * k;
        let rels = (0..k).map(|i| (i, k + i, coeff::one(), Poly::one(n))).collect();
        PbwDatum::pbw(names, rels, order)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn relation(&self, i: usize, j: usize) -> (Coeff, Poly) {
        match self.relations.get(&(i, j)) {
            Some(r) => (r.c.clone(), r.d.clone()),
            None => (coeff::one(), Poly::zero()),
        }
    }

    /// Non-trivial relations as `(i, j, c, d)`.
    pub fn relations_list(&self) -> Vec<(usize, usize, Coeff, Poly)> {
        self.relations.iter().map(|(&(i, j), r)| (i, j, r.c.clone(), r.d.clone())).collect()
    }

    /// `x_j x_i - c x_i x_j - d` in the free algebra.
    pub fn relation_element(&self, i: usize, j: usize) -> FreeElement {
        let (c, d) = self.relation(i, j);
        let mut f = FreeElement::word(Word(vec![j, i]), 0);
        f.add_term((Word(vec![i, j]), 0), -c);
        f.sub(&d.to_free())
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.n, i)
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.n)
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        Poly::constant(self.n, c)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `x^a * x_k` modulo the commutation relations only.
    pub fn mul_mono_var(&self, a: &[u32], k: usize) -> Poly {
        let last = a.iter().rposition(|&e| e > 0);
        let j = match last {
            Some(j) if j > k => j,
            _ => {
                let mut e = a.to_vec();
                e[k] += 1;
                return Poly::monomial(e, 0);
            }
        };
        if self.commutative {
            let mut e = a.to_vec();
            e[k] += 1;
            return Poly::monomial(e, 0);
        }
        let key = (a.to_vec(), k);
        if let Some(p) = self.var_cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let mut rest = a.to_vec();
        rest[j] -= 1;
        let (c, d) = self.relation(k, j);
        let left = self.mul_mono_var(&rest, k);
        let mut out = self.mul_poly_var(&left, j).scale(&c);
        if !d.is_zero() {
            let tail = self.rho_mul(&Poly::monomial(rest, 0), &d);
            out.add_scaled(&tail, &coeff::one());
        }
        self.var_cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Right multiplication by a variable modulo the commutation relations.
    pub fn mul_poly_var(&self, p: &Poly, k: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            let prod = self.mul_mono_var(&m.exp, k);
            for (pm, pc) in prod.terms {
                out.add_term(Mon::new(pm.exp, m.comp), pc * c);
            }
        }
        out
    }

    /// `x^a * x^b` modulo the commutation relations only.
    pub fn rho_mono_mono(&self, a: &[u32], b: &[u32]) -> Poly {
        if self.commutative || b.iter().all(|&e| e == 0) {
            return Poly::monomial(exp_add(a, b), 0);
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(p) = self.mono_cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let mut acc = Poly::monomial(a.to_vec(), 0);
        for (k, &e) in b.iter().enumerate() {
            for _ in 0..e {
                acc = self.mul_poly_var(&acc, k);
            }
        }
        self.mono_cache.lock().unwrap().insert(key, acc.clone());
        acc
    }

    /// Product modulo the commutation relations; `a` is read on component 0,
    /// the components of `b` are kept.
    pub fn rho_mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let prod = self.rho_mono_mono(&ma.exp, &mb.exp);
                let c = ca * cb;
                for (pm, pc) in prod.terms {
                    out.add_term(Mon::new(pm.exp, mb.comp), pc * &c);
                }
            }
        }
        out
    }

    /// Index of an ideal generator whose leading exponent divides `a`.
    pub fn ideal_divisor(&self, a: &[u32]) -> Option<usize> {
        self.ideal_lead.iter().position(|l| exp_divides(l, a))
    }

    pub fn in_lead_ideal(&self, a: &[u32]) -> bool {
        self.ideal_divisor(a).is_some()
    }

    /// Canonical form of a standard polynomial: remove all exponents of the
    /// leading ideal of the ideal part using left multiples.
    pub fn reduce_ideal(&self, p: Poly) -> Poly {
        if self.ideal.is_empty() {
            return p;
        }
        let mut p = p;
        loop {
            let mut best: Option<(Mon, usize)> = None;
            for m in p.terms.keys() {
                if let Some(g) = self.ideal_divisor(&m.exp) {
                    let better = match &best {
                        None => true,
                        Some((b, _)) => self.order.compare(&m.exp, m.comp, &b.exp, b.comp) == Ordering::Greater,
                    };
                    if better {
                        best = Some((m.clone(), g));
                    }
                }
            }
            let Some((m, g)) = best else { return p };
            let gamma: Vec<u32> = m.exp.iter().zip(&self.ideal_lead[g]).map(|(a, b)| a - b).collect();
            let prod = self.rho_mul(&Poly::monomial(gamma, 0), &self.ideal[g]);
            let lc = prod.coeff_of(&Mon::new(m.exp.clone(), 0));
            let factor = p.coeff_of(&m) / lc;
            p.add_scaled(&prod.with_comp(m.comp), &-factor);
        }
    }

    pub fn is_canonical(&self, p: &Poly) -> bool {
        p.terms.keys().all(|m| !self.in_lead_ideal(&m.exp))
    }

    /// Product of an algebra element with a (module) element.
    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce_ideal(self.rho_mul(a, b))
    }

    pub fn mul_mono_left(&self, gamma: &[u32], b: &Poly) -> Poly {
        self.reduce_ideal(self.rho_mul(&Poly::monomial(gamma.to_vec(), 0), b))
    }

    pub fn pow(&self, a: &Poly, k: u32) -> Poly {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `a*b - b*a`.
    pub fn commutator(&self, a: &Poly, b: &Poly) -> Poly {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Canonical form of a free-algebra element.
    pub fn tau(&self, f: &FreeElement) -> Poly {
        let mut out = Poly::zero();
        for ((w, e), c) in &f.terms {
            let mut acc = self.one();
            for &k in &w.0 {
                acc = self.mul_poly_var(&acc, k);
            }
            out.add_scaled(&acc.with_comp(*e), c);
        }
        self.reduce_ideal(out)
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        let f = text::parse_free(s, &self.names)?;
        Ok(self.tau(&f))
    }

    pub fn render(&self, p: &Poly) -> String {
        p.render(&self.names, None)
    }

    pub fn render_module(&self, p: &Poly, labels: &[String]) -> String {
        p.render(&self.names, Some(labels))
    }

    /// Word-rewriting canonical form with a certificate. With
    /// `use_ideal = false` only commutation steps are taken.
    pub fn tau_certified(&self, f: &FreeElement, use_ideal: bool) -> Certificate {
        let n = self.n;
        let mut work = f.clone();
        let mut ideal_part: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        let mut comm_part = Vec::new();
        loop {
            let mut best: Option<(&(Word, usize), &Coeff)> = None;
            for (k, c) in &work.terms {
                if k.0.is_standard() {
                    continue;
                }
                best = match best {
                    Some((bk, _)) if k.0.compare(k.1, &bk.0, bk.1, n, &self.order) != Ordering::Greater => best,
                    _ => Some((k, c)),
                };
            }
            if let Some(((w, e), c)) = best {
                let (w, e, c) = (w.clone(), *e, c.clone());
                let pos = w.first_inversion().unwrap();
                let (j, i) = (w.0[pos], w.0[pos + 1]);
                let left = Word(w.0[..pos].to_vec());
                let right = Word(w.0[pos + 2..].to_vec());
                let rel = self.relation_element(i, j).with_comp(e).sandwich(&left, &right);
                work.add_scaled(&rel, &-c.clone());
                comm_part.push(CommStep { coeff: c, left, pair: (i, j), right, comp: e });
                continue;
            }
            if !use_ideal || self.ideal.is_empty() {
                break;
            }
            let std = work.as_standard(n).unwrap();
            let mut target: Option<(Mon, usize)> = None;
            for m in std.terms.keys() {
                if let Some(g) = self.ideal_divisor(&m.exp) {
                    let better = match &target {
                        None => true,
                        Some((b, _)) => self.order.compare(&m.exp, m.comp, &b.exp, b.comp) == Ordering::Greater,
                    };
                    if better {
                        target = Some((m.clone(), g));
                    }
                }
            }
            let Some((m, g)) = target else { break };
            let gamma: Vec<u32> = m.exp.iter().zip(&self.ideal_lead[g]).map(|(a, b)| a - b).collect();
            let lc = self.rho_mul(&Poly::monomial(gamma.clone(), 0), &self.ideal[g]).coeff_of(&Mon::new(m.exp.clone(), 0));
            let factor = std.coeff_of(&m) / lc;
            let prod = FreeElement::word(Word::standard(&gamma), 0).mul(&self.ideal[g].to_free()).with_comp(m.comp);
            work.add_scaled(&prod, &-factor.clone());
            ideal_part
                .entry((g, m.comp))
                .or_default()
                .add_term(Mon::new(gamma, 0), factor);
        }
        let residue = work.as_standard(n).unwrap();
        ideal_part.retain(|_, v| !v.is_zero());
        Certificate { residue, ideal_part, comm_part }
    }

    /// Checks the certificate identity and the degree bounds.
    pub fn check_certificate(&self, f: &FreeElement, cert: &Certificate) -> bool {
        let n = self.n;
        let mut total = cert.residue.to_free();
        for (&(g, e), a) in &cert.ideal_part {
            total = total.add(&a.to_free().mul(&self.ideal[g].to_free()).with_comp(e));
        }
        let mut bounds_ok = true;
        let lead = f.lead_exp(n, &self.order);
        for step in &cert.comm_part {
            let rel = self.relation_element(step.pair.0, step.pair.1).with_comp(step.comp);
            total = total.add(&rel.sandwich(&step.left, &step.right).scale(&step.coeff));
            let e = exp_add(
                &exp_add(&step.left.exponent(n), &exp_add(&unit_exp(n, step.pair.0), &unit_exp(n, step.pair.1))),
                &step.right.exponent(n),
            );
            let at = crate::order::LeadExp::At(e, step.comp);
            bounds_ok &= at.compare(&lead, &self.order) != Ordering::Greater;
        }
        for (&(g, e), a) in &cert.ideal_part {
            let la = a.lead_mon(&self.order).unwrap();
            let at = crate::order::LeadExp::At(exp_add(&la.exp, &self.ideal_lead[g]), e);
            bounds_ok &= at.compare(&lead, &self.order) != Ordering::Greater;
        }
        bounds_ok && total == *f && self.is_canonical(&cert.residue)
    }

    /// The same algebra with another well-ordering; the ideal part is
    /// recomputed when the provenance allows it.
    pub fn with_order(&self, order: Order) -> Result<PbwDatum> {
        if order == self.order {
            return Ok(self.clone());
        }
        order.check_arity(self.n)?;
        if !order.is_well() {
            return Err(Error::NotWellOrdered(format!("{order:?}")));
        }
        self.check_relations(&order)?;
        let rels = self.relations_list();
        match &self.provenance {
            Provenance::Pbw => PbwDatum::new(self.names.clone(), rels, vec![], order, Provenance::Pbw),
            Provenance::Elementary { gens } => {
                let ideal = commutative_gb(&self.names, gens, &order)?;
                PbwDatum::new(self.names.clone(), rels, ideal, order, Provenance::Elementary { gens: gens.clone() })
            }
            Provenance::Factor { base, gens } => {
                let base = Arc::new(base.with_order(order)?);
                factor_algebra(&base, gens)
            }
            Provenance::Trusted => {
                if self.ideal.is_empty() {
                    PbwDatum::new(self.names.clone(), rels, vec![], order, Provenance::Trusted)
                } else {
                    Err(Error::Unsupported(
                        "cannot recompute a trusted ideal part for another ordering".into(),
                    ))
                }
            }
        }
    }

    /// Falsifier for the ideal-part condition: searches the two-sided ideal
    /// generated by the relations and the ideal part, truncated at word length
    /// `bound`, for standard polynomials whose leading exponent is not in the
    /// leading ideal of the ideal part.
    pub fn verify_bounded(&self, bound: usize) -> Option<Poly> {
        let n = self.n;
        let mut words: Vec<Word> = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &layer {
                for k in 0..n {
                    next.push(w.concat(&Word::letter(k)));
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        // Non-standard words first, then standard words from largest to smallest.
        let mut nonstd: Vec<Word> = words.iter().filter(|w| !w.is_standard()).cloned().collect();
        nonstd.sort();
        let mut std: Vec<Word> = words.iter().filter(|w| w.is_standard()).cloned().collect();
        std.sort_by(|a, b| self.order.cmp_exp(&b.exponent(n), &a.exponent(n)));
        let split = nonstd.len();
        let index: HashMap<Word, usize> = nonstd.iter().chain(std.iter()).cloned().enumerate().map(|(i, w)| (w, i)).collect();

        let mut gens: Vec<FreeElement> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                gens.push(self.relation_element(i, j));
            }
        }
        gens.extend(self.ideal.iter().map(|g| g.to_free()));
        let mut ech = Echelon::new();
        for g in &gens {
            let glen = g.terms.keys().map(|(w, _)| w.len()).max().unwrap_or(0);
            if glen > bound {
                continue;
            }
            let room = bound - glen;
            for l in words.iter().filter(|w| w.len() <= room) {
                for r in words.iter().filter(|w| w.len() + l.len() <= room) {
                    let prod = g.sandwich(l, r);
                    let row: Row = prod.terms.iter().map(|((w, _), c)| (index[w], c.clone())).collect();
                    ech.insert(row);
                }
            }
        }
        for row in ech.rows_within(|c| c >= split) {
            let (&pivot, _) = row.iter().next().unwrap();
            let lead = std[pivot - split].exponent(n);
            if !self.in_lead_ideal(&lead) {
                let p = Poly::from_terms(row.iter().map(|(c, v)| (Mon::new(std[c - split].exponent(n), 0), v.clone())));
                return Some(p.monic(&self.order));
            }
        }
        None
    }
}

fn check_poly(p: &Poly, n: usize) -> Result<()> {
    for m in p.terms.keys() {
        if m.exp.len() != n {
            return Err(Error::Dimension(format!("polynomial has {} variables, expected {n}", m.exp.len())));
        }
        if m.comp != 0 {
            return Err(Error::Invalid("algebra elements live on component 0".into()));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of a commutative ideal.
pub fn commutative_gb(names: &[String], gens: &[Poly], order: &Order) -> Result<Vec<Poly>> {
    let ring = Arc::new(PbwDatum::polynomial_ring(names.to_vec(), order.clone())?);
    let ctx = crate::groebner::ModRing::new(ring, Order::top(order.clone()), 1)?;
    let gb = crate::groebner::buchberger(&ctx, gens, true)?;
    Ok(gb.gens)
}

/// Data of an elementary algebra in `x` and `y` variables.
#[derive(Clone, Debug)]
pub struct ElementarySpec {
    pub x_names: Vec<String>,
    pub y_names: Vec<String>,
    /// `f[i][k]`: `y_k x_i = x_i y_k + f[i][k]`.
    pub f: Vec<Vec<Poly>>,
    /// `(k, l, d)` with `k < l`: `y_l y_k = y_k y_l + d`.
    pub d: Vec<(usize, usize, Poly)>,
    pub ideal_gens: Vec<Poly>,
    pub order: Option<Order>,
}

/// Default ordering for elementary data: `y`-degree first, then degree reverse lex.
pub fn elementary_order(nx: usize, ny: usize) -> Order {
    let mut u = vec![0; nx];
    u.extend(std::iter::repeat_n(1, ny));
    Order::weighted(u, Order::DegRevLex)
}

fn y_degree(e: &[u32], nx: usize) -> u32 {
    e[nx..].iter().sum()
}

pub fn make_elementary(spec: &ElementarySpec) -> Result<PbwDatum> {
    let nx = spec.x_names.len();
    let ny = spec.y_names.len();
    let n = nx + ny;
    let order = spec.order.clone().unwrap_or_else(|| elementary_order(nx, ny));
    order.check_arity(n)?;
    if !order.is_well() {
        return Err(Error::NotWellOrdered(format!("{order:?}")));
    }
    check_y_degree_order(&order, nx, ny)?;
    let x_only = |p: &Poly| -> Result<()> {
        check_poly(p, n)?;
        if p.terms.keys().any(|m| y_degree(&m.exp, nx) > 0) {
            return Err(Error::Invalid("correction terms of an elementary datum must not involve y-variables".into()));
        }
        Ok(())
    };
    let mut rels = Vec::new();
    if spec.f.len() != nx || spec.f.iter().any(|r| r.len() != ny) {
        return Err(Error::Dimension("f must be an nx by ny table".into()));
    }
    for i in 0..nx {
        for k in 0..ny {
            let f = &spec.f[i][k];
            x_only(f)?;
            rels.push((i, nx + k, coeff::one(), f.clone()));
        }
    }
    for (k, l, d) in &spec.d {
        if k >= l || *l >= ny {
            return Err(Error::Invalid(format!("y relation indices ({k}, {l})")));
        }
        x_only(d)?;
        rels.push((nx + k, nx + l, coeff::one(), d.clone()));
    }
    for g in &spec.ideal_gens {
        x_only(g)?;
    }
    let mut names = spec.x_names.clone();
    names.extend(spec.y_names.iter().cloned());
    let ideal = commutative_gb(&names, &spec.ideal_gens, &order)?;
    PbwDatum::new(names, rels, ideal, order, Provenance::Elementary { gens: spec.ideal_gens.clone() })
}

/// Samples the condition that larger `y`-degree means larger monomial.
fn check_y_degree_order(order: &Order, nx: usize, ny: usize) -> Result<()> {
    if ny == 0 {
        return Ok(());
    }
    let n = nx + ny;
    let mons = monomials_up_to(n, 3);
    for a in &mons {
        for b in &mons {
            if y_degree(a, nx) < y_degree(b, nx) && order.cmp_exp(a, b) != Ordering::Less {
                return Err(Error::Invalid("ordering must rank larger y-degree higher".into()));
            }
        }
    }
    Ok(())
}

/// All exponents of total degree at most `d`, in increasing degree.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut cur = vec![0u32; n];
        fill(&mut cur, 0, deg, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    let n = cur.len();
    if n == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if i == n - 1 {
        cur[i] = left;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// Quotient by the two-sided ideal generated by `gens`.
pub fn factor_algebra(base: &Datum, gens: &[Poly]) -> Result<PbwDatum> {
    let ctx = crate::groebner::ModRing::new(base.clone(), Order::top(base.order.clone()), 1)?;
    let closure = crate::groebner::two_sided_closure(&ctx, gens)?;
    let gb = crate::groebner::buchberger(&ctx, &closure, true)?;
    let mut ideal = base.ideal.clone();
    ideal.extend(gb.gens.iter().cloned());
    PbwDatum::new(
        base.names.clone(),
        base.relations_list(),
        ideal,
        base.order.clone(),
        Provenance::Factor { base: base.clone(), gens: gens.to_vec() },
    )
}

pub fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}
