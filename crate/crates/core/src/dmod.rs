//! Differential operators on smooth affine charts and the algebras attached
//! to a coordinate `x_n`: the degree zero part of the V-filtration, its
//! reduction modulo `x_n`, and the Hodge weight setup.

use std::sync::Arc;

use num_traits::One;

use crate::algebra::{commutative_gb, make_elementary, Datum, ElementarySpec, PbwDatum};
use crate::bifilt::Level;
use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::groebner::{normal_form, ModRing};
use crate::linalg::Echelon;
use crate::order::Order;
use crate::poly::{unit_exp, Mon, Poly};
use crate::weights::SubalgebraPresentation;

/// Coordinates on `X = V(ideal)` in affine `n`-space: derivations `theta_k`
/// (given by their values on the `x_i`) and functions `f_k` with
/// `[theta_k, theta_l] = 0` and `theta_k(f_l) = delta_kl` modulo the ideal.
/// All polynomials are in the `x` variables only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChart {
    pub x_names: Vec<String>,
    pub y_names: Vec<String>,
    pub ideal: Vec<Poly>,
    /// `theta[k][i] = theta_k(x_i)`.
    pub theta: Vec<Vec<Poly>>,
    pub f: Vec<Poly>,
}

fn ring(names: &[String]) -> Result<Datum> {
    Ok(Arc::new(PbwDatum::polynomial_ring(names.to_vec(), Order::DegRevLex)?))
}

/// `d/dx_i`.
pub fn partial(p: &Poly, i: usize) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        if m.exp[i] == 0 {
            continue;
        }
        let mut e = m.exp.clone();
        e[i] -= 1;
        out.add_term(Mon::new(e, m.comp), c * coeff::int(m.exp[i] as i64));
    }
    out
}

/// Pads exponents with `extra` zeros.
fn widen(p: &Poly, extra: usize) -> Poly {
    p.map_exp(|a| {
        let mut e = a.to_vec();
        e.extend(std::iter::repeat_n(0, extra));
        e
    })
}

/// Sets `x_i = 0` and drops that variable.
fn kill_var(p: &Poly, i: usize) -> Poly {
    Poly::from_terms(p.terms.iter().filter(|(m, _)| m.exp[i] == 0).map(|(m, c)| {
        let mut e = m.exp.clone();
        e.remove(i);
        (Mon::new(e, m.comp), c.clone())
    }))
}

impl AffineChart {
    /// Affine space with the coordinate derivations.
    pub fn affine_space(n: usize) -> AffineChart {
        let x_names = if n == 1 { vec!["x".to_string()] } else { (1..=n).map(|i| format!("x{i}")).collect() };
        let y_names = if n == 1 { vec!["y".to_string()] } else { (1..=n).map(|i| format!("y{i}")).collect() };
        let theta = (0..n)
            .map(|k| (0..n).map(|i| if i == k { Poly::one(n) } else { Poly::zero() }).collect())
            .collect();
        let f = (0..n).map(|i| Poly::var(n, i)).collect();
        AffineChart { x_names, y_names, ideal: Vec::new(), theta, f }
    }

    pub fn n(&self) -> usize {
        self.x_names.len()
    }

    pub fn m(&self) -> usize {
        self.y_names.len()
    }

    pub fn coordinate_ring(&self) -> Result<Datum> {
        ring(&self.x_names)
    }

    /// `theta_k(p)`.
    pub fn apply(&self, k: usize, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for i in 0..self.n() {
            let dp = partial(p, i);
            if !dp.is_zero() && !self.theta[k][i].is_zero() {
                out.add_scaled(&dp.mul_commutative(&self.theta[k][i]), &Coeff::one());
            }
        }
        out
    }

    fn reducer(&self) -> Result<(ModRing, Vec<Poly>)> {
        let r = self.coordinate_ring()?;
        let gb = commutative_gb(&self.x_names, &self.ideal, &r.order)?;
        Ok((ModRing::top(r, 1)?, gb))
    }

    /// Checks the shape of the data and the defining identities modulo the ideal.
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.n(), self.m());
        if self.theta.len() != m || self.theta.iter().any(|t| t.len() != n) || self.f.len() != m {
            return Err(Error::Dimension(format!("chart needs {m} derivations on {n} variables and {m} functions")));
        }
        let all = self.ideal.iter().chain(self.f.iter()).chain(self.theta.iter().flatten());
        for p in all {
            if p.terms.keys().any(|mon| mon.exp.len() != n || mon.comp != 0) {
                return Err(Error::Dimension("chart polynomials must be in the x variables".into()));
            }
        }
        let (ctx, gb) = self.reducer()?;
        let vanishes = |p: &Poly| normal_form(&ctx, p, &gb, true).0.is_zero();
        for k in 0..m {
            for g in &self.ideal {
                if !vanishes(&self.apply(k, g)) {
                    return Err(Error::Invalid(format!("derivation {} does not preserve the ideal", self.y_names[k])));
                }
            }
            for l in 0..m {
                for i in 0..n {
                    let br = self.apply(k, &self.theta[l][i]).sub(&self.apply(l, &self.theta[k][i]));
                    if !vanishes(&br) {
                        return Err(Error::Invalid(format!(
                            "derivations {} and {} do not commute",
                            self.y_names[k], self.y_names[l]
                        )));
                    }
                }
                let delta = if k == l { Poly::one(n) } else { Poly::zero() };
                if !vanishes(&self.apply(k, &self.f[l]).sub(&delta)) {
                    return Err(Error::Invalid(format!(
                        "{} applied to coordinate {} is not {}",
                        self.y_names[k],
                        l + 1,
                        if k == l { 1 } else { 0 }
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `f_m = x_n` and `theta_k(x_n) = delta_km`.
    pub fn is_normalized(&self) -> bool {
        let (n, m) = (self.n(), self.m());
        if n == 0 || m == 0 || self.f[m - 1] != Poly::var(n, n - 1) {
            return false;
        }
        (0..m).all(|k| {
            let expect = if k == m - 1 { Poly::one(n) } else { Poly::zero() };
            self.theta[k][n - 1] == expect
        })
    }

    /// The same variety inside one more dimension, with the new last
    /// coordinate `t = f_m`.
    pub fn reembed(&self, t_name: &str) -> AffineChart {
        let (n, m) = (self.n(), self.m());
        let mut x_names = self.x_names.clone();
        x_names.push(t_name.to_string());
        let mut ideal: Vec<Poly> = self.ideal.iter().map(|g| widen(g, 1)).collect();
        ideal.push(Poly::var(n + 1, n).sub(&widen(&self.f[m - 1], 1)));
        let theta = self
            .theta
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let mut r: Vec<Poly> = row.iter().map(|p| widen(p, 1)).collect();
                r.push(if k == m - 1 { Poly::one(n + 1) } else { Poly::zero() });
                r
            })
            .collect();
        let mut f: Vec<Poly> = self.f.iter().map(|p| widen(p, 1)).collect();
        f[m - 1] = Poly::var(n + 1, n);
        AffineChart { x_names, y_names: self.y_names.clone(), ideal, theta, f }
    }

    /// The chart on `X_0 = X cap {x_n = 0}` given by the first `m - 1`
    /// coordinates.
    pub fn restrict_to_divisor(&self) -> AffineChart {
        let (n, m) = (self.n(), self.m());
        let x_names = self.x_names[..n - 1].to_vec();
        let y_names = self.y_names[..m - 1].to_vec();
        let ideal = self.ideal.iter().map(|g| kill_var(g, n - 1)).filter(|g| !g.is_zero()).collect();
        let theta = self.theta[..m - 1].iter().map(|row| row[..n - 1].iter().map(|p| kill_var(p, n - 1)).collect()).collect();
        let f = self.f[..m - 1].iter().map(|p| kill_var(p, n - 1)).collect();
        AffineChart { x_names, y_names, ideal, theta, f }
    }
}

/// Differential operators on the chart, with `y_k` acting as `theta_k`.
pub fn build_tx(chart: &AffineChart) -> Result<PbwDatum> {
    chart.validate()?;
    let m = chart.m();
    let f = (0..chart.n()).map(|i| (0..m).map(|k| widen(&chart.theta[k][i], m)).collect()).collect();
    make_elementary(&ElementarySpec {
        x_names: chart.x_names.clone(),
        y_names: chart.y_names.clone(),
        f,
        d: Vec::new(),
        ideal_gens: chart.ideal.iter().map(|g| widen(g, m)).collect(),
        order: None,
    })
}

/// The algebra generated by the `x_i`, `y_k` for `k < m` and `z = x_n y_m`,
/// with its embedding into [`build_tx`] of the same chart.
pub fn build_txv(chart: &AffineChart) -> Result<SubalgebraPresentation> {
    chart.validate()?;
    if !chart.is_normalized() {
        return Err(Error::Invalid("chart must satisfy f_m = x_n and theta_k(x_n) = delta_km".into()));
    }
    let (n, m) = (chart.n(), chart.m());
    let xn = Poly::var(n, n - 1);
    let mut y_names: Vec<String> = chart.y_names[..m - 1].to_vec();
    y_names.push(fresh_name("z", &chart.x_names, &y_names));
    let f = (0..n)
        .map(|i| {
            let mut row: Vec<Poly> = (0..m - 1).map(|k| widen(&chart.theta[k][i], m)).collect();
            row.push(widen(&xn.mul_commutative(&chart.theta[m - 1][i]), m));
            row
        })
        .collect();
    let datum = make_elementary(&ElementarySpec {
        x_names: chart.x_names.clone(),
        y_names,
        f,
        d: Vec::new(),
        ideal_gens: chart.ideal.iter().map(|g| widen(g, m)).collect(),
        order: None,
    })?;
    let mut images: Vec<Vec<u32>> = (0..n + m - 1).map(|i| unit_exp(n + m, i)).collect();
    let mut z = unit_exp(n + m, n - 1);
    z[n + m - 1] = 1;
    images.push(z);
    Ok(SubalgebraPresentation { datum: Arc::new(datum), images, trusted: true })
}

fn fresh_name(base: &str, a: &[String], b: &[String]) -> String {
    let mut name = base.to_string();
    while a.contains(&name) || b.contains(&name) {
        name.push('_');
    }
    name
}

/// Checks that every relation of the presentation holds in `tx`.
pub fn check_embedding(pres: &SubalgebraPresentation, tx: &PbwDatum) -> Result<()> {
    for (i, j, c, d) in pres.datum.relations_list() {
        let xi = Poly::monomial(pres.images[i].clone(), 0);
        let xj = Poly::monomial(pres.images[j].clone(), 0);
        let lhs = tx.mul(&xj, &xi);
        let rhs = tx.mul(&xi, &xj).scale(&c).add(&pres.evaluate(tx, &d));
        if lhs != rhs {
            let names = &pres.datum.names;
            return Err(Error::Invalid(format!("relation for ({}, {}) fails in the ambient algebra", names[i], names[j])));
        }
    }
    for g in &pres.datum.ideal {
        if !pres.evaluate(tx, g).is_zero() {
            return Err(Error::Invalid("ideal element does not vanish in the ambient algebra".into()));
        }
    }
    Ok(())
}

/// Looks for a linear dependency among the images of the standard
/// monomials of total degree at most `bound`; returns it if one exists.
pub fn injectivity_counterexample(pres: &SubalgebraPresentation, tx: &PbwDatum, bound: u32) -> Option<Poly> {
    let b = &pres.datum;
    let mons: Vec<Vec<u32>> = crate::algebra::monomials_up_to(b.n, bound).into_iter().filter(|a| !b.in_lead_ideal(a)).collect();
    let mut cols: std::collections::BTreeMap<Mon, usize> = std::collections::BTreeMap::new();
    // Rows carry the image followed by a tag column per source monomial.
    let images: Vec<Poly> = mons.iter().map(|a| pres.evaluate(tx, &Poly::monomial(a.clone(), 0))).collect();
    for p in &images {
        for m in p.terms.keys() {
            let k = cols.len();
            cols.entry(m.clone()).or_insert(k);
        }
    }
    let width = cols.len();
    let mut ech = Echelon::new();
    for (k, p) in images.iter().enumerate() {
        let mut row: crate::linalg::Row = p.terms.iter().map(|(m, c)| (cols[m], c.clone())).collect();
        row.insert(width + k, Coeff::one());
        ech.insert(row);
    }
    ech.rows_within(|c| c >= width).into_iter().next().map(|row| {
        Poly::from_terms(row.into_iter().map(|(c, v)| (Mon::new(mons[c - width].clone(), 0), v)))
    })
}

/// `T_X^V` modulo `x_n`: drops `x_n`, sets it to zero in all relations and
/// in the ideal; `z` becomes central.
pub fn build_txv_mod_xn(chart: &AffineChart) -> Result<PbwDatum> {
    if !chart.is_normalized() {
        return Err(Error::Invalid("chart must satisfy f_m = x_n and theta_k(x_n) = delta_km".into()));
    }
    let (n, m) = (chart.n(), chart.m());
    let x_names = chart.x_names[..n - 1].to_vec();
    let mut y_names: Vec<String> = chart.y_names[..m - 1].to_vec();
    y_names.push(fresh_name("z", &chart.x_names, &y_names));
    let f = (0..n - 1)
        .map(|i| {
            let mut row: Vec<Poly> = (0..m - 1).map(|k| widen(&kill_var(&chart.theta[k][i], n - 1), m)).collect();
            row.push(Poly::zero());
            row
        })
        .collect();
    let ideal_gens = chart.ideal.iter().map(|g| kill_var(g, n - 1)).filter(|g| !g.is_zero()).map(|g| widen(&g, m)).collect();
    make_elementary(&ElementarySpec { x_names, y_names, f, d: Vec::new(), ideal_gens, order: None })
}

/// Data of the isomorphism `T_X^V / x_n T_X^V = T_{X_0}[z]`, which is the
/// identity on letters.
#[derive(Clone, Debug)]
pub struct DivisorIdentification {
    pub divisor_chart: AffineChart,
    /// `T_{X_0}[z]`.
    pub polynomial_extension: PbwDatum,
    pub quotient: PbwDatum,
    pub letters: Vec<String>,
}

pub fn identify_tx0z(chart: &AffineChart) -> Result<DivisorIdentification> {
    let quotient = build_txv_mod_xn(chart)?;
    let divisor_chart = chart.restrict_to_divisor();
    let tx0 = build_tx(&divisor_chart)?;
    let z = quotient.names.last().cloned().expect("z");
    let mut names = tx0.names.clone();
    let (n0, m0) = (divisor_chart.n(), divisor_chart.m());
    let mut rels: Vec<(usize, usize, Coeff, Poly)> = tx0
        .relations_list()
        .into_iter()
        .map(|(i, j, c, d)| (i, j, c, widen(&d, 1)))
        .collect();
    names.push(z);
    for i in 0..n0 + m0 {
        rels.push((i, n0 + m0, Coeff::one(), Poly::zero()));
    }
    let mut gens = Vec::new();
    if let crate::algebra::Provenance::Elementary { gens: g } = &tx0.provenance {
        gens = g.iter().map(|p| widen(p, 1)).collect();
    }
    let order = quotient.order.clone();
    let ideal = if gens.is_empty() { Vec::new() } else { commutative_gb(&names, &gens, &order)? };
    let provenance = if gens.is_empty() {
        crate::algebra::Provenance::Pbw
    } else {
        crate::algebra::Provenance::Elementary { gens }
    };
    let polynomial_extension = PbwDatum::new(names.clone(), rels, ideal, order, provenance)?;
    for (a, b) in polynomial_extension.relations_list().iter().zip(quotient.relations_list()) {
        if a.0 != b.0 || a.1 != b.1 || a.2 != b.2 || a.3 != b.3 {
            return Err(Error::Invalid(format!(
                "relations for ({}, {}) differ between the quotient and the polynomial extension",
                names[b.0], names[b.1]
            )));
        }
    }
    if polynomial_extension.ideal != quotient.ideal {
        return Err(Error::Invalid("ideal parts differ between the quotient and the polynomial extension".into()));
    }
    Ok(DivisorIdentification { divisor_chart, polynomial_extension, quotient, letters: names })
}

/// Weights of the V-filtration along `x_n` and of the order filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeWeights {
    pub n: usize,
    pub m: usize,
    pub v: Vec<i64>,
    pub w: Vec<i64>,
}

pub fn hodge_weights(n: usize, m: usize) -> HodgeWeights {
    let mut v = vec![0i64; n + m];
    v[n - 1] = -1;
    v[n + m - 1] = 1;
    let mut w = vec![0i64; n];
    w.extend(std::iter::repeat_n(1, m));
    HodgeWeights { n, m, v, w }
}

impl HodgeWeights {
    /// `{x_n^{-d}}` for `d <= 0`, `{y_m^l : l <= d}` otherwise, with
    /// `w`-degrees `l`.
    pub fn level(&self, d: i64) -> Level {
        let len = self.n + self.m;
        if d <= 0 {
            let mut e = vec![0u32; len];
            e[self.n - 1] = d.unsigned_abs() as u32;
            Level { d, gens: vec![e], t: vec![0] }
        } else {
            let gens = (0..=d)
                .map(|l| {
                    let mut e = vec![0u32; len];
                    e[len - 1] = l as u32;
                    e
                })
                .collect();
            Level { d, gens, t: (0..=d).collect() }
        }
    }
}
