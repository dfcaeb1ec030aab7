//! Submodules over `F_0^v A` inside free `A`-modules and their induced
//! `w`-filtrations.
//!
//! A level `d` is presented as `F_0^v A^{P_d} -> F_d^v A`, `q -> sum q_p x^p`
//! (`omega`), with the fixed right inverse `upsilon` given by the greedy
//! level decomposition. Computations over `F_0^v A` run over the datum of a
//! [`SubalgebraPresentation`].

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::One;

use crate::algebra::Datum;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::{member, syzygies, ModRing};
use crate::order::dot;
use crate::poly::{Mon, Poly};
use crate::weights::{
    express_in_level, filtration_gens, filtration_piece, gr_algebra, hilbert_basis_leq, level_gens,
    subalgebra_presentation, FiltGens, GradedDatum, SubalgebraPresentation,
};

/// Pair of weights `v, w` with `F_0^w A` inside `F_0^v A`.
#[derive(Debug)]
pub struct BifiltContext {
    pub datum: Datum,
    pub v: Vec<i64>,
    pub w: Vec<i64>,
    pub subalg: SubalgebraPresentation,
    /// `w` read on the generators of the presentation.
    pub w_v: Vec<i64>,
    kernels: Mutex<HashMap<(i64, usize), Vec<Poly>>>,
}

/// A level `d` of `F^v` with its monomial generators and their `w`-degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub d: i64,
    pub gens: Vec<Vec<u32>>,
    pub t: Vec<i64>,
}

/// Elements of `F_d^v A^E` lifted to `F_0^v A^{P_d x E}`. Coordinate
/// `(p, e)` is the component `p * ncomp + e`.
#[derive(Clone, Debug)]
pub struct Lifted {
    pub level: Level,
    pub ncomp: usize,
    pub elems: Vec<Poly>,
    /// Generators of the kernel of `omega`.
    pub kernel: Vec<Poly>,
}

impl Lifted {
    pub fn width(&self) -> usize {
        self.level.gens.len() * self.ncomp
    }

    /// `t_{p,e} = s_e + t_p`.
    pub fn shift(&self, s: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.width());
        for tp in &self.level.t {
            for se in s {
                out.push(se + tp);
            }
        }
        out
    }

    /// Generators of the preimage of the submodule generated by `elems`.
    pub fn preimage(&self) -> Vec<Poly> {
        self.elems.iter().chain(&self.kernel).filter(|p| !p.is_zero()).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// For each tested element, coefficients in `F_0^v A` over the generators.
    pub coefficients: Option<Vec<Vec<Poly>>>,
}

fn max_degree(u: &[i64], elems: &[Poly]) -> Option<i64> {
    elems.iter().filter_map(|p| p.weighted_degree(u, &[])).max()
}

/// Right multiplication of each component by `x^p`.
fn mul_right_mono(d: &Datum, q: &Poly, p: &[u32]) -> Poly {
    let right = Poly::monomial(p.to_vec(), 0);
    let mut out = Poly::zero();
    for e in q.components() {
        let prod = d.mul(&q.component(e).with_comp(0), &right).with_comp(e);
        out.add_scaled(&prod, &Coeff::one());
    }
    out
}

impl BifiltContext {
    pub fn new(datum: Datum, v: &[i64], w: &[i64]) -> Result<BifiltContext> {
        let subalg = subalgebra_presentation(&datum, v)?;
        BifiltContext::with_presentation(datum, v, w, subalg)
    }

    /// Uses a supplied presentation of `F_0^v A`.
    pub fn with_presentation(datum: Datum, v: &[i64], w: &[i64], subalg: SubalgebraPresentation) -> Result<BifiltContext> {
        let n = datum.n;
        if v.len() != n || w.len() != n {
            return Err(Error::Dimension(format!("weight vectors must have {n} entries")));
        }
        if let Some(h) = hilbert_basis_leq(w).into_iter().find(|h| dot(v, h) > 0) {
            return Err(Error::Invalid(format!(
                "v is not a w-weight: exponent {h:?} has w-degree <= 0 but v-degree {}",
                dot(v, &h)
            )));
        }
        for (a, img) in subalg.images.iter().enumerate() {
            if dot(v, img) > 0 {
                return Err(Error::Invalid(format!("presentation generator {a} is not in F_0^v")));
            }
        }
        let w_v = subalg.induced_weight(w);
        Ok(BifiltContext { datum, v: v.to_vec(), w: w.to_vec(), subalg, w_v, kernels: Mutex::new(HashMap::new()) })
    }

    /// Context on the same algebra with `w` replaced by `v`, used for
    /// intersections of two `F_0^v A`-modules.
    pub fn diagonal(&self) -> BifiltContext {
        let w_v = self.subalg.induced_weight(&self.v);
        BifiltContext {
            datum: self.datum.clone(),
            v: self.v.clone(),
            w: self.v.clone(),
            subalg: self.subalg.clone(),
            w_v,
            kernels: Mutex::new(HashMap::new()),
        }
    }

    pub fn trusted(&self) -> bool {
        self.subalg.trusted
    }

    pub fn sub_datum(&self) -> &Datum {
        &self.subalg.datum
    }

    pub fn level(&self, d: i64) -> Level {
        let gens = level_gens(&self.v, d);
        let t = gens.iter().map(|p| dot(&self.w, p)).collect();
        Level { d, gens, t }
    }

    pub fn v_degree(&self, elems: &[Poly]) -> Option<i64> {
        max_degree(&self.v, elems)
    }

    fn lift_one(&self, level: &Level, ncomp: usize, m: &Poly) -> Result<Poly> {
        let q = express_in_level(&self.datum, &self.v, &level.gens, m)?;
        let mut out = Poly::zero();
        for (k, qk) in q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            let y = self.subalg.pull(&self.datum, &self.v, qk)?;
            out.add_scaled(&y.map_comp(|e| k * ncomp + e), &Coeff::one());
        }
        Ok(out)
    }

    /// Lifts `m` to level `max(deg_v(m), at_least)`.
    pub fn upsilon(&self, ncomp: usize, m: &[Poly], at_least: Option<i64>) -> Result<Lifted> {
        let d = match (self.v_degree(m), at_least) {
            (Some(a), Some(b)) => a.max(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0,
        };
        let level = self.level(d);
        let elems = m.iter().map(|p| self.lift_one(&level, ncomp, p)).collect::<Result<Vec<_>>>()?;
        let kernel = self.omega_kernel(&level, ncomp)?;
        Ok(Lifted { level, ncomp, elems, kernel })
    }

    /// `F_0^v A`-generators of the kernel of `omega` on `F_0^v A^{P_d x E}`.
    fn omega_kernel(&self, level: &Level, ncomp: usize) -> Result<Vec<Poly>> {
        let key = (level.d, ncomp);
        if let Some(k) = self.kernels.lock().unwrap().get(&key) {
            return Ok(k.clone());
        }
        let width = level.gens.len() * ncomp;
        let mut images = Vec::with_capacity(width);
        for p in &level.gens {
            for e in 0..ncomp {
                images.push(Poly::monomial(p.clone(), e));
            }
        }
        let syz = syzygies(&self.datum, &images, ncomp)?;
        let kernel = if syz.is_empty() {
            Vec::new()
        } else {
            let fg = filtration_gens(&self.datum, width, &syz, &self.v, &vec![0; width])?;
            filtration_piece(&self.datum, &fg, &self.v, 0)
                .iter()
                .map(|g| self.subalg.pull(&self.datum, &self.v, g))
                .collect::<Result<Vec<_>>>()?
        };
        self.kernels.lock().unwrap().insert(key, kernel.clone());
        Ok(kernel)
    }

    /// `sum q_p x^p` on every coordinate.
    pub fn omega(&self, level: &Level, ncomp: usize, elems: &[Poly]) -> Vec<Poly> {
        elems.iter().map(|q| self.omega_one(level, ncomp, q)).collect()
    }

    fn omega_one(&self, level: &Level, ncomp: usize, q: &Poly) -> Poly {
        let mut out = Poly::zero();
        for c in q.components() {
            let (k, e) = (c / ncomp, c % ncomp);
            let a = self.subalg.evaluate(&self.datum, &q.component(c).with_comp(0));
            out.add_scaled(&mul_right_mono(&self.datum, &a, &level.gens[k]).with_comp(e), &Coeff::one());
        }
        out
    }

    fn sub_ring(&self, ncomp: usize) -> Result<ModRing> {
        ModRing::top(self.subalg.datum.clone(), ncomp)
    }

    /// Whether the `F_0^v A`-module generated by `p` lies in the one
    /// generated by `gens`, with coefficients when it does.
    pub fn v0_member(&self, ncomp: usize, p: &[Poly], gens: &[Poly]) -> Result<Membership> {
        let all: Vec<Poly> = p.iter().chain(gens).cloned().collect();
        let lifted = self.upsilon(ncomp, &all, None)?;
        let (lp, lg) = lifted.elems.split_at(p.len());
        let mut basis: Vec<Poly> = lg.to_vec();
        basis.extend(lifted.kernel.iter().cloned());
        let ring = self.sub_ring(lifted.width())?;
        let mut coefficients = Vec::with_capacity(p.len());
        for x in lp {
            match member(&ring, x, &basis)? {
                None => return Ok(Membership { member: false, coefficients: None }),
                Some(c) => coefficients.push(
                    c[..gens.len()].iter().map(|b| self.subalg.evaluate(&self.datum, b)).collect(),
                ),
            }
        }
        Ok(Membership { member: true, coefficients: Some(coefficients) })
    }

    /// `F_0^w A`-generators of `V cap W` for an `F_0^v A`-module `V` (all of
    /// `A^E` when `None`) and an `F_0^w A`-module `W`.
    pub fn intersect_v0_w0(&self, ncomp: usize, v_gens: Option<&[Poly]>, w_gens: &[Poly]) -> Result<Vec<Poly>> {
        let w_gens: Vec<Poly> = w_gens.iter().map(|p| self.datum.reduce_ideal(p.clone())).filter(|p| !p.is_zero()).collect();
        let Some(v_gens) = v_gens else { return Ok(w_gens) };
        if w_gens.is_empty() {
            return Ok(Vec::new());
        }
        let all: Vec<Poly> = w_gens.iter().chain(v_gens).cloned().collect();
        let lifted = self.upsilon(ncomp, &all, None)?;
        let nw = w_gens.len();
        let mut h: Vec<Poly> = lifted.elems[..nw].to_vec();
        h.extend(lifted.elems[nw..].iter().map(|p| p.neg()));
        h.extend(lifted.kernel.iter().map(|p| p.neg()));
        let b = &self.subalg.datum;
        let syz = syzygies(b, &h, lifted.width())?;
        let rel: Vec<Poly> = syz
            .iter()
            .map(|a| Poly::from_terms(a.terms.iter().filter(|(m, _)| m.comp < nw).map(|(m, c)| (m.clone(), c.clone()))))
            .filter(|p| !p.is_zero())
            .collect();
        let rel = if self.w_v.iter().all(|&x| x <= 0) || rel.is_empty() {
            rel
        } else {
            let fg = filtration_gens(b, nw, &rel, &self.w_v, &vec![0; nw])?;
            filtration_piece(b, &fg, &self.w_v, 0)
        };
        let mut out: Vec<Poly> = Vec::new();
        for r in rel {
            let mut g = Poly::zero();
            for j in r.components() {
                let a = self.subalg.evaluate(&self.datum, &r.component(j).with_comp(0));
                g.add_scaled(&self.datum.mul(&a, &w_gens[j]), &Coeff::one());
            }
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Generators `g` and degrees with
    /// `F^{w[s]}_k V = sum_g F^w_{k - t_g} F_0^v A g`.
    pub fn induced_w_filtration(&self, ncomp: usize, v_gens: &[Poly], s: &[i64]) -> Result<FiltGens> {
        if s.len() != ncomp {
            return Err(Error::Dimension(format!("shift vector has {} entries for {ncomp} components", s.len())));
        }
        let v_gens: Vec<Poly> = v_gens.iter().map(|p| self.datum.reduce_ideal(p.clone())).filter(|p| !p.is_zero()).collect();
        if v_gens.is_empty() {
            return Ok(FiltGens::empty());
        }
        let lifted = self.upsilon(ncomp, &v_gens, None)?;
        let shift = lifted.shift(s);
        let b = &self.subalg.datum;
        let fg = filtration_gens(b, lifted.width(), &lifted.preimage(), &self.w_v, &shift)?;
        let mut out = FiltGens::empty();
        for g in &fg.gens {
            let a = self.omega_one(&lifted.level, ncomp, g);
            if a.is_zero() || out.gens.contains(&a) {
                continue;
            }
            let t = a.weighted_degree(&self.w, s).expect("nonzero");
            out.gens.push(a);
            out.degrees.push(t);
        }
        Ok(out)
    }

    /// `w[s]`-homogeneous `F_0^v gr^w A`-generators of `gr^{w[s]} V`.
    pub fn gr_w_of_v(&self, ncomp: usize, v_gens: &[Poly], s: &[i64]) -> Result<(GradedDatum, Vec<Poly>)> {
        let gr = gr_algebra(&self.datum, &self.w)?;
        let fg = self.induced_w_filtration(ncomp, v_gens, s)?;
        let gens = leading_parts(&gr, &fg, s);
        Ok((gr, gens))
    }

    /// `F_0^v A`-generators of `F^{w[s]}_k` of the filtration given by `fg`.
    pub fn generated_piece(&self, fg: &FiltGens, k: i64) -> Vec<Poly> {
        let mut out = Vec::new();
        for (g, t) in fg.gens.iter().zip(&fg.degrees) {
            for l in level_gens(&self.w_v, k - t) {
                let a = self.subalg.evaluate(&self.datum, &Poly::term(Mon::new(l, 0), Coeff::one()));
                let p = self.datum.mul(&a, g);
                if !p.is_zero() && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// `lt_{w[s]}` of filtration generators, in the graded algebra.
pub fn leading_parts(gr: &GradedDatum, fg: &FiltGens, s: &[i64]) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, t) in fg.gens.iter().zip(&fg.degrees) {
        if g.weighted_degree(&gr.u, s) != Some(*t) {
            continue;
        }
        let lt = gr.datum.reduce_ideal(g.weighted_leading_part(&gr.u, s));
        if !lt.is_zero() && !out.contains(&lt) {
            out.push(lt);
        }
    }
    out
}

/// Context for `F_0^v` over the associated graded algebra of `w`.
pub fn graded_context(ctx: &BifiltContext) -> Result<(GradedDatum, BifiltContext)> {
    let gr = gr_algebra(&ctx.datum, &ctx.w)?;
    let inner = BifiltContext::new(gr.datum.clone(), &ctx.v, &ctx.v)?;
    Ok((gr, inner))
}
