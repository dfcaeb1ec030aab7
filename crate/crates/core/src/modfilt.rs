//! Filtrations on `F_0^v A`-submodules of finitely presented modules
//! `M = A^E / L`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::Datum;
use crate::bifilt::{leading_parts, BifiltContext, Membership};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, syzygies, ModRing};
use crate::order::dot;
use crate::poly::Poly;
use crate::weights::{filtration_gens, filtration_piece, gr_algebra, gr_module, level_gens, FiltGens};

/// Default number of indices tried by [`induced_filtration`].
pub const DEFAULT_MAX_STEPS: usize = 32;

/// `A^E / L` with `L` generated by `relations`.
#[derive(Debug)]
pub struct PresentedModule {
    pub datum: Datum,
    pub ncomp: usize,
    pub relations: Vec<Poly>,
    gb: Vec<Poly>,
    ring: ModRing,
    by_weight: Mutex<HashMap<Vec<i64>, FiltGens>>,
}

impl PresentedModule {
    pub fn new(datum: Datum, ncomp: usize, relations: Vec<Poly>) -> Result<PresentedModule> {
        let ring = ModRing::top(datum.clone(), ncomp)?;
        let gb = buchberger(&ring, &relations, true)?.gens;
        Ok(PresentedModule { datum, ncomp, relations, gb, ring, by_weight: Mutex::new(HashMap::new()) })
    }

    pub fn free(datum: Datum, ncomp: usize) -> Result<PresentedModule> {
        PresentedModule::new(datum, ncomp, Vec::new())
    }

    /// Normal form modulo `L`.
    pub fn reduce(&self, p: &Poly) -> Poly {
        normal_form(&self.ring, p, &self.gb, true).0
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// `F_0^v A`-generators of `L cap F_d^v A^E`.
    pub fn relations_in_level(&self, v: &[i64], d: i64) -> Result<Vec<Poly>> {
        if self.relations.is_empty() {
            return Ok(Vec::new());
        }
        let cached = self.by_weight.lock().unwrap().get(v).cloned();
        let fg = match cached {
            Some(fg) => fg,
            None => {
                let fg = filtration_gens(&self.datum, self.ncomp, &self.relations, v, &vec![0; self.ncomp])?;
                self.by_weight.lock().unwrap().insert(v.to_vec(), fg.clone());
                fg
            }
        };
        Ok(filtration_piece(&self.datum, &fg, v, d))
    }
}

fn with_extra(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().chain(b).cloned().collect()
}

/// Relations `Q` with `F_0^v A^{V'} / <Q>` isomorphic to the `F_0^v A`-module
/// generated by the classes of `v_gens`.
pub fn present_v0(m: &PresentedModule, v: &[i64], v_gens: &[Poly]) -> Result<Vec<Poly>> {
    let nv = v_gens.len();
    if nv == 0 {
        return Ok(Vec::new());
    }
    let syz = syzygies(&m.datum, &with_extra(v_gens, &m.relations), m.ncomp)?;
    let rel: Vec<Poly> = syz
        .iter()
        .map(|a| Poly::from_terms(a.terms.iter().filter(|(mon, _)| mon.comp < nv).map(|(mon, c)| (mon.clone(), c.clone()))))
        .filter(|p| !p.is_zero())
        .collect();
    if rel.is_empty() {
        return Ok(Vec::new());
    }
    let fg = filtration_gens(&m.datum, nv, &rel, v, &vec![0; nv])?;
    Ok(filtration_piece(&m.datum, &fg, v, 0))
}

fn level_bound(ctx: &BifiltContext, elems: &[Poly]) -> i64 {
    ctx.v_degree(elems).unwrap_or(0)
}

/// Whether the classes of `p` lie in the `F_0^v A`-module generated by the
/// classes of `v_gens`.
pub fn quotient_member(m: &PresentedModule, ctx: &BifiltContext, p: &[Poly], v_gens: &[Poly]) -> Result<Membership> {
    let d = level_bound(ctx, &with_extra(p, v_gens));
    let extra = m.relations_in_level(&ctx.v, d)?;
    let mut res = ctx.v0_member(m.ncomp, p, &with_extra(v_gens, &extra))?;
    if let Some(c) = res.coefficients.as_mut() {
        for row in c.iter_mut() {
            row.truncate(v_gens.len());
        }
    }
    Ok(res)
}

/// `F_0^w A`-generators of `V cap W` for `V` generated over `F_0^v A`
/// (all of `M` when `None`) and `W` over `F_0^w A`.
pub fn quotient_intersect(m: &PresentedModule, ctx: &BifiltContext, v_gens: Option<&[Poly]>, w_gens: &[Poly]) -> Result<Vec<Poly>> {
    let Some(v_gens) = v_gens else {
        return Ok(w_gens.iter().filter(|p| !m.is_zero(p)).cloned().collect());
    };
    let d = level_bound(ctx, &with_extra(v_gens, w_gens));
    let extra = m.relations_in_level(&ctx.v, d)?;
    let g = ctx.intersect_v0_w0(m.ncomp, Some(&with_extra(v_gens, &extra)), w_gens)?;
    let mut out: Vec<Poly> = Vec::new();
    for p in g {
        let r = m.reduce(&p);
        if !r.is_zero() && !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Largest `v`-degree of `F^{w[s]}_k A^E`, if that piece is nonzero.
fn v_bound_of_w_piece(ctx: &BifiltContext, s: &[i64], k: i64) -> Option<i64> {
    s.iter()
        .flat_map(|se| level_gens(&ctx.w, k - se))
        .map(|p| dot(&ctx.v, &p))
        .max()
}

/// Generators of an `F_0^v A`-module `V_k` inside `V' + L` whose filtration
/// agrees with `F^{w[s]}_{k'} M cap V` for `k' <= k`.
pub fn filtration_up_to_k(m: &PresentedModule, ctx: &BifiltContext, v_gens: &[Poly], s: &[i64], k: i64) -> Result<FiltGens> {
    let v_gens: Vec<Poly> = v_gens.iter().filter(|p| !m.is_zero(p)).cloned().collect();
    if v_gens.is_empty() {
        return Ok(FiltGens::empty());
    }
    let own = ctx.v_degree(&v_gens).unwrap_or(0);
    let d = v_bound_of_w_piece(ctx, s, k).map_or(own, |b| b.max(own));
    let extra = m.relations_in_level(&ctx.v, d)?;
    ctx.induced_w_filtration(m.ncomp, &with_extra(&v_gens, &extra), s)
}

/// Outcome of the graded equality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityCheck {
    pub equal: bool,
    /// Generators of `gr(V) cap gr(L)`.
    pub graded_intersection: Vec<Poly>,
    /// Generators of `gr(V cap L)`.
    pub graded_of_intersection: Vec<Poly>,
}

/// Whether the quotient filtration of `V` (given with its filtration
/// generators) and the submodule filtration on `(V + L) / L` agree.
pub fn filtration_equal_with(ctx: &BifiltContext, ncomp: usize, l_gens: &[Poly], v_filt: &FiltGens, s: &[i64]) -> Result<EqualityCheck> {
    let gr = gr_algebra(&ctx.datum, &ctx.w)?;
    let v_gr = leading_parts(&gr, v_filt, s);
    let l_nonzero: Vec<Poly> = l_gens.iter().filter(|p| !ctx.datum.reduce_ideal((*p).clone()).is_zero()).cloned().collect();
    if v_gr.is_empty() || l_nonzero.is_empty() {
        return Ok(EqualityCheck { equal: true, graded_intersection: Vec::new(), graded_of_intersection: Vec::new() });
    }
    let grctx = BifiltContext::new(gr.datum.clone(), &ctx.v, &ctx.v)?;
    let (_, l_gr) = gr_module(&ctx.datum, ncomp, &l_nonzero, &ctx.w, s)?;
    let dv = grctx.v_degree(&v_gr).unwrap_or(0);
    let l_gr_fg = filtration_gens(&gr.datum, ncomp, &l_gr, &ctx.v, &vec![0; ncomp])?;
    let l_gr_piece = filtration_piece(&gr.datum, &l_gr_fg, &ctx.v, dv);
    let j = grctx.intersect_v0_w0(ncomp, Some(&v_gr), &l_gr_piece)?;

    let d = ctx.v_degree(&v_filt.gens).unwrap_or(0);
    let l_fg = filtration_gens(&ctx.datum, ncomp, &l_nonzero, &ctx.v, &vec![0; ncomp])?;
    let l_piece = filtration_piece(&ctx.datum, &l_fg, &ctx.v, d);
    let k = ctx.diagonal().intersect_v0_w0(ncomp, Some(&v_filt.gens), &l_piece)?;
    let k_filt = ctx.induced_w_filtration(ncomp, &k, s)?;
    let k_gr = leading_parts(&gr, &k_filt, s);

    let equal = if j.is_empty() {
        true
    } else if k_gr.is_empty() {
        false
    } else {
        grctx.v0_member(ncomp, &j, &k_gr)?.member
    };
    Ok(EqualityCheck { equal, graded_intersection: j, graded_of_intersection: k_gr })
}

/// [`filtration_equal_with`] for the induced filtration of `V = <v_gens>`.
pub fn filtration_equal(ctx: &BifiltContext, ncomp: usize, l_gens: &[Poly], v_gens: &[Poly], s: &[i64]) -> Result<bool> {
    let fg = ctx.induced_w_filtration(ncomp, v_gens, s)?;
    Ok(filtration_equal_with(ctx, ncomp, l_gens, &fg, s)?.equal)
}

/// Result of [`induced_filtration`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    /// Generators with nonzero class and their degrees.
    pub gens: FiltGens,
    pub first_k: i64,
    pub converged_at_k: i64,
    pub check: EqualityCheck,
}

/// Filtration generators of `F^{w[s]} V` for `V` generated over `F_0^v A` by
/// the classes of `v_gens`, when that filtration is good. Gives up after
/// `max_steps` indices.
pub fn induced_filtration(m: &PresentedModule, ctx: &BifiltContext, v_gens: &[Poly], s: &[i64], max_steps: usize) -> Result<FiltrationReport> {
    if s.len() != m.ncomp {
        return Err(Error::Dimension(format!("shift vector has {} entries for {} components", s.len(), m.ncomp)));
    }
    let reps: Vec<Poly> = v_gens.iter().map(|p| m.datum.reduce_ideal(p.clone())).filter(|p| !m.is_zero(p)).collect();
    let Some(first_k) = reps.iter().filter_map(|p| p.weighted_degree(&ctx.w, s)).max() else {
        let check = EqualityCheck { equal: true, graded_intersection: Vec::new(), graded_of_intersection: Vec::new() };
        return Ok(FiltrationReport { gens: FiltGens::empty(), first_k: 0, converged_at_k: 0, check });
    };
    for step in 0..max_steps {
        let k = first_k + step as i64;
        let fg = filtration_up_to_k(m, ctx, &reps, s, k)?;
        let check = filtration_equal_with(ctx, m.ncomp, &m.relations, &fg, s)?;
        if check.equal {
            let mut gens = FiltGens::empty();
            for (g, t) in fg.gens.iter().zip(&fg.degrees) {
                if !m.is_zero(g) {
                    gens.gens.push(g.clone());
                    gens.degrees.push(*t);
                }
            }
            return Ok(FiltrationReport { gens, first_k, converged_at_k: k, check });
        }
    }
    Err(Error::Budget(first_k + max_steps as i64 - 1))
}
