//! Task dispatch and the result document.

use std::thread;

use pbw_core::groebner::{buchberger, intersect_left, member, normal_form, pair_with, syzygies, ModRing};
use pbw_core::homog::gb_any_ordering;
use pbw_core::modfilt::{induced_filtration, PresentedModule, DEFAULT_MAX_STEPS};
use pbw_core::oracle::{Oracle, Span};
use pbw_core::weights::{filtration_gens, filtration_order, filtration_piece, gr_module, FiltGens};
use pbw_core::{Error, PbwDatum, Poly};
use serde::Serialize;

use crate::problem::{render_element, Problem, Task};

#[derive(Clone, Debug)]
pub struct Flags {
    /// Word length for the consistency falsifiers run on the input algebra.
    pub degree_bound: Option<usize>,
    /// Number of filtration indices tried before giving up.
    pub max_k: usize,
    /// Truncation degree of the linear-algebra cross-check.
    pub oracle_check: Option<u32>,
    pub reduced: bool,
}

impl Default for Flags {
    fn default() -> Flags {
        Flags { degree_bound: None, max_k: DEFAULT_MAX_STEPS, oracle_check: None, reduced: false }
    }
}

#[derive(Debug)]
pub enum CliError {
    Engine(Error),
    Syntax(String),
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax(_) => 2,
            CliError::Engine(Error::Unsupported(_)) => 3,
            CliError::Engine(Error::Budget(_)) => 4,
            CliError::Engine(_) => 2,
            CliError::Mismatch(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Syntax(m) => write!(f, "{m}"),
            CliError::Mismatch(m) => write!(f, "oracle mismatch: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Engine(e)
    }
}

#[derive(Debug, Serialize)]
pub struct Document {
    pub task: &'static str,
    pub algebra: AlgebraSummary,
    pub module: ModuleSummary,
    pub result: TaskResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency: Option<Consistency>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Serialize)]
pub struct AlgebraSummary {
    pub vars: Vec<String>,
    pub order: String,
    pub relations: Vec<String>,
    pub ideal: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ModuleSummary {
    pub components: usize,
    pub labels: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Consistency {
    pub degree_bound: usize,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub degree: u32,
    pub checked: bool,
    pub vectors: usize,
}

#[derive(Debug, Serialize)]
pub struct Graded {
    pub element: String,
    pub degree: i64,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum TaskResult {
    Basis {
        basis: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        homogenizing_weight: Option<Vec<i64>>,
    },
    NormalForm {
        normal_form: String,
    },
    Member {
        member: bool,
        coefficients: Option<Vec<String>>,
        normal_form: String,
    },
    Syzygies {
        labels: Vec<String>,
        syzygies: Vec<String>,
    },
    Filtration {
        u: Vec<i64>,
        shift: Vec<i64>,
        generators: Vec<Graded>,
    },
    Piece {
        u: Vec<i64>,
        k: i64,
        generators: Vec<String>,
    },
    Graded {
        u: Vec<i64>,
        relations: Vec<String>,
        ideal: Vec<String>,
        generators: Vec<String>,
    },
    VFiltration {
        v: Vec<i64>,
        w: Vec<i64>,
        shift: Vec<i64>,
        generators: Vec<Graded>,
        first_k: i64,
        converged_at_k: i64,
        equal: bool,
        graded_intersection: Vec<String>,
        graded_of_intersection: Vec<String>,
        trusted_presentation: bool,
    },
}

/// Engine output kept for the cross-check.
enum Output {
    Basis(Vec<Poly>),
    Member(Option<Vec<Poly>>),
    Syzygies(Vec<Poly>),
    Intersection(Vec<Poly>),
    Unchecked,
}

/// `hi*lo = c*lo*hi + d` for every nontrivial relation.
pub fn relation_strings(d: &PbwDatum) -> Vec<String> {
    d.relations_list()
        .into_iter()
        .map(|(i, j, c, dd)| {
            let mut e = vec![0u32; d.n];
            e[i] += 1;
            e[j] += 1;
            let rhs = Poly::monomial(e, 0).scale(&c).add(&dd);
            format!("{}*{} = {}", d.names[j], d.names[i], d.render(&rhs))
        })
        .collect()
}

fn render_all(p: &Problem, elems: &[Poly]) -> Vec<String> {
    elems.iter().map(|g| p.render(g)).collect()
}

fn graded(p: &Problem, fg: &FiltGens) -> Vec<Graded> {
    fg.gens.iter().zip(&fg.degrees).map(|(g, t)| Graded { element: p.render(g), degree: *t }).collect()
}

fn compute(p: &Problem, flags: &Flags) -> Result<(TaskResult, Output), CliError> {
    let d = &p.datum;
    let ring = || ModRing::top(d.clone(), p.ncomp);
    Ok(match p.task {
        Task::Gb => match &p.u {
            Some(u) => {
                let order = filtration_order(d, u, &p.shift);
                let gb = gb_any_ordering(d, &order, p.ncomp, &p.generators, flags.reduced)?;
                let out = TaskResult::Basis { basis: render_all(p, &gb.gens), homogenizing_weight: gb.weight.clone() };
                (out, Output::Basis(gb.gens))
            }
            None => {
                let gb = buchberger(&ring()?, &p.generators, flags.reduced)?;
                (TaskResult::Basis { basis: render_all(p, &gb.gens), homogenizing_weight: None }, Output::Basis(gb.gens))
            }
        },
        Task::Nf => {
            let ctx = ring()?;
            let gb = buchberger(&ctx, &p.generators, true)?;
            let (r, _) = normal_form(&ctx, p.require_element()?, &gb.gens, true);
            (TaskResult::NormalForm { normal_form: p.render(&r) }, Output::Basis(gb.gens))
        }
        Task::Member => {
            let ctx = ring()?;
            let a = p.require_element()?;
            let coeffs = member(&ctx, a, &p.generators)?;
            let gb = buchberger(&ctx, &p.generators, true)?;
            let (r, _) = normal_form(&ctx, a, &gb.gens, true);
            let out = TaskResult::Member {
                member: coeffs.is_some(),
                coefficients: coeffs.as_ref().map(|c| c.iter().map(|q| d.render(q)).collect()),
                normal_form: p.render(&r),
            };
            (out, Output::Member(coeffs))
        }
        Task::Syz => {
            let syz = syzygies(d, &p.generators, p.ncomp)?;
            let labels: Vec<String> = (0..p.generators.len()).map(|i| format!("g{i}")).collect();
            let rendered = syz.iter().map(|a| render_element(d, a, &labels)).collect();
            (TaskResult::Syzygies { labels, syzygies: rendered }, Output::Syzygies(syz))
        }
        Task::Intersect => {
            let meet = intersect_left(&ring()?, &p.generators, &p.other)?;
            (TaskResult::Basis { basis: render_all(p, &meet), homogenizing_weight: None }, Output::Intersection(meet))
        }
        Task::Filtration => {
            let u = p.require_u()?;
            let fg = filtration_gens(d, p.ncomp, &p.generators, u, &p.shift)?;
            let out = TaskResult::Filtration { u: u.to_vec(), shift: p.shift.clone(), generators: graded(p, &fg) };
            (out, Output::Unchecked)
        }
        Task::FiltrationPiece => {
            let u = p.require_u()?;
            let k = p.require_k()?;
            let fg = filtration_gens(d, p.ncomp, &p.generators, u, &p.shift)?;
            let piece = filtration_piece(d, &fg, u, k);
            (TaskResult::Piece { u: u.to_vec(), k, generators: render_all(p, &piece) }, Output::Unchecked)
        }
        Task::Gr => {
            let u = p.require_u()?;
            let (gr, gens) = gr_module(d, p.ncomp, &p.generators, u, &p.shift)?;
            let out = TaskResult::Graded {
                u: u.to_vec(),
                relations: relation_strings(&gr.datum),
                ideal: gr.datum.ideal.iter().map(|g| gr.datum.render(g)).collect(),
                generators: gens.iter().map(|g| render_element(&gr.datum, g, &p.labels)).collect(),
            };
            (out, Output::Unchecked)
        }
        Task::Vfiltration => {
            let ctx = p.bifilt_context()?;
            let m = PresentedModule::new(d.clone(), p.ncomp, p.relations.clone())?;
            let v_gens = if p.generators.is_empty() {
                (0..p.ncomp).map(|e| Poly::basis(d.n, e)).collect()
            } else {
                p.generators.clone()
            };
            let report = induced_filtration(&m, &ctx, &v_gens, &p.shift, flags.max_k)?;
            let out = TaskResult::VFiltration {
                v: ctx.v.clone(),
                w: ctx.w.clone(),
                shift: p.shift.clone(),
                generators: graded(p, &report.gens),
                first_k: report.first_k,
                converged_at_k: report.converged_at_k,
                equal: report.check.equal,
                graded_intersection: render_all(p, &report.check.graded_intersection),
                graded_of_intersection: render_all(p, &report.check.graded_of_intersection),
                trusted_presentation: ctx.trusted(),
            };
            (out, Output::Unchecked)
        }
    })
}

/// Truncated spans of the input modules, built alongside the engine run.
struct Prepared {
    oracle: Oracle,
    input: Span,
    other: Option<Span>,
}

fn prepare(p: &Problem, degree: u32) -> Option<Prepared> {
    let oracle = Oracle::new(p.datum.clone(), p.ncomp, degree, degree);
    let all = |_: &[u32]| true;
    match p.task {
        Task::Gb | Task::Nf | Task::Member => {
            let input = oracle.span_of(&p.generators, &all);
            Some(Prepared { oracle, input, other: None })
        }
        Task::Intersect => {
            let input = oracle.span_of(&p.generators, &all);
            let other = Some(oracle.span_of(&p.other, &all));
            Some(Prepared { oracle, input, other })
        }
        _ => None,
    }
}

fn in_module(ctx: &ModRing, b: &Poly, basis: &[Poly]) -> Result<bool, CliError> {
    Ok(member(ctx, b, basis)?.is_some())
}

/// Every oracle-visible element must lie in what the engine computed, and
/// every engine certificate must evaluate exactly.
fn verify(p: &Problem, degree: u32, prep: Option<Prepared>, out: &Output) -> Result<OracleReport, CliError> {
    let d = &p.datum;
    let ctx = ModRing::top(d.clone(), p.ncomp)?;
    let unchecked = OracleReport { degree, checked: false, vectors: 0 };
    let mut vectors = 0;
    match (out, prep) {
        (Output::Syzygies(syz), _) => {
            for a in syz {
                if !pair_with(d, a, &p.generators).is_zero() {
                    return Err(CliError::Mismatch(format!("syzygy {} does not vanish", d.render(a))));
                }
            }
            vectors = syz.len();
        }
        (Output::Basis(basis), Some(prep)) => {
            for b in prep.oracle.basis(&prep.input) {
                if !in_module(&ctx, &b, basis)? {
                    return Err(CliError::Mismatch(format!("{} is in the module but not generated by the basis", p.render(&b))));
                }
                vectors += 1;
            }
        }
        (Output::Member(Some(coeffs)), _) => {
            let a = p.require_element()?;
            let back = coeffs.iter().zip(&p.generators).fold(Poly::zero(), |acc, (c, g)| acc.add(&d.mul(c, g)));
            if back != *a {
                return Err(CliError::Mismatch("membership coefficients do not reconstruct the element".into()));
            }
            vectors = 1;
        }
        (Output::Member(None), Some(prep)) => {
            let a = p.require_element()?;
            if prep.oracle.contains(&prep.input, a) {
                return Err(CliError::Mismatch(format!("{} lies in a truncated span of the generators", p.render(a))));
            }
            vectors = 1;
        }
        (Output::Intersection(meet), Some(Prepared { oracle, input, other: Some(other) })) => {
            for b in oracle.basis(&oracle.intersect(&input, &other)) {
                if !in_module(&ctx, &b, meet)? {
                    return Err(CliError::Mismatch(format!("{} is in both modules but not in the intersection", p.render(&b))));
                }
                vectors += 1;
            }
        }
        _ => return Ok(unchecked),
    }
    Ok(OracleReport { degree, checked: true, vectors })
}

fn consistency(p: &Problem, bound: usize) -> Result<Consistency, CliError> {
    let mut bad = p.datum.verify_bounded(bound).map(|q| p.datum.render(&q));
    if bad.is_none() {
        if let Some(pres) = &p.presentation {
            bad = pbw_core::dmod::injectivity_counterexample(pres, &p.datum, bound as u32).map(|q| pres.datum.render(&q));
        }
    }
    match bad {
        Some(q) => Err(CliError::Engine(Error::Invalid(format!("consistency check failed up to degree {bound}: {q}")))),
        None => Ok(Consistency { degree_bound: bound }),
    }
}

pub fn run(p: &Problem, flags: &Flags) -> Result<Document, CliError> {
    let consistency = flags.degree_bound.map(|b| consistency(p, b)).transpose()?;
    let (result, oracle) = thread::scope(|s| -> Result<_, CliError> {
        let prepared = flags.oracle_check.map(|deg| s.spawn(move || prepare(p, deg)));
        let (result, out) = compute(p, flags)?;
        let oracle = match (flags.oracle_check, prepared) {
            (Some(deg), Some(h)) => {
                let prep = h.join().map_err(|_| CliError::Mismatch("oracle thread panicked".into()))?;
                Some(verify(p, deg, prep, &out)?)
            }
            _ => None,
        };
        Ok((result, oracle))
    })?;
    Ok(Document {
        task: p.task.name(),
        algebra: AlgebraSummary {
            vars: p.datum.names.clone(),
            order: p.order_name.clone(),
            relations: relation_strings(&p.datum),
            ideal: p.datum.ideal.iter().map(|g| p.datum.render(g)).collect(),
        },
        module: ModuleSummary { components: p.ncomp, labels: p.labels.clone() },
        result,
        consistency,
        oracle,
    })
}
