//! Problem files: a TOML document naming a task, an algebra (or a chart) and
//! the module data it acts on.

use std::sync::Arc;

use pbw_core::algebra::{commutative_gb, Provenance};
use pbw_core::bifilt::BifiltContext;
use pbw_core::dmod::{build_tx, build_txv, hodge_weights, AffineChart};
use pbw_core::poly::Word;
use pbw_core::text::parse_free;
use pbw_core::weights::SubalgebraPresentation;
use pbw_core::{coeff, Datum, Error, FreeElement, Order, PbwDatum, Poly, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Gb,
    Nf,
    Member,
    Syz,
    Intersect,
    Filtration,
    FiltrationPiece,
    Gr,
    Vfiltration,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Gb => "gb",
            Task::Nf => "nf",
            Task::Member => "member",
            Task::Syz => "syz",
            Task::Intersect => "intersect",
            Task::Filtration => "filtration",
            Task::FiltrationPiece => "filtration-piece",
            Task::Gr => "gr",
            Task::Vfiltration => "vfiltration",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub task: Task,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartSection>,
    #[serde(default)]
    pub module: ModuleSection,
    #[serde(default, skip_serializing_if = "WeightsSection::is_empty")]
    pub weights: WeightsSection,
    #[serde(default, skip_serializing_if = "Params::is_empty")]
    pub params: Params,
}

/// Either `weyl = n` or explicit variables with commutation relations
/// `[lo, hi, c, d]` meaning `hi*lo = c*lo*hi + d`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vars: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<[String; 4]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideal: Vec<String>,
}

fn default_order() -> String {
    "deglex".to_string()
}

/// Affine chart; `theta[k][i]` is the value of the `k`-th derivation on `x[i]`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartSection {
    pub x: Vec<String>,
    pub y: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideal: Vec<String>,
    pub theta: Vec<Vec<String>>,
    pub f: Vec<String>,
    /// Adds a coordinate with this name equal to the last `f`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reembed: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub other: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<i64>>,
    /// Use the V-filtration along the last coordinate and the order filtration.
    #[serde(default, skip_serializing_if = "is_false")]
    pub hodge: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl WeightsSection {
    fn is_empty(&self) -> bool {
        *self == WeightsSection::default()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
}

impl Params {
    fn is_empty(&self) -> bool {
        *self == Params::default()
    }
}

impl ProblemFile {
    pub fn from_toml(src: &str) -> std::result::Result<ProblemFile, toml::de::Error> {
        toml::from_str(src)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("problem files serialize")
    }
}

/// A problem file with its algebra built and every element parsed.
#[derive(Clone, Debug)]
pub struct Problem {
    pub task: Task,
    pub datum: Datum,
    pub order_name: String,
    pub chart: Option<AffineChart>,
    pub presentation: Option<SubalgebraPresentation>,
    pub ncomp: usize,
    pub labels: Vec<String>,
    pub generators: Vec<Poly>,
    pub relations: Vec<Poly>,
    pub other: Vec<Poly>,
    pub shift: Vec<i64>,
    pub u: Option<Vec<i64>>,
    pub v: Option<Vec<i64>>,
    pub w: Option<Vec<i64>>,
    pub k: Option<i64>,
    pub element: Option<Poly>,
}

fn at<T>(field: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{field}: {m}")),
        Error::Dimension(m) => Error::Dimension(format!("{field}: {m}")),
        Error::Invalid(m) => Error::Invalid(format!("{field}: {m}")),
        other => other,
    })
}

fn parse_order(name: &str, weights: Option<&Vec<i64>>) -> Result<Order> {
    let base = match name {
        "lex" => Order::Lex,
        "deglex" => Order::DegLex,
        "degrevlex" => Order::DegRevLex,
        other => return Err(Error::Parse(format!("unknown ordering `{other}` (expected lex, deglex or degrevlex)"))),
    };
    Ok(match weights {
        Some(u) => Order::weighted(u.clone(), base),
        None => base,
    })
}

fn parse_commutative(names: &[String], field: &str, src: &[String]) -> Result<Vec<Poly>> {
    let ring = PbwDatum::polynomial_ring(names.to_vec(), Order::DegRevLex)?;
    src.iter().enumerate().map(|(i, s)| at(&format!("{field}[{i}]"), ring.parse(s))).collect()
}

fn build_algebra(a: &AlgebraSection) -> Result<PbwDatum> {
    let order = at("algebra.order", parse_order(&a.order, a.order_weights.as_ref()))?;
    if let Some(k) = a.weyl {
        if !a.vars.is_empty() || !a.relations.is_empty() || !a.ideal.is_empty() {
            return Err(Error::Invalid("algebra: `weyl` excludes vars, relations and ideal".into()));
        }
        return PbwDatum::weyl(k, order);
    }
    if a.vars.is_empty() {
        return Err(Error::Invalid("algebra: either `weyl` or `vars` is required".into()));
    }
    let names = a.vars.clone();
    let index = |field: &str, name: &str| {
        names.iter().position(|n| n == name).ok_or_else(|| Error::Parse(format!("{field}: unknown variable `{name}`")))
    };
    let mut rels = Vec::new();
    for (r, [lo, hi, c, d]) in a.relations.iter().enumerate() {
        let field = format!("algebra.relations[{r}]");
        let (i, j) = (index(&field, lo)?, index(&field, hi)?);
        let c = at(&field, coeff::parse(c))?;
        let d = parse_commutative(&names, &field, std::slice::from_ref(d))?.remove(0);
        rels.push((i, j, c, d));
    }
    let gens = parse_commutative(&names, "algebra.ideal", &a.ideal)?;
    if gens.is_empty() {
        return PbwDatum::pbw(names, rels, order);
    }
    let ideal = commutative_gb(&names, &gens, &order)?;
    PbwDatum::new(names, rels, ideal, order, Provenance::Elementary { gens })
}

fn build_chart(c: &ChartSection) -> Result<AffineChart> {
    let ideal = parse_commutative(&c.x, "chart.ideal", &c.ideal)?;
    let theta = c
        .theta
        .iter()
        .enumerate()
        .map(|(k, row)| parse_commutative(&c.x, &format!("chart.theta[{k}]"), row))
        .collect::<Result<Vec<_>>>()?;
    let f = parse_commutative(&c.x, "chart.f", &c.f)?;
    let chart = AffineChart { x_names: c.x.clone(), y_names: c.y.clone(), ideal, theta, f };
    at("chart", chart.validate())?;
    Ok(match &c.reembed {
        Some(t) => chart.reembed(t),
        None => chart,
    })
}

/// Parses `src` as an element of `A^labels.len()`; with several components
/// every term ends in exactly one label, as in `x*d*e1`.
pub fn parse_element(datum: &PbwDatum, labels: &[String], src: &str) -> Result<Poly> {
    if labels.len() <= 1 {
        return datum.parse(src);
    }
    let mut names = datum.names.clone();
    names.extend(labels.iter().cloned());
    let free = parse_free(src, &names)?;
    let n = datum.n;
    let mut out = FreeElement::zero();
    for ((word, _), c) in free.terms {
        let marks: Vec<usize> = word.0.iter().enumerate().filter(|(_, &l)| l >= n).map(|(p, _)| p).collect();
        match marks.as_slice() {
            [p] if *p == word.0.len() - 1 => {
                let comp = word.0[*p] - n;
                out.add_term((Word(word.0[..*p].to_vec()), comp), c);
            }
            _ => {
                return Err(Error::Parse(format!(
                    "every term of `{src}` must end in exactly one component label ({})",
                    labels.join(", ")
                )))
            }
        }
    }
    Ok(datum.tau(&out))
}

impl Problem {
    pub fn build(file: &ProblemFile) -> Result<Problem> {
        let (datum, order_name, chart, presentation) = match (&file.algebra, &file.chart) {
            (Some(_), Some(_)) => return Err(Error::Invalid("give either [algebra] or [chart], not both".into())),
            (None, None) => return Err(Error::Invalid("missing [algebra] or [chart] section".into())),
            (Some(a), None) => (build_algebra(a)?, a.order.clone(), None, None),
            (None, Some(c)) => {
                let chart = build_chart(c)?;
                let datum = at("chart", build_tx(&chart))?;
                let pres = if chart.is_normalized() { Some(at("chart", build_txv(&chart))?) } else { None };
                (datum, "elementary".to_string(), Some(chart), pres)
            }
        };
        let datum: Datum = Arc::new(datum);
        let m = &file.module;
        let ncomp = m.components.unwrap_or_else(|| m.labels.as_ref().map_or(1, |l| l.len()));
        if ncomp == 0 {
            return Err(Error::Dimension("module.components must be positive".into()));
        }
        let labels = match &m.labels {
            Some(l) if l.len() != ncomp => {
                return Err(Error::Dimension(format!("module.labels has {} entries for {ncomp} components", l.len())))
            }
            Some(l) => l.clone(),
            None if ncomp == 1 => Vec::new(),
            None => (0..ncomp).map(|e| format!("e{e}")).collect(),
        };
        if let Some(bad) = labels.iter().find(|l| datum.names.contains(l)) {
            return Err(Error::Invalid(format!("module.labels: `{bad}` is also a variable")));
        }
        let list = |field: &str, src: &[String]| -> Result<Vec<Poly>> {
            src.iter().enumerate().map(|(i, s)| at(&format!("module.{field}[{i}]"), parse_element(&datum, &labels, s))).collect()
        };
        let generators = list("generators", &m.generators)?;
        let relations = list("relations", &m.relations)?;
        let other = list("other", &m.other)?;
        let shift = m.shift.clone().unwrap_or_else(|| vec![0; ncomp]);
        if shift.len() != ncomp {
            return Err(Error::Dimension(format!("module.shift has {} entries for {ncomp} components", shift.len())));
        }
        let wt = &file.weights;
        let (mut v, mut w) = (wt.v.clone(), wt.w.clone());
        if wt.hodge {
            let (n, k) = match (&chart, file.algebra.as_ref().and_then(|a| a.weyl)) {
                (Some(c), _) => (c.n(), c.m()),
                (None, Some(k)) => (k, k),
                _ => return Err(Error::Invalid("weights.hodge needs a chart or a Weyl algebra".into())),
            };
            let h = hodge_weights(n, k);
            v.get_or_insert(h.v);
            w.get_or_insert(h.w);
        }
        for (name, vec) in [("u", &wt.u), ("v", &v), ("w", &w)] {
            if let Some(vec) = vec {
                if vec.len() != datum.n {
                    return Err(Error::Dimension(format!("weights.{name} has {} entries for {} variables", vec.len(), datum.n)));
                }
            }
        }
        let element = match &file.params.element {
            Some(s) => Some(at("params.element", parse_element(&datum, &labels, s))?),
            None => None,
        };
        Ok(Problem {
            task: file.task,
            datum,
            order_name,
            chart,
            presentation,
            ncomp,
            labels,
            generators,
            relations,
            other,
            shift,
            u: wt.u.clone(),
            v,
            w,
            k: file.params.k,
            element,
        })
    }

    pub fn bifilt_context(&self) -> Result<BifiltContext> {
        let v = self.v.as_ref().ok_or_else(|| Error::Invalid("weights.v is required".into()))?;
        let w = self.w.as_ref().ok_or_else(|| Error::Invalid("weights.w is required".into()))?;
        match &self.presentation {
            Some(p) if self.chart.as_ref().is_some_and(|c| *v == hodge_weights(c.n(), c.m()).v) => {
                BifiltContext::with_presentation(self.datum.clone(), v, w, p.clone())
            }
            _ => BifiltContext::new(self.datum.clone(), v, w),
        }
    }

    pub fn require_u(&self) -> Result<&[i64]> {
        self.u.as_deref().ok_or_else(|| Error::Invalid("weights.u is required".into()))
    }

    pub fn require_element(&self) -> Result<&Poly> {
        self.element.as_ref().ok_or_else(|| Error::Invalid("params.element is required".into()))
    }

    pub fn require_k(&self) -> Result<i64> {
        self.k.ok_or_else(|| Error::Invalid("params.k is required".into()))
    }

    /// Renders an element of `A^ncomp`, or of `A^labels.len()` for other labels.
    pub fn render_with(&self, p: &Poly, labels: &[String]) -> String {
        render_element(&self.datum, p, labels)
    }

    pub fn render(&self, p: &Poly) -> String {
        render_element(&self.datum, p, &self.labels)
    }
}

/// Infix form that [`parse_element`] reads back.
pub fn render_element(datum: &PbwDatum, p: &Poly, labels: &[String]) -> String {
    if labels.len() <= 1 || p.is_zero() {
        return datum.render(p);
    }
    let mut out = String::new();
    for (m, c) in p.sorted_terms(&Order::top(Order::DegLex)) {
        let body = datum.render(&Poly::term(pbw_core::Mon::new(m.exp.clone(), 0), c));
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, body),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let label = &labels[m.comp];
        if body != "1" {
            out.push_str(&body);
            out.push('*');
        }
        out.push_str(label);
    }
    out
}
