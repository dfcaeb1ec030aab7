//! Monomial and module orderings.
//!
//! An [`Order`] compares pairs `(exponent, component)`. Plain monomial
//! orderings break ties on the component index (term over position).

use std::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Lex,
    DegLex,
    DegRevLex,
    /// Compare `<u, a>` first, then `base`.
    Weighted { u: Vec<i64>, base: Box<Order> },
    /// Ordering on `K<h, x>`: index 0 is `h`. Compares the `(1, w)`-degree,
    /// then `base` on the tail exponent (the power of `h` is ignored).
    Homogenized { w: Vec<i64>, base: Box<Order> },
    /// Ordering on a presentation whose variable `i` maps to the exponent
    /// `images[i]`: compare images under `outer`, then `tie` on the
    /// presentation exponents.
    Pullback { images: Vec<Vec<u32>>, outer: Box<Order>, tie: Box<Order> },
    /// Term over position.
    Top { base: Box<Order> },
    /// Position over term.
    Pot { base: Box<Order> },
    /// Compare `<u, a> + shift[e]` first, then `base`.
    Shifted { u: Vec<i64>, shift: Vec<i64>, base: Box<Order> },
    /// Components in a higher block are smaller; then `base`.
    Block { block_of: Vec<usize>, base: Box<Order> },
}

pub fn dot(u: &[i64], a: &[u32]) -> i64 {
    u.iter().zip(a).map(|(&w, &e)| w * e as i64).sum()
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn deg(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

impl Order {
    pub fn weighted(u: Vec<i64>, base: Order) -> Order {
        Order::Weighted { u, base: Box::new(base) }
    }

    pub fn homogenized(w: Vec<i64>, base: Order) -> Order {
        Order::Homogenized { w, base: Box::new(base) }
    }

    pub fn top(base: Order) -> Order {
        Order::Top { base: Box::new(base) }
    }

    pub fn pot(base: Order) -> Order {
        Order::Pot { base: Box::new(base) }
    }

    pub fn shifted(u: Vec<i64>, shift: Vec<i64>, base: Order) -> Order {
        Order::Shifted { u, shift, base: Box::new(base) }
    }

    pub fn block(block_of: Vec<usize>, base: Order) -> Order {
        Order::Block { block_of, base: Box::new(base) }
    }

    pub fn compare(&self, a: &[u32], ea: usize, b: &[u32], eb: usize) -> Ordering {
        match self {
            Order::Lex => lex(a, b).then(ea.cmp(&eb)),
            Order::DegLex => deg(a).cmp(&deg(b)).then_with(|| lex(a, b)).then(ea.cmp(&eb)),
            Order::DegRevLex => deg(a).cmp(&deg(b)).then_with(|| revlex(a, b)).then(ea.cmp(&eb)),
            Order::Weighted { u, base } => dot(u, a)
                .cmp(&dot(u, b))
                .then_with(|| base.compare(a, ea, b, eb)),
            Order::Homogenized { w, base } => {
                let da = a[0] as i64 + dot(w, &a[1..]);
                let db = b[0] as i64 + dot(w, &b[1..]);
                da.cmp(&db)
                    .then_with(|| base.compare(&a[1..], ea, &b[1..], eb))
                    .then_with(|| a[0].cmp(&b[0]))
            }
            Order::Pullback { images, outer, tie } => {
                let ia = pull(images, a);
                let ib = pull(images, b);
                outer.compare(&ia, ea, &ib, eb).then_with(|| tie.compare(a, ea, b, eb))
            }
            Order::Top { base } => base.compare(a, 0, b, 0).then(ea.cmp(&eb)),
            Order::Pot { base } => ea.cmp(&eb).then_with(|| base.compare(a, 0, b, 0)),
            Order::Shifted { u, shift, base } => (dot(u, a) + shift[ea])
                .cmp(&(dot(u, b) + shift[eb]))
                .then_with(|| base.compare(a, ea, b, eb)),
            Order::Block { block_of, base } => block_of[eb]
                .cmp(&block_of[ea])
                .then_with(|| base.compare(a, ea, b, eb)),
        }
    }

    /// Compare exponents on a single component.
    pub fn cmp_exp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.compare(a, 0, b, 0)
    }

    /// Whether every descending chain is finite (given a finite component set).
    pub fn is_well(&self) -> bool {
        match self {
            Order::Lex | Order::DegLex | Order::DegRevLex => true,
            Order::Weighted { u, base } => positive_or_well(u, base),
            Order::Homogenized { w, base } => positive_or_well(w, base),
            Order::Pullback { outer, tie, .. } => outer.is_well() && tie.is_well(),
            Order::Top { base } | Order::Pot { base } | Order::Block { base, .. } => base.is_well(),
            Order::Shifted { u, base, .. } => positive_or_well(u, base),
        }
    }

    /// The induced ordering on monomials of a single component.
    pub fn restrict(&self) -> Order {
        match self {
            Order::Top { base } | Order::Pot { base } | Order::Block { base, .. } => base.restrict(),
            Order::Shifted { u, base, .. } => Order::weighted(u.clone(), base.restrict()),
            Order::Homogenized { w, base } => Order::homogenized(w.clone(), base.restrict()),
            Order::Weighted { u, base } => Order::weighted(u.clone(), base.restrict()),
            other => other.clone(),
        }
    }

    /// Number of variables this ordering is pinned to, if any.
    pub fn arity(&self) -> Option<usize> {
        match self {
            Order::Lex | Order::DegLex | Order::DegRevLex => None,
            Order::Weighted { u, .. } | Order::Shifted { u, .. } => Some(u.len()),
            Order::Homogenized { w, .. } => Some(w.len() + 1),
            Order::Pullback { images, .. } => Some(images.len()),
            Order::Top { base } | Order::Pot { base } | Order::Block { base, .. } => base.arity(),
        }
    }

    pub fn check_arity(&self, n: usize) -> Result<()> {
        self.check_inner(n)
    }

    fn check_inner(&self, n: usize) -> Result<()> {
        let mismatch = |k: usize| {
            Err(Error::Dimension(format!("ordering expects {k} variables, got {n}")))
        };
        match self {
            Order::Lex | Order::DegLex | Order::DegRevLex => Ok(()),
            Order::Weighted { u, base } | Order::Shifted { u, base, .. } => {
                if u.len() != n {
                    return mismatch(u.len());
                }
                base.check_inner(n)
            }
            Order::Homogenized { w, base } => {
                if w.len() + 1 != n {
                    return mismatch(w.len() + 1);
                }
                base.check_inner(n - 1)
            }
            Order::Pullback { images, tie, .. } => {
                if images.len() != n {
                    return mismatch(images.len());
                }
                tie.check_inner(n)
            }
            Order::Top { base } | Order::Pot { base } | Order::Block { base, .. } => {
                base.check_inner(n)
            }
        }
    }
}

/// Strictly positive weights leave finitely many monomials per degree.
fn positive_or_well(u: &[i64], base: &Order) -> bool {
    u.iter().all(|&x| x > 0) || (u.iter().all(|&x| x >= 0) && base.is_well())
}

fn pull(images: &[Vec<u32>], a: &[u32]) -> Vec<u32> {
    let n = images.first().map_or(0, |v| v.len());
    let mut out = vec![0u32; n];
    for (img, &k) in images.iter().zip(a) {
        if k == 0 {
            continue;
        }
        for (o, &e) in out.iter_mut().zip(img) {
            *o += k * e;
        }
    }
    out
}

/// Leading exponent with the bottom sentinel of the zero element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeadExp {
    Bottom,
    At(Vec<u32>, usize),
}

impl LeadExp {
    pub fn compare(&self, other: &LeadExp, order: &Order) -> Ordering {
        match (self, other) {
            (LeadExp::Bottom, LeadExp::Bottom) => Ordering::Equal,
            (LeadExp::Bottom, _) => Ordering::Less,
            (_, LeadExp::Bottom) => Ordering::Greater,
            (LeadExp::At(a, ea), LeadExp::At(b, eb)) => order.compare(a, *ea, b, *eb),
        }
    }

    /// Translation by a multi-index; bottom absorbs.
    pub fn shift(&self, by: &[u32]) -> LeadExp {
        match self {
            LeadExp::Bottom => LeadExp::Bottom,
            LeadExp::At(a, e) => LeadExp::At(a.iter().zip(by).map(|(x, y)| x + y).collect(), *e),
        }
    }
}
