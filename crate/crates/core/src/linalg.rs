//! Sparse exact row echelon forms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::coeff::Coeff;

pub type Row = BTreeMap<usize, Coeff>;

/// Row space kept in echelon form; the pivot of a row is its smallest column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
}

fn axpy(target: &mut Row, row: &Row, factor: &Coeff) {
    for (c, v) in row {
        let entry = target.entry(*c).or_insert_with(Coeff::zero);
        *entry -= v * factor;
        if entry.is_zero() {
            target.remove(c);
        }
    }
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn from_rows<I: IntoIterator<Item = Row>>(rows: I) -> Echelon {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduce `v` against the pivots; the result has no entry in a pivot column.
    pub fn reduce(&self, mut v: Row) -> Row {
        let mut start = 0usize;
        loop {
            let next = v.range(start..).map(|(c, _)| *c).find(|c| self.rows.contains_key(c));
            let Some(c) = next else { break };
            let factor = v[&c].clone();
            axpy(&mut v, &self.rows[&c], &factor);
            start = c + 1;
        }
        v
    }

    pub fn contains(&self, v: &Row) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds a row; returns false when it was already in the span.
    pub fn insert(&mut self, v: Row) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else { return false };
        let inv = Coeff::one() / lead;
        let r: Row = r.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        self.rows.insert(p, r);
        true
    }

    /// Fully reduced rows in pivot order.
    pub fn basis(&self) -> Vec<Row> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut out: BTreeMap<usize, Row> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let mut r = self.rows[&p].clone();
            for (&q, rq) in out.iter() {
                if let Some(f) = r.get(&q).cloned() {
                    axpy(&mut r, rq, &f);
                }
            }
            out.insert(p, r);
        }
        out.into_values().collect()
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }

    /// Rows whose entries all lie in the columns accepted by `keep`, assuming
    /// the kept columns form a terminal segment of the column order.
    pub fn rows_within<F: Fn(usize) -> bool>(&self, keep: F) -> Vec<Row> {
        self.basis().into_iter().filter(|r| r.keys().all(|c| keep(*c))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn row(v: &[(usize, i64)]) -> Row {
        v.iter().map(|(c, x)| (*c, int(*x))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let e = Echelon::from_rows([row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)]), row(&[(1, 1), (2, 1)])]);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&row(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!e.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn reduced_basis() {
        let e = Echelon::from_rows([row(&[(0, 1), (1, 1)]), row(&[(1, 1), (2, 1)])]);
        let b = e.basis();
        assert_eq!(b[0], row(&[(0, 1), (2, -1)]));
        assert_eq!(b[1], row(&[(1, 1), (2, 1)]));
    }
}
