//! Exact rational Gaussian elimination.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Sparse row with entries keyed by column.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Incremental row echelon form over the rationals. Rows are pushed one at a
/// time; each stored row has leading entry 1 at a distinct pivot column.
#[derive(Debug, Clone, Default)]
pub struct Eliminator {
    columns: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl Eliminator {
    pub fn new(columns: usize) -> Self {
        Eliminator { columns, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Reduces `row` against the stored rows; returns true if it was
    /// independent and has been added.
    pub fn push(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, _)) = row.iter().find(|(c, _)| self.rows.contains_key(c)) {
            let factor = row[&lead].clone();
            let pivot_row = &self.rows[&lead];
            for (c, v) in pivot_row {
                let entry = row.entry(*c).or_insert_with(Rational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
        }
        let Some((&lead, value)) = row.iter().next() else {
            return false;
        };
        let inv = value.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        self.rows.insert(lead, row);
        true
    }

    /// Reduced row echelon form as (pivot column, row) pairs.
    pub fn reduced(&self) -> Vec<(usize, SparseRow)> {
        let mut rows: Vec<(usize, SparseRow)> = self.rows.iter().map(|(&p, r)| (p, r.clone())).collect();
        for i in (0..rows.len()).rev() {
            let (pivot, pivot_row) = rows[i].clone();
            for (_, row) in rows.iter_mut().take(i) {
                if let Some(factor) = row.get(&pivot).cloned() {
                    for (c, v) in &pivot_row {
                        let entry = row.entry(*c).or_insert_with(Rational::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(c);
                        }
                    }
                }
            }
        }
        rows
    }

    /// Basis of `{x : r . x = 0 for every pushed row r}`, one vector per
    /// free column, in increasing order of that column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let reduced = self.reduced();
        let free: Vec<usize> = (0..self.columns).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.columns];
                v[f] = Rational::one();
                for (pivot, row) in &reduced {
                    if let Some(x) = row.get(&f) {
                        v[*pivot] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

pub fn dense_to_sparse(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let columns = rows.first().map_or(0, Vec::len);
    let mut e = Eliminator::new(columns);
    for r in rows {
        e.push(dense_to_sparse(r));
    }
    e.rank()
}

/// Some solution of `a x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let unknowns = a.first().map_or(0, Vec::len);
    let mut e = Eliminator::new(unknowns + 1);
    for (row, rhs) in a.iter().zip(b) {
        let mut r = dense_to_sparse(row);
        if !rhs.is_zero() {
            r.insert(unknowns, rhs.clone());
        }
        e.push(r);
    }
    let reduced = e.reduced();
    if reduced.iter().any(|(p, _)| *p == unknowns) {
        return None;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (pivot, row) in reduced {
        x[pivot] = row.get(&unknowns).cloned().unwrap_or_else(Rational::zero);
    }
    Some(x)
}
