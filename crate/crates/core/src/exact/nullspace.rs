//! Exact kernel and rank computation.
//!
//! Elimination keeps every working row as a primitive integer vector
//! (fraction-free), and only normalizes pivots to one during the final
//! back-substitution.

use std::collections::BTreeMap;

use super::rational::{denom_lcm, int_gcd};
use super::{Rational, SparseMatrix, SparseVec};

/// Scales `row` to a primitive integer vector with a positive leading entry.
fn primitive(row: SparseVec) -> SparseVec {
    if row.is_zero() {
        return row;
    }
    let mut lcm = Rational::ONE;
    for (_, v) in row.iter() {
        if !v.is_integer() {
            lcm = denom_lcm(&lcm, v);
        }
    }
    let row = if lcm.is_one() { row } else { row.scale(&lcm) };
    let mut g = Rational::ZERO;
    for (_, v) in row.iter() {
        g = int_gcd(&g, &v.abs()).expect("integer row");
        if g.is_one() {
            break;
        }
    }
    if row.first().map_or(false, |(_, v)| v.is_negative()) {
        g = -g;
    }
    if g.is_one() {
        row
    } else {
        row.scale(&g.recip())
    }
}

/// Row echelon form built incrementally, one row at a time.
///
/// Each stored row is primitive and its pivot is its smallest nonzero
/// column. Rows are inserted in the order they are offered, so the pivot
/// choice is "first row, then smallest column".
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots (fraction-free).
    pub fn reduce(&self, row: &SparseVec) -> SparseVec {
        let mut row = primitive(row.clone());
        loop {
            let hit = row
                .iter()
                .find_map(|(c, v)| self.pivots.get(c).map(|p| (*c, v.clone(), p)));
            match hit {
                Some((c, v, p)) => {
                    // row <- pv * row - v * p
                    let pv = p.get(c);
                    row = primitive(row.scale(&pv).add_scaled(&-v, p));
                }
                None => return row,
            }
        }
    }

    /// Inserts `row`; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        debug_assert!(row.max_index().map_or(true, |m| m < self.ncols));
        let reduced = self.reduce(row);
        match reduced.first() {
            None => false,
            Some((c, _)) => {
                let c = *c;
                self.pivots.insert(c, reduced);
                true
            }
        }
    }

    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row).is_zero()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduced row echelon form: pivots equal to one, zero above and below
    /// every pivot, rows ordered by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (c, row) in self.pivots.into_iter().rev() {
            let mut row = row;
            loop {
                let hit = row
                    .iter()
                    .find(|(j, _)| *j != c && done.contains_key(j))
                    .map(|(j, v)| (*j, v.clone()));
                match hit {
                    Some((j, v)) => row = row.add_scaled(&-v, &done[&j]),
                    None => break,
                }
            }
            let lead = row.get(c);
            done.insert(c, row.scale(&lead.recip()));
        }
        done.into_values().collect()
    }
}

/// Reduced row echelon form of the row space of `rows`.
pub fn rref(ncols: usize, rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.into_rref()
}

/// Basis of `{ v : m v = 0 }` in canonical form.
///
/// The basis is the reduced row echelon form of the kernel: every vector has
/// leading entry one, all other basis vectors vanish at that position, and
/// vectors are ordered by leading index.
pub fn nullspace(m: &SparseMatrix) -> Vec<SparseVec> {
    let ncols = m.ncols();
    let mut ech = Echelon::new(ncols);
    for r in m.rows() {
        ech.insert(r);
    }
    let rows = ech.into_rref();
    let pivot_of: BTreeMap<usize, &SparseVec> =
        rows.iter().map(|r| (r.first().unwrap().0, r)).collect();
    // column -> list of (pivot col, coefficient) in that column
    let mut by_col: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (&p, r) in &pivot_of {
        for (j, v) in r.iter() {
            if *j != p {
                by_col.entry(*j).or_default().push((p, v.clone()));
            }
        }
    }
    let kernel: Vec<SparseVec> = (0..ncols)
        .filter(|c| !pivot_of.contains_key(c))
        .map(|f| {
            let mut pairs = vec![(f, Rational::ONE)];
            if let Some(list) = by_col.get(&f) {
                pairs.extend(list.iter().map(|(p, v)| (*p, -v)));
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    rref(ncols, &kernel)
}

pub fn rank(m: &SparseMatrix) -> usize {
    let mut ech = Echelon::new(m.ncols());
    for r in m.rows() {
        ech.insert(r);
    }
    ech.rank()
}
