use std::collections::BTreeMap;
use std::fmt;

use super::Rational;

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: vec![(i, Rational::ONE)],
        }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let slot = map.entry(i).or_default();
            *slot += v;
        }
        Self {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Builds from pairs already sorted by index with no zeros or duplicates.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        Self { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn first(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// Returns `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let mut s = x.clone();
                        s.add_mul(c, y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Rational::ONE, other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Rational::ONE, other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::ZERO;
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc.add_mul(x, y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Remaps indices through `f`; the caller guarantees `f` is injective.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        f.write_str("]")
    }
}

/// Row-major sparse matrix over the rationals.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![SparseVec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nrows: n,
            ncols: n,
            rows: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows
            .iter()
            .all(|r| r.max_index().map_or(true, |m| m < ncols)));
        Self {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(nrows: usize, cols: &[SparseVec]) -> Self {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter() {
                assert!(*i < nrows, "row index out of range");
                rows[*i].push((j, v.clone()));
            }
        }
        Self {
            nrows,
            ncols: cols.len(),
            rows: rows
                .into_iter()
                .map(SparseVec::from_sorted_unchecked)
                .collect(),
        }
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, Rational)>>(
        nrows: usize,
        ncols: usize,
        triplets: I,
    ) -> Self {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "index out of range");
            rows[i].push((j, v));
        }
        Self {
            nrows,
            ncols,
            rows: rows.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self {
            nrows: rows.len(),
            ncols,
            rows: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Self::from_dense(&dense)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.max_index().map_or(true, |m| m < self.ncols));
        self.rows.push(row);
        self.nrows += 1;
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    /// Iterates over `(row, col, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.entries() {
            cols[j].push((i, v.clone()));
        }
        cols.into_iter()
            .map(SparseVec::from_sorted_unchecked)
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows: self.columns(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| (i, r.dot(v)))
                .filter(|(_, x)| !x.is_zero()),
        )
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, v) in r.iter() {
                    acc = acc.add_scaled(v, &other.rows[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn add_scaled(&self, c: &Rational, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.add_scaled(c, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&Rational::ONE, other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&-Rational::ONE, other)
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        SparseMatrix {
            nrows: self.nrows + other.nrows,
            ncols: self.ncols,
            rows,
        }
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{}", self.nrows, self.ncols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if !r.is_zero() {
                writeln!(f, "  {i}: {r:?}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVec::from_pairs([(0, q(1)), (3, q(2))]);
        let b = SparseVec::from_pairs([(3, q(1)), (5, q(4))]);
        let c = a.add_scaled(&q(-2), &b);
        assert_eq!(c, SparseVec::from_pairs([(0, q(1)), (5, q(-8))]));
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = SparseMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), SparseMatrix::from_i64(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.transpose(), SparseMatrix::from_i64(&[&[1, 0], &[2, 1]]));
        assert_eq!(
            SparseMatrix::from_columns(2, &a.columns()),
            a,
            "columns round-trip"
        );
    }
}
