//! Dense and sparse matrices over Q(v,t).

use std::collections::BTreeMap;
use std::fmt;

use crate::ratfield::{RatError, RatFunc};

/// Row-major dense matrix, used for Gram matrices and their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<RatFunc>>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![vec![RatFunc::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = RatFunc::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<RatFunc>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged rows");
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j][i] = self.data[i][j].clone();
            }
        }
        m
    }

    pub fn mul(&self, o: &DenseMatrix) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    if !o.data[k][j].is_zero() {
                        m.data[i][j] += &(&self.data[i][k] * &o.data[k][j]);
                    }
                }
            }
        }
        m
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        DenseMatrix::from_rows(rows.iter().map(|&i| cols.iter().map(|&j| self.data[i][j].clone()).collect()).collect())
    }

    /// Indices of the lexicographically first maximal set of independent columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        let mut basis: Vec<(usize, Vec<RatFunc>)> = Vec::new();
        let mut chosen = Vec::new();
        for j in 0..self.cols {
            let mut c: Vec<RatFunc> = (0..self.rows).map(|i| self.data[i][j].clone()).collect();
            for (p, b) in &basis {
                if c[*p].is_zero() {
                    continue;
                }
                let f = &c[*p] / &b[*p];
                for (x, y) in c.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            if let Some(p) = c.iter().position(|x| !x.is_zero()) {
                basis.push((p, c));
                chosen.push(j);
            }
        }
        chosen
    }

    pub fn rank(&self) -> usize {
        self.independent_columns().len()
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<DenseMatrix, RatError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(RatError::DivisionByZero)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].inv()?;
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x * &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for k in 0..n {
                    if !a[col][k].is_zero() {
                        let d = &f * &a[col][k];
                        a[r][k] -= &d;
                    }
                    if !inv[col][k].is_zero() {
                        let d = &f * &inv[col][k];
                        inv[r][k] -= &d;
                    }
                }
            }
        }
        Ok(DenseMatrix { rows: n, cols: n, data: inv })
    }
}

/// Sparse matrix stored row by row; absent entries are zero.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, RatFunc>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| RatFunc::one()).collect())
    }

    pub fn diagonal(d: Vec<RatFunc>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.into_iter().enumerate() {
            m.add_entry(i, i, x);
        }
        m
    }

    pub fn from_dense(d: &DenseMatrix) -> Self {
        let mut m = Self::zeros(d.rows(), d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                m.add_entry(i, j, d.get(i, j).clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> RatFunc {
        self.data[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &RatFunc)> {
        self.data[i].iter().map(|(j, x)| (*j, x))
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn add_entry(&mut self, i: usize, j: usize, x: RatFunc) {
        assert!(i < self.rows && j < self.cols, "entry out of range");
        if x.is_zero() {
            return;
        }
        match self.data[i].entry(j) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(x);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &x;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = SparseMatrix::zeros(self.rows, o.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, RatFunc> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &o.data[*k] {
                    let p = a * b;
                    match acc.entry(*j) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(p);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += &p;
                        }
                    }
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.data[i] = acc;
        }
        out
    }

    pub fn add(&self, o: &SparseMatrix) -> SparseMatrix {
        assert!(self.rows == o.rows && self.cols == o.cols, "dimension mismatch in sum");
        let mut out = self.clone();
        for (i, j, x) in o.entries() {
            out.add_entry(i, j, x.clone());
        }
        out
    }

    pub fn sub(&self, o: &SparseMatrix) -> SparseMatrix {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        if c.is_zero() {
            return out;
        }
        for (i, j, x) in self.entries() {
            out.add_entry(i, j, x * c);
        }
        out
    }

    /// Apply `f` to every stored entry.
    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.entries() {
            out.add_entry(i, j, f(x));
        }
        out
    }

    pub fn try_map(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, RatError>) -> Result<SparseMatrix, RatError> {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (i, j, x) in self.entries() {
            out.add_entry(i, j, f(x)?);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.cols, self.rows);
        for (i, j, x) in self.entries() {
            out.add_entry(j, i, x.clone());
        }
        out
    }

    /// Kronecker product; basis `(a, b)` has index `a * dim_b + b`.
    pub fn kron(&self, o: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for (i, j, x) in self.entries() {
            for (k, l, y) in o.entries() {
                out.add_entry(i * o.rows + k, j * o.cols + l, x * y);
            }
        }
        out
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = vec![vec![RatFunc::zero(); self.cols]; self.rows];
        for (i, j, x) in self.entries() {
            d[i][j] = x.clone();
        }
        DenseMatrix::from_rows(d)
    }

    pub fn trace(&self) -> RatFunc {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Monic minimal polynomial of a square matrix, coefficients from the
    /// constant term up. Found as the first linear dependency among the
    /// flattened powers `1, A, A², …`.
    pub fn minimal_polynomial(&self) -> Vec<RatFunc> {
        assert_eq!(self.rows, self.cols, "minimal polynomial of a non-square matrix");
        let n = self.rows;
        let flat = |m: &SparseMatrix| -> Vec<RatFunc> {
            let mut v = vec![RatFunc::zero(); n * n];
            for (i, j, x) in m.entries() {
                v[i * n + j] = x.clone();
            }
            v
        };
        let mut powers = vec![flat(&SparseMatrix::identity(n))];
        let mut cur = SparseMatrix::identity(n);
        loop {
            cur = cur.mul(self);
            let next = flat(&cur);
            let k = powers.len();
            // Columns are the powers so far followed by the candidate.
            let cols = DenseMatrix::from_rows(
                (0..n * n).map(|r| powers.iter().map(|p| p[r].clone()).chain([next[r].clone()]).collect()).collect(),
            );
            if cols.independent_columns().len() == k + 1 {
                powers.push(next);
                continue;
            }
            // Solve Σ c_j A^j = A^k on k independent rows.
            let rows = cols
                .transpose()
                .select(&(0..k).collect::<Vec<_>>(), &(0..n * n).collect::<Vec<_>>())
                .independent_columns();
            let lhs = cols.select(&rows, &(0..k).collect::<Vec<_>>());
            let rhs = cols.select(&rows, &[k]);
            let c = lhs.inverse().expect("powers are independent").mul(&rhs);
            let mut poly: Vec<RatFunc> = (0..k).map(|j| -c.get(j, 0).clone()).collect();
            poly.push(RatFunc::one());
            return poly;
        }
    }
}

impl PartialEq for SparseMatrix {
    fn eq(&self, o: &SparseMatrix) -> bool {
        self.rows == o.rows
            && self.cols == o.cols
            && self
                .data
                .iter()
                .zip(&o.data)
                .all(|(a, b)| a.len() == b.len() && a.iter().all(|(j, x)| b.get(j).is_some_and(|y| x == y)))
    }
}

/// One `row col | value` line per nonzero entry, 1-based.
impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, x) in self.entries() {
            writeln!(f, "{} {} | {}", i + 1, j + 1, x)?;
        }
        Ok(())
    }
}
