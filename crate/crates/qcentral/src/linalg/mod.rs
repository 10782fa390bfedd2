//! Exact linear algebra over Q(q): dense matrices for representation work,
//! sparse matrices with fewest-nonzeros pivoting for the change-of-basis
//! inversion, and small solvers shared by the pipeline.

use crate::error::{Error, Result};
use crate::qsym::QRat;
use std::collections::BTreeMap;

/// Dense matrix over Q(q), row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<QRat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![QRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = QRat::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let slot = &mut out[(i, j)];
                    *slot += &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &QRat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        self.add(&other.scale(&-QRat::one()))
    }

    /// Commutator AB - BA.
    pub fn commutator(&self, other: &QMatrix) -> QMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// First nonzero entry (row, col, value) if any; the witness reported by
    /// verification failures.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &QRat)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() {
                    return Some((i, j, &self[(i, j)]));
                }
            }
        }
        None
    }

    /// Kronecker product.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = QRat;
    fn index(&self, (i, j): (usize, usize)) -> &QRat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QRat {
        let cols = self.cols;
        &mut self.data[i * cols + j]
    }
}

/// Sparse matrix over Q(q), stored by rows.
#[derive(Clone, Debug, Default)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<BTreeMap<usize, QRat>>,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows],
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: QRat) {
        if v.is_zero() {
            self.entries[i].remove(&j);
        } else {
            self.entries[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> QRat {
        self.entries[i].get(&j).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(|r| r.len()).sum()
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (&j, v) in row {
                out[(i, j)] = v.clone();
            }
        }
        out
    }

    /// A * B for sparse operands.
    pub fn mul_sparse(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc: BTreeMap<usize, QRat> = BTreeMap::new();
            for (&k, a) in &self.entries[i] {
                for (&j, b) in &other.entries[k] {
                    let prod = a * b;
                    let slot = acc.entry(j).or_insert_with(QRat::zero);
                    *slot += &prod;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.entries[i] = acc;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != 1 {
                return false;
            }
            match row.get(&i) {
                Some(v) if v.is_one() => {}
                _ => return false,
            }
        }
        true
    }
}

/// Exact inverse of a sparse square matrix by Gaussian elimination with
/// fewest-nonzeros pivot selection (product of row and column counts, the
/// usual Markowitz criterion). Errors with the supplied label when singular.
pub fn invert_sparse(a: &SparseMat, label: &str) -> Result<SparseMat> {
    assert_eq!(a.rows, a.cols, "inverse of non-square matrix");
    let n = a.rows;
    let mut left = a.entries.clone();
    let mut right: Vec<BTreeMap<usize, QRat>> = (0..n)
        .map(|i| {
            let mut m = BTreeMap::new();
            m.insert(i, QRat::one());
            m
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row_used = vec![false; n];
    // column occupancy counts for the Markowitz score
    let mut col_count = vec![0usize; n];
    for row in &left {
        for (&c, _) in row {
            col_count[c] += 1;
        }
    }

    for _step in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (score, row, col)
        for (r, row) in left.iter().enumerate() {
            if row_used[r] || row.is_empty() {
                continue;
            }
            for (&c, _) in row.iter() {
                if pivot_of_col[c].is_some() {
                    continue;
                }
                let score = (row.len() - 1) * (col_count[c] - 1);
                if best.map_or(true, |(s, _, _)| score < s) {
                    best = Some((score, r, c));
                    if score == 0 {
                        break;
                    }
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let (_, pr, pc) = best.ok_or_else(|| Error::SingularB {
            weight: label.to_string(),
        })?;
        row_used[pr] = true;
        pivot_of_col[pc] = Some(pr);
        let pivot = left[pr].get(&pc).cloned().expect("pivot exists");
        let inv = pivot.recip().map_err(|_| Error::SingularB {
            weight: label.to_string(),
        })?;
        for v in left[pr].values_mut() {
            *v *= &inv;
        }
        for v in right[pr].values_mut() {
            *v *= &inv;
        }
        let prow_left = left[pr].clone();
        let prow_right = right[pr].clone();
        for r in 0..n {
            if r == pr {
                continue;
            }
            let factor = match left[r].get(&pc) {
                Some(f) => f.clone(),
                None => continue,
            };
            for (&c, v) in &prow_left {
                let delta = &factor * v;
                let had = left[r].contains_key(&c);
                let slot = left[r].entry(c).or_insert_with(QRat::zero);
                *slot -= &delta;
                let now_zero = slot.is_zero();
                if now_zero {
                    left[r].remove(&c);
                }
                match (had, now_zero) {
                    (false, false) => col_count[c] += 1,
                    (true, true) => col_count[c] -= 1,
                    _ => {}
                }
            }
            for (&c, v) in &prow_right {
                let delta = &factor * v;
                let slot = right[r].entry(c).or_insert_with(QRat::zero);
                *slot -= &delta;
                if slot.is_zero() {
                    right[r].remove(&c);
                }
            }
        }
    }

    let mut out = SparseMat::zeros(n, n);
    for c in 0..n {
        let pr = pivot_of_col[c].expect("all columns pivoted");
        out.entries[c] = right[pr].clone();
    }
    Ok(out)
}

/// Exact rank by elimination over Q(q) (works on a copy).
pub fn rank_dense(m: &QMatrix) -> usize {
    let (rank, _, _) = row_reduce(&mut m.clone(), m.cols);
    rank
}

fn row_reduce(a: &mut QMatrix, reduce_cols: usize) -> (usize, Vec<usize>, usize) {
    let rows = a.rows;
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..reduce_cols {
        if row >= rows {
            break;
        }
        let pivot_row = (row..rows).find(|&r| !a[(r, col)].is_zero());
        let Some(pr) = pivot_row else { continue };
        if pr != row {
            for j in 0..a.cols {
                let tmp = a[(pr, j)].clone();
                a[(pr, j)] = a[(row, j)].clone();
                a[(row, j)] = tmp;
            }
        }
        let inv = a[(row, col)].recip().expect("nonzero pivot");
        for j in 0..a.cols {
            a[(row, j)] = &a[(row, j)] * &inv;
        }
        for r in 0..rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone();
            for j in 0..a.cols {
                let delta = &f * &a[(row, j)];
                a[(r, j)] = &a[(r, j)] - &delta;
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
    }
    (pivot_col_of_row.len(), pivot_col_of_row, row)
}

/// Basis of the kernel of A.
pub fn nullspace(m: &QMatrix) -> Vec<Vec<QRat>> {
    let mut a = m.clone();
    let cols = a.cols;
    let (_, pivot_col_of_row, _) = row_reduce(&mut a, cols);
    let pivot_cols: std::collections::BTreeSet<usize> =
        pivot_col_of_row.iter().cloned().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![QRat::zero(); cols];
        v[free] = QRat::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[(r, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve A x = b exactly; returns None when inconsistent. Free variables are
/// set to zero.
pub fn solve_dense(m: &QMatrix, b: &[QRat]) -> Option<Vec<QRat>> {
    assert_eq!(m.rows, b.len());
    let rows = m.rows;
    let cols = m.cols;
    let mut a = QMatrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            a[(i, j)] = m[(i, j)].clone();
        }
        a[(i, cols)] = b[i].clone();
    }
    let (_, pivot_col_of_row, used_rows) = row_reduce(&mut a, cols);
    for r in used_rows..rows {
        if (0..cols).all(|j| a[(r, j)].is_zero()) && !a[(r, cols)].is_zero() {
            return None;
        }
    }
    let mut x = vec![QRat::zero(); cols];
    for (r, &pc) in pivot_col_of_row.iter().enumerate() {
        x[pc] = a[(r, cols)].clone();
    }
    Some(x)
}
