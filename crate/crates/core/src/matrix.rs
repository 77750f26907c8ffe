//! Dense bicomplex matrices `A = 1_A·e₁ + 2_A·e₂`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;
use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Largest order accepted by [`BicomplexMatrix::det_laplace`].
pub const LAPLACE_MAX_ORDER: usize = 6;

/// Sorted, duplicate-free row or column selection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet);
        }
        Ok(IndexSet(indices))
    }

    pub fn full(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        IndexSet((0..64).filter(|b| mask >> b & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.mask() & !other.mask() == 0
    }

    fn check_within(&self, dim: usize) -> Result<()> {
        match self.0.last() {
            Some(&i) if i >= dim => Err(Error::IndexOutOfRange { index: i, dim }),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixClass {
    /// Every entry lies in `I₁`.
    E1Matrix,
    /// Every entry lies in `I₂`.
    E2Matrix,
    /// Every entry is singular, but neither of the above.
    E1E2Matrix,
    General,
}

impl MatrixClass {
    /// True for the three all-singular classes.
    pub fn is_all_singular(self) -> bool {
        self != MatrixClass::General
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MatrixClass::E1Matrix => "E1Matrix",
            MatrixClass::E2Matrix => "E2Matrix",
            MatrixClass::E1E2Matrix => "E1E2Matrix",
            MatrixClass::General => "General",
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BicomplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Bicomplex>,
}

impl BicomplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Bicomplex>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter("matrix must have at least one row and column".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(BicomplexMatrix { rows, cols, entries })
    }

    /// Panics on empty or ragged input.
    pub fn from_rows(rows: Vec<Vec<Bicomplex>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        BicomplexMatrix::new(n, m, rows.into_iter().flatten().collect()).expect("nonempty matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BicomplexMatrix::new(rows, cols, vec![Bicomplex::zero(); rows * cols]).expect("nonempty matrix")
    }

    pub fn identity(n: usize) -> Self {
        BicomplexMatrix::from_components(&ComplexMatrix::identity(n), &ComplexMatrix::identity(n))
            .expect("same shape")
    }

    pub fn diag(d: Vec<Bicomplex>) -> Self {
        let n = d.len();
        let mut m = BicomplexMatrix::zeros(n, n);
        for (i, x) in d.into_iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Bicomplex] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Bicomplex {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Bicomplex] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Bicomplex> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols).flat_map(|j| (0..self.rows).map(move |i| (i, j))).map(|(i, j)| self.get(i, j).clone());
        BicomplexMatrix { rows: self.cols, cols: self.rows, entries: entries.collect() }
    }

    /// `(1_A, 2_A)`.
    pub fn idempotent_split(&self) -> (ComplexMatrix, ComplexMatrix) {
        let (p1, p2): (Vec<_>, Vec<_>) = self.entries.iter().map(Bicomplex::idempotent_parts).unzip();
        (
            ComplexMatrix::new(self.rows, self.cols, p1).expect("shape"),
            ComplexMatrix::new(self.rows, self.cols, p2).expect("shape"),
        )
    }

    /// `M1·e₁ + M2·e₂`.
    pub fn from_components(m1: &ComplexMatrix, m2: &ComplexMatrix) -> Result<Self> {
        if m1.shape() != m2.shape() {
            return Err(Error::ShapeMismatch { left: m1.shape(), right: m2.shape() });
        }
        let entries = m1
            .entries()
            .iter()
            .zip(m2.entries())
            .map(|(a, b)| Bicomplex::from_idempotent(a.clone(), b.clone()))
            .collect();
        BicomplexMatrix::new(m1.rows(), m1.cols(), entries)
    }

    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::InvalidIndexSet);
        }
        rows.check_within(self.rows)?;
        cols.check_within(self.cols)?;
        Ok(self.select(rows.as_slice(), cols.as_slice()))
    }

    /// Unchecked selection of the given rows and columns.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        BicomplexMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Whether `other` occurs in `self` as a submatrix, for some choice of
    /// rows and columns.
    pub fn contains_submatrix(&self, other: &BicomplexMatrix) -> bool {
        let (r, c) = other.shape();
        if r > self.rows || c > self.cols {
            return false;
        }
        let row_sets = combinations(self.rows, r);
        let col_sets = combinations(self.cols, c);
        row_sets
            .iter()
            .any(|rs| col_sets.iter().any(|cs| &self.select(rs, cs) == other))
    }

    /// `(det 1_A, det 2_A)`.
    pub fn det_components(&self) -> Result<(crate::GaussianRational, crate::GaussianRational)> {
        self.require_square()?;
        let (m1, m2) = self.idempotent_split();
        Ok((m1.det()?, m2.det()?))
    }

    /// `det(A) = det(1_A)e₁ + det(2_A)e₂`, component determinants by
    /// fraction-free elimination.
    pub fn det_idempotent(&self) -> Result<Bicomplex> {
        let (d1, d2) = self.det_components()?;
        Ok(Bicomplex::from_idempotent(d1, d2))
    }

    /// Cofactor expansion along the first row in bicomplex arithmetic.
    pub fn det_laplace(&self) -> Result<Bicomplex> {
        self.require_square()?;
        if self.rows > LAPLACE_MAX_ORDER {
            return Err(Error::OrderTooLarge { order: self.rows, limit: LAPLACE_MAX_ORDER });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.laplace(&idx, &idx))
    }

    fn laplace(&self, rows: &[usize], cols: &[usize]) -> Bicomplex {
        match rows.len() {
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut total = Bicomplex::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero() {
                        continue;
                    }
                    let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a * &self.laplace(&rows[1..], &minor_cols);
                    total = if k % 2 == 0 { &total + &term } else { &total - &term };
                }
                total
            }
        }
    }

    /// `det(A) ∈ O₂`, i.e. some component determinant vanishes.
    pub fn is_singular_matrix(&self) -> Result<bool> {
        let (d1, d2) = self.det_components()?;
        Ok(d1.is_zero() || d2.is_zero())
    }

    pub fn classify(&self) -> MatrixClass {
        if self.entries.iter().all(Zero::is_zero) {
            return MatrixClass::E1E2Matrix;
        }
        if self.entries.iter().all(Bicomplex::in_i1) {
            MatrixClass::E1Matrix
        } else if self.entries.iter().all(Bicomplex::in_i2) {
            MatrixClass::E2Matrix
        } else if self.entries.iter().all(Bicomplex::is_singular) {
            MatrixClass::E1E2Matrix
        } else {
            MatrixClass::General
        }
    }

    pub fn add(&self, rhs: &BicomplexMatrix) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        BicomplexMatrix::new(self.rows, self.cols, entries)
    }

    pub fn mul(&self, rhs: &BicomplexMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Bicomplex::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                entries.push(acc);
            }
        }
        BicomplexMatrix::new(self.rows, rhs.cols, entries)
    }

    pub fn scalar_mul(&self, k: &Bicomplex) -> Self {
        BicomplexMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| k * x).collect() }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl fmt::Display for BicomplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BicomplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}
