//! Dense matrices over Gaussian rationals and the exact elimination kernel
//! (rank, determinant, reduced echelon form) that everything else uses.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(ComplexMatrix { rows, cols, entries })
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        ComplexMatrix { rows: n, cols: m, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        ComplexMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| GaussianRational::from(v)).collect()).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
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

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ComplexMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &ComplexMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        let rows = (0..self.rows).map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect()).collect();
        Ok(ComplexMatrix::from_rows(rows))
    }

    /// `self` stacked above `other`.
    pub fn vconcat(&self, other: &ComplexMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ComplexMatrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        ComplexMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.entries[i * rhs.cols + j] += &(a * rhs.get(k, j));
                }
            }
        }
        Ok(out)
    }

    /// Whether `other` occurs in `self` for some choice of rows and columns.
    pub fn contains_submatrix(&self, other: &ComplexMatrix) -> bool {
        if other.rows > self.rows || other.cols > self.cols {
            return false;
        }
        let col_sets = crate::matrix::combinations(self.cols, other.cols);
        crate::matrix::combinations(self.rows, other.rows)
            .iter()
            .any(|rs| col_sets.iter().any(|cs| &self.select(rs, cs) == other))
    }

    /// Rank over ℂ₁ by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Each row is first
    /// scaled to Gaussian integers, so every intermediate division is exact
    /// in `ℤ[i]`; the scale factors are divided out at the end.
    pub fn det(&self) -> Result<GaussianRational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(GaussianRational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<GaussianRational>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = row
                .iter()
                .flat_map(|z| [z.re.denom(), z.im.denom()])
                .fold(BigInt::one(), |acc, d| acc.lcm(d));
            let k = Rational::from_integer(l.clone());
            a.push(row.iter().map(|z| z.scale(&k)).collect());
            scale *= l;
        }
        let mut negate = false;
        let mut prev = GaussianRational::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return Ok(GaussianRational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let mut d = a[n - 1][n - 1].scale(&Rational::new(BigInt::one(), scale));
        if negate {
            d = -d;
        }
        Ok(d)
    }

    /// Reduced row echelon form: the nonzero rows and their pivot columns.
    pub fn echelon(&self) -> (Vec<Vec<GaussianRational>>, Vec<usize>) {
        let mut a = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("nonzero pivot");
            for z in a[r].iter_mut().skip(c) {
                *z = &*z * &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (z, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *z -= &(&f * p);
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }
}

/// A copy of a [`ComplexMatrix`] with every row scaled by the lcm of its
/// denominators, stored as `i128` Gaussian integers. Row scaling by nonzero
/// factors does not change which minors vanish.
#[derive(Debug, Clone)]
pub struct ScaledIntMatrix {
    cols: usize,
    entries: Vec<(i128, i128)>,
}

impl ScaledIntMatrix {
    /// `None` when some scaled entry does not fit in an `i64`, leaving
    /// `i128` headroom for products.
    pub fn from_matrix(m: &ComplexMatrix) -> Option<Self> {
        let mut entries = Vec::with_capacity(m.entries.len());
        for i in 0..m.rows {
            let row = m.row(i);
            let l = row
                .iter()
                .flat_map(|z| [z.re.denom(), z.im.denom()])
                .fold(BigInt::one(), |acc, d| acc.lcm(d));
            for z in row {
                let re = (z.re.numer() * (&l / z.re.denom())).to_i64()?;
                let im = (z.im.numer() * (&l / z.im.denom())).to_i64()?;
                entries.push((re as i128, im as i128));
            }
        }
        Some(ScaledIntMatrix { cols: m.cols, entries })
    }

    fn get(&self, i: usize, j: usize) -> (i128, i128) {
        self.entries[i * self.cols + j]
    }

    /// Whether the square minor on `rows × cols` vanishes, by Bareiss
    /// elimination in `ℤ[i]`. `None` on arithmetic overflow.
    pub fn minor_is_zero(&self, rows: &[usize], cols: &[usize]) -> Option<bool> {
        let n = rows.len();
        debug_assert_eq!(n, cols.len());
        let mut a: Vec<Vec<(i128, i128)>> =
            rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j)).collect()).collect();
        let mut prev = (1i128, 0i128);
        for k in 0..n {
            if a[k][k] == (0, 0) {
                let p = (k + 1..n).find(|&i| a[i][k] != (0, 0));
                match p {
                    Some(p) => a.swap(k, p),
                    None => return Some(true),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = gsub(gmul(a[i][j], a[k][k])?, gmul(a[i][k], a[k][j])?)?;
                    a[i][j] = gdiv_exact(num, prev)?;
                }
            }
            prev = a[k][k];
        }
        Some(false)
    }
}

fn gmul(a: (i128, i128), b: (i128, i128)) -> Option<(i128, i128)> {
    let re = a.0.checked_mul(b.0)?.checked_sub(a.1.checked_mul(b.1)?)?;
    let im = a.0.checked_mul(b.1)?.checked_add(a.1.checked_mul(b.0)?)?;
    Some((re, im))
}

fn gsub(a: (i128, i128), b: (i128, i128)) -> Option<(i128, i128)> {
    Some((a.0.checked_sub(b.0)?, a.1.checked_sub(b.1)?))
}

/// `a / b` where the quotient is known to lie in `ℤ[i]`.
fn gdiv_exact(a: (i128, i128), b: (i128, i128)) -> Option<(i128, i128)> {
    let num = gmul(a, (b.0, b.1.checked_neg()?))?;
    let norm = b.0.checked_mul(b.0)?.checked_add(b.1.checked_mul(b.1)?)?;
    debug_assert!(num.0 % norm == 0 && num.1 % norm == 0);
    Some((num.0 / norm, num.1 / norm))
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    /// Permutation-sum determinant, independent of the elimination path.
    fn leibniz(m: &ComplexMatrix) -> GaussianRational {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        let mut total = GaussianRational::zero();
        for p in perms(n) {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let mut term = GaussianRational::one();
            for (i, &j) in p.iter().enumerate() {
                term = &term * m.get(i, j);
            }
            if inversions % 2 == 1 {
                term = -term;
            }
            total += &term;
        }
        total
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ComplexMatrix::identity(4).rank(), 4);
        assert_eq!(ComplexMatrix::from_int_rows(&[&[1, 1, 0], &[1, 0, 1], &[0, 0, 1]]).rank(), 3);
        assert_eq!(ComplexMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(ComplexMatrix::from_int_rows(&[&[1, 2], &[2, 4], &[0, 0]]).rank(), 1);
    }

    #[test]
    fn det_matches_leibniz() {
        let i = GaussianRational::i();
        let h = GaussianRational::from_real(rational(1, 2));
        let m = ComplexMatrix::from_rows(vec![
            vec![GaussianRational::zero(), i.clone(), h.clone()],
            vec![GaussianRational::from(3), GaussianRational::from_ints(1, -1), GaussianRational::zero()],
            vec![h.clone(), GaussianRational::from(2), i.clone()],
        ]);
        assert_eq!(m.det().unwrap(), leibniz(&m));
        assert_eq!(ComplexMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).det().unwrap(), GaussianRational::from(-1));
        assert_eq!(ComplexMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).det().unwrap(), GaussianRational::zero());
        assert!(matches!(ComplexMatrix::zeros(2, 3).det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn echelon_is_reduced() {
        let m = ComplexMatrix::from_int_rows(&[&[2, 4, 2], &[1, 2, 3], &[3, 6, 5]]);
        let (rows, pivots) = m.echelon();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(rows[0], vec![1.into(), 2.into(), 0.into()]);
        assert_eq!(rows[1], vec![0.into(), 0.into(), 1.into()]);
    }

    #[test]
    fn scaled_integer_minors_agree_with_exact_det() {
        let h = GaussianRational::from_real(rational(1, 2));
        let i = GaussianRational::i();
        let m = ComplexMatrix::from_rows(vec![
            vec![h.clone(), i.clone(), GaussianRational::from(2)],
            vec![GaussianRational::from(1), GaussianRational::from_ints(0, 2), GaussianRational::from(4)],
            vec![GaussianRational::from_ints(3, 1), h, GaussianRational::zero()],
        ]);
        let s = ScaledIntMatrix::from_matrix(&m).unwrap();
        for rows in [[0, 1], [0, 2], [1, 2]] {
            for cols in [[0, 1], [0, 2], [1, 2]] {
                let exact = m.select(&rows, &cols).det().unwrap().is_zero();
                assert_eq!(s.minor_is_zero(&rows, &cols), Some(exact), "{rows:?} {cols:?}");
            }
        }
        // rows 0 and 1 are proportional
        assert_eq!(s.minor_is_zero(&[0, 1], &[0, 1]), Some(true));
        assert_eq!(s.minor_is_zero(&[0, 1, 2], &[0, 1, 2]), Some(true));
        assert_eq!(s.minor_is_zero(&[1], &[0]), Some(false));
    }
}
