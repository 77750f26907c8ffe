//! Subspaces of `ℂ₁ⁿ`, their lifts `Ve₁`, `Ve₂` into `ℂ₂ⁿ`, and the
//! idempotent row/column spaces of a bicomplex matrix.
//!
//! `ℂ₂ⁿ` is treated as a vector space over ℂ₁ through the identification
//! `v ↦ (1v, 2v) ∈ ℂ₁^{2n}`; spans, dimensions and membership are all
//! computed on that flattening.

use num_traits::Zero;

use crate::bicomplex::Bicomplex;
use crate::cmatrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::matrix::BicomplexMatrix;
use crate::scalar::GaussianRational;

/// Scalars acting on every [`BicomplexSpan`].
pub const SCALAR_FIELD: &str = "C1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Idempotent {
    E1,
    E2,
}

impl Idempotent {
    pub fn unit(self) -> Bicomplex {
        match self {
            Idempotent::E1 => Bicomplex::e1(),
            Idempotent::E2 => Bicomplex::e2(),
        }
    }
}

/// A subspace of `ℂ₁ⁿ`, stored as its reduced row-echelon basis so that
/// equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexSubspace {
    ambient_dim: usize,
    basis: Vec<Vec<GaussianRational>>,
}

impl ComplexSubspace {
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<GaussianRational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        if vectors.is_empty() {
            return Ok(ComplexSubspace::zero(ambient_dim));
        }
        let m = ComplexMatrix::from_rows(vectors);
        Ok(ComplexSubspace { ambient_dim, basis: m.echelon().0 })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        ComplexSubspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        ComplexSubspace { ambient_dim, basis: ComplexMatrix::identity(ambient_dim).row_vecs() }
    }

    pub fn row_space(m: &ComplexMatrix) -> Self {
        ComplexSubspace { ambient_dim: m.cols(), basis: m.echelon().0 }
    }

    pub fn col_space(m: &ComplexMatrix) -> Self {
        ComplexSubspace::row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GaussianRational>] {
        &self.basis
    }
}

/// ℂ₁-span of a list of bicomplex vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicomplexSpan {
    ambient_dim: usize,
    generators: Vec<Vec<Bicomplex>>,
}

impl BicomplexSpan {
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Bicomplex>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: g.len() });
        }
        Ok(BicomplexSpan { ambient_dim, generators })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<Bicomplex>] {
        &self.generators
    }

    pub fn scalar_field(&self) -> &'static str {
        SCALAR_FIELD
    }

    /// Generators as rows of a `k × 2n` complex matrix.
    pub fn flattened(&self) -> ComplexMatrix {
        let rows: Vec<_> = self.generators.iter().map(|g| flatten(g)).collect();
        if rows.is_empty() {
            return ComplexMatrix::zeros(0, 2 * self.ambient_dim);
        }
        ComplexMatrix::from_rows(rows)
    }

    /// Dimension over ℂ₁.
    pub fn dim(&self) -> usize {
        self.flattened().rank()
    }

    pub fn generators_independent(&self) -> bool {
        self.dim() == self.generators.len()
    }

    /// Concatenation of generator lists (the sum of the two spans).
    pub fn sum(&self, other: &BicomplexSpan) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let generators = self.generators.iter().chain(&other.generators).cloned().collect();
        Ok(BicomplexSpan { ambient_dim: self.ambient_dim, generators })
    }
}

/// `v ↦ (1v₁, …, 1vₙ, 2v₁, …, 2vₙ)`.
pub fn flatten(v: &[Bicomplex]) -> Vec<GaussianRational> {
    let (p1, p2): (Vec<_>, Vec<_>) = v.iter().map(Bicomplex::idempotent_parts).unzip();
    p1.into_iter().chain(p2).collect()
}

/// `Ve₁` or `Ve₂`: each basis vector of `V` multiplied entrywise by the unit.
pub fn lift(v: &ComplexSubspace, which: Idempotent) -> BicomplexSpan {
    let unit = which.unit();
    let generators = v
        .basis()
        .iter()
        .map(|b| b.iter().map(|x| &Bicomplex::from_complex(x.clone()) * &unit).collect())
        .collect();
    BicomplexSpan { ambient_dim: v.ambient_dim(), generators }
}

/// `(row space of 1_A)e₁ + (row space of 2_A)e₂`.
pub fn idem_row_space_basis(a: &BicomplexMatrix) -> BicomplexSpan {
    let (m1, m2) = a.idempotent_split();
    lift(&ComplexSubspace::row_space(&m1), Idempotent::E1)
        .sum(&lift(&ComplexSubspace::row_space(&m2), Idempotent::E2))
        .expect("same ambient dimension")
}

/// `(column space of 1_A)e₁ + (column space of 2_A)e₂`.
pub fn idem_col_space_basis(a: &BicomplexMatrix) -> BicomplexSpan {
    let (m1, m2) = a.idempotent_split();
    lift(&ComplexSubspace::col_space(&m1), Idempotent::E1)
        .sum(&lift(&ComplexSubspace::col_space(&m2), Idempotent::E2))
        .expect("same ambient dimension")
}

/// Coefficients `α ∈ ℂ₁^k` with `Σ αᵢ·genᵢ = v`, or `None` when `v` is not in
/// the span. Free coefficients are set to zero.
pub fn membership(v: &[Bicomplex], span: &BicomplexSpan) -> Result<Option<Vec<GaussianRational>>> {
    if v.len() != span.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: span.ambient_dim(), found: v.len() });
    }
    let k = span.generators().len();
    let target = flatten(v);
    if k == 0 {
        return Ok(target.iter().all(Zero::is_zero).then(Vec::new));
    }
    // columns are the flattened generators, last column is the target
    let flat = span.flattened();
    let rows = (0..target.len())
        .map(|r| (0..k).map(|g| flat.get(g, r).clone()).chain(std::iter::once(target[r].clone())).collect())
        .collect();
    let (echelon, pivots) = ComplexMatrix::from_rows(rows).echelon();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![GaussianRational::zero(); k];
    for (row, &p) in echelon.iter().zip(&pivots) {
        coeffs[p] = row[k].clone();
    }
    Ok(Some(coeffs))
}

/// `Σ αᵢ·genᵢ`.
pub fn combine(span: &BicomplexSpan, coeffs: &[GaussianRational]) -> Result<Vec<Bicomplex>> {
    if coeffs.len() != span.generators().len() {
        return Err(Error::DimensionMismatch { expected: span.generators().len(), found: coeffs.len() });
    }
    let mut acc = vec![Bicomplex::zero(); span.ambient_dim()];
    for (g, a) in span.generators().iter().zip(coeffs) {
        for (x, y) in acc.iter_mut().zip(g) {
            *x = &*x + &y.scale(a);
        }
    }
    Ok(acc)
}

fn same_ambient(v1: &ComplexSubspace, v2: &ComplexSubspace) -> Result<()> {
    if v1.ambient_dim() != v2.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: v1.ambient_dim(), found: v2.ambient_dim() });
    }
    Ok(())
}

/// Whether `V1e₁ ∩ V2e₂ = {0}`, decided by independence of the concatenated
/// lifted bases.
pub fn intersection_is_trivial(v1: &ComplexSubspace, v2: &ComplexSubspace) -> Result<bool> {
    same_ambient(v1, v2)?;
    let sum = lift(v1, Idempotent::E1).sum(&lift(v2, Idempotent::E2))?;
    Ok(sum.generators_independent())
}

/// `dim(V1e₁ + V2e₂)`, computed as the rank of the combined lifted bases.
pub fn direct_sum_dim(v1: &ComplexSubspace, v2: &ComplexSubspace) -> Result<usize> {
    same_ambient(v1, v2)?;
    Ok(lift(v1, Idempotent::E1).sum(&lift(v2, Idempotent::E2))?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }
    fn n(v: i64) -> Bicomplex {
        Bicomplex::from(v)
    }

    fn example_4x3() -> BicomplexMatrix {
        let (e1, e2) = (Bicomplex::e1(), Bicomplex::e2());
        BicomplexMatrix::from_rows(vec![
            vec![n(1), n(0), n(1)],
            vec![e2.clone(), e1.clone(), n(0)],
            vec![n(0), e2, e1.clone()],
            vec![n(0), n(0), e1],
        ])
    }

    #[test]
    fn lift_examples() {
        let l = lift(&ComplexSubspace::full(2), Idempotent::E1);
        assert_eq!(l.generators(), &[vec![Bicomplex::e1(), n(0)], vec![n(0), Bicomplex::e1()]]);
        assert_eq!(l.dim(), 2);

        assert!(lift(&ComplexSubspace::zero(3), Idempotent::E2).generators().is_empty());

        let v = ComplexSubspace::span(2, vec![vec![g(1, 0), g(0, 1)]]).unwrap();
        let l = lift(&v, Idempotent::E2);
        let i_e2 = &Bicomplex::i1() * &Bicomplex::e2();
        assert_eq!(l.generators(), &[vec![Bicomplex::e2(), i_e2]]);
        assert_eq!(l.dim(), 1);
        assert_eq!(l.scalar_field(), "C1");
    }

    #[test]
    fn idempotent_space_bases() {
        assert!(idem_row_space_basis(&BicomplexMatrix::zeros(2, 3)).generators().is_empty());
        let swap = BicomplexMatrix::from_rows(vec![
            vec![Bicomplex::e1(), Bicomplex::e2()],
            vec![Bicomplex::e2(), Bicomplex::e1()],
        ]);
        let s = idem_row_space_basis(&swap);
        assert_eq!((s.generators().len(), s.dim()), (4, 4));
        let s = idem_row_space_basis(&example_4x3());
        assert_eq!(s.generators().len(), 6);
        assert!(s.generators_independent());
        assert_eq!(idem_col_space_basis(&example_4x3()).generators().len(), 6);
    }

    #[test]
    fn membership_examples() {
        let a = example_4x3();
        let span = idem_row_space_basis(&a);
        let zero = vec![n(0); 3];
        assert_eq!(membership(&zero, &span).unwrap(), Some(vec![g(0, 0); 6]));
        for i in 0..a.rows() {
            let coeffs = membership(a.row(i), &span).unwrap().expect("row is a member");
            assert_eq!(combine(&span, &coeffs).unwrap(), a.row(i));
        }

        let e1_only = BicomplexSpan::new(2, vec![vec![Bicomplex::e1(), n(0)]]).unwrap();
        assert_eq!(membership(&[n(1), n(0)], &e1_only).unwrap(), None);
        assert_eq!(
            membership(&[n(1)], &e1_only),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        let empty = BicomplexSpan::new(2, vec![]).unwrap();
        assert_eq!(membership(&[n(0), n(0)], &empty).unwrap(), Some(vec![]));
        assert_eq!(membership(&[n(1), n(0)], &empty).unwrap(), None);
    }

    #[test]
    fn intersection_and_sum() {
        let line = ComplexSubspace::span(2, vec![vec![g(1, 0), g(0, 0)]]).unwrap();
        assert!(intersection_is_trivial(&line, &line).unwrap());
        let full = ComplexSubspace::full(2);
        assert!(intersection_is_trivial(&full, &full).unwrap());
        assert!(intersection_is_trivial(&ComplexSubspace::zero(2), &line).unwrap());

        let v1 = ComplexSubspace::span(4, vec![vec![g(1, 0), g(2, 0), g(0, 0), g(0, 1)], vec![g(0, 0), g(1, 1), g(0, 0), g(0, 0)]]).unwrap();
        let v2 = ComplexSubspace::span(4, vec![
            vec![g(1, 0), g(0, 0), g(0, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(3, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(0, 0), g(1, 0)],
        ])
        .unwrap();
        assert_eq!((v1.dim(), v2.dim()), (2, 3));
        assert_eq!(direct_sum_dim(&v1, &v2).unwrap(), 5);
        assert_eq!(direct_sum_dim(&ComplexSubspace::zero(3), &ComplexSubspace::zero(3)).unwrap(), 0);
        assert_eq!(direct_sum_dim(&ComplexSubspace::full(5), &ComplexSubspace::full(5)).unwrap(), 10);
        assert!(matches!(direct_sum_dim(&full, &ComplexSubspace::full(3)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn a_lift_into_the_wrong_ideal_is_caught() {
        // the same vector lifted by e₁ twice is dependent
        let v = ComplexSubspace::full(2);
        let bad = lift(&v, Idempotent::E1).sum(&lift(&v, Idempotent::E1)).unwrap();
        assert!(!bad.generators_independent());
    }

    #[test]
    fn canonical_basis() {
        let a = ComplexSubspace::span(2, vec![vec![g(2, 0), g(4, 0)], vec![g(1, 0), g(2, 0)]]).unwrap();
        let b = ComplexSubspace::span(2, vec![vec![g(-3, 0), g(-6, 0)]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }
}
