//! Brute-force reference computations and seeded instance generators.
//!
//! Nothing here shares an algorithmic path with the engine: chain rank is
//! decided by unmemoized top-down recursion with cofactor determinants, row
//! rank by greedy span-membership tests, and determinants by the full
//! permutation sum in bicomplex arithmetic.
//!
//! Random streams are ChaCha8 keyed by the 64-bit seed, with the ChaCha
//! stream id selecting an independent sub-stream (trial index, worker, ...).

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::matrix::{combinations, BicomplexMatrix};
use crate::rank::ChainCertificate;
use crate::scalar::GaussianRational;
use crate::spaces::{membership, BicomplexSpan};

/// Largest `max(rows, cols)` accepted by [`chain_rank_reference`].
pub const REFERENCE_MAX_DIM: usize = 5;
/// Largest order accepted by [`det_reference`].
pub const DET_REFERENCE_MAX_ORDER: usize = 4;
/// Default number of draws before [`random_invertible_entry_matrix`] gives up.
pub const DEFAULT_MAX_DRAWS: usize = 10_000;

fn nonsingular_by_cofactors(a: &BicomplexMatrix, rows: &[usize], cols: &[usize]) -> bool {
    let sub = a.select(rows, cols);
    sub.det_laplace().expect("square, small").is_invertible()
}

fn has_chain(a: &BicomplexMatrix, rows: &[usize], cols: &[usize]) -> bool {
    if !nonsingular_by_cofactors(a, rows, cols) {
        return false;
    }
    if rows.len() == 1 {
        return true;
    }
    (0..rows.len()).any(|i| {
        (0..cols.len()).any(|j| {
            let r: Vec<usize> = rows.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
            let c: Vec<usize> = cols.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect();
            has_chain(a, &r, &c)
        })
    })
}

/// Chain rank by exhaustive search from the largest order down.
pub fn chain_rank_reference(a: &BicomplexMatrix) -> Result<usize> {
    let dim = a.rows().max(a.cols());
    if dim > REFERENCE_MAX_DIM {
        return Err(Error::GuardExceeded { dim, limit: REFERENCE_MAX_DIM });
    }
    for k in (1..=a.rows().min(a.cols())).rev() {
        let row_sets = combinations(a.rows(), k);
        let col_sets = combinations(a.cols(), k);
        if row_sets.iter().any(|r| col_sets.iter().any(|c| has_chain(a, r, c))) {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Size of a maximal ℂ₁-independent subset of the rows, grown greedily.
pub fn row_rank_reference(a: &BicomplexMatrix) -> usize {
    let mut chosen: Vec<Vec<Bicomplex>> = Vec::new();
    for i in 0..a.rows() {
        let span = BicomplexSpan::new(a.cols(), chosen.clone()).expect("row length");
        if membership(a.row(i), &span).expect("row length").is_none() {
            chosen.push(a.row(i).to_vec());
        }
    }
    chosen.len()
}

/// Column rank as the reference row rank of the transpose.
pub fn col_rank_reference(a: &BicomplexMatrix) -> usize {
    row_rank_reference(&a.transpose())
}

/// `Σ_σ sgn(σ) Π ξ_{i,σ(i)}` over all permutations, in bicomplex arithmetic.
pub fn det_reference(a: &BicomplexMatrix) -> Result<Bicomplex> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n > DET_REFERENCE_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n, limit: DET_REFERENCE_MAX_ORDER });
    }
    let mut total = Bicomplex::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let term = p.iter().enumerate().fold(Bicomplex::one(), |acc, (i, &j)| &acc * a.get(i, j));
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    Ok(total)
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Checks a chain certificate against `a`: level `k` selects `k` rows and
/// `k` columns inside `a`, each level nests in the next, and every selected
/// submatrix has an invertible (cofactor) determinant.
pub fn validate_certificate(a: &BicomplexMatrix, cert: &ChainCertificate) -> std::result::Result<(), String> {
    if cert.levels.is_empty() {
        return Err("empty certificate".into());
    }
    for (k, level) in cert.levels.iter().enumerate() {
        let (r, c) = (level.rows.as_slice(), level.cols.as_slice());
        if r.len() != k + 1 || c.len() != k + 1 {
            return Err(format!("level {} has shape {}x{}", k + 1, r.len(), c.len()));
        }
        if r.iter().any(|&i| i >= a.rows()) || c.iter().any(|&j| j >= a.cols()) {
            return Err(format!("level {} indexes outside the matrix", k + 1));
        }
        if k > 0 {
            let below = &cert.levels[k - 1];
            let nested = below.rows.as_slice().iter().all(|i| r.contains(i))
                && below.cols.as_slice().iter().all(|j| c.contains(j));
            if !nested {
                return Err(format!("level {k} is not contained in level {}", k + 1));
            }
        }
        if !nonsingular_by_cofactors(a, r, c) {
            return Err(format!("level {} submatrix is singular", k + 1));
        }
    }
    Ok(())
}

/// Parameters for random instance generation.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Bound on `|re|`, `|im|` of the Gaussian-integer idempotent parts.
    pub coeff_bound: i64,
    /// Probability that an entry is forced into the singular set.
    pub singular_density: f64,
    pub seed: u64,
}

impl GenParams {
    pub fn new(coeff_bound: i64, singular_density: f64, seed: u64) -> Result<Self> {
        let p = GenParams { coeff_bound, singular_density, seed };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.coeff_bound < 1 {
            return Err(Error::InvalidParameter(format!("coeff_bound must be >= 1, got {}", self.coeff_bound)));
        }
        if !(0.0..=1.0).contains(&self.singular_density) {
            return Err(Error::InvalidParameter(format!(
                "singular_density must lie in [0, 1], got {}",
                self.singular_density
            )));
        }
        Ok(())
    }
}

/// A deterministic random stream: `(seed, stream)` fully determines output.
pub struct Sampler {
    rng: ChaCha8Rng,
    params: GenParams,
}

impl Sampler {
    pub fn new(params: &GenParams, stream: u64) -> Result<Self> {
        params.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(stream);
        Ok(Sampler { rng, params: params.clone() })
    }

    pub fn params(&self) -> &GenParams {
        &self.params
    }

    fn gaussian_integer(&mut self) -> GaussianRational {
        let b = self.params.coeff_bound;
        GaussianRational::from_ints(self.rng.gen_range(-b..=b), self.rng.gen_range(-b..=b))
    }

    fn nonzero_gaussian_integer(&mut self) -> GaussianRational {
        loop {
            let z = self.gaussian_integer();
            if !z.is_zero() {
                return z;
            }
        }
    }

    /// With probability `singular_density` one idempotent part (fair coin)
    /// is zero and the other is any Gaussian integer within the bound;
    /// otherwise both parts are nonzero.
    pub fn bicomplex(&mut self) -> Bicomplex {
        if self.rng.gen_bool(self.params.singular_density) {
            let other = self.gaussian_integer();
            if self.rng.gen_bool(0.5) {
                Bicomplex::from_idempotent(GaussianRational::zero(), other)
            } else {
                Bicomplex::from_idempotent(other, GaussianRational::zero())
            }
        } else {
            self.invertible_bicomplex()
        }
    }

    pub fn invertible_bicomplex(&mut self) -> Bicomplex {
        let c1 = self.nonzero_gaussian_integer();
        let c2 = self.nonzero_gaussian_integer();
        Bicomplex::from_idempotent(c1, c2)
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> BicomplexMatrix {
        let entries = (0..rows * cols).map(|_| self.bicomplex()).collect();
        BicomplexMatrix::new(rows, cols, entries).expect("nonempty shape")
    }

    /// All entries invertible and `det ∉ O₂`, by rejection sampling.
    /// Returns the matrix and the number of rejected draws.
    pub fn invertible_entry_matrix(&mut self, n: usize, max_draws: usize) -> Result<(BicomplexMatrix, usize)> {
        for rejected in 0..max_draws {
            let entries = (0..n * n).map(|_| self.invertible_bicomplex()).collect();
            let m = BicomplexMatrix::new(n, n, entries)?;
            if !m.is_singular_matrix()? {
                return Ok((m, rejected));
            }
        }
        Err(Error::RejectionLimitExceeded(max_draws))
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}

pub fn random_bicomplex(params: &GenParams, stream: u64) -> Result<Bicomplex> {
    Ok(Sampler::new(params, stream)?.bicomplex())
}

pub fn random_matrix(rows: usize, cols: usize, params: &GenParams) -> Result<BicomplexMatrix> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidParameter("matrix dimensions must be >= 1".into()));
    }
    Ok(Sampler::new(params, 0)?.matrix(rows, cols))
}

pub fn random_invertible_entry_matrix(n: usize, params: &GenParams) -> Result<(BicomplexMatrix, usize)> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be >= 1".into()));
    }
    Sampler::new(params, 0)?.invertible_entry_matrix(n, DEFAULT_MAX_DRAWS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MatrixClass;

    fn e1() -> Bicomplex {
        Bicomplex::e1()
    }
    fn e2() -> Bicomplex {
        Bicomplex::e2()
    }
    fn n(v: i64) -> Bicomplex {
        Bicomplex::from(v)
    }

    #[test]
    fn chain_reference_examples() {
        let swap = BicomplexMatrix::from_rows(vec![vec![e1(), e2()], vec![e2(), e1()]]);
        assert_eq!(chain_rank_reference(&swap).unwrap(), 0);
        assert_eq!(chain_rank_reference(&BicomplexMatrix::identity(3)).unwrap(), 3);
        let m = BicomplexMatrix::from_rows(vec![vec![e1(), e2(), n(0)], vec![e2(), e1(), n(6)]]);
        assert_eq!(chain_rank_reference(&m).unwrap(), 1);
        assert!(matches!(chain_rank_reference(&BicomplexMatrix::identity(6)), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn row_reference_examples() {
        let a = BicomplexMatrix::from_rows(vec![vec![n(2), e1(), n(1)], vec![n(0), n(0), e1()]]);
        assert_eq!(row_rank_reference(&a), 2);
        assert_eq!(col_rank_reference(&a), 3);
        assert_eq!(row_rank_reference(&BicomplexMatrix::zeros(3, 3)), 0);
        let ex = BicomplexMatrix::from_rows(vec![
            vec![n(1), n(0), n(1)],
            vec![e2(), e1(), n(0)],
            vec![n(0), e2(), e1()],
            vec![n(0), n(0), e1()],
        ]);
        assert_eq!(row_rank_reference(&ex), 4);
    }

    #[test]
    fn det_reference_examples() {
        assert_eq!(det_reference(&BicomplexMatrix::diag(vec![e1(), e2()])).unwrap(), n(0));
        let ex = BicomplexMatrix::from_rows(vec![vec![n(1), n(2)], vec![e1(), n(0)]]);
        assert_eq!(det_reference(&ex).unwrap(), e1().scale(&GaussianRational::from(-2)));
        assert_eq!(det_reference(&BicomplexMatrix::identity(4)).unwrap(), n(1));
        assert!(matches!(det_reference(&BicomplexMatrix::identity(5)), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn certificate_validator_rejects_bad_chains() {
        use crate::matrix::IndexSet;
        use crate::rank::ChainLevel;
        let id = BicomplexMatrix::identity(2);
        let lvl = |r: Vec<usize>, c: Vec<usize>| ChainLevel { rows: IndexSet::new(r).unwrap(), cols: IndexSet::new(c).unwrap() };
        let good = ChainCertificate { levels: vec![lvl(vec![0], vec![0]), lvl(vec![0, 1], vec![0, 1])] };
        assert!(validate_certificate(&id, &good).is_ok());
        let singular = ChainCertificate { levels: vec![lvl(vec![0], vec![1])] };
        assert!(validate_certificate(&id, &singular).is_err());
        let skipped = ChainCertificate { levels: vec![lvl(vec![0, 1], vec![0, 1])] };
        assert!(validate_certificate(&id, &skipped).is_err());
        let m = BicomplexMatrix::identity(3);
        let unnested = ChainCertificate { levels: vec![lvl(vec![2], vec![2]), lvl(vec![0, 1], vec![0, 1])] };
        assert!(validate_certificate(&m, &unnested).is_err());
    }

    #[test]
    fn generator_contract() {
        let all_singular = GenParams::new(3, 1.0, 5).unwrap();
        let m = random_matrix(4, 4, &all_singular).unwrap();
        assert_ne!(m.classify(), MatrixClass::General);

        let none_singular = GenParams::new(3, 0.0, 5).unwrap();
        let m = random_matrix(4, 4, &none_singular).unwrap();
        assert!(m.entries().iter().all(Bicomplex::is_invertible));

        let p = GenParams::new(3, 0.5, 42).unwrap();
        assert_eq!(random_matrix(2, 2, &p).unwrap(), random_matrix(2, 2, &p).unwrap());
        assert_ne!(Sampler::new(&p, 0).unwrap().matrix(3, 3), Sampler::new(&p, 1).unwrap().matrix(3, 3));

        assert!(GenParams::new(0, 0.5, 1).is_err());
        assert!(GenParams::new(1, 1.5, 1).is_err());
    }

    #[test]
    fn seed_42_golden() {
        // Frozen output of the ChaCha8 stream for seed 42, stream 0.
        let p = GenParams::new(3, 0.5, 42).unwrap();
        let m = random_matrix(2, 2, &p).unwrap();
        let text: Vec<String> = m.entries().iter().map(ToString::to_string).collect();
        assert_eq!(text, GOLDEN_SEED_42);
    }

    const GOLDEN_SEED_42: [&str; 4] = ["1-1/2i1-3/2i2+2i1i2", "1+i1+i2-i1i2", "2+5/2i1-1/2i2+i1i2", "1/2-i1-i2-1/2i1i2"];

    #[test]
    fn invertible_entry_generator() {
        let p = GenParams::new(2, 0.9, 11).unwrap();
        let mut s = Sampler::new(&p, 0).unwrap();
        for _ in 0..50 {
            let (m, _) = s.invertible_entry_matrix(3, DEFAULT_MAX_DRAWS).unwrap();
            assert!(m.entries().iter().all(Bicomplex::is_invertible));
            assert!(!m.is_singular_matrix().unwrap());
        }
        assert_eq!(s.invertible_entry_matrix(2, 0), Err(Error::RejectionLimitExceeded(0)));
    }
}
