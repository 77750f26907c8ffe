//! The four rank notions of a bicomplex matrix.
//!
//! * chain rank `ρ(A)`: the largest `r` such that `A` contains a nested
//!   series `B₁ ≼ B₂ ≼ … ≼ B_r` of non-singular square submatrices, `B_k` of
//!   order `k`. Zero when no entry is invertible.
//! * row rank `ρ_r(A)` / column rank `ρ_c(A)`: dimension over ℂ₁ of the span
//!   of the rows (columns). The ℂ₁-linear map `ξ ↦ (1ξ, 2ξ)` identifies
//!   `ℂ₂^m` with `ℂ₁^{2m}`, so these are ordinary ranks of `[1_A | 2_A]` and
//!   of `1_A` stacked over `2_A`.
//! * idempotent row/column rank: `rank(1_A) + rank(2_A)` in both cases.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;
use crate::cmatrix::{ComplexMatrix, ScaledIntMatrix};
use crate::error::{Error, Result};
use crate::matrix::{BicomplexMatrix, IndexSet, MatrixClass};

/// Default bound on `max(rows, cols)` for chain-rank enumeration.
pub const DEFAULT_MAX_DIM: usize = 10;

/// Hard limit imposed by the bitmask representation of index sets.
const MASK_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLevel {
    pub rows: IndexSet,
    pub cols: IndexSet,
}

/// Nested index sets witnessing a chain `B₁ ≼ … ≼ B_r`; level `k` (0-based
/// position `k-1`) selects a `k×k` submatrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChainCertificate {
    pub levels: Vec<ChainLevel>,
}

impl ChainCertificate {
    pub fn order(&self) -> usize {
        self.levels.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub chain_rank: usize,
    pub row_rank: usize,
    pub col_rank: usize,
    pub idem_row_rank: usize,
    pub idem_col_rank: usize,
    pub rank_1a: usize,
    pub rank_2a: usize,
    /// Present for square matrices only.
    pub det: Option<Bicomplex>,
    pub det_singular: Option<bool>,
    pub matrix_class: MatrixClass,
    pub certificate: Option<ChainCertificate>,
}

fn check_guard(a: &BicomplexMatrix, max_dim: usize) -> Result<()> {
    let dim = a.rows().max(a.cols());
    let limit = max_dim.min(MASK_BITS);
    if dim > limit {
        return Err(Error::GuardExceeded { dim, limit });
    }
    Ok(())
}

/// Chain rank under the default dimension guard.
pub fn chain_rank(a: &BicomplexMatrix) -> Result<(usize, Option<ChainCertificate>)> {
    chain_rank_with_guard(a, DEFAULT_MAX_DIM)
}

/// Level-wise search: level 1 holds the invertible entries, level `k+1`
/// every non-singular `(k+1)×(k+1)` selection that extends some level-`k`
/// selection by one row and one column. Chainability is hereditary, so the
/// search stops at the first empty level.
pub fn chain_rank_with_guard(a: &BicomplexMatrix, max_dim: usize) -> Result<(usize, Option<ChainCertificate>)> {
    check_guard(a, max_dim)?;
    let (c1, c2) = a.idempotent_split();
    let (s1, s2) = (ScaledIntMatrix::from_matrix(&c1), ScaledIntMatrix::from_matrix(&c2));
    let minor_is_zero = |m: &ComplexMatrix, s: &Option<ScaledIntMatrix>, r: &[usize], c: &[usize]| {
        s.as_ref()
            .and_then(|s| s.minor_is_zero(r, c))
            .unwrap_or_else(|| m.select(r, c).det().expect("square").is_zero())
    };
    let nonsingular = |rows: u64, cols: u64| -> bool {
        let r = IndexSet::from_mask(rows);
        let c = IndexSet::from_mask(cols);
        !minor_is_zero(&c1, &s1, r.as_slice(), c.as_slice()) && !minor_is_zero(&c2, &s2, r.as_slice(), c.as_slice())
    };

    let mut levels: Vec<BTreeSet<(u64, u64)>> = Vec::new();
    let first: BTreeSet<(u64, u64)> = (0..a.rows())
        .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j).is_invertible())
        .map(|(i, j)| (1u64 << i, 1u64 << j))
        .collect();
    if first.is_empty() {
        return Ok((0, None));
    }
    levels.push(first);

    let mut seen: HashMap<(u64, u64), bool> = HashMap::new();
    loop {
        let prev = levels.last().expect("nonempty");
        let mut next = BTreeSet::new();
        for &(rm, cm) in prev {
            for i in (0..a.rows()).filter(|i| rm >> i & 1 == 0) {
                for j in (0..a.cols()).filter(|j| cm >> j & 1 == 0) {
                    let key = (rm | 1 << i, cm | 1 << j);
                    let ok = *seen.entry(key).or_insert_with(|| nonsingular(key.0, key.1));
                    if ok {
                        next.insert(key);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    let cert = certificate_from_levels(&levels);
    Ok((levels.len(), Some(cert)))
}

/// Picks the lexicographically smallest `(rows, cols)` at the top level, then
/// at each lower level the smallest chainable pair nested inside the one above.
fn certificate_from_levels(levels: &[BTreeSet<(u64, u64)>]) -> ChainCertificate {
    let as_level = |&(r, c): &(u64, u64)| ChainLevel { rows: IndexSet::from_mask(r), cols: IndexSet::from_mask(c) };
    let lex_key = |l: &ChainLevel| (l.rows.clone(), l.cols.clone());
    let mut out = Vec::with_capacity(levels.len());
    let mut current = levels.last().expect("nonempty").iter().map(as_level).min_by_key(lex_key).expect("nonempty");
    for level in levels.iter().rev().skip(1) {
        let (rm, cm) = (current.rows.mask(), current.cols.mask());
        let below = level
            .iter()
            .filter(|&&(r, c)| r & !rm == 0 && c & !cm == 0)
            .map(as_level)
            .min_by_key(lex_key)
            .expect("chainable pair has a chainable predecessor");
        out.push(current);
        current = below;
    }
    out.push(current);
    out.reverse();
    ChainCertificate { levels: out }
}

pub fn complex_rank(m: &ComplexMatrix) -> usize {
    m.rank()
}

/// Row flattening `[1_A | 2_A]`.
pub fn row_flattening(a: &BicomplexMatrix) -> ComplexMatrix {
    let (m1, m2) = a.idempotent_split();
    m1.hconcat(&m2).expect("same row count")
}

/// Column flattening: `1_A` stacked over `2_A`.
pub fn col_flattening(a: &BicomplexMatrix) -> ComplexMatrix {
    let (m1, m2) = a.idempotent_split();
    m1.vconcat(&m2).expect("same column count")
}

pub fn row_rank(a: &BicomplexMatrix) -> usize {
    row_flattening(a).rank()
}

pub fn col_rank(a: &BicomplexMatrix) -> usize {
    col_flattening(a).rank()
}

/// `(rank 1_A, rank 2_A)`.
pub fn component_ranks(a: &BicomplexMatrix) -> (usize, usize) {
    let (m1, m2) = a.idempotent_split();
    (m1.rank(), m2.rank())
}

pub fn idem_row_rank(a: &BicomplexMatrix) -> usize {
    let (r1, r2) = component_ranks(a);
    r1 + r2
}

/// Column ranks of the components, computed on the transposes so the two
/// idempotent ranks go through independent eliminations.
pub fn idem_col_rank(a: &BicomplexMatrix) -> usize {
    let (m1, m2) = a.idempotent_split();
    m1.transpose().rank() + m2.transpose().rank()
}

pub fn rank_report(a: &BicomplexMatrix, max_dim: usize) -> Result<RankReport> {
    let (chain, certificate) = chain_rank_with_guard(a, max_dim)?;
    let (rank_1a, rank_2a) = component_ranks(a);
    let det = if a.is_square() { Some(a.det_idempotent()?) } else { None };
    let det_singular = det.as_ref().map(Bicomplex::is_singular);
    Ok(RankReport {
        chain_rank: chain,
        row_rank: row_rank(a),
        col_rank: col_rank(a),
        idem_row_rank: idem_row_rank(a),
        idem_col_rank: idem_col_rank(a),
        rank_1a,
        rank_2a,
        det,
        det_singular,
        matrix_class: a.classify(),
        certificate,
    })
}
