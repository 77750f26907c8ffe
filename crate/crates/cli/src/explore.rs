//! Random search over non-singular matrices with all entries invertible,
//! recording the chain rank of each.
//!
//! For orders up to 3 such a matrix always has full chain rank, so a shortfall
//! there is a theorem violation (and most likely a bug). For larger orders the
//! question is open; a shortfall is flagged `CANDIDATE` and the matrix is
//! written out for manual audit.
//!
//! Trial `t` draws from the ChaCha stream `(seed, t)`, so every record is a
//! pure function of `(n, seed, bound, t)` regardless of how trials are
//! distributed over workers.

use std::io::Write;
use std::sync::mpsc;

use bicomplex_rank::oracle::{GenParams, Sampler, DEFAULT_MAX_DRAWS};
use bicomplex_rank::rank;
use serde::Serialize;

use crate::CliError;

/// Orders at which full chain rank is a theorem.
pub const PROVEN_MAX_ORDER: usize = 3;

#[derive(Debug, Clone)]
pub struct ExploreConfig {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub bound: i64,
    pub jobs: usize,
    pub max_dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Full,
    Candidate,
    TheoremViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRecord {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExploreRecord {
    pub seed: u64,
    pub n: usize,
    pub trial: u64,
    pub status: Status,
    pub chain_rank: usize,
    pub det: String,
    pub rejections: usize,
    /// Longest chain found, present only when it falls short of `n`.
    pub certificate: Option<Vec<LevelRecord>>,
    /// Present only when the chain falls short of `n`.
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExploreSummary {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub bound: i64,
    pub full: u64,
    pub candidates: u64,
    pub theorem_violations: u64,
}

pub fn run_trial(cfg: &ExploreConfig, trial: u64) -> Result<ExploreRecord, CliError> {
    let params = GenParams::new(cfg.bound, 0.0, cfg.seed)?;
    let mut sampler = Sampler::new(&params, trial)?;
    let (a, rejections) = sampler.invertible_entry_matrix(cfg.n, DEFAULT_MAX_DRAWS)?;
    let (chain, cert) = rank::chain_rank_with_guard(&a, cfg.max_dim)?;
    let status = if chain == cfg.n {
        Status::Full
    } else if cfg.n <= PROVEN_MAX_ORDER {
        Status::TheoremViolation
    } else {
        Status::Candidate
    };
    let short = status != Status::Full;
    Ok(ExploreRecord {
        seed: cfg.seed,
        n: cfg.n,
        trial,
        status,
        chain_rank: chain,
        det: a.det_idempotent()?.to_string(),
        rejections,
        certificate: cert.filter(|_| short).map(|c| {
            c.levels
                .iter()
                .map(|l| LevelRecord { rows: l.rows.as_slice().to_vec(), cols: l.cols.as_slice().to_vec() })
                .collect()
        }),
        matrix: short.then(|| (0..a.rows()).map(|i| a.row(i).iter().map(ToString::to_string).collect()).collect()),
    })
}

fn validate(cfg: &ExploreConfig) -> Result<(), CliError> {
    if cfg.n > cfg.max_dim {
        return Err(bicomplex_rank::Error::GuardExceeded { dim: cfg.n, limit: cfg.max_dim }.into());
    }
    if cfg.n < 2 || cfg.trials < 1 {
        return Err(bicomplex_rank::Error::InvalidParameter("explore needs n >= 2 and trials >= 1".into()).into());
    }
    GenParams::new(cfg.bound, 0.0, cfg.seed)?;
    Ok(())
}

/// Streams one JSON line per trial followed by a summary line. With one job
/// records appear in trial order; with more, in completion order.
pub fn cmd_explore(cfg: &ExploreConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    validate(cfg)?;
    let mut summary = ExploreSummary { n: cfg.n, trials: cfg.trials, seed: cfg.seed, bound: cfg.bound, ..Default::default() };
    let mut emit = |rec: ExploreRecord, out: &mut dyn Write| -> Result<(), CliError> {
        match rec.status {
            Status::Full => summary.full += 1,
            Status::Candidate => summary.candidates += 1,
            Status::TheoremViolation => summary.theorem_violations += 1,
        }
        writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
        Ok(())
    };

    if cfg.jobs <= 1 {
        for t in 0..cfg.trials {
            emit(run_trial(cfg, t)?, out)?;
        }
    } else {
        let (tx, rx) = mpsc::channel();
        std::thread::scope(|scope| -> Result<(), CliError> {
            for w in 0..cfg.jobs as u64 {
                let tx = tx.clone();
                scope.spawn(move || {
                    for t in (w..cfg.trials).step_by(cfg.jobs) {
                        if tx.send(run_trial(cfg, t)).is_err() {
                            return;
                        }
                    }
                });
            }
            drop(tx);
            for rec in rx {
                emit(rec?, out)?;
            }
            Ok(())
        })?;
    }

    #[derive(Serialize)]
    struct Wrapped<'a> {
        summary: &'a ExploreSummary,
    }
    writeln!(out, "{}", serde_json::to_string(&Wrapped { summary: &summary }).expect("summary serializes"))?;
    Ok(if summary.theorem_violations > 0 { crate::EXIT_THEOREM_VIOLATION } else { crate::EXIT_OK })
}
