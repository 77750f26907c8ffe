//! Command implementations behind the `bcrank` binary.
//!
//! Every command writes to a caller-supplied sink and returns its exit code,
//! so the binary and the tests drive exactly the same code.

pub mod explore;
pub mod parse;
pub mod report;
pub mod verify;

use std::io::{self, Write};
use std::path::Path;

use bicomplex_rank::{oracle, rank, BicomplexMatrix};

pub use parse::{parse_matrix, serialize_matrix, MatrixDocument, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_THEOREM_VIOLATION: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{0}")]
    Guard(bicomplex_rank::Error),
    #[error("{0}")]
    Engine(bicomplex_rank::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<bicomplex_rank::Error> for CliError {
    fn from(e: bicomplex_rank::Error) -> Self {
        match e {
            bicomplex_rank::Error::GuardExceeded { .. } => CliError::Guard(e),
            e => CliError::Engine(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Read { .. } => EXIT_PARSE,
            CliError::Guard(_) => EXIT_GUARD,
            CliError::Engine(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

pub fn load_matrix(path: &Path) -> Result<MatrixDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Read { path: path.display().to_string(), source })?;
    let mut doc = parse_matrix(&text)?;
    doc.source = Some(path.to_path_buf());
    Ok(doc)
}

/// `rank <file>`: chain rank and its certificate.
pub fn cmd_rank(a: &BicomplexMatrix, max_dim: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let (r, cert) = rank::chain_rank_with_guard(a, max_dim)?;
    writeln!(out, "chain_rank: {r}")?;
    if let Some(cert) = cert {
        for level in &cert.levels {
            writeln!(out, "  order {}: rows {:?} cols {:?}", level.rows.len(), level.rows.as_slice(), level.cols.as_slice())?;
        }
    }
    Ok(EXIT_OK)
}

/// `report <file> [--json]`.
pub fn cmd_report(a: &BicomplexMatrix, max_dim: usize, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let r = rank::rank_report(a, max_dim)?;
    if json {
        writeln!(out, "{}", report::to_json(&r))?;
    } else {
        write!(out, "{}", report::to_text(&r))?;
    }
    Ok(EXIT_OK)
}

/// `oracle <file>`: engine against brute-force references.
pub fn cmd_oracle(a: &BicomplexMatrix, out: &mut dyn Write) -> Result<i32, CliError> {
    let reference_chain = oracle::chain_rank_reference(a)?;
    let mut disagreements = Vec::new();

    let (chain, cert) = rank::chain_rank(a)?;
    compare(out, &mut disagreements, "chain_rank", chain, reference_chain)?;
    if let Some(cert) = &cert {
        if let Err(why) = oracle::validate_certificate(a, cert) {
            writeln!(out, "FAIL certificate: {why}")?;
            disagreements.push("certificate".to_string());
        }
    }
    compare(out, &mut disagreements, "row_rank", rank::row_rank(a), oracle::row_rank_reference(a))?;
    compare(out, &mut disagreements, "col_rank", rank::col_rank(a), oracle::col_rank_reference(a))?;
    if a.is_square() {
        let engine = a.det_idempotent()?;
        // the permutation sum is capped at order 4; cofactors cover order 5
        let (name, reference) = if a.rows() <= oracle::DET_REFERENCE_MAX_ORDER {
            ("det (permutation sum)", oracle::det_reference(a)?)
        } else {
            ("det (cofactor)", a.det_laplace()?)
        };
        compare(out, &mut disagreements, name, engine, reference)?;
    }
    if disagreements.is_empty() {
        writeln!(out, "all checks agree")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "disagreements: {}", disagreements.join(", "))?;
        Ok(EXIT_FAILURE)
    }
}

fn compare<T: PartialEq + std::fmt::Display>(
    out: &mut dyn Write,
    failures: &mut Vec<String>,
    name: &str,
    engine: T,
    reference: T,
) -> io::Result<()> {
    if engine == reference {
        writeln!(out, "ok   {name}: {engine}")
    } else {
        failures.push(name.to_string());
        writeln!(out, "FAIL {name}: engine {engine}, reference {reference}")
    }
}
