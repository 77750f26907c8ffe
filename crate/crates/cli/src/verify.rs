//! Built-in suite of worked examples with known ranks, determinants and
//! submatrix facts. Cases are plain data so a harness can run a modified
//! table through [`run_suite`].

use std::io::{self, Write};

use bicomplex_rank::{rank, BicomplexMatrix, MatrixClass};

use crate::parse::parse_matrix;

#[derive(Debug, Clone, PartialEq)]
pub enum Expectation {
    ChainRank(usize),
    RowRank(usize),
    ColRank(usize),
    Rank1A(usize),
    Rank2A(usize),
    /// `det(A) ∈ O₂`.
    DetSingular(bool),
    /// Determinant in canonical literal form.
    Det(&'static str),
    Class(MatrixClass),
    /// Matrix text whose component matrices are submatrices of `1_A` and
    /// `2_A`, while the matrix itself is not a submatrix of `A`.
    SplitSubmatricesOnly(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub id: &'static str,
    pub matrix: &'static str,
    pub expect: Vec<Expectation>,
}

pub fn builtin_cases() -> Vec<Case> {
    use Expectation::*;
    vec![
        Case {
            id: "swap-e1e2-chain-zero",
            matrix: "e1, e2\ne2, e1",
            expect: vec![ChainRank(0), DetSingular(false), Det("i1i2"), Class(MatrixClass::E1E2Matrix)],
        },
        Case {
            id: "four-by-three-ranks-differ",
            matrix: "1, 0, 1\ne2, e1, 0\n0, e2, e1\n0, 0, e1",
            expect: vec![ChainRank(1), RowRank(4), ColRank(3)],
        },
        Case {
            id: "full-component-ranks-chain-one",
            matrix: "e1, e2, 0\ne2, e1, 6",
            expect: vec![Rank1A(2), Rank2A(2), ChainRank(1)],
        },
        Case {
            id: "rows-and-columns-independent",
            matrix: "2, e1, 1\n0, 0, e1",
            expect: vec![RowRank(2), ColRank(3), ChainRank(1)],
        },
        Case {
            id: "independent-but-det-singular",
            matrix: "1, 2\ne1, 0",
            expect: vec![RowRank(2), ColRank(2), DetSingular(true), Det("-1-i1i2")],
        },
        Case {
            id: "row-rank-without-component-independence",
            matrix: "0, 0, e1\n0, 0, e2",
            expect: vec![RowRank(2), Rank1A(1), Rank2A(1)],
        },
        Case {
            id: "col-rank-without-component-independence",
            matrix: "e1, 0\n0, e2",
            expect: vec![ColRank(2), Rank1A(1), Rank2A(1)],
        },
        Case {
            id: "submatrix-converse-fails",
            matrix: "1, e1, 0\ne1, e2, e1\n0, 0, 1",
            expect: vec![SplitSubmatricesOnly("1, e1\n0, e2")],
        },
    ]
}

/// Checks one case; `Err` lists every mismatched expectation.
pub fn check_case(case: &Case) -> Result<(), Vec<String>> {
    let a = parse_matrix(case.matrix).map_err(|e| vec![format!("matrix does not parse: {e}")])?.matrix;
    let failures: Vec<String> = case.expect.iter().filter_map(|e| check_expectation(&a, e).err()).collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

fn check_expectation(a: &BicomplexMatrix, e: &Expectation) -> Result<(), String> {
    fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: &T) -> Result<(), String> {
        if &got == want {
            Ok(())
        } else {
            Err(format!("{what}: expected {want:?}, got {got:?}"))
        }
    }
    match e {
        Expectation::ChainRank(r) => {
            let got = rank::chain_rank(a).map_err(|e| e.to_string())?.0;
            eq("chain rank", got, r)
        }
        Expectation::RowRank(r) => eq("row rank", rank::row_rank(a), r),
        Expectation::ColRank(r) => eq("column rank", rank::col_rank(a), r),
        Expectation::Rank1A(r) => eq("rank 1_A", rank::component_ranks(a).0, r),
        Expectation::Rank2A(r) => eq("rank 2_A", rank::component_ranks(a).1, r),
        Expectation::DetSingular(s) => eq("det in O2", a.is_singular_matrix().map_err(|e| e.to_string())?, s),
        Expectation::Det(text) => eq("det", a.det_idempotent().map_err(|e| e.to_string())?.to_string(), &text.to_string()),
        Expectation::Class(c) => eq("class", a.classify(), c),
        Expectation::SplitSubmatricesOnly(text) => {
            let b = parse_matrix(text).map_err(|e| e.to_string())?.matrix;
            let (a1, a2) = a.idempotent_split();
            let (b1, b2) = b.idempotent_split();
            eq("1_B is a submatrix of 1_A", a1.contains_submatrix(&b1), &true)?;
            eq("2_B is a submatrix of 2_A", a2.contains_submatrix(&b2), &true)?;
            eq("B is a submatrix of A", a.contains_submatrix(&b), &false)
        }
    }
}

/// Runs `cases`, printing one line per case. Returns the ids that failed.
pub fn run_suite(cases: &[Case], out: &mut dyn Write) -> io::Result<Vec<&'static str>> {
    let mut failed = Vec::new();
    for case in cases {
        match check_case(case) {
            Ok(()) => writeln!(out, "PASS  {}", case.id)?,
            Err(why) => {
                writeln!(out, "FAIL  {}: {}", case.id, why.join("; "))?;
                failed.push(case.id);
            }
        }
    }
    writeln!(out, "{} of {} cases passed", cases.len() - failed.len(), cases.len())?;
    Ok(failed)
}

/// `verify [--list]`.
pub fn cmd_verify(cases: &[Case], list: bool, out: &mut dyn Write) -> io::Result<i32> {
    if list {
        for case in cases {
            writeln!(out, "{}", case.id)?;
        }
        return Ok(crate::EXIT_OK);
    }
    let failed = run_suite(cases, out)?;
    if failed.is_empty() {
        Ok(crate::EXIT_OK)
    } else {
        writeln!(out, "failing cases: {}", failed.join(", "))?;
        Ok(crate::EXIT_FAILURE)
    }
}
