//! Text and JSON renderings of a [`RankReport`].

use std::fmt::Write as _;

use bicomplex_rank::RankReport;
use serde::Serialize;

#[derive(Serialize)]
struct LevelJson<'a> {
    rows: &'a [usize],
    cols: &'a [usize],
}

/// Stable JSON shape; field order is the output key order.
#[derive(Serialize)]
struct ReportJson<'a> {
    chain_rank: usize,
    row_rank: usize,
    col_rank: usize,
    idem_row_rank: usize,
    idem_col_rank: usize,
    #[serde(rename = "rank_1A")]
    rank_1a: usize,
    #[serde(rename = "rank_2A")]
    rank_2a: usize,
    det: Option<String>,
    det_singular: Option<bool>,
    matrix_class: &'static str,
    certificate: Option<Vec<LevelJson<'a>>>,
}

pub fn to_json(r: &RankReport) -> String {
    let doc = ReportJson {
        chain_rank: r.chain_rank,
        row_rank: r.row_rank,
        col_rank: r.col_rank,
        idem_row_rank: r.idem_row_rank,
        idem_col_rank: r.idem_col_rank,
        rank_1a: r.rank_1a,
        rank_2a: r.rank_2a,
        det: r.det.as_ref().map(ToString::to_string),
        det_singular: r.det_singular,
        matrix_class: r.matrix_class.as_str(),
        certificate: r.certificate.as_ref().map(|c| {
            c.levels.iter().map(|l| LevelJson { rows: l.rows.as_slice(), cols: l.cols.as_slice() }).collect()
        }),
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub fn to_text(r: &RankReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "chain rank:             {}", r.chain_rank);
    let _ = writeln!(s, "row rank:               {}", r.row_rank);
    let _ = writeln!(s, "column rank:            {}", r.col_rank);
    let _ = writeln!(s, "idempotent row rank:    {}", r.idem_row_rank);
    let _ = writeln!(s, "idempotent column rank: {}", r.idem_col_rank);
    let _ = writeln!(s, "rank 1_A:               {}", r.rank_1a);
    let _ = writeln!(s, "rank 2_A:               {}", r.rank_2a);
    if let (Some(det), Some(singular)) = (&r.det, r.det_singular) {
        let _ = writeln!(s, "det:                    {det} ({})", if singular { "singular" } else { "non-singular" });
    }
    let _ = writeln!(s, "class:                  {}", r.matrix_class);
    match &r.certificate {
        Some(c) => {
            let _ = writeln!(s, "certificate:");
            for l in &c.levels {
                let _ = writeln!(s, "  order {}: rows {:?} cols {:?}", l.rows.len(), l.rows.as_slice(), l.cols.as_slice());
            }
        }
        None => {
            let _ = writeln!(s, "certificate:            none");
        }
    }
    s
}
