//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs as a plain binary (`harness = false`) so the lines
//! always reach the console.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bcrank::verify::{builtin_cases, run_suite};
use bicomplex_rank::oracle::{self, GenParams, Sampler};
use bicomplex_rank::rank::{self, chain_rank};
use bicomplex_rank::spaces::{self, ComplexSubspace, Idempotent};
use bicomplex_rank::{BicomplexMatrix, GaussianRational};

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn sampler(seed: u64, density: f64, stream: u64) -> Sampler {
    Sampler::new(&GenParams::new(3, density, seed).unwrap(), stream).unwrap()
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn worked_examples() -> Outcome {
    let mut sink = Vec::new();
    let failed = run_suite(&builtin_cases(), &mut sink).map_err(|e| e.to_string())?;
    check(failed.is_empty(), || String::from_utf8_lossy(&sink).into_owned())?;
    Ok(format!("{} cases", builtin_cases().len()))
}

fn determinant_identity() -> Outcome {
    let mut count = 0;
    for (k, density) in [0.0, 0.3, 0.7, 1.0].into_iter().enumerate() {
        let mut s = sampler(100 + k as u64, density, 0);
        for i in 0..125 {
            let n = 1 + i % 4;
            let a = s.matrix(n, n);
            let d = a.det_idempotent().map_err(|e| e.to_string())?;
            let l = a.det_laplace().map_err(|e| e.to_string())?;
            let r = oracle::det_reference(&a).map_err(|e| e.to_string())?;
            check(d == l && d == r, || format!("det mismatch on\n{a}: {d} / {l} / {r}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} matrices"))
}

fn random_shapes(seed: u64, count: usize) -> impl Iterator<Item = BicomplexMatrix> {
    const DENSITIES: [f64; 6] = [0.0, 0.3, 0.5, 0.7, 0.9, 1.0];
    (0..count).map(move |i| {
        let mut s = sampler(seed, DENSITIES[i % DENSITIES.len()], i as u64);
        let (r, c) = (s.range(1, 4), s.range(1, 4));
        s.matrix(r, c)
    })
}

fn rank_inequalities() -> Outcome {
    let mut count = 0;
    for a in random_shapes(200, 1000) {
        let (r, _) = chain_rank(&a).map_err(|e| e.to_string())?;
        let (r1, r2) = rank::component_ranks(&a);
        let (rr, rc) = (rank::row_rank(&a), rank::col_rank(&a));
        let (ir, ic) = (rank::idem_row_rank(&a), rank::idem_col_rank(&a));
        let ok = r <= r1.min(r2) && rr <= ir && rc <= ic && ir == r1 + r2 && ic == r1 + r2 && rr >= r1.max(r2);
        check(ok, || format!("violated on\n{a}: rho={r} r1={r1} r2={r2} rr={rr} rc={rc} ir={ir} ic={ic}"))?;
        count += 1;
    }
    Ok(format!("{count} matrices"))
}

fn zero_rank_characterization() -> Outcome {
    let (mut zero, mut positive) = (0, 0);
    for a in random_shapes(300, 1000) {
        let (r, _) = chain_rank(&a).map_err(|e| e.to_string())?;
        let all_singular = a.entries().iter().all(|x| x.is_singular());
        check((r == 0) == all_singular, || format!("rho={r}, all singular={all_singular} on\n{a}"))?;
        if r == 0 {
            zero += 1;
        } else {
            positive += 1;
        }
    }
    Ok(format!("{} matrices ({zero} with rank 0, {positive} positive)", zero + positive))
}

fn small_orders_full_rank() -> Outcome {
    let mut rejections = 0;
    for n in 1..=3 {
        let mut s = sampler(400 + n as u64, 0.0, 0);
        for _ in 0..500 {
            let (a, rej) = s.invertible_entry_matrix(n, oracle::DEFAULT_MAX_DRAWS).map_err(|e| e.to_string())?;
            rejections += rej;
            check(a.entries().iter().all(|x| x.is_invertible()), || format!("singular entry in\n{a}"))?;
            check(!a.is_singular_matrix().unwrap(), || format!("singular determinant in\n{a}"))?;
            let (r, _) = chain_rank(&a).map_err(|e| e.to_string())?;
            check(r == n, || format!("chain rank {r} < {n} on\n{a}"))?;
        }
    }
    Ok(format!("500 per order 1..=3, {rejections} rejected draws"))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for a in random_shapes(600, 300) {
        let (r, cert) = chain_rank(&a).map_err(|e| e.to_string())?;
        let reference = oracle::chain_rank_reference(&a).map_err(|e| e.to_string())?;
        check(r == reference, || format!("chain {r} vs reference {reference} on\n{a}"))?;
        check(rank::row_rank(&a) == oracle::row_rank_reference(&a), || format!("row rank differs on\n{a}"))?;
        check(rank::col_rank(&a) == oracle::col_rank_reference(&a), || format!("column rank differs on\n{a}"))?;
        if let Some(cert) = &cert {
            oracle::validate_certificate(&a, cert).map_err(|why| format!("{why} on\n{a}"))?;
        }
        count += 1;
    }
    Ok(format!("{count} matrices"))
}

fn random_subspace(s: &mut Sampler, n: usize) -> ComplexSubspace {
    let k = s.range(0, n);
    let vectors: Vec<Vec<GaussianRational>> = (0..k)
        // density > 0 zeroes some parts, so generator sets are not always independent
        .map(|_| (0..n).map(|_| s.bicomplex().part1()).collect())
        .collect();
    ComplexSubspace::span(n, vectors).unwrap()
}

fn spaces_suite() -> Outcome {
    let mut pairs = 0;
    for t in 0..300 {
        let mut s = sampler(700, 0.4, t);
        let n = s.range(1, 6);
        let (v1, v2) = (random_subspace(&mut s, n), random_subspace(&mut s, n));
        let (l1, l2) = (spaces::lift(&v1, Idempotent::E1), spaces::lift(&v2, Idempotent::E2));
        check(l1.dim() == v1.dim() && l2.dim() == v2.dim(), || format!("lift changed dimension (n={n})"))?;
        check(spaces::intersection_is_trivial(&v1, &v2).map_err(|e| e.to_string())?, || "non-trivial intersection".into())?;
        let sum = spaces::direct_sum_dim(&v1, &v2).map_err(|e| e.to_string())?;
        check(sum == v1.dim() + v2.dim(), || format!("direct sum {sum} != {} + {}", v1.dim(), v2.dim()))?;
        pairs += 1;
    }
    let mut matrices = 0;
    for a in random_shapes(800, 300) {
        let rows = spaces::idem_row_space_basis(&a);
        let cols = spaces::idem_col_space_basis(&a);
        for i in 0..a.rows() {
            let c = spaces::membership(a.row(i), &rows).map_err(|e| e.to_string())?;
            check(c.is_some(), || format!("row {i} outside its idempotent space in\n{a}"))?;
        }
        for j in 0..a.cols() {
            let c = spaces::membership(&a.col(j), &cols).map_err(|e| e.to_string())?;
            check(c.is_some(), || format!("column {j} outside its idempotent space in\n{a}"))?;
        }
        matrices += 1;
    }
    Ok(format!("{pairs} subspace pairs, {matrices} matrices"))
}

fn explore_reproducibility() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bcrank"))
            .args(["explore", "--n", "4", "--trials", "200", "--seed", "1"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    check(a.status.success() && b.status.success(), || format!("exit codes {:?} / {:?}", a.status, b.status))?;
    check(a.stdout == b.stdout, || "outputs differ".into())?;
    let text = String::from_utf8_lossy(&a.stdout);
    check(text.lines().count() == 201, || format!("{} lines", text.lines().count()))?;
    let summary = text.lines().last().unwrap_or_default().to_owned();
    Ok(format!("{} bytes identical; {summary}", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "worked examples", limit: Some(Duration::from_secs(5)), run: worked_examples },
        Criterion { id: 2, title: "determinant identity", limit: Some(Duration::from_secs(30)), run: determinant_identity },
        Criterion { id: 3, title: "rank inequalities", limit: Some(Duration::from_secs(60)), run: rank_inequalities },
        Criterion { id: 4, title: "zero-rank characterization", limit: None, run: zero_rank_characterization },
        Criterion { id: 5, title: "full chain rank for orders 1-3", limit: Some(Duration::from_secs(60)), run: small_orders_full_rank },
        Criterion { id: 6, title: "oracle equivalence", limit: None, run: oracle_equivalence },
        Criterion { id: 7, title: "spaces suite", limit: None, run: spaces_suite },
        Criterion { id: 8, title: "explore reproducibility", limit: Some(Duration::from_secs(120)), run: explore_reproducibility },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  [{}] {}: {detail} ({elapsed:.2?})", c.id, c.title),
            Err(why) => {
                failures += 1;
                println!("FAIL  [{}] {}: {why} ({elapsed:.2?})", c.id, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
