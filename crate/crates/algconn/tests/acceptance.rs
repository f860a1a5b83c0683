//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Set ALGCONN_G6_CORPUS to a graph6 file to add the external
//! write-after-parse check to criterion 11.

use std::time::{Duration, Instant};

use algconn::driver::{default_jobs, scan_parallel};
use algconn_core::clique::{clique_number, max_clique};
use algconn_core::graph::{complete_multipartite, path, turan, TailedCliqueSpec};
use algconn_core::graph6::{parse_graph6, write_graph6};
use algconn_core::scan::{
    code_space, erdos_stone_trend, graphs_in_range, verify_supersaturation, ExtremalCertificate, MaxScan, MinScan, SandwichScan,
    ScanConfig, Source,
};
use algconn_core::spectra::{algebraic_connectivity, complement_alpha_check, laplacian_eigenvalues};
use algconn_core::transforms::{fiedler_sign_report, verify_rewrite_grid};
use algconn_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-8;

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "Turán α formula, 2 <= r < n <= 30", budget: Some(Duration::from_secs(10)), run: turan_formula },
        Criterion { id: 2, name: "α(T_{7,3}) = α(K_{3,3,1}) = 4", budget: None, run: turan_and_k331_tie },
        Criterion { id: 3, name: "maximum α over K_{r+1}-free graphs, n <= 7", budget: Some(Duration::from_secs(300)), run: max_exhaustive },
        Criterion { id: 4, name: "minimum α at clique number r, n <= 7", budget: Some(Duration::from_secs(300)), run: min_exhaustive },
        Criterion { id: 5, name: "clique bounds from α, n <= 7", budget: None, run: sandwich_exhaustive },
        Criterion { id: 6, name: "tailed-clique rewrite monotonicity", budget: Some(Duration::from_secs(30)), run: rewrite_monotonicity },
        Criterion { id: 7, name: "Fiedler sign structure on tailed cliques", budget: None, run: fiedler_structure },
        Criterion { id: 8, name: "oracle equivalence", budget: None, run: oracle_equivalence },
        Criterion { id: 9, name: "α(T_{n,r})/n trend, r <= 6, n <= 10000", budget: None, run: trend },
        Criterion { id: 10, name: "supersaturation at desk scale", budget: Some(Duration::from_secs(120)), run: supersaturation },
        Criterion { id: 11, name: "graph6 round trip", budget: None, run: graph6_round_trip },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(budget)) = (&outcome, c.budget) {
            if elapsed > budget {
                outcome = Err(format!("{detail}; took {elapsed:.1?}, budget {budget:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {detail} [{elapsed:.2?}]", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {}: {detail} [{elapsed:.2?}]", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn alpha(g: &Graph) -> Result<f64, String> {
    algebraic_connectivity(g).map_err(|e| e.to_string())
}

fn turan_formula() -> Outcome {
    let mut checked = 0;
    for n in 3..=30 {
        for r in 2..n {
            let g = turan(n, r).map_err(|e| e.to_string())?;
            let got = alpha(&g)?;
            let want = (n - n.div_ceil(r)) as f64;
            if (got - want).abs() > TOL {
                return fail(format!("T({n},{r}): α = {got}, expected {want}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} Turán graphs"))
}

fn turan_and_k331_tie() -> Outcome {
    let t = alpha(&turan(7, 3).map_err(|e| e.to_string())?)?;
    let k = alpha(&complete_multipartite(&[3, 3, 1]).map_err(|e| e.to_string())?)?;
    if (t - 4.0).abs() > TOL || (k - 4.0).abs() > TOL {
        return fail(format!("α(T73) = {t}, α(K331) = {k}"));
    }
    Ok(format!("{t:.10} and {k:.10}"))
}

fn summarize(certs: &[ExtremalCertificate]) -> Outcome {
    let scanned: u64 = certs.iter().map(|c| c.graphs_scanned).sum();
    for c in certs {
        if !c.passed() {
            let first = c.counterexamples.first().map(|x| format!(" first {} ({})", x.graph, x.reason)).unwrap_or_default();
            return fail(format!(
                "(n, r) = ({}, {}): attained {}, characterization {}, {} counterexamples{first}",
                c.n, c.r, c.attained, c.characterization_ok, c.counterexample_count
            ));
        }
    }
    Ok(format!("{} (n, r) pairs, {scanned} graph checks", certs.len()))
}

fn max_exhaustive() -> Outcome {
    let cfg = ScanConfig::default();
    let mut certs = Vec::new();
    for n in 3..=7 {
        let acc = scan_parallel(n, &cfg, default_jobs(), || (2..n).map(|r| MaxScan::new(n, r, &cfg)).collect::<Result<Vec<_>, _>>())
            .map_err(|e| e.to_string())?;
        for scan in acc {
            certs.push(scan.finish(Source::Enumeration).map_err(|e| e.to_string())?);
        }
    }
    summarize(&certs)
}

fn min_exhaustive() -> Outcome {
    let cfg = ScanConfig::default();
    let mut certs = Vec::new();
    for n in 2..=7 {
        let acc = scan_parallel(n, &cfg, default_jobs(), || (2..=n).map(|r| MinScan::new(n, r, &cfg)).collect::<Result<Vec<_>, _>>())
            .map_err(|e| e.to_string())?;
        for scan in acc {
            certs.push(scan.finish(Source::Enumeration).map_err(|e| e.to_string())?);
        }
    }
    summarize(&certs)
}

fn sandwich_exhaustive() -> Outcome {
    let cfg = ScanConfig::default();
    let (mut checked, mut equalities) = (0, 0);
    for n in 3..=7 {
        let summary = scan_parallel(n, &cfg, default_jobs(), || Ok(SandwichScan::new(n, false)))
            .and_then(|s| s.finish())
            .map_err(|e| e.to_string())?;
        if !summary.passed() {
            let first = summary.violations.first().map(|x| format!(" first {} ({})", x.graph, x.reason)).unwrap_or_default();
            return fail(format!(
                "n = {n}: {} violations, {} equalities (expected {}){first}",
                summary.violation_count, summary.equality_count, summary.expected_equality_count
            ));
        }
        checked += summary.checked;
        equalities += summary.equality_count;
    }
    Ok(format!("{checked} graphs, {equalities} lower-bound equalities, all balanced Turán"))
}

fn rewrite_monotonicity() -> Outcome {
    let mut comparisons = 0;
    for r in 3..=5 {
        let grid = verify_rewrite_grid(r, 10).map_err(|e| e.to_string())?;
        if let Some(v) = grid.violations.first() {
            return fail(format!("r = {r}: {} violations, first {v:?}", grid.violations.len()));
        }
        comparisons += grid.comparisons;
    }
    Ok(format!("{comparisons} comparisons"))
}

fn fiedler_structure() -> Outcome {
    let (mut checked, mut skipped) = (0, Vec::new());
    for r in 3..=5 {
        for total in 2..=10usize {
            for k in total.div_ceil(2)..total {
                let l = total - k;
                let spec = TailedCliqueSpec::new(r, k, l).map_err(|e| e.to_string())?;
                let report = fiedler_sign_report(spec).map_err(|e| e.to_string())?;
                if report.skipped {
                    skipped.push(format!("({r},{k},{l}) multiplicity {}", report.multiplicity));
                } else if !report.holds() {
                    return fail(format!("({r},{k},{l}): {report:?}"));
                }
                checked += 1;
            }
        }
    }
    let degenerate = if skipped.is_empty() { "none".to_owned() } else { skipped.join(", ") };
    Ok(format!("{checked} instances, degenerate: {degenerate}"))
}

/// Largest clique by checking every vertex subset.
fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).filter(|v| s >> v & 1 == 1).all(|v| g.neighbors(v) & s == s & !(1 << v)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn oracle_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 2..=50 {
        let got = laplacian_eigenvalues(&path(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let mut want: Vec<f64> = (0..n)
            .map(|j| 4.0 * (j as f64 * std::f64::consts::PI / (2 * n) as f64).sin().powi(2))
            .collect();
        want.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in got.iter().zip(&want) {
            worst = worst.max((a - b).abs());
        }
    }
    if worst > 1e-8 {
        return fail(format!("path spectrum error {worst:e}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut identity_worst: f64 = 0.0;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let p: f64 = rng.gen();
        let mut g = Graph::empty(n).map_err(|e| e.to_string())?;
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).map_err(|e| e.to_string())?;
                }
            }
        }
        let (a, via) = complement_alpha_check(&g).map_err(|e| e.to_string())?;
        identity_worst = identity_worst.max((a - via).abs());
        if (a - via).abs() > TOL {
            return fail(format!("complement identity fails on {g}: {a} vs {via}"));
        }
    }

    let mut cliques = 0u64;
    for n in 1..=6 {
        for g in graphs_in_range(n, 0..code_space(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())? {
            let want = brute_clique_number(&g);
            let w = max_clique(&g);
            if clique_number(&g) != want || w.omega != want || brute_clique_number(&induced(&g, &w.vertices)?) != want {
                return fail(format!("clique number of {g}: solver {}, brute force {want}", w.omega));
            }
            cliques += 1;
        }
    }
    Ok(format!(
        "path error {worst:.1e}, complement error {identity_worst:.1e} on 1000 graphs, {cliques} clique checks"
    ))
}

fn induced(g: &Graph, vertices: &[usize]) -> Result<Graph, String> {
    if vertices.is_empty() {
        return Graph::empty(1).map_err(|e| e.to_string());
    }
    g.induced(vertices).map_err(|e| e.to_string())
}

fn trend() -> Outcome {
    let mut rows = 0;
    for r in 2..=6 {
        let table = erdos_stone_trend(r, 10_000).map_err(|e| e.to_string())?;
        if !table.passed() {
            let row = table.rows.iter().find(|row| !row.within || (row.n % r == 0 && !row.exact));
            return fail(format!("r = {r}: {row:?}"));
        }
        if table.rows.iter().any(|row| row.n % r != 0 && row.exact) {
            return fail(format!("r = {r}: ratio hits the limit off a multiple of r"));
        }
        rows += table.rows.len();
    }
    Ok(format!("{rows} rows"))
}

fn supersaturation() -> Outcome {
    let cfg = ScanConfig::with_guard(8).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for (n, r, k) in [(7, 3, 1), (6, 2, 2), (8, 2, 2)] {
        let report = verify_supersaturation(n, r, k, 0.05, &cfg).map_err(|e| e.to_string())?;
        if !report.passed() {
            return fail(format!("({n},{r},{k}): {} violations", report.violation_count));
        }
        parts.push(format!(
            "({n},{r},{k}) {} qualifying of {} with δ >= {}",
            report.qualifying,
            report.graphs_scanned,
            report.min_degree_floor.unwrap_or(0)
        ));
    }
    Ok(parts.join("; "))
}

fn graph6_round_trip() -> Outcome {
    let mut count = 0u64;
    for n in 1..=6 {
        for g in graphs_in_range(n, 0..code_space(n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())? {
            if parse_graph6(&write_graph6(&g)).as_ref() != Ok(&g) {
                return fail(format!("parse(write(g)) differs for {g:?}"));
            }
            count += 1;
        }
    }
    let corpus = match std::env::var_os("ALGCONN_G6_CORPUS") {
        None => "external corpus skipped (ALGCONN_G6_CORPUS unset)".to_owned(),
        Some(path) => {
            let text = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.to_string_lossy()))?;
            let mut lines = 0;
            for (i, line) in text.split(|&b| b == b'\n').enumerate() {
                let line = line.strip_suffix(b"\r").unwrap_or(line);
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line).map_err(|e| format!("line {}: {e}", i + 1))?;
                if write_graph6(&g) != line {
                    return fail(format!("line {}: write(parse(s)) differs", i + 1));
                }
                lines += 1;
            }
            format!("{lines} corpus records")
        }
    };
    Ok(format!("{count} labeled graphs; {corpus}"))
}
