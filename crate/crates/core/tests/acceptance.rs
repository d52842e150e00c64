//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p grover-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grover_core::families::{census, enumerate_connected, enumerate_odd_unicyclic, make_family, FamilySpec};
use grover_core::graph::{classify, Classification, Graph};
use grover_core::linalg::{charpoly_exact, RationalMatrix, RationalScalar};
use grover_core::periodicity::{
    chebyshev_eigen_check, edge_weight, find_period, k_l_recurrence_check, kt_decomposition_check,
    main_theorem_integralities, odd_period_query, rho_matching_identity_check, PeriodConfig, TreeBranches, Verdict,
};
use grover_core::walk::{build_grover_operator, build_transition_matrix, spectral_map_check};
use rand::{Rng, SeedableRng};

const TABLE_BUDGET: Duration = Duration::from_secs(5);
const ODD_CYCLE_BUDGET: Duration = Duration::from_secs(30);
const CENSUS_BUDGET: Duration = Duration::from_secs(600);
const IDENTITY_BUDGET: Duration = Duration::from_secs(120);
const SPECTRAL_MAP_TOL: f64 = 1e-8;
const CHEBYSHEV_TOL: f64 = 1e-10;
const RANDOM_MATRICES: usize = 200;
const RANDOM_SEED: u64 = 0x5eed_2024;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn family(spec: FamilySpec) -> Graph {
    make_family(spec).expect("valid family")
}

fn period_of(g: &Graph, config: &PeriodConfig) -> Result<Option<u64>, String> {
    find_period(g, config).map(|r| r.period()).map_err(|e| e.to_string())
}

fn within(budget: Duration, start: Instant) -> bool {
    start.elapsed() <= budget
}

fn period_table() -> Outcome {
    let start = Instant::now();
    let config = PeriodConfig::default();
    let mut cases = vec![(FamilySpec::Path(2), 2), (FamilySpec::Cycle(3), 3), (FamilySpec::Cycle(5), 5)];
    for m in 1..=4 {
        for n in m..=4 {
            // K_{1,1} is P_2 and has period 2
            let expect = if (m, n) == (1, 1) { 2 } else { 4 };
            cases.push((FamilySpec::CompleteBipartite(m, n), expect));
        }
    }
    let mut bad = Vec::new();
    for (spec, expect) in &cases {
        let got = period_of(&family(*spec), &config);
        if got != Ok(Some(*expect)) {
            bad.push(format!("{spec}: expected {expect}, got {got:?}"));
        }
    }
    let timed = within(TABLE_BUDGET, start);
    outcome(bad.is_empty() && timed, format!("{} graphs, mismatches {bad:?}, in budget {timed}", cases.len()))
}

fn odd_cycles() -> Outcome {
    let start = Instant::now();
    let config = PeriodConfig::default();
    let bad: Vec<String> = [3, 5, 7, 9, 11]
        .into_iter()
        .filter_map(|k| {
            let got = period_of(&family(FamilySpec::Cycle(k)), &config);
            (got != Ok(Some(k as u64))).then(|| format!("C_{k}: {got:?}"))
        })
        .collect();
    let timed = within(ODD_CYCLE_BUDGET, start);
    outcome(bad.is_empty() && timed, format!("mismatches {bad:?}, in budget {timed}"))
}

fn main_theorem_census() -> Outcome {
    let start = Instant::now();
    let config = PeriodConfig::default();
    let records = match census(9, 9, &config) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut odd = Vec::new();
    let mut bad = Vec::new();
    for rec in &records {
        let is_cycle = rec.graph.degrees().iter().all(|&d| d == 2);
        match &rec.period {
            Err(e) => bad.push(format!("{:?}: {e}", rec.graph.edges())),
            Ok(report) => match report.verdict {
                Verdict::Periodic { period } if period % 2 == 1 => {
                    odd.push(rec.graph.vertex_count());
                    if !is_cycle {
                        bad.push(format!("non-cycle with odd period {period}: {:?}", rec.graph.edges()));
                    }
                }
                _ if is_cycle => bad.push(format!("cycle without odd period: {:?}", report.verdict)),
                _ => {}
            },
        }
    }
    let timed = within(CENSUS_BUDGET, start);
    let ok = bad.is_empty() && odd == [3, 5, 7, 9] && timed;
    outcome(
        ok,
        format!("{} classes, odd-periodic sizes {odd:?}, problems {bad:?}, {:.1}s", records.len(), start.elapsed().as_secs_f64()),
    )
}

fn two_tail_periods() -> Outcome {
    let config = PeriodConfig::default();
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for k in [3, 5] {
        for r in [2, 3, 4] {
            // the paths P_r of the construction have r - 1 edges; the family
            // with r-edge tails is checked too
            for (tail, divisor) in [(r - 1, 4 * (r - 1)), (r, 4 * r)] {
                let g = family(FamilySpec::TwoTail(k, tail));
                match (odd_period_query(&g, &config), period_of(&g, &config)) {
                    (Ok(false), Ok(p)) => {
                        if let Some(p) = p {
                            seen.push(format!("({k},{tail}):{p}"));
                            if p % divisor as u64 != 0 {
                                bad.push(format!("twotail:{k},{tail} period {p} not divisible by {divisor}"));
                            }
                        }
                    }
                    other => bad.push(format!("twotail:{k},{tail}: {other:?}")),
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("periods {seen:?}, problems {bad:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(RANDOM_SEED);
    let mut mismatches = 0;
    for _ in 0..RANDOM_MATRICES {
        let a = RationalMatrix::from_fn(4, 4, |_, _| RationalScalar::new(rng.gen_range(-20..=20), rng.gen_range(1..=12)));
        if charpoly_exact(&a).unwrap() != common::charpoly_by_interpolation(&a) {
            mismatches += 1;
        }
    }
    let mut graphs = 0;
    let mut identity_failures = 0;
    for n in 2..=7 {
        for g in enumerate_connected(n).unwrap() {
            graphs += 1;
            let cp = charpoly_exact(&build_transition_matrix(&g).matrix).unwrap();
            let total: RationalScalar = g.edges().iter().map(|&e| edge_weight(&g, e)).sum();
            if cp.coeff_from_top(2) != &-total {
                identity_failures += 1;
            }
        }
    }
    outcome(
        mismatches == 0 && identity_failures == 0,
        format!("{RANDOM_MATRICES} matrices ({mismatches} mismatches), {graphs} graphs ({identity_failures} edge-weight failures)"),
    )
}

fn two_tail_grid() -> Vec<(usize, usize, Graph)> {
    let mut out = Vec::new();
    for k in [3, 5] {
        for r in 1..=5 {
            out.push((k, r, family(FamilySpec::TwoTail(k, r))));
        }
    }
    out
}

fn matching_identities() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    let mut bad = Vec::new();
    for g in enumerate_odd_unicyclic(8).unwrap() {
        let Classification::OddUnicycle(d) = classify(&g) else { unreachable!() };
        for t in 0..=(g.vertex_count() - d.girth) / 2 {
            checks += 1;
            if rho_matching_identity_check(&g, &d, t) != Ok(true) {
                bad.push(format!("rho t={t} {:?}", g.edges()));
            }
        }
    }
    for (k, r_tail, g) in two_tail_grid() {
        let depth = TreeBranches::from_graph(&g).unwrap().degree_two_depth(&g);
        for r in 1..=depth {
            for i in 0..=depth {
                checks += 1;
                if k_l_recurrence_check(&g, i, r) != Ok(true) {
                    bad.push(format!("K/L twotail:{k},{r_tail} i={i} r={r}"));
                }
            }
        }
        for t in 0..=g.vertex_count() / 2 {
            checks += 1;
            if kt_decomposition_check(&g, t) != Ok(true) {
                bad.push(format!("Kt twotail:{k},{r_tail} t={t}"));
            }
        }
    }
    let timed = within(IDENTITY_BUDGET, start);
    outcome(bad.is_empty() && timed, format!("{checks} checks, failures {bad:?}, in budget {timed}"))
}

fn integrality_instances() -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for (k, r, g) in two_tail_grid() {
        for inst in main_theorem_integralities(&g).unwrap() {
            count += 1;
            if !inst.holds() {
                bad.push(format!("twotail:{k},{r} i={}: {} {}", inst.i, inst.k_scaled, inst.l_scaled));
            }
        }
    }
    outcome(bad.is_empty() && count > 0, format!("{count} instances, failures {bad:?}"))
}

fn spectral_mapping() -> Outcome {
    let mut graphs = 0;
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            graphs += 1;
            match spectral_map_check(&g, SPECTRAL_MAP_TOL) {
                Ok(r) => {
                    worst = worst.max(r.max_residual);
                    if !r.matched {
                        bad.push(format!("{:?}", g.edges()));
                    }
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
    }
    outcome(bad.is_empty(), format!("{graphs} graphs, max residual {worst:e}, unmatched {bad:?}"))
}

fn chebyshev_construction() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for k in [3, 5, 7] {
        for r in 2..=6 {
            match chebyshev_eigen_check(k, r, CHEBYSHEV_TOL) {
                Ok(rep) => worst = worst.max(rep.max_residual),
                Err(e) => bad.push(format!("({k},{r}): {e}")),
            }
        }
    }
    outcome(bad.is_empty(), format!("max residual {worst:e}, failures {bad:?}"))
}

fn structural_exactness() -> Outcome {
    let corpus = common::corpus();
    let mut bad = 0;
    for g in &corpus {
        let u = build_grover_operator(g).matrix;
        let t = build_transition_matrix(g).matrix;
        let orthogonal = u.mul(&u.transpose()).unwrap().is_identity();
        let stochastic = u.row_sums().iter().chain(t.row_sums().iter()).all(RationalScalar::is_one);
        if !(orthogonal && stochastic) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{} corpus graphs, {bad} failures", corpus.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("period table", period_table),
        ("odd cycles are k-periodic", odd_cycles),
        ("odd-periodic odd-unicyclic graphs n <= 9 are cycles", main_theorem_census),
        ("two-tail graphs are not odd-periodic", two_tail_periods),
        ("characteristic polynomial oracles", oracle_equivalence),
        ("matching-sum identities", matching_identities),
        ("matching-sum integralities", integrality_instances),
        ("spectral mapping n <= 6", spectral_mapping),
        ("Chebyshev eigenvectors", chebyshev_construction),
        ("orthogonality and stochasticity", structural_exactness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = check();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} [{:>2}] {name}: {} ({:.2}s)", i + 1, out.detail, start.elapsed().as_secs_f64());
        failed += usize::from(!out.ok);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
