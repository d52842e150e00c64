use grover_core::families::{census, enumerate_connected_with_cap, enumerate_odd_unicyclic_with_cap, make_family, FamilySpec};
use grover_core::graph::{classify, Graph};
use grover_core::periodicity::{
    chebyshev_eigen_check, k_l_recurrence_check, kt_decomposition_check, main_theorem_integralities,
    rho_matching_identity_check, PeriodConfig, PeriodError, TreeBranches,
};
use grover_core::walk::spectral_map_check;
use serde_json::{json, Value};

pub struct Case {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Case {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Case {
        Case {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub struct SuiteResult {
    pub cases: Vec<Case>,
    /// Extra suite-level figures, such as the worst numeric residual.
    pub summary: Value,
    pub budget_exceeded: bool,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    fn plain(cases: Vec<Case>) -> SuiteResult {
        SuiteResult {
            cases,
            summary: json!({}),
            budget_exceeded: false,
        }
    }
}

pub struct SuiteOptions {
    pub config: PeriodConfig,
    pub max_n: Option<usize>,
    pub cap: usize,
    pub ks: Option<Vec<usize>>,
    pub rs: Option<Vec<usize>>,
    pub map_tol: f64,
    pub residual_tol: f64,
}

/// `n:u-v,u-v,...`, enough to rebuild the graph from a failure line.
fn edge_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| format!("{}-{}", e.0, e.1)).collect();
    format!("{}:{}", g.vertex_count(), edges.join(","))
}

fn family(spec: FamilySpec) -> Result<Graph, String> {
    make_family(spec).map_err(|e| e.to_string())
}

pub fn table1(o: &SuiteOptions) -> Result<SuiteResult, String> {
    let mut expected = vec![(FamilySpec::Path(2), 2), (FamilySpec::Cycle(3), 3), (FamilySpec::Cycle(5), 5)];
    for m in 1..=4 {
        for n in m..=4 {
            expected.push((FamilySpec::CompleteBipartite(m, n), if (m, n) == (1, 1) { 2 } else { 4 }));
        }
    }
    let mut cases = Vec::new();
    let mut budget_exceeded = false;
    for (spec, want) in expected {
        let got = grover_core::find_period(&family(spec)?, &o.config);
        budget_exceeded |= matches!(got, Err(PeriodError::BudgetExceeded { .. }));
        let got = got.map(|r| r.period());
        cases.push(Case::new(spec.to_string(), got == Ok(Some(want)), format!("expected {want}, got {got:?}")));
    }
    Ok(SuiteResult {
        budget_exceeded,
        ..SuiteResult::plain(cases)
    })
}

pub fn spectral_map(o: &SuiteOptions) -> Result<SuiteResult, String> {
    let max_n = o.max_n.unwrap_or(6);
    let mut cases = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 2..=max_n {
        let graphs = enumerate_connected_with_cap(n, o.cap).map_err(|e| e.to_string())?;
        for g in graphs {
            let name = edge_label(&g);
            match spectral_map_check(&g, o.map_tol) {
                Ok(r) => {
                    worst = worst.max(r.max_residual);
                    let detail = format!(
                        "predicted {} of {}, unexplained +1 {}, -1 {}, max residual {:e}",
                        r.predicted, r.dimension, r.unexplained_plus_one, r.unexplained_minus_one, r.max_residual
                    );
                    cases.push(Case::new(name, r.matched, detail));
                }
                Err(e) => cases.push(Case::new(name, false, e.to_string())),
            }
        }
    }
    Ok(SuiteResult {
        summary: json!({ "max_residual": worst, "tolerance": o.map_tol }),
        ..SuiteResult::plain(cases)
    })
}

pub fn identities(o: &SuiteOptions) -> Result<SuiteResult, String> {
    let max_n = o.max_n.unwrap_or(8);
    let mut cases = Vec::new();
    for g in enumerate_odd_unicyclic_with_cap(max_n, o.cap).map_err(|e| e.to_string())? {
        let class = classify(&g);
        let d = class.decomposition().expect("enumerated graphs are odd-unicyclic");
        for t in 0..=(g.vertex_count() - d.girth) / 2 {
            let got = rho_matching_identity_check(&g, d, t);
            cases.push(Case::new(format!("rho t={t} {}", edge_label(&g)), got == Ok(true), format!("{got:?}")));
        }
    }
    let ks = o.ks.clone().unwrap_or_else(|| vec![3, 5]);
    let rs = o.rs.clone().unwrap_or_else(|| (1..=5).collect());
    for &k in &ks {
        for &r in &rs {
            let g = family(FamilySpec::TwoTail(k, r))?;
            let label = format!("twotail:{k},{r}");
            let depth = TreeBranches::from_graph(&g).map_err(|e| e.to_string())?.degree_two_depth(&g);
            for rr in 1..=depth {
                for i in 0..=depth {
                    let got = k_l_recurrence_check(&g, i, rr);
                    cases.push(Case::new(format!("K/L {label} i={i} r={rr}"), got == Ok(true), format!("{got:?}")));
                }
            }
            for t in 0..=g.vertex_count() / 2 {
                let got = kt_decomposition_check(&g, t);
                cases.push(Case::new(format!("Kt {label} t={t}"), got == Ok(true), format!("{got:?}")));
            }
            for inst in main_theorem_integralities(&g).map_err(|e| e.to_string())? {
                cases.push(Case::new(
                    format!("integrality {label} i={}", inst.i),
                    inst.holds(),
                    format!("2^(2i) K = {}, 2^(2(i-1)-1) L = {}", inst.k_scaled, inst.l_scaled),
                ));
            }
        }
    }
    Ok(SuiteResult::plain(cases))
}

pub fn chebyshev(o: &SuiteOptions) -> Result<SuiteResult, String> {
    let ks = o.ks.clone().unwrap_or_else(|| vec![3, 5, 7]);
    let rs = o.rs.clone().unwrap_or_else(|| (2..=6).collect());
    let mut cases = Vec::new();
    let mut worst: f64 = 0.0;
    for &k in &ks {
        for &r in &rs {
            let name = format!("k={k} r={r}");
            match chebyshev_eigen_check(k, r, o.residual_tol) {
                Ok(rep) => {
                    worst = worst.max(rep.max_residual);
                    cases.push(Case::new(name, true, format!("{} eigenvalues, max residual {:e}", rep.eigenvalues.len(), rep.max_residual)));
                }
                Err(e) => cases.push(Case::new(name, false, e.to_string())),
            }
        }
    }
    Ok(SuiteResult {
        summary: json!({ "max_residual": worst, "tolerance": o.residual_tol }),
        ..SuiteResult::plain(cases)
    })
}

pub fn main_theorem(o: &SuiteOptions) -> Result<SuiteResult, String> {
    let max_n = o.max_n.unwrap_or(9);
    let records = census(max_n, o.cap, &o.config).map_err(|e| e.to_string())?;
    let mut cases = Vec::new();
    let mut budget_exceeded = false;
    let mut odd_sizes = Vec::new();
    for rec in &records {
        let is_cycle = rec.graph.degrees().iter().all(|&d| d == 2);
        let name = edge_label(&rec.graph);
        match &rec.period {
            Err(e) => {
                budget_exceeded |= matches!(e, PeriodError::BudgetExceeded { .. });
                cases.push(Case::new(name, false, e.to_string()));
            }
            Ok(report) => {
                let odd = report.period().is_some_and(|p| p % 2 == 1);
                if odd {
                    odd_sizes.push(rec.graph.vertex_count());
                }
                let detail = format!("cycle {is_cycle}, verdict {:?}", report.verdict);
                cases.push(Case::new(name, odd == is_cycle, detail));
            }
        }
    }
    let expected: Vec<usize> = (3..=max_n).step_by(2).collect();
    cases.push(Case::new(
        "odd-periodic classes are exactly the odd cycles",
        odd_sizes == expected,
        format!("expected sizes {expected:?}, got {odd_sizes:?}"),
    ));
    Ok(SuiteResult {
        summary: json!({ "classes": records.len(), "odd_periodic_sizes": odd_sizes }),
        budget_exceeded,
        ..SuiteResult::plain(cases)
    })
}

