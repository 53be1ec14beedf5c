//! End-to-end reproduction of the published results at exhaustive scale.
//! Runs without the libtest harness so every criterion prints one line.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use qng_core::enumeration::{
    canonical_form, enumerate_graphs, scan, ScanFilter, ScanOptions, ScanPredicate, ScanResult,
};
use qng_core::graph::is_connected;
use qng_core::partitions::VertexPartition;
use qng_core::spectra::{char_poly_exact, graph_matrix_of, graph_spectrum, MatrixKind};
use qng_core::theorems::{proof_check_thm12, proof_check_thm15, BoundId, Checker, NgOptions, Verdict};
use qng_core::{parse_family, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn canon(expr: &str) -> String {
    let g = parse_family(expr).unwrap_or_else(|e| panic!("{expr}: {e}"));
    canonical_form(&g).unwrap().graph6()
}

fn canon_set<S: AsRef<str>>(exprs: impl IntoIterator<Item = S>) -> BTreeSet<String> {
    exprs.into_iter().map(|e| canon(e.as_ref())).collect()
}

fn bound_scan(n: usize, filter: ScanFilter, id: BoundId) -> ScanResult {
    scan(n, filter, &ScanPredicate::Bound(id, NgOptions::default()), ScanOptions::default()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn no_violations(r: &ScanResult) -> Result<(), String> {
    ensure(r.violations.is_empty(), || format!("n={:?}: violations {:?}", r.n, r.violations))
}

fn same_members(r: &ScanResult, want: &BTreeSet<String>) -> Result<(), String> {
    let got: BTreeSet<String> = r.members.iter().cloned().collect();
    ensure(&got == want, || format!("n={:?}: members {got:?}, expected {want:?}", r.n))
}

fn lower_bound_census() -> Outcome {
    let mut timing = Duration::ZERO;
    for n in 4..=8 {
        let start = Instant::now();
        let r = bound_scan(n, ScanFilter::ALL, BoundId::Thm12);
        if n == 8 {
            timing = start.elapsed();
        }
        no_violations(&r)?;
        let m = n - 1;
        let want = canon_set([
            format!("K{n}"),
            format!("E{n}"),
            format!("K1,{m}"),
            format!("union(K{m}, K1)"),
            format!("join(E2, K{})", n - 2),
            format!("union(K2, E{})", n - 2),
        ]);
        same_members(&r, &want)?;
        ensure(n == 4 || want.len() == 6, || format!("n={n}: expected 6 distinct classes"))?;
    }
    ensure(timing < Duration::from_secs(60), || format!("n=8 census took {timing:?}"))?;
    Ok(format!("n=4..8 exact, n=8 in {:.1}s", timing.as_secs_f64()))
}

fn connected_upper_census() -> Outcome {
    let mut all = BTreeSet::new();
    for n in 2..=8 {
        let r = bound_scan(n, ScanFilter::connected(), BoundId::Thm13);
        no_violations(&r)?;
        all.extend(r.members);
    }
    let want = canon_set(["K2", "P4", "C4"]);
    ensure(all == want, || format!("members {all:?}"))?;
    Ok("equality set {K2, P4, C4}".into())
}

fn interval_scan() -> Outcome {
    let mut counts = Vec::new();
    for n in 5..=8 {
        let lo = BigRational::from_integer((2 * n as i64 - 5).into());
        let hi = BigRational::from_integer((2 * n as i64 - 4).into());
        let pred = ScanPredicate::SumOpenInterval(lo, hi);
        let r = scan(n, ScanFilter::connected(), &pred, ScanOptions::default()).unwrap();
        let want = if n == 5 { 8 } else { 0 };
        ensure(r.members.len() == want, || format!("n={n}: {} classes", r.members.len()))?;
        counts.push(r.members.len());
    }
    Ok(format!("classes per n=5..8: {counts:?}"))
}

fn regular_extremal() -> Outcome {
    let filter = ScanFilter { connected: true, regular: true, ..ScanFilter::ALL };
    let mut all = BTreeSet::new();
    for n in 6..=8 {
        let r = bound_scan(n, filter, BoundId::Problem12);
        no_violations(&r)?;
        let strict = r.counts.get(Verdict::Strict.as_str()).copied().unwrap_or(0);
        ensure(strict + r.members.len() == r.total, || format!("n={n}: counts {:?}", r.counts))?;
        all.extend(r.members);
    }
    let want = canon_set(["C6", "K3,3", "cp(K3, K2)", "join(2K2, E3)"]);
    ensure(all == want, || format!("members {all:?}"))?;
    Ok("equality set {C6, K3,3, K3xK2, (2K2)+(3K1)}".into())
}

fn disconnected_complement() -> Outcome {
    let filter = ScanFilter { connected: true, complement_disconnected: true, ..ScanFilter::ALL };
    for n in 6..=8 {
        let r = bound_scan(n, filter, BoundId::Thm14);
        no_violations(&r)?;
        let mut want = vec![format!("join(union(K2, K{}), K1)", n - 3)];
        if n == 6 {
            want.push("K3,3".into());
            want.push("join(union(K1, K2), union(K1, K2))".into());
        }
        if n == 7 {
            want.push("join(2K2, E3)".into());
        }
        same_members(&r, &canon_set(want))?;
    }
    Ok("listed families at n=6..8, no violations".into())
}

fn bipartite_catalogue() -> Outcome {
    let filter = ScanFilter { connected: true, bipartite: true, ..ScanFilter::ALL };
    let mut counts = Vec::new();
    for n in 6..=8 {
        let r = bound_scan(n, filter, BoundId::Thm15);
        no_violations(&r)?;
        let sum_eq = ScanPredicate::SumEquals("2n-5".parse().unwrap());
        let oracle = scan(n, filter, &sum_eq, ScanOptions::default()).unwrap();
        ensure(oracle.members == r.members, || format!("n={n}: catalogue disagrees with direct sums"))?;
        counts.push(r.members.len());
    }
    ensure(counts == [9, 0, 0], || format!("classes per n=6..8: {counts:?}"))?;
    Ok(format!("classes per n=6..8: {counts:?}"))
}

fn proof_algebra() -> Outcome {
    let start = Instant::now();
    let mut steps = 0;
    for n in 4..=50 {
        for d2 in 1..=n - 2 {
            let rep = proof_check_thm12(n, d2).map_err(|e| format!("thm12 n={n} d2={d2}: {e}"))?;
            if let Some(s) = rep.failures().next() {
                return Err(format!("thm12 n={n} d2={d2}: {} ({})", s.label, s.detail));
            }
            steps += rep.steps.len();
        }
    }
    let required = [
        "case 1 f1(2n-6) = 16-4n",
        "case 1 γ1', γ2' are the roots of f2",
        "case 1 β2 = q2(H(n-4,1,1))",
        "case 2 φ(B3, 2n-6) = -4(n-3)(n-4)",
        "case 2 g(n-5/2) = (15-2n)/8",
    ];
    for n in 8..=50 {
        let rep = proof_check_thm15(n).map_err(|e| format!("thm15 n={n}: {e}"))?;
        if let Some(s) = rep.failures().next() {
            return Err(format!("thm15 n={n}: {} ({})", s.label, s.detail));
        }
        for label in required {
            ensure(rep.steps.iter().any(|s| s.label == label), || format!("thm15 n={n}: missing {label}"))?;
        }
        steps += rep.steps.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("{steps} steps in {:.2}s", elapsed.as_secs_f64()))
}

fn random_partition(rng: &mut StdRng, n: usize) -> VertexPartition {
    let k = rng.random_range(1..=n);
    let labels: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
    VertexPartition::from_labels(&labels)
}

fn lemma_suite() -> Outcome {
    let start = Instant::now();
    let checker = Checker::new(1e-8);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let graphs: Vec<Graph> = (1..=7).flat_map(|n| enumerate_graphs(n, false).unwrap()).collect();
    let bad = |what: &str, g: &Graph, why: String| format!("{what} on {}: {why}", qng_core::to_graph6(g));
    let violated = |v: Verdict| v == Verdict::Violated;
    for g in &graphs {
        let n = g.order();
        checker.weyl(g).map_err(|e| bad("weyl", g, e))?;
        checker.edge_deletion(g).map_err(|e| bad("edge deletion", g, e))?;
        checker.duplicate_multiplicity(g).map_err(|e| bad("duplicates", g, e))?;
        for drop in (0..n).filter(|_| n > 1) {
            let rows: Vec<usize> = (0..n).filter(|&v| v != drop).collect();
            checker.principal_interlacing(g, &rows).unwrap().map_err(|e| bad("submatrix", g, e))?;
        }
        for (name, rep) in [
            ("degree bound", checker.lemma26(g)),
            ("complement structure", checker.lemma28(g)),
            ("second degree", checker.lemma29(g)),
        ] {
            ensure(!violated(rep.verdict), || bad(name, g, rep.notes.join("; ")))?;
        }
        if n == 6 || n == 7 {
            let rep = checker.lemma210(g);
            ensure(!violated(rep.verdict), || bad("least eigenvalue", g, rep.notes.join("; ")))?;
        }
    }
    for _ in 0..200 {
        let g = &graphs[rng.random_range(0..graphs.len())];
        let p = random_partition(&mut rng, g.order());
        checker.quotient_interlacing(g, &p).unwrap().map_err(|e| bad("quotient", g, e))?;
    }
    let mut pairs = 0;
    while pairs < 500 {
        let g = &graphs[rng.random_range(0..graphs.len())];
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        if non_edges.is_empty() || !is_connected(g) {
            continue;
        }
        let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
        let rep = checker.lemma27(g, u, v).unwrap();
        ensure(!violated(rep.verdict), || bad("edge addition", g, format!("{u}-{v}")))?;
        pairs += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs in {:.1}s", graphs.len(), elapsed.as_secs_f64()))
}

fn oracle_equivalence() -> Outcome {
    let kinds = [MatrixKind::SignlessLaplacian, MatrixKind::Laplacian, MatrixKind::Adjacency];
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            for kind in kinds {
                let float = graph_spectrum(&g, kind).values;
                let exact = char_poly_exact(graph_matrix_of(&g, kind).unwrap()).spectrum().to_f64();
                let tag = || format!("{} {kind}", qng_core::to_graph6(&g));
                ensure(float.len() == exact.len(), || format!("{}: count", tag()))?;
                for (a, b) in float.iter().zip(&exact) {
                    ensure((a - b).abs() < 1e-8, || format!("{}: {a} vs {b}", tag()))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} spectra agree"))
}

fn micro_censuses() -> Outcome {
    let opts = ScanOptions::default();
    for n in 4..=6 {
        let r = scan(n, ScanFilter::ALL, &ScanPredicate::NearDegreeSplit, opts).unwrap();
        ensure(r.members.is_empty(), || format!("near split at n={n}: {:?}", r.members))?;
    }
    for n in 4..=8 {
        let r = scan(n, ScanFilter::ALL, &ScanPredicate::DegreeAttainedSplit, opts).unwrap();
        let want = canon_set([format!("star {n}")]);
        same_members(&r, &want)?;
    }
    let q1 = ScanPredicate::Q1AtLeast("2n-3".parse().unwrap());
    for h in [3, 4, 5] {
        let r = scan(h, ScanFilter::ALL, &q1, opts).unwrap();
        let want = canon_set([format!("K{h}"), format!("join(K{}, E2)", h - 2)]);
        same_members(&r, &want)?;
    }
    Ok("split censuses and large-q1 halves reproduce".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("lower bound equality census", lower_bound_census),
        ("connected upper bound census", connected_upper_census),
        ("order-5 open interval scan", interval_scan),
        ("regular extremal set", regular_extremal),
        ("disconnected complement bound", disconnected_complement),
        ("bipartite catalogue", bipartite_catalogue),
        ("proof algebra replay", proof_algebra),
        ("lemma suite", lemma_suite),
        ("float/exact oracle equivalence", oracle_equivalence),
        ("case-analysis micro-censuses", micro_censuses),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
