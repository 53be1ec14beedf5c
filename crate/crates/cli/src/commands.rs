use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use serde::Serialize;

use qng_core::enumeration::{
    dedup_stream, enumerate_forms, scan, scan_graphs, ScanFilter, ScanOptions, ScanPredicate, ScanResult,
};
use qng_core::graph::read_graph6_stream;
use qng_core::spectra::{char_poly_exact, graph_matrix_of, graph_spectrum, MatrixKind};
use qng_core::theorems::{
    proof_check_thm12, proof_check_thm15, write_csv, write_json_lines, BoundId, BoundReport, Checker, NgOptions,
    ProofReport,
};
use qng_core::{from_graph6, parse_family, to_graph6, Graph};

use crate::args::{Format, GraphSource, NgArgs, Orders, OutputArgs};
use crate::error::{CliError, CliResult};

/// What a finished command found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Clean,
    Violation,
}

impl Status {
    fn from_flag(violated: bool) -> Self {
        if violated {
            Status::Violation
        } else {
            Status::Clean
        }
    }
}

fn open_output(out: &OutputArgs) -> CliResult<Box<dyn Write>> {
    Ok(match &out.output {
        Some(path) => Box::new(io::BufWriter::new(File::create(path).map_err(|e| CliError::io(path, e))?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn read_stream(path: &Path) -> CliResult<Vec<Graph>> {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(BufReader::new(io::stdin().lock()))
    } else {
        Box::new(BufReader::new(File::open(path).map_err(|e| CliError::io(path, e))?))
    };
    Ok(read_graph6_stream(reader)?)
}

fn collect_graphs(src: &GraphSource) -> CliResult<Vec<Graph>> {
    let mut graphs = Vec::new();
    for text in &src.graph6 {
        graphs.push(from_graph6(text)?);
    }
    for expr in &src.family {
        graphs.push(parse_family(expr)?);
    }
    if let Some(path) = &src.input {
        graphs.extend(read_stream(path)?);
    }
    if graphs.is_empty() {
        return Err(CliError::Usage("no input graph: give --graph6, --family or --input".into()));
    }
    Ok(graphs)
}

fn ng_options(ng: &NgArgs) -> NgOptions {
    NgOptions { kind: ng.kind, k: ng.k }
}

fn clean(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

fn fmt_value(x: f64) -> String {
    format!("{:.12}", clean(x))
}

#[derive(Serialize)]
struct SpectrumRecord {
    graph6: String,
    kind: MatrixKind,
    eigenvalues: Vec<f64>,
    char_poly: Vec<String>,
}

pub fn spectrum(src: &GraphSource, kind: MatrixKind, out: &OutputArgs) -> CliResult<Status> {
    let graphs = collect_graphs(src)?;
    let mut w = open_output(out)?;
    match out.format {
        Format::Text => {
            for g in &graphs {
                let shown: Vec<String> = graph_spectrum(g, kind).values.iter().map(|&x| fmt_value(x)).collect();
                writeln!(w, "{}\t{kind}\t{}", to_graph6(g), shown.join(" "))?;
            }
        }
        Format::Json => {
            for g in &graphs {
                let poly = char_poly_exact(graph_matrix_of(g, kind)?);
                let record = SpectrumRecord {
                    graph6: to_graph6(g),
                    kind,
                    eigenvalues: graph_spectrum(g, kind).values.iter().map(|&x| clean(x)).collect(),
                    char_poly: poly.coeffs().iter().map(|c| c.to_string()).collect(),
                };
                writeln!(w, "{}", serde_json::to_string(&record)?)?;
            }
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["graph6", "kind", "index", "eigenvalue"])?;
            for g in &graphs {
                let g6 = to_graph6(g);
                for (i, &x) in graph_spectrum(g, kind).values.iter().enumerate() {
                    c.write_record([g6.as_str(), kind.symbol(), &(i + 1).to_string(), &fmt_value(x)])?;
                }
            }
            c.flush()?;
        }
    }
    w.flush()?;
    Ok(Status::Clean)
}

fn emit_reports(reports: &[BoundReport], out: &OutputArgs) -> CliResult<Status> {
    let mut w = open_output(out)?;
    match out.format {
        Format::Text => {
            for r in reports {
                writeln!(w, "{}", r.text_line())?;
            }
        }
        Format::Json => write_json_lines(&mut w, reports)?,
        Format::Csv => write_csv(&mut w, reports)?,
    }
    w.flush()?;
    Ok(Status::from_flag(reports.iter().any(BoundReport::is_violation)))
}

pub fn check(src: &GraphSource, id: BoundId, ng: &NgArgs, out: &OutputArgs) -> CliResult<Status> {
    let checker = Checker::default();
    let reports: Vec<BoundReport> = collect_graphs(src)?.iter().map(|g| checker.check(g, id, ng_options(ng))).collect();
    emit_reports(&reports, out)
}

pub fn report(src: &GraphSource, ids: &[BoundId], ng: &NgArgs, out: &OutputArgs) -> CliResult<Status> {
    let checker = Checker::default();
    let ids: &[BoundId] = if ids.is_empty() { &BoundId::ALL } else { ids };
    let mut reports = Vec::new();
    for g in collect_graphs(src)? {
        reports.extend(ids.iter().map(|&id| checker.check(&g, id, ng_options(ng))));
    }
    emit_reports(&reports, out)
}

fn require_orders(orders: &Orders, what: &str) -> CliResult<RangeInclusive<usize>> {
    orders.range().ok_or_else(|| CliError::Usage(format!("{what} needs --n, --n-range or --input")))
}

#[derive(Serialize)]
struct ClassList<'a> {
    n: usize,
    filter: String,
    count: usize,
    graphs: &'a [String],
}

pub fn enumerate(orders: &Orders, filter: ScanFilter, input: Option<&Path>, out: &OutputArgs) -> CliResult<Status> {
    let mut by_order: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    if let Some(path) = input {
        for (form, g) in dedup_stream(read_stream(path)?)? {
            if filter.admits(&g) {
                by_order.entry(g.order()).or_default().push(form.graph6());
            }
        }
        for list in by_order.values_mut() {
            list.sort();
        }
    } else {
        for n in require_orders(orders, "enumerate")? {
            let list = enumerate_forms(n)?.iter().filter(|c| filter.admits(&c.graph())).map(|c| c.graph6()).collect();
            by_order.insert(n, list);
        }
    }
    let mut w = open_output(out)?;
    match out.format {
        Format::Text => {
            for list in by_order.values() {
                for g6 in list {
                    writeln!(w, "{g6}")?;
                }
            }
        }
        Format::Json => {
            for (&n, list) in &by_order {
                let record = ClassList { n, filter: filter.to_string(), count: list.len(), graphs: list };
                writeln!(w, "{}", serde_json::to_string(&record)?)?;
            }
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["n", "graph6"])?;
            for (n, list) in &by_order {
                for g6 in list {
                    c.write_record([n.to_string().as_str(), g6])?;
                }
            }
            c.flush()?;
        }
    }
    w.flush()?;
    Ok(Status::Clean)
}

fn scan_text(w: &mut dyn Write, r: &ScanResult) -> io::Result<()> {
    let order = r.n.map_or_else(|| "mixed".to_string(), |n| n.to_string());
    writeln!(w, "n={order} filter={} predicate={}", r.filter, r.predicate)?;
    writeln!(w, "  total {}", r.total)?;
    for (label, count) in &r.counts {
        writeln!(w, "  {label} {count}")?;
    }
    writeln!(w, "  members {}", r.members.len())?;
    for g6 in &r.members {
        writeln!(w, "    {g6}")?;
    }
    writeln!(w, "  violations {}", r.violations.len())?;
    for g6 in &r.violations {
        writeln!(w, "    {g6}")?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn scan_cmd(
    orders: &Orders,
    filter: ScanFilter,
    predicate: &ScanPredicate,
    ng: &NgArgs,
    jobs: usize,
    input: Option<&Path>,
    out: &OutputArgs,
) -> CliResult<Status> {
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let predicate = match predicate {
        ScanPredicate::Bound(id, _) => ScanPredicate::Bound(*id, ng_options(ng)),
        other => other.clone(),
    };
    let opts = ScanOptions { jobs, checker: Checker::default() };
    let mut results = Vec::new();
    if let Some(path) = input {
        results.push(scan_graphs(&read_stream(path)?, filter, &predicate, opts)?);
    } else {
        for n in require_orders(orders, "scan")? {
            results.push(scan(n, filter, &predicate, opts)?);
        }
    }
    let mut w = open_output(out)?;
    match out.format {
        Format::Text => {
            for r in &results {
                scan_text(&mut w, r)?;
            }
        }
        Format::Json => {
            let text = if results.len() == 1 { results[0].to_json() } else { serde_json::to_string_pretty(&results)? };
            writeln!(w, "{text}")?;
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["n", "role", "graph6"])?;
            for r in &results {
                let n = r.n.map(|n| n.to_string()).unwrap_or_default();
                for (role, list) in [("member", &r.members), ("violation", &r.violations)] {
                    for g6 in list {
                        c.write_record([n.as_str(), role, g6])?;
                    }
                }
            }
            c.flush()?;
        }
    }
    w.flush()?;
    Ok(Status::from_flag(results.iter().any(|r| !r.violations.is_empty())))
}

pub fn proof_check(id: BoundId, orders: &Orders, d2: Option<usize>, out: &OutputArgs) -> CliResult<Status> {
    let mut reports: Vec<ProofReport> = Vec::new();
    match id {
        BoundId::Thm12 => {
            for n in orders.range().unwrap_or(4..=50) {
                let degrees = match d2 {
                    Some(d) => d..=d,
                    None => 1..=n.saturating_sub(2),
                };
                for d in degrees {
                    reports.push(proof_check_thm12(n, d)?);
                }
            }
        }
        BoundId::Thm15 => {
            if d2.is_some() {
                return Err(CliError::Usage("--d2 applies only to --thm 1.2".into()));
            }
            for n in orders.range().unwrap_or(8..=50) {
                reports.push(proof_check_thm15(n)?);
            }
        }
        other => {
            return Err(CliError::Usage(format!("no proof replay for {other}; use --thm 1.2 or --thm 1.5")));
        }
    }
    let mut w = open_output(out)?;
    match out.format {
        Format::Text => {
            for r in &reports {
                let d2 = r.d2.map(|d| format!(" d2={d}")).unwrap_or_default();
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                writeln!(w, "thm{} n={}{d2}: {verdict} ({} steps)", r.theorem, r.n, r.steps.len())?;
                for s in r.failures() {
                    writeln!(w, "  failed: {} ({})", s.label, s.detail)?;
                }
            }
        }
        Format::Json => {
            for r in &reports {
                writeln!(w, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            c.write_record(["theorem", "n", "d2", "step", "ok", "detail"])?;
            for r in &reports {
                let d2 = r.d2.map(|d| d.to_string()).unwrap_or_default();
                for s in &r.steps {
                    c.write_record([&r.theorem, &r.n.to_string(), &d2, &s.label, &s.ok.to_string(), &s.detail])?;
                }
            }
            c.flush()?;
        }
    }
    w.flush()?;
    Ok(Status::from_flag(reports.iter().any(|r| !r.passed())))
}
