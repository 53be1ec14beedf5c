//! Exhaustive scans: evaluate a predicate on every graph of a class and
//! collect the exactly certified members.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::canon::{canonical_form, MAX_CANON_ORDER};
use super::generate::enumerate_forms;
use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, is_connected, to_graph6, Graph};
use crate::poly::rat;
use crate::theorems::{BoundId, Checker, GraphSpectra, NgOptions, PairSpectra, Verdict};

/// Conjunction of structural filters; the empty filter admits every graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanFilter {
    pub connected: bool,
    pub bipartite: bool,
    pub regular: bool,
    pub complement_disconnected: bool,
}

impl ScanFilter {
    pub const ALL: ScanFilter =
        ScanFilter { connected: false, bipartite: false, regular: false, complement_disconnected: false };

    pub fn connected() -> Self {
        ScanFilter { connected: true, ..Self::ALL }
    }

    pub fn admits(&self, g: &Graph) -> bool {
        (!self.connected || is_connected(g))
            && (!self.bipartite || is_bipartite(g))
            && (!self.regular || g.regular_degree().is_some())
            && (!self.complement_disconnected || !is_connected(&g.complement()))
    }
}

impl fmt::Display for ScanFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = [
            (self.connected, "connected"),
            (self.bipartite, "bipartite"),
            (self.regular, "regular"),
            (self.complement_disconnected, "cobar-disconnected"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        if parts.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl FromStr for ScanFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = ScanFilter::ALL;
        for part in s.split(['+', ',']).map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => {}
                "connected" => out.connected = true,
                "bipartite" => out.bipartite = true,
                "regular" => out.regular = true,
                "cobar-disconnected" | "complement-disconnected" => out.complement_disconnected = true,
                other => return Err(Error::InvalidParameter(format!("unknown filter {other:?}"))),
            }
        }
        Ok(out)
    }
}

/// `slope·n + intercept` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearInN {
    pub slope: i64,
    pub intercept: i64,
}

impl LinearInN {
    pub fn at(&self, n: usize) -> i64 {
        self.slope * n as i64 + self.intercept
    }
}

impl FromStr for LinearInN {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("expected an expression like 2n-5, got {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut out = LinearInN { slope: 0, intercept: 0 };
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..=bytes.len() {
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                continue;
            }
            let term = &text[start..i];
            start = i;
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let sign = if neg { -1 } else { 1 };
            if let Some(coef) = body.strip_suffix('n') {
                let c: i64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
                out.slope += sign * c;
            } else {
                out.intercept += sign * body.parse::<i64>().map_err(|_| bad())?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LinearInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.intercept) {
            (0, c) => write!(f, "{c}"),
            (a, 0) => write!(f, "{a}n"),
            (a, c) if c < 0 => write!(f, "{a}n{c}"),
            (a, c) => write!(f, "{a}n+{c}"),
        }
    }
}

/// What a scan evaluates on each admitted graph. Sums are of second
/// largest Q-eigenvalues of a graph and its complement.
#[derive(Clone, Debug, PartialEq)]
pub enum ScanPredicate {
    /// Sum strictly between two rationals.
    SumOpenInterval(BigRational, BigRational),
    /// Sum exactly equal to a linear expression in `n`.
    SumEquals(LinearInN),
    /// `d2-1 < q2(G) < d2`, `d̄2-1 <= q2(Ḡ) < d̄2` and sum `n-2`, among
    /// graphs with `d2, d̄2 >= 1`.
    NearDegreeSplit,
    /// `q2(G) = d2`, `q2(Ḡ) = d̄2-1` and sum `n-2`, among graphs with
    /// `d2, d̄2 >= 1`.
    DegreeAttainedSplit,
    /// Largest Q-eigenvalue at least a linear expression in `n`.
    Q1AtLeast(LinearInN),
    /// A named bound; members are its certified equality cases.
    Bound(BoundId, NgOptions),
}

impl fmt::Display for ScanPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanPredicate::SumOpenInterval(lo, hi) => write!(f, "sum-open-interval {lo} {hi}"),
            ScanPredicate::SumEquals(e) => write!(f, "sum-eq {e}"),
            ScanPredicate::NearDegreeSplit => f.write_str("near-degree-split"),
            ScanPredicate::DegreeAttainedSplit => f.write_str("degree-attained-split"),
            ScanPredicate::Q1AtLeast(e) => write!(f, "q1-at-least {e}"),
            ScanPredicate::Bound(id, _) => write!(f, "thm {id}"),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    s.parse::<BigRational>().map_err(|_| Error::InvalidParameter(format!("expected a rational number, got {s:?}")))
}

impl FromStr for ScanPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let usage = || Error::InvalidParameter(format!("unknown predicate {s:?}"));
        match words.as_slice() {
            ["sum-open-interval", lo, hi] => {
                Ok(ScanPredicate::SumOpenInterval(parse_rational(lo)?, parse_rational(hi)?))
            }
            ["sum-eq", rest @ ..] if !rest.is_empty() => Ok(ScanPredicate::SumEquals(rest.concat().parse()?)),
            ["near-degree-split"] => Ok(ScanPredicate::NearDegreeSplit),
            ["degree-attained-split"] => Ok(ScanPredicate::DegreeAttainedSplit),
            ["q1-at-least", rest @ ..] if !rest.is_empty() => Ok(ScanPredicate::Q1AtLeast(rest.concat().parse()?)),
            ["thm", name] => Ok(ScanPredicate::Bound(name.parse()?, NgOptions::default())),
            [name] => name.parse().map(|id| ScanPredicate::Bound(id, NgOptions::default())).map_err(|_| usage()),
            _ => Err(usage()),
        }
    }
}

/// Outcome of one scan; members and violations are canonical graph6 strings
/// in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub n: Option<usize>,
    pub filter: String,
    pub predicate: String,
    pub total: usize,
    pub counts: BTreeMap<String, usize>,
    pub members: Vec<String>,
    pub violations: Vec<String>,
}

impl ScanResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan results serialize")
    }
}

#[derive(Clone, Debug)]
struct Outcome {
    label: &'static str,
    member: bool,
    violation: bool,
}

impl Outcome {
    fn flag(member: bool, yes: &'static str, no: &'static str) -> Self {
        Outcome { label: if member { yes } else { no }, member, violation: false }
    }
}

/// Exact comparison of a float screened value with a rational.
fn compare(float: f64, exact: impl FnOnce() -> AlgebraicReal, r: &BigRational, window: f64) -> Ordering {
    let diff = float - r.to_f64().unwrap();
    if diff > window {
        Ordering::Greater
    } else if diff < -window {
        Ordering::Less
    } else {
        exact().cmp_rational(r)
    }
}

fn compare_sum(ps: &PairSpectra, k: usize, r: &BigRational, window: f64) -> Ordering {
    let diff = ps.sum(k) - r.to_f64().unwrap();
    if diff > window {
        Ordering::Greater
    } else if diff < -window {
        Ordering::Less
    } else {
        ps.exact_sum_sign(k, r).cmp(&0)
    }
}

fn second_degrees(g: &Graph) -> (i64, i64) {
    let d = g.degree_sequence();
    let n = g.order();
    (d[1] as i64, (n - 1 - d[n - 2]) as i64)
}

fn evaluate(g: &Graph, pred: &ScanPredicate, checker: &Checker) -> Outcome {
    let n = g.order();
    let w = checker.window();
    let q2 = |gs: &GraphSpectra, r: i64| compare(gs.kth(2), || gs.exact_kth(2).clone(), &rat(r), w);
    match pred {
        ScanPredicate::SumOpenInterval(lo, hi) => {
            let ps = PairSpectra::q(g);
            let inside = compare_sum(&ps, 2, lo, w).is_gt() && compare_sum(&ps, 2, hi, w).is_lt();
            Outcome::flag(inside, "inside", "outside")
        }
        ScanPredicate::SumEquals(e) => {
            let ps = PairSpectra::q(g);
            Outcome::flag(compare_sum(&ps, 2, &rat(e.at(n)), w).is_eq(), "equal", "different")
        }
        ScanPredicate::NearDegreeSplit | ScanPredicate::DegreeAttainedSplit => {
            if n < 2 {
                return Outcome::flag(false, "match", "no-match");
            }
            let (d2, cd2) = second_degrees(g);
            if d2 < 1 || cd2 < 1 {
                return Outcome::flag(false, "match", "no-match");
            }
            let ps = PairSpectra::q(g);
            let sum_ok = compare_sum(&ps, 2, &rat(n as i64 - 2), w).is_eq();
            let hit = sum_ok
                && if *pred == ScanPredicate::NearDegreeSplit {
                    q2(&ps.graph, d2 - 1).is_gt()
                        && q2(&ps.graph, d2).is_lt()
                        && q2(&ps.complement, cd2 - 1).is_ge()
                        && q2(&ps.complement, cd2).is_lt()
                } else {
                    q2(&ps.graph, d2).is_eq() && q2(&ps.complement, cd2 - 1).is_eq()
                };
            Outcome::flag(hit, "match", "no-match")
        }
        ScanPredicate::Q1AtLeast(e) => {
            let gs = GraphSpectra::q(*g);
            let r = rat(e.at(n));
            let hit = compare(gs.kth(1), || gs.exact_kth(1).clone(), &r, w).is_ge();
            Outcome::flag(hit, "match", "no-match")
        }
        ScanPredicate::Bound(id, opts) => {
            let rep = checker.check(g, *id, *opts);
            Outcome {
                label: rep.verdict.as_str(),
                member: rep.verdict == Verdict::EqualityCertified,
                violation: rep.verdict == Verdict::Violated,
            }
        }
    }
}

fn canonical_text(g: &Graph) -> String {
    if g.order() <= MAX_CANON_ORDER {
        canonical_form(g).expect("order within capacity").graph6()
    } else {
        to_graph6(g)
    }
}

/// Options shared by all scans.
#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub jobs: usize,
    pub checker: Checker,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { jobs: 1, checker: Checker::default() }
    }
}

/// Scans an arbitrary list of graphs. Output does not depend on `jobs`.
pub fn scan_graphs(
    graphs: &[Graph],
    filter: ScanFilter,
    predicate: &ScanPredicate,
    opts: ScanOptions,
) -> Result<ScanResult> {
    let admitted: Vec<&Graph> = graphs.iter().filter(|g| filter.admits(g)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let outcomes: Vec<Outcome> =
        pool.install(|| admitted.par_iter().map(|g| evaluate(g, predicate, &opts.checker)).collect());
    let mut counts = BTreeMap::new();
    let mut members = Vec::new();
    let mut violations = Vec::new();
    for (g, o) in admitted.iter().zip(&outcomes) {
        *counts.entry(o.label.to_string()).or_insert(0) += 1;
        if o.member {
            members.push(canonical_text(g));
        }
        if o.violation {
            violations.push(canonical_text(g));
        }
    }
    for list in [&mut members, &mut violations] {
        list.sort();
        list.dedup();
    }
    let orders: Vec<usize> = graphs.iter().map(Graph::order).collect();
    let n = orders.first().copied().filter(|&first| orders.iter().all(|&o| o == first));
    Ok(ScanResult {
        n,
        filter: filter.to_string(),
        predicate: predicate.to_string(),
        total: admitted.len(),
        counts,
        members,
        violations,
    })
}

/// Scans every isomorphism class of order `n` (built-in generation).
pub fn scan(n: usize, filter: ScanFilter, predicate: &ScanPredicate, opts: ScanOptions) -> Result<ScanResult> {
    let graphs: Vec<Graph> = enumerate_forms(n)?.iter().map(|c| c.graph()).collect();
    let mut result = scan_graphs(&graphs, filter, predicate, opts)?;
    result.n = Some(n);
    Ok(result)
}
