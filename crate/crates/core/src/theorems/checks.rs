//! One certifying predicate per bound, each returning a [`BoundReport`].

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::decide::{interval_sign, ordering_sign, Checker, GraphSpectra, PairSpectra};
use super::families::{
    bipartite_catalogue, connected_upper_families, disconnected_complement_families, lower_bound_families,
    match_family, FamilyMatch, FamilyMember,
};
use super::report::{BoundReport, Relation, Verdict};
use crate::error::{Error, Result};
use crate::graph::{
    bipartition, count_bipartite_components, is_balanced_bipartite_component_present, is_bipartite, is_connected,
    to_graph6, Graph,
};
use crate::poly::{rat, ratio};
use crate::spectra::MatrixKind;

/// Bound names accepted by [`check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundId {
    Thm12,
    Thm13,
    Thm14,
    Thm15,
    Thm16,
    Problem12,
    Regular,
    Lemma26,
    Lemma28,
    Lemma29,
    Lemma210,
    Q1Sum,
    Lambda2,
    LaplacianSpread,
    Ng,
}

impl BoundId {
    pub const ALL: [BoundId; 15] = [
        BoundId::Thm12,
        BoundId::Thm13,
        BoundId::Thm14,
        BoundId::Thm15,
        BoundId::Thm16,
        BoundId::Problem12,
        BoundId::Regular,
        BoundId::Lemma26,
        BoundId::Lemma28,
        BoundId::Lemma29,
        BoundId::Lemma210,
        BoundId::Q1Sum,
        BoundId::Lambda2,
        BoundId::LaplacianSpread,
        BoundId::Ng,
    ];

    /// Short name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            BoundId::Thm12 => "1.2",
            BoundId::Thm13 => "1.3",
            BoundId::Thm14 => "1.4",
            BoundId::Thm15 => "1.5",
            BoundId::Thm16 => "1.6",
            BoundId::Problem12 => "problem1.2",
            BoundId::Regular => "regular",
            BoundId::Lemma26 => "2.6",
            BoundId::Lemma28 => "2.8",
            BoundId::Lemma29 => "2.9",
            BoundId::Lemma210 => "2.10",
            BoundId::Q1Sum => "q1-sum",
            BoundId::Lambda2 => "lambda2",
            BoundId::LaplacianSpread => "spread",
            BoundId::Ng => "ng",
        }
    }

    /// Name written into reports.
    pub fn report_name(self) -> &'static str {
        match self {
            BoundId::Thm12 => "thm1.2",
            BoundId::Thm13 => "thm1.3",
            BoundId::Thm14 => "thm1.4",
            BoundId::Thm15 => "thm1.5",
            BoundId::Thm16 => "thm1.6",
            BoundId::Problem12 => "problem1.2",
            BoundId::Regular => "regular",
            BoundId::Lemma26 => "lemma2.6",
            BoundId::Lemma28 => "lemma2.8",
            BoundId::Lemma29 => "lemma2.9",
            BoundId::Lemma210 => "lemma2.10",
            BoundId::Q1Sum => "q1-sum",
            BoundId::Lambda2 => "lambda2",
            BoundId::LaplacianSpread => "spread",
            BoundId::Ng => "ng",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let t = t.strip_prefix("thm").or_else(|| t.strip_prefix("lemma")).unwrap_or(&t);
        BoundId::ALL
            .into_iter()
            .find(|b| b.cli_name() == t || b.report_name() == t)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown bound name {s:?}")))
    }
}

/// Matrix kind and eigenvalue index for generic sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NgOptions {
    pub kind: MatrixKind,
    pub k: usize,
}

impl Default for NgOptions {
    fn default() -> Self {
        NgOptions { kind: MatrixKind::SignlessLaplacian, k: 2 }
    }
}

fn na(g: &Graph, bound: BoundId, rel: Relation, reason: &str) -> BoundReport {
    BoundReport::not_applicable(to_graph6(g), bound.report_name(), rel, reason)
}

/// Attaches the family certificate and enforces "equality iff listed".
fn classify(mut rep: BoundReport, g: &Graph, members: &[FamilyMember]) -> BoundReport {
    let found = match_family(g, members);
    match (rep.verdict, found) {
        (Verdict::EqualityCertified, FamilyMatch::Matched(c)) => rep.family = Some(c),
        (Verdict::EqualityCertified, FamilyMatch::NoMatch) => {
            rep.verdict = Verdict::Violated;
            rep.notes.push("equality attained by a graph outside the extremal list".into());
        }
        (Verdict::Strict, FamilyMatch::Matched(c)) => {
            rep.verdict = Verdict::Violated;
            rep.notes.push(format!("listed extremal graph {} is strict", c.family));
            rep.family = Some(c);
        }
        (_, FamilyMatch::Undecided) => rep.notes.push("extremal family membership undecided at this order".into()),
        _ => {}
    }
    rep
}

fn is_regular_or_semiregular_bipartite(g: &Graph) -> bool {
    if g.regular_degree().is_some() {
        return true;
    }
    match bipartition(g) {
        Some((a, b)) if is_connected(g) => {
            let constant = |part: &[usize]| part.windows(2).all(|w| g.degree(w[0]) == g.degree(w[1]));
            constant(&a) && constant(&b)
        }
        _ => false,
    }
}

impl Checker {
    /// `q2(G) + q2(Ḡ) >= n - 2`.
    pub fn thm12(&self, g: &Graph) -> BoundReport {
        let n = g.order();
        let id = BoundId::Thm12;
        if n < 4 {
            return na(g, id, Relation::AtLeast, "requires n >= 4");
        }
        let ps = PairSpectra::q(g);
        let rep = self.sum_report(&ps, id.report_name(), 2, &rat(n as i64 - 2), Relation::AtLeast);
        classify(rep, g, &lower_bound_families(n))
    }

    /// `q2(G) + q2(Ḡ) <= 2n - 4` for connected `G`.
    pub fn thm13(&self, g: &Graph) -> BoundReport {
        let n = g.order();
        let id = BoundId::Thm13;
        if n < 2 || !is_connected(g) {
            return na(g, id, Relation::AtMost, "requires a connected graph with n >= 2");
        }
        let ps = PairSpectra::q(g);
        let rep = self.sum_report(&ps, id.report_name(), 2, &rat(2 * n as i64 - 4), Relation::AtMost);
        classify(rep, g, &connected_upper_families(n))
    }

    fn upper_2n5(&self, g: &Graph, id: BoundId) -> BoundReport {
        let n = g.order() as i64;
        self.sum_report(&PairSpectra::q(g), id.report_name(), 2, &rat(2 * n - 5), Relation::AtMost)
    }

    /// `q2(G) + q2(Ḡ) <= 2n - 5` for connected `G`, `n >= 6`.
    pub fn problem12(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Problem12;
        if g.order() < 6 || !is_connected(g) {
            return na(g, id, Relation::AtMost, "requires a connected graph with n >= 6");
        }
        self.upper_2n5(g, id)
    }

    /// `2n - 5` when `Ḡ` is disconnected.
    pub fn thm14(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Thm14;
        if g.order() < 6 || !is_connected(g) || is_connected(&g.complement()) {
            return na(g, id, Relation::AtMost, "requires n >= 6, G connected and its complement disconnected");
        }
        classify(self.upper_2n5(g, id), g, &disconnected_complement_families(g.order()))
    }

    /// `2n - 5` for connected bipartite `G`.
    pub fn thm15(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Thm15;
        if g.order() < 6 || !is_connected(g) || !is_bipartite(g) {
            return na(g, id, Relation::AtMost, "requires a connected bipartite graph with n >= 6");
        }
        classify(self.upper_2n5(g, id), g, bipartite_catalogue())
    }

    /// `2n - 5` for connected `G` with `q2(G) <= n - 3`.
    pub fn thm16(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Thm16;
        let n = g.order();
        if n < 6 || !is_connected(g) {
            return na(g, id, Relation::AtMost, "requires a connected graph with n >= 6");
        }
        let ps = PairSpectra::q(g);
        let cap = rat(n as i64 - 3);
        let q2 = ps.graph.kth(2);
        let gap = q2 - (n as f64 - 3.0);
        let holds =
            if gap.abs() > self.window() { gap < 0.0 } else { ps.graph.exact_kth(2).cmp_rational(&cap).is_le() };
        if !holds {
            let mut rep = na(g, id, Relation::AtMost, "hypothesis q2(G) <= n-3 fails");
            rep.lhs = ps.sum(2);
            return rep;
        }
        let rep = self.sum_report(&ps, id.report_name(), 2, &rat(2 * n as i64 - 5), Relation::AtMost);
        classify(rep, g, bipartite_catalogue())
    }

    /// `q2(G) + q2(Ḡ) < n - 2 + sqrt(2nk(n-k-1)/(n-1))` for connected
    /// non-complete `k`-regular `G`.
    pub fn regular_bound(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Regular;
        let n = g.order() as i64;
        let Some(k) = g.regular_degree().map(|k| k as i64) else {
            return na(g, id, Relation::Below, "graph is not regular");
        };
        if !is_connected(g) || g.is_complete() {
            return na(g, id, Relation::Below, "requires a connected non-complete regular graph");
        }
        let radicand = ratio(2 * n * k * (n - k - 1), n - 1);
        let offset = rat(n - 2);
        let ps = PairSpectra::q(g);
        self.irrational_report(g, id, &ps, 2, &offset, &radicand, Relation::Below)
    }

    /// Sum against `offset + sqrt(radicand)`.
    #[allow(clippy::too_many_arguments)]
    fn irrational_report(
        &self,
        g: &Graph,
        id: BoundId,
        ps: &PairSpectra,
        k: usize,
        offset: &BigRational,
        radicand: &BigRational,
        rel: Relation,
    ) -> BoundReport {
        let lhs = ps.sum(k);
        let rhs_value = offset.to_f64().unwrap() + radicand.to_f64().unwrap().sqrt();
        let d = self.decide(lhs, rhs_value, rel, || {
            interval_sign(&[ps.graph.exact_kth(k).clone(), ps.complement.exact_kth(k).clone()], offset, radicand)
        });
        BoundReport {
            graph6: to_graph6(g),
            bound: id.report_name().to_string(),
            relation: rel,
            lhs,
            lhs_exact: None,
            rhs: format!("{offset}+sqrt({radicand})"),
            rhs_value,
            verdict: d.verdict,
            certified: d.certified,
            family: None,
            notes: Vec::new(),
        }
    }

    /// `q1(G) + q1(Ḡ) <= 3n - 4`, equality iff `G` or `Ḡ` is a star.
    pub fn q1_sum(&self, g: &Graph) -> BoundReport {
        let n = g.order();
        let id = BoundId::Q1Sum;
        if n < 2 {
            return na(g, id, Relation::AtMost, "requires n >= 2");
        }
        let ps = PairSpectra::q(g);
        let rep = self.sum_report(&ps, id.report_name(), 1, &rat(3 * n as i64 - 4), Relation::AtMost);
        let star = Graph::star(n).expect("order within capacity");
        let members = [
            FamilyMember { name: "K_{1,n-1}".into(), graph: star },
            FamilyMember { name: "K_{n-1}∪K_1".into(), graph: star.complement() },
        ];
        classify(rep, g, &members)
    }

    /// `λ2(G) + λ2(Ḡ) <= -1 + sqrt(n²/2 - n + 1)`.
    pub fn lambda2(&self, g: &Graph) -> BoundReport {
        let n = g.order() as i64;
        let id = BoundId::Lambda2;
        if n < 2 {
            return na(g, id, Relation::AtMost, "requires n >= 2");
        }
        let ps = PairSpectra::new(g, MatrixKind::Adjacency);
        let radicand = ratio(n * n - 2 * n + 2, 2);
        self.irrational_report(g, id, &ps, 2, &rat(-1), &radicand, Relation::AtMost)
    }

    /// `μ1(G) + μ1(Ḡ) <= 2n - 1`, the complement form of the Laplacian
    /// spread bound; equality iff `G` or `Ḡ` is a cone over a disconnected
    /// graph.
    pub fn laplacian_spread(&self, g: &Graph) -> BoundReport {
        let n = g.order();
        let id = BoundId::LaplacianSpread;
        if n < 2 {
            return na(g, id, Relation::AtMost, "requires n >= 2");
        }
        let ps = PairSpectra::new(g, MatrixKind::Laplacian);
        let mut rep = self.sum_report(&ps, id.report_name(), 1, &rat(2 * n as i64 - 1), Relation::AtMost);
        let cone = |h: &Graph| {
            (0..n).any(|v| {
                h.degree(v) == n - 1 && {
                    let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                    !is_connected(&h.induced_subgraph(&rest).expect("subset of vertices"))
                }
            })
        };
        let structural = cone(g) || cone(&g.complement());
        let equal = rep.verdict == Verdict::EqualityCertified;
        if rep.verdict != Verdict::Violated && equal != structural {
            rep.verdict = Verdict::Violated;
            rep.notes.push(format!("equality {equal} but cone over a disconnected graph {structural}"));
        }
        rep
    }

    /// Generic `x_k(G) + x_k(Ḡ)`; known bounds are applied, other
    /// combinations only report the value.
    pub fn ng(&self, g: &Graph, opts: NgOptions) -> BoundReport {
        let n = g.order();
        let id = BoundId::Ng;
        if opts.k == 0 || opts.k > n || opts.kind == MatrixKind::Quotient {
            return na(g, id, Relation::AtMost, "index out of range or unsupported matrix kind");
        }
        let mut rep = match (opts.kind, opts.k) {
            (MatrixKind::SignlessLaplacian, 1) => self.q1_sum(g),
            (MatrixKind::SignlessLaplacian, 2) if n >= 6 && is_connected(g) => self.problem12(g),
            (MatrixKind::SignlessLaplacian, 2) if n >= 4 => self.thm12(g),
            (MatrixKind::Adjacency, 2) => self.lambda2(g),
            (MatrixKind::Laplacian, 1) => self.laplacian_spread(g),
            _ => {
                let ps = PairSpectra::new(g, opts.kind);
                let mut rep = na(g, id, Relation::AtMost, "no bound known for this matrix kind and index");
                rep.lhs = ps.sum(opts.k);
                rep
            }
        };
        rep.notes.insert(0, format!("{}-{} sum via {}", opts.kind.symbol(), opts.k, rep.bound));
        rep.bound = id.report_name().to_string();
        rep
    }

    /// `q1(G) <= max_u d(u) + (1/d(u)) Σ_{v~u} d(v)`; equality iff regular
    /// or semiregular bipartite.
    pub fn lemma26(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Lemma26;
        if g.order() < 2 || !is_connected(g) {
            return na(g, id, Relation::AtMost, "requires a connected graph with n >= 2");
        }
        let rhs = (0..g.order())
            .map(|u| {
                let du = g.degree(u) as i64;
                let s: i64 = (0..g.order()).filter(|&v| g.has_edge(u, v)).map(|v| g.degree(v) as i64).sum();
                rat(du) + ratio(s, du)
            })
            .max()
            .expect("nonempty graph");
        let gs = GraphSpectra::q(*g);
        let mut rep =
            self.value_report(g, id.report_name(), gs.kth(1), || gs.exact_kth(1).clone(), &rhs, Relation::AtMost);
        let structural = is_regular_or_semiregular_bipartite(g);
        let equal = rep.verdict == Verdict::EqualityCertified;
        if rep.verdict != Verdict::Violated && equal != structural {
            rep.verdict = Verdict::Violated;
            rep.notes.push(format!("equality {equal} but regular or semiregular bipartite {structural}"));
        }
        rep
    }

    /// `q1(G + uv) > q1(G)` for a connected graph and a non-edge.
    pub fn lemma27(&self, g: &Graph, u: usize, v: usize) -> Result<BoundReport> {
        let h = g.with_edge(u, v)?;
        if g.has_edge(u, v) || !is_connected(g) {
            return Err(Error::InvalidParameter("requires a connected graph and a non-edge".into()));
        }
        let (a, b) = (GraphSpectra::q(h), GraphSpectra::q(*g));
        let (lhs, rhs_value) = (a.kth(1), b.kth(1));
        let d = self
            .decide(lhs, rhs_value, Relation::Above, || Some(ordering_sign(a.exact_kth(1).cmp_exact(b.exact_kth(1)))));
        Ok(BoundReport {
            graph6: to_graph6(g),
            bound: "lemma2.7".to_string(),
            relation: Relation::Above,
            lhs,
            lhs_exact: None,
            rhs: format!("q1 = {rhs_value:.12}"),
            rhs_value,
            verdict: d.verdict,
            certified: d.certified,
            family: None,
            notes: vec![format!("added edge {u}-{v}")],
        })
    }

    /// `q2(G) <= n - 2`; equality iff `Ḡ` has a balanced bipartite component
    /// or at least two bipartite components.
    pub fn lemma28(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Lemma28;
        let n = g.order();
        if n < 2 {
            return na(g, id, Relation::AtMost, "requires n >= 2");
        }
        let gs = GraphSpectra::q(*g);
        let mut rep = self.value_report(
            g,
            id.report_name(),
            gs.kth(2),
            || gs.exact_kth(2).clone(),
            &rat(n as i64 - 2),
            Relation::AtMost,
        );
        let co = g.complement();
        let structural = is_balanced_bipartite_component_present(&co) || count_bipartite_components(&co) >= 2;
        let equal = rep.verdict == Verdict::EqualityCertified;
        if rep.verdict != Verdict::Violated && equal != structural {
            rep.verdict = Verdict::Violated;
            rep.notes.push(format!("equality {equal} but complement condition {structural}"));
        }
        rep
    }

    /// `q2(G) >= d2 - 1`; at equality the two largest degrees agree and
    /// maximum-degree vertices are adjacent.
    pub fn lemma29(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Lemma29;
        let n = g.order();
        if n < 2 {
            return na(g, id, Relation::AtLeast, "requires n >= 2");
        }
        let degrees = g.degree_sequence();
        let (d1, d2) = (degrees[0], degrees[1]);
        let gs = GraphSpectra::q(*g);
        let mut rep = self.value_report(
            g,
            id.report_name(),
            gs.kth(2),
            || gs.exact_kth(2).clone(),
            &rat(d2 as i64 - 1),
            Relation::AtLeast,
        );
        if rep.verdict == Verdict::EqualityCertified {
            let top: Vec<usize> = (0..n).filter(|&v| g.degree(v) == d1).collect();
            let adjacent = top.iter().any(|&a| top.iter().any(|&b| g.has_edge(a, b)));
            if d1 != d2 || !adjacent {
                rep.verdict = Verdict::Violated;
                rep.notes.push(format!("equality with d1={d1}, d2={d2}, adjacent maxima {adjacent}"));
            }
        }
        rep
    }

    /// `qn(G) >= 2m/(n-2) - n + 1` for `n >= 6`.
    pub fn lemma210(&self, g: &Graph) -> BoundReport {
        let id = BoundId::Lemma210;
        let n = g.order() as i64;
        if n < 6 {
            return na(g, id, Relation::AtLeast, "requires n >= 6");
        }
        let rhs = ratio(2 * g.size() as i64, n - 2) - rat(n - 1);
        let gs = GraphSpectra::q(*g);
        let last = g.order();
        self.value_report(g, id.report_name(), gs.kth(last), || gs.exact_kth(last).clone(), &rhs, Relation::AtLeast)
    }

    pub fn check(&self, g: &Graph, id: BoundId, ng: NgOptions) -> BoundReport {
        match id {
            BoundId::Thm12 => self.thm12(g),
            BoundId::Thm13 => self.thm13(g),
            BoundId::Thm14 => self.thm14(g),
            BoundId::Thm15 => self.thm15(g),
            BoundId::Thm16 => self.thm16(g),
            BoundId::Problem12 => self.problem12(g),
            BoundId::Regular => self.regular_bound(g),
            BoundId::Lemma26 => self.lemma26(g),
            BoundId::Lemma28 => self.lemma28(g),
            BoundId::Lemma29 => self.lemma29(g),
            BoundId::Lemma210 => self.lemma210(g),
            BoundId::Q1Sum => self.q1_sum(g),
            BoundId::Lambda2 => self.lambda2(g),
            BoundId::LaplacianSpread => self.laplacian_spread(g),
            BoundId::Ng => self.ng(g, ng),
        }
    }
}

/// Runs one bound with the default screening tolerance.
pub fn check(g: &Graph, id: BoundId, ng: NgOptions) -> BoundReport {
    Checker::default().check(g, id, ng)
}

pub fn check_thm12(g: &Graph) -> BoundReport {
    Checker::default().thm12(g)
}

pub fn check_thm13(g: &Graph) -> BoundReport {
    Checker::default().thm13(g)
}

pub fn check_thm14(g: &Graph) -> BoundReport {
    Checker::default().thm14(g)
}

pub fn check_thm15(g: &Graph) -> BoundReport {
    Checker::default().thm15(g)
}

pub fn check_thm16(g: &Graph) -> BoundReport {
    Checker::default().thm16(g)
}

pub fn check_problem12(g: &Graph) -> BoundReport {
    Checker::default().problem12(g)
}

pub fn check_regular_bound(g: &Graph) -> BoundReport {
    Checker::default().regular_bound(g)
}

pub fn check_lemma26(g: &Graph) -> BoundReport {
    Checker::default().lemma26(g)
}

pub fn check_lemma27(g: &Graph, u: usize, v: usize) -> Result<BoundReport> {
    Checker::default().lemma27(g, u, v)
}

pub fn check_lemma28(g: &Graph) -> BoundReport {
    Checker::default().lemma28(g)
}

pub fn check_lemma29(g: &Graph) -> BoundReport {
    Checker::default().lemma29(g)
}

pub fn check_lemma210(g: &Graph) -> BoundReport {
    Checker::default().lemma210(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_family;

    fn fam(s: &str) -> Graph {
        parse_family(s).unwrap()
    }

    fn verdict(r: &BoundReport) -> Verdict {
        assert!(!r.is_violation(), "{}", r.text_line());
        r.verdict
    }

    #[test]
    fn lower_bound_examples() {
        let r = check_thm12(&fam("star 6"));
        assert_eq!(verdict(&r), Verdict::EqualityCertified);
        assert_eq!(r.family_name(), "K_{1,n-1}");
        let r = check_thm12(&fam("join(E2, K4)"));
        assert_eq!(r.family_name(), "(2K_1)∇K_{n-2}");
        assert_eq!(verdict(&check_thm12(&fam("C5"))), Verdict::Strict);
        assert_eq!(verdict(&check_thm12(&fam("K3"))), Verdict::NotApplicable);
    }

    #[test]
    fn witness_maps_edges() {
        let g = fam("star 7").relabel(&[3, 1, 4, 0, 5, 2, 6]).unwrap();
        let r = check_thm12(&g);
        let c = r.family.unwrap();
        let member = lower_bound_families(7).into_iter().find(|m| m.name == c.family).unwrap();
        assert!(g.is_isomorphism(&member.graph, &c.witness));
    }

    #[test]
    fn connected_upper_examples() {
        let r = check_thm13(&fam("C4"));
        assert_eq!((verdict(&r), r.family_name()), (Verdict::EqualityCertified, "C_4"));
        assert_eq!(verdict(&check_thm13(&fam("K2"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_thm13(&fam("P5"))), Verdict::Strict);
        assert_eq!(verdict(&check_thm13(&fam("union(K2, K1)"))), Verdict::NotApplicable);
    }

    #[test]
    fn problem_examples() {
        assert_eq!(verdict(&check_problem12(&fam("K3,3"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_problem12(&fam("C6"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_problem12(&fam("K6"))), Verdict::Strict);
    }

    #[test]
    fn disconnected_complement_examples() {
        let r = check_thm14(&fam("join(union(K2,K2), E3)"));
        assert_eq!(verdict(&r), Verdict::EqualityCertified);
        assert_eq!(r.lhs_exact.as_deref(), Some("9"));
        assert_eq!(verdict(&check_thm14(&fam("join(union(K2,K3), K1)"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_thm14(&fam("join(K1, union(K4,K1))"))), Verdict::Strict);
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(verdict(&check_thm15(&fam("K3,3"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_thm15(&fam("H 3 0 1"))), Verdict::Strict);
        // q2(P6) = 2 + 2cos(pi/3) = 3; the alternating vector is orthogonal to 1
        // with Q-eigenvalue 0, so Q(co P6) = 4I + J - Q(P6) has eigenvalue 4.
        let p6 = fam("P6");
        let rep = check_thm15(&p6);
        assert_eq!(verdict(&rep), Verdict::EqualityCertified);
        let alt: Vec<f64> = (0..6).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let q = crate::spectra::q_matrix(&p6.complement()).matrix().to_f64_rows();
        for (row, x) in q.iter().zip(&alt) {
            let y: f64 = row.iter().zip(&alt).map(|(a, b)| a * b).sum();
            assert!((y - 4.0 * x).abs() < 1e-12);
        }
    }

    #[test]
    fn hypothesis_on_q2() {
        assert_eq!(verdict(&check_thm16(&fam("K3,3"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_thm16(&fam("C6"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_thm16(&fam("K6"))), Verdict::NotApplicable);
    }

    #[test]
    fn regular_examples() {
        let r = check_regular_bound(&fam("C6"));
        assert_eq!(verdict(&r), Verdict::Strict);
        assert!((r.rhs_value - (4.0 + 14.4f64.sqrt())).abs() < 1e-12);
        assert!((r.lhs - 7.0).abs() < 1e-9);
        assert_eq!(verdict(&check_regular_bound(&fam("petersen"))), Verdict::Strict);
        assert_eq!(verdict(&check_regular_bound(&fam("K6"))), Verdict::NotApplicable);
    }

    #[test]
    fn lemma_examples() {
        let r = check_lemma28(&fam("co(union(K2, E4))"));
        assert_eq!(verdict(&r), Verdict::EqualityCertified);
        let r = check_lemma29(&fam("union(K5, K1)"));
        assert_eq!(verdict(&r), Verdict::EqualityCertified);
        let r = check_lemma210(&fam("K6"));
        assert_eq!(verdict(&r), Verdict::Strict);
        assert!((r.rhs_value - 2.5).abs() < 1e-12);
        assert_eq!(verdict(&check_lemma26(&fam("K3,3"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&check_lemma26(&fam("P4"))), Verdict::Strict);
        assert_eq!(verdict(&check_lemma27(&fam("P4"), 0, 3).unwrap()), Verdict::Strict);
    }

    #[test]
    fn other_sums() {
        let c = Checker::default();
        assert_eq!(verdict(&c.q1_sum(&fam("star 6"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&c.q1_sum(&fam("C6"))), Verdict::Strict);
        assert_eq!(verdict(&c.laplacian_spread(&fam("star 5"))), Verdict::EqualityCertified);
        assert_eq!(verdict(&c.laplacian_spread(&fam("C5"))), Verdict::Strict);
        assert_eq!(verdict(&c.lambda2(&fam("C5"))), Verdict::Strict);
        let r = c.ng(&fam("P4"), NgOptions { kind: MatrixKind::Adjacency, k: 3 });
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(r.lhs.is_finite());
    }

    #[test]
    fn names_parse() {
        for id in BoundId::ALL {
            assert_eq!(id.cli_name().parse::<BoundId>().unwrap(), id);
            assert_eq!(id.report_name().parse::<BoundId>().unwrap(), id);
        }
        assert!("1.9".parse::<BoundId>().is_err());
    }
}
