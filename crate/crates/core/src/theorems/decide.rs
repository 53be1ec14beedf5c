//! Float screening with exact escalation.

use std::cell::OnceCell;
use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::proofs::QuadNumber;
use super::report::{BoundReport, Relation, Verdict};
use crate::algebraic::AlgebraicReal;
use crate::graph::{to_graph6, Graph};
use crate::poly::{rat, Poly, SturmSequence};
use crate::spectra::{
    char_poly_exact, graph_matrix_of, graph_spectrum, screening_tolerance, ExactSpectrum, MatrixKind, Spectrum,
    ESCALATION_WINDOW,
};

/// Float and (lazily) exact spectrum of one graph matrix.
pub struct GraphSpectra {
    pub graph: Graph,
    pub kind: MatrixKind,
    pub float: Spectrum,
    exact: OnceCell<ExactSpectrum>,
}

impl GraphSpectra {
    pub fn new(graph: Graph, kind: MatrixKind) -> Self {
        let float = graph_spectrum(&graph, kind);
        GraphSpectra { graph, kind, float, exact: OnceCell::new() }
    }

    pub fn q(graph: Graph) -> Self {
        Self::new(graph, MatrixKind::SignlessLaplacian)
    }

    pub fn exact(&self) -> &ExactSpectrum {
        self.exact.get_or_init(|| {
            char_poly_exact(graph_matrix_of(&self.graph, self.kind).expect("graph matrix kinds only")).spectrum()
        })
    }

    /// `k`-th largest, 1-based.
    pub fn kth(&self, k: usize) -> f64 {
        self.float.kth(k).expect("index within order")
    }

    pub fn exact_kth(&self, k: usize) -> &AlgebraicReal {
        self.exact().kth(k).expect("index within order")
    }
}

/// Spectra of a graph and its complement.
pub struct PairSpectra {
    pub graph: GraphSpectra,
    pub complement: GraphSpectra,
}

impl PairSpectra {
    pub fn new(g: &Graph, kind: MatrixKind) -> Self {
        PairSpectra { graph: GraphSpectra::new(*g, kind), complement: GraphSpectra::new(g.complement(), kind) }
    }

    pub fn q(g: &Graph) -> Self {
        Self::new(g, MatrixKind::SignlessLaplacian)
    }

    pub fn order(&self) -> usize {
        self.graph.graph.order()
    }

    pub fn sum(&self, k: usize) -> f64 {
        self.graph.kth(k) + self.complement.kth(k)
    }

    /// Sign of `x_k(G) + x_k(Ḡ) - r`, exactly.
    pub fn exact_sum_sign(&self, k: usize, r: &BigRational) -> i32 {
        ordering_sign(self.graph.exact_kth(k).sum_cmp_rational(self.complement.exact_kth(k), r))
    }
}

pub fn ordering_sign(o: Ordering) -> i32 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Sign of `Σ terms - offset - sqrt(radicand)`, decided by refining
/// isolating intervals. Equality is recognised through the polynomial whose
/// roots are all sums of conjugates of the terms: when it vanishes at
/// `offset + sqrt(radicand)` and has a single root in the refined interval
/// of the sum, the two sides coincide. `None` when the budget runs out.
pub fn interval_sign(terms: &[AlgebraicReal], offset: &BigRational, radicand: &BigRational) -> Option<i32> {
    let mut terms: Vec<AlgebraicReal> = terms.to_vec();
    let mut width = BigRational::new(1.into(), 1024.into());
    let mut candidate: Option<Option<SturmSequence>> = None;
    for _ in 0..64 {
        for t in terms.iter_mut() {
            t.refine_to(&width);
        }
        let (mut lo, mut hi) = (-offset.clone(), -offset.clone());
        for t in &terms {
            let (a, b) = t.bounds();
            lo += a;
            hi += b;
        }
        // compare [lo, hi] with sqrt(radicand) >= 0
        if hi.is_negative() {
            return Some(-1);
        }
        if !lo.is_negative() {
            if &(&lo * &lo) > radicand {
                return Some(1);
            }
            if &(&hi * &hi) < radicand {
                return Some(-1);
            }
            if lo == hi && &(&lo * &lo) == radicand {
                return Some(0);
            }
        }
        let chain = candidate.get_or_insert_with(|| equality_chain(&terms, offset, radicand));
        if let Some(chain) = chain {
            let above_lo = lo.is_negative() || &(&lo * &lo) < radicand;
            let below_hi = &(&hi * &hi) >= radicand;
            if above_lo && below_hi && chain.count(&(&lo + offset), &(&hi + offset)) == 1 {
                return Some(0);
            }
        }
        width /= rat(1 << 16);
    }
    None
}

/// Sturm chain of the square-free sum polynomial of `terms`, when that
/// polynomial vanishes at `offset + sqrt(radicand)`.
fn equality_chain(terms: &[AlgebraicReal], offset: &BigRational, radicand: &BigRational) -> Option<SturmSequence> {
    let mut sums = Poly::one();
    for t in terms {
        let p = match t {
            AlgebraicReal::Rational(r) => Poly::linear_root(r),
            AlgebraicReal::Isolated { poly, .. } => (**poly).clone(),
        };
        sums = if sums.degree() == Some(0) { p } else { sums.root_sums(&p) };
    }
    let sums = sums.squarefree_part();
    let target = QuadNumber::new(offset.clone(), BigRational::one(), radicand.clone());
    target.eval(&sums).is_zero().then(|| SturmSequence::new(&sums))
}

/// Outcome of comparing a left-hand side with a bound.
pub struct Decision {
    pub verdict: Verdict,
    pub certified: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct Checker {
    pub tol: f64,
}

impl Default for Checker {
    fn default() -> Self {
        Checker { tol: screening_tolerance() }
    }
}

impl Checker {
    pub fn new(tol: f64) -> Self {
        Checker { tol }
    }

    pub fn window(&self) -> f64 {
        ESCALATION_WINDOW.max(self.tol)
    }

    /// Screens `lhs rel rhs` in floating point; near equality or on an
    /// apparent violation the exact sign of `lhs - rhs` decides.
    pub fn decide(&self, lhs: f64, rhs: f64, rel: Relation, exact_sign: impl FnOnce() -> Option<i32>) -> Decision {
        let diff = lhs - rhs;
        let float_sign = if diff > self.tol {
            1
        } else if diff < -self.tol {
            -1
        } else {
            0
        };
        if diff.abs() > self.window() && rel.allows(float_sign) {
            return Decision { verdict: Verdict::Strict, certified: false };
        }
        match exact_sign() {
            Some(s) => {
                let verdict = if !rel.allows(s) {
                    Verdict::Violated
                } else if s == 0 {
                    Verdict::EqualityCertified
                } else {
                    Verdict::Strict
                };
                Decision { verdict, certified: true }
            }
            None => {
                let verdict =
                    if rel.allows(float_sign) && float_sign != 0 { Verdict::Strict } else { Verdict::Violated };
                Decision { verdict, certified: false }
            }
        }
    }

    /// Report for `x_k(G) + x_k(Ḡ) rel r` with a rational bound.
    pub fn sum_report(&self, ps: &PairSpectra, bound: &str, k: usize, r: &BigRational, rel: Relation) -> BoundReport {
        let lhs = ps.sum(k);
        let rhs_value = r.to_f64().unwrap();
        let d = self.decide(lhs, rhs_value, rel, || Some(ps.exact_sum_sign(k, r)));
        let lhs_exact = d.certified.then(|| {
            if d.verdict == Verdict::EqualityCertified {
                r.to_string()
            } else {
                format!("{} + {}", ps.graph.exact_kth(k), ps.complement.exact_kth(k))
            }
        });
        BoundReport {
            graph6: to_graph6(&ps.graph.graph),
            bound: bound.to_string(),
            relation: rel,
            lhs,
            lhs_exact,
            rhs: r.to_string(),
            rhs_value,
            verdict: d.verdict,
            certified: d.certified,
            family: None,
            notes: Vec::new(),
        }
    }

    /// Report for a single exact quantity against a rational bound.
    pub fn value_report(
        &self,
        g: &Graph,
        bound: &str,
        lhs: f64,
        exact: impl FnOnce() -> AlgebraicReal,
        r: &BigRational,
        rel: Relation,
    ) -> BoundReport {
        let rhs_value = r.to_f64().unwrap();
        let mut shown = None;
        let d = self.decide(lhs, rhs_value, rel, || {
            let x = exact();
            let s = ordering_sign(x.cmp_rational(r));
            shown = Some(x.to_string());
            Some(s)
        });
        BoundReport {
            graph6: to_graph6(g),
            bound: bound.to_string(),
            relation: rel,
            lhs,
            lhs_exact: shown,
            rhs: r.to_string(),
            rhs_value,
            verdict: d.verdict,
            certified: d.certified,
            family: None,
            notes: Vec::new(),
        }
    }
}
