use num_rational::BigRational;

use super::{char_poly_exact, graph_matrix_of, graph_spectrum, MatrixKind, Spectrum};
use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_index(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.order() {
        return Err(Error::InvalidParameter(format!("eigenvalue index {k} out of range 1..={}", g.order())));
    }
    Ok(())
}

/// Proves `q_k(g) = r` from the characteristic polynomial alone: `r` must be a
/// root, fewer than `k` roots lie above it and at least `k` lie at or above it.
pub fn certify_qk(g: &Graph, k: usize, r: &BigRational) -> bool {
    if check_index(g, k).is_err() {
        return false;
    }
    let p = char_poly_exact(graph_matrix_of(g, MatrixKind::SignlessLaplacian).expect("graph matrix"));
    let at = p.multiplicity_at(r);
    if at == 0 {
        return false;
    }
    let above = p.count_above(r);
    above < k && above + at >= k
}

/// The `k`-th largest eigenvalue of the chosen graph matrix, exactly.
pub fn exact_qk(g: &Graph, kind: MatrixKind, k: usize) -> Result<AlgebraicReal> {
    check_index(g, k)?;
    let spec = char_poly_exact(graph_matrix_of(g, kind)?).spectrum();
    Ok(spec.kth(k).expect("symmetric matrices have real spectra").clone())
}

/// A Nordhaus–Gaddum sum `x_k(G) + x_k(Ḡ)` with both terms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NgSum {
    pub graph: f64,
    pub complement: f64,
}

impl NgSum {
    pub fn total(&self) -> f64 {
        self.graph + self.complement
    }
}

pub fn ng_sum_from(g_spec: &Spectrum, co_spec: &Spectrum, k: usize) -> Option<NgSum> {
    Some(NgSum { graph: g_spec.kth(k)?, complement: co_spec.kth(k)? })
}

/// `x_k(G) + x_k(Ḡ)` in floating point for the chosen matrix kind.
pub fn ng_sum(g: &Graph, kind: MatrixKind, k: usize) -> Result<f64> {
    check_index(g, k)?;
    if kind == MatrixKind::Quotient {
        return Err(Error::InvalidParameter("a quotient matrix needs a partition".into()));
    }
    let a = graph_spectrum(g, kind);
    let b = graph_spectrum(&g.complement(), kind);
    Ok(ng_sum_from(&a, &b, k).expect("index checked").total())
}

/// Both terms of the sum as exact algebraic numbers.
pub fn exact_ng_sum(g: &Graph, kind: MatrixKind, k: usize) -> Result<(AlgebraicReal, AlgebraicReal)> {
    Ok((exact_qk(g, kind, k)?, exact_qk(&g.complement(), kind, k)?))
}
