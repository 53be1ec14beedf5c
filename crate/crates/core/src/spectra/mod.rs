//! Graph matrices, floating-point spectra and exact characteristic polynomials.

mod certify;
mod charpoly;

pub use certify::{certify_qk, exact_ng_sum, exact_qk, ng_sum, ng_sum_from, NgSum};
pub use charpoly::{char_poly_exact, CharPoly, ExactSpectrum};

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::rat;

/// Default screening tolerance for floating-point inequalities.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Float comparisons closer than this to a bound are decided exactly.
pub const ESCALATION_WINDOW: f64 = 1e-6;

/// Screening tolerance, overridable through the `QNG_TOL` environment variable.
pub fn screening_tolerance() -> f64 {
    static TOL: OnceLock<f64> = OnceLock::new();
    *TOL.get_or_init(|| {
        std::env::var("QNG_TOL")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|t| t.is_finite() && *t > 0.0)
            .unwrap_or(DEFAULT_TOLERANCE)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "A")]
    Adjacency,
    #[serde(rename = "L")]
    Laplacian,
    #[serde(rename = "Q")]
    SignlessLaplacian,
    #[serde(rename = "quotient")]
    Quotient,
}

impl MatrixKind {
    pub fn symbol(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
            MatrixKind::Quotient => "B",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(MatrixKind::Adjacency),
            "L" | "l" => Ok(MatrixKind::Laplacian),
            "Q" | "q" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::InvalidParameter(format!("unknown matrix kind {other:?}, expected A, L or Q"))),
        }
    }
}

/// Square matrix with exact rational entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl SquareMatrix {
    pub fn new(order: usize, entries: Vec<BigRational>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::InvalidParameter(format!(
                "{} entries do not form a {order}x{order} matrix",
                entries.len()
            )));
        }
        Ok(SquareMatrix { order, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter("rows of unequal length".into()));
        }
        Self::new(order, rows.iter().flatten().map(|&x| rat(x)).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn trace(&self) -> BigRational {
        (0..self.order).map(|i| self.get(i, i).clone()).fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    pub fn principal_submatrix(&self, rows: &[usize]) -> Result<SquareMatrix> {
        if rows.is_empty() || rows.iter().any(|&r| r >= self.order) {
            return Err(Error::InvalidParameter("principal submatrix indices out of range".into()));
        }
        let entries = rows.iter().flat_map(|&i| rows.iter().map(move |&j| self.get(i, j).clone())).collect();
        SquareMatrix::new(rows.len(), entries)
    }

    pub fn add(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.order != other.order {
            return Err(Error::InvalidParameter("matrix orders differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        SquareMatrix::new(self.order, entries)
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A symmetric rational matrix tagged with what it represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    matrix: SquareMatrix,
    kind: MatrixKind,
}

impl SymMatrix {
    pub fn new(matrix: SquareMatrix, kind: MatrixKind) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymMatrix { matrix, kind })
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.matrix.order
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        self.matrix.get(i, j)
    }
}

fn graph_matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let n = g.order();
    let mut entries = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let v = graph_entry(g, kind, i, j);
            if v != 0 {
                entries[i * n + j] = rat(v);
            }
        }
    }
    SymMatrix { matrix: SquareMatrix { order: n, entries }, kind }
}

fn graph_entry(g: &Graph, kind: MatrixKind, i: usize, j: usize) -> i64 {
    if i == j {
        match kind {
            MatrixKind::Adjacency => 0,
            _ => g.degree(i) as i64,
        }
    } else if g.has_edge(i, j) {
        match kind {
            MatrixKind::Laplacian => -1,
            _ => 1,
        }
    } else {
        0
    }
}

pub fn q_matrix(g: &Graph) -> SymMatrix {
    graph_matrix(g, MatrixKind::SignlessLaplacian)
}

pub fn l_matrix(g: &Graph) -> SymMatrix {
    graph_matrix(g, MatrixKind::Laplacian)
}

pub fn a_matrix(g: &Graph) -> SymMatrix {
    graph_matrix(g, MatrixKind::Adjacency)
}

pub fn graph_matrix_of(g: &Graph, kind: MatrixKind) -> Result<SymMatrix> {
    match kind {
        MatrixKind::Quotient => Err(Error::InvalidParameter("a quotient matrix needs a partition".into())),
        k => Ok(graph_matrix(g, k)),
    }
}

/// Degree matrix as integers.
pub fn degree_diagonal(g: &Graph) -> Vec<i64> {
    (0..g.order()).map(|v| g.degree(v) as i64).collect()
}

/// Floating-point spectrum in descending order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub kind: MatrixKind,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, kind: MatrixKind, tolerance: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, kind, tolerance }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `k`-th largest value, 1-based.
    pub fn kth(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.values.last().unwrap()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

fn eigen_f64(order: usize, rows: impl Fn(usize, usize) -> f64) -> Vec<f64> {
    let m = DMatrix::from_fn(order, order, rows);
    SymmetricEigen::new(m).eigenvalues.iter().copied().collect()
}

pub fn eigenvalues_sym(m: &SymMatrix) -> Spectrum {
    let rows = m.matrix.to_f64_rows();
    let values = eigen_f64(m.order(), |i, j| rows[i][j]);
    Spectrum::new(values, m.kind, screening_tolerance())
}

/// Spectrum of a graph matrix without building the rational matrix.
pub fn graph_spectrum(g: &Graph, kind: MatrixKind) -> Spectrum {
    let values = eigen_f64(g.order(), |i, j| graph_entry(g, kind, i, j) as f64);
    Spectrum::new(values, kind, screening_tolerance())
}

pub fn q_spectrum(g: &Graph) -> Spectrum {
    graph_spectrum(g, MatrixKind::SignlessLaplacian)
}

/// Eigenvalues of a general symmetric `f64` matrix given as rows.
pub fn eigenvalues_f64(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    let k = rows.len();
    for i in 0..k {
        if rows[i].len() != k {
            return Err(Error::InvalidParameter("rows of unequal length".into()));
        }
        for j in 0..i {
            if rows[i][j] != rows[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut v = eigen_f64(k, |i, j| rows[i][j]);
    v.sort_by(|a, b| b.total_cmp(a));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(m: &SymMatrix) -> Vec<Vec<i64>> {
        m.matrix().to_f64_rows().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
    }

    #[test]
    fn small_q_matrices() {
        assert_eq!(ints(&q_matrix(&Graph::complete(2).unwrap())), vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(ints(&q_matrix(&Graph::path(3).unwrap())), vec![vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        assert_eq!(ints(&l_matrix(&Graph::complete(2).unwrap())), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(ints(&a_matrix(&Graph::complete(2).unwrap())), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn complement_sum_is_complete() {
        let g = Graph::cycle(5).unwrap().with_edge(0, 2).unwrap();
        let k = Graph::complete(5).unwrap();
        let sum = q_matrix(&g).matrix().add(q_matrix(&g.complement()).matrix()).unwrap();
        assert_eq!(&sum, q_matrix(&k).matrix());
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = q_spectrum(&Graph::complete(4).unwrap());
        let expect = [6.0, 2.0, 2.0, 2.0];
        for (a, b) in s.values.iter().zip(expect) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn path_and_star_second_values() {
        let p4 = q_spectrum(&Graph::path(4).unwrap());
        assert!((p4.kth(2).unwrap() - 2.0).abs() < 1e-10);
        let star = q_spectrum(&Graph::star(6).unwrap());
        assert!((star.kth(2).unwrap() - 1.0).abs() < 1e-10);
        assert_eq!(star.kth(0), None);
        assert_eq!(star.kth(7), None);
    }

    #[test]
    fn asymmetric_rejected() {
        let m = SquareMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(SymMatrix::new(m, MatrixKind::Quotient), Err(Error::NotSymmetric));
        assert!(eigenvalues_f64(&[vec![1.0, 2.0], vec![3.0, 4.0]]).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Q".parse::<MatrixKind>().unwrap(), MatrixKind::SignlessLaplacian);
        assert!("X".parse::<MatrixKind>().is_err());
    }
}
