//! Vertex partitions, signless Laplacian quotient matrices, equitability,
//! interlacing and block blow-ups.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::graph::{Graph, HFamilyParams};
use crate::poly::rat;
use crate::spectra::{char_poly_exact, eigenvalues_f64, q_matrix, CharPoly, ExactSpectrum, Spectrum, SquareMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Blocks must be nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} outside 0..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(VertexPartition { blocks })
    }

    pub fn single_block(n: usize) -> Self {
        VertexPartition { blocks: vec![(0..n).collect()] }
    }

    pub fn discrete(n: usize) -> Self {
        VertexPartition { blocks: (0..n).map(|v| vec![v]).collect() }
    }

    /// Partition from a block label per vertex; labels are renumbered in
    /// order of first appearance.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, l) in labels.iter().enumerate() {
            let next = index.len();
            let b = *index.entry(*l).or_insert(next);
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(v);
        }
        VertexPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

fn q_entry(g: &Graph, u: usize, v: usize) -> i64 {
    if u == v {
        g.degree(u) as i64
    } else {
        g.has_edge(u, v) as i64
    }
}

/// Sum of the Q-entries from vertex `u` into `block`.
fn row_sum_into(g: &Graph, u: usize, block: &[usize]) -> i64 {
    block.iter().map(|&v| q_entry(g, u, v)).sum()
}

fn check_fits(g: &Graph, p: &VertexPartition) -> Result<()> {
    if p.order() != g.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices but the graph has {}",
            p.order(),
            g.order()
        )));
    }
    Ok(())
}

/// Block-averaged signless Laplacian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    matrix: SquareMatrix,
    sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// From block sums `W` (symmetric) and block sizes: `b_ij = W_ij / |X_i|`.
    fn from_block_sums(sums: &[Vec<i64>], sizes: Vec<usize>) -> Result<Self> {
        let m = sizes.len();
        let entries = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| BigRational::new(sums[i][j].into(), (sizes[i] as i64).into()))
            .collect();
        Ok(QuotientMatrix { matrix: SquareMatrix::new(m, entries)?, sizes })
    }

    pub fn order(&self) -> usize {
        self.sizes.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        self.matrix.get(i, j)
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `b_ij |X_i| = b_ji |X_j|` for all pairs.
    pub fn is_weighted_symmetric(&self) -> bool {
        let m = self.order();
        (0..m).all(|i| {
            (0..m).all(|j| self.get(i, j) * rat(self.sizes[i] as i64) == self.get(j, i) * rat(self.sizes[j] as i64))
        })
    }

    pub fn char_poly(&self) -> CharPoly {
        char_poly_exact(&self.matrix)
    }

    /// Floating-point eigenvalues via the similar symmetric matrix
    /// `D^{1/2} B D^{-1/2}`.
    pub fn spectrum(&self) -> Spectrum {
        let m = self.order();
        let rows: Vec<Vec<f64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let w = self.get(i, j).to_f64().unwrap() * self.sizes[i] as f64;
                        w / ((self.sizes[i] * self.sizes[j]) as f64).sqrt()
                    })
                    .collect()
            })
            .collect();
        let sym: Vec<Vec<f64>> =
            (0..m).map(|i| (0..m).map(|j| if j < i { rows[j][i] } else { rows[i][j] }).collect()).collect();
        let values = eigenvalues_f64(&sym).expect("symmetrized by construction");
        Spectrum::new(values, crate::spectra::MatrixKind::Quotient, crate::spectra::screening_tolerance())
    }

    pub fn rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        let m = self.order();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| self.get(i, j).is_integer().then(|| self.get(i, j).to_integer().to_i64()).flatten())
                    .collect()
            })
            .collect()
    }
}

pub fn quotient_matrix(g: &Graph, p: &VertexPartition) -> Result<QuotientMatrix> {
    check_fits(g, p)?;
    let sums: Vec<Vec<i64>> = p
        .blocks()
        .iter()
        .map(|bi| p.blocks().iter().map(|bj| bi.iter().map(|&u| row_sum_into(g, u, bj)).sum()).collect())
        .collect();
    QuotientMatrix::from_block_sums(&sums, p.sizes())
}

/// Whether every vertex of a block has the same Q-row sum into each block.
pub fn is_equitable(g: &Graph, p: &VertexPartition) -> Result<bool> {
    check_fits(g, p)?;
    Ok(p.blocks().iter().all(|bi| {
        p.blocks().iter().all(|bj| {
            let first = row_sum_into(g, bi[0], bj);
            bi[1..].iter().all(|&u| row_sum_into(g, u, bj) == first)
        })
    }))
}

/// Exact check that the quotient's characteristic polynomial divides that of
/// Q(g). Fails with [`Error::NotEquitable`] on a non-equitable partition.
pub fn verify_quotient_eigen_containment(g: &Graph, p: &VertexPartition) -> Result<bool> {
    if !is_equitable(g, p)? {
        return Err(Error::NotEquitable);
    }
    let b = quotient_matrix(g, p)?.char_poly();
    let q = char_poly_exact(q_matrix(g));
    Ok(q.poly().divisible_by(b.poly()))
}

/// Degree of gcd(φ(B), φ(Q)).
pub fn quotient_gcd_degree(g: &Graph, p: &VertexPartition) -> Result<usize> {
    let b = quotient_matrix(g, p)?.char_poly();
    let q = char_poly_exact(q_matrix(g));
    Ok(b.poly().gcd(q.poly()).degree().unwrap_or(0))
}

/// `big_i ≥ small_i ≥ big_{n-m+i}` within `tol`.
pub fn interlaces_with_tol(small: &[f64], big: &[f64], tol: f64) -> bool {
    let (m, n) = (small.len(), big.len());
    if m > n {
        return false;
    }
    (0..m).all(|i| big[i] >= small[i] - tol && small[i] >= big[n - m + i] - tol)
}

pub fn interlaces(small: &Spectrum, big: &Spectrum) -> bool {
    interlaces_with_tol(&small.values, &big.values, crate::spectra::DEFAULT_TOLERANCE)
}

/// Exact interlacing on spectra expanded by multiplicity.
pub fn interlaces_exact(small: &ExactSpectrum, big: &ExactSpectrum) -> bool {
    let (m, n) = (small.len(), big.len());
    if m > n {
        return false;
    }
    (1..=m).all(|i| {
        let s = small.kth(i).unwrap();
        big.kth(i).unwrap() >= s && s >= big.kth(n - m + i).unwrap()
    })
}

/// `q1(G) ≥ q1(H) ≥ q2(G) ≥ ... ≥ qn(G) ≥ qn(H)` for `H = G - e`.
pub fn edge_deletion_interlaces(g: &[f64], h: &[f64], tol: f64) -> bool {
    g.len() == h.len() && (0..g.len()).all(|i| g[i] >= h[i] - tol && (i + 1 == g.len() || h[i] >= g[i + 1] - tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DuplicateKind {
    Clique,
    Independent,
}

/// Vertices with identical neighborhoods outside the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicateClass {
    pub vertices: Vec<usize>,
    pub kind: DuplicateKind,
    pub degree: usize,
}

impl DuplicateClass {
    /// The Q-eigenvalue this class forces, and its guaranteed multiplicity.
    pub fn forced_eigenvalue(&self) -> (i64, usize) {
        let d = self.degree as i64;
        let value = match self.kind {
            DuplicateKind::Clique => d - 1,
            DuplicateKind::Independent => d,
        };
        (value, self.vertices.len() - 1)
    }
}

/// Maximal twin classes of size at least two. True twins (equal closed
/// neighborhoods) form cliques, false twins (equal open neighborhoods)
/// independent sets; no vertex has twins of both sorts.
pub fn duplicate_classes(g: &Graph) -> Vec<DuplicateClass> {
    let n = g.order();
    let mut out = Vec::new();
    let mut used = 0u32;
    for u in 0..n {
        if used >> u & 1 == 1 {
            continue;
        }
        let open = g.neighbors(u);
        let closed = open | 1 << u;
        let falses: Vec<usize> = (u..n).filter(|&v| g.neighbors(v) == open).collect();
        let trues: Vec<usize> = (u..n).filter(|&v| g.neighbors(v) | 1 << v == closed).collect();
        let (vertices, kind) = if falses.len() >= 2 {
            (falses, DuplicateKind::Independent)
        } else if trues.len() >= 2 {
            (trues, DuplicateKind::Clique)
        } else {
            continue;
        };
        for &v in &vertices {
            used |= 1 << v;
        }
        out.push(DuplicateClass { vertices, kind, degree: g.degree(u) });
    }
    out
}

/// A graph given by block sizes, which blocks are cliques, and which block
/// pairs are completely joined. Works for any total order, so it covers
/// parametric families beyond [`crate::graph::MAX_ORDER`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupPattern {
    labels: Vec<String>,
    sizes: Vec<usize>,
    cliques: Vec<bool>,
    links: Vec<Vec<bool>>,
}

impl BlowupPattern {
    pub fn new(labels: Vec<String>, sizes: Vec<usize>, cliques: Vec<bool>, links: Vec<Vec<bool>>) -> Result<Self> {
        let k = sizes.len();
        if labels.len() != k || cliques.len() != k || links.len() != k || links.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameter("pattern dimensions disagree".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("blocks must be nonempty".into()));
        }
        for i in 0..k {
            if links[i][i] {
                return Err(Error::InvalidParameter("a block cannot link to itself".into()));
            }
            for j in 0..i {
                if links[i][j] != links[j][i] {
                    return Err(Error::InvalidParameter("block links must be symmetric".into()));
                }
            }
        }
        Ok(BlowupPattern { labels, sizes, cliques, links })
    }

    /// `H(s0,s1,s2)` with blocks `S0, S1, S2, u, v`, empty blocks removed.
    pub fn h_family(p: HFamilyParams) -> Result<Self> {
        let all = [("S0", p.s0), ("S1", p.s1), ("S2", p.s2), ("u", 1), ("v", 1)];
        // S0 ~ u, v; S1 ~ u; S2 ~ v
        let adj = |a: usize, b: usize| matches!((a.min(b), a.max(b)), (0, 3) | (0, 4) | (1, 3) | (2, 4));
        let keep: Vec<usize> = (0..5).filter(|&i| all[i].1 > 0).collect();
        BlowupPattern::new(
            keep.iter().map(|&i| all[i].0.to_string()).collect(),
            keep.iter().map(|&i| all[i].1).collect(),
            vec![false; keep.len()],
            keep.iter().map(|&i| keep.iter().map(|&j| adj(i, j)).collect()).collect(),
        )
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn blocks(&self) -> usize {
        self.sizes.len()
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn complement(&self) -> BlowupPattern {
        let k = self.blocks();
        BlowupPattern {
            labels: self.labels.clone(),
            sizes: self.sizes.clone(),
            cliques: self.cliques.iter().map(|c| !c).collect(),
            links: (0..k).map(|i| (0..k).map(|j| i != j && !self.links[i][j]).collect()).collect(),
        }
    }

    /// Common degree of the vertices in block `i`.
    pub fn degree(&self, i: usize) -> usize {
        let inside = if self.cliques[i] { self.sizes[i] - 1 } else { 0 };
        inside + (0..self.blocks()).filter(|&j| self.links[i][j]).map(|j| self.sizes[j]).sum::<usize>()
    }

    /// Quotient of Q with respect to the blocks, computed from the pattern.
    pub fn quotient(&self) -> QuotientMatrix {
        let k = self.blocks();
        let sums: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let (si, sj) = (self.sizes[i] as i64, self.sizes[j] as i64);
                        if i == j {
                            let inner = if self.cliques[i] { si * (si - 1) } else { 0 };
                            si * self.degree(i) as i64 + inner
                        } else if self.links[i][j] {
                            si * sj
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        QuotientMatrix::from_block_sums(&sums, self.sizes.clone()).expect("nonempty pattern")
    }

    /// Eigenvalues carried by vectors summing to zero inside one block.
    pub fn twin_eigenvalues(&self) -> Vec<(BigRational, usize)> {
        (0..self.blocks())
            .filter(|&i| self.sizes[i] > 1)
            .map(|i| {
                let d = self.degree(i) as i64;
                let value = if self.cliques[i] { d - 1 } else { d };
                (rat(value), self.sizes[i] - 1)
            })
            .collect()
    }

    /// Full Q-spectrum: quotient roots plus twin eigenvalues.
    pub fn exact_spectrum(&self) -> ExactSpectrum {
        let quotient = self.quotient().char_poly().spectrum();
        let mut roots: Vec<(AlgebraicReal, usize)> = quotient.distinct().to_vec();
        roots.extend(self.twin_eigenvalues().into_iter().map(|(r, m)| (AlgebraicReal::Rational(r), m)));
        ExactSpectrum::from_roots(roots)
    }

    /// Vertices laid out block by block.
    pub fn graph(&self) -> Result<Graph> {
        let starts: Vec<usize> = self
            .sizes
            .iter()
            .scan(0, |acc, &s| {
                let st = *acc;
                *acc += s;
                Some(st)
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..self.blocks() {
            let bi = starts[i]..starts[i] + self.sizes[i];
            if self.cliques[i] {
                for a in bi.clone() {
                    for b in a + 1..bi.end {
                        edges.push((a, b));
                    }
                }
            }
            for j in i + 1..self.blocks() {
                if self.links[i][j] {
                    for a in bi.clone() {
                        for b in starts[j]..starts[j] + self.sizes[j] {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        Graph::from_edges(self.order(), &edges)
    }

    pub fn partition(&self) -> VertexPartition {
        let mut next = 0;
        let blocks = self
            .sizes
            .iter()
            .map(|&s| {
                let b: Vec<usize> = (next..next + s).collect();
                next += s;
                b
            })
            .collect();
        VertexPartition { blocks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{q_spectrum, MatrixKind};

    fn rows(q: &QuotientMatrix) -> Vec<Vec<i64>> {
        q.rows_i64().expect("integral quotient")
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1, 3], vec![2]]).is_err());
        let p = VertexPartition::from_labels(&[5, 2, 5, 7]);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn cone_quotients() {
        // apex joined to a (d2-1)-regular graph on n-2 vertices: [[n-2, n-2], [1, 2d2-1]]
        let bowtie = Graph::empty(1).unwrap().join(&Graph::complete(2).unwrap().copies(2).unwrap()).unwrap();
        let p = VertexPartition::new(5, vec![vec![0], (1..5).collect()]).unwrap();
        assert_eq!(rows(&quotient_matrix(&bowtie, &p).unwrap()), vec![vec![4, 4], vec![1, 3]]);
        let wheel = Graph::empty(1).unwrap().join(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(rows(&quotient_matrix(&wheel, &p).unwrap()), vec![vec![4, 4], vec![1, 5]]);
    }

    #[test]
    fn h_family_quotient_matches_pattern() {
        for n in 6..=12 {
            let params = HFamilyParams::new(n - 4, 1, 1);
            let g = Graph::h_graph(params).unwrap();
            let p = VertexPartition::new(n, params.blocks().to_vec()).unwrap();
            assert!(is_equitable(&g, &p).unwrap());
            let q = quotient_matrix(&g, &p).unwrap();
            let n = n as i64;
            assert_eq!(
                rows(&q),
                vec![
                    vec![2, 0, 0, 1, 1],
                    vec![0, 1, 0, 1, 0],
                    vec![0, 0, 1, 0, 1],
                    vec![n - 4, 1, 0, n - 3, 0],
                    vec![n - 4, 0, 1, 0, n - 3],
                ]
            );
            let pattern = BlowupPattern::h_family(params).unwrap();
            assert_eq!(pattern.quotient(), q);
            assert_eq!(pattern.graph().unwrap(), g);
            assert!(q.is_weighted_symmetric());
        }
    }

    #[test]
    fn single_block_average() {
        let g = Graph::petersen();
        let q = quotient_matrix(&g, &VertexPartition::single_block(10)).unwrap();
        assert_eq!(q.get(0, 0), &rat(4 * 15 / 10));
    }

    #[test]
    fn equitability() {
        let star = Graph::star(6).unwrap();
        let p = VertexPartition::new(6, vec![vec![0], (1..6).collect()]).unwrap();
        assert!(is_equitable(&star, &p).unwrap());
        assert!(verify_quotient_eigen_containment(&star, &p).unwrap());
        assert_eq!(rows(&quotient_matrix(&star, &p).unwrap()), vec![vec![5, 5], vec![1, 1]]);
        let p4 = Graph::path(4).unwrap();
        let p = VertexPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!is_equitable(&p4, &p).unwrap());
        assert_eq!(verify_quotient_eigen_containment(&p4, &p), Err(Error::NotEquitable));
        let h = Graph::h_graph(HFamilyParams::new(2, 1, 1)).unwrap();
        let p = VertexPartition::new(6, HFamilyParams::new(2, 1, 1).blocks().to_vec()).unwrap();
        assert_eq!(quotient_gcd_degree(&h, &p).unwrap(), 5);
        let k5 = Graph::complete(5).unwrap();
        let q = quotient_matrix(&k5, &VertexPartition::single_block(5)).unwrap();
        assert_eq!(q.get(0, 0), &rat(8));
    }

    #[test]
    fn interlacing_basics() {
        let c5 = q_spectrum(&Graph::cycle(5).unwrap());
        assert!(interlaces(&c5, &c5));
        let small = Spectrum::new(vec![10.0], MatrixKind::Quotient, 1e-9);
        let big = Spectrum::new(vec![5.0, 1.0], MatrixKind::Quotient, 1e-9);
        assert!(!interlaces(&small, &big));
        let sub = q_matrix(&Graph::cycle(5).unwrap()).matrix().principal_submatrix(&[0, 2]).unwrap();
        let sub_vals = eigenvalues_f64(&sub.to_f64_rows()).unwrap();
        assert!(interlaces_with_tol(&sub_vals, &c5.values, 1e-9));
    }

    #[test]
    fn quotient_spectrum_is_similar() {
        let star = Graph::star(6).unwrap();
        let p = VertexPartition::new(6, vec![vec![0], (1..6).collect()]).unwrap();
        let s = quotient_matrix(&star, &p).unwrap().spectrum();
        assert!((s.values[0] - 6.0).abs() < 1e-12 && s.values[1].abs() < 1e-12);
    }

    #[test]
    fn duplicates() {
        let star = Graph::star(6).unwrap();
        assert_eq!(
            duplicate_classes(&star),
            vec![DuplicateClass { vertices: vec![1, 2, 3, 4, 5], kind: DuplicateKind::Independent, degree: 1 }]
        );
        let g = Graph::empty(2).unwrap().join(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(
            duplicate_classes(&g),
            vec![
                DuplicateClass { vertices: vec![0, 1], kind: DuplicateKind::Independent, degree: 4 },
                DuplicateClass { vertices: vec![2, 3, 4, 5], kind: DuplicateKind::Clique, degree: 5 },
            ]
        );
        assert!(duplicate_classes(&Graph::cycle(5).unwrap()).is_empty());
    }

    #[test]
    fn blowup_spectrum_matches_graph() {
        let pattern = BlowupPattern::h_family(HFamilyParams::new(3, 0, 2)).unwrap();
        let g = pattern.graph().unwrap();
        let exact = pattern.exact_spectrum().to_f64();
        let float = q_spectrum(&g).values;
        assert_eq!(exact.len(), float.len());
        for (a, b) in exact.iter().zip(&float) {
            assert!((a - b).abs() < 1e-9);
        }
        let co = pattern.complement();
        let exact = co.exact_spectrum().to_f64();
        let float = q_spectrum(&g.complement()).values;
        for (a, b) in exact.iter().zip(&float) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}
