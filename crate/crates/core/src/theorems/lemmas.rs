//! Structural eigenvalue facts checked on single graphs: Weyl sums,
//! interlacing, and forced multiplicities.

use std::cmp::Ordering;

use super::decide::{Checker, GraphSpectra};
use crate::error::Result;
use crate::graph::Graph;
use crate::partitions::{
    duplicate_classes, edge_deletion_interlaces, interlaces_exact, interlaces_with_tol, is_equitable, quotient_matrix,
    verify_quotient_eigen_containment, VertexPartition,
};
use crate::poly::rat;
use crate::spectra::{char_poly_exact, eigenvalues_f64, q_matrix, q_spectrum};

/// Failure description for a lemma that does not hold on a graph.
pub type LemmaResult = std::result::Result<(), String>;

/// Eigenvalues of `Q(K_n)`, 1-based descending.
fn complete_q(n: usize, k: usize) -> i64 {
    if k == 1 {
        2 * n as i64 - 2
    } else {
        n as i64 - 2
    }
}

impl Checker {
    /// Weyl's inequalities for `Q(G) + Q(Ḡ) = Q(K_n)` over all index pairs;
    /// sums within the escalation window are compared exactly.
    pub fn weyl(&self, g: &Graph) -> LemmaResult {
        let n = g.order();
        let a = GraphSpectra::q(*g);
        let b = GraphSpectra::q(g.complement());
        for i in 1..=n {
            for j in 1..=n {
                let mut bounds = Vec::new();
                if i + j > n {
                    bounds.push((complete_q(n, i + j - n), Ordering::Less));
                }
                if i + j <= n + 1 {
                    bounds.push((complete_q(n, i + j - 1), Ordering::Greater));
                }
                for (nu, forbidden) in bounds {
                    let diff = a.kth(i) + b.kth(j) - nu as f64;
                    let float_bad = match forbidden {
                        Ordering::Less => diff > self.tol,
                        _ => diff < -self.tol,
                    };
                    if !float_bad && diff.abs() > self.window() {
                        continue;
                    }
                    let exact = a.exact_kth(i).sum_cmp_rational(b.exact_kth(j), &rat(nu));
                    let bad = match forbidden {
                        Ordering::Less => exact == Ordering::Greater,
                        _ => exact == Ordering::Less,
                    };
                    if bad {
                        return Err(format!("q{i}(G) + q{j}(co G) vs {nu}: {exact:?}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Principal submatrix of `Q(G)` on `rows` interlaces `Q(G)`.
    pub fn principal_interlacing(&self, g: &Graph, rows: &[usize]) -> Result<LemmaResult> {
        let q = q_matrix(g);
        let sub = q.matrix().principal_submatrix(rows)?;
        let small = eigenvalues_f64(&sub.to_f64_rows())?;
        let big = q_spectrum(g);
        if interlaces_with_tol(&small, &big.values, self.tol) {
            return Ok(Ok(()));
        }
        let exact = interlaces_exact(&char_poly_exact(&sub).spectrum(), &char_poly_exact(&q).spectrum());
        Ok(if exact { Ok(()) } else { Err(format!("submatrix on {rows:?} does not interlace")) })
    }

    /// Quotient of `Q(G)` interlaces `Q(G)`; for an equitable partition its
    /// characteristic polynomial also divides that of `Q(G)`.
    pub fn quotient_interlacing(&self, g: &Graph, p: &VertexPartition) -> Result<LemmaResult> {
        let b = quotient_matrix(g, p)?;
        let big = q_spectrum(g);
        let small = b.spectrum();
        let ok = interlaces_with_tol(&small.values, &big.values, self.tol)
            || interlaces_exact(&b.char_poly().spectrum(), &char_poly_exact(q_matrix(g)).spectrum());
        if !ok {
            return Ok(Err(format!("quotient over {:?} does not interlace", p.blocks())));
        }
        if is_equitable(g, p)? && !verify_quotient_eigen_containment(g, p)? {
            return Ok(Err(format!("equitable quotient over {:?} not contained", p.blocks())));
        }
        Ok(Ok(()))
    }

    /// Deleting any single edge interlaces the Q-spectrum.
    pub fn edge_deletion(&self, g: &Graph) -> LemmaResult {
        let full = q_spectrum(g);
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v).expect("edge exists");
            let less = q_spectrum(&h);
            if edge_deletion_interlaces(&full.values, &less.values, self.tol) {
                continue;
            }
            let (a, b) = (char_poly_exact(q_matrix(g)).spectrum(), char_poly_exact(q_matrix(&h)).spectrum());
            let n = g.order();
            let exact = (1..=n).all(|i| a.kth(i) >= b.kth(i) && (i == n || b.kth(i) >= a.kth(i + 1)));
            if !exact {
                return Err(format!("deleting {u}-{v} breaks interlacing"));
            }
        }
        Ok(())
    }

    /// Every duplicate class forces its eigenvalue with the stated
    /// multiplicity.
    pub fn duplicate_multiplicity(&self, g: &Graph) -> LemmaResult {
        let classes = duplicate_classes(g);
        if classes.is_empty() {
            return Ok(());
        }
        let p = char_poly_exact(q_matrix(g));
        for c in classes {
            let (value, mult) = c.forced_eigenvalue();
            let got = p.multiplicity_at(&rat(value));
            if got < mult {
                return Err(format!("{:?} class {:?}: {value} has multiplicity {got} < {mult}", c.kind, c.vertices));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_graphs;
    use crate::graph::parse_family;

    #[test]
    fn weyl_on_small_graphs() {
        let c = Checker::default();
        for n in 1..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                c.weyl(&g).unwrap();
                c.edge_deletion(&g).unwrap();
                c.duplicate_multiplicity(&g).unwrap();
            }
        }
    }

    #[test]
    fn star_leaves_force_one() {
        let g = parse_family("star 6").unwrap();
        Checker::default().duplicate_multiplicity(&g).unwrap();
        assert_eq!(char_poly_exact(q_matrix(&g)).multiplicity_at(&rat(1)), 4);
    }

    #[test]
    fn interlacing_samples() {
        let c = Checker::default();
        let g = Graph::petersen();
        c.principal_interlacing(&g, &[0, 2, 5, 7]).unwrap().unwrap();
        let p = VertexPartition::new(10, vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]).unwrap();
        c.quotient_interlacing(&g, &p).unwrap().unwrap();
        let p = VertexPartition::new(10, vec![vec![0, 9], vec![1, 2, 3, 4, 5, 6, 7, 8]]).unwrap();
        c.quotient_interlacing(&g, &p).unwrap().unwrap();
    }
}
