//! Simple labeled graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each adjacency row is a single `u32` bitmask, so every graph is a small
//! `Copy` value and all operators are pure functions returning new graphs.

mod expr;
mod families;
mod graph6;
mod structure;

pub use expr::parse_family;
pub use families::HFamilyParams;
pub use graph6::{from_graph6, read_graph6_stream, to_graph6};
pub use structure::{
    bipartition, component_masks, components, count_bipartite_components, is_balanced_bipartite_component_present,
    is_bipartite, is_connected,
};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row fits a machine word.
pub const MAX_ORDER: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: [u32; MAX_ORDER],
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph order must be at least 1".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Capacity { order: n, max: MAX_ORDER });
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph `nK_1`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, m: 0, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and the
    /// zero diagonal.
    pub fn from_rows(rows: &[u32]) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mut adj = [0u32; MAX_ORDER];
        let mut bits = 0usize;
        for (i, &row) in rows.iter().enumerate() {
            if n < 32 && row >> n != 0 {
                return Err(Error::InvalidParameter(format!("row {i} has bits beyond order {n}")));
            }
            if row >> i & 1 == 1 {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {i}")));
            }
            adj[i] = row;
            bits += row.count_ones() as usize;
        }
        for i in 0..n {
            for j in 0..n {
                if (adj[i] >> j & 1) != (adj[j] >> i & 1) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Graph { n, m: bits / 2, adj })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        if self.adj[u] >> v & 1 == 0 {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.m += 1;
        }
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        if self.adj[u] >> v & 1 == 1 {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.m -= 1;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Bitmask of all vertices.
    pub fn vertex_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order, `d_1 >= d_2 >= ... >= d_n`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = *self;
        g.clear_edge(u, v);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let mut adj = [0u32; MAX_ORDER];
        for v in 0..self.n {
            adj[v] = !self.adj[v] & full & !(1 << v);
        }
        Graph { n: self.n, m: self.n * (self.n - 1) / 2 - self.m, adj }
    }

    /// `self ∪ other`, with `other`'s vertices shifted after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj;
        for v in 0..other.n {
            adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(Graph { n, m: self.m + other.m, adj })
    }

    /// `self ∇ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = other.vertex_mask() << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g.m += self.n * other.n;
        Ok(g)
    }

    /// Cartesian product; vertex `(a, b)` gets index `a * other.n + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n = self.n * other.n;
        check_order(n)?;
        let mut g = Graph::empty(n)?;
        for a in 0..self.n {
            for b in 0..other.n {
                let v = a * other.n + b;
                for a2 in 0..self.n {
                    if self.has_edge(a, a2) {
                        g.set_edge(v, a2 * other.n + b);
                    }
                }
                for b2 in 0..other.n {
                    if other.has_edge(b, b2) {
                        g.set_edge(v, a * other.n + b2);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the listed vertices, relabeled `0..k` in list order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for &v in vertices {
            self.check_vertex(v)?;
        }
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(Error::InvalidParameter(format!("vertex {u} listed twice")));
                }
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Graph> {
        if order.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "relabeling has {} entries for order {}",
                order.len(),
                self.n
            )));
        }
        let mut seen = 0u32;
        for &v in order {
            self.check_vertex(v)?;
            if seen >> v & 1 == 1 {
                return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
            }
            seen |= 1 << v;
        }
        self.induced_subgraph(order)
    }

    /// True when `phi` (old vertex -> new vertex) maps `self` onto `other`
    /// edge for edge.
    pub fn is_isomorphism(&self, other: &Graph, phi: &[usize]) -> bool {
        if self.n != other.n || self.m != other.m || phi.len() != self.n {
            return false;
        }
        let mut seen = 0u32;
        for &v in phi {
            if v >= self.n || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        (0..self.n).all(|u| ((u + 1)..self.n).all(|v| self.has_edge(u, v) == other.has_edge(phi[u], phi[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4).unwrap());
        assert_eq!(k4.complement().size(), 0);
    }

    #[test]
    fn star_complement_is_clique_plus_isolated() {
        let star = Graph::star(6).unwrap();
        let expected = Graph::complete(5).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        // the star's center is vertex 0, the isolated vertex of K5 ∪ K1 is vertex 5
        let phi = [5, 0, 1, 2, 3, 4];
        assert!(star.complement().is_isomorphism(&expected, &phi));
    }

    #[test]
    fn join_of_two_independent_with_clique() {
        let g = Graph::empty(2).unwrap().join(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(g.degree_sequence(), vec![5, 5, 5, 5, 4, 4]);
        assert_eq!(g.size(), 1 + 6 + 8 - 1);
    }

    #[test]
    fn union_sizes() {
        let g = Graph::complete(2).unwrap().disjoint_union(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (6, 1));
    }

    #[test]
    fn prism_is_cubic() {
        let g = Graph::complete(3).unwrap().cartesian_product(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.regular_degree(), Some(3));
        // triangles {0,2,4} and {1,3,5}, rungs (0,1), (2,3), (4,5)
        for (u, v) in [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 1), (2, 3), (4, 5)] {
            assert!(g.has_edge(u, v), "missing {u}-{v}");
        }
        assert_eq!(g.size(), 9);
    }

    #[test]
    fn capacity_errors() {
        assert!(matches!(Graph::empty(33), Err(Error::Capacity { .. })));
        let k20 = Graph::complete(20).unwrap();
        assert!(matches!(k20.disjoint_union(&k20), Err(Error::Capacity { .. })));
        assert!(matches!(k20.join(&k20), Err(Error::Capacity { .. })));
        assert!(Graph::complete(6).unwrap().cartesian_product(&Graph::complete(6).unwrap()).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn full_order_graph_works() {
        let k32 = Graph::complete(32).unwrap();
        assert_eq!(k32.size(), 496);
        assert_eq!(k32.complement().size(), 0);
        assert_eq!(k32.complement().complement(), k32);
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert_eq!(Graph::from_rows(&[0b10, 0b00]), Err(Error::NotSymmetric));
        assert!(Graph::from_rows(&[0b01]).is_err());
    }
}
