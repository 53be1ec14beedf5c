use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Block sizes of the bipartite family `H(s0, s1, s2)`.
///
/// The graph has parts `{u, v}` and `S_0 ∪ S_1 ∪ S_2`; `u` is adjacent to
/// `S_0 ∪ S_1`, `v` to `S_0 ∪ S_2`, and `u ≁ v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HFamilyParams {
    pub s0: usize,
    pub s1: usize,
    pub s2: usize,
}

impl HFamilyParams {
    pub fn new(s0: usize, s1: usize, s2: usize) -> Self {
        HFamilyParams { s0, s1, s2 }
    }

    pub fn order(&self) -> usize {
        self.s0 + self.s1 + self.s2 + 2
    }

    /// Vertex index of `u`; vertices are laid out `S_0, S_1, S_2, u, v`.
    pub fn u(&self) -> usize {
        self.s0 + self.s1 + self.s2
    }

    pub fn v(&self) -> usize {
        self.u() + 1
    }

    /// Vertex blocks `(S_0, S_1, S_2, {u}, {v})`, empty blocks included.
    pub fn blocks(&self) -> [Vec<usize>; 5] {
        let a = self.s0;
        let b = a + self.s1;
        let c = b + self.s2;
        [(0..a).collect(), (a..b).collect(), (b..c).collect(), vec![c], vec![c + 1]]
    }
}

impl Graph {
    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// `K_{s,t}` with the `s`-side first.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidParameter("complete bipartite parts must be nonempty".into()));
        }
        Graph::empty(s)?.join(&Graph::empty(t)?)
    }

    /// The star `K_{1,n-1}` on `n` vertices, center 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("star needs at least 2 vertices, got {n}")));
        }
        Graph::complete_bipartite(1, n - 1)
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidParameter("need at least one copy".into()));
        }
        let mut g = *self;
        for _ in 1..k {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    pub fn h_graph(p: HFamilyParams) -> Result<Graph> {
        let mut g = Graph::empty(p.order())?;
        let [s0, s1, s2, _, _] = p.blocks();
        let (u, v) = (p.u(), p.v());
        for &w in &s0 {
            g.set_edge(u, w);
            g.set_edge(v, w);
        }
        for &w in &s1 {
            g.set_edge(u, w);
        }
        for &w in &s2 {
            g.set_edge(v, w);
        }
        Ok(g)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    /// `k`-regular circulant on `n` vertices (offsets `1..=k/2`, plus `n/2`
    /// when `k` is odd). Requires `n*k` even and `k < n`.
    pub fn circulant_regular(n: usize, k: usize) -> Result<Graph> {
        if k >= n || (n * k) % 2 == 1 {
            return Err(Error::InvalidParameter(format!("no {k}-regular circulant on {n} vertices")));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            for off in 1..=k / 2 {
                g.set_edge(v, (v + off) % n);
            }
            if k % 2 == 1 {
                g.set_edge(v, (v + n / 2) % n);
            }
        }
        Ok(g)
    }
}
