//! Canonical labeling by individualization and colour refinement.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{from_graph6, to_graph6, Graph};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 10;

/// Isomorphism-class identifier: the order plus the smallest upper-triangle
/// bit string (graph6 bit order) over all labelings.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    n: u8,
    key: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    /// The canonical representative.
    pub fn graph(&self) -> Graph {
        let n = self.order();
        let total = n * (n - 1) / 2;
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.key >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical forms have valid orders")
    }

    pub fn graph6(&self) -> String {
        to_graph6(&self.graph())
    }

    pub fn parse(text: &str) -> Result<Self> {
        canonical_form(&from_graph6(text)?)
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.key).cmp(&(other.n, other.key))
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.graph6())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalForm::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Splits colour classes by neighbour counts per class until stable.
/// Colours are kept as dense ranks, so the result depends only on the
/// isomorphism type of (graph, colouring).
fn refine(g: &Graph, colors: &mut [usize]) -> usize {
    let n = colors.len();
    let mut cells = rank(colors);
    loop {
        let sigs: Vec<(usize, Vec<u8>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u8; cells];
                let mut nb = g.neighbors(v);
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    counts[colors[w]] += 1;
                }
                (colors[v], counts)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<u8>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next = sorted.len();
        for v in 0..n {
            colors[v] = sorted.binary_search(&&sigs[v]).unwrap();
        }
        if next == cells {
            return cells;
        }
        cells = next;
    }
}

/// Replaces colours by their dense rank; returns the number of classes.
fn rank(colors: &mut [usize]) -> usize {
    let mut distinct: Vec<usize> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap();
    }
    distinct.len()
}

fn leaf_key(g: &Graph, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut key = 0u64;
    for j in 1..n {
        let row = g.neighbors(perm[j]);
        for &pi in &perm[..j] {
            key = key << 1 | (row >> pi & 1) as u64;
        }
    }
    key
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !(1u32 << u | 1u32 << v);
    g.neighbors(u) & mask == g.neighbors(v) & mask
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
    let n = colors.len();
    let cells = refine(g, &mut colors);
    if cells == n {
        let mut perm = vec![0; n];
        for v in 0..n {
            perm[colors[v]] = v;
        }
        let key = leaf_key(g, &perm);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            *best = Some((key, perm));
        }
        return;
    }
    let mut size = vec![0usize; cells];
    for &c in &colors {
        size[c] += 1;
    }
    let target = size.iter().position(|&s| s > 1).unwrap();
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // swapping twins is an automorphism, so their subtrees are equivalent
        if tried.iter().any(|&w| are_twins(g, v, w)) {
            continue;
        }
        tried.push(v);
        let next: Vec<usize> = (0..n).map(|u| 2 * colors[u] + usize::from(colors[u] == target && u != v)).collect();
        search(g, next, best);
    }
}

/// Canonical form and a labeling realising it: `labeling[i]` is the vertex
/// of `g` that becomes vertex `i` of the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::Capacity { order: n, max: MAX_CANON_ORDER });
    }
    let mut best = None;
    let degrees: Vec<usize> = g.degrees();
    search(g, degrees, &mut best);
    let (key, perm) = best.expect("search reaches at least one leaf");
    Ok((CanonicalForm { n: n as u8, key }, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// A vertex map `phi` (vertex of `a` to vertex of `b`) when the graphs are
/// isomorphic.
pub fn isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let (ca, la) = canonical_labeling(a)?;
    let (cb, lb) = canonical_labeling(b)?;
    if ca != cb {
        return Ok(None);
    }
    // la[i] in a and lb[i] in b both sit at canonical position i
    let mut phi = vec![0; a.order()];
    for i in 0..a.order() {
        phi[la[i]] = lb[i];
    }
    Ok(Some(phi))
}
