//! Isomorph-free generation by vertex augmentation and canonical dedup.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};

/// Largest order generated internally.
pub const MAX_GENERATED_ORDER: usize = 8;

static LEVELS: [OnceLock<Vec<CanonicalForm>>; MAX_GENERATED_ORDER] = [const { OnceLock::new() }; MAX_GENERATED_ORDER];

fn extend(g: &Graph, mask: u32) -> Graph {
    let n = g.order();
    let mut rows: Vec<u32> = g.rows().to_vec();
    for (v, row) in rows.iter_mut().enumerate() {
        if mask >> v & 1 == 1 {
            *row |= 1 << n;
        }
    }
    rows.push(mask);
    Graph::from_rows(&rows).expect("augmentation keeps the graph simple")
}

fn build_level(n: usize) -> Vec<CanonicalForm> {
    if n == 1 {
        return vec![canonical_form(&Graph::empty(1).unwrap()).unwrap()];
    }
    let prev = level(n - 1);
    let found: HashSet<CanonicalForm> = prev
        .par_iter()
        .flat_map_iter(|c| {
            let g = c.graph();
            (0u32..1 << (n - 1)).map(move |mask| canonical_form(&extend(&g, mask)).unwrap())
        })
        .collect();
    let mut out: Vec<CanonicalForm> = found.into_iter().collect();
    out.sort();
    out
}

fn level(n: usize) -> &'static [CanonicalForm] {
    LEVELS[n - 1].get_or_init(|| build_level(n))
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(Error::Unsupported(format!(
            "built-in generation covers orders 1..={MAX_GENERATED_ORDER}; supply a graph6 stream for order {n}"
        )));
    }
    Ok(())
}

/// One canonical form per isomorphism class, sorted.
pub fn enumerate_forms(n: usize) -> Result<&'static [CanonicalForm]> {
    check_order(n)?;
    Ok(level(n))
}

/// One representative per isomorphism class, in canonical-form order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    Ok(enumerate_forms(n)?.iter().map(CanonicalForm::graph).filter(|g| !connected_only || is_connected(g)).collect())
}

/// Deduplicates an external stream by canonical form, keeping first
/// occurrences in stream order.
pub fn dedup_stream(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<(CanonicalForm, Graph)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let c = canonical_form(&g)?;
        if seen.insert(c) {
            out.push((c, g));
        }
    }
    Ok(out)
}
