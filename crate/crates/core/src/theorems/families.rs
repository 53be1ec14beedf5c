//! Named extremal graphs and isomorphism matching against them.

use std::sync::OnceLock;

use super::report::ExtremalCertificate;
use crate::enumeration::{isomorphism, MAX_CANON_ORDER};
use crate::error::Result;
use crate::graph::{from_graph6, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub name: String,
    pub graph: Graph,
}

impl FamilyMember {
    fn new(name: &str, graph: Result<Graph>) -> Option<Self> {
        graph.ok().map(|graph| FamilyMember { name: name.to_string(), graph })
    }
}

fn k(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

fn e(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// Lower-bound extremal graphs for `q2(G) + q2(Ḡ) >= n - 2`.
pub fn lower_bound_families(n: usize) -> Vec<FamilyMember> {
    if n < 4 {
        return Vec::new();
    }
    [
        FamilyMember::new("K_n", k(n)),
        FamilyMember::new("nK_1", e(n)),
        FamilyMember::new("K_{1,n-1}", Graph::star(n)),
        FamilyMember::new("K_{n-1}∪K_1", k(n - 1).and_then(|g| g.disjoint_union(&e(1)?))),
        FamilyMember::new("(2K_1)∇K_{n-2}", e(2).and_then(|g| g.join(&k(n - 2)?))),
        FamilyMember::new("K_2∪(n-2)K_1", k(2).and_then(|g| g.disjoint_union(&e(n - 2)?))),
    ]
    .into_iter()
    .flatten()
    .collect()
}

/// Connected graphs attaining `q2(G) + q2(Ḡ) = 2n - 4`.
pub fn connected_upper_families(n: usize) -> Vec<FamilyMember> {
    match n {
        2 => vec![FamilyMember::new("K_2", k(2))],
        4 => vec![FamilyMember::new("P_4", Graph::path(4)), FamilyMember::new("C_4", Graph::cycle(4))],
        _ => vec![],
    }
    .into_iter()
    .flatten()
    .collect()
}

/// Equality cases of `2n - 5` for connected graphs with disconnected complement.
pub fn disconnected_complement_families(n: usize) -> Vec<FamilyMember> {
    let mut out = vec![FamilyMember::new(
        "(K_2∪K_{n-3})∇K_1",
        k(2).and_then(|g| g.disjoint_union(&k(n.saturating_sub(3).max(1))?)).and_then(|g| g.join(&e(1)?)),
    )];
    if n == 7 {
        out.push(FamilyMember::new("(2K_2)∇(3K_1)", k(2).and_then(|g| g.copies(2)).and_then(|g| g.join(&e(3)?))));
    }
    if n == 6 {
        out.push(FamilyMember::new("K_{3,3}", Graph::complete_bipartite(3, 3)));
        let piece = || e(1).and_then(|g| g.disjoint_union(&k(2)?));
        out.push(FamilyMember::new("(K_1∪K_2)∇(K_1∪K_2)", piece().and_then(|g| g.join(&piece()?))));
    }
    out.into_iter().flatten().filter(|m| n >= 6 && m.graph.order() == n).collect()
}

/// Connected regular graphs attaining `2n - 5`.
pub fn regular_extremal_families() -> Vec<FamilyMember> {
    [
        FamilyMember::new("C_6", Graph::cycle(6)),
        FamilyMember::new("K_{3,3}", Graph::complete_bipartite(3, 3)),
        FamilyMember::new("K_3□K_2", k(3).and_then(|g| g.cartesian_product(&k(2)?))),
        FamilyMember::new("(2K_2)∇(3K_1)", k(2).and_then(|g| g.copies(2)).and_then(|g| g.join(&e(3)?))),
    ]
    .into_iter()
    .flatten()
    .collect()
}

const BIPARTITE_CATALOGUE: &str = include_str!("../../fixtures/bipartite_equality_n6.g6");

/// Connected bipartite graphs of order 6 with `q2(G) + q2(Ḡ) = 7`, frozen
/// from an exhaustive scan.
pub fn bipartite_catalogue() -> &'static [FamilyMember] {
    static CATALOGUE: OnceLock<Vec<FamilyMember>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let mut index = 0;
        BIPARTITE_CATALOGUE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                let graph = from_graph6(line).expect("catalogue fixture is valid graph6");
                let name = if isomorphism(&graph, &k33).unwrap().is_some() {
                    "K_{3,3}".to_string()
                } else {
                    index += 1;
                    format!("bipartite-6/{index}")
                };
                FamilyMember { name, graph }
            })
            .collect()
    })
}

/// Maps vertices of equal degree rank onto each other; correct whenever
/// equal-degree vertices are interchangeable, and always verified.
fn degree_rank_witness(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let order = |x: &Graph| {
        let mut v: Vec<usize> = (0..x.order()).collect();
        v.sort_by_key(|&u| std::cmp::Reverse(x.degree(u)));
        v
    };
    let (a, b) = (order(g), order(h));
    let mut phi = vec![0; g.order()];
    for (i, &u) in a.iter().enumerate() {
        phi[u] = b[i];
    }
    g.is_isomorphism(h, &phi).then_some(phi)
}

/// Outcome of matching a graph against a list of named graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyMatch {
    Matched(ExtremalCertificate),
    NoMatch,
    /// Beyond canonical-form capacity and not settled by the degree map.
    Undecided,
}

pub fn match_family(g: &Graph, members: &[FamilyMember]) -> FamilyMatch {
    let mut undecided = false;
    for m in members {
        let h = &m.graph;
        if h.order() != g.order() || h.size() != g.size() || h.degree_sequence() != g.degree_sequence() {
            continue;
        }
        let phi = if g.order() <= MAX_CANON_ORDER {
            isomorphism(g, h).expect("order within capacity")
        } else {
            let phi = degree_rank_witness(g, h);
            undecided |= phi.is_none();
            phi
        };
        if let Some(witness) = phi {
            debug_assert!(g.is_isomorphism(h, &witness));
            return FamilyMatch::Matched(ExtremalCertificate { family: m.name.clone(), witness });
        }
    }
    if undecided {
        FamilyMatch::Undecided
    } else {
        FamilyMatch::NoMatch
    }
}

/// Member graph for a certificate's family name.
pub fn member_by_name<'a>(members: &'a [FamilyMember], name: &str) -> Option<&'a FamilyMember> {
    members.iter().find(|m| m.name == name)
}
