use super::Graph;

/// Vertex masks of the connected components, ordered by smallest vertex.
pub fn component_masks(g: &Graph) -> Vec<u32> {
    let mut seen = 0u32;
    let mut out = Vec::new();
    for start in 0..g.order() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = g.neighbors(v) & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn components(g: &Graph) -> Vec<Graph> {
    component_masks(g)
        .into_iter()
        .map(|m| g.induced_subgraph(&mask_vertices(m)).expect("component vertices are valid"))
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    component_masks(g).len() == 1
}

/// Two-coloring of one component by breadth-first search; `None` if an odd
/// cycle is found. Returns the (color 0, color 1) masks, the start vertex
/// taking color 0.
fn color_component(g: &Graph, comp: u32) -> Option<(u32, u32)> {
    let start = comp.trailing_zeros() as usize;
    let mut side = [1u32 << start, 0u32];
    let mut frontier = 1u32 << start;
    let mut color = 0;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.neighbors(v);
        }
        if next & side[color] != 0 {
            return None;
        }
        let other = 1 - color;
        next &= !side[other];
        side[other] |= next;
        frontier = next;
        color = other;
    }
    Some((side[0], side[1]))
}

/// Parts of a proper 2-coloring when `g` is bipartite. In each component the
/// smallest vertex goes to the first part, so an isolated vertex contributes
/// to the first part only.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut a = 0u32;
    let mut b = 0u32;
    for comp in component_masks(g) {
        let (x, y) = color_component(g, comp)?;
        a |= x;
        b |= y;
    }
    Some((mask_vertices(a), mask_vertices(b)))
}

pub fn is_bipartite(g: &Graph) -> bool {
    component_masks(g).into_iter().all(|c| color_component(g, c).is_some())
}

/// Number of bipartite components; an isolated vertex counts as an
/// unbalanced bipartite component with an empty class.
pub fn count_bipartite_components(g: &Graph) -> usize {
    component_masks(g).into_iter().filter(|&c| color_component(g, c).is_some()).count()
}

/// Whether some component is bipartite with two classes of equal size.
pub fn is_balanced_bipartite_component_present(g: &Graph) -> bool {
    component_masks(g).into_iter().any(|c| color_component(g, c).is_some_and(|(x, y)| x.count_ones() == y.count_ones()))
}
