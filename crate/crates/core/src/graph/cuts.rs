//! Enumeration of small independent edge cuts and cyclic connectivity.

use super::{EdgeId, Multigraph, VertexId};
use crate::bits::EdgeSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub edges: Vec<EdgeId>,
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
    pub independent: bool,
    pub cycle_separating: bool,
}

impl EdgeCut {
    pub fn from_side(g: &Multigraph, side: &[VertexId], edges: &[EdgeId]) -> EdgeCut {
        let mut side_a = side.to_vec();
        side_a.sort_unstable();
        side_a.dedup();
        let in_a: std::collections::HashSet<_> = side_a.iter().copied().collect();
        let side_b: Vec<VertexId> = (0..g.num_vertices()).filter(|v| !in_a.contains(v)).collect();
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        let independent = edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| !g.adjacent_edges(e, f)));
        let cycle_separating = side_has_circuit(g, &side_a) && side_has_circuit(g, &side_b);
        EdgeCut {
            edges,
            side_a,
            side_b,
            independent,
            cycle_separating,
        }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

fn side_has_circuit(g: &Multigraph, side: &[VertexId]) -> bool {
    let in_side: std::collections::HashSet<_> = side.iter().copied().collect();
    has_circuit_exact(g, &in_side)
}

fn has_circuit_exact(g: &Multigraph, in_side: &std::collections::HashSet<VertexId>) -> bool {
    // DFS cycle detection restricted to the side (handles loops/digons)
    let mut seen: std::collections::HashSet<VertexId> = std::collections::HashSet::new();
    for &root in in_side {
        if seen.contains(&root) {
            continue;
        }
        // count vertices and internal edges of this component
        let mut comp = vec![root];
        seen.insert(root);
        let mut qi = 0;
        while qi < comp.len() {
            let v = comp[qi];
            qi += 1;
            for e in g.edges_at(v) {
                let w = g.other_endpoint(e, v);
                if in_side.contains(&w) && !seen.contains(&w) {
                    seen.insert(w);
                    comp.push(w);
                }
            }
        }
        let comp_set: std::collections::HashSet<_> = comp.iter().copied().collect();
        let mut internal = 0usize;
        for e in 0..g.num_edges() {
            let (u, v) = g.endpoints(e);
            if comp_set.contains(&u) && comp_set.contains(&v) {
                internal += 1;
            }
        }
        if internal >= comp.len() {
            return true;
        }
    }
    false
}

fn disconnects(g: &Multigraph, cut: &EdgeSet) -> Option<Vec<VertexId>> {
    let comps = g.components_excluding(cut);
    if comps.len() == 2 {
        Some(comps[0].clone())
    } else {
        None
    }
}

/// All independent edge cuts of size 2 and 3, by brute force over pairwise
/// non-adjacent edge pairs and triples.
pub fn small_independent_cuts(g: &Multigraph) -> Vec<EdgeCut> {
    let m = g.num_edges();
    let mut out = Vec::new();
    let non_loop: Vec<EdgeId> = (0..m).filter(|&e| !g.is_loop(e)).collect();
    for (i, &e) in non_loop.iter().enumerate() {
        for &f in &non_loop[i + 1..] {
            if g.adjacent_edges(e, f) {
                continue;
            }
            let cut = EdgeSet::from_iter([e, f]);
            if let Some(side) = disconnects(g, &cut) {
                out.push(EdgeCut::from_side(g, &side, &[e, f]));
            }
        }
    }
    for (i, &e) in non_loop.iter().enumerate() {
        for (j, &f) in non_loop[i + 1..].iter().enumerate() {
            if g.adjacent_edges(e, f) {
                continue;
            }
            for &h in &non_loop[i + 1 + j + 1..] {
                if g.adjacent_edges(e, h) || g.adjacent_edges(f, h) {
                    continue;
                }
                // skip supersets of 2-cuts: the pair test must fail
                let pair_cuts = [
                    EdgeSet::from_iter([e, f]),
                    EdgeSet::from_iter([e, h]),
                    EdgeSet::from_iter([f, h]),
                ];
                if pair_cuts.iter().any(|p| disconnects(g, p).is_some()) {
                    continue;
                }
                let cut = EdgeSet::from_iter([e, f, h]);
                if let Some(side) = disconnects(g, &cut) {
                    out.push(EdgeCut::from_side(g, &side, &[e, f, h]));
                }
            }
        }
    }
    out
}

/// All edge cuts of size 2 or 3 (not necessarily independent) that split the
/// graph into exactly two sides with every cut edge crossing.
pub fn small_cuts(g: &Multigraph) -> Vec<EdgeCut> {
    let m = g.num_edges();
    let mut out = Vec::new();
    let non_loop: Vec<EdgeId> = (0..m).filter(|&e| !g.is_loop(e)).collect();
    for (i, &e) in non_loop.iter().enumerate() {
        for &f in &non_loop[i + 1..] {
            let cut = EdgeSet::from_iter([e, f]);
            if disconnects(g, &EdgeSet::singleton(e)).is_some()
                || disconnects(g, &EdgeSet::singleton(f)).is_some()
            {
                continue;
            }
            if let Some(side) = disconnects(g, &cut) {
                out.push(EdgeCut::from_side(g, &side, &[e, f]));
            }
        }
    }
    for (i, &e) in non_loop.iter().enumerate() {
        for (j, &f) in non_loop[i + 1..].iter().enumerate() {
            for &h in &non_loop[i + 1 + j + 1..] {
                let subsets = [
                    EdgeSet::from_iter([e, f]),
                    EdgeSet::from_iter([e, h]),
                    EdgeSet::from_iter([f, h]),
                    EdgeSet::singleton(e),
                    EdgeSet::singleton(f),
                    EdgeSet::singleton(h),
                ];
                if subsets.iter().any(|p| disconnects(g, p).is_some()) {
                    continue;
                }
                let cut = EdgeSet::from_iter([e, f, h]);
                if let Some(side) = disconnects(g, &cut) {
                    out.push(EdgeCut::from_side(g, &side, &[e, f, h]));
                }
            }
        }
    }
    out
}

/// True iff no cycle-separating edge cut of size at most 3 exists. Every
/// minimum cycle-separating cut in a cubic graph is independent, so scanning
/// independent small cuts suffices.
pub fn cyclically_4_edge_connected(g: &Multigraph) -> Result<bool> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    Ok(small_independent_cuts(g)
        .iter()
        .all(|c| !c.cycle_separating))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn petersen_has_no_small_cuts() {
        let g = families::petersen();
        assert!(small_independent_cuts(&g).is_empty());
        assert!(cyclically_4_edge_connected(&g).unwrap());
    }

    #[test]
    fn k4_is_c4ec() {
        assert!(cyclically_4_edge_connected(&families::k4()).unwrap());
    }

    #[test]
    fn inflated_k4_has_triangle_cut() {
        let g = families::k4().inflate_vertex(0).unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert!(!cyclically_4_edge_connected(&g).unwrap());
        let cuts = small_independent_cuts(&g);
        assert!(cuts.iter().any(|c| c.size() == 3 && c.independent));
    }

    #[test]
    fn cut_sides_disconnect() {
        let g = families::k4().inflate_vertex(0).unwrap();
        for cut in small_independent_cuts(&g) {
            let mask = crate::bits::EdgeSet::from_iter(cut.edges.iter().copied());
            let comps = g.components_excluding(&mask);
            assert_eq!(comps.len(), 2);
            assert_eq!(cut.side_a.len() + cut.side_b.len(), g.num_vertices());
        }
    }
}
