//! 3-edge-colouring of multigraphs with maximum degree 3.
//!
//! Colours are 1, 2, 3, read as the nonzero elements of Z2xZ2 via their
//! binary representation, so the sum of two colours is their bitwise xor
//! and a colouring is proper at a cubic vertex iff its colours xor to zero.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Multigraph, SubgraphRef};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColouring {
    pub colour: BTreeMap<EdgeId, u8>,
}

impl EdgeColouring {
    pub fn get(&self, e: EdgeId) -> Option<u8> {
        self.colour.get(&e).copied()
    }

    /// Proper on its domain: no vertex sees the same colour on two distinct
    /// incident coloured edges (a coloured loop is never proper).
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        for v in 0..g.num_vertices() {
            let mut seen = [false; 4];
            for e in g.edges_at(v) {
                if let Some(c) = self.get(e) {
                    if g.is_loop(e) || seen[c as usize] {
                        return false;
                    }
                    seen[c as usize] = true;
                }
            }
        }
        true
    }

    /// Edges of a given colour as a sorted list.
    pub fn class(&self, c: u8) -> Vec<EdgeId> {
        self.colour
            .iter()
            .filter(|&(_, &x)| x == c)
            .map(|(&e, _)| e)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringCount {
    pub total: u64,
    /// total/18 as a reduced fraction (numerator, denominator).
    pub kaszonyi_value: (u64, u64),
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl ColouringCount {
    fn from_total(total: u64) -> Self {
        let g = gcd(total, 18).max(1);
        ColouringCount {
            total,
            kaszonyi_value: (total / g, 18 / g),
        }
    }
}

/// Backtracking extension of a partial proper colouring. Visits edges in a
/// most-constrained-first order with colours tried in order 1, 2, 3;
/// `emit` receives each complete proper colouring and returns false to stop.
fn search(g: &Multigraph, colour: &mut [u8], emit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
    let m = g.num_edges();
    // available colours at an edge: those unused at both endpoints
    let avail = |colour: &[u8], e: EdgeId| -> [bool; 4] {
        let (u, v) = g.endpoints(e);
        let mut ok = [false, true, true, true];
        for f in g.edges_at(u).chain(g.edges_at(v)) {
            if f != e && colour[f] != 0 {
                ok[colour[f] as usize] = false;
            }
        }
        ok
    };
    let mut best = None;
    let mut best_count = 4;
    for e in 0..m {
        if colour[e] != 0 {
            continue;
        }
        let ok = avail(colour, e);
        let count = ok.iter().filter(|&&b| b).count();
        if count < best_count {
            best_count = count;
            best = Some((e, ok));
            if count == 0 {
                return true;
            }
        }
    }
    match best {
        None => emit(colour),
        Some((e, ok)) => {
            for c in 1..=3u8 {
                if ok[c as usize] {
                    colour[e] = c;
                    if !search(g, colour, emit) {
                        colour[e] = 0;
                        return false;
                    }
                    colour[e] = 0;
                }
            }
            true
        }
    }
}

/// Visit every proper extension of the partial colouring in `colour`
/// (0 marks unassigned); `emit` returns false to stop early.
pub fn enumerate_colourings(
    g: &Multigraph,
    colour: &mut [u8],
    emit: &mut dyn FnMut(&[u8]) -> bool,
) {
    search(g, colour, emit);
}

fn prepare(g: &Multigraph, fixed: &BTreeMap<EdgeId, u8>) -> Result<Option<Vec<u8>>> {
    let m = g.num_edges();
    let mut colour = vec![0u8; m];
    for (&e, &c) in fixed {
        if e >= m || !(1..=3).contains(&c) {
            return Err(Error::InconsistentFixed);
        }
        colour[e] = c;
    }
    let partial = EdgeColouring {
        colour: fixed.clone(),
    };
    if !partial.is_proper(g) {
        return Err(Error::InconsistentFixed);
    }
    if g.has_loop() || (0..g.num_vertices()).any(|v| g.degree(v) > 3) {
        return Ok(None);
    }
    Ok(Some(colour))
}

/// A proper 3-edge-colouring of `g` extending `fixed`, or `None`.
pub fn three_edge_colour(
    g: &Multigraph,
    fixed: &BTreeMap<EdgeId, u8>,
) -> Result<Option<EdgeColouring>> {
    let Some(mut colour) = prepare(g, fixed)? else {
        return Ok(None);
    };
    let mut found: Option<Vec<u8>> = None;
    search(g, &mut colour, &mut |c| {
        found = Some(c.to_vec());
        false
    });
    Ok(found.map(|c| {
        let out = EdgeColouring {
            colour: c.iter().enumerate().map(|(e, &x)| (e, x)).collect(),
        };
        assert!(out.is_proper(g), "solver produced an improper colouring");
        out
    }))
}

/// Exact number of proper 3-edge-colourings. The count is obtained with the
/// first edge's colour pinned to 1 and multiplied by 3, since recolouring
/// bijects the three choices for that edge.
pub fn count_colourings(g: &Multigraph) -> ColouringCount {
    if g.has_loop() || (0..g.num_vertices()).any(|v| g.degree(v) > 3) {
        return ColouringCount::from_total(0);
    }
    if g.num_edges() == 0 {
        return ColouringCount::from_total(1);
    }
    let mut colour = vec![0u8; g.num_edges()];
    colour[0] = 1;
    let mut count = 0u64;
    search(g, &mut colour, &mut |_| {
        count += 1;
        true
    });
    ColouringCount::from_total(3 * count)
}

/// True iff deleting `e` and smoothing the resulting 2-valent vertices
/// leaves a graph with no proper 3-edge-colouring.
pub fn suppressible(g: &CubicGraph, e: EdgeId) -> Result<bool> {
    if g.is_loop(e) {
        return Err(Error::LoopEdge(e));
    }
    let smoothed = g.smooth_edge(e)?;
    Ok(three_edge_colour(&smoothed, &BTreeMap::new())?.is_none())
}

/// All 5-cycles containing an edge uv for which deleting both endvertices
/// leaves a 3-edge-colourable graph; each cycle is reported with one such
/// witness edge.
pub fn heavy_pentagons(g: &CubicGraph) -> Vec<(Vec<usize>, EdgeId)> {
    let mut out = Vec::new();
    for (vertices, edge_ids) in g.circuits_of_length(5) {
        let mut witness = None;
        for &e in &edge_ids {
            let (u, v) = g.endpoints(e);
            let (rest, _) = g.delete_vertices(&[u, v]);
            if three_edge_colour(&rest, &BTreeMap::new())
                .expect("no fixed edges")
                .is_some()
            {
                witness = Some(e);
                break;
            }
        }
        if let Some(e) = witness {
            out.push((vertices, e));
        }
    }
    out
}

/// Checks that a proper colouring of a subgraph together with its boundary
/// has boundary colours summing to zero in Z2xZ2.
pub fn check_parity_lemma(g: &Multigraph, h: &SubgraphRef, xi: &EdgeColouring) -> Result<bool> {
    if !xi.is_proper(g) {
        return Err(Error::ImproperColouring);
    }
    let mut sum = 0u8;
    for e in h.boundary_edges(g) {
        match xi.get(e) {
            Some(c) => sum ^= c,
            None => return Err(Error::ImproperColouring),
        }
    }
    Ok(sum == 0)
}

/// True iff every edge of the snark `g` is suppressible.
pub fn strong_snark(g: &CubicGraph) -> Result<bool> {
    if three_edge_colour(g, &BTreeMap::new())?.is_some() {
        return Err(Error::NotSnark);
    }
    for e in 0..g.num_edges() {
        if !suppressible(g, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If `g` is non-bipartite but some two edges meet every odd cycle, returns
/// such a pair together with a proper 3-edge-colouring of `g` itself, which
/// must exist for every such graph.
pub fn almost_bipartite_and_colour(
    g: &CubicGraph,
) -> Result<Option<((EdgeId, EdgeId), EdgeColouring)>> {
    if g.is_bipartite() {
        return Ok(None);
    }
    let m = g.num_edges();
    for e in 0..m {
        for f in e + 1..m {
            let mask = crate::bits::EdgeSet::from_iter([e, f]);
            let (rest, _) = g.delete_edges(&mask);
            if rest.is_bipartite() {
                let col = three_edge_colour(g, &BTreeMap::new())?.ok_or_else(|| {
                    Error::VerificationFailed(
                        "graph is almost bipartite but has no 3-edge-colouring".into(),
                    )
                })?;
                return Ok(Some(((e, f), col)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn colour_of(g: &CubicGraph) -> Option<EdgeColouring> {
        three_edge_colour(g, &BTreeMap::new()).unwrap()
    }

    #[test]
    fn k4_colourable_petersen_not() {
        assert!(colour_of(&families::k4()).is_some());
        assert!(colour_of(&families::petersen()).is_none());
        assert!(colour_of(&families::flower(5)).is_none());
        assert!(colour_of(&families::prism3()).is_some());
    }

    #[test]
    fn counts() {
        assert_eq!(count_colourings(&families::dipole3()).total, 6);
        assert_eq!(count_colourings(&families::k4()).total, 6);
        assert_eq!(count_colourings(&families::petersen()).total, 0);
        let c = count_colourings(&families::k33());
        assert!(c.total > 0 && c.total % 6 == 0);
        assert_eq!(count_colourings(&families::dipole3()).kaszonyi_value, (1, 3));
    }

    #[test]
    fn fixed_colours_respected() {
        let g = families::k4();
        let mut fixed = BTreeMap::new();
        fixed.insert(0, 2u8);
        let col = three_edge_colour(&g, &fixed).unwrap().unwrap();
        assert_eq!(col.get(0), Some(2));
        // two adjacent edges forced equal → InconsistentFixed
        let (u, _) = g.endpoints(0);
        let other = g.edges_at(u).find(|&e| e != 0).unwrap();
        fixed.insert(other, 2u8);
        assert!(three_edge_colour(&g, &fixed).is_err());
    }

    #[test]
    fn loops_are_uncolourable() {
        let g = Multigraph::with_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert!(three_edge_colour(&g, &BTreeMap::new()).unwrap().is_none());
        assert_eq!(count_colourings(&g).total, 0);
    }

    #[test]
    fn colourable_edges_not_suppressible() {
        let g = families::k4();
        for e in 0..g.num_edges() {
            assert!(!suppressible(&g, e).unwrap());
        }
    }

    #[test]
    fn petersen_pentagons_all_heavy() {
        let g = families::petersen();
        let hp = heavy_pentagons(&g);
        assert_eq!(hp.len(), 12);
        // heavy pentagon edges are not suppressible
        for (_, e) in &hp {
            assert!(!suppressible(&g, *e).unwrap());
        }
    }

    #[test]
    fn high_girth_snark_has_no_heavy_pentagon() {
        // no 5-cycles at all when the girth is 6
        assert!(heavy_pentagons(&families::flower(7)).is_empty());
    }

    #[test]
    fn parity_lemma_on_single_vertex() {
        let g = families::k4();
        let col = colour_of(&g).unwrap();
        let h = SubgraphRef::induced(&g, &[0]);
        assert!(check_parity_lemma(&g, &h, &col).unwrap());
    }

    #[test]
    fn parity_violation_detected() {
        // 6 pendant edges coloured 1,1,1,2,2,3: proper but xor != 0
        let mut edges = Vec::new();
        for i in 0..6 {
            edges.push((i, 6 + i));
        }
        let g = Multigraph::with_edges(12, &edges);
        let xi = EdgeColouring {
            colour: [(0, 1u8), (1, 1), (2, 1), (3, 2), (4, 2), (5, 3)]
                .into_iter()
                .collect(),
        };
        let h = SubgraphRef::induced(&g, &[0, 1, 2, 3, 4, 5]);
        assert!(!check_parity_lemma(&g, &h, &xi).unwrap());
    }

    #[test]
    fn petersen_is_not_strong() {
        assert!(!strong_snark(&families::petersen()).unwrap());
        assert!(strong_snark(&families::k4()).is_err());
    }

    #[test]
    fn almost_bipartite_examples() {
        assert!(almost_bipartite_and_colour(&families::k33()).unwrap().is_none());
        assert!(almost_bipartite_and_colour(&families::petersen()).unwrap().is_none());
        // the prism is non-bipartite; deleting one edge from each triangle
        // kills all odd cycles, so a surplus pair exists and it is colourable
        let got = almost_bipartite_and_colour(&families::prism3()).unwrap();
        let ((e, f), col) = got.unwrap();
        let mask = crate::bits::EdgeSet::from_iter([e, f]);
        let (rest, _) = families::prism3().delete_edges(&mask);
        assert!(rest.is_bipartite());
        assert!(col.is_proper(&families::prism3()));
        assert_eq!(col.colour.len(), 9);
    }
}
