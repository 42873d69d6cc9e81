//! Dart-based cubic multigraphs with loops and parallel edges.
//!
//! Every edge `e` owns two darts `2e` and `2e+1`, one per end; the twin of a
//! dart is the other end of the same edge. A loop's darts share a vertex, so
//! a loop contributes 2 to the degree of its vertex.

pub mod cuts;
pub mod io;
pub mod iso;

pub use cuts::{cyclically_4_edge_connected, small_cuts, small_independent_cuts, EdgeCut};
pub use io::{parse_graph, parse_multigraph, serialize_graph, GraphFormat};
pub use iso::isomorphic;

use crate::bits::EdgeSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type DartId = usize;

pub fn dart_edge(d: DartId) -> EdgeId {
    d / 2
}

pub fn dart_twin(d: DartId) -> DartId {
    d ^ 1
}

/// General multigraph with maximum degree tracked by the caller. Used for
/// transient subgraphs (vertex deletions, smoothings, poles); [`CubicGraph`]
/// wraps it with the degree-3 invariant.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    vertex_darts: Vec<Vec<DartId>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            vertex_darts: vec![Vec::new(); n],
        }
    }

    pub fn with_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        assert!(u < self.n && v < self.n, "endpoint out of range");
        let e = self.edges.len();
        self.edges.push((u, v));
        self.vertex_darts[u].push(2 * e);
        self.vertex_darts[v].push(2 * e + 1);
        e
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.n += 1;
        self.vertex_darts.push(Vec::new());
        self.n - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_list(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn dart_vertex(&self, d: DartId) -> VertexId {
        let (u, v) = self.edges[dart_edge(d)];
        if d % 2 == 0 {
            u
        } else {
            v
        }
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn has_loop(&self) -> bool {
        (0..self.num_edges()).any(|e| self.is_loop(e))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_darts[v].len()
    }

    pub fn darts_at(&self, v: VertexId) -> &[DartId] {
        &self.vertex_darts[v]
    }

    /// Edge ids incident with `v`, a loop listed twice.
    pub fn edges_at(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.vertex_darts[v].iter().map(|&d| dart_edge(d))
    }

    /// Distinct incident edge ids, each listed once.
    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self.edges_at(v).collect();
        es.dedup();
        es.sort_unstable();
        es.dedup();
        es
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Number of parallel edges between `u` and `v` (loops when `u == v`).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Connected components as vertex lists, BFS from the lowest unvisited
    /// vertex, skipping edges in `excluded`.
    pub fn components_excluding(&self, excluded: &EdgeSet) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.vertex_darts[v] {
                    let e = dart_edge(d);
                    if excluded.contains(e) {
                        continue;
                    }
                    let w = self.other_endpoint(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_excluding(&EdgeSet::EMPTY)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Bridges found by DFS lowpoint over darts (parallel edges are never
    /// bridges because only the traversed dart's twin is excluded).
    pub fn bridges(&self) -> Vec<EdgeId> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut time = 0usize;
        let mut out = Vec::new();
        // iterative DFS: stack of (vertex, incoming dart, next dart index)
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(VertexId, Option<DartId>, usize)> = vec![(root, None, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, in_dart, ref mut idx)) = stack.last_mut() {
                if *idx < self.vertex_darts[v].len() {
                    let d = self.vertex_darts[v][*idx];
                    *idx += 1;
                    if Some(dart_twin(d)) == in_dart {
                        continue;
                    }
                    let e = dart_edge(d);
                    if self.is_loop(e) {
                        continue;
                    }
                    let w = self.other_endpoint(e, v);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(d), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(dart_edge(in_dart.unwrap()));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.is_connected() && self.bridges().is_empty()
    }

    /// No cut vertex and connected. Loops never make their vertex a cut
    /// vertex by themselves.
    pub fn is_two_connected(&self) -> bool {
        if !self.is_connected() || self.n < 2 {
            return false;
        }
        for v in 0..self.n {
            let mask = EdgeSet::from_iter(self.edges_at(v));
            let comps = self.components_excluding(&mask);
            // removing v's edges isolates v; any further component means v cuts
            if comps.len() > 2 {
                return false;
            }
        }
        self.bridges().is_empty()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if colour[root] != u8::MAX {
                continue;
            }
            colour[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.vertex_darts[v] {
                    let e = dart_edge(d);
                    if self.is_loop(e) {
                        return false;
                    }
                    let w = self.other_endpoint(e, v);
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact girth; loops count as 1-cycles, parallel pairs as 2-cycles.
    pub fn girth(&self) -> Result<usize> {
        let mut best = usize::MAX;
        for e in 0..self.num_edges() {
            if self.is_loop(e) {
                return Ok(1);
            }
            let (u, v) = self.edges[e];
            if let Some(d) = self.distance_excluding(u, v, e) {
                best = best.min(d + 1);
            }
        }
        if best == usize::MAX {
            Err(Error::Acyclic)
        } else {
            Ok(best)
        }
    }

    fn distance_excluding(&self, from: VertexId, to: VertexId, skip: EdgeId) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return Some(dist[v]);
            }
            for &d in &self.vertex_darts[v] {
                let e = dart_edge(d);
                if e == skip {
                    continue;
                }
                let w = self.other_endpoint(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Vertex-deleted subgraph together with the map new vertex -> old.
    pub fn delete_vertices(&self, doomed: &[VertexId]) -> (Multigraph, Vec<VertexId>) {
        let mut keep: Vec<bool> = vec![true; self.n];
        for &v in doomed {
            keep[v] = false;
        }
        let mut old_of_new = Vec::new();
        let mut new_of_old = vec![usize::MAX; self.n];
        for v in 0..self.n {
            if keep[v] {
                new_of_old[v] = old_of_new.len();
                old_of_new.push(v);
            }
        }
        let mut g = Multigraph::new(old_of_new.len());
        for &(u, v) in &self.edges {
            if keep[u] && keep[v] {
                g.add_edge(new_of_old[u], new_of_old[v]);
            }
        }
        (g, old_of_new)
    }

    /// Edge-deleted subgraph keeping all vertices; returns the map
    /// new edge id -> old edge id.
    pub fn delete_edges(&self, doomed: &EdgeSet) -> (Multigraph, Vec<EdgeId>) {
        let mut g = Multigraph::new(self.n);
        let mut old_of_new = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if !doomed.contains(e) {
                g.add_edge(u, v);
                old_of_new.push(e);
            }
        }
        (g, old_of_new)
    }

    /// All circuits of length `len` as sorted vertex-id cycles, deduplicated
    /// up to rotation and reflection. Returned as (vertex sequence, edge ids).
    pub fn circuits_of_length(&self, len: usize) -> Vec<(Vec<VertexId>, Vec<EdgeId>)> {
        let mut out: Vec<(Vec<VertexId>, Vec<EdgeId>)> = Vec::new();
        let mut seen: std::collections::HashSet<Vec<EdgeId>> = std::collections::HashSet::new();
        for start in 0..self.n {
            let mut path = vec![start];
            let mut used_edges: Vec<EdgeId> = Vec::new();
            self.circuit_dfs(start, start, len, &mut path, &mut used_edges, &mut seen, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn circuit_dfs(
        &self,
        start: VertexId,
        v: VertexId,
        len: usize,
        path: &mut Vec<VertexId>,
        used_edges: &mut Vec<EdgeId>,
        seen: &mut std::collections::HashSet<Vec<EdgeId>>,
        out: &mut Vec<(Vec<VertexId>, Vec<EdgeId>)>,
    ) {
        if path.len() == len {
            for e in 0..self.num_edges() {
                let (a, b) = self.edges[e];
                let closes = (a, b) == (v, start) || (a, b) == (start, v);
                if closes && !self.is_loop(e) && !used_edges.contains(&e) {
                    let mut key = used_edges.clone();
                    key.push(e);
                    key.sort_unstable();
                    if seen.insert(key) {
                        let mut edges = used_edges.clone();
                        edges.push(e);
                        out.push((path.clone(), edges));
                    }
                }
            }
            return;
        }
        for &d in &self.vertex_darts[v] {
            let e = dart_edge(d);
            if self.is_loop(e) || used_edges.contains(&e) {
                continue;
            }
            let w = self.other_endpoint(e, v);
            // vertices below start are handled from their own root
            if w < start || path.contains(&w) {
                continue;
            }
            path.push(w);
            used_edges.push(e);
            self.circuit_dfs(start, w, len, path, used_edges, seen, out);
            path.pop();
            used_edges.pop();
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        if let Some(&(u, v)) = repr.edges.iter().find(|&&(u, v)| u >= repr.n || v >= repr.n) {
            return Err(serde::de::Error::custom(format!(
                "edge ({u},{v}) out of range for n={}",
                repr.n
            )));
        }
        Ok(Multigraph::with_edges(repr.n, &repr.edges))
    }
}

impl Serialize for CubicGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CubicGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = Multigraph::deserialize(d)?;
        CubicGraph::from_multigraph(g).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A cubic multigraph: every vertex has degree exactly 3 (a loop counts
/// twice). Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicGraph(Multigraph);

impl CubicGraph {
    pub fn from_multigraph(g: Multigraph) -> Result<Self> {
        for v in 0..g.num_vertices() {
            if g.degree(v) != 3 {
                return Err(Error::NotCubic {
                    vertex: v,
                    degree: g.degree(v),
                });
            }
        }
        Ok(CubicGraph(g))
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_multigraph(Multigraph::with_edges(n, edges))
    }

    pub fn as_multigraph(&self) -> &Multigraph {
        &self.0
    }

    /// Replace vertex `v` with a triangle, each former edge attached to a
    /// distinct triangle vertex in the order of the former darts at `v`.
    pub fn inflate_vertex(&self, v: VertexId) -> Result<CubicGraph> {
        if self.edges_at(v).any(|e| self.is_loop(e)) {
            return Err(Error::LoopAtVertex(v));
        }
        let n = self.num_vertices();
        // v keeps its id as the first triangle vertex; two fresh vertices added
        let tri = [v, n, n + 1];
        let mut g = Multigraph::new(n + 2);
        let darts: Vec<DartId> = self.darts_at(v).to_vec();
        for (e, &(a, b)) in self.edge_list().iter().enumerate() {
            let fix = |x: VertexId, d_end: DartId| -> VertexId {
                if x == v {
                    let k = darts.iter().position(|&d| d == d_end).unwrap();
                    tri[k]
                } else {
                    x
                }
            };
            let na = fix(a, 2 * e);
            let nb = fix(b, 2 * e + 1);
            g.add_edge(na, nb);
        }
        g.add_edge(tri[0], tri[1]);
        g.add_edge(tri[1], tri[2]);
        g.add_edge(tri[2], tri[0]);
        CubicGraph::from_multigraph(g)
    }

    /// Contract every component of the subgraph into a single vertex; each
    /// component must have a 3-edge boundary for the result to be cubic.
    pub fn contract(&self, h: &SubgraphRef) -> Result<CubicGraph> {
        let inside = EdgeSet::from_iter(h.edges.iter().copied());
        let in_h = {
            let mut mask = vec![false; self.num_vertices()];
            for &v in &h.vertices {
                mask[v] = true;
            }
            mask
        };
        // components of H with respect to H's own edges
        let mut comp_of = vec![usize::MAX; self.num_vertices()];
        let mut ncomp = 0usize;
        for &root in &h.vertices {
            if comp_of[root] != usize::MAX {
                continue;
            }
            comp_of[root] = ncomp;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for e in self.edges_at(v) {
                    if !inside.contains(e) {
                        continue;
                    }
                    let w = self.other_endpoint(e, v);
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = ncomp;
                        queue.push_back(w);
                    }
                }
            }
            ncomp += 1;
        }
        let mut new_of_old = vec![usize::MAX; self.num_vertices()];
        let mut next = 0usize;
        for v in 0..self.num_vertices() {
            if !in_h[v] {
                new_of_old[v] = next;
                next += 1;
            }
        }
        for v in 0..self.num_vertices() {
            if in_h[v] {
                new_of_old[v] = next + comp_of[v];
            }
        }
        let mut g = Multigraph::new(next + ncomp);
        for (e, &(u, v)) in self.edge_list().iter().enumerate() {
            if inside.contains(e) {
                continue;
            }
            g.add_edge(new_of_old[u], new_of_old[v]);
        }
        CubicGraph::from_multigraph(g).map_err(|_| Error::NotCubicResult)
    }

    /// Delete edge `e` and smooth the resulting 2-valent vertices. A
    /// degree-2 vertex whose two darts belong to one loop is left in place.
    pub fn smooth_edge(&self, e: EdgeId) -> Result<Multigraph> {
        if self.is_loop(e) {
            return Err(Error::LoopEdge(e));
        }
        let (mut removed, _) = self.as_multigraph().delete_edges(&EdgeSet::singleton(e));
        loop {
            let Some(v) = (0..removed.num_vertices()).find(|&v| {
                removed.degree(v) == 2 && {
                    let ds = removed.darts_at(v);
                    dart_edge(ds[0]) != dart_edge(ds[1])
                }
            }) else {
                break;
            };
            let ds: Vec<DartId> = removed.darts_at(v).to_vec();
            let a = removed.dart_vertex(dart_twin(ds[0]));
            let b = removed.dart_vertex(dart_twin(ds[1]));
            let e1 = dart_edge(ds[0]);
            let e2 = dart_edge(ds[1]);
            let mut next = Multigraph::new(removed.num_vertices());
            for (f, &(x, y)) in removed.edge_list().iter().enumerate() {
                if f != e1 && f != e2 {
                    next.add_edge(x, y);
                }
            }
            next.add_edge(a, b);
            // drop the now-isolated vertex
            let (compacted, _) = next.delete_vertices(&[v]);
            removed = compacted;
        }
        Ok(removed)
    }
}

impl std::ops::Deref for CubicGraph {
    type Target = Multigraph;
    fn deref(&self) -> &Multigraph {
        &self.0
    }
}

impl std::fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CubicGraph(n={}, edges={:?})", self.num_vertices(), self.edge_list())
    }
}

/// A subgraph given by explicit vertex and edge sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphRef {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl SubgraphRef {
    /// Subgraph induced by a vertex set.
    pub fn induced(g: &Multigraph, vertices: &[VertexId]) -> Self {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mask: std::collections::HashSet<_> = vs.iter().copied().collect();
        let edges = (0..g.num_edges())
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                mask.contains(&u) && mask.contains(&v)
            })
            .collect();
        SubgraphRef { vertices: vs, edges }
    }

    /// The edge cut delta(vertices).
    pub fn boundary_edges(&self, g: &Multigraph) -> Vec<EdgeId> {
        let mask: std::collections::HashSet<_> = self.vertices.iter().copied().collect();
        (0..g.num_edges())
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                mask.contains(&u) != mask.contains(&v)
            })
            .collect()
    }

    pub fn boundary(&self, g: &Multigraph) -> EdgeCut {
        let edges = self.boundary_edges(g);
        EdgeCut::from_side(g, &self.vertices, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn petersen_basics() {
        let g = families::petersen();
        assert_eq!(g.num_vertices(), 10);
        assert_eq!(g.num_edges(), 15);
        assert_eq!(g.girth().unwrap(), 5);
        assert!(g.is_two_connected());
        assert!(g.is_bridgeless());
    }

    #[test]
    fn dipole_girth_and_degrees() {
        let g = families::dipole3();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.girth().unwrap(), 2);
        assert!(g.is_two_connected());
    }

    #[test]
    fn loop_counts_twice() {
        // one vertex with a loop cannot be cubic; loop + pendant edge graph
        let g = Multigraph::with_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.girth().unwrap(), 1);
        assert!(CubicGraph::from_multigraph(g).is_ok());
    }

    #[test]
    fn not_cubic_rejected() {
        let err = CubicGraph::from_edges(2, &[(0, 1)]).unwrap_err();
        assert!(matches!(err, Error::NotCubic { .. }));
    }

    #[test]
    fn inflate_then_contract_is_identity() {
        let g = families::petersen();
        for v in 0..g.num_vertices() {
            let inflated = g.inflate_vertex(v).unwrap();
            assert_eq!(inflated.num_vertices(), 12);
            assert_eq!(inflated.num_edges(), 18);
            assert_eq!(inflated.girth().unwrap(), 3);
            let tri = SubgraphRef::induced(
                inflated.as_multigraph(),
                &[v, g.num_vertices(), g.num_vertices() + 1],
            );
            let back = inflated.contract(&tri).unwrap();
            assert!(iso::isomorphic(&back, &g).is_some());
        }
    }

    #[test]
    fn contract_triangle_of_k4_gives_dipole() {
        let k4 = families::k4();
        let tri = SubgraphRef::induced(k4.as_multigraph(), &[0, 1, 2]);
        let c = k4.contract(&tri).unwrap();
        assert!(iso::isomorphic(&c, &families::dipole3()).is_some());
    }

    #[test]
    fn circuits_enumeration() {
        let g = families::petersen();
        assert_eq!(g.circuits_of_length(5).len(), 12);
        assert_eq!(g.circuits_of_length(3).len(), 0);
        assert_eq!(g.circuits_of_length(6).len(), 10);
        let d3 = families::dipole3();
        assert_eq!(d3.circuits_of_length(2).len(), 3);
    }

    #[test]
    fn smoothing_dipole_edge_keeps_loop_vertex() {
        let d3 = families::dipole3();
        let s = d3.smooth_edge(0).unwrap();
        // two parallel edges collapse onto a loop which is kept
        assert!(s.num_edges() >= 1);
        assert!(s.has_loop() || s.num_edges() == 0);
    }
}
