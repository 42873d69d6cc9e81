//! Perfect matching index: covers of the edge set by 4 or 5 perfect
//! matchings, the parity behaviour of covers on small cuts, apexes,
//! quasi-bipartiteness, 6-cut no-matching certificates, colour types of
//! 6-poles, and the structural audit of defect-3 graphs with index 5.
//!
//! Cover existence is decided by an edge-labelling search: assign every
//! edge the set of matching indices containing it, so that the three label
//! sets at each vertex partition {1..k}. Any such labelling is exactly a
//! k-cover by perfect matchings, and the label sizes at a vertex form a
//! composition of k into three parts of size at most k-2. Symmetry over
//! the k! matching permutations is broken at a root vertex whose labels
//! are forced to be increasing blocks.

use crate::bits::EdgeSet;
use crate::colouring::three_edge_colour;
use crate::decomposition::{decompose_along, SumKind};
use crate::defect::{colouring_defect, is_perfect_matching, AuditClause};
use crate::error::{Error, Result};
use crate::graph::cuts::{small_cuts, small_independent_cuts};
use crate::graph::{isomorphic, CubicGraph, EdgeId, Multigraph, SubgraphRef, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PMCover {
    pub matchings: Vec<EdgeSet>,
    pub doubly_set: EdgeSet,
}

impl PMCover {
    pub fn multiplicity(&self, e: EdgeId) -> usize {
        self.matchings.iter().filter(|m| m.contains(e)).count()
    }

    pub fn from_matchings(g: &Multigraph, matchings: Vec<EdgeSet>) -> PMCover {
        let doubly_set = EdgeSet::from_iter(
            (0..g.num_edges())
                .filter(|&e| matchings.iter().filter(|m| m.contains(e)).count() == 2),
        );
        PMCover {
            matchings,
            doubly_set,
        }
    }

    /// Union covers every edge and every member is a perfect matching.
    pub fn is_valid_cover(&self, g: &Multigraph) -> bool {
        let union = self
            .matchings
            .iter()
            .fold(EdgeSet::EMPTY, |acc, m| acc.union(m));
        union == EdgeSet::full(g.num_edges())
            && self.matchings.iter().all(|m| is_perfect_matching(g, m))
    }

    /// A valid 4-cover additionally has multiplicities in {1,2} with the
    /// doubly covered edges forming a perfect matching.
    pub fn is_four_cover(&self, g: &Multigraph) -> bool {
        self.matchings.len() == 4
            && self.is_valid_cover(g)
            && (0..g.num_edges()).all(|e| (1..=2).contains(&self.multiplicity(e)))
            && is_perfect_matching(g, &self.doubly_set)
    }
}

/// Exact k-cover search by labelling edges with subsets of matching
/// indices, decided by a SAT solver over variables "edge e lies in
/// matching i". Each matching meets every vertex exactly once and every
/// edge is covered; the index sets at a vertex then partition {1..k}
/// automatically. Symmetry over matching permutations is broken by
/// assuming increasing index blocks at vertex 0, one assumption set per
/// composition of k into three parts. Returns per-edge index bitmasks,
/// or `None` after refuting every composition.
fn k_cover_labels(g: &CubicGraph, k: usize) -> Option<Vec<u8>> {
    use varisat::{ExtendFormula, Lit, Solver};
    let m = g.num_edges();
    if g.has_loop() {
        return None;
    }
    let var = |e: EdgeId, i: usize| Lit::from_index(e * k + i, true);
    let mut solver = Solver::new();
    for v in 0..g.num_vertices() {
        let edges: Vec<EdgeId> = g.darts_at(v).iter().map(|&d| d / 2).collect();
        for i in 0..k {
            let lits: Vec<Lit> = edges.iter().map(|&e| var(e, i)).collect();
            solver.add_clause(&lits);
            for a in 0..3 {
                for b in a + 1..3 {
                    solver.add_clause(&[!lits[a], !lits[b]]);
                }
            }
        }
    }
    for e in 0..m {
        let lits: Vec<Lit> = (0..k).map(|i| var(e, i)).collect();
        solver.add_clause(&lits);
    }
    let root: Vec<EdgeId> = g.darts_at(0).iter().map(|&d| d / 2).collect();
    for s0 in 1..=k - 2 {
        for s1 in 1..=k - 2 {
            if k < s0 + s1 + 1 || k - s0 - s1 > k - 2 {
                continue;
            }
            let mut assumptions = Vec::new();
            for i in 0..k {
                let slot = if i < s0 {
                    0
                } else if i < s0 + s1 {
                    1
                } else {
                    2
                };
                assumptions.push(var(root[slot], i));
            }
            solver.assume(&assumptions);
            if solver.solve().expect("sat solver failure") {
                let model = solver.model().expect("sat model missing");
                let mut label = vec![0u8; m];
                for lit in model {
                    if lit.is_positive() && lit.index() < m * k {
                        label[lit.index() / k] |= 1 << (lit.index() % k);
                    }
                }
                return Some(label);
            }
        }
    }
    None
}

fn cover_from_labels(g: &CubicGraph, k: usize, label: &[u8]) -> PMCover {
    let matchings: Vec<EdgeSet> = (0..k)
        .map(|i| EdgeSet::from_iter((0..g.num_edges()).filter(|&e| label[e] >> i & 1 == 1)))
        .collect();
    let cover = PMCover::from_matchings(g, matchings);
    assert!(cover.is_valid_cover(g), "label search produced a bad cover");
    cover
}

/// A cover of the edge set by four perfect matchings, or `None` after an
/// exhaustive search.
pub fn find_4cover(g: &CubicGraph) -> Result<Option<PMCover>> {
    if !g.is_bridgeless() {
        return Err(Error::Bridged);
    }
    Ok(k_cover_labels(g, 4).map(|l| {
        let cover = cover_from_labels(g, 4, &l);
        assert!(cover.is_four_cover(g));
        cover
    }))
}

/// A cover of the edge set by five perfect matchings, or `None`.
pub fn find_5cover(g: &CubicGraph) -> Result<Option<PMCover>> {
    if !g.is_bridgeless() {
        return Err(Error::Bridged);
    }
    Ok(k_cover_labels(g, 5).map(|l| cover_from_labels(g, 5, &l)))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum Pmi {
    Exact { value: u8, cover: PMCover },
    ExceedsCap { cap: u8 },
}

impl Pmi {
    pub fn value(&self) -> Option<u8> {
        match self {
            Pmi::Exact { value, .. } => Some(*value),
            Pmi::ExceedsCap { .. } => None,
        }
    }

    pub fn cover(&self) -> Option<&PMCover> {
        match self {
            Pmi::Exact { cover, .. } => Some(cover),
            Pmi::ExceedsCap { .. } => None,
        }
    }
}

/// Minimum number of perfect matchings covering the edge set, computed in
/// layers: 3 iff 3-edge-colourable, then a 4-cover search, then 5.
pub fn perfect_matching_index(g: &CubicGraph, cap: u8) -> Result<Pmi> {
    if !g.is_bridgeless() {
        return Err(Error::Bridged);
    }
    if let Some(col) = three_edge_colour(g, &BTreeMap::new())? {
        let arr = crate::defect::ThreeArray::from_colouring(g, &col);
        return Ok(Pmi::Exact {
            value: 3,
            cover: PMCover::from_matchings(g, arr.matchings.to_vec()),
        });
    }
    if cap < 4 {
        return Ok(Pmi::ExceedsCap { cap });
    }
    if let Some(cover) = find_4cover(g)? {
        return Ok(Pmi::Exact { value: 4, cover });
    }
    if cap < 5 {
        return Ok(Pmi::ExceedsCap { cap });
    }
    if let Some(cover) = find_5cover(g)? {
        return Ok(Pmi::Exact { value: 5, cover });
    }
    Ok(Pmi::ExceedsCap { cap })
}

/// Parity behaviour of a 4-cover on small cuts: both edges of a 2-cut are
/// simply covered or both doubly, by the same members; a 3-cut has one or
/// all three edges doubly covered, and in the latter case some member
/// contains the whole cut.
pub fn cut_parity_audit(g: &CubicGraph, cover: &PMCover) -> Vec<AuditClause> {
    let members = |e: EdgeId| -> Vec<usize> {
        cover
            .matchings
            .iter()
            .enumerate()
            .filter(|(_, m)| m.contains(e))
            .map(|(i, _)| i)
            .collect()
    };
    let cuts = small_cuts(g);
    let mut two_checked = 0usize;
    let mut two_pass = true;
    let mut three_checked = 0usize;
    let mut three_pass = true;
    for cut in &cuts {
        match cut.size() {
            2 => {
                two_checked += 1;
                let (a, b) = (cut.edges[0], cut.edges[1]);
                if cover.multiplicity(a) != cover.multiplicity(b) || members(a) != members(b) {
                    two_pass = false;
                }
            }
            3 => {
                three_checked += 1;
                let doubly = cut
                    .edges
                    .iter()
                    .filter(|&&e| cover.multiplicity(e) == 2)
                    .count();
                if doubly != 1 && doubly != 3 {
                    three_pass = false;
                }
                if doubly == 3 {
                    let cut_set = EdgeSet::from_iter(cut.edges.iter().copied());
                    if !cover.matchings.iter().any(|m| cut_set.is_subset(m)) {
                        three_pass = false;
                    }
                }
            }
            _ => {}
        }
    }
    vec![
        AuditClause {
            name: "2-cut-edges-same-members".into(),
            checked: two_checked,
            pass: two_pass,
        },
        AuditClause {
            name: "3-cut-one-or-all-doubly".into(),
            checked: three_checked,
            pass: three_pass,
        },
    ]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ApexReport {
    pub apex: bool,
    pub pmi_of_inflation: Option<u8>,
}

/// A vertex is an apex when inflating it to a triangle yields a graph
/// whose matchings need exactly four covers. The raw index is reported
/// alongside, since for colourable graphs the inflation has index 3.
pub fn is_apex(g: &CubicGraph, v: VertexId) -> Result<ApexReport> {
    let inflated = g.inflate_vertex(v)?;
    let pmi = perfect_matching_index(&inflated, 5)?;
    Ok(ApexReport {
        apex: pmi.value() == Some(4),
        pmi_of_inflation: pmi.value(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiBipartiteWitness {
    pub bipartising: Vec<VertexId>,
    pub components: Vec<Vec<VertexId>>,
}

fn components_of_complement(k: &Multigraph, u: &[VertexId]) -> Vec<Vec<VertexId>> {
    let in_u: HashSet<VertexId> = u.iter().copied().collect();
    let mut seen: HashSet<VertexId> = HashSet::new();
    let mut comps = Vec::new();
    for start in 0..k.num_vertices() {
        if in_u.contains(&start) || seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut qi = 0;
        while qi < comp.len() {
            let v = comp[qi];
            qi += 1;
            for e in k.edges_at(v) {
                let w = k.other_endpoint(e, v);
                if !in_u.contains(&w) && !seen.contains(&w) {
                    seen.insert(w);
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn boundary_size(k: &Multigraph, comp: &[VertexId]) -> usize {
    let inside: HashSet<VertexId> = comp.iter().copied().collect();
    (0..k.num_edges())
        .filter(|&e| {
            let (u, v) = k.endpoints(e);
            inside.contains(&u) != inside.contains(&v)
        })
        .count()
}

/// An independent set U with |U| >= 2 such that every component of K - U
/// sends exactly three edges to U; contracting those components then gives
/// a bipartite cubic graph with parts U and the components. When
/// `required_trivial` is set, that vertex must form a singleton component.
pub fn quasi_bipartite(
    k: &CubicGraph,
    required_trivial: Option<VertexId>,
) -> Option<QuasiBipartiteWitness> {
    let n = k.num_vertices();
    let is_independent = |u: &[VertexId]| -> bool {
        u.iter()
            .all(|&a| u.iter().all(|&b| a == b || k.edge_between(a, b).is_none()))
    };
    let check = |u: &[VertexId]| -> Option<QuasiBipartiteWitness> {
        if u.len() < 2 || !is_independent(u) {
            return None;
        }
        let comps = components_of_complement(k, u);
        if comps.is_empty() || comps.iter().any(|c| boundary_size(k, c) != 3) {
            return None;
        }
        if let Some(v) = required_trivial {
            if !comps.iter().any(|c| c.as_slice() == [v]) {
                return None;
            }
        }
        Some(QuasiBipartiteWitness {
            bipartising: u.to_vec(),
            components: comps,
        })
    };
    // the required trivial component pins U to contain all its neighbours
    let forced: Vec<VertexId> = match required_trivial {
        Some(v) => {
            let mut nb: Vec<VertexId> = k.edges_at(v).map(|e| k.other_endpoint(e, v)).collect();
            nb.sort_unstable();
            nb.dedup();
            if nb.len() != 3 || nb.contains(&v) {
                return None;
            }
            nb
        }
        None => Vec::new(),
    };
    if !forced.is_empty() && !is_independent(&forced) {
        return None;
    }
    let free: Vec<VertexId> = (0..n)
        .filter(|v| !forced.contains(v) && Some(*v) != required_trivial)
        .collect();
    // grow U over subsets of the free vertices, smallest additions first
    let limit = 1usize << free.len();
    for mask in 0..limit {
        let mut u = forced.clone();
        for (i, &v) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                u.push(v);
            }
        }
        if let Some(w) = check(&u) {
            return Some(w);
        }
    }
    None
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SixCutCertificate {
    pub independent_set: Vec<VertexId>,
    pub components: Vec<Vec<VertexId>>,
    pub odd_components: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum SixCutOutcome {
    HasMatching { matching: Vec<EdgeId> },
    NoMatching { certificate: SixCutCertificate },
}

fn induced_matching_search(g: &Multigraph, vertices: &[VertexId]) -> Option<Vec<EdgeId>> {
    let inside: HashSet<VertexId> = vertices.iter().copied().collect();
    if vertices.len() % 2 != 0 {
        return None;
    }
    let mut covered: HashSet<VertexId> = HashSet::new();
    let mut chosen: Vec<EdgeId> = Vec::new();
    fn rec(
        g: &Multigraph,
        inside: &HashSet<VertexId>,
        order: &[VertexId],
        covered: &mut HashSet<VertexId>,
        chosen: &mut Vec<EdgeId>,
    ) -> bool {
        let Some(&v) = order.iter().find(|v| !covered.contains(v)) else {
            return true;
        };
        for e in g.edges_at(v) {
            let w = g.other_endpoint(e, v);
            if w == v || !inside.contains(&w) || covered.contains(&w) {
                continue;
            }
            covered.insert(v);
            covered.insert(w);
            chosen.push(e);
            if rec(g, inside, order, covered, chosen) {
                return true;
            }
            chosen.pop();
            covered.remove(&v);
            covered.remove(&w);
        }
        false
    }
    let mut order = vertices.to_vec();
    order.sort_unstable();
    if rec(g, &inside, &order, &mut covered, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// For a subgraph H with a 6-edge boundary: either a perfect matching of
/// H, or an independent set S of vertices 3-valent in H with
/// odd(H - S) = |S| + 2 and every component of H - S leaving on exactly
/// three edges of the ambient graph.
pub fn six_cut_certificate(g: &CubicGraph, h: &SubgraphRef) -> Result<SixCutOutcome> {
    if h.boundary_edges(g).len() != 6 {
        return Err(Error::NotSixCut);
    }
    if let Some(matching) = induced_matching_search(g, &h.vertices) {
        return Ok(SixCutOutcome::HasMatching { matching });
    }
    let inside: HashSet<VertexId> = h.vertices.iter().copied().collect();
    let degree_in_h = |v: VertexId| -> usize {
        g.darts_at(v)
            .iter()
            .filter(|&&d| {
                let e = d / 2;
                let (a, b) = g.endpoints(e);
                inside.contains(&a) && inside.contains(&b)
            })
            .count()
    };
    let candidates: Vec<VertexId> = h
        .vertices
        .iter()
        .copied()
        .filter(|&v| degree_in_h(v) == 3)
        .collect();
    // search independent S by size; guaranteed to exist when H lacks a
    // perfect matching inside a bridgeless cubic ambient graph
    let limit = 1usize << candidates.len();
    let mut best: Option<SixCutCertificate> = None;
    for mask in 0..limit {
        let s: Vec<VertexId> = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if best.as_ref().is_some_and(|b| b.independent_set.len() <= s.len()) {
            continue;
        }
        let independent = s
            .iter()
            .all(|&a| s.iter().all(|&b| a == b || g.edge_between(a, b).is_none()));
        if !independent {
            continue;
        }
        let rest: Vec<VertexId> = h
            .vertices
            .iter()
            .copied()
            .filter(|v| !s.contains(v))
            .collect();
        let sub = induced_multigraph(g, &rest);
        let comps = sub.components();
        let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
        if odd != s.len() + 2 {
            continue;
        }
        let all_three = comps.iter().all(|c| {
            let original: Vec<VertexId> = c.iter().map(|&i| rest[i]).collect();
            boundary_size(g, &original) == 3
        });
        if all_three {
            best = Some(SixCutCertificate {
                independent_set: s,
                components: comps
                    .iter()
                    .map(|c| c.iter().map(|&i| rest[i]).collect())
                    .collect(),
                odd_components: odd,
            });
        }
    }
    match best {
        Some(certificate) => Ok(SixCutOutcome::NoMatching { certificate }),
        None => Err(Error::VerificationFailed(
            "subgraph lacks both a perfect matching and a no-matching certificate".into(),
        )),
    }
}

fn induced_multigraph(g: &Multigraph, vertices: &[VertexId]) -> Multigraph {
    let index: BTreeMap<VertexId, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut h = Multigraph::new(vertices.len());
    for e in 0..g.num_edges() {
        let (u, v) = g.endpoints(e);
        if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
            h.add_edge(a, b);
        }
    }
    h
}

/// Canonical representative of a 6-edge colour vector: the
/// lexicographically least image over the six colour permutations.
pub fn canonical_type(v: [u8; 6]) -> [u8; 6] {
    let perms: [[u8; 4]; 6] = [
        [0, 1, 2, 3],
        [0, 1, 3, 2],
        [0, 2, 1, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [0, 3, 2, 1],
    ];
    perms
        .iter()
        .map(|p| v.map(|c| p[c as usize]))
        .min()
        .unwrap()
}

/// All 15 canonical types in which each colour appears exactly twice.
pub fn balanced_types() -> BTreeSet<[u8; 6]> {
    let mut out = BTreeSet::new();
    fn rec(prefix: &mut Vec<u8>, counts: &mut [usize; 4], out: &mut BTreeSet<[u8; 6]>) {
        if prefix.len() == 6 {
            let v: [u8; 6] = prefix.as_slice().try_into().unwrap();
            out.insert(canonical_type(v));
            return;
        }
        for c in 1..=3u8 {
            if counts[c as usize] < 2 {
                counts[c as usize] += 1;
                prefix.push(c);
                rec(prefix, counts, out);
                prefix.pop();
                counts[c as usize] -= 1;
            }
        }
    }
    rec(&mut Vec::new(), &mut [0; 4], &mut out);
    out
}

/// Canonical boundary types over the proper 3-edge-colourings of a
/// 6-pole, read along the supplied edge ordering. Only types using all
/// three colours are reported: a type missing a colour exhibits a colour
/// class that is a perfect matching of the interior, which the cover
/// arguments treat separately.
pub fn pole_colour_types(g: &Multigraph, boundary: &[EdgeId; 6]) -> Result<BTreeSet<[u8; 6]>> {
    if boundary.iter().any(|&e| e >= g.num_edges()) {
        return Err(Error::NotSixCut);
    }
    let mut types = BTreeSet::new();
    let mut colour = vec![0u8; g.num_edges()];
    if g.has_loop() || (0..g.num_vertices()).any(|v| g.degree(v) > 3) {
        return Ok(types);
    }
    crate::colouring::enumerate_colourings(g, &mut colour, &mut |c| {
        let v: [u8; 6] = boundary.map(|e| c[e]);
        if (1..=3).all(|col| v.contains(&col)) {
            types.insert(canonical_type(v));
        }
        true
    });
    Ok(types)
}

/// Colour types of the 6-pole obtained from a subgraph with a 6-edge
/// boundary by cutting each boundary edge and appending a pendant vertex.
/// `ordering` fixes the reading order and must list exactly the boundary.
pub fn colour_types(
    g: &CubicGraph,
    h: &SubgraphRef,
    ordering: &[EdgeId; 6],
) -> Result<BTreeSet<[u8; 6]>> {
    let mut boundary = h.boundary_edges(g);
    boundary.sort_unstable();
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if boundary.len() != 6 || sorted != boundary {
        return Err(Error::NotSixCut);
    }
    let index: BTreeMap<VertexId, usize> = h
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut pole = Multigraph::new(h.vertices.len());
    for e in 0..g.num_edges() {
        let (u, v) = g.endpoints(e);
        if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
            pole.add_edge(a, b);
        }
    }
    let mut pendant = [0 as EdgeId; 6];
    for (i, &e) in ordering.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        let inside = *index.get(&u).or_else(|| index.get(&v)).unwrap();
        let p = pole.add_vertex();
        pendant[i] = pole.add_edge(inside, p);
    }
    pole_colour_types(&pole, &pendant)
}

/// The 6-pole of a hexagonal core met by a triangle: hexagon v0..v5, a
/// triangle over the edge v1v2 with apex `v`, the apex's outside
/// neighbour `w`, and six pendant boundary edges — f0, f1 at w, then the
/// edges leaving the hexagon at v3, v4, v5, v0 in cyclic order. Returns
/// the graph together with the boundary ordering f0..f5.
pub fn core_triangle_fragment() -> (Multigraph, [EdgeId; 6]) {
    // vertices: 0..6 hexagon, 6 = apex v, 7 = w, 8..14 pendant ends
    let mut g = Multigraph::new(14);
    for i in 0..6 {
        g.add_edge(i, (i + 1) % 6); // hexagon edges 0..6
    }
    g.add_edge(6, 1); // triangle sides
    g.add_edge(6, 2);
    g.add_edge(6, 7); // apex to w
    let f0 = g.add_edge(7, 8);
    let f1 = g.add_edge(7, 9);
    let f2 = g.add_edge(3, 10);
    let f3 = g.add_edge(4, 11);
    let f4 = g.add_edge(5, 12);
    let f5 = g.add_edge(0, 13);
    (g, [f0, f1, f2, f3, f4, f5])
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecoveredOp {
    /// 2-sum insertions recover an edge piece, 3-sum substitutions a
    /// vertex piece
    pub kind: SumKind,
    pub piece: CubicGraph,
    /// distinguished element inside the piece (edge id or vertex id)
    pub piece_element: usize,
    /// for substitutions: the piece is quasi-bipartite with its
    /// distinguished vertex as a trivial component
    pub substitution_ok: Option<bool>,
    /// the host-side distinguished element avoided the hexagonal core
    pub host_element_avoids_core: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharAudit {
    pub host_is_petersen: bool,
    pub ops: Vec<RecoveredOp>,
    pub pass: bool,
}

/// Structural audit of a defect-3 graph with matching index 5: peel off
/// colourable factors along small independent cuts one at a time, keeping
/// the defect-3 side as the shrinking host. The host must end up as the
/// Petersen graph, every peeled 3-sum piece must be quasi-bipartite with
/// a trivial distinguished component, and every host-side distinguished
/// element must avoid the current hexagonal core.
pub fn char_audit_pi5(g: &CubicGraph) -> Result<CharAudit> {
    let cert = colouring_defect(g)?;
    if cert.defect != 3 {
        return Err(Error::PreconditionFailed("colouring defect is not 3".into()));
    }
    if !cert.hexagonal {
        return Err(Error::PreconditionFailed("no hexagonal core".into()));
    }
    let pmi = perfect_matching_index(g, 5)?;
    if pmi.value() != Some(5) {
        return Err(Error::PreconditionFailed(
            "perfect matching index is not 5".into(),
        ));
    }
    let mut host = g.clone();
    // one fixed hexagonal core is traced through every peel; avoidance is
    // judged against this single core, not against per-host re-derived ones
    let mut core_cycle = cert
        .core
        .cycle_vertices(&host)
        .expect("hexagonal core traces a cycle");
    let mut ops = Vec::new();
    let mut pass = true;
    loop {
        let cuts = small_independent_cuts(&host);
        let Some(cut) = cuts.first() else {
            break;
        };
        let split = decompose_along(&host, cut)?;
        let left_colourable = three_edge_colour(&split.left, &BTreeMap::new())?.is_some();
        let (piece, next_host, origin, piece_element, host_element) = if left_colourable {
            (
                split.left,
                split.right,
                &split.right_origin,
                split.spec.left_element,
                split.spec.right_element,
            )
        } else {
            (
                split.right,
                split.left,
                &split.left_origin,
                split.spec.right_element,
                split.spec.left_element,
            )
        };
        let to_child: BTreeMap<VertexId, VertexId> = origin
            .iter()
            .enumerate()
            .filter_map(|(child, orig)| orig.map(|p| (p, child)))
            .collect();
        let mapped: Option<Vec<VertexId>> = core_cycle
            .iter()
            .map(|v| to_child.get(v).copied())
            .collect();
        let Some(mapped) = mapped else {
            return Err(Error::VerificationFailed(
                "cut separates the hexagonal core".into(),
            ));
        };
        if crate::defect::verify_hexagonal_core(&next_host, &mapped)?.is_none() {
            return Err(Error::VerificationFailed(
                "host side lost its defect-3 hexagonal core".into(),
            ));
        }
        let host_element_avoids_core = match split.spec.kind {
            SumKind::Sum2 => !(0..6).any(|i| {
                next_host.edge_between(mapped[i], mapped[(i + 1) % 6]) == Some(host_element)
            }),
            SumKind::Sum3 => !mapped.contains(&host_element),
        };
        let substitution_ok = match split.spec.kind {
            SumKind::Sum2 => None,
            SumKind::Sum3 => Some(quasi_bipartite(&piece, Some(piece_element)).is_some()),
        };
        if !host_element_avoids_core || substitution_ok == Some(false) {
            pass = false;
        }
        ops.push(RecoveredOp {
            kind: split.spec.kind,
            piece,
            piece_element,
            substitution_ok,
            host_element_avoids_core,
        });
        core_cycle = mapped;
        host = next_host;
    }
    let host_is_petersen = isomorphic(&host, &crate::families::petersen()).is_some();
    if !host_is_petersen {
        pass = false;
    }
    Ok(CharAudit {
        host_is_petersen,
        ops,
        pass,
    })
}
