//! Colouring defect: triples of perfect matchings, their cores, and the
//! structure around a hexagonal core.
//!
//! A 3-array is a triple of perfect matchings. Its multiplicity function
//! counts how many matchings contain each edge; edges of multiplicity one
//! are "simply covered" and the rest form the core. The defect of a graph
//! is the minimum number of uncovered edges over all 3-arrays. A graph is
//! 3-edge-colourable iff its defect is 0, and every snark has defect at
//! least 3, in which case an optimal core is a chordless 6-cycle on which
//! uncovered and doubly covered edges alternate.

use crate::bits::EdgeSet;
use crate::colouring::{three_edge_colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Multigraph, SubgraphRef, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeArray {
    pub matchings: [EdgeSet; 3],
}

impl ThreeArray {
    pub fn multiplicity(&self, e: EdgeId) -> u8 {
        self.matchings.iter().filter(|m| m.contains(e)).count() as u8
    }

    pub fn uncovered(&self, g: &Multigraph) -> EdgeSet {
        let all = EdgeSet::full(g.num_edges());
        let union = self.matchings[0]
            .union(&self.matchings[1])
            .union(&self.matchings[2]);
        all.difference(&union)
    }

    /// Checks that each member is a perfect matching of `g`.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        self.matchings.iter().all(|m| is_perfect_matching(g, m))
    }

    /// The three colour classes of a proper 3-edge-colouring form a
    /// 3-array with no uncovered edge.
    pub fn from_colouring(_g: &Multigraph, col: &EdgeColouring) -> ThreeArray {
        let mut matchings = [EdgeSet::EMPTY; 3];
        for (&e, &c) in &col.colour {
            matchings[(c - 1) as usize].insert(e);
        }
        ThreeArray { matchings }
    }
}

pub fn is_perfect_matching(g: &Multigraph, m: &EdgeSet) -> bool {
    let mut covered = vec![false; g.num_vertices()];
    for e in m.iter() {
        if e >= g.num_edges() || g.is_loop(e) {
            return false;
        }
        let (u, v) = g.endpoints(e);
        if covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

/// Edges of a 3-array that are not simply covered, split by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Core {
    pub edges: EdgeSet,
    pub uncovered: EdgeSet,
    pub doubly: EdgeSet,
    pub triply: EdgeSet,
}

impl Core {
    pub fn of_array(g: &Multigraph, a: &ThreeArray) -> Core {
        let mut uncovered = EdgeSet::EMPTY;
        let mut doubly = EdgeSet::EMPTY;
        let mut triply = EdgeSet::EMPTY;
        for e in 0..g.num_edges() {
            match a.multiplicity(e) {
                0 => uncovered.insert(e),
                2 => doubly.insert(e),
                3 => triply.insert(e),
                _ => {}
            }
        }
        Core {
            edges: uncovered.union(&doubly).union(&triply),
            uncovered,
            doubly,
            triply,
        }
    }

    /// Chordless 6-cycle on which uncovered and doubly covered edges
    /// alternate, with nothing triply covered.
    pub fn is_hexagonal(&self, g: &Multigraph) -> bool {
        if self.uncovered.len() != 3 || self.doubly.len() != 3 || !self.triply.is_empty() {
            return false;
        }
        let Some(cycle) = trace_cycle(g, &self.edges) else {
            return false;
        };
        if cycle.vertices.len() != 6 {
            return false;
        }
        // induced: no chord between the six vertices
        let on_cycle: std::collections::HashSet<_> = cycle.vertices.iter().copied().collect();
        for e in 0..g.num_edges() {
            let (u, v) = g.endpoints(e);
            if on_cycle.contains(&u) && on_cycle.contains(&v) && !self.edges.contains(e) {
                return false;
            }
        }
        // multiplicity classes alternate around the cycle
        cycle
            .edges
            .iter()
            .zip(cycle.edges.iter().cycle().skip(1))
            .all(|(&e, &f)| self.uncovered.contains(e) != self.uncovered.contains(f))
    }

    /// Vertices of the core in cyclic order, when the core is a single cycle.
    pub fn cycle_vertices(&self, g: &Multigraph) -> Option<Vec<VertexId>> {
        trace_cycle(g, &self.edges).map(|c| c.vertices)
    }
}

struct TracedCycle {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

/// If `edges` form a single simple cycle in `g`, list its vertices and
/// edges in cyclic order.
fn trace_cycle(g: &Multigraph, edges: &EdgeSet) -> Option<TracedCycle> {
    let ids = edges.to_vec();
    if ids.is_empty() {
        return None;
    }
    let mut incident: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for &e in &ids {
        let (u, v) = g.endpoints(e);
        if u == v {
            return None;
        }
        incident.entry(u).or_default().push(e);
        incident.entry(v).or_default().push(e);
    }
    if incident.values().any(|es| es.len() != 2) || incident.len() != ids.len() {
        return None;
    }
    let start = *incident.keys().next().unwrap();
    let mut vertices = vec![start];
    let mut cycle_edges = vec![incident[&start][0]];
    let mut cur = g.other_endpoint(incident[&start][0], start);
    while cur != start {
        vertices.push(cur);
        let prev = *cycle_edges.last().unwrap();
        let next = incident[&cur].iter().copied().find(|&e| e != prev)?;
        cycle_edges.push(next);
        cur = g.other_endpoint(next, cur);
    }
    if vertices.len() == ids.len() {
        Some(TracedCycle {
            vertices,
            edges: cycle_edges,
        })
    } else {
        None
    }
}

/// Edge labels from a 3-array: the set of matching indices containing each
/// edge, stored as a bitmask over {1,2,3}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoColouring {
    pub label: Vec<u8>,
    /// No edge carries the full label {1,2,3}, and the three labels at
    /// each vertex form one of the lines {1,2,3}, {0,1,23}, {0,2,13},
    /// {0,3,12}.
    pub proper: bool,
}

impl FanoColouring {
    /// Because each matching covers every vertex exactly once, the labels
    /// at a cubic vertex xor to the full set {1,2,3} — the conservation
    /// law this colouring satisfies by construction.
    pub fn is_conservative(&self, g: &Multigraph) -> bool {
        (0..g.num_vertices()).all(|v| {
            let sum = g
                .edges_at(v)
                .fold(0u8, |acc, e| acc ^ self.label[e]);
            sum == 0b111
        })
    }
}

pub fn fano_colouring(g: &Multigraph, a: &ThreeArray) -> FanoColouring {
    let label: Vec<u8> = (0..g.num_edges())
        .map(|e| {
            (0..3)
                .filter(|&i| a.matchings[i].contains(e))
                .fold(0u8, |acc, i| acc | 1 << i)
        })
        .collect();
    let lines: [[u8; 3]; 4] = [
        [0b001, 0b010, 0b100],
        [0b000, 0b001, 0b110],
        [0b000, 0b010, 0b101],
        [0b000, 0b011, 0b100],
    ];
    let proper = label.iter().all(|&l| l != 0b111)
        && (0..g.num_vertices()).all(|v| {
            let mut at: Vec<u8> = g.edges_at(v).map(|e| label[e]).collect();
            at.sort_unstable();
            at.len() != 3 || lines.contains(&[at[0], at[1], at[2]])
        });
    let out = FanoColouring { label, proper };
    debug_assert!(
        g.has_loop() || !a.is_valid(g) || out.is_conservative(g),
        "matching labels violate conservation"
    );
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DefectCertificate {
    pub defect: usize,
    pub witness: ThreeArray,
    pub core: Core,
    pub hexagonal: bool,
}

/// All perfect matchings, in a deterministic order (backtracking on the
/// lowest-id uncovered vertex, edges tried in increasing id).
pub fn perfect_matchings(g: &CubicGraph) -> Result<Vec<EdgeSet>> {
    if !g.is_bridgeless() {
        return Err(Error::Bridged);
    }
    let n = g.num_vertices();
    let mut out = Vec::new();
    let mut covered = vec![false; n];
    let mut chosen = EdgeSet::EMPTY;
    fn rec(
        g: &CubicGraph,
        covered: &mut Vec<bool>,
        chosen: &mut EdgeSet,
        out: &mut Vec<EdgeSet>,
    ) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            out.push(*chosen);
            return;
        };
        let mut edges: Vec<EdgeId> = g.edges_at(v).filter(|&e| !g.is_loop(e)).collect();
        edges.sort_unstable();
        edges.dedup();
        for e in edges {
            let w = g.other_endpoint(e, v);
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.insert(e);
            rec(g, covered, chosen, out);
            chosen.remove(e);
            covered[v] = false;
            covered[w] = false;
        }
    }
    rec(g, &mut covered, &mut chosen, &mut out);
    Ok(out)
}

/// Exact colouring defect with a witness 3-array.
///
/// Strategy: if the graph is colourable the classes of a colouring give a
/// defect-0 array. Otherwise the defect is at least 3, and we search for a
/// witness by iterative deepening on the target value t = 3, 4, ...: a
/// triple (Mi, Mj, Mk) leaves at least |Mi ∩ Mj| edges uncovered, so for a
/// fixed target only pairs with small intersection need a third matching.
/// Triples are scanned in lexicographic index order, which makes the
/// returned witness the least one achieving the optimum.
pub fn colouring_defect(g: &CubicGraph) -> Result<DefectCertificate> {
    let pms = perfect_matchings(g)?;
    let m = g.num_edges();
    if let Some(col) = three_edge_colour(g, &BTreeMap::new())? {
        let witness = ThreeArray::from_colouring(g, &col);
        let core = Core::of_array(g, &witness);
        return Ok(DefectCertificate {
            defect: 0,
            witness,
            core,
            hexagonal: false,
        });
    }
    let p = pms.len();
    for target in 3..=m {
        for i in 0..p {
            for j in i..p {
                let inter = pms[i].intersection(&pms[j]).len();
                if inter > target {
                    continue;
                }
                let union_ij = pms[i].union(&pms[j]);
                for pk in pms.iter().skip(j) {
                    let uncovered = m - union_ij.union(pk).len();
                    if uncovered == target {
                        let witness = ThreeArray {
                            matchings: [pms[i], pms[j], *pk],
                        };
                        let core = Core::of_array(g, &witness);
                        let hexagonal = core.is_hexagonal(g);
                        return Ok(DefectCertificate {
                            defect: target,
                            witness,
                            core,
                            hexagonal,
                        });
                    }
                }
            }
        }
    }
    Err(Error::PreconditionFailed(
        "graph admits no 3-array; it has no perfect matching".into(),
    ))
}

/// A proper 3-edge-colouring of G − E(C) whose six boundary colours, read
/// around the given induced 6-cycle, follow the pattern 1,1,2,2,3,3 or
/// 1,2,2,3,3,1 up to rotation, reflection and colour permutation. For a
/// snark, presence of such a colouring certifies defect 3 with core C.
pub fn verify_hexagonal_core(
    g: &CubicGraph,
    cycle: &[VertexId],
) -> Result<Option<(EdgeColouring, Vec<u8>)>> {
    let cycle_edges = induced_six_cycle_edges(g, cycle)?;
    // the third edge at each cycle vertex leaves the cycle
    let boundary: Vec<EdgeId> = (0..6)
        .map(|i| {
            g.edges_at(cycle[i])
                .find(|&e| !cycle_edges.contains(&e))
                .expect("cubic vertex has an edge off the cycle")
        })
        .collect();
    let mask = EdgeSet::from_iter(cycle_edges.iter().copied());
    let (rest, edge_map) = g.delete_edges(&mask);
    let mut new_of_old: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for (new, &old) in edge_map.iter().enumerate() {
        new_of_old.insert(old, new);
    }
    for pattern in [[1u8, 1, 2, 2, 3, 3], [1, 2, 2, 3, 3, 1]] {
        for rot in 0..6 {
            for reflect in [false, true] {
                let assigned: Vec<u8> = (0..6)
                    .map(|i| {
                        let pos = if reflect { (6 + rot - i) % 6 } else { (i + rot) % 6 };
                        pattern[pos]
                    })
                    .collect();
                let mut fixed = BTreeMap::new();
                let mut consistent = true;
                for i in 0..6 {
                    let ne = new_of_old[&boundary[i]];
                    if let Some(&prev) = fixed.get(&ne) {
                        // two cycle vertices can share a boundary edge
                        if prev != assigned[i] {
                            consistent = false;
                            break;
                        }
                    }
                    fixed.insert(ne, assigned[i]);
                }
                if !consistent {
                    continue;
                }
                let attempt = match three_edge_colour(&rest, &fixed) {
                    Ok(a) => a,
                    Err(Error::InconsistentFixed) => continue,
                    Err(e) => return Err(e),
                };
                if let Some(col) = attempt {
                    let colour: BTreeMap<EdgeId, u8> = col
                        .colour
                        .iter()
                        .map(|(&ne, &c)| (edge_map[ne], c))
                        .collect();
                    return Ok(Some((EdgeColouring { colour }, assigned)));
                }
            }
        }
    }
    Ok(None)
}

/// Edges of an induced 6-cycle given by its vertices in cyclic order.
pub fn induced_six_cycle_edges(g: &Multigraph, cycle: &[VertexId]) -> Result<Vec<EdgeId>> {
    if cycle.len() != 6 {
        return Err(Error::NotInducedSixCycle);
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 6 {
        return Err(Error::NotInducedSixCycle);
    }
    let mut edges = Vec::with_capacity(6);
    for i in 0..6 {
        let (u, v) = (cycle[i], cycle[(i + 1) % 6]);
        if g.multiplicity(u, v) != 1 {
            return Err(Error::NotInducedSixCycle);
        }
        edges.push(g.edge_between(u, v).unwrap());
    }
    // no chords
    for i in 0..6 {
        for j in i + 1..6 {
            if j != i + 1 && (i, j) != (0, 5) && g.edge_between(cycle[i], cycle[j]).is_some() {
                return Err(Error::NotInducedSixCycle);
            }
        }
    }
    Ok(edges)
}

/// Triangles whose contraction raises the defect above 3. At most one can
/// exist in a defect-3 graph, which is asserted.
pub fn essential_triangles(
    g: &CubicGraph,
) -> Result<Vec<(Vec<VertexId>, usize)>> {
    let cert = colouring_defect(g)?;
    if cert.defect != 3 {
        return Err(Error::DefectNotThree);
    }
    let mut out = Vec::new();
    for (vertices, _) in g.circuits_of_length(3) {
        let h = SubgraphRef::induced(g, &vertices);
        let contracted = g.contract(&h)?;
        let d = colouring_defect(&contracted)?.defect;
        if d >= 4 {
            out.push((vertices, d));
        }
    }
    assert!(out.len() <= 1, "more than one essential triangle");
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuditClause {
    pub name: String,
    pub checked: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoreAudit {
    pub clauses: Vec<AuditClause>,
}

impl CoreAudit {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }
}

/// Structural facts about how a hexagonal core can meet triangles,
/// quadrilaterals and small cycle-separating cuts, checked against a
/// concrete certificate:
/// - a triangle meeting the core shares exactly one uncovered edge with it
///   and has an independent boundary;
/// - the core meets at most one triangle;
/// - a quadrilateral meeting the core shares exactly one uncovered edge,
///   and exactly two of its four leaving edges are doubly covered;
/// - the core avoids every 2-edge-cut;
/// - a cycle-separating independent 3-cut meeting the core shares two
///   doubly covered edges with it, exactly one side contracts to a snark,
///   and that side contains exactly one uncovered core edge.
pub fn core_position_audit(g: &CubicGraph, cert: &DefectCertificate) -> CoreAudit {
    assert!(cert.hexagonal, "audit requires a hexagonal core");
    let core = &cert.core;
    let mut clauses = Vec::new();

    let triangles = g.circuits_of_length(3);
    let mut touching = 0usize;
    let mut tri_pass = true;
    for (vertices, edge_ids) in &triangles {
        let tri_set = EdgeSet::from_iter(edge_ids.iter().copied());
        let meet = core.edges.intersection(&tri_set);
        if meet.is_empty() {
            continue;
        }
        touching += 1;
        if !(meet.len() == 1 && meet.is_subset(&core.uncovered)) {
            tri_pass = false;
        }
        let h = SubgraphRef::induced(g, vertices);
        let boundary = h.boundary_edges(g);
        let independent = boundary
            .iter()
            .enumerate()
            .all(|(i, &e)| boundary[i + 1..].iter().all(|&f| !g.adjacent_edges(e, f)));
        if !independent {
            tri_pass = false;
        }
    }
    clauses.push(AuditClause {
        name: "triangle-meeting-core-shares-one-uncovered-edge".into(),
        checked: touching,
        pass: tri_pass,
    });
    clauses.push(AuditClause {
        name: "core-meets-at-most-one-triangle".into(),
        checked: triangles.len(),
        pass: touching <= 1,
    });

    let quads = g.circuits_of_length(4);
    let mut qtouch = 0usize;
    let mut quad_pass = true;
    for (vertices, edge_ids) in &quads {
        let quad_set = EdgeSet::from_iter(edge_ids.iter().copied());
        let meet = core.edges.intersection(&quad_set);
        if meet.is_empty() {
            continue;
        }
        qtouch += 1;
        if !(meet.len() == 1 && meet.is_subset(&core.uncovered)) {
            quad_pass = false;
        }
        let h = SubgraphRef::induced(g, vertices);
        let leaving = h.boundary_edges(g);
        let doubly = leaving.iter().filter(|&&e| core.doubly.contains(e)).count();
        let simply = leaving.iter().filter(|&&e| !core.edges.contains(e)).count();
        if !(leaving.len() == 4 && doubly == 2 && simply == 2) {
            quad_pass = false;
        }
    }
    clauses.push(AuditClause {
        name: "quadrilateral-meeting-core-pattern".into(),
        checked: qtouch,
        pass: quad_pass,
    });

    let cuts = crate::graph::cuts::small_cuts(g);
    let two_cuts: Vec<_> = cuts.iter().filter(|c| c.size() == 2).collect();
    let two_pass = two_cuts.iter().all(|c| {
        c.edges.iter().all(|&e| !core.edges.contains(e))
    });
    clauses.push(AuditClause {
        name: "core-avoids-2-cuts".into(),
        checked: two_cuts.len(),
        pass: two_pass,
    });

    let mut three_checked = 0usize;
    let mut three_pass = true;
    for cut in crate::graph::cuts::small_independent_cuts(g) {
        if cut.size() != 3 || !cut.cycle_separating {
            continue;
        }
        let cut_set = EdgeSet::from_iter(cut.edges.iter().copied());
        let meet = core.edges.intersection(&cut_set);
        if meet.is_empty() {
            continue;
        }
        three_checked += 1;
        if !(meet.len() == 2 && meet.is_subset(&core.doubly)) {
            three_pass = false;
        }
        let mut snark_sides = Vec::new();
        for side in [&cut.side_a, &cut.side_b] {
            let h = SubgraphRef::induced(g, side);
            let contracted = match g.contract(&h) {
                Ok(c) => c,
                Err(_) => {
                    three_pass = false;
                    continue;
                }
            };
            let colourable = three_edge_colour(&contracted, &BTreeMap::new())
                .map(|c| c.is_some())
                .unwrap_or(true);
            if !colourable && contracted.is_bridgeless() {
                snark_sides.push(side.clone());
            }
        }
        if snark_sides.len() != 1 {
            three_pass = false;
        } else {
            let side: std::collections::HashSet<_> = snark_sides[0].iter().copied().collect();
            let inside = core.edges.iter().filter(|&e| {
                let (u, v) = g.endpoints(e);
                side.contains(&u) && side.contains(&v)
            });
            let inside_set = EdgeSet::from_iter(inside);
            if !(inside_set.len() == 1 && inside_set.is_subset(&core.uncovered)) {
                three_pass = false;
            }
        }
    }
    clauses.push(AuditClause {
        name: "3-cut-meeting-core-pattern".into(),
        checked: three_checked,
        pass: three_pass,
    });

    CoreAudit { clauses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn matching_counts() {
        assert_eq!(perfect_matchings(&families::petersen()).unwrap().len(), 6);
        assert_eq!(perfect_matchings(&families::k4()).unwrap().len(), 3);
        assert_eq!(perfect_matchings(&families::dipole3()).unwrap().len(), 3);
        // every Petersen edge lies in exactly 2 of the 6 matchings
        let pms = perfect_matchings(&families::petersen()).unwrap();
        for e in 0..15 {
            assert_eq!(pms.iter().filter(|m| m.contains(e)).count(), 2);
        }
    }

    #[test]
    fn defect_values() {
        let k4 = colouring_defect(&families::k4()).unwrap();
        assert_eq!(k4.defect, 0);
        assert!(k4.witness.is_valid(&families::k4()));
        let pg = colouring_defect(&families::petersen()).unwrap();
        assert_eq!(pg.defect, 3);
        assert!(pg.hexagonal);
        assert!(pg.witness.is_valid(&families::petersen()));
        assert!(pg.core.is_hexagonal(&families::petersen()));
    }

    #[test]
    fn fano_labels() {
        let g = families::petersen();
        let cert = colouring_defect(&g).unwrap();
        let fc = fano_colouring(&g, &cert.witness);
        assert!(fc.is_conservative(&g));
        assert!(fc.proper);
        assert_eq!(fc.label.iter().filter(|&&l| l == 0).count(), 3);
        // a colouring-derived array labels every edge with a singleton
        let k4 = families::k4();
        let kcert = colouring_defect(&k4).unwrap();
        let kfc = fano_colouring(&k4, &kcert.witness);
        assert!(kfc.label.iter().all(|l| l.count_ones() == 1));
        assert!(kfc.proper);
        // repeating one matching keeps conservation but loses properness
        let pms = perfect_matchings(&g).unwrap();
        let degenerate = ThreeArray {
            matchings: [pms[0], pms[0], pms[1]],
        };
        assert!(fano_colouring(&g, &degenerate).is_conservative(&g));
    }

    #[test]
    fn hexagonal_core_verified_on_petersen() {
        let g = families::petersen();
        let cert = colouring_defect(&g).unwrap();
        let cycle = cert.core.cycle_vertices(&g).unwrap();
        let (col, pattern) = verify_hexagonal_core(&g, &cycle).unwrap().unwrap();
        assert!(col.is_proper(&g));
        assert_eq!(pattern.len(), 6);
        // every induced 6-cycle of Petersen is a hexagonal core by symmetry
        for (cycle, _) in g.circuits_of_length(6) {
            assert!(verify_hexagonal_core(&g, &cycle).unwrap().is_some());
        }
    }

    #[test]
    fn six_cycle_validation() {
        let g = families::petersen();
        assert!(verify_hexagonal_core(&g, &[0, 1, 2, 3, 4]).is_err());
        // a non-cycle vertex sequence
        assert!(verify_hexagonal_core(&g, &[0, 2, 4, 6, 8, 9]).is_err());
    }

    #[test]
    fn inflation_and_essential_triangles() {
        let g = families::petersen();
        // every Petersen vertex lies on a heavy pentagon, so each inflation
        // has defect 3 with a core meeting the new triangle
        let gv = g.inflate_vertex(0).unwrap();
        let cert = colouring_defect(&gv).unwrap();
        assert_eq!(cert.defect, 3);
        assert!(cert.hexagonal);
        // contracting the triangle gives Petersen back: defect stays 3, so
        // the triangle is not essential
        assert!(essential_triangles(&gv).unwrap().is_empty());
    }

    #[test]
    fn audit_petersen_vacuous_and_inflated() {
        let g = families::petersen();
        let cert = colouring_defect(&g).unwrap();
        let audit = core_position_audit(&g, &cert);
        assert!(audit.all_pass());
        let gv = g.inflate_vertex(0).unwrap();
        let cert = colouring_defect(&gv).unwrap();
        let audit = core_position_audit(&gv, &cert);
        assert!(audit.all_pass(), "{audit:?}");
    }

    #[test]
    fn certificate_serializes() {
        let cert = colouring_defect(&families::petersen()).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        let back: DefectCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back.defect, 3);
        assert_eq!(back.witness, cert.witness);
    }
}
