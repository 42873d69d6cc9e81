//! 2-sums, 3-sums, completions along small independent edge cuts, and the
//! decomposition of a 2-connected cubic graph into cyclically 4-edge-
//! connected factors — unique as a multiset no matter which eligible cut is
//! split first. A defect-3 variant keeps the factor carrying the hexagonal
//! core intact when splitting off its triangle would raise the defect.

use crate::bits::EdgeSet;
use crate::colouring::three_edge_colour;
use crate::defect::{colouring_defect, DefectCertificate};
use crate::error::{Error, Result};
use crate::graph::cuts::small_independent_cuts;
use crate::graph::{isomorphic, CubicGraph, EdgeCut, EdgeId, Multigraph, VertexId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumKind {
    Sum2,
    Sum3,
}

/// How to glue two cubic graphs: delete the distinguished edges (2-sum) or
/// vertices (3-sum) and join the freed half-edges according to `gluing`,
/// where freed half-edges on each side are ordered by the endpoints of the
/// deleted edge / the darts of the deleted vertex, and `gluing[i]` is the
/// right-side slot joined to left slot `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumSpec {
    pub kind: SumKind,
    pub left_element: usize,
    pub right_element: usize,
    pub gluing: Vec<usize>,
}

/// A performed sum with full provenance: where each operand vertex went,
/// where each surviving operand edge went, and the principal cut.
#[derive(Clone, Debug)]
pub struct Summed {
    pub graph: CubicGraph,
    pub left_vertices: Vec<Option<VertexId>>,
    pub right_vertices: Vec<Option<VertexId>>,
    pub left_edges: Vec<Option<EdgeId>>,
    pub right_edges: Vec<Option<EdgeId>>,
    pub principal_cut: Vec<EdgeId>,
    /// For a 3-sum: neither distinguished vertex lies on a parallel pair,
    /// which guarantees the principal cut is independent.
    pub proper: Option<bool>,
}

fn check_gluing(gluing: &[usize], arity: usize) -> Result<()> {
    let mut seen = vec![false; arity];
    if gluing.len() != arity {
        return Err(Error::BadSpec(format!("gluing must have {arity} entries")));
    }
    for &i in gluing {
        if i >= arity || seen[i] {
            return Err(Error::BadSpec("gluing is not a bijection".into()));
        }
        seen[i] = true;
    }
    Ok(())
}

pub fn sum2(h: &CubicGraph, k: &CubicGraph, spec: &SumSpec) -> Result<Summed> {
    if spec.kind != SumKind::Sum2 {
        return Err(Error::BadSpec("expected a 2-sum spec".into()));
    }
    check_gluing(&spec.gluing, 2)?;
    let (e, f) = (spec.left_element, spec.right_element);
    if e >= h.num_edges() || f >= k.num_edges() {
        return Err(Error::BadSpec("distinguished edge out of range".into()));
    }
    if h.is_loop(e) || k.is_loop(f) {
        return Err(Error::BadSpec("distinguished edge is a loop".into()));
    }
    let nh = h.num_vertices();
    let left_free = [h.endpoints(e).0, h.endpoints(e).1];
    let right_free = [k.endpoints(f).0, k.endpoints(f).1];
    let mut g = Multigraph::new(nh + k.num_vertices());
    let mut left_edges = vec![None; h.num_edges()];
    let mut right_edges = vec![None; k.num_edges()];
    for i in 0..h.num_edges() {
        if i != e {
            let (u, v) = h.endpoints(i);
            left_edges[i] = Some(g.add_edge(u, v));
        }
    }
    for i in 0..k.num_edges() {
        if i != f {
            let (u, v) = k.endpoints(i);
            right_edges[i] = Some(g.add_edge(nh + u, nh + v));
        }
    }
    let principal_cut = (0..2)
        .map(|i| g.add_edge(left_free[i], nh + right_free[spec.gluing[i]]))
        .collect();
    Ok(Summed {
        graph: CubicGraph::from_multigraph(g)?,
        left_vertices: (0..nh).map(Some).collect(),
        right_vertices: (0..k.num_vertices()).map(|v| Some(nh + v)).collect(),
        left_edges,
        right_edges,
        principal_cut,
        proper: None,
    })
}

pub fn sum3(h: &CubicGraph, k: &CubicGraph, spec: &SumSpec) -> Result<Summed> {
    if spec.kind != SumKind::Sum3 {
        return Err(Error::BadSpec("expected a 3-sum spec".into()));
    }
    check_gluing(&spec.gluing, 3)?;
    let (u, v) = (spec.left_element, spec.right_element);
    if u >= h.num_vertices() || v >= k.num_vertices() {
        return Err(Error::BadSpec("distinguished vertex out of range".into()));
    }
    if h.edges_at(u).any(|e| h.is_loop(e)) || k.edges_at(v).any(|e| k.is_loop(e)) {
        return Err(Error::BadSpec("distinguished vertex lies on a loop".into()));
    }
    // freed neighbour slots in dart order at the deleted vertex
    let left_free: Vec<VertexId> = h
        .darts_at(u)
        .iter()
        .map(|&d| h.dart_vertex(crate::graph::dart_twin(d)))
        .collect();
    let right_free: Vec<VertexId> = k
        .darts_at(v)
        .iter()
        .map(|&d| k.dart_vertex(crate::graph::dart_twin(d)))
        .collect();
    let proper = h.edges_at(u).all(|e| {
        let w = h.other_endpoint(e, u);
        h.multiplicity(u, w) == 1
    }) && k.edges_at(v).all(|e| {
        let w = k.other_endpoint(e, v);
        k.multiplicity(v, w) == 1
    });
    // renumber: left keeps order with u removed, right follows
    let mut left_vertices: Vec<Option<VertexId>> = vec![None; h.num_vertices()];
    let mut next = 0usize;
    for w in 0..h.num_vertices() {
        if w != u {
            left_vertices[w] = Some(next);
            next += 1;
        }
    }
    let mut right_vertices: Vec<Option<VertexId>> = vec![None; k.num_vertices()];
    for w in 0..k.num_vertices() {
        if w != v {
            right_vertices[w] = Some(next);
            next += 1;
        }
    }
    let mut g = Multigraph::new(next);
    let mut left_edges = vec![None; h.num_edges()];
    let mut right_edges = vec![None; k.num_edges()];
    for i in 0..h.num_edges() {
        let (a, b) = h.endpoints(i);
        if a != u && b != u {
            left_edges[i] = Some(g.add_edge(left_vertices[a].unwrap(), left_vertices[b].unwrap()));
        }
    }
    for i in 0..k.num_edges() {
        let (a, b) = k.endpoints(i);
        if a != v && b != v {
            right_edges[i] =
                Some(g.add_edge(right_vertices[a].unwrap(), right_vertices[b].unwrap()));
        }
    }
    let principal_cut = (0..3)
        .map(|i| {
            g.add_edge(
                left_vertices[left_free[i]].unwrap(),
                right_vertices[right_free[spec.gluing[i]]].unwrap(),
            )
        })
        .collect();
    Ok(Summed {
        graph: CubicGraph::from_multigraph(g)?,
        left_vertices,
        right_vertices,
        left_edges,
        right_edges,
        principal_cut,
        proper: Some(proper),
    })
}

/// A split along a small independent cut: the two completions and the spec
/// that reassembles the original, plus vertex provenance per side
/// (completion vertex → original vertex, `None` for the added element).
#[derive(Clone, Debug)]
pub struct Split {
    pub left: CubicGraph,
    pub right: CubicGraph,
    pub spec: SumSpec,
    pub left_origin: Vec<Option<VertexId>>,
    pub right_origin: Vec<Option<VertexId>>,
    /// completion edge → original edge (None for added completion edges)
    pub left_edge_origin: Vec<Option<EdgeId>>,
    pub right_edge_origin: Vec<Option<EdgeId>>,
}

fn completion(
    g: &CubicGraph,
    side: &[VertexId],
    cut_edges: &[EdgeId],
) -> (CubicGraph, Vec<Option<VertexId>>, Vec<Option<EdgeId>>, usize) {
    let mut vertices = side.to_vec();
    vertices.sort_unstable();
    let index: BTreeMap<VertexId, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut h = Multigraph::new(vertices.len());
    let mut edge_origin = Vec::new();
    for e in 0..g.num_edges() {
        let (u, v) = g.endpoints(e);
        if index.contains_key(&u) && index.contains_key(&v) && !cut_edges.contains(&e) {
            h.add_edge(index[&u], index[&v]);
            edge_origin.push(Some(e));
        }
    }
    // cut-edge endpoints on this side, in sorted cut-edge order
    let stubs: Vec<usize> = cut_edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            index[if index.contains_key(&u) { &u } else { &v }]
        })
        .collect();
    let element;
    if cut_edges.len() == 2 {
        element = h.add_edge(stubs[0], stubs[1]);
        edge_origin.push(None);
    } else {
        element = h.add_vertex();
        for &s in &stubs {
            h.add_edge(s, element);
            edge_origin.push(None);
        }
    }
    let mut origin: Vec<Option<VertexId>> = vertices.iter().map(|&v| Some(v)).collect();
    if cut_edges.len() == 3 {
        origin.push(None);
    }
    (
        CubicGraph::from_multigraph(h).expect("completion of a cut side is cubic"),
        origin,
        edge_origin,
        element,
    )
}

pub fn decompose_along(g: &CubicGraph, cut: &EdgeCut) -> Result<Split> {
    if !cut.independent || !(2..=3).contains(&cut.size()) {
        return Err(Error::CutNotSmallIndependent);
    }
    let mask = EdgeSet::from_iter(cut.edges.iter().copied());
    let comps = g.components_excluding(&mask);
    if comps.len() != 2 {
        return Err(Error::CutNotSmallIndependent);
    }
    let mut cut_edges = cut.edges.clone();
    cut_edges.sort_unstable();
    let (left, left_origin, left_edge_origin, le) = completion(g, &cut.side_a, &cut_edges);
    let (right, right_origin, right_edge_origin, re) = completion(g, &cut.side_b, &cut_edges);
    let spec = SumSpec {
        kind: if cut_edges.len() == 2 {
            SumKind::Sum2
        } else {
            SumKind::Sum3
        },
        left_element: le,
        right_element: re,
        gluing: (0..cut_edges.len()).collect(),
    };
    Ok(Split {
        left,
        right,
        spec,
        left_origin,
        right_origin,
        left_edge_origin,
        right_edge_origin,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    DefectHost,
    Colourable,
    Plain,
}

/// One split in a decomposition: node `parent` was cut into nodes `left`
/// and `right`; `spec` reassembles it from the children.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReassemblyStep {
    pub parent: usize,
    pub left: usize,
    pub right: usize,
    pub cut: EdgeCut,
    pub spec: SumSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionTree {
    /// node 0 is the input graph; later nodes come from splits
    pub nodes: Vec<CubicGraph>,
    /// input-graph vertex behind each node vertex (None = completion element)
    pub origin: Vec<Vec<Option<VertexId>>>,
    pub steps: Vec<ReassemblyStep>,
    /// leaf node indices: the decomposition factors
    pub factors: Vec<usize>,
    pub kinds: Vec<FactorKind>,
}

impl DecompositionTree {
    pub fn factor_graphs(&self) -> Vec<&CubicGraph> {
        self.factors.iter().map(|&i| &self.nodes[i]).collect()
    }

    /// Re-performs every recorded sum on the stored child graphs (whose ids
    /// the specs refer to) and checks each result against the stored parent
    /// up to isomorphism; returns the reassembled root. Each level's check
    /// chains up to node 0, so success certifies that the factors compose
    /// back into a graph isomorphic to the input.
    pub fn reassemble(&self) -> Result<CubicGraph> {
        let mut root = self.nodes[0].clone();
        for step in self.steps.iter().rev() {
            let summed = match step.spec.kind {
                SumKind::Sum2 => sum2(&self.nodes[step.left], &self.nodes[step.right], &step.spec)?,
                SumKind::Sum3 => sum3(&self.nodes[step.left], &self.nodes[step.right], &step.spec)?,
            };
            if isomorphic(&summed.graph, &self.nodes[step.parent]).is_none() {
                return Err(Error::VerificationFailed(format!(
                    "reassembled node {} does not match the recorded graph",
                    step.parent
                )));
            }
            if step.parent == 0 {
                root = summed.graph;
            }
        }
        Ok(root)
    }

    /// Factor vertex origins must partition the input vertex set.
    pub fn vertex_partition_ok(&self) -> bool {
        let n = self.nodes[0].num_vertices();
        let mut count = vec![0usize; n];
        for &f in &self.factors {
            for origin in self.origin[f].iter().flatten() {
                count[*origin] += 1;
            }
        }
        count.iter().all(|&c| c == 1)
    }
}

fn compose_origin(
    parent: &[Option<VertexId>],
    child: &[Option<VertexId>],
) -> Vec<Option<VertexId>> {
    child
        .iter()
        .map(|slot| slot.and_then(|v| parent[v]))
        .collect()
}

/// Repeatedly splits along small independent cuts until every factor is
/// cyclically 4-edge-connected. `pick` chooses which eligible cut to use;
/// `keep_whole` can exempt specific cuts of specific nodes from splitting.
fn decompose_with(
    g: &CubicGraph,
    mut pick: impl FnMut(&[EdgeCut]) -> usize,
    mut eligible: impl FnMut(&CubicGraph, &EdgeCut) -> bool,
) -> Result<DecompositionTree> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let mut tree = DecompositionTree {
        nodes: vec![g.clone()],
        origin: vec![(0..g.num_vertices()).map(Some).collect()],
        steps: Vec::new(),
        factors: Vec::new(),
        kinds: Vec::new(),
    };
    let mut work = vec![0usize];
    while let Some(node) = work.pop() {
        let graph = tree.nodes[node].clone();
        let mut cuts: Vec<EdgeCut> = small_independent_cuts(&graph)
            .into_iter()
            .filter(|c| eligible(&graph, c))
            .collect();
        if cuts.is_empty() {
            tree.factors.push(node);
            tree.kinds.push(FactorKind::Plain);
            continue;
        }
        // exhaust 2-cuts before any 3-cut: splitting a 3-cut that shares an
        // edge with a live 2-cut can strand a digon as an extra factor and
        // change the factor multiset
        let min = cuts.iter().map(EdgeCut::size).min().unwrap();
        cuts.retain(|c| c.size() == min);
        let cut = cuts[pick(&cuts)].clone();
        let split = decompose_along(&graph, &cut)?;
        let li = tree.nodes.len();
        tree.origin
            .push(compose_origin(&tree.origin[node], &split.left_origin));
        tree.nodes.push(split.left);
        let ri = tree.nodes.len();
        tree.origin
            .push(compose_origin(&tree.origin[node], &split.right_origin));
        tree.nodes.push(split.right);
        tree.steps.push(ReassemblyStep {
            parent: node,
            left: li,
            right: ri,
            cut,
            spec: split.spec,
        });
        work.push(li);
        work.push(ri);
    }
    Ok(tree)
}

/// Decomposition into cyclically 4-edge-connected factors. The seed only
/// randomizes which eligible cut is split first; the factor multiset is
/// the same for every seed.
pub fn canonical_decomposition(g: &CubicGraph, order_seed: u64) -> Result<DecompositionTree> {
    let mut rng = ChaCha8Rng::seed_from_u64(order_seed);
    decompose_with(
        g,
        move |cuts| {
            let mut order: Vec<usize> = (0..cuts.len()).collect();
            order.shuffle(&mut rng);
            order[0]
        },
        |_, _| true,
    )
}

/// Decomposition of a defect-3 graph in which exactly one factor keeps
/// defect 3 (with a hexagonal core) and every other factor is colourable
/// and cyclically 4-edge-connected. A triangle whose boundary meets the
/// factor's hexagonal core is never split off: contracting it would raise
/// the defect, so the host factor may legitimately fail to be cyclically
/// 4-edge-connected — in which case removing that one triangle restores it.
pub fn defect3_decomposition(g: &CubicGraph) -> Result<DecompositionTree> {
    let cert = colouring_defect(g)?;
    if cert.defect != 3 {
        return Err(Error::DefectNotThree);
    }
    let mut tree = decompose_with(
        g,
        |_| 0,
        |graph, cut| !protects_core_triangle(graph, cut),
    )?;
    // classify and assert the shape of the result
    let mut hosts = 0usize;
    for (slot, &f) in tree.factors.clone().iter().enumerate() {
        let fcert = colouring_defect(&tree.nodes[f])?;
        if fcert.defect == 3 {
            hosts += 1;
            assert!(fcert.hexagonal, "defect-3 factor must have a hexagonal core");
            tree.kinds[slot] = FactorKind::DefectHost;
            assert_host_shape(&tree.nodes[f], &fcert);
        } else {
            assert_eq!(fcert.defect, 0, "non-host factor must be colourable");
            assert!(
                crate::graph::cuts::cyclically_4_edge_connected(&tree.nodes[f])?,
                "colourable factor must be cyclically 4-edge-connected"
            );
            tree.kinds[slot] = FactorKind::Colourable;
        }
    }
    assert_eq!(hosts, 1, "exactly one factor carries the defect");
    Ok(tree)
}

/// True iff `cut` is the boundary of a triangle that meets a hexagonal
/// core of `graph` (such a triangle stays in the host factor).
fn protects_core_triangle(graph: &CubicGraph, cut: &EdgeCut) -> bool {
    if cut.size() != 3 {
        return false;
    }
    let Ok(cert) = colouring_defect(graph) else {
        return false;
    };
    if cert.defect != 3 || !cert.hexagonal {
        return false;
    }
    for side in [&cut.side_a, &cut.side_b] {
        if side.len() == 3 {
            let tri_edges: Vec<EdgeId> = (0..graph.num_edges())
                .filter(|&e| {
                    let (u, v) = graph.endpoints(e);
                    side.contains(&u) && side.contains(&v)
                })
                .collect();
            if tri_edges.len() == 3
                && tri_edges.iter().any(|&e| cert.core.edges.contains(e))
            {
                return true;
            }
        }
    }
    false
}

fn assert_host_shape(host: &CubicGraph, cert: &DefectCertificate) {
    let c4ec = crate::graph::cuts::cyclically_4_edge_connected(host).unwrap_or(false);
    if c4ec {
        return;
    }
    // must contain a triangle meeting the core whose contraction is c4ec
    let fixed = host.circuits_of_length(3).into_iter().any(|(vertices, edges)| {
        let meets = edges.iter().any(|&e| cert.core.edges.contains(e));
        if !meets {
            return false;
        }
        let h = crate::graph::SubgraphRef::induced(host, &vertices);
        match host.contract(&h) {
            Ok(contracted) => {
                crate::graph::cuts::cyclically_4_edge_connected(&contracted).unwrap_or(false)
            }
            Err(_) => false,
        }
    });
    assert!(
        fixed,
        "host is not c4ec and no core triangle contraction repairs it"
    );
}

/// Compare two factor lists as multisets up to isomorphism.
pub fn same_factor_multiset(a: &[&CubicGraph], b: &[&CubicGraph]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for ga in a {
        let mut matched = false;
        for (i, gb) in b.iter().enumerate() {
            if !used[i] && isomorphic(ga, gb).is_some() {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return false;
        }
    }
    true
}

/// True iff the factor is colourable (used by callers labelling factors).
pub fn factor_colourable(g: &CubicGraph) -> Result<bool> {
    Ok(three_edge_colour(g, &BTreeMap::new())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn spec2(e: EdgeId, f: EdgeId) -> SumSpec {
        SumSpec {
            kind: SumKind::Sum2,
            left_element: e,
            right_element: f,
            gluing: vec![0, 1],
        }
    }

    fn spec3(u: VertexId, v: VertexId) -> SumSpec {
        SumSpec {
            kind: SumKind::Sum3,
            left_element: u,
            right_element: v,
            gluing: vec![0, 1, 2],
        }
    }

    #[test]
    fn k4_sum2_k4() {
        let k4 = families::k4();
        let s = sum2(&k4, &k4, &spec2(0, 0)).unwrap();
        assert_eq!(s.graph.num_vertices(), 8);
        assert_eq!(s.graph.num_edges(), 12);
        let cuts = small_independent_cuts(&s.graph);
        assert_eq!(cuts.iter().filter(|c| c.size() == 2).count(), 1);
        assert_eq!(cuts[0].edges, s.principal_cut);
    }

    #[test]
    fn dipole_is_neutral_for_sum3() {
        let g = families::petersen();
        let s = sum3(&g, &families::dipole3(), &spec3(4, 0)).unwrap();
        assert!(isomorphic(&s.graph, &g).is_some());
    }

    #[test]
    fn sum3_with_k4_is_triangle_inflation() {
        let g = families::petersen();
        let s = sum3(&g, &families::k4(), &spec3(2, 0)).unwrap();
        let inflated = g.inflate_vertex(2).unwrap();
        assert!(isomorphic(&s.graph, &inflated).is_some());
        assert_eq!(s.proper, Some(true));
    }

    #[test]
    fn sum3_properness_flag() {
        let g = families::petersen();
        let d = families::dipole3();
        let s = sum3(&g, &d, &spec3(0, 1)).unwrap();
        assert_eq!(s.proper, Some(false));
    }

    #[test]
    fn bad_specs_rejected() {
        let k4 = families::k4();
        assert!(sum2(&k4, &k4, &spec3(0, 0)).is_err());
        assert!(sum2(&k4, &k4, &spec2(99, 0)).is_err());
        let mut s = spec2(0, 0);
        s.gluing = vec![0, 0];
        assert!(sum2(&k4, &k4, &s).is_err());
    }

    #[test]
    fn split_inverts_sum() {
        let k4 = families::k4();
        let s = sum2(&k4, &k4, &spec2(1, 2)).unwrap();
        let cuts = small_independent_cuts(&s.graph);
        let split = decompose_along(&s.graph, &cuts[0]).unwrap();
        assert!(isomorphic(&split.left, &k4).is_some());
        assert!(isomorphic(&split.right, &k4).is_some());
        let back = match split.spec.kind {
            SumKind::Sum2 => sum2(&split.left, &split.right, &split.spec).unwrap(),
            SumKind::Sum3 => sum3(&split.left, &split.right, &split.spec).unwrap(),
        };
        assert!(isomorphic(&back.graph, &s.graph).is_some());
    }

    #[test]
    fn canonical_decomposition_examples() {
        let pg = families::petersen();
        let tree = canonical_decomposition(&pg, 7).unwrap();
        assert_eq!(tree.factors.len(), 1);
        assert!(tree.vertex_partition_ok());

        let k4 = families::k4();
        let s = sum2(&k4, &k4, &spec2(0, 0)).unwrap();
        for seed in 0..10 {
            let tree = canonical_decomposition(&s.graph, seed).unwrap();
            let factors = tree.factor_graphs();
            assert_eq!(factors.len(), 2);
            assert!(same_factor_multiset(&factors, &[&k4, &k4]));
            assert!(tree.vertex_partition_ok());
            assert!(isomorphic(&tree.reassemble().unwrap(), &s.graph).is_some());
        }
    }

    #[test]
    fn three_factor_decomposition_is_seed_invariant() {
        // (Pg ⊕2 K4) ⊕3 K3,3 → factors {Pg, K4, K3,3}
        let pg = families::petersen();
        let k4 = families::k4();
        let k33 = families::k33();
        let step1 = sum2(&pg, &k4, &spec2(0, 3)).unwrap();
        let step2 = sum3(&step1.graph, &k33, &spec3(7, 1)).unwrap();
        let expected = [&pg, &k4, &k33];
        for seed in [0u64, 1, 2, 42, 1234] {
            let tree = canonical_decomposition(&step2.graph, seed).unwrap();
            assert!(same_factor_multiset(&tree.factor_graphs(), &expected));
            assert!(tree.vertex_partition_ok());
            assert!(isomorphic(&tree.reassemble().unwrap(), &step2.graph).is_some());
        }
    }

    #[test]
    fn defect3_decomposition_examples() {
        let pg = families::petersen();
        let tree = defect3_decomposition(&pg).unwrap();
        assert_eq!(tree.kinds, vec![FactorKind::DefectHost]);

        // Petersen with a K4 2-summed on: host Pg + colourable K4
        let k4 = families::k4();
        let s = sum2(&pg, &k4, &spec2(0, 0)).unwrap();
        let tree = defect3_decomposition(&s.graph).unwrap();
        assert_eq!(tree.factors.len(), 2);
        let host_idx = tree
            .kinds
            .iter()
            .position(|k| *k == FactorKind::DefectHost)
            .unwrap();
        assert!(isomorphic(&tree.nodes[tree.factors[host_idx]], &pg).is_some());
        assert!(tree
            .kinds
            .iter()
            .filter(|k| **k == FactorKind::Colourable)
            .count()
            == 1);
    }

    #[test]
    fn defect3_host_keeps_its_triangle() {
        // inflating a Petersen vertex gives a defect-3 graph whose triangle
        // meets the core; the host factor retains it
        let gv = families::petersen().inflate_vertex(0).unwrap();
        let tree = defect3_decomposition(&gv).unwrap();
        assert_eq!(tree.factors.len(), 1);
        assert_eq!(tree.kinds, vec![FactorKind::DefectHost]);
        assert_eq!(tree.nodes[tree.factors[0]].num_vertices(), 12);
    }

    #[test]
    fn tree_serializes() {
        let k4 = families::k4();
        let s = sum2(&k4, &k4, &spec2(0, 0)).unwrap();
        let tree = canonical_decomposition(&s.graph, 3).unwrap();
        let json = serde_json::to_string(&tree).unwrap();
        let back: DecompositionTree = serde_json::from_str(&json).unwrap();
        assert!(isomorphic(&back.reassemble().unwrap(), &s.graph).is_some());
    }
}
