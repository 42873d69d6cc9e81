//! Fixed small cubic graphs used as building pieces and test subjects.

use crate::graph::CubicGraph;

/// Petersen graph on vertices 0..10: outer 5-cycle 0-1-2-3-4, spokes i—i+5,
/// inner pentagram 5..10 joining i to i+2 (mod 5).
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    CubicGraph::from_edges(10, &edges).unwrap()
}

pub fn k4() -> CubicGraph {
    CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Complete bipartite K3,3 with parts {0,1,2} and {3,4,5}.
pub fn k33() -> CubicGraph {
    let edges: Vec<(usize, usize)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    CubicGraph::from_edges(6, &edges).unwrap()
}

/// Two vertices joined by three parallel edges.
pub fn dipole3() -> CubicGraph {
    CubicGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 joined by a matching.
pub fn prism3() -> CubicGraph {
    CubicGraph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// 3-cube: squares 0-1-2-3 and 4-5-6-7 joined by a matching.
pub fn cube() -> CubicGraph {
    CubicGraph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap()
}

/// Flower snark J_k for odd k >= 5, on 4k vertices. Vertex layout: for
/// i in 0..k, A_i = 4i, B_i = 4i+1, C_i = 4i+2, D_i = 4i+3. Each B_i is
/// adjacent to A_i, C_i, D_i; the A_i form a k-cycle; the C_i and D_i form a
/// single 2k-cycle with a twist (C_{k-1}—D_0 and D_{k-1}—C_0).
pub fn flower(k: usize) -> CubicGraph {
    assert!(k >= 5 && k % 2 == 1, "flower snark needs odd k >= 5");
    let a = |i: usize| 4 * (i % k);
    let b = |i: usize| 4 * (i % k) + 1;
    let c = |i: usize| 4 * (i % k) + 2;
    let d = |i: usize| 4 * (i % k) + 3;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((b(i), a(i)));
        edges.push((b(i), c(i)));
        edges.push((b(i), d(i)));
        edges.push((a(i), a(i + 1)));
    }
    for i in 0..k - 1 {
        edges.push((c(i), c(i + 1)));
        edges.push((d(i), d(i + 1)));
    }
    edges.push((c(k - 1), d(0)));
    edges.push((d(k - 1), c(0)));
    CubicGraph::from_edges(4 * k, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_invariants() {
        assert_eq!(petersen().girth().unwrap(), 5);
        assert_eq!(k4().girth().unwrap(), 3);
        assert_eq!(k33().girth().unwrap(), 4);
        assert_eq!(dipole3().girth().unwrap(), 2);
        assert_eq!(prism3().girth().unwrap(), 3);
        assert_eq!(cube().girth().unwrap(), 4);
        assert!(k33().is_bipartite());
        assert!(cube().is_bipartite());
        assert!(!prism3().is_bipartite());
    }

    #[test]
    fn flower_snarks() {
        let j5 = flower(5);
        assert_eq!(j5.num_vertices(), 20);
        assert_eq!(j5.num_edges(), 30);
        assert_eq!(j5.girth().unwrap(), 5);
        let j7 = flower(7);
        assert_eq!(j7.num_vertices(), 28);
        assert_eq!(j7.girth().unwrap(), 6);
    }
}
