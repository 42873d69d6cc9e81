//! Multigraph isomorphism by iterated degree refinement plus backtracking.
//! Intended for the small graphs this library handles; returns an explicit
//! vertex bijection as a witness.

use super::{Multigraph, VertexId};

/// If `g` and `h` are isomorphic, returns `map` with `map[v]` the image in
/// `h` of vertex `v` of `g`, preserving edge multiplicities and loops.
pub fn isomorphic(g: &Multigraph, h: &Multigraph) -> Option<Vec<VertexId>> {
    let n = g.num_vertices();
    if n != h.num_vertices() || g.num_edges() != h.num_edges() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let ag = adjacency_matrix(g);
    let ah = adjacency_matrix(h);
    let cg = refine(n, &ag);
    let ch = refine(n, &ah);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    let mut map: Vec<Option<VertexId>> = vec![None; n];
    let mut used = vec![false; n];
    // match rarest colour classes first to cut the branching factor
    let mut order: Vec<VertexId> = (0..n).collect();
    let mut class_size = std::collections::HashMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    order.sort_by_key(|&v| (class_size[&cg[v]], v));
    if extend(&mut map, &mut used, &order, 0, &ag, &ah, &cg, &ch, n) {
        Some(map.into_iter().map(|x| x.unwrap()).collect())
    } else {
        None
    }
}

fn adjacency_matrix(g: &Multigraph) -> Vec<Vec<u8>> {
    let n = g.num_vertices();
    let mut a = vec![vec![0u8; n]; n];
    for e in 0..g.num_edges() {
        let (u, v) = g.endpoints(e);
        if u == v {
            a[u][u] += 1;
        } else {
            a[u][v] += 1;
            a[v][u] += 1;
        }
    }
    a
}

/// Iterated neighbourhood refinement: colour by (own colour, multiset of
/// neighbour colours weighted by multiplicity, loop count) until stable.
fn refine(n: usize, a: &[Vec<u8>]) -> Vec<u64> {
    let mut colour: Vec<u64> = (0..n).map(|v| u64::from(a[v][v])).collect();
    for _ in 0..n {
        let mut sig: Vec<(u64, Vec<(u64, u8)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<(u64, u8)> = (0..n)
                .filter(|&w| w != v && a[v][w] > 0)
                .map(|w| (colour[w], a[v][w]))
                .collect();
            nb.sort_unstable();
            sig.push((colour[v], nb));
        }
        let mut uniq = sig.clone();
        uniq.sort_unstable();
        uniq.dedup();
        let next: Vec<u64> = sig
            .iter()
            .map(|s| uniq.binary_search(s).unwrap() as u64)
            .collect();
        if next == colour {
            break;
        }
        colour = next;
    }
    colour
}

#[allow(clippy::too_many_arguments)]
fn extend(
    map: &mut [Option<VertexId>],
    used: &mut [bool],
    order: &[VertexId],
    k: usize,
    ag: &[Vec<u8>],
    ah: &[Vec<u8>],
    cg: &[u64],
    ch: &[u64],
    n: usize,
) -> bool {
    if k == n {
        return true;
    }
    let v = order[k];
    for w in 0..n {
        if used[w] || cg[v] != ch[w] || ag[v][v] != ah[w][w] {
            continue;
        }
        let ok = (0..n).all(|u| match map[u] {
            Some(img) => ag[v][u] == ah[w][img],
            None => true,
        });
        if !ok {
            continue;
        }
        map[v] = Some(w);
        used[w] = true;
        if extend(map, used, order, k + 1, ag, ah, cg, ch, n) {
            return true;
        }
        map[v] = None;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn petersen_self_iso() {
        let g = families::petersen();
        let map = isomorphic(&g, &g).unwrap();
        assert_eq!(map.len(), 10);
    }

    #[test]
    fn relabelled_petersen() {
        let g = families::petersen();
        let perm: Vec<usize> = vec![3, 7, 1, 9, 0, 5, 2, 8, 4, 6];
        let edges: Vec<(usize, usize)> = g
            .edge_list()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        let h = Multigraph::with_edges(10, &edges);
        let map = isomorphic(&g, &h).unwrap();
        for e in 0..g.num_edges() {
            let (u, v) = g.endpoints(e);
            assert!(h.edge_between(map[u], map[v]).is_some());
        }
    }

    #[test]
    fn distinguishes_k33_from_prism() {
        assert!(isomorphic(&families::k33(), &families::prism3()).is_none());
    }

    #[test]
    fn multiplicity_matters() {
        // dipole vs path-with-loop both have 2 vertices, 3 edges
        let d = families::dipole3();
        let other = Multigraph::with_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert!(isomorphic(&d, &other).is_none());
    }
}
