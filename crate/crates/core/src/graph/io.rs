//! Graph encodings: standard header-less graph6 for simple graphs and a
//! JSON adjacency-multiset format ("jsonmg") for multigraphs.
//!
//! jsonmg: `{"n": int, "edges": [[u,v], ...]}` with repeated pairs for
//! parallel edges and `[u,u]` for loops; vertex ids are `0..n-1`.

use super::{CubicGraph, Multigraph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Jsonmg,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" => Ok(GraphFormat::Graph6),
            "jsonmg" => Ok(GraphFormat::Jsonmg),
            other => Err(Error::MalformedEncoding(format!("unknown format {other}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonMg {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<CubicGraph> {
    let g = parse_multigraph(text, format)?;
    CubicGraph::from_multigraph(g)
}

pub fn parse_multigraph(text: &str, format: GraphFormat) -> Result<Multigraph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text.trim()),
        GraphFormat::Jsonmg => {
            let mg: JsonMg = serde_json::from_str(text)
                .map_err(|e| Error::MalformedEncoding(e.to_string()))?;
            for &(u, v) in &mg.edges {
                if u >= mg.n || v >= mg.n {
                    return Err(Error::MalformedEncoding(format!(
                        "edge ({u},{v}) out of range for n={}",
                        mg.n
                    )));
                }
            }
            Ok(Multigraph::with_edges(mg.n, &mg.edges))
        }
    }
}

pub fn serialize_graph(g: &Multigraph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Graph6 => serialize_graph6(g),
        GraphFormat::Jsonmg => {
        let mg = JsonMg {
                n: g.num_vertices(),
                edges: g.edge_list().to_vec(),
            };
            Ok(serde_json::to_string(&mg).expect("jsonmg serialization"))
        }
    }
}

fn parse_graph6(line: &str) -> Result<Multigraph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedEncoding("empty graph6 line".into()));
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::MalformedEncoding("truncated graph6 size".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::MalformedEncoding(
                "graphs with more than 258047 vertices are not supported".into(),
            ));
        }
        let n = bytes[1..4]
            .iter()
            .try_fold(0usize, |acc, &b| decode6(b).map(|x| acc << 6 | x))?;
        (n, &bytes[4..])
    } else {
        (decode6(bytes[0])?, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let needed = nbits.div_ceil(6);
    if rest.len() < needed {
        return Err(Error::MalformedEncoding(format!(
            "graph6 body too short: {} groups, need {}",
            rest.len(),
            needed
        )));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for &b in &rest[..needed] {
        let x = decode6(b)?;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    let mut g = Multigraph::new(n);
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

fn decode6(b: u8) -> Result<usize> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as usize)
    } else {
        Err(Error::MalformedEncoding(format!("invalid graph6 byte {b}")))
    }
}

fn serialize_graph6(g: &Multigraph) -> Result<String> {
    let n = g.num_vertices();
    let mut adj = vec![false; n * n];
    for e in 0..g.num_edges() {
        let (u, v) = g.endpoints(e);
        if u == v {
            return Err(Error::MalformedEncoding("graph6 cannot encode loops".into()));
        }
        if adj[u * n + v] {
            return Err(Error::MalformedEncoding(
                "graph6 cannot encode parallel edges".into(),
            ));
        }
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nacc = 0u32;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adj[i * n + j] as u8;
            nacc += 1;
            if nacc == 6 {
                out.push(acc + 63);
                acc = 0;
                nacc = 0;
            }
        }
    }
    if nacc > 0 {
        out.push((acc << (6 - nacc)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ascii"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::iso::isomorphic;

    #[test]
    fn k4_from_graph6() {
        let g = parse_graph("C~", GraphFormat::Graph6).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 6);
        assert!(isomorphic(&g, &families::k4()).is_some());
    }

    #[test]
    fn petersen_roundtrip_graph6() {
        let g = families::petersen();
        let s = serialize_graph6(&g).unwrap();
        let back = parse_graph(&s, GraphFormat::Graph6).unwrap();
        assert_eq!(back.girth().unwrap(), 5);
        assert!(isomorphic(&back, &g).is_some());
    }

    #[test]
    fn dipole_jsonmg() {
        let g = parse_graph(r#"{"n":2,"edges":[[0,1],[0,1],[0,1]]}"#, GraphFormat::Jsonmg).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 3);
    }

    #[test]
    fn jsonmg_roundtrip_preserves_multiedges() {
        let g = families::dipole3();
        let s = serialize_graph(&g, GraphFormat::Jsonmg).unwrap();
        let back = parse_graph(&s, GraphFormat::Jsonmg).unwrap();
        assert_eq!(back.num_edges(), 3);
    }

    #[test]
    fn graph6_rejects_multigraphs() {
        assert!(serialize_graph6(&families::dipole3()).is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph("", GraphFormat::Graph6).is_err());
        assert!(parse_graph("C", GraphFormat::Graph6).is_err());
        assert!(parse_graph("{\"n\":1}", GraphFormat::Jsonmg).is_err());
        // non-cubic simple graph parses as multigraph but not as cubic
        assert!(parse_graph("A_", GraphFormat::Graph6).is_err());
    }
}
