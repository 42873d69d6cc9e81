//! Self-contained JSON certificates: the graph is embedded alongside the
//! analysis witnesses so that every claim re-verifies from the file alone,
//! without corpus access or re-running the searches.

use crate::cycle_cover::{verify_cover, CycleCover};
use crate::defect::{Core, DefectCertificate};
use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::pm_cover::Pmi;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Analyses {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub defect: Option<DefectCertificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pmi: Option<Pmi>,
    /// factor graphs of the canonical decomposition
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factors: Option<Vec<CubicGraph>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cover: Option<CycleCover>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub recipe: Option<crate::construction::Recipe>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub heavy_pentagon: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strong: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub graph: CubicGraph,
    pub analyses: Analyses,
}

impl Certificate {
    pub fn new(graph: CubicGraph, seed: Option<u64>) -> Certificate {
        Certificate {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            graph,
            analyses: Analyses::default(),
        }
    }
}

/// Re-checks every embedded witness against the embedded graph. Cheap
/// verifications only — searches are not re-run, so a certificate can
/// prove what an analysis found, not what it exhausted.
pub fn verify_certificate(cert: &Certificate) -> Result<bool> {
    if cert.schema_version != SCHEMA_VERSION {
        return Err(Error::SchemaError(format!(
            "unsupported schema version {}",
            cert.schema_version
        )));
    }
    let g = &cert.graph;
    if let Some(defect) = &cert.analyses.defect {
        if !defect.witness.is_valid(g) {
            return Ok(false);
        }
        if defect.witness.uncovered(g).len() != defect.defect {
            return Ok(false);
        }
        let core = Core::of_array(g, &defect.witness);
        if core.edges != defect.core.edges || core.is_hexagonal(g) != defect.hexagonal {
            return Ok(false);
        }
    }
    if let Some(pmi) = &cert.analyses.pmi {
        if let Pmi::Exact { value, cover } = pmi {
            if cover.matchings.len() != *value as usize || !cover.is_valid_cover(g) {
                return Ok(false);
            }
            if *value == 4 && !cover.is_four_cover(g) {
                return Ok(false);
            }
        }
    }
    if let Some(factors) = &cert.analyses.factors {
        if factors
            .iter()
            .any(|f| !crate::graph::cuts::cyclically_4_edge_connected(f).unwrap_or(false))
        {
            return Ok(false);
        }
    }
    if let Some(cover) = &cert.analyses.cover {
        if verify_cover(g, cover).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defect::colouring_defect;
    use crate::families;

    #[test]
    fn round_trip_and_tampering() {
        let pg = families::petersen();
        let mut cert = Certificate::new(pg.clone(), Some(3));
        cert.analyses.defect = Some(colouring_defect(&pg).unwrap());
        assert!(verify_certificate(&cert).unwrap());
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert!(verify_certificate(&back).unwrap());
        // remove an edge from a matching: witness no longer verifies
        let mut broken = cert.clone();
        if let Some(d) = &mut broken.analyses.defect {
            let e = d.witness.matchings[0].to_vec()[0];
            d.witness.matchings[0].remove(e);
        }
        assert!(!verify_certificate(&broken).unwrap());
        // swap in a different graph
        let mut wrong = cert.clone();
        wrong.graph = families::flower(5);
        assert!(!verify_certificate(&wrong).unwrap());
        // future schema rejected
        let mut future = cert.clone();
        future.schema_version = 99;
        assert!(matches!(
            verify_certificate(&future),
            Err(Error::SchemaError(_))
        ));
    }
}
