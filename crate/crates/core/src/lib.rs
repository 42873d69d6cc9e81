//! Analysis toolkit for cubic graphs centred on uncolourability measures:
//! colouring defect and its hexagonal cores, perfect matching index, short
//! cycle covers, canonical 2-/3-sum decomposition, and a certified generator
//! of graphs with defect 3 and matching index 5.

pub mod bits;
pub mod certificate;
pub mod colouring;
pub mod decomposition;
pub mod defect;
pub mod error;
pub mod families;
pub mod graph;
pub mod pm_cover;
pub mod construction;
pub mod cycle_cover;

pub use bits::EdgeSet;
pub use error::{Error, Result};
pub use graph::{CubicGraph, DartId, EdgeCut, EdgeId, Multigraph, SubgraphRef, VertexId};
