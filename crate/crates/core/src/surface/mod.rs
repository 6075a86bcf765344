//! Ribbon graphs, orbifold dissections, polygon decompositions and the dual
//! dissection, together with the way back from a dissection to its algebra.

mod construct;
mod dual;
mod export;
mod polygons;
mod reconstruct;
mod ribbon;

use serde_json::{json, Value};
use thiserror::Error;

pub use construct::{generalised_by_replacement, generalised_ribbon_graph, ribbon_graph_of_gentle};
pub use dual::dual_graph;
pub use export::{to_dot, to_dot_with_dual};
pub use polygons::{
    euler_check, face_orbits, polygon_decomposition, surface_characteristic_check, topology, EulerCheck, Polygon,
    PolygonDecomposition, Topology,
};
pub use reconstruct::algebra_of_dissection;
pub use ribbon::{Corner, RibbonComplex, RibbonVertex, VertexKind, VertexSpec};

use crate::algebra_core::AlgebraPresentation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("not skew-gentle: {0}")]
    NotSkewGentle(String),
    #[error("malformed ribbon graph: {0}")]
    Malformed(String),
    #[error("invalid dissection document: {0}")]
    Schema(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("exceptional dissection: two edges, one corner and a special edge do not determine an algebra")]
    Exceptional,
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

/// A generalised ribbon graph together with its polygons and surface data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldDissection {
    pub ribbon: RibbonComplex,
    pub polygons: PolygonDecomposition,
    pub topology: Topology,
}

impl OrbifoldDissection {
    pub fn from_ribbon(ribbon: RibbonComplex) -> Self {
        let polygons = polygon_decomposition(&ribbon);
        let topology = topology(&ribbon);
        OrbifoldDissection { ribbon, polygons, topology }
    }

    pub fn to_json(&self) -> Value {
        let r = &self.ribbon;
        let polygons: Vec<Value> = self
            .polygons
            .polygons
            .iter()
            .map(|p| {
                json!({
                    "sides": p.sides.iter().map(|&e| r.edge_name(e)).collect::<Vec<_>>(),
                    "boundary": p.boundary,
                    "size": p.size(),
                    "internal_edges": p.internal_edges,
                    "degenerate": p.is_degenerate(),
                    "marked_vertex": p.marked_vertex.map(|v| r.vertex(v).label.clone()),
                    "orbifold": p.orbifold.iter().map(|&v| r.vertex(v).label.clone()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut doc = r.to_json();
        doc["polygons"] = json!(polygons);
        doc["topology"] = json!(self.topology);
        doc
    }

    /// Reads the ribbon part of a dissection document; polygons and topology
    /// are recomputed.
    pub fn from_json(value: &Value) -> Result<Self, SurfaceError> {
        Ok(Self::from_ribbon(RibbonComplex::from_json(value)?))
    }
}

/// The orbifold dissection of a skew-gentle triple.
pub fn dissection(p: &AlgebraPresentation) -> Result<OrbifoldDissection, SurfaceError> {
    Ok(OrbifoldDissection::from_ribbon(generalised_ribbon_graph(p)?))
}
