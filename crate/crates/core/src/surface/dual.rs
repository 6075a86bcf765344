use std::collections::BTreeSet;

use super::construct::relabel;
use super::ribbon::{Corner, RibbonComplex, VertexKind, VertexSpec};
use super::{OrbifoldDissection, SurfaceError};
use crate::algebra_core::op_name;

/// The dual dissection: one vertex per polygon (marked for boundary polygons,
/// a puncture for interior ones), the same edge names, and each orbifold point
/// joined by its special edge to the polygon containing it.
///
/// Around a dual vertex the polygon's sides are listed in reverse, the two
/// sides formed by a special edge count once, and each corner `a` becomes
/// `a^op`. The gap of a boundary polygon follows its first side.
pub fn dual_graph(d: &OrbifoldDissection) -> Result<OrbifoldDissection, SurfaceError> {
    let r = &d.ribbon;
    let mut specs = Vec::new();
    for p in &d.polygons.polygons {
        let mut items: Vec<(usize, Corner)> = Vec::new();
        for (i, &h) in p.corners.iter().enumerate() {
            let corner = match r.corner_at(h) {
                Corner::Gap => Corner::Gap,
                Corner::Arrow(a) => Corner::Arrow(op_name(a)),
                Corner::Loop(l) => Corner::Loop(l.clone()),
            };
            items.push((p.sides[i], corner));
        }
        // Corner i sits before side i; reversing pairs side i with corner i.
        items.reverse();
        let items: Vec<(usize, Corner)> = items.into_iter().filter(|(_, c)| !matches!(c, Corner::Loop(_))).collect();
        // The gap corner came first, so after reversal it closes the list.
        let (edges, corners): (Vec<usize>, Vec<Corner>) = items.into_iter().unzip();
        debug_assert!(!p.boundary || corners.last() == Some(&Corner::Gap));
        if edges.is_empty() {
            return Err(SurfaceError::Malformed("a polygon without sides".into()));
        }
        let kind = if p.boundary { VertexKind::Marked } else { VertexKind::Puncture };
        specs.push(VertexSpec { kind, label: String::new(), edges, corners });
    }
    for v in r.vertices().iter().filter(|v| v.kind == VertexKind::Orbifold) {
        specs.push(VertexSpec {
            kind: VertexKind::Orbifold,
            label: String::new(),
            edges: vec![v.halves[0] / 2],
            corners: v.corners.clone(),
        });
    }
    let special: BTreeSet<usize> = (0..r.edge_count()).filter(|&e| r.is_special_edge(e)).collect();
    let edges = r.edges().to_vec();
    relabel(&mut specs, &edges, &special);
    let dual = OrbifoldDissection::from_ribbon(RibbonComplex::from_specs(edges, specs)?);
    if dual.topology != d.topology {
        return Err(SurfaceError::Inconsistent(format!(
            "dual topology {:?} differs from {:?}",
            dual.topology, d.topology
        )));
    }
    Ok(dual)
}
