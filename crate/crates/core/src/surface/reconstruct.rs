use super::ribbon::{Corner, RibbonComplex, VertexKind};
use super::SurfaceError;
use crate::algebra_core::{validate_skew_gentle, AlgebraPresentation, Arrow, Quiver};

/// The skew-gentle triple encoded by a dissection: one vertex per edge, one
/// arrow per corner at a non-orbifold vertex, a relation for each pair of
/// corners that follow each other around a polygon (passing over orbifold
/// loops), and the special vertices given by the special edges.
pub fn algebra_of_dissection(r: &RibbonComplex) -> Result<AlgebraPresentation, SurfaceError> {
    let mut arrows = Vec::new();
    for v in r.vertices() {
        if v.kind == VertexKind::Orbifold {
            continue;
        }
        let n = v.halves.len();
        for (k, c) in v.corners.iter().enumerate() {
            if let Corner::Arrow(name) = c {
                arrows.push(Arrow {
                    name: name.clone(),
                    source: r.edge_name(v.halves[k] / 2).to_string(),
                    target: r.edge_name(v.halves[(k + 1) % n] / 2).to_string(),
                });
            }
        }
    }
    let quiver = Quiver::new(r.edges().to_vec(), arrows).map_err(|e| SurfaceError::Malformed(e.to_string()))?;
    let mut relations = Vec::new();
    for h in 0..r.half_count() {
        let Corner::Arrow(a) = r.corner_at(h) else { continue };
        let mut next = r.phi(h);
        let mut guard = 0;
        while matches!(r.corner_at(next), Corner::Loop(_)) {
            next = r.phi(next);
            guard += 1;
            if guard > r.half_count() {
                return Err(SurfaceError::Malformed("a face made of orbifold loops only".into()));
            }
        }
        if let Corner::Arrow(b) = r.corner_at(next) {
            relations.push((a.clone(), b.clone()));
        }
    }
    let special: Vec<String> =
        (0..r.edge_count()).filter(|&e| r.is_special_edge(e)).map(|e| r.edge_name(e).to_string()).collect();
    if quiver.vertex_count() == 2 && quiver.arrow_count() == 1 && !special.is_empty() {
        return Err(SurfaceError::Exceptional);
    }
    let p = AlgebraPresentation::new(quiver, &relations, &special).map_err(|e| SurfaceError::Malformed(e.to_string()))?;
    let report = validate_skew_gentle(&p);
    if !report.is_valid() {
        let why: Vec<String> = report.failures().iter().map(|c| c.axiom.clone()).collect();
        return Err(SurfaceError::NotSkewGentle(why.join("; ")));
    }
    Ok(p)
}
