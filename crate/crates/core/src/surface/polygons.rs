use serde::Serialize;

use super::ribbon::{Corner, RibbonComplex, VertexKind};

/// A face of the dissection: a run of corners of one face orbit, starting at a
/// marked gap when the face touches the boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polygon {
    /// Half-edges whose corners lie in this polygon, in traversal order. For a
    /// boundary polygon the first one carries the gap.
    pub corners: Vec<usize>,
    /// Edges along the polygon, one per corner: the edge leaving that corner.
    pub sides: Vec<usize>,
    pub boundary: bool,
    /// Vertex whose gap is the boundary segment.
    pub marked_vertex: Option<usize>,
    /// Orbifold vertices whose loop corner lies in this polygon.
    pub orbifold: Vec<usize>,
    /// Edges of the dissection on the polygon, each special edge counted once.
    pub internal_edges: usize,
}

impl Polygon {
    pub fn is_degenerate(&self) -> bool {
        !self.orbifold.is_empty()
    }

    /// Number of sides as a polygon, the boundary segment included.
    pub fn size(&self) -> usize {
        self.internal_edges + usize::from(self.boundary)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonDecomposition {
    pub polygons: Vec<Polygon>,
    /// Face orbits as half-edge cycles.
    pub orbits: Vec<Vec<usize>>,
}

impl PolygonDecomposition {
    pub fn boundary(&self) -> impl Iterator<Item = &Polygon> {
        self.polygons.iter().filter(|p| p.boundary)
    }

    pub fn interior(&self) -> impl Iterator<Item = &Polygon> {
        self.polygons.iter().filter(|p| !p.boundary)
    }
}

/// Face orbits of `h ↦ ι(σ(h))`, each listed from its least half-edge.
pub fn face_orbits(r: &RibbonComplex) -> Vec<Vec<usize>> {
    let mut seen = vec![false; r.half_count()];
    let mut out = Vec::new();
    for start in 0..r.half_count() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            orbit.push(h);
            h = r.phi(h);
        }
        out.push(orbit);
    }
    out
}

fn polygon(r: &RibbonComplex, corners: Vec<usize>, boundary: bool) -> Polygon {
    let sides: Vec<usize> = corners.iter().map(|&h| r.edge_of(r.sigma(h))).collect();
    let orbifold: Vec<usize> =
        corners.iter().filter(|&&h| matches!(r.corner_at(h), Corner::Loop(_))).map(|&h| r.owner(h).0).collect();
    let marked_vertex = if boundary { Some(r.owner(corners[0]).0) } else { None };
    let internal_edges = sides.len() - orbifold.len();
    Polygon { corners, sides, boundary, marked_vertex, orbifold, internal_edges }
}

/// Cuts every face orbit at its gaps. Orbits without a gap are interior
/// polygons around a puncture.
pub fn polygon_decomposition(r: &RibbonComplex) -> PolygonDecomposition {
    let orbits = face_orbits(r);
    let mut polygons = Vec::new();
    for orbit in &orbits {
        let gaps: Vec<usize> = (0..orbit.len()).filter(|&i| *r.corner_at(orbit[i]) == Corner::Gap).collect();
        if gaps.is_empty() {
            polygons.push(polygon(r, orbit.clone(), false));
            continue;
        }
        for (k, &g) in gaps.iter().enumerate() {
            let next = gaps[(k + 1) % gaps.len()];
            let len = (next + orbit.len() - g - 1) % orbit.len() + 1;
            let run: Vec<usize> = (0..len).map(|i| orbit[(g + i) % orbit.len()]).collect();
            polygons.push(polygon(r, run, true));
        }
    }
    PolygonDecomposition { polygons, orbits }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Topology {
    pub genus: usize,
    pub boundary: usize,
    pub punctures: usize,
    pub orbifold: usize,
    pub components: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    /// |M| − |E| + |F| summed over components.
    pub graph_characteristic: i64,
    /// Σ (2 − 2g) over components.
    pub expected: i64,
    pub holds: bool,
}

/// Genus per component from |M| − |E| + |F| = 2 − 2g, with boundary
/// components counted as face orbits containing a gap and punctures as
/// gapless orbits plus puncture vertices.
pub fn topology(r: &RibbonComplex) -> Topology {
    let orbits = face_orbits(r);
    let comps = r.components();
    let mut comp_of = vec![0; r.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut genus = 0;
    for (i, c) in comps.iter().enumerate() {
        let v = c.len() as i64;
        let halves: usize = c.iter().map(|&x| r.vertex(x).halves.len()).sum();
        let e = (halves / 2) as i64;
        let f = orbits.iter().filter(|o| comp_of[r.owner(o[0]).0] == i).count() as i64;
        let chi = v - e + f;
        genus += ((2 - chi) / 2).max(0) as usize;
    }
    let has_gap = |o: &Vec<usize>| o.iter().any(|&h| *r.corner_at(h) == Corner::Gap);
    let boundary = orbits.iter().filter(|o| has_gap(o)).count();
    let gapless = orbits.len() - boundary;
    let puncture_vertices = r.vertices().iter().filter(|v| v.kind == VertexKind::Puncture).count();
    Topology {
        genus,
        boundary,
        punctures: gapless + puncture_vertices,
        orbifold: r.orbifold_count(),
        components: comps.len(),
    }
}

/// Checks |M| − |E| + |F| = Σ(2 − 2g) with M all vertices and F all face
/// orbits, i.e. that every component has even characteristic.
pub fn euler_check(r: &RibbonComplex, t: &Topology) -> EulerCheck {
    let faces = face_orbits(r).len() as i64;
    let graph_characteristic = r.vertex_count() as i64 - r.edge_count() as i64 + faces;
    let expected = 2 * t.components as i64 - 2 * t.genus as i64;
    EulerCheck { graph_characteristic, expected, holds: graph_characteristic == expected }
}

/// χ of the marked orbifold surface, counting orbifold points as ordinary
/// vertices: |M_marked| + |M_orbifold| − |E| = Σ(2 − 2g) − b − p.
pub fn surface_characteristic_check(r: &RibbonComplex, t: &Topology) -> bool {
    let marked_and_orbifold = r.vertices().iter().filter(|v| v.kind != VertexKind::Puncture).count() as i64;
    let chi = marked_and_orbifold - r.edge_count() as i64;
    chi == 2 * t.components as i64 - 2 * t.genus as i64 - t.boundary as i64 - t.punctures as i64
}
