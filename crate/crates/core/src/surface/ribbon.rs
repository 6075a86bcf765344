use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::SurfaceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// A vertex on the boundary; its last corner is the marked gap.
    Marked,
    /// An order-two orbifold point with a single special edge.
    Orbifold,
    /// An interior vertex without marking.
    Puncture,
}

impl VertexKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexKind::Marked => "marked",
            VertexKind::Orbifold => "orbifold",
            VertexKind::Puncture => "puncture",
        }
    }
}

/// The angle between two consecutive half-edges at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    Arrow(String),
    /// The marked boundary segment of a marked vertex.
    Gap,
    /// The special loop at an orbifold point.
    Loop(String),
}

impl Corner {
    pub fn arrow(&self) -> Option<&str> {
        match self {
            Corner::Arrow(a) => Some(a),
            _ => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Corner::Arrow(a) | Corner::Loop(a) => json!(a),
            Corner::Gap => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonVertex {
    pub kind: VertexKind,
    pub label: String,
    /// Half-edges in their cyclic order, starting after the marked gap.
    pub halves: Vec<usize>,
    /// Corner `k` runs from `halves[k]` to `halves[k + 1]` (cyclically).
    pub corners: Vec<Corner>,
}

/// A ribbon graph whose edges are named by vertices of a quiver. Half-edge `h`
/// belongs to edge `h / 2` and its partner is `h ^ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonComplex {
    edges: Vec<String>,
    vertices: Vec<RibbonVertex>,
    owner: Vec<(usize, usize)>,
}

/// A vertex given by the edges met in order; used to build complexes without
/// choosing half-edge numbers by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSpec {
    pub kind: VertexKind,
    pub label: String,
    pub edges: Vec<usize>,
    pub corners: Vec<Corner>,
}

impl RibbonComplex {
    pub fn new(edges: Vec<String>, vertices: Vec<RibbonVertex>) -> Result<Self, SurfaceError> {
        let mut owner = vec![(usize::MAX, 0); 2 * edges.len()];
        for (v, vert) in vertices.iter().enumerate() {
            for (k, &h) in vert.halves.iter().enumerate() {
                if h >= owner.len() {
                    return Err(SurfaceError::Malformed(format!("half-edge {h} out of range")));
                }
                if owner[h].0 != usize::MAX {
                    return Err(SurfaceError::Malformed(format!("half-edge {h} attached twice")));
                }
                owner[h] = (v, k);
            }
        }
        if let Some(h) = owner.iter().position(|o| o.0 == usize::MAX) {
            return Err(SurfaceError::Malformed(format!("edge `{}` is missing an end", edges[h / 2])));
        }
        let r = RibbonComplex { edges, vertices, owner };
        r.check_vertices()?;
        Ok(r)
    }

    /// Builds a complex from per-vertex edge lists; the first occurrence of an
    /// edge gets the even half.
    pub fn from_specs(edges: Vec<String>, specs: Vec<VertexSpec>) -> Result<Self, SurfaceError> {
        let mut seen = vec![0usize; edges.len()];
        let mut vertices = Vec::with_capacity(specs.len());
        for s in specs {
            let mut halves = Vec::with_capacity(s.edges.len());
            for &e in &s.edges {
                if e >= edges.len() {
                    return Err(SurfaceError::Malformed(format!("edge index {e} out of range")));
                }
                if seen[e] >= 2 {
                    return Err(SurfaceError::Malformed(format!("edge `{}` has more than two ends", edges[e])));
                }
                halves.push(2 * e + seen[e]);
                seen[e] += 1;
            }
            vertices.push(RibbonVertex { kind: s.kind, label: s.label, halves, corners: s.corners });
        }
        Self::new(edges, vertices)
    }

    fn check_vertices(&self) -> Result<(), SurfaceError> {
        for v in &self.vertices {
            let n = v.halves.len();
            let bad = |why: &str| Err(SurfaceError::Malformed(format!("vertex `{}`: {why}", v.label)));
            if n == 0 {
                return bad("no half-edges");
            }
            if v.corners.len() != n {
                return bad("corner count differs from valency");
            }
            match v.kind {
                VertexKind::Marked => {
                    if v.corners[n - 1] != Corner::Gap || v.corners[..n - 1].iter().any(|c| c.arrow().is_none()) {
                        return bad("a marked vertex needs arrow corners followed by one gap");
                    }
                }
                VertexKind::Orbifold => {
                    if n != 1 || !matches!(v.corners[0], Corner::Loop(_)) {
                        return bad("an orbifold point has one half-edge and one loop corner");
                    }
                    let other = self.owner[v.halves[0] ^ 1].0;
                    if self.vertices[other].kind == VertexKind::Orbifold {
                        return bad("a special edge joins two orbifold points");
                    }
                }
                VertexKind::Puncture => {
                    if v.corners.iter().any(|c| c.arrow().is_none()) {
                        return bad("a puncture vertex has arrow corners only");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e]
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e == name)
    }

    pub fn vertices(&self) -> &[RibbonVertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &RibbonVertex {
        &self.vertices[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn half_count(&self) -> usize {
        self.owner.len()
    }

    pub fn edge_of(&self, h: usize) -> usize {
        h / 2
    }

    /// (vertex, position) of a half-edge.
    pub fn owner(&self, h: usize) -> (usize, usize) {
        self.owner[h]
    }

    pub fn iota(&self, h: usize) -> usize {
        h ^ 1
    }

    pub fn sigma(&self, h: usize) -> usize {
        let (v, k) = self.owner[h];
        let halves = &self.vertices[v].halves;
        halves[(k + 1) % halves.len()]
    }

    pub fn sigma_inv(&self, h: usize) -> usize {
        let (v, k) = self.owner[h];
        let halves = &self.vertices[v].halves;
        halves[(k + halves.len() - 1) % halves.len()]
    }

    /// Face permutation: turn to the next half-edge, then cross the edge.
    pub fn phi(&self, h: usize) -> usize {
        self.iota(self.sigma(h))
    }

    /// The corner starting at half-edge `h`.
    pub fn corner_at(&self, h: usize) -> &Corner {
        let (v, k) = self.owner[h];
        &self.vertices[v].corners[k]
    }

    pub fn kind_at(&self, h: usize) -> VertexKind {
        self.vertices[self.owner[h].0].kind
    }

    /// Whether an edge joins a vertex to an orbifold point.
    pub fn is_special_edge(&self, e: usize) -> bool {
        self.kind_at(2 * e) == VertexKind::Orbifold || self.kind_at(2 * e + 1) == VertexKind::Orbifold
    }

    /// The half of a special edge attached to its orbifold point.
    pub fn orbifold_half(&self, e: usize) -> Option<usize> {
        [2 * e, 2 * e + 1].into_iter().find(|&h| self.kind_at(h) == VertexKind::Orbifold)
    }

    pub fn orbifold_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Orbifold).count()
    }

    /// Connected components as lists of vertices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for &h in &self.vertices[v].halves {
                    let w = self.owner[h ^ 1].0;
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            out.push(members);
        }
        out
    }

    /// Per-vertex edge lists in order.
    pub fn specs(&self) -> Vec<VertexSpec> {
        self.vertices
            .iter()
            .map(|v| VertexSpec {
                kind: v.kind,
                label: v.label.clone(),
                edges: v.halves.iter().map(|&h| h / 2).collect(),
                corners: v.corners.clone(),
            })
            .collect()
    }

    /// A sorted description of the vertices by edge names and corners, with the
    /// cyclic lists of puncture vertices rotated to their least rotation. Two
    /// complexes over the same edge names are equal as ribbon graphs iff their
    /// descriptors agree (labels included only on request).
    pub fn descriptor(&self, with_labels: bool) -> Vec<String> {
        let mut out: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                let mut items: Vec<(String, String)> = v
                    .halves
                    .iter()
                    .zip(&v.corners)
                    .map(|(&h, c)| {
                        let corner = match c {
                            Corner::Arrow(a) => a.clone(),
                            Corner::Gap => "|".to_string(),
                            Corner::Loop(l) => format!("~{l}"),
                        };
                        (self.edges[h / 2].clone(), corner)
                    })
                    .collect();
                if v.kind == VertexKind::Puncture {
                    let n = items.len();
                    let best = (0..n)
                        .map(|r| {
                            let mut rot = items.clone();
                            rot.rotate_left(r);
                            rot
                        })
                        .min()
                        .expect("nonempty vertex");
                    items = best;
                }
                let body: Vec<String> = items.iter().map(|(e, c)| format!("{e}[{c}]")).collect();
                let label = if with_labels && v.kind != VertexKind::Puncture { v.label.as_str() } else { "" };
                format!("{}:{}:{}", v.kind.as_str(), label, body.join(" "))
            })
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|v| {
                json!({
                    "label": v.label,
                    "kind": v.kind,
                    "edges": v.halves.iter().map(|&h| &self.edges[h / 2]).collect::<Vec<_>>(),
                    "corners": v.corners.iter().map(Corner::to_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "edges": self.edges, "vertices": vertices })
    }

    pub fn from_json(value: &Value) -> Result<Self, SurfaceError> {
        #[derive(Deserialize)]
        struct RawVertex {
            #[serde(default)]
            label: String,
            kind: VertexKind,
            edges: Vec<Value>,
            corners: Vec<Option<String>>,
        }
        #[derive(Deserialize)]
        struct Raw {
            edges: Vec<Value>,
            vertices: Vec<RawVertex>,
        }
        let raw: Raw = serde_json::from_value(value.clone()).map_err(|e| SurfaceError::Schema(e.to_string()))?;
        let name = |v: &Value| -> Result<String, SurfaceError> {
            match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                other => Err(SurfaceError::Schema(format!("expected an edge id, found {other}"))),
            }
        };
        let edges: Vec<String> = raw.edges.iter().map(name).collect::<Result<_, _>>()?;
        let index: BTreeMap<&str, usize> = edges.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        if index.len() != edges.len() {
            return Err(SurfaceError::Schema("duplicate edge id".into()));
        }
        let mut specs = Vec::new();
        for rv in raw.vertices {
            let mut es = Vec::new();
            for e in &rv.edges {
                let n = name(e)?;
                es.push(*index.get(n.as_str()).ok_or_else(|| SurfaceError::Schema(format!("unknown edge `{n}`")))?);
            }
            let corners = rv
                .corners
                .into_iter()
                .map(|c| match (c, rv.kind) {
                    (None, _) => Corner::Gap,
                    (Some(n), VertexKind::Orbifold) => Corner::Loop(n),
                    (Some(n), _) => Corner::Arrow(n),
                })
                .collect();
            specs.push(VertexSpec { kind: rv.kind, label: rv.label, edges: es, corners });
        }
        Self::from_specs(edges, specs)
    }
}
