use std::collections::BTreeSet;

use super::ribbon::{Corner, RibbonComplex, VertexKind, VertexSpec};
use super::SurfaceError;
use crate::algebra_core::{
    derived_presentations, loop_name, threads, validate_skew_gentle, AlgebraPresentation, Quiver,
};

fn require_valid(p: &AlgebraPresentation) -> Result<(), SurfaceError> {
    let report = validate_skew_gentle(p);
    if report.is_valid() {
        Ok(())
    } else {
        let why: Vec<String> = report.failures().iter().map(|c| c.axiom.clone()).collect();
        Err(SurfaceError::NotSkewGentle(why.join("; ")))
    }
}

fn edge_names(q: &Quiver) -> Vec<String> {
    q.vertices().to_vec()
}

/// Path-style vertex names: arrows in order, with the special loop inserted
/// wherever a special edge is met; `e_i` for vertices without arrows.
pub(crate) fn relabel(specs: &mut [VertexSpec], edges: &[String], special: &BTreeSet<usize>) {
    for s in specs.iter_mut() {
        let has_arrow = s.corners.iter().any(|c| c.arrow().is_some());
        if s.kind == VertexKind::Orbifold || !has_arrow {
            s.label = format!("e_{}", edges[s.edges[0]]);
            continue;
        }
        let mut tokens = Vec::new();
        for (e, c) in s.edges.iter().zip(&s.corners) {
            if special.contains(e) {
                tokens.push(loop_name(&edges[*e]));
            }
            if let Corner::Arrow(a) = c {
                tokens.push(a.clone());
            }
        }
        s.label = tokens.join(".");
    }
}

fn linear_spec(q: &Quiver, arrows: &[usize], vertices: &[usize]) -> VertexSpec {
    let mut corners: Vec<Corner> = arrows.iter().map(|&a| Corner::Arrow(q.arrow_name(a).to_string())).collect();
    corners.push(Corner::Gap);
    VertexSpec { kind: VertexKind::Marked, label: String::new(), edges: vertices.to_vec(), corners }
}

fn cyclic_spec(q: &Quiver, arrows: &[usize], vertices: &[usize]) -> VertexSpec {
    VertexSpec {
        kind: VertexKind::Puncture,
        label: String::new(),
        edges: vertices.to_vec(),
        corners: arrows.iter().map(|&a| Corner::Arrow(q.arrow_name(a).to_string())).collect(),
    }
}

fn leaf(v: usize) -> VertexSpec {
    VertexSpec { kind: VertexKind::Marked, label: String::new(), edges: vec![v], corners: vec![Corner::Gap] }
}

fn orbifold_leaf(q: &Quiver, v: usize) -> VertexSpec {
    VertexSpec {
        kind: VertexKind::Orbifold,
        label: String::new(),
        edges: vec![v],
        corners: vec![Corner::Loop(loop_name(q.vertex_name(v)))],
    }
}

/// The marked ribbon graph of the gentle algebra underlying `p` (special
/// loops ignored), read off from its maximal paths and qualifying trivial
/// paths. Free cycles of a locally gentle algebra become puncture vertices.
pub fn ribbon_graph_of_gentle(p: &AlgebraPresentation) -> Result<RibbonComplex, SurfaceError> {
    let lambda = p.gentle_part();
    require_valid(&lambda)?;
    let q = lambda.quiver();
    let rel = |a: usize, b: usize| lambda.is_relation(a, b);
    let free_succ = |a: usize| -> Vec<usize> { q.out_arrows(q.target(a)).iter().copied().filter(|&b| !rel(a, b)).collect() };
    let free_pred = |b: usize| -> Vec<usize> { q.in_arrows(q.source(b)).iter().copied().filter(|&a| !rel(a, b)).collect() };
    let limit = q.arrow_count();

    let mut specs = Vec::new();
    let mut covered = vec![false; q.arrow_count()];
    // Maximal paths: start where no arrow can be prepended, extend while possible.
    for a in 0..q.arrow_count() {
        if !free_pred(a).is_empty() {
            continue;
        }
        let mut stack = vec![vec![a]];
        while let Some(path) = stack.pop() {
            let last = *path.last().expect("nonempty path");
            let next = free_succ(last);
            if next.is_empty() {
                let mut vertices = vec![q.source(path[0])];
                vertices.extend(path.iter().map(|&x| q.target(x)));
                for &x in &path {
                    covered[x] = true;
                }
                specs.push(linear_spec(q, &path, &vertices));
            } else if path.len() <= limit {
                for b in next {
                    let mut longer = path.clone();
                    longer.push(b);
                    stack.push(longer);
                }
            }
        }
    }
    // Arrows on free cycles never appear in a maximal path.
    for a in 0..q.arrow_count() {
        if covered[a] {
            continue;
        }
        let mut cycle = vec![a];
        covered[a] = true;
        let mut cur = a;
        loop {
            let next = free_succ(cur);
            let Some(&b) = next.first() else {
                return Err(SurfaceError::Unsupported(format!("arrow `{}` is on no maximal path", q.arrow_name(a))));
            };
            if b == a {
                break;
            }
            if covered[b] {
                return Err(SurfaceError::Unsupported(format!("arrow `{}` is on two threads", q.arrow_name(b))));
            }
            covered[b] = true;
            cycle.push(b);
            cur = b;
        }
        let vertices: Vec<usize> = cycle.iter().map(|&x| q.source(x)).collect();
        specs.push(cyclic_spec(q, &cycle, &vertices));
    }
    for v in 0..q.vertex_count() {
        let ins = q.in_arrows(v);
        let outs = q.out_arrows(v);
        let count = match (ins.len(), outs.len()) {
            (0, 0) => 2,
            (1, 0) | (0, 1) => 1,
            (1, 1) if !rel(ins[0], outs[0]) => 1,
            _ => 0,
        };
        for _ in 0..count {
            specs.push(leaf(v));
        }
    }
    let edges = edge_names(q);
    relabel(&mut specs, &edges, &BTreeSet::new());
    RibbonComplex::from_specs(edges, specs)
}

/// The generalised ribbon graph of a skew-gentle triple, built from the
/// threads of the auxiliary algebra A+ (relations through special vertices
/// dropped). The trivial thread at each special vertex is an orbifold point.
pub fn generalised_ribbon_graph(p: &AlgebraPresentation) -> Result<RibbonComplex, SurfaceError> {
    require_valid(p)?;
    let (_, plus) = derived_presentations(p);
    let q = p.quiver();
    let set = threads(q, &|a, b| plus.is_relation(a, b)).map_err(|e| SurfaceError::NotSkewGentle(e.to_string()))?;
    let mut specs = Vec::new();
    for t in &set.threads {
        specs.push(if t.cyclic { cyclic_spec(q, &t.arrows, &t.vertices) } else { linear_spec(q, &t.arrows, &t.vertices) });
    }
    for &(v, count) in &set.trivial {
        if p.is_special(v) {
            if count != 1 {
                return Err(SurfaceError::Unsupported(format!("special vertex `{}` has no arrow", q.vertex_name(v))));
            }
            specs.push(orbifold_leaf(q, v));
        } else {
            for _ in 0..count {
                specs.push(leaf(v));
            }
        }
    }
    let edges = edge_names(q);
    relabel(&mut specs, &edges, &p.special_set());
    RibbonComplex::from_specs(edges, specs)
}

/// The same graph obtained from the gentle ribbon graph by local surgery at
/// every special vertex: a leaf becomes an orbifold point, and a vertex with
/// one incoming and one outgoing arrow has its two ends merged across the
/// special edge, whose far end becomes an orbifold point.
pub fn generalised_by_replacement(p: &AlgebraPresentation) -> Result<RibbonComplex, SurfaceError> {
    require_valid(p)?;
    let base = ribbon_graph_of_gentle(p)?;
    let q = p.quiver();
    let mut specs = base.specs();
    for x in p.special_set() {
        let ins = q.in_arrows(x);
        let outs = q.out_arrows(x);
        if ins.len() + outs.len() == 1 {
            let leaf = specs
                .iter_mut()
                .find(|s| s.kind == VertexKind::Marked && s.edges == [x])
                .ok_or_else(|| SurfaceError::Unsupported(format!("no leaf at special vertex `{}`", q.vertex_name(x))))?;
            *leaf = orbifold_leaf(q, x);
            continue;
        }
        let (alpha, beta) = (q.arrow_name(ins[0]), q.arrow_name(outs[0]));
        let ends_here = specs.iter().position(|s| {
            let n = s.edges.len();
            s.kind == VertexKind::Marked && n >= 2 && s.edges[n - 1] == x && s.corners[n - 2].arrow() == Some(alpha)
        });
        let starts_here = specs.iter().position(|s| {
            s.kind == VertexKind::Marked && s.edges.len() >= 2 && s.edges[0] == x && s.corners[0].arrow() == Some(beta)
        });
        let (Some(w1), Some(w2)) = (ends_here, starts_here) else {
            return Err(SurfaceError::Unsupported(format!("cannot merge at special vertex `{}`", q.vertex_name(x))));
        };
        if w1 == w2 {
            let s = &mut specs[w1];
            s.edges.pop();
            s.corners.pop();
            s.kind = VertexKind::Puncture;
        } else {
            let tail = specs[w2].clone();
            let head = &mut specs[w1];
            head.corners.pop();
            head.edges.extend_from_slice(&tail.edges[1..]);
            head.corners.extend(tail.corners);
            specs.remove(w2);
        }
        specs.push(orbifold_leaf(q, x));
    }
    let edges = edge_names(q);
    relabel(&mut specs, &edges, &p.special_set());
    RibbonComplex::from_specs(edges, specs)
}
