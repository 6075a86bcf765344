//! Seeded random skew-gentle algebras, obtained by reading off the algebra of
//! a random orbifold dissection.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra_core::{canonical_form, loop_name, validate_skew_gentle, AlgebraPresentation};
use crate::surface::{algebra_of_dissection, Corner, RibbonComplex, VertexKind, VertexSpec};

/// Size limits for generated dissections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusBounds {
    pub max_edges: usize,
    pub max_special: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds { max_edges: 7, max_special: 2 }
    }
}

/// `count` pairwise non-isomorphic skew-gentle algebras, deterministic in
/// `seed`.
pub fn corpus_generate(seed: u64, count: usize) -> Vec<AlgebraPresentation> {
    corpus_generate_with(seed, count, CorpusBounds::default())
}

pub fn corpus_generate_with(seed: u64, count: usize, bounds: CorpusBounds) -> Vec<AlgebraPresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) {
        attempts += 1;
        let Some(p) = random_algebra(&mut rng, bounds) else { continue };
        let Ok(key) = canonical_form(&p) else { continue };
        if seen.insert(key) {
            out.push(p);
        }
    }
    out
}

/// One random dissection: a connected ribbon graph with marked vertices and
/// shuffled cyclic orders, plus special edges ending at orbifold points,
/// read back as an algebra. `None` when the result is rejected.
pub fn random_algebra<R: Rng>(rng: &mut R, bounds: CorpusBounds) -> Option<AlgebraPresentation> {
    let edges = rng.gen_range(1..=bounds.max_edges.max(1));
    let vertices = rng.gen_range(1..=edges + 1);
    // A spanning tree first, then the remaining edges anywhere.
    let mut ends: Vec<(usize, usize)> = (1..vertices).map(|v| (rng.gen_range(0..v), v)).collect();
    while ends.len() < edges {
        ends.push((rng.gen_range(0..vertices), rng.gen_range(0..vertices)));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for (e, &(u, v)) in ends.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    for list in &mut incident {
        list.shuffle(rng);
    }
    let mut special = Vec::new();
    let n_special = rng.gen_range(0..=bounds.max_special);
    for _ in 0..n_special {
        let hosts: Vec<usize> = (0..vertices).filter(|&v| incident[v].len() >= 2).collect();
        let Some(&w) = hosts.choose(rng) else { break };
        let e = ends.len() + special.len();
        let at = rng.gen_range(0..=incident[w].len());
        incident[w].insert(at, e);
        special.push(e);
    }
    let total = ends.len() + special.len();
    let names: Vec<String> = (0..total).map(|i| format!("v{i}")).collect();
    let mut specs = Vec::new();
    let mut arrow = 0;
    for list in &incident {
        let mut corners: Vec<Corner> = (1..list.len())
            .map(|_| {
                arrow += 1;
                Corner::Arrow(format!("a{}", arrow - 1))
            })
            .collect();
        corners.push(Corner::Gap);
        specs.push(VertexSpec { kind: VertexKind::Marked, label: String::new(), edges: list.clone(), corners });
    }
    for &e in &special {
        specs.push(VertexSpec {
            kind: VertexKind::Orbifold,
            label: String::new(),
            edges: vec![e],
            corners: vec![Corner::Loop(loop_name(&names[e]))],
        });
    }
    let r = RibbonComplex::from_specs(names, specs).ok()?;
    let p = algebra_of_dissection(&r).ok()?;
    validate_skew_gentle(&p).is_valid().then_some(p)
}
