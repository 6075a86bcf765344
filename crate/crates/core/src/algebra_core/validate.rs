use std::collections::BTreeSet;

use serde::Serialize;

use super::AlgebraPresentation;

/// Outcome of one axiom, with the vertices or arrows that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub offenders: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// "gentle", "locally gentle", "skew-gentle", "locally skew-gentle" or "invalid".
    pub class: String,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    /// All axioms except possibly admissibility hold.
    pub fn is_valid(&self) -> bool {
        self.class != "invalid"
    }

    /// The ideal is admissible as well.
    pub fn is_admissible(&self) -> bool {
        self.is_valid() && !self.class.starts_with("locally")
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn check(axiom: &str, offenders: Vec<String>) -> AxiomCheck {
    AxiomCheck { axiom: axiom.to_string(), passed: offenders.is_empty(), offenders }
}

fn gentle_checks(p: &AlgebraPresentation) -> Vec<AxiomCheck> {
    let q = p.quiver();
    let name = |a: usize| q.arrow_name(a).to_string();
    let mut checks = Vec::new();

    let bad: Vec<String> = (0..q.vertex_count())
        .filter(|&v| q.in_arrows(v).len() > 2 || q.out_arrows(v).len() > 2)
        .map(|v| q.vertex_name(v).to_string())
        .collect();
    checks.push(check("(1) at most two arrows in and out of each vertex", bad));

    let mut bad = Vec::new();
    for a in 0..q.arrow_count() {
        let succ = q.out_arrows(q.target(a)).iter().filter(|&&b| p.is_relation(a, b)).count();
        let pred = q.in_arrows(q.source(a)).iter().filter(|&&g| p.is_relation(g, a)).count();
        if succ > 1 || pred > 1 {
            bad.push(name(a));
        }
    }
    checks.push(check("(2) at most one relation on each side of an arrow", bad));

    let mut bad = Vec::new();
    for a in 0..q.arrow_count() {
        let succ = q.out_arrows(q.target(a)).iter().filter(|&&b| !p.is_relation(a, b)).count();
        let pred = q.in_arrows(q.source(a)).iter().filter(|&&g| !p.is_relation(g, a)).count();
        if succ > 1 || pred > 1 {
            bad.push(name(a));
        }
    }
    checks.push(check("(3) at most one non-relation on each side of an arrow", bad));

    // Relations are stored as composable length-2 paths, so the ideal is
    // generated in degree two by construction.
    checks.push(check("(4) ideal generated by paths of length 2", Vec::new()));

    checks.push(check("(5) ideal admissible", free_cycle_arrows(p).into_iter().map(name).collect()));
    checks
}

/// Arrows lying on a cycle of composable non-relations. Such a cycle gives
/// arbitrarily long nonzero paths, so the ideal is not admissible.
fn free_cycle_arrows(p: &AlgebraPresentation) -> Vec<usize> {
    let q = p.quiver();
    let n = q.arrow_count();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|a| q.out_arrows(q.target(a)).iter().copied().filter(|&b| !p.is_relation(a, b)).collect())
        .collect();
    // An arrow is on a cycle iff it can reach itself.
    let mut on_cycle = Vec::new();
    for a in 0..n {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = succ[a].clone();
        while let Some(x) = stack.pop() {
            if x == a {
                on_cycle.push(a);
                break;
            }
            if !seen[x] {
                seen[x] = true;
                stack.extend(succ[x].iter().copied());
            }
        }
    }
    on_cycle
}

fn classify(checks: &[AxiomCheck], base: &str) -> String {
    let structural = checks.iter().filter(|c| !c.axiom.starts_with("(5)")).all(|c| c.passed);
    if !structural {
        return "invalid".to_string();
    }
    let admissible = checks.iter().find(|c| c.axiom.starts_with("(5)")).is_none_or(|c| c.passed);
    if admissible {
        base.to_string()
    } else {
        format!("locally {base}")
    }
}

/// Checks the gentle axioms on the quiver with relations, ignoring any special
/// vertices.
pub fn validate_gentle(p: &AlgebraPresentation) -> ValidationReport {
    let checks = gentle_checks(p);
    ValidationReport { class: classify(&checks, "gentle"), checks }
}

/// Checks the skew-gentle conditions on the triple (Q', I', Sp).
pub fn validate_skew_gentle(p: &AlgebraPresentation) -> ValidationReport {
    let q = p.quiver();
    let mut checks = gentle_checks(p);

    let mut bad = Vec::new();
    let mut loops = Vec::new();
    for v in p.special_set() {
        if q.out_arrows(v).iter().any(|&a| q.is_loop(a)) {
            loops.push(q.vertex_name(v).to_string());
            continue;
        }
        let ins = q.in_arrows(v);
        let outs = q.out_arrows(v);
        let ok = match (ins.len(), outs.len()) {
            (1, 0) | (0, 1) => true,
            (1, 1) => p.is_relation(ins[0], outs[0]),
            _ => false,
        };
        if !ok {
            bad.push(q.vertex_name(v).to_string());
        }
    }
    checks.push(check("(S1) special vertices carry no other loop", loops));
    checks.push(check(
        "(S2) special vertex meets one arrow, or one arrow in and one out composing to a relation",
        bad,
    ));

    let mut seen = BTreeSet::new();
    let dup: Vec<String> = p
        .special_list()
        .iter()
        .filter(|&&v| !seen.insert(v))
        .map(|&v| q.vertex_name(v).to_string())
        .collect();
    checks.push(check("(S3) at most one special loop per vertex", dup));

    ValidationReport { class: classify(&checks, "skew-gentle"), checks }
}
