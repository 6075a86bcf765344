use super::{free_successor, relation_successor, validate_skew_gentle, AlgebraError, AlgebraPresentation};

const NONE: usize = usize::MAX;

/// Canonical string for a (locally) skew-gentle triple, invariant under
/// renaming vertices and arrows. Two triples are isomorphic iff their canonical
/// forms agree.
///
/// In a gentle quiver every arrow meeting a vertex is reached from any other
/// arrow at that vertex by one of six moves (free or relation successor and
/// predecessor, the other arrow with the same target, the other arrow with the
/// same source), so a breadth-first labelling driven by those moves from a root
/// arrow determines the triple. The code is minimised over roots per component.
pub fn canonical_form(p: &AlgebraPresentation) -> Result<String, AlgebraError> {
    let report = validate_skew_gentle(p);
    if !report.is_valid() {
        return Err(AlgebraError::NotSkewGentle("canonical form needs a locally skew-gentle triple".into()));
    }
    let q = p.quiver();
    let rel = |a: usize, b: usize| p.is_relation(a, b);
    let n = q.arrow_count();
    let moves: Vec<[usize; 6]> = (0..n)
        .map(|a| {
            let s = q.source(a);
            let t = q.target(a);
            let pf = q.in_arrows(s).iter().copied().find(|&g| !rel(g, a));
            let pr = q.in_arrows(s).iter().copied().find(|&g| rel(g, a));
            let co_in = q.in_arrows(t).iter().copied().find(|&g| g != a);
            let co_out = q.out_arrows(s).iter().copied().find(|&g| g != a);
            [
                free_successor(q, &rel, a).unwrap_or(NONE),
                relation_successor(q, &rel, a).unwrap_or(NONE),
                pf.unwrap_or(NONE),
                pr.unwrap_or(NONE),
                co_in.unwrap_or(NONE),
                co_out.unwrap_or(NONE),
            ]
        })
        .collect();
    let flags: Vec<usize> =
        (0..n).map(|a| usize::from(p.is_special(q.source(a))) + 2 * usize::from(p.is_special(q.target(a)))).collect();

    let mut component = vec![NONE; n];
    let mut codes = Vec::new();
    for a in 0..n {
        if component[a] != NONE {
            continue;
        }
        let members = bfs(a, &moves);
        for &m in &members {
            component[m] = a;
        }
        let best = members.iter().map(|&r| encode(r, &moves, &flags)).min().expect("component is nonempty");
        codes.push(best);
    }
    codes.sort();
    let isolated_plain = (0..q.vertex_count())
        .filter(|&v| q.in_arrows(v).is_empty() && q.out_arrows(v).is_empty() && !p.is_special(v))
        .count();
    let isolated_special = (0..q.vertex_count())
        .filter(|&v| q.in_arrows(v).is_empty() && q.out_arrows(v).is_empty() && p.is_special(v))
        .count();
    Ok(format!("{}|iso{}|isosp{}", codes.join("/"), isolated_plain, isolated_special))
}

pub fn is_isomorphic(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<bool, AlgebraError> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn bfs(root: usize, moves: &[[usize; 6]]) -> Vec<usize> {
    let mut label = vec![NONE; moves.len()];
    let mut order = vec![root];
    label[root] = 0;
    let mut i = 0;
    while i < order.len() {
        let a = order[i];
        for &b in &moves[a] {
            if b != NONE && label[b] == NONE {
                label[b] = order.len();
                order.push(b);
            }
        }
        i += 1;
    }
    order
}

fn encode(root: usize, moves: &[[usize; 6]], flags: &[usize]) -> String {
    let order = bfs(root, moves);
    let mut label = vec![NONE; moves.len()];
    for (i, &a) in order.iter().enumerate() {
        label[a] = i;
    }
    let mut out = Vec::with_capacity(order.len());
    for &a in &order {
        let targets: Vec<String> =
            moves[a].iter().map(|&b| if b == NONE { "-".to_string() } else { label[b].to_string() }).collect();
        out.push(format!("{}:{}", flags[a], targets.join(",")));
    }
    out.join(";")
}
