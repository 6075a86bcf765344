use super::{AlgebraError, Quiver};

/// A maximal thread of a (locally) gentle quiver with relations: a path whose
/// consecutive arrows do not compose to a relation, extended as far as possible.
/// Cyclic threads close up on themselves and carry no endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    pub arrows: Vec<usize>,
    /// Vertices visited, `arrows.len() + 1` of them for a linear thread and
    /// `arrows.len()` for a cyclic one.
    pub vertices: Vec<usize>,
    pub cyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreadSet {
    pub threads: Vec<Thread>,
    /// Trivial threads per vertex, as `(vertex, count)` with count 1 or 2.
    pub trivial: Vec<(usize, usize)>,
}

/// The unique arrow `b` with `ab` composable and not a relation, if any.
pub fn free_successor(q: &Quiver, rel: &dyn Fn(usize, usize) -> bool, a: usize) -> Option<usize> {
    q.out_arrows(q.target(a)).iter().copied().find(|&b| !rel(a, b))
}

/// The unique arrow `b` with `ab` a relation, if any.
pub fn relation_successor(q: &Quiver, rel: &dyn Fn(usize, usize) -> bool, a: usize) -> Option<usize> {
    q.out_arrows(q.target(a)).iter().copied().find(|&b| rel(a, b))
}

fn free_predecessor(q: &Quiver, rel: &dyn Fn(usize, usize) -> bool, b: usize) -> Option<usize> {
    q.in_arrows(q.source(b)).iter().copied().find(|&a| !rel(a, b))
}

/// Decomposes the arrows of a locally gentle quiver into maximal and cyclic
/// threads, and counts the trivial threads at each vertex.
///
/// Fails when some vertex is visited more than twice, which means the input
/// violates the at-most-two conditions.
pub fn threads(q: &Quiver, rel: &dyn Fn(usize, usize) -> bool) -> Result<ThreadSet, AlgebraError> {
    let n = q.arrow_count();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if free_predecessor(q, rel, a).is_some() {
            continue;
        }
        let mut arrows = vec![a];
        let mut vertices = vec![q.source(a), q.target(a)];
        used[a] = true;
        let mut cur = a;
        while let Some(b) = free_successor(q, rel, cur) {
            if used[b] {
                return Err(AlgebraError::NotSkewGentle(format!(
                    "arrow `{}` lies on two threads",
                    q.arrow_name(b)
                )));
            }
            used[b] = true;
            arrows.push(b);
            vertices.push(q.target(b));
            cur = b;
        }
        out.push(Thread { arrows, vertices, cyclic: false });
    }
    for a in 0..n {
        if used[a] {
            continue;
        }
        let mut arrows = vec![a];
        let mut vertices = vec![q.source(a)];
        used[a] = true;
        let mut cur = a;
        loop {
            let b = free_successor(q, rel, cur).ok_or_else(|| {
                AlgebraError::NotSkewGentle(format!("arrow `{}` ends a thread without starting one", q.arrow_name(cur)))
            })?;
            if b == a {
                break;
            }
            if used[b] {
                return Err(AlgebraError::NotSkewGentle(format!(
                    "arrow `{}` lies on two threads",
                    q.arrow_name(b)
                )));
            }
            used[b] = true;
            arrows.push(b);
            vertices.push(q.source(b));
            cur = b;
        }
        out.push(Thread { arrows, vertices, cyclic: true });
    }
    let mut trivial = Vec::new();
    for v in 0..q.vertex_count() {
        let ins = q.in_arrows(v);
        let outs = q.out_arrows(v);
        let free = ins.iter().flat_map(|&a| outs.iter().map(move |&b| (a, b))).filter(|&(a, b)| !rel(a, b)).count();
        let visits = ins.len() + outs.len() - free;
        if visits > 2 {
            return Err(AlgebraError::NotSkewGentle(format!(
                "vertex `{}` lies on {visits} threads",
                q.vertex_name(v)
            )));
        }
        if visits < 2 {
            trivial.push((v, 2 - visits));
        }
    }
    Ok(ThreadSet { threads: out, trivial })
}
