//! Parity paths and the forest characterization of their cyclic existence.

use std::fmt;

use coxsp_core::{CoxeterSystem, Label};

use crate::DiagramError;

/// Letters attached to an ordered pair (i, j) with finite label m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    /// Alternating word of length m - 1 starting with s_i.
    pub r: Vec<usize>,
    pub k: u32,
}

pub fn block(system: &CoxeterSystem, i: usize, j: usize) -> Option<Block> {
    let m = system.label(i, j).finite()?;
    if i == j {
        return None;
    }
    let even = m % 2 == 0;
    let r = (0..m as usize - 1).map(|l| if l % 2 == 0 { i } else { j }).collect();
    Some(Block {
        a: i,
        b: if even { i } else { j },
        c: j,
        d: if even { j } else { i },
        r,
        k: m / 2,
    })
}

/// Generator continuing a parity path after the pair (s_j, s_i).
pub fn next_j(system: &CoxeterSystem, j: usize, i: usize) -> Option<usize> {
    block(system, i, j).map(|b| b.d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange,
    SameGenerator,
    InfiniteLabel,
    /// s_{j_{l+1}} differs from d_{i_l, j_l}.
    WrongContinuation,
    /// i_{l+1} lies in {i_l, j_l}.
    Backtrack,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::OutOfRange => "generator out of range",
            Violation::SameGenerator => "i equals j",
            Violation::InfiniteLabel => "infinite label",
            Violation::WrongContinuation => "next j is not d(i,j)",
            Violation::Backtrack => "next i repeats i or j",
        })
    }
}

/// First failing pair (0-based) and the condition it breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityViolation {
    pub step: usize,
    pub kind: Violation,
}

/// Flattened (s_{j_1}, s_{i_1}, ..., s_{j_k}, s_{i_k}), 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityPath(pub Vec<usize>);

impl ParityPath {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.chunks(2).map(|c| (c[0], c[1]))
    }

    /// The path with its first pair appended.
    pub fn doubled(&self) -> ParityPath {
        let mut v = self.0.clone();
        v.extend_from_slice(&self.0[..2.min(self.0.len())]);
        ParityPath(v)
    }
}

impl fmt::Display for ParityPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "({})", v.join(","))
    }
}

pub fn check_parity_path(system: &CoxeterSystem, path: &[usize]) -> Result<Result<(), ParityViolation>, DiagramError> {
    if path.len() % 2 != 0 {
        return Err(DiagramError::OddLength(path.len()));
    }
    let n = system.rank();
    let pairs: Vec<(usize, usize)> = path.chunks(2).map(|c| (c[0], c[1])).collect();
    for (step, &(j, i)) in pairs.iter().enumerate() {
        let fail = |kind| Ok(Err(ParityViolation { step, kind }));
        if i >= n || j >= n {
            return fail(Violation::OutOfRange);
        }
        if i == j {
            return fail(Violation::SameGenerator);
        }
        if system.label(i, j) == Label::Infinite {
            return fail(Violation::InfiniteLabel);
        }
        if step > 0 {
            let (pj, pi) = pairs[step - 1];
            if next_j(system, pj, pi) != Some(j) {
                return fail(Violation::WrongContinuation);
            }
            if i == pi || i == pj {
                return fail(Violation::Backtrack);
            }
        }
    }
    Ok(Ok(()))
}

pub fn is_parity_path(system: &CoxeterSystem, path: &[usize]) -> Result<bool, DiagramError> {
    Ok(check_parity_path(system, path)?.is_ok())
}

/// Nonempty parity path whose doubled path is again a parity path.
pub fn is_cyclic_parity_path(system: &CoxeterSystem, path: &[usize]) -> Result<bool, DiagramError> {
    if path.is_empty() {
        return Ok(false);
    }
    let p = ParityPath(path.to_vec());
    Ok(is_parity_path(system, path)? && is_parity_path(system, &p.doubled().0)?)
}

/// Which clause of the characterization fails, with the data the witness is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    OddCycle(Vec<usize>),
    InternalEvenEdge { t: usize, t2: usize },
    TwoAttachments { t1: usize, r1: usize, t2: usize, r2: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicWitness {
    pub obstruction: Obstruction,
    pub path: ParityPath,
}

fn odd_adjacency(system: &CoxeterSystem) -> Vec<Vec<usize>> {
    let n = system.rank();
    (0..n).map(|i| (0..n).filter(|&j| j != i && system.label(i, j).is_odd()).collect()).collect()
}

/// A cycle of the odd-label graph, starting from its least vertex.
fn odd_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if *k == adj[v].len() {
                stack.pop();
                continue;
            }
            let u = adj[v][*k];
            *k += 1;
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                stack.push((u, 0));
            } else if u != parent[v] && depth[u] < depth[v] {
                let mut cyc = vec![v];
                let mut x = v;
                while x != u {
                    x = parent[x];
                    cyc.push(x);
                }
                cyc.reverse();
                let start = (0..cyc.len()).min_by_key(|&p| cyc[p]).unwrap();
                cyc.rotate_left(start);
                return Some(cyc);
            }
        }
    }
    None
}

/// Vertex path from `a` to `b` in the odd-label forest.
fn forest_path(adj: &[Vec<usize>], a: usize, b: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if prev[u] == usize::MAX {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

fn components(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if comp[u] == usize::MAX {
                    comp[u] = s;
                    stack.push(u);
                }
            }
        }
    }
    comp
}

/// There-and-back walk: along the odd path from t1 to t2, out along the even
/// edge {t2, r2}, back to t1, out along {t1, r1}.
fn there_and_back(adj: &[Vec<usize>], t1: usize, r1: usize, t2: usize, r2: usize) -> Vec<usize> {
    if t1 == t2 {
        return vec![t1, r1, t1, r2];
    }
    let q = forest_path(adj, t1, t2);
    let mut p = Vec::new();
    for w in q.windows(2) {
        p.extend_from_slice(&[w[0], w[1]]);
    }
    p.extend_from_slice(&[t2, r2]);
    for w in q.windows(2).rev() {
        p.extend_from_slice(&[w[1], w[0]]);
    }
    p.extend_from_slice(&[t1, r1]);
    p
}

/// Structural test: no cyclic parity path exists iff the odd-label graph is a
/// forest, no component carries an internal even edge, and every component
/// has at most one even edge leaving it. Returns a witness otherwise.
pub fn has_cyclic_parity_path(system: &CoxeterSystem) -> Option<CyclicWitness> {
    let n = system.rank();
    let adj = odd_adjacency(system);
    if let Some(cyc) = odd_cycle(&adj) {
        let mut p = Vec::new();
        for l in 0..cyc.len() {
            p.extend_from_slice(&[cyc[l], cyc[(l + 1) % cyc.len()]]);
        }
        return Some(CyclicWitness { obstruction: Obstruction::OddCycle(cyc), path: ParityPath(p) });
    }
    let comp = components(&adj);
    let mut roots: Vec<usize> = comp.clone();
    roots.sort_unstable();
    roots.dedup();
    for &c in &roots {
        let mut internal = None;
        let mut outgoing = Vec::new();
        for t in (0..n).filter(|&t| comp[t] == c) {
            for r in 0..n {
                if r == t || !system.label(t, r).is_even() {
                    continue;
                }
                if comp[r] == c {
                    if t < r && internal.is_none() {
                        internal = Some((t, r));
                    }
                } else {
                    outgoing.push((t, r));
                }
            }
        }
        if let Some((t, t2)) = internal {
            let p = there_and_back(&adj, t, t2, t2, t);
            return Some(CyclicWitness {
                obstruction: Obstruction::InternalEvenEdge { t, t2 },
                path: ParityPath(p),
            });
        }
        if outgoing.len() >= 2 {
            let (t1, r1) = outgoing[0];
            let (t2, r2) = outgoing[1];
            let p = there_and_back(&adj, t1, r1, t2, r2);
            return Some(CyclicWitness {
                obstruction: Obstruction::TwoAttachments { t1, r1, t2, r2 },
                path: ParityPath(p),
            });
        }
    }
    None
}

/// Pair states (j, i) and their parity-path successors. With `avoid_two`,
/// states and transitions touching a label 2 in the positions
/// m_{i_l,j_l}, m_{i_l,i_{l+1}}, m_{j_l,i_{l+1}} are dropped.
fn successors(system: &CoxeterSystem, j: usize, i: usize, avoid_two: bool) -> Vec<(usize, usize)> {
    let Some(nj) = next_j(system, j, i) else { return Vec::new() };
    let two = |a: usize, b: usize| system.label(a, b) == Label::Finite(2);
    (0..system.rank())
        .filter(|&ni| ni != i && ni != j && system.label(ni, nj).is_finite())
        .filter(|&ni| !avoid_two || !(two(ni, nj) || two(i, ni) || two(j, ni)))
        .map(|ni| (nj, ni))
        .collect()
}

/// A cyclic parity path found as a directed cycle of the pair-state graph.
pub fn find_cyclic_path(system: &CoxeterSystem, avoid_two: bool) -> Option<ParityPath> {
    let n = system.rank();
    let id = |j: usize, i: usize| j * n + i;
    let valid = |j: usize, i: usize| {
        i != j && system.label(i, j).is_finite() && !(avoid_two && system.label(i, j) == Label::Finite(2))
    };
    let mut color = vec![0u8; n * n];
    let mut on_stack: Vec<(usize, usize)> = Vec::new();
    for j0 in 0..n {
        for i0 in 0..n {
            if !valid(j0, i0) || color[id(j0, i0)] != 0 {
                continue;
            }
            let mut stack = vec![((j0, i0), successors(system, j0, i0, avoid_two), 0usize)];
            color[id(j0, i0)] = 1;
            on_stack.clear();
            on_stack.push((j0, i0));
            while let Some((state, succ, k)) = stack.last_mut() {
                if *k == succ.len() {
                    color[id(state.0, state.1)] = 2;
                    stack.pop();
                    on_stack.pop();
                    continue;
                }
                let nxt = succ[*k];
                *k += 1;
                match color[id(nxt.0, nxt.1)] {
                    0 => {
                        color[id(nxt.0, nxt.1)] = 1;
                        on_stack.push(nxt);
                        let s = successors(system, nxt.0, nxt.1, avoid_two);
                        stack.push((nxt, s, 0));
                    }
                    1 => {
                        let from = on_stack.iter().position(|&s| s == nxt).unwrap();
                        let p = on_stack[from..].iter().flat_map(|&(j, i)| [j, i]).collect();
                        return Some(ParityPath(p));
                    }
                    _ => {}
                }
            }
        }
    }
    None
}
