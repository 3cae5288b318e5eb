use coxsp_core::{CoxeterSystem, Label};

use crate::DiagramError;

fn commute(system: &CoxeterSystem, a: usize, b: usize) -> bool {
    a != b && system.label(a, b) == Label::Finite(2)
}

/// Least (r, s, t) with s < t, m_rs = m_rt = 2 and m_st = ∞.
pub fn commuting_triple(system: &CoxeterSystem) -> Option<(usize, usize, usize)> {
    let n = system.rank();
    for r in 0..n {
        for s in 0..n {
            for t in s + 1..n {
                if commute(system, r, s) && commute(system, r, t) && system.label(s, t) == Label::Infinite {
                    return Some((r, s, t));
                }
            }
        }
    }
    None
}

/// `Ok(None)` if hyperbolic, else the least (s, t, u, v) with
/// m_st = m_uv = ∞ and all four cross labels 2.
pub fn is_hyperbolic_right_angled(system: &CoxeterSystem) -> Result<Option<[usize; 4]>, DiagramError> {
    if !system.is_right_angled() {
        return Err(DiagramError::NotRightAngled);
    }
    let inf: Vec<(usize, usize)> =
        system.pairs().filter(|&(a, b)| system.label(a, b) == Label::Infinite).collect();
    for &(s, t) in &inf {
        for &(u, v) in &inf {
            let distinct = [u, v].iter().all(|x| *x != s && *x != t);
            if distinct && [(s, u), (s, v), (t, u), (t, v)].iter().all(|&(a, b)| commute(system, a, b)) {
                return Ok(Some([s, t, u, v]));
            }
        }
    }
    Ok(None)
}

/// Pairwise commuting generator subsets, including ∅, ordered by size then
/// lexicographically.
pub fn cliques(system: &CoxeterSystem, maximal_only: bool) -> Result<Vec<Vec<usize>>, DiagramError> {
    if !system.is_right_angled() {
        return Err(DiagramError::NotRightAngled);
    }
    let n = system.rank();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn grow(system: &CoxeterSystem, n: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for x in from..n {
            if cur.iter().all(|&y| commute(system, x, y)) {
                cur.push(x);
                grow(system, n, x + 1, cur, out);
                cur.pop();
            }
        }
    }
    grow(system, n, 0, &mut cur, &mut out);
    if maximal_only {
        out.retain(|c| (0..n).all(|x| c.contains(&x) || !c.iter().all(|&y| commute(system, x, y))));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterfaceSet {
    pub members: Vec<usize>,
    pub is_clique: bool,
}

/// {r : m_rs = m_rt = 2, m_st = ∞ for some s, t} and whether it pairwise commutes.
pub fn hecke_interface_set(system: &CoxeterSystem) -> InterfaceSet {
    let n = system.rank();
    let members: Vec<usize> = (0..n)
        .filter(|&r| {
            (0..n).any(|s| {
                (s + 1..n).any(|t| {
                    commute(system, r, s) && commute(system, r, t) && system.label(s, t) == Label::Infinite
                })
            })
        })
        .collect();
    let is_clique = members.iter().all(|&a| members.iter().all(|&b| a == b || commute(system, a, b)));
    InterfaceSet { members, is_clique }
}
