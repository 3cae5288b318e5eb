//! Recognition of finite standard parabolic subgroups by the catalogue of
//! irreducible finite Coxeter groups.

use std::fmt;

use coxsp_core::{CoxeterSystem, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl FiniteType {
    /// Group order, `None` on overflow.
    pub fn order(self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k));
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => fact(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            FiniteType::D(n) => fact(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            FiniteType::E6 => Some(51_840),
            FiniteType::E7 => Some(2_903_040),
            FiniteType::E8 => Some(696_729_600),
            FiniteType::F4 => Some(1_152),
            FiniteType::H3 => Some(120),
            FiniteType::H4 => Some(14_400),
            FiniteType::I2(m) => Some(2 * m as u128),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => write!(f, "E6"),
            FiniteType::E7 => write!(f, "E7"),
            FiniteType::E8 => write!(f, "E8"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H3 => write!(f, "H3"),
            FiniteType::H4 => write!(f, "H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Finite(FiniteType),
    Infinite,
}

/// Irreducible components of a parabolic subsystem with their types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicClass {
    pub components: Vec<(Vec<usize>, ComponentKind)>,
}

impl ParabolicClass {
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|(_, k)| matches!(k, ComponentKind::Finite(_)))
    }

    /// Order of the subgroup if finite and representable.
    pub fn order(&self) -> Option<u128> {
        self.components.iter().try_fold(1u128, |acc, (_, k)| match k {
            ComponentKind::Finite(t) => acc.checked_mul(t.order()?),
            ComponentKind::Infinite => None,
        })
    }
}

impl fmt::Display for ParabolicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(g, k)| {
                let gens: Vec<String> = g.iter().map(|i| format!("s{}", i + 1)).collect();
                let kind = match k {
                    ComponentKind::Finite(t) => t.to_string(),
                    ComponentKind::Infinite => "infinite".into(),
                };
                format!("{kind}{{{}}}", gens.join(","))
            })
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

pub fn is_finite_parabolic(system: &CoxeterSystem, gens: &[usize]) -> bool {
    classify_parabolic(system, gens).is_finite()
}

pub fn classify_parabolic(system: &CoxeterSystem, gens: &[usize]) -> ParabolicClass {
    let mut gens = gens.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let adjacent = |a: usize, b: usize| a != b && system.label(a, b) != Label::Finite(2);
    let mut seen = vec![false; gens.len()];
    let mut components = Vec::new();
    for start in 0..gens.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![gens[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..gens.len() {
                if !seen[j] && adjacent(gens[i], gens[j]) {
                    seen[j] = true;
                    comp.push(gens[j]);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        let kind = classify_irreducible(system, &comp);
        components.push((comp, kind));
    }
    ParabolicClass { components }
}

fn classify_irreducible(system: &CoxeterSystem, comp: &[usize]) -> ComponentKind {
    use ComponentKind::Infinite;
    let n = comp.len();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            match system.label(comp[a], comp[b]) {
                Label::Finite(2) => {}
                Label::Finite(m) => edges.push((a, b, m)),
                Label::Infinite => return Infinite,
            }
        }
    }
    if n == 1 {
        return ComponentKind::Finite(FiniteType::A(1));
    }
    if n == 2 {
        return ComponentKind::Finite(FiniteType::I2(edges[0].2));
    }
    // Connected with n-1 edges means a tree; more means a cycle.
    if edges.len() != n - 1 || edges.iter().any(|e| e.2 > 5) {
        return Infinite;
    }
    let special: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    let mut deg = vec![0usize; n];
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b, _) in &edges {
        deg[a] += 1;
        deg[b] += 1;
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    match special.len() {
        0 => {
            if max_deg <= 2 {
                return ComponentKind::Finite(FiniteType::A(n));
            }
            let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
            if branch.len() != 1 || max_deg != 3 {
                return Infinite;
            }
            let c = branch[0];
            let mut arms: Vec<usize> = nbrs[c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (c, start, 1);
                    while let Some(&next) = nbrs[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => ComponentKind::Finite(FiniteType::D(n)),
                (1, 2, 2) => ComponentKind::Finite(FiniteType::E6),
                (1, 2, 3) => ComponentKind::Finite(FiniteType::E7),
                (1, 2, 4) => ComponentKind::Finite(FiniteType::E8),
                _ => Infinite,
            }
        }
        1 => {
            if max_deg > 2 {
                return Infinite;
            }
            let &&(a, b, m) = special.first().unwrap();
            let at_end = deg[a] == 1 || deg[b] == 1;
            match (m, at_end, n) {
                (4, true, _) => ComponentKind::Finite(FiniteType::B(n)),
                (4, false, 4) => ComponentKind::Finite(FiniteType::F4),
                (5, true, 3) => ComponentKind::Finite(FiniteType::H3),
                (5, true, 4) => ComponentKind::Finite(FiniteType::H4),
                _ => Infinite,
            }
        }
        _ => Infinite,
    }
}
