//! Weighted word lengths ψ_x, indicator lengths ψ_I and finite parabolic
//! subgroups.

mod finite;

use std::fmt;
use std::str::FromStr;

use coxsp_core::{CoxeterSystem, GroupElement, Label};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use finite::{classify_parabolic, is_finite_parabolic, ComponentKind, FiniteType, ParabolicClass};

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LengthError {
    #[error("spec has {found} weights, system has rank {rank}")]
    RankMismatch { rank: usize, found: usize },
    #[error("weight of generator {i} is negative", i = i + 1)]
    Negative { i: usize },
    #[error("weights of generators {i} and {j} differ inside one odd component", i = i + 1, j = j + 1)]
    Mismatch { i: usize, j: usize },
    #[error("generator subset splits the odd component containing {i}", i = i + 1)]
    SplitsComponent { i: usize },
    #[error("bad weight `{0}`")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecKind {
    Standard,
    Weighted,
    Indicator(Vec<usize>),
}

/// A length function given by per-generator weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSpec {
    weights: Vec<Q>,
    kind: SpecKind,
}

impl LengthSpec {
    /// ψ_S, the word length.
    pub fn standard(rank: usize) -> Self {
        LengthSpec { weights: vec![Q::one(); rank], kind: SpecKind::Standard }
    }

    pub fn weighted(weights: Vec<Q>) -> Self {
        LengthSpec { weights, kind: SpecKind::Weighted }
    }

    pub fn from_integers(weights: &[i64]) -> Self {
        LengthSpec::weighted(weights.iter().map(|&w| Q::from_integer(w.into())).collect())
    }

    /// ψ_I: counts letters in `set`.
    pub fn indicator(rank: usize, set: &[usize]) -> Self {
        let mut weights = vec![Q::zero(); rank];
        for &i in set {
            weights[i] = Q::one();
        }
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        LengthSpec { weights, kind: SpecKind::Indicator(set) }
    }

    pub fn kind(&self) -> &SpecKind {
        &self.kind
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Q {
        &self.weights[i]
    }

    pub fn max_weight(&self) -> Q {
        self.weights.iter().cloned().max().unwrap_or_else(Q::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }

    /// Generators with positive weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| self.weights[i].is_positive()).collect()
    }

    pub fn validate(&self, system: &CoxeterSystem) -> Result<(), LengthError> {
        if self.weights.len() != system.rank() {
            return Err(LengthError::RankMismatch { rank: system.rank(), found: self.weights.len() });
        }
        if let Some(i) = self.weights.iter().position(|w| w.is_negative()) {
            return Err(LengthError::Negative { i });
        }
        for comp in odd_components(system) {
            let i = comp[0];
            if let Some(&j) = comp.iter().find(|&&j| self.weights[j] != self.weights[i]) {
                return Err(LengthError::Mismatch { i, j });
            }
        }
        Ok(())
    }

    pub fn evaluate_word(&self, word: &[u8]) -> Q {
        word.iter().fold(Q::zero(), |acc, &c| acc + &self.weights[c as usize])
    }

    /// ψ(w) for a canonical element.
    pub fn evaluate(&self, w: &GroupElement) -> Q {
        self.evaluate_word(w.word())
    }
}

impl fmt::Display for LengthSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        f.write_str(&ws.join(","))
    }
}

/// Validated ψ evaluation.
pub fn evaluate(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    w: &GroupElement,
) -> Result<Q, LengthError> {
    spec.validate(system)?;
    Ok(spec.evaluate(w))
}

/// Parses one nonnegative rational such as `3`, `1/2` or `0.25`.
pub fn parse_rational(s: &str) -> Result<Q, LengthError> {
    let bad = || LengthError::Parse(s.to_string());
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((i, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n = BigInt::from_str(&format!("{i}{frac}")).map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Q::new(n, d));
    }
    Ok(Q::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
}

/// Comma-separated rationals, e.g. `1,0,1/2`.
pub fn parse_weights(s: &str) -> Result<Vec<Q>, LengthError> {
    s.split(',').map(parse_rational).collect()
}

/// Connected components of the graph with edges 3 <= m_{i,j} < ∞, each sorted,
/// ordered by least member.
pub fn odd_components(system: &CoxeterSystem) -> Vec<Vec<usize>> {
    components(system, |l| matches!(l, Label::Finite(m) if m >= 3))
}

/// Components of the odd-label graph; generators in one class are conjugate.
pub fn conjugacy_classes(system: &CoxeterSystem) -> Vec<Vec<usize>> {
    components(system, Label::is_odd)
}

fn components(system: &CoxeterSystem, edge: impl Fn(Label) -> bool) -> Vec<Vec<usize>> {
    let n = system.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && !seen[j] && edge(system.label(i, j)) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Result of the properness test for ψ_I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Properness {
    pub proper: bool,
    /// S∖I.
    pub complement: Vec<usize>,
    pub class: ParabolicClass,
}

/// ψ_I is proper iff S∖I generates a finite subgroup.
pub fn is_proper_indicator(system: &CoxeterSystem, set: &[usize]) -> Result<Properness, LengthError> {
    let inside = |i: usize| set.contains(&i);
    for comp in odd_components(system) {
        let k = comp.iter().filter(|&&i| inside(i)).count();
        if k != 0 && k != comp.len() {
            return Err(LengthError::SplitsComponent { i: comp[0] });
        }
    }
    let complement: Vec<usize> = (0..system.rank()).filter(|&i| !inside(i)).collect();
    let class = classify_parabolic(system, &complement);
    Ok(Properness { proper: class.is_finite(), complement, class })
}
