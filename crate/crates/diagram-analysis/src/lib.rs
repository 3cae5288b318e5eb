//! Labeled-diagram combinatorics of Coxeter systems.

mod dot;
mod parity;
mod right_angled;

use std::fmt;

use coxsp_core::CoxeterSystem;
use thiserror::Error;

pub use dot::to_dot;
pub use parity::{
    block, check_parity_path, find_cyclic_path, has_cyclic_parity_path, is_cyclic_parity_path, is_parity_path,
    next_j, Block, CyclicWitness, Obstruction, ParityPath, ParityViolation, Violation,
};
pub use right_angled::{
    cliques, commuting_triple, hecke_interface_set, is_hyperbolic_right_angled, InterfaceSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parity path must have even length, got {0}")]
    OddLength(usize),
    #[error("system is not right-angled")]
    NotRightAngled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "Yes",
            Verdict::No => "No",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Certificate behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Right-angled, no r with m_rs = m_rt = 2 and m_st = ∞.
    NoCommutingTriple,
    /// Right-angled triple (r; s, t).
    CommutingTriple { r: usize, s: usize, t: usize },
    /// Forest and attachment conditions hold.
    NoCyclicParityPath,
    /// Cyclic parity path with all relevant labels different from 2.
    CyclicAvoidingTwo(ParityPath),
    /// Every cyclic parity path meets a label 2; `path` is one of them.
    CyclicOnlyThroughTwo(ParityPath),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub reason: Reason,
    pub rationale: String,
}

fn gen(i: usize) -> String {
    format!("s{}", i + 1)
}

/// Gradient-S_p verdict for the word-length semigroup, uniform in p.
pub fn decide_gradient_sp(system: &CoxeterSystem) -> Decision {
    if system.is_right_angled() {
        return match commuting_triple(system) {
            None => Decision {
                verdict: Verdict::Yes,
                reason: Reason::NoCommutingTriple,
                rationale: "right-angled; no generator commutes with two generators that generate an infinite dihedral group".into(),
            },
            Some((r, s, t)) => Decision {
                verdict: Verdict::No,
                reason: Reason::CommutingTriple { r, s, t },
                rationale: format!(
                    "right-angled; {} commutes with {} and {} while m({},{}) = inf; gamma does not vanish on ({}{})^n",
                    gen(r), gen(s), gen(t), gen(s), gen(t), gen(s), gen(t)
                ),
            },
        };
    }
    let Some(w) = has_cyclic_parity_path(system) else {
        return Decision {
            verdict: Verdict::Yes,
            reason: Reason::NoCyclicParityPath,
            rationale: "no cyclic parity path: odd-label graph is a forest, each component has at most one even edge attached and none inside".into(),
        };
    };
    if let Some(p) = find_cyclic_path(system, true) {
        return Decision {
            verdict: Verdict::No,
            rationale: format!("cyclic parity path {p} avoids the label 2"),
            reason: Reason::CyclicAvoidingTwo(p),
        };
    }
    Decision {
        verdict: Verdict::Unknown,
        rationale: format!(
            "cyclic parity path {} exists but every cyclic parity path meets a label 2",
            w.path
        ),
        reason: Reason::CyclicOnlyThroughTwo(w.path),
    }
}

/// Smallness at infinity of the Coxeter compactification. Same verdict as
/// `decide_gradient_sp`.
pub fn is_small_at_infinity(system: &CoxeterSystem) -> Decision {
    let mut d = decide_gradient_sp(system);
    let intertwiner = match d.verdict {
        Verdict::Yes => "every set {v : uv = vw} with u, w generators is finite",
        Verdict::No => "some set {v : uv = vw} with u, w generators is infinite",
        Verdict::Unknown => "finiteness of the sets {v : uv = vw} is undecided",
    };
    d.rationale = format!("{}; {}", d.rationale, intertwiner);
    d
}
