//! Coxeter systems, canonical normal forms, group arithmetic and Cayley balls.

mod ball;
mod element;
mod error;
mod parse;
mod reduce;
mod system;

pub use ball::{ball_enumerate, Ball, DEFAULT_MAX_ELEMENTS};
pub use element::GroupElement;
pub use error::{BallError, ParseError, SystemError, WordError};
pub use parse::{parse_system, to_coxdef, ParsedSystem};
pub use reduce::{braid_closure, inverse, m_reduce, multiply, reduced_words, GroupOps};
pub use system::{CoxeterSystem, Label, MAX_RANK};

/// Bitmask of a generator subset.
pub fn mask_of(gens: &[usize]) -> u64 {
    gens.iter().fold(0, |m, &i| m | 1 << i)
}

/// Members of a generator bitmask, increasing.
pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
