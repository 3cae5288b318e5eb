//! Word problem by M-operations.
//!
//! Reduced words of an element form one class under braid moves. A word is
//! normalized letter by letter: the class of the current prefix is closed under
//! braid moves, and the next letter either cancels against some member ending in
//! it or extends the prefix.

use std::collections::{HashSet, VecDeque};

use crate::element::GroupElement;
use crate::error::WordError;
use crate::system::{CoxeterSystem, Label};

/// Words obtained from `w` by one braid move.
fn braid_neighbors(system: &CoxeterSystem, w: &[u8], out: &mut Vec<Vec<u8>>) {
    let n = w.len();
    for p in 0..n.saturating_sub(1) {
        let (a, b) = (w[p], w[p + 1]);
        if a == b {
            continue;
        }
        let Label::Finite(m) = system.label(a as usize, b as usize) else { continue };
        let m = m as usize;
        if p + m > n {
            continue;
        }
        if !(0..m).all(|k| w[p + k] == if k % 2 == 0 { a } else { b }) {
            continue;
        }
        let mut v = w.to_vec();
        for k in 0..m {
            v[p + k] = if k % 2 == 0 { b } else { a };
        }
        out.push(v);
    }
}

/// All words reachable from `w` by braid moves. For a reduced `w` this is the
/// set of reduced expressions of the element.
pub fn braid_closure(system: &CoxeterSystem, w: &[u8]) -> HashSet<Vec<u8>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    let mut buf = Vec::new();
    while let Some(cur) = queue.pop_front() {
        buf.clear();
        braid_neighbors(system, &cur, &mut buf);
        for v in buf.drain(..) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// All reduced expressions of an element.
pub fn reduced_words(system: &CoxeterSystem, x: &GroupElement) -> Vec<Vec<u8>> {
    let mut v: Vec<_> = braid_closure(system, x.word()).into_iter().collect();
    v.sort();
    v
}

/// Normal form of `w·s` for a reduced word `w`.
fn append(system: &CoxeterSystem, w: &[u8], s: u8) -> Vec<u8> {
    let class = braid_closure(system, w);
    let shorter = class.iter().filter(|y| y.last() == Some(&s)).map(|y| &y[..y.len() - 1]).min();
    if let Some(y) = shorter {
        return y.to_vec();
    }
    let mut ws = w.to_vec();
    ws.push(s);
    braid_closure(system, &ws).into_iter().min().expect("closure contains its seed")
}

/// Normal form of `s·w` for a reduced word `w`.
fn prepend(system: &CoxeterSystem, s: u8, w: &[u8]) -> Vec<u8> {
    let class = braid_closure(system, w);
    let shorter = class.iter().filter(|y| y.first() == Some(&s)).map(|y| &y[1..]).min();
    if let Some(y) = shorter {
        return y.to_vec();
    }
    let mut sw = Vec::with_capacity(w.len() + 1);
    sw.push(s);
    sw.extend_from_slice(w);
    braid_closure(system, &sw).into_iter().min().expect("closure contains its seed")
}

fn check(system: &CoxeterSystem, word: &[usize]) -> Result<(), WordError> {
    match word.iter().find(|&&i| i >= system.rank()) {
        Some(&index) => Err(WordError::OutOfRange { index, rank: system.rank() }),
        None => Ok(()),
    }
}

/// Canonical normal form of the element spelled by `word` (0-based letters).
pub fn m_reduce(system: &CoxeterSystem, word: &[usize]) -> Result<GroupElement, WordError> {
    check(system, word)?;
    let mut cur: Vec<u8> = Vec::new();
    for &s in word {
        cur = append(system, &cur, s as u8);
    }
    Ok(GroupElement::from_canonical(cur))
}

pub fn multiply(system: &CoxeterSystem, a: &GroupElement, b: &GroupElement) -> GroupElement {
    let mut cur = a.word().to_vec();
    for &s in b.word() {
        cur = append(system, &cur, s);
    }
    GroupElement::from_canonical(cur)
}

pub fn inverse(system: &CoxeterSystem, a: &GroupElement) -> GroupElement {
    let rev: Vec<u8> = a.word().iter().rev().copied().collect();
    let nf = braid_closure(system, &rev).into_iter().min().expect("closure contains its seed");
    GroupElement::from_canonical(nf)
}

/// Group arithmetic with generators on either side.
pub trait GroupOps {
    fn system(&self) -> &CoxeterSystem;

    fn mul_gen_right(&self, x: &GroupElement, s: usize) -> GroupElement;

    fn mul_gen_left(&self, s: usize, x: &GroupElement) -> GroupElement;

    fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        b.letters().fold(a.clone(), |acc, s| self.mul_gen_right(&acc, s))
    }

    fn inverse(&self, a: &GroupElement) -> GroupElement {
        a.letters().fold(GroupElement::identity(), |acc, s| self.mul_gen_left(s, &acc))
    }

    /// Evaluates an arbitrary word.
    fn element(&self, word: &[usize]) -> GroupElement {
        word.iter().fold(GroupElement::identity(), |acc, &s| self.mul_gen_right(&acc, s))
    }
}

impl GroupOps for CoxeterSystem {
    fn system(&self) -> &CoxeterSystem {
        self
    }

    fn mul_gen_right(&self, x: &GroupElement, s: usize) -> GroupElement {
        GroupElement::from_canonical(append(self, x.word(), s as u8))
    }

    fn mul_gen_left(&self, s: usize, x: &GroupElement) -> GroupElement {
        GroupElement::from_canonical(prepend(self, s as u8, x.word()))
    }

    fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        multiply(self, a, b)
    }

    fn inverse(&self, a: &GroupElement) -> GroupElement {
        inverse(self, a)
    }
}
