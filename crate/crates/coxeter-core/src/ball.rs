//! Cayley balls with right-multiplication tables.
//!
//! Shells are built one length at a time. For a candidate `x = w·s` with `s`
//! not a right descent of `w`, another generator `t` is a right descent of `x`
//! iff `w` ends in the alternating word `…s t` of length `m_{s,t} - 1`, which is
//! read off the down-edges already known. The parent of `x` in normal form is the
//! least `(x·t, t)` over its descents, so each element is emitted exactly once
//! and in ShortLex order.

use crate::element::GroupElement;
use crate::error::BallError;
use crate::reduce::GroupOps;
use crate::system::{CoxeterSystem, Label};

pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Ball {
    system: CoxeterSystem,
    radius: usize,
    parent: Vec<u32>,
    last: Vec<u8>,
    length: Vec<u16>,
    descents: Vec<u64>,
    right: Vec<u32>,
    inv: Vec<u32>,
    shell_start: Vec<usize>,
}

impl Ball {
    pub fn new(system: &CoxeterSystem, radius: usize) -> Result<Ball, BallError> {
        Ball::with_cap(system, radius, DEFAULT_MAX_ELEMENTS)
    }

    pub fn with_cap(system: &CoxeterSystem, radius: usize, cap: usize) -> Result<Ball, BallError> {
        let n = system.rank();
        let mut b = Ball {
            system: system.clone(),
            radius,
            parent: vec![NONE],
            last: vec![u8::MAX],
            length: vec![0],
            descents: vec![0],
            right: vec![NONE; n],
            inv: Vec::new(),
            shell_start: vec![0, 1],
        };
        if cap == 0 {
            return Err(BallError::CapExceeded { radius, cap });
        }
        let mut down: Vec<(u8, u32)> = Vec::new();
        for k in 0..radius {
            let (lo, hi) = (b.shell_start[k], b.shell_start[k + 1]);
            let mut created: Vec<(u32, u8, u64, Vec<(u8, u32)>)> = Vec::new();
            for w in lo..hi {
                for s in 0..n {
                    if b.descents[w] >> s & 1 == 1 {
                        continue;
                    }
                    down.clear();
                    down.push((s as u8, w as u32));
                    let mut mask = 1u64 << s;
                    for t in 0..n {
                        if t == s {
                            continue;
                        }
                        if let Some(xt) = b.dihedral_descent(w, s, t) {
                            mask |= 1 << t;
                            down.push((t as u8, xt));
                        }
                    }
                    let &(t0, p0) = down.iter().min_by_key(|&&(t, p)| (p, t)).unwrap();
                    if p0 as usize == w && t0 as usize == s {
                        created.push((w as u32, s as u8, mask, down.clone()));
                    }
                }
            }
            if created.is_empty() {
                break;
            }
            if b.parent.len() + created.len() > cap {
                return Err(BallError::CapExceeded { radius, cap });
            }
            for (p, s, mask, edges) in created {
                let x = b.parent.len() as u32;
                b.parent.push(p);
                b.last.push(s);
                b.length.push(k as u16 + 1);
                b.descents.push(mask);
                b.right.extend(std::iter::repeat(NONE).take(n));
                for (t, y) in edges {
                    b.right[x as usize * n + t as usize] = y;
                    b.right[y as usize * n + t as usize] = x;
                }
            }
            b.shell_start.push(b.parent.len());
        }
        while b.shell_start.len() < radius + 2 {
            let end = b.parent.len();
            b.shell_start.push(end);
        }
        b.inv = (0..b.len())
            .map(|x| {
                let w = b.word(x);
                b.walk(0, w.iter().rev().map(|&c| c as usize)).expect("inverse has the same length")
                    as u32
            })
            .collect();
        Ok(b)
    }

    /// If `t` is a right descent of `w·s` (with `s` ascending at `w`), the index
    /// of `w·s·t`.
    fn dihedral_descent(&self, w: usize, s: usize, t: usize) -> Option<u32> {
        let n = self.system.rank();
        let Label::Finite(m) = self.system.label(s, t) else { return None };
        let m = m as usize;
        let mut y = w;
        for i in 0..m - 1 {
            let l = if i % 2 == 0 { t } else { s };
            if self.descents[y] >> l & 1 == 0 {
                return None;
            }
            y = self.right[y * n + l] as usize;
        }
        // w·s = y·A with A alternating of length m ending in s; x·t = y·A'[..m-1].
        let first = if m % 2 == 0 { t } else { s };
        for j in 0..m - 1 {
            let a = if j % 2 == 0 { first } else { s + t - first };
            let swapped = s + t - a;
            y = self.right[y * n + swapped] as usize;
            debug_assert!(y != NONE as usize);
        }
        Some(y as u32)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether every element of the group lies in the ball.
    pub fn is_closed(&self) -> bool {
        self.shell_start[self.radius + 1] == self.shell_start[self.radius]
            || (0..self.system.rank()).all(|s| {
                (self.shell_start[self.radius]..self.len()).all(|x| self.descents[x] >> s & 1 == 1)
            })
    }

    /// Index range of elements of length `k`.
    pub fn shell(&self, k: usize) -> std::ops::Range<usize> {
        if k > self.radius {
            return self.len()..self.len();
        }
        self.shell_start[k]..self.shell_start[k + 1]
    }

    /// Normal-form parent and last letter, `None` for the identity.
    pub fn parent(&self, x: usize) -> Option<(usize, usize)> {
        (x != 0).then(|| (self.parent[x] as usize, self.last[x] as usize))
    }

    pub fn length(&self, x: usize) -> usize {
        self.length[x] as usize
    }

    /// Canonical word of element `x`.
    pub fn word(&self, x: usize) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.length(x));
        let mut y = x;
        while y != 0 {
            w.push(self.last[y]);
            y = self.parent[y] as usize;
        }
        w.reverse();
        w
    }

    pub fn element(&self, x: usize) -> GroupElement {
        GroupElement::from_canonical(self.word(x))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.len()).map(|x| self.element(x))
    }

    pub fn right_descents(&self, x: usize) -> u64 {
        self.descents[x]
    }

    pub fn left_descents(&self, x: usize) -> u64 {
        self.descents[self.inv[x] as usize]
    }

    pub fn right_mul(&self, x: usize, s: usize) -> Option<usize> {
        let y = self.right[x * self.system.rank() + s];
        (y != NONE).then_some(y as usize)
    }

    pub fn left_mul(&self, s: usize, x: usize) -> Option<usize> {
        self.right_mul(self.inv[x] as usize, s).map(|y| self.inv[y] as usize)
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// Follows right multiplications by `letters` from `x`.
    pub fn walk(&self, x: usize, letters: impl IntoIterator<Item = usize>) -> Option<usize> {
        letters.into_iter().try_fold(x, |y, s| self.right_mul(y, s))
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        if g.len() > self.radius {
            return None;
        }
        self.walk(0, g.letters())
    }

    /// `a·b`, if every prefix product stays inside the ball.
    pub fn mul(&self, a: usize, b: usize) -> Option<usize> {
        self.walk(a, self.word(b).into_iter().map(|c| c as usize))
    }

    /// `g·x` for an element `g` given by its word.
    pub fn left_mul_elem(&self, g: &GroupElement, x: usize) -> Option<usize> {
        g.word().iter().rev().try_fold(x, |y, &s| self.left_mul(s as usize, y))
    }

    /// `x·g` for an element `g` given by its word.
    pub fn right_mul_elem(&self, x: usize, g: &GroupElement) -> Option<usize> {
        self.walk(x, g.letters())
    }

    /// Number of elements of each length 0..=radius.
    pub fn growth(&self) -> Vec<usize> {
        (0..=self.radius).map(|k| self.shell(k).len()).collect()
    }
}

/// Group arithmetic through the tables, falling back to rewriting outside the ball.
impl GroupOps for Ball {
    fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    fn mul_gen_right(&self, x: &GroupElement, s: usize) -> GroupElement {
        match self.index_of(x).and_then(|i| self.right_mul(i, s)) {
            Some(y) => self.element(y),
            None => self.system.mul_gen_right(x, s),
        }
    }

    fn mul_gen_left(&self, s: usize, x: &GroupElement) -> GroupElement {
        match self.index_of(x).and_then(|i| self.left_mul(s, i)) {
            Some(y) => self.element(y),
            None => self.system.mul_gen_left(s, x),
        }
    }
}

/// All elements of length at most `radius`, ordered by length then ShortLex.
pub fn ball_enumerate(
    system: &CoxeterSystem,
    radius: usize,
    cap: usize,
) -> Result<Vec<GroupElement>, BallError> {
    Ok(Ball::with_cap(system, radius, cap)?.elements().collect())
}
