//! Exact sums Σ c_r·√r with rational c_r and squarefree radicands r.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use coxsp_length::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::HeckeError;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surd {
    terms: BTreeMap<u128, Q>,
}

/// Writes n = k²·r with r squarefree.
pub fn squarefree_split(mut n: u128) -> (u128, u128) {
    let (mut k, mut r) = (1u128, 1u128);
    let mut p = 2u128;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (k, r * n)
}

impl Surd {
    pub fn zero() -> Self {
        Surd::default()
    }

    pub fn one() -> Self {
        Surd::rational(Q::one())
    }

    pub fn rational(c: Q) -> Self {
        let mut s = Surd::zero();
        s.add_term(1, c);
        s
    }

    pub fn from_integer(n: i64) -> Self {
        Surd::rational(Q::from_integer(n.into()))
    }

    /// √q for a nonnegative rational q.
    pub fn sqrt(q: &Q) -> Result<Self, HeckeError> {
        if q.is_negative() {
            return Err(HeckeError::NegativeRadicand(q.clone()));
        }
        if q.is_zero() {
            return Ok(Surd::zero());
        }
        let nd = (q.numer() * q.denom()).to_u128().ok_or_else(|| HeckeError::RadicandTooLarge(q.clone()))?;
        let (k, r) = squarefree_split(nd);
        let c = Q::new(BigInt::from(k), q.denom().clone());
        let mut s = Surd::zero();
        s.add_term(r, c);
        Ok(s)
    }

    fn add_term(&mut self, r: u128, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(r).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, if no radical survives.
    pub fn as_rational(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// `(radicand, coefficient)` pairs by increasing radicand.
    pub fn terms(&self) -> impl Iterator<Item = (u128, &Q)> {
        self.terms.iter().map(|(r, c)| (*r, c))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(r, c)| c.to_f64().unwrap_or(f64::NAN) * (*r as f64).sqrt()).sum()
    }

    pub fn scale(&self, c: &Q) -> Surd {
        let mut s = Surd::zero();
        for (r, x) in &self.terms {
            s.add_term(*r, x * c);
        }
        s
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, other: &Surd) -> Surd {
        let mut s = self.clone();
        for (r, c) in &other.terms {
            s.add_term(*r, c.clone());
        }
        s
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, other: &Surd) -> Surd {
        self + &(-other)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { terms: self.terms.iter().map(|(r, c)| (*r, -c)).collect() }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, other: &Surd) -> Surd {
        let mut s = Surd::zero();
        for (r, a) in &self.terms {
            for (t, b) in &other.terms {
                let g = r.gcd(t);
                let rad = (r / g).checked_mul(t / g).expect("radicand overflow");
                s.add_term(rad, a * b * Q::from_integer(BigInt::from(g)));
            }
        }
        s
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (r, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match *r {
                1 => write!(f, "{c}")?,
                _ => write!(f, "{c}*sqrt({r})")?,
            }
        }
        Ok(())
    }
}
