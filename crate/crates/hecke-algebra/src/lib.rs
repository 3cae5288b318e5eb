//! Hecke algebras C_q[W] on the T basis with exact coefficients.

mod surd;

use std::collections::BTreeMap;
use std::fmt;

use coxsp_core::{Ball, BallError, CoxeterSystem, GroupElement, GroupOps};
use coxsp_gamma::{gamma_table, GammaError};
use coxsp_length::{conjugacy_classes, LengthError, LengthSpec, Q};
use coxsp_spectral::{SpectralError, TruncatedOperator, MAX_DIM};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use surd::{squarefree_split, Surd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error(transparent)]
    Length(#[from] LengthError),
    #[error(transparent)]
    Ball(#[from] BallError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("{found} parameters given, system has rank {rank}")]
    RankMismatch { rank: usize, found: usize },
    #[error("parameter of generator {i} is not positive", i = i + 1)]
    NotPositive { i: usize },
    #[error("generators {i} and {j} are conjugate but have different parameters", i = i + 1, j = j + 1)]
    NotInvariant { i: usize, j: usize },
    #[error("square root of negative {0}")]
    NegativeRadicand(Q),
    #[error("radicand {0} too large")]
    RadicandTooLarge(Q),
}

/// Hecke tuple q with p_s = (q_s − 1)/√q_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeParams {
    q: Vec<Q>,
    p: Vec<Surd>,
    p_squared: Vec<Q>,
}

impl HeckeParams {
    pub fn new(system: &CoxeterSystem, q: Vec<Q>) -> Result<Self, HeckeError> {
        if q.len() != system.rank() {
            return Err(HeckeError::RankMismatch { rank: system.rank(), found: q.len() });
        }
        if let Some(i) = q.iter().position(|x| !x.is_positive()) {
            return Err(HeckeError::NotPositive { i });
        }
        for class in conjugacy_classes(system) {
            if let Some(&j) = class.iter().find(|&&j| q[j] != q[class[0]]) {
                return Err(HeckeError::NotInvariant { i: class[0], j });
            }
        }
        let mut p = Vec::new();
        let mut p_squared = Vec::new();
        for x in &q {
            let one = Q::one();
            p.push(Surd::sqrt(x)?.scale(&((x - &one) / x)));
            p_squared.push((x - &one) * (x - &one) / x);
        }
        Ok(HeckeParams { q, p, p_squared })
    }

    /// q ≡ 1, the group algebra.
    pub fn trivial(rank: usize) -> Self {
        HeckeParams { q: vec![Q::one(); rank], p: vec![Surd::zero(); rank], p_squared: vec![Q::zero(); rank] }
    }

    pub fn uniform(system: &CoxeterSystem, q: Q) -> Result<Self, HeckeError> {
        HeckeParams::new(system, vec![q; system.rank()])
    }

    pub fn q(&self, s: usize) -> &Q {
        &self.q[s]
    }

    pub fn p(&self, s: usize) -> &Surd {
        &self.p[s]
    }

    /// p_s², always rational.
    pub fn p_squared(&self, s: usize) -> &Q {
        &self.p_squared[s]
    }

    pub fn is_trivial(&self) -> bool {
        self.p.iter().all(Surd::is_zero)
    }
}

/// Searches g with |g| <= `max_len` and g·s·g⁻¹ = t.
pub fn conjugator(system: &CoxeterSystem, s: usize, t: usize, max_len: usize) -> Result<Option<GroupElement>, HeckeError> {
    let ball = Ball::new(system, max_len)?;
    let (se, te) = (GroupElement::generator(s), GroupElement::generator(t));
    let found = ball.elements().find(|g| system.multiply(&system.multiply(g, &se), &system.inverse(g)) == te);
    Ok(found)
}

/// Finite combination of basis elements T_x.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<GroupElement, Surd>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    /// T_x.
    pub fn basis(x: GroupElement) -> Self {
        let mut a = HeckeElement::zero();
        a.add_term(x, &Surd::one());
        a
    }

    pub fn add_term(&mut self, x: GroupElement, c: &Surd) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(x.clone()).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn coefficient(&self, x: &GroupElement) -> Surd {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &Surd)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.terms.keys().map(GroupElement::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Surd) -> Self {
        let mut out = HeckeElement::zero();
        for (x, a) in &self.terms {
            out.add_term(x.clone(), &(a * c));
        }
        out
    }

    pub fn add(&self, other: &HeckeElement) -> Self {
        let mut out = self.clone();
        for (x, a) in &other.terms {
            out.add_term(x.clone(), a);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> Self {
        self.add(&other.scale(&Surd::from_integer(-1)))
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})T[{x}]")?;
        }
        Ok(())
    }
}

/// T_s·b.
pub fn left_generator<G: GroupOps>(ops: &G, params: &HeckeParams, s: usize, b: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (y, c) in b.terms() {
        let sy = ops.mul_gen_left(s, y);
        let down = sy.len() < y.len();
        out.add_term(sy, c);
        if down {
            out.add_term(y.clone(), &(c * params.p(s)));
        }
    }
    out
}

/// Product in C_q[W]; T_x·b is computed by peeling the letters of x from the right.
pub fn hecke_multiply<G: GroupOps>(ops: &G, params: &HeckeParams, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (x, c) in a.terms() {
        let mut t = b.clone();
        for s in x.word().iter().rev() {
            t = left_generator(ops, params, *s as usize, &t);
        }
        out = out.add(&t.scale(c));
    }
    out
}

/// T_x ↦ T_{x⁻¹}; coefficients are real.
pub fn hecke_adjoint<G: GroupOps>(ops: &G, a: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (x, c) in a.terms() {
        out.add_term(ops.inverse(x), c);
    }
    out
}

/// τ(a), the coefficient of T_e.
pub fn hecke_trace(a: &HeckeElement) -> Surd {
    a.coefficient(&GroupElement::identity())
}

/// Δ_ψ(T_x) = ψ(x)·T_x.
pub fn hecke_laplacian(spec: &LengthSpec, a: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (x, c) in a.terms() {
        out.add_term(x.clone(), &c.scale(&spec.evaluate(x)));
    }
    out
}

/// Truncated matrix of left multiplication together with the columns whose
/// image leaves the ball.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeMatrix {
    pub op: TruncatedOperator,
    pub leaking: Vec<usize>,
}

fn assemble(
    ball: &Ball,
    n: usize,
    interior_radius: usize,
    mut column: impl FnMut(&GroupElement) -> HeckeElement,
) -> Result<HeckeMatrix, HeckeError> {
    if n > MAX_DIM {
        return Err(SpectralError::TooLarge { dim: n, cap: MAX_DIM }.into());
    }
    let mut op = TruncatedOperator::zeros((0..n).map(|x| ball.element(x)).collect(), interior_radius);
    let mut leaking = Vec::new();
    for j in 0..n {
        let image = column(&op.elements[j]);
        let mut leak = false;
        for (x, c) in image.terms() {
            match ball.index_of(x).filter(|&i| i < n) {
                Some(i) => op.matrix[(i, j)] = c.to_f64(),
                None => leak = true,
            }
        }
        if leak {
            leaking.push(j);
        }
    }
    Ok(HeckeMatrix { op, leaking })
}

pub fn hecke_operator_matrix(
    system: &CoxeterSystem,
    params: &HeckeParams,
    a: &HeckeElement,
    radius: usize,
    cap: usize,
) -> Result<HeckeMatrix, HeckeError> {
    let margin = a.max_length();
    let ball = Ball::with_cap(system, radius + margin, cap)?;
    let n = ball.shell(radius).end;
    assemble(&ball, n, radius.saturating_sub(margin), |x| {
        hecke_multiply(&ball, params, a, &HeckeElement::basis(x.clone()))
    })
}

fn check_generators(system: &CoxeterSystem, u: usize, w: usize) -> Result<(), HeckeError> {
    let rank = system.rank();
    if u >= rank || w >= rank {
        return Err(HeckeError::RankMismatch { rank, found: u.max(w) + 1 });
    }
    Ok(())
}

/// Ψ^{T_u,T_w}(T_v) = γ^ψ(v)·T_{uvw} + ½·γ^{ψ_S}(v)·(ψ(uv) − ψ(v))·p_w·T_{uv}.
pub fn psi_hecke<G: GroupOps>(
    ops: &G,
    params: &HeckeParams,
    spec: &LengthSpec,
    u: usize,
    w: usize,
    v: &GroupElement,
) -> Result<HeckeElement, HeckeError> {
    spec.validate(ops.system())?;
    check_generators(ops.system(), u, w)?;
    let uv = ops.mul_gen_left(u, v);
    let vw = ops.mul_gen_right(v, w);
    let uvw = ops.mul_gen_right(&uv, w);
    let psi = |x: &GroupElement| spec.evaluate(x);
    let len = |x: &GroupElement| x.len() as i64;
    let g = psi(&uvw) + psi(v) - psi(&uv) - psi(&vw);
    let gs = len(&uvw) + len(v) - len(&uv) - len(&vw);
    let mut out = HeckeElement::zero();
    out.add_term(uvw, &Surd::rational(g));
    let c = Q::new(gs.into(), 2.into()) * (psi(&uv) - psi(v));
    out.add_term(uv, &params.p(w).scale(&c));
    Ok(out)
}

/// Δ(T_uT_vT_w) + T_uΔ(T_v)T_w − Δ(T_uT_v)T_w − T_uΔ(T_vT_w).
pub fn psi_hecke_defining<G: GroupOps>(
    ops: &G,
    params: &HeckeParams,
    spec: &LengthSpec,
    u: usize,
    w: usize,
    v: &GroupElement,
) -> Result<HeckeElement, HeckeError> {
    spec.validate(ops.system())?;
    check_generators(ops.system(), u, w)?;
    let mul = |a: &HeckeElement, b: &HeckeElement| hecke_multiply(ops, params, a, b);
    let d = |a: &HeckeElement| hecke_laplacian(spec, a);
    let tu = HeckeElement::basis(GroupElement::generator(u));
    let tw = HeckeElement::basis(GroupElement::generator(w));
    let tv = HeckeElement::basis(v.clone());
    let tuv = mul(&tu, &tv);
    let tvw = mul(&tv, &tw);
    let tuvw = mul(&tuv, &tw);
    Ok(d(&tuvw).add(&mul(&mul(&tu, &d(&tv)), &tw)).sub(&mul(&d(&tuv), &tw)).sub(&mul(&tu, &d(&tvw))))
}

/// Matrix of Ψ^{T_u,T_w} on the ball of radius `radius`, interior radius `radius − 2`.
pub fn psi_hecke_matrix(
    system: &CoxeterSystem,
    params: &HeckeParams,
    spec: &LengthSpec,
    u: usize,
    w: usize,
    radius: usize,
    cap: usize,
) -> Result<HeckeMatrix, HeckeError> {
    spec.validate(system)?;
    check_generators(system, u, w)?;
    let ball = Ball::with_cap(system, radius + 2, cap)?;
    let n = ball.shell(radius).end;
    let mut err = None;
    let m = assemble(&ball, n, radius.saturating_sub(2), |v| {
        psi_hecke(&ball, params, spec, u, w, v).unwrap_or_else(|e| {
            err = Some(e);
            HeckeElement::zero()
        })
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeS2 {
    /// Σ_v |γ^ψ(v)|² + ¼|γ^{ψ_S}(v)|²·|ψ(uv) − ψ(v)|²·p_u².
    pub exact: Q,
    /// ‖γ^ψ‖₂² + ¼·ψ(u)²·p_u²·‖γ^{ψ_S}‖₂².
    pub bound: Q,
    pub support_complete: bool,
    /// Complete positivity of the semigroup is assumed, not verified.
    pub positivity_assumed: bool,
}

impl HeckeS2 {
    pub fn holds(&self) -> bool {
        self.exact <= self.bound
    }
}

pub fn hecke_s2_norm(
    system: &CoxeterSystem,
    params: &HeckeParams,
    spec: &LengthSpec,
    u: usize,
    w: usize,
    radius: usize,
    cap: usize,
) -> Result<HeckeS2, HeckeError> {
    check_generators(system, u, w)?;
    let (ue, we) = (GroupElement::generator(u), GroupElement::generator(w));
    let t = gamma_table(system, spec, &ue, &we, radius, cap)?;
    let ts = gamma_table(system, &LengthSpec::standard(system.rank()), &ue, &we, radius, cap)?;
    let quarter = Q::new(1.into(), 4.into());
    let pu2 = params.p_squared(u);
    let norm2 = |t: &coxsp_gamma::GammaTable| t.entries.values().fold(Q::zero(), |acc, x| acc + x * x);
    let mut exact = norm2(&t);
    for (v, gs) in &ts.entries {
        let diff = spec.evaluate(&system.mul_gen_left(u, v)) - spec.evaluate(v);
        exact += &quarter * gs * gs * &diff * &diff * pu2;
    }
    let psi_u = spec.weight(u);
    let bound = norm2(&t) + &quarter * psi_u * psi_u * pu2 * norm2(&ts);
    Ok(HeckeS2 {
        exact,
        bound,
        support_complete: t.support_complete && ts.support_complete,
        positivity_assumed: !params.is_trivial() && !system.is_right_angled(),
    })
}
