//! γ^ψ_{u,w}(v) = ψ(uvw) + ψ(v) − ψ(uv) − ψ(vw) on Cayley balls.

use std::collections::BTreeMap;

use coxsp_core::{Ball, BallError, CoxeterSystem, GroupElement, GroupOps};
use coxsp_diagram::{cliques, DiagramError};
use coxsp_length::{LengthError, LengthSpec, Q};
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error(transparent)]
    Length(#[from] LengthError),
    #[error(transparent)]
    Ball(#[from] BallError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("ball of radius {have} is too small, need {need}")]
    RadiusTooSmall { have: usize, need: usize },
}

/// Exact value of γ at one element.
pub fn gamma<G: GroupOps>(
    ops: &G,
    spec: &LengthSpec,
    u: &GroupElement,
    w: &GroupElement,
    v: &GroupElement,
) -> Result<Q, GammaError> {
    spec.validate(ops.system())?;
    let uv = ops.multiply(u, v);
    let vw = ops.multiply(v, w);
    let uvw = ops.multiply(&uv, w);
    Ok(spec.evaluate(&uvw) + spec.evaluate(v) - spec.evaluate(&uv) - spec.evaluate(&vw))
}

/// ψ at every ball index.
pub fn psi_values(ball: &Ball, spec: &LengthSpec) -> Vec<Q> {
    let mut out: Vec<Q> = Vec::with_capacity(ball.len());
    for x in 0..ball.len() {
        let v = match ball.parent(x) {
            None => Q::zero(),
            Some((p, s)) => &out[p] + spec.weight(s),
        };
        out.push(v);
    }
    out
}

/// Indices of u·v, v·w and u·v·w.
pub fn products(ball: &Ball, u: &GroupElement, w: &GroupElement, v: usize) -> Option<(usize, usize, usize)> {
    let uv = ball.left_mul_elem(u, v)?;
    let vw = ball.right_mul_elem(v, w)?;
    let uvw = ball.right_mul_elem(uv, w)?;
    Some((uv, vw, uvw))
}

/// Sparse γ values on the ball of radius `radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    pub u: GroupElement,
    pub w: GroupElement,
    pub radius: usize,
    pub entries: BTreeMap<GroupElement, Q>,
    /// No support element lies in the outermost shell.
    pub support_complete: bool,
}

impl GammaTable {
    fn new(u: &GroupElement, w: &GroupElement, radius: usize, entries: BTreeMap<GroupElement, Q>) -> Self {
        let support_complete = entries.keys().all(|k| k.len() < radius);
        GammaTable { u: u.clone(), w: w.clone(), radius, entries, support_complete }
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.entries.keys().cloned().collect()
    }

    pub fn get(&self, v: &GroupElement) -> Q {
        self.entries.get(v).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `<word> <num>/<den>` lines in ShortLex order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            s.push_str(&format!("{} {}/{}\n", k, v.numer(), v.denom()));
        }
        s
    }
}

fn need(ball: &Ball, want: usize) -> Result<(), GammaError> {
    if ball.radius() < want {
        return Err(GammaError::RadiusTooSmall { have: ball.radius(), need: want });
    }
    Ok(())
}

/// γ table over a prebuilt ball of radius at least `radius + |u| + |w|`.
pub fn gamma_table_in(
    ball: &Ball,
    spec: &LengthSpec,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
) -> Result<GammaTable, GammaError> {
    spec.validate(ball.system())?;
    need(ball, radius + u.len() + w.len())?;
    let psi = psi_values(ball, spec);
    Ok(table_from_psi(ball, &psi, u, w, radius))
}

fn table_from_psi(ball: &Ball, psi: &[Q], u: &GroupElement, w: &GroupElement, radius: usize) -> GammaTable {
    let mut entries = BTreeMap::new();
    for v in 0..ball.shell(radius).end {
        let (uv, vw, uvw) = products(ball, u, w, v).expect("ball covers the products");
        let g = &psi[uvw] + &psi[v] - &psi[uv] - &psi[vw];
        if !g.is_zero() {
            entries.insert(ball.element(v), g);
        }
    }
    GammaTable::new(u, w, radius, entries)
}

pub fn gamma_table(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
    cap: usize,
) -> Result<GammaTable, GammaError> {
    spec.validate(system)?;
    let ball = Ball::with_cap(system, radius + u.len() + w.len(), cap)?;
    gamma_table_in(&ball, spec, u, w, radius)
}

/// Indices v with |v| <= radius and u·v = v·w; the ball needs radius + max(|u|,|w|).
pub fn intertwiner_indices(
    ball: &Ball,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
) -> Result<Vec<usize>, GammaError> {
    need(ball, radius + u.len().max(w.len()))?;
    Ok((0..ball.shell(radius).end)
        .filter(|&v| ball.left_mul_elem(u, v) == ball.right_mul_elem(v, w))
        .collect())
}

pub fn intertwiner_set(
    system: &CoxeterSystem,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
    cap: usize,
) -> Result<Vec<GroupElement>, GammaError> {
    let ball = Ball::with_cap(system, radius + u.len().max(w.len()), cap)?;
    Ok(intertwiner_indices(&ball, u, w, radius)?.into_iter().map(|v| ball.element(v)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftingReport {
    pub checked: usize,
    pub support: usize,
    pub intertwiners: usize,
    pub counterexamples: Vec<GroupElement>,
}

impl ShiftingReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks |γ(v)| = 2ψ(u)·1(uv = vw) = 2ψ(w)·1(uv = vw) for generators u, w.
pub fn check_shifting_identity(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    u: usize,
    w: usize,
    radius: usize,
    cap: usize,
) -> Result<ShiftingReport, GammaError> {
    spec.validate(system)?;
    let (ue, we) = (GroupElement::generator(u), GroupElement::generator(w));
    let ball = Ball::with_cap(system, radius + 2, cap)?;
    let psi = psi_values(&ball, spec);
    let two = Q::from_integer(2.into());
    let mut report = ShiftingReport { checked: 0, support: 0, intertwiners: 0, counterexamples: Vec::new() };
    for v in 0..ball.shell(radius).end {
        let (uv, vw, uvw) = products(&ball, &ue, &we, v).expect("ball covers the products");
        let g = &psi[uvw] + &psi[v] - &psi[uv] - &psi[vw];
        let inter = uv == vw;
        let expect_u = if inter { &two * spec.weight(u) } else { Q::zero() };
        let expect_w = if inter { &two * spec.weight(w) } else { Q::zero() };
        report.checked += 1;
        report.support += usize::from(!g.is_zero());
        report.intertwiners += usize::from(inter);
        if g.abs() != expect_u || g.abs() != expect_w {
            report.counterexamples.push(ball.element(v));
        }
    }
    Ok(report)
}

/// ℓ_p norm of the table values; `p = f64::INFINITY` gives the sup norm.
pub fn gamma_lp_norm(table: &GammaTable, p: f64) -> f64 {
    lp_norm(table.entries.values(), p)
}

pub fn lp_norm<'a>(values: impl Iterator<Item = &'a Q>, p: f64) -> f64 {
    let abs: Vec<f64> = values.map(|v| v.abs().to_f64().unwrap_or(f64::INFINITY)).collect();
    if p.is_infinite() {
        return abs.into_iter().fold(0.0, f64::max);
    }
    abs.iter().map(|a| a.powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Pointwise product over all cliques I (including ∅) of γ for ψ_{S∖I}.
pub fn tilde_gamma_table_in(
    ball: &Ball,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
) -> Result<GammaTable, GammaError> {
    let system = ball.system();
    let cl = cliques(system, false)?;
    need(ball, radius + u.len() + w.len())?;
    // indicator lengths are letter counts, kept as integers
    let specs: Vec<Vec<i64>> = cl
        .iter()
        .map(|c| {
            let rest = !coxsp_core::mask_of(c);
            let mut out: Vec<i64> = Vec::with_capacity(ball.len());
            for x in 0..ball.len() {
                out.push(match ball.parent(x) {
                    None => 0,
                    Some((p, s)) => out[p] + i64::from(rest >> s & 1 == 1),
                });
            }
            out
        })
        .collect();
    let mut entries = BTreeMap::new();
    let mut factors: Vec<i64> = Vec::with_capacity(specs.len());
    for v in 0..ball.shell(radius).end {
        let (uv, vw, uvw) = products(ball, u, w, v).expect("ball covers the products");
        factors.clear();
        for psi in &specs {
            let f = psi[uvw] + psi[v] - psi[uv] - psi[vw];
            if f == 0 {
                break;
            }
            factors.push(f);
        }
        if factors.len() == specs.len() {
            let prod = factors.iter().fold(Q::from_integer(1.into()), |acc, &f| acc * Q::from_integer(f.into()));
            entries.insert(ball.element(v), prod);
        }
    }
    Ok(GammaTable::new(u, w, radius, entries))
}

pub fn tilde_gamma_table(
    system: &CoxeterSystem,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
    cap: usize,
) -> Result<GammaTable, GammaError> {
    if !system.is_right_angled() {
        return Err(DiagramError::NotRightAngled.into());
    }
    let ball = Ball::with_cap(system, radius + u.len() + w.len(), cap)?;
    tilde_gamma_table_in(&ball, u, w, radius)
}
