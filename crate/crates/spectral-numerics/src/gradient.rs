use std::collections::BTreeSet;

use coxsp_core::{Ball, CoxeterSystem, GroupElement, GroupOps};
use coxsp_length::{LengthSpec, Q};
use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::operator::singular_values;
use crate::{SpectralError, TOLERANCE};

/// Γ(λ_p, λ_q) = c·λ_{q⁻¹p}; returns `(c, q⁻¹p)`.
pub fn carre_du_champ<G: GroupOps>(ops: &G, spec: &LengthSpec, p: &GroupElement, q: &GroupElement) -> (Q, GroupElement) {
    let qp = ops.multiply(&ops.inverse(q), p);
    let c = (spec.evaluate(p) + spec.evaluate(q) - spec.evaluate(&qp)) / Q::from_integer(2.into());
    (c, qp)
}

/// ⟨λ_p ⊗_∇ δ_r, λ_q ⊗_∇ δ_s⟩ = ⟨Γ(λ_p, λ_q)δ_r, δ_s⟩.
pub fn gradient_inner<G: GroupOps>(
    ops: &G,
    spec: &LengthSpec,
    p: &GroupElement,
    r: &GroupElement,
    q: &GroupElement,
    s: &GroupElement,
) -> Q {
    let (c, qp) = carre_du_champ(ops, spec, p, q);
    if &ops.multiply(&qp, r) == s {
        c
    } else {
        Q::zero()
    }
}

/// Smallest eigenvalue of a symmetric matrix; 0 for the empty matrix.
pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    m.clone().symmetric_eigen().eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GramReport {
    pub exact: Vec<Vec<Q>>,
    pub min_eigenvalue: f64,
}

impl GramReport {
    pub fn is_psd(&self) -> bool {
        self.min_eigenvalue >= -TOLERANCE
    }
}

/// Gram matrix of the vectors λ_a ⊗_∇ δ_g.
pub fn carre_du_champ_gram(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    spanning: &[(GroupElement, GroupElement)],
) -> Result<GramReport, SpectralError> {
    spec.validate(system)?;
    let exact: Vec<Vec<Q>> = spanning
        .iter()
        .map(|(a, g)| spanning.iter().map(|(b, h)| gradient_inner(system, spec, a, g, b, h)).collect())
        .collect();
    let n = spanning.len();
    let m = DMatrix::from_fn(n, n, |i, j| exact[i][j].to_f64().unwrap_or(f64::NAN));
    Ok(GramReport { min_eigenvalue: min_eigenvalue(&m), exact })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RieszReport {
    pub checked: usize,
    /// Elements with ⟨Γ(λ_v,λ_v)δ_e, δ_e⟩ ≠ ψ(v).
    pub failures: Vec<GroupElement>,
    pub kernel: Vec<GroupElement>,
    pub kernel_per_shell: Vec<usize>,
}

impl RieszReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    /// No kernel element in the outermost shell.
    pub fn kernel_bounded(&self) -> bool {
        self.kernel_per_shell.last().map_or(true, |&k| k == 0) || self.kernel_per_shell.len() == 1
    }
}

pub fn riesz_isometry_check(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    radius: usize,
    cap: usize,
) -> Result<RieszReport, SpectralError> {
    spec.validate(system)?;
    let ball = Ball::with_cap(system, radius, cap)?;
    let e = GroupElement::identity();
    let mut report = RieszReport { checked: 0, failures: Vec::new(), kernel: Vec::new(), kernel_per_shell: vec![0; radius + 1] };
    for x in 0..ball.len() {
        let v = ball.element(x);
        let psi = spec.evaluate(&v);
        if psi.is_zero() {
            report.kernel_per_shell[v.len()] += 1;
            report.kernel.push(v);
            continue;
        }
        report.checked += 1;
        if gradient_inner(&ball, spec, &v, &e, &v, &e) != psi {
            report.failures.push(v);
        }
    }
    Ok(report)
}

pub const MAX_CONVOLUTION_DIM: usize = 200;

#[derive(Clone, Debug, PartialEq)]
pub struct ConvolutionReport {
    pub dim: usize,
    pub kernel: Vec<GroupElement>,
    pub rank: usize,
    /// max |M*M − P| with P the projection off the kernel.
    pub max_deviation: f64,
}

impl ConvolutionReport {
    pub fn holds(&self) -> bool {
        self.max_deviation < TOLERANCE && self.rank + self.kernel.len() == self.dim
    }
}

fn random_orthogonal(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let m = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    m.qr().q()
}

/// Checks that (V₁ ⊗ V₂)∘Δ has kernel span{δ_g : g ∈ F1 ∪ F2} and is isometric
/// on its complement, for V_i = U_i·(1 − 1_{F_i}) with U_i orthogonal
/// (random from `seed`, identity otherwise).
pub fn convolution_kernel_check(
    system: &CoxeterSystem,
    f1: &[GroupElement],
    f2: &[GroupElement],
    radius: usize,
    seed: Option<u64>,
) -> Result<ConvolutionReport, SpectralError> {
    let ball = Ball::new(system, radius)?;
    let n = ball.len();
    if n > MAX_CONVOLUTION_DIM {
        return Err(SpectralError::TooLarge { dim: n, cap: MAX_CONVOLUTION_DIM });
    }
    let mask = |f: &[GroupElement]| -> DMatrix<f64> {
        let set: BTreeSet<usize> = f.iter().filter_map(|g| ball.index_of(g)).collect();
        DMatrix::from_fn(n, n, |i, j| if i == j && !set.contains(&i) { 1.0 } else { 0.0 })
    };
    let (p1, p2) = (mask(f1), mask(f2));
    let (v1, v2) = match seed {
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (random_orthogonal(n, &mut rng) * &p1, random_orthogonal(n, &mut rng) * &p2)
        }
        None => (p1.clone(), p2.clone()),
    };
    let mut m = DMatrix::zeros(n * n, n);
    for g in 0..n {
        let col = v1.column(g).kronecker(&v2.column(g));
        m.set_column(g, &col);
    }
    let proj = p1.component_mul(&p2);
    let max_deviation = (m.transpose() * &m - &proj).abs().max();
    let rank = singular_values(&m).iter().filter(|&&s| s > TOLERANCE).count();
    let kernel = (0..n).filter(|&g| proj[(g, g)] == 0.0).map(|g| ball.element(g)).collect();
    Ok(ConvolutionReport { dim: n, kernel, rank, max_deviation })
}
