use std::fmt::Write;

use coxsp_core::{Ball, CoxeterSystem, GroupElement, GroupOps};
use coxsp_gamma::{products, psi_values};
use coxsp_length::LengthSpec;
use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};

use crate::SpectralError;

/// Largest matrix dimension assembled or decomposed.
pub const MAX_DIM: usize = 4000;

/// Compression of an operator on ℓ₂(W) to a Cayley ball.
///
/// Rows and columns follow the ball order. Columns of length at most
/// `interior_radius` are unaffected by the truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedOperator {
    pub elements: Vec<GroupElement>,
    pub matrix: DMatrix<f64>,
    pub interior_radius: usize,
}

impl TruncatedOperator {
    pub fn zeros(elements: Vec<GroupElement>, interior_radius: usize) -> Self {
        let n = elements.len();
        TruncatedOperator { elements, matrix: DMatrix::zeros(n, n), interior_radius }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Number of interior columns; they form a prefix of the ball order.
    pub fn interior_len(&self) -> usize {
        self.elements.iter().take_while(|g| g.len() <= self.interior_radius).count()
    }

    /// All rows, interior columns only.
    pub fn interior_matrix(&self) -> DMatrix<f64> {
        self.matrix.columns(0, self.interior_len()).into_owned()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.binary_search_by(|x| x.cmp(g)).ok()
    }

    /// Nonzero entries as `row-word col-word value` lines, column-major.
    pub fn to_triplets(&self) -> String {
        let mut out = String::new();
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                let v = self.matrix[(i, j)];
                if v != 0.0 {
                    let _ = writeln!(out, "{} {} {}", self.elements[i], self.elements[j], v);
                }
            }
        }
        out
    }
}

fn check_dim(n: usize) -> Result<(), SpectralError> {
    if n > MAX_DIM {
        return Err(SpectralError::TooLarge { dim: n, cap: MAX_DIM });
    }
    Ok(())
}

/// Singular values in decreasing order.
pub fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// ℓ_p norm of the singular values; `p = f64::INFINITY` is the operator norm.
pub fn schatten_norm_matrix(m: &DMatrix<f64>, p: f64) -> f64 {
    let s = singular_values(m);
    if p.is_infinite() {
        return s.first().copied().unwrap_or(0.0);
    }
    s.iter().map(|x| x.powf(p)).sum::<f64>().powf(1.0 / p)
}

pub fn schatten_norm(op: &TruncatedOperator, p: f64) -> f64 {
    schatten_norm_matrix(&op.matrix, p)
}

/// Matrix of λ_v ↦ γ(v)·λ_{uvw} on the ball of radius `radius`.
pub fn psi_group_matrix(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    u: &GroupElement,
    w: &GroupElement,
    radius: usize,
    cap: usize,
) -> Result<TruncatedOperator, SpectralError> {
    spec.validate(system)?;
    let ball = Ball::with_cap(system, radius + u.len() + w.len(), cap)?;
    let n = ball.shell(radius).end;
    check_dim(n)?;
    let psi = psi_values(&ball, spec);
    let mut op = TruncatedOperator::zeros((0..n).map(|x| ball.element(x)).collect(), radius.saturating_sub(u.len() + w.len()));
    for v in 0..n {
        let (uv, vw, uvw) = products(&ball, u, w, v).expect("ball covers the products");
        let g = &psi[uvw] + &psi[v] - &psi[uv] - &psi[vw];
        if uvw < n && !g.is_zero() {
            op.matrix[(uvw, v)] = g.to_f64().unwrap_or(f64::NAN);
        }
    }
    Ok(op)
}

/// Coefficient operator of ξ = λ_a ⊗_∇ λ_c against η = λ_b ⊗_∇ λ_d in the group case:
/// λ_x ↦ −½·γ_{b⁻¹,a}(x)·λ_{d⁻¹b⁻¹xac}.
#[allow(clippy::too_many_arguments)]
pub fn coefficient_matrix(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    a: &GroupElement,
    b: &GroupElement,
    c: &GroupElement,
    d: &GroupElement,
    radius: usize,
    cap: usize,
) -> Result<TruncatedOperator, SpectralError> {
    spec.validate(system)?;
    let margin = a.len() + b.len() + c.len() + d.len();
    if margin > radius {
        return Err(SpectralError::NoInterior { radius, margin });
    }
    let ball = Ball::with_cap(system, radius + margin, cap)?;
    let n = ball.shell(radius).end;
    check_dim(n)?;
    let psi = psi_values(&ball, spec);
    let (binv, dinv) = (system.inverse(b), system.inverse(d));
    let mut op = TruncatedOperator::zeros((0..n).map(|x| ball.element(x)).collect(), radius - margin);
    for x in 0..n {
        let bx = ball.left_mul_elem(&binv, x).expect("inside");
        let xa = ball.right_mul_elem(x, a).expect("inside");
        let bxa = ball.right_mul_elem(bx, a).expect("inside");
        let g = &psi[bxa] + &psi[x] - &psi[bx] - &psi[xa];
        if g.is_zero() {
            continue;
        }
        let target = ball.right_mul_elem(bxa, c).and_then(|y| ball.left_mul_elem(&dinv, y)).expect("inside");
        if target < n {
            op.matrix[(target, x)] = -0.5 * g.to_f64().unwrap_or(f64::NAN);
        }
    }
    Ok(op)
}

/// Coefficient of a tensor product: the entrywise product of the factors.
pub fn hadamard_tensor(a: &TruncatedOperator, b: &TruncatedOperator) -> Result<TruncatedOperator, SpectralError> {
    if a.elements != b.elements {
        return Err(SpectralError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(TruncatedOperator {
        elements: a.elements.clone(),
        matrix: a.matrix.component_mul(&b.matrix),
        interior_radius: a.interior_radius.min(b.interior_radius),
    })
}

/// Δ*(A ⊗ B)Δ computed in the n²-dimensional tensor space, Δe_i = e_i ⊗ e_i.
pub fn tensor_compression(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<DMatrix<f64>, SpectralError> {
    let n = a.nrows();
    if a.shape() != (n, n) || b.shape() != (n, n) {
        return Err(SpectralError::DimensionMismatch { left: a.nrows(), right: b.nrows() });
    }
    let mut delta = DMatrix::zeros(n * n, n);
    for i in 0..n {
        delta[(i * n + i, i)] = 1.0;
    }
    Ok(delta.transpose() * a.kronecker(b) * delta)
}

/// ‖A‖_{S_p}‖B‖_{S_q} − ‖A∘B‖_{S_r}.
pub fn young_slack(a: &DMatrix<f64>, b: &DMatrix<f64>, p: f64, q: f64, r: f64) -> f64 {
    schatten_norm_matrix(a, p) * schatten_norm_matrix(b, q) - schatten_norm_matrix(&a.component_mul(b), r)
}
