//! The integral kernel B(x,y) of the deformed Fourier transform, in the
//! scopes where it has a closed form. B is the phase-corrected boundary
//! value of the semigroup kernel: B(x,y) = e^{iπμ/(2a)} Λ(x,y;iπ/2).

use crate::TransformError;
use kaf_kernels::lambda_full;
use kaf_quadrature::DeformParams;
use kaf_specfun::bessel::bessel_j_tilde;
use kaf_specfun::gamma::ln_gamma;
use kaf_specfun::Cplx;

/// Closed-form evaluation routes for B(x,y).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BScope {
    /// N = 1, any a: the two-Bessel formula, branch of i^{2/a} pinned by
    /// 1^{2/a} = 1 (principal branch).
    RankOne,
    /// k ≡ 0, a = 1, N ≥ 2: Γ((N−1)/2) J̃_{(N−3)/2}(√(2(rs+⟨x,y⟩))).
    KZeroA1,
    /// k ≡ 0, a = 2: the plane wave e^{−i⟨x,y⟩}.
    KZeroA2,
    /// a = 2, any k on ℤ₂ᴺ: coordinate-wise product of rank-one a = 2
    /// factors. Validated against the sector pipeline and the kernel PDE
    /// system rather than a closed intertwiner.
    Z2nA2,
}

/// Parameters plus a validated evaluation route for B(x,y).
#[derive(Debug, Clone)]
pub struct BKernelSpec {
    params: DeformParams,
    scope: BScope,
}

impl BKernelSpec {
    /// Picks the natural scope for the parameters: rank-one for N = 1,
    /// the product form for a = 2, the Bessel form for k ≡ 0, a = 1.
    pub fn new(params: &DeformParams) -> Result<Self, TransformError> {
        let k_zero = params.k().iter().all(|&ki| ki == 0.0);
        let scope = if params.dim() == 1 {
            BScope::RankOne
        } else if params.a() == 2.0 {
            if k_zero { BScope::KZeroA2 } else { BScope::Z2nA2 }
        } else if params.a() == 1.0 && k_zero {
            BScope::KZeroA1
        } else {
            return Err(TransformError::scope(format!(
                "no closed transform kernel for N = {} with a = {} and k != 0; \
                 supported: N = 1 (any a), a = 2 (any k), or k = 0 with a = 1",
                params.dim(),
                params.a()
            )));
        };
        Ok(BKernelSpec { params: params.clone(), scope })
    }

    /// Builds a spec with an explicitly requested scope, checking it
    /// against the parameters.
    pub fn with_scope(params: &DeformParams, scope: BScope) -> Result<Self, TransformError> {
        let k_zero = params.k().iter().all(|&ki| ki == 0.0);
        let ok = match scope {
            BScope::RankOne => params.dim() == 1,
            BScope::KZeroA1 => params.a() == 1.0 && k_zero && params.dim() >= 2,
            BScope::KZeroA2 => params.a() == 2.0 && k_zero,
            BScope::Z2nA2 => params.a() == 2.0,
        };
        if !ok {
            return Err(TransformError::scope(format!(
                "scope {scope:?} does not match N = {}, a = {}, k = {:?}",
                params.dim(),
                params.a(),
                params.k()
            )));
        }
        Ok(BKernelSpec { params: params.clone(), scope })
    }

    pub fn params(&self) -> &DeformParams {
        &self.params
    }

    pub fn scope(&self) -> BScope {
        self.scope
    }
}

/// One rank-one factor
/// Γ((2k+a−1)/a) [ J̃_{(2k−1)/a}(w) + xy (ai)^{−2/a} J̃_{(2k+1)/a}(w) ],
/// w = (2/a)|xy|^{a/2}, with (ai)^{2/a} = a^{2/a} e^{iπ/a} on the branch
/// pinned by 1^{2/a} = 1.
fn rank_one_factor(x: f64, y: f64, a: f64, k: f64) -> Result<Cplx, TransformError> {
    let w = Cplx::new(2.0 / a * (x * y).abs().powf(a / 2.0), 0.0);
    let even = bessel_j_tilde((2.0 * k - 1.0) / a, w)?;
    let odd = bessel_j_tilde((2.0 * k + 1.0) / a, w)?
        * Cplx::from_polar(a.powf(-2.0 / a), -std::f64::consts::PI / a)
        * (x * y);
    Ok((even + odd) * ln_gamma((2.0 * k + a - 1.0) / a)?.exp())
}

/// B(x,y) evaluated through the spec's closed-form route.
pub fn b_kernel(x: &[f64], y: &[f64], spec: &BKernelSpec) -> Result<Cplx, TransformError> {
    let params = spec.params();
    let dim = params.dim();
    if x.len() != dim || y.len() != dim {
        return Err(TransformError::domain(format!(
            "points of dimension {} and {} fed to N = {dim} parameters",
            x.len(),
            y.len()
        )));
    }
    let a = params.a();
    match spec.scope {
        BScope::RankOne => rank_one_factor(x[0], y[0], a, params.k()[0]),
        BScope::KZeroA2 => {
            let d: f64 = x.iter().zip(y).map(|(u, v)| u * v).sum();
            Ok(Cplx::from_polar(1.0, -d))
        }
        BScope::Z2nA2 => {
            let mut prod = Cplx::new(1.0, 0.0);
            for ((&xi, &yi), &ki) in x.iter().zip(y).zip(params.k()) {
                prod *= rank_one_factor(xi, yi, 2.0, ki)?;
            }
            Ok(prod)
        }
        BScope::KZeroA1 => {
            let r: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            let s: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            let d: f64 = x.iter().zip(y).map(|(u, v)| u * v).sum();
            let nf = dim as f64;
            let arg = (2.0 * (r * s + d)).max(0.0).sqrt();
            Ok(bessel_j_tilde((nf - 3.0) / 2.0, Cplx::new(arg, 0.0))?
                * ln_gamma((nf - 1.0) / 2.0)?.exp())
        }
    }
}

/// B via the semigroup kernel at the boundary point:
/// e^{iπμ/(2a)} Λ(x,y;iπ/2). Independent of the closed forms above
/// (shares only the Bessel evaluator); used to cross-check them.
pub fn b_kernel_via_semigroup(
    x: &[f64],
    y: &[f64],
    params: &DeformParams,
) -> Result<Cplx, TransformError> {
    let z = Cplx::new(0.0, std::f64::consts::FRAC_PI_2);
    let phase = Cplx::from_polar(1.0, std::f64::consts::PI * params.mu() / (2.0 * params.a()));
    Ok(phase * lambda_full(x, y, z, params)?.value)
}
