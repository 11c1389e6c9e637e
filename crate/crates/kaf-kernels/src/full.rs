//! Full kernels Λ(x,y;z) = (Ṽ_k h(r,s;z;·))(ω,η) in the scopes where the
//! intertwiner has a closed form: the rank-one two-Bessel formula, and
//! Ṽ₀ = evaluation at ⟨ω,η⟩ for k ≡ 0. The sphere Poisson kernel P_{k,m}
//! and the sector-sum reconstruction
//!   Λ = a^{(2⟨k⟩+N−2)/a} Γ(μ/a) Σ_m Λ^{(m)}(r,s;z) P_{k,m}(ω,η)
//! live here as well.

use crate::radial::{c_bound, lambda_m};
use crate::zfun::{alpha_beta, log_sinh};
use crate::{Cplx, DeformParams, KernelError, KernelEval, Provenance, BOUND_SLACK};
use kaf_sl2::RadialSector;
use kaf_specfun::bessel::bessel_i_tilde;
use kaf_specfun::gamma::ln_gamma;
use kaf_specfun::gegenbauer::{gegenbauer, gegenbauer_nu0_limit};

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn check_dim(x: &[f64], y: &[f64], params: &DeformParams) -> Result<(), KernelError> {
    if x.len() != params.dim() || y.len() != params.dim() {
        return Err(KernelError::domain(format!(
            "points of dimension {} and {} fed to N = {} parameters",
            x.len(),
            y.len(),
            params.dim()
        )));
    }
    Ok(())
}

/// The sphere Poisson kernel
/// P_{k,m}(ω,η) = ((⟨k⟩+m+(N−2)/2)/(⟨k⟩+(N−2)/2)) (Ṽ_k C_m^{⟨k⟩+(N−2)/2})(ω,η),
/// the reproducing kernel of the degree-m k-harmonics. Supported scopes:
/// N = 1 with any k (where it is 1 for m = 0 and sgn(ωη) for m = 1), and
/// k ≡ 0 for any N (where Ṽ₀ evaluates at t = ⟨ω,η⟩; the N = 2 case
/// ν = 0 is taken as the ν → 0 limit 2cos(mθ)).
pub fn poisson_kernel(
    m: usize,
    omega: &[f64],
    eta: &[f64],
    params: &DeformParams,
) -> Result<f64, KernelError> {
    check_dim(omega, eta, params)?;
    for (name, v) in [("omega", omega), ("eta", eta)] {
        if (norm(v) - 1.0).abs() > 1e-8 {
            return Err(KernelError::domain(format!(
                "{name} must be a unit vector, got |{name}| = {}",
                norm(v)
            )));
        }
    }
    if params.dim() == 1 {
        return match m {
            0 => Ok(1.0),
            1 => Ok((omega[0] * eta[0]).signum()),
            _ => Err(KernelError::scope(format!(
                "for N = 1 the space of degree-{m} harmonics is zero; only m = 0, 1 occur"
            ))),
        };
    }
    if params.k().iter().any(|&ki| ki != 0.0) {
        return Err(KernelError::scope(
            "Poisson kernel is available for N = 1 (any k) or k = 0 (any N); \
             no closed intertwiner exists for N >= 2 with k != 0",
        ));
    }
    let t = dot(omega, eta).clamp(-1.0, 1.0);
    let nu = params.nu();
    if nu > 0.0 {
        Ok((nu + m as f64) / nu * gegenbauer(m, nu, t))
    } else if m == 0 {
        Ok(1.0)
    } else {
        // N = 2: lim_{ν→0} ((ν+m)/ν) C_m^ν = m · lim C_m^ν/ν = 2cos(mθ).
        Ok(m as f64 * gegenbauer_nu0_limit(m, t).map_err(KernelError::from)?)
    }
}

/// |sinh z|^{−μ/a} e^{−(1/a)(rᵃ+sᵃ)α(1−|β|)}: the pointwise modulus bound
/// for the full kernel, proved for a ∈ {1, 2}.
fn full_bound(r: f64, s: f64, z: Cplx, params: &DeformParams) -> Result<f64, KernelError> {
    let (alpha, beta) = alpha_beta(z)?;
    let a = params.a();
    Ok((-(params.mu() / a) * z.sinh().norm().ln()
        - (r.powf(a) + s.powf(a)) / a * alpha * (1.0 - beta.abs()))
    .exp())
}

/// Λ(x,y;z) in the closed-form scopes.
///
/// * N = 1, any (a,k) with 2k + a > 1:
///   Γ(μ/a) e^{−(1/a)(|x|ᵃ+|y|ᵃ)coth z} sinh(z)^{−μ/a}
///   [Ĩ_{(2k−1)/a}(w) + a^{−2/a} xy sinh(z)^{−2/a} Ĩ_{(2k+1)/a}(w)]
///   with w = (2/a)|xy|^{a/2}/sinh z.
/// * k ≡ 0, any N: Ṽ₀ h = h(‖x‖,‖y‖;z;⟨ω,η⟩).
///
/// N ≥ 2 with k ≢ 0 has no closed intertwiner; work per sector with
/// [`lambda_m`] instead.
pub fn lambda_full(
    x: &[f64],
    y: &[f64],
    z: Cplx,
    params: &DeformParams,
) -> Result<KernelEval, KernelError> {
    check_dim(x, y, params)?;
    let a = params.a();
    let r = norm(x);
    let s = norm(y);
    if !(r > 0.0 && s > 0.0) {
        return Err(KernelError::domain(
            "full kernel evaluation requires nonzero x and y",
        ));
    }
    let (value, provenance) = if params.dim() == 1 {
        let k = params.k()[0];
        if !(2.0 * k + a > 1.0) {
            return Err(KernelError::domain(format!(
                "rank-one closed kernel requires 2k + a > 1, got 2k + a = {}",
                2.0 * k + a
            )));
        }
        let ls = log_sinh(z)?;
        let sh = z.sinh();
        let coth = z.cosh() / sh;
        let w = (r * s).powf(a / 2.0) * 2.0 / a / sh;
        let even = bessel_i_tilde((2.0 * k - 1.0) / a, w).map_err(KernelError::from)?;
        let odd = bessel_i_tilde((2.0 * k + 1.0) / a, w).map_err(KernelError::from)?
            * (x[0] * y[0] * a.powf(-2.0 / a))
            * (-(2.0 / a) * ls).exp();
        let v = (even + odd)
            * ln_gamma(params.mu() / a).map_err(KernelError::from)?.exp()
            * (-(r.powf(a) + s.powf(a)) / a * coth).exp()
            * (-(params.mu() / a) * ls).exp();
        (v, Provenance::ClosedForm)
    } else if params.k().iter().all(|&ki| ki == 0.0) {
        let t = (dot(x, y) / (r * s)).clamp(-1.0, 1.0);
        let v = crate::profile::h_profile(r, s, z, t, params)?;
        let p = if a == 1.0 || a == 2.0 { Provenance::ClosedForm } else { Provenance::Series };
        (v, p)
    } else {
        return Err(KernelError::scope(
            "full kernel is available for N = 1 (any k) or k = 0 (any N); for N >= 2 with \
             k != 0 use the radial sector kernels lambda_m",
        ));
    };
    // The modulus bound is proved only for a in {1, 2}; elsewhere it is not
    // asserted.
    let bound_ok = if a == 1.0 || a == 2.0 {
        value.norm() <= full_bound(r, s, z, params)? * BOUND_SLACK
    } else {
        true
    };
    Ok(KernelEval { value, provenance, bound_ok })
}

/// Result of the truncated sector-sum reconstruction of the full kernel.
#[derive(Debug, Clone, Copy)]
pub struct SectorSumEval {
    pub value: Cplx,
    /// Upper estimate of the discarded tail Σ_{m>m_max}, from the modulus
    /// bound on Λ^{(m)} and sup_{[−1,1]}|C_m^ν| = C_m^ν(1).
    pub tail_bound: f64,
}

/// a^{(2⟨k⟩+N−2)/a} Γ(μ/a) Σ_{m≤m_max} Λ^{(m)}(r,s;z) P_{k,m}(ω,η):
/// the harmonic-sector series for the full kernel, truncated at m_max.
/// Same scope as [`poisson_kernel`]; for N = 1 the sum is exact with
/// m_max = 1 and the tail bound is zero.
pub fn lambda_full_sum(
    x: &[f64],
    y: &[f64],
    z: Cplx,
    params: &DeformParams,
    m_max: usize,
) -> Result<SectorSumEval, KernelError> {
    check_dim(x, y, params)?;
    let a = params.a();
    let r = norm(x);
    let s = norm(y);
    if !(r > 0.0 && s > 0.0) {
        return Err(KernelError::domain(
            "sector sum evaluation requires nonzero x and y",
        ));
    }
    let omega: Vec<f64> = x.iter().map(|v| v / r).collect();
    let eta: Vec<f64> = y.iter().map(|v| v / s).collect();
    let prefactor = ((2.0 * params.index() + params.dim() as f64 - 2.0) / a * a.ln()
        + ln_gamma(params.mu() / a).map_err(KernelError::from)?)
    .exp();
    let top = if params.dim() == 1 { m_max.min(1) } else { m_max };
    let mut value = Cplx::new(0.0, 0.0);
    for m in 0..=top {
        let sector = RadialSector::new(m, params).map_err(KernelError::from)?;
        let lm = lambda_m(r, s, z, &sector)?;
        value += lm.value * poisson_kernel(m, &omega, &eta, params)?;
    }
    let tail_bound = if params.dim() == 1 {
        0.0
    } else {
        let (alpha, beta) = alpha_beta(z)?;
        let decay = (-(r.powf(a) + s.powf(a)) / a * alpha * (1.0 - beta.abs())).exp();
        let nu = params.nu();
        let mut tail = 0.0;
        for m in (m_max + 1)..(m_max + 200) {
            let mf = m as f64;
            // sup |P_{k,m}| = ((ν+m)/ν) C_m^ν(1); 2 in the ν → 0 limit.
            let p_sup = if nu > 0.0 {
                ((nu + mf) / nu).ln() + ln_gamma(mf + 2.0 * nu).map_err(KernelError::from)?
                    - ln_gamma(mf + 1.0).map_err(KernelError::from)?
                    - ln_gamma(2.0 * nu).map_err(KernelError::from)?
            } else {
                2f64.ln()
            };
            let sector = RadialSector::new(m, params).map_err(KernelError::from)?;
            let term = (p_sup.exp()) * c_bound(&sector, z)? * (r * s).powf(mf) * decay;
            tail += term;
            if term < 1e-300 || term < 1e-18 * tail {
                break;
            }
        }
        prefactor * tail
    };
    Ok(SectorSumEval { value: value * prefactor, tail_bound })
}
