//! Quadrature verifications: the semigroup reproducing law for the sector
//! kernels, and the two Weber-type Bessel integrals that the law rests on.

use crate::radial::lambda_m;
use crate::{Cplx, KernelError};
use kaf_quadrature::radial_rule;
use kaf_sl2::RadialSector;
use kaf_specfun::bessel::{bessel_i_tilde, bessel_j_tilde};
use kaf_specfun::gauss::gauss_laguerre_core;

/// Relative residual of
/// ∫₀^∞ Λ^{(m)}(r,s;z₁) Λ^{(m)}(s,r′;z₂) s^{2⟨k⟩+N+a−3} ds
///   = Λ^{(m)}(r,r′;z₁+z₂),
/// quadrature LHS against closed-form RHS. Needs Re z₁, Re z₂ > 0.
pub fn semigroup_kernel_law(
    r: f64,
    r_prime: f64,
    z1: Cplx,
    z2: Cplx,
    sector: &RadialSector,
    n_nodes: usize,
) -> Result<f64, KernelError> {
    if !(z1.re > 0.0 && z2.re > 0.0) {
        return Err(KernelError::domain(format!(
            "the kernel law needs Re z1 > 0 and Re z2 > 0, got z1 = {z1}, z2 = {z2}"
        )));
    }
    let params = sector.params();
    let a = params.a();
    let m = sector.m();
    // The rule's weight carries s^{2m + 2<k>+N+a-3} e^{-(2/a)s^a}; the two
    // kernel factors supply s^m each and their own exponential decay, so
    // only the Gaussian factor needs restoring.
    let rule = radial_rule(n_nodes, params, m).map_err(KernelError::from)?;
    let mut lhs = Cplx::new(0.0, 0.0);
    for (&sv, &wv) in rule.nodes.iter().zip(&rule.weights) {
        let k1 = lambda_m(r, sv, z1, sector)?.value;
        let k2 = lambda_m(sv, r_prime, z2, sector)?.value;
        lhs += k1 * k2 * (wv * (2.0 / a * sv.powf(a)).exp() / sv.powi(2 * m as i32));
    }
    let rhs = lambda_m(r, r_prime, z1 + z2, sector)?.value;
    Ok((lhs - rhs).norm() / rhs.norm())
}

/// Laguerre polynomial L_ℓ^{(ν)} at a complex argument, by the three-term
/// recurrence.
fn laguerre_c(ell: usize, nu: f64, t: Cplx) -> Cplx {
    let one = Cplx::new(1.0, 0.0);
    if ell == 0 {
        return one;
    }
    let mut p0 = one;
    let mut p1 = Cplx::new(nu + 1.0, 0.0) - t;
    for j in 2..=ell {
        let jf = j as f64;
        let p2 = ((Cplx::new(2.0 * jf - 1.0 + nu, 0.0) - t) * p1 - p0 * (jf - 1.0 + nu)) / jf;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Relative residual of Weber's second exponential integral
/// ∫₀^∞ e^{−δT} J_ν(2α√T) J_ν(2β√T) dT = δ^{−1} e^{−(α²+β²)/δ} I_ν(2αβ/δ)
/// for |arg δ| < π/2, α, β > 0, ν ≥ 0.
pub fn weber_second_exponential(
    delta: Cplx,
    alpha: f64,
    beta: f64,
    nu: f64,
    n_nodes: usize,
) -> Result<f64, KernelError> {
    if !(delta.re > 0.0) {
        return Err(KernelError::domain(format!(
            "Weber integral needs |arg delta| < pi/2 (Re delta > 0), got {delta}"
        )));
    }
    if !(alpha > 0.0 && beta > 0.0 && nu >= 0.0) {
        return Err(KernelError::domain(format!(
            "Weber integral needs alpha, beta > 0 and nu >= 0, got ({alpha}, {beta}, {nu})"
        )));
    }
    // J_nu(2a√T) J_nu(2b√T) = (ab)^nu T^nu J~_nu(2a√T) J~_nu(2b√T) with the
    // normalized J~ entire in T, so Gauss-Laguerre with weight t^nu e^{-t}
    // (t = Re(delta) T) sees a smooth integrand.
    let c = delta.re;
    let rule = gauss_laguerre_core(n_nodes, nu).map_err(KernelError::from)?;
    let shift = delta / c - 1.0; // purely imaginary
    let mut lhs = Cplx::new(0.0, 0.0);
    for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
        let big_t = t / c;
        let ja = bessel_j_tilde(nu, Cplx::new(2.0 * alpha * big_t.sqrt(), 0.0))
            .map_err(KernelError::from)?;
        let jb = bessel_j_tilde(nu, Cplx::new(2.0 * beta * big_t.sqrt(), 0.0))
            .map_err(KernelError::from)?;
        lhs += (-shift * t).exp() * ja * jb * w;
    }
    lhs *= (alpha * beta).powf(nu) * c.powf(-nu - 1.0);
    let arg = delta.inv() * (2.0 * alpha * beta);
    let besseli =
        (arg / 2.0).powf(nu) * bessel_i_tilde(nu, arg).map_err(KernelError::from)?;
    let rhs = delta.inv() * (-(alpha * alpha + beta * beta) * delta.inv()).exp() * besseli;
    Ok((lhs - rhs).norm() / rhs.norm())
}

/// Relative residual of the Laguerre–Bessel Laplace integral
/// ∫₀^∞ e^{−δT} L_ℓ^{(ν)}(αT) J_ν(β√T) T^{ν/2} dT
///   = (δ−α)^ℓ β^ν / (2^ν δ^{ν+ℓ+1}) e^{−β²/(4δ)}
///     L_ℓ^{(ν)}(αβ²/(4δ(α−δ)))
/// for Re δ > 0, ν > 0. ℓ = 0 is the plain Bessel–Laplace transform.
pub fn weber_laguerre_laplace(
    delta: Cplx,
    alpha: f64,
    beta: f64,
    nu: f64,
    ell: usize,
    n_nodes: usize,
) -> Result<f64, KernelError> {
    if !(delta.re > 0.0) {
        return Err(KernelError::domain(format!(
            "Laplace integral needs Re delta > 0, got {delta}"
        )));
    }
    if !(nu > 0.0) {
        return Err(KernelError::domain(format!(
            "Laplace integral needs nu > 0, got {nu}"
        )));
    }
    if !(beta > 0.0) {
        return Err(KernelError::domain(format!("needs beta > 0, got {beta}")));
    }
    if ell >= 1 && (delta - alpha).norm() < 1e-12 {
        return Err(KernelError::domain(
            "the closed form is singular at delta = alpha for ell >= 1",
        ));
    }
    let c = delta.re;
    let rule = gauss_laguerre_core(n_nodes, nu).map_err(KernelError::from)?;
    let shift = delta / c - 1.0;
    let mut lhs = Cplx::new(0.0, 0.0);
    for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
        let big_t = t / c;
        let jb = bessel_j_tilde(nu, Cplx::new(beta * big_t.sqrt(), 0.0))
            .map_err(KernelError::from)?;
        let lag = kaf_specfun::laguerre::laguerre(ell, nu, alpha * big_t);
        lhs += (-shift * t).exp() * jb * (lag * w);
    }
    lhs *= (beta / 2.0).powf(nu) * c.powf(-nu - 1.0);
    let dma = delta - alpha;
    let lag_arg = (delta * (alpha - delta)).inv() * (alpha * beta * beta / 4.0);
    let rhs = dma.powi(ell as i32)
        * delta.powf(-(nu + ell as f64 + 1.0))
        * ((beta / 2.0).powf(nu))
        * (-(beta * beta / 4.0) * delta.inv()).exp()
        * laguerre_c(ell, nu, lag_arg);
    Ok((lhs - rhs).norm() / rhs.norm())
}

/// Combined Weber check: the larger of the second-exponential-integral
/// residual and (for ν > 0) the Laguerre–Laplace residuals at ℓ = 0 and
/// ℓ = 2.
pub fn weber_check(delta: Cplx, alpha: f64, beta: f64, nu: f64) -> Result<f64, KernelError> {
    let n = 160;
    let mut worst = weber_second_exponential(delta, alpha, beta, nu, n)?;
    if nu > 0.0 {
        for ell in [0usize, 2] {
            worst = worst.max(weber_laguerre_laplace(delta, alpha, beta, nu, ell, n)?);
        }
    }
    Ok(worst)
}
