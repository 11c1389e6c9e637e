//! The elementary functions of z = x + iy controlling kernel decay:
//! α(z) = sinh 2x / (cosh 2x − cos 2y) and β(z) = cos y / cosh x, defined on
//! the closed right half-plane minus the poles iπℤ, together with the branch
//! of log sinh z used for the complex powers sinh(z)^{−p}.

use crate::{Cplx, KernelError};
use std::f64::consts::PI;

/// Proximity to iπℤ below which z is rejected as a pole; this is
/// |sinh z|² < 1e−24, i.e. distance ≈ 1e−12 from the nearest pole.
const POLE_TOL: f64 = 2e-24;

/// (α(z), β(z)) with α = Re coth z and αβ = Re(1/sinh z); α ≥ 0 and
/// |β| < 1 throughout the domain, with α > 0 when Re z > 0. Both identities
/// are re-verified against direct complex arithmetic to 1e−13.
pub fn alpha_beta(z: Cplx) -> Result<(f64, f64), KernelError> {
    if !(z.re >= 0.0) {
        return Err(KernelError::domain(format!(
            "alpha_beta needs Re z >= 0, got z = {z}"
        )));
    }
    // cosh 2x − cos 2y = 2|sinh z|², so this also detects the poles.
    let denom = (2.0 * z.re).cosh() - (2.0 * z.im).cos();
    if denom < POLE_TOL {
        return Err(KernelError::pole(format!(
            "z = {z} lies on (or within ~1e-12 of) the pole set i*pi*Z"
        )));
    }
    let alpha = (2.0 * z.re).sinh() / denom;
    let beta = z.im.cos() / z.re.cosh();
    let s = z.sinh();
    let re_coth = (z.cosh() / s).re;
    let re_csch = (Cplx::new(1.0, 0.0) / s).re;
    let scale = 1.0 + alpha.abs();
    if (re_coth - alpha).abs() > 1e-13 * scale || (re_csch - alpha * beta).abs() > 1e-13 * scale {
        return Err(KernelError::domain(format!(
            "alpha/beta failed the Re coth / Re csch consistency check at z = {z}"
        )));
    }
    Ok((alpha, beta))
}

/// log sinh z continued from the positive real axis: the principal
/// Ln sinh z corrected by 2πi for every odd multiple of π that Im z has
/// crossed. Continuous on Re z > 0 and agrees with the Re z → 0⁺ limit on
/// the imaginary axis, which is what pins the branch of sinh(z)^{−p} in the
/// kernel formulas.
pub fn log_sinh(z: Cplx) -> Result<Cplx, KernelError> {
    if !(z.re >= 0.0) {
        return Err(KernelError::domain(format!(
            "log_sinh needs Re z >= 0, got z = {z}"
        )));
    }
    let s = z.sinh();
    if s.norm_sqr() < POLE_TOL / 2.0 {
        return Err(KernelError::pole(format!(
            "sinh z vanishes at z = {z} (pole set i*pi*Z)"
        )));
    }
    let winding = ((z.im + PI) / (2.0 * PI)).floor();
    Ok(s.ln() + Cplx::new(0.0, 2.0 * PI * winding))
}
