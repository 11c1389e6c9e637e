//! The angular kernel profile
//!   h(r,s;z;t) = e^{−(1/a)(rᵃ+sᵃ)coth z} sinh(z)^{−μ/a}
//!                𝓘(2/a, ⟨k⟩+(N−2)/2; 2(rs)^{a/2}/(a sinh z); t),
//! whose Gegenbauer coefficients are (up to the constant d_k/c_{k,a}) the
//! sector kernels Λ^{(m)}. For a ∈ {1, 2} the Bessel–Gegenbauer series 𝓘
//! collapses to elementary closed forms.

use crate::zfun::log_sinh;
use crate::{Cplx, DeformParams, KernelError};
use kaf_specfun::series::{i_fun, i_fun_closed_b1, i_fun_closed_b2};

/// h(r,s;z;t). Requires 2⟨k⟩+N > max(1, 2−a), which keeps the series 𝓘
/// inside its domain 1 + (2/a)ν > 0 with margin.
pub fn h_profile(
    r: f64,
    s: f64,
    z: Cplx,
    t: f64,
    params: &DeformParams,
) -> Result<Cplx, KernelError> {
    if !(r > 0.0 && s > 0.0) {
        return Err(KernelError::domain(format!(
            "radial arguments must be positive, got r = {r}, s = {s}"
        )));
    }
    if !(-1.0..=1.0).contains(&t) {
        return Err(KernelError::domain(format!(
            "angular argument t must lie in [-1, 1], got {t}"
        )));
    }
    let a = params.a();
    let kn = 2.0 * params.index() + params.dim() as f64;
    if !(kn > 1f64.max(2.0 - a)) {
        return Err(KernelError::domain(format!(
            "profile requires 2<k> + N > max(1, 2 - a); got 2<k> + N = {kn} with a = {a}"
        )));
    }
    let nu = params.nu();
    let ls = log_sinh(z)?;
    let sh = z.sinh();
    let coth = z.cosh() / sh;
    let w = (r * s).powf(a / 2.0) * 2.0 / a / sh;
    let series = if a == 2.0 {
        i_fun_closed_b1(w, t)
    } else if a == 1.0 {
        i_fun_closed_b2(nu, w, t).map_err(KernelError::from)?
    } else {
        i_fun(2.0 / a, nu, w, t).map_err(KernelError::from)?.value
    };
    Ok((-(r.powf(a) + s.powf(a)) / a * coth).exp() * (-(params.mu() / a) * ls).exp() * series)
}
