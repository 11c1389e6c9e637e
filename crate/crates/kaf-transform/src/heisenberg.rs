//! The Heisenberg-type uncertainty product in the spectral basis. The
//! multiplication operator ‖x‖ᵃ = (a/2)t acts tridiagonally on each
//! sector's Laguerre basis; under the transform the off-diagonal entries
//! change sign (the alternating eigenphase e^{−iπℓ}), which is all that
//! distinguishes the two moments.

use crate::TransformError;
use kaf_sl2::SpectralFunction;
use std::collections::BTreeMap;

/// ∫ ‖x‖ᵃ |f|² ϑ_{k,a} dx from the coefficients: per sector,
/// ⟨t f̃_ℓ, f̃_ℓ⟩ = 2ℓ+λ+1 and ⟨t f̃_ℓ, f̃_{ℓ+1}⟩ = −√((ℓ+1)(λ+ℓ+1)),
/// scaled by a/2; `flip` negates the cross terms (the moment of 𝓕f).
fn moment(f: &SpectralFunction, flip: bool) -> f64 {
    let params = f.params();
    let a = params.a();
    let mut groups: BTreeMap<(usize, usize), BTreeMap<usize, kaf_specfun::Cplx>> = BTreeMap::new();
    for (&(ell, m, j), &c) in f.iter() {
        groups.entry((m, j)).or_default().insert(ell, c);
    }
    let sign = if flip { -1.0 } else { 1.0 };
    let mut acc = 0.0;
    for ((m, _), coeffs) in &groups {
        let lambda = params.lambda(*m);
        for (&ell, c) in coeffs {
            let lf = ell as f64;
            acc += (2.0 * lf + lambda + 1.0) * c.norm_sqr();
            if let Some(next) = coeffs.get(&(ell + 1)) {
                let off = -((lf + 1.0) * (lambda + lf + 1.0)).sqrt();
                acc += sign * 2.0 * off * (next.conj() * c).re;
            }
        }
    }
    acc * a / 2.0
}

/// (lhs, rhs) of the uncertainty inequality
/// ‖‖x‖^{a/2} f‖ ⋅ ‖‖ξ‖^{a/2} 𝓕f‖ ≥ (μ/2) ‖f‖², computed spectrally.
/// Equality holds exactly on the Gaussian ray f = λe^{−c‖x‖ᵃ}.
pub fn heisenberg_product(f: &SpectralFunction) -> Result<(f64, f64), TransformError> {
    if !(f.norm_sq() > 0.0) {
        return Err(TransformError::domain("uncertainty product needs a nonzero function"));
    }
    let mx = moment(f, false);
    let mxi = moment(f, true);
    if !(mx.is_finite() && mxi.is_finite() && mx >= 0.0 && mxi >= 0.0) {
        return Err(TransformError::domain(format!(
            "moment computation produced ({mx}, {mxi}); moments must be finite and nonnegative"
        )));
    }
    Ok(((mx * mxi).sqrt(), f.params().mu() / 2.0 * f.norm_sq()))
}
