//! The one-variable Hankel-type transform
//! H_{a,ν}(ψ)(s) = ∫₀^∞ ψ(r) J̃_ν((2/a)(rs)^{a/2}) r^{a(ν+1)−1} dr,
//! through which the deformed transform acts on harmonic-times-radial
//! functions.

use crate::TransformError;
use kaf_specfun::bessel::bessel_j_tilde;
use kaf_specfun::gauss::gauss_laguerre_core;
use kaf_specfun::Cplx;

/// H_{a,ν}(ψ) at each requested s. The substitution u = rᵃ/a gives
/// ∫ψ J̃_ν r^{a(ν+1)−1}dr = a^ν ∫ ψ((au)^{1/a}) J̃_ν((2/a)(au)^{a/2⋅(1/a)}…) u^ν du,
/// matched to Gauss–Laguerre with exponent ν, so ψ of Gaussian-type decay
/// e^{−rᵃ/a} yields a bounded transformed integrand.
pub fn hankel(
    psi: &dyn Fn(f64) -> Cplx,
    s_out: &[f64],
    a: f64,
    nu: f64,
    n_nodes: usize,
) -> Result<Vec<Cplx>, TransformError> {
    if !(a > 0.0) {
        return Err(TransformError::domain(format!("needs a > 0, got {a}")));
    }
    if !(nu > -1.0) {
        return Err(TransformError::domain(format!(
            "Hankel order must satisfy nu > -1 for an integrable weight, got {nu}"
        )));
    }
    let rule = gauss_laguerre_core(n_nodes, nu)?;
    let samples: Vec<(f64, f64, Cplx)> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .filter(|(_, &w)| w > 0.0)
        .map(|(&u, &w)| {
            let r = (a * u).powf(1.0 / a);
            ((w.ln() + u + nu * a.ln()).exp(), r, psi(r))
        })
        .collect();
    let mut out = Vec::with_capacity(s_out.len());
    for &s in s_out {
        if !(s >= 0.0) {
            return Err(TransformError::domain(format!(
                "radial output point must be >= 0, got {s}"
            )));
        }
        let mut acc = Cplx::new(0.0, 0.0);
        for &(w, r, v) in &samples {
            let arg = 2.0 / a * (r * s).powf(a / 2.0);
            acc += v * bessel_j_tilde(nu, Cplx::new(arg, 0.0))? * w;
        }
        out.push(acc);
    }
    Ok(out)
}
