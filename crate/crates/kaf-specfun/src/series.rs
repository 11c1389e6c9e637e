//! The four-variable Bessel–Gegenbauer series
//!   𝓘(b,ν;w;t) = (Γ(bν+1)/ν) Σ_m (m+ν) (w/2)^{bm} Ĩ_{b(m+ν)}(w) C_m^ν(t),
//! defined on 1+bν > 0, together with the Hille–Hardy product series for
//! Laguerre polynomials and its closed form.

use crate::bessel::bessel_i_tilde;
use crate::gamma::gamma;
use crate::gegenbauer::{gegenbauer, gegenbauer_nu0_limit};
use crate::laguerre::laguerre;
use crate::{Cplx, SeriesResult, SpecFunError, SERIES_MAX_TERMS, SERIES_TOL};

/// (w/2)^p with integer exponents routed through `powi` so that integer
/// b·m never picks up a branch-cut discontinuity.
fn half_w_pow(w: Cplx, p: f64) -> Cplx {
    let half = w * 0.5;
    if p == 0.0 {
        Cplx::new(1.0, 0.0)
    } else if p.fract() == 0.0 && p.abs() < 1e9 {
        half.powi(p as i32)
    } else {
        half.powc(Cplx::new(p, 0.0))
    }
}

/// Number of consecutive below-tolerance terms required before the
/// Gegenbauer-oscillatory series is declared converged.
const QUIET_TERMS: usize = 4;

/// 𝓘(b,ν;w;t). At ν = 0 the ν-limit of the summand is used.
pub fn i_fun(b: f64, nu: f64, w: Cplx, t: f64) -> Result<SeriesResult, SpecFunError> {
    if b <= 0.0 {
        return Err(SpecFunError::domain(format!("i_fun requires b > 0, got {b}")));
    }
    if 1.0 + b * nu <= 0.0 {
        return Err(SpecFunError::domain(format!(
            "i_fun requires 1 + b*nu > 0, got b = {b}, nu = {nu}"
        )));
    }
    if !(-1.0..=1.0).contains(&t) {
        return Err(SpecFunError::domain(format!("i_fun requires t in [-1,1], got {t}")));
    }
    let prefactor = gamma(b * nu + 1.0)?;
    let mut sum = Cplx::new(0.0, 0.0);
    let mut quiet = 0usize;
    let mut tail = 0.0;
    for m in 0..SERIES_MAX_TERMS {
        let mf = m as f64;
        let angular = if nu != 0.0 {
            (mf + nu) / nu * gegenbauer(m, nu, t)
        } else if m == 0 {
            // lim_{ν→0} (ν+0)/ν C_0 = 1.
            1.0
        } else {
            // lim_{ν→0} (m+ν)/ν C_m^ν = m · lim C_m^ν/ν.
            mf * gegenbauer_nu0_limit(m, t)?
        };
        let term = half_w_pow(w, b * mf) * bessel_i_tilde(b * (mf + nu), w)? * angular;
        sum += term;
        if term.norm() <= SERIES_TOL * (1.0 + sum.norm()) {
            quiet += 1;
            tail += term.norm();
            if quiet >= QUIET_TERMS {
                return Ok(SeriesResult {
                    value: sum * prefactor,
                    terms_used: m + 1,
                    truncation_error_estimate: tail * prefactor,
                });
            }
        } else {
            quiet = 0;
            tail = 0.0;
        }
    }
    Err(SpecFunError::NonConvergence {
        terms: SERIES_MAX_TERMS,
        tol: SERIES_TOL,
        last: tail,
    })
}

/// Closed form of 𝓘 at b = 1: e^{wt}.
pub fn i_fun_closed_b1(w: Cplx, t: f64) -> Cplx {
    (w * t).exp()
}

/// Closed form of 𝓘 at b = 2: Γ(ν+1/2) Ĩ_{ν−1/2}(w √((1+t)/2)).
pub fn i_fun_closed_b2(nu: f64, w: Cplx, t: f64) -> Result<Cplx, SpecFunError> {
    let arg = w * (0.5 * (1.0 + t)).sqrt();
    Ok(bessel_i_tilde(nu - 0.5, arg)? * gamma(nu + 0.5)?)
}

/// Partial sum Σ_{κ<n} Γ(κ+1)/Γ(λ+κ+1) L_κ^{(λ)}(u) L_κ^{(λ)}(v) w^κ.
pub fn hille_hardy_lhs(lambda: f64, u: f64, v: f64, w: Cplx, n_terms: usize) -> Result<Cplx, SpecFunError> {
    if w.norm() >= 1.0 {
        return Err(SpecFunError::domain(format!(
            "Hille–Hardy series requires |w| < 1, got {}",
            w.norm()
        )));
    }
    let mut ratio = 1.0 / gamma(lambda + 1.0)?; // Γ(κ+1)/Γ(λ+κ+1) at κ = 0
    let mut wpow = Cplx::new(1.0, 0.0);
    let mut sum = Cplx::new(0.0, 0.0);
    for kappa in 0..n_terms {
        sum += wpow * ratio * laguerre(kappa, lambda, u) * laguerre(kappa, lambda, v);
        ratio *= (kappa as f64 + 1.0) / (lambda + kappa as f64 + 1.0);
        wpow *= w;
    }
    Ok(sum)
}

/// Closed form of the Hille–Hardy sum:
/// (1−w)^{−λ−1} exp(−(u+v)w/(1−w)) Ĩ_λ(2√(uvw)/(1−w)).
pub fn hille_hardy_closed(lambda: f64, u: f64, v: f64, w: Cplx) -> Result<Cplx, SpecFunError> {
    let one = Cplx::new(1.0, 0.0);
    let omw = one - w;
    let pref = omw.powc(Cplx::new(-lambda - 1.0, 0.0));
    let expf = (-(w / omw) * (u + v)).exp();
    // Ĩ_λ is even, so the square-root branch is immaterial.
    let arg = (w * u * v).sqrt() * 2.0 / omw;
    Ok(pref * expf * bessel_i_tilde(lambda, arg)?)
}
