//! Gegenbauer (ultraspherical) polynomials C_m^ν, the ν → 0 limit,
//! and the normalized Gegenbauer transform against the weight
//! (1−t²)^{ν−1/2} on (−1, 1).

use crate::gamma::{ln_gamma, pochhammer};
use crate::gauss::gauss_jacobi_cached;
use crate::{Cplx, SpecFunError};
use num_traits::{Float, FromPrimitive};

/// C_m^ν(t) by the three-term recurrence
/// m C_m = 2(m+ν−1) t C_{m−1} − (m+2ν−2) C_{m−2}.
pub fn gegenbauer<F: Float + FromPrimitive>(m: usize, nu: F, t: F) -> F {
    let one = F::one();
    let two = F::from_f64(2.0).unwrap();
    if m == 0 {
        return one;
    }
    let mut prev = one;
    let mut curr = two * nu * t;
    for k in 2..=m {
        let kf = F::from_usize(k).unwrap();
        let next = (two * (kf + nu - one) * t * curr - (kf + two * nu - two) * prev) / kf;
        prev = curr;
        curr = next;
    }
    curr
}

/// lim_{ν→0} C_m^ν(t)/ν = (2/m) cos(m arccos t), for m ≥ 1.
pub fn gegenbauer_nu0_limit(m: usize, t: f64) -> Result<f64, SpecFunError> {
    if m == 0 {
        return Err(SpecFunError::domain(
            "the nu -> 0 limit of C_m/nu is defined for m >= 1",
        ));
    }
    let theta = t.clamp(-1.0, 1.0).acos();
    Ok(2.0 / m as f64 * (m as f64 * theta).cos())
}

/// Finite trigonometric sum
/// C_m^ν(cos θ) = Σ_j (ν)_j (ν)_{m−j} / (j! (m−j)!) cos((m−2j)θ);
/// used as an independent cross-check of the recurrence.
pub fn gegenbauer_cos_sum(m: usize, nu: f64, theta: f64) -> f64 {
    (0..=m)
        .map(|j| {
            let coef = pochhammer(nu, j) * pochhammer(nu, m - j)
                / (pochhammer(1.0, j) * pochhammer(1.0, m - j));
            coef * ((m as f64 - 2.0 * j as f64) * theta).cos()
        })
        .sum()
}

/// Normalization constant b_{ν,m} = 2^{2ν−1} m! Γ(ν) Γ(ν+1) / (π Γ(m+2ν)).
pub fn gegenbauer_b(m: usize, nu: f64) -> Result<f64, SpecFunError> {
    if nu <= 0.0 {
        return Err(SpecFunError::domain(format!(
            "Gegenbauer transform normalization requires nu > 0, got {nu}"
        )));
    }
    let ln = (2.0 * nu - 1.0) * std::f64::consts::LN_2 + ln_gamma(m as f64 + 1.0)?
        + ln_gamma(nu)?
        + ln_gamma(nu + 1.0)?
        - std::f64::consts::PI.ln()
        - ln_gamma(m as f64 + 2.0 * nu)?;
    Ok(ln.exp())
}

/// Gegenbauer transform of a real-valued profile:
/// b_{ν,m} ∫_{−1}^{1} h(t) C_m^ν(t) (1−t²)^{ν−1/2} dt.
pub fn gegenbauer_transform(
    m: usize,
    nu: f64,
    h: impl Fn(f64) -> f64,
    n_nodes: usize,
) -> Result<f64, SpecFunError> {
    let r = gegenbauer_transform_complex(m, nu, |t| Cplx::new(h(t), 0.0), n_nodes)?;
    Ok(r.re)
}

/// Gegenbauer transform of a complex-valued profile.
pub fn gegenbauer_transform_complex(
    m: usize,
    nu: f64,
    h: impl Fn(f64) -> Cplx,
    n_nodes: usize,
) -> Result<Cplx, SpecFunError> {
    if n_nodes < m / 2 + 1 {
        return Err(SpecFunError::domain(format!(
            "{n_nodes} nodes cannot integrate a degree-{m} polynomial factor exactly"
        )));
    }
    let rule = gauss_jacobi_cached(n_nodes, nu - 0.5, nu - 0.5)?;
    let b = gegenbauer_b(m, nu)?;
    let mut acc = Cplx::new(0.0, 0.0);
    for (&t, &w) in rule.nodes.iter().zip(&rule.weights) {
        acc += h(t) * gegenbauer(m, nu, t) * w;
    }
    Ok(acc * b)
}
