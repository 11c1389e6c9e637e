use crate::poly::PolyND;
use crate::DunklError;
use kaf_specfun::gamma::ln_gamma;
use kaf_specfun::gauss::gauss_jacobi_cached;
use kaf_specfun::Cplx;

/// Scaling bₙ with V_k xⁿ = bₙ xⁿ, from the rank-one integral formula
/// V_k f(x) = c_k ∫₋₁¹ f(tx)(1+t)(1−t²)^{k−1} dt and Beta integrals.
pub fn rank1_monomial_scale(n: usize, k: f64) -> Result<f64, DunklError> {
    if k < 0.0 {
        return Err(DunklError::domain(format!("multiplicity must be >= 0, got {k}")));
    }
    if k == 0.0 || n == 0 {
        return Ok(1.0);
    }
    let half = 0.5 * std::f64::consts::PI.ln();
    let ln = if n % 2 == 0 {
        ln_gamma(k + 0.5)? + ln_gamma((n as f64 + 1.0) / 2.0)?
            - half
            - ln_gamma((n as f64 + 1.0) / 2.0 + k)?
    } else {
        ln_gamma(k + 0.5)? + ln_gamma(n as f64 / 2.0 + 1.0)?
            - half
            - ln_gamma(n as f64 / 2.0 + 1.0 + k)?
    };
    Ok(ln.exp())
}

/// Rank-one intertwining operator on a one-variable polynomial:
/// monomial-wise scaling by bₙ.
pub fn intertwiner_rank1(f: &PolyND<f64>, k: f64) -> Result<PolyND<f64>, DunklError> {
    if f.dim() != 1 {
        return Err(DunklError::domain("rank-one intertwiner expects a one-variable polynomial"));
    }
    let mut out = PolyND::zero(1);
    for (e, c) in f.terms() {
        out.add_term(e.clone(), c * rank1_monomial_scale(e[0] as usize, k)?);
    }
    Ok(out)
}

fn vtilde_weights(k: f64, n_nodes: usize) -> Result<(Vec<f64>, Vec<f64>), DunklError> {
    let rule = gauss_jacobi_cached(n_nodes, k - 1.0, k - 1.0)?;
    let ck = (ln_gamma(k + 0.5)? - ln_gamma(k)? - 0.5 * std::f64::consts::PI.ln()).exp();
    let w = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&t, &wq)| ck * wq * (1.0 + t))
        .collect();
    Ok((rule.nodes.clone(), w))
}

/// (Ṽ_k h)(ω, η) on S⁰ × S⁰:
/// c_k ∫ h(tωη)(1+t)(1−t²)^{k−1} dt, with Ṽ₀ h = h(ωη).
pub fn vtilde_rank1(
    h: impl Fn(f64) -> f64,
    omega: f64,
    eta: f64,
    k: f64,
) -> Result<f64, DunklError> {
    if k < 0.0 {
        return Err(DunklError::domain(format!("multiplicity must be >= 0, got {k}")));
    }
    let s = omega * eta;
    if k == 0.0 {
        return Ok(h(s));
    }
    let (nodes, weights) = vtilde_weights(k, 64)?;
    Ok(nodes.iter().zip(&weights).map(|(&t, &w)| w * h(t * s)).sum())
}

/// Complex-profile variant of Ṽ_k, used by the kernel construction.
pub fn vtilde_rank1_profile(
    h: impl Fn(f64) -> Cplx,
    omega: f64,
    eta: f64,
    k: f64,
) -> Result<Cplx, DunklError> {
    if k < 0.0 {
        return Err(DunklError::domain(format!("multiplicity must be >= 0, got {k}")));
    }
    let s = omega * eta;
    if k == 0.0 {
        return Ok(h(s));
    }
    let (nodes, weights) = vtilde_weights(k, 64)?;
    Ok(nodes
        .iter()
        .zip(&weights)
        .fold(Cplx::new(0.0, 0.0), |acc, (&t, &w)| acc + h(t * s) * w))
}
