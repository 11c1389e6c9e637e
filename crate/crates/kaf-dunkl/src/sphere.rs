use crate::intertwiner::vtilde_rank1;
use crate::poly::PolyND;
use crate::{DeformParams, DunklError};
use kaf_specfun::gamma::ln_gamma;
use kaf_specfun::gauss::gauss_jacobi_core;

pub type SpherePoint = Vec<f64>;

/// ∫_{S^{N−1}} ∏ |ωᵢ|^{pᵢ} dσ(ω) = 2 ∏ Γ((pᵢ+1)/2) / Γ(Σ(pᵢ+1)/2),
/// for real exponents pᵢ ≥ 0 (unnormalized surface measure).
pub fn sphere_monomial_integral(exps: &[f64]) -> Result<f64, DunklError> {
    if exps.iter().any(|&p| p < 0.0) {
        return Err(DunklError::domain("sphere monomial exponents must be >= 0"));
    }
    let mut ln = 2f64.ln();
    let mut total = 0.0;
    for &p in exps {
        ln += ln_gamma((p + 1.0) / 2.0)?;
        total += (p + 1.0) / 2.0;
    }
    Ok((ln - ln_gamma(total)?).exp())
}

/// ⟨p, q⟩ = d_k ∫_{S^{N−1}} p q ϑ_k dσ, exact (Gamma closed form per
/// monomial pair; odd exponents integrate to zero).
pub fn sphere_inner_product(
    p: &PolyND<f64>,
    q: &PolyND<f64>,
    params: &DeformParams,
) -> Result<f64, DunklError> {
    let k = params.k();
    let mut acc = 0.0;
    for (e1, c1) in p.terms() {
        for (e2, c2) in q.terms() {
            if e1.iter().zip(e2).any(|(a, b)| (a + b) % 2 == 1) {
                continue;
            }
            let exps: Vec<f64> = e1
                .iter()
                .zip(e2)
                .zip(k)
                .map(|((a, b), &ki)| (a + b) as f64 + 2.0 * ki)
                .collect();
            acc += c1 * c2 * sphere_monomial_integral(&exps)?;
        }
    }
    Ok(acc * d_k(params)?)
}

/// d_k = Γ(⟨k⟩ + N/2) / (2 ∏ Γ(kᵢ + 1/2)): the reciprocal of
/// ∫_{S^{N−1}} ϑ_k dσ.
pub fn d_k(params: &DeformParams) -> Result<f64, DunklError> {
    let mut ln = ln_gamma(params.index() + params.dim() as f64 / 2.0)? - 2f64.ln();
    for &ki in params.k() {
        ln -= ln_gamma(ki + 0.5)?;
    }
    Ok(ln.exp())
}

/// c_{k,a} = a^{−(2⟨k⟩+N−2)/a} Γ(μ/a)^{−1} d_k: the reciprocal of
/// ∫ e^{−‖x‖ᵃ/a} ϑ_{k,a}(x) dx.
pub fn c_ka(params: &DeformParams) -> Result<f64, DunklError> {
    let a = params.a();
    let expo = (2.0 * params.index() + params.dim() as f64 - 2.0) / a;
    Ok((-expo * a.ln() - ln_gamma(params.mu() / a)?).exp() * d_k(params)?)
}

/// Product quadrature on S^{N−1} for N ∈ {1, 2, 3}; weights sum to the
/// surface measure. For N = 1 the "sphere" is {±1} with counting measure.
pub fn sphere_quadrature(dim: usize, n: usize) -> Result<(Vec<SpherePoint>, Vec<f64>), DunklError> {
    match dim {
        1 => Ok((vec![vec![1.0], vec![-1.0]], vec![1.0, 1.0])),
        2 => {
            let w = 2.0 * std::f64::consts::PI / n as f64;
            let mut pts = Vec::with_capacity(n);
            for j in 0..n {
                let th = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                pts.push(vec![th.cos(), th.sin()]);
            }
            Ok((pts, vec![w; n]))
        }
        3 => {
            // Gauss–Legendre in cos φ × trapezoid in θ.
            let gl = gauss_jacobi_core(n, 0.0, 0.0)?;
            let nth = 2 * n;
            let wth = 2.0 * std::f64::consts::PI / nth as f64;
            let mut pts = Vec::with_capacity(n * nth);
            let mut wts = Vec::with_capacity(n * nth);
            for (&c, &wc) in gl.nodes.iter().zip(&gl.weights) {
                let s = (1.0 - c * c).max(0.0).sqrt();
                for j in 0..nth {
                    let th = 2.0 * std::f64::consts::PI * j as f64 / nth as f64;
                    pts.push(vec![s * th.cos(), s * th.sin(), c]);
                    wts.push(wc * wth);
                }
            }
            Ok((pts, wts))
        }
        _ => Err(DunklError::domain(format!(
            "sphere quadrature implemented for N <= 3, got N = {dim}"
        ))),
    }
}

/// Funk–Hecke residual
/// |d_k ∫ (Ṽ_k h)(ω,η) p(η) ϑ_k(η) dσ(η) − 𝓒_{ν,m}(h) p(ω)|
/// with ν = ⟨k⟩ + (N−2)/2, in the two scopes with a closed Ṽ_k:
/// N = 1 (any k ≥ 0) and N = 3 with k ≡ 0.
pub fn funk_hecke_check(
    h: impl Fn(f64) -> f64,
    p: &PolyND<f64>,
    m: usize,
    omega: &[f64],
    params: &DeformParams,
) -> Result<f64, DunklError> {
    let dim = params.dim();
    if dim == 1 {
        let k = params.k()[0];
        let w = omega[0];
        // LHS over S⁰ = {±1}, ϑ_k ≡ 1, d_k = 1/2.
        let lhs = 0.5
            * (vtilde_rank1(&h, w, 1.0, k)? * p.eval(&[1.0])
                + vtilde_rank1(&h, w, -1.0, k)? * p.eval(&[-1.0]));
        // The ν = k − 1/2 Gegenbauer transform collapses to a Beta-weight
        // moment: 𝓒_{ν,m}(h) = c_k ∫ h(t) tᵐ (1−t²)^{k−1} dt, m ∈ {0,1}.
        if m > 1 {
            return Err(DunklError::domain("N = 1 has harmonic degrees m <= 1 only"));
        }
        let transform = if k == 0.0 {
            0.5 * (h(1.0) + if m == 1 { -h(-1.0) } else { h(-1.0) })
        } else {
            let rule = gauss_jacobi_core(64, k - 1.0, k - 1.0)?;
            let ck = (ln_gamma(k + 0.5)? - ln_gamma(k)? - 0.5 * std::f64::consts::PI.ln()).exp();
            ck * rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(&t, &wq)| wq * h(t) * t.powi(m as i32))
                .sum::<f64>()
        };
        return Ok((lhs - transform * p.eval(omega)).abs());
    }
    if dim == 3 && params.index() == 0.0 {
        let nu = 0.5; // ⟨k⟩ + (N−2)/2
        let (pts, wts) = sphere_quadrature(3, 48)?;
        let lhs: f64 = d_k(params)?
            * pts
                .iter()
                .zip(&wts)
                .map(|(eta, &w)| {
                    let dot: f64 = omega.iter().zip(eta).map(|(a, b)| a * b).sum();
                    w * h(dot.clamp(-1.0, 1.0)) * p.eval(eta)
                })
                .sum::<f64>();
        let transform =
            kaf_specfun::gegenbauer::gegenbauer_transform(m, nu, &h, 64).map_err(DunklError::from)?;
        return Ok((lhs - transform * p.eval(omega)).abs());
    }
    Err(DunklError::domain(
        "Funk-Hecke check supported for N = 1 (any k) or N = 3 with k = 0",
    ))
}
