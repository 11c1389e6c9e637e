use crate::{DeformParams, QuadError};
use kaf_specfun::gauss::{gauss_jacobi_core, gauss_laguerre_core};
use kaf_specfun::Cplx;

#[derive(Debug, Clone, PartialEq)]
pub enum MeasureTag {
    /// t^λ e^{−t} dt on (0, ∞).
    Laguerre { lambda: f64 },
    /// (1−t²)^{ν−1/2} dt on (−1, 1).
    Gegenbauer { nu: f64 },
    /// e^{−(2/a)rᵃ} r^{2m+2⟨k⟩+N+a−3} dr on (0, ∞).
    Radial { params: DeformParams, sector_shift: usize },
}

#[derive(Debug, Clone)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub measure: MeasureTag,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).sum()
    }

    pub fn integrate_complex(&self, f: impl Fn(f64) -> Cplx) -> Cplx {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(Cplx::new(0.0, 0.0), |acc, (&t, &w)| acc + f(t) * w)
    }
}

/// Gauss rule for ∫₀^∞ g(t) t^λ e^{−t} dt, exact for deg g ≤ 2n−1.
pub fn gauss_laguerre(n: usize, lambda: f64) -> Result<QuadRule, QuadError> {
    if n == 0 {
        return Err(QuadError::domain("need at least one node"));
    }
    if lambda <= -1.0 {
        return Err(QuadError::domain(format!("gauss_laguerre requires lambda > -1, got {lambda}")));
    }
    let nw = gauss_laguerre_core(n, lambda)?;
    Ok(QuadRule {
        nodes: nw.nodes,
        weights: nw.weights,
        measure: MeasureTag::Laguerre { lambda },
    })
}

/// Gauss rule for ∫_{−1}^{1} g(t) (1−t²)^{ν−1/2} dt, exact for deg g ≤ 2n−1.
pub fn gauss_gegenbauer(n: usize, nu: f64) -> Result<QuadRule, QuadError> {
    if n == 0 {
        return Err(QuadError::domain("need at least one node"));
    }
    if nu <= -0.5 {
        return Err(QuadError::domain(format!("gauss_gegenbauer requires nu > -1/2, got {nu}")));
    }
    let nw = gauss_jacobi_core(n, nu - 0.5, nu - 0.5)?;
    Ok(QuadRule {
        nodes: nw.nodes,
        weights: nw.weights,
        measure: MeasureTag::Gegenbauer { nu },
    })
}

/// Rule for ∫₀^∞ g(r) e^{−(2/a)rᵃ} r^{2m+2⟨k⟩+N+a−3} dr, exact when g is
/// a polynomial in rᵃ of degree ≤ 2n−1. Built from the Laguerre rule of
/// index λ_{k,a,m} by the substitution t = (2/a) rᵃ:
/// nodes rᵢ = (a tᵢ/2)^{1/a}, weights (1/a)(a/2)^{λ+1} wᵢ.
pub fn radial_rule(n: usize, params: &DeformParams, sector_shift: usize) -> Result<QuadRule, QuadError> {
    let a = params.a();
    let lambda = params.lambda(sector_shift);
    if lambda <= -1.0 {
        return Err(QuadError::domain(format!(
            "radial measure needs 2m+2<k>+N+a-2 > 0 (lambda_{{k,a,m}} > -1), got lambda = {lambda}"
        )));
    }
    let nw = gauss_laguerre_core(n, lambda)?;
    let scale = (a / 2.0).powf(lambda + 1.0) / a;
    Ok(QuadRule {
        nodes: nw.nodes.iter().map(|&t| (a * t / 2.0).powf(1.0 / a)).collect(),
        weights: nw.weights.iter().map(|&w| scale * w).collect(),
        measure: MeasureTag::Radial { params: params.clone(), sector_shift },
    })
}
