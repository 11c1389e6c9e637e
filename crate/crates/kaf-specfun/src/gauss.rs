//! Golub–Welsch construction of Gaussian quadrature rules from the
//! closed-form three-term recurrence coefficients of the classical
//! orthogonal polynomial families. Hosted here (below the quadrature
//! crate) because large-argument Bessel evaluation needs Gauss–Jacobi
//! nodes internally.

use crate::gamma::{gamma, ln_gamma};
use crate::SpecFunError;
use nalgebra::DMatrix;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes and weights, nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct NodesWeights {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Eigen-decomposition of the symmetric tridiagonal Jacobi matrix.
/// `offdiag_sq` holds the squared off-diagonal entries; `mu0` is the
/// total mass of the measure.
pub fn golub_welsch(
    diag: &[f64],
    offdiag_sq: &[f64],
    mu0: f64,
) -> Result<NodesWeights, SpecFunError> {
    let n = diag.len();
    assert_eq!(offdiag_sq.len() + 1, n);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
    }
    for i in 0..n - 1 {
        let b = offdiag_sq[i];
        if !(b > 0.0) {
            return Err(SpecFunError::domain(format!(
                "nonpositive recurrence coefficient beta_{} = {b}",
                i + 1
            )));
        }
        let b = b.sqrt();
        m[(i, i + 1)] = b;
        m[(i + 1, i)] = b;
    }
    let eig = m.symmetric_eigen();
    let offdiag: Vec<f64> = offdiag_sq.iter().map(|&b| b.sqrt()).collect();
    // The eigenvector first components are not accurate enough for
    // weights at larger n; instead polish each eigenvalue by Newton on
    // the orthonormal polynomial p_n and take the Christoffel weight
    // w = 1/Σ_{k<n} p_k(t)².
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|j| {
            let mut t = eig.eigenvalues[j];
            for _ in 0..3 {
                let (pn, dpn, _) = ortho_eval(diag, &offdiag, mu0, t);
                let step = pn / dpn;
                if !step.is_finite() {
                    break;
                }
                t -= step;
            }
            let (_, _, christoffel) = ortho_eval(diag, &offdiag, mu0, t);
            (t, 1.0 / christoffel)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(NodesWeights {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Evaluates the orthonormal polynomials of the recurrence
/// t p_k = β_k p_{k−1} + a_k p_k + β_{k+1} p_{k+1} at t, returning
/// (p_n, p_n', Σ_{k<n} p_k²).
fn ortho_eval(diag: &[f64], offdiag: &[f64], mu0: f64, t: f64) -> (f64, f64, f64) {
    let n = diag.len();
    let mut p_prev = 0.0;
    let mut dp_prev = 0.0;
    let mut p = 1.0 / mu0.sqrt();
    let mut dp = 0.0;
    let mut sumsq = p * p;
    for k in 0..n {
        let beta_next = if k < n - 1 { offdiag[k] } else { 1.0 };
        let beta_prev = if k > 0 { offdiag[k - 1] } else { 0.0 };
        let p_next = ((t - diag[k]) * p - beta_prev * p_prev) / beta_next;
        let dp_next = ((t - diag[k]) * dp + p - beta_prev * dp_prev) / beta_next;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
        if k < n - 1 {
            sumsq += p * p;
        }
    }
    (p, dp, sumsq)
}

/// Gauss rule for the weight t^lambda e^{−t} on (0, ∞).
pub fn gauss_laguerre_core(n: usize, lambda: f64) -> Result<NodesWeights, SpecFunError> {
    if n == 0 {
        return Err(SpecFunError::domain("rule order must be at least 1"));
    }
    if lambda <= -1.0 {
        return Err(SpecFunError::domain(format!(
            "Laguerre weight requires lambda > -1, got {lambda}"
        )));
    }
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + lambda + 1.0).collect();
    let offdiag_sq: Vec<f64> = (1..n).map(|k| k as f64 * (k as f64 + lambda)).collect();
    golub_welsch(&diag, &offdiag_sq, gamma(lambda + 1.0)?)
}

/// Gauss rule for the weight (1−t)^alpha (1+t)^beta on (−1, 1).
pub fn gauss_jacobi_core(n: usize, alpha: f64, beta: f64) -> Result<NodesWeights, SpecFunError> {
    if n == 0 {
        return Err(SpecFunError::domain("rule order must be at least 1"));
    }
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(SpecFunError::domain(format!(
            "Jacobi weight requires alpha, beta > -1, got ({alpha}, {beta})"
        )));
    }
    let ab = alpha + beta;
    let mut diag = Vec::with_capacity(n);
    let mut offdiag_sq = Vec::with_capacity(n.saturating_sub(1));
    diag.push((beta - alpha) / (ab + 2.0));
    for k in 1..n {
        let kf = k as f64;
        let denom = (2.0 * kf + ab) * (2.0 * kf + ab + 2.0);
        diag.push((beta * beta - alpha * alpha) / denom);
        // For k = 1 the factor (k+α+β) cancels against the denominator,
        // which keeps the formula finite at α+β = −1.
        let (num, den) = if k == 1 {
            (
                4.0 * (1.0 + alpha) * (1.0 + beta),
                (2.0 + ab).powi(2) * (3.0 + ab),
            )
        } else {
            (
                4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab),
                (2.0 * kf + ab).powi(2) * (2.0 * kf + ab + 1.0) * (2.0 * kf + ab - 1.0),
            )
        };
        offdiag_sq.push(num / den);
    }
    // mu0 = 2^{α+β+1} B(α+1, β+1), computed in log space to survive large α+β.
    let mu0 = ((ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0)?
        + ln_gamma(beta + 1.0)?
        - ln_gamma(ab + 2.0)?)
    .exp();
    golub_welsch(&diag, &offdiag_sq, mu0)
}

type JacobiKey = (usize, u64, u64);

fn jacobi_cache() -> &'static Mutex<HashMap<JacobiKey, Arc<NodesWeights>>> {
    static CACHE: OnceLock<Mutex<HashMap<JacobiKey, Arc<NodesWeights>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cached Gauss–Jacobi rule; repeated kernel evaluations share rules.
pub fn gauss_jacobi_cached(
    n: usize,
    alpha: f64,
    beta: f64,
) -> Result<Arc<NodesWeights>, SpecFunError> {
    let key = (n, alpha.to_bits(), beta.to_bits());
    if let Some(rule) = jacobi_cache().lock().unwrap().get(&key) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(gauss_jacobi_core(n, alpha, beta)?);
    jacobi_cache()
        .lock()
        .unwrap()
        .insert(key, rule.clone());
    Ok(rule)
}
