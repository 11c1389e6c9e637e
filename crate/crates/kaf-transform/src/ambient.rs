//! Quadrature on ℝᴺ against the weight ϑ_{k,a}(x) = ‖x‖^{a−2}∏|xᵢ|^{2kᵢ}:
//! a sphere rule that absorbs the angular weight ∏|ωᵢ|^{2kᵢ} (Gauss–Jacobi
//! per quadrant, so the |ωᵢ|-kinks cost no accuracy), times a radial
//! Gauss–Laguerre rule in u = rᵃ/a matched to Gaussian-type decay e^{−rᵃ/a}.

use crate::TransformError;
use kaf_dunkl::sphere_quadrature;
use kaf_quadrature::DeformParams;
use kaf_specfun::gauss::gauss_jacobi_core;
use kaf_specfun::gauss::gauss_laguerre_core;
use kaf_specfun::Cplx;

/// Quadrature on S^{N−1} with the weight ∏|ωᵢ|^{2kᵢ} dσ folded into the
/// weights. Supports N ≤ 3.
pub fn weighted_sphere_rule(
    params: &DeformParams,
    n: usize,
) -> Result<(Vec<Vec<f64>>, Vec<f64>), TransformError> {
    let k = params.k();
    let k_zero = k.iter().all(|&ki| ki == 0.0);
    match params.dim() {
        1 => Ok((vec![vec![1.0], vec![-1.0]], vec![1.0, 1.0])),
        2 => {
            if k_zero {
                return Ok(sphere_quadrature(2, n.max(8))?);
            }
            // Per quadrant, u = sin²θ turns ∫|cosθ|^{2k₁}|sinθ|^{2k₂} g dθ
            // into a Jacobi(k₁−1/2, k₂−1/2) integral with smooth g.
            let rule = gauss_jacobi_core(n.max(8), k[0] - 0.5, k[1] - 0.5)?;
            let scale = 2f64.powf(-1.0 - k[0] - k[1]);
            let mut pts = Vec::new();
            let mut wts = Vec::new();
            for (&xq, &wq) in rule.nodes.iter().zip(&rule.weights) {
                let u = (1.0 + xq) / 2.0;
                let c = (1.0 - u).max(0.0).sqrt();
                let s = u.max(0.0).sqrt();
                for (sc, ss) in [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
                    pts.push(vec![sc * c, ss * s]);
                    wts.push(wq * scale);
                }
            }
            Ok((pts, wts))
        }
        3 => {
            if k_zero {
                return Ok(sphere_quadrature(3, n.max(8))?);
            }
            let k12 = k[0] + k[1];
            // Polar rule in u = cos φ with weight |u|^{2k₃}(1−u²)^{k₁+k₂};
            // for k₃ > 0 the |u|-kink is removed by v = u² per half.
            let (unodes, uweights): (Vec<f64>, Vec<f64>) = if k[2] == 0.0 {
                let rule = gauss_jacobi_core(n.max(8), k12, k12)?;
                (rule.nodes.clone(), rule.weights.clone())
            } else {
                let rule = gauss_jacobi_core(n.max(8), k12, k[2] - 0.5)?;
                let scale = 2f64.powf(-(k[2] - 0.5) - k12 - 1.0) * 0.5;
                let mut un = Vec::new();
                let mut uw = Vec::new();
                for (&xq, &wq) in rule.nodes.iter().zip(&rule.weights) {
                    let v = (1.0 + xq) / 2.0;
                    for sign in [1.0, -1.0] {
                        un.push(sign * v.max(0.0).sqrt());
                        uw.push(wq * scale);
                    }
                }
                (un, uw)
            };
            // Azimuthal rule with weight |cosθ|^{2k₁}|sinθ|^{2k₂}.
            let flat = DeformParams::new(2, params.a(), vec![k[0], k[1]])
                .map_err(|e| TransformError::domain(e.to_string()))?;
            let (tpts, twts) = weighted_sphere_rule(&flat, n)?;
            let mut pts = Vec::new();
            let mut wts = Vec::new();
            for (&u, &wu) in unodes.iter().zip(&uweights) {
                let sphi = (1.0 - u * u).max(0.0).sqrt();
                for (t, &wt) in tpts.iter().zip(&twts) {
                    pts.push(vec![sphi * t[0], sphi * t[1], u]);
                    wts.push(wu * wt);
                }
            }
            Ok((pts, wts))
        }
        d => Err(TransformError::domain(format!(
            "weighted sphere rule implemented for N <= 3, got N = {d}"
        ))),
    }
}

/// Product quadrature approximating ∫_{ℝᴺ} g(x) ϑ_{k,a}(x) dx for g with
/// Gaussian-type decay (|g| ≲ e^{−c rᵃ}, c ≳ 1/(2a) beyond the node range).
pub struct AmbientGrid {
    params: DeformParams,
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    shell: Vec<usize>,
    n_shells: usize,
}

impl AmbientGrid {
    pub fn new(
        params: &DeformParams,
        n_radial: usize,
        n_angular: usize,
    ) -> Result<Self, TransformError> {
        let a = params.a();
        let p = params.mu() / a - 1.0;
        // ∫ g r^{μ−1} dr = a^{μ/a−1} ∫ g((au)^{1/a}) u^{μ/a−1} du, then
        // Gauss–Laguerre in u with the e^{−u} restored in log space (the
        // separate factors overflow/underflow long before their product).
        let radial = gauss_laguerre_core(n_radial, p)?;
        let (om, ow) = weighted_sphere_rule(params, n_angular)?;
        let lna = p * a.ln();
        let mut points = Vec::with_capacity(n_radial * om.len());
        let mut weights = Vec::with_capacity(n_radial * om.len());
        let mut shell = Vec::with_capacity(n_radial * om.len());
        for (i, (&u, &wu)) in radial.nodes.iter().zip(&radial.weights).enumerate() {
            if wu <= 0.0 {
                continue;
            }
            let wr = (wu.ln() + u + lna).exp();
            let r = (a * u).powf(1.0 / a);
            for (omega, &wo) in om.iter().zip(&ow) {
                points.push(omega.iter().map(|&c| c * r).collect());
                weights.push(wr * wo);
                shell.push(i);
            }
        }
        Ok(AmbientGrid { params: params.clone(), points, weights, shell, n_shells: n_radial })
    }

    pub fn params(&self) -> &DeformParams {
        &self.params
    }

    /// ∫ g ϑ_{k,a} dx by the grid, no decay diagnostics.
    pub fn integrate(&self, g: impl Fn(&[f64]) -> Cplx) -> Cplx {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(x, &w)| g(x) * w)
            .sum()
    }

    /// ∫ |g|² ϑ_{k,a} dx.
    pub fn norm_sq(&self, g: impl Fn(&[f64]) -> Cplx) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(x, &w)| g(x).norm_sqr() * w)
            .sum()
    }

    /// Fraction of Σ w|g| carried by the outermost radial shell; large
    /// values mean g does not decay fast enough for this rule.
    pub fn tail_fraction(&self, values: &[Cplx]) -> f64 {
        let mut per_shell = vec![0.0f64; self.n_shells];
        for ((&s, &w), v) in self.shell.iter().zip(&self.weights).zip(values) {
            per_shell[s] += w * v.norm();
        }
        let total: f64 = per_shell.iter().sum();
        let last = per_shell.iter().rev().find(|&&x| x > 0.0).copied().unwrap_or(0.0);
        if total > 0.0 {
            last / total
        } else {
            0.0
        }
    }
}
