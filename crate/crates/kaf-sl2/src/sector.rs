use crate::{Cplx, DeformParams, Sl2Error};
use kaf_specfun::gamma::ln_gamma;
use kaf_specfun::gauss::gauss_laguerre_core;
use kaf_specfun::laguerre::{laguerre, laguerre_coeffs};

/// A fixed harmonic degree m inside fixed deformation data, carrying the
/// Laguerre index λ_{k,a,m} = (2m + 2⟨k⟩ + N − 2)/a of its radial measure.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSector {
    m: usize,
    lambda: f64,
    params: DeformParams,
}

impl RadialSector {
    /// Requires λ_{k,a,m} > −1, i.e. 2m + 2⟨k⟩ + N + a − 2 > 0.
    pub fn new(m: usize, params: &DeformParams) -> Result<Self, Sl2Error> {
        let lambda = params.lambda(m);
        if !(lambda > -1.0) {
            return Err(Sl2Error::domain(format!(
                "sector needs 2m+2<k>+N+a-2 > 0 (lambda > -1), got lambda = {lambda}"
            )));
        }
        Ok(RadialSector { m, lambda, params: params.clone() })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn params(&self) -> &DeformParams {
        &self.params
    }
}

/// ‖rᵐ L_ℓ^{(λ)}((2/a)rᵃ) e^{−rᵃ/a}‖² in L²(ℝ₊, r^{2⟨k⟩+N+a−3} dr):
/// aᵞ Γ(λ+ℓ+1) / (2^{1+λ} Γ(ℓ+1)) with γ = λ.
pub fn phi_norm_sq_unnormalized(ell: usize, sector: &RadialSector) -> Result<f64, Sl2Error> {
    let lambda = sector.lambda();
    let a = sector.params().a();
    Ok((lambda * a.ln() + ln_gamma(lambda + ell as f64 + 1.0)?
        - (1.0 + lambda) * 2f64.ln()
        - ln_gamma(ell as f64 + 1.0)?)
        .exp())
}

/// f_{ℓ,m}^{(a)}(r): the orthonormal radial basis function of the sector,
/// (2^{λ+1} Γ(ℓ+1) / (aᵞ Γ(λ+ℓ+1)))^{1/2} rᵐ L_ℓ^{(λ)}((2/a)rᵃ) e^{−rᵃ/a}.
pub fn phi_basis(ell: usize, sector: &RadialSector, r: f64) -> Result<f64, Sl2Error> {
    if !(r > 0.0) {
        return Err(Sl2Error::domain(format!("radial argument must be positive, got {r}")));
    }
    let a = sector.params().a();
    let lambda = sector.lambda();
    let norm = 1.0 / phi_norm_sq_unnormalized(ell, sector)?.sqrt();
    let t = 2.0 / a * r.powf(a);
    Ok(norm * r.powf(sector.m() as f64) * laguerre(ell, lambda, t) * (-r.powf(a) / a).exp())
}

/// A function of sector form p(x)ψ(‖x‖ᵃ) with ψ(u) = q(u)e^{−u/a} for a
/// polynomial q, stored through q's coefficients in ascending degree.
/// The harmonic factor p is carried implicitly: the sl₂ operators act on ψ
/// only. The eigenfunctions Φ_ℓ live in this class.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorFunction {
    sector: RadialSector,
    poly: Vec<Cplx>,
}

impl SectorFunction {
    pub fn new(sector: &RadialSector, poly: Vec<Cplx>) -> Self {
        let mut poly = poly;
        while poly.len() > 1 && poly.last() == Some(&Cplx::new(0.0, 0.0)) {
            poly.pop();
        }
        if poly.is_empty() {
            poly.push(Cplx::new(0.0, 0.0));
        }
        SectorFunction { sector: sector.clone(), poly }
    }

    /// The unnormalized eigenfunction profile Φ_ℓ: q(u) = L_ℓ^{(λ)}((2/a)u).
    pub fn phi(ell: usize, sector: &RadialSector) -> Self {
        let a = sector.params().a();
        let base = laguerre_coeffs(ell, sector.lambda());
        let mut scale = 1.0;
        let poly = (0..=ell)
            .map(|n| {
                let c = Cplx::new(base.coeff(n) * scale, 0.0);
                scale *= 2.0 / a;
                c
            })
            .collect();
        SectorFunction::new(sector, poly)
    }

    pub fn sector(&self) -> &RadialSector {
        &self.sector
    }

    pub fn poly(&self) -> &[Cplx] {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    /// ψ(u) = q(u) e^{−u/a}.
    pub fn eval_radial(&self, u: f64) -> Cplx {
        let q = self
            .poly
            .iter()
            .rev()
            .fold(Cplx::new(0.0, 0.0), |acc, &c| acc * u + c);
        q * (-u / self.sector.params().a()).exp()
    }

    /// The full profile at ‖x‖ = r (harmonic factor excluded): rᵐ ψ(rᵃ).
    pub fn eval(&self, r: f64) -> Cplx {
        self.eval_radial(r.powf(self.sector.params().a())) * r.powf(self.sector.m() as f64)
    }

    pub fn scale(&self, s: Cplx) -> Self {
        SectorFunction::new(&self.sector, self.poly.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.poly.len().max(other.poly.len());
        let zero = Cplx::new(0.0, 0.0);
        let poly = (0..n)
            .map(|j| {
                self.poly.get(j).copied().unwrap_or(zero)
                    + other.poly.get(j).copied().unwrap_or(zero)
            })
            .collect();
        SectorFunction::new(&self.sector, poly)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Cplx::new(-1.0, 0.0)))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.poly.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficients d_ℓ of q(u) = Σ d_ℓ L_ℓ^{(λ)}((2/a)u), by exact
    /// Gauss–Laguerre inner products against the t^λ e^{−t} measure
    /// (monomial-basis elimination is exponentially ill-conditioned).
    pub fn laguerre_expand(&self) -> Result<Vec<Cplx>, Sl2Error> {
        let a = self.sector.params().a();
        let lambda = self.sector.lambda();
        // Rewrite q in the t = (2/a)u variable.
        let p: Vec<Cplx> = {
            let mut scale = 1.0;
            self.poly
                .iter()
                .map(|&c| {
                    let v = c * scale;
                    scale *= a / 2.0;
                    v
                })
                .collect()
        };
        let deg = p.len() - 1;
        let rule = gauss_laguerre_core(deg + 2, lambda)?;
        let q_at: Vec<Cplx> = rule
            .nodes
            .iter()
            .map(|&t| p.iter().rev().fold(Cplx::new(0.0, 0.0), |acc, &c| acc * t + c))
            .collect();
        let mut out = Vec::with_capacity(deg + 1);
        for ell in 0..=deg {
            // ||L_l||^2 = Gamma(lambda+l+1)/l! in the t^lambda e^{-t} measure.
            let inv_norm =
                (ln_gamma(ell as f64 + 1.0)? - ln_gamma(lambda + ell as f64 + 1.0)?).exp();
            let mut acc = Cplx::new(0.0, 0.0);
            for ((&t, &w), &qv) in rule.nodes.iter().zip(&rule.weights).zip(&q_at) {
                acc += qv * (w * laguerre(ell, lambda, t));
            }
            out.push(acc * inv_norm);
        }
        Ok(out)
    }
}
