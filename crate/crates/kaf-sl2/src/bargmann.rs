use crate::sector::RadialSector;
use crate::Sl2Error;
use kaf_dunkl::{dunkl_laplacian, PolyND};
use kaf_specfun::laguerre::semigroup_monomial_poly;
use kaf_specfun::PolynomialCoeffs;

/// Image of p(x)‖x‖^{aℓ} under the Segal–Bargmann operator:
/// (−a/2)ˡ ℓ! p(x) L_ℓ^{(λ)}((2/a)‖x‖ᵃ) e^{−‖x‖ᵃ/a}, stored as the
/// harmonic factor times a polynomial in ‖x‖ᵃ times the deformed Gaussian.
#[derive(Debug, Clone)]
pub struct SegalBargmannImage {
    harmonic: PolyND<f64>,
    radial: PolynomialCoeffs,
    a: f64,
}

impl SegalBargmannImage {
    pub fn harmonic(&self) -> &PolyND<f64> {
        &self.harmonic
    }

    /// The radial polynomial in u = ‖x‖ᵃ (exp factor excluded).
    pub fn radial(&self) -> &PolynomialCoeffs {
        &self.radial
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let u = x.iter().map(|v| v * v).sum::<f64>().powf(self.a / 2.0);
        self.harmonic.eval(x) * self.radial.eval(u) * (-u / self.a).exp()
    }
}

/// Applies the Segal–Bargmann operator to p(x)‖x‖^{aℓ} for p k-harmonic of
/// the sector's degree, via the terminating semigroup expansion
/// exp(−(a/2)B) tˡ = (−a/2)ˡ ℓ! L_ℓ^{(λ)}(2t/a) in t = ‖x‖ᵃ.
pub fn segal_bargmann_apply(
    p: &PolyND<f64>,
    ell: usize,
    sector: &RadialSector,
) -> Result<SegalBargmannImage, Sl2Error> {
    let params = sector.params();
    if p.dim() != params.dim() {
        return Err(Sl2Error::domain(format!(
            "harmonic factor has {} variables, parameters have {}",
            p.dim(),
            params.dim()
        )));
    }
    if p.is_zero() {
        return Err(Sl2Error::domain("harmonic factor must be nonzero"));
    }
    let m = sector.m();
    if p.terms().any(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() != m) {
        return Err(Sl2Error::domain(format!(
            "harmonic factor must be homogeneous of the sector degree {m}"
        )));
    }
    let lap = dunkl_laplacian(p, params);
    if lap.max_abs_coeff() > 1e-10 * p.max_abs_coeff().max(1.0) {
        return Err(Sl2Error::domain("harmonic factor is not k-harmonic"));
    }
    let radial = semigroup_monomial_poly(ell, sector.lambda(), params.a() / 2.0)?;
    Ok(SegalBargmannImage { harmonic: p.clone(), radial, a: params.a() })
}
