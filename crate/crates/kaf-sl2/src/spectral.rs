use crate::sector::{phi_basis, RadialSector};
use crate::{Cplx, DeformParams, Sl2Error, DEFECT_LIMIT};
use kaf_quadrature::radial_rule;
use std::collections::BTreeMap;

/// Retained mode window of a spectral expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub ell_max: usize,
    pub m_max: usize,
}

/// What to do when a truncated expansion's Parseval defect exceeds
/// `DEFECT_LIMIT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectPolicy {
    Refuse,
    Allow,
}

/// A function represented by its coefficients against the orthonormal
/// eigenbasis Φ̃_{ℓ,m,j}; all transforms act coefficient-wise.
#[derive(Debug, Clone)]
pub struct SpectralFunction {
    params: DeformParams,
    coeffs: BTreeMap<(usize, usize, usize), Cplx>,
    truncation: Truncation,
    defect: f64,
}

impl SpectralFunction {
    /// Builds a spectral function from explicit coefficients (defect 0).
    pub fn from_coeffs(
        params: &DeformParams,
        entries: impl IntoIterator<Item = ((usize, usize, usize), Cplx)>,
        truncation: Truncation,
    ) -> Result<Self, Sl2Error> {
        let coeffs: BTreeMap<_, _> = entries.into_iter().collect();
        for &(ell, m, _) in coeffs.keys() {
            if ell > truncation.ell_max || m > truncation.m_max {
                return Err(Sl2Error::domain(format!(
                    "coefficient ({ell},{m}) outside the truncation window"
                )));
            }
        }
        Ok(SpectralFunction { params: params.clone(), coeffs, truncation, defect: 0.0 })
    }

    pub fn params(&self) -> &DeformParams {
        &self.params
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn coeff(&self, ell: usize, m: usize, j: usize) -> Cplx {
        self.coeffs.get(&(ell, m, j)).copied().unwrap_or(Cplx::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Cplx)> {
        self.coeffs.iter()
    }

    /// ‖f‖²_k = Σ |c_{ℓ,m,j}|² (Parseval).
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum()
    }

    /// 1 − Σ|c|²/‖f‖²: the mass lost to truncation, as measured at
    /// expansion time. Zero for synthetic coefficient data.
    pub fn parseval_defect(&self) -> f64 {
        self.defect
    }

    fn check_defect(&self, policy: DefectPolicy) -> Result<(), Sl2Error> {
        if policy == DefectPolicy::Refuse && self.defect > DEFECT_LIMIT {
            return Err(Sl2Error::truncation(format!(
                "Parseval defect {} exceeds {DEFECT_LIMIT}; enlarge the truncation or pass \
                 DefectPolicy::Allow",
                self.defect
            )));
        }
        Ok(())
    }

    fn map_coeffs(&self, f: impl Fn(usize, usize) -> Cplx) -> SpectralFunction {
        SpectralFunction {
            params: self.params.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(ell, m, j), &c)| ((ell, m, j), c * f(ell, m)))
                .collect(),
            truncation: self.truncation,
            defect: self.defect,
        }
    }
}

/// One sampled radial profile: the component of f in the (m, j) harmonic
/// sector, as a function of r = ‖x‖.
pub struct SectorSample<'a> {
    pub m: usize,
    pub j: usize,
    pub profile: &'a dyn Fn(f64) -> Cplx,
}

/// Expands sampled sector profiles in the orthonormal basis by radial
/// quadrature: c_{ℓ,m,j} = ∫ f(r) f_{ℓ,m}(r) r^{2⟨k⟩+N+a−3} dr. The
/// Parseval defect 1 − Σ|c|²/‖f‖² is recorded on the result.
pub fn expand(
    samples: &[SectorSample],
    params: &DeformParams,
    truncation: Truncation,
    n_nodes: usize,
) -> Result<SpectralFunction, Sl2Error> {
    let a = params.a();
    let mut coeffs = BTreeMap::new();
    let mut norm_sq = 0.0;
    let mut captured = 0.0;
    for sample in samples {
        if sample.m > truncation.m_max {
            return Err(Sl2Error::domain(format!(
                "sector m = {} outside the truncation window (m_max = {})",
                sample.m, truncation.m_max
            )));
        }
        let sector = RadialSector::new(sample.m, params)?;
        let rule = radial_rule(n_nodes, params, sample.m)?;
        // The rule's weights carry e^{−(2/a)rᵃ} and the sector power r^{2m};
        // restore both, since the sampled profile and the basis functions
        // carry their own decay and r^m factors while the ambient radial
        // measure is r^{2⟨k⟩+N+a−3} dr for every sector.
        let plain: Vec<f64> = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&r, &w)| {
                w * (2.0 / a * r.powf(a)).exp() / r.powi(2 * sample.m as i32)
            })
            .collect();
        let values: Vec<Cplx> = rule.nodes.iter().map(|&r| (sample.profile)(r)).collect();
        norm_sq += plain
            .iter()
            .zip(&values)
            .map(|(&w, v)| w * v.norm_sqr())
            .sum::<f64>();
        for ell in 0..=truncation.ell_max {
            let mut c = Cplx::new(0.0, 0.0);
            for ((&r, &w), v) in rule.nodes.iter().zip(&plain).zip(&values) {
                c += *v * (w * phi_basis(ell, &sector, r)?);
            }
            captured += c.norm_sqr();
            if c.norm() > 0.0 {
                coeffs.insert((ell, sample.m, sample.j), c);
            }
        }
    }
    if !(norm_sq > 0.0) {
        return Err(Sl2Error::domain("expansion input has zero (or invalid) norm"));
    }
    Ok(SpectralFunction {
        params: params.clone(),
        coeffs,
        truncation,
        defect: 1.0 - captured / norm_sq,
    })
}

/// Ω(γ_z) for Re z ≥ 0: coefficient-wise multiplication by
/// e^{−z(2ℓ+λ_{k,a,m}+1)}.
pub fn semigroup_apply(
    f: &SpectralFunction,
    z: Cplx,
    policy: DefectPolicy,
) -> Result<SpectralFunction, Sl2Error> {
    if !(z.re >= 0.0) {
        return Err(Sl2Error::domain(format!(
            "semigroup parameter needs Re z >= 0, got {z}"
        )));
    }
    f.check_defect(policy)?;
    let params = f.params().clone();
    Ok(f.map_coeffs(|ell, m| (-z * (2.0 * ell as f64 + params.lambda(m) + 1.0)).exp()))
}

/// The deformed Fourier transform on coefficients: multiplication by
/// e^{−iπ(ℓ + m/a)}.
pub fn fka_apply_spectral(
    f: &SpectralFunction,
    policy: DefectPolicy,
) -> Result<SpectralFunction, Sl2Error> {
    f.check_defect(policy)?;
    let a = f.params().a();
    Ok(f.map_coeffs(|ell, m| {
        Cplx::from_polar(1.0, -std::f64::consts::PI * (ell as f64 + m as f64 / a))
    }))
}

/// One discrete eigenvalue of −Δ_{k,a} with its (ℓ, m) label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvalueEntry {
    pub value: f64,
    pub ell: usize,
    pub m: usize,
}

/// First `count` eigenvalues 2aℓ + 2m + 2⟨k⟩ + N + a − 2, ascending. For
/// N = 1 only m ∈ {0, 1} occur (the even/odd sectors), giving
/// 2aℓ + 2⟨k⟩ + a ± 1.
pub fn spectrum(params: &DeformParams, count: usize) -> Vec<EigenvalueEntry> {
    let base = 2.0 * params.index() + params.dim() as f64 + params.a() - 2.0;
    let m_cap = if params.dim() == 1 { 1 } else { count.saturating_sub(1) };
    let mut out = Vec::new();
    for ell in 0..count {
        for m in 0..=m_cap {
            out.push(EigenvalueEntry {
                value: 2.0 * params.a() * ell as f64 + 2.0 * m as f64 + base,
                ell,
                m,
            });
        }
    }
    out.sort_by(|x, y| {
        x.value
            .partial_cmp(&y.value)
            .unwrap()
            .then(x.m.cmp(&y.m))
            .then(x.ell.cmp(&y.ell))
    });
    out.truncate(count);
    out
}
