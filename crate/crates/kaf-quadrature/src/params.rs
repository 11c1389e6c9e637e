use crate::QuadError;

/// Deformation data (N, a, k) for the ℤ₂ᴺ multiplicity setting.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformParams {
    dim: usize,
    a: f64,
    k: Vec<f64>,
}

impl DeformParams {
    /// Requires N ≥ 1, a > 0, kᵢ ≥ 0, and a + 2⟨k⟩ + N − 2 > 0.
    pub fn new(dim: usize, a: f64, k: Vec<f64>) -> Result<Self, QuadError> {
        if dim == 0 {
            return Err(QuadError::domain("dimension must be at least 1"));
        }
        if k.len() != dim {
            return Err(QuadError::domain(format!(
                "expected {dim} multiplicity entries, got {}",
                k.len()
            )));
        }
        if !(a > 0.0) {
            return Err(QuadError::domain(format!("deformation a must be positive, got {a}")));
        }
        if let Some(bad) = k.iter().find(|&&ki| !(ki >= 0.0)) {
            return Err(QuadError::domain(format!("multiplicities must be >= 0, got {bad}")));
        }
        let p = DeformParams { dim, a, k };
        if p.a + 2.0 * p.index() + p.dim as f64 - 2.0 <= 0.0 {
            return Err(QuadError::domain(format!(
                "need a + 2<k> + N - 2 > 0, got {}",
                p.a + 2.0 * p.index() + p.dim as f64 - 2.0
            )));
        }
        Ok(p)
    }

    /// Same multiplicity on every coordinate.
    pub fn uniform(dim: usize, a: f64, k: f64) -> Result<Self, QuadError> {
        Self::new(dim, a, vec![k; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn k(&self) -> &[f64] {
        &self.k
    }

    /// ⟨k⟩ = Σᵢ kᵢ.
    pub fn index(&self) -> f64 {
        self.k.iter().sum()
    }

    /// μ = 2⟨k⟩ + N + a − 2; the minimal spectral value and the phase unit
    /// of the deformed transform.
    pub fn mu(&self) -> f64 {
        2.0 * self.index() + self.dim as f64 + self.a - 2.0
    }

    /// λ_{k,a,m} = (2m + 2⟨k⟩ + N − 2)/a, the Laguerre index of the
    /// degree-m sector.
    pub fn lambda(&self, m: usize) -> f64 {
        (2.0 * m as f64 + 2.0 * self.index() + self.dim as f64 - 2.0) / self.a
    }

    /// ν = ⟨k⟩ + (N−2)/2, the Gegenbauer index of the angular expansion.
    pub fn nu(&self) -> f64 {
        self.index() + (self.dim as f64 - 2.0) / 2.0
    }
}
