use crate::Cplx;

/// Value of a truncated infinite series together with convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Cplx,
    pub terms_used: usize,
    pub truncation_error_estimate: f64,
}

/// Dense univariate polynomial, coefficients indexed by ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialCoeffs {
    coeffs: Vec<f64>,
}

impl PolynomialCoeffs {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        PolynomialCoeffs { coeffs }
    }

    pub fn zero() -> Self {
        PolynomialCoeffs { coeffs: vec![0.0] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    /// Exact coefficient-wise derivative.
    pub fn deriv(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let d: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| j as f64 * c)
            .collect();
        Self::new(d)
    }

    /// Multiplication by the variable.
    pub fn mul_t(&self) -> Self {
        let mut c = vec![0.0];
        c.extend_from_slice(&self.coeffs);
        Self::new(c)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c: Vec<f64> = (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect();
        Self::new(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }
}
