//! Generalized Laguerre polynomials L_ℓ^{(λ)} and the one-parameter
//! semigroup generated by B = t d²/dt² + (λ+1) d/dt, whose action on
//! monomials reproduces the Laguerre polynomials in closed form.

use crate::{PolynomialCoeffs, SpecFunError};
use num_traits::{Float, FromPrimitive};

/// L_ℓ^{(λ)}(t) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1+λ−t) L_k − (k+λ) L_{k−1}.
pub fn laguerre<F: Float + FromPrimitive>(ell: usize, lambda: F, t: F) -> F {
    let one = F::one();
    if ell == 0 {
        return one;
    }
    let mut prev = one;
    let mut curr = lambda + one - t;
    for k in 1..ell {
        let kf = F::from_usize(k).unwrap();
        let next = ((F::from_usize(2 * k + 1).unwrap() + lambda - t) * curr
            - (kf + lambda) * prev)
            / (kf + one);
        prev = curr;
        curr = next;
    }
    curr
}

/// Coefficients of L_ℓ^{(λ)} in the monomial basis.
pub fn laguerre_coeffs(ell: usize, lambda: f64) -> PolynomialCoeffs {
    // c_0 = binom(ℓ+λ, ℓ); c_{j+1}/c_j = −(ℓ−j)/((j+1)(λ+j+1)).
    let mut coeffs = vec![0.0; ell + 1];
    let mut c = (0..ell).fold(1.0, |acc, j| acc * (lambda + 1.0 + j as f64) / (j as f64 + 1.0));
    for j in 0..=ell {
        coeffs[j] = c;
        if j < ell {
            c *= -((ell - j) as f64) / ((j as f64 + 1.0) * (lambda + j as f64 + 1.0));
        }
    }
    PolynomialCoeffs::new(coeffs)
}

/// d/dt L_ℓ^{(λ)}(t) = −L_{ℓ−1}^{(λ+1)}(t).
pub fn laguerre_deriv<F: Float + FromPrimitive>(ell: usize, lambda: F, t: F) -> F {
    if ell == 0 {
        F::zero()
    } else {
        -laguerre(ell - 1, lambda + F::one(), t)
    }
}

/// One application of B = t d²/dt² + (λ+1) d/dt to a polynomial:
/// B tⁿ = n(λ+n) t^{n−1}.
pub fn apply_b(p: &PolynomialCoeffs, lambda: f64) -> PolynomialCoeffs {
    if p.degree() == 0 {
        return PolynomialCoeffs::zero();
    }
    let out: Vec<f64> = (1..=p.degree())
        .map(|n| p.coeff(n) * n as f64 * (lambda + n as f64))
        .collect();
    PolynomialCoeffs::new(out)
}

/// exp(−cB) tˡ as a polynomial in t; the expansion terminates because
/// B lowers degree by one.
pub fn semigroup_monomial_poly(
    ell: usize,
    lambda: f64,
    c: f64,
) -> Result<PolynomialCoeffs, SpecFunError> {
    if c == 0.0 {
        return Err(SpecFunError::domain("semigroup parameter c must be nonzero"));
    }
    let mut monomial = vec![0.0; ell + 1];
    monomial[ell] = 1.0;
    let mut power = PolynomialCoeffs::new(monomial);
    let mut sum = power.clone();
    let mut factor = 1.0;
    for j in 1..=ell {
        power = apply_b(&power, lambda);
        factor *= -c / j as f64;
        sum = sum.add(&power.scale(factor));
    }
    Ok(sum)
}

/// exp(−cB) tˡ evaluated at t; equals (−c)ˡ ℓ! L_ℓ^{(λ)}(t/c).
pub fn laguerre_semigroup_monomial(
    ell: usize,
    lambda: f64,
    c: f64,
    t: f64,
) -> Result<f64, SpecFunError> {
    Ok(semigroup_monomial_poly(ell, lambda, c)?.eval(t))
}
