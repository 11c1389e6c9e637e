//! Exact rational-arithmetic counterparts of the Laguerre operations,
//! used wherever an identity is asserted with residual exactly zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// Coefficients (ascending degree) of L_ℓ^{(λ)} for rational λ:
/// coeff_j = (−1)^j / j! · ∏_{i=j+1..ℓ} (λ+i) / (ℓ−j)!.
pub fn laguerre_coeffs_exact(ell: usize, lambda: &Rat) -> Vec<Rat> {
    let mut coeffs = vec![Rat::zero(); ell + 1];
    for j in 0..=ell {
        let mut c = Rat::one();
        for i in (j + 1)..=ell {
            c *= lambda + BigRational::from_integer(BigInt::from(i));
        }
        c /= factorial(j) * factorial(ell - j);
        if j % 2 == 1 {
            c = -c;
        }
        coeffs[j] = c;
    }
    coeffs
}

/// One application of B = t d²/dt² + (λ+1) d/dt on rational coefficients:
/// B tⁿ = n(λ+n) t^{n−1}.
pub fn apply_b_exact(coeffs: &[Rat], lambda: &Rat) -> Vec<Rat> {
    if coeffs.len() <= 1 {
        return vec![Rat::zero()];
    }
    (1..coeffs.len())
        .map(|n| {
            let nf = BigRational::from_integer(BigInt::from(n));
            coeffs[n].clone() * &nf * (lambda + &nf)
        })
        .collect()
}

/// exp(−cB) tˡ as exact rational coefficients; the expansion terminates
/// after ℓ applications of B.
pub fn semigroup_monomial_exact(ell: usize, lambda: &Rat, c: &Rat) -> Vec<Rat> {
    assert!(!c.is_zero(), "semigroup parameter c must be nonzero");
    let mut power = vec![Rat::zero(); ell + 1];
    power[ell] = Rat::one();
    let mut sum = power.clone();
    let mut factor = Rat::one();
    for j in 1..=ell {
        power = apply_b_exact(&power, lambda);
        factor = factor * (-c) / BigRational::from_integer(BigInt::from(j));
        for (s, p) in sum.iter_mut().zip(power.iter()) {
            *s += &factor * p;
        }
    }
    sum
}

/// Coefficients of (−c)ˡ ℓ! L_ℓ^{(λ)}(t/c) — the closed form the
/// semigroup expansion must reproduce exactly.
pub fn scaled_laguerre_exact(ell: usize, lambda: &Rat, c: &Rat) -> Vec<Rat> {
    let base = laguerre_coeffs_exact(ell, lambda);
    let mut pref = factorial(ell);
    for _ in 0..ell {
        pref *= -c;
    }
    let mut cpow = Rat::one();
    base.into_iter()
        .map(|b| {
            let out = &pref * b / &cpow;
            cpow *= c;
            out
        })
        .collect()
}
