//! Exact order-and-inversion bookkeeping for the transform. On the
//! eigenbasis 𝓕 multiplies the (ℓ,m) coefficient by e^{−iπ(ℓ+m/a)}; for
//! rational a = p/q the phase exponents live in ℚ, so repeated application
//! and the comparison against identity or parity are exact rational
//! statements.

use crate::TransformError;
use num_rational::Ratio;

/// What applying the transform twice does to the coefficient map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareBehavior {
    /// 𝓕² = id (e.g. a = 1/r).
    Identity,
    /// 𝓕²f(x) = f(−x): the sector-m coefficient picks up (−1)^m
    /// (e.g. a = 2 or a = 2/(2r+1)).
    Parity,
    /// Neither: the square is a genuinely fractional phase map.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InversionReport {
    pub square: SquareBehavior,
    /// Least t ≥ 1 with 𝓕ᵗ = id.
    pub order: u32,
}

/// Phase exponent of 𝓕ᵗ on the (ℓ,m) coefficient, in units of π and
/// reduced mod 2: t(ℓ + m q/p) for a = p/q in lowest terms.
pub fn phase_exponent_mod2(
    t: u32,
    ell: u64,
    m: u64,
    a_num: i64,
    a_den: i64,
) -> Result<Ratio<i64>, TransformError> {
    if a_num <= 0 || a_den <= 0 {
        return Err(TransformError::domain(format!(
            "a must be a positive rational, got {a_num}/{a_den}"
        )));
    }
    let a = Ratio::new(a_num, a_den);
    let e = (Ratio::from_integer(ell as i64) + Ratio::from_integer(m as i64) / a)
        * Ratio::from_integer(t as i64);
    let two = Ratio::from_integer(2);
    Ok(e - (e / two).floor() * two)
}

/// Exact behavior of 𝓕² and the exact finite order of 𝓕 for rational
/// a = a_num/a_den, verified coefficient-wise on 0 ≤ ℓ ≤ ell_max,
/// 0 ≤ m ≤ m_max with rational arithmetic.
pub fn inversion_check(
    a_num: i64,
    a_den: i64,
    ell_max: u64,
    m_max: u64,
) -> Result<InversionReport, TransformError> {
    let zero = Ratio::from_integer(0);
    let mut square = SquareBehavior::Identity;
    for ell in 0..=ell_max {
        for m in 0..=m_max {
            let e = phase_exponent_mod2(2, ell, m, a_num, a_den)?;
            let parity_target = Ratio::from_integer((m % 2) as i64);
            if e != zero {
                if e == parity_target {
                    if square == SquareBehavior::Identity {
                        square = SquareBehavior::Parity;
                    }
                } else {
                    square = SquareBehavior::Other;
                }
            }
        }
    }
    let mut order = 0u32;
    'outer: for t in 1..=(4 * a_num as u32).max(4) {
        for ell in 0..=ell_max {
            for m in 0..=m_max {
                if phase_exponent_mod2(t, ell, m, a_num, a_den)? != zero {
                    continue 'outer;
                }
            }
        }
        order = t;
        break;
    }
    if order == 0 {
        return Err(TransformError::domain(format!(
            "no order <= {} found for a = {a_num}/{a_den}; the search bound is wrong",
            4 * a_num
        )));
    }
    Ok(InversionReport { square, order })
}
