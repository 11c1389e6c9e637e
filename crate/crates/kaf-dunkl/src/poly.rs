use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficient ring for multivariate polynomials; implemented by f64 and
/// by BigRational for residual-exactly-zero identity checks.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Sparse multivariate polynomial: exponent tuple → coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyND<C: Coeff> {
    dim: usize,
    terms: BTreeMap<Vec<u16>, C>,
}

impl<C: Coeff> PolyND<C> {
    pub fn zero(dim: usize) -> Self {
        PolyND { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: C) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    pub fn monomial(dim: usize, exps: &[u16], c: C) -> Self {
        assert_eq!(exps.len(), dim, "exponent tuple length must equal dim");
        let mut p = Self::zero(dim);
        p.add_term(exps.to_vec(), c);
        p
    }

    /// The coordinate xᵢ as a polynomial.
    pub fn coord(dim: usize, i: usize) -> Self {
        let mut e = vec![0u16; dim];
        e[i] = 1;
        Self::monomial(dim, &e, C::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u16]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: C) {
        debug_assert_eq!(exps.len(), self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get().clone() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    o.insert(v);
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, v) in self.terms() {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// ∂/∂xᵢ with exact coefficient arithmetic.
    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            let mut n = C::zero();
            for _ in 0..e[i] {
                n = n + C::one();
            }
            out.add_term(e2, c.clone() * n);
        }
        out
    }

    /// Multiplication by the coordinate xᵢ.
    pub fn mul_coord(&self, i: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            let mut e2 = e.clone();
            e2[i] += 1;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Sign flip σᵢ: xᵢ ↦ −xᵢ.
    pub fn sign_flip(&self, i: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            let c = if e[i] % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(e.clone(), c);
        }
        out
    }

    /// (f − σᵢ f)/xᵢ: exact, since the difference retains only odd
    /// xᵢ-exponents.
    pub fn odd_part_div_coord(&self, i: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            if e[i] % 2 == 1 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c.clone() + c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PolyND<D> {
        let mut out = PolyND::zero(self.dim);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl PolyND<f64> {
    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim);
        self.terms
            .iter()
            .map(|(e, c)| {
                c * e
                    .iter()
                    .zip(x)
                    .map(|(&p, &xi)| xi.powi(p as i32))
                    .product::<f64>()
            })
            .sum()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Drops coefficients below `tol` in absolute value.
    pub fn chop(&self, tol: f64) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            if c.abs() > tol {
                out.add_term(e.clone(), *c);
            }
        }
        out
    }
}
