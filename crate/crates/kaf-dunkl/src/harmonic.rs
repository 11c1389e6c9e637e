use crate::ops::dunkl_laplacian;
use crate::poly::PolyND;
use crate::sphere::sphere_inner_product;
use crate::{DeformParams, DunklError};
use nalgebra::DMatrix;
use std::collections::HashMap;

/// Exponent tuples of total degree m in `dim` variables, lexicographic.
fn monomial_exponents(dim: usize, m: usize) -> Vec<Vec<u16>> {
    fn rec(dim: usize, m: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if dim == 1 {
            let mut e = prefix.clone();
            e.push(m as u16);
            out.push(e);
            return;
        }
        for j in 0..=m {
            prefix.push(j as u16);
            rec(dim - 1, m - j, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, m, &mut Vec::new(), &mut out);
    out
}

/// Basis of ker(Δ_k) ∩ 𝓟_m, orthonormal in the inner product
/// d_k ∫_{S^{N−1}} p q ϑ_k dσ.
pub fn harmonic_basis(m: usize, params: &DeformParams) -> Result<Vec<PolyND<f64>>, DunklError> {
    let dim = params.dim();
    let cols = monomial_exponents(dim, m);

    let raw: Vec<PolyND<f64>> = if m < 2 {
        cols.iter()
            .map(|e| PolyND::monomial(dim, e, 1.0))
            .collect()
    } else {
        let rows = monomial_exponents(dim, m - 2);
        let row_index: HashMap<&Vec<u16>, usize> =
            rows.iter().enumerate().map(|(i, e)| (e, i)).collect();
        // Padded square so the SVD's V is full and exposes the whole
        // nullspace (the thin SVD of a wide matrix truncates it).
        let nr = rows.len().max(cols.len());
        let mut a = DMatrix::<f64>::zeros(nr, cols.len());
        for (j, e) in cols.iter().enumerate() {
            let lap = dunkl_laplacian(&PolyND::monomial(dim, e, 1.0), params);
            for (er, c) in lap.terms() {
                a[(row_index[er], j)] = *c;
            }
        }
        let scale = a.amax().max(1.0);
        let svd = a.svd(false, true);
        let v_t = svd.v_t.as_ref().unwrap();
        let tol = 1e-10 * scale;
        let mut basis = Vec::new();
        for j in 0..cols.len() {
            let below = j >= svd.singular_values.len() || svd.singular_values[j] < tol;
            if below {
                let mut p = PolyND::zero(dim);
                for (c_idx, e) in cols.iter().enumerate() {
                    p.add_term(e.clone(), v_t[(j, c_idx)]);
                }
                basis.push(p.chop(1e-13));
            }
        }
        basis
    };

    // Gram–Schmidt in ⟨p,q⟩ = d_k ∫ p q ϑ_k dσ (exact Gamma-formula
    // inner products).
    let mut ortho: Vec<PolyND<f64>> = Vec::new();
    for p in raw {
        let mut q = p;
        for _ in 0..2 {
            for b in &ortho {
                let c = sphere_inner_product(&q, b, params)?;
                q = q.sub(&b.scale(&c));
            }
        }
        let n2 = sphere_inner_product(&q, &q, params)?;
        if n2 > 1e-20 {
            ortho.push(q.scale(&(1.0 / n2.sqrt())));
        }
    }
    Ok(ortho)
}
