use crate::poly::{Coeff, PolyND};
use crate::DeformParams;

/// Tᵢ f = ∂ᵢ f + kᵢ (f − σᵢ f)/xᵢ, exact in the coefficient ring.
pub fn dunkl_apply_with<C: Coeff>(f: &PolyND<C>, i: usize, ki: &C) -> PolyND<C> {
    f.deriv(i).add(&f.odd_part_div_coord(i).scale(ki))
}

/// Tᵢ f with multiplicities taken from the deformation parameters.
pub fn dunkl_apply(f: &PolyND<f64>, i: usize, params: &DeformParams) -> PolyND<f64> {
    dunkl_apply_with(f, i, &params.k()[i])
}

/// Δ_k f = Σᵢ Tᵢ(Tᵢ f).
pub fn dunkl_laplacian_with<C: Coeff>(f: &PolyND<C>, k: &[C]) -> PolyND<C> {
    let mut out = PolyND::zero(f.dim());
    for (i, ki) in k.iter().enumerate() {
        out = out.add(&dunkl_apply_with(&dunkl_apply_with(f, i, ki), i, ki));
    }
    out
}

pub fn dunkl_laplacian(f: &PolyND<f64>, params: &DeformParams) -> PolyND<f64> {
    dunkl_laplacian_with(f, params.k())
}

/// Euler operator E f = Σᵢ xᵢ ∂ᵢ f.
pub fn euler_apply<C: Coeff>(f: &PolyND<C>) -> PolyND<C> {
    let mut out = PolyND::zero(f.dim());
    for i in 0..f.dim() {
        out = out.add(&f.deriv(i).mul_coord(i));
    }
    out
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
}

/// Applies both sides of the structural operator identities to each test
/// polynomial; every residual must vanish identically in the coefficient
/// ring (use a rational ring for exactness).
pub fn commutator_checks<C: Coeff>(k: &[C], test_polys: &[PolyND<C>]) -> Vec<CheckReport> {
    let dim = k.len();
    let mut reports = Vec::new();
    let two = C::one() + C::one();

    // [Δ_k, M_{e_i}] = 2 T_i
    let mut pass = true;
    for p in test_polys {
        for i in 0..dim {
            let lhs = dunkl_laplacian_with(&p.mul_coord(i), k)
                .sub(&dunkl_laplacian_with(p, k).mul_coord(i));
            let rhs = dunkl_apply_with(p, i, &k[i]).scale(&two);
            if !lhs.sub(&rhs).is_zero() {
                pass = false;
            }
        }
    }
    reports.push(CheckReport { name: "[laplacian, coord_mult] = 2 dunkl".into(), pass });

    // [T_i, M_j] = [T_j, M_i] for i ≠ j
    let mut pass = true;
    for p in test_polys {
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                let lhs = dunkl_apply_with(&p.mul_coord(j), i, &k[i])
                    .sub(&dunkl_apply_with(p, i, &k[i]).mul_coord(j));
                let rhs = dunkl_apply_with(&p.mul_coord(i), j, &k[j])
                    .sub(&dunkl_apply_with(p, j, &k[j]).mul_coord(i));
                if !lhs.sub(&rhs).is_zero() {
                    pass = false;
                }
            }
        }
    }
    reports.push(CheckReport { name: "[dunkl_i, coord_j] symmetric in (i,j)".into(), pass });

    // T_i T_j = T_j T_i
    let mut pass = true;
    for p in test_polys {
        for i in 0..dim {
            for j in 0..dim {
                let lhs = dunkl_apply_with(&dunkl_apply_with(p, j, &k[j]), i, &k[i]);
                let rhs = dunkl_apply_with(&dunkl_apply_with(p, i, &k[i]), j, &k[j]);
                if !lhs.sub(&rhs).is_zero() {
                    pass = false;
                }
            }
        }
    }
    reports.push(CheckReport { name: "dunkl operators commute".into(), pass });

    // σ_i T_i σ_i = −T_i
    let mut pass = true;
    for p in test_polys {
        for i in 0..dim {
            let lhs = dunkl_apply_with(&p.sign_flip(i), i, &k[i]).sign_flip(i);
            let rhs = dunkl_apply_with(p, i, &k[i]).neg();
            if !lhs.sub(&rhs).is_zero() {
                pass = false;
            }
        }
    }
    reports.push(CheckReport { name: "sign flip conjugates dunkl to its negative".into(), pass });

    // [E, Δ_k] = −2 Δ_k
    let mut pass = true;
    for p in test_polys {
        let lhs = euler_apply(&dunkl_laplacian_with(p, k))
            .sub(&dunkl_laplacian_with(&euler_apply(p), k));
        let rhs = dunkl_laplacian_with(p, k).scale(&two).neg();
        if !lhs.sub(&rhs).is_zero() {
            pass = false;
        }
    }
    reports.push(CheckReport { name: "[euler, laplacian] = -2 laplacian".into(), pass });

    reports
}
