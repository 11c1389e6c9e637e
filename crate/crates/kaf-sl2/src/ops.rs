use crate::sector::{phi_norm_sq_unnormalized, RadialSector, SectorFunction};
use crate::{Cplx, Sl2Error};
use kaf_specfun::gamma::ln_gamma;
use kaf_specfun::gauss::gauss_laguerre_core;
use kaf_specfun::laguerre::{laguerre, laguerre_deriv};
use nalgebra::DMatrix;

/// The sl₂ triple {H, E⁺, E⁻} and its Cayley transform {K, N⁺, N⁻}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Op {
    H,
    EPlus,
    EMinus,
    K,
    NPlus,
    NMinus,
}

const ZERO: Cplx = Cplx::new(0.0, 0.0);
const I: Cplx = Cplx::new(0.0, 1.0);

fn poly_deriv(q: &[Cplx]) -> Vec<Cplx> {
    if q.len() <= 1 {
        return vec![ZERO];
    }
    q.iter()
        .enumerate()
        .skip(1)
        .map(|(n, &c)| c * n as f64)
        .collect()
}

fn poly_mul_u(q: &[Cplx]) -> Vec<Cplx> {
    let mut out = vec![ZERO];
    out.extend_from_slice(q);
    out
}

fn poly_axpy(acc: &mut Vec<Cplx>, s: Cplx, q: &[Cplx]) {
    if acc.len() < q.len() {
        acc.resize(q.len(), ZERO);
    }
    for (a, &c) in acc.iter_mut().zip(q) {
        *a += s * c;
    }
}

/// ψ ↦ 2u ψ' + (λ+1) ψ on q, with ψ = q e^{−u/a}.
fn apply_h(q: &[Cplx], lambda: f64, a: f64) -> Vec<Cplx> {
    let mut psi1 = poly_deriv(q).to_vec();
    poly_axpy(&mut psi1, Cplx::new(-1.0 / a, 0.0), q);
    let mut out = poly_mul_u(&psi1);
    for c in out.iter_mut() {
        *c *= 2.0;
    }
    poly_axpy(&mut out, Cplx::new(lambda + 1.0, 0.0), q);
    out
}

/// ψ ↦ (i/a) u ψ.
fn apply_eplus(q: &[Cplx], a: f64) -> Vec<Cplx> {
    poly_mul_u(q).iter().map(|&c| c * I / a).collect()
}

/// ψ ↦ a i (u ψ'' + (λ+1) ψ').
fn apply_eminus(q: &[Cplx], lambda: f64, a: f64) -> Vec<Cplx> {
    let q1 = poly_deriv(q);
    let q2 = poly_deriv(&q1);
    // ψ' = (q' − q/a) e, ψ'' = (q'' − (2/a)q' + q/a²) e.
    let mut psi1 = q1.clone();
    poly_axpy(&mut psi1, Cplx::new(-1.0 / a, 0.0), q);
    let mut psi2 = q2;
    poly_axpy(&mut psi2, Cplx::new(-2.0 / a, 0.0), &q1);
    poly_axpy(&mut psi2, Cplx::new(1.0 / (a * a), 0.0), q);
    let mut out = poly_mul_u(&psi2);
    poly_axpy(&mut out, Cplx::new(lambda + 1.0, 0.0), &psi1);
    out.iter().map(|&c| c * I * a).collect()
}

/// Radial action of the chosen operator on a sector function, in the
/// u = ‖x‖ᵃ coordinate. The Cayley side is the linear combination
/// K = i(E⁻ − E⁺), N± = ±(i/2)H − (1/2)(E⁺ + E⁻).
pub fn sl2_operators_apply(which: Sl2Op, f: &SectorFunction) -> SectorFunction {
    let sector = f.sector().clone();
    let lambda = sector.lambda();
    let a = sector.params().a();
    let q = f.poly();
    let poly = match which {
        Sl2Op::H => apply_h(q, lambda, a),
        Sl2Op::EPlus => apply_eplus(q, a),
        Sl2Op::EMinus => apply_eminus(q, lambda, a),
        Sl2Op::K => {
            let mut out: Vec<Cplx> = apply_eminus(q, lambda, a).iter().map(|&c| c * I).collect();
            poly_axpy(&mut out, -I, &apply_eplus(q, a));
            out
        }
        Sl2Op::NPlus | Sl2Op::NMinus => {
            let sign = if which == Sl2Op::NPlus { 1.0 } else { -1.0 };
            let mut out: Vec<Cplx> = apply_h(q, lambda, a)
                .iter()
                .map(|&c| c * I * (0.5 * sign))
                .collect();
            poly_axpy(&mut out, Cplx::new(-0.5, 0.0), &apply_eplus(q, a));
            poly_axpy(&mut out, Cplx::new(-0.5, 0.0), &apply_eminus(q, lambda, a));
            out
        }
    };
    SectorFunction::new(&sector, poly)
}

/// The polynomial factor of (Op Φ_ℓ) at t = (2/a)u, computed pointwise
/// from recurrence evaluations of L_ℓ and its derivatives (the monomial
/// representation is exponentially ill-conditioned at large ℓ).
fn op_image_at(which: Sl2Op, lambda: f64, a: f64, ell: usize, t: f64) -> Cplx {
    let u = a / 2.0 * t;
    let q = laguerre(ell, lambda, t);
    let q1 = laguerre_deriv(ell, lambda, t) * (2.0 / a);
    let q2 = if ell >= 2 {
        laguerre(ell - 2, lambda + 2.0, t) * (4.0 / (a * a))
    } else {
        0.0
    };
    let h = || Cplx::new(2.0 * u * (q1 - q / a) + (lambda + 1.0) * q, 0.0);
    let ep = || I * (u * q / a);
    let em = || {
        I * a
            * (u * (q2 - 2.0 / a * q1 + q / (a * a)) + (lambda + 1.0) * (q1 - q / a))
    };
    match which {
        Sl2Op::H => h(),
        Sl2Op::EPlus => ep(),
        Sl2Op::EMinus => em(),
        Sl2Op::K => I * (em() - ep()),
        Sl2Op::NPlus => I * 0.5 * h() - 0.5 * (ep() + em()),
        Sl2Op::NMinus => -I * 0.5 * h() - 0.5 * (ep() + em()),
    }
}

/// Matrix of the operator on the orthonormal basis {f̃_ℓ}_{ℓ ≤ ℓ_max} of the
/// sector, column ℓ holding the expansion of (Op f̃_ℓ), via exact
/// Gauss–Laguerre inner products. Images spilling past ℓ_max are truncated;
/// relation checks must exclude the edge accordingly.
pub fn operator_matrix(
    which: Sl2Op,
    sector: &RadialSector,
    ell_max: usize,
) -> Result<DMatrix<Cplx>, Sl2Error> {
    let n = ell_max + 1;
    let lambda = sector.lambda();
    let a = sector.params().a();
    let mut mat = DMatrix::from_element(n, n, ZERO);
    let norms: Vec<f64> = (0..n)
        .map(|ell| phi_norm_sq_unnormalized(ell, sector).map(f64::sqrt))
        .collect::<Result<_, _>>()?;
    // Integrands are polynomials of degree <= (ell_max+1) + ell_max.
    let rule = gauss_laguerre_core(ell_max + 2, lambda)?;
    for ell in 0..n {
        let image: Vec<Cplx> = rule
            .nodes
            .iter()
            .map(|&t| op_image_at(which, lambda, a, ell, t))
            .collect();
        for j in 0..n {
            // ||L_j||^2 = Gamma(lambda+j+1)/j! in the t^lambda e^{-t} measure.
            let inv_norm = (ln_gamma(j as f64 + 1.0)? - ln_gamma(lambda + j as f64 + 1.0)?).exp();
            let mut d = ZERO;
            for ((&t, &w), &g) in rule.nodes.iter().zip(&rule.weights).zip(&image) {
                d += g * (w * laguerre(j, lambda, t));
            }
            mat[(j, ell)] = d * inv_norm * (norms[j] / norms[ell]);
        }
    }
    Ok(mat)
}

/// Diagonal oracle for K: entries 2ℓ + λ + 1.
pub fn kmat_oracle(lambda: f64, n: usize) -> DMatrix<Cplx> {
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Cplx::new(2.0 * i as f64 + lambda + 1.0, 0.0)
        } else {
            ZERO
        }
    })
}

/// Raising oracle: N⁺ f̃_ℓ = i √((ℓ+1)(λ+ℓ+1)) f̃_{ℓ+1}.
pub fn nplus_oracle(lambda: f64, n: usize) -> DMatrix<Cplx> {
    DMatrix::from_fn(n, n, |i, j| {
        if i == j + 1 {
            I * ((j as f64 + 1.0) * (lambda + j as f64 + 1.0)).sqrt()
        } else {
            ZERO
        }
    })
}

/// Lowering oracle: N⁻ f̃_ℓ = i √(ℓ(λ+ℓ)) f̃_{ℓ−1}, with f̃_{−1} ≡ 0.
pub fn nminus_oracle(lambda: f64, n: usize) -> DMatrix<Cplx> {
    DMatrix::from_fn(n, n, |i, j| {
        if i + 1 == j {
            I * (j as f64 * (lambda + j as f64)).sqrt()
        } else {
            ZERO
        }
    })
}

fn interior_max_abs(m: &DMatrix<Cplx>, interior: usize) -> f64 {
    let mut acc = 0.0f64;
    for i in 0..interior {
        for j in 0..interior {
            acc = acc.max(m[(i, j)].norm());
        }
    }
    acc
}

#[derive(Debug, Clone)]
pub struct Sl2RelationReport {
    /// (relation label, interior residual).
    pub relations: Vec<(String, f64)>,
    pub max_residual: f64,
}

/// Checks the commutation relations [H,E±] = ±2E±, [E⁺,E⁻] = H and their
/// Cayley counterparts [K,N±] = ±2N±, [N⁺,N⁻] = K on the basis matrices,
/// plus the three ladder oracles, away from the truncation edge (the last
/// two rows/columns are excluded).
pub fn sl2_relation_check(
    sector: &RadialSector,
    ell_max: usize,
) -> Result<Sl2RelationReport, Sl2Error> {
    if ell_max < 4 {
        return Err(Sl2Error::domain("relation check needs ell_max >= 4"));
    }
    let lambda = sector.lambda();
    let n = ell_max + 1;
    let interior = n - 2;
    let h = operator_matrix(Sl2Op::H, sector, ell_max)?;
    let ep = operator_matrix(Sl2Op::EPlus, sector, ell_max)?;
    let em = operator_matrix(Sl2Op::EMinus, sector, ell_max)?;
    let k = operator_matrix(Sl2Op::K, sector, ell_max)?;
    let np = operator_matrix(Sl2Op::NPlus, sector, ell_max)?;
    let nm = operator_matrix(Sl2Op::NMinus, sector, ell_max)?;

    let comm = |x: &DMatrix<Cplx>, y: &DMatrix<Cplx>| x * y - y * x;
    let two = Cplx::new(2.0, 0.0);
    let relations = vec![
        ("[H,E+] - 2E+".to_string(), interior_max_abs(&(comm(&h, &ep) - ep.scale(two.re)), interior)),
        ("[H,E-] + 2E-".to_string(), interior_max_abs(&(comm(&h, &em) + em.scale(two.re)), interior)),
        ("[E+,E-] - H".to_string(), interior_max_abs(&(comm(&ep, &em) - &h), interior)),
        ("[K,N+] - 2N+".to_string(), interior_max_abs(&(comm(&k, &np) - np.scale(two.re)), interior)),
        ("[K,N-] + 2N-".to_string(), interior_max_abs(&(comm(&k, &nm) + nm.scale(two.re)), interior)),
        ("[N+,N-] - K".to_string(), interior_max_abs(&(comm(&np, &nm) - &k), interior)),
        ("K - diag(2l+lambda+1)".to_string(), interior_max_abs(&(&k - kmat_oracle(lambda, n)), interior)),
        ("N+ - ladder".to_string(), interior_max_abs(&(&np - nplus_oracle(lambda, n)), interior)),
        ("N- - ladder".to_string(), interior_max_abs(&(&nm - nminus_oracle(lambda, n)), interior)),
    ];
    let max_residual = relations.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(Sl2RelationReport { relations, max_residual })
}

/// max |M_{ij} + conj(M_{ji})| over the interior: the defect of
/// ⟨Xf, g⟩ + ⟨f, Xg⟩ = 0 on basis pairs.
pub fn skew_symmetry_residual(
    which: Sl2Op,
    sector: &RadialSector,
    ell_max: usize,
) -> Result<f64, Sl2Error> {
    let m = operator_matrix(which, sector, ell_max)?;
    let n = ell_max + 1;
    let interior = n.saturating_sub(2);
    let mut acc = 0.0f64;
    for i in 0..interior {
        for j in 0..interior {
            acc = acc.max((m[(i, j)] + m[(j, i)].conj()).norm());
        }
    }
    Ok(acc)
}
