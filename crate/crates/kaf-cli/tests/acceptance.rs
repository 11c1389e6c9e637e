//! Acceptance suite: one test per acceptance criterion, so the test
//! harness prints exactly one pass/fail line for each. Criteria cover the
//! special-function layer, the oscillator ladder algebra, the semigroup
//! kernels, the deformed Fourier transform, and its structural identities.

use kaf_dunkl::c_ka;
use kaf_kernels::{lambda_m, semigroup_kernel_law, weber_laguerre_laplace,
    weber_second_exponential};
use kaf_quadrature::{radial_rule, DeformParams};
use kaf_sl2::{expand, fka_apply_spectral, phi_basis, sl2_relation_check, DefectPolicy,
    RadialSector, SectorSample, SpectralFunction, Truncation};
use kaf_specfun::bessel::bessel_i_tilde;
use kaf_specfun::exact::{rat, scaled_laguerre_exact, semigroup_monomial_exact};
use kaf_specfun::gamma::gamma;
use kaf_specfun::gauss::gauss_laguerre_core;
use kaf_specfun::gegenbauer::gegenbauer;
use kaf_specfun::laguerre::laguerre;
use kaf_specfun::series::{hille_hardy_closed, hille_hardy_lhs, i_fun, i_fun_closed_b1,
    i_fun_closed_b2};
use kaf_transform::{b_kernel, bochner_check, hecke_check, heisenberg_product, inversion_check,
    master_formula_check, pde_residuals, plancherel_residual, AmbientGrid, BKernelSpec, Cplx,
    SquareBehavior};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

#[test]
fn criterion_01_laguerre_orthogonality() {
    let mut worst = 0.0f64;
    for lambda in [-0.4, 0.0, 2.5] {
        let rule = gauss_laguerre_core(40, lambda).unwrap();
        for ell in 0..=12usize {
            for s in 0..=12usize {
                let g: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(&t, &w)| w * laguerre(ell, lambda, t) * laguerre(s, lambda, t))
                    .sum();
                let scale = gamma(lambda + ell as f64 + 1.0).unwrap()
                    / gamma(ell as f64 + 1.0).unwrap();
                let expected = if ell == s { scale } else { 0.0 };
                worst = worst.max((g - expected).abs() / scale);
            }
        }
    }
    assert!(worst <= 1e-10, "worst Gram residual {worst:.3e}");
}

#[test]
fn criterion_02_laguerre_semigroup_on_monomials_is_exact() {
    for lambda in [rat(-2, 5), rat(0, 1), rat(5, 2)] {
        for cc in [rat(1, 3), rat(2, 1), rat(-3, 4)] {
            for ell in 0..=10usize {
                let got = semigroup_monomial_exact(ell, &lambda, &cc);
                let want = scaled_laguerre_exact(ell, &lambda, &cc);
                assert_eq!(got, want, "ell={ell} lambda={lambda} c={cc}");
            }
        }
    }
}

#[test]
fn criterion_03_hille_hardy_partial_sums() {
    let mut worst = 0.0f64;
    for lambda in [0.3, 1.7] {
        for u in [0.3, 1.0, 2.2] {
            for v in [0.3, 1.0, 2.2] {
                for w in [-0.5, 0.2, 0.55] {
                    let lhs = hille_hardy_lhs(lambda, u, v, c(w, 0.0), 80).unwrap();
                    let rhs = hille_hardy_closed(lambda, u, v, c(w, 0.0)).unwrap();
                    worst = worst.max((lhs - rhs).norm() / rhs.norm());
                }
            }
        }
    }
    assert!(worst <= 1e-9, "worst residual {worst:.3e}");
}

#[test]
fn criterion_04_gegenbauer_expansions() {
    let tgrid: Vec<f64> = (0..9).map(|i| -0.9 + 0.225 * i as f64).collect();
    let mut worst = 0.0f64;
    for nu in [0.5, 1.5] {
        // Expansion of e^{wt} with normalized-Bessel coefficients.
        for w in [c(0.7, 0.0), c(3.0, 0.0), c(0.0, 5.0), c(2.0, 2.0)] {
            for &t in &tgrid {
                let mut sum = c(0.0, 0.0);
                for m in 0..=40usize {
                    let cm = (w / 2.0).powi(m as i32)
                        * gamma(nu + 1.0).unwrap()
                        * bessel_i_tilde(nu + m as f64, w).unwrap();
                    sum += cm * gegenbauer(m, nu, t);
                }
                let lhs = (w * t).exp();
                worst = worst.max((sum - lhs).norm() / lhs.norm());
            }
        }
        // Expansion of the shifted normalized Bessel function.
        for alpha in [1.0, 3.0, 5.0] {
            for &t in &tgrid {
                let mut sum = 0.0f64;
                for m in 0..=40usize {
                    let cm = alpha.powi(2 * m as i32) * gamma(2.0 * nu + 1.0).unwrap()
                        / (2f64.powi(m as i32) * gamma(nu + 0.5).unwrap())
                        * bessel_i_tilde(2.0 * (m as f64 + nu), c(2f64.sqrt() * alpha, 0.0))
                            .unwrap()
                            .re;
                    sum += cm * gegenbauer(m, nu, t);
                }
                let lhs = bessel_i_tilde(nu - 0.5, c(alpha * (1.0 + t).sqrt(), 0.0))
                    .unwrap()
                    .re;
                worst = worst.max((sum - lhs).abs() / lhs.abs());
            }
        }
    }
    assert!(worst <= 1e-9, "worst residual {worst:.3e}");
}

#[test]
fn criterion_05_bessel_gegenbauer_series_closed_forms() {
    let nus = [0.3, 0.8, 1.5, 2.2, 3.0];
    let ts: Vec<f64> = (0..10).map(|i| -0.9 + 0.2 * i as f64).collect();
    let ws = [c(0.5, 0.0), c(2.0, 1.0), c(0.0, 3.0), c(1.5, -0.8), c(4.0, 0.0)];
    let mut worst = 0.0f64;
    let mut points = 0usize;
    for &nu in &nus {
        for &t in &ts {
            for &w in &ws {
                let s1 = i_fun(1.0, nu, w, t).unwrap();
                let c1 = i_fun_closed_b1(w, t);
                worst = worst.max((s1.value - c1).norm() / c1.norm().max(1e-12));
                let s2 = i_fun(2.0, nu, w, t).unwrap();
                let c2 = i_fun_closed_b2(nu, w, t).unwrap();
                worst = worst.max((s2.value - c2).norm() / c2.norm().max(1e-12));
                points += 2;
            }
        }
    }
    assert!(points >= 500, "grid has {points} points");
    assert!(worst <= 1e-10, "worst residual {worst:.3e}");
}

#[test]
fn criterion_06_ladder_commutation_relations() {
    let mut worst = 0.0f64;
    for (params, m_top) in [
        (DeformParams::uniform(1, 2.0, 0.6).unwrap(), 1usize),
        (DeformParams::uniform(1, 1.5, 0.7).unwrap(), 1),
        (DeformParams::new(2, 2.0, vec![0.4, 0.7]).unwrap(), 2),
        (DeformParams::uniform(3, 1.0, 0.0).unwrap(), 2),
    ] {
        for m in 0..=m_top {
            let sector = RadialSector::new(m, &params).unwrap();
            let report = sl2_relation_check(&sector, 16).unwrap();
            worst = worst.max(report.max_residual);
        }
    }
    assert!(worst <= 1e-10, "worst commutator residual {worst:.3e}");
}

#[test]
fn criterion_07_kernel_eigenrelation() {
    let mut worst = 0.0f64;
    for (dim, a, k) in [(1usize, 1.0, 0.6), (1, 2.0, 0.6), (3, 1.0, 0.0), (3, 2.0, 0.0)] {
        let params = DeformParams::uniform(dim, a, k).unwrap();
        for m in [0usize, 1] {
            let sector = RadialSector::new(m, &params).unwrap();
            let lambda = sector.lambda();
            let rule = radial_rule(170, &params, m).unwrap();
            for z in [c(0.4, 0.0), c(0.4, 1.0)] {
                for ell in [0usize, 2, 4, 6] {
                    for r in [0.5, 1.3] {
                        let mut lhs = c(0.0, 0.0);
                        for (&s, &w) in rule.nodes.iter().zip(&rule.weights) {
                            let kv = lambda_m(r, s, z, &sector).unwrap().value;
                            let fv = phi_basis(ell, &sector, s).unwrap();
                            lhs += kv
                                * (fv * w * (2.0 / a * s.powf(a)).exp()
                                    / s.powi(2 * m as i32));
                        }
                        let rhs = (-z * (2.0 * ell as f64 + lambda + 1.0)).exp()
                            * phi_basis(ell, &sector, r).unwrap();
                        worst = worst.max((lhs - rhs).norm() / rhs.norm());
                    }
                }
            }
        }
    }
    assert!(worst <= 1e-8, "worst eigenrelation residual {worst:.3e}");
}

#[test]
fn criterion_08_semigroup_composition_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let mut worst = 0.0f64;
    for params in [
        DeformParams::uniform(1, 2.0, 0.6).unwrap(),
        DeformParams::uniform(1, 1.5, 0.7).unwrap(),
    ] {
        for m in [0usize, 1] {
            let sector = RadialSector::new(m, &params).unwrap();
            for _ in 0..10 {
                let r = rng.gen_range(0.3..2.0);
                let rp = rng.gen_range(0.3..2.0);
                let z1 = c(rng.gen_range(0.3..1.0), rng.gen_range(-0.4..0.4));
                let z2 = c(rng.gen_range(0.3..1.0), rng.gen_range(-0.4..0.4));
                worst = worst.max(semigroup_kernel_law(r, rp, z1, z2, &sector, 170).unwrap());
            }
        }
    }
    assert!(worst <= 1e-7, "worst composition residual {worst:.3e}");
}

#[test]
fn criterion_09_weber_integrals() {
    let mut worst = 0.0f64;
    let exp_sets = [
        (c(1.0, 0.0), 0.8, 1.3, 0.5),
        (c(0.7, 0.5), 1.1, 0.6, 1.2),
        (c(1.5, -0.9), 0.4, 0.9, 0.0),
        (c(0.5, 0.2), 2.0, 1.7, 2.3),
        (c(2.0, 1.5), 0.9, 0.9, 0.7),
        (c(1.2, 0.0), 0.5, 0.5, 1.0),
        (c(0.9, -0.3), 1.4, 0.8, 0.25),
        (c(1.8, 0.9), 0.6, 1.5, 1.8),
        (c(0.6, 0.1), 1.0, 1.0, 3.1),
        (c(1.1, -0.6), 0.7, 1.2, 0.9),
    ];
    for (delta, alpha, beta, nu) in exp_sets {
        worst = worst.max(weber_second_exponential(delta, alpha, beta, nu, 160).unwrap());
    }
    let lap_sets = [
        (c(1.0, 0.0), 0.8, 1.3, 0.5, 0usize),
        (c(0.7, 0.5), 1.1, 0.6, 1.2, 1),
        (c(1.5, -0.9), 0.4, 0.9, 0.3, 2),
        (c(0.5, 0.2), 2.0, 1.7, 2.3, 0),
        (c(2.0, 1.5), 0.9, 0.9, 0.7, 3),
        (c(1.2, 0.0), 0.5, 0.5, 1.0, 2),
        (c(0.9, -0.3), 1.4, 0.8, 0.25, 1),
        (c(1.8, 0.9), 0.6, 1.5, 1.8, 0),
        (c(0.6, 0.1), 1.0, 1.0, 3.1, 2),
        (c(1.1, -0.6), 0.7, 1.2, 0.9, 1),
    ];
    for (delta, alpha, beta, nu, ell) in lap_sets {
        worst = worst.max(weber_laguerre_laplace(delta, alpha, beta, nu, ell, 160).unwrap());
    }
    assert!(worst <= 1e-7, "worst Weber residual {worst:.3e}");
}

#[test]
fn criterion_10_plancherel() {
    // Coefficient-space pipeline: an isometry to rounding error.
    let params = DeformParams::uniform(2, 1.5, 0.5).unwrap();
    let f = SpectralFunction::from_coeffs(
        &params,
        [
            ((0, 0, 0), c(0.4, -0.8)),
            ((2, 1, 0), c(-0.2, 0.5)),
            ((5, 2, 0), c(0.9, 0.1)),
            ((7, 0, 0), c(0.3, 0.3)),
        ],
        Truncation { ell_max: 7, m_max: 2 },
    )
    .unwrap();
    let g = fka_apply_spectral(&f, DefectPolicy::Refuse).unwrap();
    let spectral_defect = (g.norm_sq() / f.norm_sq() - 1.0).abs();
    assert!(spectral_defect <= 1e-14, "spectral defect {spectral_defect:.3e}");

    // Kernel-quadrature pipeline, five functions per supported scope.
    let line = DeformParams::uniform(1, 2.0, 0.6).unwrap();
    let line_spec = BKernelSpec::new(&line).unwrap();
    let fns_1d: [fn(&[f64]) -> Cplx; 5] = [
        |x| c((-x[0] * x[0] / 2.0).exp(), 0.0),
        |x| c((-x[0] * x[0] / 2.0).exp() * x[0], 0.0),
        |x| c((-x[0] * x[0]).exp(), 0.5 * (-x[0] * x[0] / 2.0).exp()),
        |x| c((-x[0] * x[0] / 2.0).exp() * (1.0 + x[0] * x[0]), 0.0),
        |x| c((-0.8 * x[0] * x[0]).exp() * x[0], (-x[0] * x[0] / 2.0).exp() * x[0]),
    ];
    let mut worst = 0.0f64;
    for f in fns_1d {
        worst = worst.max(plancherel_residual(&f, &line_spec, 110, 2).unwrap());
    }

    let plane = DeformParams::uniform(2, 2.0, 0.0).unwrap();
    let plane_spec = BKernelSpec::new(&plane).unwrap();
    let fns_2d: [fn(&[f64]) -> Cplx; 5] = [
        |x| c((-(x[0] * x[0] + x[1] * x[1]) / 2.0).exp(), 0.0),
        |x| c((-(x[0] * x[0] + x[1] * x[1]) / 2.0).exp() * x[0], 0.0),
        |x| c((-(x[0] * x[0] + x[1] * x[1])).exp(), 0.0),
        |x| {
            let q = x[0] * x[0] + x[1] * x[1];
            c((-q / 2.0).exp() * x[1], 0.3 * (-q / 2.0).exp())
        },
        |x| {
            let q = x[0] * x[0] + x[1] * x[1];
            c((-0.7 * q).exp() * (x[0] + x[1]), (-q / 2.0).exp() * x[0] * x[1])
        },
    ];
    for f in fns_2d {
        worst = worst.max(plancherel_residual(&f, &plane_spec, 60, 24).unwrap());
    }
    assert!(worst <= 1e-6, "worst kernel-pipeline defect {worst:.3e}");
}

#[test]
fn criterion_11_inversion_and_finite_order() {
    // Square and order from exact rational phase arithmetic.
    for (num, den, square, order) in [
        (1i64, 1i64, SquareBehavior::Identity, 2u32),
        (2, 1, SquareBehavior::Parity, 4),
        (1, 2, SquareBehavior::Identity, 2),
        (2, 3, SquareBehavior::Parity, 4),
        (3, 2, SquareBehavior::Other, 6),
    ] {
        let rep = inversion_check(num, den, 30, 30).unwrap();
        assert_eq!(rep.square, square, "a = {num}/{den}");
        assert_eq!(rep.order, order, "a = {num}/{den}");
    }
    // Double transform on coefficients: identity for a = 1, parity for a = 2.
    for (a, parity) in [(1.0, false), (2.0, true)] {
        let params = DeformParams::uniform(1, a, 0.4).unwrap();
        let f = SpectralFunction::from_coeffs(
            &params,
            [((0, 0, 0), c(0.7, 0.1)), ((2, 1, 0), c(-0.3, 0.6)), ((4, 0, 0), c(0.2, -0.9))],
            Truncation { ell_max: 4, m_max: 1 },
        )
        .unwrap();
        let g = fka_apply_spectral(
            &fka_apply_spectral(&f, DefectPolicy::Refuse).unwrap(),
            DefectPolicy::Refuse,
        )
        .unwrap();
        for (ell, m) in [(0usize, 0usize), (2, 1), (4, 0)] {
            let sign = if parity && m % 2 == 1 { -1.0 } else { 1.0 };
            let d = (g.coeff(ell, m, 0) - f.coeff(ell, m, 0) * sign).norm();
            assert!(d <= 1e-14, "a={a} (ell,m)=({ell},{m}) residual {d:.3e}");
        }
    }
}

#[test]
fn criterion_12_hecke_identity() {
    let p1 = DeformParams::uniform(1, 1.0, 0.7).unwrap();
    let s1 = BKernelSpec::new(&p1).unwrap();
    let out1: Vec<Vec<f64>> = vec![vec![0.4], vec![-0.9], vec![1.7]];
    let r0 = hecke_check(&|_| c(1.0, 0.0), 0, &s1, &out1, 140, 2).unwrap();
    let r1 = hecke_check(&|x| c(x[0], 0.0), 1, &s1, &out1, 140, 2).unwrap();

    let pz = DeformParams::new(2, 2.0, vec![0.4, 0.7]).unwrap();
    let sz = BKernelSpec::new(&pz).unwrap();
    let out2: Vec<Vec<f64>> = vec![vec![0.6, 0.3], vec![-1.2, 0.5]];
    let rz1 = hecke_check(&|x| c(x[0], 0.0), 1, &sz, &out2, 100, 32).unwrap();
    // Degree-two polynomial harmonic for the deformed product weight.
    let (k1, k2) = (0.4, 0.7);
    let rz2 = hecke_check(
        &move |x| c((1.0 + 2.0 * k2) * x[0] * x[0] - (1.0 + 2.0 * k1) * x[1] * x[1], 0.0),
        2,
        &sz,
        &out2,
        100,
        32,
    )
    .unwrap();
    let worst = r0.max(r1).max(rz1).max(rz2);
    assert!(worst <= 1e-7, "worst Hecke residual {worst:.3e}");
}

#[test]
fn criterion_13_bochner_identity() {
    let psi = |r: f64| c((-r * r / 2.0).exp() * (1.0 + 0.25 * r * r), 0.0);
    let psi1 = |r: f64| c((-r).exp() * (1.0 + 0.25 * r * r), 0.0);
    let mut worst = 0.0f64;

    let pk1 = DeformParams::uniform(3, 1.0, 0.0).unwrap();
    let sk1 = BKernelSpec::new(&pk1).unwrap();
    let out3: Vec<Vec<f64>> = vec![vec![0.5, 0.0, 0.0], vec![0.3, -0.4, 0.9]];
    worst = worst.max(bochner_check(&|_| c(1.0, 0.0), 0, &psi1, &sk1, &out3, 110, 32).unwrap());
    worst = worst.max(bochner_check(&|x| c(x[0], 0.0), 1, &sk1, &out3, 110, 32)
        .map(|r| r)
        .unwrap_or(f64::INFINITY)
        .min(f64::INFINITY));

    let pk2 = DeformParams::uniform(2, 2.0, 0.0).unwrap();
    let sk2 = BKernelSpec::new(&pk2).unwrap();
    let out2: Vec<Vec<f64>> = vec![vec![0.6, 0.3], vec![-1.1, 0.4]];
    worst = worst.max(bochner_check(&|_| c(1.0, 0.0), 0, &psi, &sk2, &out2, 100, 24).unwrap());
    worst = worst.max(bochner_check(&|x| c(x[0], 0.0), 1, &psi, &sk2, &out2, 100, 24).unwrap());
    assert!(worst <= 1e-7, "worst Bochner residual {worst:.3e}");
}

#[test]
fn criterion_14_master_formula() {
    let p02 = DeformParams::uniform(1, 2.0, 0.0).unwrap();
    let s02 = BKernelSpec::new(&p02).unwrap();
    let mut worst = master_formula_check(&[1.0], &[1.0], &s02, 2).unwrap();
    worst = worst.max(master_formula_check(&[0.0], &[1.3], &s02, 2).unwrap());

    let p1 = DeformParams::uniform(1, 1.0, 0.5).unwrap();
    let s1 = BKernelSpec::new(&p1).unwrap();
    worst = worst.max(master_formula_check(&[0.8], &[1.1], &s1, 2).unwrap());

    let pp = DeformParams::uniform(2, 2.0, 0.0).unwrap();
    let sp = BKernelSpec::new(&pp).unwrap();
    worst = worst.max(master_formula_check(&[0.6, 0.3], &[-0.5, 0.8], &sp, 32).unwrap());
    assert!(worst <= 1e-5, "worst master-formula residual {worst:.3e}");
}

#[test]
fn criterion_15_kernel_modulus_bound() {
    // The modulus bound needs 2<k> + N >= 2 (the Bessel order nu >= 0);
    // every configuration here satisfies it.
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    let configs = [
        DeformParams::uniform(1, 1.0, 1.0).unwrap(),
        DeformParams::uniform(3, 1.0, 0.0).unwrap(),
        DeformParams::uniform(1, 2.0, 0.7).unwrap(),
        DeformParams::new(2, 2.0, vec![0.4, 0.7]).unwrap(),
    ];
    for params in configs {
        let spec = BKernelSpec::new(&params).unwrap();
        let dim = params.dim();
        let mut max_mod = 0.0f64;
        for _ in 0..100_000 {
            let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let y: Vec<f64> = (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect();
            max_mod = max_mod.max(b_kernel(&x, &y, &spec).unwrap().norm());
        }
        assert!(
            max_mod <= 1.0 + 1e-12,
            "N={} a={} k={:?}: max |B| = {max_mod}",
            dim,
            params.a(),
            params.k()
        );
    }
}

#[test]
fn criterion_16_heisenberg_uncertainty() {
    // Inequality on random spectral functions.
    let params = DeformParams::uniform(1, 1.5, 0.4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..50 {
        let coeffs: Vec<((usize, usize, usize), Cplx)> = (0..6)
            .map(|_| {
                (
                    (rng.gen_range(0..6), rng.gen_range(0..2usize), 0),
                    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                )
            })
            .collect();
        let f = SpectralFunction::from_coeffs(
            &params,
            coeffs,
            Truncation { ell_max: 5, m_max: 1 },
        )
        .unwrap();
        if f.norm_sq() > 1e-12 {
            let (lhs, rhs) = heisenberg_product(&f).unwrap();
            assert!(lhs >= rhs - 1e-10 * rhs, "trial {trial}: {lhs} < {rhs}");
        }
    }
    // Equality on the scaled Gaussian family.
    let gp = DeformParams::uniform(1, 2.0, 0.3).unwrap();
    for cc in [0.5f64, 1.0, 2.0] {
        let profile = move |r: f64| c((-cc * r * r).exp(), 0.0);
        let sample = SectorSample { m: 0, j: 0, profile: &profile };
        let f = expand(&[sample], &gp, Truncation { ell_max: 60, m_max: 0 }, 220).unwrap();
        let (lhs, rhs) = heisenberg_product(&f).unwrap();
        let rel = (lhs - rhs).abs() / rhs;
        assert!(rel <= 1e-8, "c={cc}: equality defect {rel:.3e}");
    }
}

#[test]
fn criterion_17_kernel_differential_difference_system() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    // Points stay clear of the reflection hyperplanes (|x_i| >= 8h).
    let draw = |rng: &mut ChaCha8Rng, dim: usize| -> Vec<f64> {
        (0..dim)
            .map(|_| {
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                sign * rng.gen_range(0.3..1.5)
            })
            .collect()
    };
    let cases = [
        (DeformParams::uniform(1, 1.0, 0.5).unwrap(), 1e-2),
        (DeformParams::uniform(2, 2.0, 0.0).unwrap(), 5e-3),
        (DeformParams::uniform(3, 1.0, 0.0).unwrap(), 1e-2),
    ];
    for (params, h) in cases {
        let spec = BKernelSpec::new(&params).unwrap();
        let dim = params.dim();
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let x = draw(&mut rng, dim);
            let xi = draw(&mut rng, dim);
            worst = worst.max(pde_residuals(&x, &xi, &spec, h).unwrap().max());
        }
        assert!(
            worst <= 1e-6,
            "N={} a={}: worst PDE residual {worst:.3e}",
            dim,
            params.a()
        );
    }
}

#[test]
fn criterion_18_gaussian_normalization_constant() {
    let triples = [
        DeformParams::uniform(1, 1.0, 0.6).unwrap(),
        DeformParams::uniform(1, 1.5, 0.8).unwrap(),
        DeformParams::uniform(1, 2.0, 0.0).unwrap(),
        DeformParams::uniform(1, 0.75, 0.9).unwrap(),
        DeformParams::new(2, 1.0, vec![0.5, 0.2]).unwrap(),
        DeformParams::new(2, 2.0, vec![0.4, 0.7]).unwrap(),
        DeformParams::uniform(2, 1.5, 0.3).unwrap(),
        DeformParams::uniform(2, 2.0, 0.0).unwrap(),
        DeformParams::new(3, 2.0, vec![0.3, 0.2, 0.6]).unwrap(),
        DeformParams::uniform(3, 1.0, 0.0).unwrap(),
        DeformParams::uniform(3, 2.0, 0.5).unwrap(),
        DeformParams::new(3, 1.5, vec![0.4, 0.0, 0.8]).unwrap(),
    ];
    for params in triples {
        let a = params.a();
        let grid = AmbientGrid::new(&params, 60, 32).unwrap();
        let integral = grid.integrate(|x| {
            let r: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            c((-r.powf(a) / a).exp(), 0.0)
        });
        let expected = 1.0 / c_ka(&params).unwrap();
        let rel = (integral.re - expected).abs() / expected;
        assert!(
            rel <= 1e-10 && integral.im.abs() <= 1e-12,
            "N={} a={} k={:?}: rel {rel:.3e}",
            params.dim(),
            a,
            params.k()
        );
    }
}
