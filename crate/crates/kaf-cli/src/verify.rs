use crate::config::{build_params, merge, FileConfig};
use crate::error::{CliError, EXIT_VERIFY_FAIL};
use crate::output::emit;
use crate::CommonArgs;
use kaf_kernels::{lambda_m, semigroup_kernel_law, weber_check};
use kaf_quadrature::{radial_rule, DeformParams};
use kaf_sl2::{phi_basis, sl2_relation_check, RadialSector, SectorSample, SpectralFunction,
    Truncation};
use kaf_specfun::gamma::gamma;
use kaf_specfun::gauss::gauss_laguerre_core;
use kaf_specfun::laguerre::laguerre;
use kaf_specfun::series::{hille_hardy_closed, hille_hardy_lhs, i_fun, i_fun_closed_b1,
    i_fun_closed_b2};
use kaf_specfun::gegenbauer::gegenbauer_transform_complex;
use kaf_transform::{b_kernel, bochner_check, hecke_check, heisenberg_product, inversion_check,
    master_formula_check, plancherel_residual, BKernelSpec, Cplx, SquareBehavior};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

struct Case {
    name: &'static str,
    reference: &'static str,
    tolerance: f64,
    run: Box<dyn FnOnce() -> Result<f64, String> + Send>,
}

struct CaseReport {
    name: String,
    reference: String,
    residual: Option<f64>,
    tolerance: f64,
    pass: bool,
    error: Option<String>,
}

fn case(
    name: &'static str,
    reference: &'static str,
    tolerance: f64,
    run: impl FnOnce() -> Result<f64, String> + Send + 'static,
) -> Case {
    Case { name, reference, tolerance, run: Box::new(run) }
}

fn err_str<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

fn specfun_suite() -> Vec<Case> {
    vec![
        case(
            "laguerre-orthogonality",
            "quadrature Gram matrix of L_l^(lambda) against the exact diagonal",
            1e-10,
            || {
                let mut worst = 0.0f64;
                for lambda in [-0.4, 0.0, 2.5] {
                    let rule = gauss_laguerre_core(40, lambda).map_err(err_str)?;
                    for ell in 0..=8usize {
                        for s in 0..=8usize {
                            let g: f64 = rule
                                .nodes
                                .iter()
                                .zip(&rule.weights)
                                .map(|(&t, &w)| w * laguerre(ell, lambda, t) * laguerre(s, lambda, t))
                                .sum();
                            let expected = if ell == s {
                                gamma(lambda + ell as f64 + 1.0).map_err(err_str)?
                                    / gamma(ell as f64 + 1.0).map_err(err_str)?
                            } else {
                                0.0
                            };
                            let scale = gamma(lambda + ell as f64 + 1.0).map_err(err_str)?
                                / gamma(ell as f64 + 1.0).map_err(err_str)?;
                            worst = worst.max((g - expected).abs() / scale);
                        }
                    }
                }
                Ok(worst)
            },
        ),
        case(
            "hille-hardy",
            "bilinear Laguerre generating series against its closed form",
            1e-9,
            || {
                let mut worst = 0.0f64;
                for lambda in [0.3, 1.7] {
                    for (u, v, w) in [(0.4, 0.9, 0.3), (1.5, 0.2, -0.5), (2.0, 2.5, 0.55)] {
                        let lhs =
                            hille_hardy_lhs(lambda, u, v, c(w, 0.0), 80).map_err(err_str)?;
                        let rhs = hille_hardy_closed(lambda, u, v, c(w, 0.0)).map_err(err_str)?;
                        worst = worst.max((lhs - rhs).norm() / rhs.norm());
                    }
                }
                Ok(worst)
            },
        ),
        case(
            "gegenbauer-plane-wave",
            "Gegenbauer expansion of e^{wt} resummed against the exponential",
            1e-9,
            || {
                let mut worst = 0.0f64;
                for nu in [0.5, 1.5] {
                    for t in [-0.9, -0.3, 0.2, 0.8] {
                        for wv in [0.7, 3.0] {
                            let mut sum = c(0.0, 0.0);
                            for mm in 0..=40usize {
                                let cm = gegenbauer_transform_complex(
                                    mm,
                                    nu,
                                    |tt| c((wv * tt).exp(), 0.0),
                                    80,
                                )
                                .map_err(err_str)?;
                                sum += cm
                                    * kaf_specfun::gegenbauer::gegenbauer(mm, nu, t);
                            }
                            let lhs = c((wv * t).exp(), 0.0);
                            worst = worst.max((sum - lhs).norm() / lhs.norm());
                        }
                    }
                }
                Ok(worst)
            },
        ),
        case(
            "bessel-gegenbauer-closed-forms",
            "four-variable Bessel-Gegenbauer series against its elementary forms",
            1e-10,
            || {
                let mut worst = 0.0f64;
                for t in [-0.8, -0.1, 0.5, 0.95] {
                    for wv in [c(0.5, 0.0), c(2.0, 1.0), c(0.0, 3.0)] {
                        let s1 = i_fun(1.0, 0.8, wv, t).map_err(err_str)?;
                        let c1 = i_fun_closed_b1(wv, t);
                        worst = worst.max((s1.value - c1).norm() / c1.norm().max(1e-12));
                        let s2 = i_fun(2.0, 0.8, wv, t).map_err(err_str)?;
                        let c2 = i_fun_closed_b2(0.8, wv, t).map_err(err_str)?;
                        worst = worst.max((s2.value - c2).norm() / c2.norm().max(1e-12));
                    }
                }
                Ok(worst)
            },
        ),
    ]
}

fn sl2_suite(params: &DeformParams) -> Vec<Case> {
    let mut cases = Vec::new();
    let m_top = if params.dim() == 1 { 1 } else { 2 };
    for m in 0..=m_top {
        let p = params.clone();
        cases.push(case(
            match m {
                0 => "ladder-relations-m0",
                1 => "ladder-relations-m1",
                _ => "ladder-relations-m2",
            },
            "commutation relations of the oscillator ladder matrices",
            1e-10,
            move || {
                let sector = RadialSector::new(m, &p).map_err(err_str)?;
                let report = sl2_relation_check(&sector, 16).map_err(err_str)?;
                Ok(report.max_residual)
            },
        ));
    }
    let p = params.clone();
    cases.push(case(
        "spectral-norm-preservation",
        "coefficient-space transform is an exact isometry",
        1e-14,
        move || {
            let f = SpectralFunction::from_coeffs(
                &p,
                [
                    ((0, 0, 0), c(0.4, -0.8)),
                    ((3, 0, 0), c(-0.2, 0.5)),
                    ((5, 1, 0), c(0.9, 0.1)),
                ],
                Truncation { ell_max: 5, m_max: 1 },
            )
            .map_err(err_str)?;
            let g = kaf_sl2::fka_apply_spectral(&f, kaf_sl2::DefectPolicy::Refuse)
                .map_err(err_str)?;
            Ok((g.norm_sq() / f.norm_sq() - 1.0).abs())
        },
    ));
    cases
}

fn kernels_suite() -> Vec<Case> {
    vec![
        case(
            "semigroup-reproducing-law",
            "kernel composition over an intermediate radius reproduces the kernel",
            1e-7,
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(7);
                let params = DeformParams::uniform(1, 2.0, 0.6).map_err(err_str)?;
                let mut worst = 0.0f64;
                for m in [0usize, 1] {
                    let sector = RadialSector::new(m, &params).map_err(err_str)?;
                    for _ in 0..6 {
                        let r = rng.gen_range(0.3..2.0);
                        let rp = rng.gen_range(0.3..2.0);
                        let z1 = c(rng.gen_range(0.3..1.0), rng.gen_range(-0.4..0.4));
                        let z2 = c(rng.gen_range(0.3..1.0), rng.gen_range(-0.4..0.4));
                        worst = worst
                            .max(semigroup_kernel_law(r, rp, z1, z2, &sector, 170)
                                .map_err(err_str)?);
                    }
                }
                Ok(worst)
            },
        ),
        case(
            "sector-eigenrelation",
            "radial kernel integrates eigenfunctions to the exponential eigenvalue",
            1e-8,
            || {
                let params = DeformParams::uniform(1, 1.5, 0.7).map_err(err_str)?;
                let z = c(0.4, 0.2);
                let a = params.a();
                let mut worst = 0.0f64;
                for m in [0usize, 1] {
                    let sector = RadialSector::new(m, &params).map_err(err_str)?;
                    let lambda = sector.lambda();
                    let rule = radial_rule(170, &params, m).map_err(err_str)?;
                    for ell in [0usize, 2, 5] {
                        for r in [0.5, 1.3] {
                            let mut lhs = c(0.0, 0.0);
                            for (&s, &w) in rule.nodes.iter().zip(&rule.weights) {
                                let kv = lambda_m(r, s, z, &sector).map_err(err_str)?.value;
                                let fv = phi_basis(ell, &sector, s).map_err(err_str)?;
                                lhs += kv
                                    * (fv * w * (2.0 / a * s.powf(a)).exp()
                                        / s.powi(2 * m as i32));
                            }
                            let rhs = (-z * (2.0 * ell as f64 + lambda + 1.0)).exp()
                                * phi_basis(ell, &sector, r).map_err(err_str)?;
                            worst = worst.max((lhs - rhs).norm() / rhs.norm());
                        }
                    }
                }
                Ok(worst)
            },
        ),
        case(
            "kernel-normalization",
            "transform kernel equals 1 when either argument is zero",
            1e-12,
            || {
                let mut worst = 0.0f64;
                for params in [
                    DeformParams::uniform(1, 1.5, 0.6).map_err(err_str)?,
                    DeformParams::uniform(2, 2.0, 0.0).map_err(err_str)?,
                    DeformParams::new(2, 2.0, vec![0.4, 0.7]).map_err(err_str)?,
                    DeformParams::uniform(3, 1.0, 0.0).map_err(err_str)?,
                ] {
                    let spec = BKernelSpec::new(&params).map_err(err_str)?;
                    let y: Vec<f64> = (0..params.dim()).map(|i| 0.4 + 0.3 * i as f64).collect();
                    let zero = vec![0.0; params.dim()];
                    let v = b_kernel(&zero, &y, &spec).map_err(err_str)?;
                    worst = worst.max((v - c(1.0, 0.0)).norm());
                }
                Ok(worst)
            },
        ),
    ]
}

fn weber_suite() -> Vec<Case> {
    vec![case(
        "weber-integrals",
        "Bessel product and Laguerre-Bessel Laplace integrals against closed forms",
        1e-7,
        || {
            let mut worst = 0.0f64;
            let sets = [
                (c(1.0, 0.0), 0.8, 1.3, 0.5),
                (c(0.7, 0.5), 1.1, 0.6, 1.2),
                (c(1.5, -0.9), 0.4, 0.9, 0.0),
                (c(0.5, 0.2), 2.0, 1.7, 2.3),
                (c(2.0, 1.5), 0.9, 0.9, 0.7),
            ];
            for (delta, alpha, beta, nu) in sets {
                worst = worst.max(weber_check(delta, alpha, beta, nu).map_err(err_str)?);
            }
            Ok(worst)
        },
    )]
}

fn transform_suite() -> Vec<Case> {
    vec![
        case(
            "plancherel-kernel-pipeline",
            "quadrature transform preserves the weighted L2 norm",
            1e-6,
            || {
                let params = DeformParams::uniform(1, 2.0, 0.6).map_err(err_str)?;
                let spec = BKernelSpec::new(&params).map_err(err_str)?;
                let mut worst = 0.0f64;
                for f in [
                    (|x: &[f64]| c((-x[0] * x[0] / 2.0).exp(), 0.0)) as fn(&[f64]) -> Cplx,
                    |x| c((-x[0] * x[0] / 2.0).exp() * x[0], 0.0),
                    |x| c((-x[0] * x[0]).exp(), 0.5 * (-x[0] * x[0] / 2.0).exp()),
                ] {
                    worst = worst.max(plancherel_residual(&f, &spec, 110, 2).map_err(err_str)?);
                }
                Ok(worst)
            },
        ),
        case(
            "gaussian-fixed-point",
            "the standard Gaussian is fixed by the undeformed transform",
            1e-8,
            || {
                let params = DeformParams::uniform(1, 2.0, 0.0).map_err(err_str)?;
                let spec = BKernelSpec::new(&params).map_err(err_str)?;
                let grid =
                    kaf_transform::AmbientGrid::new(&params, 90, 2).map_err(err_str)?;
                let f = |x: &[f64]| c((-x[0] * x[0] / 2.0).exp(), 0.0);
                let out: Vec<Vec<f64>> = vec![vec![0.4], vec![-1.1], vec![2.0]];
                let got = kaf_transform::fka_apply_kernel(&f, &out, &spec, &grid)
                    .map_err(err_str)?;
                let mut worst = 0.0f64;
                for (xi, g) in out.iter().zip(&got) {
                    let expected = f(xi);
                    worst = worst.max((g - expected).norm() / expected.norm());
                }
                Ok(worst)
            },
        ),
        case(
            "hecke-identity",
            "Gaussian-times-harmonic inputs reproduce with the sector phase",
            1e-7,
            || {
                let p1 = DeformParams::uniform(1, 1.0, 0.7).map_err(err_str)?;
                let s1 = BKernelSpec::new(&p1).map_err(err_str)?;
                let out1: Vec<Vec<f64>> = vec![vec![0.4], vec![-0.9], vec![1.7]];
                let r1 = hecke_check(&|x| c(x[0], 0.0), 1, &s1, &out1, 140, 2)
                    .map_err(err_str)?;
                let p2 = DeformParams::uniform(2, 2.0, 0.0).map_err(err_str)?;
                let s2 = BKernelSpec::new(&p2).map_err(err_str)?;
                let out2: Vec<Vec<f64>> = vec![vec![0.6, 0.3], vec![-1.2, 0.5]];
                let r2 = hecke_check(&|x| c(x[0], x[1]), 1, &s2, &out2, 100, 32)
                    .map_err(err_str)?;
                Ok(r1.max(r2))
            },
        ),
        case(
            "bochner-radial-reduction",
            "radial inputs transform through the one-dimensional Bessel integral",
            1e-7,
            || {
                let params = DeformParams::uniform(3, 1.0, 0.0).map_err(err_str)?;
                let spec = BKernelSpec::new(&params).map_err(err_str)?;
                let psi = |r: f64| c((-r).exp() * (1.0 + 0.25 * r * r), 0.0);
                let out: Vec<Vec<f64>> =
                    vec![vec![0.5, 0.0, 0.0], vec![0.3, -0.4, 0.9]];
                bochner_check(&|_| c(1.0, 0.0), 0, &psi, &spec, &out, 110, 32)
                    .map_err(err_str)
            },
        ),
        case(
            "inversion-orders",
            "transform square and finite order match the rational phase arithmetic",
            0.5,
            || {
                let expected = [
                    (1i64, 1i64, SquareBehavior::Identity, 2u32),
                    (2, 1, SquareBehavior::Parity, 4),
                    (1, 2, SquareBehavior::Identity, 2),
                    (2, 3, SquareBehavior::Parity, 4),
                    (3, 2, SquareBehavior::Other, 6),
                ];
                let mut mismatches = 0.0;
                for (num, den, square, order) in expected {
                    let rep = inversion_check(num, den, 30, 30).map_err(err_str)?;
                    if rep.square != square || rep.order != order {
                        mismatches += 1.0;
                    }
                }
                Ok(mismatches)
            },
        ),
    ]
}

fn master_suite() -> Vec<Case> {
    vec![case(
        "master-formula",
        "chirp-weighted double-kernel integral reproduces the kernel with the quadratic phase",
        1e-5,
        || {
            let p02 = DeformParams::uniform(1, 2.0, 0.0).map_err(err_str)?;
            let s02 = BKernelSpec::new(&p02).map_err(err_str)?;
            let mut worst = master_formula_check(&[1.0], &[1.0], &s02, 2).map_err(err_str)?;
            let p1 = DeformParams::uniform(1, 1.0, 0.5).map_err(err_str)?;
            let s1 = BKernelSpec::new(&p1).map_err(err_str)?;
            worst = worst.max(master_formula_check(&[0.8], &[1.1], &s1, 2).map_err(err_str)?);
            Ok(worst)
        },
    )]
}

fn heisenberg_suite() -> Vec<Case> {
    vec![
        case(
            "ground-state-equality",
            "uncertainty product attains its lower bound on the deformed Gaussian",
            1e-12,
            || {
                let params = DeformParams::uniform(1, 2.0, 0.3).map_err(err_str)?;
                let f = SpectralFunction::from_coeffs(
                    &params,
                    [((0, 0, 0), c(1.0, 0.0))],
                    Truncation { ell_max: 0, m_max: 0 },
                )
                .map_err(err_str)?;
                let (lhs, rhs) = heisenberg_product(&f).map_err(err_str)?;
                Ok((lhs - rhs).abs() / rhs)
            },
        ),
        case(
            "scaled-gaussian-equality",
            "equality persists for rescaled Gaussians via the eigenbasis expansion",
            1e-8,
            || {
                let params = DeformParams::uniform(1, 2.0, 0.3).map_err(err_str)?;
                let profile = |r: f64| c((-2.0 * r * r).exp(), 0.0);
                let sample = SectorSample { m: 0, j: 0, profile: &profile };
                let f = kaf_sl2::expand(
                    &[sample],
                    &params,
                    Truncation { ell_max: 60, m_max: 0 },
                    220,
                )
                .map_err(err_str)?;
                let (lhs, rhs) = heisenberg_product(&f).map_err(err_str)?;
                Ok((lhs - rhs).abs() / rhs)
            },
        ),
        case(
            "random-inequality",
            "uncertainty product dominates its bound on random coefficient vectors",
            1e-10,
            || {
                let params = DeformParams::uniform(1, 1.5, 0.4).map_err(err_str)?;
                let mut rng = ChaCha8Rng::seed_from_u64(11);
                let mut worst = 0.0f64;
                for _ in 0..20 {
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
                    .map_err(err_str)?;
                    if f.norm_sq() > 1e-12 {
                        let (lhs, rhs) = heisenberg_product(&f).map_err(err_str)?;
                        worst = worst.max((rhs - lhs) / rhs);
                    }
                }
                Ok(worst.max(0.0))
            },
        ),
    ]
}

fn run_cases(cases: Vec<Case>) -> Vec<CaseReport> {
    let handles: Vec<_> = cases
        .into_iter()
        .map(|cs| {
            let Case { name, reference, tolerance, run } = cs;
            (
                name,
                reference,
                tolerance,
                std::thread::spawn(move || run()),
            )
        })
        .collect();
    handles
        .into_iter()
        .map(|(name, reference, tolerance, h)| match h.join() {
            Ok(Ok(residual)) => CaseReport {
                name: name.into(),
                reference: reference.into(),
                residual: Some(residual),
                tolerance,
                pass: residual <= tolerance,
                error: None,
            },
            Ok(Err(e)) => CaseReport {
                name: name.into(),
                reference: reference.into(),
                residual: None,
                tolerance,
                pass: false,
                error: Some(e),
            },
            Err(_) => CaseReport {
                name: name.into(),
                reference: reference.into(),
                residual: None,
                tolerance,
                pass: false,
                error: Some("case panicked".into()),
            },
        })
        .collect()
}

pub fn run(common: &CommonArgs, suite: Option<String>) -> Result<i32, CliError> {
    let file = FileConfig::load(common.config.as_deref())?;
    let params = build_params(common.dim, common.a, common.k.clone(), &file)?;
    let suite = merge(suite, file.suite.clone(), "all".into());

    let cases = match suite.as_str() {
        "specfun" => specfun_suite(),
        "sl2" => sl2_suite(&params),
        "kernels" => kernels_suite(),
        "weber" => weber_suite(),
        "transform" => transform_suite(),
        "master" => master_suite(),
        "heisenberg" => heisenberg_suite(),
        "all" => {
            let mut all = specfun_suite();
            all.extend(sl2_suite(&params));
            all.extend(kernels_suite());
            all.extend(weber_suite());
            all.extend(transform_suite());
            all.extend(master_suite());
            all.extend(heisenberg_suite());
            all
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown suite {other:?}; expected one of specfun, sl2, kernels, weber, \
                 transform, master, heisenberg, all"
            )))
        }
    };

    let reports = run_cases(cases);
    let all_pass = reports.iter().all(|r| r.pass);
    let doc = json!({
        "suite": suite,
        "cases": reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "reference": r.reference,
                    "residual": r.residual,
                    "tolerance": r.tolerance,
                    "pass": r.pass,
                    "error": r.error,
                })
            })
            .collect::<Vec<_>>(),
    });
    let out = common.out.clone().or(file.out.clone());
    emit(&format!("{doc:#}\n"), out.as_deref())?;
    Ok(if all_pass { 0 } else { EXIT_VERIFY_FAIL })
}
