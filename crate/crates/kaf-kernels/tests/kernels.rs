use kaf_kernels::{
    alpha_beta, h_profile, lambda_full, lambda_full_sum, lambda_m, lambda_m_series, log_sinh,
    poisson_kernel, semigroup_kernel_law, weber_check, weber_laguerre_laplace,
    weber_second_exponential, Cplx, DeformParams, KernelError, Provenance, RadialSector,
};
use kaf_dunkl::{c_ka, d_k, sphere_quadrature};
use kaf_specfun::bessel::bessel_j;
use kaf_specfun::series::i_fun;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Cplx {
    Cplx::new(re, im)
}

fn rel(a: Cplx, b: Cplx) -> f64 {
    (a - b).norm() / b.norm()
}

mod zfun {
    use super::*;

    #[test]
    fn real_z_matches_coth_and_sech() {
        let (alpha, beta) = alpha_beta(c(1.0, 0.0)).unwrap();
        assert!((alpha - 2f64.sinh() / (2f64.cosh() - 1.0)).abs() < 1e-15);
        assert!((alpha - 1f64.tanh().recip()).abs() < 1e-13);
        assert!((beta - 1.0 / 1f64.cosh()).abs() < 1e-15);
    }

    #[test]
    fn quarter_period_point_is_degenerate() {
        let (alpha, beta) = alpha_beta(c(0.0, PI / 2.0)).unwrap();
        assert!(alpha.abs() < 1e-15);
        assert!(beta.abs() < 1e-15);
    }

    #[test]
    fn poles_are_rejected() {
        for z in [c(0.0, 0.0), c(0.0, PI), c(0.0, -2.0 * PI)] {
            assert!(matches!(alpha_beta(z), Err(KernelError::Pole(_))));
            assert!(matches!(log_sinh(z), Err(KernelError::Pole(_))));
        }
        assert!(matches!(alpha_beta(c(-0.2, 1.0)), Err(KernelError::Domain(_))));
    }

    #[test]
    fn beta_stays_strictly_inside_the_disc() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut tested = 0usize;
        while tested < 10_000 {
            let z = c(rng.gen_range(0.0..3.0), rng.gen_range(-9.0..9.0));
            match alpha_beta(z) {
                Ok((alpha, beta)) => {
                    assert!(alpha >= 0.0, "alpha < 0 at {z}");
                    assert!(beta.abs() < 1.0, "|beta| >= 1 at {z}");
                    tested += 1;
                }
                Err(KernelError::Pole(_)) => continue,
                Err(e) => panic!("unexpected error {e} at {z}"),
            }
        }
    }

    #[test]
    fn csch_modulus_decreases_off_the_axis() {
        for mu in [0.3, 1.2, 2.8, -0.7] {
            for eps in [0.1, 0.5, 1.0] {
                let off = c(eps, mu).sinh().norm().recip();
                let on = mu.sin().abs().recip();
                assert!(off < on, "mu = {mu}, eps = {eps}");
            }
        }
    }

    #[test]
    fn log_sinh_is_continuous_across_im_pi() {
        let below = log_sinh(c(0.5, PI - 1e-6)).unwrap();
        let above = log_sinh(c(0.5, PI + 1e-6)).unwrap();
        assert!((below - above).norm() < 1e-4);
        // Without the winding correction the jump would be 2*pi.
        let principal_above = c(0.5, PI + 1e-6).sinh().ln();
        assert!((below - principal_above).norm() > 6.0);
    }
}

mod radial {
    use super::*;

    fn series_check(params: &DeformParams, m: usize, z: Cplx, n_terms: usize, tol: f64) {
        let sector = RadialSector::new(m, params).unwrap();
        let (r, s) = (0.7, 1.3);
        let closed = lambda_m(r, s, z, &sector).unwrap();
        let series = lambda_m_series(r, s, z, &sector, n_terms).unwrap();
        assert_eq!(closed.provenance, Provenance::ClosedForm);
        assert_eq!(series.provenance, Provenance::Series);
        assert!(
            rel(closed.value, series.value) < tol,
            "params (N={}, a={}, m={m}), z = {z}: rel = {}",
            params.dim(),
            params.a(),
            rel(closed.value, series.value)
        );
    }

    #[test]
    fn closed_form_matches_eigenfunction_series() {
        series_check(&DeformParams::uniform(3, 2.0, 0.5).unwrap(), 0, c(0.5, 0.0), 60, 1e-8);
        series_check(&DeformParams::uniform(3, 2.0, 0.5).unwrap(), 2, c(0.5, 0.0), 60, 1e-8);
        series_check(&DeformParams::uniform(1, 1.5, 0.8).unwrap(), 1, c(0.5, 0.0), 60, 1e-8);
    }

    #[test]
    fn branch_regression_above_the_real_axis() {
        // Pins the branch of sinh(z)^{-(lambda+1)} against the series,
        // including beyond |Im z| = pi where the principal power alone
        // would be wrong.
        series_check(&DeformParams::uniform(3, 2.0, 0.5).unwrap(), 0, c(0.3, 2.9), 150, 1e-8);
        series_check(&DeformParams::uniform(3, 2.0, 0.5).unwrap(), 1, c(0.4, 3.5), 120, 1e-8);
        series_check(&DeformParams::uniform(1, 1.5, 0.8).unwrap(), 0, c(0.4, -3.5), 120, 1e-8);
    }

    #[test]
    fn axis_value_collapses_to_j_bessel() {
        // At z = i*pi/2 the kernel is
        // e^{-i*pi(lambda+1)/2} (rs)^{-<k>-N/2+1} J_lambda((2/a)(rs)^{a/2}).
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let sector = RadialSector::new(0, &params).unwrap();
        let lambda = sector.lambda();
        for (r, s) in [(0.7, 1.3), (1.1, 0.4)] {
            let got = lambda_m(r, s, c(0.0, PI / 2.0), &sector).unwrap().value;
            let expo = -(params.index() + params.dim() as f64 / 2.0) + 1.0;
            let want = Cplx::from_polar(1.0, -PI * (lambda + 1.0) / 2.0)
                * (r * s).powf(expo)
                * bessel_j(lambda, r * s).unwrap();
            assert!(rel(got, want) < 1e-12, "rel = {}", rel(got, want));
        }
    }

    #[test]
    fn axis_value_is_the_eps_to_zero_limit() {
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let sector = RadialSector::new(0, &params).unwrap();
        let (r, s, mu) = (0.8, 1.1, 1.1);
        let axis = lambda_m(r, s, c(0.0, mu), &sector).unwrap().value;
        let mut prev = f64::INFINITY;
        for eps in [1e-1, 1e-2, 1e-3, 1e-4] {
            let err = (lambda_m(r, s, c(eps, mu), &sector).unwrap().value - axis).norm();
            assert!(err < prev, "no decrease at eps = {eps}");
            prev = err;
        }
        // First-order Richardson extrapolation in eps.
        let f1 = lambda_m(r, s, c(1e-4, mu), &sector).unwrap().value;
        let f2 = lambda_m(r, s, c(2e-4, mu), &sector).unwrap().value;
        assert!(rel(f1 * 2.0 - f2, axis) < 1e-6);
    }

    #[test]
    fn kernel_reproduces_eigenfunctions() {
        // int Lambda^(m)(r,s;z) f_{l,m}(s) s^{2<k>+N+a-3} ds
        //   = e^{-z(2l+lambda+1)} f_{l,m}(r).
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let sector = RadialSector::new(1, &params).unwrap();
        let (z, r, ell) = (c(0.4, 0.3), 0.9, 3usize);
        let a = params.a();
        let rule = kaf_quadrature::radial_rule(140, &params, sector.m()).unwrap();
        let mut lhs = Cplx::new(0.0, 0.0);
        for (&sv, &wv) in rule.nodes.iter().zip(&rule.weights) {
            let kv = lambda_m(r, sv, z, &sector).unwrap().value;
            let fv = kaf_sl2::phi_basis(ell, &sector, sv).unwrap();
            lhs += kv * (fv * wv * (2.0 / a * sv.powf(a)).exp() / sv.powi(2));
        }
        let rhs = (-z * (2.0 * ell as f64 + sector.lambda() + 1.0)).exp()
            * kaf_sl2::phi_basis(ell, &sector, r).unwrap();
        assert!(rel(lhs, rhs) < 1e-8, "rel = {}", rel(lhs, rhs));
    }

    #[test]
    fn modulus_bound_holds_at_every_evaluation() {
        let param_sets = [
            DeformParams::uniform(3, 2.0, 0.5).unwrap(),
            DeformParams::uniform(1, 1.5, 0.8).unwrap(),
            DeformParams::uniform(2, 1.0, 0.3).unwrap(),
        ];
        let zs = [c(0.0, 1.1), c(0.0, 2.0), c(0.01, 2.8), c(1.0, 0.5), c(0.3, -1.7)];
        for params in &param_sets {
            for m in 0..3 {
                let sector = RadialSector::new(m, params).unwrap();
                for &z in &zs {
                    for (r, s) in [(0.4, 0.9), (1.5, 2.2), (0.2, 3.0)] {
                        let eval = lambda_m(r, s, z, &sector).unwrap();
                        assert!(eval.bound_ok, "bound violated at z = {z}, m = {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn errors_name_the_violated_condition() {
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let sector = RadialSector::new(0, &params).unwrap();
        assert!(matches!(lambda_m(0.5, 1.0, c(0.0, PI), &sector), Err(KernelError::Pole(_))));
        assert!(matches!(lambda_m(-0.5, 1.0, c(0.5, 0.0), &sector), Err(KernelError::Domain(_))));
        assert!(matches!(
            lambda_m_series(0.5, 1.0, c(0.0, 1.0), &sector, 10),
            Err(KernelError::Domain(_))
        ));
    }
}

mod profile {
    use super::*;

    #[test]
    fn a2_closed_form_is_the_gaussian_kernel() {
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let (r, s, t) = (0.8, 1.2, -0.4);
        let z = c(0.6, 0.9);
        let sh = z.sinh();
        let coth = z.cosh() / sh;
        let want = (-(r * r + s * s) / 2.0 * coth).exp()
            * (-(params.mu() / 2.0) * log_sinh(z).unwrap()).exp()
            * (r * s * t / sh).exp();
        let got = h_profile(r, s, z, t, &params).unwrap();
        assert!(rel(got, want) < 1e-12);
    }

    #[test]
    fn closed_forms_match_the_gegenbauer_series() {
        for params in [
            DeformParams::uniform(3, 1.0, 0.6).unwrap(),
            DeformParams::uniform(3, 2.0, 0.4).unwrap(),
        ] {
            let a = params.a();
            let (r, s) = (0.9, 1.1);
            let z = c(0.5, 0.7);
            for t in [-1.0, -0.3, 0.2, 1.0] {
                let closed = h_profile(r, s, z, t, &params).unwrap();
                let w = (r * s).powf(a / 2.0) * 2.0 / a / z.sinh();
                let series = (-(r.powf(a) + s.powf(a)) / a * (z.cosh() / z.sinh())).exp()
                    * (-(params.mu() / a) * log_sinh(z).unwrap()).exp()
                    * i_fun(2.0 / a, params.nu(), w, t).unwrap().value;
                assert!(
                    rel(closed, series) < 1e-10,
                    "a = {a}, t = {t}: rel = {}",
                    rel(closed, series)
                );
            }
        }
    }

    #[test]
    fn gegenbauer_coefficients_are_the_sector_kernels() {
        // C_{nu,m}(h(r,s;z;.)) = (d_k/c_{k,a}) Lambda^(m)(r,s;z).
        for (params, tol) in [
            (DeformParams::uniform(3, 1.0, 0.6).unwrap(), 1e-8),
            (DeformParams::uniform(3, 2.0, 0.4).unwrap(), 1e-8),
            (DeformParams::uniform(3, 0.75, 0.2).unwrap(), 1e-7),
        ] {
            let (r, s) = (0.8, 1.2);
            let z = c(0.5, 0.4);
            let ratio = d_k(&params).unwrap() / c_ka(&params).unwrap();
            for m in 0..4 {
                let coeff = kaf_specfun::gegenbauer::gegenbauer_transform_complex(
                    m,
                    params.nu(),
                    |t| h_profile(r, s, z, t, &params).unwrap(),
                    64,
                )
                .unwrap();
                let sector = RadialSector::new(m, &params).unwrap();
                let want = lambda_m(r, s, z, &sector).unwrap().value * ratio;
                assert!(
                    rel(coeff, want) < tol,
                    "a = {}, m = {m}: rel = {}",
                    params.a(),
                    rel(coeff, want)
                );
            }
        }
    }

    #[test]
    fn domain_conditions_are_enforced() {
        // 2<k> + N = 1 fails the strict bound.
        let thin = DeformParams::uniform(1, 1.5, 0.0).unwrap();
        assert!(matches!(h_profile(0.5, 0.5, c(0.5, 0.0), 0.3, &thin), Err(KernelError::Domain(_))));
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        assert!(matches!(h_profile(0.5, 0.5, c(0.5, 0.0), 1.5, &params), Err(KernelError::Domain(_))));
        assert!(matches!(h_profile(0.5, 0.5, c(0.0, PI), 0.5, &params), Err(KernelError::Pole(_))));
    }
}

mod full {
    use super::*;

    #[test]
    fn rank_one_matches_the_two_sector_sum() {
        for params in [
            DeformParams::uniform(1, 2.0, 0.8).unwrap(),
            DeformParams::uniform(1, 1.3, 0.6).unwrap(),
        ] {
            for (x, y) in [([0.9], [-1.2]), ([0.9], [1.2]), ([1.7], [0.3])] {
                for z in [c(0.5, 0.0), c(0.2, 1.0)] {
                    let direct = lambda_full(&x, &y, z, &params).unwrap();
                    let sum = lambda_full_sum(&x, &y, z, &params, 1).unwrap();
                    assert!(
                        rel(direct.value, sum.value) < 1e-10,
                        "a = {}: rel = {}",
                        params.a(),
                        rel(direct.value, sum.value)
                    );
                    assert_eq!(sum.tail_bound, 0.0);
                }
            }
        }
    }

    #[test]
    fn reduced_kernel_matches_the_sector_sum() {
        let cases = [
            (DeformParams::uniform(3, 2.0, 0.0).unwrap(), c(0.4, 0.2)),
            (DeformParams::uniform(2, 1.0, 0.0).unwrap(), c(0.5, -0.6)),
        ];
        for (params, z) in cases {
            let n = params.dim();
            let x: Vec<f64> = [0.6, 0.2, 0.5][..n].to_vec();
            let y: Vec<f64> = [-0.3, 0.8, 0.4][..n].to_vec();
            let direct = lambda_full(&x, &y, z, &params).unwrap();
            let sum = lambda_full_sum(&x, &y, z, &params, 40).unwrap();
            assert!(
                rel(direct.value, sum.value) < 1e-7,
                "N = {n}: rel = {}",
                rel(direct.value, sum.value)
            );
        }
    }

    #[test]
    fn tail_bound_dominates_the_discarded_tail() {
        let params = DeformParams::uniform(3, 2.0, 0.0).unwrap();
        let (x, y) = ([0.8, 0.4, 1.0], [0.5, -0.9, 0.7]);
        let z = c(0.3, 0.5);
        let coarse = lambda_full_sum(&x, &y, z, &params, 8).unwrap();
        let fine = lambda_full_sum(&x, &y, z, &params, 48).unwrap();
        let actual = (coarse.value - fine.value).norm();
        assert!(coarse.tail_bound > actual, "{} vs {}", coarse.tail_bound, actual);
        assert!(fine.tail_bound < coarse.tail_bound);
    }

    #[test]
    fn kernel_is_symmetric_in_its_arguments() {
        let rank_one = DeformParams::uniform(1, 1.6, 0.9).unwrap();
        let reduced = DeformParams::uniform(3, 2.0, 0.0).unwrap();
        let z = c(0.35, 0.8);
        for (x, y) in [([0.7], [-1.1]), ([1.3], [0.2])] {
            let xy = lambda_full(&x, &y, z, &rank_one).unwrap().value;
            let yx = lambda_full(&y, &x, z, &rank_one).unwrap().value;
            assert!(rel(xy, yx) < 1e-12);
        }
        let (x, y) = ([0.6, -0.2, 0.9], [0.3, 0.8, -0.4]);
        let xy = lambda_full(&x, &y, z, &reduced).unwrap().value;
        let yx = lambda_full(&y, &x, z, &reduced).unwrap().value;
        assert!(rel(xy, yx) < 1e-12);
    }

    #[test]
    fn near_axis_modulus_bound() {
        // |Lambda(x,y;i*mu+eps)| <= |sin mu|^{-mu_param/a} for a in {1,2}.
        let cases = [
            (DeformParams::uniform(1, 2.0, 0.8).unwrap(), vec![0.9], vec![-1.2]),
            (DeformParams::uniform(3, 1.0, 0.0).unwrap(), vec![0.6, 0.2, 0.5], vec![0.3, -0.8, 0.4]),
        ];
        for (params, x, y) in cases {
            let expo = params.mu() / params.a();
            for mu in [0.4, 1.0, 2.2, -1.3] {
                for eps in [1e-3, 0.1] {
                    let v = lambda_full(&x, &y, c(eps, mu), &params).unwrap();
                    assert!(v.bound_ok);
                    let cap = mu.sin().abs().powf(-expo);
                    assert!(v.value.norm() <= cap * (1.0 + 1e-9), "mu = {mu}, eps = {eps}");
                }
            }
        }
    }

    #[test]
    fn exponential_decay_for_re_z_positive() {
        let params = DeformParams::uniform(2, 2.0, 0.0).unwrap();
        let z = c(0.3, 0.4);
        let (alpha, beta) = alpha_beta(z).unwrap();
        let big_b = alpha * (1.0 - beta.abs()) / params.a();
        let big_a = z.sinh().norm().powf(-params.mu() / params.a());
        assert!(big_a > 0.0 && big_b > 0.0);
        for r in [0.5, 1.5, 3.0] {
            for s in [0.7, 2.0, 4.0] {
                let x = [r * 0.6, r * 0.8];
                let y = [s, 0.0];
                let v = lambda_full(&x, &y, z, &params).unwrap().value.norm();
                assert!(v <= big_a * (-big_b * (r * r + s * s)).exp() * (1.0 + 1e-9));
            }
        }
    }

    #[test]
    fn unsupported_scope_is_reported() {
        let params = DeformParams::new(2, 2.0, vec![0.3, 0.5]).unwrap();
        let err = lambda_full(&[0.5, 0.5], &[0.3, -0.2], c(0.5, 0.0), &params);
        assert!(matches!(err, Err(KernelError::Scope(_))));
    }
}

mod poisson {
    use super::*;

    #[test]
    fn one_dimensional_kernels_are_signs() {
        let params = DeformParams::uniform(1, 2.0, 0.7).unwrap();
        assert_eq!(poisson_kernel(0, &[1.0], &[-1.0], &params).unwrap(), 1.0);
        assert_eq!(poisson_kernel(1, &[1.0], &[-1.0], &params).unwrap(), -1.0);
        assert_eq!(poisson_kernel(1, &[-1.0], &[-1.0], &params).unwrap(), 1.0);
        assert!(matches!(
            poisson_kernel(2, &[1.0], &[1.0], &params),
            Err(KernelError::Scope(_))
        ));
    }

    #[test]
    fn reproduces_degree_one_harmonics_on_the_sphere() {
        let params = DeformParams::uniform(3, 2.0, 0.0).unwrap();
        let omega = {
            let v = [0.3, -0.5, 0.8];
            let n = (v.iter().map(|t| t * t).sum::<f64>()).sqrt();
            [v[0] / n, v[1] / n, v[2] / n]
        };
        let (pts, wts) = sphere_quadrature(3, 24).unwrap();
        let dk = d_k(&params).unwrap();
        let mut acc = 0.0;
        for (p, w) in pts.iter().zip(&wts) {
            acc += poisson_kernel(1, &omega, p, &params).unwrap() * p[0] * w;
        }
        acc *= dk;
        assert!((acc - omega[0]).abs() / omega[0].abs() < 1e-9);
    }

    #[test]
    fn annihilates_other_degrees() {
        let params = DeformParams::uniform(3, 2.0, 0.0).unwrap();
        let omega = [0.0, 0.6, 0.8];
        let (pts, wts) = sphere_quadrature(3, 24).unwrap();
        let dk = d_k(&params).unwrap();
        let mut acc = 0.0;
        for (p, w) in pts.iter().zip(&wts) {
            // Degree-2 harmonic eta_1^2 - eta_2^2 projected against P_{0,1}.
            acc += poisson_kernel(1, &omega, p, &params).unwrap() * (p[0] * p[0] - p[1] * p[1]) * w;
        }
        assert!((acc * dk).abs() < 1e-10);
    }

    #[test]
    fn planar_case_is_the_chebyshev_limit() {
        let params = DeformParams::uniform(2, 2.0, 0.0).unwrap();
        let (t1, t2) = (0.7f64, 2.3f64);
        let omega = [t1.cos(), t1.sin()];
        let eta = [t2.cos(), t2.sin()];
        for m in 1..5 {
            let got = poisson_kernel(m, &omega, &eta, &params).unwrap();
            let want = 2.0 * (m as f64 * (t1 - t2)).cos();
            assert!((got - want).abs() < 1e-10 * (1.0 + want.abs()), "m = {m}");
        }
        assert_eq!(poisson_kernel(0, &omega, &eta, &params).unwrap(), 1.0);
    }

    #[test]
    fn multidimensional_nonzero_k_is_out_of_scope() {
        let params = DeformParams::new(2, 2.0, vec![0.4, 0.1]).unwrap();
        assert!(matches!(
            poisson_kernel(1, &[1.0, 0.0], &[0.0, 1.0], &params),
            Err(KernelError::Scope(_))
        ));
    }
}

mod checks {
    use super::*;

    #[test]
    fn semigroup_law_gaussian_case() {
        let params = DeformParams::uniform(3, 2.0, 0.0).unwrap();
        let sector = RadialSector::new(0, &params).unwrap();
        let res = semigroup_kernel_law(0.8, 1.4, c(0.5, 0.0), c(0.5, 0.0), &sector, 110).unwrap();
        assert!(res < 1e-8, "residual {res}");
    }

    #[test]
    fn semigroup_law_a1_odd_sector() {
        let params = DeformParams::uniform(3, 1.0, 0.4).unwrap();
        let sector = RadialSector::new(1, &params).unwrap();
        let res = semigroup_kernel_law(0.8, 1.4, c(0.3, 0.0), c(0.7, 0.0), &sector, 140).unwrap();
        assert!(res < 1e-7, "residual {res}");
    }

    #[test]
    fn semigroup_law_complex_times() {
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let sector = RadialSector::new(1, &params).unwrap();
        let res =
            semigroup_kernel_law(0.9, 1.1, c(0.5, 0.3), c(0.6, -0.2), &sector, 130).unwrap();
        assert!(res < 1e-7, "residual {res}");
    }

    #[test]
    fn kernel_is_continuous_as_z2_vanishes() {
        let params = DeformParams::uniform(3, 2.0, 0.5).unwrap();
        let sector = RadialSector::new(0, &params).unwrap();
        let z1 = c(0.5, 0.2);
        let eps = 1e-4;
        let base = lambda_m(0.8, 1.4, z1, &sector).unwrap().value;
        let f1 = lambda_m(0.8, 1.4, z1 + c(eps, 0.0), &sector).unwrap().value;
        let f2 = lambda_m(0.8, 1.4, z1 + c(2.0 * eps, 0.0), &sector).unwrap().value;
        // Richardson-extrapolated limit, so only the O(eps^2) error remains.
        assert!(rel(f1 * 2.0 - f2, base) < 1e-6);
    }

    #[test]
    fn rejects_left_half_plane_times() {
        let params = DeformParams::uniform(3, 2.0, 0.0).unwrap();
        let sector = RadialSector::new(0, &params).unwrap();
        assert!(matches!(
            semigroup_kernel_law(0.8, 1.4, c(-0.1, 0.0), c(0.5, 0.0), &sector, 60),
            Err(KernelError::Domain(_))
        ));
    }

    #[test]
    fn weber_second_exponential_unit_case() {
        let res = weber_second_exponential(c(1.0, 0.0), 1.0, 1.0, 0.0, 160).unwrap();
        assert!(res < 1e-8, "residual {res}");
    }

    #[test]
    fn weber_second_exponential_asymmetric_case() {
        let res = weber_second_exponential(c(2.0, 0.0), 0.5, 1.5, 1.0, 160).unwrap();
        assert!(res < 1e-8, "residual {res}");
    }

    #[test]
    fn weber_second_exponential_complex_rate() {
        let res = weber_second_exponential(c(1.0, 0.7), 0.8, 1.1, 0.5, 200).unwrap();
        assert!(res < 1e-7, "residual {res}");
    }

    #[test]
    fn laguerre_laplace_reduces_to_bessel_laplace_at_ell_zero() {
        let res = weber_laguerre_laplace(c(1.2, 0.0), 0.9, 1.0, 0.7, 0, 160).unwrap();
        assert!(res < 1e-8, "residual {res}");
    }

    #[test]
    fn laguerre_laplace_higher_degree() {
        let res = weber_laguerre_laplace(c(1.5, 0.0), 0.6, 0.9, 1.2, 2, 160).unwrap();
        assert!(res < 1e-7, "residual {res}");
        let res = weber_laguerre_laplace(c(1.1, 0.4), 0.5, 1.2, 0.8, 3, 200).unwrap();
        assert!(res < 1e-7, "residual {res}");
    }

    #[test]
    fn combined_weber_check() {
        let res = weber_check(c(1.3, 0.2), 0.7, 1.1, 0.9).unwrap();
        assert!(res < 1e-7, "residual {res}");
    }

    #[test]
    fn bessel_gegenbauer_bound_survey_for_other_b() {
        // The sup bound |I(b,nu;w;t)| <= e^{|Re w|} is established only for
        // b in {1, 2}; here it is surveyed for other b and reported, not
        // asserted.
        let nu = 0.9;
        let mut worst: (f64, f64, Cplx, f64) = (0.0, 0.0, c(0.0, 0.0), 0.0);
        for b in [0.5, 1.5, 3.0] {
            for w in [c(1.0, 0.0), c(2.0, 1.0), c(0.5, -2.0), c(0.0, 3.0)] {
                for t in [-1.0, -0.5, 0.0, 0.5, 1.0] {
                    let v = i_fun(b, nu, w, t).unwrap().value.norm();
                    let ratio = v / w.re.abs().exp();
                    assert!(ratio.is_finite());
                    if ratio > worst.0 {
                        worst = (ratio, b, w, t);
                    }
                }
            }
        }
        println!(
            "largest |I(b,nu;w;t)| / e^|Re w| over the b not in {{1,2}} survey: \
             {:.6} at b = {}, w = {}, t = {}",
            worst.0, worst.1, worst.2, worst.3
        );
    }
}
