use kaf_specfun::exact::{
    laguerre_coeffs_exact, rat, scaled_laguerre_exact, semigroup_monomial_exact,
};
use kaf_specfun::laguerre::laguerre_coeffs;
use num_traits::ToPrimitive;

#[test]
fn exact_coeffs_match_float_coeffs() {
    for &(ell, num, den) in &[(0usize, 1i64, 2i64), (3, -2, 5), (7, 0, 1), (10, 13, 4)] {
        let lam = rat(num, den);
        let exact = laguerre_coeffs_exact(ell, &lam);
        let float = laguerre_coeffs(ell, num as f64 / den as f64);
        for j in 0..=ell {
            let e = exact[j].to_f64().unwrap();
            let f = float.coeff(j);
            assert!((e - f).abs() < 1e-12 * e.abs().max(1.0), "ell={ell} j={j}");
        }
    }
}

#[test]
fn semigroup_expansion_is_exactly_the_scaled_laguerre() {
    // exp(−cB) tˡ = (−c)ˡ ℓ! L_ℓ^{(λ)}(t/c), coefficient by coefficient
    // in rational arithmetic: residual is exactly zero.
    for ell in 0..=10usize {
        for &(ln, ld) in &[(1i64, 2i64), (0, 1), (-2, 7), (5, 3)] {
            for &(cn, cd) in &[(1i64, 1i64), (1, 2), (-3, 4), (7, 5)] {
                let lam = rat(ln, ld);
                let c = rat(cn, cd);
                let lhs = semigroup_monomial_exact(ell, &lam, &c);
                let rhs = scaled_laguerre_exact(ell, &lam, &c);
                assert_eq!(lhs, rhs, "ell={ell} lambda={ln}/{ld} c={cn}/{cd}");
            }
        }
    }
}

#[test]
fn degree_zero_is_fixed() {
    let lam = rat(3, 2);
    let c = rat(9, 7);
    assert_eq!(semigroup_monomial_exact(0, &lam, &c), vec![rat(1, 1)]);
}
