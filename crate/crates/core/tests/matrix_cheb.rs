mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use ellcomb::matrix_cheb::{
    build_mk, build_mk_prime, cheb_identity_check, chebforms_check, chebyshev_t, det_cofactor,
    det_poly, eigenvalue_product, eigenvalue_product_check,
};
use ellcomb::point_counts::ZetaFamily;
use ellcomb::UnivarPoly;

#[test]
fn determinants_give_point_counts() {
    let mut fam = ZetaFamily::new();
    for k in 1..=12 {
        assert_eq!(det_poly(&build_mk(k as usize)), -fam.n(k), "M_{k}");
        assert_eq!(det_poly(&build_mk_prime(k as usize)), *fam.g(k), "M'_{k}");
    }
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    for k in 1..=7 {
        assert_eq!(det_poly(&build_mk(k)), det_cofactor(&build_mk(k)));
    }
}

#[test]
fn chebyshev_identities_to_twelve() {
    for k in 1..=12 {
        assert!(cheb_identity_check(k), "k={k}");
        assert!(chebforms_check(k), "k={k}");
    }
}

#[test]
fn chebyshev_composition() {
    for m in 1..=5 {
        for n in 1..=5 {
            assert_eq!(chebyshev_t(m).compose(&chebyshev_t(n)), chebyshev_t(m * n));
        }
    }
    assert_eq!(chebyshev_t(3), UnivarPoly::from_i64s(&[0, -3, 0, 4]));
}

#[test]
fn eigenvalues_at_sample_points() {
    let mut fam = ZetaFamily::new();
    let exact = fam.n(4).eval_i64(5, 9);
    let approx = eigenvalue_product(4, 5.0, 9.0);
    assert!((approx.re - exact.to_f64().unwrap()).abs() < 1e-6);
    assert!(exact != BigInt::from(0));
    for k in [1, 6, 12, 24] {
        let samples: Vec<(i64, i64)> = (1..=20)
            .flat_map(|q| [(q, 1), (q, 20), (q, 2 * q + 2)])
            .collect();
        assert!(eigenvalue_product_check(k, &samples), "k={k}");
    }
}
