mod common;

use common::p;
use ellcomb::point_counts::{
    e_k_binomial, e_k_from_pik, e_k_recurrence, n_k_binomial, n_k_partition, p_ik, ZetaFamily,
};
use ellcomb::verify::alternates_in_v;
use ellcomb::BivarPoly;

#[test]
fn three_routes_to_n_k_agree() {
    let mut fam = ZetaFamily::new();
    for k in 1..=30 {
        let n = fam.n(k).clone();
        assert_eq!(n_k_partition(k), n, "partition, k={k}");
        assert_eq!(n_k_binomial(k), n, "binomial, k={k}");
    }
}

#[test]
fn three_routes_to_e_k_agree() {
    for k in 1..=30 {
        let e = e_k_recurrence(k);
        assert_eq!(e_k_binomial(k), e, "binomial, k={k}");
        assert_eq!(e_k_from_pik(k), e, "P_(i,k), k={k}");
    }
}

#[test]
fn coefficients_alternate_with_positive_p_ik() {
    let mut fam = ZetaFamily::new();
    for k in 1..=30 {
        let n = fam.n(k).clone();
        assert!(alternates_in_v(&n), "k={k}");
        for i in 1..=k {
            let c = n.coefficient_of_v(i);
            let signed = if i % 2 == 1 { c } else { -&c };
            assert_eq!(signed, p_ik(i, k).unwrap(), "k={k} i={i}");
            assert!(signed
                .coeffs()
                .iter()
                .all(|x| x.sign() == num_bigint::Sign::Plus));
        }
    }
}

#[test]
fn e_recurrence_through_n_1() {
    let mut fam = ZetaFamily::new();
    let one_plus_q = p("1 + q");
    for n in 2..=20 {
        let lhs = &BivarPoly::v() * &fam.e(n).clone();
        let rhs = &(&fam.e(n + 1).clone() + &(&one_plus_q * &fam.e(n).clone()))
            + &(&BivarPoly::q() * &fam.e(n - 1).clone());
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn h_and_e_are_dual() {
    let mut fam = ZetaFamily::new();
    assert_eq!(&fam.e(0).clone() * &fam.h(0).clone(), BivarPoly::one());
    for k in 1..=20 {
        let mut acc = BivarPoly::zero();
        for a in 0..=k {
            let term = &fam.e(a).clone() * &fam.h(k - a).clone();
            acc = if a % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        assert!(acc.is_zero(), "k={k}: {acc}");
    }
}

#[test]
fn n_mk_is_n_m_composed_with_n_k() {
    let mut fam = ZetaFamily::new();
    for m in 1..=5 {
        for k in 1..=5 {
            let inner = fam.n(k).clone();
            let composed = fam.n(m).clone().substitute_q_power(k).substitute_v(&inner);
            assert_eq!(composed, fam.n(m * k).clone(), "m={m} k={k}");
        }
    }
}

#[test]
fn p_ik_triangle_row() {
    let row: Vec<String> = (1..=5)
        .map(|i| p_ik(i, 5).unwrap().render_in("q"))
        .collect();
    assert_eq!(
        row,
        [
            "5*q^4 + 5*q^3 + 5*q^2 + 5*q + 5",
            "10*q^3 + 15*q^2 + 15*q + 10",
            "10*q^2 + 15*q + 10",
            "5*q + 5",
            "1",
        ]
    );
    assert!(p_ik(0, 5).is_err());
    assert!(p_ik(6, 5).is_err());
}
