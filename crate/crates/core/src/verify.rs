//! Cross-identity sweep over every module, sized by a single `max_k`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::curve_oracle::{count_points, hasse_bound_holds, predict_nk, Curve, MAX_SWEEP_ORDER};
use crate::cyclotomic::{self, euler_phi, CycTable};
use crate::matrix_cheb::{
    build_mk, build_mk_prime, cheb_identity_check, chebforms_check, det_poly,
    eigenvalue_product_check,
};
use crate::point_counts::{
    e_k_binomial, e_k_from_pik, e_k_recurrence, n_k_binomial, n_k_partition, p_ik, ZetaFamily,
};
use crate::poly::BivarPoly;
use crate::qt_combinatorics::{
    c_ij_check, chain_twisted, circular_subsets, lucas_qt, lucas_twisted, spanning_trees,
    subset_to_tree, wheel_poly_enum, wheel_poly_partition, MAX_CIJ_K, MAX_LUCAS_N, MAX_WHEEL_N,
};

/// Group of identities that can be run on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PointCounts,
    Combinatorics,
    Matrix,
    Cyclotomic,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::PointCounts,
        Suite::Combinatorics,
        Suite::Matrix,
        Suite::Cyclotomic,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PointCounts => "point-counts",
            Suite::Combinatorics => "combinatorics",
            Suite::Matrix => "matrix",
            Suite::Cyclotomic => "cyclotomic",
            Suite::Oracle => "oracle",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, suite: Suite, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:<14} {}", c.suite.name(), c.name)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

/// Curves swept by the oracle suite.
pub const ORACLE_CURVES: [(u64, i64, i64); 12] = [
    (5, 1, 1),
    (5, 2, 1),
    (5, -1, 0),
    (7, 0, 2),
    (7, 1, 3),
    (7, 3, 2),
    (11, 1, 1),
    (11, 2, 7),
    (11, 0, 3),
    (13, 1, 1),
    (13, 5, 2),
    (13, 0, 7),
];

pub fn run_all(max_k: u32) -> Report {
    run(&Suite::ALL, max_k)
}

pub fn run(suites: &[Suite], max_k: u32) -> Report {
    let max_k = max_k.max(1);
    let mut report = Report::default();
    for &suite in suites {
        match suite {
            Suite::PointCounts => point_count_checks(&mut report, max_k),
            Suite::Combinatorics => combinatorics_checks(&mut report, max_k),
            Suite::Matrix => matrix_checks(&mut report, max_k),
            Suite::Cyclotomic => cyclotomic_checks(&mut report, max_k),
            Suite::Oracle => oracle_checks(&mut report, max_k),
        }
    }
    report
}

/// `true` when the coefficient of `v^i` is `(-1)^{i-1}` times a polynomial
/// with nonnegative coefficients.
pub fn alternates_in_v(n: &BivarPoly) -> bool {
    n.terms().all(|(_, ev, c)| {
        let sign_ok = if ev % 2 == 1 {
            c.sign() != num_bigint::Sign::Minus
        } else {
            c.sign() != num_bigint::Sign::Plus
        };
        ev >= 1 && sign_ok
    })
}

fn point_count_checks(r: &mut Report, max_k: u32) {
    let s = Suite::PointCounts;
    let mut fam = ZetaFamily::new();
    for k in 1..=max_k {
        let n = fam.n(k).clone();
        r.record(
            s,
            format!("N_{k}: recurrence = partition sum"),
            n == n_k_partition(k),
        );
        r.record(
            s,
            format!("N_{k}: recurrence = double binomial"),
            n == n_k_binomial(k),
        );
        let from_pik = (1..=k).fold(BivarPoly::zero(), |acc, i| {
            let p = p_ik(i, k).expect("index in range").to_bivar_q();
            let term = &p * &BivarPoly::v().pow(i);
            if i % 2 == 1 {
                &acc + &term
            } else {
                &acc - &term
            }
        });
        r.record(s, format!("N_{k}: sum of P_(i,k) N_1^i"), n == from_pik);
        r.record(
            s,
            format!("N_{k}: signs alternate in N_1"),
            alternates_in_v(&n),
        );
        let e = e_k_recurrence(k);
        r.record(
            s,
            format!("E_{k}: recurrence = binomial = P_(i,k) form"),
            e == e_k_binomial(k) && e == e_k_from_pik(k),
        );
        let g_plus_n = &fam.g(k).clone() + &n;
        let expected = &BivarPoly::one() + &BivarPoly::monomial(BigInt::one(), k, 0);
        r.record(
            s,
            format!("G_{k} + N_{k} = 1 + q^{k}"),
            g_plus_n == expected,
        );
        let text = n.render();
        r.record(
            s,
            format!("N_{k}: parse(render) and JSON round trip"),
            BivarPoly::parse(&text).as_ref() == Ok(&n)
                && BivarPoly::from_json_terms(&n.to_json_terms()).as_ref() == Ok(&n),
        );
    }
}

fn combinatorics_checks(r: &mut Report, max_k: u32) {
    let s = Suite::Combinatorics;
    let mut fam = ZetaFamily::new();
    for k in 1..=max_k.min(MAX_LUCAS_N / 2) {
        let l = lucas_qt(2 * k).expect("in range");
        let expected = &(&BivarPoly::one() + &BivarPoly::monomial(BigInt::one(), k, 0)) - fam.n(k);
        r.record(
            s,
            format!("L_{}(v -> -v) = 1 + q^{k} - N_{k}", 2 * k),
            l.negate_v() == expected,
        );
        let lt = lucas_twisted(2 * k).expect("in range");
        let mirrored = (0..=k).all(|j| lt.coefficient_of_v(j) == l.coefficient_of_v(k - j));
        r.record(
            s,
            format!("L~_{} is L_{} with t reversed", 2 * k, 2 * k),
            mirrored,
        );
    }
    for n in 2..=max_k.min(MAX_WHEEL_N) {
        let expected = -fam.n(n).negate_v();
        let ok = wheel_poly_enum(n).ok() == Some(expected.clone())
            && wheel_poly_partition(n).ok() == Some(expected);
        r.record(
            s,
            format!("W_{n}: enumeration = partition form = -N_{n}(-v)"),
            ok,
        );
    }
    for n in 2..=max_k.min(8) {
        r.record(
            s,
            format!("subset-to-tree bijection onto W_{n}"),
            bijection_holds(n),
        );
    }
    for k in 2..=max_k.min(10) {
        let lhs = &(&chain_twisted(2 * k - 3, 1).expect("short")
            + &chain_twisted(2 * k - 3, 2).expect("short"))
            - &chain_twisted(2 * k - 4, 1).expect("short");
        r.record(
            s,
            format!("necklace decomposition of L~_{}", 2 * k - 2),
            lucas_twisted(2 * k - 2).ok() == Some(lhs),
        );
    }
    for k in 1..=max_k.min(MAX_CIJ_K) {
        let ok = (1..=k).all(|i| {
            (0..=i).all(|j| {
                c_ij_check(k, i, j).is_ok_and(|(circ, lin)| circ * i as u64 == lin * k as u64)
            })
        });
        r.record(s, format!("circular/linear subset counts, k={k}"), ok);
    }
}

/// Weight-preserving bijection from circular sparse subsets of `{1..2n}`
/// with at most `n-1` elements onto the spanning trees of `W_n`.
pub fn bijection_holds(n: u32) -> bool {
    let Ok(trees) = spanning_trees(n) else {
        return false;
    };
    let Ok(subsets) = circular_subsets(2 * n) else {
        return false;
    };
    let mut image = std::collections::BTreeSet::new();
    for s in subsets.iter().filter(|s| s.len() < n as usize) {
        let Ok(tree) = subset_to_tree(s) else {
            return false;
        };
        // L_{2n} weight of S is q^{#even} t^{n - |S|}.
        let weight = BivarPoly::monomial(BigInt::one(), s.even_count(), n - s.len() as u32);
        if tree.weight() != weight || !image.insert(tree) {
            return false;
        }
    }
    let lucas_total = lucas_qt(2 * n).expect("in range").eval_i64(1, 1);
    image.len() == trees.len() && BigInt::from(image.len()) == lucas_total - 2
}

fn matrix_checks(r: &mut Report, max_k: u32) {
    let s = Suite::Matrix;
    let mut fam = ZetaFamily::new();
    for k in 1..=max_k {
        let n = fam.n(k).clone();
        r.record(
            s,
            format!("det M_{k} = -N_{k}"),
            det_poly(&build_mk(k as usize)) == -&n,
        );
        r.record(
            s,
            format!("det M'_{k} = 1 + q^{k} - N_{k}"),
            det_poly(&build_mk_prime(k as usize)) == *fam.g(k),
        );
        r.record(
            s,
            format!("Chebyshev form of N_{k}"),
            cheb_identity_check(k),
        );
        r.record(s, format!("N_{k} at q = 0 and q = 1"), chebforms_check(k));
        if k <= 24 {
            let samples = [(1, 1), (2, 3), (5, 9), (7, 16), (13, 4), (3, 8)];
            r.record(
                s,
                format!("eigenvalue product for N_{k}"),
                eigenvalue_product_check(k, &samples),
            );
        }
    }
}

fn cyclotomic_checks(r: &mut Report, max_k: u32) {
    let s = Suite::Cyclotomic;
    let mut t = CycTable::new();
    for k in 1..=max_k {
        r.record(
            s,
            format!("prod Cyc_d = 1 - x^{k}"),
            cyclotomic::cyc_product_check(&mut t, k),
        );
        r.record(
            s,
            format!("prod ECyc_d = N_{k}"),
            cyclotomic::ecyc_product_check(&mut t, k),
        );
        r.record(
            s,
            format!("ECyc_{k} at N_1 = 0 and 2q+2"),
            t.specialization_check(k),
        );
        if k >= 2 {
            let phi = euler_phi(k as u64) as i64;
            let e = t.ecyc(k).expect("divisible").clone();
            let lead = e.coefficient_of_v(phi as u32);
            let lead_ok =
                lead == crate::poly::UnivarPoly::from_i64s(&[if phi % 2 == 0 { 1 } else { -1 }]);
            r.record(
                s,
                format!("ECyc_{k}: degree phi({k}) in q and v, unit leading term"),
                e.deg_v() == phi && e.deg_q() == phi && lead_ok,
            );
            let alternates = t.sign_report(k).is_ok_and(|rep| rep.alternates());
            r.record(
                s,
                format!("Q_(i,{k}) have nonnegative coefficients"),
                alternates,
            );
        }
    }
    for m in (1..=6).take_while(|m| 1u32 << m <= max_k) {
        r.record(
            s,
            format!(
                "ECyc_{} = 2(1 + q^{}) - N_{}",
                1 << m,
                1 << (m - 1),
                1 << (m - 1)
            ),
            t.ecyc_power2_check(m),
        );
    }
}

fn oracle_checks(r: &mut Report, max_k: u32) {
    let s = Suite::Oracle;
    for &(p, a, b) in &ORACLE_CURVES {
        let curve = Curve::new(p, a, b).expect("battery curves are nonsingular");
        let n1 = count_points(&curve, 1).expect("small field");
        r.record(
            s,
            format!("Hasse bound for {curve}"),
            hasse_bound_holds(p, n1),
        );
        let mut k = 1;
        while k <= max_k && p.pow(k) <= MAX_SWEEP_ORDER {
            let counted = count_points(&curve, k as usize).expect("within sweep limit");
            r.record(
                s,
                format!("N_{k} of {curve}"),
                BigInt::from(counted) == predict_nk(p, n1, k),
            );
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = run_all(4);
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.len() > 50);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn alternation_detects_wrong_signs() {
        assert!(alternates_in_v(&crate::point_counts::n_k_recurrence(4)));
        assert!(!alternates_in_v(&BivarPoly::parse("1*v^2").unwrap()));
        assert!(!alternates_in_v(&BivarPoly::one()));
    }
}
