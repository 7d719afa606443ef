//! Determinant and Chebyshev forms of `N_k`.
//!
//! `N_k = -det M_k` for a three-line circulant `M_k`, and
//! `1 + q^k - N_k = det M'_k` for a tridiagonal `M'_k`. The Chebyshev form
//! `1 + q^k - N_k = 2 q^{k/2} T_k((1+q-N_1) / 2q^{1/2})` involves `sqrt(q)`,
//! so it is checked exactly in `Z[u, v]` with `q = u^2`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::point_counts::{g_k, n_k_recurrence, trace_poly};
use crate::poly::{BivarPoly, UnivarPoly};

/// Square matrix with [`BivarPoly`] entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<BivarPoly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            entries: vec![BivarPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, BivarPoly::one());
        }
        m
    }

    /// Build from rows; panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<BivarPoly>>) -> Self {
        let dim = rows.len();
        assert!(dim >= 1, "matrix dimension must be positive");
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BivarPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BivarPoly) {
        self.entries[i * self.dim + j] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let rows = (0..self.dim)
            .filter(|&i| i != row)
            .map(|i| {
                (0..self.dim)
                    .filter(|&j| j != col)
                    .map(|j| self.get(i, j).clone())
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }
}

/// The circulant `M_k`: diagonal `1+q-v`, superdiagonal `-1`, subdiagonal
/// `-q`, closed up by `-q` in the top-right and `-1` in the bottom-left.
/// `M_1 = [-v]` and `M_2` has off-diagonal entries `-1-q`.
pub fn build_mk(k: usize) -> PolyMatrix {
    assert!(k >= 1, "M_k needs k >= 1");
    if k == 1 {
        return PolyMatrix::from_rows(vec![vec![-BivarPoly::v()]]);
    }
    let diag = trace_poly();
    let minus_one = BivarPoly::from_i64(-1);
    let minus_q = -BivarPoly::q();
    if k == 2 {
        let off = &minus_one + &minus_q;
        return PolyMatrix::from_rows(vec![vec![diag.clone(), off.clone()], vec![off, diag]]);
    }
    let mut m = PolyMatrix::zero(k);
    for i in 0..k {
        m.set(i, i, diag.clone());
        m.set(i, (i + 1) % k, minus_one.clone());
        m.set(i, (i + k - 1) % k, minus_q.clone());
    }
    m
}

/// The tridiagonal `M'_k`: diagonal `1+q-v`, subdiagonal `-1`,
/// superdiagonal `-q` except for a leading `-2q`.
pub fn build_mk_prime(k: usize) -> PolyMatrix {
    assert!(k >= 1, "M'_k needs k >= 1");
    let mut m = PolyMatrix::zero(k);
    for i in 0..k {
        m.set(i, i, trace_poly());
        if i + 1 < k {
            m.set(i + 1, i, BivarPoly::from_i64(-1));
            let c = if i == 0 { -2 } else { -1 };
            m.set(i, i + 1, BivarPoly::monomial(BigInt::from(c), 1, 0));
        }
    }
    m
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_poly(m: &PolyMatrix) -> BivarPoly {
    let n = m.dim();
    let mut a = m.clone();
    let mut prev = BivarPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return BivarPoly::zero();
            };
            a.swap_rows(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(a.get(k, k) * a.get(i, j)) - &(a.get(i, k) * a.get(k, j));
                let entry = num.exact_div(&prev).expect("Bareiss step divides exactly");
                a.set(i, j, entry);
            }
            a.set(i, k, BivarPoly::zero());
        }
        prev = a.get(k, k).clone();
    }
    let det = a.get(n - 1, n - 1).clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by Laplace expansion along the first row. Exponential; meant
/// as an independent check for small matrices.
pub fn det_cofactor(m: &PolyMatrix) -> BivarPoly {
    let n = m.dim();
    assert!(n <= 8, "cofactor expansion is limited to dimension 8");
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = BivarPoly::zero();
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let term = m.get(0, j) * &det_cofactor(&m.minor(0, j));
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Chebyshev polynomial of the first kind.
pub fn chebyshev_t(k: u32) -> UnivarPoly {
    let two_x = UnivarPoly::from_i64s(&[0, 2]);
    let (mut prev, mut cur) = (UnivarPoly::one(), UnivarPoly::x());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P_k = (2u)^k T_k(X / 2u)` for `X = 1 + u^2 - v`, with `u` stored in the
/// `q` slot. Satisfies `P_{k+1} = 2X P_k - 4u^2 P_{k-1}`.
fn cleared_chebyshev(k: u32) -> BivarPoly {
    let x = BivarPoly::parse("1 + 1*q^2 - 1*v").expect("literal");
    let two_x = x.scale(&BigInt::from(2));
    let four_u2 = BivarPoly::monomial(BigInt::from(4), 2, 0);
    let (mut prev, mut cur) = (BivarPoly::one(), x);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&two_x * &cur) - &(&four_u2 * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Exact check of `1 + q^k - N_k = 2 q^{k/2} T_k((1+q-N_1) / 2 sqrt q)`.
///
/// With `q = u^2` the right side is `2 P_k / 2^k`, so the check is
/// `2 P_k = 2^k G_k(u^2, v)`.
pub fn cheb_identity_check(k: u32) -> bool {
    assert!(k >= 1, "Chebyshev identity needs k >= 1");
    let lhs = cleared_chebyshev(k).scale(&BigInt::from(2));
    let rhs = g_k(k)
        .substitute_q_power(2)
        .scale(&(BigInt::one() << k as usize));
    lhs == rhs
}

/// Exact checks of the `q = 0` and `q = 1` specializations:
/// `N_k(0, v) = 1 - (1-v)^k` and `N_k(1, v) = 2 - 2 T_k(1 - v/2)`.
pub fn chebforms_check(k: u32) -> bool {
    assert!(k >= 1, "Chebyshev forms need k >= 1");
    let n = n_k_recurrence(k);
    let at_zero = n.specialize_q(&BigInt::zero());
    let expected_zero = &UnivarPoly::one() - &UnivarPoly::from_i64s(&[1, -1]).pow(k);
    if at_zero != expected_zero {
        return false;
    }
    // 2^k T_k((2-v)/2) is P_k with u = 1, so
    // 2^k N_k(1, v) = 2^{k+1} - 2 P_k(1, v).
    let pk_at_one = cleared_chebyshev(k).specialize_q(&BigInt::one());
    let scale = BigInt::one() << k as usize;
    let lhs = n.specialize_q(&BigInt::one()).scale(&scale);
    let rhs = &UnivarPoly::constant(&scale * 2) - &pk_at_one.scale(&BigInt::from(2));
    lhs == rhs
}

/// `-prod_{j=1}^{k} ((1+q-v) - q w^j - w^{k-j})` with `w = exp(2 pi i / k)`,
/// the product of the eigenvalues of `M_k`, negated.
pub fn eigenvalue_product(k: u32, q: f64, v: f64) -> Complex64 {
    assert!(k >= 1, "eigenvalue product needs k >= 1");
    let w = |e: u32| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / k as f64);
    let trace = Complex64::new(1.0 + q - v, 0.0);
    -(1..=k)
        .map(|j| trace - w(j % k) * q - w((k - j) % k))
        .fold(Complex64::one(), |acc, f| acc * f)
}

/// Compares [`eigenvalue_product`] with `N_k` at each integer sample.
///
/// The tolerance is `1e-8` relative to `|N_k|`. Where `N_k` vanishes
/// exactly the bound is `1e-8` times the product of the factor magnitude
/// bounds `|1+q-v| + q + 1`, which is the scale of the rounding error.
pub fn eigenvalue_product_check(k: u32, samples: &[(i64, i64)]) -> bool {
    assert!(k <= 24, "eigenvalue check is limited to k <= 24");
    let n = n_k_recurrence(k);
    samples.iter().all(|&(q, v)| {
        let exact = n.eval_i64(q, v).to_f64().unwrap_or(f64::INFINITY);
        let approx = eigenvalue_product(k, q as f64, v as f64);
        let scale = if exact.abs() > 0.0 {
            exact.abs()
        } else {
            ((1 + q - v).abs() as f64 + q as f64 + 1.0).powi(k as i32)
        };
        (approx - Complex64::new(exact, 0.0)).norm() <= 1e-8 * scale.max(1.0)
    })
}

/// `|N_k(q, v) - eigenvalue_product(k, q, v)|` relative to `|N_k|`, for
/// reporting.
pub fn eigenvalue_relative_error(k: u32, q: i64, v: i64) -> f64 {
    let exact = n_k_recurrence(k).eval_i64(q, v);
    let approx = eigenvalue_product(k, q as f64, v as f64);
    let e = exact.to_f64().unwrap_or(f64::INFINITY);
    (approx - Complex64::new(e, 0.0)).norm() / exact.abs().to_f64().unwrap_or(1.0).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point_counts::n_k_recurrence;

    fn p(s: &str) -> BivarPoly {
        BivarPoly::parse(s).unwrap()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(build_mk(1).get(0, 0), &p("-1*v"));
        let m2 = build_mk(2);
        assert_eq!(m2.get(0, 0), &p("1 + 1*q - 1*v"));
        assert_eq!(m2.get(0, 1), &p("-1 - 1*q"));
        assert_eq!(m2.get(1, 0), &p("-1 - 1*q"));
        let m3 = build_mk(3);
        for i in 0..3 {
            assert_eq!(m3.get(i, i), &p("1 + 1*q - 1*v"));
            assert_eq!(m3.get(i, (i + 1) % 3), &p("-1"));
            assert_eq!(m3.get(i, (i + 2) % 3), &p("-1*q"));
        }
        let mp = build_mk_prime(3);
        assert_eq!(mp.get(0, 1), &p("-2*q"));
        assert_eq!(mp.get(1, 2), &p("-1*q"));
        assert_eq!(mp.get(1, 0), &p("-1"));
        assert!(mp.get(0, 2).is_zero());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_poly(&build_mk(1)), p("-1*v"));
        assert_eq!(det_poly(&build_mk(2)), -n_k_recurrence(2));
        assert_eq!(det_poly(&PolyMatrix::identity(3)), BivarPoly::one());
        assert_eq!(det_poly(&build_mk_prime(1)), p("1 + 1*q - 1*v"));
        let g2 = &p("1 + 1*q - 1*v").pow(2) - &p("2*q");
        assert_eq!(det_poly(&build_mk_prime(2)), g2);
        assert_eq!(det_poly(&build_mk_prime(4)), g_k(4));
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        for k in 1..=6 {
            assert_eq!(det_poly(&build_mk(k)), det_cofactor(&build_mk(k)), "M_{k}");
            assert_eq!(
                det_poly(&build_mk_prime(k)),
                det_cofactor(&build_mk_prime(k)),
                "M'_{k}"
            );
        }
        // A zero leading pivot forces a row swap.
        let m = PolyMatrix::from_rows(vec![
            vec![BivarPoly::zero(), p("1*q"), BivarPoly::one()],
            vec![p("1*v"), BivarPoly::one(), BivarPoly::zero()],
            vec![BivarPoly::one(), p("1*v"), p("2")],
        ]);
        assert_eq!(det_poly(&m), det_cofactor(&m));
        let singular = PolyMatrix::from_rows(vec![
            vec![BivarPoly::zero(), p("1*q")],
            vec![BivarPoly::zero(), p("1*v")],
        ]);
        assert!(det_poly(&singular).is_zero());
    }

    #[test]
    fn chebyshev_basics() {
        assert_eq!(chebyshev_t(0), UnivarPoly::one());
        assert_eq!(chebyshev_t(1), UnivarPoly::x());
        assert_eq!(chebyshev_t(2), UnivarPoly::from_i64s(&[-1, 0, 2]));
        for k in 0..=20 {
            assert_eq!(chebyshev_t(k).eval(&BigInt::one()), BigInt::one());
        }
        for m in 1..=5 {
            for n in 1..=5 {
                assert_eq!(chebyshev_t(m).compose(&chebyshev_t(n)), chebyshev_t(m * n));
            }
        }
    }

    #[test]
    fn chebyshev_identity_exact_and_float() {
        assert!(cheb_identity_check(1));
        assert!(cheb_identity_check(5));
        let lhs = 1.0 + 4f64.powi(5) - n_k_recurrence(5).eval_i64(4, 3).to_f64().unwrap();
        let rhs = 2.0 * 4f64.powf(2.5) * chebyshev_t(5).eval_f64((1.0 + 4.0 - 3.0) / 4.0);
        assert!((lhs - rhs).abs() <= 1e-6 * lhs.abs().max(1.0));
    }

    #[test]
    fn chebforms_examples() {
        assert_eq!(
            n_k_recurrence(2).specialize_q(&BigInt::zero()),
            UnivarPoly::from_i64s(&[0, 2, -1])
        );
        assert!(chebforms_check(1));
        assert!(chebforms_check(6));
    }

    #[test]
    fn eigenvalue_examples() {
        let one = eigenvalue_product(1, 7.0, 3.0);
        assert!((one - Complex64::new(3.0, 0.0)).norm() < 1e-12);
        assert!(eigenvalue_product_check(4, &[(5, 9)]));
        // N_4 vanishes at v = 2q + 2.
        assert!(eigenvalue_product_check(4, &[(3, 8), (1, 2), (1, 4)]));
    }
}
