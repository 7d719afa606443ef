//! Cyclotomic factorizations of `1 - x^k` and of `N_k`.
//!
//! `Cyc_d` uses the `1 - x^k = prod_{d|k} Cyc_d(x)` normalization, so
//! `Cyc_1 = 1 - x` while `Cyc_d` for `d >= 2` is the usual monic cyclotomic
//! polynomial. `ECyc_d = Cyc_d(a_1) Cyc_d(a_2)` is obtained without the
//! Frobenius roots by Möbius inversion of `N_k = prod_{d|k} ECyc_d`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::point_counts::ZetaFamily;
use crate::poly::{BivarPoly, UnivarPoly};

/// Prime factorization by trial division, as `(p, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1, "divisors needs n >= 1");
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `Cyc_d(1)`: `0` for `d = 1`, `p` for a prime power `p^k`, otherwise `1`.
pub fn c_func(d: u64) -> i64 {
    let f = factorize(d);
    match f.as_slice() {
        [] => 0,
        [(p, _)] => *p as i64,
        _ => 1,
    }
}

/// `-2` for `d = 1`, `0` for `d = 2`, `p` for `d = 2 p^k` (`p = 2`
/// included), otherwise `1`.
///
/// For `d >= 2` this is `Cyc_d(-1)`. The value `-2` at `d = 1` belongs to
/// the monic convention `x - 1`; in the `1 - x` normalization used here
/// `Cyc_1(-1) = 2`.
pub fn c_prime_func(d: u64) -> i64 {
    assert!(d >= 1, "C'(d) needs d >= 1");
    match d {
        1 => -2,
        2 => 0,
        _ if d % 2 == 1 => 1,
        _ => match factorize(d / 2).as_slice() {
            [(p, _)] => *p as i64,
            _ => 1,
        },
    }
}

/// Memo of `Cyc_d`, `ECyc_d` and the underlying `N_k`.
#[derive(Clone, Debug, Default)]
pub struct CycTable {
    cyc: BTreeMap<u32, UnivarPoly>,
    ecyc: BTreeMap<u32, BivarPoly>,
    zeta: ZetaFamily,
}

impl CycTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Cyc_d = (1 - x^d) / prod_{e|d, e<d} Cyc_e`.
    pub fn cyc(&mut self, d: u32) -> &UnivarPoly {
        assert!(d >= 1, "Cyc_d needs d >= 1");
        if !self.cyc.contains_key(&d) {
            let mut acc = &UnivarPoly::one() - &UnivarPoly::monomial(BigInt::one(), d as usize);
            for e in divisors(d).into_iter().filter(|&e| e < d) {
                let f = self.cyc(e).clone();
                acc = acc
                    .exact_div(&f)
                    .expect("cyclotomic factors divide 1 - x^d");
            }
            self.cyc.insert(d, acc);
        }
        &self.cyc[&d]
    }

    pub fn n(&mut self, k: u32) -> &BivarPoly {
        self.zeta.n(k)
    }

    /// `ECyc_d = prod_{e|d} N_e^{mu(d/e)}`: the `mu = 1` factors are
    /// multiplied, then each `mu = -1` factor is divided out exactly.
    pub fn ecyc(&mut self, d: u32) -> Result<&BivarPoly> {
        if d == 0 {
            return Err(Error::Index("ECyc_d needs d >= 1".into()));
        }
        if !self.ecyc.contains_key(&d) {
            let mut num = BivarPoly::one();
            let mut den = Vec::new();
            for e in divisors(d) {
                match mobius((d / e) as u64) {
                    1 => num = &num * self.zeta.n(e),
                    -1 => den.push(e),
                    _ => {}
                }
            }
            for e in den {
                num = num.exact_div(self.zeta.n(e))?;
            }
            self.ecyc.insert(d, num);
        }
        Ok(&self.ecyc[&d])
    }

    /// `WCyc_1 = v` and `WCyc_d = ECyc_d(v -> -v)` for `d >= 2`, so that
    /// `prod_{d|k} WCyc_d = -N_k(v -> -v)` is the wheel polynomial.
    pub fn wcyc(&mut self, d: u32) -> Result<BivarPoly> {
        let e = self.ecyc(d)?.negate_v();
        Ok(if d == 1 { -e } else { e })
    }

    /// `Q_{i,d} = (-1)^i [v^i] ECyc_d`.
    pub fn q_id(&mut self, i: u32, d: u32) -> Result<UnivarPoly> {
        if d == 0 {
            return Err(Error::Index("Q_{i,d} needs d >= 1".into()));
        }
        let phi = euler_phi(d as u64) as u32;
        if i < 1 || i > phi {
            return Err(Error::Index(format!(
                "Q_{{i,d}} needs 1 <= i <= phi(d) = {phi}, got i={i}, d={d}"
            )));
        }
        let c = self.ecyc(d)?.coefficient_of_v(i);
        Ok(if i % 2 == 1 { -c } else { c })
    }

    pub fn sign_report(&mut self, d: u32) -> Result<SignReport> {
        let phi = euler_phi(d as u64) as u32;
        let mut rows = Vec::with_capacity(phi as usize);
        for i in 1..=phi {
            let q = self.q_id(i, d)?;
            rows.push(SignRow {
                i,
                nonzero: q.nonzero_count(),
                negative: q.negative_count(),
            });
        }
        Ok(SignReport { d, rows })
    }

    /// `ECyc_d(0) = C(d) Cyc_d(q)` and `ECyc_d(2q+2) = C'(d) Cyc_d(-q)`.
    pub fn specialization_check(&mut self, d: u32) -> bool {
        let Ok(e) = self.ecyc(d).cloned() else {
            return false;
        };
        let cyc = self.cyc(d).clone();
        let at_zero = e.substitute_v(&BivarPoly::zero()).to_univar_q();
        let want_zero = cyc.scale(&BigInt::from(c_func(d as u64)));
        if at_zero.as_ref() != Some(&want_zero) {
            return false;
        }
        // C'(1) = -2 pairs with the monic Cyc_1 = x - 1.
        let cyc_neg = if d == 1 { -&cyc } else { cyc }.negate_var();
        let two_q_two = BivarPoly::parse("2 + 2*q").expect("literal");
        let at_top = e.substitute_v(&two_q_two).to_univar_q();
        at_top == Some(cyc_neg.scale(&BigInt::from(c_prime_func(d as u64))))
    }

    /// `ECyc_{2^m} = 2 (1 + q^{2^{m-1}}) - N_{2^{m-1}}`.
    pub fn ecyc_power2_check(&mut self, m: u32) -> bool {
        assert!((1..=6).contains(&m), "ECyc_{{2^m}} check needs 1 <= m <= 6");
        let half = 1u32 << (m - 1);
        let two_cyc = &BivarPoly::from_i64(2) + &BivarPoly::monomial(BigInt::from(2), half, 0);
        let expected = &two_cyc - self.n(half);
        self.ecyc(1 << m).is_ok_and(|e| *e == expected)
    }
}

/// Per-`i` sign bookkeeping of the `Q_{i,d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignRow {
    pub i: u32,
    pub nonzero: usize,
    pub negative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignReport {
    pub d: u32,
    pub rows: Vec<SignRow>,
}

impl SignReport {
    /// True when no `Q_{i,d}` has a negative coefficient.
    pub fn alternates(&self) -> bool {
        self.rows.iter().all(|r| r.negative == 0 && r.nonzero > 0)
    }

    /// Indices `i` whose `Q_{i,d}` has a negative coefficient.
    pub fn violations(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| r.negative > 0)
            .map(|r| r.i)
            .collect()
    }

    pub fn row(&self, i: u32) -> Option<&SignRow> {
        self.rows.iter().find(|r| r.i == i)
    }
}

pub fn cyc_d(d: u32) -> UnivarPoly {
    CycTable::new().cyc(d).clone()
}

pub fn ecyc_d(d: u32) -> Result<BivarPoly> {
    CycTable::new().ecyc(d).cloned()
}

pub fn wcyc_d(d: u32) -> Result<BivarPoly> {
    CycTable::new().wcyc(d)
}

pub fn q_id(i: u32, d: u32) -> Result<UnivarPoly> {
    CycTable::new().q_id(i, d)
}

pub fn sign_report(d: u32) -> Result<SignReport> {
    CycTable::new().sign_report(d)
}

pub fn specialization_check(d: u32) -> bool {
    CycTable::new().specialization_check(d)
}

pub fn ecyc_power2_check(m: u32) -> bool {
    CycTable::new().ecyc_power2_check(m)
}

/// Whether `prod_{d|k} Cyc_d = 1 - x^k` holds for the cached table entries.
pub fn cyc_product_check(table: &mut CycTable, k: u32) -> bool {
    let prod = divisors(k)
        .into_iter()
        .fold(UnivarPoly::one(), |acc, d| &acc * table.cyc(d));
    prod == &UnivarPoly::one() - &UnivarPoly::monomial(BigInt::one(), k as usize)
}

/// Whether `prod_{d|k} ECyc_d = N_k`.
pub fn ecyc_product_check(table: &mut CycTable, k: u32) -> bool {
    let mut prod = BivarPoly::one();
    for d in divisors(k) {
        match table.ecyc(d) {
            Ok(e) => prod = &prod * e,
            Err(_) => return false,
        }
    }
    prod == *table.n(k)
}

/// Evaluate `Cyc_d` at an integer.
pub fn cyc_eval(table: &mut CycTable, d: u32, x: i64) -> BigInt {
    table.cyc(d).eval(&BigInt::from(x))
}

/// `true` if no coefficient is negative and at least one is nonzero.
pub fn is_positive(p: &UnivarPoly) -> bool {
    !p.is_zero() && p.coeffs().iter().all(|c| *c >= BigInt::zero())
}
