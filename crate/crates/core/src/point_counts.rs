//! Point-count polynomials `N_k(q, N_1)` and their companions `H_k`, `E_k`.
//!
//! Every family is a [`BivarPoly`] whose `v` variable stands for `N_1`.
//! `N_k` is available by three independent routes (three-term recurrence,
//! partition sum over `H_j`, double binomial sum); `E_k` likewise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BivarPoly, UnivarPoly};

/// Integer partition with parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
    /// `mults[j]` is the multiplicity of part `j` (index 0 unused).
    mults: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let max = parts.first().copied().unwrap_or(0) as usize;
        let mut mults = vec![0; max + 1];
        for &p in &parts {
            mults[p as usize] += 1;
        }
        Self { parts, mults }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `d_j` of part `j`.
    pub fn mult(&self, j: u32) -> u32 {
        self.mults.get(j as usize).copied().unwrap_or(0)
    }

    /// `len! / (d_1! d_2! ...)`.
    pub fn multinomial(&self) -> BigInt {
        let mut num = factorial(self.len() as u32);
        for &d in &self.mults {
            num /= factorial(d);
        }
        num
    }
}

/// All partitions of `n`, in reverse-lexicographic order starting at `(n)`.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::new(Vec::new()));
        return out;
    }
    // Standard descent: find the rightmost part > 1, decrement it, and
    // refill the tail greedily with copies of the decremented value.
    let mut a = vec![n];
    loop {
        out.push(Partition::new(a.clone()));
        let Some(idx) = a.iter().rposition(|&x| x > 1) else {
            break;
        };
        let ones = (a.len() - idx - 1) as u32;
        let part = a[idx] - 1;
        a.truncate(idx);
        let mut rest = ones + part + 1;
        while rest > 0 {
            let take = part.min(rest);
            a.push(take);
            rest -= take;
        }
    }
    out
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `num / den`, which is always an integer.
pub(crate) fn integral_quotient(num: &BigInt, den: &BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: {num}/{den} is not integral");
    q
}

/// `1 + q + ... + q^{j-1}`.
pub fn q_integer(j: u32) -> UnivarPoly {
    UnivarPoly::from_coeffs(vec![BigInt::one(); j as usize])
}

/// `1 + q^k` as a bivariate polynomial.
fn one_plus_q_pow(k: u32) -> BivarPoly {
    &BivarPoly::one() + &BivarPoly::monomial(BigInt::one(), k, 0)
}

/// `1 + q - v`.
pub fn trace_poly() -> BivarPoly {
    BivarPoly::parse("1 + 1*q - 1*v").expect("literal")
}

/// `N_k` from `G_{k+1} = (1+q-N_1) G_k - q G_{k-1}` with `G_0 = 2`,
/// `G_1 = 1+q-N_1`, and `N_k = 1 + q^k - G_k`.
pub fn n_k_recurrence(k: u32) -> BivarPoly {
    assert!(k >= 1, "N_k needs k >= 1");
    let mut fam = ZetaFamily::new();
    fam.n(k).clone()
}

/// `N_k` as the signed partition sum over products of `H_{lambda_i}`.
pub fn n_k_partition(k: u32) -> BivarPoly {
    assert!(k >= 1, "N_k needs k >= 1");
    let mut acc = BivarPoly::zero();
    for lambda in partitions(k) {
        let len = lambda.len() as u32;
        let weight = integral_quotient(
            &(BigInt::from(k) * lambda.multinomial()),
            &BigInt::from(len),
            "partition weight",
        );
        let term = lambda
            .parts()
            .iter()
            .fold(BivarPoly::one(), |prod, &part| &prod * &h_k(part))
            .scale(&weight);
        if len % 2 == 1 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// `P_{i,k}(q) = sum_j (k/i) C(k-1-j, i-1) C(i+j-1, j) q^j`, summed over
/// `0 <= j <= k-i` (the first binomial vanishes beyond that).
pub fn p_ik(i: u32, k: u32) -> Result<UnivarPoly> {
    if i < 1 || i > k {
        return Err(Error::Index(format!(
            "P_{{i,k}} needs 1 <= i <= k, got i={i}, k={k}"
        )));
    }
    let (i, k) = (i as i64, k as i64);
    let coeffs = (0..=k - i)
        .map(|j| {
            let num = BigInt::from(k) * binomial(k - 1 - j, i - 1) * binomial(i + j - 1, j);
            integral_quotient(&num, &BigInt::from(i), "P_{i,k} coefficient")
        })
        .collect();
    Ok(UnivarPoly::from_coeffs(coeffs))
}

/// `N_k` from the double binomial sum.
pub fn n_k_binomial(k: u32) -> BivarPoly {
    assert!(k >= 1, "N_k needs k >= 1");
    let (kk, mut terms) = (k as i64, Vec::new());
    for i in 1..=kk {
        for j in 0..=kk - i {
            let num = BigInt::from(kk) * binomial(kk - 1 - j, i - 1) * binomial(i + j - 1, j);
            let mut c = integral_quotient(&num, &BigInt::from(i), "N_k binomial term");
            if i % 2 == 0 {
                c = -c;
            }
            terms.push((j as u32, i as u32, c));
        }
    }
    BivarPoly::from_terms(terms)
}

/// `E_k` from the double binomial sum.
pub fn e_k_binomial(k: u32) -> BivarPoly {
    assert!(k >= 1, "E_k binomial form needs k >= 1");
    let (kk, mut terms) = (k as i64, Vec::new());
    for i in 1..=kk {
        for j in 0..=kk - i {
            let mut c = binomial(kk - 1 - j, i - 1) * binomial(i + j - 1, j);
            if (kk + i) % 2 == 1 {
                c = -c;
            }
            terms.push((j as u32, i as u32, c));
        }
    }
    BivarPoly::from_terms(terms)
}

/// `H_0 = 1`, `H_k = N_1 (1 + q + ... + q^{k-1})`.
pub fn h_k(k: u32) -> BivarPoly {
    if k == 0 {
        return BivarPoly::one();
    }
    &q_integer(k).to_bivar_q() * &BivarPoly::v()
}

/// `E_n` from the signed three-term recurrence, seeded with `E_0..E_2`.
pub fn e_k_recurrence(k: u32) -> BivarPoly {
    let mut fam = ZetaFamily::new();
    fam.e(k).clone()
}

/// `E_k = sum_i (-1)^{k+i} (i/k) P_{i,k}(q) N_1^i`.
pub fn e_k_from_pik(k: u32) -> BivarPoly {
    assert!(k >= 1, "E_k from P_{{i,k}} needs k >= 1");
    let mut acc = BivarPoly::zero();
    for i in 1..=k {
        let p = p_ik(i, k).expect("index in range");
        let scaled: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| integral_quotient(&(c * i), &BigInt::from(k), "E_k from P_{i,k}"))
            .collect();
        let sign = if (k + i) % 2 == 1 { -1 } else { 1 };
        let term = BivarPoly::from_terms(
            scaled
                .into_iter()
                .enumerate()
                .map(|(j, c)| (j as u32, i, c * sign)),
        );
        acc = &acc + &term;
    }
    acc
}

/// `G_k = 1 + q^k - N_k`.
pub fn g_k(k: u32) -> BivarPoly {
    let mut fam = ZetaFamily::new();
    fam.g(k).clone()
}

/// Memoized `N_k`, `G_k`, `H_k`, `E_k`.
///
/// Tables grow on demand and are owned by one caller; returned references
/// point at finished entries only.
#[derive(Clone, Debug)]
pub struct ZetaFamily {
    g: Vec<BivarPoly>,
    n: Vec<BivarPoly>,
    h: Vec<BivarPoly>,
    e: Vec<BivarPoly>,
    trace: BivarPoly,
}

impl Default for ZetaFamily {
    fn default() -> Self {
        Self::new()
    }
}

impl ZetaFamily {
    pub fn new() -> Self {
        let trace = trace_poly();
        let e2 = BivarPoly::parse("1*v^2 - 1*q*v - 1*v").expect("literal");
        Self {
            g: vec![BivarPoly::from_i64(2), trace.clone()],
            n: vec![BivarPoly::zero(), BivarPoly::v()],
            h: vec![BivarPoly::one()],
            e: vec![BivarPoly::one(), BivarPoly::v(), e2],
            trace,
        }
    }

    pub fn g(&mut self, k: u32) -> &BivarPoly {
        let k = k as usize;
        while self.g.len() <= k {
            let len = self.g.len();
            let next = &(&self.trace * &self.g[len - 1]) - &(&BivarPoly::q() * &self.g[len - 2]);
            self.g.push(next);
        }
        &self.g[k]
    }

    /// `N_k`, with the convention `N_0 = 0`.
    pub fn n(&mut self, k: u32) -> &BivarPoly {
        while self.n.len() <= k as usize {
            let j = self.n.len() as u32;
            let nk = &one_plus_q_pow(j) - self.g(j);
            self.n.push(nk);
        }
        &self.n[k as usize]
    }

    pub fn h(&mut self, k: u32) -> &BivarPoly {
        while self.h.len() <= k as usize {
            let j = self.h.len() as u32;
            self.h.push(h_k(j));
        }
        &self.h[k as usize]
    }

    /// `E_{n+1} = -(1+q-N_1) E_n - q E_{n-1}` for `n >= 2`.
    pub fn e(&mut self, k: u32) -> &BivarPoly {
        while self.e.len() <= k as usize {
            let len = self.e.len();
            let next = -(&(&self.trace * &self.e[len - 1]) + &(&BivarPoly::q() * &self.e[len - 2]));
            self.e.push(next);
        }
        &self.e[k as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivarPoly {
        BivarPoly::parse(s).unwrap()
    }

    const N3: &str = "1*v^3 - 3*q*v^2 - 3*v^2 + 3*q^2*v + 3*q*v + 3*v";
    const N4: &str = "-1*v^4 + 4*q*v^3 + 4*v^3 - 6*q^2*v^2 - 8*q*v^2 - 6*v^2 \
                      + 4*q^3*v + 4*q^2*v + 4*q*v + 4*v";
    const N5: &str = "1*v^5 - 5*q*v^4 - 5*v^4 + 10*q^2*v^3 + 15*q*v^3 + 10*v^3 \
                      - 10*q^3*v^2 - 15*q^2*v^2 - 15*q*v^2 - 10*v^2 \
                      + 5*q^4*v + 5*q^3*v + 5*q^2*v + 5*q*v + 5*v";
    const E5: &str = "1*v^5 - 4*q*v^4 - 4*v^4 + 6*q^2*v^3 + 9*q*v^3 + 6*v^3 \
                      - 4*q^3*v^2 - 6*q^2*v^2 - 6*q*v^2 - 4*v^2 \
                      + 1*q^4*v + 1*q^3*v + 1*q^2*v + 1*q*v + 1*v";

    #[test]
    fn partitions_of_five() {
        let ps: Vec<Vec<u32>> = partitions(5).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            ps,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
        let counts: Vec<usize> = (0..=12).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn partition_bookkeeping() {
        let lam = Partition::new(vec![1, 3, 1, 2]);
        assert_eq!(lam.parts(), &[3, 2, 1, 1]);
        assert_eq!(lam.n(), 7);
        assert_eq!(lam.mult(1), 2);
        assert_eq!(lam.mult(4), 0);
        assert_eq!(lam.multinomial(), BigInt::from(12));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(n_k_recurrence(1), BivarPoly::v());
        assert_eq!(n_k_recurrence(2), p("-1*v^2 + 2*q*v + 2*v"));
        assert_eq!(n_k_recurrence(4), p(N4));
    }

    #[test]
    fn partition_examples() {
        assert_eq!(n_k_partition(1), BivarPoly::v());
        assert_eq!(n_k_partition(3), p(N3));
        assert_eq!(n_k_partition(5), p(N5));
    }

    #[test]
    fn p_ik_examples() {
        assert_eq!(p_ik(2, 4).unwrap(), UnivarPoly::from_i64s(&[6, 8, 6]));
        for k in 1..10 {
            assert_eq!(p_ik(k, k).unwrap(), UnivarPoly::one());
        }
        assert_eq!(p_ik(1, 5).unwrap(), UnivarPoly::from_i64s(&[5, 5, 5, 5, 5]));
        assert!(matches!(p_ik(0, 3), Err(Error::Index(_))));
        assert!(matches!(p_ik(4, 3), Err(Error::Index(_))));
    }

    #[test]
    fn binomial_forms() {
        assert_eq!(n_k_binomial(3), n_k_recurrence(3));
        assert_eq!(e_k_binomial(2), p("1*v^2 - 1*q*v - 1*v"));
        assert_eq!(e_k_binomial(5), p(E5));
    }

    #[test]
    fn h_k_examples() {
        assert_eq!(h_k(0), BivarPoly::one());
        assert_eq!(h_k(1), BivarPoly::v());
        assert_eq!(h_k(3), p("1*q^2*v + 1*q*v + 1*v"));
    }

    #[test]
    fn e_k_examples() {
        assert_eq!(e_k_recurrence(0), BivarPoly::one());
        assert_eq!(
            e_k_recurrence(3),
            p("1*v^3 - 2*q*v^2 - 2*v^2 + 1*q^2*v + 1*q*v + 1*v")
        );
        assert_eq!(
            e_k_recurrence(4),
            p("1*v^4 - 3*q*v^3 - 3*v^3 + 3*q^2*v^2 + 4*q*v^2 + 3*v^2 \
               - 1*q^3*v - 1*q^2*v - 1*q*v - 1*v")
        );
        assert_eq!(e_k_from_pik(1), BivarPoly::v());
        assert_eq!(e_k_from_pik(2), e_k_recurrence(2));
        assert_eq!(e_k_from_pik(5), e_k_recurrence(5));
    }

    #[test]
    fn g_plus_n_is_one_plus_q_pow() {
        let mut fam = ZetaFamily::new();
        for k in 0..15 {
            let sum = fam.g(k).clone() + fam.n(k).clone();
            assert_eq!(sum, one_plus_q_pow(k), "k={k}");
        }
        assert_eq!(fam.n(0), &BivarPoly::zero());
        assert_eq!(fam.h(0), &BivarPoly::one());
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }
}
