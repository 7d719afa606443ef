//! Exact integer polynomials in one variable and in the two variables `(q, v)`.
//!
//! The second bivariate variable is always called `v`. On the curve side it
//! stands for `N_1`, on the spanning-tree side for `t`; the two readings are
//! related by `v -> -v` and an overall sign.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Univariate
// ---------------------------------------------------------------------------

/// Dense univariate integer polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UnivarPoly {
    coeffs: Vec<BigInt>,
}

impl UnivarPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(-x)`.
    pub fn negate_var(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact quotient `self / d` in `Z[x]`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let Some(lc) = d.leading_coeff() else {
            return Err(Error::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.degree() < d.degree() {
            return Err(Error::NotDivisible);
        }
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let (c, r) = rem[top].div_rem(lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let shift = top - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * dc;
            }
            quot[shift] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Number of nonzero coefficients.
    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Number of strictly negative coefficients.
    pub fn negative_count(&self) -> usize {
        self.coeffs.iter().filter(|c| c.is_negative()).count()
    }

    /// Embed as a bivariate polynomial in `q` only.
    pub fn to_bivar_q(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u32, 0, c.clone())),
        )
    }

    /// Embed as a bivariate polynomial in `v` only.
    pub fn to_bivar_v(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (0, i as u32, c.clone())),
        )
    }

    /// `self(s)` for a bivariate argument.
    pub fn compose_bivar(&self, s: &BivarPoly) -> BivarPoly {
        self.coeffs.iter().rev().fold(BivarPoly::zero(), |acc, c| {
            &(&acc * s) + &BivarPoly::constant(c.clone())
        })
    }

    pub fn compose(&self, s: &UnivarPoly) -> UnivarPoly {
        self.coeffs.iter().rev().fold(UnivarPoly::zero(), |acc, c| {
            &(&acc * s) + &UnivarPoly::constant(c.clone())
        })
    }

    /// Render with the given variable name, highest degree first.
    pub fn render_in(&self, var: &str) -> String {
        self.to_bivar_q().render_with(var, "v")
    }
}

impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_in("x"))
    }
}

impl<'a> Add<&'a UnivarPoly> for &'a UnivarPoly {
    type Output = UnivarPoly;
    fn add(self, rhs: &UnivarPoly) -> UnivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivarPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UnivarPoly> for &'a UnivarPoly {
    type Output = UnivarPoly;
    fn sub(self, rhs: &UnivarPoly) -> UnivarPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivarPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UnivarPoly> for &'a UnivarPoly {
    type Output = UnivarPoly;
    fn mul(self, rhs: &UnivarPoly) -> UnivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivarPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivarPoly::from_coeffs(out)
    }
}

impl Neg for &UnivarPoly {
    type Output = UnivarPoly;
    fn neg(self) -> UnivarPoly {
        UnivarPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Bivariate
// ---------------------------------------------------------------------------

/// Exponent pair. Ordered by `v`-degree first, then `q`-degree, which is the
/// monomial order used by [`BivarPoly::exact_div`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub ev: u32,
    pub eq: u32,
}

/// Sparse polynomial in `Z[q, v]`. No stored coefficient is zero, so
/// structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c * q^eq * v^ev`.
    pub fn monomial(c: BigInt, eq: u32, ev: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial { ev, eq }, c);
        }
        Self { terms }
    }

    /// Build from `(eq, ev, coefficient)` triples; repeated exponents are summed.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigInt)>,
    {
        let mut p = Self::zero();
        for (eq, ev, c) in iter {
            p.add_term(Monomial { ev, eq }, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms as `(eq, ev, coefficient)` in ascending `(ev, eq)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (m.eq, m.ev, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, eq: u32, ev: u32) -> BigInt {
        self.terms
            .get(&Monomial { ev, eq })
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in `q`, `-1` for the zero polynomial.
    pub fn deg_q(&self) -> i64 {
        self.terms.keys().map(|m| m.eq as i64).max().unwrap_or(-1)
    }

    /// Degree in `v`, `-1` for the zero polynomial.
    pub fn deg_v(&self) -> i64 {
        self.terms.keys().next_back().map_or(-1, |m| m.ev as i64)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient in `Z[q, v]`.
    ///
    /// Long division by leading terms in the `(v, q)` lexicographic order.
    /// Any leading term that the divisor's leading term does not divide, or
    /// a nonzero remainder, means no exact quotient exists.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let Some((lead, lc)) = d.terms.iter().next_back() else {
            return Err(Error::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (top_v, top_q) = (self.deg_v(), self.deg_q());
        let (dv, dq) = (d.deg_v(), d.deg_q());
        if top_v < dv || top_q < dq {
            return Err(Error::NotDivisible);
        }
        // The quotient, if it exists, has q-degree exactly top_q - dq.
        let max_quot_q = (top_q - dq) as u32;
        let width = top_q as usize + 1;
        let mut rem: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); width]; top_v as usize + 1];
        for (m, c) in &self.terms {
            rem[m.ev as usize][m.eq as usize] = c.clone();
        }
        let divisor: Vec<(Monomial, &BigInt)> = d.terms.iter().map(|(m, c)| (*m, c)).collect();
        let mut quot = BTreeMap::new();
        for ev in (lead.ev as usize..rem.len()).rev() {
            for eq in (0..width).rev() {
                if rem[ev][eq].is_zero() {
                    continue;
                }
                if eq < lead.eq as usize || (eq - lead.eq as usize) as u32 > max_quot_q {
                    return Err(Error::NotDivisible);
                }
                let (c, r) = rem[ev][eq].div_rem(lc);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                let sv = ev - lead.ev as usize;
                let sq = eq - lead.eq as usize;
                for (m, dc) in &divisor {
                    let cell = &mut rem[sv + m.ev as usize][sq + m.eq as usize];
                    *cell -= &c * *dc;
                }
                quot.insert(
                    Monomial {
                        ev: sv as u32,
                        eq: sq as u32,
                    },
                    c,
                );
            }
        }
        if rem[..lead.ev as usize]
            .iter()
            .any(|row| row.iter().any(|c| !c.is_zero()))
        {
            return Err(Error::NotDivisible);
        }
        Ok(Self { terms: quot })
    }

    /// Replace every `v` by `s`.
    pub fn substitute_v(&self, s: &Self) -> Self {
        let deg = self.deg_v();
        if deg < 0 {
            return Self::zero();
        }
        let mut rows = vec![Self::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            rows[m.ev as usize].add_term(Monomial { ev: 0, eq: m.eq }, c.clone());
        }
        rows.iter()
            .rev()
            .fold(Self::zero(), |acc, row| &(&acc * s) + row)
    }

    /// Replace `q` by `q^k`.
    pub fn substitute_q_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitute_q_power needs k >= 1");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial {
                            ev: m.ev,
                            eq: m.eq * k,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// `p(q, -v)`.
    pub fn negate_v(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.ev % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn eval(&self, q: &BigInt, v: &BigInt) -> BigInt {
        let mut qpow: Vec<BigInt> = vec![BigInt::one()];
        let mut vpow: Vec<BigInt> = vec![BigInt::one()];
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            while qpow.len() <= m.eq as usize {
                let next = qpow.last().unwrap() * q;
                qpow.push(next);
            }
            while vpow.len() <= m.ev as usize {
                let next = vpow.last().unwrap() * v;
                vpow.push(next);
            }
            acc += c * &qpow[m.eq as usize] * &vpow[m.ev as usize];
        }
        acc
    }

    pub fn eval_i64(&self, q: i64, v: i64) -> BigInt {
        self.eval(&BigInt::from(q), &BigInt::from(v))
    }

    /// The univariate-in-`q` polynomial multiplying `v^i`.
    pub fn coefficient_of_v(&self, i: u32) -> UnivarPoly {
        let lo = Monomial { ev: i, eq: 0 };
        let hi = Monomial {
            ev: i,
            eq: u32::MAX,
        };
        let row: Vec<(u32, &BigInt)> = self.terms.range(lo..=hi).map(|(m, c)| (m.eq, c)).collect();
        let Some(&(top, _)) = row.last() else {
            return UnivarPoly::zero();
        };
        let mut coeffs = vec![BigInt::zero(); top as usize + 1];
        for (e, c) in row {
            coeffs[e as usize] = c.clone();
        }
        UnivarPoly::from_coeffs(coeffs)
    }

    /// The univariate-in-`v` polynomial multiplying `q^j`.
    pub fn coefficient_of_q(&self, j: u32) -> UnivarPoly {
        let mut coeffs = vec![BigInt::zero(); (self.deg_v().max(0) + 1) as usize];
        for (m, c) in &self.terms {
            if m.eq == j {
                coeffs[m.ev as usize] = c.clone();
            }
        }
        UnivarPoly::from_coeffs(coeffs)
    }

    /// Specialize `q` to an integer, leaving a polynomial in `v`.
    pub fn specialize_q(&self, q: &BigInt) -> UnivarPoly {
        let deg = self.deg_v();
        let mut coeffs = vec![BigInt::zero(); (deg + 1).max(0) as usize];
        for (m, c) in &self.terms {
            coeffs[m.ev as usize] += c * q.pow(m.eq);
        }
        UnivarPoly::from_coeffs(coeffs)
    }

    /// View as a polynomial in `q` alone; `None` if `v` occurs.
    pub fn to_univar_q(&self) -> Option<UnivarPoly> {
        if self.deg_v() > 0 {
            return None;
        }
        Some(self.coefficient_of_v(0))
    }

    /// Canonical text: monomials by descending `(v, q)` exponents, explicit
    /// coefficients, e.g. `-1*q^3*v^2 + 2*q*v - 5`.
    pub fn render(&self) -> String {
        self.render_with("q", "v")
    }

    /// Canonical text with the variables relabelled.
    pub fn render_with(&self, qname: &str, vname: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&c.magnitude().to_string());
            for (name, e) in [(qname, m.eq), (vname, m.ev)] {
                match e {
                    0 => {}
                    1 => {
                        out.push('*');
                        out.push_str(name);
                    }
                    _ => {
                        out.push('*');
                        out.push_str(name);
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`render`](Self::render).
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).polynomial()
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| JsonTerm {
                eq: m.eq,
                ev: m.ev,
                c: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad coefficient {:?}", t.c),
            })?;
            p.add_term(Monomial { ev: t.ev, eq: t.eq }, c);
        }
        Ok(p)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One term of the JSON form. Coefficients travel as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub eq: u32,
    pub ev: u32,
    pub c: String,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        BivarPoly::from_json_terms(&terms).map_err(D::Error::custom)
    }
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        // Dense accumulator; the polynomials of interest fill most of their
        // bounding box.
        let rows = (self.deg_v() + rhs.deg_v() + 1) as usize;
        let cols = (self.deg_q() + rhs.deg_q() + 1) as usize;
        let mut acc = vec![BigInt::zero(); rows * cols];
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                let idx = (ma.ev + mb.ev) as usize * cols + (ma.eq + mb.eq) as usize;
                acc[idx] += a * b;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| {
                (
                    Monomial {
                        ev: (idx / cols) as u32,
                        eq: (idx % cols) as u32,
                    },
                    c,
                )
            })
            .collect();
        BivarPoly { terms }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    )*
    impl Neg for $ty {
        type Output = $ty;
        fn neg(self) -> $ty {
            -(&self)
        }
    }
    };
}

forward_owned!(BivarPoly, Add add, Sub sub, Mul mul);
forward_owned!(UnivarPoly, Add add, Sub sub, Mul mul);

// ---------------------------------------------------------------------------
// Parser for the canonical text form
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn polynomial(&mut self) -> Result<BivarPoly> {
        let mut p = BivarPoly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
            self.skip_ws();
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            p.add_term(m, c);
            self.skip_ws();
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(b) => return self.err(format!("unexpected character {:?}", b as char)),
            }
            self.pos += 1;
            self.skip_ws();
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut m = Monomial { ev: 0, eq: 0 };
        let mut c = BigInt::one();
        let mut first = true;
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() && first => {
                    c = self.integer()?;
                }
                Some(b'q') | Some(b'v') => {
                    let var = self.peek().unwrap();
                    self.pos += 1;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let e = self.integer()?;
                        match u32::try_from(e) {
                            Ok(e) => e,
                            Err(_) => return self.err("exponent out of range"),
                        }
                    } else {
                        1
                    };
                    if var == b'q' {
                        m.eq += e;
                    } else {
                        m.ev += e;
                    }
                }
                _ => return self.err("expected coefficient or variable"),
            }
            first = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((m, c));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run parses"))
    }
}
