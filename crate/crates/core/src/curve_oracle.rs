//! Brute-force ground truth: short Weierstrass curves `y^2 = x^3 + ax + b`
//! over `F_p` (`p >= 5`), counted over extensions `F_{p^k}`.
//!
//! Extension fields are built directly as `F_p[x] / (f)` with `f` the
//! smallest monic irreducible of degree `k`, where polynomials are ordered
//! by the integer `sum c_i p^i`. Elements are coefficient vectors
//! `[c0, c1, ...]` of length `k`.

use std::fmt;

use num_bigint::BigInt;

use crate::cyclotomic::CycTable;
use crate::error::{Error, Result};
use crate::point_counts::n_k_recurrence;
use crate::poly::UnivarPoly;

/// Largest `p^k` swept by [`count_points`] and [`endo_kernel_count`].
pub const MAX_SWEEP_ORDER: u64 = 3000;
/// Largest `p^k` for which an [`ExtField`] is built.
pub const MAX_FIELD_ORDER: u64 = 1_000_000;
pub const MAX_EXTENSION_DEGREE: usize = 6;

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

// Dense polynomials over F_p as little-endian coefficient vectors.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// Remainder of `a` modulo a nonzero `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - dm;
        for (j, &mc) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * mc % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// `x^(p^e) mod m`.
fn x_pow_p_pow(e: usize, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = poly_rem(&[0, 1], m, p);
    for _ in 0..e {
        // Raise to the p-th power by square-and-multiply.
        let mut base = acc.clone();
        let mut out = vec![1];
        let mut n = p;
        while n > 0 {
            if n & 1 == 1 {
                out = poly_rem(&poly_mul(&out, &base, p), m, p);
            }
            base = poly_rem(&poly_mul(&base, &base, p), m, p);
            n >>= 1;
        }
        acc = out;
    }
    acc
}

fn sub_x(a: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    if a.len() < 2 {
        a.resize(2, 0);
    }
    a[1] = (a[1] + p - 1) % p;
    trim(a)
}

/// Rabin's test for a monic `f` of degree `k >= 1`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    if !sub_x(&x_pow_p_pow(k, f, p), p).is_empty() {
        return false;
    }
    crate::cyclotomic::factorize(k as u64)
        .iter()
        .all(|&(r, _)| {
            let h = sub_x(&x_pow_p_pow(k / r as usize, f, p), p);
            poly_gcd(f, &h, p).len() == 1
        })
}

/// Smallest monic irreducible of degree `k` over `F_p`, ordering
/// candidates by `sum_{i<k} c_i p^i`.
pub fn find_irreducible(p: u64, k: usize) -> UnivarPoly {
    assert!(is_prime(p), "{p} is not prime");
    assert!(
        (1..=MAX_EXTENSION_DEGREE).contains(&k),
        "degree {k} out of range"
    );
    let order = p.pow(k as u32);
    assert!(order <= MAX_FIELD_ORDER, "p^k = {order} is too large");
    let coeffs = (0..order)
        .map(|n| {
            let mut c = digits(n, p, k);
            c.push(1);
            c
        })
        .find(|c| is_irreducible(c, p))
        .expect("irreducible polynomials exist in every degree");
    UnivarPoly::from_i64s(&coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>())
}

fn digits(mut n: u64, p: u64, k: usize) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

/// Element of `F_{p^k}`: `k` coefficients of `1, x, ..., x^{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(Vec<u64>);

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses `[c0,c1,...]`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or(Error::Parse {
                pos: 0,
                msg: "field element must be written [c0,c1,...]".into(),
            })?;
        let mut out = Vec::new();
        let mut pos = 1;
        for part in inner.split(',') {
            let c = part.trim().parse::<u64>().map_err(|_| Error::Parse {
                pos,
                msg: format!("bad coefficient {part:?}"),
            })?;
            out.push(c);
            pos += part.len() + 1;
        }
        Ok(Self(out))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The field `F_p[x] / (modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    k: usize,
    /// Monic, little-endian, length `k + 1`.
    modulus: Vec<u64>,
}

impl ExtField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidCurve(format!("{p} is not prime")));
        }
        if !(1..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(Error::SizeLimit(format!(
                "extension degree {k} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        match p.checked_pow(k as u32) {
            Some(o) if o <= MAX_FIELD_ORDER => {}
            _ => {
                return Err(Error::SizeLimit(format!(
                    "{p}^{k} exceeds {MAX_FIELD_ORDER}"
                )))
            }
        }
        let modulus = find_irreducible(p, k)
            .coeffs()
            .iter()
            .map(|c| u64::try_from(c).expect("reduced coefficient"))
            .collect();
        Ok(Self { p, k, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus(&self) -> UnivarPoly {
        UnivarPoly::from_i64s(&self.modulus.iter().map(|&c| c as i64).collect::<Vec<_>>())
    }

    fn wrap(&self, mut c: Vec<u64>) -> FieldElem {
        c.resize(self.k, 0);
        FieldElem(c)
    }

    pub fn zero(&self) -> FieldElem {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> FieldElem {
        self.constant(1)
    }

    /// The image of `c mod p` under `F_p -> F_{p^k}`.
    pub fn constant(&self, c: i64) -> FieldElem {
        self.wrap(vec![c.rem_euclid(self.p as i64) as u64])
    }

    /// Element from coefficients, reduced mod `p` and mod the modulus.
    pub fn element(&self, coeffs: &[i64]) -> FieldElem {
        let c: Vec<u64> = coeffs
            .iter()
            .map(|&c| c.rem_euclid(self.p as i64) as u64)
            .collect();
        self.wrap(poly_rem(&c, &self.modulus, self.p))
    }

    pub fn contains(&self, a: &FieldElem) -> bool {
        a.0.len() == self.k && a.0.iter().all(|&c| c < self.p)
    }

    /// Element number `n` in base-`p` order, `0 <= n < p^k`.
    pub fn from_index(&self, n: u64) -> FieldElem {
        FieldElem(digits(n, self.p, self.k))
    }

    pub fn index(&self, a: &FieldElem) -> u64 {
        a.0.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(|n| self.from_index(n))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let prod = poly_mul(&trim(a.0.clone()), &trim(b.0.clone()), self.p);
        self.wrap(poly_rem(&prod, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let (mut base, mut acc) = (a.clone(), self.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        (!a.is_zero()).then(|| self.pow(a, self.order() - 2))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        self.pow(a, self.p)
    }

    /// Number of `y` with `y^2 = a`, for every `a`, indexed by [`Self::index`].
    pub fn square_table(&self) -> Vec<u8> {
        let mut table = vec![0u8; self.order() as usize];
        for y in self.elements() {
            table[self.index(&self.mul(&y, &y)) as usize] += 1;
        }
        table
    }
}

/// `y^2 = x^3 + ax + b` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    p: u64,
    a: u64,
    b: u64,
}

impl Curve {
    pub fn new(p: u64, a: i64, b: i64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidCurve(format!("{p} is not prime")));
        }
        if p < 5 {
            return Err(Error::InvalidCurve(format!(
                "characteristic {p} is not supported; need p >= 5"
            )));
        }
        let (a, b) = (a.rem_euclid(p as i64) as u64, b.rem_euclid(p as i64) as u64);
        let disc = (4 * pow_mod(a, 3, p) + 27 * pow_mod(b, 2, p)) % p;
        if disc == 0 {
            return Err(Error::InvalidCurve(format!(
                "y^2 = x^3 + {a}x + {b} is singular over F_{p}"
            )));
        }
        Ok(Self { p, a, b })
    }

    /// Parses `"p,a,b"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [p, a, b] = parts.as_slice() else {
            return Err(Error::Parse {
                pos: 0,
                msg: "curve must be given as p,a,b".into(),
            });
        };
        let num = |s: &str, pos: usize| {
            s.parse::<i64>().map_err(|_| Error::Parse {
                pos,
                msg: format!("bad integer {s:?}"),
            })
        };
        let p = num(p, 0)?;
        let pp = u64::try_from(p).map_err(|_| Error::InvalidCurve(format!("{p} is not prime")))?;
        Self::new(pp, num(a, 1)?, num(b, 2)?)
    }

    /// The base field size `q = p`.
    pub fn q(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `x^3 + ax + b` in the given extension.
    fn rhs(&self, f: &ExtField, x: &FieldElem) -> FieldElem {
        let x2 = f.mul(x, x);
        let x3 = f.mul(&x2, x);
        let ax = f.mul(&f.constant(self.a as i64), x);
        f.add(&f.add(&x3, &ax), &f.constant(self.b as i64))
    }

    pub fn contains(&self, f: &ExtField, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                f.contains(x) && f.contains(y) && f.mul(y, y) == self.rhs(f, x)
            }
        }
    }

    fn field(&self, k: usize) -> Result<ExtField> {
        let order = self.p.checked_pow(k as u32).unwrap_or(u64::MAX);
        if k == 0 || order > MAX_SWEEP_ORDER {
            return Err(Error::SizeLimit(format!(
                "{}^{k} is outside the sweep limit {MAX_SWEEP_ORDER}",
                self.p
            )));
        }
        ExtField::new(self.p, k)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + {}x + {} over F_{}", self.a, self.b, self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: FieldElem, y: FieldElem },
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("O"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// `#C(F_{p^k})`, sweeping `x` against a table of square roots.
pub fn count_points(curve: &Curve, k: usize) -> Result<u64> {
    let f = curve.field(k)?;
    let squares = f.square_table();
    let affine: u64 = f
        .elements()
        .map(|x| squares[f.index(&curve.rhs(&f, &x)) as usize] as u64)
        .sum();
    Ok(affine + 1)
}

/// All points of `C(F_{p^k})`, the point at infinity first.
pub fn enumerate_points(curve: &Curve, k: usize) -> Result<Vec<CurvePoint>> {
    let f = curve.field(k)?;
    let mut roots: Vec<Vec<FieldElem>> = vec![Vec::new(); f.order() as usize];
    for y in f.elements() {
        roots[f.index(&f.mul(&y, &y)) as usize].push(y);
    }
    let mut out = vec![CurvePoint::Infinity];
    for x in f.elements() {
        for y in &roots[f.index(&curve.rhs(&f, &x)) as usize] {
            out.push(CurvePoint::Affine {
                x: x.clone(),
                y: y.clone(),
            });
        }
    }
    Ok(out)
}

/// `N_k(q, N_1)` evaluated at integers.
pub fn predict_nk(q: u64, n1: u64, k: u32) -> BigInt {
    n_k_recurrence(k).eval(&BigInt::from(q), &BigInt::from(n1))
}

/// `|1 + q - N_1| <= 2 sqrt(q)`, checked as `(1 + q - N_1)^2 <= 4q`.
pub fn hasse_bound_holds(q: u64, n1: u64) -> bool {
    let t = 1 + q as i128 - n1 as i128;
    t * t <= 4 * q as i128
}

fn check_field(f: &ExtField, pt: &CurvePoint) -> Result<()> {
    match pt {
        CurvePoint::Affine { x, y } if !(f.contains(x) && f.contains(y)) => {
            Err(Error::FieldMismatch)
        }
        _ => Ok(()),
    }
}

pub fn point_neg(f: &ExtField, pt: &CurvePoint) -> CurvePoint {
    match pt {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::Affine {
            x: x.clone(),
            y: f.neg(y),
        },
    }
}

/// Chord-and-tangent addition.
pub fn point_add(
    a: &CurvePoint,
    b: &CurvePoint,
    curve: &Curve,
    f: &ExtField,
) -> Result<CurvePoint> {
    check_field(f, a)?;
    check_field(f, b)?;
    let (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) = (a, b) else {
        return Ok(if *a == CurvePoint::Infinity {
            b.clone()
        } else {
            a.clone()
        });
    };
    let slope = if x1 == x2 {
        if f.add(y1, y2).is_zero() {
            return Ok(CurvePoint::Infinity);
        }
        // (3x^2 + a) / 2y
        let num = f.add(
            &f.mul(&f.constant(3), &f.mul(x1, x1)),
            &f.constant(curve.a as i64),
        );
        let den = f.mul(&f.constant(2), y1);
        f.mul(&num, &f.inv(&den).expect("2y is nonzero"))
    } else {
        let den = f.sub(x2, x1);
        f.mul(&f.sub(y2, y1), &f.inv(&den).expect("x2 - x1 is nonzero"))
    };
    let x3 = f.sub(&f.sub(&f.mul(&slope, &slope), x1), x2);
    let y3 = f.sub(&f.mul(&slope, &f.sub(x1, &x3)), y1);
    Ok(CurvePoint::Affine { x: x3, y: y3 })
}

/// `n P` by double-and-add; negative `n` negates `P` first.
pub fn scalar_mul(n: i64, pt: &CurvePoint, curve: &Curve, f: &ExtField) -> Result<CurvePoint> {
    check_field(f, pt)?;
    let mut base = if n < 0 { point_neg(f, pt) } else { pt.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = CurvePoint::Infinity;
    while e > 0 {
        if e & 1 == 1 {
            acc = point_add(&acc, &base, curve, f)?;
        }
        base = point_add(&base, &base, curve, f)?;
        e >>= 1;
    }
    Ok(acc)
}

/// `(x, y) -> (x^q, y^q)` with `q = p`.
pub fn frobenius(pt: &CurvePoint, f: &ExtField) -> CurvePoint {
    match pt {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::Affine {
            x: f.frobenius(x),
            y: f.frobenius(y),
        },
    }
}

/// `#Ker Cyc_d(pi)`, with `Cyc_d(pi) = sum c_i pi^i` applied pointwise.
///
/// The kernel lies inside `C(F_{q^d}) = Ker(1 - pi^d)` because `Cyc_d`
/// divides `1 - x^d`, so only those points are examined.
pub fn endo_kernel_count(curve: &Curve, d: usize) -> Result<u64> {
    let f = curve.field(d)?;
    let cyc = CycTable::new().cyc(d as u32).clone();
    let coeffs: Vec<i64> = cyc
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("small cyclotomic coefficient"))
        .collect();
    let mut count = 0;
    for pt in enumerate_points(curve, d)? {
        let mut acc = CurvePoint::Infinity;
        let mut iterate = pt;
        for &c in &coeffs {
            if c != 0 {
                acc = point_add(&acc, &scalar_mul(c, &iterate, curve, &f)?, curve, &f)?;
            }
            iterate = frobenius(&iterate, &f);
        }
        if acc == CurvePoint::Infinity {
            count += 1;
        }
    }
    Ok(count)
}

/// The extension field a curve over `F_p` is swept in.
pub fn sweep_field(curve: &Curve, k: usize) -> Result<ExtField> {
    curve.field(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_examples() {
        assert_eq!(find_irreducible(5, 1), UnivarPoly::from_i64s(&[0, 1]));
        assert_eq!(find_irreducible(5, 2), UnivarPoly::from_i64s(&[2, 0, 1]));
        assert_eq!(find_irreducible(2, 3), UnivarPoly::from_i64s(&[1, 1, 0, 1]));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, k) in [(5, 2), (7, 3), (2, 4), (3, 5)] {
            let f = ExtField::new(p, k).unwrap();
            let e = f.order() - 1;
            for n in [1, 2, 7, f.order() - 1] {
                let a = f.from_index(n % f.order());
                if !a.is_zero() {
                    assert_eq!(f.pow(&a, e), f.one(), "p={p} k={k} a={a}");
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn element_text_round_trip() {
        let f = ExtField::new(7, 3).unwrap();
        let a = f.element(&[3, -1, 2]);
        assert_eq!(a.to_string(), "[3,6,2]");
        assert_eq!(FieldElem::parse("[3,6,2]").unwrap(), a);
        assert!(FieldElem::parse("3,6,2").is_err());
    }

    #[test]
    fn curve_validation() {
        assert!(matches!(Curve::new(5, 0, 0), Err(Error::InvalidCurve(_))));
        assert!(matches!(Curve::new(3, 1, 1), Err(Error::InvalidCurve(_))));
        assert!(matches!(Curve::new(9, 1, 1), Err(Error::InvalidCurve(_))));
        assert!(matches!(Curve::parse("5,1"), Err(Error::Parse { .. })));
        assert_eq!(Curve::parse("5,1,1").unwrap(), Curve::new(5, 1, 1).unwrap());
        assert_eq!(Curve::new(5, -1, 0).unwrap().a(), 4);
    }

    #[test]
    fn small_counts() {
        let c = Curve::new(5, 1, 1).unwrap();
        assert_eq!(count_points(&c, 1).unwrap(), 9);
        assert_eq!(count_points(&c, 2).unwrap(), 27);
        assert_eq!(predict_nk(5, 9, 2), BigInt::from(27));
        assert_eq!(count_points(&Curve::new(5, -1, 0).unwrap(), 1).unwrap(), 8);
        assert!(matches!(count_points(&c, 5), Err(Error::SizeLimit(_))));
        assert_eq!(predict_nk(11, 0, 4), BigInt::from(0));
    }

    #[test]
    fn group_law_basics() {
        let c = Curve::new(5, 1, 1).unwrap();
        let f = sweep_field(&c, 1).unwrap();
        let pts = enumerate_points(&c, 1).unwrap();
        assert_eq!(pts.len(), 9);
        for pt in &pts {
            assert!(c.contains(&f, pt));
            assert_eq!(&point_add(pt, &CurvePoint::Infinity, &c, &f).unwrap(), pt);
            let neg = point_neg(&f, pt);
            assert_eq!(point_add(pt, &neg, &c, &f).unwrap(), CurvePoint::Infinity);
            assert_eq!(scalar_mul(9, pt, &c, &f).unwrap(), CurvePoint::Infinity);
            assert_eq!(&frobenius(pt, &f), pt);
        }
        let f2 = sweep_field(&c, 2).unwrap();
        let pt2 = enumerate_points(&c, 2).unwrap().pop().unwrap();
        assert_eq!(point_add(&pts[1], &pt2, &c, &f2), Err(Error::FieldMismatch));
    }

    #[test]
    fn kernel_counts_on_first_curve() {
        let c = Curve::new(5, 1, 1).unwrap();
        assert_eq!(endo_kernel_count(&c, 1).unwrap(), 9);
        assert_eq!(endo_kernel_count(&c, 2).unwrap(), 3);
    }

    #[test]
    fn hasse() {
        assert!(hasse_bound_holds(5, 9));
        assert!(hasse_bound_holds(5, 2));
        assert!(!hasse_bound_holds(5, 11));
    }
}
