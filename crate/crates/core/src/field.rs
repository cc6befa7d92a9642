//! Exact arithmetic in prime fields `F_p` and extension fields `F_{p^n}`.
//!
//! A [`FieldSpec`] is a cheap, shareable handle (`Arc` inside) describing the
//! field; every [`FieldElem`] carries the handle of the field it belongs to,
//! so mixing elements of different fields is detected instead of silently
//! producing garbage. Elements are dense coefficient vectors in the power
//! basis `1, t, ..., t^{n-1}` of a root `t` of the defining modulus.
//!
//! Element text format: a decimal integer in prime fields, a polynomial in
//! `t` in extensions (`2*t+1`). Field text format: `p`, `p^n` or
//! `p^n/modulus` (`3^2/t^2+1`).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

use crate::text::{self, Coeff};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible")]
    NotIrreducible(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{m} does not divide the extension degree {n}")]
    NotDivisor { m: usize, n: usize },
    #[error("field {p}^{n} is outside the supported range")]
    TooLarge { p: u64, n: usize },
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
}

fn parse_error(what: &'static str, input: &str, reason: impl Into<String>) -> FieldError {
    FieldError::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    p: u64,
    n: usize,
    /// Monic, low-degree first, length `n + 1`; `None` for prime fields.
    modulus: Option<Vec<u64>>,
    order: u64,
}

/// Description of `F_p` or `F_{p^n}`.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl FieldSpec {
    /// Builds `F_p`. Characteristics are limited to `p < 2^32` so that
    /// coordinate products fit in a `u64`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(FieldError::TooLarge { p, n: 1 });
        }
        Ok(FieldSpec(Arc::new(Inner {
            p,
            n: 1,
            modulus: None,
            order: p,
        })))
    }

    /// Builds `F_{p^n}`. With `modulus = None` the lexicographically smallest
    /// monic irreducible of degree `n` is chosen, comparing the coefficient
    /// tuples `(c_0, ..., c_{n-1})` low degree first. A supplied modulus is
    /// given low degree first, with or without its leading 1.
    pub fn extension(p: u64, n: usize, modulus: Option<&[u64]>) -> Result<Self, FieldError> {
        let base = Self::prime(p)?;
        if n == 0 {
            return Err(FieldError::InvalidModulus("extension degree must be at least 1".into()));
        }
        let order = u32::try_from(n)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .filter(|&q| q < 1 << 62)
            .ok_or(FieldError::TooLarge { p, n })?;

        let modulus = match modulus {
            Some(raw) => {
                let mut m: Vec<u64> = raw.iter().map(|&c| c % p).collect();
                if m.len() == n {
                    m.push(1);
                }
                fp::trim(&mut m);
                if m.len() != n + 1 || m[n] != 1 {
                    return Err(FieldError::InvalidModulus(format!(
                        "{} is not a monic polynomial of degree {n}",
                        fp::render(&m)
                    )));
                }
                if !fp::is_irreducible(&m, p) {
                    return Err(FieldError::NotIrreducible(fp::render(&m)));
                }
                m
            }
            None => fp::smallest_irreducible(n, p),
        };
        if n == 1 {
            // Any monic linear modulus gives the same field.
            return Ok(base);
        }
        Ok(FieldSpec(Arc::new(Inner {
            p,
            n,
            modulus: Some(modulus),
            order,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// Number of elements, `p^n`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// The defining modulus (monic, low degree first) of an extension field.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    fn make(&self, coeffs: SmallVec<[u64; 2]>) -> FieldElem {
        FieldElem {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.make(SmallVec::from_elem(0, self.0.n))
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// The image of an integer under the canonical map `Z -> F`.
    pub fn from_int(&self, value: i128) -> FieldElem {
        let p = self.0.p as i128;
        let mut coeffs = SmallVec::from_elem(0, self.0.n);
        coeffs[0] = value.rem_euclid(p) as u64;
        self.make(coeffs)
    }

    /// Element with the given power-basis coordinates (reduced mod `p`;
    /// missing high coordinates are zero).
    pub fn element(&self, coords: &[u64]) -> Result<FieldElem, FieldError> {
        if coords.len() > self.0.n {
            return Err(FieldError::FieldMismatch);
        }
        let mut coeffs = SmallVec::from_elem(0, self.0.n);
        for (slot, &c) in coeffs.iter_mut().zip(coords) {
            *slot = c % self.0.p;
        }
        Ok(self.make(coeffs))
    }

    /// Inverse of [`FieldElem::index`]: digit `i` of `index` in base `p`
    /// becomes coordinate `i`.
    pub fn from_index(&self, index: u64) -> FieldElem {
        let mut rest = index % self.0.order;
        let coeffs = (0..self.0.n)
            .map(|_| {
                let digit = rest % self.0.p;
                rest /= self.0.p;
                digit
            })
            .collect();
        self.make(coeffs)
    }

    /// The root `t` of the modulus; `None` in a prime field.
    pub fn generator(&self) -> Option<FieldElem> {
        (self.0.n > 1).then(|| self.from_index(self.0.p))
    }

    /// All `p^n` elements in canonical order (coordinate tuple read as a
    /// base-`p` integer, `coeffs[0]` least significant).
    pub fn elements(&self) -> Vec<FieldElem> {
        (0..self.0.order).map(|i| self.from_index(i)).collect()
    }

    /// The unique subfield of order `p^m`, as the fixed points of the
    /// `m`-fold Frobenius `a -> a^{p^m}`, in canonical order.
    pub fn subfield_elements(&self, m: usize) -> Result<Vec<FieldElem>, FieldError> {
        let n = self.0.n;
        if m == 0 || !n.is_multiple_of(m) {
            return Err(FieldError::NotDivisor { m, n });
        }
        Ok(self
            .elements()
            .into_iter()
            .filter(|a| {
                let mut b = a.clone();
                for _ in 0..m {
                    b = b.pow(self.0.p);
                }
                &b == a
            })
            .collect())
    }

    /// Parses an element in this field's text format.
    pub fn parse_element(&self, input: &str) -> Result<FieldElem, FieldError> {
        let terms = text::parse_terms(input, 't').map_err(|e| parse_error("element", input, e))?;
        let mut acc = self.zero();
        for term in terms {
            let c = match term.coeff {
                Coeff::Int(v) => v,
                Coeff::Group(_) => return Err(parse_error("element", input, "nested groups are not elements")),
            };
            let e = term.exponent as usize;
            if self.0.n == 1 && e > 0 {
                return Err(parse_error("element", input, "prime field elements are integers"));
            }
            let mut value = match self.generator() {
                Some(t) => t.pow(e as u64) * self.from_int(c),
                None => self.from_int(c),
            };
            if term.negative {
                value = -value;
            }
            acc = acc + value;
        }
        Ok(acc)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "{}", self.0.p),
            Some(m) => write!(f, "{}^{}/{}", self.0.p, self.0.n, fp::render(m)),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({self})")
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, modulus) = match s.split_once('/') {
            Some((head, m)) => (head.trim(), Some(m.trim())),
            None => (s, None),
        };
        let (p, n) = match head.split_once('^') {
            Some((p, n)) => (p.trim(), n.trim()),
            None => (head, "1"),
        };
        let p: u64 = p.parse().map_err(|_| parse_error("field", s, "bad characteristic"))?;
        let n: usize = n.parse().map_err(|_| parse_error("field", s, "bad extension degree"))?;
        let modulus = match modulus {
            None => None,
            Some(m) => {
                if !is_prime(p) {
                    return Err(FieldError::NotPrime(p));
                }
                let mut coeffs = Vec::new();
                for term in text::parse_terms(m, 't').map_err(|e| parse_error("field", s, e))? {
                    let Coeff::Int(c) = term.coeff else {
                        return Err(parse_error("field", s, "modulus coefficients must be integers"));
                    };
                    let e = term.exponent as usize;
                    if coeffs.len() <= e {
                        coeffs.resize(e + 1, 0i128);
                    }
                    coeffs[e] += if term.negative { -c } else { c };
                }
                Some(
                    coeffs
                        .iter()
                        .map(|c| c.rem_euclid(p as i128) as u64)
                        .collect::<Vec<_>>(),
                )
            }
        };
        match (n, modulus) {
            (1, None) => FieldSpec::prime(p),
            (_, m) => FieldSpec::extension(p, n, m.as_deref()),
        }
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone)]
pub struct FieldElem {
    field: FieldSpec,
    coeffs: SmallVec<[u64; 2]>,
}

impl FieldElem {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Power-basis coordinates, each in `[0, p)`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Position in the canonical element order.
    pub fn index(&self) -> u64 {
        let p = self.field.0.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(self.field.make(coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.0.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        Ok(self.field.make(coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.0.p;
        let coeffs = match &self.field.0.modulus {
            None => SmallVec::from_elem(self.coeffs[0] * other.coeffs[0] % p, 1),
            Some(m) => {
                let mut product = fp::mul(&self.coeffs, &other.coeffs, p);
                fp::rem_monic(&mut product, m, p);
                product.resize(self.field.0.n, 0);
                SmallVec::from_vec(product)
            }
        };
        Ok(self.field.make(coeffs))
    }

    pub fn neg(&self) -> Self {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        self.field.make(coeffs)
    }

    /// Multiplicative inverse: Fermat in prime fields, extended Euclid on the
    /// representing polynomial in extensions.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let p = self.field.0.p;
        match &self.field.0.modulus {
            None => Ok(self.pow(p - 2)),
            Some(m) => {
                let mut s = fp::inverse_mod(&self.coeffs, m, p);
                s.resize(self.field.0.n, 0);
                Ok(self.field.make(SmallVec::from_vec(s)))
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state)
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order. Elements of different fields are ordered by
/// characteristic and degree first so that the order stays total.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.0.p, self.field.0.n)
            .cmp(&(other.field.0.p, other.field.0.n))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.0.n == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        f.write_str(&fp::render(&self.coeffs))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$checked(&rhs).expect("field mismatch")
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field mismatch")
            }
        }
    };
}

binary_op!(Add, add, try_add);
binary_op!(Sub, sub, try_sub);
binary_op!(Mul, mul, try_mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

/// Dense polynomials over `F_p` as raw coefficient vectors, low degree first.
/// Only used to implement the extension fields themselves.
mod fp {
    use crate::text;

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Reduces `a` modulo the monic polynomial `m` in place.
    pub fn rem_monic(a: &mut Vec<u64>, m: &[u64], p: u64) {
        let n = m.len() - 1;
        trim(a);
        while a.len() > n {
            let top = a.len() - 1;
            let lead = a[top];
            let shift = top - n;
            for (i, &c) in m.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - lead * c % p) % p;
            }
            trim(a);
        }
    }

    fn inv_scalar(a: u64, p: u64) -> u64 {
        let (mut r0, mut r1) = (p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        s0.rem_euclid(p as i128) as u64
    }

    /// Quotient and remainder of `a / b` for nonzero `b`.
    fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv_scalar(b[db], p);
        let mut q = vec![0u64; r.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            let shift = top - db;
            q[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, slot) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *slot = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    /// Inverse of a nonzero `a` modulo the irreducible `m`.
    pub fn inverse_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        trim(&mut r1);
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since m is irreducible.
        let c = inv_scalar(r0[0], p);
        let mut out: Vec<u64> = s0.iter().map(|&x| x * c % p).collect();
        rem_monic(&mut out, m, p);
        out
    }

    fn has_root(m: &[u64], p: u64) -> bool {
        (0..p).any(|x| m.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
    }

    /// Root check for degree at most 3, trial division by every monic
    /// polynomial of degree at most `n/2` otherwise.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let n = m.len() - 1;
        if n <= 1 {
            return n == 1;
        }
        if has_root(m, p) {
            return false;
        }
        if n <= 3 {
            return true;
        }
        for deg in 2..=n / 2 {
            let count = p.pow(deg as u32);
            for idx in 0..count {
                let mut divisor = digits(idx, p, deg);
                divisor.push(1);
                if divrem(m, &divisor, p).1.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// `idx` as `len` base-`p` digits, least significant first.
    fn digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
        (0..len)
            .map(|_| {
                let d = idx % p;
                idx /= p;
                d
            })
            .collect()
    }

    pub fn smallest_irreducible(n: usize, p: u64) -> Vec<u64> {
        let count = p.pow(n as u32);
        for idx in 0..count {
            // Lexicographic on (c_0, ..., c_{n-1}): c_0 is the most
            // significant digit of the scan counter.
            let mut m = digits(idx, p, n);
            m.reverse();
            m.push(1);
            if is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn render(coeffs: &[u64]) -> String {
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(e, c)| text::render_term(&c.to_string(), 't', e))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f9() -> FieldSpec {
        FieldSpec::extension(3, 2, None).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        assert_eq!(FieldSpec::prime(5).unwrap().order(), 5);
        assert_eq!(FieldSpec::prime(13).unwrap().degree(), 1);
        assert_eq!(FieldSpec::prime(4), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
    }

    #[test]
    fn default_modulus_is_lexicographically_smallest() {
        // Over F_3: t^2 (c0 = 0) and every c0 = 0 candidate has the root 0;
        // (1, 0) is t^2 + 1, which has no root in {0, 1, 2}.
        assert_eq!(f9().modulus(), Some(&[1, 0, 1][..]));
        assert_eq!(
            FieldSpec::extension(2, 2, None).unwrap().modulus(),
            Some(&[1, 1, 1][..])
        );
        // Over F_2 the cubics with c0 = 1 in order (1,0,0), (1,0,1), ...:
        // t^3+1 has the root 1, t^3+t^2+1 has none.
        assert_eq!(
            FieldSpec::extension(2, 3, None).unwrap().modulus(),
            Some(&[1, 0, 1, 1][..])
        );
    }

    #[test]
    fn supplied_modulus_is_checked() {
        assert!(FieldSpec::extension(2, 2, Some(&[1, 1, 1])).is_ok());
        assert!(matches!(
            FieldSpec::extension(3, 2, Some(&[2, 0, 1])),
            Err(FieldError::NotIrreducible(_))
        ));
        assert!(matches!(FieldSpec::extension(4, 2, None), Err(FieldError::NotPrime(4))));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2 has no roots but is reducible.
        assert!(matches!(
            FieldSpec::extension(2, 4, Some(&[1, 0, 1, 0, 1])),
            Err(FieldError::NotIrreducible(_))
        ));
        assert!(FieldSpec::extension(2, 4, Some(&[1, 1, 0, 0, 1])).is_ok());
    }

    #[test]
    fn inverse_in_f5() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.from_int(2).inv().unwrap(), f.from_int(3));
        assert_eq!(f.zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn t_squared_in_f9() {
        let f = f9();
        let t = f.generator().unwrap();
        assert_eq!(&t * &t, f.from_int(2));
    }

    #[test]
    fn pow_zero_is_one() {
        for f in [FieldSpec::prime(7).unwrap(), f9()] {
            for a in f.elements() {
                assert_eq!(a.pow(0), f.one());
            }
        }
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = FieldSpec::prime(5).unwrap().one();
        let b = FieldSpec::prime(7).unwrap().one();
        assert_eq!(a.try_add(&b), Err(FieldError::FieldMismatch));
        assert_eq!(a.try_mul(&b), Err(FieldError::FieldMismatch));
    }

    #[test]
    fn enumeration_order() {
        let render = |f: &FieldSpec| f.elements().iter().map(|e| e.to_string()).collect::<Vec<_>>();
        assert_eq!(render(&FieldSpec::prime(3).unwrap()), ["0", "1", "2"]);
        assert_eq!(
            render(&FieldSpec::extension(2, 2, None).unwrap()),
            ["0", "1", "t", "t+1"]
        );
        let all = f9().elements();
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all, f9().elements());
    }

    #[test]
    fn subfields() {
        let f = f9();
        let prime = f.subfield_elements(1).unwrap();
        assert_eq!(prime, vec![f.from_int(0), f.from_int(1), f.from_int(2)]);
        assert_eq!(f.subfield_elements(2).unwrap().len(), 9);
        let f4 = FieldSpec::extension(2, 2, None).unwrap();
        assert_eq!(f4.subfield_elements(3), Err(FieldError::NotDivisor { m: 3, n: 2 }));
    }

    #[test]
    fn subfields_are_closed() {
        for (p, n) in [(2, 4), (2, 6), (3, 2), (5, 2)] {
            let f = FieldSpec::extension(p, n, None).unwrap();
            for m in (1..=n).filter(|m| n % m == 0) {
                let sub = f.subfield_elements(m).unwrap();
                assert_eq!(sub.len() as u64, p.pow(m as u32));
                for a in &sub {
                    for b in &sub {
                        assert!(sub.binary_search(&(a + b)).is_ok());
                        assert!(sub.binary_search(&(a * b)).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_every_element() {
        for (p, n) in [(2, 3), (3, 2), (5, 2), (7, 1), (2, 5)] {
            let f = FieldSpec::extension(p, n, None).unwrap();
            for a in f.elements() {
                assert_eq!(a.pow(f.order()), a);
            }
        }
    }

    #[test]
    fn text_formats() {
        let f = f9();
        assert_eq!(f.to_string(), "3^2/t^2+1");
        assert_eq!("3^2/t^2+1".parse::<FieldSpec>().unwrap(), f);
        assert_eq!("3^2".parse::<FieldSpec>().unwrap(), f);
        assert_eq!("13".parse::<FieldSpec>().unwrap(), FieldSpec::prime(13).unwrap());
        assert!(matches!("4".parse::<FieldSpec>(), Err(FieldError::NotPrime(4))));
        assert!(matches!(
            "3^2/t^2+2".parse::<FieldSpec>(),
            Err(FieldError::NotIrreducible(_))
        ));
        assert!("3^2/t^2-1".parse::<FieldSpec>().is_err());

        let e = f.parse_element("2*t+1").unwrap();
        assert_eq!(e.coeffs(), &[1, 2]);
        assert_eq!(f.parse_element("1 + 2t").unwrap(), e);
        assert_eq!(f.parse_element("5*t+4").unwrap(), e);
        assert_eq!(f.parse_element("t^2").unwrap(), f.from_int(2));
        assert_eq!(e.to_string(), "2*t+1");
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.parse_element("-1").unwrap(), f7.from_int(6));
        assert_eq!(f7.parse_element("15").unwrap().to_string(), "1");
        assert!(f7.parse_element("t").is_err());
    }

    fn small_field() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just((2u64, 1usize)),
            Just((13, 1)),
            Just((31, 1)),
            Just((2, 3)),
            Just((3, 2)),
            Just((5, 3)),
            Just((7, 2)),
        ]
        .prop_map(|(p, n)| FieldSpec::extension(p, n, None).unwrap())
    }

    fn field_and_triple() -> impl Strategy<Value = (FieldElem, FieldElem, FieldElem)> {
        small_field().prop_flat_map(|f| {
            let q = f.order();
            (0..q, 0..q, 0..q).prop_map(move |(a, b, c)| (f.from_index(a), f.from_index(b), f.from_index(c)))
        })
    }

    proptest! {
        #[test]
        fn field_axioms((a, b, c) in field_and_triple()) {
            let f = a.field().clone();
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &f.zero(), a.clone());
            prop_assert_eq!(&a * &f.one(), a.clone());
            prop_assert_eq!(&a + &(-&a), f.zero());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
            }
        }

        #[test]
        fn element_text_round_trip((a, _, _) in field_and_triple()) {
            let f = a.field().clone();
            prop_assert_eq!(f.parse_element(&a.to_string()).unwrap(), a.clone());
            prop_assert_eq!(f.from_index(a.index()), a);
        }
    }
}
