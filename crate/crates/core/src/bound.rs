//! The Cauchy–Davenport-type lower bound for `|{g(x) + y*h(x) : x in A, y in B}|`.
//!
//! For `d = deg g > deg h`, `A` free of roots of `h`, `|A| = a`, `|B| = b`:
//! every integer `k <= (a-1)/d + b - 1` with `binom(k, b-1) != 0` in the field
//! certifies that the image has more than `k` elements. [`theorem_bound`]
//! scans all such `k` and reports the strongest conclusion;
//! [`corollary_bound`] is the closed form `min(a/d + b - 1, p)` kept as a
//! cross-check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::{is_prime, FieldElem, FieldSpec};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Characteristic of the ambient field; `Zero` is the `p = inf` sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Prime(u64),
    Zero,
}

impl Characteristic {
    pub fn of(field: &FieldSpec) -> Self {
        Characteristic::Prime(field.characteristic())
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Prime(p) => write!(f, "{p}"),
            Characteristic::Zero => f.write_str("inf"),
        }
    }
}

impl FromStr for Characteristic {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "0" => Ok(Characteristic::Zero),
            other => {
                let p: u64 = other
                    .parse()
                    .map_err(|_| BoundError::InvalidParameters(format!("bad characteristic {other:?}")))?;
                if is_prime(p) {
                    Ok(Characteristic::Prime(p))
                } else {
                    Err(BoundError::InvalidParameters(format!("{p} is not prime")))
                }
            }
        }
    }
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Characteristic::Prime(p) => serializer.serialize_u64(*p),
            Characteristic::Zero => serializer.serialize_str("inf"),
        }
    }
}

/// Whether `binom(k, r)` is nonzero in characteristic `ch`.
///
/// By Lucas' theorem this holds iff no base-`p` digit of `r` exceeds the
/// corresponding digit of `k`. In characteristic zero it is just `r <= k`.
pub fn lucas_nonvanishing(k: u64, r: u64, ch: Characteristic) -> bool {
    let p = match ch {
        Characteristic::Zero => return r <= k,
        Characteristic::Prime(p) => p,
    };
    let (mut k, mut r) = (k, r);
    while r > 0 {
        if r % p > k % p {
            return false;
        }
        r /= p;
        k /= p;
    }
    true
}

/// `binom(n, r) mod p` from the Pascal recurrence, exact for any size.
pub fn binomial_mod(n: u64, r: u64, p: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r) as usize;
    let mut row = vec![0u64; r + 1];
    row[0] = 1 % p;
    for i in 1..=n as usize {
        for j in (1..=r.min(i)).rev() {
            row[j] = (row[j] + row[j - 1]) % p;
        }
    }
    row[r]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub a: u64,
    pub b: u64,
    pub d: u64,
    pub characteristic: Characteristic,
    /// `floor((a-1)/d) + b - 1`, the largest `k` the degree condition allows.
    pub k_max_range: u64,
    pub admissible_k: Vec<u64>,
    pub best_k: Option<u64>,
    pub bound: u64,
    /// Set when no `k` was admissible and `bound` is the trivial `b`.
    pub fallback: bool,
}

fn check_params(a: u64, b: u64, d: u64) -> Result<(), BoundError> {
    if a == 0 || b == 0 || d == 0 {
        return Err(BoundError::InvalidParameters(format!(
            "a, b and d must be at least 1 (got a={a}, b={b}, d={d})"
        )));
    }
    Ok(())
}

/// Scans every `k` in `[b-1, floor((a-1)/d) + b - 1]` and keeps those with
/// `binom(k, b-1) != 0`. Nonvanishing is not monotone in `k`, so the whole
/// range is checked; the bound is `1 + max admissible k`.
pub fn theorem_bound(a: u64, b: u64, d: u64, ch: Characteristic) -> Result<BoundReport, BoundError> {
    check_params(a, b, d)?;
    let k_max_range = (a - 1) / d + b - 1;
    let admissible_k: Vec<u64> = (b - 1..=k_max_range)
        .filter(|&k| lucas_nonvanishing(k, b - 1, ch))
        .collect();
    let best_k = admissible_k.last().copied();
    let (bound, fallback) = match best_k {
        Some(k) => (k + 1, false),
        None => (b, true),
    };
    Ok(BoundReport {
        a,
        b,
        d,
        characteristic: ch,
        k_max_range,
        admissible_k,
        best_k,
        bound,
        fallback,
    })
}

/// `min(floor(a/d + b - 1), p)`, clamped to at least 1.
pub fn corollary_bound(a: u64, b: u64, d: u64, ch: Characteristic) -> Result<u64, BoundError> {
    check_params(a, b, d)?;
    let linear = a / d + b - 1;
    let capped = match ch {
        Characteristic::Prime(p) => linear.min(p),
        Characteristic::Zero => linear,
    };
    Ok(capped.max(1))
}

/// A failed hypothesis of the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyA,
    EmptyB,
    DuplicateInA(FieldElem),
    DuplicateInB(FieldElem),
    ZeroH,
    DegreeOrder { deg_g: Option<usize>, deg_h: Option<usize> },
    RootInA(FieldElem),
    ForeignField(&'static str),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = |d: &Option<usize>| d.map_or("-inf".to_string(), |d| d.to_string());
        match self {
            Violation::EmptyA => f.write_str("A is empty"),
            Violation::EmptyB => f.write_str("B is empty"),
            Violation::DuplicateInA(x) => write!(f, "A lists {x} more than once"),
            Violation::DuplicateInB(y) => write!(f, "B lists {y} more than once"),
            Violation::ZeroH => f.write_str("h is the zero polynomial"),
            Violation::DegreeOrder { deg_g, deg_h } => {
                write!(f, "deg g <= deg h ({} <= {})", deg(deg_g), deg(deg_h))
            }
            Violation::RootInA(x) => write!(f, "A contains root {x} of h"),
            Violation::ForeignField(what) => write!(f, "{what} does not belong to the declared field"),
        }
    }
}

/// Raw data for an instance, before validation.
#[derive(Debug, Clone)]
pub struct InstanceCandidate {
    pub field: FieldSpec,
    pub g: Poly,
    pub h: Poly,
    pub a: Vec<FieldElem>,
    pub b: Vec<FieldElem>,
}

/// `(g, h, A, B)` satisfying every hypothesis of the bound. `A` and `B` are
/// kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpanderInstance {
    field: FieldSpec,
    g: Poly,
    h: Poly,
    a: Vec<FieldElem>,
    b: Vec<FieldElem>,
}

fn sorted_distinct(
    items: &[FieldElem],
    field: &FieldSpec,
    name: &'static str,
    dup: fn(FieldElem) -> Violation,
    out: &mut Vec<Violation>,
) -> Vec<FieldElem> {
    if items.iter().any(|x| x.field() != field) {
        out.push(Violation::ForeignField(name));
    }
    let mut sorted = items.to_vec();
    sorted.sort();
    let mut reported = BTreeSet::new();
    for w in sorted.windows(2) {
        if w[0] == w[1] && reported.insert(w[0].clone()) {
            out.push(dup(w[0].clone()));
        }
    }
    sorted.dedup();
    sorted
}

/// Validates a candidate, collecting every violated hypothesis.
pub fn check_instance(candidate: InstanceCandidate) -> Result<ExpanderInstance, Vec<Violation>> {
    let InstanceCandidate { field, g, h, a, b } = candidate;
    let mut violations = Vec::new();
    if g.field() != &field {
        violations.push(Violation::ForeignField("g"));
    }
    if h.field() != &field {
        violations.push(Violation::ForeignField("h"));
    }
    if a.is_empty() {
        violations.push(Violation::EmptyA);
    }
    if b.is_empty() {
        violations.push(Violation::EmptyB);
    }
    let a = sorted_distinct(&a, &field, "A", Violation::DuplicateInA, &mut violations);
    let b = sorted_distinct(&b, &field, "B", Violation::DuplicateInB, &mut violations);
    if h.is_zero() {
        violations.push(Violation::ZeroH);
    }
    if g.degree() <= h.degree() {
        violations.push(Violation::DegreeOrder {
            deg_g: g.degree(),
            deg_h: h.degree(),
        });
    }
    if violations.is_empty() {
        for x in &a {
            if h.eval(x).expect("field checked").is_zero() {
                violations.push(Violation::RootInA(x.clone()));
            }
        }
    }
    if violations.is_empty() {
        Ok(ExpanderInstance { field, g, h, a, b })
    } else {
        Err(violations)
    }
}

impl ExpanderInstance {
    pub fn new(
        field: &FieldSpec,
        g: Poly,
        h: Poly,
        a: Vec<FieldElem>,
        b: Vec<FieldElem>,
    ) -> Result<Self, Vec<Violation>> {
        check_instance(InstanceCandidate {
            field: field.clone(),
            g,
            h,
            a,
            b,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn a_set(&self) -> &[FieldElem] {
        &self.a
    }

    pub fn b_set(&self) -> &[FieldElem] {
        &self.b
    }

    /// `d = deg g`.
    pub fn d(&self) -> u64 {
        self.g.degree().expect("validated: deg g > deg h >= 0") as u64
    }

    pub fn bound_report(&self) -> BoundReport {
        theorem_bound(
            self.a.len() as u64,
            self.b.len() as u64,
            self.d(),
            Characteristic::of(&self.field),
        )
        .expect("validated instance has a, b, d >= 1")
    }

    /// `g(x) + y*h(x)`.
    pub fn value(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        let gx = self.g.eval(x).expect("same field");
        let hx = self.h.eval(x).expect("same field");
        &gx + &(y * &hx)
    }
}

/// `f(A, B) = {g(x) + y*h(x) : x in A, y in B}` in canonical order.
pub fn image(instance: &ExpanderInstance) -> Vec<FieldElem> {
    let mut out = BTreeSet::new();
    for x in &instance.a {
        let gx = instance.g.eval(x).expect("same field");
        let hx = instance.h.eval(x).expect("same field");
        for y in &instance.b {
            out.insert(&gx + &(y * &hx));
        }
    }
    out.into_iter().collect()
}
