//! Constructive replay of the polynomial-method proof of the bound.
//!
//! Given an instance `(g, h, A, B)` and any set `C` of admissible size `k`,
//! let `P(x, y) = prod_{c in C} (g(x) + y*h(x) - c)`. Weights `beta` on `B`
//! and `alpha` on `A` are chosen from two Vandermonde systems so that in
//!
//! ```text
//! sum_{x in A, y in B} alpha(x) beta(y) P(x, y)
//!     = sum_{i,j} lambda_{i,j} (sum_x alpha(x) g(x)^i h(x)^j) (sum_y beta(y) y^j)
//! ```
//!
//! exactly one term survives, worth `binom(k, b-1) * M^(k-b+1)` with `M` the
//! leading coefficient of `g`. That value is nonzero, while `P` would vanish
//! on `A x B` if `C` covered the image, so no cover of size `k` exists.
//!
//! A [`Certificate`] records every ingredient together with the predicted
//! value and the value obtained by direct evaluation of the double sum.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bound::{binomial_mod, lucas_nonvanishing, Characteristic, ExpanderInstance};
use crate::field::{FieldElem, FieldSpec};
use crate::linalg::{moment_matrix, solve_square};
use crate::poly::Poly;

/// Which admissibility condition a `k` failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inadmissibility {
    /// Outside `[b-1, floor((a-1)/d) + b - 1]`.
    Range { low: u64, high: u64 },
    /// `binom(k, b-1)` vanishes in the field.
    Lucas,
}

impl fmt::Display for Inadmissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inadmissibility::Range { low, high } => write!(f, "range: k must lie in [{low}, {high}]"),
            Inadmissibility::Lucas => f.write_str("Lucas: binom(k, b-1) vanishes in the field"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("the covering set C is empty")]
    EmptyC,
    #[error("C lists {0} more than once")]
    DuplicateInC(FieldElem),
    #[error("C contains an element of another field")]
    ForeignElement,
    #[error("k = {k} is inadmissible ({reason})")]
    InadmissibleK { k: u64, reason: Inadmissibility },
    #[error("target degree {target} exceeds |A| - 1 = {max}")]
    TargetDegreeTooLarge { target: u64, max: u64 },
    #[error("h vanishes at {0}, so alpha cannot be recovered there")]
    RootOfH(FieldElem),
}

/// `e_0, ..., e_k` of the elements of `c`.
pub fn elementary_symmetric(field: &FieldSpec, c: &[FieldElem]) -> Vec<FieldElem> {
    let mut e = vec![field.zero(); c.len() + 1];
    e[0] = field.one();
    for (n, x) in c.iter().enumerate() {
        for m in (1..=n + 1).rev() {
            let term = &e[m - 1] * x;
            e[m] = &e[m] + &term;
        }
    }
    e
}

/// The nonzero `lambda_{i,j}` in `prod_{c in C}(g + y*h - c) =
/// sum lambda_{i,j} g^i h^j y^j`.
///
/// With `w = g + y*h`, `prod (w - c) = sum_m (-1)^(k-m) e_{k-m} w^m` and
/// `w^m = sum_j binom(m, j) g^(m-j) (y*h)^j`, so
/// `lambda_{i,j} = (-1)^(k-i-j) e_{k-i-j} binom(i+j, j)`. The table does
/// not depend on `g` or `h`.
pub fn lambda_coefficients(
    field: &FieldSpec,
    c: &[FieldElem],
) -> Result<BTreeMap<(usize, usize), FieldElem>, CertificateError> {
    if c.is_empty() {
        return Err(CertificateError::EmptyC);
    }
    let k = c.len();
    let p = field.characteristic();
    let e = elementary_symmetric(field, c);
    let mut table = BTreeMap::new();
    for m in 0..=k {
        let mut coeff = e[k - m].clone();
        if (k - m) % 2 == 1 {
            coeff = -coeff;
        }
        if coeff.is_zero() {
            continue;
        }
        for j in 0..=m {
            let binom = field.from_int(binomial_mod(m as u64, j as u64, p) as i128);
            let value = &coeff * &binom;
            if !value.is_zero() {
                table.insert((m - j, j), value);
            }
        }
    }
    Ok(table)
}

/// The unique `beta` on `B` with `sum_y beta(y) y^j = [j = b-1]` for
/// `0 <= j <= b-1`, by Gaussian elimination on the Vandermonde system.
pub fn solve_beta(b_set: &[FieldElem]) -> BTreeMap<FieldElem, FieldElem> {
    let Some(first) = b_set.first() else {
        return BTreeMap::new();
    };
    let field = first.field();
    let b = b_set.len();
    let mut rhs = vec![field.zero(); b];
    rhs[b - 1] = field.one();
    let solution = solve_square(moment_matrix(b_set, b), rhs).expect("nodes are distinct");
    b_set.iter().cloned().zip(solution).collect()
}

/// Closed form of [`solve_beta`]: `beta(y) = 1 / prod_{y' != y} (y - y')`.
pub fn solve_beta_lagrange(b_set: &[FieldElem]) -> BTreeMap<FieldElem, FieldElem> {
    b_set
        .iter()
        .map(|y| {
            let denom = b_set
                .iter()
                .filter(|z| *z != y)
                .fold(y.field().one(), |acc, z| &acc * &(y - z));
            (y.clone(), denom.inv().expect("nodes are distinct"))
        })
        .collect()
}

/// Weights `alpha` on `A` with `sum_x alpha(x) h(x)^(b-1) x^i = [i = target]`
/// for `0 <= i <= target`.
///
/// The system has `|A|` unknowns and `target + 1` equations. It is solved for
/// `u(x) = alpha(x) h(x)^(b-1)` on the first `target + 1` elements of `A`
/// (canonical order) with `u = 0` elsewhere, then `alpha = u / h^(b-1)`.
pub fn solve_alpha(
    a_set: &[FieldElem],
    h: &Poly,
    b: usize,
    target_degree: usize,
) -> Result<BTreeMap<FieldElem, FieldElem>, CertificateError> {
    if target_degree + 1 > a_set.len() {
        return Err(CertificateError::TargetDegreeTooLarge {
            target: target_degree as u64,
            max: a_set.len() as u64 - 1,
        });
    }
    let field = h.field();
    let support = &a_set[..=target_degree];
    let mut rhs = vec![field.zero(); target_degree + 1];
    rhs[target_degree] = field.one();
    let u = solve_square(moment_matrix(support, target_degree + 1), rhs).expect("nodes are distinct");

    let mut alpha = BTreeMap::new();
    for (i, x) in a_set.iter().enumerate() {
        let hx = h.eval(x).expect("same field");
        let weight = hx
            .pow(b as u64 - 1)
            .inv()
            .map_err(|_| CertificateError::RootOfH(x.clone()))?;
        let value = match u.get(i) {
            Some(ux) => ux * &weight,
            None => field.zero(),
        };
        alpha.insert(x.clone(), value);
    }
    Ok(alpha)
}

fn lookup(map: &BTreeMap<FieldElem, FieldElem>, key: &FieldElem) -> FieldElem {
    map.get(key).cloned().unwrap_or_else(|| key.field().zero())
}

/// Recomputes every moment `sum_y beta(y) y^j`, `0 <= j < |B|`, and checks
/// the delta pattern.
pub fn verify_beta(beta: &BTreeMap<FieldElem, FieldElem>, b_set: &[FieldElem]) -> bool {
    let Some(first) = b_set.first() else {
        return false;
    };
    if beta.keys().any(|y| !b_set.contains(y)) {
        return false;
    }
    let field = first.field();
    let b = b_set.len();
    moment_matrix(b_set, b).iter().enumerate().all(|(j, row)| {
        let moment = row
            .iter()
            .zip(b_set)
            .fold(field.zero(), |acc, (yj, y)| &acc + &(&lookup(beta, y) * yj));
        moment == if j == b - 1 { field.one() } else { field.zero() }
    })
}

/// Recomputes `sum_x alpha(x) h(x)^(b-1) x^i` for `0 <= i <= target` and
/// checks the delta pattern.
pub fn verify_alpha(
    alpha: &BTreeMap<FieldElem, FieldElem>,
    a_set: &[FieldElem],
    h: &Poly,
    b: usize,
    target_degree: usize,
) -> bool {
    if alpha.keys().any(|x| !a_set.contains(x)) || b == 0 {
        return false;
    }
    let field = h.field();
    let weighted: Vec<FieldElem> = a_set
        .iter()
        .map(|x| &lookup(alpha, x) * &h.eval(x).expect("same field").pow(b as u64 - 1))
        .collect();
    moment_matrix(a_set, target_degree + 1)
        .iter()
        .enumerate()
        .all(|(i, row)| {
            let moment = row
                .iter()
                .zip(&weighted)
                .fold(field.zero(), |acc, (xi, w)| &acc + &(w * xi));
            moment == if i == target_degree { field.one() } else { field.zero() }
        })
}

/// Checks `b-1 <= k <= floor((a-1)/d) + b - 1` and `binom(k, b-1) != 0`.
pub fn check_admissible(instance: &ExpanderInstance, k: u64) -> Result<(), CertificateError> {
    let a = instance.a_set().len() as u64;
    let b = instance.b_set().len() as u64;
    let low = b - 1;
    let high = (a - 1) / instance.d() + b - 1;
    if k < low || k > high {
        return Err(CertificateError::InadmissibleK {
            k,
            reason: Inadmissibility::Range { low, high },
        });
    }
    if !lucas_nonvanishing(k, b - 1, Characteristic::of(instance.field())) {
        return Err(CertificateError::InadmissibleK {
            k,
            reason: Inadmissibility::Lucas,
        });
    }
    Ok(())
}

/// `g^i h^(j-b+1)`, the polynomial whose coefficients are the
/// `eta_{i,j}(nu)` in `g^i h^j = h^(b-1) sum_nu eta_{i,j}(nu) x^nu`.
/// Defined for `j >= b - 1`.
pub fn eta_polynomial(g: &Poly, h: &Poly, b: usize, i: usize, j: usize) -> Option<Poly> {
    let extra = j.checked_sub(b.checked_sub(1)?)?;
    Some(&g.pow(i as u32) * &h.pow(extra as u32))
}

/// For every `(i, j)` with `j > b-1` and `i + j <= k`, the degree of
/// `g^i h^(j-b+1)` stays strictly below `d(k-b+1)`, so those terms never
/// reach the one moment `alpha` does not annihilate.
pub fn degree_side_condition(instance: &ExpanderInstance, k: usize) -> bool {
    let b = instance.b_set().len();
    let Some(top) = k.checked_sub(b - 1) else {
        return true;
    };
    let target = instance.d() as usize * top;
    (b..=k).all(|j| {
        (0..=k - j).all(|i| {
            let eta = eta_polynomial(instance.g(), instance.h(), b, i, j).expect("j >= b-1");
            eta.degree().is_none_or(|deg| deg < target)
        })
    })
}

/// Every ingredient of the proof for one instance and one set `C`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub instance: ExpanderInstance,
    pub c: Vec<FieldElem>,
    pub k: usize,
    pub target_degree: usize,
    pub elementary_symmetric: Vec<FieldElem>,
    pub lambda_table: BTreeMap<(usize, usize), FieldElem>,
    pub beta: BTreeMap<FieldElem, FieldElem>,
    pub alpha: BTreeMap<FieldElem, FieldElem>,
    /// `binom(k, b-1) * M^(k-b+1)`.
    pub predicted: FieldElem,
    /// `sum_{x,y} alpha(x) beta(y) P(x, y)` by direct evaluation.
    pub pointwise: FieldElem,
}

impl Certificate {
    pub fn identity_holds(&self) -> bool {
        self.predicted == self.pointwise
    }
}

fn validate_c(instance: &ExpanderInstance, c: &[FieldElem]) -> Result<Vec<FieldElem>, CertificateError> {
    if c.is_empty() {
        return Err(CertificateError::EmptyC);
    }
    if c.iter().any(|x| x.field() != instance.field()) {
        return Err(CertificateError::ForeignElement);
    }
    let mut seen = BTreeSet::new();
    for x in c {
        if !seen.insert(x.clone()) {
            return Err(CertificateError::DuplicateInC(x.clone()));
        }
    }
    Ok(seen.into_iter().collect())
}

/// `P(x, y)` evaluated directly as a product over `C`.
fn eval_p(instance: &ExpanderInstance, c: &[FieldElem], x: &FieldElem, y: &FieldElem) -> FieldElem {
    let v = instance.value(x, y);
    c.iter().fold(instance.field().one(), |acc, ci| &acc * &(&v - ci))
}

/// Builds the certificate for `C`, which may be any set of admissible size.
pub fn build_certificate(instance: &ExpanderInstance, c: &[FieldElem]) -> Result<Certificate, CertificateError> {
    let c = validate_c(instance, c)?;
    let k = c.len();
    check_admissible(instance, k as u64)?;

    let field = instance.field();
    let b = instance.b_set().len();
    let d = instance.d() as usize;
    let top = k + 1 - b;
    let target_degree = d * top;

    let elementary = elementary_symmetric(field, &c);
    let lambda_table = lambda_coefficients(field, &c)?;
    let beta = solve_beta(instance.b_set());
    let alpha = solve_alpha(instance.a_set(), instance.h(), b, target_degree)?;

    let m = instance.g().leading_coefficient().expect("deg g > deg h >= 0");
    let binom = binomial_mod(k as u64, b as u64 - 1, field.characteristic());
    let predicted = &field.from_int(binom as i128) * &m.pow(top as u64);

    let mut pointwise = field.zero();
    for x in instance.a_set() {
        let ax = &alpha[x];
        if ax.is_zero() {
            continue;
        }
        for y in instance.b_set() {
            let term = &(ax * &beta[y]) * &eval_p(instance, &c, x, y);
            pointwise = &pointwise + &term;
        }
    }

    Ok(Certificate {
        instance: instance.clone(),
        c,
        k,
        target_degree,
        elementary_symmetric: elementary,
        lambda_table,
        beta,
        alpha,
        predicted,
        pointwise,
    })
}

/// Outcome of testing whether `C` covers the image.
#[derive(Debug, Clone)]
pub enum Refutation {
    /// A pair whose value `g(x) + y*h(x)` is missing from `C`.
    Witness {
        x: FieldElem,
        y: FieldElem,
        value: FieldElem,
    },
    /// `C` covers the image although the algebra says it cannot: `P`
    /// vanishes on `A x B` so the double sum is 0, yet it must equal the
    /// nonzero predicted value. Only reachable through an implementation bug.
    Inconsistent(Box<Certificate>),
}

/// Looks for a pair `(x, y)` in canonical order whose value escapes `C`.
pub fn refute_cover(instance: &ExpanderInstance, c: &[FieldElem]) -> Result<Refutation, CertificateError> {
    let c = validate_c(instance, c)?;
    check_admissible(instance, c.len() as u64)?;
    for x in instance.a_set() {
        for y in instance.b_set() {
            let value = instance.value(x, y);
            if c.binary_search(&value).is_err() {
                return Ok(Refutation::Witness {
                    x: x.clone(),
                    y: y.clone(),
                    value,
                });
            }
        }
    }
    Ok(Refutation::Inconsistent(Box::new(build_certificate(instance, &c)?)))
}

#[derive(Serialize)]
struct LambdaEntry<'a> {
    i: usize,
    j: usize,
    value: &'a FieldElem,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    field: String,
    g: &'a Poly,
    h: &'a Poly,
    #[serde(rename = "A")]
    a: &'a [FieldElem],
    #[serde(rename = "B")]
    b: &'a [FieldElem],
    #[serde(rename = "C")]
    c: &'a [FieldElem],
    k: usize,
    target_degree: usize,
    elementary_symmetric: &'a [FieldElem],
    lambda: Vec<LambdaEntry<'a>>,
    alpha: &'a BTreeMap<FieldElem, FieldElem>,
    beta: &'a BTreeMap<FieldElem, FieldElem>,
    predicted: &'a FieldElem,
    pointwise: &'a FieldElem,
    identity_holds: bool,
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CertificateJson {
            field: self.instance.field().to_string(),
            g: self.instance.g(),
            h: self.instance.h(),
            a: self.instance.a_set(),
            b: self.instance.b_set(),
            c: &self.c,
            k: self.k,
            target_degree: self.target_degree,
            elementary_symmetric: &self.elementary_symmetric,
            lambda: self
                .lambda_table
                .iter()
                .map(|(&(i, j), value)| LambdaEntry { i, j, value })
                .collect(),
            alpha: &self.alpha,
            beta: &self.beta,
            predicted: &self.predicted,
            pointwise: &self.pointwise,
            identity_holds: self.identity_holds(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn elems(field: &FieldSpec, xs: &[i128]) -> Vec<FieldElem> {
        xs.iter().map(|&x| field.from_int(x)).collect()
    }

    /// F_5, g = x^2, h = x, A = {1,2,3,4}, B = {0,1,2}: a = 4, b = 3, d = 2.
    fn worked_instance() -> ExpanderInstance {
        let f = f5();
        ExpanderInstance::new(
            &f,
            Poly::parse(&f, "x^2").unwrap(),
            Poly::parse(&f, "x").unwrap(),
            elems(&f, &[1, 2, 3, 4]),
            elems(&f, &[0, 1, 2]),
        )
        .unwrap()
    }

    #[test]
    fn lambda_for_single_point() {
        let f = f5();
        let table = lambda_coefficients(&f, &elems(&f, &[3])).unwrap();
        assert_eq!(table[&(1, 0)], f.one());
        assert_eq!(table[&(0, 1)], f.one());
        assert_eq!(table[&(0, 0)], f.from_int(-3));
        assert_eq!(table.len(), 3);
        assert_eq!(lambda_coefficients(&f, &[]), Err(CertificateError::EmptyC));
    }

    #[test]
    fn lambda_for_two_points_mod_5() {
        // (w - 1)(w - 2) = w^2 + 2w + 2 over F_5.
        let f = f5();
        let c = elems(&f, &[1, 2]);
        assert_eq!(elementary_symmetric(&f, &c), elems(&f, &[1, 3, 2]));
        let table = lambda_coefficients(&f, &c).unwrap();
        let expect = [
            ((0, 0), 2),
            ((1, 0), 2),
            ((0, 1), 2),
            ((2, 0), 1),
            ((1, 1), 2),
            ((0, 2), 1),
        ];
        assert_eq!(table.len(), expect.len());
        for (key, v) in expect {
            assert_eq!(table[&key], f.from_int(v), "lambda{key:?}");
        }
    }

    #[test]
    fn lambda_corner_is_binomial() {
        let f = FieldSpec::prime(13).unwrap();
        let c = elems(&f, &[0, 3, 5, 7, 11]);
        let table = lambda_coefficients(&f, &c).unwrap();
        for b in 1..=5usize {
            let k = 5;
            let expect = binomial_mod(k as u64, b as u64 - 1, 13);
            assert_eq!(table[&(k - b + 1, b - 1)], f.from_int(expect as i128));
        }
    }

    #[test]
    fn beta_examples() {
        let f = f5();
        let beta = solve_beta(&elems(&f, &[4]));
        assert_eq!(beta[&f.from_int(4)], f.one());

        let b_set = elems(&f, &[0, 1, 2]);
        let beta = solve_beta(&b_set);
        let values: Vec<_> = b_set.iter().map(|y| beta[y].clone()).collect();
        assert_eq!(values, elems(&f, &[3, 4, 3]));
        assert_eq!(beta, solve_beta_lagrange(&b_set));
        assert!(verify_beta(&beta, &b_set));

        let mut bad = beta.clone();
        bad.insert(f.from_int(1), f.from_int(0));
        assert!(!verify_beta(&bad, &b_set));
    }

    #[test]
    fn alpha_example() {
        let inst = worked_instance();
        let alpha = solve_alpha(inst.a_set(), inst.h(), 3, 2).unwrap();
        assert!(verify_alpha(&alpha, inst.a_set(), inst.h(), 3, 2));
        // Support is the first three elements of A.
        assert!(alpha[&f5().from_int(4)].is_zero());

        let zero: BTreeMap<_, _> = inst.a_set().iter().map(|x| (x.clone(), f5().zero())).collect();
        assert!(!verify_alpha(&zero, inst.a_set(), inst.h(), 3, 2));
        assert!(!verify_alpha(&zero, inst.a_set(), inst.h(), 3, 0));

        assert_eq!(
            solve_alpha(inst.a_set(), inst.h(), 3, 4).unwrap_err(),
            CertificateError::TargetDegreeTooLarge { target: 4, max: 3 }
        );
    }

    #[test]
    fn square_alpha_system() {
        // k = b gives target d; |A| = d + 1 makes the system square.
        let f = FieldSpec::prime(7).unwrap();
        let h = Poly::parse(&f, "x+1").unwrap();
        let a_set = elems(&f, &[0, 1, 2, 3]);
        let alpha = solve_alpha(&a_set, &h, 2, 3).unwrap();
        assert!(verify_alpha(&alpha, &a_set, &h, 2, 3));
        assert!(alpha.values().all(|v| !v.is_zero()));
    }

    #[test]
    fn worked_certificate() {
        let inst = worked_instance();
        let f = f5();
        let cert = build_certificate(&inst, &elems(&f, &[0, 1, 4])).unwrap();
        assert_eq!(cert.k, 3);
        assert_eq!(cert.target_degree, 2);
        assert_eq!(cert.predicted, f.from_int(3));
        assert!(cert.identity_holds());
        assert!(degree_side_condition(&inst, 3));

        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["predicted"], "3");
        assert_eq!(json["identity_holds"], true);
        assert_eq!(json["field"], "5");
        assert_eq!(json["g"], "x^2");
        assert_eq!(json["beta"]["0"], "3");
    }

    #[test]
    fn corner_eta_is_leading_power() {
        let f = FieldSpec::prime(7).unwrap();
        let inst = ExpanderInstance::new(
            &f,
            Poly::parse(&f, "3*x^2+x").unwrap(),
            Poly::parse(&f, "x+2").unwrap(),
            elems(&f, &[0, 1, 2, 3, 4]),
            elems(&f, &[1, 2]),
        )
        .unwrap();
        let (b, k) = (2, 3);
        let top = k - b + 1;
        let eta = eta_polynomial(inst.g(), inst.h(), b, top, b - 1).unwrap();
        assert_eq!(eta.coefficient(2 * top), f.from_int(3).pow(top as u64));
        assert!(degree_side_condition(&inst, k));
    }

    #[test]
    fn inadmissible_k() {
        let inst = worked_instance();
        let f = f5();
        let err = build_certificate(&inst, &elems(&f, &[0, 1, 2, 3])).unwrap_err();
        assert!(matches!(
            err,
            CertificateError::InadmissibleK {
                k: 4,
                reason: Inadmissibility::Range { .. }
            }
        ));
        assert!(err.to_string().contains("range"));
        let err = build_certificate(&inst, &elems(&f, &[0])).unwrap_err();
        assert!(matches!(err, CertificateError::InadmissibleK { k: 1, .. }));

        let f2 = FieldSpec::extension(2, 4, None).unwrap();
        let all = f2.elements();
        let inst = ExpanderInstance::new(
            &f2,
            Poly::parse(&f2, "x").unwrap(),
            Poly::parse(&f2, "1").unwrap(),
            all[..8].to_vec(),
            all[..4].to_vec(),
        )
        .unwrap();
        // b - 1 = 3, k = 5: binom(5, 3) = 10 is even.
        let err = build_certificate(&inst, &all[..5]).unwrap_err();
        assert_eq!(
            err,
            CertificateError::InadmissibleK {
                k: 5,
                reason: Inadmissibility::Lucas
            }
        );
        assert!(err.to_string().contains("Lucas"));
    }

    #[test]
    fn refutations() {
        let inst = worked_instance();
        let f = f5();
        // Disjoint from the image? The image here is all of F_5, so any C of
        // admissible size misses something.
        match refute_cover(&inst, &elems(&f, &[2, 3, 4])).unwrap() {
            Refutation::Witness { x, y, value } => {
                assert_eq!((x, y.clone()), (f.one(), f.zero()));
                assert_eq!(value, f.one());
            }
            Refutation::Inconsistent(_) => panic!("C cannot cover the image"),
        }
        assert!(matches!(
            refute_cover(&inst, &elems(&f, &[1, 1, 2])),
            Err(CertificateError::DuplicateInC(_))
        ));
    }
}
