//! Quick embedded property checks, run by the `selftest` subcommand.

use std::fmt;

use crate::bound::{image, lucas_nonvanishing, theorem_bound, Characteristic, ExpanderInstance};
use crate::certificate::{build_certificate, solve_alpha, solve_beta, verify_alpha, verify_beta};
use crate::field::{FieldElem, FieldSpec};
use crate::poly::Poly;
use crate::sampling::Sampler;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL {}: {why}", self.name),
        }
    }
}

fn check(name: &'static str, body: impl FnOnce() -> Result<u64, String>) -> CheckResult {
    match body() {
        Ok(cases) => CheckResult {
            name,
            cases,
            failure: None,
        },
        Err(why) => CheckResult {
            name,
            cases: 0,
            failure: Some(why),
        },
    }
}

pub fn run(seed: u64) -> Vec<CheckResult> {
    vec![
        check("field axioms", field_axioms),
        check("lucas vs pascal", lucas_vs_pascal),
        check("bound soundness", soundness),
        check("vandermonde deltas", || vandermonde(seed)),
        check("master identity", || master_identity(seed)),
    ]
}

fn field_axioms() -> Result<u64, String> {
    let mut cases = 0;
    for (p, n) in [(7, 1), (2, 2), (2, 3), (3, 2)] {
        let f = FieldSpec::extension(p, n, None).map_err(|e| e.to_string())?;
        let all = f.elements();
        for a in &all {
            if !a.is_zero() && a * &a.inv().map_err(|e| e.to_string())? != f.one() {
                return Err(format!("{a} * inv({a}) != 1 in {f}"));
            }
            for b in &all {
                for c in &all {
                    cases += 1;
                    if &(a * b) * c != a * &(b * c) || a * &(b + c) != &(a * b) + &(a * c) || a + b != b + a {
                        return Err(format!("axiom fails for ({a}, {b}, {c}) in {f}"));
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn lucas_vs_pascal() -> Result<u64, String> {
    let mut cases = 0;
    for p in [2u64, 3, 5, 7] {
        let mut row = vec![1u64];
        for k in 0..=60u64 {
            for (r, &v) in row.iter().enumerate() {
                cases += 1;
                if (v != 0) != lucas_nonvanishing(k, r as u64, Characteristic::Prime(p)) {
                    return Err(format!("binom({k}, {r}) mod {p}"));
                }
            }
            let mut next = vec![1u64; row.len() + 1];
            for r in 1..row.len() {
                next[r] = (row[r - 1] + row[r]) % p;
            }
            row = next;
        }
    }
    Ok(cases)
}

fn soundness() -> Result<u64, String> {
    let mut cases = 0;
    for p in [3u64, 5] {
        let f = FieldSpec::prime(p).map_err(|e| e.to_string())?;
        let all = f.elements();
        let g = Poly::parse(&f, "x^2").map_err(|e| e.to_string())?;
        let h = Poly::parse(&f, "x").map_err(|e| e.to_string())?;
        let nonzero: Vec<FieldElem> = all[1..].to_vec();
        for a_mask in 1u32..(1 << nonzero.len()) {
            for b_mask in 1u32..(1 << all.len()) {
                let pick = |set: &[FieldElem], mask: u32| -> Vec<FieldElem> {
                    set.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, e)| e.clone())
                        .collect()
                };
                let inst = ExpanderInstance::new(&f, g.clone(), h.clone(), pick(&nonzero, a_mask), pick(&all, b_mask))
                    .map_err(|v| format!("{v:?}"))?;
                let size = image(&inst).len() as u64;
                let bound = inst.bound_report().bound;
                cases += 1;
                if size < bound {
                    return Err(format!(
                        "|f(A,B)| = {size} < {bound} for A={:?}, B={:?}",
                        inst.a_set(),
                        inst.b_set()
                    ));
                }
            }
        }
    }
    Ok(cases)
}

fn random_elements(pool: &[FieldElem], k: usize, sampler: &mut Sampler) -> Vec<FieldElem> {
    sampler
        .subset(pool.len(), k)
        .into_iter()
        .map(|i| pool[i as usize].clone())
        .collect()
}

fn vandermonde(seed: u64) -> Result<u64, String> {
    let mut sampler = Sampler::new(seed);
    let f = FieldSpec::prime(13).map_err(|e| e.to_string())?;
    let all = f.elements();
    let h = Poly::parse(&f, "x+1").map_err(|e| e.to_string())?;
    let usable: Vec<FieldElem> = all.iter().filter(|x| !h.eval(x).unwrap().is_zero()).cloned().collect();
    for _ in 0..100 {
        let b = 1 + sampler.below(8) as usize;
        let b_set = random_elements(&all, b, &mut sampler);
        let beta = solve_beta(&b_set);
        if !verify_beta(&beta, &b_set) {
            return Err(format!("beta for B = {b_set:?}"));
        }
        let a = 1 + sampler.below(8) as usize;
        let a_set = random_elements(&usable, a, &mut sampler);
        let target = sampler.below(a as u64) as usize;
        let alpha = solve_alpha(&a_set, &h, b, target).map_err(|e| e.to_string())?;
        if !verify_alpha(&alpha, &a_set, &h, b, target) {
            return Err(format!("alpha for A = {a_set:?}, target {target}"));
        }
    }
    Ok(100)
}

fn master_identity(seed: u64) -> Result<u64, String> {
    let mut sampler = Sampler::new(seed ^ 0x5eed);
    let primes = [5u64, 7, 11, 13];
    let mut cases = 0;
    while cases < 50 {
        let p = primes[sampler.below(primes.len() as u64) as usize];
        let f = FieldSpec::prime(p).map_err(|e| e.to_string())?;
        let all = f.elements();
        let d = 1 + sampler.below(3) as usize;
        let mut g_coeffs: Vec<FieldElem> = (0..d).map(|_| f.from_index(sampler.below(p))).collect();
        g_coeffs.push(f.from_index(1 + sampler.below(p - 1)));
        let dh = sampler.below(d as u64) as usize;
        let mut h_coeffs: Vec<FieldElem> = (0..dh).map(|_| f.from_index(sampler.below(p))).collect();
        h_coeffs.push(f.from_index(1 + sampler.below(p - 1)));
        let g = Poly::new(&f, g_coeffs).map_err(|e| e.to_string())?;
        let h = Poly::new(&f, h_coeffs).map_err(|e| e.to_string())?;
        let usable: Vec<FieldElem> = all.iter().filter(|x| !h.eval(x).unwrap().is_zero()).cloned().collect();
        let a = 1 + sampler.below(usable.len().min(8) as u64) as usize;
        let b = 1 + sampler.below(p.min(5)) as usize;
        let a_set = random_elements(&usable, a, &mut sampler);
        let b_set = random_elements(&all, b, &mut sampler);
        let inst = ExpanderInstance::new(&f, g, h, a_set, b_set).map_err(|v| format!("{v:?}"))?;
        let report =
            theorem_bound(a as u64, b as u64, d as u64, Characteristic::Prime(p)).map_err(|e| e.to_string())?;
        let ks: Vec<u64> = report
            .admissible_k
            .iter()
            .copied()
            .filter(|&k| k >= 1 && k <= p)
            .collect();
        if ks.is_empty() {
            continue;
        }
        let k = ks[sampler.below(ks.len() as u64) as usize] as usize;
        let c = random_elements(&all, k, &mut sampler);
        let cert = build_certificate(&inst, &c).map_err(|e| e.to_string())?;
        if !cert.identity_holds() {
            return Err(format!(
                "pointwise {} != predicted {} for {:?}, C = {c:?}",
                cert.pointwise, cert.predicted, inst
            ));
        }
        cases += 1;
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_checks_pass() {
        for result in super::run(7) {
            assert!(result.passed(), "{result}");
        }
    }
}
