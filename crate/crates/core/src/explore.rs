//! Brute-force experiments on the image sizes `|f(A, B)|`.
//!
//! [`search_extremal`] enumerates or samples pairs `(A, B)` and measures the
//! slack `|f(A, B)| - bound` of each; a negative slack would contradict the
//! bound and aborts the run with a [`ViolationDump`]. [`subfield_experiment`]
//! and [`subfield_baseline`] probe the subfield configurations where the
//! bound is nearly tight, and [`nearest_subfield_distance`] measures how far
//! a set is from being a subfield.
//!
//! Output is independent of the worker count: workers only ever produce
//! candidates, and the final record list is fixed by a total order
//! (slack, then `a`, `b`, `A`, `B` in canonical order).

use std::collections::BinaryHeap;
use std::fmt;
use std::io::Write;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bound::{image, theorem_bound, Characteristic, ExpanderInstance};
use crate::field::{FieldElem, FieldError, FieldSpec};
use crate::poly::Poly;
use crate::sampling::Sampler;

/// Default cap on the number of `(A, B)` pairs an exhaustive run may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum ExploreError {
    #[error("exhaustive search needs {pairs} pairs, over the budget of {budget}")]
    BudgetExceeded { pairs: u128, budget: u64 },
    #[error("{m} is not a proper divisor of the extension degree {n}")]
    NotProperDivisor { m: usize, n: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("bound violated, this is a bug:\n{0}")]
    SoundnessViolation(Box<ViolationDump>),
    #[error("image of size {} is below the proved threshold {:?}", .0.image_size, .0.proved_threshold)]
    RemarkViolation(Box<ExperimentRecord>),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("worker pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

/// Everything needed to reproduce a negative slack.
#[derive(Debug, Clone)]
pub struct ViolationDump {
    pub field: String,
    pub g: String,
    pub h: String,
    pub a_set: Vec<FieldElem>,
    pub b_set: Vec<FieldElem>,
    pub image_size: u64,
    pub bound: u64,
}

impl fmt::Display for ViolationDump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "g: {}", self.g)?;
        writeln!(f, "h: {}", self.h)?;
        writeln!(f, "A: {}", render_set(&self.a_set, ' '))?;
        writeln!(f, "B: {}", render_set(&self.b_set, ' '))?;
        write!(f, "|f(A,B)| = {} < bound {}", self.image_size, self.bound)
    }
}

fn render_set(set: &[FieldElem], sep: char) -> String {
    set.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(&sep.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

/// Inclusive range of set sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeRange {
    pub min: usize,
    pub max: usize,
}

impl SizeRange {
    pub fn exactly(n: usize) -> Self {
        SizeRange { min: n, max: n }
    }

    pub fn new(min: usize, max: usize) -> Self {
        SizeRange { min, max }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub field: FieldSpec,
    pub g: Poly,
    pub h: Poly,
    pub a_sizes: SizeRange,
    pub b_sizes: SizeRange,
    /// Only size pairs with `a * b` at most this are visited.
    pub max_product: Option<usize>,
    pub mode: SearchMode,
    pub sample_count: u64,
    pub seed: u64,
    pub parallelism: usize,
    pub budget: u64,
    /// Keep only this many lowest-slack records (all when `None`).
    pub keep: Option<usize>,
}

impl SearchConfig {
    pub fn new(field: &FieldSpec, g: Poly, h: Poly, a_sizes: SizeRange, b_sizes: SizeRange) -> Self {
        SearchConfig {
            field: field.clone(),
            g,
            h,
            a_sizes,
            b_sizes,
            max_product: None,
            mode: SearchMode::Exhaustive,
            sample_count: 10_000,
            seed: 0,
            parallelism: 1,
            budget: DEFAULT_BUDGET,
            keep: None,
        }
    }
}

/// One measured instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentRecord {
    pub field: String,
    pub g: String,
    pub h: String,
    pub a: usize,
    pub b: usize,
    pub image_size: u64,
    pub theorem_bound: u64,
    pub slack: i64,
    pub proved_threshold: Option<u64>,
    pub conjectured_threshold: Option<u64>,
    pub subfield_distance: Option<u64>,
    pub subfield_order: Option<u64>,
    #[serde(rename = "A")]
    pub a_set: Vec<FieldElem>,
    #[serde(rename = "B")]
    pub b_set: Vec<FieldElem>,
}

pub const CSV_HEADER: [&str; 14] = [
    "field",
    "g",
    "h",
    "a",
    "b",
    "image_size",
    "theorem_bound",
    "slack",
    "proved_threshold",
    "conjectured_threshold",
    "subfield_distance",
    "subfield_order",
    "A",
    "B",
];

/// Writes records as CSV. Element sets go in the last two columns,
/// space-separated in canonical order.
pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> csv::Result<()> {
    let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.field.clone(),
            r.g.clone(),
            r.h.clone(),
            r.a.to_string(),
            r.b.to_string(),
            r.image_size.to_string(),
            r.theorem_bound.to_string(),
            r.slack.to_string(),
            opt(r.proved_threshold),
            opt(r.conjectured_threshold),
            opt(r.subfield_distance),
            opt(r.subfield_order),
            render_set(&r.a_set, ' '),
            render_set(&r.b_set, ' '),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Sorted by slack, then lexicographically.
    pub records: Vec<ExperimentRecord>,
    pub pairs_examined: u64,
}

impl SearchOutcome {
    pub fn min_slack(&self) -> Option<&ExperimentRecord> {
        self.records.first()
    }
}

/// Sort key of a candidate; the derived order is the output order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    slack: i64,
    a: usize,
    b: usize,
    a_idx: Vec<u32>,
    b_idx: Vec<u32>,
    image_size: u64,
}

/// Per-worker accumulator: the best `keep` keys plus counters.
struct Tally {
    keep: Option<usize>,
    best: BinaryHeap<Key>,
    all: Vec<Key>,
    examined: u64,
    violation: Option<Key>,
}

impl Tally {
    fn new(keep: Option<usize>) -> Self {
        Tally {
            keep,
            best: BinaryHeap::new(),
            all: Vec::new(),
            examined: 0,
            violation: None,
        }
    }

    /// Cheap pre-check so that the index vectors are only built for
    /// candidates that can enter the kept set.
    fn wants(&self, slack: i64) -> bool {
        match self.keep {
            None => true,
            Some(0) => slack < 0,
            Some(n) => self.best.len() < n || self.best.peek().is_some_and(|worst| slack <= worst.slack),
        }
    }

    fn offer(&mut self, key: Key) {
        if key.slack < 0 && self.violation.as_ref().is_none_or(|v| key < *v) {
            self.violation = Some(key.clone());
        }
        match self.keep {
            None => self.all.push(key),
            Some(n) => {
                if self.best.len() < n {
                    self.best.push(key);
                } else if self.best.peek().is_some_and(|worst| key < *worst) {
                    self.best.pop();
                    self.best.push(key);
                }
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        if let Some(v) = other.violation {
            if self.violation.as_ref().is_none_or(|mine| v < *mine) {
                self.violation = Some(v);
            }
        }
        self.all.extend(other.all);
        for key in other.best {
            self.offer_kept(key);
        }
        self
    }

    fn offer_kept(&mut self, key: Key) {
        if let Some(n) = self.keep {
            if self.best.len() < n {
                self.best.push(key);
            } else if self.best.peek().is_some_and(|worst| key < *worst) {
                self.best.pop();
                self.best.push(key);
            }
        }
    }

    fn into_sorted(self) -> (Vec<Key>, u64, Option<Key>) {
        let mut keys = if self.keep.is_some() {
            self.best.into_vec()
        } else {
            self.all
        };
        keys.sort();
        (keys, self.examined, self.violation)
    }
}

/// Precomputed `x -> (y -> g(x) + y*h(x))` maps for the admissible `x`.
struct Evaluator {
    field: FieldSpec,
    q: usize,
    /// Indices of the elements `x` with `h(x) != 0`.
    pool: Vec<u32>,
    /// `rows[i][y] = index(g(x) + y h(x))` for `x = pool[i]`; filled when
    /// the field is small enough for a `q * q` table.
    rows: Option<Vec<Vec<u32>>>,
    gx: Vec<FieldElem>,
    hx: Vec<FieldElem>,
}

const ROW_TABLE_LIMIT: usize = 2048;

impl Evaluator {
    fn new(field: &FieldSpec, g: &Poly, h: &Poly) -> Self {
        let q = field.order() as usize;
        let elements = field.elements();
        let mut pool = Vec::new();
        let mut gx = Vec::new();
        let mut hx = Vec::new();
        for x in &elements {
            let hv = h.eval(x).expect("same field");
            if !hv.is_zero() {
                pool.push(x.index() as u32);
                gx.push(g.eval(x).expect("same field"));
                hx.push(hv);
            }
        }
        let rows = (q <= ROW_TABLE_LIMIT).then(|| {
            gx.iter()
                .zip(&hx)
                .map(|(g, h)| elements.iter().map(|y| (g + &(y * h)).index() as u32).collect())
                .collect()
        });
        Evaluator {
            field: field.clone(),
            q,
            pool,
            rows,
            gx,
            hx,
        }
    }

    /// `|f(A, B)|` with `A` given by positions in `pool` and `B` by element
    /// indices.
    fn image_size(&self, a_pos: &[u32], b_idx: &[u32], seen: &mut Vec<u64>) -> u64 {
        seen.clear();
        seen.resize(self.q.div_ceil(64), 0);
        let mut mark = |v: u32| seen[v as usize / 64] |= 1 << (v % 64);
        match &self.rows {
            Some(rows) => {
                for &i in a_pos {
                    let row = &rows[i as usize];
                    for &y in b_idx {
                        mark(row[y as usize]);
                    }
                }
            }
            None => {
                for &i in a_pos {
                    let (g, h) = (&self.gx[i as usize], &self.hx[i as usize]);
                    for &y in b_idx {
                        let y = self.field.from_index(y as u64);
                        mark((g + &(&y * h)).index() as u32);
                    }
                }
            }
        }
        seen.iter().map(|w| w.count_ones() as u64).sum()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// All `k`-subsets of `0..n` as sorted index vectors, lexicographically.
fn combinations(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<u32> = (0..k as u32).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < (n - k + i) as u32) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

struct SizePlan {
    a: usize,
    b: usize,
    bound: u64,
}

fn size_plan(config: &SearchConfig, pool: usize, q: usize) -> Result<Vec<SizePlan>, ExploreError> {
    let d = config
        .g
        .degree()
        .filter(|&d| config.h.degree().is_some_and(|dh| dh < d))
        .ok_or_else(|| ExploreError::InvalidConfig("need deg g > deg h and h != 0".into()))?;
    if config.a_sizes.min == 0 || config.b_sizes.min == 0 {
        return Err(ExploreError::InvalidConfig("set sizes start at 1".into()));
    }
    let ch = Characteristic::of(&config.field);
    let mut plan = Vec::new();
    for a in config.a_sizes.min..=config.a_sizes.max.min(pool) {
        for b in config.b_sizes.min..=config.b_sizes.max.min(q) {
            if config.max_product.is_some_and(|m| a * b > m) {
                continue;
            }
            let bound = theorem_bound(a as u64, b as u64, d as u64, ch)
                .expect("sizes are positive")
                .bound;
            plan.push(SizePlan { a, b, bound });
        }
    }
    Ok(plan)
}

/// Enumerates (exhaustive) or samples (random) the pairs `(A, B)` allowed by
/// `config`, measuring `|f(A, B)|` against the bound for each.
pub fn search_extremal(config: &SearchConfig) -> Result<SearchOutcome, ExploreError> {
    if !(config.field == *config.g.field() && config.field == *config.h.field()) {
        return Err(FieldError::FieldMismatch.into());
    }
    let evaluator = Evaluator::new(&config.field, &config.g, &config.h);
    let q = evaluator.q;
    let plan = size_plan(config, evaluator.pool.len(), q)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism.max(1))
        .build()?;
    let tally = pool.install(|| match config.mode {
        SearchMode::Exhaustive => {
            let pairs: u128 = plan
                .iter()
                .map(|s| binomial(evaluator.pool.len(), s.a) * binomial(q, s.b))
                .sum();
            if pairs > config.budget as u128 {
                return Err(ExploreError::BudgetExceeded {
                    pairs,
                    budget: config.budget,
                });
            }
            Ok(if q <= MASK_LIMIT {
                exhaustive_masks(&evaluator, &plan, config.keep)
            } else {
                exhaustive_general(&evaluator, &plan, config.keep)
            })
        }
        SearchMode::Random => Ok(random_search(&evaluator, &plan, config)),
    })?;

    let (keys, pairs_examined, violation) = tally.into_sorted();
    let elem = |i: u32| config.field.from_index(i as u64);
    let materialize_a = |k: &Key| k.a_idx.iter().map(|&i| elem(i)).collect::<Vec<_>>();
    let materialize_b = |k: &Key| k.b_idx.iter().map(|&i| elem(i)).collect::<Vec<_>>();
    if let Some(v) = violation {
        return Err(ExploreError::SoundnessViolation(Box::new(ViolationDump {
            field: config.field.to_string(),
            g: config.g.to_string(),
            h: config.h.to_string(),
            a_set: materialize_a(&v),
            b_set: materialize_b(&v),
            image_size: v.image_size,
            bound: (v.image_size as i64 - v.slack) as u64,
        })));
    }

    let subfields = Subfields::new(&config.field);
    let records = keys
        .iter()
        .map(|k| {
            let b_set = materialize_b(k);
            let (distance, order) = subfields.nearest(&k.b_idx);
            ExperimentRecord {
                field: config.field.to_string(),
                g: config.g.to_string(),
                h: config.h.to_string(),
                a: k.a,
                b: k.b,
                image_size: k.image_size,
                theorem_bound: (k.image_size as i64 - k.slack) as u64,
                slack: k.slack,
                proved_threshold: None,
                conjectured_threshold: None,
                subfield_distance: Some(distance),
                subfield_order: Some(order),
                a_set: materialize_a(k),
                b_set,
            }
        })
        .collect();
    Ok(SearchOutcome {
        records,
        pairs_examined,
    })
}

/// Fields up to this order use `u32` bitmasks for sets.
const MASK_LIMIT: usize = 16;

fn mask_combinations(bits: &[u32], k: usize) -> Vec<u32> {
    combinations(bits.len(), k)
        .into_iter()
        .map(|c| c.iter().fold(0u32, |m, &i| m | 1 << bits[i as usize]))
        .collect()
}

fn mask_to_indices(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// Small-field enumeration. For every admissible `x`, `line[x][B]` is the
/// bitmask of `{g(x) + y*h(x) : y in B}`; the image of `(A, B)` is the union
/// of the lines of the `x` in `A`.
fn exhaustive_masks(ev: &Evaluator, plan: &[SizePlan], keep: Option<usize>) -> Tally {
    let rows = ev.rows.as_ref().expect("small fields always have row tables");
    let q = ev.q;
    let pool_bits: Vec<u32> = ev.pool.clone();
    let all_bits: Vec<u32> = (0..q as u32).collect();

    let mut tally = Tally::new(keep);
    for size in plan {
        let a_masks = mask_combinations(&pool_bits, size.a);
        let b_masks = mask_combinations(&all_bits, size.b);
        let part = b_masks
            .par_iter()
            .fold(
                || Tally::new(keep),
                |mut t, &bm| {
                    let lines: Vec<u32> = rows
                        .iter()
                        .map(|row| {
                            let mut m = 0u32;
                            let mut rest = bm;
                            while rest != 0 {
                                let y = rest.trailing_zeros();
                                m |= 1 << row[y as usize];
                                rest &= rest - 1;
                            }
                            m
                        })
                        .collect();
                    // Element index -> position in `pool`.
                    let mut line_of = [0u32; MASK_LIMIT];
                    for (pos, &x) in pool_bits.iter().enumerate() {
                        line_of[x as usize] = lines[pos];
                    }
                    for &am in &a_masks {
                        let mut img = 0u32;
                        let mut rest = am;
                        while rest != 0 {
                            img |= line_of[rest.trailing_zeros() as usize];
                            rest &= rest - 1;
                        }
                        let image_size = img.count_ones() as u64;
                        let slack = image_size as i64 - size.bound as i64;
                        t.examined += 1;
                        if t.wants(slack) {
                            t.offer(Key {
                                slack,
                                a: size.a,
                                b: size.b,
                                a_idx: mask_to_indices(am),
                                b_idx: mask_to_indices(bm),
                                image_size,
                            });
                        }
                    }
                    t
                },
            )
            .reduce(|| Tally::new(keep), Tally::merge);
        tally = tally.merge(part);
    }
    tally
}

fn exhaustive_general(ev: &Evaluator, plan: &[SizePlan], keep: Option<usize>) -> Tally {
    let mut tally = Tally::new(keep);
    for size in plan {
        let a_combos = combinations(ev.pool.len(), size.a);
        let b_combos = combinations(ev.q, size.b);
        let part = b_combos
            .par_iter()
            .fold(
                || (Tally::new(keep), Vec::new()),
                |(mut t, mut seen), b_idx| {
                    for a_pos in &a_combos {
                        let image_size = ev.image_size(a_pos, b_idx, &mut seen);
                        let slack = image_size as i64 - size.bound as i64;
                        t.examined += 1;
                        if t.wants(slack) {
                            t.offer(Key {
                                slack,
                                a: size.a,
                                b: size.b,
                                a_idx: a_pos.iter().map(|&i| ev.pool[i as usize]).collect(),
                                b_idx: b_idx.clone(),
                                image_size,
                            });
                        }
                    }
                    (t, seen)
                },
            )
            .map(|(t, _)| t)
            .reduce(|| Tally::new(keep), Tally::merge);
        tally = tally.merge(part);
    }
    tally
}

/// Draws are generated sequentially from the seed and only evaluated in
/// parallel, so the worker count cannot change them. Each draw picks a size
/// pair uniformly from the plan, then `A` (among the admissible `x`) and `B`.
fn random_search(ev: &Evaluator, plan: &[SizePlan], config: &SearchConfig) -> Tally {
    let keep = config.keep;
    if plan.is_empty() {
        return Tally::new(keep);
    }
    let mut sampler = Sampler::new(config.seed);
    let draws: Vec<(usize, Vec<u32>, Vec<u32>)> = (0..config.sample_count)
        .map(|_| {
            let s = sampler.below(plan.len() as u64) as usize;
            let a_pos = sampler.subset(ev.pool.len(), plan[s].a);
            let b_idx = sampler.subset(ev.q, plan[s].b);
            (s, a_pos, b_idx)
        })
        .collect();
    draws
        .par_iter()
        .fold(
            || (Tally::new(keep), Vec::new()),
            |(mut t, mut seen), (s, a_pos, b_idx)| {
                let size = &plan[*s];
                let image_size = ev.image_size(a_pos, b_idx, &mut seen);
                let slack = image_size as i64 - size.bound as i64;
                t.examined += 1;
                if t.wants(slack) {
                    t.offer(Key {
                        slack,
                        a: size.a,
                        b: size.b,
                        a_idx: a_pos.iter().map(|&i| ev.pool[i as usize]).collect(),
                        b_idx: b_idx.clone(),
                        image_size,
                    });
                }
                (t, seen)
            },
        )
        .map(|(t, _)| t)
        .reduce(|| Tally::new(keep), Tally::merge)
}

/// Element-index sets of every subfield, largest first.
struct Subfields {
    fields: Vec<(u64, Vec<u32>)>,
}

impl Subfields {
    fn new(field: &FieldSpec) -> Self {
        let n = field.degree();
        let fields = (1..=n)
            .rev()
            .filter(|m| n.is_multiple_of(*m))
            .map(|m| {
                let elems = field.subfield_elements(m).expect("m divides n");
                let order = elems.len() as u64;
                (order, elems.iter().map(|e| e.index() as u32).collect())
            })
            .collect();
        Subfields { fields }
    }

    /// `(min |B xor S|, |S|)` over subfields `S`; ties go to the larger `S`.
    fn nearest(&self, b_idx: &[u32]) -> (u64, u64) {
        let mut best: Option<(u64, u64)> = None;
        for (order, elems) in &self.fields {
            let common = b_idx.iter().filter(|i| elems.binary_search(i).is_ok()).count() as u64;
            let distance = b_idx.len() as u64 + elems.len() as u64 - 2 * common;
            if best.is_none_or(|(d, _)| distance < d) {
                best = Some((distance, *order));
            }
        }
        best.expect("the field itself is a subfield")
    }
}

/// Symmetric-difference distance from `b_set` to the nearest subfield,
/// together with that subfield's order. Ties go to the larger subfield.
pub fn nearest_subfield_distance(b_set: &[FieldElem], field: &FieldSpec) -> (u64, u64) {
    let mut idx: Vec<u32> = b_set.iter().map(|e| e.index() as u32).collect();
    idx.sort_unstable();
    idx.dedup();
    Subfields::new(field).nearest(&idx)
}

/// How the extra element `theta` of `B = S + {theta}` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaChoice {
    /// Every element outside the subfield, in canonical order.
    All,
    /// `count` elements outside the subfield drawn from `seed`, reported in
    /// canonical order.
    Sample { count: usize, seed: u64 },
}

/// `floor((1 + C/2) p^m - 1)` and `floor((1 + C) p^m - 1)`.
pub fn remark_thresholds(c: Ratio<u64>, pm: u64) -> (u64, u64) {
    let proved = (Ratio::from_integer(1) + c / 2) * pm;
    let conjectured = (Ratio::from_integer(1) + c) * pm;
    (
        proved.floor().to_integer().saturating_sub(1),
        conjectured.floor().to_integer().saturating_sub(1),
    )
}

fn check_proper_divisor(field: &FieldSpec, m: usize) -> Result<(), ExploreError> {
    let n = field.degree();
    if m == 0 || m >= n || !n.is_multiple_of(m) {
        return Err(ExploreError::NotProperDivisor { m, n });
    }
    Ok(())
}

fn measure(instance: &ExpanderInstance) -> ExperimentRecord {
    let size = image(instance).len() as u64;
    let bound = instance.bound_report().bound;
    let (distance, order) = nearest_subfield_distance(instance.b_set(), instance.field());
    ExperimentRecord {
        field: instance.field().to_string(),
        g: instance.g().to_string(),
        h: instance.h().to_string(),
        a: instance.a_set().len(),
        b: instance.b_set().len(),
        image_size: size,
        theorem_bound: bound,
        slack: size as i64 - bound as i64,
        proved_threshold: None,
        conjectured_threshold: None,
        subfield_distance: Some(distance),
        subfield_order: Some(order),
        a_set: instance.a_set().to_vec(),
        b_set: instance.b_set().to_vec(),
    }
}

fn check_slack(record: &ExperimentRecord) -> Result<(), ExploreError> {
    if record.slack < 0 {
        return Err(ExploreError::SoundnessViolation(Box::new(ViolationDump {
            field: record.field.clone(),
            g: record.g.clone(),
            h: record.h.clone(),
            a_set: record.a_set.clone(),
            b_set: record.b_set.clone(),
            image_size: record.image_size,
            bound: record.theorem_bound,
        })));
    }
    Ok(())
}

fn build(
    field: &FieldSpec,
    g: &Poly,
    h: &Poly,
    a: Vec<FieldElem>,
    b: Vec<FieldElem>,
) -> Result<ExpanderInstance, ExploreError> {
    ExpanderInstance::new(field, g.clone(), h.clone(), a, b).map_err(|v| {
        let list: Vec<String> = v.iter().map(|v| v.to_string()).collect();
        ExploreError::InvalidConfig(list.join("; "))
    })
}

/// Measures `B = S + {theta}` for the subfield `S` of order `p^m` and `A`
/// the first `ceil(C p^m)` nonzero elements of `S` (canonical order) that
/// are not roots of `h`. When `S` runs short, `A` continues with the
/// elements outside `S` in canonical order. Each record carries the proved threshold
/// `floor((1 + C/2) p^m - 1)`, which is checked, and the conjectured
/// `floor((1 + C) p^m - 1)`, which is only reported.
pub fn subfield_experiment(
    field: &FieldSpec,
    m: usize,
    c_fraction: Ratio<u64>,
    g: &Poly,
    h: &Poly,
    theta: ThetaChoice,
    parallelism: usize,
) -> Result<Vec<ExperimentRecord>, ExploreError> {
    check_proper_divisor(field, m)?;
    if *c_fraction.numer() == 0 || c_fraction >= Ratio::from_integer(1) {
        return Err(ExploreError::InvalidConfig(format!(
            "C = {c_fraction} must lie strictly between 0 and 1"
        )));
    }
    let sub = field.subfield_elements(m)?;
    let pm = sub.len() as u64;
    let a_size = (c_fraction * pm).ceil().to_integer() as usize;
    let outside: Vec<FieldElem> = field
        .elements()
        .into_iter()
        .filter(|x| sub.binary_search(x).is_err())
        .collect();
    let mut a_set: Vec<FieldElem> = sub
        .iter()
        .chain(&outside)
        .filter(|x| !x.is_zero() && !h.eval(x).expect("same field").is_zero())
        .take(a_size)
        .cloned()
        .collect();
    if a_set.len() < a_size {
        return Err(ExploreError::InvalidConfig(format!(
            "the field has fewer than {a_size} usable nonzero elements"
        )));
    }
    a_set.sort();

    let thetas: Vec<FieldElem> = match theta {
        ThetaChoice::All => outside,
        ThetaChoice::Sample { count, seed } => Sampler::new(seed)
            .subset(outside.len(), count.min(outside.len()))
            .into_iter()
            .map(|i| outside[i as usize].clone())
            .collect(),
    };

    let (proved, conjectured) = remark_thresholds(c_fraction, pm);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()?;
    pool.install(|| {
        thetas
            .par_iter()
            .map(|t| {
                let mut b_set = sub.clone();
                b_set.push(t.clone());
                let instance = build(field, g, h, a_set.clone(), b_set)?;
                let mut record = measure(&instance);
                record.proved_threshold = Some(proved);
                record.conjectured_threshold = Some(conjectured);
                check_slack(&record)?;
                if record.image_size < proved {
                    return Err(ExploreError::RemarkViolation(Box::new(record)));
                }
                Ok(record)
            })
            .collect()
    })
}

/// The no-gain configuration `B = S`, `A = S \ {0}` (minus roots of `h`).
#[derive(Debug, Clone)]
pub struct BaselineOutcome {
    pub record: ExperimentRecord,
    pub image: Vec<FieldElem>,
    pub image_equals_b: bool,
}

pub fn subfield_baseline(field: &FieldSpec, m: usize, g: &Poly, h: &Poly) -> Result<BaselineOutcome, ExploreError> {
    check_proper_divisor(field, m)?;
    let sub = field.subfield_elements(m)?;
    let a_set: Vec<FieldElem> = sub
        .iter()
        .filter(|x| !x.is_zero() && !h.eval(x).expect("same field").is_zero())
        .cloned()
        .collect();
    let instance = build(field, g, h, a_set, sub.clone())?;
    let record = measure(&instance);
    check_slack(&record)?;
    let image = image(&instance);
    Ok(BaselineOutcome {
        image_equals_b: image == sub,
        record,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::image;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn combinations_in_lex_order() {
        let c = combinations(4, 2);
        assert_eq!(
            c,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<u32>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(binomial(13, 6), 1716);
    }

    #[test]
    fn evaluator_matches_direct_image() {
        let f = FieldSpec::extension(2, 3, None).unwrap();
        let g = Poly::parse(&f, "x^3+x").unwrap();
        let h = Poly::parse(&f, "x+1").unwrap();
        let ev = Evaluator::new(&f, &g, &h);
        let mut sampler = Sampler::new(3);
        let mut seen = Vec::new();
        for _ in 0..200 {
            let a_len = 1 + sampler.below(ev.pool.len() as u64) as usize;
            let b_len = 1 + sampler.below(8) as usize;
            let a_pos = sampler.subset(ev.pool.len(), a_len);
            let b_idx = sampler.subset(8, b_len);
            let a_set = a_pos
                .iter()
                .map(|&i| f.from_index(ev.pool[i as usize] as u64))
                .collect();
            let b_set = b_idx.iter().map(|&i| f.from_index(i as u64)).collect();
            let inst = ExpanderInstance::new(&f, g.clone(), h.clone(), a_set, b_set).unwrap();
            assert_eq!(ev.image_size(&a_pos, &b_idx, &mut seen), image(&inst).len() as u64);
        }
    }

    #[test]
    fn exhaustive_f5_pairs_of_two() {
        let f = fp(5);
        let config = SearchConfig::new(
            &f,
            Poly::parse(&f, "x^2").unwrap(),
            Poly::parse(&f, "x").unwrap(),
            SizeRange::exactly(2),
            SizeRange::exactly(2),
        );
        let out = search_extremal(&config).unwrap();
        // A from the 4 nonzero elements, B from all 5.
        assert_eq!(out.pairs_examined, 6 * 10);
        assert_eq!(out.records.len(), 60);
        assert!(out.records.iter().all(|r| r.slack >= 0));
        assert!(out.records.windows(2).all(|w| w[0].slack <= w[1].slack));
        // Cross-check every record against the direct image.
        for r in &out.records {
            let inst = ExpanderInstance::new(
                &f,
                Poly::parse(&f, "x^2").unwrap(),
                Poly::parse(&f, "x").unwrap(),
                r.a_set.clone(),
                r.b_set.clone(),
            )
            .unwrap();
            assert_eq!(image(&inst).len() as u64, r.image_size);
            assert_eq!(r.theorem_bound, 2);
        }
    }

    #[test]
    fn general_path_agrees_with_masks() {
        // F_17 is above the mask limit; compare against a direct recount.
        let f = fp(17);
        let g = Poly::parse(&f, "x^2").unwrap();
        let h = Poly::parse(&f, "x").unwrap();
        let mut config = SearchConfig::new(&f, g.clone(), h.clone(), SizeRange::exactly(2), SizeRange::exactly(2));
        config.keep = Some(5);
        let out = search_extremal(&config).unwrap();
        assert_eq!(out.pairs_examined, 120 * 136);
        assert_eq!(out.records.len(), 5);
        for r in &out.records {
            let inst = ExpanderInstance::new(&f, g.clone(), h.clone(), r.a_set.clone(), r.b_set.clone()).unwrap();
            assert_eq!(image(&inst).len() as u64, r.image_size);
        }
    }

    #[test]
    fn keep_selects_prefix_of_full_order() {
        let f = fp(7);
        let g = Poly::parse(&f, "x^3+x").unwrap();
        let h = Poly::parse(&f, "1").unwrap();
        let mut config = SearchConfig::new(&f, g, h, SizeRange::new(1, 3), SizeRange::new(1, 3));
        let full = search_extremal(&config).unwrap();
        config.keep = Some(17);
        config.parallelism = 3;
        let top = search_extremal(&config).unwrap();
        assert_eq!(top.records, full.records[..17]);
        assert_eq!(top.pairs_examined, full.pairs_examined);
    }

    #[test]
    fn random_mode_is_seeded() {
        let f = fp(11);
        let mut config = SearchConfig::new(
            &f,
            Poly::parse(&f, "x^2").unwrap(),
            Poly::parse(&f, "x+1").unwrap(),
            SizeRange::new(2, 5),
            SizeRange::new(2, 5),
        );
        config.mode = SearchMode::Random;
        config.sample_count = 300;
        config.seed = 42;
        let first = search_extremal(&config).unwrap();
        config.parallelism = 4;
        let second = search_extremal(&config).unwrap();
        assert_eq!(first.records, second.records);
        assert_eq!(first.pairs_examined, 300);
        config.seed = 43;
        assert_ne!(search_extremal(&config).unwrap().records, first.records);
    }

    #[test]
    fn budget_and_empty_cases() {
        let f = fp(13);
        let g = Poly::parse(&f, "x^2").unwrap();
        let h = Poly::parse(&f, "x").unwrap();
        let mut config = SearchConfig::new(&f, g, h, SizeRange::exactly(6), SizeRange::exactly(6));
        config.budget = 1000;
        assert!(matches!(
            search_extremal(&config),
            Err(ExploreError::BudgetExceeded { .. })
        ));

        // 13 elements but only 12 avoid the root of h.
        config.a_sizes = SizeRange::exactly(13);
        config.b_sizes = SizeRange::exactly(1);
        let out = search_extremal(&config).unwrap();
        assert!(out.records.is_empty());
    }

    #[test]
    fn thresholds() {
        assert_eq!(remark_thresholds(Ratio::new(1, 2), 3), (2, 3));
        assert_eq!(remark_thresholds(Ratio::new(1, 4), 5), (4, 5));
    }

    #[test]
    fn subfield_experiment_f9() {
        let f = FieldSpec::extension(3, 2, None).unwrap();
        let g = Poly::parse(&f, "x^2").unwrap();
        let h = Poly::parse(&f, "x").unwrap();
        let records = subfield_experiment(&f, 1, Ratio::new(1, 2), &g, &h, ThetaChoice::All, 1).unwrap();
        assert_eq!(records.len(), 6);
        let t = f.generator().unwrap();
        let with_t = records.iter().find(|r| r.b_set.contains(&t)).unwrap();
        assert_eq!(with_t.a_set, vec![f.from_int(1), f.from_int(2)]);
        assert_eq!(with_t.b, 4);
        assert_eq!(with_t.proved_threshold, Some(2));
        assert_eq!(with_t.conjectured_threshold, Some(3));
        assert_eq!(with_t.subfield_distance, Some(1));
        assert_eq!(with_t.subfield_order, Some(3));
        // x in {1, 2}: values x^2 + x*y over B = F_3 + {t}.
        let mut direct: Vec<FieldElem> = Vec::new();
        for x in &with_t.a_set {
            for y in &with_t.b_set {
                direct.push(&(x * x) + &(x * y));
            }
        }
        direct.sort();
        direct.dedup();
        assert_eq!(with_t.image_size, direct.len() as u64);

        assert!(matches!(
            subfield_experiment(&f, 2, Ratio::new(1, 2), &g, &h, ThetaChoice::All, 1),
            Err(ExploreError::NotProperDivisor { m: 2, n: 2 })
        ));
        let sampled = subfield_experiment(
            &f,
            1,
            Ratio::new(1, 2),
            &g,
            &h,
            ThetaChoice::Sample { count: 2, seed: 5 },
            2,
        )
        .unwrap();
        assert_eq!(sampled.len(), 2);
    }

    #[test]
    fn baseline_reproduces_subfield() {
        let f = FieldSpec::extension(3, 2, None).unwrap();
        let out = subfield_baseline(&f, 1, &Poly::parse(&f, "x^2").unwrap(), &Poly::parse(&f, "x").unwrap()).unwrap();
        assert!(out.image_equals_b);
        assert_eq!(out.record.image_size, 3);
        assert_eq!(out.record.subfield_distance, Some(0));
    }

    #[test]
    fn subfield_distances() {
        let f = FieldSpec::extension(3, 2, None).unwrap();
        let f3 = f.subfield_elements(1).unwrap();
        assert_eq!(nearest_subfield_distance(&f3, &f), (0, 3));
        let mut b = f3.clone();
        b.push(f.generator().unwrap());
        assert_eq!(nearest_subfield_distance(&b, &f), (1, 3));
        assert_eq!(nearest_subfield_distance(&[f.generator().unwrap()], &f), (4, 3));
        // Equidistant from F_3 and F_9 would go to F_9; here a 6-element set
        // containing F_3 is 3 from both.
        let six: Vec<_> = f.elements().into_iter().take(6).collect();
        assert_eq!(nearest_subfield_distance(&six, &f), (3, 9));
    }

    #[test]
    fn csv_layout() {
        let f = FieldSpec::extension(3, 2, None).unwrap();
        let out = subfield_baseline(&f, 1, &Poly::parse(&f, "x^2").unwrap(), &Poly::parse(&f, "x").unwrap()).unwrap();
        let mut buf = Vec::new();
        write_csv(&[out.record], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "3^2/t^2+1,x^2,x,2,3,3,3,0,,,0,3,1 2,0 1 2");
    }
}
