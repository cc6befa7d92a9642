//! Command-line front end.
//!
//! Every option can also come from a flat TOML file passed with `--config`;
//! keys mirror the long flag names with `-` replaced by `_` (`field`, `g`,
//! `A`, `max_product`, ...) plus an optional `subcommand` key. Flags win
//! over the file. Exit codes: 0 success, 1 failed internal identity (a bug),
//! 2 usage or validation error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, ValueEnum};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bound::{check_instance, image, theorem_bound, Characteristic, InstanceCandidate};
use crate::certificate::build_certificate;
use crate::explore::{
    search_extremal, subfield_baseline, subfield_experiment, write_csv, ExperimentRecord, SearchConfig, SearchMode,
    SizeRange, ThetaChoice, DEFAULT_BUDGET,
};
use crate::field::{FieldElem, FieldSpec};
use crate::poly::Poly;
use crate::sampling::Sampler;
use crate::selftest;

pub const BUDGET_ENV: &str = "EXPANDER_LAB_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subcommand {
    Bound,
    Image,
    Certify,
    Search,
    Subfield,
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

/// Options shared by every subcommand, as flags or config-file keys.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[arg(skip)]
    pub subcommand: Option<Subcommand>,
    /// Field: `p`, `p^n`, `p^n/modulus`, or `inf` (bound only).
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub g: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    /// |A|: a number, or a range `lo..hi` for search.
    #[arg(long)]
    pub a: Option<String>,
    /// |B|: a number, or a range `lo..hi` for search.
    #[arg(long)]
    pub b: Option<String>,
    #[arg(long)]
    pub d: Option<u64>,
    /// Elements of A: `1,2,3`, an index range `0..4`, `all`, or `subfield:m`.
    #[arg(long = "A")]
    #[serde(rename = "A")]
    pub a_set: Option<String>,
    #[arg(long = "B")]
    #[serde(rename = "B")]
    pub b_set: Option<String>,
    #[arg(long = "C")]
    #[serde(rename = "C")]
    pub c_set: Option<String>,
    #[arg(long)]
    pub k: Option<u64>,
    /// Subfield degree for `subfield`.
    #[arg(long)]
    pub m: Option<usize>,
    /// The fraction C of the subfield experiment, e.g. `1/2`.
    #[arg(long = "c-fraction")]
    pub c_fraction: Option<String>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, alias = "workers")]
    pub parallelism: Option<usize>,
    /// Keep only the N lowest-slack records.
    #[arg(long)]
    pub keep: Option<usize>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long = "max-product")]
    pub max_product: Option<usize>,
    /// Sample this many extra elements theta instead of sweeping all.
    #[arg(long = "theta-samples")]
    pub theta_samples: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

macro_rules! merge_fields {
    ($flags:expr, $file:expr, $($f:ident),*) => {
        RunConfig { $($f: $flags.$f.or($file.$f)),* }
    };
}

impl RunConfig {
    /// Flags take precedence over file values.
    pub fn merged(self, file: RunConfig) -> RunConfig {
        merge_fields!(
            self,
            file,
            subcommand,
            field,
            g,
            h,
            a,
            b,
            d,
            a_set,
            b_set,
            c_set,
            k,
            m,
            c_fraction,
            mode,
            samples,
            seed,
            parallelism,
            keep,
            budget,
            max_product,
            theta_samples,
            format,
            output
        )
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "expander-lab",
    version,
    about = "Lower bounds and certificates for |{g(x) + y*h(x)}| over finite fields"
)]
struct Cli {
    /// What to run; may instead come from the config file.
    #[arg(value_enum)]
    command: Option<Subcommand>,
    /// Flat TOML file with default option values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    options: RunConfig,
}

/// An error with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

/// Parses `args` and runs the subcommand, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn load_config(path: &Path) -> CliResult<RunConfig> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| usage(format!("bad config {}: {e}", path.display())))
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let file = match &cli.config {
        Some(path) => load_config(path)?,
        None => RunConfig::default(),
    };
    let mut flags = cli.options;
    flags.subcommand = cli.command;
    if let (Some(a), Some(b)) = (flags.subcommand, file.subcommand) {
        if a != b {
            return Err(usage(format!(
                "subcommand {a:?} conflicts with {b:?} in the config file"
            )));
        }
    }
    let config = flags.merged(file);
    let command = config
        .subcommand
        .ok_or_else(|| usage("no subcommand given (bound, image, certify, search, subfield, selftest)"))?;
    reject_unused(command, &config)?;

    let mut out = Vec::new();
    let code = match command {
        Subcommand::Bound => cmd_bound(&config, &mut out)?,
        Subcommand::Image => cmd_image(&config, &mut out)?,
        Subcommand::Certify => cmd_certify(&config, &mut out, stderr)?,
        Subcommand::Search => cmd_search(&config, &mut out, stderr)?,
        Subcommand::Subfield => cmd_subfield(&config, &mut out, stderr)?,
        Subcommand::Selftest => cmd_selftest(&config, &mut out)?,
    };
    match &config.output {
        Some(path) => fs::write(path, &out).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => stdout.write_all(&out).map_err(|e| usage(e.to_string()))?,
    }
    Ok(code)
}

/// Options that make no sense for `command` are rejected rather than ignored.
fn reject_unused(command: Subcommand, c: &RunConfig) -> CliResult<()> {
    let given: Vec<(&str, bool)> = vec![
        ("field", c.field.is_some()),
        ("g", c.g.is_some()),
        ("h", c.h.is_some()),
        ("a", c.a.is_some()),
        ("b", c.b.is_some()),
        ("d", c.d.is_some()),
        ("A", c.a_set.is_some()),
        ("B", c.b_set.is_some()),
        ("C", c.c_set.is_some()),
        ("k", c.k.is_some()),
        ("m", c.m.is_some()),
        ("c-fraction", c.c_fraction.is_some()),
        ("mode", c.mode.is_some()),
        ("samples", c.samples.is_some()),
        ("seed", c.seed.is_some()),
        ("parallelism", c.parallelism.is_some()),
        ("keep", c.keep.is_some()),
        ("budget", c.budget.is_some()),
        ("max-product", c.max_product.is_some()),
        ("theta-samples", c.theta_samples.is_some()),
    ];
    let allowed: &[&str] = match command {
        Subcommand::Bound => &["field", "g", "h", "a", "b", "d"],
        Subcommand::Image => &["field", "g", "h", "A", "B"],
        Subcommand::Certify => &["field", "g", "h", "A", "B", "C", "k", "seed"],
        Subcommand::Search => &[
            "field",
            "g",
            "h",
            "a",
            "b",
            "mode",
            "samples",
            "seed",
            "parallelism",
            "keep",
            "budget",
            "max-product",
        ],
        Subcommand::Subfield => &[
            "field",
            "g",
            "h",
            "m",
            "c-fraction",
            "seed",
            "parallelism",
            "theta-samples",
        ],
        Subcommand::Selftest => &["seed"],
    };
    let unused: Vec<&str> = given
        .iter()
        .filter(|(name, set)| *set && !allowed.contains(name))
        .map(|(name, _)| *name)
        .collect();
    if !unused.is_empty() {
        return Err(usage(format!(
            "option(s) not used by {command:?}: --{}",
            unused.join(", --")
        )));
    }
    if command == Subcommand::Certify && c.k.is_some() && c.c_set.is_some() {
        return Err(usage("--k and --C are mutually exclusive"));
    }
    if command == Subcommand::Bound && c.d.is_some() && (c.g.is_some() || c.h.is_some()) {
        return Err(usage("--d and --g/--h are mutually exclusive"));
    }
    Ok(())
}

fn required<'a, T>(value: &'a Option<T>, name: &str) -> CliResult<&'a T> {
    value.as_ref().ok_or_else(|| usage(format!("missing --{name}")))
}

fn parse_field(c: &RunConfig) -> CliResult<FieldSpec> {
    required(&c.field, "field")?.parse().map_err(|e| usage(format!("{e}")))
}

fn parse_poly(field: &FieldSpec, value: &Option<String>, name: &str) -> CliResult<Poly> {
    Poly::parse(field, required(value, name)?).map_err(|e| usage(format!("--{name}: {e}")))
}

/// `1,2,t+1`, an inclusive index range `lo..hi`, `all`, or `subfield:m`.
pub fn parse_element_list(field: &FieldSpec, input: &str) -> Result<Vec<FieldElem>, String> {
    let input = input.trim();
    if input == "all" {
        return Ok(field.elements());
    }
    if let Some(m) = input.strip_prefix("subfield:") {
        let m: usize = m.trim().parse().map_err(|_| format!("bad subfield degree {m:?}"))?;
        return field.subfield_elements(m).map_err(|e| e.to_string());
    }
    if let Some((lo, hi)) = input.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
        if lo > hi || hi >= field.order() {
            return Err(format!("range {lo}..{hi} is outside 0..{}", field.order() - 1));
        }
        return Ok((lo..=hi).map(|i| field.from_index(i)).collect());
    }
    input
        .split(',')
        .map(|s| field.parse_element(s).map_err(|e| e.to_string()))
        .collect()
}

fn parse_set(field: &FieldSpec, value: &Option<String>, name: &str) -> CliResult<Vec<FieldElem>> {
    parse_element_list(field, required(value, name)?).map_err(|e| usage(format!("--{name}: {e}")))
}

fn parse_sizes(value: &str, name: &str) -> CliResult<SizeRange> {
    let bad = || usage(format!("--{name}: expected a size or a range lo..hi, got {value:?}"));
    match value.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok(SizeRange::new(lo, hi))
        }
        None => value.trim().parse().map(SizeRange::exactly).map_err(|_| bad()),
    }
}

fn parse_size(value: &Option<String>, name: &str) -> CliResult<u64> {
    let v = required(value, name)?;
    v.trim()
        .parse()
        .map_err(|_| usage(format!("--{name}: expected a positive integer, got {v:?}")))
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_bound(c: &RunConfig, out: &mut Vec<u8>) -> CliResult<i32> {
    let field_text = required(&c.field, "field")?;
    let a = parse_size(&c.a, "a")?;
    let b = parse_size(&c.b, "b")?;
    let (ch, d) = if c.g.is_some() || c.h.is_some() {
        let field: FieldSpec = field_text.parse().map_err(|e| usage(format!("{e}")))?;
        let g = parse_poly(&field, &c.g, "g")?;
        let h = parse_poly(&field, &c.h, "h")?;
        match (g.degree(), h.degree()) {
            (Some(dg), Some(dh)) if dg > dh => (Characteristic::of(&field), dg as u64),
            _ => return Err(usage(format!("need deg g > deg h with h != 0 (g = {g}, h = {h})"))),
        }
    } else {
        let ch = match field_text.trim() {
            "inf" | "infinity" | "0" => Characteristic::Zero,
            _ => {
                let field: FieldSpec = field_text.parse().map_err(|e| usage(format!("{e}")))?;
                Characteristic::of(&field)
            }
        };
        (ch, *required(&c.d, "d")?)
    };
    let report = theorem_bound(a, b, d, ch).map_err(|e| usage(e.to_string()))?;
    let text = match c.format.unwrap_or(Format::Json) {
        Format::Json => json_line(&report),
        Format::Csv => {
            let best = report.best_k.map(|k| k.to_string()).unwrap_or_default();
            format!(
                "a,b,d,characteristic,k_max_range,admissible_k,best_k,bound,fallback\n{},{},{},{},{},{},{},{},{}\n",
                report.a,
                report.b,
                report.d,
                report.characteristic,
                report.k_max_range,
                render_list(&report.admissible_k),
                best,
                report.bound,
                report.fallback
            )
        }
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "a = {}, b = {}, d = {}, characteristic = {}",
                a, b, d, report.characteristic
            );
            let _ = writeln!(s, "k range: [{}, {}]", b - 1, report.k_max_range);
            let _ = writeln!(s, "admissible k: {}", render_list(&report.admissible_k));
            let _ = writeln!(
                s,
                "bound: |f(A,B)| >= {}{}",
                report.bound,
                if report.fallback { " (trivial)" } else { "" }
            );
            s
        }
    };
    out.extend_from_slice(text.as_bytes());
    Ok(0)
}

fn build_instance(c: &RunConfig) -> CliResult<crate::bound::ExpanderInstance> {
    let field = parse_field(c)?;
    let candidate = InstanceCandidate {
        g: parse_poly(&field, &c.g, "g")?,
        h: parse_poly(&field, &c.h, "h")?,
        a: parse_set(&field, &c.a_set, "A")?,
        b: parse_set(&field, &c.b_set, "B")?,
        field,
    };
    check_instance(candidate).map_err(|violations| {
        let lines: Vec<String> = violations.iter().map(|v| format!("  - {v}")).collect();
        usage(format!("hypotheses violated:\n{}", lines.join("\n")))
    })
}

#[derive(Serialize)]
struct ImageReport<'a> {
    field: String,
    g: String,
    h: String,
    #[serde(rename = "A")]
    a: &'a [FieldElem],
    #[serde(rename = "B")]
    b: &'a [FieldElem],
    image: &'a [FieldElem],
    size: usize,
    bound: u64,
    slack: i64,
}

fn cmd_image(c: &RunConfig, out: &mut Vec<u8>) -> CliResult<i32> {
    let instance = build_instance(c)?;
    let img = image(&instance);
    let bound = instance.bound_report().bound;
    let slack = img.len() as i64 - bound as i64;
    let text = match c.format.unwrap_or(Format::Plain) {
        Format::Json => json_line(&ImageReport {
            field: instance.field().to_string(),
            g: instance.g().to_string(),
            h: instance.h().to_string(),
            a: instance.a_set(),
            b: instance.b_set(),
            image: &img,
            size: img.len(),
            bound,
            slack,
        }),
        Format::Csv => format!(
            "field,g,h,A,B,image,size,bound,slack\n{},{},{},{},{},{},{},{},{}\n",
            instance.field(),
            instance.g(),
            instance.h(),
            render_list(instance.a_set()),
            render_list(instance.b_set()),
            render_list(&img),
            img.len(),
            bound,
            slack
        ),
        Format::Plain => {
            let marker = if slack > 0 { "  <-- image exceeds the bound" } else { "" };
            format!(
                "image: {}\nsize: {}\nbound: {}\nslack: {}{}\n",
                render_list(&img),
                img.len(),
                bound,
                slack,
                marker
            )
        }
    };
    out.extend_from_slice(text.as_bytes());
    Ok(0)
}

fn cmd_certify(c: &RunConfig, out: &mut Vec<u8>, stderr: &mut dyn Write) -> CliResult<i32> {
    let instance = build_instance(c)?;
    let c_set = match (&c.c_set, c.k) {
        (Some(list), None) => parse_element_list(instance.field(), list).map_err(|e| usage(format!("--C: {e}")))?,
        (None, Some(k)) => {
            crate::certificate::check_admissible(&instance, k).map_err(|e| usage(e.to_string()))?;
            let all = instance.field().elements();
            if k as usize > all.len() {
                return Err(usage(format!("k = {k} exceeds the field order {}", all.len())));
            }
            Sampler::new(c.seed.unwrap_or(0))
                .subset(all.len(), k as usize)
                .into_iter()
                .map(|i| all[i as usize].clone())
                .collect()
        }
        _ => return Err(usage("give exactly one of --k or --C")),
    };
    let cert = build_certificate(&instance, &c_set).map_err(|e| usage(e.to_string()))?;
    let passed = cert.identity_holds();
    let verdict = if passed {
        format!("PASS: pointwise = predicted = {}", cert.predicted)
    } else {
        format!("FAIL: pointwise {} != predicted {}", cert.pointwise, cert.predicted)
    };
    match c.format.unwrap_or(Format::Json) {
        Format::Plain => {
            let mut s = String::new();
            let _ = writeln!(s, "C: {}", render_list(&cert.c));
            let _ = writeln!(s, "k: {}, target degree: {}", cert.k, cert.target_degree);
            let _ = writeln!(s, "predicted: {}", cert.predicted);
            let _ = writeln!(s, "pointwise: {}", cert.pointwise);
            let _ = writeln!(s, "{verdict}");
            out.extend_from_slice(s.as_bytes());
        }
        Format::Json => {
            out.extend_from_slice(json_line(&cert).as_bytes());
            let _ = writeln!(stderr, "{verdict}");
        }
        Format::Csv => return Err(usage("certify supports --format json or plain")),
    }
    Ok(if passed { 0 } else { 1 })
}

fn emit_records(records: &[ExperimentRecord], format: Format, out: &mut Vec<u8>) -> CliResult<()> {
    match format {
        Format::Csv => write_csv(records, &mut *out).map_err(|e| usage(e.to_string())),
        Format::Json => {
            out.extend_from_slice(json_line(&records).as_bytes());
            Ok(())
        }
        Format::Plain => {
            for r in records {
                let _ = writeln!(
                    out,
                    "a={} b={} |f(A,B)|={} bound={} slack={} A=[{}] B=[{}]",
                    r.a,
                    r.b,
                    r.image_size,
                    r.theorem_bound,
                    r.slack,
                    render_list(&r.a_set),
                    render_list(&r.b_set)
                );
            }
            Ok(())
        }
    }
}

fn budget(c: &RunConfig) -> CliResult<u64> {
    if let Some(b) = c.budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{BUDGET_ENV}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn cmd_search(c: &RunConfig, out: &mut Vec<u8>, stderr: &mut dyn Write) -> CliResult<i32> {
    let field = parse_field(c)?;
    let g = parse_poly(&field, &c.g, "g")?;
    let h = parse_poly(&field, &c.h, "h")?;
    let a_sizes = parse_sizes(required(&c.a, "a")?, "a")?;
    let b_sizes = parse_sizes(required(&c.b, "b")?, "b")?;
    let mut config = SearchConfig::new(&field, g, h, a_sizes, b_sizes);
    config.mode = match c.mode.unwrap_or(Mode::Exhaustive) {
        Mode::Exhaustive => SearchMode::Exhaustive,
        Mode::Random => SearchMode::Random,
    };
    if let Some(n) = c.samples {
        config.sample_count = n;
    }
    config.seed = c.seed.unwrap_or(0);
    config.parallelism = c.parallelism.unwrap_or(1);
    config.keep = c.keep;
    config.max_product = c.max_product;
    config.budget = budget(c)?;

    let outcome = match search_extremal(&config) {
        Ok(o) => o,
        Err(e @ crate::explore::ExploreError::SoundnessViolation(_)) => {
            let _ = writeln!(stderr, "{e}");
            return Ok(1);
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    emit_records(&outcome.records, c.format.unwrap_or(Format::Csv), out)?;
    match outcome.min_slack() {
        Some(r) => {
            let _ = writeln!(
                stderr,
                "examined {} pairs; min slack {} at A=[{}] B=[{}] (|f(A,B)| = {}, bound {})",
                outcome.pairs_examined,
                r.slack,
                render_list(&r.a_set),
                render_list(&r.b_set),
                r.image_size,
                r.theorem_bound
            );
        }
        None => {
            let _ = writeln!(stderr, "examined {} pairs; no valid (A, B)", outcome.pairs_examined);
        }
    }
    Ok(0)
}

fn cmd_subfield(c: &RunConfig, out: &mut Vec<u8>, stderr: &mut dyn Write) -> CliResult<i32> {
    let field = parse_field(c)?;
    let g = parse_poly(&field, &c.g, "g")?;
    let h = parse_poly(&field, &c.h, "h")?;
    let m = *required(&c.m, "m")?;
    let frac_text = required(&c.c_fraction, "c-fraction")?;
    let fraction: Ratio<u64> = frac_text
        .trim()
        .parse()
        .map_err(|_| usage(format!("--c-fraction: expected a fraction like 1/2, got {frac_text:?}")))?;
    let theta = match c.theta_samples {
        Some(count) => ThetaChoice::Sample {
            count,
            seed: c.seed.unwrap_or(0),
        },
        None => ThetaChoice::All,
    };
    let parallelism = c.parallelism.unwrap_or(1);
    let records = match subfield_experiment(&field, m, fraction, &g, &h, theta, parallelism) {
        Ok(r) => r,
        Err(e @ crate::explore::ExploreError::SoundnessViolation(_)) => {
            let _ = writeln!(stderr, "{e}");
            return Ok(1);
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    let baseline = subfield_baseline(&field, m, &g, &h).map_err(|e| usage(e.to_string()))?;
    emit_records(&records, c.format.unwrap_or(Format::Csv), out)?;
    let _ = writeln!(
        stderr,
        "baseline B = subfield of order {}: |f(A,B)| = {}, f(A,B) = B: {}",
        baseline.record.b, baseline.record.image_size, baseline.image_equals_b
    );
    if let Some(min) = records.iter().min_by_key(|r| r.image_size) {
        let _ = writeln!(
            stderr,
            "{} records; smallest |f(A,B)| = {} (proved >= {}, conjectured {}; observation only)",
            records.len(),
            min.image_size,
            min.proved_threshold.unwrap_or(0),
            min.conjectured_threshold.unwrap_or(0)
        );
    }
    Ok(0)
}

fn cmd_selftest(c: &RunConfig, out: &mut Vec<u8>) -> CliResult<i32> {
    let results = selftest::run(c.seed.unwrap_or(0));
    for r in &results {
        let _ = writeln!(out, "{r}");
    }
    Ok(if results.iter().all(|r| r.passed()) { 0 } else { 1 })
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["expander-lab"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn element_lists() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(parse_element_list(&f, "0..4").unwrap(), f.elements());
        assert_eq!(parse_element_list(&f, "all").unwrap(), f.elements());
        assert_eq!(
            parse_element_list(&f, " 1, 3 ").unwrap(),
            vec![f.from_int(1), f.from_int(3)]
        );
        assert!(parse_element_list(&f, "0..5").is_err());
        let f9 = FieldSpec::extension(3, 2, None).unwrap();
        assert_eq!(parse_element_list(&f9, "subfield:1").unwrap().len(), 3);
        assert_eq!(parse_element_list(&f9, "t,2*t+1").unwrap()[1].coeffs(), &[1, 2]);
    }

    #[test]
    fn sizes() {
        assert_eq!(parse_sizes("3", "a").unwrap(), SizeRange::exactly(3));
        assert_eq!(parse_sizes("2..5", "a").unwrap(), SizeRange::new(2, 5));
        assert!(parse_sizes("5..2", "a").is_err());
        assert!(parse_sizes("x", "a").is_err());
    }

    #[test]
    fn bound_examples() {
        let (code, out, _) = run_args(&["bound", "--field", "13", "--a", "6", "--b", "4", "--d", "2"]);
        assert_eq!(code, 0);
        let json: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(json["bound"], 6);

        let (code, out, _) = run_args(&["bound", "--field", "inf", "--a", "1", "--b", "5", "--d", "3"]);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["bound"], 5);

        let (code, _, err) = run_args(&["bound", "--field", "4", "--a", "1", "--b", "5", "--d", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("not prime"), "{err}");

        let (code, out, _) = run_args(&[
            "bound", "--field", "5", "--g", "x^2", "--h", "x", "--a", "4", "--b", "3",
        ]);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["bound"], 4);
    }

    #[test]
    fn conflicting_and_unused_options() {
        let (code, _, err) = run_args(&["bound", "--field", "5", "--a", "1", "--b", "1", "--d", "1", "--k", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("--k"));
        let (code, _, _) = run_args(&[
            "certify", "--field", "5", "--g", "x^2", "--h", "x", "--A", "1,2,3,4", "--B", "0,1,2", "--k", "3", "--C",
            "0,1,4",
        ]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["--field", "5"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["bogus"]);
        assert_eq!(code, 2);
    }
}
