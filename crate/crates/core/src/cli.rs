//! Command-line front end. [`run`] is the whole program; the binary only wires
//! it to the process streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebraics::Tolerance;
use crate::analysis::{
    asymptotics, bounds_report, conjecture_scan, kronecker_bounds, kronecker_coeffs, mult_curve,
    multiplicity, t_range, CharacterScan,
};
use crate::error::{Error, Result};
use crate::group::{check_class_function, enumerate_generator_set, load_generators, DEFAULT_CAP};
use crate::spectrum::{incidence_numbers, value_levels, MultiplicityProfile, Spectrum};
use crate::table::{load_table, trivial_on_kernel, validate_table, CharacterTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const GRAMMAR: &str = "\
usage:
  charratio validate   <TABLE> [--group <GENFILE>]
  charratio spectrum   <TABLE> --char <X>
  charratio bounds     <TABLE> --char <X> --t <T>
  charratio mult       <TABLE> --char <X> --target <Y> --t <T>
  charratio curve      <TABLE> --char <X> --target <Y> --t-range <A:B:S> [--format csv]
  charratio kron       <TABLE> --char <X>
  charratio asym       <TABLE> --char <X>
  charratio conjecture <TABLE>
options:
  --tol <EPS>          absolute and relative comparison tolerance
  --int-tol <EPS>      integrality tolerance
  --format text|csv    output format (csv: spectrum, mult, curve, kron)
  <TABLE> and <GENFILE> may be '-' for standard input
  <X>, <Y> are character names or 0-based row indices
";

#[derive(Debug, Parser)]
#[command(
    name = "charratio",
    version,
    about = "Character ratio spectra, bounds and multiplicity curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_name = "EPS")]
    pub tol: Option<f64>,
    #[arg(long = "int-tol", global = true, value_name = "EPS")]
    pub int_tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct CharArgs {
    /// Character table (TOML or JSON), or '-'
    pub table: String,
    #[arg(long = "char", value_name = "X")]
    pub chi: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the table's consistency, optionally against an enumerated permutation group
    Validate {
        table: String,
        #[arg(long, value_name = "GENFILE")]
        group: Option<String>,
    },
    /// Level spectrum of a character
    Spectrum(CharArgs),
    /// Bounds on the largest nontrivial character value
    Bounds {
        #[command(flatten)]
        args: CharArgs,
        #[arg(long)]
        t: f64,
    },
    /// Multiplicity of one character in |χ|^t
    Mult {
        #[command(flatten)]
        args: CharArgs,
        #[arg(long, value_name = "Y")]
        target: String,
        #[arg(long)]
        t: f64,
    },
    /// Normalised multiplicity sampled over a range of exponents
    Curve {
        #[command(flatten)]
        args: CharArgs,
        #[arg(long, value_name = "Y")]
        target: String,
        #[arg(long = "t-range", value_name = "A:B:S")]
        t_range: TRange,
    },
    /// Kronecker coefficients of χ ⊗ χ̄ and the bounds they imply
    Kron(CharArgs),
    /// Large-t limits and rates
    Asym(CharArgs),
    /// Scan every character pair for a nonzero incidence below the last level
    Conjecture { table: String },
}

/// `start:stop:step` with `step > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FromStr for TRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(format!("expected A:B:S, got {s:?}"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
        let range = TRange {
            start: num(start)?,
            stop: num(stop)?,
            step: num(step)?,
        };
        if !(range.step > 0.0) {
            return Err("step must be positive".into());
        }
        if !(range.start >= 0.0) || !(range.stop >= range.start) || !range.stop.is_finite() {
            return Err("need 0 <= A <= B".into());
        }
        Ok(range)
    }
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Selector(msg) => Failure::Usage(msg),
            other => Failure::Failed(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

/// Parses `args` (including the program name) and executes one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(stderr, "{}\n{GRAMMAR}", e.render());
            return EXIT_USAGE;
        }
    };
    match execute(&cli, stdin) {
        Ok((out, passed)) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return EXIT_FAILURE;
            }
            if passed {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = write!(stderr, "error: {msg}\n\n{GRAMMAR}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn tolerance(cli: &Cli) -> std::result::Result<Tolerance, Failure> {
    let d = Tolerance::default();
    let eps = cli.tol.unwrap_or(d.abs_eps);
    let rel = cli.tol.unwrap_or(d.rel_eps);
    Tolerance::new(eps, rel, cli.int_tol.unwrap_or(d.integrality_eps))
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    let read = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Format(format!("{path}: {e}")))?;
    Ok(text)
}

fn reject_csv(cli: &Cli, name: &str) -> std::result::Result<(), Failure> {
    if cli.format == Format::Csv {
        Err(Failure::Usage(format!("{name} has no csv output")))
    } else {
        Ok(())
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let tol = tolerance(cli)?;
    let csv = cli.format == Format::Csv;
    match &cli.command {
        Command::Validate { table, group } => {
            reject_csv(cli, "validate")?;
            if table == "-" && group.as_deref() == Some("-") {
                return Err(Failure::Usage(
                    "only one input may be read from stdin".into(),
                ));
            }
            let ct = load_table(&read_input(table, stdin)?)?;
            let gens = match group {
                Some(path) => Some(load_generators(&read_input(path, stdin)?)?),
                None => None,
            };
            validate(&ct, gens, &tol)
        }
        Command::Spectrum(a) => {
            let (ct, spec) = load_spectrum(a, stdin, &tol)?;
            Ok((
                if csv {
                    spectrum_csv(&ct, &spec)
                } else {
                    spectrum_text(&ct, &spec, &tol)?
                },
                true,
            ))
        }
        Command::Bounds { args, t } => {
            reject_csv(cli, "bounds")?;
            let (ct, spec) = load_spectrum(args, stdin, &tol)?;
            Ok((bounds_text(&ct, &spec, *t, &tol)?, true))
        }
        Command::Mult { args, target, t } => {
            let (ct, spec) = load_spectrum(args, stdin, &tol)?;
            let profile = load_profile(&ct, &spec, target, &tol)?;
            let m = multiplicity(&ct, &spec, &profile, *t, &tol)?;
            let raw = m
                .raw
                .map_or_else(|| "inf".to_string(), |r| format!("{r:?}"));
            let out = if csv {
                format!("t,normalized,raw\n{:?},{:?},{raw}\n", m.t, m.normalized)
            } else {
                let mut s = header(&ct, &spec);
                let _ = writeln!(
                    s,
                    "target {} (n_i = {})",
                    ct.character(profile.target_index).name,
                    profile.target_dim
                );
                let _ = writeln!(s, "t = {:?}", m.t);
                let _ = writeln!(s, "a_(i,t) / n^t = {:.12}", m.normalized);
                let _ = writeln!(s, "a_(i,t)       = {raw}");
                let _ = writeln!(s, "ln |a_(i,t)|  = {:.12}", m.ln_abs_raw);
                s
            };
            Ok((out, true))
        }
        Command::Curve {
            args,
            target,
            t_range: r,
        } => {
            let (ct, spec) = load_spectrum(args, stdin, &tol)?;
            let profile = load_profile(&ct, &spec, target, &tol)?;
            let grid = t_range(r.start, r.stop, r.step)?;
            let curve = mult_curve(&ct, &spec, &profile, &grid, &tol)?;
            if csv {
                return Ok((curve.to_csv(), true));
            }
            let mut s = header(&ct, &spec);
            let _ = writeln!(s, "target {}", ct.character(profile.target_index).name);
            let _ = writeln!(s, "{:>10}  {:>20}  {:>24}", "t", "a_(i,t)/n^t", "a_(i,t)");
            for ((t, y), raw) in curve.grid.iter().zip(&curve.normalized).zip(&curve.raw) {
                let raw = raw.map_or_else(|| "inf".to_string(), |r| format!("{r:.12}"));
                let _ = writeln!(s, "{t:>10.4}  {y:>20.12}  {raw:>24}");
            }
            Ok((s, true))
        }
        Command::Kron(a) => {
            let (ct, spec) = load_spectrum(a, stdin, &tol)?;
            let k = kronecker_coeffs(&ct, &spec, &tol)?;
            if csv {
                let mut s = String::from("target,coefficient\n");
                for (&i, a) in k.targets.iter().zip(&k.coefficients) {
                    let _ = writeln!(s, "{},{a}", ct.character(i).name);
                }
                return Ok((s, true));
            }
            let b = kronecker_bounds(&ct, &spec, &tol)?;
            let mut s = header(&ct, &spec);
            s.push_str("multiplicities in χ ⊗ χ̄:\n");
            for (&i, a) in k.targets.iter().zip(&k.coefficients) {
                let _ = writeln!(s, "  {:<12} {a}", ct.character(i).name);
            }
            let _ = writeln!(s, "sum of squares = {}", k.sum_squares);
            let _ = writeln!(s, "gamma in [{:.10}, {:.10}]", b.lower, b.upper);
            s.push_str("level upper bounds:\n");
            s.push_str(&level_list("gamma_q <=", &b.level_uppers));
            Ok((s, true))
        }
        Command::Asym(a) => {
            reject_csv(cli, "asym")?;
            let (ct, spec) = load_spectrum(a, stdin, &tol)?;
            Ok((asym_text(&ct, &spec, &tol)?, true))
        }
        Command::Conjecture { table } => {
            reject_csv(cli, "conjecture")?;
            let ct = load_table(&read_input(table, stdin)?)?;
            conjecture_text(&ct, &tol)
        }
    }
}

fn load_spectrum(
    a: &CharArgs,
    stdin: &mut dyn Read,
    tol: &Tolerance,
) -> Result<(CharacterTable, Spectrum)> {
    let ct = load_table(&read_input(&a.table, stdin)?)?;
    let i = ct.character_index(&a.chi)?;
    let spec = value_levels(&ct, i, tol)?;
    Ok((ct, spec))
}

fn load_profile(
    ct: &CharacterTable,
    spec: &Spectrum,
    target: &str,
    tol: &Tolerance,
) -> Result<MultiplicityProfile> {
    incidence_numbers(ct, spec, ct.character_index(target)?, tol)
}

fn class_names(ct: &CharacterTable, classes: &[usize]) -> String {
    classes
        .iter()
        .map(|&j| ct.classes()[j].name.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

fn header(ct: &CharacterTable, spec: &Spectrum) -> String {
    format!(
        "group {} (|G| = {}), character {} (n = {})\n",
        ct.group_name(),
        ct.order(),
        ct.character(spec.char_index).name,
        spec.n
    )
}

fn level_list(label: &str, values: &[f64]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(q, v)| format!("  q={q}: {label} {v:.10}\n"))
        .collect()
}

fn validate(
    ct: &CharacterTable,
    gens: Option<crate::group::GeneratorSet>,
    tol: &Tolerance,
) -> Outcome {
    let report = validate_table(ct, tol);
    let mut passed = report.passed();
    let mut s = format!(
        "group {} (|G| = {}, {} classes, {} characters)\n",
        ct.group_name(),
        ct.order(),
        ct.num_classes(),
        ct.num_characters()
    );
    for c in &report.checks {
        let _ = writeln!(
            s,
            "{:<5} {:<26} max residual {:.3e}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.max_residual
        );
    }
    if let Some(gens) = gens {
        let g = enumerate_generator_set(&gens, DEFAULT_CAP)?;
        let mut sizes = g.class_sizes();
        sizes.sort_unstable();
        let matches = match check_class_function(&g, ct) {
            Ok(m) => m,
            Err(Error::OrderMismatch { group, table }) => {
                let _ = writeln!(
                    s,
                    "FAIL  group order {group} differs from table order {table}"
                );
                return Ok((s, false));
            }
            Err(e) => return Err(e.into()),
        };
        passed &= matches;
        let _ = writeln!(
            s,
            "{:<5} {:<26} order {}, class sizes {:?}",
            if matches { "ok" } else { "FAIL" },
            "enumerated_group",
            g.order(),
            sizes
        );
    }
    let _ = writeln!(s, "{}", if passed { "valid" } else { "invalid" });
    Ok((s, passed))
}

fn spectrum_text(ct: &CharacterTable, spec: &Spectrum, tol: &Tolerance) -> Result<String> {
    let mut s = header(ct, spec);
    let _ = writeln!(
        s,
        "|K|  = {} (classes: {})",
        spec.kernel.order,
        class_names(ct, &spec.kernel.classes)
    );
    let _ = writeln!(s, "|C|  = {}", spec.c_size);
    let _ = writeln!(s, "|C0| = {}", spec.top_size);
    let _ = writeln!(s, "|G0| = {}", spec.zero_size);
    let _ = writeln!(s, "gamma = {} ≈ {:.12}", spec.levels[0].value, spec.gamma());
    s.push_str("levels:\n");
    for (q, l) in spec.levels.iter().enumerate() {
        let _ = writeln!(
            s,
            "  q={q}  |chi| = {:<20} ≈ {:<16.12} size {:<6} classes {}",
            l.value.to_string(),
            l.gamma,
            l.size,
            class_names(ct, &l.classes)
        );
    }
    let list = trivial_on_kernel(ct, &spec.kernel, tol)?;
    let names: Vec<&str> = list
        .iter()
        .map(|&i| ct.character(i).name.as_str())
        .collect();
    let _ = writeln!(
        s,
        "characters trivial on K ({}): {}",
        list.len(),
        names.join(" ")
    );
    Ok(s)
}

fn spectrum_csv(ct: &CharacterTable, spec: &Spectrum) -> String {
    let mut s = String::from("level,value,gamma,size,classes\n");
    for (q, l) in spec.levels.iter().enumerate() {
        let _ = writeln!(
            s,
            "{q},{},{:?},{},{}",
            l.value,
            l.gamma,
            l.size,
            class_names(ct, &l.classes)
        );
    }
    s
}

fn bounds_text(ct: &CharacterTable, spec: &Spectrum, t: f64, tol: &Tolerance) -> Result<String> {
    let r = bounds_report(ct, spec, t, tol)?;
    let b = &r.gamma_bounds;
    let n = spec.n as f64;
    let mut s = header(ct, spec);
    let _ = writeln!(s, "t = {t:?}");
    let _ = writeln!(
        s,
        "gamma = {:.10}  (gamma/n = {:.10})",
        r.gamma, b.gamma_ratio
    );
    match r.a1t {
        Some(a) => {
            let _ = writeln!(s, "a_(1,t) = {a:.10}");
        }
        None => {
            let _ = writeln!(s, "a_(1,t)/n^t = {:.10e}", b.a1t_normalized);
        }
    }
    let _ = writeln!(s, "gamma/n in [{:.10}, {:.10}]", b.lower, b.upper);
    let _ = writeln!(s, "gamma   in [{:.10}, {:.10}]", b.lower * n, b.upper * n);
    let _ = writeln!(
        s,
        "a_(1,t)^(1/t)/n = {:.10} in [{:.10}, {:.10}]",
        b.root_ratio, b.dual_lower, b.dual_upper
    );
    s.push_str("level upper bounds:\n");
    s.push_str(&level_list("gamma_q <=", &r.level_uppers));
    match r.centerless_interval {
        Some((lo, hi)) => {
            let _ = writeln!(s, "centralizer interval: gamma in [{lo:.10}, {hi:.10}]");
        }
        None => s.push_str("centralizer interval: not applicable (|K| > 1)\n"),
    }
    match &r.kronecker {
        Some(k) => {
            let _ = writeln!(
                s,
                "kronecker interval:   gamma in [{:.10}, {:.10}]  (sum of squares {})",
                k.lower, k.upper, k.sum_squares
            );
        }
        None => s.push_str("kronecker interval: not available (incomplete table)\n"),
    }
    Ok(s)
}

fn asym_text(ct: &CharacterTable, spec: &Spectrum, tol: &Tolerance) -> Result<String> {
    let profiles = trivial_on_kernel(ct, &spec.kernel, tol)?
        .into_iter()
        .map(|i| incidence_numbers(ct, spec, i, tol))
        .collect::<Result<Vec<_>>>()?;
    let r = asymptotics(ct, spec, &profiles)?;
    let opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.10}"));
    let mut s = header(ct, spec);
    let _ = writeln!(
        s,
        "{:<12} {:>14} {:>9} {:>14} {:>14} {:>14} {:>14}",
        "target", "limit", "approach", "rate", "slope@64", "ratio@64", "rootdev@64"
    );
    for t in &r.targets {
        let _ = writeln!(
            s,
            "{:<12} {:>14.10} {:>9} {:>14} {:>14} {:>14} {:>14.10}",
            ct.character(t.target_index).name,
            t.limit,
            t.direction.to_string(),
            opt(t.rate),
            opt(t.log_slope),
            opt(t.equivalence_ratio),
            t.root_deviation
        );
    }
    s.push_str("c_t:\n");
    for (t, c) in &r.c_t {
        let _ = writeln!(s, "  t={t:<6} {c:.12}");
    }
    let _ = writeln!(s, "c(rho) = {:.12}", r.c_rho);
    let _ = writeln!(s, "sqrt(k/|G/K|) = {:.12}", r.cauchy_schwarz_bound);
    let _ = writeln!(s, "delta_K residual = {:e}", r.delta_k_residual);
    Ok(s)
}

fn conjecture_text(ct: &CharacterTable, tol: &Tolerance) -> Outcome {
    let report = conjecture_scan(ct, tol)?;
    let mut s = format!("group {} (|G| = {})\n", ct.group_name(), ct.order());
    for (chi, scan) in &report.characters {
        let name = &ct.character(*chi).name;
        match scan {
            CharacterScan::Linear => {
                let _ = writeln!(s, "{name}: linear, skipped");
            }
            CharacterScan::Degenerate => {
                let _ = writeln!(s, "{name}: degenerate spectrum, skipped");
            }
            CharacterScan::Scanned {
                levels,
                vacuous,
                targets,
            } => {
                let _ = writeln!(
                    s,
                    "{name}: {levels} levels{}",
                    if *vacuous {
                        ", only the trivial character is trivial on K"
                    } else {
                        ""
                    }
                );
                for t in targets {
                    let witness = t
                        .witness_t
                        .map_or_else(|| "-".to_string(), |w| format!("{w}"));
                    let _ = writeln!(
                        s,
                        "  {:<12} {:<5} indivisible={:<5} witness_t={:<4} single_classes={}",
                        ct.character(t.target_index).name,
                        if t.holds { "holds" } else { "FAILS" },
                        t.indivisible,
                        witness,
                        t.single_classes
                    );
                }
            }
        }
    }
    let candidates = report.counterexample_candidates();
    if candidates.is_empty() {
        s.push_str("holds for every scanned pair\n");
    } else {
        for (chi, i) in &candidates {
            let _ = writeln!(
                s,
                "counterexample candidate: {} -> {}",
                ct.character(*chi).name,
                ct.character(*i).name
            );
        }
    }
    Ok((s, candidates.is_empty()))
}
