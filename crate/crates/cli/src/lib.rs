//! `sigcross`: statistics, involutions, fillings and exhaustive verifiers for
//! signed permutations.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text for standard output and standard error, so the binary is a thin
//! wrapper and tests can call it in-process.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use signed_crossings::enumeration::{
    self, enumerate_bn, verify_avoider_symmetry, verify_chain_symmetry, verify_full_crossing_count,
    verify_involution_properties, verify_pair_symmetry, InvolutionMap, Statistic, VerificationReport,
};
use signed_crossings::fillings::{
    default_budget, find_max_pattern, interchange_psi, xi, xi_inverse, FillingPattern, PsiMove, YoungFilling,
};
use signed_crossings::{Error, PermutationStats, SignedPermutation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Largest rank accepted by `verify corollary`; beyond it the endpoint
/// count overflows.
const MAX_COROLLARY_RANK: usize = 30;

#[derive(Debug, Parser)]
#[command(name = "sigcross", version, about = "Crossings and nestings of signed permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Statistics of one permutation
    Stats {
        #[arg(allow_hyphen_values = true)]
        permutation: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply one of the crossing/nesting involutions
    Involute {
        #[arg(allow_hyphen_values = true)]
        permutation: String,
        #[arg(long, default_value = "theorem24")]
        map: InvolutionMap,
        #[arg(long)]
        json: bool,
    },
    /// The Young-diagram filling of a permutation
    Fill {
        #[arg(allow_hyphen_values = true)]
        permutation: String,
        #[arg(long)]
        json: bool,
    },
    /// Interchange the largest anti-identity and identity patterns of a filling
    Theta {
        #[arg(allow_hyphen_values = true, required_unless_present = "from_filling")]
        permutation: Option<String>,
        #[arg(long, value_name = "PATH", conflicts_with = "permutation")]
        from_filling: Option<PathBuf>,
        /// Maximum number of single moves (default 4^rows)
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively check one of the symmetry claims
    Verify {
        claim: Claim,
        #[arg(long)]
        n: usize,
        /// Map checked by `involutions`
        #[arg(long, default_value = "theorem24")]
        map: InvolutionMap,
        /// Pattern sizes checked by `lemma41`
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        k: Vec<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Include wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Joint distribution table of statistics over B_n
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "nes,cro,wex,neg")]
        schema: Vec<Statistic>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List B_n in enumeration order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Claim {
    Thm24,
    Thm27,
    Corollary,
    Lemma41,
    Involutions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Exit code plus the text destined for standard output and error.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CommandResult {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CommandResult {
            code: EXIT_INTERNAL,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

/// Input problems are usage errors; anything else is internal.
fn from_core(e: Error) -> CommandResult {
    let message = format!("error: {e}\n");
    match e {
        Error::MalformedToken(_)
        | Error::ZeroEntry(_)
        | Error::RankViolation(_)
        | Error::RankTooLarge { .. }
        | Error::MalformedFilling(_)
        | Error::CellOutsideShape { .. }
        | Error::RowColumnSumViolation(_)
        | Error::InvalidShape(_) => CommandResult::usage(message),
        _ => CommandResult::internal(message),
    }
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_permutation(text: &str) -> Result<SignedPermutation, CommandResult> {
    text.parse()
        .map_err(|e| CommandResult::usage(format!("error: cannot parse permutation `{text}`: {e}\n")))
}

/// Writes `content` to `out` if given, otherwise returns it for stdout.
fn emit(content: String, out: Option<&Path>, note: impl FnOnce() -> String) -> Result<String, CommandResult> {
    match out {
        None => Ok(content),
        Some(path) => {
            fs::write(path, content)
                .map_err(|e| CommandResult::internal(format!("error: cannot write {}: {e}\n", path.display())))?;
            Ok(note())
        }
    }
}

pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::usage(text)
            } else {
                CommandResult::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Stats { permutation, json } => stats(&permutation, json),
        Command::Involute { permutation, map, json } => involute(&permutation, map, json),
        Command::Fill { permutation, json } => fill(&permutation, json),
        Command::Theta {
            permutation,
            from_filling,
            budget,
            json,
        } => theta(permutation.as_deref(), from_filling.as_deref(), budget, json),
        Command::Verify {
            claim,
            n,
            map,
            k,
            out,
            timing,
        } => return verify(claim, n, map, &k, out.as_deref(), timing),
        Command::Distribution { n, schema, format, out } => distribution(n, &schema, format, out.as_deref()),
        Command::Enumerate { n, out } => enumerate(n, out.as_deref()),
    };
    result.unwrap_or_else(|e| e)
}

fn stats_text(s: &PermutationStats) -> String {
    let rows: [(&str, String); 9] = [
        ("permutation", s.permutation.to_string()),
        ("n", s.n.to_string()),
        ("wex", s.wex.to_string()),
        ("neg", s.neg.to_string()),
        ("cro", s.cro.to_string()),
        ("nes", s.nes.to_string()),
        ("cro_star", s.cro_star.to_string()),
        ("nes_star", s.nes_star.to_string()),
        ("degree_sequence", s.degree_sequence.clone()),
    ];
    rows.iter().map(|(k, v)| format!("{k:<16}{v}\n")).collect()
}

fn stats(text: &str, json: bool) -> Result<CommandResult, CommandResult> {
    let s = PermutationStats::of(&parse_permutation(text)?);
    Ok(CommandResult::ok(if json { pretty(&s) } else { stats_text(&s) }))
}

fn involute(text: &str, map: InvolutionMap, json: bool) -> Result<CommandResult, CommandResult> {
    let p = parse_permutation(text)?;
    let image = map
        .apply(&p)
        .map_err(|e| CommandResult::internal(format!("error: {map} failed: {e}\n")))?;
    let (before, after) = (PermutationStats::of(&p), PermutationStats::of(&image));
    if json {
        return Ok(CommandResult::ok(pretty(&json!({
            "map": map,
            "permutation": p,
            "image": image,
            "before": before,
            "after": after,
        }))));
    }
    let mut out = format!("{map}: {p} -> {image}\n\n{:<16}{:<12}{}\n", "", "before", "after");
    let pairs = [
        ("wex", before.wex, after.wex),
        ("neg", before.neg, after.neg),
        ("cro", before.cro, after.cro),
        ("nes", before.nes, after.nes),
        ("cro_star", before.cro_star, after.cro_star),
        ("nes_star", before.nes_star, after.nes_star),
    ];
    for (name, b, a) in pairs {
        out.push_str(&format!("{name:<16}{b:<12}{a}\n"));
    }
    out.push_str(&format!(
        "{:<16}{}\n{:<16}{}\n",
        "degree_sequence", before.degree_sequence, "", after.degree_sequence
    ));
    Ok(CommandResult::ok(out))
}

fn filling_json(f: &YoungFilling) -> Value {
    json!({
        "shape": f.shape(),
        "cells": f.ones().collect::<Vec<_>>(),
        "openers": f.openers(),
        "closers": f.closers(),
        "max_anti_identity": find_max_pattern(f, FillingPattern::AntiIdentity).k(),
        "max_identity": find_max_pattern(f, FillingPattern::Identity).k(),
    })
}

fn fill(text: &str, json: bool) -> Result<CommandResult, CommandResult> {
    let p = parse_permutation(text)?;
    let f = xi(&p.upper_diagram()).map_err(from_core)?;
    Ok(CommandResult::ok(if json {
        pretty(&filling_json(&f))
    } else {
        f.to_string()
    }))
}

fn theta(
    permutation: Option<&str>,
    from_filling: Option<&Path>,
    budget: Option<usize>,
    json: bool,
) -> Result<CommandResult, CommandResult> {
    let (input, filling) = match (permutation, from_filling) {
        (Some(text), _) => {
            let p = parse_permutation(text)?;
            let f = xi(&p.upper_diagram()).map_err(from_core)?;
            (Some(p), f)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CommandResult::usage(format!("error: cannot read {}: {e}\n", path.display())))?;
            (None, text.parse::<YoungFilling>().map_err(from_core)?)
        }
        (None, None) => return Err(CommandResult::usage("error: give a permutation or --from-filling\n")),
    };
    let budget = budget.unwrap_or_else(|| default_budget(filling.rows()));
    let outcome = interchange_psi(&filling, budget).map_err(|e| {
        let trace: &[PsiMove] = match &e {
            Error::StepBudgetExhausted { trace, .. } | Error::InterchangeStalled { trace } => trace,
            _ => &[],
        };
        let mut failure = CommandResult::internal(format!("error: {e}\n"));
        if json {
            failure.stdout = pretty(&json!({ "error": e.to_string(), "budget": budget, "trace": trace }));
        }
        failure
    })?;
    // a hand-written filling need not carry labels that form a diagram
    let image = xi_inverse(&outcome.filling)
        .ok()
        .and_then(|d| SignedPermutation::from_upper(&d).ok());
    if json {
        return Ok(CommandResult::ok(pretty(&json!({
            "permutation": input,
            "image": image,
            "budget": budget,
            "steps": outcome.steps,
            "trace": outcome.trace,
            "filling": filling_json(&outcome.filling),
        }))));
    }
    let mut out = String::new();
    if let Some(p) = &input {
        out.push_str(&format!(
            "theta: {p} -> {}\n",
            image.as_ref().map_or("?".into(), |i| i.to_string())
        ));
    } else if let Some(i) = &image {
        out.push_str(&format!("image: {i}\n"));
    }
    out.push_str(&format!("steps: {} of {budget}\n", outcome.steps));
    out.push_str(&outcome.filling.to_string());
    Ok(CommandResult::ok(out))
}

fn verify(claim: Claim, n: usize, map: InvolutionMap, ks: &[usize], out: Option<&Path>, timing: bool) -> CommandResult {
    if n == 0 {
        return CommandResult::usage("error: --n must be at least 1\n");
    }
    let report = match claim {
        Claim::Thm24 => verify_pair_symmetry(n),
        Claim::Thm27 => verify_chain_symmetry(n),
        Claim::Corollary if n > MAX_COROLLARY_RANK => {
            return CommandResult::usage(format!("error: corollary supports n <= {MAX_COROLLARY_RANK}\n"));
        }
        Claim::Corollary => verify_full_crossing_count(n),
        Claim::Lemma41 => verify_avoider_symmetry(n, n, ks),
        Claim::Involutions => verify_involution_properties(n, map),
    };
    let mut report: VerificationReport = match report {
        Ok(r) => r,
        Err(e) => return from_core(e),
    };
    if !timing {
        report.elapsed_ms = None;
    }
    let code = if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    };
    let summary = format!("{}\n", report.summary());
    match emit(pretty(&report), out, || summary) {
        Ok(stdout) => CommandResult {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => e,
    }
}

fn distribution(
    n: usize,
    schema: &[Statistic],
    format: Format,
    out: Option<&Path>,
) -> Result<CommandResult, CommandResult> {
    if schema.is_empty() {
        return Err(CommandResult::usage("error: --schema needs at least one statistic\n"));
    }
    let table = enumeration::distribution(n, schema).map_err(from_core)?;
    let content = match format {
        Format::Csv => table.to_csv(),
        Format::Json => pretty(&table.to_json()),
    };
    let total = table.total;
    let rows = table.cells.len();
    emit(content, out, || format!("{rows} rows, {total} permutations\n")).map(CommandResult::ok)
}

fn enumerate(n: usize, out: Option<&Path>) -> Result<CommandResult, CommandResult> {
    let mut content = String::new();
    let mut count = 0u64;
    for p in enumerate_bn(n).map_err(from_core)? {
        content.push_str(&p.to_string());
        content.push('\n');
        count += 1;
    }
    emit(content, out, || format!("{count} permutations\n")).map(CommandResult::ok)
}
