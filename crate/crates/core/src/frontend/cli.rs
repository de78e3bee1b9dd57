//! `afmatrix` command line.
//!
//! Exit status: 0 success, 1 usage error, 2 unreadable or unparsable input,
//! 3 internal invariant failure (including a failed `verify`).

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::framework::{ArgSet, Framework};
use crate::oracle::{oracle_family, DEFAULT_ORACLE_BOUND};
use crate::semantics::{answer, compute, Question, SemanticsTag};
use crate::verify::verify_framework;

use super::{format_answer, generate, parse_apx, parse_tgf, write_apx, write_tgf, GeneratorConfig, NameMap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "afmatrix", version, about = "Extensions of abstract argumentation frameworks via attack matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Answer a reasoning task on a framework file.
    Solve {
        /// Input format; inferred from the file extension when omitted.
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        /// cf, st, ad, co, pr, gr, id, sst or eg.
        #[arg(long)]
        semantics: String,
        #[arg(long, value_enum)]
        task: Task,
        /// Query argument for DC/DS/AC/AS; repeat to query a set.
        #[arg(long = "arg")]
        args: Vec<String>,
        /// Cross-check the computed family against the brute-force oracle.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
        /// Path to the framework, or `-` for standard input.
        file: PathBuf,
    },
    /// Print a seeded random framework.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = InputFormat::Tgf)]
        format: InputFormat,
    },
    /// Compare every semantics against the oracle on a file or a generated
    /// corpus.
    Verify {
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        /// Arguments per generated framework.
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Seed of the first generated framework; later ones count upward.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of generated frameworks.
        #[arg(long, default_value_t = 20)]
        count: u64,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Tgf,
    Apx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Task {
    /// Enumerate all extensions.
    Ee,
    /// Some extension, or NO.
    Se,
    /// Credulous acceptance: in some extension.
    Dc,
    /// Skeptical acceptance: in every extension.
    Ds,
    /// Attacked by some extension.
    Ac,
    /// Attacked by every extension.
    As,
}

impl Task {
    fn question(self) -> Question {
        match self {
            Task::Ee => Question::AllExtensions,
            Task::Se => Question::SomeExtension,
            Task::Dc => Question::ContainedInSome,
            Task::Ds => Question::ContainedInAll,
            Task::Ac => Question::AttackedBySome,
            Task::As => Question::AttackedByAll,
        }
    }

    fn needs_arg(self) -> bool {
        !matches!(self, Task::Ee | Task::Se)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::AttackOutOfRange { .. } => EXIT_PARSE,
        Error::Invariant(_) | Error::NotConflictFree { .. } | Error::NotAdmissible { .. } => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::parse(0, format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &Path, format: Option<InputFormat>) -> Result<(Framework, NameMap)> {
    let format = match format {
        Some(f) => f,
        None => match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("tgf") => InputFormat::Tgf,
            Some("apx") => InputFormat::Apx,
            _ => {
                return Err(Error::Usage(format!(
                    "cannot infer format of {}; pass --format tgf|apx",
                    path.display()
                )))
            }
        },
    };
    let text = read_input(path)?;
    match format {
        InputFormat::Tgf => parse_tgf(&text),
        InputFormat::Apx => parse_apx(&text),
    }
}

fn query_set(names: &NameMap, args: &[String]) -> Result<ArgSet> {
    args.iter()
        .map(|name| names.id(name).ok_or_else(|| Error::Usage(format!("unknown argument '{name}'"))))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn solve(
    out: &mut dyn Write,
    file: &Path,
    format: Option<InputFormat>,
    semantics: &str,
    task: Task,
    args: &[String],
    verify: bool,
    oracle_bound: usize,
) -> Result<()> {
    let tag: SemanticsTag = semantics.parse()?;
    if task.needs_arg() && args.is_empty() {
        return Err(Error::Usage("DC, DS, AC and AS need at least one --arg".into()));
    }
    if !task.needs_arg() && !args.is_empty() {
        return Err(Error::Usage("--arg only applies to DC, DS, AC and AS".into()));
    }
    let (f, names) = load(file, format)?;
    let target = query_set(&names, args)?;
    let family = compute(&f, tag)?;
    if verify {
        let expected = oracle_family(&f, tag, oracle_bound)?;
        if expected != family {
            return Err(Error::Invariant(format!("{tag} family disagrees with the oracle")));
        }
    }
    let result = answer(&f, &family, task.question(), &target)?;
    write!(out, "{}", format_answer(&result, &names)).map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Usage(format!("write failed: {e}"))
}

fn gen(out: &mut dyn Write, n: usize, p: f64, seed: u64, format: InputFormat) -> Result<()> {
    let f = generate(&GeneratorConfig::new(n, p, seed)?)?;
    let names = NameMap::numeric(n);
    let text = match format {
        InputFormat::Tgf => write_tgf(&f, &names),
        InputFormat::Apx => write_apx(&f, &names),
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut dyn Write,
    file: Option<&Path>,
    format: Option<InputFormat>,
    n: usize,
    p: f64,
    seed: u64,
    count: u64,
    bound: usize,
) -> Result<()> {
    let corpus: Vec<(String, Framework)> = match file {
        Some(path) => vec![(path.display().to_string(), load(path, format)?.0)],
        None => {
            let mut v = Vec::new();
            for s in seed..seed + count {
                v.push((format!("n={n} p={p} seed={s}"), generate(&GeneratorConfig::new(n, p, s)?)?));
            }
            v
        }
    };
    let mut checks = 0;
    let mut failures = 0;
    for (label, f) in &corpus {
        let report = verify_framework(f, bound)?;
        checks += report.checks;
        let status = if report.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {label}: {} checks", report.checks).map_err(io_err)?;
        for m in &report.mismatches {
            writeln!(out, "  {m}").map_err(io_err)?;
        }
        failures += report.mismatches.len();
    }
    writeln!(out, "verified {} framework(s), {checks} checks, {failures} mismatch(es)", corpus.len())
        .map_err(io_err)?;
    if failures > 0 {
        return Err(Error::Invariant(format!("{failures} mismatch(es)")));
    }
    Ok(())
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Solve { format, semantics, task, args, verify, oracle_bound, file } => {
            solve(out, &file, format, &semantics, task, &args, verify, oracle_bound)
        }
        Command::Gen { n, p, seed, format } => gen(out, n, p, seed, format),
        Command::Verify { format, n, p, seed, count, oracle_bound, file } => {
            verify(out, file.as_deref(), format, n, p, seed, count, oracle_bound)
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
