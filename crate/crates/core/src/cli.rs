//! Command-line front end. Every command returns its output and exit code
//! instead of printing, so it can be driven from tests.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::ar_quiver::{build_c2n, reduce, TranslationQuiver};
use crate::character::plucker_character;
use crate::combinatorics::{cut_polygon, Arc, Triangulation};
use crate::error::{Error, Result};
use crate::frieze::{
    mesh_check, mesh_frieze, parse_rational, ptolemy_check, ptolemy_frieze, render_ascii, restrict_frieze, Frieze,
    MeshSeed,
};
use crate::mutation::{builtin, DynkinType, ExchangeQuiver};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "grred",
    version,
    about = "Grassmannian cluster categories of type (2,n) and their reductions"
)]
pub struct Cli {
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Auslander–Reiten quiver of C(2,n) or of a reduction.
    Arquiver {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Rigid arcs to reduce at, as "i,j;k,l".
        #[arg(long)]
        perp: Option<String>,
        #[arg(long, value_enum, default_value_t = QuiverFormat::Json)]
        format: QuiverFormat,
    },
    /// Frieze of a triangulation (Ptolemy) or of the AR quiver (mesh).
    Frieze {
        #[arg(long)]
        n: usize,
        /// Triangulation diagonals "a,b;c,d;..."; without it the mesh frieze is built.
        #[arg(long)]
        tri: Option<String>,
        #[arg(long)]
        perp: Option<String>,
        /// Seed overrides "i,j=v;..." with v an integer or p/q.
        #[arg(long)]
        values: Option<String>,
        #[arg(long, value_enum, default_value_t = FriezeFormat::Ascii)]
        format: FriezeFormat,
        #[arg(long, value_enum)]
        check: Option<Check>,
    },
    /// Cluster character of an arc as a Laurent polynomial.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tri: String,
        #[arg(long)]
        arc: String,
        /// "all1", or "x[i,j]=v;..." (the x[...] wrapper is optional).
        #[arg(long)]
        specialize: Option<String>,
    },
    /// Quiver mutation and Dynkin recognition.
    Mutate {
        /// Q37, Q38, "fan_quiver(n, v)", or a quiver file (text or JSON).
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value = "")]
        seq: String,
        /// A, D (rank taken from the quiver), Am, Dm, E6, E7 or E8.
        #[arg(long)]
        recognize: Option<String>,
        #[arg(long, value_enum, default_value_t = MutateFormat::Text)]
        format: MutateFormat,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FriezeFormat {
    Ascii,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Mesh,
    Ptolemy,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MutateFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Reduction,
    Frieze,
    Character,
    Morphisms,
    All,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code: EXIT_USAGE,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.exit_code() == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Arquiver { n, k, perp, format } => cmd_arquiver(*n, *k, perp.as_deref(), *format),
        Command::Frieze {
            n,
            tri,
            perp,
            values,
            format,
            check,
        } => cmd_frieze(*n, tri.as_deref(), perp.as_deref(), values.as_deref(), *format, *check),
        Command::Character {
            n,
            tri,
            arc,
            specialize,
        } => cmd_character(*n, tri, arc, specialize.as_deref()),
        Command::Mutate {
            quiver,
            seq,
            recognize,
            format,
        } => cmd_mutate(quiver, seq, recognize.as_deref(), *format),
        Command::Verify { suite, nmax } => cmd_verify(*suite, *nmax),
    };
    let mut outcome = result.unwrap_or_else(|e| Outcome::usage(format!("error: {e}\n")));
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            return Outcome::usage(format!("error: cannot write {}: {e}\n", path.display()));
        }
        outcome.stdout.clear();
    }
    outcome
}

/// Parses "i,j;k,l" into arcs. An empty string gives no arcs.
pub fn parse_arcs(text: &str) -> Result<Vec<Arc>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_arc)
        .collect()
}

pub fn parse_arc(text: &str) -> Result<Arc> {
    let inner = text.trim().trim_start_matches("x[").trim_end_matches(']');
    let inner = inner.trim_start_matches('(').trim_end_matches(')');
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected an arc \"i,j\", found {text:?}")))?;
    let p = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("{text:?}: {e}")))
    };
    let (a, b) = (p(a)?, p(b)?);
    Arc::try_new(a, b).ok_or_else(|| Error::Parse(format!("{text:?} is not an arc")))
}

/// Parses "i,j=v;..." into a value map.
pub fn parse_assignment(text: &str) -> Result<BTreeMap<Arc, BigRational>> {
    let mut out = BTreeMap::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (arc, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected \"i,j=v\", found {item:?}")))?;
        out.insert(parse_arc(arc)?, parse_rational(value.trim())?);
    }
    Ok(out)
}

fn check_arcs_in(n: usize, arcs: &[Arc]) -> Result<()> {
    match arcs.iter().find(|a| !a.in_polygon(n)) {
        Some(a) => Err(Error::Precondition(format!("{a} is not an arc of the {n}-gon"))),
        None => Ok(()),
    }
}

fn quiver_for(n: usize, perp: &[Arc]) -> Result<TranslationQuiver> {
    if perp.is_empty() {
        build_c2n(n)
    } else {
        reduce(n, perp)
    }
}

fn cmd_arquiver(n: usize, k: usize, perp: Option<&str>, format: QuiverFormat) -> Result<Outcome> {
    if k != 2 {
        return Err(Error::UnsupportedK(k));
    }
    let perp = parse_arcs(perp.unwrap_or(""))?;
    check_arcs_in(n, &perp)?;
    let q = quiver_for(n, &perp)?;
    let mut text = match format {
        QuiverFormat::Dot => q.to_dot(),
        QuiverFormat::Json => q.to_json(),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(Outcome::ok(text))
}

fn cmd_frieze(
    n: usize,
    tri: Option<&str>,
    perp: Option<&str>,
    values: Option<&str>,
    format: FriezeFormat,
    check: Option<Check>,
) -> Result<Outcome> {
    let perp = parse_arcs(perp.unwrap_or(""))?;
    check_arcs_in(n, &perp)?;
    let values = parse_assignment(values.unwrap_or(""))?;
    let quiver = quiver_for(n, &perp)?;
    let frieze = match tri {
        Some(tri) => {
            let diagonals = parse_arcs(tri)?;
            check_arcs_in(n, &diagonals)?;
            let t = Triangulation::new(n, diagonals)?;
            let full = ptolemy_frieze(&t, &values)?;
            if perp.is_empty() {
                full
            } else {
                restrict_frieze(&full, &perp)?
            }
        }
        None => {
            let (boundary, slice) = values.into_iter().partition(|(a, _)| quiver.is_projective(a));
            mesh_frieze(&quiver, &MeshSeed { boundary, slice })?
        }
    };
    let out = match format {
        FriezeFormat::Ascii => render_ascii(&frieze),
        FriezeFormat::Json => frieze.to_json() + "\n",
    };
    // check reports go to stderr so that JSON output stays parseable
    let mut report = String::new();
    let mut failed = false;
    if matches!(check, Some(Check::Mesh | Check::Both)) {
        failed |= report_mesh(&quiver, &frieze, &mut report)?;
    }
    if matches!(check, Some(Check::Ptolemy | Check::Both)) {
        failed |= report_ptolemy(n, &perp, &frieze, &mut report)?;
    }
    Ok(Outcome {
        stdout: out,
        stderr: report,
        code: if failed { EXIT_FAILED } else { EXIT_OK },
    })
}

fn report_mesh(q: &TranslationQuiver, f: &Frieze, out: &mut String) -> Result<bool> {
    let violations = mesh_check(q, f)?;
    if violations.is_empty() {
        out.push_str("mesh check: ok\n");
        return Ok(false);
    }
    out.push_str(&format!("mesh check: {} violations\n", violations.len()));
    for v in violations {
        let middle: Vec<String> = v.triple.middle.iter().map(Arc::to_string).collect();
        out.push_str(&format!(
            "  ending at {} (start {}, middle {}): {} != {}\n",
            v.triple.end,
            v.triple.start,
            middle.join(" + "),
            v.lhs,
            v.rhs
        ));
    }
    Ok(true)
}

fn report_ptolemy(n: usize, perp: &[Arc], f: &Frieze, out: &mut String) -> Result<bool> {
    let pieces = if perp.is_empty() {
        None
    } else {
        Some(cut_polygon(n, perp)?)
    };
    let violations = ptolemy_check(n, f, pieces.as_ref())?;
    if violations.is_empty() {
        out.push_str("ptolemy check: ok\n");
        return Ok(false);
    }
    out.push_str(&format!("ptolemy check: {} violations\n", violations.len()));
    for [i, j, k, l] in violations {
        out.push_str(&format!("  quadruple {i},{j},{k},{l}\n"));
    }
    Ok(true)
}

fn cmd_character(n: usize, tri: &str, arc: &str, specialize: Option<&str>) -> Result<Outcome> {
    let diagonals = parse_arcs(tri)?;
    check_arcs_in(n, &diagonals)?;
    let t = Triangulation::new(n, diagonals)?;
    let arc = parse_arc(arc)?;
    let p = plucker_character(n, &t, &arc)?;
    let text = match specialize.map(str::trim) {
        None => p.to_string(),
        Some("all1") => p.specialize_all_ones().to_string(),
        Some(assignment) => {
            let v = p.specialize(&parse_assignment(assignment)?)?;
            if v.is_integer() {
                v.to_integer().to_string()
            } else {
                v.to_string()
            }
        }
    };
    Ok(Outcome::ok(text + "\n"))
}

fn load_quiver(source: &str) -> Result<ExchangeQuiver> {
    match builtin(source) {
        Err(Error::UnknownName(name)) => {
            let path = std::path::Path::new(source);
            if !path.is_file() {
                return Err(Error::UnknownName(name));
            }
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
            if text.trim_start().starts_with('{') {
                ExchangeQuiver::from_json(&text)
            } else {
                ExchangeQuiver::parse_text(&text)
            }
        }
        other => other,
    }
}

fn cmd_mutate(quiver: &str, seq: &str, recognize: Option<&str>, format: MutateFormat) -> Result<Outcome> {
    let q = load_quiver(quiver)?;
    let vertices: Vec<usize> = seq
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|e| Error::Parse(format!("vertex {s:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    let mutated = q.mutate_sequence(&vertices)?;
    let mut out = match format {
        MutateFormat::Text => mutated.to_text(),
        MutateFormat::Json => mutated.to_json() + "\n",
    };
    let mut code = EXIT_OK;
    if let Some(name) = recognize {
        let t = match name.trim().to_ascii_uppercase().as_str() {
            "A" => DynkinType::A(mutated.size()),
            "D" => DynkinType::D(mutated.size()),
            other => other.parse()?,
        };
        let verdict = mutated.is_dynkin_orientation(t);
        out.push_str(&format!("{t}: {}\n", if verdict { "yes" } else { "no" }));
        if !verdict {
            code = EXIT_FAILED;
        }
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    })
}

fn cmd_verify(suite: SuiteArg, nmax: usize) -> Result<Outcome> {
    if !(4..=10).contains(&nmax) {
        return Err(Error::Precondition(format!("--nmax must lie in 4..=10, got {nmax}")));
    }
    let suite = match suite {
        SuiteArg::Reduction => Suite::Reduction,
        SuiteArg::Frieze => Suite::Frieze,
        SuiteArg::Character => Suite::Character,
        SuiteArg::Morphisms => Suite::Morphisms,
        SuiteArg::All => Suite::All,
    };
    let reports = run_suite(suite, nmax)?;
    let passed = reports.iter().all(|r| r.passed());
    let out: String = reports.iter().map(ToString::to_string).collect();
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}
