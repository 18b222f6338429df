//! Command-line front end.
//!
//! [`run`] parses arguments, writes results to the given sink and returns
//! the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or `--assert` passed |
//! | 1 | usage error or unreadable input |
//! | 2 | domain error (inapplicable case, invalid permutation, …) |
//! | 3 | search budget exhausted |
//! | 4 | `--assert` failed |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::{self, Perm, SearchOutcome};
use crate::multitwist::{self, IntersectionMatrix};
use crate::search::{self, SearchConfig, DEFAULT_MAX_NODES};
use crate::thurston::{self, SurfaceMinimum};
use crate::word::TwistWord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_ASSERT: i32 = 4;

/// Environment variable holding the default search budget.
pub const MAX_NODES_ENV: &str = "THURSTON_MAX_NODES";
const DEFAULT_PERM_NODES: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "thurston",
    version,
    about = "Minimal Thurston pseudo-Anosov dilatations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal dilatation for a surface or an intersection number.
    MinDilatation(MinDilatationArgs),
    /// Enumerate Λₙ and check the minimal trace.
    Search(SearchArgs),
    /// Filling permutations.
    Perm {
        #[command(subcommand)]
        action: PermCommand,
    },
    /// Multitwists from an intersection matrix.
    Multitwist(MultitwistArgs),
    /// Minimal dilatations over a grid of surfaces.
    Table(TableArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["genus", "intersections"]))]
pub struct MinDilatationArgs {
    #[arg(long, requires = "punctures")]
    pub genus: Option<u64>,
    #[arg(long, requires = "genus")]
    pub punctures: Option<u64>,
    #[arg(long, conflicts_with_all = ["genus", "punctures"])]
    pub intersections: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long = "n", value_parser = positive)]
    pub n: u64,
    #[arg(long)]
    pub max_len: usize,
    /// Exit 0 only if the minimum trace and congruence closure check out.
    #[arg(long)]
    pub assert: bool,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the `|trace|` histogram as CSV here.
    #[arg(long)]
    pub histogram: Option<PathBuf>,
    #[arg(long, value_parser = positive)]
    pub jobs: Option<u64>,
    #[arg(long, env = MAX_NODES_ENV, value_parser = positive)]
    pub max_nodes: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["sigma", "file"]))]
pub struct PermInput {
    /// Cycle notation, e.g. `(1,2,3,4)`.
    #[arg(long)]
    pub sigma: Option<String>,
    /// JSON `{"m", "images"}` or cycle notation.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum PermCommand {
    /// Check σ against the filling conditions for Σ_{g,n}.
    Validate {
        #[command(flatten)]
        input: PermInput,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Backtracking search for a filling permutation.
    Search {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
        #[arg(long, value_parser = positive)]
        m: u64,
        #[arg(long, env = MAX_NODES_ENV, value_parser = positive)]
        max_nodes: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Add two punctured bigons.
    DoubleBigon {
        #[command(flatten)]
        input: PermInput,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct MultitwistArgs {
    /// CSV rows or JSON `{"rows", "cols", "entries"}`.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub word: String,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// `a..=b`, `a-b`, or a comma list.
    #[arg(long, default_value = "0..=5", value_parser = parse_range)]
    pub g_range: ValueList,
    #[arg(long, default_value = "0..=6", value_parser = parse_range)]
    pub n_range: ValueList,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

fn positive(s: &str) -> std::result::Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueList(pub Vec<u64>);

/// Parses `a..=b`, `a-b`, `a` or `a,b,c`.
pub fn parse_range(s: &str) -> std::result::Result<ValueList, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("bad number `{t}`"))
    };
    let bounds = s.split_once("..=").or_else(|| s.split_once('-'));
    let values: Vec<u64> = match bounds {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            (a..=b).collect()
        }
        None => s
            .split(',')
            .map(num)
            .collect::<std::result::Result<_, _>>()?,
    };
    Ok(ValueList(values))
}

/// One row of the surface table. Inapplicable cells keep the error tag in
/// `status` and leave the value columns empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub genus: u64,
    pub punctures: u64,
    pub intersection: Option<u64>,
    pub p: Option<String>,
    pub q: Option<String>,
    #[serde(rename = "D")]
    pub d: Option<String>,
    pub value: Option<String>,
    pub decimal: Option<String>,
    pub witness: Option<String>,
    pub status: String,
}

impl TableRow {
    pub fn compute(genus: u64, punctures: u64) -> Self {
        let blank = TableRow {
            genus,
            punctures,
            intersection: filling::i_min(genus, punctures).ok(),
            p: None,
            q: None,
            d: None,
            value: None,
            decimal: None,
            witness: None,
            status: String::new(),
        };
        match thurston::min_dilatation_for_surface(genus, punctures) {
            Ok(s) => TableRow {
                p: Some(s.dilatation.p().to_string()),
                q: Some(s.dilatation.q().to_string()),
                d: Some(s.dilatation.radicand().to_string()),
                value: Some(s.dilatation.to_string()),
                decimal: Some(s.dilatation.decimal()),
                witness: Some(s.witness.to_string()),
                status: "ok".into(),
                ..blank
            },
            Err(e) => TableRow {
                status: e.code().into(),
                ..blank
            },
        }
    }
}

pub fn surface_table(genera: &[u64], punctures: &[u64]) -> Vec<TableRow> {
    genera
        .iter()
        .flat_map(|&g| punctures.iter().map(move |&n| TableRow::compute(g, n)))
        .collect()
}

/// Maps an error to its exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::NonPositiveIntersection(_)
        | Error::Io(_)
        | Error::Json(_)
        | Error::Csv(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            exit_code(&e)
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::MinDilatation(a) => cmd_min_dilatation(a, out),
        Command::Search(a) => cmd_search(a, out),
        Command::Perm { action } => cmd_perm(action, out),
        Command::Multitwist(a) => cmd_multitwist(a, out),
        Command::Table(a) => cmd_table(a, out),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_csv_rows<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn no_csv(command: &str) -> Error {
    Error::InvalidArgument(format!("csv output is not available for `{command}`"))
}

fn cmd_min_dilatation(a: &MinDilatationArgs, out: &mut dyn Write) -> Result<i32> {
    let result: SurfaceOrIntersection = match (a.genus, a.punctures, a.intersections) {
        (Some(g), Some(n), None) => {
            SurfaceOrIntersection::Surface(thurston::min_dilatation_for_surface(g, n)?)
        }
        (None, None, Some(i)) => SurfaceOrIntersection::Intersection(thurston::min_dilatation(i)?),
        _ => {
            return Err(Error::InvalidArgument(
                "give --genus and --punctures, or --intersections".into(),
            ))
        }
    };
    let (dil, witness, i) = match &result {
        SurfaceOrIntersection::Surface(s) => (&s.dilatation, &s.witness, s.intersection),
        SurfaceOrIntersection::Intersection(m) => (&m.dilatation, &m.witness, m.intersection),
    };
    match a.format {
        Format::Json => match &result {
            SurfaceOrIntersection::Surface(s) => write_json(out, s)?,
            SurfaceOrIntersection::Intersection(m) => write_json(out, m)?,
        },
        Format::Csv => match &result {
            SurfaceOrIntersection::Surface(s) => {
                write_csv_rows(out, &[TableRow::compute(s.genus, s.punctures)])?
            }
            SurfaceOrIntersection::Intersection(_) => {
                return Err(no_csv("min-dilatation --intersections"))
            }
        },
        Format::Table => {
            if let SurfaceOrIntersection::Surface(s) = &result {
                writeln!(out, "surface       Σ_{{{},{}}}", s.genus, s.punctures)?;
            }
            writeln!(out, "intersection  {i}")?;
            writeln!(out, "dilatation    {dil}")?;
            writeln!(
                out,
                "surd          p = {}, q = {}, D = {}",
                dil.p(),
                dil.q(),
                dil.radicand()
            )?;
            writeln!(out, "decimal       {}", dil.decimal())?;
            writeln!(out, "witness       {witness}")?;
            if let SurfaceOrIntersection::Surface(s) = &result {
                if !s.theorem_hypotheses_hold {
                    writeln!(
                        out,
                        "note          g ∈ {{0,2}} or n ≤ 2; value taken at i = {i}"
                    )?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

enum SurfaceOrIntersection {
    Surface(SurfaceMinimum),
    Intersection(thurston::MinDilatation),
}

fn budget(flag: Option<u64>, default: u64) -> u64 {
    flag.unwrap_or(default)
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> Result<i32> {
    if a.assert && search::SearchReport::expected_min_trace(a.n).is_none() {
        return Err(Error::ExcludedTwo);
    }
    let config = SearchConfig {
        max_nodes: usize::try_from(budget(a.max_nodes, DEFAULT_MAX_NODES as u64))
            .unwrap_or(usize::MAX),
        jobs: a.jobs.map(|j| j as usize),
    };
    let enumeration = search::enumerate(a.n, a.max_len, &config)?;
    let report = search::SearchReport::from_enumeration(&enumeration);
    if let Some(path) = &a.out {
        std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    if let Some(path) = &a.histogram {
        enumeration.write_histogram_csv(std::fs::File::create(path)?)?;
    }
    match a.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => enumeration.write_histogram_csv(&mut *out)?,
        Format::Table => {
            writeln!(out, "n             {}", report.n)?;
            writeln!(out, "max length    {}", report.max_len)?;
            writeln!(out, "distinct      {}", report.distinct)?;
            match &report.min_trace {
                Some(t) => writeln!(out, "min |trace|   {t}")?,
                None => writeln!(out, "min |trace|   - (no hyperbolic element)")?,
            }
            let words: Vec<String> = report
                .witnesses
                .iter()
                .take(6)
                .map(|w| w.word.to_string())
                .collect();
            let more = report.witnesses.len().saturating_sub(words.len());
            let tail = if more > 0 {
                format!(" (+{more} more)")
            } else {
                String::new()
            };
            writeln!(out, "witnesses     {}{tail}", words.join(", "))?;
            let closure = match report.congruence_ok {
                Some(true) => "holds",
                Some(false) => "FAILS",
                None => "-",
            };
            writeln!(out, "congruence    {closure}")?;
        }
    }
    if a.assert {
        let ok = report.confirms_closed_form();
        if a.format == Format::Table {
            writeln!(out, "assert        {}", if ok { "pass" } else { "FAIL" })?;
        }
        return Ok(if ok { EXIT_OK } else { EXIT_ASSERT });
    }
    Ok(EXIT_OK)
}

fn read_perm(input: &PermInput) -> Result<Perm> {
    let text = match (&input.sigma, &input.file) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of --sigma, --file".into(),
            ))
        }
    };
    parse_perm(&text)
}

/// JSON if the text starts with `{`, cycle notation otherwise.
pub fn parse_perm(text: &str) -> Result<Perm> {
    let text = text.trim();
    if text.starts_with('{') {
        Ok(serde_json::from_str(text)?)
    } else {
        text.parse()
    }
}

/// JSON for `.json` paths, cycle notation otherwise.
fn write_perm(path: &Path, sigma: &Perm) -> Result<()> {
    let body = if path.extension().is_some_and(|e| e == "json") {
        serde_json::to_string(sigma)?
    } else {
        sigma.to_string()
    };
    std::fs::write(path, body + "\n")?;
    Ok(())
}

#[derive(Serialize)]
struct PermResult<'a> {
    sigma: String,
    permutation: &'a Perm,
    validation: filling::FillingValidation,
}

fn cmd_perm(action: &PermCommand, out: &mut dyn Write) -> Result<i32> {
    match action {
        PermCommand::Validate {
            input,
            genus,
            punctures,
            format,
        } => {
            let sigma = read_perm(input)?;
            let v = filling::validate_filling(&sigma, *genus, *punctures);
            match format {
                Format::Json => write_json(out, &v)?,
                Format::Csv => return Err(no_csv("perm validate")),
                Format::Table => writeln!(out, "{v}")?,
            }
            Ok(if v.is_valid() { EXIT_OK } else { EXIT_DOMAIN })
        }
        PermCommand::Search {
            genus,
            punctures,
            m,
            max_nodes,
            out: path,
            format,
        } => {
            let limit = budget(*max_nodes, DEFAULT_PERM_NODES);
            let outcome = filling::search_filling(*genus, *punctures, *m as usize, limit)?;
            let (status, nodes) = match &outcome {
                SearchOutcome::Found(_) => ("found", None),
                SearchOutcome::Exhausted { nodes } => ("none", Some(*nodes)),
                SearchOutcome::Inconclusive { nodes } => ("inconclusive", Some(*nodes)),
            };
            if let (Some(path), SearchOutcome::Found(sigma)) = (path, &outcome) {
                write_perm(path, sigma)?;
            }
            match format {
                Format::Json => {
                    let sigma = outcome.found();
                    write_json(
                        out,
                        &serde_json::json!({
                            "status": status,
                            "nodes": nodes,
                            "sigma": sigma.map(Perm::to_string),
                            "permutation": sigma,
                        }),
                    )?;
                }
                Format::Csv => return Err(no_csv("perm search")),
                Format::Table => match &outcome {
                    SearchOutcome::Found(sigma) => writeln!(out, "{sigma}")?,
                    SearchOutcome::Exhausted { nodes } => {
                        writeln!(out, "none: search space exhausted after {nodes} nodes")?
                    }
                    SearchOutcome::Inconclusive { nodes } => {
                        writeln!(out, "inconclusive: budget of {nodes} nodes spent")?
                    }
                },
            }
            Ok(match outcome {
                SearchOutcome::Inconclusive { .. } => EXIT_BUDGET,
                _ => EXIT_OK,
            })
        }
        PermCommand::DoubleBigon {
            input,
            genus,
            punctures,
            out: path,
            format,
        } => {
            let sigma = read_perm(input)?;
            let next = filling::double_bigon(&sigma, *genus, *punctures)?;
            let validation = filling::validate_filling(&next, *genus, punctures + 2);
            if let Some(path) = path {
                write_perm(path, &next)?;
            }
            match format {
                Format::Json => write_json(
                    out,
                    &PermResult {
                        sigma: next.to_string(),
                        permutation: &next,
                        validation,
                    },
                )?,
                Format::Csv => return Err(no_csv("perm double-bigon")),
                Format::Table => {
                    writeln!(out, "{next}")?;
                    writeln!(out, "{validation}")?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_multitwist(a: &MultitwistArgs, out: &mut dyn Write) -> Result<i32> {
    let matrix = IntersectionMatrix::from_path(&a.matrix)?;
    let word: TwistWord = a.word.parse()?;
    let report = multitwist::multitwist_classify(&word, &matrix)?;
    match a.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => return Err(no_csv("multitwist")),
        Format::Table => writeln!(out, "{report}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let rows = surface_table(&a.g_range.0, &a.n_range.0);
    match a.format {
        Format::Csv => write_csv_rows(out, &rows)?,
        Format::Json => write_json(out, &rows)?,
        Format::Table => {
            writeln!(
                out,
                "{:>3} {:>3} {:>4}  {:<24} {:<18} status",
                "g", "n", "i", "λ", "decimal"
            )?;
            for r in &rows {
                let i = r.intersection.map_or("-".into(), |i| i.to_string());
                writeln!(
                    out,
                    "{:>3} {:>3} {:>4}  {:<24} {:<18} {}",
                    r.genus,
                    r.punctures,
                    i,
                    r.value.as_deref().unwrap_or("-"),
                    r.decimal.as_deref().unwrap_or("-"),
                    r.status
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}
