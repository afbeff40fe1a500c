use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lrkit::enumeration::{
    enum_lrs, enum_rec, enum_spt, enum_ssyt, sweep, verify_bijection, Certificate,
    VerificationReport, DEFAULT_BUDGET,
};
use lrkit::expansion::expand;
use lrkit::lr_map::lr_aii;
use lrkit::sundaram::{blacklozenge, lozenge};
use lrkit::{Partition, SkewShape, SkewTableau};
use serde::{Deserialize, Serialize};
use serde_json::Value;

mod document;

use document::{Kind, TableauDocument};

/// Type AII Littlewood-Richardson map on semistandard tableaux over [2n].
///
/// Exit status: 0 on success, 1 when a verification finds failures,
/// 2 on invalid input.
#[derive(Parser)]
#[command(name = "lrkit", version)]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Read input from this file instead of stdin.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long = "out", value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Map a semistandard tableau T to (P, Q) by iterating successors.
    Map {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Rebuild T from P and Q. Reads the output of `map` unless --p and --q are given.
    Invert {
        #[arg(long)]
        n: usize,
        /// Document holding the symplectic tableau P.
        #[arg(long, value_name = "PATH", requires = "q")]
        p: Option<PathBuf>,
        /// Document holding the recording tableau Q.
        #[arg(long, value_name = "PATH", requires = "p")]
        q: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Check the bijection SST_2n(λ) ↔ ⊔ SpT_2n(μ) × Rec_2n(λ/μ) exhaustively.
    Verify {
        #[arg(long)]
        n: usize,
        /// A single shape, e.g. 2,2. Without it every λ with |λ| ≤ budget is checked.
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lambda: Option<Partition>,
        /// Largest |λ| in a sweep.
        #[arg(long, env = "LRKIT_BUDGET")]
        budget: Option<usize>,
        /// Permit sweeps beyond |λ| ≤ 6 or n ≤ 2.
        #[arg(long)]
        allow_large: bool,
        /// Where to write certificates when a check fails.
        #[arg(long, value_name = "PATH", default_value = "lrkit-certificates.json")]
        certificates: PathBuf,
        /// Write the full JSON reports here.
        #[arg(long = "out", value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// List every tableau of a family as newline-delimited JSON.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long, value_parser = parse_partition)]
        outer: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: Partition,
        #[arg(long, required_unless_present = "m")]
        n: Option<usize>,
        /// Alphabet size for `ssyt` when no n is given.
        #[arg(long, conflicts_with = "n")]
        m: Option<u32>,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
        #[arg(long = "out", value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Relabel an LRS tableau to its recording tableau, and apply the
    /// rotate-and-transpose symmetry.
    Symmetry {
        #[arg(long)]
        n: usize,
        /// Rows of the bounding rectangle (default ℓ(λ)).
        #[arg(long, requires = "cols")]
        rows: Option<usize>,
        /// Columns of the bounding rectangle (default λ_1).
        #[arg(long, requires = "rows")]
        cols: Option<usize>,
        #[command(flatten)]
        io: Io,
    },
    /// Draw documents as text grids.
    Render {
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ssyt,
    Spt,
    Lrs,
    Rec,
}

#[derive(Serialize, Deserialize)]
struct MapOutput {
    p: TableauDocument,
    q: TableauDocument,
    #[serde(default)]
    chain: Vec<Vec<usize>>,
    #[serde(default)]
    steps: usize,
}

#[derive(Serialize)]
struct SymmetryOutput {
    lozenge: TableauDocument,
    blacklozenge: TableauDocument,
}

#[derive(Serialize)]
struct CertificateFile<'a> {
    n: usize,
    lambda: &'a Partition,
    certificates: &'a [Certificate],
}

/// `2,2`, `(2,2)` or the empty string.
fn parse_partition(s: &str) -> Result<Partition, String> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = body
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

enum Outcome {
    Ok,
    Failed,
}

struct Output {
    pretty: bool,
    sink: Box<dyn Write>,
}

impl Output {
    fn open(path: Option<&PathBuf>, pretty: bool) -> Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => {
                Box::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)
            }
            None => Box::new(io::stdout().lock()),
        };
        Ok(Output { pretty, sink })
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)?
        } else {
            serde_json::to_string(value)?
        };
        writeln!(self.sink, "{text}")?;
        Ok(())
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.sink, "{text}")?;
        Ok(())
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

fn read_document(path: Option<&PathBuf>) -> Result<TableauDocument> {
    document::parse(&read_input(path)?)
}

fn cmd_map(n: usize, io: &Io, pretty: bool) -> Result<Outcome> {
    let t = read_document(io.input.as_ref())?.tableau_for(n)?;
    let trace = lr_aii(&t, n)?;
    let out = MapOutput {
        p: TableauDocument::new(&trace.p_tableau, Some(n), Kind::Symplectic),
        q: TableauDocument::new(&trace.q_tableau, Some(n), Kind::Rec),
        chain: trace
            .shape_chain
            .iter()
            .map(|s| s.parts().to_vec())
            .collect(),
        steps: trace.steps,
    };
    Output::open(io.output.as_ref(), pretty)?.json(&out)?;
    Ok(Outcome::Ok)
}

fn cmd_invert(
    n: usize,
    p: Option<&PathBuf>,
    q: Option<&PathBuf>,
    io: &Io,
    pretty: bool,
) -> Result<Outcome> {
    let (p, q) = match (p, q) {
        (Some(p), Some(q)) => (read_document(Some(p))?, read_document(Some(q))?),
        _ => {
            let pair: MapOutput = serde_json::from_str(&read_input(io.input.as_ref())?)
                .context("expected a JSON object with fields p and q")?;
            (pair.p, pair.q)
        }
    };
    let t = expand(&p.tableau_for(n)?, &q.tableau_for(n)?, n)?;
    Output::open(io.output.as_ref(), pretty)?.json(&TableauDocument::new(
        &t,
        Some(n),
        Kind::Ssyt,
    ))?;
    Ok(Outcome::Ok)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    n: usize,
    lambda: Option<&Partition>,
    budget: Option<usize>,
    allow_large: bool,
    certificates: &PathBuf,
    output: Option<&PathBuf>,
    pretty: bool,
) -> Result<Outcome> {
    if n == 0 {
        bail!("n must be positive");
    }
    let reports: Vec<VerificationReport> = match lambda {
        Some(lam) => {
            if lam.len() > 2 * n {
                bail!("ℓ({lam}) = {} exceeds 2n = {}", lam.len(), 2 * n);
            }
            vec![verify_bijection(lam, n)]
        }
        None => {
            let budget = budget.unwrap_or(DEFAULT_BUDGET);
            if (budget > DEFAULT_BUDGET || n > 2) && !allow_large {
                bail!("a sweep with |λ| ≤ {budget} and n = {n} is beyond |λ| ≤ {DEFAULT_BUDGET}, n ≤ 2; pass --allow-large");
            }
            sweep(n, budget)
        }
    };

    let mut stdout = Output::open(None, pretty)?;
    for r in &reports {
        let status = if r.is_ok() {
            "OK".to_string()
        } else {
            format!("FAIL ({} certificates)", r.roundtrip_failures.len())
        };
        stdout.line(&format!(
            "λ={} n={} lhs={} rhs={} {status}",
            r.lambda,
            r.n,
            r.lhs_count,
            r.rhs_count()
        ))?;
    }
    if let Some(path) = output {
        Output::open(Some(path), pretty)?.json(&reports)?;
    }

    let failed: Vec<CertificateFile> = reports
        .iter()
        .filter(|r| !r.is_ok())
        .map(|r| CertificateFile {
            n: r.n,
            lambda: &r.lambda,
            certificates: &r.roundtrip_failures,
        })
        .collect();
    if failed.is_empty() {
        return Ok(Outcome::Ok);
    }
    Output::open(Some(certificates), true)?.json(&failed)?;
    eprintln!("certificates written to {}", certificates.display());
    Ok(Outcome::Failed)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    kind: Family,
    outer: &Partition,
    inner: &Partition,
    n: Option<usize>,
    m: Option<u32>,
    count: bool,
    output: Option<&PathBuf>,
    pretty: bool,
) -> Result<Outcome> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let need_n = || n.with_context(|| "--n is required for this family");
    let (items, doc_kind): (Box<dyn Iterator<Item = SkewTableau>>, Kind) = match kind {
        Family::Ssyt => {
            let m = match (n, m) {
                (Some(n), _) => 2 * n as u32,
                (None, Some(m)) => m,
                (None, None) => bail!("--n or --m is required"),
            };
            (Box::new(enum_ssyt(&shape, m)), Kind::Ssyt)
        }
        Family::Spt => {
            if !shape.is_straight() {
                bail!("symplectic tableaux have straight shape; drop --inner");
            }
            (Box::new(enum_spt(outer, need_n()?)), Kind::Symplectic)
        }
        Family::Lrs => (Box::new(enum_lrs(&shape, need_n()?)), Kind::Lrs),
        Family::Rec => (Box::new(enum_rec(&shape, need_n()?)), Kind::Rec),
    };
    let mut out = Output::open(output, pretty)?;
    if count {
        out.line(&items.count().to_string())?;
    } else {
        for t in items {
            out.json(&TableauDocument::new(&t, n, doc_kind))?;
        }
    }
    Ok(Outcome::Ok)
}

fn cmd_symmetry(
    n: usize,
    rows: Option<usize>,
    cols: Option<usize>,
    io: &Io,
    pretty: bool,
) -> Result<Outcome> {
    let t = read_document(io.input.as_ref())?.tableau_for(n)?;
    let q = lozenge(&t, n)?;
    let rows = rows.unwrap_or(t.outer().len());
    let cols = cols.unwrap_or(t.outer().first_part());
    let sym = blacklozenge(&t, n, rows, cols)?;
    let out = SymmetryOutput {
        lozenge: TableauDocument::new(&q, Some(n), Kind::Rec),
        blacklozenge: TableauDocument::new(&sym, Some(n), Kind::Lr),
    };
    Output::open(io.output.as_ref(), pretty)?.json(&out)?;
    Ok(Outcome::Ok)
}

/// Renders a document, an object whose values are documents (the output
/// of `map` or `symmetry`), or a stream of either.
fn cmd_render(io: &Io) -> Result<Outcome> {
    let text = read_input(io.input.as_ref())?;
    let values: Vec<Value> = serde_json::Deserializer::from_str(&text)
        .into_iter::<Value>()
        .collect::<Result<_, _>>()
        .context("malformed JSON")?;
    let mut out = Output::open(io.output.as_ref(), false)?;
    for (k, value) in values.into_iter().enumerate() {
        if k > 0 {
            out.line("")?;
        }
        let doc_of = |v: Value| -> Result<SkewTableau> {
            serde_json::from_value::<TableauDocument>(v)
                .context("malformed tableau document")?
                .to_tableau()
        };
        match value {
            Value::Object(map) if !map.contains_key("outer") => {
                let mut first = true;
                for (key, v) in map {
                    if !v.is_object() {
                        continue;
                    }
                    if !first {
                        out.line("")?;
                    }
                    first = false;
                    out.line(&format!("{key}:"))?;
                    write!(out.sink, "{}", document::render(&doc_of(v)?))?;
                }
            }
            v => write!(out.sink, "{}", document::render(&doc_of(v)?))?,
        }
    }
    Ok(Outcome::Ok)
}

fn run(cli: Cli) -> Result<Outcome> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Map { n, io } => cmd_map(*n, io, pretty),
        Command::Invert { n, p, q, io } => cmd_invert(*n, p.as_ref(), q.as_ref(), io, pretty),
        Command::Verify {
            n,
            lambda,
            budget,
            allow_large,
            certificates,
            output,
        } => cmd_verify(
            *n,
            lambda.as_ref(),
            *budget,
            *allow_large,
            certificates,
            output.as_ref(),
            pretty,
        ),
        Command::Enumerate {
            kind,
            outer,
            inner,
            n,
            m,
            count,
            output,
        } => cmd_enumerate(*kind, outer, inner, *n, *m, *count, output.as_ref(), pretty),
        Command::Symmetry { n, rows, cols, io } => cmd_symmetry(*n, *rows, *cols, io, pretty),
        Command::Render { io } => cmd_render(io),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
