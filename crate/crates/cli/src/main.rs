use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclic_hh_core::comparison::beta_n;
use cyclic_hh_core::complexes::decode;
use cyclic_hh_core::gerstenhaber::{closed_bracket, oracle_bracket};
use cyclic_hh_core::suite::{run_all, SuiteConfig, DEFAULT_SEED};
use cyclic_hh_core::{BasisClass, GradedElt, GroupCtx, Report};

/// Gerstenhaber brackets on the Hochschild cohomology of F_p[Z_m].
#[derive(Parser, Debug)]
#[command(name = "cyclic-hh", version)]
struct Cli {
    /// Group order m
    #[arg(long, global = true)]
    order: Option<usize>,

    /// Characteristic p (odd prime dividing m)
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,

    #[arg(long, global = true, default_value_t = 4)]
    max_degree: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for the randomized suites
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Also compute brackets through the Hochschild complex
    #[arg(long, global = true)]
    oracle: bool,

    /// Disable the resource guard
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every verification suite
    Verify,
    /// Bracket of two basis classes β^n⊗g^i
    Bracket {
        /// `n,i`
        #[arg(long)]
        left: Label,
        /// `n,i`
        #[arg(long)]
        right: Label,
    },
    /// Structure constants for all basis pairs up to --max-degree
    Table,
    /// Nonzero values of β^n
    Basis { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// `degree,exponent`
#[derive(Clone, Copy, Debug)]
struct Label {
    degree: usize,
    exp: i64,
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, i) = s.split_once(',').ok_or_else(|| format!("expected `n,i`, got `{s}`"))?;
        let degree = n.trim().parse().map_err(|e| format!("bad degree `{n}`: {e}"))?;
        let exp = i.trim().parse().map_err(|e| format!("bad exponent `{i}`: {e}"))?;
        Ok(Label { degree, exp })
    }
}

enum Failure {
    Usage(String),
    Suite,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    p: u32,
    order: usize,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    suites: Option<&'a [Report]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Vec<BasisClass>>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<bool>,
}

impl<'a, T: Serialize> Envelope<'a, T> {
    fn new(ctx: &GroupCtx, command: &'a str) -> Self {
        Self {
            p: ctx.p(),
            order: ctx.order(),
            command,
            result: None,
            suites: None,
            oracle: None,
            matches: None,
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    i: usize,
    m: usize,
    j: usize,
    out_degree: usize,
    out_exp: usize,
    coeff: u32,
}

#[derive(Serialize)]
struct BasisRow {
    tuple: Vec<usize>,
    value: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn context(cli: &Cli) -> Result<GroupCtx, Failure> {
    let order = cli.order.ok_or_else(|| Failure::Usage("--order is required".into()))?;
    let p = cli
        .characteristic
        .ok_or_else(|| Failure::Usage("--char is required".into()))?;
    let ctx = GroupCtx::new(order, p)?;
    if cli.max_degree < 1 {
        return Err(Failure::Usage("max-degree must be at least 1".into()));
    }
    Ok(if cli.force {
        ctx.with_entry_limit(u128::MAX)
    } else {
        ctx
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let ctx = context(cli)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Verify => verify(cli, &ctx, &mut out),
        Command::Bracket { left, right } => bracket(cli, &ctx, *left, *right, &mut out),
        Command::Table => table(cli, &ctx, &mut out),
        Command::Basis { n } => basis(cli, &ctx, *n, &mut out),
    }
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn emit_csv<T: Serialize>(out: &mut impl Write, rows: &[T]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn verify(cli: &Cli, ctx: &GroupCtx, out: &mut impl Write) -> Result<(), Failure> {
    let cfg = SuiteConfig {
        max_degree: cli.max_degree,
        seed: cli.seed,
    };
    let reports = run_all(ctx, cfg)?;
    match cli.format {
        Format::Json => {
            let mut env = Envelope::<()>::new(ctx, "verify");
            env.suites = Some(&reports);
            emit_json(out, &env)?;
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                suite: &'a str,
                checks: u64,
                failures: u64,
                passed: bool,
                input: &'a str,
                expected: &'a str,
                actual: &'a str,
            }
            let rows: Vec<Row> = reports
                .iter()
                .map(|r| {
                    let c = r.counterexample.as_ref();
                    Row {
                        suite: &r.name,
                        checks: r.checks,
                        failures: r.failures,
                        passed: r.passed(),
                        input: c.map_or("", |c| &c.input),
                        expected: c.map_or("", |c| &c.expected),
                        actual: c.map_or("", |c| &c.actual),
                    }
                })
                .collect();
            emit_csv(out, &rows)?;
        }
    }
    for r in &reports {
        eprintln!("{r}");
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Suite)
    }
}

fn terms(e: &GradedElt) -> Vec<BasisClass> {
    e.terms().collect()
}

fn bracket(cli: &Cli, ctx: &GroupCtx, left: Label, right: Label, out: &mut impl Write) -> Result<(), Failure> {
    let a = BasisClass::new(ctx, left.degree, left.exp);
    let b = BasisClass::new(ctx, right.degree, right.exp);
    let closed = closed_bracket(ctx, a, b);
    let oracle = if cli.oracle {
        Some(oracle_bracket(ctx, a, b)?)
    } else {
        None
    };
    let matches = oracle.as_ref().map(|o| *o == closed);
    match cli.format {
        Format::Json => {
            let mut env = Envelope::new(ctx, "bracket");
            env.result = Some(terms(&closed));
            env.oracle = oracle.as_ref().map(terms);
            env.matches = matches;
            emit_json(out, &env)?;
        }
        Format::Csv => emit_csv(out, &terms(&closed))?,
    }
    if matches == Some(false) {
        eprintln!("closed form {closed} differs from oracle {}", oracle.unwrap());
        return Err(Failure::Suite);
    }
    Ok(())
}

fn table(cli: &Cli, ctx: &GroupCtx, out: &mut impl Write) -> Result<(), Failure> {
    let m = ctx.order();
    let d = cli.max_degree;
    let mut rows = Vec::with_capacity((d * m).pow(2));
    for n in 1..=d {
        for i in 0..m {
            for k in 1..=d {
                for j in 0..m {
                    let a = BasisClass::new(ctx, n, i as i64);
                    let b = BasisClass::new(ctx, k, j as i64);
                    let coeff = closed_bracket(ctx, a, b).terms().next().map_or(0, |c| c.coeff.value());
                    rows.push(TableRow {
                        n,
                        i,
                        m: k,
                        j,
                        out_degree: n + k - 1,
                        out_exp: (i + j) % m,
                        coeff,
                    });
                }
            }
        }
    }
    match cli.format {
        Format::Json => {
            let mut env = Envelope::new(ctx, "table");
            env.result = Some(rows);
            emit_json(out, &env)
        }
        Format::Csv => emit_csv(out, &rows),
    }
}

fn basis(cli: &Cli, ctx: &GroupCtx, n: usize, out: &mut impl Write) -> Result<(), Failure> {
    let beta = beta_n(ctx, n)?;
    let rows: Vec<BasisRow> = beta
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(idx, v)| BasisRow {
            tuple: decode(ctx.order(), n, idx).iter().map(|x| x.exp()).collect(),
            value: v.value(),
        })
        .collect();
    match cli.format {
        Format::Json => {
            let mut env = Envelope::new(ctx, "basis");
            env.result = Some(rows);
            emit_json(out, &env)
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat {
                tuple: String,
                value: u32,
            }
            let flat: Vec<Flat> = rows
                .iter()
                .map(|r| Flat {
                    tuple: r.tuple.iter().map(ToString::to_string).collect::<Vec<_>>().join("|"),
                    value: r.value,
                })
                .collect();
            emit_csv(out, &flat)
        }
    }
}
