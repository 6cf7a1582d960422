use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use z3hilb::dyson::{build, phi, stair_report};
use z3hilb::insertion::split_f_inv;
use z3hilb::series::{lhs_sum_jobs, product_formula};
use z3hilb::verify::run_check;
use z3hilb::{BiSeries, Check, Composition12, Error, Partition, ProductFormula, VerificationReport, WeightKind};

#[derive(Debug, Parser)]
#[command(name = "z3hilb", version, about = "Mod-3 arm/leg weights on partitions and their q,t-series")]
struct Cli {
    /// Worker threads; never changes the output.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Weight {
    Wt,
    WtTilde,
}

impl From<Weight> for WeightKind {
    fn from(w: Weight) -> Self {
        match w {
            Weight::Wt => WeightKind::Wt,
            Weight::WtTilde => WeightKind::WtTilde,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Product {
    Conj2Rhs,
    Conj3Rhs,
    Correction,
    DblPrimeWtTilde,
    DblPrimeWt,
}

impl From<Product> for ProductFormula {
    fn from(p: Product) -> Self {
        match p {
            Product::Conj2Rhs => ProductFormula::Conj2Rhs,
            Product::Conj3Rhs => ProductFormula::Conj3Rhs,
            Product::Correction => ProductFormula::Correction,
            Product::DblPrimeWtTilde => ProductFormula::LambdaDblPrimeWtTilde,
            Product::DblPrimeWt => ProductFormula::LambdaDblPrimeWt,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficient table of the weight generating series, by enumeration.
    Coeffs {
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Weight::WtTilde)]
        weight: Weight,
    },
    /// Coefficient table of one of the product formulas.
    Product {
        #[arg(value_enum)]
        which: Product,
        #[arg(long)]
        max_n: u32,
    },
    /// Run a verification check; exit 0 on pass, 1 on counterexample.
    Verify {
        #[arg(value_parser = parse_check)]
        check: Check,
        /// Defaults: conj2/conj3 30, prop-leg 24, transport 16, top-coefficients 29, structure 16.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Decompose a partition into its {1,2}-composition.
    Decompose { partition: Partition },
    /// Build the partition of a {1,2}-composition.
    Build { composition: Composition12 },
    /// Report whether a {1,2}-composition is admissible.
    Admissible { composition: Composition12 },
    /// Weight of a partition.
    Weight {
        partition: Partition,
        #[arg(long, value_enum, default_value_t = Weight::WtTilde)]
        weight: Weight,
    },
    /// Boundary label sequence of a partition.
    Boundary { partition: Partition },
    /// Stair-step property and landing number.
    Stair { partition: Partition },
    /// Split a partition into its Λ′ and Λ″ factors.
    Split { partition: Partition },
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse()
}

fn series_output(s: &BiSeries, format: Format) -> String {
    match format {
        Format::Table => s.to_table(),
        Format::Csv => s.to_csv(),
        Format::Json => s.to_json_string(),
    }
}

fn report_output(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", r.to_json()),
        Format::Csv => format!(
            "check_name,max_n,status,items_checked\n{},{},{},{}\n",
            r.check_name,
            r.max_n,
            if r.passed() { "pass" } else { "fail" },
            r.items_checked
        ),
        Format::Table => {
            let mut out = format!(
                "{} up to n={}: {} ({} items)\n",
                r.check_name,
                r.max_n,
                if r.passed() { "pass" } else { "FAIL" },
                r.items_checked
            );
            if let Some(cx) = &r.counterexample {
                out.push_str(&format!(
                    "counterexample: {}\n  expected: {}\n  actual:   {}\n",
                    cx.object, cx.expected, cx.actual
                ));
            }
            out
        }
    }
}

/// Text to emit plus the exit code.
fn run(cli: &Cli) -> Result<(String, u8), Error> {
    let jobs = cli.jobs as usize;
    let out = match &cli.command {
        Command::Coeffs { max_n, weight } => series_output(&lhs_sum_jobs((*weight).into(), *max_n, jobs), cli.format),
        Command::Product { which, max_n } => series_output(&product_formula((*which).into(), *max_n), cli.format),
        Command::Verify { check, max_n } => {
            let report = run_check(*check, max_n.unwrap_or(check.default_max_n()), jobs)?;
            let code = if report.passed() { 0 } else { 1 };
            return Ok((report_output(&report, cli.format), code));
        }
        Command::Decompose { partition } => format!("{}\n", phi(partition)),
        Command::Build { composition } => match build(composition) {
            Ok(lam) => format!("{lam}\n"),
            Err(e) => return Ok((format!("{e}\n"), 1)),
        },
        Command::Admissible { composition } => match build(composition) {
            Ok(lam) => format!("admissible (builds {lam})\n"),
            Err(Error::Inadmissible { step }) => format!("inadmissible (fails at step {step})\n"),
            Err(e) => return Err(e),
        },
        Command::Weight { partition, weight } => format!("{}\n", partition.weight((*weight).into())),
        Command::Boundary { partition } => {
            let labels = partition.boundary_sequence();
            if labels.is_empty() {
                "-\n".to_owned()
            } else {
                let parts: Vec<String> = labels.iter().map(u32::to_string).collect();
                format!("{}\n", parts.join(","))
            }
        }
        Command::Stair { partition } => {
            let r = stair_report(partition);
            if r.is_stair {
                format!("stair-step, landing {}\n", r.landing)
            } else {
                "not stair-step\n".to_owned()
            }
        }
        Command::Split { partition } => {
            let (lp, ldp) = split_f_inv(partition);
            format!("{lp} x {ldp}\n")
        }
    };
    Ok((out, 0))
}

fn emit(text: &str, output: Option<&PathBuf>) -> io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            if let Err(e) = emit(&text, cli.output.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
