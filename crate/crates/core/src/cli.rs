//! Command-line front end. [`run`] parses arguments, writes the rendered
//! result and returns the process exit code (0 ok, 1 failed check, 2 usage).

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::digits::trick_certificate;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::ideals::{rank_report, CyclicGroupSpec};
use crate::matrix::{IntMatrix, RenderFormat};
use crate::oracle::{verify_engine, DEFAULT_BUDGET};
use crate::quantum::all_relations;
use crate::ring::RingElement;
use crate::tensor::tensor;
use crate::ubasis::{change_of_basis, cousins, u_element, Direction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "greenring",
    version,
    about = "Exact computations in the representation ring of cyclic groups in characteristic p"
)]
pub struct Cli {
    /// Characteristic (a prime).
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Exponent, the group order is p^alpha.
    #[arg(long, global = true)]
    alpha: Option<u32>,
    /// The integer argument of cousins, trick and rank.
    #[arg(long, global = true)]
    n: Option<u64>,
    #[arg(long, global = true, default_value_t = 10)]
    base: u64,
    /// Largest r*s handed to the oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    /// Only for `matrix`.
    Pbm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    VToU,
    UToV,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose V_r (x) V_s.
    Tensor { r: u64, s: u64 },
    /// Expand U_r in the V-basis.
    Ubasis { r: u64 },
    /// List the cousins of n in the given base.
    Cousins { n_pos: Option<u64> },
    /// Change-of-basis matrix between V and U.
    Matrix {
        #[arg(long, value_enum, default_value_t = DirectionArg::VToU)]
        direction: DirectionArg,
    },
    /// Digit identity certificate for n.
    Trick { n_pos: Option<u64> },
    /// Rank of the non-induced quotient for C_n in characteristic p.
    Rank { n_pos: Option<u64> },
    /// Compare the tensor engine with the linear-algebra oracle.
    Verify,
    /// Evaluate the relations F_0, .., F_(alpha-1).
    Relations,
}

struct Output {
    body: Vec<u8>,
    code: i32,
}

impl Output {
    fn ok(body: impl Into<Vec<u8>>) -> Self {
        Output {
            body: body.into(),
            code: EXIT_OK,
        }
    }

    fn line(s: impl std::fmt::Display) -> Self {
        Output::ok(format!("{s}\n"))
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.body).map_err(|e| e.to_string()),
        None => stdout.write_all(&out.body).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    out.code
}

fn group(cli: &Cli) -> Result<GroupSpec> {
    let p = cli
        .p
        .ok_or_else(|| Error::Parse("--p is required".into()))?;
    let alpha = cli
        .alpha
        .ok_or_else(|| Error::Parse("--alpha is required".into()))?;
    GroupSpec::new(p, alpha)
}

fn integer(cli: &Cli, positional: Option<u64>) -> Result<u64> {
    positional
        .or(cli.n)
        .ok_or_else(|| Error::Parse("an integer argument (or --n) is required".into()))
}

fn render_element(x: &RingElement, format: Format) -> Output {
    match format {
        Format::Json => Output::line(x.to_json_string()),
        Format::Csv => {
            let rows: String = x.terms().map(|(i, c)| format!("{i},{c}\n")).collect();
            Output::ok(rows)
        }
        _ => Output::line(x),
    }
}

fn matrix_json(m: &IntMatrix) -> String {
    let rows: Vec<Vec<serde_json::Value>> = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| serde_json::from_str(&x.to_string()).expect("integer"))
                .collect()
        })
        .collect();
    serde_json::to_string(&rows).expect("rows serialize")
}

fn execute(cli: &Cli) -> Result<Output> {
    if cli.format == Format::Pbm && !matches!(cli.command, Command::Matrix { .. }) {
        return Err(Error::Parse(
            "pbm output is only available for matrix".into(),
        ));
    }
    match &cli.command {
        Command::Tensor { r, s } => Ok(render_element(&tensor(group(cli)?, *r, *s)?, cli.format)),
        Command::Ubasis { r } => Ok(render_element(&u_element(group(cli)?, *r)?, cli.format)),
        Command::Cousins { n_pos } => {
            let set = cousins(integer(cli, *n_pos)?, cli.base)?;
            let items: Vec<u64> = set.into_iter().collect();
            Ok(match cli.format {
                Format::Json => Output::line(serde_json::to_string(&items).expect("list")),
                Format::Csv => Output::line(
                    items
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(","),
                ),
                _ => Output::line(
                    items
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                ),
            })
        }
        Command::Matrix { direction } => {
            let direction = match direction {
                DirectionArg::VToU => Direction::VToU,
                DirectionArg::UToV => Direction::UToV,
            };
            let m = change_of_basis(group(cli)?, direction)?;
            Ok(match cli.format {
                Format::Json => Output::line(matrix_json(&m)),
                Format::Csv => Output::ok(m.render(RenderFormat::Csv)?),
                Format::Pbm => Output::ok(m.render(RenderFormat::Pbm)?),
                Format::Text => Output::ok(m.render(RenderFormat::Text)?),
            })
        }
        Command::Trick { n_pos } => {
            let cert = trick_certificate(integer(cli, *n_pos)?, cli.base)?;
            Ok(match cli.format {
                Format::Json => Output::line(cert.to_json_string()),
                Format::Csv => {
                    let mut body = String::from("j,product\n");
                    for t in &cert.terms {
                        body.push_str(&format!("{},{}\n", t.j, t.product));
                    }
                    Output::ok(body)
                }
                _ => Output::line(&cert),
            })
        }
        Command::Rank { n_pos } => {
            let p = cli
                .p
                .ok_or_else(|| Error::Parse("--p is required".into()))?;
            let report = rank_report(CyclicGroupSpec::new(integer(cli, *n_pos)?, p)?);
            let ok = report.quotient_rank == report.phi_n && report.torsion_free();
            let mut out = match cli.format {
                Format::Json => Output::line(report.to_json_string()),
                Format::Csv => Output::ok(format!(
                    "n,p,ideal_rank,quotient_rank,phi_n\n{},{},{},{},{}\n",
                    report.n, report.p, report.ideal_rank, report.quotient_rank, report.phi_n
                )),
                _ => Output::line(format!(
                    "n {} p {}: quotient_rank {}, phi {}, quotient {}",
                    report.n,
                    report.p,
                    report.quotient_rank,
                    report.phi_n,
                    if report.torsion_free() {
                        "torsion-free"
                    } else {
                        "has torsion"
                    }
                )),
            };
            if !ok {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(out)
        }
        Command::Verify => {
            let g = group(cli)?;
            let report = verify_engine(g, cli.budget);
            let n_bad = report.mismatches.len();
            let mut out = match cli.format {
                Format::Json => Output::line(json!({
                    "p": g.p(),
                    "alpha": g.alpha(),
                    "pairs_checked": report.pairs_checked,
                    "mismatches": report.mismatches,
                })),
                _ => {
                    let mut body = format!(
                        "{g}: {} pairs checked, {n_bad} mismatches\n",
                        report.pairs_checked
                    );
                    for m in &report.mismatches {
                        body.push_str(&format!(
                            "  V{} x V{}: engine {}, oracle {:?}\n",
                            m.r,
                            m.s,
                            m.got,
                            m.expected.blocks()
                        ));
                    }
                    Output::ok(body)
                }
            };
            if !report.passed() {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(out)
        }
        Command::Relations => {
            let g = group(cli)?;
            let values = all_relations(g);
            let names: Vec<String> = (0..values.len()).map(|j| format!("F{j}")).collect();
            let failing: Vec<usize> = (0..values.len())
                .filter(|&j| !values[j].is_zero())
                .collect();
            let mut out = match cli.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = values
                        .iter()
                        .zip(&names)
                        .map(|(v, name)| json!({"name": name, "vanishes": v.is_zero(), "value": v}))
                        .collect();
                    Output::line(json!({"p": g.p(), "alpha": g.alpha(), "relations": items}))
                }
                _ if failing.is_empty() => Output::line(format!("{} all vanish", names.join(" "))),
                _ => {
                    let body: String = failing
                        .iter()
                        .map(|&j| format!("{} = {}\n", names[j], values[j]))
                        .collect();
                    Output::ok(body)
                }
            };
            if !failing.is_empty() {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(out)
        }
    }
}
