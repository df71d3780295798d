//! Batch front end for the `regpart` library.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! everything that would be written to stdout and stderr, so the binary is a
//! thin wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 on success, 1 when a verified identity has a failing row,
//! 2 on usage or domain errors.

pub mod args;
pub mod render;

use std::ffi::OsString;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, CountArgs, Format, MapArg, PairsArgs, SeriesArgs, TraceArgs, VerifyArgs};
use regpart::maps::{
    glaisher_phi, glaisher_phi_inv, psi, sigma, sigma_inv, statistics,
};
use regpart::{count_table, gf, pair_table, verify_identity, Action, IdentityTag, Partition, Step};
use render::{Statistics, TraceView};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(regpart::Error),
}

impl From<regpart::Error> for Failure {
    fn from(e: regpart::Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = Result<Outcome, Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Count(a) => count(a, cli.format),
        Command::Verify(a) => verify(a, cli.format),
        Command::Pairs(a) => pairs(a, cli.format),
        Command::Trace(a) => trace(a, cli.format),
        Command::Series(a) => series(a, cli.format),
    };
    result.unwrap_or_else(|failure| {
        let msg = match failure {
            Failure::Usage(m) => format!("error: {m}\n"),
            Failure::Domain(e) => format!("error: {e}\n"),
        };
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    })
}

#[derive(Clone, Copy)]
enum Param {
    Ell,
    R,
}

impl Param {
    fn flag(self) -> &'static str {
        match self {
            Param::Ell => "ell",
            Param::R => "r",
        }
    }
}

/// The one parameter a command needs; the other flag must be absent.
fn pick(need: Param, ell: Option<u64>, r: Option<u64>, what: &str) -> Result<u64, Failure> {
    let (want, other, other_name) = match need {
        Param::Ell => (ell, r, "r"),
        Param::R => (r, ell, "ell"),
    };
    if other.is_some() {
        return Err(Failure::Usage(format!("{what} does not take --{other_name}")));
    }
    want.ok_or_else(|| Failure::Usage(format!("{what} requires --{}", need.flag())))
}

fn count(a: &CountArgs, format: Format) -> CmdResult {
    let stat: regpart::Stat = a.stat.into();
    let need = if stat.takes_ell() { Param::Ell } else { Param::R };
    let param = pick(need, a.ell, a.r, &format!("--stat {}", stat.name()))?;
    let (lo, hi) = match (a.n, a.max_n) {
        (Some(n), None) => (n, n),
        (None, Some(m)) => (0, m),
        _ => return Err(Failure::Usage("count requires --n or --max-n".into())),
    };
    let values = count_table(stat, param, hi, a.method.into())?;
    let rows: Vec<(u64, &regpart::BigInt)> = (lo..=hi).map(|n| (n, &values[n as usize])).collect();
    let out = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                n: u64,
                value: serde_json::Value,
            }
            #[derive(Serialize)]
            struct Body {
                stat: &'static str,
                param_name: &'static str,
                param: u64,
                method: regpart::CountMethod,
                rows: Vec<Row>,
            }
            render::json(&Body {
                stat: stat.name(),
                param_name: need.flag(),
                param,
                method: a.method.into(),
                rows: rows
                    .iter()
                    .map(|&(n, v)| Row {
                        n,
                        value: render::int(v),
                    })
                    .collect(),
            })
        }
        Format::Table | Format::Tsv => {
            let header = format!("{}({}={param})", stat.name(), need.flag());
            let cells: Vec<Vec<String>> =
                rows.iter().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect();
            if format == Format::Tsv {
                render::tsv(&["n", &header], &cells)
            } else {
                render::table(&["n", &header], &cells)
            }
        }
    };
    Ok(Outcome::ok(out))
}

fn verify(a: &VerifyArgs, format: Format) -> CmdResult {
    let tag: IdentityTag = a.theorem.into();
    let what = format!("--theorem {}", tag.name());
    let param = match tag {
        IdentityTag::T1 | IdentityTag::T2 | IdentityTag::ParityCor => pick(Param::Ell, a.ell, a.r, &what)?,
        IdentityTag::T3 => pick(Param::R, a.ell, a.r, &what)?,
        IdentityTag::Euler | IdentityTag::Hickerson => {
            if a.ell.is_some() || a.r.is_some() {
                return Err(Failure::Usage(format!("{what} takes neither --ell nor --r")));
            }
            0
        }
    };
    let report = verify_identity(tag, param, a.max_n)?;
    let stdout = match format {
        Format::Table => render::report_table(&report),
        Format::Tsv => render::tsv(
            &["n", "lhs", "rhs", "pass"],
            &render::report_rows(&report, |p| p.to_string()),
        ),
        Format::Json => render::report_json(&report),
    };
    Ok(Outcome {
        code: if report.pass { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn pairs(a: &PairsArgs, format: Format) -> CmdResult {
    let table = pair_table(a.ell, a.n)?;
    Ok(Outcome::ok(match format {
        Format::Table => render::pairs_table(&table),
        Format::Tsv => render::pairs_tsv(&table),
        Format::Json => render::pairs_json(&table),
    }))
}

fn trace(a: &TraceArgs, format: Format) -> CmdResult {
    let lambda: Partition = a.partition.parse()?;
    let view = match a.map {
        MapArg::Psi => {
            let ell = pick(Param::Ell, a.ell, a.r, "--map psi")?;
            let (output, case) = psi(&lambda, ell)?;
            let (e, t) = statistics(&lambda, ell)?;
            let (action, part) = match case {
                regpart::CaseLabel::MergeCase => (Action::Merge, t),
                regpart::CaseLabel::SplitCase => (Action::Split, e),
            };
            TraceView {
                map: "psi",
                param_name: "ell",
                param: ell,
                input: lambda.clone(),
                output: output.clone(),
                case: Some(case.name()),
                statistics: Some(Statistics { e, t }),
                steps: vec![Step {
                    action,
                    part,
                    result: output.clone(),
                }],
                chain: vec![lambda, output],
            }
        }
        MapArg::Sigma | MapArg::SigmaInv => {
            let ell = pick(Param::Ell, a.ell, a.r, "--map sigma")?;
            let (name, (_, trace)) = if a.map == MapArg::Sigma {
                ("sigma", sigma(&lambda, ell)?)
            } else {
                ("sigma-inv", sigma_inv(&lambda, ell)?)
            };
            TraceView::from_trace(name, "ell", ell, trace)
        }
        MapArg::Glaisher | MapArg::GlaisherInv => {
            let r = pick(Param::R, a.ell, a.r, "--map glaisher")?;
            let (name, (_, trace)) = if a.map == MapArg::Glaisher {
                ("glaisher", glaisher_phi(&lambda, r)?)
            } else {
                ("glaisher-inv", glaisher_phi_inv(&lambda, r)?)
            };
            TraceView::from_trace(name, "r", r, trace)
        }
    };
    Ok(Outcome::ok(match format {
        Format::Table => view.table(),
        Format::Tsv => view.tsv(),
        Format::Json => render::json(&view),
    }))
}

fn series(a: &SeriesArgs, format: Format) -> CmdResult {
    let need = if a.kind.takes_ell() { Param::Ell } else { Param::R };
    let param = pick(need, a.ell, a.r, "this series kind")?;
    let s = gf(a.kind.with_param(param), a.max_n as usize)?;
    let cells: Vec<Vec<String>> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| vec![n.to_string(), c.to_string()])
        .collect();
    Ok(Outcome::ok(match format {
        // the plain dump: one `n<TAB>coefficient` line per degree
        Format::Table => cells.iter().map(|c| format!("{}\t{}\n", c[0], c[1])).collect(),
        Format::Tsv => render::tsv(&["n", "coefficient"], &cells),
        Format::Json => {
            #[derive(Serialize)]
            struct Body {
                kind: String,
                param_name: &'static str,
                param: u64,
                order: usize,
                coefficients: Vec<serde_json::Value>,
            }
            render::json(&Body {
                kind: format!("{:?}", a.kind).to_lowercase(),
                param_name: need.flag(),
                param,
                order: s.order(),
                coefficients: s.coeffs().iter().map(render::int).collect(),
            })
        }
    }))
}
