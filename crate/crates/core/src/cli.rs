//! The `qpoly` command line. [`run`] takes the full argument vector and
//! writes to the given streams so it can be driven from tests.
//!
//! Exit status: 0 success, 1 invalid input, 2 internal error. Every
//! diagnostic line starts with `error[<class>]:`.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{Kind, Table};
use crate::error::Error;
use crate::invariants::{poly_matrix, polynomial};
use crate::io::read_table;
use crate::iso::is_isomorphic;
use crate::links::{builtin_diagram, colorings, parse_pd, phi, phi_matrix, Diagram, PdCode};

#[derive(Parser, Debug)]
#[command(name = "qpoly", version, about = "(m,n) polynomial invariants of finite quandles and biquandles")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Indices {
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Args, Debug)]
struct LinkArgs {
    /// Target table file.
    #[arg(long)]
    target: PathBuf,
    /// PD file (text or JSON) or `builtin:NAME`.
    #[arg(long)]
    link: String,
    /// Read the target as a biquandle block matrix.
    #[arg(long)]
    biquandle: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms and list every violation.
    Validate {
        file: PathBuf,
        #[arg(long)]
        biquandle: bool,
    },
    /// The (m,n) quandle polynomial.
    Qp {
        file: PathBuf,
        #[command(flatten)]
        idx: Indices,
    },
    /// The (m,n) biquandle polynomial.
    Bp {
        file: PathBuf,
        #[command(flatten)]
        idx: Indices,
    },
    /// Period N and the N x N polynomial matrix.
    Polymatrix {
        file: PathBuf,
        #[arg(long)]
        biquandle: bool,
    },
    /// Isomorphism test with a witness bijection.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        biquandle: bool,
    },
    /// Count (and optionally list) colorings of a link diagram.
    Colorings {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long)]
        list: bool,
    },
    /// The subalgebra polynomial multiset invariant.
    Invariant {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, allow_negative_numbers = true, requires = "n", conflicts_with = "matrix")]
        m: Option<i64>,
        #[arg(long, allow_negative_numbers = true, requires = "m")]
        n: Option<i64>,
        /// Every entry for 0 <= m, n < N.
        #[arg(long, required_unless_present = "m")]
        matrix: bool,
    },
    /// Knot quandle presentation of a diagram.
    Presentation {
        /// PD file or `builtin:NAME`.
        link: String,
    },
}

/// An error already classified for the user.
struct Failure {
    class: &'static str,
    message: String,
    code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let class = match e {
            Error::Parse { .. } => "parse",
            Error::Structure(_) => "table",
            Error::Diagram(_) | Error::UnknownBuiltin(_) => "link",
            Error::Overflow(_) => "overflow",
            _ => "input",
        };
        Failure {
            class,
            message: e.to_string(),
            code: 1,
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn load(path: &PathBuf, kind: Kind) -> std::result::Result<Table, Failure> {
    let t = read_table(path, kind)?;
    let report = t.validate();
    if !report.is_valid() {
        return Err(Failure {
            class: "invalid-table",
            message: format!(
                "{} is not a valid {kind}: {}",
                path.display(),
                report.violations[0]
            ),
            code: 1,
        });
    }
    Ok(t)
}

fn kind_of(biquandle: bool) -> Kind {
    if biquandle {
        Kind::Biquandle
    } else {
        Kind::Quandle
    }
}

fn load_link(spec: &str) -> std::result::Result<Diagram, Failure> {
    let pd = if let Some(name) = spec.strip_prefix("builtin:") {
        builtin_diagram(name)?
    } else {
        let text = std::fs::read_to_string(spec).map_err(|e| Failure {
            class: "input",
            message: format!("cannot read {spec}: {e}"),
            code: 1,
        })?;
        if text.trim_start().starts_with('{') {
            PdCode::from_json(&text)?
        } else {
            parse_pd(&text)?
        }
    };
    Ok(Diagram::new(&pd))
}

fn w(out: &mut dyn Write, text: std::fmt::Arguments) -> CmdResult {
    out.write_fmt(text).map_err(|e| Failure {
        class: "io",
        message: e.to_string(),
        code: 2,
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Validate { file, biquandle } => {
            let t = read_table(&file, kind_of(biquandle))?;
            let report = t.validate();
            w(out, format_args!("{report}"))?;
            if !report.is_valid() {
                return Err(Failure {
                    class: "invalid-table",
                    message: format!("{} violation(s)", report.violations.len()),
                    code: 1,
                });
            }
        }
        Command::Qp { file, idx } => {
            let t = load(&file, Kind::Quandle)?;
            w(out, format_args!("{}\n", polynomial(&t, idx.m, idx.n)))?;
        }
        Command::Bp { file, idx } => {
            let t = load(&file, Kind::Biquandle)?;
            w(out, format_args!("{}\n", polynomial(&t, idx.m, idx.n)))?;
        }
        Command::Polymatrix { file, biquandle } => {
            let t = load(&file, kind_of(biquandle))?;
            let m = poly_matrix(&t)?;
            w(out, format_args!("N={}\n{m}", m.size()))?;
        }
        Command::Iso { a, b, biquandle } => {
            let kind = kind_of(biquandle);
            let (ta, tb) = (load(&a, kind)?, load(&b, kind)?);
            let res = is_isomorphic(&ta, &tb)?;
            match res.witness {
                Some(phi) => {
                    let p: Vec<String> = phi.iter().map(usize::to_string).collect();
                    w(out, format_args!("yes\n{}\n", p.join(" ")))?;
                }
                None => w(out, format_args!("no\n"))?,
            }
        }
        Command::Colorings { link, list } => {
            let t = load(&link.target, kind_of(link.biquandle))?;
            let d = load_link(&link.link)?;
            let all = colorings(&d, &t);
            w(out, format_args!("{}\n", all.len()))?;
            if list {
                for c in &all {
                    let s: Vec<String> = c.colors.iter().map(usize::to_string).collect();
                    w(out, format_args!("{}\n", s.join(" ")))?;
                }
            }
        }
        Command::Invariant { link, m, n, matrix } => {
            let t = load(&link.target, kind_of(link.biquandle))?;
            let d = load_link(&link.link)?;
            if matrix {
                let grid = phi_matrix(&d, &t)?;
                w(out, format_args!("N={}\n", grid.len()))?;
                for (i, row) in grid.iter().enumerate() {
                    for (j, ms) in row.iter().enumerate() {
                        w(out, format_args!("({i},{j}) {ms}\n"))?;
                    }
                }
            } else {
                let (m, n) = (m.expect("clap requires m"), n.expect("clap requires n"));
                w(out, format_args!("{}\n", phi(&d, &t, m, n)?))?;
            }
        }
        Command::Presentation { link } => {
            let d = load_link(&link)?;
            w(out, format_args!("{}\n", d.presentation()))?;
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let text = e.render().to_string();
                    let body = text.strip_prefix("error: ").unwrap_or(&text);
                    let _ = write!(err, "error[usage]: {body}");
                    1
                }
            };
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(cli.command, out)));
    match result {
        Ok(Ok(())) => 0,
        Ok(Err(f)) => {
            let _ = writeln!(err, "error[{}]: {}", f.class, f.message);
            f.code
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            let _ = writeln!(err, "error[internal]: {msg}");
            2
        }
    }
}
