//! The `superchar` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::charring::euler_character;
use crate::diagrams::{bar_weight, cap_diagram, p_set, parse_candidates, WeightDiagram};
use crate::error::Error;
use crate::functors::{translate_euler, translate_pim, translate_simple, Functor};
use crate::kgroup::{Basis, KElement};
use crate::lattice::{fmt_half, Family, SupergroupKind, Weight};
use crate::oracle::verify_all;
use crate::pims::{pim_character, pim_decomposition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "superchar", version, about = "Weight diagrams and projective characters for gl(m|n) and osp(M|2n)")]
struct Cli {
    #[command(flatten)]
    group: GroupArgs,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// gl, osp-odd (SOSP(2m+1|2n)) or osp-even (SOSP(2m|2n)).
    #[arg(long, global = true)]
    group: Option<String>,
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Accept gl(m|n) with m < n.
    #[arg(long, global = true)]
    allow_small_m: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between a rho-shifted weight and its diagram.
    Diagram {
        #[arg(long, conflicts_with = "weight")]
        diagram: Option<String>,
        /// For example `a=5/2,1/2 b=3/2`.
        #[arg(long)]
        weight: Option<String>,
    },
    /// Decompose a projective indecomposable into Euler characteristics.
    Pim {
        #[arg(long)]
        diagram: String,
    },
    /// Character of an Euler characteristic or of a PIM.
    Char {
        #[arg(long)]
        diagram: String,
        #[arg(long, default_value = "euler")]
        basis: String,
    },
    /// Apply `T(a,b)` or `sw` to one basis element.
    Translate {
        #[arg(long)]
        diagram: String,
        /// `T(1/2,3/2)`, `T(1,0)` or `sw`.
        #[arg(long)]
        functor: String,
        #[arg(long, default_value = "euler")]
        basis: String,
    },
    /// The cap diagram of a tailless diagram.
    Caps {
        #[arg(long)]
        diagram: String,
    },
    /// Diagrams reached by sliding crosses along their caps.
    Pset {
        #[arg(long)]
        diagram: String,
    },
    /// The bar weight of an odd diagram with a tail.
    Bar {
        #[arg(long)]
        diagram: String,
    },
    /// Audit the functor tables, decompositions and Fock relations.
    Verify {
        /// Vertices in the audit window, tail vertex included.
        #[arg(long, default_value_t = 8)]
        max_pos: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

fn kind_of(g: &GroupArgs) -> std::result::Result<SupergroupKind, Failure> {
    let (Some(group), Some(m), Some(n)) = (&g.group, g.m, g.n) else {
        return Err(Failure::Usage("--group, --m and --n are required".into()));
    };
    let family = Family::from_name(group).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(match family {
        Family::Gl if g.allow_small_m => SupergroupKind::gl_any(m, n)?,
        _ => SupergroupKind::new(family, m, n)?,
    })
}

fn terms_text(x: &KElement) -> String {
    if x.is_zero() {
        "0".into()
    } else {
        x.to_string()
    }
}

fn half_list(v: &[i64]) -> Vec<String> {
    v.iter().map(|x| fmt_half(*x)).collect()
}

struct Output {
    text: String,
    json: serde_json::Value,
    status: i32,
}

impl Output {
    fn ok(text: String, json: serde_json::Value) -> Output {
        Output { text, json, status: EXIT_OK }
    }
}

fn execute(cli: &Cli) -> std::result::Result<Output, Failure> {
    let kind = kind_of(&cli.group)?;
    let parse = |s: &str| WeightDiagram::parse(kind, s);
    Ok(match &cli.command {
        Command::Diagram { diagram: Some(text), .. } => {
            let ds = parse_candidates(kind, text)?;
            let rows: Vec<(String, String)> = ds.iter().map(|d| (d.to_string(), d.to_weight().to_text())).collect();
            let text = rows.iter().map(|(d, w)| format!("{d}\t{w}")).collect::<Vec<_>>().join("\n");
            let json = json!(rows.iter().map(|(d, w)| json!({"diagram": d, "weight": w})).collect::<Vec<_>>());
            Output::ok(text, json)
        }
        Command::Diagram { weight: Some(text), .. } => {
            let w = Weight::parse_text(text, Some(kind))?;
            let d = WeightDiagram::from_weight(&w)?;
            Output::ok(d.to_string(), json!({"weight": w.to_text(), "diagram": d.to_string()}))
        }
        Command::Diagram { .. } => return Err(Failure::Usage("give --diagram or --weight".into())),
        Command::Pim { diagram } => {
            let dec = pim_decomposition(&parse(diagram)?)?;
            Output::ok(terms_text(&dec.terms), dec.to_json())
        }
        Command::Char { diagram, basis } => {
            let d = parse(diagram)?;
            let ch = match Basis::from_name(basis)? {
                Basis::Euler => euler_character(&d)?,
                Basis::Pim => pim_character(&d)?,
                Basis::Simple => return Err(Error::Unsupported("characters of simple modules".into()).into()),
            };
            let mut terms: Vec<_> = ch.iter().map(|(e, c)| json!({"coeff": c, "exponent": half_list(e)})).collect();
            terms.reverse();
            Output::ok(ch.to_string(), json!({"source": d.to_string(), "basis": basis, "terms": terms}))
        }
        Command::Translate { diagram, functor, basis } => {
            let d = parse(diagram)?;
            let f: Functor = functor.parse()?;
            f.check(kind)?;
            let basis = Basis::from_name(basis)?;
            let out = match basis {
                Basis::Euler => translate_euler(&KElement::single(Basis::Euler, d.clone()), f)?,
                Basis::Pim => translate_pim(&d, f)?,
                Basis::Simple => translate_simple(&d, f)?,
            };
            let json = json!({"source": d.to_string(), "functor": f.to_string(), "basis": basis.name(), "terms": out.to_json_terms()});
            Output::ok(terms_text(&out), json)
        }
        Command::Caps { diagram } => {
            let cd = cap_diagram(&parse(diagram)?)?;
            let caps: Vec<(String, String)> = cd.caps.iter().map(|c| (fmt_half(c.left.0), fmt_half(c.right.0))).collect();
            let text = caps.iter().map(|(l, r)| format!("({l}, {r})")).collect::<Vec<_>>().join("\n");
            let json = json!({
                "diagram": cd.diagram.to_string(),
                "caps": caps.iter().map(|(l, r)| json!({"left": l, "right": r})).collect::<Vec<_>>(),
            });
            Output::ok(text, json)
        }
        Command::Pset { diagram } => {
            let d = parse(diagram)?;
            let mut members: Vec<String> = p_set(&d)?.iter().map(|x| x.to_string()).collect();
            members.sort();
            Output::ok(members.join("\n"), json!({"diagram": d.to_string(), "members": members}))
        }
        Command::Bar { diagram } => {
            let d = parse(diagram)?;
            let b = bar_weight(&d)?;
            let emerald: Vec<String> = b.emerald.iter().map(|p| fmt_half(p.0)).collect();
            let text = format!("{}\nemerald: {}", b.diagram, emerald.join(" "));
            Output::ok(text, json!({"diagram": d.to_string(), "bar": b.diagram.to_string(), "emerald": emerald}))
        }
        Command::Verify { max_pos, seed } => {
            let reports = verify_all(kind, *max_pos, *seed)?;
            let ok = reports.iter().all(|r| r.is_ok());
            let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let json = json!({"group": kind.to_string(), "ok": ok, "reports": reports});
            Output { text, json, status: if ok { EXIT_OK } else { EXIT_VERIFY } }
        }
    })
}

/// Runs the command line on `argv` (program name first), writing to the
/// given streams, and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = if cli.json { serde_json::to_string_pretty(&o.json).expect("plain data") } else { o.text };
            let _ = writeln!(out, "{body}");
            o.status
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
