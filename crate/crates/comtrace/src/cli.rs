//! Command-line front end. Every verb calls one library operation and
//! renders its result deterministically.
//!
//! Exit status: 0 on success, 1 on a domain error, 2 on a usage error.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};

use crate::alphabet::{self, GAlphabet, DEFAULT_UNIVERSE_CAP};
use crate::canonical;
use crate::congruence::{self, DEFAULT_CLASS_CAP};
use crate::error::Error;
use crate::format::{self, DotStyle, RawStructure};
use crate::gsostruct::{self, GsoStructure, DEFAULT_MINS_CAP};
use crate::relorder::{self, ExtensionKind, Relation, DEFAULT_EXTENSION_CAP};
use crate::sostruct::{self, SoStructure};
use crate::stepseq::{self, Carrier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "comtrace", version, about = "Comtraces, g-comtraces, and (generalized) stratified order structures")]
struct Args {
    /// Alphabet file (`events:`, `sim:`, `ser:`, `inl:`).
    #[arg(long, global = true, value_name = "FILE")]
    alphabet: Option<String>,
    /// Cap on materialized class size.
    #[arg(long, global = true, default_value_t = DEFAULT_CLASS_CAP)]
    cap: usize,
    /// Total order on events, overriding the lexicographic default.
    #[arg(long, global = true, value_name = "\"a b c\"")]
    order: Option<String>,
    /// Output format for structures.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Omit transitively implied `≺` edges in DOT output.
    #[arg(long, global = true)]
    reduce: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Validate an alphabet and print its derived relations.
    Validate,
    /// List every step of the alphabet.
    Steps,
    /// List the equivalence class of a step sequence.
    Class { seq: String },
    /// Decide whether two step sequences are equivalent.
    Equiv { s: String, t: String },
    /// Canonical form (comtrace alphabets only).
    Canon { seq: String },
    /// g-canonical form (least member under the lexicographic step order).
    Gcanon { seq: String },
    /// So-structure generated by a step sequence (comtrace alphabets only).
    Sostruct { seq: String },
    /// Gso-structure generated by a step sequence.
    Gsostruct { seq: String },
    /// Stratified extensions of a structure file, as step sequences.
    Extensions {
        file: String,
        /// Total extensions of a poset (`prec:` only).
        #[arg(long)]
        total: bool,
    },
    /// Alphabet and comtrace of a so-structure file.
    FromSo { file: String },
    /// Alphabet and g-comtrace of a gso-structure file.
    FromGso { file: String },
    /// g-canonical form read off a gso-structure: a structure file, or a
    /// step sequence when `--alphabet` is given.
    Semican { input: String },
    /// DOT rendering of a structure file.
    Dot { file: String },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&args) {
        Ok(stdout) => Output { code: 0, stdout, stderr: String::new() },
        Err(Failure::Usage(m)) => Output { code: 2, stdout: String::new(), stderr: format!("usage error: {m}\n") },
        Err(Failure::Domain(e)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &str) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn order(args: &Args) -> Option<Vec<String>> {
    args.order.as_ref().map(|o| o.split_whitespace().map(String::from).collect())
}

fn load_alphabet(args: &Args) -> Res<GAlphabet> {
    let path = args.alphabet.as_deref().ok_or_else(|| Failure::Usage("--alphabet FILE is required".into()))?;
    let raw = format::parse_alphabet(&read(path)?)?;
    Ok(match order(args) {
        Some(o) => alphabet::validate_alphabet_with_order(&raw, &o)?,
        None => alphabet::validate_alphabet(&raw)?,
    })
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

enum Structure {
    Poset(Carrier, Relation),
    So(SoStructure),
    Gso(GsoStructure),
    Pair(Carrier, Relation, Relation),
}

fn load_structure(args: &Args, path: &str) -> Res<Structure> {
    let raw: RawStructure = format::parse_structure(&read(path)?)?;
    let c = raw.carrier(order(args).as_deref())?;
    if raw.has("cmt") {
        let (cmt, wc) = (raw.relation(&c, "cmt")?, raw.relation(&c, "wc")?);
        Ok(Structure::Gso(gsostruct::validate_gso(c, cmt, wc)?))
    } else if raw.has("wc") {
        let (prec, wc) = (raw.relation(&c, "prec")?, raw.relation(&c, "wc")?);
        Ok(Structure::So(sostruct::validate_so(c, prec, wc)?))
    } else if raw.has("prec") {
        let prec = raw.relation(&c, "prec")?;
        Ok(Structure::Poset(c, prec))
    } else {
        let (r1, r2) = (raw.relation(&c, "r1")?, raw.relation(&c, "r2")?);
        Ok(Structure::Pair(c, r1, r2))
    }
}

fn render_so(fmt: Format, reduce: bool, s: &SoStructure) -> String {
    match fmt {
        Format::Text => format::render_structure(&s.carrier, &[("prec", &s.prec), ("wc", &s.wc)]),
        Format::Dot => {
            let prec = if reduce { format::transitive_reduction(&s.prec) } else { s.prec.clone() };
            format::render_dot(&s.carrier, &[("prec", &prec, DotStyle::Solid), ("wc", &s.wc, DotStyle::Dashed)])
        }
    }
}

fn render_gso(fmt: Format, g: &GsoStructure) -> String {
    match fmt {
        Format::Text => format::render_structure(&g.carrier, &[("cmt", &g.cmt), ("wc", &g.wc)]),
        Format::Dot => format::render_dot(
            &g.carrier,
            &[("cmt", &g.cmt, DotStyle::SolidUndirected), ("wc", &g.wc, DotStyle::Dashed)],
        ),
    }
}

fn render_alphabet(a: &GAlphabet) -> String {
    let mut out = format!("events: {}\n", a.names().join(" "));
    let raw = a.to_raw();
    for (k, pairs) in [("sim", &raw.sim), ("ser", &raw.ser), ("inl", &raw.inl)] {
        let body: Vec<String> = pairs.iter().map(|(x, y)| format!("({x},{y})")).collect();
        out.push_str(&format!("{k}: {}\n", body.join(" ")).replace(": \n", ":\n"));
    }
    out
}

fn layer_lines(c: &Carrier, layers: &[Vec<u64>]) -> String {
    let render = |l: &Vec<u64>| {
        if l.is_empty() {
            return "lambda".to_string();
        }
        l.iter()
            .map(|&m| {
                let names: Vec<String> = (0..c.len()).filter(|&i| m >> i & 1 == 1).map(|i| c.point_name(i)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect()
    };
    let mut v: Vec<String> = layers.iter().map(render).collect();
    v.sort();
    lines(v)
}

fn execute(args: &Args) -> Res<String> {
    let cap = args.cap;
    match &args.cmd {
        Cmd::Validate => {
            let a = load_alphabet(args)?;
            let kind = match a.kind() {
                alphabet::AlphabetKind::Trace => "trace",
                alphabet::AlphabetKind::Comtrace => "comtrace",
                alphabet::AlphabetKind::GComtrace => "g-comtrace",
            };
            let syn_steps = a.syn_steps(DEFAULT_UNIVERSE_CAP)?;
            let syn_steps: Vec<String> = syn_steps.iter().map(|&s| stepseq::render_step(&a, s)).collect();
            Ok(format!(
                "{}kind: {kind}\nind: {}\nsyn: {}\nsyn_steps: {}\n",
                render_alphabet(&a),
                a.render_pairs(&a.ind()),
                a.render_pairs(&a.syn()),
                syn_steps.join(" ")
            )
            .replace(": \n", ":\n"))
        }
        Cmd::Steps => {
            let a = load_alphabet(args)?;
            Ok(lines(a.steps_universe(DEFAULT_UNIVERSE_CAP)?.iter().map(|&s| stepseq::render_step(&a, s))))
        }
        Cmd::Class { seq } => {
            let a = load_alphabet(args)?;
            let s = stepseq::parse(&a, seq)?;
            Ok(lines(congruence::enumerate_class(&a, &s, cap)?.rendered().iter().cloned()))
        }
        Cmd::Equiv { s, t } => {
            let a = load_alphabet(args)?;
            let (s, t) = (stepseq::parse(&a, s)?, stepseq::parse(&a, t)?);
            Ok(format!("{}\n", congruence::equivalent(&a, &s, &t, cap)?))
        }
        Cmd::Canon { seq } => {
            let a = load_alphabet(args)?;
            let s = stepseq::parse(&a, seq)?;
            Ok(format!("{}\n", stepseq::render(&a, &canonical::canonicalize(&a, &s)?)))
        }
        Cmd::Gcanon { seq } => {
            let a = load_alphabet(args)?;
            let s = stepseq::parse(&a, seq)?;
            Ok(format!("{}\n", stepseq::render(&a, &canonical::g_canonical(&a, &s, cap)?)))
        }
        Cmd::Sostruct { seq } => {
            let a = load_alphabet(args)?;
            let s = stepseq::parse(&a, seq)?;
            Ok(render_so(args.format, args.reduce, &sostruct::so_of_stepseq(&a, &s)?))
        }
        Cmd::Gsostruct { seq } => {
            let a = load_alphabet(args)?;
            let s = stepseq::parse(&a, seq)?;
            Ok(render_gso(args.format, &gsostruct::gso_of_stepseq(&a, &s)?))
        }
        Cmd::Extensions { file, total } => {
            let (c, layers) = match load_structure(args, file)? {
                Structure::Poset(c, p) => {
                    let kind = if *total { ExtensionKind::Total } else { ExtensionKind::Stratified };
                    let exts = relorder::extensions(&p, kind, DEFAULT_EXTENSION_CAP)?;
                    let layers = exts.iter().map(relorder::layers).collect::<Result<Vec<_>, _>>()?;
                    (c, layers)
                }
                Structure::So(s) => {
                    let l = sostruct::extension_layers(&s, DEFAULT_EXTENSION_CAP)?;
                    (s.carrier, l)
                }
                Structure::Gso(g) => {
                    let l = gsostruct::extension_layers(&g, DEFAULT_EXTENSION_CAP)?;
                    (g.carrier, l)
                }
                Structure::Pair(..) => {
                    return Err(Failure::Usage("extensions needs a prec:, wc: or cmt: section".into()))
                }
            };
            Ok(layer_lines(&c, &layers))
        }
        Cmd::FromSo { file } => match load_structure(args, file)? {
            Structure::So(s) => {
                let (theta, ct) = sostruct::comtrace_of_so(&s, DEFAULT_EXTENSION_CAP)?;
                Ok(format!("{}\n{}", render_alphabet(&theta), lines(ct.rendered().iter().cloned())))
            }
            _ => Err(Failure::Usage("from-so needs a file with prec: and wc: sections".into())),
        },
        Cmd::FromGso { file } => match load_structure(args, file)? {
            Structure::Gso(g) => {
                let (theta, gct) = gsostruct::gcomtrace_of_gso(&g, DEFAULT_EXTENSION_CAP)?;
                Ok(format!("{}\n{}", render_alphabet(&theta), lines(gct.rendered().iter().cloned())))
            }
            _ => Err(Failure::Usage("from-gso needs a file with cmt: and wc: sections".into())),
        },
        Cmd::Semican { input } => {
            if args.alphabet.is_some() {
                let a = load_alphabet(args)?;
                let s = stepseq::parse(&a, input)?;
                let g = gsostruct::gso_of_stepseq(&a, &s)?;
                Ok(format!("{}\n", stepseq::render(&a, &gsostruct::semican(&g, DEFAULT_MINS_CAP)?)))
            } else {
                match load_structure(args, input)? {
                    Structure::Gso(g) => {
                        let theta = gsostruct::alphabet_of_gso(&g)?;
                        Ok(format!("{}\n", stepseq::render(&theta, &gsostruct::semican(&g, DEFAULT_MINS_CAP)?)))
                    }
                    _ => Err(Failure::Usage("semican needs a gso-structure file or --alphabet".into())),
                }
            }
        }
        Cmd::Dot { file } => {
            Ok(match load_structure(args, file)? {
                Structure::So(s) => render_so(Format::Dot, args.reduce, &s),
                Structure::Gso(g) => render_gso(Format::Dot, &g),
                Structure::Poset(c, p) => {
                    let p = if args.reduce { format::transitive_reduction(&p) } else { p };
                    format::render_dot(&c, &[("prec", &p, DotStyle::Solid)])
                }
                Structure::Pair(c, r1, r2) => {
                    format::render_dot(&c, &[("r1", &r1, DotStyle::Solid), ("r2", &r2, DotStyle::Dashed)])
                }
            })
        }
    }
}
