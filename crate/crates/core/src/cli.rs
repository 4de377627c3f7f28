//! The `ftfa-kit` command-line tool.
//!
//! Output is JSON unless `--text` is given. Exit codes: 0 on success, 1 for
//! unreadable or malformed input, 2 when the input is well formed but the
//! request fails (the error object then carries a `code`).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::configs::{
    obstruction_bound, realize_free, realize_ftfa, verify, ConfigError, Configuration, FactorPiece,
    Realization, SubgroupSpec, VerifyOptions,
};
use crate::ftfa::{Completion, FtfaElement, FtfaError, SubgroupBasis};
use crate::json::{self, JsonError};
use crate::mintersect::{self, MintersectError};
use crate::oracle::{self, Bounds, OracleError};
use crate::stallings::{default_coset_cap, StallingsError};
use crate::words::Word;

#[derive(Debug, Parser)]
#[command(
    name = "ftfa-kit",
    version,
    about = "Subgroup intersections in F_n × Z^m"
)]
struct Cli {
    /// Print human-readable text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce a generating set to a canonical basis.
    Basis {
        file: PathBuf,
        #[arg(long)]
        dump_automaton: bool,
    },
    /// Intersect several subgroups of the same ambient group.
    Intersect {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        dump_automaton: bool,
        #[arg(long)]
        coset_cap: Option<usize>,
    },
    /// Test membership of `word t^vec`.
    Member {
        file: PathBuf,
        word: String,
        /// Comma-separated abelian coordinates.
        #[arg(long, allow_hyphen_values = true)]
        vec: Option<String>,
    },
    /// Report whether a configuration is Howson.
    ConfCheck { file: PathBuf },
    /// Compute the obstruction bound of a configuration.
    ConfObstruction { file: PathBuf },
    /// Realize a configuration by explicit subgroups.
    ConfRealize {
        file: PathBuf,
        /// Realize inside F_2 (Howson configurations only).
        #[arg(long)]
        free: bool,
    },
    /// Check a realization against a configuration.
    ConfVerify {
        config: PathBuf,
        realization: PathBuf,
        #[arg(long)]
        parallel: bool,
        #[arg(long, default_value_t = 3)]
        witness_rank: usize,
        #[arg(long)]
        coset_cap: Option<usize>,
    },
    /// List the elements of an intersection inside a finite box.
    OracleBall {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        norm: u32,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Domain { code: &'static str, message: String },
}

impl Failure {
    fn domain(code: &'static str, e: impl std::fmt::Display) -> Self {
        Failure::Domain {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FtfaError> for Failure {
    fn from(e: FtfaError) -> Self {
        let code = match e {
            FtfaError::AmbientMismatch { .. } => "AMBIENT_MISMATCH",
            FtfaError::NotStronglyComplementary(_) => "NOT_STRONGLY_COMPLEMENTARY",
            FtfaError::InvalidBasis(_) => "INVALID_BASIS",
            FtfaError::Word(_) => return Failure::Input(e.to_string()),
        };
        Failure::domain(code, e)
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        let code = match e {
            ConfigError::KOutOfRange(_) => "K_OUT_OF_RANGE",
            ConfigError::BadIndex { .. } => "BAD_INDEX",
            ConfigError::EmptySet => "EMPTY_SET",
            ConfigError::KMismatch { .. } => "K_MISMATCH",
            ConfigError::NotHowson => "NOT_HOWSON",
            ConfigError::ArityMismatch { .. } => "ARITY_MISMATCH",
            ConfigError::Realization(_) => "REALIZATION_FAILED",
        };
        Failure::domain(code, e)
    }
}

impl From<MintersectError> for Failure {
    fn from(e: MintersectError) -> Self {
        match e {
            MintersectError::Empty => Failure::domain("EMPTY_INPUT", e),
            MintersectError::AmbientMismatch { .. } => Failure::domain("AMBIENT_MISMATCH", e),
            MintersectError::NotFinitelyGenerated => Failure::domain("NOT_FINITELY_GENERATED", e),
            MintersectError::Stallings(StallingsError::IndexCapExceeded { .. }) => {
                Failure::domain("INDEX_CAP_EXCEEDED", e)
            }
            MintersectError::Ftfa(inner) => inner.into(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BoundsTooLarge { .. } => Failure::domain("BOUNDS_TOO_LARGE", e),
            OracleError::AmbientMismatch => Failure::domain("AMBIENT_MISMATCH", e),
        }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Shape(msg) => Failure::Input(msg),
            JsonError::Ftfa(inner) => inner.into(),
            JsonError::Config(inner) => inner.into(),
        }
    }
}

/// A command's result: the JSON object and its text rendering.
struct Output {
    json: Value,
    text: String,
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let mut raw = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut raw)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
    } else {
        raw = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    serde_json::from_str(&raw).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_subgroup(path: &Path) -> Result<SubgroupBasis, Failure> {
    let v = read_json(path)?;
    json::subgroup_from_json(&v).map_err(|e| match Failure::from(e) {
        Failure::Input(msg) => Failure::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn read_config(path: &Path) -> Result<Configuration, Failure> {
    Ok(json::config_from_json(&read_json(path)?)?)
}

fn parse_vec(s: Option<&str>, m: usize) -> Result<Vec<BigInt>, Failure> {
    let Some(s) = s.filter(|s| !s.trim().is_empty()) else {
        return Ok(vec![BigInt::from(0); m]);
    };
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Input(format!("cannot parse vector {s:?}")))?;
    if v.len() != m {
        return Err(Failure::Input(format!(
            "vector has length {}, expected {m}",
            v.len()
        )));
    }
    Ok(v)
}

fn element_text(g: &FtfaElement, n: usize) -> String {
    let w = if g.word.is_identity() {
        "1".to_string()
    } else {
        g.word.to_text(n)
    };
    if g.vec.iter().all(|x| *x == BigInt::from(0)) {
        w
    } else {
        let v: Vec<String> = g.vec.iter().map(ToString::to_string).collect();
        format!("{w}t^({})", v.join(","))
    }
}

fn piece_text(p: &FactorPiece) -> String {
    let letters = |ls: &[i64]| {
        ls.iter()
            .map(|j| format!("u{j}"))
            .collect::<Vec<_>>()
            .join(",")
    };
    match p {
        FactorPiece::Finite { letters: ls, basis } => {
            format!("[{}] {}", letters(ls), basis.to_text())
        }
        FactorPiece::NormalClosure {
            letters: ls,
            closed,
        } => {
            format!("[{}] normal closure of {}", letters(ls), letters(closed))
        }
        FactorPiece::Ray { modulus, residue } => {
            format!("<u_j : j < 0, -1-j ≡ {residue} mod {modulus}>")
        }
    }
}

fn realization_text(r: &Realization) -> String {
    let mut lines = vec![format!("F_2 × Z^{}", r.m)];
    for (i, s) in r.subgroups.iter().enumerate() {
        match s {
            SubgroupSpec::Finite(b) => lines.push(format!("H{} = {}", i + 1, b.to_text())),
            SubgroupSpec::Parametric { pieces, .. } => {
                let parts: Vec<String> = pieces.iter().map(piece_text).collect();
                lines.push(format!("H{} = {}", i + 1, parts.join(" * ")));
            }
        }
    }
    lines.join("\n")
}

fn with_automaton(mut v: Value, b: &SubgroupBasis) -> Value {
    v["automaton"] = b.automaton().to_json();
    v
}

fn execute(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Basis {
            file,
            dump_automaton,
        } => {
            let b = read_subgroup(&file)?;
            let mut v = json::basis_to_json(&b);
            if dump_automaton {
                v = with_automaton(v, &b);
            }
            Ok(Output {
                json: v,
                text: b.to_text(),
            })
        }
        Command::Intersect {
            files,
            dump_automaton,
            coset_cap,
        } => {
            let subgroups = files
                .iter()
                .map(|f| read_subgroup(f))
                .collect::<Result<Vec<_>, _>>()?;
            let out =
                mintersect::intersect(&subgroups, coset_cap.unwrap_or_else(default_coset_cap))?;
            let mut v = json::intersection_to_json(&out);
            if dump_automaton {
                v["input_automata"] =
                    Value::Array(subgroups.iter().map(|s| s.automaton().to_json()).collect());
                if let Some(b) = &out.basis {
                    v["basis"] = with_automaton(v["basis"].take(), b);
                }
            }
            let text = match (&out.basis, &out.certificate) {
                (Some(b), _) => b.to_text(),
                (None, Some(c)) => format!(
                    "not finitely generated (r = {}, rank {} < {})",
                    c.r, c.rank, c.r
                ),
                (None, None) => "not finitely generated".to_string(),
            };
            Ok(Output { json: v, text })
        }
        Command::Member { file, word, vec } => {
            let b = read_subgroup(&file)?;
            let w = Word::parse(&word, b.n()).map_err(|e| Failure::Input(e.to_string()))?;
            let g = FtfaElement::new(w, parse_vec(vec.as_deref(), b.m())?);
            let member = b.member(&g)?;
            Ok(Output {
                json: json!({ "member": member, "element": json::element_to_json(&g, b.n()) }),
                text: member.to_string(),
            })
        }
        Command::ConfCheck { file } => {
            let c = read_config(&file)?;
            let howson = c.is_howson();
            let mut v = json::config_to_json(&c);
            v["howson"] = json!(howson);
            let text = if howson { "howson" } else { "not howson" }.to_string();
            Ok(Output { json: v, text })
        }
        Command::ConfObstruction { file } => {
            let c = read_config(&file)?;
            let o = obstruction_bound(&c);
            let witness = o.witness_sets();
            let text = match &witness {
                Some(w) => format!("bound {} witness {:?}", o.bound, w),
                None => format!("bound {}", o.bound),
            };
            Ok(Output {
                json: json!({ "k": c.k(), "bound": o.bound, "witness": witness }),
                text,
            })
        }
        Command::ConfRealize { file, free } => {
            let c = read_config(&file)?;
            let r = if free {
                realize_free(&c)?
            } else {
                realize_ftfa(&c)?
            };
            Ok(Output {
                json: json::realization_to_json(&r),
                text: realization_text(&r),
            })
        }
        Command::ConfVerify {
            config,
            realization,
            parallel,
            witness_rank,
            coset_cap,
        } => {
            let c = read_config(&config)?;
            let r = json::realization_from_json(&read_json(&realization)?)?;
            let opts = VerifyOptions {
                witness_rank,
                parallel,
                coset_cap: coset_cap.unwrap_or_else(default_coset_cap),
            };
            let report = verify(&c, &r, &opts)?;
            let mut lines: Vec<String> = report
                .subsets
                .iter()
                .map(|s| {
                    format!(
                        "{:?}: expected {}, {}{}",
                        s.set,
                        u8::from(s.expected),
                        s.verdict.name(),
                        if s.consistent { "" } else { " CONTRADICTION" }
                    )
                })
                .collect();
            lines.push(if report.pass { "pass" } else { "fail" }.to_string());
            Ok(Output {
                json: json::report_to_json(&report),
                text: lines.join("\n"),
            })
        }
        Command::OracleBall {
            files,
            len,
            norm,
            parallel,
        } => {
            let subgroups = files
                .iter()
                .map(|f| read_subgroup(f))
                .collect::<Result<Vec<_>, _>>()?;
            let specs: Vec<&(dyn Completion + Sync)> = subgroups
                .iter()
                .map(|s| s as &(dyn Completion + Sync))
                .collect();
            let bounds = Bounds {
                max_word_len: len,
                max_vec_norm: norm,
            };
            let ball = oracle::ball_filtered(&specs, bounds, oracle::DEFAULT_CELL_CAP, parallel)?;
            let n = subgroups[0].n();
            let text = ball
                .elements
                .iter()
                .map(|g| element_text(g, n))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                json: json!({
                    "count": ball.len(),
                    "elements": ball.elements.iter().map(|g| json::element_to_json(g, n)).collect::<Vec<_>>(),
                }),
                text,
            })
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let text = cli.text;
    match execute(cli.command) {
        Ok(o) => {
            let body = if text {
                o.text
            } else {
                serde_json::to_string_pretty(&json::tagged(o.json)).expect("values serialise")
            };
            let _ = writeln!(out, "{body}");
            0
        }
        Err(failure) => {
            let (status, code, message) = match failure {
                Failure::Input(msg) => (1, "INPUT_ERROR", msg),
                Failure::Domain { code, message } => (2, code, message),
            };
            if !text {
                let body = json::tagged(json!({ "error": { "code": code, "message": message } }));
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&body).expect("values serialise")
                );
            }
            let _ = writeln!(err, "error: {code}: {message}");
            status
        }
    }
}
