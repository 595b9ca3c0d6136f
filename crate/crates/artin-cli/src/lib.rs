//! The `artin` command: parse group specs and words, dispatch to the
//! library, print text or JSON with stable exit codes (0 success, 1 domain
//! error, 2 usage error).

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use artin::center::{center_data, check_central};
use artin::coxeter::{parse_group_spec, validate, CoxLabel, CoxeterMatrix, Family, FamilySpec};
use artin::mcg::{distinguish_mcg, Genus};
use artin::monoid::ArtinMonoid;
use artin::roots::{has_kth_root, root_spectrum, RootDecision};
use artin::theory::{distinguish, Notation, EquivalenceVerdict, Side, PHI_REDUCTION_NOTE};
use artin::{Caps, Error};

/// Centrality of c_G is verified outright up to this word length and
/// trusted (it is a theorem) beyond it.
const CENTRAL_CHECK_LAMBDA: usize = 24;

const A1_CAVEAT: &str =
    "A1 is the infinite cyclic group; its full center is generated by Δ = x1, but the tabulated \
c_G = Δ² of length 2 follows the uniform A-family formula";

#[derive(Parser)]
#[command(
    name = "artin",
    version,
    about = "Computations in irreducible Artin groups of finite type: normal forms, centers, roots, and distinguishing sentences"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Render sentences with A/E quantifier tokens instead of ∀/∃
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EqualMethod {
    Nf,
    Bfs,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Left-greedy normal form of a positive word
    Nf {
        /// Group spec (A3, B4, D5, I2(7), or braid:K)
        #[arg(long)]
        group: String,
        /// Whitespace-separated 1-based generator indices; empty = identity
        #[arg(long)]
        word: String,
    },
    /// Decide equality of two positive words
    Equal {
        #[arg(long)]
        group: String,
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        /// Decider: normal form, rewriting-closure oracle, or both
        #[arg(long, value_enum, default_value_t = EqualMethod::Nf)]
        method: EqualMethod,
    },
    /// Center generator of a group
    Center {
        #[arg(long)]
        group: String,
    },
    /// Fundamental element Δ of a group
    Delta {
        #[arg(long)]
        group: String,
    },
    /// Decide existence of a k-th root of the center generator
    Root {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: u32,
    },
    /// Set of k admitting k-th roots of the center generator
    Spectrum {
        #[arg(long)]
        group: String,
        /// Bound on k (default: the closed-form maximal exponent)
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Distinguish the elementary theories of two groups
    Distinguish { spec1: String, spec2: String },
    /// Numeric table (rank, h, center generator, word length) for a family
    Table {
        /// One of A, B, D, I2
        #[arg(long)]
        family: String,
        /// Largest parameter to include
        #[arg(long)]
        max: u32,
    },
    /// Distinguish mapping class groups of closed surfaces by genus
    Mcg { g: u32, h: u32 },
    /// Validate a Coxeter matrix file
    Validate {
        #[arg(long)]
        matrix: PathBuf,
    },
}

/// Run the CLI against explicit argv and output streams; returns the exit
/// code. `main` is a thin wrapper over this, and the tests call it
/// directly.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let caps = match load_caps() {
        Ok(caps) => caps,
        Err(e) => {
            let _ = writeln!(err, "error: ARTIN_EQ_CAPS: {e}");
            return 1;
        }
    };
    match dispatch(&cli, &caps, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load_caps() -> artin::Result<Caps> {
    match std::env::var("ARTIN_EQ_CAPS") {
        Ok(text) => Caps::parse_overrides(&text),
        Err(_) => Ok(Caps::default()),
    }
}

/// A group argument: the spec plus the braid alias it arrived under, if
/// any (`braid:K` names A_{K−1}, the braid group on K strands).
struct GroupArg {
    spec: FamilySpec,
    alias: Option<String>,
}

impl GroupArg {
    fn parse(text: &str) -> artin::Result<GroupArg> {
        let trimmed = text.trim();
        if let Some(rest) = trimmed.to_ascii_lowercase().strip_prefix("braid:") {
            let strands: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad strand count in `{text}`")))?;
            if strands < 2 {
                return Err(Error::Range(format!(
                    "braid:{strands} has no Artin-group model here; need at least 2 strands"
                )));
            }
            return Ok(GroupArg {
                spec: FamilySpec::a(strands - 1)?,
                alias: Some(format!("braid:{strands}")),
            });
        }
        Ok(GroupArg {
            spec: parse_group_spec(trimmed)?,
            alias: None,
        })
    }

    /// "A2" or "A2 (braid:3)".
    fn label(&self) -> String {
        match &self.alias {
            Some(alias) => format!("{} ({alias})", self.spec),
            None => self.spec.to_string(),
        }
    }

    fn annotate(&self, value: &mut serde_json::Value) {
        if let Some(alias) = &self.alias {
            value["alias"] = json!(alias);
        }
    }
}

fn dispatch<O: Write, E: Write>(cli: &Cli, caps: &Caps, out: &mut O, err: &mut E) -> artin::Result<i32> {
    let notation = if cli.ascii { Notation::Ascii } else { Notation::Unicode };
    let json_mode = cli.format == Format::Json;
    match &cli.command {
        Command::Nf { group, word } => {
            let g = GroupArg::parse(group)?;
            let monoid = ArtinMonoid::for_spec(&g.spec)?;
            let w = monoid.parse_word(word)?;
            let nf = monoid.normal_form(&w);
            if json_mode {
                let factors: Vec<String> = nf
                    .factors
                    .iter()
                    .map(|f| {
                        monoid
                            .system()
                            .reduced_word(f)
                            .iter()
                            .map(|l| l.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                let mut v = json!({
                    "group": g.spec.to_string(),
                    "word": w.to_string(),
                    "deltaPower": nf.delta_power,
                    "factors": factors,
                    "lambda": w.lambda(),
                });
                g.annotate(&mut v);
                emit_json(out, &v);
            } else {
                let _ = writeln!(out, "{}", monoid.render_normal_form(&nf));
            }
            Ok(0)
        }
        Command::Equal { group, w1, w2, method } => {
            let g = GroupArg::parse(group)?;
            let monoid = ArtinMonoid::for_spec(&g.spec)?;
            let a = monoid.parse_word(w1)?;
            let b = monoid.parse_word(w2)?;
            let (nf_eq, bfs_eq) = match method {
                EqualMethod::Nf => (Some(monoid.equal(&a, &b)), None),
                EqualMethod::Bfs => (None, Some(monoid.equal_bfs(&a, &b, caps)?)),
                EqualMethod::Both => (
                    Some(monoid.equal(&a, &b)),
                    Some(monoid.equal_bfs(&a, &b, caps)?),
                ),
            };
            let equal = nf_eq.or(bfs_eq).unwrap();
            let agree = match (nf_eq, bfs_eq) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            };
            if json_mode {
                let mut v = json!({
                    "group": g.spec.to_string(),
                    "w1": a.to_string(),
                    "w2": b.to_string(),
                    "method": match method {
                        EqualMethod::Nf => "nf",
                        EqualMethod::Bfs => "bfs",
                        EqualMethod::Both => "both",
                    },
                    "equal": equal,
                });
                if let Some(x) = nf_eq {
                    v["nf"] = json!(x);
                }
                if let Some(y) = bfs_eq {
                    v["bfs"] = json!(y);
                }
                if let Some(ag) = agree {
                    v["agree"] = json!(ag);
                }
                g.annotate(&mut v);
                emit_json(out, &v);
            } else {
                let _ = writeln!(out, "equal: {equal}");
                if let Some(x) = nf_eq {
                    let _ = writeln!(out, "nf: {x}");
                }
                if let Some(y) = bfs_eq {
                    let _ = writeln!(out, "bfs: {y}");
                }
                if let Some(ag) = agree {
                    let _ = writeln!(out, "agree: {ag}");
                }
            }
            if agree == Some(false) {
                let _ = writeln!(err, "error: the two deciders disagree; this is a bug in the library");
                return Ok(1);
            }
            Ok(0)
        }
        Command::Center { group } => {
            let g = GroupArg::parse(group)?;
            let data = center_data(&g.spec)?;
            let monoid = ArtinMonoid::for_spec(&g.spec)?;
            let central = if data.c_g.lambda() <= CENTRAL_CHECK_LAMBDA {
                if !check_central(&monoid, &data.c_g) {
                    return Err(Error::Internal(format!(
                        "{} center generator fails the centrality check",
                        g.spec
                    )));
                }
                "verified"
            } else {
                "trusted"
            };
            let generator = if data.c_is_delta_squared { "delta2" } else { "delta" };
            let caveat = (g.spec == FamilySpec::a(1).unwrap()).then_some(A1_CAVEAT);
            if json_mode {
                let mut v = json!({
                    "group": g.spec.to_string(),
                    "cG": data.c_g.to_string(),
                    "generator": generator,
                    "lambda": data.c_g.lambda(),
                    "h": data.h,
                    "central": central,
                });
                if let Some(c) = caveat {
                    v["caveat"] = json!(c);
                }
                g.annotate(&mut v);
                emit_json(out, &v);
            } else {
                let _ = writeln!(out, "group: {}", g.label());
                let _ = writeln!(out, "cG: {}", data.c_g);
                let _ = writeln!(out, "generator: {}", pretty_generator(generator, cli.ascii));
                let _ = writeln!(out, "lambda: {}", data.c_g.lambda());
                let _ = writeln!(out, "h: {}", data.h);
                let _ = writeln!(out, "central: {central}");
                if let Some(c) = caveat {
                    let _ = writeln!(out, "note: {c}");
                }
            }
            Ok(0)
        }
        Command::Delta { group } => {
            let g = GroupArg::parse(group)?;
            let data = center_data(&g.spec)?;
            if json_mode {
                let mut v = json!({
                    "group": g.spec.to_string(),
                    "delta": data.delta.to_string(),
                    "lambda": data.delta.lambda(),
                    "h": data.h,
                });
                g.annotate(&mut v);
                emit_json(out, &v);
            } else {
                let _ = writeln!(out, "group: {}", g.label());
                let _ = writeln!(out, "delta: {}", data.delta);
                let _ = writeln!(out, "lambda: {}", data.delta.lambda());
                let _ = writeln!(out, "h: {}", data.h);
            }
            Ok(0)
        }
        Command::Root { group, k } => {
            let g = GroupArg::parse(group)?;
            let answer = has_kth_root(&g.spec, *k, caps)?;
            if json_mode {
                let mut v = answer.to_json();
                g.annotate(&mut v);
                emit_json(out, &v);
            } else {
                let _ = writeln!(
                    out,
                    "decision: {}",
                    match answer.decision {
                        RootDecision::Yes => "yes",
                        RootDecision::No => "no",
                        RootDecision::UndecidedByCap => "undecided-by-cap",
                    }
                );
                let _ = writeln!(out, "method: {}", answer.method.as_str());
                let _ = writeln!(out, "k: {}", answer.k);
                let _ = writeln!(out, "group: {}", g.label());
                if let Some(w) = &answer.witness {
                    let _ = writeln!(out, "witness: {w}");
                }
            }
            if answer.decision == RootDecision::UndecidedByCap {
                let _ = writeln!(
                    err,
                    "error: undecided — candidate length {} exceeds the search cap {} (raise via ARTIN_EQ_CAPS)",
                    artin::center::table_center_length(&g.spec)? / *k as u64,
                    caps.search_len
                );
                return Ok(1);
            }
            Ok(0)
        }
        Command::Spectrum { group, kmax } => {
            let g = GroupArg::parse(group)?;
            let spectrum = root_spectrum(&g.spec, *kmax, caps)?;
            if json_mode {
                let mut v = spectrum.to_json();
                g.annotate(&mut v);
                emit_json(out, &v);
            } else {
                let members: Vec<String> = spectrum.members.iter().map(|k| k.to_string()).collect();
                let _ = writeln!(out, "group: {}", g.label());
                let _ = writeln!(out, "members: {}", members.join(" "));
                let _ = writeln!(out, "max: {}", spectrum.max());
                let _ = writeln!(out, "searchBound: {}", spectrum.search_bound);
            }
            Ok(0)
        }
        Command::Distinguish { spec1, spec2 } => {
            let left = GroupArg::parse(spec1)?;
            let right = GroupArg::parse(spec2)?;
            let verdict = distinguish(&left.spec, &right.spec, caps)?;
            if json_mode {
                emit_json(out, &verdict.to_json(notation));
            } else {
                print_verdict(out, &verdict, &left.label(), &right.label(), notation);
                let _ = writeln!(out, "note: {PHI_REDUCTION_NOTE}");
            }
            Ok(0)
        }
        Command::Table { family, max } => {
            let (family, first) = match family.trim().to_ascii_uppercase().as_str() {
                "A" => (Family::A, 1),
                "B" => (Family::B, 2),
                "D" => (Family::D, 4),
                "I2" | "I" => (Family::I2, 3),
                other => {
                    return Err(Error::Parse(format!(
                        "family must be one of A, B, D, I2; got `{other}`"
                    )))
                }
            };
            if *max < first {
                return Err(Error::Range(format!(
                    "family {family:?} starts at parameter {first}, got max {max}"
                )));
            }
            let mut rows = Vec::new();
            for p in first..=*max {
                let spec = FamilySpec::new(family, Some(p))?;
                let data = center_data(&spec)?;
                rows.push((spec, data));
            }
            if json_mode {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(spec, data)| {
                        let mut v = json!({
                            "group": spec.to_string(),
                            "rank": spec.rank(),
                            "h": data.h,
                            "generator": if data.c_is_delta_squared { "delta2" } else { "delta" },
                            "lambda": data.c_g.lambda(),
                        });
                        if *spec == FamilySpec::a(1).unwrap() {
                            v["caveat"] = json!(A1_CAVEAT);
                        }
                        v
                    })
                    .collect();
                emit_json(out, &json!({ "family": format!("{family:?}"), "rows": rows }));
            } else {
                let _ = writeln!(out, "{:<8} {:>4} {:>4}  {:<4} {:>7}", "Group", "Rank", "h", "c_G", "λ(c_G)");
                let mut caveat = None;
                for (spec, data) in &rows {
                    let gen = pretty_generator(
                        if data.c_is_delta_squared { "delta2" } else { "delta" },
                        cli.ascii,
                    );
                    let _ = writeln!(
                        out,
                        "{:<8} {:>4} {:>4}  {:<4} {:>7}",
                        spec.to_string(),
                        spec.rank(),
                        data.h,
                        gen,
                        data.c_g.lambda()
                    );
                    if *spec == FamilySpec::a(1).unwrap() {
                        caveat = Some(A1_CAVEAT);
                    }
                }
                if let Some(c) = caveat {
                    let _ = writeln!(out, "note: {c}");
                }
            }
            Ok(0)
        }
        Command::Mcg { g, h } => {
            let left = Genus::new(*g)?;
            let right = Genus::new(*h)?;
            let verdict = distinguish_mcg(left, right);
            if json_mode {
                emit_json(out, &verdict.to_json(notation));
            } else {
                print_verdict(
                    out,
                    &verdict,
                    &format!("Mod(S_{g})"),
                    &format!("Mod(S_{h})"),
                    notation,
                );
            }
            Ok(0)
        }
        Command::Validate { matrix } => {
            let m = read_matrix_file(matrix)?;
            let report = validate(&m);
            if json_mode {
                emit_json(
                    out,
                    &json!({
                        "rank": report.rank,
                        "ok": report.ok(),
                        "violations": report.violations,
                        "connected": report.connected,
                        "tree": report.tree,
                        "hasInfiniteLabel": report.has_infinite_label,
                        "recognized": report.recognized.map(|s| s.to_string()),
                    }),
                );
            } else {
                let _ = writeln!(out, "rank: {}", report.rank);
                let _ = writeln!(out, "ok: {}", report.ok());
                for v in &report.violations {
                    let _ = writeln!(out, "violation: {v}");
                }
                let _ = writeln!(out, "connected (irreducible): {}", report.connected);
                let _ = writeln!(out, "tree: {}", report.tree);
                let _ = writeln!(out, "infinite labels: {}", report.has_infinite_label);
                match report.recognized {
                    Some(s) => {
                        let _ = writeln!(out, "recognized: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "recognized: none");
                    }
                }
                if report.has_infinite_label {
                    let _ = writeln!(out, "note: an `inf` entry means the diagram is not of finite type");
                }
            }
            if report.ok() {
                Ok(0)
            } else {
                let _ = writeln!(err, "error: matrix violates Coxeter-matrix invariants");
                Ok(1)
            }
        }
    }
}

fn pretty_generator(tag: &str, ascii: bool) -> &'static str {
    match (tag, ascii) {
        ("delta", false) => "Δ",
        ("delta", true) => "D",
        (_, false) => "Δ²",
        (_, true) => "D^2",
    }
}

fn print_verdict<O: Write>(
    out: &mut O,
    verdict: &EquivalenceVerdict,
    left: &str,
    right: &str,
    notation: Notation,
) {
    use artin::theory::VerdictKind;
    let _ = writeln!(out, "left: {left}");
    let _ = writeln!(out, "right: {right}");
    let _ = writeln!(
        out,
        "verdict: {}",
        match verdict.kind {
            VerdictKind::Distinguished => "Distinguished",
            VerdictKind::SameSpec => "SameSpec",
            VerdictKind::Unknown => "Unknown",
        }
    );
    let _ = writeln!(
        out,
        "basis: {}",
        match verdict.basis {
            artin::theory::Basis::Formula => "formula",
            artin::theory::Basis::Search => "search",
        }
    );
    let _ = writeln!(out, "exponents: {} {}", verdict.exponents[0], verdict.exponents[1]);
    if let Some(s) = &verdict.sentence {
        let _ = writeln!(out, "sentence: {}", s.render(notation));
    }
    if let Some(side) = verdict.holds_in {
        let (holder, other) = match side {
            Side::Left => (left, right),
            Side::Right => (right, left),
        };
        let _ = writeln!(out, "holds in: {holder}; fails in: {other}");
    }
}

fn emit_json<O: Write>(out: &mut O, value: &serde_json::Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json"));
}

/// Matrix file format: first line the rank n, then n lines of n entries,
/// each a positive integer or `inf`.
fn read_matrix_file(path: &PathBuf) -> artin::Result<CoxeterMatrix> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = content.lines();
    let first = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("first line must be the rank, got `{first}`")))?;
    let mut entries = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {} of {n}", row + 1)))?;
        let mut row_entries = Vec::new();
        for token in line.split_whitespace() {
            if token.eq_ignore_ascii_case("inf") {
                row_entries.push(CoxLabel::Inf);
            } else {
                let m: u32 = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry `{token}` in row {}", row + 1)))?;
                if m == 0 {
                    return Err(Error::Parse(format!(
                        "entry 0 in row {}; entries are positive integers or inf",
                        row + 1
                    )));
                }
                row_entries.push(CoxLabel::Fin(m));
            }
        }
        if row_entries.len() != n {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {n}",
                row + 1,
                row_entries.len()
            )));
        }
        entries.extend(row_entries);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(Error::Parse("trailing content after the matrix rows".into()));
    }
    CoxeterMatrix::from_entries(n, entries)
}
