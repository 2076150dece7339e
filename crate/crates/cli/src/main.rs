//! `qcc`: quandle cocycle invariants from the command line.
//!
//! Exit codes: 0 on success, 1 when a check or table row fails, 2 on bad
//! input.

mod specs;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use quandle_cocycle::braid::{closure_colorings, propagate, ColoringType, Convention, LaidOutBraid, DEFAULT_COLORING_CAP};
use quandle_cocycle::calibration::reproduce_row;
use quandle_cocycle::cocycle::{search_cocycles, verify_cocycle, CochainFile, VectorCochain};
use quandle_cocycle::invariant::{
    chirality_report, cocycle2_invariant, conjugacy_invariant, invertibility_report, module_invariant,
    twistspin_invariant, Axis, ComparisonReport, Detection, InvariantReport, Multiset, Orientation, TwistConfig,
};
use quandle_cocycle::linalg::IntMatrix;
use quandle_cocycle::linform::{render_vec, CoeffVec};
use quandle_cocycle::module::braid_matrix;
use quandle_cocycle::quandle::{verify_quandle, QuandleFile};
use quandle_cocycle::tables::{bundled_table, Expected, RowOutcome};

#[derive(Parser, Debug)]
#[command(name = "qcc", version, about = "Quandle cocycle invariants of closed braids and twist-spun knots")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Crossing convention: std-td, inv-td, std-bu or inv-bu
    #[arg(long, global = true)]
    convention: Option<String>,

    /// Seed for randomized output such as `cocycle search --sample`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print the matrices M(w, x) - I behind the module invariant
    #[arg(long, global = true)]
    dump_matrices: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct KnotArgs {
    /// Knot name from the knot table, e.g. 8_18
    #[arg(long, conflicts_with = "braid")]
    knot: Option<String>,

    /// Braid word, e.g. "1 -2 1 -2" or "(1 -2)^4"
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,

    /// Strand count, when the word does not use the top generator
    #[arg(long)]
    strands: Option<usize>,

    /// Knot table JSON used instead of the bundled one
    #[arg(long)]
    knot_table: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Forward,
    Reversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    First,
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    Chirality,
    Invertibility,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build, show or verify finite quandles
    #[command(subcommand)]
    Quandle(QuandleCmd),

    /// Closure colorings of a braid
    Colorings {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "dihedral:3")]
        quandle: String,
        /// List every coloring
        #[arg(long)]
        list: bool,
    },

    /// Quandle module invariant
    ModuleInvariant {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "dihedral:3")]
        quandle: String,
        /// wreath or alexander:T
        #[arg(long, default_value = "wreath")]
        action: String,
        /// Coefficient modulus, 0 for the integers
        #[arg(long, default_value_t = 0)]
        q: u64,
    },

    /// Conjugacy invariant of a non-abelian 2-cocycle
    ConjInvariant {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "transpositions:5")]
        quandle: String,
        #[arg(long, default_value = "builtin:s5-section")]
        beta: String,
    },

    /// Generalized 2-cocycle invariant of a closed braid
    CocycleInvariant {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "builtin:r3-example2")]
        cocycle: String,
        #[arg(long, default_value = "wreath")]
        action: String,
        /// Quandle, overriding the one named in the cochain file
        #[arg(long)]
        quandle: Option<String>,
        /// Numeric parameter values, e.g. q1=1,q2=2
        #[arg(long)]
        bind: Option<String>,
    },

    /// 3-cocycle invariant of a twist-spun knot
    Twistspin {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value = "builtin:r3-example3")]
        cocycle: String,
        #[arg(long, default_value = "wreath")]
        action: String,
        #[arg(long)]
        quandle: Option<String>,
        #[arg(long, default_value_t = 2)]
        twists: u32,
        #[arg(long, value_enum, default_value_t = OrientationArg::Forward)]
        orientation: OrientationArg,
        /// Axis strand, overriding the calibrated default
        #[arg(long, value_enum)]
        axis: Option<AxisArg>,
        /// Twist exponent offset (0 or 1), overriding the calibrated default
        #[arg(long)]
        offset: Option<u32>,
        #[arg(long)]
        bind: Option<String>,
    },

    /// Verify or search for cocycles
    #[command(subcommand)]
    Cocycle(CocycleCmd),

    /// Reproduce a reference table (1 to 7) row by row
    Table {
        number: u8,
        /// Comma-separated knot names
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        knot_table: Option<PathBuf>,
    },

    /// Chirality or invertibility over a list of knots
    Report {
        #[arg(value_enum)]
        kind: ReportKind,
        /// Comma-separated knot names; defaults to every usable knot
        #[arg(long)]
        knots: Option<String>,
        #[arg(long)]
        knot_table: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum QuandleCmd {
    /// Check the quandle axioms exhaustively
    Verify { spec: String },
    /// Write a quandle file
    Make {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the operation table
    Show { spec: String },
}

#[derive(Subcommand, Debug)]
enum CocycleCmd {
    /// Check a vector cochain or a non-abelian 2-cocycle
    Verify {
        #[arg(long, conflicts_with = "beta")]
        cocycle: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long, default_value = "wreath")]
        action: String,
        #[arg(long)]
        quandle: Option<String>,
    },
    /// Bases of cocycles and coboundaries modulo a prime
    Search {
        #[arg(long, default_value = "dihedral:3")]
        quandle: String,
        #[arg(long, default_value = "wreath")]
        action: String,
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Print one random cocycle from the space
        #[arg(long)]
        sample: bool,
    },
}

struct Ctx {
    format: Format,
    convention: Convention,
    seed: u64,
    dump_matrices: bool,
}

impl Ctx {
    fn emit(&self, value: &Value, text: &str) {
        match self.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize")),
            Format::Text => print!("{text}"),
        }
    }

    fn report(&self, r: &InvariantReport, extra: Value) {
        let mut v = serde_json::to_value(r).expect("reports serialize");
        if let (Value::Object(o), Value::Object(e)) = (&mut v, extra) {
            o.extend(e);
        }
        self.emit(&v, &r.to_text());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let convention = match &cli.convention {
        Some(id) => Convention::from_id(id)?,
        None => Convention::DEFAULT,
    };
    let ctx = Ctx { format: cli.format, convention, seed: cli.seed, dump_matrices: cli.dump_matrices };
    match cli.command {
        Command::Quandle(cmd) => quandle_cmd(&ctx, cmd),
        Command::Colorings { knot, quandle, list } => colorings(&ctx, &knot, &quandle, list),
        Command::ModuleInvariant { knot, quandle, action, q } => module_cmd(&ctx, &knot, &quandle, &action, q),
        Command::ConjInvariant { knot, quandle, beta } => conj_cmd(&ctx, &knot, &quandle, &beta),
        Command::CocycleInvariant { knot, cocycle, action, quandle, bind } => {
            cocycle2_cmd(&ctx, &knot, &cocycle, &action, quandle.as_deref(), bind.as_deref())
        }
        Command::Twistspin { knot, cocycle, action, quandle, twists, orientation, axis, offset, bind } => {
            let mut cfg = TwistConfig::DEFAULT;
            if let Some(a) = axis {
                cfg.axis = match a {
                    AxisArg::First => Axis::First,
                    AxisArg::Last => Axis::Last,
                };
            }
            if let Some(o) = offset {
                if o > 1 {
                    bail!("--offset must be 0 or 1");
                }
                cfg.offset = o;
            }
            let orientation = match orientation {
                OrientationArg::Forward => Orientation::Forward,
                OrientationArg::Reversed => Orientation::Reversed,
            };
            twistspin_cmd(&ctx, &knot, &cocycle, &action, quandle.as_deref(), bind.as_deref(), twists, orientation, cfg)
        }
        Command::Cocycle(cmd) => cocycle_cmd(&ctx, cmd),
        Command::Table { number, only, knot_table } => table_cmd(&ctx, number, only.as_deref(), knot_table),
        Command::Report { kind, knots, knot_table } => report_cmd(&ctx, kind, knots.as_deref(), knot_table),
    }
}

fn resolve(k: &KnotArgs) -> Result<(String, quandle_cocycle::braid::BraidWord)> {
    specs::knot(k.knot.as_deref(), k.braid.as_deref(), k.strands, k.knot_table.as_deref())
}

fn quandle_cmd(ctx: &Ctx, cmd: QuandleCmd) -> Result<u8> {
    match cmd {
        QuandleCmd::Verify { spec } => {
            // a file is checked from its raw table so that broken tables are reported, not rejected
            let verdict = if std::path::Path::new(&spec).exists() {
                let text = fs::read_to_string(&spec).with_context(|| format!("reading {spec}"))?;
                let file: QuandleFile = serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?;
                verify_quandle(&file.op)?
            } else {
                specs::quandle(&spec)?.verify()
            };
            ctx.emit(
                &json!({ "quandle": spec, "ok": verdict.is_ok(), "axiom": verdict.axiom(), "detail": verdict.to_string() }),
                &format!("{spec}: {verdict}\n"),
            );
            Ok(if verdict.is_ok() { 0 } else { 1 })
        }
        QuandleCmd::Make { spec, out } => {
            let file = QuandleFile::from_quandle(&specs::quandle(&spec)?);
            let text = serde_json::to_string_pretty(&file)?;
            match out {
                Some(p) => fs::write(&p, text + "\n").with_context(|| format!("writing {}", p.display()))?,
                None => println!("{text}"),
            }
            Ok(0)
        }
        QuandleCmd::Show { spec } => {
            let x = specs::quandle(&spec)?;
            let n = x.size();
            let labels: Vec<String> = (0..n).map(|a| x.label(a)).collect();
            let w = labels.iter().map(String::len).max().unwrap_or(1);
            let mut text = format!("{} ({} elements)\n{:>w$} |", x.name(), n, "*");
            for l in &labels {
                text.push_str(&format!(" {l:>w$}"));
            }
            text.push('\n');
            text.push_str(&"-".repeat((w + 1) * (n + 1) + 1));
            text.push('\n');
            for a in 0..n {
                text.push_str(&format!("{:>w$} |", labels[a]));
                for b in 0..n {
                    text.push_str(&format!(" {:>w$}", labels[x.op(a, b)]));
                }
                text.push('\n');
            }
            ctx.emit(&serde_json::to_value(QuandleFile::from_quandle(&x))?, &text);
            Ok(0)
        }
    }
}

fn colorings(ctx: &Ctx, k: &KnotArgs, quandle: &str, list: bool) -> Result<u8> {
    let (name, w) = resolve(k)?;
    let x = specs::quandle(quandle)?;
    let b = LaidOutBraid::new(&w, ctx.convention);
    let cs = closure_colorings(&b, &x, DEFAULT_COLORING_CAP)?;
    let trivial = cs.iter().filter(|c| c.kind == ColoringType::Trivial).count();
    let rows: Vec<Vec<String>> = cs.iter().map(|c| c.colors.iter().map(|&a| x.label(a)).collect()).collect();
    let mut text = format!("{name} over {}: {} colorings ({trivial} trivial, {} non-trivial)\n", x.name(), cs.len(), cs.len() - trivial);
    if list {
        for r in &rows {
            text.push_str(&format!("  ({})\n", r.join(", ")));
        }
    }
    let mut v = json!({
        "knot": name, "quandle": x.name(), "strands": w.strands(),
        "total": cs.len(), "trivial": trivial, "nontrivial": cs.len() - trivial,
    });
    if list {
        v["colorings"] = json!(rows);
    }
    ctx.emit(&v, &text);
    Ok(0)
}

fn module_cmd(ctx: &Ctx, k: &KnotArgs, quandle: &str, action: &str, q: u64) -> Result<u8> {
    let (name, w) = resolve(k)?;
    let x = specs::quandle(quandle)?;
    let act = specs::action(action, &x, q)?;
    let b = LaidOutBraid::new(&w, ctx.convention);
    let cs = closure_colorings(&b, &x, DEFAULT_COLORING_CAP)?;
    let m = module_invariant(&b, &cs, &act)?;
    let r = InvariantReport::from_module(&name, &m);
    if !ctx.dump_matrices {
        ctx.report(&r, json!({}));
        return Ok(0);
    }
    let mut dumps = Vec::new();
    let mut text = r.to_text();
    for c in &cs {
        let g = propagate(&b, &x, &c.colors)?;
        let map = braid_matrix(&b, &g, &act, None, 0)?;
        let n = map.linear.rows();
        let a = map.linear.sub(&IntMatrix::identity(n))?;
        let labels: Vec<String> = c.colors.iter().map(|&i| x.label(i)).collect();
        text.push_str(&format!("\ncoloring ({}):\n{a}", labels.join(", ")));
        dumps.push(json!({ "coloring": labels, "matrix": a.to_json() }));
    }
    let mut v = serde_json::to_value(&r)?;
    v["matrices"] = json!(dumps);
    ctx.emit(&v, &text);
    Ok(0)
}

fn conj_cmd(ctx: &Ctx, k: &KnotArgs, quandle: &str, beta: &str) -> Result<u8> {
    let (name, w) = resolve(k)?;
    let sc = specs::beta(beta)?;
    let x = specs::quandle(quandle)?;
    if x != *sc.cocycle.quandle() {
        bail!("{beta} is defined on {}, not on {quandle}", sc.cocycle.quandle().name());
    }
    let b = LaidOutBraid::new(&w, ctx.convention);
    let cs = closure_colorings(&b, &x, DEFAULT_COLORING_CAP)?;
    let m = conjugacy_invariant(&b, &cs, &sc.cocycle)?;
    ctx.report(&InvariantReport::from_conjugacy(&name, &m), json!({}));
    Ok(0)
}

fn bound(c: &specs::LoadedCochain, bind: Option<&str>) -> Result<VectorCochain> {
    Ok(match bind {
        Some(spec) => c.cochain.bind(&specs::bindings(spec, c.cochain.params())?),
        None => c.cochain.clone(),
    })
}

fn cocycle2_cmd(ctx: &Ctx, k: &KnotArgs, cocycle: &str, action: &str, quandle: Option<&str>, bind: Option<&str>) -> Result<u8> {
    let (name, w) = resolve(k)?;
    let c = specs::cochain(cocycle, action, quandle)?;
    let kappa = bound(&c, bind)?;
    let b = LaidOutBraid::new(&w, ctx.convention);
    let cs = closure_colorings(&b, c.action.quandle(), DEFAULT_COLORING_CAP)?;
    let m = cocycle2_invariant(&b, &cs, &c.action, &kappa)?;
    ctx.report(&InvariantReport::from_vectors(&name, "cocycle2", kappa.params(), &m), json!({ "quandle": c.quandle_spec }));
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn twistspin_cmd(
    ctx: &Ctx,
    k: &KnotArgs,
    cocycle: &str,
    action: &str,
    quandle: Option<&str>,
    bind: Option<&str>,
    twists: u32,
    orientation: Orientation,
    cfg: TwistConfig,
) -> Result<u8> {
    let (name, w) = resolve(k)?;
    let c = specs::cochain(cocycle, action, quandle)?;
    let kappa = bound(&c, bind)?;
    let b = LaidOutBraid::new(&w, ctx.convention);
    let cs = closure_colorings(&b, c.action.quandle(), DEFAULT_COLORING_CAP)?;
    let m = twistspin_invariant(&b, &cs, &c.action, &kappa, twists, orientation, cfg)?;
    let axis = match cfg.axis {
        Axis::First => 1,
        Axis::Last => w.strands(),
    };
    let r = InvariantReport::from_vectors(&name, "twistspin", kappa.params(), &m);
    ctx.report(&r, json!({ "quandle": c.quandle_spec, "twists": twists, "orientation": orientation, "axis_strand": axis, "exponent_offset": cfg.offset }));
    Ok(0)
}

fn cocycle_cmd(ctx: &Ctx, cmd: CocycleCmd) -> Result<u8> {
    match cmd {
        CocycleCmd::Verify { cocycle, beta, action, quandle } => {
            let (label, ok, detail) = match (cocycle, beta) {
                (_, Some(spec)) => {
                    let r = specs::beta(&spec)?.cocycle.verify();
                    (spec, r.is_ok(), format!("{r:?}"))
                }
                (Some(spec), None) => {
                    let c = specs::cochain(&spec, &action, quandle.as_deref())?;
                    let r = verify_cocycle(&c.cochain, &c.action)?;
                    (spec, r.is_ok(), format!("{r:?}"))
                }
                (None, None) => bail!("give --cocycle or --beta"),
            };
            let verdict = if ok { "cocycle".to_string() } else { format!("not a cocycle: {detail}") };
            ctx.emit(&json!({ "cocycle": label, "ok": ok, "detail": detail }), &format!("{label}: {verdict}\n"));
            Ok(if ok { 0 } else { 1 })
        }
        CocycleCmd::Search { quandle, action, q, degree, sample } => {
            let x = specs::quandle(&quandle)?;
            let act = specs::action(&action, &x, q)?;
            let space = search_cocycles(&act, degree)?;
            let (z, b) = (space.cocycles.len(), space.coboundaries.len());
            let mut text = format!(
                "degree {degree} over {} with {} mod {q}: cocycles of dimension {z}, coboundaries of dimension {b}, cohomology of dimension {}\n",
                x.name(),
                act.name(),
                z - b
            );
            let mut v = json!({
                "quandle": quandle, "action": act.name(), "modulus": q, "degree": degree,
                "cocycle_dimension": z, "coboundary_dimension": b, "cohomology_dimension": z - b,
                "cocycles": space.cocycles.iter().map(|c| CochainFile::from_cochain(c, &quandle)).collect::<Vec<_>>(),
            });
            if sample && z > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let mut acc = VectorCochain::zero(degree, x.size(), act.rank(), q, vec![]);
                for basis in &space.cocycles {
                    for _ in 0..rng.gen_range(0..q) {
                        acc = acc.add(basis)?;
                    }
                }
                let file = CochainFile::from_cochain(&acc, &quandle);
                text.push_str(&format!("sample (seed {}):\n{}\n", ctx.seed, serde_json::to_string_pretty(&file)?));
                v["sample"] = serde_json::to_value(&file)?;
            }
            ctx.emit(&v, &text);
            Ok(0)
        }
    }
}

fn render_expected(e: &Expected, params: &[String]) -> String {
    match e {
        Expected::Modules(m) => {
            m.values().iter().map(|(v, c)| format!("{c}x{v}")).collect::<Vec<_>>().join(" ")
        }
        Expected::Vectors(v) => v.iter().map(|(v, c)| format!("{c}x{}", render_vec(v, params))).collect::<Vec<_>>().join(" "),
    }
}

fn table_cmd(ctx: &Ctx, number: u8, only: Option<&str>, knot_table: Option<PathBuf>) -> Result<u8> {
    let table = bundled_table(number)?;
    let knots = specs::knot_table(knot_table.as_deref())?;
    let wanted: Option<Vec<String>> = only.map(|s| s.split(',').map(|k| k.trim().to_string()).filter(|k| !k.is_empty()).collect());
    if let Some(w) = &wanted {
        if let Some(missing) = w.iter().find(|k| table.row(k).is_none()) {
            bail!("table {number} has no row for {missing}");
        }
    }
    let rows: Vec<_> = table.rows.iter().filter(|r| wanted.as_ref().is_none_or(|w| w.contains(&r.knot))).collect();
    let results: Vec<(String, &str, String, String)> = rows
        .par_iter()
        .map(|row| {
            let expected = render_expected(&row.expected, &table.params);
            match knots.braid(&row.knot) {
                Err(e) => (row.knot.clone(), "SKIPPED", e.to_string(), expected),
                Ok(w) => match reproduce_row(number, row, &w, ctx.convention, TwistConfig::DEFAULT) {
                    Err(e) => (row.knot.clone(), "SKIPPED", e.to_string(), expected),
                    Ok((outcome, computed)) => {
                        let status = match outcome {
                            RowOutcome::Match => "PASS",
                            RowOutcome::Mismatch => "FAIL",
                            RowOutcome::Caution => "CAUTION",
                        };
                        (row.knot.clone(), status, computed, expected)
                    }
                },
            }
        })
        .collect();
    let count = |s: &str| results.iter().filter(|r| r.1 == s).count();
    let (pass, fail, caution, skip) = (count("PASS"), count("FAIL"), count("CAUTION"), count("SKIPPED"));
    let mut text = format!("table {number}: {}\n", table.title);
    for (knot, status, computed, expected) in &results {
        text.push_str(&format!("  {knot:<6} {status}\n"));
        match *status {
            "FAIL" | "CAUTION" => text.push_str(&format!("         computed {computed}\n         expected {expected}\n")),
            "SKIPPED" => text.push_str(&format!("         {computed}\n")),
            _ => {}
        }
    }
    text.push_str(&format!("{pass} passed, {fail} failed, {caution} caution, {skip} skipped\n"));
    let v = json!({
        "table": number,
        "title": table.title,
        "convention": ctx.convention.id(),
        "rows": results.iter().map(|(k, s, c, e)| json!({ "knot": k, "status": s, "computed": c, "expected": e })).collect::<Vec<_>>(),
        "passed": pass, "failed": fail, "caution": caution, "skipped": skip,
    });
    ctx.emit(&v, &text);
    Ok(if fail > 0 { 1 } else { 0 })
}

fn render_multiset(m: &Multiset<CoeffVec>, params: &[String]) -> String {
    m.values().iter().map(|(v, c)| format!("{c}x{}", render_vec(v, params))).collect::<Vec<_>>().join(" ")
}

fn report_cmd(ctx: &Ctx, kind: ReportKind, knots: Option<&str>, knot_table: Option<PathBuf>) -> Result<u8> {
    let table = specs::knot_table(knot_table.as_deref())?;
    let names: Vec<String> = match knots {
        Some(s) => s.split(',').map(|k| k.trim().to_string()).filter(|k| !k.is_empty()).collect(),
        None => table.usable(),
    };
    let conv = ctx.convention;
    let results: Vec<Result<(String, ComparisonReport, Vec<String>)>> = names
        .par_iter()
        .map(|name| {
            let w = table.braid(name)?;
            Ok(match kind {
                ReportKind::Invertibility => {
                    let (action, kappa) = quandle_cocycle::cocycle::r3_example3()?;
                    let b = LaidOutBraid::new(&w, conv);
                    let cs = closure_colorings(&b, action.quandle(), DEFAULT_COLORING_CAP)?;
                    let r = invertibility_report(&w, conv, &cs, &action, &kappa, 2, TwistConfig::DEFAULT)?;
                    (name.clone(), r, kappa.params().to_vec())
                }
                ReportKind::Chirality => {
                    let (action, kappa) = quandle_cocycle::cocycle::r3_example2()?;
                    let r = chirality_report(&w, conv, &action, &kappa, DEFAULT_COLORING_CAP)?;
                    (name.clone(), r, vec![])
                }
            })
        })
        .collect();
    let (what, pair) = match kind {
        ReportKind::Invertibility => ("non-invertible", ("forward", "reversed")),
        ReportKind::Chirality => ("chiral", ("knot", "mirror")),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in results {
        let (name, r, params) = r?;
        let verdict = match r.verdict {
            Detection::Detected => format!("{what} (detected)"),
            Detection::Inconclusive => "inconclusive".to_string(),
        };
        let (a, b) = (render_multiset(&r.first, &params), render_multiset(&r.second, &params));
        text.push_str(&format!("{name:<6} {verdict}\n         {}: {a}\n         {}: {b}\n", pair.0, pair.1));
        rows.push(json!({ "knot": name, "verdict": r.verdict, pair.0: a, pair.1: b }));
    }
    let detected = rows.iter().filter(|r| r["verdict"] == "detected").count();
    text.push_str(&format!("{detected} of {} detected as {what}\n", rows.len()));
    ctx.emit(&json!({ "report": format!("{kind:?}").to_lowercase(), "knots": rows, "detected": detected }), &text);
    Ok(0)
}
