mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use report::{InputDigest, RunReport, Verdict};
use tropcomp::grasstrop::{
    check_refinement, lineality_report, membership_equiv_report, pluecker_ideal, pluecker_valuation,
    realizability_report, refinement_corpus_report, tree_from_point, LaurentMatrixJson, PhyloTreeJson,
};
use tropcomp::groebner::{groebner_cone, in_tropical_variety, initial_ideal, ConeJson};
use tropcomp::matroidlab::{
    all_octahedra, face_restrict, is_matroid, is_matroid_decomposition, octahedron_class, octahedron_values, subdivide,
    values_of, Hypersimplex, LiftFunction, LiftFunctionJson, Matroid, SubdivisionJson,
};
use tropcomp::polycore::{Ideal, IdealJson, Rational, WeightVector};
use tropcomp::Error;

#[derive(Parser)]
#[command(name = "tropcomp", version, about = "Tropical compactification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Initial ideal of an ideal under a weight.
    Initial(IdealArgs),
    /// Tropical variety membership of a weight.
    Tropmember(IdealArgs),
    /// Gröbner cone of a weight.
    GfanCone(IdealArgs),
    /// Regular subdivision induced by a lift function.
    Subdivide(LiftArgs),
    /// Basis-exchange check of a set of bases.
    MatroidCheck(InputArgs),
    /// Octahedron class of `(I, J)`.
    Crossratio(CrossArgs),
    /// Restriction of a lift function to a facet.
    Face(FaceArgs),
    /// Plücker valuation of a Laurent matrix.
    PlueckerVal(InputArgs),
    /// Phylogenetic tree of a point of TGr(2, n).
    Tree(LiftArgs),
    /// Three-term tropical Plücker relations on every octahedron.
    DressianCheck(LiftArgs),
    /// Refinement certificate for a pair of tropical points.
    Refine(RefineArgs),
    /// Seeded property suite.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct IdealArgs {
    /// Ideal JSON; defaults to the Plücker ideal of Gr(r, n).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct LiftArgs {
    /// Lift function JSON.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct CrossArgs {
    #[command(flatten)]
    lift: LiftArgs,
    /// Comma-separated 4-set.
    #[arg(long)]
    i: String,
    /// Comma-separated (r-2)-set.
    #[arg(long, default_value = "")]
    j: String,
}

#[derive(Args)]
struct FaceArgs {
    #[command(flatten)]
    lift: LiftArgs,
    #[arg(long)]
    i0: usize,
    #[arg(long)]
    value: u8,
}

#[derive(Args)]
struct RefineArgs {
    #[arg(long)]
    fine: PathBuf,
    #[arg(long)]
    coarse: PathBuf,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SuiteArgs {
    /// membership-equiv, realizability, lineality or refinement-corpus.
    #[arg(long)]
    name: String,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

/// An input problem: exit code 2 and an error report.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

struct Outcome {
    verdict: Verdict,
    counterexamples: Vec<Value>,
    result: Value,
}

fn pass(result: Value) -> Outcome {
    Outcome { verdict: Verdict::Pass, counterexamples: Vec::new(), result }
}

fn fail(result: Value, counterexamples: Vec<Value>) -> Outcome {
    Outcome { verdict: Verdict::Fail, counterexamples, result }
}

/// Verdict-type errors become a failing report; the rest are input errors.
fn verdict_error(e: Error, context: Value) -> Result<Outcome, InputError> {
    match e {
        Error::NotTropical(_) | Error::NoCertificate(_) | Error::Inconsistency(_) | Error::NoDescent { .. } => {
            let msg = e.to_string();
            Ok(fail(json!({ "error": msg }), vec![json!({ "input": context, "detail": msg })]))
        }
        e => Err(e.into()),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

struct Ctx {
    digest: InputDigest,
}

impl Ctx {
    fn arg(&mut self, label: &str, value: impl std::fmt::Display) {
        self.digest.push(label, value.to_string().as_bytes());
    }

    fn read(&mut self, label: &str, path: &Path) -> Result<Vec<u8>, InputError> {
        let bytes = fs::read(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
        self.digest.push(label, &bytes);
        Ok(bytes)
    }

    fn json<T: DeserializeOwned>(&mut self, label: &str, path: &Path) -> Result<T, InputError> {
        let bytes = self.read(label, path)?;
        serde_json::from_slice(&bytes).map_err(|e| InputError(format!("malformed JSON in {}: {e}", path.display())))
    }

    fn lift(&mut self, args: &LiftArgs) -> Result<LiftFunction, InputError> {
        let j: LiftFunctionJson = self.json("input", &args.input)?;
        let w = j.to_lift()?;
        if let Some(r) = args.r {
            self.arg("r", r);
            if r != w.r() {
                return Err(InputError(format!("--r {r} does not match the lift function's r = {}", w.r())));
            }
        }
        if let Some(n) = args.n {
            self.arg("n", n);
            if n != w.n() {
                return Err(InputError(format!("--n {n} does not match the lift function's n = {}", w.n())));
            }
        }
        Ok(w)
    }

    fn ideal(&mut self, args: &IdealArgs) -> Result<(Ideal, WeightVector), InputError> {
        let ideal = match (&args.input, args.r, args.n) {
            (Some(p), _, _) => self.json::<IdealJson>("input", p)?.to_ideal()?,
            (None, Some(r), Some(n)) => {
                self.arg("r", r);
                self.arg("n", n);
                pluecker_ideal(r, n)?
            }
            _ => return Err(InputError("need --input or both --r and --n".into())),
        };
        self.arg("weight", &args.weight);
        let w = parse_weight(&args.weight)?;
        if w.len() != ideal.nvars() {
            return Err(InputError(format!("weight has {} entries, ring has {} variables", w.len(), ideal.nvars())));
        }
        Ok((ideal, w))
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, InputError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| InputError(format!("bad {what} entry {t:?}"))))
        .collect()
}

fn parse_weight(s: &str) -> Result<WeightVector, InputError> {
    Ok(WeightVector::new(parse_list::<Rational>(s, "weight")?))
}

#[derive(Deserialize)]
struct BasesJson {
    n: usize,
    bases: Vec<Vec<usize>>,
}

fn run(command: &Command, ctx: &mut Ctx) -> Result<Outcome, InputError> {
    match command {
        Command::Initial(a) => {
            let (ideal, w) = ctx.ideal(a)?;
            let init = initial_ideal(&ideal, &w)?;
            Ok(pass(to_value(&IdealJson::from_ideal_text(&init))))
        }
        Command::Tropmember(a) => {
            let (ideal, w) = ctx.ideal(a)?;
            let trop = in_tropical_variety(&ideal, &w)?;
            let result = json!({ "tropical": trop });
            Ok(if trop { pass(result) } else { fail(result, vec![json!({ "weight": w })]) })
        }
        Command::GfanCone(a) => {
            let (ideal, w) = ctx.ideal(a)?;
            Ok(pass(to_value(&ConeJson::from_cone(&groebner_cone(&ideal, &w)?))))
        }
        Command::Subdivide(a) => {
            let w = ctx.lift(a)?;
            let s = subdivide(&w)?;
            let matroidal = is_matroid_decomposition(&s);
            let result = json!({ "subdivision": SubdivisionJson::from_subdivision(&s), "matroid": matroidal });
            if matroidal {
                Ok(pass(result))
            } else {
                let bad: Vec<Value> = s
                    .cells()
                    .iter()
                    .filter(|c| !is_matroid(c).unwrap_or(false))
                    .map(|c| json!({ "cell": c.iter().map(|b| b.members().to_vec()).collect::<Vec<_>>() }))
                    .collect();
                Ok(fail(result, bad))
            }
        }
        Command::MatroidCheck(a) => {
            let j: BasesJson = ctx.json("input", &a.input)?;
            let r = j.bases.first().map_or(0, Vec::len);
            let shape = Hypersimplex::new(r, j.n)?;
            let bases = j.bases.iter().map(|b| shape.subset(b.clone())).collect::<tropcomp::Result<Vec<_>>>()?;
            if is_matroid(&bases)? {
                let connected = Matroid::new(bases)?.is_connected()?;
                Ok(pass(json!({ "matroid": true, "connected": connected })))
            } else {
                Ok(fail(json!({ "matroid": false }), vec![json!({ "bases": j.bases })]))
            }
        }
        Command::Crossratio(a) => {
            let w = ctx.lift(&a.lift)?;
            ctx.arg("i", &a.i);
            ctx.arg("j", &a.j);
            let i: Vec<usize> = parse_list(&a.i, "I")?;
            let j: Vec<usize> = parse_list(&a.j, "J")?;
            let vals = octahedron_values(&w, &i, &j)?;
            match octahedron_class(&vals) {
                Ok(c) => Ok(pass(json!({ "class": c, "values": vals }))),
                Err(e) => verdict_error(e, json!({ "I": i, "J": j, "values": vals })),
            }
        }
        Command::Face(a) => {
            let w = ctx.lift(&a.lift)?;
            ctx.arg("i0", a.i0);
            ctx.arg("value", a.value);
            Ok(pass(to_value(&LiftFunctionJson::from_lift(&face_restrict(&w, a.i0, a.value)?))))
        }
        Command::PlueckerVal(a) => {
            let j: LaurentMatrixJson = ctx.json("input", &a.input)?;
            let w = pluecker_valuation(&j.to_matrix()?)?;
            Ok(pass(to_value(&LiftFunctionJson::from_lift(&w))))
        }
        Command::Tree(a) => {
            let w = ctx.lift(a)?;
            if w.r() != 2 {
                return Err(InputError(format!("tree needs r = 2, got r = {}", w.r())));
            }
            match tree_from_point(&w) {
                Ok(t) => Ok(pass(to_value(&PhyloTreeJson::from_tree(&t)))),
                Err(e) => verdict_error(e, to_value(&LiftFunctionJson::from_lift(&w))),
            }
        }
        Command::DressianCheck(a) => {
            let w = ctx.lift(a)?;
            let mut bad = Vec::new();
            for oct in all_octahedra(w.r(), w.n()) {
                let vals = values_of(&w, &oct)?;
                if let Err(e) = octahedron_class(&vals) {
                    bad.push(json!({ "I": oct.i, "J": oct.j, "values": vals, "detail": e.to_string() }));
                }
            }
            let result = json!({ "dressian": bad.is_empty(), "octahedra": all_octahedra(w.r(), w.n()).len() });
            Ok(if bad.is_empty() { pass(result) } else { fail(result, bad) })
        }
        Command::Refine(a) => {
            let fine: LiftFunctionJson = ctx.json("fine", &a.fine)?;
            let coarse: LiftFunctionJson = ctx.json("coarse", &a.coarse)?;
            ctx.arg("r", a.r);
            ctx.arg("n", a.n);
            let (fine, coarse) = (fine.to_lift()?, coarse.to_lift()?);
            match check_refinement(&fine, &coarse, a.r, a.n) {
                Ok(c) => Ok(pass(to_value(&c))),
                Err(e) => verdict_error(
                    e,
                    json!({ "fine": LiftFunctionJson::from_lift(&fine), "coarse": LiftFunctionJson::from_lift(&coarse) }),
                ),
            }
        }
        Command::Suite(a) => {
            ctx.arg("name", &a.name);
            ctx.arg("seed", a.seed);
            ctx.arg("trials", a.trials);
            let (r, n) = (a.r.unwrap_or(2), a.n.unwrap_or(5));
            ctx.arg("r", r);
            ctx.arg("n", n);
            let report = match a.name.as_str() {
                "membership-equiv" => {
                    if r != 2 {
                        return Err(InputError("membership-equiv needs r = 2".into()));
                    }
                    membership_equiv_report(n, a.trials, a.seed)?
                }
                "realizability" => realizability_report(r, n, a.trials, a.seed)?,
                "lineality" => lineality_report(r, n, a.trials, a.seed)?,
                "refinement-corpus" => refinement_corpus_report(r, n, a.trials, a.seed)?,
                other => return Err(InputError(format!("unknown suite {other:?}"))),
            };
            let counterexamples: Vec<Value> = report.counterexamples.iter().map(to_value).collect();
            let result = to_value(&report);
            Ok(if report.ok() { pass(result) } else { fail(result, counterexamples) })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Initial(_) => "initial",
        Command::Tropmember(_) => "tropmember",
        Command::GfanCone(_) => "gfan-cone",
        Command::Subdivide(_) => "subdivide",
        Command::MatroidCheck(_) => "matroid-check",
        Command::Crossratio(_) => "crossratio",
        Command::Face(_) => "face",
        Command::PlueckerVal(_) => "pluecker-val",
        Command::Tree(_) => "tree",
        Command::DressianCheck(_) => "dressian-check",
        Command::Refine(_) => "refine",
        Command::Suite(_) => "suite",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let mut ctx = Ctx { digest: InputDigest::new(name) };
    let outcome = match run(&cli.command, &mut ctx) {
        Ok(o) => o,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            Outcome { verdict: Verdict::Error, counterexamples: Vec::new(), result: json!({ "error": msg }) }
        }
    };
    let report = RunReport {
        command: name.to_string(),
        input_digest: ctx.digest.finish(),
        verdict: outcome.verdict,
        counterexamples: outcome.counterexamples,
        result: outcome.result,
        timing_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    let written = match &cli.output {
        Some(p) => fs::write(p, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code())
}
