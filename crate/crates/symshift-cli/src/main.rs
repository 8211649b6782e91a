use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use symshift::decomp::{irredundant_components, stable_ass};
use symshift::invariants::{analytic_spread, betti, depth_quotient, proj_dim, stab_report};
use symshift::polymatroid::{
    classify_sep, has_sep_bruteforce, is_polymatroidal, transversal_classify, veronese_factorization,
};
use symshift::toric::{check_quadratic_generation, fiber_type_check};
use symshift::{corpus, differential, Error, FiberMoves, IdealSpec, Partition, SymbolicMode, SymmetricIdeal};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "symshift", version, about = "Symmetric monomial ideals by partition generators")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct IdealSource {
    /// JSON file `{"n": …, "generators": [[…], …]}`.
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Principal Borel ideal `Sss({λ})`, e.g. `1,2,2,4,4`.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operation {
    Add,
    Intersect,
    Multiply,
    Power,
    Saturate,
    Radical,
    Symbolic,
    Expand,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Min,
    Ass,
}

#[derive(Subcommand)]
enum Cmd {
    /// Shiftedness and Borel generators.
    Check {
        #[command(flatten)]
        src: IdealSource,
    },
    /// One ideal operation.
    Op {
        #[arg(value_enum)]
        operation: Operation,
        #[command(flatten)]
        src: IdealSource,
        /// Second operand for add, intersect and multiply.
        #[arg(long)]
        other: Option<PathBuf>,
        /// Exponent for power and symbolic.
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Veronese height for saturate.
        #[arg(long, default_value_t = 1)]
        c: usize,
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
        /// Recompute with the expanded oracle and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Height, projective dimension, Betti numbers, analytic spread, depth of powers.
    Invariants {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Primary decomposition of `Sss({λ})^k`.
    Decompose {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        verify: bool,
    },
    /// Exchange properties of `Sss({λ})`.
    Polymatroid {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
    },
    /// Relation counts of the fiber cone, optionally a fiber-type certificate.
    Toric {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Report quadric connectivity per degree.
        #[arg(long)]
        quadrics: bool,
        /// Also certify fiber type in bidegrees up to (dmax, kmax).
        #[arg(long)]
        fiber_type: bool,
        #[arg(long, default_value_t = 1)]
        dmax: usize,
        /// Use every fiber-cone relation instead of the exchange quadrics.
        #[arg(long)]
        full_moves: bool,
    },
    /// Random differential tests of compressed operations against the oracle.
    OracleVerify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: usize,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
}

enum Status {
    Ok,
    VerificationFailed,
    Truncated,
}

struct Report {
    fields: Map<String, Value>,
    status: Status,
}

impl Report {
    fn new() -> Self {
        let mut fields = Map::new();
        fields.insert("schema_version".into(), json!(SCHEMA_VERSION));
        Report { fields, status: Status::Ok }
    }

    fn set(&mut self, key: &str, value: impl serde::Serialize) {
        self.fields.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    fn verdict(&mut self, key: &str, passed: bool) {
        self.set(key, if passed { "PASS" } else { "FAIL" });
        if !passed {
            self.status = Status::VerificationFailed;
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn render(report: &Report, as_json: bool) -> String {
    if as_json {
        return serde_json::to_string_pretty(&Value::Object(report.fields.clone())).expect("valid json");
    }
    let mut out = String::new();
    for (k, v) in &report.fields {
        match v {
            Value::Array(items) if items.iter().any(Value::is_object) => {
                out.push_str(&format!("{k}:\n"));
                for item in items {
                    out.push_str(&format!("  - {}\n", text_value(item)));
                }
            }
            _ => out.push_str(&format!("{k}: {}\n", text_value(v))),
        }
    }
    out.pop();
    out
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn read_spec(path: &PathBuf) -> Result<SymmetricIdeal, Error> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let spec: IdealSpec = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    SymmetricIdeal::from_spec(&spec)
}

fn partition(parts: &[u32]) -> Result<Partition, Error> {
    Partition::new(parts.to_vec()).map_err(|e| usage(format!("--lambda: {e}")))
}

fn load(src: &IdealSource) -> Result<SymmetricIdeal, Error> {
    match (&src.ideal, &src.lambda) {
        (Some(path), _) => read_spec(path),
        (None, Some(parts)) => {
            let lam = partition(parts)?;
            SymmetricIdeal::sss_closure(lam.n(), &[lam])
        }
        (None, None) => Err(usage("one of --ideal or --lambda is required")),
    }
}

fn gens_json(i: &SymmetricIdeal) -> Value {
    json!(i.gens().iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>())
}

fn describe(r: &mut Report, i: &SymmetricIdeal) {
    r.set("n", i.n());
    r.fields.insert("generators".into(), gens_json(i));
    r.set("shifted", i.is_shifted());
    r.set("strongly_shifted", i.is_strongly_shifted());
}

fn check(src: &IdealSource) -> Result<Report, Error> {
    let i = load(src)?;
    let mut r = Report::new();
    describe(&mut r, &i);
    r.set("equigenerated", i.is_equigenerated());
    if let Ok(b) = i.borel_generators() {
        r.set("borel_generators", b.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>());
    }
    if !i.is_zero() && !i.is_unit() {
        r.set("height", i.height()?);
    }
    Ok(r)
}

fn symbolic_mode(m: Mode) -> SymbolicMode {
    match m {
        Mode::Min => SymbolicMode::Min,
        Mode::Ass => SymbolicMode::Ass,
    }
}

fn op(
    operation: Operation,
    src: &IdealSource,
    other: Option<&PathBuf>,
    k: u32,
    c: usize,
    mode: Mode,
    verify: bool,
) -> Result<Report, Error> {
    let i = load(src)?;
    let second = || other.ok_or_else(|| usage("--other is required for this operation")).and_then(read_spec);
    let (result, oracle) = match operation {
        Operation::Add => {
            let j = second()?;
            (i.add(&j)?, verify.then(|| i.expand()?.sum(&j.expand()?)))
        }
        Operation::Intersect => {
            let j = second()?;
            (i.intersect(&j)?, verify.then(|| i.expand()?.intersect(&j.expand()?)))
        }
        Operation::Multiply => {
            let j = second()?;
            (i.multiply(&j)?, verify.then(|| i.expand()?.product(&j.expand()?)))
        }
        Operation::Power => (i.power(k)?, verify.then(|| i.expand()?.power(k))),
        Operation::Saturate => {
            let v = SymmetricIdeal::veronese(i.n(), c)?;
            (i.saturate_veronese(c)?, verify.then(|| i.expand()?.saturation(&v.expand()?)))
        }
        Operation::Radical => (
            i.radical()?,
            verify.then(|| {
                let e = i.expand()?;
                e.min_primes()?.iter().try_fold(symshift::MonomialIdeal::unit(i.n()), |acc, p| acc.intersect(&p.to_ideal(i.n())))
            }),
        ),
        Operation::Symbolic => {
            let m = symbolic_mode(mode);
            (i.symbolic_power(k, m)?, verify.then(|| i.expand()?.symbolic_power(k, m)))
        }
        Operation::Expand => (i.clone(), None),
    };
    let mut r = Report::new();
    describe(&mut r, &result);
    if let Operation::Expand = operation {
        let e = result.expand()?;
        r.set("monomials", e.gens().iter().map(|g| symshift::oracle::monomial_string(g)).collect::<Vec<_>>());
    }
    if let Some(o) = oracle {
        r.verdict("oracle", result.expand()? == o?);
    }
    Ok(r)
}

fn invariants(src: &IdealSource, kmax: u32) -> Result<Report, Error> {
    let i = load(src)?;
    let mut r = Report::new();
    r.set("n", i.n());
    r.fields.insert("generators".into(), gens_json(&i));
    r.set("height", i.height()?);
    if i.is_shifted() {
        r.set("pd", proj_dim(&i)?);
        r.set("depth", depth_quotient(&i)?);
        let b = betti(&i)?;
        r.set("betti_totals", &b.totals);
        if let Some(g) = &b.graded {
            let rows: Vec<Value> = g.iter().map(|(&(h, d), &v)| json!({"i": h, "j": d, "beta": v})).collect();
            r.set("betti_graded", rows);
        }
        if let Some(ok) = b.hilbert_verified {
            r.verdict("hilbert_check", ok);
        }
    }
    if i.is_equigenerated() {
        match analytic_spread(&i) {
            Ok(s) => r.set("spread", s),
            Err(Error::Verification(msg)) => {
                r.set("spread_error", msg);
                r.status = Status::VerificationFailed;
            }
            Err(e) => return Err(e),
        }
        if i.is_strongly_shifted() {
            let s = stab_report(&i, kmax)?;
            r.set("depth_table", &s.depth_table);
            r.set("ass_table", &s.ass_table);
            r.set("stab", json!({
                "dstab_observed": s.dstab_observed,
                "astab_observed": s.astab_observed,
                "horizon_limited": s.horizon_limited,
                "certified": s.certified,
                "bound": s.bound,
            }));
        }
    }
    Ok(r)
}

fn decompose(lambda: &[u32], k: u32, verify: bool) -> Result<Report, Error> {
    let lam = partition(lambda)?;
    let d = irredundant_components(&lam, k)?;
    let mut r = Report::new();
    r.set("lambda", lam.parts());
    r.set("k", k);
    r.set("components", &d.components);
    r.set("kept", d.kept().map(|c| (c.j, c.exponent)).collect::<Vec<_>>());
    r.set("stable_ass", stable_ass(&lam)?);
    r.verdict("compressed_check", d.verify()?);
    if verify {
        let n = lam.n();
        let mut acc = symshift::MonomialIdeal::unit(n);
        for c in d.kept() {
            acc = acc.intersect(&c.veronese(n).to_ideal()?.expand()?)?;
        }
        let power = SymmetricIdeal::sss_closure(n, std::slice::from_ref(&lam))?.expand()?.power(k)?;
        r.verdict("oracle", acc == power);
    }
    Ok(r)
}

fn polymatroid(lambda: &[u32]) -> Result<Report, Error> {
    let lam = partition(lambda)?;
    let i = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(&lam))?;
    let mut r = Report::new();
    r.set("lambda", lam.parts());
    let ex = is_polymatroidal(&i)?;
    r.set("polymatroidal", ex.polymatroidal);
    r.set("symmetric_exchange", ex.symmetric);
    let sep = classify_sep(&lam)?;
    r.set("sep_type", sep);
    r.verdict("sep_bruteforce", has_sep_bruteforce(&i)? == sep.has_sep());
    r.set("transversal", transversal_classify(&lam)?);
    r.set("factorization", veronese_factorization(&lam)?);
    Ok(r)
}

fn toric(src: &IdealSource, kmax: usize, quadrics: bool, fiber_type: bool, dmax: usize, full: bool) -> Result<Report, Error> {
    let i = load(src)?;
    let q = check_quadratic_generation(&i, kmax)?;
    let mut r = Report::new();
    r.set("n", i.n());
    r.set("fiber_generators", q.generators);
    let counts: Vec<String> = q.minimal_relation_counts.iter().map(|(k, c)| format!("deg{k}={c}")).collect();
    r.set("new_minimal_relations", counts.join(", "));
    if quadrics {
        r.set("exchange_quadrics", q.quadrics);
        r.set("quadric_connected", q.quadric_connected.iter().map(|(k, c)| (k.to_string(), Value::Bool(*c))).collect::<Map<String, Value>>());
        r.set("generated_by_quadrics_up_to", q.generated_by_quadrics_up_to);
    }
    if let Some(k) = q.truncated_at {
        r.set("truncated_at_degree", k);
        r.status = Status::Truncated;
    }
    if fiber_type {
        let mode = if full { FiberMoves::Full } else { FiberMoves::Quadrics };
        let f = fiber_type_check(&i, dmax, kmax, mode)?;
        r.set("fiber_type", &f);
        if f.truncated_at.is_some() {
            r.status = Status::Truncated;
        } else if !f.failed.is_empty() {
            r.status = Status::VerificationFailed;
        }
    }
    Ok(r)
}

fn oracle_verify(seed: u64, cases: usize, n: usize, max_degree: u32) -> Result<Report, Error> {
    if n == 0 {
        return Err(usage("--n must be positive"));
    }
    let mut rng = corpus::rng(seed);
    let mut tally: Map<String, Value> = Map::new();
    let mut failures = Vec::new();
    for case in 0..cases {
        for o in differential::run_case(&mut rng, n, max_degree)? {
            let entry = tally.entry(o.check).or_insert_with(|| json!({"pass": 0, "fail": 0}));
            let key = if o.passed { "pass" } else { "fail" };
            entry[key] = json!(entry[key].as_u64().unwrap_or(0) + 1);
            if !o.passed {
                failures.push(json!({"case": case, "check": o.check, "input": o.input}));
            }
        }
    }
    let mut r = Report::new();
    r.set("seed", seed);
    r.set("cases", cases);
    r.set("checks", tally);
    let ok = failures.is_empty();
    if !ok {
        r.set("failures", failures);
    }
    r.verdict("result", ok);
    Ok(r)
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.cmd {
        Cmd::Check { src } => check(src),
        Cmd::Op { operation, src, other, k, c, mode, verify } => op(*operation, src, other.as_ref(), *k, *c, *mode, *verify),
        Cmd::Invariants { src, kmax } => invariants(src, *kmax),
        Cmd::Decompose { lambda, k, verify } => decompose(lambda, *k, *verify),
        Cmd::Polymatroid { lambda } => polymatroid(lambda),
        Cmd::Toric { src, kmax, quadrics, fiber_type, dmax, full_moves } => {
            toric(src, *kmax, *quadrics, *fiber_type, *dmax, *full_moves)
        }
        Cmd::OracleVerify { seed, cases, n, max_degree } => oracle_verify(*seed, *cases, *n, *max_degree),
    }
}

/// Print to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            emit(&render(&report, cli.json));
            ExitCode::from(match report.status {
                Status::Ok => 0,
                Status::VerificationFailed => 2,
                Status::Truncated => 3,
            })
        }
        Err(e) => {
            let code = match e {
                Error::Budget { .. } => 3,
                Error::Verification(_) => 2,
                _ => 1,
            };
            if cli.json {
                emit(&json!({"schema_version": SCHEMA_VERSION, "error": e.to_string()}).to_string());
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
