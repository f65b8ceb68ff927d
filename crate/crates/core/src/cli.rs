//! Command-line front end.
//!
//! Exit status: 0 on a completed analysis (an infeasibility finding included),
//! 1 on bad input, 2 when a certification or internal identity check fails.

use std::ffi::OsString;
use std::io::Write;
use std::sync::mpsc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classify::{builtin_jsets, classify, detect_pattern, ClassificationResult, ImprimitivityPattern};
use crate::d6::sweep::{sweep_with_progress, Progress, SweepConfig};
use crate::d6::{
    certify_infeasible_with_width, recheck_json, validate, Certificate, D6Error, FailStep, Grid, RecheckReport,
    SweepReport,
};
use crate::exact::number::Number;
use crate::exact::rat::{self, Rat};
use crate::exact::sturm::AlgebraicReal;
use crate::scheme::{
    build_table, feasibility_check, from_relation_matrices, parse_relation_file, FeasibilityReport, KreinArray,
    ParameterTable, ParseError, SchemeError,
};

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cometric", version, about = "Exact parameter tables and certificates for cometric association schemes")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Width of reported enclosures, as a rational such as 1/1048576.
    #[arg(long, global = true, value_parser = parse_rat)]
    pub width: Option<Rat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full parameter table of a Krein array such as "{3,2,1;1,2,3}".
    Table { krein: String },
    /// Integrality and nonnegativity conditions.
    Check { krein: String },
    /// Imprimitivity flags and block patterns.
    Classify { krein: String },
    /// Certify that one member of the six-class family cannot exist.
    #[command(name = "d6-verify")]
    D6Verify(VerifyArgs),
    /// Certify a grid of six-class parameters; progress as NDJSON with --format json.
    #[command(name = "d6-sweep")]
    D6Sweep(SweepArgs),
    /// Table of a scheme given by relation matrices, compared with the Krein-array route.
    Oracle { file: std::path::PathBuf },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_rat, required_unless_present = "recheck")]
    pub m: Option<Rat>,
    #[arg(long, value_parser = parse_rat, required_unless_present = "recheck")]
    pub c2: Option<Rat>,
    #[arg(long, value_parser = parse_rat, required_unless_present = "recheck")]
    pub b3: Option<Rat>,
    #[arg(long, value_parser = parse_rat, required_unless_present = "recheck")]
    pub b4: Option<Rat>,
    #[arg(long, value_parser = parse_rat, required_unless_present = "recheck")]
    pub c5: Option<Rat>,
    /// Re-verify a certificate file using only its serialized data.
    #[arg(long, conflicts_with_all = ["m", "c2", "b3", "b4", "c5"])]
    pub recheck: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    pub m_min: i64,
    #[arg(long, default_value_t = 8)]
    pub m_max: i64,
    /// Grid step for c2, b3, b4, c5.
    #[arg(long, value_parser = parse_rat, default_value = "1/2")]
    pub step: Rat,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Also re-verify every certificate from its JSON form.
    #[arg(long)]
    pub recheck: bool,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    rat::parse(s).map_err(|e| e.0)
}

/// An error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    fn input(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            code: 1,
            kind,
            message: message.to_string(),
        }
    }

    fn internal(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            code: 2,
            kind,
            message: message.to_string(),
        }
    }
}

fn from_parse(e: ParseError) -> Failure {
    match e {
        ParseError::Syntax { .. } => Failure::input("ParseError", e),
        ParseError::Invalid(_) => Failure::input("ValidationError", e),
    }
}

fn from_scheme(e: SchemeError) -> Failure {
    match e {
        SchemeError::IdentityCheckFailed(_) | SchemeError::SingularQ => Failure::internal("IdentityCheckFailed", e),
        SchemeError::FewerThanD1RealRoots { .. } => Failure::input("FewerThanD1RealRoots", e),
        SchemeError::NotAnAssociationScheme(_) => Failure::input("NotAnAssociationScheme", e),
        SchemeError::NotCometric => Failure::input("NotCometric", e),
        SchemeError::IrrationalSpectrum => Failure::input("IrrationalSpectrum", e),
    }
}

fn from_d6(e: D6Error) -> Failure {
    match e {
        D6Error::InvalidParams(inv) => Failure::input("InvalidParams", inv),
        D6Error::Scheme(s) => from_scheme(s),
        D6Error::CertificationFailed { .. } => Failure::internal("CertificationFailed", e),
        D6Error::BoundViolation(_) => Failure::internal("BoundViolation", e),
        D6Error::DenominatorNotPositive => Failure::internal("DenominatorNotPositive", e),
        D6Error::IdentityCheckFailed(_) => Failure::internal("IdentityCheckFailed", e),
    }
}

/// A table entry: exact when rational, otherwise an enclosure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Exact {
        #[serde(with = "rat::serde_rat")]
        exact: Rat,
    },
    Enclosure {
        #[serde(with = "rat::serde_rat")]
        lo: Rat,
        #[serde(with = "rat::serde_rat")]
        hi: Rat,
    },
}

impl Entry {
    fn of(n: &Number, width: &Rat) -> Entry {
        match n.as_rational() {
            Some(q) => Entry::Exact { exact: q.clone() },
            None => {
                let e = n.enclosure(width);
                Entry::Enclosure { lo: e.lo, hi: e.hi }
            }
        }
    }

    fn of_root(x: &AlgebraicReal, width: &Rat) -> Entry {
        match x.to_rational() {
            Some(q) => Entry::Exact { exact: q },
            None => {
                let e = x.refine(width).enclosure();
                Entry::Enclosure { lo: e.lo, hi: e.hi }
            }
        }
    }

    fn text(&self) -> String {
        match self {
            Entry::Exact { exact } => rat::format(exact),
            Entry::Enclosure { lo, hi } => format!("~{:.8}", rat::to_f64(&rat::midpoint(lo, hi))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub schema: String,
    pub version: u32,
    pub krein_array: KreinArray,
    pub d: usize,
    #[serde(with = "rat::serde_rat")]
    pub n: Rat,
    pub dual_eigenvalues: Vec<Entry>,
    #[serde(with = "rat::serde_rat_vec")]
    pub multiplicities: Vec<Rat>,
    pub valencies: Vec<Entry>,
    /// `q[i][j] = Q_{ij}`.
    pub q: Vec<Vec<Entry>>,
    /// `p[j][i] = P_{ji}`.
    pub p: Vec<Vec<Entry>>,
    /// `krein[i][j][h] = q^h_{ij}`.
    pub krein: Vec<Vec<Vec<Entry>>>,
    /// `intersection[i][j][h] = p^h_{ij}`.
    pub intersection: Vec<Vec<Vec<Entry>>>,
}

impl TableReport {
    pub fn new(k: &KreinArray, t: &ParameterTable, width: &Rat) -> Self {
        let grid = |m: &Vec<Vec<Number>>| -> Vec<Vec<Entry>> {
            m.iter().map(|r| r.iter().map(|v| Entry::of(v, width)).collect()).collect()
        };
        TableReport {
            schema: "cometric/table".into(),
            version: VERSION,
            krein_array: k.clone(),
            d: t.d,
            n: t.n.clone(),
            dual_eigenvalues: t.x.iter().map(|x| Entry::of_root(x, width)).collect(),
            multiplicities: t.mult.clone(),
            valencies: t.k.iter().map(|v| Entry::of(v, width)).collect(),
            q: grid(&t.q_mat),
            p: grid(&t.p_mat),
            krein: t
                .krein
                .iter()
                .map(|a| {
                    a.iter()
                        .map(|b| b.iter().map(|q| Entry::Exact { exact: q.clone() }).collect())
                        .collect()
                })
                .collect(),
            intersection: t.intersection.iter().map(grid).collect(),
        }
    }

    fn text(&self) -> String {
        let row = |r: &[Entry]| r.iter().map(Entry::text).collect::<Vec<_>>().join("  ");
        let mut s = format!("Krein array {}\nd = {}, n = {}\n", self.krein_array, self.d, rat::format(&self.n));
        s += &format!("dual eigenvalues: {}\n", row(&self.dual_eigenvalues));
        s += &format!(
            "multiplicities: {}\n",
            self.multiplicities.iter().map(rat::format).collect::<Vec<_>>().join("  ")
        );
        s += &format!("valencies: {}\n", row(&self.valencies));
        s += "Q:\n";
        for r in &self.q {
            s += &format!("  {}\n", row(r));
        }
        s += "P:\n";
        for r in &self.p {
            s += &format!("  {}\n", row(r));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: String,
    pub version: u32,
    pub krein_array: KreinArray,
    pub feasible: bool,
    pub report: FeasibilityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: String,
    pub version: u32,
    pub krein_array: KreinArray,
    pub summary: String,
    pub result: ClassificationResult,
    /// Built-in idempotent sets that form a block pattern; empty when no table exists.
    pub patterns: Vec<ImprimitivityPattern>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecheckOutput {
    pub schema: String,
    pub version: u32,
    pub passed: bool,
    pub report: RecheckReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema: String,
    pub version: u32,
    pub points: usize,
    pub krein_array: KreinArray,
    pub matches_build_table: bool,
    pub difference: Option<String>,
    pub table: TableReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum SweepEvent {
    Progress { done: usize, total: usize },
    Summary {
        schema: String,
        version: u32,
        clean: bool,
        report: SweepReport,
    },
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn io(e: std::io::Error) -> Failure {
    Failure::internal("Io", e)
}

fn run_table(out: &mut dyn Write, fmt: Format, width: &Rat, krein: &str) -> Result<(), Failure> {
    let k = KreinArray::parse(krein).map_err(from_parse)?;
    let t = build_table(&k).map_err(from_scheme)?;
    let r = TableReport::new(&k, &t, width);
    match fmt {
        Format::Json => writeln!(out, "{}", json(&r)),
        Format::Text => write!(out, "{}", r.text()),
    }
    .map_err(io)
}

fn run_check(out: &mut dyn Write, fmt: Format, krein: &str) -> Result<(), Failure> {
    let k = KreinArray::parse(krein).map_err(from_parse)?;
    let t = build_table(&k).map_err(from_scheme)?;
    let report = feasibility_check(&t);
    let r = CheckReport {
        schema: "cometric/check".into(),
        version: VERSION,
        krein_array: k,
        feasible: report.passed(),
        report,
    };
    match fmt {
        Format::Json => writeln!(out, "{}", json(&r)).map_err(io),
        Format::Text => {
            for c in &r.report.conditions {
                writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name).map_err(io)?;
                for v in &c.violations {
                    let (lo, hi) = v.enclosure.to_f64_pair();
                    writeln!(out, "  {:?} {} in [{lo:.8}, {hi:.8}]", v.index, v.reason).map_err(io)?;
                }
            }
            writeln!(out, "{}", if r.feasible { "feasible" } else { "infeasible" }).map_err(io)
        }
    }
}

fn run_classify(out: &mut dyn Write, fmt: Format, krein: &str) -> Result<(), Failure> {
    let k = KreinArray::parse(krein).map_err(from_parse)?;
    let result = classify(&k);
    let patterns = match build_table(&k) {
        Ok(t) => builtin_jsets(t.d)
            .iter()
            .filter_map(|j| detect_pattern(&t, j).ok())
            .collect(),
        Err(_) => Vec::new(),
    };
    let r = ClassifyReport {
        schema: "cometric/classify".into(),
        version: VERSION,
        krein_array: k,
        summary: result.summary(),
        result,
        patterns,
    };
    match fmt {
        Format::Json => writeln!(out, "{}", json(&r)).map_err(io),
        Format::Text => {
            writeln!(out, "{}", r.summary).map_err(io)?;
            for p in &r.patterns {
                writeln!(
                    out,
                    "pattern J = {:?}: I = {:?}, r = {}, s = {}",
                    p.jset,
                    p.iset,
                    rat::format(&p.r),
                    rat::format(&p.s)
                )
                .map_err(io)?;
            }
            Ok(())
        }
    }
}

fn certificate_text(c: &Certificate) -> String {
    let f = |q: &Rat| rat::to_f64(q);
    let direct = match c.direct.verdict {
        crate::d6::certificate::DirectVerdict::BelowOne => "r < 1",
        crate::d6::certificate::DirectVerdict::BetweenOneAndTwo => "1 < r < 2",
    };
    let mut s = format!("parameters {}: n = {}\n", c.params.label(), rat::format(&c.params.n));
    s += &format!("Krein array {}\n", c.krein_array);
    s += &format!("cubic: {}\n", crate::d6::cubic(&c.params));
    s += &format!(
        "x1 in ({}, {}) ~ {:.10}\n",
        rat::format(&c.x1_enclosure.lo),
        rat::format(&c.x1_enclosure.hi),
        f(&c.x1_enclosure.lo)
    );
    s += &format!(
        "r = p^1_16 + 1 in [{:.10}, {:.10}]\n",
        f(&c.r_enclosure.lo),
        f(&c.r_enclosure.hi)
    );
    s += &format!("alpha = {}\n", rat::format(&c.alpha));
    s += &format!("p^1_16 = 0 refuted ({} claims)\n", c.branch_zero.len());
    s += &format!("p^1_16 >= 1 refuted ({} claims)\n", c.branch_positive.len());
    s += &format!("direct enclosure: {direct}\n");
    s += "verdict: infeasible\n";
    s
}

fn run_verify(out: &mut dyn Write, fmt: Format, width: &Rat, a: &VerifyArgs) -> Result<(), Failure> {
    if let Some(path) = &a.recheck {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))?;
        let report = recheck_json(&text).map_err(|e| Failure::input("ParseError", e))?;
        let r = RecheckOutput {
            schema: "cometric/recheck".into(),
            version: VERSION,
            passed: report.passed(),
            report,
        };
        match fmt {
            Format::Json => writeln!(out, "{}", json(&r)).map_err(io)?,
            Format::Text => {
                writeln!(out, "{} claims checked", r.report.claims_checked).map_err(io)?;
                for f in &r.report.failures {
                    writeln!(out, "FAIL {f}").map_err(io)?;
                }
                writeln!(out, "{}", if r.passed { "recheck passed" } else { "recheck failed" }).map_err(io)?;
            }
        }
        return if r.passed {
            Ok(())
        } else {
            Err(Failure::internal("RecheckFailed", format!("{} failing claims", r.report.failures.len())))
        };
    }
    let need = |v: &Option<Rat>| v.clone().expect("clap enforces presence");
    let p = validate(need(&a.m), need(&a.c2), need(&a.b3), need(&a.b4), need(&a.c5)).map_err(from_d6)?;
    let c = certify_infeasible_with_width(&p, width).map_err(from_d6)?;
    match fmt {
        Format::Json => writeln!(out, "{}", c.to_json()),
        Format::Text => write!(out, "{}", certificate_text(&c)),
    }
    .map_err(io)
}

fn sweep_text(r: &SweepReport) -> String {
    let mut s = format!(
        "points {}: invalid {}, certified {}, alpha interval empty {}, failed {}\n",
        r.total,
        r.invalid,
        r.certified,
        r.alpha_interval_empty,
        r.failed.len()
    );
    s += &format!(
        "direct route: r < 1 at {}, 1 < r < 2 at {}\n",
        r.r_below_one, r.r_between_one_and_two
    );
    s += &format!("x1 bound failures: {}\n", r.x1_bound_failures);
    if r.rechecked > 0 {
        s += &format!("rechecked {}, recheck failures {}\n", r.rechecked, r.recheck_failures);
    }
    for f in &r.failed {
        let step = f.step.map(|s| s.to_string()).unwrap_or_else(|| "internal".into());
        s += &format!("FAILED ({}) at {}: {}\n", f.point.join(", "), step, f.detail);
    }
    s
}

fn run_sweep(out: &mut dyn Write, fmt: Format, width: &Rat, a: &SweepArgs) -> Result<(), Failure> {
    if a.m_min > a.m_max || !num_traits::Signed::is_positive(&a.step) {
        return Err(Failure::input("InvalidGrid", "need m-min <= m-max and a positive step"));
    }
    let grid = Grid::natural(a.m_min, a.m_max, a.step.clone());
    let config = SweepConfig {
        jobs: a.jobs,
        width: width.clone(),
        recheck: a.recheck,
    };
    let (tx, rx) = mpsc::channel::<Progress>();
    let report = std::thread::scope(|scope| -> Result<SweepReport, Failure> {
        let handle = scope.spawn(move || {
            sweep_with_progress(&grid, &config, |p| {
                let _ = tx.send(p);
            })
        });
        for p in rx {
            if fmt == Format::Json {
                let ev = SweepEvent::Progress {
                    done: p.done,
                    total: p.total,
                };
                writeln!(out, "{}", serde_json::to_string(&ev).expect("event serializes")).map_err(io)?;
            }
        }
        handle.join().map_err(|_| Failure::internal("Panic", "sweep worker panicked"))
    })?;
    let clean = report.clean();
    match fmt {
        Format::Json => {
            let ev = SweepEvent::Summary {
                schema: "cometric/sweep".into(),
                version: VERSION,
                clean,
                report: report.clone(),
            };
            writeln!(out, "{}", serde_json::to_string(&ev).expect("event serializes")).map_err(io)?;
        }
        Format::Text => write!(out, "{}", sweep_text(&report)).map_err(io)?,
    }
    if clean {
        Ok(())
    } else {
        let step = report.failed.first().and_then(|f| f.step).unwrap_or(FailStep::X1Bounds);
        Err(Failure::internal("CertificationFailed", format!("sweep not clean (first failing step {step})")))
    }
}

fn run_oracle(out: &mut dyn Write, fmt: Format, width: &Rat, path: &std::path::Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))?;
    let rels = parse_relation_file(&text).map_err(|e| Failure::input("ParseError", e))?;
    let (oracle, t) = from_relation_matrices(&rels).map_err(from_scheme)?;
    let k = oracle
        .krein_array(&t)
        .map_err(|e| Failure::input("ValidationError", e))?;
    let built = build_table(&k).map_err(from_scheme)?;
    let difference = t.first_difference(&built);
    let r = OracleReport {
        schema: "cometric/oracle".into(),
        version: VERSION,
        points: oracle.n,
        krein_array: k,
        matches_build_table: difference.is_none(),
        difference,
        table: TableReport::new(&oracle.krein_array(&t).expect("checked above"), &t, width),
    };
    match fmt {
        Format::Json => writeln!(out, "{}", json(&r)).map_err(io)?,
        Format::Text => {
            writeln!(out, "{} points, Krein array {}", r.points, r.krein_array).map_err(io)?;
            match &r.difference {
                None => writeln!(out, "matches build_table exactly").map_err(io)?,
                Some(d) => writeln!(out, "differs from build_table: {d}").map_err(io)?,
            }
            write!(out, "{}", r.table.text()).map_err(io)?;
        }
    }
    if r.matches_build_table {
        Ok(())
    } else {
        Err(Failure::internal("IdentityCheckFailed", "relation-matrix table differs from build_table"))
    }
}

/// Runs one command; returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let width = cli.width.clone().unwrap_or_else(crate::d6::roots::default_width);
    let result = if width <= Rat::from_integer(0.into()) {
        Err(Failure::input("InvalidWidth", "width must be positive"))
    } else {
        match &cli.command {
            Command::Table { krein } => run_table(out, cli.format, &width, krein),
            Command::Check { krein } => run_check(out, cli.format, krein),
            Command::Classify { krein } => run_classify(out, cli.format, krein),
            Command::D6Verify(a) => run_verify(out, cli.format, &width, a),
            Command::D6Sweep(a) => run_sweep(out, cli.format, &width, a),
            Command::Oracle { file } => run_oracle(out, cli.format, &width, file),
        }
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.kind, f.message);
            f.code
        }
    }
}

/// Parses arguments and runs; clap's own usage errors exit with status 1.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = write!(err, "{}", e.render());
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            }
            code
        }
    }
}
