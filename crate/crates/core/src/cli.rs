//! Command-line front end.
//!
//! Every command builds a [`Report`] of inputs, outputs and checks. Exit
//! codes: 2 for parse and validation errors, 1 when any check fails, 0
//! otherwise. Inconclusive checks do not fail a report.

use std::collections::{BTreeMap, HashSet};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alternating::{congruence, pfaffian, psi, random_alternating, AlternatingMatrix};
use crate::completion::{
    certify_row, inner, krusemeyer_complete, skew4, skew4_matrix, skew_from_completion,
    square_witt_rep, tangent_check, verify_certificate, verify_completion, CertifiedRow,
    CompletionResult, Provenance, SkewCompletion,
};
use crate::error::{Error, Result};
use crate::finite::{
    enumerate_um, find_witness, skew_completable_search, skew_completions, OrbitTable,
};
use crate::io::{read_json, word_letters, CertificateFile, MatrixFile, RowFile};
use crate::matrix::Matrix;
use crate::ring::{parse_ring, Elem, Ring};
use crate::witt::{check_equiv, search_equiv, witt_rep, EquivCertificate};
use crate::word::{apply_word, ElementaryWord, Side};

const SPHERE: &str = "Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub witness: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    fn new(command: String) -> Self {
        Report {
            command,
            seed: None,
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            checks: Vec::new(),
            status: Status::Pass,
        }
    }

    fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), to_value(value));
    }

    fn output(&mut self, key: &str, value: impl Serialize) {
        self.outputs.insert(key.into(), to_value(value));
    }

    fn check(&mut self, name: &str, status: Status, witness: Value) {
        self.status = match (self.status, status) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            witness,
        });
    }

    fn check_bool(&mut self, name: &str, ok: bool, witness: Value) {
        self.check(name, Status::from_bool(ok), witness);
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(seed) = self.seed {
            out += &format!("seed: {seed}\n");
        }
        for (title, map) in [("inputs", &self.inputs), ("outputs", &self.outputs)] {
            if map.is_empty() {
                continue;
            }
            out += &format!("{title}:\n");
            for (k, v) in map {
                out += &format!("  {k}:{}\n", text_value(v, 4));
            }
        }
        if !self.checks.is_empty() {
            out += "checks:\n";
            for c in &self.checks {
                out += &format!("  [{}] {}", c.status.label(), c.name);
                if !c.witness.is_null() {
                    out += &format!("  {}", c.witness);
                }
                out.push('\n');
            }
        }
        out += &format!("status: {}\n", self.status.label());
        out
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("serializable")
}

/// Scalars inline; matrices one row per line.
fn text_value(v: &Value, indent: usize) -> String {
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let flat = |a: &[Value]| format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", "));
    match v {
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| r.is_array()) => rows
            .iter()
            .map(|r| match r {
                Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
                    format!("\n{}{}", " ".repeat(indent), flat(a))
                }
                other => format!("\n{}{}", " ".repeat(indent), other),
            })
            .collect(),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            format!(" {}", flat(a))
        }
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("\n{}{k}:{}", " ".repeat(indent), text_value(x, indent + 2)))
            .collect(),
        other => format!(" {}", scalar(other)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "unimod",
    version,
    about = "Certified Pfaffians, skew completions and completions of unimodular rows"
)]
struct Cli {
    /// Ring spec, e.g. `Zmod:6` or `Q[x0,x1,x2]/(x0^2+x1^2+x2^2-1)`
    #[arg(long, global = true)]
    ring: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Also write the report to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct RowArgs {
    /// Row file `{"ring", "v", "w"}`
    #[arg(long, conflicts_with_all = ["v", "w"])]
    row: Option<PathBuf>,
    /// Comma separated row entries (needs --ring and --w)
    #[arg(long, value_delimiter = ',', requires = "w")]
    v: Vec<String>,
    /// Comma separated witness entries
    #[arg(long, value_delimiter = ',', requires = "v")]
    w: Vec<String>,
}

impl RowArgs {
    fn given(&self) -> bool {
        self.row.is_some() || !self.v.is_empty()
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pfaffian and determinant of an alternating matrix file
    Pfaffian {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Explicit 4x4 skew completion of a length 3 row
    Skew4 {
        #[command(flatten)]
        row: RowArgs,
    },
    /// Skew completion of the first row of an odd determinant-one matrix
    SkewFromCompletion {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Completion of (v1^2, v2, ...) with its elementary certificate
    Complete {
        #[command(flatten)]
        row: RowArgs,
        /// Skew completion to start from instead of the built-in one
        #[arg(long)]
        skew: Option<PathBuf>,
    },
    /// Pfaffian-one representative with first row (0, v1^2, v2, ...)
    SquareRep {
        #[command(flatten)]
        row: RowArgs,
        #[arg(long)]
        skew: Option<PathBuf>,
        /// Iterate the squaring this many times
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Verify an equivalence certificate between two alternating matrices
    WittCheck {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Bounded search for an equivalence certificate over a finite ring
    WittSearch {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        max_pad: usize,
    },
    /// Elementary orbits on unimodular rows of length n over a finite ring
    Orbit {
        #[arg(long)]
        n: usize,
        /// Include every member with its spanning-tree word
        #[arg(long)]
        members: bool,
    },
    /// Number of unimodular rows of length n over a finite ring
    UmCount {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Evaluate the candidate tangent field of a 3x3 matrix at rational points
    TangentCheck {
        #[arg(long)]
        matrix: PathBuf,
        /// Point `a,b,c` on the zero set; repeatable
        #[arg(long = "point")]
        points: Vec<String>,
    },
    /// Scripted scenarios
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Debug, Subcommand)]
enum Demo {
    /// Sphere ring pipeline from (x0, x1, x2) to a certified completion
    Kaplansky,
    /// Rows e1 K(V) and the first column of K(V) share an orbit, exhaustively
    Lemma35 {
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Seeded random checks of the Pfaffian laws
    Identities {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per ring and law
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let report = match dispatch(&cli, Report::new(echo)) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            return Outcome {
                code: 2,
                stdout: text,
                stderr: format!("error: {}: {e}\n", path.display()),
            };
        }
    }
    Outcome {
        code: report.exit_code(),
        stdout: text,
        stderr: String::new(),
    }
}

fn dispatch(cli: &Cli, mut rep: Report) -> Result<Report> {
    let ring = cli.ring.as_deref().map(parse_ring).transpose()?;
    let ring = ring.as_ref();
    match &cli.command {
        Command::Pfaffian { matrix } => cmd_pfaffian(&mut rep, ring, matrix)?,
        Command::Skew4 { row } => cmd_skew4(&mut rep, ring, row)?,
        Command::SkewFromCompletion { matrix } => cmd_skew_from_completion(&mut rep, ring, matrix)?,
        Command::Complete { row, skew } => cmd_complete(&mut rep, ring, row, skew.as_deref())?,
        Command::SquareRep { row, skew, times } => {
            cmd_square_rep(&mut rep, ring, row, skew.as_deref(), *times)?
        }
        Command::WittCheck { x, y, cert } => cmd_witt_check(&mut rep, ring, x, y, cert)?,
        Command::WittSearch {
            x,
            y,
            depth,
            max_pad,
        } => cmd_witt_search(&mut rep, ring, x, y, *depth, *max_pad)?,
        Command::Orbit { n, members } => cmd_orbit(&mut rep, need_ring(ring)?, *n, *members)?,
        Command::UmCount { n, list } => cmd_um_count(&mut rep, need_ring(ring)?, *n, *list)?,
        Command::TangentCheck { matrix, points } => cmd_tangent(&mut rep, ring, matrix, points)?,
        Command::Demo(Demo::Kaplansky) => demo_kaplansky(&mut rep)?,
        Command::Demo(Demo::Lemma35 { modulus }) => demo_lemma35(&mut rep, *modulus)?,
        Command::Demo(Demo::Identities { seed, count }) => {
            demo_identities(&mut rep, *seed, *count)?
        }
    }
    Ok(rep)
}

fn need_ring(ring: Option<&Ring>) -> Result<&Ring> {
    ring.ok_or_else(|| Error::Invalid("this command needs --ring".into()))
}

fn strings(xs: &[Elem]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn word_value(w: &ElementaryWord) -> Value {
    to_value(word_letters(w))
}

fn read_matrix(path: &Path, ring: Option<&Ring>) -> Result<Matrix> {
    read_json::<MatrixFile>(path)?.to_matrix(ring)
}

fn read_alternating(path: &Path, ring: Option<&Ring>) -> Result<AlternatingMatrix> {
    AlternatingMatrix::new(read_matrix(path, ring)?)
}

fn read_row(args: &RowArgs, ring: Option<&Ring>) -> Result<CertifiedRow> {
    match &args.row {
        Some(path) => read_json::<RowFile>(path)?.to_row(ring),
        None => CertifiedRow::parse(need_ring(ring)?, &args.v, &args.w),
    }
}

fn record_row(rep: &mut Report, row: &CertifiedRow) {
    rep.input("ring", row.ring().spec());
    rep.input("v", strings(row.v()));
    rep.input("w", strings(row.w()));
}

fn cmd_pfaffian(rep: &mut Report, ring: Option<&Ring>, path: &Path) -> Result<()> {
    let a = read_alternating(path, ring)?;
    rep.input("ring", a.ring().spec());
    rep.input("matrix", a.matrix().to_strings());
    let pf = a.pfaffian()?;
    let det = a.matrix().det()?;
    let square = &pf * &pf;
    rep.output("pfaffian", pf.to_string());
    rep.output("det", det.to_string());
    rep.check_bool(
        "det = pf^2",
        det == square,
        json!({"det": det.to_string(), "pf^2": square.to_string()}),
    );
    Ok(())
}

fn check_first_row(rep: &mut Report, name: &str, got: &[Elem], want: &[Elem]) {
    rep.check_bool(
        name,
        got == want,
        json!({"got": strings(got), "want": strings(want)}),
    );
}

fn zero_then(ring: &Ring, v: &[Elem]) -> Vec<Elem> {
    std::iter::once(ring.zero())
        .chain(v.iter().cloned())
        .collect()
}

fn cmd_skew4(rep: &mut Report, ring: Option<&Ring>, args: &RowArgs) -> Result<()> {
    let row = read_row(args, ring)?;
    record_row(rep, &row);
    let s = skew4(&row)?;
    let pf = s.pfaffian();
    rep.output("matrix", s.matrix().matrix().to_strings());
    rep.output("pfaffian", pf.to_string());
    check_first_row(
        rep,
        "first row is (0, v)",
        &s.matrix().first_row(),
        &zero_then(row.ring(), row.v()),
    );
    rep.check_bool("pfaffian is 1", pf.is_one(), json!(pf.to_string()));
    Ok(())
}

fn cmd_skew_from_completion(rep: &mut Report, ring: Option<&Ring>, path: &Path) -> Result<()> {
    let sigma = read_matrix(path, ring)?;
    rep.input("ring", sigma.ring().spec());
    rep.input("matrix", sigma.to_strings());
    let s = skew_from_completion(&sigma)?;
    let pf = s.pfaffian();
    rep.output("matrix", s.matrix().matrix().to_strings());
    rep.output("pfaffian", pf.to_string());
    rep.output("w", strings(s.row().w()));
    check_first_row(
        rep,
        "first row is (0, e1 sigma)",
        &s.matrix().first_row(),
        &zero_then(sigma.ring(), &sigma.row(1)),
    );
    rep.check_bool("pfaffian is 1", pf.is_one(), json!(pf.to_string()));
    Ok(())
}

/// A skew completion from `--skew`, else `skew4` for length 3, else an
/// exhaustive search over a finite ring. `None` means the search found
/// nothing, which is recorded as a failed check.
fn skew_source(
    rep: &mut Report,
    ring: Option<&Ring>,
    args: &RowArgs,
    skew: Option<&Path>,
) -> Result<Option<SkewCompletion>> {
    if let Some(path) = skew {
        let s =
            SkewCompletion::from_alternating(read_alternating(path, ring)?, Provenance::Supplied)?;
        if args.given() {
            let row = read_row(args, ring)?;
            if row.v() != s.row().v() {
                return Err(Error::Invalid(format!(
                    "--skew has first row (0, {}) but the row is ({})",
                    strings(s.row().v()).join(", "),
                    strings(row.v()).join(", ")
                )));
            }
        }
        record_row(rep, s.row());
        return Ok(Some(s));
    }
    let row = read_row(args, ring)?;
    record_row(rep, &row);
    if row.len() == 3 {
        return skew4(&row).map(Some);
    }
    if row.ring().cardinality().is_none() {
        return Err(Error::Invalid(
            "rows of length other than 3 over an infinite ring need --skew".into(),
        ));
    }
    let found = skew_completable_search(row.ring(), &row)?;
    rep.check_bool("skew completion found", found.is_some(), Value::Null);
    found
        .map(|a| SkewCompletion::from_alternating(a, Provenance::Search))
        .transpose()
}

fn target_of(v: &[Elem], power: u32) -> Vec<Elem> {
    let mut t = v.to_vec();
    t[0] = v[0].pow(power);
    t
}

fn record_completion(
    rep: &mut Report,
    s: &SkewCompletion,
    res: &CompletionResult,
    want: &[Elem],
) -> Result<()> {
    let report = verify_completion(want, &res.k)?;
    check_first_row(
        rep,
        "first row of K is (v1^2, v2, ...)",
        &res.k.row(1),
        want,
    );
    rep.check_bool("det K = 1", report.det_is_one, json!(report.det));
    match &res.certificate {
        Some(eps) => {
            let ok = verify_certificate(s.matrix().matrix(), &res.k, eps)?;
            rep.check_bool("(1 + K) E(eps) = V", ok, json!({"letters": eps.len()}));
        }
        None => rep.check(
            "(1 + K) E(eps) = V",
            Status::Inconclusive,
            json!("no certificate"),
        ),
    }
    Ok(())
}

fn cmd_complete(
    rep: &mut Report,
    ring: Option<&Ring>,
    args: &RowArgs,
    skew: Option<&Path>,
) -> Result<()> {
    let Some(s) = skew_source(rep, ring, args, skew)? else {
        return Ok(());
    };
    let res = krusemeyer_complete(&s)?;
    rep.output("skew_completion", s.matrix().matrix().to_strings());
    rep.output("provenance", s.provenance());
    rep.output("k", res.k.to_strings());
    if let Some(eps) = &res.certificate {
        rep.output("certificate", word_value(eps));
    }
    record_completion(rep, &s, &res, &target_of(s.row().v(), 2))
}

fn cmd_square_rep(
    rep: &mut Report,
    ring: Option<&Ring>,
    args: &RowArgs,
    skew: Option<&Path>,
    times: u32,
) -> Result<()> {
    if times == 0 {
        return Err(Error::Invalid("--times must be at least 1".into()));
    }
    let Some(mut s) = skew_source(rep, ring, args, skew)? else {
        return Ok(());
    };
    let v = s.row().v().to_vec();
    let ring = s.matrix().ring().clone();
    let mut first_rows = Vec::new();
    for t in 1..=times {
        let res = krusemeyer_complete(&s)?;
        let r = (res.k.rows() + 1) / 2;
        let w = square_witt_rep(&res, r)?;
        let pf = pfaffian(&w)?;
        let want = zero_then(&ring, &target_of(&v, 1 << t));
        check_first_row(
            rep,
            &format!("round {t}: first row is (0, v1^{}, v2, ...)", 1u64 << t),
            &w.first_row(),
            &want,
        );
        rep.check_bool(
            &format!("round {t}: pfaffian is 1"),
            pf.is_one(),
            json!(pf.to_string()),
        );
        first_rows.push(strings(&w.first_row()));
        let last = t == times;
        s = SkewCompletion::from_alternating(w, Provenance::FromCompletion)?;
        if last {
            rep.output("matrix", s.matrix().matrix().to_strings());
        }
    }
    rep.output("first_rows", first_rows);
    Ok(())
}

fn read_certificate(path: &Path, ring: Option<&Ring>) -> Result<EquivCertificate> {
    read_json::<CertificateFile>(path)?.to_certificate(ring)
}

fn cmd_witt_check(
    rep: &mut Report,
    ring: Option<&Ring>,
    x: &Path,
    y: &Path,
    cert: &Path,
) -> Result<()> {
    let x = witt_rep(read_alternating(x, ring)?)?;
    let y = witt_rep(read_alternating(y, ring)?)?;
    let c = read_certificate(cert, ring)?;
    rep.input("ring", x.ring().spec());
    rep.input("x", x.matrix().matrix().to_strings());
    rep.input("y", y.matrix().matrix().to_strings());
    rep.input("l", c.l);
    rep.input("eps", word_value(&c.eps));
    let ok = check_equiv(&x, &y, &c)?;
    rep.check_bool("x + psi = E(eps)^t (y + psi) E(eps)", ok, Value::Null);
    Ok(())
}

fn cmd_witt_search(
    rep: &mut Report,
    ring: Option<&Ring>,
    x: &Path,
    y: &Path,
    depth: usize,
    max_pad: usize,
) -> Result<()> {
    let x = witt_rep(read_alternating(x, ring)?)?;
    let y = witt_rep(read_alternating(y, ring)?)?;
    rep.input("ring", x.ring().spec());
    rep.input("x", x.matrix().matrix().to_strings());
    rep.input("y", y.matrix().matrix().to_strings());
    rep.input("depth", depth);
    rep.input("max_pad", max_pad);
    match search_equiv(&x, &y, depth, max_pad)? {
        Some(c) => {
            rep.output("l", c.l);
            rep.output("eps", word_value(&c.eps));
            let ok = check_equiv(&x, &y, &c)?;
            rep.check_bool("certificate verifies", ok, Value::Null);
        }
        None => rep.check(
            "certificate found",
            Status::Inconclusive,
            json!(format!("none within depth {depth} and padding {max_pad}")),
        ),
    }
    Ok(())
}

fn cmd_orbit(rep: &mut Report, ring: &Ring, n: usize, members: bool) -> Result<()> {
    rep.input("ring", ring.spec());
    rep.input("n", n);
    let table = OrbitTable::build(ring, n)?;
    let export = table.export(members);
    rep.output("orbit_count", export.orbit_count);
    rep.output("sizes", &export.sizes);
    rep.output("representatives", &export.representatives);
    if let Some(m) = &export.members {
        rep.output("members", m);
    }
    let um = enumerate_um(ring, n)?;
    let mut seen = HashSet::new();
    let mut words_ok = true;
    for o in &table.orbits {
        let rep_row = Matrix::row_vector(ring, &o.representative)?;
        for (row, w) in &o.members {
            seen.insert(row.clone());
            words_ok &= apply_word(&rep_row, w, Side::Right, false)?.row(1) == *row;
        }
    }
    let total: usize = export.sizes.iter().sum();
    rep.check_bool(
        "orbits partition Um",
        total == um.len() && seen.len() == total && um.iter().all(|r| seen.contains(r)),
        json!({"um": um.len(), "covered": total}),
    );
    rep.check_bool("spanning words reproduce members", words_ok, Value::Null);
    Ok(())
}

fn cmd_um_count(rep: &mut Report, ring: &Ring, n: usize, list: bool) -> Result<()> {
    rep.input("ring", ring.spec());
    rep.input("n", n);
    let um = enumerate_um(ring, n)?;
    rep.output("count", um.len());
    if list {
        rep.output("rows", um.iter().map(|r| strings(r)).collect::<Vec<_>>());
    }
    Ok(())
}

fn parse_point(text: &str) -> Result<Vec<BigRational>> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<BigRational>()
                .map_err(|_| Error::Invalid(format!("bad rational coordinate {c:?}")))
        })
        .collect()
}

fn cmd_tangent(
    rep: &mut Report,
    ring: Option<&Ring>,
    path: &Path,
    points: &[String],
) -> Result<()> {
    let sigma = read_matrix(path, ring)?;
    let defaults = ["3/5,4/5,0", "0,3/5,4/5", "4/5,0,-3/5", "1,0,0"];
    let texts: Vec<&str> = if points.is_empty() {
        defaults.to_vec()
    } else {
        points.iter().map(String::as_str).collect()
    };
    let pts = texts
        .iter()
        .map(|t| parse_point(t))
        .collect::<Result<Vec<_>>>()?;
    rep.input("ring", sigma.ring().spec());
    rep.input("matrix", sigma.to_strings());
    rep.input("points", &texts);
    let r = tangent_check(&sigma, &pts)?;
    rep.output("samples", &r.samples);
    rep.check_bool(
        "matrix completes (x0, x1, x2)",
        r.first_row_is_position && r.det_is_one,
        json!({"first_row": r.first_row_is_position, "det_one": r.det_is_one}),
    );
    rep.check_bool(
        "field is tangent at every sample",
        r.samples.iter().all(|s| s.inner_product == "0"),
        Value::Null,
    );
    rep.check_bool(
        "field is nonzero at every sample",
        r.vanishing_points().is_empty(),
        Value::Null,
    );
    Ok(())
}

fn demo_kaplansky(rep: &mut Report) -> Result<()> {
    let ring = parse_ring(SPHERE)?;
    let xs = ["x0", "x1", "x2"];
    let row = CertifiedRow::parse(&ring, &xs, &xs)?;
    record_row(rep, &row);
    let s = skew4(&row)?;
    let pf = s.pfaffian();
    rep.output("skew4", s.matrix().matrix().to_strings());
    rep.check_bool("pf(skew4) = 1", pf.is_one(), json!(pf.to_string()));

    let res = krusemeyer_complete(&s)?;
    rep.output("k", res.k.to_strings());
    rep.output(
        "certificate_letters",
        res.certificate.as_ref().map_or(0, ElementaryWord::len),
    );
    record_completion(rep, &s, &res, &target_of(row.v(), 2))?;

    let back = skew_from_completion(&res.k)?;
    check_first_row(
        rep,
        "skew completion of e1 K has first row (0, x0^2, x1, x2)",
        &back.matrix().first_row(),
        &zero_then(&ring, &target_of(row.v(), 2)),
    );
    let w = square_witt_rep(&res, 2)?;
    let wpf = pfaffian(&w)?;
    rep.output("square_rep", w.matrix().to_strings());
    rep.check_bool("pf(square rep) = 1", wpf.is_one(), json!(wpf.to_string()));
    Ok(())
}

fn demo_lemma35(rep: &mut Report, m: u64) -> Result<()> {
    let ring = Ring::modular(m)?;
    rep.input("ring", ring.spec());
    let table = OrbitTable::build(&ring, 3)?;
    let rows = enumerate_um(&ring, 3)?;
    let (mut completions, mut connected, mut certified, mut uncompletable) =
        (0usize, 0usize, 0usize, 0usize);
    let mut first_failure = Value::Null;
    for v in &rows {
        let w = find_witness(&ring, v)?.ok_or(Error::NoWitness)?;
        let row = certify_row(v.clone(), w)?;
        let found = skew_completions(&ring, &row)?;
        if found.is_empty() {
            uncompletable += 1;
        }
        for a in found {
            completions += 1;
            let s = SkewCompletion::from_alternating(a, Provenance::Search)?;
            let res = krusemeyer_complete(&s)?;
            if let Some(eps) = &res.certificate {
                certified += usize::from(verify_certificate(s.matrix().matrix(), &res.k, eps)?);
            }
            let u = res.k.row(1);
            let t = res.k.transpose().row(1);
            let ok = table.connect(&u, &t).is_some_and(|word| {
                Matrix::row_vector(&ring, &u)
                    .and_then(|m| apply_word(&m, &word, Side::Right, false))
                    .is_ok_and(|m| m.row(1) == t)
            });
            if ok {
                connected += 1;
            } else if first_failure.is_null() {
                first_failure = json!({"v": strings(v), "k": res.k.to_strings()});
            }
        }
    }
    rep.output("rows", rows.len());
    rep.output("skew_completions", completions);
    rep.output("orbits_of_um3", table.orbits.len());
    rep.check_bool(
        "every row is skew completable",
        uncompletable == 0,
        json!({"uncompletable": uncompletable}),
    );
    rep.check_bool(
        "every K(V) carries a verifying certificate",
        certified == completions,
        json!({"certified": certified, "total": completions}),
    );
    rep.check_bool(
        "e1 K(V) and e1 K(V)^t share an orbit",
        connected == completions,
        if first_failure.is_null() {
            json!({"connected": connected, "total": completions})
        } else {
            first_failure
        },
    );
    Ok(())
}

/// Per-law tallies for one ring.
struct Tally {
    pass: usize,
    total: usize,
}

fn demo_identities(rep: &mut Report, seed: u64, count: usize) -> Result<()> {
    rep.seed = Some(seed);
    rep.input("count", count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let q = Ring::rationals();
    let psi_ok: Vec<bool> = (1..=6)
        .map(|r| pfaffian(&psi(&q, r)).is_ok_and(|p| p.is_one()))
        .collect();
    rep.check_bool(
        "pf(psi_r) = 1 for r = 1..6",
        psi_ok.iter().all(|&b| b),
        Value::Null,
    );

    let g = parse_ring("Q[v0,v1,v2,w0,w1,w2]")?;
    let vars = |names: [&str; 3]| names.iter().map(|n| g.var(n)).collect::<Result<Vec<_>>>();
    let (v, w) = (vars(["v0", "v1", "v2"])?, vars(["w0", "w1", "w2"])?);
    let pf = pfaffian(&skew4_matrix(&v, &w)?)?;
    rep.check_bool(
        "pf(skew4(v, w)) = v0 w0 + v1 w1 + v2 w2",
        pf == inner(&v, &w),
        json!(pf.to_string()),
    );

    for spec in ["Zmod:4", "Zmod:5", "Zmod:6", "Q"] {
        let ring = parse_ring(spec)?;
        let mut laws = [
            ("det = pf^2", Tally { pass: 0, total: 0 }),
            (
                "pf(a^t phi a) = pf(phi) det(a)",
                Tally { pass: 0, total: 0 },
            ),
            (
                "pf(phi + psi) = pf(phi) pf(psi)",
                Tally { pass: 0, total: 0 },
            ),
        ];
        for _ in 0..count {
            let n = 2 * rng.gen_range(1..=3);
            let phi = random_alternating(&ring, n, &mut rng);
            let p = pfaffian(&phi)?;
            laws[0].1.total += 1;
            laws[0].1.pass += usize::from(phi.matrix().det()? == &p * &p);

            let alpha = Matrix::random(&ring, n, n, &mut rng);
            let lhs = pfaffian(&congruence(&phi, &alpha)?)?;
            laws[1].1.total += 1;
            laws[1].1.pass += usize::from(lhs == &p * &alpha.det()?);

            let a = 2 * rng.gen_range(1..=2);
            let b = 2 * rng.gen_range(1..=(3 - a / 2));
            let x = random_alternating(&ring, a, &mut rng);
            let y = random_alternating(&ring, b, &mut rng);
            laws[2].1.total += 1;
            laws[2].1.pass +=
                usize::from(pfaffian(&x.perp(&y)?)? == &pfaffian(&x)? * &pfaffian(&y)?);
        }
        for (name, t) in laws {
            rep.check_bool(
                &format!("{spec}: {name}"),
                t.pass == t.total,
                json!({"pass": t.pass, "total": t.total}),
            );
        }
    }

    let sphere = parse_ring(SPHERE)?;
    let x0 = sphere.var("x0")?;
    let cube = x0.pow(3);
    let want = sphere.parse("x0 - x0*x1^2 - x0*x2^2")?;
    rep.check_bool(
        "sphere ring: x0^3 reduces to x0 - x0 x1^2 - x0 x2^2",
        cube == want,
        json!(cube.to_string()),
    );
    Ok(())
}
