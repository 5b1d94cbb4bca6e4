use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qcss::census::{PairExperiment, PairParams, WeightwordExperiment, SCHEMA_VERSION};
use qcss::css::CssCode;
use qcss::csst::{check_rate_distance_bounds, is_csst, BoundReport, CsstReport};
use qcss::fqlinear::LinearCode;
use qcss::galois::prime_power;
use qcss::hermitian::{hermitian_csst, HermitianCurve};
use qcss::statevec::{verify_cs_steane_equivalence, EquivalenceCheck};
use qcss::{Error, Field, Limits};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_IO: u8 = 4;

/// Construct, certify, and count CSS and CSS-T quantum codes over GF(q).
#[derive(Parser, Debug)]
#[command(name = "qcss", version)]
struct Cli {
    /// Budget for codeword, subspace, and column-subset enumerations.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_ENUMERATION)]
    enum_cap: u64,
    /// Budget for state-vector dimension q^n.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_DENSE)]
    dense_cap: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classical code utilities.
    #[command(subcommand)]
    Code(CodeCommand),
    /// CSS code construction.
    #[command(subcommand)]
    Css(CssCommand),
    /// CSS-T certification.
    #[command(subcommand)]
    Csst(CsstCommand),
    /// Monte Carlo density of good nested pairs, as one CSV row.
    Density(DensityArgs),
    /// Monte Carlo density of codes with a word of weight omega, as one CSV row.
    Weightword(WeightwordArgs),
    /// Hermitian-curve CSS-T pair (C(mP), <1>) over GF(q^2).
    Hermitian(HermitianArgs),
    /// State-vector checks.
    #[command(subcommand)]
    Statevec(StatevecCommand),
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    /// Parameters and weight distribution of a code.
    Info {
        #[arg(long)]
        file: PathBuf,
    },
    /// The dual code, in the code file format.
    Dual {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct PairFiles {
    #[arg(long)]
    c1: PathBuf,
    #[arg(long)]
    c2: PathBuf,
}

#[derive(Subcommand, Debug)]
enum CssCommand {
    /// Parameters of Q(C1, C2).
    Build(PairFiles),
}

#[derive(Subcommand, Debug)]
enum CsstCommand {
    /// Exit 0 if the pair is CSS-T, 1 otherwise.
    Check {
        #[command(flatten)]
        files: PairFiles,
        /// Also evaluate the rate/distance bounds for a CSS-T pair.
        #[arg(long)]
        bounds: bool,
    },
}

#[derive(Subcommand, Debug)]
enum StatevecCommand {
    /// Check that the transversal DFT maps the CS basis of Q(C1, C2) onto the coset basis of Q(C2⊥, C1⊥).
    Verify(PairFiles),
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long)]
    q: u64,
    /// Monic modulus coefficients c0,...,ce (lowest degree first).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    fn field(&self) -> Result<Arc<Field>, Error> {
        let (p, e) = prime_power(self.q)
            .ok_or_else(|| Error::InvalidParameter(format!("{} is not a prime power", self.q)))?;
        Ok(Arc::new(Field::new(p, e, self.modulus.clone())?))
    }
}

#[derive(Args, Debug)]
struct DensityArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k1: usize,
    #[arg(long)]
    k2: usize,
    #[arg(long)]
    alpha: usize,
    #[arg(long)]
    beta: usize,
    /// Number of sampled pairs.
    #[arg(long = "N", default_value_t = 2000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Omit the CSV header line.
    #[arg(long)]
    no_header: bool,
}

#[derive(Args, Debug)]
struct WeightwordArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    omega: usize,
    #[arg(long = "N", default_value_t = 2000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    no_header: bool,
}

#[derive(Args, Debug)]
struct HermitianArgs {
    /// Curve parameter; codes live over GF(q^2).
    #[arg(long)]
    q: u32,
    #[arg(long)]
    m: u64,
    /// Directory for c1.code, c2.code and report.json.
    #[arg(long)]
    emit_codes: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::CapExceeded { .. }) => EXIT_CAP,
            Failure::Lib(Error::Parse(_)) | Failure::Io(_) => EXIT_IO,
            Failure::Lib(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(msg) => f.write_str(msg),
        }
    }
}

/// Envelope for JSON output: the command line parameters next to the result.
#[derive(Serialize)]
struct Artifact<P: Serialize, R: Serialize> {
    schema_version: u32,
    command: &'static str,
    params: P,
    result: R,
}

#[derive(Serialize)]
struct Caps {
    enum_cap: u64,
    dense_cap: u64,
}

#[derive(Serialize)]
struct FileParams<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<&'a Path>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c1: Option<&'a Path>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c2: Option<&'a Path>,
    #[serde(flatten)]
    caps: Caps,
}

#[derive(Serialize)]
struct CodeInfo {
    q: u32,
    n: usize,
    k: usize,
    min_distance: usize,
    weight_distribution: Vec<u64>,
}

#[derive(Serialize)]
struct CsstResult {
    csst: CsstReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundReport>,
}

#[derive(Serialize)]
struct HermitianParams {
    q: u32,
    m: u64,
    #[serde(flatten)]
    caps: Caps,
}

fn read_code(path: &Path) -> Result<LinearCode, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    LinearCode::from_text(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

struct Output {
    text: String,
    exit: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, exit: 0 }
    }

    fn verdict(text: String, holds: bool) -> Output {
        Output {
            text,
            exit: if holds { 0 } else { EXIT_FALSE },
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let limits = Limits {
        enumeration: cli.enum_cap,
        dense: cli.dense_cap,
    };
    let caps = || Caps {
        enum_cap: cli.enum_cap,
        dense_cap: cli.dense_cap,
    };
    match &cli.command {
        Command::Code(CodeCommand::Info { file }) => {
            let code = read_code(file)?;
            let info = CodeInfo {
                q: code.field().order(),
                n: code.len(),
                k: code.dimension(),
                min_distance: code.min_distance_with(&limits)?,
                weight_distribution: code.weight_distribution(&limits)?.to_vec(),
            };
            let params = FileParams {
                file: Some(file),
                c1: None,
                c2: None,
                caps: caps(),
            };
            Ok(Output::ok(json(&artifact("code info", params, info))))
        }
        Command::Code(CodeCommand::Dual { file }) => Ok(Output::ok(read_code(file)?.dual().to_text())),
        Command::Css(CssCommand::Build(pair)) => {
            let code = CssCode::new(read_code(&pair.c1)?, read_code(&pair.c2)?, &limits)?;
            Ok(Output::ok(json(&artifact("css build", pair_params(pair, caps()), code.report()))))
        }
        Command::Csst(CsstCommand::Check { files, bounds }) => {
            let (c1, c2) = (read_code(&files.c1)?, read_code(&files.c2)?);
            let csst = is_csst(&c1, &c2, &limits)?;
            let bounds = if *bounds && csst.verdict {
                Some(check_rate_distance_bounds(&CssCode::new(c1, c2, &limits)?, &limits)?)
            } else {
                None
            };
            let holds = csst.verdict;
            let result = CsstResult { csst, bounds };
            Ok(Output::verdict(json(&artifact("csst check", pair_params(files, caps()), result)), holds))
        }
        Command::Density(a) => {
            let field = a.field.field()?;
            let params = PairParams {
                n: a.n,
                k1: a.k1,
                k2: a.k2,
                alpha: a.alpha,
                beta: a.beta,
            };
            let row = PairExperiment::run(&field, params, a.trials, a.seed, &limits)?.csv_row();
            Ok(Output::ok(csv(PairExperiment::CSV_HEADER, &row, a.no_header)))
        }
        Command::Weightword(a) => {
            let field = a.field.field()?;
            let row = WeightwordExperiment::run(&field, a.n, a.k, a.omega, a.trials, a.seed, &limits)?.csv_row();
            Ok(Output::ok(csv(WeightwordExperiment::CSV_HEADER, &row, a.no_header)))
        }
        Command::Hermitian(a) => {
            let curve = HermitianCurve::new(a.q)?;
            let pair = hermitian_csst(&curve, a.m, &limits)?;
            let params = HermitianParams { q: a.q, m: a.m, caps: caps() };
            let text = json(&artifact("hermitian", params, pair.report(&curve)));
            if let Some(dir) = &a.emit_codes {
                fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("cannot create {}: {e}", dir.display())))?;
                write_file(&dir.join("c1.code"), &pair.code.c1().to_text())?;
                write_file(&dir.join("c2.code"), &pair.code.c2().to_text())?;
                write_file(&dir.join("report.json"), &text)?;
            }
            Ok(Output::ok(text))
        }
        Command::Statevec(StatevecCommand::Verify(pair)) => {
            let check: EquivalenceCheck = verify_cs_steane_equivalence(&read_code(&pair.c1)?, &read_code(&pair.c2)?, &limits)?;
            Ok(Output::verdict(json(&artifact("statevec verify", pair_params(pair, caps()), check)), check.holds))
        }
    }
}

fn artifact<P: Serialize, R: Serialize>(command: &'static str, params: P, result: R) -> Artifact<P, R> {
    Artifact {
        schema_version: SCHEMA_VERSION,
        command,
        params,
        result,
    }
}

fn pair_params(pair: &PairFiles, caps: Caps) -> FileParams<'_> {
    FileParams {
        file: None,
        c1: Some(&pair.c1),
        c2: Some(&pair.c2),
        caps,
    }
}

fn csv(header: &str, row: &str, no_header: bool) -> String {
    if no_header {
        format!("{row}\n")
    } else {
        format!("{header}\n{row}\n")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => write_file(path, &out.text)?,
            None => print!("{}", out.text),
        }
        Ok(out.exit)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("qcss: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
