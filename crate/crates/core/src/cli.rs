//! Command-line front end behind the `circ` binary.
//!
//! Every subcommand reads matrix documents (see [`crate::document`]) from the
//! given paths, or from standard input when none are given, and writes one
//! JSON result per input document (a JSON array when there are several).
//! `verify-all` and `bench` write one JSON record per line.
//!
//! Exit status: 0 success, 1 domain failure (singular matrix, non-member,
//! failed verification, benchmark disagreement), 2 usage or parse failure.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::bench::{self, BenchConfig};
use crate::circulant::Circulant;
use crate::dense::DenseMatrix;
use crate::document::{
    self, chop, complex_grid, complex_list, complex_value, rational_list, rational_value, MatrixDocument,
};
use crate::error::Error;
use crate::lattice::{self, Mode, RationalCirculant};
use crate::spectral::eigenvalues;
use crate::twisted::{self, MuCirculant, MuWeights, TwoCocycle};
use crate::verify::{self, VerifyConfig};
use crate::{forms, hopf, oracle};

/// Printed floating results are rounded to zero below this multiple of
/// `1 + ‖input‖`.
pub const CHOP: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "circ", version, about = "Circulant matrix algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input document file (repeatable); standard input when no input is given
    #[arg(long = "input", value_name = "PATH", global = true)]
    input: Vec<PathBuf>,

    /// Write results to this file instead of standard output
    #[arg(long, value_name = "PATH", global = true)]
    output: Option<PathBuf>,

    /// Arithmetic domain for brandt-check
    #[arg(long, value_enum, default_value_t = ModeArg::Integral, global = true)]
    mode: ModeArg,

    /// Override of the verification tolerance (hopf-verify, cocycle-verify, verify-all, bench)
    #[arg(long, value_name = "FLOAT", global = true)]
    tol: Option<f64>,

    /// Random seed in hexadecimal for verify-all and bench
    #[arg(long, value_name = "HEX", value_parser = parse_hex, default_value = "0x5EED", global = true)]
    seed: u64,

    /// Orders benchmarked by bench
    #[arg(
        long,
        value_name = "A,B,C",
        value_delimiter = ',',
        default_value = "256,1024",
        global = true
    )]
    sizes: Vec<usize>,

    /// Repetitions per size and method for bench
    #[arg(long, value_name = "K", default_value_t = 5, global = true)]
    reps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Integral,
    Rational,
}

#[derive(Debug, Args)]
struct Inputs {
    /// Input document files
    #[arg(value_name = "PATH")]
    paths: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues λ_j = p_C(ω^{j-1}) (μ-eigenvalues for μ- and skew circulants)
    Eig(Inputs),
    /// Characteristic forms q_1, ..., q_n
    Forms(Inputs),
    /// Characteristic polynomial, highest degree first
    Charpoly(Inputs),
    /// Inverse x̄ / q_n (exact for rational circulants)
    Inverse(Inputs),
    /// Conjugate x̄
    Conjugate(Inputs),
    /// Counit ε(C) = c_1 + ... + c_n
    HopfCounit(Inputs),
    /// Comultiplication Δ(C) as a block circulant, with its spectrum
    HopfDelta(Inputs),
    /// Antipode S(C) = C^T
    HopfAntipode(Inputs),
    /// Counit, antipode and coassociativity axioms
    HopfVerify(Inputs),
    /// Closed-form eigen decomposition of μ-circulants
    MuEig(Inputs),
    /// Two-cocycle identity for a table, or for the coboundary of μ weights
    CocycleVerify(Inputs),
    /// Dense skew circulant and its eigenvalues
    Skew(Inputs),
    /// Brandt predicate on all pairs of the input circulants
    BrandtCheck(Inputs),
    /// Circulant with a given rational spectrum
    SpectrumReconstruct(Inputs),
    /// Coefficients of a target in the lattice spanned by n basis circulants
    LatticeSolve(Inputs),
    /// Diagonal-times-circulant factorization of a dense matrix
    Factorize(Inputs),
    /// Every module's invariant suite on seeded random inputs
    VerifyAll,
    /// Multiplication benchmark: naive, spectral and dense
    Bench,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.trim().trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|e| format!("expected a hexadecimal seed: {e}"))
}

/// Why a command failed.
#[derive(Debug)]
enum Failure {
    /// Malformed input or usage (exit 2).
    Usage(String),
    /// Domain failure (exit 1); the result, if any, was still written.
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Domain(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Dimension { .. }
            | Error::NotSquare { .. }
            | Error::InvalidOrder(_)
            | Error::InvalidScalar { .. } => Self::Usage(e.to_string()),
            _ => Self::Domain(e.to_string()),
        }
    }
}

/// Entry point of the `circ` binary.
pub fn main() -> ExitCode {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    ExitCode::from(code)
}

/// Runs one command line; returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{first} (see `circ --help`)");
            return 2;
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(()) => 0,
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Domain(msg)) = &f;
            let _ = writeln!(stderr, "error: {msg}");
            f.code()
        }
    }
}

struct Output<'a> {
    path: Option<&'a PathBuf>,
    stdout: &'a mut dyn Write,
}

impl Output<'_> {
    fn write(&mut self, text: &str) -> Result<(), Failure> {
        match self.path {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("field `output`: cannot write {}: {e}", path.display()))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write standard output: {e}"))),
        }
    }

    fn documents(&mut self, mut values: Vec<Value>) -> Result<(), Failure> {
        let value = if values.len() == 1 {
            values.remove(0)
        } else {
            Value::Array(values)
        };
        let mut text = document::to_pretty(&value);
        text.push('\n');
        self.write(&text)
    }

    fn lines(&mut self, lines: &[String]) -> Result<(), Failure> {
        let mut text = lines.join("\n");
        text.push('\n');
        self.write(&text)
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    let mut out = Output {
        path: cli.output.as_ref(),
        stdout,
    };
    let inputs = match &cli.command {
        Command::VerifyAll => return verify_all(cli, &mut out),
        Command::Bench => return run_bench(cli, &mut out),
        Command::Eig(i)
        | Command::Forms(i)
        | Command::Charpoly(i)
        | Command::Inverse(i)
        | Command::Conjugate(i)
        | Command::HopfCounit(i)
        | Command::HopfDelta(i)
        | Command::HopfAntipode(i)
        | Command::HopfVerify(i)
        | Command::MuEig(i)
        | Command::CocycleVerify(i)
        | Command::Skew(i)
        | Command::BrandtCheck(i)
        | Command::SpectrumReconstruct(i)
        | Command::LatticeSolve(i)
        | Command::Factorize(i) => i,
    };
    let docs = read_documents(&cli.input, &inputs.paths, stdin)?;

    match &cli.command {
        Command::BrandtCheck(_) => return brandt(cli, &docs, &mut out),
        Command::LatticeSolve(_) => return lattice_solve(&docs, &mut out),
        _ => {}
    }

    let mut results = Vec::with_capacity(docs.len());
    let mut failure = None;
    for (idx, doc) in docs.iter().enumerate() {
        let name = if docs.len() == 1 {
            String::new()
        } else {
            format!("documents[{idx}]: ")
        };
        let outcome = match &cli.command {
            Command::Eig(_) => eig(doc),
            Command::Forms(_) => forms_cmd(doc),
            Command::Charpoly(_) => charpoly(doc),
            Command::Inverse(_) => inverse(doc),
            Command::Conjugate(_) => {
                circulant_input(doc, "conjugate").map(|c| (circulant_doc(&forms::conjugate(&c), c.inf_norm()), None))
            }
            Command::HopfCounit(_) => circulant_input(doc, "hopf-counit").map(|c| {
                (
                    json!({"kind": "scalar", "value": complex_value(hopf::counit(&c))}),
                    None,
                )
            }),
            Command::HopfDelta(_) => hopf_delta(doc),
            Command::HopfAntipode(_) => {
                circulant_input(doc, "hopf-antipode").map(|c| (circulant_doc(&hopf::antipode(&c), 0.0), None))
            }
            Command::HopfVerify(_) => hopf_verify(doc, cli.tol),
            Command::MuEig(_) => mu_eig(doc),
            Command::CocycleVerify(_) => cocycle_verify(doc, cli.tol),
            Command::Skew(_) => skew(doc),
            Command::SpectrumReconstruct(_) => reconstruct(doc),
            Command::Factorize(_) => factorize(doc),
            Command::VerifyAll | Command::Bench | Command::BrandtCheck(_) | Command::LatticeSolve(_) => {
                unreachable!("handled above")
            }
        };
        match outcome {
            Ok((value, verdict)) => {
                results.push(value);
                if let (Some(msg), None) = (verdict, &failure) {
                    failure = Some(Failure::Domain(format!("{name}{msg}")));
                }
            }
            Err(Failure::Usage(msg)) => return Err(Failure::Usage(format!("{name}{msg}"))),
            Err(Failure::Domain(msg)) => return Err(Failure::Domain(format!("{name}{msg}"))),
        }
    }
    out.documents(results)?;
    failure.map_or(Ok(()), Err)
}

fn read_documents(
    flags: &[PathBuf],
    positional: &[PathBuf],
    stdin: &mut dyn Read,
) -> Result<Vec<MatrixDocument>, Failure> {
    let paths: Vec<&PathBuf> = flags.iter().chain(positional).collect();
    if paths.is_empty() {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("field `input`: cannot read standard input: {e}")))?;
        return document::parse_documents(&text).map_err(|e| Failure::Usage(format!("<stdin>: {e}")));
    }
    let mut docs = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("field `input`: cannot read {}: {e}", path.display())))?;
        docs.extend(document::parse_documents(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?);
    }
    Ok(docs)
}

fn kind_mismatch(doc: &MatrixDocument, command: &str, expected: &str) -> Failure {
    Failure::Usage(format!(
        "field `kind`: {command} expects {expected}, found {}",
        doc.kind()
    ))
}

/// A plain circulant from a `circulant` or `rational_circulant` document.
fn circulant_input(doc: &MatrixDocument, command: &str) -> Result<Circulant, Failure> {
    match doc {
        MatrixDocument::Circulant { first_row } => Ok(Circulant::new(first_row.clone())?),
        MatrixDocument::RationalCirculant { first_row } => Ok(RationalCirculant::new(first_row.clone())?.to_complex()),
        other => Err(kind_mismatch(other, command, "circulant or rational_circulant")),
    }
}

fn mu_input(doc: &MatrixDocument, command: &str) -> Result<MuCirculant, Failure> {
    match doc {
        MatrixDocument::MuCirculant { first_row, mu } => {
            let weights = MuWeights::from_tail(mu).map_err(|e| Failure::Usage(format!("field `mu`: {e}")))?;
            Ok(MuCirculant::new(first_row.clone(), weights)?)
        }
        MatrixDocument::SkewCirculant { first_row } => Ok(twisted::skew_circ(first_row.clone())?),
        other => Err(kind_mismatch(other, command, "mu_circulant or skew_circulant")),
    }
}

/// Exact first row from a `rational_circulant`, or from a `circulant` whose
/// entries are real (each `f64` converts exactly).
fn rational_input(doc: &MatrixDocument, command: &str) -> Result<RationalCirculant, Failure> {
    match doc {
        MatrixDocument::RationalCirculant { first_row } => Ok(RationalCirculant::new(first_row.clone())?),
        MatrixDocument::Circulant { first_row } => {
            let coeffs = first_row
                .iter()
                .enumerate()
                .map(|(i, z)| {
                    if z.im != 0.0 {
                        return Err(Failure::Usage(format!(
                            "field `first_row[{i}]`: {command} needs real entries"
                        )));
                    }
                    BigRational::from_float(z.re)
                        .ok_or_else(|| Failure::Usage(format!("field `first_row[{i}]`: not finite")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(RationalCirculant::new(coeffs)?)
        }
        other => Err(kind_mismatch(other, command, "rational_circulant or circulant")),
    }
}

fn chopped(values: &[Complex64], scale: f64) -> Vec<Complex64> {
    let tol = CHOP * (1.0 + scale);
    values.iter().map(|&z| chop(z, tol)).collect()
}

fn circulant_doc(c: &Circulant, scale: f64) -> Value {
    MatrixDocument::Circulant {
        first_row: chopped(c.coeffs(), scale.max(c.inf_norm())),
    }
    .to_value()
}

type Outcome = Result<(Value, Option<String>), Failure>;

fn eig(doc: &MatrixDocument) -> Outcome {
    if matches!(
        doc,
        MatrixDocument::MuCirculant { .. } | MatrixDocument::SkewCirculant { .. }
    ) {
        return mu_eig(doc);
    }
    let c = circulant_input(doc, "eig")?;
    let mut map = Map::new();
    map.insert("kind".into(), json!("spectrum"));
    map.insert("n".into(), json!(c.n()));
    map.insert(
        "values".into(),
        complex_list(&chopped(eigenvalues(&c).values(), c.inf_norm())),
    );
    if let MatrixDocument::RationalCirculant { first_row } = doc {
        let exact = lattice::rational_spectrum(&RationalCirculant::new(first_row.clone())?)?;
        map.insert("exact".into(), exact.map_or(Value::Null, |s| rational_list(s.values())));
    }
    Ok((Value::Object(map), None))
}

fn forms_cmd(doc: &MatrixDocument) -> Outcome {
    let (n, q) = match doc {
        MatrixDocument::RationalCirculant { first_row } => {
            let c = RationalCirculant::new(first_row.clone())?;
            (c.n(), rational_list(&lattice::exact_forms(&c)))
        }
        MatrixDocument::MuCirculant { .. } | MatrixDocument::SkewCirculant { .. } => {
            let m = mu_input(doc, "forms")?;
            let scale = twisted::mu_to_dense(&m).inf_norm();
            let f = twisted::mu_forms(&m);
            let q: Vec<Complex64> = (1..=m.n())
                .map(|i| chop(f.q(i), CHOP * (1.0 + scale).powi(i as i32)))
                .collect();
            (m.n(), complex_list(&q))
        }
        _ => {
            let c = circulant_input(doc, "forms")?;
            let f = forms::forms(&c);
            let scale = 1.0 + c.inf_norm();
            let q: Vec<Complex64> = (1..=c.n()).map(|i| chop(f.q(i), CHOP * scale.powi(i as i32))).collect();
            (c.n(), complex_list(&q))
        }
    };
    Ok((json!({"kind": "forms", "n": n, "q": q}), None))
}

fn charpoly(doc: &MatrixDocument) -> Outcome {
    let (n, coefficients) = match doc {
        MatrixDocument::RationalCirculant { first_row } => {
            let c = RationalCirculant::new(first_row.clone())?;
            (c.n(), rational_list(&lattice::exact_char_poly(&c)))
        }
        _ => {
            let c = circulant_input(doc, "charpoly")?;
            let scale = 1.0 + c.inf_norm();
            let coeffs: Vec<Complex64> = forms::char_poly(&c)
                .iter()
                .enumerate()
                .map(|(i, &a)| chop(a, CHOP * scale.powi(i as i32)))
                .collect();
            (c.n(), complex_list(&coeffs))
        }
    };
    Ok((json!({"kind": "char_poly", "n": n, "coefficients": coefficients}), None))
}

fn inverse(doc: &MatrixDocument) -> Outcome {
    if let MatrixDocument::RationalCirculant { first_row } = doc {
        let c = RationalCirculant::new(first_row.clone())?;
        return match oracle::exact_inverse(&c.to_dense_exact()) {
            Ok(inv) => {
                let value = MatrixDocument::RationalCirculant {
                    first_row: inv[0].clone(),
                }
                .to_value();
                Ok((value, None))
            }
            Err(_) => {
                let witness = match forms::is_invertible(&c.to_complex()) {
                    forms::Invertibility::Singular { witness, .. } => Some(witness),
                    forms::Invertibility::Invertible { .. } => None,
                };
                Err(Error::Singular { witness }.into())
            }
        };
    }
    let c = circulant_input(doc, "inverse")?;
    let inv = forms::inverse(&c)?;
    Ok((circulant_doc(&inv, 0.0), None))
}

fn hopf_delta(doc: &MatrixDocument) -> Outcome {
    let c = circulant_input(doc, "hopf-delta")?;
    let delta = hopf::comultiplication(&c);
    let blocks: Vec<Vec<Complex64>> = delta.blocks().iter().map(|b| b.coeffs().to_vec()).collect();
    let value = json!({
        "kind": "block_circulant",
        "n": c.n(),
        "blocks": complex_grid(&blocks),
        "spectrum": complex_list(&chopped(&hopf::delta_spectrum(&c), c.inf_norm())),
    });
    Ok((value, None))
}

fn report_value(report: &hopf::HopfReport) -> Value {
    json!({
        "axiom": report.axiom,
        "holds": report.holds,
        "max_residual": document::format_real(report.max_residual),
    })
}

fn apply_tol(mut report: hopf::HopfReport, tol: Option<f64>) -> hopf::HopfReport {
    if let Some(t) = tol {
        report.holds = report.max_residual <= t;
    }
    report
}

fn verification(reports: &[hopf::HopfReport]) -> (Value, Option<String>) {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.holds).map(|r| r.axiom.as_str()).collect();
    let value = json!({
        "kind": "verification",
        "holds": failed.is_empty(),
        "reports": reports.iter().map(report_value).collect::<Vec<_>>(),
    });
    let verdict = (!failed.is_empty()).then(|| format!("verification failed: {}", failed.join(", ")));
    (value, verdict)
}

fn hopf_verify(doc: &MatrixDocument, tol: Option<f64>) -> Outcome {
    let c = circulant_input(doc, "hopf-verify")?;
    let reports = [
        hopf::verify_counit_axiom(&c),
        hopf::verify_antipode_axiom(&c),
        hopf::verify_coassociativity(&c),
    ]
    .map(|r| apply_tol(r, tol));
    Ok(verification(&reports))
}

fn mu_eig(doc: &MatrixDocument) -> Outcome {
    let m = mu_input(doc, "mu-eig")?;
    let scale = twisted::mu_to_dense(&m).inf_norm();
    let e = twisted::mu_eigen(&m);
    let vectors: Vec<Vec<Complex64>> = e.vectors.iter().map(|v| chopped(v, 1.0)).collect();
    let value = json!({
        "kind": "mu_spectrum",
        "n": m.n(),
        "values": complex_list(&chopped(e.spectrum.values(), scale)),
        "vectors": complex_grid(&vectors),
    });
    Ok((value, None))
}

fn cocycle_verify(doc: &MatrixDocument, tol: Option<f64>) -> Outcome {
    let table = match doc {
        MatrixDocument::Cocycle { table } => TwoCocycle::from_table(table.clone())?,
        MatrixDocument::MuCirculant { .. } | MatrixDocument::SkewCirculant { .. } => {
            twisted::cocycle_from_mu(mu_input(doc, "cocycle-verify")?.weights())
        }
        other => {
            return Err(kind_mismatch(
                other,
                "cocycle-verify",
                "cocycle, mu_circulant or skew_circulant",
            ))
        }
    };
    let report = apply_tol(twisted::verify_cocycle(&table)?, tol);
    Ok(verification(&[report]))
}

fn skew(doc: &MatrixDocument) -> Outcome {
    let coeffs = match doc {
        MatrixDocument::SkewCirculant { first_row } | MatrixDocument::Circulant { first_row } => first_row.clone(),
        other => return Err(kind_mismatch(other, "skew", "skew_circulant or circulant")),
    };
    let m = twisted::skew_circ(coeffs)?;
    let dense = twisted::mu_to_dense(&m);
    let scale = dense.inf_norm();
    let entries: Vec<Vec<Complex64>> = dense.to_rows().iter().map(|r| chopped(r, scale)).collect();
    let value = json!({
        "kind": "skew_circulant_expansion",
        "n": m.n(),
        "entries": complex_grid(&entries),
        "spectrum": complex_list(&chopped(twisted::mu_eigen(&m).spectrum.values(), scale)),
    });
    Ok((value, None))
}

fn reconstruct(doc: &MatrixDocument) -> Outcome {
    let MatrixDocument::RationalSpectrum { values } = doc else {
        return Err(kind_mismatch(doc, "spectrum-reconstruct", "rational_spectrum"));
    };
    let spectrum = lattice::IntegerSpectrum::new(values.clone())?;
    let r = lattice::reconstruct_from_spectrum(&spectrum);
    let value = json!({
        "kind": "reconstruction",
        "n": spectrum.n(),
        "real": r.real,
        "circulant": circulant_doc(&r.circulant, 0.0),
    });
    Ok((value, None))
}

fn factorize(doc: &MatrixDocument) -> Outcome {
    let MatrixDocument::Dense { entries } = doc else {
        return Err(kind_mismatch(doc, "factorize", "dense"));
    };
    let a = DenseMatrix::from_rows(entries.clone())?;
    let grid = hopf::factorize_dense(&a);
    let value = json!({
        "kind": "factor_grid",
        "n": a.n(),
        "coeffs": complex_grid(&grid.coeffs),
    });
    Ok((value, None))
}

fn brandt(cli: &Cli, docs: &[MatrixDocument], out: &mut Output) -> Result<(), Failure> {
    let elements = docs
        .iter()
        .enumerate()
        .map(|(i, d)| rational_input(d, "brandt-check").map_err(|f| prefix(f, i, docs.len())))
        .collect::<Result<Vec<_>, _>>()?;
    let mode = match cli.mode {
        ModeArg::Integral => Mode::Integral,
        ModeArg::Rational => Mode::Rational,
    };
    let verdict = lattice::brandt_check(&elements, mode)?;
    let counterexample = verdict.counterexample.as_ref().map_or(Value::Null, |v| {
        json!({
            "a": v.a,
            "b": v.b,
            "term": format!("{:?}", v.term).to_lowercase(),
            "form": v.form,
            "value": rational_value(&v.value),
        })
    });
    out.documents(vec![json!({
        "kind": "brandt_verdict",
        "mode": if mode == Mode::Integral { "integral" } else { "rational" },
        "holds": verdict.holds,
        "counterexample": counterexample,
    })])?;
    match &verdict.counterexample {
        None => Ok(()),
        Some(v) => Err(Failure::Domain(format!(
            "Brandt predicate fails: q_{} of {:?} term for pair ({}, {}) is {}",
            v.form,
            v.term,
            v.a,
            v.b,
            lattice::format_rational(&v.value)
        ))),
    }
}

fn prefix(f: Failure, i: usize, total: usize) -> Failure {
    if total == 1 {
        return f;
    }
    match f {
        Failure::Usage(m) => Failure::Usage(format!("documents[{i}]: {m}")),
        Failure::Domain(m) => Failure::Domain(format!("documents[{i}]: {m}")),
    }
}

/// Documents: the `n` basis circulants, then the target.
fn lattice_solve(docs: &[MatrixDocument], out: &mut Output) -> Result<(), Failure> {
    let circulants = docs
        .iter()
        .enumerate()
        .map(|(i, d)| match d {
            MatrixDocument::RationalCirculant { first_row } => Ok(RationalCirculant::new(first_row.clone())?),
            other => Err(prefix(
                kind_mismatch(other, "lattice-solve", "rational_circulant"),
                i,
                docs.len(),
            )),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = circulants[0].n();
    if let Some(i) = circulants.iter().position(|c| c.n() != n) {
        return Err(Failure::Usage(format!(
            "documents[{i}]: field `n`: expected {n} (order of the first basis vector), found {}",
            circulants[i].n()
        )));
    }
    if circulants.len() != n + 1 {
        return Err(Failure::Usage(format!(
            "field `documents`: lattice-solve expects {} documents ({n} basis vectors, then the target), found {}",
            n + 1,
            circulants.len()
        )));
    }
    let (target, basis) = circulants.split_last().expect("n + 1 >= 2");
    let rows = basis.iter().map(|c| c.coeffs().to_vec()).collect();
    let basis = lattice::lattice_new(rows)?;
    let inverse = lattice::basis_inverse_integral(&basis);
    let d = lattice::lattice_decompose(&basis, target)?;
    out.documents(vec![json!({
        "kind": "lattice_decomposition",
        "n": n,
        "coefficients": rational_list(&d.coeffs),
        "member": d.member,
        "inverse_integral": inverse.integral,
        "determinant": rational_value(basis.determinant()),
    })])?;
    if d.member {
        Ok(())
    } else {
        let i = d.coeffs.iter().position(|c| !c.is_integer()).unwrap_or(0);
        Err(Failure::Domain(format!(
            "target is not in the lattice: coefficient {} is {}",
            i + 1,
            lattice::format_rational(&d.coeffs[i])
        )))
    }
}

fn verify_all(cli: &Cli, out: &mut Output) -> Result<(), Failure> {
    let reports = verify::run_all(&VerifyConfig {
        seed: cli.seed,
        tol: cli.tol,
    });
    let lines: Vec<String> = reports
        .iter()
        .map(|r| {
            json!({
                "module": r.module,
                "suite": r.suite,
                "cases": r.cases,
                "max_residual": document::format_real(r.max_residual),
                "tolerance": document::format_real(r.tolerance),
                "pass": r.pass,
            })
            .to_string()
        })
        .collect();
    out.lines(&lines)?;
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{}/{}", r.module, r.suite))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!(
            "{} suite(s) failed: {}",
            failed.len(),
            failed.join(", ")
        )))
    }
}

fn run_bench(cli: &Cli, out: &mut Output) -> Result<(), Failure> {
    let config = BenchConfig {
        sizes: cli.sizes.clone(),
        reps: cli.reps,
        seed: cli.seed,
        tol: cli.tol.unwrap_or(bench::DEFAULT_TOLERANCE),
        ..BenchConfig::default()
    };
    match bench::run(&config) {
        Ok(results) => out.lines(&results.iter().map(|r| r.to_json_line()).collect::<Vec<_>>()),
        Err(e @ bench::BenchError::Precondition(_)) => Err(Failure::Usage(e.to_string())),
        Err(e) => Err(Failure::Domain(e.to_string())),
    }
}
