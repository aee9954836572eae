//! Command line for the exact G2 / Spin(7) bracket engine.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on
//! malformed input or arguments.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use g2fn::brackets::{
    bracket_chi_chi, bracket_cr_chi, bracket_pp, h_endo_of, l_endo_of, pi7_lambda5_endo, tau1,
    tau2, tau3,
};
use g2fn::classify::{classify_g2, classify_spin7};
use g2fn::g2::{metric_from_phi, G2Model};
use g2fn::json as enc;
use g2fn::json::TorsionInput;
use g2fn::polyform::{nijenhuis, verify_fn_identities, PolyEndo};
use g2fn::rng::RNG_ID;
use g2fn::spin7::Spin7Model;
use g2fn::{Matrix, Scalar, ScalarMode};

#[derive(Parser)]
#[command(name = "g2fn", version, about = "Exact G2 / Spin(7) structure calculus")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct RunConfig {
    /// Arithmetic mode; rational is bit-exact and ignores --tol.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Rational)]
    mode: Mode,
    /// Seed for the deterministic sample generator.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Number of random samples per identity.
    #[arg(long, global = true, default_value_t = 100)]
    samples: u64,
    /// Absolute tolerance used by float mode comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Also write the report to this path (same bytes as stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    Rational,
    Float,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Family {
    G2,
    Spin7,
    Fn,
    All,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BracketKind {
    CrChi,
    ChiChi,
    Pp,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a randomized identity suite and report per-identity pass counts.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Compute a bracket from a torsion file, with its vector-type
    /// endomorphism and the closed-form prediction.
    Bracket {
        #[arg(long, value_enum)]
        kind: BracketKind,
        #[arg(long)]
        torsion: PathBuf,
    },
    /// Classify a torsion endomorphism into its nonvanishing components.
    Classify {
        #[arg(long)]
        torsion: PathBuf,
        /// Must match the type tag inside the torsion file when given.
        #[arg(long, value_enum)]
        family: Option<Family>,
    },
    /// Certify the eigenstructure of the 56×56 σ operator exactly.
    Phisigma,
    /// Polynomial-coefficient bracket calculus.
    #[command(name = "fn")]
    FnCalc {
        #[command(subcommand)]
        sub: FnSub,
    },
    /// Metric reconstruction.
    Metric {
        #[command(subcommand)]
        sub: MetricSub,
    },
}

#[derive(Subcommand)]
enum FnSub {
    /// Apply an operation described by a JSON file.
    Poly {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum MetricSub {
    /// Recover the metric induced by a definite 3-form.
    FromPhi {
        #[arg(long)]
        phi: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn run(cli: &Cli) -> Result<ExitCode, AnyError> {
    let cfg = &cli.cfg;
    let (value, ok) = match &cli.cmd {
        Cmd::Verify { family } => cmd_verify(*family, cfg)?,
        Cmd::Bracket { kind, torsion } => cmd_bracket(*kind, torsion, cfg)?,
        Cmd::Classify { torsion, family } => cmd_classify(torsion, *family, cfg)?,
        Cmd::Phisigma => cmd_phisigma()?,
        Cmd::FnCalc { sub: FnSub::Poly { input } } => cmd_fn_poly(input)?,
        Cmd::Metric { sub: MetricSub::FromPhi { phi } } => cmd_metric_from_phi(phi, cfg)?,
    };
    let text = enc::to_canonical_string(&value);
    print!("{text}");
    if let Some(path) = &cfg.out {
        fs::write(path, &text)?;
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn scalar_mode(cfg: &RunConfig) -> ScalarMode {
    match cfg.mode {
        Mode::Rational => ScalarMode::Rational,
        Mode::Float => ScalarMode::Float,
    }
}

fn float_tol(cfg: &RunConfig) -> Option<f64> {
    match cfg.mode {
        Mode::Rational => None,
        Mode::Float => Some(cfg.tol),
    }
}

fn cfg_fields(obj: &mut Map<String, Value>, cfg: &RunConfig) {
    obj.insert("mode".into(), json!(mode_name(cfg.mode)));
    obj.insert("seed".into(), json!(cfg.seed));
    obj.insert("samples".into(), json!(cfg.samples));
    obj.insert("rng".into(), json!(RNG_ID));
    if cfg.mode == Mode::Float {
        obj.insert("tol".into(), json!(cfg.tol));
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Rational => "rational",
        Mode::Float => "float",
    }
}

fn cmd_verify(family: Family, cfg: &RunConfig) -> Result<(Value, bool), AnyError> {
    let tol = float_tol(cfg);
    let one = |fam: Family| -> Result<(Value, bool), AnyError> {
        let report = match fam {
            Family::G2 => G2Model::new().verify_identities(cfg.samples, cfg.seed, tol),
            Family::Spin7 => Spin7Model::new().verify_identities(cfg.samples, cfg.seed, tol),
            Family::Fn => verify_fn_identities(cfg.samples, cfg.seed),
            Family::All => unreachable!(),
        };
        let ok = report.ok();
        Ok((enc::identity_report_to_value(&report), ok))
    };
    if family == Family::All {
        let mut reports = Vec::new();
        let mut all_ok = true;
        let mut failures_total = 0u64;
        for fam in [Family::G2, Family::Spin7, Family::Fn] {
            let (v, ok) = one(fam)?;
            failures_total += v["failures"].as_array().map_or(0, |a| a.len()) as u64;
            all_ok &= ok;
            reports.push(v);
        }
        let mut obj = Map::new();
        obj.insert("family".into(), json!("all"));
        obj.insert("reports".into(), Value::Array(reports));
        obj.insert("failures_total".into(), json!(failures_total));
        cfg_fields(&mut obj, cfg);
        Ok((Value::Object(obj), all_ok))
    } else {
        let (v, ok) = one(family)?;
        let mut obj = v.as_object().cloned().expect("report object");
        cfg_fields(&mut obj, cfg);
        Ok((Value::Object(obj), ok))
    }
}

fn read_json(path: &PathBuf) -> Result<Value, AnyError> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn matrices_match(a: &Matrix, b: &Matrix, tol: Option<f64>) -> bool {
    match tol {
        None => a == b,
        Some(eps) => {
            a.rows() == b.rows()
                && a.cols() == b.cols()
                && (0..a.rows()).all(|r| {
                    (0..a.cols())
                        .all(|c| (a.get(r, c).to_f64() - b.get(r, c).to_f64()).abs() <= eps)
                })
        }
    }
}

fn cmd_bracket(
    kind: BracketKind,
    torsion: &PathBuf,
    cfg: &RunConfig,
) -> Result<(Value, bool), AnyError> {
    let mode = scalar_mode(cfg);
    let tol = float_tol(cfg);
    let parsed = enc::torsion_from_value(&read_json(torsion)?, mode)?;
    let (value, ok) = match (kind, parsed) {
        (BracketKind::CrChi, TorsionInput::G2(t)) => {
            let model = G2Model::new();
            let bracket = bracket_cr_chi(&model, &t)?;
            let endo = pi7_lambda5_endo(&model, &bracket)?;
            let closed = tau1(&t);
            let class = classify_g2(&model, &endo, tol)?;
            let ok = matrices_match(&endo, &closed, tol);
            (
                json!({
                    "kind": "cr-chi",
                    "family": "g2",
                    "bracket": enc::vector_form_to_value(&bracket, mode),
                    "pi7_endo": enc::matrix_to_value(&endo),
                    "closed_form_endo": enc::matrix_to_value(&closed),
                    "exact_match": ok,
                    "class": enc::class_label_to_value(&class),
                }),
                ok,
            )
        }
        (BracketKind::ChiChi, TorsionInput::G2(t)) => {
            let model = G2Model::new();
            let bracket = bracket_chi_chi(&model, &t)?;
            let endo = l_endo_of(&model, &bracket)?;
            let closed = tau2(&model, &t)?;
            let class = classify_g2(&model, &endo, tol)?;
            let ok = matrices_match(&endo, &closed, tol);
            (
                json!({
                    "kind": "chi-chi",
                    "family": "g2",
                    "bracket": enc::vector_form_to_value(&bracket, mode),
                    "pi7_endo": enc::matrix_to_value(&endo),
                    "closed_form_endo": enc::matrix_to_value(&closed),
                    "exact_match": ok,
                    "class": enc::class_label_to_value(&class),
                }),
                ok,
            )
        }
        (BracketKind::Pp, TorsionInput::Spin7(t)) => {
            let model = Spin7Model::new();
            let bracket = bracket_pp(&model, &t)?;
            let endo = h_endo_of(&model, &bracket)?;
            let closed = tau3(&model, &t)?;
            let class = classify_spin7(&model, &endo, tol)?;
            let ok = matrices_match(&endo, &closed, tol);
            (
                json!({
                    "kind": "pp",
                    "family": "spin7",
                    "bracket": enc::vector_form_to_value(&bracket, mode),
                    "pi7_endo": enc::matrix_to_value(&endo),
                    "closed_form_endo": enc::matrix_to_value(&closed),
                    "exact_match": ok,
                    "class": enc::class_label_to_value(&class),
                }),
                ok,
            )
        }
        _ => {
            return Err(Box::new(g2fn::Error::InvalidInput(
                "torsion family does not match the requested bracket".into(),
            )))
        }
    };
    Ok((value, ok))
}

fn cmd_classify(
    torsion: &PathBuf,
    family: Option<Family>,
    cfg: &RunConfig,
) -> Result<(Value, bool), AnyError> {
    let mode = scalar_mode(cfg);
    let tol = float_tol(cfg);
    let parsed = enc::torsion_from_value(&read_json(torsion)?, mode)?;
    let label = match parsed {
        TorsionInput::G2(t) => {
            if matches!(family, Some(f) if f != Family::G2) {
                return Err(Box::new(g2fn::Error::InvalidInput(
                    "torsion file has type \"g2\"".into(),
                )));
            }
            classify_g2(&G2Model::new(), t.matrix(), tol)?
        }
        TorsionInput::Spin7(t) => {
            if matches!(family, Some(f) if f != Family::Spin7) {
                return Err(Box::new(g2fn::Error::InvalidInput(
                    "torsion file has type \"spin7\"".into(),
                )));
            }
            classify_spin7(&Spin7Model::new(), t.matrix(), tol)?
        }
    };
    Ok((enc::class_label_to_value(&label), true))
}

fn cmd_phisigma() -> Result<(Value, bool), AnyError> {
    let model = Spin7Model::new();
    let m = model.phi_sigma_matrix();
    let id = Matrix::identity(56);
    let m6 = m.sub(&id.scale(&Scalar::from_int(6)))?;
    let p1 = m.add(&id)?;
    let minimal_polynomial_ok = m6.mul(&p1)?.is_zero();
    let trace = m.trace()?;
    let trace_zero = trace.is_zero();
    let rank_m6 = m6.rank();
    let rank_p1 = p1.rank();
    // multiplicities are kernel dimensions of the shifted operators
    let mult_6 = 56 - rank_m6;
    let mult_minus1 = 56 - rank_p1;
    let ok = minimal_polynomial_ok && trace_zero && mult_minus1 == 48 && mult_6 == 8;
    let value = json!({
        "minimal_polynomial_ok": minimal_polynomial_ok,
        "trace": trace.repr(),
        "trace_zero": trace_zero,
        "rank_minus1": mult_minus1,
        "rank_6": mult_6,
        "matrix_rank_shift_6": rank_m6,
        "matrix_rank_shift_minus1": rank_p1,
        "semantics": {
            "rank_minus1": "multiplicity of eigenvalue -1: dim ker(op + id)",
            "rank_6": "multiplicity of eigenvalue 6: dim ker(op - 6 id)",
        },
        "dim": 56,
    });
    Ok((value, ok))
}

fn cmd_fn_poly(input: &PathBuf) -> Result<(Value, bool), AnyError> {
    let v = read_json(input)?;
    let op = v
        .get("op")
        .and_then(Value::as_str)
        .ok_or_else(|| g2fn::Error::InvalidInput("missing \"op\"".into()))?;
    let mode = ScalarMode::Rational;
    let result = match op {
        "bracket" => {
            let k1 = enc::poly_vector_form_from_value(req(&v, "k1")?)?;
            let k2 = enc::poly_vector_form_from_value(req(&v, "k2")?)?;
            enc::poly_vector_form_to_value(&k1.fn_bracket(&k2)?, mode)
        }
        "d" => {
            let f = enc::poly_form_from_value(req(&v, "form")?)?;
            enc::poly_form_to_value(&f.d(), mode)
        }
        "lie" => {
            let k = enc::poly_vector_form_from_value(req(&v, "k")?)?;
            let f = enc::poly_form_from_value(req(&v, "form")?)?;
            enc::poly_form_to_value(&k.lie_derivative(&f)?, mode)
        }
        "nijenhuis" => {
            let endo = PolyEndo::new(enc::poly_vector_form_from_value(req(&v, "endo")?)?)?;
            enc::poly_vector_form_to_value(&nijenhuis(&endo), mode)
        }
        other => {
            return Err(Box::new(g2fn::Error::InvalidInput(format!(
                "unknown op {other:?}"
            ))))
        }
    };
    Ok((json!({ "op": op, "result": result }), true))
}

fn req<'a>(v: &'a Value, name: &str) -> Result<&'a Value, AnyError> {
    v.get(name)
        .ok_or_else(|| Box::new(g2fn::Error::InvalidInput(format!("missing {name:?}"))) as AnyError)
}

fn cmd_metric_from_phi(phi: &PathBuf, cfg: &RunConfig) -> Result<(Value, bool), AnyError> {
    let mut form = enc::form_from_value(&read_json(phi)?)?;
    if cfg.mode == Mode::Float {
        form = form.to_float();
    }
    let g = metric_from_phi(&form)?;
    let exact = g
        .matrix()
        .get(0, 0)
        .rational()
        .is_some();
    let value = json!({
        "mode": if exact { "rational" } else { "float" },
        "g": enc::matrix_to_value(g.matrix()),
        "orientation": g.orientation(),
    });
    Ok((value, true))
}
