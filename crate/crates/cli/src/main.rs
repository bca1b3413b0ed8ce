//! `folsym`: batch front end for the symbol engine.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use folsym::asymptotic::{compose_asymptotic, td_vs_t2d2_report};
use folsym::dirac::{dirac_square_terms, dirac_symbol, dirac_terms, kappa_eighth_check, TaggedTerm};
use folsym::quantization_oracle::{calibrate, calibration_family};
use folsym::serialization::*;
use folsym::verify::{self, Config, Sizes};
use folsym::{a0, ak, compose_full, random_geometry, Calibration, Error, Model, ModelGeometry, PolySymbol, RandomFlags};

#[derive(Parser)]
#[command(name = "folsym", version, about = "Transverse symbol calculus of a foliation, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Geometry JSON; without it a random geometry is drawn from --seed, --n, --q, --rank.
    #[arg(long, global = true)]
    geometry: Option<PathBuf>,
    /// Antisymmetrize sparse geometry entries instead of rejecting them.
    #[arg(long, global = true)]
    lenient: bool,
    #[arg(long, global = true)]
    symbol: Option<PathBuf>,
    #[arg(long, global = true)]
    symbol2: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest grading exercised; for verify-suite, switches to the reduced battery.
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 2)]
    q: usize,
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    #[arg(long, global = true, default_value_t = 1)]
    rank: usize,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    calibration_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a geometry's antisymmetries and dimensions.
    Validate,
    /// The full composed symbol of --symbol and --symbol2.
    Compose,
    /// Leading symbol a0 of the composition.
    A0,
    /// The grade-drop-k part of the composition.
    Ak {
        #[arg(long)]
        k: usize,
    },
    /// Symbol of the transverse Dirac operator.
    Dirac,
    /// The eight summands of the symbol of D^2.
    Dirac2,
    /// a0 of the Dirac symbol with itself against its closed form.
    KappaCheck,
    /// Compose two asymptotic symbols, truncated at --degree-cap.
    AsymptoticCompose,
    /// Run the identity battery.
    VerifySuite,
    /// Search the normalization grid and persist the result.
    Calibrate,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    bundle: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let (code, kind) = match &e {
            Error::Parse(_) => (2, "parse"),
            Error::InvalidGeometry(_) | Error::DimensionMismatch(_) | Error::IndexOutOfRange(_) | Error::Precondition(_) => {
                (3, "validation")
            }
            Error::Calibration(_) => (4, "calibration"),
            Error::Internal(_) => (5, "assertion"),
        };
        Failure { code, kind, message: e.to_string(), bundle: None }
    }
}

type Out<T> = std::result::Result<T, Failure>;

fn read_json(path: &PathBuf) -> Out<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, kind: "parse", message: format!("{}: {e}", path.display()), bundle: None })?;
    Ok(parse_json(&text)?)
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> Out<&'a PathBuf> {
    p.as_ref().ok_or_else(|| Failure { code: 2, kind: "parse", message: format!("missing {flag}"), bundle: None })
}

impl Cli {
    fn geometry(&self) -> Out<ModelGeometry> {
        match &self.geometry {
            Some(p) => Ok(geometry_from_json(&read_json(p)?, !self.lenient)?),
            None => {
                if self.q > self.n {
                    return Err(Error::DimensionMismatch(format!("q = {} exceeds n = {}", self.q, self.n)).into());
                }
                Ok(random_geometry(self.seed, self.n, self.n - self.q, self.rank, RandomFlags::default())?)
            }
        }
    }

    fn calibration(&self) -> Out<Calibration> {
        let missing = |m: String| Failure { code: 4, kind: "calibration-missing", message: m, bundle: None };
        let path = self.calibration_file.as_ref().ok_or_else(|| missing("--calibration-file is required; run `folsym calibrate` first".into()))?;
        let text = fs::read_to_string(path).map_err(|e| missing(format!("{}: {e}", path.display())))?;
        Ok(calibration_from_json(&parse_json(&text)?)?)
    }

    fn symbols(&self) -> Out<(PolySymbol, PolySymbol)> {
        let p = symbol_from_json(&read_json(need(&self.symbol, "--symbol")?)?)?;
        let q = symbol_from_json(&read_json(need(&self.symbol2, "--symbol2")?)?)?;
        Ok((p, q))
    }
}

/// A report in both renderings.
struct Report {
    json: Value,
    text: String,
}

fn symbol_report(p: &PolySymbol) -> Report {
    let gradings: Vec<Value> = p
        .grade_components()
        .into_iter()
        .map(|(g, c)| json!({"grading": g, "terms": c.terms().len()}))
        .collect();
    Report { json: json!({"symbol": symbol_to_json(p), "gradings": gradings}), text: format!("{p:?}\n") }
}

fn terms_report(terms: &[TaggedTerm], total: &PolySymbol) -> Report {
    let mut text = String::new();
    let items: Vec<Value> = terms
        .iter()
        .map(|t| {
            text.push_str(&format!("{} (grading {}): {:?}\n", t.name, t.grading.map_or("none".into(), |g| g.to_string()), t.symbol));
            json!({"name": t.name, "grading": t.grading, "symbol": symbol_to_json(&t.symbol)})
        })
        .collect();
    text.push_str(&format!("total: {total:?}\n"));
    Report { json: json!({"terms": items, "symbol": symbol_to_json(total)}), text }
}

fn run(cli: &Cli) -> Out<(Report, u8)> {
    let ok = |r: Report| Ok((r, 0));
    match &cli.command {
        Command::Validate => {
            let g = cli.geometry()?;
            ok(Report {
                json: json!({"valid": true, "n": g.n(), "q": g.q(), "rank": g.rank(), "riemannian": g.is_riemannian_bott()}),
                text: format!("valid n={} q={} rank={}\n", g.n(), g.q(), g.rank()),
            })
        }
        Command::Compose | Command::A0 | Command::Ak { .. } => {
            let g = cli.geometry()?;
            let m = Model::new(&g, cli.calibration()?)?;
            let (p, q) = cli.symbols()?;
            let r = match cli.command {
                Command::Compose => compose_full(&m, &p, &q)?,
                Command::A0 => a0(&m, &p, &q)?,
                Command::Ak { k } => ak(&m, &p, &q, k)?,
                _ => unreachable!(),
            };
            ok(symbol_report(&r))
        }
        Command::Dirac => {
            let g = cli.geometry()?;
            ok(terms_report(&dirac_terms(&g), &dirac_symbol(&g)))
        }
        Command::Dirac2 => {
            let g = cli.geometry()?;
            let m = Model::new(&g, cli.calibration()?)?;
            let terms = dirac_square_terms(&m);
            let mut total = PolySymbol::zero(g.dims());
            for t in &terms {
                total.add_assign(&t.symbol);
            }
            let mut r = terms_report(&terms, &total);
            r.json["note"] = json!("the hessian summand vanishes in the flat-normal model");
            ok(r)
        }
        Command::KappaCheck => {
            let g = cli.geometry()?;
            let m = Model::new(&g, cli.calibration()?)?;
            let k = kappa_eighth_check(&m)?;
            let (td, t2) = td_vs_t2d2_report(&m)?;
            let json = json!({
                "passed": k.passed(),
                "a0": symbol_to_json(&k.a0),
                "expected": multivector_to_json(&k.expected),
                "kappa_eighth": k.kappa_eighth.to_string(),
                "xi_block_cancels": k.xi_block_cancels,
                "mu_cross_cancels": k.mu_cross_cancels,
                "tD_passes": td.passes(),
                "t2D2_passes": t2.passes(),
            });
            let text = format!(
                "a0(D,D) = {:?}\nexpected = {:?}\nkappa/8 = {}\npassed = {}\n",
                k.a0,
                k.expected,
                k.kappa_eighth,
                k.passed()
            );
            if !k.passed() {
                return Err(Failure {
                    code: 5,
                    kind: "assertion",
                    message: "a0(D,D) differs from the closed form".into(),
                    bundle: Some(json!({"geometry": geometry_to_json(&g), "report": json})),
                });
            }
            ok(Report { json, text })
        }
        Command::AsymptoticCompose => {
            let g = cli.geometry()?;
            let m = Model::new(&g, cli.calibration()?)?;
            let p = asymptotic_from_json(&read_json(need(&cli.symbol, "--symbol")?)?)?;
            let q = asymptotic_from_json(&read_json(need(&cli.symbol2, "--symbol2")?)?)?;
            let r = compose_asymptotic(&m, &p, &q, cli.degree_cap)?;
            let text = r.coeffs.iter().enumerate().map(|(k, c)| format!("t^{k}: {c:?}\n")).collect();
            ok(Report { json: asymptotic_to_json(&r), text })
        }
        Command::VerifySuite => {
            let sizes = match cli.degree_cap {
                None => Sizes::full(),
                Some(k) => Sizes { inversion_max_grading: k, lemma_max_power: k, central_max_grading: k, ..Sizes::reduced() },
            };
            let cfg = Config { seed: cli.seed, sizes };
            let outcomes = verify::run_suite(&cfg);
            eprint!("{}", verify::timing_text(&outcomes));
            let code = if outcomes.iter().all(|o| o.passed) { 0 } else { 5 };
            Ok((Report { json: verify::report_json(&cfg, &outcomes), text: verify::report_text(&cfg, &outcomes) }, code))
        }
        Command::Calibrate => {
            let (c, rep) = calibrate(&calibration_family(cli.seed))?;
            let cal = calibration_to_json(&c);
            let path = cli.calibration_file.clone().unwrap_or_else(|| PathBuf::from("folsym-calibration.json"));
            fs::write(&path, to_canonical_string(&cal))
                .map_err(|e| Failure { code: 2, kind: "io", message: format!("{}: {e}", path.display()), bundle: None })?;
            let pairs = |v: &[(folsym::Scalar, folsym::Scalar)]| v.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect::<Vec<_>>();
            let json = json!({
                "calibration": cal,
                "geometries": rep.geometries,
                "after_curvature": pairs(&rep.after_curvature),
                "after_curvature_reversed": pairs(&rep.after_curvature_reversed),
                "after_reordering": pairs(&rep.after_reordering),
                "after_composition": pairs(&rep.after_composition),
            });
            let text = format!("c_gamma = {}\nc_omega = {}\n", c.c_gamma, c.c_omega);
            ok(Report { json, text })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.kind() == clap::error::ErrorKind::DisplayHelp || e.kind() == clap::error::ErrorKind::DisplayVersion => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", json!({"error": "parse", "exit_code": 2, "message": e.to_string()}));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok((report, code)) => {
            let body = match cli.format {
                Format::Json => to_canonical_string(&report.json),
                Format::Text => report.text,
            };
            match &cli.out {
                Some(p) => {
                    if let Err(e) = fs::write(p, body) {
                        eprintln!("{}", json!({"error": "io", "exit_code": 2, "message": format!("{}: {e}", p.display())}));
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(code)
        }
        Err(f) => {
            let mut v = json!({"error": f.kind, "exit_code": f.code, "message": f.message});
            if let Some(b) = f.bundle {
                v["reproduction"] = b;
            }
            eprintln!("{v}");
            ExitCode::from(f.code)
        }
    }
}
