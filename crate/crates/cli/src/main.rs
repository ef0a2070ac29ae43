//! `macdonald`: command-line front end for macdonald-core.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 domain failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use macdonald_core::affine::{self, AffineVector};
use macdonald_core::clifford::{self, NLineConfig};
use macdonald_core::cohomology;
use macdonald_core::hecke::{self, EMemo};
use macdonald_core::qt::{parse_specialization, xpoly_to_json, XPoly};
use macdonald_core::tableaux::{self, Partition};
use macdonald_core::verify::{self, VerifyOptions, DEFAULT_SEED};
use macdonald_core::zeta::{self, CurveZeta};
use serde_json::json;

#[derive(Parser)]
#[command(name = "macdonald", version, about = "Exact Macdonald polynomials and related computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// P_λ(x; q, t) as a sum over semistandard tableaux
    PTab(ShapeArgs),
    /// P_λ(x; q, t) as a quotient of antisymmetrized nonsymmetric polynomials
    PWcf(ShapeArgs),
    /// Nonsymmetric Macdonald polynomial E_μ
    E(WeightArgs),
    /// Antisymmetrization A_μ of E_μ (μ strictly decreasing)
    A(WeightArgs),
    /// Schur polynomial s_λ
    Schur(ShapeArgs),
    /// Hall-Littlewood polynomial P_λ(x; t)
    Hl(ShapeArgs),
    /// Affine root systems of classical type
    Affine {
        #[command(subcommand)]
        cmd: AffineCmd,
    },
    /// Clifford chain of n lines
    Clifford(CliffordArgs),
    /// Zeta function of a symmetric product of a curve
    Zeta(ZetaArgs),
    /// Rational cohomology of a symmetric product of a curve
    Cohomology(CohomologyArgs),
    /// Cross-formula verification suites
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum PolyFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum DataFormat {
    Text,
    Json,
}

#[derive(Args)]
struct ShapeArgs {
    /// Partition, e.g. 2,1
    #[arg(long)]
    shape: String,
    /// Number of variables
    #[arg(long)]
    n: usize,
    /// Parameter specialization, e.g. q=t or q=0,t=0
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyFormat,
}

#[derive(Args)]
struct WeightArgs {
    /// Composition, e.g. 0,1
    #[arg(long)]
    mu: String,
    /// Number of variables (defaults to the length of μ)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyFormat,
}

#[derive(Subcommand)]
enum AffineCmd {
    /// Orbit of a vector of V_Z, e.g. 1e1+1d2
    Orbit {
        #[arg(long)]
        vector: String,
        /// Ambient rank (defaults to the largest index used)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: DataFormat,
    },
    /// Apply a generator s_i
    Apply {
        #[arg(long)]
        vector: String,
        #[arg(long)]
        gen: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The specialization poset
    Poset {
        #[arg(long, value_enum, default_value = "json")]
        format: PosetFormat,
    },
    /// Specialization path between two systems
    Path {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum CliffordMode {
    Formula,
    Construct,
    Verify,
}

#[derive(Args)]
struct CliffordArgs {
    /// Points y_i as re,im pairs separated by ';', e.g. "2,0;0,2"
    #[arg(long, allow_hyphen_values = true)]
    ys: String,
    #[arg(long, value_enum, default_value = "formula")]
    mode: CliffordMode,
    /// Also write an SVG figure to this path
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ZetaEmit {
    Z,
    Counts,
    Fe,
    Rh,
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long)]
    q: i64,
    /// Coefficients of P(t), constant term first, e.g. 1,0,2
    #[arg(long, allow_hyphen_values = true)]
    numer: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "z")]
    emit: ZetaEmit,
    /// Largest extension degree for counts
    #[arg(long, default_value_t = 4)]
    m: usize,
    /// Tolerance for the root moduli
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: DataFormat,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum CohEmit {
    Betti,
    Poincare,
    Relations,
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long)]
    g: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "betti")]
    emit: CohEmit,
    /// Cross-check against deg F_k of a curve given as q:numer, e.g. 2:1,0,2
    #[arg(long)]
    zeta: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: DataFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    max_weight: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: DataFormat,
}

/// A command outcome: `Ok(true)` passes, `Ok(false)` is a domain failure.
type Outcome = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::PTab(a) => shape_cmd(&a, |lam, n, _| Ok(tableaux::p_tableaux(lam, n))),
        Cmd::PWcf(a) => shape_cmd(&a, |lam, n, memo| hecke::wcf_p(lam, n, memo).map_err(err)),
        Cmd::Schur(a) => shape_cmd(&a, |lam, n, _| Ok(tableaux::schur(lam, n))),
        Cmd::Hl(a) => shape_cmd(&a, |lam, n, _| hecke::hall_littlewood(lam, n).map_err(err)),
        Cmd::E(a) => weight_cmd(&a, |mu, memo| Ok(hecke::e_poly(mu, memo))),
        Cmd::A(a) => weight_cmd(&a, |mu, memo| hecke::ferm_a(mu, memo).map_err(err)),
        Cmd::Affine { cmd } => affine_cmd(cmd),
        Cmd::Clifford(a) => clifford_cmd(&a),
        Cmd::Zeta(a) => zeta_cmd(&a),
        Cmd::Cohomology(a) => cohomology_cmd(&a),
        Cmd::Verify(a) => verify_cmd(&a),
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn parse_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|_| format!("not an integer: {x:?}")))
        .collect()
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os("MACDONALD_CACHE_DIR").map(|d| PathBuf::from(d).join("emac_cache.json"))
}

fn load_memo() -> EMemo {
    let Some(p) = cache_path() else { return EMemo::new() };
    match std::fs::read_to_string(&p) {
        Ok(s) => EMemo::from_json(&s).unwrap_or_else(|e| {
            eprintln!("warning: ignoring unreadable cache {}: {e}", p.display());
            EMemo::new()
        }),
        Err(_) => EMemo::new(),
    }
}

fn save_memo(memo: &EMemo) {
    let Some(p) = cache_path() else { return };
    if let Some(dir) = p.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    if let Err(e) = std::fs::write(&p, memo.to_json()) {
        eprintln!("warning: could not write cache {}: {e}", p.display());
    }
}

fn emit_poly(f: &XPoly, spec: Option<&str>, format: PolyFormat) -> Outcome {
    let f = match spec {
        Some(s) => {
            let (uq, ut) = parse_specialization(s).map_err(err)?;
            f.specialize(uq.as_ref(), ut.as_ref()).map_err(err)?
        }
        None => f.clone(),
    };
    match format {
        PolyFormat::Text => println!("{f}"),
        PolyFormat::Latex => println!("{}", f.to_latex()),
        PolyFormat::Json => println!("{}", xpoly_to_json(&f)),
    }
    Ok(true)
}

fn shape_cmd<F>(a: &ShapeArgs, f: F) -> Outcome
where
    F: FnOnce(&Partition, usize, &mut EMemo) -> Result<XPoly, String>,
{
    let lam = Partition::new(&parse_list(&a.shape)?).map_err(err)?;
    let mut memo = load_memo();
    let p = f(&lam, a.n, &mut memo)?;
    save_memo(&memo);
    emit_poly(&p, a.spec.as_deref(), a.format)
}

fn weight_cmd<F>(a: &WeightArgs, f: F) -> Outcome
where
    F: FnOnce(&[usize], &mut EMemo) -> Result<XPoly, String>,
{
    let raw = parse_list(&a.mu)?;
    let mut mu: Vec<usize> = raw
        .iter()
        .map(|&x| usize::try_from(x).map_err(|_| format!("negative entry {x} in μ")))
        .collect::<Result<_, _>>()?;
    if let Some(n) = a.n {
        if n < mu.len() {
            return Err(format!("μ has {} entries but n = {n}", mu.len()));
        }
        mu.resize(n, 0);
    }
    let mut memo = load_memo();
    let p = f(&mu, &mut memo)?;
    save_memo(&memo);
    emit_poly(&p, a.spec.as_deref(), a.format)
}

fn affine_cmd(cmd: AffineCmd) -> Outcome {
    match cmd {
        AffineCmd::Orbit { vector, n, format } => {
            let v = AffineVector::parse(&vector, n).map_err(err)?;
            let orbit = affine::orbit_membership(&v);
            let label = orbit.map_or("none".to_string(), |o| o.to_string());
            match format {
                DataFormat::Text => println!("{label}"),
                DataFormat::Json => println!("{}", json!({"vector": v.to_string(), "orbit": orbit})),
            }
            Ok(orbit.is_some())
        }
        AffineCmd::Apply { vector, gen, n } => {
            let v = AffineVector::parse(&vector, n).map_err(err)?;
            println!("{}", affine::apply_gen(&v, gen).map_err(err)?);
            Ok(true)
        }
        AffineCmd::Poset { format } => {
            let cat = affine::catalog();
            match format {
                PosetFormat::Json => println!("{}", serde_json::to_string_pretty(&cat).map_err(err)?),
                PosetFormat::Dot => print!("{}", cat.to_dot()),
            }
            let problems = affine::check_catalog_consistency(&cat);
            for p in &problems {
                eprintln!("inconsistent: {p}");
            }
            Ok(problems.is_empty())
        }
        AffineCmd::Path { from, to } => match affine::specialization_path(&from, &to).map_err(err)? {
            Some(p) => {
                println!("{}", serde_json::to_string_pretty(&p).map_err(err)?);
                Ok(true)
            }
            None => {
                eprintln!("{to} is not a specialization of {from}");
                Ok(false)
            }
        },
    }
}

fn clifford_cmd(a: &CliffordArgs) -> Outcome {
    let l = NLineConfig::new(clifford::parse_ys(&a.ys).map_err(err)?).map_err(err)?;
    let (out, ok) = match a.mode {
        CliffordMode::Formula => (clifford::clifford_formula(&l).map_err(err)?, true),
        CliffordMode::Construct => (clifford::constructive_clifford(&l).map_err(err)?, true),
        CliffordMode::Verify => {
            let checks = clifford::verify_config(&l).map_err(err)?;
            let ok = checks.iter().all(|c| c.ok);
            println!("{}", serde_json::to_string_pretty(&json!({"ok": ok, "checks": checks})).map_err(err)?);
            (clifford::clifford_formula(&l).map_err(err)?, ok)
        }
    };
    if a.mode != CliffordMode::Verify {
        println!("{}", out.to_json());
    }
    if let Some(path) = &a.svg {
        std::fs::write(path, clifford::svg(&l, &out)).map_err(err)?;
        eprintln!("wrote {}", path.display());
    }
    Ok(ok)
}

fn curve(q: i64, numer: &str) -> Result<CurveZeta, String> {
    let c = zeta::curve_from_numerator(q, &parse_list(numer)?).map_err(err)?;
    if let Some(w) = c.weil_warning() {
        eprintln!("warning: {w}");
    }
    Ok(c)
}

fn print_data(format: DataFormat, text: &str, value: serde_json::Value) -> Result<(), String> {
    match format {
        DataFormat::Text => println!("{text}"),
        DataFormat::Json => println!("{}", serde_json::to_string_pretty(&value).map_err(err)?),
    }
    Ok(())
}

fn zeta_cmd(a: &ZetaArgs) -> Outcome {
    let c = curve(a.q, &a.numer)?;
    match a.emit {
        ZetaEmit::Z => {
            let z = zeta::z_sym(&c, a.n).map_err(err)?;
            let side = |v: &[(usize, _)]| -> String {
                v.iter().map(|(k, f)| format!("F_{k} = {f}")).collect::<Vec<_>>().join("\n")
            };
            let text = format!("numerator:\n{}\ndenominator:\n{}", side(&z.numerator), side(&z.denominator));
            print_data(a.format, &text, z.to_json())?;
            Ok(true)
        }
        ZetaEmit::Counts => {
            let mut rows = Vec::new();
            let mut ok = true;
            for m in 1..=a.m {
                let log = zeta::count_by_log_derivative(&c, a.n, m).map_err(err)?;
                let base = zeta::count_by_base_change(&c, a.n, m);
                ok &= log == base;
                rows.push((m, log.to_string(), base.to_string()));
            }
            let text = rows.iter().map(|(m, l, b)| format!("m = {m}: {l} (base change {b})")).collect::<Vec<_>>().join("\n");
            let value = json!(rows.iter().map(|(m, l, b)| json!({"m": m, "log_derivative": l, "base_change": b})).collect::<Vec<_>>());
            print_data(a.format, &text, value)?;
            Ok(ok)
        }
        ZetaEmit::Fe => {
            let fe = zeta::functional_eq_check(&c, a.n).map_err(err)?;
            let text = format!(
                "exponent {}: printed form {}, sign-corrected form {}",
                fe.exponent,
                if fe.printed_holds { "holds" } else { "fails" },
                if fe.corrected_holds { "holds" } else { "fails" }
            );
            print_data(a.format, &text, serde_json::to_value(&fe).map_err(err)?)?;
            Ok(fe.printed_holds)
        }
        ZetaEmit::Rh => {
            let rh = zeta::rh_check(&c, a.n, a.tol).map_err(err)?;
            let text = rh
                .factors
                .iter()
                .map(|f| format!("F_{}: |root| = {:.12} expected, max relative error {:e}", f.k, f.expected_modulus, f.max_rel_err))
                .collect::<Vec<_>>()
                .join("\n");
            print_data(a.format, &text, serde_json::to_value(&rh).map_err(err)?)?;
            Ok(rh.ok)
        }
    }
}

fn cohomology_cmd(a: &CohomologyArgs) -> Outcome {
    let mut ok = true;
    match a.emit {
        CohEmit::Betti => {
            let b = cohomology::betti(a.g, a.n).map_err(err)?;
            print_data(a.format, &format!("{b:?}"), json!(b))?;
        }
        CohEmit::Poincare => {
            let p = cohomology::poincare(a.g, a.n).map_err(err)?;
            print_data(a.format, &p, json!(p))?;
        }
        CohEmit::Relations => {
            let rels = cohomology::enumerate_relations(a.g, a.n);
            let text = rels.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            print_data(a.format, &text, serde_json::to_value(&rels).map_err(err)?)?;
        }
    }
    if let Some(z) = &a.zeta {
        let (q, numer) = z.split_once(':').ok_or("expected --zeta q:numer")?;
        let c = curve(q.trim().parse().map_err(|_| format!("bad q {q:?}"))?, numer)?;
        let cc = cohomology::cross_check_zeta(a.g, a.n, &c).map_err(err)?;
        eprintln!(
            "cross-check with deg F_k: {} (betti {:?}, degrees {:?})",
            if cc.ok { "ok" } else { "MISMATCH" },
            cc.betti,
            cc.f_degrees
        );
        ok &= cc.ok;
    }
    Ok(ok)
}

fn verify_cmd(a: &VerifyArgs) -> Outcome {
    let opts = VerifyOptions {
        max_weight: a.max_weight,
        n: a.n,
        seed: a.seed,
    };
    let names: Vec<&str> = if a.suite == "all" {
        verify::SUITES.to_vec()
    } else {
        a.suite.split(',').map(str::trim).collect()
    };
    let mut memo = load_memo();
    let mut reports = Vec::new();
    for name in names {
        let r = verify::run_suite(name, &opts, &mut memo).map_err(err)?;
        eprintln!("{}", r.summary());
        reports.push(r);
    }
    save_memo(&memo);
    let passed = reports.iter().all(|r| r.passed);
    match a.format {
        DataFormat::Json => {
            let v = json!({"status": if passed { "pass" } else { "fail" }, "suites": reports});
            println!("{}", serde_json::to_string_pretty(&v).map_err(err)?);
        }
        DataFormat::Text => {
            for r in &reports {
                println!("{}", r.summary());
                for n in &r.notes {
                    println!("  note: {n}");
                }
                for f in &r.failures {
                    println!("  fail: {f}");
                }
            }
            println!("{}", if passed { "pass" } else { "fail" });
        }
    }
    Ok(passed)
}
