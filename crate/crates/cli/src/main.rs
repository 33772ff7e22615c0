//! `wittl`: command-line access to symmetric functions, Witt vectors of the
//! Lawvere quantale and enriched categories. Every command prints JSON.
//!
//! Exit codes: 0 on success, 1 when an input or result fails validation, 2
//! when the input cannot be read or parsed. Errors are printed as
//! `{"error": {"kind": …, "message": …}}`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Map, Value};

use witt_lawvere::enriched::{LCategory, WCategory};
use witt_lawvere::plancherel::{self, Distribution};
use witt_lawvere::suite::{self, SuiteConfig};
use witt_lawvere::{Error, LValue, Partition, SymFunc, WittElem, DEFAULT_DEGREE_BOUND};

#[derive(Parser)]
#[command(name = "wittl", version, about = "Witt vectors of the Lawvere quantale")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Degree bound for constructed elements
    #[arg(long = "degree", global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    degree: usize,
    /// Reject products whose degree exceeds the bound instead of truncating
    #[arg(long, global = true)]
    strict: bool,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Input file; standard input when absent
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when absent
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Accept Witt elements and categories that fail validation
    #[arg(long, global = true)]
    unchecked: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric functions in the monomial basis
    #[command(subcommand)]
    Sym(SymCmd),
    /// Elements of the Witt rig
    #[command(subcommand)]
    Witt(WittCmd),
    /// Enriched categories
    #[command(subcommand)]
    Cat(CatCmd),
    /// Plancherel measure and growth process
    #[command(subcommand)]
    Plancherel(PlancherelCmd),
    /// Property suites
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Subcommand)]
enum SymCmd {
    /// Product of the input with --other
    Mul {
        #[arg(long)]
        other: PathBuf,
    },
    CoprodAdd,
    CoprodMult,
    /// Plethysm: the input composed with --inner
    Plethysm {
        #[arg(long)]
        inner: PathBuf,
    },
    /// e_n and h_n for 1 ≤ n ≤ degree
    Bases,
}

#[derive(Subcommand)]
enum WittCmd {
    Add {
        #[arg(long)]
        other: PathBuf,
    },
    Mul {
        #[arg(long)]
        other: PathBuf,
    },
    Validate,
    Theta {
        #[arg(long)]
        r: LValue,
    },
    Tau,
    /// Evaluates the input at --phi, or builds the element with the given
    /// roots
    Eval {
        #[arg(long, conflicts_with = "roots")]
        phi: Option<PathBuf>,
        /// Comma-separated roots, e.g. 0,3/2,inf
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<LValue>>,
    },
    InL,
}

#[derive(Subcommand)]
enum CatCmd {
    /// Checks an 𝕃- or 𝕎(𝕃)-category
    Validate,
    Slice {
        #[arg(long, group = "which")]
        lambda: Option<Partition>,
        #[arg(long, group = "which")]
        h: Option<usize>,
        /// A symmetric function file
        #[arg(long, group = "which")]
        f: Option<PathBuf>,
    },
    Theta,
    Tau,
    /// The slice at g ∘ f
    Act {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        f: PathBuf,
    },
}

#[derive(Subcommand)]
enum PlancherelCmd {
    Measure {
        #[arg(long)]
        n: usize,
    },
    Sample {
        #[arg(long)]
        steps: usize,
    },
    Observe {
        #[arg(long)]
        cat: PathBuf,
        #[arg(long)]
        steps: usize,
    },
}

#[derive(Subcommand)]
enum SuiteCmd {
    Run {
        #[arg(long)]
        module: Option<String>,
    },
}

enum Failure {
    /// Unreadable or unparsable input.
    Malformed(String),
    /// Well-formed input that fails a check; `detail` is printed as is.
    Invalid { kind: &'static str, message: String, detail: Value },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPartition(_)
            | Error::InvalidValue(_)
            | Error::DegreeBoundMismatch { .. }
            | Error::UnknownPoint(_) => Failure::Malformed(e.to_string()),
            _ => Failure::Invalid {
                kind: error_kind(&e),
                message: e.to_string(),
                detail: Value::Null,
            },
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DegreeOverflow { .. } => "degree_overflow",
        Error::NonzeroConstantTerm => "nonzero_constant_term",
        Error::NotSymmetric(_) => "not_symmetric",
        Error::NotHomomorphism(_) => "not_homomorphism",
        Error::InvalidCategory(_) => "invalid_category",
        Error::EmptySupport => "empty_support",
        _ => "invalid",
    }
}

/// A successful command: its JSON and whether the exit code should signal a
/// failed check.
struct Output {
    value: Value,
    passed: bool,
}

impl Output {
    fn ok(value: impl Serialize) -> Result<Self, Failure> {
        Ok(Output {
            value: to_value(value)?,
            passed: true,
        })
    }

    fn verdict(value: impl Serialize, passed: bool) -> Result<Self, Failure> {
        Ok(Output {
            value: to_value(value)?,
            passed,
        })
    }
}

fn to_value(v: impl Serialize) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Malformed(e.to_string()))
}

fn read_source(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Malformed(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("{origin}: {e}")))
}

fn load<T: DeserializeOwned>(path: Option<&Path>) -> Result<T, Failure> {
    let origin = path.map_or("stdin".to_string(), |p| p.display().to_string());
    parse(&read_source(path)?, &origin)
}

struct Ctx<'a> {
    global: &'a Global,
}

impl Ctx<'_> {
    fn input<T: DeserializeOwned>(&self) -> Result<T, Failure> {
        load(self.global.input.as_deref())
    }

    fn check_witt(&self, f: WittElem) -> Result<WittElem, Failure> {
        if self.global.unchecked {
            return Ok(f);
        }
        let report = f.validate_hom();
        if report.passed() {
            Ok(f)
        } else {
            Err(Failure::Invalid {
                kind: "not_homomorphism",
                message: "input is not a rig homomorphism; pass --unchecked to accept it".into(),
                detail: to_value(report)?,
            })
        }
    }

    fn witt_input(&self) -> Result<WittElem, Failure> {
        self.check_witt(self.input()?)
    }

    fn witt_file(&self, path: &Path) -> Result<WittElem, Failure> {
        self.check_witt(load(Some(path))?)
    }

    fn w_category(&self, path: Option<&Path>) -> Result<WCategory, Failure> {
        let x: WCategory = load(path)?;
        if self.global.unchecked {
            return Ok(x);
        }
        let report = x.validate();
        if report.passed() {
            Ok(x)
        } else {
            Err(Failure::Invalid {
                kind: "invalid_category",
                message: "input is not a 𝕎(𝕃)-category; pass --unchecked to accept it".into(),
                detail: to_value(report)?,
            })
        }
    }
}

fn distribution_json(d: &Distribution) -> Value {
    let mut map = Map::new();
    for (l, p) in d {
        map.insert(l.key(), Value::String(p.to_string()));
    }
    Value::Object(map)
}

fn sym(ctx: &Ctx, cmd: &SymCmd) -> Result<Output, Failure> {
    let degree = ctx.global.degree;
    match cmd {
        SymCmd::Mul { other } => {
            let f: SymFunc = ctx.input()?;
            let g: SymFunc = load(Some(other))?;
            let product = if ctx.global.strict {
                f.multiply_strict(&g)?
            } else {
                f.multiply(&g)?
            };
            Output::ok(product)
        }
        SymCmd::CoprodAdd => Output::ok(ctx.input::<SymFunc>()?.coproduct_add()),
        SymCmd::CoprodMult => Output::ok(ctx.input::<SymFunc>()?.coproduct_mult()),
        SymCmd::Plethysm { inner } => {
            let f: SymFunc = ctx.input()?;
            let g: SymFunc = load(Some(inner))?;
            Output::ok(f.plethysm(&g)?)
        }
        SymCmd::Bases => {
            let mut e = Map::new();
            let mut h = Map::new();
            for n in 1..=degree {
                e.insert(n.to_string(), to_value(SymFunc::elementary(n, degree)?)?);
                h.insert(n.to_string(), to_value(SymFunc::complete(n, degree)?)?);
            }
            Output::ok(json!({ "degree_bound": degree, "e": e, "h": h }))
        }
    }
}

fn witt(ctx: &Ctx, cmd: &WittCmd) -> Result<Output, Failure> {
    let degree = ctx.global.degree;
    match cmd {
        WittCmd::Add { other } => Output::ok(ctx.witt_input()?.add(&ctx.witt_file(other)?)?),
        WittCmd::Mul { other } => Output::ok(ctx.witt_input()?.mul(&ctx.witt_file(other)?)?),
        WittCmd::Validate => {
            let f: WittElem = ctx.input()?;
            let report = f.validate_hom();
            let passed = report.passed();
            Output::verdict(json!({ "passed": passed, "report": report }), passed)
        }
        WittCmd::Theta { r } => Output::ok(WittElem::theta(r, degree)),
        WittCmd::Tau => Output::ok(ctx.witt_input()?.tau()?),
        WittCmd::Eval { phi, roots } => match (phi, roots) {
            (Some(phi), _) => {
                let f = ctx.witt_input()?;
                let phi: SymFunc = load(Some(phi))?;
                Output::ok(f.eval_sym(&phi)?)
            }
            (None, Some(roots)) => Output::ok(WittElem::eval_witt(roots, degree)),
            (None, None) => Err(Failure::Malformed("witt eval needs --phi or --roots".into())),
        },
        WittCmd::InL => {
            let f = ctx.witt_input()?;
            Output::ok(json!({ "in_wl_l": f.in_wl_l() }))
        }
    }
}

fn cat(ctx: &Ctx, cmd: &CatCmd) -> Result<Output, Failure> {
    let input = ctx.global.input.as_deref();
    match cmd {
        CatCmd::Validate => {
            let text = read_source(input)?;
            let raw: Value = parse(&text, "input")?;
            // 𝕎(𝕃)-categories have objects as distances, 𝕃-categories strings
            let enriched_in_witt = raw
                .get("dist")
                .and_then(Value::as_object)
                .and_then(|d| d.values().next())
                .is_some_and(Value::is_object);
            if enriched_in_witt {
                let x: WCategory = parse(&text, "input")?;
                let report = x.validate();
                let passed = report.passed();
                Output::verdict(json!({ "kind": "witt", "passed": passed, "report": report }), passed)
            } else {
                let x: LCategory = parse(&text, "input")?;
                let report = x.validate();
                let passed = report.passed();
                Output::verdict(json!({ "kind": "lawvere", "passed": passed, "report": report }), passed)
            }
        }
        CatCmd::Slice { lambda, h, f } => {
            let x = ctx.w_category(input)?;
            let table = match (lambda, h, f) {
                (Some(l), _, _) => x.slice_lambda(l)?,
                (_, Some(n), _) => x.slice_h(*n)?,
                (_, _, Some(path)) => x.eval_slice(&load::<SymFunc>(Some(path))?)?,
                _ => return Err(Failure::Malformed("cat slice needs --lambda, --h or --f".into())),
            };
            let is_l_category = table.validate().passed();
            Output::ok(json!({ "table": table, "is_l_category": is_l_category }))
        }
        CatCmd::Theta => {
            let x: LCategory = ctx.input()?;
            Output::ok(x.theta_cat(ctx.global.degree)?)
        }
        CatCmd::Tau => Output::ok(ctx.w_category(input)?.tau_cat()?),
        CatCmd::Act { g, f } => {
            let x = ctx.w_category(input)?;
            let g: SymFunc = load(Some(g))?;
            let f: SymFunc = load(Some(f))?;
            Output::ok(x.lambda_action(&g, &f)?)
        }
    }
}

fn plancherel_cmd(ctx: &Ctx, cmd: &PlancherelCmd) -> Result<Output, Failure> {
    let seed = ctx.global.seed.unwrap_or(0);
    match cmd {
        PlancherelCmd::Measure { n } => Output::ok(json!({
            "n": n,
            "measure": distribution_json(&plancherel::plancherel_measure(*n)),
        })),
        PlancherelCmd::Sample { steps } => Output::ok(plancherel::sample_path(*steps, seed)),
        PlancherelCmd::Observe { cat, steps } => {
            let x = ctx.w_category(Some(cat))?;
            let path = plancherel::sample_path(*steps, seed);
            let observations = plancherel::observe(&x, &path)?;
            Output::ok(json!({ "path": path, "observations": observations }))
        }
    }
}

fn suite_cmd(ctx: &Ctx, cmd: &SuiteCmd) -> Result<Output, Failure> {
    let SuiteCmd::Run { module } = cmd;
    let defaults = SuiteConfig::default();
    let config = SuiteConfig {
        degree_bound: ctx.global.degree,
        seed: ctx.global.seed.unwrap_or(defaults.seed),
    };
    let outcomes = suite::run(module.as_deref(), &config).map_err(|e| Failure::Malformed(e.to_string()))?;
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let cases: usize = outcomes.iter().map(|o| o.cases).sum();
    Output::verdict(
        json!({
            "degree_bound": config.degree_bound,
            "seed": config.seed,
            "suites": outcomes,
            "passed": outcomes.len() - failed,
            "failed": failed,
            "cases": cases,
        }),
        failed == 0,
    )
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    if cli.global.degree == 0 {
        return Err(Failure::Malformed("--degree must be at least 1".into()));
    }
    let ctx = Ctx { global: &cli.global };
    match &cli.command {
        Command::Sym(c) => sym(&ctx, c),
        Command::Witt(c) => witt(&ctx, c),
        Command::Cat(c) => cat(&ctx, c),
        Command::Plancherel(c) => plancherel_cmd(&ctx, c),
        Command::Suite(c) => suite_cmd(&ctx, c),
    }
}

fn emit(value: &Value, output: Option<&Path>) -> io::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match output {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn fail(kind: &str, message: &str, detail: Value, code: u8) -> ExitCode {
    let mut error = json!({ "kind": kind, "message": message });
    if !detail.is_null() {
        error["detail"] = detail;
    }
    let text = serde_json::to_string_pretty(&json!({ "error": error })).expect("plain JSON");
    println!("{text}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("usage", e.to_string().trim(), Value::Null, 2),
    };
    match execute(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&out.value, cli.global.output.as_deref()) {
                return fail("io", &e.to_string(), Value::Null, 2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Malformed(message)) => fail("malformed_input", &message, Value::Null, 2),
        Err(Failure::Invalid { kind, message, detail }) => fail(kind, &message, detail, 1),
    }
}
