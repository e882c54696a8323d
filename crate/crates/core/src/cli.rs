//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::codegen::{self, CodeParams};
use crate::error::Error;
use crate::essdecode::{self, EssDecoder};
use crate::essrank::{self, EssCode, ScanConfig};
use crate::gabidulin;
use crate::galois::{BaseField, BasisKind, ExtField, Fq, LBasis};
use crate::io::{self, split_top, ScalarIo};
use crate::orbits;
use crate::polyring::{self, HomogPoly};

/// Exit status for malformed or incomplete command lines.
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "esscodes", version, about = "Essential-rank codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Upper limit on the size of exhaustive enumerations.
    #[arg(long, global = true, env = "ESSCODES_BUDGET", default_value_t = 10_000_000)]
    budget: u128,
    /// Worker threads for scans and simulations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    /// JSON object with any of the keys field, ext, d, rho, alpha; flags win.
    #[arg(long)]
    params: Option<PathBuf>,
    /// Base field, "p" or "p^m:c0,...,cm".
    #[arg(long)]
    field: Option<String>,
    /// Extension, "n", "n:c0,...,cn" or "n:c0,...,cn:s".
    #[arg(long)]
    ext: Option<String>,
    /// Degree of the polynomials.
    #[arg(long)]
    d: Option<usize>,
    /// Designed minimum essential rank.
    #[arg(long)]
    rho: Option<usize>,
    /// "power", "normal", or n elements of L separated by ';'.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Closed,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generator matrix and parameters of C_rho^{n,d}(alpha).
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Essential rank and essential variables of a polynomial.
    Rank {
        #[arg(long)]
        field: String,
        /// Number of variables; needed for the text format.
        #[arg(long)]
        n: Option<usize>,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "poly_file",
            required_unless_present = "poly_file"
        )]
        poly: Option<String>,
        #[arg(long)]
        poly_file: Option<PathBuf>,
        /// Also run the exhaustive subspace search.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Codeword for a message in F^k.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated scalars.
        #[arg(long, allow_hyphen_values = true)]
        message: String,
    },
    /// Corrects a received polynomial.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Polynomial in text or JSON form.
        #[arg(long)]
        received: PathBuf,
    },
    /// Exhaustive minimum essential-rank distance.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
        /// Generator matrix (JSON or CSV) instead of a constructed code.
        #[arg(long)]
        generator: Option<PathBuf>,
        /// Number of variables, with --generator.
        #[arg(long)]
        n: Option<usize>,
        /// Message indices per work unit.
        #[arg(long, default_value_t = 1 << 14)]
        chunk: u128,
    },
    /// Dimension bounds for distance r.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Shift orbits of d-multisets in Z/n with spread below k.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Symmetric-matrix description against the catalecticant image, d = 2.
    VerifySymmetric {
        #[arg(long)]
        field: String,
        #[arg(long)]
        ext: String,
        /// Checks every admissible value when omitted.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Decoding trials with random errors.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        error_rank: usize,
    },
    /// Codimension against the orbit count; every rho when --rho is omitted.
    Conjecture {
        #[command(flatten)]
        code: CodeArgs,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

struct Report {
    body: String,
    code: i32,
    note: Option<String>,
}

impl Report {
    fn json(v: &Value) -> Self {
        Report {
            body: render(v),
            code: 0,
            note: None,
        }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Runs the command line `args` (program name first) and returns the exit
/// code: 0 on success, 1 on domain errors, 2 on decoding failures, 3 when a
/// budget is exceeded and [`EXIT_USAGE`] for malformed invocations.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = out.write_all(text.as_bytes());
                0
            } else {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => usage("--jobs must be positive"),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Failure::Lib(Error::domain(e.to_string()))),
        },
        None => execute(&cli),
    };
    match result {
        Ok(report) => {
            if let Some(note) = &report.note {
                let _ = writeln!(err, "{note}");
            }
            let written = match &cli.out {
                Some(path) => fs::write(path, &report.body).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(report.body.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => report.code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    1
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Construct { code, format } => construct(code, *format),
        Command::Rank {
            field,
            n,
            poly,
            poly_file,
            bruteforce,
        } => rank(
            field,
            *n,
            poly.as_deref(),
            poly_file.as_deref(),
            *bruteforce,
            cli.budget,
        ),
        Command::Encode { code, message } => encode(code, message),
        Command::Decode { code, received } => decode(code, received),
        Command::Mindist {
            code,
            generator,
            n,
            chunk,
        } => mindist(code, generator.as_deref(), *n, *chunk, cli),
        Command::Bounds { n, d, r } => bounds(*n, *d, *r),
        Command::Orbits { n, d, k, method } => orbit_counts(*n, *d, *k, *method, cli.budget),
        Command::VerifySymmetric { field, ext, ell, alpha } => verify_symmetric(field, ext, *ell, alpha.as_deref()),
        Command::Simulate {
            code,
            trials,
            seed,
            error_rank,
        } => simulate(code, *trials, *seed, *error_rank),
        Command::Conjecture { code } => conjecture(code, cli.budget),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Lib(Error::domain(format!("{}: {e}", path.display()))))
}

fn text_of(m: &Map<String, Value>, key: &str) -> CliResult<Option<String>> {
    match m.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(Value::Number(x)) => Ok(Some(x.to_string())),
        Some(_) => usage(format!("parameter {key:?} must be a string")),
    }
}

fn usize_of(m: &Map<String, Value>, key: &str) -> CliResult<Option<usize>> {
    match m.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => match v.as_u64() {
            Some(x) => Ok(Some(x as usize)),
            None => usage(format!("parameter {key:?} must be a nonnegative integer")),
        },
    }
}

fn required<T>(v: Option<T>, key: &str) -> CliResult<T> {
    match v {
        Some(x) => Ok(x),
        None => usage(format!("missing --{key}")),
    }
}

struct CodeSetup {
    ext: ExtField,
    d: usize,
    rho: Option<usize>,
    alpha: LBasis,
}

impl CodeArgs {
    fn merged(&self) -> CliResult<Map<String, Value>> {
        let mut m = match &self.params {
            Some(p) => match serde_json::from_str::<Value>(&read(p)?) {
                Ok(Value::Object(m)) => m,
                Ok(_) => return usage("the parameter file must hold a JSON object"),
                Err(e) => return Err(Error::parse(e.to_string()).into()),
            },
            None => Map::new(),
        };
        let flags = [
            ("field", self.field.clone().map(Value::from)),
            ("ext", self.ext.clone().map(Value::from)),
            ("d", self.d.map(Value::from)),
            ("rho", self.rho.map(Value::from)),
            ("alpha", self.alpha.clone().map(Value::from)),
        ];
        for (key, v) in flags {
            if let Some(v) = v {
                m.insert(key.to_string(), v);
            }
        }
        Ok(m)
    }

    fn base_field(&self) -> CliResult<(BaseField, Map<String, Value>)> {
        let m = self.merged()?;
        let k = io::parse_field_spec(&required(text_of(&m, "field")?, "field")?)?;
        Ok((k, m))
    }

    fn setup(&self) -> CliResult<CodeSetup> {
        let (k, m) = self.base_field()?;
        let d = required(usize_of(&m, "d")?, "d")?;
        essrank::require_char(&k, d)?;
        let ext = io::parse_ext_spec(&k, &required(text_of(&m, "ext")?, "ext")?)?;
        let rho = usize_of(&m, "rho")?;
        let alpha = parse_alpha(&ext, m.get("alpha"))?;
        Ok(CodeSetup { ext, d, rho, alpha })
    }

    fn params(&self) -> CliResult<CodeParams> {
        let s = self.setup()?;
        let rho = required(s.rho, "rho")?;
        Ok(CodeParams::equal(&s.ext, s.d, rho, s.alpha)?)
    }
}

fn parse_alpha(ext: &ExtField, v: Option<&Value>) -> CliResult<LBasis> {
    let elems = match v {
        None | Some(Value::Null) => return Ok(LBasis::power(ext)),
        Some(Value::String(s)) => match s.trim() {
            "power" => return Ok(LBasis::power(ext)),
            "normal" => return Ok(LBasis::normal(ext)?),
            list => split_top(list, ';')
                .iter()
                .map(|x| ext.parse_scalar(x))
                .collect::<crate::Result<Vec<_>>>()?,
        },
        Some(Value::Array(items)) => items
            .iter()
            .map(|x| ext.scalar_from_json(x))
            .collect::<crate::Result<Vec<_>>>()?,
        Some(_) => return usage("alpha must be a string or an array of elements"),
    };
    Ok(LBasis::from_elements(ext, elems, BasisKind::Arbitrary)?)
}

fn parse_poly_input(k: &BaseField, n: Option<usize>, d: Option<usize>, text: &str) -> CliResult<HomogPoly<Fq>> {
    let f = if text.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        polyring::poly_from_json(k, &v)?
    } else {
        polyring::parse_poly(k, required(n, "n")?, d, text)?
    };
    if let Some(n) = n.filter(|&n| n != f.n()) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: f.n(),
        }
        .into());
    }
    if let Some(d) = d.filter(|&d| d != f.d()) {
        return Err(Error::domain(format!("expected a polynomial of degree {d}, got {}", f.d())).into());
    }
    Ok(f)
}

fn poly_report(k: &BaseField, f: &HomogPoly<Fq>) -> Value {
    json!({"json": polyring::poly_to_json(k, f), "text": polyring::format_poly(k, f)})
}

fn construct(args: &CodeArgs, format: Format) -> CliResult<Report> {
    let params = args.params()?;
    let code = codegen::construct_code(&params)?;
    let k = params.ext().base();
    let g = code.generator_matrix();
    if format == Format::Csv {
        return Ok(Report {
            body: io::matrix_to_csv(k, &g),
            code: 0,
            note: None,
        });
    }
    let (n, d, rho) = (params.n(), params.d(), params.rho());
    let basis: Vec<String> = code.basis().iter().map(|f| polyring::format_poly(k, f)).collect();
    Ok(Report::json(&json!({
        "n": n,
        "d": d,
        "rho": rho,
        "k": code.k(),
        "codim": code.codim(),
        "s_lower": essrank::dim_lower_bound_s(n, d, rho)?,
        "singleton_like": essrank::singleton_like_bound(n, d, rho)?,
        "generator": io::matrix_to_json(k, &g),
        "basis": basis,
    })))
}

fn rank(
    field: &str,
    n: Option<usize>,
    poly: Option<&str>,
    poly_file: Option<&Path>,
    bruteforce: bool,
    budget: u128,
) -> CliResult<Report> {
    let k = io::parse_field_spec(field)?;
    let text = match (poly, poly_file) {
        (Some(t), _) => t.to_string(),
        (None, Some(p)) => read(p)?,
        (None, None) => return usage("give --poly or --poly-file"),
    };
    let f = parse_poly_input(&k, n, None, &text)?;
    essrank::require_char(&k, f.d())?;
    let vars = essrank::ess_variables(&k, &f)?;
    let forms: Vec<String> = vars.forms(&k).iter().map(|g| polyring::format_poly(&k, g)).collect();
    let mut v = json!({
        "n": f.n(),
        "d": f.d(),
        "ess_rank": essrank::ess_rank(&k, &f)?,
        "ess_variables": forms,
    });
    if bruteforce {
        v["ess_rank_bruteforce"] = json!(essrank::ess_rank_bruteforce(&k, &f, budget)?);
    }
    Ok(Report::json(&v))
}

fn encode(args: &CodeArgs, message: &str) -> CliResult<Report> {
    let params = args.params()?;
    let code = codegen::construct_code(&params)?;
    let k = params.ext().base();
    let msg = split_top(message.trim(), ',')
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| k.parse_scalar(s))
        .collect::<crate::Result<Vec<_>>>()?;
    let f = code.encode(&msg)?;
    let msg_json: Vec<Value> = msg.iter().map(|x| k.scalar_to_json(x)).collect();
    Ok(Report::json(&json!({
        "k": code.k(),
        "message": msg_json,
        "codeword": polyring::poly_to_json(k, &f),
        "text": polyring::format_poly(k, &f),
    })))
}

fn decode(args: &CodeArgs, received: &Path) -> CliResult<Report> {
    let params = args.params()?;
    let k = params.ext().base().clone();
    let f = parse_poly_input(&k, Some(params.n()), Some(params.d()), &read(received)?)?;
    let decoder = EssDecoder::new(&params)?;
    match decoder.decode(&f) {
        Ok(dec) => {
            let status = if dec.error.is_zero() { "clean" } else { "corrected" };
            Ok(Report::json(&json!({
                "status": status,
                "codeword": poly_report(&k, &dec.codeword),
                "error": poly_report(&k, &dec.error),
                "error_ess_rank": dec.error_ess_rank,
            })))
        }
        Err(e) if e.exit_code() == 2 => Ok(Report {
            body: render(&json!({"status": "failure", "reason": e.to_string()})),
            code: 2,
            note: Some(format!("error: {e}")),
        }),
        Err(e) => Err(e.into()),
    }
}

fn message_of(k: &BaseField, len: usize, mut idx: u128) -> Vec<Fq> {
    let q = k.size() as u128;
    (0..len)
        .map(|_| {
            let digit = (idx % q) as u32;
            idx /= q;
            k.element(digit)
        })
        .collect()
}

fn mindist(args: &CodeArgs, generator: Option<&Path>, n: Option<usize>, chunk: u128, cli: &Cli) -> CliResult<Report> {
    let code = match generator {
        Some(path) => {
            let (k, m) = args.base_field()?;
            let d = required(usize_of(&m, "d")?, "d")?;
            essrank::require_char(&k, d)?;
            let g = io::parse_matrix(&k, &read(path)?)?;
            EssCode::from_generator(&k, required(n, "n")?, d, &g, None)?
        }
        None => codegen::construct_code(&args.params()?)?,
    };
    if chunk == 0 {
        return usage("--chunk must be positive");
    }
    let cfg = ScanConfig {
        budget: cli.budget,
        chunk,
        jobs: cli.jobs,
    };
    let scan = essrank::code_min_distance_bruteforce(&code, &cfg)?;
    let k = code.field();
    let witness = scan.witness.map(|i| {
        polyring::format_poly(
            k,
            &code.encode(&message_of(k, code.k(), i)).expect("message length is k"),
        )
    });
    Ok(Report::json(&json!({
        "k": code.k(),
        "min_distance": scan.min_distance,
        "codewords_scanned": scan.scanned,
        "witness": witness,
        "witness_index": scan.witness,
        "weight_distribution": scan.weight_distribution,
    })))
}

fn bounds(n: usize, d: usize, r: usize) -> CliResult<Report> {
    let schmidt = if d == 2 {
        json!(essrank::schmidt_bound(n, r)?)
    } else {
        Value::Null
    };
    Ok(Report::json(&json!({
        "n": n,
        "d": d,
        "r": r,
        "singleton_like": essrank::singleton_like_bound(n, d, r)?,
        "inherited": essrank::inherited_bound(n, d, r)?,
        "schmidt": schmidt,
        "s_lower": essrank::dim_lower_bound_s(n, d, r)?,
    })))
}

fn orbit_counts(n: usize, d: usize, k: usize, method: Method, budget: u128) -> CliResult<Report> {
    let v = match method {
        Method::Brute => {
            json!({"count": orbits::orbit_count_bruteforce(n, d, k, budget)?, "method": "brute", "agreement": null})
        }
        Method::Closed => {
            json!({"count": orbits::orbit_count_closed(n, d, k)?, "method": "closed", "agreement": null})
        }
        Method::Both => {
            let brute = orbits::orbit_count_bruteforce(n, d, k, budget)?;
            let closed = orbits::orbit_count_closed(n, d, k)?;
            json!({"count": brute, "method": "both", "agreement": brute == closed, "closed": closed})
        }
    };
    let agree = v["agreement"].as_bool().unwrap_or(true);
    let mut report = Report::json(&v);
    if !agree {
        report.code = 1;
        report.note = Some("error: brute-force and closed-form counts differ".into());
    }
    Ok(report)
}

fn verify_symmetric(field: &str, ext: &str, ell: Option<usize>, alpha: Option<&str>) -> CliResult<Report> {
    let k = io::parse_field_spec(field)?;
    essrank::require_char(&k, 2)?;
    let ext = io::parse_ext_spec(&k, ext)?;
    let alpha = parse_alpha(&ext, alpha.map(Value::from).as_ref())?;
    let n = ext.n();
    if n < 2 {
        return Err(Error::domain("the extension degree must be at least 2").into());
    }
    let ells: Vec<usize> = match ell {
        Some(l) => vec![l],
        None => (0..=(n - 2) / 2).collect(),
    };
    let checks = ells
        .iter()
        .map(|&l| gabidulin::verify_symmetric(&ext, &alpha, l))
        .collect::<crate::Result<Vec<_>>>()?;
    let equal = checks.iter().all(|c| c.equal && c.dimension == c.expected_dimension);
    let v = if ell.is_some() {
        serde_json::to_value(&checks[0])
    } else {
        serde_json::to_value(json!({"n": n, "equal": equal, "checks": checks}))
    }
    .expect("reports serialize");
    let mut report = Report::json(&v);
    if !equal {
        report.code = 1;
        report.note = Some("error: the two descriptions differ".into());
    }
    Ok(report)
}

fn simulate(args: &CodeArgs, trials: u64, seed: u64, error_rank: usize) -> CliResult<Report> {
    let params = args.params()?;
    let r = essdecode::simulate(&params, trials, error_rank, seed)?;
    let mut v = serde_json::to_value(&r).expect("reports serialize");
    v["seed"] = json!(seed);
    v["error_rank"] = json!(error_rank);
    Ok(Report::json(&v))
}

fn conjecture(args: &CodeArgs, budget: u128) -> CliResult<Report> {
    let s = args.setup()?;
    let rhos: Vec<usize> = match s.rho {
        Some(r) => vec![r],
        None => (1..=s.ext.n()).collect(),
    };
    let reports = rhos
        .iter()
        .map(|&rho| {
            let params = CodeParams::equal(&s.ext, s.d, rho, s.alpha.clone())?;
            codegen::codim_conjecture_report(&params, budget)
        })
        .collect::<crate::Result<Vec<_>>>()?;
    let v = if s.rho.is_some() {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(json!({ "reports": reports }))
    }
    .expect("reports serialize");
    Ok(Report::json(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["esscodes"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_usage_errors() {
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["--version"]).0, 0);
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["bounds", "--n", "x", "--d", "2", "--r", "1"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["construct", "--field", "5", "--d", "3", "--rho", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--ext"));
    }

    #[test]
    fn domain_and_budget_errors() {
        assert_eq!(call(&["bounds", "--n", "3", "--d", "2", "--r", "4"]).0, 1);
        assert_eq!(
            call(&["construct", "--field", "3", "--ext", "2", "--d", "3", "--rho", "2"]).0,
            1
        );
        assert_eq!(
            call(&["--budget", "2", "orbits", "--n", "7", "--d", "2", "--k", "3"]).0,
            3
        );
    }

    #[test]
    fn bounds_report() {
        let (code, out, _) = call(&["bounds", "--n", "4", "--d", "2", "--r", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["singleton_like"], 9);
        assert_eq!(v["inherited"], 12);
        assert_eq!(v["schmidt"], 8);
        let (_, out, _) = call(&["bounds", "--n", "4", "--d", "3", "--r", "2"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["schmidt"].is_null());
    }

    #[test]
    fn alpha_variants() {
        let k = BaseField::prime(5).unwrap();
        let ext = io::parse_ext_spec(&k, "4:2,4,4,0,1").unwrap();
        let listed = Value::from("[1];[0,1];[0,0,1];[0,0,0,1]");
        assert_eq!(parse_alpha(&ext, Some(&listed)).ok().unwrap(), LBasis::power(&ext));
        assert_eq!(parse_alpha(&ext, None).ok().unwrap(), LBasis::power(&ext));
        assert!(parse_alpha(&ext, Some(&Value::from("[1];[1];[0,0,1];[0,0,0,1]"))).is_err());
        assert!(parse_alpha(&ext, Some(&Value::from("normal"))).is_ok());
    }

    #[test]
    fn message_digits() {
        let k = BaseField::prime(5).unwrap();
        let m = message_of(&k, 3, 2 + 5 * 4);
        assert_eq!(m, vec![k.from_i64(2), k.from_i64(4), k.zero()]);
    }
}
