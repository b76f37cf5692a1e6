use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use charvar::chebyshev::{self, Kind};
use charvar::io::{to_json_line, write_atomic};
use charvar::knots::{alexander_poly, character_curve, presentation_for, same_curve, Catalog, CatalogEntry, Presentation, TwoBridgeFraction};
use charvar::ramification::{ramify, Config, KnotContext, PrimeSelection, RamificationReport};
use charvar::torus::{abelian_intersection_torus, torus_collapse_mod_p, torus_components, TorusKnot};
use charvar::trace::{to_knot_coords, TraceEngine, Word};
use charvar::{Error, Result};

/// Largest Φ/Ψ index the table commands will build.
const MAX_INDEX: usize = 5000;

#[derive(Parser, Debug)]
#[command(name = "charvar", version, about = "SL2 character varieties of two-bridge and torus knots, and their reductions mod p")]
struct Cli {
    /// JSON file overriding k_max, degree and factoring bounds
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Catalog JSON used instead of the bundled one
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,
    /// Write stdout output to FILE (atomically) instead
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Trace of a word in a, b, A = a^-1, B = b^-1 as a polynomial in s = tr a, u = tr b, v = tr ab
    Trace {
        word: String,
        /// Substitute s = u = t and v = t^2 - x
        #[arg(long)]
        knot_coords: bool,
    },
    /// Defining polynomial P(t, x) of the character curve
    Curve {
        /// Catalog name (8_9), or fraction beta/alpha
        knot: String,
        /// Explicit two-generator relation `lhs = rhs`
        #[arg(long)]
        relation: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Alexander polynomial, normalized
    Alexander {
        knot: String,
        #[arg(long)]
        relation: Option<String>,
    },
    /// Φ_k; with --upto, the table of Φ_k and Ψ_k side by side
    Phi(TableArgs),
    /// Ψ_k; with --upto, the table of Ψ_k
    Psi(TableArgs),
    /// Components of the character variety of T(m, n), and their collapse mod p
    Torus {
        m: u64,
        n: u64,
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// Primes at which the reduction of the character curve changes
    Ramify(RamifyArgs),
    /// Show, check or analyze the knot catalog
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(clap::Args, Debug)]
struct TableArgs {
    /// Single index
    #[arg(conflicts_with = "upto", required_unless_present = "upto")]
    k: Option<usize>,
    #[arg(long)]
    upto: Option<usize>,
    /// Print the congruence P_k ≡ P_k'^(p^r) · cofactor mod p
    #[arg(long = "mod", value_name = "P", requires = "k")]
    modulus: Option<u64>,
}

#[derive(clap::Args, Debug)]
struct RamifyArgs {
    knot: String,
    /// `auto` for the candidate primes, or a list such as 3,5,7
    #[arg(long, default_value = "auto", conflicts_with = "scan_all_up_to")]
    primes: String,
    /// Every odd prime up to N, together with the candidates
    #[arg(long, value_name = "N")]
    scan_all_up_to: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for the per-prime analyses
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// The catalog as JSON
    List,
    /// Recompute every curve and compare with the stored polynomial
    Check,
    /// Ramification reports for every entry
    Ramify {
        #[arg(long, value_name = "N")]
        scan_all_up_to: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_name = "N")]
        jobs: Option<usize>,
    },
}

struct Env {
    config: Config,
    catalog: Catalog,
}

impl Env {
    fn load(cli: &Cli) -> Result<Env> {
        let config = match &cli.config {
            Some(path) => Config::from_json(&read(path)?)?,
            None => Config::default(),
        };
        let catalog = match &cli.catalog {
            Some(path) => Catalog::load(path)?,
            None => Catalog::builtin().clone(),
        };
        Ok(Env { config, catalog })
    }

    /// Name, presentation and (for catalog knots) the component count.
    fn resolve(&self, key: &str, relation: Option<&str>) -> Result<(String, Presentation, Option<usize>)> {
        if let Some(r) = relation {
            return Ok((key.to_string(), Presentation::parse(r)?, None));
        }
        if let Some(e) = self.catalog.find(key) {
            return Ok((e.name.clone(), e.presentation()?, Some(e.components)));
        }
        let f = TwoBridgeFraction::parse(key)?;
        Ok((f.to_string(), presentation_for(&f), None))
    }

    fn context(&self, key: &str) -> Result<KnotContext> {
        let (name, pres, components) = self.resolve(key, None)?;
        let curve = character_curve(&pres)?;
        KnotContext::new(&name, curve.p, alexander_poly(&pres)?, components, &self.config)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Err(Error::Invalid("--jobs must be at least 1".into()));
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| Error::Invalid(format!("thread pool: {e}")))
}

fn parse_primes(s: &str) -> Result<PrimeSelection> {
    if s.trim() == "auto" {
        return Ok(PrimeSelection::Auto);
    }
    let ps = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Invalid(format!("--primes: {t:?} is not a prime"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(PrimeSelection::List(ps))
}

fn emit(report: &RamificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json_line(&report.to_json()) + "\n",
        Format::Text => report.to_text(),
    }
}

fn table(kind: Kind, args: &TableArgs) -> Result<String> {
    let n = args.k.or(args.upto).unwrap_or(0);
    if n > MAX_INDEX {
        return Err(Error::Capacity(format!("index {n} above {MAX_INDEX}")));
    }
    if let Some(upto) = args.upto {
        let kinds: &[Kind] = if kind == Kind::Phi { &[Kind::Phi, Kind::Psi] } else { &[Kind::Psi] };
        return Ok(chebyshev::table_text(kinds, upto));
    }
    let k = args.k.expect("clap requires k or --upto");
    match args.modulus {
        Some(p) => Ok(chebyshev::phi_psi_mod_p_form(kind, k as u64, p)?.to_text() + "\n"),
        None => {
            let f = chebyshev::get(kind, k as i64)?;
            Ok(format!("{kind}_{k} = {}\n", charvar::algebra::text::format_unipoly(&f, "x")))
        }
    }
}

fn torus(m: u64, n: u64, modulus: Option<u64>) -> Result<String> {
    let k = TorusKnot::new(m, n)?;
    let characteristic = modulus.unwrap_or(0);
    let set = torus_components(&k, characteristic)?;
    let mut v = set.to_json();
    let mut inter = Vec::new();
    for (i, c) in set.components.iter().enumerate() {
        if c.coords.is_some() {
            let mut a = abelian_intersection_torus(&k, c, characteristic)?.to_json();
            a["component"] = json!(i);
            inter.push(a);
        }
    }
    v["abelian_intersections"] = Value::Array(inter);
    v["expected_count"] = json!(k.component_count());
    if let Some(p) = modulus {
        let c = torus_collapse_mod_p(&k, p)?;
        v["collapse"] = json!({
            "from": c.count_char0,
            "to": c.count_char_p,
            "expected_to": if (m * n) % p == 0 { k.collapsed_count(p) } else { k.component_count() - 1 },
            "merges": c.merges,
        });
    }
    Ok(to_json_line(&v) + "\n")
}

fn check_entry(e: &CatalogEntry) -> Result<String> {
    let curve = character_curve(&e.presentation()?)?;
    let ok = same_curve(&curve.p, &e.expected_polynomial()?);
    Ok(format!("{} {}: {}\n", e.name, e.fraction, if ok { "ok" } else { "MISMATCH" }))
}

fn catalog(env: &Env, action: Option<&CatalogAction>) -> Result<(String, bool)> {
    match action {
        None | Some(CatalogAction::List) => Ok((env.catalog.to_json() + "\n", true)),
        Some(CatalogAction::Check) => {
            let mut out = String::new();
            let mut ok = true;
            for e in &env.catalog.entries {
                let line = check_entry(e)?;
                ok &= line.ends_with("ok\n");
                out.push_str(&line);
            }
            Ok((out, ok))
        }
        Some(CatalogAction::Ramify { scan_all_up_to, format, jobs }) => {
            let sel = scan_all_up_to.map_or(PrimeSelection::Auto, PrimeSelection::ScanUpTo);
            let pool = pool(*jobs)?;
            let mut out = String::new();
            for e in &env.catalog.entries {
                let pres = e.presentation()?;
                let ctx = KnotContext::new(&e.name, character_curve(&pres)?.p, alexander_poly(&pres)?, Some(e.components), &env.config)?;
                let report = pool.install(|| ramify(&ctx, &sel))?;
                out.push_str(&emit(&report, *format));
            }
            Ok((out, true))
        }
    }
}

/// Output text and whether the command succeeded.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let env = Env::load(cli)?;
    let out = match &cli.command {
        Command::Trace { word, knot_coords } => {
            let w = Word::parse(word)?;
            let mut engine = TraceEngine::from_env()?;
            let tr = engine.trace(&w);
            engine.save()?;
            if *knot_coords {
                charvar::algebra::text::format_bipoly(&to_knot_coords(&tr), ["t", "x"]) + "\n"
            } else {
                tr.to_text() + "\n"
            }
        }
        Command::Curve { knot, relation, format } => {
            let (name, pres, _) = env.resolve(knot, relation.as_deref())?;
            let curve = character_curve(&pres)?;
            match format {
                Format::Text => curve.to_text() + "\n",
                Format::Json => to_json_line(&json!({"knot": name, "presentation": pres.to_string(), "P": curve.to_text()})) + "\n",
            }
        }
        Command::Alexander { knot, relation } => {
            let (_, pres, _) = env.resolve(knot, relation.as_deref())?;
            alexander_poly(&pres)?.to_text() + "\n"
        }
        Command::Phi(args) => table(Kind::Phi, args)?,
        Command::Psi(args) => table(Kind::Psi, args)?,
        Command::Torus { m, n, modulus } => torus(*m, *n, *modulus)?,
        Command::Ramify(args) => {
            let sel = match args.scan_all_up_to {
                Some(n) => PrimeSelection::ScanUpTo(n),
                None => parse_primes(&args.primes)?,
            };
            let ctx = env.context(&args.knot)?;
            let report = pool(args.jobs)?.install(|| ramify(&ctx, &sel))?;
            emit(&report, args.format)
        }
        Command::Catalog { action } => return catalog(&env, action.as_ref()),
    };
    Ok((out, true))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) => 3,
        Error::Modulus(_)
        | Error::Fraction(_)
        | Error::Parse { .. }
        | Error::Invalid(_)
        | Error::NotKnotGroup(_)
        | Error::Degenerate(_)
        | Error::ZeroPolynomial => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = run(&cli).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => write_atomic(path, text.as_bytes())?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| Error::Io(e.to_string()))?;
            }
        }
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("charvar: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
