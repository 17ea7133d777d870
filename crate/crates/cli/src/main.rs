use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sl2_tqft::charvar::{self, CharVarQuery};
use sl2_tqft::engine::{self, PunctureClass, SurfaceSpec};
use sl2_tqft::ff_oracle::SUPPORTED_PRIMES;
use sl2_tqft::generators;
use sl2_tqft::verify::{self, FfCheck};
use sl2_tqft::Poly;

const DEFAULT_PRIMES: [u32; 2] = [3, 5];

#[derive(Parser)]
#[command(name = "sl2-tqft", version, about = "Exact E-polynomials of parabolic SL2 representation and character varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class of a parabolic representation variety, by tube composition and by closed form.
    Rep {
        #[arg(long)]
        genus: u32,
        /// Comma-separated classes: id, negid, jplus, jminus, each with optional `*k`.
        #[arg(long, default_value = "", value_parser = parse_punctures)]
        punctures: Punctures,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Also compare against point counts over these primes.
        #[arg(long, value_delimiter = ',', value_parser = parse_prime)]
        primes: Vec<u32>,
    },
    /// Character variety E-polynomial with its reducible and irreducible strata.
    #[command(group(ArgGroup::new("query").required(true).args(["free", "abelian", "surface"])))]
    Char {
        /// Free group of rank N.
        #[arg(long, value_name = "N")]
        free: Option<u32>,
        /// Number of J+ loops added to the free group.
        #[arg(long, value_name = "S", requires = "free")]
        jplus: Option<u32>,
        /// Free abelian group of rank N.
        #[arg(long, value_name = "N")]
        abelian: Option<u32>,
        /// Surface group of genus G.
        #[arg(long, value_name = "G")]
        surface: Option<u32>,
        #[arg(long, requires = "surface", value_parser = parse_punctures)]
        punctures: Option<Punctures>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Runs the matrix, engine, character-variety and finite-field suites.
    Verify {
        #[arg(long, default_value_t = 2)]
        max_genus: u32,
        #[arg(long, default_value_t = 3)]
        max_punctures: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_prime)]
        primes: Vec<u32>,
    },
    /// Dumps the generator matrices and the identity verdicts.
    Matrices {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Uv,
    Json,
}

#[derive(Clone, Debug, Default)]
struct Punctures(Vec<PunctureClass>);

fn parse_punctures(s: &str) -> Result<Punctures, String> {
    engine::parse_punctures(s).map(Punctures).map_err(|e| e.to_string())
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.trim().parse().map_err(|_| format!("not a prime: {s}"))?;
    if p == 2 {
        return Err("characteristic 2 is excluded: Id = -Id".into());
    }
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(format!("unsupported prime {p} (expected one of 3, 5, 7)"));
    }
    Ok(p)
}

/// Applies `TQFT_MAX_PRIME`: defaults above the cap are dropped, explicit primes above it are refused.
fn capped_primes(requested: Vec<u32>, defaults: &[u32]) -> Result<Vec<u32>, String> {
    let cap = match std::env::var("TQFT_MAX_PRIME") {
        Ok(v) => v.trim().parse::<u32>().map_err(|_| format!("TQFT_MAX_PRIME is not a number: {v}"))?,
        Err(_) => u32::MAX,
    };
    if requested.is_empty() {
        return Ok(defaults.iter().copied().filter(|&p| p <= cap).collect());
    }
    match requested.iter().find(|&&p| p > cap) {
        Some(p) => Err(format!("prime {p} exceeds TQFT_MAX_PRIME={cap}")),
        None => Ok(requested),
    }
}

fn render(p: &Poly, format: Format) -> String {
    match format {
        Format::Uv => p.to_bivariate().to_string(),
        _ => p.to_string(),
    }
}

fn cmd_rep(genus: u32, punctures: Vec<PunctureClass>, format: Format, primes: Vec<u32>) -> Result<bool, String> {
    let primes = capped_primes(primes, &[])?;
    let spec = SurfaceSpec::new(genus, punctures);
    let check = verify::EngineCheck::run(&spec);
    let engine = check.engine.clone().map_err(|e| format!("engine: {e}"))?;
    let closed = if spec.is_validated() {
        Some(check.closed_form.clone().map_err(|e| format!("closed form: {e}"))?)
    } else {
        None
    };
    let ff: Vec<FfCheck> = primes
        .iter()
        .map(|&p| FfCheck::against(&engine, &spec, p).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let agree = closed.as_ref().is_none_or(|c| c == &engine) && ff.iter().all(|c| c.agree);
    let verdict = match (&closed, agree) {
        (_, false) => "DISAGREE",
        (None, true) => "UNVALIDATED",
        (Some(_), true) => "AGREE",
    };

    if format == Format::Json {
        let names: Vec<&str> = spec.punctures.iter().map(|p| p.token()).collect();
        let out = json!({
            "spec": { "genus": spec.genus, "punctures": names, "validated": spec.is_validated() },
            "engine": engine.to_string(),
            "closed_form": closed.as_ref().map(ToString::to_string),
            "agree": agree,
            "ff_checks": ff,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        return Ok(agree);
    }

    println!("spec:        {spec}");
    if !spec.is_validated() {
        println!("note:        genus 0 is unvalidated by the closed form");
    }
    println!("engine:      {}", render(&engine, format));
    match &closed {
        Some(c) => println!("closed form: {}", render(c, format)),
        None => println!("closed form: none"),
    }
    for c in &ff {
        println!(
            "p={}: polynomial {}, count {} {}",
            c.p,
            c.expected,
            c.counted,
            if c.agree { "AGREE" } else { "DISAGREE" }
        );
    }
    println!("{verdict}");
    Ok(agree)
}

fn char_query(
    free: Option<u32>,
    jplus: Option<u32>,
    abelian: Option<u32>,
    surface: Option<u32>,
    punctures: Option<Punctures>,
) -> CharVarQuery {
    if let Some(n) = free {
        return CharVarQuery::FreeParabolic(n, jplus.unwrap_or(0)).canonical();
    }
    if let Some(n) = abelian {
        return CharVarQuery::Abelian(n);
    }
    let spec = SurfaceSpec::new(surface.unwrap_or(0), punctures.unwrap_or_default().0);
    CharVarQuery::ParabolicSurface {
        genus: spec.genus,
        r_plus: spec.r_plus() as u32,
        r_minus: spec.r_minus() as u32,
        t: spec.t() as u32,
    }
    .canonical()
}

fn cmd_char(query: CharVarQuery, format: Format) -> Result<bool, String> {
    query.validate().map_err(|e| e.to_string())?;
    let report = charvar::report(&query).map_err(|e| e.to_string())?;
    let rep = charvar::e_rep(&query).map_err(|e| e.to_string())?;
    if format == Format::Json {
        let out = json!({
            "query": query.to_string(),
            "e_char": report.e_char.to_string(),
            "reducible": report.reducible.to_string(),
            "irreducible": report.irreducible.to_string(),
            "e_rep": rep.as_ref().map(ToString::to_string),
            "consistent": report.consistent,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        return Ok(report.consistent);
    }
    println!("query:       {query}");
    println!("E(X):        {}", render(&report.e_char, format));
    println!("reducible:   {}", render(&report.reducible, format));
    println!("irreducible: {}", render(&report.irreducible, format));
    if let Some(r) = rep {
        println!("E(Rep):      {}", render(&r, format));
    }
    println!("consistency: {}", if report.consistent { "PASS" } else { "FAIL" });
    Ok(report.consistent)
}

fn cmd_verify(max_genus: u32, max_punctures: usize, primes: Vec<u32>) -> Result<bool, String> {
    let primes = capped_primes(primes, &DEFAULT_PRIMES)?;
    let outcomes = verify::run_all(max_genus, max_punctures, &primes);
    let width = outcomes.iter().map(|o| o.item.len()).max().unwrap_or(0);
    for o in &outcomes {
        let line = format!(
            "{}  {:<12}  {:<width$}  {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.suite,
            o.item,
            o.detail
        );
        println!("{}", line.trim_end());
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("{passed} of {} checks passed", outcomes.len());
    Ok(passed == outcomes.len())
}

fn cmd_matrices(format: Format) -> bool {
    let checks = generators::identity_checks();
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&generators::matrices_json()).expect("serializable"));
    } else {
        for (name, m) in generators::named_matrices() {
            println!("{name}:");
            for row in m.to_strings() {
                println!("  [{}]", row.join(", "));
            }
        }
        for c in &checks {
            println!("{c}");
        }
    }
    checks.iter().all(|c| c.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rep { genus, punctures, format, primes } => cmd_rep(genus, punctures.0, format, primes),
        Command::Char { free, jplus, abelian, surface, punctures, format } => {
            cmd_char(char_query(free, jplus, abelian, surface, punctures), format)
        }
        Command::Verify { max_genus, max_punctures, primes } => cmd_verify(max_genus, max_punctures, primes),
        Command::Matrices { format } => Ok(cmd_matrices(format)),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
