//! Command-line front end for the level-7 Kummer threefold verifier.
//!
//! Subcommands: `verify` (the per-prime trace sweep), `eta` (q-expansions),
//! `hodge`, `fibers`, `count`, `identities`.  Exit status: 0 on success,
//! 1 on a verification mismatch or runtime failure, 2 on usage errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use kummer7_core::curves::EllipticCurve;
use kummer7_core::fibration;
use kummer7_core::finitefield::{PrimeField, TABLE_GUARD};
use kummer7_core::kummer::{self, CountMethod, SweepOutcome};
use kummer7_core::poly::IntPoly;
use kummer7_core::qseries::{
    hauptmodul_r, hauptmodul_u, j_expansion, verify_hauptmodul_identity, weight2_level14_form,
    EtaQuotient,
};

const B_P_SOURCE: &str = "b_p source: eta(q)eta(q^2)eta(q^7)eta(q^14) q-expansion \
(weight-2 level-14 newform); the n_p check validates the counting decomposition \
plus a_p modularity";

#[derive(Parser)]
#[command(
    name = "kummer7",
    version,
    about = "Exact modularity checks for the Kummer Calabi-Yau threefold over the level-7 modular surface"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify predicted vs counted point totals for every good prime in a range
    Verify(VerifyArgs),
    /// Expand an eta quotient "delta:exponent[,delta:exponent]*" to a q-series
    Eta {
        /// e.g. "1:3,7:3"
        quotient: String,
        /// number of coefficients from the leading term
        terms: usize,
    },
    /// Hodge numbers and eigenspace ranks of the Kummer threefold
    Hodge,
    /// Singular-fibre configuration of the level-7 surface
    Fibers,
    /// Count points over F_p on one constituent
    Count {
        /// the prime p
        prime: u64,
        /// which variety to count
        target: CountTarget,
        /// elliptic curve roots "e1,e2,e3" (rational entries "n" or "n/d")
        #[arg(long, default_value = "0,1,-1")]
        curve: String,
        /// counting method for the affine chart
        #[arg(long, default_value_t = CountMethod::Factored)]
        method: CountMethod,
    },
    /// Check the hauptmodul identities mapping u and r to the j-function
    Identities {
        /// number of q-series coefficients to compare
        #[arg(default_value_t = 30)]
        terms: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// lower end of the prime range (at least 5)
    #[arg(long, default_value_t = 5)]
    pmin: u64,
    /// upper end of the prime range
    #[arg(long)]
    pmax: u64,
    /// elliptic curve roots "e1,e2,e3"
    #[arg(long, default_value = "0,1,-1")]
    curve: String,
    /// counting method for the affine chart
    #[arg(long, default_value_t = CountMethod::Factored)]
    method: CountMethod,
    /// report format
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,
    /// write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// size of the worker pool (defaults to the number of cores)
    #[arg(long)]
    threads: Option<usize>,
    /// omit timing data so reports are byte-identical across runs
    #[arg(long)]
    no_timing: bool,
    /// corrupt the b_p fed to the counting side at one prime, "p:value"
    /// (repeatable; negative-testing aid, must surface as a mismatch)
    #[arg(long = "override-bp", value_name = "P:VALUE")]
    override_bp: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountTarget {
    /// the elliptic surface (count and trace a_p)
    Surface,
    /// the elliptic curve E (count and trace c_p)
    Curve,
    /// the Kummer threefold (all seven terms and the total)
    Kummer,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

enum CliError {
    /// Bad arguments: exit 2.
    Usage(String),
    /// Failure while computing: exit 1.
    Runtime(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn runtime<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Runtime(e.to_string())
}

fn main() -> ExitCode {
    // restore the default SIGPIPE disposition so that piping a report into
    // `head` terminates quietly instead of panicking on a closed stdout
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Eta { quotient, terms } => cmd_eta(&quotient, terms),
        Command::Hodge => cmd_hodge(),
        Command::Fibers => cmd_fibers(),
        Command::Count { prime, target, curve, method } => cmd_count(prime, target, &curve, method),
        Command::Identities { terms } => cmd_identities(terms),
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let curve = EllipticCurve::parse(&args.curve).map_err(usage)?;
    if args.pmin < 5 {
        return Err(CliError::Usage(format!("--pmin must be at least 5, got {}", args.pmin)));
    }
    if args.pmin > args.pmax {
        return Err(CliError::Usage(format!(
            "--pmin {} exceeds --pmax {}",
            args.pmin, args.pmax
        )));
    }
    if args.pmax >= TABLE_GUARD {
        return Err(CliError::Usage(format!(
            "--pmax {} is not below the field-size guard {TABLE_GUARD}",
            args.pmax
        )));
    }
    let overrides = parse_overrides(&args.override_bp)?;

    let started = Instant::now();
    let sweep = || kummer::verify_range(&curve, args.pmin, args.pmax, args.method, &overrides);
    let outcome = match args.threads {
        None => sweep(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(runtime)?
            .install(sweep),
    }
    .map_err(runtime)?;
    let elapsed_ms = started.elapsed().as_millis();

    let report = match args.format {
        ReportFormat::Csv => csv_report(&outcome, args.no_timing, elapsed_ms),
        ReportFormat::Json => json_report(&args, &curve, &outcome, args.no_timing, elapsed_ms),
    };
    match &args.output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| runtime(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{report}"),
    }
    if outcome.mismatches() == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn parse_overrides(specs: &[String]) -> Result<BTreeMap<u64, i64>, CliError> {
    let mut map = BTreeMap::new();
    for spec in specs {
        let (p, v) = spec
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("--override-bp wants P:VALUE, got {spec:?}")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime in --override-bp {spec:?}")))?;
        let v: i64 = v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad value in --override-bp {spec:?}")))?;
        map.insert(p, v);
    }
    Ok(map)
}

fn csv_report(outcome: &SweepOutcome, no_timing: bool, elapsed_ms: u128) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {B_P_SOURCE}");
    let _ = writeln!(out, "p,a_p_eta,a_p_count,b_p,c_p,n_counted,n_predicted,match,a_match");
    for r in &outcome.records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.p, r.a_p_eta, r.a_p_count, r.b_p, r.c_p, r.n_counted, r.n_predicted, r.n_match,
            r.a_match
        );
    }
    let _ = writeln!(
        out,
        "# summary: checked={} skipped={} mismatches={}",
        outcome.records.len(),
        outcome.skipped.len(),
        outcome.mismatches()
    );
    for bad in &outcome.skipped {
        let _ = writeln!(out, "# skipped: {bad}");
    }
    if !no_timing {
        let _ = writeln!(out, "# elapsed_ms: {elapsed_ms}");
    }
    out
}

fn json_report(
    args: &VerifyArgs,
    curve: &EllipticCurve,
    outcome: &SweepOutcome,
    no_timing: bool,
    elapsed_ms: u128,
) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"b_p_source\": \"{}\",", json_escape(B_P_SOURCE));
    let _ = writeln!(out, "  \"curve\": \"{curve}\",");
    let _ = writeln!(out, "  \"method\": \"{}\",", args.method);
    out.push_str("  \"records\": [\n");
    for (i, r) in outcome.records.iter().enumerate() {
        let _ = write!(
            out,
            "    {{\"p\": {}, \"a_p_eta\": {}, \"a_p_count\": {}, \"b_p\": {}, \"c_p\": {}, \
             \"n_counted\": {}, \"n_predicted\": {}, \"match\": {}, \"a_match\": {}",
            r.p, r.a_p_eta, r.a_p_count, r.b_p, r.c_p, r.n_counted, r.n_predicted, r.n_match,
            r.a_match
        );
        if !no_timing {
            let _ = write!(out, ", \"elapsed_us\": {}", r.elapsed.as_micros());
        }
        out.push('}');
        out.push_str(if i + 1 < outcome.records.len() { ",\n" } else { "\n" });
    }
    out.push_str("  ],\n");
    out.push_str("  \"summary\": {");
    let _ = write!(
        out,
        "\"checked\": {}, \"skipped\": [",
        outcome.records.len()
    );
    for (i, bad) in outcome.skipped.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(
            out,
            "{{\"p\": {}, \"reason\": \"{}\"}}",
            bad.p,
            json_escape(&bad.reason.to_string())
        );
    }
    let _ = write!(out, "], \"mismatches\": {}", outcome.mismatches());
    if !no_timing {
        let _ = write!(out, ", \"elapsed_ms\": {elapsed_ms}");
    }
    out.push_str("}\n}\n");
    out
}

fn json_escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' => "\\\"".chars().collect::<Vec<_>>(),
            '\\' => "\\\\".chars().collect(),
            '\n' => "\\n".chars().collect(),
            c => vec![c],
        })
        .collect()
}

// ---------------------------------------------------------------------------
// the small calculators
// ---------------------------------------------------------------------------

fn cmd_eta(quotient: &str, terms: usize) -> Result<ExitCode, CliError> {
    let quotient = EtaQuotient::parse(quotient).map_err(usage)?;
    let series = quotient.expand(terms).map_err(usage)?;
    println!("{series}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_hodge() -> Result<ExitCode, CliError> {
    let fibers = fibration::fiber_configuration().map_err(runtime)?;
    let (n_plus, n_minus) =
        kummer::ns_eigenspace_ranks(&fibers, fibration::PICARD_RANK).map_err(runtime)?;
    let (c_d, g_d, e_d) = kummer::fixed_locus_invariants(1, 1);
    let inv = kummer::hodge_numbers(n_plus, n_minus, c_d, g_d).map_err(runtime)?;
    println!("n_plus = {}, n_minus = {}", inv.n_plus, inv.n_minus);
    println!("fixed curve: c(D) = {c_d}, g(D) = {g_d}, e(D) = {e_d}");
    println!("h11 = {}, h12 = {}, e(X) = {}", inv.h11, inv.h12, inv.euler);
    let b = inv.betti();
    println!(
        "betti = ({}, {}, {}, {}, {}, {}, {})",
        b[0], b[1], b[2], b[3], b[4], b[5], b[6]
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_fibers() -> Result<ExitCode, CliError> {
    let config = fibration::fiber_configuration().map_err(runtime)?;
    for fiber in config.fibers() {
        println!("{fiber}");
    }
    println!("total fibre index: {}", config.total_index());
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(
    prime: u64,
    target: CountTarget,
    curve: &str,
    method: CountMethod,
) -> Result<ExitCode, CliError> {
    let curve = EllipticCurve::parse(curve).map_err(usage)?;
    let field = PrimeField::new(prime)
        .and_then(PrimeField::build_legendre_table)
        .map_err(runtime)?;
    match target {
        CountTarget::Surface => {
            let c = fibration::count_surface(&field).map_err(runtime)?;
            println!("#Y(F_{prime}) = {}, a_p = {}", c.points, c.a_p);
        }
        CountTarget::Curve => {
            let t = curve.count_points(&field).map_err(runtime)?;
            println!("#E(F_{prime}) = {}, c_p = {}", t.count, t.c_p);
        }
        CountTarget::Kummer => {
            let g2b = weight2_level14_form()
                .expand(prime as usize)
                .map_err(runtime)?;
            let b_p = g2b
                .coefficient(prime as i64)
                .map_err(runtime)?
                .to_i64()
                .ok_or_else(|| runtime("b_p does not fit i64"))?;
            let (n, terms) = kummer::count_kummer(&field, &curve, b_p, method).map_err(runtime)?;
            println!("p = {prime}, b_p = {b_p} (eta), c_p = {}", -terms.f);
            println!(
                "X' = {}, X_inf = {}, A = {}, B_surf = {}, C = {}, F = {}, V-D = {}",
                terms.x_prime,
                terms.x_infinity,
                terms.a,
                terms.b_surf,
                terms.c,
                terms.f,
                terms.v_minus_d
            );
            println!("n_counted = {n}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_identities(terms: usize) -> Result<ExitCode, CliError> {
    if terms == 0 {
        return Err(CliError::Usage("terms must be at least 1".into()));
    }
    let slack = terms + 6;
    let j = j_expansion(slack).map_err(runtime)?;
    let u = hauptmodul_u().expand(slack).map_err(runtime)?;
    let r = hauptmodul_r().expand(slack).map_err(runtime)?;

    // (7^4 r^2 + 7^2*5 r + 1)^3 (49 r^2 + 13 r + 1) over r
    let phi3_num = &IntPoly::from_i64(&[1, 245, 2401]).pow(3) * &IntPoly::from_i64(&[1, 13, 49]);
    // (256 u + 1)^3 over u
    let phi4_num = IntPoly::from_i64(&[1, 256]).pow(3);
    let linear = [BigInt::from(0), BigInt::from(1)];

    let mut ok = true;
    for (name, description, num, input) in [
        ("phi3", "Gamma_0(7) hauptmodul r -> j", &phi3_num, &r),
        ("phi4", "Gamma_0(2) hauptmodul u -> j", &phi4_num, &u),
    ] {
        let holds = verify_hauptmodul_identity(num.coeffs(), &linear, input, &j, terms)
            .map_err(runtime)?;
        println!(
            "{name} ({description}), {terms} terms: {}",
            if holds { "ok" } else { "FAILED" }
        );
        ok &= holds;
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
