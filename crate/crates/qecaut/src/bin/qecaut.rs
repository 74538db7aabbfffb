//! Command-line driver for stabilizer code analysis.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qecaut::analysis::{self, single_qubit_errors};
use qecaut::aut::{self, AutomorphismKind, SearchOptions, Witness};
use qecaut::catalog::{catalog, catalog_lookup, parse_code_file};
use qecaut::group::StabilizerGroup;
use qecaut::pauli::PauliOperator;
use qecaut::perm::Permutation;
use qecaut::report::AutReport;
use qecaut::GaussInt;

#[derive(Parser)]
#[command(
    name = "qecaut",
    version,
    about = "Stabilizer code analysis: parameters, codespace bases, and automorphism groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a generator set and report n, m, k
    Validate(ValidateArgs),
    /// Compute the code parameters [[n,k,d]]
    Params(AnalysisArgs),
    /// Compute the code distance and a minimal-weight witness
    Distance(AnalysisArgs),
    /// Print an unnormalized codespace basis
    Basis(AnalysisArgs),
    /// Test an error set against the stabilizer error-correction criterion
    CheckErrors(CheckErrorsArgs),
    /// Compute an automorphism group of the code
    Aut(AutArgs),
    /// Test one permutation for automorphism membership
    CheckPerm(CheckPermArgs),
    /// List built-in codes, or show one entry
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct CodeSource {
    /// Built-in code name (see `qecaut catalog`)
    #[arg(long, conflicts_with = "file")]
    code: Option<String>,
    /// Code file: one signed Pauli string per line, `#` comments
    #[arg(long)]
    file: Option<PathBuf>,
    /// Gaussian-reduce dependent generators instead of rejecting them
    #[arg(long)]
    reduce: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalysisArgs {
    #[command(flatten)]
    source: CodeSource,
    #[arg(long)]
    json: bool,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct CheckErrorsArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Comma-separated signed Pauli strings
    #[arg(long, value_delimiter = ',')]
    errors: Vec<String>,
    /// Add all 3n weight-one errors
    #[arg(long)]
    single_qubit: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AutArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Which automorphism group to compute
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Include the full element list (with witnesses) in the output
    #[arg(long)]
    elements: bool,
    #[arg(long)]
    json: bool,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Permit searches with no practical runtime bound
    #[arg(long)]
    allow_long: bool,
}

#[derive(Args)]
struct CheckPermArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Permutation in cycle notation, e.g. "(1 3)" or "(1 2 3)(4 5)"
    #[arg(long)]
    perm: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CatalogArgs {
    /// Entry to show; omit to list all
    name: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Strong,
    Weak,
    Clifford,
}

impl From<KindArg> for AutomorphismKind {
    fn from(kind: KindArg) -> AutomorphismKind {
        match kind {
            KindArg::Strong => AutomorphismKind::Strong,
            KindArg::Weak => AutomorphismKind::Weak,
            KindArg::Clifford => AutomorphismKind::Clifford,
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    // Die quietly when stdout is a closed pipe (e.g. piped into head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), AnyError> {
    match cli.command {
        Command::Validate(args) => validate(args),
        Command::Params(args) => params(args, false),
        Command::Distance(args) => params(args, true),
        Command::Basis(args) => basis(args),
        Command::CheckErrors(args) => check_errors(args),
        Command::Aut(args) => aut_cmd(args),
        Command::CheckPerm(args) => check_perm(args),
        Command::Catalog(args) => catalog_cmd(args),
    }
}

impl CodeSource {
    fn load(&self) -> Result<(String, StabilizerGroup), AnyError> {
        let (label, generator_strings) = match (&self.code, &self.file) {
            (Some(name), None) => {
                let entry = catalog_lookup(name)?;
                (
                    entry.name.to_string(),
                    entry.generators.iter().map(|s| s.to_string()).collect(),
                )
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let file = parse_code_file(&text)?;
                (path.display().to_string(), file.generators)
            }
            _ => return Err("exactly one of --code or --file is required".into()),
        };
        let ops = generator_strings
            .iter()
            .map(|s| PauliOperator::parse(s))
            .collect::<qecaut::Result<Vec<_>>>()?;
        let group = if self.reduce {
            StabilizerGroup::build_reduced(&ops)?
        } else {
            StabilizerGroup::build(&ops)?
        };
        Ok((label, group))
    }
}

fn install_threads(threads: Option<usize>) {
    if let Some(threads) = threads {
        // Only the first global install wins; fine for a one-shot CLI.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

fn validate(args: ValidateArgs) -> Result<(), AnyError> {
    let (label, group) = args.source.load()?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "code": label,
                "n": group.n(),
                "generators": group.m(),
                "logical_qubits": group.k(),
            }))?
        );
    } else {
        println!("code: {label}");
        println!("valid stabilizer group on {} qubits", group.n());
        println!("independent generators: {}", group.m());
        println!("logical qubits: {}", group.k());
    }
    Ok(())
}

fn params(args: AnalysisArgs, with_witness: bool) -> Result<(), AnyError> {
    install_threads(args.threads);
    let (label, group) = args.source.load()?;
    let result = analysis::distance(&group)?;
    let p = result.params;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "code": label,
                "n": p.n,
                "k": p.k,
                "d": p.d,
                "degenerate_convention": p.degenerate_convention,
                "witness": result.witness.serialize()?,
            }))?
        );
    } else {
        let note = if p.degenerate_convention {
            " (degenerate convention)"
        } else {
            ""
        };
        println!("code: {label}");
        println!("[[{},{},{}]]{note}", p.n, p.k, p.d);
        if with_witness {
            println!("minimal-weight witness: {}", result.witness.serialize()?);
        }
    }
    Ok(())
}

fn basis(args: AnalysisArgs) -> Result<(), AnyError> {
    let (label, group) = args.source.load()?;
    let basis = analysis::codespace_basis(&group)?;
    if args.json {
        let vectors: Vec<Vec<serde_json::Value>> = basis
            .vectors
            .iter()
            .map(|v| {
                v.terms
                    .iter()
                    .map(|&(state, c)| {
                        json!({
                            "state": analysis::BasisVector::label(basis.n, state),
                            "re": c.re,
                            "im": c.im,
                        })
                    })
                    .collect()
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"code": label, "vectors": vectors}))?
        );
        return Ok(());
    }
    for (idx, vector) in basis.vectors.iter().enumerate() {
        if idx > 0 {
            println!();
        }
        let scale = vector
            .terms
            .iter()
            .flat_map(|&(_, c)| [c.re.unsigned_abs(), c.im.unsigned_abs()])
            .fold(0u64, gcd);
        let scale = scale.max(1) as i64;
        for &(state, c) in &vector.terms {
            let c = GaussInt {
                re: c.re / scale,
                im: c.im / scale,
            };
            let bits = analysis::BasisVector::label(basis.n, state);
            match (c.re, c.im) {
                (1, 0) => println!("+{bits}"),
                (-1, 0) => println!("-{bits}"),
                _ => println!("({c}){bits}"),
            }
        }
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_errors(args: CheckErrorsArgs) -> Result<(), AnyError> {
    let (label, group) = args.source.load()?;
    let mut errors: Vec<PauliOperator> = args
        .errors
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| PauliOperator::parse(s.trim()))
        .collect::<qecaut::Result<_>>()?;
    if args.single_qubit {
        errors.extend(single_qubit_errors(group.n()));
    }
    if errors.is_empty() {
        return Err("no errors given; use --errors or --single-qubit".into());
    }
    let report = analysis::check_correctable(&group, &errors)?;
    if args.json {
        let violation = report.violation.as_ref().map(|v| {
            json!({
                "i": v.i,
                "j": v.j,
                "product": v.product.to_string(),
            })
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "code": label,
                "errors": errors.len(),
                "correctable": report.correctable,
                "violation": violation,
            }))?
        );
    } else {
        println!("code: {label}");
        println!("errors tested: {}", errors.len());
        if report.correctable {
            println!("correctable: yes");
        } else {
            let v = report.violation.as_ref().expect("violation recorded");
            println!("correctable: no");
            println!(
                "violating pair: E{}* E{} = {} lies in N(S)-S",
                v.i + 1,
                v.j + 1,
                v.product
            );
        }
    }
    Ok(())
}

fn aut_cmd(args: AutArgs) -> Result<(), AnyError> {
    let kind = AutomorphismKind::from(args.kind);
    let (label, group) = args.source.load()?;
    if kind == AutomorphismKind::Clifford && group.n() >= 11 && !args.allow_long {
        return Err(format!(
            "the twisted search at n = {} has no practical runtime bound; pass --allow-long to run it",
            group.n()
        )
        .into());
    }
    let options = SearchOptions {
        threads: args.threads,
        progress: true,
    };
    let result = aut::compute_group(&group, kind, &options)?;
    let report = AutReport::new(&label, group.n(), &result, args.elements);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(());
    }
    println!("code: {label}");
    println!("kind: {kind}");
    println!("order: {}", result.order);
    println!("generators: {}", report.generators.join(", "));
    println!("transitivity degree: {}", result.transitivity_degree);
    println!("cyclic: {}", if result.is_cyclic { "yes" } else { "no" });
    if args.elements {
        println!("elements:");
        for (sigma, witness) in result.elements.iter().zip(&result.witnesses) {
            match witness {
                Witness::None => println!("  {sigma}"),
                Witness::Signs(signs) => {
                    let text: String = signs.iter().map(|s| s.to_string()).collect::<String>();
                    println!("  {sigma}  signs {text}");
                }
                Witness::Twist(twist) => println!("  {sigma}  twist {twist}"),
            }
        }
    }
    Ok(())
}

fn check_perm(args: CheckPermArgs) -> Result<(), AnyError> {
    let kind = AutomorphismKind::from(args.kind);
    let (label, group) = args.source.load()?;
    let sigma = Permutation::parse_cycles(&args.perm, group.n())?;
    let mut member = false;
    let mut signs_text: Option<String> = None;
    let mut gamma_text: Option<String> = None;
    let mut twist_text: Option<String> = None;
    match kind {
        AutomorphismKind::Strong => {
            member = aut::is_strong(&group, &sigma)?;
        }
        AutomorphismKind::Weak => {
            if let Some(signs) = aut::weak_signs(&group, &sigma)? {
                member = true;
                signs_text = Some(signs.iter().map(|s| s.to_string()).collect());
                gamma_text = Some(aut::weak_twist_witness(&group, &sigma)?.serialize()?);
            }
        }
        AutomorphismKind::Clifford => {
            if let Some(twist) = aut::find_clifford_twist(&group, &sigma)? {
                member = true;
                twist_text = Some(twist.to_string());
            }
        }
    }
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "code": label,
                "permutation": sigma.to_string(),
                "kind": kind.name(),
                "member": member,
                "signs": signs_text,
                "gamma": gamma_text,
                "twist": twist_text,
            }))?
        );
        return Ok(());
    }
    println!("code: {label}");
    println!("permutation: {sigma}");
    println!("kind: {kind}");
    println!("member: {}", if member { "yes" } else { "no" });
    if let Some(signs) = signs_text {
        println!("signs: {signs}");
    }
    if let Some(gamma) = gamma_text {
        println!("gamma: {gamma}");
    }
    if let Some(twist) = twist_text {
        println!("twist: {twist}");
    }
    Ok(())
}

fn catalog_cmd(args: CatalogArgs) -> Result<(), AnyError> {
    let entries = match &args.name {
        Some(name) => vec![catalog_lookup(name)?],
        None => catalog(),
    };
    if args.json {
        let list: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "description": e.description,
                    "n": e.n,
                    "k": e.k.value,
                    "d": e.d.map(|x| x.value),
                    "generators": e.generators,
                    "strong_order": e.strong_order.map(|x| x.value),
                    "weak_order": e.weak_order.map(|x| x.value),
                    "clifford_order": e.clifford_order.map(|x| x.value),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&list)?);
        return Ok(());
    }
    for entry in &entries {
        let d = entry
            .d
            .map(|x| x.value.to_string())
            .unwrap_or_else(|| "?".into());
        println!("{}: [[{},{},{}]]", entry.name, entry.n, entry.k.value, d);
        println!("  {}", entry.description);
        if args.name.is_some() {
            for g in &entry.generators {
                println!("  {g}");
            }
        }
        let order = |o: Option<qecaut::Expected<u64>>| match o {
            Some(x) => x.value.to_string(),
            None => "-".into(),
        };
        println!(
            "  orders: strong {}, weak {}, clifford {}",
            order(entry.strong_order),
            order(entry.weak_order),
            order(entry.clifford_order)
        );
    }
    Ok(())
}
