use clap::{Args, Parser, Subcommand, ValueEnum};
use cms::construction::{catalog, construct_frierson, FriersonSpec};
use cms::enumeration::{clan_table, counting_table, lowest_entropy_series};
use cms::error::Error;
use cms::io::{
    default_block, parse_couples, pretty_square, provenance_spec, AnalysisRow, Provenance,
    SquareDocument, ANALYSIS_CSV_HEADER,
};
use cms::measures::entropy_compression;
use cms::properties::analyze_properties;
use cms::spectra::{singular_values_numeric_with_tol, DEFAULT_RANK_TOL};
use cms::verify;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cms", version, about = "Compound magic squares: construct, analyze, enumerate, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Build a square from a spec, the catalog, or a compound recipe
    Construct(ConstructArgs),
    /// Report properties, spectrum, and measures of a square
    Analyze(AnalyzeArgs),
    /// Enumerate families: clan tables, counting rows, or the
    /// lowest-entropy series
    Enumerate(EnumerateArgs),
    /// Re-derive every published table and report pass/fail
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Catalog square name (e.g. m3, t9a, f27a, browne_b27)
    #[arg(long, conflicts_with_all = ["couples", "compound"])]
    catalog: Option<String>,
    /// Couple list, innermost first, e.g. "1,3;9,27;81,243"
    #[arg(long)]
    couples: Option<String>,
    /// Nesting level; must match the couple count when both given
    #[arg(long)]
    level: Option<usize>,
    /// Additive constant
    #[arg(long, default_value_t = 1)]
    k: i128,
    /// Reject specs that do not produce a natural square
    #[arg(long)]
    require_natural: bool,
    /// Compound recipe: pattern=NAME base=NAME step=N
    #[arg(long, num_args = 3, value_names = ["PATTERN", "BASE", "STEP"])]
    compound: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long, conflicts_with_all = ["spec", "input"])]
    catalog: Option<String>,
    /// Couple list, innermost first
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, default_value_t = 1)]
    k: i128,
    /// Read a square document from a JSON file
    #[arg(long = "in")]
    input: Option<std::path::PathBuf>,
    /// Row label for CSV output
    #[arg(long)]
    name: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Clan table for one level (reproduces the order-27 table at 3)
    #[arg(long)]
    level: Option<usize>,
    /// Sort order for the clan table
    #[arg(long, default_value = "entropy")]
    sort: String,
    /// Emit the counting table instead
    #[arg(long)]
    counts: bool,
    /// Emit the lowest-entropy series instead
    #[arg(long)]
    series: bool,
    #[arg(long, default_value_t = 5)]
    max_level: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single table check, e.g. table5
    #[arg(long)]
    only: Option<String>,
}

fn fmt_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{:.*}", decimals, v)
}

fn rank_tolerance() -> f64 {
    std::env::var("CMS_TOL")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_RANK_TOL)
}

fn run_construct(args: ConstructArgs) -> Result<(), Error> {
    let (matrix, provenance) = if let Some(name) = &args.catalog {
        let m = catalog(name)?;
        (m, Provenance::Catalog { name: name.clone() })
    } else if let Some(recipe) = &args.compound {
        let mut pattern = None;
        let mut base = None;
        let mut step = None;
        for part in recipe {
            match part.split_once('=') {
                Some(("pattern", v)) => pattern = Some(v.to_string()),
                Some(("base", v)) => base = Some(v.to_string()),
                Some(("step", v)) => {
                    step = Some(v.parse::<i128>().map_err(|_| Error::InvalidStep)?)
                }
                _ => return Err(Error::BadDocument(format!("bad compound part `{part}`"))),
            }
        }
        let (pattern, base, step) = match (pattern, base, step) {
            (Some(p), Some(b), Some(s)) => (p, b, s),
            _ => {
                return Err(Error::BadDocument(
                    "compound recipe needs pattern=, base=, step=".into(),
                ))
            }
        };
        let m = cms::construction::compound(&catalog(&pattern)?, &catalog(&base)?, step)?;
        (m, Provenance::Compound { pattern, base, step })
    } else if let Some(text) = &args.couples {
        let couples = parse_couples(text)?;
        if let Some(level) = args.level {
            if level != couples.len() {
                return Err(Error::InvalidLevel(level, couples.len(), couples.len()));
            }
        }
        let spec = FriersonSpec::new(args.k, couples.clone());
        if args.require_natural {
            spec.require_natural()?;
        }
        let m = construct_frierson(&spec)?;
        (m, Provenance::Spec { k: args.k, couples })
    } else {
        return Err(Error::BadDocument(
            "one of --catalog, --couples, --compound is required".into(),
        ));
    };

    let doc = SquareDocument::new(&matrix, Some(provenance));
    match args.format {
        Format::Json => print!("{}", doc.to_json()),
        Format::Csv => print!("{}", doc.to_csv()),
        Format::Pretty => print!("{}", pretty_square(&matrix, default_block(matrix.order()))),
    }
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), Error> {
    let (matrix, name) = if let Some(cat) = &args.catalog {
        (catalog(cat)?, cat.clone())
    } else if let Some(spec_text) = &args.spec {
        let spec = FriersonSpec::new(args.k, parse_couples(spec_text)?);
        (construct_frierson(&spec)?, "spec".to_string())
    } else if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::BadDocument(format!("{}: {e}", path.display())))?;
        let doc = SquareDocument::from_json(&text)?;
        let name = match &doc.provenance {
            Some(Provenance::Catalog { name }) => name.clone(),
            Some(p) => provenance_spec(p)
                .map(|_| "spec".to_string())
                .unwrap_or_else(|| "compound".to_string()),
            None => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "square".to_string()),
        };
        (doc.matrix()?, name)
    } else {
        return Err(Error::BadDocument(
            "one of --catalog, --spec, --in is required".into(),
        ));
    };

    let name = args.name.unwrap_or(name);
    let properties = analyze_properties(&matrix);
    let spectrum = singular_values_numeric_with_tol(&matrix, rank_tolerance());
    let measures = entropy_compression(&spectrum.sigmas, matrix.order())?;
    let row = AnalysisRow {
        name: &name,
        properties: &properties,
        spectrum: &spectrum,
        measures: &measures,
    };
    match args.format {
        Format::Csv => println!("{ANALYSIS_CSV_HEADER}\n{}", row.to_csv()),
        _ => print!("{}", row.to_json()),
    }
    Ok(())
}

fn run_enumerate(args: EnumerateArgs) -> Result<(), Error> {
    if args.counts {
        println!("n,l,first_couples,num_squares,num_clans,variant_exponent,variant_count");
        for row in counting_table(args.max_level) {
            let count = row
                .variant_count
                .as_ref()
                .map(|v| v.to_string())
                .unwrap_or_else(|| format!("8^{}", row.variant_exponent));
            println!(
                "{},{},{},{},{},{},{}",
                row.order,
                row.level,
                row.first_couples,
                row.num_squares,
                row.num_clans,
                row.variant_exponent,
                count
            );
        }
        return Ok(());
    }
    if args.series {
        println!("l,n,sigma1,H,C,rank");
        for row in lowest_entropy_series(args.max_level)? {
            println!(
                "{},{},{},{},{},{}",
                row.level,
                row.order,
                row.sigma_1,
                fmt_sig6(row.h),
                fmt_sig6(row.c),
                row.rank
            );
        }
        return Ok(());
    }
    let level = args
        .level
        .ok_or_else(|| Error::BadDocument("--level is required for clan tables".into()))?;
    if args.sort != "entropy" {
        return Err(Error::BadDocument(format!("unknown sort `{}`", args.sort)));
    }
    println!("clan,H,C");
    for (clan, h, c) in clan_table(level)? {
        println!("\"{}\",{},{}", clan, fmt_sig6(h), fmt_sig6(c));
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    if let Some(only) = &args.only {
        if !verify::TABLE_NAMES.contains(&only.as_str()) {
            eprintln!("error: unknown table `{only}`; expected one of {:?}", verify::TABLE_NAMES);
            return ExitCode::from(2);
        }
    }
    let checks = verify::run(args.only.as_deref());
    let mut all_ok = true;
    for check in &checks {
        if check.passed() {
            println!("{}: PASS", check.name);
        } else {
            all_ok = false;
            println!("{}: FAIL", check.name);
            for failure in &check.failures {
                println!("  {failure}");
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => run_construct(args),
        Command::Analyze(args) => run_analyze(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => return run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
