//! Command-line front end: graph generation and I/O, corona construction,
//! single-parameter queries, corona bounds, and suite execution.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::{chromatic_number, corona_dist_bounds, distance_k_chromatic, Applicability};
use crate::config::SolverCaps;
use crate::domination::{
    connected_domination_number, distance_k_domination_number, domatic_number, domination_number,
    idomatic_number, independence_number, independent_domination_number, k_domination_number,
    location_numbers, roman_domination_number,
};
use crate::error::{Error, Result};
use crate::graph::{corona, read_dimacs, write_dimacs, FamilySpec, Graph};
use crate::harness::{run_suite, SuiteConfig};

#[derive(Debug, Parser)]
#[command(
    name = "corona-lab",
    about = "Exact graph-parameter laboratory for corona products",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a named graph family as a DIMACS file.
    Gen(GenArgs),
    /// Build the corona product of two DIMACS graphs.
    Corona(CoronaArgs),
    /// Compute one exact parameter of a DIMACS graph.
    Param(ParamArgs),
    /// Print the theorem bounds on chi_<=k(G.H) for k in {2,3}.
    Bounds(BoundsArgs),
    /// Run the theorem-verification suite and write its report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "kebab-case")]
enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    CompleteBipartite,
    RandomTree,
    RandomGnp,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Family to generate.
    #[arg(long, value_enum)]
    family: Family,
    /// Order (or leaf count for star).
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// First side of a complete bipartite graph.
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Second side of a complete bipartite graph.
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Edge probability for random-gnp.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CoronaArgs {
    /// DIMACS file for G.
    #[arg(long)]
    g: PathBuf,
    /// DIMACS file for H.
    #[arg(long)]
    h: PathBuf,
    /// Output DIMACS path for G.H.
    #[arg(long)]
    out: PathBuf,
    /// Labeling sidecar path; defaults to <out>.labels.json.
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Tag {
    #[value(name = "chi")]
    Chi,
    #[value(name = "chi_k")]
    ChiK,
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "gamma_c")]
    GammaC,
    #[value(name = "gamma_k")]
    GammaK,
    #[value(name = "gamma_dist_k")]
    GammaDistK,
    #[value(name = "i")]
    I,
    #[value(name = "beta0")]
    Beta0,
    #[value(name = "gamma_R")]
    GammaR,
    #[value(name = "dim")]
    Dim,
    #[value(name = "gamma_ld")]
    GammaLd,
    #[value(name = "gamma_l_d")]
    GammaLD,
    #[value(name = "domatic")]
    Domatic,
    #[value(name = "idomatic")]
    Idomatic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Override the coloring solver size cap.
    #[arg(long)]
    cap_coloring: Option<usize>,
    /// Override the subset-enumeration size cap.
    #[arg(long)]
    cap_subset: Option<usize>,
    /// Override the partition-search size cap.
    #[arg(long)]
    cap_partition: Option<usize>,
    /// Override the full Roman enumeration size cap.
    #[arg(long)]
    cap_roman_enum: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> SolverCaps {
        let mut caps = SolverCaps::default();
        if let Some(v) = self.cap_coloring {
            caps.coloring = v;
        }
        if let Some(v) = self.cap_subset {
            caps.subset = v;
        }
        if let Some(v) = self.cap_partition {
            caps.partition = v;
        }
        if let Some(v) = self.cap_roman_enum {
            caps.roman_enum = v;
        }
        caps
    }
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Input DIMACS file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Parameter to compute.
    #[arg(long, value_enum)]
    tag: Tag,
    /// Distance or multiplicity for chi-k, gamma-k, gamma-dist-k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// DIMACS file for G.
    #[arg(long)]
    g: PathBuf,
    /// DIMACS file for H.
    #[arg(long)]
    h: PathBuf,
    /// Distance, 2 or 3.
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run the whole catalog ("all").
    #[arg(long, default_value = "all")]
    suite: String,
    /// Restrict to specific check ids (repeatable), e.g. --check T9.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum number of concurrently evaluated checks.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    caps: CapArgs,
}

/// Parses the process arguments and runs the program, returning the exit
/// code documented per error class.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Corona(args) => cmd_corona(args),
        Command::Param(args) => cmd_param(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    read_dimacs(BufReader::new(File::open(path)?))
}

fn write_graph(path: Option<&Path>, g: &Graph, comment: &str) -> Result<()> {
    match path {
        Some(p) => write_dimacs(&mut BufWriter::new(File::create(p)?), g, Some(comment)),
        None => write_dimacs(&mut std::io::stdout().lock(), g, Some(comment)),
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32> {
    let spec = match args.family {
        Family::Path => FamilySpec::path(args.n),
        Family::Cycle => FamilySpec::cycle(args.n),
        Family::Complete => FamilySpec::complete(args.n),
        Family::Empty => FamilySpec::empty(args.n),
        Family::Star => FamilySpec::star(args.n),
        Family::CompleteBipartite => FamilySpec::complete_bipartite(args.s, args.t),
        Family::RandomTree => FamilySpec::random_tree(args.n, args.seed),
        Family::RandomGnp => FamilySpec::RandomGnp {
            n: args.n,
            p: args.p,
            seed: args.seed,
        },
    };
    let g = spec.generate()?;
    write_graph(args.out.as_deref(), &g, &spec.name())?;
    Ok(0)
}

fn cmd_corona(args: CoronaArgs) -> Result<i32> {
    let g = read_graph(&args.g)?;
    let h = read_graph(&args.h)?;
    let (c, lab) = corona(&g, &h);
    write_graph(Some(&args.out), &c, "corona product")?;
    let labels_path = args.labels.unwrap_or_else(|| {
        let mut s = args.out.into_os_string();
        s.push(".labels.json");
        PathBuf::from(s)
    });
    let labels: Vec<serde_json::Value> = (0..lab.order())
        .map(|id| {
            let mut v = serde_json::to_value(lab.label(id)).expect("label serializes");
            v["id"] = serde_json::json!(id);
            v
        })
        .collect();
    let sidecar = serde_json::json!({ "n1": lab.n1, "n2": lab.n2, "labels": labels });
    let mut w = BufWriter::new(File::create(labels_path)?);
    writeln!(w, "{}", serde_json::to_string_pretty(&sidecar)?)?;
    Ok(0)
}

fn require_k(k: Option<usize>, tag: &str) -> Result<usize> {
    k.ok_or_else(|| Error::Inapplicable(format!("--k is required for {tag}")))
}

fn cmd_param(args: ParamArgs) -> Result<i32> {
    let g = read_graph(&args.input)?;
    let caps = args.caps.caps();
    let result = match args.tag {
        Tag::Chi => chromatic_number(&g, &caps)?.witness_json(),
        Tag::ChiK => {
            let k = require_k(args.k, "chi_k")?;
            distance_k_chromatic(&g, k, &caps)?.witness_json()
        }
        Tag::Gamma => domination_number(&g, &caps)?.witness_json(),
        Tag::GammaC => connected_domination_number(&g, &caps)?.witness_json(),
        Tag::GammaK => {
            let k = require_k(args.k, "gamma_k")?;
            k_domination_number(&g, k, &caps)?.witness_json()
        }
        Tag::GammaDistK => {
            let k = require_k(args.k, "gamma_dist_k")?;
            distance_k_domination_number(&g, k, &caps)?.witness_json()
        }
        Tag::I => independent_domination_number(&g, &caps)?.witness_json(),
        Tag::Beta0 => independence_number(&g, &caps)?.witness_json(),
        Tag::GammaR => roman_domination_number(&g, &caps)?.witness_json(),
        Tag::Dim => location_numbers(&g, &caps)?.dim.witness_json(),
        Tag::GammaLd => location_numbers(&g, &caps)?.gamma_ld.witness_json(),
        Tag::GammaLD => location_numbers(&g, &caps)?.gamma_l_d.witness_json(),
        Tag::Domatic => domatic_number(&g, &caps)?.witness_json(),
        Tag::Idomatic => match idomatic_number(&g, &caps)? {
            Some(r) => r.witness_json(),
            None => serde_json::json!({ "parameter": "idomatic", "value": null }),
        },
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&result)?),
        Format::Text => {
            let value = &result["value"];
            println!("{} = {}", result["parameter"].as_str().unwrap_or("?"), value);
        }
    }
    Ok(0)
}

fn cmd_bounds(args: BoundsArgs) -> Result<i32> {
    let g = read_graph(&args.g)?;
    let h = read_graph(&args.h)?;
    let caps = args.caps.caps();
    let bounds = corona_dist_bounds(&g, &h, args.k, &caps)?;
    let side = |a: &Applicability| match a {
        Applicability::Applicable(v) => serde_json::json!(v),
        Applicability::Inapplicable(reason) => serde_json::json!({ "inapplicable": reason }),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::json!({
            "k": args.k,
            "lower": side(&bounds.lower),
            "upper": side(&bounds.upper),
        }))?
    );
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    if args.suite != "all" {
        return Err(Error::Inapplicable(format!(
            "unknown suite '{}'; only 'all' exists",
            args.suite
        )));
    }
    let config = SuiteConfig {
        seed: args.seed,
        caps: args.caps.caps(),
        filter: if args.checks.is_empty() {
            None
        } else {
            Some(args.checks.clone())
        },
        jobs: args.jobs,
    };
    let started = std::time::Instant::now();
    let report = run_suite(&config);
    // Timing stays out of the report so that equal seeds give byte-identical
    // files.
    let json = report.to_json();
    match args.out.as_deref() {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            writeln!(w, "{json}")?;
        }
        None => println!("{json}"),
    }
    for c in &report.checks {
        eprintln!(
            "{}: {} instances, {} pass, {} fail, {} skip",
            c.id, c.instances, c.pass, c.fail, c.skip
        );
    }
    eprintln!("suite finished in {:?}", started.elapsed());
    Ok(if report.is_clean() { 0 } else { 1 })
}
