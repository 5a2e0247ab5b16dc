//! `spotflat`: command-line access to the arc, disk and sphere models, the
//! flat certifier and the property suites.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spotflat_core::arc::{point_push, Slope, SpottedArc};
use spotflat_core::certify::{certify_flat, CertifyConfig, FlatModel};
use spotflat_core::graph::{ball, distance, geodesic, FareyGraph, GraphDocument, ImplicitGraph};
use spotflat_core::handlebody::{annular_intersection, omega_distance, push_disk, OmegaGraph, SpottedDisk};
use spotflat_core::sphere::{intersection_circles, SphereGraph, SpottedSphere};
use spotflat_core::suite::{run_suite, Fault};
use spotflat_core::{Error, Result};

use crate::config::{FileConfig, Settings};

const EXIT_PROPERTY_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "spotflat", version, about = "Exact metric experiments on spotted disk and sphere graph models")]
struct Cli {
    /// TOML configuration file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Distance cap for searches.
    #[arg(long, global = true)]
    cap: Option<u32>,

    /// Height cap of the Farey graph underlying every model.
    #[arg(long, global = true)]
    height_cap: Option<u64>,

    /// Maximum number of vertices a single search may visit.
    #[arg(long, global = true)]
    max_visited: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Queries on the Farey graph (arc graph of the one-holed torus).
    #[command(subcommand)]
    Farey(FareyCommand),
    /// Queries on the spotted disk model.
    #[command(subcommand)]
    Omega(OmegaCommand),
    /// Pushes a spotted disk (p/q@k) or spotted arc (p/q@k:full|half) n turns.
    Push {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Intersection counts in the disk model.
    #[command(subcommand)]
    Intersect(IntersectCommand),
    /// Queries on the sphere model.
    #[command(subcommand)]
    Sphere(SphereCommand),
    /// Certifies an exact grid flat and writes the certificate as JSON.
    CertifyFlat(CertifyArgs),
    /// Runs a property suite: arc, engine, omega, sphere or all.
    Suite {
        name: String,
        /// Inject a deliberate defect: omega-twist-gap or annular-offset.
        #[arg(long)]
        inject: Option<String>,
    },
    /// Exports a ball of a registered graph as DOT or JSON.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum FareyCommand {
    Dist {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Geodesic {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum OmegaCommand {
    Dist {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Ball {
        #[arg(allow_hyphen_values = true)]
        x: String,
        r: u32,
    },
}

#[derive(Subcommand)]
enum IntersectCommand {
    Annular {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        l: i64,
    },
}

#[derive(Subcommand)]
enum SphereCommand {
    Circles {
        #[arg(allow_hyphen_values = true)]
        h: i64,
        #[arg(allow_hyphen_values = true)]
        h2: i64,
    },
    Dist {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Args)]
struct CertifyArgs {
    /// Grid side length minus one.
    #[arg(long)]
    n: Option<usize>,
    /// Adjacent seed slopes, e.g. 0/1,inf.
    #[arg(long, allow_hyphen_values = true)]
    seed: Option<String>,
    #[arg(long)]
    model: Option<String>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    /// farey, omega(g=2) or sphere(g=2).
    #[arg(long)]
    graph: String,
    #[arg(long, allow_hyphen_values = true)]
    center: String,
    #[arg(long)]
    radius: u32,
    #[arg(long, value_enum)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. }
        | Error::DistanceCap { .. }
        | Error::BeyondCap { .. }
        | Error::RayExtension { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> Result<u8> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let settings = Settings::merge(&file, cli.cap, cli.height_cap, cli.max_visited);
    let (cap, limits) = (settings.cap, settings.limits);

    match cli.command {
        Command::Farey(FareyCommand::Dist { a, b }) => {
            let (a, b): (Slope, Slope) = (a.parse()?, b.parse()?);
            let g = FareyGraph::new(settings.pair_height_cap(&[a.height(), b.height()]));
            println!("{}", distance(&g, &a, &b, cap, limits)?);
        }
        Command::Farey(FareyCommand::Geodesic { a, b }) => {
            let (a, b): (Slope, Slope) = (a.parse()?, b.parse()?);
            let g = FareyGraph::new(settings.pair_height_cap(&[a.height(), b.height()]));
            print_path(&g, &geodesic(&g, &a, &b, cap, limits)?);
        }
        Command::Omega(OmegaCommand::Dist { x, y }) => {
            let (x, y): (SpottedDisk, SpottedDisk) = (x.parse()?, y.parse()?);
            let g = OmegaGraph::new(settings.pair_height_cap(&[x.arc.height(), y.arc.height()]));
            println!("{}", omega_distance(&g, x, y, cap, limits)?);
        }
        Command::Omega(OmegaCommand::Ball { x, r }) => {
            let x: SpottedDisk = x.parse()?;
            let g = OmegaGraph::new(settings.ball_height_cap());
            for (v, d) in ball(&g, &x, r, limits)?.members {
                println!("{v}\t{d}");
            }
        }
        Command::Push { x, n } => {
            if x.contains(':') {
                println!("{}", point_push(x.parse::<SpottedArc>()?, n));
            } else {
                println!("{}", push_disk(x.parse::<SpottedDisk>()?, n));
            }
        }
        Command::Intersect(IntersectCommand::Annular { k, l }) => {
            println!("{}", annular_intersection(k, l));
        }
        Command::Sphere(SphereCommand::Circles { h, h2 }) => {
            println!("{}", intersection_circles(h, h2));
        }
        Command::Sphere(SphereCommand::Dist { x, y }) => {
            let (x, y): (SpottedSphere, SpottedSphere) = (x.parse()?, y.parse()?);
            let g = SphereGraph::new(settings.pair_height_cap(&[x.arc.height(), y.arc.height()]));
            println!("{}", distance(&g, &x, &y, cap, limits)?);
        }
        Command::CertifyFlat(args) => return certify(args, &file, &settings),
        Command::Suite { name, inject } => {
            let fault = inject.map(|f| f.parse::<Fault>()).transpose()?;
            let report = run_suite(&name, fault)?;
            println!("{report}");
            if !report.passed() {
                return Ok(EXIT_PROPERTY_FAILURE);
            }
        }
        Command::Export(args) => export(args, &settings)?,
    }
    Ok(0)
}

fn print_path<G: ImplicitGraph>(g: &G, path: &[G::Vertex]) {
    let shown: Vec<String> = path.iter().map(|v| g.encode(v)).collect();
    println!("{}", shown.join(" "));
}

fn parse_seed(text: &str) -> Result<(Slope, Slope)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse { kind: "seed pair", input: text.to_owned() })?;
    Ok((a.parse()?, b.parse()?))
}

fn certify(args: CertifyArgs, file: &FileConfig, settings: &Settings) -> Result<u8> {
    let defaults = CertifyConfig::default();
    let section = &file.certify;
    let config = CertifyConfig {
        model: match args.model.as_ref().or(section.model.as_ref()) {
            Some(m) => m.parse::<FlatModel>()?,
            None => defaults.model,
        },
        n: args.n.or(section.n).unwrap_or(defaults.n),
        seed: match args.seed.as_ref().or(section.seed.as_ref()) {
            Some(s) => parse_seed(s)?,
            None => defaults.seed,
        },
        distance_cap: settings.cap,
        height_cap: settings.height_cap.or(section.height_cap).unwrap_or(defaults.height_cap),
        max_visited: settings.limits.max_visited,
    };
    let cert = certify_flat(&config)?;
    let json = cert.to_json()?;
    match args.out.or(section.out.as_ref().map(PathBuf::from)) {
        Some(path) => std::fs::write(path, &json)?,
        None => print!("{json}"),
    }
    let verified = cert.verify();
    eprintln!(
        "{} grid {}x{} on {}: linf (L, C) = ({}, {}), l1 (L, C) = ({}, {}), {}",
        if cert.success { "certified" } else { "NOT certified" },
        config.n + 1,
        config.n + 1,
        cert.graph,
        cert.constants.linf.l,
        cert.constants.linf.c,
        cert.constants.l1.l,
        cert.constants.l1.c,
        match &verified {
            Ok(()) => "witnesses verified".to_owned(),
            Err(e) => format!("verification failed: {e}"),
        }
    );
    Ok(if cert.success && verified.is_ok() { 0 } else { EXIT_PROPERTY_FAILURE })
}

fn export(args: ExportArgs, settings: &Settings) -> Result<()> {
    let height_cap = settings.ball_height_cap();
    let doc = match args.graph.as_str() {
        "farey" => export_ball(&FareyGraph::new(height_cap), &args, settings)?,
        "omega(g=2)" | "omega" => export_ball(&OmegaGraph::new(height_cap), &args, settings)?,
        "sphere(g=2)" | "sphere" => export_ball(&SphereGraph::new(height_cap), &args, settings)?,
        other => return Err(Error::UnknownGraph(other.to_owned())),
    };
    let text = match args.format {
        Format::Dot => doc.to_dot(),
        Format::Json => doc.to_json()?,
    };
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn export_ball<G: ImplicitGraph>(g: &G, args: &ExportArgs, settings: &Settings) -> Result<GraphDocument> {
    let center = g.decode(&args.center)?;
    let b = ball(g, &center, args.radius, settings.limits)?;
    Ok(GraphDocument::from_ball(g, &b))
}
