//! Command-line front end: every subcommand produces one or more reports and
//! the exit code states the overall verdict (0 all checks pass, 1 a check
//! failed, 2 usage or validation error).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use biquot::enumeration::rank_needed_for;
use biquot::lie_catalog::GroupCatalog;
use biquot::report::Report;
use biquot::tables::CuratedTables;
use biquot::verify::{
    cohomology_report_at, distinction_report_at, p1_report_at, run_verification, weights_report,
};
use biquot::{load_catalog, match_odd_sphere_pairs, rational_balance, RationalType, SphereMultiset};

#[derive(Parser)]
#[command(
    name = "biquot",
    version,
    about = "Catalog, enumeration and verification of sphere-like homogeneous quotients"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the simple-group catalog with rational sphere dimensions
    Catalog {
        #[arg(long, default_value_t = 10)]
        max_rank: u32,
        /// Override the built-in catalog with a file
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Enumerate all pairs G, H differing by exactly one odd sphere
    Match {
        #[arg(long, default_value_t = 10)]
        max_rank: u32,
        /// Also list rank-1 groups over the trivial subgroup
        #[arg(long)]
        include_trivial_h: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Check the rational balance condition for a candidate quotient
    Balance {
        /// Sphere dimensions of G, comma separated (e.g. "3,11")
        #[arg(long)]
        g_spheres: String,
        /// Sphere dimensions of H; circle factors as 1 (empty for trivial H)
        #[arg(long, default_value = "")]
        h_spheres: String,
        /// Target rational type: S<d>, CP<m> or HP<m>
        #[arg(long)]
        rational_type: String,
    },
    /// Closed-form cohomology at one parameter value, Gysin-certified
    Cohomology {
        #[arg(long)]
        n: u32,
        /// Admit the n = 1 degenerate case (real projective 3-space)
        #[arg(long)]
        allow_n1: bool,
    },
    /// Solve tangent-bundle p1 from the stable bundle relations
    Pontrjagin {
        #[arg(long)]
        n: u32,
    },
    /// Distinguish the two rational CP^(2n-1) quotients by |H^4/<p1>|
    Distinguish {
        #[arg(long)]
        n: u32,
    },
    /// Circle-representation weight decompositions
    Weights,
    /// Run the full verification battery over all curated tables
    VerifyTables {
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long, default_value_t = 10)]
        max_rank: u32,
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Override the built-in curated tables with a file
        #[arg(long)]
        tables: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(reports) => {
            emit(&reports, format);
            if reports.iter().all(Report::pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(reports: &[Report], format: Format) {
    match format {
        Format::Table => {
            for rep in reports {
                print!("{}", rep.render_text());
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(reports).expect("reports serialize")
            );
        }
    }
}

fn run(cmd: Command) -> Result<Vec<Report>, String> {
    match cmd {
        Command::Catalog { max_rank, catalog } => {
            let cat = catalog_from(catalog.as_deref(), max_rank)?;
            let mut rep = Report::new(format!("group catalog (rank <= {max_rank})"));
            for g in cat.entries() {
                rep.info(
                    g.label(),
                    format!(
                        "rank {}, dim {}, spheres {}",
                        g.rank(),
                        g.dimension(),
                        g.sphere_dimensions()
                    ),
                );
            }
            Ok(vec![rep])
        }
        Command::Match {
            max_rank,
            include_trivial_h,
            catalog,
        } => {
            let cat = catalog_from(catalog.as_deref(), max_rank)?;
            let mut rep = Report::new(format!("odd-sphere pairs (rank <= {max_rank})"));
            for cand in match_odd_sphere_pairs(&cat, include_trivial_h) {
                rep.info(cand.label().to_string(), cand.to_string());
            }
            Ok(vec![rep])
        }
        Command::Balance {
            g_spheres,
            h_spheres,
            rational_type,
        } => {
            let g = parse_spheres(&g_spheres)?;
            let h = parse_spheres(&h_spheres)?;
            let t = parse_rational_type(&rational_type)?;
            let balanced = rational_balance(&g, &h, &t).map_err(|e| e.to_string())?;
            let mut rep = Report::new("rational balance");
            rep.record(
                format!("{g} / {h} ~ {t}"),
                if balanced {
                    "balanced".to_string()
                } else {
                    "not balanced".to_string()
                },
                balanced,
            );
            Ok(vec![rep])
        }
        Command::Cohomology { n, allow_n1 } => {
            Ok(vec![cohomology_report_at(n, allow_n1).map_err(|e| e.to_string())?])
        }
        Command::Pontrjagin { n } => Ok(vec![p1_report_at(n).map_err(|e| e.to_string())?]),
        Command::Distinguish { n } => {
            Ok(vec![distinction_report_at(n).map_err(|e| e.to_string())?])
        }
        Command::Weights => Ok(vec![weights_report()]),
        Command::VerifyTables {
            n_max,
            max_rank,
            catalog,
            tables,
        } => {
            let tables = match tables {
                Some(p) => CuratedTables::parse(&read(&p)?).map_err(|e| e.to_string())?,
                None => CuratedTables::builtin().clone(),
            };
            // The built-in catalog is enlarged so that every parameterized row
            // up to n_max stays inside it; an explicit file is used as given.
            let cat = match catalog {
                Some(p) => load_catalog(Some(&read(&p)?), max_rank).map_err(|e| e.to_string())?,
                None => {
                    GroupCatalog::builtin(max_rank.max(rank_needed_for(n_max, &tables)))
                }
            };
            run_verification(&cat, &tables, n_max).map_err(|e| e.to_string())
        }
    }
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
}

fn catalog_from(path: Option<&std::path::Path>, max_rank: u32) -> Result<GroupCatalog, String> {
    let src = match path {
        Some(p) => Some(
            fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))?,
        ),
        None => None,
    };
    load_catalog(src.as_deref(), max_rank).map_err(|e| e.to_string())
}

fn parse_spheres(s: &str) -> Result<SphereMultiset, String> {
    let mut dims = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        dims.push(
            part.parse::<u32>()
                .map_err(|_| format!("bad sphere dimension `{part}`"))?,
        );
    }
    Ok(SphereMultiset::new(dims))
}

fn parse_rational_type(s: &str) -> Result<RationalType, String> {
    let s = s.trim();
    let (gen_degree, rest) = if let Some(rest) = s.strip_prefix("CP") {
        (Some(2), rest)
    } else if let Some(rest) = s.strip_prefix("HP") {
        (Some(4), rest)
    } else if let Some(rest) = s.strip_prefix('S') {
        (None, rest)
    } else {
        return Err(format!("rational type `{s}` is not S<d>, CP<m> or HP<m>"));
    };
    let value: u32 = rest
        .parse()
        .map_err(|_| format!("bad number in rational type `{s}`"))?;
    match gen_degree {
        None => RationalType::odd_sphere(value).map_err(|e| e.to_string()),
        Some(d) => RationalType::truncated(d, value).map_err(|e| e.to_string()),
    }
}
