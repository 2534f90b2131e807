//! Command-line verifier: runs the check suites, reports custom stacking
//! sequences, exports the block shapes as meshes, and tabulates the wedge
//! volume-ratio profiles.

mod render;
mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use closepack::blocks::{
    build_regular_dodecahedron, build_rhombic_dodecahedron, build_trapezo_rhombic_dodecahedron,
};
use closepack::minimal::{minimal_block, split_prism, MinimalBlockKind};
use closepack::polyhedron::Polyhedron;
use closepack::profiles::{edge_split_profile, wedge_fill_profile};
use render::{emit, sig12, CheckResult, Format};
use std::path::PathBuf;
use suites::Ctx;

#[derive(Parser)]
#[command(name = "closepack", version, about = "Numeric verifier for close-packing geometry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Generic comparison tolerance (claim-pinned tolerances stay fixed)
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Seed for every randomized check
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Sample count for Monte Carlo estimates
    #[arg(long, global = true, default_value_t = 1_000_000)]
    samples: u64,
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Md)]
    format: FormatArg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Md,
    Csv,
    Json,
}

impl FormatArg {
    fn to_format(self) -> Format {
        match self {
            FormatArg::Md => Format::Md,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Table1,
    Honeycomb,
    Thirteen,
    Blocks,
    Minblocks,
    Barlow,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::All => "all",
            SuiteArg::Table1 => "table1",
            SuiteArg::Honeycomb => "honeycomb",
            SuiteArg::Thirteen => "thirteen",
            SuiteArg::Blocks => "blocks",
            SuiteArg::Minblocks => "minblocks",
            SuiteArg::Barlow => "barlow",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report each check
    Verify { suite: SuiteArg },
    /// Report density and contact structure of one stacking sequence
    Barlow {
        /// Stacking sequence over the letters A, B, C (e.g. ABC or ABAC)
        #[arg(long)]
        sequence: String,
        /// Periodic copies along the first lattice direction
        #[arg(long, default_value_t = 1)]
        nx: u32,
        /// Periodic copies along the second lattice direction
        #[arg(long, default_value_t = 1)]
        ny: u32,
    },
    /// Write one of the block shapes as a plain-text mesh file
    Export {
        /// Shape name; run with an unknown name to list the choices
        #[arg(long)]
        shape: String,
        /// Output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate a wedge volume-ratio profile over a grid
    Profile {
        /// Profile family: 1 = right-angle fill, 2 = split edge sector
        #[arg(long)]
        lemma: u8,
        /// Wedge opening angle in radians
        #[arg(long)]
        theta: f64,
        /// Edge length for the split profile (family 2 only)
        #[arg(long)]
        h: Option<f64>,
        /// Number of grid points
        #[arg(long, default_value_t = 50)]
        grid: u32,
    },
}

const EXPORT_SHAPES: [&str; 11] = [
    "rhombic_dodecahedron",
    "trapezo_rhombic_dodecahedron",
    "regular_dodecahedron",
    "tetra_A",
    "tetra_B",
    "penta_A",
    "penta_B",
    "hexa_A",
    "hexa_B",
    "prism_A",
    "prism_B",
];

fn shape_by_name(name: &str) -> Result<Polyhedron, String> {
    let block = |kind| -> Result<Polyhedron, String> {
        Ok(minimal_block(kind)
            .map_err(|e| e.to_string())?
            .polyhedron()
            .clone())
    };
    match name {
        "rhombic_dodecahedron" => build_rhombic_dodecahedron().map_err(|e| e.to_string()),
        "trapezo_rhombic_dodecahedron" => {
            build_trapezo_rhombic_dodecahedron().map_err(|e| e.to_string())
        }
        "regular_dodecahedron" => build_regular_dodecahedron().map_err(|e| e.to_string()),
        "tetra_A" => block(MinimalBlockKind::TetraA),
        "tetra_B" => block(MinimalBlockKind::TetraB),
        "penta_A" => block(MinimalBlockKind::PentaA),
        "penta_B" => block(MinimalBlockKind::PentaB),
        "hexa_A" => block(MinimalBlockKind::HexaA),
        "hexa_B" => block(MinimalBlockKind::HexaB),
        "prism_A" | "prism_B" => {
            let (p1, p2) = split_prism(MinimalBlockKind::HexaA).map_err(|e| e.to_string())?;
            let block = if name == "prism_A" { p1 } else { p2 };
            Ok(block.polyhedron().clone())
        }
        other => Err(format!(
            "unknown shape '{other}'; choices: {}",
            EXPORT_SHAPES.join(", ")
        )),
    }
}

struct ProfileRow {
    x: f64,
    solid_angle: Option<f64>,
    sector_volume: f64,
    tetra_volume: f64,
    ratio: f64,
}

fn emit_profile(rows: &[ProfileRow], format: Format) {
    let with_angle = rows.iter().any(|r| r.solid_angle.is_some());
    match format {
        Format::Json => {
            for r in rows {
                let mut obj = serde_json::Map::new();
                obj.insert("x".into(), sig12(r.x).into());
                if let Some(omega) = r.solid_angle {
                    obj.insert("solid_angle".into(), sig12(omega).into());
                }
                obj.insert("sector_volume".into(), sig12(r.sector_volume).into());
                obj.insert("tetra_volume".into(), sig12(r.tetra_volume).into());
                obj.insert("ratio".into(), sig12(r.ratio).into());
                println!("{}", serde_json::Value::Object(obj));
            }
        }
        Format::Csv => {
            if with_angle {
                println!("x,solid_angle,sector_volume,tetra_volume,ratio");
            } else {
                println!("x,sector_volume,tetra_volume,ratio");
            }
            for r in rows {
                let mut fields = vec![sig12(r.x)];
                if let Some(omega) = r.solid_angle {
                    fields.push(sig12(omega));
                }
                fields.push(sig12(r.sector_volume));
                fields.push(sig12(r.tetra_volume));
                fields.push(sig12(r.ratio));
                println!("{}", fields.join(","));
            }
        }
        Format::Md => {
            if with_angle {
                println!("| x | solid angle | sector volume | tetra volume | ratio |");
                println!("|---|---|---|---|---|");
            } else {
                println!("| x | sector volume | tetra volume | ratio |");
                println!("|---|---|---|---|");
            }
            for r in rows {
                match r.solid_angle {
                    Some(omega) => println!(
                        "| {} | {} | {} | {} | {} |",
                        sig12(r.x),
                        sig12(omega),
                        sig12(r.sector_volume),
                        sig12(r.tetra_volume),
                        sig12(r.ratio)
                    ),
                    None => println!(
                        "| {} | {} | {} | {} |",
                        sig12(r.x),
                        sig12(r.sector_volume),
                        sig12(r.tetra_volume),
                        sig12(r.ratio)
                    ),
                }
            }
        }
    }
}

/// Fill-ratio profile of the right-angle wedge: log-spaced grid, with the
/// expected strict decrease in the leg length checked along the way.
fn profile_fill(theta: f64, grid: u32, format: Format) -> Result<bool, String> {
    if grid < 2 {
        return Err(format!("need at least 2 grid points, got {grid}"));
    }
    let mut rows = Vec::with_capacity(grid as usize);
    for k in 0..grid {
        let t = k as f64 / (grid - 1) as f64;
        let x = 10f64.powf(-3.0 + 6.0 * t);
        let w = wedge_fill_profile(theta, x).map_err(|e| e.to_string())?;
        rows.push(ProfileRow {
            x,
            solid_angle: None,
            sector_volume: w.sector_volume,
            tetra_volume: w.tetra_volume,
            ratio: w.ratio,
        });
    }
    emit_profile(&rows, format);
    let violations = rows
        .windows(2)
        .filter(|pair| pair[1].ratio >= pair[0].ratio + 1e-12)
        .count();
    eprintln!(
        "fill ratio decreasing along the leg: {}",
        if violations == 0 {
            "ok".to_string()
        } else {
            format!("{violations} violations")
        }
    );
    Ok(violations == 0)
}

/// Ratio profile of a split edge sector: symmetric interior grid, checked
/// for mirror symmetry and a flat slope at the even split.
fn profile_split(theta: f64, h: f64, grid: u32, format: Format) -> Result<bool, String> {
    if grid < 2 {
        return Err(format!("need at least 2 grid points, got {grid}"));
    }
    let mut rows = Vec::with_capacity(grid as usize);
    for k in 1..=grid {
        let x = theta * k as f64 / (grid + 1) as f64;
        let p = edge_split_profile(theta, h, x).map_err(|e| e.to_string())?;
        rows.push(ProfileRow {
            x,
            solid_angle: Some(p.solid_angle.steradians()),
            sector_volume: p.sector_volume,
            tetra_volume: p.tetra_volume,
            ratio: p.ratio,
        });
    }
    emit_profile(&rows, format);
    let mut asymmetry = 0.0f64;
    for k in 0..rows.len() {
        let mirror = rows.len() - 1 - k;
        asymmetry = asymmetry.max((rows[k].ratio - rows[mirror].ratio).abs());
    }
    let dh = 1e-5;
    let lo = edge_split_profile(theta, h, theta / 2.0 - dh).map_err(|e| e.to_string())?;
    let hi = edge_split_profile(theta, h, theta / 2.0 + dh).map_err(|e| e.to_string())?;
    let slope = (hi.ratio - lo.ratio).abs() / (2.0 * dh);
    let symmetric = asymmetry <= 1e-13;
    let flat = slope <= 1e-6;
    eprintln!(
        "ratio symmetric about the even split: {} (max gap {:.3e})",
        if symmetric { "ok" } else { "FAIL" },
        asymmetry
    );
    eprintln!(
        "ratio slope at the even split: {} ({:.3e})",
        if flat { "ok" } else { "FAIL" },
        slope
    );
    Ok(symmetric && flat)
}

fn report(rows: &[CheckResult], format: Format) -> bool {
    emit(rows, format);
    let passed = rows.iter().filter(|r| r.pass).count();
    eprintln!("{passed}/{} checks passed", rows.len());
    passed == rows.len()
}

fn run(cli: &Cli) -> Result<bool, String> {
    let ctx = Ctx {
        tol: cli.tol,
        seed: cli.seed,
        samples: cli.samples,
    };
    let format = cli.format.to_format();
    match &cli.command {
        Command::Verify { suite } => {
            let rows = suites::run_suite(suite.name(), &ctx).map_err(|e| e.to_string())?;
            Ok(report(&rows, format))
        }
        Command::Barlow { sequence, nx, ny } => {
            let rows =
                suites::barlow_report(sequence, *nx, *ny, &ctx).map_err(|e| e.to_string())?;
            Ok(report(&rows, format))
        }
        Command::Export { shape, out } => {
            let p = shape_by_name(shape)?;
            std::fs::write(out, p.to_off_string())
                .map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            eprintln!(
                "wrote {} ({} vertices, {} faces)",
                out.display(),
                p.vertices.len(),
                p.faces.len()
            );
            Ok(true)
        }
        Command::Profile {
            lemma,
            theta,
            h,
            grid,
        } => match lemma {
            1 => profile_fill(*theta, *grid, format),
            2 => {
                let h = h.ok_or("profile family 2 needs --h")?;
                profile_split(*theta, h, *grid, format)
            }
            other => Err(format!("unknown profile family {other}; choose 1 or 2")),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
