//! Command-line grammar. Every value flag takes exactly one token so that a
//! run can be written back as flat `key=value` lines.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use julia_limits::setmetrics::SweepTarget;
use julia_limits::{Polynomial, Sampling};

#[derive(Parser, Debug)]
#[command(
    name = "julia-limits",
    version,
    about = "Filled Julia sets of z^n + q(z) and their limits as n grows",
    args_override_self = true,
    after_help = "Environment: JULIA_LIMIT_THREADS caps worker threads (0 = all cores)."
)]
pub struct Cli {
    /// Read flags from a key=value file (one per line, `#` comments); flags given on the command line win
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Print the effective configuration as key=value lines and exit
    #[arg(long, global = true)]
    pub dump_config: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rasterize the filled Julia set K(f_n) to a PGM mask
    RenderJulia(RenderJulia),
    /// Rasterize the limit set K_inf (K_q plus shells) to a PGM mask
    RenderKinf(RenderKinf),
    /// Hausdorff distance from K(f_n) to a target set for a list of n, as CSV
    Sweep(Sweep),
    /// Fixed points of f_n as CSV with clustering statistics
    FixedPoints(FixedPoints),
    /// Decide the limit regime of q
    Classify(Classify),
    /// Find the cycle a q-orbit settles on, optionally carried over to f_n
    Cycle(Cycle),
    /// Hausdorff distance between the member pixels of two PGM masks
    Distance(Distance),
}

#[derive(Args, Debug, Clone)]
#[group(skip)]
pub struct GridArgs {
    /// Plane window as xmin,xmax,ymin,ymax
    #[arg(long, default_value = "-1.5,1.5,-1.5,1.5", value_parser = parse_window, allow_hyphen_values = true)]
    pub window: [f64; 4],

    /// Raster size: N for N×N, or COLSxROWS
    #[arg(long, default_value = "512", value_parser = parse_grid)]
    pub grid: (usize, usize),
}

#[derive(Args, Debug, Clone)]
#[group(skip)]
pub struct IterArgs {
    /// Iteration budget for escape-time and cycle burn-in
    #[arg(long, default_value_t = 500)]
    pub max_iter: u32,

    /// Escape radius, or `auto` for the certified radius of f_n
    #[arg(long, default_value = "auto", value_parser = parse_auto)]
    pub escape_radius: ::std::option::Option<f64>,
}

#[derive(Args, Debug, Clone)]
#[group(skip)]
pub struct BandArgs {
    /// Shell band half-width around |z| = 1, or `auto` for two pixel diagonals
    #[arg(long, default_value = "auto", value_parser = parse_auto)]
    pub band_delta: ::std::option::Option<f64>,

    /// Iteration budget for classifying q-orbits
    #[arg(long, default_value_t = 200)]
    pub kq_iter: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SamplingArg {
    /// Pixel center bounded, or exterior distance estimate below half a pixel diagonal
    Dem,
    /// Pixel center bounded only
    Center,
}

impl From<SamplingArg> for Sampling {
    fn from(s: SamplingArg) -> Self {
        match s {
            SamplingArg::Dem => Sampling::DistanceEstimate,
            SamplingArg::Center => Sampling::PixelCenter,
        }
    }
}

#[derive(Args, Debug)]
pub struct RenderJulia {
    /// Coefficients of q, low to high, comma separated (e.g. `0.25+0.25i,0,1`)
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub q: Polynomial,

    /// Exponent n in z^n + q(z)
    #[arg(long)]
    pub n: u32,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub iter: IterArgs,

    /// Pixel membership rule
    #[arg(long, value_enum, default_value = "dem")]
    pub sampling: SamplingArg,

    /// PGM output path (`-` for stdout)
    #[arg(long)]
    pub out: PathBuf,

    /// Also write a PNG with the color palette, or `none`
    #[arg(long, default_value = "none", value_parser = parse_optional_path)]
    pub png: ::std::option::Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RenderKinf {
    /// Coefficients of q, low to high
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub q: Polynomial,

    /// Deepest shell kept; deeper shells become Outside
    #[arg(long, default_value_t = 8)]
    pub shells: u32,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub band: BandArgs,

    /// PGM output path (`-` for stdout)
    #[arg(long)]
    pub out: PathBuf,

    /// Also write a PNG with the color palette, or `none`
    #[arg(long, default_value = "none", value_parser = parse_optional_path)]
    pub png: ::std::option::Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Sweep {
    /// Coefficients of q, low to high
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub q: Polynomial,

    /// Strictly ascending list of n, comma separated
    #[arg(long, value_parser = parse_n_list)]
    pub n: ::std::vec::Vec<u32>,

    /// Target set: disk, circle or kinf
    #[arg(long, value_parser = parse_target)]
    pub target: SweepTarget,

    /// Deepest shell of the K_inf raster
    #[arg(long, default_value_t = 8)]
    pub shells: u32,

    #[command(flatten)]
    pub grid: GridArgs,

    #[command(flatten)]
    pub iter: IterArgs,

    #[command(flatten)]
    pub band: BandArgs,

    /// Pixel membership rule for K(f_n)
    #[arg(long, value_enum, default_value = "dem")]
    pub sampling: SamplingArg,

    /// Write measured runtimes; otherwise the runtime column is 0 and output is reproducible
    #[arg(long, default_value = "false", value_parser = parse_bool, action = clap::ArgAction::Set)]
    pub timing: bool,

    /// CSV output path (`-` for stdout)
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct FixedPoints {
    /// Coefficients of q, low to high
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub q: Polynomial,

    /// Exponent n in z^n + q(z)
    #[arg(long)]
    pub n: u32,

    /// Root-finder correction tolerance
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,

    /// Annulus half-width for the clustering statistics
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,

    /// CSV output path (`-` for stdout)
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct Classify {
    /// Coefficients of q, low to high (degree at least 2)
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub q: Polynomial,

    /// Circle samples for the certified modulus bounds
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,

    /// ||z|-1| below which a fixed point counts as on the circle
    #[arg(long, default_value_t = 1e-6)]
    pub circle_tol: f64,

    /// Burn-in for the critical orbits
    #[arg(long, default_value_t = 500)]
    pub max_iter: u32,

    /// Exclusion band around the circle for attracting cycles
    #[arg(long, default_value_t = 0.01)]
    pub band_delta: f64,
}

#[derive(Args, Debug)]
pub struct Cycle {
    /// Coefficients of q, low to high
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub q: Polynomial,

    /// Starting point of the q-orbit
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    pub z0: julia_limits::Complex,

    /// Longest period searched
    #[arg(long, default_value_t = 64)]
    pub max_period: usize,

    /// Burn-in before looking for a return
    #[arg(long, default_value_t = 500)]
    pub max_iter: u32,

    /// Carry the cycle over to f_n for this n, or `none`
    #[arg(long, default_value = "none", value_parser = parse_optional_u32)]
    pub n: ::std::option::Option<u32>,
}

#[derive(Args, Debug)]
pub struct Distance {
    /// First PGM mask; member pixels are those not white
    #[arg(long)]
    pub a: PathBuf,

    /// Second PGM mask on the same grid
    #[arg(long)]
    pub b: PathBuf,

    /// Plane window both masks cover, as xmin,xmax,ymin,ymax
    #[arg(long, default_value = "-1.5,1.5,-1.5,1.5", value_parser = parse_window, allow_hyphen_values = true)]
    pub window: [f64; 4],
}

fn parse_poly(s: &str) -> Result<Polynomial, String> {
    s.parse().map_err(|e: julia_limits::Error| e.to_string())
}

fn parse_complex(s: &str) -> Result<julia_limits::Complex, String> {
    julia_limits::poly::parse_complex(s).map_err(|e| e.to_string())
}

fn parse_window(s: &str) -> Result<[f64; 4], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("`{t}` is not a number")))
        .collect::<Result<_, _>>()?;
    let w: [f64; 4] = v.try_into().map_err(|_| "expected xmin,xmax,ymin,ymax".to_string())?;
    if !w.iter().all(|x| x.is_finite()) || !(w[0] < w[1] && w[2] < w[3]) {
        return Err("expected finite xmin<xmax and ymin<ymax".into());
    }
    Ok(w)
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let dim = |t: &str| match t.trim().parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("`{t}` is not a positive integer (expected N or COLSxROWS)")),
    };
    match s.split_once(['x', 'X']) {
        Some((c, r)) => Ok((dim(c)?, dim(r)?)),
        None => dim(s).map(|v| (v, v)),
    }
}

fn parse_auto(s: &str) -> Result<Option<f64>, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(None);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(Some(v)),
        _ => Err(format!("`{s}` is neither `auto` nor a positive number")),
    }
}

fn parse_optional_path(s: &str) -> Result<Option<PathBuf>, String> {
    Ok((s != "none").then(|| PathBuf::from(s)))
}

fn parse_optional_u32(s: &str) -> Result<Option<u32>, String> {
    if s == "none" {
        return Ok(None);
    }
    s.parse().map(Some).map_err(|_| format!("`{s}` is neither `none` nor an integer"))
}

fn parse_n_list(s: &str) -> Result<Vec<u32>, String> {
    let v: Vec<u32> = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not an integer")))
        .collect::<Result<_, _>>()?;
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err("n values must be strictly ascending".into());
    }
    Ok(v)
}

fn parse_target(s: &str) -> Result<SweepTarget, String> {
    s.parse().map_err(|e: julia_limits::Error| e.to_string())
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(format!("`{s}` is not true or false")),
    }
}
