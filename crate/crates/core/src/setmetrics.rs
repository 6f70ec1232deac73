//! Hausdorff distances between discretized sets, exact Euclidean distance
//! transforms, pointwise distance sequences, and convergence sweeps over `n`.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exec::{fill_rows, map_indices, Exec};
use crate::limitsets::{rasterize_filled_julia_with, rasterize_kinf_with, GridSpec, RasterMask, Sampling};
use crate::orbits::{escape_radius, EscapeParams};
use crate::poly::{unit_circle, Complex, Polynomial, PowerPlusQMap};

/// Euclidean distance (plane units) from every pixel center to the nearest
/// source pixel center, with the index of that source.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceField {
    pub grid: GridSpec,
    dist: Vec<f64>,
    nearest: Vec<usize>,
}

impl DistanceField {
    pub fn distances(&self) -> &[f64] {
        &self.dist
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.dist[self.grid.index(i, j)]
    }

    /// Grid index of the source nearest to pixel `(i, j)`.
    pub fn nearest_source(&self, i: usize, j: usize) -> usize {
        self.nearest[self.grid.index(i, j)]
    }

    pub fn max_over(&self, flags: &[bool]) -> f64 {
        self.dist
            .iter()
            .zip(flags)
            .filter(|(_, &f)| f)
            .map(|(&d, _)| d)
            .fold(0.0, f64::max)
    }
}

/// One-dimensional squared distance transform by the lower envelope of
/// parabolas. `f[k]` is `+∞` away from sources; `weight` scales squared index
/// offsets into plane units. Returns values and argmin indices.
fn envelope_1d(f: &[f64], weight: f64) -> (Vec<f64>, Vec<usize>) {
    let n = f.len();
    let mut out = vec![f64::INFINITY; n];
    let mut arg = vec![usize::MAX; n];
    let finite: Vec<usize> = (0..n).filter(|&k| f[k].is_finite()).collect();
    if finite.is_empty() {
        return (out, arg);
    }
    // parabola vertices and the boundaries between their regions
    let mut v: Vec<usize> = Vec::with_capacity(finite.len());
    let mut z: Vec<f64> = Vec::with_capacity(finite.len() + 1);
    let intersect = |a: usize, b: usize| {
        let (a_f, b_f) = (a as f64, b as f64);
        ((f[b] / weight + b_f * b_f) - (f[a] / weight + a_f * a_f)) / (2.0 * (b_f - a_f))
    };
    for &q in &finite {
        while let Some(&last) = v.last() {
            let s = intersect(last, q);
            if s <= *z.last().unwrap() {
                v.pop();
                z.pop();
            } else {
                break;
            }
        }
        if v.is_empty() {
            v.push(q);
            z.push(f64::NEG_INFINITY);
        } else {
            let s = intersect(*v.last().unwrap(), q);
            v.push(q);
            z.push(s);
        }
    }
    z.push(f64::INFINITY);
    let mut k = 0;
    for (q, (o, a)) in out.iter_mut().zip(arg.iter_mut()).enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as f64 - v[k] as f64;
        *o = weight * d * d + f[v[k]];
        *a = v[k];
    }
    (out, arg)
}

/// Exact Euclidean distance transform of the pixels flagged in `sources`
/// (grid order), by two separable lower-envelope passes.
pub fn distance_transform(sources: &[bool], grid: &GridSpec) -> Result<DistanceField> {
    distance_transform_with(sources, grid, Exec::default())
}

pub fn distance_transform_with(sources: &[bool], grid: &GridSpec, exec: Exec) -> Result<DistanceField> {
    if sources.len() != grid.len() {
        return Err(Error::InvalidArgument("source flags do not match the grid".into()));
    }
    if !sources.iter().any(|&s| s) {
        return Err(Error::EmptySource);
    }
    let (cols, rows) = (grid.cols, grid.rows);
    let wy = grid.pixel_height() * grid.pixel_height();
    let wx = grid.pixel_width() * grid.pixel_width();

    // columns: squared vertical distance to the nearest source in the column
    let columns: Vec<(Vec<f64>, Vec<usize>)> = map_indices(exec, cols, |i| {
        let f: Vec<f64> = (0..rows)
            .map(|j| if sources[grid.index(i, j)] { 0.0 } else { f64::INFINITY })
            .collect();
        envelope_1d(&f, wy)
    });

    // rows: combine horizontally
    let mut cells = vec![(0.0, 0usize); grid.len()];
    fill_rows(exec, &mut cells, cols, |j, row| {
        let f: Vec<f64> = (0..cols).map(|i| columns[i].0[j]).collect();
        let (d2, arg) = envelope_1d(&f, wx);
        for (i, cell) in row.iter_mut().enumerate() {
            let src_i = arg[i];
            let src_j = columns[src_i].1[j];
            *cell = (d2[i].sqrt(), grid.index(src_i, src_j));
        }
    });
    let (dist, nearest) = cells.into_iter().unzip();
    Ok(DistanceField {
        grid: *grid,
        dist,
        nearest,
    })
}

/// `sup_{a∈A} inf_{b∈B} |a - b|`, exact, with early exit per `a`.
pub fn directed_hausdorff(a: &[Complex], b: &[Complex]) -> f64 {
    let mut cmax: f64 = 0.0;
    for &x in a {
        let mut cmin = f64::INFINITY;
        for &y in b {
            let d = (x - y).norm_sqr();
            if d < cmin {
                cmin = d;
                if cmin <= cmax {
                    break;
                }
            }
        }
        cmax = cmax.max(cmin);
    }
    cmax.sqrt()
}

/// Hausdorff distance between finite point sets.
pub fn hausdorff_points(a: &[Complex], b: &[Complex]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(directed_hausdorff(a, b).max(directed_hausdorff(b, a)))
}

/// Hausdorff distance between two flagged pixel sets on the same grid.
pub fn hausdorff_masks(a: &[bool], b: &[bool], grid: &GridSpec) -> Result<f64> {
    if !a.iter().any(|&x| x) || !b.iter().any(|&x| x) {
        return Err(Error::EmptySet);
    }
    let da = distance_transform(a, grid)?;
    let db = distance_transform(b, grid)?;
    Ok(db.max_over(a).max(da.max_over(b)))
}

/// Exact distance from an arbitrary point to the flagged pixel centers.
///
/// The distance field gives an upper bound through the nearest sources of the
/// pixels around `z`; only the box of that radius is then scanned.
pub fn distance_to_pixels(z: Complex, flags: &[bool], field: &DistanceField) -> f64 {
    let g = &field.grid;
    let clamp = |v: f64, hi: usize| (v.max(0.0) as usize).min(hi - 1);
    let [xmin, _, ymin, _] = g.window();
    let ci = clamp(((z.re - xmin) / g.pixel_width()).floor(), g.cols);
    let cj = clamp(((z.im - ymin) / g.pixel_height()).floor(), g.rows);
    let mut best = f64::INFINITY;
    for j in cj.saturating_sub(1)..=(cj + 1).min(g.rows - 1) {
        for i in ci.saturating_sub(1)..=(ci + 1).min(g.cols - 1) {
            let s = field.nearest_source(i, j);
            best = best.min((z - g.pixel_center(s % g.cols, s / g.cols)).norm());
        }
    }
    let lo_i = clamp(((z.re - best - xmin) / g.pixel_width()).floor(), g.cols);
    let hi_i = clamp(((z.re + best - xmin) / g.pixel_width()).ceil(), g.cols);
    let lo_j = clamp(((z.im - best - ymin) / g.pixel_height()).floor(), g.rows);
    let hi_j = clamp(((z.im + best - ymin) / g.pixel_height()).ceil(), g.rows);
    for j in lo_j..=hi_j {
        for i in lo_i..=hi_i {
            if flags[g.index(i, j)] {
                best = best.min((z - g.pixel_center(i, j)).norm());
            }
        }
    }
    best
}

/// Closed unit disk or unit circle, known analytically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Analytic {
    ClosedDisk,
    Circle,
}

impl Analytic {
    pub fn distance(self, z: Complex) -> f64 {
        let r = z.norm();
        match self {
            Analytic::ClosedDisk => (r - 1.0).max(0.0),
            Analytic::Circle => (r - 1.0).abs(),
        }
    }

    /// Points representing the set at the resolution of `grid`: the circle
    /// at `4·cols` points, plus every pixel center of the disk for
    /// [`Analytic::ClosedDisk`].
    pub fn samples(self, grid: &GridSpec) -> Vec<Complex> {
        let mut pts: Vec<Complex> = unit_circle(4 * grid.cols).collect();
        if self == Analytic::ClosedDisk {
            for j in 0..grid.rows {
                for i in 0..grid.cols {
                    let z = grid.pixel_center(i, j);
                    if z.norm() <= 1.0 {
                        pts.push(z);
                    }
                }
            }
        }
        pts
    }
}

/// Hausdorff distance between flagged pixel centers and an analytic set.
pub fn hausdorff_to_analytic(flags: &[bool], grid: &GridSpec, target: Analytic) -> Result<f64> {
    if !flags.iter().any(|&x| x) {
        return Err(Error::EmptySet);
    }
    let from_mask = flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(k, _)| target.distance(grid.pixel_center(k % grid.cols, k / grid.cols)))
        .fold(0.0, f64::max);
    let field = distance_transform(flags, grid)?;
    let from_target = target
        .samples(grid)
        .into_iter()
        .map(|z| distance_to_pixels(z, flags, &field))
        .fold(0.0, f64::max);
    Ok(from_mask.max(from_target))
}

/// `d(z, members(mask))` for each mask: the raw sequence behind lower and
/// upper set-limit membership of `z`.
pub fn pointwise_distance_sequence(z: Complex, masks: &[RasterMask]) -> Result<Vec<f64>> {
    if masks.is_empty() {
        return Err(Error::EmptySet);
    }
    masks
        .iter()
        .map(|m| {
            let pts = m.member_points();
            if pts.is_empty() {
                return Err(Error::EmptySet);
            }
            Ok(pts.iter().map(|p| (p - z).norm()).fold(f64::INFINITY, f64::min))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepTarget {
    ClosedDisk,
    Circle,
    KInfinity,
}

impl SweepTarget {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepTarget::ClosedDisk => "disk",
            SweepTarget::Circle => "circle",
            SweepTarget::KInfinity => "kinf",
        }
    }
}

impl fmt::Display for SweepTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "disk" | "closeddisk" => Ok(SweepTarget::ClosedDisk),
            "circle" => Ok(SweepTarget::Circle),
            "kinf" | "kinfinity" => Ok(SweepTarget::KInfinity),
            _ => Err(Error::Parse(format!("unknown target `{s}` (expected disk, circle or kinf)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: u32,
    pub d_h: f64,
    pub target: SweepTarget,
    pub grid_res: usize,
    pub runtime_ms: u64,
    /// The rasterized `K(f_n)`, kept for downstream checks.
    pub mask: RasterMask,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepOptions {
    pub shells: u32,
    pub sampling: Sampling,
    pub exec: Exec,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            shells: crate::limitsets::DEFAULT_SHELLS,
            sampling: Sampling::default(),
            exec: Exec::default(),
        }
    }
}

pub fn convergence_sweep(
    q: &Polynomial,
    n_list: &[u32],
    grid: &GridSpec,
    target: SweepTarget,
    p: &EscapeParams,
) -> Result<Vec<SweepRow>> {
    convergence_sweep_with(q, n_list, grid, target, p, &SweepOptions::default())
}

/// For each `n`, rasterizes `K(f_n)` and measures its Hausdorff distance to
/// the target. Each `f_n` uses at least its own escape radius; the `K_∞`
/// raster is built once from `p.band_delta`, `p.kq_iter` and `opts.shells`.
pub fn convergence_sweep_with(
    q: &Polynomial,
    n_list: &[u32],
    grid: &GridSpec,
    target: SweepTarget,
    p: &EscapeParams,
    opts: &SweepOptions,
) -> Result<Vec<SweepRow>> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("n values must be strictly ascending".into()));
    }
    let maps = n_list
        .iter()
        .map(|&n| PowerPlusQMap::new(n, q.clone()))
        .collect::<Result<Vec<_>>>()?;
    let kinf = match target {
        SweepTarget::KInfinity => Some(rasterize_kinf_with(q, grid, p, opts.shells, opts.exec)?.member_flags()),
        _ => None,
    };
    let mut rows = Vec::with_capacity(maps.len());
    for f in &maps {
        let start = Instant::now();
        let params = EscapeParams {
            escape_radius: p.escape_radius.max(escape_radius(f)),
            ..*p
        };
        let mask = rasterize_filled_julia_with(f, grid, &params, opts.sampling, opts.exec);
        let flags = mask.member_flags();
        let d_h = match target {
            SweepTarget::ClosedDisk => hausdorff_to_analytic(&flags, grid, Analytic::ClosedDisk)?,
            SweepTarget::Circle => hausdorff_to_analytic(&flags, grid, Analytic::Circle)?,
            SweepTarget::KInfinity => hausdorff_masks(&flags, kinf.as_deref().unwrap(), grid)?,
        };
        rows.push(SweepRow {
            n: f.n(),
            d_h,
            target,
            grid_res: grid.cols,
            runtime_ms: start.elapsed().as_millis() as u64,
            mask,
        });
    }
    Ok(rows)
}

pub const SWEEP_CSV_HEADER: &str = "n,d_hausdorff,target,grid,runtime_ms";

/// Writes the sweep CSV. Without `timing` the runtime column is `0`, which
/// keeps the file reproducible byte for byte.
pub fn write_sweep_csv(rows: &[SweepRow], timing: bool, mut w: impl Write) -> io::Result<()> {
    writeln!(w, "{SWEEP_CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{:.12},{},{},{}",
            r.n,
            r.d_h,
            r.target,
            r.grid_res,
            if timing { r.runtime_ms } else { 0 }
        )?;
    }
    Ok(())
}
