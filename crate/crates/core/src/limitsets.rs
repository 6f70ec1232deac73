//! Rasterization of `K(f_n)` and `K_∞` over a window of the complex plane.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::exec::{fill_rows, Exec};
use crate::orbits::{classify_q_orbit, escape_time_with_derivative, Escape, EscapeParams, OrbitClass};
use crate::poly::{Complex, Polynomial, PowerPlusQMap};

pub const DEFAULT_SHELLS: u32 = 8;
pub const DEFAULT_HALF_EXTENT: f64 = 1.5;

/// A rectangular window discretized into `cols × rows` pixels. Pixel `(i, j)`
/// has its center at
/// `center + ((i+½)/cols − ½)·width + i·((j+½)/rows − ½)·height`,
/// so `j` grows along the imaginary axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub center: Complex,
    pub width: f64,
    pub height: f64,
    pub cols: usize,
    pub rows: usize,
}

impl GridSpec {
    pub fn new(center: Complex, width: f64, height: f64, cols: usize, rows: usize) -> Result<Self> {
        if !center.is_finite() || !(width > 0.0) || !(height > 0.0) || !width.is_finite() || !height.is_finite() {
            return Err(Error::InvalidArgument("grid window must be finite with positive size".into()));
        }
        if cols == 0 || rows == 0 {
            return Err(Error::InvalidArgument("grid must have at least one pixel".into()));
        }
        Ok(Self {
            center,
            width,
            height,
            cols,
            rows,
        })
    }

    /// Window given as `xmin, xmax, ymin, ymax`.
    pub fn from_window(window: [f64; 4], cols: usize, rows: usize) -> Result<Self> {
        let [xmin, xmax, ymin, ymax] = window;
        Self::new(
            Complex::new(0.5 * (xmin + xmax), 0.5 * (ymin + ymax)),
            xmax - xmin,
            ymax - ymin,
            cols,
            rows,
        )
    }

    /// `res × res` pixels over `[-h, h]²`.
    pub fn square(half_extent: f64, res: usize) -> Result<Self> {
        Self::from_window([-half_extent, half_extent, -half_extent, half_extent], res, res)
    }

    pub fn window(&self) -> [f64; 4] {
        [
            self.center.re - 0.5 * self.width,
            self.center.re + 0.5 * self.width,
            self.center.im - 0.5 * self.height,
            self.center.im + 0.5 * self.height,
        ]
    }

    pub fn len(&self) -> usize {
        self.cols * self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pixel_width(&self) -> f64 {
        self.width / self.cols as f64
    }

    pub fn pixel_height(&self) -> f64 {
        self.height / self.rows as f64
    }

    pub fn pixel_diagonal(&self) -> f64 {
        self.pixel_width().hypot(self.pixel_height())
    }

    pub fn pixel_center(&self, i: usize, j: usize) -> Complex {
        let x = ((i as f64 + 0.5) / self.cols as f64 - 0.5) * self.width;
        let y = ((j as f64 + 0.5) / self.rows as f64 - 0.5) * self.height;
        self.center + Complex::new(x, y)
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.cols + i
    }

    /// The pixel whose cell contains `z`, if any.
    pub fn locate(&self, z: Complex) -> Option<(usize, usize)> {
        let [xmin, _, ymin, _] = self.window();
        let fi = ((z.re - xmin) / self.pixel_width()).floor();
        let fj = ((z.im - ymin) / self.pixel_height()).floor();
        if fi >= 0.0 && fj >= 0.0 && fi < self.cols as f64 && fj < self.rows as f64 {
            Some((fi as usize, fj as usize))
        } else {
            None
        }
    }

    /// Default shell band half-width: two pixel diagonals, capped below ½.
    pub fn default_band_delta(&self) -> f64 {
        (2.0 * self.pixel_diagonal()).min(0.45)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// Bounded under `f_n`.
    Inside,
    /// Escaped at the given step (`f_n`), or left the disk at that `q`-step.
    Outside(u32),
    /// In `K_q`.
    Kq,
    /// On the shell `S_j`.
    Shell(u32),
}

impl Label {
    /// Member of the set the mask represents (`K(f_n)` or `K_∞`).
    pub fn is_member(self) -> bool {
        !matches!(self, Label::Outside(_))
    }

    /// Gray level used by PGM export.
    pub fn gray(self) -> u8 {
        match self {
            Label::Inside | Label::Kq => 0,
            Label::Outside(_) => 255,
            Label::Shell(j) => 40 + 20 * j.min(8) as u8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaskKind {
    FilledJulia,
    /// `truncated` counts pixels that landed on shells beyond `max_shell`.
    KInfinity { max_shell: u32, truncated: usize },
}

/// How pixels of `K(f_n)` are decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Sampling {
    /// Inside iff the pixel center stays bounded.
    PixelCenter,
    /// Also Inside when the exterior distance estimate at an escaping center
    /// is below half a pixel diagonal, so that thin or totally disconnected
    /// parts of `K(f_n)` still register.
    #[default]
    DistanceEstimate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RasterMask {
    pub grid: GridSpec,
    pub kind: MaskKind,
    labels: Vec<Label>,
}

impl RasterMask {
    pub fn from_labels(grid: GridSpec, kind: MaskKind, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != grid.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for a {}x{} grid",
                labels.len(),
                grid.cols,
                grid.rows
            )));
        }
        let allowed = |l: &Label| match kind {
            MaskKind::FilledJulia => matches!(l, Label::Inside | Label::Outside(_)),
            MaskKind::KInfinity { .. } => matches!(l, Label::Kq | Label::Shell(_) | Label::Outside(_)),
        };
        if !labels.iter().all(allowed) {
            return Err(Error::InvalidArgument("labels mix vocabularies".into()));
        }
        Ok(Self { grid, kind, labels })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[self.grid.index(i, j)]
    }

    pub fn count(&self, pred: impl Fn(Label) -> bool) -> usize {
        self.labels.iter().filter(|&&l| pred(l)).count()
    }

    pub fn member_count(&self) -> usize {
        self.count(Label::is_member)
    }

    pub fn member_fraction(&self) -> f64 {
        self.member_count() as f64 / self.labels.len() as f64
    }

    /// Pixel centers whose label satisfies `pred`.
    pub fn points(&self, pred: impl Fn(Label) -> bool) -> Vec<Complex> {
        let g = &self.grid;
        (0..g.rows)
            .flat_map(|j| (0..g.cols).map(move |i| (i, j)))
            .filter(|&(i, j)| pred(self.label(i, j)))
            .map(|(i, j)| g.pixel_center(i, j))
            .collect()
    }

    pub fn member_points(&self) -> Vec<Complex> {
        self.points(Label::is_member)
    }

    pub fn member_flags(&self) -> Vec<bool> {
        self.labels.iter().map(|l| l.is_member()).collect()
    }

    /// PGM bytes (`P5`, maxval 255), top row (largest imaginary part) first.
    pub fn to_pgm(&self) -> Vec<u8> {
        let g = &self.grid;
        let mut out = format!("P5\n{} {}\n255\n", g.cols, g.rows).into_bytes();
        out.reserve(g.len());
        for j in (0..g.rows).rev() {
            out.extend((0..g.cols).map(|i| self.label(i, j).gray()));
        }
        out
    }

    pub fn write_pgm(&self, mut w: impl Write) -> io::Result<()> {
        w.write_all(&self.to_pgm())
    }
}

/// Gray image decoded from a binary PGM, rows top first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    pub cols: usize,
    pub rows: usize,
    pub pixels: Vec<u8>,
}

impl GrayImage {
    /// Membership flags in grid order (row 0 at the bottom) for gray levels
    /// other than white.
    pub fn member_flags(&self) -> Vec<bool> {
        let mut flags = Vec::with_capacity(self.pixels.len());
        for j in 0..self.rows {
            let row = self.rows - 1 - j;
            flags.extend(self.pixels[row * self.cols..(row + 1) * self.cols].iter().map(|&v| v != 255));
        }
        flags
    }
}

/// Parses a binary (`P5`) PGM with maxval 255.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let bad = |m: &str| Error::Parse(format!("PGM: {m}"));
    let mut pos = 0;
    let mut fields = Vec::with_capacity(4);
    while fields.len() < 4 {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b'#') {
            if bytes[pos] == b'#' {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            } else {
                pos += 1;
            }
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(bad("truncated header"));
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).map_err(|_| bad("header is not text"))?);
    }
    if fields[0] != "P5" {
        return Err(bad("only binary P5 is supported"));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad header number"));
    let (cols, rows, maxval) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
    if maxval != 255 {
        return Err(bad("maxval must be 255"));
    }
    // exactly one whitespace byte separates the header from the raster
    pos += 1;
    let data = bytes.get(pos..pos + cols * rows).ok_or_else(|| bad("raster shorter than header says"))?;
    Ok(GrayImage {
        cols,
        rows,
        pixels: data.to_vec(),
    })
}

/// Exterior distance estimate `|z_k| ln|z_k| / |z_k'|` after pushing the
/// escaped orbit a few more steps outward (without overflowing).
fn distance_estimate(f: &PowerPlusQMap, mut z: Complex, mut dz: Complex) -> f64 {
    let n = f.n() as f64;
    for _ in 0..8 {
        let r = z.norm();
        if !(r.is_finite() && r > 1.0) || n * r.ln() > 500.0 || !dz.is_finite() {
            break;
        }
        let (fz, dfz) = f.eval_with_derivative(z);
        if !fz.is_finite() || !(dz * dfz).is_finite() {
            break;
        }
        dz *= dfz;
        z = fz;
    }
    let r = z.norm();
    if !dz.is_finite() {
        return 0.0;
    }
    if !(r > 1.0) || !r.is_finite() {
        return f64::INFINITY;
    }
    (r.ln() + r.ln().ln() - dz.norm().ln()).exp()
}

pub fn rasterize_filled_julia(f: &PowerPlusQMap, grid: &GridSpec, p: &EscapeParams) -> RasterMask {
    rasterize_filled_julia_with(f, grid, p, Sampling::default(), Exec::default())
}

pub fn rasterize_filled_julia_with(
    f: &PowerPlusQMap,
    grid: &GridSpec,
    p: &EscapeParams,
    sampling: Sampling,
    exec: Exec,
) -> RasterMask {
    let threshold = 0.5 * grid.pixel_diagonal();
    let mut labels = vec![Label::Outside(0); grid.len()];
    fill_rows(exec, &mut labels, grid.cols, |j, row| {
        for (i, out) in row.iter_mut().enumerate() {
            let (verdict, z, dz) = escape_time_with_derivative(f, grid.pixel_center(i, j), p);
            *out = match verdict {
                Escape::Bounded => Label::Inside,
                Escape::Escaped(step) => {
                    if sampling == Sampling::DistanceEstimate && step > 0 && distance_estimate(f, z, dz) < threshold {
                        Label::Inside
                    } else {
                        Label::Outside(step)
                    }
                }
            };
        }
    });
    RasterMask {
        grid: *grid,
        kind: MaskKind::FilledJulia,
        labels,
    }
}

pub fn rasterize_kinf(q: &Polynomial, grid: &GridSpec, p: &EscapeParams, max_shell: u32) -> Result<RasterMask> {
    rasterize_kinf_with(q, grid, p, max_shell, Exec::default())
}

/// Labels each pixel by [`classify_q_orbit`]: `Kq`, `Shell(j)` for
/// `j ≤ max_shell`, otherwise `Outside`. Deeper shells are truncated to
/// `Outside` and counted in the mask kind.
pub fn rasterize_kinf_with(
    q: &Polynomial,
    grid: &GridSpec,
    p: &EscapeParams,
    max_shell: u32,
    exec: Exec,
) -> Result<RasterMask> {
    if max_shell == 0 {
        return Err(Error::InvalidArgument("at least one shell level is required".into()));
    }
    // (label, truncated shell) per pixel
    let mut cells = vec![(Label::Outside(0), false); grid.len()];
    fill_rows(exec, &mut cells, grid.cols, |j, row| {
        for (i, out) in row.iter_mut().enumerate() {
            *out = match classify_q_orbit(q, grid.pixel_center(i, j), p) {
                OrbitClass::InteriorKq => (Label::Kq, false),
                OrbitClass::OnShell(s) if s <= max_shell => (Label::Shell(s), false),
                OrbitClass::OnShell(s) => (Label::Outside(s), true),
                OrbitClass::Escaped(s) => (Label::Outside(s), false),
                OrbitClass::Undetermined => (Label::Outside(0), false),
            };
        }
    });
    let truncated = cells.iter().filter(|c| c.1).count();
    let labels = cells.into_iter().map(|c| c.0).collect();
    Ok(RasterMask {
        grid: *grid,
        kind: MaskKind::KInfinity { max_shell, truncated },
        labels,
    })
}

/// Pixels satisfying `pred` that touch the grid edge or have a 4-neighbor
/// failing `pred`.
pub fn boundary_pixels(m: &RasterMask, pred: impl Fn(Label) -> bool) -> Vec<(usize, usize)> {
    let g = &m.grid;
    let mut out = Vec::new();
    for j in 0..g.rows {
        for i in 0..g.cols {
            if !pred(m.label(i, j)) {
                continue;
            }
            let edge = i == 0 || j == 0 || i + 1 == g.cols || j + 1 == g.rows;
            if edge
                || !pred(m.label(i - 1, j))
                || !pred(m.label(i + 1, j))
                || !pred(m.label(i, j - 1))
                || !pred(m.label(i, j + 1))
            {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn mask_boundary(m: &RasterMask, pred: impl Fn(Label) -> bool) -> Vec<Complex> {
    boundary_pixels(m, pred)
        .into_iter()
        .map(|(i, j)| m.grid.pixel_center(i, j))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::escape_time;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn grid_mapping() {
        let g = GridSpec::square(1.5, 512).unwrap();
        assert_eq!(g.pixel_center(0, 0), c(-1.5 + 1.5 / 512.0, -1.5 + 1.5 / 512.0));
        assert_eq!(g.locate(g.pixel_center(17, 300)), Some((17, 300)));
        assert_eq!(g.locate(c(2.0, 0.0)), None);
        assert!((g.pixel_diagonal() - 3.0 / 512.0 * 2f64.sqrt()).abs() < 1e-15);
        let g = GridSpec::from_window([-1.0, 3.0, 0.0, 1.0], 4, 2).unwrap();
        assert_eq!(g.pixel_center(3, 1), c(2.5, 0.75));
        assert!(GridSpec::from_window([1.0, 1.0, 0.0, 1.0], 4, 2).is_err());
        assert!(GridSpec::square(1.0, 0).is_err());
    }

    #[test]
    fn squaring_map_gives_unit_disk() {
        let f = PowerPlusQMap::new(2, Polynomial::zero()).unwrap();
        let g = GridSpec::square(2.0, 101).unwrap();
        let m = rasterize_filled_julia_with(&f, &g, &EscapeParams::for_map(&f), Sampling::PixelCenter, Exec::Sequential);
        assert_eq!(m.label(50, 50), Label::Inside);
        let (i, j) = g.locate(c(1.5, 0.0)).unwrap();
        assert!(matches!(m.label(i, j), Label::Outside(_)));
        let frac = m.member_fraction();
        let expect = std::f64::consts::PI / 16.0;
        assert!((frac - expect).abs() < 0.01, "{frac}");
    }

    #[test]
    fn pixel_center_labels_match_escape_time() {
        let q = Polynomial::from_pairs(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]).unwrap();
        let f = PowerPlusQMap::new(12, q).unwrap();
        let g = GridSpec::square(1.5, 40).unwrap();
        let p = EscapeParams::for_map(&f);
        let m = rasterize_filled_julia_with(&f, &g, &p, Sampling::PixelCenter, Exec::Parallel);
        for j in 0..g.rows {
            for i in 0..g.cols {
                let expect = match escape_time(&f, g.pixel_center(i, j), &p) {
                    Escape::Bounded => Label::Inside,
                    Escape::Escaped(s) => Label::Outside(s),
                };
                assert_eq!(m.label(i, j), expect);
            }
        }
        // the distance estimate only ever adds pixels
        let dem = rasterize_filled_julia_with(&f, &g, &p, Sampling::DistanceEstimate, Exec::Parallel);
        for (a, b) in m.labels().iter().zip(dem.labels()) {
            if a.is_member() {
                assert!(b.is_member());
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let q = Polynomial::from_pairs(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]).unwrap();
        let f = PowerPlusQMap::new(25, q.clone()).unwrap();
        let g = GridSpec::square(1.5, 96).unwrap();
        let p = EscapeParams::for_map(&f);
        let a = rasterize_filled_julia_with(&f, &g, &p, Sampling::DistanceEstimate, Exec::Sequential);
        let b = rasterize_filled_julia_with(&f, &g, &p, Sampling::DistanceEstimate, Exec::Parallel);
        assert_eq!(a.to_pgm(), b.to_pgm());
        let p = EscapeParams { band_delta: g.default_band_delta(), ..p };
        let a = rasterize_kinf_with(&q, &g, &p, 8, Exec::Sequential).unwrap();
        let b = rasterize_kinf_with(&q, &g, &p, 8, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kinf_of_small_constant_is_disk_with_rim() {
        let q = Polynomial::constant(c(0.21, 0.017));
        let g = GridSpec::square(1.5, 128).unwrap();
        let p = EscapeParams { band_delta: g.default_band_delta(), ..EscapeParams::default() };
        let m = rasterize_kinf(&q, &g, &p, 8).unwrap();
        for j in 0..g.rows {
            for i in 0..g.cols {
                let r = g.pixel_center(i, j).norm();
                let l = m.label(i, j);
                if r < 1.0 - p.band_delta {
                    assert_eq!(l, Label::Kq);
                } else if r <= 1.0 + p.band_delta {
                    assert_eq!(l, Label::Shell(0));
                } else {
                    assert_eq!(l, Label::Outside(0));
                }
            }
        }
    }

    #[test]
    fn kinf_of_large_constant_is_a_rim() {
        let q = Polynomial::constant(c(1.41, 1.17));
        let g = GridSpec::square(1.5, 128).unwrap();
        let p = EscapeParams { band_delta: g.default_band_delta(), ..EscapeParams::default() };
        let m = rasterize_kinf(&q, &g, &p, 8).unwrap();
        assert_eq!(m.count(|l| l == Label::Kq), 0);
        assert!(m.count(|l| l == Label::Shell(0)) > 0);
        assert_eq!(m.count(|l| matches!(l, Label::Shell(j) if j > 0)), 0);
    }

    #[test]
    fn kinf_of_rabbit_has_kq_and_shells() {
        let q = Polynomial::from_pairs(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]).unwrap();
        let g = GridSpec::square(1.5, 128).unwrap();
        let p = EscapeParams { band_delta: g.default_band_delta(), ..EscapeParams::default() };
        let m = rasterize_kinf(&q, &g, &p, 8).unwrap();
        assert!(m.count(|l| l == Label::Kq) > 0);
        assert!(m.count(|l| matches!(l, Label::Shell(j) if j >= 1)) > 0);
        assert!(rasterize_kinf(&q, &g, &p, 0).is_err());
    }

    #[test]
    fn boundary_examples() {
        let g = GridSpec::square(1.0, 5).unwrap();
        let all = RasterMask::from_labels(g, MaskKind::FilledJulia, vec![Label::Inside; 25]).unwrap();
        let b = boundary_pixels(&all, Label::is_member);
        assert_eq!(b.len(), 16);
        assert!(b.iter().all(|&(i, j)| i == 0 || j == 0 || i == 4 || j == 4));

        let mut labels = vec![Label::Outside(1); 25];
        labels[g.index(2, 3)] = Label::Inside;
        let one = RasterMask::from_labels(g, MaskKind::FilledJulia, labels).unwrap();
        assert_eq!(mask_boundary(&one, Label::is_member), vec![g.pixel_center(2, 3)]);
    }

    #[test]
    fn disk_boundary_length() {
        let g = GridSpec::square(1.5, 512).unwrap();
        let labels = (0..g.len())
            .map(|k| {
                let z = g.pixel_center(k % g.cols, k / g.cols);
                if z.norm() <= 1.0 {
                    Label::Inside
                } else {
                    Label::Outside(0)
                }
            })
            .collect();
        let m = RasterMask::from_labels(g, MaskKind::FilledJulia, labels).unwrap();
        let n = boundary_pixels(&m, Label::is_member).len() as f64;
        // A 4-neighbor boundary meets each row and column crossing once, so its
        // pixel count is ∮ max(|cos θ|, |sin θ|) ds / h = 4√2·r/h, about 0.90 of
        // the circumference π·diameter in pixels.
        let r_px = 1.0 / g.pixel_width();
        let expect = 4.0 * std::f64::consts::SQRT_2 * r_px;
        assert!((n - expect).abs() < 0.02 * expect, "{n} vs {expect}");
        let circumference = std::f64::consts::PI * 2.0 * r_px;
        assert!((n - circumference).abs() < 0.11 * circumference);
    }

    #[test]
    fn mixed_vocabulary_rejected() {
        let g = GridSpec::square(1.0, 2).unwrap();
        let labels = vec![Label::Inside, Label::Kq, Label::Outside(0), Label::Outside(0)];
        assert!(RasterMask::from_labels(g, MaskKind::FilledJulia, labels).is_err());
        assert!(RasterMask::from_labels(g, MaskKind::FilledJulia, vec![Label::Inside; 3]).is_err());
    }

    #[test]
    fn pgm_layout_and_round_trip() {
        let g = GridSpec::square(1.0, 3).unwrap();
        let labels = vec![
            Label::Kq,
            Label::Shell(0),
            Label::Shell(9),
            Label::Shell(1),
            Label::Outside(2),
            Label::Kq,
            Label::Outside(0),
            Label::Outside(0),
            Label::Shell(8),
        ];
        let m = RasterMask::from_labels(g, MaskKind::KInfinity { max_shell: 9, truncated: 0 }, labels).unwrap();
        let bytes = m.to_pgm();
        let header = b"P5\n3 3\n255\n";
        assert_eq!(&bytes[..header.len()], header);
        // top row first: row j=2, then j=1, then j=0
        assert_eq!(&bytes[header.len()..], &[255, 255, 200, 60, 255, 0, 0, 40, 200]);
        let img = read_pgm(&bytes).unwrap();
        assert_eq!((img.cols, img.rows), (3, 3));
        assert_eq!(img.member_flags(), m.member_flags());
        assert!(read_pgm(b"P2\n1 1\n255\n\x00").is_err());
        assert!(read_pgm(b"P5\n2 2\n255\n\x00").is_err());
        let commented = read_pgm(b"P5\n# note\n1 1\n255\n\x07").unwrap();
        assert_eq!(commented.pixels, vec![7]);
    }
}
