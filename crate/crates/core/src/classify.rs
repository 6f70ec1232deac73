//! Regime classification of `q`: whether `K(f_n)` tends to the closed disk,
//! to the unit circle, or to the richer set `K_∞`, with certified modulus
//! bounds and a heuristic hyperbolicity check.

use std::fmt;

use crate::error::{Error, Result};
use crate::orbits::{detect_cycle_poly, escape_radius_poly, escape_time_with, CycleInfo, Escape, EscapeParams, Stability};
use crate::poly::{unit_circle, Complex, Polynomial};
use crate::roots::find_roots;

pub const DEFAULT_SAMPLES: usize = 4096;
pub const MIN_SAMPLES: usize = 64;
/// `||z| - 1|` below which a fixed point counts as lying on the circle.
pub const DEFAULT_CIRCLE_TOL: f64 = 1e-6;
pub const DEFAULT_MAX_PERIOD: usize = 64;
const ROOT_TOL: f64 = 1e-12;
/// Cycles with `|λ| > 1 - NEAR_INDIFFERENT` are treated as parabolic.
const NEAR_INDIFFERENT: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    DiskLimit,
    CircleLimit,
    KInfinityCandidate,
    Inconclusive,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hyperbolicity {
    LikelyHyperbolic,
    Unknown,
}

impl fmt::Display for Hyperbolicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HyperbolicityReport {
    pub tag: Hyperbolicity,
    /// Cycles reached from the critical points that stay bounded.
    pub cycles: Vec<CycleInfo>,
    /// Some cycle point lies within `2·band_delta` of the unit circle.
    pub near_circle: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub regime: Regime,
    /// Largest sampled `|q|` on the circle.
    pub max_mod_on_circle: f64,
    /// Smallest sampled `|q|` on the circle, or 0 when `q` has a zero in the disk.
    pub min_mod_on_disk: f64,
    pub circle_fixed_points: Vec<Complex>,
    pub hyperbolic: Hyperbolicity,
    pub near_circle_cycle: bool,
    /// Distance of the deciding certificate from 1; zero when inconclusive.
    pub margin: f64,
}

impl fmt::Display for Verdict {
    /// The single-line `key=value` record.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "regime={} max_circle={:.9} min_disk={:.9} circle_fixed={} hyperbolic={} margin={:.9}",
            self.regime,
            self.max_mod_on_circle,
            self.min_mod_on_disk,
            self.circle_fixed_points.len(),
            self.hyperbolic,
            self.margin
        )
    }
}

/// Sampling pad `L·π/samples` with `L = Σ i|a_i| ≥ max |q'|` on the disk.
pub fn rigidity_pad(q: &Polynomial, samples: usize) -> f64 {
    q.derivative_bound_on_disk() * std::f64::consts::PI / samples as f64
}

fn circle_extremes(q: &Polynomial, samples: usize) -> (f64, f64) {
    unit_circle(samples)
        .map(|z| q.eval(z).norm())
        .fold((f64::INFINITY, 0.0), |(lo, hi), m| (lo.min(m), hi.max(m)))
}

/// Certified upper bound on `max |q|` over the closed disk: the sampled circle
/// maximum plus [`rigidity_pad`]. `samples` is raised to at least 64.
pub fn max_modulus_on_disk(q: &Polynomial, samples: usize) -> f64 {
    let samples = samples.max(MIN_SAMPLES);
    circle_extremes(q, samples).1 + rigidity_pad(q, samples)
}

/// Certified lower bound on `min |q|` over the closed disk.
pub fn min_modulus_on_disk(q: &Polynomial, tol: f64) -> Result<f64> {
    min_modulus_on_disk_with(q, tol, DEFAULT_SAMPLES)
}

pub fn min_modulus_on_disk_with(q: &Polynomial, tol: f64, samples: usize) -> Result<f64> {
    let samples = samples.max(MIN_SAMPLES);
    if q.degree() == 0 {
        return Ok(q.coeffs()[0].norm());
    }
    if has_zero_in_disk(q, tol)? {
        return Ok(0.0);
    }
    Ok((circle_extremes(q, samples).0 - rigidity_pad(q, samples)).max(0.0))
}

fn has_zero_in_disk(q: &Polynomial, tol: f64) -> Result<bool> {
    // a root within tol of the circle may belong to the disk
    Ok(find_roots(q, tol)?.points().iter().any(|r| r.norm() <= 1.0 + tol))
}

/// Fixed points of `q` with `||z| - 1| < tol`.
pub fn circle_fixed_points(q: &Polynomial, tol: f64) -> Result<Vec<Complex>> {
    let g = q.minus_identity();
    if g.is_zero() {
        return Err(Error::InvalidArgument("q is the identity, every point is fixed".into()));
    }
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    Ok(find_roots(&g, ROOT_TOL)?
        .into_points()
        .into_iter()
        .filter(|z| (z.norm() - 1.0).abs() < tol)
        .collect())
}

pub fn hyperbolicity_heuristic(q: &Polynomial, p: &EscapeParams) -> Result<Hyperbolicity> {
    Ok(hyperbolicity_report(q, p)?.tag)
}

/// Follows every critical orbit of `q`. Each must escape or settle on an
/// attracting cycle clear of the circle by `p.band_delta` for the verdict
/// [`Hyperbolicity::LikelyHyperbolic`].
pub fn hyperbolicity_report(q: &Polynomial, p: &EscapeParams) -> Result<HyperbolicityReport> {
    let params = EscapeParams {
        escape_radius: escape_radius_poly(q)?,
        ..*p
    };
    let critical = find_roots(&q.derivative(), ROOT_TOL)?;
    let mut tag = Hyperbolicity::LikelyHyperbolic;
    let mut cycles: Vec<CycleInfo> = Vec::new();
    let mut near_circle = false;
    for &c in critical.points() {
        if let Escape::Escaped(_) = escape_time_with(|z| q.eval(z), c, &params) {
            continue;
        }
        let cycle = match detect_cycle_poly(q, c, &params, DEFAULT_MAX_PERIOD) {
            Ok(cycle) => cycle,
            Err(Error::NoCycleFound | Error::NewtonDivergence) => {
                tag = Hyperbolicity::Unknown;
                continue;
            }
            Err(e) => return Err(e),
        };
        let gap = cycle.points.iter().map(|z| (z.norm() - 1.0).abs()).fold(f64::INFINITY, f64::min);
        near_circle |= gap < 2.0 * p.band_delta;
        let attracting = cycle.stability == Stability::Attracting && cycle.multiplier.norm() < 1.0 - NEAR_INDIFFERENT;
        if !attracting || gap < p.band_delta {
            tag = Hyperbolicity::Unknown;
        }
        if !cycles.iter().any(|known| same_cycle(known, &cycle)) {
            cycles.push(cycle);
        }
    }
    Ok(HyperbolicityReport { tag, cycles, near_circle })
}

fn same_cycle(a: &CycleInfo, b: &CycleInfo) -> bool {
    a.period == b.period && a.points.iter().any(|z| (z - b.points[0]).norm() < 1e-8)
}

pub fn classify_q(q: &Polynomial, p: &EscapeParams) -> Result<Verdict> {
    classify_q_with(q, p, DEFAULT_SAMPLES, DEFAULT_CIRCLE_TOL)
}

pub fn classify_q_with(q: &Polynomial, p: &EscapeParams, samples: usize, circle_tol: f64) -> Result<Verdict> {
    if q.degree() < 2 {
        return Err(Error::PolyDegreeTooLow(q.degree()));
    }
    let samples = samples.max(MIN_SAMPLES);
    let pad = rigidity_pad(q, samples);
    let (lo, hi) = circle_extremes(q, samples);
    let zero_inside = has_zero_in_disk(q, ROOT_TOL)?;
    let raw_min = if zero_inside { 0.0 } else { lo };
    let cert_max = hi + pad;
    let cert_min = if zero_inside { 0.0 } else { (lo - pad).max(0.0) };
    let circle_fixed = circle_fixed_points(q, circle_tol)?;
    let report = hyperbolicity_report(q, p)?;

    // the middle regime must clear 1 by the pad on both sides as well
    let (regime, margin) = if !circle_fixed.is_empty() {
        (Regime::Inconclusive, 0.0)
    } else if cert_max < 1.0 {
        (Regime::DiskLimit, 1.0 - cert_max)
    } else if cert_min > 1.0 {
        (Regime::CircleLimit, cert_min - 1.0)
    } else if hi - pad > 1.0 && (zero_inside || lo + pad < 1.0) {
        (Regime::KInfinityCandidate, (hi - pad - 1.0).min(1.0 - if zero_inside { 0.0 } else { lo + pad }))
    } else {
        (Regime::Inconclusive, 0.0)
    };
    Ok(Verdict {
        regime,
        max_mod_on_circle: hi,
        min_mod_on_disk: raw_min,
        circle_fixed_points: circle_fixed,
        hyperbolic: report.tag,
        near_circle_cycle: report.near_circle,
        margin,
    })
}
