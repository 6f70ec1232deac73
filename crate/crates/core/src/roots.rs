//! Simultaneous root finding (Aberth–Ehrlich) and clustering statistics of
//! root sets around the unit circle.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::poly::{unit_circle, Complex, Polynomial, PowerPlusQMap};

pub const MAX_SWEEPS: usize = 500;
const GUESS_ROTATION: f64 = 0.4;

/// The roots of a polynomial, with multiplicity. Stands for the uniform
/// probability measure on those points.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalMeasure {
    points: Vec<Complex>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClusterStats {
    pub annulus_fraction: f64,
    pub max_radial_dev: f64,
    pub angular_discrepancy: f64,
}

impl EmpiricalMeasure {
    pub fn from_points(points: Vec<Complex>) -> Self {
        Self { points }
    }

    pub fn points(&self) -> &[Complex] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<Complex> {
        self.points
    }

    pub fn cluster_stats(&self, eps: f64) -> Result<ClusterStats> {
        cluster_stats(self, eps)
    }
}

/// Newton ratio `p(z)/p'(z)`, evaluated through the reversed polynomial when
/// `|z| > 1` so that high degrees do not overflow. The flag reports whether
/// the value is already at the rounding floor of the evaluation.
fn newton_ratio(p: &Polynomial, rev: &Polynomial, z: Complex) -> (Complex, bool) {
    let zero = Complex::new(0.0, 0.0);
    if z.norm_sqr() <= 1.0 {
        let (v, dv) = p.eval_with_derivative(z);
        if v == zero {
            return (zero, true);
        }
        (v / dv, v.norm() <= horner_error_floor(p, z))
    } else {
        let w = z.inv();
        let (r, dr) = rev.eval_with_derivative(w);
        if r == zero {
            return (zero, true);
        }
        (z / (p.degree() as f64 - w * dr / r), r.norm() <= horner_error_floor(rev, w))
    }
}

fn initial_radius(p: &Polynomial) -> f64 {
    let d = p.degree();
    let lead = p.leading().norm();
    // lowest nonzero coefficient gives the geometric mean of the nonzero roots
    let r = p
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, a)| a.norm() > 0.0)
        .filter(|&(k, _)| k < d)
        .map(|(k, a)| (a.norm() / lead).powf(1.0 / (d - k) as f64))
        .unwrap_or(1.0);
    if r.is_finite() && r > 0.0 {
        r
    } else {
        1.0
    }
}

/// All `deg p` roots of `p` via Aberth–Ehrlich iteration.
///
/// A root is settled once its correction is below `tol` (relative to
/// `max(1, |z|)`) or its residual reaches the rounding floor. After all roots
/// settle, one polishing sweep runs and every residual is checked (see
/// `check_residuals`).
pub fn find_roots(p: &Polynomial, tol: f64) -> Result<EmpiricalMeasure> {
    let d = p.degree();
    if d < 1 {
        return Err(Error::PolyDegreeTooLow(d));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("root tolerance must be positive, got {tol}")));
    }
    let monic = p.scale(p.leading().inv());
    if d == 1 {
        let root = -monic.coeffs()[0];
        return check_residuals(p, vec![root], tol);
    }
    // trimming zero high terms of the reversal leaves its values unchanged
    let rev = Polynomial::new(monic.coeffs().iter().rev().copied().collect())?;

    let r0 = initial_radius(&monic);
    let mut z: Vec<Complex> = (0..d)
        .map(|k| Complex::from_polar(r0, TAU * k as f64 / d as f64 + GUESS_ROTATION))
        .collect();
    let mut done = vec![false; d];

    for _ in 0..MAX_SWEEPS {
        sweep(&monic, &rev, &mut z, &mut done, tol);
        if done.iter().all(|&x| x) {
            let mut polish = vec![false; d];
            sweep(&monic, &rev, &mut z, &mut polish, 0.0);
            return check_residuals(p, z, tol);
        }
    }
    Err(Error::NoConvergence(
        done.iter().enumerate().filter(|(_, &x)| !x).map(|(i, _)| i).collect(),
    ))
}

fn sweep(p: &Polynomial, rev: &Polynomial, z: &mut [Complex], done: &mut [bool], tol: f64) {
    let n = z.len();
    for i in 0..n {
        if done[i] {
            continue;
        }
        let zi = z[i];
        let (ratio, at_floor) = newton_ratio(p, rev, zi);
        if ratio == Complex::new(0.0, 0.0) {
            done[i] = true;
            continue;
        }
        let repulsion: Complex = (0..n)
            .filter(|&j| j != i)
            .map(|j| (zi - z[j]).inv())
            .sum();
        let w = ratio / (Complex::new(1.0, 0.0) - ratio * repulsion);
        if !w.is_finite() {
            continue;
        }
        z[i] = zi - w;
        if at_floor || w.norm() <= tol * zi.norm().max(1.0) {
            done[i] = true;
        }
    }
}

/// Rounding floor of Horner's scheme at `z`: `4·d·ε·Σ|a_i||z|^i`.
pub fn horner_error_floor(p: &Polynomial, z: Complex) -> f64 {
    let r = z.norm();
    let magnitude = p.coeffs().iter().rev().fold(0.0, |acc, a| acc * r + a.norm());
    4.0 * (p.degree().max(1) as f64) * f64::EPSILON * magnitude
}

/// A root passes when `|p(z)| ≤ tol · residual_scale(p)`, or, for roots far
/// enough from the unit circle that this is below working precision, when the
/// residual is at the Horner rounding floor.
fn check_residuals(p: &Polynomial, roots: Vec<Complex>, tol: f64) -> Result<EmpiricalMeasure> {
    let scale = residual_scale(p);
    let bad: Vec<usize> = roots
        .iter()
        .enumerate()
        .filter(|(_, &r)| {
            let res = p.eval(r).norm();
            !r.is_finite() || !(res <= tol * scale || res <= horner_error_floor(p, r))
        })
        .map(|(i, _)| i)
        .collect();
    if bad.is_empty() {
        Ok(EmpiricalMeasure::from_points(roots))
    } else {
        Err(Error::NoConvergence(bad))
    }
}

/// Fixed points of `f_n`, i.e. the roots of `g_n(z) = z^n + q(z) - z`.
pub fn fixed_points(f: &PowerPlusQMap, tol: f64) -> Result<EmpiricalMeasure> {
    find_roots(&f.fixed_point_poly(), tol)
}

/// Star discrepancy of points in `[0, 1)` against the uniform distribution.
pub fn star_discrepancy(u: &mut [f64]) -> f64 {
    u.sort_by(f64::total_cmp);
    let n = u.len() as f64;
    u.iter()
        .enumerate()
        .map(|(k, &x)| {
            let i = (k + 1) as f64;
            (i / n - x).max(x - (i - 1.0) / n)
        })
        .fold(0.0, f64::max)
}

pub fn cluster_stats(m: &EmpiricalMeasure, eps: f64) -> Result<ClusterStats> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("annulus half-width must lie in (0,1), got {eps}")));
    }
    if m.is_empty() {
        return Err(Error::EmptySet);
    }
    let annulus: Vec<Complex> = m
        .points
        .iter()
        .copied()
        .filter(|z| (z.norm() - 1.0).abs() <= eps)
        .collect();
    if annulus.is_empty() {
        return Err(Error::EmptyAnnulus);
    }
    let max_radial_dev = annulus.iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max);
    let mut u: Vec<f64> = annulus
        .iter()
        .map(|z| (z.arg() / TAU).rem_euclid(1.0))
        // rem_euclid can round up to exactly 1.0 for tiny negative angles
        .map(|x| if x >= 1.0 { 0.0 } else { x })
        .collect();
    Ok(ClusterStats {
        annulus_fraction: annulus.len() as f64 / m.len() as f64,
        max_radial_dev,
        angular_discrepancy: star_discrepancy(&mut u),
    })
}

/// `max(1, max |p|)` over 256 unit-circle samples; the residual reference scale.
pub fn residual_scale(p: &Polynomial) -> f64 {
    unit_circle(256).map(|z| p.eval(z).norm()).fold(0.0, f64::max).max(1.0)
}
