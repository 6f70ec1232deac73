//! Orbit primitives: escape radius and escape time for `f_n`, shell
//! classification of `q`-orbits, orbit deviation between `q` and `f_n`, and
//! periodic cycles with their multipliers.

use crate::error::{Error, Result};
use crate::poly::{Complex, Polynomial, PowerPlusQMap};

pub const DEFAULT_MAX_ITER: u32 = 500;
pub const DEFAULT_BAND_DELTA: f64 = 0.01;
pub const DEFAULT_KQ_ITER: u32 = 200;

/// Return tolerance used to spot a cycle before Newton refinement.
pub const CYCLE_RETURN_TOL: f64 = 1e-6;
/// Residual `|F^k(z) - z|` required of a refined cycle point.
pub const NEWTON_RESIDUAL: f64 = 1e-12;
const NEWTON_MAX_STEPS: usize = 100;
const STABILITY_SLACK: f64 = 1e-9;
const DISTINCT_POINT_SEP: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EscapeParams {
    pub max_iter: u32,
    pub escape_radius: f64,
    /// Half-width of the tolerance band around `|z| = 1`.
    pub band_delta: f64,
    /// Iteration budget for `q`-orbit classification.
    pub kq_iter: u32,
}

impl EscapeParams {
    pub fn for_map(f: &PowerPlusQMap) -> Self {
        Self {
            escape_radius: escape_radius(f),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.max_iter == 0 {
            return bad("max_iter must be positive".into());
        }
        if !(self.escape_radius > 1.0) || !self.escape_radius.is_finite() {
            return bad(format!("escape radius must exceed 1, got {}", self.escape_radius));
        }
        if !(self.band_delta > 0.0 && self.band_delta < 0.5) {
            return bad(format!("band_delta must lie in (0, 0.5), got {}", self.band_delta));
        }
        if self.kq_iter == 0 {
            return bad("kq_iter must be positive".into());
        }
        Ok(())
    }
}

impl Default for EscapeParams {
    fn default() -> Self {
        Self {
            max_iter: DEFAULT_MAX_ITER,
            escape_radius: 2.0,
            band_delta: DEFAULT_BAND_DELTA,
            kq_iter: DEFAULT_KQ_ITER,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Escape {
    Escaped(u32),
    Bounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitClass {
    InteriorKq,
    OnShell(u32),
    Escaped(u32),
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stability {
    Attracting,
    Repelling,
    Indifferent,
}

impl Stability {
    pub fn from_multiplier(lambda: Complex) -> Self {
        let m = lambda.norm();
        if m < 1.0 - STABILITY_SLACK {
            Stability::Attracting
        } else if m > 1.0 + STABILITY_SLACK {
            Stability::Repelling
        } else {
            Stability::Indifferent
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CycleInfo {
    pub period: usize,
    pub points: Vec<Complex>,
    pub multiplier: Complex,
    pub stability: Stability,
}

/// A `q`-cycle carried over to `f_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RefinedCycle {
    pub cycle: CycleInfo,
    /// `max_i |z_i - z_{i,n}|` between matched points of the two cycles.
    pub max_deviation: f64,
}

/// Radius `R` beyond which `|f(z)| ≥ 2|z|`.
///
/// `R = max(2, (2(M+1))^{1/(n-d)})` with `M = Σ|a_i|`. For constant `q` and
/// `n = 2` that bound is not enough and `1 + sqrt(1 + M)` is also imposed.
pub fn escape_radius(f: &PowerPlusQMap) -> f64 {
    let m = f.q().coeff_l1();
    let d = f.q().degree() as u32;
    let mut r = (2.0 * (m + 1.0)).powf(1.0 / (f.n() - d) as f64).max(2.0);
    if d == 0 && f.n() == 2 {
        r = r.max(1.0 + (1.0 + m).sqrt());
    }
    r
}

/// The same guarantee `|q(z)| ≥ 2|z|` for a polynomial of degree `d ≥ 2`:
/// `R = max(2, (M' + 2)/|a_d|)` with `M' = Σ_{i<d} |a_i|`.
pub fn escape_radius_poly(q: &Polynomial) -> Result<f64> {
    if q.degree() < 2 {
        return Err(Error::PolyDegreeTooLow(q.degree()));
    }
    let lower: f64 = q.coeffs()[..q.degree()].iter().map(|a| a.norm()).sum();
    Ok(((lower + 2.0) / q.leading().norm()).max(2.0))
}

fn escaped(z: Complex, radius: f64) -> bool {
    !z.is_finite() || z.norm_sqr() > radius * radius
}

/// First step at which the orbit of `z` leaves the escape disk.
pub fn escape_time(f: &PowerPlusQMap, z: Complex, p: &EscapeParams) -> Escape {
    escape_time_with(|w| f.eval(w), z, p)
}

pub fn escape_time_with(map: impl Fn(Complex) -> Complex, mut z: Complex, p: &EscapeParams) -> Escape {
    for step in 0..=p.max_iter {
        if escaped(z, p.escape_radius) {
            return Escape::Escaped(step);
        }
        if step < p.max_iter {
            z = map(z);
        }
    }
    Escape::Bounded
}

/// Escape time that also tracks `dz_k/dz_0`, returning the escaping iterate
/// and its derivative for exterior distance estimation.
pub fn escape_time_with_derivative(
    f: &PowerPlusQMap,
    mut z: Complex,
    p: &EscapeParams,
) -> (Escape, Complex, Complex) {
    let mut dz = Complex::new(1.0, 0.0);
    for step in 0..=p.max_iter {
        if escaped(z, p.escape_radius) {
            return (Escape::Escaped(step), z, dz);
        }
        if step < p.max_iter {
            let (fz, dfz) = f.eval_with_derivative(z);
            dz *= dfz;
            z = fz;
        }
    }
    (Escape::Bounded, z, dz)
}

/// Where the `q`-orbit of `z` first reaches modulus `1 - band_delta`.
pub fn classify_q_orbit(q: &Polynomial, z: Complex, p: &EscapeParams) -> OrbitClass {
    let inner = 1.0 - p.band_delta;
    let outer = 1.0 + p.band_delta;
    let mut w = z;
    for j in 0..=p.kq_iter {
        if !w.is_finite() {
            return OrbitClass::Escaped(j);
        }
        let r = w.norm();
        if r >= inner {
            return if r <= outer {
                OrbitClass::OnShell(j)
            } else {
                OrbitClass::Escaped(j)
            };
        }
        w = q.eval(w);
    }
    OrbitClass::InteriorKq
}

/// `max_{0≤i≤m} |f^i(z) - q^i(z)|`; `+∞` once either orbit is non-finite.
pub fn orbit_deviation(q: &Polynomial, f: &PowerPlusQMap, z: Complex, m: u32) -> f64 {
    let (mut a, mut b) = (z, z);
    let mut dev: f64 = 0.0;
    for i in 0..=m {
        let d = (a - b).norm();
        if !d.is_finite() {
            return f64::INFINITY;
        }
        dev = dev.max(d);
        if i < m {
            a = f.eval(a);
            b = q.eval(b);
        }
    }
    dev
}

/// Newton's method on `F(z) = map^k(z) - z`.
fn newton_periodic(
    map: &impl Fn(Complex) -> Complex,
    deriv: &impl Fn(Complex) -> Complex,
    mut z: Complex,
    period: usize,
) -> Result<Complex> {
    let one = Complex::new(1.0, 0.0);
    for _ in 0..NEWTON_MAX_STEPS {
        let mut w = z;
        let mut dw = one;
        for _ in 0..period {
            dw *= deriv(w);
            w = map(w);
        }
        let residual = w - z;
        if !residual.is_finite() {
            return Err(Error::NewtonDivergence);
        }
        if residual.norm() < NEWTON_RESIDUAL {
            return Ok(z);
        }
        let step = residual / (dw - one);
        if !step.is_finite() {
            return Err(Error::NewtonDivergence);
        }
        z -= step;
    }
    Err(Error::NewtonDivergence)
}

/// Builds the cycle through a refined periodic point, trimming the period to
/// the minimal one and tagging stability from the multiplier.
fn assemble_cycle(
    map: &impl Fn(Complex) -> Complex,
    deriv: &impl Fn(Complex) -> Complex,
    z: Complex,
    period: usize,
) -> CycleInfo {
    let mut points = vec![z];
    let mut w = map(z);
    while points.len() < period && (w - z).norm() > DISTINCT_POINT_SEP {
        points.push(w);
        w = map(w);
    }
    let multiplier = points.iter().map(|&p| deriv(p)).product();
    CycleInfo {
        period: points.len(),
        stability: Stability::from_multiplier(multiplier),
        points,
        multiplier,
    }
}

/// Finds the cycle the orbit of `z0` settles on.
///
/// Burns in `p.max_iter` steps, looks for a return within
/// [`CYCLE_RETURN_TOL`] over the next `max_period` iterates, then refines by
/// Newton's method to residual [`NEWTON_RESIDUAL`].
pub fn detect_cycle(
    map: impl Fn(Complex) -> Complex,
    deriv: impl Fn(Complex) -> Complex,
    z0: Complex,
    p: &EscapeParams,
    max_period: usize,
) -> Result<CycleInfo> {
    if max_period == 0 {
        return Err(Error::InvalidArgument("max_period must be positive".into()));
    }
    let mut z = z0;
    for _ in 0..p.max_iter {
        if escaped(z, p.escape_radius) {
            return Err(Error::NoCycleFound);
        }
        z = map(z);
    }
    let anchor = z;
    let mut w = z;
    let mut period = None;
    for k in 1..=max_period {
        w = map(w);
        if escaped(w, p.escape_radius) {
            return Err(Error::NoCycleFound);
        }
        if (w - anchor).norm() < CYCLE_RETURN_TOL {
            period = Some(k);
            break;
        }
    }
    let period = period.ok_or(Error::NoCycleFound)?;
    let z = newton_periodic(&map, &deriv, anchor, period)?;
    Ok(assemble_cycle(&map, &deriv, z, period))
}

/// [`detect_cycle`] for a polynomial.
pub fn detect_cycle_poly(q: &Polynomial, z0: Complex, p: &EscapeParams, max_period: usize) -> Result<CycleInfo> {
    let dq = q.derivative();
    detect_cycle(|z| q.eval(z), |z| dq.eval(z), z0, p, max_period)
}

/// Carries an attracting or repelling `q`-cycle inside the open unit disk
/// over to the nearby cycle of `f_n` of the same period.
pub fn refine_cycle_under_fn(cycle: &CycleInfo, f: &PowerPlusQMap) -> Result<RefinedCycle> {
    if cycle.points.is_empty() || cycle.points.len() != cycle.period {
        return Err(Error::InvalidArgument("cycle has no points or a mismatched period".into()));
    }
    if let Some(z) = cycle.points.iter().find(|z| z.norm() >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "cycle point {z} lies outside the open unit disk"
        )));
    }
    if cycle.stability == Stability::Indifferent {
        return Err(Error::InvalidArgument("cannot refine an indifferent cycle".into()));
    }
    let k = cycle.period;
    // matching radius: half the smallest gap between cycle points, and for a
    // fixed point, half its distance to the unit circle
    let mut gap = f64::INFINITY;
    for i in 0..k {
        for j in i + 1..k {
            gap = gap.min((cycle.points[i] - cycle.points[j]).norm());
        }
    }
    if k == 1 {
        gap = 1.0 - cycle.points[0].norm();
    }
    let limit = 0.5 * gap;

    let map = |z| f.eval(z);
    let deriv = |z| f.derivative_at(z);
    let z = newton_periodic(&map, &deriv, cycle.points[0], k)?;
    let refined = assemble_cycle(&map, &deriv, z, k);
    if refined.period != k {
        return Err(Error::NewtonDivergence);
    }
    let max_deviation = cycle
        .points
        .iter()
        .zip(&refined.points)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if !(max_deviation < limit) {
        return Err(Error::NewtonDivergence);
    }
    Ok(RefinedCycle {
        cycle: refined,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::TAU;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn poly(pairs: &[(f64, f64)]) -> Polynomial {
        Polynomial::from_pairs(pairs).unwrap()
    }

    fn map(n: u32, q: Polynomial) -> PowerPlusQMap {
        PowerPlusQMap::new(n, q).unwrap()
    }

    #[test]
    fn escape_radius_examples() {
        assert_eq!(escape_radius(&map(2, Polynomial::zero())), 2.0);
        assert_eq!(escape_radius(&map(10, Polynomial::constant(c(1.5, 0.0)))), 2.0);
        // n = 2, constant q: the extra bound applies
        let f = map(2, Polynomial::constant(c(-1.0, 0.0)));
        let r = escape_radius(&f);
        for z in crate::poly::unit_circle(1024).map(|u| u * r) {
            assert!(f.eval(z).norm() >= 2.0 * z.norm() * (1.0 - 1e-12));
        }
    }

    #[test]
    fn escape_radius_property_on_random_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(1024);
        for _ in 0..100 {
            let d = rng.gen_range(0..=4);
            let coeffs = (0..=d).map(|_| Complex::from_polar(rng.gen_range(0.0..2.0), rng.gen_range(0.0..TAU)));
            let q = Polynomial::new(coeffs.collect()).unwrap();
            let n = [8, 64, 512][rng.gen_range(0..3)];
            let f = map(n, q);
            let r = escape_radius(&f);
            for z in crate::poly::unit_circle(1024).map(|u| u * r) {
                assert!(f.eval(z).norm() >= 2.0 * z.norm(), "n={n} R={r} z={z}");
            }
        }
    }

    #[test]
    fn escape_radius_for_q() {
        let q = poly(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]);
        let r = escape_radius_poly(&q).unwrap();
        assert!((r - (0.1f64.hypot(0.75) + 2.0)).abs() < 1e-15);
        for z in crate::poly::unit_circle(512).map(|u| u * r) {
            assert!(q.eval(z).norm() >= 2.0 * z.norm());
        }
        assert!(escape_radius_poly(&poly(&[(1.0, 0.0), (1.0, 0.0)])).is_err());
    }

    #[test]
    fn escape_time_examples() {
        let f = map(2, Polynomial::zero());
        let p = EscapeParams::for_map(&f);
        assert_eq!(escape_time(&f, c(0.0, 0.0), &p), Escape::Bounded);
        assert_eq!(escape_time(&f, c(3.0, 0.0), &p), Escape::Escaped(0));
        assert_eq!(escape_time(&f, c(1.5, 0.0), &p), Escape::Escaped(1));
    }

    #[test]
    fn escape_time_long_run_oracle() {
        let f = map(200, Polynomial::constant(c(0.25, 0.25)));
        let p = EscapeParams { max_iter: 1000, ..EscapeParams::for_map(&f) };
        assert_eq!(escape_time(&f, c(0.5, 0.0), &p), Escape::Bounded);
        let long = EscapeParams { max_iter: 100_000, ..p };
        assert_eq!(escape_time(&f, c(0.5, 0.0), &long), Escape::Bounded);
    }

    #[test]
    fn overflow_counts_as_escape() {
        let f = map(2, Polynomial::zero());
        let p = EscapeParams { escape_radius: f64::MAX, ..EscapeParams::default() };
        assert!(matches!(escape_time(&f, c(10.0, 0.0), &p), Escape::Escaped(_)));
    }

    #[test]
    fn escape_time_monotone_in_max_iter() {
        let f = map(12, poly(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]));
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let z = c(rng.gen_range(-1.2..1.2), rng.gen_range(-1.2..1.2));
            let mut prev = None;
            for m in [10, 50, 200, 800] {
                let v = escape_time(&f, z, &EscapeParams { max_iter: m, ..EscapeParams::for_map(&f) });
                if let Some(Escape::Escaped(s)) = prev {
                    assert_eq!(v, Escape::Escaped(s));
                }
                prev = Some(v);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let p = EscapeParams { band_delta: 0.1, ..EscapeParams::default() };
        let q = Polynomial::constant(Complex::from_polar(0.3, 1.0));
        assert_eq!(classify_q_orbit(&q, Complex::from_polar(1.0, 2.0), &p), OrbitClass::OnShell(0));
        let q = Polynomial::constant(c(1.5, 0.0));
        assert_eq!(classify_q_orbit(&q, c(0.0, 0.0), &p), OrbitClass::Escaped(1));
        let q = poly(&[(-0.6, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let z = c(0.0, 0.4f64.sqrt());
        assert_eq!(classify_q_orbit(&q, z, &EscapeParams::default()), OrbitClass::OnShell(1));
        // an orbit inside the disk forever
        let q = poly(&[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(classify_q_orbit(&q, c(0.5, 0.0), &p), OrbitClass::InteriorKq);
    }

    #[test]
    fn shrinking_band_only_moves_shell_points() {
        let q = poly(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..2000 {
            let z = c(rng.gen_range(-1.3..1.3), rng.gen_range(-1.3..1.3));
            let wide = classify_q_orbit(&q, z, &EscapeParams { band_delta: 0.05, ..EscapeParams::default() });
            let thin = classify_q_orbit(&q, z, &EscapeParams { band_delta: 0.01, ..EscapeParams::default() });
            match wide {
                OrbitClass::OnShell(j) => assert!(
                    matches!(thin, OrbitClass::InteriorKq | OrbitClass::Escaped(_))
                        || thin == OrbitClass::OnShell(j)
                        || matches!(thin, OrbitClass::OnShell(k) if k > j),
                    "{z}: {wide:?} -> {thin:?}"
                ),
                OrbitClass::InteriorKq => assert_eq!(thin, OrbitClass::InteriorKq),
                OrbitClass::Escaped(j) => assert_eq!(thin, OrbitClass::Escaped(j)),
                OrbitClass::Undetermined => unreachable!(),
            }
        }
    }

    #[test]
    fn deviation_examples() {
        let q = poly(&[(0.25, 0.25), (0.0, 0.0), (1.0, 0.0)]);
        let f50 = map(50, q.clone());
        let f200 = map(200, q.clone());
        // a common fixed point: 0 is fixed by z^2 and z^n + z^2
        let q0 = poly(&[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(orbit_deviation(&q0, &map(7, q0.clone()), c(0.0, 0.0), 10), 0.0);
        let qc = Polynomial::constant(c(0.3, 0.1));
        assert_eq!(orbit_deviation(&qc, &map(9, qc.clone()), c(0.0, 0.0), 1), 0.0);
        let d50 = orbit_deviation(&q, &f50, c(0.3, 0.0), 5);
        let d200 = orbit_deviation(&q, &f200, c(0.3, 0.0), 5);
        assert!(d50 > d200, "{d50} {d200}");
        assert!(d50 > 0.0);
        let far = orbit_deviation(&q, &f50, c(3.0, 0.0), 20);
        assert_eq!(far, f64::INFINITY);
    }

    #[test]
    fn cycles_of_quadratics() {
        let p = EscapeParams::default();
        let q = poly(&[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let cy = detect_cycle_poly(&q, c(0.5, 0.0), &p, 16).unwrap();
        assert_eq!(cy.period, 1);
        assert!(cy.points[0].norm() < 1e-12);
        assert_eq!(cy.multiplier.norm(), 0.0);
        assert_eq!(cy.stability, Stability::Attracting);

        let q = poly(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let cy = detect_cycle_poly(&q, c(0.1, 0.0), &p, 16).unwrap();
        assert_eq!(cy.period, 2);
        let near = |t: Complex| cy.points.iter().any(|z| (z - t).norm() < 1e-12);
        assert!(near(c(0.0, 0.0)) && near(c(-1.0, 0.0)));
        assert!(cy.multiplier.norm() < 1e-12);
        assert_eq!(cy.stability, Stability::Attracting);

        // the escape of the critical orbit means no cycle
        let q = poly(&[(1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        assert_eq!(detect_cycle_poly(&q, c(0.0, 0.0), &p, 16), Err(Error::NoCycleFound));
    }

    #[test]
    fn fixed_point_of_f50_near_constant() {
        let cst = c(0.25, 0.25);
        let f = map(50, Polynomial::constant(cst));
        let cy = detect_cycle(|z| f.eval(z), |z| f.derivative_at(z), c(0.0, 0.0), &EscapeParams::for_map(&f), 8).unwrap();
        assert_eq!(cy.period, 1);
        // oracle: root of g_50 nearest to c
        let roots = crate::roots::fixed_points(&f, 1e-13).unwrap();
        let nearest = roots
            .points()
            .iter()
            .copied()
            .min_by(|a, b| (a - cst).norm().total_cmp(&(b - cst).norm()))
            .unwrap();
        assert!((cy.points[0] - nearest).norm() < 1e-10);
        assert!((cy.points[0] - cst).norm() < 0.05);
        assert_eq!(cy.stability, Stability::Attracting);
    }

    #[test]
    fn stability_tag_matches_multiplier() {
        let q = poly(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let z0 = c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            if let Ok(cy) = detect_cycle_poly(&q, z0, &EscapeParams::default(), 32) {
                let m = cy.multiplier.norm();
                match cy.stability {
                    Stability::Attracting => assert!(m < 1.0 - 1e-9),
                    Stability::Repelling => assert!(m > 1.0 + 1e-9),
                    Stability::Indifferent => assert!((m - 1.0).abs() <= 1e-9),
                }
                assert_eq!(cy.points.len(), cy.period);
            }
        }
    }

    #[test]
    fn refine_superattracting_fixed_point() {
        let q = poly(&[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let cy = detect_cycle_poly(&q, c(0.5, 0.0), &EscapeParams::default(), 4).unwrap();
        let r = refine_cycle_under_fn(&cy, &map(100, q)).unwrap();
        assert_eq!(r.cycle.points, vec![c(0.0, 0.0)]);
        assert_eq!(r.cycle.multiplier.norm(), 0.0);
        assert_eq!(r.max_deviation, 0.0);
    }

    #[test]
    fn refine_constant_q_fixed_point() {
        let cst = c(0.25, 0.25);
        let q = Polynomial::constant(cst);
        let cy = detect_cycle_poly(&q, c(0.0, 0.0), &EscapeParams::default(), 4).unwrap();
        assert_eq!(cy.points, vec![cst]);
        let f = map(64, q);
        let r = refine_cycle_under_fn(&cy, &f).unwrap();
        let bound = 2.0 * cst.norm().powi(63);
        assert!(r.max_deviation <= bound, "{} > {bound}", r.max_deviation);
        let roots = crate::roots::fixed_points(&f, 1e-13).unwrap();
        assert!(roots.points().iter().any(|z| (z - r.cycle.points[0]).norm() < 1e-10));
    }

    #[test]
    fn refine_period_three_cycle() {
        // the rabbit-type attracting 3-cycle of z^2 - 0.1 + 0.75i lies in the disk
        let q = poly(&[(-0.1, 0.75), (0.0, 0.0), (1.0, 0.0)]);
        let cy = detect_cycle_poly(&q, c(0.0, 0.0), &EscapeParams::default(), 16).unwrap();
        assert_eq!(cy.period, 3);
        assert!(cy.points.iter().all(|z| z.norm() < 1.0));
        let r = refine_cycle_under_fn(&cy, &map(100, q)).unwrap();
        assert_eq!(r.cycle.period, 3);
        assert_eq!(r.cycle.stability, Stability::Attracting);
        assert!(r.max_deviation < 1e-3);
    }

    #[test]
    fn refine_rejects_cycles_touching_the_circle() {
        let q = poly(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let cy = detect_cycle_poly(&q, c(0.1, 0.0), &EscapeParams::default(), 8).unwrap();
        assert!(matches!(refine_cycle_under_fn(&cy, &map(200, q)), Err(Error::InvalidArgument(_))));
    }
}
