//! Complex polynomials and the `z^n + q(z)` map family.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// A polynomial stored as coefficients `a_0, a_1, ..., a_d` (low to high).
///
/// The leading coefficient is nonzero unless the polynomial is identically
/// zero, which is stored as the single coefficient `0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming zero leading
    /// terms. Rejects non-finite coefficients.
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self::from_trusted(coeffs))
    }

    fn from_trusted(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == Complex::new(0.0, 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::from_trusted(vec![])
    }

    pub fn constant(c: Complex) -> Self {
        Self::from_trusted(vec![c])
    }

    /// Convenience constructor from real coefficient pairs `(re, im)`.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(re, im)| Complex::new(re, im)).collect())
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex::new(0.0, 0.0)
    }

    pub fn leading(&self) -> Complex {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// Evaluates `p(z)` and `p'(z)` in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex) -> (Complex, Complex) {
        let zero = Complex::new(0.0, 0.0);
        let mut p = zero;
        let mut dp = zero;
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| a * i as f64)
            .collect();
        Self::from_trusted(coeffs)
    }

    /// Sum of coefficient moduli, `Σ|a_i|`.
    pub fn coeff_l1(&self) -> f64 {
        self.coeffs.iter().map(|a| a.norm()).sum()
    }

    /// `Σ i·|a_i|`, a bound on `|p'|` over the closed unit disk.
    pub fn derivative_bound_on_disk(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| i as f64 * a.norm())
            .sum()
    }

    pub fn scale(&self, alpha: Complex) -> Self {
        Self::from_trusted(self.coeffs.iter().map(|&a| a * alpha).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex::new(0.0, 0.0);
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(zero) + other.coeffs.get(i).copied().unwrap_or(zero)
            })
            .collect();
        Self::from_trusted(coeffs)
    }

    /// `p(z) - z`, whose roots are the fixed points of `p`.
    pub fn minus_identity(&self) -> Self {
        self.add(&Self::from_trusted(vec![Complex::new(0.0, 0.0), Complex::new(-1.0, 0.0)]))
    }

    /// Maximum modulus over `samples` equispaced points of the unit circle.
    pub fn max_on_unit_circle(&self, samples: usize) -> f64 {
        unit_circle(samples)
            .map(|z| self.eval(z).norm())
            .fold(0.0, f64::max)
    }
}

/// Equispaced points `e^{2πik/samples}` on the unit circle.
pub fn unit_circle(samples: usize) -> impl Iterator<Item = Complex> {
    let step = std::f64::consts::TAU / samples as f64;
    (0..samples).map(move |k| Complex::from_polar(1.0, step * k as f64))
}

/// `z^n` by binary exponentiation.
pub fn powu(z: Complex, mut n: u32) -> Complex {
    let mut base = z;
    let mut acc = Complex::new(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        n >>= 1;
        if n > 0 {
            base = base * base;
        }
    }
    acc
}

/// The map `f_n(z) = z^n + q(z)` with `n > deg q` and `n ≥ 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerPlusQMap {
    n: u32,
    q: Polynomial,
}

impl PowerPlusQMap {
    pub fn new(n: u32, q: Polynomial) -> Result<Self> {
        // n = 1 with constant q is a translation, which has no escape radius.
        if n < 2 || n as usize <= q.degree() {
            return Err(Error::DegreeTooLow {
                n,
                q_degree: q.degree(),
            });
        }
        Ok(Self { n, q })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    pub fn eval(&self, z: Complex) -> Complex {
        powu(z, self.n) + self.q.eval(z)
    }

    /// `f'(z) = n z^{n-1} + q'(z)`.
    pub fn derivative_at(&self, z: Complex) -> Complex {
        let (_, dq) = self.q.eval_with_derivative(z);
        powu(z, self.n - 1) * self.n as f64 + dq
    }

    /// Returns `(f(z), f'(z))`.
    pub fn eval_with_derivative(&self, z: Complex) -> (Complex, Complex) {
        let zn1 = powu(z, self.n - 1);
        let (q, dq) = self.q.eval_with_derivative(z);
        (zn1 * z + q, zn1 * self.n as f64 + dq)
    }

    /// The full expansion of `f_n` as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut coeffs = vec![Complex::new(0.0, 0.0); self.n as usize + 1];
        coeffs[..self.q.coeffs.len()].copy_from_slice(&self.q.coeffs);
        coeffs[self.n as usize] += Complex::new(1.0, 0.0);
        Polynomial::from_trusted(coeffs)
    }

    /// `g_n(z) = z^n + q(z) - z`; its roots are the fixed points of `f_n`.
    pub fn fixed_point_poly(&self) -> Polynomial {
        self.to_polynomial().minus_identity()
    }
}

pub fn eval(p: &Polynomial, z: Complex) -> Complex {
    p.eval(z)
}

pub fn eval_map(f: &PowerPlusQMap, z: Complex) -> Complex {
    f.eval(z)
}

pub fn map_derivative(f: &PowerPlusQMap, z: Complex) -> Complex {
    f.derivative_at(z)
}

pub fn fixed_point_poly(f: &PowerPlusQMap) -> Polynomial {
    f.fixed_point_poly()
}

// Text encoding: comma-separated coefficients low to high, each `a`, `bi`, or `a±bi`.

/// Parses one complex literal such as `0.25`, `-i`, `2.5i` or `0.41+0.047i`.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid complex literal `{text}`"));
    if s.is_empty() {
        return Err(bad());
    }
    let z = if let Some(body) = s.strip_suffix('i') {
        // The split between real and imaginary parts is the last sign that is
        // not the leading sign and not part of an exponent.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().map_err(|_| bad())?,
        };
        Complex::new(re.parse::<f64>().map_err(|_| bad())?, im)
    } else {
        Complex::new(s.parse::<f64>().map_err(|_| bad())?, 0.0)
    };
    if !z.is_finite() {
        return Err(bad());
    }
    Ok(z)
}

pub fn format_complex(z: Complex) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => format!("{}", z.re),
        (true, false) => format!("{}i", z.im),
        (false, false) if z.im < 0.0 => format!("{}{}i", z.re, z.im),
        _ => format!("{}+{}i", z.re, z.im),
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
        Polynomial::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|&c| format_complex(c)).collect();
        f.write_str(&parts.join(","))
    }
}
