//! Gauss-Legendre quadrature of the defining convolution integrals.
//!
//! A floating-point sanity check of the exact engine: the integrand is a
//! polynomial, so a fixed-order rule integrates it to machine precision and
//! must agree with the exact result evaluated at the point to a relative
//! 1e-9.

use core::fmt;

use convpde_core::{Axis, BiPoly};

/// Errors from [`conv_numeric_at`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureError {
    /// Point coordinates must lie in (0, 4]: the integration limits collapse
    /// at zero and the check is only calibrated on a modest box.
    PointOutOfDomain,
    /// Fewer than 8 nodes requested.
    TooFewNodes,
}

impl fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadratureError::PointOutOfDomain => {
                write!(f, "point coordinates must lie in (0, 4]")
            }
            QuadratureError::TooFewNodes => write!(f, "at least 8 quadrature nodes required"),
        }
    }
}

impl std::error::Error for QuadratureError {}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration from the Chebyshev initial guess.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "rule needs at least two nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x =
                (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        half * sum
    }
}

/// Floating-point evaluation of an exact polynomial.
pub fn eval_f64(p: &BiPoly, x: f64, y: f64) -> f64 {
    p.terms()
        .map(|(m, c)| c.to_f64() * x.powi(m.deg1 as i32) * y.powi(m.deg2 as i32))
        .sum()
}

/// Quadrature of the defining convolution integral at one point.
///
/// Coordinates must lie in (0, 4] and `nodes >= 8`; with polynomial degrees
/// up to 8 the default 64-node rule is exact to rounding, so agreement with
/// the exact engine within a relative 1e-9 is a conservative bar.
pub fn conv_numeric_at(
    p: &BiPoly,
    q: &BiPoly,
    axis: Axis,
    point: (f64, f64),
    nodes: usize,
) -> Result<f64, QuadratureError> {
    let (x0, y0) = point;
    if !(x0 > 0.0 && x0 <= 4.0 && y0 > 0.0 && y0 <= 4.0) {
        return Err(QuadratureError::PointOutOfDomain);
    }
    if nodes < 8 {
        return Err(QuadratureError::TooFewNodes);
    }
    let rule = GaussLegendre::new(nodes);
    let value = match axis {
        Axis::X => rule.integrate(0.0, x0, |theta| {
            eval_f64(p, x0 - theta, y0) * eval_f64(q, theta, y0)
        }),
        Axis::Y => rule.integrate(0.0, y0, |theta| {
            eval_f64(p, x0, y0 - theta) * eval_f64(q, x0, theta)
        }),
        Axis::Xy => rule.integrate(0.0, y0, |theta2| {
            rule.integrate(0.0, x0, |theta1| {
                eval_f64(p, x0 - theta1, y0 - theta2) * eval_f64(q, theta1, theta2)
            })
        }),
    };
    Ok(value)
}
