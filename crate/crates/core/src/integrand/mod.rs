//! Positive continuous functions on the circle (anisotropic surface energy
//! densities) and their pointwise lattice operations.
//!
//! Every constructor runs a dense positivity scan: 4096 uniform angles must
//! evaluate above zero, otherwise construction is rejected with a witnessing
//! angle. Pointwise max/min of already constructed integrands need no
//! re-check, positivity is closed under both.

mod expr;
mod parse;

pub use expr::ExprNode;
pub use parse::{parse_expression, parse_spec, IntegrandSpec};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::{convex_hull, ConvexPolygon};
use crate::plane::PlanePoint;

const POSITIVITY_SAMPLES: usize = 4096;

/// Periodic table of (angle, value) samples with linear interpolation.
///
/// Angles live in [0, 2pi), strictly increasing, at least 8 of them. The
/// final segment wraps from the last angle back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTable {
    angles: Vec<f64>,
    values: Vec<f64>,
}

impl SampleTable {
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.len() < 8 {
            return Err(Error::InvalidSamples(format!(
                "need at least 8 sample points, got {}",
                pairs.len()
            )));
        }
        for (i, &(a, v)) in pairs.iter().enumerate() {
            if !a.is_finite() || !v.is_finite() {
                return Err(Error::InvalidSamples(format!(
                    "non-finite entry at index {i}"
                )));
            }
            if !(0.0..std::f64::consts::TAU).contains(&a) {
                return Err(Error::InvalidSamples(format!(
                    "angle {a} at index {i} is outside [0, 2pi)"
                )));
            }
            if i > 0 && a <= pairs[i - 1].0 {
                return Err(Error::InvalidSamples(format!(
                    "angles must be strictly increasing, violated at index {i}"
                )));
            }
            if v <= 0.0 {
                return Err(Error::NotPositive { angle: a, value: v });
            }
        }
        Ok(Self {
            angles: pairs.iter().map(|p| p.0).collect(),
            values: pairs.iter().map(|p| p.1).collect(),
        })
    }

    /// Parses the text table format: one "angle value" pair per line,
    /// angles in radians; blank lines and lines starting with '#' skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let angle = it.next().and_then(|w| w.parse::<f64>().ok());
            let value = it.next().and_then(|w| w.parse::<f64>().ok());
            match (angle, value, it.next()) {
                (Some(a), Some(v), None) => pairs.push((a, v)),
                _ => {
                    return Err(Error::InvalidSamples(format!(
                        "line {}: expected 'angle value'",
                        lineno + 1
                    )))
                }
            }
        }
        Self::new(pairs)
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let t = theta.rem_euclid(std::f64::consts::TAU);
        let n = self.angles.len();
        let i = self.angles.partition_point(|&a| a <= t);
        // i is the first index with angle > t; segment (i-1, i), wrapping.
        let (a0, v0, mut a1, v1) = if i == 0 {
            // Below the first sample: wrapped segment from the last one.
            (
                self.angles[n - 1] - std::f64::consts::TAU,
                self.values[n - 1],
                self.angles[0],
                self.values[0],
            )
        } else if i == n {
            (
                self.angles[n - 1],
                self.values[n - 1],
                self.angles[0] + std::f64::consts::TAU,
                self.values[0],
            )
        } else {
            (
                self.angles[i - 1],
                self.values[i - 1],
                self.angles[i],
                self.values[i],
            )
        };
        if a1 <= a0 {
            a1 = a0 + f64::MIN_POSITIVE;
        }
        let s = ((t - a0) / (a1 - a0)).clamp(0.0, 1.0);
        v0 + (v1 - v0) * s
    }
}

/// A positive continuous function on the circle.
#[derive(Debug, Clone)]
pub enum Integrand {
    Constant(f64),
    Expression { source: String, ast: ExprNode },
    SupportPolygon(ConvexPolygon),
    Samples(SampleTable),
    Max(Box<Integrand>, Box<Integrand>),
    Min(Box<Integrand>, Box<Integrand>),
}

/// Outcome of the convexity test on an integrand's inverted graph.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConvexityCheck {
    pub is_convex: bool,
    /// Largest distance from an inverted graph point to the boundary of the
    /// points' own convex hull, measured from inside.
    pub worst_violation: f64,
    /// Angle whose inverted graph point sits deepest inside the hull.
    pub witness_angle: f64,
    pub tolerance: f64,
}

impl Integrand {
    pub fn constant(c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::NotPositive {
                angle: 0.0,
                value: c,
            });
        }
        Self::validated(Integrand::Constant(c))
    }

    /// Support function of a polygon. Positivity of the support function is
    /// exactly "origin strictly interior", which is checked through the edge
    /// offsets rather than by sampling.
    pub fn support_polygon(poly: ConvexPolygon) -> Result<Self> {
        if let Some(e) = poly
            .edges()
            .iter()
            .min_by(|a, b| a.offset.partial_cmp(&b.offset).unwrap())
        {
            if e.offset <= 1e-9 {
                return Err(Error::NotPositive {
                    angle: e.normal.angle(),
                    value: e.offset,
                });
            }
        }
        Self::validated(Integrand::SupportPolygon(poly))
    }

    pub fn samples(pairs: Vec<(f64, f64)>) -> Result<Self> {
        Self::validated(Integrand::Samples(SampleTable::new(pairs)?))
    }

    pub fn samples_from_text(text: &str) -> Result<Self> {
        Self::validated(Integrand::Samples(SampleTable::from_text(text)?))
    }

    /// Parses an expression body, e.g. "1.5 + 0.3*cos(3t)".
    pub fn expression(source: &str) -> Result<Self> {
        let ast = parse_expression(source)?;
        Self::from_expression_ast(source.trim().to_string(), ast)
    }

    pub(crate) fn from_expression_ast(source: String, ast: ExprNode) -> Result<Self> {
        Self::validated(Integrand::Expression { source, ast })
    }

    /// Pointwise maximum. Positivity is inherited, so this cannot fail.
    pub fn pointwise_max(g1: Integrand, g2: Integrand) -> Integrand {
        Integrand::Max(Box::new(g1), Box::new(g2))
    }

    /// Pointwise minimum. Positivity is inherited, so this cannot fail.
    pub fn pointwise_min(g1: Integrand, g2: Integrand) -> Integrand {
        Integrand::Min(Box::new(g1), Box::new(g2))
    }

    fn validated(g: Integrand) -> Result<Integrand> {
        for i in 0..POSITIVITY_SAMPLES {
            let theta = std::f64::consts::TAU * i as f64 / POSITIVITY_SAMPLES as f64;
            let value = g.eval(theta);
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::NotPositive {
                    angle: theta,
                    value,
                });
            }
        }
        Ok(g)
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            Integrand::Constant(c) => *c,
            Integrand::Expression { ast, .. } => ast.eval(theta),
            Integrand::SupportPolygon(p) => {
                p.support(&PlanePoint::unit_from_angle(theta))
            }
            Integrand::Samples(t) => t.eval(theta),
            Integrand::Max(a, b) => a.eval(theta).max(b.eval(theta)),
            Integrand::Min(a, b) => a.eval(theta).min(b.eval(theta)),
        }
    }

    /// Polar graph {gamma(theta_i) . (cos theta_i, sin theta_i)} over K
    /// uniform angles.
    pub fn graph_points(&self, k: usize) -> Result<Vec<PlanePoint>> {
        if k < 3 {
            return Err(Error::TooFewDirections { needed: 3, got: k });
        }
        Ok((0..k)
            .map(|i| {
                let theta = std::f64::consts::TAU * i as f64 / k as f64;
                PlanePoint::unit_from_angle(theta) * self.eval(theta)
            })
            .collect())
    }

    /// Image of the polar graph under inversion: the point for angle theta
    /// is -(1/gamma(theta)) . (cos theta, sin theta).
    pub fn inverted_graph_points(&self, k: usize) -> Result<Vec<PlanePoint>> {
        if k < 3 {
            return Err(Error::TooFewDirections { needed: 3, got: k });
        }
        Ok((0..k)
            .map(|i| {
                let theta = std::f64::consts::TAU * i as f64 / k as f64;
                -PlanePoint::unit_from_angle(theta) * (1.0 / self.eval(theta))
            })
            .collect())
    }

    /// Tests whether the inverted graph is the boundary of its own convex
    /// hull at resolution K: every inverted graph point must lie within
    /// `tol` of that boundary. Default tolerance is 1e-7 times the largest
    /// point radius.
    pub fn is_convex_integrand(&self, k: usize, tol: Option<f64>) -> Result<ConvexityCheck> {
        if k < 64 {
            return Err(Error::TooFewDirections { needed: 64, got: k });
        }
        let pts = self.inverted_graph_points(k)?;
        let hull = convex_hull(&pts).map_err(|_| Error::DegenerateHull)?;
        if hull.area() < 1e-12 {
            return Err(Error::DegenerateHull);
        }
        let max_radius = pts.iter().map(|p| p.norm()).fold(0.0_f64, f64::max);
        let tolerance = tol.unwrap_or(1e-7 * max_radius);
        let edges = hull.edges();
        let mut worst = f64::NEG_INFINITY;
        let mut witness = 0.0;
        for (i, p) in pts.iter().enumerate() {
            let depth = edges
                .iter()
                .map(|e| e.offset - p.dot(&e.normal))
                .fold(f64::INFINITY, f64::min);
            if depth > worst {
                worst = depth;
                witness = std::f64::consts::TAU * i as f64 / k as f64;
            }
        }
        Ok(ConvexityCheck {
            is_convex: worst <= tolerance,
            worst_violation: worst,
            witness_angle: witness,
            tolerance,
        })
    }
}

impl std::fmt::Display for Integrand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Integrand::Constant(c) => write!(f, "const {c}"),
            Integrand::Expression { source, .. } => write!(f, "expr {source}"),
            Integrand::SupportPolygon(p) => {
                write!(f, "poly [")?;
                for (i, v) in p.vertices().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "({},{})", v.x, v.y)?;
                }
                write!(f, "]")
            }
            Integrand::Samples(t) => write!(f, "samples[{} entries]", t.len()),
            Integrand::Max(a, b) => write!(f, "max({a}, {b})"),
            Integrand::Min(a, b) => write!(f, "min({a}, {b})"),
        }
    }
}
