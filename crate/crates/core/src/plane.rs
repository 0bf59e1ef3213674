//! Plane points and the small amount of 2d vector algebra the rest of the
//! crate needs. Kept dependency-free on purpose: every routine downstream
//! states its tolerances in terms of these exact operations.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinates are finite f64; the zero point is allowed, individual ops
/// that require a direction reject it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at the given angle from the positive x axis.
    pub fn unit_from_angle(theta: f64) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    pub fn dot(&self, other: &PlanePoint) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Scalar cross product; positive when `other` is counterclockwise of self.
    pub fn cross(&self, other: &PlanePoint) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn distance(&self, other: &PlanePoint) -> f64 {
        (*self - *other).norm()
    }

    pub fn normalized(&self) -> Result<PlanePoint> {
        let n = self.norm();
        if n < 1e-12 {
            return Err(Error::ZeroPoint);
        }
        Ok(PlanePoint::new(self.x / n, self.y / n))
    }

    /// Angle in [0, 2*pi).
    pub fn angle(&self) -> f64 {
        let a = self.y.atan2(self.x);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }

    /// Rotation by -90 degrees; maps a CCW edge direction to its outward normal.
    pub fn rotated_cw(&self) -> PlanePoint {
        PlanePoint::new(self.y, -self.x)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, rhs: f64) -> PlanePoint {
        PlanePoint::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for PlanePoint {
    type Output = PlanePoint;
    fn neg(self) -> PlanePoint {
        PlanePoint::new(-self.x, -self.y)
    }
}

impl std::fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
