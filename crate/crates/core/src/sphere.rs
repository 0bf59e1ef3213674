//! Points on the unit sphere and the three maps that carry planar data onto
//! it and back: radial inversion in the plane, central projection from the
//! open upper hemisphere onto the plane at height one, and the blow-up that
//! rotates a point a quarter turn toward the north pole inside the great
//! circle it spans with the pole.
//!
//! The blow-up is the workhorse: applied to a lifted graph point of a
//! positive function it produces exactly the unit normal data of the
//! supporting half-plane, which is what makes the spherical route to Wulff
//! shapes agree with the direct one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::PlanePoint;

/// Unit vector in R^3. Constructors normalize and reject near-zero input,
/// so a value of this type always has norm 1 up to floating point error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

/// North pole; the distinguished direction for projection and blow-up.
pub const NORTH: SpherePoint = SpherePoint {
    u: 0.0,
    v: 0.0,
    w: 1.0,
};

impl SpherePoint {
    /// Normalizes (u, v, w). Rejects vectors of norm below 1e-9.
    pub fn new(u: f64, v: f64, w: f64) -> Result<Self> {
        let n = (u * u + v * v + w * w).sqrt();
        if n.is_nan() || n < 1e-9 {
            return Err(Error::ZeroPoint);
        }
        Ok(Self {
            u: u / n,
            v: v / n,
            w: w / n,
        })
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        self.u * other.u + self.v * other.v + self.w * other.w
    }

    pub fn cross_raw(&self, other: &SpherePoint) -> (f64, f64, f64) {
        (
            self.v * other.w - self.w * other.v,
            self.w * other.u - self.u * other.w,
            self.u * other.v - self.v * other.u,
        )
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        let du = self.u - other.u;
        let dv = self.v - other.v;
        let dw = self.w - other.w;
        (du * du + dv * dv + dw * dw).sqrt()
    }

    /// Angle in [0, pi] between two unit vectors. Uses the cross product
    /// alongside the dot so tiny angles resolve to full precision, where
    /// acos of the dot alone would bottom out near 2e-8.
    pub fn angle_to(&self, other: &SpherePoint) -> f64 {
        let (cx, cy, cz) = self.cross_raw(other);
        let sin = (cx * cx + cy * cy + cz * cz).sqrt();
        sin.atan2(self.dot(other))
    }

    pub fn neg(&self) -> SpherePoint {
        SpherePoint {
            u: -self.u,
            v: -self.v,
            w: -self.w,
        }
    }
}

impl std::fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.v, self.w)
    }
}

/// Radial inversion p -> -p / |p|^2. In polar form (theta, r) -> (-theta, 1/r).
/// An involution away from the origin.
pub fn inversion(p: &PlanePoint) -> Result<PlanePoint> {
    let n2 = p.norm_sq();
    if n2 < 1e-24 {
        return Err(Error::ZeroPoint);
    }
    Ok(PlanePoint::new(-p.x / n2, -p.y / n2))
}

/// Central projection of the open upper hemisphere onto the plane {w = 1},
/// (u, v, w) -> (u/w, v/w). Requires w bounded away from the equator.
pub fn central_project(p: &SpherePoint) -> Result<PlanePoint> {
    if p.w <= 1e-12 {
        return Err(Error::NotInOpenHemisphere { w: p.w });
    }
    Ok(PlanePoint::new(p.u / p.w, p.v / p.w))
}

/// Inverse of central projection: lifts a plane point onto the upper
/// hemisphere along the ray through (x, y, 1). Total on the plane.
pub fn central_unproject(p: &PlanePoint) -> SpherePoint {
    let n = (p.norm_sq() + 1.0).sqrt();
    // n >= 1, so no degeneracy is possible.
    SpherePoint {
        u: p.x / n,
        v: p.y / n,
        w: 1.0 / n,
    }
}

/// Blow-up toward the north pole:
/// P -> (N - (N.P) P) / sqrt(1 - (N.P)^2).
///
/// The image Q is the unit vector orthogonal to P inside span{N, P} with
/// N.Q > 0. Defined away from both poles; restricted to the open upper
/// hemisphere minus the pole it is injective.
pub fn spherical_blowup(p: &SpherePoint) -> Result<SpherePoint> {
    let c = NORTH.dot(p);
    let s2 = 1.0 - c * c;
    if s2 <= 1e-12 {
        return Err(Error::AtPole);
    }
    let s = s2.sqrt();
    Ok(SpherePoint {
        u: -c * p.u / s,
        v: -c * p.v / s,
        w: (1.0 - c * p.w) / s,
    })
}
