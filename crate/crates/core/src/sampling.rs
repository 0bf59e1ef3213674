//! Seeded random generators for verification trials. Everything here is
//! deterministic in the seed; per-trial RNGs are derived so trials stay
//! reproducible regardless of evaluation order.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::UnitSphere;

use crate::euclid::{convex_hull, ConvexPolygon};
use crate::plane::PlanePoint;
use crate::sphere::SpherePoint;

const GOLDEN: u64 = 0x9E3779B97F4A7C15;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for one trial of a seeded run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_mul(GOLDEN))
}

/// Uniform point on the unit sphere.
pub fn random_sphere_point(rng: &mut ChaCha8Rng) -> SpherePoint {
    let [u, v, w]: [f64; 3] = UnitSphere.sample(rng);
    SpherePoint::new(u, v, w).expect("unit sample cannot be zero")
}

/// Uniform point in the closed spherical cap of the given angular radius
/// (in (0, pi/2]) around `center`.
pub fn random_cap_point(
    rng: &mut ChaCha8Rng,
    center: &SpherePoint,
    angular_radius: f64,
) -> SpherePoint {
    let (t1, t2) = tangent_basis(center);
    let w = rng.gen_range(angular_radius.cos()..=1.0);
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - w * w).max(0.0).sqrt();
    let (cu, cv, cw) = (center.u, center.v, center.w);
    let x = r * phi.cos();
    let y = r * phi.sin();
    SpherePoint::new(
        x * t1.u + y * t2.u + w * cu,
        x * t1.v + y * t2.v + w * cv,
        x * t1.w + y * t2.w + w * cw,
    )
    .expect("cap point is unit by construction")
}

/// Orthonormal pair spanning the tangent plane at `p`.
pub fn tangent_basis(p: &SpherePoint) -> (SpherePoint, SpherePoint) {
    // Cross with whichever axis is least aligned with p.
    let helper = if p.u.abs() < 0.9 {
        SpherePoint::new(1.0, 0.0, 0.0).unwrap()
    } else {
        SpherePoint::new(0.0, 1.0, 0.0).unwrap()
    };
    let (cu, cv, cw) = p.cross_raw(&helper);
    let t1 = SpherePoint::new(cu, cv, cw).expect("helper is not parallel to p");
    let (du, dv, dw) = p.cross_raw(&t1);
    let t2 = SpherePoint::new(du, dv, dw).expect("cross of orthonormal pair is unit");
    (t1, t2)
}

/// Random convex polygon with 3 to 12 vertices inside [-2, 2]^2 whose
/// interior contains the disk of radius 0.1 about the origin.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng) -> ConvexPolygon {
    loop {
        let n = rng.gen_range(3..=12);
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let pts: Vec<PlanePoint> = angles
            .iter()
            .map(|&a| PlanePoint::unit_from_angle(a) * rng.gen_range(0.3..1.9))
            .collect();
        let Ok(hull) = convex_hull(&pts) else { continue };
        if hull.min_edge_offset() >= 0.1 && hull.max_vertex_radius() <= 2.0 {
            return hull;
        }
    }
}
