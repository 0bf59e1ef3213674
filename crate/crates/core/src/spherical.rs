//! Spherical convex geometry on the unit sphere: hemispheres, polar sets of
//! finite point sets, hemisphericity certificates, spherical convex hulls,
//! and the sampled verifiers for the polar identities.
//!
//! Everything is driven by finite generator sets. The spherical convex hull
//! of a hemispherical finite set is the intersection of the unit sphere with
//! the convex cone spanned by the generators, so all membership and distance
//! questions reduce to linear algebra on that cone: facet normals for solid
//! (rank 3) hulls, a single great-circle arc for coplanar (rank 2) sets, and
//! a point for rank 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::{halfplane_intersection, HalfPlane};
use crate::plane::PlanePoint;
use crate::report::TrialReport;
use crate::sampling::{random_sphere_point, tangent_basis, trial_rng};
use crate::sphere::SpherePoint;

/// Boundary exclusion band for sampled equivalence checks: trials whose
/// decision margin is this close to zero are skipped, since the identities
/// under test use non-strict inequalities on measure-zero boundaries.
pub const BAND: f64 = 1e-9;

const EPS_DOT: f64 = 1e-12;
const RANK_TOL: f64 = 1e-9;
const MAX_FEASIBILITY_ITERS: usize = 10_000;

/// Closed hemisphere {Q : center . Q >= 0}.
#[derive(Debug, Clone, Copy)]
pub struct Hemisphere {
    center: SpherePoint,
}

impl Hemisphere {
    pub fn new(center: SpherePoint) -> Self {
        Self { center }
    }

    pub fn center(&self) -> SpherePoint {
        self.center
    }

    pub fn contains(&self, q: &SpherePoint) -> bool {
        self.center.dot(q) >= -EPS_DOT
    }
}

pub fn in_hemisphere(h: &Hemisphere, q: &SpherePoint) -> bool {
    h.contains(q)
}

/// Nonempty finite set of unit vectors; near-duplicates (within 1e-12) are
/// merged at construction.
#[derive(Debug, Clone)]
pub struct FiniteSphereSet {
    points: Vec<SpherePoint>,
}

impl FiniteSphereSet {
    pub fn new(points: Vec<SpherePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::DegenerateInput);
        }
        let mut kept: Vec<SpherePoint> = Vec::with_capacity(points.len());
        for p in points {
            if !kept.iter().any(|q| q.distance(&p) <= 1e-12) {
                kept.push(p);
            }
        }
        Ok(Self { points: kept })
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Membership in the polar set of W: Q must lie in every hemisphere H(P).
pub fn polar_membership(w: &FiniteSphereSet, q: &SpherePoint) -> bool {
    polar_margin(w, q) >= -EPS_DOT
}

/// Smallest dot product of Q against the generators; nonnegative exactly on
/// the polar set.
pub fn polar_margin(w: &FiniteSphereSet, q: &SpherePoint) -> f64 {
    w.points
        .iter()
        .map(|p| p.dot(q))
        .fold(f64::INFINITY, f64::min)
}

/// Certified outcome of the hemisphericity test.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HemisphericityCheck {
    pub hemispherical: bool,
    /// Direction v with P . v < 0 for every generator, when hemispherical.
    pub witness: Option<SpherePoint>,
    /// Separation margin of the witness when hemispherical; otherwise the
    /// distance from the origin to the generators' convex hull (below 1e-9).
    pub margin: f64,
}

#[derive(Debug, Clone, Copy)]
struct V3 {
    x: f64,
    y: f64,
    z: f64,
}

impl V3 {
    fn from_sphere(p: &SpherePoint) -> Self {
        Self {
            x: p.u,
            y: p.v,
            z: p.w,
        }
    }

    fn dot(&self, o: &V3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    fn dot_sphere(&self, p: &SpherePoint) -> f64 {
        self.x * p.u + self.y * p.v + self.z * p.w
    }

    fn sub(&self, o: &V3) -> V3 {
        V3 {
            x: self.x - o.x,
            y: self.y - o.y,
            z: self.z - o.z,
        }
    }

    fn scale(&self, c: f64) -> V3 {
        V3 {
            x: self.x * c,
            y: self.y * c,
            z: self.z * c,
        }
    }

    fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

fn triple(a: &SpherePoint, b: &SpherePoint, c: &SpherePoint) -> f64 {
    let (x, y, z) = a.cross_raw(b);
    x * c.u + y * c.v + z * c.w
}

/// Decides whether some open hemisphere misses W entirely, i.e. whether a
/// unit v exists with P . v < 0 for all generators.
///
/// Equivalent formulation: the minimum-norm point x* of conv(W) is nonzero,
/// and then v = -x*/|x*| separates with margin |x*|. The iteration walks
/// toward the minimum-norm point (support point plus exact line search) and
/// stops at the first certificate:
/// either min P . (x/|x|) >= 1e-9, a valid witness regardless of convergence,
/// or |x| <= 1e-9, so the origin sits in the hull up to the margin
/// resolution and no hemisphere can miss W. Configurations whose true margin
/// hides inside the 1e-9 band can exhaust the iteration cap; that outcome is
/// reported as Inconclusive rather than guessed.
pub fn is_hemispherical(w: &FiniteSphereSet) -> Result<HemisphericityCheck> {
    let pts = w.points();
    let mut x = pts.iter().fold(V3 { x: 0.0, y: 0.0, z: 0.0 }, |acc, p| V3 {
        x: acc.x + p.u,
        y: acc.y + p.v,
        z: acc.z + p.w,
    });
    x = x.scale(1.0 / pts.len() as f64);

    for _ in 0..MAX_FEASIBILITY_ITERS {
        let nx = x.norm();
        if nx <= 1e-9 {
            return Ok(HemisphericityCheck {
                hemispherical: false,
                witness: None,
                margin: nx,
            });
        }
        let xh = x.scale(1.0 / nx);
        let mut smin = f64::INFINITY;
        let mut sidx = 0;
        for (i, p) in pts.iter().enumerate() {
            let d = xh.dot_sphere(p);
            if d < smin {
                smin = d;
                sidx = i;
            }
        }
        if smin >= 1e-9 {
            let witness = SpherePoint::new(-xh.x, -xh.y, -xh.z)
                .expect("normalized direction is unit");
            return Ok(HemisphericityCheck {
                hemispherical: true,
                witness: Some(witness),
                margin: smin,
            });
        }
        // Line search on the segment toward the support point. A zero step
        // cannot happen here: it would certify smin >= |x| > 1e-9 above.
        let p = V3::from_sphere(&pts[sidx]);
        let d = x.sub(&p);
        let t = (x.dot(&d) / d.norm_sq()).clamp(0.0, 1.0);
        x = x.sub(&d.scale(t));
    }
    Err(Error::Inconclusive)
}

#[derive(Debug, Clone)]
struct Facet {
    a: SpherePoint,
    b: SpherePoint,
    /// Unit normal of the facet plane, oriented so cross(a, b) . m > 0.
    m: SpherePoint,
    /// Facet normal pointing into the cone: every generator has a
    /// nonnegative dot with it.
    inward: SpherePoint,
}

#[derive(Debug, Clone)]
enum Shape {
    /// Rank 1: a single point.
    Point { p: SpherePoint },
    /// Rank 2: a minor great-circle arc between the angular extremes, with
    /// the plane normal oriented so cross(a, b) . m > 0.
    Arc {
        a: SpherePoint,
        b: SpherePoint,
        m: SpherePoint,
    },
    /// Rank 3: a solid spherical polygon, described by its facet planes.
    Solid { facets: Vec<Facet> },
}

/// Precomputed description of the spherical convex hull of a hemispherical
/// finite set: the cone facets (or arc, or point) plus the hemisphericity
/// certificate that legitimizes the construction.
#[derive(Debug, Clone)]
pub struct SconvGeometry {
    points: Vec<SpherePoint>,
    shape: Shape,
    witness: SpherePoint,
    margin: f64,
}

impl SconvGeometry {
    pub fn new(w: &FiniteSphereSet) -> Result<Self> {
        let check = is_hemispherical(w)?;
        if !check.hemispherical {
            return Err(Error::NotHemispherical);
        }
        let witness = check.witness.expect("hemispherical result carries a witness");
        let pts = w.points().to_vec();
        let shape = classify(&pts)?;
        Ok(Self {
            points: pts,
            shape,
            witness,
            margin: check.margin,
        })
    }

    pub fn generators(&self) -> &[SpherePoint] {
        &self.points
    }

    /// The hemisphericity witness: every generator has a strictly negative
    /// dot with it.
    pub fn witness(&self) -> SpherePoint {
        self.witness
    }

    /// Separation margin of the witness direction.
    pub fn hemisphericity_margin(&self) -> f64 {
        self.margin
    }

    /// Signed membership margin for the hull. Solid hulls report the
    /// smallest inward facet dot (positive inside), lower-rank hulls report
    /// the negated angular distance, so the sign convention is uniform:
    /// nonnegative means member.
    pub fn signed_margin(&self, q: &SpherePoint) -> f64 {
        match &self.shape {
            Shape::Solid { facets } => facets
                .iter()
                .map(|f| f.inward.dot(q))
                .fold(f64::INFINITY, f64::min),
            _ => -self.angular_distance(q),
        }
    }

    pub fn contains(&self, q: &SpherePoint, tol: f64) -> bool {
        self.angular_distance(q) <= tol
    }

    /// Angular (geodesic) distance from Q to the hull.
    pub fn angular_distance(&self, q: &SpherePoint) -> f64 {
        match &self.shape {
            Shape::Point { p } => p.angle_to(q),
            Shape::Arc { a, b, m } => arc_distance(q, a, b, m),
            Shape::Solid { facets } => {
                let inside = facets.iter().all(|f| f.inward.dot(q) >= 0.0);
                if inside {
                    return 0.0;
                }
                let mut best = self
                    .points
                    .iter()
                    .map(|p| p.angle_to(q))
                    .fold(f64::INFINITY, f64::min);
                for f in facets {
                    if let Some(proj) = project_to_arc(q, &f.a, &f.b, &f.m) {
                        best = best.min(proj.angle_to(q));
                    }
                }
                best
            }
        }
    }

    /// Minimum of X . Q over the hull. The minimizer is a generator, the
    /// antipodal great-circle projection on a boundary arc, or -Q itself
    /// when the hull contains it.
    pub fn min_dot(&self, q: &SpherePoint) -> f64 {
        let gen_min = self
            .points
            .iter()
            .map(|p| p.dot(q))
            .fold(f64::INFINITY, f64::min);
        match &self.shape {
            Shape::Point { .. } => gen_min,
            Shape::Arc { a, b, m } => {
                let mut best = gen_min;
                if let Some(anti) = antipodal_projection_on_arc(q, a, b, m) {
                    best = best.min(anti.dot(q));
                }
                best
            }
            Shape::Solid { facets } => {
                let mut best = gen_min;
                for f in facets {
                    if let Some(anti) = antipodal_projection_on_arc(q, &f.a, &f.b, &f.m) {
                        best = best.min(anti.dot(q));
                    }
                }
                let neg = q.neg();
                if facets.iter().all(|f| f.inward.dot(&neg) >= 0.0) {
                    best = best.min(-1.0);
                }
                best
            }
        }
    }
}

/// Closest point to Q on the great circle through the plane with unit
/// normal m, if that projection lands on the minor arc from a to b.
fn project_to_arc(
    q: &SpherePoint,
    a: &SpherePoint,
    b: &SpherePoint,
    m: &SpherePoint,
) -> Option<SpherePoint> {
    let qm = q.dot(m);
    let (px, py, pz) = (q.u - qm * m.u, q.v - qm * m.v, q.w - qm * m.w);
    let proj = SpherePoint::new(px, py, pz).ok()?;
    on_minor_arc(&proj, a, b, m).then_some(proj)
}

/// The in-plane point farthest from Q (the antipode of the projection), if
/// it lands on the minor arc.
fn antipodal_projection_on_arc(
    q: &SpherePoint,
    a: &SpherePoint,
    b: &SpherePoint,
    m: &SpherePoint,
) -> Option<SpherePoint> {
    let qm = q.dot(m);
    let (px, py, pz) = (q.u - qm * m.u, q.v - qm * m.v, q.w - qm * m.w);
    let anti = SpherePoint::new(-px, -py, -pz).ok()?;
    on_minor_arc(&anti, a, b, m).then_some(anti)
}

/// Whether in-plane unit point X lies on the minor arc from a to b, where m
/// satisfies cross(a, b) . m > 0 and the arc spans less than a half turn.
fn on_minor_arc(x: &SpherePoint, a: &SpherePoint, b: &SpherePoint, m: &SpherePoint) -> bool {
    triple(a, x, m) >= -EPS_DOT && triple(x, b, m) >= -EPS_DOT
}

fn arc_distance(q: &SpherePoint, a: &SpherePoint, b: &SpherePoint, m: &SpherePoint) -> f64 {
    let mut best = a.angle_to(q).min(b.angle_to(q));
    if let Some(proj) = project_to_arc(q, a, b, m) {
        best = best.min(proj.angle_to(q));
    }
    best
}

/// Classifies the generator span and precomputes the hull boundary. Only
/// called on hemispherical sets, which rules out antipodal pairs.
fn classify(pts: &[SpherePoint]) -> Result<Shape> {
    // Widest-spread pair, by cross product norm, to pick a robust plane.
    let mut best_pair = (0, 0);
    let mut best_cross = 0.0_f64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let (x, y, z) = pts[i].cross_raw(&pts[j]);
            let c = (x * x + y * y + z * z).sqrt();
            if c > best_cross {
                best_cross = c;
                best_pair = (i, j);
            }
        }
    }
    if best_cross <= RANK_TOL {
        return Ok(Shape::Point { p: pts[0] });
    }
    let (i0, j0) = best_pair;
    let (mx, my, mz) = pts[i0].cross_raw(&pts[j0]);
    let m = SpherePoint::new(mx, my, mz).expect("cross norm checked above");
    let coplanar = pts.iter().all(|p| p.dot(&m).abs() <= RANK_TOL);

    if coplanar {
        // Angular extremes of the coplanar set span the whole hull arc.
        let (mut ai, mut bi, mut widest) = (i0, j0, -1.0_f64);
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let ang = pts[i].angle_to(&pts[j]);
                if ang > widest {
                    widest = ang;
                    ai = i;
                    bi = j;
                }
            }
        }
        let (a, b) = (pts[ai], pts[bi]);
        let m = if triple(&a, &b, &m) >= 0.0 { m } else { m.neg() };
        return Ok(Shape::Arc { a, b, m });
    }

    // Rank 3: keep every generator pair whose plane has all generators on
    // one side. Coplanar collections collapse to the widest pair per plane.
    let mut facets: Vec<Facet> = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let (x, y, z) = pts[i].cross_raw(&pts[j]);
            if (x * x + y * y + z * z).sqrt() <= RANK_TOL {
                continue;
            }
            let m = SpherePoint::new(x, y, z).expect("norm checked");
            let dots: Vec<f64> = pts.iter().map(|p| p.dot(&m)).collect();
            let dmin = dots.iter().cloned().fold(f64::INFINITY, f64::min);
            let dmax = dots.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let inward = if dmin >= -RANK_TOL {
                m
            } else if dmax <= RANK_TOL {
                m.neg()
            } else {
                continue;
            };
            let candidate = Facet {
                a: pts[i],
                b: pts[j],
                m,
                inward,
            };
            match facets
                .iter_mut()
                .find(|f| f.inward.distance(&inward) <= 1e-9)
            {
                Some(existing) => {
                    if candidate.a.angle_to(&candidate.b)
                        > existing.a.angle_to(&existing.b)
                    {
                        *existing = candidate;
                    }
                }
                None => facets.push(candidate),
            }
        }
    }
    if facets.len() < 3 {
        return Err(Error::Inconclusive);
    }
    Ok(Shape::Solid { facets })
}

/// Membership of Q in the spherical convex hull of W, within angular
/// distance `tol`.
pub fn s_conv_membership(w: &FiniteSphereSet, q: &SpherePoint, tol: f64) -> Result<bool> {
    Ok(SconvGeometry::new(w)?.contains(q, tol))
}

/// Finite generator set of the polar W° = ∩ H(P_i), such that
/// polar_membership against the result decides membership in W°°.
///
/// The polar of a finite hemispherical set is the unit-sphere trace of a
/// polyhedral cone, hence finitely generated. The generator set depends on
/// the span of W: a single point polarizes to a full hemisphere (its center
/// plus two tangent axis pairs), a coplanar set to a wedge (the two plane
/// normals plus one edge ray per endpoint), and a full-rank set to a
/// spherical polygon whose vertices are computed in the central-projection
/// chart around the hemisphericity axis, where each hemisphere constraint
/// becomes a half-plane.
pub fn polar_generators(w: &FiniteSphereSet) -> Result<FiniteSphereSet> {
    polar_generators_of(&SconvGeometry::new(w)?)
}

pub fn polar_generators_of(geo: &SconvGeometry) -> Result<FiniteSphereSet> {
    match &geo.shape {
        Shape::Point { p } => {
            let (t1, t2) = tangent_basis(p);
            FiniteSphereSet::new(vec![*p, t1, t1.neg(), t2, t2.neg()])
        }
        Shape::Arc { a, b, m } => {
            let ab = a.dot(b);
            let d1 = SpherePoint::new(b.u - ab * a.u, b.v - ab * a.v, b.w - ab * a.w)
                .map_err(|_| Error::PolarNotHemispherical)?;
            let d2 = SpherePoint::new(a.u - ab * b.u, a.v - ab * b.v, a.w - ab * b.w)
                .map_err(|_| Error::PolarNotHemispherical)?;
            FiniteSphereSet::new(vec![*m, m.neg(), d1, d2])
        }
        Shape::Solid { .. } => {
            // Chart center: the axis every generator sees with margin > 0,
            // so each hemisphere constraint has a positive chart offset.
            let c = geo.witness.neg();
            let (e1, e2) = tangent_basis(&c);
            let mut planes = Vec::with_capacity(geo.points.len());
            for p in &geo.points {
                let ax = p.dot(&e1);
                let ay = p.dot(&e2);
                let b = p.dot(&c);
                if (ax * ax + ay * ay).sqrt() <= EPS_DOT {
                    // The constraint from c itself covers the whole chart.
                    continue;
                }
                planes.push(
                    HalfPlane::new(PlanePoint::new(-ax, -ay), b)
                        .expect("nonzero chart normal"),
                );
            }
            let polygon = match halfplane_intersection(&planes) {
                Ok(poly) => poly,
                Err(Error::Unbounded) => return Err(Error::PolarNotHemispherical),
                Err(e) => return Err(e),
            };
            let verts = polygon
                .vertices()
                .iter()
                .map(|v| {
                    SpherePoint::new(
                        v.x * e1.u + v.y * e2.u + c.u,
                        v.x * e1.v + v.y * e2.v + c.v,
                        v.x * e1.w + v.y * e2.w + c.w,
                    )
                    .expect("chart point has unit-normalizable lift")
                })
                .collect();
            FiniteSphereSet::new(verts)
        }
    }
}

/// Membership of Q in W°° through the finite generator description of W°.
pub fn double_polar_membership(w: &FiniteSphereSet, q: &SpherePoint) -> Result<bool> {
    Ok(polar_membership(&polar_generators(w)?, q))
}

/// Sampled check of the polar identity for spherical hulls: membership in
/// ∩ H(P_i) must coincide with nonnegativity of Q against the entire hull,
/// computed geometrically (facets, arcs, antipodal projections) rather than
/// through the generators.
pub fn verify_maehara(w: &FiniteSphereSet, trials: u64, seed: u64) -> Result<TrialReport> {
    let geo = SconvGeometry::new(w)?;
    let mut mismatches = 0;
    let mut worst = f64::INFINITY;
    for t in 0..trials {
        let q = random_sphere_point(&mut trial_rng(seed, t));
        let lhs_margin = polar_margin(w, &q);
        let rhs_margin = geo.min_dot(&q);
        if lhs_margin.abs() <= BAND || rhs_margin.abs() <= BAND {
            continue;
        }
        if (lhs_margin >= 0.0) != (rhs_margin >= 0.0) {
            mismatches += 1;
        }
        worst = worst.min(lhs_margin.abs().min(rhs_margin.abs()));
    }
    Ok(TrialReport {
        name: "maehara-polar-identity".into(),
        trials,
        mismatches,
        worst_margin: if worst.is_finite() { worst } else { 0.0 },
        seed,
        pass: mismatches == 0,
    })
}

/// Sampled check that the hull equals its double polar: hull membership
/// (cone facets) against polar membership over the computed generator set
/// of W°.
pub fn verify_double_polar(w: &FiniteSphereSet, trials: u64, seed: u64) -> Result<TrialReport> {
    let geo = SconvGeometry::new(w)?;
    let polar = polar_generators_of(&geo)?;
    let mut mismatches = 0;
    let mut worst = f64::INFINITY;
    for t in 0..trials {
        let q = random_sphere_point(&mut trial_rng(seed, t));
        let lhs_margin = geo.signed_margin(&q);
        let rhs_margin = polar_margin(&polar, &q);
        if lhs_margin.abs() <= BAND || rhs_margin.abs() <= BAND {
            continue;
        }
        if (lhs_margin >= 0.0) != (rhs_margin >= 0.0) {
            mismatches += 1;
        }
        worst = worst.min(lhs_margin.abs().min(rhs_margin.abs()));
    }
    Ok(TrialReport {
        name: "double-polar-identity".into(),
        trials,
        mismatches,
        worst_margin: if worst.is_finite() { worst } else { 0.0 },
        seed,
        pass: mismatches == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_cap_point, rng_for};
    use crate::sphere::NORTH;

    fn sp(u: f64, v: f64, w: f64) -> SpherePoint {
        SpherePoint::new(u, v, w).unwrap()
    }

    fn set(points: Vec<SpherePoint>) -> FiniteSphereSet {
        FiniteSphereSet::new(points).unwrap()
    }

    #[test]
    fn hemisphere_membership_is_nonstrict() {
        let h = Hemisphere::new(NORTH);
        assert!(in_hemisphere(&h, &NORTH));
        assert!(!in_hemisphere(&h, &NORTH.neg()));
        assert!(in_hemisphere(&h, &sp(1.0, 0.0, 0.0)));
    }

    #[test]
    fn polar_membership_examples() {
        let w = set(vec![NORTH]);
        assert!(polar_membership(&w, &NORTH));

        let w = set(vec![NORTH, sp(1.0, 0.0, 0.0)]);
        assert!(!polar_membership(&w, &sp(-1.0, 0.0, 0.0)));
        assert!(polar_membership(&w, &sp(0.0, 1.0, 0.0)));
    }

    #[test]
    fn duplicate_points_are_merged() {
        let w = set(vec![NORTH, NORTH, sp(1.0, 0.0, 0.0)]);
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn singleton_is_hemispherical_with_antipodal_witness() {
        let check = is_hemispherical(&set(vec![NORTH])).unwrap();
        assert!(check.hemispherical);
        let v = check.witness.unwrap();
        assert!(v.distance(&NORTH.neg()) <= 1e-12);
        assert!((check.margin - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn antipodal_pair_is_not_hemispherical() {
        let check = is_hemispherical(&set(vec![NORTH, NORTH.neg()])).unwrap();
        assert!(!check.hemispherical);
        assert!(check.margin <= 1e-9);
    }

    #[test]
    fn spread_equator_points_are_not_hemispherical() {
        let pts = [0.0_f64, 100.0, 200.0]
            .iter()
            .map(|deg| {
                let r = deg.to_radians();
                sp(r.cos(), r.sin(), 0.0)
            })
            .collect();
        let check = is_hemispherical(&set(pts)).unwrap();
        assert!(!check.hemispherical);
    }

    #[test]
    fn cap_points_are_hemispherical_with_witness_near_anticenter() {
        let center = sp(1.0, 0.0, 0.0);
        let mut rng = rng_for(101);
        let pts: Vec<SpherePoint> = (0..20)
            .map(|_| random_cap_point(&mut rng, &center, 0.4))
            .collect();
        let w = set(pts.clone());
        let check = is_hemispherical(&w).unwrap();
        assert!(check.hemispherical);
        let v = check.witness.unwrap();
        // The witness must strictly separate, and sit close to -center.
        for p in &pts {
            assert!(p.dot(&v) < 0.0);
        }
        assert!(v.angle_to(&center.neg()) <= 0.4 + 1e-9);

        // Independent grid oracle: some direction on a dense sphere grid
        // must strictly separate as well.
        let found = fibonacci_grid(100_000)
            .into_iter()
            .any(|g| pts.iter().all(|p| p.dot(&g) < 0.0));
        assert!(found);
    }

    // Deterministic near-uniform direction grid, independent of the
    // feasibility iteration.
    fn fibonacci_grid(n: usize) -> Vec<SpherePoint> {
        let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
        (0..n)
            .map(|i| {
                let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
                let r = (1.0 - z * z).max(0.0).sqrt();
                let phi = std::f64::consts::TAU * (i as f64 / golden).fract();
                sp(r * phi.cos(), r * phi.sin(), z)
            })
            .collect()
    }

    #[test]
    fn s_conv_membership_examples() {
        let w = set(vec![NORTH]);
        assert!(s_conv_membership(&w, &NORTH, 1e-9).unwrap());

        let e1 = sp(1.0, 0.0, 0.0);
        let e2 = sp(0.0, 1.0, 0.0);
        let w = set(vec![e1, e2]);
        let mid = sp(1.0 / 2.0_f64.sqrt(), 1.0 / 2.0_f64.sqrt(), 0.0);
        assert!(s_conv_membership(&w, &mid, 1e-9).unwrap());
        assert!(!s_conv_membership(&w, &NORTH, 1e-9).unwrap());
        // North is a quarter turn from every point of that arc.
        let geo = SconvGeometry::new(&w).unwrap();
        assert!((geo.angular_distance(&NORTH) - std::f64::consts::FRAC_PI_2).abs() <= 1e-12);
    }

    #[test]
    fn s_conv_requires_hemisphericity() {
        let w = set(vec![NORTH, NORTH.neg()]);
        assert!(matches!(
            s_conv_membership(&w, &NORTH, 1e-9),
            Err(Error::NotHemispherical)
        ));
    }

    #[test]
    fn solid_hull_membership_and_distance() {
        let e1 = sp(1.0, 0.0, 0.0);
        let e2 = sp(0.0, 1.0, 0.0);
        let w = set(vec![NORTH, e1, e2]);
        let geo = SconvGeometry::new(&w).unwrap();
        // The normalized centroid is inside the first-octant hull.
        let inside = sp(1.0, 1.0, 1.0);
        assert!(geo.contains(&inside, 1e-12));
        assert_eq!(geo.angular_distance(&inside), 0.0);
        // A point below the equator is outside by at least its latitude.
        let below = sp(1.0, 1.0, -1.0);
        assert!(!geo.contains(&below, 1e-6));
        let d = geo.angular_distance(&below);
        let expected = below.angle_to(&sp(1.0, 1.0, 0.0));
        assert!((d - expected).abs() <= 1e-12);
        // min over the hull of X . (-N) is -1, at the generator N itself,
        // found through the antipode-in-cone branch.
        assert!((geo.min_dot(&NORTH.neg()) + 1.0).abs() <= 1e-12);
        // min over the hull of X . N is attained at an equator generator.
        assert!((geo.min_dot(&NORTH) - 0.0).abs() <= 1e-12);
        let tilted = sp(-1.0, -1.0, -1.0);
        assert!((geo.min_dot(&tilted) - tilted.dot(&inside)).abs() <= 1e-12);
    }

    #[test]
    fn min_dot_sees_arc_interior() {
        // Hull is the quarter arc from e1 to e2; for Q = normalized
        // (1, 1, 0) the minimum over the arc is at an endpoint, but for
        // Q = N's tilt toward -x - y the antipodal projection wins.
        let e1 = sp(1.0, 0.0, 0.0);
        let e2 = sp(0.0, 1.0, 0.0);
        let geo = SconvGeometry::new(&set(vec![e1, e2])).unwrap();
        let q = sp(-1.0, -1.0, 0.2);
        // Brute force over dense arc samples.
        let mut brute = f64::INFINITY;
        for i in 0..=10_000 {
            let t = i as f64 / 10_000.0 * std::f64::consts::FRAC_PI_2;
            let x = sp(t.cos(), t.sin(), 0.0);
            brute = brute.min(x.dot(&q));
        }
        assert!((geo.min_dot(&q) - brute).abs() <= 1e-8);
        assert!(geo.min_dot(&q) <= brute + 1e-12);
    }

    #[test]
    fn maehara_singleton_and_lune() {
        let r = verify_maehara(&set(vec![NORTH]), 1000, 42).unwrap();
        assert_eq!(r.mismatches, 0);
        assert!(r.pass);

        let r = verify_maehara(&set(vec![NORTH, sp(1.0, 0.0, 0.0)]), 1000, 42).unwrap();
        assert_eq!(r.mismatches, 0);
    }

    #[test]
    fn maehara_on_random_cap_set() {
        let mut rng = rng_for(7);
        let center = sp(0.3, -0.5, 0.81);
        let pts: Vec<SpherePoint> = (0..10)
            .map(|_| random_cap_point(&mut rng, &center, 0.5))
            .collect();
        let r = verify_maehara(&set(pts), 10_000, 1234).unwrap();
        assert_eq!(r.mismatches, 0, "{r:?}");
        assert!(r.worst_margin > BAND);
    }

    #[test]
    fn maehara_requires_hemisphericity() {
        assert!(matches!(
            verify_maehara(&set(vec![NORTH, NORTH.neg()]), 10, 0),
            Err(Error::NotHemispherical)
        ));
    }

    #[test]
    fn polar_generators_of_singleton_span_the_hemisphere() {
        let v = polar_generators(&set(vec![NORTH])).unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.points().iter().any(|p| p.distance(&NORTH) <= 1e-12));
        // Membership against V must carve out exactly {N}.
        assert!(polar_membership(&v, &NORTH));
        assert!(!polar_membership(&v, &sp(1.0, 0.0, 0.0)));
        assert!(!polar_membership(&v, &sp(0.9, 0.0, 0.43589)));
    }

    #[test]
    fn polar_generators_of_lune_give_quarter_arc() {
        let e1 = sp(1.0, 0.0, 0.0);
        let e2 = sp(0.0, 1.0, 0.0);
        let v = polar_generators(&set(vec![NORTH, e1])).unwrap();
        assert_eq!(v.len(), 4);
        for expected in [e2, e2.neg(), e1, NORTH] {
            assert!(
                v.points().iter().any(|p| p.distance(&expected) <= 1e-9),
                "missing {expected:?}"
            );
        }
        // W°° = quarter arc from N to e1.
        let mid = sp(1.0, 0.0, 1.0);
        assert!(polar_membership(&v, &mid));
        assert!(!polar_membership(&v, &sp(1.0, 0.1, 1.0)));
        assert!(!polar_membership(&v, &sp(-0.1, 0.0, 1.0)));
    }

    #[test]
    fn polar_generators_solid_octant() {
        let e1 = sp(1.0, 0.0, 0.0);
        let e2 = sp(0.0, 1.0, 0.0);
        let w = set(vec![NORTH, e1, e2]);
        let v = polar_generators(&w).unwrap();
        // The first octant is self-polar: generators are its three corners.
        assert_eq!(v.len(), 3);
        for expected in [NORTH, e1, e2] {
            assert!(v.points().iter().any(|p| p.distance(&expected) <= 1e-9));
        }
    }

    #[test]
    fn double_polar_examples() {
        let r = verify_double_polar(&set(vec![NORTH]), 10_000, 5).unwrap();
        assert_eq!(r.mismatches, 0, "{r:?}");

        let r = verify_double_polar(&set(vec![NORTH, sp(1.0, 0.0, 0.0)]), 10_000, 5).unwrap();
        assert_eq!(r.mismatches, 0, "{r:?}");

        let mut rng = rng_for(19);
        let center = sp(-0.2, 0.4, 0.894427190999916);
        let pts: Vec<SpherePoint> = (0..6)
            .map(|_| random_cap_point(&mut rng, &center, 0.45))
            .collect();
        let r = verify_double_polar(&set(pts), 10_000, 99).unwrap();
        assert_eq!(r.mismatches, 0, "{r:?}");
    }

    #[test]
    fn verifier_reports_are_deterministic_per_seed() {
        let w = set(vec![NORTH, sp(1.0, 0.0, 0.0)]);
        let a = serde_json::to_string(&verify_maehara(&w, 500, 77).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_maehara(&w, 500, 77).unwrap()).unwrap();
        assert_eq!(a, b);
        let c = serde_json::to_string(&verify_maehara(&w, 500, 78).unwrap()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn generators_belong_to_their_double_polar() {
        let mut rng = rng_for(31);
        let center = sp(0.6, 0.0, 0.8);
        for _ in 0..10 {
            let pts: Vec<SpherePoint> = (0..8)
                .map(|_| random_cap_point(&mut rng, &center, 0.6))
                .collect();
            let w = set(pts);
            let v = polar_generators(&w).unwrap();
            for p in w.points() {
                assert!(polar_margin(&v, p) >= -1e-9);
            }
        }
    }
}
