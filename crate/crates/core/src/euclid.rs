//! Convex polygons in the plane and the operations the Wulff constructions
//! are assembled from: convex hulls, intersections of half-planes, polar
//! duals, polygon intersections, hulls of unions, and Hausdorff distances.
//!
//! Polygons are stored purely as counterclockwise vertex lists (a
//! V-representation). Half-plane data exists only transiently inside the
//! operations that need it; nothing caches an H-representation.
//!
//! Tolerances: collinearity is decided on raw cross products against
//! `EPS_COLLINEAR`, and "strictly positive" quantities (offsets, interior
//! clearances) are tested against `EPS_ZERO`. Validation of explicit vertex
//! lists applies them absolutely and expects inputs at unit scale. The
//! repair passes inside computed constructions (half-plane sweeps, cycle
//! cleanup) scale them by the data's own magnitude, so those code paths
//! commute exactly with scaling by powers of two.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::plane::PlanePoint;

/// Cross products with absolute value at or below this are treated as zero
/// when deciding collinearity.
pub const EPS_COLLINEAR: f64 = 1e-12;

/// General absolute zero threshold for lengths and offsets at unit scale.
pub const EPS_ZERO: f64 = 1e-12;

/// Closed half-plane {x : x . normal <= offset} with a unit outward normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    normal: PlanePoint,
    offset: f64,
}

impl HalfPlane {
    /// Normalizes the normal and rescales the offset accordingly.
    pub fn new(normal: PlanePoint, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if n < EPS_ZERO {
            return Err(Error::ZeroPoint);
        }
        Ok(Self {
            normal: PlanePoint::new(normal.x / n, normal.y / n),
            offset: offset / n,
        })
    }

    pub fn normal(&self) -> PlanePoint {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn contains(&self, p: &PlanePoint, tol: f64) -> bool {
        p.dot(&self.normal) <= self.offset + tol
    }

    /// Positive where the point violates the constraint.
    pub fn excess(&self, p: &PlanePoint) -> f64 {
        p.dot(&self.normal) - self.offset
    }
}

/// One directed boundary edge with its outward unit normal and offset.
#[derive(Debug, Clone, Copy)]
pub struct Edge {
    pub a: PlanePoint,
    pub b: PlanePoint,
    pub normal: PlanePoint,
    pub offset: f64,
}

/// Bounded convex polygon: at least three vertices, counterclockwise,
/// strictly convex (no three consecutive vertices collinear within
/// `EPS_COLLINEAR`).
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<PlanePoint>,
}

impl ConvexPolygon {
    /// Validates an explicit vertex list. The list must already be
    /// counterclockwise and strictly convex; use `convex_hull` to build a
    /// polygon from unordered or redundant points. The cycle is stored
    /// starting from the lexicographically smallest vertex, so equal
    /// polygons compare and serialize identically however they were built.
    pub fn new(mut vertices: Vec<PlanePoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon("non-finite coordinate".into()));
        }
        let n = vertices.len();
        for i in 0..n {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let turn = (cur - prev).cross(&(next - cur));
            if turn <= EPS_COLLINEAR {
                return Err(Error::InvalidPolygon(format!(
                    "vertices are not strictly convex counterclockwise at index {i} (turn {turn:.3e})"
                )));
            }
        }
        let start = (0..n)
            .min_by(|&a, &b| {
                (vertices[a].x, vertices[a].y)
                    .partial_cmp(&(vertices[b].x, vertices[b].y))
                    .expect("finite coordinates compare")
            })
            .unwrap();
        vertices.rotate_left(start);
        Ok(Self { vertices })
    }

    /// Builds from a cyclic point sequence that is convex up to floating
    /// point noise: merges near-duplicate neighbors and drops near-collinear
    /// vertices, then validates. Used by the geometric constructions whose
    /// outputs are convex by design.
    fn from_cycle(mut pts: Vec<PlanePoint>) -> Result<Self> {
        // Cleanup thresholds are relative to the cycle's coordinate scale,
        // so the repair decisions are invariant under power-of-two scaling
        // (every quantity below doubles exactly when the input doubles) and
        // constructions commute with scaling bit for bit.
        let scale = pts
            .iter()
            .map(|p| p.x.abs() + p.y.abs())
            .fold(0.0_f64, f64::max)
            .max(f64::MIN_POSITIVE);
        let dup_tol = 1e-10 * scale;
        let flat_tol = EPS_COLLINEAR * scale * scale;
        // Remove one defect per pass. Sweeping out everything that looks
        // collinear at once can delete BOTH copies of a doubled corner
        // (each copy flattens its twin's turn), losing the corner itself;
        // removing a single point at a time lets the survivor keep its
        // place on the hull.
        loop {
            let n = pts.len();
            if n < 3 {
                return Err(Error::DegenerateInput);
            }
            // Cyclic near-duplicate pair: drop the later copy.
            if let Some(i) = (0..n).find(|&i| pts[i].distance(&pts[(i + 1) % n]) <= dup_tol) {
                pts.remove((i + 1) % n);
                continue;
            }
            // Flattest near-collinear vertex, if any qualifies.
            let mut flattest: Option<(usize, f64)> = None;
            for i in 0..n {
                let prev = pts[(i + n - 1) % n];
                let cur = pts[i];
                let next = pts[(i + 1) % n];
                let turn = (cur - prev).cross(&(next - cur));
                if turn <= flat_tol && flattest.is_none_or(|(_, t)| turn < t) {
                    flattest = Some((i, turn));
                }
            }
            match flattest {
                Some((i, _)) => {
                    pts.remove(i);
                }
                None => break,
            }
        }
        Self::new(pts)
    }

    pub fn vertices(&self) -> &[PlanePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Shoelace area; positive because vertices are counterclockwise.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut twice = 0.0;
        for i in 0..n {
            twice += self.vertices[i].cross(&self.vertices[(i + 1) % n]);
        }
        twice / 2.0
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0_f64;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                best = best.max(a.distance(b));
            }
        }
        best
    }

    /// Support function value in direction `u` (need not be unit).
    pub fn support(&self, u: &PlanePoint) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                // Validated polygons never have zero-length edges.
                let normal = (b - a).rotated_cw().normalized().unwrap();
                Edge {
                    a,
                    b,
                    normal,
                    offset: normal.dot(&a),
                }
            })
            .collect()
    }

    pub fn contains(&self, p: &PlanePoint, tol: f64) -> bool {
        self.interior_depth(p) >= -tol
    }

    /// Smallest slack over the edge constraints; positive strictly inside,
    /// negative outside. For interior points this is the distance to the
    /// boundary.
    pub fn interior_depth(&self, p: &PlanePoint) -> f64 {
        self.edges()
            .iter()
            .map(|e| e.offset - p.dot(&e.normal))
            .fold(f64::INFINITY, f64::min)
    }

    /// Euclidean distance from `p` to the polygon as a set (zero inside).
    pub fn exterior_distance(&self, p: &PlanePoint) -> f64 {
        if self.interior_depth(p) >= 0.0 {
            return 0.0;
        }
        self.boundary_distance(p)
    }

    /// Euclidean distance from `p` to the polygon boundary, on either side.
    pub fn boundary_distance(&self, p: &PlanePoint) -> f64 {
        self.edges()
            .iter()
            .map(|e| point_segment_distance(p, &e.a, &e.b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Smallest distance from the origin to an edge line; positive when the
    /// origin is strictly interior.
    pub fn min_edge_offset(&self) -> f64 {
        self.edges()
            .iter()
            .map(|e| e.offset)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_vertex_radius(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.norm())
            .fold(0.0_f64, f64::max)
    }

    /// Point reflection through the origin. Negation rotates by half a turn,
    /// so the vertex order stays counterclockwise.
    pub fn reflected(&self) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| -*v).collect(),
        }
    }

    pub fn scaled(&self, c: f64) -> Result<ConvexPolygon> {
        if c.is_nan() || c <= 0.0 {
            return Err(Error::InvalidPolygon(format!("scale must be positive, got {c}")));
        }
        Ok(ConvexPolygon {
            vertices: self.vertices.iter().map(|v| *v * c).collect(),
        })
    }
}

impl Serialize for ConvexPolygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            vertices: Vec<[f64; 2]>,
            #[serde(skip)]
            _phantom: std::marker::PhantomData<&'a ()>,
        }
        Repr {
            vertices: self.vertices.iter().map(|v| [v.x, v.y]).collect(),
            _phantom: std::marker::PhantomData,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ConvexPolygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let pts = repr
            .vertices
            .into_iter()
            .map(|[x, y]| PlanePoint::new(x, y))
            .collect();
        ConvexPolygon::new(pts).map_err(|e| D::Error::custom(e.to_string()))
    }
}

pub fn point_segment_distance(p: &PlanePoint, a: &PlanePoint, b: &PlanePoint) -> f64 {
    let ab = *b - *a;
    let len2 = ab.norm_sq();
    if len2 <= EPS_ZERO * EPS_ZERO {
        return p.distance(a);
    }
    let t = ((*p - *a).dot(&ab) / len2).clamp(0.0, 1.0);
    p.distance(&(*a + ab * t))
}

/// Indices of the convex hull of `points`, counterclockwise starting from
/// the lexicographic minimum. Collinear points are dropped.
pub fn convex_hull_indices(points: &[PlanePoint]) -> Result<Vec<usize>> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidPolygon("non-finite coordinate".into()));
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        points[i]
            .x
            .partial_cmp(&points[j].x)
            .unwrap()
            .then(points[i].y.partial_cmp(&points[j].y).unwrap())
    });
    // Drop exact/near duplicates so zero-length hull edges cannot appear.
    order.dedup_by(|&mut b, &mut a| points[a].distance(&points[b]) <= EPS_ZERO);
    if order.len() < 3 {
        return Err(Error::DegenerateInput);
    }

    let turn = |o: usize, a: usize, b: usize| -> f64 {
        (points[a] - points[o]).cross(&(points[b] - points[o]))
    };
    let mut hull: Vec<usize> = Vec::with_capacity(order.len() * 2);
    for &i in &order {
        while hull.len() >= 2
            && turn(hull[hull.len() - 2], hull[hull.len() - 1], i) <= EPS_COLLINEAR
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && turn(hull[hull.len() - 2], hull[hull.len() - 1], i) <= EPS_COLLINEAR
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(Error::DegenerateInput);
    }
    Ok(hull)
}

/// Convex hull as a polygon. Errors with `DegenerateInput` when the points
/// are all within `EPS_COLLINEAR` of a single line.
pub fn convex_hull(points: &[PlanePoint]) -> Result<ConvexPolygon> {
    let idx = convex_hull_indices(points)?;
    ConvexPolygon::from_cycle(idx.into_iter().map(|i| points[i]).collect())
}

/// Corner of two half-plane boundary lines.
fn plane_corner(a: &HalfPlane, b: &HalfPlane) -> PlanePoint {
    let det = a.normal.cross(&b.normal);
    PlanePoint::new(
        (a.offset * b.normal.y - b.offset * a.normal.y) / det,
        (a.normal.x * b.offset - b.normal.x * a.offset) / det,
    )
}

/// Far-out frame whose survival in the result marks an unbounded
/// intersection. Three orders of magnitude above any offset this crate
/// produces, and small enough that corner solves stay well-conditioned.
const FRAME: f64 = 1e7;

/// Bounded intersection of closed half-planes, all with strictly positive
/// offsets so the origin is interior.
///
/// Sorted-deque sweep: planes are ordered by normal angle (near-parallel
/// ones coalesced to the binding offset), a distant bounding frame is
/// added, and each incoming plane pops deque neighbors whose mutual corner
/// it cuts off. Working on corners only keeps the sweep robust when many
/// constraints are tangent to a common vertex, which is the normal state
/// of affairs for densely sampled support functions. Unboundedness
/// surfaces as a frame-scale corner in the result.
pub fn halfplane_intersection(planes: &[HalfPlane]) -> Result<ConvexPolygon> {
    if planes.len() < 3 {
        return Err(Error::Unbounded);
    }
    for p in planes {
        if p.offset.is_nan() || p.offset <= 0.0 {
            return Err(Error::NonPositiveOffset(p.offset));
        }
    }

    let mut sorted: Vec<HalfPlane> = planes.to_vec();
    for k in 0..4 {
        let angle = std::f64::consts::FRAC_PI_2 * k as f64;
        sorted.push(
            HalfPlane::new(PlanePoint::unit_from_angle(angle), FRAME).expect("unit frame normal"),
        );
    }
    sorted.sort_by(|a, b| a.normal.angle().partial_cmp(&b.normal.angle()).unwrap());

    // Coalesce near-equal directions, keeping the binding (smaller) offset;
    // the sweep needs strictly increasing angles.
    let mut merged: Vec<HalfPlane> = Vec::with_capacity(sorted.len());
    for hp in sorted {
        match merged.last_mut() {
            Some(last) if (hp.normal.angle() - last.normal.angle()).abs() <= 1e-10 => {
                if hp.offset < last.offset {
                    *last = hp;
                }
            }
            _ => merged.push(hp),
        }
    }
    if merged.len() >= 2 {
        let wrap = std::f64::consts::TAU - merged.last().unwrap().normal.angle()
            + merged[0].normal.angle();
        if wrap.abs() <= 1e-10 {
            let last = merged.pop().unwrap();
            if last.offset < merged[0].offset {
                merged[0] = last;
            }
        }
    }

    // Cut slack is relative to the offsets' scale so the sweep takes the
    // same branches when the whole input is scaled by a power of two.
    let cut_tol = EPS_ZERO
        * planes
            .iter()
            .map(|p| p.offset)
            .fold(f64::MIN_POSITIVE, f64::max);
    let cut_off = |p: &HalfPlane, corner: &PlanePoint| p.excess(corner) > cut_tol;
    let mut dq: std::collections::VecDeque<HalfPlane> = std::collections::VecDeque::new();
    for hp in merged {
        while dq.len() >= 2 && cut_off(&hp, &plane_corner(&dq[dq.len() - 1], &dq[dq.len() - 2])) {
            dq.pop_back();
        }
        while dq.len() >= 2 && cut_off(&hp, &plane_corner(&dq[0], &dq[1])) {
            dq.pop_front();
        }
        dq.push_back(hp);
    }
    while dq.len() > 2 && cut_off(&dq[0], &plane_corner(&dq[dq.len() - 1], &dq[dq.len() - 2])) {
        dq.pop_back();
    }
    while dq.len() > 2 && cut_off(&dq[dq.len() - 1], &plane_corner(&dq[0], &dq[1])) {
        dq.pop_front();
    }
    if dq.len() < 3 {
        return Err(Error::Unbounded);
    }

    let m = dq.len();
    let mut vertices = Vec::with_capacity(m);
    for k in 0..m {
        let v = plane_corner(&dq[k], &dq[(k + 1) % m]);
        if !v.is_finite() || v.x.abs() >= FRAME * 0.5 || v.y.abs() >= FRAME * 0.5 {
            return Err(Error::Unbounded);
        }
        vertices.push(v);
    }
    ConvexPolygon::from_cycle(vertices).map_err(|e| match e {
        Error::DegenerateInput => Error::Unbounded,
        other => other,
    })
}

/// One Sutherland-Hodgman clipping step. Points within `EPS_ZERO` of the
/// boundary count as inside so shared edges survive.
pub fn clip_cycle(points: &[PlanePoint], plane: &HalfPlane) -> Vec<PlanePoint> {
    let n = points.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let cur = points[i];
        let next = points[(i + 1) % n];
        let d_cur = -plane.excess(&cur);
        let d_next = -plane.excess(&next);
        let cur_in = d_cur >= -EPS_ZERO;
        let next_in = d_next >= -EPS_ZERO;
        if cur_in {
            out.push(cur);
        }
        if cur_in != next_in {
            let t = d_cur / (d_cur - d_next);
            out.push(cur + (next - cur) * t);
        }
    }
    out
}

/// Intersection of two convex polygons; `EmptyIntersection` if it has no
/// interior.
pub fn intersect(a: &ConvexPolygon, b: &ConvexPolygon) -> Result<ConvexPolygon> {
    let mut pts: Vec<PlanePoint> = a.vertices().to_vec();
    for e in b.edges() {
        let hp = HalfPlane {
            normal: e.normal,
            offset: e.offset,
        };
        pts = clip_cycle(&pts, &hp);
        if pts.len() < 3 {
            return Err(Error::EmptyIntersection);
        }
    }
    ConvexPolygon::from_cycle(pts).map_err(|_| Error::EmptyIntersection)
}

/// Convex hull of the union of two polygons. Total: two valid polygons
/// always span a non-degenerate hull.
pub fn hull_of_union(a: &ConvexPolygon, b: &ConvexPolygon) -> ConvexPolygon {
    let mut pts = a.vertices().to_vec();
    pts.extend_from_slice(b.vertices());
    convex_hull(&pts).expect("union of two valid polygons cannot be collinear")
}

/// Polar dual {y : y . x <= 1 for all x in P}. Requires the origin strictly
/// interior (every edge offset above 1e-9). The dual's vertices are the
/// edge normals divided by their offsets, already in counterclockwise order.
pub fn polar_dual(p: &ConvexPolygon) -> Result<ConvexPolygon> {
    let mut vertices = Vec::with_capacity(p.len());
    for e in p.edges() {
        if e.offset <= 1e-9 {
            return Err(Error::OriginNotInterior);
        }
        vertices.push(e.normal * (1.0 / e.offset));
    }
    ConvexPolygon::from_cycle(vertices)
}

/// Symmetric Hausdorff distance between two convex polygons. For convex
/// sets the supremum is attained at a vertex of the source polygon, so
/// vertex-to-polygon distances in both directions are exact.
pub fn hausdorff_distance(a: &ConvexPolygon, b: &ConvexPolygon) -> f64 {
    let directed = |from: &ConvexPolygon, to: &ConvexPolygon| {
        from.vertices()
            .iter()
            .map(|v| to.exterior_distance(v))
            .fold(0.0_f64, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn pt(x: f64, y: f64) -> PlanePoint {
        PlanePoint::new(x, y)
    }

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![pt(1.0, 1.0), pt(-1.0, 1.0), pt(-1.0, -1.0), pt(1.0, -1.0)])
            .unwrap()
    }

    fn diamond(r: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![pt(r, 0.0), pt(0.0, r), pt(-r, 0.0), pt(0.0, -r)]).unwrap()
    }

    fn same_vertex_set(p: &ConvexPolygon, expected: &[PlanePoint], tol: f64) -> bool {
        p.len() == expected.len()
            && expected
                .iter()
                .all(|e| p.vertices().iter().any(|v| v.distance(e) <= tol))
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let h = convex_hull(&[
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
            pt(0.5, 0.5),
        ])
        .unwrap();
        assert!(same_vertex_set(
            &h,
            &[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)],
            1e-15
        ));
        assert!(h.area() > 0.0);

        let h = convex_hull(&[pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0), pt(0.0, 2.0)]).unwrap();
        assert!(same_vertex_set(&h, &[pt(0.0, 0.0), pt(2.0, 2.0), pt(0.0, 2.0)], 1e-15));
    }

    #[test]
    fn hull_rejects_collinear_input() {
        let pts: Vec<PlanePoint> = (0..5).map(|i| pt(i as f64, 2.0 * i as f64)).collect();
        assert!(matches!(convex_hull(&pts), Err(Error::DegenerateInput)));
    }

    #[test]
    fn hull_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let pts: Vec<PlanePoint> = (0..30)
                .map(|_| pt(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)))
                .collect();
            let h1 = convex_hull(&pts).unwrap();
            let h2 = convex_hull(h1.vertices()).unwrap();
            assert_eq!(h1.len(), h2.len());
            assert!(hausdorff_distance(&h1, &h2) <= 1e-12);
        }
    }

    // Independent oracle: an ordered pair (a, b) is a hull edge exactly when
    // every other point lies strictly to its left. Quadratic-cubed and slow,
    // but it shares no code with the monotone chain.
    fn hull_vertices_brute(points: &[PlanePoint]) -> Vec<PlanePoint> {
        let mut verts: Vec<PlanePoint> = Vec::new();
        let n = points.len();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (points[i], points[j]);
                if a.distance(&b) <= EPS_ZERO {
                    continue;
                }
                let mut all_left = true;
                for (k, p) in points.iter().enumerate() {
                    if k == i || k == j {
                        continue;
                    }
                    if (b - a).cross(&(*p - a)) <= EPS_COLLINEAR {
                        all_left = false;
                        break;
                    }
                }
                if all_left {
                    if !verts.iter().any(|v| v.distance(&a) <= EPS_ZERO) {
                        verts.push(a);
                    }
                    if !verts.iter().any(|v| v.distance(&b) <= EPS_ZERO) {
                        verts.push(b);
                    }
                }
            }
        }
        verts
    }

    #[test]
    fn hull_matches_brute_force_edge_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let n = rng.gen_range(3..40);
            let pts: Vec<PlanePoint> = (0..n)
                .map(|_| pt(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                .collect();
            let expected = hull_vertices_brute(&pts);
            match convex_hull(&pts) {
                Ok(h) => {
                    assert_eq!(h.len(), expected.len());
                    for v in h.vertices() {
                        assert!(expected.iter().any(|e| e.distance(v) <= 1e-9));
                    }
                }
                Err(Error::DegenerateInput) => assert!(expected.len() < 3),
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn halfplane_intersection_square() {
        let planes = [
            HalfPlane::new(pt(1.0, 0.0), 1.0).unwrap(),
            HalfPlane::new(pt(0.0, 1.0), 1.0).unwrap(),
            HalfPlane::new(pt(-1.0, 0.0), 1.0).unwrap(),
            HalfPlane::new(pt(0.0, -1.0), 1.0).unwrap(),
        ];
        let p = halfplane_intersection(&planes).unwrap();
        assert!(same_vertex_set(&p, unit_square().vertices(), 1e-12));
    }

    #[test]
    fn halfplane_intersection_equilateral_triangle() {
        let planes: Vec<HalfPlane> = [0.0_f64, 120.0, 240.0]
            .iter()
            .map(|deg| {
                HalfPlane::new(PlanePoint::unit_from_angle(deg.to_radians()), 1.0).unwrap()
            })
            .collect();
        let p = halfplane_intersection(&planes).unwrap();
        let s3 = 3.0_f64.sqrt();
        assert!(same_vertex_set(
            &p,
            &[pt(1.0, s3), pt(-2.0, 0.0), pt(1.0, -s3)],
            1e-12
        ));
    }

    #[test]
    fn halfplane_intersection_regular_gon_circumradius() {
        let k = 720;
        let planes: Vec<HalfPlane> = (0..k)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / k as f64;
                HalfPlane::new(PlanePoint::unit_from_angle(th), 1.0).unwrap()
            })
            .collect();
        let p = halfplane_intersection(&planes).unwrap();
        assert_eq!(p.len(), k);
        let want = 1.0 / (std::f64::consts::PI / k as f64).cos();
        for v in p.vertices() {
            assert!((v.norm() - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn halfplane_intersection_detects_unbounded() {
        // All normals in the open upper half-plane leave -y unbounded.
        let planes: Vec<HalfPlane> = [10.0_f64, 60.0, 120.0]
            .iter()
            .map(|deg| {
                HalfPlane::new(PlanePoint::unit_from_angle(deg.to_radians()), 1.0).unwrap()
            })
            .collect();
        assert!(matches!(
            halfplane_intersection(&planes),
            Err(Error::Unbounded)
        ));
    }

    #[test]
    fn halfplane_intersection_rejects_nonpositive_offset() {
        let planes = [
            HalfPlane::new(pt(1.0, 0.0), 0.0).unwrap(),
            HalfPlane::new(pt(-1.0, 0.0), 1.0).unwrap(),
            HalfPlane::new(pt(0.0, 1.0), 1.0).unwrap(),
        ];
        assert!(matches!(
            halfplane_intersection(&planes),
            Err(Error::NonPositiveOffset(_))
        ));
    }

    #[test]
    fn halfplane_intersection_agrees_with_clipping_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let big = ConvexPolygon::new(vec![
            pt(1e4, 1e4),
            pt(-1e4, 1e4),
            pt(-1e4, -1e4),
            pt(1e4, -1e4),
        ])
        .unwrap();
        let mut done = 0;
        while done < 100 {
            let n = rng.gen_range(5..40);
            let planes: Vec<HalfPlane> = (0..n)
                .map(|_| {
                    let th = rng.gen_range(0.0..std::f64::consts::TAU);
                    let c = rng.gen_range(0.2..2.0);
                    HalfPlane::new(PlanePoint::unit_from_angle(th), c).unwrap()
                })
                .collect();
            let fast = match halfplane_intersection(&planes) {
                Ok(p) => p,
                Err(Error::Unbounded) => continue,
                Err(e) => panic!("unexpected error {e}"),
            };
            // Oracle: clip a huge box by every plane in input order.
            let mut cycle = big.vertices().to_vec();
            for hp in &planes {
                cycle = clip_cycle(&cycle, hp);
            }
            let slow = ConvexPolygon::from_cycle(cycle).unwrap();
            assert!(hausdorff_distance(&fast, &slow) <= 1e-10);
            done += 1;
        }
    }

    #[test]
    fn halfplane_intersection_keeps_tangent_degenerate_fans() {
        // A fine polygon's own edge planes plus supporting planes that touch
        // only at vertices: the tangent planes are redundant and must not
        // displace any true vertex.
        let n = 560;
        let verts: Vec<PlanePoint> = (0..n)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / n as f64;
                let r = 1.1 + 0.25 * (2.0 * th).sin();
                pt(r * th.cos(), r * th.sin())
            })
            .collect();
        let poly = convex_hull(&verts).unwrap();
        let mut planes: Vec<HalfPlane> = poly
            .edges()
            .iter()
            .map(|e| HalfPlane::new(e.normal, e.offset).unwrap())
            .collect();
        for i in 0..720 {
            let u = PlanePoint::unit_from_angle(std::f64::consts::TAU * i as f64 / 720.0);
            planes.push(HalfPlane::new(u, poly.support(&u)).unwrap());
        }
        let out = halfplane_intersection(&planes).unwrap();
        let d = hausdorff_distance(&out, &poly);
        assert!(d <= 1e-10, "lost vertices: {} vs {}, d = {d:.3e}", out.len(), poly.len());
        assert_eq!(out.len(), poly.len());
    }

    #[test]
    fn polar_dual_square_and_diamond() {
        let d = polar_dual(&unit_square()).unwrap();
        assert!(same_vertex_set(&d, diamond(1.0).vertices(), 1e-12));
        let s = polar_dual(&diamond(1.0)).unwrap();
        assert!(same_vertex_set(&s, unit_square().vertices(), 1e-12));
    }

    #[test]
    fn polar_dual_requires_interior_origin() {
        let p = ConvexPolygon::new(vec![pt(1.0, 0.0), pt(2.0, 0.5), pt(1.0, 1.0)]).unwrap();
        assert!(matches!(polar_dual(&p), Err(Error::OriginNotInterior)));
    }

    #[test]
    fn polar_dual_of_circumscribed_gon_is_inscribed() {
        let k = 64;
        let planes: Vec<HalfPlane> = (0..k)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / k as f64;
                HalfPlane::new(PlanePoint::unit_from_angle(th), 1.0).unwrap()
            })
            .collect();
        let circumscribed = halfplane_intersection(&planes).unwrap();
        let dual = polar_dual(&circumscribed).unwrap();
        for v in dual.vertices() {
            assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
    }

    fn random_polygon(rng: &mut ChaCha8Rng) -> ConvexPolygon {
        loop {
            let n = rng.gen_range(3..12);
            let mut angles: Vec<f64> =
                (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
            angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let pts: Vec<PlanePoint> = angles
                .iter()
                .map(|&a| PlanePoint::unit_from_angle(a) * rng.gen_range(0.5..2.0))
                .collect();
            if let Ok(h) = convex_hull(&pts) {
                if h.min_edge_offset() > 0.05 {
                    return h;
                }
            }
        }
    }

    #[test]
    fn polar_dual_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100 {
            let p = random_polygon(&mut rng);
            let dd = polar_dual(&polar_dual(&p).unwrap()).unwrap();
            assert!(hausdorff_distance(&p, &dd) <= 1e-10);
        }
    }

    #[test]
    fn intersect_square_with_diamond() {
        let p = intersect(&unit_square(), &diamond(1.2)).unwrap();
        assert_eq!(p.len(), 8);
        let expected = [
            pt(1.0, 0.2),
            pt(0.2, 1.0),
            pt(-0.2, 1.0),
            pt(-1.0, 0.2),
            pt(-1.0, -0.2),
            pt(-0.2, -1.0),
            pt(0.2, -1.0),
            pt(1.0, -0.2),
        ];
        assert!(same_vertex_set(&p, &expected, 1e-12));
    }

    #[test]
    fn intersect_empty_for_disjoint_polygons() {
        let far =
            ConvexPolygon::new(vec![pt(3.0, 3.0), pt(4.0, 3.0), pt(4.0, 4.0), pt(3.0, 4.0)])
                .unwrap();
        assert!(matches!(
            intersect(&unit_square(), &far),
            Err(Error::EmptyIntersection)
        ));
    }

    #[test]
    fn intersect_with_itself_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let p = random_polygon(&mut rng);
            let q = intersect(&p, &p).unwrap();
            assert!(hausdorff_distance(&p, &q) <= 1e-10);
        }
    }

    #[test]
    fn hull_of_union_square_diamond() {
        let u = hull_of_union(&unit_square(), &diamond(1.2));
        let expected = [
            pt(1.0, 1.0),
            pt(-1.0, 1.0),
            pt(-1.0, -1.0),
            pt(1.0, -1.0),
            pt(1.2, 0.0),
            pt(0.0, 1.2),
            pt(-1.2, 0.0),
            pt(0.0, -1.2),
        ];
        assert!(same_vertex_set(&u, &expected, 1e-12));
    }

    #[test]
    fn hausdorff_nested_squares() {
        let outer = unit_square().scaled(2.0).unwrap();
        let d = hausdorff_distance(&unit_square(), &outer);
        assert!((d - 2.0_f64.sqrt()).abs() <= 1e-12);
        assert_eq!(hausdorff_distance(&outer, &outer), 0.0);
    }

    #[test]
    fn hausdorff_matches_dense_boundary_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..20 {
            let a = random_polygon(&mut rng);
            let b = random_polygon(&mut rng);
            let exact = hausdorff_distance(&a, &b);
            let directed_sampled = |from: &ConvexPolygon, to: &ConvexPolygon| -> f64 {
                let mut worst = 0.0_f64;
                for e in from.edges() {
                    for s in 0..200 {
                        let t = s as f64 / 199.0;
                        let p = e.a + (e.b - e.a) * t;
                        worst = worst.max(to.exterior_distance(&p));
                    }
                }
                worst
            };
            let sampled = directed_sampled(&a, &b).max(directed_sampled(&b, &a));
            let spacing: f64 = a
                .edges()
                .iter()
                .chain(b.edges().iter())
                .map(|e| e.a.distance(&e.b) / 199.0)
                .fold(0.0, f64::max);
            assert!(sampled <= exact + 1e-12);
            assert!(exact <= sampled + spacing);
        }
    }

    #[test]
    fn polygon_json_round_trip() {
        let p = intersect(&unit_square(), &diamond(1.2)).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with("{\"vertices\":[["));
        let q: ConvexPolygon = serde_json::from_str(&json).unwrap();
        assert_eq!(p.vertices(), q.vertices());
    }

    #[test]
    fn polygon_json_rejects_clockwise() {
        let json = "{\"vertices\":[[0.0,0.0],[0.0,1.0],[1.0,0.0]]}";
        assert!(serde_json::from_str::<ConvexPolygon>(json).is_err());
    }

    #[test]
    fn reflected_preserves_orientation() {
        let p = intersect(&unit_square(), &diamond(1.2)).unwrap();
        let r = p.reflected();
        assert!(r.area() > 0.0);
        assert!((r.area() - p.area()).abs() <= 1e-12);
    }
}
