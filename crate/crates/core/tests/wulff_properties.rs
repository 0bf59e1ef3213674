//! Cross-module properties of the Wulff constructions: route agreement,
//! monotonicity, scaling, containment, and origin interiority, exercised on
//! seeded random support polygons.

use wulff_core::euclid::ConvexPolygon;
use wulff_core::integrand::Integrand;
use wulff_core::sampling::{rng_for, random_convex_polygon};
use wulff_core::wulff::{tol_geom, wulff_direct, wulff_spherical};
use wulff_core::PlanePoint;

fn square(r: f64) -> ConvexPolygon {
    ConvexPolygon::new(vec![
        PlanePoint::new(r, r),
        PlanePoint::new(-r, r),
        PlanePoint::new(-r, -r),
        PlanePoint::new(r, -r),
    ])
    .unwrap()
}

fn diamond(r: f64) -> ConvexPolygon {
    ConvexPolygon::new(vec![
        PlanePoint::new(r, 0.0),
        PlanePoint::new(0.0, r),
        PlanePoint::new(-r, 0.0),
        PlanePoint::new(0.0, -r),
    ])
    .unwrap()
}

#[test]
fn direct_and_spherical_routes_agree_on_random_polygons() {
    let mut rng = rng_for(7);
    for _ in 0..25 {
        let g = Integrand::support_polygon(random_convex_polygon(&mut rng)).unwrap();
        let a = wulff_direct(&g, 720).unwrap();
        let b = wulff_spherical(&g, 720).unwrap();
        let d = wulff_core::euclid::hausdorff_distance(&a.shape, &b.shape);
        assert!(d <= 1e-9 * a.shape.diameter(), "routes disagree: {d:.3e}");
    }
}

#[test]
fn pointwise_domination_nests_wulff_shapes() {
    // g <= max(g, h) pointwise, so the Wulff shapes must nest.
    let mut rng = rng_for(8);
    for _ in 0..10 {
        let g = Integrand::support_polygon(random_convex_polygon(&mut rng)).unwrap();
        let h = Integrand::support_polygon(random_convex_polygon(&mut rng)).unwrap();
        let upper = Integrand::pointwise_max(g.clone(), h);
        let small = wulff_direct(&g, 720).unwrap();
        let big = wulff_direct(&upper, 720).unwrap();
        for v in small.shape.vertices() {
            assert!(big.shape.contains(v, 1e-9), "vertex {v:?} escapes");
        }
    }
    // Constant integrands give circumscribed K-gons over the same grid.
    let small = wulff_direct(&Integrand::constant(0.4).unwrap(), 64).unwrap();
    let big = wulff_direct(&Integrand::constant(1.1).unwrap(), 64).unwrap();
    for v in small.shape.vertices() {
        assert!(big.shape.contains(v, 1e-9));
    }
}

#[test]
fn doubling_the_integrand_doubles_every_vertex_exactly() {
    // Powers of two scale without rounding, so the direction sets coincide
    // and every plane corner solve scales linearly: coordinates match
    // bitwise, not just within tolerance.
    let mut rng = rng_for(9);
    for _ in 0..5 {
        let p = random_convex_polygon(&mut rng);
        let doubled = ConvexPolygon::new(
            p.vertices()
                .iter()
                .map(|v| PlanePoint::new(2.0 * v.x, 2.0 * v.y))
                .collect(),
        )
        .unwrap();
        let w1 = wulff_direct(&Integrand::support_polygon(p).unwrap(), 720).unwrap();
        let w2 = wulff_direct(&Integrand::support_polygon(doubled).unwrap(), 720).unwrap();
        assert_eq!(w1.shape.len(), w2.shape.len());
        for (a, b) in w1.shape.vertices().iter().zip(w2.shape.vertices()) {
            assert_eq!(2.0 * a.x, b.x);
            assert_eq!(2.0 * a.y, b.y);
        }
    }
    let w1 = wulff_direct(&Integrand::constant(0.75).unwrap(), 720).unwrap();
    let w2 = wulff_direct(&Integrand::constant(1.5).unwrap(), 720).unwrap();
    for (a, b) in w1.shape.vertices().iter().zip(w2.shape.vertices()) {
        assert_eq!(2.0 * a.x, b.x);
        assert_eq!(2.0 * a.y, b.y);
    }
}

#[test]
fn min_shape_sits_inside_both_and_both_sit_inside_max_shape() {
    let mut rng = rng_for(10);
    let mut pairs: Vec<(Integrand, Integrand)> = (0..10)
        .map(|_| {
            (
                Integrand::support_polygon(random_convex_polygon(&mut rng)).unwrap(),
                Integrand::support_polygon(random_convex_polygon(&mut rng)).unwrap(),
            )
        })
        .collect();
    pairs.push((
        Integrand::support_polygon(square(1.0)).unwrap(),
        Integrand::support_polygon(diamond(1.2)).unwrap(),
    ));
    let k = 720;
    for (g1, g2) in &pairs {
        let w1 = wulff_direct(g1, k).unwrap();
        let w2 = wulff_direct(g2, k).unwrap();
        let wmax = wulff_direct(&Integrand::pointwise_max(g1.clone(), g2.clone()), k).unwrap();
        let wmin = wulff_direct(&Integrand::pointwise_min(g1.clone(), g2.clone()), k).unwrap();
        for v in wmin.shape.vertices() {
            assert!(w1.shape.contains(v, 1e-9));
            assert!(w2.shape.contains(v, 1e-9));
        }
        for v in w1.shape.vertices().iter().chain(w2.shape.vertices()) {
            assert!(wmax.shape.contains(v, tol_geom(k)));
        }
    }
}

#[test]
fn origin_clearance_is_the_smallest_sampled_support_value() {
    let k = 720;
    let mut rng = rng_for(11);
    for _ in 0..10 {
        let p = random_convex_polygon(&mut rng);
        let floor = p.min_edge_offset();
        let g = Integrand::support_polygon(p).unwrap();
        let grid_min = (0..k)
            .map(|i| g.eval(std::f64::consts::TAU * i as f64 / k as f64))
            .fold(f64::INFINITY, f64::min);
        let w = wulff_direct(&g, k).unwrap();
        assert!(w.shape.min_edge_offset() >= floor.min(grid_min) - 1e-9);
    }
    let g = Integrand::expression("1 + 0.2*cos(2t) + 0.1*sin(3t)").unwrap();
    let grid_min = (0..k)
        .map(|i| g.eval(std::f64::consts::TAU * i as f64 / k as f64))
        .fold(f64::INFINITY, f64::min);
    let w = wulff_direct(&g, k).unwrap();
    assert!(w.shape.min_edge_offset() >= grid_min - 1e-9);
    assert!(w.shape.min_edge_offset() > 1e-9);
}

#[test]
fn wulff_shape_of_a_support_polygon_is_that_polygon() {
    let mut rng = rng_for(12);
    for _ in 0..10 {
        let p = random_convex_polygon(&mut rng);
        let g = Integrand::support_polygon(p.clone()).unwrap();
        let w = wulff_direct(&g, 720).unwrap();
        let d = wulff_core::euclid::hausdorff_distance(&w.shape, &p);
        assert!(d <= 1e-9, "fixed point broken: {d:.3e}");
    }
}
