//! Planar Wulff shapes from convex integrands, together with the spherical
//! duality toolkit used to cross-check them.
//!
//! The crate has three layers. The Euclidean layer (`plane`, `euclid`)
//! provides exact polygon machinery: hulls, half-plane intersections, polar
//! duals, Hausdorff distances. The spherical layer (`sphere`, `spherical`)
//! provides inversion, central projection, the blow-up map onto the unit
//! sphere, and spherical convex bodies with their polars. The top layer
//! (`integrand`, `wulff`) defines anisotropic surface-energy densities and
//! builds their Wulff shapes by both routes, direct half-plane intersection
//! and the spherical detour, so that each construction checks the other.

pub mod error;
pub mod euclid;
pub mod integrand;
pub mod plane;
pub mod report;
pub mod sampling;
pub mod sphere;
pub mod spherical;
pub mod wulff;

pub use error::{Error, Result};
pub use plane::PlanePoint;
pub use sphere::SpherePoint;
