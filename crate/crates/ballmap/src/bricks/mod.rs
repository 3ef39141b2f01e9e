//! Catalog of basic image regions ("bricks") and the maps onto them.
//!
//! A brick is a compact region together with an explicit polynomial map from
//! a closed unit ball onto it, packaged as a [`BrickResult`]: the staged map,
//! the region as polynomial inequalities, and an interior point the region is
//! star-shaped around.  The catalog covers polytopes and their products
//! ([`simplex_map`], [`hypercube_map`], [`prism_map`], [`cylinder_map`],
//! [`ball_product_map`], [`product_of_bricks`]), quadric-profile solids
//! ([`truncated_cone_map`], [`parabolic_n_map`], [`parabolic2_map`],
//! [`spherical_star_map`]), conic sectors and segments in both the elliptic
//! and hyperbolic regimes, convex hulls of sampled images
//! ([`convex_hull_map`]), and rotation of planar bricks into higher
//! dimensions ([`revolution_map`]).
//!
//! [`BrickSpec`] is the JSON-facing recipe type and [`build`] the dispatcher;
//! [`brick_homotopy`] contracts any brick toward its recorded center.

mod base;
mod conic;
mod homotopy;
mod hull;
mod profiles;
mod quadric;
mod result;
mod revolve;
mod sets;
mod spec;

pub use base::{
    ball_from_cube, ball_product_map, cylinder_map, hypercube_map, prism_map,
    product_of_bricks, simplex_map, square_map_2d,
};
pub use conic::{
    complex_square, disc_radial_cubic, elliptic_sector_map, elliptic_segment_map,
    hyperbolic_radial_cubic, hyperbolic_sector_map, hyperbolic_sector_schedule,
    hyperbolic_sector_to_segment, hyperbolic_segment_map, sector_to_segment,
    split_complex_square, triangle_map_symmetric,
};
pub use homotopy::brick_homotopy;
pub use hull::{convex_hull_map, convex_hull_map_seeded};
pub use quadric::{parabolic2_map, parabolic_n_map, spherical_star_map, truncated_cone_map};
pub use result::BrickResult;
pub use revolve::{parity_check, revolution_map, revolution_pipeline};
pub use spec::{build, build_map, BrickSpec};
