//! Planar predicates and constructions for unit disks, 2-pancakes,
//! circles and convex polygons, plus the ball/3-pancake test.
//!
//! All sets are closed. Predicates compare against a symmetric tolerance
//! so that touching objects count as intersecting.

mod point;
mod predicates;
mod shapes;

use thiserror::Error;

pub use point::{
    closest_on_segment, orient, point_segment_distance, segment_segment_distance,
    segments_intersect, Line2, Point2, Point3,
};
pub use predicates::{
    axis_segment_distance, circle_crossings, distance, external_tangents, gap,
    half_lens_contains, intersects, is_lens, lens_witness, pancake3_intersects_unit_ball,
    spine_foot, ExternalTangents, LensSide,
};
pub use shapes::{Circle, ConvexPolygon, GeomObject, Pancake2, UnitDisk};

pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("no intersection")]
    NoIntersection,
    #[error("no external tangents")]
    NoExternalTangents,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Predicate tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self, GeometryError> {
        if eps > 0.0 && eps.is_finite() {
            Ok(Tolerance { eps })
        } else {
            Err(GeometryError::InvalidObject(format!(
                "tolerance must be positive, got {eps}"
            )))
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: DEFAULT_EPS }
    }
}

#[cfg(test)]
mod tests;
