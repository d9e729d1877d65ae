use super::point::{
    closest_on_segment, orient, point_segment_distance, segment_segment_distance,
    segments_intersect, Line2, Point2, Point3,
};
use super::shapes::{Capsule, Circle, ConvexPolygon, GeomObject, Pancake2, UnitDisk};
use super::{GeometryError, Tolerance};
use serde::{Deserialize, Serialize};

/// Closed-set intersection test: touching sets intersect.
pub fn intersects(a: &GeomObject, b: &GeomObject, tol: Tolerance) -> bool {
    gap(a, b) <= tol.eps
}

/// Euclidean gap between two closed sets, `0` when they meet.
pub fn gap(a: &GeomObject, b: &GeomObject) -> f64 {
    match (a.capsule(), b.capsule(), a, b) {
        (Some(ca), Some(cb), _, _) => capsule_gap(&ca, &cb),
        (Some(c), None, _, GeomObject::Polygon(p)) | (None, Some(c), GeomObject::Polygon(p), _) => {
            (polygon_segment_distance(p, c.a, c.b) - c.radius).max(0.0)
        }
        (None, None, GeomObject::Polygon(p), GeomObject::Polygon(q)) => polygon_polygon_distance(p, q),
        _ => unreachable!("only polygons lack a capsule form"),
    }
}

fn capsule_gap(a: &Capsule, b: &Capsule) -> f64 {
    let (a, b) = ordered(a, b);
    (segment_segment_distance(a.a, a.b, b.a, b.b) - a.radius - b.radius).max(0.0)
}

/// Fixes the argument order so results are bit-for-bit symmetric.
fn ordered<'a>(a: &'a Capsule, b: &'a Capsule) -> (&'a Capsule, &'a Capsule) {
    let key = |c: &Capsule| [c.a.x, c.a.y, c.b.x, c.b.y, c.radius];
    let (ka, kb) = (key(a), key(b));
    let less = ka
        .iter()
        .zip(kb.iter())
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .is_none_or(|o| o.is_lt());
    if less {
        (a, b)
    } else {
        (b, a)
    }
}

fn polygon_segment_distance(p: &ConvexPolygon, a: Point2, b: Point2) -> f64 {
    if p.contains_point(a, 0.0) || p.contains_point(b, 0.0) {
        return 0.0;
    }
    p.edges()
        .map(|(u, v)| segment_segment_distance(a, b, u, v))
        .fold(f64::INFINITY, f64::min)
}

fn polygon_polygon_distance(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    if p.vertices().iter().any(|&v| q.contains_point(v, 0.0))
        || q.vertices().iter().any(|&v| p.contains_point(v, 0.0))
    {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for (a, b) in p.edges() {
        for (c, d) in q.edges() {
            if segments_intersect(a, b, c, d) {
                return 0.0;
            }
            best = best.min(segment_segment_distance(a, b, c, d));
        }
    }
    best
}

/// Distance between the "cores" of two objects: centre to centre for
/// disks, centre to spine for a disk and a pancake, and the gap between
/// spines for two pancakes. This is the length used to order lens edges.
pub fn distance(a: &GeomObject, b: &GeomObject) -> Result<f64, GeometryError> {
    match (a.capsule(), b.capsule()) {
        (Some(ca), Some(cb)) => {
            let (ca, cb) = ordered(&ca, &cb);
            Ok(segment_segment_distance(ca.a, ca.b, cb.a, cb.b))
        }
        _ => Err(GeometryError::Unsupported(format!(
            "core distance is undefined for {} and {}",
            a.kind_name(),
            b.kind_name()
        ))),
    }
}

/// Whether the intersection of `d` and `p` is a lens, i.e. equals the
/// intersection of `d` with the unit disk at one spine endpoint.
pub fn is_lens(d: &UnitDisk, p: &Pancake2, tol: Tolerance) -> bool {
    let c = d.center;
    if p.spine_distance(c) > 2.0 + tol.eps {
        return false;
    }
    // a degenerate pancake is a unit disk; both open rims are empty
    if p.is_degenerate() {
        return true;
    }
    let outside_spine = c.x <= p.x1() + tol.eps || c.x >= p.x2() - tol.eps;
    if !outside_spine {
        return false;
    }
    let corners = [
        Point2::new(p.x1(), 1.0),
        Point2::new(p.x1(), -1.0),
        Point2::new(p.x2(), 1.0),
        Point2::new(p.x2(), -1.0),
    ];
    corners.iter().all(|&q| q.dist(c) >= 1.0 - tol.eps)
}

/// A canonical point common to two intersecting closed disks: the foot of
/// the common chord on the centre segment, or the smaller centre when one
/// disk lies inside the other.
pub fn lens_witness(a: &Circle, b: &Circle) -> Result<Point2, GeometryError> {
    let d = a.center.dist(b.center);
    if d > a.radius + b.radius {
        return Err(GeometryError::NoIntersection);
    }
    let (small, large) = if a.radius <= b.radius { (a, b) } else { (b, a) };
    if d + small.radius <= large.radius {
        return Ok(small.center);
    }
    let u = (b.center - a.center) * (1.0 / d);
    let along = ((d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d)).clamp(0.0, d);
    Ok(a.center + u * along)
}

/// Points where the two boundary circles cross, if they do. The first
/// point is left of the directed centre line `a -> b`.
pub fn circle_crossings(a: &Circle, b: &Circle) -> Option<(Point2, Point2)> {
    let d = a.center.dist(b.center);
    if d == 0.0 || d > a.radius + b.radius || d < (a.radius - b.radius).abs() {
        return None;
    }
    let u = (b.center - a.center) * (1.0 / d);
    let along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    let h = (a.radius * a.radius - along * along).max(0.0).sqrt();
    let foot = a.center + u * along;
    Some((foot + u.perp() * h, foot - u.perp() * h))
}

/// The two common tangents of two circles that keep both circles on the
/// same side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExternalTangents {
    /// Tangent on the left of the directed centre line `a -> b`.
    pub left: Line2,
    /// Tangent on the right of the directed centre line `a -> b`.
    pub right: Line2,
    /// Set when the two disks overlap; the tangents still exist.
    pub overlapping: bool,
}

impl ExternalTangents {
    pub fn lines(&self) -> [Line2; 2] {
        [self.left, self.right]
    }
}

/// External tangents of `a` and `b`. Both returned lines have their
/// normals pointing towards the circles, so both centres sit at signed
/// distance equal to their radius.
pub fn external_tangents(a: &Circle, b: &Circle) -> Result<ExternalTangents, GeometryError> {
    let d = a.center.dist(b.center);
    if d <= (a.radius - b.radius).abs() {
        return Err(GeometryError::NoExternalTangents);
    }
    let u = (b.center - a.center) * (1.0 / d);
    let w = u.perp();
    let k = (b.radius - a.radius) / d;
    let h = (1.0 - k * k).max(0.0).sqrt();
    let make = |n: Point2| Line2 {
        normal: n,
        offset: n.dot(a.center) - a.radius,
    };
    Ok(ExternalTangents {
        left: make(u * k - w * h),
        right: make(u * k + w * h),
        overlapping: d <= a.radius + b.radius,
    })
}

/// Which half of a lens, relative to the directed centre line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LensSide {
    /// Left of the directed line `c -> c2`.
    Upper,
    Lower,
}

/// Membership of `q` in one closed half-lens of the disks `(c, rho)` and
/// `(c2, rho2)`.
pub fn half_lens_contains(
    c: Point2,
    rho: f64,
    c2: Point2,
    rho2: f64,
    q: Point2,
    side: LensSide,
    tol: Tolerance,
) -> Result<bool, GeometryError> {
    let d = c.dist(c2);
    if d > rho + rho2 {
        return Err(GeometryError::NoIntersection);
    }
    if d == 0.0 {
        return Err(GeometryError::InvalidObject(
            "half-lenses need distinct centres".into(),
        ));
    }
    if q.dist(c) > rho + tol.eps || q.dist(c2) > rho2 + tol.eps {
        return Ok(false);
    }
    let signed = orient(c, c2, q) / d;
    Ok(match side {
        LensSide::Upper => signed >= -tol.eps,
        LensSide::Lower => signed <= tol.eps,
    })
}

/// Whether the unit ball at `ball_center` meets the 3-pancake obtained as
/// the Minkowski sum of the unit ball and the flat disk of radius `rho`
/// centred at `disk_center` in the plane `z = 0`.
pub fn pancake3_intersects_unit_ball(
    ball_center: Point3,
    disk_center: Point2,
    rho: f64,
    tol: Tolerance,
) -> bool {
    let z = ball_center.z.abs();
    if z > 2.0 + tol.eps {
        return false;
    }
    let reach = (4.0 - z * z).max(0.0).sqrt();
    ball_center.xy().dist(disk_center) <= reach + rho + tol.eps
}

/// Closest point of the spine of `p` to `q`.
pub fn spine_foot(p: &Pancake2, q: Point2) -> Point2 {
    let (a, b) = p.spine();
    closest_on_segment(q, a, b)
}

/// Distance from `q` to the axis-aligned segment `[x1, x2] × {0}`.
pub fn axis_segment_distance(q: Point2, x1: f64, x2: f64) -> f64 {
    point_segment_distance(q, Point2::new(x1, 0.0), Point2::new(x2, 0.0))
}
