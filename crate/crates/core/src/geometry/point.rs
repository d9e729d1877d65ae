use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A point (or free vector) in the Euclidean plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    /// Counter-clockwise rotation by a quarter turn.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Option<Point2> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self * (1.0 / n))
        } else {
            None
        }
    }

    pub fn lerp(self, other: Point2, t: f64) -> Point2 {
        self + (other - self) * t
    }

    pub fn from_angle(theta: f64) -> Point2 {
        Point2::new(theta.cos(), theta.sin())
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// Signed area test: positive when `c` is left of the directed line `a -> b`.
pub fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn xy(&self) -> Point2 {
        Point2::new(self.x, self.y)
    }
}

/// A line `{p : p · normal = offset}` with a unit normal.
///
/// Where a side matters the line is directed: the positive side is the one
/// the normal points to, and [`Line2::direction`] is the normal rotated
/// clockwise, so the positive side is on the left of the direction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Line2 {
    pub normal: Point2,
    pub offset: f64,
}

impl Line2 {
    /// Builds a line from any non-zero normal, normalizing it.
    pub fn new(normal: Point2, offset: f64) -> Option<Line2> {
        let len = normal.norm();
        if len > 0.0 && len.is_finite() && offset.is_finite() {
            Some(Line2 {
                normal: normal * (1.0 / len),
                offset: offset / len,
            })
        } else {
            None
        }
    }

    /// Directed line through `a` towards `b`; the left side is positive.
    pub fn through(a: Point2, b: Point2) -> Option<Line2> {
        let n = (b - a).perp();
        Line2::new(n, n.dot(a))
    }

    /// Line with direction angle `theta` at signed offset `t`, using the
    /// normal `(-sin θ, cos θ)`.
    pub fn from_angle(theta: f64, t: f64) -> Line2 {
        Line2 {
            normal: Point2::new(-theta.sin(), theta.cos()),
            offset: t,
        }
    }

    pub fn signed_distance(&self, p: Point2) -> f64 {
        p.dot(self.normal) - self.offset
    }

    pub fn direction(&self) -> Point2 {
        Point2::new(self.normal.y, -self.normal.x)
    }

    /// The foot of the perpendicular from the origin.
    pub fn anchor(&self) -> Point2 {
        self.normal * self.offset
    }

    pub fn point_at(&self, s: f64) -> Point2 {
        self.anchor() + self.direction() * s
    }

    pub fn project(&self, p: Point2) -> Point2 {
        p - self.normal * self.signed_distance(p)
    }

    pub fn flipped(&self) -> Line2 {
        Line2 {
            normal: -self.normal,
            offset: -self.offset,
        }
    }
}

/// Closest point of the closed segment `[a, b]` to `p`.
pub fn closest_on_segment(p: Point2, a: Point2, b: Point2) -> Point2 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return a;
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    a + ab * t
}

pub fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    p.dist(closest_on_segment(p, a, b))
}

/// Proper or touching intersection of two closed segments.
pub fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |p: Point2, q: Point2, r: Point2, o: f64| {
        o == 0.0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    on(c, d, a, d1) || on(c, d, b, d2) || on(a, b, c, d3) || on(a, b, d, d4)
}

pub fn segment_segment_distance(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    if segments_intersect(a, b, c, d) {
        return 0.0;
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_through_is_left_positive() {
        let l = Line2::through(Point2::new(0.0, 0.0), Point2::new(2.0, 0.0)).unwrap();
        assert!(l.signed_distance(Point2::new(1.0, 1.0)) > 0.0);
        assert!(l.signed_distance(Point2::new(1.0, -1.0)) < 0.0);
        assert!((l.direction() - Point2::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn segment_distances() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(2.0, 0.0);
        assert_eq!(point_segment_distance(Point2::new(1.0, 3.0), a, b), 3.0);
        assert_eq!(point_segment_distance(Point2::new(5.0, 4.0), a, b), 5.0);
        assert_eq!(
            segment_segment_distance(a, b, Point2::new(1.0, -1.0), Point2::new(1.0, 1.0)),
            0.0
        );
        assert_eq!(
            segment_segment_distance(a, b, Point2::new(3.0, 0.0), Point2::new(4.0, 0.0)),
            1.0
        );
    }

    #[test]
    fn from_angle_normal_convention() {
        let l = Line2::from_angle(0.0, 2.0);
        assert_eq!(l.normal, Point2::new(-0.0, 1.0));
        assert!(l.signed_distance(Point2::new(7.0, 2.0)).abs() < 1e-15);
    }
}
