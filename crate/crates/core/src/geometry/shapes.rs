use serde::{Deserialize, Serialize};

use super::point::{orient, Point2};
use super::GeometryError;

/// Closed disk of radius 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitDisk {
    pub center: Point2,
}

impl UnitDisk {
    pub fn new(x: f64, y: f64) -> Self {
        UnitDisk {
            center: Point2::new(x, y),
        }
    }

    pub fn as_circle(&self) -> Circle {
        Circle {
            center: self.center,
            radius: 1.0,
        }
    }
}

/// Minkowski sum of the unit disk at the origin and the segment
/// `[x1, x2] × {0}`. `x1 == x2` is a unit disk centred on the x-axis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pancake2 {
    x1: f64,
    x2: f64,
}

impl Pancake2 {
    pub fn new(x1: f64, x2: f64) -> Result<Self, GeometryError> {
        if !x1.is_finite() || !x2.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if x1 > x2 {
            return Err(GeometryError::InvalidObject(format!(
                "pancake endpoints out of order: {x1} > {x2}"
            )));
        }
        Ok(Pancake2 { x1, x2 })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    /// Length of the spine segment.
    pub fn spine_len(&self) -> f64 {
        self.x2 - self.x1
    }

    pub fn spine(&self) -> (Point2, Point2) {
        (Point2::new(self.x1, 0.0), Point2::new(self.x2, 0.0))
    }

    pub fn is_degenerate(&self) -> bool {
        self.x1 == self.x2
    }

    /// Set containment, which for pancakes is containment of spines.
    pub fn contains_pancake(&self, other: &Pancake2) -> bool {
        self.x1 <= other.x1 && other.x2 <= self.x2
    }

    /// Distance from `p` to the spine segment.
    pub fn spine_distance(&self, p: Point2) -> f64 {
        let dx = if p.x < self.x1 {
            self.x1 - p.x
        } else if p.x > self.x2 {
            p.x - self.x2
        } else {
            0.0
        };
        dx.hypot(p.y)
    }
}

/// Closed disk of arbitrary positive radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Result<Self, GeometryError> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if radius <= 0.0 {
            return Err(GeometryError::InvalidObject(format!(
                "circle radius must be positive, got {radius}"
            )));
        }
        Ok(Circle { center, radius })
    }

    /// Unchecked constructor for literals in tests and fixtures.
    pub const fn at(x: f64, y: f64, radius: f64) -> Self {
        Circle {
            center: Point2::new(x, y),
            radius,
        }
    }

    pub fn contains_point(&self, p: Point2, eps: f64) -> bool {
        p.dist(self.center) <= self.radius + eps
    }

    /// Boundary point in direction `theta`.
    pub fn boundary_point(&self, theta: f64) -> Point2 {
        self.center + Point2::from_angle(theta) * self.radius
    }
}

/// Strictly convex polygon with counter-clockwise vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::InvalidObject(
                "polygon needs at least 3 vertices".into(),
            ));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if orient(a, b, c) <= 0.0 {
                return Err(GeometryError::InvalidObject(
                    "polygon must be strictly convex and counter-clockwise".into(),
                ));
            }
        }
        // local left turns alone admit star-shaped windings, so check the turning sum
        let mut angle = 0.0;
        for i in 0..n {
            let e1 = vertices[(i + 1) % n] - vertices[i];
            let e2 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            angle += e1.cross(e2).atan2(e1.dot(e2));
        }
        if (angle - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(GeometryError::InvalidObject(
                "polygon winds more than once".into(),
            ));
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn contains_point(&self, p: Point2, eps: f64) -> bool {
        self.edges().all(|(a, b)| {
            let len = (b - a).norm();
            orient(a, b, p) >= -eps * len
        })
    }
}

/// Every object kind the planar predicates understand.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum GeomObject {
    UnitDisk(UnitDisk),
    Pancake2(Pancake2),
    Circle(Circle),
    Polygon(ConvexPolygon),
}

impl GeomObject {
    pub fn kind_name(&self) -> &'static str {
        match self {
            GeomObject::UnitDisk(_) => "unit_disk",
            GeomObject::Pancake2(_) => "pancake",
            GeomObject::Circle(_) => "circle",
            GeomObject::Polygon(_) => "polygon",
        }
    }

    pub fn is_pi2(&self) -> bool {
        matches!(self, GeomObject::UnitDisk(_) | GeomObject::Pancake2(_))
    }

    /// The object as a segment thickened by a radius, if it is one.
    pub(crate) fn capsule(&self) -> Option<Capsule> {
        match self {
            GeomObject::UnitDisk(d) => Some(Capsule {
                a: d.center,
                b: d.center,
                radius: 1.0,
            }),
            GeomObject::Pancake2(p) => {
                let (a, b) = p.spine();
                Some(Capsule { a, b, radius: 1.0 })
            }
            GeomObject::Circle(c) => Some(Capsule {
                a: c.center,
                b: c.center,
                radius: c.radius,
            }),
            GeomObject::Polygon(_) => None,
        }
    }
}

impl From<UnitDisk> for GeomObject {
    fn from(d: UnitDisk) -> Self {
        GeomObject::UnitDisk(d)
    }
}

impl From<Pancake2> for GeomObject {
    fn from(p: Pancake2) -> Self {
        GeomObject::Pancake2(p)
    }
}

impl From<Circle> for GeomObject {
    fn from(c: Circle) -> Self {
        GeomObject::Circle(c)
    }
}

impl From<ConvexPolygon> for GeomObject {
    fn from(p: ConvexPolygon) -> Self {
        GeomObject::Polygon(p)
    }
}

/// Segment `[a, b]` fattened by `radius`; disks have `a == b`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Capsule {
    pub a: Point2,
    pub b: Point2,
    pub radius: f64,
}
