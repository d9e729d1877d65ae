//! Line transversals of three disjoint convex sets.
//!
//! A line with direction angle `θ` is `{p : p · n(θ) = t}` with
//! `n(θ) = (-sin θ, cos θ)`. It meets a convex set iff `t` lies in the
//! set's support interval for `θ`, so the lines meeting all three sets at
//! angle `θ` form the window `[max lo, min hi]`, nonempty iff the overlap
//! `g(θ) = min hi − max lo` is non-negative.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{orient, Circle, ConvexPolygon, Line2, Point2};

pub const DEFAULT_RESOLUTION: usize = 4096;
pub const DEFAULT_REFINE_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransversalError {
    #[error("line misses set {0}")]
    Misses(usize),
    #[error("chords of sets {0} and {1} overlap; the sets are not disjoint")]
    OverlappingChords(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ConvexSet {
    Circle(Circle),
    Polygon(ConvexPolygon),
}

impl From<Circle> for ConvexSet {
    fn from(c: Circle) -> Self {
        ConvexSet::Circle(c)
    }
}

impl From<ConvexPolygon> for ConvexSet {
    fn from(p: ConvexPolygon) -> Self {
        ConvexSet::Polygon(p)
    }
}

impl ConvexSet {
    /// Largest distance from the origin to a point of the set.
    fn reach(&self) -> f64 {
        match self {
            ConvexSet::Circle(c) => c.center.norm() + c.radius,
            ConvexSet::Polygon(p) => p.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max),
        }
    }

    /// Parameter range `[s0, s1]` of `line.point_at(s)` inside the set.
    pub fn chord(&self, line: &Line2) -> Option<(f64, f64)> {
        match self {
            ConvexSet::Circle(c) => {
                let d = line.signed_distance(c.center);
                if d.abs() > c.radius {
                    return None;
                }
                let half = (c.radius * c.radius - d * d).sqrt();
                let s = (c.center - line.anchor()).dot(line.direction());
                Some((s - half, s + half))
            }
            ConvexSet::Polygon(p) => {
                let (o, dir) = (line.anchor(), line.direction());
                let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
                for (a, b) in p.edges() {
                    // orient(a, b, o + dir s) = base + slope s must stay >= 0
                    let base = orient(a, b, o);
                    let slope = (b - a).cross(dir);
                    if slope.abs() < 1e-15 {
                        if base < 0.0 {
                            return None;
                        }
                    } else if slope > 0.0 {
                        lo = lo.max(-base / slope);
                    } else {
                        hi = hi.min(-base / slope);
                    }
                }
                (lo <= hi).then_some((lo, hi))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportInterval {
    pub lo: f64,
    pub hi: f64,
}

pub fn support_interval(s: &ConvexSet, theta: f64) -> SupportInterval {
    let n = Point2::new(-theta.sin(), theta.cos());
    match s {
        ConvexSet::Circle(c) => {
            let t = c.center.dot(n);
            SupportInterval {
                lo: t - c.radius,
                hi: t + c.radius,
            }
        }
        ConvexSet::Polygon(p) => {
            let (lo, hi) = p
                .vertices()
                .iter()
                .map(|v| v.dot(n))
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), t| (l.min(t), h.max(t)));
            SupportInterval { lo, hi }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransversalSample {
    pub theta: f64,
    pub offset: f64,
    pub middle: usize,
}

impl TransversalSample {
    pub fn line(&self) -> Line2 {
        Line2::from_angle(self.theta, self.offset)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransversalReport {
    pub samples: Vec<TransversalSample>,
    pub middle_profile: Vec<usize>,
    pub resolution: usize,
}

/// The window of offsets `[max lo, min hi]` at angle `θ`; its width is
/// the overlap `g(θ)`, negative when no transversal has this angle.
pub fn window(triple: &[ConvexSet; 3], theta: f64) -> (f64, f64) {
    triple.iter().fold((f64::NEG_INFINITY, f64::INFINITY), |(lo, hi), s| {
        let iv = support_interval(s, theta);
        (lo.max(iv.lo), hi.min(iv.hi))
    })
}

pub fn overlap(triple: &[ConvexSet; 3], theta: f64) -> f64 {
    let (lo, hi) = window(triple, theta);
    hi - lo
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - r * (b - a);
    let mut x2 = a + r * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > tol {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        }
    }
    let x = (a + b) / 2.0;
    (x, f(x))
}

/// The overlap on the angle grid plus, for every grid cell where the
/// Lipschitz bound leaves room for a non-negative value, the refined
/// maximum inside that cell. Angles are in `[0, π)`.
fn candidate_angles(triple: &[ConvexSet; 3], resolution: usize, refine_tol: f64) -> Vec<(f64, f64)> {
    let step = PI / resolution as f64;
    let lipschitz = 2.0 * triple.iter().map(ConvexSet::reach).fold(0.0, f64::max);
    let grid: Vec<(f64, f64)> = (0..resolution)
        .map(|k| {
            let th = k as f64 * step;
            (th, overlap(triple, th))
        })
        .collect();
    let mut out = grid.clone();
    for k in 0..resolution {
        let (ga, gb) = (grid[k].1, grid[(k + 1) % resolution].1);
        if ga >= 0.0 || gb >= 0.0 || (ga + gb + lipschitz * step) / 2.0 < 0.0 {
            continue;
        }
        let a = grid[k].0;
        let (th, g) = golden_max(|t| overlap(triple, t), a, a + step, refine_tol);
        out.push((th.rem_euclid(PI), g));
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

/// Refined local maxima of the overlap, one per grid cell that may hold
/// one; used to keep generated triples away from razor-edge transversals.
pub fn overlap_maxima(triple: &[ConvexSet; 3], resolution: usize) -> Vec<(f64, f64)> {
    let step = PI / resolution as f64;
    let g = |k: usize| overlap(triple, k as f64 * step);
    let mut out = Vec::new();
    for k in 0..resolution {
        let (prev, cur, next) = (g((k + resolution - 1) % resolution), g(k), g((k + 1) % resolution));
        if cur >= prev && cur >= next {
            let th = k as f64 * step;
            let (t, v) = golden_max(|t| overlap(triple, t), th - step, th + step, DEFAULT_REFINE_TOL);
            out.push((t.rem_euclid(PI), v));
        }
    }
    out
}

pub fn transversal_exists(
    triple: &[ConvexSet; 3],
    resolution: usize,
    refine_tol: f64,
) -> Option<TransversalSample> {
    candidate_angles(triple, resolution, refine_tol)
        .into_iter()
        .find(|&(_, g)| g >= 0.0)
        .map(|(theta, _)| {
            let (lo, hi) = window(triple, theta);
            let offset = (lo + hi) / 2.0;
            let middle = middle_of_line(&Line2::from_angle(theta, offset), triple)
                .expect("window lines meet every set");
            TransversalSample { theta, offset, middle }
        })
}

/// The set met in second position: its chord lies between the other two.
pub fn middle_of_line(line: &Line2, triple: &[ConvexSet; 3]) -> Result<usize, TransversalError> {
    let mut chords = [(0.0, 0.0); 3];
    for (i, s) in triple.iter().enumerate() {
        // grazing lines from the window edges may miss by rounding
        chords[i] = s
            .chord(line)
            .or_else(|| tangent_chord(s, line))
            .ok_or(TransversalError::Misses(i))?;
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, b) = (chords[i], chords[j]);
            if a.0.max(b.0) < a.1.min(b.1) - 1e-9 {
                return Err(TransversalError::OverlappingChords(i, j));
            }
        }
    }
    let mut order = [0, 1, 2];
    order.sort_by(|&i, &j| (chords[i].0 + chords[i].1).total_cmp(&(chords[j].0 + chords[j].1)));
    Ok(order[1])
}

/// Degenerate chord for a line within 1e-9 of touching the set.
fn tangent_chord(s: &ConvexSet, line: &Line2) -> Option<(f64, f64)> {
    [1e-9, -1e-9].iter().find_map(|&d| {
        s.chord(&Line2 {
            offset: line.offset + d,
            ..*line
        })
    })
}

pub fn middle_profile(triple: &[ConvexSet; 3], resolution: usize) -> TransversalReport {
    let mut samples = Vec::new();
    for (theta, g) in candidate_angles(triple, resolution, DEFAULT_REFINE_TOL) {
        if g < 0.0 {
            continue;
        }
        let (lo, hi) = window(triple, theta);
        let delta = g / 16.0;
        for offset in [lo + delta, (lo + hi) / 2.0, hi - delta] {
            let line = Line2::from_angle(theta, offset);
            if let Ok(middle) = middle_of_line(&line, triple) {
                samples.push(TransversalSample { theta, offset, middle });
            }
        }
    }
    let mut middle_profile: Vec<usize> = samples.iter().map(|s| s.middle).collect();
    middle_profile.sort_unstable();
    middle_profile.dedup();
    TransversalReport {
        samples,
        middle_profile,
        resolution,
    }
}
