use serde::{Deserialize, Serialize};

use super::judged::Judged;
use super::search::{max_on_box, min_on_circle, Axis, Lens};
use super::shape::{check_meets_all, contains_disk};
use super::{PseudodiskError, Triple};
use crate::geometry::{circle_crossings, lens_witness, point_segment_distance, Circle, Line2, Point2};
use crate::transversal::TransversalReport;

/// A reference transversal with `middle` met second. The line is directed
/// from the lower-indexed outer disk to the other one, and "above" means
/// its positive (left) side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub middle: usize,
    pub line: Line2,
    /// Smallest depth of the line inside any of the three disks.
    pub depth: f64,
}

/// Picks, among the sampled transversals with the requested middle, the
/// one passing deepest through all three disks.
pub fn reference_frame(t: &Triple, middle: usize, report: &TransversalReport) -> Option<Frame> {
    let depth = |l: &Line2| {
        t.disks()
            .iter()
            .map(|d| d.radius - l.signed_distance(d.center).abs())
            .fold(f64::INFINITY, f64::min)
    };
    let line = report
        .samples
        .iter()
        .filter(|s| s.middle == middle)
        .map(|s| s.line())
        .max_by(|x, y| depth(x).total_cmp(&depth(y)))?;
    let (a, b) = Triple::others(middle);
    let dir = line.direction();
    let line = if dir.dot(t.disk(a).center) > dir.dot(t.disk(b).center) {
        line.flipped()
    } else {
        line
    };
    Some(Frame {
        middle,
        line,
        depth: depth(&line),
    })
}

/// Which enumerated case list applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLemma {
    /// Every transversal has the same middle: four cases.
    OneMiddle,
    /// The middle disk is contained: six cases.
    Contained,
}

/// Case of one family member, with the witness points that decided it.
/// `p1` and `p3` lie in the member's intersections with the two outer
/// disks; `p2`, when present, in its intersection with the middle disk.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiskCase {
    pub lemma: CaseLemma,
    pub case: u8,
    pub p1: Point2,
    pub p2: Option<Point2>,
    pub p3: Point2,
    pub slack: f64,
}

impl DiskCase {
    /// Whether the case belongs to the first clique: cases 1–2 of four,
    /// or 1–3 of six.
    pub fn in_first_part(&self) -> bool {
        match self.lemma {
            CaseLemma::OneMiddle => self.case <= 2,
            CaseLemma::Contained => self.case <= 3,
        }
    }
}

fn seg_gap(p: Point2, q: Point2, d: &Circle) -> f64 {
    point_segment_distance(d.center, p, q) - d.radius
}

fn degenerate(what: &str) -> PseudodiskError {
    PseudodiskError::Degenerate(what.to_string())
}

/// Whether `[p1, p3]`, which misses the middle disk, passes above it: the
/// closed loop through the frame's chord midpoints and the segment
/// encloses the middle disk's upper part exactly when it does.
fn passes_above(t: &Triple, frame: &Frame, p1: Point2, p3: Point2) -> Judged {
    let (a, b) = Triple::others(frame.middle);
    let l = frame.line;
    let d2 = t.disk(frame.middle);
    let a1 = l.project(t.disk(a).center);
    let a3 = l.project(t.disk(b).center);
    let sd = l.signed_distance(d2.center);
    let probe = d2.center + l.normal * ((d2.radius - sd) / 2.0);
    let lp = [a1, p1, p3, a3];
    let mut inside = false;
    let mut slack = f64::INFINITY;
    for k in 0..4 {
        let (u, v) = (lp[k], lp[(k + 1) % 4]);
        slack = slack.min(point_segment_distance(probe, u, v));
        if (u.y > probe.y) != (v.y > probe.y) {
            let x = u.x + (probe.y - u.y) / (v.y - u.y) * (v.x - u.x);
            if x > probe.x {
                inside = !inside;
            }
        }
    }
    Judged { value: inside, slack }
}

/// For a segment `[p1, p3]` through the middle disk, whether `dp` holds
/// the part on its left (true) or right (false). Two disk boundaries cross
/// at most twice, so `dp` contains one side wholly; it is the side free of
/// crossings whose extreme point `dp` contains.
fn contained_side(dp: &Circle, d2: &Circle, p1: Point2, p3: Point2) -> Result<Judged, PseudodiskError> {
    let line = Line2::through(p1, p3).ok_or_else(|| degenerate("witness points coincide"))?;
    let whole = contains_disk(dp, d2);
    if whole.value {
        return Ok(whole);
    }
    let (x1, x2) = circle_crossings(dp, d2).ok_or_else(|| degenerate("tangent boundaries"))?;
    let holds = |sign: f64| {
        let z = d2.center + line.normal * (sign * d2.radius);
        Judged::positive(-sign * line.signed_distance(x1))
            .and(Judged::positive(-sign * line.signed_distance(x2)))
            .and(Judged::positive(dp.radius - dp.center.dist(z)))
    };
    let (left, right) = (holds(1.0), holds(-1.0));
    match (left.value, right.value) {
        (true, false) | (false, true) => Ok(Judged {
            value: left.value,
            slack: left.slack.min(right.slack),
        }),
        _ => Err(degenerate("segment splits the middle disk without a contained side")),
    }
}

/// The boundary crossing of `dp` and `dk` nearest the centre of `d2`.
fn nearest_crossing(dp: &Circle, dk: &Circle, d2: &Circle) -> Result<(Point2, f64), PseudodiskError> {
    match circle_crossings(dp, dk) {
        Some((x, y)) => {
            let (dx, dy) = (x.dist(d2.center), y.dist(d2.center));
            let p = if dx <= dy { x } else { y };
            // coincident crossings are the same point, not a tie
            let slack = if x.dist(y) < 1e-12 { f64::INFINITY } else { (dx - dy).abs() };
            Ok((p, slack))
        }
        None => Ok((lens_witness(dp, dk)?, f64::INFINITY)),
    }
}

/// Whether some segment from `dp ∩ d1` to `dp ∩ d3` meets `d2`, decided on
/// the support functions: the union of such segments is the hull of the
/// two lenses, which misses `d2` iff some direction separates them. When
/// it exists, the returned pair is the deepest one found.
fn crossing_pair(
    dp: &Circle,
    d1: &Circle,
    d2: &Circle,
    d3: &Circle,
) -> Result<(Judged, Option<(Point2, Point2)>), PseudodiskError> {
    let l1 = Lens::new(*dp, *d1).ok_or_else(|| degenerate("member only touches a triple disk"))?;
    let l3 = Lens::new(*dp, *d3).ok_or_else(|| degenerate("member only touches a triple disk"))?;
    let sep = |th: f64| {
        let u = Point2::from_angle(th);
        l1.support(u).0.max(l3.support(u).0) - u.dot(d2.center) + d2.radius
    };
    let (_, fmin) = min_on_circle(sep, 720);
    let exists = Judged::positive(fmin);
    if !exists.value {
        return Ok((exists, None));
    }
    let depth = |f1: f64, f3: f64| -seg_gap(l1.boundary(f1), l3.boundary(f3), d2);
    let ((f1, f3), best) = max_on_box(depth, Axis::angle(), Axis::angle(), 48);
    let inner = -seg_gap(l1.inner, l3.inner, d2);
    let (q1, q3, best) = if inner >= best {
        (l1.inner, l3.inner, inner)
    } else {
        (l1.boundary(f1), l3.boundary(f3), best)
    };
    if best <= 0.0 {
        return Err(degenerate("no crossing segment found for a crossing hull"));
    }
    Ok((
        Judged {
            value: true,
            slack: exists.slack.min(best),
        },
        Some((q1, q3)),
    ))
}

/// Whether some `p2 ∈ dp ∩ d2` has `[p1, p2]` missing `d3` and `[p3, p2]`
/// missing `d1`; returns the best `p2` found.
fn free_middle_point(
    dp: &Circle,
    d1: &Circle,
    d2: &Circle,
    d3: &Circle,
    p1: Point2,
    p3: Point2,
) -> Result<(Judged, Point2), PseudodiskError> {
    let l2 = Lens::new(*dp, *d2).ok_or_else(|| degenerate("member only touches a triple disk"))?;
    let clearance = |phi: f64, rho: f64| {
        let p = l2.at(phi, rho);
        seg_gap(p1, p, d3).min(seg_gap(p3, p, d1))
    };
    let ((phi, rho), best) = max_on_box(clearance, Axis::angle(), Axis::unit(), 40);
    Ok((Judged::positive(best), l2.at(phi, rho)))
}

/// Classifies `dp` by the case list of `lemma` around the frame's middle
/// disk. The outer disks play the roles of `𝒟₁` and `𝒟₃` in index order.
pub fn case_of(dp: &Circle, t: &Triple, frame: &Frame, lemma: CaseLemma) -> Result<DiskCase, PseudodiskError> {
    check_meets_all(dp, t)?;
    let (a, b) = Triple::others(frame.middle);
    let (d1, d2, d3) = (t.disk(a), t.disk(frame.middle), t.disk(b));
    let split = |p1: Point2, p3: Point2, cases: (u8, u8), slack: f64| -> Result<DiskCase, PseudodiskError> {
        let side = contained_side(dp, d2, p1, p3)?;
        Ok(DiskCase {
            lemma,
            case: if side.value { cases.0 } else { cases.1 },
            p1,
            p2: None,
            p3,
            slack: slack.min(side.slack),
        })
    };
    match lemma {
        CaseLemma::OneMiddle => {
            let p1 = lens_witness(dp, d1)?;
            let p3 = lens_witness(dp, d3)?;
            let misses = Judged::positive(seg_gap(p1, p3, d2));
            if !misses.value {
                return split(p1, p3, (2, 4), misses.slack);
            }
            let above = passes_above(t, frame, p1, p3);
            Ok(DiskCase {
                lemma,
                case: if above.value { 1 } else { 3 },
                p1,
                p2: None,
                p3,
                slack: misses.slack.min(above.slack),
            })
        }
        CaseLemma::Contained => {
            let (cross, pair) = crossing_pair(dp, d1, d2, d3)?;
            if let Some((q1, q3)) = pair {
                return split(q1, q3, (2, 5), cross.slack);
            }
            let (p1, s1) = nearest_crossing(dp, d1, d2)?;
            let (p3, s3) = nearest_crossing(dp, d3, d2)?;
            let above = passes_above(t, frame, p1, p3);
            let (free, p2) = free_middle_point(dp, d1, d2, d3, p1, p3)?;
            let case = match (above.value, free.value) {
                (true, true) => 1,
                (false, false) => 3,
                (false, true) => 4,
                (true, false) => 6,
            };
            Ok(DiskCase {
                lemma,
                case,
                p1,
                p2: Some(p2),
                p3,
                slack: cross.slack.min(s1).min(s3).min(above.slack).min(free.slack),
            })
        }
    }
}
