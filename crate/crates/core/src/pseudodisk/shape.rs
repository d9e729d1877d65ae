use serde::{Deserialize, Serialize};

use super::judged::Judged;
use super::search::golden_min;
use super::{PseudodiskError, Triple};
use crate::geometry::{circle_crossings, external_tangents, lens_witness, Circle, ExternalTangents, Line2, Point2};

/// How a middle disk sits relative to the external tangents of the other
/// two disks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    /// Inside the region bounded by the two tangents and the other disks.
    Contained,
    OneIntersecting,
    TwoIntersecting,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentShape {
    pub disk: usize,
    pub kind: ShapeKind,
    /// External tangents of the other two disks, taken in index order.
    pub tangents: ExternalTangents,
    /// For a 1-intersecting disk, the tangent it meets. Its normal points
    /// towards the other two disks, so `A_i` is the part of the disk at
    /// non-negative signed distance.
    pub tau: Option<Line2>,
    pub slack: f64,
}

impl TangentShape {
    /// Whether `p` is on the `A_i` side of `τ_i`.
    pub fn on_a_side(&self, p: Point2) -> Option<bool> {
        self.tau.map(|l| l.signed_distance(p) >= 0.0)
    }
}

/// Depth of `p` inside the convex hull of two disks (negative outside):
/// the hull is the union of the disks interpolating centre and radius.
fn hull_depth(p: Point2, a: &Circle, b: &Circle) -> f64 {
    let excess = |t: f64| p.dist(a.center.lerp(b.center, t)) - (a.radius + (b.radius - a.radius) * t);
    let (_, v) = golden_min(excess, 0.0, 1.0, 1e-12);
    -v.min(excess(0.0)).min(excess(1.0))
}

/// Classifies disk `i` against the external tangents of the other two.
/// Fails with [`PseudodiskError::NotAMiddle`] when the disk misses both
/// tangents and lies outside their hull, since no transversal can then
/// have it in the middle.
pub fn tangent_shape(t: &Triple, i: usize) -> Result<TangentShape, PseudodiskError> {
    let (a, b) = Triple::others(i);
    let tangents = external_tangents(t.disk(a), t.disk(b))?;
    let di = t.disk(i);
    let hit = |l: &Line2| Judged::positive(di.radius - l.signed_distance(di.center).abs());
    let (hl, hr) = (hit(&tangents.left), hit(&tangents.right));
    let slack = hl.slack.min(hr.slack);
    let (kind, tau, slack) = match (hl.value, hr.value) {
        (true, true) => (ShapeKind::TwoIntersecting, None, slack),
        (true, false) => (ShapeKind::OneIntersecting, Some(tangents.left), slack),
        (false, true) => (ShapeKind::OneIntersecting, Some(tangents.right), slack),
        (false, false) => {
            let inside = Judged::positive(hull_depth(di.center, t.disk(a), t.disk(b)));
            if !inside.value {
                return Err(PseudodiskError::NotAMiddle(i));
            }
            (ShapeKind::Contained, None, slack.min(inside.slack))
        }
    };
    Ok(TangentShape {
        disk: i,
        kind,
        tangents,
        tau,
        slack,
    })
}

pub(crate) fn contains_disk(outer: &Circle, inner: &Circle) -> Judged {
    Judged::positive(outer.radius - outer.center.dist(inner.center) - inner.radius)
}

fn contains_point(c: &Circle, p: Point2) -> Judged {
    Judged::positive(c.radius - c.center.dist(p))
}

pub(crate) fn check_meets_all(dp: &Circle, t: &Triple) -> Result<(), PseudodiskError> {
    for (k, d) in t.disks().iter().enumerate() {
        if dp.center.dist(d.center) > dp.radius + d.radius + crate::geometry::DEFAULT_EPS {
            return Err(PseudodiskError::MissesTriple(k));
        }
    }
    Ok(())
}

fn tau_of(shape: &TangentShape) -> Result<Line2, PseudodiskError> {
    match (shape.kind, shape.tau) {
        (ShapeKind::OneIntersecting, Some(l)) => Ok(l),
        _ => Err(PseudodiskError::ShapeMismatch(shape.disk)),
    }
}

/// Whether `dp` covers `𝒟_i ∖ A_i`. Boundaries of two disks cross at
/// most twice, so this holds iff `dp` contains `𝒟_i`, or both boundary
/// crossings lie in `A_i` and `dp` contains the point of `𝒟_i` farthest
/// beyond `τ_i`.
pub fn is_outside_containing(dp: &Circle, t: &Triple, shape: &TangentShape) -> Result<Judged, PseudodiskError> {
    let tau = tau_of(shape)?;
    check_meets_all(dp, t)?;
    let di = t.disk(shape.disk);
    let whole = contains_disk(dp, di);
    if whole.value {
        return Ok(whole);
    }
    let Some((x1, x2)) = circle_crossings(dp, di) else {
        return Ok(whole);
    };
    let crossings_in_a = Judged::positive(tau.signed_distance(x1)).and(Judged::positive(tau.signed_distance(x2)));
    let farthest = di.center - tau.normal * di.radius;
    Ok(whole.or(crossings_in_a.and(contains_point(dp, farthest))))
}

/// Whether an outside-containing `dp` meets the other two disks in
/// different components of `(ℋ ∩ ℋ') ∖ A_i`.
///
/// The segment from the foot of the centre on `τ_i` to the midpoint of the
/// crossing chord lies in `𝒟_i ∩ ℋ ∩ ℋ'` and runs from one bounding line
/// to the other, so its supporting line separates the two components; the
/// lens witnesses of `dp` with the other disks lie in the residual region
/// and are compared against it.
pub fn is_centred(dp: &Circle, t: &Triple, shape: &TangentShape) -> Result<Judged, PseudodiskError> {
    let tau = tau_of(shape)?;
    let oc = is_outside_containing(dp, t, shape)?;
    if !oc.value {
        return Err(PseudodiskError::NotOutsideContaining(shape.disk));
    }
    let di = t.disk(shape.disk);
    let whole = contains_disk(dp, di);
    if whole.value {
        // no crossings: the residual region does not split `dp`'s reach
        return Ok(!whole);
    }
    let (x1, x2) = circle_crossings(dp, di).ok_or_else(|| PseudodiskError::Degenerate("tangent boundaries".into()))?;
    let foot_tau = tau.project(di.center);
    let foot_chord = x1.lerp(x2, 0.5);
    let spine = Line2::through(foot_tau, foot_chord)
        .filter(|_| foot_tau.dist(foot_chord) > 1e-12)
        .ok_or_else(|| PseudodiskError::Degenerate("crossing chord on the tangent".into()))?;
    let (a, b) = Triple::others(shape.disk);
    let wa = lens_witness(dp, t.disk(a))?;
    let wb = lens_witness(dp, t.disk(b))?;
    let split = Judged::positive(spine.signed_distance(wa)).xor(Judged::positive(spine.signed_distance(wb)));
    Ok(oc.and(split).and(!whole))
}
