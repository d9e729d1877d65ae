//! Seeded random instances in general position.
//!
//! Every quantity a predicate or classifier branches on is kept at least
//! `margin` away from its threshold; candidates that violate this are
//! redrawn. The stream is ChaCha8 seeded with the 64-bit seed, so a fixed
//! config always yields the same instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Circle, GeomObject, Pancake2, Point2, UnitDisk, DEFAULT_EPS};
use crate::instance::Instance;
use crate::pseudodisk::{Classifier, MiddleMode, Triple};
use crate::transversal::DEFAULT_RESOLUTION;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("cannot satisfy margin at this density ({placed} objects placed)")]
    Density { placed: usize },
    #[error("rejection cap exceeded while sampling {0}")]
    RejectionCap(&'static str),
}

/// Which middle mode a pseudo-disk triple should have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeBias {
    NoTransversal,
    OneMiddle,
    TwoMiddles,
    AllThree,
}

impl ModeBias {
    pub const ALL: [ModeBias; 4] = [
        ModeBias::NoTransversal,
        ModeBias::OneMiddle,
        ModeBias::TwoMiddles,
        ModeBias::AllThree,
    ];

    pub fn matches(self, mode: MiddleMode) -> bool {
        matches!(
            (self, mode),
            (ModeBias::NoTransversal, MiddleMode::NoTransversal)
                | (ModeBias::OneMiddle, MiddleMode::OneMiddle { .. })
                | (ModeBias::TwoMiddles, MiddleMode::TwoMiddles { .. })
                | (ModeBias::AllThree, MiddleMode::AllThree)
        )
    }
}

impl std::str::FromStr for ModeBias {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "notransversal" => ModeBias::NoTransversal,
            "onemiddle" => ModeBias::OneMiddle,
            "twomiddles" => ModeBias::TwoMiddles,
            "allthree" => ModeBias::AllThree,
            _ => return Err(format!("unknown mode {s:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    /// Placement rectangle `(width, height)`. Π² objects use
    /// `[0, w] × [-h/2, h/2]`; pseudo-disk triples are scaled to it.
    pub box_size: (f64, f64),
    pub margin: f64,
    pub n_disks: usize,
    pub n_pancakes: usize,
    pub n_family: usize,
    /// Mean of the exponential spine length.
    pub pancake_mean_len: f64,
    pub max_rejections: usize,
    pub mode: Option<ModeBias>,
    /// Angular resolution of the transversal sweep used to audit triples.
    pub resolution: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            box_size: (10.0, 4.0),
            margin: 1e-6,
            n_disks: 0,
            n_pancakes: 0,
            n_family: 0,
            pancake_mean_len: 1.5,
            max_rejections: 10_000,
            mode: None,
            resolution: DEFAULT_RESOLUTION,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<(), GenError> {
        let bad = |m: &str| Err(GenError::InvalidConfig(m.to_string()));
        let (w, h) = self.box_size;
        if !(w.is_finite() && h.is_finite() && w > 0.0 && h > 0.0) {
            return bad("box must have positive finite sides");
        }
        if !(self.margin.is_finite() && self.margin > 10.0 * DEFAULT_EPS) {
            return bad("margin must exceed 10·eps");
        }
        if !(self.pancake_mean_len.is_finite() && self.pancake_mean_len >= 0.0) {
            return bad("pancake mean length must be finite and non-negative");
        }
        if self.max_rejections == 0 {
            return bad("max_rejections must be positive");
        }
        if self.resolution < 8 {
            return bad("resolution must be at least 8");
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Smallest distance of any guarded quantity of the pair from its
/// threshold. Pairs that do not interact in a guarded way give infinity.
pub fn pi2_pair_margin(a: &GeomObject, b: &GeomObject) -> f64 {
    match (a, b) {
        (GeomObject::UnitDisk(d), GeomObject::UnitDisk(e)) => (d.center.dist(e.center) - 2.0).abs(),
        (GeomObject::UnitDisk(d), GeomObject::Pancake2(p)) | (GeomObject::Pancake2(p), GeomObject::UnitDisk(d)) => {
            let c = d.center;
            let mut m = (p.spine_distance(c) - 2.0).abs();
            m = m.min((c.x - p.x1()).abs()).min((c.x - p.x2()).abs());
            for x in [p.x1(), p.x2()] {
                for y in [1.0, -1.0] {
                    m = m.min((Point2::new(x, y).dist(c) - 1.0).abs());
                }
            }
            m
        }
        (GeomObject::Pancake2(p), GeomObject::Pancake2(q)) => {
            let gap = (q.x1() - p.x2()).max(p.x1() - q.x2()).max(0.0);
            let mut m = (gap - 2.0).abs();
            for x in [p.x1(), p.x2()] {
                for y in [q.x1(), q.x2()] {
                    m = m.min((x - y).abs());
                }
            }
            // equal spine lengths would tie in the pancake ordering
            m.min((p.spine_len() - q.spine_len()).abs())
        }
        _ => f64::INFINITY,
    }
}

/// Minimum of [`pi2_pair_margin`] over all pairs.
pub fn pi2_min_margin(objects: &[GeomObject]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..objects.len() {
        for j in i + 1..objects.len() {
            m = m.min(pi2_pair_margin(&objects[i], &objects[j]));
        }
    }
    m
}

/// `-mean·ln(1-u)` with `u` uniform in `[0, 1)`.
fn exponential(rng: &mut ChaCha8Rng, mean: f64) -> f64 {
    -mean * (1.0 - rng.gen::<f64>()).ln()
}

/// Unit disks and pancakes in general position: disks first, then
/// pancakes.
pub fn gen_pi2(cfg: &GenConfig) -> Result<Instance, GenError> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let (w, h) = cfg.box_size;
    let mut objects: Vec<GeomObject> = Vec::with_capacity(cfg.n_disks + cfg.n_pancakes);
    let mut rejections = 0;
    let total = cfg.n_disks + cfg.n_pancakes;
    while objects.len() < total {
        let cand: GeomObject = if objects.len() < cfg.n_disks {
            UnitDisk::new(rng.gen_range(0.0..=w), rng.gen_range(-h / 2.0..=h / 2.0)).into()
        } else {
            let x1 = rng.gen_range(0.0..=w);
            let x2 = (x1 + exponential(&mut rng, cfg.pancake_mean_len)).min(w);
            Pancake2::new(x1, x2).expect("ordered finite endpoints").into()
        };
        if objects.iter().all(|o| pi2_pair_margin(o, &cand) >= cfg.margin) {
            objects.push(cand);
        } else {
            rejections += 1;
            if rejections > cfg.max_rejections {
                return Err(GenError::Density { placed: objects.len() });
            }
        }
    }
    Ok(Instance::pi2(objects))
}

fn rotate(p: Point2, angle: f64) -> Point2 {
    let (s, c) = angle.sin_cos();
    Point2::new(c * p.x - s * p.y, s * p.x + c * p.y)
}

/// Draws a candidate triple shaped to favour `bias`, with the scale set by
/// the box.
fn candidate_triple(rng: &mut ChaCha8Rng, bias: Option<ModeBias>, scale: f64) -> [(Point2, f64); 3] {
    let mut raw: [(Point2, f64); 3] = match bias {
        Some(ModeBias::NoTransversal) => {
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            std::array::from_fn(|k| {
                let a = phase + k as f64 * std::f64::consts::TAU / 3.0 + rng.gen_range(-0.3..0.3);
                (Point2::from_angle(a) * 4.0, rng.gen_range(0.4..1.2))
            })
        }
        Some(ModeBias::OneMiddle) => std::array::from_fn(|k| {
            let x = -4.0 + 4.0 * k as f64 + rng.gen_range(-0.5..0.5);
            (Point2::new(x, rng.gen_range(-0.5..0.5)), rng.gen_range(0.8..1.5))
        }),
        Some(ModeBias::AllThree) => {
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            std::array::from_fn(|k| {
                let a = phase + k as f64 * std::f64::consts::TAU / 3.0 + rng.gen_range(-0.05..0.05);
                (Point2::from_angle(a), rng.gen_range(0.75..0.85))
            })
        }
        Some(ModeBias::TwoMiddles) | None => std::array::from_fn(|_| {
            let c = Point2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            (c, rng.gen_range(0.5..2.0))
        }),
    };
    let angle = rng.gen_range(0.0..std::f64::consts::TAU);
    // shuffle so the middle disk is not always index 1
    for k in (1..3).rev() {
        let j = rng.gen_range(0..=k);
        raw.swap(k, j);
    }
    raw.map(|(c, r)| (rotate(c, angle) * scale, r * scale))
}

fn circle_margin(a: &Circle, b: &Circle) -> f64 {
    let d = a.center.dist(b.center);
    (d - a.radius - b.radius).abs().min((d - (a.radius - b.radius).abs()).abs())
}

/// A triple of pairwise disjoint circles followed by `n_family` circles
/// that each meet all three. The triple's mode matches `cfg.mode` when
/// set, and every triple-level and member-level classification decision
/// clears the margin.
pub fn gen_pseudodisk_triple(cfg: &GenConfig) -> Result<Instance, GenError> {
    cfg.validate()?;
    let mut rng = cfg.rng();
    let scale = cfg.box_size.0.min(cfg.box_size.1) / 10.0;
    let mut rejections = 0;
    let mut reject = |what: &'static str| {
        rejections += 1;
        if rejections > cfg.max_rejections {
            Err(GenError::RejectionCap(what))
        } else {
            Ok(())
        }
    };
    let (triple, classifier) = loop {
        let raw = candidate_triple(&mut rng, cfg.mode, scale);
        let disks = raw.map(|(c, r)| Circle::new(c, r).expect("positive radius"));
        let separated = (0..3).all(|i| (i + 1..3).all(|j| {
            disks[i].center.dist(disks[j].center) - disks[i].radius - disks[j].radius >= cfg.margin
        }));
        if separated {
            if let Ok(t) = Triple::new(disks) {
                if let Ok(c) = Classifier::new(&t, cfg.resolution) {
                    if c.slack() >= cfg.margin && cfg.mode.is_none_or(|b| b.matches(c.mode())) {
                        break (t, c);
                    }
                }
            }
        }
        reject("the triple")?;
    };
    let (lo, hi) = bounding_box(triple.disks());
    let pad = (hi - lo).norm();
    let mut family: Vec<Circle> = Vec::with_capacity(cfg.n_family);
    while family.len() < cfg.n_family {
        let p = Point2::new(
            rng.gen_range(lo.x - pad..hi.x + pad),
            rng.gen_range(lo.y - pad..hi.y + pad),
        );
        let reach = triple
            .disks()
            .iter()
            .map(|d| p.dist(d.center) - d.radius)
            .fold(f64::NEG_INFINITY, f64::max);
        let extra = rng.gen_range(0.02..1.0) * scale;
        let Ok(dp) = Circle::new(p, reach.max(0.0) + extra) else {
            reject("a family member")?;
            continue;
        };
        let clear = triple.disks().iter().all(|d| circle_margin(&dp, d) >= cfg.margin)
            && family.iter().all(|f| circle_margin(&dp, f) >= cfg.margin)
            && classifier.classify(&dp, cfg.margin).is_ok();
        if clear {
            family.push(dp);
        } else {
            reject("a family member")?;
        }
    }
    Ok(Instance::pseudodisk(&triple, &family))
}

fn bounding_box(disks: &[Circle]) -> (Point2, Point2) {
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for d in disks {
        lo = Point2::new(lo.x.min(d.center.x - d.radius), lo.y.min(d.center.y - d.radius));
        hi = Point2::new(hi.x.max(d.center.x + d.radius), hi.y.max(d.center.y + d.radius));
    }
    (lo, hi)
}
