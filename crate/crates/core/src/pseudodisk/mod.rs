//! Splitting a family of disks into two cliques when the family fully
//! intersects three pairwise disjoint disks.
//!
//! The split depends on which of the three disks can be the middle of a
//! line transversal: with no transversal the family is one clique; with a
//! single possible middle (or a middle lying between the other two disks'
//! external tangents) members are sorted by how the segment between their
//! witness points passes the middle disk; otherwise members centred on a
//! middle disk form one clique and the rest the other.
//!
//! Every geometric decision carries its slack (see [`Judged`]); a
//! classification whose slack falls below [`DEGENERACY_TOL`] is reported
//! as degenerate rather than guessed.

mod cases;
mod judged;
mod search;
mod shape;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Circle, GeometryError, Tolerance};
use crate::transversal::{middle_profile, overlap_maxima, ConvexSet, TransversalReport};

pub use cases::{case_of, reference_frame, CaseLemma, DiskCase, Frame};
pub use judged::Judged;
pub use shape::{is_centred, is_outside_containing, tangent_shape, ShapeKind, TangentShape};

/// Decisions closer than this to their threshold are degenerate.
pub const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PseudodiskError {
    #[error("triple disks {0} and {1} intersect")]
    TripleNotDisjoint(usize, usize),
    #[error("disk misses triple disk {0}")]
    MissesTriple(usize),
    #[error("disk {0} is not the middle of any transversal")]
    NotAMiddle(usize),
    #[error("disk {0} is not 1-intersecting")]
    ShapeMismatch(usize),
    #[error("disk is not outside-containing triple disk {0}")]
    NotOutsideContaining(usize),
    #[error("middle profile contradicts the tangents around disk {0}")]
    InconsistentProfile(usize),
    #[error("degenerate instance: {0}")]
    Degenerate(String),
    #[error("family member {member}: {error}")]
    Member {
        member: usize,
        error: Box<PseudodiskError>,
    },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl PseudodiskError {
    /// Whether this is (or wraps) a degenerate-instance error.
    pub fn is_degenerate(&self) -> bool {
        match self {
            PseudodiskError::Degenerate(_) => true,
            PseudodiskError::Member { error, .. } => error.is_degenerate(),
            _ => false,
        }
    }
}

/// Three pairwise disjoint disks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triple {
    disks: [Circle; 3],
}

impl Triple {
    pub fn new(disks: [Circle; 3]) -> Result<Self, PseudodiskError> {
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (&disks[i], &disks[j]);
                if a.center.dist(b.center) <= a.radius + b.radius {
                    return Err(PseudodiskError::TripleNotDisjoint(i, j));
                }
            }
        }
        Ok(Triple { disks })
    }

    pub fn disks(&self) -> &[Circle; 3] {
        &self.disks
    }

    pub fn disk(&self, i: usize) -> &Circle {
        &self.disks[i]
    }

    /// The two other indices, ascending.
    pub fn others(i: usize) -> (usize, usize) {
        match i {
            0 => (1, 2),
            1 => (0, 2),
            2 => (0, 1),
            _ => panic!("triple index {i} out of range"),
        }
    }

    pub fn convex_sets(&self) -> [ConvexSet; 3] {
        self.disks.map(ConvexSet::from)
    }

    /// The triple with disk `k` replaced by the old disk `perm[k]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Triple {
        Triple {
            disks: perm.map(|k| self.disks[k]),
        }
    }
}

/// Which disks are the middle of some line transversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum MiddleMode {
    NoTransversal,
    OneMiddle { middle: usize },
    TwoMiddles { excluded: usize },
    AllThree,
}

impl MiddleMode {
    pub fn from_profile(profile: &[usize]) -> Self {
        let mut seen = [false; 3];
        for &m in profile {
            seen[m] = true;
        }
        match seen.iter().filter(|&&s| s).count() {
            0 => MiddleMode::NoTransversal,
            1 => MiddleMode::OneMiddle {
                middle: seen.iter().position(|&s| s).expect("one seen"),
            },
            2 => MiddleMode::TwoMiddles {
                excluded: seen.iter().position(|&s| !s).expect("one unseen"),
            },
            _ => MiddleMode::AllThree,
        }
    }

    pub fn middles(&self) -> Vec<usize> {
        match *self {
            MiddleMode::NoTransversal => vec![],
            MiddleMode::OneMiddle { middle } => vec![middle],
            MiddleMode::TwoMiddles { excluded } => (0..3).filter(|&k| k != excluded).collect(),
            MiddleMode::AllThree => vec![0, 1, 2],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MiddleMode::NoTransversal => "no_transversal",
            MiddleMode::OneMiddle { .. } => "one_middle",
            MiddleMode::TwoMiddles { .. } => "two_middles",
            MiddleMode::AllThree => "all_three",
        }
    }
}

pub fn classify_middle_mode(t: &Triple, resolution: usize) -> MiddleMode {
    MiddleMode::from_profile(&middle_profile(&t.convex_sets(), resolution).middle_profile)
}

/// How the family is split for a given triple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    /// No transversal: any two members intersect.
    SingleClique,
    /// The four cases around the only middle disk.
    OneMiddle { frame: Frame },
    /// The six cases around a contained middle disk.
    Contained { frame: Frame },
    /// Members centred on some middle disk against the rest.
    Centred { shapes: Vec<TangentShape> },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum MemberClass {
    /// Every member goes to the first clique.
    Universal,
    /// Contains a whole triple disk, so meets every other member.
    Container { disk: usize },
    Case { case: DiskCase },
    Centred { disk: usize },
    Uncentred,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub class: MemberClass,
    pub first: bool,
    pub slack: f64,
}

/// Per-triple state for classifying family members.
#[derive(Clone, Debug)]
pub struct Classifier {
    triple: Triple,
    mode: MiddleMode,
    rule: Rule,
    report: TransversalReport,
    slack: f64,
}

impl Classifier {
    pub fn new(t: &Triple, resolution: usize) -> Result<Self, PseudodiskError> {
        let sets = t.convex_sets();
        let report = middle_profile(&sets, resolution);
        let mode = MiddleMode::from_profile(&report.middle_profile);
        // the profile only changes when a local maximum of the overlap
        // crosses zero
        let mut slack = overlap_maxima(&sets, resolution)
            .iter()
            .map(|&(_, g)| g.abs())
            .fold(f64::INFINITY, f64::min);
        let frame = |i: usize| reference_frame(t, i, &report).ok_or(PseudodiskError::InconsistentProfile(i));
        let rule = match mode {
            MiddleMode::NoTransversal => Rule::SingleClique,
            MiddleMode::OneMiddle { middle } => Rule::OneMiddle { frame: frame(middle)? },
            MiddleMode::TwoMiddles { .. } | MiddleMode::AllThree => {
                let mut shapes = Vec::new();
                for i in mode.middles() {
                    let s = tangent_shape(t, i).map_err(|e| match e {
                        PseudodiskError::NotAMiddle(i) => PseudodiskError::InconsistentProfile(i),
                        e => e,
                    })?;
                    slack = slack.min(s.slack);
                    shapes.push(s);
                }
                if let Some(s) = shapes.iter().find(|s| s.kind == ShapeKind::Contained) {
                    Rule::Contained { frame: frame(s.disk)? }
                } else if let Some(s) = shapes.iter().find(|s| s.kind == ShapeKind::TwoIntersecting) {
                    // a 2-intersecting disk is the middle of every transversal
                    return Err(PseudodiskError::InconsistentProfile(s.disk));
                } else {
                    Rule::Centred { shapes }
                }
            }
        };
        if let Rule::OneMiddle { frame } | Rule::Contained { frame } = &rule {
            slack = slack.min(frame.depth);
        }
        Ok(Classifier {
            triple: *t,
            mode,
            rule,
            report,
            slack,
        })
    }

    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn mode(&self) -> MiddleMode {
        self.mode
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    pub fn report(&self) -> &TransversalReport {
        &self.report
    }

    /// Smallest slack among the triple-level decisions.
    pub fn slack(&self) -> f64 {
        self.slack
    }

    /// Classifies one member without the degeneracy check.
    pub fn classify_raw(&self, dp: &Circle) -> Result<Classification, PseudodiskError> {
        let t = &self.triple;
        shape::check_meets_all(dp, t)?;
        let mut container = Judged::certain(false);
        let mut container_disk = None;
        for (k, d) in t.disks().iter().enumerate() {
            let c = shape::contains_disk(dp, d);
            if c.value && container_disk.is_none() {
                container_disk = Some(k);
            }
            container = container.or(c);
        }
        if let Some(disk) = container_disk {
            return Ok(Classification {
                class: MemberClass::Container { disk },
                first: true,
                slack: container.slack,
            });
        }
        let (class, first, slack) = match &self.rule {
            Rule::SingleClique => (MemberClass::Universal, true, f64::INFINITY),
            Rule::OneMiddle { frame } => {
                let case = case_of(dp, t, frame, CaseLemma::OneMiddle)?;
                (MemberClass::Case { case }, case.in_first_part(), case.slack)
            }
            Rule::Contained { frame } => {
                let case = case_of(dp, t, frame, CaseLemma::Contained)?;
                (MemberClass::Case { case }, case.in_first_part(), case.slack)
            }
            Rule::Centred { shapes } => {
                let mut any = Judged::certain(false);
                let mut disk = None;
                for s in shapes {
                    let j = is_outside_containing(dp, t, s)?.and_then(|| is_centred(dp, t, s))?;
                    if j.value && disk.is_none() {
                        disk = Some(s.disk);
                    }
                    any = any.or(j);
                }
                match disk {
                    Some(disk) => (MemberClass::Centred { disk }, true, any.slack),
                    None => (MemberClass::Uncentred, false, any.slack),
                }
            }
        };
        Ok(Classification {
            class,
            first,
            slack: slack.min(container.slack),
        })
    }

    /// Classifies one member, rejecting decisions within `tol` of flipping.
    pub fn classify(&self, dp: &Circle, tol: f64) -> Result<Classification, PseudodiskError> {
        let c = self.classify_raw(dp)?;
        if c.slack < tol {
            return Err(PseudodiskError::Degenerate(format!(
                "member classification within {:.3e} of a threshold",
                c.slack
            )));
        }
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    pub mode: MiddleMode,
    pub classes: Vec<Classification>,
}

/// Splits a family that fully intersects the triple into two index sets,
/// each meant to be a clique. Members containing a triple disk meet every
/// other member and always go to `x1`.
pub fn build_bipartition(t: &Triple, family: &[Circle], resolution: usize) -> Result<Bipartition, PseudodiskError> {
    let classifier = Classifier::new(t, resolution)?;
    if classifier.slack() < DEGENERACY_TOL {
        return Err(PseudodiskError::Degenerate(format!(
            "triple decision within {:.3e} of a threshold",
            classifier.slack()
        )));
    }
    let mut out = Bipartition {
        x1: Vec::new(),
        x2: Vec::new(),
        mode: classifier.mode(),
        classes: Vec::with_capacity(family.len()),
    };
    for (k, dp) in family.iter().enumerate() {
        let c = classifier
            .classify(dp, DEGENERACY_TOL)
            .map_err(|e| PseudodiskError::Member {
                member: k,
                error: Box::new(e),
            })?;
        if c.first {
            out.x1.push(k);
        } else {
            out.x2.push(k);
        }
        out.classes.push(c);
    }
    Ok(out)
}

/// True iff `x1` and `x2` partition the family and each is a clique of
/// pairwise intersecting disks.
pub fn verify_bipartition(family: &[Circle], x1: &[usize], x2: &[usize], tol: Tolerance) -> bool {
    let mut seen = vec![false; family.len()];
    for &k in x1.iter().chain(x2) {
        if k >= family.len() || seen[k] {
            return false;
        }
        seen[k] = true;
    }
    let meets = |i: usize, j: usize| {
        let (a, b) = (&family[i], &family[j]);
        a.center.dist(b.center) <= a.radius + b.radius + tol.eps
    };
    let clique = |s: &[usize]| (0..s.len()).all(|i| (i + 1..s.len()).all(|j| meets(s[i], s[j])));
    seen.iter().all(|&s| s) && clique(x1) && clique(x2)
}
