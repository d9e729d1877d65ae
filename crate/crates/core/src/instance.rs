//! Problem instances and their JSON file format.
//!
//! ```json
//! { "kind": "pi2",
//!   "objects": [ {"kind": "unit_disk", "cx": 0.0, "cy": 0.5},
//!                {"kind": "pancake", "x1": -1.0, "x2": 2.0} ] }
//! ```
//!
//! Pseudo-disk instances use `"kind": "pseudodisk"`, circle objects
//! `{"kind": "circle", "cx", "cy", "r"}` and a `"triple"` of three object
//! indices; every other object is a family member. Geometry-free graphs
//! use the `"graph": {"n", "edges"}` field instead of objects.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Circle, GeomObject, GeometryError, Pancake2, Point2, Tolerance, UnitDisk};
use crate::graphs::{build_intersection_graph, Graph, GraphError};
use crate::pseudodisk::{PseudodiskError, Triple};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("malformed instance JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("object {index}: {source}")]
    Object { index: usize, source: GeometryError },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pseudodisk(#[from] PseudodiskError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    Pi2,
    Pseudodisk,
}

/// An abstract graph given by its edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub kind: InstanceKind,
    pub objects: Vec<GeomObject>,
    pub triple: Option<[usize; 3]>,
    pub graph: Option<GraphSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ObjectRecord {
    UnitDisk { cx: f64, cy: f64 },
    Pancake { x1: f64, x2: f64 },
    Circle { cx: f64, cy: f64, r: f64 },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceRecord {
    kind: InstanceKind,
    #[serde(default)]
    objects: Vec<ObjectRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    triple: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<GraphSpec>,
}

impl ObjectRecord {
    fn to_object(&self) -> Result<GeomObject, GeometryError> {
        let finite = |xs: &[f64]| {
            if xs.iter().all(|x| x.is_finite()) {
                Ok(())
            } else {
                Err(GeometryError::NonFinite)
            }
        };
        Ok(match *self {
            ObjectRecord::UnitDisk { cx, cy } => {
                finite(&[cx, cy])?;
                UnitDisk::new(cx, cy).into()
            }
            ObjectRecord::Pancake { x1, x2 } => Pancake2::new(x1, x2)?.into(),
            ObjectRecord::Circle { cx, cy, r } => Circle::new(Point2::new(cx, cy), r)?.into(),
        })
    }

    fn from_object(o: &GeomObject) -> Option<Self> {
        Some(match o {
            GeomObject::UnitDisk(d) => ObjectRecord::UnitDisk {
                cx: d.center.x,
                cy: d.center.y,
            },
            GeomObject::Pancake2(p) => ObjectRecord::Pancake { x1: p.x1(), x2: p.x2() },
            GeomObject::Circle(c) => ObjectRecord::Circle {
                cx: c.center.x,
                cy: c.center.y,
                r: c.radius,
            },
            GeomObject::Polygon(_) => return None,
        })
    }
}

impl Instance {
    pub fn pi2(objects: Vec<GeomObject>) -> Self {
        Instance {
            kind: InstanceKind::Pi2,
            objects,
            triple: None,
            graph: None,
        }
    }

    pub fn abstract_graph(g: &Graph) -> Self {
        Instance {
            kind: InstanceKind::Pi2,
            objects: Vec::new(),
            triple: None,
            graph: Some(GraphSpec {
                n: g.n(),
                edges: g.edges(),
            }),
        }
    }

    /// A pseudo-disk instance with the triple first, then the family.
    pub fn pseudodisk(triple: &Triple, family: &[Circle]) -> Self {
        Instance {
            kind: InstanceKind::Pseudodisk,
            objects: triple.disks().iter().chain(family).map(|&c| c.into()).collect(),
            triple: Some([0, 1, 2]),
            graph: None,
        }
    }

    pub fn from_json(s: &str) -> Result<Self, InstanceError> {
        let rec: InstanceRecord = serde_json::from_str(s)?;
        let objects = rec
            .objects
            .iter()
            .enumerate()
            .map(|(index, o)| o.to_object().map_err(|source| InstanceError::Object { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        let inst = Instance {
            kind: rec.kind,
            objects,
            triple: rec.triple,
            graph: rec.graph,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> Result<String, InstanceError> {
        let objects = self
            .objects
            .iter()
            .map(|o| {
                ObjectRecord::from_object(o)
                    .ok_or_else(|| InstanceError::Invalid("polygons have no file representation".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rec = InstanceRecord {
            kind: self.kind,
            objects,
            triple: self.triple,
            graph: self.graph.clone(),
        };
        Ok(serde_json::to_string_pretty(&rec)? + "\n")
    }

    /// Structural checks: object kinds match the instance kind, indices are
    /// in range, and the graph field is well formed.
    pub fn validate(&self) -> Result<(), InstanceError> {
        let bad = |m: String| Err(InstanceError::Invalid(m));
        match self.kind {
            InstanceKind::Pi2 => {
                if let Some(o) = self.objects.iter().find(|o| !o.is_pi2()) {
                    return bad(format!("pi2 instance holds a {}", o.kind_name()));
                }
                if self.triple.is_some() {
                    return bad("pi2 instances have no triple".into());
                }
                if self.graph.is_some() && !self.objects.is_empty() {
                    return bad("give either objects or a graph, not both".into());
                }
                if let Some(g) = &self.graph {
                    Graph::from_edges(g.n, &g.edges)?;
                }
            }
            InstanceKind::Pseudodisk => {
                if let Some(o) = self.objects.iter().find(|o| !matches!(o, GeomObject::Circle(_))) {
                    return bad(format!("pseudodisk instance holds a {}", o.kind_name()));
                }
                if self.graph.is_some() {
                    return bad("pseudodisk instances take no graph".into());
                }
                let Some(t) = self.triple else {
                    return bad("pseudodisk instance needs a triple".into());
                };
                if t.iter().any(|&i| i >= self.objects.len()) {
                    return bad(format!("triple {t:?} out of range for {} objects", self.objects.len()));
                }
                if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                    return bad(format!("triple {t:?} repeats an index"));
                }
            }
        }
        Ok(())
    }

    /// The intersection graph of the objects, or the abstract graph.
    pub fn graph(&self, tol: Tolerance) -> Result<Graph, InstanceError> {
        match &self.graph {
            Some(g) => Ok(Graph::from_edges(g.n, &g.edges)?),
            None => Ok(build_intersection_graph(&self.objects, tol)),
        }
    }

    pub fn has_geometry(&self) -> bool {
        self.graph.is_none()
    }

    /// The triple and the family (every other object, in order), plus the
    /// object index of each family member.
    pub fn triple_and_family(&self) -> Result<(Triple, Vec<Circle>, Vec<usize>), InstanceError> {
        let t = self
            .triple
            .ok_or_else(|| InstanceError::Invalid("instance has no triple".into()))?;
        let circle = |i: usize| match &self.objects[i] {
            GeomObject::Circle(c) => Ok(*c),
            o => Err(InstanceError::Invalid(format!("object {i} is a {}", o.kind_name()))),
        };
        let triple = Triple::new([circle(t[0])?, circle(t[1])?, circle(t[2])?])?;
        let mut family = Vec::new();
        let mut index = Vec::new();
        for i in (0..self.objects.len()).filter(|i| !t.contains(i)) {
            family.push(circle(i)?);
            index.push(i);
        }
        Ok((triple, family, index))
    }
}
