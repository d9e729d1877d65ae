use super::{CneeoError, EdgeOrdering};
use crate::geometry::{distance, intersects, is_lens, GeomObject, Tolerance};

/// Which block of the geometric ordering an edge belongs to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeClass {
    /// Disk–disk, or disk–pancake meeting in a lens; carries the length.
    Lens(f64),
    /// Disk–pancake whose intersection is not a lens.
    DiskPancake,
    /// Pancake–pancake.
    Pancakes,
}

pub(crate) fn check_pi2(objects: &[GeomObject]) -> Result<(), CneeoError> {
    match objects.iter().find(|o| !o.is_pi2()) {
        Some(o) => Err(CneeoError::NotPi2(o.kind_name())),
        None => Ok(()),
    }
}

pub(crate) fn classify(a: &GeomObject, b: &GeomObject, tol: Tolerance) -> EdgeClass {
    let length = || distance(a, b).expect("unit disks and pancakes");
    match (a, b) {
        (GeomObject::UnitDisk(_), GeomObject::UnitDisk(_)) => EdgeClass::Lens(length()),
        (GeomObject::UnitDisk(d), GeomObject::Pancake2(p))
        | (GeomObject::Pancake2(p), GeomObject::UnitDisk(d)) => {
            if is_lens(d, p, tol) {
                EdgeClass::Lens(length())
            } else {
                EdgeClass::DiskPancake
            }
        }
        (GeomObject::Pancake2(_), GeomObject::Pancake2(_)) => EdgeClass::Pancakes,
        _ => unreachable!("checked by check_pi2"),
    }
}

fn spine_len(o: &GeomObject) -> f64 {
    match o {
        GeomObject::Pancake2(p) => p.spine_len(),
        _ => unreachable!("pancake edges only"),
    }
}

/// The ordering `Λ1 Λ2 Λ3`:
/// lens edges by non-increasing length, then the remaining disk–pancake
/// edges, then pancake–pancake edges with smaller pancakes first (keyed by
/// the shorter spine, then the longer one). Ties go to the smaller index
/// pair.
///
/// The pancake key makes sure that for any pancake `w` strictly inside an
/// endpoint of `{u, v}` and adjacent to both, one of `{w, u}`, `{w, v}`
/// comes first, so `w` has left the neighbourhood by the time `{u, v}` is
/// reached.
pub fn geometric_cneeo_ordering(objects: &[GeomObject], tol: Tolerance) -> Result<EdgeOrdering, CneeoError> {
    check_pi2(objects)?;
    let mut lens = Vec::new();
    let mut mixed = Vec::new();
    let mut pancakes = Vec::new();
    for i in 0..objects.len() {
        for j in i + 1..objects.len() {
            if !intersects(&objects[i], &objects[j], tol) {
                continue;
            }
            match classify(&objects[i], &objects[j], tol) {
                EdgeClass::Lens(len) => lens.push((len, (i, j))),
                EdgeClass::DiskPancake => mixed.push((i, j)),
                EdgeClass::Pancakes => {
                    let (a, b) = (spine_len(&objects[i]), spine_len(&objects[j]));
                    pancakes.push((a.min(b), a.max(b), (i, j)));
                }
            }
        }
    }
    lens.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
    pancakes.sort_by(|x, y| {
        x.0.total_cmp(&y.0)
            .then(x.1.total_cmp(&y.1))
            .then(x.2.cmp(&y.2))
    });
    let edges = lens
        .into_iter()
        .map(|(_, e)| e)
        .chain(mixed)
        .chain(pancakes.into_iter().map(|(_, _, e)| e))
        .collect();
    Ok(EdgeOrdering::new(edges))
}
