//! The object sets that the geometric ordering's correctness argument
//! proves cobipartite, computed directly from a representation so they
//! can be checked on their own.
//!
//! Each function returns indices into `objects`, excluding the anchoring
//! objects themselves.

use crate::geometry::{distance, intersects, is_lens, GeomObject, Pancake2, Tolerance, UnitDisk};

fn as_disk(o: &GeomObject) -> Option<&UnitDisk> {
    match o {
        GeomObject::UnitDisk(d) => Some(d),
        _ => None,
    }
}

fn as_pancake(o: &GeomObject) -> Option<&Pancake2> {
    match o {
        GeomObject::Pancake2(p) => Some(p),
        _ => None,
    }
}

fn meets_all(objects: &[GeomObject], k: usize, anchors: &[usize], tol: Tolerance) -> bool {
    !anchors.contains(&k) && anchors.iter().all(|&a| intersects(&objects[k], &objects[a], tol))
}

fn dist(objects: &[GeomObject], a: usize, b: usize) -> f64 {
    distance(&objects[a], &objects[b]).expect("unit disks and pancakes")
}

/// For a disk `d` and a pancake `p` meeting it in a lens: disks meeting
/// both that are no farther from `d` than `p` is (and no farther from `p`
/// when `p` meets them in a lens too), plus pancakes meeting both that are
/// no farther from `d` when they meet `d` in a lens.
///
/// Returns `None` when `(d, p)` is not a disk and a pancake in a lens.
pub fn lens_pair_candidates(objects: &[GeomObject], d: usize, p: usize, tol: Tolerance) -> Option<Vec<usize>> {
    let disk = as_disk(&objects[d])?;
    let pan = as_pancake(&objects[p])?;
    if !intersects(&objects[d], &objects[p], tol) || !is_lens(disk, pan, tol) {
        return None;
    }
    let rho = dist(objects, d, p);
    let keep = |k: usize| -> bool {
        if !meets_all(objects, k, &[d, p], tol) {
            return false;
        }
        match &objects[k] {
            GeomObject::UnitDisk(di) => {
                dist(objects, d, k) <= rho && (!is_lens(di, pan, tol) || dist(objects, k, p) <= rho)
            }
            GeomObject::Pancake2(pj) => !is_lens(disk, pj, tol) || dist(objects, d, k) <= rho,
            _ => false,
        }
    };
    Some((0..objects.len()).filter(|&k| keep(k)).collect())
}

/// For two intersecting disks at distance `ρ`: disks meeting both within
/// distance `ρ` of each, plus pancakes meeting both whose lens distances
/// (where they form lenses) are at most `ρ`.
pub fn disk_pair_candidates(objects: &[GeomObject], d: usize, e: usize, tol: Tolerance) -> Option<Vec<usize>> {
    let da = as_disk(&objects[d])?;
    let db = as_disk(&objects[e])?;
    if !intersects(&objects[d], &objects[e], tol) {
        return None;
    }
    let rho = dist(objects, d, e);
    let keep = |k: usize| -> bool {
        if !meets_all(objects, k, &[d, e], tol) {
            return false;
        }
        match &objects[k] {
            GeomObject::UnitDisk(_) => dist(objects, d, k) <= rho && dist(objects, e, k) <= rho,
            GeomObject::Pancake2(pj) => {
                (!is_lens(da, pj, tol) || dist(objects, d, k) <= rho)
                    && (!is_lens(db, pj, tol) || dist(objects, e, k) <= rho)
            }
            _ => false,
        }
    };
    Some((0..objects.len()).filter(|&k| keep(k)).collect())
}

/// All pancakes meeting disk `d`.
pub fn pancakes_meeting_disk(objects: &[GeomObject], d: usize, tol: Tolerance) -> Option<Vec<usize>> {
    as_disk(&objects[d])?;
    Some(
        (0..objects.len())
            .filter(|&k| as_pancake(&objects[k]).is_some() && meets_all(objects, k, &[d], tol))
            .collect(),
    )
}

/// For two intersecting pancakes: the pancakes meeting both that are
/// contained in neither.
pub fn pancake_pair_candidates(objects: &[GeomObject], p: usize, q: usize, tol: Tolerance) -> Option<Vec<usize>> {
    let pa = as_pancake(&objects[p])?;
    let pb = as_pancake(&objects[q])?;
    if !intersects(&objects[p], &objects[q], tol) {
        return None;
    }
    Some(
        (0..objects.len())
            .filter(|&k| match as_pancake(&objects[k]) {
                Some(pk) => {
                    meets_all(objects, k, &[p, q], tol)
                        && !pa.contains_pancake(pk)
                        && !pb.contains_pancake(pk)
                }
                None => false,
            })
            .collect(),
    )
}
