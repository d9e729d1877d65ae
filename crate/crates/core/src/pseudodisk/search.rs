//! Small derivative-free optimizers and lens helpers used by the case
//! classification. All searches start from a grid, so they find the
//! global optimum whenever the grid resolves the basin containing it.

use std::f64::consts::TAU;

use crate::geometry::{circle_crossings, lens_witness, Circle, Point2};

const GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Minimum of a unimodal `f` on `[a, b]`.
pub(crate) fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > tol {
        if f1 > f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = f(x1);
        }
    }
    let x = (a + b) / 2.0;
    (x, f(x))
}

/// Global minimum of a continuous `2π`-periodic function: grid scan, then
/// golden refinement around every grid-local minimum.
pub(crate) fn min_on_circle(f: impl Fn(f64) -> f64, samples: usize) -> (f64, f64) {
    let step = TAU / samples as f64;
    let vals: Vec<f64> = (0..samples).map(|k| f(k as f64 * step)).collect();
    let mut best = (0.0, f64::INFINITY);
    for k in 0..samples {
        let (prev, cur, next) = (vals[(k + samples - 1) % samples], vals[k], vals[(k + 1) % samples]);
        if cur <= prev && cur <= next {
            let c = k as f64 * step;
            let (x, v) = golden_min(&f, c - step, c + step, 1e-13);
            let cand = if v <= cur { (x, v) } else { (c, cur) };
            if cand.1 < best.1 {
                best = cand;
            }
        }
    }
    (best.0.rem_euclid(TAU), best.1)
}

/// One coordinate of a 2D search box.
#[derive(Clone, Copy)]
pub(crate) struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub periodic: bool,
}

impl Axis {
    pub(crate) fn angle() -> Self {
        Axis {
            lo: 0.0,
            hi: TAU,
            periodic: true,
        }
    }

    pub(crate) fn unit() -> Self {
        Axis {
            lo: 0.0,
            hi: 1.0,
            periodic: false,
        }
    }

    fn fit(&self, x: f64) -> f64 {
        if self.periodic {
            self.lo + (x - self.lo).rem_euclid(self.hi - self.lo)
        } else {
            x.clamp(self.lo, self.hi)
        }
    }

    fn grid(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        let count = if self.periodic { n } else { n + 1 };
        let step = (self.hi - self.lo) / n as f64;
        (0..count).map(move |k| self.lo + k as f64 * step)
    }
}

/// Maximum of `f` over a box: grid scan, then compass search from the
/// best few grid points.
pub(crate) fn max_on_box(
    f: impl Fn(f64, f64) -> f64,
    ax: Axis,
    ay: Axis,
    n: usize,
) -> ((f64, f64), f64) {
    let mut grid: Vec<((f64, f64), f64)> = ax
        .grid(n)
        .flat_map(|x| ay.grid(n).map(move |y| (x, y)))
        .map(|(x, y)| ((x, y), f(x, y)))
        .collect();
    grid.sort_by(|a, b| b.1.total_cmp(&a.1));
    let mut best = grid[0];
    for &(start, v0) in grid.iter().take(6) {
        let ((x, y), v) = compass(&f, ax, ay, start, v0, n);
        if v > best.1 {
            best = ((x, y), v);
        }
    }
    best
}

fn compass(
    f: &impl Fn(f64, f64) -> f64,
    ax: Axis,
    ay: Axis,
    (mut x, mut y): (f64, f64),
    mut v: f64,
    n: usize,
) -> ((f64, f64), f64) {
    let mut sx = (ax.hi - ax.lo) / n as f64;
    let mut sy = (ay.hi - ay.lo) / n as f64;
    let floor = 1e-14 * (ax.hi - ax.lo).max(ay.hi - ay.lo);
    for _ in 0..2000 {
        if sx.max(sy) < floor {
            break;
        }
        let moves = [(sx, 0.0), (-sx, 0.0), (0.0, sy), (0.0, -sy), (sx, sy), (-sx, -sy), (sx, -sy), (-sx, sy)];
        let mut improved = false;
        for (dx, dy) in moves {
            let (nx, ny) = (ax.fit(x + dx), ay.fit(y + dy));
            let nv = f(nx, ny);
            if nv > v {
                (x, y, v) = (nx, ny, nv);
                improved = true;
                break;
            }
        }
        if !improved {
            sx /= 2.0;
            sy /= 2.0;
        }
    }
    ((x, y), v)
}

/// Where the ray `origin + t·v` (`t ≥ 0`, `origin` inside) leaves the disk.
fn exit_time(c: &Circle, origin: Point2, v: Point2) -> f64 {
    let w = origin - c.center;
    let b = w.dot(v);
    let disc = (b * b - (w.norm_sq() - c.radius * c.radius)).max(0.0);
    -b + disc.sqrt()
}

/// The lens `a ∩ b` of two intersecting disks.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Lens {
    pub a: Circle,
    pub b: Circle,
    pub inner: Point2,
}

impl Lens {
    pub(crate) fn new(a: Circle, b: Circle) -> Option<Lens> {
        let inner = lens_witness(&a, &b).ok()?;
        Some(Lens { a, b, inner })
    }

    /// Boundary point seen from the inner point in direction `phi`.
    pub(crate) fn boundary(&self, phi: f64) -> Point2 {
        let v = Point2::from_angle(phi);
        let t = exit_time(&self.a, self.inner, v).min(exit_time(&self.b, self.inner, v));
        self.inner + v * t.max(0.0)
    }

    /// Point of the lens at polar parameters `(phi, rho)`, `rho ∈ [0, 1]`.
    pub(crate) fn at(&self, phi: f64, rho: f64) -> Point2 {
        self.inner.lerp(self.boundary(phi), rho)
    }

    /// Support value and point in the unit direction `u`.
    pub(crate) fn support(&self, u: Point2) -> (f64, Point2) {
        let mut cands = Vec::with_capacity(4);
        let pa = self.a.center + u * self.a.radius;
        let pb = self.b.center + u * self.b.radius;
        if self.b.contains_point(pa, 1e-12) {
            cands.push(pa);
        }
        if self.a.contains_point(pb, 1e-12) {
            cands.push(pb);
        }
        if let Some((x, y)) = circle_crossings(&self.a, &self.b) {
            cands.push(x);
            cands.push(y);
        }
        if cands.is_empty() {
            cands.push(self.inner);
        }
        cands
            .into_iter()
            .map(|p| (u.dot(p), p))
            .max_by(|x, y| x.0.total_cmp(&y.0))
            .expect("non-empty")
    }
}
