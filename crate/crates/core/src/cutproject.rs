//! Planar cut-and-project sets with ten-fold symmetry: points `x` of
//! `Z[xi]` with both `x` and `x*` inside the decagon `D(n)`.
//!
//! `D(n)` has its vertices at `n xi^j`, the root directions, so the outermost
//! shell of the fragment sits on the window vertices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fragment::generate;
use crate::goldenring::{CycloInt, GoldenInt, Sign, TAU_F64};
use crate::rootsystem::GroupId;

pub const BOUNDARY_TOL: f64 = 1e-9;

/// Hard limit on the number of candidate lattice points examined.
pub const BOX_CAP: u64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecagonWindow {
    pub radius: u32,
}

impl DecagonWindow {
    pub fn new(radius: u32) -> Result<Self> {
        if radius == 0 {
            return Err(Error::InvalidArgument("decagon radius must be at least 1".into()));
        }
        Ok(DecagonWindow { radius })
    }

    pub fn vertices(&self) -> [CycloInt; 10] {
        let n = GoldenInt::int(self.radius as i64);
        std::array::from_fn(|j| CycloInt::xi_pow(j as i64).scale(n))
    }

    /// Exact: `x` is on the inner side of all ten edges (boundary included).
    pub fn contains_exact(&self, x: CycloInt) -> bool {
        let v = self.vertices();
        (0..10).all(|j| {
            let edge = v[(j + 1) % 10] - v[j];
            (edge.complex_conj() * (x - v[j])).im_sign() != Sign::Negative
        })
    }

    /// Float test first; candidates within `BOUNDARY_TOL` of an edge are
    /// decided exactly.
    pub fn contains(&self, x: CycloInt) -> bool {
        match edge_margin(x.embed(), self.radius) {
            m if m > BOUNDARY_TOL => true,
            m if m < -BOUNDARY_TOL => false,
            _ => self.contains_exact(x),
        }
    }
}

/// Smallest signed distance from `p` to the edge lines of `D(n)`, positive
/// inside.
fn edge_margin(p: (f64, f64), n: u32) -> f64 {
    let n = n as f64;
    (0..10)
        .map(|j| {
            let (a0, a1) = (j as f64 * std::f64::consts::PI / 5.0, (j + 1) as f64 * std::f64::consts::PI / 5.0);
            let (x0, y0) = (n * a0.cos(), n * a0.sin());
            let (ex, ey) = (n * a1.cos() - x0, n * a1.sin() - y0);
            (ex * (p.1 - y0) - ey * (p.0 - x0)) / (ex * ex + ey * ey).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Point-in-decagon for a point given as `(re, im)`; the boundary counts as
/// inside within `tol`.
pub fn decagon_contains(p: (f64, f64), n: u32, tol: f64) -> bool {
    edge_margin(p, n) >= -tol
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutProjectSet2D {
    pub n: u32,
    /// Sorted by `CycloInt::canonical_key`.
    pub points: Vec<CycloInt>,
}

impl CutProjectSet2D {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: CycloInt) -> bool {
        self.points
            .binary_search_by_key(&x.canonical_key(), CycloInt::canonical_key)
            .is_ok()
    }
}

fn sort_canonical(points: &mut [CycloInt]) {
    points.sort_by_key(CycloInt::canonical_key);
}

/// Bounds on `|c1|`, `|c2|` for `c = c1 + c2 tau` given `|c| <= r` and
/// `|c'| <= r'`, from `sqrt5 c2 = c - c'` and `sqrt5 c1 = tau c' - tau' c`.
fn coefficient_bounds(r: f64, r_conj: f64) -> (i64, i64) {
    let s5 = 5f64.sqrt();
    let c1 = (TAU_F64 * r_conj + (TAU_F64 - 1.0) * r) / s5;
    let c2 = (r + r_conj) / s5;
    (c1.ceil() as i64 + 1, c2.ceil() as i64 + 1)
}

/// `Sigma(D(n)) ∩ D(n)`.
///
/// For `x = p + q xi` one has `Im x = q sin 36°` and
/// `x* = p' + q' xi^7` with `Im xi^7 = -sin 72°`, which bounds `q`, `q'`;
/// the real parts then bound `p`, `p'`.
pub fn sigma_2d(n: u32) -> Result<CutProjectSet2D> {
    let window = DecagonWindow::new(n)?;
    let nf = n as f64;
    let deg = std::f64::consts::PI / 180.0;
    let q_max = nf / (36.0 * deg).sin();
    let q_conj_max = nf / (72.0 * deg).sin();
    let p_max = nf + q_max * (36.0 * deg).cos();
    let p_conj_max = nf + q_conj_max * (72.0 * deg).cos();
    let (q1b, q2b) = coefficient_bounds(q_max, q_conj_max);
    let (p1b, p2b) = coefficient_bounds(p_max, p_conj_max);
    let size = [p1b, p2b, q1b, q2b]
        .iter()
        .map(|&b| 2 * b as u64 + 1)
        .product::<u64>();
    if size > BOX_CAP {
        return Err(Error::ResourceLimit {
            count: size as usize,
            cap: BOX_CAP as usize,
        });
    }
    let mut points: Vec<CycloInt> = (-q1b..=q1b)
        .into_par_iter()
        .flat_map_iter(|q1| {
            let mut slab = Vec::new();
            for q2 in -q2b..=q2b {
                let q = GoldenInt::new(q1, q2);
                for p1 in -p1b..=p1b {
                    for p2 in -p2b..=p2b {
                        let x = CycloInt::new(GoldenInt::new(p1, p2), q);
                        if window.contains(x) && window.contains(x.star()) {
                            slab.push(x);
                        }
                    }
                }
            }
            slab
        })
        .collect();
    sort_canonical(&mut points);
    Ok(CutProjectSet2D { n, points })
}

/// Points of `Sigma(D(n)) ∩ D(n)` missing from the fragment `Q2(n)`.
pub fn deficiencies_2d(n: u32) -> Result<Vec<CycloInt>> {
    let sigma = sigma_2d(n)?;
    let mut fragment = generate(GroupId::H2, n)?.to_cyclo()?;
    sort_canonical(&mut fragment);
    let keys: Vec<[i64; 4]> = fragment.iter().map(CycloInt::canonical_key).collect();
    Ok(sigma
        .points
        .into_iter()
        .filter(|x| keys.binary_search(&x.canonical_key()).is_err())
        .collect())
}

/// Smallest squared distance between two distinct points, exact.
pub fn min_distance_sq(points: &[CycloInt]) -> Option<GoldenInt> {
    (0..points.len())
        .into_par_iter()
        .filter_map(|i| {
            points[i + 1..]
                .iter()
                .map(|&y| (points[i] - y).abs_sq())
                .min()
        })
        .min()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinDistance2D {
    pub n: u32,
    pub d_fragment: f64,
    pub d_sigma: f64,
    pub ok: bool,
}

/// Nearest-neighbour distance in `Q2(n)` against `Sigma(D(n)) ∩ D(n)`.
/// Compared exactly on squared distances; the floats are for reporting.
pub fn min_distance_compare_2d(n: u32) -> Result<MinDistance2D> {
    let fragment = generate(GroupId::H2, n)?.to_cyclo()?;
    let sigma = sigma_2d(n)?;
    let df = min_distance_sq(&fragment)
        .ok_or_else(|| Error::InvalidArgument("fragment has a single point".into()))?;
    let ds = min_distance_sq(&sigma.points).expect("sigma contains the fragment");
    Ok(MinDistance2D {
        n,
        d_fragment: df.to_f64().sqrt(),
        d_sigma: ds.to_f64().sqrt(),
        ok: df >= ds,
    })
}
