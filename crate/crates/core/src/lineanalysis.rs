//! The real-axis section of the planar fragment: line sets `L(n)`, their
//! closed form, levels, the one-dimensional cut-and-project comparison, and
//! the splitting of planar points along `xi^0` and `xi^1`.
//!
//! A value `u + v tau` on the axis through `xi^0` lies in `L(n)` iff it can
//! be written as `(a + c) + (b - c) tau` with `|a| + 2|b| + 2|c| <= n`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fragment::Fragment;
use crate::goldenring::{CycloInt, GoldenInt, TAU_F64};
use crate::rootsystem::GroupId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSet {
    pub n: u32,
    /// Sorted by real value.
    pub values: Vec<GoldenInt>,
}

impl LineSet {
    fn from_unsorted(n: u32, values: impl IntoIterator<Item = GoldenInt>) -> Self {
        let mut values: Vec<GoldenInt> = values.into_iter().collect();
        values.sort();
        values.dedup();
        LineSet { n, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, x: GoldenInt) -> bool {
        self.values.binary_search(&x).is_ok()
    }
}

/// Closed interval with bounds in `Z[tau]`, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window1D {
    pub lo: GoldenInt,
    pub hi: GoldenInt,
}

impl Window1D {
    pub fn new(lo: GoldenInt, hi: GoldenInt) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Window1D { lo, hi })
    }

    /// `[-n, n]`.
    pub fn symmetric(n: i64) -> Self {
        let n = GoldenInt::int(n.abs());
        Window1D { lo: -n, hi: n }
    }

    pub fn contains(&self, x: GoldenInt) -> bool {
        self.lo <= x && x <= self.hi
    }

    fn max_abs(&self) -> f64 {
        self.lo.to_f64().abs().max(self.hi.to_f64().abs())
    }
}

fn cost(u: i64, v: i64, c: i64) -> u64 {
    (u - c).unsigned_abs() + 2 * (v + c).unsigned_abs() + 2 * c.unsigned_abs()
}

/// `(cost, c)` minimizing `|u - c| + 2|v + c| + 2|c|`. The function is
/// piecewise linear with breakpoints `u`, `-v` and `0`; ties go to the
/// smaller `|c|`.
fn best_split(u: i64, v: i64) -> (u64, i64) {
    [0, u, -v]
        .into_iter()
        .map(|c| (cost(u, v, c), c))
        .min_by_key(|&(k, c)| (k, c.unsigned_abs(), c))
        .expect("three candidates")
}

/// Smallest `n` with `x` in `L(n)`.
pub fn line_level(x: GoldenInt) -> u64 {
    best_split(x.a, x.b).0
}

pub fn line_closed_form(n: u32) -> LineSet {
    let n = n as i64;
    let mut out = Vec::new();
    for b in -(n / 2)..=n / 2 {
        let rb = n - 2 * b.abs();
        for c in -(rb / 2)..=rb / 2 {
            let ra = rb - 2 * c.abs();
            for a in -ra..=ra {
                out.push(GoldenInt::new(a + c, b - c));
            }
        }
    }
    LineSet::from_unsorted(n as u32, out)
}

fn collect_real_sums(
    start: usize,
    budget: u32,
    acc: CycloInt,
    powers: &[CycloInt; 10],
    out: &mut HashSet<GoldenInt>,
) {
    if acc.is_real() {
        out.insert(acc.p);
    }
    if budget == 0 {
        return;
    }
    for j in start..10 {
        collect_real_sums(j, budget - 1, acc + powers[j], powers, out);
    }
}

/// Every multiset of at most `n` tenth roots of unity whose sum is real.
pub fn line_bruteforce(n: u32) -> LineSet {
    let powers: [CycloInt; 10] = std::array::from_fn(|j| CycloInt::xi_pow(j as i64));
    // split on the multiplicity of xi^0 so the work fans out
    let parts: Vec<HashSet<GoldenInt>> = (0..=n)
        .into_par_iter()
        .map(|k0| {
            let mut out = HashSet::new();
            let acc = CycloInt::real(GoldenInt::int(k0 as i64));
            collect_real_sums(1, n - k0, acc, &powers, &mut out);
            out
        })
        .collect();
    LineSet::from_unsorted(n, parts.into_iter().flatten())
}

/// `(m, new points at level m)` for `m = 0..=n`.
pub fn levels(n: u32) -> Vec<(u32, Vec<GoldenInt>)> {
    let mut prev: Option<LineSet> = None;
    (0..=n)
        .map(|m| {
            let cur = line_closed_form(m);
            let fresh = cur
                .values
                .iter()
                .copied()
                .filter(|&x| prev.as_ref().is_none_or(|p| !p.contains(x)))
                .collect();
            prev = Some(cur);
            (m, fresh)
        })
        .collect()
}

/// The real-axis points of an `H2` fragment.
pub fn line_from_fragment(f: &Fragment) -> Result<LineSet> {
    if f.group != GroupId::H2 {
        return Err(Error::UnsupportedGroup {
            group: f.group,
            reason: "line sections are taken in the plane",
        });
    }
    let cyclo = f.to_cyclo()?;
    Ok(LineSet::from_unsorted(
        f.n,
        cyclo.into_iter().filter(CycloInt::is_real).map(|x| x.p),
    ))
}

/// `{x in Z[tau] : x in region, x' in window}`.
///
/// With `x = x1 + tau x2` one has `sqrt5 x2 = x - x'` and
/// `sqrt5 x1 = tau x' - tau' x`, which bounds the search box.
pub fn sigma_1d(window: Window1D, region: Window1D) -> Vec<GoldenInt> {
    let r = region.max_abs();
    let w = window.max_abs();
    let s5 = 5f64.sqrt();
    let b2 = ((r + w) / s5).ceil() as i64 + 1;
    let b1 = ((TAU_F64 * w + (TAU_F64 - 1.0) * r) / s5).ceil() as i64 + 1;
    let mut out: Vec<GoldenInt> = (-b1..=b1)
        .flat_map(|x1| (-b2..=b2).map(move |x2| GoldenInt::new(x1, x2)))
        .filter(|&x| region.contains(x) && window.contains(x.conj()))
        .collect();
    out.sort();
    out
}

/// `Sigma([-n, n]) ∩ [-n, n]` minus `L(n)`.
pub fn deficiencies_1d(n: u32) -> Vec<GoldenInt> {
    let w = Window1D::symmetric(n as i64);
    let line = line_closed_form(n);
    sigma_1d(w, w)
        .into_iter()
        .filter(|&x| !line.contains(x))
        .collect()
}

/// `(M_n, N_n)`: `M_n = floor(n / 2)` and `N_n = floor((2n - 1) / sqrt5)`.
pub fn mn_nn(n: u32) -> Result<(i64, i64)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let m = n as i64 / 2;
    let t = (2 * n as i128 - 1).pow(2);
    let mut k: i64 = ((t as f64 / 5.0).sqrt()) as i64 + 1;
    while 5 * (k as i128).pow(2) > t {
        k -= 1;
    }
    Ok((m, k))
}

/// Witness `(beta_0, ..., beta_4)` for a point `sum beta_j xi^j`.
pub type Witness = [i64; 5];

pub fn witness_value(beta: &Witness) -> CycloInt {
    beta.iter()
        .enumerate()
        .map(|(j, &b)| CycloInt::xi_pow(j as i64).scale(GoldenInt::int(b)))
        .sum()
}

/// For every point of `Q2(n)` (as sums of at most `n` tenth roots of unity)
/// a witness reached with the fewest roots.
pub fn rootsum_witnesses(n: u32) -> HashMap<CycloInt, Witness> {
    let mut out: HashMap<CycloInt, Witness> = HashMap::from([(CycloInt::ZERO, [0; 5])]);
    let mut frontier = vec![(CycloInt::ZERO, [0i64; 5])];
    for _ in 0..n {
        let mut next = Vec::new();
        for (x, beta) in &frontier {
            for j in 0..10 {
                let y = *x + CycloInt::xi_pow(j);
                if out.contains_key(&y) {
                    continue;
                }
                let mut b = *beta;
                if j < 5 {
                    b[j as usize] += 1;
                } else {
                    b[j as usize - 5] -= 1;
                }
                out.insert(y, b);
                next.push((y, b));
            }
        }
        frontier = next;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    /// `x = y xi^k + z xi^(k+1)`; `k = 0` for the plain split.
    pub sector: u32,
    pub y: GoldenInt,
    pub z: GoldenInt,
    pub c1: i64,
    pub c2: i64,
    /// Levels of `y` and `z`.
    pub f: u64,
    pub g: u64,
}

/// Splits `x = y + z xi` with `y`, `z` on the lines through `xi^0` and
/// `xi^1`, both at level at most `n`.
///
/// `beta` must represent `x` with `sum |beta_j| <= n`. With
/// `A = beta0 - beta2`, `B = beta3 + beta4`, `C = beta1 + beta4`,
/// `D = beta2 + beta3` one has `y = A - tau B` and `z = C + tau D`; the
/// levels are the minima of `f(c) = |A - c| + 2|c - B| + 2|c|` and
/// `g(c) = |C - c| + 2|c + D| + 2|c|`.
pub fn decompose(x: CycloInt, beta: &Witness, n: u32) -> Result<Decomposition> {
    let weight: u64 = beta.iter().map(|b| b.unsigned_abs()).sum();
    if witness_value(beta) != x || weight > n as u64 {
        return Err(Error::InvalidWitness { witness: *beta, n });
    }
    let a = beta[0] - beta[2];
    let b = beta[3] + beta[4];
    let c = beta[1] + beta[4];
    let d = beta[2] + beta[3];
    let y = GoldenInt::new(a, -b);
    let z = GoldenInt::new(c, d);
    debug_assert_eq!(CycloInt::new(y, z), x);
    let (f, c1) = best_split(a, -b);
    let (g, c2) = best_split(c, d);
    if f > n as u64 || g > n as u64 {
        return Err(Error::DecompositionBound { f, g, n });
    }
    Ok(Decomposition {
        sector: 0,
        y,
        z,
        c1,
        c2,
        f,
        g,
    })
}

/// Smallest `k` with `x` in the closed cone spanned by `xi^k` and `xi^(k+1)`.
pub fn sector_of(x: CycloInt) -> u32 {
    (0..10)
        .find(|&k| {
            let r = x * CycloInt::xi_pow(-(k as i64));
            !r.p.is_negative() && !r.q.is_negative()
        })
        .expect("the ten cones cover the plane")
}

/// `beta` for `x xi^-k`, from the witness of `x`.
fn rotate_witness(beta: &Witness, k: u32) -> Witness {
    let mut counts = [0i64; 10];
    for (j, &b) in beta.iter().enumerate() {
        if b >= 0 {
            counts[j] += b;
        } else {
            counts[j + 5] -= b;
        }
    }
    let mut out = [0i64; 5];
    for (j, &m) in counts.iter().enumerate() {
        let r = (j + 10 - k as usize) % 10;
        if r < 5 {
            out[r] += m;
        } else {
            out[r - 5] -= m;
        }
    }
    out
}

/// Splits `x` along the two roots bounding its own sector: rotate into the
/// cone between `xi^0` and `xi^1`, split there, report `k`.
pub fn decompose_in_sector(x: CycloInt, beta: &Witness, n: u32) -> Result<Decomposition> {
    let weight: u64 = beta.iter().map(|b| b.unsigned_abs()).sum();
    if witness_value(beta) != x || weight > n as u64 {
        return Err(Error::InvalidWitness { witness: *beta, n });
    }
    let k = sector_of(x);
    let rotated = x * CycloInt::xi_pow(-(k as i64));
    let d = decompose(rotated, &rotate_witness(beta, k), n)?;
    Ok(Decomposition { sector: k, ..d })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingReport {
    pub n: u32,
    pub tau_scaling: bool,
    pub repetitivity: bool,
    pub pairs_checked: usize,
}

impl ScalingReport {
    pub fn ok(&self) -> bool {
        self.tau_scaling && self.repetitivity
    }
}

/// `tau L(n) ⊆ L(2n)`, and `L(r) + L(s) ⊆ L(r + s)` for all `r + s <= n`,
/// both exhaustively.
pub fn scaling_check(n: u32) -> ScalingReport {
    let line = line_closed_form(n);
    let tau_scaling = line
        .values
        .iter()
        .all(|&x| line_level(x * GoldenInt::TAU) <= 2 * n as u64);
    let sets: Vec<LineSet> = (0..=n).map(line_closed_form).collect();
    let mut pairs_checked = 0;
    let mut repetitivity = true;
    for r in 0..=n {
        for s in 0..=n - r {
            for &p in &sets[r as usize].values {
                for &x in &sets[s as usize].values {
                    pairs_checked += 1;
                    repetitivity &= line_level(p + x) <= (r + s) as u64;
                }
            }
        }
    }
    ScalingReport {
        n,
        tau_scaling,
        repetitivity,
        pairs_checked,
    }
}

/// Smallest gap between distinct points, exact.
pub fn min_gap(sorted: &[GoldenInt]) -> Option<GoldenInt> {
    sorted.windows(2).map(|w| w[1] - w[0]).min()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinDistance {
    pub n: u32,
    pub d_line: f64,
    pub d_sigma: f64,
    pub ok: bool,
}

/// Minimal distance in `L(n)` against `Sigma([-n, n]) ∩ [-n, n]`. The
/// comparison is exact; the floats are for reporting.
pub fn min_distance_compare(n: u32) -> Result<MinDistance> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let w = Window1D::symmetric(n as i64);
    let line = min_gap(&line_closed_form(n).values).expect("L(n) has two points");
    let sigma = min_gap(&sigma_1d(w, w)).expect("window has two points");
    Ok(MinDistance {
        n,
        d_line: line.to_f64(),
        d_sigma: sigma.to_f64(),
        ok: line >= sigma,
    })
}
