//! Root systems of `A2`, `H2`, `H3`, `H4`: Cartan matrices, simple roots in the
//! omega (fundamental weight) basis, basis changes, norms and Cartesian models.
//!
//! Conventions: roots of the H-groups have length one, `2(alpha_j|omega_k) =
//! delta_jk`, so `alpha_j = sum_k a_jk omega_k` and `(v|v) = 1/2 v^T A^-1 v`
//! for `v` in omega coordinates. `A2` is handled with the same conventions
//! (Cartan data does not depend on normalization).

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::goldenring::{CycloInt, GoldenInt, GoldenRational, TAU_F64};
use crate::linalg::GoldenMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    A2,
    H2,
    H3,
    H4,
}

impl GroupId {
    pub const ALL: [GroupId; 4] = [GroupId::A2, GroupId::H2, GroupId::H3, GroupId::H4];
    pub const NONCRYSTALLOGRAPHIC: [GroupId; 3] = [GroupId::H2, GroupId::H3, GroupId::H4];

    pub fn rank(self) -> usize {
        match self {
            GroupId::A2 | GroupId::H2 => 2,
            GroupId::H3 => 3,
            GroupId::H4 => 4,
        }
    }

    /// Order of the finite reflection group.
    pub fn order(self) -> usize {
        match self {
            GroupId::A2 => 6,
            GroupId::H2 => 10,
            GroupId::H3 => 120,
            GroupId::H4 => 14_400,
        }
    }

    pub fn root_count(self) -> usize {
        match self {
            GroupId::A2 => 6,
            GroupId::H2 => 10,
            GroupId::H3 => 30,
            GroupId::H4 => 120,
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupId::A2 => "a2",
            GroupId::H2 => "h2",
            GroupId::H3 => "h3",
            GroupId::H4 => "h4",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a2" => Ok(GroupId::A2),
            "h2" => Ok(GroupId::H2),
            "h3" => Ok(GroupId::H3),
            "h4" => Ok(GroupId::H4),
            _ => Err(Error::InvalidArgument(format!("unknown group {s:?}"))),
        }
    }
}

/// Ordinary (`extended = false`) or extended Cartan matrix of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub group: GroupId,
    pub extended: bool,
    pub entries: GoldenMatrix,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.entries.size()
    }

    pub fn get(&self, i: usize, j: usize) -> GoldenInt {
        self.entries[(i, j)]
    }
}

fn orders_coords(a: &[GoldenInt], b: &[GoldenInt]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.a, x.b).cmp(&(y.a, y.b)))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

/// A point with exact coordinates in the omega basis.
///
/// `Ord` is the canonical order: group, then lexicographic on the flattened
/// integer tuple `(a1, b1, a2, b2, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaVector {
    pub group: GroupId,
    pub coords: Vec<GoldenInt>,
}

impl OmegaVector {
    pub fn new(group: GroupId, coords: Vec<GoldenInt>) -> Self {
        assert_eq!(coords.len(), group.rank(), "wrong rank for {group}");
        OmegaVector { group, coords }
    }

    pub fn zero(group: GroupId) -> Self {
        OmegaVector::new(group, vec![GoldenInt::ZERO; group.rank()])
    }

    pub fn from_ints(group: GroupId, pairs: &[(i64, i64)]) -> Self {
        OmegaVector::new(
            group,
            pairs.iter().map(|&(a, b)| GoldenInt::new(a, b)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// All omega coordinates are non-negative.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn canonical_key(&self) -> Vec<i64> {
        self.coords.iter().flat_map(|c| [c.a, c.b]).collect()
    }

    pub fn scale(&self, k: GoldenInt) -> Self {
        OmegaVector::new(self.group, self.coords.iter().map(|&c| c * k).collect())
    }

    pub fn add(&self, other: &OmegaVector) -> Self {
        assert_eq!(self.group, other.group);
        OmegaVector::new(
            self.group,
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&x, &y)| x + y)
                .collect(),
        )
    }
}

impl PartialOrd for OmegaVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OmegaVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .cmp(&other.group)
            .then_with(|| orders_coords(&self.coords, &other.coords))
    }
}

impl fmt::Display for OmegaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A vector given by its coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaVector {
    pub group: GroupId,
    pub coords: Vec<GoldenInt>,
}

impl AlphaVector {
    pub fn new(group: GroupId, coords: Vec<GoldenInt>) -> Self {
        assert_eq!(coords.len(), group.rank(), "wrong rank for {group}");
        AlphaVector { group, coords }
    }

    pub fn from_ints(group: GroupId, pairs: &[(i64, i64)]) -> Self {
        AlphaVector::new(
            group,
            pairs.iter().map(|&(a, b)| GoldenInt::new(a, b)).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        AlphaVector::new(self.group, self.coords.iter().map(|&c| -c).collect())
    }

    pub fn to_omega(&self) -> OmegaVector {
        omega_from_alpha(self)
    }
}

impl PartialOrd for AlphaVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlphaVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .cmp(&other.group)
            .then_with(|| orders_coords(&self.coords, &other.coords))
    }
}

const MINUS_TAU: GoldenInt = GoldenInt::new(0, -1);

/// Cartan matrix of the finite group.
pub fn cartan(group: GroupId) -> CartanMatrix {
    let two = GoldenInt::int(2);
    let m1 = GoldenInt::int(-1);
    let z = GoldenInt::ZERO;
    let rows = match group {
        GroupId::A2 => vec![vec![two, m1], vec![m1, two]],
        GroupId::H2 => vec![vec![two, MINUS_TAU], vec![MINUS_TAU, two]],
        GroupId::H3 => vec![
            vec![two, m1, z],
            vec![m1, two, MINUS_TAU],
            vec![z, MINUS_TAU, two],
        ],
        GroupId::H4 => vec![
            vec![two, m1, z, z],
            vec![m1, two, m1, z],
            vec![z, m1, two, MINUS_TAU],
            vec![z, z, MINUS_TAU, two],
        ],
    };
    CartanMatrix {
        group,
        extended: false,
        entries: GoldenMatrix::from_rows(&rows),
    }
}

/// Exact inverse of the Cartan matrix, `adj(A) det(A)' / N(det A)`.
pub fn cartan_inverse(group: GroupId) -> Vec<Vec<GoldenRational>> {
    static CACHE: [OnceLock<Vec<Vec<GoldenRational>>>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[group.index()]
        .get_or_init(|| {
            let a = cartan(group).entries;
            let det = a.det();
            let norm = i64::try_from(det.norm()).expect("Cartan determinant norm fits i64");
            let adj = a.adjugate();
            let n = a.size();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| GoldenRational::new(adj[(i, j)] * det.conj(), norm))
                        .collect()
                })
                .collect()
        })
        .clone()
}

/// Omega coordinates of the simple root `alpha_j`: row `j` of the Cartan matrix.
pub fn simple_root_omega(group: GroupId, j: usize) -> OmegaVector {
    OmegaVector::new(group, cartan(group).entries.row(j).to_vec())
}

/// `r_j v = v - v_j alpha_j` in place, omega coordinates.
pub fn reflect_in_place(cartan: &GoldenMatrix, v: &mut [GoldenInt], j: usize) {
    let vj = v[j];
    if vj.is_zero() {
        return;
    }
    for (k, x) in v.iter_mut().enumerate() {
        *x -= vj * cartan[(j, k)];
    }
}

pub fn omega_from_alpha(v: &AlphaVector) -> OmegaVector {
    let a = cartan(v.group).entries;
    let n = v.group.rank();
    let coords = (0..n)
        .map(|k| (0..n).map(|j| v.coords[j] * a[(j, k)]).sum())
        .collect();
    OmegaVector::new(v.group, coords)
}

/// `alpha = A^-1 v`; the result is in general only in `Z[tau] / d`.
pub fn alpha_from_omega(v: &OmegaVector) -> Vec<GoldenRational> {
    let inv = cartan_inverse(v.group);
    inv.iter()
        .map(|row| {
            row.iter()
                .zip(&v.coords)
                .map(|(&m, &x)| m * GoldenRational::from(x))
                .sum()
        })
        .collect()
}

/// Simple-root coordinates when they are all integral (e.g. for root sums).
pub fn alpha_from_omega_integral(v: &OmegaVector) -> Option<AlphaVector> {
    let coords: Option<Vec<GoldenInt>> =
        alpha_from_omega(v).iter().map(|c| c.to_golden_int()).collect();
    Some(AlphaVector::new(v.group, coords?))
}

/// `(v|v)`, exact.
pub fn norm_sq(v: &OmegaVector) -> GoldenRational {
    let alpha = alpha_from_omega(v);
    let twice: GoldenRational = alpha
        .iter()
        .zip(&v.coords)
        .map(|(&c, &x)| c * GoldenRational::from(x))
        .sum();
    twice * GoldenRational::new(GoldenInt::ONE, 2)
}

/// Scalar product `2(u|v)` with `u` in simple-root and `v` in omega coordinates.
pub fn pairing2(u: &AlphaVector, v: &OmegaVector) -> GoldenInt {
    u.coords.iter().zip(&v.coords).map(|(&a, &b)| a * b).sum()
}

/// The full root system, generated as the closure of the simple roots under
/// the simple reflections, in canonical order.
pub fn roots(group: GroupId) -> &'static [AlphaVector] {
    static CACHE: [OnceLock<Vec<AlphaVector>>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[group.index()].get_or_init(|| generate_roots(group))
}

/// Roots in omega coordinates, same order as [`roots`].
pub fn roots_omega(group: GroupId) -> &'static [OmegaVector] {
    static CACHE: [OnceLock<Vec<OmegaVector>>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[group.index()].get_or_init(|| roots(group).iter().map(omega_from_alpha).collect())
}

fn generate_roots(group: GroupId) -> Vec<AlphaVector> {
    let a = cartan(group).entries;
    let n = group.rank();
    let mut seen: HashSet<Vec<GoldenInt>> = HashSet::new();
    let mut queue: VecDeque<(Vec<GoldenInt>, Vec<GoldenInt>)> = VecDeque::new();
    for j in 0..n {
        let mut alpha = vec![GoldenInt::ZERO; n];
        alpha[j] = GoldenInt::ONE;
        let omega = a.row(j).to_vec();
        if seen.insert(alpha.clone()) {
            queue.push_back((alpha, omega));
        }
    }
    while let Some((alpha, omega)) = queue.pop_front() {
        for j in 0..n {
            let vj = omega[j];
            if vj.is_zero() {
                continue;
            }
            let mut new_alpha = alpha.clone();
            new_alpha[j] -= vj;
            if seen.contains(&new_alpha) {
                continue;
            }
            let mut new_omega = omega.clone();
            reflect_in_place(&a, &mut new_omega, j);
            seen.insert(new_alpha.clone());
            queue.push_back((new_alpha, new_omega));
        }
    }
    let mut out: Vec<AlphaVector> = seen
        .into_iter()
        .map(|c| AlphaVector::new(group, c))
        .collect();
    out.sort();
    out
}

/// The highest root: the unique root whose omega coordinates are dominant.
pub fn highest_root(group: GroupId) -> AlphaVector {
    let mut dominant = roots(group)
        .iter()
        .zip(roots_omega(group))
        .filter(|(_, w)| w.is_dominant());
    let (alpha, _) = dominant.next().expect("root system has a dominant root");
    assert!(dominant.next().is_none(), "dominant root is unique");
    alpha.clone()
}

pub fn highest_root_omega(group: GroupId) -> OmegaVector {
    omega_from_alpha(&highest_root(group))
}

/// Moves `v` into the dominant chamber by reflecting at the first negative
/// coordinate until none is left. Returns the dominant point and the indices
/// of the reflections applied, in order.
pub fn to_dominant(v: &OmegaVector) -> (OmegaVector, Vec<usize>) {
    let a = cartan(v.group).entries;
    let mut coords = v.coords.clone();
    let mut word = Vec::new();
    while let Some(j) = coords.iter().position(|c| c.is_negative()) {
        reflect_in_place(&a, &mut coords, j);
        word.push(j);
    }
    (OmegaVector::new(v.group, coords), word)
}

/// Orbit of `v` under the finite reflection group, canonically sorted.
pub fn weyl_orbit(v: &OmegaVector) -> Vec<OmegaVector> {
    let a = cartan(v.group).entries;
    let mut seen: HashSet<Vec<GoldenInt>> = HashSet::from([v.coords.clone()]);
    let mut frontier = vec![v.coords.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for j in 0..v.group.rank() {
                if p[j].is_zero() {
                    continue;
                }
                let mut q = p.clone();
                reflect_in_place(&a, &mut q, j);
                if !seen.contains(&q) {
                    seen.insert(q.clone());
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<OmegaVector> = seen
        .into_iter()
        .map(|c| OmegaVector::new(v.group, c))
        .collect();
    out.sort();
    out
}

/// Orthonormal Cartesian models of the simple roots, entries in `1/2 Z[tau]`.
///
/// `H3`: `(0,0,1)`, `1/2(-tau', -tau, -1)`, `(0,1,0)`.
/// `H4`: `1/2(-tau', -tau, 0, -1)`, `1/2(0, -tau', -tau, 1)`,
/// `1/2(0, 1, -tau', -tau)`, `1/2(0, -1, -tau', tau)`. The last entry of
/// `alpha4` is `+tau`: with `-tau` the pairings with `alpha2` and `alpha3`
/// disagree with the Cartan matrix.
pub fn simple_root_model(group: GroupId) -> Option<Vec<Vec<GoldenRational>>> {
    let half = |x: GoldenInt| GoldenRational::new(x, 2);
    let tc = GoldenInt::TAU_CONJ;
    let t = GoldenInt::TAU;
    let one = GoldenInt::ONE;
    let z = GoldenInt::ZERO;
    let rows: Vec<Vec<GoldenInt>> = match group {
        GroupId::H3 => vec![
            vec![z, z, one.scale(2)],
            vec![-tc, -t, -one],
            vec![z, one.scale(2), z],
        ],
        GroupId::H4 => vec![
            vec![-tc, -t, z, -one],
            vec![z, -tc, -t, one],
            vec![z, one, -tc, -t],
            vec![z, -one, -tc, t],
        ],
        _ => return None,
    };
    Some(
        rows.into_iter()
            .map(|r| r.into_iter().map(half).collect())
            .collect(),
    )
}

/// Exact orthonormal coordinates of a vector given in the simple-root basis
/// (`H3` and `H4` only).
pub fn cartesian_exact(group: GroupId, alpha: &[GoldenRational]) -> Option<Vec<GoldenRational>> {
    let model = simple_root_model(group)?;
    let dim = model[0].len();
    Some(
        (0..dim)
            .map(|i| {
                alpha
                    .iter()
                    .zip(&model)
                    .map(|(&c, root)| c * root[i])
                    .sum()
            })
            .collect(),
    )
}

/// Cartesian coordinates as doubles.
///
/// `H2` uses `x = [[0, r], [1, tau/2]] v` with `r = sqrt(1 - tau^2/4)`; that
/// frame gives roots length `sqrt(3 - tau)`, so `normalize` divides it out.
/// `H3`/`H4` use the orthonormal simple-root models (already unit roots) and
/// `A2` the planar model `alpha1 = (1, 0)`, `alpha2 = (-1/2, sqrt3/2)`.
pub fn cartesian(v: &OmegaVector, normalize: bool) -> Vec<f64> {
    match v.group {
        GroupId::H2 => {
            let r = (1.0 - TAU_F64 * TAU_F64 / 4.0).sqrt();
            let (v1, v2) = (v.coords[0].to_f64(), v.coords[1].to_f64());
            let mut x = vec![r * v2, v1 + TAU_F64 / 2.0 * v2];
            if normalize {
                let s = (3.0 - TAU_F64).sqrt();
                x.iter_mut().for_each(|c| *c /= s);
            }
            x
        }
        GroupId::A2 => {
            let alpha: Vec<f64> = alpha_from_omega(v).iter().map(|c| c.to_f64()).collect();
            vec![alpha[0] - 0.5 * alpha[1], 3f64.sqrt() / 2.0 * alpha[1]]
        }
        GroupId::H3 | GroupId::H4 => {
            let alpha = alpha_from_omega(v);
            cartesian_exact(v.group, &alpha)
                .expect("H3/H4 have a model")
                .iter()
                .map(|c| c.to_f64())
                .collect()
        }
    }
}

/// `H2` points with integral simple-root coordinates as cyclotomic integers,
/// using `alpha1 = xi^0` and `alpha2 = xi^4 = -tau + xi`.
pub fn h2_to_cyclo(v: &OmegaVector) -> Result<CycloInt> {
    if v.group != GroupId::H2 {
        return Err(Error::UnsupportedGroup {
            group: v.group,
            reason: "the cyclotomic model is planar",
        });
    }
    let alpha = alpha_from_omega_integral(v).ok_or(Error::NotInRootLattice)?;
    Ok(CycloInt::real(alpha.coords[0]) + CycloInt::xi_pow(4).scale(alpha.coords[1]))
}

/// Inverse of [`h2_to_cyclo`]: `p + q xi = (p + tau q) alpha1 + q alpha2`.
pub fn h2_from_cyclo(x: CycloInt) -> OmegaVector {
    let alpha = AlphaVector::new(GroupId::H2, vec![x.p + x.q * GoldenInt::TAU, x.q]);
    omega_from_alpha(&alpha)
}
