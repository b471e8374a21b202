//! Affine extensions: extended Cartan matrices, the reflection and translation
//! operators in the omega basis, the Coxeter relations they satisfy, and the
//! search for generalized Cartan matrices once the sign condition on the
//! off-diagonal entries is dropped.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fragment;
use crate::goldenring::{GoldenInt, Sign};
use crate::linalg::GoldenMatrix;
use crate::rootsystem::{
    cartan, highest_root, highest_root_omega, CartanMatrix, GroupId, OmegaVector,
};

/// Extended Cartan matrix: the finite one with `alpha0 = -alpha_H` adjoined
/// as row and column 0. `a_0j = 2(alpha0|alpha_j) = -h_j` where `h` is the
/// highest root in omega coordinates.
pub fn extended_cartan(group: GroupId) -> CartanMatrix {
    let finite = cartan(group).entries;
    let h = highest_root_omega(group).coords;
    let k = group.rank();
    let mut m = GoldenMatrix::zeros(k + 1);
    m[(0, 0)] = GoldenInt::int(2);
    for j in 0..k {
        m[(0, j + 1)] = -h[j];
        m[(j + 1, 0)] = -h[j];
        for i in 0..k {
            m[(i + 1, j + 1)] = finite[(i, j)];
        }
    }
    CartanMatrix {
        group,
        extended: true,
        entries: m,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub diagonal_two: bool,
    pub symmetric: bool,
    pub off_diagonal_nonpositive: bool,
    pub det_zero: bool,
    pub det: GoldenInt,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.diagonal_two && self.symmetric && self.off_diagonal_nonpositive && self.det_zero
    }
}

/// Checks `a_ii = 2`, `a_ij = a_ji`, `a_ij <= 0` off the diagonal and
/// `det = 0`, all exactly.
pub fn verify_conditions(m: &CartanMatrix) -> ConditionReport {
    let e = &m.entries;
    let n = e.size();
    let det = e.det();
    let off = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    ConditionReport {
        diagonal_two: (0..n).all(|i| e[(i, i)] == GoldenInt::int(2)),
        symmetric: e.is_symmetric(),
        off_diagonal_nonpositive: off.clone().all(|(i, j)| !e[(i, j)].is_positive()),
        det_zero: det.is_zero(),
        det,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorKind {
    /// Simple reflection `r_j`, 1-based as in the usual labelling.
    Reflection(usize),
    /// Linear reflection in the mirror orthogonal to the given root (`r0`).
    RootReflection(Vec<GoldenInt>),
    /// `r_H^aff v = v + (1 - 2(v|alpha_H)) alpha_H`.
    AffineReflection,
    /// `T v = v + alpha_H`.
    Translation,
    Composite,
}

/// `v -> matrix v + offset` on omega coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineOperator {
    pub group: GroupId,
    pub kind: OperatorKind,
    pub matrix: GoldenMatrix,
    pub offset: OmegaVector,
}

impl AffineOperator {
    pub fn identity(group: GroupId) -> Self {
        AffineOperator {
            group,
            kind: OperatorKind::Composite,
            matrix: GoldenMatrix::identity(group.rank()),
            offset: OmegaVector::zero(group),
        }
    }

    pub fn name(&self) -> String {
        match &self.kind {
            OperatorKind::Reflection(j) => format!("r{j}"),
            OperatorKind::RootReflection(_) => "r0".into(),
            OperatorKind::AffineReflection => "rH_aff".into(),
            OperatorKind::Translation => "T".into(),
            OperatorKind::Composite => "composite".into(),
        }
    }

    pub fn apply(&self, v: &OmegaVector) -> OmegaVector {
        assert_eq!(v.group, self.group);
        let coords = self
            .matrix
            .apply(&v.coords)
            .into_iter()
            .zip(&self.offset.coords)
            .map(|(x, &o)| x + o)
            .collect();
        OmegaVector::new(self.group, coords)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineOperator) -> AffineOperator {
        let matrix = &self.matrix * &other.matrix;
        let offset = self.apply(&other.offset);
        AffineOperator {
            group: self.group,
            kind: OperatorKind::Composite,
            matrix,
            offset,
        }
    }

    pub fn pow(&self, e: u32) -> AffineOperator {
        (0..e).fold(AffineOperator::identity(self.group), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity() && self.offset.is_zero()
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }
}

impl fmt::Display for AffineOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} + {}", self.name(), self.matrix, self.offset)
    }
}

/// Matrix of `r_j` in omega coordinates: `v_k -= v_j a_jk`.
fn reflection_matrix(group: GroupId, j: usize) -> GoldenMatrix {
    let a = cartan(group).entries;
    let mut m = GoldenMatrix::identity(group.rank());
    for k in 0..group.rank() {
        m[(k, j)] -= a[(j, k)];
    }
    m
}

/// `I - h c^T` with `h`, `c` the omega and alpha coordinates of `alpha_H`.
fn highest_root_mirror(group: GroupId) -> GoldenMatrix {
    let h = highest_root_omega(group).coords;
    let c = highest_root(group).coords;
    let n = group.rank();
    let mut m = GoldenMatrix::identity(n);
    for i in 0..n {
        for k in 0..n {
            m[(i, k)] -= h[i] * c[k];
        }
    }
    m
}

pub fn simple_reflection(group: GroupId, j: usize) -> AffineOperator {
    AffineOperator {
        group,
        kind: OperatorKind::Reflection(j + 1),
        matrix: reflection_matrix(group, j),
        offset: OmegaVector::zero(group),
    }
}

pub fn root_reflection_highest(group: GroupId) -> AffineOperator {
    AffineOperator {
        group,
        kind: OperatorKind::RootReflection(highest_root(group).coords),
        matrix: highest_root_mirror(group),
        offset: OmegaVector::zero(group),
    }
}

pub fn affine_reflection(group: GroupId) -> AffineOperator {
    AffineOperator {
        group,
        kind: OperatorKind::AffineReflection,
        matrix: highest_root_mirror(group),
        offset: highest_root_omega(group),
    }
}

pub fn translation(group: GroupId) -> AffineOperator {
    AffineOperator {
        group,
        kind: OperatorKind::Translation,
        matrix: GoldenMatrix::identity(group.rank()),
        offset: highest_root_omega(group),
    }
}

/// `r_1 .. r_k`, followed by `r0`, `r_H^aff` and `T` when `extended`.
pub fn operators(group: GroupId, extended: bool) -> Vec<AffineOperator> {
    let mut ops: Vec<AffineOperator> = (0..group.rank())
        .map(|j| simple_reflection(group, j))
        .collect();
    if extended {
        ops.push(root_reflection_highest(group));
        ops.push(affine_reflection(group));
        ops.push(translation(group));
    }
    ops
}

/// Order of `r_j r_k` predicted from the Cartan entry `a_jk`.
pub fn coxeter_order(a_jk: GoldenInt) -> Option<u32> {
    match (a_jk.a, a_jk.b) {
        (2, 0) => Some(1),
        (0, 0) => Some(2),
        (-1, 0) => Some(3),
        (0, -1) | (1, -1) => Some(5),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub j: usize,
    pub k: usize,
    pub a_jk: GoldenInt,
    pub expected_order: Option<u32>,
    pub holds: bool,
    pub minimal: bool,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        self.expected_order.is_some() && self.holds && self.minimal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub group: GroupId,
    pub extended: bool,
    pub pairs: Vec<PairCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.pairs.iter().all(PairCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| !p.passed())
    }
}

/// Reflection generators indexed like the (extended) Cartan matrix. In the
/// extended case generator 0 is the affine reflection `r_H^aff`.
pub fn reflection_generators(group: GroupId, extended: bool) -> Vec<AffineOperator> {
    let mut gens = Vec::new();
    if extended {
        gens.push(affine_reflection(group));
    }
    gens.extend((0..group.rank()).map(|j| simple_reflection(group, j)));
    gens
}

/// Checks `(r_j r_k)^M = 1` for every ordered pair of generators, with `M`
/// read off the Cartan entry, and that no smaller power is the identity.
pub fn verify_identities(group: GroupId, extended: bool) -> IdentityReport {
    let m = if extended {
        extended_cartan(group)
    } else {
        cartan(group)
    };
    let gens = reflection_generators(group, extended);
    let mut pairs = Vec::new();
    for j in 0..gens.len() {
        for k in 0..gens.len() {
            let a_jk = m.get(j, k);
            let expected_order = coxeter_order(a_jk);
            let product = gens[j].compose(&gens[k]);
            let (holds, minimal) = match expected_order {
                Some(order) => {
                    let mut p = AffineOperator::identity(group);
                    let mut first = None;
                    for e in 1..=order {
                        p = product.compose(&p);
                        if p.is_identity() {
                            first = Some(e);
                            break;
                        }
                    }
                    (first.is_some() && product.pow(order).is_identity(), first == Some(order))
                }
                None => (false, false),
            };
            pairs.push(PairCheck {
                j: if extended { j } else { j + 1 },
                k: if extended { k } else { k + 1 },
                a_jk,
                expected_order,
                holds,
                minimal,
            });
        }
    }
    IdentityReport {
        group,
        extended,
        pairs,
    }
}

/// A template matrix for the generalized Cartan search: the finite Cartan
/// matrix bordered by `(a, b, ...)` with `a = a1 + a2 tau` and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanCandidate {
    pub coeffs: Vec<i64>,
    pub matrix: CartanMatrix,
    pub psd: bool,
}

impl CartanCandidate {
    pub fn border(&self) -> Vec<GoldenInt> {
        self.coeffs
            .chunks(2)
            .map(|c| GoldenInt::new(c[0], c[1]))
            .collect()
    }

    /// All off-diagonal entries are `<= 0`.
    pub fn is_nonpositive(&self) -> bool {
        verify_conditions(&self.matrix).off_diagonal_nonpositive
    }
}

pub fn assemble_template(group: GroupId, coeffs: &[i64]) -> Result<CartanMatrix> {
    if group == GroupId::A2 {
        return Err(Error::UnsupportedGroup {
            group,
            reason: "the generalized Cartan templates are for H2, H3, H4",
        });
    }
    let k = group.rank();
    if coeffs.len() != 2 * k {
        return Err(Error::InvalidArgument(format!(
            "{group} template takes {} coefficients, got {}",
            2 * k,
            coeffs.len()
        )));
    }
    let finite = cartan(group).entries;
    let mut m = GoldenMatrix::zeros(k + 1);
    m[(0, 0)] = GoldenInt::int(2);
    for j in 0..k {
        let x = GoldenInt::new(coeffs[2 * j], coeffs[2 * j + 1]);
        m[(0, j + 1)] = x;
        m[(j + 1, 0)] = x;
        for i in 0..k {
            m[(i + 1, j + 1)] = finite[(i, j)];
        }
    }
    Ok(CartanMatrix {
        group,
        extended: true,
        entries: m,
    })
}

/// Positive semidefinite over the reals: every principal minor is `>= 0`.
pub fn is_positive_semidefinite(m: &GoldenMatrix) -> bool {
    let n = m.size();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        m.submatrix(&idx, &idx).det().sign() != Sign::Negative
    })
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub group: GroupId,
    pub coeff_bound: u32,
    /// Lexicographic in the coefficient tuple.
    pub candidates: Vec<CartanCandidate>,
}

impl Enumeration {
    pub fn psd_count(&self) -> usize {
        self.candidates.iter().filter(|c| c.psd).count()
    }

    pub fn nonpositive(&self) -> Vec<&CartanCandidate> {
        self.candidates.iter().filter(|c| c.is_nonpositive()).collect()
    }

    pub fn contains(&self, coeffs: &[i64]) -> bool {
        self.candidates
            .binary_search_by(|c| c.coeffs.as_slice().cmp(coeffs))
            .is_ok()
    }
}

/// All bordered templates with coefficients in `[-bound, bound]` and exact
/// determinant 0.
///
/// The determinant of the bordered matrix is `2 det(B) - u^T adj(B) u` for
/// the finite block `B`, so the inner loop is a quadratic form. Every hit is
/// re-checked with the cofactor determinant.
pub fn enumerate_generalized(group: GroupId, coeff_bound: u32) -> Result<Enumeration> {
    assemble_template(group, &vec![0; 2 * group.rank()])?;
    let finite = cartan(group).entries;
    let k = group.rank();
    let adj = finite.adjugate();
    let target = finite.det().scale(2);
    let bound = coeff_bound as i64;
    let dims = 2 * k;

    let per_leading: Vec<Vec<Vec<i64>>> = (-bound..=bound)
        .into_par_iter()
        .map(|lead| {
            let mut hits = Vec::new();
            let mut coeffs = vec![-bound; dims];
            coeffs[0] = lead;
            let mut u = vec![GoldenInt::ZERO; k];
            loop {
                for (i, ui) in u.iter_mut().enumerate() {
                    *ui = GoldenInt::new(coeffs[2 * i], coeffs[2 * i + 1]);
                }
                let mut q = GoldenInt::ZERO;
                for i in 0..k {
                    if u[i].is_zero() {
                        continue;
                    }
                    let mut row = GoldenInt::ZERO;
                    for j in 0..k {
                        row += adj[(i, j)] * u[j];
                    }
                    q += u[i] * row;
                }
                if q == target {
                    hits.push(coeffs.clone());
                }
                // odometer over coeffs[1..], last position fastest
                let mut pos = dims - 1;
                loop {
                    if pos == 0 {
                        return hits;
                    }
                    if coeffs[pos] < bound {
                        coeffs[pos] += 1;
                        break;
                    }
                    coeffs[pos] = -bound;
                    pos -= 1;
                }
            }
        })
        .collect();

    let candidates = per_leading
        .into_iter()
        .flatten()
        .map(|coeffs| {
            let matrix = assemble_template(group, &coeffs).expect("valid template");
            assert!(matrix.entries.det().is_zero(), "bordered determinant disagrees");
            let psd = is_positive_semidefinite(&matrix.entries);
            CartanCandidate {
                coeffs,
                matrix,
                psd,
            }
        })
        .collect();
    Ok(Enumeration {
        group,
        coeff_bound,
        candidates,
    })
}

const TABLE_H2: &str = include_str!("../tests/fixtures/cartan_table_h2.txt");
const TABLE_H3: &str = include_str!("../tests/fixtures/cartan_table_h3.txt");
const TABLE_H4: &str = include_str!("../tests/fixtures/cartan_table_h4.txt");

fn parse_table(text: &str) -> Result<Vec<Vec<i64>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect()
        })
        .collect()
}

/// The published generalized Cartan tables, one coefficient row per entry.
pub fn published_table(group: GroupId) -> Result<Vec<Vec<i64>>> {
    let text = match group {
        GroupId::H2 => TABLE_H2,
        GroupId::H3 => TABLE_H3,
        GroupId::H4 => TABLE_H4,
        GroupId::A2 => {
            return Err(Error::UnsupportedGroup {
                group,
                reason: "no published table",
            })
        }
    };
    parse_table(text)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MissingRow {
    pub coeffs: Vec<i64>,
    pub det: GoldenInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub group: GroupId,
    pub coeff_bound: u32,
    pub table_rows: usize,
    pub matched: usize,
    pub missing: Vec<MissingRow>,
    pub extras: Vec<Vec<i64>>,
    pub extras_psd: usize,
}

impl TableDiff {
    pub fn table_covered(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Compares an enumeration with the published table. Missing rows carry
/// their actual determinant so the reason they were not found is visible.
pub fn diff_with_table(e: &Enumeration) -> Result<TableDiff> {
    let mut table = published_table(e.group)?;
    table.sort();
    table.dedup();
    let mut missing = Vec::new();
    let mut matched = 0;
    for row in &table {
        if e.contains(row) {
            matched += 1;
        } else {
            let det = assemble_template(e.group, row)?.entries.det();
            missing.push(MissingRow {
                coeffs: row.clone(),
                det,
            });
        }
    }
    let extras: Vec<&CartanCandidate> = e
        .candidates
        .iter()
        .filter(|c| table.binary_search(&c.coeffs).is_err())
        .collect();
    Ok(TableDiff {
        group: e.group,
        coeff_bound: e.coeff_bound,
        table_rows: table.len(),
        matched,
        missing,
        extras_psd: extras.iter().filter(|c| c.psd).count(),
        extras: extras.into_iter().map(|c| c.coeffs.clone()).collect(),
    })
}

/// The `A2` counterpart of fragment generation: words with at most `n`
/// translations applied to the origin.
pub fn a2_lattice_demo(n: u32) -> Vec<OmegaVector> {
    fragment::word_bfs(GroupId::A2, n, usize::MAX)
        .expect("uncapped")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{alpha_from_omega_integral, roots_omega};
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GoldenInt {
        GoldenInt::new(a, b)
    }

    fn mat(rows: &[&[(i64, i64)]]) -> GoldenMatrix {
        let rows: Vec<Vec<GoldenInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&(a, b)| g(a, b)).collect())
            .collect();
        GoldenMatrix::from_rows(&rows)
    }

    const TC: (i64, i64) = (1, -1);
    const MT: (i64, i64) = (0, -1);

    #[test]
    fn extended_matrices_match_printed() {
        let h2 = mat(&[&[(2, 0), TC, TC], &[TC, (2, 0), MT], &[TC, MT, (2, 0)]]);
        assert_eq!(extended_cartan(GroupId::H2).entries, h2);
        let a2 = mat(&[
            &[(2, 0), (-1, 0), (-1, 0)],
            &[(-1, 0), (2, 0), (-1, 0)],
            &[(-1, 0), (-1, 0), (2, 0)],
        ]);
        assert_eq!(extended_cartan(GroupId::A2).entries, a2);
        let h3 = mat(&[
            &[(2, 0), (0, 0), TC, (0, 0)],
            &[(0, 0), (2, 0), (-1, 0), (0, 0)],
            &[TC, (-1, 0), (2, 0), MT],
            &[(0, 0), (0, 0), MT, (2, 0)],
        ]);
        assert_eq!(extended_cartan(GroupId::H3).entries, h3);
        let z = (0, 0);
        let h4 = mat(&[
            &[(2, 0), TC, z, z, z],
            &[TC, (2, 0), (-1, 0), z, z],
            &[z, (-1, 0), (2, 0), (-1, 0), z],
            &[z, z, (-1, 0), (2, 0), MT],
            &[z, z, z, MT, (2, 0)],
        ]);
        assert_eq!(extended_cartan(GroupId::H4).entries, h4);
    }

    #[test]
    fn conditions() {
        for group in GroupId::ALL {
            let r = verify_conditions(&extended_cartan(group));
            assert!(r.all_pass(), "{group}: {r:?}");
            assert_eq!(r.det, GoldenInt::ZERO);
        }
        let finite = verify_conditions(&cartan(GroupId::H2));
        assert!(!finite.det_zero);
        assert_eq!(finite.det, g(3, -1));
    }

    #[test]
    fn h2_operators_match_matrices() {
        let ops = operators(GroupId::H2, true);
        let names: Vec<String> = ops.iter().map(|o| o.name()).collect();
        assert_eq!(names, ["r1", "r2", "r0", "rH_aff", "T"]);
        assert_eq!(ops[0].matrix, mat(&[&[(-1, 0), (0, 0)], &[(0, 1), (1, 0)]]));
        assert_eq!(ops[1].matrix, mat(&[&[(1, 0), (0, 1)], &[(0, 0), (-1, 0)]]));
        let o = OmegaVector::zero(GroupId::H2);
        let h = highest_root_omega(GroupId::H2);
        assert_eq!(ops[4].apply(&o), OmegaVector::new(GroupId::H2, vec![-GoldenInt::TAU_CONJ; 2]));
        assert_eq!(ops[3].apply(&o), h);
        assert_eq!(ops[3].apply(&h), o);
        // r_H^aff fixes omega_j / tau
        let tau_inv = GoldenInt::TAU - GoldenInt::ONE;
        for j in 0..2 {
            let mut c = vec![GoldenInt::ZERO; 2];
            c[j] = tau_inv;
            let w = OmegaVector::new(GroupId::H2, c);
            assert_eq!(ops[3].apply(&w), w);
        }
        // (r1 r2) as printed
        let r1r2 = &ops[0].matrix * &ops[1].matrix;
        assert_eq!(r1r2, mat(&[&[(-1, 0), (0, -1)], &[(0, 1), (0, 1)]]));
        assert!(r1r2.pow(5).is_identity());
    }

    #[test]
    fn h3_h4_operators_match_printed() {
        let h3 = operators(GroupId::H3, true);
        let one = (1, 0);
        let z = (0, 0);
        let m1 = (-1, 0);
        let t = (0, 1);
        assert_eq!(h3[0].matrix, mat(&[&[m1, z, z], &[one, one, z], &[z, z, one]]));
        assert_eq!(h3[1].matrix, mat(&[&[one, one, z], &[z, m1, z], &[z, t, one]]));
        assert_eq!(h3[2].matrix, mat(&[&[one, z, z], &[z, one, t], &[z, z, m1]]));
        assert_eq!(
            h3[5].offset,
            OmegaVector::new(GroupId::H3, vec![g(0, 0), -GoldenInt::TAU_CONJ, g(0, 0)])
        );
        let h4 = operators(GroupId::H4, true);
        assert_eq!(
            h4[2].matrix,
            mat(&[&[one, z, z, z], &[z, one, one, z], &[z, z, m1, z], &[z, z, t, one]])
        );
        assert_eq!(
            h4[3].matrix,
            mat(&[&[one, z, z, z], &[z, one, z, z], &[z, z, one, t], &[z, z, z, m1]])
        );
    }

    #[test]
    fn translation_is_product_of_reflections() {
        for group in GroupId::ALL {
            let ops = operators(group, true);
            let (r0, raff, t) = (&ops[ops.len() - 3], &ops[ops.len() - 2], &ops[ops.len() - 1]);
            let prod = raff.compose(r0);
            assert_eq!((&prod.matrix, &prod.offset), (&t.matrix, &t.offset));
            for op in &ops[..ops.len() - 1] {
                assert!(op.is_involution(), "{group} {}", op.name());
            }
            for m in 1..=20 {
                assert!(!t.pow(m).is_identity());
            }
        }
    }

    #[test]
    fn translation_commutes_only_where_highest_root_is_orthogonal() {
        for group in GroupId::ALL {
            let t = translation(group);
            let h = highest_root_omega(group).coords;
            for j in 0..group.rank() {
                let r = simple_reflection(group, j);
                let commute = t.compose(&r) == r.compose(&t);
                assert_eq!(commute, h[j].is_zero(), "{group} r{}", j + 1);
            }
        }
        let t = translation(GroupId::H2);
        assert!((0..2).all(|j| {
            let r = simple_reflection(GroupId::H2, j);
            t.compose(&r) != r.compose(&t)
        }));
    }

    #[test]
    fn identities_hold() {
        for group in GroupId::ALL {
            for extended in [false, true] {
                let rep = verify_identities(group, extended);
                assert!(rep.all_pass(), "{group} {extended}: {:?}", rep.failures().collect::<Vec<_>>());
            }
        }
        let h2 = verify_identities(GroupId::H2, true);
        let p01 = h2.pairs.iter().find(|p| p.j == 0 && p.k == 1).unwrap();
        assert_eq!((p01.a_jk, p01.expected_order), (GoldenInt::TAU_CONJ, Some(5)));
        let h4 = verify_identities(GroupId::H4, false);
        let order = |j, k| h4.pairs.iter().find(|p| p.j == j && p.k == k).unwrap().expected_order;
        assert_eq!((order(3, 4), order(1, 3), order(1, 2)), (Some(5), Some(2), Some(3)));
    }

    #[test]
    fn linear_r0_relations() {
        // the linear reflection r0 obeys the same relations as r_H^aff
        for group in GroupId::ALL {
            let m = extended_cartan(group);
            let r0 = root_reflection_highest(group);
            for k in 0..group.rank() {
                let order = coxeter_order(m.get(0, k + 1)).unwrap();
                let p = r0.compose(&simple_reflection(group, k));
                assert!(p.pow(order).is_identity());
                assert!((1..order).all(|e| !p.pow(e).is_identity()));
            }
        }
    }

    #[test]
    fn coxeter_orders() {
        assert_eq!(coxeter_order(g(2, 0)), Some(1));
        assert_eq!(coxeter_order(g(0, 0)), Some(2));
        assert_eq!(coxeter_order(g(-1, 0)), Some(3));
        assert_eq!(coxeter_order(GoldenInt::TAU_CONJ), Some(5));
        assert_eq!(coxeter_order(-GoldenInt::TAU), Some(5));
        assert_eq!(coxeter_order(g(-2, 0)), None);
    }

    #[test]
    fn psd_detection() {
        assert!(is_positive_semidefinite(&extended_cartan(GroupId::H3).entries));
        assert!(is_positive_semidefinite(&cartan(GroupId::H4).entries));
        let indefinite = mat(&[&[(2, 0), (3, 0)], &[(3, 0), (2, 0)]]);
        assert!(!is_positive_semidefinite(&indefinite));
    }

    #[test]
    fn enumeration_h2_is_table_one() {
        let e = enumerate_generalized(GroupId::H2, 3).unwrap();
        assert!(e.contains(&[-2, 0, 0, 1]));
        let d = diff_with_table(&e).unwrap();
        assert_eq!((d.table_rows, d.matched), (10, 10));
        assert!(d.missing.is_empty() && d.extras.is_empty(), "{d:?}");
        let np = e.nonpositive();
        assert_eq!(np.len(), 1);
        assert_eq!(np[0].matrix, extended_cartan(GroupId::H2));
        let mut sorted = e.candidates.iter().map(|c| c.coeffs.clone()).collect::<Vec<_>>();
        sorted.sort();
        assert_eq!(sorted, e.candidates.iter().map(|c| c.coeffs.clone()).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_small_bound_brute_force() {
        // cofactor determinant of every template, no shortcut
        for group in [GroupId::H2, GroupId::H3] {
            let e = enumerate_generalized(group, 1).unwrap();
            let dims = 2 * group.rank();
            let mut want = Vec::new();
            for idx in 0..3usize.pow(dims as u32) {
                let coeffs: Vec<i64> = (0..dims)
                    .rev()
                    .map(|p| (idx / 3usize.pow(p as u32) % 3) as i64 - 1)
                    .collect();
                if assemble_template(group, &coeffs).unwrap().entries.det().is_zero() {
                    want.push(coeffs);
                }
            }
            let got: Vec<Vec<i64>> = e.candidates.iter().map(|c| c.coeffs.clone()).collect();
            assert_eq!(got, want, "{group}");
        }
    }

    #[test]
    fn template_validation() {
        assert!(matches!(
            assemble_template(GroupId::A2, &[0; 4]),
            Err(Error::UnsupportedGroup { .. })
        ));
        assert!(matches!(
            assemble_template(GroupId::H2, &[0; 3]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn published_tables_parse() {
        assert_eq!(published_table(GroupId::H2).unwrap().len(), 10);
        assert_eq!(published_table(GroupId::H3).unwrap().len(), 20);
        assert_eq!(published_table(GroupId::H4).unwrap().len(), 120);
        assert!(published_table(GroupId::H4).unwrap().iter().all(|r| r.len() == 8));
    }

    #[test]
    fn a2_demo() {
        assert_eq!(a2_lattice_demo(0), vec![OmegaVector::zero(GroupId::A2)]);
        let one = a2_lattice_demo(1);
        assert_eq!(one.len(), 7);
        let mut expected: Vec<OmegaVector> = roots_omega(GroupId::A2).to_vec();
        expected.push(OmegaVector::zero(GroupId::A2));
        expected.sort();
        assert_eq!(one, expected);
        for p in a2_lattice_demo(3) {
            assert!(p.coords.iter().all(|c| c.b == 0));
            assert!(alpha_from_omega_integral(&p).is_some(), "{p}");
        }
    }

    fn golden() -> impl Strategy<Value = GoldenInt> {
        (-1000i64..=1000, -1000i64..=1000).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn h2_matrices_match_coordinate_formulas(v1 in golden(), v2 in golden()) {
            let v = OmegaVector::new(GroupId::H2, vec![v1, v2]);
            let ops = operators(GroupId::H2, true);
            let t = GoldenInt::TAU;
            let tc = GoldenInt::TAU_CONJ;
            prop_assert_eq!(ops[0].apply(&v).coords, vec![-v1, t * v1 + v2]);
            prop_assert_eq!(ops[1].apply(&v).coords, vec![v1 + t * v2, -v2]);
            prop_assert_eq!(ops[4].apply(&v).coords, vec![v1 - tc, v2 - tc]);
        }
    }
}
