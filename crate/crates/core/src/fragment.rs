//! Quasicrystal fragments: every point reachable from the origin with at most
//! `n` translations by the highest root and any number of simple reflections.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::goldenring::{CycloInt, GoldenInt, GoldenRational};
use crate::rootsystem::{
    h2_to_cyclo, highest_root_omega, norm_sq, roots_omega, weyl_orbit, GroupId, OmegaVector,
};

pub use crate::rootsystem::to_dominant;

pub const DEFAULT_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    WordBfs,
    RootSum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub group: GroupId,
    pub n: u32,
    /// Canonically sorted, no duplicates.
    pub points: Vec<OmegaVector>,
    pub method: Method,
}

impl Fragment {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &OmegaVector) -> bool {
        self.points.binary_search(v).is_ok()
    }

    /// `H2` points as cyclotomic integers, same order as `points`.
    pub fn to_cyclo(&self) -> Result<Vec<CycloInt>> {
        self.points.iter().map(h2_to_cyclo).collect()
    }
}

fn require_h(group: GroupId) -> Result<()> {
    if group == GroupId::A2 {
        return Err(Error::UnsupportedGroup {
            group,
            reason: "fragments are generated for H2, H3, H4",
        });
    }
    Ok(())
}

/// Level by level: the dominant points reachable with exactly `m`
/// translations are the dominant representatives of `T p` for `p` in the
/// orbits first reached at level `m - 1`. Older orbits need no revisit since
/// their translates were collected one level earlier.
pub(crate) fn word_bfs(group: GroupId, n: u32, cap: usize) -> Result<Vec<OmegaVector>> {
    let h = highest_root_omega(group);
    let origin = OmegaVector::zero(group);
    let mut seen: HashSet<OmegaVector> = HashSet::from([origin.clone()]);
    let mut orbits: Vec<Vec<OmegaVector>> = vec![vec![origin]];
    let mut frontier = 0..1;
    let mut count = 1usize;
    for _ in 0..n {
        let mut found: Vec<OmegaVector> = orbits[frontier.clone()]
            .par_iter()
            .flat_map_iter(|orbit| orbit.iter().map(|p| to_dominant(&p.add(&h)).0))
            .collect();
        found.sort();
        found.dedup();
        let fresh: Vec<OmegaVector> = found.into_iter().filter(|d| !seen.contains(d)).collect();
        let new_orbits: Vec<Vec<OmegaVector>> = fresh.par_iter().map(weyl_orbit).collect();
        let start = orbits.len();
        for (d, orbit) in fresh.into_iter().zip(new_orbits) {
            count += orbit.len();
            if count > cap {
                return Err(Error::ResourceLimit { count, cap });
            }
            seen.insert(d);
            orbits.push(orbit);
        }
        frontier = start..orbits.len();
        if frontier.is_empty() {
            break;
        }
    }
    let mut points: Vec<OmegaVector> = orbits.into_iter().flatten().collect();
    points.sort();
    Ok(points)
}

pub fn generate(group: GroupId, n: u32) -> Result<Fragment> {
    generate_with_cap(group, n, DEFAULT_CAP)
}

pub fn generate_with_cap(group: GroupId, n: u32, cap: usize) -> Result<Fragment> {
    require_h(group)?;
    Ok(Fragment {
        group,
        n,
        points: word_bfs(group, n, cap)?,
        method: Method::WordBfs,
    })
}

pub fn generate_rootsum(group: GroupId, n: u32) -> Result<Fragment> {
    generate_rootsum_with_cap(group, n, DEFAULT_CAP)
}

/// All sums of at most `n` roots, built by adding one root at a time to the
/// sums first reached in the previous round.
pub fn generate_rootsum_with_cap(group: GroupId, n: u32, cap: usize) -> Result<Fragment> {
    require_h(group)?;
    let roots = roots_omega(group);
    let origin = vec![GoldenInt::ZERO; group.rank()];
    let mut all: HashSet<Vec<GoldenInt>> = HashSet::from([origin.clone()]);
    let mut frontier = vec![origin];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &frontier {
            for r in roots {
                let q: Vec<GoldenInt> = p.iter().zip(&r.coords).map(|(&x, &y)| x + y).collect();
                if !all.contains(&q) {
                    all.insert(q.clone());
                    next.push(q);
                }
            }
            if all.len() > cap {
                return Err(Error::ResourceLimit {
                    count: all.len(),
                    cap,
                });
            }
        }
        frontier = next;
    }
    let mut points: Vec<OmegaVector> = all
        .into_iter()
        .map(|c| OmegaVector::new(group, c))
        .collect();
    points.sort();
    Ok(Fragment {
        group,
        n,
        points,
        method: Method::RootSum,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub dominant: OmegaVector,
    pub size: usize,
    pub members: Vec<OmegaVector>,
}

/// Partition into reflection-group orbits, sorted by dominant point.
pub fn orbits(f: &Fragment) -> Vec<OrbitRecord> {
    let mut by_dominant: BTreeMap<OmegaVector, Vec<OmegaVector>> = BTreeMap::new();
    for p in &f.points {
        by_dominant.entry(to_dominant(p).0).or_default().push(p.clone());
    }
    by_dominant
        .into_iter()
        .map(|(dominant, members)| OrbitRecord {
            dominant,
            size: members.len(),
            members,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shell {
    pub norm_sq: GoldenRational,
    pub members: Vec<OmegaVector>,
}

/// Partition by exact squared distance from the origin, innermost first.
pub fn shells(f: &Fragment) -> Vec<Shell> {
    let mut by_norm: BTreeMap<GoldenRational, Vec<OmegaVector>> = BTreeMap::new();
    for p in &f.points {
        by_norm.entry(norm_sq(p)).or_default().push(p.clone());
    }
    by_norm
        .into_iter()
        .map(|(norm_sq, members)| Shell { norm_sq, members })
        .collect()
}

/// Invariance of an `H2` point set under multiplication by `xi`.
pub fn check_tenfold(f: &Fragment) -> Result<bool> {
    if f.group != GroupId::H2 {
        return Err(Error::UnsupportedGroup {
            group: f.group,
            reason: "rotation by xi is defined in the plane",
        });
    }
    let points: HashSet<CycloInt> = f.to_cyclo()?.into_iter().collect();
    Ok(points.iter().all(|&x| points.contains(&(x * CycloInt::XI))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{highest_root_omega, simple_root_omega};

    fn h2(pairs: &[(i64, i64)]) -> OmegaVector {
        OmegaVector::from_ints(GroupId::H2, pairs)
    }

    #[test]
    fn small_h2_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| generate(GroupId::H2, n).unwrap().len()).collect();
        assert_eq!(counts, [1, 11, 61, 211, 551, 1201, 2311]);
    }

    #[test]
    fn level_one_is_origin_plus_roots() {
        for group in GroupId::NONCRYSTALLOGRAPHIC {
            let f = generate(group, 1).unwrap();
            let mut want = roots_omega(group).to_vec();
            want.push(OmegaVector::zero(group));
            want.sort();
            assert_eq!(f.points, want);
        }
        assert_eq!(generate_rootsum(GroupId::H3, 1).unwrap().len(), 31);
        assert_eq!(generate_rootsum(GroupId::H4, 1).unwrap().len(), 121);
    }

    #[test]
    fn oracle_agrees_h2() {
        for n in 0..=4 {
            let a = generate(GroupId::H2, n).unwrap();
            let b = generate_rootsum(GroupId::H2, n).unwrap();
            assert_eq!(a.points, b.points, "n = {n}");
        }
    }

    #[test]
    fn nested_strictly() {
        for n in 1..=5 {
            let small = generate(GroupId::H2, n - 1).unwrap();
            let big = generate(GroupId::H2, n).unwrap();
            assert!(small.len() < big.len());
            assert!(small.points.iter().all(|p| big.contains(p)));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = generate_with_cap(GroupId::H2, 3, 100).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { cap: 100, .. }));
        assert!(matches!(
            generate_rootsum_with_cap(GroupId::H2, 3, 100),
            Err(Error::ResourceLimit { .. })
        ));
        assert_eq!(generate_with_cap(GroupId::H2, 2, 61).unwrap().len(), 61);
        assert!(matches!(generate(GroupId::A2, 1), Err(Error::UnsupportedGroup { .. })));
    }

    #[test]
    fn orbit_rule_h2() {
        for n in 0..=5 {
            let f = generate(GroupId::H2, n).unwrap();
            let os = orbits(&f);
            assert_eq!(os.iter().map(|o| o.size).sum::<usize>(), f.len());
            for o in &os {
                let c = &o.dominant.coords;
                let want = match (c[0].is_zero(), c[1].is_zero()) {
                    (true, true) => 1,
                    (false, false) => 10,
                    _ => 5,
                };
                assert_eq!(o.size, want, "{}", o.dominant);
                assert_eq!(o.members.iter().filter(|m| m.is_dominant()).count(), 1);
            }
        }
        let q1 = orbits(&generate(GroupId::H2, 1).unwrap());
        assert_eq!(q1.len(), 2);
        let decagon = q1.iter().find(|o| o.size == 10).unwrap();
        assert_eq!(decagon.dominant, highest_root_omega(GroupId::H2));
    }

    #[test]
    fn shells_h2() {
        let q0 = shells(&generate(GroupId::H2, 0).unwrap());
        assert_eq!(q0.len(), 1);
        let q1 = shells(&generate(GroupId::H2, 1).unwrap());
        assert_eq!(q1.len(), 2);
        assert_eq!(q1[1].norm_sq, GoldenRational::ONE);
        assert_eq!(q1[1].members.len(), 10);
        for n in 1..=5u32 {
            let s = shells(&generate(GroupId::H2, n).unwrap());
            let outer = s.last().unwrap();
            assert_eq!(outer.norm_sq, GoldenRational::from((n * n) as i64));
            let mut want = weyl_orbit(&highest_root_omega(GroupId::H2).scale(GoldenInt::int(n as i64)));
            want.sort();
            assert_eq!(outer.members, want);
        }
    }

    #[test]
    fn tenfold() {
        for n in [2, 4] {
            assert!(check_tenfold(&generate(GroupId::H2, n).unwrap()).unwrap());
        }
        let mut points = vec![OmegaVector::zero(GroupId::H2), simple_root_omega(GroupId::H2, 0)];
        points.sort();
        let f = Fragment {
            group: GroupId::H2,
            n: 1,
            points,
            method: Method::WordBfs,
        };
        assert!(!check_tenfold(&f).unwrap());
    }

    #[test]
    fn pentagon_orbit_and_dominant() {
        let a = GoldenInt::new(2, 1);
        let pent = weyl_orbit(&OmegaVector::new(GroupId::H2, vec![a, GoldenInt::ZERO]));
        let t = GoldenInt::TAU;
        let mut want = vec![
            OmegaVector::new(GroupId::H2, vec![a, GoldenInt::ZERO]),
            OmegaVector::new(GroupId::H2, vec![-a, a * t]),
            OmegaVector::new(GroupId::H2, vec![a * t, -a * t]),
            OmegaVector::new(GroupId::H2, vec![-a * t, a]),
            OmegaVector::new(GroupId::H2, vec![GoldenInt::ZERO, -a]),
        ];
        want.sort();
        assert_eq!(pent, want);
        assert_eq!(to_dominant(&h2(&[(-1, 1), (-1, 1)])).1, vec![]);
    }
}
