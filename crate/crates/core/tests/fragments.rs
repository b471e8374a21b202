use haff::cutproject::sigma_2d;
use haff::fragment::{generate, generate_rootsum, shells};
use haff::lineanalysis::{line_closed_form, line_from_fragment, sigma_1d, Window1D};
use haff::rootsystem::{highest_root_omega, norm_sq, roots_omega, weyl_orbit};
use haff::{GoldenRational, GroupId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn fragments_are_nested() {
    for (group, max_n) in [(GroupId::H2, 5), (GroupId::H3, 3), (GroupId::H4, 2)] {
        for n in 0..max_n {
            let small = generate(group, n).unwrap();
            let big = generate(group, n + 1).unwrap();
            assert!(small.points.iter().all(|p| big.contains(p)), "{group} n = {n}");
        }
    }
}

#[test]
fn known_sizes() {
    let h2: Vec<usize> = (0..=6).map(|n| generate(GroupId::H2, n).unwrap().len()).collect();
    assert_eq!(h2, [1, 11, 61, 211, 551, 1201, 2311]);
    assert_eq!(generate(GroupId::H3, 1).unwrap().len(), 31);
    assert_eq!(generate(GroupId::H4, 1).unwrap().len(), 121);
}

#[test]
fn line_section_of_fragment_is_the_line_set() {
    for n in 0..=6 {
        let f = generate(GroupId::H2, n).unwrap();
        assert_eq!(line_from_fragment(&f).unwrap().values, line_closed_form(n).values, "n = {n}");
    }
}

#[test]
fn real_points_of_the_decagon_set_are_the_interval_set() {
    // the decagon meets the real axis in [-n, n]
    for n in 1..=4 {
        let mut real: Vec<_> = sigma_2d(n)
            .unwrap()
            .points
            .into_iter()
            .filter(|x| x.is_real())
            .map(|x| x.p)
            .collect();
        real.sort();
        let w = Window1D::symmetric(n as i64);
        assert_eq!(real, sigma_1d(w, w), "n = {n}");
    }
}

#[test]
fn outer_shell_is_n_times_the_root_length() {
    for (group, max_n) in [(GroupId::H2, 4), (GroupId::H3, 3), (GroupId::H4, 2)] {
        let root = norm_sq(&highest_root_omega(group));
        for n in 1..=max_n {
            let f = generate(group, n).unwrap();
            let outer = shells(&f).last().unwrap().norm_sq;
            let k = GoldenRational::from((n * n) as i64);
            assert_eq!(outer, k * root, "{group} n = {n}");
        }
    }
}

#[test]
fn random_points_are_weyl_closed_and_reachable_by_root_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (group, n) in [(GroupId::H3, 3), (GroupId::H4, 2)] {
        let f = generate(group, n).unwrap();
        let sums = generate_rootsum(group, n).unwrap();
        let next = generate(group, n + 1).unwrap();
        let roots = roots_omega(group);
        for _ in 0..200 {
            let p = &f.points[rng.gen_range(0..f.len())];
            assert!(weyl_orbit(p).iter().all(|q| f.contains(q)));
            assert!(sums.contains(p));
            // one more root lands in the next fragment
            let r = &roots[rng.gen_range(0..roots.len())];
            assert!(next.contains(&p.add(r)));
        }
    }
}
