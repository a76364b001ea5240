use gldim_core::equation::{
    check_dim_equation, check_dim_equation_full, enumerate_orbit_solutions, reduce_to_whittaker_form,
    whittaker_target, SolveOptions,
};
use gldim_core::partition::partitions;
use gldim_core::representation::unipotent_radical_dim;
use gldim_core::{IntegralSpec, Partition, RepDescriptor};
use proptest::prelude::*;

/// Sorted multisets of `l` partitions whose halved orbit dimensions sum to
/// `½ n(n−1)`, from the full Cartesian product.
fn brute_force(n: u32, l: usize, exclude_trivial: bool) -> Vec<Vec<Vec<u32>>> {
    let mut alphabet: Vec<(Vec<u32>, u64)> = Vec::new();
    let mut stack = vec![(n, n, Vec::new())];
    while let Some((rest, max, cur)) = stack.pop() {
        if rest == 0 {
            let mut dim = u64::from(n) * u64::from(n);
            for (i, &k) in cur.iter().enumerate() {
                dim -= (2 * i as u64 + 1) * u64::from(k);
            }
            alphabet.push((cur, dim / 2));
            continue;
        }
        for k in 1..=rest.min(max) {
            let mut next = cur.clone();
            next.push(k);
            stack.push((rest - k, k, next));
        }
    }
    if exclude_trivial {
        alphabet.retain(|(p, _)| p[0] > 1);
    }
    let target = u64::from(n) * u64::from(n - 1) / 2;
    let mut out = Vec::new();
    let total = alphabet.len().pow(l as u32);
    for code in 0..total {
        let mut c = code;
        let mut pick = Vec::new();
        let mut sum = 0;
        for _ in 0..l {
            let (p, d) = &alphabet[c % alphabet.len()];
            c /= alphabet.len();
            pick.push(p.clone());
            sum += d;
        }
        if sum == target {
            pick.sort_by(|a, b| b.cmp(a));
            out.push(pick);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn solve(n: u32, l: usize, exclude_trivial: bool) -> Vec<Vec<Vec<u32>>> {
    let opts = SolveOptions {
        exclude_trivial,
        ..SolveOptions::default()
    };
    let mut got: Vec<Vec<Vec<u32>>> = enumerate_orbit_solutions(n, l, &opts)
        .unwrap()
        .into_iter()
        .map(|s| {
            let mut v: Vec<Vec<u32>> = s.iter().map(|p| p.parts().to_vec()).collect();
            v.sort_by(|a, b| b.cmp(a));
            v
        })
        .collect();
    let len = got.len();
    got.sort();
    got.dedup();
    assert_eq!(got.len(), len, "duplicate solutions for n = {n}, l = {l}");
    got
}

#[test]
fn solver_matches_brute_force() {
    for n in 2..=6 {
        for l in 1..=3 {
            for exclude in [false, true] {
                assert_eq!(solve(n, l, exclude), brute_force(n, l, exclude), "n = {n}, l = {l}");
            }
        }
    }
}

#[test]
fn solver_small_cases() {
    assert_eq!(solve(3, 2, false), vec![vec![vec![3], vec![1, 1, 1]]]);
    let mut four = solve(4, 2, false);
    four.sort();
    assert_eq!(
        four,
        vec![vec![vec![2, 1, 1], vec![2, 1, 1]], vec![vec![4], vec![1, 1, 1, 1]]]
    );
}

#[test]
fn solver_order_is_canonical() {
    let opts = SolveOptions::default();
    let a = enumerate_orbit_solutions(6, 3, &opts).unwrap();
    let b = enumerate_orbit_solutions(6, 3, &opts).unwrap();
    assert_eq!(a, b);
    let mut sorted = a.clone();
    sorted.sort_by(|x, y| {
        let key = |s: &Vec<Partition>| s.iter().map(|p| std::cmp::Reverse(p.clone())).collect::<Vec<_>>();
        key(x).cmp(&key(y))
    });
    assert_eq!(a, sorted);
}

#[test]
fn reduction_identity() {
    for n in 2..=1000u64 {
        assert_eq!((n * n - 1) - n * (n - 1) / 2 - (n - 1), n * (n - 1) / 2);
        let r = reduce_to_whittaker_form(n as u32).unwrap();
        assert_eq!(r.cuspidal_dim, n * (n - 1) / 2);
        assert_eq!(r.min_eisenstein_dim, n - 1);
        assert_eq!(r.residual_rhs, whittaker_target(n as u32));
    }
}

#[test]
fn minimal_eisenstein_invariants() {
    for n in 2..=50u32 {
        let e = RepDescriptor::minimal_eisenstein(n);
        let mut expect = vec![2];
        expect.extend(std::iter::repeat_n(1, n as usize - 2));
        assert_eq!(e.attached_orbit().parts(), expect.as_slice());
        assert_eq!(e.dim(), u64::from(n - 1));
        assert_eq!(e.structural_dim(), u64::from(n - 1));
    }
}

#[test]
fn full_and_whittaker_forms() {
    let spec = IntegralSpec::new(
        5,
        vec![RepDescriptor::generic(5), RepDescriptor::minimal_eisenstein(5), RepDescriptor::generic(5)],
    )
    .unwrap();
    let full = check_dim_equation_full(&spec);
    assert_eq!((full.lhs, full.rhs), (24, 24));
    assert!(full.holds);
    let w = check_dim_equation(&spec).unwrap();
    assert_eq!((w.lhs, w.rhs, w.slack), (24, 10, -14));
}

/// Eisenstein descriptors on `GL_n` with constituents drawn from generic,
/// trivial, rectangular and explicit-orbit data.
fn eisenstein_strategy(max_n: u32) -> impl Strategy<Value = RepDescriptor> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let blocks: Vec<Partition> = partitions(n, None).filter(|p| p.len() >= 2).collect();
            (0..blocks.len()).prop_map(move |i| blocks[i].parts().to_vec())
        })
        .prop_flat_map(|blocks| {
            let picks: Vec<_> = blocks.iter().map(|&m| constituent(m)).collect();
            (Just(blocks), picks)
        })
        .prop_map(|(blocks, constituents)| RepDescriptor::eisenstein(blocks, constituents).unwrap())
}

fn constituent(m: u32) -> impl Strategy<Value = RepDescriptor> {
    let orbits: Vec<Partition> = partitions(m, None).collect();
    let divisors: Vec<u32> = (1..=m).filter(|p| m.is_multiple_of(*p)).collect();
    prop_oneof![
        Just(RepDescriptor::generic(m)),
        Just(RepDescriptor::trivial(m)),
        (0..divisors.len()).prop_map(move |i| RepDescriptor::speh(divisors[i], m / divisors[i])),
        (0..orbits.len()).prop_map(move |i| RepDescriptor::orbit(orbits[i].clone())),
    ]
}

proptest! {
    #[test]
    fn eisenstein_dimension_is_levi_plus_radical(e in eisenstein_strategy(12)) {
        let RepDescriptor::Eisenstein { blocks, constituents } = &e else { unreachable!() };
        let levi: u64 = constituents.iter().map(RepDescriptor::dim).sum();
        prop_assert_eq!(e.dim(), levi + unipotent_radical_dim(blocks));
        prop_assert_eq!(e.structural_dim(), e.dim());
    }

    #[test]
    fn eisenstein_orbit_length_is_max_constituent_length(e in eisenstein_strategy(12)) {
        let RepDescriptor::Eisenstein { constituents, .. } = &e else { unreachable!() };
        let longest = constituents.iter().map(|c| c.attached_orbit().len()).max().unwrap();
        prop_assert_eq!(e.attached_orbit().len(), longest);
        prop_assert_eq!(e.attached_orbit().n(), e.rank());
    }
}

#[test]
fn speh_induced_orbits_are_short() {
    // first constituent (p^q) with p ≥ 2, every other constituent arbitrary
    for n in 2..=12u32 {
        for blocks in partitions(n, None).filter(|p| p.len() >= 2) {
            let m1 = blocks.parts()[0];
            let rest: Vec<Vec<Partition>> = blocks.parts()[1..].iter().map(|&m| partitions(m, None).collect()).collect();
            for p in (2..=m1).filter(|p| m1 % p == 0) {
                let mut idx = vec![0usize; rest.len()];
                loop {
                    let mut constituents = vec![RepDescriptor::speh(p, m1 / p)];
                    constituents.extend(idx.iter().zip(&rest).map(|(&i, r)| RepDescriptor::orbit(r[i].clone())));
                    let e = RepDescriptor::eisenstein(blocks.parts().to_vec(), constituents).unwrap();
                    assert!(2 * e.attached_orbit().len() as u32 <= n, "{e:?}");
                    let Some(k) = (0..idx.len()).find(|&k| idx[k] + 1 < rest[k].len()) else {
                        break;
                    };
                    idx[k] += 1;
                    idx[..k].iter_mut().for_each(|i| *i = 0);
                }
            }
        }
    }
}
