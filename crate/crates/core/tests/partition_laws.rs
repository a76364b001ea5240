use gldim_core::partition::partitions;
use gldim_core::{Dominance, EpsilonVector, Partition};
use proptest::prelude::*;

/// Partitions of `n` by plain recursion, independent of the library iterator.
fn oracle_partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn oracle_transpose(parts: &[u32]) -> Vec<u32> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first).map(|c| parts.iter().filter(|&&k| k >= c).count() as u32).collect()
}

fn oracle_dominates(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

fn all(n: u32) -> Vec<Partition> {
    partitions(n, None).collect()
}

#[test]
fn enumeration_matches_recursion() {
    for n in 1..=18 {
        let lib: Vec<Vec<u32>> = partitions(n, None).map(|p| p.parts().to_vec()).collect();
        assert_eq!(lib, oracle_partitions(n), "n = {n}");
    }
}

#[test]
fn bounded_length_enumeration() {
    for n in 1..=14 {
        for len in 1..=n as usize {
            let lib: Vec<Vec<u32>> = partitions(n, Some(len)).map(|p| p.parts().to_vec()).collect();
            let expect: Vec<Vec<u32>> = oracle_partitions(n).into_iter().filter(|p| p.len() <= len).collect();
            assert_eq!(lib, expect, "n = {n}, len = {len}");
        }
    }
}

#[test]
fn dimension_duality() {
    for n in 1..=20 {
        for p in all(n) {
            let t = oracle_transpose(p.parts());
            let mut pairs = 0u64;
            for i in 0..t.len() {
                for j in i + 1..t.len() {
                    pairs += u64::from(t[i]) * u64::from(t[j]);
                }
            }
            assert_eq!(p.orbit_dim(), 2 * pairs, "{p}");
            assert_eq!(p.rep_dim(), pairs);
        }
    }
}

#[test]
fn transpose_involution() {
    for n in 1..=20 {
        for p in all(n) {
            let t = p.transpose().unwrap();
            assert_eq!(t.parts(), oracle_transpose(p.parts()).as_slice());
            assert_eq!(t.transpose().unwrap(), p);
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=10 {
        let ps = all(n);
        for a in &ps {
            assert_eq!(a.compare(a).unwrap(), Dominance::Equal);
            for b in &ps {
                let ab = a.dominates(b);
                assert_eq!(ab, oracle_dominates(a.parts(), b.parts()));
                if ab && b.dominates(a) {
                    assert_eq!(a, b);
                }
                let expect = match (ab, b.dominates(a)) {
                    (true, true) => Dominance::Equal,
                    (true, false) => Dominance::Greater,
                    (false, true) => Dominance::Less,
                    (false, false) => Dominance::Incomparable,
                };
                assert_eq!(a.compare(b).unwrap(), expect);
                if !ab {
                    continue;
                }
                for c in &ps {
                    if b.dominates(c) {
                        assert!(a.dominates(c), "{a} ≥ {b} ≥ {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn strict_dominance_increases_dimension() {
    for n in 1..=12 {
        let ps = all(n);
        for a in &ps {
            for b in &ps {
                if a.compare(b).unwrap() == Dominance::Greater {
                    assert!(a.orbit_dim() > b.orbit_dim(), "{a} > {b}");
                }
            }
        }
    }
}

#[test]
fn transpose_of_sum_is_merge_of_transposes() {
    for n1 in 1..=9 {
        for n2 in 1..=10 - n1 {
            for a in all(n1) {
                for b in all(n2) {
                    let lhs = a.add(&b).transpose().unwrap();
                    let rhs = a.transpose().unwrap().merge(&b.transpose().unwrap());
                    assert_eq!(lhs, rhs, "{a} + {b}");
                }
            }
        }
    }
}

#[test]
fn hook_dominates_long_partitions() {
    // every partition with first part at least m is at least the hook (m, 1^{n−m})
    for n in 2..=16 {
        for m in 1..=n {
            let hook = Partition::hook(n, m);
            for p in all(n).into_iter().filter(|p| p.first() >= m) {
                assert!(p.dominates(&hook), "{p} vs {hook}");
            }
        }
    }
}

#[test]
fn balanced_is_minimum_of_bounded_length() {
    for n in 1..=14 {
        for len in 1..=n {
            let b = Partition::balanced(n, len);
            for p in partitions(n, Some(len as usize)) {
                assert!(p.dominates(&b), "{p} vs {b}");
            }
        }
    }
}

#[test]
fn mu_min_is_minimum_of_half_length() {
    for n in 2..=16 {
        let mu = Partition::mu_min(n);
        assert_eq!(mu, Partition::balanced(n, n.div_ceil(2)));
        for p in partitions(n, Some(n as usize / 2)) {
            assert!(p.dominates(&mu));
        }
    }
}

#[test]
fn epsilon_partition_sums_to_n() {
    for n in 2..=12u32 {
        for bits in 0..1u64 << (n - 1) {
            let e = EpsilonVector::from_bits(n, bits).unwrap();
            let p = e.partition();
            assert_eq!(p.n(), n);
            assert_eq!(p.len(), n as usize - 1 - e.nonzero_count() + 1);
        }
    }
}

fn partition_strategy(max_n: u32) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let ps = all(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #[test]
    fn display_round_trips(p in partition_strategy(20)) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn orbit_dim_is_even_and_bounded(p in partition_strategy(30)) {
        let n = u64::from(p.n());
        prop_assert_eq!(p.orbit_dim() % 2, 0);
        prop_assert!(p.orbit_dim() <= n * n - n);
    }

    #[test]
    fn sum_transposes_to_merge(a in partition_strategy(12), b in partition_strategy(12)) {
        let s = a.add(&b);
        prop_assert_eq!(s.n(), a.n() + b.n());
        prop_assert_eq!(s.transpose().unwrap(), a.transpose().unwrap().merge(&b.transpose().unwrap()));
    }
}
