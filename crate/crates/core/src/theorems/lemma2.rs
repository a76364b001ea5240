//! The length/dimension inequality: for `μ ⊢ n` with `μ^t = (m_1 … m_r)` and
//! any `λ ⊢ n` of length at most `n − m_1 + 1`,
//! `dim λ + dim μ > n² − n`.

use alloc::format;
use alloc::vec::Vec;

use super::report::{params, Counterexample, Param, Statement, Tally, VerificationReport};
use super::Verifier;
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::partition::{partitions, Partition};

/// `I = n + Σ_{i<j} m_i m_j − Σ_i i·k_i` where `λ = (k_i)` and `μ^t = (m_i)`.
///
/// `2I = dim λ + dim μ − (n² − n)`, so `I > 0` is the inequality above.
pub fn lemma2_i(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::invalid("lambda and mu must partition the same n"));
    }
    if mu.is_empty() || mu.is_zero_orbit() {
        return Err(Error::invalid("mu must be a nontrivial partition"));
    }
    Ok(i_unchecked(lambda, &mu.transpose_unchecked()))
}

fn i_unchecked(lambda: &Partition, mu_t: &Partition) -> i64 {
    let weighted: i64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &k)| (i as i64 + 1) * i64::from(k))
        .sum();
    i64::from(lambda.n()) + mu_t.pair_product_sum() as i64 - weighted
}

/// A partition `(a^{p_1} (a−1)^{p_2})` that every orbit with largest part
/// below `m_1` and length at most `n − m_1 + 1` dominates.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Lemma2Case {
    pub a: u32,
    pub p1: u32,
    pub p2: u32,
    pub partition: Partition,
}

/// All `(a, p_1, p_2)` with `2 ≤ a ≤ m_1`, `p_1 + p_2 = n − m_1 + 1`,
/// `a p_1 + (a−1) p_2 = n`, inside the admissible window
/// `(a m_1 − (a+1))/(a−1) < n ≤ ((a−1) m_1 − a)/(a−2)` for `a > 2`,
/// `n ≥ 2 m_1 − 2` for `a = 2`.
pub fn lemma2_reduction_cases(n: u32, m1: u32) -> Result<Vec<Lemma2Case>> {
    if m1 < 2 || m1 > n {
        return Err(Error::invalid(format!("m_1 must lie in [2, n], got m_1 = {m1}, n = {n}")));
    }
    let (n, m1) = (i64::from(n), i64::from(m1));
    let len = n - m1 + 1;
    let mut cases = Vec::new();
    for a in 2..=m1 {
        let p1 = n - (a - 1) * len;
        if p1 < 0 || p1 > len {
            continue;
        }
        let p2 = len - p1;
        if !in_window(n, m1, a) {
            continue;
        }
        let mut parts = alloc::vec![a as u32; p1 as usize];
        parts.extend(core::iter::repeat_n((a - 1) as u32, p2 as usize));
        cases.push(Lemma2Case {
            a: a as u32,
            p1: p1 as u32,
            p2: p2 as u32,
            partition: Partition::new(parts).expect("weakly decreasing by construction"),
        });
    }
    Ok(cases)
}

fn in_window(n: i64, m1: i64, a: i64) -> bool {
    if a == 2 {
        n >= 2 * m1 - 2
    } else {
        // (a m_1 − a − 1)/(a−1) < n  and  n ≤ ((a−1) m_1 − a)/(a−2)
        a * m1 - a - 1 < (a - 1) * n && (a - 2) * n <= (a - 1) * m1 - a
    }
}

/// Integer window of `n` for the pair `(a, m_1)`, `a ≥ 3`.
fn window(m1: i64, a: i64) -> (i64, i64) {
    let lo = (a * m1 - a - 1).div_euclid(a - 1) + 1;
    let hi = ((a - 1) * m1 - a).div_euclid(a - 2);
    (lo, hi)
}

struct Entry {
    orbit: Partition,
    dim: i64,
}

fn table(n: u32) -> Vec<Entry> {
    partitions(n, None)
        .map(|p| Entry {
            dim: p.orbit_dim() as i64,
            orbit: p,
        })
        .collect()
}

impl<E: Executor> Verifier<E> {
    /// Exhaustive check of `dim λ + dim μ > n² − n` over all `μ` with
    /// `2 ≤ m_1 ≤ n − 1` and all admissible `λ`.
    ///
    /// `μ = (1ⁿ)` is the trivial partition. `μ = (n)` has `m_1 = 1`, every
    /// `λ` is admissible, and `λ = (1ⁿ)` gives equality; it is outside the
    /// range `m_1 ≥ 2` that the reduction to `(a^{p_1}(a−1)^{p_2})` covers and
    /// is reported in the parameters instead.
    pub fn lemma2(&self, n: u32) -> Result<VerificationReport> {
        if n < 2 {
            return Err(Error::invalid("lemma2 needs n ≥ 2"));
        }
        let all = table(n);
        let bound = i64::from(n) * i64::from(n) - i64::from(n);
        let mus: Vec<&Entry> = all
            .iter()
            .filter(|e| e.orbit.len() >= 2 && !e.orbit.is_zero_orbit())
            .collect();
        let tally = self
            .exec
            .map(mus.len(), |i| {
                let mu = mus[i];
                let max_len = n as usize - mu.orbit.len() + 1;
                let mut t = Tally::new(self.cap);
                for lam in all.iter().filter(|e| e.orbit.len() <= max_len) {
                    t.check(lam.dim + mu.dim > bound, || {
                        Counterexample::new()
                            .input("mu", &mu.orbit)
                            .input("lambda", &lam.orbit)
                            .computed("dim_lambda", lam.dim)
                            .computed("dim_mu", mu.dim)
                            .computed("bound", bound)
                    });
                }
                t
            })
            .into_iter()
            .fold(Tally::new(self.cap), Tally::merge);
        Ok(tally.into_report(
            Statement::Lemma2,
            params([
                ("n", n.into()),
                ("mu_checked", mus.len().into()),
                (
                    "excluded_mu",
                    "(1^n) is trivial; (n) has m_1 = 1 and meets the bound with equality at lambda = (1^n)".into(),
                ),
            ]),
            false,
        ))
    }

    /// Checks the reduction behind the lemma for every `2 ≤ m_1 ≤ n`:
    ///
    /// 1. every reduction case and the hook `(m_1 1^{n−m_1})` give `I > 0`
    ///    against every nontrivial `μ` with `(μ^t)_1 = m_1`, and the closed
    ///    forms of `I` for these cases agree with the direct sum;
    /// 2. every `λ` of length at most `n − m_1 + 1` dominates the hook (when
    ///    `k_1 ≥ m_1`) or some reduction case (when `k_1 < m_1`);
    /// 3. for `a ≥ 3` with `n` inside the `(a, m_1)` window,
    ///    `(3a−4) n ≥ (3a−2)(m_1−1)`.
    ///
    /// For item 3 the intermediate bound `(a m_1 − (a+1))/(a−1) ≥
    /// (3a−2)(m_1−1)/(3a−4)` is also evaluated over every nonempty window;
    /// pairs where it fails as a rational inequality are listed under
    /// `rational_side_gaps` without counting as counterexamples.
    pub fn lemma2_reduction(&self, n: u32) -> Result<VerificationReport> {
        if n < 2 {
            return Err(Error::invalid("lemma2_reduction needs n ≥ 2"));
        }
        let all = table(n);
        let jobs: Vec<u32> = (2..=n).collect();
        let shards = self.exec.map(jobs.len(), |i| self.reduction_for(n, jobs[i], &all));

        let mut tally = Tally::new(self.cap);
        let mut in_window = 0i64;
        let mut out_of_window = 0i64;
        let mut gaps = Vec::new();
        for shard in shards {
            let shard = shard?;
            tally = tally.merge(shard.tally);
            in_window += shard.in_window;
            out_of_window += shard.out_of_window;
            gaps.extend(shard.gaps);
        }
        Ok(tally.into_report(
            Statement::Lemma2Reduction,
            params([
                ("n", n.into()),
                ("in_window_checks", in_window.into()),
                ("out_of_window_pairs", out_of_window.into()),
                ("rational_side_gaps", Param::List(gaps)),
            ]),
            false,
        ))
    }

    fn reduction_for(&self, n: u32, m1: u32, all: &[Entry]) -> Result<ReductionShard> {
        let mut t = Tally::new(self.cap);
        let len = (n - m1 + 1) as usize;
        let cases = lemma2_reduction_cases(n, m1)?;
        let hook = Partition::hook(n, m1);
        let (ni, m1i) = (i64::from(n), i64::from(m1));

        // (1) I > 0 on the reduction cases and the hook.
        for mu in all.iter().filter(|e| e.orbit.len() == m1 as usize && !e.orbit.is_zero_orbit()) {
            let mu_t = mu.orbit.transpose_unchecked();
            let pairs = mu_t.pair_product_sum() as i64;
            let tail_pairs = pairs - m1i * (ni - m1i);
            for (label, lambda) in cases.iter().map(|c| ("case", &c.partition)).chain([("hook", &hook)]) {
                let i = i_unchecked(lambda, &mu_t);
                t.check(i > 0, || {
                    Counterexample::new()
                        .input("check", "I > 0")
                        .input("shape", label)
                        .input("mu", &mu.orbit)
                        .input("lambda", lambda)
                        .computed("I", i)
                });
            }
            for case in &cases {
                let i = i_unchecked(&case.partition, &mu_t);
                let (a, p1, l) = (i64::from(case.a), i64::from(case.p1), len as i64);
                let tail: i64 = (p1 + 1..=l).sum();
                let twice_i = 2 * ni + 2 * pairs + 2 * tail - a * l * (l + 1);
                t.check(twice_i == 2 * i, || closed_form_cx("I via a, p_1, p_2", &mu.orbit, case, i, twice_i));
                if case.p2 == 0 {
                    let twice_i = 2 * pairs + ni * m1i - ni * ni;
                    t.check(twice_i == 2 * i, || closed_form_cx("I for p_2 = 0", &mu.orbit, case, i, twice_i));
                }
                if case.a == 2 {
                    let twice_i = 2 * tail_pairs + 4 * m1i * ni + 4 * m1i - (ni * ni + ni) - 4 * m1i * m1i - 2;
                    t.check(twice_i == 2 * i, || closed_form_cx("I for a = 2", &mu.orbit, case, i, twice_i));
                }
            }
        }

        // (2) coverage by dominance.
        for lam in all.iter().filter(|e| e.orbit.len() <= len) {
            if lam.orbit.first() >= m1 {
                t.check(lam.orbit.dominates(&hook), || {
                    Counterexample::new()
                        .input("check", "lambda >= hook")
                        .input("m1", m1)
                        .input("lambda", &lam.orbit)
                        .computed("hook", &hook)
                });
            } else {
                t.check(cases.iter().any(|c| lam.orbit.dominates(&c.partition)), || {
                    Counterexample::new()
                        .input("check", "lambda >= some reduction case")
                        .input("m1", m1)
                        .input("lambda", &lam.orbit)
                        .computed("cases", cases.len())
                });
            }
        }

        // (3) side inequality for a ≥ 3.
        let mut shard = ReductionShard::default();
        for a in 3..=m1i {
            let (lo, hi) = window(m1i, a);
            if lo > hi {
                continue;
            }
            let rational_ok = (a * m1i - a - 1) * (3 * a - 4) >= (3 * a - 2) * (m1i - 1) * (a - 1);
            if !rational_ok {
                shard.gaps.push(Param::Ints(alloc::vec![a, m1i]));
            }
            if (lo..=hi).contains(&ni) {
                shard.in_window += 1;
                t.check((3 * a - 4) * ni >= (3 * a - 2) * (m1i - 1), || {
                    Counterexample::new()
                        .input("check", "(3a-4) n >= (3a-2)(m1-1)")
                        .input("a", a)
                        .input("m1", m1)
                        .computed("lhs", (3 * a - 4) * ni)
                        .computed("rhs", (3 * a - 2) * (m1i - 1))
                });
            } else {
                shard.out_of_window += 1;
            }
        }
        shard.tally = t;
        Ok(shard)
    }
}

#[derive(Default)]
struct ReductionShard {
    tally: Tally,
    in_window: i64,
    out_of_window: i64,
    gaps: Vec<Param>,
}

fn closed_form_cx(check: &str, mu: &Partition, case: &Lemma2Case, i: i64, twice: i64) -> Counterexample {
    Counterexample::new()
        .input("check", check)
        .input("mu", mu)
        .input("lambda", &case.partition)
        .computed("I", i)
        .computed("twice_closed_form", twice)
}
