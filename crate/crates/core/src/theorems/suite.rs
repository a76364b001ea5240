use alloc::vec::Vec;

use super::extremal::Mode;
use super::report::VerificationReport;
use super::Verifier;
use crate::error::Result;
use crate::exec::Executor;

/// Parameter ranges for a full verification run. Ranges are inclusive
/// `(lo, hi)` pairs; an empty range (`lo > hi`) is skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SuitePlan {
    pub lemma1: (u32, u32),
    pub lemma2: (u32, u32),
    pub lemma2_reduction: (u32, u32),
    pub prop3: (u32, u32),
    pub prop4_n: (u32, u32),
    pub prop4_l: (u32, u32),
    pub prop5_n: (u32, u32),
    pub prop5_l: (u32, u32),
    /// Largest `n = pq` for the epsilon-orbit claim.
    pub epsilon_max_n: u32,
    pub cor1_n: (u32, u32),
    pub cor1_max_len: u32,
}

impl SuitePlan {
    /// The ranges of the acceptance run.
    pub fn acceptance() -> Self {
        SuitePlan {
            lemma1: (2, 60),
            lemma2: (2, 25),
            lemma2_reduction: (2, 16),
            prop3: (4, 16),
            prop4_n: (4, 40),
            prop4_l: (3, 6),
            prop5_n: (4, 40),
            prop5_l: (3, 6),
            epsilon_max_n: 14,
            cor1_n: (2, 10),
            cor1_max_len: 4,
        }
    }

    /// A plan that runs nothing; fill in the ranges wanted.
    pub fn empty() -> Self {
        SuitePlan {
            lemma1: (1, 0),
            lemma2: (1, 0),
            lemma2_reduction: (1, 0),
            prop3: (1, 0),
            prop4_n: (1, 0),
            prop4_l: (1, 0),
            prop5_n: (1, 0),
            prop5_l: (1, 0),
            epsilon_max_n: 0,
            cor1_n: (1, 0),
            cor1_max_len: 0,
        }
    }

    /// The acceptance ranges with every rank capped at `max_n`.
    pub fn up_to(max_n: u32) -> Self {
        let cap = |(lo, hi): (u32, u32)| (lo, hi.min(max_n));
        let a = Self::acceptance();
        SuitePlan {
            lemma1: cap(a.lemma1),
            lemma2: cap(a.lemma2),
            lemma2_reduction: cap(a.lemma2_reduction),
            prop3: cap(a.prop3),
            prop4_n: cap(a.prop4_n),
            prop4_l: a.prop4_l,
            prop5_n: cap(a.prop5_n),
            prop5_l: a.prop5_l,
            epsilon_max_n: a.epsilon_max_n.min(max_n),
            cor1_n: cap(a.cor1_n),
            cor1_max_len: a.cor1_max_len,
        }
    }
}

fn range((lo, hi): (u32, u32)) -> core::ops::RangeInclusive<u32> {
    lo..=hi
}

/// Runs every verifier over `plan`, in a fixed order.
pub fn verify_all<E: Executor>(plan: &SuitePlan, v: &Verifier<E>) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in range(plan.lemma2) {
        out.push(v.lemma2(n)?);
    }
    for n in range(plan.lemma2_reduction) {
        out.push(v.lemma2_reduction(n)?);
    }
    for n in range(plan.lemma1) {
        out.push(v.lemma1(n)?);
    }
    for n in range(plan.prop3) {
        out.push(v.prop3(n)?);
    }
    for n in range(plan.prop4_n) {
        for l in range(plan.prop4_l) {
            out.push(v.prop4(n, l, Mode::Paper)?);
        }
    }
    for n in range(plan.prop5_n) {
        for q in (1..=n).filter(|q| n % q == 0 && n / q >= 2) {
            for l in range(plan.prop5_l) {
                out.push(v.prop5(n, q, l)?);
            }
        }
    }
    for n in 2..=plan.epsilon_max_n {
        for p in (2..=n).filter(|p| n % p == 0) {
            out.push(v.epsilon_orbit(n, p, n / p)?);
        }
    }
    for n in range(plan.cor1_n) {
        out.push(v.cor1_bookkeeping(n, plan.cor1_max_len)?);
    }
    Ok(out)
}
