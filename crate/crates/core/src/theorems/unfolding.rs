//! Bookkeeping of the simple roots on which the character stays nontrivial
//! after unfolding `k` Eisenstein series with trivial top blocks.

use alloc::format;
use alloc::vec::Vec;

use super::report::{params, Counterexample, Statement, Tally, VerificationReport};
use super::Verifier;
use crate::error::{Error, Result};
use crate::exec::Executor;

fn check_blocks(n: u32, ms: &[u32]) -> Result<()> {
    if ms.is_empty() {
        return Err(Error::invalid("blocks: at least one block is required"));
    }
    if let Some(m) = ms.iter().find(|&&m| m == 0 || m >= n) {
        return Err(Error::invalid(format!("blocks: {m} outside 1..={}", n.saturating_sub(1))));
    }
    Ok(())
}

/// `Σ m − (k−1) n − 1` for `k` blocks.
pub fn residual_bound(n: u32, ms: &[u32]) -> Result<i64> {
    check_blocks(n, ms)?;
    let sum: i64 = ms.iter().map(|&m| i64::from(m)).sum();
    Ok(sum - (ms.len() as i64 - 1) * i64::from(n) - 1)
}

/// `r_1 = m_1 − 1`, `r_{j+1} = r_j − (n − m_{j+1})`.
pub fn residual_steps(n: u32, ms: &[u32]) -> Result<Vec<i64>> {
    check_blocks(n, ms)?;
    let n = i64::from(n);
    let mut steps = Vec::with_capacity(ms.len());
    let mut r = i64::from(ms[0]) - 1;
    steps.push(r);
    for &m in &ms[1..] {
        r -= n - i64::from(m);
        steps.push(r);
    }
    Ok(steps)
}

/// `Σ m ≥ n(l−1) + 2` over the `l` top blocks.
pub fn check_corollary1(n: u32, l: u32, ms: &[u32]) -> Result<bool> {
    if l < 2 || ms.len() != l as usize {
        return Err(Error::invalid(format!(
            "blocks: expected l = {l} ≥ 2 blocks, got {}",
            ms.len()
        )));
    }
    check_blocks(n, ms)?;
    let sum: i64 = ms.iter().map(|&m| i64::from(m)).sum();
    Ok(sum >= i64::from(n) * (i64::from(l) - 1) + 2)
}

/// Calls `f` on every tuple in `1..n` of length `len`.
fn for_each_tuple(n: u32, len: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if buf.len() == len {
        f(buf);
        return;
    }
    for m in 1..n {
        buf.push(m);
        for_each_tuple(n, len, buf, f);
        buf.pop();
    }
}

impl<E: Executor> Verifier<E> {
    /// Over every ordered block tuple of length `1..=max_len`: the closed
    /// form matches the recursion, appending a block `m` moves the bound by
    /// `m − n`, and for length `≥ 2` the corollary condition holds exactly
    /// when the final residual is at least one.
    pub fn cor1_bookkeeping(&self, n: u32, max_len: u32) -> Result<VerificationReport> {
        if n < 2 || max_len == 0 {
            return Err(Error::invalid("cor1 bookkeeping needs n ≥ 2 and max_len ≥ 1"));
        }
        let total = (1..=max_len).try_fold(0u64, |acc, k| {
            u64::from(n - 1).checked_pow(k).and_then(|c| acc.checked_add(c))
        });
        if total.is_none_or(|t| t > 50_000_000) {
            return Err(Error::limit(format!(
                "{}^k tuples for k ≤ {max_len} exceed the search bound",
                n - 1
            )));
        }
        let firsts: Vec<u32> = (1..n).collect();
        let tally = self
            .exec
            .map(firsts.len(), |i| {
                let mut t = Tally::new(self.cap);
                for len in 1..=max_len as usize {
                    let mut buf = alloc::vec![firsts[i]];
                    for_each_tuple(n, len, &mut buf, &mut |ms| {
                        let closed = residual_bound(n, ms).unwrap();
                        let steps = residual_steps(n, ms).unwrap();
                        let last = *steps.last().unwrap();
                        let mut ok = closed == last;
                        if ms.len() >= 2 {
                            let prefix = residual_bound(n, &ms[..ms.len() - 1]).unwrap();
                            let m = i64::from(*ms.last().unwrap());
                            ok &= closed - prefix == m - i64::from(n);
                            let cor = check_corollary1(n, ms.len() as u32, ms).unwrap();
                            ok &= cor == (closed >= 1);
                        }
                        t.check(ok, || {
                            Counterexample::new()
                                .input("blocks", ms)
                                .computed("closed_form", closed)
                                .computed("steps", steps.clone())
                        });
                    });
                }
                t
            })
            .into_iter()
            .fold(Tally::new(self.cap), Tally::merge);
        Ok(tally.into_report(
            Statement::Cor1Bookkeeping,
            params([("n", n.into()), ("max_len", max_len.into())]),
            false,
        ))
    }
}
