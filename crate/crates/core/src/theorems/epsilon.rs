//! Fourier coefficients along `ψ_{U,ε}` with many nonzero flags lie above
//! or beside the rectangular orbit `(p^q)`.

use alloc::format;
use alloc::vec::Vec;

use super::report::{params, Counterexample, Statement, Tally, VerificationReport};
use super::Verifier;
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::partition::{Dominance, EpsilonVector, Partition};

/// Largest rank searched exhaustively.
pub const MAX_EPSILON_RANK: u32 = 30;

const CHUNK_BITS: u32 = 12;

impl<E: Executor> Verifier<E> {
    pub fn epsilon_orbit(&self, n: u32, p: u32, q: u32) -> Result<VerificationReport> {
        if p < 2 || q == 0 || p.checked_mul(q) != Some(n) {
            return Err(Error::invalid(format!(
                "epsilon orbit needs n = p·q with p ≥ 2, got n = {n}, p = {p}, q = {q}"
            )));
        }
        if n > MAX_EPSILON_RANK {
            return Err(Error::limit(format!(
                "2^{} epsilon vectors exceed the bound n ≤ {MAX_EPSILON_RANK}",
                n - 1
            )));
        }
        let rect = Partition::rectangle(p, q);
        let need = (n - q + 1) as usize;
        let bits = n - 1;
        let chunk_bits = CHUNK_BITS.min(bits);
        let chunks = 1usize << (bits - chunk_bits);

        let mut head = Tally::new(self.cap);
        let zeros: Vec<u32> = (1..q).map(|i| i * p).collect();
        let boundary = EpsilonVector::with_zeros(n, &zeros)?;
        let bp = boundary.partition();
        head.check(boundary.nonzero_count() == (n - q) as usize && bp == rect, || {
            Counterexample::new()
                .input("epsilon", format!("{boundary}"))
                .input("check", "zeros at multiples of p give (p^q)")
                .computed("partition", &bp)
        });

        let tally = self
            .exec
            .map(chunks, |c| {
                let mut t = Tally::new(self.cap);
                let base = (c as u64) << chunk_bits;
                for low in 0..1u64 << chunk_bits {
                    let mask = base | low;
                    if (mask.count_ones() as usize) < need {
                        continue;
                    }
                    let e = EpsilonVector::from_bits(n, mask).unwrap();
                    let lam = e.partition();
                    let rel = lam.compare_unchecked(&rect);
                    t.check(matches!(rel, Dominance::Greater | Dominance::Incomparable), || {
                        Counterexample::new()
                            .input("epsilon", format!("{e}"))
                            .computed("partition", &lam)
                            .computed("relation", format!("{rel:?}"))
                    });
                }
                t
            })
            .into_iter()
            .fold(head, Tally::merge);
        Ok(tally.into_report(
            Statement::EpsilonOrbit,
            params([
                ("n", n.into()),
                ("p", p.into()),
                ("q", q.into()),
                ("min_nonzero", need.into()),
            ]),
            false,
        ))
    }
}
