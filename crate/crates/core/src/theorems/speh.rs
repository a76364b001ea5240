//! Pairs of large orbits overshoot `½ n(n−1)`: two Speh-type orbits, or two
//! orbits of length at most `n/2`.

use alloc::vec::Vec;

use super::report::{params, Counterexample, Statement, Tally, VerificationReport};
use super::Verifier;
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::partition::{partitions, Partition};

/// Rectangular orbits `(p^q)` of `n` with `p ≥ 2`, widest first.
pub(crate) fn speh_orbits(n: u32) -> Vec<Partition> {
    (2..=n).rev().filter(|p| n.is_multiple_of(*p)).map(|p| Partition::rectangle(p, n / p)).collect()
}

impl<E: Executor> Verifier<E> {
    pub fn lemma1(&self, n: u32) -> Result<VerificationReport> {
        if n < 2 {
            return Err(Error::invalid("lemma1 needs n ≥ 2"));
        }
        let orbits = speh_orbits(n);
        let mu = Partition::mu_min(n);
        let twice_target = u64::from(n) * u64::from(n - 1);
        let mut t = Tally::new(self.cap);

        let mu_dim = mu.orbit_dim();
        t.check(2 * mu_dim > twice_target, || {
            Counterexample::new()
                .input("check", "dim mu_min > (n^2-n)/2")
                .input("mu_min", &mu)
                .computed("dim_mu_min", mu_dim)
        });
        for o in &orbits {
            t.check(o.dominates(&mu), || {
                Counterexample::new()
                    .input("check", "speh orbit >= mu_min")
                    .input("orbit", o)
                    .computed("mu_min", &mu)
            });
        }
        for (i, a) in orbits.iter().enumerate() {
            for b in &orbits[i..] {
                let sum = a.rep_dim() + b.rep_dim();
                t.check(2 * sum > twice_target, || {
                    Counterexample::new()
                        .input("check", "pair rep_dim sum > (n^2-n)/2")
                        .input("first", a)
                        .input("second", b)
                        .computed("sum", sum)
                });
            }
        }
        Ok(t.into_report(
            Statement::Lemma1,
            params([("n", n.into()), ("speh_orbits", orbits.len().into()), ("mu_min", mu.into())]),
            false,
        ))
    }

    pub fn prop3(&self, n: u32) -> Result<VerificationReport> {
        if n < 4 {
            return Err(Error::invalid("prop3 needs n ≥ 4"));
        }
        let short: Vec<(Partition, u64)> = partitions(n, Some(n as usize / 2))
            .map(|p| {
                let d = p.rep_dim();
                (p, d)
            })
            .collect();
        let mu = Partition::mu_min(n);
        let twice_target = u64::from(n) * u64::from(n - 1);
        let nn = u64::from(n) * u64::from(n);

        let mut head = Tally::new(self.cap);
        let mu_dim = mu.orbit_dim();
        head.check(2 * mu_dim + 1 >= nn, || {
            Counterexample::new()
                .input("check", "dim mu_min >= (n^2-1)/2")
                .input("mu_min", &mu)
                .computed("dim_mu_min", mu_dim)
        });

        let tally = self
            .exec
            .map(short.len(), |i| {
                let mut t = Tally::new(self.cap);
                let (a, da) = &short[i];
                t.check(a.dominates(&mu), || {
                    Counterexample::new()
                        .input("check", "orbit >= mu_min")
                        .input("orbit", a)
                        .computed("mu_min", &mu)
                });
                for (b, db) in &short[i..] {
                    t.check(2 * (da + db) > twice_target, || {
                        Counterexample::new()
                            .input("check", "pair rep_dim sum > (n^2-n)/2")
                            .input("first", a)
                            .input("second", b)
                            .computed("sum", da + db)
                    });
                }
                t
            })
            .into_iter()
            .fold(head, Tally::merge);
        Ok(tally.into_report(
            Statement::Prop3,
            params([
                ("n", n.into()),
                ("max_length", (n / 2).into()),
                ("orbits", short.len().into()),
                ("mu_min", mu.into()),
            ]),
            false,
        ))
    }
}
