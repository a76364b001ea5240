//! Decides whether the proved results force a global integral to vanish.
//!
//! Every positive verdict re-checks its hypotheses on the concrete spec; a
//! shape that matches no pattern, or matches one whose inequalities fail,
//! yields [`Verdict::NotConcluded`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::unfolding::{check_corollary1, residual_bound};
use crate::equation::{check_dim_equation, whittaker_target, EquationReport};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::representation::{unipotent_radical_dim, IntegralSpec, RepDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum VanishingResult {
    Prop1,
    Prop4,
    Prop5,
    Cor1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum EquationResult {
    Lemma1,
    Prop3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Relation {
    #[cfg_attr(feature = "serde", serde(rename = ">="))]
    Ge,
    #[cfg_attr(feature = "serde", serde(rename = ">"))]
    Gt,
    #[cfg_attr(feature = "serde", serde(rename = "<="))]
    Le,
    #[cfg_attr(feature = "serde", serde(rename = "=="))]
    Eq,
}

/// One verified inequality `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub label: String,
    pub lhs: i64,
    pub rhs: i64,
    pub relation: Relation,
    pub holds: bool,
}

impl Check {
    fn new(label: &str, lhs: i64, relation: Relation, rhs: i64) -> Self {
        let holds = match relation {
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        };
        Check {
            label: label.into(),
            lhs,
            rhs,
            relation,
            holds,
        }
    }
}

/// The data a verdict rests on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub equation: Option<EquationReport>,
    pub checks: Vec<Check>,
    /// 0-based indices of the representations the pattern matched.
    pub representations: Vec<usize>,
}

impl Witness {
    fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(tag = "verdict", rename_all = "snake_case")
)]
pub enum Verdict {
    Vanishes { by: VanishingResult, witness: Witness },
    EquationFails {
        by: EquationResult,
        equation_report: EquationReport,
        witness: Witness,
    },
    NotApplicable { reason: String },
    NotConcluded { reason: String },
}

impl Verdict {
    pub fn vanishes(&self) -> bool {
        matches!(self, Verdict::Vanishes { .. })
    }
}

fn top_blocks(reps: &[(usize, &RepDescriptor)]) -> Option<Vec<u32>> {
    reps.iter().map(|(_, r)| r.top_trivial_block()).collect()
}

fn block_cost(n: i64, ms: &[u32]) -> i64 {
    ms.iter().map(|&m| i64::from(m) * (n - i64::from(m))).sum()
}

fn failure(pattern: &str, w: &Witness) -> String {
    match w.first_failure() {
        Some(c) => format!("{pattern}: {} fails ({} vs {})", c.label, c.lhs, c.rhs),
        None => format!("{pattern}: hypotheses do not match"),
    }
}

/// An Eisenstein series whose first constituent has a rectangular orbit
/// `(p^q)` with `p ≥ 2`.
fn speh_induced(rep: &RepDescriptor) -> bool {
    rep.first_constituent()
        .and_then(|c| c.attached_orbit().as_rectangle())
        .is_some_and(|(p, _)| p >= 2)
}

pub fn vanishing_verdict(spec: &IntegralSpec) -> Result<Verdict> {
    let n = spec.n();
    let l = spec.len();
    if l < 2 {
        return Err(Error::invalid("representations: the verdict engine needs l ≥ 2"));
    }
    let eq = check_dim_equation(spec)?;
    let reps = spec.reps();
    let ni = i64::from(n);
    let target = whittaker_target(n) as i64;

    let speh: Vec<usize> = (0..l).filter(|&i| reps[i].is_speh_type()).collect();
    if speh.len() >= 2 {
        let (a, b) = (speh[0], speh[1]);
        let pair = (reps[a].dim() + reps[b].dim()) as i64;
        let witness = Witness {
            equation: Some(eq),
            checks: alloc::vec![
                Check::new("rectangular pair dimension", pair, Relation::Gt, target),
                Check::new("dimension sum", eq.lhs, Relation::Gt, eq.rhs),
            ],
            representations: alloc::vec![a, b],
        };
        if witness.all_hold() {
            return Ok(Verdict::EquationFails {
                by: EquationResult::Lemma1,
                equation_report: eq,
                witness,
            });
        }
        return Ok(Verdict::NotConcluded {
            reason: failure("lemma1", &witness),
        });
    }

    if !eq.holds {
        if l == 2 && reps.iter().any(speh_induced) {
            let other_ok = reps.iter().all(|r| speh_induced(r) || r.is_speh_type());
            if other_ok {
                let half = i64::from(n / 2);
                let mut checks: Vec<Check> = reps
                    .iter()
                    .map(|r| Check::new("orbit length", r.attached_orbit().len() as i64, Relation::Le, half))
                    .collect();
                checks.push(Check::new("dimension sum", eq.lhs, Relation::Gt, eq.rhs));
                let witness = Witness {
                    equation: Some(eq),
                    checks,
                    representations: alloc::vec![0, 1],
                };
                if witness.all_hold() {
                    return Ok(Verdict::EquationFails {
                        by: EquationResult::Prop3,
                        equation_report: eq,
                        witness,
                    });
                }
            }
        }
        return Ok(Verdict::NotApplicable {
            reason: format!(
                "dimension equation fails: sum of dimensions {} vs n(n-1)/2 = {}",
                eq.lhs, eq.rhs
            ),
        });
    }

    if l == 2 {
        return Ok(prop1(n, spec, eq));
    }

    let indexed: Vec<(usize, &RepDescriptor)> = reps.iter().enumerate().collect();
    let mut failures = Vec::new();

    match top_blocks(&indexed) {
        Some(ms) => {
            let sum: i64 = ms.iter().map(|&m| i64::from(m)).sum();
            let threshold = ni * (l as i64 - 1) + 2;
            let cor = check_corollary1(n, l as u32, &ms)?;
            let residual = residual_bound(n, &ms)?;
            let witness = Witness {
                equation: Some(eq),
                checks: alloc::vec![
                    Check::new("sum of top trivial blocks", sum, Relation::Ge, threshold),
                    Check::new("residual nontrivial simple roots", residual, Relation::Ge, 1),
                ],
                representations: (0..l).collect(),
            };
            if cor && witness.all_hold() {
                return Ok(Verdict::Vanishes {
                    by: VanishingResult::Cor1,
                    witness,
                });
            }
            failures.push(failure("cor1", &witness));
        }
        None => failures.push("cor1: not every representation is Eisenstein with a trivial top block".into()),
    }

    for k in (0..l).rev() {
        let others: Vec<(usize, &RepDescriptor)> = indexed.iter().copied().filter(|&(i, _)| i != k).collect();
        let Some(ms) = top_blocks(&others) else {
            continue;
        };
        if ms.iter().any(|&m| 2 * m <= n) {
            failures.push(format!("representation {k}: some other top trivial block is at most n/2"));
            continue;
        }
        let sum: i64 = ms.iter().map(|&m| i64::from(m)).sum();
        let cost = block_cost(ni, &ms);
        let last = &reps[k];
        let mut matched: Vec<usize> = others.iter().map(|&(i, _)| i).collect();
        matched.push(k);

        if let Some(mj) = last.trivial_blocks().iter().filter_map(|&j| last.trivial_block_at(j)).max() {
            if 2 * mj <= n {
                failures.push(format!(
                    "prop4 domain: largest trivial block {mj} of representation {k} is at most n/2"
                ));
                continue;
            }
            let mj64 = i64::from(mj);
            let witness = Witness {
                equation: Some(eq),
                checks: alloc::vec![
                    Check::new("twice block cost", 2 * (cost + mj64 * (ni - mj64)), Relation::Le, 2 * target),
                    Check::new("sum of trivial blocks", sum + mj64, Relation::Ge, ni * (l as i64 - 1) + 2),
                ],
                representations: matched,
            };
            if witness.all_hold() {
                return Ok(Verdict::Vanishes {
                    by: VanishingResult::Prop4,
                    witness,
                });
            }
            failures.push(failure("prop4", &witness));
        } else if let Some((p, q)) = last.attached_orbit().as_rectangle().filter(|&(p, _)| p >= 2) {
            let residual = residual_bound(n, &ms)?;
            let witness = Witness {
                equation: Some(eq),
                checks: alloc::vec![
                    Check::new("residual nontrivial simple roots", residual, Relation::Ge, ni - i64::from(q) + 1),
                    Check::new("twice block cost", 2 * cost, Relation::Le, ni * (i64::from(q) - 1)),
                ],
                representations: matched,
            };
            if witness.all_hold() {
                return Ok(Verdict::Vanishes {
                    by: VanishingResult::Prop5,
                    witness,
                });
            }
            failures.push(failure(&format!("prop5 ({p}^{q})"), &witness));
        }
    }

    Ok(Verdict::NotConcluded {
        reason: if failures.is_empty() {
            "no vanishing pattern matches".into()
        } else {
            failures.join("; ")
        },
    })
}

/// Two representations, one an Eisenstein series with trivial top block `m_1`.
/// Every coefficient left after unfolding has orbit of length at most
/// `n − m_1 + 1`; the smallest such orbit together with `dim U(Q)` already
/// overshoots.
fn prop1(n: u32, spec: &IntegralSpec, eq: EquationReport) -> Verdict {
    let reps = spec.reps();
    let Some((i, m1)) = reps.iter().enumerate().find_map(|(i, r)| Some((i, r.top_trivial_block()?))) else {
        return Verdict::NotConcluded {
            reason: "prop1: no Eisenstein series with a trivial top block".into(),
        };
    };
    let e = &reps[i];
    let len = (n - m1 + 1).min(n);
    let lambda = Partition::balanced(n, len);
    let target = whittaker_target(n) as i64;
    let witness = Witness {
        equation: Some(eq),
        checks: alloc::vec![
            Check::new("parabolic dimension", e.structural_dim() as i64, Relation::Eq, e.dim() as i64),
            Check::new(
                "shortest coefficient orbit plus unipotent radical",
                (lambda.rep_dim() + unipotent_radical_dim(e.blocks().unwrap_or(&[]))) as i64,
                Relation::Gt,
                target,
            ),
        ],
        representations: alloc::vec![i],
    };
    if witness.all_hold() {
        Verdict::Vanishes {
            by: VanishingResult::Prop1,
            witness,
        }
    } else {
        Verdict::NotConcluded {
            reason: failure("prop1", &witness),
        }
    }
}
