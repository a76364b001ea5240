//! Exhaustive verifiers and the vanishing-verdict engine.
//!
//! Each verifier enumerates a finite search space and reports every case
//! where the asserted inequality fails. All inequalities are decided in exact
//! integer arithmetic; the square-root closed forms are additionally
//! evaluated in floating point and cross-checked at [`FLOAT_TOLERANCE`].

mod closed_form;
mod epsilon;
pub use epsilon::MAX_EPSILON_RANK;
mod extremal;
mod lemma2;
mod report;
mod speh;
mod suite;
mod unfolding;
mod verdict;

pub use closed_form::{prop4_closed_form, prop5_closed_form, ClosedForm, FLOAT_TOLERANCE};
pub use extremal::Mode;
pub use lemma2::{lemma2_i, lemma2_reduction_cases, Lemma2Case};
pub use report::{Counterexample, Param, Params, Statement, VerificationReport};
pub use suite::{verify_all, SuitePlan};
pub use unfolding::{check_corollary1, residual_bound, residual_steps};
pub use verdict::{vanishing_verdict, Check, EquationResult, Relation, VanishingResult, Verdict, Witness};

use crate::error::Result;
use crate::exec::{Executor, Sequential};

/// Default number of counterexamples kept in a report.
pub const DEFAULT_CAP: usize = 100;

/// Runs verifiers on an [`Executor`], keeping at most `cap` counterexamples.
#[derive(Debug, Clone)]
pub struct Verifier<E = Sequential> {
    pub cap: usize,
    pub exec: E,
}

impl Default for Verifier<Sequential> {
    fn default() -> Self {
        Verifier {
            cap: DEFAULT_CAP,
            exec: Sequential,
        }
    }
}

impl<E: Executor> Verifier<E> {
    pub fn new(exec: E) -> Self {
        Verifier { cap: DEFAULT_CAP, exec }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }
}

pub fn verify_lemma1(n: u32) -> Result<VerificationReport> {
    Verifier::default().lemma1(n)
}

pub fn verify_lemma2(n: u32) -> Result<VerificationReport> {
    Verifier::default().lemma2(n)
}

pub fn verify_lemma2_reduction(n: u32) -> Result<VerificationReport> {
    Verifier::default().lemma2_reduction(n)
}

pub fn verify_prop3(n: u32) -> Result<VerificationReport> {
    Verifier::default().prop3(n)
}

pub fn verify_prop4(n: u32, l: u32, mode: Mode) -> Result<VerificationReport> {
    Verifier::default().prop4(n, l, mode)
}

pub fn verify_prop5(n: u32, q: u32, l: u32) -> Result<VerificationReport> {
    Verifier::default().prop5(n, q, l)
}

pub fn verify_epsilon_orbit_claim(n: u32, p: u32, q: u32) -> Result<VerificationReport> {
    Verifier::default().epsilon_orbit(n, p, q)
}

pub fn verify_cor1_bookkeeping(n: u32, max_len: u32) -> Result<VerificationReport> {
    Verifier::default().cor1_bookkeeping(n, max_len)
}
