use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::partition::Partition;

/// Which statement a [`VerificationReport`] is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum Statement {
    Lemma1,
    Lemma2,
    Lemma2Reduction,
    Prop3,
    Prop4,
    Prop5,
    EpsilonOrbit,
    Cor1Bookkeeping,
}

impl Statement {
    pub fn name(self) -> &'static str {
        match self {
            Statement::Lemma1 => "lemma1",
            Statement::Lemma2 => "lemma2",
            Statement::Lemma2Reduction => "lemma2_reduction",
            Statement::Prop3 => "prop3",
            Statement::Prop4 => "prop4",
            Statement::Prop5 => "prop5",
            Statement::EpsilonOrbit => "epsilon_orbit",
            Statement::Cor1Bookkeeping => "cor1_bookkeeping",
        }
    }
}

/// A value in report parameters and counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(untagged)
)]
pub enum Param {
    Bool(bool),
    Int(i64),
    Text(String),
    Parts(Partition),
    Ints(Vec<i64>),
    List(Vec<Param>),
}

macro_rules! int_param {
    ($($t:ty),*) => {$(
        impl From<$t> for Param {
            fn from(v: $t) -> Self {
                Param::Int(v as i64)
            }
        }
    )*};
}
int_param!(i32, i64, u32, u64, usize);

impl From<bool> for Param {
    fn from(v: bool) -> Self {
        Param::Bool(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_string())
    }
}

impl From<String> for Param {
    fn from(v: String) -> Self {
        Param::Text(v)
    }
}

impl From<Partition> for Param {
    fn from(v: Partition) -> Self {
        Param::Parts(v)
    }
}

impl From<&Partition> for Param {
    fn from(v: &Partition) -> Self {
        Param::Parts(v.clone())
    }
}

impl From<Vec<i64>> for Param {
    fn from(v: Vec<i64>) -> Self {
        Param::Ints(v)
    }
}

impl From<&[u32]> for Param {
    fn from(v: &[u32]) -> Self {
        Param::Ints(v.iter().map(|&x| i64::from(x)).collect())
    }
}

impl From<Vec<Param>> for Param {
    fn from(v: Vec<Param>) -> Self {
        Param::List(v)
    }
}

pub type Params = BTreeMap<String, Param>;

/// One failing case: what was fed in and what came out.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Counterexample {
    pub inputs: Params,
    pub computed: Params,
}

impl Counterexample {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn input(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn computed(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.computed.insert(key.to_string(), value.into());
        self
    }
}

/// Outcome of an exhaustive check. `passed` is true exactly when no
/// counterexample was found; `counterexamples` holds the smallest ones in
/// canonical order, capped.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub statement: Statement,
    pub parameters: Params,
    pub space_size: u64,
    pub passed: bool,
    /// The search found no case satisfying the hypotheses.
    pub vacuous: bool,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
}

/// Per-shard accumulator.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub space: u64,
    pub total: u64,
    pub found: Vec<Counterexample>,
    cap: usize,
}

impl Tally {
    pub fn new(cap: usize) -> Self {
        Tally {
            cap,
            ..Tally::default()
        }
    }

    /// Counts one case and records it when `ok` is false.
    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.space += 1;
        if !ok {
            self.fail(cx());
        }
    }

    pub fn fail(&mut self, cx: Counterexample) {
        self.total += 1;
        self.found.push(cx);
        if self.found.len() > 2 * self.cap.max(1) {
            self.trim();
        }
    }

    fn trim(&mut self) {
        self.found.sort();
        self.found.dedup();
        self.found.truncate(self.cap);
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.space += other.space;
        self.total += other.total;
        self.found.extend(other.found);
        if self.found.len() > 2 * self.cap.max(1) {
            self.trim();
        }
        self
    }

    pub fn into_report(mut self, statement: Statement, parameters: Params, vacuous: bool) -> VerificationReport {
        self.trim();
        VerificationReport {
            statement,
            parameters,
            space_size: self.space,
            passed: self.total == 0,
            vacuous,
            counterexample_count: self.total,
            counterexamples: self.found,
        }
    }
}

pub(crate) fn params<const N: usize>(entries: [(&str, Param); N]) -> Params {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
