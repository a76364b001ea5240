//! Dimension equations and the orbit-level solver.
//!
//! For representations `π_1, …, π_l` of `GL_n` the full equation reads
//! `Σ dim π_i = n² − 1` and the Whittaker form reads `Σ dim π_i = ½ n(n−1)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::partition::{partitions, Partition};
use crate::representation::IntegralSpec;

/// `lhs` against `rhs`, with `slack = rhs − lhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EquationReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub slack: i64,
}

impl EquationReport {
    pub fn new(lhs: i64, rhs: i64) -> Self {
        EquationReport {
            lhs,
            rhs,
            holds: lhs == rhs,
            slack: rhs - lhs,
        }
    }
}

/// `½ n(n−1)`, the dimension of the maximal unipotent subgroup.
pub fn whittaker_target(n: u32) -> u64 {
    let n = u64::from(n);
    n * (n - 1) / 2
}

/// `Σ dim π_i = dim GL_n − 1` for the full list of representations,
/// cuspidal and Eisenstein factors included.
pub fn check_dim_equation_full(spec: &IntegralSpec) -> EquationReport {
    let n = i64::from(spec.n());
    EquationReport::new(spec.total_dim() as i64, n * n - 1)
}

/// `Σ dim π_i = ½ n(n−1)`.
pub fn check_dim_equation(spec: &IntegralSpec) -> Result<EquationReport> {
    if spec.n() < 2 {
        return Err(Error::invalid("n: the Whittaker-form equation needs n ≥ 2"));
    }
    Ok(EquationReport::new(
        spec.total_dim() as i64,
        whittaker_target(spec.n()) as i64,
    ))
}

/// Dimensions consumed when the cuspidal factor is unfolded against the
/// minimal Eisenstein series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WhittakerReduction {
    pub cuspidal_dim: u64,
    pub min_eisenstein_dim: u64,
    pub residual_rhs: u64,
}

/// Subtracting the generic factor `½ n(n−1)` and the minimal Eisenstein
/// series `n − 1` from `n² − 1` leaves `½ n(n−1)`.
pub fn reduce_to_whittaker_form(n: u32) -> Result<WhittakerReduction> {
    if n < 2 {
        return Err(Error::invalid("n: reduction needs n ≥ 2"));
    }
    let cuspidal_dim = Partition::row(n).rep_dim();
    let min_eisenstein_dim = Partition::hook(n, 2).rep_dim();
    let big = u64::from(n);
    let residual_rhs = big * big - 1 - cuspidal_dim - min_eisenstein_dim;
    assert_eq!(residual_rhs, whittaker_target(n));
    Ok(WhittakerReduction {
        cuspidal_dim,
        min_eisenstein_dim,
        residual_rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBounds {
    pub max_n: u32,
    pub max_l: usize,
}

impl Default for SolveBounds {
    fn default() -> Self {
        SolveBounds { max_n: 12, max_l: 4 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Drop `(1ⁿ)` from the alphabet.
    pub exclude_trivial: bool,
    /// Keep only multisets in which at most one orbit dominates `μ_min`.
    pub max_one_dominant: bool,
    pub bounds: SolveBounds,
}

/// All multisets `{λ_1, …, λ_l}` of partitions of `n` with
/// `Σ rep_dim(λ_i) = ½ n(n−1)`.
///
/// Each multiset is listed in enumeration order (reverse-lexicographic) and
/// the multisets themselves are sorted lexicographically by that order.
pub fn enumerate_orbit_solutions(n: u32, l: usize, opts: &SolveOptions) -> Result<Vec<Vec<Partition>>> {
    enumerate_orbit_solutions_with(n, l, opts, &Sequential)
}

pub fn enumerate_orbit_solutions_with<E: Executor>(
    n: u32,
    l: usize,
    opts: &SolveOptions,
    exec: &E,
) -> Result<Vec<Vec<Partition>>> {
    if n < 2 || l == 0 {
        return Err(Error::invalid("solve needs n ≥ 2 and l ≥ 1"));
    }
    if n > opts.bounds.max_n {
        return Err(Error::limit(alloc::format!("n = {n} exceeds max n = {}", opts.bounds.max_n)));
    }
    if l > opts.bounds.max_l {
        return Err(Error::limit(alloc::format!("l = {l} exceeds max l = {}", opts.bounds.max_l)));
    }

    let mu = Partition::mu_min(n);
    let alphabet: Vec<Letter> = partitions(n, None)
        .filter(|p| !(opts.exclude_trivial && p.is_zero_orbit()))
        .map(|p| Letter {
            dim: p.rep_dim(),
            dominant: p.dominates(&mu),
            orbit: p,
        })
        .collect();
    let target = whittaker_target(n);

    let search = Search {
        alphabet: &alphabet,
        l,
        max_one_dominant: opts.max_one_dominant,
    };
    let shards = exec.map(alphabet.len(), |first| {
        let mut out = Vec::new();
        let mut chosen = alloc::vec![first];
        let letter = &alphabet[first];
        if letter.dim <= target {
            search.extend(&mut chosen, target - letter.dim, usize::from(letter.dominant), &mut out);
        }
        out
    });

    Ok(shards
        .into_iter()
        .flatten()
        .map(|idx| idx.into_iter().map(|i| alphabet[i].orbit.clone()).collect())
        .collect())
}

struct Letter {
    orbit: Partition,
    dim: u64,
    dominant: bool,
}

struct Search<'a> {
    alphabet: &'a [Letter],
    l: usize,
    max_one_dominant: bool,
}

impl Search<'_> {
    fn extend(&self, chosen: &mut Vec<usize>, remaining: u64, dominant: usize, out: &mut Vec<Vec<usize>>) {
        if self.max_one_dominant && dominant > 1 {
            return;
        }
        if chosen.len() == self.l {
            if remaining == 0 {
                out.push(chosen.clone());
            }
            return;
        }
        let start = *chosen.last().unwrap();
        for i in start..self.alphabet.len() {
            let letter = &self.alphabet[i];
            if letter.dim > remaining {
                continue;
            }
            chosen.push(i);
            self.extend(chosen, remaining - letter.dim, dominant + usize::from(letter.dominant), out);
            chosen.pop();
        }
    }
}
