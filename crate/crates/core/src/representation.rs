//! Representation descriptors and the orbits attached to them.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A representation of `GL_n`, known only through the data that determines
/// its unipotent orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RepDescriptor {
    /// Orbit `(n)`.
    Generic { n: u32 },
    /// Orbit `(p^q)` on `GL_{pq}`. `q = 1` is generic, `p = 1` is trivial.
    Speh { p: u32, q: u32 },
    /// The trivial representation, orbit `(1ⁿ)`. Only legal as an
    /// Eisenstein constituent.
    TrivialConstituent { n: u32 },
    /// Eisenstein series induced from `τ_1 × … × τ_r` on the parabolic with
    /// Levi `GL_{m_1} × … × GL_{m_r}`, `m_1 ≥ … ≥ m_r`, `r ≥ 2`.
    Eisenstein {
        blocks: Vec<u32>,
        constituents: Vec<RepDescriptor>,
    },
    /// A representation given directly by its orbit.
    ExplicitOrbit { orbit: Partition },
}

impl RepDescriptor {
    pub fn generic(n: u32) -> Self {
        RepDescriptor::Generic { n }
    }

    pub fn speh(p: u32, q: u32) -> Self {
        RepDescriptor::Speh { p, q }
    }

    pub fn trivial(n: u32) -> Self {
        RepDescriptor::TrivialConstituent { n }
    }

    pub fn orbit(orbit: Partition) -> Self {
        RepDescriptor::ExplicitOrbit { orbit }
    }

    /// Validated Eisenstein descriptor.
    pub fn eisenstein(blocks: Vec<u32>, constituents: Vec<RepDescriptor>) -> Result<Self> {
        let rep = RepDescriptor::Eisenstein { blocks, constituents };
        rep.validate()?;
        Ok(rep)
    }

    /// The minimal Eisenstein series: blocks `(n−1, 1)`, trivial data.
    pub fn minimal_eisenstein(n: u32) -> Self {
        assert!(n >= 2);
        RepDescriptor::Eisenstein {
            blocks: alloc::vec![n - 1, 1],
            constituents: alloc::vec![RepDescriptor::trivial(n - 1), RepDescriptor::trivial(1)],
        }
    }

    /// Eisenstein series with trivial data on every block.
    pub fn degenerate_eisenstein(blocks: Vec<u32>) -> Result<Self> {
        let constituents = blocks.iter().map(|&m| RepDescriptor::trivial(m)).collect();
        RepDescriptor::eisenstein(blocks, constituents)
    }

    /// The rank `n` of the group the representation lives on.
    pub fn rank(&self) -> u32 {
        match self {
            RepDescriptor::Generic { n } | RepDescriptor::TrivialConstituent { n } => *n,
            RepDescriptor::Speh { p, q } => p * q,
            RepDescriptor::Eisenstein { blocks, .. } => blocks.iter().sum(),
            RepDescriptor::ExplicitOrbit { orbit } => orbit.n(),
        }
    }

    /// Checks the structural invariants recursively.
    pub fn validate(&self) -> Result<()> {
        match self {
            RepDescriptor::Generic { n } | RepDescriptor::TrivialConstituent { n } => {
                if *n == 0 {
                    return Err(Error::invalid("rank must be positive"));
                }
            }
            RepDescriptor::Speh { p, q } => {
                if *p == 0 || *q == 0 {
                    return Err(Error::invalid("speh: p and q must be positive"));
                }
            }
            RepDescriptor::ExplicitOrbit { orbit } => {
                if orbit.is_empty() {
                    return Err(Error::invalid("orbit: partition must be nonempty"));
                }
            }
            RepDescriptor::Eisenstein { blocks, constituents } => {
                if blocks.len() < 2 {
                    return Err(Error::invalid("eisenstein: blocks needs at least two entries"));
                }
                if blocks.contains(&0) || blocks.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::invalid("eisenstein: blocks must be positive and weakly decreasing"));
                }
                if constituents.len() != blocks.len() {
                    return Err(Error::invalid(format!(
                        "eisenstein: {} blocks but {} constituents",
                        blocks.len(),
                        constituents.len()
                    )));
                }
                for (i, (c, &m)) in constituents.iter().zip(blocks).enumerate() {
                    c.validate()?;
                    if c.rank() != m {
                        return Err(Error::invalid(format!(
                            "eisenstein: constituent {i} has rank {} but its block is {m}",
                            c.rank()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The unipotent orbit `O(π)`. Eisenstein series get the induced orbit,
    /// the componentwise sum of the constituents' orbits.
    pub fn attached_orbit(&self) -> Partition {
        match self {
            RepDescriptor::Generic { n } => Partition::row(*n),
            RepDescriptor::Speh { p, q } => Partition::rectangle(*p, *q),
            RepDescriptor::TrivialConstituent { n } => Partition::column(*n),
            RepDescriptor::Eisenstein { constituents, .. } => constituents
                .iter()
                .fold(Partition::empty(), |acc, c| acc.add(&c.attached_orbit())),
            RepDescriptor::ExplicitOrbit { orbit } => orbit.clone(),
        }
    }

    /// `dim π = ½ dim O(π)`.
    pub fn dim(&self) -> u64 {
        self.attached_orbit().rep_dim()
    }

    /// The dimension computed from the parabolic data instead of the orbit:
    /// `Σ dim τ_i + Σ_{i<j} m_i m_j` for Eisenstein series, recursively.
    pub fn structural_dim(&self) -> u64 {
        match self {
            RepDescriptor::Eisenstein { blocks, constituents } => {
                let levi: u64 = constituents.iter().map(RepDescriptor::structural_dim).sum();
                levi + unipotent_radical_dim(blocks)
            }
            other => other.dim(),
        }
    }

    /// `true` when the attached orbit is rectangular, `(p^q)`.
    pub fn is_speh_type(&self) -> bool {
        self.attached_orbit().as_rectangle().is_some()
    }

    /// `m_1` when this is an Eisenstein series whose first constituent is trivial.
    pub fn top_trivial_block(&self) -> Option<u32> {
        self.trivial_block_at(0)
    }

    /// `m_j` when this is an Eisenstein series whose constituent at 0-based
    /// position `j` is trivial.
    pub fn trivial_block_at(&self, j: usize) -> Option<u32> {
        match self {
            RepDescriptor::Eisenstein { blocks, constituents } => match constituents.get(j)? {
                c if c.is_trivial() => Some(blocks[j]),
                _ => None,
            },
            _ => None,
        }
    }

    /// 0-based positions of the trivial constituents of an Eisenstein series.
    pub fn trivial_blocks(&self) -> Vec<usize> {
        match self {
            RepDescriptor::Eisenstein { constituents, .. } => {
                (0..constituents.len()).filter(|&j| constituents[j].is_trivial()).collect()
            }
            _ => Vec::new(),
        }
    }

    /// Blocks of an Eisenstein series.
    pub fn blocks(&self) -> Option<&[u32]> {
        match self {
            RepDescriptor::Eisenstein { blocks, .. } => Some(blocks),
            _ => None,
        }
    }

    /// The first constituent of an Eisenstein series.
    pub fn first_constituent(&self) -> Option<&RepDescriptor> {
        match self {
            RepDescriptor::Eisenstein { constituents, .. } => constituents.first(),
            _ => None,
        }
    }

    /// The representation has orbit `(1ⁿ)`.
    pub fn is_trivial(&self) -> bool {
        match self {
            RepDescriptor::TrivialConstituent { .. } => true,
            RepDescriptor::Eisenstein { .. } => false,
            other => other.attached_orbit().is_zero_orbit(),
        }
    }
}

/// `dim U(Q) = Σ_{i<j} m_i m_j` for the parabolic with the given blocks.
pub fn unipotent_radical_dim(blocks: &[u32]) -> u64 {
    let mut prefix = 0u64;
    let mut acc = 0u64;
    for &m in blocks {
        acc += prefix * u64::from(m);
        prefix += u64::from(m);
    }
    acc
}

/// The data of a global integral: the rank and the representations
/// `π_1, …, π_l` multiplied together.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralSpec {
    n: u32,
    reps: Vec<RepDescriptor>,
}

impl IntegralSpec {
    pub fn new(n: u32, reps: Vec<RepDescriptor>) -> Result<Self> {
        if reps.is_empty() {
            return Err(Error::invalid("representations: at least one representation is required"));
        }
        for (i, rep) in reps.iter().enumerate() {
            rep.validate()
                .map_err(|e| Error::invalid(format!("representations[{i}]: {}", strip(&e))))?;
            if rep.rank() != n {
                return Err(Error::invalid(format!(
                    "representations[{i}]: rank {} does not match n = {n}",
                    rep.rank()
                )));
            }
            if rep.is_trivial() {
                return Err(Error::invalid(format!(
                    "representations[{i}]: one-dimensional (trivial orbit) representations are excluded"
                )));
            }
        }
        Ok(IntegralSpec { n, reps })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn reps(&self) -> &[RepDescriptor] {
        &self.reps
    }

    /// The number `l` of representations.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// `Σ dim π_i`.
    pub fn total_dim(&self) -> u64 {
        self.reps.iter().map(RepDescriptor::dim).sum()
    }
}

fn strip(e: &Error) -> alloc::string::String {
    match e {
        Error::InvalidInput(m) | Error::ResourceLimit(m) => m.clone(),
    }
}
