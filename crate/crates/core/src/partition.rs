//! Integer partitions and the orbit calculus on them.
//!
//! A partition `λ = (k_1 ≥ k_2 ≥ … ≥ k_p)` of `n` labels the nilpotent orbit of
//! `gl_n` with Jordan blocks of sizes `k_i`. Orbit closure is the dominance
//! order, and the orbit has dimension `n² − Σ (2i−1) k_i`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
///
/// Constructors reject unsorted or zero parts instead of normalizing them.
/// The empty partition exists only as the identity for [`Partition::add`];
/// the orbit operations require a nonempty partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "Vec<u32>", into = "Vec<u32>")
)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Outcome of comparing two partitions of the same `n` in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum Dominance {
    Equal,
    Greater,
    Less,
    Incomparable,
}

impl Dominance {
    /// `Equal` or `Greater`.
    pub fn is_at_least(self) -> bool {
        matches!(self, Dominance::Equal | Dominance::Greater)
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n)`, the regular orbit.
    pub fn row(n: u32) -> Self {
        assert!(n > 0);
        Partition { parts: vec![n] }
    }

    /// `(1ⁿ)`, the zero orbit.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    /// `(p^q)`: `q` parts of size `p`.
    pub fn rectangle(p: u32, q: u32) -> Self {
        assert!(p > 0);
        Partition { parts: vec![p; q as usize] }
    }

    /// `(m 1^{n−m})`, a hook.
    pub fn hook(n: u32, m: u32) -> Self {
        assert!(1 <= m && m <= n);
        let mut parts = vec![m];
        parts.extend(core::iter::repeat_n(1, (n - m) as usize));
        Partition { parts }
    }

    /// The partition of `n` into `len` parts that are as equal as possible.
    ///
    /// It is the minimum, in dominance order, of all partitions of `n` with at
    /// most `len` parts.
    pub fn balanced(n: u32, len: u32) -> Self {
        assert!(1 <= len && len <= n);
        let q = n / len;
        let r = n % len;
        let mut parts = vec![q + 1; r as usize];
        parts.extend(core::iter::repeat_n(q, (len - r) as usize));
        Partition { parts }
    }

    /// The threshold partition `(2^{n/2})` for even `n`, `(2^{(n−1)/2} 1)` for odd `n`.
    pub fn mu_min(n: u32) -> Self {
        assert!(n > 0);
        let mut parts = vec![2; (n / 2) as usize];
        if n % 2 == 1 {
            parts.push(1);
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The total `n = Σ k_i`.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `Some((p, q))` when the partition is `(p^q)`.
    pub fn as_rectangle(&self) -> Option<(u32, u32)> {
        let p = *self.parts.first()?;
        self.parts
            .iter()
            .all(|&k| k == p)
            .then_some((p, self.parts.len() as u32))
    }

    /// `true` for `(1ⁿ)`.
    pub fn is_zero_orbit(&self) -> bool {
        !self.parts.is_empty() && self.first() == 1
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.parts.is_empty() {
            Err(Error::invalid("operation requires a nonempty partition"))
        } else {
            Ok(())
        }
    }

    /// The conjugate partition, `(λ^t)_i = #{ j : k_j ≥ i }`.
    pub fn transpose(&self) -> Result<Partition> {
        self.require_nonempty()?;
        Ok(self.transpose_unchecked())
    }

    pub(crate) fn transpose_unchecked(&self) -> Partition {
        let cols = self.first() as usize;
        let mut parts = vec![0u32; cols];
        for &k in &self.parts {
            for c in &mut parts[..k as usize] {
                *c += 1;
            }
        }
        Partition { parts }
    }

    /// Dimension of the nilpotent orbit, `n² − Σ_{i≥1} (2i−1) k_i`.
    pub fn orbit_dim(&self) -> u64 {
        let n = u64::from(self.n());
        let weighted: u64 = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &k)| (2 * i as u64 + 1) * u64::from(k))
            .sum();
        n * n - weighted
    }

    /// Gelfand–Kirillov dimension of a representation with this orbit:
    /// half of [`orbit_dim`](Self::orbit_dim).
    pub fn rep_dim(&self) -> u64 {
        let d = self.orbit_dim();
        debug_assert!(d.is_multiple_of(2), "orbit dimension is always even");
        d / 2
    }

    /// Dominance comparison by prefix sums.
    pub fn compare(&self, other: &Partition) -> Result<Dominance> {
        if self.n() != other.n() {
            return Err(Error::invalid(alloc::format!(
                "dominance compares partitions of the same n, got {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(self.compare_unchecked(other))
    }

    pub(crate) fn compare_unchecked(&self, other: &Partition) -> Dominance {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        let (mut ge, mut le) = (true, true);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        }
    }

    /// `true` when `self ≥ other` in dominance order (same `n` assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        self.compare_unchecked(other).is_at_least()
    }

    /// Componentwise sum `(k_1 + k'_1, k_2 + k'_2, …)` with zero padding.
    /// This is the induced-orbit rule for parabolic induction.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + other.parts.get(i).copied().unwrap_or(0))
            .collect();
        Partition { parts }
    }

    /// The parts of `self` and `other` merged into one decreasing list.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `Σ_{i<j} m_i m_j` over the parts.
    pub fn pair_product_sum(&self) -> u64 {
        let mut prefix = 0u64;
        let mut acc = 0u64;
        for &m in &self.parts {
            acc += prefix * u64::from(m);
            prefix += u64::from(m);
        }
        acc
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the bracketed form `[3,2,2,1]`. Whitespace around parts is allowed.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::invalid(alloc::format!("partition must look like [3,2,1], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::invalid(alloc::format!("bad partition part {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    max_len: usize,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let cur = self.current.take()?;
            self.current = successor(&cur);
            if cur.len() <= self.max_len {
                return Some(Partition { parts: cur });
            }
        }
    }
}

fn successor(cur: &[u32]) -> Option<Vec<u32>> {
    let i = cur.iter().rposition(|&k| k > 1)?;
    let v = cur[i] - 1;
    let mut rest: u32 = cur[i + 1..].iter().sum::<u32>() + 1;
    let mut next = cur[..i].to_vec();
    next.push(v);
    while rest >= v {
        next.push(v);
        rest -= v;
    }
    if rest > 0 {
        next.push(rest);
    }
    Some(next)
}

/// All partitions of `n` (with at most `max_len` parts when given), in
/// reverse-lexicographic order. `n = 0` yields nothing.
pub fn partitions(n: u32, max_len: Option<usize>) -> Partitions {
    Partitions {
        current: (n > 0).then(|| vec![n]),
        max_len: max_len.unwrap_or(usize::MAX),
    }
}

/// Flags of a degenerate Whittaker character `ψ_{U,ε}` on `U_n`: one flag per
/// simple root, `true` when the coefficient `ε_i` is one.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "String", into = "String")
)]
pub struct EpsilonVector {
    flags: Vec<bool>,
}

impl EpsilonVector {
    pub fn new(flags: Vec<bool>) -> Result<Self> {
        if flags.is_empty() {
            return Err(Error::invalid("an epsilon vector needs n ≥ 2, i.e. at least one flag"));
        }
        Ok(EpsilonVector { flags })
    }

    /// The vector of rank `n` whose bit `i` (from the least significant)
    /// is flag `ε_{i+1}`.
    pub fn from_bits(n: u32, bits: u64) -> Result<Self> {
        if !(2..=64).contains(&n) {
            return Err(Error::invalid("epsilon bit masks support 2 ≤ n ≤ 64"));
        }
        Ok(EpsilonVector {
            flags: (0..n - 1).map(|i| bits >> i & 1 == 1).collect(),
        })
    }

    /// Zero flags exactly at `zeros` (1-based positions in `1..n`).
    pub fn with_zeros(n: u32, zeros: &[u32]) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("an epsilon vector needs n ≥ 2"));
        }
        let mut flags = vec![true; (n - 1) as usize];
        for &j in zeros {
            if j == 0 || j >= n {
                return Err(Error::invalid(alloc::format!("zero position {j} outside 1..{}", n - 1)));
            }
            flags[(j - 1) as usize] = false;
        }
        Ok(EpsilonVector { flags })
    }

    pub fn n(&self) -> u32 {
        self.flags.len() as u32 + 1
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn nonzero_count(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }

    /// 1-based positions `j_1 < … < j_p` of the zero flags.
    pub fn zero_positions(&self) -> Vec<u32> {
        self.flags
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// The orbit of the Fourier coefficient along `ψ_{U,ε}`: the gaps
    /// `j_1, j_2 − j_1, …, n − j_p` sorted in decreasing order.
    pub fn partition(&self) -> Partition {
        let n = self.n();
        let mut prev = 0;
        let mut parts = Vec::with_capacity(self.flags.len() + 1);
        for j in self.zero_positions() {
            parts.push(j - prev);
            prev = j;
        }
        parts.push(n - prev);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.flags {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpsilonVector({self})")
    }
}

/// Parses a bit string such as `10101` (rank = length + 1).
impl FromStr for EpsilonVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let flags = s
            .trim()
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(Error::invalid(alloc::format!("epsilon vector must be a 0/1 string, got {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        EpsilonVector::new(flags)
    }
}

impl TryFrom<String> for EpsilonVector {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<EpsilonVector> for String {
    fn from(e: EpsilonVector) -> Self {
        alloc::format!("{e}")
    }
}
