//! Integer partitions, compositions, and the orders on them.
//!
//! Enumeration orders are fixed so that golden outputs are stable:
//! partitions of n are listed in reverse lexicographic order
//! ((4), (3,1), (2,2), (2,1,1), (1,1,1,1)), compositions of n in
//! binary-subset order (break positions read as a binary counter, so
//! (n) comes first and (1,...,1) last).

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::counting::factorial;
use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
/// The empty partition (weight 0) is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting non-decreasing or zero parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidInput(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts: Vec<u32> = parts.into().into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the number being partitioned.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// m_i(λ): how many parts equal i.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// λ! = product of m_i(λ)!, the number of ways to permute rows of
    /// equal length.
    pub fn automorphisms(&self) -> u64 {
        self.multiplicities().iter().map(|&(_, m)| factorial(m)).product()
    }

    /// z_λ = product of i^{m_i} m_i!, the centralizer order of a
    /// permutation of this cycle type in S_{|λ|}.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|&(i, m)| (i as u64).pow(m) * factorial(m))
            .product()
    }

    /// Size of the conjugacy class with this cycle type: |λ|!/z_λ.
    pub fn class_size(&self) -> u64 {
        factorial(self.weight()) / self.centralizer_order()
    }

    /// ⟨λ⟩: the partition with its first (largest) part removed.
    pub fn reduced(&self) -> Result<Partition> {
        if self.parts.is_empty() {
            return Err(Error::InvalidInput("cannot reduce the empty partition".into()));
        }
        Ok(Partition { parts: self.parts[1..].to_vec() })
    }

    /// λ[n]: prepend n - |λ| as a new first part. Requires
    /// n >= |λ| + λ_1 so the result is weakly decreasing.
    pub fn augmented(&self, n: u32) -> Result<Partition> {
        let k = self.weight();
        let first = self.parts.first().copied().unwrap_or(0);
        if n < k + first {
            return Err(Error::InvalidInput(format!(
                "cannot augment {self} to weight {n}: need n >= {}",
                k + first
            )));
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(n - k);
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Dominance comparison: self ⊴ other, i.e. every prefix sum of self
    /// is at most the corresponding prefix sum of other. Both partitions
    /// must have equal weight.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::InvalidInput(format!(
                "dominance compares equal weights, got |{self}| = {} and |{other}| = {}",
                self.weight(),
                other.weight()
            )));
        }
        let mut a: u64 = 0;
        let mut b: u64 = 0;
        for j in 0..self.parts.len().max(other.parts.len()) {
            a += u64::from(self.parts.get(j).copied().unwrap_or(0));
            b += u64::from(other.parts.get(j).copied().unwrap_or(0));
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The conjugate partition (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.parts {
            for q in parts.iter_mut().take(p as usize) {
                *q += 1;
            }
        }
        Partition { parts }
    }

    /// Cycle counts (c_1, ..., c_n) of this cycle type, n = weight.
    pub fn cycle_counts(&self) -> Vec<u32> {
        let n = self.weight() as usize;
        let mut c = vec![0u32; n];
        for &p in &self.parts {
            c[p as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// A composition: ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::InvalidInput("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition obtained by sorting the parts.
    pub fn underlying_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))
        })
        .collect()
}

/// All partitions of n in reverse lexicographic order. partitions_of(0)
/// is the singleton list holding the empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All compositions of n in binary-subset order: the break positions
/// form a binary counter, so (n) is first and (1,1,...,1) last.
/// compositions_of(0) is the singleton list holding the empty
/// composition.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    assert!(n <= 24, "compositions_of({n}) would enumerate 2^{} entries", n - 1);
    let n = n as usize;
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 0u32;
        for p in 1..=n {
            run += 1;
            // Break after cell p when bit (n-1-p) is set; p = n always ends.
            if p == n || (mask >> (n - 1 - p)) & 1 == 1 {
                parts.push(run);
                run = 0;
            }
        }
        out.push(Composition { parts });
    }
    out
}

/// Whether `upper` covers `lower` in the composition poset on a common
/// weight: `upper` must arise from `lower` by replacing one adjacent
/// pair of parts with its sum.
pub fn composition_covers(lower: &Composition, upper: &Composition) -> Result<bool> {
    if lower.weight() != upper.weight() {
        return Err(Error::InvalidInput(format!(
            "cover test needs equal weights, got |{lower}| = {} and |{upper}| = {}",
            lower.weight(),
            upper.weight()
        )));
    }
    if lower.len() != upper.len() + 1 {
        return Ok(false);
    }
    for i in 0..upper.len() {
        // Try merging lower[i] and lower[i+1].
        if lower.parts[..i] == upper.parts[..i]
            && lower.parts[i] + lower.parts[i + 1] == upper.parts[i]
            && lower.parts[i + 2..] == upper.parts[i + 1..]
        {
            return Ok(true);
        }
    }
    Ok(false)
}
