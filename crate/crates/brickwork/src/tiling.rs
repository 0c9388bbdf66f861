//! Bricks and brick tilings.
//!
//! Each cycle of a permutation becomes a labelled horizontal brick (the
//! cycle's elements in canonical order, maximum first). A tiling of a
//! shape places disjoint sets of bricks into the rows so that each row's
//! total brick length equals the row length. Ordered tilings distinguish
//! the row order beyond the shape; unordered tilings identify tilings
//! that differ by a row permutation. A row holding c bricks has c - 1
//! cracks; crackless means one brick per row everywhere.
//!
//! The three counts (ordered, unordered, crackless) depend only on the
//! cycle type of the permutation and are the class functions the rest of
//! the crate is built on.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::permutation::Permutation;
use crate::poly::BinomialExpansion;

/// A labelled horizontal brick: the elements of one cycle in canonical
/// order (maximum first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Brick {
    labels: Vec<u32>,
}

impl Brick {
    pub fn new(labels: Vec<u32>) -> Self {
        assert!(!labels.is_empty());
        Self { labels }
    }

    pub fn len(&self) -> u32 {
        self.labels.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The brick's largest label, which leads the cycle.
    pub fn leader(&self) -> u32 {
        self.labels[0]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }
}

/// The bricks of one permutation, in canonical cycle order (increasing
/// leader).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickSet {
    bricks: Vec<Brick>,
}

impl BrickSet {
    pub fn bricks(&self) -> &[Brick] {
        &self.bricks
    }

    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    pub fn brick(&self, idx: u8) -> &Brick {
        &self.bricks[idx as usize]
    }

    /// Multiset of brick lengths as a partition (the source cycle type).
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.bricks.iter().map(Brick::len).collect::<Vec<_>>())
    }

    /// Shape of a sub-multiset of bricks given by indices.
    pub fn subset_shape(&self, idxs: &[u8]) -> Partition {
        Partition::from_unsorted(
            idxs.iter().map(|&i| self.bricks[i as usize].len()).collect::<Vec<_>>(),
        )
    }
}

/// One brick per cycle of the canonical decomposition.
pub fn bricks_of(w: &Permutation) -> BrickSet {
    let bricks: Vec<Brick> = w.canonical_cycles().into_iter().map(Brick::new).collect();
    assert!(bricks.len() <= u8::MAX as usize);
    BrickSet { bricks }
}

/// An ordered tiling: rows of brick indices into a `BrickSet`, each row
/// sorted ascending. Row order is significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTiling {
    rows: Vec<Vec<u8>>,
}

impl OrderedTiling {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Row sums of brick lengths, as a composition.
    pub fn shape(&self, bs: &BrickSet) -> Composition {
        Composition::new(
            self.rows
                .iter()
                .map(|row| row.iter().map(|&i| bs.brick(i).len()).sum::<u32>())
                .collect::<Vec<_>>(),
        )
        .expect("rows are nonempty")
    }

    /// Total number of cracks: a row with c bricks contributes c - 1.
    pub fn crack_count(&self) -> u32 {
        self.rows.iter().map(|row| row.len() as u32 - 1).sum()
    }

    /// All brick indices used, ascending.
    pub fn support(&self) -> Vec<u8> {
        let mut all: Vec<u8> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Forgets the row order, producing the canonical representative.
    pub fn unordered(&self, bs: &BrickSet) -> UnorderedTiling {
        UnorderedTiling::from_rows(self.rows.clone(), bs)
    }

    /// Nested-list text form: rows of bricks of labels,
    /// e.g. [[[3,1]],[[5,2]],[[4]]].
    pub fn render(&self, bs: &BrickSet) -> String {
        render_rows(&self.rows, bs)
    }
}

/// An unordered tiling: the row-permutation class of an ordered tiling,
/// stored as its canonical representative (rows sorted by descending
/// total, ties by ascending smallest brick leader).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorderedTiling {
    rows: Vec<Vec<u8>>,
}

impl UnorderedTiling {
    fn from_rows(mut rows: Vec<Vec<u8>>, bs: &BrickSet) -> Self {
        rows.sort_by(|a, b| {
            let ta: u32 = a.iter().map(|&i| bs.brick(i).len()).sum();
            let tb: u32 = b.iter().map(|&i| bs.brick(i).len()).sum();
            tb.cmp(&ta).then_with(|| {
                let la = a.iter().map(|&i| bs.brick(i).leader()).min().unwrap();
                let lb = b.iter().map(|&i| bs.brick(i).leader()).min().unwrap();
                la.cmp(&lb)
            })
        });
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Row sums, already weakly decreasing by canonicalization.
    pub fn shape(&self, bs: &BrickSet) -> Partition {
        Partition::from_unsorted(
            self.rows
                .iter()
                .map(|row| row.iter().map(|&i| bs.brick(i).len()).sum::<u32>())
                .collect::<Vec<_>>(),
        )
    }

    pub fn crack_count(&self) -> u32 {
        self.rows.iter().map(|row| row.len() as u32 - 1).sum()
    }

    pub fn render(&self, bs: &BrickSet) -> String {
        render_rows(&self.rows, bs)
    }
}

fn render_rows(rows: &[Vec<u8>], bs: &BrickSet) -> String {
    let mut out = String::from("[");
    for (r, row) in rows.iter().enumerate() {
        if r > 0 {
            out.push(',');
        }
        out.push('[');
        for (k, &idx) in row.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            let labels: Vec<String> =
                bs.brick(idx).labels().iter().map(|l| l.to_string()).collect();
            out.push_str(&format!("[{}]", labels.join(",")));
        }
        out.push(']');
    }
    out.push(']');
    out
}

/// All ordered tilings of the shape by bricks of `bs`, in a fixed
/// deterministic order (bricks considered in canonical order, each
/// placed in the first feasible row or skipped). A shape whose weight
/// exceeds the total brick length has no tilings and yields an empty
/// list rather than an error.
pub fn enumerate_ordered_tilings(bs: &BrickSet, shape: &[u32]) -> Vec<OrderedTiling> {
    assert!(shape.iter().all(|&p| p > 0), "shape parts must be positive");
    let lens: Vec<u32> = bs.bricks.iter().map(Brick::len).collect();
    // suffix[i] = total length of bricks i..
    let mut suffix = vec![0u32; lens.len() + 1];
    for i in (0..lens.len()).rev() {
        suffix[i] = suffix[i + 1] + lens[i];
    }
    let mut remaining: Vec<u32> = shape.to_vec();
    let need: u32 = remaining.iter().sum();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fn rec(
        i: usize,
        need: u32,
        lens: &[u32],
        suffix: &[u32],
        remaining: &mut Vec<u32>,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<OrderedTiling>,
    ) {
        if need == 0 {
            out.push(OrderedTiling { rows: rows.clone() });
            return;
        }
        if i == lens.len() || suffix[i] < need {
            return;
        }
        // Skip brick i.
        rec(i + 1, need, lens, suffix, remaining, rows, out);
        // Or place it in each row with capacity.
        for j in 0..remaining.len() {
            if remaining[j] >= lens[i] {
                remaining[j] -= lens[i];
                rows[j].push(i as u8);
                rec(i + 1, need - lens[i], lens, suffix, remaining, rows, out);
                rows[j].pop();
                remaining[j] += lens[i];
            }
        }
    }
    rec(0, need, &lens, &suffix, &mut remaining, &mut rows, &mut out);
    out
}

/// All unordered tilings (canonical representatives), derived from the
/// ordered enumeration of the sorted shape.
pub fn enumerate_unordered_tilings(bs: &BrickSet, shape: &[u32]) -> Vec<UnorderedTiling> {
    let sorted = Partition::from_unsorted(shape.to_vec());
    let mut seen: Vec<UnorderedTiling> = enumerate_ordered_tilings(bs, sorted.parts())
        .into_iter()
        .map(|t| t.unordered(bs))
        .collect();
    seen.sort();
    seen.dedup();
    seen
}

/// Number of ordered tilings of the shape by the bricks of w.
pub fn ordered_count(shape: &[u32], w: &Permutation) -> u64 {
    ordered_count_for_type(shape, &w.cycle_type())
}

/// Number of unordered tilings.
pub fn unordered_count(shape: &[u32], w: &Permutation) -> u64 {
    enumerate_unordered_tilings(&bricks_of(w), shape).len() as u64
}

/// Number of unordered crackless tilings (one brick per row).
pub fn crackless_count(shape: &[u32], w: &Permutation) -> u64 {
    enumerate_unordered_tilings(&bricks_of(w), shape)
        .iter()
        .filter(|t| t.crack_count() == 0)
        .count() as u64
}

/// Ordered-tiling count from the cycle type alone, by dynamic
/// programming: the coefficient of x_1^{s_1} ... x_r^{s_r} in the
/// product over bricks of (1 + x_1^len + ... + x_r^len). Independent of
/// the explicit enumeration; the two are cross-checked in tests.
pub fn ordered_count_for_type(shape: &[u32], cycle_type: &Partition) -> u64 {
    assert!(shape.iter().all(|&p| p > 0), "shape parts must be positive");
    if shape.is_empty() {
        return 1;
    }
    let radices: Vec<usize> = shape.iter().map(|&s| s as usize + 1).collect();
    let size: usize = radices.iter().product();
    // strides for mixed-radix encoding of partial row sums
    let mut strides = vec![1usize; shape.len()];
    for j in 1..shape.len() {
        strides[j] = strides[j - 1] * radices[j - 1];
    }
    let mut dp = vec![0u64; size];
    dp[0] = 1;
    for &len in cycle_type.parts() {
        let len = len as usize;
        let mut next = dp.clone();
        for (state, &ways) in dp.iter().enumerate() {
            if ways == 0 {
                continue;
            }
            for j in 0..shape.len() {
                let cur = state / strides[j] % radices[j];
                if cur + len <= shape[j] as usize {
                    next[state + len * strides[j]] += ways;
                }
            }
        }
        dp = next;
    }
    let full: usize = shape
        .iter()
        .enumerate()
        .map(|(j, &s)| s as usize * strides[j])
        .sum();
    dp[full]
}

/// The crackless count as the binomial class polynomial
/// binom(c_1, m_1) binom(c_2, m_2) ...: choosing m_i(λ) bricks of
/// length i among the c_i available.
pub fn crackless_as_binomial(lambda: &Partition) -> BinomialExpansion {
    BinomialExpansion::from_partition_multiplicities(lambda)
}

/// Expands the ordered-count class function of a composition shape in
/// the crackless basis: the coefficient of shape ν is the number of
/// ordered tilings of μ that use every brick of a brick set of shape ν.
/// Returned in the canonical partition order of weight(μ), zero
/// coefficients dropped.
pub fn ordered_in_crackless_basis(mu: &Composition) -> Vec<(Partition, u64)> {
    let j = mu.weight();
    crate::partition::partitions_of(j)
        .into_iter()
        .filter_map(|nu| {
            // Every tiling of a full-weight shape uses all bricks, so
            // the coefficient is the ordered count on the class ν.
            let a = ordered_count_for_type(mu.parts(), &nu);
            (a > 0).then_some((nu, a))
        })
        .collect()
}

/// Evaluates the three counts on every conjugacy class of S_n at once.
/// Returned in canonical partition order.
pub fn counts_by_class(shape: &[u32], n: u32) -> Vec<(Partition, u64, u64, u64)> {
    crate::partition::partitions_of(n)
        .into_iter()
        .map(|ct| {
            let w = Permutation::from_cycle_type(&ct);
            let z = ordered_count_for_type(shape, &ct);
            let x = unordered_count(shape, &w);
            let e = crackless_count(shape, &w);
            (ct, z, x, e)
        })
        .collect()
}

/// Enumerates all brick subsets of the given total length, as index
/// lists. Used by the subset-counting identities.
pub fn subsets_of_weight(bs: &BrickSet, weight: u32) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::new();
    fn rec(bs: &BrickSet, i: usize, left: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if i == bs.len() {
            return;
        }
        rec(bs, i + 1, left, cur, out);
        let len = bs.bricks[i].len();
        if len <= left {
            cur.push(i as u8);
            rec(bs, i + 1, left - len, cur, out);
            cur.pop();
        }
    }
    rec(bs, 0, weight, &mut cur, &mut out);
    out
}

/// Groups the nonzero class values of the ordered count over all
/// compositions of j, keyed by composition. Convenience for reports.
pub fn ordered_counts_all_compositions(j: u32, w: &Permutation) -> BTreeMap<Composition, u64> {
    let ct = w.cycle_type();
    crate::partition::compositions_of(j)
        .into_iter()
        .map(|mu| {
            let v = ordered_count_for_type(mu.parts(), &ct);
            (mu, v)
        })
        .collect()
}

/// Checks that both enumeration routes agree; used by tests and the
/// verification suites.
pub fn ordered_count_cross_check(shape: &[u32], w: &Permutation) -> Result<u64> {
    let by_enum = enumerate_ordered_tilings(&bricks_of(w), shape).len() as u64;
    let by_dp = ordered_count(shape, w);
    if by_enum != by_dp {
        return Err(Error::Internal(format!(
            "ordered tiling counts disagree on shape {shape:?}: enumeration {by_enum}, dp {by_dp}"
        )));
    }
    Ok(by_dp)
}
