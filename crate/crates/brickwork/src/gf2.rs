//! Exact linear algebra over the two-element field.
//!
//! Two representations, cross-checked in tests: a dense bitset matrix
//! with row elimination for small instances, and a sparse
//! column-reduction for chain complexes, where a boundary matrix has a
//! handful of entries per column. The chain entry point reduces top
//! degree first so pivot rows of one boundary clear columns of the
//! next, which is valid whenever the matrices compose to zero.

use crate::error::{Error, Result};

/// Dense GF(2) matrix; each row is a bitset.
#[derive(Debug, Clone)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        Self { rows, cols, words, data: vec![0; rows * words] }
    }

    /// Builds from per-column row lists, the native form of a boundary
    /// matrix.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for &r in col {
                m.set(r as usize, c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    /// Rank by row elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        let words = self.words;
        let mut rank = 0;
        for c in 0..self.cols {
            let word = c / 64;
            let mask = 1u64 << (c % 64);
            let Some(pivot) =
                (rank..self.rows).find(|&r| data[r * words + word] & mask != 0)
            else {
                continue;
            };
            if pivot != rank {
                for w in 0..words {
                    data.swap(rank * words + w, pivot * words + w);
                }
            }
            for r in 0..self.rows {
                if r != rank && data[r * words + word] & mask != 0 {
                    for w in word..words {
                        data[r * words + w] ^= data[rank * words + w];
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Sparse GF(2) matrix stored column-major; each column lists its row
/// indices in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseGf2 {
    rows: usize,
    columns: Vec<Vec<u32>>,
}

impl SparseGf2 {
    pub fn new(rows: usize, columns: Vec<Vec<u32>>) -> Self {
        for col in &columns {
            debug_assert!(col.windows(2).all(|w| w[0] < w[1]), "unsorted column");
            debug_assert!(col.iter().all(|&r| (r as usize) < rows));
        }
        Self { rows, columns }
    }

    pub fn zero_map(cols: usize) -> Self {
        Self { rows: 0, columns: vec![Vec::new(); cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[u32] {
        &self.columns[c]
    }

    pub fn entry_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> BitMatrix {
        BitMatrix::from_columns(self.rows, &self.columns)
    }

    /// Rank by column reduction; no clearing.
    pub fn rank(&self) -> usize {
        self.reduce(&vec![false; self.cols()]).0
    }

    /// Column reduction skipping cleared columns. Returns the rank and
    /// a flag per row marking pivot rows of the reduced matrix.
    fn reduce(&self, cleared: &[bool]) -> (usize, Vec<bool>) {
        assert_eq!(cleared.len(), self.cols());
        // pivot_with_low[r] = reduced column whose largest entry is r.
        let mut pivot_with_low: Vec<Option<u32>> = vec![None; self.rows];
        let mut stored: Vec<Vec<u32>> = vec![Vec::new(); self.cols()];
        let mut acc = DenseColumn::new(self.rows);
        let mut rank = 0;
        for c in 0..self.cols() {
            if cleared[c] || self.columns[c].is_empty() {
                continue;
            }
            acc.load(&self.columns[c]);
            let mut scan_from = self.rows;
            while let Some(low) = acc.highest_set(scan_from) {
                match pivot_with_low[low as usize] {
                    None => {
                        pivot_with_low[low as usize] = Some(c as u32);
                        stored[c] = acc.drain_to_sparse();
                        rank += 1;
                        break;
                    }
                    Some(p) => {
                        acc.xor_sparse(&stored[p as usize]);
                        scan_from = low as usize;
                    }
                }
            }
            acc.clear();
        }
        let pivot_rows = pivot_with_low.iter().map(Option::is_some).collect();
        (rank, pivot_rows)
    }
}

/// Dense working column for the reduction: a bitset with sparse
/// load/drain and a high-bit scan.
struct DenseColumn {
    words: Vec<u64>,
}

impl DenseColumn {
    fn new(rows: usize) -> Self {
        Self { words: vec![0; rows.div_ceil(64)] }
    }

    fn load(&mut self, entries: &[u32]) {
        for &r in entries {
            self.words[r as usize / 64] |= 1 << (r % 64);
        }
    }

    fn xor_sparse(&mut self, entries: &[u32]) {
        for &r in entries {
            self.words[r as usize / 64] ^= 1 << (r % 64);
        }
    }

    /// Highest set bit strictly below `below`, if any.
    fn highest_set(&self, below: usize) -> Option<u32> {
        if below == 0 {
            return None;
        }
        let mut w = (below - 1) / 64;
        let mut word = self.words[w];
        // Mask off bits at or above `below` in the first word examined.
        let top = (below - 1) % 64;
        if top < 63 {
            word &= (1u64 << (top + 1)) - 1;
        }
        loop {
            if word != 0 {
                return Some((w * 64 + 63 - word.leading_zeros() as usize) as u32);
            }
            if w == 0 {
                return None;
            }
            w -= 1;
            word = self.words[w];
        }
    }

    fn drain_to_sparse(&mut self) -> Vec<u32> {
        let mut out = Vec::new();
        for (w, word) in self.words.iter_mut().enumerate() {
            let mut x = *word;
            while x != 0 {
                let b = x.trailing_zeros();
                out.push((w * 64 + b as usize) as u32);
                x &= x - 1;
            }
            *word = 0;
        }
        out
    }

    fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }
}

/// Ranks of all boundary maps of a chain complex. `boundaries[i]` maps
/// degree i to degree i-1 and must have `dims[i]` columns; composition
/// of consecutive maps must vanish (the caller's responsibility, which
/// makes the clearing step below sound: a pivot row of one reduction
/// indexes a column of the next map that reduces to zero).
pub fn chain_ranks(dims: &[usize], boundaries: &[SparseGf2]) -> Result<Vec<usize>> {
    if dims.len() != boundaries.len() {
        return Err(Error::Internal(format!(
            "chain complex with {} degrees but {} boundary maps",
            dims.len(),
            boundaries.len()
        )));
    }
    for (i, b) in boundaries.iter().enumerate() {
        if b.cols() != dims[i] {
            return Err(Error::Internal(format!(
                "boundary {i} has {} columns, expected {}",
                b.cols(),
                dims[i]
            )));
        }
        if i > 0 && b.rows() != dims[i - 1] {
            return Err(Error::Internal(format!(
                "boundary {i} has {} rows, expected {}",
                b.rows(),
                dims[i - 1]
            )));
        }
    }
    let mut ranks = vec![0; dims.len()];
    let mut cleared = vec![false; 0];
    for i in (0..dims.len()).rev() {
        if cleared.len() != dims[i] {
            // No higher map provided clearing information for this
            // degree (first iteration).
            cleared = vec![false; dims[i]];
        }
        let (rank, pivot_rows) = boundaries[i].reduce(&cleared);
        ranks[i] = rank;
        cleared = pivot_rows;
    }
    Ok(ranks)
}

/// Checks that consecutive boundary maps compose to zero.
pub fn composes_to_zero(upper: &SparseGf2, lower: &SparseGf2) -> bool {
    let mut acc = DenseColumn::new(lower.rows());
    for c in 0..upper.cols() {
        for &r in upper.column(c) {
            acc.xor_sparse(lower.column(r as usize));
        }
        if acc.highest_set(lower.rows()).is_some() {
            return false;
        }
        acc.clear();
    }
    true
}

/// Homology dimensions from chain dimensions and boundary ranks.
pub fn homology_from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..dims.len())
        .map(|i| {
            let outgoing = ranks[i];
            let incoming = if i + 1 < dims.len() { ranks[i + 1] } else { 0 };
            dims[i] - outgoing - incoming
        })
        .collect()
}
