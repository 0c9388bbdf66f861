//! The tiling poset, its GF(2) chain complex, and the homology route
//! to the alternating tiling-count identity.
//!
//! Nodes are ordered tilings of weight j by the bricks of w, graded by
//! rank = j - (number of rows). A tiling covers the tilings obtained
//! by splitting one of its rows in two, and the boundary map sends a
//! tiling to the sum of the tilings it covers. Tilings with the same
//! brick support form a connected piece of the poset, and after
//! relabeling bricks that piece is exactly the complex of ordered set
//! partitions of r elements, the face complex of a solid
//! permutohedron. Boundary ranks therefore only depend on r; they are
//! eliminated once per r and reused, with every reuse checked against
//! the instance's actual matrix block.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::{Arc, Mutex, OnceLock};

use crate::counting::{check_alternating_stirling, factorial, stirling2};
use crate::error::{Error, Result};
use crate::gf2::{chain_ranks, composes_to_zero, homology_from_ranks, SparseGf2};
use crate::partition::{compositions_of, partitions_of};
use crate::permutation::Permutation;
use crate::tiling::{
    bricks_of, crackless_count, ordered_count, subsets_of_weight, unordered_count,
};

/// Largest brick support a single connected piece may have. The piece
/// for r bricks holds an ordered set partition complex with Fubini(r)
/// cells; 8 means half a million cells, 9 would mean seven million.
pub const MAX_COMPONENT_BRICKS: usize = 8;

/// One ordered tiling in the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetNode {
    /// Rows top to bottom; each row is a sorted list of brick indices.
    pub rows: Vec<Vec<u8>>,
    /// j minus the number of rows.
    pub rank: u32,
    /// Row lengths, a composition of j.
    pub shape: Vec<u32>,
    /// Sorted union of the rows.
    pub support: Vec<u8>,
}

/// All ordered tilings of weight j by the bricks of w, with cover
/// relations.
#[derive(Debug, Clone)]
pub struct TilingPoset {
    j: u32,
    nodes: Vec<PosetNode>,
    /// Node index ranges per rank 0..j.
    rank_ranges: Vec<Range<usize>>,
    /// (upper, lower): lower is upper with one row split in two.
    covers: Vec<(u32, u32)>,
    /// Connected pieces, one per brick support subset.
    components: Vec<ComponentSpan>,
}

/// Column ranges of one support's nodes inside each rank block.
#[derive(Debug, Clone)]
struct ComponentSpan {
    brick_count: usize,
    /// Indexed by rank; positions within the rank's node block.
    ranges: Vec<Range<usize>>,
}

impl TilingPoset {
    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    /// Indices of the nodes of the given rank.
    pub fn rank_range(&self, rank: usize) -> Range<usize> {
        self.rank_ranges.get(rank).cloned().unwrap_or(0..0)
    }

    pub fn rank_size(&self, rank: usize) -> usize {
        self.rank_range(rank).len()
    }
}

/// Ordered set partitions of one support, indexed by block count: the
/// entry at k-1 lists every split into k rows, each row a brick list.
type GroupedRows = Vec<Vec<Vec<Vec<u8>>>>;

/// Ordered set partitions of `elems`, grouped by block count (index
/// k-1) and sorted lexicographically within each group.
fn ordered_partitions_by_blocks(elems: &[u8]) -> GroupedRows {
    let r = elems.len();
    let mut out: GroupedRows = vec![Vec::new(); r];
    let mut current: Vec<Vec<u8>> = Vec::new();
    fn rec(remaining: &[u8], current: &mut Vec<Vec<u8>>, out: &mut [Vec<Vec<Vec<u8>>>]) {
        if remaining.is_empty() {
            out[current.len() - 1].push(current.clone());
            return;
        }
        let m = remaining.len();
        for mask in 1u32..1 << m {
            let mut block = Vec::new();
            let mut rest = Vec::new();
            for (pos, &e) in remaining.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    block.push(e);
                } else {
                    rest.push(e);
                }
            }
            current.push(block);
            rec(&rest, current, out);
            current.pop();
        }
    }
    if r > 0 {
        rec(elems, &mut current, &mut out);
        for group in &mut out {
            group.sort_unstable();
        }
    }
    out
}

/// Every way to split one row of the tiling into an ordered pair of
/// nonempty rows.
fn row_splits(rows: &[Vec<u8>]) -> Vec<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    for (t, row) in rows.iter().enumerate() {
        let s = row.len();
        if s < 2 {
            continue;
        }
        for mask in 1u32..(1 << s) - 1 {
            let mut first = Vec::new();
            let mut second = Vec::new();
            for (pos, &b) in row.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    first.push(b);
                } else {
                    second.push(b);
                }
            }
            let mut child = Vec::with_capacity(rows.len() + 1);
            child.extend_from_slice(&rows[..t]);
            child.push(first);
            child.push(second);
            child.extend_from_slice(&rows[t + 1..]);
            out.push(child);
        }
    }
    out
}

/// Builds the poset of all ordered tilings of weight j by the bricks
/// of w. Supports larger than the component cap are refused.
pub fn build_tiling_poset(w: &Permutation, j: u32) -> Result<TilingPoset> {
    let n = w.n();
    if j == 0 || j > n {
        return Err(Error::InvalidInput(format!(
            "tiling poset needs 1 <= j <= n, got j = {j}, n = {n}"
        )));
    }
    let bs = bricks_of(w);
    let mut supports = subsets_of_weight(&bs, j);
    supports.sort_unstable();
    for t in &supports {
        if t.len() > MAX_COMPONENT_BRICKS {
            return Err(Error::ResourceLimit(format!(
                "a weight-{j} subset uses {} bricks; pieces are capped at {MAX_COMPONENT_BRICKS} \
                 bricks (Fubini growth)",
                t.len()
            )));
        }
    }
    let pieces: Vec<(Vec<u8>, GroupedRows)> = supports
        .into_iter()
        .map(|t| {
            let groups = ordered_partitions_by_blocks(&t);
            (t, groups)
        })
        .collect();

    // Global layout: ranks ascending, supports in sorted order inside
    // each rank, lexicographic node order inside each (rank, support)
    // block.
    let j_us = j as usize;
    let mut nodes = Vec::new();
    let mut rank_ranges = Vec::with_capacity(j_us);
    let mut block_start: Vec<Vec<usize>> = vec![vec![usize::MAX; j_us]; pieces.len()];
    let mut components: Vec<ComponentSpan> = pieces
        .iter()
        .map(|(t, _)| ComponentSpan { brick_count: t.len(), ranges: vec![0..0; j_us] })
        .collect();
    // rank drives several parallel structures, not one slice.
    #[allow(clippy::needless_range_loop)]
    for rank in 0..j_us {
        let rank_start = nodes.len();
        let k = j_us - rank;
        for (s, (support, groups)) in pieces.iter().enumerate() {
            if k > support.len() {
                continue;
            }
            let local_start = nodes.len() - rank_start;
            block_start[s][rank] = nodes.len();
            for rows in &groups[k - 1] {
                let shape: Vec<u32> =
                    rows.iter().map(|row| row.iter().map(|&b| bs.brick(b).len()).sum()).collect();
                nodes.push(PosetNode {
                    rows: rows.clone(),
                    rank: rank as u32,
                    shape,
                    support: support.clone(),
                });
            }
            components[s].ranges[rank] = local_start..nodes.len() - rank_start;
        }
        rank_ranges.push(rank_start..nodes.len());
    }

    let mut covers = Vec::new();
    for (s, (_, groups)) in pieces.iter().enumerate() {
        let r = groups.len();
        // k = r would mean all rows are single bricks, with nothing to
        // split, so the last group never contributes columns.
        for k in 1..r {
            let rank = j_us - k;
            let upper_base = block_start[s][rank];
            let lower_group = &groups[k]; // k+1 blocks
            let lower_base = block_start[s][rank - 1];
            for (local, rows) in groups[k - 1].iter().enumerate() {
                for child in row_splits(rows) {
                    let child_local = lower_group
                        .binary_search(&child)
                        .expect("row split must be a node one rank down");
                    covers.push(((upper_base + local) as u32, (lower_base + child_local) as u32));
                }
            }
        }
    }
    covers.sort_unstable();

    Ok(TilingPoset { j, nodes, rank_ranges, covers, components })
}

/// Boundary matrices of the poset over GF(2), degree i holding the
/// rank-i nodes.
#[derive(Debug, Clone)]
pub struct Gf2ChainComplex {
    j: u32,
    dims: Vec<usize>,
    /// boundaries[i] maps degree i to degree i-1; boundaries[0] is the
    /// zero map.
    boundaries: Vec<SparseGf2>,
    components: Vec<ComponentSpan>,
}

impl Gf2ChainComplex {
    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundary(&self, i: usize) -> &SparseGf2 {
        &self.boundaries[i]
    }
}

/// Extracts the boundary matrices and checks that consecutive maps
/// compose to zero.
pub fn boundary_matrices(p: &TilingPoset) -> Result<Gf2ChainComplex> {
    let j = p.j as usize;
    let dims: Vec<usize> = (0..j).map(|i| p.rank_size(i)).collect();
    let mut columns: Vec<Vec<Vec<u32>>> = dims.iter().map(|&d| vec![Vec::new(); d]).collect();
    for &(upper, lower) in &p.covers {
        let rank = p.nodes[upper as usize].rank as usize;
        let col = upper as usize - p.rank_ranges[rank].start;
        let row = lower as usize - p.rank_ranges[rank - 1].start;
        columns[rank][col].push(row as u32);
    }
    let mut boundaries = Vec::with_capacity(j);
    for (i, mut cols) in columns.into_iter().enumerate() {
        for c in &mut cols {
            c.sort_unstable();
        }
        let rows = if i == 0 { 0 } else { dims[i - 1] };
        boundaries.push(SparseGf2::new(rows, cols));
    }
    for i in 1..j {
        if !composes_to_zero(&boundaries[i], &boundaries[i - 1]) {
            return Err(Error::Internal(format!(
                "boundary maps at degrees {i} and {} do not compose to zero",
                i - 1
            )));
        }
    }
    Ok(Gf2ChainComplex { j: p.j, dims, boundaries, components: p.components.clone() })
}

/// Ranks and homology of the abstract ordered set partition complex on
/// r elements, eliminated once and cached.
struct PieceData {
    dims: Vec<usize>,
    boundaries: Vec<SparseGf2>,
    ranks: Vec<usize>,
    /// Per-degree homology of the single piece; consumed by the tests
    /// that pin the known one-block answers.
    #[cfg_attr(not(test), allow(dead_code))]
    homology: Vec<usize>,
}

static PIECES: OnceLock<Mutex<HashMap<usize, Arc<PieceData>>>> = OnceLock::new();

fn piece_data(r: usize) -> Result<Arc<PieceData>> {
    if r == 0 || r > MAX_COMPONENT_BRICKS {
        return Err(Error::ResourceLimit(format!(
            "ordered set partition complexes are computed for 1..={MAX_COMPONENT_BRICKS} \
             elements, got {r}"
        )));
    }
    let cache = PIECES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("piece cache poisoned");
    if let Some(found) = guard.get(&r) {
        return Ok(Arc::clone(found));
    }
    let elems: Vec<u8> = (0..r as u8).collect();
    let groups = ordered_partitions_by_blocks(&elems);
    let dims: Vec<usize> = (0..r).map(|d| groups[r - d - 1].len()).collect();
    let mut boundaries = vec![SparseGf2::zero_map(dims[0])];
    for d in 1..r {
        let k = r - d;
        let lower_group = &groups[k];
        let mut cols = Vec::with_capacity(groups[k - 1].len());
        for rows in &groups[k - 1] {
            let mut col: Vec<u32> = row_splits(rows)
                .into_iter()
                .map(|child| {
                    lower_group.binary_search(&child).expect("split stays in the complex") as u32
                })
                .collect();
            col.sort_unstable();
            cols.push(col);
        }
        boundaries.push(SparseGf2::new(lower_group.len(), cols));
    }
    for d in 1..r {
        if !composes_to_zero(&boundaries[d], &boundaries[d - 1]) {
            return Err(Error::Internal(format!(
                "set partition complex on {r} elements fails d^2 = 0 at degree {d}"
            )));
        }
    }
    let ranks = chain_ranks(&dims, &boundaries)?;
    let homology = homology_from_ranks(&dims, &ranks);
    let data = Arc::new(PieceData { dims, boundaries, ranks, homology });
    guard.insert(r, Arc::clone(&data));
    Ok(data)
}

/// Homology dimensions over GF(2), degree by degree.
///
/// Ranks are assembled per connected piece from the cached elimination
/// of the matching set partition complex; each piece's columns are
/// first compared entry by entry against the cached matrix, so a
/// mismatch surfaces as an internal error instead of a wrong answer.
pub fn homology_dims(c: &Gf2ChainComplex) -> Result<Vec<usize>> {
    let j = c.dims.len();
    for i in 1..j {
        if !composes_to_zero(&c.boundaries[i], &c.boundaries[i - 1]) {
            return Err(Error::Internal(format!(
                "boundary maps at degrees {i} and {} do not compose to zero",
                i - 1
            )));
        }
    }
    let mut ranks = vec![0usize; j];
    for comp in &c.components {
        let r = comp.brick_count;
        let piece = piece_data(r)?;
        let base = j - r;
        for d in 0..r {
            let i = base + d;
            let cols = comp.ranges[i].clone();
            if cols.len() != piece.dims[d] {
                return Err(Error::Internal(format!(
                    "piece with {r} bricks has {} columns at degree {i}, expected {}",
                    cols.len(),
                    piece.dims[d]
                )));
            }
            if d == 0 {
                for col in cols {
                    if !c.boundaries[i].column(col).is_empty() {
                        return Err(Error::Internal(
                            "bottom-degree node with a nonempty boundary".into(),
                        ));
                    }
                }
                continue;
            }
            let row_base = comp.ranges[i - 1].start as u32;
            for (local, col) in cols.enumerate() {
                let instance = c.boundaries[i].column(col);
                let abstract_col = piece.boundaries[d].column(local);
                let matches = instance.len() == abstract_col.len()
                    && instance
                        .iter()
                        .zip(abstract_col)
                        .all(|(&inst, &abs)| inst == abs + row_base);
                if !matches {
                    return Err(Error::Internal(format!(
                        "piece with {r} bricks disagrees with its cached complex at degree {i}"
                    )));
                }
            }
            ranks[i] += piece.ranks[d];
        }
    }
    Ok(homology_from_ranks(&c.dims, &ranks))
}

/// Homology by eliminating the instance's own matrices, with no piece
/// cache. Quadratic in the bigger instances; used to cross-check the
/// assembled route.
pub fn homology_dims_direct(c: &Gf2ChainComplex) -> Result<Vec<usize>> {
    let ranks = chain_ranks(&c.dims, &c.boundaries)?;
    Ok(homology_from_ranks(&c.dims, &ranks))
}

/// The two sides of the alternating tiling-count identity together
/// with the Euler characteristic and homology of the witness complex,
/// all normalized by the common sign (-1)^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingSumReport {
    pub n: u32,
    pub j: u32,
    /// Sum over compositions of j of (-1)^parts times the ordered
    /// tiling count.
    pub lhs: i64,
    /// Sum over partitions of j of (-1)^parts times the crackless
    /// tiling count.
    pub rhs: i64,
    /// Alternating sum of chain dimensions, times (-1)^j.
    pub euler: i64,
    /// Alternating sum of homology dimensions, times (-1)^j.
    pub homology_sum: i64,
    pub dims: Vec<usize>,
    pub homology: Vec<usize>,
    pub all_equal: bool,
}

/// Verifies the alternating identity for one instance through all four
/// quantities: both alternating tiling sums, the Euler characteristic
/// of the chain complex, and its homology.
pub fn verify_alternating_identity(w: &Permutation, j: u32) -> Result<AlternatingSumReport> {
    let poset = build_tiling_poset(w, j)?;
    let complex = boundary_matrices(&poset)?;
    let homology = homology_dims(&complex)?;
    let mut lhs: i64 = 0;
    for mu in compositions_of(j) {
        let sign = if mu.len() % 2 == 0 { 1 } else { -1 };
        lhs += sign * ordered_count(mu.parts(), w) as i64;
    }
    let mut rhs: i64 = 0;
    for mu in partitions_of(j) {
        let sign = if mu.len() % 2 == 0 { 1 } else { -1 };
        rhs += sign * crackless_count(mu.parts(), w) as i64;
    }
    let sign_j = if j.is_multiple_of(2) { 1i64 } else { -1 };
    let mut euler: i64 = 0;
    for (i, &d) in complex.dims().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        euler += sign * d as i64;
    }
    euler *= sign_j;
    let mut homology_sum: i64 = 0;
    for (i, &h) in homology.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        homology_sum += sign * h as i64;
    }
    homology_sum *= sign_j;
    let all_equal = lhs == rhs && rhs == euler && euler == homology_sum;
    Ok(AlternatingSumReport {
        n: w.n(),
        j,
        lhs,
        rhs,
        euler,
        homology_sum,
        dims: complex.dims().to_vec(),
        homology,
        all_equal,
    })
}

/// Checks the subset-counting proof of the same identity termwise:
/// composition sum = partition sum with row-order factorials = signed
/// ordered-partition count per brick subset = signed subset count =
/// crackless sum, with the alternating Stirling identity verified for
/// every subset size encountered.
pub fn verify_counting_proof(w: &Permutation, j: u32) -> bool {
    let bs = bricks_of(w);
    let mut composition_sum: i128 = 0;
    for mu in compositions_of(j) {
        let sign = if mu.len() % 2 == 0 { 1 } else { -1 };
        composition_sum += sign * ordered_count(mu.parts(), w) as i128;
    }
    let mut factorial_sum: i128 = 0;
    for mu in partitions_of(j) {
        let sign: i128 = if mu.len() % 2 == 0 { 1 } else { -1 };
        factorial_sum +=
            sign * factorial(mu.len() as u32) as i128 * unordered_count(mu.parts(), w) as i128;
    }
    let subsets = subsets_of_weight(&bs, j);
    let mut per_subset_sum: i128 = 0;
    let mut signed_subsets: i128 = 0;
    let mut stirling_ok = true;
    for t in &subsets {
        let r = t.len() as u32;
        stirling_ok &= check_alternating_stirling(r);
        for k in 1..=r {
            let term = factorial(k) as i128 * stirling2(r, k) as i128;
            per_subset_sum += if k % 2 == 0 { term } else { -term };
        }
        signed_subsets += if r.is_multiple_of(2) { 1 } else { -1 };
    }
    let mut crackless_sum: i128 = 0;
    for mu in partitions_of(j) {
        let sign = if mu.len() % 2 == 0 { 1 } else { -1 };
        crackless_sum += sign * crackless_count(mu.parts(), w) as i128;
    }
    stirling_ok
        && composition_sum == factorial_sum
        && factorial_sum == per_subset_sum
        && per_subset_sum == signed_subsets
        && signed_subsets == crackless_sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn figure_perm() -> Permutation {
        Permutation::from_cycles(5, &[vec![3, 1], vec![4], vec![5, 2]]).unwrap()
    }

    #[test]
    fn poset_of_the_worked_example() {
        let p = build_tiling_poset(&figure_perm(), 5).unwrap();
        assert_eq!(p.nodes().len(), 13);
        assert_eq!(
            (0..5).map(|i| p.rank_size(i)).collect::<Vec<_>>(),
            vec![0, 0, 6, 6, 1]
        );
        assert_eq!(p.covers().len(), 18);
        // The single rank-4 node covers all six rank-3 nodes.
        let top = p.rank_range(4).start as u32;
        let hit: Vec<u32> =
            p.covers().iter().filter(|&&(u, _)| u == top).map(|&(_, l)| l).collect();
        assert_eq!(hit.len(), 6);
        let rank3 = p.rank_range(3);
        assert!(hit.iter().all(|&l| rank3.contains(&(l as usize))));
    }

    #[test]
    fn homology_of_the_worked_example() {
        let p = build_tiling_poset(&figure_perm(), 5).unwrap();
        let c = boundary_matrices(&p).unwrap();
        let h = homology_dims(&c).unwrap();
        assert_eq!(h, vec![0, 0, 1, 0, 0]);
        assert_eq!(h, homology_dims_direct(&c).unwrap());
        let report = verify_alternating_identity(&figure_perm(), 5).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.lhs, -1);
    }

    #[test]
    fn empty_poset_for_a_long_cycle() {
        let w = Permutation::from_cycle_type(&Partition::new(vec![5]).unwrap());
        let p = build_tiling_poset(&w, 3).unwrap();
        assert!(p.nodes().is_empty());
        let c = boundary_matrices(&p).unwrap();
        assert_eq!(homology_dims(&c).unwrap(), vec![0, 0, 0]);
        let report = verify_alternating_identity(&w, 3).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.lhs, 0);
    }

    #[test]
    fn identity_permutation_small_instances() {
        let w = Permutation::identity(3);
        let p = build_tiling_poset(&w, 2).unwrap();
        // One-row tilings of shape (2): choose 2 of the 3 unit bricks;
        // two-row tilings: ordered pairs.
        assert_eq!(p.rank_size(1), 3);
        assert_eq!(p.rank_size(0), 6);
        let c = boundary_matrices(&p).unwrap();
        assert_eq!(homology_dims(&c).unwrap(), vec![3, 0]);

        let p3 = build_tiling_poset(&w, 3).unwrap();
        let c3 = boundary_matrices(&p3).unwrap();
        assert_eq!(homology_dims(&c3).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn invalid_weights_are_rejected() {
        let w = Permutation::identity(4);
        assert!(build_tiling_poset(&w, 0).is_err());
        assert!(build_tiling_poset(&w, 5).is_err());
    }

    #[test]
    fn chain_dims_match_ordered_counts() {
        for n in 2..=5u32 {
            for lambda in partitions_of(n) {
                let w = Permutation::from_cycle_type(&lambda);
                for j in 1..=n {
                    let p = build_tiling_poset(&w, j).unwrap();
                    for i in 0..j as usize {
                        let expected: u64 = compositions_of(j)
                            .into_iter()
                            .filter(|mu| mu.len() == j as usize - i)
                            .map(|mu| ordered_count(mu.parts(), &w))
                            .sum();
                        assert_eq!(
                            p.rank_size(i) as u64,
                            expected,
                            "n={n} type={lambda} j={j} rank={i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn homology_matches_crackless_counts() {
        for n in 2..=5u32 {
            for lambda in partitions_of(n) {
                let w = Permutation::from_cycle_type(&lambda);
                for j in 1..=n {
                    let p = build_tiling_poset(&w, j).unwrap();
                    let c = boundary_matrices(&p).unwrap();
                    let h = homology_dims(&c).unwrap();
                    assert_eq!(h, homology_dims_direct(&c).unwrap(), "n={n} {lambda} j={j}");
                    for (i, &dim) in h.iter().enumerate() {
                        let expected: u64 = partitions_of(j)
                            .into_iter()
                            .filter(|mu| mu.len() == j as usize - i)
                            .map(|mu| crackless_count(mu.parts(), &w))
                            .sum();
                        assert_eq!(dim as u64, expected, "n={n} type={lambda} j={j} degree={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn length_two_intervals_have_two_intermediates() {
        for n in 2..=5u32 {
            for lambda in partitions_of(n) {
                let w = Permutation::from_cycle_type(&lambda);
                for j in 2..=n {
                    let p = build_tiling_poset(&w, j).unwrap();
                    let mut below: HashMap<u32, Vec<u32>> = HashMap::new();
                    for &(u, l) in p.covers() {
                        below.entry(u).or_default().push(l);
                    }
                    for lowers in below.values() {
                        let mut paths: HashMap<u32, usize> = HashMap::new();
                        for &mid in lowers {
                            for &bottom in below.get(&mid).map(Vec::as_slice).unwrap_or(&[]) {
                                *paths.entry(bottom).or_default() += 1;
                            }
                        }
                        for (&bottom, &count) in &paths {
                            assert_eq!(count, 2, "n={n} type={lambda} j={j} bottom={bottom}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn piece_dims_follow_the_permutohedron_face_vector() {
        use crate::counting::permutohedron_f_vector;
        for r in 1..=5 {
            let piece = piece_data(r).unwrap();
            let expected: Vec<usize> =
                permutohedron_f_vector(r as u32).iter().map(|&v| v as usize).collect();
            assert_eq!(piece.dims, expected, "r={r}");
            let mut want_homology = vec![0; r];
            want_homology[0] = 1;
            assert_eq!(piece.homology, want_homology, "r={r}");
        }
        assert!(piece_data(MAX_COMPONENT_BRICKS + 1).is_err());
    }

    #[test]
    fn alternating_identity_small_sweep() {
        for n in 1..=5u32 {
            for lambda in partitions_of(n) {
                let w = Permutation::from_cycle_type(&lambda);
                for j in 1..=n {
                    let report = verify_alternating_identity(&w, j).unwrap();
                    assert!(report.all_equal, "n={n} type={lambda} j={j}: {report:?}");
                    if j == 1 {
                        let fixed = w.cycle_counts()[0] as i64;
                        assert_eq!(report.lhs, -fixed);
                    }
                }
            }
        }
    }

    #[test]
    fn counting_proof_small_sweep() {
        assert!(verify_counting_proof(&Permutation::identity(4), 4));
        for n in 1..=5u32 {
            for lambda in partitions_of(n) {
                let w = Permutation::from_cycle_type(&lambda);
                for j in 1..=n {
                    assert!(verify_counting_proof(&w, j), "n={n} type={lambda} j={j}");
                }
            }
        }
    }

    #[test]
    #[ignore = "a few seconds; exercised through the verification suite"]
    fn eight_brick_piece_ranks() {
        let piece = piece_data(8).unwrap();
        assert_eq!(piece.dims, vec![40320, 141120, 191520, 126000, 40824, 5796, 254, 1]);
        let mut want = vec![0; 8];
        want[0] = 1;
        assert_eq!(piece.homology, want);
    }

    #[test]
    #[ignore = "tens of seconds; exercised through the verification suite"]
    fn largest_identity_instance() {
        let report = verify_alternating_identity(&Permutation::identity(8), 8).unwrap();
        assert!(report.all_equal, "{report:?}");
        assert_eq!(report.dims.iter().sum::<usize>(), 545835);
        assert_eq!(report.homology, vec![1, 0, 0, 0, 0, 0, 0, 0]);
    }
}
