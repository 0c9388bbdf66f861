//! Class functions and symmetric group characters.
//!
//! Irreducible characters are computed by rim-hook removal on beta
//! sets, memoized and cached per group order. An independent engine
//! extracts the same values as monomial coefficients of Vandermonde
//! times power-sum products; the two are compared in tests and in the
//! verification suites, never assumed equal.
//!
//! A `ClassFunction` holds exact rational values indexed by the
//! canonical class order (`partitions_of(n)`).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, Zero};

use crate::counting::factorial;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tiling::ordered_count_for_type;

/// Largest group order for which character tables are built on demand.
pub const MAX_CHARACTER_N: u32 = 18;

/// A class function on S_n: one rational value per conjugacy class, in
/// canonical class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn new(n: u32, values: Vec<BigRational>) -> Result<Self> {
        let expected = partitions_of(n).len();
        if values.len() != expected {
            return Err(Error::InvalidInput(format!(
                "class function on S_{n} needs {expected} values, got {}",
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    pub fn from_integer_values(n: u32, values: Vec<i64>) -> Result<Self> {
        Self::new(n, values.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
    }

    pub fn from_u64_values(n: u32, values: Vec<u64>) -> Result<Self> {
        Self::new(n, values.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
    }

    /// Builds from a value function evaluated on each class.
    pub fn from_fn(n: u32, mut f: impl FnMut(&Partition) -> BigRational) -> Self {
        let values = partitions_of(n).iter().map(&mut f).collect();
        Self { n, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn classes(&self) -> Vec<Partition> {
        partitions_of(self.n)
    }

    /// Value on the class of the given cycle type.
    pub fn value(&self, class: &Partition) -> Result<&BigRational> {
        if class.weight() != self.n {
            return Err(Error::InvalidInput(format!(
                "class {class} has weight {}, class function lives on S_{}",
                class.weight(),
                self.n
            )));
        }
        let idx = partitions_of(self.n)
            .iter()
            .position(|p| p == class)
            .expect("every partition of n is a class");
        Ok(&self.values[idx])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (the character of a tensor product when both
    /// sides are characters).
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { n: self.n, values: self.values.iter().map(|v| v * k).collect() }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidInput(format!(
                "class functions live on different groups: S_{} and S_{}",
                self.n, other.n
            )));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Self { n: self.n, values })
    }
}

/// Normalized inner product (1/n!) sum over classes of
/// class size times f times g. Characters are integral, so no
/// conjugation is involved.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n() != g.n() {
        return Err(Error::InvalidInput(format!(
            "inner product needs one group, got S_{} and S_{}",
            f.n(),
            g.n()
        )));
    }
    let mut acc = BigRational::zero();
    for (class, (a, b)) in partitions_of(f.n()).iter().zip(f.values().iter().zip(g.values())) {
        acc += BigRational::from_integer(BigInt::from(class.class_size())) * a * b;
    }
    Ok(acc / BigRational::from_integer(BigInt::from(factorial(f.n()))))
}

/// The character table of S_n: rows are irreducible characters, both
/// axes in canonical partition order.
#[derive(Debug)]
pub struct CharacterTable {
    n: u32,
    classes: Vec<Partition>,
    rows: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Character value by row label and class label.
    pub fn value(&self, lambda: &Partition, class: &Partition) -> Result<i64> {
        let li = self.index_of(lambda)?;
        let ci = self.index_of(class)?;
        Ok(self.rows[li][ci])
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.classes.iter().position(|q| q == p).ok_or_else(|| {
            Error::InvalidInput(format!("{p} is not a partition of {}", self.n))
        })
    }

    pub fn row(&self, lambda: &Partition) -> Result<&[i64]> {
        Ok(&self.rows[self.index_of(lambda)?])
    }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();

/// The full character table of S_n, computed once and cached.
pub fn character_table(n: u32) -> Result<Arc<CharacterTable>> {
    if n > MAX_CHARACTER_N {
        return Err(Error::ResourceLimit(format!(
            "character tables supported up to n = {MAX_CHARACTER_N}, requested {n}"
        )));
    }
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("table cache poisoned");
    if let Some(t) = guard.get(&n) {
        return Ok(Arc::clone(t));
    }
    let classes = partitions_of(n);
    let mut memo: HashMap<(Vec<u32>, Vec<u32>), i64> = HashMap::new();
    let rows: Vec<Vec<i64>> = classes
        .iter()
        .map(|lam| {
            classes
                .iter()
                .map(|mu| rim_hook_value(lam.parts().to_vec(), mu.parts(), &mut memo))
                .collect()
        })
        .collect();
    let table = Arc::new(CharacterTable { n, classes, rows });
    guard.insert(n, Arc::clone(&table));
    Ok(table)
}

/// All ways to remove a rim hook of length t, as (sign, remaining
/// shape). Works on the beta set: replace some b by b - t when b - t is
/// absent; the sign is (-1)^(number of beta elements strictly between).
fn rim_hook_removals(lambda: &[u32], t: u32) -> Vec<(i64, Vec<u32>)> {
    let l = lambda.len();
    let beta: Vec<u32> =
        lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i) as u32).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < t {
            break; // beta is strictly decreasing
        }
        let c = b - t;
        if beta.contains(&c) {
            continue;
        }
        let ht = beta.iter().filter(|&&x| c < x && x < b).count();
        let sign = if ht % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = c;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut rest: Vec<u32> =
            nb.iter().enumerate().map(|(j, &x)| x - (l - 1 - j) as u32).collect();
        while rest.last() == Some(&0) {
            rest.pop();
        }
        out.push((sign, rest));
    }
    out
}

fn rim_hook_value(
    lambda: Vec<u32>,
    mu: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if mu.is_empty() {
        debug_assert!(lambda.is_empty());
        return 1;
    }
    let key = (lambda, mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = mu[0];
    let mut acc = 0i64;
    for (sign, rest) in rim_hook_removals(&key.0, t) {
        acc += sign * rim_hook_value(rest, &mu[1..], memo);
    }
    memo.insert(key, acc);
    acc
}

/// The irreducible character indexed by lambda, from the cached table.
pub fn irreducible_character(lambda: &Partition) -> Result<ClassFunction> {
    let table = character_table(lambda.weight())?;
    ClassFunction::from_integer_values(lambda.weight(), table.row(lambda)?.to_vec())
}

/// The permutation character of S_n acting on cosets of the Young
/// subgroup of shape lambda: its value on a class is the ordered tiling
/// count of the shape.
pub fn perm_character(lambda: &Partition) -> ClassFunction {
    let n = lambda.weight();
    ClassFunction::from_fn(n, |class| {
        BigRational::from_integer(ordered_count_for_type(lambda.parts(), class).into())
    })
}

/// Largest n accepted by the coefficient-extraction character engine.
pub const MAX_FROBENIUS_N: u32 = 9;

/// Character values extracted as monomial coefficients: the value on a
/// class mu is the coefficient of x^(lambda + staircase) in the
/// Vandermonde determinant times the power sums of the parts of mu.
/// Slower than rim hooks and capped accordingly; exists to cross-check
/// them from an unrelated direction.
pub fn frobenius_character(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.weight();
    if n > MAX_FROBENIUS_N {
        return Err(Error::ResourceLimit(format!(
            "coefficient extraction supported up to n = {MAX_FROBENIUS_N}, requested {n}"
        )));
    }
    let l = lambda.len().max(1);
    let cap: Vec<u16> = (0..l)
        .map(|i| {
            let part = lambda.parts().get(i).copied().unwrap_or(0) as u16;
            part + (l - 1 - i) as u16
        })
        .collect();
    let vandermonde = signed_permutations(l);
    let values = partitions_of(n)
        .iter()
        .map(|mu| {
            let mut poly: HashMap<Vec<u16>, i64> = HashMap::new();
            for (perm, sign) in &vandermonde {
                // monomial x_i^{perm staircase}, feasible iff within caps
                let exps: Vec<u16> = perm.iter().map(|&j| (l - 1 - j) as u16).collect();
                if exps.iter().zip(&cap).all(|(e, c)| e <= c) {
                    *poly.entry(exps).or_insert(0) += sign;
                }
            }
            for &t in mu.parts() {
                let t = t as u16;
                let mut next: HashMap<Vec<u16>, i64> = HashMap::new();
                for (exps, coeff) in &poly {
                    for i in 0..l {
                        if exps[i] + t <= cap[i] {
                            let mut e = exps.clone();
                            e[i] += t;
                            *next.entry(e).or_insert(0) += coeff;
                        }
                    }
                }
                next.retain(|_, c| *c != 0);
                poly = next;
            }
            poly.get(&cap).copied().unwrap_or(0)
        })
        .collect();
    ClassFunction::from_integer_values(n, values)
}

fn signed_permutations(l: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l);
    let mut used = vec![false; l];
    fn rec(l: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == l {
            let mut inv = 0u32;
            for i in 0..l {
                for j in i + 1..l {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv.is_multiple_of(2) { 1 } else { -1 }));
            return;
        }
        for v in 0..l {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(l, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(l, &mut cur, &mut used, &mut out);
    out
}

/// The Kostka numbers of weight n: entry (mu, lambda) is the
/// multiplicity of the irreducible mu in the permutation character of
/// shape lambda. Both axes run in canonical partition order.
#[derive(Debug, Clone)]
pub struct KostkaMatrix {
    n: u32,
    partitions: Vec<Partition>,
    entries: Vec<Vec<u64>>,
}

impl KostkaMatrix {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Row index mu (irreducible), column index lambda (shape).
    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn value(&self, mu: &Partition, lambda: &Partition) -> Result<u64> {
        let mi = self.index_of(mu)?;
        let li = self.index_of(lambda)?;
        Ok(self.entries[mi][li])
    }

    fn index_of(&self, p: &Partition) -> Result<usize> {
        self.partitions.iter().position(|q| q == p).ok_or_else(|| {
            Error::InvalidInput(format!("{p} is not a partition of {}", self.n))
        })
    }
}

/// Computes the full Kostka matrix by decomposing every permutation
/// character against the character table.
pub fn kostka_matrix(n: u32) -> Result<KostkaMatrix> {
    let table = character_table(n)?;
    let classes = table.classes().to_vec();
    let sizes: Vec<i128> = classes.iter().map(|c| c.class_size() as i128).collect();
    let zetas: Vec<Vec<i128>> = classes
        .iter()
        .map(|lam| {
            classes
                .iter()
                .map(|mu| ordered_count_for_type(lam.parts(), mu) as i128)
                .collect()
        })
        .collect();
    let order = factorial(n) as i128;
    let entries: Vec<Vec<u64>> = classes
        .iter()
        .enumerate()
        .map(|(mi, _)| {
            (0..classes.len())
                .map(|li| {
                    let mut acc: i128 = 0;
                    for ci in 0..classes.len() {
                        acc += sizes[ci] * zetas[li][ci] * i128::from(table.rows()[mi][ci]);
                    }
                    debug_assert_eq!(acc % order, 0, "non-integral multiplicity");
                    let v = acc / order;
                    debug_assert!(v >= 0);
                    v as u64
                })
                .collect()
        })
        .collect();
    Ok(KostkaMatrix { n, partitions: classes, entries })
}

/// Signed shapes expressing an irreducible character as an alternating
/// sum of permutation characters: straighten lambda_i - i + sigma(i)
/// over all sigma, keeping the rearrangements with no negative part.
/// Output order follows lexicographic enumeration of sigma.
pub fn doubilet_shapes(lambda: &Partition) -> Vec<(i64, Partition)> {
    let l = lambda.len();
    if l == 0 {
        return vec![(1, Partition::empty())];
    }
    signed_permutations(l)
        .into_iter()
        .filter_map(|(sigma, sign)| {
            let mut parts = Vec::with_capacity(l);
            for (i, &s) in sigma.iter().enumerate() {
                let v = lambda.parts()[i] as i64 - i as i64 + s as i64;
                if v < 0 {
                    return None;
                }
                parts.push(v as u32);
            }
            Some((sign, Partition::from_unsorted(parts)))
        })
        .collect()
}

/// Kronecker coefficient: the multiplicity of the nu-irreducible in the
/// tensor product of the lambda- and mu-irreducibles.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return Err(Error::InvalidInput(format!(
            "Kronecker coefficients need equal weights, got |{lambda}|, |{mu}|, |{nu}|"
        )));
    }
    let table = character_table(n)?;
    let a = table.row(lambda)?;
    let b = table.row(mu)?;
    let c = table.row(nu)?;
    let mut acc: i128 = 0;
    for (ci, class) in table.classes().iter().enumerate() {
        acc += class.class_size() as i128
            * i128::from(a[ci])
            * i128::from(b[ci])
            * i128::from(c[ci]);
    }
    let order = factorial(n) as i128;
    if acc % order != 0 || acc < 0 {
        return Err(Error::Internal(format!(
            "Kronecker sum {acc} is not a nonnegative multiple of {order}"
        )));
    }
    Ok((acc / order) as u64)
}

/// The sign of a class: (-1)^(n - number of parts).
pub fn class_sign(class: &Partition) -> i64 {
    if (class.weight() as usize - class.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn character_table_of_s5() {
        // Classes in canonical order: (5),(4,1),(3,2),(3,1,1),(2,2,1),
        // (2,1,1,1),(1,1,1,1,1); rows likewise.
        let t = character_table(5).unwrap();
        let expect: Vec<(&[u32], Vec<i64>)> = vec![
            (&[5], vec![1, 1, 1, 1, 1, 1, 1]),
            (&[4, 1], vec![-1, 0, -1, 1, 0, 2, 4]),
            (&[3, 2], vec![0, -1, 1, -1, 1, 1, 5]),
            (&[3, 1, 1], vec![1, 0, 0, 0, -2, 0, 6]),
            (&[2, 2, 1], vec![0, 1, -1, -1, 1, -1, 5]),
            (&[2, 1, 1, 1], vec![-1, 0, 1, 1, 0, -2, 4]),
            (&[1, 1, 1, 1, 1], vec![1, -1, -1, 1, 1, -1, 1]),
        ];
        for (lam, row) in expect {
            assert_eq!(t.row(&p(lam)).unwrap(), row.as_slice(), "row {lam:?}");
        }
    }

    #[test]
    fn dimensions_match_hook_products() {
        // Value at the identity class equals n! over the product of
        // hook lengths, an unrelated formula.
        for n in 1..=10u32 {
            let t = character_table(n).unwrap();
            let id = p(&vec![1; n as usize]);
            for lam in partitions_of(n) {
                let hooks = hook_product(&lam);
                assert_eq!(factorial(n) % hooks, 0);
                let dim = (factorial(n) / hooks) as i64;
                assert_eq!(t.value(&lam, &id).unwrap(), dim, "λ = {lam}");
            }
        }
    }

    fn hook_product(lam: &Partition) -> u64 {
        let conj = lam.conjugate();
        let mut prod = 1u64;
        for (i, &part) in lam.parts().iter().enumerate() {
            for j in 0..part as usize {
                let arm = part as u64 - j as u64 - 1;
                let leg = conj.parts()[j] as u64 - i as u64 - 1;
                prod *= arm + leg + 1;
            }
        }
        prod
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=8u32 {
            let t = character_table(n).unwrap();
            let chars: Vec<ClassFunction> = partitions_of(n)
                .iter()
                .map(|lam| irreducible_character(lam).unwrap())
                .collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let ip = inner_product(a, b).unwrap();
                    let expect = if i == j { rat(1) } else { rat(0) };
                    assert_eq!(ip, expect, "rows {i},{j} of S_{}", t.n());
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        // Sum over rows of chi(mu) chi(nu) is the centralizer order when
        // mu = nu and zero otherwise.
        for n in 1..=8u32 {
            let t = character_table(n).unwrap();
            let classes = t.classes();
            for (ci, cu) in classes.iter().enumerate() {
                for (cj, cv) in classes.iter().enumerate() {
                    let s: i64 = t.rows().iter().map(|row| row[ci] * row[cj]).sum();
                    let expect =
                        if ci == cj { cu.centralizer_order() as i64 } else { 0 };
                    assert_eq!(s, expect, "classes {cu}, {cv}");
                }
            }
        }
    }

    #[test]
    fn conjugate_twists_by_sign() {
        for n in 1..=9u32 {
            let t = character_table(n).unwrap();
            for lam in partitions_of(n) {
                let conj = lam.conjugate();
                for class in t.classes() {
                    let lhs = t.value(&conj, class).unwrap();
                    let rhs = class_sign(class) * t.value(&lam, class).unwrap();
                    assert_eq!(lhs, rhs, "λ = {lam}, class {class}");
                }
            }
        }
    }

    #[test]
    fn coefficient_extraction_agrees_with_rim_hooks() {
        for n in 1..=6u32 {
            for lam in partitions_of(n) {
                let a = frobenius_character(&lam).unwrap();
                let b = irreducible_character(&lam).unwrap();
                assert_eq!(a, b, "λ = {lam}");
            }
        }
    }

    #[test]
    fn perm_character_contains_trivial_once() {
        for n in 1..=7u32 {
            let triv = irreducible_character(&p(&[n])).unwrap();
            for lam in partitions_of(n) {
                let zeta = perm_character(&lam);
                assert_eq!(inner_product(&zeta, &triv).unwrap(), rat(1), "λ = {lam}");
            }
        }
    }

    #[test]
    fn kostka_against_tableau_counting() {
        for n in 1..=6u32 {
            let k = kostka_matrix(n).unwrap();
            for mu in partitions_of(n) {
                for lam in partitions_of(n) {
                    let direct = ssyt_count(&mu, &lam);
                    assert_eq!(
                        k.value(&mu, &lam).unwrap(),
                        direct,
                        "K({mu}; {lam}) in S_{n}"
                    );
                }
            }
        }
    }

    /// Brute-force count of semistandard tableaux of the given shape and
    /// content, filled cell by cell.
    fn ssyt_count(shape: &Partition, content: &Partition) -> u64 {
        let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
        let mut quota: Vec<u32> = content.parts().to_vec();
        let mut grid: Vec<Vec<u32>> = rows.iter().map(|&r| vec![0; r]).collect();
        fn rec(
            rows: &[usize],
            grid: &mut Vec<Vec<u32>>,
            quota: &mut Vec<u32>,
            r: usize,
            c: usize,
        ) -> u64 {
            if r == rows.len() {
                return 1;
            }
            if c == rows[r] {
                return rec(rows, grid, quota, r + 1, 0);
            }
            let mut total = 0;
            for v in 1..=quota.len() as u32 {
                if quota[v as usize - 1] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && c < rows[r - 1] && grid[r - 1][c] >= v {
                    continue;
                }
                quota[v as usize - 1] -= 1;
                grid[r][c] = v;
                total += rec(rows, grid, quota, r, c + 1);
                quota[v as usize - 1] += 1;
            }
            total
        }
        rec(&rows, &mut grid, &mut quota, 0, 0)
    }

    #[test]
    fn kostka_support_is_dominance() {
        for n in 1..=7u32 {
            let k = kostka_matrix(n).unwrap();
            for mu in partitions_of(n) {
                for lam in partitions_of(n) {
                    let positive = k.value(&mu, &lam).unwrap() > 0;
                    let dominates = lam.dominance_leq(&mu).unwrap();
                    assert_eq!(positive, dominates, "K({mu}; {lam})");
                }
                assert_eq!(k.value(&mu, &mu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn permutation_characters_decompose_by_kostka() {
        for n in 1..=6u32 {
            let k = kostka_matrix(n).unwrap();
            for lam in partitions_of(n) {
                let zeta = perm_character(&lam);
                let mut rebuilt = ClassFunction::from_fn(n, |_| BigRational::zero());
                for mu in partitions_of(n) {
                    let coeff = rat(k.value(&mu, &lam).unwrap() as i64);
                    rebuilt = rebuilt
                        .add(&irreducible_character(&mu).unwrap().scale(&coeff))
                        .unwrap();
                }
                assert_eq!(rebuilt, zeta, "λ = {lam}");
            }
        }
    }

    #[test]
    fn signed_shapes_invert_to_irreducibles() {
        // The alternating sum of permutation characters over the signed
        // shapes reproduces the irreducible pointwise.
        for n in 1..=7u32 {
            for lam in partitions_of(n) {
                let mut acc = ClassFunction::from_fn(n, |_| BigRational::zero());
                for (sign, shape) in doubilet_shapes(&lam) {
                    acc = acc.add(&perm_character(&shape).scale(&rat(sign))).unwrap();
                }
                assert_eq!(acc, irreducible_character(&lam).unwrap(), "λ = {lam}");
            }
        }
    }

    #[test]
    fn signed_shapes_for_hooklike_rows() {
        let shapes = doubilet_shapes(&p(&[4, 1]));
        assert_eq!(shapes, vec![(1, p(&[4, 1])), (-1, p(&[5]))]);
        let single = doubilet_shapes(&p(&[6]));
        assert_eq!(single, vec![(1, p(&[6]))]);
    }

    #[test]
    fn kronecker_basics() {
        // Square of the standard-plus-trivial piece of S_3.
        let g = kronecker(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(g, 1);
        // Tensor with the trivial picks out equality.
        for n in 1..=5u32 {
            for lam in partitions_of(n) {
                for mu in partitions_of(n) {
                    let with_trivial = kronecker(&lam, &mu, &p(&[n])).unwrap();
                    assert_eq!(with_trivial, u64::from(lam == mu));
                    let with_sign = kronecker(&lam, &mu, &p(&vec![1; n as usize])).unwrap();
                    assert_eq!(with_sign, u64::from(lam == mu.conjugate()));
                }
            }
        }
    }

    #[test]
    fn kronecker_is_symmetric() {
        for lam in partitions_of(5) {
            for mu in partitions_of(5) {
                for nu in partitions_of(5) {
                    let g = kronecker(&lam, &mu, &nu).unwrap();
                    assert_eq!(g, kronecker(&mu, &lam, &nu).unwrap());
                    assert_eq!(g, kronecker(&nu, &mu, &lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn tensor_square_decomposition() {
        // chi^(3,1) tensored with itself in S_4: multiplicities over all
        // irreducibles are 1,1,1,1,0 in canonical order.
        let a = irreducible_character(&p(&[3, 1])).unwrap();
        let sq = a.pointwise_mul(&a).unwrap();
        let mults: Vec<BigRational> = partitions_of(4)
            .iter()
            .map(|mu| inner_product(&sq, &irreducible_character(mu).unwrap()).unwrap())
            .collect();
        assert_eq!(mults, vec![rat(1), rat(1), rat(1), rat(1), rat(0)]);
        assert!(inner_product(&a, &a).unwrap().is_one());
    }

    #[test]
    fn class_function_value_lookup() {
        let f = perm_character(&p(&[2, 2, 1]));
        assert_eq!(f.value(&p(&[2, 2, 1])).unwrap(), &rat(2));
        assert_eq!(f.value(&p(&[2, 1, 1, 1])).unwrap(), &rat(6));
        assert!(f.value(&p(&[2, 1])).is_err());
    }

    #[test]
    fn table_cache_is_shared() {
        let a = character_table(6).unwrap();
        let b = character_table(6).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    #[ignore = "builds the 135-class table; exercised through the verification suite"]
    fn fourteen_row_spot_checks() {
        let t = character_table(14).unwrap();
        let trivial = p(&[14]);
        let id = p(&[1; 14]);
        for class in &t.classes {
            assert_eq!(t.value(&trivial, class).unwrap(), 1);
        }
        // Hook-length dimensions of two standard rows.
        assert_eq!(t.value(&p(&[13, 1]), &id).unwrap(), 13);
        assert_eq!(t.value(&p(&[12, 2]), &id).unwrap(), 77);
        assert_eq!(t.value(&p(&[12, 1, 1]), &id).unwrap(), 78);
    }
}
