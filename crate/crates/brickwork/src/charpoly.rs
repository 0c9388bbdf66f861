//! Character polynomials: binomial expressions in the cycle counts
//! that evaluate to irreducible character values uniformly in n.
//!
//! Row shapes come from the crackless generating series
//! (1 - t) prod_i (1 + t^i)^{c_i}; hook shapes from the signed variant
//! prod_i (1 - (-t)^i)^{c_i} / (1 + t). Both are computed exactly with
//! binomial-expansion coefficients, and the hook family is re-derived
//! independently by inclusion-exclusion over crackless counts; the two
//! constructions are compared term by term in tests, and evaluations
//! are checked against the character table.

use num::{BigRational, One};

use crate::partition::{partitions_of, Partition};
use crate::permutation::Permutation;
use crate::poly::BinomialExpansion;
use crate::series::TruncatedSeries;

/// The crackless generating series: the t^j coefficient is the sum over
/// partitions of j of binom(c_1, m_1) binom(c_2, m_2) ..., i.e. the
/// polynomial counting crackless tilings of any shape of weight j.
pub fn gencrackless_series(cap: usize) -> TruncatedSeries<BinomialExpansion> {
    series_product(cap, |_, _| BigRational::one())
}

/// Signed variant used for hooks: the factor for part i carries
/// (-1)^{m(i+1)}, i.e. the t^j coefficient is (-1)^j times the
/// length-alternating crackless sum.
fn gencrackless_alternating(cap: usize) -> TruncatedSeries<BinomialExpansion> {
    series_product(cap, |i, m| {
        if (m * (i + 1)) % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        }
    })
}

/// Expands prod_i sum_m sign(i, m) binom(c_i, m) t^{im} by the product
/// recurrence. Factor i only touches variable c_i, so keys merge
/// without collisions.
fn series_product(
    cap: usize,
    sign: impl Fn(usize, usize) -> BigRational,
) -> TruncatedSeries<BinomialExpansion> {
    let mut coeffs: Vec<BinomialExpansion> = vec![BinomialExpansion::zero(); cap + 1];
    coeffs[0] = BinomialExpansion::one();
    for i in 1..=cap {
        let mut next = coeffs.clone();
        for m in 1..=cap / i {
            let s = sign(i, m);
            for j in i * m..=cap {
                for (key, c) in coeffs[j - i * m].term_map() {
                    let mut k2 = key.clone();
                    if k2.len() < i {
                        k2.resize(i, 0);
                    }
                    debug_assert_eq!(k2[i - 1], 0);
                    k2[i - 1] = m as u16;
                    next[j].add_term(k2, c * &s);
                }
            }
        }
        coeffs = next;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Character polynomial of the two-row family: evaluated on any class
/// of S_n with n >= 2k it gives the character value of the shape
/// (n - k, k). Extracted as the t^k coefficient of
/// (1 - t) prod_i (1 + t^i)^{c_i}.
pub fn charpoly_row(k: usize) -> BinomialExpansion {
    if k == 0 {
        return BinomialExpansion::one();
    }
    let g = gencrackless_series(k);
    g.coeff(k).sub(g.coeff(k - 1))
}

/// Character polynomial of the hook family: evaluated on any class of
/// S_n with n >= k + 1 it gives the character value of the shape
/// (n - k, 1, ..., 1) with k ones. Extracted as the t^k coefficient of
/// prod_i (1 - (-t)^i)^{c_i} / (1 + t).
pub fn charpoly_hook(k: usize) -> BinomialExpansion {
    let h = gencrackless_alternating(k);
    // divide by (1 + t): Q_s = H_s - Q_{s-1}
    let mut q = h.coeff(0).clone();
    for s in 1..=k {
        q = h.coeff(s).sub(&q);
    }
    q
}

/// Independent construction of the hook polynomial:
/// (-1)^k sum over j <= k, lambda |- j of (-1)^{len} times the
/// crackless polynomial of lambda. Exists to cross-check
/// `charpoly_hook`, which comes from a series division instead.
pub fn charpoly_hook_by_counts(k: usize) -> BinomialExpansion {
    let mut acc = BinomialExpansion::zero();
    for j in 0..=k {
        for lam in partitions_of(j as u32) {
            let b = BinomialExpansion::from_partition_multiplicities(&lam);
            if lam.len() % 2 == 0 {
                acc = acc.add(&b);
            } else {
                acc = acc.sub(&b);
            }
        }
    }
    if k % 2 == 1 {
        acc = acc.neg();
    }
    acc
}

/// Evaluates a character polynomial on a conjugacy class.
pub fn evaluate_at_class(poly: &BinomialExpansion, class: &Partition) -> BigRational {
    poly.evaluate(&class.cycle_counts())
}

/// Evaluates a character polynomial at a permutation.
pub fn evaluate(poly: &BinomialExpansion, w: &Permutation) -> BigRational {
    poly.evaluate(&w.cycle_counts())
}

#[cfg(test)]
mod tests {
    use num::BigInt;

    use super::*;
    use crate::classfn::character_table;
    use crate::counting::partition_count;
    use crate::permutation::Permutation;
    use crate::tiling::{bricks_of, crackless_count, subsets_of_weight};

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn expansion(terms: &[(&[u16], i64)]) -> BinomialExpansion {
        let mut b = BinomialExpansion::zero();
        for &(key, c) in terms {
            b.add_term(key.to_vec(), rat(c));
        }
        b
    }

    #[test]
    fn crackless_series_counts_partitions() {
        let g = gencrackless_series(10);
        for j in 0..=10usize {
            let terms = g.coeff(j).term_map().len();
            assert_eq!(terms as u64, partition_count(j as u32), "t^{j}");
        }
    }

    #[test]
    fn crackless_series_sums_subset_counts() {
        // Evaluated at a permutation, the t^j coefficient counts brick
        // subsets of weight j.
        for word in ["123456", "214365", "234561", "653421"] {
            let w: Permutation = word.parse().unwrap();
            let bs = bricks_of(&w);
            let g = gencrackless_series(6);
            for j in 0..=6usize {
                let direct = subsets_of_weight(&bs, j as u32).len() as i64;
                assert_eq!(evaluate(g.coeff(j), &w), rat(direct), "word {word}, t^{j}");
            }
        }
    }

    #[test]
    fn crackless_series_coefficient_is_eta_sum() {
        let g = gencrackless_series(7);
        for j in 1..=7u32 {
            let mut expect = BinomialExpansion::zero();
            for lam in partitions_of(j) {
                expect = expect.add(&BinomialExpansion::from_partition_multiplicities(&lam));
            }
            assert_eq!(g.coeff(j as usize), &expect, "t^{j}");
        }
    }

    #[test]
    fn row_polynomials_match_frozen_tables() {
        // k = 1: binom(c1,1) - 1.
        assert_eq!(charpoly_row(1), expansion(&[(&[1], 1), (&[], -1)]));
        // k = 2: binom(c2,1) + binom(c1,2) - binom(c1,1).
        assert_eq!(
            charpoly_row(2),
            expansion(&[(&[0, 1], 1), (&[2], 1), (&[1], -1)])
        );
        assert_eq!(charpoly_row(2).render("c"), "binom(c2,1) + binom(c1,2) - binom(c1,1)");
        // k = 3: binom(c3,1) + binom(c1,1)binom(c2,1) + binom(c1,3)
        //        - binom(c2,1) - binom(c1,2).
        assert_eq!(
            charpoly_row(3),
            expansion(&[
                (&[0, 0, 1], 1),
                (&[1, 1], 1),
                (&[3], 1),
                (&[0, 1], -1),
                (&[2], -1),
            ])
        );
        assert_eq!(
            charpoly_row(3).render("c"),
            "binom(c3,1) + binom(c2,1)binom(c1,1) + binom(c1,3) - binom(c2,1) - binom(c1,2)"
        );
    }

    #[test]
    fn hook_polynomials_match_frozen_tables() {
        // k = 1: binom(c1,1) - 1.
        assert_eq!(charpoly_hook(1), expansion(&[(&[1], 1), (&[], -1)]));
        // k = 2: binom(c1,2) - binom(c2,1) - binom(c1,1) + 1.
        assert_eq!(
            charpoly_hook(2),
            expansion(&[(&[2], 1), (&[0, 1], -1), (&[1], -1), (&[], 1)])
        );
        // k = 3: binom(c3,1) - binom(c1,1)binom(c2,1) + binom(c1,3)
        //        - binom(c1,2) + binom(c2,1) + binom(c1,1) - 1.
        assert_eq!(
            charpoly_hook(3),
            expansion(&[
                (&[0, 0, 1], 1),
                (&[1, 1], -1),
                (&[3], 1),
                (&[2], -1),
                (&[0, 1], 1),
                (&[1], 1),
                (&[], -1),
            ])
        );
        // Value at the identity of S_6 is the dimension of the hook
        // with three ones: 10.
        assert_eq!(evaluate_at_class(&charpoly_hook(3), &Partition::new(vec![1; 6]).unwrap()), rat(10));
    }

    #[test]
    fn hook_routes_agree() {
        for k in 0..=7 {
            assert_eq!(charpoly_hook(k), charpoly_hook_by_counts(k), "k = {k}");
        }
    }

    #[test]
    fn row_values_match_character_table() {
        for k in 1..=5usize {
            let q = charpoly_row(k);
            for n in (2 * k as u32)..=(2 * k as u32 + 3) {
                let t = character_table(n).unwrap();
                let lam = Partition::new(vec![n - k as u32, k as u32]).unwrap();
                for class in t.classes() {
                    let got = evaluate_at_class(&q, class);
                    let expect = rat(t.value(&lam, class).unwrap());
                    assert_eq!(got, expect, "k = {k}, n = {n}, class {class}");
                }
            }
        }
    }

    #[test]
    fn hook_values_match_character_table() {
        for k in 1..=5usize {
            let q = charpoly_hook(k);
            for n in (k as u32 + 1)..=(k as u32 + 5) {
                let t = character_table(n).unwrap();
                let mut parts = vec![n - k as u32];
                parts.extend(std::iter::repeat_n(1, k));
                let lam = Partition::from_unsorted(parts);
                for class in t.classes() {
                    let got = evaluate_at_class(&q, class);
                    let expect = rat(t.value(&lam, class).unwrap());
                    assert_eq!(got, expect, "k = {k}, n = {n}, class {class}");
                }
            }
        }
    }

    #[test]
    fn crackless_evaluation_matches_enumeration() {
        // The series coefficient evaluated on a class equals the sum of
        // crackless counts over shapes of that weight.
        let g = gencrackless_series(5);
        for n in 1..=6u32 {
            for ct in partitions_of(n) {
                let w = Permutation::from_cycle_type(&ct);
                for j in 1..=5u32 {
                    let total: i64 = partitions_of(j)
                        .iter()
                        .map(|lam| crackless_count(lam.parts(), &w) as i64)
                        .sum();
                    assert_eq!(
                        evaluate_at_class(g.coeff(j as usize), &ct),
                        rat(total),
                        "class {ct}, j = {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_orders() {
        assert_eq!(charpoly_row(0), BinomialExpansion::one());
        assert_eq!(charpoly_hook(0), BinomialExpansion::one());
    }
}
