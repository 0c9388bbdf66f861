//! The cycle index of S_n and its generating series.
//!
//! The cycle index is the average over the group of the monomials
//! x_1^{c_1} x_2^{c_2} ... recording cycle counts. Its generating
//! series over all n is the exponential of sum x_i t^i / i, and
//! substituting explicit values or polynomials for the x_i turns it
//! into the classical counting series checked in the tests.

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::partition::partitions_of;
use crate::poly::ClassPolynomial;
use crate::series::TruncatedSeries;

/// The cycle index of S_n as a polynomial in x_1 .. x_n with rational
/// coefficients: sum over cycle types of (1/z) times the cycle-count
/// monomial.
pub fn cycle_index(n: u32) -> ClassPolynomial {
    let mut out = ClassPolynomial::zero();
    for lam in partitions_of(n) {
        let key: Vec<u16> = lam.cycle_counts().iter().map(|&c| c as u16).collect();
        let z = BigRational::from_integer(BigInt::from(lam.centralizer_order()));
        out.add_term(key, z.recip());
    }
    out
}

/// The generating series of the cycle indices: coefficients t^0 .. t^cap
/// are the cycle indices of S_0 .. S_cap, produced as the exponential
/// of sum over i of x_i t^i / i.
pub fn gamma_series(cap: usize) -> TruncatedSeries<ClassPolynomial> {
    let mut arg = TruncatedSeries::<ClassPolynomial>::zero(cap);
    for i in 1..=cap {
        arg.set(i, ClassPolynomial::var(i).div_u32(i as u32));
    }
    arg.exp().expect("argument has zero constant term")
}

/// Substitutes a univariate polynomial (coefficients of x^0 .. x^xcap)
/// for every variable: x_i becomes subs(i). Truncates at x^xcap.
pub fn substitute_univariate(
    poly: &ClassPolynomial,
    subs: impl Fn(u32) -> Vec<BigRational>,
    xcap: usize,
) -> Vec<BigRational> {
    let mut acc = vec![BigRational::zero(); xcap + 1];
    for (key, coeff) in poly.terms() {
        let mut term = vec![BigRational::zero(); xcap + 1];
        term[0] = coeff.clone();
        for (i, &e) in key.iter().enumerate() {
            for _ in 0..e {
                term = unipoly_mul(&term, &subs(i as u32 + 1), xcap);
            }
        }
        for (a, t) in acc.iter_mut().zip(&term) {
            *a += t;
        }
    }
    acc
}

fn unipoly_mul(a: &[BigRational], b: &[BigRational], xcap: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); xcap + 1];
    for (i, av) in a.iter().enumerate() {
        if av.is_zero() {
            continue;
        }
        for (j, bv) in b.iter().enumerate() {
            if i + j > xcap {
                break;
            }
            if bv.is_zero() {
                continue;
            }
            out[i + j] += av * bv;
        }
    }
    out
}

/// Mean number of k-cycles of a uniformly random permutation in S_n:
/// the sum over cycle types of multiplicity of k divided by the
/// centralizer order. Equals 1/k whenever k <= n.
pub fn expected_k_cycles(n: u32, k: u32) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::InvalidInput("cycle length k must be positive".into()));
    }
    let mut acc = BigRational::zero();
    for lam in partitions_of(n) {
        let mult = lam.multiplicity(k);
        if mult > 0 {
            acc += BigRational::new(BigInt::from(mult), BigInt::from(lam.centralizer_order()));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use num::One;

    use super::*;
    use crate::counting::binomial;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn cycle_index_small_groups() {
        // S_3: (x_1^3 + 3 x_1 x_2 + 2 x_3)/6.
        let z3 = cycle_index(3);
        let expected = {
            let mut p = ClassPolynomial::zero();
            p.add_term(vec![3], BigRational::new(1.into(), 6.into()));
            p.add_term(vec![1, 1], BigRational::new(1.into(), 2.into()));
            p.add_term(vec![0, 0, 1], BigRational::new(1.into(), 3.into()));
            p
        };
        assert_eq!(z3, expected);
        assert_eq!(cycle_index(0), ClassPolynomial::one());
    }

    #[test]
    fn series_coefficients_are_cycle_indices() {
        let gamma = gamma_series(8);
        for n in 0..=8u32 {
            assert_eq!(gamma.coeff(n as usize), &cycle_index(n), "t^{n}");
        }
    }

    #[test]
    fn all_ones_averages_to_one() {
        // Substituting 1 for every variable averages 1 over the group.
        for n in 0..=9u32 {
            let ones = vec![1u32; n as usize];
            assert_eq!(cycle_index(n).evaluate(&ones), rat(1));
        }
    }

    #[test]
    fn counts_multisets_of_colors() {
        // With m colors available, the cycle index counts multisets:
        // binom(n + m - 1, n).
        for n in 1..=8u32 {
            for m in 1..=5u32 {
                let vals = vec![m; n as usize];
                let count = cycle_index(n).evaluate(&vals);
                assert_eq!(count, rat(binomial(u64::from(n + m - 1), u64::from(n)) as i64));
            }
        }
    }

    #[test]
    fn geometric_substitution() {
        // x_i = x^i collapses the series to 1/(1 - x t): the t^n
        // coefficient is exactly x^n.
        let cap = 8;
        let gamma = gamma_series(cap);
        for n in 0..=cap {
            let subs = |i: u32| {
                let mut p = vec![BigRational::zero(); cap + 1];
                p[i as usize] = BigRational::one();
                p
            };
            let got = substitute_univariate(gamma.coeff(n), subs, cap);
            for (k, c) in got.iter().enumerate() {
                let expect = if k == n { rat(1) } else { rat(0) };
                assert_eq!(c, &expect, "x^{k} in t^{n}");
            }
        }
    }

    #[test]
    fn complementary_substitution() {
        // x_i = 1 - x^i gives (1 - x t)/(1 - t): constant 1 at t^0 and
        // 1 - x at every higher order.
        let cap = 8;
        let gamma = gamma_series(cap);
        for n in 0..=cap {
            let subs = |i: u32| {
                let mut p = vec![BigRational::zero(); cap + 1];
                p[0] = BigRational::one();
                p[i as usize] -= BigRational::one();
                p
            };
            let got = substitute_univariate(gamma.coeff(n), subs, cap);
            let mut expect = vec![rat(0); cap + 1];
            expect[0] = rat(1);
            if n > 0 {
                expect[1] = rat(-1);
            }
            assert_eq!(got, expect, "t^{n}");
        }
    }

    #[test]
    fn mean_cycle_counts() {
        for n in 1..=10u32 {
            for k in 1..=n {
                assert_eq!(
                    expected_k_cycles(n, k).unwrap(),
                    BigRational::new(BigInt::one(), BigInt::from(k)),
                    "n = {n}, k = {k}"
                );
            }
            assert_eq!(expected_k_cycles(n, n + 1).unwrap(), rat(0));
        }
        assert!(expected_k_cycles(5, 0).is_err());
    }
}
