//! Exact integer counting primitives: factorials, binomials, Stirling
//! numbers, the permutohedron face vector, and small standalone
//! identities used as cross-checks elsewhere.

use num::BigInt;

/// n! as a `u64`. Panics for n > 20 (21! overflows u64); every caller in
/// this crate works at n well below that.
pub fn factorial(n: u32) -> u64 {
    assert!(n <= 20, "factorial({n}) overflows u64");
    (1..=n as u64).product()
}

/// Binomial coefficient C(n, k) as a `u64`, exact, computed by the
/// multiplicative formula with intermediate division (always exact).
/// Panics on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// Binomial coefficient as a `BigInt` for arbitrary nonnegative n.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Stirling number of the second kind S(n, k): set partitions of [n]
/// into k nonempty blocks, by the standard recurrence
/// S(n, k) = k S(n-1, k) + S(n-1, k-1).
pub fn stirling2(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    if n == 0 {
        return 1; // S(0, 0)
    }
    if k == 0 {
        return 0;
    }
    let mut row = vec![0u64; k as usize + 1];
    row[0] = 1; // row for n = 0
    for _ in 1..=n {
        for j in (1..=k as usize).rev() {
            row[j] = (j as u64)
                .checked_mul(row[j])
                .and_then(|v| v.checked_add(row[j - 1]))
                .expect("stirling2 overflow");
        }
        row[0] = 0;
    }
    row[k as usize]
}

/// Number of ordered set partitions of [n] (Fubini number),
/// sum over k of k! S(n, k).
pub fn fubini(n: u32) -> u64 {
    (0..=n)
        .map(|k| factorial(k).checked_mul(stirling2(n, k)).expect("fubini overflow"))
        .sum()
}

/// Face vector (f_0, ..., f_{n-1}) of the permutohedron on n letters:
/// f_k = (n-k)! S(n, n-k). f_0 counts vertices (n!), f_{n-1} = 1 is the
/// whole polytope.
pub fn permutohedron_f_vector(n: u32) -> Vec<u64> {
    assert!(n >= 1, "permutohedron needs n >= 1");
    (0..n).map(|k| factorial(n - k) * stirling2(n, n - k)).collect()
}

/// Whether sum over k of (-1)^k k! S(n, k) equals (-1)^n, evaluated
/// exactly in i128. This is the reduced Euler characteristic of the
/// permutohedron boundary and reappears termwise in the subset-counting
/// identity checks.
pub fn check_alternating_stirling(n: u32) -> bool {
    alternating_stirling_sum(n) == if n.is_multiple_of(2) { 1 } else { -1 }
}

/// Sum over k of (-1)^k k! S(n, k) for n >= 1.
pub fn alternating_stirling_sum(n: u32) -> i128 {
    (1..=n)
        .map(|k| {
            let term = factorial(k) as i128 * stirling2(n, k) as i128;
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Number of integer partitions of n by Euler's pentagonal-number
/// recurrence. Independent of the enumeration in `partition`; used as an
/// oracle against it.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k: i64 = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m && g2 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 as usize <= m {
                acc += sign * p[m - g1 as usize];
            }
            if g2 as usize <= m {
                acc += sign * p[m - g2 as usize];
            }
            k += 1;
        }
        p[m] = acc;
    }
    u64::try_from(p[n]).expect("partition count negative or too large")
}
