//! Batch identity verification behind the CLI `verify` command.
//!
//! Each suite sweeps one family of identities over an exhaustive range
//! and reports every instance separately, so a failure names the exact
//! witness that broke instead of a bare "suite failed". The checks here
//! deliberately pit independent routes against each other: enumerated
//! tilings against character tables, series coefficients against closed
//! forms, cached elimination against direct elimination.

use std::collections::HashMap;

use num::{BigInt, BigRational, Zero};
use rayon::prelude::*;

use crate::charpoly::{charpoly_hook, charpoly_hook_by_counts, charpoly_row, evaluate_at_class};
use crate::classfn::{
    character_table, doubilet_shapes, frobenius_character, irreducible_character, kostka_matrix,
    perm_character, ClassFunction, MAX_FROBENIUS_N,
};
use crate::counting::{binomial_big, check_alternating_stirling, fubini, permutohedron_f_vector};
use crate::error::{Error, Result};
use crate::homology::{verify_alternating_identity, verify_counting_proof};
use crate::partition::{partitions_of, Partition};
use crate::permutation::Permutation;
use crate::rosas::{reduced_kronecker_direct, rosas_closed_form, rosas_pipeline};
use crate::tiling::{crackless_count, ordered_counts_all_compositions};

/// Largest n accepted by the suites that sweep every class of S_n.
pub const MAX_EXHAUSTIVE_N: u32 = 12;

/// Default sweep bound for the class-exhaustive suites.
pub const DEFAULT_MAX_N: u32 = 8;
/// Default bounds for the two-row and hook polynomial sweep.
pub const DEFAULT_CHARPOLY_K: usize = 6;
pub const DEFAULT_CHARPOLY_N: u32 = 14;
/// Default per-variable cap for the stable Kronecker sweep.
pub const DEFAULT_ROSAS_K: usize = 3;
/// Default truncation degree for series pipelines.
pub const DEFAULT_SERIES_CAP: usize = 16;
/// Default run length that counts as a stabilized tail.
pub const DEFAULT_WINDOW: usize = 3;
/// Default face-count sweep bound.
pub const DEFAULT_PERMUTOHEDRON_N: u32 = 12;

/// Names accepted by `run_suite`, in the order `all` runs them.
pub const SUITE_NAMES: &[&str] = &[
    "alternating",
    "doubilet",
    "young",
    "charpoly",
    "rosas",
    "permutohedron",
];

/// Outcome of one identity instance. `detail` is populated only on
/// failure and carries both sides of the broken equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub instance: String,
    pub pass: bool,
    pub detail: Option<String>,
}

impl VerificationReport {
    fn check(identity: &str, instance: String, pass: bool, detail: impl FnOnce() -> String) -> Self {
        Self {
            identity: identity.to_string(),
            instance,
            pass,
            detail: if pass { None } else { Some(detail()) },
        }
    }
}

/// Counts of passed and failed reports.
pub fn tally(reports: &[VerificationReport]) -> (usize, usize) {
    let passed = reports.iter().filter(|r| r.pass).count();
    (passed, reports.len() - passed)
}

fn guard_exhaustive(max_n: u32) -> Result<()> {
    if max_n > MAX_EXHAUSTIVE_N {
        return Err(Error::ResourceLimit(format!(
            "exhaustive class sweeps are capped at n = {MAX_EXHAUSTIVE_N}, requested {max_n}"
        )));
    }
    Ok(())
}

/// Crackless tiling counts of w grouped to match homology degrees: the
/// entry at degree i sums over partitions of j with j - i parts.
fn crackless_by_degree(w: &Permutation, j: u32) -> Vec<i64> {
    let mut out = vec![0i64; j as usize];
    for mu in partitions_of(j) {
        let i = j as usize - mu.len();
        out[i] += crackless_count(mu.parts(), w) as i64;
    }
    out
}

/// Sweeps the alternating tiling-count identity over every class of
/// S_n for n up to max_n and every brick weight j up to n. Per
/// instance: the composition sum, the partition sum, the Euler
/// characteristic, and the alternating homology sum must agree; each
/// homology dimension must equal the crackless count at its degree;
/// and the termwise subset-counting proof must close.
pub fn suite_alternating(max_n: u32) -> Result<Vec<VerificationReport>> {
    guard_exhaustive(max_n)?;
    let mut instances = Vec::new();
    for n in 1..=max_n {
        for class in partitions_of(n) {
            instances.push((n, class));
        }
    }
    let per_class: Vec<Result<Vec<VerificationReport>>> = instances
        .par_iter()
        .map(|(n, class)| {
            let w = Permutation::from_cycle_type(class);
            let mut out = Vec::new();
            for j in 1..=*n {
                let instance = format!("n={n} class={class} j={j}");
                let rep = verify_alternating_identity(&w, j)?;
                out.push(VerificationReport::check(
                    "alternating-sum",
                    instance.clone(),
                    rep.all_equal,
                    || {
                        format!(
                            "lhs={} rhs={} euler={} homology_sum={}",
                            rep.lhs, rep.rhs, rep.euler, rep.homology_sum
                        )
                    },
                ));
                let expected = crackless_by_degree(&w, j);
                let got: Vec<i64> = rep.homology.iter().map(|&h| h as i64).collect();
                out.push(VerificationReport::check(
                    "homology-dims",
                    instance.clone(),
                    got == expected,
                    || format!("homology={got:?} crackless-by-degree={expected:?}"),
                ));
                out.push(VerificationReport::check(
                    "counting-proof",
                    instance,
                    verify_counting_proof(&w, j),
                    || "termwise subset-counting chain broke".to_string(),
                ));
            }
            Ok(out)
        })
        .collect();
    let mut reports = Vec::new();
    for r in per_class {
        reports.extend(r?);
    }
    Ok(reports)
}

/// Reconstructs each irreducible character of S_n, n up to max_n, as
/// the signed sum of permutation characters over the rearranged
/// shapes, and checks it against the rim-hook table row and, where the
/// coefficient-extraction engine reaches, against that route too.
pub fn suite_doubilet(max_n: u32) -> Result<Vec<VerificationReport>> {
    guard_exhaustive(max_n)?;
    let mut lambdas = Vec::new();
    for n in 1..=max_n {
        lambdas.extend(partitions_of(n));
    }
    let per_lambda: Vec<Result<Vec<VerificationReport>>> = lambdas
        .par_iter()
        .map(|lam| {
            let n = lam.weight();
            let instance = format!("n={n} lambda={lam}");
            let table_row = irreducible_character(lam)?;
            let mut acc = ClassFunction::from_fn(n, |_| BigRational::zero());
            for (sign, shape) in doubilet_shapes(lam) {
                let signed = BigRational::from_integer(BigInt::from(sign));
                acc = acc.add(&perm_character(&shape).scale(&signed))?;
            }
            let mut out = vec![VerificationReport::check(
                "doubilet-inversion",
                instance.clone(),
                acc == table_row,
                || first_class_mismatch(&acc, &table_row),
            )];
            if n <= MAX_FROBENIUS_N {
                let extracted = frobenius_character(lam)?;
                out.push(VerificationReport::check(
                    "coefficient-extraction",
                    instance,
                    extracted == table_row,
                    || first_class_mismatch(&extracted, &table_row),
                ));
            }
            Ok(out)
        })
        .collect();
    let mut reports = Vec::new();
    for r in per_lambda {
        reports.extend(r?);
    }
    Ok(reports)
}

fn first_class_mismatch(a: &ClassFunction, b: &ClassFunction) -> String {
    for (class, (x, y)) in a.classes().iter().zip(a.values().iter().zip(b.values())) {
        if x != y {
            return format!("class={class} got={x} expected={y}");
        }
    }
    "values disagree".to_string()
}

/// Expands each permutation character of S_n, n up to max_n, in the
/// irreducible basis with Kostka multiplicities and checks the
/// expansion pointwise, the unit diagonal, and the dominance support.
pub fn suite_young(max_n: u32) -> Result<Vec<VerificationReport>> {
    guard_exhaustive(max_n)?;
    let mut reports = Vec::new();
    for n in 1..=max_n {
        let kostka = kostka_matrix(n)?;
        let table = character_table(n)?;
        let shapes = kostka.partitions().to_vec();
        for lam in &shapes {
            let instance = format!("n={n} lambda={lam}");
            let zeta = perm_character(lam);
            let mut expansion = vec![BigRational::zero(); table.classes().len()];
            for mu in &shapes {
                let mult = kostka.value(mu, lam)?;
                if mult == 0 {
                    continue;
                }
                let row = table.row(mu)?;
                for (slot, value) in expansion.iter_mut().zip(row) {
                    *slot += BigRational::from_integer(BigInt::from(mult) * BigInt::from(*value));
                }
            }
            reports.push(VerificationReport::check(
                "young-rule",
                instance.clone(),
                expansion == zeta.values(),
                || {
                    for (class, (got, want)) in
                        table.classes().iter().zip(expansion.iter().zip(zeta.values()))
                    {
                        if got != want {
                            return format!("class={class} expansion={got} tiling-count={want}");
                        }
                    }
                    "values disagree".to_string()
                },
            ));
            reports.push(VerificationReport::check(
                "kostka-diagonal",
                instance.clone(),
                kostka.value(lam, lam)? == 1,
                || format!("K[{lam},{lam}]={}", kostka.value(lam, lam).unwrap_or(0)),
            ));
            let mut support_ok = true;
            let mut offender = String::new();
            for mu in &shapes {
                let positive = kostka.value(mu, lam)? > 0;
                let dominates = lam.dominance_leq(mu)?;
                if positive != dominates {
                    support_ok = false;
                    offender = format!(
                        "mu={mu} K={} dominates={dominates}",
                        kostka.value(mu, lam)?
                    );
                    break;
                }
            }
            reports.push(VerificationReport::check(
                "kostka-support",
                instance,
                support_ok,
                || offender,
            ));
        }
    }
    Ok(reports)
}

const FROZEN_ROWS: [&str; 3] = [
    "binom(c1,1) - 1",
    "binom(c2,1) + binom(c1,2) - binom(c1,1)",
    "binom(c3,1) + binom(c2,1)binom(c1,1) + binom(c1,3) - binom(c2,1) - binom(c1,2)",
];

const FROZEN_HOOKS: [&str; 3] = [
    "binom(c1,1) - 1",
    "-binom(c2,1) + binom(c1,2) - binom(c1,1) + 1",
    "binom(c3,1) - binom(c2,1)binom(c1,1) + binom(c1,3) + binom(c2,1) - binom(c1,2) + binom(c1,1) - 1",
];

/// Checks the two-row and hook character polynomials: the rendered
/// k <= 3 polynomials against frozen strings, the two hook derivations
/// against each other, and every evaluation against the character
/// table rows for 2k <= n <= max_n.
pub fn suite_charpoly(max_k: usize, max_n: u32) -> Result<Vec<VerificationReport>> {
    if max_k > 8 {
        return Err(Error::ResourceLimit(format!(
            "character polynomial sweeps are capped at k = 8, requested {max_k}"
        )));
    }
    let mut reports = Vec::new();
    for k in 1..=max_k.min(3) {
        let row = charpoly_row(k).render("c");
        reports.push(VerificationReport::check(
            "charpoly-printed-row",
            format!("k={k}"),
            row == FROZEN_ROWS[k - 1],
            || format!("got '{row}' expected '{}'", FROZEN_ROWS[k - 1]),
        ));
        let hook = charpoly_hook(k).render("c");
        reports.push(VerificationReport::check(
            "charpoly-printed-hook",
            format!("k={k}"),
            hook == FROZEN_HOOKS[k - 1],
            || format!("got '{hook}' expected '{}'", FROZEN_HOOKS[k - 1]),
        ));
    }
    for k in 0..=max_k {
        reports.push(VerificationReport::check(
            "charpoly-hook-routes",
            format!("k={k}"),
            charpoly_hook(k) == charpoly_hook_by_counts(k),
            || "series route and counting route disagree".to_string(),
        ));
    }
    let mut pairs = Vec::new();
    for k in 1..=max_k {
        for n in (2 * k as u32)..=max_n {
            pairs.push((k, n));
        }
    }
    let evaluated: Vec<Result<Vec<VerificationReport>>> = pairs
        .par_iter()
        .map(|&(k, n)| {
            let table = character_table(n)?;
            let row_poly = charpoly_row(k);
            let hook_poly = charpoly_hook(k);
            let two_row = Partition::from_unsorted(vec![n - k as u32, k as u32]);
            let mut hook_parts = vec![n - k as u32];
            hook_parts.extend(std::iter::repeat_n(1, k));
            let hook_shape = Partition::new(hook_parts)?;
            let mut out = Vec::new();
            for (poly, shape, identity) in [
                (&row_poly, &two_row, "charpoly-row-values"),
                (&hook_poly, &hook_shape, "charpoly-hook-values"),
            ] {
                let mut ok = true;
                let mut offender = String::new();
                for class in table.classes() {
                    let direct = evaluate_at_class(poly, class);
                    let tabled =
                        BigRational::from_integer(BigInt::from(table.value(shape, class)?));
                    if direct != tabled {
                        ok = false;
                        offender = format!("class={class} polynomial={direct} table={tabled}");
                        break;
                    }
                }
                out.push(VerificationReport::check(
                    identity,
                    format!("k={k} n={n}"),
                    ok,
                    || offender,
                ));
            }
            Ok(out)
        })
        .collect();
    for r in evaluated {
        reports.extend(r?);
    }
    Ok(reports)
}

/// Sweeps stable Kronecker coefficients of triples of hooks with leg
/// lengths up to max_k three ways: the series pipeline with
/// stabilization detection, the closed-form rational generating
/// function, and direct tensor-square decompositions at growing n.
pub fn suite_rosas(max_k: usize, t_cap: usize, window: usize) -> Result<Vec<VerificationReport>> {
    if max_k > 5 {
        return Err(Error::ResourceLimit(format!(
            "stable Kronecker sweeps are capped at leg length 5, requested {max_k}"
        )));
    }
    let caps = [max_k; 3];
    let stable = rosas_pipeline(caps, t_cap, window)?;
    let closed = rosas_closed_form(caps);
    let mut reports = Vec::new();
    let mut triples = Vec::new();
    for kx in 0..=max_k {
        for ky in 0..=max_k {
            for kz in 0..=max_k {
                triples.push([kx, ky, kz]);
            }
        }
    }
    for &ks in &triples {
        let expected = closed.coeff(ks);
        let entry = stable.value(ks);
        reports.push(VerificationReport::check(
            "rosas-pipeline",
            format!("k=({},{},{})", ks[0], ks[1], ks[2]),
            entry.map(|e| &e.value) == Some(expected),
            || match entry {
                Some(e) => format!("pipeline={} closed-form={expected}", e.value),
                None => "pipeline table has no entry".to_string(),
            },
        ));
    }
    // The direct route is symmetric in the three legs, so eliminate
    // each sorted triple once and fan the result back out.
    let direct_max_n = (3 * max_k as u32 + 4).min(crate::classfn::MAX_CHARACTER_N);
    let mut sorted_triples: Vec<[usize; 3]> = triples
        .iter()
        .map(|&ks| {
            let mut s = ks;
            s.sort_unstable();
            s
        })
        .collect();
    sorted_triples.sort_unstable();
    sorted_triples.dedup();
    let direct_values: Vec<Result<([usize; 3], u64)>> = sorted_triples
        .par_iter()
        .map(|&ks| Ok((ks, reduced_kronecker_direct(ks, window, direct_max_n)?.value)))
        .collect();
    let mut by_sorted = HashMap::new();
    for r in direct_values {
        let (ks, v) = r?;
        by_sorted.insert(ks, v);
    }
    for &ks in &triples {
        let mut s = ks;
        s.sort_unstable();
        let direct = by_sorted[&s];
        let expected = closed.coeff(ks);
        reports.push(VerificationReport::check(
            "rosas-direct",
            format!("k=({},{},{})", ks[0], ks[1], ks[2]),
            BigRational::from_integer(BigInt::from(direct)) == *expected,
            || format!("direct={direct} closed-form={expected}"),
        ));
    }
    Ok(reports)
}

/// Face counts of the solid permutohedron via an inclusion-exclusion
/// oracle over big integers, plus the total against the ordered set
/// partition count, the alternating factorial-Stirling identity, and
/// for small n a full enumeration of ordered tilings of the identity.
pub fn suite_permutohedron(max_n: u32) -> Result<Vec<VerificationReport>> {
    if max_n > 16 {
        return Err(Error::ResourceLimit(format!(
            "face-count sweeps are capped at n = 16, requested {max_n}"
        )));
    }
    let mut reports = Vec::new();
    for n in 1..=max_n {
        let instance = format!("n={n}");
        let f = permutohedron_f_vector(n);
        let oracle: Vec<BigInt> = (0..n).map(|k| surjection_count_big(n, n - k)).collect();
        let f_big: Vec<BigInt> = f.iter().map(|&v| BigInt::from(v)).collect();
        reports.push(VerificationReport::check(
            "permutohedron-f-vector",
            instance.clone(),
            f_big == oracle,
            || format!("formula={f:?} inclusion-exclusion={oracle:?}"),
        ));
        let total: u64 = f.iter().sum();
        reports.push(VerificationReport::check(
            "permutohedron-total",
            instance.clone(),
            total == fubini(n),
            || format!("face-total={total} fubini={}", fubini(n)),
        ));
        reports.push(VerificationReport::check(
            "alternating-stirling",
            instance.clone(),
            check_alternating_stirling(n),
            || "signed factorial-Stirling sum missed (-1)^n".to_string(),
        ));
        if n <= 8 {
            let id = Permutation::identity(n);
            let mut by_blocks = vec![0u64; n as usize + 1];
            for (mu, count) in ordered_counts_all_compositions(n, &id) {
                by_blocks[mu.len()] += count;
            }
            let enumerated: Vec<u64> = (0..n).map(|k| by_blocks[(n - k) as usize]).collect();
            reports.push(VerificationReport::check(
                "permutohedron-enumeration",
                instance,
                enumerated == f,
                || format!("enumerated={enumerated:?} formula={f:?}"),
            ));
        }
    }
    Ok(reports)
}

/// Number of surjections from an n-set onto a k-set, by inclusion-
/// exclusion. Independent of the Stirling recurrence that the formula
/// under test is built on.
fn surjection_count_big(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let term = binomial_big(u64::from(k), u64::from(i)) * BigInt::from(k - i).pow(n);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Runs the named suite with its default bounds, or every suite in
/// order for "all". `max_n` and `max_k` override the defaults where
/// the suite has a matching knob.
pub fn run_suite(
    name: &str,
    max_n: Option<u32>,
    max_k: Option<usize>,
) -> Result<Vec<VerificationReport>> {
    match name {
        "alternating" => suite_alternating(max_n.unwrap_or(DEFAULT_MAX_N)),
        "doubilet" => suite_doubilet(max_n.unwrap_or(DEFAULT_MAX_N)),
        "young" => suite_young(max_n.unwrap_or(DEFAULT_MAX_N)),
        "charpoly" => suite_charpoly(
            max_k.unwrap_or(DEFAULT_CHARPOLY_K),
            max_n.unwrap_or(DEFAULT_CHARPOLY_N),
        ),
        "rosas" => suite_rosas(
            max_k.unwrap_or(DEFAULT_ROSAS_K),
            DEFAULT_SERIES_CAP,
            DEFAULT_WINDOW,
        ),
        "permutohedron" => suite_permutohedron(max_n.unwrap_or(DEFAULT_PERMUTOHEDRON_N)),
        "all" => {
            let mut reports = Vec::new();
            for suite in SUITE_NAMES {
                reports.extend(run_suite(suite, max_n, max_k)?);
            }
            Ok(reports)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown suite '{other}', expected one of {SUITE_NAMES:?} or 'all'"
        ))),
    }
}
