//! Exact sparse polynomials in the cycle-count variables c_1, c_2, ...
//!
//! Two views of the same ring are kept: `ClassPolynomial` stores
//! monomials c_1^{e_1} c_2^{e_2} ... with rational coefficients, and
//! `BinomialExpansion` stores products of binomials
//! binom(c_1, k_1) binom(c_2, k_2) ... . The binomial view is the one
//! the tables print; the monomial view is what arithmetic reduces to.
//! Conversion in both directions is exact and loss-free.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::counting::binomial_big;
use crate::partition::Partition;

fn trim(mut key: Vec<u16>) -> Vec<u16> {
    while key.last() == Some(&0) {
        key.pop();
    }
    key
}

/// Sparse polynomial in c_1, c_2, ... with exact rational coefficients.
/// Keys are exponent vectors with trailing zeros trimmed; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPolynomial {
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl ClassPolynomial {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    pub fn from_integer(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable c_i (1-indexed).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-indexed");
        let mut key = vec![0u16; i];
        key[i - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(key, BigRational::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest variable index that occurs, or 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn add_term(&mut self, key: Vec<u16>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let key = trim(key);
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut key = vec![0u16; ka.len().max(kb.len())];
                for (i, slot) in key.iter_mut().enumerate() {
                    let a = ka.get(i).copied().unwrap_or(0);
                    let b = kb.get(i).copied().unwrap_or(0);
                    *slot = a + b;
                }
                out.add_term(key, va * vb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Exact division by a positive integer.
    pub fn div_u32(&self, d: u32) -> Self {
        let c = BigRational::new(BigInt::one(), BigInt::from(d));
        self.scale(&c)
    }

    /// Substitutes the cycle counts: c_i = counts[i-1], with counts
    /// beyond the slice treated as zero.
    pub fn evaluate(&self, counts: &[u32]) -> BigRational {
        let mut acc = BigRational::zero();
        'terms: for (key, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let c = counts.get(i).copied().unwrap_or(0);
                if c == 0 {
                    continue 'terms;
                }
                term *= BigRational::from_integer(BigInt::from(c).pow(u32::from(e)));
            }
            acc += term;
        }
        acc
    }

    /// Renders in the monomial basis with `var` as the variable stem,
    /// e.g. "c1^2 c2 - 2 c1 + 1".
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_key_order(a, b));
        let mut out = String::new();
        for key in keys {
            let coeff = &self.terms[key];
            push_signed_term(&mut out, coeff, &monomial_string(key, var));
        }
        out
    }
}

impl fmt::Display for ClassPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("c"))
    }
}

/// Linear combination of products binom(c_1, k_1) binom(c_2, k_2) ...,
/// keyed by the trimmed vector (k_1, k_2, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialExpansion {
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl BinomialExpansion {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    /// The single product binom(c_1, k_1) binom(c_2, k_2) ... for the
    /// multiplicity vector of a partition: part i contributes k_i =
    /// m_i(λ). This is the crackless-count polynomial of shape λ.
    pub fn from_partition_multiplicities(lambda: &Partition) -> Self {
        let mut key = Vec::new();
        for (part, mult) in lambda.multiplicities() {
            let idx = part as usize - 1;
            if key.len() <= idx {
                key.resize(idx + 1, 0);
            }
            key[idx] = mult as u16;
        }
        let mut terms = BTreeMap::new();
        terms.insert(trim(key), BigRational::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// The multiset of signed terms as (k-vector, coefficient) pairs,
    /// for structural comparison against printed expressions.
    pub fn term_map(&self) -> &BTreeMap<Vec<u16>, BigRational> {
        &self.terms
    }

    pub fn add_term(&mut self, key: Vec<u16>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let key = trim(key);
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn div_u32(&self, d: u32) -> Self {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(d)))
    }

    /// General product, computed through the monomial basis (binomials
    /// in one variable do not multiply to a single binomial).
    pub fn mul(&self, other: &Self) -> Self {
        Self::from_class_polynomial(
            &self.to_class_polynomial().mul(&other.to_class_polynomial()),
        )
    }

    /// Expands every binom(c_i, k) = c_i (c_i - 1) ... (c_i - k + 1)/k!.
    pub fn to_class_polynomial(&self) -> ClassPolynomial {
        let mut out = ClassPolynomial::zero();
        for (key, coeff) in &self.terms {
            let mut prod = ClassPolynomial::constant(coeff.clone());
            for (i, &k) in key.iter().enumerate() {
                for t in 0..k {
                    let factor = ClassPolynomial::var(i + 1)
                        .sub(&ClassPolynomial::from_integer(i64::from(t)));
                    prod = prod.mul(&factor);
                }
                for t in 1..=u64::from(k) {
                    prod = prod.scale(&BigRational::new(BigInt::one(), BigInt::from(t)));
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// Inverse of `to_class_polynomial`: peels the graded-lex leading
    /// monomial, whose coefficient determines one binomial term, until
    /// nothing is left. Always terminates because each step strictly
    /// lowers the leading monomial.
    pub fn from_class_polynomial(p: &ClassPolynomial) -> Self {
        let mut rest = p.clone();
        let mut out = Self::zero();
        while !rest.is_zero() {
            let (key, coeff) = rest
                .terms()
                .max_by(|a, b| grlex(a.0, b.0))
                .map(|(k, v)| (k.to_vec(), v.clone()))
                .unwrap();
            // binom(c, k) has leading monomial c^k / k!.
            let mut scale = coeff;
            for &k in &key {
                for t in 1..=u64::from(k) {
                    scale *= BigRational::from_integer(BigInt::from(t));
                }
            }
            let mut single = Self::zero();
            single.add_term(key, scale.clone());
            rest = rest.sub(&single.to_class_polynomial());
            out.add_term(single.terms.keys().next().unwrap().clone(), scale);
        }
        out
    }

    /// Exact evaluation at cycle counts via integer binomials.
    pub fn evaluate(&self, counts: &[u32]) -> BigRational {
        let mut acc = BigRational::zero();
        'terms: for (key, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &k) in key.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let c = counts.get(i).copied().unwrap_or(0);
                let b = binomial_big(u64::from(c), u64::from(k));
                if b.is_zero() {
                    continue 'terms;
                }
                term *= BigRational::from_integer(b);
            }
            acc += term;
        }
        acc
    }

    /// Renders as a signed sum of binomial products, e.g.
    /// "binom(c2,1) + binom(c1,2) - binom(c1,1)". Terms are ordered by
    /// descending weight (sum of i*k_i), higher variables first within a
    /// weight.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_key_order(a, b));
        let mut out = String::new();
        for key in keys {
            let coeff = &self.terms[key];
            let body: Vec<String> = key
                .iter()
                .enumerate()
                .rev()
                .filter(|&(_, &k)| k > 0)
                .map(|(i, &k)| format!("binom({var}{},{k})", i + 1))
                .collect();
            push_signed_term(&mut out, coeff, &body.join(""));
        }
        out
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("c"))
    }
}

impl crate::series::Coeff for ClassPolynomial {
    fn zero() -> Self {
        ClassPolynomial::zero()
    }

    fn one() -> Self {
        ClassPolynomial::one()
    }

    fn is_zero(&self) -> bool {
        ClassPolynomial::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        ClassPolynomial::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        ClassPolynomial::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        ClassPolynomial::mul(self, other)
    }

    fn div_u32(&self, k: u32) -> Self {
        ClassPolynomial::div_u32(self, k)
    }

    /// Only nonzero constants are units in the polynomial ring.
    fn try_invert(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Vec::new()) {
                return Some(ClassPolynomial::constant(c.recip()));
            }
        }
        None
    }
}

impl crate::series::Coeff for BinomialExpansion {
    fn zero() -> Self {
        BinomialExpansion::zero()
    }

    fn one() -> Self {
        BinomialExpansion::one()
    }

    fn is_zero(&self) -> bool {
        BinomialExpansion::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        BinomialExpansion::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        BinomialExpansion::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        BinomialExpansion::mul(self, other)
    }

    fn div_u32(&self, k: u32) -> Self {
        BinomialExpansion::div_u32(self, k)
    }

    fn try_invert(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Vec::new()) {
                return Some(BinomialExpansion::constant(c.recip()));
            }
        }
        None
    }
}

/// Graded lexicographic order on exponent keys (total degree first).
fn grlex(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    let da: u32 = a.iter().map(|&e| u32::from(e)).sum();
    let db: u32 = b.iter().map(|&e| u32::from(e)).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Display order: descending weight sum(i*k_i), then higher-index
/// variables first, matching how the binomial tables are usually read.
fn display_key_order(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    let wa: u32 = a.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * u32::from(e)).sum();
    let wb: u32 = b.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * u32::from(e)).sum();
    wb.cmp(&wa).then_with(|| {
        let len = a.len().max(b.len());
        let ra: Vec<u16> = (0..len).rev().map(|i| a.get(i).copied().unwrap_or(0)).collect();
        let rb: Vec<u16> = (0..len).rev().map(|i| b.get(i).copied().unwrap_or(0)).collect();
        rb.cmp(&ra)
    })
}

fn monomial_string(key: &[u16], var: &str) -> String {
    let body: Vec<String> = key
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("{var}{}", i + 1)
            } else {
                format!("{var}{}^{e}", i + 1)
            }
        })
        .collect();
    body.join(" ")
}

/// Appends "+ coeff body" / "- coeff body" with 1-coefficients and empty
/// bodies elided.
fn push_signed_term(out: &mut String, coeff: &BigRational, body: &str) {
    let neg = coeff.is_negative();
    let abs = coeff.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let show_coeff = !abs.is_one() || body.is_empty();
    if show_coeff {
        if abs.is_integer() {
            out.push_str(&abs.to_integer().to_string());
        } else {
            out.push_str(&abs.to_string());
        }
        if !body.is_empty() {
            out.push(' ');
        }
    }
    out.push_str(body);
}
