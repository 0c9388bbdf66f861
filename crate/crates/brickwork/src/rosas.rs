//! Stable Kronecker coefficients of hook triples.
//!
//! Three independent routes to the same numbers, compared in tests and
//! by the verification suites:
//!
//! 1. A substitution pipeline: in the cycle-index generating series,
//!    replace x_i by (1 - (-x)^i)(1 - (-y)^i)(1 - (-z)^i), divide by
//!    (1 + x)(1 + y)(1 + z), and watch each xyz-monomial coefficient
//!    settle as the t-order grows.
//! 2. A closed form: (1 + xyz) / ((1 - xy)(1 - yz)(1 - xz)).
//! 3. Direct character sums: Kronecker coefficients of three hooks in
//!    S_n for growing n until they stop changing.
//!
//! All arithmetic happens in a polynomial ring truncated independently
//! in x, y, z; the positive-degree part is nilpotent there, so units
//! invert by a terminating geometric series.

use num::{BigInt, BigRational, One, Zero};

use crate::classfn::kronecker;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::{detect_stabilization, Stabilization};

/// Polynomial in x, y, z with every variable truncated at its own cap.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncPoly3 {
    caps: [usize; 3],
    data: Vec<BigRational>,
}

impl TruncPoly3 {
    pub fn zero(caps: [usize; 3]) -> Self {
        let len = (caps[0] + 1) * (caps[1] + 1) * (caps[2] + 1);
        Self { caps, data: vec![BigRational::zero(); len] }
    }

    pub fn constant(caps: [usize; 3], c: BigRational) -> Self {
        let mut p = Self::zero(caps);
        p.data[0] = c;
        p
    }

    pub fn one(caps: [usize; 3]) -> Self {
        Self::constant(caps, BigRational::one())
    }

    pub fn caps(&self) -> [usize; 3] {
        self.caps
    }

    fn idx(&self, e: [usize; 3]) -> usize {
        debug_assert!(e[0] <= self.caps[0] && e[1] <= self.caps[1] && e[2] <= self.caps[2]);
        (e[0] * (self.caps[1] + 1) + e[1]) * (self.caps[2] + 1) + e[2]
    }

    pub fn coeff(&self, e: [usize; 3]) -> &BigRational {
        &self.data[self.idx(e)]
    }

    pub fn set(&mut self, e: [usize; 3], v: BigRational) {
        let i = self.idx(e);
        self.data[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.caps, other.caps, "mixed truncation caps");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            caps: self.caps,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self {
            caps: self.caps,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self { caps: self.caps, data: self.data.iter().map(|a| -a.clone()).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { caps: self.caps, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn div_u32(&self, k: u32) -> Self {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let [cx, cy, cz] = self.caps;
        let mut out = Self::zero(self.caps);
        for ax in 0..=cx {
            for ay in 0..=cy {
                for az in 0..=cz {
                    let a = self.coeff([ax, ay, az]);
                    if a.is_zero() {
                        continue;
                    }
                    for bx in 0..=cx - ax {
                        for by in 0..=cy - ay {
                            for bz in 0..=cz - az {
                                let b = other.coeff([bx, by, bz]);
                                if b.is_zero() {
                                    continue;
                                }
                                let i = out.idx([ax + bx, ay + by, az + bz]);
                                out.data[i] += a * b;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Inverse of a unit. The positive-degree part is nilpotent under
    /// truncation, so 1/(c + N) = (1/c) sum of (-N/c)^k terminates.
    pub fn try_invert(&self) -> Result<Self> {
        let c = self.data[0].clone();
        if c.is_zero() {
            return Err(Error::InvalidInput(
                "inverting a three-variable polynomial needs a nonzero constant term".into(),
            ));
        }
        let mut nilpotent = self.clone();
        nilpotent.data[0] = BigRational::zero();
        let step = nilpotent.scale(&(-c.recip()));
        let mut acc = Self::one(self.caps);
        let mut power = Self::one(self.caps);
        loop {
            power = power.mul(&step);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&c.recip()))
    }
}

/// exp of a t-series with TruncPoly3 coefficients and zero constant
/// term, by the usual coefficient recurrence.
fn series_exp(arg: &[TruncPoly3]) -> Result<Vec<TruncPoly3>> {
    if !arg[0].is_zero() {
        return Err(Error::InvalidInput("exp needs a zero constant term".into()));
    }
    let caps = arg[0].caps();
    let cap = arg.len() - 1;
    let mut e = vec![TruncPoly3::zero(caps); cap + 1];
    e[0] = TruncPoly3::one(caps);
    for n in 1..=cap {
        let mut acc = TruncPoly3::zero(caps);
        for k in 1..=n {
            if arg[k].is_zero() {
                continue;
            }
            let ka = arg[k].scale(&BigRational::from_integer(BigInt::from(k)));
            acc = acc.add(&ka.mul(&e[n - k]));
        }
        e[n] = acc.div_u32(n as u32);
    }
    Ok(e)
}

/// (1 - (-v)^i) in one axis: 1 + v^i for odd i, 1 - v^i for even i,
/// with powers beyond the cap dropped.
fn hook_factor(caps: [usize; 3], axis: usize, i: usize) -> TruncPoly3 {
    let mut p = TruncPoly3::one(caps);
    if i <= caps[axis] {
        let mut e = [0usize; 3];
        e[axis] = i;
        let sign = if i % 2 == 1 { BigRational::one() } else { -BigRational::one() };
        p.set(e, sign);
    }
    p
}

/// One stabilized coefficient of the substitution pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableEntry {
    /// Hook leg lengths (exponents of x, y, z).
    pub ks: [usize; 3],
    /// t-order from which the coefficient is constant.
    pub point: usize,
    /// The settled value.
    pub value: BigRational,
}

/// Result of running the substitution pipeline.
#[derive(Debug, Clone)]
pub struct StableTable {
    pub caps: [usize; 3],
    pub t_cap: usize,
    pub window: usize,
    pub entries: Vec<StableEntry>,
}

impl StableTable {
    pub fn value(&self, ks: [usize; 3]) -> Option<&StableEntry> {
        self.entries.iter().find(|e| e.ks == ks)
    }
}

/// Runs the substitution pipeline: exponentiates the substituted
/// cycle-index series, divides by (1+x)(1+y)(1+z), and detects where
/// every monomial coefficient settles in t. Fails if any coefficient
/// has not stabilized within the requested window by t_cap.
pub fn rosas_pipeline(caps: [usize; 3], t_cap: usize, window: usize) -> Result<StableTable> {
    let mut arg = vec![TruncPoly3::zero(caps); t_cap + 1];
    for (i, slot) in arg.iter_mut().enumerate().skip(1) {
        let s = hook_factor(caps, 0, i)
            .mul(&hook_factor(caps, 1, i))
            .mul(&hook_factor(caps, 2, i));
        *slot = s.div_u32(i as u32);
    }
    let e = series_exp(&arg)?;
    let unit = hook_divisor(caps).try_invert()?;
    let divided: Vec<TruncPoly3> = e.iter().map(|p| p.mul(&unit)).collect();
    let mut entries = Vec::new();
    for kx in 0..=caps[0] {
        for ky in 0..=caps[1] {
            for kz in 0..=caps[2] {
                let seq: Vec<BigRational> =
                    divided.iter().map(|p| p.coeff([kx, ky, kz]).clone()).collect();
                let Stabilization { point, value } = detect_stabilization(&seq, window)?;
                entries.push(StableEntry { ks: [kx, ky, kz], point, value });
            }
        }
    }
    Ok(StableTable { caps, t_cap, window, entries })
}

/// (1+x)(1+y)(1+z) under the caps.
fn hook_divisor(caps: [usize; 3]) -> TruncPoly3 {
    let mut p = TruncPoly3::one(caps);
    for axis in 0..3 {
        let mut f = TruncPoly3::one(caps);
        if caps[axis] >= 1 {
            let mut e = [0usize; 3];
            e[axis] = 1;
            f.set(e, BigRational::one());
        }
        p = p.mul(&f);
    }
    p
}

/// The closed form (1 + xyz) / ((1 - xy)(1 - yz)(1 - xz)) under the
/// caps. Its coefficients are the expected stable values.
pub fn rosas_closed_form(caps: [usize; 3]) -> TruncPoly3 {
    let mut numer = TruncPoly3::one(caps);
    if caps[0] >= 1 && caps[1] >= 1 && caps[2] >= 1 {
        numer.set([1, 1, 1], BigRational::one());
    }
    let pairs = [[0, 1], [1, 2], [0, 2]];
    let mut denom = TruncPoly3::one(caps);
    for pair in pairs {
        let mut f = TruncPoly3::one(caps);
        if caps[pair[0]] >= 1 && caps[pair[1]] >= 1 {
            let mut e = [0usize; 3];
            e[pair[0]] = 1;
            e[pair[1]] = 1;
            f.set(e, -BigRational::one());
        }
        denom = denom.mul(&f);
    }
    numer.mul(&denom.try_invert().expect("denominator is a unit"))
}

/// The hook with leg length k in S_n.
fn hook_shape(n: u32, k: usize) -> Result<Partition> {
    if (k as u32) >= n {
        return Err(Error::InvalidInput(format!(
            "no hook with leg {k} fits in weight {n}"
        )));
    }
    let mut parts = vec![n - k as u32];
    parts.extend(std::iter::repeat_n(1, k));
    Partition::new(parts)
}

/// Direct route: Kronecker coefficients of three hooks for growing n,
/// reported once they are constant across `window` consecutive group
/// orders. `first_n` is the smallest n from which the value no longer
/// changes within the examined range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectStable {
    pub ks: [usize; 3],
    pub first_n: u32,
    pub value: u64,
}

pub fn reduced_kronecker_direct(
    ks: [usize; 3],
    window: usize,
    max_n: u32,
) -> Result<DirectStable> {
    let start = *ks.iter().max().unwrap() as u32 + 1;
    if start > max_n {
        return Err(Error::InvalidInput(format!(
            "need n up to at least {start}, got max_n = {max_n}"
        )));
    }
    let mut seq = Vec::new();
    for n in start..=max_n {
        let a = hook_shape(n, ks[0])?;
        let b = hook_shape(n, ks[1])?;
        let c = hook_shape(n, ks[2])?;
        seq.push(kronecker(&a, &b, &c)?);
    }
    let Stabilization { point, value } = detect_stabilization(&seq, window)?;
    Ok(DirectStable { ks, first_n: start + point as u32, value })
}
