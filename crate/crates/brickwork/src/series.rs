//! Truncated formal power series in one variable t over an exact
//! coefficient ring.
//!
//! The ring is abstracted by `Coeff` so the same series core serves
//! rational coefficients, class polynomials in cycle-count variables,
//! binomial expansions, and the capped three-variable polynomials of
//! the stabilization pipeline. All arithmetic is exact; truncation
//! order is fixed per series and checked on every binary operation.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Exact coefficient ring for truncated series.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact division by a positive integer. Every ring used here is a
    /// Q-algebra, so this is total.
    fn div_u32(&self, k: u32) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn try_invert(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn div_u32(&self, k: u32) -> Self {
        self / BigRational::from_integer(BigInt::from(k))
    }

    fn try_invert(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// A power series truncated at a fixed order: coefficients of
/// t^0 .. t^cap inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// The zero series with coefficients up to t^cap.
    pub fn zero(cap: usize) -> Self {
        Self { coeffs: vec![C::zero(); cap + 1] }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = C::one();
        s
    }

    /// Builds from explicit coefficients; the cap is len - 1.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, value: C) {
        self.coeffs[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    pub fn truncate(&self, cap: usize) -> Self {
        assert!(cap <= self.cap());
        Self { coeffs: self.coeffs[..=cap].to_vec() }
    }

    fn check_cap(&self, other: &Self) {
        assert_eq!(self.cap(), other.cap(), "series caps differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_cap(other);
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_cap(other);
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul(k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_cap(other);
        let cap = self.cap();
        let mut out = vec![C::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > cap {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs: out }
    }

    /// Division by a series with invertible constant term, by the long
    /// division recurrence.
    pub fn div_unit(&self, other: &Self) -> Result<Self> {
        self.check_cap(other);
        let inv0 = other.coeffs[0].try_invert().ok_or_else(|| {
            Error::InvalidInput("division needs an invertible constant term".into())
        })?;
        let cap = self.cap();
        let mut q = vec![C::zero(); cap + 1];
        for n in 0..=cap {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if other.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.sub(&other.coeffs[k].mul(&q[n - k]));
            }
            q[n] = acc.mul(&inv0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn try_invert(&self) -> Result<Self> {
        Self::one(self.cap()).div_unit(self)
    }

    /// Exponential of a series with zero constant term, by the
    /// coefficient recurrence n E_n = sum over k of k A_k E_{n-k}.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidInput(
                "exp needs a zero constant term".into(),
            ));
        }
        let cap = self.cap();
        let mut e = vec![C::zero(); cap + 1];
        e[0] = C::one();
        for n in 1..=cap {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let ka = self.coeffs[k].scale_u32(k as u32);
                acc = acc.add(&ka.mul(&e[n - k]));
            }
            e[n] = acc.div_u32(n as u32);
        }
        Ok(Self { coeffs: e })
    }

    /// Maps every coefficient through a ring morphism.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

trait ScaleU32 {
    fn scale_u32(&self, k: u32) -> Self;
}

impl<C: Coeff> ScaleU32 for C {
    fn scale_u32(&self, k: u32) -> Self {
        // repeated doubling; k stays small (bounded by the cap)
        let mut acc = C::zero();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k % 2 == 1 {
                acc = acc.add(&base);
            }
            base = base.add(&base);
            k /= 2;
        }
        acc
    }
}

/// Where a coefficient sequence settles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization<C> {
    /// First index of the maximal constant suffix.
    pub point: usize,
    /// The settled value.
    pub value: C,
}

/// Finds the maximal constant suffix of the sequence and accepts it as
/// stabilized when it spans at least `window` entries. The reported
/// point is the first index of that suffix, so a sequence that is
/// constant throughout stabilizes at 0.
pub fn detect_stabilization<C: Clone + PartialEq>(
    seq: &[C],
    window: usize,
) -> Result<Stabilization<C>> {
    let window = window.max(1);
    if seq.is_empty() {
        return Err(Error::NotStabilized { window, examined_to: 0 });
    }
    let last = seq.last().unwrap();
    let mut point = seq.len() - 1;
    while point > 0 && seq[point - 1] == *last {
        point -= 1;
    }
    if seq.len() - point >= window {
        Ok(Stabilization { point, value: last.clone() })
    } else {
        Err(Error::NotStabilized { window, examined_to: seq.len() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn series(vals: &[i64]) -> TruncatedSeries<BigRational> {
        TruncatedSeries::from_coeffs(vals.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn geometric_series_by_inversion() {
        // 1/(1-t) has all coefficients 1.
        let one_minus_t = series(&[1, -1, 0, 0, 0, 0]);
        let inv = one_minus_t.try_invert().unwrap();
        assert_eq!(inv, series(&[1, 1, 1, 1, 1, 1]));
        // Multiplying back gives 1 up to the cap.
        assert_eq!(one_minus_t.mul(&inv), TruncatedSeries::one(5));
    }

    #[test]
    fn division_recurrence() {
        // (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
        let num = series(&[1, 1, 0, 0, 0]);
        let den = series(&[1, -1, 0, 0, 0]);
        let q = num.div_unit(&den).unwrap();
        assert_eq!(q, series(&[1, 2, 2, 2, 2]));
        assert!(series(&[0, 1, 0]).div_unit(&series(&[0, 1, 0])).is_err());
    }

    #[test]
    fn exponential_of_t() {
        let mut t = TruncatedSeries::<BigRational>::zero(6);
        t.set(1, rat(1));
        let e = t.exp().unwrap();
        for k in 0..=6u32 {
            assert_eq!(
                e.coeff(k as usize),
                &ratio(1, crate::counting::factorial(k) as i64),
                "t^{k}"
            );
        }
    }

    #[test]
    fn exponential_is_multiplicative() {
        let mut a = TruncatedSeries::<BigRational>::zero(8);
        a.set(1, rat(2));
        a.set(3, ratio(1, 3));
        let mut b = TruncatedSeries::<BigRational>::zero(8);
        b.set(2, rat(-1));
        b.set(1, ratio(5, 7));
        let lhs = a.add(&b).exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap());
        assert_eq!(lhs, rhs);
        assert!(TruncatedSeries::<BigRational>::one(3).exp().is_err());
    }

    #[test]
    fn truncated_product_drops_high_terms() {
        let a = series(&[1, 1]);
        let sq = a.mul(&a);
        assert_eq!(sq, series(&[1, 2]));
        assert_eq!(a.truncate(0), series(&[1]));
    }

    #[test]
    fn stabilization_points() {
        assert_eq!(
            detect_stabilization(&[1, 2, 2, 2, 2], 3).unwrap(),
            Stabilization { point: 1, value: 2 }
        );
        assert_eq!(
            detect_stabilization(&[7, 7, 7, 7], 3).unwrap(),
            Stabilization { point: 0, value: 7 }
        );
        assert_eq!(
            detect_stabilization(&[1, 2, 3, 3], 2).unwrap(),
            Stabilization { point: 2, value: 3 }
        );
        match detect_stabilization(&[1, 2, 3, 4], 2) {
            Err(Error::NotStabilized { window: 2, examined_to: 4 }) => {}
            other => panic!("expected NotStabilized, got {other:?}"),
        }
        assert!(detect_stabilization::<i64>(&[], 1).is_err());
        // The tail must repeat the final value, not merely any value.
        match detect_stabilization(&[5, 5, 5, 9], 3) {
            Err(Error::NotStabilized { .. }) => {}
            other => panic!("expected NotStabilized, got {other:?}"),
        }
    }

    #[test]
    fn settled_rational_sequence() {
        // Coefficients of (1+t)/(1-t) settle at index 1 with window 3.
        let q = series(&[1, 1, 0, 0, 0]).div_unit(&series(&[1, -1, 0, 0, 0])).unwrap();
        let st = detect_stabilization(q.coeffs(), 3).unwrap();
        assert_eq!(st.point, 1);
        assert_eq!(st.value, rat(2));
    }
}
