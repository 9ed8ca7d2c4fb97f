//! Truncated graded polynomial rings `Z[u]/(u^{T+1})` and `(Z/2)[u]/(u^{T+1})`
//! on a single generator of fixed cohomological degree.
//!
//! Elements are indexed in generator units: slot `i` holds the coefficient of
//! `u^i`, which lives in cohomological degree `i * generator_degree`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientMode {
    ExactInteger,
    Mod2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    generator_degree: u32,
    truncation_top: usize,
    mode: CoefficientMode,
}

impl RingDescriptor {
    pub fn new(generator_degree: u32, truncation_top: usize, mode: CoefficientMode) -> Result<Self> {
        if generator_degree == 0 {
            return Err(Error::InvalidRing("generator degree must be at least 1".into()));
        }
        Ok(Self { generator_degree, truncation_top, mode })
    }

    pub fn integer(generator_degree: u32, truncation_top: usize) -> Result<Self> {
        Self::new(generator_degree, truncation_top, CoefficientMode::ExactInteger)
    }

    pub fn mod2(generator_degree: u32, truncation_top: usize) -> Result<Self> {
        Self::new(generator_degree, truncation_top, CoefficientMode::Mod2)
    }

    pub fn generator_degree(&self) -> u32 {
        self.generator_degree
    }

    pub fn truncation_top(&self) -> usize {
        self.truncation_top
    }

    pub fn mode(&self) -> CoefficientMode {
        self.mode
    }

    /// Number of coefficient slots, `T + 1`.
    pub fn slots(&self) -> usize {
        self.truncation_top + 1
    }

    /// Cohomological degree of the top slot `u^T`.
    pub fn top_degree(&self) -> u64 {
        self.generator_degree as u64 * self.truncation_top as u64
    }

    /// Generator slot carrying cohomological degree `degree`, if any.
    pub fn slot_of_degree(&self, degree: u64) -> Option<usize> {
        let g = self.generator_degree as u64;
        if !degree.is_multiple_of(g) {
            return None;
        }
        let slot = (degree / g) as usize;
        (slot <= self.truncation_top).then_some(slot)
    }

    pub fn with_mode(self, mode: CoefficientMode) -> Self {
        Self { mode, ..self }
    }

    pub fn with_truncation(self, truncation_top: usize) -> Self {
        Self { truncation_top, ..self }
    }

    fn check_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }

    fn normalize(&self, c: BigInt) -> BigInt {
        match self.mode {
            CoefficientMode::ExactInteger => c,
            CoefficientMode::Mod2 => c.mod_floor(&BigInt::from(2)),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.mode {
            CoefficientMode::ExactInteger => "Z",
            CoefficientMode::Mod2 => "Z/2",
        };
        write!(f, "{base}[u]/(u^{}), |u| = {}", self.truncation_top + 1, self.generator_degree)
    }
}

/// An element of a truncated ring. Always carries exactly `T + 1`
/// coefficients; in mod-2 mode each coefficient is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedElement {
    ring: RingDescriptor,
    coeffs: Vec<BigInt>,
}

impl GradedElement {
    /// Pads `coeffs` with zeros to `T + 1` slots, reducing mod 2 when the ring
    /// asks for it. Over-long input is rejected rather than truncated.
    pub fn new(ring: RingDescriptor, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() > ring.slots() {
            return Err(Error::TooManyCoefficients { len: coeffs.len(), slots: ring.slots() });
        }
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(|c| ring.normalize(c)).collect();
        coeffs.resize(ring.slots(), BigInt::zero());
        Ok(Self { ring, coeffs })
    }

    pub fn from_i64s(ring: RingDescriptor, coeffs: &[i64]) -> Result<Self> {
        Self::new(ring, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        Self { ring, coeffs: vec![BigInt::zero(); ring.slots()] }
    }

    pub fn one(ring: RingDescriptor) -> Self {
        let mut e = Self::zero(ring);
        e.coeffs[0] = BigInt::one();
        e
    }

    /// `c * u^power`; zero if `power > T`.
    pub fn monomial(ring: RingDescriptor, power: usize, c: BigInt) -> Self {
        let mut e = Self::zero(ring);
        if power <= ring.truncation_top {
            e.coeffs[power] = ring.normalize(c);
        }
        e
    }

    pub fn generator(ring: RingDescriptor) -> Self {
        Self::monomial(ring, 1, BigInt::one())
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn coefficient(&self, power: i64) -> Result<&BigInt> {
        let top = self.ring.truncation_top;
        usize::try_from(power)
            .ok()
            .and_then(|p| self.coeffs.get(p))
            .ok_or(Error::PowerOutOfRange { power, top })
    }

    /// Coefficient of `u^T`.
    pub fn top_coefficient(&self) -> &BigInt {
        &self.coeffs[self.ring.truncation_top]
    }

    pub fn add(&self, other: &GradedElement) -> Result<GradedElement> {
        self.ring.check_same(&other.ring)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.normalize(a + b))
            .collect();
        Ok(Self { ring: self.ring, coeffs })
    }

    pub fn neg(&self) -> GradedElement {
        let coeffs = self.coeffs.iter().map(|c| self.ring.normalize(-c)).collect();
        Self { ring: self.ring, coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> GradedElement {
        let coeffs = self.coeffs.iter().map(|c| self.ring.normalize(c * k)).collect();
        Self { ring: self.ring, coeffs }
    }

    /// Truncated product: every term `u^k` with `k > T` is dropped.
    pub fn mul(&self, other: &GradedElement) -> Result<GradedElement> {
        self.ring.check_same(&other.ring)?;
        let slots = self.ring.slots();
        let mut out = vec![BigInt::zero(); slots];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..slots - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let coeffs = out.into_iter().map(|c| self.ring.normalize(c)).collect();
        Ok(Self { ring: self.ring, coeffs })
    }

    pub fn pow(&self, mut k: u64) -> GradedElement {
        let mut acc = Self::one(self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Inverse of a unit (constant term ±1, or 1 mod 2) via the recursion
    /// `b_0 = 1/a_0`, `b_k = -b_0 * sum_{j=1..k} a_j b_{k-j}`.
    pub fn invert_unit(&self) -> Result<GradedElement> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(a0.to_string()));
        }
        // a0 is its own inverse.
        let b0 = a0.clone();
        let mut b: Vec<BigInt> = Vec::with_capacity(self.ring.slots());
        b.push(b0.clone());
        for k in 1..self.ring.slots() {
            let s: BigInt = (1..=k).map(|j| &self.coeffs[j] * &b[k - j]).sum();
            b.push(self.ring.normalize(-(&b0 * s)));
        }
        Ok(Self { ring: self.ring, coeffs: b })
    }

    /// Homogeneous part in cohomological degree `degree` (zero when that
    /// degree is not a multiple of the generator degree or lies above the top).
    pub fn degree_component(&self, degree: u64) -> GradedElement {
        match self.ring.slot_of_degree(degree) {
            Some(slot) => Self::monomial(self.ring, slot, self.coeffs[slot].clone()),
            None => Self::zero(self.ring),
        }
    }

    /// Re-truncates at a lower top `new_top <= T`, discarding higher slots.
    pub fn truncate(&self, new_top: usize) -> Result<GradedElement> {
        if new_top > self.ring.truncation_top {
            return Err(Error::InvalidRing(format!(
                "cannot raise truncation from {} to {new_top}",
                self.ring.truncation_top
            )));
        }
        Ok(Self { ring: self.ring.with_truncation(new_top), coeffs: self.coeffs[..=new_top].to_vec() })
    }

    /// Image in the mod-2 ring with the same generator and truncation.
    pub fn reduce_mod2(&self) -> GradedElement {
        let ring = self.ring.with_mode(CoefficientMode::Mod2);
        let coeffs = self.coeffs.iter().map(|c| ring.normalize(c.clone())).collect();
        Self { ring, coeffs }
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if wrote { "+" } else { "" };
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "u".to_string(),
                (1, false) => format!("{mag}u"),
                (_, true) => format!("u^{i}"),
                (_, false) => format!("{mag}u^{i}"),
            };
            if wrote {
                write!(f, " {sign} {body}")?;
            } else {
                write!(f, "{sign}{body}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
