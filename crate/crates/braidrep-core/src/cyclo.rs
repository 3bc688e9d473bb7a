//! Exact arithmetic in Q(ω), ω = exp(iπ/4), with dyadic-rational coefficients.
//!
//! Every scalar produced by the braid-matrix constructions is of the form
//! c0 + c1·ω + c2·ω² + c3·ω³ with ω⁴ = −1, where each coefficient is an
//! integer divided by a power of two. The constants that actually occur —
//! i = ω², 1/√2 = (ω − ω³)/2, e^{iπ/4}/√2 = (1 + ω²)/2 — all live here, and
//! the set is closed under the ring operations, so equality is structural
//! comparison of canonical forms. No rounding enters any decision.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// A dyadic rational `numer / 2^denom_exp`, kept fully reduced:
/// the numerator is odd whenever `denom_exp > 0`, and zero forces
/// `denom_exp = 0`. Canonical forms make equality coefficientwise.
///
/// `Ord` is the structural order on canonical forms (numerator first),
/// intended for deterministic map keys; it is not the numeric order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dyadic {
    numer: BigInt,
    denom_exp: u32,
}

impl Dyadic {
    pub fn new(numer: BigInt, denom_exp: u32) -> Self {
        let mut d = Dyadic { numer, denom_exp };
        d.reduce();
        d
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic {
            numer: BigInt::from(n),
            denom_exp: 0,
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// 1/2, the only denominator-introducing constant in scope.
    pub fn half() -> Self {
        Dyadic {
            numer: BigInt::from(1),
            denom_exp: 1,
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    fn reduce(&mut self) {
        if self.numer.is_zero() {
            self.denom_exp = 0;
            return;
        }
        if self.denom_exp == 0 {
            return;
        }
        let tz = self.numer.trailing_zeros().unwrap_or(0);
        let shift = tz.min(self.denom_exp as u64) as u32;
        if shift > 0 {
            self.numer = &self.numer >> shift;
            self.denom_exp -= shift;
        }
    }

    pub fn add(&self, rhs: &Dyadic) -> Dyadic {
        let e = self.denom_exp.max(rhs.denom_exp);
        let a = &self.numer << (e - self.denom_exp);
        let b = &rhs.numer << (e - rhs.denom_exp);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, rhs: &Dyadic) -> Dyadic {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            numer: -&self.numer,
            denom_exp: self.denom_exp,
        }
    }

    pub fn mul(&self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.numer * &rhs.numer, self.denom_exp + rhs.denom_exp)
    }

    /// Exact quotient, or `None` when it does not exist in the dyadic ring
    /// (i.e. the reduced divisor has an odd factor not dividing `self`).
    pub fn div_exact(&self, rhs: &Dyadic) -> Option<Dyadic> {
        if rhs.is_zero() {
            return None;
        }
        // rhs = (m * 2^v) / 2^e with m odd; self/rhs = (self.numer/m) * 2^(e - v - self.e)
        let v = rhs.numer.trailing_zeros().unwrap_or(0) as u32;
        let m = &rhs.numer >> v;
        let r = &self.numer % &m;
        if !r.is_zero() {
            return None;
        }
        let q = &self.numer / &m;
        Some(Dyadic::new(q << rhs.denom_exp, self.denom_exp + v))
    }

    /// Numerical value; informative only, never used in decisions.
    pub fn to_f64(&self) -> f64 {
        let mut v = self.numer.to_f64().unwrap_or(f64::NAN);
        for _ in 0..self.denom_exp {
            v *= 0.5;
        }
        v
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_exp == 0 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/2^{}", self.numer, self.denom_exp)
        }
    }
}

/// An element c0 + c1·ω + c2·ω² + c3·ω³ of Q(ω) with dyadic coefficients,
/// ω = exp(iπ/4), so ω⁴ = −1 and ω² = i.
///
/// Representation is unique: two values are equal iff all four coefficients
/// agree in canonical form. `Ord` is the structural (coefficientwise) order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloNum {
    coeffs: [Dyadic; 4],
}

impl CycloNum {
    pub fn new(coeffs: [Dyadic; 4]) -> Self {
        CycloNum { coeffs }
    }

    pub fn coeffs(&self) -> &[Dyadic; 4] {
        &self.coeffs
    }

    pub fn zero() -> Self {
        CycloNum::new([
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ])
    }

    pub fn one() -> Self {
        CycloNum::new([
            Dyadic::one(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ])
    }

    pub fn from_int(n: i64) -> Self {
        CycloNum::new([
            Dyadic::from_int(n),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ])
    }

    /// ω^k for any k, reduced with ω⁴ = −1.
    pub fn omega_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let (slot, sign) = if k < 4 { (k, 1) } else { (k - 4, -1) };
        let mut c = [
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ];
        c[slot] = Dyadic::from_int(sign);
        CycloNum::new(c)
    }

    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    /// i = ω².
    pub fn i() -> Self {
        Self::omega_pow(2)
    }

    /// √2 = ω − ω³.
    pub fn sqrt2() -> Self {
        CycloNum::new([
            Dyadic::zero(),
            Dyadic::one(),
            Dyadic::zero(),
            Dyadic::from_int(-1),
        ])
    }

    /// 1/√2 = (ω − ω³)/2.
    pub fn inv_sqrt2() -> Self {
        CycloNum::new([
            Dyadic::zero(),
            Dyadic::half(),
            Dyadic::zero(),
            Dyadic::half().neg(),
        ])
    }

    /// e^{iπ/4}/√2 = (1 + i)/2, the prefactor of every non-diagonal exchange.
    pub fn exchange_prefactor() -> Self {
        CycloNum::new([
            Dyadic::half(),
            Dyadic::zero(),
            Dyadic::half(),
            Dyadic::zero(),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Dyadic::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn add(&self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new([
            self.coeffs[0].add(&rhs.coeffs[0]),
            self.coeffs[1].add(&rhs.coeffs[1]),
            self.coeffs[2].add(&rhs.coeffs[2]),
            self.coeffs[3].add(&rhs.coeffs[3]),
        ])
    }

    pub fn sub(&self, rhs: &CycloNum) -> CycloNum {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum::new([
            self.coeffs[0].neg(),
            self.coeffs[1].neg(),
            self.coeffs[2].neg(),
            self.coeffs[3].neg(),
        ])
    }

    /// Exact product, reducing ω⁴ to −1.
    pub fn mul(&self, rhs: &CycloNum) -> CycloNum {
        let mut acc = [
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ];
        for (p, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a.mul(b);
                let k = p + q;
                if k < 4 {
                    acc[k] = acc[k].add(&term);
                } else {
                    acc[k - 4] = acc[k - 4].sub(&term);
                }
            }
        }
        CycloNum::new(acc)
    }

    /// Complex conjugate: ω̄ = ω⁻¹ = −ω³, so (c0,c1,c2,c3) ↦ (c0,−c3,−c2,−c1).
    pub fn conj(&self) -> CycloNum {
        CycloNum::new([
            self.coeffs[0].clone(),
            self.coeffs[3].neg(),
            self.coeffs[2].neg(),
            self.coeffs[1].neg(),
        ])
    }

    /// Modulus squared, a·conj(a).
    pub fn abs2(&self) -> CycloNum {
        self.mul(&self.conj())
    }

    /// Galois image under ω ↦ ω³.
    fn galois3(&self) -> CycloNum {
        // 1 ↦ 1, ω ↦ ω³, ω² ↦ −ω², ω³ ↦ ω
        CycloNum::new([
            self.coeffs[0].clone(),
            self.coeffs[3].clone(),
            self.coeffs[2].neg(),
            self.coeffs[1].clone(),
        ])
    }

    /// Galois image under ω ↦ −ω.
    fn galois5(&self) -> CycloNum {
        CycloNum::new([
            self.coeffs[0].clone(),
            self.coeffs[1].neg(),
            self.coeffs[2].clone(),
            self.coeffs[3].neg(),
        ])
    }

    /// Exact multiplicative inverse, when it exists inside the dyadic ring.
    ///
    /// Computed as the product of the three nontrivial Galois conjugates over
    /// the field norm; the norm is a rational and must divide exactly.
    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cofactor = self.galois3().mul(&self.galois5()).mul(&self.conj());
        let norm = self.mul(&cofactor);
        if !norm.coeffs[1].is_zero() || !norm.coeffs[2].is_zero() || !norm.coeffs[3].is_zero() {
            return Err(Error::ConstructionIntegrity("field norm not rational"));
        }
        let n = &norm.coeffs[0];
        let mut out = [
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
            Dyadic::zero(),
        ];
        for (slot, c) in cofactor.coeffs.iter().enumerate() {
            out[slot] = c.div_exact(n).ok_or(Error::NonDyadicQuotient)?;
        }
        Ok(CycloNum::new(out))
    }

    /// Exact quotient self/rhs, when representable with dyadic coefficients.
    pub fn div_exact(&self, rhs: &CycloNum) -> Result<CycloNum> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Numerical embedding with ω = (√2/2)(1 + i); reporting only.
    pub fn to_complex(&self) -> (f64, f64) {
        let h = core::f64::consts::SQRT_2 / 2.0;
        let c0 = self.coeffs[0].to_f64();
        let c1 = self.coeffs[1].to_f64();
        let c2 = self.coeffs[2].to_f64();
        let c3 = self.coeffs[3].to_f64();
        (c0 + (c1 - c3) * h, c2 + (c1 + c3) * h)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "w", "w^2", "w^3"];
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                parts.push(alloc::format!("{c}"));
            } else {
                parts.push(alloc::format!("{c}*{}", names[k]));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::add(self, rhs)
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::sub(self, rhs)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::mul(self, rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::neg(self)
    }
}
