//! Arithmetic in GF(2^m) for 2 <= m <= 16 and in the polynomial ring GF(2)[x].
//!
//! Field elements are stored in the polynomial basis: bit `i` of the value is
//! the coefficient of `α^i`, where `α` is a root of the field's primitive
//! polynomial. Multiplication and inversion go through precomputed log/exp
//! tables.

use std::fmt;

use crate::error::{Error, Result};

/// Smallest primitive polynomial of each degree 2..=16, by integer value.
///
/// Bit `i` is the coefficient of `x^i`.
pub const PRIMITIVE_POLYNOMIALS: [(u32, u32); 15] = [
    (2, 0x7),
    (3, 0xb),
    (4, 0x13),
    (5, 0x25),
    (6, 0x43),
    (7, 0x83),
    (8, 0x11d),
    (9, 0x211),
    (10, 0x409),
    (11, 0x805),
    (12, 0x1053),
    (13, 0x201b),
    (14, 0x402b),
    (15, 0x8003),
    (16, 0x1002d),
];

/// A polynomial over GF(2), packed 64 coefficients per limb.
///
/// Limbs above the leading coefficient are never stored, so two equal
/// polynomials always have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    limbs: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_bits(1)
    }

    /// `x^e`.
    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.flip(e);
        p
    }

    /// Builds a polynomial from the low 64 coefficients packed in `bits`.
    pub fn from_bits(bits: u64) -> Self {
        let mut p = Self { limbs: vec![bits] };
        p.normalize();
        p
    }

    /// Builds `Σ x^e` over the given exponents. Repeated exponents cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    /// Coefficients of `x^0 .. x^deg`, lowest first.
    pub fn from_coefficients(coefficients: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coefficients.iter().enumerate() {
            if c {
                p.flip(i);
            }
        }
        p
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|limb| limb >> (i % 64) & 1 == 1)
    }

    /// Exponents of the nonzero terms, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (li, &limb) in self.limbs.iter().enumerate() {
            let mut rest = limb;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                out.push(li * 64 + b);
                rest &= rest - 1;
            }
        }
        out
    }

    /// The low 64 coefficients packed into an integer.
    pub fn low_bits(&self) -> u64 {
        self.limbs.first().copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    fn flip(&mut self, i: usize) {
        let li = i / 64;
        if self.limbs.len() <= li {
            self.limbs.resize(li + 1, 0);
        }
        self.limbs[li] ^= 1 << (i % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// `self ^= other << shift`.
    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        let Some(deg) = other.degree() else { return };
        let needed = (deg + shift) / 64 + 1;
        if self.limbs.len() < needed {
            self.limbs.resize(needed, 0);
        }
        let (ls, bs) = (shift / 64, shift % 64);
        for (i, &limb) in other.limbs.iter().enumerate() {
            self.limbs[i + ls] ^= limb << bs;
            if bs != 0 && i + ls + 1 < self.limbs.len() {
                self.limbs[i + ls + 1] ^= limb >> (64 - bs);
            }
        }
        self.normalize();
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_shifted(other, 0);
        out
    }

    /// Product in GF(2)[x].
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for e in self.exponents() {
            out.xor_shifted(other, e);
        }
        out
    }

    /// Quotient and remainder of division by `divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            quot.flip(rd - dd);
            rem.xor_shifted(divisor, rd - dd);
        }
        Ok((quot, rem))
    }

    /// Remainder of division by `modulus`.
    pub fn rem(&self, modulus: &Self) -> Result<Self> {
        self.div_rem(modulus).map(|(_, r)| r)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPolynomial({self})")
    }
}

/// An element of GF(2^m) in polynomial-basis representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GfElement(pub u32);

impl GfElement {
    pub const ZERO: GfElement = GfElement(0);
    pub const ONE: GfElement = GfElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Add for GfElement {
    type Output = GfElement;

    fn add(self, rhs: GfElement) -> GfElement {
        GfElement(self.0 ^ rhs.0)
    }
}

/// Log/exp tables for GF(2^m) built on a fixed primitive polynomial.
///
/// Immutable once built; share it freely between threads.
#[derive(Clone, Debug)]
pub struct FieldContext {
    m: u32,
    primitive_poly: BinaryPolynomial,
    exp_table: Vec<u32>,
    log_table: Vec<u32>,
}

impl FieldContext {
    /// Builds GF(2^m) from the built-in primitive polynomial of degree `m`.
    pub fn new(m: u32) -> Result<Self> {
        let poly = PRIMITIVE_POLYNOMIALS
            .iter()
            .find(|&&(deg, _)| deg == m)
            .map(|&(_, p)| p)
            .ok_or(Error::FieldDegree(m))?;
        Ok(Self::with_polynomial(m, poly).expect("built-in primitive polynomial table is verified by tests"))
    }

    /// Builds GF(2^m) from an arbitrary degree-`m` polynomial, returning
    /// `None` when it is not primitive.
    pub fn with_polynomial(m: u32, poly: u32) -> Option<Self> {
        if !(2..=16).contains(&m) || poly >> m != 1 {
            return None;
        }
        let order = (1usize << m) - 1;
        let mut exp_table = Vec::with_capacity(order);
        let mut log_table = vec![u32::MAX; 1 << m];
        let mut x: u32 = 1;
        for i in 0..order {
            if log_table[x as usize] != u32::MAX {
                // α has order < 2^m - 1
                return None;
            }
            log_table[x as usize] = i as u32;
            exp_table.push(x);
            x <<= 1;
            if x >> m & 1 == 1 {
                x ^= poly;
            }
        }
        if x != 1 {
            return None;
        }
        log_table[0] = 0;
        Some(Self {
            m,
            primitive_poly: BinaryPolynomial::from_bits(poly as u64),
            exp_table,
            log_table,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of field elements, `2^m`.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn order(&self) -> usize {
        self.exp_table.len()
    }

    pub fn primitive_poly(&self) -> &BinaryPolynomial {
        &self.primitive_poly
    }

    pub fn exp_table(&self) -> &[u32] {
        &self.exp_table
    }

    pub fn element(&self, value: u32) -> Result<GfElement> {
        if (value as usize) < self.size() {
            Ok(GfElement(value))
        } else {
            Err(Error::InvalidElement { value, m: self.m })
        }
    }

    /// The primitive element `α`.
    pub fn alpha(&self) -> GfElement {
        self.exp(1)
    }

    /// `α^i`, for any `i`.
    pub fn exp(&self, i: usize) -> GfElement {
        GfElement(self.exp_table[i % self.order()])
    }

    /// Discrete logarithm base `α`; `None` for zero.
    pub fn log(&self, a: GfElement) -> Option<usize> {
        debug_assert!((a.0 as usize) < self.size());
        (!a.is_zero()).then(|| self.log_table[a.0 as usize] as usize)
    }

    pub fn mul(&self, a: GfElement, b: GfElement) -> GfElement {
        match (self.log(a), self.log(b)) {
            (Some(la), Some(lb)) => self.exp(la + lb),
            _ => GfElement::ZERO,
        }
    }

    pub fn inv(&self, a: GfElement) -> Result<GfElement> {
        let la = self.log(a).ok_or(Error::ZeroInverse)?;
        Ok(self.exp((self.order() - la) % self.order()))
    }

    pub fn pow(&self, a: GfElement, e: u64) -> GfElement {
        if e == 0 {
            return GfElement::ONE;
        }
        match self.log(a) {
            Some(la) => {
                let n = self.order() as u64;
                self.exp(((la as u64 % n) * (e % n) % n) as usize)
            }
            None => GfElement::ZERO,
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: GfElement) -> Option<usize> {
        let la = self.log(a)?;
        Some(self.order() / gcd(la, self.order()))
    }

    /// Evaluates a GF(2)-polynomial at `x` by Horner's rule.
    pub fn eval(&self, p: &BinaryPolynomial, x: GfElement) -> GfElement {
        let Some(deg) = p.degree() else {
            return GfElement::ZERO;
        };
        let mut acc = GfElement::ZERO;
        for i in (0..=deg).rev() {
            acc = self.mul(acc, x);
            if p.coefficient(i) {
                acc = acc + GfElement::ONE;
            }
        }
        acc
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
