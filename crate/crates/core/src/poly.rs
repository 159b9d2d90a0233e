//! Exact polynomial arithmetic.
//!
//! [`MultiPoly`] is a sparse polynomial in `x_1, x_2, …` with
//! arbitrary-precision integer coefficients. [`UniPoly`] and [`RatUniPoly`]
//! are dense univariate polynomials over the integers and the rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponent vector, `exps[i]` is the power of `x_{i+1}`. Trailing zeros are
/// never stored, so `Vec` ordering is lexicographic order on exponents.
pub type Exponents = Vec<u32>;

fn trim(mut exps: Exponents) -> Exponents {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

/// Sparse multivariate polynomial with no zero coefficients stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(Vec::new(), c)
    }

    /// `x_i`, with `i >= 1`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut exps = alloc::vec![0; i];
        exps[i - 1] = 1;
        Self::monomial(exps, 1)
    }

    pub fn monomial(exps: Exponents, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff.into());
        p
    }

    /// Adds `coeff · x^exps` in place.
    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let exps = trim(exps);
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `scale · other` in place.
    pub fn add_scaled(&mut self, other: &MultiPoly, scale: &BigInt) {
        for (exps, c) in &other.terms {
            self.add_term(exps.clone(), c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical descending-lex order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Largest variable index that occurs, 0 for constants.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().sum::<u32>())
    }

    pub fn total_degree(&self) -> Result<u32> {
        self.degrees().max().ok_or(Error::ZeroPolynomial)
    }

    pub fn min_total_degree(&self) -> Result<u32> {
        self.degrees().min().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.degrees();
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Sum of the coefficients, the value at `x_i = 1` for all `i`.
    pub fn evaluate_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `1 - t` for every variable.
    pub fn specialize_to_1_minus_t(&self) -> UniPoly {
        // Each term of total degree d contributes c·(1-t)^d.
        let mut by_degree: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (exps, c) in &self.terms {
            *by_degree.entry(exps.iter().sum()).or_default() += c;
        }
        let mut out = UniPoly::zero();
        for (d, c) in by_degree {
            out = &out + &UniPoly::one_minus_t_pow(d as usize).scale(&c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Formats with custom variable names, grouped by ascending total degree
    /// and descending lex inside each degree, e.g. `x1 + x2 - x1*x2`.
    pub fn format_with<F>(&self, mut var_name: F) -> String
    where
        F: FnMut(usize) -> String,
    {
        if self.is_zero() {
            return String::from("0");
        }
        let mut ordered: Vec<(&Exponents, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (idx, (exps, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var_name(i + 1)),
                    _ => factors.push(alloc::format!("{}^{}", var_name(i + 1), e)),
                }
            }
            if factors.is_empty() {
                let _ = write!(out, "{abs}");
            } else {
                if !abs.is_one() {
                    let _ = write!(out, "{abs}*");
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|i| alloc::format!("x{i}")))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

fn exponent_sum(a: &[u32], b: &[u32]) -> Exponents {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, e) in out.iter_mut().zip(short) {
        *o += e;
    }
    out
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(exponent_sum(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(MultiPoly, Add, add);
forward_owned!(MultiPoly, Sub, sub);
forward_owned!(MultiPoly, Mul, mul);

/// Dense integer polynomial in `t`; `coeffs[d]` is the coefficient of `t^d`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(alloc::vec![BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1 - t)^d` by the binomial theorem.
    pub fn one_minus_t_pow(d: usize) -> Self {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut binom = BigInt::one();
        for k in 0..=d {
            coeffs.push(if k % 2 == 0 { binom.clone() } else { -binom.clone() });
            binom = binom * BigInt::from(d - k) / BigInt::from(k + 1);
        }
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

forward_owned!(UniPoly, Add, add);
forward_owned!(UniPoly, Sub, sub);
forward_owned!(UniPoly, Mul, mul);

fn write_dense<T, F>(f: &mut fmt::Formatter<'_>, coeffs: &[T], var: &str, mut split: F) -> fmt::Result
where
    F: FnMut(&T) -> Option<(bool, String, bool)>,
{
    // `split` returns (negative, |c| as text, |c| == 1) for nonzero c.
    let mut first = true;
    for (d, c) in coeffs.iter().enumerate() {
        let Some((negative, abs, unit)) = split(c) else { continue };
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        match (d, unit) {
            (0, _) => f.write_str(&abs)?,
            (_, true) => {}
            (_, false) => write!(f, "{abs}*")?,
        }
        match d {
            0 => {}
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{d}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    /// Ascending powers of `t`, e.g. `1 - t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dense(f, &self.coeffs, "t", |c| {
            (!c.is_zero()).then(|| (c.is_negative(), alloc::format!("{}", c.abs()), c.abs().is_one()))
        })
    }
}

/// Dense rational polynomial in `k`; coefficients are kept reduced with
/// positive denominators by [`BigRational`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RatUniPoly {
    coeffs: Vec<BigRational>,
}

impl RatUniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatUniPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, k: &BigInt) -> BigRational {
        let k = BigRational::from_integer(k.clone());
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &k + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by the linear factor `(k + shift)`.
    pub fn mul_linear(&self, shift: &BigInt) -> Self {
        let shift = BigRational::from_integer(shift.clone());
        let mut coeffs = alloc::vec![BigRational::zero(); self.coeffs.len() + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d + 1] += c;
            coeffs[d] += c * &shift;
        }
        Self::from_coeffs(coeffs)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Least common multiple of the denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Add for &RatUniPoly {
    type Output = RatUniPoly;
    fn add(self, rhs: &RatUniPoly) -> RatUniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatUniPoly::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl fmt::Display for RatUniPoly {
    /// Ascending powers of `k`, coefficients as `a/b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dense(f, &self.coeffs, "k", |c| {
            (!c.is_zero()).then(|| {
                let abs = c.abs();
                (c.is_negative(), alloc::format!("{abs}"), abs.is_one())
            })
        })
    }
}

/// Exact binomial coefficient `C(m, r)` for `m, r >= 0` by a running
/// product, with `C(m, r) = 0` when `r > m`.
pub fn binomial(m: u64, r: u64) -> BigInt {
    if r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}
