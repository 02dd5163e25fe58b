//! Dense polynomials in `q = z^(1/2)` with big-integer coefficients, the
//! binomial convention used by the closed forms, a division-free determinant
//! and Hilbert series expansion.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial has a nonzero coefficient at odd q-exponent {0}")]
    OddExponentPresent(usize),
}

/// `sum_k coeffs[k] q^k`. Canonical: no trailing zeros, zero is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfPolynomial {
    coeffs: Vec<BigInt>,
}

impl HalfPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c q^exp`
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `q`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `c q^exp` in place.
    pub fn add_term(&mut self, c: &BigInt, exp: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize(exp + 1, BigInt::zero());
        }
        self.coeffs[exp] += c;
        self.normalize();
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Formats as a polynomial in the named variable with the given exponent
    /// divisor, e.g. `fmt_in("z", 2)` for an even polynomial.
    fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str, step: usize) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = k / step;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (exp, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{var}")?,
                (_, false) => write!(f, "{mag}*{var}")?,
            }
            if exp > 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }

    /// Displays an even polynomial in `z = q^2`. Odd coefficients are
    /// ignored, so callers should go through [`to_z_polynomial`] first.
    pub fn display_z(&self) -> impl fmt::Display + '_ {
        struct Z<'a>(&'a HalfPolynomial);
        impl fmt::Display for Z<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let even = HalfPolynomial::from_coeffs(
                    self.0
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { BigInt::zero() })
                        .collect(),
                );
                even.fmt_in(f, "z", 2)
            }
        }
        Z(self)
    }

    /// The coefficients of `z^0, z^1, ...` of an even polynomial.
    pub fn z_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().step_by(2).cloned().collect()
    }

    /// Builds `sum_k coeffs[k] z^k`.
    pub fn from_z_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut out = Vec::with_capacity(coeffs.len() * 2);
        for c in coeffs {
            out.push(c);
            out.push(BigInt::zero());
        }
        Self::from_coeffs(out)
    }
}

impl fmt::Display for HalfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "q", 1)
    }
}

impl AddAssign<&HalfPolynomial> for HalfPolynomial {
    fn add_assign(&mut self, rhs: &HalfPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&HalfPolynomial> for HalfPolynomial {
    fn sub_assign(&mut self, rhs: &HalfPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add for &HalfPolynomial {
    type Output = HalfPolynomial;
    fn add(self, rhs: &HalfPolynomial) -> HalfPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &HalfPolynomial {
    type Output = HalfPolynomial;
    fn sub(self, rhs: &HalfPolynomial) -> HalfPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &HalfPolynomial {
    type Output = HalfPolynomial;
    fn neg(self) -> HalfPolynomial {
        HalfPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &HalfPolynomial {
    type Output = HalfPolynomial;
    fn mul(self, rhs: &HalfPolynomial) -> HalfPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return HalfPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        HalfPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for HalfPolynomial {
            type Output = HalfPolynomial;
            fn $m(self, rhs: HalfPolynomial) -> HalfPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&HalfPolynomial> for HalfPolynomial {
            type Output = HalfPolynomial;
            fn $m(self, rhs: &HalfPolynomial) -> HalfPolynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for HalfPolynomial {
    type Output = HalfPolynomial;
    fn neg(self) -> HalfPolynomial {
        -&self
    }
}

/// `binomial(n, k)` extended to all integers: 0 for `k < 0`, 1 for `k == 0`
/// (any `n`), 0 for negative `n` otherwise, and 0 when `n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if n < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // Exact in u128 as long as the running value times the next factor fits.
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(p) => acc = p / (i as u128 + 1),
            None => {
                let mut big = BigInt::from(acc);
                for j in i..k {
                    big = big * (n - j) / (j + 1);
                }
                return big;
            }
        }
    }
    BigInt::from(acc)
}

/// Determinant of a square matrix of polynomials, by Laplace expansion along
/// rows with the minors memoized on their column sets.
///
/// # Panics
/// If the matrix is empty or not square.
pub fn det_poly_matrix(m: &[Vec<HalfPolynomial>]) -> HalfPolynomial {
    let n = m.len();
    assert!(n >= 1, "determinant of an empty matrix");
    assert!(m.iter().all(|r| r.len() == n), "matrix is not square");
    assert!(n <= 24, "matrix too large for subset memoization");

    // minors[cols] = det of rows (n - |cols|)..n restricted to `cols`.
    let mut minors: HashMap<u64, HalfPolynomial> = HashMap::new();
    minors.insert(0, HalfPolynomial::one());
    let full: u64 = (1 << n) - 1;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for s in 0..=full {
        by_size[s.count_ones() as usize].push(s);
    }
    for size in 1..=n {
        let row = n - size;
        for &cols in &by_size[size] {
            let mut acc = HalfPolynomial::zero();
            let mut sign_pos = true;
            // Columns of `cols` in increasing order alternate sign.
            for j in 0..n {
                if cols & (1 << j) == 0 {
                    continue;
                }
                let entry = &m[row][j];
                if !entry.is_zero() {
                    let minor = &minors[&(cols & !(1 << j))];
                    if !minor.is_zero() {
                        let term = entry * minor;
                        if sign_pos {
                            acc += &term;
                        } else {
                            acc -= &term;
                        }
                    }
                }
                sign_pos = !sign_pos;
            }
            minors.insert(cols, acc);
        }
        if row > 0 {
            // Minors of size - 1 are no longer needed.
            for s in &by_size[size - 1] {
                minors.remove(s);
            }
        }
    }
    minors.remove(&full).unwrap_or_default()
}

/// Checks that `p` is a polynomial in `z = q^2`.
pub fn to_z_polynomial(p: HalfPolynomial) -> Result<HalfPolynomial, PolyError> {
    match p
        .coeffs
        .iter()
        .enumerate()
        .find(|(k, c)| k % 2 == 1 && !c.is_zero())
    {
        Some((k, _)) => Err(PolyError::OddExponentPresent(k)),
        None => Ok(p),
    }
}

/// `numerator(z) / (1 - z)^denom_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: HalfPolynomial,
    denom_exponent: u64,
}

impl HilbertSeries {
    pub fn new(numerator: HalfPolynomial, denom_exponent: u64) -> Result<Self, PolyError> {
        Ok(Self {
            numerator: to_z_polynomial(numerator)?,
            denom_exponent,
        })
    }

    pub fn numerator(&self) -> &HalfPolynomial {
        &self.numerator
    }

    pub fn denom_exponent(&self) -> u64 {
        self.denom_exponent
    }

    /// Numerator coefficients of `z^0, z^1, ...`.
    pub fn numerator_z_coeffs(&self) -> Vec<BigInt> {
        self.numerator.z_coeffs()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/(1-z)^{}", self.numerator.display_z(), self.denom_exponent)
    }
}

/// The first `terms` coefficients of the series, i.e. the Hilbert function
/// values in degrees `0..terms`.
pub fn series_expand(h: &HilbertSeries, terms: usize) -> Vec<BigInt> {
    let num = h.numerator_z_coeffs();
    let e = h.denom_exponent as i64;
    (0..terms as i64)
        .map(|l| {
            if e == 0 {
                return num.get(l as usize).cloned().unwrap_or_default();
            }
            num.iter()
                .take(l as usize + 1)
                .enumerate()
                .map(|(j, c)| c * binomial(l - j as i64 + e - 1, e - 1))
                .sum()
        })
        .collect()
}
