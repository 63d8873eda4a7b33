//! Dense univariate polynomials over ℚ.
//!
//! Coefficients are stored in ascending degree order. Canonical form: the
//! vector is empty for the zero polynomial, otherwise the last entry is
//! nonzero. `poly_gcd` runs Euclid on integer primitive parts (no rational
//! blow-up mid-run) and returns the monic gcd; `resultant` goes through the
//! Sylvester matrix with fraction-free elimination, deliberately independent
//! of the gcd path so the two can cross-check each other.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{format_rational, Rational};

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// Build from ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the first nonzero coefficient; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Float evaluation at a complex point (Horner).
    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn make_monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lead) => {
                let inv = Rational::one() / lead;
                UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn mul_scalar(&self, s: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = Rational::one() / divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let factor = &rem[k] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let delta = dc * &factor;
                rem[k - dd + j] = &rem[k - dd + j] - delta;
            }
            quot[k - dd] = factor;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// True when `self` divides `other` with zero remainder.
    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// `self / x^k`; panics when the low-order coefficients are nonzero.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        assert!(
            self.coeffs.iter().take(k).all(Zero::is_zero),
            "shift_down would drop nonzero coefficients"
        );
        if self.coeffs.len() <= k {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(self.coeffs[k..].to_vec())
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = poly_gcd(self, &self.derivative());
        self.div_rem(&g).0.make_monic()
    }

    /// Integer coefficient vector `n` and positive scale `s` with `self = s·n(x)`
    /// and `n` primitive (content 1, positive leading coefficient).
    pub fn primitive_integer_parts(&self) -> (Vec<BigInt>, Rational) {
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().map(Signed::is_negative).unwrap_or(false) {
            content = -content;
        }
        for v in &mut ints {
            *v = &*v / &content;
        }
        (ints, Rational::new(content, denom_lcm))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_rational(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", format_rational(c))?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                let f: fn(&UniPoly, &UniPoly) -> UniPoly = $imp;
                f(self, rhs)
            }
        }
        impl $trait<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

fn poly_add(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    UniPoly::from_coeffs((0..n).map(|k| a.coeff(k) + b.coeff(k)).collect())
}

fn poly_sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    UniPoly::from_coeffs((0..n).map(|k| a.coeff(k) - b.coeff(k)).collect())
}

fn poly_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() || b.is_zero() {
        return UniPoly::zero();
    }
    let mut out = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            out[i + j] = &out[i + j] + ca * cb;
        }
    }
    UniPoly::from_coeffs(out)
}

poly_binop!(Add, add, poly_add);
poly_binop!(Sub, sub, poly_sub);
poly_binop!(Mul, mul, poly_mul);

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Primitive integer polynomial helpers for the gcd loop.
fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
    }
    g
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut c = int_content(&v);
    if v.last().unwrap().is_negative() {
        c = -c;
    }
    for x in &mut v {
        *x = &*x / &c;
    }
    v
}

/// Pseudo-remainder of primitive integer polynomials, returned primitive.
fn int_prem_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    while rem.len() > db {
        let k = rem.len() - 1;
        let factor = rem[k].clone();
        if factor.is_zero() {
            rem.pop();
            continue;
        }
        for x in rem.iter_mut() {
            *x = &*x * &lead;
        }
        for (j, bc) in b.iter().enumerate() {
            let idx = k - db + j;
            rem[idx] = &rem[idx] - bc * &factor;
        }
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    int_primitive(rem)
}

/// Monic gcd over ℚ; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    let (mut f, _) = a.primitive_integer_parts();
    let (mut g, _) = b.primitive_integer_parts();
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = int_prem_primitive(&f, &g);
        f = g;
        g = r;
    }
    UniPoly::from_coeffs(f.into_iter().map(Rational::from_integer).collect()).make_monic()
}

/// Resultant of `a` and `b` via the Sylvester matrix with Bareiss
/// fraction-free elimination. Independent of the Euclidean gcd route.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Rational {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        // Conventions for degenerate inputs: res(0, ·) = 0 except res(0, const) has no
        // common meaning; treat any zero input as resultant 0.
        _ => return Rational::zero(),
    };
    if da == 0 {
        return power_rational(&a.coeff(0), db as u32);
    }
    if db == 0 {
        return power_rational(&b.coeff(0), da as u32);
    }
    // Scale to integer polynomials: res(s·A, t·B) = s^db · t^da · res(A, B).
    let (ai, sa) = a.primitive_integer_parts();
    let (bi, sb) = b.primitive_integer_parts();
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for row in 0..db {
        for (j, c) in ai.iter().enumerate() {
            m[row][row + (da - j)] = c.clone();
        }
    }
    for row in 0..da {
        for (j, c) in bi.iter().enumerate() {
            m[db + row][row + (db - j)] = c.clone();
        }
    }
    let det = bareiss_determinant(m);
    power_rational(&sa, db as u32) * power_rational(&sb, da as u32) * Rational::from_integer(det)
}

fn power_rational(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc = acc * base;
    }
    acc
}

/// Bareiss determinant of a square integer matrix (consumes it).
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}
