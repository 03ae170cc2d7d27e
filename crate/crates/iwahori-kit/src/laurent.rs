//! Laurent polynomials in one variable `v` with integer coefficients.
//!
//! This is the coefficient ring of everything else in the crate. The Hecke
//! parameter is `q = v^2`, so "polynomial in q" means a Laurent scalar
//! supported on non-negative even powers of v.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An element of Z[v, v^-1], stored sparsely by exponent.
///
/// The map never holds zero coefficients; `BTreeMap` keeps iteration order
/// (and therefore printing and serialization) canonical.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentScalar {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar::default()
    }

    pub fn one() -> Self {
        LaurentScalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if n != 0 {
            coeffs.insert(0, n);
        }
        LaurentScalar { coeffs }
    }

    /// The monomial v^k.
    pub fn v_power(k: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, 1);
        LaurentScalar { coeffs }
    }

    /// The monomial q^k = v^(2k).
    pub fn q_power(k: i32) -> Self {
        LaurentScalar::v_power(2 * k)
    }

    /// q - 1 = v^2 - 1, the recurring structure constant of the T-basis.
    pub fn q_minus_one() -> Self {
        LaurentScalar::q_power(1) - LaurentScalar::one()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i32, &i64)> {
        self.coeffs.iter()
    }

    pub fn set_coeff(&mut self, exp: i32, value: i64) {
        if value == 0 {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, value);
        }
    }

    fn add_to_coeff(&mut self, exp: i32, delta: i64) {
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += delta;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    /// Substitute v = 1, collapsing to an integer.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Substitute a concrete integer for q = v^2. Only valid when every
    /// exponent is even and non-negative; returns `None` otherwise.
    pub fn eval_q(&self, q: i64) -> Option<i64> {
        let mut total: i64 = 0;
        for (&exp, &c) in &self.coeffs {
            if exp < 0 || exp % 2 != 0 {
                return None;
            }
            total += c * q.pow((exp / 2) as u32);
        }
        Some(total)
    }

    /// True when the scalar lies in Z[q] (even non-negative exponents only).
    pub fn is_poly_in_q(&self) -> bool {
        self.coeffs.keys().all(|&e| e >= 0 && e % 2 == 0)
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (&e, &c) in &rhs.coeffs {
            self.add_to_coeff(e, c);
        }
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (&e, &c) in &rhs.coeffs {
            self.add_to_coeff(e, -c);
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        let coeffs = self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect();
        LaurentScalar { coeffs }
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_to_coeff(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match e {
                0 => format!("{mag}"),
                1 if mag == 1 => "v".to_string(),
                1 => format!("{mag}*v"),
                _ if mag == 1 => format!("v^{e}"),
                _ => format!("{mag}*v^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}
