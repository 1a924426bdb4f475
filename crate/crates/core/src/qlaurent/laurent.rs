//! Laurent polynomials in the deformation parameter `q` with exact
//! rational coefficients.
//!
//! A [`LaurentPoly`] is a finite sum `sum_n c_n q^n` with `n` ranging over
//! (possibly negative) integers and `c_n` arbitrary-precision rationals.
//! The zero coefficient is never stored, so structural equality of the
//! coefficient maps is equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, Signed, Zero};

use crate::error::{Error, Result};

/// Laurent polynomial in `q` over the rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    /// Exponent -> coefficient; never contains a zero coefficient.
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    /// The constant polynomial `c`.
    pub fn constant(c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        LaurentPoly { coeffs }
    }

    /// The constant polynomial `n`.
    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The monomial `c * q^n`.
    pub fn monomial(c: BigRational, n: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(n, c);
        }
        LaurentPoly { coeffs }
    }

    /// The monomial `q^n`.
    pub fn q_pow(n: i64) -> Self {
        Self::monomial(BigRational::one(), n)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut p = LaurentPoly::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    /// Adds `c * q^n` in place.
    pub fn add_term(&mut self, n: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(n).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    /// Coefficient of `q^n` (zero if absent).
    pub fn coeff(&self, n: i64) -> BigRational {
        self.coeffs.get(&n).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterates over `(exponent, coefficient)` pairs in ascending exponent
    /// order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when the polynomial is a single monomial `c * q^n`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// The single `(exponent, coefficient)` pair of a monomial.
    ///
    /// Panics if the polynomial is not a monomial.
    pub fn as_monomial(&self) -> (i64, BigRational) {
        assert!(self.is_monomial(), "not a monomial: {self}");
        let (n, c) = self.coeffs.iter().next().unwrap();
        (*n, c.clone())
    }

    /// Multiplies by `q^n` (shifts every exponent by `n`).
    pub fn shift(&self, n: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by the rational `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Substitutes `q -> q^e`, i.e. multiplies every exponent by `e`.
    ///
    /// Requires `e != 0`; collapsing all exponents to zero is never wanted.
    pub fn substitute_power(&self, e: i64) -> Self {
        assert!(e != 0, "substitution exponent must be nonzero");
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(n, c)| (n * e, c.clone())).collect(),
        }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut base = self.clone();
        let mut out = LaurentPoly::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        out
    }

    /// Evaluates at a nonzero rational point.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        if q.is_zero() {
            return Err(Error::EvalAtZero);
        }
        let mut acc = BigRational::zero();
        for (n, c) in &self.coeffs {
            acc += c * rat_pow(q, *n);
        }
        Ok(acc)
    }

    /// Evaluates at a floating point `q != 0`.  Coefficients are converted
    /// through f64 (exact for the small rationals arising here).
    pub fn eval_float<T: Float + FromPrimitive>(&self, q: T) -> T {
        let mut acc = T::zero();
        for (n, c) in &self.coeffs {
            let cf = T::from_f64(rational_to_f64(c)).expect("coefficient fits");
            acc = acc + cf * q.powi(*n as i32);
        }
        acc
    }
}

/// Rounds a big rational to the nearest f64.
pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of roundings for extreme components.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// `q^n` for a nonzero rational `q` and any integer `n`.
pub(crate) fn rat_pow(q: &BigRational, n: i64) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let mut base = if n > 0 { q.clone() } else { q.recip() };
    let mut e = n.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

// ---- Ring trait implementations ----

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::q_pow(0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (n1, c1) in &self.coeffs {
            for (n2, c2) in &rhs.coeffs {
                out.add_term(n1 + n2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// ---- Display ----

/// Formats a single coefficient/exponent pair in the `q^n` syntax.
fn fmt_term(c: &BigRational, n: i64, out: &mut String) {
    let abs = c.abs();
    if n == 0 {
        out.push_str(&abs.to_string());
        return;
    }
    if !abs.is_one() {
        out.push_str(&abs.to_string());
        out.push('*');
    }
    if n == 1 {
        out.push('q');
    } else {
        out.push_str(&format!("q^{n}"));
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in ascending exponent order, e.g. `1 - q^2` or `q^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            fmt_term(c, *n, &mut s);
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut p = LaurentPoly::q_pow(3);
        p.add_term(3, rat(-1, 1));
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn arithmetic_small_cases() {
        let one = LaurentPoly::one();
        let q2 = LaurentPoly::q_pow(2);
        let p = &one - &q2; // 1 - q^2
        assert_eq!(p.coeff(0), rat(1, 1));
        assert_eq!(p.coeff(2), rat(-1, 1));
        // (1 - q^2)(1 + q^2) = 1 - q^4
        let sum = &one + &q2;
        let prod = &p * &sum;
        assert_eq!(prod, &one - &LaurentPoly::q_pow(4));
    }

    #[test]
    fn negative_exponents_multiply() {
        let p = LaurentPoly::q_pow(-2);
        let r = &p * &LaurentPoly::q_pow(5);
        assert_eq!(r, LaurentPoly::q_pow(3));
        assert_eq!(p.min_exp(), Some(-2));
        assert_eq!(p.max_exp(), Some(-2));
    }

    #[test]
    fn eval_at_one_half() {
        // q^-2 - 1 at q = 1/2 gives 3.
        let p = &LaurentPoly::q_pow(-2) - &LaurentPoly::one();
        let v = p.eval(&rat(1, 2)).unwrap();
        assert_eq!(v, rat(3, 1));
    }

    #[test]
    fn eval_rejects_zero() {
        let p = LaurentPoly::q_pow(-1);
        assert!(matches!(p.eval(&BigRational::zero()), Err(Error::EvalAtZero)));
    }

    #[test]
    fn eval_is_multiplicative() {
        let q = rat(2, 3);
        let a = LaurentPoly::from_terms([(0, rat(1, 1)), (2, rat(-3, 2))]);
        let b = LaurentPoly::from_terms([(-1, rat(2, 1)), (1, rat(5, 7))]);
        let lhs = (&a * &b).eval(&q).unwrap();
        let rhs = a.eval(&q).unwrap() * b.eval(&q).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let p = &LaurentPoly::one() + &LaurentPoly::q_pow(-1);
        let mut by_hand = LaurentPoly::one();
        for _ in 0..5 {
            by_hand = &by_hand * &p;
        }
        assert_eq!(p.pow(5), by_hand);
    }

    #[test]
    fn substitute_power_scales_exponents() {
        let p = &LaurentPoly::one() + &LaurentPoly::q_pow(3);
        let r = p.substitute_power(-2);
        assert_eq!(r, &LaurentPoly::one() + &LaurentPoly::q_pow(-6));
    }

    #[test]
    fn display_round_trip_formats() {
        let p = &LaurentPoly::one() - &LaurentPoly::q_pow(2);
        assert_eq!(p.to_string(), "1 - q^2");
        assert_eq!(LaurentPoly::q_pow(-4).to_string(), "q^-4");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let c = LaurentPoly::monomial(rat(3, 2), 1);
        assert_eq!(c.to_string(), "3/2*q");
        let neg = LaurentPoly::monomial(rat(-1, 1), 2);
        assert_eq!(neg.to_string(), "-q^2");
    }
}
