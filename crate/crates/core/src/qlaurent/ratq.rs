//! The field of rational functions in `q` with rational coefficients,
//! represented as reduced fractions of Laurent polynomials.
//!
//! Canonical form: the denominator is an ordinary polynomial (lowest
//! exponent zero) whose lowest-degree coefficient is 1, and numerator and
//! denominator share no polynomial factor.  Any power of `q` freed up by
//! the reduction is carried by the numerator, so equality of fractions is
//! structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qlaurent::LaurentPoly;

/// A reduced fraction of Laurent polynomials in `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatQ {
    /// Builds `num / den` in canonical form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatQ { num, den: LaurentPoly::one() };
        }
        // Split off the q-power content so both parts are genuine
        // polynomials with nonzero constant term.
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let mut n0 = num.shift(-a);
        let mut d0 = den.shift(-b);
        let g = poly_gcd(&n0, &d0);
        if !g.is_one() {
            n0 = div_exact(&n0, &g);
            d0 = div_exact(&d0, &g);
        }
        // Make the denominator's constant coefficient 1.
        let c = d0.coeff(0);
        debug_assert!(!c.is_zero());
        let inv = c.recip();
        n0 = n0.scale(&inv);
        d0 = d0.scale(&inv);
        RatQ { num: n0.shift(a - b), den: d0 }
    }

    /// Builds the canonical form from a pair already known to share no
    /// non-unit polynomial factor, skipping the gcd.
    fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatQ { num, den: LaurentPoly::one() };
        }
        let b = den.min_exp().unwrap();
        let d0 = den.shift(-b);
        let c = d0.coeff(0);
        let inv = c.recip();
        RatQ { num: num.shift(-b).scale(&inv), den: d0.scale(&inv) }
    }

    /// The numerator of the canonical form.
    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator of the canonical form.
    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The monomial `q^n` as a fraction.
    pub fn q_pow(n: i64) -> Self {
        RatQ { num: LaurentPoly::q_pow(n), den: LaurentPoly::one() }
    }

    /// The constant `n`.
    pub fn from_int(n: i64) -> Self {
        RatQ { num: LaurentPoly::from_int(n), den: LaurentPoly::one() }
    }

    /// A constant rational.
    pub fn from_rational(c: BigRational) -> Self {
        RatQ { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplicative inverse.
    ///
    /// Errors on zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Already reduced; swapping keeps it reduced.
        Ok(RatQ::from_coprime(self.den.clone(), self.num.clone()))
    }

    /// Evaluates at a nonzero rational point where the denominator does
    /// not vanish.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes(q.to_string()));
        }
        Ok(self.num.eval(q)? / d)
    }

    /// Evaluates at a floating point `q != 0`; the caller is responsible
    /// for staying away from denominator zeros (in this crate every
    /// denominator vanishes only at roots of unity, so real `0 < q < 1`
    /// points are always safe).
    pub fn eval_float<T: num_traits::Float + num_traits::FromPrimitive>(&self, q: T) -> T {
        self.num.eval_float(q) / self.den.eval_float(q)
    }
}

impl From<LaurentPoly> for RatQ {
    fn from(p: LaurentPoly) -> Self {
        RatQ { num: p, den: LaurentPoly::one() }
    }
}

impl From<&LaurentPoly> for RatQ {
    fn from(p: &LaurentPoly) -> Self {
        RatQ { num: p.clone(), den: LaurentPoly::one() }
    }
}

// ---- Polynomial gcd (on polynomials with lowest exponent zero) ----

/// Quotient and remainder of `a / b` for polynomials with nonnegative
/// exponents, by descending-degree long division.
fn div_rem(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!b.is_zero(), "division by the zero polynomial");
    debug_assert!(a.is_zero() || a.min_exp().unwrap() >= 0);
    debug_assert!(b.min_exp().unwrap() >= 0);
    let db = b.max_exp().unwrap();
    let lead_b = b.coeff(db);
    let mut rem = a.clone();
    let mut quo = LaurentPoly::zero();
    while !rem.is_zero() && rem.max_exp().unwrap() >= db {
        let dr = rem.max_exp().unwrap();
        let c = rem.coeff(dr) / &lead_b;
        let t = LaurentPoly::monomial(c, dr - db);
        rem = &rem - &(&t * b);
        quo = &quo + &t;
    }
    (quo, rem)
}

/// Exact division; panics if `b` does not divide `a`.
fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if b.is_one() {
        return a.clone();
    }
    let (q, r) = div_rem(a, b);
    assert!(r.is_zero(), "inexact polynomial division");
    q
}

/// Rational content of a nonzero polynomial: the positive rational `c`
/// with `a / c` integer-primitive, negated when the leading coefficient
/// is negative.
fn content(a: &LaurentPoly) -> BigRational {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut num_gcd = BigInt::from(0);
    let mut den_lcm = BigInt::from(1);
    for (_, c) in a.terms() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut c = BigRational::new(num_gcd, den_lcm);
    if a.coeff(a.max_exp().unwrap()).is_negative() {
        c = -c;
    }
    c
}

/// `a` divided by its content: coprime integer coefficients, positive
/// leading coefficient.
fn primitive(a: &LaurentPoly) -> LaurentPoly {
    a.scale(&content(a).recip())
}

/// A scalar multiple of `a mod b`, computed without coefficient
/// fractions (each elimination step scales the remainder by the leading
/// coefficient of `b` instead of dividing).  Any scalar works for gcd
/// purposes, since the caller re-normalizes to the primitive part.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().unwrap();
    let lead_b = b.coeff(db);
    let mut rem = a.clone();
    while !rem.is_zero() && rem.max_exp().unwrap() >= db {
        let dr = rem.max_exp().unwrap();
        let lead_r = rem.coeff(dr);
        rem = &rem.scale(&lead_b) - &(&LaurentPoly::monomial(lead_r, dr - db) * b);
    }
    rem
}

/// Monic gcd of two polynomials with lowest exponent zero, by the
/// primitive-remainder Euclidean algorithm (contents are stripped after
/// every step, which keeps coefficient growth tame).
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let monic = |p: LaurentPoly| {
        if p.is_zero() {
            return p;
        }
        let lead = p.coeff(p.max_exp().unwrap());
        p.scale(&lead.recip())
    };
    if a.is_zero() {
        return monic(b.clone());
    }
    if b.is_zero() {
        return monic(a.clone());
    }
    let mut x = primitive(a);
    let mut y = primitive(b);
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = if r.is_zero() { r } else { primitive(&r) };
    }
    monic(x)
}

// ---- Field trait implementations ----

impl Zero for RatQ {
    fn zero() -> Self {
        RatQ { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatQ {
    fn one() -> Self {
        RatQ { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
}

/// Shared implementation of `a + b` and `a - b` over reduced inputs,
/// using denominator-gcd splitting so the reduction work happens on
/// small factors only.
fn add_signed(lhs: &RatQ, rhs: &RatQ, negate_rhs: bool) -> RatQ {
    let combine = |x: &LaurentPoly, y: &LaurentPoly| if negate_rhs { x - y } else { x + y };
    if rhs.num.is_zero() {
        return lhs.clone();
    }
    if lhs.num.is_zero() {
        let num = combine(&LaurentPoly::zero(), &rhs.num);
        return RatQ { num, den: rhs.den.clone() };
    }
    let g = poly_gcd(&lhs.den, &rhs.den);
    if g.is_one() {
        // With both inputs reduced, the cross sum is already coprime to
        // the product of the denominators.
        return RatQ::from_coprime(
            combine(&(&lhs.num * &rhs.den), &(&rhs.num * &lhs.den)),
            &lhs.den * &rhs.den,
        );
    }
    let d1g = div_exact(&lhs.den, &g);
    let d2g = div_exact(&rhs.den, &g);
    let t = combine(&(&lhs.num * &d2g), &(&rhs.num * &d1g));
    if t.is_zero() {
        return RatQ::zero();
    }
    // Only the shared factor can still divide t.
    let mt = t.min_exp().unwrap();
    let t0 = t.shift(-mt);
    let g2 = poly_gcd(&t0, &g);
    let num = div_exact(&t0, &g2).shift(mt);
    let den = &d1g * &div_exact(&rhs.den, &g2);
    RatQ::from_coprime(num, den)
}

impl Add for &RatQ {
    type Output = RatQ;

    fn add(self, rhs: &RatQ) -> RatQ {
        add_signed(self, rhs, false)
    }
}

impl Sub for &RatQ {
    type Output = RatQ;

    fn sub(self, rhs: &RatQ) -> RatQ {
        add_signed(self, rhs, true)
    }
}

impl Mul for &RatQ {
    type Output = RatQ;

    fn mul(self, rhs: &RatQ) -> RatQ {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatQ::zero();
        }
        // Cross-reduce before multiplying: numerators are coprime to
        // their own denominators already.
        let a1 = self.num.min_exp().unwrap();
        let n1 = self.num.shift(-a1);
        let a2 = rhs.num.min_exp().unwrap();
        let n2 = rhs.num.shift(-a2);
        let g1 = poly_gcd(&n1, &rhs.den);
        let g2 = poly_gcd(&n2, &self.den);
        let num = &div_exact(&n1, &g1) * &div_exact(&n2, &g2);
        let den = &div_exact(&self.den, &g2) * &div_exact(&rhs.den, &g1);
        RatQ::from_coprime(num.shift(a1 + a2), den)
    }
}

impl Div for &RatQ {
    type Output = RatQ;

    fn div(self, rhs: &RatQ) -> RatQ {
        assert!(!rhs.is_zero(), "division by zero");
        self * &rhs.inverse().expect("nonzero divisor")
    }
}

impl Neg for &RatQ {
    type Output = RatQ;

    fn neg(self) -> RatQ {
        RatQ { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatQ {
            type Output = RatQ;
            fn $method(self, rhs: RatQ) -> RatQ {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatQ> for RatQ {
            type Output = RatQ;
            fn $method(self, rhs: &RatQ) -> RatQ {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatQ> for &RatQ {
            type Output = RatQ;
            fn $method(self, rhs: RatQ) -> RatQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        -&self
    }
}

impl Mul<&LaurentPoly> for &RatQ {
    type Output = RatQ;

    fn mul(self, rhs: &LaurentPoly) -> RatQ {
        RatQ::new(&self.num * rhs, self.den.clone())
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.term_count() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        write!(f, "{num} / ({})", self.den)
    }
}
