//! Gaussian q-binomial coefficients.
//!
//! The coefficients are defined through the product expansion
//!
//! ```text
//! prod_{m=1}^{l} (1 + x^{m-1} t)  =  sum_{m=0}^{l} x^{m(m-1)/2} C(l, m)_x t^m
//! ```
//!
//! with `x = q^e`.  Expanding the product one linear factor at a time and
//! dividing the `t^m` coefficient by the monomial `x^{m(m-1)/2}` yields
//! `C(l, m)_x` as a Laurent polynomial in `q`; no recurrence or division of
//! general polynomials is involved.

use num_traits::{One, Zero};

use crate::qlaurent::LaurentPoly;

/// Coefficients of `prod_i (1 + c_i t)` as a dense vector indexed by the
/// power of `t`.
pub(crate) fn expand_linear_product(factors: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let mut coeffs = vec![LaurentPoly::one()];
    for c in factors {
        coeffs.push(LaurentPoly::zero());
        // Multiply the accumulated polynomial by (1 + c t), highest power
        // first so each coefficient is updated before it is consumed.
        for i in (1..coeffs.len()).rev() {
            let bumped = &coeffs[i - 1] * c;
            coeffs[i] = &coeffs[i] + &bumped;
        }
    }
    coeffs
}

/// The q-binomial coefficient `C(l, m)_x` at `x = q^e`, as an exact
/// Laurent polynomial in `q`.
///
/// # Arguments
///
/// * `l`, `m` - the binomial indices, `0 <= m <= l`;
/// * `e` - the nonzero exponent defining `x = q^e` (negative allowed).
///
/// Panics if `m > l` or `e == 0`.
pub fn qbinom(l: u32, m: u32, e: i64) -> LaurentPoly {
    assert!(m <= l, "qbinom index m = {m} out of range 0..={l}");
    assert!(e != 0, "qbinom base exponent must be nonzero");
    let factors: Vec<LaurentPoly> =
        (1..=l as i64).map(|j| LaurentPoly::q_pow(e * (j - 1))).collect();
    let expanded = expand_linear_product(&factors);
    // t^m coefficient = x^{m(m-1)/2} C(l, m)_x.
    let m_i = m as i64;
    expanded[m as usize].shift(-e * m_i * (m_i - 1) / 2)
}
