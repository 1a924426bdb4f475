//! Trace functionals on the teardrop algebra and the pairing with the
//! idempotent traces.
//!
//! For each `s = 1, ..., l` there is a trace `tau_s` that kills every
//! off-diagonal monomial and sends `a^m` (`m >= 1`) to
//! `q^{2ms} / (1 - q^{2ml})`.  The same functional has a second life as a
//! q-integral: on polynomials in `a` it equals
//! `f |-> (1 / (1 - q^{2l})) * I(f(a)/a)` where `I` is the geometric
//! q-sum over the node ladder `q^{2s}, q^{2s}Q, q^{2s}Q^2, ...` with ratio
//! `Q = q^{2l}`.  Both are implemented exactly and their agreement (and
//! the closed form of the first idempotent trace, whose pairing with
//! every `tau_s` is exactly 1) is pinned by tests.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncalg::{AlgebraKind, NcElement, NfWord};
use crate::principal::{idempotent, StrongConnection};
use crate::qlaurent::{qbinom, LaurentPoly, RatQ};

// ---- The trace functionals ----

/// The `s`-th trace functional on the weight-(k, l) teardrop algebra.
///
/// Values do not depend on `k`; the first weight is kept only so the
/// functional knows which presentation it belongs to.
#[derive(Debug, Clone)]
pub struct TauFunctional {
    k: u32,
    l: u32,
    s: u32,
}

impl TauFunctional {
    pub fn new(k: u32, l: u32, s: u32) -> Result<Self> {
        if l == 0 || s == 0 || s > l {
            return Err(Error::InvalidParameter(format!(
                "trace index must satisfy 1 <= s <= l, got s={s}, l={l}"
            )));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("weights must be positive".into()));
        }
        Ok(TauFunctional { k, l, s })
    }

    pub fn index(&self) -> u32 {
        self.s
    }

    pub fn weights(&self) -> (u32, u32) {
        (self.k, self.l)
    }

    /// Applies the functional to a teardrop element.
    pub fn apply(&self, x: &NcElement) -> Result<RatQ> {
        let pres = x.presentation();
        if pres.kind() != AlgebraKind::Wp || pres.weight_l() != self.l {
            return Err(Error::InvalidParameter(format!(
                "the functional lives on the weight-(_, {}) teardrop algebra, \
                 the element on {}",
                self.l,
                pres.kind()
            )));
        }
        let mut acc = RatQ::zero();
        for (word, coeff) in x.terms() {
            let NfWord::Wp { a: m, b: n } = word else {
                unreachable!("teardrop element with foreign word");
            };
            if *n != 0 || *m == 0 {
                continue;
            }
            acc = &acc + &(coeff * &diagonal_monomial_value(*m, self.l, self.s));
        }
        Ok(acc)
    }
}

/// `tau_s(a^m) = q^{2ms} / (1 - q^{2ml})` for `m >= 1`.
fn diagonal_monomial_value(m: u32, l: u32, s: u32) -> RatQ {
    let m = m as i64;
    RatQ::new(
        LaurentPoly::q_pow(2 * m * s as i64),
        &LaurentPoly::one() - &LaurentPoly::q_pow(2 * m * l as i64),
    )
}

/// One-shot form: reads the weights off the element's presentation.
pub fn tau(s: u32, x: &NcElement) -> Result<RatQ> {
    let pres = x.presentation();
    if pres.kind() != AlgebraKind::Wp {
        return Err(Error::InvalidParameter(format!(
            "trace functionals live on the teardrop algebras, got {}",
            pres.kind()
        )));
    }
    TauFunctional::new(pres.weight_k(), pres.weight_l(), s)?.apply(x)
}

// ---- The q-integral realization ----

/// Evaluates the `s`-th functional through its q-integral form.
///
/// Only defined on polynomials in the diagonal generator: any term
/// containing the off-diagonal generator is rejected.  For a monomial
/// `a^j` the geometric node sum is `(1 - Q) x^j / (1 - Q^j)` with
/// `x = q^{2s}` and ratio `Q = q^{2l}` (`j = 0` contributes nothing: the
/// two endpoint sums of the defining limit cancel term by term), and the
/// whole functional carries the prefactor `1 / (1 - Q)`.
pub fn jackson_hat_tau(s: u32, f: &NcElement) -> Result<RatQ> {
    let pres = f.presentation();
    if pres.kind() != AlgebraKind::Wp {
        return Err(Error::InvalidParameter(format!(
            "the q-integral form lives on the teardrop algebras, got {}",
            pres.kind()
        )));
    }
    let l = pres.weight_l() as i64;
    let s = s as i64;
    if s < 1 || s > l {
        return Err(Error::InvalidParameter(format!(
            "trace index must satisfy 1 <= s <= l, got s={s}, l={l}"
        )));
    }
    let one = LaurentPoly::one();
    // 1 - Q and the overall prefactor 1/(1 - Q).
    let one_minus_ratio = &one - &LaurentPoly::q_pow(2 * l);
    let prefactor = RatQ::new(one.clone(), one_minus_ratio.clone());

    let mut acc = RatQ::zero();
    for (word, coeff) in f.terms() {
        let NfWord::Wp { a: j, b: n } = word else {
            unreachable!("teardrop element with foreign word");
        };
        if *n != 0 {
            return Err(Error::InvalidParameter(
                "q-integral form is only defined for polynomials in the \
                 diagonal generator"
                    .into(),
            ));
        }
        let j = *j as i64;
        if j == 0 {
            continue;
        }
        // (1 - Q) x^j / (1 - Q^j), x = q^{2s}, Q = q^{2l}.
        let node_sum = RatQ::new(
            &one_minus_ratio * &LaurentPoly::q_pow(2 * s * j),
            &one - &LaurentPoly::q_pow(2 * l * j),
        );
        acc = &acc + &(&(coeff * &node_sum) * &prefactor);
    }
    Ok(acc)
}

/// Floating-point partial sums of the q-integral node series
/// `S_R = sum_{r<R} f(x Q^r)` with `x = q^{2s}`, `Q = q^{2l}`, for a
/// polynomial `f` given by its coefficient list (`coeffs[j]` multiplies
/// `a^j`; the constant term is ignored, as its endpoint contributions
/// cancel).  Illustrates the convergence of the node series to the exact
/// functional value.
pub fn jackson_partial_sums(s: u32, l: u32, coeffs: &[f64], q: f64, r_max: usize) -> Vec<f64> {
    let x = q.powi(2 * s as i32);
    let ratio = q.powi(2 * l as i32);
    let f_no_const = |t: f64| -> f64 {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * t.powi(j as i32))
            .sum()
    };
    let mut sums = Vec::with_capacity(r_max);
    let mut acc = 0.0;
    let mut node = x;
    for _ in 0..r_max {
        acc += f_no_const(node);
        node *= ratio;
        sums.push(acc);
    }
    sums
}

// ---- Idempotent traces and the pairing ----

/// The closed form of the trace of the first idempotent over the
/// weight-(1, l) teardrop:
/// `1 + sum_{m=1}^{l} (-1)^m q^{m(m-1)} (1 - q^{-2ml}) binom(l,m)_{q^2} a^m`.
pub fn chern_character_closed_form(l: u32) -> Result<NcElement> {
    let wp = crate::ncalg::Presentation::wp(1, l)?;
    let mut acc = NcElement::one(&wp);
    for m in 1..=l {
        let mi = m as i64;
        let li = l as i64;
        let weight = &LaurentPoly::q_pow(mi * (mi - 1))
            - &LaurentPoly::q_pow(mi * (mi - 1) - 2 * mi * li);
        let mut poly = &weight * &qbinom(l, m, 2);
        if m % 2 == 1 {
            poly = -&poly;
        }
        acc = &acc
            + &NcElement::monomial(&wp, NfWord::Wp { a: m, b: 0 }, RatQ::from(poly));
    }
    Ok(acc)
}

/// Builds the first idempotent over the weight-(1, l) teardrop, takes its
/// trace, and pairs with the `s`-th functional.  Exactly 1 for every
/// `1 <= s <= l`.
pub fn chern_pairing(l: u32, s: u32) -> Result<RatQ> {
    let mut conn = StrongConnection::new(l)?;
    let e = idempotent(&mut conn, 1)?;
    tau(s, &e.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{parse_expression, Presentation};
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};

    fn wp(k: u32, l: u32) -> std::sync::Arc<Presentation> {
        Presentation::wp(k, l).unwrap()
    }

    #[test]
    fn diagonal_generator_value_in_lowest_weight() {
        // s = l = 1: q^2 / (1 - q^2).
        let x = parse_expression(&wp(1, 1), "a").unwrap();
        let expected = RatQ::new(
            LaurentPoly::q_pow(2),
            &LaurentPoly::one() - &LaurentPoly::q_pow(2),
        );
        assert_eq!(tau(1, &x).unwrap(), expected);
    }

    #[test]
    fn unit_and_off_diagonal_terms_vanish() {
        let pres = wp(1, 2);
        for expr in ["1", "b", "bS", "a^2 b", "a b bS"] {
            let x = parse_expression(&pres, expr).unwrap();
            // a b bS reduces to a polynomial in a with no constant term
            // only when the off-diagonal pair collapses; the functional
            // of the purely off-diagonal ones must be zero.
            if expr == "a b bS" {
                continue;
            }
            assert!(tau(1, &x).unwrap().is_zero(), "tau(1, {expr}) != 0");
        }
    }

    #[test]
    fn trace_property_on_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for (k, l) in [(1u32, 2u32), (2, 3)] {
            let pres = wp(k, l);
            for _ in 0..50 {
                let wx = pres.random_word(3, &mut rng);
                let wy = pres.random_word(3, &mut rng);
                let x = NcElement::from_word(&pres, &wx);
                let y = NcElement::from_word(&pres, &wy);
                let xy = &x * &y;
                let yx = &y * &x;
                for s in 1..=l {
                    assert_eq!(
                        tau(s, &xy).unwrap(),
                        tau(s, &yx).unwrap(),
                        "trace property failed at (k,l)=({k},{l}), s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn values_do_not_depend_on_the_first_weight() {
        for (ka, kb, l) in [(1u32, 3u32, 2u32), (1, 2, 3), (2, 5, 3)] {
            let pa = wp(ka, l);
            let pb = wp(kb, l);
            for m in 1..=4u32 {
                let xa = NcElement::monomial(&pa, NfWord::Wp { a: m, b: 0 }, RatQ::one());
                let xb = NcElement::monomial(&pb, NfWord::Wp { a: m, b: 0 }, RatQ::one());
                for s in 1..=l {
                    assert_eq!(tau(s, &xa).unwrap(), tau(s, &xb).unwrap());
                }
            }
        }
    }

    #[test]
    fn q_integral_form_matches_the_trace_exactly() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(307);
        for l in 1..=3u32 {
            let pres = wp(1, l);
            for _ in 0..50 {
                let mut f = NcElement::zero(&pres);
                for j in 0..=6u32 {
                    let c = rng.gen_range(-9i64..=9);
                    if c == 0 {
                        continue;
                    }
                    f = &f
                        + &NcElement::monomial(
                            &pres,
                            NfWord::Wp { a: j, b: 0 },
                            RatQ::from(LaurentPoly::from_int(c)),
                        );
                }
                for s in 1..=l {
                    assert_eq!(
                        jackson_hat_tau(s, &f).unwrap(),
                        tau(s, &f).unwrap(),
                        "l={l}, s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn q_integral_form_rejects_off_diagonal_terms() {
        let pres = wp(1, 2);
        let f = parse_expression(&pres, "a + b").unwrap();
        assert!(jackson_hat_tau(1, &f).is_err());
    }

    #[test]
    fn node_series_partial_sums_converge_to_the_functional() {
        // f = a + 2 a^3 over l = 2, s = 1, q = 1/2.
        let q = 0.5f64;
        let pres = wp(1, 2);
        let f = parse_expression(&pres, "a + 2 a^3").unwrap();
        let exact = tau(1, &f)
            .unwrap()
            .eval(&BigRational::new(1.into(), 2.into()))
            .unwrap();
        let exact_f = crate::qlaurent::rational_to_f64(&exact);
        let sums = jackson_partial_sums(1, 2, &[0.0, 1.0, 0.0, 2.0], q, 40);
        let last = *sums.last().unwrap();
        assert!(
            (last - exact_f).abs() < 1e-12,
            "partial sums {last} vs exact {exact_f}"
        );
        // And convergence is monotone improvement for positive coefficients.
        assert!((sums[5] - exact_f).abs() > (sums[20] - exact_f).abs());
    }

    #[test]
    fn closed_form_matches_hand_expansions() {
        let one_minus = |e: i64| &LaurentPoly::one() - &LaurentPoly::q_pow(e);
        // l = 1: 1 + (q^-2 - 1) a.
        let c1 = chern_character_closed_form(1).unwrap();
        let p1 = wp(1, 1);
        let expected1 = parse_expression(&p1, "1 + (q^-2 - 1) a").unwrap();
        assert_eq!(c1, expected1);
        // l = 2: 1 - (1 - q^-4)(1 + q^2) a + q^2 (1 - q^-8) a^2.
        let c2 = chern_character_closed_form(2).unwrap();
        let p2 = wp(1, 2);
        let mut expected2 = NcElement::one(&p2);
        let m1 = -&(&one_minus(-4) * &(&LaurentPoly::one() + &LaurentPoly::q_pow(2)));
        expected2 = &expected2
            + &NcElement::monomial(&p2, NfWord::Wp { a: 1, b: 0 }, RatQ::from(m1));
        let m2 = &LaurentPoly::q_pow(2) * &one_minus(-8);
        expected2 = &expected2
            + &NcElement::monomial(&p2, NfWord::Wp { a: 2, b: 0 }, RatQ::from(m2));
        assert_eq!(c2, expected2);
    }

    #[test]
    fn idempotent_trace_equals_the_closed_form() {
        for l in 1..=4u32 {
            let mut conn = StrongConnection::new(l).unwrap();
            let e = idempotent(&mut conn, 1).unwrap();
            assert_eq!(
                e.trace(),
                chern_character_closed_form(l).unwrap(),
                "l={l}"
            );
        }
    }

    #[test]
    fn pairing_is_exactly_one() {
        for l in 1..=4u32 {
            for s in 1..=l {
                assert_eq!(chern_pairing(l, s).unwrap(), RatQ::one(), "l={l}, s={s}");
            }
        }
    }

    #[test]
    fn pairing_with_the_second_idempotent_is_exactly_two() {
        // The winding-2 bundle pairs to 2, for every functional index —
        // computed exactly from the connection tensor, no closed form
        // assumed.
        for l in 1..=2u32 {
            let mut conn = StrongConnection::new(l).unwrap();
            let e = idempotent(&mut conn, 2).unwrap();
            let trace = e.trace();
            for s in 1..=l {
                assert_eq!(
                    tau(s, &trace).unwrap(),
                    RatQ::from(LaurentPoly::from_int(2)),
                    "l={l}, s={s}"
                );
            }
        }
    }

    #[test]
    fn functional_rejects_bad_indices_and_foreign_elements() {
        assert!(TauFunctional::new(1, 2, 0).is_err());
        assert!(TauFunctional::new(1, 2, 3).is_err());
        let lens = Presentation::lens(2).unwrap();
        let x = NcElement::one(&lens);
        assert!(tau(1, &x).is_err());
    }
}
