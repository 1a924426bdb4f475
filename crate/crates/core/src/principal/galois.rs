//! Bounded-degree decision procedure for the translation-map condition
//! of the weighted circle coaction: is `1 (x) u` in the image of the
//! canonical map on the degree-filtered tensor square?
//!
//! The canonical map sends `x (x) y` to `(x y) (x) u^{deg y}`, so
//! membership of `1 (x) u` reduces to an exact linear question: is `1` a
//! combination of the reduced products `x y` with `deg x = -1`,
//! `deg y = +1`, and total length at most `D`?  (Words are homogeneous,
//! so columns of other degrees can never contribute to the degree-zero
//! element `1`.)  The verdict always comes from elimination over the
//! fraction field; specializations of `q` at random rational points are
//! recorded as a consistency screen.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::Result;
use crate::ncalg::{NcElement, NfWord, Presentation, TensorElement, TensorTerm};
use crate::principal::connection::StrongConnection;
use crate::principal::linsolve::solve_in_span;
use crate::qlaurent::RatQ;

/// Outcome of the membership test.
pub enum GaloisVerdict {
    /// `1 (x) u` is reached; the witness maps to it exactly.
    Member { witness: TensorElement },
    /// Not in the span at this length bound (says nothing about larger
    /// bounds).
    NotMemberUpTo { max_len: u32 },
}

/// Full record of one membership decision.
pub struct GaloisCertificate {
    pub k: u32,
    pub l: u32,
    pub max_len: u32,
    pub verdict: GaloisVerdict,
    /// Number of candidate pairs `(x, y)` examined.
    pub candidate_pairs: usize,
    /// `(q value, member?)` for each random rational specialization.
    pub screening: Vec<(String, bool)>,
    /// All specializations agreed with the exact verdict.
    pub screening_agrees: bool,
}

impl GaloisCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, GaloisVerdict::Member { .. })
    }
}

/// Decides membership of `1 (x) u` at total word length `max_len` for the
/// weight-(k, l) coaction, with `screen_points` random rational
/// specializations recorded alongside the exact verdict.
pub fn galois_membership(
    k: u32,
    l: u32,
    max_len: u32,
    rng: &mut dyn rand::RngCore,
) -> Result<GaloisCertificate> {
    let pres = Presentation::su2(k, l)?;

    // Candidate legs: reduced words of coaction degree -1 (left) and +1
    // (right), paired within the length budget.
    let words = pres.enumerate_nf_words(max_len.saturating_sub(1));
    let lefts: Vec<&NfWord> = words.iter().filter(|w| pres.nf_degree(w) == -1).collect();
    let rights: Vec<&NfWord> = words.iter().filter(|w| pres.nf_degree(w) == 1).collect();

    let mut pairs: Vec<(NfWord, NfWord)> = Vec::new();
    let mut products: Vec<NcElement> = Vec::new();
    for x in &lefts {
        for y in &rights {
            if x.len() + y.len() > max_len {
                continue;
            }
            let prod = &NcElement::monomial(&pres, **x, RatQ::one())
                * &NcElement::monomial(&pres, **y, RatQ::one());
            pairs.push((**x, **y));
            products.push(prod);
        }
    }

    // Rows: every reduced word appearing in any product, plus the unit.
    let mut row_of: BTreeMap<NfWord, usize> = BTreeMap::new();
    row_of.insert(pres.unit_nf(), 0);
    for p in &products {
        for (w, _) in p.terms() {
            let next = row_of.len();
            row_of.entry(*w).or_insert(next);
        }
    }
    let rows = row_of.len();

    let columns: Vec<Vec<RatQ>> = products
        .iter()
        .map(|p| {
            let mut col = vec![RatQ::zero(); rows];
            for (w, c) in p.terms() {
                col[row_of[w]] = c.clone();
            }
            col
        })
        .collect();
    let mut rhs = vec![RatQ::zero(); rows];
    rhs[0] = RatQ::one();

    // Exact verdict over the fraction field.
    let solution = solve_in_span(&columns, &rhs);

    // Screening: the same system with q specialized at random rationals
    // in (0, 1).  All candidate coefficients are Laurent polynomials, so
    // evaluation is exact.
    let mut screening = Vec::new();
    for _ in 0..3 {
        let den = rng.gen_range(5u32..40);
        let num = rng.gen_range(1..den);
        let q0 = BigRational::new(BigInt::from(num), BigInt::from(den));
        let cols_at: Vec<Vec<BigRational>> = columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|c| c.eval(&q0).expect("polynomial coefficients"))
                    .collect()
            })
            .collect();
        let mut rhs_at = vec![BigRational::zero(); rows];
        rhs_at[0] = BigRational::one();
        let member_at = solve_in_span(&cols_at, &rhs_at).is_some();
        screening.push((format!("{num}/{den}"), member_at));
    }
    let exact_member = solution.is_some();
    let screening_agrees = screening.iter().all(|(_, m)| *m == exact_member);

    let verdict = match solution {
        Some(coeffs) => {
            let witness = TensorElement::from_terms(
                &pres,
                coeffs
                    .into_iter()
                    .zip(&pairs)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, (x, y))| TensorTerm { coeff: c, left: *x, right: *y })
                    .collect(),
            );
            debug_assert!(witness.multiply_legs().is_one());
            GaloisVerdict::Member { witness }
        }
        None => GaloisVerdict::NotMemberUpTo { max_len },
    };

    Ok(GaloisCertificate {
        k,
        l,
        max_len,
        verdict,
        candidate_pairs: pairs.len(),
        screening,
        screening_agrees,
    })
}

/// Witness data for almost-freeness of the weight-(1, l) coaction at
/// winding number `m`.
pub struct AlmostFreeCheck {
    /// Image of `omega(m)` with both legs pushed along the lens-space
    /// embedding into the circle-graded algebra.
    pub witness: TensorElement,
    /// Expected right-leg degree `m * l`.
    pub target_degree: i64,
    pub unit_product: bool,
    pub degrees_ok: bool,
    /// Largest total reduced length of a tensor term.
    pub max_term_len: u32,
    /// `max_term_len <= max_len` for the supplied budget.
    pub within_bound: bool,
}

impl AlmostFreeCheck {
    pub fn holds(&self) -> bool {
        self.unit_product && self.degrees_ok && self.within_bound
    }
}

/// Pushes the connection tensor `omega(m)` through the lens-space
/// embedding and verifies that the lifted canonical map sends it to
/// exactly `1 (x) u^{ml}`: legs multiply to 1 and every right leg is
/// homogeneous of degree `m*l`.  `max_len` bounds the total reduced
/// length of each witness term.
pub fn almost_free_witness(l: u32, m: u32, max_len: u32) -> Result<AlmostFreeCheck> {
    let map = crate::ncalg::EmbedMap::iota(l)?;
    let lens = Arc::clone(map.source());
    let su2 = Arc::clone(map.target());

    let mut conn = StrongConnection::new(l)?;
    let omega = conn.omega(m as i64);
    let push = |w: &NfWord| map.apply(&NcElement::monomial(&lens, *w, RatQ::one()));
    let witness = omega.map_legs(&su2, push, push);

    let target_degree = (m as i64) * (l as i64);
    let unit_product = witness.multiply_legs().is_one();
    let degrees_ok = witness
        .right_degrees()
        .iter()
        .all(|&d| d == target_degree)
        && witness.left_degrees().iter().all(|&d| d == -target_degree);
    let max_term_len = witness
        .terms()
        .iter()
        .map(|t| t.left.len() + t.right.len())
        .max()
        .unwrap_or(0);
    Ok(AlmostFreeCheck {
        witness,
        target_degree,
        unit_product,
        degrees_ok,
        max_term_len,
        within_bound: max_term_len <= max_len,
    })
}
