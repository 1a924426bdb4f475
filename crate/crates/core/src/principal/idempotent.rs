//! Idempotent matrices presenting the line bundles associated with the
//! circle bundle: assembled from the connection tensors, with entries
//! living in the weight-(1, l) teardrop algebra.

use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ncalg::{wp_from_lens, NcElement, Presentation};
use crate::principal::connection::StrongConnection;
use crate::qlaurent::RatQ;

/// A square matrix of exact algebra elements with `E * E = E`.
pub struct IdempotentMatrix {
    wp: Arc<Presentation>,
    n: i64,
    entries: Vec<Vec<NcElement>>,
}

/// Builds `E[n]` from the connection over `Lens(l)`: writing
/// `omega(n) = sum_i k_i * (x_i (x) y_i)`, the entry at `(i, j)` is
/// `y_i * (k_j x_j)`, which is a coinvariant of the lens algebra and is
/// converted to the teardrop of weight `(1, l)`.
pub fn idempotent(conn: &mut StrongConnection, n: i64) -> Result<IdempotentMatrix> {
    let omega = conn.omega(n);
    let lens = Arc::clone(conn.presentation());
    let terms = omega.terms();
    let size = terms.len();

    // Left factors with coefficients absorbed; right factors bare.
    let lefts: Vec<NcElement> = terms
        .iter()
        .map(|t| NcElement::monomial(&lens, t.left, t.coeff.clone()))
        .collect();
    let rights: Vec<NcElement> = terms
        .iter()
        .map(|t| NcElement::monomial(&lens, t.right, RatQ::one()))
        .collect();

    let mut entries = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = Vec::with_capacity(size);
        for j in 0..size {
            let in_lens = &rights[i] * &lefts[j];
            if !in_lens.is_coinvariant() {
                return Err(Error::NotCoinvariant(
                    in_lens.homogeneous_degree().unwrap_or(i64::MAX),
                ));
            }
            row.push(wp_from_lens(&in_lens)?);
        }
        entries.push(row);
    }
    let wp = Arc::clone(
        entries
            .first()
            .and_then(|r| r.first())
            .map(|e| e.presentation())
            .expect("connection tensors are never empty"),
    );
    Ok(IdempotentMatrix { wp, n, entries })
}

impl IdempotentMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// The winding number this matrix was built for.
    pub fn order(&self) -> i64 {
        self.n
    }

    /// The teardrop presentation the entries live in.
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.wp
    }

    pub fn entry(&self, i: usize, j: usize) -> &NcElement {
        &self.entries[i][j]
    }

    /// Exact entrywise check that `E * E = E`.
    pub fn is_idempotent(&self) -> bool {
        let size = self.size();
        for i in 0..size {
            for j in 0..size {
                let mut acc = NcElement::zero(&self.wp);
                for k in 0..size {
                    acc = &acc + &(&self.entries[i][k] * &self.entries[k][j]);
                }
                if acc != self.entries[i][j] {
                    return false;
                }
            }
        }
        true
    }

    /// The sum of the diagonal entries, reduced.
    pub fn trace(&self) -> NcElement {
        let mut acc = NcElement::zero(&self.wp);
        for i in 0..self.size() {
            acc = &acc + &self.entries[i][i];
        }
        acc
    }
}

/// [`IdempotentMatrix::trace`] as a standalone operation.
pub fn trace_idempotent(e: &IdempotentMatrix) -> NcElement {
    e.trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_expression;

    fn build(l: u32, n: i64) -> IdempotentMatrix {
        let mut conn = StrongConnection::new(l).unwrap();
        idempotent(&mut conn, n).unwrap()
    }

    #[test]
    fn zeroth_idempotent_is_the_unit_matrix() {
        let e = build(2, 0);
        assert_eq!(e.size(), 1);
        assert!(e.entry(0, 0).is_one());
        assert!(e.is_idempotent());
    }

    #[test]
    fn weight_one_first_idempotent_matches_hand_computation() {
        let e = build(1, 1);
        assert_eq!(e.size(), 2);
        let pres = Arc::clone(e.presentation());
        let expect = |s: &str| parse_expression(&pres, s).unwrap();
        assert_eq!(*e.entry(0, 0), expect("1 - a"));
        assert_eq!(*e.entry(0, 1), expect("q^-2 b"));
        assert_eq!(*e.entry(1, 0), expect("bS"));
        assert_eq!(*e.entry(1, 1), expect("q^-2 a"));
        assert!(e.is_idempotent());
    }

    #[test]
    fn first_idempotents_square_to_themselves() {
        for l in [1u32, 2, 3] {
            let e = build(l, 1);
            assert_eq!(e.size(), (l + 1) as usize);
            assert!(e.is_idempotent(), "l={l}");
        }
    }

    #[test]
    fn second_idempotents_square_to_themselves() {
        for l in [1u32, 2] {
            let e = build(l, 2);
            assert!(e.is_idempotent(), "l={l}");
        }
    }

    #[test]
    fn negative_winding_idempotent() {
        let e = build(2, -1);
        assert!(e.is_idempotent());
    }

    #[test]
    fn trace_of_weight_one_matches_hand_value() {
        let e = build(1, 1);
        let pres = Arc::clone(e.presentation());
        let expected = parse_expression(&pres, "1 + (q^-2 - 1) a").unwrap();
        assert_eq!(e.trace(), expected);
    }
}
