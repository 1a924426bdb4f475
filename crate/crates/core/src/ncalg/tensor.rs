//! Elements of the algebraic tensor square `A (x) A`, used for strong
//! connections and the canonical Galois map.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::ncalg::element::{nf_word_string, NcElement};
use crate::ncalg::presentation::Presentation;
use crate::ncalg::word::NfWord;
use crate::qlaurent::RatQ;

/// One summand `coeff * (left (x) right)` with both legs reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorTerm {
    pub coeff: RatQ,
    pub left: NfWord,
    pub right: NfWord,
}

/// A finite sum of elementary tensors over one presentation, kept sorted
/// by leg pair with duplicates merged, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    pres: Arc<Presentation>,
    terms: Vec<TensorTerm>,
}

impl TensorElement {
    /// `1 (x) 1`.
    pub fn unit(pres: &Arc<Presentation>) -> Self {
        Self::from_terms(
            pres,
            vec![TensorTerm {
                coeff: RatQ::one(),
                left: pres.unit_nf(),
                right: pres.unit_nf(),
            }],
        )
    }

    /// Builds a canonical tensor from raw terms (sorts, merges, drops
    /// zeros).
    pub fn from_terms(pres: &Arc<Presentation>, mut terms: Vec<TensorTerm>) -> Self {
        terms.sort_by_key(|t| (t.left, t.right));
        let mut merged: Vec<TensorTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.left == t.left && last.right == t.right => {
                    last.coeff = &last.coeff + &t.coeff;
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push(t),
            }
        }
        TensorElement { pres: Arc::clone(pres), terms: merged }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &[TensorTerm] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds two tensors.
    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert!(*self.pres == *other.pres, "mixed presentations");
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(&self.pres, terms)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatQ) -> TensorElement {
        if c.is_zero() {
            return TensorElement { pres: Arc::clone(&self.pres), terms: Vec::new() };
        }
        TensorElement {
            pres: Arc::clone(&self.pres),
            terms: self
                .terms
                .iter()
                .map(|t| TensorTerm { coeff: &t.coeff * c, ..t.clone() })
                .collect(),
        }
    }

    /// `lw . self . rw` acting on the legs: each left leg is multiplied by
    /// `lw` on the left and each right leg by `rw` on the right, with all
    /// products reduced to normal form.
    pub fn sandwich(&self, lw: &NcElement, rw: &NcElement) -> TensorElement {
        let mut out = Vec::new();
        for t in &self.terms {
            let left = lw * &NcElement::monomial(&self.pres, t.left, RatQ::one());
            let right = &NcElement::monomial(&self.pres, t.right, RatQ::one()) * rw;
            for (wl, cl) in left.terms() {
                for (wr, cr) in right.terms() {
                    out.push(TensorTerm {
                        coeff: &(&t.coeff * cl) * cr,
                        left: *wl,
                        right: *wr,
                    });
                }
            }
        }
        Self::from_terms(&self.pres, out)
    }

    /// The multiplication map `x (x) y -> x y`.
    pub fn multiply_legs(&self) -> NcElement {
        let mut acc = NcElement::zero(&self.pres);
        for t in &self.terms {
            let prod = &NcElement::monomial(&self.pres, t.left, t.coeff.clone())
                * &NcElement::monomial(&self.pres, t.right, RatQ::one());
            acc = &acc + &prod;
        }
        acc
    }

    /// Applies maps to the legs, landing in a possibly different
    /// presentation; used to push tensors through algebra embeddings.
    pub fn map_legs(
        &self,
        dst: &Arc<Presentation>,
        mut f: impl FnMut(&NfWord) -> NcElement,
        mut g: impl FnMut(&NfWord) -> NcElement,
    ) -> TensorElement {
        let mut out = Vec::new();
        for t in &self.terms {
            let left = f(&t.left);
            let right = g(&t.right);
            for (wl, cl) in left.terms() {
                for (wr, cr) in right.terms() {
                    out.push(TensorTerm {
                        coeff: &(&t.coeff * cl) * cr,
                        left: *wl,
                        right: *wr,
                    });
                }
            }
        }
        Self::from_terms(dst, out)
    }

    /// Degrees of the left legs (one entry per term).
    pub fn left_degrees(&self) -> Vec<i64> {
        self.terms.iter().map(|t| self.pres.nf_degree(&t.left)).collect()
    }

    /// Degrees of the right legs.
    pub fn right_degrees(&self) -> Vec<i64> {
        self.terms.iter().map(|t| self.pres.nf_degree(&t.right)).collect()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                format!(
                    "{} * {} (x) {}",
                    t.coeff,
                    nf_word_string(&self.pres, &t.left),
                    nf_word_string(&self.pres, &t.right)
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
