//! Elements of a presented algebra, stored in normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::ncalg::presentation::{Presentation, ReductionStrategy};
use crate::ncalg::word::{GenId, NfWord, Word};
use crate::qlaurent::RatQ;

/// A finite linear combination of reduced words with coefficients in the
/// field of rational functions of `q`.
///
/// Two elements are equal iff they live over equal presentations and have
/// identical term maps; reduction to normal form makes this decidable.
#[derive(Clone, Debug)]
pub struct NcElement {
    pres: Arc<Presentation>,
    terms: BTreeMap<NfWord, RatQ>,
}

impl PartialEq for NcElement {
    fn eq(&self, other: &Self) -> bool {
        *self.pres == *other.pres && self.terms == other.terms
    }
}

impl Eq for NcElement {}

impl NcElement {
    /// The zero element.
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        NcElement { pres: Arc::clone(pres), terms: BTreeMap::new() }
    }

    /// The unit.
    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::monomial(pres, pres.unit_nf(), RatQ::one())
    }

    /// A single reduced word with a coefficient.
    pub fn monomial(pres: &Arc<Presentation>, nf: NfWord, coeff: RatQ) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(nf, coeff);
        }
        NcElement { pres: Arc::clone(pres), terms }
    }

    /// A single generator.
    pub fn generator(pres: &Arc<Presentation>, g: GenId) -> Self {
        Self::from_word(pres, &Word::letter(g))
    }

    /// The normal form of a free word.
    pub fn from_word(pres: &Arc<Presentation>, w: &Word) -> Self {
        NcElement { pres: Arc::clone(pres), terms: pres.normal_form_word(w) }
    }

    /// The normal form of a linear combination of free words.
    pub fn from_raw_terms(
        pres: &Arc<Presentation>,
        items: Vec<(RatQ, Word)>,
    ) -> Self {
        NcElement {
            pres: Arc::clone(pres),
            terms: pres.reduce(items, &mut ReductionStrategy::Leftmost),
        }
    }

    /// The owning presentation.
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    /// Term map in normal form.
    pub fn terms(&self) -> impl Iterator<Item = (&NfWord, &RatQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the element is exactly the unit.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&self.pres.unit_nf())
                .is_some_and(|c| c.is_one())
    }

    /// Coefficient of a reduced word (zero if absent).
    pub fn coeff_of(&self, nf: &NfWord) -> RatQ {
        self.terms.get(nf).cloned().unwrap_or_else(RatQ::zero)
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> RatQ {
        self.coeff_of(&self.pres.unit_nf())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return Self::zero(&self.pres);
        }
        NcElement {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().map(|(w, k)| (*w, k * c)).collect(),
        }
    }

    /// The *-involution: reverses and stars every word, conjugates
    /// coefficients (trivially, as they are rational in `q`).
    pub fn star(&self) -> Self {
        let items = self
            .terms
            .iter()
            .map(|(nf, c)| (c.clone(), self.pres.star_word(&self.pres.nf_to_word(nf))))
            .collect();
        Self::from_raw_terms(&self.pres, items)
    }

    /// `self^n` for nonnegative `n`.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.pres);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// The common degree of all terms, if the element is homogeneous
    /// under the circle coaction (`None` for zero or mixed elements).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|nf| self.pres.nf_degree(nf));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// True when every term has degree zero.
    pub fn is_coinvariant(&self) -> bool {
        self.terms.keys().all(|nf| self.pres.nf_degree(nf) == 0)
    }

    fn assert_same_presentation(&self, other: &Self) {
        assert!(
            *self.pres == *other.pres,
            "mixed presentations: {} vs {}",
            self.pres,
            other.pres
        );
    }
}

// ---- Ring operations ----

impl Add for &NcElement {
    type Output = NcElement;

    fn add(self, rhs: &NcElement) -> NcElement {
        self.assert_same_presentation(rhs);
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            let entry = terms.entry(*w).or_insert_with(RatQ::zero);
            *entry = &*entry + c;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        NcElement { pres: Arc::clone(&self.pres), terms }
    }
}

impl Sub for &NcElement {
    type Output = NcElement;

    fn sub(self, rhs: &NcElement) -> NcElement {
        self + &-rhs
    }
}

impl Neg for &NcElement {
    type Output = NcElement;

    fn neg(self) -> NcElement {
        NcElement {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl Mul for &NcElement {
    type Output = NcElement;

    fn mul(self, rhs: &NcElement) -> NcElement {
        self.assert_same_presentation(rhs);
        let mut items = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (w1, c1) in &self.terms {
            let left = self.pres.nf_to_word(w1);
            for (w2, c2) in &rhs.terms {
                items.push((c1 * c2, left.concat(&self.pres.nf_to_word(w2))));
            }
        }
        NcElement::from_raw_terms(&self.pres, items)
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for NcElement {
            type Output = NcElement;
            fn $method(self, rhs: NcElement) -> NcElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&NcElement> for NcElement {
            type Output = NcElement;
            fn $method(self, rhs: &NcElement) -> NcElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<NcElement> for &NcElement {
            type Output = NcElement;
            fn $method(self, rhs: NcElement) -> NcElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for NcElement {
    type Output = NcElement;
    fn neg(self) -> NcElement {
        -&self
    }
}

// ---- Display ----

/// Renders a reduced word with the given separator between factors
/// (empty word -> "1").
fn nf_word_string_sep(pres: &Presentation, nf: &NfWord, sep: &str) -> String {
    let word = pres.nf_to_word(nf);
    if word.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<(GenId, u32)> = Vec::new();
    for &g in word.letters() {
        match parts.last_mut() {
            Some((last, n)) if *last == g => *n += 1,
            _ => parts.push((g, 1)),
        }
    }
    parts
        .iter()
        .map(|(g, n)| {
            if *n == 1 {
                pres.gen_name(*g).to_string()
            } else {
                format!("{}^{n}", pres.gen_name(*g))
            }
        })
        .collect::<Vec<_>>()
        .join(sep)
}

/// Renders a reduced word as `gen^e*gen^e*...` (empty word -> "1").
pub(crate) fn nf_word_string(pres: &Presentation, nf: &NfWord) -> String {
    nf_word_string_sep(pres, nf, "*")
}

/// Splits a coefficient into a leading sign and its positive part, so
/// sums can be joined with " + " / " - ".
fn sign_split(c: &RatQ) -> (bool, RatQ) {
    let lowest = c
        .numerator()
        .terms()
        .next()
        .map(|(_, v)| v.is_negative())
        .unwrap_or(false);
    if lowest {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

impl NcElement {
    fn render(&self, word_sep: &str, glue: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (nf, coeff)) in self.terms.iter().enumerate() {
            let (neg, pos) = sign_split(coeff);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = nf_word_string_sep(&self.pres, nf, word_sep);
            let coeff_str = if pos.is_polynomial() && pos.numerator().is_monomial() {
                pos.to_string()
            } else {
                format!("({pos})")
            };
            if nf.is_unit() {
                out.push_str(&coeff_str);
            } else if pos.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{coeff_str}{glue}{word}"));
            }
        }
        out
    }

    /// Renders the element so [`crate::ncalg::parse_expression`] reads it
    /// back verbatim: factors are juxtaposed with spaces, so no `*` ever
    /// touches a generator name (where it would mean the adjoint).
    pub fn input_form(&self) -> String {
        self.render(" ", " ")
    }
}

impl fmt::Display for NcElement {
    /// Canonical rendering: `coeff * word` terms joined sign-aware, e.g.
    /// `q^2 * a - q^2 * a^2` or `1 - q^-2 * beta*betaS`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("*", " * "))
    }
}
