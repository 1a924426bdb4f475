//! The three finitely presented *-algebras as confluent rewriting
//! systems.
//!
//! Each presentation carries an alphabet of generators (closed under the
//! star), a circle grading, and a list of rewrite rules `lhs -> rhs` with
//! two-letter left-hand sides.  The rules orient the defining relations so
//! that every word reduces to a unique linear combination of canonical
//! shapes:
//!
//! * `SUq2`:    `alpha^p beta^r beta*^s` and `alpha*^p beta^r beta*^s`
//! * `WP(k,l)`: `a^m b^n` and `a^m b*^n`
//! * `Lens(l)`: `c^p d^r d*^s` and `c*^p d^r d*^s`
//!
//! Confluence is checked, not assumed: [`Presentation::confluence_check`]
//! resolves every overlap ambiguity of the rule set both ways and compares
//! the results.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::ncalg::word::{GenId, NfWord, Word};
use crate::qlaurent::{expand_linear_product, LaurentPoly, RatQ};

/// Which of the three algebra families a presentation belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    /// Quantum SU(2), generators `alpha, alpha*, beta, beta*`.
    Su2,
    /// Quantum weighted projective line, generators `a = a*, b, b*`.
    Wp,
    /// Quantum lens space, generators `c, c*, d, d*`.
    Lens,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Su2 => write!(f, "su2"),
            AlgebraKind::Wp => write!(f, "wp"),
            AlgebraKind::Lens => write!(f, "lens"),
        }
    }
}

/// A generator: display name, the id of its star, and its degree under
/// the circle coaction carried by the presentation.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: &'static str,
    pub star: GenId,
    pub degree: i64,
}

/// A rewrite rule `lhs -> sum_i c_i w_i` with a two-letter left side.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Vec<(LaurentPoly, Word)>,
}

/// How the reducer picks the next redex.  Both strategies terminate and,
/// by confluence, produce the same normal form; the random one exists so
/// that tests can exercise that claim.
pub enum ReductionStrategy<'a> {
    /// Always rewrite the leftmost match of the first matching rule.
    Leftmost,
    /// Pick uniformly among all (position, rule) matches.
    Random(&'a mut dyn rand::RngCore),
}

/// Result of resolving all overlap ambiguities of the rule set.
#[derive(Debug)]
pub struct ConfluenceReport {
    /// Number of overlap words examined.
    pub pairs_checked: usize,
    /// Ambiguities whose two resolutions disagree (empty iff confluent).
    pub unresolved: Vec<UnresolvedOverlap>,
}

/// One overlap ambiguity that failed to resolve.
#[derive(Debug)]
pub struct UnresolvedOverlap {
    pub rule_a: usize,
    pub rule_b: usize,
    pub word: Word,
    pub via_a: BTreeMap<NfWord, RatQ>,
    pub via_b: BTreeMap<NfWord, RatQ>,
}

impl ConfluenceReport {
    /// True when every ambiguity resolved.
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }
}

// Generator ids, fixed per family.
pub(crate) mod gens {
    use super::GenId;
    pub const ALPHA: GenId = 0;
    pub const ALPHA_S: GenId = 1;
    pub const BETA: GenId = 2;
    pub const BETA_S: GenId = 3;

    pub const A: GenId = 0;
    pub const B: GenId = 1;
    pub const B_S: GenId = 2;

    pub const C: GenId = 0;
    pub const C_S: GenId = 1;
    pub const D: GenId = 2;
    pub const D_S: GenId = 3;
}

/// A finitely presented *-algebra with a circle grading and a confluent
/// rewriting system.  Shared immutably (`Arc`) by the elements living
/// over it, so concurrent reads are safe.
#[derive(Debug)]
pub struct Presentation {
    kind: AlgebraKind,
    k: u32,
    l: u32,
    generators: Vec<Generator>,
    rules: Vec<RewriteRule>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.k == other.k && self.l == other.l
    }
}

impl Eq for Presentation {}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::Su2 => write!(f, "SUq2({},{})", self.k, self.l),
            AlgebraKind::Wp => write!(f, "WP({},{})", self.k, self.l),
            AlgebraKind::Lens => write!(f, "Lens({})", self.l),
        }
    }
}

fn check_weights(k: u32, l: u32) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidParameter(format!(
            "weights must be positive, got ({k}, {l})"
        )));
    }
    if k.gcd(&l) != 1 {
        return Err(Error::NotCoprime(k, l));
    }
    Ok(())
}

impl Presentation {
    /// Quantum SU(2) with the circle coaction of weight `(k, l)`:
    /// `deg alpha = k`, `deg beta = -l`.
    pub fn su2(k: u32, l: u32) -> Result<Arc<Presentation>> {
        check_weights(k, l)?;
        use gens::*;
        let kd = k as i64;
        let ld = l as i64;
        let generators = vec![
            Generator { name: "alpha", star: ALPHA_S, degree: kd },
            Generator { name: "alphaS", star: ALPHA, degree: -kd },
            Generator { name: "beta", star: BETA_S, degree: -ld },
            Generator { name: "betaS", star: BETA, degree: ld },
        ];
        let w = |ls: &[GenId]| Word::from_letters(ls.iter().copied());
        let mono = |e: i64, ls: &[GenId]| (LaurentPoly::q_pow(e), w(ls));
        let rules = vec![
            // beta alpha = q^{-1} alpha beta
            RewriteRule { lhs: w(&[BETA, ALPHA]), rhs: vec![mono(-1, &[ALPHA, BETA])] },
            RewriteRule { lhs: w(&[BETA_S, ALPHA]), rhs: vec![mono(-1, &[ALPHA, BETA_S])] },
            RewriteRule { lhs: w(&[BETA, ALPHA_S]), rhs: vec![mono(1, &[ALPHA_S, BETA])] },
            RewriteRule { lhs: w(&[BETA_S, ALPHA_S]), rhs: vec![mono(1, &[ALPHA_S, BETA_S])] },
            // beta* beta = beta beta*
            RewriteRule { lhs: w(&[BETA_S, BETA]), rhs: vec![mono(0, &[BETA, BETA_S])] },
            // alpha alpha* = 1 - beta beta*
            RewriteRule {
                lhs: w(&[ALPHA, ALPHA_S]),
                rhs: vec![mono(0, &[]), (-LaurentPoly::q_pow(0), w(&[BETA, BETA_S]))],
            },
            // alpha* alpha = 1 - q^{-2} beta beta*
            RewriteRule {
                lhs: w(&[ALPHA_S, ALPHA]),
                rhs: vec![mono(0, &[]), (-LaurentPoly::q_pow(-2), w(&[BETA, BETA_S]))],
            },
        ];
        Ok(Arc::new(Presentation { kind: AlgebraKind::Su2, k, l, generators, rules }))
    }

    /// Quantum weighted projective line with coprime weights `(k, l)`.
    /// The coaction it inherits is trivial: every element has degree 0.
    pub fn wp(k: u32, l: u32) -> Result<Arc<Presentation>> {
        check_weights(k, l)?;
        use gens::*;
        let generators = vec![
            Generator { name: "a", star: A, degree: 0 },
            Generator { name: "b", star: B_S, degree: 0 },
            Generator { name: "bS", star: B, degree: 0 },
        ];
        let w = |ls: &[GenId]| Word::from_letters(ls.iter().copied());
        let ld = l as i64;
        let kld = (k * l) as i64;
        // b b* = q^{2kl} a^k prod_{m=0}^{l-1} (1 - q^{2m} a)
        let bbs = poly_in_word(
            &shifted_product(l, |m| 2 * m as i64, 2 * kld),
            k,
            &Word::letter(A),
            &Word::empty(),
        );
        // b* b = a^k prod_{m=1}^{l} (1 - q^{-2m} a)
        let bsb = poly_in_word(
            &shifted_product(l, |m| -2 * (m as i64 + 1), 0),
            k,
            &Word::letter(A),
            &Word::empty(),
        );
        let rules = vec![
            // b a = q^{2l} a b
            RewriteRule {
                lhs: w(&[B, A]),
                rhs: vec![(LaurentPoly::q_pow(2 * ld), w(&[A, B]))],
            },
            // b* a = q^{-2l} a b*
            RewriteRule {
                lhs: w(&[B_S, A]),
                rhs: vec![(LaurentPoly::q_pow(-2 * ld), w(&[A, B_S]))],
            },
            RewriteRule { lhs: w(&[B, B_S]), rhs: bbs },
            RewriteRule { lhs: w(&[B_S, B]), rhs: bsb },
        ];
        Ok(Arc::new(Presentation { kind: AlgebraKind::Wp, k, l, generators, rules }))
    }

    /// Quantum lens space of order `l`, with the circle coaction
    /// `deg c = 1`, `deg d = -1`.
    pub fn lens(l: u32) -> Result<Arc<Presentation>> {
        if l == 0 {
            return Err(Error::InvalidParameter("lens order must be positive".into()));
        }
        use gens::*;
        let generators = vec![
            Generator { name: "c", star: C_S, degree: 1 },
            Generator { name: "cS", star: C, degree: -1 },
            Generator { name: "d", star: D_S, degree: -1 },
            Generator { name: "dS", star: D, degree: 1 },
        ];
        let w = |ls: &[GenId]| Word::from_letters(ls.iter().copied());
        let ld = l as i64;
        // c c* = prod_{m=0}^{l-1} (1 - q^{2m} d d*)
        let ccs = poly_in_word(
            &shifted_product(l, |m| 2 * m as i64, 0),
            0,
            &Word::letter(D),
            &Word::letter(D_S),
        );
        // c* c = prod_{m=1}^{l} (1 - q^{-2m} d d*)
        let csc = poly_in_word(
            &shifted_product(l, |m| -2 * (m as i64 + 1), 0),
            0,
            &Word::letter(D),
            &Word::letter(D_S),
        );
        let rules = vec![
            // d c = q^{-l} c d
            RewriteRule { lhs: w(&[D, C]), rhs: vec![(LaurentPoly::q_pow(-ld), w(&[C, D]))] },
            RewriteRule {
                lhs: w(&[D_S, C]),
                rhs: vec![(LaurentPoly::q_pow(-ld), w(&[C, D_S]))],
            },
            RewriteRule { lhs: w(&[D, C_S]), rhs: vec![(LaurentPoly::q_pow(ld), w(&[C_S, D]))] },
            RewriteRule {
                lhs: w(&[D_S, C_S]),
                rhs: vec![(LaurentPoly::q_pow(ld), w(&[C_S, D_S]))],
            },
            // d* d = d d*
            RewriteRule { lhs: w(&[D_S, D]), rhs: vec![(LaurentPoly::q_pow(0), w(&[D, D_S]))] },
            RewriteRule { lhs: w(&[C, C_S]), rhs: ccs },
            RewriteRule { lhs: w(&[C_S, C]), rhs: csc },
        ];
        Ok(Arc::new(Presentation { kind: AlgebraKind::Lens, k: 1, l, generators, rules }))
    }

    // ---- Accessors ----

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Weight `k` (1 for lens spaces).
    pub fn weight_k(&self) -> u32 {
        self.k
    }

    /// Weight `l` / lens order.
    pub fn weight_l(&self) -> u32 {
        self.l
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Resolves a generator display name.
    pub fn gen_by_name(&self, name: &str) -> Option<GenId> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| i as GenId)
    }

    pub fn gen_name(&self, g: GenId) -> &'static str {
        self.generators[g as usize].name
    }

    /// The star of a generator.
    pub fn star_gen(&self, g: GenId) -> GenId {
        self.generators[g as usize].star
    }

    /// Degree of a generator under the circle coaction.
    pub fn gen_degree(&self, g: GenId) -> i64 {
        self.generators[g as usize].degree
    }

    /// Degree of a free word (sum of the letter degrees).
    pub fn word_degree(&self, w: &Word) -> i64 {
        w.letters().iter().map(|&g| self.gen_degree(g)).sum()
    }

    /// Degree of a reduced word.
    pub fn nf_degree(&self, nf: &NfWord) -> i64 {
        self.word_degree(&self.nf_to_word(nf))
    }

    /// Star of a free word: reverse the letters and star each one.
    pub fn star_word(&self, w: &Word) -> Word {
        Word::from_letters(w.letters().iter().rev().map(|&g| self.star_gen(g)))
    }

    // ---- Normal-form word encoding ----

    /// Expands a reduced word back into a free word.
    pub fn nf_to_word(&self, nf: &NfWord) -> Word {
        use gens::*;
        let mut w = Word::empty();
        match (self.kind, nf) {
            (AlgebraKind::Su2, NfWord::Su2 { alpha, beta, beta_star }) => {
                let g = if *alpha >= 0 { ALPHA } else { ALPHA_S };
                w.push_run(g, alpha.unsigned_abs() as u32);
                w.push_run(BETA, *beta);
                w.push_run(BETA_S, *beta_star);
            }
            (AlgebraKind::Wp, NfWord::Wp { a, b }) => {
                w.push_run(A, *a);
                let g = if *b >= 0 { B } else { B_S };
                w.push_run(g, b.unsigned_abs() as u32);
            }
            (AlgebraKind::Lens, NfWord::Lens { c, d, d_star }) => {
                let g = if *c >= 0 { C } else { C_S };
                w.push_run(g, c.unsigned_abs() as u32);
                w.push_run(D, *d);
                w.push_run(D_S, *d_star);
            }
            _ => panic!("normal-form word from a different algebra family"),
        }
        w
    }

    /// Classifies an irreducible word into its exponent form.
    ///
    /// Panics when the word is not in normal form; callers only classify
    /// output of the reducer.
    pub fn classify(&self, w: &Word) -> NfWord {
        use gens::*;
        let mut counts = [0u32; 4];
        // Letters of a normal form appear in blocks ordered by generator
        // id pattern; verify monotone block structure while counting.
        let order: &[GenId] = match self.kind {
            AlgebraKind::Su2 => &[ALPHA, ALPHA_S, BETA, BETA_S],
            AlgebraKind::Wp => &[A, B, B_S],
            AlgebraKind::Lens => &[C, C_S, D, D_S],
        };
        let mut stage = 0usize;
        for &g in w.letters() {
            let pos = order
                .iter()
                .position(|&o| o == g)
                .unwrap_or_else(|| panic!("foreign generator id {g}"));
            assert!(pos >= stage, "word {w:?} is not in normal form");
            stage = pos;
            counts[g as usize] += 1;
        }
        match self.kind {
            AlgebraKind::Su2 => {
                assert!(
                    counts[ALPHA as usize] == 0 || counts[ALPHA_S as usize] == 0,
                    "mixed alpha / alpha* word"
                );
                NfWord::Su2 {
                    alpha: counts[ALPHA as usize] as i64 - counts[ALPHA_S as usize] as i64,
                    beta: counts[BETA as usize],
                    beta_star: counts[BETA_S as usize],
                }
            }
            AlgebraKind::Wp => {
                assert!(
                    counts[B as usize] == 0 || counts[B_S as usize] == 0,
                    "mixed b / b* word"
                );
                NfWord::Wp {
                    a: counts[A as usize],
                    b: counts[B as usize] as i64 - counts[B_S as usize] as i64,
                }
            }
            AlgebraKind::Lens => {
                assert!(
                    counts[C as usize] == 0 || counts[C_S as usize] == 0,
                    "mixed c / c* word"
                );
                NfWord::Lens {
                    c: counts[C as usize] as i64 - counts[C_S as usize] as i64,
                    d: counts[D as usize],
                    d_star: counts[D_S as usize],
                }
            }
        }
    }

    /// The empty word in exponent form.
    pub fn unit_nf(&self) -> NfWord {
        match self.kind {
            AlgebraKind::Su2 => NfWord::Su2 { alpha: 0, beta: 0, beta_star: 0 },
            AlgebraKind::Wp => NfWord::Wp { a: 0, b: 0 },
            AlgebraKind::Lens => NfWord::Lens { c: 0, d: 0, d_star: 0 },
        }
    }

    // ---- Reduction ----

    /// Reduces a linear combination of free words to normal form.
    ///
    /// Every strategy yields the same result (the rule set is confluent);
    /// `Leftmost` is the deterministic default used throughout.
    pub fn reduce(
        &self,
        items: Vec<(RatQ, Word)>,
        strategy: &mut ReductionStrategy<'_>,
    ) -> BTreeMap<NfWord, RatQ> {
        let mut out: BTreeMap<NfWord, RatQ> = BTreeMap::new();
        let mut stack: Vec<(RatQ, Word)> = items;
        let mut fuel: u64 = 50_000_000;
        let mut matches: Vec<(usize, usize)> = Vec::new();
        while let Some((coeff, word)) = stack.pop() {
            assert!(fuel > 0, "rewriting did not terminate");
            fuel -= 1;
            if coeff.is_zero() {
                continue;
            }
            let redex = match strategy {
                ReductionStrategy::Leftmost => self.leftmost_redex(&word),
                ReductionStrategy::Random(rng) => {
                    matches.clear();
                    for pos in 0..word.len() {
                        for (ri, rule) in self.rules.iter().enumerate() {
                            if word.matches_at(pos, &rule.lhs) {
                                matches.push((pos, ri));
                            }
                        }
                    }
                    if matches.is_empty() {
                        None
                    } else {
                        Some(matches[rng.gen_range(0..matches.len())])
                    }
                }
            };
            match redex {
                None => {
                    let key = self.classify(&word);
                    let entry = out.entry(key).or_insert_with(RatQ::zero);
                    *entry = &*entry + &coeff;
                    if entry.is_zero() {
                        out.remove(&key);
                    }
                }
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    for (c, patch) in &rule.rhs {
                        stack.push((&coeff * c, word.splice(pos, rule.lhs.len(), patch)));
                    }
                }
            }
        }
        out
    }

    fn leftmost_redex(&self, word: &Word) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                if word.matches_at(pos, &rule.lhs) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    /// Normal form of a single free word.
    pub fn normal_form_word(&self, w: &Word) -> BTreeMap<NfWord, RatQ> {
        self.reduce(vec![(RatQ::one(), w.clone())], &mut ReductionStrategy::Leftmost)
    }

    // ---- Confluence ----

    /// Resolves every overlap ambiguity `x y z` with `x y` and `y z` left
    /// sides of rules, reducing both resolutions to normal form.
    pub fn confluence_check(&self) -> ConfluenceReport {
        let mut report = ConfluenceReport { pairs_checked: 0, unresolved: Vec::new() };
        for (ia, ra) in self.rules.iter().enumerate() {
            for (ib, rb) in self.rules.iter().enumerate() {
                let la = ra.lhs.len();
                let lb = rb.lhs.len();
                // proper overlaps: a nonempty suffix of lhs_a equals a
                // proper prefix of lhs_b
                for t in 1..la.min(lb) {
                    if ra.lhs.letters()[la - t..] != rb.lhs.letters()[..t] {
                        continue;
                    }
                    let overlap = Word::from_letters(
                        ra.lhs
                            .letters()
                            .iter()
                            .chain(&rb.lhs.letters()[t..])
                            .copied(),
                    );
                    report.pairs_checked += 1;
                    let via_a = self.reduce(
                        ra.rhs
                            .iter()
                            .map(|(c, w)| {
                                (RatQ::from(c), overlap.splice(0, la, w))
                            })
                            .collect(),
                        &mut ReductionStrategy::Leftmost,
                    );
                    let via_b = self.reduce(
                        rb.rhs
                            .iter()
                            .map(|(c, w)| {
                                (RatQ::from(c), overlap.splice(la - t, lb, w))
                            })
                            .collect(),
                        &mut ReductionStrategy::Leftmost,
                    );
                    if via_a != via_b {
                        report.unresolved.push(UnresolvedOverlap {
                            rule_a: ia,
                            rule_b: ib,
                            word: overlap,
                            via_a,
                            via_b,
                        });
                    }
                }
            }
        }
        report
    }

    // ---- Defining relations ----

    /// The defining relations, each as a named linear combination of free
    /// words that the algebra declares to be zero.
    pub fn defining_relations(&self) -> Vec<(String, Vec<(LaurentPoly, Word)>)> {
        use gens::*;
        let w = |ls: &[GenId]| Word::from_letters(ls.iter().copied());
        let one = LaurentPoly::q_pow(0);
        let q = |e: i64| LaurentPoly::q_pow(e);
        let ld = self.l as i64;
        match self.kind {
            AlgebraKind::Su2 => vec![
                (
                    "alpha beta = q beta alpha".into(),
                    vec![(one.clone(), w(&[ALPHA, BETA])), (-q(1), w(&[BETA, ALPHA]))],
                ),
                (
                    "alpha betaS = q betaS alpha".into(),
                    vec![(one.clone(), w(&[ALPHA, BETA_S])), (-q(1), w(&[BETA_S, ALPHA]))],
                ),
                (
                    "beta betaS = betaS beta".into(),
                    vec![(one.clone(), w(&[BETA, BETA_S])), (-one.clone(), w(&[BETA_S, BETA]))],
                ),
                (
                    "alpha alphaS - alphaS alpha = (q^-2 - 1) beta betaS".into(),
                    vec![
                        (one.clone(), w(&[ALPHA, ALPHA_S])),
                        (-one.clone(), w(&[ALPHA_S, ALPHA])),
                        (&q(0) - &q(-2), w(&[BETA, BETA_S])),
                    ],
                ),
                (
                    "alpha alphaS + beta betaS = 1".into(),
                    vec![
                        (one.clone(), w(&[ALPHA, ALPHA_S])),
                        (one.clone(), w(&[BETA, BETA_S])),
                        (-one.clone(), w(&[])),
                    ],
                ),
            ],
            AlgebraKind::Wp => {
                let mut rels = vec![(
                    "a b = q^-2l b a".into(),
                    vec![(one.clone(), w(&[A, B])), (-q(-2 * ld), w(&[B, A]))],
                )];
                for (name, lhs_idx) in
                    [("b bS = q^2kl a^k prod(1 - q^2m a)", 2usize), ("bS b = a^k prod(1 - q^-2m a)", 3)]
                {
                    let rule = &self.rules[lhs_idx];
                    let mut terms = vec![(one.clone(), rule.lhs.clone())];
                    for (c, rw) in &rule.rhs {
                        terms.push((-c, rw.clone()));
                    }
                    rels.push((name.into(), terms));
                }
                rels
            }
            AlgebraKind::Lens => {
                let mut rels = vec![
                    (
                        "c d = q^l d c".into(),
                        vec![(one.clone(), w(&[C, D])), (-q(ld), w(&[D, C]))],
                    ),
                    (
                        "c dS = q^l dS c".into(),
                        vec![(one.clone(), w(&[C, D_S])), (-q(ld), w(&[D_S, C]))],
                    ),
                    (
                        "d dS = dS d".into(),
                        vec![(one.clone(), w(&[D, D_S])), (-one.clone(), w(&[D_S, D]))],
                    ),
                ];
                for (name, lhs_idx) in [
                    ("c cS = prod(1 - q^2m d dS)", 5usize),
                    ("cS c = prod(1 - q^-2m d dS)", 6),
                ] {
                    let rule = &self.rules[lhs_idx];
                    let mut terms = vec![(one.clone(), rule.lhs.clone())];
                    for (c, rw) in &rule.rhs {
                        terms.push((-c, rw.clone()));
                    }
                    rels.push((name.into(), terms));
                }
                rels
            }
        }
    }

    // ---- Enumeration ----

    /// All reduced words of length at most `max_len`, ordered by length
    /// and then by exponent form.
    pub fn enumerate_nf_words(&self, max_len: u32) -> Vec<NfWord> {
        let mut out = Vec::new();
        let m = max_len as i64;
        match self.kind {
            AlgebraKind::Su2 | AlgebraKind::Lens => {
                for head in -m..=m {
                    let rest = m - head.abs();
                    for r in 0..=rest {
                        for s in 0..=rest - r {
                            out.push(match self.kind {
                                AlgebraKind::Su2 => NfWord::Su2 {
                                    alpha: head,
                                    beta: r as u32,
                                    beta_star: s as u32,
                                },
                                _ => NfWord::Lens { c: head, d: r as u32, d_star: s as u32 },
                            });
                        }
                    }
                }
            }
            AlgebraKind::Wp => {
                for a in 0..=m {
                    for b in -(m - a)..=(m - a) {
                        out.push(NfWord::Wp { a: a as u32, b });
                    }
                }
            }
        }
        out.sort_by_key(|nf| (nf.len(), *nf));
        out.dedup();
        out
    }

    /// All degree-0 reduced words of length at most `max_len`.
    pub fn coinvariant_basis(&self, max_len: u32) -> Vec<NfWord> {
        self.enumerate_nf_words(max_len)
            .into_iter()
            .filter(|nf| self.nf_degree(nf) == 0)
            .collect()
    }

    /// A random free word of length at most `max_len`, for stress tests.
    pub fn random_word(&self, max_len: usize, rng: &mut impl Rng) -> Word {
        let len = rng.gen_range(0..=max_len);
        Word::from_letters(
            (0..len).map(|_| rng.gen_range(0..self.generators.len()) as GenId),
        )
    }
}

/// Coefficients of `q^{shift} x^k prod_i (1 + c_i x)` as `(exponent of x,
/// coefficient)` pairs, where the `c_i` are the monomials `-q^{e(i)}`.
pub(crate) fn shifted_product(
    l: u32,
    exponent: impl Fn(u32) -> i64,
    shift: i64,
) -> Vec<LaurentPoly> {
    let factors: Vec<LaurentPoly> = (0..l)
        .map(|m| -LaurentPoly::q_pow(exponent(m)))
        .collect();
    expand_linear_product(&factors)
        .into_iter()
        .map(|c| c.shift(shift))
        .collect()
}

/// Turns polynomial coefficients in `x` into rule terms, where `x^j`
/// stands for the word `(left right)^j` prefixed by `left^k`; used for
/// `x = a` (with `right` empty) and `x = d d*`.
pub(crate) fn poly_in_word(
    coeffs: &[LaurentPoly],
    k: u32,
    left: &Word,
    right: &Word,
) -> Vec<(LaurentPoly, Word)> {
    let mut rhs = Vec::new();
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut word = Word::empty();
        for _ in 0..k + j as u32 {
            word = word.concat(left);
        }
        for _ in 0..j {
            word = word.concat(right);
        }
        rhs.push((c.clone(), word));
    }
    rhs
}
