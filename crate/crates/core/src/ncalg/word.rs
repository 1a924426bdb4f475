//! Words in the free *-monoid on a presentation's generators, and the
//! compact exponent form of reduced words.

/// Index of a generator within its presentation's alphabet.
pub type GenId = u8;

/// A word in the free monoid on the generators; the empty word is the
/// unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct Word(Vec<GenId>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// A word from a sequence of generator indices.
    pub fn from_letters(letters: impl IntoIterator<Item = GenId>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// A single generator.
    pub fn letter(g: GenId) -> Self {
        Word(vec![g])
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The letters, left to right.
    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    /// Concatenation `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Appends `n` copies of the generator `g`.
    pub fn push_run(&mut self, g: GenId, n: u32) {
        for _ in 0..n {
            self.0.push(g);
        }
    }

    /// Replaces the letters at `pos .. pos + cut` by `patch`, returning a
    /// new word.
    pub fn splice(&self, pos: usize, cut: usize, patch: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - cut + patch.0.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(&patch.0);
        v.extend_from_slice(&self.0[pos + cut..]);
        Word(v)
    }

    /// True when `pattern` occurs at position `pos`.
    pub fn matches_at(&self, pos: usize, pattern: &Word) -> bool {
        self.0.len() >= pos + pattern.0.len()
            && self.0[pos..pos + pattern.0.len()] == pattern.0[..]
    }
}

/// A reduced word, stored as the exponents of its canonical shape.
///
/// Signed exponents encode a generator together with its star: a negative
/// `alpha` exponent means a power of `alpha*`, and likewise for `c` and
/// `b`.  The remaining exponents are powers of fixed self-ordered
/// generators and are always nonnegative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum NfWord {
    /// `alpha^a beta^b beta*^bs` (`a < 0` encodes `alpha*^{-a}`).
    Su2 { alpha: i64, beta: u32, beta_star: u32 },
    /// `a^a b^b` (`b < 0` encodes `b*^{-b}`).
    Wp { a: u32, b: i64 },
    /// `c^c d^d d*^ds` (`c < 0` encodes `c*^{-c}`).
    Lens { c: i64, d: u32, d_star: u32 },
}

impl NfWord {
    /// Total number of letters.
    pub fn len(&self) -> u32 {
        match self {
            NfWord::Su2 { alpha, beta, beta_star } => {
                alpha.unsigned_abs() as u32 + beta + beta_star
            }
            NfWord::Wp { a, b } => a + b.unsigned_abs() as u32,
            NfWord::Lens { c, d, d_star } => c.unsigned_abs() as u32 + d + d_star,
        }
    }

    /// True for the empty word.
    pub fn is_unit(&self) -> bool {
        self.len() == 0
    }
}
