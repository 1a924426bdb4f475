//! The *-algebra embeddings connecting the three presentations:
//!
//! * `theta : WP(k,l) -> SUq2`, `a -> beta beta*`, `b -> alpha^l beta^k`;
//! * `iota  : Lens(l) -> SUq2`, `c -> alpha^l`, `d -> beta`;
//! * `kappa : WP(1,l) -> Lens(l)`, `a -> d d*`, `b -> c d`;
//!
//! plus the inverse of `kappa` on coinvariants, [`wp_from_lens`], which
//! identifies the degree-zero part of the lens space with the teardrop
//! algebra of weight `(1, l)`.

use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ncalg::element::NcElement;
use crate::ncalg::presentation::{gens, AlgebraKind, Presentation};
use crate::ncalg::word::{NfWord, Word};
use crate::qlaurent::RatQ;

/// A *-algebra map defined on generators, applied by multiplying images.
pub struct EmbedMap {
    name: &'static str,
    src: Arc<Presentation>,
    dst: Arc<Presentation>,
    /// Image of each source generator, indexed by `GenId`.
    images: Vec<NcElement>,
}

impl EmbedMap {
    /// `theta : WP(k, l) -> SUq2` carrying the weight-(k, l) coaction.
    pub fn theta(k: u32, l: u32) -> Result<EmbedMap> {
        let src = Presentation::wp(k, l)?;
        let dst = Presentation::su2(k, l)?;
        let a_img = NcElement::from_word(
            &dst,
            &Word::from_letters([gens::BETA, gens::BETA_S]),
        );
        let mut b_word = Word::empty();
        b_word.push_run(gens::ALPHA, l);
        b_word.push_run(gens::BETA, k);
        let b_img = NcElement::from_word(&dst, &b_word);
        let bs_img = b_img.star();
        Ok(EmbedMap { name: "theta", src, dst, images: vec![a_img, b_img, bs_img] })
    }

    /// `iota : Lens(l) -> SUq2` with the weight-(1, l) coaction on the
    /// target, under which `iota` multiplies degrees by `l`.
    pub fn iota(l: u32) -> Result<EmbedMap> {
        let src = Presentation::lens(l)?;
        let dst = Presentation::su2(1, l)?;
        let mut c_word = Word::empty();
        c_word.push_run(gens::ALPHA, l);
        let c_img = NcElement::from_word(&dst, &c_word);
        let cs_img = c_img.star();
        let d_img = NcElement::generator(&dst, gens::BETA);
        let ds_img = d_img.star();
        Ok(EmbedMap { name: "iota", src, dst, images: vec![c_img, cs_img, d_img, ds_img] })
    }

    /// `kappa : WP(1, l) -> Lens(l)`, the identification of the teardrop
    /// of weight `(1, l)` with the coinvariants of the lens space:
    /// `a -> d d*`, `b -> c d`.
    pub fn kappa(l: u32) -> Result<EmbedMap> {
        let src = Presentation::wp(1, l)?;
        let dst = Presentation::lens(l)?;
        let a_img = NcElement::from_word(&dst, &Word::from_letters([gens::D, gens::D_S]));
        let b_img = NcElement::from_word(&dst, &Word::from_letters([gens::C, gens::D]));
        let bs_img = b_img.star();
        Ok(EmbedMap { name: "kappa", src, dst, images: vec![a_img, b_img, bs_img] })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.src
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.dst
    }

    /// Image of a free word: the product of the generator images.
    pub fn apply_word(&self, w: &Word) -> NcElement {
        let mut acc = NcElement::one(&self.dst);
        for &g in w.letters() {
            acc = &acc * &self.images[g as usize];
        }
        acc
    }

    /// Image of an element (applied term by term).
    pub fn apply(&self, x: &NcElement) -> NcElement {
        assert!(
            **x.presentation() == *self.src,
            "element over {} fed to {}",
            x.presentation(),
            self.name
        );
        let mut acc = NcElement::zero(&self.dst);
        for (nf, c) in x.terms() {
            let img = self.apply_word(&self.src.nf_to_word(nf));
            acc = &acc + &img.scale(c);
        }
        acc
    }

    /// Images of the source's defining relations; all must be zero for
    /// the map to be a *-algebra morphism.
    pub fn relation_images(&self) -> Vec<(String, NcElement)> {
        self.src
            .defining_relations()
            .into_iter()
            .map(|(name, terms)| {
                let mut acc = NcElement::zero(&self.dst);
                for (c, w) in terms {
                    acc = &acc + &self.apply_word(&w).scale(&RatQ::from(&c));
                }
                (name, acc)
            })
            .collect()
    }
}

/// Inverts `kappa` on coinvariants: rewrites a degree-zero lens-space
/// element as an element of `WP(1, l)`.
///
/// Each degree-zero reduced word `c^p d^r d*^s` (with `r - s = p`) is the
/// image of a unique teardrop monomial up to a power of `q`; the scalars
/// are recovered by applying `kappa` to the candidate monomial and
/// dividing.
pub fn wp_from_lens(x: &NcElement) -> Result<NcElement> {
    let pres = x.presentation();
    if pres.kind() != AlgebraKind::Lens {
        return Err(Error::InvalidParameter(format!(
            "wp_from_lens expects a lens-space element, got {pres}"
        )));
    }
    let l = pres.weight_l();
    let kappa = EmbedMap::kappa(l)?;
    let wp = Arc::clone(kappa.source());
    let mut acc = NcElement::zero(&wp);
    for (nf, coeff) in x.terms() {
        let deg = pres.nf_degree(nf);
        if deg != 0 {
            return Err(Error::NotCoinvariant(deg));
        }
        let NfWord::Lens { c: p, d: r, d_star: s } = nf else { unreachable!() };
        // kappa(a^m b^n) = scalar * c^n d^{m+n} d*^m  (n < 0 via b*)
        let (m, n) = if *p >= 0 { (*s, *p) } else { (*r, *p) };
        let candidate = NcElement::monomial(&wp, NfWord::Wp { a: m, b: n }, RatQ::one());
        let image = kappa.apply(&candidate);
        assert_eq!(image.term_count(), 1, "kappa image of a monomial is a monomial");
        let (img_nf, scalar) = image.terms().next().unwrap();
        assert_eq!(img_nf, nf, "kappa image shape mismatch");
        let inv = scalar.inverse().expect("kappa image scalar is a q-power");
        acc = &acc + &NcElement::monomial(&wp, NfWord::Wp { a: m, b: n }, &*coeff * &inv);
    }
    Ok(acc)
}

/// Recognizes a degree-zero reduced SUq2 word (under the weight-(k, l)
/// coaction) as a teardrop monomial: returns `(m, n)` such that the word
/// equals `theta(a^m b^n)` up to a power of `q` (`n < 0` meaning `b*`).
pub fn recognize_wp_image(k: u32, l: u32, nf: &NfWord) -> Option<(u32, i64)> {
    let NfWord::Su2 { alpha, beta, beta_star } = nf else { return None };
    let (k, l) = (k as i64, l as i64);
    if *alpha >= 0 {
        // theta(a^m b^n) ~ alpha^{ln} beta^{kn+m} beta*^m
        if alpha % l != 0 {
            return None;
        }
        let n = alpha / l;
        let m = *beta_star as i64;
        (*beta as i64 == k * n + m).then_some((m as u32, n))
    } else {
        // theta(a^m b*^n) ~ alpha*^{ln} beta^m beta*^{kn+m}
        if (-alpha) % l != 0 {
            return None;
        }
        let n = (-alpha) / l;
        let m = *beta as i64;
        (*beta_star as i64 == k * n + m).then_some((m as u32, -n))
    }
}

/// Checks that every reduced SUq2 word whose `alpha` exponent vanishes
/// mod `l` is, up to a `q`-power, the `iota`-image of a lens-space word
/// at the same length: the cyclic-grading coinvariants are generated by
/// `alpha^l` and `beta`.
pub fn zl_coinvariants_generated(l: u32, max_len: u32) -> Result<bool> {
    let iota = EmbedMap::iota(l)?;
    let su2 = Arc::clone(iota.target());
    let lens = Arc::clone(iota.source());
    for nf in su2.enumerate_nf_words(max_len) {
        let NfWord::Su2 { alpha, beta, beta_star } = nf else { unreachable!() };
        if alpha.rem_euclid(l as i64) != 0 {
            continue;
        }
        let candidate = NfWord::Lens { c: alpha / l as i64, d: beta, d_star: beta_star };
        let image = iota.apply(&NcElement::monomial(&lens, candidate, RatQ::one()));
        if image.term_count() != 1 {
            return Ok(false);
        }
        let (img_nf, scalar) = image.terms().next().unwrap();
        if *img_nf != nf || scalar.inverse().is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}
