//! Finitely presented *-algebras with exact coefficients.
//!
//! Three families are provided, each as a confluent rewriting system on
//! words in its generators with [`crate::qlaurent`] coefficients:
//!
//! * [`Presentation::su2`] — the quantum SU(2) algebra on
//!   `alpha, alphaS, beta, betaS`, graded by a weighted circle action;
//! * [`Presentation::wp`] — the quantum weighted projective (teardrop)
//!   algebra on `a, b, bS`;
//! * [`Presentation::lens`] — the quantum lens space algebra on
//!   `c, cS, d, dS`, graded by total winding.
//!
//! Elements ([`NcElement`]) live in normal form: every product is
//! rewritten to a linear combination of reduced words ([`NfWord`]).
//! Tensors with two legs ([`TensorElement`]) support the translation
//! maps needed by the connection and idempotent layers.  The embeddings
//! between the families live in [`embed`].

mod element;
mod embed;
mod parse;
mod presentation;
mod tensor;
mod word;

pub use element::NcElement;
pub use embed::{recognize_wp_image, wp_from_lens, zl_coinvariants_generated, EmbedMap};
pub use parse::parse_expression;
pub use presentation::{
    AlgebraKind, ConfluenceReport, Generator, Presentation, ReductionStrategy, RewriteRule,
    UnresolvedOverlap,
};
pub use tensor::{TensorElement, TensorTerm};
pub use word::{GenId, NfWord, Word};

pub(crate) use element::nf_word_string;
pub(crate) use presentation::gens;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_rational::BigRational;
    use num_traits::One;

    use super::*;
    use crate::qlaurent::{LaurentPoly, RatQ};

    fn su2_el(k: u32, l: u32, s: &str) -> NcElement {
        parse_expression(&Presentation::su2(k, l).unwrap(), s).unwrap()
    }

    fn wp_el(k: u32, l: u32, s: &str) -> NcElement {
        parse_expression(&Presentation::wp(k, l).unwrap(), s).unwrap()
    }

    fn lens_el(l: u32, s: &str) -> NcElement {
        parse_expression(&Presentation::lens(l).unwrap(), s).unwrap()
    }

    // ---- Normal forms: hand-checked small cases ----

    #[test]
    fn su2_antipode_relation_reduces() {
        // alphaS alpha -> 1 - q^-2 beta betaS
        let x = su2_el(1, 1, "alphaS alpha");
        assert_eq!(x.to_string(), "1 - q^-2 * beta*betaS");
    }

    #[test]
    fn su2_unitary_relation_reduces() {
        let x = su2_el(1, 1, "alpha alphaS");
        assert_eq!(x.to_string(), "1 - beta*betaS");
    }

    #[test]
    fn su2_commutation_scalars() {
        assert_eq!(su2_el(1, 1, "beta alpha").to_string(), "q^-1 * alpha*beta");
        assert_eq!(su2_el(1, 1, "beta alphaS").to_string(), "q * alphaS*beta");
        assert_eq!(su2_el(1, 1, "betaS alpha").to_string(), "q^-1 * alpha*betaS");
        assert_eq!(su2_el(1, 1, "betaS beta").to_string(), "beta*betaS");
    }

    #[test]
    fn wp_star_pair_small_case() {
        // WP(1,1): b bS = q^2 a (1 - a) = q^2 a - q^2 a^2
        let x = wp_el(1, 1, "b bS");
        assert_eq!(x.to_string(), "q^2 * a - q^2 * a^2");
        // and bS b = a (1 - q^-2 a)
        let y = wp_el(1, 1, "bS b");
        assert_eq!(y.to_string(), "a - q^-2 * a^2");
    }

    #[test]
    fn wp_commutation_scalar_uses_both_weights() {
        // b a = q^{2l} a b, independent of k
        assert_eq!(wp_el(1, 2, "b a").to_string(), "q^4 * a*b");
        assert_eq!(wp_el(3, 2, "b a").to_string(), "q^4 * a*b");
        assert_eq!(wp_el(1, 3, "bS a").to_string(), "q^-6 * a*bS");
    }

    #[test]
    fn wp_star_pair_degree_two() {
        // WP(1,2): bS b = a (1 - q^-2 a)(1 - q^-4 a)
        let x = wp_el(1, 2, "bS b");
        let expected = wp_el(1, 2, "a - (q^-2 + q^-4) a^2 + q^-6 a^3");
        assert_eq!(x, expected);
    }

    #[test]
    fn lens_star_pairs_small_case() {
        // Lens(1) is SUq2 in other letters: cS c = 1 - q^-2 d dS
        let x = lens_el(1, "cS c");
        assert_eq!(x.to_string(), "1 - q^-2 * d*dS");
        let y = lens_el(1, "c cS");
        assert_eq!(y.to_string(), "1 - d*dS");
    }

    #[test]
    fn lens_star_pair_uses_powers_of_d() {
        // Lens(2): c cS = (1 - d dS)(1 - q^2 d dS)
        let x = lens_el(2, "c cS");
        let expected = lens_el(2, "1 - (1 + q^2) d dS + q^2 d^2 dS^2");
        assert_eq!(x, expected);
    }

    #[test]
    fn reduction_strategies_agree() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (pres, max_len) in [
            (Presentation::su2(1, 2).unwrap(), 6),
            (Presentation::wp(2, 3).unwrap(), 6),
            (Presentation::lens(3).unwrap(), 6),
        ] {
            for _ in 0..40 {
                let w = pres.random_word(max_len, &mut rng);
                let a = pres.reduce(
                    vec![(RatQ::one(), w.clone())],
                    &mut ReductionStrategy::Leftmost,
                );
                let b = pres.reduce(
                    vec![(RatQ::one(), w)],
                    &mut ReductionStrategy::Random(&mut rng),
                );
                assert_eq!(a, b);
            }
        }
    }

    // ---- Confluence ----

    #[test]
    fn all_three_presentations_are_confluent() {
        for pres in [
            Presentation::su2(1, 1).unwrap(),
            Presentation::su2(2, 5).unwrap(),
            Presentation::wp(1, 1).unwrap(),
            Presentation::wp(3, 4).unwrap(),
            Presentation::lens(1).unwrap(),
            Presentation::lens(4).unwrap(),
        ] {
            let report = pres.confluence_check();
            assert!(report.is_confluent(), "{pres}: {:?}", report.unresolved);
            assert!(report.pairs_checked > 0);
        }
    }

    // ---- Star structure ----

    #[test]
    fn star_is_an_involution_on_reduced_words() {
        for pres in [
            Presentation::su2(1, 2).unwrap(),
            Presentation::wp(2, 3).unwrap(),
            Presentation::lens(2).unwrap(),
        ] {
            for nf in pres.enumerate_nf_words(4) {
                let x = NcElement::monomial(&pres, nf, RatQ::q_pow(3));
                assert_eq!(x.star().star(), x);
            }
        }
    }

    #[test]
    fn star_of_product_reverses_factors() {
        let x = su2_el(1, 1, "alpha beta");
        let y = su2_el(1, 1, "betaS alpha");
        assert_eq!((&x * &y).star(), &y.star() * &x.star());
    }

    #[test]
    fn self_adjoint_generators() {
        let a = wp_el(1, 2, "a");
        assert_eq!(a.star(), a);
        let x = lens_el(2, "d dS");
        assert_eq!(x.star(), x);
    }

    // ---- Gradings ----

    #[test]
    fn rules_preserve_degree() {
        for pres in [
            Presentation::su2(1, 1).unwrap(),
            Presentation::su2(2, 3).unwrap(),
            Presentation::wp(2, 3).unwrap(),
            Presentation::lens(3).unwrap(),
        ] {
            for rule in pres.rules() {
                let lhs_deg = pres.word_degree(&rule.lhs);
                for (_, w) in &rule.rhs {
                    assert_eq!(pres.word_degree(w), lhs_deg, "{pres}");
                }
            }
        }
    }

    #[test]
    fn su2_degrees_follow_weights() {
        let pres = Presentation::su2(2, 3).unwrap();
        let x = NcElement::generator(&pres, gens::ALPHA);
        assert_eq!(x.homogeneous_degree(), Some(2));
        let y = NcElement::generator(&pres, gens::BETA);
        assert_eq!(y.homogeneous_degree(), Some(-3));
        assert_eq!((&x * &y).homogeneous_degree(), Some(-1));
    }

    #[test]
    fn coinvariant_bases_match_hand_enumeration() {
        // SUq2 weight (1,1), words of length <= 2 and degree 0.
        let su2 = Presentation::su2(1, 1).unwrap();
        let basis: Vec<String> = su2
            .coinvariant_basis(2)
            .iter()
            .map(|nf| nf_word_string(&su2, nf))
            .collect();
        assert_eq!(basis, ["1", "alphaS*betaS", "beta*betaS", "alpha*beta"]);

        let lens = Presentation::lens(1).unwrap();
        let basis: Vec<String> = lens
            .coinvariant_basis(2)
            .iter()
            .map(|nf| nf_word_string(&lens, nf))
            .collect();
        assert_eq!(basis, ["1", "cS*dS", "d*dS", "c*d"]);
    }

    #[test]
    fn wp_elements_are_always_coinvariant() {
        let pres = Presentation::wp(2, 3).unwrap();
        for nf in pres.enumerate_nf_words(4) {
            assert_eq!(pres.nf_degree(&nf), 0);
        }
    }

    // ---- Embeddings ----

    #[test]
    fn embedding_relation_images_vanish() {
        for map in [
            EmbedMap::theta(1, 1).unwrap(),
            EmbedMap::theta(1, 2).unwrap(),
            EmbedMap::theta(2, 3).unwrap(),
            EmbedMap::theta(3, 2).unwrap(),
            EmbedMap::iota(1).unwrap(),
            EmbedMap::iota(2).unwrap(),
            EmbedMap::iota(3).unwrap(),
            EmbedMap::kappa(1).unwrap(),
            EmbedMap::kappa(2).unwrap(),
            EmbedMap::kappa(3).unwrap(),
        ] {
            for (name, img) in map.relation_images() {
                assert!(
                    img.is_zero(),
                    "{}: relation {name} maps to {img}",
                    map.name()
                );
            }
        }
    }

    #[test]
    fn theta_images_are_single_monomials() {
        let map = EmbedMap::theta(2, 3).unwrap();
        let wp = Arc::clone(map.source());
        let mut seen = std::collections::BTreeSet::new();
        for nf in wp.enumerate_nf_words(5) {
            let img = map.apply(&NcElement::monomial(&wp, nf.clone(), RatQ::one()));
            assert_eq!(img.term_count(), 1, "theta({:?})", nf);
            let (img_nf, coeff) = img.terms().next().unwrap();
            assert!(coeff.inverse().is_ok(), "nonzero scalar");
            assert!(seen.insert(img_nf.clone()), "theta not injective at {:?}", nf);
        }
    }

    #[test]
    fn theta_image_matches_recognizer() {
        for (k, l) in [(1, 1), (1, 2), (2, 3), (3, 2)] {
            let map = EmbedMap::theta(k, l).unwrap();
            let wp = Arc::clone(map.source());
            for nf in wp.enumerate_nf_words(4) {
                let img = map.apply(&NcElement::monomial(&wp, nf.clone(), RatQ::one()));
                let (img_nf, _) = img.terms().next().unwrap();
                let NfWord::Wp { a, b } = nf else { unreachable!() };
                assert_eq!(recognize_wp_image(k, l, img_nf), Some((a, b)));
            }
        }
    }

    #[test]
    fn recognizer_rejects_off_image_words() {
        // beta alone is not in the image of theta for (k,l) = (1,2)
        let nf = NfWord::Su2 { alpha: 0, beta: 1, beta_star: 0 };
        assert_eq!(recognize_wp_image(1, 2, &nf), None);
        // alpha^1 when l = 2 does not divide
        let nf = NfWord::Su2 { alpha: 1, beta: 0, beta_star: 0 };
        assert_eq!(recognize_wp_image(1, 2, &nf), None);
    }

    #[test]
    fn theta_lands_in_degree_zero() {
        let map = EmbedMap::theta(2, 3).unwrap();
        let wp = Arc::clone(map.source());
        for nf in wp.enumerate_nf_words(4) {
            let img = map.apply(&NcElement::monomial(&wp, nf, RatQ::one()));
            assert_eq!(img.homogeneous_degree(), Some(0));
        }
    }

    #[test]
    fn iota_multiplies_degree_by_l() {
        let l = 3;
        let map = EmbedMap::iota(l).unwrap();
        let lens = Arc::clone(map.source());
        for nf in lens.enumerate_nf_words(4) {
            let deg = lens.nf_degree(&nf);
            let img = map.apply(&NcElement::monomial(&lens, nf, RatQ::one()));
            assert_eq!(img.homogeneous_degree(), Some(deg * l as i64));
        }
    }

    #[test]
    fn iota_images_are_reduced_words_with_unit_scalar() {
        let map = EmbedMap::iota(2).unwrap();
        let lens = Arc::clone(map.source());
        for nf in lens.enumerate_nf_words(4) {
            let img = map.apply(&NcElement::monomial(&lens, nf, RatQ::one()));
            assert_eq!(img.term_count(), 1);
            let (_, coeff) = img.terms().next().unwrap();
            assert!(coeff.is_one(), "iota scalar at {img}");
        }
    }

    #[test]
    fn kappa_sends_teardrop_onto_coinvariants() {
        let map = EmbedMap::kappa(2).unwrap();
        let wp = Arc::clone(map.source());
        let lens = Arc::clone(map.target());
        for nf in wp.enumerate_nf_words(4) {
            let img = map.apply(&NcElement::monomial(&wp, nf, RatQ::one()));
            assert_eq!(img.term_count(), 1);
            let (img_nf, _) = img.terms().next().unwrap();
            assert_eq!(lens.nf_degree(img_nf), 0);
        }
    }

    #[test]
    fn wp_from_lens_inverts_kappa() {
        for l in [1u32, 2, 3] {
            let map = EmbedMap::kappa(l).unwrap();
            let wp = Arc::clone(map.source());
            for nf in wp.enumerate_nf_words(4) {
                let x = NcElement::monomial(&wp, nf, RatQ::q_pow(-2));
                let back = wp_from_lens(&map.apply(&x)).unwrap();
                assert_eq!(back, x);
            }
        }
    }

    #[test]
    fn wp_from_lens_small_images() {
        let lens = Presentation::lens(2).unwrap();
        let x = parse_expression(&lens, "d dS").unwrap();
        assert_eq!(wp_from_lens(&x).unwrap().to_string(), "a");
        let y = parse_expression(&lens, "c d").unwrap();
        assert_eq!(wp_from_lens(&y).unwrap().to_string(), "b");
    }

    #[test]
    fn wp_from_lens_rejects_noncoinvariants() {
        let lens = Presentation::lens(2).unwrap();
        let x = parse_expression(&lens, "c").unwrap();
        assert!(matches!(wp_from_lens(&x), Err(crate::Error::NotCoinvariant(1))));
    }

    #[test]
    fn cyclic_coinvariants_generated_by_lens_image() {
        for l in [1u32, 2, 3] {
            assert!(zl_coinvariants_generated(l, 5).unwrap());
        }
    }

    // ---- Tensor elements ----

    #[test]
    fn tensor_sandwich_and_multiply() {
        let pres = Presentation::su2(1, 1).unwrap();
        let unit = TensorElement::unit(&pres);
        // alphaS (1 (x) 1) alpha, legs multiplied = alphaS alpha
        let t = unit.sandwich(
            &NcElement::generator(&pres, gens::ALPHA_S),
            &NcElement::generator(&pres, gens::ALPHA),
        );
        assert_eq!(t.term_count(), 1);
        let prod = t.multiply_legs();
        assert_eq!(prod.to_string(), "1 - q^-2 * beta*betaS");
    }

    #[test]
    fn tensor_legs_track_degrees() {
        let pres = Presentation::lens(2).unwrap();
        let unit = TensorElement::unit(&pres);
        let t = unit.sandwich(
            &NcElement::generator(&pres, gens::C_S),
            &NcElement::generator(&pres, gens::C),
        );
        assert_eq!(t.left_degrees(), vec![-1]);
        assert_eq!(t.right_degrees(), vec![1]);
    }

    #[test]
    fn tensor_map_legs_through_embedding() {
        let map = EmbedMap::iota(1).unwrap();
        let lens = Arc::clone(map.source());
        let unit = TensorElement::unit(&lens);
        let t = unit.sandwich(
            &NcElement::generator(&lens, gens::C_S),
            &NcElement::generator(&lens, gens::C),
        );
        let push =
            |w: &NfWord| map.apply(&NcElement::monomial(&lens, *w, RatQ::one()));
        let pushed = t.map_legs(map.target(), push, push);
        assert_eq!(pushed.multiply_legs().to_string(), "1 - q^-2 * beta*betaS");
    }

    // ---- Parser and printer ----

    #[test]
    fn tight_star_binds_to_generator() {
        // "b*a" is (b*) times a = q^{-2l} a b*
        let x = wp_el(1, 2, "b*a");
        assert_eq!(x.to_string(), "q^-4 * a*bS");
    }

    #[test]
    fn spaced_star_is_multiplication() {
        let x = wp_el(1, 2, "b * a");
        assert_eq!(x.to_string(), "q^4 * a*b");
    }

    #[test]
    fn parse_rational_and_power_syntax() {
        let pres = Presentation::wp(1, 1).unwrap();
        let x = parse_expression(&pres, "3/2 q^-2 a^2 - (1 - q^2) b").unwrap();
        let three_halves = RatQ::from_rational(BigRational::new(3.into(), 2.into()));
        let expected = &NcElement::monomial(&pres, NfWord::Wp { a: 2, b: 0 }, RatQ::q_pow(-2))
            .scale(&three_halves)
            - &NcElement::monomial(
                &pres,
                NfWord::Wp { a: 0, b: 1 },
                RatQ::from(&(LaurentPoly::one() - LaurentPoly::q_pow(2))),
            );
        assert_eq!(x, expected);
    }

    #[test]
    fn parse_errors_are_reported() {
        let pres = Presentation::wp(1, 1).unwrap();
        assert!(matches!(
            parse_expression(&pres, "alpha"),
            Err(crate::Error::UnknownGenerator(_))
        ));
        assert!(parse_expression(&pres, "a +").is_err());
        assert!(parse_expression(&pres, "").is_err());
        assert!(parse_expression(&pres, "a^-1").is_err());
        assert!(parse_expression(&pres, "(1 - q^2)^-1 a").is_ok());
    }

    #[test]
    fn input_form_round_trips_through_parser() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for pres in [
            Presentation::su2(1, 2).unwrap(),
            Presentation::wp(2, 3).unwrap(),
            Presentation::lens(2).unwrap(),
        ] {
            for _ in 0..25 {
                let w = pres.random_word(5, &mut rng);
                let x = NcElement::from_word(&pres, &w);
                let back = parse_expression(&pres, &x.input_form()).unwrap();
                assert_eq!(back, x, "round trip failed for {}", x.input_form());
            }
        }
    }

    #[test]
    fn division_by_constants_parses() {
        let pres = Presentation::wp(1, 1).unwrap();
        let x = parse_expression(&pres, "a / 2").unwrap();
        let half = RatQ::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(x, NcElement::generator(&pres, gens::A).scale(&half));
        let y = parse_expression(&pres, "(q^2 / (1 - q^2)) a").unwrap();
        assert_eq!(y.term_count(), 1);
        assert!(parse_expression(&pres, "a / b").is_err());
        assert!(parse_expression(&pres, "a / 0").is_err());
    }

    #[test]
    fn presentations_validate_weights() {
        assert!(Presentation::su2(2, 4).is_err());
        assert!(Presentation::wp(0, 1).is_err());
        assert!(Presentation::wp(2, 4).is_err());
        assert!(Presentation::lens(0).is_err());
        assert!(Presentation::su2(3, 5).is_ok());
    }

    #[test]
    fn mixed_presentation_arithmetic_panics_caught_by_eq() {
        let x = wp_el(1, 1, "a");
        let y = wp_el(1, 2, "a");
        assert_ne!(x, y);
    }
}
