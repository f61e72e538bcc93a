use proptest::prelude::*;

use freewidth::autos::{extract_conjugator, tau, theta_aut};
use freewidth::palindromes::{is_palindrome, palindromize, retract, theta};
use freewidth::quasihom::{delta, delta_defect};
use freewidth::whitehead::{
    cyclic_reduce, enumerate_whitehead_autos, is_primitive, minimize, WhiteheadAut,
};
use freewidth::words::{Letter, Rank, Sign, Word};

fn arb_letter(rank: u32) -> impl Strategy<Value = Letter> {
    (1..=rank, prop::bool::ANY).prop_map(|(gen, neg)| {
        Letter::new(gen, if neg { Sign::Minus } else { Sign::Plus }).unwrap()
    })
}

fn arb_word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(arb_letter(rank), 0..=max_len)
        .prop_map(move |ls| Word::reduce(Rank::new(rank).unwrap(), ls).unwrap())
}

fn arb_whitehead(rank: u32) -> impl Strategy<Value = WhiteheadAut> {
    let autos = enumerate_whitehead_autos(Rank::new(rank).unwrap());
    let n = autos.len();
    (0..n).prop_map(move |i| autos[i].clone())
}

proptest! {
    #[test]
    fn reduction_is_idempotent(w in arb_word(3, 24)) {
        let again = Word::reduce(w.rank(), w.letters().iter().copied()).unwrap();
        prop_assert_eq!(again, w);
    }

    #[test]
    fn inversion_is_an_involution(w in arb_word(3, 24)) {
        prop_assert_eq!(w.invert().invert(), w);
    }

    #[test]
    fn reversal_is_an_involution(w in arb_word(3, 24)) {
        prop_assert_eq!(w.reverse().reverse(), w);
    }

    #[test]
    fn theta_is_reverse_of_inverse(w in arb_word(3, 24)) {
        prop_assert_eq!(theta(&w), w.invert().reverse());
        prop_assert_eq!(theta(&theta(&w)), w);
    }

    #[test]
    fn multiplication_is_associative(
        u in arb_word(3, 16),
        v in arb_word(3, 16),
        w in arb_word(3, 16),
    ) {
        let left = u.multiply(&v).unwrap().multiply(&w).unwrap();
        let right = u.multiply(&v.multiply(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inversion_reverses_products(u in arb_word(3, 16), v in arb_word(3, 16)) {
        let lhs = u.multiply(&v).unwrap().invert();
        let rhs = v.invert().multiply(&u.invert()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn syllables_round_trip(w in arb_word(3, 24)) {
        let syls: Vec<(u32, i64)> = w.syllables().iter().map(|s| (s.gen, s.exponent)).collect();
        prop_assert_eq!(Word::from_syllables(w.rank(), &syls).unwrap(), w);
    }

    #[test]
    fn syllable_count_is_subadditive(u in arb_word(3, 16), v in arb_word(3, 16)) {
        let product = u.multiply(&v).unwrap();
        prop_assert!(product.syllable_count() <= u.syllable_count() + v.syllable_count());
    }

    #[test]
    fn delta_is_antisymmetric(w in arb_word(3, 32)) {
        prop_assert_eq!(delta(&w) + delta(&w.invert()), 0);
    }

    #[test]
    fn delta_defect_is_within_six(u in arb_word(3, 24), v in arb_word(3, 24)) {
        prop_assert!(delta_defect(&u, &v).unwrap().abs() <= 6);
    }

    #[test]
    fn palindromized_words_are_palindromes(u in arb_word(2, 12), g in 1..=2u32) {
        let empty = Word::identity(u.rank());
        let single = Word::generator(u.rank(), g).unwrap();
        for center in [&empty, &single] {
            let p = palindromize(&u, center).unwrap();
            prop_assert!(is_palindrome(&p));
            prop_assert_eq!(delta(&p), 0);
        }
    }

    #[test]
    fn palindromes_are_theta_inverses(w in arb_word(3, 20)) {
        prop_assert_eq!(is_palindrome(&w), theta(&w) == w.invert());
    }

    #[test]
    fn retraction_kills_and_preserves_palindromes(u in arb_word(3, 12)) {
        let p = palindromize(&u, &Word::identity(u.rank())).unwrap();
        let r = retract(&p, &[2]).unwrap();
        prop_assert!(r.letters().iter().all(|l| l.gen() != 2));
        prop_assert!(is_palindrome(&r));
    }

    #[test]
    fn whitehead_autos_round_trip(w in arb_word(3, 20), a in arb_whitehead(3)) {
        let image = a.apply(&w).unwrap();
        prop_assert_eq!(a.inverse().apply(&image).unwrap(), w);
    }

    #[test]
    fn cyclic_reduction_recovers_its_word(w in arb_word(3, 24)) {
        let (core, conj) = cyclic_reduce(&w);
        prop_assert!(
            core.is_empty()
                || core.len() < 2
                || !core.letters()[0].is_inverse_of(*core.letters().last().unwrap())
        );
        let back = conj
            .multiply(&core)
            .unwrap()
            .multiply(&conj.invert())
            .unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn minimization_never_grows_the_core(w in arb_word(3, 20)) {
        let (m, trace) = minimize(&w);
        prop_assert!(cyclic_reduce(&m).0.len() <= cyclic_reduce(&w).0.len());
        // Replaying the trace reproduces the minimum exactly.
        let mut cur = w.clone();
        for a in &trace {
            cur = a.apply(&cur).unwrap();
        }
        prop_assert_eq!(cur, m);
    }

    #[test]
    fn primitivity_is_an_automorphism_invariant(w in arb_word(2, 14), a in arb_whitehead(2)) {
        let image = a.apply(&w).unwrap();
        prop_assert_eq!(is_primitive(&image), is_primitive(&w));
    }

    #[test]
    fn conjugation_extraction_round_trips(w in arb_word(2, 14)) {
        let inner = tau(&w);
        prop_assert_eq!(extract_conjugator(&inner), Some(w));
    }

    #[test]
    fn theta_automorphism_matches_word_theta(w in arb_word(3, 20)) {
        let th = theta_aut(w.rank());
        prop_assert_eq!(th.apply(&w).unwrap(), theta(&w));
    }
}
