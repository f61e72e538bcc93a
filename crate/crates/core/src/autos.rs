//! General automorphisms of the free group, kept as factored products of
//! elementary pieces (Whitehead automorphisms and inner conjugations) with
//! cached generator images. Only factored construction is exposed, so every
//! value is invertible by reversing and inverting its factor list.
//!
//! Composition convention, used everywhere: `a.compose(&b)` acts as
//! *a after b*, i.e. `a.compose(&b).apply(w) = a.apply(b.apply(w))`.

use std::fmt;

use thiserror::Error;

use crate::whitehead::{cyclic_reduce, WhiteheadAut};
use crate::words::{Rank, Sign, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutoError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("operation requires rank 2, got {rank}")]
    RankNotTwo { rank: u32 },
    #[error("conjugator extraction failed: automorphism is not inner")]
    NotInner,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// One factor of an [`Automorphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryAut {
    Whitehead(WhiteheadAut),
    /// Conjugation `g ↦ w·g·w⁻¹`.
    Inner(Word),
}

impl ElementaryAut {
    pub fn rank(&self) -> Rank {
        match self {
            ElementaryAut::Whitehead(a) => a.rank(),
            ElementaryAut::Inner(w) => w.rank(),
        }
    }

    pub fn inverse(&self) -> ElementaryAut {
        match self {
            ElementaryAut::Whitehead(a) => ElementaryAut::Whitehead(a.inverse()),
            ElementaryAut::Inner(w) => ElementaryAut::Inner(w.invert()),
        }
    }

    fn apply_to(&self, w: &Word) -> Word {
        match self {
            ElementaryAut::Whitehead(a) => a.apply(w).expect("factor rank matches"),
            ElementaryAut::Inner(c) => c
                .multiply(w)
                .and_then(|t| t.multiply(&c.invert()))
                .expect("factor rank matches"),
        }
    }
}

/// An automorphism as an ordered factor list (`factors[0]` acts first) with
/// the generator images cached. The cache always equals the factor replay;
/// [`Automorphism::audit`] rechecks that.
#[derive(Debug, Clone)]
pub struct Automorphism {
    rank: Rank,
    factors: Vec<ElementaryAut>,
    images: Vec<Word>,
}

fn replay_images(rank: Rank, factors: &[ElementaryAut]) -> Vec<Word> {
    (1..=rank.get())
        .map(|g| {
            let mut img = Word::generator(rank, g).expect("valid generator");
            for f in factors {
                img = f.apply_to(&img);
            }
            img
        })
        .collect()
}

impl Automorphism {
    pub fn identity(rank: Rank) -> Automorphism {
        Automorphism {
            rank,
            factors: Vec::new(),
            images: replay_images(rank, &[]),
        }
    }

    pub fn from_elementary(factor: ElementaryAut) -> Automorphism {
        let rank = factor.rank();
        let factors = vec![factor];
        let images = replay_images(rank, &factors);
        Automorphism {
            rank,
            factors,
            images,
        }
    }

    pub fn from_factors(rank: Rank, factors: Vec<ElementaryAut>) -> Result<Automorphism, AutoError> {
        for f in &factors {
            if f.rank() != rank {
                return Err(AutoError::RankMismatch {
                    left: rank.get(),
                    right: f.rank().get(),
                });
            }
        }
        let images = replay_images(rank, &factors);
        Ok(Automorphism {
            rank,
            factors,
            images,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn factors(&self) -> &[ElementaryAut] {
        &self.factors
    }

    /// Images of `x1, …, xn`, in order.
    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Extensional equality: same rank and same generator images (the
    /// factorizations may differ).
    pub fn same_map_as(&self, other: &Automorphism) -> bool {
        self.rank == other.rank && self.images == other.images
    }

    /// Substitute generator images and reduce.
    pub fn apply(&self, w: &Word) -> Result<Word, AutoError> {
        if w.rank() != self.rank {
            return Err(AutoError::RankMismatch {
                left: self.rank.get(),
                right: w.rank().get(),
            });
        }
        let mut letters = Vec::new();
        for l in w.letters() {
            let img = &self.images[(l.gen() - 1) as usize];
            match l.sign() {
                Sign::Plus => letters.extend_from_slice(img.letters()),
                Sign::Minus => letters.extend(img.letters().iter().rev().map(|x| x.inverse())),
            }
        }
        Ok(Word::reduce(self.rank, letters)?)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism, AutoError> {
        if self.rank != other.rank {
            return Err(AutoError::RankMismatch {
                left: self.rank.get(),
                right: other.rank.get(),
            });
        }
        let mut factors = other.factors.clone();
        factors.extend(self.factors.iter().cloned());
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Automorphism {
            rank: self.rank,
            factors,
            images,
        })
    }

    pub fn inverse(&self) -> Automorphism {
        let factors: Vec<ElementaryAut> =
            self.factors.iter().rev().map(ElementaryAut::inverse).collect();
        let images = replay_images(self.rank, &factors);
        Automorphism {
            rank: self.rank,
            factors,
            images,
        }
    }

    /// Recompute the images from the factor list and compare with the cache.
    pub fn audit(&self) -> bool {
        replay_images(self.rank, &self.factors) == self.images
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if img.is_empty() {
                write!(f, "x{} -> 1", i + 1)?;
            } else {
                write!(f, "x{} -> {img}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// The involution sending every generator to its inverse.
pub fn theta_aut(rank: Rank) -> Automorphism {
    let aut = WhiteheadAut::type_i(
        rank,
        (1..=rank.get()).collect(),
        vec![true; rank.get() as usize],
    )
    .expect("identity permutation with all inversions is valid");
    Automorphism::from_elementary(ElementaryAut::Whitehead(aut))
}

/// The rank-2 Nielsen map `x1 ↦ x1, x2 ↦ x1x2`.
pub fn nielsen_u() -> Automorphism {
    let rank = Rank::new(2).expect("2 is a valid rank");
    let x1_inv = crate::words::Letter::new(1, Sign::Minus).expect("generator 1");
    let x2_inv = crate::words::Letter::new(2, Sign::Minus).expect("generator 2");
    let aut = WhiteheadAut::type_ii(rank, x1_inv, [x1_inv, x2_inv].into())
        .expect("the Nielsen multiplier move is valid");
    Automorphism::from_elementary(ElementaryAut::Whitehead(aut))
}

/// The inner automorphism `g ↦ w·g·w⁻¹`.
pub fn tau(w: &Word) -> Automorphism {
    if w.is_empty() {
        Automorphism::identity(w.rank())
    } else {
        Automorphism::from_elementary(ElementaryAut::Inner(w.clone()))
    }
}

/// If `φ = τ_p` for some word `p`, recover it; `None` otherwise.
///
/// `φ(x1)` must cyclically reduce to exactly `x1` — that pins `p` to the
/// coset `r·⟨x1⟩` of the peeled conjugator `r` — and a bounded scan of the
/// `x1`-offset then checks `φ(x2)` and finally all generators. For an inner
/// `τ_{r·x1^m}`, `φ(x2)` is reduced as written, of length `2(|r|+|m|)+1`,
/// so the scan bound `len(φ(x2)) + 2` is never the reason a genuine
/// conjugator is missed. At rank 1 every inner automorphism is the
/// identity, and the extracted conjugator is normalized to the empty word.
pub fn extract_conjugator(phi: &Automorphism) -> Option<Word> {
    let rank = phi.rank();
    let x1 = Word::generator(rank, 1).expect("rank is at least 1");
    if rank.get() == 1 {
        return (phi.images()[0] == x1).then(|| Word::identity(rank));
    }
    let (core, r) = cyclic_reduce(&phi.images()[0]);
    if core != x1 {
        return None;
    }
    let img2 = &phi.images()[1];
    let x2 = Word::generator(rank, 2).expect("rank is at least 2");
    let bound = img2.len() as i64 + 2;
    for m in -bound..=bound {
        // r never ends in x1^{±1}, so r·x1^m is reduced as written.
        let p = r.multiply(&x1_power(rank, m)).expect("same rank");
        if conjugate_by(&p, &x2) == *img2 && is_tau_of(phi, &p) {
            return Some(p);
        }
    }
    None
}

fn x1_power(rank: Rank, m: i64) -> Word {
    if m == 0 {
        Word::identity(rank)
    } else {
        Word::from_syllables(rank, &[(1, m)]).expect("nonzero exponent")
    }
}

fn conjugate_by(p: &Word, g: &Word) -> Word {
    p.multiply(g)
        .and_then(|t| t.multiply(&p.invert()))
        .expect("same rank")
}

fn is_tau_of(phi: &Automorphism, p: &Word) -> bool {
    (1..=phi.rank().get()).all(|g| {
        let xg = Word::generator(phi.rank(), g).expect("valid generator");
        conjugate_by(p, &xg) == phi.images()[(g - 1) as usize]
    })
}

/// The palindromic defect word of a rank-2 automorphism σ: the conjugator
/// `p` with `σ∘θ∘σ⁻¹∘θ = τ_p`. The composite fixes the abelianization, so
/// it is always inner; extraction failure therefore signals a broken
/// invariant, not bad input. The result is always a palindrome: conjugating
/// the composite by θ inverts it, forcing `theta(p) = p⁻¹`.
pub fn p_of_sigma(sigma: &Automorphism) -> Result<Word, AutoError> {
    if sigma.rank().get() != 2 {
        return Err(AutoError::RankNotTwo {
            rank: sigma.rank().get(),
        });
    }
    let th = theta_aut(sigma.rank());
    let j = sigma
        .compose(&th)?
        .compose(&sigma.inverse())?
        .compose(&th)?;
    extract_conjugator(&j).ok_or(AutoError::NotInner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palindromes::{is_palindrome, theta};

    fn r(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn w(rank: u32, syllables: &[(u32, i64)]) -> Word {
        Word::from_syllables(r(rank), syllables).unwrap()
    }

    #[test]
    fn theta_aut_matches_the_word_involution() {
        let th = theta_aut(r(2));
        assert_eq!(th.apply(&w(2, &[(1, 1)])).unwrap(), w(2, &[(1, -1)]));
        assert!(th.compose(&th).unwrap().same_map_as(&Automorphism::identity(r(2))));
        for v in [
            w(2, &[(1, 1), (2, 1)]),
            w(2, &[(1, 2), (2, -3), (1, 1)]),
            Word::identity(r(2)),
        ] {
            assert_eq!(th.apply(&v).unwrap(), theta(&v));
        }
    }

    #[test]
    fn nielsen_u_images_and_roundtrip() {
        let u = nielsen_u();
        assert_eq!(u.images(), &[w(2, &[(1, 1)]), w(2, &[(1, 1), (2, 1)])]);
        assert_eq!(u.apply(&w(2, &[(2, 1)])).unwrap(), w(2, &[(1, 1), (2, 1)]));
        assert_eq!(u.apply(&w(2, &[(1, 1)])).unwrap(), w(2, &[(1, 1)]));
        let round = u.inverse().compose(&u).unwrap();
        assert!(round.same_map_as(&Automorphism::identity(r(2))));
        for v in [w(2, &[(1, 1), (2, -2), (1, 3)]), w(2, &[(2, 5)])] {
            assert_eq!(round.apply(&v).unwrap(), v);
        }
    }

    #[test]
    fn tau_is_conjugation() {
        assert!(tau(&Word::identity(r(2))).same_map_as(&Automorphism::identity(r(2))));
        let t = tau(&w(2, &[(1, 1)]));
        assert_eq!(
            t.apply(&w(2, &[(2, 1)])).unwrap(),
            w(2, &[(1, 1), (2, 1), (1, -1)])
        );
        let a = w(2, &[(1, 1), (2, 1)]);
        let b = w(2, &[(2, -2)]);
        let combined = tau(&a).compose(&tau(&b)).unwrap();
        assert!(combined.same_map_as(&tau(&a.multiply(&b).unwrap())));
    }

    #[test]
    fn composition_convention_is_self_after_other() {
        let u = nielsen_u();
        let th = theta_aut(r(2));
        let samples = [w(2, &[(1, 1), (2, 1)]), w(2, &[(2, -1), (1, 2)])];
        let c = u.compose(&th).unwrap();
        for v in samples {
            assert_eq!(c.apply(&v).unwrap(), u.apply(&th.apply(&v).unwrap()).unwrap());
        }
    }

    #[test]
    fn factored_inverse_round_trips() {
        let sigma = nielsen_u()
            .compose(&theta_aut(r(2)))
            .unwrap()
            .compose(&tau(&w(2, &[(1, 1), (2, 1)])))
            .unwrap();
        assert!(sigma.audit());
        let inv = sigma.inverse();
        assert!(inv.audit());
        assert!(sigma
            .compose(&inv)
            .unwrap()
            .same_map_as(&Automorphism::identity(r(2))));
        for v in [w(2, &[(1, 1), (2, 2), (1, -3)]), Word::identity(r(2))] {
            assert_eq!(inv.apply(&sigma.apply(&v).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let th2 = theta_aut(r(2));
        let th3 = theta_aut(r(3));
        assert!(matches!(
            th2.compose(&th3),
            Err(AutoError::RankMismatch { .. })
        ));
        assert!(matches!(
            th2.apply(&w(3, &[(1, 1)])),
            Err(AutoError::RankMismatch { .. })
        ));
        assert!(matches!(
            Automorphism::from_factors(r(3), vec![ElementaryAut::Inner(w(2, &[(1, 1)]))]),
            Err(AutoError::RankMismatch { .. })
        ));
    }

    #[test]
    fn extract_conjugator_round_trips_tau() {
        for v in [
            Word::identity(r(2)),
            w(2, &[(1, 1)]),
            w(2, &[(2, 1), (1, 1)]),
            w(2, &[(1, -2), (2, 3), (1, 1)]),
            w(3, &[(3, 1), (1, -1), (2, 2)]),
        ] {
            assert_eq!(extract_conjugator(&tau(&v)), Some(v));
        }
    }

    #[test]
    fn extract_conjugator_rejects_non_inner() {
        assert_eq!(extract_conjugator(&theta_aut(r(2))), None);
        assert_eq!(extract_conjugator(&nielsen_u()), None);
    }

    #[test]
    fn extract_conjugator_at_rank_one_normalizes() {
        assert_eq!(
            extract_conjugator(&tau(&w(1, &[(1, 5)]))),
            Some(Word::identity(r(1)))
        );
        assert_eq!(extract_conjugator(&theta_aut(r(1))), None);
    }

    #[test]
    fn literal_theta_u_theta_uinv_composite() {
        // Applying U⁻¹ first and θ last conjugates by x1⁻¹; the reverse
        // application order (see p_of_sigma) conjugates by x1.
        let th = theta_aut(r(2));
        let u = nielsen_u();
        let literal = th
            .compose(&u)
            .unwrap()
            .compose(&th)
            .unwrap()
            .compose(&u.inverse())
            .unwrap();
        assert_eq!(extract_conjugator(&literal), Some(w(2, &[(1, -1)])));
    }

    #[test]
    fn p_of_sigma_examples() {
        assert_eq!(
            p_of_sigma(&Automorphism::identity(r(2))).unwrap(),
            Word::identity(r(2))
        );
        assert_eq!(p_of_sigma(&nielsen_u()).unwrap(), w(2, &[(1, 1)]));
        assert_eq!(p_of_sigma(&theta_aut(r(2))).unwrap(), Word::identity(r(2)));
        assert!(matches!(
            p_of_sigma(&theta_aut(r(3))),
            Err(AutoError::RankNotTwo { rank: 3 })
        ));
    }

    #[test]
    fn p_of_sigma_is_a_palindrome_on_composites() {
        let th = theta_aut(r(2));
        let u = nielsen_u();
        let samples = [
            u.clone(),
            u.compose(&u).unwrap(),
            u.compose(&th).unwrap(),
            th.compose(&u.inverse()).unwrap(),
            tau(&w(2, &[(1, 1), (2, 1)])).compose(&u).unwrap(),
            u.compose(&tau(&w(2, &[(2, -1), (1, 2)]))).unwrap(),
        ];
        for sigma in samples {
            let p = p_of_sigma(&sigma).unwrap();
            assert!(is_palindrome(&p), "p({sigma}) = {p}");
        }
    }

    #[test]
    fn p_cocycle_against_the_nielsen_step() {
        // p(σ∘U) = σ(x1)·p(σ): the Nielsen step multiplies the defect word
        // on the left by the image of x1.
        let th = theta_aut(r(2));
        let u = nielsen_u();
        let samples = [
            Automorphism::identity(r(2)),
            u.clone(),
            th.clone(),
            u.compose(&th).unwrap(),
            tau(&w(2, &[(1, 1), (2, 1)])),
            u.compose(&u).unwrap().compose(&th).unwrap(),
        ];
        for sigma in samples {
            let left = p_of_sigma(&sigma.compose(&u).unwrap()).unwrap();
            let sigma_x1 = sigma.apply(&w(2, &[(1, 1)])).unwrap();
            let right = sigma_x1.multiply(&p_of_sigma(&sigma).unwrap()).unwrap();
            assert_eq!(left, right, "{sigma}");
        }
    }

    #[test]
    fn u_squared_has_defect_x1_squared() {
        let u = nielsen_u();
        let u2 = u.compose(&u).unwrap();
        assert_eq!(p_of_sigma(&u2).unwrap(), w(2, &[(1, 2)]));
    }
}
