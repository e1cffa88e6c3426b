//! The Artin-type action of `VB_n` on the free group `F_n`.
//!
//! `σ_i : x_i ↦ x_i x_{i+1} x_i^-1, x_{i+1} ↦ x_i`, `ρ_i : x_i ↔ x_{i+1}`.
//! Composition follows function composition: `rep(uv) = rep(u) ∘ rep(v)`, so
//! `rep(v)` acts on basis letters first.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{out_of_range, Error, Result};
use crate::presentation::lambda_as_braid_word;
use crate::word::{Alphabet, Generator, Homomorphism, Letter, Word};

/// An automorphism of `F_n` with certified inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    forward: Homomorphism,
    backward: Homomorphism,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> FreeAutomorphism {
        let a = Alphabet::FreeBasis(rank);
        let id = Homomorphism::from_fn(a, a, |g| Word::generator(a, g)).expect("identity");
        FreeAutomorphism {
            forward: id.clone(),
            backward: id,
        }
    }

    /// Build from basis images and claimed inverse images; both composites
    /// are checked to be the identity.
    pub fn new(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<FreeAutomorphism> {
        let rank = images.len();
        let a = Alphabet::FreeBasis(rank);
        let forward = Homomorphism::new(a, a, images)?;
        let backward = Homomorphism::new(a, a, inverse_images)?;
        let aut = FreeAutomorphism { forward, backward };
        let fb = aut.forward.compose(&aut.backward)?;
        let bf = aut.backward.compose(&aut.forward)?;
        for g in 0..rank {
            let x = Word::generator(a, a.generator(g))?;
            if fb.image(g) != &x || bf.image(g) != &x {
                return Err(Error::Invalid(format!(
                    "inverse images do not certify an automorphism (basis letter x[{}])",
                    g + 1
                )));
            }
        }
        Ok(aut)
    }

    pub fn rank(&self) -> usize {
        self.forward.source().strands()
    }

    pub fn image(&self, basis: usize) -> &Word {
        self.forward.image(basis)
    }

    pub fn inverse_image(&self, basis: usize) -> &Word {
        self.backward.image(basis)
    }

    pub fn images(&self) -> Vec<Word> {
        (0..self.rank()).map(|g| self.image(g).clone()).collect()
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        Ok(FreeAutomorphism {
            forward: self.forward.compose(&inner.forward)?,
            backward: inner.backward.compose(&self.backward)?,
        })
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.forward.apply(w)
    }

    /// First basis letter not fixed, if any.
    pub fn moved_basis_letter(&self) -> Option<usize> {
        (0..self.rank()).find(|&g| self.image(g).letters() != [Letter::new(g, false)])
    }

    pub fn is_identity(&self) -> bool {
        self.moved_basis_letter().is_none()
    }
}

fn x(n: usize, i: usize) -> Word {
    Word::generator(Alphabet::FreeBasis(n), Generator::X(i)).expect("basis index")
}

fn xs(n: usize, seq: &[(usize, bool)]) -> Word {
    let a = Alphabet::FreeBasis(n);
    Word::from_letters(a, seq.iter().map(|&(i, inv)| Letter::new(i - 1, inv))).expect("basis index")
}

/// Action of a single braid generator on `F_n`.
pub fn braid_rep(g: Generator, n: usize) -> Result<FreeAutomorphism> {
    let i = match g {
        Generator::Sigma(i) | Generator::Rho(i) => i,
        other => return Err(Error::Invalid(format!("{other} is not a braid generator"))),
    };
    if i == 0 || i >= n {
        return Err(out_of_range("braid generator", format!("{g} in VB_{n}")));
    }
    let basis: Vec<Word> = (1..=n).map(|t| x(n, t)).collect();
    let mut fwd = basis.clone();
    let mut bwd = basis;
    match g {
        Generator::Sigma(_) => {
            fwd[i - 1] = xs(n, &[(i, false), (i + 1, false), (i, true)]);
            fwd[i] = x(n, i);
            bwd[i - 1] = x(n, i + 1);
            bwd[i] = xs(n, &[(i + 1, true), (i, false), (i + 1, false)]);
        }
        _ => {
            fwd.swap(i - 1, i);
            bwd.swap(i - 1, i);
        }
    }
    FreeAutomorphism::new(fwd, bwd)
}

type LambdaCache = RwLock<HashMap<(usize, usize, usize), Arc<FreeAutomorphism>>>;

fn lambda_rep(n: usize, i: usize, j: usize) -> Result<Arc<FreeAutomorphism>> {
    static CACHE: OnceLock<LambdaCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.read().expect("cache lock").get(&(n, i, j)) {
        return Ok(a.clone());
    }
    let a = Arc::new(rep(&lambda_as_braid_word(i, j, n)?)?);
    cache.write().expect("cache lock").insert((n, i, j), a.clone());
    Ok(a)
}

/// Representation of a lambda or braid word.
pub fn rep(u: &Word) -> Result<FreeAutomorphism> {
    let n = u.alphabet().strands();
    let mut letter_reps: HashMap<(Generator, bool), FreeAutomorphism> = HashMap::new();
    let mut acc = FreeAutomorphism::identity(n);
    for (g, e) in u.syllables() {
        let image = match letter_reps.entry((g, e < 0)) {
            Entry::Occupied(o) => o.into_mut(),
            Entry::Vacant(v) => {
                let base = match (u.alphabet(), g) {
                    (Alphabet::Braid(_), _) => braid_rep(g, n)?,
                    (Alphabet::Lambda(_), Generator::Lambda(i, j)) => (*lambda_rep(n, i, j)?).clone(),
                    (a, _) => return Err(Error::Invalid(format!("no representation for alphabet {a}"))),
                };
                v.insert(if e < 0 { base.inverse() } else { base })
            }
        };
        acc = acc.compose(image)?;
    }
    Ok(acc)
}

/// Kill `x_{i+1}` and shift higher basis letters down: `F_n → F_{n-1}`.
pub fn basis_retraction(n: usize, i: usize) -> Result<Homomorphism> {
    if i >= n {
        return Err(out_of_range("retraction index", format!("q_{i} on F_{n}")));
    }
    let src = Alphabet::FreeBasis(n);
    let dst = Alphabet::FreeBasis(n - 1);
    Homomorphism::from_fn(src, dst, |g| {
        let Generator::X(t) = g else { unreachable!() };
        if t == i + 1 {
            Ok(Word::identity(dst))
        } else if t <= i {
            Word::generator(dst, Generator::X(t))
        } else {
            Word::generator(dst, Generator::X(t - 1))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{vb_relators, vp_presentation};

    fn braid(n: usize, text: &str) -> Word {
        Word::parse(Alphabet::Braid(n), text).unwrap()
    }

    #[test]
    fn rho_is_an_involution() {
        let r = braid_rep(Generator::Rho(1), 2).unwrap();
        assert_eq!(r.image(0).to_string(), "x[2]");
        assert_eq!(r.image(1).to_string(), "x[1]");
        assert!(r.compose(&r).unwrap().is_identity());
    }

    #[test]
    fn sigma_images_and_inverse() {
        let s = braid_rep(Generator::Sigma(1), 2).unwrap();
        assert_eq!(s.image(0).to_string(), "x[1] x[2] x[1]^-1");
        assert_eq!(s.image(1).to_string(), "x[1]");
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert!(s.inverse().compose(&s).unwrap().is_identity());
    }

    #[test]
    fn braid_relation_holds_before_trusting_convention() {
        let lhs = rep(&braid(3, "s[1] s[2] s[1]")).unwrap();
        let rhs = rep(&braid(3, "s[2] s[1] s[2]")).unwrap();
        assert_eq!(lhs.images(), rhs.images());
    }

    #[test]
    fn lambda_12_fixes_one_letter_and_conjugates_the_other() {
        // frozen: rep(ρ_1) ∘ rep(σ_1)^-1
        let a = rep(&Word::lambda(2, 1, 2).unwrap()).unwrap();
        assert_eq!(a.image(0).to_string(), "x[1]");
        assert_eq!(a.image(1).to_string(), "x[1]^-1 x[2] x[1]");
        let b = rep(&Word::lambda(2, 2, 1).unwrap()).unwrap();
        assert_eq!(b.image(0).to_string(), "x[2]^-1 x[1] x[2]");
        assert_eq!(b.image(1).to_string(), "x[2]");
    }

    #[test]
    fn vb_and_vp_relators_act_trivially() {
        for n in 2..=5 {
            for r in vb_relators(n).unwrap() {
                assert!(rep(&r).unwrap().is_identity(), "VB_{n} relator {r}");
            }
            for r in vp_presentation(n).unwrap().relators {
                assert!(rep(&r).unwrap().is_identity(), "VP_{n} relator {r}");
            }
        }
    }

    #[test]
    fn bogus_inverse_is_rejected() {
        let n = 2;
        let fwd = vec![x(n, 1), x(n, 2)];
        let bwd = vec![x(n, 2), x(n, 1)];
        assert!(FreeAutomorphism::new(fwd, bwd).is_err());
    }

    #[test]
    fn out_of_range_generator() {
        assert!(braid_rep(Generator::Sigma(2), 2).is_err());
        assert!(braid_rep(Generator::X(1), 2).is_err());
    }
}
