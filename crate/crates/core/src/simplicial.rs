//! Face and degeneracy homomorphisms of the simplicial group `n ↦ VP_{n+1}`.
//!
//! Strands are 1-indexed and simplicial indices 0-indexed: `d_i` deletes
//! strand `i + 1` and `s_i` doubles strand `i + 1`. Both are defined on the
//! generators `λ_{k,l}` of `VP_n` and extended homomorphically.
//!
//! Two cases of the face table are repaired relative to the commonly quoted
//! version: `d_{l-1}(λ_{k,l}) = 1` (strand `l` is deleted) with
//! `d_i(λ_{k,l}) = λ_{k,l}` for `i > l - 1`, and `d_i(λ_{l,k}) = λ_{l-1,k-1}`
//! for `i < k - 1`. Both follow from strand deletion and are the only readings
//! compatible with `d_j s_j = id` and with the free-group representation.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::oracle::{equal, Budget, Verdict};
use crate::suite::{CheckRecord, SuiteReport};
use crate::word::{Alphabet, Generator, Homomorphism, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MapKind {
    Face,
    Degeneracy,
}

/// A face or degeneracy acting on `VP_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SimplicialMapSpec {
    pub kind: MapKind,
    pub index: usize,
    pub n: usize,
}

impl SimplicialMapSpec {
    pub fn face(index: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidStrandCount {
                n,
                reason: "faces act on VP_n with n >= 2",
            });
        }
        if index >= n {
            return Err(out_of_range("face index", format!("d_{index} on VP_{n}")));
        }
        Ok(SimplicialMapSpec {
            kind: MapKind::Face,
            index,
            n,
        })
    }

    pub fn degeneracy(index: usize, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidStrandCount {
                n,
                reason: "degeneracies act on VP_n with n >= 1",
            });
        }
        if index >= n {
            return Err(out_of_range("degeneracy index", format!("s_{index} on VP_{n}")));
        }
        Ok(SimplicialMapSpec {
            kind: MapKind::Degeneracy,
            index,
            n,
        })
    }

    pub fn target_strands(&self) -> usize {
        match self.kind {
            MapKind::Face => self.n - 1,
            MapKind::Degeneracy => self.n + 1,
        }
    }

    /// The homomorphism on the free group of the lambda alphabet.
    pub fn homomorphism(&self) -> Arc<Homomorphism> {
        static CACHE: OnceLock<RwLock<HashMap<SimplicialMapSpec, Arc<Homomorphism>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(h) = cache.read().expect("cache lock").get(self) {
            return h.clone();
        }
        let src = Alphabet::Lambda(self.n);
        let dst = Alphabet::Lambda(self.target_strands());
        let h = Homomorphism::from_fn(src, dst, |g| {
            let Generator::Lambda(a, b) = g else { unreachable!() };
            match self.kind {
                MapKind::Face => Ok(face_generator(self.n, self.index, a, b)),
                MapKind::Degeneracy => Ok(degeneracy_generator(self.n, self.index, a, b)),
            }
        })
        .expect("generator tables are well-formed");
        let h = Arc::new(h);
        cache.write().expect("cache lock").insert(*self, h.clone());
        h
    }
}

fn lam(n: usize, i: usize, j: usize) -> Word {
    Word::lambda(n, i, j).expect("table index in range")
}

fn lams(n: usize, pairs: &[(usize, usize)]) -> Word {
    Word::lambdas(n, pairs).expect("table index in range")
}

/// `d_i(λ_{a,b})` in `VP_{n-1}`.
pub(crate) fn face_generator(n: usize, i: usize, a: usize, b: usize) -> Word {
    let m = n - 1;
    let (k, l) = if a < b { (a, b) } else { (b, a) };
    let one = Word::identity(Alphabet::Lambda(m));
    let keep_order = |x: usize, y: usize| if a < b { lam(m, x, y) } else { lam(m, y, x) };
    if i < k - 1 {
        keep_order(k - 1, l - 1)
    } else if i == k - 1 {
        one
    } else if i < l - 1 {
        keep_order(k, l - 1)
    } else if i == l - 1 {
        one
    } else {
        keep_order(k, l)
    }
}

/// `s_i(λ_{a,b})` in `VP_{n+1}`.
pub(crate) fn degeneracy_generator(n: usize, i: usize, a: usize, b: usize) -> Word {
    let m = n + 1;
    if a < b {
        let (k, l) = (a, b);
        if i < k - 1 {
            lam(m, k + 1, l + 1)
        } else if i == k - 1 {
            lams(m, &[(k, l + 1), (k + 1, l + 1)])
        } else if i < l - 1 {
            lam(m, k, l + 1)
        } else if i == l - 1 {
            // λ_{k,l+1}^{λ_{1l} ⋯ λ_{k-1,l}} λ_{k,l}
            let conj: Vec<(usize, usize)> = (1..k).map(|t| (t, l)).collect();
            lam(m, k, l + 1)
                .conjugate(&lams(m, &conj))
                .and_then(|w| w.multiply(&lam(m, k, l)))
                .expect("same alphabet")
        } else {
            lam(m, k, l)
        }
    } else {
        let (l, k) = (a, b);
        if i < k - 1 {
            lam(m, l + 1, k + 1)
        } else if i == k - 1 {
            lams(m, &[(l + 1, k + 1), (l + 1, k)])
        } else if i < l - 1 {
            lam(m, l + 1, k)
        } else if i == l - 1 {
            // λ_{l,k} λ_{l+1,k}^{λ_{l1}^-1 ⋯ λ_{l,k-1}^-1}
            let conj = (1..k)
                .map(|t| lam(m, l, t).invert())
                .try_fold(Word::identity(Alphabet::Lambda(m)), |acc, w| acc.multiply(&w))
                .expect("same alphabet");
            lam(m, l + 1, k)
                .conjugate(&conj)
                .and_then(|w| lam(m, l, k).multiply(&w))
                .expect("same alphabet")
        } else {
            lam(m, l, k)
        }
    }
}

fn lambda_strands(u: &Word) -> Result<usize> {
    match u.alphabet() {
        Alphabet::Lambda(n) => Ok(n),
        other => Err(Error::Invalid(format!("expected a lambda word, got {other}"))),
    }
}

/// `d_i : VP_n → VP_{n-1}`, deleting strand `i + 1`.
pub fn face(i: usize, u: &Word) -> Result<Word> {
    let n = lambda_strands(u)?;
    SimplicialMapSpec::face(i, n)?.homomorphism().apply(u)
}

/// `s_i : VP_n → VP_{n+1}`, doubling strand `i + 1`.
pub fn degeneracy(i: usize, u: &Word) -> Result<Word> {
    let n = lambda_strands(u)?;
    SimplicialMapSpec::degeneracy(i, n)?.homomorphism().apply(u)
}

/// One of the five simplicial identities, instantiated at concrete indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i`, `i < j`
    FaceFace { i: usize, j: usize },
    /// `s_i s_j = s_{j+1} s_i`, `i <= j`
    DegenDegen { i: usize, j: usize },
    /// `d_i s_j = s_{j-1} d_i`, `i < j`
    FaceDegenLow { i: usize, j: usize },
    /// `d_j s_j = id`
    FaceDegenSame { j: usize },
    /// `d_{j+1} s_j = id`
    FaceDegenNext { j: usize },
    /// `d_i s_j = s_j d_{i-1}`, `i > j + 1`
    FaceDegenHigh { i: usize, j: usize },
}

impl Identity {
    /// All instances applicable to `VP_n` (simplicial dimension `n - 1`).
    pub fn instances(n: usize) -> Vec<Identity> {
        let m = n - 1;
        let mut out = Vec::new();
        if m >= 2 {
            for j in 0..=m {
                for i in 0..j {
                    out.push(Identity::FaceFace { i, j });
                }
            }
        }
        for j in 0..=m {
            for i in 0..=j {
                out.push(Identity::DegenDegen { i, j });
            }
        }
        for j in 0..=m {
            for i in 0..j {
                out.push(Identity::FaceDegenLow { i, j });
            }
            out.push(Identity::FaceDegenSame { j });
            out.push(Identity::FaceDegenNext { j });
            for i in j + 2..=m + 1 {
                out.push(Identity::FaceDegenHigh { i, j });
            }
        }
        out
    }

    /// Both sides evaluated on `u`.
    pub fn sides(&self, u: &Word) -> Result<(Word, Word)> {
        Ok(match *self {
            Identity::FaceFace { i, j } => (face(i, &face(j, u)?)?, face(j - 1, &face(i, u)?)?),
            Identity::DegenDegen { i, j } => (
                degeneracy(i, &degeneracy(j, u)?)?,
                degeneracy(j + 1, &degeneracy(i, u)?)?,
            ),
            Identity::FaceDegenLow { i, j } => (face(i, &degeneracy(j, u)?)?, degeneracy(j - 1, &face(i, u)?)?),
            Identity::FaceDegenSame { j } => (face(j, &degeneracy(j, u)?)?, u.clone()),
            Identity::FaceDegenNext { j } => (face(j + 1, &degeneracy(j, u)?)?, u.clone()),
            Identity::FaceDegenHigh { i, j } => (face(i, &degeneracy(j, u)?)?, degeneracy(j, &face(i - 1, u)?)?),
        })
    }

    pub fn label(&self) -> String {
        match *self {
            Identity::FaceFace { i, j } => format!("d{i} d{j} = d{} d{i}", j - 1),
            Identity::DegenDegen { i, j } => format!("s{i} s{j} = s{} s{i}", j + 1),
            Identity::FaceDegenLow { i, j } => format!("d{i} s{j} = s{} d{i}", j - 1),
            Identity::FaceDegenSame { j } => format!("d{j} s{j} = id"),
            Identity::FaceDegenNext { j } => format!("d{} s{j} = id", j + 1),
            Identity::FaceDegenHigh { i, j } => format!("d{i} s{j} = s{j} d{}", i - 1),
        }
    }
}

/// Check every simplicial identity on every generator of `VP_n`,
/// `2 <= n <= max_n`.
pub fn verify_simplicial_identities(max_n: usize, budget: Budget) -> Result<SuiteReport> {
    if max_n < 2 {
        return Err(Error::InvalidStrandCount {
            n: max_n,
            reason: "the identity sweep needs max_n >= 2",
        });
    }
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        for g in Alphabet::Lambda(n).generators() {
            for id in Identity::instances(n) {
                jobs.push((n, g, id));
            }
        }
    }
    let records = crate::suite::run_checks(jobs, |(n, g, id)| {
        let u = Word::generator(Alphabet::Lambda(n), g)?;
        let (lhs, rhs) = id.sides(&u)?;
        let free = lhs == rhs;
        let verdict: Verdict = equal(&lhs, &rhs, budget)?;
        Ok(CheckRecord::new(format!("VP{n} {g}: {}", id.label()), verdict).with_free(free))
    })?;
    Ok(SuiteReport::new("simplicial", records))
}

/// Push every relator of `VP_n` through every face and degeneracy and check
/// that the image is trivial, `2 <= n <= max_n`.
pub fn verify_relator_images(max_n: usize, kinds: &[MapKind], budget: Budget) -> Result<SuiteReport> {
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        let pres = crate::presentation::vp_presentation(n)?;
        for (r_idx, r) in pres.relators.iter().enumerate() {
            for &kind in kinds {
                if kind == MapKind::Face && n < 3 {
                    continue;
                }
                for i in 0..n {
                    jobs.push((n, r_idx, r.clone(), kind, i));
                }
            }
        }
    }
    let records = crate::suite::run_checks(jobs, |(n, r_idx, r, kind, i)| {
        let (img, name) = match kind {
            MapKind::Face => (face(i, &r)?, "d"),
            MapKind::Degeneracy => (degeneracy(i, &r)?, "s"),
        };
        let verdict = crate::oracle::triviality(&img, budget)?;
        Ok(CheckRecord::new(format!("VP{n} relator #{r_idx}: {name}{i}"), verdict).with_free(img.is_empty()))
    })?;
    Ok(SuiteReport::new("relator-images", records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> Word {
        Word::parse(Alphabet::Lambda(n), s).unwrap()
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(0, &w(2, "l[1,2]")).unwrap(), w(3, "l[1,3] l[2,3]"));
        assert_eq!(degeneracy(1, &w(2, "l[1,2]")).unwrap(), w(3, "l[1,3] l[1,2]"));
        assert_eq!(
            degeneracy(2, &w(3, "l[2,3]")).unwrap(),
            w(4, "l[1,3]^-1 l[2,4] l[1,3] l[2,3]")
        );
        assert_eq!(degeneracy(0, &w(2, "l[2,1]")).unwrap(), w(3, "l[3,2] l[3,1]"));
    }

    #[test]
    fn face_examples() {
        assert_eq!(face(1, &w(3, "l[1,3]")).unwrap(), w(2, "l[1,2]"));
        assert!(face(0, &w(3, "l[1,2]")).unwrap().is_empty());
        assert!(face(2, &w(3, "l[1,3]")).unwrap().is_empty());
        assert_eq!(face(1, &w(3, "l[3,1]")).unwrap(), w(2, "l[2,1]"));
        assert!(face(0, &w(2, "l[1,2] l[2,1]")).unwrap().is_empty());
    }

    #[test]
    fn index_errors() {
        assert!(face(3, &w(3, "l[1,2]")).is_err());
        assert!(degeneracy(2, &w(2, "l[1,2]")).is_err());
        assert!(SimplicialMapSpec::face(0, 1).is_err());
    }

    #[test]
    fn identity_examples() {
        let u = w(2, "l[1,2]");
        assert_eq!(Identity::FaceDegenSame { j: 0 }.sides(&u).unwrap().0, u);
        assert_eq!(Identity::FaceDegenNext { j: 0 }.sides(&u).unwrap().0, u);
        let (l, r) = Identity::DegenDegen { i: 0, j: 0 }.sides(&u).unwrap();
        assert_eq!(l, r);
    }

    /// Faces agree with deleting a strand in the free-group picture:
    /// `q_i ∘ rep_n(λ) = rep_{n-1}(d_i λ) ∘ q_i` on every basis letter.
    #[test]
    fn face_matches_strand_deletion_in_representation() {
        use crate::oracle::{basis_retraction, rep};
        for n in 3..=5 {
            for g in Alphabet::Lambda(n).generators() {
                let u = Word::generator(Alphabet::Lambda(n), g).unwrap();
                let a = rep(&u).unwrap();
                for i in 0..n {
                    let q = basis_retraction(n, i).unwrap();
                    let b = rep(&face(i, &u).unwrap()).unwrap();
                    for x in 0..n {
                        let lhs = q.apply(a.image(x)).unwrap();
                        let qx = q.image(x);
                        let rhs = b.apply(qx).unwrap();
                        assert_eq!(lhs, rhs, "VP{n} {g} d{i} x{}", x + 1);
                    }
                }
            }
        }
    }
}
