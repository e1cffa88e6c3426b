//! The standard presentation of `VP_n`, the trivial-strand inclusion, and the
//! dictionary expressing `λ_{ij}` as words in `σ_i`, `ρ_i`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::word::{Alphabet, Generator, Letter, Word};

/// Generators and relators of `VP_n`.
///
/// Relators are kept as canonical representatives: two relators are the same
/// when one is a cyclic rotation of the other or of its inverse, and the
/// lexicographically least rotation is stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub n: usize,
    pub generators: Vec<[usize; 2]>,
    pub relators: Vec<Word>,
    /// Number of relators before deduplication, one per index tuple.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_relator_count: Option<usize>,
}

impl Presentation {
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::Lambda(self.n)
    }
}

/// Least rotation of `w` or `w^-1` under the letter order. `w` should be
/// cyclically reduced for the result to be meaningful.
pub fn canonical_relator(w: &Word) -> Word {
    let inv = w.invert();
    let mut best: Option<Vec<Letter>> = None;
    for cand in [w.letters(), inv.letters()] {
        let r = least_rotation(cand);
        let rotated: Vec<Letter> = cand[r..].iter().chain(&cand[..r]).copied().collect();
        if best.as_ref().is_none_or(|b| rotated < *b) {
            best = Some(rotated);
        }
    }
    Word::from_valid(w.alphabet(), best.unwrap_or_default())
}

/// Offset of the lexicographically least rotation (Booth's algorithm).
pub(crate) fn least_rotation<T: Ord + Copy>(s: &[T]) -> usize {
    let n = s.len() as isize;
    if n == 0 {
        return 0;
    }
    let at = |x: isize| s[(x % n) as usize];
    let mut f = vec![-1isize; 2 * n as usize];
    let mut k: isize = 0;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    (k % n) as usize
}

fn commutation_relator(n: usize, a: (usize, usize), b: (usize, usize)) -> Word {
    let x = Word::lambda(n, a.0, a.1).expect("valid index");
    let y = Word::lambda(n, b.0, b.1).expect("valid index");
    x.multiply(&y)
        .and_then(|w| w.multiply(&x.invert()))
        .and_then(|w| w.multiply(&y.invert()))
        .expect("same alphabet")
}

/// `λ_{ki} λ_{kj} λ_{ij} λ_{ki}^-1 λ_{kj}^-1 λ_{ij}^-1`.
fn mixed_relator(n: usize, i: usize, j: usize, k: usize) -> Word {
    let lhs = Word::lambdas(n, &[(k, i), (k, j), (i, j)]).expect("valid index");
    let rhs = Word::lambdas(n, &[(i, j), (k, j), (k, i)]).expect("valid index");
    lhs.multiply(&rhs.invert()).expect("same alphabet")
}

/// All relator words of `VP_n`, one per index tuple, before deduplication.
pub fn raw_relators(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    for &a in &pairs {
        for &b in &pairs {
            if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                out.push(commutation_relator(n, a, b));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i != j && j != k && i != k {
                    out.push(mixed_relator(n, i, j, k));
                }
            }
        }
    }
    out
}

/// Normalize and deduplicate, keeping first-occurrence order.
pub(crate) fn dedupe_relators(words: impl IntoIterator<Item = Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in words {
        let (core, _) = w.cyclic_core();
        if core.is_empty() {
            continue;
        }
        let c = canonical_relator(&core);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

pub fn vp_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidStrandCount {
            n,
            reason: "VP_n presentations need n >= 2",
        });
    }
    let alphabet = Alphabet::Lambda(n);
    let generators = alphabet
        .generators()
        .map(|g| match g {
            Generator::Lambda(i, j) => [i, j],
            _ => unreachable!(),
        })
        .collect();
    let raw = raw_relators(n);
    let raw_count = raw.len();
    Ok(Presentation {
        n,
        generators,
        relators: dedupe_relators(raw),
        raw_relator_count: Some(raw_count),
    })
}

/// `VP_n ↪ VP_{n+1}` by adding a trivial strand at the end.
pub fn include_trivial_strand(u: &Word) -> Result<Word> {
    match u.alphabet() {
        Alphabet::Lambda(n) => u.embed(Alphabet::Lambda(n + 1)),
        other => Err(Error::Invalid(format!(
            "trivial-strand inclusion needs a lambda word, got {other}"
        ))),
    }
}

/// Embed into `VP_m`, `m >= n`, by adding trivial strands at the end.
pub fn include_into(u: &Word, m: usize) -> Result<Word> {
    match u.alphabet() {
        Alphabet::Lambda(n) if n <= m => u.embed(Alphabet::Lambda(m)),
        other => Err(Error::Invalid(format!("cannot include {other} into lambda({m})"))),
    }
}

/// The defining braid word of `λ_{ij}` in `VB_n`:
/// `λ_{i,i+1} = ρ_i σ_i^-1`, `λ_{i+1,i} = σ_i^-1 ρ_i`, and for longer spans
/// the adjacent generator conjugated by `ρ_{j-1} ⋯ ρ_{i+1}`.
pub fn lambda_as_braid_word(i: usize, j: usize, n: usize) -> Result<Word> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(out_of_range("lambda index", format!("({i},{j}) in VP_{n}")));
    }
    let a = Alphabet::Braid(n);
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let sigma_inv = (Generator::Sigma(lo), -1);
    let rho = (Generator::Rho(lo), 1);
    let middle = if i < j { [rho, sigma_inv] } else { [sigma_inv, rho] };
    let mut raw: Vec<(Generator, i32)> = (lo + 1..hi).rev().map(|t| (Generator::Rho(t), 1)).collect();
    raw.extend(middle);
    raw.extend((lo + 1..hi).map(|t| (Generator::Rho(t), 1)));
    crate::word::reduce(a, raw)
}

/// Relators of the standard presentation of `VB_n`: braid relations,
/// symmetric-group relations, and the two mixed families.
pub fn vb_relators(n: usize) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount {
            n,
            reason: "VB_n relators need n >= 2",
        });
    }
    let a = Alphabet::Braid(n);
    let s = |i| (Generator::Sigma(i), 1);
    let r = |i| (Generator::Rho(i), 1);
    let inv = |(g, e): (Generator, i32)| (g, -e);
    let rel = |lhs: Vec<(Generator, i32)>, rhs: Vec<(Generator, i32)>| {
        let raw = lhs.into_iter().chain(rhs.into_iter().rev().map(inv));
        crate::word::reduce(a, raw)
    };
    let mut out = Vec::new();
    for i in 1..n {
        out.push(rel(vec![r(i), r(i)], vec![])?);
        for j in 1..n {
            if i + 1 < j {
                out.push(rel(vec![s(i), s(j)], vec![s(j), s(i)])?);
                out.push(rel(vec![r(i), r(j)], vec![r(j), r(i)])?);
            }
            if i.abs_diff(j) > 1 {
                out.push(rel(vec![s(i), r(j)], vec![r(j), s(i)])?);
            }
        }
        if i + 1 < n {
            out.push(rel(vec![s(i), s(i + 1), s(i)], vec![s(i + 1), s(i), s(i + 1)])?);
            out.push(rel(vec![r(i), r(i + 1), r(i)], vec![r(i + 1), r(i), r(i + 1)])?);
            out.push(rel(vec![r(i), r(i + 1), s(i)], vec![s(i + 1), r(i), r(i + 1)])?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force class key: every rotation of `w` and `w^-1`, sorted.
    fn brute_class(w: &Word) -> Vec<Vec<Letter>> {
        let mut all = Vec::new();
        for cand in [w.letters().to_vec(), w.invert().letters().to_vec()] {
            for r in 0..cand.len() {
                let mut v = cand[r..].to_vec();
                v.extend_from_slice(&cand[..r]);
                all.push(v);
            }
        }
        all.sort();
        all.dedup();
        all
    }

    fn brute_dedupe_count(n: usize) -> usize {
        let mut classes: Vec<Vec<Vec<Letter>>> = Vec::new();
        for w in raw_relators(n) {
            let c = brute_class(&w);
            if !classes.contains(&c) {
                classes.push(c);
            }
        }
        classes.len()
    }

    #[test]
    fn booth_matches_naive_least_rotation() {
        let samples: Vec<Vec<u8>> = vec![
            vec![],
            vec![1],
            vec![2, 1, 2, 1],
            vec![3, 1, 2, 1, 1, 3],
            vec![1, 1, 1],
            vec![5, 4, 3, 2, 1, 0, 0],
            vec![0, 1, 0, 0, 1, 0, 0, 1],
        ];
        for s in samples {
            if s.is_empty() {
                assert_eq!(least_rotation(&s), 0);
                continue;
            }
            let naive = (0..s.len()).map(|r| [&s[r..], &s[..r]].concat()).min().unwrap();
            let r = least_rotation(&s);
            assert_eq!([&s[r..], &s[..r]].concat(), naive, "{s:?}");
        }
    }

    #[test]
    fn vp2_is_free_of_rank_two() {
        let p = vp_presentation(2).unwrap();
        assert_eq!(p.generators, vec![[1, 2], [2, 1]]);
        assert!(p.relators.is_empty());
    }

    #[test]
    fn vp1_is_rejected() {
        assert!(vp_presentation(1).is_err());
        assert!(vp_presentation(0).is_err());
    }

    #[test]
    fn relator_counts_match_brute_force_dedupe() {
        // frozen from the brute-force oracle below
        let expected = [(3, 6), (4, 36), (5, 120)];
        for (n, count) in expected {
            let p = vp_presentation(n).unwrap();
            assert_eq!(brute_dedupe_count(n), count);
            assert_eq!(p.relators.len(), count, "n = {n}");
        }
        assert_eq!(vp_presentation(4).unwrap().raw_relator_count, Some(48));
    }

    #[test]
    fn relators_are_canonical_and_reduced() {
        for n in 2..=5 {
            let p = vp_presentation(n).unwrap();
            for r in &p.relators {
                assert!(!r.is_empty());
                assert_eq!(&canonical_relator(r), r);
                assert_eq!(r.cyclic_core().0.len(), r.len());
            }
        }
    }

    #[test]
    fn inclusion_preserves_letters() {
        let w = Word::lambda(2, 1, 2).unwrap();
        let e = include_trivial_strand(&w).unwrap();
        assert_eq!(e, Word::lambda(3, 1, 2).unwrap());
        let b = include_trivial_strand(&Word::lambda(2, 2, 1).unwrap()).unwrap();
        assert_eq!(b.to_string(), "l[2,1]");
        assert!(include_trivial_strand(&Word::identity(Alphabet::Lambda(2)))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn braid_dictionary_examples() {
        assert_eq!(lambda_as_braid_word(1, 2, 2).unwrap().to_string(), "r[1] s[1]^-1");
        assert_eq!(lambda_as_braid_word(2, 1, 2).unwrap().to_string(), "s[1]^-1 r[1]");
        assert_eq!(
            lambda_as_braid_word(1, 3, 3).unwrap().to_string(),
            "r[2] r[1] s[1]^-1 r[2]"
        );
        assert!(lambda_as_braid_word(1, 1, 3).is_err());
        assert!(lambda_as_braid_word(1, 4, 3).is_err());
    }

    #[test]
    fn vb_relator_families_present() {
        let rels = vb_relators(3).unwrap();
        let text: Vec<String> = rels.iter().map(|w| w.to_string()).collect();
        assert!(text.contains(&"r[1] r[2] s[1] r[2]^-1 r[1]^-1 s[2]^-1".to_string()));
        assert!(text.contains(&"s[1] s[2] s[1] s[2]^-1 s[1]^-1 s[2]^-1".to_string()));
    }
}
