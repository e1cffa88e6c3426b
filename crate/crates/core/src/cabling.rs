//! Cabling elements of `VP_n`.
//!
//! `a_{k,l}` and `b_{k,l}` live in `VP_{k+l}`. They are obtained from
//! `λ_{1,2}` and `λ_{2,1}` by the degeneracy program
//! `s_{n-1} ⋯ s_k ŝ_{k-1} s_{k-2} ⋯ s_0` with `n = k + l - 1`. The same
//! program applied to `c_{1,1} = λ_{1,2}^-1 λ_{2,1}^-1` gives `c_{k,l}`.
//! Elements living in a smaller group are embedded by adding trivial strands
//! at the end. Out-of-range boundary elements (`a_{0,l}`, `a_{k,0}`, and the
//! same for `b`, `c`) are the identity.

use std::fmt;

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::oracle::{equal, prove_trivial, transport_trace, triviality, Budget, Verdict};
use crate::presentation::{canonical_relator, include_into, vp_presentation};
use crate::simplicial::degeneracy;
use crate::suite::{run_checks, CheckRecord, SuiteReport};
use crate::word::{Alphabet, Word};

/// A word in degeneracies `s_{i_1} s_{i_2} ⋯ s_{i_r}`, applied right to left,
/// starting from simplicial dimension `source_dim` (the group `VP_{source_dim+1}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyProgram {
    pub source_dim: usize,
    pub indices: Vec<usize>,
}

impl DegeneracyProgram {
    pub fn new(source_dim: usize, indices: Vec<usize>) -> Result<Self> {
        for (dim, &i) in (source_dim..).zip(indices.iter().rev()) {
            if i > dim {
                return Err(out_of_range("degeneracy index", format!("s_{i} in dimension {dim}")));
            }
        }
        Ok(DegeneracyProgram { source_dim, indices })
    }

    pub fn target_dim(&self) -> usize {
        self.source_dim + self.indices.len()
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        if u.alphabet() != Alphabet::Lambda(self.source_dim + 1) {
            return Err(Error::AlphabetMismatch {
                left: u.alphabet(),
                right: Alphabet::Lambda(self.source_dim + 1),
            });
        }
        self.indices.iter().rev().try_fold(u.clone(), |w, &i| degeneracy(i, &w))
    }
}

impl fmt::Display for DegeneracyProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.indices.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `s_{n-1} ⋯ s_k ŝ_{k-1} s_{k-2} ⋯ s_0`, from dimension 1 to dimension `n`.
pub fn cabling_program(k: usize, n: usize) -> Result<DegeneracyProgram> {
    if n == 0 || k == 0 || k > n {
        return Err(out_of_range("cabling index", format!("k = {k}, n = {n}")));
    }
    DegeneracyProgram::new(1, (0..n).rev().filter(|&i| i != k - 1).collect())
}

fn check_kl(k: usize, l: usize) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(out_of_range("cabling index", format!("({k},{l}) needs k, l >= 1")));
    }
    Ok(())
}

fn cabled(k: usize, l: usize, seed: &Word) -> Result<Word> {
    check_kl(k, l)?;
    cabling_program(k, k + l - 1)?.apply(seed)
}

/// `a_{k,l} = s_{k+l-2} ⋯ ŝ_{k-1} ⋯ s_0 λ_{1,2}` in `VP_{k+l}`.
pub fn a_elem(k: usize, l: usize) -> Result<Word> {
    cabled(k, l, &Word::lambda(2, 1, 2)?)
}

/// `b_{k,l} = s_{k+l-2} ⋯ ŝ_{k-1} ⋯ s_0 λ_{2,1}` in `VP_{k+l}`.
pub fn b_elem(k: usize, l: usize) -> Result<Word> {
    cabled(k, l, &Word::lambda(2, 2, 1)?)
}

/// `c_{1,1} = a_{1,1}^-1 b_{1,1}^-1`.
pub fn c11() -> Word {
    Word::lambdas(2, &[(1, 2)])
        .and_then(|a| a.invert().multiply(&Word::lambda(2, 2, 1).expect("in range").invert()))
        .expect("same alphabet")
}

/// `c_{k,l}`: the cabling program applied to `c_{1,1}`.
pub fn c_elem(k: usize, l: usize) -> Result<Word> {
    cabled(k, l, &c11())
}

/// `a_{k,l}` from the recursion
/// `a_{k,l} = λ_{1,n} λ_{2,n} ⋯ λ_{k,n} · a_{k,l-1}`, `n = k + l`, `a_{k,0} = 1`.
pub fn a_closed(k: usize, l: usize) -> Result<Word> {
    check_kl(k, l)?;
    let n = k + l;
    let head = Word::lambdas(n, &(1..=k).map(|i| (i, n)).collect::<Vec<_>>())?;
    if l == 1 {
        return Ok(head);
    }
    head.multiply(&include_into(&a_closed(k, l - 1)?, n)?)
}

/// `b_{k,l}` from the recursion
/// `b_{k,l} = b_{k,l-1} · λ_{n,k} λ_{n,k-1} ⋯ λ_{n,1}`, `n = k + l`, `b_{k,0} = 1`.
pub fn b_closed(k: usize, l: usize) -> Result<Word> {
    check_kl(k, l)?;
    let n = k + l;
    let tail = Word::lambdas(n, &(1..=k).rev().map(|i| (n, i)).collect::<Vec<_>>())?;
    if l == 1 {
        return Ok(tail);
    }
    include_into(&b_closed(k, l - 1)?, n)?.multiply(&tail)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CablingFamily {
    A,
    B,
    C,
}

/// `a_{k,l}`, `b_{k,l}` or `c_{k,l}` embedded in `VP_n`, with the identity
/// when `k = 0` or `l = 0`.
pub fn boundary_elem(family: CablingFamily, k: usize, l: usize, n: usize) -> Result<Word> {
    if k == 0 || l == 0 {
        return Ok(Word::identity(Alphabet::Lambda(n)));
    }
    let w = match family {
        CablingFamily::A => a_elem(k, l)?,
        CablingFamily::B => b_elem(k, l)?,
        CablingFamily::C => c_elem(k, l)?,
    };
    include_into(&w, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `λ_{k,n}` from the `a` elements.
    Row,
    /// `λ_{n,k}` from the `b` elements.
    Column,
}

/// Reconstruct `λ_{k,n}` (row) or `λ_{n,k}` (column) from cabling elements:
///
/// `λ_{k,n} = a_{k-1,n-k} a_{k-1,n-k+1}^-1 a_{k,n-k} a_{k,n-k-1}^-1`,
/// `λ_{n,k} = b_{k,n-k-1}^-1 b_{k,n-k} b_{k-1,n-k+1}^-1 b_{k-1,n-k}`.
pub fn lambda_via_ab(k: usize, n: usize, variant: Variant) -> Result<Word> {
    if n < 2 || k == 0 || k >= n {
        return Err(out_of_range("reconstruction index", format!("k = {k}, n = {n}")));
    }
    match variant {
        Variant::Row => {
            let a = |p, q| boundary_elem(CablingFamily::A, p, q, n);
            Word::product(
                Alphabet::Lambda(n),
                &[
                    a(k - 1, n - k)?,
                    a(k - 1, n - k + 1)?.invert(),
                    a(k, n - k)?,
                    a(k, n - k - 1)?.invert(),
                ],
            )
        }
        Variant::Column => {
            let b = |p, q| boundary_elem(CablingFamily::B, p, q, n);
            Word::product(
                Alphabet::Lambda(n),
                &[
                    b(k, n - k - 1)?.invert(),
                    b(k, n - k)?,
                    b(k - 1, n - k + 1)?.invert(),
                    b(k - 1, n - k)?,
                ],
            )
        }
    }
}

/// `y_i = a_{i-1,n-i+1} a_{i,n-i}^-1` and `z_i = b_{i-1,n-i+1} b_{i,n-i}^-1`,
/// `1 <= i <= n`.
pub fn yz_elements(n: usize) -> Result<(Vec<Word>, Vec<Word>)> {
    if n < 2 {
        return Err(Error::InvalidStrandCount {
            n,
            reason: "y and z elements need n >= 2",
        });
    }
    let row = |fam| -> Result<Vec<Word>> {
        (1..=n)
            .map(|i| boundary_elem(fam, i - 1, n - i + 1, n)?.multiply(&boundary_elem(fam, i, n - i, n)?.invert()))
            .collect()
    };
    Ok((row(CablingFamily::A)?, row(CablingFamily::B)?))
}

/// `w_k = c_{k-1,n-k+1} c_{k,n-k}^-1` in `VP_n`.
pub fn w_elem(k: usize, n: usize) -> Result<Word> {
    if n < 2 || k == 0 || k > n {
        return Err(out_of_range("w index", format!("k = {k}, n = {n}")));
    }
    boundary_elem(CablingFamily::C, k - 1, n - k + 1, n)?
        .multiply(&boundary_elem(CablingFamily::C, k, n - k, n)?.invert())
}

/// Generators `a_{k,n-k}` then `b_{k,n-k}`, `1 <= k <= n-1`, of `T_{n-1} ≤ VP_n`.
pub fn t_generators(n: usize) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount {
            n,
            reason: "T_{n-1} needs n >= 2",
        });
    }
    let mut out: Vec<Word> = (1..n).map(|k| a_elem(k, n - k)).collect::<Result<_>>()?;
    for k in 1..n {
        out.push(b_elem(k, n - k)?);
    }
    Ok(out)
}

/// Relators of `VP_{n+1}` built from those of `VP_n`: the trivial-strand
/// copy of each relator together with its image under every `s_i`.
#[derive(Debug, Clone, Serialize)]
pub struct CabledRelators {
    pub n: usize,
    /// Relator words in `VP_{n+1}`, cyclically reduced, canonical, deduplicated.
    pub relators: Vec<Word>,
    /// Count before deduplication: `(n + 1) · |R(n)|`.
    pub raw_count: usize,
    /// Set when `n < 4`, below the range where the set is known to be complete.
    pub below_hypothesis: bool,
}

pub fn cabled_relators(n: usize) -> Result<CabledRelators> {
    let base = vp_presentation(n)?;
    let mut raw = Vec::new();
    for r in &base.relators {
        raw.push(include_into(r, n + 1)?);
        for i in 0..n {
            raw.push(degeneracy(i, r)?);
        }
    }
    let raw_count = raw.len();
    let mut seen = std::collections::HashSet::new();
    let mut relators = Vec::new();
    for w in raw {
        let (core, _) = w.cyclic_core();
        if core.is_empty() {
            continue;
        }
        let c = canonical_relator(&core);
        if seen.insert(c.clone()) {
            relators.push(c);
        }
    }
    Ok(CabledRelators {
        n,
        relators,
        raw_count,
        below_hypothesis: n < 4,
    })
}

/// `a_elem = a_closed`, `b_elem = b_closed` for `k + l = n`, and both
/// reconstruction formulas, for `2 <= n <= max_n`.
pub fn verify_cabling(max_n: usize, budget: Budget) -> Result<SuiteReport> {
    #[derive(Clone, Copy)]
    enum Job {
        Agree(CablingFamily, usize, usize),
        Rebuild(Variant, usize, usize),
    }
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            jobs.push(Job::Agree(CablingFamily::A, k, n - k));
            jobs.push(Job::Agree(CablingFamily::B, k, n - k));
        }
        for k in 1..n {
            jobs.push(Job::Rebuild(Variant::Row, k, n));
            jobs.push(Job::Rebuild(Variant::Column, k, n));
        }
    }
    let records = run_checks(jobs, |job| {
        let (id, lhs, rhs) = match job {
            Job::Agree(CablingFamily::A, k, l) => {
                (format!("a[{k},{l}] program = closed"), a_elem(k, l)?, a_closed(k, l)?)
            }
            Job::Agree(_, k, l) => (format!("b[{k},{l}] program = closed"), b_elem(k, l)?, b_closed(k, l)?),
            Job::Rebuild(Variant::Row, k, n) => (
                format!("l[{k},{n}] from a"),
                lambda_via_ab(k, n, Variant::Row)?,
                Word::lambda(n, k, n)?,
            ),
            Job::Rebuild(Variant::Column, k, n) => (
                format!("l[{n},{k}] from b"),
                lambda_via_ab(k, n, Variant::Column)?,
                Word::lambda(n, n, k)?,
            ),
        };
        let free = lhs == rhs;
        Ok(CheckRecord::new(id, equal(&lhs, &rhs, budget)?).with_free(free))
    })?;
    Ok(SuiteReport::new("cabling", records))
}

/// Pairwise commutators `[a_{k,n-k}, a_{l,n-l}]` and `[b_{k,n-k}, b_{l,n-l}]`,
/// `k < l`, in `VP_n` for `3 <= n <= max_n`.
pub fn verify_lemma_commuting(max_n: usize, budget: Budget) -> Result<SuiteReport> {
    let mut jobs = Vec::new();
    for n in 3..=max_n {
        for k in 1..n {
            for l in k + 1..n {
                jobs.push((CablingFamily::A, n, k, l));
                jobs.push((CablingFamily::B, n, k, l));
            }
        }
    }
    let records = run_checks(jobs, |(fam, n, k, l)| {
        let x = boundary_elem(fam, k, n - k, n)?;
        let y = boundary_elem(fam, l, n - l, n)?;
        let c = x.commutator(&y)?;
        let name = if fam == CablingFamily::A { "a" } else { "b" };
        let id = format!("VP{n} [{name}[{k},{}], {name}[{l},{}]]", n - k, n - l);
        let verdict = triviality(&c, budget)?;
        if verdict.is_unknown() {
            if let Some(v) = commuting_certificate(fam, n, k, l, budget)? {
                return Ok(CheckRecord::new(id, v)
                    .with_free(false)
                    .with_note("transported from VP3"));
            }
        }
        Ok(CheckRecord::new(id, verdict).with_free(c.is_empty()))
    })?;
    Ok(SuiteReport::new("lemma-commuting", records))
}

/// Degeneracies (first applied first) carrying the pair
/// `(x_{1,2}, x_{2,1})` of `VP_3` to `(x_{k,n-k}, x_{l,n-l})` in `VP_n`, for
/// `1 <= k < l <= n - 1`. In the sequence picture `x_{p,q} ↔ 0^p 1^q`, this
/// duplicates the three entries of `011` / `001` the right number of times.
pub fn commuting_pair_program(n: usize, k: usize, l: usize) -> Result<Vec<usize>> {
    if !(1 <= k && k < l && l < n) {
        return Err(out_of_range("commuting pair", format!("k = {k}, l = {l}, n = {n}")));
    }
    let mut out = vec![0; k - 1];
    out.extend(std::iter::repeat_n(k, l - k - 1));
    out.extend(std::iter::repeat_n(l, n - l - 1));
    Ok(out)
}

/// Prove `[x_{k,n-k}, x_{l,n-l}] = 1` by deriving the `VP_3` case and
/// transporting the derivation along [`commuting_pair_program`].
pub fn commuting_certificate(
    fam: CablingFamily,
    n: usize,
    k: usize,
    l: usize,
    budget: Budget,
) -> Result<Option<Verdict>> {
    let target = boundary_elem(fam, k, n - k, n)?.commutator(&boundary_elem(fam, l, n - l, n)?)?;
    let base = boundary_elem(fam, 1, 2, 3)?.commutator(&boundary_elem(fam, 2, 1, 3)?)?;
    let Verdict::ProvenTrivial { trace, .. } = prove_trivial(&base, budget)? else {
        return Ok(None);
    };
    let program = commuting_pair_program(n, k, l)?;
    let Some((image, trace)) = transport_trace(&trace, &base, &program, budget)? else {
        return Ok(None);
    };
    if image != target {
        return Ok(None);
    }
    Ok(Some(Verdict::ProvenTrivial { subject: target, trace }))
}

/// Every cabled relator of `VP_{n+1}` checked for triviality.
pub fn verify_cabled_relators(n: usize, budget: Budget) -> Result<SuiteReport> {
    let set = cabled_relators(n)?;
    let jobs: Vec<(usize, Word)> = set.relators.into_iter().enumerate().collect();
    let records = run_checks(jobs, |(idx, r)| {
        Ok(CheckRecord::new(
            format!("VP{} cabled relator #{idx}", n + 1),
            triviality(&r, budget)?,
        ))
    })?;
    Ok(SuiteReport::new("cabled-relators", records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{abelianization, rep, rep_equal};

    fn w(n: usize, s: &str) -> Word {
        Word::parse(Alphabet::Lambda(n), s).unwrap()
    }

    #[test]
    fn programs() {
        assert_eq!(cabling_program(1, 2).unwrap().indices, vec![1]);
        assert_eq!(cabling_program(2, 2).unwrap().indices, vec![0]);
        assert!(cabling_program(1, 1).unwrap().indices.is_empty());
        assert_eq!(cabling_program(3, 4).unwrap().to_string(), "s3 s1 s0");
        assert!(cabling_program(0, 2).is_err());
        assert!(cabling_program(3, 2).is_err());
        assert!(DegeneracyProgram::new(1, vec![0, 2]).is_err());
    }

    #[test]
    fn elements_small() {
        assert_eq!(a_elem(1, 1).unwrap(), w(2, "l[1,2]"));
        assert_eq!(a_elem(2, 1).unwrap(), w(3, "l[1,3] l[2,3]"));
        assert_eq!(b_elem(2, 1).unwrap(), w(3, "l[3,2] l[3,1]"));
        assert_eq!(a_closed(1, 2).unwrap(), w(3, "l[1,3] l[1,2]"));
        assert_eq!(b_closed(1, 2).unwrap(), w(3, "l[2,1] l[3,1]"));
        assert_eq!(a_closed(2, 1).unwrap(), w(3, "l[1,3] l[2,3]"));
        assert_eq!(c_elem(1, 1).unwrap(), w(2, "l[1,2]^-1 l[2,1]^-1"));
        assert_eq!(c_elem(2, 1).unwrap(), w(3, "l[2,3]^-1 l[1,3]^-1 l[3,1]^-1 l[3,2]^-1"));
    }

    #[test]
    fn c11_acts_like_sigma_squared() {
        let s = Word::parse(Alphabet::Braid(2), "s[1] s[1]").unwrap();
        assert_eq!(rep(&c11()).unwrap().images(), rep(&s).unwrap().images());
    }

    #[test]
    fn program_and_closed_forms_agree_freely() {
        for n in 2..=7 {
            for k in 1..n {
                assert_eq!(
                    a_elem(k, n - k).unwrap(),
                    a_closed(k, n - k).unwrap(),
                    "a[{k},{}]",
                    n - k
                );
                assert_eq!(
                    b_elem(k, n - k).unwrap(),
                    b_closed(k, n - k).unwrap(),
                    "b[{k},{}]",
                    n - k
                );
            }
        }
    }

    #[test]
    fn reconstruction_examples() {
        let row13 = lambda_via_ab(1, 3, Variant::Row).unwrap();
        assert_eq!(row13, w(3, "l[1,3]"));
        assert_eq!(lambda_via_ab(1, 3, Variant::Column).unwrap(), w(3, "l[3,1]"));
        assert_eq!(lambda_via_ab(2, 3, Variant::Row).unwrap(), w(3, "l[2,3]"));
        assert!(lambda_via_ab(3, 3, Variant::Row).is_err());
    }

    #[test]
    fn yz_examples_and_telescoping() {
        let (y, z) = yz_elements(2).unwrap();
        assert_eq!(y, vec![w(2, "l[1,2]^-1"), w(2, "l[1,2]")]);
        assert_eq!(z, vec![w(2, "l[2,1]^-1"), w(2, "l[2,1]")]);
        let (y, _) = yz_elements(3).unwrap();
        assert_eq!(y[2], w(3, "l[1,3] l[2,3]"));
        assert_eq!(y[1], w(3, "l[1,3] l[1,2] l[2,3]^-1 l[1,3]^-1"));
        for n in 2..=8 {
            let (y, z) = yz_elements(n).unwrap();
            assert!(Word::product(Alphabet::Lambda(n), &y).unwrap().is_empty());
            assert!(Word::product(Alphabet::Lambda(n), &z).unwrap().is_empty());
        }
    }

    #[test]
    fn w_boundary() {
        for n in 2..=5 {
            assert_eq!(
                w_elem(1, n).unwrap(),
                include_into(&c_elem(1, n - 1).unwrap(), n).unwrap().invert()
            );
        }
        assert!(w_elem(0, 3).is_err());
    }

    #[test]
    fn t_generator_counts() {
        assert_eq!(t_generators(2).unwrap(), vec![w(2, "l[1,2]"), w(2, "l[2,1]")]);
        for n in 2..=6 {
            let t = t_generators(n).unwrap();
            assert_eq!(t.len(), 2 * (n - 1));
            assert!(t.iter().all(|g| g.alphabet() == Alphabet::Lambda(n)));
        }
    }

    /// Unrolling the recursion, `a_{p,q}` contains each `λ_{i,j}` with
    /// `i <= p < j` exactly once, and `b_{p,q}` each `λ_{j,i}` once.
    #[test]
    fn abelianization_support() {
        for n in 2..=7 {
            let alpha = Alphabet::Lambda(n);
            for p in 1..n {
                let ab_a = abelianization(&a_elem(p, n - p).unwrap());
                let ab_b = abelianization(&b_elem(p, n - p).unwrap());
                for (idx, g) in alpha.generators().enumerate() {
                    let crate::word::Generator::Lambda(i, j) = g else {
                        unreachable!()
                    };
                    assert_eq!(ab_a[idx], i64::from(i <= p && j > p), "a[{p},{}] at {g}", n - p);
                    assert_eq!(ab_b[idx], i64::from(j <= p && i > p), "b[{p},{}] at {g}", n - p);
                }
            }
        }
    }

    #[test]
    fn commuting_certificates_replay() {
        for n in 3..=6 {
            for k in 1..n {
                for l in k + 1..n {
                    for fam in [CablingFamily::A, CablingFamily::B] {
                        let v = commuting_certificate(fam, n, k, l, Budget::default()).unwrap().unwrap();
                        assert!(v.replay(), "VP{n} ({k},{l})");
                    }
                }
            }
        }
    }

    #[test]
    fn cabled_relator_counts() {
        let r4 = vp_presentation(4).unwrap().relators.len();
        let set = cabled_relators(4).unwrap();
        assert_eq!(set.raw_count, 5 * r4);
        assert!(!set.below_hypothesis);
        assert!(cabled_relators(3).unwrap().below_hypothesis);
        for r in &set.relators {
            assert!(abelianization(r).iter().all(|&c| c == 0));
            assert!(rep(r).unwrap().is_identity());
        }
    }

    #[test]
    fn small_suites_have_no_failures() {
        let b = Budget::default();
        let r = verify_cabling(4, b).unwrap();
        assert_eq!(r.summary().proven_trivial, r.summary().total);
        let r = verify_lemma_commuting(4, b).unwrap();
        assert_eq!(r.summary().proven_trivial, r.summary().total);
        assert!(r.all_replay());
        assert!(rep_equal(&c11(), &c11()).unwrap());
    }
}
