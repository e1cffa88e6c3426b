//! Brunnian braids, Moore cycles, and symmetric-commutator samples.
//!
//! A braid in `VP_n` is Brunnian when every face `d_i` kills it, i.e. it is
//! a Moore cycle in dimension `n - 1`. Elements of
//! `[R_1, …, R_n]_S` with `R_i = ⟨⟨y_i, z_i⟩⟩^{T_{n-1}}` are built as
//! left-normed brackets of conjugates of `y_i`, `z_i` by words in the
//! generators of `T_{n-1}`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cabling::{t_generators, yz_elements};
use crate::error::{Error, Result};
use crate::oracle::{abelianization, triviality, Budget, Verdict};
use crate::simplicial::face;
use crate::suite::{par_map, run_checks, CheckRecord, SuiteReport};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BrunnianStatus {
    Brunnian,
    NotBrunnian { witness_face: usize },
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Labeling {
    Brunnian,
    MooreCycle,
}

#[derive(Debug, Clone, Serialize)]
pub struct BrunnianReport {
    pub n: usize,
    pub labeling: Labeling,
    /// Simplicial dimension of `VP_n` in `VP_*`.
    pub dimension: usize,
    pub word: Word,
    pub faces: Vec<(usize, Verdict)>,
    pub overall: BrunnianStatus,
}

fn faces_report(u: &Word, budget: Budget, labeling: Labeling) -> Result<BrunnianReport> {
    let n = match u.alphabet() {
        Alphabet::Lambda(n) if n >= 2 => n,
        other => {
            return Err(Error::Invalid(format!(
                "Brunnian tests need a lambda word with at least 2 strands, got {other}"
            )))
        }
    };
    let faces = (0..n)
        .map(|i| Ok((i, triviality(&face(i, u)?, budget)?)))
        .collect::<Result<Vec<_>>>()?;
    let overall = if let Some((i, _)) = faces.iter().find(|(_, v)| v.is_nontrivial()) {
        BrunnianStatus::NotBrunnian { witness_face: *i }
    } else if faces.iter().all(|(_, v)| v.is_trivial()) {
        BrunnianStatus::Brunnian
    } else {
        BrunnianStatus::Unknown
    };
    Ok(BrunnianReport {
        n,
        labeling,
        dimension: n - 1,
        word: u.clone(),
        faces,
        overall,
    })
}

/// Triviality of `d_0 u, …, d_{n-1} u`.
pub fn is_brunnian(u: &Word, budget: Budget) -> Result<BrunnianReport> {
    faces_report(u, budget, Labeling::Brunnian)
}

/// Membership in `Z_{n-1}(VP_*) = ⋂ ker d_i`; the same test as
/// [`is_brunnian`] under Moore-complex labels.
pub fn moore_cycle_check(u: &Word, budget: Budget) -> Result<BrunnianReport> {
    faces_report(u, budget, Labeling::MooreCycle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pick {
    Y,
    Z,
}

/// Which normal generator of `R_i` to use, and the element of `T_{n-1}`
/// conjugating it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorChoice {
    pub pick: Pick,
    pub conjugator: Word,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymmetricCommutatorSample {
    pub n: usize,
    /// 1-indexed permutation of `1..=n`.
    pub permutation: Vec<usize>,
    /// Indexed by the subgroup `R_i`, `i = 1..=n`.
    pub choices: Vec<FactorChoice>,
    pub word: Word,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn check_permutation(n: usize, perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    let ok = perm.len() == n
        && perm
            .iter()
            .all(|&p| (1..=n).contains(&p) && !std::mem::replace(&mut seen[p], true));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation(perm.to_vec()))
    }
}

/// `[[[r_{σ(1)}, r_{σ(2)}], r_{σ(3)}], …, r_{σ(n)}]` with
/// `r_i = c_i^-1 y_i c_i` or `c_i^-1 z_i c_i`.
pub fn sample_symmetric_commutator(n: usize, permutation: &[usize], choices: &[FactorChoice]) -> Result<Word> {
    check_permutation(n, permutation)?;
    if choices.len() != n {
        return Err(Error::Invalid(format!(
            "expected {n} factor choices, got {}",
            choices.len()
        )));
    }
    let (y, z) = yz_elements(n)?;
    let r: Vec<Word> = (0..n)
        .map(|i| {
            let base = match choices[i].pick {
                Pick::Y => &y[i],
                Pick::Z => &z[i],
            };
            base.conjugate(&choices[i].conjugator)
        })
        .collect::<Result<_>>()?;
    let mut acc = r[permutation[0] - 1].clone();
    for &p in &permutation[1..] {
        acc = acc.commutator(&r[p - 1])?;
    }
    Ok(acc)
}

/// A random word of length at most `max_len` in the generators of
/// `T_{n-1}` and their inverses.
pub fn random_t_word(n: usize, max_len: usize, rng: &mut impl Rng) -> Result<Word> {
    let gens = t_generators(n)?;
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::identity(Alphabet::Lambda(n));
    for _ in 0..len {
        let g = &gens[rng.gen_range(0..gens.len())];
        let g = if rng.gen_bool(0.5) { g.clone() } else { g.invert() };
        w = w.multiply(&g)?;
    }
    Ok(w)
}

/// Sample with permutation, picks and conjugators drawn from `seed`.
pub fn random_sample(n: usize, max_conj: usize, seed: u64) -> Result<SymmetricCommutatorSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut permutation: Vec<usize> = (1..=n).collect();
    permutation.shuffle(&mut rng);
    let choices = (0..n)
        .map(|_| {
            let pick = if rng.gen_bool(0.5) { Pick::Y } else { Pick::Z };
            Ok(FactorChoice {
                pick,
                conjugator: random_t_word(n, max_conj, &mut rng)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let word = sample_symmetric_commutator(n, &permutation, &choices)?;
    Ok(SymmetricCommutatorSample {
        n,
        permutation,
        choices,
        word,
        seed: Some(seed),
    })
}

/// Per-sample summary of a sampling run.
#[derive(Debug, Clone, Serialize)]
pub struct SampleOutcome {
    pub n: usize,
    pub seed: u64,
    pub permutation: Vec<usize>,
    pub length: usize,
    pub abelianization_zero: bool,
    pub status: BrunnianStatus,
}

#[derive(Debug, Clone)]
pub struct BrunnianSampleRun {
    /// One check per face of each sample.
    pub report: SuiteReport,
    pub samples: Vec<SampleOutcome>,
}

impl BrunnianSampleRun {
    /// No refuted face and every abelianization zero.
    pub fn passes(&self) -> bool {
        self.report.summary().proven_nontrivial == 0 && self.samples.iter().all(|s| s.abelianization_zero)
    }
}

/// For each `n` and each seed in `0..seeds`, every face of the sample must
/// not be refuted and the abelianization must vanish.
pub fn verify_brunnian_samples(ns: &[usize], seeds: u64, max_conj: usize, budget: Budget) -> Result<BrunnianSampleRun> {
    let mut params = Vec::new();
    for &n in ns {
        for seed in 0..seeds {
            params.push((n, seed));
        }
    }
    let samples = par_map(params, |(n, seed)| random_sample(n, max_conj, seed))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<_> = samples.iter().flat_map(|s| (0..s.n).map(move |i| (s, i))).collect();
    let records = run_checks(jobs, |(s, i)| {
        let f = face(i, &s.word)?;
        let id = format!("VP{} seed {} d{i}", s.n, s.seed.unwrap_or_default());
        Ok(CheckRecord::new(id, triviality(&f, budget)?).with_free(f.is_empty()))
    })?;
    let mut outcomes = Vec::new();
    let mut rest = records.as_slice();
    for s in &samples {
        let (mine, tail) = rest.split_at(s.n);
        rest = tail;
        let status = if let Some(i) = mine.iter().position(|c| c.verdict.is_nontrivial()) {
            BrunnianStatus::NotBrunnian { witness_face: i }
        } else if mine.iter().all(|c| c.verdict.is_trivial()) {
            BrunnianStatus::Brunnian
        } else {
            BrunnianStatus::Unknown
        };
        outcomes.push(SampleOutcome {
            n: s.n,
            seed: s.seed.unwrap_or_default(),
            permutation: s.permutation.clone(),
            length: s.word.len(),
            abelianization_zero: abelianization(&s.word).iter().all(|&c| c == 0),
            status,
        });
    }
    Ok(BrunnianSampleRun {
        report: SuiteReport::new("brunnian-samples", records),
        samples: outcomes,
    })
}
