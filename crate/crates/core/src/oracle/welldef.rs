//! Well-definedness of the representation on `VP_n` and `VB_n`.

use super::automorphism::rep;
use super::prover::{Trace, TraceStep};
use super::verdict::{OracleTag, Verdict, Witness};
use crate::error::Result;
use crate::presentation::{lambda_as_braid_word, vb_relators, vp_presentation};
use crate::suite::{run_checks, CheckRecord, SuiteReport};
use crate::word::{Alphabet, Generator, Word};

fn moved(u: &Word) -> Result<Option<Verdict>> {
    let a = rep(u)?;
    Ok(a.moved_basis_letter().map(|b| Verdict::ProvenNontrivial {
        subject: u.clone(),
        oracle: OracleTag::Representation,
        witness: Witness::BasisImage {
            basis: b + 1,
            image: a.image(b).clone(),
        },
    }))
}

/// A defining relator `r` is refuted if its image moves a basis letter;
/// otherwise it is proven by the one-step trace inserting `r^-1`.
pub fn relator_verdict(r: &Word) -> Result<Verdict> {
    if let Some(v) = moved(r)? {
        return Ok(v);
    }
    let step = TraceStep {
        position: 0,
        conjugator: Word::identity(r.alphabet()),
        relator: r.invert(),
    };
    Ok(Verdict::ProvenTrivial {
        subject: r.clone(),
        trace: Trace { steps: vec![step] },
    })
}

/// `ρ_i λ_{i,i+1} ρ_i = σ_i^-1 ρ_i` in `VB_n`, with `λ_{i,i+1} = ρ_i σ_i^-1`.
/// The difference word freely reduces to the relator `ρ_i^2`.
pub fn adjacent_lambda_consistency(i: usize, n: usize) -> Result<Verdict> {
    let r = Word::generator(Alphabet::Braid(n), Generator::Rho(i))?;
    let lhs = r.multiply(&lambda_as_braid_word(i, i + 1, n)?)?.multiply(&r)?;
    let d = lhs.multiply(&lambda_as_braid_word(i + 1, i, n)?.invert())?;
    if let Some(v) = moved(&d)? {
        return Ok(v);
    }
    relator_verdict(&d)
}

/// Every relator of `VP_n` and `VB_n` for `2 ≤ n ≤ max_n`, and the
/// adjacent-λ consistency check, under the representation.
pub fn verify_rep_welldef(max_n: usize) -> Result<SuiteReport> {
    enum Job {
        Vp(usize, usize, Word),
        Vb(usize, usize, Word),
        Adjacent(usize, usize),
    }
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        for (k, r) in vp_presentation(n)?.relators.into_iter().enumerate() {
            jobs.push(Job::Vp(n, k, r));
        }
        for (k, r) in vb_relators(n)?.into_iter().enumerate() {
            jobs.push(Job::Vb(n, k, r));
        }
        for i in 1..n {
            jobs.push(Job::Adjacent(n, i));
        }
    }
    let records = run_checks(jobs, |job| match job {
        Job::Vp(n, k, r) => Ok(CheckRecord::new(format!("VP{n} relator #{k}"), relator_verdict(&r)?)),
        Job::Vb(n, k, r) => Ok(CheckRecord::new(format!("VB{n} relator #{k}"), relator_verdict(&r)?)),
        Job::Adjacent(n, i) => Ok(CheckRecord::new(
            format!("VB{n} l[{},{i}] = r[{i}] l[{i},{}] r[{i}]", i + 1, i + 1),
            adjacent_lambda_consistency(i, n)?,
        )),
    })?;
    Ok(SuiteReport::new("rep-welldef", records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_replays() {
        let r = verify_rep_welldef(4).unwrap();
        assert_eq!(r.summary().proven_trivial, r.summary().total);
        assert!(r.all_replay());
    }

    #[test]
    fn forged_relator_is_refuted() {
        let a = Alphabet::Braid(3);
        let bad = Word::parse(a, "s[1] r[1] s[1]^-1 r[1]^-1").unwrap();
        let v = relator_verdict(&bad).unwrap();
        assert!(v.is_nontrivial() && v.replay());
    }

    #[test]
    fn braid_trace_rejects_non_relators() {
        let a = Alphabet::Braid(3);
        let u = Word::parse(a, "s[1] s[2]").unwrap();
        let t = Trace {
            steps: vec![TraceStep {
                position: 0,
                conjugator: Word::identity(a),
                relator: u.invert(),
            }],
        };
        assert!(!t.proves(&u));
    }
}
