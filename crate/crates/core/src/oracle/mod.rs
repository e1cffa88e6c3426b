//! Layered semi-decision of the word problem in `VP_n`.
//!
//! [`triviality`] runs free reduction, then the abelianization, then the
//! free-group representation, then the bounded prover. Only free reduction
//! and the prover can certify triviality; the two invariants can only refute
//! it. Nothing depends on faithfulness of the representation.

mod abelian;
mod automorphism;
mod prover;
mod transport;
mod verdict;
mod welldef;

pub use abelian::abelianization;
pub use automorphism::{basis_retraction, braid_rep, rep, FreeAutomorphism};
pub use prover::{Budget, Prover, SearchDiagnostics, Trace, TraceStep};
pub use transport::{transport_step, transport_trace, RelatorImageProofs};
pub use verdict::{OracleTag, Verdict, VerdictKind, Witness};
pub use welldef::{adjacent_lambda_consistency, relator_verdict, verify_rep_welldef};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Generator, Word};

fn lambda_only(u: &Word) -> Result<usize> {
    match u.alphabet() {
        Alphabet::Lambda(n) => Ok(n),
        other => Err(Error::Invalid(format!(
            "the oracle stack decides lambda words, got {other}"
        ))),
    }
}

/// Run the bounded prover alone. Returns `ProvenTrivial` or `Unknown`.
pub fn prove_trivial(u: &Word, budget: Budget) -> Result<Verdict> {
    let n = lambda_only(u)?;
    if u.is_empty() {
        return Ok(Verdict::ProvenTrivial {
            subject: u.clone(),
            trace: Trace::default(),
        });
    }
    Ok(match Prover::for_strands(n)?.search(u, budget)? {
        Ok(trace) => Verdict::ProvenTrivial {
            subject: u.clone(),
            trace,
        },
        Err(diagnostics) => Verdict::Unknown {
            subject: u.clone(),
            diagnostics,
        },
    })
}

/// Refute with an invariant if possible, otherwise search for a proof.
pub fn triviality(u: &Word, budget: Budget) -> Result<Verdict> {
    let n = lambda_only(u)?;
    if u.is_empty() {
        return prove_trivial(u, budget);
    }
    let ab = abelianization(u);
    if let Some(idx) = ab.iter().position(|&c| c != 0) {
        let Generator::Lambda(i, j) = Alphabet::Lambda(n).generator(idx) else {
            unreachable!()
        };
        return Ok(Verdict::ProvenNontrivial {
            subject: u.clone(),
            oracle: OracleTag::Abelianization,
            witness: Witness::ExponentSum {
                generator: [i, j],
                exponent_sum: ab[idx],
            },
        });
    }
    let a = rep(u)?;
    if let Some(b) = a.moved_basis_letter() {
        return Ok(Verdict::ProvenNontrivial {
            subject: u.clone(),
            oracle: OracleTag::Representation,
            witness: Witness::BasisImage {
                basis: b + 1,
                image: a.image(b).clone(),
            },
        });
    }
    prove_trivial(u, budget)
}

/// Decide `u = v` by deciding triviality of `u v^-1`.
pub fn equal(u: &Word, v: &Word, budget: Budget) -> Result<Verdict> {
    let d = u.multiply(&v.invert())?;
    if u == v {
        return Ok(Verdict::ProvenTrivial {
            subject: d,
            trace: Trace::default(),
        });
    }
    triviality(&d, budget)
}

/// Whether `rep(u) = rep(v)`, compared on all basis images.
pub fn rep_equal(u: &Word, v: &Word) -> Result<bool> {
    Ok(rep(u)?.images() == rep(v)?.images())
}
