use serde::{Deserialize, Serialize};

use super::abelian::abelianization;
use super::automorphism::rep;
use super::prover::{SearchDiagnostics, Trace};
use crate::word::{Alphabet, Word};

/// Which invariant separated a word from the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleTag {
    Abelianization,
    Representation,
}

impl std::fmt::Display for OracleTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OracleTag::Abelianization => "abelianization",
            OracleTag::Representation => "representation",
        })
    }
}

/// The coordinate at which the invariant differs from that of the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// Exponent sum of `λ_{ij}`.
    ExponentSum { generator: [usize; 2], exponent_sum: i64 },
    /// Image of the basis letter `x_basis` (1-indexed).
    BasisImage { basis: usize, image: Word },
}

/// Three-valued answer for "is `subject` trivial in `VP_n`".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    ProvenTrivial {
        subject: Word,
        trace: Trace,
    },
    ProvenNontrivial {
        subject: Word,
        oracle: OracleTag,
        witness: Witness,
    },
    Unknown {
        subject: Word,
        diagnostics: SearchDiagnostics,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    ProvenTrivial,
    ProvenNontrivial,
    Unknown,
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::ProvenTrivial { .. } => VerdictKind::ProvenTrivial,
            Verdict::ProvenNontrivial { .. } => VerdictKind::ProvenNontrivial,
            Verdict::Unknown { .. } => VerdictKind::Unknown,
        }
    }

    pub fn subject(&self) -> &Word {
        match self {
            Verdict::ProvenTrivial { subject, .. }
            | Verdict::ProvenNontrivial { subject, .. }
            | Verdict::Unknown { subject, .. } => subject,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Verdict::ProvenTrivial { .. })
    }

    pub fn is_nontrivial(&self) -> bool {
        matches!(self, Verdict::ProvenNontrivial { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn oracle(&self) -> Option<OracleTag> {
        match self {
            Verdict::ProvenNontrivial { oracle, .. } => Some(*oracle),
            _ => None,
        }
    }

    pub fn trace(&self) -> Option<&Trace> {
        match self {
            Verdict::ProvenTrivial { trace, .. } => Some(trace),
            _ => None,
        }
    }

    /// Independently re-check the verdict. A trivial verdict must replay to
    /// the empty word; a nontrivial one must exhibit its witness when the
    /// invariant is recomputed from scratch. Unknown verdicts replay
    /// vacuously.
    pub fn replay(&self) -> bool {
        match self {
            Verdict::ProvenTrivial { subject, trace } => trace.proves(subject),
            Verdict::ProvenNontrivial {
                subject,
                oracle,
                witness,
            } => replay_witness(subject, *oracle, witness),
            Verdict::Unknown { .. } => true,
        }
    }
}

fn replay_witness(subject: &Word, oracle: OracleTag, witness: &Witness) -> bool {
    match (oracle, witness) {
        (
            OracleTag::Abelianization,
            Witness::ExponentSum {
                generator,
                exponent_sum,
            },
        ) => {
            let Alphabet::Lambda(_) = subject.alphabet() else {
                return false;
            };
            let Ok(idx) = subject
                .alphabet()
                .index_of(crate::word::Generator::Lambda(generator[0], generator[1]))
            else {
                return false;
            };
            let v = abelianization(subject);
            *exponent_sum != 0 && v[idx] == *exponent_sum
        }
        (OracleTag::Representation, Witness::BasisImage { basis, image }) => {
            let Ok(a) = rep(subject) else { return false };
            let Some(i) = basis.checked_sub(1).filter(|&i| i < a.rank()) else {
                return false;
            };
            let x = Word::generator(Alphabet::FreeBasis(a.rank()), crate::word::Generator::X(*basis));
            a.image(i) == image && x.map(|x| &x != image).unwrap_or(false)
        }
        _ => false,
    }
}
