//! Moving derivations along degeneracies.
//!
//! If a trace reduces `u` to the empty word in `VP_m`, then applying `s_i`
//! to every inserted conjugate gives insertions of `s_i(g) s_i(q) s_i(g)^-1`
//! that reduce `s_i(u)` in `VP_{m+1}`. Each `s_i(q)` is not itself a relator,
//! so it is replaced by the inverse of its own derivation, found by search.

use std::collections::HashMap;

use super::prover::{Budget, Prover, Trace, TraceStep};
use crate::error::{Error, Result};
use crate::simplicial::degeneracy;
use crate::word::{Alphabet, Word};

/// Derivations of `s_i(q)` for relators `q`, keyed by `(i, q)`.
#[derive(Default)]
pub struct RelatorImageProofs {
    cache: HashMap<(usize, Word), Option<Trace>>,
}

impl RelatorImageProofs {
    fn get(&mut self, i: usize, q: &Word, budget: Budget) -> Result<Option<Trace>> {
        if let Some(t) = self.cache.get(&(i, q.clone())) {
            return Ok(t.clone());
        }
        let x = degeneracy(i, q)?;
        let n = x.alphabet().strands();
        let t = Prover::for_strands(n)?.search(&x, budget)?.ok();
        self.cache.insert((i, q.clone()), t.clone());
        Ok(t)
    }
}

/// Transport a position-0 trace for `start` along `s_i`. Returns `None` when
/// some relator image could not be derived within `budget`.
pub fn transport_step(
    trace: &Trace,
    start: &Word,
    i: usize,
    budget: Budget,
    proofs: &mut RelatorImageProofs,
) -> Result<Option<(Word, Trace)>> {
    if trace.steps.iter().any(|s| s.position != 0) {
        return Err(Error::Invalid("only position-0 traces can be transported".into()));
    }
    let image = degeneracy(i, start)?;
    let mut steps = Vec::new();
    for step in &trace.steps {
        let g = degeneracy(i, &step.conjugator)?;
        let Some(sub) = proofs.get(i, &step.relator, budget)? else {
            return Ok(None);
        };
        for inner in sub.steps.iter().rev() {
            steps.push(TraceStep {
                position: 0,
                conjugator: g.multiply(&inner.conjugator)?,
                relator: inner.relator.invert(),
            });
        }
    }
    Ok(Some((image, Trace { steps })))
}

/// Transport along `s_{i_1}`, then `s_{i_2}`, and so on.
pub fn transport_trace(
    trace: &Trace,
    start: &Word,
    degeneracies: &[usize],
    budget: Budget,
) -> Result<Option<(Word, Trace)>> {
    if !matches!(start.alphabet(), Alphabet::Lambda(_)) {
        return Err(Error::Invalid("traces act on lambda words".into()));
    }
    let mut proofs = RelatorImageProofs::default();
    let mut cur = (start.clone(), trace.clone());
    for &i in degeneracies {
        match transport_step(&cur.1, &cur.0, i, budget, &mut proofs)? {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}
