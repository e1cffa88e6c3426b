//! Bounded search for derivations of `u = 1` from the relators of `VP_n`.
//!
//! Search states are cyclic words, stored as their least rotation. A move
//! inserts a rotation of a relator (or of its inverse) whose last letter
//! cancels the letter at the insertion point, then freely and cyclically
//! reduces. States are expanded shortest first with FIFO tie-breaking.
//!
//! The linear conjugator is tracked along the winning path, and the trace
//! replays on the original word by insertions at position 0.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::rc::Rc;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{canonical_relator, least_rotation, vb_relators, vp_presentation};
use crate::word::{Alphabet, Letter, Word};

/// Search caps. `max_len` bounds the words kept on the frontier (a child
/// shorter than its parent is always kept); `max_states` bounds the number of
/// distinct states visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_len: usize,
    pub max_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_len: 64,
            max_states: 1_000_000,
        }
    }
}

/// Insert `conjugator · relator · conjugator^-1` at `position`, then reduce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub position: usize,
    pub conjugator: Word,
    pub relator: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Apply the steps to `start`, checking every inserted word against the
    /// presentation of `VP_n` (or of `VB_n` for braid words). Returns the
    /// final word.
    pub fn replay(&self, start: &Word) -> Result<Word> {
        let mut state = start.clone();
        if self.steps.is_empty() {
            return Ok(state);
        }
        let is_relator: Box<dyn Fn(&Word) -> bool> = match start.alphabet() {
            Alphabet::Lambda(n) => {
                let prover = Prover::for_strands(n)?;
                Box::new(move |q| prover.is_relator(q))
            }
            Alphabet::Braid(n) => {
                let set: HashSet<Word> = vb_relators(n)?.iter().map(canonical_relator).collect();
                Box::new(move |q| {
                    q.alphabet() == Alphabet::Braid(n)
                        && !q.is_empty()
                        && q.cyclic_core().0.len() == q.len()
                        && set.contains(&canonical_relator(q))
                })
            }
            other => {
                return Err(Error::Invalid(format!(
                    "traces act on lambda or braid words, got {other}"
                )))
            }
        };
        for (k, step) in self.steps.iter().enumerate() {
            if !is_relator(&step.relator) {
                return Err(Error::Invalid(format!(
                    "trace step {k}: {} is not a defining relator of {}",
                    step.relator,
                    start.alphabet()
                )));
            }
            if step.position > state.len() {
                return Err(Error::Invalid(format!(
                    "trace step {k}: position {} past end",
                    step.position
                )));
            }
            let inserted = step.relator.conjugate(&step.conjugator.invert())?;
            let (head, tail) = state.letters().split_at(step.position);
            let letters = head.iter().chain(inserted.letters()).chain(tail).copied();
            state = Word::from_letters(start.alphabet(), letters)?;
        }
        Ok(state)
    }

    /// True iff the trace replays `start` to the empty word.
    pub fn proves(&self, start: &Word) -> bool {
        self.replay(start).map(|w| w.is_empty()).unwrap_or(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchDiagnostics {
    pub start_len: usize,
    pub states: usize,
    pub expansions: usize,
    pub shortest_len: usize,
    pub budget: Budget,
    pub reason: String,
}

type Code = u16;

/// Relator pool of `VP_n`, indexed by the last letter of each rotation.
pub struct Prover {
    n: usize,
    relators: HashSet<Word>,
    pool: Vec<Box<[Code]>>,
    by_last: Vec<Vec<u32>>,
}

struct Node {
    word: Rc<[Code]>,
    parent: u32,
    position: u32,
    relator: u32,
}

fn to_codes(w: &Word) -> Vec<Code> {
    w.letters().iter().map(|l| l.code() as Code).collect()
}

fn letters(codes: &[Code]) -> impl Iterator<Item = Letter> + '_ {
    codes.iter().map(|&c| Letter::new((c >> 1) as usize, c & 1 == 1))
}

fn push(buf: &mut Vec<Code>, c: Code) {
    if buf.last() == Some(&(c ^ 1)) {
        buf.pop();
    } else {
        buf.push(c);
    }
}

/// Split a freely reduced word as `t · core · t^-1` and rotate the core to
/// its least rotation `B A` where `core = A B`. Returns `(t_len, a_len, canon)`.
fn cyclic_canonical(r: &[Code]) -> (usize, usize, Vec<Code>) {
    let mut t = 0;
    while 2 * t + 1 < r.len() && r[t] == r[r.len() - 1 - t] ^ 1 {
        t += 1;
    }
    let core = &r[t..r.len() - t];
    let a = least_rotation(core);
    let canon = core[a..].iter().chain(&core[..a]).copied().collect();
    (t, a, canon)
}

fn insert_reduced(c: &[Code], p: usize, q: &[Code], buf: &mut Vec<Code>) {
    buf.clear();
    for &x in c[..p].iter().chain(q).chain(&c[p..]) {
        push(buf, x);
    }
}

impl Prover {
    pub fn new(n: usize) -> Result<Prover> {
        let pres = vp_presentation(n)?;
        if pres.alphabet().rank() * 2 > Code::MAX as usize {
            return Err(Error::InvalidStrandCount {
                n,
                reason: "too many generators for the prover's letter encoding",
            });
        }
        let mut pool = Vec::new();
        let mut by_last = vec![Vec::new(); 2 * pres.alphabet().rank()];
        let mut seen = HashSet::new();
        for r in &pres.relators {
            for w in [r.clone(), r.invert()] {
                let codes = to_codes(&w);
                for s in 0..codes.len() {
                    let rot: Box<[Code]> = codes[s..].iter().chain(&codes[..s]).copied().collect();
                    if seen.insert(rot.clone()) {
                        by_last[*rot.last().expect("relators are nonempty") as usize].push(pool.len() as u32);
                        pool.push(rot);
                    }
                }
            }
        }
        Ok(Prover {
            n,
            relators: pres.relators.into_iter().collect(),
            pool,
            by_last,
        })
    }

    /// Shared prover for `VP_n`.
    pub fn for_strands(n: usize) -> Result<Arc<Prover>> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Prover>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.read().expect("cache lock").get(&n) {
            return Ok(p.clone());
        }
        let p = Arc::new(Prover::new(n)?);
        Ok(cache.write().expect("cache lock").entry(n).or_insert(p).clone())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn pool_size(&self) -> usize {
        self.pool.len()
    }

    /// Whether `q` is a cyclic rotation of a relator or of its inverse.
    pub fn is_relator(&self, q: &Word) -> bool {
        if q.alphabet() != Alphabet::Lambda(self.n) {
            return false;
        }
        let (core, _) = q.cyclic_core();
        core.len() == q.len() && !q.is_empty() && self.relators.contains(&canonical_relator(q))
    }

    /// Search for a derivation of `u = 1`.
    pub fn search(&self, u: &Word, budget: Budget) -> Result<std::result::Result<Trace, SearchDiagnostics>> {
        if u.alphabet() != Alphabet::Lambda(self.n) {
            return Err(Error::AlphabetMismatch {
                left: u.alphabet(),
                right: Alphabet::Lambda(self.n),
            });
        }
        let start = to_codes(u);
        let (_, _, root) = cyclic_canonical(&start);
        if root.is_empty() {
            return Ok(Ok(self.reconstruct(u, &[])));
        }
        let mut diag = SearchDiagnostics {
            start_len: u.len(),
            states: 1,
            expansions: 0,
            shortest_len: root.len(),
            budget,
            reason: String::new(),
        };
        let root: Rc<[Code]> = root.into();
        let mut visited: HashSet<Rc<[Code]>> = HashSet::new();
        visited.insert(root.clone());
        let mut nodes = vec![Node {
            word: root.clone(),
            parent: u32::MAX,
            position: 0,
            relator: 0,
        }];
        let mut frontier = BinaryHeap::new();
        frontier.push(Reverse((root.len(), 0u32)));
        let mut buf = Vec::new();

        while let Some(Reverse((_, idx))) = frontier.pop() {
            diag.expansions += 1;
            let c = nodes[idx as usize].word.clone();
            for p in 0..c.len() {
                for &qi in &self.by_last[(c[p] ^ 1) as usize] {
                    let q = &self.pool[qi as usize];
                    insert_reduced(&c, p, q, &mut buf);
                    let (_, _, child) = cyclic_canonical(&buf);
                    let goal = child.is_empty();
                    if !goal && child.len() > budget.max_len && child.len() >= c.len() {
                        continue;
                    }
                    let child: Rc<[Code]> = child.into();
                    if !goal && visited.contains(&child) {
                        continue;
                    }
                    nodes.push(Node {
                        word: child.clone(),
                        parent: idx,
                        position: p as u32,
                        relator: qi,
                    });
                    let child_idx = (nodes.len() - 1) as u32;
                    if goal {
                        let path = self.path(&nodes, child_idx);
                        return Ok(Ok(self.reconstruct(u, &path)));
                    }
                    diag.shortest_len = diag.shortest_len.min(child.len());
                    visited.insert(child.clone());
                    diag.states += 1;
                    if diag.states >= budget.max_states {
                        diag.reason = "state budget exhausted".into();
                        return Ok(Err(diag));
                    }
                    frontier.push(Reverse((child.len(), child_idx)));
                }
            }
        }
        diag.reason = "frontier exhausted".into();
        Ok(Err(diag))
    }

    fn path(&self, nodes: &[Node], mut idx: u32) -> Vec<(Rc<[Code]>, usize, u32)> {
        let mut out = Vec::new();
        while nodes[idx as usize].parent != u32::MAX {
            let node = &nodes[idx as usize];
            let parent = &nodes[node.parent as usize];
            out.push((parent.word.clone(), node.position as usize, node.relator));
            idx = node.parent;
        }
        out.reverse();
        out
    }

    /// Turn a path of cyclic moves into linear insertions at position 0.
    ///
    /// Invariant: the current linear word equals `h · c · h^-1` with `c` the
    /// canonical cyclic state.
    fn reconstruct(&self, u: &Word, path: &[(Rc<[Code]>, usize, u32)]) -> Trace {
        let alphabet = u.alphabet();
        let start = to_codes(u);
        let (t, a, _) = cyclic_canonical(&start);
        let mut h: Vec<Code> = start[..t + a].to_vec();
        let mut steps = Vec::with_capacity(path.len());
        let mut buf = Vec::new();
        for (c, p, qi) in path {
            let q = &self.pool[*qi as usize];
            let mut g = h.clone();
            for &x in &c[..*p] {
                push(&mut g, x);
            }
            steps.push(TraceStep {
                position: 0,
                conjugator: Word::from_valid(alphabet, letters(&g)),
                relator: Word::from_valid(alphabet, letters(q)),
            });
            insert_reduced(c, *p, q, &mut buf);
            let (t, a, _) = cyclic_canonical(&buf);
            for &x in &buf[..t + a] {
                push(&mut h, x);
            }
        }
        Trace { steps }
    }
}

#[cfg(test)]
fn reduce_codes(codes: &[Code]) -> Vec<Code> {
    let mut buf = Vec::new();
    for &c in codes {
        push(&mut buf, c);
    }
    buf
}
