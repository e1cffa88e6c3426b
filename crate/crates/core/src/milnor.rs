//! The Milnor construction on `S^1 ∨ S^1` and the map `Θ̃` into `VP_*`.
//!
//! An `n`-simplex of one circle `Δ[1]/∂Δ[1]` is a non-decreasing 0/1
//! sequence of length `n + 1`, the constant sequences being the basepoint.
//! The non-degenerate 1-simplex is `01`, and `0^k 1^{n+1-k}` is
//! `s_{n-1} ⋯ s_k ŝ_{k-1} s_{k-2} ⋯ s_0 (0,1)`. Faces delete an entry and
//! degeneracies repeat one. `F[S^1 ∨ S^1]_n` is free on the `2n` simplices
//! `(n, copy, k)`, `1 <= k <= n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cabling::{a_elem, b_elem};
use crate::error::{out_of_range, Error, Result};
use crate::oracle::{equal, Budget, Verdict};
use crate::simplicial::{degeneracy, face};
use crate::suite::{run_checks, CheckRecord, SuiteReport};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WedgeCopy {
    First,
    Second,
}

impl WedgeCopy {
    pub fn from_index(c: usize) -> Result<WedgeCopy> {
        match c {
            1 => Ok(WedgeCopy::First),
            2 => Ok(WedgeCopy::Second),
            _ => Err(out_of_range("wedge summand", format!("copy {c} (expected 1 or 2)"))),
        }
    }

    pub fn index(self) -> usize {
        match self {
            WedgeCopy::First => 1,
            WedgeCopy::Second => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MilnorBasisElement {
    pub n: usize,
    pub copy: WedgeCopy,
    pub k: usize,
}

impl MilnorBasisElement {
    pub fn new(n: usize, copy: WedgeCopy, k: usize) -> Result<Self> {
        if n == 0 || k == 0 || k > n {
            return Err(out_of_range("Milnor basis element", format!("n = {n}, k = {k}")));
        }
        Ok(MilnorBasisElement { n, copy, k })
    }

    /// The 0/1 sequence `0^k 1^{n+1-k}`.
    pub fn sequence(&self) -> Vec<u8> {
        let mut s = vec![0u8; self.k];
        s.resize(self.n + 1, 1);
        s
    }

    /// Read back a sequence; constant sequences are the basepoint.
    pub fn from_sequence(copy: WedgeCopy, seq: &[u8]) -> Option<Self> {
        let k = seq.iter().take_while(|&&x| x == 0).count();
        debug_assert!(seq[k..].iter().all(|&x| x == 1));
        (k > 0 && k < seq.len()).then(|| MilnorBasisElement {
            n: seq.len() - 1,
            copy,
            k,
        })
    }

    /// The defining degeneracy program, as an operator word on `(0,1)`.
    pub fn program(&self) -> OperatorWord {
        OperatorWord {
            source_dim: 1,
            ops: (0..self.n).rev().filter(|&i| i != self.k - 1).map(Op::S).collect(),
        }
    }
}

impl fmt::Display for MilnorBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, copy {}, k={})", self.n, self.copy.index(), self.k)
    }
}

/// `2n` basis elements ordered by `(copy, k)`.
pub fn milnor_basis(n: usize) -> Result<Vec<MilnorBasisElement>> {
    if n == 0 {
        return Err(Error::InvalidStrandCount {
            n,
            reason: "the Milnor basis starts in dimension 1",
        });
    }
    Ok([WedgeCopy::First, WedgeCopy::Second]
        .into_iter()
        .flat_map(|c| (1..=n).map(move |k| MilnorBasisElement { n, copy: c, k }))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Op {
    D(usize),
    S(usize),
}

/// A composite of faces and degeneracies, written left to right as a
/// composition (the rightmost operator acts first), acting on simplices of
/// dimension `source_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperatorWord {
    pub source_dim: usize,
    pub ops: Vec<Op>,
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ops.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self
            .ops
            .iter()
            .map(|op| match op {
                Op::D(i) => format!("d{i}"),
                Op::S(i) => format!("s{i}"),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Rewrite `x y` (with `y` acting first) into an equal composite, or `None`
/// when the pair is already in normal order.
fn rewrite(x: Op, y: Op) -> Option<Vec<Op>> {
    match (x, y) {
        (Op::D(i), Op::S(j)) => Some(if i < j {
            vec![Op::S(j - 1), Op::D(i)]
        } else if i == j || i == j + 1 {
            vec![]
        } else {
            vec![Op::S(j), Op::D(i - 1)]
        }),
        (Op::S(i), Op::S(j)) if i <= j => Some(vec![Op::S(j + 1), Op::S(i)]),
        (Op::D(i), Op::D(j)) if i >= j => Some(vec![Op::D(j), Op::D(i + 1)]),
        _ => None,
    }
}

impl OperatorWord {
    pub fn new(source_dim: usize, ops: Vec<Op>) -> Result<Self> {
        let w = OperatorWord { source_dim, ops };
        w.target_dim()?;
        Ok(w)
    }

    /// Dimension after applying every operator, checking index ranges.
    pub fn target_dim(&self) -> Result<usize> {
        let mut dim = self.source_dim;
        for op in self.ops.iter().rev() {
            dim = match *op {
                Op::D(i) if dim >= 1 && i <= dim => dim - 1,
                Op::S(i) if i <= dim => dim + 1,
                _ => {
                    return Err(out_of_range(
                        "simplicial operator",
                        format!("{op:?} in dimension {dim}"),
                    ))
                }
            };
        }
        Ok(dim)
    }

    /// Act on a sequence: faces delete entry `i`, degeneracies repeat it.
    pub fn act<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        let mut s = seq.to_vec();
        for op in self.ops.iter().rev() {
            match *op {
                Op::D(i) => {
                    s.remove(i);
                }
                Op::S(i) => {
                    let x = s[i].clone();
                    s.insert(i, x);
                }
            }
        }
        s
    }

    /// Redex positions: indices `p` where `ops[p] ops[p+1]` rewrites.
    pub fn redexes(&self) -> Vec<usize> {
        (0..self.ops.len().saturating_sub(1))
            .filter(|&p| rewrite(self.ops[p], self.ops[p + 1]).is_some())
            .collect()
    }

    pub fn rewrite_at(&mut self, p: usize) -> bool {
        match rewrite(self.ops[p], self.ops[p + 1]) {
            Some(rep) => {
                self.ops.splice(p..p + 2, rep);
                true
            }
            None => false,
        }
    }

    /// Degeneracies with descending indices followed by faces with
    /// ascending indices.
    pub fn normalize(&self) -> OperatorWord {
        let mut w = self.clone();
        while let Some(&p) = w.redexes().first() {
            w.rewrite_at(p);
        }
        w
    }

    pub fn is_normal(&self) -> bool {
        self.redexes().is_empty()
    }

    /// Split a normal form into its degeneracy and face parts.
    pub fn split_normal(&self) -> (Vec<usize>, Vec<usize>) {
        let mut s = Vec::new();
        let mut d = Vec::new();
        for op in &self.ops {
            match *op {
                Op::S(i) => s.push(i),
                Op::D(i) => d.push(i),
            }
        }
        (s, d)
    }

    pub fn compose(&self, inner: &OperatorWord) -> Result<OperatorWord> {
        let mid = inner.target_dim()?;
        if mid != self.source_dim {
            return Err(Error::Invalid(format!(
                "cannot compose: inner ends in dimension {mid}, outer starts in {}",
                self.source_dim
            )));
        }
        let mut ops = self.ops.clone();
        ops.extend(&inner.ops);
        OperatorWord::new(inner.source_dim, ops)
    }
}

/// Apply an operator word to `(0,1)_copy` by normalizing it: any face in the
/// normal form lands on the basepoint; otherwise the degeneracy word omits
/// exactly one index and names the basis element.
pub fn apply_to_generator(copy: WedgeCopy, op: &OperatorWord) -> Result<Option<MilnorBasisElement>> {
    if op.source_dim != 1 {
        return Err(Error::Invalid(
            "operator words on the generator start in dimension 1".into(),
        ));
    }
    let nf = op.normalize();
    let (s, d) = nf.split_normal();
    if !d.is_empty() {
        return Ok(None);
    }
    let n = s.len() + 1;
    let omitted = (0..n)
        .find(|i| !s.contains(i))
        .expect("a descending word of length n-1 in 0..n omits one index");
    Ok(Some(MilnorBasisElement {
        n,
        copy,
        k: omitted + 1,
    }))
}

fn one_op(e: &MilnorBasisElement, op: Op) -> Result<Option<MilnorBasisElement>> {
    let outer = OperatorWord::new(e.n, vec![op])?;
    apply_to_generator(e.copy, &outer.compose(&e.program())?)
}

/// `d_i e`, `0 <= i <= n`; `None` is the identity of `F[S^1 ∨ S^1]_{n-1}`.
pub fn milnor_face(i: usize, e: &MilnorBasisElement) -> Result<Option<MilnorBasisElement>> {
    if i > e.n {
        return Err(out_of_range("face index", format!("d_{i} on dimension {}", e.n)));
    }
    one_op(e, Op::D(i))
}

/// `s_i e`, `0 <= i <= n`.
pub fn milnor_degeneracy(i: usize, e: &MilnorBasisElement) -> Result<MilnorBasisElement> {
    if i > e.n {
        return Err(out_of_range("degeneracy index", format!("s_{i} on dimension {}", e.n)));
    }
    Ok(one_op(e, Op::S(i))?.expect("degeneracies of a non-basepoint simplex are non-basepoint"))
}

/// `Θ̃(e)`: `a_{k,n+1-k}` for the first copy, `b_{k,n+1-k}` for the second.
pub fn theta(e: &MilnorBasisElement) -> Result<Word> {
    match e.copy {
        WedgeCopy::First => a_elem(e.k, e.n + 1 - e.k),
        WedgeCopy::Second => b_elem(e.k, e.n + 1 - e.k),
    }
}

/// `Θ̃` on a face or degeneracy result in dimension `dim`.
pub fn theta_opt(e: Option<&MilnorBasisElement>, dim: usize) -> Result<Word> {
    match e {
        Some(e) => theta(e),
        None => Ok(Word::identity(Alphabet::Lambda(dim + 1))),
    }
}

/// Every face and degeneracy square `Θ̃ ∘ d_i = d_i ∘ Θ̃`,
/// `Θ̃ ∘ s_i = s_i ∘ Θ̃` on basis elements of dimension `1..=max_n`.
pub fn check_theta_simplicial(max_n: usize, budget: Budget) -> Result<SuiteReport> {
    if max_n == 0 {
        return Err(Error::InvalidStrandCount {
            n: max_n,
            reason: "the theta sweep needs max_n >= 1",
        });
    }
    let mut jobs = Vec::new();
    for n in 1..=max_n {
        for e in milnor_basis(n)? {
            for i in 0..=n {
                jobs.push((e, i, true));
                jobs.push((e, i, false));
            }
        }
    }
    let records = run_checks(jobs, |(e, i, is_face)| {
        let t = theta(&e)?;
        let (lhs, rhs, id) = if is_face {
            let f = milnor_face(i, &e)?;
            (theta_opt(f.as_ref(), e.n - 1)?, face(i, &t)?, format!("d{i} {e}"))
        } else {
            let s = milnor_degeneracy(i, &e)?;
            (theta(&s)?, degeneracy(i, &t)?, format!("s{i} {e}"))
        };
        let free = lhs == rhs;
        Ok(CheckRecord::new(id, equal(&lhs, &rhs, budget)?).with_free(free))
    })?;
    Ok(SuiteReport::new("theta", records))
}

/// Separation of `Θ̃` on distinct basis elements of one dimension.
#[derive(Debug, Clone)]
pub struct InjectivityReport {
    pub n: usize,
    pub pairs: Vec<(MilnorBasisElement, MilnorBasisElement, Verdict)>,
}

impl InjectivityReport {
    pub fn all_separated(&self) -> bool {
        self.pairs.iter().all(|(_, _, v)| v.is_nontrivial())
    }

    pub fn unresolved(&self) -> usize {
        self.pairs.iter().filter(|(_, _, v)| v.is_unknown()).count()
    }
}

pub fn theta_injectivity(n: usize, budget: Budget) -> Result<InjectivityReport> {
    let basis = milnor_basis(n)?;
    let images: Vec<Word> = basis.iter().map(theta).collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for x in 0..basis.len() {
        for y in x + 1..basis.len() {
            pairs.push((basis[x], basis[y], equal(&images[x], &images[y], budget)?));
        }
    }
    Ok(InjectivityReport { n, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(n: usize, c: usize, k: usize) -> MilnorBasisElement {
        MilnorBasisElement::new(n, WedgeCopy::from_index(c).unwrap(), k).unwrap()
    }

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(milnor_basis(1).unwrap(), vec![e(1, 1, 1), e(1, 2, 1)]);
        for n in 1..=6 {
            assert_eq!(milnor_basis(n).unwrap().len(), 2 * n);
        }
        assert!(milnor_basis(0).is_err());
    }

    #[test]
    fn program_reproduces_sequence() {
        for n in 1..=6 {
            for b in milnor_basis(n).unwrap() {
                assert_eq!(b.program().act(&[0u8, 1]), b.sequence());
            }
        }
    }

    #[test]
    fn face_and_degeneracy_examples() {
        assert_eq!(milnor_face(0, &e(1, 1, 1)).unwrap(), None);
        assert_eq!(milnor_face(1, &e(1, 1, 1)).unwrap(), None);
        assert_eq!(milnor_degeneracy(0, &e(1, 1, 1)).unwrap(), e(2, 1, 2));
        assert_eq!(milnor_face(1, &e(2, 1, 2)).unwrap(), Some(e(1, 1, 1)));
    }

    /// Normalization agrees with the sequence model: delete or repeat entries
    /// of the 0/1 sequence directly.
    #[test]
    fn normalization_matches_sequence_oracle() {
        for n in 1..=5 {
            for b in milnor_basis(n).unwrap() {
                for i in 0..=n {
                    let mut seq = b.sequence();
                    seq.remove(i);
                    assert_eq!(
                        milnor_face(i, &b).unwrap(),
                        MilnorBasisElement::from_sequence(b.copy, &seq)
                    );
                    let mut seq = b.sequence();
                    seq.insert(i, seq[i]);
                    assert_eq!(
                        Some(milnor_degeneracy(i, &b).unwrap()),
                        MilnorBasisElement::from_sequence(b.copy, &seq)
                    );
                }
            }
        }
    }

    fn random_word(rng: &mut ChaCha8Rng) -> OperatorWord {
        let source_dim = rng.gen_range(1..=4);
        let mut dim = source_dim;
        let mut ops = Vec::new();
        for _ in 0..rng.gen_range(0..=8) {
            let op = if dim > 0 && rng.gen_bool(0.5) {
                Op::D(rng.gen_range(0..=dim))
            } else {
                Op::S(rng.gen_range(0..=dim))
            };
            dim = if matches!(op, Op::D(_)) { dim - 1 } else { dim + 1 };
            ops.insert(0, op);
        }
        OperatorWord::new(source_dim, ops).unwrap()
    }

    #[test]
    fn normalization_is_confluent_and_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let w = random_word(&mut rng);
            let nf = w.normalize();
            assert!(nf.is_normal());
            let (s, d) = nf.split_normal();
            assert!(s.windows(2).all(|p| p[0] > p[1]) && d.windows(2).all(|p| p[0] < p[1]));
            let probe: Vec<usize> = (0..=w.source_dim).collect();
            assert_eq!(nf.act(&probe), w.act(&probe), "{w}");
            let mut v = w.clone();
            loop {
                let r = v.redexes();
                if r.is_empty() {
                    break;
                }
                let p = r[rng.gen_range(0..r.len())];
                v.rewrite_at(p);
            }
            assert_eq!(v, nf, "{w}");
        }
    }

    #[test]
    fn theta_examples() {
        let w = |n, s| Word::parse(Alphabet::Lambda(n), s).unwrap();
        assert_eq!(theta(&e(1, 1, 1)).unwrap(), w(2, "l[1,2]"));
        assert_eq!(theta(&e(2, 1, 2)).unwrap(), w(3, "l[1,3] l[2,3]"));
        assert_eq!(theta(&e(2, 2, 1)).unwrap(), w(3, "l[2,1] l[3,1]"));
    }

    #[test]
    fn theta_squares_small() {
        let r = check_theta_simplicial(3, Budget::default()).unwrap();
        assert_eq!(r.summary().proven_nontrivial, 0);
        assert_eq!(r.summary().unknown, 0);
    }

    #[test]
    fn theta_separates_basis() {
        for n in 1..=5 {
            assert!(theta_injectivity(n, Budget::default()).unwrap().all_separated());
        }
    }
}
