//! Free-group words over the three alphabets used throughout the crate.
//!
//! A [`Word`] is always freely reduced and always knows its [`Alphabet`].
//! Letters carry exponent `+1` or `-1` only; powers are expanded on input.
//!
//! Commutators follow the convention `[a, b] = a^-1 b^-1 a b`, and iterated
//! brackets are left-normed: `[a, b, c] = [[a, b], c]`. Conjugation is
//! `y^x = x^-1 y x`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{out_of_range, Error, Result};

/// The generating set a word is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// `λ_{ij}`, `1 <= i, j <= n`, `i != j`: generators of `VP_n`.
    Lambda(usize),
    /// `σ_i`, `ρ_i`, `1 <= i <= n - 1`: generators of `VB_n`.
    Braid(usize),
    /// `x_1 .. x_n`: a free basis of rank `n`.
    FreeBasis(usize),
}

/// A single generator, named with 1-based strand or basis indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Lambda(usize, usize),
    Sigma(usize),
    Rho(usize),
    X(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Lambda(i, j) => write!(f, "l[{i},{j}]"),
            Generator::Sigma(i) => write!(f, "s[{i}]"),
            Generator::Rho(i) => write!(f, "r[{i}]"),
            Generator::X(i) => write!(f, "x[{i}]"),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Alphabet::Lambda(n) => write!(f, "lambda({n})"),
            Alphabet::Braid(n) => write!(f, "braid({n})"),
            Alphabet::FreeBasis(n) => write!(f, "free({n})"),
        }
    }
}

impl Alphabet {
    pub fn strands(self) -> usize {
        match self {
            Alphabet::Lambda(n) | Alphabet::Braid(n) | Alphabet::FreeBasis(n) => n,
        }
    }

    /// Number of generators.
    pub fn rank(self) -> usize {
        match self {
            Alphabet::Lambda(n) => n * n.saturating_sub(1),
            Alphabet::Braid(n) => 2 * n.saturating_sub(1),
            Alphabet::FreeBasis(n) => n,
        }
    }

    /// Generator with the given index. Lambda generators are ordered
    /// lexicographically by `(i, j)`; braid generators list all `σ_i` before
    /// all `ρ_i`.
    pub fn generator(self, index: usize) -> Generator {
        debug_assert!(index < self.rank());
        match self {
            Alphabet::Lambda(n) => {
                let i = index / (n - 1) + 1;
                let r = index % (n - 1) + 1;
                let j = if r < i { r } else { r + 1 };
                Generator::Lambda(i, j)
            }
            Alphabet::Braid(n) => {
                if index < n - 1 {
                    Generator::Sigma(index + 1)
                } else {
                    Generator::Rho(index - (n - 1) + 1)
                }
            }
            Alphabet::FreeBasis(_) => Generator::X(index + 1),
        }
    }

    pub fn index_of(self, gen: Generator) -> Result<usize> {
        let outside = || Error::LetterOutsideAlphabet {
            letter: gen.to_string(),
            alphabet: self,
        };
        match (self, gen) {
            (Alphabet::Lambda(n), Generator::Lambda(i, j)) => {
                if i == 0 || j == 0 || i > n || j > n || i == j {
                    return Err(outside());
                }
                let r = if j < i { j - 1 } else { j - 2 };
                Ok((i - 1) * (n - 1) + r)
            }
            (Alphabet::Braid(n), Generator::Sigma(i)) if i >= 1 && i < n => Ok(i - 1),
            (Alphabet::Braid(n), Generator::Rho(i)) if i >= 1 && i < n => Ok(n - 1 + i - 1),
            (Alphabet::FreeBasis(n), Generator::X(i)) if i >= 1 && i <= n => Ok(i - 1),
            _ => Err(outside()),
        }
    }

    pub fn generators(self) -> impl Iterator<Item = Generator> {
        (0..self.rank()).map(move |g| self.generator(g))
    }

    pub fn letter(self, gen: Generator, inverse: bool) -> Result<Letter> {
        Ok(Letter::new(self.index_of(gen)?, inverse))
    }

    fn kind_name(self) -> &'static str {
        match self {
            Alphabet::Lambda(_) => "lambda",
            Alphabet::Braid(_) => "braid",
            Alphabet::FreeBasis(_) => "free",
        }
    }
}

/// A signed generator, packed as `2 * index + inverse`.
///
/// The packing makes `inverse` a bit flip and gives letters a total order
/// (generator index first, positive before negative) used for canonical
/// relator representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub(crate) u32);

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Letter {
        Letter((gen as u32) << 1 | inverse as u32)
    }

    pub fn gen(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn exponent(self) -> i32 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn code(self) -> u32 {
        self.0
    }
}

/// Append `letter` to a reduced buffer, cancelling if possible.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last() == Some(&letter.inverse()) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

pub(crate) fn reduce_letters(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut buf = Vec::new();
    for l in letters {
        push_reduced(&mut buf, l);
    }
    buf
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word<{}>({})", self.alphabet, self)
    }
}

impl Word {
    pub fn identity(alphabet: Alphabet) -> Word {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Build a word from raw packed letters, reducing freely.
    pub fn from_letters(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Result<Word> {
        let letters = reduce_letters(letters);
        let rank = alphabet.rank();
        if let Some(bad) = letters.iter().find(|l| l.gen() >= rank) {
            return Err(Error::LetterOutsideAlphabet {
                letter: format!("#{}", bad.gen()),
                alphabet,
            });
        }
        Ok(Word { alphabet, letters })
    }

    /// Trusted constructor for letters already known to lie in the alphabet.
    pub(crate) fn from_valid(alphabet: Alphabet, letters: impl IntoIterator<Item = Letter>) -> Word {
        Word {
            alphabet,
            letters: reduce_letters(letters),
        }
    }

    pub fn generator(alphabet: Alphabet, gen: Generator) -> Result<Word> {
        Ok(Word {
            alphabet,
            letters: vec![alphabet.letter(gen, false)?],
        })
    }

    /// `λ_{ij}` in `VP_n`.
    pub fn lambda(n: usize, i: usize, j: usize) -> Result<Word> {
        Word::generator(Alphabet::Lambda(n), Generator::Lambda(i, j))
    }

    /// Product of `λ_{ij}` letters in the given order.
    pub fn lambdas(n: usize, pairs: &[(usize, usize)]) -> Result<Word> {
        let a = Alphabet::Lambda(n);
        let letters = pairs
            .iter()
            .map(|&(i, j)| a.letter(Generator::Lambda(i, j), false))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_valid(a, letters))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters as `(generator, ±1)` pairs.
    pub fn syllables(&self) -> impl Iterator<Item = (Generator, i32)> + '_ {
        self.letters
            .iter()
            .map(move |l| (self.alphabet.generator(l.gen()), l.exponent()))
    }

    fn check_same(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    pub fn invert(&self) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `x^-1 self x`.
    pub fn conjugate(&self, x: &Word) -> Result<Word> {
        x.invert().multiply(self)?.multiply(x)
    }

    /// `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Word) -> Result<Word> {
        self.invert().multiply(&other.invert())?.multiply(self)?.multiply(other)
    }

    /// Product of a sequence of words over one alphabet.
    pub fn product<'a>(alphabet: Alphabet, words: impl IntoIterator<Item = &'a Word>) -> Result<Word> {
        let mut acc = Word::identity(alphabet);
        for w in words {
            acc = acc.multiply(w)?;
        }
        Ok(acc)
    }

    /// Cyclically reduced core together with the conjugator `c` such that
    /// `self = c core c^-1`.
    pub fn cyclic_core(&self) -> (Word, Word) {
        let l = &self.letters;
        let mut t = 0;
        while t < l.len() / 2 && l[t] == l[l.len() - 1 - t].inverse() {
            t += 1;
        }
        (
            Word {
                alphabet: self.alphabet,
                letters: l[t..l.len() - t].to_vec(),
            },
            Word {
                alphabet: self.alphabet,
                letters: l[..t].to_vec(),
            },
        )
    }

    /// Re-interpret the word over another alphabet of the same kind and
    /// at least as many strands, keeping every generator name.
    pub fn embed(&self, target: Alphabet) -> Result<Word> {
        let letters = self
            .syllables()
            .map(|(g, e)| target.letter(g, e < 0))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: target,
            letters,
        })
    }

    /// Homomorphic substitution: each generator is replaced by its image.
    pub fn substitute(&self, images: &HashMap<Generator, Word>) -> Result<Word> {
        let mut target: Option<Alphabet> = None;
        let mut out: Vec<Letter> = Vec::new();
        for (g, e) in self.syllables() {
            let img = images.get(&g).ok_or_else(|| Error::MissingImage(g.to_string()))?;
            match target {
                None => target = Some(img.alphabet),
                Some(t) if t != img.alphabet => {
                    return Err(Error::AlphabetMismatch {
                        left: t,
                        right: img.alphabet,
                    })
                }
                _ => {}
            }
            append_power(&mut out, &img.letters, e < 0);
        }
        let alphabet = match target {
            Some(t) => t,
            // empty input: any image alphabet will do; fall back to the source
            None => images.values().next().map(|w| w.alphabet).unwrap_or(self.alphabet),
        };
        Ok(Word { alphabet, letters: out })
    }

    /// Parse the text format, e.g. `l[1,2] l[2,3]^-1`; `1` is the empty word.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 && tokens[0] == "1" {
            return Ok(Word::identity(alphabet));
        }
        for tok in tokens {
            let (gen, exp) = parse_token(tok)?;
            let l = alphabet.letter(gen, exp < 0)?;
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Ok(Word::from_valid(alphabet, letters))
    }
}

fn append_power(out: &mut Vec<Letter>, img: &[Letter], inverse: bool) {
    if inverse {
        for &l in img.iter().rev() {
            push_reduced(out, l.inverse());
        }
    } else {
        for &l in img {
            push_reduced(out, l);
        }
    }
}

fn parse_token(tok: &str) -> Result<(Generator, i64)> {
    let bad = || Error::Parse(format!("bad token `{tok}`"));
    let (body, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    if exp == 0 {
        return Err(bad());
    }
    let open = body.find('[').ok_or_else(bad)?;
    if !body.ends_with(']') {
        return Err(bad());
    }
    let head = &body[..open];
    let inner = &body[open + 1..body.len() - 1];
    let nums = inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    let gen = match (head, nums.as_slice()) {
        ("l", &[i, j]) => Generator::Lambda(i, j),
        ("s", &[i]) => Generator::Sigma(i),
        ("r", &[i]) => Generator::Rho(i),
        ("x", &[i]) => Generator::X(i),
        _ => return Err(bad()),
    };
    Ok((gen, exp))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, e)) in self.syllables().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            if e < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// A homomorphism between free groups given by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Homomorphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Homomorphism> {
        if images.len() != source.rank() {
            return Err(Error::Invalid(format!(
                "homomorphism from {source} needs {} images, got {}",
                source.rank(),
                images.len()
            )));
        }
        if let Some(w) = images.iter().find(|w| w.alphabet != target) {
            return Err(Error::AlphabetMismatch {
                left: target,
                right: w.alphabet,
            });
        }
        Ok(Homomorphism { source, target, images })
    }

    pub fn from_fn(
        source: Alphabet,
        target: Alphabet,
        mut image: impl FnMut(Generator) -> Result<Word>,
    ) -> Result<Homomorphism> {
        let images = source.generators().map(&mut image).collect::<Result<Vec<_>>>()?;
        Homomorphism::new(source, target, images)
    }

    pub fn source(&self) -> Alphabet {
        self.source
    }

    pub fn target(&self) -> Alphabet {
        self.target
    }

    pub fn image(&self, gen: usize) -> &Word {
        &self.images[gen]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet != self.source {
            return Err(Error::AlphabetMismatch {
                left: self.source,
                right: w.alphabet,
            });
        }
        Ok(self.apply_letters(&w.letters))
    }

    /// Image of an unreduced letter sequence over the source alphabet.
    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Word {
        let mut out = Vec::new();
        for l in letters {
            append_power(&mut out, &self.images[l.gen()].letters, l.is_inverse());
        }
        Word {
            alphabet: self.target,
            letters: out,
        }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.target != self.source {
            return Err(Error::AlphabetMismatch {
                left: self.source,
                right: inner.target,
            });
        }
        let images = inner.images.iter().map(|w| self.apply_letters(&w.letters)).collect();
        Ok(Homomorphism {
            source: inner.source,
            target: self.target,
            images,
        })
    }

    pub fn images_map(&self) -> HashMap<Generator, Word> {
        self.source.generators().zip(self.images.iter().cloned()).collect()
    }
}

/// Free reduction of a raw `(generator, exponent)` sequence. Exponents other
/// than ±1 are expanded into repeated letters.
pub fn reduce(alphabet: Alphabet, raw: impl IntoIterator<Item = (Generator, i32)>) -> Result<Word> {
    let mut letters = Vec::new();
    for (g, e) in raw {
        if e == 0 {
            return Err(out_of_range("exponent", format!("{g}^0")));
        }
        let l = alphabet.letter(g, e < 0)?;
        for _ in 0..e.unsigned_abs() {
            letters.push(l);
        }
    }
    Ok(Word::from_valid(alphabet, letters))
}

// JSON

#[derive(Serialize, Deserialize)]
struct AlphabetJson {
    kind: String,
    n: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GenJson {
    Pair([usize; 2]),
    Named(String),
    Index(usize),
}

#[derive(Serialize, Deserialize)]
struct LetterJson {
    g: GenJson,
    e: i32,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    alphabet: AlphabetJson,
    letters: Vec<LetterJson>,
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlphabetJson {
            kind: self.kind_name().to_string(),
            n: self.strands(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let a = AlphabetJson::deserialize(d)?;
        alphabet_from_json(&a).map_err(serde::de::Error::custom)
    }
}

fn alphabet_from_json(a: &AlphabetJson) -> Result<Alphabet> {
    if a.n == 0 {
        return Err(Error::InvalidStrandCount {
            n: 0,
            reason: "alphabets need n >= 1",
        });
    }
    match a.kind.as_str() {
        "lambda" => Ok(Alphabet::Lambda(a.n)),
        "braid" => Ok(Alphabet::Braid(a.n)),
        "free" => Ok(Alphabet::FreeBasis(a.n)),
        other => Err(Error::Parse(format!("unknown alphabet kind `{other}`"))),
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let letters = self
            .syllables()
            .map(|(g, e)| LetterJson {
                g: match g {
                    Generator::Lambda(i, j) => GenJson::Pair([i, j]),
                    Generator::Sigma(i) => GenJson::Named(format!("s{i}")),
                    Generator::Rho(i) => GenJson::Named(format!("r{i}")),
                    Generator::X(i) => GenJson::Index(i),
                },
                e,
            })
            .collect();
        WordJson {
            alphabet: AlphabetJson {
                kind: self.alphabet.kind_name().to_string(),
                n: self.alphabet.strands(),
            },
            letters,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WordJson::deserialize(d)?;
        word_from_json(w).map_err(serde::de::Error::custom)
    }
}

fn word_from_json(w: WordJson) -> Result<Word> {
    let alphabet = alphabet_from_json(&w.alphabet)?;
    let raw = w
        .letters
        .into_iter()
        .map(|l| {
            let g = match l.g {
                GenJson::Pair([i, j]) => Generator::Lambda(i, j),
                GenJson::Index(i) => Generator::X(i),
                GenJson::Named(s) => {
                    let (head, idx) = s.split_at(1.min(s.len()));
                    let i = idx
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad generator `{s}`")))?;
                    match head {
                        "s" => Generator::Sigma(i),
                        "r" => Generator::Rho(i),
                        _ => return Err(Error::Parse(format!("bad generator `{s}`"))),
                    }
                }
            };
            Ok((g, l.e))
        })
        .collect::<Result<Vec<_>>>()?;
    reduce(alphabet, raw)
}
