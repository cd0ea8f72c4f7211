//! Combinatorial codes, covers, quotient codes and Boolean intervals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;

use crate::algebra::{AmbientRing, NeuronSet, MAX_NEURONS};
use crate::error::{Error, Result};

/// A word in `{0,1}^n`, stored as the set of firing neurons.
///
/// Codewords order like their `0`/`1` strings: `000 < 001 < 010 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Codeword(NeuronSet);

impl Codeword {
    pub fn from_support(support: NeuronSet) -> Self {
        Self(support)
    }

    pub fn support(&self) -> NeuronSet {
        self.0
    }

    /// Value of coordinate `i` (one-based).
    pub fn bit(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    /// The `0`/`1` string of length `n`.
    pub fn format(&self, n: usize) -> String {
        (1..=n).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }

    fn string_key(&self) -> u32 {
        // neuron 1 becomes the most significant bit
        self.0.bits().reverse_bits()
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.string_key().cmp(&other.string_key())
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A combinatorial code: a set of words of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    words: BTreeSet<Codeword>,
}

impl Code {
    pub fn new(n: usize, words: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        if n == 0 || n > MAX_NEURONS {
            return Err(Error::NeuronCount { got: n, max: MAX_NEURONS });
        }
        let all = NeuronSet::full(n);
        let mut set = BTreeSet::new();
        for w in words {
            if let Some(bad) = w.support().difference(&all).iter().next() {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            set.insert(w);
        }
        Ok(Self { n, words: set })
    }

    /// Builds a code from `0`/`1` strings of equal length.
    pub fn from_strs(words: &[&str]) -> Result<Self> {
        let text = words.join("\n");
        Self::parse(&text)
    }

    /// Parses the line-oriented code format: one word of `0`/`1` per line,
    /// `#` starts a comment, blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut words = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let line_no = lineno + 1;
            let len = line.chars().count();
            let expected = *n.get_or_insert(len);
            if len != expected {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("word {line:?} has length {len}, expected {expected}"),
                });
            }
            if len > MAX_NEURONS {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("word length {len} exceeds the supported maximum of {MAX_NEURONS}"),
                });
            }
            let mut support = NeuronSet::EMPTY;
            for (i, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => support = support.with(i + 1),
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("invalid character {other:?} in word {line:?}"),
                        })
                    }
                }
            }
            words.push(Codeword(support));
        }
        let n = n.ok_or(Error::NoCodewords)?;
        Self::new(n, words)
    }

    /// Every word of length `n`.
    pub fn full(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_NEURONS {
            return Err(Error::NeuronCount { got: n, max: MAX_NEURONS });
        }
        Self::new(n, (0..1u32 << n).map(|b| Codeword(NeuronSet::from_bits(b))))
    }

    /// The code with no words.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The plain ring `F2[x1..xn]` of this code.
    pub fn ring(&self) -> AmbientRing {
        AmbientRing::plain(self.n).expect("code length validated on construction")
    }

    /// The polarized ring `F2[x1..xn, y1..yn]` of this code.
    pub fn polar_ring(&self) -> AmbientRing {
        AmbientRing::polarized(self.n).expect("code length validated on construction")
    }

    /// Words in ascending string order.
    pub fn words(&self) -> impl Iterator<Item = &Codeword> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.words.len() == 1usize << self.n
    }

    pub fn contains(&self, word: &Codeword) -> bool {
        self.words.contains(word)
    }

    /// Words of `{0,1}^n` missing from the code, ascending.
    pub fn non_codewords(&self) -> Vec<Codeword> {
        (0..1u32 << self.n)
            .map(|b| Codeword(NeuronSet::from_bits(b)))
            .filter(|w| !self.words.contains(w))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Counts the words agreeing with `pattern` on the coordinates in `mask`.
    pub(crate) fn count_matching(&self, mask: NeuronSet, pattern: NeuronSet) -> usize {
        self.words.iter().filter(|w| w.support().intersection(&mask) == pattern).count()
    }

    /// The code file text: one word per line, ascending.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for w in &self.words {
            s.push_str(&w.format(self.n));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, w) in self.words.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", w.format(self.n))?;
        }
        write!(f, "}}")
    }
}

/// `parse_code`: read a code from its text format.
pub fn parse_code(text: &str) -> Result<Code> {
    Code::parse(text)
}

/// A quotient code together with the original index of each surviving neuron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCode {
    pub code: Code,
    /// `kept[k]` is the original (one-based) index of new neuron `k + 1`.
    pub kept: Vec<usize>,
}

/// Deletes the neurons in `s` and relabels the survivors `1..` in order.
///
/// Deleting every neuron is rejected: codes need at least one coordinate.
pub fn quotient_code(c: &Code, s: NeuronSet) -> Result<QuotientCode> {
    if let Some(bad) = s.difference(&NeuronSet::full(c.n)).iter().next() {
        return Err(Error::IndexOutOfRange { index: bad, n: c.n });
    }
    let kept: Vec<usize> = (1..=c.n).filter(|&i| !s.contains(i)).collect();
    if kept.is_empty() {
        return Err(Error::NeuronCount { got: 0, max: MAX_NEURONS });
    }
    let words = c.words.iter().map(|w| {
        let support = kept
            .iter()
            .enumerate()
            .filter(|(_, &orig)| w.bit(orig))
            .fold(NeuronSet::EMPTY, |acc, (k, _)| acc.with(k + 1));
        Codeword(support)
    });
    Ok(QuotientCode { code: Code::new(kept.len(), words)?, kept })
}

/// One coordinate of an interval specification. Orders `0 < 1 < *`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trit {
    Zero,
    One,
    Star,
}

/// A vector `alpha` in `{0, 1, *}^n`; it names the interval `V_alpha` of
/// words that agree with `alpha` off the `*` positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    n: usize,
    zeros: NeuronSet,
    ones: NeuronSet,
}

impl IntervalSpec {
    pub fn new(n: usize, zeros: NeuronSet, ones: NeuronSet) -> Result<Self> {
        let all = NeuronSet::full(n);
        for set in [zeros, ones] {
            if let Some(bad) = set.difference(&all).iter().next() {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
        }
        if let Some(both) = zeros.intersection(&ones).iter().next() {
            return Err(Error::OverlappingSupports(both));
        }
        Ok(Self { n, zeros, ones })
    }

    /// All-`*` specification of length `n`.
    pub fn star(n: usize) -> Self {
        Self { n, zeros: NeuronSet::EMPTY, ones: NeuronSet::EMPTY }
    }

    /// Parses strings such as `1**0`.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.chars().count();
        let mut zeros = NeuronSet::EMPTY;
        let mut ones = NeuronSet::EMPTY;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => zeros = zeros.with(i + 1),
                '1' => ones = ones.with(i + 1),
                '*' => {}
                other => {
                    return Err(Error::Parse { line: 1, msg: format!("invalid interval character {other:?}") })
                }
            }
        }
        Self::new(n, zeros, ones)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> NeuronSet {
        self.zeros
    }

    pub fn ones(&self) -> NeuronSet {
        self.ones
    }

    pub fn fixed(&self) -> NeuronSet {
        self.zeros.union(&self.ones)
    }

    pub fn stars(&self) -> NeuronSet {
        NeuronSet::full(self.n).difference(&self.fixed())
    }

    pub fn entry(&self, i: usize) -> Trit {
        if self.zeros.contains(i) {
            Trit::Zero
        } else if self.ones.contains(i) {
            Trit::One
        } else {
            Trit::Star
        }
    }

    pub fn entries(&self) -> Vec<Trit> {
        (1..=self.n).map(|i| self.entry(i)).collect()
    }

    pub fn contains(&self, word: &Codeword) -> bool {
        word.support().intersection(&self.fixed()) == self.ones
    }

    /// The same specification with coordinate `i` replaced by `*`.
    pub fn relaxed(&self, i: usize) -> Self {
        Self { n: self.n, zeros: self.zeros.without(i), ones: self.ones.without(i) }
    }
}

impl Ord for IntervalSpec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries().cmp(&other.entries())
    }
}

impl PartialOrd for IntervalSpec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.entries() {
            let ch = match t {
                Trit::Zero => '0',
                Trit::One => '1',
                Trit::Star => '*',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

/// `V_alpha ⊆ c`.
pub fn interval_in_code(alpha: &IntervalSpec, c: &Code) -> Result<bool> {
    if alpha.n != c.n {
        return Err(Error::LengthMismatch { expected: c.n, got: alpha.n });
    }
    Ok(interval_in_code_unchecked(alpha, c))
}

pub(crate) fn interval_in_code_unchecked(alpha: &IntervalSpec, c: &Code) -> bool {
    // codewords are distinct, so counting the matches decides containment
    c.count_matching(alpha.fixed(), alpha.ones) == 1usize << alpha.stars().len()
}

/// Every specification over `{0,1,*}^n`, in no particular order.
pub(crate) fn all_specs(n: usize) -> impl Iterator<Item = IntervalSpec> {
    let full = NeuronSet::full(n).bits();
    (0..=full).flat_map(move |fixed| {
        let mut out = Vec::with_capacity(1 << fixed.count_ones());
        let mut ones = fixed;
        loop {
            out.push(IntervalSpec {
                n,
                zeros: NeuronSet::from_bits(fixed & !ones),
                ones: NeuronSet::from_bits(ones),
            });
            if ones == 0 {
                break;
            }
            ones = (ones - 1) & fixed;
        }
        out
    })
}

/// The inclusion-maximal intervals contained in `c`, ascending in the
/// `0 < 1 < *` lexicographic order.
pub fn maximal_intervals(c: &Code) -> Vec<IntervalSpec> {
    let mut out: Vec<IntervalSpec> = all_specs(c.n)
        .filter(|a| interval_in_code_unchecked(a, c))
        .filter(|a| a.fixed().iter().all(|i| !interval_in_code_unchecked(&a.relaxed(i), c)))
        .collect();
    out.sort();
    out
}

/// A finite cover `U_1..U_n` of an explicit point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    points: Vec<String>,
    sets: Vec<BTreeSet<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverFile {
    points: Vec<String>,
    sets: BTreeMap<String, Vec<String>>,
}

impl Cover {
    /// `sets[i]` lists the ids of the points in `U_{i+1}`.
    pub fn new(points: Vec<String>, sets: Vec<Vec<String>>) -> Result<Self> {
        if sets.is_empty() || sets.len() > MAX_NEURONS {
            return Err(Error::NeuronCount { got: sets.len(), max: MAX_NEURONS });
        }
        let mut index = BTreeMap::new();
        for (k, p) in points.iter().enumerate() {
            if index.insert(p.clone(), k).is_some() {
                return Err(Error::Cover(format!("duplicate point id {p:?}")));
            }
        }
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(i, members)| {
                members
                    .iter()
                    .map(|id| {
                        index.get(id).copied().ok_or_else(|| {
                            Error::Cover(format!("set {} mentions unknown point {id:?}", i + 1))
                        })
                    })
                    .collect::<Result<BTreeSet<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { points, sets })
    }

    /// Parses `{"points": [...], "sets": {"1": [...], ..., "n": [...]}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CoverFile = serde_json::from_str(text).map_err(|e| Error::Cover(e.to_string()))?;
        let n = file.sets.len();
        let mut sets = vec![None; n];
        for (key, members) in file.sets {
            let i: usize = key
                .parse()
                .ok()
                .filter(|i| (1..=n).contains(i))
                .ok_or_else(|| Error::Cover(format!("set keys must be 1..{n}, found {key:?}")))?;
            sets[i - 1] = Some(members);
        }
        let sets = sets
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Cover("duplicate set keys".into()))?;
        Self::new(file.points, sets)
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    /// Point indices in `U_i` (one-based `i`).
    pub fn set(&self, i: usize) -> &BTreeSet<usize> {
        &self.sets[i - 1]
    }

    /// The sets containing point `p`.
    pub fn signature(&self, p: usize) -> NeuronSet {
        (1..=self.n()).filter(|&i| self.sets[i - 1].contains(&p)).fold(NeuronSet::EMPTY, |s, i| s.with(i))
    }
}

/// The code of a cover: one word per point, recording which sets contain it.
pub fn code_of_cover(cov: &Cover) -> Code {
    Code::new(cov.n(), (0..cov.points.len()).map(|p| Codeword(cov.signature(p))))
        .expect("cover size validated on construction")
}
