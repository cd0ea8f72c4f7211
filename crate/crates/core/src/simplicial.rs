//! Stanley–Reisner complexes, minimal primes of squarefree monomial ideals,
//! the polar complex of a code, simplicial homology over F2 and
//! Cohen–Macaulay checks.
//!
//! Faces and variable subsets are bitmasks over the ring variables, with
//! `x_i` at bit `i - 1` and `y_i` at bit `n + i - 1`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::algebra::{AmbientRing, Monomial, NeuronSet};
use crate::codes::{Code, IntervalSpec};
use crate::error::{Error, Result};
use crate::neural_ideal::{primary_decomposition_neural, PsmPrime};
use crate::polarization::{polarize_ideal, polarize_vanishing_ideal};

fn mask_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    bits(a).cmp(bits(b))
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask & (1u64 << b) != 0)
}

/// A set `W` of variables of the polarized ring, naming the prime `q_W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariableSubset {
    n: usize,
    vars: u64,
}

impl VariableSubset {
    pub fn new(n: usize, vars: u64) -> Result<Self> {
        let ring = AmbientRing::polarized(n)?;
        let nv = ring.num_vars();
        if nv < 64 && vars >> nv != 0 {
            return Err(Error::IndexOutOfRange { index: 64 - vars.leading_zeros() as usize, n: nv });
        }
        Ok(Self { n, vars })
    }

    /// `W = {x_i : i ∈ xs} ∪ {y_j : j ∈ ys}`.
    pub fn from_parts(n: usize, xs: NeuronSet, ys: NeuronSet) -> Result<Self> {
        Self::new(n, xs.bits() as u64 | ((ys.bits() as u64) << n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> u64 {
        self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vars == 0
    }

    fn x_bits(&self) -> NeuronSet {
        NeuronSet::from_bits((self.vars & ((1u64 << self.n) - 1)) as u32)
    }

    fn y_bits(&self) -> NeuronSet {
        NeuronSet::from_bits((self.vars >> self.n) as u32)
    }

    /// `x(W) = {i : x_i ∈ W, y_i ∉ W}`.
    pub fn x_w(&self) -> NeuronSet {
        self.x_bits().difference(&self.y_bits())
    }

    /// `y(W) = {i : y_i ∈ W, x_i ∉ W}`.
    pub fn y_w(&self) -> NeuronSet {
        self.y_bits().difference(&self.x_bits())
    }

    /// `b(W) = {i : x_i, y_i ∈ W}`.
    pub fn b_w(&self) -> NeuronSet {
        self.x_bits().intersection(&self.y_bits())
    }

    /// `n(W) = {i : x_i, y_i ∉ W}`.
    pub fn n_w(&self) -> NeuronSet {
        NeuronSet::full(self.n).difference(&self.x_bits().union(&self.y_bits()))
    }

    pub fn var_names(&self) -> Vec<String> {
        let ring = AmbientRing::polarized(self.n).expect("validated");
        bits(self.vars).map(|v| ring.var_name(v)).collect()
    }

    /// The pseudomonomial prime obtained by `y_i -> 1 - x_i`, when `b(W)` is empty.
    pub fn depolarize(&self) -> Option<PsmPrime> {
        if !self.b_w().is_empty() {
            return None;
        }
        IntervalSpec::new(self.n, self.x_w(), self.y_w()).ok().map(PsmPrime::new)
    }

    /// The interval `V_W` over `[n]`: `-` on `b(W)`, `0` on `x(W)`, `1` on
    /// `y(W)`, `*` on `n(W)`.
    pub fn interval_string(&self) -> String {
        (1..=self.n)
            .map(|i| {
                if self.b_w().contains(i) {
                    '-'
                } else if self.x_w().contains(i) {
                    '0'
                } else if self.y_w().contains(i) {
                    '1'
                } else {
                    '*'
                }
            })
            .collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.vars & !other.vars == 0
    }
}

impl Ord for VariableSubset {
    /// By size, then lexicographically on the ascending variable list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then(mask_cmp(self.vars, other.vars)).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VariableSubset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VariableSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.var_names().join(", "))
    }
}

/// Inclusion-minimal variable sets meeting the support of every generator
/// (the minimal primes of the ideal), ordered by size then lexicographically.
///
/// A unit generator admits no transversal; no generators at all gives the
/// single empty set (the zero ideal is prime).
pub fn minimal_primes_squarefree(gens: &[Monomial], ring: AmbientRing) -> Result<Vec<VariableSubset>> {
    let supports = squarefree_supports(gens, ring)?;
    let n = ring.neurons();
    Ok(minimal_transversals(&supports)
        .into_iter()
        .map(|w| VariableSubset { n, vars: w })
        .collect())
}

fn squarefree_supports(gens: &[Monomial], ring: AmbientRing) -> Result<Vec<u64>> {
    gens.iter()
        .map(|g| {
            ring.ensure_same(&g.ring())?;
            if !g.is_squarefree() {
                return Err(Error::NotSquarefree(g.to_string()));
            }
            Ok(g.support())
        })
        .collect()
}

/// Exhaustive enumeration over subsets of the union of the supports.
fn minimal_transversals(supports: &[u64]) -> Vec<u64> {
    if supports.contains(&0) {
        return Vec::new();
    }
    let universe = supports.iter().fold(0u64, |a, &s| a | s);
    let hits = |w: u64| supports.iter().all(|&s| s & w != 0);
    let mut out: Vec<u64> = subsets_of(universe)
        .filter(|&w| hits(w))
        .filter(|&w| bits(w).all(|v| !hits(w & !(1u64 << v))))
        .collect();
    out.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(mask_cmp(a, b)));
    out
}

/// All submasks of `mask`, in increasing numeric order.
fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
        Some(cur)
    })
}

/// Pairs `(i, j)` such that component `i` strictly contains component `j`,
/// making `i` redundant in an intersection.
pub fn redundant_components(primes: &[VariableSubset]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in primes.iter().enumerate() {
        for (j, b) in primes.iter().enumerate() {
            if i != j && b.is_subset(a) && a != b {
                out.push((i, j));
            }
        }
    }
    out
}

/// A finite simplicial complex given by its facets.
///
/// The void complex has no faces at all; the complex `{∅}` has the single
/// facet `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets among `generators` as facets.
    pub fn new(vertices: Vec<String>, generators: impl IntoIterator<Item = u64>) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(Error::ShapeMismatch(format!("{} vertices exceed 64", vertices.len())));
        }
        let all = if vertices.len() == 64 { u64::MAX } else { (1u64 << vertices.len()) - 1 };
        let gens: BTreeSet<u64> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|&&g| g & !all != 0) {
            return Err(Error::ShapeMismatch(format!("face {bad:#x} uses an unknown vertex")));
        }
        let mut facets: Vec<u64> =
            gens.iter().copied().filter(|&g| !gens.iter().any(|&h| h != g && g & !h == 0)).collect();
        facets.sort_by(|&a, &b| mask_cmp(a, b));
        Ok(Self { vertices, facets })
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: Vec<String>) -> Result<Self> {
        let all = if vertices.len() >= 64 { u64::MAX } else { (1u64 << vertices.len()) - 1 };
        Self::new(vertices, [all])
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Facets as vertex bitmasks, ordered lexicographically on vertex indices.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_names(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|&f| bits(f).map(|v| self.vertices[v].clone()).collect()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    /// Whether every facet has the same size.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// All faces, including `∅` unless the complex is void, sorted by size
    /// then lexicographically.
    pub fn faces(&self) -> Vec<u64> {
        let mut set = HashSet::new();
        for &f in &self.facets {
            set.extend(subsets_of(f));
        }
        let mut out: Vec<u64> = set.into_iter().collect();
        out.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(mask_cmp(a, b)));
        out
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`; void if `F` is not a face.
    pub fn link(&self, face: u64) -> SimplicialComplex {
        let gens: Vec<u64> = self.facets.iter().filter(|&&f| face & !f == 0).map(|&f| f & !face).collect();
        Self::new(self.vertices.clone(), gens).expect("subsets of existing facets")
    }

    /// Adds a new vertex joined to every facet.
    pub fn cone(&self, apex: &str) -> Result<SimplicialComplex> {
        let mut vertices = self.vertices.clone();
        vertices.push(apex.to_string());
        let bit = 1u64 << self.vertices.len();
        Self::new(vertices, self.facets.iter().map(|&f| f | bit))
    }

    /// Face counts `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for face in self.faces() {
            let k = face.count_ones() as usize;
            if out.len() <= k {
                out.resize(k + 1, 0);
            }
            out[k] += 1;
        }
        out
    }
}

/// Stanley–Reisner complex of a squarefree ideal on all variables of `ring`:
/// the facets are complements of the minimal primes.
pub fn stanley_reisner_complex(gens: &[Monomial], ring: AmbientRing) -> Result<SimplicialComplex> {
    let nv = ring.num_vars();
    let all = if nv == 64 { u64::MAX } else { (1u64 << nv) - 1 };
    let supports = squarefree_supports(gens, ring)?;
    let names = (0..nv).map(|v| ring.var_name(v)).collect();
    SimplicialComplex::new(names, minimal_transversals(&supports).into_iter().map(|w| all & !w))
}

/// The polar complex: Stanley–Reisner complex of `<x_i y_i> + P(J_C)`.
pub fn polar_complex(c: &Code) -> SimplicialComplex {
    let ideal = polarize_vanishing_ideal(c);
    stanley_reisner_complex(ideal.generators(), c.polar_ring()).expect("squarefree generators")
}

/// Whether `V_W` (0 on `x(W)`, 1 on `y(W)`, free on `n(W)`) is contained in
/// the quotient code `C / b(W)`.
pub fn interval_of_w(w: &VariableSubset, c: &Code) -> Result<bool> {
    if w.n != c.n() {
        return Err(Error::LengthMismatch { expected: c.n(), got: w.n });
    }
    Ok(interval_of_w_unchecked(w, c))
}

fn interval_of_w_unchecked(w: &VariableSubset, c: &Code) -> bool {
    let kept = NeuronSet::full(c.n()).difference(&w.b_w());
    let fixed = w.x_w().union(&w.y_w());
    let projected: HashSet<u32> = c
        .words()
        .map(|cw| cw.support().intersection(&kept))
        .filter(|s| s.intersection(&fixed) == w.y_w())
        .map(|s| s.bits())
        .collect();
    projected.len() == 1usize << w.n_w().len()
}

/// All `W` with `q_W ⊇ P(J_C)` by the interval criterion; with
/// `minimal_only`, just the inclusion-minimal ones. Ordered like
/// [`minimal_primes_squarefree`].
pub fn primes_over_polar(c: &Code, minimal_only: bool) -> Vec<VariableSubset> {
    let n = c.n();
    let nv = 2 * n;
    let contains = |vars: u64| interval_of_w_unchecked(&VariableSubset { n, vars }, c);
    let mut out: Vec<VariableSubset> = (0..1u64 << nv)
        .filter(|&w| contains(w))
        .filter(|&w| !minimal_only || bits(w).all(|v| !contains(w & !(1u64 << v))))
        .map(|vars| VariableSubset { n, vars })
        .collect();
    out.sort();
    out
}

fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len() * 64);
    for col in 0..width {
        let (word, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[word] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers over F2 of the complex with the given faces, indexed
/// from degree `-1`. `faces` must be closed under subsets.
pub(crate) fn reduced_betti_of_faces(faces: &[u64]) -> Vec<usize> {
    let Some(top) = faces.iter().map(|f| f.count_ones() as usize).max() else {
        return Vec::new();
    };
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u64, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
    // rank of the boundary from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let words = by_size[k - 1].len().div_ceil(64).max(1);
        let rows: Vec<Vec<u64>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0u64; words];
                for v in bits(f) {
                    let j = index[k - 1][&(f & !(1u64 << v))];
                    row[j / 64] |= 1u64 << (j % 64);
                }
                row
            })
            .collect();
        ranks[k] = gf2_rank(rows);
    }
    (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// `dim H̃_i(K; F2)`; degree `-1` is nonzero only for `{∅}`.
pub fn reduced_homology(k: &SimplicialComplex, i: isize) -> usize {
    let betti = reduced_betti_of_faces(&k.faces());
    usize::try_from(i + 1).ok().and_then(|idx| betti.get(idx).copied()).unwrap_or(0)
}

/// All reduced Betti numbers, indexed from degree `-1` up to the dimension.
pub fn reduced_betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    reduced_betti_of_faces(&k.faces())
}

/// Reisner's criterion over F2: every link `lk(F)` (including `F = ∅`) has
/// vanishing reduced homology below its dimension.
pub fn reisner_cm(k: &SimplicialComplex) -> bool {
    k.faces().into_iter().all(|f| {
        let link = k.link(f);
        let dim = link.dim().unwrap_or(-1);
        let betti = reduced_betti_numbers(&link);
        // entry idx is degree idx - 1; only degrees below dim must vanish
        betti.iter().enumerate().all(|(idx, &b)| (idx as isize - 1) >= dim || b == 0)
    })
}

/// Which ring's components to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `R / J_C`: `n` minus the number of fixed coordinates of each maximal interval.
    Neural,
    /// `S / P(J_C)`: `2n - |W|` over the minimal primes.
    Polar,
}

/// Krull dimensions of the irreducible components.
pub fn krull_dimensions(c: &Code, side: Side) -> BTreeSet<usize> {
    match side {
        Side::Neural => {
            primary_decomposition_neural(c).iter().map(|p| c.n() - p.alpha().fixed().len()).collect()
        }
        Side::Polar => {
            let ideal = polarize_ideal(c);
            minimal_primes_squarefree(ideal.generators(), c.polar_ring())
                .expect("squarefree generators")
                .iter()
                .map(|w| 2 * c.n() - w.len())
                .collect()
        }
    }
}

/// Whether `S / P(J_C)` is Cohen–Macaulay over F2.
///
/// Not equidimensional means not Cohen–Macaulay; otherwise Reisner's
/// criterion decides on the Stanley–Reisner complex of `P(J_C)`.
pub fn is_cm_polar(c: &Code) -> bool {
    if krull_dimensions(c, Side::Polar).len() > 1 {
        return false;
    }
    let ideal = polarize_ideal(c);
    let complex = stanley_reisner_complex(ideal.generators(), c.polar_ring()).expect("squarefree generators");
    reisner_cm(&complex)
}

/// One-directional Cohen–Macaulay verdict for `R / J_C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmVerdict {
    /// Certified: the polar ring is Cohen–Macaulay or `R / J_C` is zero-dimensional.
    Cm,
    /// Neither certificate applies; no negative claim is made.
    Inconclusive,
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmVerdict::Cm => "cm",
            CmVerdict::Inconclusive => "inconclusive",
        })
    }
}

pub fn cm_report_neural(c: &Code) -> CmVerdict {
    let zero_dimensional = krull_dimensions(c, Side::Neural).iter().all(|&d| d == 0);
    if zero_dimensional || is_cm_polar(c) {
        CmVerdict::Cm
    } else {
        CmVerdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(words: &[&str]) -> Code {
        Code::from_strs(words).unwrap()
    }

    fn names(v: &[VariableSubset]) -> Vec<String> {
        v.iter().map(|w| w.to_string()).collect()
    }

    fn named(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("v{i}")).collect()
    }

    fn b5() -> Code {
        code(&["000", "100", "110", "011"])
    }

    const B5_PRIMES: [&str; 6] =
        ["<x2, x3>", "<x3, y1>", "<x3, y3>", "<x1, x2, y2>", "<x1, y1, y2>", "<x1, y2, y3>"];

    #[test]
    fn index_sets_partition_neurons() {
        let w = VariableSubset::from_parts(3, NeuronSet::of(&[1, 3]), NeuronSet::of(&[1, 2])).unwrap();
        assert_eq!(w.x_w(), NeuronSet::of(&[3]));
        assert_eq!(w.y_w(), NeuronSet::of(&[2]));
        assert_eq!(w.b_w(), NeuronSet::of(&[1]));
        assert_eq!(w.n_w(), NeuronSet::EMPTY);
        assert_eq!(w.interval_string(), "-10");
    }

    #[test]
    fn b5_minimal_primes() {
        let ideal = polarize_ideal(&b5());
        let primes = minimal_primes_squarefree(ideal.generators(), b5().polar_ring()).unwrap();
        assert_eq!(names(&primes), B5_PRIMES);
        assert_eq!(names(&primes_over_polar(&b5(), true)), B5_PRIMES);
    }

    #[test]
    fn principal_and_degenerate_ideals() {
        let s = AmbientRing::polarized(1).unwrap();
        let x1 = Monomial::var(s, 0).unwrap();
        assert_eq!(names(&minimal_primes_squarefree(&[x1], s).unwrap()), ["<x1>"]);
        assert_eq!(minimal_primes_squarefree(&[], s).unwrap().len(), 1);
        assert!(minimal_primes_squarefree(&[Monomial::one(s)], s).unwrap().is_empty());
        let sq = x1.mul(&x1).unwrap();
        assert!(matches!(minimal_primes_squarefree(&[sq], s), Err(Error::NotSquarefree(_))));
    }

    #[test]
    fn e4_mixed_heights() {
        let e4 = code(&["000", "110", "011", "101"]);
        let ideal = polarize_ideal(&e4);
        let texts: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, ["x1*y2*y3", "x1*x2*x3", "x2*y1*y3", "x3*y1*y2"]);
        let primes = names(&minimal_primes_squarefree(ideal.generators(), e4.polar_ring()).unwrap());
        assert!(primes.contains(&"<x1, y1>".to_string()));
        assert!(primes.contains(&"<x1, x2, x3>".to_string()));
    }

    #[test]
    fn intervals_of_variable_sets() {
        let w = |xs: &[usize], ys: &[usize]| {
            VariableSubset::from_parts(3, NeuronSet::of(xs), NeuronSet::of(ys)).unwrap()
        };
        assert!(interval_of_w(&w(&[1], &[2, 3]), &b5()).unwrap());
        assert!(interval_of_w(&w(&[3], &[3]), &b5()).unwrap());
        assert!(!interval_of_w(&w(&[1], &[]), &b5()).unwrap());
        assert!(interval_of_w(&w(&[1, 2, 3], &[1, 2, 3]), &b5()).unwrap());
        assert!(!interval_of_w(&w(&[1, 2, 3], &[1, 2, 3]), &Code::empty(3).unwrap()).unwrap());
    }

    #[test]
    fn three_region_polar_primes() {
        let c = code(&["000", "100", "010", "110", "101", "111"]);
        assert_eq!(names(&primes_over_polar(&c, true)), ["<x3>", "<y1>"]);
    }

    #[test]
    fn stanley_reisner_examples() {
        let r = AmbientRing::plain(2).unwrap();
        let x1x2 = Monomial::from_support(r, 0b11).unwrap();
        let k = stanley_reisner_complex(&[x1x2], r).unwrap();
        assert_eq!(k.facet_names(), vec![vec!["x1".to_string()], vec!["x2".to_string()]]);
        let full = stanley_reisner_complex(&[], r).unwrap();
        assert_eq!(full.facets(), &[0b11]);
        let ideal = polarize_ideal(&b5());
        assert_eq!(stanley_reisner_complex(ideal.generators(), b5().polar_ring()).unwrap().facets().len(), 6);
    }

    #[test]
    fn polar_complexes() {
        let a18 = code(&["000", "100", "111"]);
        let k = polar_complex(&a18);
        let mut facets = k.facet_names();
        facets.sort();
        assert_eq!(
            facets,
            vec![vec!["x1", "x2", "x3"], vec!["x1", "y2", "y3"], vec!["y1", "y2", "y3"]]
        );
        assert!(polar_complex(&Code::empty(2).unwrap()).is_void());
    }

    #[test]
    fn homology_of_small_complexes() {
        let hollow = SimplicialComplex::new(named(3), [0b011, 0b101, 0b110]).unwrap();
        assert_eq!(reduced_homology(&hollow, 1), 1);
        assert_eq!(reduced_homology(&hollow, 0), 0);
        let simplex = SimplicialComplex::simplex(named(4)).unwrap();
        assert!(reduced_betti_numbers(&simplex).iter().all(|&b| b == 0));
        let two_points = SimplicialComplex::new(named(2), [0b01, 0b10]).unwrap();
        assert_eq!(reduced_homology(&two_points, 0), 1);
        let empty_face = SimplicialComplex::new(named(2), [0]).unwrap();
        assert_eq!(reduced_homology(&empty_face, -1), 1);
        let void = SimplicialComplex::new(named(2), []).unwrap();
        assert_eq!(reduced_betti_numbers(&void), Vec::<usize>::new());
    }

    #[test]
    fn reisner_examples() {
        let boundary = SimplicialComplex::new(named(3), [0b011, 0b101, 0b110]).unwrap();
        assert!(reisner_cm(&boundary));
        let two_edges = SimplicialComplex::new(named(4), [0b0011, 0b1100]).unwrap();
        assert!(!reisner_cm(&two_edges));
        assert!(!reisner_cm(&two_edges.cone("apex").unwrap()));
        assert!(reisner_cm(&boundary.cone("apex").unwrap()));
    }

    #[test]
    fn dimensions_and_cm() {
        let e4 = code(&["000", "110", "011", "101"]);
        assert_eq!(krull_dimensions(&e4, Side::Neural), BTreeSet::from([0]));
        assert_eq!(krull_dimensions(&e4, Side::Polar), BTreeSet::from([3, 4]));
        assert!(!is_cm_polar(&e4));
        assert_eq!(cm_report_neural(&e4), CmVerdict::Cm);

        let three = code(&["000", "100", "010", "110", "101", "111"]);
        assert_eq!(krull_dimensions(&three, Side::Neural), BTreeSet::from([2]));
        assert!(is_cm_polar(&three));
        assert_eq!(cm_report_neural(&three), CmVerdict::Cm);

        assert!(is_cm_polar(&Code::full(2).unwrap()));
        assert_eq!(cm_report_neural(&b5()), CmVerdict::Inconclusive);
        assert_eq!(krull_dimensions(&b5(), Side::Neural), BTreeSet::from([0, 1]));
    }

    #[test]
    fn redundancy_detection() {
        let w = |xs: &[usize], ys: &[usize]| {
            VariableSubset::from_parts(3, NeuronSet::of(xs), NeuronSet::of(ys)).unwrap()
        };
        let list = [w(&[2, 3], &[]), w(&[2, 3], &[2]), w(&[3], &[1])];
        assert_eq!(redundant_components(&list), vec![(1, 0)]);
    }
}
