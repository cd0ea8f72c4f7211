//! Free complexes over `R` or `S`: the Taylor complex of a monomial list,
//! unit-entry minimization, the canonical resolution of a neural ideal,
//! Betti tables, verification of `d ∘ d = 0`, and a Hochster-formula oracle.
//!
//! Over F2 every sign `ε(H, h)` of the Taylor differential equals 1, so the
//! complexes store unsigned entries.

use std::collections::HashMap;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::algebra::{AmbientRing, Monomial, Polynomial};
use crate::codes::Code;
use crate::error::{Error, Result};
use crate::polarization::{depolarize_poly, polarize_ideal};
use crate::simplicial::reduced_betti_of_faces;

/// Largest generator count accepted by [`taylor_complex`] (`2^20` basis elements).
pub const MAX_TAYLOR_GENERATORS: usize = 20;

/// A sparse matrix of polynomials, stored by column.
///
/// Distinct entries are interned, so a Taylor differential with millions of
/// nonzero positions holds only a few hundred polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: AmbientRing,
    rows: usize,
    pool: Vec<Polynomial>,
    columns: Vec<Vec<(u32, u32)>>,
}

#[derive(Default)]
struct Interner {
    pool: Vec<Polynomial>,
    ids: FxHashMap<Polynomial, u32>,
    monomial_ids: FxHashMap<Monomial, u32>,
}

impl Interner {
    fn monomial_id(&mut self, m: Monomial) -> u32 {
        if let Some(&id) = self.monomial_ids.get(&m) {
            return id;
        }
        let id = self.id(Polynomial::from_monomial(m));
        self.monomial_ids.insert(m, id);
        id
    }

    fn id(&mut self, p: Polynomial) -> u32 {
        if let Some(&id) = self.ids.get(&p) {
            return id;
        }
        let id = self.pool.len() as u32;
        self.pool.push(p.clone());
        self.ids.insert(p, id);
        id
    }
}

impl PolyMatrix {
    pub fn zeros(ring: AmbientRing, rows: usize, cols: usize) -> Self {
        Self { ring, rows, pool: Vec::new(), columns: vec![Vec::new(); cols] }
    }

    /// Builds a matrix from per-column `(row, entry)` lists; zero entries are
    /// dropped and a repeated position is an error.
    pub fn from_columns(
        ring: AmbientRing,
        rows: usize,
        columns: Vec<Vec<(usize, Polynomial)>>,
    ) -> Result<Self> {
        let mut interner = Interner::default();
        let mut out = Vec::with_capacity(columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            let mut entries = Vec::with_capacity(col.len());
            for (r, p) in col {
                ring.ensure_same(&p.ring())?;
                if r >= rows {
                    return Err(Error::ShapeMismatch(format!("row {r} in a matrix with {rows} rows")));
                }
                if !p.is_zero() {
                    entries.push((r as u32, interner.id(p)));
                }
            }
            entries.sort_unstable();
            if entries.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::ShapeMismatch(format!("repeated row in column {c}")));
            }
            out.push(entries);
        }
        Ok(Self { ring, rows, pool: interner.pool, columns: out })
    }

    /// Builds a matrix from dense rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(ring: AmbientRing, cols: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let mut columns: Vec<Vec<(usize, Polynomial)>> = vec![Vec::new(); cols];
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {r} has {} entries, expected {cols}", row.len())));
            }
            for (c, p) in row.into_iter().enumerate() {
                columns[c].push((r, p));
            }
        }
        Self::from_columns(ring, nrows, columns)
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Polynomial {
        self.columns[col]
            .binary_search_by_key(&(row as u32), |&(r, _)| r)
            .map(|i| self.pool[self.columns[col][i].1 as usize].clone())
            .unwrap_or_else(|_| Polynomial::zero(self.ring))
    }

    /// Nonzero entries of a column, by increasing row.
    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &Polynomial)> + '_ {
        self.columns[col].iter().map(|&(r, id)| (r as usize, &self.pool[id as usize]))
    }

    pub fn to_dense(&self) -> Vec<Vec<Polynomial>> {
        let mut out = vec![vec![Polynomial::zero(self.ring); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, id) in col {
                out[r as usize][c] = self.pool[id as usize].clone();
            }
        }
        out
    }

    /// Applies `f` to every nonzero entry; entries mapped to zero are dropped.
    pub fn map_entries(
        &self,
        ring: AmbientRing,
        f: impl Fn(&Polynomial) -> Result<Polynomial>,
    ) -> Result<PolyMatrix> {
        let mapped = self.pool.iter().map(&f).collect::<Result<Vec<_>>>()?;
        for p in &mapped {
            ring.ensure_same(&p.ring())?;
        }
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().copied().filter(|&(_, id)| !mapped[id as usize].is_zero()).collect())
            .collect();
        Ok(PolyMatrix { ring, rows: self.rows, pool: mapped, columns })
    }
}

/// A basis element `e_H` of a free module in a complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    /// One-based generator indices `H` when the element comes from a Taylor complex.
    pub subset: Option<Vec<usize>>,
    /// The multidegree (`M_H` for a Taylor basis element).
    pub multidegree: Monomial,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(h) = &self.subset {
            let ids: Vec<String> = h.iter().map(|i| i.to_string()).collect();
            write!(f, "e{{{}}} ", ids.join(","))?;
        }
        write!(f, "[{}]", self.multidegree)
    }
}

/// `F_0 <- F_1 <- ... <- F_l` with `d_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    ring: AmbientRing,
    ranks: Vec<usize>,
    differentials: Vec<PolyMatrix>,
    labels: Option<Vec<Vec<BasisLabel>>>,
}

impl FreeComplex {
    /// Checks that `d_i` is `ranks[i-1] × ranks[i]` and that labels, when
    /// given, cover every basis element.
    pub fn new(
        ring: AmbientRing,
        ranks: Vec<usize>,
        differentials: Vec<PolyMatrix>,
        labels: Option<Vec<Vec<BasisLabel>>>,
    ) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::ShapeMismatch("a complex needs at least F_0".into()));
        }
        if differentials.len() + 1 != ranks.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            ring.ensure_same(&d.ring())?;
            if d.rows() != ranks[i] || d.cols() != ranks[i + 1] {
                return Err(Error::ShapeMismatch(format!(
                    "d{} is {}x{}, expected {}x{}",
                    i + 1,
                    d.rows(),
                    d.cols(),
                    ranks[i],
                    ranks[i + 1]
                )));
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != ranks.len() || labels.iter().zip(&ranks).any(|(l, &r)| l.len() != r) {
                return Err(Error::ShapeMismatch("labels do not match the ranks".into()));
            }
        }
        Ok(Self { ring, ranks, differentials, labels })
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The number of differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// `d_i` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> Option<&PolyMatrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    /// Basis labels per homological degree.
    pub fn labels(&self) -> Option<&[Vec<BasisLabel>]> {
        self.labels.as_deref()
    }

    /// `Σ (-1)^i rank F_i`.
    pub fn alternating_rank_sum(&self) -> isize {
        self.ranks.iter().enumerate().map(|(i, &r)| if i % 2 == 0 { r as isize } else { -(r as isize) }).sum()
    }

    /// Substitutes `y_i -> 1 - x_i` in every entry. Labels keep their
    /// polarized multidegrees.
    pub fn depolarize(&self) -> Result<FreeComplex> {
        if !self.ring.is_polarized() {
            return Err(Error::ExpectedPolarized);
        }
        let r = self.ring.with_polarized(false);
        let differentials =
            self.differentials.iter().map(|d| d.map_entries(r, depolarize_poly)).collect::<Result<Vec<_>>>()?;
        Ok(FreeComplex { ring: r, ranks: self.ranks.clone(), differentials, labels: self.labels.clone() })
    }
}

/// Total ranks per homological degree, with multigraded counts when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub ranks: Vec<usize>,
    /// Per homological degree, `(multidegree, count)` sorted by degree then
    /// descending monomial order.
    pub multigraded: Option<Vec<Vec<(Monomial, usize)>>>,
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", ranks.join(","))
    }
}

fn binomials() -> [[u64; 65]; 65] {
    let mut t = [[0u64; 65]; 65];
    for n in 0..65 {
        t[n][0] = 1;
        for k in 1..=n {
            t[n][k] = t[n - 1][k - 1].saturating_add(t[n - 1][k]);
        }
    }
    t
}

/// Position of `mask` among the subsets of its size in colexicographic order.
fn colex_rank(mask: u64, binom: &[[u64; 65]; 65]) -> usize {
    let mut rank = 0u64;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        rank += binom[c][i];
        m &= m - 1;
        i += 1;
    }
    rank as usize
}

/// Subsets of `{0..t-1}` of size `k` in colexicographic order, as bitmasks.
fn colex_subsets(t: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << t;
    let mut next = if k <= t { Some((1u64 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let n = (((ripple ^ cur) >> 2) / low) | ripple;
            (n < limit).then_some(n)
        };
        Some(cur)
    })
}

fn subset_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask & (1u64 << b) != 0).map(|b| b + 1).collect()
}

/// The Taylor complex of `S/<gens>`: `F_i` has basis `e_H` for `|H| = i`
/// in colexicographic order, and `d(e_H) = Σ_h (M_H / M_{H∖h}) e_{H∖h}`.
pub fn taylor_complex(gens: &[Monomial]) -> Result<FreeComplex> {
    let t = gens.len();
    if t > MAX_TAYLOR_GENERATORS {
        return Err(Error::TooManyGenerators { got: t, max: MAX_TAYLOR_GENERATORS });
    }
    let ring = match gens.first() {
        Some(g) => g.ring(),
        None => {
            return Err(Error::ShapeMismatch("no generators: use taylor_complex_in".into()));
        }
    };
    taylor_complex_in(ring, gens)
}

/// [`taylor_complex`] with an explicit ring; an empty list gives the
/// one-term complex `R`.
pub fn taylor_complex_in(ring: AmbientRing, gens: &[Monomial]) -> Result<FreeComplex> {
    let t = gens.len();
    if t > MAX_TAYLOR_GENERATORS {
        return Err(Error::TooManyGenerators { got: t, max: MAX_TAYLOR_GENERATORS });
    }
    for g in gens {
        ring.ensure_same(&g.ring())?;
    }
    let mut lcms = vec![Monomial::one(ring); 1usize << t];
    for mask in 1..lcms.len() {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low])?;
    }
    let binom = binomials();
    let ranks: Vec<usize> = (0..=t).map(|k| binom[t][k] as usize).collect();
    let mut labels = Vec::with_capacity(t + 1);
    let mut differentials = Vec::with_capacity(t);
    for k in 0..=t {
        labels.push(
            colex_subsets(t, k)
                .map(|h| BasisLabel { subset: Some(subset_indices(h)), multidegree: lcms[h as usize] })
                .collect::<Vec<_>>(),
        );
        if k == 0 {
            continue;
        }
        let mut interner = Interner::default();
        let columns = colex_subsets(t, k)
            .map(|h| {
                let mut col = Vec::with_capacity(k);
                // removing a larger element gives a smaller colex rank
                for b in (0..t).rev().filter(|&b| h & (1u64 << b) != 0) {
                    let face = h & !(1u64 << b);
                    let q = lcms[h as usize].quotient(&lcms[face as usize]).expect("lcm of a subset divides");
                    col.push((colex_rank(face, &binom) as u32, interner.monomial_id(q)));
                }
                col
            })
            .collect();
        differentials.push(PolyMatrix { ring, rows: ranks[k - 1], pool: interner.pool, columns });
    }
    FreeComplex::new(ring, ranks, differentials, Some(labels))
}

/// The Taylor complex of `P(J_C)` with every entry depolarized; a free
/// resolution of `R/J_C`.
pub fn taylor_resolution_neural(c: &Code) -> Result<FreeComplex> {
    let ideal = polarize_ideal(c);
    taylor_complex_in(c.polar_ring(), ideal.generators())?.depolarize()
}

/// Multidegrees of every basis element, from the labels or by propagating
/// `deg(col) = deg(row) · entry` from degree-1 generators of `F_0`.
fn multidegrees(p: &FreeComplex) -> Result<Vec<Vec<Monomial>>> {
    let entry_monomial = |poly: &Polynomial, k: usize, r: usize, c: usize| -> Result<Monomial> {
        poly.as_monomial()
            .copied()
            .ok_or_else(|| Error::NotMultigraded(format!("entry ({r},{c}) of d{k} is not a monomial: {poly}")))
    };
    if let Some(labels) = &p.labels {
        let degs: Vec<Vec<Monomial>> =
            labels.iter().map(|l| l.iter().map(|b| b.multidegree).collect()).collect();
        for (k, d) in p.differentials.iter().enumerate() {
            for c in 0..d.cols() {
                for (r, poly) in d.column(c) {
                    let m = entry_monomial(poly, k + 1, r, c)?;
                    if degs[k][r].mul(&m)? != degs[k + 1][c] {
                        return Err(Error::NotMultigraded(format!(
                            "entry ({r},{c}) of d{} does not match the basis multidegrees",
                            k + 1
                        )));
                    }
                }
            }
        }
        return Ok(degs);
    }
    let mut degs = vec![vec![Monomial::one(p.ring); p.ranks[0]]];
    for (k, d) in p.differentials.iter().enumerate() {
        let mut next = Vec::with_capacity(d.cols());
        for c in 0..d.cols() {
            let mut deg: Option<Monomial> = None;
            for (r, poly) in d.column(c) {
                let m = degs[k][r].mul(&entry_monomial(poly, k + 1, r, c)?)?;
                match deg {
                    None => deg = Some(m),
                    Some(prev) if prev != m => {
                        return Err(Error::NotMultigraded(format!("column {c} of d{} has no consistent degree", k + 1)))
                    }
                    _ => {}
                }
            }
            next.push(deg.ok_or_else(|| {
                Error::NotMultigraded(format!("column {c} of d{} is zero and carries no label", k + 1))
            })?);
        }
        degs.push(next);
    }
    Ok(degs)
}

/// 0/1 support pattern of one differential with both row and column access.
struct Pattern {
    by_row: Vec<Vec<u32>>,
    by_col: Vec<Vec<u32>>,
}

fn toggle(list: &mut Vec<u32>, x: u32) {
    match list.binary_search(&x) {
        Ok(i) => {
            list.remove(i);
        }
        Err(i) => list.insert(i, x),
    }
}

fn remove(list: &mut Vec<u32>, x: u32) {
    if let Ok(i) = list.binary_search(&x) {
        list.remove(i);
    }
}

impl Pattern {
    fn of(d: &PolyMatrix) -> Self {
        let mut row_len = vec![0usize; d.rows()];
        for col in &d.columns {
            for &(r, _) in col {
                row_len[r as usize] += 1;
            }
        }
        let mut by_row: Vec<Vec<u32>> = row_len.iter().map(|&n| Vec::with_capacity(n + 2)).collect();
        let by_col: Vec<Vec<u32>> = d.columns.iter().map(|col| col.iter().map(|&(r, _)| r).collect()).collect();
        for (c, col) in by_col.iter().enumerate() {
            for &r in col {
                by_row[r as usize].push(c as u32);
            }
        }
        Self { by_row, by_col }
    }

    fn delete_row(&mut self, r: u32) {
        for c in std::mem::take(&mut self.by_row[r as usize]) {
            remove(&mut self.by_col[c as usize], r);
        }
    }

    fn delete_col(&mut self, c: u32) {
        for r in std::mem::take(&mut self.by_col[c as usize]) {
            remove(&mut self.by_row[r as usize], c);
        }
    }
}

/// Cancels unit entries until none remain, giving a minimal free complex
/// quasi-isomorphic to the input.
///
/// Entries must be monomials compatible with a multigrading (taken from the
/// labels, or inferred with `F_0` in degree 1). Pivots are taken in the
/// lowest homological degree first, then in row-major order. Surviving basis
/// elements keep their labels.
pub fn minimize_complex(p: &FreeComplex) -> Result<FreeComplex> {
    let degs = multidegrees(p)?;
    let mut deg_ids: FxHashMap<Monomial, u32> = FxHashMap::default();
    let ids: Vec<Vec<u32>> = degs
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|m| {
                    let next = deg_ids.len() as u32;
                    *deg_ids.entry(*m).or_insert(next)
                })
                .collect()
        })
        .collect();
    let mut patterns: Vec<Pattern> = p.differentials.iter().map(Pattern::of).collect();
    let mut alive: Vec<Vec<bool>> = p.ranks.iter().map(|&r| vec![true; r]).collect();

    for k in 0..patterns.len() {
        // patterns[k] is d_{k+1} : F_{k+1} -> F_k
        for a in 0..p.ranks[k] {
            if !alive[k][a] {
                continue;
            }
            let row_deg = ids[k][a];
            let Some(&b) = patterns[k].by_row[a].iter().find(|&&c| ids[k + 1][c as usize] == row_deg) else {
                continue;
            };
            let pat = &mut patterns[k];
            let col_b: Vec<u32> = pat.by_col[b as usize].iter().copied().filter(|&r| r != a as u32).collect();
            let row_a: Vec<u32> = pat.by_row[a].iter().copied().filter(|&c| c != b).collect();
            for &r in &col_b {
                for &c in &row_a {
                    toggle(&mut pat.by_row[r as usize], c);
                    toggle(&mut pat.by_col[c as usize], r);
                }
            }
            pat.delete_row(a as u32);
            pat.delete_col(b);
            if k > 0 {
                patterns[k - 1].delete_col(a as u32);
            }
            if k + 1 < patterns.len() {
                patterns[k + 1].delete_row(b);
            }
            alive[k][a] = false;
            alive[k + 1][b as usize] = false;
        }
    }

    let new_index: Vec<Vec<Option<u32>>> = alive
        .iter()
        .map(|level| {
            let mut next = 0u32;
            level
                .iter()
                .map(|&keep| {
                    keep.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut ranks: Vec<usize> = alive.iter().map(|l| l.iter().filter(|&&x| x).count()).collect();
    let mut differentials = Vec::with_capacity(patterns.len());
    for (k, pat) in patterns.iter().enumerate() {
        let mut interner = Interner::default();
        let columns = (0..pat.by_col.len())
            .filter(|&c| alive[k + 1][c])
            .map(|c| {
                pat.by_col[c]
                    .iter()
                    .map(|&r| {
                        let q = degs[k + 1][c].quotient(&degs[k][r as usize]).ok_or_else(|| {
                            Error::NotMultigraded(format!("degree of row {r} does not divide column {c} in d{}", k + 1))
                        })?;
                        let row = new_index[k][r as usize].expect("entries of deleted rows were removed");
                        Ok((row, interner.monomial_id(q)))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        differentials.push(PolyMatrix { ring: p.ring, rows: ranks[k], pool: interner.pool, columns });
    }
    let mut labels: Vec<Vec<BasisLabel>> = match &p.labels {
        Some(l) => l
            .iter()
            .zip(&alive)
            .map(|(level, keep)| level.iter().zip(keep).filter(|(_, &k)| k).map(|(b, _)| b.clone()).collect())
            .collect(),
        None => degs
            .iter()
            .zip(&alive)
            .map(|(level, keep)| {
                level
                    .iter()
                    .zip(keep)
                    .filter(|(_, &k)| k)
                    .map(|(m, _)| BasisLabel { subset: None, multidegree: *m })
                    .collect()
            })
            .collect(),
    };
    while ranks.len() > 1 && *ranks.last().expect("nonempty") == 0 {
        ranks.pop();
        differentials.pop();
        labels.pop();
    }
    FreeComplex::new(p.ring, ranks, differentials, Some(labels))
}

/// The depolarized minimal resolution of `S/P(J_C)`: a free resolution of
/// `R/J_C` over `R`.
pub fn canonical_resolution(c: &Code) -> Result<FreeComplex> {
    minimal_polar_resolution(c)?.depolarize()
}

/// The minimal resolution of `S/P(J_C)` over `S`.
pub fn minimal_polar_resolution(c: &Code) -> Result<FreeComplex> {
    let ideal = polarize_ideal(c);
    minimize_complex(&taylor_complex_in(c.polar_ring(), ideal.generators())?)
}

fn sort_multigraded(counts: HashMap<Monomial, usize>) -> Vec<(Monomial, usize)> {
    let mut v: Vec<(Monomial, usize)> = counts.into_iter().filter(|&(_, n)| n > 0).collect();
    v.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(b.0.cmp(&a.0)));
    v
}

/// Ranks of each `F_i`, plus multigraded counts when the complex has labels.
pub fn betti_table(p: &FreeComplex) -> BettiTable {
    let multigraded = p.labels.as_ref().map(|labels| {
        labels
            .iter()
            .map(|level| {
                let mut counts = HashMap::new();
                for b in level {
                    *counts.entry(b.multidegree).or_insert(0) += 1;
                }
                sort_multigraded(counts)
            })
            .collect()
    });
    BettiTable { ranks: p.ranks.clone(), multigraded }
}

/// Whether `d_i ∘ d_{i+1} = 0` for every `i`, with exact arithmetic.
pub fn verify_complex(p: &FreeComplex) -> Result<bool> {
    for (i, pair) in p.differentials.windows(2).enumerate() {
        let (d, e) = (&pair[0], &pair[1]);
        if d.cols() != e.rows() {
            return Err(Error::ShapeMismatch(format!(
                "d{} has {} columns but d{} has {} rows",
                i + 1,
                d.cols(),
                i + 2,
                e.rows()
            )));
        }
        if !composes_to_zero(d, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d · e = 0`, memoizing entry products. Equal products in one position
/// cancel before any polynomial is added.
fn composes_to_zero(d: &PolyMatrix, e: &PolyMatrix) -> Result<bool> {
    let mut products = Interner::default();
    let mut memo = ProductMemo::new(d.pool.len(), e.pool.len());
    let mut by_row: Vec<Vec<u32>> = vec![Vec::new(); d.rows()];
    let mut touched: Vec<u32> = Vec::new();
    for col in &e.columns {
        for &(j, q) in col {
            for &(r, p) in &d.columns[j as usize] {
                let id = match memo.get(p, q) {
                    Some(id) => id,
                    None => {
                        let id = products.id(d.pool[p as usize].mul(&e.pool[q as usize])?);
                        memo.set(p, q, id);
                        id
                    }
                };
                let ids = &mut by_row[r as usize];
                if ids.is_empty() {
                    touched.push(r);
                }
                ids.push(id);
            }
        }
        for &r in &touched {
            let ids = &mut by_row[r as usize];
            ids.sort_unstable();
            let mut sum = Polynomial::zero(d.ring);
            for run in ids.chunk_by(|a, b| a == b) {
                if run.len() % 2 == 1 {
                    sum = sum.add(&products.pool[run[0] as usize])?;
                }
            }
            ids.clear();
            if !sum.is_zero() {
                return Ok(false);
            }
        }
        touched.clear();
    }
    Ok(true)
}

/// Product ids by entry-id pair: a dense table when small, a map otherwise.
enum ProductMemo {
    Dense { width: usize, table: Vec<u32> },
    Sparse(FxHashMap<(u32, u32), u32>),
}

impl ProductMemo {
    const DENSE_LIMIT: usize = 1 << 22;

    fn new(left: usize, right: usize) -> Self {
        match left.checked_mul(right) {
            Some(size) if size <= Self::DENSE_LIMIT => Self::Dense { width: right, table: vec![u32::MAX; size] },
            _ => Self::Sparse(FxHashMap::default()),
        }
    }

    fn get(&self, p: u32, q: u32) -> Option<u32> {
        match self {
            Self::Dense { width, table } => {
                let id = table[p as usize * width + q as usize];
                (id != u32::MAX).then_some(id)
            }
            Self::Sparse(map) => map.get(&(p, q)).copied(),
        }
    }

    fn set(&mut self, p: u32, q: u32, id: u32) {
        match self {
            Self::Dense { width, table } => table[p as usize * *width + q as usize] = id,
            Self::Sparse(map) => {
                map.insert((p, q), id);
            }
        }
    }
}

/// Betti numbers of `S/<gens>` from Hochster's formula:
/// `β_{i,W} = dim H̃_{|W|-i-1}(Δ_W; F2)` where `Δ` is the Stanley–Reisner
/// complex and `Δ_W` its restriction to `W`.
///
/// Only sets `W` that are unions of generator supports can contribute;
/// every other restriction is a cone.
pub fn hochster_betti(gens: &[Monomial], ring: AmbientRing) -> Result<BettiTable> {
    let mut supports = Vec::with_capacity(gens.len());
    for g in gens {
        ring.ensure_same(&g.ring())?;
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        supports.push(g.support());
    }
    let universe = supports.iter().fold(0u64, |a, &s| a | s);
    let mut levels: Vec<HashMap<Monomial, usize>> = Vec::new();
    let mut w = 0u64;
    loop {
        // a vertex of W outside every generator inside W is a cone point
        let covered = supports.iter().filter(|&&s| s & !w == 0).fold(0u64, |a, &s| a | s);
        if covered != w {
            w = (w.wrapping_sub(universe)) & universe;
            continue;
        }
        let faces: Vec<u64> = submasks(w).filter(|&f| !supports.iter().any(|&s| s & !f == 0)).collect();
        let betti = reduced_betti_of_faces(&faces);
        let size = w.count_ones() as isize;
        for (idx, &b) in betti.iter().enumerate() {
            if b == 0 {
                continue;
            }
            // entry idx is reduced homology in degree idx - 1 = |W| - i - 1
            let i = (size - idx as isize) as usize;
            if levels.len() <= i {
                levels.resize_with(i + 1, HashMap::new);
            }
            *levels[i].entry(Monomial::from_support(ring, w)?).or_insert(0) += b;
        }
        if w == universe {
            break;
        }
        w = (w.wrapping_sub(universe)) & universe;
    }
    if levels.is_empty() {
        levels.push(HashMap::new());
    }
    let multigraded: Vec<Vec<(Monomial, usize)>> = levels.into_iter().map(sort_multigraded).collect();
    let ranks = multigraded.iter().map(|l| l.iter().map(|&(_, n)| n).sum()).collect();
    Ok(BettiTable { ranks, multigraded: Some(multigraded) })
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
        Some(cur)
    })
}
