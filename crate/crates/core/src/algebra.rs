//! Exact arithmetic over F2 for the ambient rings `R = F2[x1..xn]` and
//! `S = F2[x1..xn, y1..yn]`.
//!
//! Every value carries the [`AmbientRing`] it lives in; binary operations on
//! values from different rings fail with [`Error::RingMismatch`]. Variables
//! are indexed from zero internally: `x_i` is variable `i - 1` and `y_i` is
//! variable `n + i - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported neuron count.
pub const MAX_NEURONS: usize = 16;

/// Largest number of ring variables (`x` and `y` blocks together).
pub const MAX_VARS: usize = 2 * MAX_NEURONS;

/// The polynomial ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AmbientRing {
    n: usize,
    polarized: bool,
}

impl AmbientRing {
    /// `F2[x1..xn]`.
    pub fn plain(n: usize) -> Result<Self> {
        Self::new(n, false)
    }

    /// `F2[x1..xn, y1..yn]`.
    pub fn polarized(n: usize) -> Result<Self> {
        Self::new(n, true)
    }

    fn new(n: usize, polarized: bool) -> Result<Self> {
        if n == 0 || n > MAX_NEURONS {
            return Err(Error::NeuronCount { got: n, max: MAX_NEURONS });
        }
        Ok(Self { n, polarized })
    }

    pub fn neurons(&self) -> usize {
        self.n
    }

    pub fn is_polarized(&self) -> bool {
        self.polarized
    }

    pub fn num_vars(&self) -> usize {
        if self.polarized {
            2 * self.n
        } else {
            self.n
        }
    }

    /// The same neuron count with the other polarization flag.
    pub fn with_polarized(&self, polarized: bool) -> Self {
        Self { n: self.n, polarized }
    }

    /// Textual name of a zero-based variable index: `x1..xn`, then `y1..yn`.
    pub fn var_name(&self, var: usize) -> String {
        if var < self.n {
            format!("x{}", var + 1)
        } else {
            format!("y{}", var - self.n + 1)
        }
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: *self, right: *other })
        }
    }

    pub(crate) fn check_neuron(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.n {
            Err(Error::IndexOutOfRange { index, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polarized {
            write!(f, "F2[x1..x{n},y1..y{n}]", n = self.n)
        } else {
            write!(f, "F2[x1..x{}]", self.n)
        }
    }
}

/// A subset of the neurons `[n]`, stored as a bitmask (bit `i - 1` for neuron `i`).
///
/// Ordered lexicographically by the ascending list of its elements, so
/// `{1,3} < {2} < {2,3}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct NeuronSet(u32);

impl NeuronSet {
    pub const EMPTY: NeuronSet = NeuronSet(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    /// Builds a set from one-based neuron indices.
    ///
    /// Panics if an index is zero or exceeds 32.
    pub fn of(indices: &[usize]) -> Self {
        indices.iter().fold(Self::EMPTY, |s, &i| {
            assert!((1..=32).contains(&i), "neuron index {i} out of range");
            s.with(i)
        })
    }

    /// All neurons `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            Self(u32::MAX)
        } else {
            Self((1u32 << n) - 1)
        }
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(&self, i: usize) -> Self {
        Self(self.0 | (1 << (i - 1)))
    }

    pub fn without(&self, i: usize) -> Self {
        Self(self.0 & !(1 << (i - 1)))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.0 & !other.0)
    }

    /// Ascending one-based indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest element, if any.
    pub fn max(&self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }
}

impl Ord for NeuronSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for NeuronSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NeuronSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A monomial with arbitrary exponents.
///
/// Monomials compare lexicographically on the exponent vector with
/// `x1 > x2 > ... > xn > y1 > ... > yn`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: AmbientRing,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    /// The monomial `1`.
    pub fn one(ring: AmbientRing) -> Self {
        Self { ring, exps: [0; MAX_VARS] }
    }

    /// A single variable by zero-based index.
    pub fn var(ring: AmbientRing, var: usize) -> Result<Self> {
        if var >= ring.num_vars() {
            return Err(if var < 2 * ring.neurons() {
                Error::NotPolarized
            } else {
                Error::IndexOutOfRange { index: var + 1, n: ring.num_vars() }
            });
        }
        let mut m = Self::one(ring);
        m.exps[var] = 1;
        Ok(m)
    }

    /// The squarefree monomial `prod_{i in xs} x_i * prod_{j in ys} y_j`.
    pub fn squarefree(ring: AmbientRing, xs: NeuronSet, ys: NeuronSet) -> Result<Self> {
        let all = NeuronSet::full(ring.neurons());
        for set in [xs, ys] {
            if let Some(bad) = set.difference(&all).iter().next() {
                return Err(Error::IndexOutOfRange { index: bad, n: ring.neurons() });
            }
        }
        if !ys.is_empty() && !ring.is_polarized() {
            return Err(Error::NotPolarized);
        }
        let mut m = Self::one(ring);
        for i in xs.iter() {
            m.exps[i - 1] = 1;
        }
        for j in ys.iter() {
            m.exps[ring.neurons() + j - 1] = 1;
        }
        Ok(m)
    }

    /// Builds a monomial from an exponent vector of length `ring.num_vars()`.
    pub fn from_exponents(ring: AmbientRing, exps: &[u8]) -> Result<Self> {
        if exps.len() != ring.num_vars() {
            return Err(Error::LengthMismatch { expected: ring.num_vars(), got: exps.len() });
        }
        let mut m = Self::one(ring);
        m.exps[..exps.len()].copy_from_slice(exps);
        Ok(m)
    }

    /// Builds a squarefree monomial from a bitmask over the variables.
    pub fn from_support(ring: AmbientRing, support: u64) -> Result<Self> {
        let nv = ring.num_vars();
        if nv < 64 && support >> nv != 0 {
            return Err(Error::IndexOutOfRange { index: 64 - support.leading_zeros() as usize, n: nv });
        }
        let mut m = Self::one(ring);
        for v in 0..nv {
            if support & (1 << v) != 0 {
                m.exps[v] = 1;
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.ring.num_vars()]
    }

    pub fn exponent(&self, var: usize) -> u8 {
        self.exps[var]
    }

    pub fn degree(&self) -> usize {
        self.exponents().iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bitmask of the variables with positive exponent.
    pub fn support(&self) -> u64 {
        self.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (v, _)| acc | (1 << v))
    }

    /// Neurons `i` with `x_i` in the support.
    pub fn xs(&self) -> NeuronSet {
        let n = self.ring.neurons();
        NeuronSet::from_bits((self.support() & ((1u64 << n) - 1)) as u32)
    }

    /// Neurons `j` with `y_j` in the support (empty in the plain ring).
    pub fn ys(&self) -> NeuronSet {
        NeuronSet::from_bits((self.support() >> self.ring.neurons()) as u32)
    }

    /// Exponentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Exponentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(*b);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = *self;
        let mut overflow = false;
        for (a, b) in out.exps.iter_mut().zip(&other.exps) {
            let sum = a.wrapping_add(*b);
            overflow |= sum < *a;
            *a = sum;
        }
        if overflow {
            return Err(Error::ExponentOverflow);
        }
        Ok(out)
    }

    /// `self / divisor` when the division is exact.
    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        if self.ring != divisor.ring {
            return None;
        }
        let mut out = *self;
        let mut short = false;
        for (a, b) in out.exps.iter_mut().zip(&divisor.exps) {
            short |= *a < *b;
            *a = a.wrapping_sub(*b);
        }
        (!short).then_some(out)
    }

    /// Evaluates at a 0/1 point given as a bitmask over the variables.
    pub fn eval_bool(&self, point: u64) -> bool {
        self.support() & !point == 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps).then(self.ring.cmp(&other.ring))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.var_name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// A sparse polynomial with F2 coefficients: a set of monomials.
///
/// Terms are kept sorted ascending and duplicate-free, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: AmbientRing,
    terms: Vec<Monomial>,
}

impl Polynomial {
    pub fn zero(ring: AmbientRing) -> Self {
        Self { ring, terms: Vec::new() }
    }

    pub fn one(ring: AmbientRing) -> Self {
        Self::from_monomial(Monomial::one(ring))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self { ring: m.ring, terms: vec![m] }
    }

    /// Sums the given monomials; equal monomials cancel in pairs.
    pub fn from_terms(ring: AmbientRing, terms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut v: Vec<Monomial> = Vec::new();
        for t in terms {
            ring.ensure_same(&t.ring)?;
            v.push(t);
        }
        Ok(Self { ring, terms: cancel_pairs(v) })
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    /// The single term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [m] => Some(m),
            _ => None,
        }
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(Monomial::degree).max()
    }

    /// Symmetric difference of the term sets.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Polynomial { ring: self.ring, terms: out })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.ensure_same(&other.ring)?;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(a.mul(b)?);
            }
        }
        Ok(Polynomial { ring: self.ring, terms: cancel_pairs(products) })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        self.ring.ensure_same(&m.ring)?;
        let mut terms = self.terms.iter().map(|t| t.mul(m)).collect::<Result<Vec<_>>>()?;
        // multiplication by a monomial is injective and order-preserving
        terms.sort_unstable();
        Ok(Polynomial { ring: self.ring, terms })
    }

    /// Evaluates at a 0/1 point given as a bitmask over the variables.
    pub fn eval_bool(&self, point: u64) -> bool {
        self.terms.iter().filter(|t| t.eval_bool(point)).count() % 2 == 1
    }

    /// Parses expressions such as `x3*(1-x2) + y1^2`.
    ///
    /// Accepts `+`, `-` (identical over F2), `*` or juxtaposition for
    /// products, `^` with a nonnegative integer exponent, parentheses, integer
    /// constants (reduced mod 2) and the variables `x1..xn`, `y1..yn`.
    pub fn parse(ring: AmbientRing, input: &str) -> Result<Polynomial> {
        let mut p = ExprParser { ring, src: input.as_bytes(), pos: 0, input };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

fn cancel_pairs(mut terms: Vec<Monomial>) -> Vec<Monomial> {
    terms.sort_unstable();
    let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
    for t in terms {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on ring mismatch; use [`Polynomial::add`] for a fallible version.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs).expect("polynomial addition across rings")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    /// Panics on ring mismatch; use [`Polynomial::mul`] for a fallible version.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs).expect("polynomial multiplication across rings")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

struct ExprParser<'a> {
    ring: AmbientRing,
    src: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl ExprParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Expression { input: self.input.to_string(), msg: format!("{msg} at offset {}", self.pos) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.input[start..self.pos].parse().map_err(|_| self.error("number too large"))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        while matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
            let t = self.term()?;
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(b'x' | b'y' | b'(' | b'0'..=b'9') => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.number()?;
            let mut out = Polynomial::one(self.ring);
            for _ in 0..e {
                out = out.mul(&base)?;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c @ (b'x' | b'y')) => {
                self.pos += 1;
                let i = self.number()?;
                let n = self.ring.neurons();
                if i == 0 || i > n {
                    return Err(self.error("variable index out of range"));
                }
                let var = if c == b'x' { i - 1 } else { n + i - 1 };
                let m = Monomial::var(self.ring, var).map_err(|_| self.error("y-variable outside the polarized ring"))?;
                Ok(Polynomial::from_monomial(m))
            }
            Some(b'0'..=b'9') => {
                let k = self.number()?;
                Ok(if k % 2 == 1 { Polynomial::one(self.ring) } else { Polynomial::zero(self.ring) })
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// A pseudomonomial `prod_{i in sigma} x_i * prod_{j in tau} (1 - x_j)` with
/// disjoint `sigma`, `tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pseudomonomial {
    ring: AmbientRing,
    sigma: NeuronSet,
    tau: NeuronSet,
}

impl Pseudomonomial {
    pub fn new(ring: AmbientRing, sigma: NeuronSet, tau: NeuronSet) -> Result<Self> {
        if ring.is_polarized() {
            return Err(Error::RingMismatch { left: ring, right: ring.with_polarized(false) });
        }
        let all = NeuronSet::full(ring.neurons());
        for set in [sigma, tau] {
            if let Some(bad) = set.difference(&all).iter().next() {
                return Err(Error::IndexOutOfRange { index: bad, n: ring.neurons() });
            }
        }
        if let Some(both) = sigma.intersection(&tau).iter().next() {
            return Err(Error::OverlappingSupports(both));
        }
        Ok(Self { ring, sigma, tau })
    }

    /// The constant `1` (`sigma = tau = {}`).
    pub fn one(ring: AmbientRing) -> Self {
        Self { ring: ring.with_polarized(false), sigma: NeuronSet::EMPTY, tau: NeuronSet::EMPTY }
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    pub fn sigma(&self) -> NeuronSet {
        self.sigma
    }

    pub fn tau(&self) -> NeuronSet {
        self.tau
    }

    pub fn degree(&self) -> usize {
        self.sigma.len() + self.tau.len()
    }

    pub fn is_one(&self) -> bool {
        self.sigma.is_empty() && self.tau.is_empty()
    }

    /// `self | other`, i.e. `sigma_self ⊆ sigma_other` and `tau_self ⊆ tau_other`.
    pub fn divides(&self, other: &Pseudomonomial) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.sigma.is_subset(&other.sigma) && self.tau.is_subset(&other.tau))
    }

    /// Value at a 0/1 point whose firing neurons are `word`.
    pub fn eval(&self, word: NeuronSet) -> bool {
        self.sigma.is_subset(&word) && self.tau.is_disjoint(&word)
    }

    /// The expanded F2 polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        let ring = self.ring;
        let n = ring.neurons();
        let xs = Monomial::squarefree(ring, self.sigma, NeuronSet::EMPTY).expect("sigma within ring");
        // (1 + x_j) over tau expands to the sum over all subsets of tau
        let tau_bits = self.tau.bits();
        let mut terms = Vec::with_capacity(1 << self.tau.len());
        let mut sub = tau_bits;
        loop {
            let extra = Monomial::squarefree(ring, NeuronSet::from_bits(sub), NeuronSet::EMPTY).expect("tau within ring");
            terms.push(xs.mul(&extra).expect("disjoint supports"));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & tau_bits;
        }
        debug_assert!(terms.iter().all(|t| t.exponents().len() == n));
        Polynomial::from_terms(ring, terms).expect("same ring")
    }

    /// Sort key: total degree, then `sigma`, then `tau`.
    pub fn sort_key(&self) -> (usize, NeuronSet, NeuronSet) {
        (self.degree(), self.sigma, self.tau)
    }
}

impl Ord for Pseudomonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key()).then(self.ring.cmp(&other.ring))
    }
}

impl PartialOrd for Pseudomonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pseudomonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 1..=self.ring.neurons() {
            let factor = if self.sigma.contains(i) {
                format!("x{i}")
            } else if self.tau.contains(i) {
                format!("(1-x{i})")
            } else {
                continue;
            };
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}
