//! Polarization `P`: pseudomonomials of `R` to squarefree monomials of `S`
//! by sending each factor `(1 - x_j)` to a fresh variable `y_j`, and the
//! reverse substitution `y_i -> 1 - x_i` (depolarization).

use crate::algebra::{AmbientRing, Monomial, NeuronSet, Polynomial, Pseudomonomial};
use crate::codes::Code;
use crate::error::{Error, Result};
use crate::neural_ideal::{canonical_form, PsmPrime};
use crate::simplicial::{minimal_primes_squarefree, VariableSubset};

/// A squarefree monomial ideal of the polarized ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqfIdeal {
    ring: AmbientRing,
    generators: Vec<Monomial>,
    minimal: bool,
}

impl SqfIdeal {
    /// Wraps squarefree generators; the minimal flag is set when no generator
    /// divides another.
    pub fn new(ring: AmbientRing, generators: Vec<Monomial>) -> Result<Self> {
        for g in &generators {
            ring.ensure_same(&g.ring())?;
            if !g.is_squarefree() {
                return Err(Error::NotSquarefree(g.to_string()));
            }
        }
        let minimal = generators.iter().enumerate().all(|(a, ga)| {
            generators.iter().enumerate().all(|(b, gb)| a == b || !ga.divides(gb).expect("same ring"))
        });
        Ok(Self { ring, generators, minimal })
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.ring.ensure_same(&m.ring())?;
        Ok(self.generators.iter().any(|g| g.divides(m).expect("same ring")))
    }
}

/// `D = <x_i + y_i - 1 : i ∈ [n]>`; modulo `D`, `y_i` becomes `1 - x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepolarizationIdeal {
    n: usize,
}

impl DepolarizationIdeal {
    pub fn new(n: usize) -> Result<Self> {
        AmbientRing::polarized(n)?;
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x_i + y_i + 1` (the F2 form of `x_i + y_i - 1`).
    pub fn generator(&self, i: usize) -> Result<Polynomial> {
        let ring = AmbientRing::polarized(self.n)?;
        ring.check_neuron(i)?;
        Polynomial::from_terms(
            ring,
            [
                Monomial::var(ring, i - 1)?,
                Monomial::var(ring, self.n + i - 1)?,
                Monomial::one(ring),
            ],
        )
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        (1..=self.n).map(|i| self.generator(i).expect("index within range")).collect()
    }
}

/// `P(x_sigma (1-x)_tau) = x_sigma y_tau`.
pub fn polarize_psm(f: &Pseudomonomial) -> Monomial {
    let ring = f.ring().with_polarized(true);
    Monomial::squarefree(ring, f.sigma(), f.tau()).expect("pseudomonomial supports fit the ring")
}

/// `P(J_C)`: the polarizations of the canonical-form generators, in
/// canonical-form order.
pub fn polarize_ideal(c: &Code) -> SqfIdeal {
    let gens = canonical_form(c).generators().iter().map(polarize_psm).collect();
    SqfIdeal::new(c.polar_ring(), gens).expect("polarized generators are squarefree")
}

/// The polarization `x_i y_i` of the Boolean relation `x_i^2 - x_i = x_i (x_i - 1)`.
pub fn polarize_boolean(ring: AmbientRing, i: usize) -> Result<Monomial> {
    ring.check_neuron(i)?;
    let s = ring.with_polarized(true);
    Monomial::squarefree(s, NeuronSet::of(&[i]), NeuronSet::of(&[i]))
}

/// `P(I_C) = <x_i y_i : i ∈ [n]> + P(J_C)`, minimalized and sorted by
/// degree then monomial order (descending).
pub fn polarize_vanishing_ideal(c: &Code) -> SqfIdeal {
    let ring = c.polar_ring();
    let mut all: Vec<Monomial> = (1..=c.n()).map(|i| polarize_boolean(ring, i).expect("in range")).collect();
    all.extend(polarize_ideal(c).generators().iter().copied());
    let mut minimal: Vec<Monomial> = all
        .iter()
        .filter(|g| !all.iter().any(|h| h != *g && h.divides(g).expect("same ring")))
        .copied()
        .collect();
    minimal.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
    minimal.dedup();
    SqfIdeal::new(ring, minimal).expect("squarefree generators")
}

/// Substitutes `y_i -> 1 + x_i` (over F2) into a monomial of `S`.
pub fn depolarize_monomial(m: &Monomial) -> Result<Polynomial> {
    let ring = m.ring();
    if !ring.is_polarized() {
        return Err(Error::ExpectedPolarized);
    }
    let n = ring.neurons();
    let r = ring.with_polarized(false);
    let x_part = Monomial::from_exponents(r, &m.exponents()[..n])?;
    let mut out = Polynomial::from_monomial(x_part);
    for i in 0..n {
        let e = m.exponent(n + i);
        if e == 0 {
            continue;
        }
        let factor = Polynomial::from_terms(r, [Monomial::var(r, i)?, Monomial::one(r)])?;
        for _ in 0..e {
            out = out.mul(&factor)?;
        }
    }
    Ok(out)
}

/// `pi : S -> S/D = R`, applied termwise.
pub fn depolarize_poly(p: &Polynomial) -> Result<Polynomial> {
    if !p.ring().is_polarized() {
        return Err(Error::ExpectedPolarized);
    }
    let r = p.ring().with_polarized(false);
    let mut acc = Polynomial::zero(r);
    for t in p.terms() {
        acc = acc.add(&depolarize_monomial(t)?)?;
    }
    Ok(acc)
}

/// `P(f) ∈ P(J_C)`, decided by monomial divisibility.
pub fn polarized_membership(f: &Pseudomonomial, c: &Code) -> Result<bool> {
    c.ring().ensure_same(&f.ring())?;
    polarize_ideal(c).contains(&polarize_psm(f))
}

/// `P(p_alpha)`: the monomial prime on `x_i` (alpha_i = 0) and `y_i` (alpha_i = 1).
pub fn polarize_prime(p: &PsmPrime) -> VariableSubset {
    let alpha = p.alpha();
    VariableSubset::from_parts(alpha.n(), alpha.zeros(), alpha.ones()).expect("interval fits")
}

/// Checks that each `x_i + y_i - 1` avoids every minimal prime of `P(J_C)`,
/// the first step of the regular-sequence property.
///
/// A polynomial lies in a monomial prime exactly when each of its terms does,
/// so the constant term decides it; the check is still carried out termwise.
pub fn first_step_nonzerodivisor(c: &Code) -> bool {
    let ideal = polarize_ideal(c);
    let primes = minimal_primes_squarefree(ideal.generators(), c.polar_ring()).expect("squarefree generators");
    let d = DepolarizationIdeal::new(c.n()).expect("code length is valid");
    d.generators().iter().all(|g| {
        primes.iter().all(|w| !g.terms().iter().all(|t| t.support() & w.vars() != 0))
    })
}
