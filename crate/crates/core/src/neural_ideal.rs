//! Neural ideals: indicator generators, canonical forms, pseudomonomial
//! primary decomposition and receptive-field relations.
//!
//! Membership of a pseudomonomial `f = x_sigma (1-x)_tau` in the neural
//! ideal `J_C` is decided combinatorially: `f ∈ J_C` exactly when no codeword
//! has `c_i = 1` on `sigma` and `c_j = 0` on `tau`.

use std::fmt;

use crate::algebra::{AmbientRing, NeuronSet, Pseudomonomial};
use crate::codes::{all_specs, code_of_cover, maximal_intervals, Code, Codeword, Cover, IntervalSpec};
use crate::error::{Error, Result};

/// A pseudomonomial ideal given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsmIdeal {
    ring: AmbientRing,
    generators: Vec<Pseudomonomial>,
    canonical: bool,
}

impl PsmIdeal {
    /// An ideal from arbitrary generators; not flagged canonical.
    pub fn new(ring: AmbientRing, generators: Vec<Pseudomonomial>) -> Result<Self> {
        for g in &generators {
            ring.ensure_same(&g.ring())?;
        }
        Ok(Self { ring, generators, canonical: false })
    }

    pub fn ring(&self) -> AmbientRing {
        self.ring
    }

    pub fn generators(&self) -> &[Pseudomonomial] {
        &self.generators
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Whether some generator is the constant `1`.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Pseudomonomial::is_one)
    }
}

/// The pseudomonomial prime `p_alpha = <x_i : alpha_i = 0, 1 - x_i : alpha_i = 1>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsmPrime {
    alpha: IntervalSpec,
}

impl PsmPrime {
    pub fn new(alpha: IntervalSpec) -> Self {
        Self { alpha }
    }

    pub fn alpha(&self) -> &IntervalSpec {
        &self.alpha
    }

    /// The all-`*` specification names the zero ideal.
    pub fn is_zero_ideal(&self) -> bool {
        self.alpha.fixed().is_empty()
    }

    /// Generators in ascending variable order.
    pub fn generators(&self) -> Vec<Pseudomonomial> {
        let ring = AmbientRing::plain(self.alpha.n()).expect("interval length is a valid neuron count");
        (1..=self.alpha.n())
            .filter_map(|i| {
                if self.alpha.zeros().contains(i) {
                    Some(Pseudomonomial::new(ring, NeuronSet::of(&[i]), NeuronSet::EMPTY))
                } else if self.alpha.ones().contains(i) {
                    Some(Pseudomonomial::new(ring, NeuronSet::EMPTY, NeuronSet::of(&[i])))
                } else {
                    None
                }
            })
            .map(|g| g.expect("single index within range"))
            .collect()
    }

    /// Whether some generator of the prime divides `f`.
    pub fn has_generator_dividing(&self, f: &Pseudomonomial) -> bool {
        !self.alpha.zeros().is_disjoint(&f.sigma()) || !self.alpha.ones().is_disjoint(&f.tau())
    }
}

impl fmt::Display for PsmPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_ideal() {
            return write!(f, "<0>");
        }
        let gens: Vec<String> = (1..=self.alpha.n())
            .filter_map(|i| {
                if self.alpha.zeros().contains(i) {
                    Some(format!("x{i}"))
                } else if self.alpha.ones().contains(i) {
                    Some(format!("1-x{i}"))
                } else {
                    None
                }
            })
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// The indicator pseudomonomial of a word: `1` at the word, `0` elsewhere.
pub fn indicator_gen(word: &Codeword, ring: AmbientRing) -> Pseudomonomial {
    let all = NeuronSet::full(ring.neurons());
    Pseudomonomial::new(ring, word.support(), all.difference(&word.support())).expect("word fits the ring")
}

/// `J_C` generated by the indicators of all non-codewords.
///
/// The full code gives the zero ideal (no generators); the empty code gives
/// the unit ideal, generated by `1`.
pub fn neural_ideal_gens(c: &Code) -> PsmIdeal {
    let ring = c.ring();
    let generators = if c.is_empty() {
        vec![Pseudomonomial::one(ring)]
    } else {
        c.non_codewords().iter().map(|w| indicator_gen(w, ring)).collect()
    };
    PsmIdeal { ring, generators, canonical: false }
}

/// `f ∈ J_C`: the interval of points where `f` is `1` misses every codeword.
pub fn psm_in_ideal(f: &Pseudomonomial, c: &Code) -> Result<bool> {
    c.ring().ensure_same(&f.ring())?;
    Ok(psm_in_ideal_unchecked(f, c))
}

fn psm_in_ideal_unchecked(f: &Pseudomonomial, c: &Code) -> bool {
    !c.words().any(|w| f.eval(w.support()))
}

/// The canonical form of `J_C`: every divisibility-minimal pseudomonomial in
/// the ideal, sorted by degree, then `sigma`, then `tau`.
pub fn canonical_form(c: &Code) -> PsmIdeal {
    let ring = c.ring();
    let mut generators: Vec<Pseudomonomial> = all_specs(c.n())
        .map(|a| Pseudomonomial::new(ring, a.ones(), a.zeros()).expect("disjoint by construction"))
        .filter(|f| psm_in_ideal_unchecked(f, c))
        .filter(|f| {
            // membership is closed under multiples, so checking the
            // single-index deletions decides minimality
            let smaller_sigma = f.sigma().iter().map(|i| (f.sigma().without(i), f.tau()));
            let smaller_tau = f.tau().iter().map(|j| (f.sigma(), f.tau().without(j)));
            smaller_sigma.chain(smaller_tau).all(|(s, t)| {
                let g = Pseudomonomial::new(ring, s, t).expect("subsets stay disjoint");
                !psm_in_ideal_unchecked(&g, c)
            })
        })
        .collect();
    generators.sort();
    PsmIdeal { ring, generators, canonical: true }
}

/// `J_C = ⋂ p_alpha` over the maximal intervals `V_alpha ⊆ C`.
///
/// The full code yields the zero ideal `<0>`; the empty code yields no
/// components (the unit ideal).
pub fn primary_decomposition_neural(c: &Code) -> Vec<PsmPrime> {
    maximal_intervals(c).into_iter().map(PsmPrime::new).collect()
}

/// `I ⊆ p` for a canonical `I`: every canonical generator is divisible by a
/// generator of `p`.
pub fn ideal_in_prime(i: &PsmIdeal, p: &PsmPrime) -> Result<bool> {
    if !i.canonical {
        return Err(Error::NotCanonical);
    }
    if i.ring.neurons() != p.alpha.n() {
        return Err(Error::LengthMismatch { expected: i.ring.neurons(), got: p.alpha.n() });
    }
    Ok(i.generators.iter().all(|f| p.has_generator_dividing(f)))
}

/// A receptive-field relation `⋂_{i∈sigma} U_i ⊆ ⋃_{j∈tau} U_j` read off a
/// canonical-form generator, with its check on the cover's points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RfRelation {
    pub sigma: NeuronSet,
    pub tau: NeuronSet,
    /// The containment holds on the point set.
    pub holds: bool,
    /// The containment fails after removing any single index.
    pub minimal: bool,
}

impl RfRelation {
    pub fn is_consistent(&self) -> bool {
        self.holds && self.minimal
    }
}

impl fmt::Display for RfRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: NeuronSet, sep: &str| s.iter().map(|i| format!("U{i}")).collect::<Vec<_>>().join(sep);
        let lhs = if self.sigma.is_empty() { "X".to_string() } else { join(self.sigma, " & ") };
        let rhs = if self.tau.is_empty() { "{}".to_string() } else { join(self.tau, " | ") };
        write!(f, "{lhs} <= {rhs}")
    }
}

fn containment_holds(cov: &Cover, sigma: NeuronSet, tau: NeuronSet) -> bool {
    (0..cov.points().len()).all(|p| {
        let sig = cov.signature(p);
        // p in every U_i (i in sigma) implies p in some U_j (j in tau)
        !sigma.is_subset(&sig) || !tau.is_disjoint(&sig)
    })
}

/// Receptive-field relations of a cover, one per canonical-form generator.
pub fn rf_relations(cov: &Cover) -> Vec<RfRelation> {
    let code = code_of_cover(cov);
    canonical_form(&code)
        .generators
        .iter()
        .map(|g| {
            let (sigma, tau) = (g.sigma(), g.tau());
            let holds = containment_holds(cov, sigma, tau);
            let minimal = sigma.iter().all(|i| !containment_holds(cov, sigma.without(i), tau))
                && tau.iter().all(|j| !containment_holds(cov, sigma, tau.without(j)));
            RfRelation { sigma, tau, holds, minimal }
        })
        .collect()
}
