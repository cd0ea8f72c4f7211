//! Cross-checks of every structural algorithm against an independent method
//! on a single code.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{NeuronSet, Pseudomonomial};
use crate::codes::Code;
use crate::error::Result;
use crate::neural_ideal::{canonical_form, psm_in_ideal};
use crate::polarization::{first_step_nonzerodivisor, polarize_ideal, polarize_psm};
use crate::resolutions::{
    betti_table, hochster_betti, minimize_complex, taylor_complex_in, verify_complex, FreeComplex,
};
use crate::simplicial::{minimal_primes_squarefree, polar_complex, primes_over_polar};

/// Generator count up to which the depolarized Taylor complex is also verified.
pub const DEPOLARIZED_TAYLOR_LIMIT: usize = 14;

/// Outcome of one property on one code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name, passed, detail: detail.into() }
}

/// All pseudomonomials of the code's ring, `3^n` of them.
pub fn all_pseudomonomials(c: &Code) -> Vec<Pseudomonomial> {
    let n = c.n();
    let mut out = Vec::new();
    for sigma in 0u32..1 << n {
        let rest = ((1u32 << n) - 1) & !sigma;
        let mut tau = 0u32;
        loop {
            out.push(
                Pseudomonomial::new(c.ring(), NeuronSet::from_bits(sigma), NeuronSet::from_bits(tau))
                    .expect("disjoint supports within range"),
            );
            if tau == rest {
                break;
            }
            tau = tau.wrapping_sub(rest) & rest;
        }
    }
    out
}

/// The zero set of the canonical form on `{0,1}^n` is the code.
pub fn point_variety(c: &Code) -> Check {
    let polys: Vec<_> = canonical_form(c).generators().iter().map(Pseudomonomial::to_polynomial).collect();
    let zeros: BTreeSet<u32> = (0u32..1 << c.n())
        .filter(|&p| polys.iter().all(|f| !f.eval_bool(p as u64)))
        .collect();
    let words: BTreeSet<u32> = c.words().map(|w| w.support().bits()).collect();
    check("point-variety", zeros == words, format!("{} common zeros, {} codewords", zeros.len(), words.len()))
}

/// `f ∈ J_C ⟺ P(f) ∈ P(J_C)` over every pseudomonomial.
pub fn membership_transport(c: &Code) -> Result<Check> {
    let all = all_pseudomonomials(c);
    let polarized = polarize_ideal(c);
    let mut failures = 0;
    for f in &all {
        if psm_in_ideal(f, c)? != polarized.contains(&polarize_psm(f))? {
            failures += 1;
        }
    }
    Ok(check("membership-transport", failures == 0, format!("{} pseudomonomials, {failures} disagreements", all.len())))
}

/// `f | g ⟺ P(f) | P(g)` over the given pairs.
pub fn divisibility_transport(pairs: &[(Pseudomonomial, Pseudomonomial)]) -> Result<Check> {
    let mut failures = 0;
    for (f, g) in pairs {
        if f.divides(g)? != polarize_psm(f).divides(&polarize_psm(g))? {
            failures += 1;
        }
    }
    Ok(check("divisibility-transport", failures == 0, format!("{} pairs, {failures} disagreements", pairs.len())))
}

/// Every pair of pseudomonomials when there are at most `limit` pairs,
/// otherwise every pair involving the canonical-form generators.
fn divisibility_pairs(c: &Code, limit: usize) -> Vec<(Pseudomonomial, Pseudomonomial)> {
    let all = all_pseudomonomials(c);
    let left: Vec<Pseudomonomial> = if all.len() * all.len() <= limit {
        all.clone()
    } else {
        canonical_form(c).generators().to_vec()
    };
    left.iter().flat_map(|f| all.iter().map(move |g| (*f, *g))).collect()
}

/// The interval method and the transversal method find the same minimal primes.
pub fn prime_agreement(c: &Code) -> Result<Check> {
    let by_intervals = primes_over_polar(c, true);
    let by_transversals = minimal_primes_squarefree(polarize_ideal(c).generators(), c.polar_ring())?;
    Ok(check(
        "prime-agreement",
        by_intervals == by_transversals,
        format!("{} by intervals, {} by transversals", by_intervals.len(), by_transversals.len()),
    ))
}

/// The complexes built from the code, in the order they are checked.
pub struct Complexes {
    pub taylor: FreeComplex,
    pub minimal: FreeComplex,
    pub canonical: FreeComplex,
}

pub fn build_complexes(c: &Code) -> Result<Complexes> {
    let taylor = taylor_complex_in(c.polar_ring(), polarize_ideal(c).generators())?;
    let minimal = minimize_complex(&taylor)?;
    let canonical = minimal.depolarize()?;
    Ok(Complexes { taylor, minimal, canonical })
}

/// `d ∘ d = 0` on the Taylor, minimized and depolarized complexes.
pub fn compositions_vanish(complexes: &Complexes) -> Result<Check> {
    let mut failed = Vec::new();
    let mut checked = vec!["taylor", "minimal", "canonical"];
    for (name, p) in [("taylor", &complexes.taylor), ("minimal", &complexes.minimal), ("canonical", &complexes.canonical)]
    {
        if !verify_complex(p)? {
            failed.push(name);
        }
    }
    if complexes.taylor.length() <= DEPOLARIZED_TAYLOR_LIMIT {
        checked.push("depolarized taylor");
        if !verify_complex(&complexes.taylor.depolarize()?)? {
            failed.push("depolarized taylor");
        }
    }
    let detail = if failed.is_empty() {
        format!("checked {}", checked.join(", "))
    } else {
        format!("nonzero composition in {}", failed.join(", "))
    };
    Ok(check("d-squared-zero", failed.is_empty(), detail))
}

/// The minimized resolution has no unit entries and its multigraded Betti
/// numbers match Hochster's formula.
pub fn betti_agreement(c: &Code, complexes: &Complexes) -> Result<Check> {
    let minimal = &complexes.minimal;
    let units = minimal
        .differentials()
        .iter()
        .map(|d| (0..d.cols()).flat_map(|j| d.column(j)).filter(|(_, p)| p.is_one()).count())
        .sum::<usize>();
    let resolved = betti_table(minimal);
    let oracle = hochster_betti(polarize_ideal(c).generators(), c.polar_ring())?;
    Ok(check(
        "betti-hochster",
        units == 0 && resolved == oracle,
        format!("minimal {resolved}, hochster {oracle}, {units} unit entries"),
    ))
}

/// Facets of the polar complex are exactly `{x_i : i ∈ w} ∪ {y_i : i ∉ w}`
/// for the codewords `w`, all of size `n`.
pub fn facet_bijection(c: &Code) -> Check {
    let n = c.n();
    let complex = polar_complex(c);
    let facets: BTreeSet<u64> = complex.facets().iter().copied().collect();
    let full = (1u64 << n) - 1;
    let expected: BTreeSet<u64> = c
        .words()
        .map(|w| {
            let s = w.support().bits() as u64;
            s | ((full & !s) << n)
        })
        .collect();
    let pure = complex.facets().iter().all(|f| f.count_ones() as usize == n);
    check(
        "facet-bijection",
        pure && facets == expected,
        format!("{} facets, {} codewords, pure of size {n}: {pure}", facets.len(), c.len()),
    )
}

/// Depolarization changes entries but never ranks.
pub fn rank_invariance(complexes: &Complexes) -> Check {
    let same = complexes.minimal.ranks() == complexes.canonical.ranks();
    check("rank-invariance", same, format!("ranks {:?}", complexes.canonical.ranks()))
}

pub fn nonzerodivisor(c: &Code) -> Check {
    let ok = first_step_nonzerodivisor(c);
    check("first-step-nonzerodivisor", ok, "each x_i + y_i - 1 avoids every minimal prime")
}

/// Runs the full suite on one code.
pub fn run(c: &Code) -> Result<Vec<Check>> {
    let complexes = build_complexes(c)?;
    Ok(vec![
        point_variety(c),
        membership_transport(c)?,
        divisibility_transport(&divisibility_pairs(c, 60_000))?,
        prime_agreement(c)?,
        compositions_vanish(&complexes)?,
        betti_agreement(c, &complexes)?,
        rank_invariance(&complexes),
        facet_bijection(c),
        nonzerodivisor(c),
    ])
}
