//! Neural codes over F2, their neural ideals and canonical forms, and the
//! polarization of those ideals into squarefree monomial ideals.
//!
//! The crate covers canonical forms and primary decompositions of neural
//! ideals, polarization and depolarization, Taylor and canonical free
//! resolutions, polar complexes with Cohen–Macaulay checks, and brute-force
//! oracles that cross-check each structural algorithm on small codes.
//!
//! ```
//! use neural_polar::{canonical_form, Code};
//!
//! let code = Code::from_strs(&["000", "100", "111"]).unwrap();
//! let cf: Vec<String> = canonical_form(&code).generators().iter().map(|g| g.to_string()).collect();
//! assert_eq!(cf, ["(1-x1)*x2", "x2*(1-x3)", "(1-x1)*x3", "(1-x2)*x3"]);
//! ```

pub mod algebra;
pub mod codes;
pub mod error;
pub mod neural_ideal;
pub mod polarization;
pub mod resolutions;
pub mod selfcheck;
pub mod simplicial;

pub use algebra::{AmbientRing, Monomial, NeuronSet, Polynomial, Pseudomonomial, MAX_NEURONS, MAX_VARS};
pub use codes::{
    code_of_cover, interval_in_code, maximal_intervals, parse_code, quotient_code, Code, Codeword, Cover,
    IntervalSpec, QuotientCode, Trit,
};
pub use error::{Error, Result};
pub use neural_ideal::{
    canonical_form, ideal_in_prime, indicator_gen, neural_ideal_gens, primary_decomposition_neural,
    psm_in_ideal, rf_relations, PsmIdeal, PsmPrime, RfRelation,
};
pub use polarization::{
    depolarize_monomial, depolarize_poly, first_step_nonzerodivisor, polarize_boolean, polarize_ideal,
    polarize_prime, polarize_psm, polarize_vanishing_ideal, polarized_membership, DepolarizationIdeal, SqfIdeal,
};
pub use resolutions::{
    betti_table, canonical_resolution, hochster_betti, minimal_polar_resolution, minimize_complex,
    taylor_complex, taylor_complex_in, taylor_resolution_neural, verify_complex, BasisLabel, BettiTable,
    FreeComplex, PolyMatrix,
};
pub use simplicial::{
    cm_report_neural, interval_of_w, is_cm_polar, krull_dimensions, minimal_primes_squarefree, polar_complex,
    primes_over_polar, redundant_components, reduced_betti_numbers, reduced_homology, reisner_cm,
    stanley_reisner_complex, CmVerdict, Side, SimplicialComplex, VariableSubset,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/neural-ideals.md")]
    mod neural_ideals {}
    #[doc = include_str!("../../../book/src/polarization.md")]
    mod polarization {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/polar-complexes.md")]
    mod polar_complexes {}
    #[doc = include_str!("../../../book/src/cross-checks.md")]
    mod cross_checks {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
