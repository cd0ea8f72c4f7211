//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p neural-polar --test acceptance`. All arithmetic is
//! exact over F2, so no tolerances are involved; the fixed values below are
//! the only parameters.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use neural_polar::selfcheck::{self, Check};
use neural_polar::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of the random-code sample.
const SEED: u64 = 0x6e65_7572_616c;
/// Number of random codes; lengths cycle through 3, 4, 5.
const RANDOM_CODES: usize = 210;
/// Probability that a word belongs to a random code.
const WORD_PROBABILITY: f64 = 0.5;
/// Random pseudomonomial pairs per code for divisibility transport.
const PAIRS_PER_CODE: usize = 200;
/// Largest code length with exhaustive membership transport.
const EXHAUSTIVE_MEMBERSHIP_MAX_N: usize = 4;

struct Outcome {
    passed: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { passed: true, notes: Vec::new() }
    }

    fn expect(&mut self, what: &str, ok: bool) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("failed: {what}"));
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.passed = false;
            self.notes.push(format!("failed: {what}: got {got:?}, want {want:?}"));
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

fn code(words: &[&str]) -> Code {
    Code::from_strs(words).expect("valid code")
}

fn texts<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn parse_matrix(ring: AmbientRing, rows: &[&[&str]]) -> Vec<Vec<Polynomial>> {
    rows.iter()
        .map(|row| row.iter().map(|e| Polynomial::parse(ring, e).expect("valid entry")).collect())
        .collect()
}

fn criterion_a18() -> Outcome {
    let mut out = Outcome::new();
    let c = code(&["000", "100", "111"]);
    let r = c.ring();
    let s = c.polar_ring();

    let cf: Vec<Polynomial> = canonical_form(&c).generators().iter().map(|g| g.to_polynomial()).collect();
    let listed = parse_matrix(r, &[&["x2(1-x1)", "x2(1-x3)", "x3(1-x1)", "x3(1-x2)"]]).remove(0);
    out.expect_eq("canonical form", cf, listed);

    let polar: Vec<String> = texts(polarize_ideal(&c).generators());
    out.expect_eq("polarized ideal", polar, vec!["x2*y1".into(), "x2*y3".into(), "x3*y1".into(), "x3*y2".into()]);

    let taylor = taylor_complex_in(s, polarize_ideal(&c).generators()).expect("taylor");
    out.expect_eq("taylor ranks", taylor.ranks().to_vec(), vec![1, 4, 6, 4, 1]);
    out.expect_eq(
        "taylor d1",
        taylor.differential(1).expect("d1").to_dense(),
        parse_matrix(s, &[&["x2y1", "x2y3", "x3y1", "x3y2"]]),
    );
    out.expect("taylor d∘d = 0", verify_complex(&taylor).unwrap_or(false));

    let minimal = minimize_complex(&taylor).expect("minimize");
    out.expect_eq("minimized ranks", minimal.ranks().to_vec(), vec![1, 4, 4, 1]);
    let polar_d2 = parse_matrix(
        s,
        &[&["-y3", "-x3", "0", "0"], &["y1", "0", "x3y2", "0"], &["0", "x2", "0", "y2"], &["0", "0", "x2y3", "y1"]],
    );
    let polar_d3 = parse_matrix(s, &[&["x3y2"], &["-y2y3"], &["y1"], &["-x2y3"]]);
    out.expect_eq("minimal d2 over S", minimal.differential(2).expect("d2").to_dense(), polar_d2);
    out.expect_eq("minimal d3 over S", minimal.differential(3).expect("d3").to_dense(), polar_d3);

    let canonical = canonical_resolution(&c).expect("canonical");
    out.expect_eq("canonical ranks", canonical.ranks().to_vec(), vec![1, 4, 4, 1]);
    let d1 = parse_matrix(r, &[&["x2(1-x1)", "x2(1-x3)", "x3(1-x1)", "x3(1-x2)"]]);
    // the printed matrix has "x2y3" at row 4, column 3; the depolarized entry is x2(1-x3)
    let d2 = parse_matrix(
        r,
        &[
            &["-(1-x3)", "-x3", "0", "0"],
            &["1-x1", "0", "-x3(1-x2)", "0"],
            &["0", "x2", "0", "-(1-x2)"],
            &["0", "0", "x2(1-x3)", "(1-x1)"],
        ],
    );
    let d3 = parse_matrix(r, &[&["x3(1-x2)"], &["-(1-x2)(1-x3)"], &["(1-x1)"], &["-x2(1-x3)"]]);
    out.expect_eq("canonical d1", canonical.differential(1).expect("d1").to_dense(), d1);
    out.expect_eq("canonical d2", canonical.differential(2).expect("d2").to_dense(), d2);
    out.expect_eq("canonical d3", canonical.differential(3).expect("d3").to_dense(), d3);
    out.expect("canonical d∘d = 0", verify_complex(&canonical).unwrap_or(false));
    out.note("d2[4,3] compared as x2(1-x3); the printed entry x2y3 is the polarized form");
    out
}

fn criterion_three_region() -> Outcome {
    let mut out = Outcome::new();
    let c = code(&["000", "100", "010", "110", "101", "111"]);
    out.expect_eq("canonical form", texts(canonical_form(&c).generators()), vec!["(1-x1)*x3".to_string()]);
    let decomposition: BTreeSet<String> = texts(&primary_decomposition_neural(&c)).into_iter().collect();
    out.expect_eq("primary decomposition", decomposition, BTreeSet::from(["<x3>".into(), "<1-x1>".into()]));

    let cover_text = include_str!("../../../corpus/three_region_cover.json");
    let cover = Cover::from_json(cover_text).expect("cover fixture");
    out.expect_eq("cover code", code_of_cover(&cover), c);
    let relations: Vec<String> = rf_relations(&cover).iter().filter(|r| r.is_consistent()).map(|r| r.to_string()).collect();
    out.expect_eq("receptive-field relations", relations, vec!["U3 <= U1".to_string()]);
    out
}

fn criterion_b5() -> Outcome {
    let mut out = Outcome::new();
    let c = code(&["000", "100", "110", "011"]);
    let r = c.ring();
    let s = c.polar_ring();
    let cf: Vec<Polynomial> = canonical_form(&c).generators().iter().map(|g| g.to_polynomial()).collect();
    let listed = parse_matrix(r, &[&["x1x3", "x3(1-x2)", "x2(1-x1)(1-x3)"]]).remove(0);
    out.expect_eq("canonical form", cf, listed);
    let polar: Vec<Monomial> = polarize_ideal(&c).generators().to_vec();
    let listed: Vec<Monomial> = ["x1x3", "y2x3", "y1x2y3"]
        .iter()
        .map(|t| *Polynomial::parse(s, t).expect("monomial").as_monomial().expect("single term"))
        .collect();
    out.expect_eq("polarized generators", polar, listed);

    let derived = [
        "<x2, x3>",
        "<x3, y1>",
        "<x3, y3>",
        "<x1, x2, y2>",
        "<x1, y1, y2>",
        "<x1, y2, y3>",
    ];
    let by_intervals = primes_over_polar(&c, true);
    let by_transversals = minimal_primes_squarefree(polarize_ideal(&c).generators(), s).expect("primes");
    out.expect_eq("interval method", texts(&by_intervals), derived.iter().map(|p| p.to_string()).collect());
    out.expect_eq("transversal method", &by_intervals, &by_transversals);

    let printed: Vec<VariableSubset> = [
        (&[1][..], &[2, 3][..]),
        (&[2, 3], &[]),
        (&[3], &[1]),
        (&[1], &[1, 2]),
        (&[1, 2], &[2]),
        (&[2, 3], &[2]),
        (&[3], &[3]),
    ]
    .iter()
    .map(|(xs, ys)| VariableSubset::from_parts(3, NeuronSet::of(xs), NeuronSet::of(ys)).expect("subset"))
    .collect();
    let redundant = redundant_components(&printed);
    let flagged: Vec<String> = redundant.iter().map(|&(i, j)| format!("{} ⊇ {}", printed[i], printed[j])).collect();
    out.expect_eq("redundant printed components", flagged.clone(), vec!["<x2, x3, y2> ⊇ <x2, x3>".to_string()]);
    out.note(format!("printed seven-term list is redundant: {}", flagged.join("; ")));

    let depolarized: BTreeSet<String> =
        by_intervals.iter().filter_map(|w| w.depolarize()).map(|p| p.to_string()).collect();
    let neural: BTreeSet<String> = texts(&primary_decomposition_neural(&c)).into_iter().collect();
    out.expect_eq(
        "depolarized primes",
        depolarized.clone(),
        BTreeSet::from(["<x1, 1-x2, 1-x3>".into(), "<x2, x3>".into(), "<1-x1, x3>".into()]),
    );
    out.expect_eq("depolarized primes match the neural decomposition", depolarized, neural);
    out
}

fn criterion_e4() -> Outcome {
    let mut out = Outcome::new();
    let c = code(&["000", "110", "011", "101"]);
    out.expect_eq("neural dimensions", krull_dimensions(&c, Side::Neural), BTreeSet::from([0]));
    out.expect_eq("polar dimensions", krull_dimensions(&c, Side::Polar), BTreeSet::from([3, 4]));
    out.expect_eq("is_cm_polar", is_cm_polar(&c), false);
    out.expect_eq("cm_report_neural", cm_report_neural(&c), CmVerdict::Cm);
    out
}

fn random_code(rng: &mut ChaCha8Rng, n: usize) -> Code {
    let words: Vec<Codeword> = (0u32..1 << n)
        .filter(|_| rng.gen_bool(WORD_PROBABILITY))
        .map(|b| Codeword::from_support(NeuronSet::from_bits(b)))
        .collect();
    Code::new(n, words).expect("valid length")
}

fn random_psm(rng: &mut ChaCha8Rng, ring: AmbientRing) -> Pseudomonomial {
    let (mut sigma, mut tau) = (NeuronSet::EMPTY, NeuronSet::EMPTY);
    for i in 1..=ring.neurons() {
        match rng.gen_range(0..3) {
            0 => sigma = sigma.with(i),
            1 => tau = tau.with(i),
            _ => {}
        }
    }
    Pseudomonomial::new(ring, sigma, tau).expect("disjoint")
}

fn criterion_random_suite() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let labels = [
        "(a) point-variety",
        "(b) membership transport",
        "(c) divisibility transport",
        "(d) d∘d = 0",
        "(e) betti = hochster",
        "(f) prime agreement",
        "(g) facet bijection",
    ];
    let mut failures = [0usize; 7];
    let mut membership_codes = 0;
    for k in 0..RANDOM_CODES {
        let n = 3 + k % 3;
        let c = random_code(&mut rng, n);
        let pairs: Vec<(Pseudomonomial, Pseudomonomial)> =
            (0..PAIRS_PER_CODE).map(|_| (random_psm(&mut rng, c.ring()), random_psm(&mut rng, c.ring()))).collect();
        let complexes = selfcheck::build_complexes(&c).expect("complexes");
        let mut checks: Vec<Option<Check>> = vec![
            Some(selfcheck::point_variety(&c)),
            None,
            Some(selfcheck::divisibility_transport(&pairs).expect("pairs")),
            Some(selfcheck::compositions_vanish(&complexes).expect("verify")),
            Some(selfcheck::betti_agreement(&c, &complexes).expect("betti")),
            Some(selfcheck::prime_agreement(&c).expect("primes")),
            Some(selfcheck::facet_bijection(&c)),
        ];
        if n <= EXHAUSTIVE_MEMBERSHIP_MAX_N {
            membership_codes += 1;
            checks[1] = Some(selfcheck::membership_transport(&c).expect("membership"));
        }
        for (i, check) in checks.iter().enumerate() {
            if let Some(check) = check {
                if !check.passed {
                    failures[i] += 1;
                    out.note(format!("{} on {c}: {}", labels[i], check.detail));
                }
            }
        }
    }
    for (label, &count) in labels.iter().zip(&failures) {
        out.expect(&format!("{label}: {count} failures"), count == 0);
    }
    out.note(format!(
        "{RANDOM_CODES} codes (n = 3, 4, 5), seed {SEED:#x}; membership exhaustive on {membership_codes} codes with n <= {EXHAUSTIVE_MEMBERSHIP_MAX_N}"
    ));
    out
}

fn criterion_homology() -> Outcome {
    let mut out = Outcome::new();
    let names = |k: usize| (1..=k).map(|i| format!("v{i}")).collect::<Vec<_>>();
    let hollow = SimplicialComplex::new(names(3), [0b011, 0b101, 0b110]).expect("triangle");
    out.expect_eq("hollow triangle H̃_0, H̃_1", (reduced_homology(&hollow, 0), reduced_homology(&hollow, 1)), (0, 1));
    let boundary = SimplicialComplex::new(names(4), [0b0111, 0b1011, 0b1101, 0b1110]).expect("boundary");
    out.expect_eq("tetrahedron boundary H̃_2", reduced_homology(&boundary, 2), 1);
    out.expect_eq("tetrahedron boundary H̃_0, H̃_1", (reduced_homology(&boundary, 0), reduced_homology(&boundary, 1)), (0, 0));
    let simplex = SimplicialComplex::simplex(names(4)).expect("simplex");
    out.expect_eq("full simplex", reduced_betti_numbers(&simplex), vec![0; 5]);
    out
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 A18 pipeline", criterion_a18),
        ("2 three-region example", criterion_three_region),
        ("3 B5 primes", criterion_b5),
        ("4 E4 Cohen-Macaulay", criterion_e4),
        ("5 random oracle suite", criterion_random_suite),
        ("6 homology sanity", criterion_homology),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        all &= outcome.passed;
        println!(
            "{} criterion {name} ({:.2}s)",
            if outcome.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for note in &outcome.notes {
            println!("    {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
