use std::collections::BTreeSet;

use neural_polar::selfcheck;
use neural_polar::*;
use proptest::prelude::*;

fn code_from_mask(n: usize, mask: u64) -> Code {
    let words = (0u32..1 << n)
        .filter(|w| mask & (1u64 << w) != 0)
        .map(|w| Codeword::from_support(NeuronSet::from_bits(w)));
    Code::new(n, words).unwrap()
}

fn codes(max_n: usize) -> impl Strategy<Value = Code> {
    (1..=max_n).prop_flat_map(|n| {
        let words = 1u64 << n;
        let all = if words == 64 { u64::MAX } else { (1u64 << words) - 1 };
        (Just(n), 0..=all).prop_map(|(n, mask)| code_from_mask(n, mask))
    })
}

fn nonempty_codes(max_n: usize) -> impl Strategy<Value = Code> {
    codes(max_n).prop_filter("nonempty", |c| !c.is_empty())
}

fn psm(n: usize) -> impl Strategy<Value = Pseudomonomial> {
    proptest::collection::vec(0u8..3, n).prop_map(move |choice| {
        let ring = AmbientRing::plain(n).unwrap();
        let (mut s, mut t) = (NeuronSet::EMPTY, NeuronSet::EMPTY);
        for (i, c) in choice.iter().enumerate() {
            match c {
                0 => s = s.with(i + 1),
                1 => t = t.with(i + 1),
                _ => {}
            }
        }
        Pseudomonomial::new(ring, s, t).unwrap()
    })
}

fn psm_pair() -> impl Strategy<Value = (Pseudomonomial, Pseudomonomial)> {
    (1usize..=8).prop_flat_map(|n| (psm(n), psm(n)))
}

fn monomial(ring: AmbientRing) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u8..3, ring.num_vars()).prop_map(move |e| Monomial::from_exponents(ring, &e).unwrap())
}

fn polynomial(ring: AmbientRing) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(monomial(ring), 0..5).prop_map(move |ts| Polynomial::from_terms(ring, ts).unwrap())
}

fn squarefree_gens(vars: usize) -> impl Strategy<Value = (AmbientRing, Vec<Monomial>)> {
    let ring = AmbientRing::polarized(vars / 2).unwrap();
    let full = (1u64 << ring.num_vars()) - 1;
    proptest::collection::btree_set(1..=full, 1..7).prop_map(move |supports| {
        (ring, supports.into_iter().map(|s| Monomial::from_support(ring, s).unwrap()).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divisibility_matches_evaluation((f, g) in psm_pair()) {
        let n = f.ring().neurons();
        let witness = (0u64..1 << n).all(|p| !g.to_polynomial().eval_bool(p) || f.to_polynomial().eval_bool(p));
        prop_assert_eq!(f.divides(&g).unwrap(), witness);
    }

    #[test]
    fn lcm_laws(a in monomial(AmbientRing::polarized(3).unwrap()),
                b in monomial(AmbientRing::polarized(3).unwrap()),
                c in monomial(AmbientRing::polarized(3).unwrap())) {
        prop_assert_eq!(a.lcm(&b).unwrap(), b.lcm(&a).unwrap());
        prop_assert_eq!(a.lcm(&b).unwrap().lcm(&c).unwrap(), a.lcm(&b.lcm(&c).unwrap()).unwrap());
        prop_assert_eq!(a.lcm(&a).unwrap(), a);
        prop_assert!(a.divides(&a.lcm(&b).unwrap()).unwrap());
    }

    #[test]
    fn ring_axioms(p in polynomial(AmbientRing::plain(3).unwrap()),
                   q in polynomial(AmbientRing::plain(3).unwrap()),
                   r in polynomial(AmbientRing::plain(3).unwrap())) {
        prop_assert!((&p + &p).is_zero());
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn parse_round_trip(p in polynomial(AmbientRing::polarized(2).unwrap())) {
        prop_assert_eq!(Polynomial::parse(p.ring(), &p.to_string()).unwrap(), p);
    }

    #[test]
    fn quotients_compose(c in codes(5), s1 in 0u32..32, s2 in 0u32..32) {
        let n = c.n();
        let s1 = NeuronSet::from_bits(s1).intersection(&NeuronSet::full(n));
        let first = quotient_code(&c, s1);
        prop_assume!(first.is_ok());
        let first = first.unwrap();
        // s2 in the new indexing, mapped back to original indices
        let s2_new = NeuronSet::from_bits(s2).intersection(&NeuronSet::full(first.code.n()));
        let s2_orig = s2_new.iter().fold(NeuronSet::EMPTY, |acc, k| acc.with(first.kept[k - 1]));
        let direct = quotient_code(&c, s1.union(&s2_orig));
        let nested = quotient_code(&first.code, s2_new);
        prop_assert_eq!(direct.is_ok(), nested.is_ok());
        if let (Ok(direct), Ok(nested)) = (direct, nested) {
            prop_assert_eq!(direct.code, nested.code);
        }
    }

    #[test]
    fn maximal_intervals_are_maximal_and_cover(c in codes(5)) {
        let intervals = maximal_intervals(&c);
        for a in &intervals {
            prop_assert!(interval_in_code(a, &c).unwrap());
            for i in a.fixed().iter() {
                prop_assert!(!interval_in_code(&a.relaxed(i), &c).unwrap());
            }
        }
        let covered: BTreeSet<Codeword> = (0u32..1 << c.n())
            .map(|w| Codeword::from_support(NeuronSet::from_bits(w)))
            .filter(|w| intervals.iter().any(|a| a.contains(w)))
            .collect();
        prop_assert_eq!(covered, c.words().copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn generators_vanish_exactly_on_the_code(c in codes(6)) {
        let gens: Vec<Polynomial> = neural_ideal_gens(&c).generators().iter().map(|g| g.to_polynomial()).collect();
        for w in 0u32..1 << c.n() {
            let word = Codeword::from_support(NeuronSet::from_bits(w));
            let vanish = gens.iter().all(|g| !g.eval_bool(w as u64));
            prop_assert_eq!(vanish, c.contains(&word));
        }
    }

    #[test]
    fn canonical_form_is_sound_and_minimal(c in codes(5)) {
        for f in canonical_form(&c).generators() {
            prop_assert!(c.words().all(|w| !f.eval(w.support())));
            for i in f.sigma().iter() {
                let smaller = Pseudomonomial::new(f.ring(), f.sigma().without(i), f.tau()).unwrap();
                prop_assert!(!psm_in_ideal(&smaller, &c).unwrap());
            }
            for j in f.tau().iter() {
                let smaller = Pseudomonomial::new(f.ring(), f.sigma(), f.tau().without(j)).unwrap();
                prop_assert!(!psm_in_ideal(&smaller, &c).unwrap());
            }
        }
    }

    #[test]
    fn decomposition_covers_the_variety(c in codes(5)) {
        let primes = primary_decomposition_neural(&c);
        for w in 0u32..1 << c.n() {
            let word = Codeword::from_support(NeuronSet::from_bits(w));
            prop_assert_eq!(primes.iter().any(|p| p.alpha().contains(&word)), c.contains(&word));
        }
    }

    #[test]
    fn prime_containment_matches_intervals(c in codes(4)) {
        let cf = canonical_form(&c);
        let polar = polarize_ideal(&c);
        for alpha in all_specs(c.n()) {
            let p = PsmPrime::new(alpha);
            let contained = ideal_in_prime(&cf, &p).unwrap();
            prop_assert_eq!(contained, interval_in_code(&alpha, &c).unwrap());
            let w = polarize_prime(&p);
            let polar_contained = polar.generators().iter().all(|g| g.support() & w.vars() != 0);
            prop_assert_eq!(contained, polar_contained);
        }
    }

    #[test]
    fn divisibility_transport((f, g) in psm_pair()) {
        prop_assert_eq!(f.divides(&g).unwrap(), polarize_psm(&f).divides(&polarize_psm(&g)).unwrap());
    }

    #[test]
    fn membership_transport(c in codes(6)) {
        let check = selfcheck::membership_transport(&c).unwrap();
        prop_assert!(check.passed, "{}", check);
    }

    #[test]
    fn polarization_round_trip(f in (1usize..=6).prop_flat_map(psm)) {
        let p = Polynomial::from_monomial(polarize_psm(&f));
        prop_assert_eq!(depolarize_poly(&p).unwrap(), f.to_polynomial());
    }

    #[test]
    fn first_step_nonzerodivisor_holds(c in codes(5)) {
        prop_assert!(first_step_nonzerodivisor(&c));
    }

    #[test]
    fn resolutions_are_complexes(c in codes(4)) {
        let complexes = selfcheck::build_complexes(&c).unwrap();
        let check = selfcheck::compositions_vanish(&complexes).unwrap();
        prop_assert!(check.passed, "{}", check);
        prop_assert!(verify_complex(&taylor_resolution_neural(&c).unwrap()).unwrap());
        let canonical = canonical_resolution(&c).unwrap();
        prop_assert_eq!(canonical.ranks(), complexes.minimal.ranks());
        let expected_sum = if polarize_ideal(&c).generators().is_empty() { 1 } else { 0 };
        prop_assert_eq!(complexes.taylor.alternating_rank_sum(), expected_sum);
        prop_assert_eq!(canonical.alternating_rank_sum(), expected_sum);
    }

    #[test]
    fn minimization_matches_hochster((ring, gens) in squarefree_gens(8)) {
        let taylor = taylor_complex(&gens).unwrap();
        prop_assert!(verify_complex(&taylor).unwrap());
        let minimal = minimize_complex(&taylor).unwrap();
        prop_assert!(verify_complex(&minimal).unwrap());
        for d in minimal.differentials() {
            for j in 0..d.cols() {
                prop_assert!(d.column(j).all(|(_, p)| !p.is_one()));
            }
        }
        prop_assert_eq!(betti_table(&minimal), hochster_betti(&gens, ring).unwrap());
    }

    #[test]
    fn prime_methods_agree(c in codes(5)) {
        let check = selfcheck::prime_agreement(&c).unwrap();
        prop_assert!(check.passed, "{}", check);
    }

    #[test]
    fn depolarized_primes_are_the_decomposition(c in codes(5)) {
        let depolarized: BTreeSet<PsmPrime> =
            primes_over_polar(&c, true).iter().filter_map(|w| w.depolarize()).collect();
        let neural: BTreeSet<PsmPrime> = primary_decomposition_neural(&c).into_iter().collect();
        prop_assert_eq!(depolarized, neural);
    }

    #[test]
    fn polar_complex_facets(c in nonempty_codes(6)) {
        let check = selfcheck::facet_bijection(&c);
        prop_assert!(check.passed, "{}", check);
    }

    #[test]
    fn coning_preserves_cm(c in nonempty_codes(3)) {
        let complex = stanley_reisner_complex(polarize_ideal(&c).generators(), c.polar_ring()).unwrap();
        prop_assert_eq!(reisner_cm(&complex.cone("apex").unwrap()), reisner_cm(&complex));
    }

    #[test]
    fn link_euler_characteristic(c in nonempty_codes(3)) {
        let complex = polar_complex(&c);
        for face in complex.faces() {
            let link = complex.link(face);
            let betti = reduced_betti_numbers(&link);
            let from_homology: isize = betti.iter().enumerate().map(|(i, &b)| sign(i) * b as isize).sum();
            let from_faces: isize = link.f_vector().iter().enumerate().map(|(i, &f)| sign(i) * f as isize).sum();
            prop_assert_eq!(from_homology, from_faces);
        }
    }
}

/// `(-1)^(i-1)` for an entry indexed from degree `-1`.
fn sign(i: usize) -> isize {
    if i.is_multiple_of(2) { -1 } else { 1 }
}

fn all_specs(n: usize) -> Vec<IntervalSpec> {
    let mut out = Vec::new();
    for zeros in 0u32..1 << n {
        for ones in 0u32..1 << n {
            if zeros & ones == 0 {
                out.push(IntervalSpec::new(n, NeuronSet::from_bits(zeros), NeuronSet::from_bits(ones)).unwrap());
            }
        }
    }
    out
}

#[test]
fn simplex_boundaries_are_cm() {
    for k in 2..=5 {
        let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let full = (1u64 << k) - 1;
        let boundary = SimplicialComplex::new(names, (0..k).map(|v| full & !(1u64 << v))).unwrap();
        assert!(reisner_cm(&boundary));
    }
}
