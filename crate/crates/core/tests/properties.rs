use bchcover::bch::build_bch;
use bchcover::bounds::{classify, johnson_binary_floor, johnson_general_floor, tau_wu};
use bchcover::decode::{bounded_decode, list_decode, list_decode_with, ml_decode, Strategy as Search};
use bchcover::gf2m::{FieldContext, GfElement, PRIMITIVE_POLYNOMIALS};
use bchcover::linear_code::{rank, LinearCode, Word};
use bchcover::radius::{covering_radius, is_perfect};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shift-and-add multiplication reduced by the field polynomial.
fn slow_mul(a: u32, b: u32, m: u32, poly: u32) -> u32 {
    let (mut a, mut b, mut acc) = (a, b, 0);
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= poly;
        }
    }
    acc
}

#[test]
fn field_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for m in 2..=11u32 {
        let f = FieldContext::new(m).unwrap();
        let poly = PRIMITIVE_POLYNOMIALS[m as usize - 2].1;
        let q = 1u32 << m;
        for _ in 0..1000 {
            let [a, b, c] = [0; 3].map(|_| GfElement(rng.gen_range(0..q)));
            assert_eq!(f.mul(a, b).0, slow_mul(a.0, b.0, m, poly));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
            assert_eq!(f.mul(a, GfElement::ONE), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), GfElement::ONE);
            }
        }
    }
}

/// Distinct codes whose minimum distance is computed exactly at build time.
fn small_bch_codes() -> Vec<LinearCode> {
    let mut codes: Vec<LinearCode> = Vec::new();
    for n in [7, 9, 15, 17, 21, 23, 31] {
        for delta in (3..n).step_by(2) {
            let (code, _) = build_bch(n, delta).unwrap();
            let known = codes.iter().any(|c| c.generator_rows() == code.generator_rows());
            if code.known_min_distance().unwrap().is_exact() && !known {
                codes.push(code);
            }
        }
    }
    codes
}

#[test]
fn bch_codes_are_cyclic_and_meet_designed_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [7, 9, 15, 17, 21, 23, 31] {
        for delta in (3..n).step_by(2) {
            let (code, spec) = build_bch(n, delta).unwrap();
            assert!(code.known_min_distance().unwrap().value >= delta, "{}", code.label());
            assert_eq!(code.k(), n - spec.generator.degree().unwrap());
            for _ in 0..200 {
                let c = code.encode(rng.gen::<u64>() & ((1u64 << code.k()) - 1));
                assert!(code.contains(&c.cyclic_shift()).unwrap(), "{}", code.label());
            }
        }
    }
}

#[test]
fn min_distance_matches_exhaustive_membership() {
    for code in small_bch_codes().into_iter().filter(|c| c.n() <= 17) {
        let n = code.n();
        let brute = (1u64..1 << n)
            .map(|b| Word::new(b, n).unwrap())
            .filter(|w| code.contains(w).unwrap())
            .map(|w| w.weight())
            .min()
            .unwrap_or(n + 1);
        assert_eq!(code.known_min_distance().unwrap().value, brute, "{}", code.label());
    }
}

#[test]
fn radius_sanity_on_bch_codes() {
    for code in small_bch_codes().into_iter().filter(|c| c.redundancy() <= 25) {
        let res = covering_radius(&code, code.n()).unwrap();
        let t = code.error_capacity().unwrap();
        assert!(res.radius >= t, "{}", code.label());
        let stored = code.clone().with_covering_radius(res.radius);
        let packs = (1u128 << code.k()) * bchcover::combinations::ball_size(code.n(), t) == 1u128 << code.n();
        assert_eq!(is_perfect(&stored).unwrap(), packs, "{}", code.label());
        assert_eq!(res.radius == t, packs, "{}", code.label());
        // every syndrome sits in exactly one stratum
        let total: u64 = res.coset_count_by_weight.iter().sum();
        assert_eq!(total, 1u64 << code.redundancy());
        for (w, &count) in res.coset_count_by_weight.iter().enumerate() {
            assert!(count as u128 <= bchcover::combinations::binomial(code.n(), w));
        }
        assert_eq!(res.coset_count_by_weight.len(), res.radius + 1);
        let leader = code.coset_representative(&res.deepest_syndrome);
        assert_eq!(code.syndrome(&leader).unwrap(), res.deepest_syndrome);
        let nearest = ml_decode(&stored, &leader).unwrap().best_distance().unwrap();
        assert_eq!(nearest, res.radius, "{}", code.label());
    }
}

#[test]
fn binary_johnson_dominates_general() {
    for n in 1..=128 {
        for d in 1..=n / 2 {
            assert!(johnson_binary_floor(n, d).unwrap() >= johnson_general_floor(n, d).unwrap());
        }
    }
}

#[test]
fn covered_codes_decode_within_binary_johnson() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (n, delta) in [(15, 5), (17, 3), (23, 5), (31, 11)] {
        let (code, _) = build_bch(n, delta).unwrap();
        let r = covering_radius(&code, n).unwrap().radius;
        let code = code.with_covering_radius(r);
        let report = classify(&code).unwrap();
        assert!(report.is_a_covered);
        for _ in 0..200 {
            let v = Word::new(rng.gen::<u64>() & ((1u64 << n) - 1), n).unwrap();
            let ml = ml_decode(&code, &v).unwrap();
            assert!(ml.best_distance().unwrap() <= report.tau_binary);
        }
    }
}

#[test]
fn bounded_decoding_is_unique() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (n, delta) in [
        (7, 3),
        (15, 3),
        (15, 5),
        (15, 7),
        (17, 3),
        (23, 5),
        (31, 3),
        (31, 5),
        (31, 7),
        (31, 11),
        (31, 15),
    ] {
        let (code, _) = build_bch(n, delta).unwrap();
        for _ in 0..10_000 {
            let v = Word::new(rng.gen::<u64>() & ((1u64 << n) - 1), n).unwrap();
            assert!(bounded_decode(&code, &v).unwrap().len() <= 1);
        }
    }
}

fn arb_code() -> impl Strategy<Value = LinearCode> {
    (6usize..=12)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| (Just(n), prop::collection::vec(1u64..(1 << n), k)))
        .prop_filter_map("full rank", |(n, rows)| {
            (rank(&rows, n) == rows.len()).then(|| LinearCode::from_generator_rows(n, rows, "random").unwrap())
        })
}

fn brute_list(code: &LinearCode, v: &Word, tau: usize) -> Vec<(usize, u64)> {
    let mut all: Vec<(usize, u64)> = code
        .codewords()
        .map(|c| (c.distance(v), c.lex_key()))
        .filter(|&(d, _)| d <= tau)
        .collect();
    all.sort_unstable();
    all
}

fn keys(res: &bchcover::decode::DecodeResult) -> Vec<(usize, u64)> {
    res.entries.iter().map(|(c, d)| (*d, c.lex_key())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_checks_annihilate_generators(code in arb_code()) {
        for &g in code.generator_rows() {
            prop_assert!(code.contains(&code.word(g).unwrap()).unwrap());
        }
        prop_assert_eq!(code.parity_check_rows().len(), code.n() - code.k());
        prop_assert_eq!(rank(code.parity_check_rows(), code.n()), code.n() - code.k());
    }

    #[test]
    fn text_round_trip(code in arb_code()) {
        let back = LinearCode::from_text(&code.to_text()).unwrap();
        prop_assert_eq!(back.generator_rows(), code.generator_rows());
        prop_assert_eq!(back.n(), code.n());
    }

    #[test]
    fn list_decoding_matches_brute_force(code in arb_code(), bits in any::<u64>(), tau in 0usize..6) {
        let v = Word::new(bits & ((1 << code.n()) - 1), code.n()).unwrap();
        let want = brute_list(&code, &v, tau);
        for s in [Search::ErrorPatterns, Search::SplitSyndrome, Search::Auto] {
            prop_assert_eq!(keys(&list_decode_with(&code, &v, tau, s).unwrap()), want.clone());
        }
    }

    #[test]
    fn lists_grow_with_radius(code in arb_code(), bits in any::<u64>(), tau in 0usize..5) {
        let v = Word::new(bits & ((1 << code.n()) - 1), code.n()).unwrap();
        let small = keys(&list_decode(&code, &v, tau).unwrap());
        let large = keys(&list_decode(&code, &v, tau + 1).unwrap());
        prop_assert!(small.iter().all(|e| large.contains(e)));
    }

    #[test]
    fn sphere_covering(code in arb_code()) {
        let r = covering_radius(&code, code.n()).unwrap().radius;
        let ball = bchcover::combinations::ball_size(code.n(), r);
        prop_assert!((1u128 << code.k()) * ball >= 1u128 << code.n());
    }

    #[test]
    fn relaxed_radius_is_bracketed(n in 2usize..200, frac in 0.0f64..0.5, p in 1u64..4, q in 1u64..12) {
        let d = ((n as f64 * frac) as usize).max(1);
        prop_assume!(p <= q);
        let w = tau_wu(n, d, Ratio::new(p, q)).unwrap();
        prop_assert!((d - 1) / 2 <= w.tau);
        prop_assert!(w.tau <= johnson_binary_floor(n, d).unwrap());
        if q > 1 {
            let coarser = tau_wu(n, d, Ratio::new(p, q - 1).min(Ratio::from_integer(1))).unwrap();
            prop_assert!(coarser.tau <= w.tau);
        }
    }
}
