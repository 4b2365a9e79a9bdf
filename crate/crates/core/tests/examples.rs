// SPDX-License-Identifier: Apache-2.0

//! Worked examples exercised through the public API only.

use lce_core::apps::{landau_vishkin, maximal_palindromes, rmq_via_lce, tandem_repeats};
use lce_core::verifier::brute_force_tau_good;
use lce_core::{
    build_verified_index, naive_lce, verify_tau_good, CostCounters, CrossIndex, CrossLce, DcLceIndex, DifferenceCover,
    FingerprintFn, FpLceIndex, FullLceOracle, InnerKind, LceIndex, Modulus, NaiveCross, NaiveLce, Text,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: &str = "dbcaabcabcaabcac";

#[test]
fn single_string_queries() {
    let banana = Text::from("banana");
    assert_eq!(naive_lce(&banana, 2, 4, &mut CostCounters::default()).unwrap(), 3);
    assert_eq!(FullLceOracle::build(&banana).unwrap().lce(2, 4).unwrap(), 3);
    assert_eq!(FullLceOracle::build(&Text::from("aaaa")).unwrap().lce(1, 3).unwrap(), 2);

    let p = Text::from(P);
    assert_eq!(NaiveLce::new(&p).lce(4, 11).unwrap(), 5);
    assert_eq!(FullLceOracle::build(&p).unwrap().lce(5, 12).unwrap(), 4);
    assert_eq!(DcLceIndex::build(&p, 5).unwrap().lce(5, 12).unwrap(), 4);

    let dc = DcLceIndex::build(&banana, 2).unwrap();
    for i in 1..=6 {
        for j in 1..=6 {
            assert_eq!(dc.lce(i, j).unwrap(), NaiveLce::new(&banana).lce(i, j).unwrap());
        }
    }
    let mut cost = CostCounters::default();
    assert_eq!(dc.lce_with(3, 3, &mut cost).unwrap(), 4);
    assert_eq!(cost.char_comparisons, 0);

    let fp = FpLceIndex::build(&banana, 2, FingerprintFn::random(Modulus::MERSENNE_61, 1)).unwrap();
    assert_eq!(fp.lce(1, 3).unwrap(), 0);
    let mut cost = CostCounters::default();
    assert_eq!(fp.lce_with(2, 2, &mut cost).unwrap(), 5);
    assert_eq!(cost.fp_comparisons, 0);
}

#[test]
fn difference_covers() {
    let one_two_four = DifferenceCover::from_elements(5, &[1, 2, 4]).unwrap();
    assert_eq!(one_two_four.covers(3).unwrap(), (1, 4));
    assert_eq!(DifferenceCover::build(1).unwrap().elements(), [0]);
    let nine = DifferenceCover::build(9).unwrap();
    assert_eq!(nine.elements(), [0, 1, 2, 5, 8]);
    let (d2, d1) = nine.covers(7).unwrap();
    assert_eq!((d1 + 9 - d2) % 9, 7);
    assert_eq!(nine.sample_positions(10), [1, 2, 5, 8, 9, 10]);
    assert!(DifferenceCover::build(5).unwrap().len() <= 5);

    let p = Text::from(P);
    let dc = DcLceIndex::with_cover(&p, one_two_four).unwrap();
    assert_eq!(dc.sample(), [1, 2, 4, 6, 7, 9, 11, 12, 14, 16]);

    let unary = Text::from("aaaaaaaa");
    let dc = DcLceIndex::build(&unary, 4).unwrap();
    let sorted = dc.sorted_sample();
    for r in 0..sorted.len() - 1 {
        assert_eq!(dc.adjacent_lcp(r), 8 - sorted[r].max(sorted[r + 1]) + 1);
    }
}

#[test]
fn fingerprints() {
    let f = FingerprintFn::new(Modulus::new(101).unwrap(), 7).unwrap();
    assert_eq!(f.fp_direct(b"ab"), 27);
    assert_eq!(f.fp_direct(b""), 0);
    assert_eq!(f.fp_direct(b"aba"), f.fp_direct(b"aba"));

    let t = Text::new(vec![b'x'; 16]);
    let fp = FpLceIndex::build(&t, 4, FingerprintFn::random(Modulus::MERSENNE_61, 2)).unwrap();
    assert_eq!(fp.suffix_fingerprints().len(), 3);
    assert!(FpLceIndex::build(&t, 16, FingerprintFn::random(Modulus::MERSENNE_61, 2))
        .unwrap()
        .suffix_fingerprints()
        .is_empty());

    let p = Text::from(P);
    let func = FingerprintFn::random(Modulus::MERSENNE_61, 3);
    let fp = FpLceIndex::build(&p, 4, func).unwrap();
    let mut cost = CostCounters::default();
    assert_eq!(fp.fp_of_range(3, 6, &mut cost).unwrap(), func.fp_direct(&p.as_bytes()[2..8]));
    assert_eq!(fp.fp_of_range(3, 0, &mut cost).unwrap(), 0);
}

#[test]
fn random_binary_text_against_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(4096);
    let t = Text::new((0..4096).map(|_| rng.gen_range(b'0'..=b'1')).collect::<Vec<u8>>());
    let fp = FpLceIndex::build(&t, 16, FingerprintFn::random(Modulus::MERSENNE_61, rng.gen())).unwrap();
    for _ in 0..100_000 {
        let (i, j) = (rng.gen_range(1..=4096), rng.gen_range(1..=4096));
        assert_eq!(fp.lce(i, j).unwrap(), naive_lce(&t, i, j, &mut CostCounters::default()).unwrap(), "({i},{j})");
    }
}

#[test]
fn verifier_examples() {
    let unary = Text::new(vec![b'a'; 64]);
    for seed in 0..10 {
        let f = FingerprintFn::random(Modulus::SMALL, seed);
        assert!(verify_tau_good(&unary, 4, &f).unwrap().is_accepted());
        assert!(build_verified_index(&unary, 4, seed).unwrap().attempts == 1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(128);
    let t = Text::new((0..128).map(|_| rng.gen_range(b'a'..b'e')).collect::<Vec<u8>>());
    let mut aborted = 0;
    for seed in 0..50 {
        let f = FingerprintFn::random(Modulus::SMALL, seed);
        if let Some(w) = verify_tau_good(&t, 4, &f).unwrap().witness() {
            aborted += 1;
            assert!(w.confirms(&t, &f));
            assert!(!brute_force_tau_good(&t, 4, &f));
        }
        assert!(brute_force_tau_good(&t, 4, &FingerprintFn::random(Modulus::MERSENNE_61, seed)));
    }
    assert!(aborted > 25);
}

#[test]
fn cross_queries() {
    let (p, t) = (Text::from("abaab"), Text::from("aabab"));
    let idx = CrossIndex::build(&p, &t, 2, InnerKind::Dc { tau: 2 }).unwrap();
    assert_eq!(idx.cross_lce(1, 2).unwrap(), 3);
    let mut cost = CostCounters::default();
    assert_eq!(NaiveCross::new(&p, &t).cross_lce_with(2, 1, &mut cost).unwrap(), 0);
    assert_eq!(cost.char_comparisons, 1);

    let (z, a) = (Text::from("zzzz"), Text::new(vec![b'a'; 12]));
    assert_eq!(CrossIndex::build(&z, &a, 3, InnerKind::Naive).unwrap().best(), [0, 0, 0, 0]);
}

#[test]
fn applications() {
    let mut cost = CostCounters::default();
    let (p, t) = (Text::from("aba"), Text::from("ababa"));
    assert_eq!(landau_vishkin(&NaiveCross::new(&p, &t), 0, &mut cost).unwrap().end_positions, [3, 5]);
    let (p, t) = (Text::from("abc"), Text::from("axcab"));
    assert_eq!(landau_vishkin(&NaiveCross::new(&p, &t), 3, &mut cost).unwrap().end_positions, [1, 2, 3, 4, 5]);

    let t = Text::from("abacaba");
    let r = t.reversed();
    let pal = maximal_palindromes(&NaiveCross::new(&t, &r), &mut cost).unwrap();
    assert_eq!(pal.longest(), Some((1, 7)));

    let t = Text::from("aabaab");
    let r = t.reversed();
    let sq = tandem_repeats(&NaiveLce::new(&t), &NaiveLce::new(&r), &mut cost).unwrap();
    assert_eq!(sq.squares, [(1, 2), (1, 6), (4, 2)]);

    let bits = Text::new([1u8, 1, 0, 1]);
    assert_eq!(rmq_via_lce(&bits, DcLceIndex::build(&bits, 2).unwrap(), 2, 4).unwrap(), 3);
}
