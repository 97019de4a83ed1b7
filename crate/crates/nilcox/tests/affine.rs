use std::collections::{HashMap, HashSet};

use nilcox::affine::{
    abi_decompose, abi_triples, abi_word, coxeter_length, cyclic_word, enumerate_elements, is_reduced,
    reduced_words, word_symmetry, word_to_perm, AbiDecomposition, AbiTriple, AffinePerm, Anchor, Direction,
    Symmetry, Word,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn w(letters: &[i64], n: usize) -> Word {
    Word::from_ints(letters, n)
}

/// Right multiplication by `s_i` on a window `f(1..n)`, written out directly.
fn window_times_simple(win: &mut [i64], i: usize) {
    let n = win.len();
    if i == 0 {
        let (first, last) = (win[0], win[n - 1]);
        win[0] = last - n as i64;
        win[n - 1] = first + n as i64;
    } else {
        win.swap(i - 1, i);
    }
}

/// Distances from the identity in the Cayley graph, for every element
/// reachable with at most `max_len` letters.
fn cayley_distances(n: usize, max_len: usize) -> HashMap<Vec<i64>, usize> {
    let id: Vec<i64> = (1..=n as i64).collect();
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut frontier = vec![id];
    for d in 1..=max_len {
        let mut next = vec![];
        for g in &frontier {
            for i in 0..n {
                let mut h = g.clone();
                window_times_simple(&mut h, i);
                if !dist.contains_key(&h) {
                    dist.insert(h.clone(), d);
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    dist
}

fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u8).map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Word(v)
                })
            })
            .collect();
    }
    out
}

fn longest_run(word: &Word, step: i64, n: usize) -> usize {
    let l = word.letters();
    if l.is_empty() {
        return 0;
    }
    let (mut best, mut cur) = (1, 1);
    for k in 1..l.len() {
        if (l[k - 1] as i64 + step).rem_euclid(n as i64) == l[k] as i64 {
            cur += 1;
        } else {
            cur = 1;
        }
        best = best.max(cur);
    }
    best
}

#[test]
fn perm_examples() {
    assert_eq!(word_to_perm(&Word::empty(), 3), AffinePerm::identity(3));
    assert_eq!(word_to_perm(&w(&[1], 3), 3).window(), &[2, 1, 3]);
    assert_eq!(coxeter_length(&AffinePerm::identity(4)), 0);
    for n in 2..=5 {
        for i in 0..n as u8 {
            assert_eq!(coxeter_length(&word_to_perm(&Word(vec![i]), n)), 1);
        }
    }
    assert!(AffinePerm::from_window(vec![1, 1, 4]).is_err());
    assert!(AffinePerm::from_window(vec![2, 3, 4]).is_err());
}

#[test]
fn abi_examples() {
    let t = AbiTriple::new(3, 5, 2);
    let word = abi_word(t, 3).unwrap();
    assert_eq!(word, w(&[1, 2, 3, 1, 3, 2, 1, 3, 2], 3));
    assert_eq!(coxeter_length(&word_to_perm(&word, 3)), 9);
    for i in 0..3u8 {
        assert_eq!(abi_word(AbiTriple::new(0, 0, i), 3).unwrap(), Word(vec![i]));
    }
    assert_eq!(abi_decompose(&AffinePerm::identity(3)).unwrap(), AbiDecomposition::Identity);
    assert_eq!(
        word_symmetry(&word, Symmetry::Reverse, 3),
        w(&[2, 3, 1, 2, 3, 1, 3, 2, 1], 3)
    );
}

#[test]
fn cyclic_examples() {
    assert_eq!(
        cyclic_word(2, 5, Direction::Clockwise, Anchor::Left, 3),
        w(&[2, 3, 1, 2, 3], 3)
    );
    assert_eq!(
        cyclic_word(3, 5, Direction::Clockwise, Anchor::Right, 3),
        w(&[2, 3, 1, 2, 3], 3)
    );
    assert_eq!(
        cyclic_word(1, 4, Direction::Widdershins, Anchor::Left, 3),
        w(&[1, 3, 2, 1], 3)
    );
    for dir in [Direction::Clockwise, Direction::Widdershins] {
        for anchor in [Anchor::Left, Anchor::Right] {
            assert_eq!(cyclic_word(2, 1, dir, anchor, 4), Word(vec![2]));
        }
    }
}

#[test]
fn symmetry_examples() {
    assert_eq!(word_symmetry(&w(&[1, 2, 3], 3), Symmetry::Sigma, 3), w(&[2, 3, 1], 3));
    assert_eq!(word_symmetry(&w(&[1, 2], 3), Symmetry::Tau, 3), w(&[2, 1], 3));
}

#[test]
fn parse_and_display() {
    assert_eq!(Word::parse("stus", 3).unwrap(), w(&[1, 2, 3, 1], 3));
    assert_eq!(Word::parse("1,2,3,1", 3).unwrap(), w(&[1, 2, 0, 1], 3));
    assert_eq!(w(&[1, 2, 3, 1], 3).to_alias_string(), "stus");
    assert!(Word::parse("1,,2", 3).is_err());
    assert!(Word::parse("sx", 3).is_err());
}

#[test]
fn repeated_letter_is_not_reduced() {
    for n in 2..=5 {
        for i in 0..n as u8 {
            assert!(!is_reduced(&Word(vec![i, i]), n));
        }
    }
}

#[test]
fn shifted_cyclic_concatenation() {
    for n in 3..=5usize {
        for j in 0..n as i64 {
            for i in 0..n as i64 {
                let left = cyclic_word(j, n - 1, Direction::Clockwise, Anchor::Right, n);
                let right = cyclic_word(i, n - 1, Direction::Clockwise, Anchor::Left, n);
                let cat = left.concat(&right);
                let expect = (i - j - 1).rem_euclid(n as i64) == 0;
                assert_eq!(is_reduced(&cat, n), expect, "n = {n}, i = {i}, j = {j}");
                if expect {
                    let start = j - (n as i64 - 2);
                    assert_eq!(cat, cyclic_word(start, 2 * (n - 1), Direction::Clockwise, Anchor::Left, n));
                }
            }
        }
    }
}

#[test]
fn omitting_a_middle_letter_breaks_reducedness() {
    let (n, k) = (5usize, 3usize);
    let d = k * (n - 1);
    for i in 0..n as i64 {
        let cw = cyclic_word(i, d, Direction::Clockwise, Anchor::Right, n);
        assert!(is_reduced(&cw, n));
        for ell in n..=(k - 1) * (n - 1) {
            let mut letters = cw.0.clone();
            letters.remove(ell - 1);
            assert!(!is_reduced(&Word(letters), n), "i = {i}, omit position {ell}");
        }
    }
}

#[test]
fn is_reduced_matches_exhaustive_search() {
    for n in 2..=4 {
        let dist = cayley_distances(n, 6);
        for len in 0..=6 {
            for word in all_words(n, len) {
                let mut win: Vec<i64> = (1..=n as i64).collect();
                for &l in word.letters() {
                    window_times_simple(&mut win, l as usize);
                }
                assert_eq!(word_to_perm(&word, n).window(), &win[..], "{word}");
                assert_eq!(is_reduced(&word, n), dist[&win] == len, "n = {n}, word {word}");
            }
        }
    }
}

#[test]
fn abi_words_are_reduced_and_injective() {
    let mut seen = HashSet::new();
    for a in 0..=10 {
        for b in 0..=10 {
            for i in 0..3u8 {
                let word = abi_word(AbiTriple::new(a, b, i), 3).unwrap();
                assert_eq!(word.len(), a + b + 1);
                assert!(is_reduced(&word, 3), "w({a},{b},{i})");
                assert!(seen.insert(word_to_perm(&word, 3)), "w({a},{b},{i}) repeats an element");
            }
        }
    }
}

#[test]
fn abi_round_trip() {
    for a in 0..=8 {
        for b in 0..=8 {
            for i in 0..3u8 {
                let t = AbiTriple::new(a, b, i);
                let g = word_to_perm(&abi_word(t, 3).unwrap(), 3);
                assert_eq!(abi_decompose(&g).unwrap(), AbiDecomposition::Triple(t));
            }
        }
    }
}

#[test]
fn abi_triples_exhaust_each_length() {
    let layers = enumerate_elements(3, 9);
    for (d, layer) in layers.iter().enumerate().skip(1) {
        assert_eq!(abi_triples(d, 3).len(), layer.len(), "length {d}");
        let from_triples: HashSet<AffinePerm> = abi_triples(d, 3)
            .into_iter()
            .map(|t| word_to_perm(&abi_word(t, 3).unwrap(), 3))
            .collect();
        let enumerated: HashSet<AffinePerm> = layer.iter().map(|(g, _)| g.clone()).collect();
        assert_eq!(from_triples, enumerated);
    }
}

#[test]
fn dihedral_case_uses_alternating_words() {
    for d in 1..=8 {
        let triples = abi_triples(d, 2);
        assert_eq!(triples.len(), 2);
        for t in triples {
            assert_eq!((t.a, t.b), (d - 1, 0));
            let word = abi_word(t, 2).unwrap();
            assert!(word.letters().windows(2).all(|p| p[0] != p[1]));
            assert!(is_reduced(&word, 2));
        }
    }
}

#[test]
fn canonical_word_has_runs_a_plus_one_and_b_plus_one() {
    for d in 1..=10 {
        for t in abi_triples(d, 3) {
            let word = abi_word(t, 3).unwrap();
            assert_eq!(longest_run(&word, 1, 3), t.a + 1, "{t}");
            assert_eq!(longest_run(&word, -1, 3), t.b + 1, "{t}");
        }
    }
}

#[test]
fn cyclic_subwords_of_other_reduced_expressions() {
    // On the rays a = 0 and b = 0 the expression is unique, so the bound
    // a + 1, b + 1 holds trivially. Off the rays a braid move can lengthen a
    // run by one: w(1,2,0) = (1,2,1,0) = (2,1,2,0), and (1,2,0) is clockwise.
    let g = word_to_perm(&w(&[1, 2, 1, 0], 3), 3);
    assert_eq!(abi_decompose(&g).unwrap(), AbiDecomposition::Triple(AbiTriple::new(1, 2, 0)));
    assert!(reduced_words(&g).contains(&w(&[2, 1, 2, 0], 3)));
    assert_eq!(longest_run(&w(&[2, 1, 2, 0], 3), 1, 3), 3);

    for d in 1..=7 {
        for t in abi_triples(d, 3) {
            let g = word_to_perm(&abi_word(t, 3).unwrap(), 3);
            let words = reduced_words(&g);
            if t.a == 0 || t.b == 0 {
                assert_eq!(words.len(), 1, "{t}");
            }
            for word in words {
                assert!(longest_run(&word, 1, 3) <= t.a + 2, "{t}: {word}");
                assert!(longest_run(&word, -1, 3) <= t.b + 2, "{t}: {word}");
            }
        }
    }
}

fn arb_word(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n as u8, 0..12).prop_map(Word)
}

proptest! {
    #![proptest_config(Config {
        cases: 1000,
        rng_seed: RngSeed::Fixed(0x5eed_0002),
        failure_persistence: None,
        ..Config::default()
    })]

    #[test]
    fn symmetries_preserve_length((n, word) in (2usize..=5).prop_flat_map(|n| (Just(n), arb_word(n)))) {
        let len = coxeter_length(&word_to_perm(&word, n));
        for s in [Symmetry::Sigma, Symmetry::Tau, Symmetry::Reverse] {
            let image = word_symmetry(&word, s, n);
            prop_assert_eq!(coxeter_length(&word_to_perm(&image, n)), len);
        }
        prop_assert!(len <= word.len());
        prop_assert_eq!(len % 2, word.len() % 2);
    }

    #[test]
    fn decompose_inverts_on_random_words(word in arb_word(3)) {
        let g = word_to_perm(&word, 3);
        match abi_decompose(&g).unwrap() {
            AbiDecomposition::Identity => prop_assert!(g.is_identity()),
            AbiDecomposition::Triple(t) => {
                prop_assert_eq!(t.len(), coxeter_length(&g));
                prop_assert_eq!(word_to_perm(&abi_word(t, 3).unwrap(), 3), g);
            }
        }
    }
}
