//! Property tests for the invariants that hold across the whole word
//! domain: normal-form soundness against the rewriting oracle,
//! left-weightedness, invariance of λ and support under equality, and the
//! group-table axioms.

use proptest::prelude::*;

use artin::coxeter::{parse_group_spec, FamilySpec};
use artin::coxgroup::Side;
use artin::monoid::{alternating_word, ArtinMonoid, PositiveWord};
use artin::Caps;

const SPECS: [&str; 10] = ["A2", "A3", "B2", "B3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"];

fn spec_and_word(max_len: usize) -> impl Strategy<Value = (FamilySpec, Vec<u8>)> {
    prop::sample::select(&SPECS[..]).prop_flat_map(move |text| {
        let spec = parse_group_spec(text).unwrap();
        let rank = spec.rank() as u8;
        (Just(spec), prop::collection::vec(1..=rank, 0..=max_len))
    })
}

/// Apply a batch of random legal rewrites; the result is always
/// positive-equal to the input.
fn rewrite_walk(monoid: &ArtinMonoid, letters: &[u8], moves: &[(usize, u8)]) -> Vec<u8> {
    let matrix = monoid.system().matrix();
    let mut word = letters.to_vec();
    for &(raw_pos, partner) in moves {
        if word.is_empty() {
            break;
        }
        let pos = raw_pos % word.len();
        let a = word[pos];
        if partner == a || partner == 0 || partner as usize > monoid.rank() {
            continue;
        }
        let Some(m) = matrix.label(a as usize, partner as usize).finite() else {
            continue;
        };
        let m = m as usize;
        if pos + m > word.len() {
            continue;
        }
        if word[pos..pos + m] != alternating_word(a, partner, m)[..] {
            continue;
        }
        word[pos..pos + m].copy_from_slice(&alternating_word(partner, a, m));
    }
    word
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The word read off a normal form is positive-equal to the input,
    /// certified by the independent BFS oracle.
    #[test]
    fn normal_form_sound_against_bfs((spec, letters) in spec_and_word(10)) {
        let monoid = ArtinMonoid::for_spec(&spec).unwrap();
        let word = PositiveWord::new(letters, monoid.rank()).unwrap();
        let nf = monoid.normal_form(&word);
        let read_back = monoid.normal_form_word(&nf);
        prop_assert!(monoid.equal_bfs(&read_back, &word, &Caps::default()).unwrap());
    }

    /// Every adjacent factor pair of every produced normal form satisfies
    /// LeftDescents(next) ⊆ RightDescents(previous), checked through the
    /// public descent API.
    #[test]
    fn normal_forms_are_left_weighted((spec, letters) in spec_and_word(12)) {
        let monoid = ArtinMonoid::for_spec(&spec).unwrap();
        let sys = monoid.system();
        let word = PositiveWord::new(letters, monoid.rank()).unwrap();
        let nf = monoid.normal_form(&word);
        for pair in nf.factors.windows(2) {
            let rd: std::collections::BTreeSet<usize> =
                sys.descents(&pair[0], Side::Right).into_iter().collect();
            for i in sys.descents(&pair[1], Side::Left) {
                prop_assert!(rd.contains(&i));
            }
        }
        for f in &nf.factors {
            prop_assert!(!sys.is_identity(f));
            prop_assert_ne!(f, sys.longest());
        }
    }

    /// Words connected by legal rewrites stay equal under both deciders,
    /// and equality preserves λ and support.
    #[test]
    fn rewrites_preserve_equality_lambda_support(
        (spec, letters) in spec_and_word(10),
        moves in prop::collection::vec((0usize..64, 1u8..=8), 0..16),
    ) {
        let monoid = ArtinMonoid::for_spec(&spec).unwrap();
        let w1 = PositiveWord::new(letters.clone(), monoid.rank()).unwrap();
        let w2 = PositiveWord::new(rewrite_walk(&monoid, &letters, &moves), monoid.rank()).unwrap();
        prop_assert!(monoid.equal(&w1, &w2));
        prop_assert!(monoid.equal_bfs(&w1, &w2, &Caps::default()).unwrap());
        prop_assert_eq!(w1.lambda(), w2.lambda());
        prop_assert_eq!(w1.support(), w2.support());
    }

    /// support(w^k) = support(w) for k ≥ 1.
    #[test]
    fn powers_preserve_support((spec, letters) in spec_and_word(8), k in 1usize..5) {
        let _ = spec;
        let word = PositiveWord::new(letters, 32).unwrap();
        prop_assert_eq!(word.pow(k).support(), word.support());
    }

    /// Unequal normal forms mean the BFS oracle also separates the words
    /// (agreement on the negative side).
    #[test]
    fn deciders_agree_on_random_pairs(
        (spec, letters1) in spec_and_word(7),
        letters2 in prop::collection::vec(1u8..=8, 0..=7),
    ) {
        let monoid = ArtinMonoid::for_spec(&spec).unwrap();
        let rank = monoid.rank() as u8;
        let clipped: Vec<u8> = letters2.iter().map(|l| (l - 1) % rank + 1).collect();
        let w1 = PositiveWord::new(letters1, monoid.rank()).unwrap();
        let w2 = PositiveWord::new(clipped, monoid.rank()).unwrap();
        prop_assert_eq!(
            monoid.equal(&w1, &w2),
            monoid.equal_bfs(&w1, &w2, &Caps::default()).unwrap()
        );
    }

    /// Group-table axioms on random triples: associativity, identity,
    /// inverses.
    #[test]
    fn group_table_axioms(m in 3u32..=9, triple in prop::collection::vec(0usize..1000, 3)) {
        let spec = FamilySpec::i2(m).unwrap();
        let table = artin::coxgroup::CoxSystem::for_spec(&spec)
            .unwrap()
            .group_table(&Caps::default())
            .unwrap();
        let order = table.order();
        let (i, j, k) = (triple[0] % order, triple[1] % order, triple[2] % order);
        prop_assert_eq!(table.product(table.product(i, j), k), table.product(i, table.product(j, k)));
        prop_assert_eq!(table.product(0, i), i);
        prop_assert_eq!(table.product(i, 0), i);
        prop_assert_eq!(table.product(i, table.inverse(i)), 0);
    }
}
