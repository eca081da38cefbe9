use proptest::prelude::*;

use partition_enum::oracle::{filter_by_spec, generate_all};
use partition_enum::rgs::{self, parse_digits, BlockPartition, PrefixMaxima, RestrictedGrowthString};
use partition_enum::{BlockCountSpec, Direction, EnumeratorState, Regime};

#[test]
fn blocks_round_trip_for_every_string_up_to_eight() {
    for n in 1..=8 {
        for digits in generate_all(n).unwrap() {
            let s = RestrictedGrowthString::new(digits.clone()).unwrap();
            let blocks = s.to_blocks();
            assert_eq!(blocks.len(), s.block_count());
            assert_eq!(blocks.element_count(), n);
            assert_eq!(RestrictedGrowthString::from_blocks(&blocks), s);
            let distinct = digits.iter().collect::<std::collections::BTreeSet<_>>().len();
            let maxima = PrefixMaxima::of(&digits);
            assert_eq!(rgs::block_count(&digits, maxima.as_slice()), distinct);
        }
    }
}

#[test]
fn validate_agrees_with_the_oracle() {
    // every digit string over 0..n of length n, n <= 6
    for n in 1..=6usize {
        let valid: std::collections::BTreeSet<Vec<usize>> = generate_all(n).unwrap().into_iter().collect();
        let total = n.pow(n as u32);
        for mut code in 0..total {
            let digits: Vec<usize> = (0..n)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            assert_eq!(rgs::validate(&digits), valid.contains(&digits), "{digits:?}");
        }
    }
}

#[test]
fn figure_example() {
    let s = RestrictedGrowthString::parse("01102").unwrap();
    assert_eq!(s.to_blocks().to_string(), "{1,4}{2,3}{5}");
    let blocks = BlockPartition::new(vec![vec![3, 2], vec![5], vec![4, 1]]).unwrap();
    assert_eq!(RestrictedGrowthString::from_blocks(&blocks), s);
}

fn arb_rgs(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=1000, 1..=max_len).prop_map(|raw| {
        let mut out = Vec::with_capacity(raw.len());
        let mut max = 0;
        for (i, r) in raw.into_iter().enumerate() {
            let d = if i == 0 { 0 } else { r % (max + 2) };
            max = max.max(d);
            out.push(d);
        }
        out
    })
}

proptest! {
    #[test]
    fn text_forms_round_trip(digits in arb_rgs(40)) {
        let s = RestrictedGrowthString::new(digits.clone()).unwrap();
        prop_assert_eq!(RestrictedGrowthString::parse(&s.to_string()).unwrap(), s.clone());
        if let Some(compact) = s.to_compact() {
            prop_assert_eq!(parse_digits(&compact).unwrap(), digits.clone());
        }
        prop_assert_eq!(RestrictedGrowthString::from_blocks(&s.to_blocks()), s);
    }

    #[test]
    fn relabelled_blocks_normalize(digits in arb_rgs(20), seed in any::<u64>()) {
        let s = RestrictedGrowthString::new(digits).unwrap();
        let mut blocks = s.to_blocks().blocks().to_vec();
        // shuffle block order and reverse each block
        let len = blocks.len();
        blocks.rotate_left((seed as usize) % len);
        for b in &mut blocks {
            b.reverse();
        }
        let normalized = BlockPartition::new(blocks).unwrap();
        prop_assert_eq!(RestrictedGrowthString::from_blocks(&normalized), s);
    }

    #[test]
    fn random_sets_match_the_oracle(n in 1usize..=9, mask in 1u32..512, reverse in any::<bool>()) {
        let set: Vec<usize> = (1..=9).filter(|k| mask & (1 << (k - 1)) != 0).collect();
        let spec = BlockCountSpec::new(Regime::Set(set.clone()), n).unwrap();
        let mut expected = filter_by_spec(&generate_all(n).unwrap(), &spec);
        let direction = if reverse {
            expected.reverse();
            Direction::Reverse
        } else {
            Direction::Forward
        };
        let got: Vec<_> = EnumeratorState::first(spec, direction).into_iter().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn resume_anywhere(n in 2usize..=8, lo in 1usize..=8, width in 0usize..4, skip in 0usize..200) {
        let regime = Regime::Range(lo, lo + width);
        let full: Vec<_> = EnumeratorState::new(n, regime.clone(), Direction::Forward).unwrap().into_iter().collect();
        let mut state = EnumeratorState::new(n, regime, Direction::Forward).unwrap();
        let steps = skip.min(full.len().saturating_sub(1));
        for _ in 0..steps {
            state.advance();
        }
        let rest: Vec<_> = EnumeratorState::from_token(&state.to_token()).unwrap().into_iter_after_current().collect();
        let tail = if full.is_empty() { &full[..] } else { &full[steps + 1..] };
        prop_assert_eq!(rest, tail);
    }
}
