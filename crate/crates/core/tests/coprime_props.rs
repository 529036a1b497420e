use proptest::prelude::*;

use subdeg::analysis::{coprime_pairs, max_coprime_set};
use subdeg::perm::gcd;

fn pairwise_coprime(v: &[u64]) -> bool {
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| gcd(a, b) == 1))
}

fn brute_force_size(values: &[u64]) -> usize {
    let mut v: Vec<u64> = values.iter().copied().filter(|&x| x > 1).collect();
    v.sort_unstable();
    v.dedup();
    (0u32..1 << v.len())
        .map(|mask| v.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect::<Vec<_>>())
        .filter(|s| pairwise_coprime(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn pairs_are_coprime_and_complete(values in prop::collection::vec(1u64..200, 0..12)) {
        let pairs = coprime_pairs(&values);
        for &(m, n) in &pairs {
            prop_assert!(m > 1 && m < n);
            prop_assert_eq!(gcd(m, n), 1);
            prop_assert!(values.contains(&m) && values.contains(&n));
        }
        for &m in &values {
            for &n in &values {
                if m > 1 && m < n && gcd(m, n) == 1 {
                    prop_assert!(pairs.contains(&(m, n)));
                }
            }
        }
    }

    #[test]
    fn max_set_is_maximum(values in prop::collection::vec(1u64..300, 0..12)) {
        let best = max_coprime_set(&values);
        prop_assert!(pairwise_coprime(&best));
        prop_assert!(best.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(best.iter().all(|x| *x > 1 && values.contains(x)));
        prop_assert_eq!(best.len(), brute_force_size(&values));
    }

    #[test]
    fn pairs_exist_iff_max_set_exceeds_one(values in prop::collection::vec(1u64..100, 0..10)) {
        prop_assert_eq!(coprime_pairs(&values).is_empty(), max_coprime_set(&values).len() < 2);
    }
}
