use proptest::prelude::*;

use subdeg::analysis::subdegrees;
use subdeg::format::{parse_perm_group_text, write_perm_group};
use subdeg::perm::{parse_perm, Perm, PermGroup};

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = PermGroup> {
    (2usize..=8)
        .prop_flat_map(|d| prop::collection::vec(perm(d), 1..=3).prop_map(move |g| PermGroup::new(d, g).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative((a, b, c) in (1usize..12).prop_flat_map(|d| (perm(d), perm(d), perm(d)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_and_order(a in (1usize..12).prop_flat_map(perm)) {
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        let lengths: Vec<u64> = a.cycles().iter().map(|c| c.len() as u64).collect();
        prop_assert_eq!(lengths.iter().fold(1, |x, &y| subdeg::perm::lcm(x, y)), a.order());
    }

    #[test]
    fn cycle_notation_round_trips(a in (1usize..12).prop_flat_map(perm)) {
        let text = a.to_string();
        prop_assert_eq!(parse_perm(&text, a.degree()).unwrap(), a);
    }

    #[test]
    fn orbit_stabilizer(g in group(), p in 0u32..8) {
        let p = p % g.degree() as u32;
        let orbit = g.orbit(p).len() as u128;
        prop_assert_eq!(orbit * g.point_stabilizer(p).order(), g.order());
    }

    #[test]
    fn generators_and_their_products_belong(g in group()) {
        for x in g.generators() {
            prop_assert!(g.contains(x).unwrap());
            for y in g.generators() {
                prop_assert!(g.contains(&(x * y)).unwrap());
            }
        }
    }

    #[test]
    fn group_order_is_multiple_of_element_orders(g in group()) {
        for x in g.generators() {
            prop_assert_eq!(g.order() % x.order() as u128, 0);
        }
    }

    #[test]
    fn subdegrees_partition_the_orbit(g in group()) {
        if g.is_transitive() {
            let r = subdegrees(&g, 0, false).unwrap();
            prop_assert_eq!(r.subdegrees.iter().sum::<u64>() as usize, g.degree());
            prop_assert_eq!(r.subdegrees[0], 1);
            for &s in &r.subdegrees {
                prop_assert_eq!(r.stabilizer_order % s as u128, 0);
            }
        }
    }

    #[test]
    fn group_file_round_trips(g in group()) {
        let text = write_perm_group(&g, true);
        let back = parse_perm_group_text(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.generators(), g.generators());
    }
}
