use std::sync::Arc;

use proptest::prelude::*;

use subdeg::gf::{Field, Mat, MatGroup};
use subdeg::perm::OrbitOptions;

const ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

fn field() -> impl Strategy<Value = Arc<Field>> {
    prop::sample::select(&ORDERS[..]).prop_map(|q| Arc::new(Field::from_order(q).unwrap()))
}

fn matrices(f: Arc<Field>, n: usize, count: usize) -> impl Strategy<Value = Vec<Mat>> {
    let q = f.order();
    prop::collection::vec(prop::collection::vec(0..q, n * n), count)
        .prop_map(move |ms| ms.into_iter().map(|d| Mat::new(&f, n, n, d).unwrap()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((f, a, b, c) in field().prop_flat_map(|f| { let q = f.order(); (Just(f), 0..q, 0..q, 0..q) })) {
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        } else {
            prop_assert!(f.inv(a).is_err());
        }
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }

    #[test]
    fn elements_print_and_parse(f in field()) {
        for a in f.elements() {
            prop_assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
    }

    #[test]
    fn invertible_matrices_have_inverses((f, ms) in field().prop_flat_map(|f| (Just(f.clone()), matrices(f, 3, 2)))) {
        let (a, b) = (&ms[0], &ms[1]);
        if a.det() != 0 {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_identity());
        } else {
            prop_assert!(a.inverse().is_err());
        }
        prop_assert_eq!(f.mul(a.det(), b.det()), a.mul(b).det());
    }

    #[test]
    fn vector_orbits_partition_the_space((f, ms) in field().prop_flat_map(|f| (Just(f.clone()), matrices(f, 2, 2)))) {
        if ms.iter().all(|m| m.det() != 0) {
            let g = MatGroup::new(&f, 2, ms).unwrap();
            let space = g.space_action().unwrap();
            let lengths: Vec<u128> = space.orbits().iter().map(|o| o.len() as u128).collect();
            prop_assert_eq!(lengths.iter().sum::<u128>(), (f.order() as u128).pow(2));
            for l in &lengths {
                prop_assert_eq!(g.order() % l, 0);
            }
            let v = vec![1, 0];
            let len = g.vec_orbit(&v, OrbitOptions::length_only()).unwrap().length as u128;
            prop_assert_eq!(len * g.vec_stabilizer_order(&v).unwrap(), g.order());
        }
    }
}
