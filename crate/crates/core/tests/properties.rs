use num_bigint::BigInt;
use proptest::prelude::*;

use z3hilb::dyson::{build, phi};
use z3hilb::insertion::{insert_f, split_f_inv};
use z3hilb::{BiSeries, Composition12, Partition, WeightKind};

fn partition_strategy(max_parts: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows).unwrap()
    })
}

fn series_strategy(qbound: u32) -> impl Strategy<Value = BiSeries> {
    prop::collection::vec((0..=qbound, 0..=qbound, -5i64..=5), 0..12)
        .prop_map(move |terms| BiSeries::from_terms(terms.into_iter().map(|(k, n, c)| (k, n, BigInt::from(c))), qbound))
}

proptest! {
    #[test]
    fn text_form_round_trips(lam in partition_strategy(12, 15)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn decomposition_round_trips(lam in partition_strategy(10, 12)) {
        let c = phi(&lam);
        prop_assert_eq!(c.total(), lam.size());
        prop_assert_eq!(c.count_twos(), lam.weight(WeightKind::WtTilde));
        prop_assert_eq!(c.to_string().parse::<Composition12>().unwrap(), c.clone());
        prop_assert_eq!(build(&c).unwrap(), lam);
    }

    #[test]
    fn split_then_insert_is_identity(lam in partition_strategy(20, 8)) {
        let (lp, ldp) = split_f_inv(&lam);
        prop_assert!(lp.in_lambda_prime());
        prop_assert!(ldp.in_lambda_double_prime());
        prop_assert_eq!(insert_f(&lp, &ldp).unwrap(), lam.clone());
        for kind in WeightKind::ALL {
            prop_assert_eq!(lam.weight(kind), lp.weight(kind) + ldp.weight(kind));
        }
    }

    #[test]
    fn boundary_steps_are_unit(lam in partition_strategy(12, 12)) {
        let labels = lam.boundary_sequence();
        prop_assert_eq!(labels.len() as u32, lam.num_cols() + lam.num_rows());
        prop_assert!(labels.windows(2).all(|w| w[0].abs_diff(w[1]) == 1));
    }

    #[test]
    fn series_product_is_commutative_and_associative(
        a in series_strategy(6), b in series_strategy(6), c in series_strategy(6)
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }
}
