//! Property tests over randomly shaped sets and relations.

use proptest::prelude::*;

use nmrel::{cartesian_square, doc, MultiValue, NeutroTriple, NmRelation, NmSet};

fn triple_strategy() -> impl Strategy<Value = NeutroTriple> {
    // coarse grids so min/max collisions happen often
    (
        prop::sample::select(vec![0.0, 0.25, 0.3, 0.5, 0.75, 1.0]),
        prop::sample::select(vec![0.0, 0.25, 0.5, 0.75, 1.0]),
        prop::sample::select(vec![0.0, 0.25, 0.5, 0.75, 1.0]),
    )
        .prop_map(|(t, i, f)| NeutroTriple::new(t, i, f).unwrap())
}

fn value_strategy(dimension: usize) -> impl Strategy<Value = MultiValue> {
    prop::collection::vec(triple_strategy(), dimension)
        .prop_map(|triples| MultiValue::new(triples).unwrap())
}

fn universe(size: usize) -> Vec<String> {
    (0..size).map(|k| format!("e{k}")).collect()
}

fn set_strategy() -> impl Strategy<Value = NmSet> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(size, dimension)| {
        prop::collection::vec(value_strategy(dimension), size)
            .prop_map(move |values| NmSet::new(universe(size).into_iter().zip(values)).unwrap())
    })
}

/// A square relation over `size` elements; roughly a third of the pairs are
/// left absent.
fn shaped_relation(size: usize, dimension: usize) -> impl Strategy<Value = NmRelation> {
    let pair_keys: Vec<(String, String)> = universe(size)
        .into_iter()
        .flat_map(|x| universe(size).into_iter().map(move |y| (x.clone(), y)))
        .collect();
    let n = pair_keys.len();
    prop::collection::vec(prop::option::of(value_strategy(dimension)), n).prop_map(move |values| {
        let pairs: Vec<_> = pair_keys
            .iter()
            .cloned()
            .zip(values)
            .filter_map(|(key, value)| value.map(|v| (key, v)))
            .collect();
        NmRelation::new(universe(size), universe(size), dimension, pairs).unwrap()
    })
}

fn relation_strategy() -> impl Strategy<Value = NmRelation> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(size, dimension)| shaped_relation(size, dimension))
}

fn relation_pair() -> impl Strategy<Value = (NmRelation, NmRelation)> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(size, dimension)| {
        (shaped_relation(size, dimension), shaped_relation(size, dimension))
    })
}

fn relation_triple() -> impl Strategy<Value = (NmRelation, NmRelation, NmRelation)> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(size, dimension)| {
        (
            shaped_relation(size, dimension),
            shaped_relation(size, dimension),
            shaped_relation(size, dimension),
        )
    })
}

proptest! {
    #[test]
    fn inverse_is_involution(r in relation_strategy()) {
        prop_assert_eq!(r.inverse().inverse(), r);
    }

    #[test]
    fn composition_inverse_distributes((r, s) in relation_pair()) {
        let lhs = s.compose(&r).unwrap().inverse();
        let rhs = r.inverse().compose(&s.inverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_iff_equal_to_inverse(r in relation_strategy()) {
        prop_assert_eq!(r.is_symmetric().unwrap(), r.nm_equal(&r.inverse()).unwrap());
    }

    #[test]
    fn compose_is_associative((r, s, t) in relation_triple()) {
        let left = t.compose(&s.compose(&r).unwrap()).unwrap();
        let right = t.compose(&s).unwrap().compose(&r).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn closure_contains_and_is_transitive(r in relation_strategy()) {
        let closure = r.transitive_closure().unwrap();
        prop_assert!(r.is_subset_of(&closure).unwrap());
        prop_assert!(closure.is_transitive().unwrap());
        prop_assert_eq!(closure.transitive_closure().unwrap(), closure);
    }

    #[test]
    fn relation_lattice_sandwich((r, s) in relation_pair()) {
        let meet = r.intersection(&s).unwrap();
        let join = r.union(&s).unwrap();
        prop_assert!(meet.is_subset_of(&r).unwrap());
        prop_assert!(r.is_subset_of(&join).unwrap());
        prop_assert_eq!(r.union(&s).unwrap(), s.union(&r).unwrap());
    }

    #[test]
    fn cartesian_square_symmetric(a in set_strategy()) {
        prop_assert!(cartesian_square(&a).unwrap().is_symmetric().unwrap());
    }

    #[test]
    fn set_document_round_trips(a in set_strategy()) {
        let text = doc::serialize_set(&a);
        let parsed = doc::parse(&text).unwrap().into_set().unwrap();
        prop_assert_eq!(&parsed, &a);
        prop_assert_eq!(doc::serialize_set(&parsed), text);
    }

    #[test]
    fn relation_document_round_trips(r in relation_strategy()) {
        let text = doc::serialize_relation(&r);
        let parsed = doc::parse(&text).unwrap().into_relation().unwrap();
        prop_assert_eq!(&parsed, &r);
        prop_assert_eq!(doc::serialize_relation(&parsed), text);
    }
}
