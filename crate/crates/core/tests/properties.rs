use ncl_core::partitions::{
    enumerate_nc, enumerate_ncl, enumerate_ncls, kreweras, leq, validate_nc, validate_ncl,
    NcPartition, NclPartition,
};
use ncl_core::rational::{frac, pow, Rational};
use ncl_core::transforms::{
    cumulants_to_moments, free_multiplicative, moments_to_cumulants, moments_to_tcoeffs,
    tcoeffs_to_moments, CumulantSequence, MomentSequence, TCoeffSequence,
};
use ncl_core::trees::{
    self, enumerate_bicolor, enumerate_planar_trees, BicolorPlanarTree, PlanarTree,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7).prop_map(|(p, q)| frac(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != frac(0, 1))
}

fn moments(max: usize) -> impl Strategy<Value = MomentSequence> {
    (nonzero(), prop::collection::vec(rational(), 0..max))
        .prop_map(|(m1, rest)| MomentSequence::new(std::iter::once(m1).chain(rest).collect()))
}

fn ncl_member() -> impl Strategy<Value = NclPartition> {
    (1usize..=6, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = enumerate_ncl(n).unwrap();
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn partition_json_roundtrip(p in ncl_member()) {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<NclPartition>(&s).unwrap(), p);
    }

    #[test]
    fn validation_is_order_insensitive(p in ncl_member(), seed in any::<u64>()) {
        let mut blocks = p.to_raw().blocks;
        let k = blocks.len();
        blocks.rotate_left((seed as usize) % k);
        for b in blocks.iter_mut() {
            b.reverse();
        }
        prop_assert_eq!(validate_ncl(p.n(), &blocks).unwrap(), p);
    }

    #[test]
    fn moment_cumulant_roundtrip(m in moments(8)) {
        prop_assert_eq!(cumulants_to_moments(&moments_to_cumulants(&m)), m);
    }

    #[test]
    fn moment_t_roundtrip(m in moments(8)) {
        let t = moments_to_tcoeffs(&m).unwrap();
        prop_assert_eq!(tcoeffs_to_moments(&t).unwrap(), m);
    }

    #[test]
    fn series_json_roundtrip(m in moments(6)) {
        let t = moments_to_tcoeffs(&m).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<TCoeffSequence>(&s).unwrap(), t);
    }

    #[test]
    fn homogeneity(m in moments(6), c in nonzero()) {
        let scaled = MomentSequence::new(
            m.values().iter().enumerate().map(|(i, v)| v * pow(&c, i + 1)).collect(),
        );
        let (k, ks) = (moments_to_cumulants(&m), moments_to_cumulants(&scaled));
        let (t, ts) = (moments_to_tcoeffs(&m).unwrap(), moments_to_tcoeffs(&scaled).unwrap());
        for n in 1..=m.order() {
            prop_assert_eq!(ks.kappa(n), &(k.kappa(n) * pow(&c, n)));
            prop_assert_eq!(ts.t(n - 1), &(t.t(n - 1) * &c));
        }
    }

    #[test]
    fn product_cumulants_commute(
        x in prop::collection::vec(rational(), 5),
        y in prop::collection::vec(rational(), 5),
    ) {
        let (x, y) = (CumulantSequence::new(x), CumulantSequence::new(y));
        for n in 1..=5 {
            prop_assert_eq!(free_multiplicative(&x, &y, n).unwrap(), free_multiplicative(&y, &x, n).unwrap());
        }
    }
}

#[test]
fn order_relation_is_a_partial_order() {
    for n in 1..=4 {
        let all = enumerate_ncl(n).unwrap();
        for a in &all {
            assert!(leq(a, a).unwrap());
            assert!(leq(&NclPartition::zero(n), a).unwrap());
            for b in &all {
                if a != b && leq(a, b).unwrap() {
                    assert!(!leq(b, a).unwrap(), "{a} {b}");
                }
                for c in &all {
                    if leq(a, b).unwrap() && leq(b, c).unwrap() {
                        assert!(leq(a, c).unwrap(), "{a} {b} {c}");
                    }
                }
            }
        }
    }
    assert!(leq(&NclPartition::zero(2), &NclPartition::zero(3)).is_err());
}

#[test]
fn linked_partitions_reduce_to_components() {
    // pi <= c(pi) and the components are the least partition above pi
    for n in 1..=5 {
        for p in enumerate_ncl(n).unwrap() {
            let c = p.connected_components();
            assert!(leq(&p, &c.to_ncl()).unwrap(), "{p}");
            assert_eq!(c.to_ncl().connected_components(), c);
        }
    }
}

#[test]
fn kreweras_is_an_anti_automorphism() {
    for n in 1..=7 {
        let all = enumerate_nc(n).unwrap();
        for g in &all {
            // applying it twice rotates the points by one
            let kk = kreweras(&kreweras(g));
            let rotated: Vec<Vec<usize>> = g
                .to_raw()
                .blocks
                .iter()
                .map(|b| b.iter().map(|&x| if x == 1 { n } else { x - 1 }).collect())
                .collect();
            assert_eq!(kk, validate_nc(n, &rotated).unwrap(), "{g}");
        }
        assert_eq!(kreweras(&NcPartition::zero(n)), NcPartition::one(n));
    }
}

#[test]
fn tree_json_roundtrip() {
    for n in 1..=6 {
        for t in enumerate_planar_trees(n).unwrap() {
            let s = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<PlanarTree>(&s).unwrap(), t);
            assert!(serde_json::from_str::<BicolorPlanarTree>(&s).is_err() || n == 1);
        }
        for t in enumerate_bicolor(n.min(5)).unwrap() {
            let s = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<BicolorPlanarTree>(&s).unwrap(), t);
        }
    }
}

#[test]
fn lambda_color_counts_track_block_parity() {
    for n in 1..=5 {
        for p in enumerate_ncls(n).unwrap() {
            let b = trees::lambda(&p).unwrap();
            let (ones, zeros) = b
                .vertex_profile()
                .iter()
                .fold((0, 0), |(o, z), &(a, c)| (o + a, z + c));
            let odd: usize = p
                .blocks()
                .iter()
                .filter(|b| b.first() % 2 == 1)
                .map(|b| b.len() - 1)
                .sum();
            let even: usize = p
                .blocks()
                .iter()
                .filter(|b| b.first() % 2 == 0)
                .map(|b| b.len() - 1)
                .sum();
            assert_eq!((ones, zeros), (odd, even), "{p}");
        }
    }
}

#[test]
fn unlinked_members_alternate_colors() {
    use ncl_core::trees::Color;
    fn alternates(t: &BicolorPlanarTree, incoming: Option<Color>) -> bool {
        t.children().iter().all(|(c, child)| {
            incoming.is_none_or(|i| *c == i.flip()) && alternates(child, Some(*c))
        })
    }
    for n in 1..=5 {
        for p in enumerate_ncls(n).unwrap() {
            let b = trees::lambda(&p).unwrap();
            assert_eq!(p.as_nc().is_some(), alternates(&b, None), "{p}");
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(validate_nc(4, &[vec![1, 3], vec![2, 4]]).is_err());
    assert!(validate_ncl(3, &[vec![1, 2], vec![1, 3]]).is_err());
    assert!(validate_ncl(4, &[vec![1, 2, 3], vec![2, 3, 4]]).is_err());
    assert!(validate_ncl(0, &[]).is_err());
    assert!(serde_json::from_str::<NclPartition>(r#"{"n":3,"blocks":[[1,3],[2]]}"#).is_ok());
    assert!(serde_json::from_str::<NcPartition>(r#"{"n":3,"blocks":[[1,2],[2,3]]}"#).is_err());
}
