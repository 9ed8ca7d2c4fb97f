use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use charnum::catalog::{rank_of, CompactGroupExpr, GroupFactor};
use charnum::charclass::{pontrjagin_numbers, CharNumberTable, DualSpace};
use charnum::partitions::{partitions_of, sw_monomials_of, Partition};
use charnum::transfer::{gl_order, pullback_numbers};

/// Non-increasing compositions of `n`, found by walking all 2^(n-1) cut sets.
fn brute_partition_count(n: u32) -> usize {
    if n == 0 {
        return 1;
    }
    (0u32..1 << (n - 1))
        .filter(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts.windows(2).all(|w| w[0] >= w[1])
        })
        .count()
}

#[test]
fn partition_counts() {
    let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
    for (n, &count) in known.iter().enumerate() {
        assert_eq!(partitions_of(n as u32).len(), count, "p({n})");
        assert_eq!(brute_partition_count(n as u32), count, "brute p({n})");
    }
    for n in 10..=16 {
        assert_eq!(partitions_of(n).len(), brute_partition_count(n), "p({n})");
    }
}

#[test]
fn monomials_biject_with_partitions() {
    for dim in 0..=14 {
        let monomials = sw_monomials_of(dim);
        assert_eq!(monomials.len(), partitions_of(dim).len());
        let mut back: Vec<Partition> = monomials.iter().map(|m| m.to_partition()).collect();
        assert!(monomials.iter().all(|m| m.total_degree() == dim as u64));
        back.sort();
        back.dedup();
        assert_eq!(back.len(), monomials.len());
    }
}

fn binomial(n: i128, k: i128) -> i128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-4k coefficient of the total Pontrjagin class, from closed forms.
fn closed_form_class(space: DualSpace, k: i128) -> i128 {
    match space {
        DualSpace::Sphere(_) => i128::from(k == 0),
        DualSpace::ComplexProjective(n) => binomial(n as i128 + 1, k),
        DualSpace::QuaternionicProjective(n) => {
            (0..=k).map(|j| binomial(2 * n as i128 + 2, j) * (-4i128).pow((k - j) as u32)).sum()
        }
        DualSpace::CayleyPlane => [1, 0, 6, 0, 39].get(k as usize).copied().unwrap_or(0),
    }
}

/// Dense-product oracle: multiply the degree components as honest
/// polynomials in the generator and read off the fundamental class.
fn oracle_number(space: DualSpace, partition: &Partition) -> i128 {
    // generator slots per Pontrjagin degree, and the top slot
    let (per_part, top) = match space {
        DualSpace::Sphere(_) => return i128::from(partition.is_empty()),
        DualSpace::ComplexProjective(n) => (2, n as usize),
        DualSpace::QuaternionicProjective(n) => (1, n as usize),
        DualSpace::CayleyPlane => (2, 2),
    };
    let mut product = vec![0i128; top + 1];
    product[0] = 1;
    for &part in partition.parts() {
        let part = part as usize;
        let mut component = vec![0i128; top + 1];
        let slot = match space {
            DualSpace::CayleyPlane if part % 2 == 1 => None,
            DualSpace::CayleyPlane => Some(part / 2),
            _ => Some(per_part * part),
        };
        if let Some(slot) = slot.filter(|&s| s <= top) {
            component[slot] = closed_form_class(space, part as i128);
        }
        let mut next = vec![0i128; top + 1];
        for (i, a) in product.iter().enumerate() {
            for (j, b) in component.iter().enumerate() {
                if i + j <= top {
                    next[i + j] += a * b;
                }
            }
        }
        product = next;
    }
    product[top]
}

#[test]
fn pontrjagin_numbers_match_dense_oracle() {
    let mut spaces = vec![DualSpace::CayleyPlane];
    spaces.extend((1..=16).map(DualSpace::ComplexProjective));
    spaces.extend((1..=8).map(DualSpace::QuaternionicProjective));
    spaces.extend([4, 8, 12, 16, 20, 24, 28, 32].map(DualSpace::Sphere));
    for space in spaces {
        let table = pontrjagin_numbers(space);
        let dim = space.real_dimension();
        if dim % 4 != 0 {
            assert!(table.is_all_zero(), "{space}");
            continue;
        }
        assert_eq!(table.len(), partitions_of((dim / 4) as u32).len(), "{space}");
        for (index, value) in table.entries() {
            let partition: Partition = index.to_string().parse().unwrap();
            assert_eq!(*value, BigInt::from(oracle_number(space, &partition)), "{space} p_{partition}");
        }
    }
}

fn table_strategy() -> impl Strategy<Value = CharNumberTable> {
    (1u32..=4).prop_flat_map(|k| {
        let parts = partitions_of(k);
        prop::collection::vec(-1000i64..=1000, parts.len()).prop_map(move |values| {
            let entries: BTreeMap<Partition, BigInt> =
                parts.iter().cloned().zip(values.into_iter().map(BigInt::from)).collect();
            CharNumberTable::pontrjagin(4 * k as u64, entries).unwrap()
        })
    })
}

fn factor_strategy() -> impl Strategy<Value = GroupFactor> {
    prop_oneof![
        (1u32..8).prop_map(GroupFactor::SU),
        (1u32..10).prop_map(GroupFactor::SO),
        (1u32..6).prop_map(GroupFactor::Sp),
        (1u32..6).prop_map(GroupFactor::U),
        (1u32..5, 1u32..5).prop_map(|(p, q)| GroupFactor::SUpq(p, q)),
        Just(GroupFactor::Spin9),
        Just(GroupFactor::F4),
        (1u32..5).prop_map(GroupFactor::Torus),
    ]
}

proptest! {
    #[test]
    fn pullback_composes(table in table_strategy(), a in -50i64..=50, b in -50i64..=50) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let twice = pullback_numbers(&pullback_numbers(&table, &a), &b);
        prop_assert_eq!(twice, pullback_numbers(&table, &(&a * &b)));
        prop_assert_eq!(pullback_numbers(&table, &BigInt::from(1)), table);
    }

    #[test]
    fn gl_order_divisible_by_torus(n in 1u32..=8, q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 49])) {
        let order = gl_order(n, q).unwrap();
        let torus = BigUint::from(q - 1).pow(n);
        prop_assert!((&order % &torus).is_zero());
        let unipotent = BigUint::from(q).pow(n * (n - 1) / 2);
        prop_assert!((&order % &unipotent).is_zero());
    }

    #[test]
    fn rank_is_additive(a in prop::collection::vec(factor_strategy(), 0..4), b in prop::collection::vec(factor_strategy(), 0..4)) {
        let left = CompactGroupExpr::new(a.clone()).unwrap();
        let right = CompactGroupExpr::new(b.clone()).unwrap();
        let joined = CompactGroupExpr::new([a, b].concat()).unwrap();
        prop_assert_eq!(rank_of(&joined), rank_of(&left) + rank_of(&right));
        prop_assert_eq!(joined.weyl_order(), left.weyl_order() * right.weyl_order());
        prop_assert_eq!(joined.dimension(), left.dimension() + right.dimension());
    }
}
