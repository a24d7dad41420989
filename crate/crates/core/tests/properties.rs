use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use spingrass_core::dims::{dim, dim_gl, dim_so_even, so_even_determinant, weyl_dimension};
use spingrass_core::lie::character_multiset;
use spingrass_core::lr::{lr_coefficient, lr_product};
use spingrass_core::spinor::{decompose, project_spin_weights, projection_matrix, Case};
use spingrass_core::{AlgebraId, Partition, Weight};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(256)
}

/// A partition with at most `rows` parts, each at most `cols`.
fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, 0..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A dominant so(2k) weight in doubled coordinates, integral or half-integral.
fn so_even_weight(max_k: usize, max_entry: i64) -> impl Strategy<Value = Weight> {
    (1..=max_k, any::<bool>(), any::<bool>())
        .prop_flat_map(move |(k, half, neg)| {
            prop::collection::vec(0..=max_entry, k).prop_map(move |mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                let mut c2: Vec<i64> = v.iter().map(|x| 2 * x + i64::from(half)).collect();
                if neg {
                    *c2.last_mut().unwrap() *= -1;
                }
                Weight::from_doubled(c2, AlgebraId::so_even(k)).unwrap()
            })
        })
}

fn small_case() -> impl Strategy<Value = (usize, usize, Case)> {
    prop_oneof![
        Just((1, 1, Case::Even)),
        Just((2, 1, Case::Even)),
        Just((3, 1, Case::Even)),
        Just((2, 2, Case::Even)),
        Just((3, 2, Case::Even)),
        Just((1, 1, Case::Odd)),
        Just((2, 1, Case::Odd)),
        Just((1, 1, Case::Mixed)),
        Just((2, 1, Case::Mixed)),
        Just((1, 2, Case::Mixed)),
    ]
}

fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.get(i + 1) <= inner.get(i))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn conjugate_is_an_involution(l in 1usize..6, m in 1usize..6, seed in partition(6, 6)) {
        let lam = Partition::new(seed.parts().iter().map(|&p| p.min(m)).take(l).collect()).unwrap();
        let c = lam.conjugate_lm(l, m).unwrap();
        prop_assert_eq!(c.parts().len(), m);
        prop_assert_eq!(c.size() + lam.size(), l * m);
        prop_assert_eq!(c.conjugate_lm(m, l).unwrap(), lam);
    }

    #[test]
    fn transpose_is_an_involution(lam in partition(8, 8)) {
        let t = lam.transpose();
        prop_assert_eq!(t.size(), lam.size());
        prop_assert_eq!(t.transpose(), lam);
    }

    #[test]
    fn projected_multisets_are_weyl_invariant((k, l, case) in small_case()) {
        let a = projection_matrix(k, l, case).unwrap();
        let (plus, minus) = project_spin_weights(&a).unwrap();
        prop_assert_eq!(plus.total() + minus.total(), BigUint::from(1u32) << a.width());
        if case == Case::Odd {
            // only the full spin module restricts to the odd orthogonal factors
            let mut all = plus.clone();
            for (w, m) in minus.iter() {
                all.add(w.clone(), m.clone());
            }
            prop_assert!(all.is_weyl_invariant());
        } else {
            prop_assert!(plus.is_weyl_invariant());
            prop_assert!(minus.is_weyl_invariant());
        }
    }

    #[test]
    fn peel_stays_nonnegative((k, l, case) in small_case()) {
        let d = decompose(k, l, case).unwrap();
        prop_assert!(d.is_consistent());
        prop_assert!(d.summands.iter().all(|s| s.multiplicity > 0));
    }

    #[test]
    fn lr_is_symmetric(mu in partition(3, 3), nu in partition(3, 3)) {
        let a = lr_product(&mu, &nu);
        let b = lr_product(&nu, &mu);
        prop_assert_eq!(&a, &b);
        for (lam, c) in &a {
            prop_assert_eq!(lr_coefficient(&nu, &mu, lam), *c);
        }
    }

    #[test]
    fn lr_respects_gl_dimensions(mu in partition(3, 3), nu in partition(3, 3), n in 1usize..5) {
        let fits = |p: &Partition| p.len() <= n;
        prop_assume!(fits(&mu) && fits(&nu));
        let lhs = dim_gl(&mu, n).unwrap() * dim_gl(&nu, n).unwrap();
        let rhs: BigUint = lr_product(&mu, &nu)
            .iter()
            .filter(|(lam, _)| fits(lam))
            .map(|(lam, c)| dim_gl(lam, n).unwrap() * *c)
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pieri(mu in partition(4, 4), r in 0usize..5) {
        let row = if r == 0 { Partition::empty() } else { Partition::new(vec![r]).unwrap() };
        let prod = lr_product(&mu, &row);
        // brute force: every horizontal strip of size r
        let mut strips = BTreeMap::new();
        for lam in spingrass_core::partitions::partitions_of(mu.size() + r, mu.len() + 1, mu.first() + r) {
            if is_horizontal_strip(&lam, &mu) {
                strips.insert(lam, 1u64);
            }
        }
        prop_assert_eq!(prod, strips);
    }

    #[test]
    fn so_even_product_matches_determinant(w in so_even_weight(4, 3)) {
        let d = dim_so_even(&w).unwrap();
        prop_assert_eq!(&d, &weyl_dimension(&w).unwrap());
        if let Some(ints) = w.to_ints() {
            let det = so_even_determinant(&ints);
            let doubled = ints.last().is_some_and(|&x| x != 0);
            let want = if doubled { BigInt::from(d) * 2 } else { BigInt::from(d) };
            prop_assert_eq!(det, want);
        }
    }

    #[test]
    fn dimensions_are_integral(fam in 0usize..4, k in 1usize..5, lam in partition(4, 4), half in any::<bool>()) {
        let a = match fam {
            0 => AlgebraId::gl(k),
            1 => AlgebraId::so_even(k),
            2 => AlgebraId::so_odd(k),
            _ => AlgebraId::sp(k),
        };
        prop_assume!(lam.len() <= k);
        let p = lam.padded(k).unwrap();
        let half = half && a.allows_half_integers();
        let c2: Vec<i64> = p.iter().map(|&x| 2 * x as i64 + i64::from(half)).collect();
        let w = Weight::from_doubled(c2, a).unwrap();
        // dim() rejects any non-integral intermediate and cross-checks the closed forms
        let d = dim(&w).unwrap();
        prop_assert!(d >= BigUint::from(1u32));
        if d <= BigUint::from(400u32) {
            prop_assert_eq!(character_multiset(&w).unwrap().total(), d);
        }
    }
}
