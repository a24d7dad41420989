use num_bigint::BigInt;
use num_rational::BigRational;
use spingrass_core::dirac::*;
use spingrass_core::lr::branch_so_to_pair;
use spingrass_core::part;
use spingrass_core::spinor::{decompose, Case};
use spingrass_core::Partition;

fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn smallest_eigenvalue_routes() {
    let cases = [
        (2, 2, frac(3, 1)),
        (3, 2, frac(3 * 3 * 4 - 6, 6 * 4) + frac(3, 1)),
        (4, 2, frac(27, 5)),
        (3, 3, frac(2 * 19, 20) + frac(9, 2)),
    ];
    for (k, l, want) in cases {
        let m = min_eigenvalue_sq(&GrassmannEven::new(k, l).unwrap()).unwrap();
        assert!(!m.fallback, "({k},{l})");
        assert_eq!(m.via_decomposition.as_ref(), Some(&want));
        assert_eq!(m.value, want);
    }
}

#[test]
fn minimal_weights_are_the_argmin() {
    for (k, l) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
        let w = minimal_weights(&GrassmannEven::new(k, l).unwrap()).unwrap();
        assert_eq!(w.len(), 1 << l);
    }
    let w = minimal_weights(&GrassmannEven::new(4, 2).unwrap()).unwrap();
    let expect = [
        (part![2, 2, 2, 1], part![1, 0]),
        (part![2, 2, 2, 0], part![1, 1]),
        (part![2, 2, 1, 1], part![2, 0]),
        (part![2, 2, 1, 0], part![2, 1]),
    ];
    for e in &expect {
        assert!(w.contains(e), "{e:?}");
    }
}

#[test]
fn norm_identity_over_decompositions() {
    for (k, l) in [(2usize, 2usize), (3, 2), (4, 2), (3, 3)] {
        let d = decompose(k, l, Case::Even).unwrap();
        let (ki, li) = (k as i64, l as i64);
        for s in &d.summands {
            let nu = s.nu.as_ref().unwrap();
            let norm4 = s.mu.dot4(&s.mu) + nu.dot4(nu);
            let lam: Vec<i64> = nu.to_ints().unwrap().iter().map(|x| x.abs()).collect();
            // 12‖β‖² = 12kℓ² + 3Σ(2(λ_j−ℓ+j)−1)² − 3ℓ − 4ℓ(ℓ²−1)
            let sq: i64 = (1..=li)
                .map(|j| {
                    let t = 2 * (lam[(j - 1) as usize] - li + j) - 1;
                    t * t
                })
                .sum();
            let twelve = 12 * ki * li * li + 3 * sq - 3 * li - 4 * li * (li * li - 1);
            assert_eq!(3 * norm4, twelve, "({k},{l}) {s}");
        }
    }
}

#[test]
fn spectrum_table_g44() {
    let s = GrassmannEven::new(2, 2).unwrap();
    let spec = enumerate_spectrum(&s, 60, Some(2)).unwrap();
    let got: Vec<(Partition, i64)> = spec.iter().map(|e| (e.lambda.clone(), e.casimir_eucl)).collect();
    let want = vec![
        (part![2, 1, 1], 24),
        (part![2, 2], 28),
        (part![3, 1], 32),
        (part![2, 2, 1, 1], 32),
        (part![3, 1, 1, 1], 36),
        (part![2, 2, 2], 36),
        (part![3, 2, 1], 42),
        (part![4, 1, 1], 48),
        (part![3, 3], 48),
        (part![4, 2], 52),
        (part![5, 1], 60),
    ];
    assert_eq!(got, want);
    assert_eq!(spec[0].eigenvalue_sq, frac(3, 1));
    assert!(enumerate_spectrum(&s, 23, None).unwrap().is_empty());
}

#[test]
fn uncapped_spectrum_has_more_terms() {
    let s = GrassmannEven::new(2, 2).unwrap();
    let spec = enumerate_spectrum(&s, 60, None).unwrap();
    let lams: Vec<_> = spec.iter().map(|e| e.lambda.clone()).collect();
    assert!(lams.contains(&part![2, 2, 2, 2]));
    assert!(lams.contains(&part![3, 3, 1, 1]));
    assert!(lams.contains(&part![4, 2, 1, 1]));
    assert_eq!(spec.iter().filter(|e| e.casimir_eucl == 24).count(), 1);
}

#[test]
fn spectrum_grows_monotonically() {
    let s = GrassmannEven::new(3, 2).unwrap();
    let small = enumerate_spectrum(&s, 70, None).unwrap();
    let big = enumerate_spectrum(&s, 90, None).unwrap();
    assert_eq!(&big[..small.len()], &small[..]);
    assert!(big[small.len()..].iter().all(|e| e.casimir_eucl > 70));
}

#[test]
fn witnesses_agree_with_branching() {
    let s = GrassmannEven::new(2, 2).unwrap();
    let mut checked = 0;
    for e in enumerate_spectrum(&s, 60, None).unwrap() {
        let Ok(br) = branch_so_to_pair(&e.lambda, 2, 2) else {
            continue;
        };
        for w in &e.witnesses {
            let mc = w.mu.conjugate_lm(2, 2).unwrap().trimmed();
            assert!(br.contains_key(&(w.mu.trimmed(), mc)), "{} via {:?}", e.lambda, w);
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn smallest_contribution_matches_spectrum_minimum() {
    let s = GrassmannEven::new(2, 2).unwrap();
    let lam0 = smallest_contribution(&s).unwrap();
    assert_eq!(lam0.lambda, part![2, 1, 1, 0]);
    assert_eq!(lam0.casimir_eucl, 24);
    let spec = enumerate_spectrum(&s, 30, None).unwrap();
    assert_eq!(spec[0].lambda, lam0.lambda);
    let m = min_eigenvalue_sq(&s).unwrap();
    assert_eq!(lam0.eigenvalue_sq, m.value);
}

#[test]
fn l2_table_rows() {
    for k in 4..=7 {
        let rows = l2_table(k).unwrap();
        assert_eq!(rows.len(), 8);
        let ki = k as i64;
        assert_eq!(rows[1].casimir_eucl, 2 * ki * ki + 14 * ki + 4);
    }
    assert!(l2_table(3).is_err());
}
