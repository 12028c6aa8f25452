use kas3::algebra::{fold_enumerator, gf_p_nullspace, gf_p_rank, weight_enumerator, BinaryCode, Polynomial};
use kas3::{Error, Exec};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Binomial expansion of `(1 - x)^w (1 + x)^(n - w)` as coefficients.
fn macwilliams_kernel(n: usize, w: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(1)];
    let mul = |c: &[BigInt], s: i64| {
        let mut out = vec![BigInt::from(0); c.len() + 1];
        for (i, v) in c.iter().enumerate() {
            out[i] += v;
            out[i + 1] += v * s;
        }
        out
    };
    for _ in 0..w {
        c = mul(&c, -1);
    }
    for _ in w..n {
        c = mul(&c, 1);
    }
    c
}

fn full_rank_rows(n: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0u8..=1, n), 1..=n.min(5)).prop_filter("full rank", move |rows| {
        let m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&b| b as u64).collect()).collect();
        gf_p_rank(&m, n, 2).unwrap() == rows.len()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumerator_shape_and_macwilliams(rows in (2usize..=7).prop_flat_map(full_rank_rows)) {
        let n = rows[0].len();
        let k = rows.len();
        let code = BinaryCode::new(n, rows).unwrap();
        let w = weight_enumerator(&code, Exec::Sequential).unwrap();
        prop_assert_eq!(w.coeff(0), BigInt::from(1));
        prop_assert_eq!(w.eval_one(), BigInt::from(1u64 << k));
        prop_assert_eq!(&w, &weight_enumerator(&code, Exec::Parallel).unwrap());
        let mut transformed = vec![BigInt::from(0); n + 1];
        for (wt, a) in w.terms() {
            for (i, c) in macwilliams_kernel(n, wt as usize).into_iter().enumerate() {
                transformed[i] += a * c;
            }
        }
        let scale = BigInt::from(1u64 << k);
        let dual_from_transform = Polynomial::from_terms(
            transformed.into_iter().enumerate().map(|(i, c)| (i as u64, c / &scale)),
        );
        if k < n {
            let dual = weight_enumerator(&code.dual().unwrap(), Exec::Sequential).unwrap();
            prop_assert_eq!(dual, dual_from_transform);
        } else {
            prop_assert_eq!(dual_from_transform, Polynomial::from(1));
        }
    }

    #[test]
    fn nullspace_basis(rows in prop::collection::vec(prop::collection::vec(0u64..5, 6), 1..5), p in prop::sample::select(vec![2u64, 3, 5])) {
        let m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
        let basis = gf_p_nullspace(&m, 6, p).unwrap();
        for v in &basis {
            for r in &m {
                prop_assert_eq!(r.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p, 0);
            }
        }
        prop_assert_eq!(gf_p_rank(&basis, 6, p).unwrap(), basis.len());
        prop_assert_eq!(basis.len(), 6 - gf_p_rank(&m, 6, p).unwrap());
    }

    #[test]
    fn fold_preserves_the_total(exps in prop::collection::vec(0u64..40, 1..6), e in 1u64..10) {
        let p = Polynomial::from_terms(exps.iter().map(|&x| (x * 2 * e + 2 * (x % e), BigInt::from(x + 1))));
        let f = fold_enumerator(&p, 2 * e).unwrap();
        prop_assert_eq!(f.eval_one(), p.eval_one());
    }
}

#[test]
fn even_weight_code() {
    let code = BinaryCode::new(3, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
    assert_eq!(weight_enumerator(&code, Exec::Sequential).unwrap().to_string(), "1 + 3*x^2");
}

#[test]
fn fold_examples() {
    let p: Polynomial = "1 + x^6".parse().unwrap();
    assert_eq!(fold_enumerator(&p, 4).unwrap().to_string(), "1 + x^1");
    let odd: Polynomial = "1 + x^5".parse().unwrap();
    assert!(matches!(fold_enumerator(&odd, 4), Err(Error::OddResidue { .. })));
}
