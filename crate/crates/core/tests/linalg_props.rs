use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;

use exactcat::instances::sampling::{random_unimodular, SampleRng};
use exactcat::linalg::{
    determinant, hnf, integer_kernel_basis, inverse, kernel_basis, left_kernel_basis, rank, rref, saturate, snf,
    solve_right, solve_right_int, IntMatrix, RatMatrix,
};

fn int_matrix(max_dim: usize, max_entry: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-max_entry..=max_entry, r * c).prop_map(move |d| IntMatrix::from_i64(r, c, &d))
    })
}

fn rat_matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec((-6i64..=6, 1i64..=3), r * c).prop_map(move |d| {
            let data = d.into_iter().map(|(n, q)| BigRational::new(n.into(), q.into())).collect();
            RatMatrix::new(r, c, data).unwrap()
        })
    })
}

fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    snf(a).invariant_factors()
}

fn all_units(a: &IntMatrix) -> bool {
    invariant_factors(a).iter().all(|d| d.is_one())
}

proptest! {
    #[test]
    fn rref_is_reduced_and_reproducible(a in rat_matrix(4)) {
        let r = rref(&a);
        prop_assert_eq!(&r.transform * &a, r.reduced.clone());
        prop_assert!(inverse(&r.transform).is_some());
        for (i, &p) in r.pivots.iter().enumerate() {
            prop_assert!(r.reduced.get(i, p).is_one());
            for k in 0..a.rows() {
                prop_assert!(k == i || r.reduced.get(k, p).is_zero());
            }
            prop_assert!((0..p).all(|c| r.reduced.get(i, c).is_zero()));
        }
        prop_assert!((r.pivots.len()..a.rows()).all(|i| r.reduced.row(i).iter().all(Zero::is_zero)));
        prop_assert_eq!(rref(&r.reduced).reduced, r.reduced);
    }

    #[test]
    fn rank_nullity(a in rat_matrix(4)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(rank(&a) + k.cols(), a.cols());
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(rank(&k), k.cols());
        let l = left_kernel_basis(&a);
        prop_assert_eq!(l.rows() + rank(&a), a.rows());
        prop_assert!((&l * &a).is_zero());
        prop_assert_eq!(rank(&a.transpose()), rank(&a));
    }

    #[test]
    fn solve_recovers_consistent_systems(a in rat_matrix(4), seed in any::<u64>()) {
        let x0 = RatMatrix::from_fn(a.cols(), 2, |i, j| BigRational::from_integer(BigInt::from((seed >> ((i * 2 + j) % 60)) as i64 % 5)));
        let b = &a * &x0;
        let sol = solve_right(&a, &b).expect("consistent system");
        prop_assert_eq!(&a * &sol.particular, b);
        prop_assert!((&a * &sol.kernel).is_zero());
    }

    #[test]
    fn solve_reports_inconsistency((a, b) in rat_matrix(4).prop_flat_map(|a| {
        let rows = a.rows();
        (Just(a), prop::collection::vec(-3i64..=3, rows * 2).prop_map(move |d| RatMatrix::from_i64(rows, 2, &d)))
    })) {
        match solve_right(&a, &b) {
            Some(sol) => prop_assert_eq!(&a * &sol.particular, b),
            // inconsistent: appending b raises the rank
            None => prop_assert!(rank(&a.hstack(&b).unwrap()) > rank(&a)),
        }
    }

    #[test]
    fn hermite_form_and_transform(a in int_matrix(4, 6)) {
        let h = hnf(&a);
        prop_assert_eq!(&a * &h.transform, h.hnf.clone());
        prop_assert!(determinant(&h.transform).abs().is_one());
        let r = h.rank();
        prop_assert_eq!(r, rank(&a.to_rational()));
        for (j, &row) in h.pivot_rows.iter().enumerate() {
            let p = h.hnf.get(row, j);
            prop_assert!(p > &BigInt::zero());
            for c in 0..j {
                let e = h.hnf.get(row, c);
                prop_assert!(e >= &BigInt::zero() && e < p);
            }
            prop_assert!((j + 1..a.cols()).all(|c| h.hnf.get(row, c).is_zero()));
            prop_assert!((0..row).all(|k| h.hnf.get(k, j).is_zero()));
        }
        prop_assert!((r..a.cols()).all(|c| h.hnf.column(c).iter().all(Zero::is_zero)));
    }

    #[test]
    fn smith_form_is_invariant_under_unimodular_change(a in int_matrix(4, 8), seed in any::<u64>()) {
        let mut rng = SampleRng::seed_from_u64(seed);
        let p = random_unimodular(&mut rng, a.rows(), 3);
        let q = random_unimodular(&mut rng, a.cols(), 3);
        let b = &(&p * &a) * &q;
        prop_assert_eq!(invariant_factors(&a), invariant_factors(&b));
        let s = snf(&b);
        prop_assert_eq!(&(&s.row_transform * &b) * &s.col_transform, s.diagonal);
    }

    #[test]
    fn integer_kernel_is_a_pure_basis(a in int_matrix(4, 6)) {
        let k = integer_kernel_basis(&a);
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(k.cols() + rank(&a.to_rational()), a.cols());
        prop_assert!(all_units(&k));
    }

    #[test]
    fn saturation_contains_and_is_pure(a in int_matrix(4, 6)) {
        prop_assume!(a.cols() <= a.rows() && rank(&a.to_rational()) == a.cols());
        let s = saturate(&a, a.rows()).unwrap();
        prop_assert_eq!(s.cols(), a.cols());
        prop_assert!(solve_right_int(&s, &a).is_some());
        prop_assert!(all_units(&s));
        prop_assert_eq!(saturate(&s, s.rows()).unwrap(), s);
    }

    #[test]
    fn json_round_trip(a in rat_matrix(4), b in int_matrix(4, 1_000_000)) {
        prop_assert_eq!(RatMatrix::from_json(&a.to_json()).unwrap(), a.clone());
        prop_assert_eq!(IntMatrix::from_json(&b.to_json()).unwrap(), b);
        let text = serde_json::to_string(&a.to_json()).unwrap();
        prop_assert_eq!(serde_json::to_string(&a.to_json()).unwrap(), text);
    }
}

#[test]
fn big_integers_serialize_as_strings() {
    let big = BigInt::from(i64::MAX) * BigInt::from(4);
    let m = IntMatrix::new(1, 1, vec![big.clone()]).unwrap();
    assert_eq!(m.to_json()["data"][0][0], serde_json::Value::String(big.to_string()));
    assert_eq!(IntMatrix::from_json(&m.to_json()).unwrap(), m);
    let half = RatMatrix::new(1, 1, vec![BigRational::new((-1).into(), 2.into())]).unwrap();
    assert_eq!(half.to_json()["data"][0][0], "-1/2");
}
