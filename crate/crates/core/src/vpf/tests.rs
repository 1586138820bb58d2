use super::*;
use crate::csc::box_cone;
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// Counts `x ≥ 0` with `E·x = y` by scanning `0 ≤ x_i ≤ bound`.
fn naive_phi(e: &[Vec<i64>], y: &[i64], bound: i64) -> u128 {
    let n = e[0].len();
    let mut count = 0;
    let mut x = vec![0i64; n];
    loop {
        if e.iter()
            .zip(y)
            .all(|(row, &yi)| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() == yi)
        {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            x[i] += 1;
            if x[i] <= bound {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn phi_examples() {
    let p = VpfProblem::new(m(&[&[1, 1]])).unwrap();
    assert_eq!(p.phi_i64(&[4]).unwrap(), 5);
    assert_eq!(p.phi_i64(&[0]).unwrap(), 1);
    assert_eq!(p.phi_i64(&[-1]).unwrap(), 0);
    let id = VpfProblem::new(IntMatrix::identity(2)).unwrap();
    assert_eq!(id.phi_i64(&[2, 3]).unwrap(), 1);
    let two = VpfProblem::new(m(&[&[1, 2]])).unwrap();
    assert_eq!(two.phi_i64(&[7]).unwrap(), 4);
    assert!(matches!(
        VpfProblem::new(m(&[&[1, -1]])),
        Err(VpfError::KernelConditionViolated { .. })
    ));
}

#[test]
fn box_cone_reduction_has_no_extra_rows() {
    let c = box_cone(2);
    let pair = reduce_to_vpf(&c).unwrap();
    assert_eq!(pair.embedding, IntMatrix::identity(2));
    assert_eq!(
        pair.problem.matrix(),
        &m(&[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 1, 0, 0]])
    );
    assert_eq!(pair.b, m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
    assert_eq!(reduction_sides(&pair, &c, &[2, 2], &[2]).unwrap(), (3, 3));
    assert_eq!(reduction_sides(&pair, &c, &[2, 2], &[7]).unwrap(), (0, 0));
}

#[test]
fn reduction_with_nontrivial_embedding() {
    // |y| ≤ x ≤ λ, sliced by y.
    let c = ChoppedSlicedCone::new(m(&[&[1, 0]]), m(&[&[0, 1]]), m(&[&[1, 1], &[1, -1]]), m(&[&[1]])).unwrap();
    let pair = reduce_to_vpf(&c).unwrap();
    assert_ne!(pair.embedding, IntMatrix::identity(2));
    for l in 0..5 {
        for b in -2..3 {
            let (lhs, rhs) = reduction_sides(&pair, &c, &[l], &[b]).unwrap();
            assert_eq!(lhs, rhs, "lambda {l}, beta {b}");
        }
    }
    assert_eq!(c.slice_count(&[4], &[1]).unwrap(), 4);
}

#[test]
fn non_pointed_cone_is_rejected() {
    let c = ChoppedSlicedCone::new(
        m(&[&[1, 0], &[-1, 0], &[0, 1]]),
        m(&[&[1, 0]]),
        m(&[&[0, 1]]),
        IntMatrix::identity(3),
    )
    .unwrap();
    assert!(matches!(
        reduce_to_vpf(&c),
        Err(VpfError::NotPointed { rank: 1, dim: 2 })
    ));
}

#[test]
fn eb_pair_json() {
    let pair = reduce_to_vpf(&box_cone(2)).unwrap();
    let json = serde_json::to_string(&EbPairFile::from(&pair)).unwrap();
    assert!(json.starts_with("{\"E\":[[1,0,1,0]"));
    let back = EbPair::try_from(serde_json::from_str::<EbPairFile>(&json).unwrap()).unwrap();
    assert_eq!(back, pair);
}

#[test]
fn fit_examples() {
    let qp = fit_quasipolynomial(|t| Ok(((t + 1) * (t + 2) / 2) as u128), 30, 3, 2).unwrap();
    assert_eq!(qp.period(), 1);
    assert_eq!(qp.classes()[0], vec![rat(1, 1), rat(3, 2), rat(1, 2)]);

    let qp = fit_quasipolynomial(|t| Ok((t / 2 + 1) as u128), 30, 3, 2).unwrap();
    assert_eq!(qp.period(), 2);
    assert_eq!(qp.degree(), 1);
    // Cross-check against Φ_[1 2].
    let two = VpfProblem::new(m(&[&[1, 2]])).unwrap();
    for t in 0..40 {
        assert_eq!(qp.eval(t), BigRational::from_integer(two.phi_i64(&[t]).unwrap().into()));
    }

    let qp = fit_quasipolynomial(|_| Ok(0), 20, 2, 1).unwrap();
    assert_eq!(qp.period(), 1);
    assert_eq!(qp.degree(), 0);
    assert!(qp.classes()[0].iter().all(|c| c.is_zero()));
}

#[test]
fn fit_failures() {
    // 2^t is not quasi-polynomial.
    let err = fit_quasipolynomial(|t| Ok(1u128 << t), 20, 2, 2).unwrap_err();
    match err {
        VpfError::NoFit { failure, .. } => assert!(failure.largest_window.unwrap() < 20),
        e => panic!("unexpected {e}"),
    }
    assert!(matches!(
        fit_quasipolynomial(|_| Ok(0), 5, 3, 2),
        Err(VpfError::WindowTooShort { needed: 14, .. })
    ));
    // Piecewise: a kink inside the window is detected.
    let err = fit_quasipolynomial(|t| Ok(t.min(10) as u128), 25, 2, 1).unwrap_err();
    assert!(matches!(err, VpfError::NoFit { .. }));
    assert!(
        err.to_string().contains("largest consistent window is t = 0..=10"),
        "{err}"
    );
}

#[test]
fn refitting_on_a_longer_window_is_stable() {
    let f = |t: i64| Ok(((t * t + 3 * t) / 2 + (t % 3)) as u128);
    let a = fit_quasipolynomial(f, 30, 3, 2).unwrap();
    let b = fit_quasipolynomial(f, 60, 3, 2).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.period(), 3);
}

#[test]
fn quasipolynomial_json() {
    let qp = QuasiPolynomial::new(vec![vec![rat(1, 1), rat(1, 2)], vec![rat(-3, 4), rat(0, 1)]]);
    let json = serde_json::to_string(&qp).unwrap();
    assert_eq!(
        json,
        r#"{"period":2,"classes":[{"residue":0,"coeffs":["1/1","1/2"]},{"residue":1,"coeffs":["-3/4","0/1"]}]}"#
    );
    assert_eq!(serde_json::from_str::<QuasiPolynomial>(&json).unwrap(), qp);
    let plain: QuasiPolynomial =
        serde_json::from_str(r#"{"period":1,"classes":[{"residue":0,"coeffs":["2","1/3"]}]}"#).unwrap();
    assert_eq!(plain.eval(3), rat(3, 1));
    assert!(serde_json::from_str::<QuasiPolynomial>(r#"{"period":2,"classes":[]}"#).is_err());
}

#[test]
fn ray_scan_examples() {
    let c = box_cone(2);
    let ray = Ray {
        base_lambda: vec![0, 0],
        base_beta: vec![0],
        dir_lambda: vec![1, 1],
        dir_beta: vec![1],
    };
    let qp = ray_scan(&c, &ray, 20, 6, None).unwrap();
    assert_eq!(qp.period(), 1);
    assert_eq!(qp.classes()[0], vec![rat(1, 1), rat(1, 1)]);

    let fixed = Ray {
        base_lambda: vec![2, 2],
        base_beta: vec![2],
        dir_lambda: vec![0, 0],
        dir_beta: vec![0],
    };
    let qp = ray_scan(&c, &fixed, 20, 6, None).unwrap();
    assert_eq!((qp.period(), qp.degree()), (1, 0));
    assert_eq!(qp.eval(0), rat(3, 1));
}

fn random_pointed_cone() -> impl Strategy<Value = ChoppedSlicedCone> {
    (1usize..=3).prop_flat_map(|k| {
        (
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), k..=k + 2),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), 1..=2),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), 1..=2),
        )
            .prop_filter_map("unbounded or not pointed", move |(r, p, q)| {
                let lt = p.len();
                let c = ChoppedSlicedCone::new(
                    IntMatrix::from_rows(&p, k).ok()?,
                    IntMatrix::from_rows(&q, k).ok()?,
                    IntMatrix::from_rows(&r, k).ok()?,
                    IntMatrix::identity(lt),
                )
                .ok()?;
                c.is_pointed().then_some(c)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phi_matches_box_scan(
        e in proptest::collection::vec(proptest::collection::vec(0i64..=3, 3), 1..=2),
        y in proptest::collection::vec(0i64..=6, 2),
    ) {
        // Columns must be nonzero for the fiber to be bounded.
        let mut e = e;
        for j in 0..3 {
            if e.iter().all(|row| row[j] == 0) {
                e[0][j] = 1;
            }
        }
        let y = &y[..e.len()];
        let p = VpfProblem::new(IntMatrix::from_rows(&e, 3).unwrap()).unwrap();
        prop_assert_eq!(p.phi_i64(y).unwrap(), naive_phi(&e, y, 6));
    }

    #[test]
    fn reduction_identity_on_random_cones(
        c in random_pointed_cone(),
        params in proptest::collection::vec((proptest::collection::vec(-1i64..=4, 2), proptest::collection::vec(-4i64..=4, 2)), 10),
    ) {
        let pair = reduce_to_vpf(&c).unwrap();
        prop_assert!(pair.embedding.is_unimodular());
        for (l, b) in params {
            let l = &l[..c.rank_lambda()];
            let b = &b[..c.rank_q()];
            let (lhs, rhs) = reduction_sides(&pair, &c, l, b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn embedding_preserves_slice_counts(c in random_pointed_cone(), l in 0i64..=4, b in -3i64..=3) {
        let pair = reduce_to_vpf(&c).unwrap();
        let lambda = vec![l; c.rank_lambda()];
        let beta = vec![b; c.rank_q()];
        let before = c.slice(&lambda, &beta).unwrap();
        let after = before.pullback(&pair.embedding.inverse_unimodular().unwrap()).unwrap();
        prop_assert_eq!(
            polyhedra::count_lattice_points(&before).unwrap(),
            polyhedra::count_lattice_points(&after).unwrap()
        );
    }
}
