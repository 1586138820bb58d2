use super::*;
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn validate_examples() {
    assert!(box_cone(2).validate());

    let half = ChoppedSlicedCone::unchecked(m(&[&[1, 0]]), m(&[&[1, 1]]), IntMatrix::identity(2), m(&[&[1]])).unwrap();
    assert!(!half.validate());
    assert_eq!(
        half.recession_witness().unwrap(),
        vec![BigInt::from(0), BigInt::from(1)]
    );
    assert!(matches!(
        ChoppedSlicedCone::new(m(&[&[1, 0]]), m(&[&[1, 1]]), IntMatrix::identity(2), m(&[&[1]])),
        Err(CscError::NotBounded { .. })
    ));

    let point = ChoppedSlicedCone::unchecked(
        IntMatrix::zeros(0, 2),
        m(&[&[1, 1]]),
        m(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]),
        IntMatrix::zeros(0, 1),
    )
    .unwrap();
    assert!(point.validate());
    assert_eq!(point.chop_count(&[5]).unwrap(), 1);

    assert!(matches!(
        ChoppedSlicedCone::unchecked(m(&[&[1, 0, 0]]), m(&[&[1, 1]]), IntMatrix::identity(2), m(&[&[1]])),
        Err(CscError::DimensionMismatch(_))
    ));
}

#[test]
fn chop_and_slice_examples() {
    let c = box_cone(2);
    assert_eq!(c.chop_count(&[0, 0]).unwrap(), 1);
    assert_eq!(c.chop_count(&[3, 3]).unwrap(), 16);
    assert_eq!(c.chop_count(&[-1, -1]).unwrap(), 0);
    assert_eq!(c.slice_count(&[2, 2], &[2]).unwrap(), 3);
    assert_eq!(c.slice_count(&[2, 2], &[0]).unwrap(), 1);
    assert_eq!(c.slice_count(&[2, 2], &[9]).unwrap(), 0);
    assert!(matches!(c.slice_count(&[2], &[2]), Err(CscError::DimensionMismatch(_))));
}

#[test]
fn measure_examples() {
    let c = box_cone(2);
    let t = c.measure(&[2, 2]).unwrap();
    let expect: BTreeMap<Vec<i64>, u128> = [(0, 1), (1, 2), (2, 3), (3, 2), (4, 1)]
        .iter()
        .map(|&(b, n)| (vec![b], n))
        .collect();
    assert_eq!(t.entries, expect);
    assert_eq!(t.total(), 9);
    assert_eq!(
        c.measure(&[0, 0]).unwrap().entries,
        [(vec![0], 1)].into_iter().collect()
    );
    assert!(c.measure(&[-1, 0]).unwrap().entries.is_empty());

    assert_eq!(TestFunction::Proj(1).pair(&t).unwrap(), PairingValue::Exact(rat(18, 1)));
    assert_eq!(TestFunction::Const.pair(&t).unwrap(), PairingValue::Exact(rat(9, 1)));
    let empty = c.measure(&[-1, -1]).unwrap();
    assert_eq!(
        TestFunction::Sq(1).pair(&empty).unwrap(),
        PairingValue::Exact(rat(0, 1))
    );
}

#[test]
fn scaled_measure_examples() {
    let c = box_cone(2);
    let one = c.scaled_measure(&[2, 2], 1).unwrap();
    let t = c.measure(&[2, 2]).unwrap();
    for (beta, count) in &t.entries {
        let key = RatVector::from_ints(beta);
        assert_eq!(one.atoms[&key], rat(*count as i64, 1));
    }
    assert_eq!(c.scaled_measure(&[1, 1], 2).unwrap().total_mass(), rat(9, 4));
    for n in 1..=8u64 {
        let mass = c.scaled_measure(&[1, 1], n).unwrap().total_mass();
        let n = n as i64;
        assert_eq!(mass, rat((n + 1) * (n + 1), n * n));
    }
}

#[test]
fn test_function_parsing() {
    assert_eq!("const".parse::<TestFunction>().unwrap(), TestFunction::Const);
    assert_eq!("proj1".parse::<TestFunction>().unwrap(), TestFunction::Proj(1));
    assert_eq!("proj_2".parse::<TestFunction>().unwrap(), TestFunction::Proj(2));
    assert_eq!("sq_1".parse::<TestFunction>().unwrap(), TestFunction::Sq(1));
    assert_eq!(
        "bump(1,0.5;0.25)".parse::<TestFunction>().unwrap(),
        TestFunction::Bump {
            center: vec![1.0, 0.5],
            radius: 0.25
        }
    );
    for bad in ["cosine", "proj0", "sq", "bump(1;0)", "bump(1)"] {
        assert!(
            matches!(bad.parse::<TestFunction>(), Err(CscError::UnknownTestFunction(_))),
            "{bad}"
        );
    }
}

#[test]
fn bump_vanishes_outside_its_ball() {
    let f = TestFunction::Bump {
        center: vec![0.0],
        radius: 1.0,
    };
    assert_eq!(f.eval_f64(&[1.5]), 0.0);
    assert!((f.eval_f64(&[0.0]) - 1.0).abs() < 1e-12);
}

#[test]
fn monte_carlo_limit_examples() {
    let c = box_cone(2);
    let est = c
        .limit_pairing_estimate(&[1, 1], &TestFunction::Const, 20_000, 7)
        .unwrap();
    assert!((est.estimate - 1.0).abs() <= 3.0 * est.stderr + 1e-12);
    let est = c
        .limit_pairing_estimate(&[1, 1], &TestFunction::Proj(1), 20_000, 7)
        .unwrap();
    assert!((est.estimate - 1.0).abs() <= 3.0 * est.stderr, "{est:?}");

    // A triangle inside its box: ∫∫_{x,y≥0, x+y≤1} (x+y) = 1/3.
    let tri = ChoppedSlicedCone::new(m(&[&[1, 1]]), m(&[&[1, 1]]), IntMatrix::identity(2), m(&[&[1]])).unwrap();
    let est = tri
        .limit_pairing_estimate(&[1], &TestFunction::Proj(1), 40_000, 3)
        .unwrap();
    assert!((est.estimate - 1.0 / 3.0).abs() <= 4.0 * est.stderr, "{est:?}");
    assert!(est.accepted < est.draws);

    // Empty and degenerate chops have no volume.
    assert_eq!(
        c.limit_pairing_estimate(&[-1, -1], &TestFunction::Const, 100, 1)
            .unwrap()
            .estimate,
        0.0
    );
    assert_eq!(
        c.limit_pairing_estimate(&[0, 0], &TestFunction::Const, 100, 1)
            .unwrap()
            .estimate,
        0.0
    );

    let flat_q = ChoppedSlicedCone::new(
        IntMatrix::identity(2),
        m(&[&[1, 1], &[2, 2]]),
        IntMatrix::identity(2),
        IntMatrix::identity(2),
    )
    .unwrap();
    assert!(matches!(
        flat_q.limit_pairing_estimate(&[1, 1], &TestFunction::Const, 10, 1),
        Err(CscError::RankDeficientQ { rank: 1, expected: 2 })
    ));
    assert!(matches!(
        c.limit_pairing_estimate(&[1, 1], &TestFunction::Proj(2), 10, 1),
        Err(CscError::TestFunctionOutOfRange { .. })
    ));
}

#[test]
fn convergence_report_shape() {
    let c = box_cone(2);
    let r = c
        .convergence_report(&[1, 1], &TestFunction::Const, &[1, 2, 4, 8], 10_000, 7)
        .unwrap();
    let pairings: Vec<BigRational> = r.rows.iter().map(|row| row.pairing.exact().unwrap().clone()).collect();
    assert_eq!(pairings, vec![rat(4, 1), rat(9, 4), rat(25, 16), rat(81, 64)]);
    assert!(r.rows.windows(2).all(|w| w[1].abs_deviation < w[0].abs_deviation));
    let csv = r.to_csv();
    assert!(csv.starts_with("n,pairing,limit_estimate,stderr,abs_deviation\n1,4/1,"));

    let single = c
        .convergence_report(&[1, 1], &TestFunction::Const, &[1], 100, 1)
        .unwrap();
    assert_eq!(single.rows.len(), 1);
    assert_eq!(single.rows[0].pairing, PairingValue::Exact(rat(4, 1)));

    let empty = c
        .convergence_report(&[-1, -1], &TestFunction::Const, &[1, 2], 100, 1)
        .unwrap();
    assert_eq!(empty.limit.estimate, 0.0);
    assert!(empty.rows.iter().all(|r| r.pairing == PairingValue::Exact(rat(0, 1))));
}

#[test]
fn sig6_formatting() {
    assert_eq!(fmt_sig6(1.0), "1.00000");
    assert_eq!(fmt_sig6(0.00123456789), "0.00123457");
    assert_eq!(fmt_sig6(1234.56789), "1234.57");
    assert_eq!(fmt_sig6(0.0), "0");
}

#[test]
fn cone_file_round_trip() {
    let c = box_cone(2);
    let f = ConeFile::from_cone(&c);
    let json = serde_json::to_string(&f).unwrap();
    assert!(json.contains("\"LambdaTilde\":2"));
    let back: ConeFile = serde_json::from_str(&json).unwrap();
    assert_eq!(back.to_cone().unwrap(), c);

    let mut bad = f.clone();
    bad.ranks.q = 2;
    assert!(matches!(bad.to_cone(), Err(CscError::DimensionMismatch(_))));
}

/// Random cone with `r` the identity plus extra rows, so `C` lies in the
/// orthant, and a random chopping map.
fn random_cone() -> impl Strategy<Value = ChoppedSlicedCone> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(k, lt)| {
        (
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), lt),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), 0..=2),
            proptest::collection::vec(-2i64..=2, k),
        )
            .prop_map(move |(p, extra_r, q)| {
                let mut r: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
                r.extend(extra_r);
                let nr = r.len();
                ChoppedSlicedCone::unchecked(
                    IntMatrix::from_rows(&p, k).unwrap(),
                    IntMatrix::from_rows(&[q], k).unwrap(),
                    IntMatrix::from_rows(&r, k).unwrap(),
                    IntMatrix::identity(lt),
                )
                .map(|c| {
                    assert_eq!(c.rank_r(), nr);
                    c
                })
                .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validated_cones_have_bounded_chops(
        c in random_cone(),
        lambdas in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 50),
    ) {
        prop_assume!(c.validate());
        for l in lambdas {
            let l = &l[..c.rank_lambda()];
            prop_assert!(polyhedra::is_bounded(&c.chop(l).unwrap()));
        }
    }

    #[test]
    fn slices_partition_the_chop(c in random_cone(), l in proptest::collection::vec(0i64..=4, 3)) {
        prop_assume!(c.validate());
        let l = &l[..c.rank_lambda()];
        let table = c.measure(l).unwrap();
        prop_assert_eq!(table.total(), c.chop_count(l).unwrap());
        for (beta, &n) in &table.entries {
            prop_assert!(n > 0);
            prop_assert_eq!(c.slice_count(l, beta).unwrap(), n);
        }
        let one = c.scaled_measure(l, 1).unwrap();
        prop_assert_eq!(one.atoms.len(), table.entries.len());
        for (beta, &n) in &table.entries {
            prop_assert_eq!(&one.atoms[&RatVector::from_ints(beta)], &BigRational::from_integer(BigInt::from(n)));
        }
    }
}
