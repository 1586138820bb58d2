use super::*;
use crate::liealg::{freudenthal, weyl_dimension};

fn cd(t: &str) -> CartanData {
    CartanData::from_type(t).unwrap()
}

fn w(letters: &[usize]) -> WeylWord {
    WeylWord(letters.to_vec())
}

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

#[test]
fn chopping_rows_follow_the_cartan_entries() {
    let (p, s) = chopping_rows(&cd("A1"), &w(&[1])).unwrap();
    assert_eq!((p, s), (m(&[&[1]]), m(&[&[1]])));

    let (p, s) = chopping_rows(&cd("A2"), &w(&[1, 2, 1])).unwrap();
    assert_eq!(p, m(&[&[1, -1, 2], &[0, 1, -1], &[0, 0, 1]]));
    assert_eq!(s, m(&[&[1, 0], &[0, 1], &[1, 0]]));
    // Row 1 substituted by hand: a1 - a2 + 2 a3 ≤ λ1.
    let a = [3i64, 1, 2];
    let lhs: i64 = p.to_i64_rows().unwrap()[0].iter().zip(a).map(|(x, y)| x * y).sum();
    assert_eq!(lhs, 3 - 1 + 4);

    let (p, _) = chopping_rows(&cd("B2"), &w(&[1, 2, 1, 2])).unwrap();
    assert_eq!(p, m(&[&[1, -1, 2, -1], &[0, 1, -2, 2], &[0, 0, 1, -1], &[0, 0, 0, 1]]));
    assert!(matches!(
        chopping_rows(&cd("A2"), &w(&[1, 1])),
        Err(LittelmannError::Lie(LieError::NotReduced(_)))
    ));
}

#[test]
fn weight_map_columns() {
    assert_eq!(weight_map_rows(&cd("A2"), &w(&[1, 2, 1])), m(&[&[1, 0, 1], &[0, 1, 0]]));
    assert_eq!(weight_map_rows(&cd("A1"), &w(&[1])), m(&[&[1]]));
    let q = weight_map_rows(&cd("B2"), &w(&[2, 1, 2, 1]));
    let sums: Vec<i64> = q.to_i64_rows().unwrap().iter().map(|r| r.iter().sum()).collect();
    assert_eq!(sums, vec![2, 2]);
}

#[test]
fn a1_slices_are_weight_strings() {
    let spec = builtin_string_cone(&cd("A1"), &w(&[1])).unwrap();
    let c = build_csc(&spec).unwrap();
    for mm in 0..6 {
        for k in -2..8 {
            let expected = u128::from((0..=mm).contains(&k));
            assert_eq!(c.slice_count(&[mm], &[k]).unwrap(), expected);
        }
    }
}

#[test]
fn a2_examples() {
    let a2 = cd("A2");
    let spec = builtin_string_cone(&a2, &w(&[1, 2, 1])).unwrap();
    let c = build_csc(&spec).unwrap();
    assert!(c.validate());
    assert_eq!(c.measure(&[1, 1]).unwrap().total(), 8);
    assert_eq!(c.chop_count(&[0, 0]).unwrap(), 1);
    assert_eq!(demazure_multiplicity(&spec, 3, &[1, 1], &[1, 1]).unwrap(), 2);
    assert_eq!(demazure_multiplicity(&spec, 1, &[1, 1], &[1, 0]).unwrap(), 1);
    for beta in [[0, 0], [1, 0], [0, 1], [1, 1]] {
        let expected = u128::from(beta == [0, 0]);
        assert_eq!(demazure_multiplicity(&spec, 0, &[2, 1], &beta).unwrap(), expected);
    }
    assert!(matches!(
        demazure_multiplicity(&spec, 4, &[1, 1], &[0, 0]),
        Err(LittelmannError::DimensionMismatch(_))
    ));
}

#[test]
fn unsupported_types_and_words() {
    assert!(matches!(
        builtin_string_cone(&cd("G2"), &w(&[1, 2, 1, 2, 1, 2])),
        Err(LittelmannError::UnsupportedTypeWord { .. })
    ));
    assert!(matches!(
        builtin_string_cone(&cd("A3"), &w(&[1, 2, 1, 3, 2, 1])),
        Err(LittelmannError::UnsupportedTypeWord { .. })
    ));
    assert!(matches!(
        builtin_string_cone(&cd("A2"), &w(&[1, 2])),
        Err(LittelmannError::UnsupportedTypeWord { .. })
    ));
}

#[test]
fn every_builtin_table_is_valid_and_matches_freudenthal() {
    let cases: &[(&str, &[usize])] = &[
        ("A1", &[1]),
        ("A2", &[1, 2, 1]),
        ("A2", &[2, 1, 2]),
        ("B2", &[1, 2, 1, 2]),
        ("B2", &[2, 1, 2, 1]),
        ("C2", &[1, 2, 1, 2]),
        ("C2", &[2, 1, 2, 1]),
        ("A1xA1", &[1, 2]),
        ("A1xA1", &[2, 1]),
    ];
    for (t, word) in cases {
        let c = cd(t);
        let spec = builtin_string_cone(&c, &w(word)).unwrap();
        let csc = build_csc(&spec).unwrap();
        for lambda in dominant_weights_up_to(c.rank(), 4) {
            let table = csc.measure(&lambda).unwrap();
            assert_eq!(
                table.total(),
                weyl_dimension(&c, &lambda).unwrap(),
                "{t} {word:?} {lambda:?}"
            );
            let full = freudenthal(&c, &lambda).unwrap();
            for (mu, mult) in full.iter() {
                let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
                let beta = c.weight_to_root(&diff).unwrap();
                assert_eq!(table.get(&beta), mult as u128);
            }
        }
    }
}

#[test]
fn wrong_table_is_rejected_by_the_grid() {
    // Dropping the a2 ≥ a3 row admits extra points.
    let bad = StringConeFile {
        type_name: "A2".into(),
        word: vec![1, 2, 1],
        rows: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    };
    let err = StringConeSpec::from_file(&bad).unwrap_err();
    assert!(matches!(err, LittelmannError::ValidationFailed { .. }), "{err}");

    // Not pointed.
    let flat = StringConeFile {
        type_name: "A2".into(),
        word: vec![1, 2, 1],
        rows: vec![vec![1, 0, 0], vec![0, 1, -1]],
    };
    assert!(matches!(
        StringConeSpec::from_file(&flat),
        Err(LittelmannError::NotPointed { rank: 2, expected: 3 })
    ));
}

#[test]
fn user_file_round_trip() {
    let json = r#"{"type":"A2","word":[2,1,2],"rows":[[1,0,0],[0,1,-1],[0,0,1]]}"#;
    let spec = StringConeSpec::from_json(json).unwrap();
    assert_eq!(spec.provenance(), Provenance::UserSupplied);
    assert_eq!(serde_json::to_string(&spec.to_file()).unwrap(), json);
    assert!(matches!(StringConeSpec::from_json("{"), Err(LittelmannError::Parse(_))));
}

#[test]
fn dominant_grid() {
    assert_eq!(dominant_weights_up_to(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    assert_eq!(dominant_weights_up_to(2, 6).len(), 28);
    assert_eq!(dominant_weights_up_to(3, 4).len(), 35);
}
