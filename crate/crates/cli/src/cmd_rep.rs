use std::collections::BTreeMap;
use std::fs;

use chopcone::bz::{build_bz_csc, lr_coefficient, lr_table};
use chopcone::liealg::{
    freudenthal_with_cap, tensor_decompose_with_cap, weyl_dimension, CartanData, CartanFile, WeylWord,
};
use chopcone::littelmann::{build_csc, builtin_string_cone, demazure_table, prefix_table, StringConeSpec};
use serde_json::json;

use crate::args::{fmt_vector, read_json, vector_of_len};
use crate::cmd_csc::render_table;
use crate::error::CliError;
use crate::{AlgebraOpts, Format, GlobalOpts, RepCmd};

fn cartan(alg: &AlgebraOpts) -> Result<CartanData, CliError> {
    match (&alg.type_name, &alg.cartan) {
        (Some(t), _) => Ok(CartanData::from_type(t)?),
        (None, Some(path)) => {
            let f: CartanFile = read_json(path)?;
            Ok(CartanData::from_file(&f)?)
        }
        (None, None) => Err(CliError::Parse("give --type or --cartan".into())),
    }
}

fn word(cd: &CartanData, w: Option<&str>) -> Result<WeylWord, CliError> {
    match w {
        Some(s) => s
            .parse::<WeylWord>()
            .map_err(|e| CliError::Parse(format!("--word {s:?}: {e}"))),
        None => Ok(cd.longest_word()?),
    }
}

/// A user string cone file when given, the built-in cone otherwise.
fn string_cone(alg: &AlgebraOpts, w: Option<&str>, cone: Option<&std::path::Path>) -> Result<StringConeSpec, CliError> {
    if let Some(path) = cone {
        let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        return Ok(StringConeSpec::from_json(&text)?);
    }
    let cd = cartan(alg)?;
    let w = word(&cd, w)?;
    Ok(builtin_string_cone(&cd, &w)?)
}

fn subtract(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// First `β` where the two tables differ, with both values.
fn first_difference(
    got: &BTreeMap<Vec<i64>, u128>,
    expected: &BTreeMap<Vec<i64>, u128>,
) -> Option<(Vec<i64>, u128, u128)> {
    got.keys()
        .chain(expected.keys())
        .find(|b| got.get(*b) != expected.get(*b))
        .map(|b| {
            (
                b.clone(),
                got.get(b).copied().unwrap_or(0),
                expected.get(b).copied().unwrap_or(0),
            )
        })
}

fn check_tables(
    got: &BTreeMap<Vec<i64>, u128>,
    expected: &BTreeMap<Vec<i64>, u128>,
    oracle: &str,
    context: &str,
) -> Result<(), CliError> {
    match first_difference(got, expected) {
        None => {
            println!("check OK: {} entries agree with {oracle}", expected.len());
            Ok(())
        }
        Some((beta, g, e)) => Err(CliError::CheckMismatch(format!(
            "{context}, beta ({}): cone count {g}, {oracle} {e}",
            fmt_vector(&beta)
        ))),
    }
}

pub fn run(cmd: RepCmd, global: &GlobalOpts) -> Result<(), CliError> {
    let caps = global.caps();
    match cmd {
        RepCmd::Mult {
            alg,
            word,
            cone,
            lambda,
            beta,
            table,
            check,
            format,
        } => {
            let spec = string_cone(&alg, word.as_deref(), cone.as_deref())?;
            let cd = spec.cartan().clone();
            if !cd.is_longest(spec.word()) {
                return Err(CliError::Validation(format!(
                    "word {} is not a reduced word of the longest element; use `rep demazure`",
                    spec.word()
                )));
            }
            let lambda = vector_of_len("lambda", &lambda, cd.rank())?;
            cd.require_dominant(&lambda)?;
            let c = build_csc(&spec)?;
            let oracle = || -> Result<BTreeMap<Vec<i64>, u128>, CliError> {
                let ch = freudenthal_with_cap(&cd, &lambda, caps.module)?;
                Ok(ch
                    .iter()
                    .map(|(mu, m)| {
                        let beta = cd
                            .weight_to_root(&subtract(&lambda, mu))
                            .expect("weights lie in lambda - Q");
                        (beta, m as u128)
                    })
                    .collect())
            };
            let context = format!("lambda ({})", fmt_vector(&lambda));
            if table {
                let got = c.measure(&lambda)?.entries;
                print!("{}", render_table(&got, c.rank_q(), format));
                if check {
                    check_tables(&got, &oracle()?, "Freudenthal", &context)?;
                }
            } else {
                let beta = vector_of_len("beta", beta.as_deref().unwrap_or_default(), cd.rank())?;
                let n = c.slice_count(&lambda, &beta)?;
                println!("{n}");
                if check {
                    let expected = oracle()?.get(&beta).copied().unwrap_or(0);
                    if expected != n {
                        return Err(CliError::CheckMismatch(format!(
                            "{context}, beta ({}): cone count {n}, Freudenthal {expected}",
                            fmt_vector(&beta)
                        )));
                    }
                    println!("check OK: Freudenthal multiplicity {expected}");
                }
            }
            Ok(())
        }
        RepCmd::Demazure {
            alg,
            word,
            cone,
            lambda,
            prefix,
            check,
        } => {
            let spec = string_cone(&alg, word.as_deref(), cone.as_deref())?;
            let cd = spec.cartan().clone();
            let l = spec.word().len();
            let lambda = vector_of_len("lambda", &lambda, cd.rank())?;
            cd.require_dominant(&lambda)?;
            let prefixes: Vec<usize> = match prefix {
                Some(k) if k > l => return Err(CliError::Parse(format!("--prefix {k} exceeds word length {l}"))),
                Some(k) => vec![k],
                None => (0..=l).collect(),
            };
            let c = build_csc(&spec)?;
            let mut header: Vec<String> = vec!["prefix".into()];
            header.extend((1..=cd.rank()).map(|i| format!("b{i}")));
            header.push("count".into());
            println!("{}", header.join(","));
            let mut tables = Vec::new();
            for &k in &prefixes {
                let got = prefix_table(&c, k, &lambda)?;
                for (beta, n) in &got {
                    println!("{k},{},{n}", fmt_vector(beta));
                }
                tables.push((k, got));
            }
            if check {
                for (k, got) in &tables {
                    let expected: BTreeMap<Vec<i64>, u128> = demazure_table(&cd, &spec.word().prefix(*k), &lambda)?
                        .into_iter()
                        .map(|(b, m)| (b, m as u128))
                        .collect();
                    let context = format!("lambda ({}), prefix {k}", fmt_vector(&lambda));
                    if let Some((beta, g, e)) = first_difference(got, &expected) {
                        return Err(CliError::CheckMismatch(format!(
                            "{context}, beta ({}): cone count {g}, Demazure character {e}",
                            fmt_vector(&beta)
                        )));
                    }
                }
                println!(
                    "check OK: {} prefix tables agree with Demazure characters",
                    tables.len()
                );
            }
            Ok(())
        }
        RepCmd::Lr {
            alg,
            word: w,
            lambda,
            nu,
            beta,
            table,
            check,
        } => {
            let cd = cartan(&alg)?;
            let w = word(&cd, w.as_deref())?;
            let sys = build_bz_csc(&cd, &w)?;
            let lambda = vector_of_len("lambda", &lambda, cd.rank())?;
            let nu = vector_of_len("nu", &nu, cd.rank())?;
            cd.require_dominant(&lambda)?;
            cd.require_dominant(&nu)?;
            let oracle = || -> Result<BTreeMap<Vec<i64>, u128>, CliError> {
                Ok(tensor_decompose_with_cap(&cd, &lambda, &nu, caps)?
                    .into_iter()
                    .map(|(mu, m)| {
                        let shift: Vec<i64> = lambda.iter().zip(&nu).zip(&mu).map(|((a, b), c)| a + b - c).collect();
                        (
                            cd.weight_to_root(&shift).expect("constituents lie in lambda + nu - Q"),
                            m as u128,
                        )
                    })
                    .collect())
            };
            let context = format!("lambda ({}), nu ({})", fmt_vector(&lambda), fmt_vector(&nu));
            if table {
                let got = lr_table(&sys, &lambda, &nu)?;
                print!("{}", render_table(&got, cd.rank(), Format::Json));
                if check {
                    check_tables(&got, &oracle()?, "tensor decomposition", &context)?;
                }
            } else {
                let beta = vector_of_len("beta", beta.as_deref().unwrap_or_default(), cd.rank())?;
                let n = lr_coefficient(&sys, &lambda, &nu, &beta)?;
                println!("{}", json!({"beta": beta, "count": n}));
                if check {
                    let expected = oracle()?.get(&beta).copied().unwrap_or(0);
                    if expected != n {
                        return Err(CliError::CheckMismatch(format!(
                            "{context}, beta ({}): cone count {n}, tensor decomposition {expected}",
                            fmt_vector(&beta)
                        )));
                    }
                    println!("check OK: tensor decomposition multiplicity {expected}");
                }
            }
            Ok(())
        }
        RepCmd::Dim { alg, lambda } => {
            let cd = cartan(&alg)?;
            let lambda = vector_of_len("lambda", &lambda, cd.rank())?;
            println!("{}", weyl_dimension(&cd, &lambda)?);
            Ok(())
        }
    }
}
