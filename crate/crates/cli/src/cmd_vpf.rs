use std::fs;

use chopcone::exact::IntMatrix;
use chopcone::vpf::{default_degree_bound, ray_scan, reduce_to_vpf, EbPair, EbPairFile, Ray, VpfProblem};

use crate::args::{matrix_arg, parse_vector, read_json, vector_of_len};
use crate::cmd_csc::load_cone;
use crate::error::CliError;
use crate::VpfCmd;

pub fn run(cmd: VpfCmd) -> Result<(), CliError> {
    match cmd {
        VpfCmd::Build { file, output } => {
            let c = load_cone(&file)?;
            let pair = reduce_to_vpf(&c)?;
            let text = serde_json::to_string_pretty(&EbPairFile::from(&pair))? + "\n";
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))?
                }
                None => print!("{text}"),
            }
            Ok(())
        }
        VpfCmd::Eval {
            e,
            y,
            pair,
            lambda,
            beta,
        } => {
            let n = match (e, pair) {
                (Some(e), _) => {
                    let rows = matrix_arg(&e)?;
                    let width = rows[0].len();
                    let problem = VpfProblem::new(IntMatrix::from_rows(&rows, width)?)?;
                    let y = y.ok_or_else(|| CliError::Parse("--E needs --y".into()))?;
                    problem.phi_i64(&vector_of_len("y", &y, rows.len())?)?
                }
                (None, Some(path)) => {
                    let f: EbPairFile = read_json(&path)?;
                    let pair = EbPair::try_from(f)?;
                    let (Some(lambda), Some(beta)) = (lambda, beta) else {
                        return Err(CliError::Parse("--pair needs --lambda and --beta".into()));
                    };
                    // The split of B's columns into lambda and beta parts is
                    // taken from the lengths given.
                    let (lambda, beta) = (parse_vector(&lambda)?, parse_vector(&beta)?);
                    if lambda.len() + beta.len() != pair.b.cols() {
                        return Err(CliError::Parse(format!(
                            "B has {} columns, got {} lambda and {} beta coordinates",
                            pair.b.cols(),
                            lambda.len(),
                            beta.len()
                        )));
                    }
                    pair.count(&lambda, &beta)?
                }
                (None, None) => return Err(CliError::Parse("give --E or --pair".into())),
            };
            println!("{n}");
            Ok(())
        }
        VpfCmd::Fit {
            file,
            base_lambda,
            dir_lambda,
            base_beta,
            dir_beta,
            tmax,
            period_max,
            degree,
        } => {
            let c = load_cone(&file)?;
            let (nl, nq) = (c.rank_lambda(), c.rank_q());
            let ray = Ray {
                base_lambda: vector_of_len("base-lambda", &base_lambda, nl)?,
                base_beta: vector_of_len("base-beta", &base_beta, nq)?,
                dir_lambda: vector_of_len("dir-lambda", &dir_lambda, nl)?,
                dir_beta: vector_of_len("dir-beta", &dir_beta, nq)?,
            };
            let degree_bound = degree.unwrap_or_else(|| default_degree_bound(&c));
            let qp = ray_scan(&c, &ray, tmax, period_max, Some(degree_bound))?;
            let mut value = serde_json::to_value(&qp)?;
            value["degree"] = qp.degree().into();
            println!("{}", serde_json::to_string_pretty(&value)?);
            Ok(())
        }
    }
}
