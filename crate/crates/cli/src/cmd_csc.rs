use std::collections::BTreeMap;
use std::path::Path;

use chopcone::csc::{ChoppedSlicedCone, ConeFile, TestFunction};
use serde_json::json;

use crate::args::{fmt_vector, parse_vector, read_json, vector_of_len};
use crate::error::CliError;
use crate::{CscCmd, Format};

/// Reads a cone file and rejects cones with unbounded chops.
pub fn load_cone(path: &Path) -> Result<ChoppedSlicedCone, CliError> {
    let file: ConeFile = read_json(path)?;
    Ok(file.to_cone()?)
}

pub fn run(cmd: CscCmd) -> Result<(), CliError> {
    match cmd {
        CscCmd::Validate { file } => {
            let f: ConeFile = read_json(&file)?;
            let c = f.to_cone_unchecked()?;
            match c.recession_witness() {
                None => {
                    println!("bounded");
                    Ok(())
                }
                Some(w) => {
                    let w: Vec<String> = w.iter().map(ToString::to_string).collect();
                    println!("unbounded: recession ray ({}) has r x >= 0 and p x <= 0", w.join(","));
                    Err(CliError::Validation("chops are not bounded".into()))
                }
            }
        }
        CscCmd::Count { file, lambda, beta } => {
            let c = load_cone(&file)?;
            let lambda = vector_of_len("lambda", &lambda, c.rank_lambda())?;
            let n = match beta {
                Some(b) => c.slice_count(&lambda, &vector_of_len("beta", &b, c.rank_q())?)?,
                None => c.chop_count(&lambda)?,
            };
            println!("{n}");
            Ok(())
        }
        CscCmd::Measure { file, lambda, format } => {
            let c = load_cone(&file)?;
            let lambda = vector_of_len("lambda", &lambda, c.rank_lambda())?;
            let table = c.measure(&lambda)?;
            print!("{}", render_table(&table.entries, c.rank_q(), format));
            Ok(())
        }
        CscCmd::Converge {
            file,
            lambda,
            f,
            n,
            seed,
            samples,
        } => {
            let c = load_cone(&file)?;
            let lambda = vector_of_len("lambda", &lambda, c.rank_lambda())?;
            let tf: TestFunction = f.parse()?;
            let ns = parse_vector(&n)?
                .into_iter()
                .map(|x| u64::try_from(x).ok().filter(|&x| x > 0))
                .collect::<Option<Vec<u64>>>()
                .ok_or_else(|| CliError::Parse(format!("--n needs positive integers, got {n:?}")))?;
            let report = c.convergence_report(&lambda, &tf, &ns, samples, seed)?;
            print!("{}", report.to_csv());
            Ok(())
        }
    }
}

/// `β ↦ count` as CSV (`b1,...,bk,count`) or as a JSON list of
/// `{"beta", "count"}` objects.
pub fn render_table(entries: &BTreeMap<Vec<i64>, u128>, rank: usize, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out: Vec<String> = (1..=rank).map(|i| format!("b{i}")).collect();
            out.push("count".into());
            let mut s = out.join(",") + "\n";
            for (beta, n) in entries {
                s.push_str(&format!("{},{n}\n", fmt_vector(beta)));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = entries
                .iter()
                .map(|(beta, n)| json!({"beta": beta, "count": n}))
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
        }
    }
}
