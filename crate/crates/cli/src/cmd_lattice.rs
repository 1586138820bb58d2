use chopcone::exact::{cone_generators, positive_orthant_embedding, IntMatrix};
use num_bigint::BigInt;
use num_traits::Signed;

use crate::args::matrix_arg;
use crate::error::CliError;
use crate::LatticeCmd;

fn fmt_big(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(cmd: LatticeCmd) -> Result<(), CliError> {
    let LatticeCmd::Embed { normals } = cmd;
    let rows = matrix_arg(&normals)?;
    let normals = IntMatrix::from_rows(&rows, rows[0].len())?;
    let a = positive_orthant_embedding(&normals)?;
    println!("A:");
    for i in 0..a.rows() {
        println!("  [{}]", fmt_big(a.row(i)));
    }
    let det = a.det()?;
    println!("det A = {det}");
    let mut bad = Vec::new();
    for g in cone_generators(&normals) {
        let image = a.mul_vec(&g);
        let ok = image.iter().all(|x| !x.is_negative());
        println!(
            "generator ({}) -> ({}): {}",
            fmt_big(&g),
            fmt_big(&image),
            if ok { "OK" } else { "FAIL" }
        );
        if !ok {
            bad.push(fmt_big(&g));
        }
    }
    if det.abs() != BigInt::from(1) {
        return Err(CliError::CheckMismatch("A is not unimodular".into()));
    }
    if !bad.is_empty() {
        return Err(CliError::CheckMismatch(format!(
            "generators leave the orthant: {}",
            bad.join("; ")
        )));
    }
    Ok(())
}
