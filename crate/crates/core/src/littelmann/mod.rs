//! String cones along reduced words, turned into chopped and sliced cones
//! whose slice counts are Demazure weight multiplicities.
//!
//! Coordinates `a = (a_1, …, a_l)` are the exponents of
//! `f_{i_1}^{a_1} ⋯ f_{i_l}^{a_l}` applied to the highest weight vector; the
//! point has weight `λ - Σ a_j α_{i_j}`, so slices are taken at
//! `β = Σ a_j α_{i_j}` in simple-root coordinates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::csc::{ChoppedSlicedCone, CscError};
use crate::exact::{IntMatrix, RatVector};
use crate::liealg::{demazure_character, CartanData, LieError, WeylWord};
use crate::polyhedra::{self, PolyhedraError};

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum LittelmannError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Csc(#[from] CscError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error("no built-in string cone for type {cartan} and word {word}")]
    UnsupportedTypeWord { cartan: String, word: WeylWord },
    #[error("string cone rows have rank {rank}, expected {expected}: the cone is not pointed")]
    NotPointed { rank: usize, expected: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(
        "string cone disagrees with the Demazure character at lambda {lambda:?}, prefix {prefix}, \
         beta {beta:?}: cone count {cone}, character {oracle}"
    )]
    ValidationFailed {
        lambda: Vec<i64>,
        prefix: usize,
        beta: Vec<i64>,
        cone: u128,
        oracle: i64,
    },
    #[error("invalid string cone file: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Builtin,
    UserSupplied,
}

/// Inequalities `rows·a ≥ 0` cutting out the string cone of a reduced word.
#[derive(Clone, Debug, PartialEq)]
pub struct StringConeSpec {
    cd: CartanData,
    word: WeylWord,
    rows: IntMatrix,
    provenance: Provenance,
}

/// JSON form `{"type": "A2", "word": [1,2,1], "rows": [[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringConeFile {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: Vec<usize>,
    pub rows: Vec<Vec<i64>>,
}

impl StringConeSpec {
    /// Checks that the word is reduced and the cone pointed. No oracle
    /// validation; see [`StringConeSpec::validate_on_grid`].
    pub fn new(
        cd: CartanData,
        word: WeylWord,
        rows: IntMatrix,
        provenance: Provenance,
    ) -> Result<Self, LittelmannError> {
        cd.require_reduced(&word)?;
        let l = word.len();
        if rows.cols() != l {
            return Err(LittelmannError::DimensionMismatch(format!(
                "rows have {} columns, word has length {l}",
                rows.cols()
            )));
        }
        let rank = rows.rank();
        if rank != l {
            return Err(LittelmannError::NotPointed { rank, expected: l });
        }
        Ok(Self {
            cd,
            word,
            rows,
            provenance,
        })
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn rows(&self) -> &IntMatrix {
        &self.rows
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Loads a user file and validates it on the default grid.
    pub fn from_file(f: &StringConeFile) -> Result<Self, LittelmannError> {
        let cd = CartanData::from_type(&f.type_name)?;
        let word = WeylWord(f.word.clone());
        cd.check_word(&word)?;
        let rows = IntMatrix::from_rows(&f.rows, f.word.len()).map_err(|e| LittelmannError::Parse(e.to_string()))?;
        let spec = Self::new(cd, word, rows, Provenance::UserSupplied)?;
        spec.validate_on_grid(default_grid_sum(spec.cd.rank()))?;
        Ok(spec)
    }

    pub fn from_json(s: &str) -> Result<Self, LittelmannError> {
        let f: StringConeFile = serde_json::from_str(s).map_err(|e| LittelmannError::Parse(e.to_string()))?;
        Self::from_file(&f)
    }

    pub fn to_file(&self) -> StringConeFile {
        StringConeFile {
            type_name: self.cd.type_tag().unwrap_or("").to_string(),
            word: self.word.0.clone(),
            rows: self.rows.to_i64_rows().expect("small entries"),
        }
    }

    /// Compares every prefix table with the Demazure character for all
    /// dominant `λ` with coordinate sum at most `max_sum`. Both supports
    /// must agree, so spurious lattice points are caught too.
    pub fn validate_on_grid(&self, max_sum: i64) -> Result<(), LittelmannError> {
        let c = build_csc(self)?;
        for lambda in dominant_weights_up_to(self.cd.rank(), max_sum) {
            for prefix in 0..=self.word.len() {
                self.check_prefix(&c, prefix, &lambda)?;
            }
        }
        Ok(())
    }

    fn check_prefix(&self, c: &ChoppedSlicedCone, prefix: usize, lambda: &[i64]) -> Result<(), LittelmannError> {
        let cone = prefix_table(c, prefix, lambda)?;
        let oracle = demazure_table(&self.cd, &self.word.prefix(prefix), lambda)?;
        let keys: std::collections::BTreeSet<&Vec<i64>> = cone.keys().chain(oracle.keys()).collect();
        for beta in keys {
            let a = cone.get(beta).copied().unwrap_or(0);
            let b = oracle.get(beta).copied().unwrap_or(0);
            if a as i128 != b as i128 {
                return Err(LittelmannError::ValidationFailed {
                    lambda: lambda.to_vec(),
                    prefix,
                    beta: beta.clone(),
                    cone: a,
                    oracle: b,
                });
            }
        }
        Ok(())
    }
}

/// Coordinate-sum bound of the validation grid by rank.
pub fn default_grid_sum(rank: usize) -> i64 {
    match rank {
        0..=2 => 6,
        3 => 4,
        _ => 2,
    }
}

/// Dominant weights of the given rank with coordinate sum at most `max_sum`.
pub fn dominant_weights_up_to(rank: usize, max_sum: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max_sum - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    out
}

/// `(P, S)`: row `j` of `P·a ≤ S·λ` reads
/// `a_j + Σ_{k>j} a_{i_j i_k} a_k ≤ λ_{i_j}`.
pub fn chopping_rows(cd: &CartanData, word: &WeylWord) -> Result<(IntMatrix, IntMatrix), LittelmannError> {
    cd.require_reduced(word)?;
    let l = word.len();
    let n = cd.rank();
    let idx: Vec<usize> = word.indices().collect();
    let mut p = vec![vec![0i64; l]; l];
    let mut s = vec![vec![0i64; n]; l];
    for j in 0..l {
        p[j][j] = 1;
        for k in j + 1..l {
            p[j][k] = cd.entry(idx[j], idx[k]);
        }
        s[j][idx[j]] = 1;
    }
    Ok((
        IntMatrix::from_rows(&p, l).expect("square"),
        IntMatrix::from_rows(&s, n).expect("shape"),
    ))
}

/// `n × l` matrix whose column `j` is `α_{i_j}` in simple-root coordinates.
pub fn weight_map_rows(cd: &CartanData, word: &WeylWord) -> IntMatrix {
    let n = cd.rank();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| word.indices().map(|k| i64::from(k == i)).collect())
        .collect();
    IntMatrix::from_rows(&rows, word.len()).expect("shape")
}

/// `K = Z^l`, `Λ = P`, `Q` the root lattice, `r` the string cone rows, the
/// chop from [`chopping_rows`] and `q` from [`weight_map_rows`].
pub fn build_csc(spec: &StringConeSpec) -> Result<ChoppedSlicedCone, LittelmannError> {
    let (p, s) = chopping_rows(&spec.cd, &spec.word)?;
    let q = weight_map_rows(&spec.cd, &spec.word);
    Ok(ChoppedSlicedCone::new(p, q, spec.rows.clone(), s)?)
}

/// `dim V_w(λ)_{λ-β}` for `w` the prefix of the given length, counted as
/// lattice points of the slice with `a_k = 0` beyond the prefix.
pub fn demazure_multiplicity(
    spec: &StringConeSpec,
    prefix_length: usize,
    lambda: &[i64],
    beta: &[i64],
) -> Result<u128, LittelmannError> {
    check_prefix_args(spec, prefix_length, lambda)?;
    let c = build_csc(spec)?;
    let mut sys = c.slice(lambda, beta)?;
    zero_trailing(&mut sys, prefix_length)?;
    Ok(polyhedra::count_lattice_points(&sys)?)
}

/// Slice counts for every `β` of the prefix-restricted chop.
pub fn demazure_table(
    cd: &CartanData,
    word: &WeylWord,
    lambda: &[i64],
) -> Result<BTreeMap<Vec<i64>, i64>, LittelmannError> {
    let ch = demazure_character(cd, word, lambda)?;
    let mut out = BTreeMap::new();
    for (mu, m) in ch.iter() {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        let beta = cd.weight_to_root(&diff).expect("Demazure weights lie in λ - Q");
        out.insert(beta, m);
    }
    Ok(out)
}

/// `β ↦ |{a ∈ C^λ ∩ K : a_k = 0 for k ≥ prefix, q(a) = β}|`.
pub fn prefix_table(
    c: &ChoppedSlicedCone,
    prefix: usize,
    lambda: &[i64],
) -> Result<BTreeMap<Vec<i64>, u128>, LittelmannError> {
    let mut sys = c.chop(lambda)?;
    zero_trailing(&mut sys, prefix)?;
    let pts = polyhedra::enumerate_lattice_points(&sys)?;
    let q = c.q().to_i64_rows().expect("0/1 entries");
    let mut out = BTreeMap::new();
    for x in &pts.points {
        let beta: Vec<i64> = q
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect();
        *out.entry(beta).or_insert(0) += 1;
    }
    Ok(out)
}

/// The built-in string cone for a supported type and word, validated
/// against the Demazure character on the default grid.
pub fn builtin_string_cone(cd: &CartanData, word: &WeylWord) -> Result<StringConeSpec, LittelmannError> {
    let spec = builtin_unchecked(cd, word)?;
    spec.validate_on_grid(default_grid_sum(cd.rank()))?;
    Ok(spec)
}

/// Table lookup without the oracle check.
pub fn builtin_unchecked(cd: &CartanData, word: &WeylWord) -> Result<StringConeSpec, LittelmannError> {
    let unsupported = || LittelmannError::UnsupportedTypeWord {
        cartan: cd
            .type_tag()
            .map_or_else(|| format!("{:?}", cd.matrix()), str::to_string),
        word: word.clone(),
    };
    let is = |t: &str| CartanData::from_type(t).is_ok_and(|c| c.matrix() == cd.matrix());
    let rows: Vec<Vec<i64>> = match word.0.as_slice() {
        [1] if is("A1") => vec![vec![1]],
        [1, 2, 1] | [2, 1, 2] if is("A2") => vec![vec![1, 0, 0], vec![0, 1, -1], vec![0, 0, 1]],
        [1, 2] | [2, 1] if is("A1xA1") => vec![vec![1, 0], vec![0, 1]],
        // Long root first.
        [1, 2, 1, 2] if is("B2") => lower_b2(1),
        [2, 1, 2, 1] if is("C2") => lower_b2(1),
        // Short root first.
        [2, 1, 2, 1] if is("B2") => lower_b2(2),
        [1, 2, 1, 2] if is("C2") => lower_b2(2),
        _ => return Err(unsupported()),
    };
    let l = word.len();
    StringConeSpec::new(
        cd.clone(),
        word.clone(),
        IntMatrix::from_rows(&rows, l).expect("table shape"),
        Provenance::Builtin,
    )
}

/// Rank-2 non-simply-laced string cone `a_1 ≥ 0, c·a_2 ≥ a_3, a_3 ≥ c'·a_4,
/// a_4 ≥ 0` with `(c, c') = (1, 1)` when the word starts at the long root
/// and `(2, 2)` when it starts at the short one.
fn lower_b2(c: i64) -> Vec<Vec<i64>> {
    vec![vec![1, 0, 0, 0], vec![0, c, -1, 0], vec![0, 0, 1, -c], vec![0, 0, 0, 1]]
}

fn check_prefix_args(spec: &StringConeSpec, prefix: usize, lambda: &[i64]) -> Result<(), LittelmannError> {
    if prefix > spec.word.len() {
        return Err(LittelmannError::DimensionMismatch(format!(
            "prefix length {prefix} exceeds word length {}",
            spec.word.len()
        )));
    }
    spec.cd.require_dominant(lambda)?;
    Ok(())
}

fn zero_trailing(sys: &mut polyhedra::InequalitySystem, prefix: usize) -> Result<(), PolyhedraError> {
    let l = sys.dim();
    for k in prefix..l {
        let mut e = RatVector::zeros(l);
        e.0[k] = num_rational::BigRational::from_integer(BigInt::from(1));
        sys.add_eq(e, num_rational::BigRational::zero())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests;
