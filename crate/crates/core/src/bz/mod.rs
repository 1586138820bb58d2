//! Tensor product multiplicities as slice counts: trails in the
//! fundamental representations of the Langlands dual algebra cut out a
//! cone in `Z^l` (for `l` the length of a reduced word of `w_0`), chopped by
//! `(λ, ν) ∈ P × P` and sliced by the weight map.
//!
//! For a trail `π` with weights `γ = γ_0, γ_1, …, γ_l = δ` the coefficient
//! of `t_k` is `⟨(γ_{k-1} + γ_k)/2, α_{i_k}⟩`, an integer. The cone rows
//! come from trails `ω_i → w_0 s_i ω_i`, the `λ`-rows from trails
//! `s_i ω_i → w_0 ω_i`, and the `ν`-rows are the string cone chopping rows.

mod rep;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::csc::{ChoppedSlicedCone, CscError};
use crate::exact::IntMatrix;
use crate::liealg::{CartanData, LieError, WeylWord};
use crate::littelmann::{chopping_rows, weight_map_rows, LittelmannError};

pub use rep::{fundamental_module, RatMatrix, RepModule};

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum BzError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Csc(#[from] CscError),
    #[error(transparent)]
    Littelmann(#[from] LittelmannError),
    #[error("no explicit dual fundamental representations for type {0}")]
    UnsupportedType(String),
    #[error("word {0} is not a reduced word for the longest element")]
    NotLongestWord(WeylWord),
    #[error("weight {0:?} does not occur in the representation")]
    WeightNotInRep(Vec<i64>),
    #[error("representation check failed: {0}")]
    RepresentationCheck(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Exponents `c` with `e_{i_1}^{c_1} ⋯ e_{i_l}^{c_l} : V_δ → V_γ` nonzero,
/// together with the intermediate weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ITrail {
    pub exponents: Vec<u32>,
    /// `γ_0 = γ, …, γ_l = δ` with `γ_{k-1} - γ_k = c_k α_{i_k}`.
    pub weights: Vec<Vec<i64>>,
}

impl ITrail {
    pub fn from_weight(&self) -> &[i64] {
        &self.weights[0]
    }

    pub fn to_weight(&self) -> &[i64] {
        self.weights.last().expect("nonempty path")
    }

    /// `⟨(γ_{k-1} + γ_k)/2, α_{i_k}⟩ = (γ_k)_{i_k} + c_k`.
    pub fn coefficients(&self, word: &WeylWord) -> Vec<i64> {
        word.indices()
            .enumerate()
            .map(|(k, i)| self.weights[k + 1][i] + i64::from(self.exponents[k]))
            .collect()
    }
}

/// All `i`-trails from `γ` to `δ` in `rep`, in lexicographic order of
/// exponents.
pub fn itrails(rep: &RepModule, gamma: &[i64], delta: &[i64], word: &WeylWord) -> Result<Vec<ITrail>, BzError> {
    let cd = rep.cartan();
    cd.check_word(word)?;
    for w in [gamma, delta] {
        if !rep.has_weight(w) {
            return Err(BzError::WeightNotInRep(w.to_vec()));
        }
    }
    let diff: Vec<i64> = gamma.iter().zip(delta).map(|(a, b)| a - b).collect();
    let Some(target) = cd.weight_to_root(&diff) else {
        return Ok(Vec::new());
    };
    if target.iter().any(|&x| x < 0) {
        return Ok(Vec::new());
    }
    let idx: Vec<usize> = word.indices().collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; idx.len()];
    let sources = rep.weight_space(delta);
    let mut remaining = target.clone();
    distribute(&idx, 0, &mut remaining, &mut exps, &mut |exps| {
        let nonzero = sources.iter().any(|&s| {
            rep.apply_word(word, exps, &rep::unit(rep.dim(), s))
                .iter()
                .any(|x| !x.is_zero())
        });
        if nonzero {
            out.push(path(cd, word, exps, delta));
        }
    });
    out.sort();
    Ok(out)
}

/// Every split of `remaining` (per simple index) over the letters `k..`.
fn distribute(idx: &[usize], k: usize, remaining: &mut [i64], exps: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if k == idx.len() {
        if remaining.iter().all(|&r| r == 0) {
            f(exps);
        }
        return;
    }
    let i = idx[k];
    let last_for_i = !idx[k + 1..].contains(&i);
    let range = if last_for_i {
        remaining[i]..=remaining[i]
    } else {
        0..=remaining[i]
    };
    for c in range {
        exps[k] = c as u32;
        remaining[i] -= c;
        distribute(idx, k + 1, remaining, exps, f);
        remaining[i] += c;
    }
    exps[k] = 0;
}

fn path(cd: &CartanData, word: &WeylWord, exps: &[u32], delta: &[i64]) -> ITrail {
    let idx: Vec<usize> = word.indices().collect();
    let l = idx.len();
    let mut weights = vec![delta.to_vec(); l + 1];
    for k in (0..l).rev() {
        let alpha = cd.simple_root_weight(idx[k]);
        weights[k] = weights[k + 1]
            .iter()
            .zip(&alpha)
            .map(|(w, a)| w + i64::from(exps[k]) * a)
            .collect();
    }
    ITrail {
        exponents: exps.to_vec(),
        weights,
    }
}

/// The tensor product cone for one reduced word of `w_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BzSystem {
    cd: CartanData,
    word: WeylWord,
    /// Per simple index, trails `ω_i → w_0 s_i ω_i`.
    cone_trails: Vec<Vec<ITrail>>,
    /// Per simple index, trails `s_i ω_i → w_0 ω_i`.
    lambda_trails: Vec<Vec<ITrail>>,
    csc: ChoppedSlicedCone,
}

impl BzSystem {
    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn csc(&self) -> &ChoppedSlicedCone {
        &self.csc
    }

    pub fn cone_trails(&self) -> &[Vec<ITrail>] {
        &self.cone_trails
    }

    pub fn lambda_trails(&self) -> &[Vec<ITrail>] {
        &self.lambda_trails
    }

    fn parameter(&self, lambda: &[i64], nu: &[i64]) -> Result<Vec<i64>, BzError> {
        let n = self.cd.rank();
        if lambda.len() != n || nu.len() != n {
            return Err(BzError::DimensionMismatch(format!(
                "lambda and nu need {n} coordinates, got {} and {}",
                lambda.len(),
                nu.len()
            )));
        }
        Ok(lambda.iter().chain(nu).copied().collect())
    }
}

/// Assembles `r` from the cone trails, `p·t ≤ s·(λ, ν)` from the negated
/// `λ`-trail rows and the string cone chopping rows, and `q` from the
/// weight map.
pub fn build_bz_csc(cd: &CartanData, word: &WeylWord) -> Result<BzSystem, BzError> {
    cd.require_finite()?;
    cd.require_reduced(word)?;
    if !cd.is_longest(word) {
        return Err(BzError::NotLongestWord(word.clone()));
    }
    let n = cd.rank();
    let dual = cd.langlands_dual();
    let mut cone_trails = Vec::with_capacity(n);
    let mut lambda_trails = Vec::with_capacity(n);
    for i in 0..n {
        let rep = fundamental_module(&dual, i)?;
        let omega = rep.highest_weight().to_vec();
        let s_omega = dual.reflect_weight(i, &omega);
        let w0 = |mu: &[i64]| dual.act_on_weight(word, mu);
        cone_trails.push(itrails(&rep, &omega, &w0(&s_omega), word)?);
        lambda_trails.push(itrails(&rep, &s_omega, &w0(&omega), word)?);
    }

    let mut r_rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for t in cone_trails.iter().flatten() {
        r_rows.insert(t.coefficients(word));
    }
    let l = word.len();
    let r_rows: Vec<Vec<i64>> = r_rows.into_iter().collect();

    let mut p_rows: Vec<Vec<i64>> = Vec::new();
    let mut s_rows: Vec<Vec<i64>> = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, trails) in lambda_trails.iter().enumerate() {
        for t in trails {
            let row: Vec<i64> = t.coefficients(word).iter().map(|c| -c).collect();
            if seen.insert((row.clone(), i)) {
                p_rows.push(row);
                let mut srow = vec![0i64; 2 * n];
                srow[i] = 1;
                s_rows.push(srow);
            }
        }
    }
    let (p_nu, s_nu) = chopping_rows(cd, word)?;
    for (prow, srow) in p_nu
        .to_i64_rows()
        .expect("small")
        .into_iter()
        .zip(s_nu.to_i64_rows().expect("small"))
    {
        p_rows.push(prow);
        let mut full = vec![0i64; n];
        full.extend(srow);
        s_rows.push(full);
    }

    let to_matrix = |rows: &[Vec<i64>], cols: usize| IntMatrix::from_rows(rows, cols).expect("shape");
    let csc = ChoppedSlicedCone::new(
        to_matrix(&p_rows, l),
        weight_map_rows(cd, word),
        to_matrix(&r_rows, l),
        to_matrix(&s_rows, 2 * n),
    )?;
    Ok(BzSystem {
        cd: cd.clone(),
        word: word.clone(),
        cone_trails,
        lambda_trails,
        csc,
    })
}

/// `c^{λν}_β = [V(λ) ⊗ V(ν) : V(λ + ν - β)]` as a slice count.
pub fn lr_coefficient(sys: &BzSystem, lambda: &[i64], nu: &[i64], beta: &[i64]) -> Result<u128, BzError> {
    let param = sys.parameter(lambda, nu)?;
    Ok(sys.csc.slice_count(&param, beta)?)
}

/// All `β` with nonzero coefficient.
pub fn lr_table(sys: &BzSystem, lambda: &[i64], nu: &[i64]) -> Result<BTreeMap<Vec<i64>, u128>, BzError> {
    let param = sys.parameter(lambda, nu)?;
    Ok(sys.csc.measure(&param)?.entries)
}

/// `ν` with every coordinate equal to the height of `β`, deep enough that
/// `c^{λν}_β` equals the multiplicity of `λ - β` in `V(λ)`.
pub fn deep_nu(beta: &[i64]) -> Vec<i64> {
    let h: i64 = beta.iter().sum::<i64>().max(0);
    vec![h; beta.len()]
}
