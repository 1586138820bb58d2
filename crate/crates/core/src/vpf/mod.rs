//! Vector partition functions and the reduction of slice counts to them.
//!
//! For a pointed chopped and sliced cone the slice count `|C^λ_β ∩ K|`
//! equals `Φ_E(B·(λ, β))` for block matrices `E` and `B` assembled after a
//! unimodular change of coordinates moving `C` into the positive orthant.
//! Along rays in parameter space the counts are quasi-polynomial, which
//! [`fit_quasipolynomial`] checks by exact interpolation with a holdout.

mod quasipoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::csc::{ChoppedSlicedCone, CscError};
use crate::exact::{self, ExactError, IntMatrix};
use crate::polyhedra::{self, InequalitySystem, PolyhedraError};

pub use quasipoly::{fit_values, holdout_len, interpolate, min_window, FitFailure, QuasiPolynomial};

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum VpfError {
    #[error("cone is not pointed: r has rank {rank} < {dim}")]
    NotPointed { rank: usize, dim: usize },
    #[error("{{E x = 0, x >= 0}} contains the nonzero point {witness:?}")]
    KernelConditionViolated { witness: Vec<BigInt> },
    #[error(
        "no quasi-polynomial with period <= {period_max} and degree <= {degree_bound} fits \
         (ray leaves a chamber or bounds insufficient); {}",
        match .failure.largest_window {
            Some(t) => format!(
                "largest consistent window is t = 0..={t} (period {}, degree {})",
                .failure.best_period, .failure.best_degree
            ),
            None => "no candidate matches t = 0".to_string(),
        }
    )]
    NoFit {
        period_max: usize,
        degree_bound: usize,
        failure: FitFailure,
    },
    #[error("window 0..={t_max} too short: need t_max >= {needed}")]
    WindowTooShort { t_max: usize, needed: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Csc(#[from] CscError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
}

/// `Φ_E(y) = #{x ∈ Z^n_{≥0} : E·x = y}` for an `E` whose kernel meets the
/// orthant only in `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VpfProblem {
    e: IntMatrix,
}

impl VpfProblem {
    pub fn new(e: IntMatrix) -> Result<Self, VpfError> {
        let p = Self { e };
        if let Some(witness) = polyhedra::recession_ray(&p.fiber_system(&vec![BigInt::zero(); p.e.rows()])) {
            return Err(VpfError::KernelConditionViolated { witness });
        }
        Ok(p)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.e
    }

    /// `{x ≥ 0, E·x = y}`.
    pub fn fiber_system(&self, y: &[BigInt]) -> InequalitySystem {
        let n = self.e.cols();
        let mut sys = InequalitySystem::new(n);
        sys.add_matrix_ge(&IntMatrix::identity(n), &vec![BigInt::zero(); n])
            .expect("square identity");
        sys.add_matrix_eq(&self.e, y).expect("row count");
        sys
    }

    pub fn phi(&self, y: &[BigInt]) -> Result<u128, VpfError> {
        if y.len() != self.e.rows() {
            return Err(VpfError::DimensionMismatch(format!(
                "y has {} coordinates, E has {} rows",
                y.len(),
                self.e.rows()
            )));
        }
        Ok(polyhedra::count_lattice_points(&self.fiber_system(y))?)
    }

    pub fn phi_i64(&self, y: &[i64]) -> Result<u128, VpfError> {
        let y: Vec<BigInt> = y.iter().map(|&v| BigInt::from(v)).collect();
        self.phi(&y)
    }
}

/// A vector partition function with the parameter map realizing the slice
/// counts of a cone, and the unimodular map used to get there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EbPair {
    pub problem: VpfProblem,
    pub b: IntMatrix,
    pub embedding: IntMatrix,
}

/// JSON form `{"E": rows, "B": rows, "embedding": rows}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EbPairFile {
    #[serde(rename = "E")]
    pub e: IntMatrix,
    #[serde(rename = "B")]
    pub b: IntMatrix,
    pub embedding: IntMatrix,
}

impl From<&EbPair> for EbPairFile {
    fn from(p: &EbPair) -> Self {
        Self {
            e: p.problem.e.clone(),
            b: p.b.clone(),
            embedding: p.embedding.clone(),
        }
    }
}

impl TryFrom<EbPairFile> for EbPair {
    type Error = VpfError;
    fn try_from(f: EbPairFile) -> Result<Self, VpfError> {
        if f.b.rows() != f.e.rows() {
            return Err(VpfError::DimensionMismatch(format!(
                "B has {} rows, E has {}",
                f.b.rows(),
                f.e.rows()
            )));
        }
        Ok(Self {
            problem: VpfProblem::new(f.e)?,
            b: f.b,
            embedding: f.embedding,
        })
    }
}

impl EbPair {
    /// `B·(λ, β)`.
    pub fn parameter(&self, lambda: &[i64], beta: &[i64]) -> Result<Vec<BigInt>, VpfError> {
        if lambda.len() + beta.len() != self.b.cols() {
            return Err(VpfError::DimensionMismatch(format!(
                "(lambda, beta) has {} coordinates, B has {} columns",
                lambda.len() + beta.len(),
                self.b.cols()
            )));
        }
        let v: Vec<i64> = lambda.iter().chain(beta).copied().collect();
        Ok(self.b.mul_vec_i64(&v))
    }

    /// `Φ_E(B·(λ, β))`.
    pub fn count(&self, lambda: &[i64], beta: &[i64]) -> Result<u128, VpfError> {
        self.problem.phi(&self.parameter(lambda, beta)?)
    }
}

/// True iff `row` is a standard basis vector.
fn is_unit_row(row: &[BigInt]) -> bool {
    row.iter().filter(|x| x.is_one()).count() == 1 && row.iter().all(|x| x.is_zero() || x.is_one())
}

/// Builds `E` and `B` with `|C^λ_β ∩ K| = Φ_E(B·(λ, β))`.
///
/// With `A` unimodular and `A·C` in the orthant, set `x' = A·x` and write
/// `r' = r·A⁻¹`, `p' = p·A⁻¹`, `q' = q·A⁻¹`. Rows of `r'` that are standard
/// basis vectors repeat `x' ≥ 0` and are dropped, leaving `r̃`. Slack
/// variables for `r̃·x' ≥ 0` and `p'·x' ≤ s·λ` give
///
/// ```text
/// E = [ r̃  -I  0 ]      B = [ 0  0 ]
///     [ p'  0  I ]          [ s  0 ]
///     [ q'  0  0 ]          [ 0  I ]
/// ```
pub fn reduce_to_vpf(c: &ChoppedSlicedCone) -> Result<EbPair, VpfError> {
    let k = c.rank_k();
    let rk = exact::rank(c.r());
    if rk < k {
        return Err(VpfError::NotPointed { rank: rk, dim: k });
    }
    let a = exact::positive_orthant_embedding(c.r())?;
    let a_inv = a.inverse_unimodular()?;
    let r1 = c.r() * &a_inv;
    let p1 = c.p() * &a_inv;
    let q1 = c.q() * &a_inv;
    let kept: Vec<usize> = (0..r1.rows()).filter(|&i| !is_unit_row(r1.row(i))).collect();
    let r_tilde = r1.select_rows(&kept);

    let m = r_tilde.rows();
    let lt = c.rank_lambda_tilde();
    let nq = c.rank_q();
    let nl = c.rank_lambda();
    let mut e = IntMatrix::zeros(m + lt + nq, k + m + lt);
    let mut b = IntMatrix::zeros(m + lt + nq, nl + nq);
    for i in 0..m {
        for j in 0..k {
            e[(i, j)] = r_tilde[(i, j)].clone();
        }
        e[(i, k + i)] = -BigInt::one();
    }
    for i in 0..lt {
        for j in 0..k {
            e[(m + i, j)] = p1[(i, j)].clone();
        }
        e[(m + i, k + m + i)] = BigInt::one();
        for j in 0..nl {
            b[(m + i, j)] = c.s()[(i, j)].clone();
        }
    }
    for i in 0..nq {
        for j in 0..k {
            e[(m + lt + i, j)] = q1[(i, j)].clone();
        }
        b[(m + lt + i, nl + i)] = BigInt::one();
    }
    Ok(EbPair {
        problem: VpfProblem::new(e)?,
        b,
        embedding: a,
    })
}

/// Both sides of the reduction identity at `(λ, β)`: the slice count and
/// `Φ_E(B·(λ, β))`.
pub fn reduction_sides(
    pair: &EbPair,
    c: &ChoppedSlicedCone,
    lambda: &[i64],
    beta: &[i64],
) -> Result<(u128, u128), VpfError> {
    Ok((c.slice_count(lambda, beta)?, pair.count(lambda, beta)?))
}

pub fn verify_reduction(pair: &EbPair, c: &ChoppedSlicedCone, lambda: &[i64], beta: &[i64]) -> Result<bool, VpfError> {
    let (lhs, rhs) = reduction_sides(pair, c, lambda, beta)?;
    Ok(lhs == rhs)
}

/// Fits a quasi-polynomial to `counter` on `t = 0..=t_max`.
pub fn fit_quasipolynomial<F>(
    counter: F,
    t_max: usize,
    period_max: usize,
    degree_bound: usize,
) -> Result<QuasiPolynomial, VpfError>
where
    F: FnMut(i64) -> Result<u128, VpfError>,
{
    let needed = min_window(period_max.max(1), degree_bound);
    if t_max < needed || period_max == 0 {
        return Err(VpfError::WindowTooShort { t_max, needed });
    }
    let values = (0..=t_max as i64)
        .map(counter)
        .map(|v| v.map(|n| BigRational::from_integer(BigInt::from(n))))
        .collect::<Result<Vec<_>, _>>()?;
    fit_values(&values, period_max, degree_bound).map_err(|failure| VpfError::NoFit {
        period_max,
        degree_bound,
        failure,
    })
}

/// A ray `t ↦ (base_λ + t·dir_λ, base_β + t·dir_β)` in parameter space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub base_lambda: Vec<i64>,
    pub base_beta: Vec<i64>,
    pub dir_lambda: Vec<i64>,
    pub dir_beta: Vec<i64>,
}

impl Ray {
    pub fn at(&self, t: i64) -> (Vec<i64>, Vec<i64>) {
        let step = |b: &[i64], d: &[i64]| b.iter().zip(d).map(|(x, y)| x + t * y).collect();
        (
            step(&self.base_lambda, &self.dir_lambda),
            step(&self.base_beta, &self.dir_beta),
        )
    }
}

/// Default degree bound for slice counts: the generic slice dimension.
pub fn default_degree_bound(c: &ChoppedSlicedCone) -> usize {
    c.rank_k().saturating_sub(c.rank_q())
}

/// Fits the slice counts of `c` along `ray`.
pub fn ray_scan(
    c: &ChoppedSlicedCone,
    ray: &Ray,
    t_max: usize,
    period_max: usize,
    degree_bound: Option<usize>,
) -> Result<QuasiPolynomial, VpfError> {
    if ray.base_lambda.len() != c.rank_lambda()
        || ray.dir_lambda.len() != c.rank_lambda()
        || ray.base_beta.len() != c.rank_q()
        || ray.dir_beta.len() != c.rank_q()
    {
        return Err(VpfError::DimensionMismatch(format!(
            "ray needs {} lambda and {} beta coordinates",
            c.rank_lambda(),
            c.rank_q()
        )));
    }
    let d = degree_bound.unwrap_or_else(|| default_degree_bound(c));
    fit_quasipolynomial(
        |t| {
            let (l, b) = ray.at(t);
            Ok(c.slice_count(&l, &b)?)
        },
        t_max,
        period_max,
        d,
    )
}

#[cfg(test)]
mod tests;
