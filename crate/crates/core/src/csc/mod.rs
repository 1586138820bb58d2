//! Chopped and sliced cones, their counting measures, and the comparison of
//! rescaled counting measures with the pushed-forward volume measure.

mod testfn;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{rank, IntMatrix, RatVector};
use crate::polyhedra::{self, BoxSampler, InequalitySystem, PolyhedraError};

pub use testfn::{PairingValue, TestFunction};

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum CscError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chops are unbounded: the cone meets {{p(x) <= 0}} in the ray {witness:?}")]
    NotBounded { witness: Vec<BigInt> },
    #[error("weight map q has rank {rank} < {expected}")]
    RankDeficientQ { rank: usize, expected: usize },
    #[error("unknown test function {0:?}")]
    UnknownTestFunction(String),
    #[error("test function {name} needs coordinate {index} but Q has rank {rank}")]
    TestFunctionOutOfRange { name: String, index: usize, rank: usize },
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
}

/// The data `(K, Λ, Λ̃, Q, R, p, q, r, s)` with all lattices realized as
/// `Z^rank` and the positive monoids as nonnegative orthants.
///
/// The cone is `C = {x : r·x ≥ 0}`, the chop at `λ` is
/// `C^λ = C ∩ {p·x ≤ s·λ}` and the slice is `C^λ_β = C^λ ∩ {q·x = β}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoppedSlicedCone {
    rank_k: usize,
    rank_lambda: usize,
    rank_lambda_tilde: usize,
    rank_q: usize,
    rank_r: usize,
    p: IntMatrix,
    q: IntMatrix,
    r: IntMatrix,
    s: IntMatrix,
}

impl ChoppedSlicedCone {
    /// Builds and validates a cone. Fails with [`CscError::NotBounded`] if
    /// some chop is unbounded.
    pub fn new(p: IntMatrix, q: IntMatrix, r: IntMatrix, s: IntMatrix) -> Result<Self, CscError> {
        let c = Self::unchecked(p, q, r, s)?;
        if let Some(witness) = c.recession_witness() {
            return Err(CscError::NotBounded { witness });
        }
        Ok(c)
    }

    /// Builds a cone after checking shapes only.
    pub fn unchecked(p: IntMatrix, q: IntMatrix, r: IntMatrix, s: IntMatrix) -> Result<Self, CscError> {
        let rank_k = r.cols();
        let shape = |name: &str, m: &IntMatrix, cols: usize| {
            if m.cols() != cols {
                Err(CscError::DimensionMismatch(format!(
                    "{name} has {} columns, expected {cols}",
                    m.cols()
                )))
            } else {
                Ok(())
            }
        };
        shape("p", &p, rank_k)?;
        shape("q", &q, rank_k)?;
        if s.rows() != p.rows() {
            return Err(CscError::DimensionMismatch(format!(
                "s has {} rows but p has {}",
                s.rows(),
                p.rows()
            )));
        }
        Ok(Self {
            rank_k,
            rank_lambda: s.cols(),
            rank_lambda_tilde: p.rows(),
            rank_q: q.rows(),
            rank_r: r.rows(),
            p,
            q,
            r,
            s,
        })
    }

    pub fn rank_k(&self) -> usize {
        self.rank_k
    }
    pub fn rank_lambda(&self) -> usize {
        self.rank_lambda
    }
    pub fn rank_lambda_tilde(&self) -> usize {
        self.rank_lambda_tilde
    }
    pub fn rank_q(&self) -> usize {
        self.rank_q
    }
    pub fn rank_r(&self) -> usize {
        self.rank_r
    }
    pub fn p(&self) -> &IntMatrix {
        &self.p
    }
    pub fn q(&self) -> &IntMatrix {
        &self.q
    }
    pub fn r(&self) -> &IntMatrix {
        &self.r
    }
    pub fn s(&self) -> &IntMatrix {
        &self.s
    }

    /// `{r·x ≥ 0, p·x ≤ 0}`; the chops are all bounded iff this is `{0}`.
    pub fn recession_system(&self) -> InequalitySystem {
        let mut sys = InequalitySystem::new(self.rank_k);
        sys.add_matrix_ge(&self.r, &vec![BigInt::zero(); self.rank_r])
            .expect("shape checked");
        sys.add_matrix_le(&self.p, &vec![BigInt::zero(); self.rank_lambda_tilde])
            .expect("shape checked");
        sys
    }

    /// True iff every chop `C^λ` is bounded.
    pub fn validate(&self) -> bool {
        polyhedra::is_bounded(&self.recession_system())
    }

    /// A nonzero integer direction along which chops are unbounded.
    pub fn recession_witness(&self) -> Option<Vec<BigInt>> {
        polyhedra::recession_ray(&self.recession_system())
    }

    /// True iff `C` itself contains no line.
    pub fn is_pointed(&self) -> bool {
        rank(&self.r) == self.rank_k
    }

    fn check_len(&self, what: &str, v: &[i64], len: usize) -> Result<(), CscError> {
        if v.len() != len {
            return Err(CscError::DimensionMismatch(format!(
                "{what} has {} coordinates, expected {len}",
                v.len()
            )));
        }
        Ok(())
    }

    /// `s·λ`.
    pub fn chop_bounds(&self, lambda: &[i64]) -> Result<Vec<BigInt>, CscError> {
        self.check_len("lambda", lambda, self.rank_lambda)?;
        Ok(self.s.mul_vec_i64(lambda))
    }

    /// The system `r·x ≥ 0, p·x ≤ s·λ`.
    pub fn chop(&self, lambda: &[i64]) -> Result<InequalitySystem, CscError> {
        let bounds = self.chop_bounds(lambda)?;
        let mut sys = InequalitySystem::new(self.rank_k);
        sys.add_matrix_ge(&self.r, &vec![BigInt::zero(); self.rank_r])?;
        sys.add_matrix_le(&self.p, &bounds)?;
        Ok(sys)
    }

    /// The chop at `λ` together with `q·x = β`.
    pub fn slice(&self, lambda: &[i64], beta: &[i64]) -> Result<InequalitySystem, CscError> {
        self.check_len("beta", beta, self.rank_q)?;
        let mut sys = self.chop(lambda)?;
        let beta: Vec<BigInt> = beta.iter().map(|&b| BigInt::from(b)).collect();
        sys.add_matrix_eq(&self.q, &beta)?;
        Ok(sys)
    }

    /// `|C^λ ∩ K|`.
    pub fn chop_count(&self, lambda: &[i64]) -> Result<u128, CscError> {
        Ok(polyhedra::count_lattice_points(&self.chop(lambda)?)?)
    }

    /// `|C^λ_β ∩ K|`.
    pub fn slice_count(&self, lambda: &[i64], beta: &[i64]) -> Result<u128, CscError> {
        Ok(polyhedra::count_lattice_points(&self.slice(lambda, beta)?)?)
    }

    /// Pushes every lattice point of `C^λ` through `q`.
    pub fn measure(&self, lambda: &[i64]) -> Result<SliceCountTable, CscError> {
        let pts = polyhedra::enumerate_lattice_points(&self.chop(lambda)?)?;
        let q = self
            .q
            .to_i64_rows()
            .ok_or_else(|| CscError::DimensionMismatch("q entries exceed 64 bits".into()))?;
        let mut entries = BTreeMap::new();
        for x in &pts.points {
            let beta: Vec<i64> = q
                .iter()
                .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
                .collect();
            *entries.entry(beta).or_insert(0u128) += 1;
        }
        Ok(SliceCountTable {
            lambda: lambda.to_vec(),
            entries,
        })
    }

    /// `n^{-rank K}` times the push-forward of `μ_{nλ}` under `β ↦ β/n`.
    pub fn scaled_measure(&self, lambda: &[i64], n: u64) -> Result<ScaledMeasure, CscError> {
        assert!(n > 0, "scale must be positive");
        let scaled: Vec<i64> = lambda.iter().map(|&l| l * n as i64).collect();
        let table = self.measure(&scaled)?;
        let nn = BigInt::from(n);
        let denom = BigRational::from_integer(Pow::pow(&nn, self.rank_k as u32));
        let atoms = table
            .entries
            .into_iter()
            .map(|(beta, count)| {
                let loc = RatVector(
                    beta.iter()
                        .map(|&b| BigRational::new(BigInt::from(b), nn.clone()))
                        .collect(),
                );
                (loc, BigRational::from_integer(BigInt::from(count)) / &denom)
            })
            .collect();
        Ok(ScaledMeasure { n, atoms })
    }

    fn check_full_rank_q(&self) -> Result<(), CscError> {
        let rq = rank(&self.q);
        if rq < self.rank_q {
            return Err(CscError::RankDeficientQ {
                rank: rq,
                expected: self.rank_q,
            });
        }
        Ok(())
    }

    /// Monte Carlo estimate of `∫_{C^λ} f(q(x)) dx` from uniform draws in
    /// the exact bounding box of `C^λ`.
    ///
    /// Every draw contributes `vol(box)·1_C(x)·f(q(x))`; the estimate is
    /// their mean and the standard error is their standard deviation over
    /// `√draws`. Chops that are empty or lower-dimensional have volume zero.
    pub fn limit_pairing_estimate(
        &self,
        lambda: &[i64],
        f: &TestFunction,
        n_samples: usize,
        seed: u64,
    ) -> Result<MonteCarloEstimate, CscError> {
        self.check_full_rank_q()?;
        f.check_rank(self.rank_q)?;
        let chop = self.chop(lambda)?;
        let sampler = match BoxSampler::new(&chop) {
            Ok(s) => s,
            Err(PolyhedraError::Infeasible) | Err(PolyhedraError::DegenerateBox(_)) => {
                return Ok(MonteCarloEstimate::zero(n_samples));
            }
            Err(e) => return Err(e.into()),
        };
        let q: Vec<Vec<f64>> = (0..self.rank_q)
            .map(|i| RatVector::from_bigints(self.q.row(i)).to_f64())
            .collect();
        let vol = sampler.box_volume();
        let mut rng = BoxSampler::rng(seed);
        let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
        let mut accepted = 0usize;
        let mut beta = vec![0.0; self.rank_q];
        for _ in 0..n_samples {
            let x = sampler.draw(&mut rng);
            if !sampler.contains(&x) {
                continue;
            }
            accepted += 1;
            for (b, row) in beta.iter_mut().zip(&q) {
                *b = row.iter().zip(&x).map(|(a, v)| a * v).sum();
            }
            let z = vol * f.eval_f64(&beta);
            sum += z;
            sum_sq += z * z;
        }
        let t = n_samples.max(1) as f64;
        let mean = sum / t;
        let var = if n_samples > 1 {
            ((sum_sq - t * mean * mean) / (t - 1.0)).max(0.0)
        } else {
            0.0
        };
        Ok(MonteCarloEstimate {
            estimate: mean,
            stderr: (var / t).sqrt(),
            draws: n_samples,
            accepted,
            box_volume: vol,
        })
    }

    /// Exact pairings of `f` with `μ_λ^{(n)}` for every `n` in `ns`, next to
    /// one Monte Carlo estimate of the limit pairing.
    pub fn convergence_report(
        &self,
        lambda: &[i64],
        f: &TestFunction,
        ns: &[u64],
        n_samples: usize,
        seed: u64,
    ) -> Result<ConvergenceReport, CscError> {
        let limit = self.limit_pairing_estimate(lambda, f, n_samples, seed)?;
        let rows = ns
            .iter()
            .map(|&n| {
                let m = self.scaled_measure(lambda, n)?;
                let pairing = f.pair(&m)?;
                Ok(ConvergenceRow {
                    n,
                    abs_deviation: (pairing.to_f64() - limit.estimate).abs(),
                    pairing,
                })
            })
            .collect::<Result<Vec<_>, CscError>>()?;
        Ok(ConvergenceReport { limit, rows })
    }
}

/// `β ↦ |C^λ_β ∩ K|`, the push-forward of the counting measure of `C^λ ∩ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceCountTable {
    pub lambda: Vec<i64>,
    pub entries: BTreeMap<Vec<i64>, u128>,
}

impl SliceCountTable {
    pub fn total(&self) -> u128 {
        self.entries.values().sum()
    }

    pub fn get(&self, beta: &[i64]) -> u128 {
        self.entries.get(beta).copied().unwrap_or(0)
    }
}

/// Atoms `β/n` with weights `|C^{nλ}_β ∩ K| / n^{rank K}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledMeasure {
    pub n: u64,
    pub atoms: BTreeMap<RatVector, BigRational>,
}

impl ScaledMeasure {
    pub fn total_mass(&self) -> BigRational {
        self.atoms.values().sum()
    }
}

/// A finitely supported measure on `Q_R` with rational atoms and weights.
pub trait DiscreteMeasure {
    fn atoms(&self) -> Vec<(Vec<BigRational>, BigRational)>;
}

impl DiscreteMeasure for SliceCountTable {
    fn atoms(&self) -> Vec<(Vec<BigRational>, BigRational)> {
        self.entries
            .iter()
            .map(|(beta, &c)| {
                (
                    beta.iter().map(|&b| BigRational::from_integer(b.into())).collect(),
                    BigRational::from_integer(BigInt::from(c)),
                )
            })
            .collect()
    }
}

impl DiscreteMeasure for ScaledMeasure {
    fn atoms(&self) -> Vec<(Vec<BigRational>, BigRational)> {
        self.atoms.iter().map(|(l, w)| (l.0.clone(), w.clone())).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub draws: usize,
    pub accepted: usize,
    pub box_volume: f64,
}

impl MonteCarloEstimate {
    fn zero(draws: usize) -> Self {
        Self {
            estimate: 0.0,
            stderr: 0.0,
            draws,
            accepted: 0,
            box_volume: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: u64,
    pub pairing: PairingValue,
    pub abs_deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub limit: MonteCarloEstimate,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// The last deviation is below `max(3·stderr, rel_tol·|limit|)` and
    /// smaller than the first one.
    pub fn converges(&self, rel_tol: f64) -> bool {
        let (Some(first), Some(last)) = (self.rows.first(), self.rows.last()) else {
            return false;
        };
        let tol = (3.0 * self.limit.stderr).max(rel_tol * self.limit.estimate.abs());
        last.abs_deviation < tol && last.abs_deviation < first.abs_deviation
    }

    /// CSV with header `n,pairing,limit_estimate,stderr,abs_deviation`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,pairing,limit_estimate,stderr,abs_deviation\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.n,
                r.pairing,
                fmt_sig6(self.limit.estimate),
                fmt_sig6(self.limit.stderr),
                fmt_sig6(r.abs_deviation)
            ));
        }
        out
    }
}

/// Six significant digits, plain notation where reasonable.
pub fn fmt_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&mag) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

/// JSON cone description: ranks plus the four integer matrices as row lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFile {
    pub ranks: Ranks,
    pub p: Vec<Vec<i64>>,
    pub q: Vec<Vec<i64>>,
    pub r: Vec<Vec<i64>>,
    pub s: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranks {
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "Lambda")]
    pub lambda: usize,
    #[serde(rename = "LambdaTilde")]
    pub lambda_tilde: usize,
    #[serde(rename = "Q")]
    pub q: usize,
    #[serde(rename = "R")]
    pub r: usize,
}

impl ConeFile {
    /// Checks the declared ranks against the matrices and builds the cone
    /// without the boundedness check.
    pub fn to_cone_unchecked(&self) -> Result<ChoppedSlicedCone, CscError> {
        let rk = &self.ranks;
        let mat = |name: &str, rows: &[Vec<i64>], nrows: usize, ncols: usize| {
            if rows.len() != nrows {
                return Err(CscError::DimensionMismatch(format!(
                    "{name} has {} rows, declared {nrows}",
                    rows.len()
                )));
            }
            IntMatrix::from_rows(rows, ncols).map_err(|e| CscError::DimensionMismatch(format!("{name}: {e}")))
        };
        let p = mat("p", &self.p, rk.lambda_tilde, rk.k)?;
        let q = mat("q", &self.q, rk.q, rk.k)?;
        let r = mat("r", &self.r, rk.r, rk.k)?;
        let s = mat("s", &self.s, rk.lambda_tilde, rk.lambda)?;
        ChoppedSlicedCone::unchecked(p, q, r, s)
    }

    pub fn to_cone(&self) -> Result<ChoppedSlicedCone, CscError> {
        let c = self.to_cone_unchecked()?;
        match c.recession_witness() {
            Some(witness) => Err(CscError::NotBounded { witness }),
            None => Ok(c),
        }
    }

    pub fn from_cone(c: &ChoppedSlicedCone) -> Self {
        let rows = |m: &IntMatrix| m.to_i64_rows().expect("entries fit in 64 bits");
        Self {
            ranks: Ranks {
                k: c.rank_k,
                lambda: c.rank_lambda,
                lambda_tilde: c.rank_lambda_tilde,
                q: c.rank_q,
                r: c.rank_r,
            },
            p: rows(&c.p),
            q: rows(&c.q),
            r: rows(&c.r),
            s: rows(&c.s),
        }
    }
}

/// The cone `{x ≥ 0}` in rank `k` chopped by `x ≤ λ` coordinatewise and
/// sliced by the coordinate sum.
pub fn box_cone(k: usize) -> ChoppedSlicedCone {
    let id = IntMatrix::identity(k);
    let q = IntMatrix::from_rows(&[vec![1i64; k]], k).expect("row");
    ChoppedSlicedCone::new(id.clone(), q, id.clone(), id).expect("box cone is bounded")
}

#[cfg(test)]
mod tests;
