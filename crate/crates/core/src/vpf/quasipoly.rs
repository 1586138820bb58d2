//! Quasi-polynomials in one variable and exact fitting from sampled values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{fmt_rational, parse_rational};

/// `t ↦ Σ_k coeffs[t mod period][k]·t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    classes: Vec<Vec<BigRational>>,
}

impl QuasiPolynomial {
    /// `classes[ρ]` lists the coefficients (ascending powers of `t`) used on
    /// `t ≡ ρ (mod classes.len())`.
    pub fn new(classes: Vec<Vec<BigRational>>) -> Self {
        assert!(!classes.is_empty(), "at least one residue class");
        Self {
            period: classes.len(),
            classes,
        }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn classes(&self) -> &[Vec<BigRational>] {
        &self.classes
    }

    /// Largest degree with a nonzero coefficient in any class (0 for the
    /// zero function).
    pub fn degree(&self) -> usize {
        self.classes
            .iter()
            .filter_map(|c| c.iter().rposition(|x| !x.is_zero()))
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let class = &self.classes[t.rem_euclid(self.period as i64) as usize];
        eval_poly(class, t)
    }
}

fn eval_poly(coeffs: &[BigRational], t: i64) -> BigRational {
    let t = BigRational::from_integer(BigInt::from(t));
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    residue: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct QuasiPolynomialJson {
    period: usize,
    classes: Vec<ClassJson>,
}

impl Serialize for QuasiPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QuasiPolynomialJson {
            period: self.period,
            classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(residue, c)| ClassJson {
                    residue,
                    coeffs: c.iter().map(fmt_rational).collect(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuasiPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = QuasiPolynomialJson::deserialize(deserializer)?;
        if j.period == 0 || j.classes.len() != j.period {
            return Err(D::Error::custom(format!(
                "period {} with {} residue classes",
                j.period,
                j.classes.len()
            )));
        }
        let mut classes = vec![None; j.period];
        for c in j.classes {
            if c.residue >= j.period || classes[c.residue].is_some() {
                return Err(D::Error::custom(format!("bad residue {}", c.residue)));
            }
            let coeffs = c
                .coeffs
                .iter()
                .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad coefficient {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            classes[c.residue] = Some(coeffs);
        }
        Ok(QuasiPolynomial::new(classes.into_iter().map(Option::unwrap).collect()))
    }
}

/// Unique polynomial of degree `< points.len()` through the given points,
/// as ascending coefficients. Abscissae must be distinct.
pub fn interpolate(points: &[(i64, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    // Vandermonde system, solved by Gauss–Jordan over the rationals.
    let mut a: Vec<Vec<BigRational>> = points
        .iter()
        .map(|(t, y)| {
            let t = BigRational::from_integer(BigInt::from(*t));
            let mut row = Vec::with_capacity(n + 1);
            let mut p = BigRational::one();
            for _ in 0..n {
                row.push(p.clone());
                p *= &t;
            }
            row.push(y.clone());
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero()).expect("distinct abscissae");
        a.swap(c, piv);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n].clone()).collect()
}

/// Outcome of a failed search, for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitFailure {
    /// Largest `T` such that some admissible (period, degree) pair
    /// reproduces every value on `0..=T`, or `None` if none fits at all.
    pub largest_window: Option<usize>,
    pub best_period: usize,
    pub best_degree: usize,
}

/// Number of trailing values withheld from interpolation and used only to
/// confirm a candidate.
pub fn holdout_len(degree_bound: usize) -> usize {
    (degree_bound + 1).max(5)
}

/// Smallest `t_max` accepted by [`fit_values`].
pub fn min_window(period_max: usize, degree_bound: usize) -> usize {
    (degree_bound + 1) * period_max + holdout_len(degree_bound)
}

/// Searches periods `1..=period_max` and, for each, degrees
/// `0..=degree_bound`, accepting the first candidate whose per-class
/// interpolants reproduce every value on the training window and the
/// holdout.
pub fn fit_values(
    values: &[BigRational],
    period_max: usize,
    degree_bound: usize,
) -> Result<QuasiPolynomial, FitFailure> {
    let t_max = values.len() - 1;
    let train_end = t_max - holdout_len(degree_bound);
    let mut best: Option<(usize, usize, usize)> = None;
    for m in 1..=period_max {
        for d in 0..=degree_bound {
            let Some(classes) = candidate(values, m, d, train_end) else {
                continue;
            };
            let qp = QuasiPolynomial::new(classes);
            let agree = (0..=t_max).take_while(|&t| qp.eval(t as i64) == values[t]).count();
            if agree == values.len() {
                return Ok(qp);
            }
            if agree > 0 && best.map_or(true, |b| agree - 1 > b.0) {
                best = Some((agree - 1, m, d));
            }
        }
    }
    Err(FitFailure {
        largest_window: best.map(|b| b.0),
        best_period: best.map_or(0, |b| b.1),
        best_degree: best.map_or(0, |b| b.2),
    })
}

/// Interpolants through the first `d + 1` training points of every class.
fn candidate(values: &[BigRational], m: usize, d: usize, train_end: usize) -> Option<Vec<Vec<BigRational>>> {
    (0..m)
        .map(|rho| {
            let pts: Vec<(i64, BigRational)> = (rho..=train_end)
                .step_by(m)
                .take(d + 1)
                .map(|t| (t as i64, values[t].clone()))
                .collect();
            if pts.len() < d + 1 {
                return None;
            }
            Some(interpolate(&pts))
        })
        .collect()
}
