//! Named test functions on `Q_R` for pairing against measures.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use super::{CscError, DiscreteMeasure};
use crate::exact::{fmt_rational, rat_to_f64};

/// A bounded continuous function on the support of the measures involved.
/// Coordinate indices are 1-based, as in their names.
#[derive(Clone, Debug, PartialEq)]
pub enum TestFunction {
    Const,
    /// `β ↦ β_k`
    Proj(usize),
    /// `β ↦ β_k²`
    Sq(usize),
    /// Smooth bump `exp(1 - 1/(1 - |β-c|²/ρ²))` inside the ball, zero outside.
    Bump {
        center: Vec<f64>,
        radius: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum PairingValue {
    Exact(BigRational),
    Approx(f64),
}

impl PairingValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            PairingValue::Exact(x) => rat_to_f64(x),
            PairingValue::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            PairingValue::Exact(x) => Some(x),
            PairingValue::Approx(_) => None,
        }
    }
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingValue::Exact(x) => write!(f, "{}", fmt_rational(x)),
            PairingValue::Approx(x) => write!(f, "{}", super::fmt_sig6(*x)),
        }
    }
}

impl TestFunction {
    pub fn name(&self) -> String {
        match self {
            TestFunction::Const => "const".into(),
            TestFunction::Proj(k) => format!("proj{k}"),
            TestFunction::Sq(k) => format!("sq{k}"),
            TestFunction::Bump { center, radius } => {
                let c: Vec<String> = center.iter().map(|x| x.to_string()).collect();
                format!("bump({};{radius})", c.join(","))
            }
        }
    }

    /// Rejects coordinate indices outside `1..=rank_q` and bump centers of
    /// the wrong length.
    pub fn check_rank(&self, rank_q: usize) -> Result<(), CscError> {
        let bad = |index: usize| CscError::TestFunctionOutOfRange {
            name: self.name(),
            index,
            rank: rank_q,
        };
        match self {
            TestFunction::Const => Ok(()),
            TestFunction::Proj(k) | TestFunction::Sq(k) => {
                if *k == 0 || *k > rank_q {
                    Err(bad(*k))
                } else {
                    Ok(())
                }
            }
            TestFunction::Bump { center, .. } => {
                if center.len() != rank_q {
                    Err(bad(center.len()))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Exact value at a rational point, when the function is rational there.
    pub fn eval_exact(&self, beta: &[BigRational]) -> Option<BigRational> {
        match self {
            TestFunction::Const => Some(BigRational::from_integer(1.into())),
            TestFunction::Proj(k) => Some(beta[k - 1].clone()),
            TestFunction::Sq(k) => Some(&beta[k - 1] * &beta[k - 1]),
            TestFunction::Bump { .. } => None,
        }
    }

    pub fn eval_f64(&self, beta: &[f64]) -> f64 {
        match self {
            TestFunction::Const => 1.0,
            TestFunction::Proj(k) => beta[k - 1],
            TestFunction::Sq(k) => beta[k - 1] * beta[k - 1],
            TestFunction::Bump { center, radius } => {
                let d2: f64 = beta.iter().zip(center).map(|(b, c)| (b - c) * (b - c)).sum();
                let t = d2 / (radius * radius);
                if t >= 1.0 {
                    0.0
                } else {
                    (1.0 - 1.0 / (1.0 - t)).exp()
                }
            }
        }
    }

    /// `Σ f(atom)·weight`, exact whenever `f` is rational-valued.
    pub fn pair<M: DiscreteMeasure + ?Sized>(&self, m: &M) -> Result<PairingValue, CscError> {
        let atoms = m.atoms();
        if let Some((loc, _)) = atoms.first() {
            self.check_rank(loc.len())?;
        }
        if matches!(self, TestFunction::Bump { .. }) {
            let total = atoms
                .iter()
                .map(|(loc, w)| {
                    let x: Vec<f64> = loc.iter().map(rat_to_f64).collect();
                    self.eval_f64(&x) * rat_to_f64(w)
                })
                .sum();
            return Ok(PairingValue::Approx(total));
        }
        let mut total = BigRational::zero();
        for (loc, w) in &atoms {
            total += self.eval_exact(loc).expect("rational test function") * w;
        }
        Ok(PairingValue::Exact(total))
    }
}

impl FromStr for TestFunction {
    type Err = CscError;

    /// Accepts `const`, `proj<k>`, `proj_<k>`, `sq<k>`, `sq_<k>` and
    /// `bump(c1,c2,...;radius)`.
    fn from_str(s: &str) -> Result<Self, CscError> {
        let unknown = || CscError::UnknownTestFunction(s.to_string());
        let t = s.trim();
        if t == "const" {
            return Ok(TestFunction::Const);
        }
        let index = |rest: &str| -> Result<usize, CscError> {
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            rest.parse::<usize>().ok().filter(|&k| k > 0).ok_or_else(unknown)
        };
        if let Some(rest) = t.strip_prefix("proj") {
            return Ok(TestFunction::Proj(index(rest)?));
        }
        if let Some(rest) = t.strip_prefix("sq") {
            return Ok(TestFunction::Sq(index(rest)?));
        }
        if let Some(inner) = t.strip_prefix("bump(").and_then(|r| r.strip_suffix(')')) {
            let (c, r) = inner.split_once(';').ok_or_else(unknown)?;
            let center = c
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| unknown())?;
            let radius: f64 = r.trim().parse().map_err(|_| unknown())?;
            if !radius.is_finite() || radius <= 0.0 || center.iter().any(|x| !x.is_finite()) {
                return Err(unknown());
            }
            return Ok(TestFunction::Bump { center, radius });
        }
        Err(unknown())
    }
}
