//! Fourier–Motzkin elimination over primitive integer rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A single constraint `a·x ≥ b` with `a` a primitive integer vector (or zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Row {
    pub a: Vec<BigInt>,
    pub b: BigRational,
}

impl Row {
    /// Scales a rational constraint by a positive factor so that the normal
    /// becomes a primitive integer vector.
    pub fn normalized(a: &[BigRational], b: &BigRational) -> Row {
        let l = a.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = a.iter().map(|x| (x * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return Row { a: ints, b: b * &l };
        }
        let scale = BigRational::new(l, g.clone());
        Row {
            a: ints.into_iter().map(|x| x / &g).collect(),
            b: b * scale,
        }
    }

    pub fn from_int(a: Vec<BigInt>, b: BigRational) -> Row {
        let g = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() || g.is_one() {
            return Row { a, b };
        }
        let b = b / BigRational::from_integer(g.clone());
        Row {
            a: a.into_iter().map(|x| x / &g).collect(),
            b,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }
}

/// A deduplicated set of rows: identical normals keep only the tightest bound.
#[derive(Clone, Debug, Default)]
pub(crate) struct RowSet {
    rows: BTreeMap<Vec<BigInt>, BigRational>,
    /// Set once a row `0 ≥ b` with `b > 0` is seen.
    pub infeasible: bool,
}

impl RowSet {
    pub fn insert(&mut self, row: Row) {
        if row.is_zero() {
            if row.b.is_positive() {
                self.infeasible = true;
            }
            return;
        }
        match self.rows.get_mut(&row.a) {
            Some(b) => {
                if row.b > *b {
                    *b = row.b;
                }
            }
            None => {
                self.rows.insert(row.a, row.b);
            }
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = Row> + '_ {
        self.rows.iter().map(|(a, b)| Row {
            a: a.clone(),
            b: b.clone(),
        })
    }
}

/// Eliminates variable `k`: rows not involving it are kept, every pair with
/// opposite signs on `x_k` is combined.
pub(crate) fn eliminate(rows: &RowSet, k: usize) -> RowSet {
    let mut out = RowSet {
        infeasible: rows.infeasible,
        ..RowSet::default()
    };
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows.rows() {
        match r.a[k].sign() {
            num_bigint::Sign::Plus => pos.push(r),
            num_bigint::Sign::Minus => neg.push(r),
            num_bigint::Sign::NoSign => out.insert(r),
        }
    }
    for p in &pos {
        for n in &neg {
            let cp = -&n.a[k];
            let cn = p.a[k].clone();
            let a: Vec<BigInt> = p.a.iter().zip(&n.a).map(|(x, y)| &cp * x + &cn * y).collect();
            let b = &p.b * BigRational::from_integer(cp.clone()) + &n.b * BigRational::from_integer(cn.clone());
            out.insert(Row::from_int(a, b));
        }
    }
    out
}

/// Elimination chain with the last variable eliminated first.
///
/// `levels[k]` holds the rows of the projection onto `x_0..x_{k-1}` whose
/// last nonzero coefficient is on `x_{k-1}`; `levels[0]` is unused.
#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub levels: Vec<Vec<Row>>,
    /// The projection to zero variables is inconsistent, so the system has
    /// no rational solution.
    pub infeasible: bool,
}

impl Chain {
    pub fn build(dim: usize, rows: RowSet) -> Chain {
        let mut levels = vec![Vec::new(); dim + 1];
        let mut current = rows;
        for k in (0..dim).rev() {
            levels[k + 1] = current.rows().filter(|r| !r.a[k].is_zero()).collect();
            current = eliminate(&current, k);
        }
        Chain {
            levels,
            infeasible: current.infeasible,
        }
    }

    /// Smallest level whose rows constrain its variable from one side only,
    /// together with the admissible direction (+1, −1, or 0 when both are).
    pub fn one_sided_level(&self) -> Option<(usize, i32)> {
        for k in 1..self.levels.len() {
            let has_pos = self.levels[k].iter().any(|r| r.a[k - 1].is_positive());
            let has_neg = self.levels[k].iter().any(|r| r.a[k - 1].is_negative());
            match (has_pos, has_neg) {
                (true, true) => continue,
                (true, false) => return Some((k, 1)),
                (false, true) => return Some((k, -1)),
                (false, false) => return Some((k, 0)),
            }
        }
        None
    }

    /// Rational interval for `x_{k-1}` given values of `x_0..x_{k-2}`.
    pub fn interval(&self, k: usize, prefix: &[BigRational]) -> (Option<BigRational>, Option<BigRational>) {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for r in &self.levels[k] {
            let s: BigRational = r.a[..k - 1]
                .iter()
                .zip(prefix)
                .map(|(a, x)| BigRational::from_integer(a.clone()) * x)
                .sum();
            let c = BigRational::from_integer(r.a[k - 1].clone());
            let v = (&r.b - s) / &c;
            if c.is_positive() {
                if lo.as_ref().is_none_or(|l| v > *l) {
                    lo = Some(v);
                }
            } else if hi.as_ref().is_none_or(|h| v < *h) {
                hi = Some(v);
            }
        }
        (lo, hi)
    }
}
