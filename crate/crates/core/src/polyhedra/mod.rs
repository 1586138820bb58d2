//! Rational H-polyhedra: boundedness, exact lattice-point enumeration and
//! counting, and rejection sampling.
//!
//! A system is preprocessed once: equalities with a unit coefficient are
//! solved for that coordinate and substituted everywhere, the remaining
//! equalities become pairs of inequalities. The inequalities on the
//! surviving coordinates are then projected by Fourier–Motzkin elimination,
//! last coordinate first, and lattice points are enumerated by walking the
//! projections back up.

mod fm;
mod sample;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{make_primitive, IntMatrix, RatVector};
use fm::{Chain, Row, RowSet};

pub use sample::{BoxSampler, SampleResult};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyhedraError {
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is empty")]
    Infeasible,
    #[error("bounding box has zero volume: {0}")]
    DegenerateBox(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coordinate does not fit in a 64-bit integer")]
    CoordinateOverflow,
    #[error("rejection sampling accepted {accepted} of {requested} points within {draws} draws")]
    SampleBudgetExhausted {
        accepted: usize,
        requested: usize,
        draws: u64,
    },
}

/// `normal·x ≥ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub normal: RatVector,
    pub bound: BigRational,
}

/// `normal·x = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub normal: RatVector,
    pub value: BigRational,
}

/// A finite system of rational linear inequalities and equalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    dim: usize,
    ineqs: Vec<Inequality>,
    eqs: Vec<Equation>,
}

/// Integer points of a bounded system, ascending lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn int_rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl InequalitySystem {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.ineqs
    }

    pub fn equations(&self) -> &[Equation] {
        &self.eqs
    }

    fn check_dim(&self, len: usize) -> Result<(), PolyhedraError> {
        if len != self.dim {
            return Err(PolyhedraError::DimensionMismatch(format!(
                "normal of length {len} in a system of dimension {}",
                self.dim
            )));
        }
        Ok(())
    }

    /// Adds `normal·x ≥ bound`.
    pub fn add_ge(&mut self, normal: RatVector, bound: BigRational) -> Result<(), PolyhedraError> {
        self.check_dim(normal.dim())?;
        self.ineqs.push(Inequality { normal, bound });
        Ok(())
    }

    /// Adds `normal·x ≤ bound`.
    pub fn add_le(&mut self, normal: RatVector, bound: BigRational) -> Result<(), PolyhedraError> {
        let neg = RatVector(normal.0.into_iter().map(|x| -x).collect());
        self.add_ge(neg, -bound)
    }

    /// Adds `normal·x = value`.
    pub fn add_eq(&mut self, normal: RatVector, value: BigRational) -> Result<(), PolyhedraError> {
        self.check_dim(normal.dim())?;
        self.eqs.push(Equation { normal, value });
        Ok(())
    }

    pub fn ge(mut self, normal: &[i64], bound: i64) -> Self {
        self.add_ge(RatVector::from_ints(normal), int_rat(bound))
            .expect("normal dimension");
        self
    }

    pub fn le(mut self, normal: &[i64], bound: i64) -> Self {
        self.add_le(RatVector::from_ints(normal), int_rat(bound))
            .expect("normal dimension");
        self
    }

    pub fn eq(mut self, normal: &[i64], value: i64) -> Self {
        self.add_eq(RatVector::from_ints(normal), int_rat(value))
            .expect("normal dimension");
        self
    }

    /// Adds `m·x ≥ rhs` row by row.
    pub fn add_matrix_ge(&mut self, m: &IntMatrix, rhs: &[BigInt]) -> Result<(), PolyhedraError> {
        self.matrix_rows(m, rhs)?
            .into_iter()
            .try_for_each(|(n, b)| self.add_ge(n, b))
    }

    /// Adds `m·x ≤ rhs` row by row.
    pub fn add_matrix_le(&mut self, m: &IntMatrix, rhs: &[BigInt]) -> Result<(), PolyhedraError> {
        self.matrix_rows(m, rhs)?
            .into_iter()
            .try_for_each(|(n, b)| self.add_le(n, b))
    }

    /// Adds `m·x = rhs` row by row.
    pub fn add_matrix_eq(&mut self, m: &IntMatrix, rhs: &[BigInt]) -> Result<(), PolyhedraError> {
        self.matrix_rows(m, rhs)?
            .into_iter()
            .try_for_each(|(n, b)| self.add_eq(n, b))
    }

    fn matrix_rows(&self, m: &IntMatrix, rhs: &[BigInt]) -> Result<Vec<(RatVector, BigRational)>, PolyhedraError> {
        if m.rows() != rhs.len() {
            return Err(PolyhedraError::DimensionMismatch(format!(
                "{} rows but {} right-hand sides",
                m.rows(),
                rhs.len()
            )));
        }
        Ok((0..m.rows())
            .map(|i| {
                (
                    RatVector::from_bigints(m.row(i)),
                    BigRational::from_integer(rhs[i].clone()),
                )
            })
            .collect())
    }

    /// Same constraints with every bound and value replaced by zero.
    pub fn recession_system(&self) -> Self {
        Self {
            dim: self.dim,
            ineqs: self
                .ineqs
                .iter()
                .map(|c| Inequality {
                    normal: c.normal.clone(),
                    bound: BigRational::zero(),
                })
                .collect(),
            eqs: self
                .eqs
                .iter()
                .map(|e| Equation {
                    normal: e.normal.clone(),
                    value: BigRational::zero(),
                })
                .collect(),
        }
    }

    /// Exact membership test for a rational point.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        let dot = |n: &RatVector| -> BigRational { n.0.iter().zip(x).map(|(a, b)| a * b).sum() };
        self.ineqs.iter().all(|c| dot(&c.normal) >= c.bound) && self.eqs.iter().all(|e| dot(&e.normal) == e.value)
    }

    pub fn contains_int(&self, x: &[i64]) -> bool {
        let x: Vec<BigRational> = x.iter().map(|&v| int_rat(v)).collect();
        self.contains(&x)
    }

    /// Image of the system under the change of coordinates `x = m·x'`,
    /// i.e. the system satisfied by `x'`.
    pub fn pullback(&self, m: &IntMatrix) -> Result<Self, PolyhedraError> {
        if m.rows() != self.dim || !m.is_square() {
            return Err(PolyhedraError::DimensionMismatch(format!(
                "pullback by a {}x{} matrix",
                m.rows(),
                m.cols()
            )));
        }
        let map = |n: &RatVector| -> RatVector {
            RatVector(
                (0..m.cols())
                    .map(|j| {
                        n.0.iter()
                            .enumerate()
                            .map(|(i, a)| a * BigRational::from_integer(m[(i, j)].clone()))
                            .sum()
                    })
                    .collect(),
            )
        };
        Ok(Self {
            dim: m.cols(),
            ineqs: self
                .ineqs
                .iter()
                .map(|c| Inequality {
                    normal: map(&c.normal),
                    bound: c.bound.clone(),
                })
                .collect(),
            eqs: self
                .eqs
                .iter()
                .map(|e| Equation {
                    normal: map(&e.normal),
                    value: e.value.clone(),
                })
                .collect(),
        })
    }
}

impl fmt::Display for InequalitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system in dimension {}", self.dim)?;
        for c in &self.ineqs {
            writeln!(f, "  {} . x >= {}", c.normal, crate::exact::fmt_rational(&c.bound))?;
        }
        for e in &self.eqs {
            writeln!(f, "  {} . x = {}", e.normal, crate::exact::fmt_rational(&e.value))?;
        }
        Ok(())
    }
}

/// `x_var = constant + Σ coeffs[k]·x_free[k]`.
#[derive(Clone, Debug)]
struct Substitution {
    var: usize,
    constant: BigRational,
    coeffs: Vec<BigRational>,
}

/// A system after equality substitution and projection.
#[derive(Clone, Debug)]
struct Compiled {
    dim: usize,
    free: Vec<usize>,
    substitutions: Vec<Substitution>,
    chain: Chain,
    /// The equalities alone already rule out integer points.
    lattice_empty: bool,
}

impl Compiled {
    fn new(sys: &InequalitySystem) -> Compiled {
        Self::with_order(sys, None)
    }

    /// `order` lists the free coordinates in enumeration order (outermost
    /// first); by default they stay in ascending order.
    fn with_order(sys: &InequalitySystem, order: Option<&dyn Fn(&[usize]) -> Vec<usize>>) -> Compiled {
        let n = sys.dim;
        let mut lattice_empty = false;
        let mut rational_infeasible = false;

        // Affine rows over all n coordinates: (coeffs, constant) meaning coeffs·x - constant.
        let mut eqs: Vec<(Vec<BigRational>, BigRational)> =
            sys.eqs.iter().map(|e| (e.normal.0.clone(), e.value.clone())).collect();
        let mut ineqs: Vec<(Vec<BigRational>, BigRational)> = sys
            .ineqs
            .iter()
            .map(|c| (c.normal.0.clone(), c.bound.clone()))
            .collect();
        // Solved coordinates, each over all n coordinates (solved ones have zero coefficients).
        let mut solved: Vec<(usize, BigRational, Vec<BigRational>)> = Vec::new();

        loop {
            // Normalize equations and look for a unit pivot.
            let mut pivot = None;
            let mut keep = Vec::new();
            for (a, v) in eqs.drain(..) {
                let row = Row::normalized(&a, &v);
                if row.is_zero() {
                    if !row.b.is_zero() {
                        rational_infeasible = true;
                    }
                    continue;
                }
                if !row.b.is_integer() {
                    lattice_empty = true;
                }
                let a: Vec<BigRational> = row.a.iter().cloned().map(BigRational::from_integer).collect();
                keep.push((a, row.b));
            }
            for (ei, (a, _)) in keep.iter().enumerate() {
                if let Some(j) = (0..n).rev().find(|&j| a[j].abs().is_one()) {
                    pivot = Some((ei, j));
                    break;
                }
            }
            eqs = keep;
            let Some((ei, j)) = pivot else { break };
            let (a, v) = eqs.remove(ei);
            // x_j = (v - Σ_{k≠j} a_k x_k) / a_j
            let aj = a[j].clone();
            let constant = &v / &aj;
            let coeffs: Vec<BigRational> = (0..n)
                .map(|k| if k == j { BigRational::zero() } else { -&a[k] / &aj })
                .collect();
            let subst = |row: &mut (Vec<BigRational>, BigRational)| {
                let c = std::mem::take(&mut row.0[j]);
                if c.is_zero() {
                    return;
                }
                for k in 0..n {
                    if k != j {
                        let d = &c * &coeffs[k];
                        row.0[k] += d;
                    }
                }
                row.1 -= &c * &constant;
            };
            eqs.iter_mut().for_each(subst);
            ineqs.iter_mut().for_each(subst);
            for (_, sc, sv) in solved.iter_mut() {
                let c = std::mem::take(&mut sv[j]);
                if c.is_zero() {
                    continue;
                }
                for k in 0..n {
                    if k != j {
                        let d = &c * &coeffs[k];
                        sv[k] += d;
                    }
                }
                *sc += &c * &constant;
            }
            solved.push((j, constant, coeffs));
        }
        for (a, v) in eqs {
            let neg: Vec<BigRational> = a.iter().map(|x| -x).collect();
            ineqs.push((a, v.clone()));
            ineqs.push((neg, -v));
        }

        let solved_vars: Vec<usize> = solved.iter().map(|s| s.0).collect();
        let natural: Vec<usize> = (0..n).filter(|j| !solved_vars.contains(j)).collect();
        let free = match order {
            Some(f) => f(&natural),
            None => natural,
        };
        let restrict = |v: &[BigRational]| -> Vec<BigRational> { free.iter().map(|&j| v[j].clone()).collect() };

        let mut rows = RowSet::default();
        rows.infeasible = rational_infeasible;
        for (a, b) in &ineqs {
            rows.insert(Row::normalized(&restrict(a), b));
        }
        let chain = Chain::build(free.len(), rows);
        let substitutions = solved
            .into_iter()
            .map(|(var, constant, coeffs)| Substitution {
                var,
                constant,
                coeffs: restrict(&coeffs),
            })
            .collect();
        Compiled {
            dim: n,
            free,
            substitutions,
            chain,
            lattice_empty,
        }
    }

    fn rational_empty(&self) -> bool {
        self.chain.infeasible
    }

    fn bounded(&self) -> bool {
        self.rational_empty() || self.chain.one_sided_level().is_none()
    }

    /// Completes a point given on the free coordinates.
    fn expand(&self, free_vals: &[BigRational]) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); self.dim];
        for (k, &j) in self.free.iter().enumerate() {
            x[j] = free_vals[k].clone();
        }
        for s in &self.substitutions {
            x[s.var] = &s.constant + s.coeffs.iter().zip(free_vals).map(|(c, v)| c * v).sum::<BigRational>();
        }
        x
    }
}

/// True iff the feasible set is bounded. The empty set counts as bounded.
pub fn is_bounded(sys: &InequalitySystem) -> bool {
    Compiled::new(sys).bounded()
}

/// True iff the system has a rational solution.
pub fn is_feasible(sys: &InequalitySystem) -> bool {
    !Compiled::new(sys).rational_empty()
}

/// A nonzero primitive integer direction `d` with `x + t·d` feasible for all
/// `t ≥ 0` and feasible `x`, if the recession cone is nontrivial.
pub fn recession_ray(sys: &InequalitySystem) -> Option<Vec<BigInt>> {
    let hom = Compiled::new(&sys.recession_system());
    let (level, dir) = hom.chain.one_sided_level()?;
    let m = hom.free.len();
    let mut vals = vec![BigRational::zero(); m];
    vals[level - 1] = BigRational::from_integer(if dir < 0 { -1 } else { 1 }.into());
    for k in level + 1..=m {
        let (lo, hi) = hom.chain.interval(k, &vals[..k - 1]);
        vals[k - 1] = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => BigRational::zero(),
        };
    }
    let x = hom.expand(&vals);
    let l = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * &l).to_integer()).collect();
    Some(make_primitive(ints))
}

/// Integer arithmetic used by the enumerator, so the common case can run on
/// machine integers and fall back to big integers on overflow.
trait EnumInt: Clone + Ord + Integer + Signed + CheckedAdd + CheckedMul + CheckedSub {
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_i64(&self) -> Option<i64>;
    fn to_u128(&self) -> Option<u128>;
}

impl EnumInt for i128 {
    fn from_big(x: &BigInt) -> Option<Self> {
        // Leave headroom so that products with coordinates stay checkable.
        if x.bits() > 62 {
            return None;
        }
        x.to_i128()
    }
    fn to_i64(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
    fn to_u128(&self) -> Option<u128> {
        u128::try_from(*self).ok()
    }
}

impl EnumInt for BigInt {
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_i64(&self) -> Option<i64> {
        ToPrimitive::to_i64(self)
    }
    fn to_u128(&self) -> Option<u128> {
        ToPrimitive::to_u128(self)
    }
}

struct Overflow;

/// A level row `Σ a_j x_j ≥ b` with integer bound (rounded up, valid for
/// integer points since `a` is integral).
struct IntRow<T> {
    a: Vec<T>,
    b: T,
}

struct Enumerator<T> {
    levels: Vec<Vec<IntRow<T>>>,
}

enum Visit<'a> {
    Count(&'a mut u128),
    Collect(&'a mut Vec<Vec<i64>>),
}

impl<T: EnumInt> Enumerator<T> {
    fn new(chain: &Chain) -> Option<Self> {
        let mut levels = Vec::with_capacity(chain.levels.len());
        for rows in &chain.levels {
            let mut out = Vec::with_capacity(rows.len());
            for r in rows {
                let a = r.a.iter().map(T::from_big).collect::<Option<Vec<T>>>()?;
                let b = T::from_big(&ceil_rat(&r.b))?;
                out.push(IntRow { a, b });
            }
            levels.push(out);
        }
        Some(Self { levels })
    }

    fn interval(&self, k: usize, x: &[T]) -> Result<(T, T), Overflow> {
        let mut lo: Option<T> = None;
        let mut hi: Option<T> = None;
        for r in &self.levels[k] {
            let mut s = T::zero();
            for (a, v) in r.a[..k - 1].iter().zip(x) {
                s = s.checked_add(&a.checked_mul(v).ok_or(Overflow)?).ok_or(Overflow)?;
            }
            let rhs = r.b.checked_sub(&s).ok_or(Overflow)?;
            let c = &r.a[k - 1];
            if c.is_positive() {
                let v = rhs.div_ceil(c);
                if lo.as_ref().is_none_or(|l| v > *l) {
                    lo = Some(v);
                }
            } else {
                let v = rhs.div_floor(c);
                if hi.as_ref().is_none_or(|h| v < *h) {
                    hi = Some(v);
                }
            }
        }
        // Boundedness was checked before enumeration started.
        Ok((lo.expect("lower bound"), hi.expect("upper bound")))
    }

    fn run(&self, x: &mut Vec<T>, visit: &mut Visit<'_>) -> Result<(), Overflow> {
        let k = x.len() + 1;
        let m = self.levels.len() - 1;
        if k > m {
            if let Visit::Collect(out) = visit {
                let pt = x
                    .iter()
                    .map(|v| v.to_i64())
                    .collect::<Option<Vec<i64>>>()
                    .ok_or(Overflow)?;
                out.push(pt);
            } else if let Visit::Count(c) = visit {
                **c += 1;
            }
            return Ok(());
        }
        let (lo, hi) = self.interval(k, x)?;
        if lo > hi {
            return Ok(());
        }
        if k == m {
            if let Visit::Count(c) = visit {
                let width = hi.checked_sub(&lo).ok_or(Overflow)? + T::one();
                **c += width.to_u128().ok_or(Overflow)?;
                return Ok(());
            }
        }
        let mut v = lo;
        while v <= hi {
            x.push(v.clone());
            self.run(x, visit)?;
            x.pop();
            v = v + T::one();
        }
        Ok(())
    }
}

fn ceil_rat(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Enumerates the free coordinates, on machine integers when the data
/// allows it and on big integers otherwise.
fn enumerate_free(chain: &Chain, count_only: bool) -> Result<(u128, Vec<Vec<i64>>), PolyhedraError> {
    fn go<T: EnumInt>(e: &Enumerator<T>, count_only: bool) -> Result<(u128, Vec<Vec<i64>>), Overflow> {
        let mut count = 0u128;
        let mut points = Vec::new();
        let mut visit = if count_only {
            Visit::Count(&mut count)
        } else {
            Visit::Collect(&mut points)
        };
        e.run(&mut Vec::new(), &mut visit)?;
        let n = if count_only { count } else { points.len() as u128 };
        Ok((n, points))
    }
    if let Some(e) = Enumerator::<i128>::new(chain) {
        if let Ok(r) = go(&e, count_only) {
            return Ok(r);
        }
    }
    let e = Enumerator::<BigInt>::new(chain).expect("big integers always convert");
    go(&e, count_only).map_err(|_| PolyhedraError::CoordinateOverflow)
}

/// All integer points of a bounded system, ascending lexicographically.
pub fn enumerate_lattice_points(sys: &InequalitySystem) -> Result<LatticePointSet, PolyhedraError> {
    let c = Compiled::new(sys);
    if !c.bounded() {
        return Err(PolyhedraError::Unbounded);
    }
    let mut points = Vec::new();
    if !c.rational_empty() && !c.lattice_empty {
        let (_, free_pts) = enumerate_free(&c.chain, false)?;
        points.reserve(free_pts.len());
        for p in free_pts {
            let vals: Vec<BigRational> = p.iter().map(|&v| int_rat(v)).collect();
            let full = c.expand(&vals);
            let pt = full
                .iter()
                .map(|v| {
                    debug_assert!(v.is_integer());
                    ToPrimitive::to_i64(&v.to_integer())
                })
                .collect::<Option<Vec<i64>>>()
                .ok_or(PolyhedraError::CoordinateOverflow)?;
            points.push(pt);
        }
        points.sort();
    }
    Ok(LatticePointSet { dim: sys.dim, points })
}

/// Number of integer points of a bounded system, without listing them.
pub fn count_lattice_points(sys: &InequalitySystem) -> Result<u128, PolyhedraError> {
    let c = Compiled::new(sys);
    if !c.bounded() {
        return Err(PolyhedraError::Unbounded);
    }
    if c.rational_empty() || c.lattice_empty {
        return Ok(0);
    }
    Ok(enumerate_free(&c.chain, true)?.0)
}

/// Exact minimum and maximum of every coordinate over the feasible set.
pub fn bounding_box(sys: &InequalitySystem) -> Result<Vec<(BigRational, BigRational)>, PolyhedraError> {
    let base = Compiled::new(sys);
    if base.rational_empty() {
        return Err(PolyhedraError::Infeasible);
    }
    if !base.bounded() {
        return Err(PolyhedraError::Unbounded);
    }
    (0..sys.dim).map(|j| coordinate_range(sys, j)).collect()
}

/// Range of `x_j`: add a fresh coordinate `z` pinned to `x_j` by two
/// inequalities (so equality substitution never removes it), keep it
/// outermost and read off its projected interval.
fn coordinate_range(sys: &InequalitySystem, j: usize) -> Result<(BigRational, BigRational), PolyhedraError> {
    let n = sys.dim;
    let lift = |v: &RatVector| -> RatVector {
        let mut out = vec![BigRational::zero()];
        out.extend(v.0.iter().cloned());
        RatVector(out)
    };
    let mut lifted = InequalitySystem::new(n + 1);
    for c in &sys.ineqs {
        lifted.add_ge(lift(&c.normal), c.bound.clone())?;
    }
    for e in &sys.eqs {
        lifted.add_eq(lift(&e.normal), e.value.clone())?;
    }
    let mut link = vec![BigRational::zero(); n + 1];
    link[0] = BigRational::one();
    link[j + 1] = -BigRational::one();
    lifted.add_ge(RatVector(link.clone()), BigRational::zero())?;
    lifted.add_le(RatVector(link), BigRational::zero())?;
    let order = |free: &[usize]| -> Vec<usize> {
        let mut o = vec![0];
        o.extend(free.iter().copied().filter(|&f| f != 0));
        o
    };
    let c = Compiled::with_order(&lifted, Some(&order));
    let (lo, hi) = c.chain.interval(1, &[]);
    Ok((
        lo.ok_or(PolyhedraError::Unbounded)?,
        hi.ok_or(PolyhedraError::Unbounded)?,
    ))
}

/// Draws points approximately uniformly from the feasible set by rejection
/// from its bounding box.
pub fn sample_uniform(sys: &InequalitySystem, n_samples: usize, seed: u64) -> Result<SampleResult, PolyhedraError> {
    BoxSampler::new(sys)?.sample_accepted(n_samples, seed)
}
