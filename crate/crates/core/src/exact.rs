//! Exact integer and rational linear algebra.
//!
//! Everything here runs on arbitrary-precision integers. The main entry
//! points are [`hermite_upper_triangular`], which brings a nonsingular
//! square matrix into upper triangular form by unimodular row operations,
//! and [`positive_orthant_embedding`], which finds a unimodular change of
//! coordinates moving a pointed rational cone into the nonnegative orthant.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("cone is not pointed: facet normals have rank {rank} < dimension {dim}")]
    NotPointed { rank: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("embedding check failed: {0}")]
    EmbeddingCheckFailed(String),
}

/// Dense integer matrix, row-major, with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`; `cols`
    /// is needed explicitly so that matrices with zero rows keep their shape.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Result<Self, ExactError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(ExactError::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Shorthand for literal matrices in code and tests. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows(&owned, cols).expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_vec_i64(&self, v: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.mul_vec(&v)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<Self, ExactError> {
        if self.cols != other.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<Self, ExactError> {
        if self.rows != other.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(m)
    }

    /// Submatrix consisting of the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Self {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Inverse over the rationals.
    pub fn inverse_rational(&self) -> Result<Vec<Vec<BigRational>>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut r: Vec<BigRational> = self
                    .row(i)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect();
                r.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(ExactError::SingularMatrix)?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..2 * n {
                        let d = &f * &a[c][j];
                        a[i][j] -= d;
                    }
                }
            }
        }
        Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    /// Inverse of a unimodular matrix, as an integer matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, ExactError> {
        let inv = self.inverse_rational()?;
        let n = self.rows;
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if !inv[i][j].is_integer() {
                    return Err(ExactError::DimensionMismatch("matrix is not unimodular".into()));
                }
                m[(i, j)] = inv[i][j].to_integer();
            }
        }
        Ok(m)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut col_seen = vec![false; n];
        for i in 0..n {
            let mut ones = 0;
            for j in 0..n {
                let x = &self[(i, j)];
                if x.is_one() {
                    ones += 1;
                    if col_seen[j] {
                        return false;
                    }
                    col_seen[j] = true;
                } else if !x.is_zero() {
                    return false;
                }
            }
            if ones != 1 {
                return false;
            }
        }
        true
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i)).all(|j| self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Replaces rows `a`, `b` by `(p*a + q*b, r*a + s*b)`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = p * &x + q * &y;
            self[(b, j)] = r * &x + s * &y;
        }
    }

    /// Row `a` -= `f` * row `b`.
    fn sub_row_multiple(&mut self, a: usize, b: usize, f: &BigInt) {
        for j in 0..self.cols {
            let d = f * &self[(b, j)];
            self[(a, j)] -= d;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(a, j)]);
            self[(a, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut m = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    m[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}{}", self.rows, self.cols, self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Serializes as a list of integer rows. Entries that do not fit in `i64`
/// are written as decimal strings.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Value>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(bigint_to_json).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(deserializer)?;
        let parsed: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(bigint_from_json).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()
            .map_err(D::Error::custom)?;
        let cols = parsed.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(&parsed, cols).map_err(D::Error::custom)
    }
}

pub(crate) fn bigint_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(x.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("not an integer: {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s:?}")),
        other => Err(format!("not an integer: {other}")),
    }
}

/// A vector of exact rationals. `BigRational` keeps every entry in lowest
/// terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(pub Vec<BigRational>);

impl RatVector {
    pub fn zeros(dim: usize) -> Self {
        Self(vec![BigRational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        Self(v.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &RatVector) -> BigRational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rat_to_f64).collect()
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(x))?;
        }
        write!(f, ")")
    }
}

/// Formats a rational as `"p/q"`, always with an explicit denominator.
pub fn fmt_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or a plain integer.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn rat_to_f64(x: &BigRational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale down both parts; only reached for astronomically large values.
            let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
            let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Exact rank over the rationals via fraction-free Gaussian elimination.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.row_vecs();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (pivot, lead) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &pivot - &lead * &a[r][j];
                a[i][j] = v;
            }
            let g = a[i].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in a[i].iter_mut() {
                    *x /= &g;
                }
            }
        }
        r += 1;
    }
    r
}

/// Result of [`hermite_upper_triangular`]: `y == x * m * p`.
#[derive(Clone, Debug)]
pub struct HermiteDecomposition {
    pub x: IntMatrix,
    pub p: IntMatrix,
    pub y: IntMatrix,
}

/// Finds unimodular `X` and a permutation `P` such that `Y = X·M·P` is upper
/// triangular with positive diagonal.
///
/// Only row operations are used, so `P` is the identity for every
/// nonsingular input. `Y` is returned in reduced form: every entry above a
/// diagonal entry lies in `[0, Y_jj)`.
pub fn hermite_upper_triangular(m: &IntMatrix) -> Result<HermiteDecomposition, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.det()?.is_zero() {
        return Err(ExactError::SingularMatrix);
    }
    let n = m.rows();
    let mut y = m.clone();
    let mut x = IntMatrix::identity(n);
    for j in 0..n {
        if y[(j, j)].is_zero() {
            // det != 0 guarantees a pivot below.
            let p = (j + 1..n)
                .find(|&i| !y[(i, j)].is_zero())
                .ok_or(ExactError::SingularMatrix)?;
            y.swap_rows(j, p);
            x.swap_rows(j, p);
        }
        for i in j + 1..n {
            if y[(i, j)].is_zero() {
                continue;
            }
            let a = y[(j, j)].clone();
            let b = y[(i, j)].clone();
            let eg = a.extended_gcd(&b);
            let (u, v) = (&a / &eg.gcd, &b / &eg.gcd);
            // [[x, y], [-v, u]] has determinant 1.
            y.combine_rows(j, i, &eg.x, &eg.y, &-&v, &u);
            x.combine_rows(j, i, &eg.x, &eg.y, &-&v, &u);
        }
        if y[(j, j)].is_negative() {
            y.negate_row(j);
            x.negate_row(j);
        }
        for i in 0..j {
            let q = y[(i, j)].div_floor(&y[(j, j)]);
            if !q.is_zero() {
                y.sub_row_multiple(i, j, &q);
                x.sub_row_multiple(i, j, &q);
            }
        }
    }
    Ok(HermiteDecomposition {
        x,
        p: IntMatrix::identity(n),
        y,
    })
}

/// Indices of the lexicographically first maximal set of linearly
/// independent rows.
pub fn first_independent_rows(m: &IntMatrix) -> Vec<usize> {
    let mut chosen = Vec::new();
    for i in 0..m.rows() {
        let mut trial = chosen.clone();
        trial.push(i);
        if rank(&m.select_rows(&trial)) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

/// Intermediate objects of the positive-orthant construction, kept for
/// inspection and reporting.
#[derive(Clone, Debug)]
pub struct OrthantEmbedding {
    /// Unimodular `A` with `A·C ⊆ R₊ⁿ`.
    pub a: IntMatrix,
    /// Rows of the facet-normal matrix spanning the simplicial over-cone.
    pub chosen_rows: Vec<usize>,
    /// Integral generators (columns) of the simplicial over-cone.
    pub over_cone_generators: IntMatrix,
    pub hermite: HermiteDecomposition,
    /// The integral unipotent minorant `Y''` of `Y' = Y·D⁻¹`.
    pub unipotent_floor: IntMatrix,
}

/// Unimodular `A` with `A·C ⊆ R₊ⁿ` for the pointed cone
/// `C = {x : facet_normals·x ≥ 0}`.
///
/// The cone is enclosed in the simplicial cone cut out by the first `n`
/// independent facet normals; its integral generators `B` are brought to
/// upper triangular `Y = X·B·P`, `Y` is split as `Y'·D`, and
/// `A = Y''⁻¹·X` where `Y''` is the entrywise floor of `Y'`.
pub fn positive_orthant_embedding(facet_normals: &IntMatrix) -> Result<IntMatrix, ExactError> {
    positive_orthant_embedding_detailed(facet_normals).map(|e| e.a)
}

pub fn positive_orthant_embedding_detailed(facet_normals: &IntMatrix) -> Result<OrthantEmbedding, ExactError> {
    let n = facet_normals.cols();
    let r = rank(facet_normals);
    if r < n {
        return Err(ExactError::NotPointed { rank: r, dim: n });
    }
    let chosen = first_independent_rows(facet_normals);
    let y0 = facet_normals.select_rows(&chosen);
    // {x : Y0 x >= 0} = Y0^{-1} R+^n; its generators are the columns of Y0^{-1}.
    let inv = y0.inverse_rational()?;
    let mut b = IntMatrix::zeros(n, n);
    for j in 0..n {
        let col: Vec<BigRational> = (0..n).map(|i| inv[i][j].clone()).collect();
        let prim = primitive_integer_direction(&col);
        for i in 0..n {
            b[(i, j)] = prim[i].clone();
        }
    }
    let hermite = hermite_upper_triangular(&b)?;
    let y = &hermite.y;
    let mut y2 = IntMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            y2[(i, j)] = y[(i, j)].div_floor(&y[(j, j)]);
        }
    }
    let a = &y2.inverse_unimodular()? * &hermite.x;

    if !a.is_unimodular() {
        return Err(ExactError::EmbeddingCheckFailed(format!("det A != ±1 for A = {a}")));
    }
    let image = &a * &b;
    if image.data.iter().any(|v| v.is_negative()) {
        return Err(ExactError::EmbeddingCheckFailed(format!(
            "A maps an over-cone generator outside the orthant: A·B = {image}"
        )));
    }
    Ok(OrthantEmbedding {
        a,
        chosen_rows: chosen,
        over_cone_generators: b,
        hermite,
        unipotent_floor: y2,
    })
}

/// Scales a rational direction to a primitive integer vector, keeping its sign.
pub fn primitive_integer_direction(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    make_primitive(ints)
}

pub fn make_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Extreme rays of the pointed cone `{x : normals·x ≥ 0}` by brute force over
/// `(n-1)`-subsets of normals. Returns primitive generators in a fixed order;
/// empty if the cone is `{0}`.
pub fn cone_generators(normals: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = normals.cols();
    let m = normals.rows();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut push = |g: Vec<BigInt>| {
        if !out.contains(&g) {
            out.push(g);
        }
    };
    let satisfies = |g: &[BigInt]| normals.mul_vec(g).iter().all(|v| !v.is_negative());
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        for s in [1i64, -1] {
            let g = vec![BigInt::from(s)];
            if satisfies(&g) {
                push(g);
            }
        }
        return out;
    }
    for subset in combinations(m, n - 1) {
        let sub = normals.select_rows(&subset);
        if rank(&sub) != n - 1 {
            continue;
        }
        // Generalized cross product spans the kernel of `sub`.
        let d: Vec<BigInt> = (0..n)
            .map(|j| {
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let mut minor = IntMatrix::zeros(n - 1, n - 1);
                for (ri, _) in subset.iter().enumerate() {
                    for (ci, &c) in cols.iter().enumerate() {
                        minor[(ri, ci)] = sub[(ri, c)].clone();
                    }
                }
                let det = minor.det().expect("square minor");
                if j % 2 == 0 {
                    det
                } else {
                    -det
                }
            })
            .collect();
        let d = make_primitive(d);
        for g in [d.clone(), d.iter().map(|x| -x).collect::<Vec<_>>()] {
            if satisfies(&g) {
                push(g);
            }
        }
    }
    out
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
