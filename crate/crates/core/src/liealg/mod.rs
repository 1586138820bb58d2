//! Finite-type root data and the representation-theoretic oracles built on
//! it: Freudenthal multiplicities, the Weyl dimension formula, Demazure
//! characters and tensor product decomposition.
//!
//! Weights are stored in fundamental-weight coordinates `(⟨α_i^∨, μ⟩)_i`,
//! roots in simple-root coordinates. Simple indices are 1-based in words and
//! user-facing text and 0-based in vectors.

mod characters;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::IntMatrix;

pub use characters::{
    demazure_character, freudenthal, freudenthal_with_cap, tensor_decompose, tensor_decompose_with_cap, weyl_dimension,
    Caps, WeightFunction, DEFAULT_MODULE_CAP, DEFAULT_TENSOR_CAP,
};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("invalid generalized Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("word {0} is not reduced")]
    NotReduced(WeylWord),
    #[error("letter {letter} out of range for rank {rank}")]
    BadLetter { letter: usize, rank: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: u128, cap: u128 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A word `s_{i_1} ⋯ s_{i_l}` in the simple reflections, letters 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, k: usize) -> WeylWord {
        WeylWord(self.0[..k].to_vec())
    }

    /// 0-based letters.
    pub fn indices(&self) -> impl ExactSizeIterator<Item = usize> + DoubleEndedIterator + '_ {
        self.0.iter().map(|&i| i - 1)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for WeylWord {
    type Err = String;
    /// Comma- or space-separated letters; the empty string is the identity.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(WeylWord(Vec::new()));
        }
        t.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| format!("bad letter {x:?}"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(WeylWord)
    }
}

/// A symmetrizable generalized Cartan matrix `a_ij = ⟨α_i^∨, α_j⟩` with an
/// optional type label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    a: Vec<Vec<i64>>,
    type_tag: Option<String>,
    /// Positive integers with `d_i a_ij = d_j a_ji`.
    symmetrizer: Vec<i64>,
    finite: bool,
    /// `a⁻¹ = inverse_num / inverse_den` when `a` is nonsingular.
    inverse_num: Option<Vec<Vec<i64>>>,
    inverse_den: i64,
}

/// JSON form `{"cartan": rows, "type": label}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanFile {
    pub cartan: Vec<Vec<i64>>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_tag: Option<String>,
}

impl CartanData {
    pub fn new(a: Vec<Vec<i64>>, type_tag: Option<String>) -> Result<Self, LieError> {
        let n = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(LieError::InvalidCartan(format!(
                    "row {} has length {}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(LieError::InvalidCartan(format!("a_{0}{0} = {1} != 2", i + 1, row[i])));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && v > 0 {
                    return Err(LieError::InvalidCartan(format!("a_{}{} = {v} > 0", i + 1, j + 1)));
                }
                if (v == 0) != (a[j][i] == 0) {
                    return Err(LieError::InvalidCartan(format!(
                        "a_{}{} and a_{}{} do not vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let symmetrizer = symmetrize(&a)?;
        let sym: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(BigInt::from(symmetrizer[i] * a[i][j])))
                    .collect()
            })
            .collect();
        let finite = positive_definite(&sym);
        let (inverse_num, inverse_den) = integer_inverse(&a);
        Ok(Self {
            a,
            type_tag,
            symmetrizer,
            finite,
            inverse_num,
            inverse_den,
        })
    }

    /// Cartan matrix of a named type: `A<n>`, `B<n>`, `C<n>`, `D<n>`, `G2`
    /// or products such as `A1xA1`.
    ///
    /// In `B<n>` the last simple root is short (`a_{n-1,n} = -1`,
    /// `a_{n,n-1} = -2`); `C<n>` is the transpose.
    pub fn from_type(name: &str) -> Result<Self, LieError> {
        let blocks: Vec<Vec<Vec<i64>>> = name
            .split(['x', 'X', '*'])
            .map(|t| simple_type(t.trim()).ok_or_else(|| LieError::UnknownType(name.to_string())))
            .collect::<Result<_, _>>()?;
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut a = vec![vec![0i64; n]; n];
        let mut off = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    a[off + i][off + j] = v;
                }
            }
            off += b.len();
        }
        let tag = name
            .split(['x', 'X', '*'])
            .map(|t| t.trim().to_uppercase())
            .collect::<Vec<_>>()
            .join("x");
        Self::new(a, Some(tag))
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.a, self.rank()).expect("square")
    }

    pub fn type_tag(&self) -> Option<&str> {
        self.type_tag.as_deref()
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn is_finite_type(&self) -> bool {
        self.finite
    }

    pub fn require_finite(&self) -> Result<(), LieError> {
        if self.finite {
            Ok(())
        } else {
            Err(LieError::NotFiniteType)
        }
    }

    /// Transposed matrix, with `B` and `C` labels exchanged.
    pub fn langlands_dual(&self) -> CartanData {
        let n = self.rank();
        let at: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| self.a[j][i]).collect()).collect();
        let tag = self.type_tag.as_ref().map(|t| {
            t.chars()
                .map(|c| match c {
                    'B' => 'C',
                    'C' => 'B',
                    c => c,
                })
                .collect()
        });
        CartanData::new(at, tag).expect("transpose of a valid matrix")
    }

    pub fn to_file(&self) -> CartanFile {
        CartanFile {
            cartan: self.a.clone(),
            type_tag: self.type_tag.clone(),
        }
    }

    pub fn from_file(f: &CartanFile) -> Result<Self, LieError> {
        Self::new(f.cartan.clone(), f.type_tag.clone())
    }

    fn check_weight(&self, mu: &[i64]) -> Result<(), LieError> {
        if mu.len() != self.rank() {
            return Err(LieError::DimensionMismatch(format!(
                "weight has {} coordinates, rank is {}",
                mu.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn check_word(&self, w: &WeylWord) -> Result<(), LieError> {
        match w.0.iter().find(|&&i| i == 0 || i > self.rank()) {
            Some(&letter) => Err(LieError::BadLetter {
                letter,
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// Simple root `α_j` in fundamental-weight coordinates: column `j`.
    pub fn simple_root_weight(&self, j: usize) -> Vec<i64> {
        (0..self.rank()).map(|i| self.a[i][j]).collect()
    }

    /// `Σ_j β_j α_j` in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.a[i][j] * beta[j]).sum())
            .collect()
    }

    /// Simple-root coordinates of a weight in the root lattice.
    pub fn weight_to_root(&self, mu: &[i64]) -> Option<Vec<i64>> {
        let inv = self.inverse_num.as_ref()?;
        inv.iter()
            .map(|row| {
                let v: i64 = row.iter().zip(mu).map(|(a, b)| a * b).sum();
                (v % self.inverse_den == 0).then(|| v / self.inverse_den)
            })
            .collect()
    }

    /// `(μ, β)` for a weight `μ` and a root-lattice element `β`, in the
    /// normalization `(α_i, α_i) = 2 d_i`.
    pub fn pair_weight_root(&self, mu: &[i64], beta: &[i64]) -> i64 {
        (0..self.rank()).map(|j| beta[j] * mu[j] * self.symmetrizer[j]).sum()
    }

    /// `(β, γ)` on the root lattice.
    pub fn pair_roots(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta[i] * gamma[j] * self.symmetrizer[i] * self.a[i][j];
            }
        }
        s
    }

    /// `s_i μ = μ - μ_i α_i` on weights (0-based `i`).
    pub fn reflect_weight(&self, i: usize, mu: &[i64]) -> Vec<i64> {
        let k = mu[i];
        mu.iter().enumerate().map(|(r, &m)| m - k * self.a[r][i]).collect()
    }

    /// `s_i β = β - ⟨α_i^∨, β⟩ α_i` on roots (0-based `i`).
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let k: i64 = (0..self.rank()).map(|j| self.a[i][j] * beta[j]).sum();
        let mut out = beta.to_vec();
        out[i] -= k;
        out
    }

    /// `w(μ)` for `w = s_{i_1} ⋯ s_{i_l}`.
    pub fn act_on_weight(&self, w: &WeylWord, mu: &[i64]) -> Vec<i64> {
        w.indices().rev().fold(mu.to_vec(), |m, i| self.reflect_weight(i, &m))
    }

    pub fn act_on_root(&self, w: &WeylWord, beta: &[i64]) -> Vec<i64> {
        w.indices().rev().fold(beta.to_vec(), |b, i| self.reflect_root(i, &b))
    }

    /// `ρ = (1, …, 1)`.
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// Dominant element of the Weyl orbit of `μ`.
    pub fn dominant_conjugate(&self, mu: &[i64]) -> Vec<i64> {
        let mut m = mu.to_vec();
        while let Some(i) = m.iter().position(|&x| x < 0) {
            m = self.reflect_weight(i, &m);
        }
        m
    }

    /// All positive roots, ordered by height and then lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<Vec<i64>>, LieError> {
        self.require_finite()?;
        let n = self.rank();
        let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for b in &frontier {
                for i in 0..n {
                    let r = self.reflect_root(i, b);
                    if r.iter().all(|&x| x >= 0) && !roots.contains(&r) {
                        roots.push(r.clone());
                        next.push(r);
                    }
                }
            }
            frontier = next;
        }
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        Ok(roots)
    }

    /// A reduced word for the longest element: starting from `ρ`, reflect in
    /// the first simple root with positive pairing until `-ρ` is reached.
    pub fn longest_word(&self) -> Result<WeylWord, LieError> {
        self.require_finite()?;
        let mut mu = self.rho();
        let mut word = Vec::new();
        while let Some(i) = mu.iter().position(|&x| x > 0) {
            mu = self.reflect_weight(i, &mu);
            word.push(i + 1);
        }
        Ok(WeylWord(word))
    }

    /// `ℓ(w s_i) > ℓ(w)` iff `w(α_i) > 0`, checked for every prefix.
    pub fn is_reduced(&self, w: &WeylWord) -> Result<bool, LieError> {
        self.require_finite()?;
        self.check_word(w)?;
        let n = self.rank();
        for k in 0..w.len() {
            let i = w.0[k] - 1;
            let alpha: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
            let image = self.act_on_root(&w.prefix(k), &alpha);
            if image.iter().any(|&x| x < 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require_reduced(&self, w: &WeylWord) -> Result<(), LieError> {
        if self.is_reduced(w)? {
            Ok(())
        } else {
            Err(LieError::NotReduced(w.clone()))
        }
    }

    /// Two words give the same Weyl group element iff they move `ρ` alike.
    pub fn same_element(&self, v: &WeylWord, w: &WeylWord) -> bool {
        self.act_on_weight(v, &self.rho()) == self.act_on_weight(w, &self.rho())
    }

    /// True iff `w` represents the longest element.
    pub fn is_longest(&self, w: &WeylWord) -> bool {
        let neg: Vec<i64> = self.rho().iter().map(|x| -x).collect();
        self.act_on_weight(w, &self.rho()) == neg
    }

    /// `μ` is a weight of `V(λ)` iff `λ - dom(μ)` is a nonnegative
    /// combination of simple roots.
    pub fn is_weight_of(&self, lambda: &[i64], mu: &[i64]) -> bool {
        let dom = self.dominant_conjugate(mu);
        let diff: Vec<i64> = lambda.iter().zip(&dom).map(|(a, b)| a - b).collect();
        self.weight_to_root(&diff).is_some_and(|b| b.iter().all(|&x| x >= 0))
    }

    pub fn require_dominant(&self, lambda: &[i64]) -> Result<(), LieError> {
        self.check_weight(lambda)?;
        if lambda.iter().any(|&x| x < 0) {
            return Err(LieError::NotDominant(lambda.to_vec()));
        }
        Ok(())
    }
}

impl Serialize for CartanData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CartanData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = CartanFile::deserialize(d)?;
        CartanData::from_file(&f).map_err(serde::de::Error::custom)
    }
}

fn simple_type(t: &str) -> Option<Vec<Vec<i64>>> {
    let t = t.to_uppercase();
    let (letter, rest) = t.split_at(1);
    let n: usize = rest.parse().ok()?;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match letter {
        "A" if n >= 1 => chain(&mut a, n),
        "B" if n >= 2 => {
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        "C" if n >= 2 => {
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        "D" if n >= 4 => {
            chain(&mut a, n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        "G" if n == 2 => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
        _ => return None,
    }
    Some(a)
}

/// `(adj, det)` with `a⁻¹ = adj / det` and `det > 0`, or `None` if singular.
fn integer_inverse(a: &[Vec<i64>]) -> (Option<Vec<Vec<i64>>>, i64) {
    let m = IntMatrix::from_rows(a, a.len()).expect("square");
    let det = m.det().expect("square");
    let Ok(inv) = m.inverse_rational() else {
        return (None, 1);
    };
    let det = det.abs();
    let rows = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    (x * BigRational::from_integer(det.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("small")
                })
                .collect()
        })
        .collect();
    (Some(rows), det.to_i64().expect("small determinant"))
}

/// Positive integers `d` with `d_i a_ij = d_j a_ji`, smallest per component.
fn symmetrize(a: &[Vec<i64>]) -> Result<Vec<i64>, LieError> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::from_integer(1.into()));
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = d[i].clone().unwrap() * BigRational::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(LieError::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        components.push(comp);
    }
    let mut out = vec![0i64; n];
    for comp in components {
        let l = comp.iter().fold(BigInt::from(1), |l, &i| {
            num_integer::Integer::lcm(&l, d[i].as_ref().unwrap().denom())
        });
        let ints: Vec<BigInt> = comp
            .iter()
            .map(|&i| (d[i].as_ref().unwrap() * &l).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
        for (&i, v) in comp.iter().zip(ints) {
            out[i] = num_traits::ToPrimitive::to_i64(&(v / &g).abs()).expect("small symmetrizer");
        }
    }
    Ok(out)
}

/// Sylvester's criterion on leading principal minors.
fn positive_definite(m: &[Vec<BigRational>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    // Gaussian elimination without pivoting: all pivots positive iff
    // every leading minor is positive.
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
        }
    }
    true
}
