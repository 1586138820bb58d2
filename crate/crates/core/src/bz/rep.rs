//! Explicit fundamental representations of the Langlands dual algebra.
//!
//! Minuscule representations use the orbit model: one basis vector per
//! weight of the Weyl orbit, `e_i v_μ = v_{μ+α_i}` when `μ_i = -1` and
//! `f_i v_μ = v_{μ-α_i}` when `μ_i = 1`. The remaining rank-two case is cut
//! out of the exterior square of a minuscule representation as the
//! submodule generated by its highest weight vector.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::BzError;
use crate::liealg::{freudenthal, weyl_dimension, CartanData, WeylWord};

/// Dense matrix over the rationals, row-major.
pub type RatMatrix = Vec<Vec<BigRational>>;

/// A finite-dimensional module with a weight basis and the actions of the
/// Chevalley generators.
#[derive(Clone, Debug, PartialEq)]
pub struct RepModule {
    cd: CartanData,
    highest_weight: Vec<i64>,
    basis_weights: Vec<Vec<i64>>,
    raising: Vec<RatMatrix>,
    lowering: Vec<RatMatrix>,
}

impl RepModule {
    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn highest_weight(&self) -> &[i64] {
        &self.highest_weight
    }

    pub fn dim(&self) -> usize {
        self.basis_weights.len()
    }

    pub fn basis_weights(&self) -> &[Vec<i64>] {
        &self.basis_weights
    }

    /// Matrix of `e_i` (0-based `i`).
    pub fn raising(&self, i: usize) -> &RatMatrix {
        &self.raising[i]
    }

    pub fn lowering(&self, i: usize) -> &RatMatrix {
        &self.lowering[i]
    }

    /// Basis indices of the `μ`-weight space.
    pub fn weight_space(&self, mu: &[i64]) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.basis_weights[k] == mu).collect()
    }

    pub fn has_weight(&self, mu: &[i64]) -> bool {
        self.basis_weights.iter().any(|w| w == mu)
    }

    /// `e_{i_1}^{c_1} ⋯ e_{i_l}^{c_l} v` for a basis vector `v`.
    pub fn apply_word(&self, word: &WeylWord, exps: &[u32], v: &[BigRational]) -> Vec<BigRational> {
        let mut x = v.to_vec();
        for (i, &c) in word.indices().zip(exps).rev() {
            for _ in 0..c {
                x = mat_vec(&self.raising[i], &x);
            }
        }
        x
    }

    /// Checks the weight grading of `e_i, f_i`, the relations
    /// `[e_i, f_j] = δ_ij h_i`, and the character against Freudenthal.
    pub fn verify(&self) -> Result<(), BzError> {
        let n = self.cd.rank();
        let d = self.dim();
        let fail = |m: String| Err(BzError::RepresentationCheck(m));
        for i in 0..n {
            let alpha = self.cd.simple_root_weight(i);
            for (name, m, sign) in [("e", &self.raising[i], 1), ("f", &self.lowering[i], -1)] {
                for r in 0..d {
                    for c in 0..d {
                        if m[r][c].is_zero() {
                            continue;
                        }
                        let target: Vec<i64> = self.basis_weights[c]
                            .iter()
                            .zip(&alpha)
                            .map(|(a, b)| a + sign * b)
                            .collect();
                        if self.basis_weights[r] != target {
                            return fail(format!("{name}_{} breaks the weight grading", i + 1));
                        }
                    }
                }
            }
            for j in 0..n {
                let ef = mat_mul(&self.raising[i], &self.lowering[j]);
                let fe = mat_mul(&self.lowering[j], &self.raising[i]);
                for r in 0..d {
                    for c in 0..d {
                        let lhs = &ef[r][c] - &fe[r][c];
                        let rhs = if i == j && r == c {
                            BigRational::from_integer(self.basis_weights[r][i].into())
                        } else {
                            BigRational::zero()
                        };
                        if lhs != rhs {
                            return fail(format!("[e_{}, f_{}] is wrong", i + 1, j + 1));
                        }
                    }
                }
            }
        }
        let expected = freudenthal(&self.cd, &self.highest_weight)?;
        let mut actual: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for w in &self.basis_weights {
            *actual.entry(w.clone()).or_insert(0) += 1;
        }
        if actual != expected.into_map() {
            return fail("weights differ from the Freudenthal character".into());
        }
        Ok(())
    }
}

/// `V(ω_i)` for the algebra with Cartan data `dual` (0-based `i`), built
/// and verified.
pub fn fundamental_module(dual: &CartanData, i: usize) -> Result<RepModule, BzError> {
    dual.require_finite()?;
    let n = dual.rank();
    let mut omega = vec![0i64; n];
    omega[i] = 1;
    let rep = if let Some(rep) = orbit_model(dual, &omega)? {
        rep
    } else {
        exterior_square_model(dual, &omega)?.ok_or_else(|| unsupported(dual))?
    };
    rep.verify()?;
    Ok(rep)
}

fn unsupported(cd: &CartanData) -> BzError {
    BzError::UnsupportedType(
        cd.type_tag()
            .map_or_else(|| format!("{:?}", cd.matrix()), str::to_string),
    )
}

/// Orbit model for a minuscule weight, `None` if `omega` is not minuscule.
fn orbit_model(cd: &CartanData, omega: &[i64]) -> Result<Option<RepModule>, BzError> {
    let dim = weyl_dimension(cd, omega)?;
    let n = cd.rank();
    let mut orbit = vec![omega.to_vec()];
    let mut k = 0;
    while k < orbit.len() {
        for i in 0..n {
            let w = cd.reflect_weight(i, &orbit[k]);
            if !orbit.contains(&w) {
                orbit.push(w);
            }
        }
        k += 1;
        if orbit.len() as u128 > dim {
            return Ok(None);
        }
    }
    if orbit.len() as u128 != dim {
        return Ok(None);
    }
    sort_by_depth(cd, omega, &mut orbit);
    let d = orbit.len();
    let index: BTreeMap<Vec<i64>, usize> = orbit.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
    let mut raising = vec![zero_matrix(d); n];
    let mut lowering = vec![zero_matrix(d); n];
    let alpha: Vec<Vec<i64>> = (0..n).map(|i| cd.simple_root_weight(i)).collect();
    for (c, mu) in orbit.iter().enumerate() {
        for i in 0..n {
            if mu[i] == -1 {
                let up: Vec<i64> = mu.iter().zip(&alpha[i]).map(|(a, b)| a + b).collect();
                raising[i][index[&up]][c] = BigRational::one();
            }
            if mu[i] == 1 {
                let down: Vec<i64> = mu.iter().zip(&alpha[i]).map(|(a, b)| a - b).collect();
                lowering[i][index[&down]][c] = BigRational::one();
            }
        }
    }
    Ok(Some(RepModule {
        cd: cd.clone(),
        highest_weight: omega.to_vec(),
        basis_weights: orbit,
        raising,
        lowering,
    }))
}

/// Submodule of `Λ² V(ω_m)` generated by `v ∧ f_m v` for a minuscule
/// `ω_m` with `2ω_m - α_m = omega`.
fn exterior_square_model(cd: &CartanData, omega: &[i64]) -> Result<Option<RepModule>, BzError> {
    let n = cd.rank();
    for m in 0..n {
        let mut om = vec![0i64; n];
        om[m] = 1;
        let alpha = cd.simple_root_weight(m);
        let top: Vec<i64> = om.iter().zip(&alpha).map(|(a, b)| 2 * a - b).collect();
        if top != omega {
            continue;
        }
        let Some(base) = orbit_model(cd, &om)? else {
            continue;
        };
        return Ok(Some(generated_submodule(cd, omega, &base, m)));
    }
    Ok(None)
}

fn generated_submodule(cd: &CartanData, omega: &[i64], base: &RepModule, m: usize) -> RepModule {
    let n = cd.rank();
    let d = base.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
    let pair_index: BTreeMap<(usize, usize), usize> = pairs.iter().copied().enumerate().map(|(k, p)| (p, k)).collect();
    let pair_weight = |k: usize| -> Vec<i64> {
        let (a, b) = pairs[k];
        base.basis_weights[a]
            .iter()
            .zip(&base.basis_weights[b])
            .map(|(x, y)| x + y)
            .collect()
    };
    // X(v_a ∧ v_b) = X v_a ∧ v_b + v_a ∧ X v_b.
    let act = |x: &RatMatrix, v: &[BigRational]| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); pairs.len()];
        for (k, coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (a, b) = pairs[k];
            for r in 0..d {
                for (src, other, first) in [(a, b, true), (b, a, false)] {
                    let t = &x[r][src];
                    if t.is_zero() || r == other {
                        continue;
                    }
                    // v_r takes the place of v_src; reorder to an increasing pair.
                    let s = if (first && r < other) || (!first && r > other) {
                        1
                    } else {
                        -1
                    };
                    let key = (r.min(other), r.max(other));
                    out[pair_index[&key]] += coef * t * BigRational::from_integer(s.into());
                }
            }
        }
        out
    };

    let hw_index = 0;
    let fv = mat_vec(&base.lowering[m], &unit(d, hw_index));
    let partner = fv.iter().position(|x| !x.is_zero()).expect("f_m v is nonzero");
    let mut start = vec![BigRational::zero(); pairs.len()];
    let (lo, hi) = (hw_index.min(partner), hw_index.max(partner));
    start[pair_index[&(lo, hi)]] = if hw_index < partner {
        fv[partner].clone()
    } else {
        -fv[partner].clone()
    };

    // Breadth-first closure under the f_j, keeping a basis per weight.
    let weight_of = |v: &[BigRational]| -> Vec<i64> {
        let k = v.iter().position(|x| !x.is_zero()).expect("nonzero vector");
        pair_weight(k)
    };
    let mut vectors: Vec<Vec<BigRational>> = vec![start];
    let mut weights: Vec<Vec<i64>> = vec![omega.to_vec()];
    let mut k = 0;
    while k < vectors.len() {
        for j in 0..n {
            let v = act(&base.lowering[j], &vectors[k]);
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let w = weight_of(&v);
            let same: Vec<Vec<BigRational>> = (0..vectors.len())
                .filter(|&t| weights[t] == w)
                .map(|t| vectors[t].clone())
                .collect();
            if solve_in_span(&same, &v).is_none() {
                vectors.push(v);
                weights.push(w);
            }
        }
        k += 1;
    }

    let dim = vectors.len();
    let express = |x: &RatMatrix| -> RatMatrix {
        let mut out = zero_matrix(dim);
        for c in 0..dim {
            let v = act(x, &vectors[c]);
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let w = weight_of(&v);
            let idx: Vec<usize> = (0..dim).filter(|&t| weights[t] == w).collect();
            let span: Vec<Vec<BigRational>> = idx.iter().map(|&t| vectors[t].clone()).collect();
            let coeffs = solve_in_span(&span, &v).expect("submodule is stable");
            for (t, cf) in idx.into_iter().zip(coeffs) {
                out[t][c] = cf;
            }
        }
        out
    };
    let raising = (0..n).map(|i| express(&base.raising[i])).collect();
    let lowering = (0..n).map(|i| express(&base.lowering[i])).collect();
    RepModule {
        cd: cd.clone(),
        highest_weight: omega.to_vec(),
        basis_weights: weights,
        raising,
        lowering,
    }
}

fn sort_by_depth(cd: &CartanData, top: &[i64], ws: &mut [Vec<i64>]) {
    ws.sort_by_key(|w| {
        let diff: Vec<i64> = top.iter().zip(w).map(|(a, b)| a - b).collect();
        let h: i64 = cd.weight_to_root(&diff).expect("weights lie in top - Q").iter().sum();
        (h, std::cmp::Reverse(w.clone()))
    });
}

pub(crate) fn zero_matrix(d: usize) -> RatMatrix {
    vec![vec![BigRational::zero(); d]; d]
}

pub(crate) fn unit(d: usize, k: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); d];
    v[k] = BigRational::one();
    v
}

pub(crate) fn mat_vec(m: &RatMatrix, v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let d = a.len();
    (0..d)
        .map(|r| (0..d).map(|c| (0..d).map(|k| &a[r][k] * &b[k][c]).sum()).collect())
        .collect()
}

/// Coefficients expressing `v` in the span of `basis` (assumed
/// independent), or `None` if `v` lies outside it.
fn solve_in_span(basis: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let len = v.len();
    // Augmented system: columns are basis vectors, right side v.
    let mut a: Vec<Vec<BigRational>> = (0..len)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..len).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..len {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=k {
                    let t = &f * &a[row][c];
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = a[r][k].clone();
    }
    Some(out)
}
