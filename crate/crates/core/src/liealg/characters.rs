//! Characters as weight-multiplicity tables.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{CartanData, LieError, WeylWord};

pub const DEFAULT_MODULE_CAP: u128 = 10_000;
pub const DEFAULT_TENSOR_CAP: u128 = 1_000_000;

/// Dimension limits for [`freudenthal_with_cap`] and
/// [`tensor_decompose_with_cap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub module: u128,
    pub tensor: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            module: DEFAULT_MODULE_CAP,
            tensor: DEFAULT_TENSOR_CAP,
        }
    }
}

/// Finitely supported integer function on weights; zero values are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightFunction {
    values: BTreeMap<Vec<i64>, i64>,
}

impl WeightFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(mu: Vec<i64>) -> Self {
        let mut f = Self::new();
        f.add(mu, 1);
        f
    }

    pub fn get(&self, mu: &[i64]) -> i64 {
        self.values.get(mu).copied().unwrap_or(0)
    }

    pub fn add(&mut self, mu: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        match self.values.get_mut(&mu) {
            Some(e) => {
                *e += c;
                if *e == 0 {
                    self.values.remove(&mu);
                }
            }
            None => {
                self.values.insert(mu, c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.values.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of all values; the dimension for a character.
    pub fn total(&self) -> i64 {
        self.values.values().sum()
    }

    pub fn into_map(self) -> BTreeMap<Vec<i64>, i64> {
        self.values
    }

    /// Header `w1,…,wn,multiplicity`, one row per weight.
    pub fn to_csv(&self, rank: usize) -> String {
        let mut s = String::new();
        let header: Vec<String> = (1..=rank).map(|i| format!("w{i}")).collect();
        writeln!(s, "{},multiplicity", header.join(",")).unwrap();
        for (mu, m) in self.iter() {
            let coords: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
            writeln!(s, "{},{m}", coords.join(",")).unwrap();
        }
        s
    }
}

impl FromIterator<(Vec<i64>, i64)> for WeightFunction {
    fn from_iter<I: IntoIterator<Item = (Vec<i64>, i64)>>(iter: I) -> Self {
        let mut f = Self::new();
        for (k, v) in iter {
            f.add(k, v);
        }
        f
    }
}

/// `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(cd: &CartanData, lambda: &[i64]) -> Result<u128, LieError> {
    cd.require_finite()?;
    cd.require_dominant(lambda)?;
    let lr: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let rho = cd.rho();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in cd.positive_roots()? {
        num *= cd.pair_weight_root(&lr, &alpha);
        den *= cd.pair_weight_root(&rho, &alpha);
    }
    let d = BigRational::new(num, den);
    debug_assert!(d.is_integer());
    Ok(d.to_integer().to_u128().unwrap_or(u128::MAX))
}

/// Full character of `V(λ)` by Freudenthal's recursion, with the default
/// module cap.
pub fn freudenthal(cd: &CartanData, lambda: &[i64]) -> Result<WeightFunction, LieError> {
    freudenthal_with_cap(cd, lambda, DEFAULT_MODULE_CAP)
}

pub fn freudenthal_with_cap(cd: &CartanData, lambda: &[i64], cap: u128) -> Result<WeightFunction, LieError> {
    let dim = weyl_dimension(cd, lambda)?;
    if dim > cap {
        return Err(LieError::TooLarge { dim, cap });
    }
    let n = cd.rank();
    let roots = cd.positive_roots()?;
    let root_weights: Vec<Vec<i64>> = roots.iter().map(|r| cd.root_to_weight(r)).collect();
    let lr: Vec<i64> = lambda.iter().map(|x| x + 1).collect();

    // Weights in order of depth λ - μ, found by lowering from λ.
    let mut order: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    queue.push_back((lambda.to_vec(), vec![0i64; n]));
    seen.insert(lambda.to_vec());
    while let Some((mu, beta)) = queue.pop_front() {
        for i in 0..n {
            let next: Vec<i64> = mu.iter().zip(cd.simple_root_weight(i)).map(|(a, b)| a - b).collect();
            if seen.contains(&next) || !cd.is_weight_of(lambda, &next) {
                continue;
            }
            seen.insert(next.clone());
            let mut b = beta.clone();
            b[i] += 1;
            queue.push_back((next, b));
        }
        order.push((mu, beta));
    }

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    mult.insert(lambda.to_vec(), 1);
    for (mu, beta) in order.iter().skip(1) {
        let denom = 2 * cd.pair_weight_root(&lr, beta) - cd.pair_roots(beta, beta);
        let mut num = 0i64;
        for (alpha, aw) in roots.iter().zip(&root_weights) {
            let mut nu: Vec<i64> = mu.iter().zip(aw).map(|(a, b)| a + b).collect();
            // Higher weights are already tabulated; a miss means the
            // string has left the weight diagram.
            while let Some(&m) = mult.get(&nu) {
                num += cd.pair_weight_root(&nu, alpha) * m;
                for (x, y) in nu.iter_mut().zip(aw) {
                    *x += y;
                }
            }
        }
        let num = 2 * num;
        debug_assert!(denom > 0 && num % denom == 0, "Freudenthal step at {mu:?}");
        mult.insert(mu.clone(), num / denom);
    }
    Ok(mult.into_iter().collect())
}

/// `D_i` applied termwise along `α_i`-strings.
fn demazure_operator(cd: &CartanData, i: usize, f: &WeightFunction) -> WeightFunction {
    let alpha = cd.simple_root_weight(i);
    let shift = |mu: &[i64], j: i64| -> Vec<i64> { mu.iter().zip(&alpha).map(|(a, b)| a + j * b).collect() };
    let mut out = WeightFunction::new();
    for (mu, c) in f.iter() {
        let k = mu[i];
        if k >= 0 {
            for j in 0..=k {
                out.add(shift(mu, -j), c);
            }
        } else if k <= -2 {
            for j in 1..=(-k - 1) {
                out.add(shift(mu, j), -c);
            }
        }
    }
    out
}

/// Character of the Demazure module `V_w(λ)`, `D_{i_1} ⋯ D_{i_l} e^λ`.
pub fn demazure_character(cd: &CartanData, w: &WeylWord, lambda: &[i64]) -> Result<WeightFunction, LieError> {
    cd.require_reduced(w)?;
    cd.require_dominant(lambda)?;
    let mut f = WeightFunction::singleton(lambda.to_vec());
    for i in w.indices().rev() {
        f = demazure_operator(cd, i, &f);
    }
    Ok(f)
}

/// Multiplicities `[V(λ) ⊗ V(ν) : V(μ)]`, with the default caps.
pub fn tensor_decompose(cd: &CartanData, lambda: &[i64], nu: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>, LieError> {
    tensor_decompose_with_cap(cd, lambda, nu, Caps::default())
}

/// Multiplies characters and peels off highest weights until nothing is
/// left.
pub fn tensor_decompose_with_cap(
    cd: &CartanData,
    lambda: &[i64],
    nu: &[i64],
    caps: Caps,
) -> Result<BTreeMap<Vec<i64>, u64>, LieError> {
    let dl = weyl_dimension(cd, lambda)?;
    let dn = weyl_dimension(cd, nu)?;
    let dim = dl.saturating_mul(dn);
    if dim > caps.tensor {
        return Err(LieError::TooLarge { dim, cap: caps.tensor });
    }
    // Factors are bounded by the product, so the module cap is lifted to it.
    let module_cap = caps.tensor.max(caps.module);
    let cl = freudenthal_with_cap(cd, lambda, module_cap)?;
    let cn = freudenthal_with_cap(cd, nu, module_cap)?;
    let mut product = WeightFunction::new();
    for (a, ma) in cl.iter() {
        for (b, mb) in cn.iter() {
            product.add(a.iter().zip(b).map(|(x, y)| x + y).collect(), ma * mb);
        }
    }
    let top: Vec<i64> = lambda.iter().zip(nu).map(|(x, y)| x + y).collect();
    let depth = |mu: &[i64]| -> i64 {
        let d: Vec<i64> = top.iter().zip(mu).map(|(a, b)| a - b).collect();
        cd.weight_to_root(&d)
            .expect("weights of a product lie in λ+ν-Q")
            .iter()
            .sum()
    };
    let mut out = BTreeMap::new();
    while !product.is_empty() {
        let (mu, m) = product
            .iter()
            .filter(|(mu, _)| mu.iter().all(|&x| x >= 0))
            .min_by_key(|(mu, _)| (depth(mu), (*mu).clone()))
            .map(|(mu, m)| (mu.clone(), m))
            .expect("a nonzero character has a dominant weight");
        debug_assert!(m > 0, "highest remaining weight has positive multiplicity");
        out.insert(mu.clone(), m as u64);
        for (w, c) in freudenthal_with_cap(cd, &mu, module_cap)?.iter() {
            product.add(w.clone(), -m * c);
        }
    }
    Ok(out)
}
