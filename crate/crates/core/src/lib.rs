//! Exact lattice-point counting for chopped and sliced cones.
//!
//! A chopped and sliced cone is a pointed rational cone `C = {r(x) ≥ 0}`
//! together with parametric truncations `C^λ = C ∩ {p(x) ≤ s(λ)}` that are
//! bounded for every `λ`, and slices `C^λ_β = C^λ ∩ {q(x) = β}`. The crate
//! counts lattice points in these slices exactly, reduces the counts to
//! vector partition functions, fits quasi-polynomials along rays, and
//! applies the construction to Demazure weight multiplicities and
//! Littlewood–Richardson coefficients, each checked against an independent
//! representation-theoretic computation.

pub mod bz;
pub mod csc;
pub mod exact;
pub mod liealg;
pub mod littelmann;
pub mod polyhedra;
pub mod vpf;
