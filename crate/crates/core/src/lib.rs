//! Bound-computation machinery for error-correcting codes.
//!
//! The crate bundles four groups of tools that are useful when studying
//! maximum code sizes `A_q(n,d)`, `A(n,d,w)`, `A_q^L(n,d)` and independent
//! sets in strong powers of circular graphs:
//!
//! * exact combinatorial and linear-programming bounds (Plotkin,
//!   divisibility, Delsarte in the Hamming and Johnson schemes) backed by an
//!   exact rational simplex solver,
//! * generators for symmetry-reduced semidefinite programs (Hamming
//!   quadruples, constant-weight triples/quadruples, Lee and Lee-infinity
//!   triples) emitted in SDPA sparse format,
//! * explicit code constructions (Golay family, Lee codes, coset-flip
//!   `(20,8)` codes, symmetric nets, circular-graph codes) together with
//!   verifiers,
//! * brute-force oracles for small instances, used as ground truth.
//!
//! All bound values are computed in exact rational arithmetic; floating
//! point only enters where the underlying quantity is irrational (Lovász
//! theta, dihedral character sums).

pub mod bounds;
pub mod circular;
pub mod code;
pub mod codefile;
pub mod constructions;
pub mod error;
pub mod f2;
pub mod lp;
pub mod oracle;
pub mod sdp;
pub mod symmetry;

pub use code::{Code, GroupElement, Metric, Word};
pub use error::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = num::BigRational;
/// Arbitrary-precision integer used throughout the crate.
pub type Int = num::BigInt;

/// `n!` as a big integer.
pub fn factorial(n: u64) -> Int {
    (1..=n).map(Int::from).product()
}

/// Binomial coefficient `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut num = Int::from(1);
    let mut den = Int::from(1);
    for i in 0..k {
        num *= Int::from(n - i);
        den *= Int::from(i + 1);
    }
    num / den
}

/// Binomial coefficient for signed arguments as used in polynomial
/// expansions: `C(x, k) = x(x-1)...(x-k+1)/k!` for integer `x`, possibly
/// negative.
pub fn binomial_signed(x: i64, k: u64) -> Int {
    let mut num = Int::from(1);
    for i in 0..k as i64 {
        num *= Int::from(x - i);
    }
    num / factorial(k)
}
