//! Symmetry-reduced semidefinite program generators and tooling.

pub mod cw;
pub mod delsarte_red;
pub mod dense_check;
pub mod dual;
pub mod evaluate;
pub mod hamming;
pub mod lee;
pub mod program;
pub mod sdpa;
