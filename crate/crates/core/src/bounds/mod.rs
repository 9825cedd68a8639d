//! Upper bounds on maximum code sizes.

pub mod classical;
pub mod delsarte;
