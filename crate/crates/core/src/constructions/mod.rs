//! Explicit codes from the literature, each paired with a verifier.

pub mod coset20;
pub mod golay;
pub mod net;
pub mod lee_codes;
