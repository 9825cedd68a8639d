//! Symmetry-reduction machinery shared by the SDP generators.

pub mod classes;
pub mod orbit;
pub mod partition;
pub mod poly;
pub mod pts;
pub mod repset;
pub mod tableau;
