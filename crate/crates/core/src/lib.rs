//! High-order entropy conservative (EC) and entropy stable (ES) finite
//! difference schemes on adaptive moving curvilinear meshes for the single-
//! and two-component compressible Euler equations with the stiffened
//! equation of state.

pub mod error;
pub mod state;
pub mod thermo;

pub use error::{Error, Result};
pub use state::{SmallMat, StateVec, MAX_COMP};
