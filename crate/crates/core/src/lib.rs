//! Exact invariants of torus knots `T(p,q)` and the bounds they give on the
//! non-orientable 4-genus `γ₄`.

pub mod error;
pub mod gamma4;
pub mod invariants;
pub mod knot;
pub mod laurent;
pub mod obstructions;
pub mod verify;

pub use error::{Error, Result};
pub use gamma4::{gamma4_bounds, BoundResult};
pub use invariants::{full_record, InvariantRecord};
pub use knot::{make_knot, TorusKnot};
pub use laurent::LaurentPoly;
