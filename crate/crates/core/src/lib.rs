//! Exact stratification of the moduli space of canonical threefolds on the
//! Noether line `K^3 = (4/3) p_g - 10/3`.
//!
//! For `p_g = 3d - 2 >= 11` every such threefold is a Gorenstein regular
//! simple fibration in (1,2)-surfaces of some type `(d, d0)`, embedded as a
//! divisor of bidegree `(0, 10)` in a toric 4-fold. This crate counts the
//! relevant section spaces by monomial enumeration ([`grading`]), models a
//! single type ([`fibration`]), derives stratum dimensions and the global
//! picture ([`moduli`]), and cross-checks every closed form against brute
//! force ([`oracle`]).

pub mod error;
pub mod fibration;
pub mod grading;
pub mod moduli;
pub mod oracle;
pub mod rational;
pub mod render;
pub mod sweep;

pub use error::{Error, Result};
pub use fibration::{validate, FibrationType};
pub use rational::{Interval, Rational};
