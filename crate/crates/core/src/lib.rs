//! Exact computations in the Grassmannian cluster categories `C(2,n)` and
//! their Frobenius reductions: Auslander–Reiten quivers, mesh friezes,
//! Ptolemy friezes with coefficients, cluster characters and quiver mutation.

pub mod ar_quiver;
pub mod character;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod frieze;
pub mod laurent;
pub mod mutation;
pub mod rank_one;
pub mod verify;

pub use combinatorics::{Arc, KSubset, Triangulation};
pub use error::{Error, Result};
