//! Exact outer independent double Roman domination on small graphs.
//!
//! The crate computes γ_oidR and the related parameters (γ, α, β, γ_R,
//! γ_oiR, γ_dR) exactly, and checks closed forms, structural
//! characterizations, bounds, the pendant-P3 reduction and the corona
//! identity against the solver.
//!
//! ```
//! use oidrd::family::FamilySpec;
//! use oidrd::solver::solve_oidrd;
//!
//! let g = "path:5".parse::<FamilySpec>().unwrap().build().unwrap();
//! let r = solve_oidrd(&g).unwrap();
//! assert_eq!(r.value, 6);
//! ```

pub mod characterize;
pub mod enumerate;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod labeling;
pub mod limits;
pub mod reduction;
pub mod solver;

pub use graph::Graph;
pub use labeling::{Labeling, Problem};
