//! Exact computations in the SU(3) (A2) skein theory and its level-k TQFT data.
//!
//! * [`cyclotomic`]: quantum integers over `Q(A)` and over `Q(ζ_{6r})`.
//! * [`web`]: planar A2 webs and their reduction by the spider relations.
//! * [`clasp`]: the `(m,n)` clasps, solved from their annihilation properties.
//! * [`fusion`]: triangle spaces, admissible 6-tuples and basis webs.
//! * [`repdata`]: Ising and SU(2)₂ modular data and mapping-class traces.
//! * [`surface`]: spines, crossing words, complexity and state-space counts.
//! * [`cli`]: the `a2skein` command-line front end.

pub mod clasp;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod linalg;
pub mod repdata;
pub mod surface;
pub mod web;

pub use cyclotomic::{Context, Mode, Scalar};
pub use error::{Error, Result};
