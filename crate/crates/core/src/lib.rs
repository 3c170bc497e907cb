//! Truncated p-adic arithmetic, and finite-volume spin measures with
//! nearest and next-nearest neighbour couplings on the rooted binary tree,
//! where Boltzmann factors are powers of p.

pub mod cli;
pub mod model;
pub mod padic;
pub mod primes;
pub mod report;
pub mod residue;
pub mod solvers;

pub use padic::{NormValue, Padic, PadicError};
