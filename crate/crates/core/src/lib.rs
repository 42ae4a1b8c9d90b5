//! Exact computation in the center of the Iwahori-Hecke algebra `H_n` of the
//! symmetric group over `Z[xi]`, with `T_i^2 = 1 + xi T_i`.
//!
//! - [`coxeter`]: permutations, reduced words, partitions and conjugacy classes.
//! - [`poly`]: integer polynomials in `xi`, exact linear algebra, interpolation in `n`.
//! - [`hecke`]: elements of `H_n` in the `T_w` basis, Jucys-Murphy elements.
//! - [`center`]: the class elements `G[lambda](n)` and structure constants at one rank.
//! - [`universal`]: rank-independent data (top-degree constants, fits in `n`).

pub mod center;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod poly;
pub mod universal;

pub use center::{
    check_structure_constants, compute_gamma_basis, expand_in_gamma, BasisCache, Center,
    CentralCoords, GammaBasis, Report, StructTable, Violation,
};
pub use num_bigint::BigInt;

pub use coxeter::{ClassTable, Partition, Permutation};
pub use error::{Error, Result, SolveError};
pub use hecke::{GroupElt, HeckeElt, JucysMurphy};
pub use poly::{IntPoly, NPoly, Parity, RatPoly};
pub use universal::{DMatrixReport, FitResult, FitStatus, Universal};
