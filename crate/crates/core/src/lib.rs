//! Exact combinatorics and commutative algebra of matrix Schubert varieties.
//!
//! The crate covers the chain from a permutation to the Hilbert-theoretic
//! invariants of its coordinate ring:
//!
//! * [`perm`]: permutations in one-line notation, Coxeter length, descents,
//!   transpositions and enumeration of `S_n`.
//! * [`diagram`]: rank matrices, Rothe diagrams, essential sets and effective
//!   regions.
//! * [`poly`]: sparse multivariate and dense univariate polynomials with
//!   arbitrary-precision coefficients.
//! * [`groth`]: Grothendieck polynomials through Lascoux's transition
//!   recursion, and independently through non-reduced pipe dreams.
//! * [`hilbert`]: K-polynomials, Hilbert functions and polynomials,
//!   postulation numbers and regularity.
//! * [`ideal`]: Fulton's determinantal generators and a brute-force graded
//!   dimension oracle over the integers.
//!
//! Everything here is pure and allocation-only, so the crate builds under
//! `#![no_std]` with `alloc`.
#![no_std]

extern crate alloc;

pub mod diagram;
mod error;
pub mod groth;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod perm;
pub mod poly;

pub use diagram::{BoxSet, RankMatrix};
pub use error::Error;
pub use groth::{GrothendieckEngine, PipeDreamTable, TransitionData};
pub use hilbert::{Ambient, HilbertReport};
pub use ideal::{GeneratorSet, MinorSpec, OracleLimits};
pub use perm::Permutation;
pub use poly::{MultiPoly, RatUniPoly, UniPoly};

pub type Result<T> = core::result::Result<T, Error>;
