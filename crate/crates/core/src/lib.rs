//! Exact homological invariants of monomial ideals.
//!
//! Betti numbers are computed from the lcm lattice: each multidegree `m` in
//! the lattice contributes the reduced homology of the order complex of the
//! open interval `(1, m)`. On top of that the crate decides linearity and
//! componentwise linearity of ideals and their powers, the gcd-type
//! conditions on generators, linear quotients, Golod certificates, and lower
//! bounds for Betti numbers of powers of edge ideals of uniform clutters.

pub mod betti;
pub mod caps;
pub mod clutter;
pub mod complex;
pub mod conditions;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod generate;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod orders;
pub mod scan;

pub use betti::{multigraded_betti, taylor_strand_betti, BettiTable};
pub use caps::Caps;
pub use clutter::{Clutter, Graph};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use homology::{reduced_homology, ReducedHomology};
pub use ideal::{MonomialIdeal, Quotient};
pub use lattice::LcmLattice;
pub use monomial::Monomial;
