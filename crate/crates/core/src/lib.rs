//! Exact symbolic engine for the Cayley-Klein family of orthogonal algebras.
//!
//! The crate is layered bottom-up:
//!
//! - [`coeff`]: the shared coefficient ring. Laurent polynomials in the
//!   contraction parameters `j1..jn` over Gaussian rationals, tensored with
//!   power series in the deformation parameter `z` truncated at a fixed order.
//!   Contraction parameters can be evaluated to `1`, a dual (Study) unit, or
//!   the imaginary unit; dual units are handled as limits with symbolic
//!   cancellation performed first.
//! - [`liealg`]: Lie algebras as antisymmetric structure-constant tables,
//!   Jacobi verification, diagonal (Inonu-Wigner style) contraction limits,
//!   and graded contractions over finite Abelian grading groups.
//! - [`bialg`]: Lie bialgebras (cocommutators), the 1-cocycle and co-Jacobi
//!   conditions, and the two contraction routes for the cocommutator together
//!   with their consistency comparison.
//! - [`hopf`]: a Hopf-algebra kernel over the truncated coefficient ring with
//!   a Poincare-Birkhoff-Witt normal-form rewriting engine, coproduct/counit/
//!   antipode extension, axiom verification, basis rescaling, and dual-unit
//!   contraction of complete Hopf structures.
//! - [`catalog`]: concrete structures. The quantum orthogonal algebra on
//!   three generators, its three Cayley-Klein couplings (one per choice of
//!   primitive generator), their Galilei-type contractions, enumeration of
//!   primitive-generator sets for higher rank, and isomorphism
//!   distinguishers.
//! - [`json`]: serialization of the public data types to a stable,
//!   documented JSON schema.

pub mod coeff;
pub mod liealg;
pub mod bialg;
pub mod catalog;
pub mod hopf;
pub mod json;
