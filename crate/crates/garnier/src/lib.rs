//! Exact symbolic verification engine for the two-variable Garnier system.
//!
//! The crate encodes the polynomial Hamiltonian systems of the Garnier
//! family, their holomorphy charts, and the birational symplectic maps
//! connecting them, then mechanically proves or flags each algebraic claim:
//! symplecticity, chart holomorphy, group relations, Backlund and transport
//! identities, invariant cycles, seed solutions, blow-up replays, ansatz
//! determinations, and integrability. A numeric integrator cross-checks the
//! symbolic verdicts in the complex domain.
//!
//! Module map:
//! - [`exactalg`]: rationals, sparse polynomials, rational expressions with
//!   factored denominators, the expression grammar, linear solving.
//! - [`catalog`]: every Hamiltonian, chart, map, cycle, and seed as data.
//! - [`symplectic`]: two-forms, Poisson brackets, map composition, and
//!   Hamiltonian transport.
//! - [`verify`]: the claim suites.
//! - [`numint`]: adaptive Runge-Kutta integration and numeric spot checks.
//! - [`report`]: claim results and the JSON report format.

pub mod catalog;
pub mod exactalg;
pub mod numint;
pub mod report;
pub mod symplectic;
pub mod verify;
