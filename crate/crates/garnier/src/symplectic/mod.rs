//! Symplectic structure: birational maps, two-forms, Poisson brackets, and
//! Hamiltonian transport along coordinate changes.

pub mod map;
pub mod transport;
pub mod twoform;

pub use map::BirationalMap;
pub use transport::{
    chart_hamiltonians, compare_hamiltonians, compatibility, flow_residuals,
    transported_hamiltonians, transports, CompatibilitySign, Exactness, HamSystem,
};
pub use twoform::{is_canonical, poisson, pullback_canonical, two_form_identity, wedge, TwoForm};
