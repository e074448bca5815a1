//! Long cycles in essentially 4-connected plane graphs.
//!
//! The main entry point is [`extend::long_cycle`], which returns a cycle of
//! length at least `5(n+2)/8` together with a certificate: either the
//! cycle is Hamiltonian (small graphs), one side of it is empty, or a
//! discharging report shows that every minor face ends with weight at
//! least `10/3`.

pub mod catalog;
pub mod cycle;
pub mod discharge;
pub mod embed;
pub mod error;
pub mod extend;
pub mod gen;
pub mod layout;
pub mod oracle;

pub use cycle::{Cycle, CycleContext};
pub use discharge::{DischargeReport, Thirds};
pub use embed::{EmbeddedGraph, Essential4, Separator};
pub use error::{Error, Result};
pub use extend::{long_cycle, Certificate, ExtensionStep};

/// `ceil(5(n+2)/8)`, the guaranteed cycle length.
pub fn theorem_bound(n: usize) -> usize {
    (5 * (n + 2)).div_ceil(8)
}

/// `ceil(5(n+4)/8)`, the bound claimed for `n >= 16`.
pub fn strengthened_bound(n: usize) -> usize {
    (5 * (n + 4)).div_ceil(8)
}
