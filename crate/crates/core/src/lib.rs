//! Characters of projective modules for gl(m|n) and osp(M|2n) via weight
//! diagrams, translation functors and Fock space models.

pub mod charring;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod fock;
pub mod functors;
pub mod kgroup;
pub mod lattice;
pub mod oracle;
pub mod pims;

pub use diagrams::{BlockLabel, Pos, Sign, Symbol, Tail, WeightDiagram};
pub use error::{Error, Result};
pub use lattice::{Family, SupergroupKind, Weight};
