//! Unitarily invariant norms on operators of the form `F ⊕ τI`.

pub mod ballgeo;
pub mod certificate;
pub mod error;
pub mod exec;
pub mod io;
pub mod isomaps;
pub mod linalg;
pub mod opmodel;
pub mod reproduce;
pub mod sample;
pub mod suites;
pub mod uinorm;
pub mod vecnorm;

pub use certificate::{Certificate, Verdict};
pub use error::{Error, Result};
pub use exec::Execution;
pub use linalg::{CMatrix, C64};
pub use opmodel::{SingularSpectrum, TailOperator};
pub use vecnorm::{CSet, NormFamily, SymmetricNorm};
