//! Exact-rational toolkit for infinitesimal Hom-bialgebras and Hom-Lie
//! bialgebras given by structure constants.

pub mod constructions;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod quiver;
pub mod report;
pub mod rmatrix;
pub mod structures;
pub mod suites;

pub use error::{Error, Result};
