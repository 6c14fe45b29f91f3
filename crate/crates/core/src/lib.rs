//! Exact arithmetic for G-Frobenius algebras: cyclotomic scalars, finite
//! groups, group cohomology mod m, twisted group rings, discrete-torsion
//! twists and central-extension lifts.

pub mod catalog;
pub mod cohomology;
pub mod cyclin;
pub mod error;
pub mod extensions;
pub mod gfa;
pub mod groups;
pub mod intmat;
pub mod report;
pub mod scalars;
pub mod verify;

pub use error::{Error, Result};
pub use scalars::{Cyclotomic, RootOfUnity};
