//! Lie-theoretic engine for maximal parabolic subgroups with abelian
//! unipotent radical: root data, Weyl group combinatorics, a Chevalley
//! basis, the orbit structure of the Levi factor on the radical, Arthur-pair
//! certificates and the microlocal tables attached to the orbits.

pub mod arthur;
pub mod case;
pub mod chevalley;
pub mod error;
pub mod linalg;
pub mod microlocal;
pub mod orbits;
pub mod parabolic;
pub mod report;
pub mod rootsys;
pub mod selftest;
pub mod table1;
pub mod weyl;

pub use case::AbelianCase;
pub use error::{Error, Result};
