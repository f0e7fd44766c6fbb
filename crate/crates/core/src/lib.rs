//! Exact homological algebra over the integers.
//!
//! Everything here is built on one engine, the Smith normal form of an
//! arbitrary-precision integer matrix ([`intlin`]). On top of it sit
//! finitely generated abelian groups given by presentations ([`fgab`]),
//! bounded chain complexes and their homology ([`complexes`]), free
//! resolutions and `Tor` ([`torfun`]), and a finite model of the torsion
//! category `Tor^Z(A, B)` whose connected components recover `A ⊗ B`
//! ([`robinson`]).
//!
//! [`battery`] holds the seeded random families used by the property
//! suites of the command-line tool and the acceptance tests.
//!
//! ```
//! use homz_core::torfun::tor;
//! use homz_core::FgAbGroup;
//!
//! # fn main() -> homz_core::Result<()> {
//! let a = FgAbGroup::parse("Z/4")?;
//! let b = FgAbGroup::parse("Z/6")?;
//! let t1 = tor(&a, &b, 1, None)?;
//! assert_eq!(t1.group.to_literal(), "Z/2");
//! # Ok(())
//! # }
//! ```

pub mod battery;
pub mod complexes;
pub mod error;
pub mod fgab;
pub mod intlin;
pub mod robinson;
pub mod torfun;

pub use error::{Error, Result};
pub use fgab::{FgAbGroup, GroupElement, GroupHom, ShortExactSeq};
pub use intlin::IntMatrix;
