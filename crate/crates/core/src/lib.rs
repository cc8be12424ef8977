//! Symbolic calculator for bundles on the Fargues–Fontaine curve, the
//! Kottwitz set `B(GL_n)`, the character/stratum bijection and the
//! spectral action on sheaves of the form `F_χ`.
//!
//! Everything is exact: slopes and exponents are rationals, dimensions are
//! integers, and representations are symbols.

pub mod error;
pub mod ffbundle;
pub mod kottwitz;
pub mod lparam;
pub mod parse;
pub mod shtuka;
pub mod spectral;
pub mod weights;

pub use error::{Error, Result};
pub use ffbundle::{BundleSpec, Part, Polygon, Rational, Slope};
pub use kottwitz::{CharacterExponents, GroupFactor, InnerFormGroup, NewtonPoint};
pub use lparam::{Character, Component, LParamShape, RepSymbol, SheafSymbol, SlopeClass};
pub use parse::{parse_bundle, parse_chi, parse_int_list, parse_weight};
pub use shtuka::{BoyerFactorization, CohomologyOutput, CohomologyPiece, Direction};
pub use spectral::{EigensheafStalk, HeckeDecomposition, HeckeTerm};
pub use weights::{Budget, HighestWeight, WeilSymbol};
