pub mod affweyl;
pub mod cache;
pub mod charring;
pub mod error;
pub mod exotic_k;
pub mod hecke;
pub mod laurent;
pub mod report;
pub mod rootdata;
pub mod tiltmult;
pub mod verify;

pub use affweyl::{AffineElement, AffineWeylGroup, ReducedWord, SimpleReflectionId};
pub use charring::{Basis, CharRing, CharacterMultiset};
pub use error::{Error, Result};
pub use exotic_k::{BsOrder, KClass, KModule};
pub use hecke::{BraidGen, BraidWord, HeckeAlgebra, HeckeElement};
pub use laurent::LaurentPoly;
pub use report::Report;
pub use rootdata::{RootSystem, Weight, WeylElement};
pub use tiltmult::{ReconcileReport, TiltMult};
