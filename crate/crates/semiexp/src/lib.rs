//! Expansions of finite monoids, length functions, elliptic trees and
//! wreath-product embeddings with the Zeiger property.

pub mod elliptic;
pub mod embed;
pub mod error;
pub mod fixtures;
pub mod green;
pub mod holonomy;
pub mod length;
pub mod monoid;
pub mod phi3;
pub mod rees;
pub mod rhodes;
pub mod seqmap;
pub mod structure;
pub mod tree;
pub mod wreath;

pub use error::{ExpansionError, LengthError, MonoidError, ReesError, TreeError, WreathError};
pub use green::GreenData;
pub use monoid::{ElementId, FiniteMonoid};
pub use rees::{Coord, Coordinatization, ReesView};
pub use rhodes::{LChain, RhodesMonoid};
pub use structure::AdjoinedMonoid;
pub use length::{ExtNat, LengthTable};
pub use phi3::Phi3Monoid;
