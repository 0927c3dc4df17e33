//! Exact rational representations and Wedderburn decompositions of the
//! rational group algebras of small p-groups.
pub mod algebra;
pub mod catalog;
pub mod chars;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod reps;
pub mod wedderburn;

pub use chars::{Character, GaloisClass, LinearChar, RationalCharacter};
pub use cyclotomic::{field_of_values, CycNum, FieldDescriptor, Rational};
pub use error::{Error, Result};
pub use algebra::AlgebraElement;
pub use group::{build_group, PcGroup, PcPresentation, Subgroup};
pub use reps::{RationalMatrix, RationalRep, RequiredPair};
pub use wedderburn::{Decomposition, Division, Method, WedderburnComponent};
