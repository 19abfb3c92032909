//! Finite Heyting algebras, their Esakia duals, and decision procedures for
//! epimorphism-surjectivity in finitely generated varieties.

pub mod algebra;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod io;
pub mod poset;
pub mod terms;
pub mod variety;

pub use algebra::{Elem, HeytingAlgebra, SubalgebraHandle};
pub use duality::{CorrectPartition, DualSpace, EsakiaMap};
pub use error::{Error, Result};
pub use poset::{FinitePoset, Mask};
pub use terms::{Equation, Term, Validity};
pub use variety::{EpicVerdict, VarietyPresentation};
