//! Arc diagrams, preprojective representations of type `A_n`, and
//! two-term simple-minded collections attached to permutations.

pub mod arc;
pub mod checks;
pub mod error;
pub mod linalg;
pub mod mutation;
pub mod par;
pub mod perm;
pub mod quiver;
pub mod quotients;
pub mod render;
pub mod rep;
pub mod string_hom;

pub use arc::{Arc, Color, ColoredArc, ColoredDiagram, NoncrossingDiagram, Side};
pub use error::{Error, Result};
pub use par::Exec;
pub use perm::{InversionSet, Permutation};
pub use quiver::{Dir, Letter, Path};
pub use rep::{DimVector, Morphism, Representation};
