//! The free skew monoidal category on one generating object, made computable.
//!
//! Objects are bracketed words in `X` and `I`, stored as triples
//! `(ord m, u, S)`: the number of leaves, the positions of the `X` leaves and
//! the bracketing as a left bracketing function. Morphisms are
//! bottom-preserving monotone maps between finite ordinals, validated by an
//! explicit criterion. On top of that sit canonical factorizations, hom-set
//! enumeration, duality, and the operad-level adjunctions relating skew
//! monoidal categories to colax algebras for the operad `L`.

pub mod error;
pub mod fsk;
pub mod operads;
pub mod ordmaps;
pub mod tamari;
pub mod word;

pub use error::{Error, Result};
pub use fsk::{FskMorphism, FskObject, MembershipMode, MorphismClass};
pub use operads::{LElement, LKind};
pub use ordmaps::MonotoneMap;
pub use tamari::{BracketTree, Lbf, Rbf};
pub use word::Word;
