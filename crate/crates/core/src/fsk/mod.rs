//! Objects and morphisms of the free skew monoidal category on one object.

pub mod axioms;
pub mod criteria;
pub mod dual;
pub mod factor;
mod morphism;
mod object;

pub use axioms::{check_skew_axioms, AxiomReport};
pub use criteria::{is_morphism, MembershipMode};
pub use dual::{dual_map, dual_object};
pub use factor::{
    factor_general, factor_injection, factor_surjection, GeneralFactors, InjectionFactors,
    SurjectionFactors,
};
pub use morphism::{alpha, compose, hom, lambda, rho, FskMorphism, MorphismClass};
pub use object::FskObject;
