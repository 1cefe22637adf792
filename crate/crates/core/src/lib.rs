//! A toolkit for finite 2-categories: marked lax slices, cone categories,
//! contractions, and deciding bilimits three independent ways — through the
//! defining hom-equivalences, through limiting contractions on the slice, and
//! through biequivalence of the modified-cone projection — with the agreement
//! of the three asserted on every instance.
//!
//! Everything is fully tabulated. Sealed values are immutable and all
//! operations are pure and deterministic.

pub mod caps;
pub mod error;
pub mod fincat;
pub mod shapes;
pub mod twocat;

pub mod diagrams;
pub mod functor;

pub mod fibration;
pub mod slice;

pub mod finality;

// pub mod bilimits;

// pub mod elements;

pub use caps::SizeCaps;
pub use error::{CatError, Law, LawViolation};
pub use fincat::{
    cats_equivalent, cats_isomorphic, functor_is_equivalence, terminal_objects, validate_fincat, FinCat,
    FinCatData, FMor, FObj, Functor1,
};
pub use twocat::{validate_twocat, Marking, Obj, One, Two, TwoCat, TwoCatBuilder, TwoCatData};
