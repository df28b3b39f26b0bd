//! Exact arithmetic for contact toric 3-manifolds.
//!
//! A closed contact toric 3-manifold with two singular orbits is determined by
//! its *moment cone*: two primitive rays in ℤ² and the angle swept between
//! them, which may exceed 2π. This crate classifies such cones up to
//! contactomorphism ([`classify`]), converts between cones and linear
//! plumbings of spheres ([`plumbing`]), and computes the 4-manifold
//! invariants that separate the overtwisted classes ([`fourmanifold`]).
//!
//! All angle and homology computations are exact; floats appear only in
//! [`render`].
//!
//! ```
//! use toric3::{classify, ContactClass, MomentCone};
//!
//! let c = MomentCone::from_coords((1, 0), (0, -1), 0)?; // Δ = 3π/2
//! let r = classify(&c);
//! assert!(r.lens.is_sphere());
//! assert_eq!(r.contact, ContactClass::OvertwistedHalf);
//! # Ok::<(), toric3::Error>(())
//! ```

pub mod classify;
pub mod cli;
pub mod cone;
pub mod error;
pub mod exact_angle;
pub mod fourmanifold;
pub mod matrix;
pub mod plumbing;
pub mod render;
pub mod wire;

pub use classify::{classify, ClassificationResult, ContactClass, LensLabel};
pub use cone::{toric_equivalent, MomentCone, UnimodularMap};
pub use error::{Error, Result};
pub use exact_angle::{ArcClass, Direction, ExactAngle};
pub use fourmanifold::{invariants, theta, InvariantsReport, Rational};
pub use plumbing::{cone_of_plumbing, plumbing_of_cone, Plumbing};

// The book's listings are compiled as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/angles.md")]
    mod angles {}
    #[doc = include_str!("../../../book/src/cones.md")]
    mod cones {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/plumbings.md")]
    mod plumbings {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
