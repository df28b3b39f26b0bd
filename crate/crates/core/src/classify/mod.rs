//! Contactomorphism classification of moment cones.
//!
//! Every cone bounds a lens space `L(k,l)`, read off from the second ray of
//! the normalized cone. On each lens space there are exactly three toric
//! contact structures up to contactomorphism: the tight one, and two
//! overtwisted ones obtained from it by a full Lutz twist (`ξ₁`) and by a
//! half-Lutz twist (`ξ₂`). Which one a cone carries is decided by `Δ`.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cone::MomentCone;
use crate::error::{Error, Result};
use crate::exact_angle::ArcClass;
use crate::matrix::IntMatrix;

pub use snf::{smith_normal_form, SmithForm};

/// Unoriented lens space `L(k,l)` in canonical form: `L(0,1) = S¹×S²`,
/// `L(1,0) = S³`, and for `k ≥ 2` the smallest `l` in the Reidemeister orbit
/// `{±l^{±1} mod k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LensLabel {
    k: BigInt,
    l: BigInt,
}

impl LensLabel {
    /// Canonical label of `L(k,l)`. Signs are folded; `gcd(k,l)` must be 1.
    pub fn new(k: impl Into<BigInt>, l: impl Into<BigInt>) -> Result<Self> {
        let (k, l) = (k.into().abs(), l.into());
        if !k.gcd(&l).is_one() {
            return Err(Error::NotCoprime(format!("gcd({k}, {l}) != 1")));
        }
        if k.is_zero() {
            return Ok(LensLabel { k, l: BigInt::one() });
        }
        if k.is_one() {
            return Ok(LensLabel { k, l: BigInt::zero() });
        }
        let l = reidemeister_orbit(&k, &l).into_iter().min().expect("orbit is nonempty");
        Ok(LensLabel { k, l })
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn l(&self) -> &BigInt {
        &self.l
    }

    pub fn is_sphere(&self) -> bool {
        self.k.is_one()
    }
}

impl fmt::Display for LensLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.k, self.l)
    }
}

/// `{l, -l, l⁻¹, -l⁻¹} mod k` as residues in `[0, k)`, for `k ≥ 2`.
fn reidemeister_orbit(k: &BigInt, l: &BigInt) -> Vec<BigInt> {
    let l = l.mod_floor(k);
    let inv = l.extended_gcd(k).x.mod_floor(k);
    let mut orbit = vec![(k - &l).mod_floor(k), (k - &inv).mod_floor(k), l, inv];
    orbit.sort();
    orbit.dedup();
    orbit
}

/// Whether `L(k,l)` and `L(k2,l2)` are diffeomorphic.
pub fn reidemeister_equivalent(
    k: impl Into<BigInt>,
    l: impl Into<BigInt>,
    k2: impl Into<BigInt>,
    l2: impl Into<BigInt>,
) -> Result<bool> {
    Ok(LensLabel::new(k, l)? == LensLabel::new(k2, l2)?)
}

pub fn lens_of_cone(c: &MomentCone) -> LensLabel {
    let (k, l) = second_ray(c);
    LensLabel::new(k, l).expect("second ray of a normalized cone is primitive")
}

/// `(k, l)` where `(l, k)` is the second ray of the normalized cone.
fn second_ray(c: &MomentCone) -> (BigInt, BigInt) {
    let n = c.canonical();
    (n.r2().y().clone(), n.r2().x().clone())
}

/// Contactomorphism class of a toric contact structure on a fixed lens space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContactClass {
    Tight,
    /// `ξ₁`: obtained from the tight structure by a full Lutz twist,
    /// `Δ ∈ (2πn, 2πn + π]` with `n ≥ 1`.
    OvertwistedFull,
    /// `ξ₂`: obtained from the tight structure by a half-Lutz twist,
    /// `Δ mod 2π ∈ (π, 2π)`, or `Δ = 2πn` with `n ≥ 1`.
    OvertwistedHalf,
}

impl ContactClass {
    /// Wire name: `tight`, `ot_full` or `ot_half`.
    pub fn as_str(&self) -> &'static str {
        match self {
            ContactClass::Tight => "tight",
            ContactClass::OvertwistedFull => "ot_full",
            ContactClass::OvertwistedHalf => "ot_half",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "tight" => Some(ContactClass::Tight),
            "ot_full" => Some(ContactClass::OvertwistedFull),
            "ot_half" => Some(ContactClass::OvertwistedHalf),
            _ => None,
        }
    }

    pub fn is_tight(&self) -> bool {
        matches!(self, ContactClass::Tight)
    }
}

impl fmt::Display for ContactClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tight iff `Δ ≤ π`.
pub fn contact_class(c: &MomentCone) -> ContactClass {
    match (c.winding(), c.arc_class()) {
        (0, ArcClass::Convex | ArcClass::Straight) => ContactClass::Tight,
        (_, ArcClass::Convex | ArcClass::Straight) => ContactClass::OvertwistedFull,
        // Δ = 2πn is the half-Lutz twist of the tight S¹×S² at Δ = π, and a
        // full Lutz twist does not change an overtwisted class.
        (_, ArcClass::Zero | ArcClass::Reflex) => ContactClass::OvertwistedHalf,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassificationResult {
    pub lens: LensLabel,
    pub contact: ContactClass,
    /// Nontrivial invariant factors of `H₁`; `0` stands for `ℤ`.
    pub h1: Vec<BigInt>,
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h1: Vec<String> = self.h1.iter().map(ToString::to_string).collect();
        write!(f, "{} {} H1=[{}]", self.lens, self.contact, h1.join(","))
    }
}

/// Two cones carry contactomorphic structures iff their results are equal.
pub fn classify(c: &MomentCone) -> ClassificationResult {
    ClassificationResult { lens: lens_of_cone(c), contact: contact_class(c), h1: first_homology(c) }
}

/// `H₁` as the cokernel of the relations `e₂ = 0` and `k·e₁ - l·e₂ = 0`.
pub fn first_homology(c: &MomentCone) -> Vec<BigInt> {
    let (k, l) = second_ray(c);
    let relations = IntMatrix::from_rows([[BigInt::zero(), k], [BigInt::one(), -l]]);
    smith_normal_form(&relations).cokernel_factors()
}

/// Whether the two overtwisted structures on this lens space already differ
/// in `d₂`: the transverse circle orbit generates `H₁`, so this holds
/// everywhere except on `S³`.
pub fn d2_distinguishes(c: &MomentCone) -> bool {
    !second_ray(c).0.abs().is_one()
}
