//! Moment cones of contact toric 3-manifolds with non-free torus action.
//!
//! A cone is an ordered pair of rational rays `r1`, `r2` together with the
//! number of full turns swept counterclockwise from `r1` to `r2`. The total
//! angle `Δ = t₂ - t₁` is what distinguishes contact structures on the same
//! underlying lens space; the rays alone only see `Δ mod 2π`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_angle::{angle_between, direction_reduce, ArcClass, Direction, ExactAngle};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MomentCone {
    r1: Direction,
    r2: Direction,
    winding: u64,
}

impl MomentCone {
    /// Fails with [`Error::DegenerateCone`] when the cone spans no angle.
    pub fn new(r1: Direction, r2: Direction, winding: u64) -> Result<Self> {
        if winding == 0 && r1 == r2 {
            return Err(Error::DegenerateCone);
        }
        Ok(MomentCone { r1, r2, winding })
    }

    /// Convenience constructor from raw integer coordinates.
    pub fn from_coords(r1: (i64, i64), r2: (i64, i64), winding: u64) -> Result<Self> {
        MomentCone::new(Direction::new(r1.0, r1.1)?, Direction::new(r2.0, r2.1)?, winding)
    }

    pub fn r1(&self) -> &Direction {
        &self.r1
    }

    pub fn r2(&self) -> &Direction {
        &self.r2
    }

    pub fn winding(&self) -> u64 {
        self.winding
    }

    /// Total angle `Δ` swept from `r1` to `r2`.
    pub fn delta(&self) -> ExactAngle {
        ExactAngle::new(angle_between(&self.r1, &self.r2).dir, self.winding)
    }

    /// Position of `Δ mod 2π` relative to `0` and `π`, decided by the cross
    /// product of the rays.
    pub fn arc_class(&self) -> ArcClass {
        match self.r1.cross(&self.r2).sign() {
            num_bigint::Sign::Plus => ArcClass::Convex,
            num_bigint::Sign::Minus => ArcClass::Reflex,
            num_bigint::Sign::NoSign if self.r1 == self.r2 => ArcClass::Zero,
            num_bigint::Sign::NoSign => ArcClass::Straight,
        }
    }

    /// Canonical representative of the `SL(2,ℤ)` orbit and a map taking
    /// `self` to it.
    ///
    /// The first ray becomes `(1,0)`. The second ray `(l,k)` is then
    /// shear-reduced to `0 ≤ l < |k|`, or is `(±1,0)` when `k = 0`. The
    /// stabilizer of `(1,0)` is exactly the shear subgroup, so two cones are
    /// equivalent iff their canonical forms coincide.
    pub fn normalize(&self) -> (MomentCone, UnimodularMap) {
        let (p, q) = (self.r1.x(), self.r1.y());
        // a·p + b·q = 1 since r1 is primitive.
        let eg = p.extended_gcd(q);
        debug_assert!(eg.gcd.is_one());
        let rotate = UnimodularMap::new_unchecked(eg.x, eg.y, -q, p.clone());
        let (l, k) = rotate.apply_xy(self.r2.x(), self.r2.y());
        let map = if k.is_zero() {
            rotate
        } else {
            // Shear (l, k) -> (l + t·k, k) with the result in [0, |k|).
            let t = -l.div_floor(&k.abs()) * k.signum();
            UnimodularMap::shear(t).compose(&rotate)
        };
        let cone = map.apply(self);
        debug_assert_eq!(cone.r1, Direction::east());
        (cone, map)
    }

    pub fn canonical(&self) -> MomentCone {
        self.normalize().0
    }

    /// Half-Lutz twist along the transverse orbit: `Δ ↦ Δ + π`.
    pub fn half_lutz(&self) -> MomentCone {
        let carry = matches!(self.arc_class(), ArcClass::Straight | ArcClass::Reflex);
        MomentCone { r1: self.r1.clone(), r2: self.r2.neg(), winding: self.winding + u64::from(carry) }
    }

    /// Full Lutz twist: `Δ ↦ Δ + 2π`.
    pub fn full_lutz(&self) -> MomentCone {
        MomentCone { winding: self.winding + 1, ..self.clone() }
    }
}

impl fmt::Display for MomentCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} -> {}, winding {}]", self.r1, self.r2, self.winding)
    }
}

/// True iff the cones lie in one `SL(2,ℤ)` orbit.
pub fn toric_equivalent(a: &MomentCone, b: &MomentCone) -> bool {
    a.canonical() == b.canonical()
}

/// An element of `SL(2,ℤ)` with rows `(a, b)` and `(c, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMap::new_unchecked(a.into(), b.into(), c.into(), d.into());
        let det = m.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(m)
    }

    fn new_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        UnimodularMap { a, b, c, d }
    }

    pub fn identity() -> Self {
        UnimodularMap::new_unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// Rows `(1, t)`, `(0, 1)`.
    pub fn shear(t: impl Into<BigInt>) -> Self {
        UnimodularMap::new_unchecked(BigInt::one(), t.into(), BigInt::zero(), BigInt::one())
    }

    /// Rows `(-s, -1)`, `(1, 0)`: glues consecutive L-shapes of a plumbing
    /// across a sphere of self-intersection `s`.
    pub fn gluing(s: &BigInt) -> Self {
        UnimodularMap::new_unchecked(-s, -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap::new_unchecked(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> UnimodularMap {
        UnimodularMap::new_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub(crate) fn apply_xy(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn apply_direction(&self, v: &Direction) -> Direction {
        let (x, y) = self.apply_xy(v.x(), v.y());
        direction_reduce(x, y).expect("invertible map sends nonzero vectors to nonzero vectors")
    }

    /// Orientation-preserving maps commute with the deck translations of the
    /// circle's universal cover, so the winding is unchanged.
    pub fn apply(&self, c: &MomentCone) -> MomentCone {
        MomentCone { r1: self.apply_direction(&c.r1), r2: self.apply_direction(&c.r2), winding: c.winding }
    }
}

/// Checked form of [`UnimodularMap::apply`] for maps given as raw entries.
pub fn apply(m: [i64; 4], c: &MomentCone) -> Result<MomentCone> {
    Ok(UnimodularMap::new(m[0], m[1], m[2], m[3])?.apply(c))
}
