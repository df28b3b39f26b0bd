//! Exact angles with rational slope.
//!
//! An angle `t` with `tan t` rational (or undefined) is stored as a primitive
//! integer vector pointing in direction `t`, plus the number of full turns
//! already swept. Adding two angles multiplies the vectors as Gaussian
//! integers, since `arg(z * w) = arg z + arg w`, and the winding is carried
//! whenever the sum passes `2π`.
//!
//! Coordinates are [`BigInt`]: long plumbing chains produce large products.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A primitive nonzero integer vector.
///
/// Two directions are equal iff they point the same way. The [`Ord`] impl
/// orders by argument in `[0, 2π)`, starting at the positive x-axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    x: BigInt,
    y: BigInt,
}

/// Reduce `(x, y)` to a primitive vector by dividing out `gcd(|x|, |y|)`.
pub fn direction_reduce(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Direction> {
    let (x, y) = (x.into(), y.into());
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = x.gcd(&y);
    Ok(Direction { x: x / &g, y: y / &g })
}

impl Direction {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        direction_reduce(x, y)
    }

    /// The positive x-axis, argument 0.
    pub fn east() -> Self {
        Direction { x: BigInt::one(), y: BigInt::zero() }
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// Quadrant index 0..4. Each axis ray opens the quadrant that starts at it
    /// counterclockwise, so `(1,0)` is in quadrant 0 and `(0,1)` in quadrant 1.
    pub fn quadrant(&self) -> u8 {
        let (x, y) = (self.x.sign(), self.y.sign());
        use num_bigint::Sign::*;
        match (x, y) {
            (Plus, NoSign) | (Plus, Plus) => 0,
            (NoSign, Plus) | (Minus, Plus) => 1,
            (Minus, NoSign) | (Minus, Minus) => 2,
            _ => 3,
        }
    }

    /// `x_self * y_other - y_self * x_other`.
    pub fn cross(&self, other: &Direction) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Direction) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn neg(&self) -> Direction {
        Direction { x: -&self.x, y: -&self.y }
    }

    /// Gaussian product `self * other`, re-reduced.
    pub fn mul(&self, other: &Direction) -> Direction {
        let x = &self.x * &other.x - &self.y * &other.y;
        let y = &self.x * &other.y + &self.y * &other.x;
        direction_reduce(x, y).expect("product of nonzero Gaussian integers is nonzero")
    }

    /// Gaussian product `self * conj(other)`, re-reduced; its argument is
    /// `arg self - arg other (mod 2π)`.
    pub fn mul_conj(&self, other: &Direction) -> Direction {
        let x = &self.x * &other.x + &self.y * &other.y;
        let y = &self.y * &other.x - &self.x * &other.y;
        direction_reduce(x, y).expect("product of nonzero Gaussian integers is nonzero")
    }

    /// Where the argument of this direction sits relative to the half turn.
    pub fn arc_class(&self) -> ArcClass {
        match (self.y.sign(), self.x.is_positive()) {
            (num_bigint::Sign::NoSign, true) => ArcClass::Zero,
            (num_bigint::Sign::NoSign, false) => ArcClass::Straight,
            (num_bigint::Sign::Plus, _) => ArcClass::Convex,
            (num_bigint::Sign::Minus, _) => ArcClass::Reflex,
        }
    }

    /// Floating-point argument in `[0, 2π)`. For drawing only.
    pub fn to_radians(&self) -> f64 {
        let a = big_to_f64(&self.y).atan2(big_to_f64(&self.x));
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }

    /// Unit vector in this direction, in floating point. For drawing only.
    pub fn unit_f64(&self) -> (f64, f64) {
        let (x, y) = (big_to_f64(&self.x), big_to_f64(&self.y));
        let r = x.hypot(y);
        (x / r, y / r)
    }
}

fn big_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Position of an argument `a ∈ [0, 2π)` relative to `0` and `π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcClass {
    /// `a = 0`
    Zero,
    /// `0 < a < π`
    Convex,
    /// `a = π`
    Straight,
    /// `π < a < 2π`
    Reflex,
}

/// Compare `arg u` and `arg v` in `[0, 2π)`.
pub fn arg_compare(u: &Direction, v: &Direction) -> Ordering {
    u.quadrant().cmp(&v.quadrant()).then_with(|| {
        // Inside one quadrant the two arguments differ by less than π/2, so
        // the cross product sign decides.
        match u.cross(v).sign() {
            num_bigint::Sign::Plus => Ordering::Less,
            num_bigint::Sign::Minus => Ordering::Greater,
            num_bigint::Sign::NoSign => Ordering::Equal,
        }
    })
}

impl PartialOrd for Direction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Direction {
    fn cmp(&self, other: &Self) -> Ordering {
        arg_compare(self, other)
    }
}

/// An angle `2π * winding + arg(dir)` on the universal cover of the circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactAngle {
    pub dir: Direction,
    pub winding: u64,
}

impl ExactAngle {
    pub fn new(dir: Direction, winding: u64) -> Self {
        ExactAngle { dir, winding }
    }

    pub fn zero() -> Self {
        ExactAngle::new(Direction::east(), 0)
    }

    pub fn half_turn() -> Self {
        ExactAngle::new(Direction::east().neg(), 0)
    }

    pub fn full_turn() -> Self {
        ExactAngle::new(Direction::east(), 1)
    }

    /// Category of the fractional part `arg(dir)`.
    pub fn arc_class(&self) -> ArcClass {
        self.dir.arc_class()
    }

    /// Floating-point value in radians. For drawing and test oracles.
    pub fn to_radians(&self) -> f64 {
        std::f64::consts::TAU * self.winding as f64 + self.dir.to_radians()
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2π·{} + arg{}", self.winding, self.dir)
    }
}

/// `arg v - arg u (mod 2π)`, as an angle with winding 0.
pub fn angle_between(u: &Direction, v: &Direction) -> ExactAngle {
    ExactAngle::new(v.mul_conj(u), 0)
}

pub fn angle_add(a: &ExactAngle, b: &ExactAngle) -> ExactAngle {
    let dir = a.dir.mul(&b.dir);
    // Both arguments lie in [0, 2π): the sum wrapped past 2π exactly when the
    // product's argument fell below the first operand's.
    let carry = b.dir != Direction::east() && arg_compare(&dir, &a.dir) == Ordering::Less;
    ExactAngle::new(dir, a.winding + b.winding + u64::from(carry))
}

pub fn angle_compare(a: &ExactAngle, b: &ExactAngle) -> Ordering {
    a.winding.cmp(&b.winding).then_with(|| arg_compare(&a.dir, &b.dir))
}

impl PartialOrd for ExactAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        angle_compare(self, other)
    }
}

impl std::ops::Add for &ExactAngle {
    type Output = ExactAngle;

    fn add(self, rhs: &ExactAngle) -> ExactAngle {
        angle_add(self, rhs)
    }
}
