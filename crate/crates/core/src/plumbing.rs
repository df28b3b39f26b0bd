//! Linear plumbings of disk bundles over spheres and their concave boundaries.
//!
//! The moment image of a plumbing `(s₁,…,sₙ)` is glued from `n-1` L-shapes,
//! one per pair of adjacent spheres. Piece `j` has rays `(-1, a)` and
//! `(b, -1)` in its own chart and is moved into place by
//! `A₂⋯A_j`, where `A_j` has rows `(-s_j, -1)`, `(1, 0)`. The outer rays of
//! the glued image span the moment cone of the boundary.
//!
//! Conversely every moment cone is the boundary of some plumbing: strip half
//! turns until the remaining angle is at most `π`, realize that with a
//! continued fraction expansion, and append a pair of zero spheres for every
//! stripped half turn.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone::{MomentCone, UnimodularMap};
use crate::error::{Error, Result};
use crate::exact_angle::{angle_add, angle_between, ArcClass, Direction, ExactAngle};

/// A chain of self-intersection numbers with at least two spheres and at
/// least one non-negative entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Plumbing {
    chain: Vec<BigInt>,
}

impl Plumbing {
    pub fn validate<I, T>(chain: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let chain: Vec<BigInt> = chain.into_iter().map(Into::into).collect();
        if chain.len() < 2 {
            return Err(Error::TooShort(chain.len()));
        }
        if chain.iter().all(Signed::is_negative) {
            return Err(Error::NoPivot);
        }
        Ok(Plumbing { chain })
    }

    pub fn chain(&self) -> &[BigInt] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Indices `i` such that gluing around the piece `(sᵢ, sᵢ₊₁)` is allowed:
    /// `sᵢ ≥ 0`, or `i` is the last piece and `sₙ ≥ 0`.
    pub fn admissible_pivots(&self) -> Vec<usize> {
        let n = self.chain.len();
        (0..n - 1)
            .filter(|&i| !self.chain[i].is_negative() || (i == n - 2 && !self.chain[n - 1].is_negative()))
            .collect()
    }

    /// The chain with `0, 0` appended; adds `π` to the boundary angle.
    pub fn with_zero_pair(&self) -> Plumbing {
        let mut chain = self.chain.clone();
        chain.extend([BigInt::zero(), BigInt::zero()]);
        Plumbing { chain }
    }
}

impl fmt::Display for Plumbing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One L-shape piece with rays `(-1, a)` and `(b, -1)`, swept
/// counterclockwise from the first to the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LShape {
    pub a: BigInt,
    pub b: BigInt,
}

impl LShape {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_negative() && b.is_negative() {
            return Err(Error::BadInput(format!("L-shape ({a},{b}) has no non-negative entry")));
        }
        Ok(LShape { a, b })
    }

    pub fn first_ray(&self) -> Direction {
        Direction::new(-1, self.a.clone()).expect("nonzero")
    }

    pub fn second_ray(&self) -> Direction {
        Direction::new(self.b.clone(), -1).expect("nonzero")
    }

    /// `1 - ab`; positive for pieces narrower than a half turn.
    pub fn cross(&self) -> BigInt {
        BigInt::one() - &self.a * &self.b
    }
}

/// Decompose around the smallest admissible pivot.
pub fn decompose(p: &Plumbing) -> Vec<LShape> {
    let pivot = p.admissible_pivots()[0];
    decompose_at(p, pivot).expect("smallest admissible pivot")
}

/// Pieces `(s₁,0),…,(s_{i-1},0),(sᵢ,sᵢ₊₁),(0,sᵢ₊₂),…,(0,sₙ)` for the
/// zero-based pivot `i`.
pub fn decompose_at(p: &Plumbing, pivot: usize) -> Result<Vec<LShape>> {
    if !p.admissible_pivots().contains(&pivot) {
        return Err(Error::BadInput(format!("{pivot} is not an admissible pivot of {p}")));
    }
    let s = &p.chain;
    let pieces = (0..s.len() - 1)
        .map(|j| match j.cmp(&pivot) {
            std::cmp::Ordering::Less => LShape::new(s[j].clone(), 0),
            std::cmp::Ordering::Equal => LShape::new(s[j].clone(), s[j + 1].clone()),
            std::cmp::Ordering::Greater => LShape::new(0, s[j + 1].clone()),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(pieces)
}

/// The glued fan: boundary rays of every piece after moving it into place,
/// together with the total angle swept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    /// `n` rays; consecutive rays bound one piece.
    pub rays: Vec<Direction>,
    pub delta: ExactAngle,
}

pub fn fan(p: &Plumbing) -> Fan {
    fan_with_pieces(p, &decompose(p))
}

pub(crate) fn fan_with_pieces(p: &Plumbing, pieces: &[LShape]) -> Fan {
    let mut placement = UnimodularMap::identity();
    let mut rays = vec![pieces[0].first_ray()];
    let mut delta = ExactAngle::zero();
    for (j, piece) in pieces.iter().enumerate() {
        if j > 0 {
            placement = placement.compose(&UnimodularMap::gluing(&p.chain[j]));
        }
        let first = placement.apply_direction(&piece.first_ray());
        let second = placement.apply_direction(&piece.second_ray());
        debug_assert_eq!(&first, rays.last().unwrap(), "pieces must share boundary rays");
        // Each piece sweeps strictly between 0 and 2π, and unimodular maps
        // keep the sign of its cross product, so the residue below is the
        // exact angle of the placed piece.
        let sweep = angle_between(&first, &second);
        debug_assert_eq!(sweep.arc_class(), classify_cross(&piece.cross()));
        delta = angle_add(&delta, &sweep);
        rays.push(second);
    }
    Fan { rays, delta }
}

fn classify_cross(c: &BigInt) -> ArcClass {
    match c.sign() {
        num_bigint::Sign::Plus => ArcClass::Convex,
        num_bigint::Sign::Minus => ArcClass::Reflex,
        num_bigint::Sign::NoSign => ArcClass::Straight,
    }
}

/// Moment cone of the concave boundary: rays `R₁ = (-1, s₁)` and
/// `R₂ = A₂⋯A_{n-1}(sₙ, -1)`, winding from the summed piece angles.
pub fn cone_of_plumbing(p: &Plumbing) -> MomentCone {
    cone_from_fan(fan(p))
}

/// Same as [`cone_of_plumbing`] but glued around a chosen pivot.
pub fn cone_of_plumbing_at(p: &Plumbing, pivot: usize) -> Result<MomentCone> {
    Ok(cone_from_fan(fan_with_pieces(p, &decompose_at(p, pivot)?)))
}

fn cone_from_fan(fan: Fan) -> MomentCone {
    let r1 = fan.rays.first().unwrap().clone();
    let r2 = fan.rays.last().unwrap().clone();
    debug_assert_eq!(angle_between(&r1, &r2).dir, fan.delta.dir);
    MomentCone::new(r1, r2, fan.delta.winding).expect("every piece sweeps a positive angle")
}

/// Rays from the closed formula, independent of the decomposition.
pub fn boundary_rays(p: &Plumbing) -> (Direction, Direction) {
    let s = &p.chain;
    let n = s.len();
    let r1 = Direction::new(-1, s[0].clone()).expect("nonzero");
    let mut r2 = Direction::new(s[n - 1].clone(), -1).expect("nonzero");
    for sj in s[1..n - 1].iter().rev() {
        r2 = UnimodularMap::gluing(sj).apply_direction(&r2);
    }
    (r1, r2)
}

/// Expansion `k/l = s₁ - 1/(s₂ - 1/(… - 1/sₙ))` with `s₁ = ⌊k/l⌋` and every
/// later entry `≤ -2`. For `l = 1` this is just `[k]`.
pub fn hirzebruch_jung(k: impl Into<BigInt>, l: impl Into<BigInt>) -> Result<Vec<BigInt>> {
    let (k, l) = (k.into(), l.into());
    if k < BigInt::one() || l < BigInt::one() || !k.gcd(&l).is_one() {
        return Err(Error::BadInput(format!("need coprime k, l ≥ 1, got k={k}, l={l}")));
    }
    let (s1, rem) = k.div_mod_floor(&l);
    let mut out = vec![s1];
    // The tail is -1/r with r = rem/l; track 1/r = num/den.
    let (mut num, mut den) = (l, rem);
    while !den.is_zero() {
        let (q, r) = num.div_mod_floor(&den);
        if r.is_zero() {
            out.push(-q);
            break;
        }
        out.push(-q - 1);
        // r' = 1 - frac(num/den) = (den - r)/den, so 1/r' = den/(den - r).
        let next_den = &den - &r;
        num = den;
        den = next_den;
    }
    Ok(out)
}

/// [`hirzebruch_jung`], except that `[k]` for `l = 1` becomes the two-sphere
/// chain `[k-1, -1]`, which has the same value.
pub fn continued_fraction_expand(k: impl Into<BigInt>, l: impl Into<BigInt>) -> Result<Vec<BigInt>> {
    let mut out = hirzebruch_jung(k, l)?;
    if out.len() == 1 {
        let k = out.pop().unwrap();
        out = vec![k - 1, -BigInt::one()];
    }
    Ok(out)
}

/// Value of `s₁ - 1/(s₂ - 1/(… - 1/sₙ))`, evaluated right to left.
pub fn continued_fraction_eval(chain: &[BigInt]) -> Result<BigRational> {
    let (last, rest) =
        chain.split_last().ok_or_else(|| Error::BadInput("empty continued fraction".into()))?;
    let mut value = BigRational::from_integer(last.clone());
    for s in rest.iter().rev() {
        if value.is_zero() {
            return Err(Error::DivisionByZero);
        }
        value = BigRational::from_integer(s.clone()) - value.recip();
    }
    Ok(value)
}

/// A plumbing whose concave boundary has the given moment cone.
pub fn plumbing_of_cone(c: &MomentCone) -> Plumbing {
    // Strip half turns until the remaining angle lies in (0, π].
    let w = c.winding();
    let (half_turns, straight) = match c.arc_class() {
        ArcClass::Convex => (2 * w, false),
        ArcClass::Straight => (2 * w, true),
        ArcClass::Zero => (2 * w - 1, true),
        ArcClass::Reflex => (2 * w + 1, false),
    };
    let mut chain: Vec<BigInt> = if straight {
        vec![BigInt::zero(); 3]
    } else {
        let stripped = if half_turns % 2 == 0 { c.r2().clone() } else { c.r2().neg() };
        let base = MomentCone::new(c.r1().clone(), stripped, 0).expect("stripped cone is convex");
        let n = base.canonical();
        let (l, k) = (n.r2().x(), n.r2().y());
        if l.is_zero() {
            vec![BigInt::zero(); 2]
        } else {
            continued_fraction_expand(k.clone(), l.clone()).expect("normalized ray has 0 < l < k")
        }
    };
    chain.extend(std::iter::repeat_n(BigInt::zero(), 2 * half_turns as usize));
    Plumbing::validate(chain).expect("first entry is non-negative")
}

/// Blow up the intersection point of spheres `i` and `i + 1` (zero-based):
/// `(…, sᵢ, sᵢ₊₁, …) ↦ (…, sᵢ - 1, -1, sᵢ₊₁ - 1, …)`.
pub fn blow_up(p: &Plumbing, i: usize) -> Result<Plumbing> {
    if i + 1 >= p.len() {
        return Err(Error::BadInput(format!("no edge {i} in a chain of {} spheres", p.len())));
    }
    let mut chain = p.chain.clone();
    chain[i] -= 1;
    chain[i + 1] -= 1;
    chain.insert(i + 1, -BigInt::one());
    Plumbing::validate(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, ContactClass};
    use crate::cone::toric_equivalent;
    use proptest::prelude::*;

    fn plumbing(chain: &[i64]) -> Plumbing {
        Plumbing::validate(chain.iter().copied()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cone(r1: (i64, i64), r2: (i64, i64), w: u64) -> MomentCone {
        MomentCone::from_coords(r1, r2, w).unwrap()
    }

    fn shape(a: i64, b: i64) -> LShape {
        LShape::new(a, b).unwrap()
    }

    /// Oracle: exact evaluation with i64 fractions, independent of BigRational.
    fn eval_i64(chain: &[i64]) -> (i64, i64) {
        let (mut num, mut den) = (*chain.last().unwrap(), 1i64);
        for s in chain[..chain.len() - 1].iter().rev() {
            // s - den/num
            let (n2, d2) = (s * num - den, num);
            let g = n2.gcd(&d2) * d2.signum();
            num = n2 / g;
            den = d2 / g;
        }
        (num, den)
    }

    #[test]
    fn validate_examples() {
        assert!(Plumbing::validate([0, 0]).is_ok());
        assert_eq!(Plumbing::validate([-2, -2]), Err(Error::NoPivot));
        assert_eq!(Plumbing::validate([5]), Err(Error::TooShort(1)));
        assert_eq!(Plumbing::validate(Vec::<i64>::new()), Err(Error::TooShort(0)));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&plumbing(&[0, 0, 0, 0])), vec![shape(0, 0); 3]);
        assert_eq!(decompose(&plumbing(&[1, -2])), vec![shape(1, -2)]);
        assert_eq!(decompose(&plumbing(&[-3, 0, -2])), vec![shape(-3, 0), shape(0, -2)]);
        // Only the last sphere is non-negative: pivot moves to the last pair.
        assert_eq!(decompose(&plumbing(&[-2, -3, 1])), vec![shape(-2, 0), shape(-3, 1)]);
        assert!(decompose_at(&plumbing(&[-2, -3, 1]), 0).is_err());
    }

    #[test]
    fn cone_examples() {
        let c = cone_of_plumbing(&plumbing(&[0, 0]));
        assert!(toric_equivalent(&c, &cone((1, 0), (0, 1), 0)));
        assert_eq!(c.delta(), ExactAngle::new(Direction::new(0, 1).unwrap(), 0));

        let c = cone_of_plumbing(&plumbing(&[0, 0, 0, 0]));
        assert_eq!(c, cone((-1, 0), (0, 1), 0));
        assert_eq!(c.delta(), ExactAngle::new(Direction::new(0, -1).unwrap(), 0));
        assert_eq!(classify(&c).contact, ContactClass::OvertwistedHalf);
        assert!(classify(&c).lens.is_sphere());

        let c = cone_of_plumbing(&plumbing(&[1, -2]));
        assert_eq!(c, cone((-1, 1), (-2, -1), 0));
        assert_eq!(c.delta().dir, Direction::new(1, 3).unwrap());
        assert_eq!(c.canonical(), cone((1, 0), (2, 3), 0));

        let c = cone_of_plumbing(&plumbing(&[0, 0, 0, 0, 0, 0]));
        assert_eq!(c.delta(), ExactAngle::new(Direction::new(0, 1).unwrap(), 1));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(continued_fraction_expand(3, 1).unwrap(), big(&[2, -1]));
        assert_eq!(continued_fraction_expand(3, 2).unwrap(), big(&[1, -2]));
        assert_eq!(continued_fraction_expand(5, 3).unwrap(), big(&[1, -2, -2]));
        assert_eq!(eval_i64(&[1, -2]), (3, 2));
        assert_eq!(eval_i64(&[1, -2, -2]), (5, 3));
        assert_eq!(hirzebruch_jung(3, 1).unwrap(), big(&[3]));
        assert_eq!(hirzebruch_jung(2, 3).unwrap(), big(&[0, -2, -2]));
        assert!(matches!(continued_fraction_expand(4, 2), Err(Error::BadInput(_))));
        assert!(matches!(continued_fraction_expand(0, 1), Err(Error::BadInput(_))));
    }

    #[test]
    fn eval_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(continued_fraction_eval(&big(&[2, -1])).unwrap(), r(3, 1));
        assert_eq!(continued_fraction_eval(&big(&[7])).unwrap(), r(7, 1));
        assert_eq!(continued_fraction_eval(&big(&[1, -2, -2])).unwrap(), r(5, 3));
        assert_eq!(continued_fraction_eval(&big(&[1, 0])), Err(Error::DivisionByZero));
        // 1 - 1/(1 - 1/1) divides by zero in the middle.
        assert_eq!(continued_fraction_eval(&big(&[1, 1, 1])), Err(Error::DivisionByZero));
    }

    #[test]
    fn plumbing_of_cone_examples() {
        assert_eq!(plumbing_of_cone(&cone((1, 0), (0, 1), 1)), plumbing(&[0; 6]));
        assert_eq!(plumbing_of_cone(&cone((1, 0), (0, -1), 0)), plumbing(&[0; 4]));
        assert_eq!(plumbing_of_cone(&cone((1, 0), (-1, 0), 0)), plumbing(&[0; 3]));
        assert_eq!(plumbing_of_cone(&cone((1, 0), (0, 1), 0)), plumbing(&[0, 0]));
        assert_eq!(plumbing_of_cone(&cone((1, 0), (1, 0), 1)), plumbing(&[0; 3]).with_zero_pair());
        assert_eq!(plumbing_of_cone(&cone((1, 0), (2, 3), 0)), plumbing(&[1, -2]));
    }

    #[test]
    fn blow_up_examples() {
        let out = blow_up(&plumbing(&[2, 0]), 0).unwrap();
        assert_eq!(out, plumbing(&[1, -1, -1]));
        assert_eq!(classify(&cone_of_plumbing(&out)), classify(&cone_of_plumbing(&plumbing(&[2, 0]))));
        let out = blow_up(&plumbing(&[1, -2]), 0).unwrap();
        assert_eq!(out, plumbing(&[0, -1, -3]));
        assert_eq!(classify(&cone_of_plumbing(&out)), classify(&cone_of_plumbing(&plumbing(&[1, -2]))));
        assert_eq!(blow_up(&plumbing(&[0, 0]), 0), Err(Error::NoPivot));
        assert!(matches!(blow_up(&plumbing(&[0, 0]), 1), Err(Error::BadInput(_))));
    }

    #[test]
    fn closed_form_rays_agree() {
        for chain in [&[0, 0][..], &[1, -2], &[3, -1, 4, -5], &[-1, 0, -1, -1], &[-2, -3, 1]] {
            let p = plumbing(chain);
            let c = cone_of_plumbing(&p);
            assert_eq!(boundary_rays(&p), (c.r1().clone(), c.r2().clone()));
        }
    }

    pub(crate) fn arb_plumbing(max_len: usize) -> impl Strategy<Value = Plumbing> {
        prop::collection::vec(-4i64..=3, 2..=max_len)
            .prop_filter_map("no pivot", |v| Plumbing::validate(v).ok())
    }

    fn arb_cone() -> impl Strategy<Value = MomentCone> {
        let v = (-20i64..=20, -20i64..=20).prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0);
        (v.clone(), v, 0u64..=2)
            .prop_filter_map("degenerate", |(a, b, w)| MomentCone::from_coords(a, b, w).ok())
    }

    proptest! {
        #[test]
        fn round_trip(c in arb_cone()) {
            let back = cone_of_plumbing(&plumbing_of_cone(&c));
            prop_assert!(toric_equivalent(&back, &c), "{} -> {}", c, back);
            prop_assert_eq!(classify(&back), classify(&c));
        }

        #[test]
        fn expansion_identity(k in 1i64..500, l in 1i64..500) {
            prop_assume!(k.gcd(&l) == 1);
            let raw = hirzebruch_jung(k, l).unwrap();
            prop_assert!(raw.len() as i64 <= l);
            prop_assert!(!raw[0].is_negative());
            prop_assert!(raw[1..].iter().all(|s| s <= &BigInt::from(-2)));
            let out = continued_fraction_expand(k, l).unwrap();
            prop_assert_eq!(continued_fraction_eval(&out).unwrap(), BigRational::new(k.into(), l.into()));
            let small: Vec<i64> = out.iter().map(|s| i64::try_from(s).unwrap()).collect();
            prop_assert_eq!(eval_i64(&small), (k, l));
        }

        #[test]
        fn pivot_independence(p in arb_plumbing(7)) {
            let reference = cone_of_plumbing(&p);
            for pivot in p.admissible_pivots() {
                let c = cone_of_plumbing_at(&p, pivot).unwrap();
                prop_assert!(toric_equivalent(&c, &reference), "{} pivot {}", p, pivot);
                prop_assert_eq!(c.delta(), reference.delta());
            }
        }

        #[test]
        fn zero_pair_adds_half_turn(p in arb_plumbing(7)) {
            let before = cone_of_plumbing(&p).delta();
            let after = cone_of_plumbing(&p.with_zero_pair()).delta();
            prop_assert_eq!(after, &before + &ExactAngle::half_turn());
        }

        #[test]
        fn convex_chains_are_tight(s1 in 0i64..6, tail in prop::collection::vec(-6i64..=-2, 1..6)) {
            let mut chain = vec![s1];
            chain.extend(tail);
            let c = cone_of_plumbing(&plumbing(&chain));
            prop_assert!(c.delta() < ExactAngle::half_turn());
            prop_assert!(classify(&c).contact.is_tight());
        }

        #[test]
        fn blow_up_preserves_boundary(p in arb_plumbing(6), i in 0usize..6) {
            prop_assume!(i + 1 < p.len());
            if let Ok(q) = blow_up(&p, i) {
                prop_assert_eq!(classify(&cone_of_plumbing(&q)), classify(&cone_of_plumbing(&p)));
            }
        }
    }
}
