//! Invariants of the plumbed 4-manifold and Gompf's `θ` of its boundary.
//!
//! For a chain `(s₁,…,sₙ)` the 4-manifold is one 0-handle with `n` 2-handles,
//! so `χ = n + 1`, and `H₂` is spanned by the base spheres with the
//! tridiagonal intersection form `Q`. The adjunction formula for a sphere of
//! square `s` gives `⟨c₁, C⟩ = 2 + s`; solving `Q·a = d` writes `PD(c₁)` in
//! the sphere basis, and then
//!
//! ```text
//! θ = c₁² − 2χ − 3σ,    c₁² = aᵀ·Q·a = aᵀ·d.
//! ```
//!
//! Everything is exact: `σ` comes from congruence diagonalization over `ℚ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classify::lens_of_cone;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::plumbing::{cone_of_plumbing, Plumbing};

pub type Rational = BigRational;

/// Symmetric integer pairing on `H₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionForm {
    matrix: IntMatrix,
}

impl IntersectionForm {
    /// Fails unless `matrix` is square and symmetric.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::BadInput("intersection form must be symmetric".into()));
        }
        Ok(IntersectionForm { matrix })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Diagonal `sᵢ`, `1` on the off-diagonals, `0` elsewhere.
pub fn intersection_form(p: &Plumbing) -> IntersectionForm {
    let s = p.chain();
    let n = s.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = s[i].clone();
        if i + 1 < n {
            m[(i, i + 1)] = BigInt::one();
            m[(i + 1, i)] = BigInt::one();
        }
    }
    IntersectionForm { matrix: m }
}

/// Counts of positive, negative and zero entries in a diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

/// Sylvester inertia by symmetric Gaussian elimination.
pub fn inertia(q: &IntersectionForm) -> Inertia {
    let n = q.dim();
    let mut m = q.matrix.to_rational();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !m[(i, i)].is_zero()) {
            if p != k {
                m.swap_rows(p, k);
                m.swap_cols(p, k);
            }
            let pivot = m[(k, k)].clone();
            for j in k + 1..n {
                let f = -(&m[(j, k)] / &pivot);
                if !f.is_zero() {
                    m.add_row_multiple(j, k, &f);
                    m.add_col_multiple(j, k, &f);
                }
            }
            if pivot.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            k += 1;
            continue;
        }
        // All remaining diagonal entries vanish. A nonzero off-diagonal entry
        // m[i][j] spans a hyperbolic plane; adding e_j to e_i makes the new
        // diagonal entry 2·m[i][j] nonzero.
        let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m[(i, j)].is_zero());
        match off {
            Some((i, j)) => {
                let one = Rational::one();
                m.add_row_multiple(i, j, &one);
                m.add_col_multiple(i, j, &one);
            }
            None => {
                out.zero += n - k;
                break;
            }
        }
    }
    out
}

pub fn signature(q: &IntersectionForm) -> i64 {
    inertia(q).signature()
}

/// `b₀ + b₂ = 1 + n`.
pub fn euler_characteristic(p: &Plumbing) -> i64 {
    p.len() as i64 + 1
}

/// `⟨c₁, Cⱼ⟩ = 2 + sⱼ` for each base sphere.
pub fn adjunction_vector(p: &Plumbing) -> Vec<BigInt> {
    p.chain().iter().map(|s| s + 2).collect()
}

/// Coefficients of `PD(c₁)` in the sphere basis. On a singular but consistent
/// system, free variables are set to 0.
pub fn c1_pd(p: &Plumbing) -> Result<Vec<Rational>> {
    let q = intersection_form(p);
    let order: Vec<usize> = (0..q.dim()).collect();
    solve(q.matrix(), &adjunction_vector(p), &order)
}

/// Gauss-Jordan elimination of `m·x = rhs`, eliminating variables in the
/// given order; free variables are 0.
pub(crate) fn solve(m: &IntMatrix, rhs: &[BigInt], order: &[usize]) -> Result<Vec<Rational>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut aug = IntMatrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for (pos, &j) in order.iter().enumerate() {
            aug[(i, pos)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = rhs[i].clone();
    }
    let mut a: RatMatrix = aug.to_rational();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].recip();
        for j in 0..=cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = -a[(i, c)].clone();
                a.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !a[(i, cols)].is_zero()) {
        return Err(Error::NoTorsionC1);
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[order[c]] = a[(row, cols)].clone();
    }
    Ok(x)
}

/// `PD(c₁)² = aᵀ·d`.
pub fn c1_square(p: &Plumbing) -> Result<Rational> {
    let a = c1_pd(p)?;
    Ok(dot(&a, &adjunction_vector(p)))
}

fn dot(a: &[Rational], d: &[BigInt]) -> Rational {
    a.iter().zip(d).map(|(x, y)| x * Rational::from_integer(y.clone())).sum()
}

/// `θ = c₁² − 2χ − 3σ` of the boundary contact structure.
pub fn theta(p: &Plumbing) -> Result<Rational> {
    let c1_sq = c1_square(p)?;
    let chi = euler_characteristic(p);
    let sigma = signature(&intersection_form(p));
    Ok(c1_sq - Rational::from_integer(BigInt::from(2 * chi + 3 * sigma)))
}

/// `(θ(p1) − θ(p2)) / 4`. Nonzero means the boundary plane fields are not
/// homotopic. The boundaries must be the same lens space.
pub fn d3_difference(p1: &Plumbing, p2: &Plumbing) -> Result<Rational> {
    let (l1, l2) = (lens_of_cone(&cone_of_plumbing(p1)), lens_of_cone(&cone_of_plumbing(p2)));
    if l1 != l2 {
        return Err(Error::LensMismatch(l1.to_string(), l2.to_string()));
    }
    Ok((theta(p1)? - theta(p2)?) / Rational::from_integer(BigInt::from(4)))
}

/// Everything reported by the `invariants` subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantsReport {
    pub chi: i64,
    pub sigma: i64,
    pub c1_pd: Vec<Rational>,
    pub c1_sq: Rational,
    pub theta: Rational,
}

pub fn invariants(p: &Plumbing) -> Result<InvariantsReport> {
    let c1_pd = c1_pd(p)?;
    let c1_sq = dot(&c1_pd, &adjunction_vector(p));
    let chi = euler_characteristic(p);
    let sigma = signature(&intersection_form(p));
    let theta = &c1_sq - Rational::from_integer(BigInt::from(2 * chi + 3 * sigma));
    Ok(InvariantsReport { chi, sigma, c1_pd, c1_sq, theta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::plumbing::blow_up;
    use proptest::prelude::*;

    fn plumbing(chain: &[i64]) -> Plumbing {
        Plumbing::validate(chain.iter().copied()).unwrap()
    }

    fn q(rows: &[&[i64]]) -> IntersectionForm {
        IntersectionForm::new(IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()))).unwrap()
    }

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn forms() {
        assert_eq!(intersection_form(&plumbing(&[0, 0])), q(&[&[0, 1], &[1, 0]]));
        assert_eq!(intersection_form(&plumbing(&[1, -2])), q(&[&[1, 1], &[1, -2]]));
        let q1 = intersection_form(&plumbing(&[0; 6]));
        let expected: Vec<Vec<i64>> =
            (0..6).map(|i| (0..6).map(|j| i64::from(i.max(j) - i.min(j) == 1)).collect()).collect();
        assert_eq!(q1.matrix(), &IntMatrix::from_rows(expected));
        assert!(IntersectionForm::new(IntMatrix::from_rows([[0, 1], [2, 0]])).is_err());
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&intersection_form(&plumbing(&[0; 6]))), 0);
        assert_eq!(signature(&intersection_form(&plumbing(&[0; 4]))), 0);
        assert_eq!(signature(&q(&[&[1]])), 1);
        // Eigenvalues −1 and −3.
        assert_eq!(signature(&q(&[&[-2, 1], &[1, -2]])), -2);
        assert_eq!(inertia(&q(&[&[0, 0], &[0, 0]])), Inertia { positive: 0, negative: 0, zero: 2 });
        let i = inertia(&intersection_form(&plumbing(&[0, 0, 0])));
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
    }

    #[test]
    fn euler() {
        assert_eq!(euler_characteristic(&plumbing(&[0; 6])), 7);
        assert_eq!(euler_characteristic(&plumbing(&[0; 4])), 5);
        assert_eq!(euler_characteristic(&plumbing(&[1, -2])), 3);
    }

    #[test]
    fn chern_class() {
        assert_eq!(c1_pd(&plumbing(&[0; 6])).unwrap(), rats(&[2, 2, 0, 0, 2, 2]));
        assert_eq!(c1_pd(&plumbing(&[1, -2])).unwrap(), rats(&[2, 1]));
        assert_eq!(c1_pd(&plumbing(&[0, 0, 0])).unwrap(), rats(&[2, 2, 0]));
        assert_eq!(c1_pd(&plumbing(&[0, 0, -1, -1])).unwrap(), rats(&[1, 2, 1, 0]));
        // det Q = 0 and d = (3, 4, 3) is not in the image of Q.
        assert_eq!(c1_pd(&plumbing(&[1, 2, 1])), Err(Error::NoTorsionC1));
        assert_eq!(theta(&plumbing(&[1, 2, 1])), Err(Error::NoTorsionC1));

        assert_eq!(c1_square(&plumbing(&[0; 6])).unwrap(), rat(16));
        assert_eq!(c1_square(&plumbing(&[0; 4])).unwrap(), rat(8));
        assert_eq!(c1_square(&plumbing(&[1, -2])).unwrap(), rat(6));
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(&plumbing(&[0; 6])).unwrap(), rat(2));
        assert_eq!(theta(&plumbing(&[0; 4])).unwrap(), rat(-2));
        assert_eq!(theta(&plumbing(&[1, -2])).unwrap(), rat(0));
        // Q = [[2,1],[1,-3]], d = (4,-1): a = (11/7, 6/7), c₁² = 38/7, σ = 0.
        assert_eq!(theta(&plumbing(&[2, -3])).unwrap(), Rational::new((-4).into(), 7.into()));
    }

    #[test]
    fn d3_examples() {
        let d = d3_difference(&plumbing(&[0; 6]), &plumbing(&[0; 4])).unwrap();
        assert_eq!(d, rat(1));
        let p = plumbing(&[3, -2, -4]);
        assert_eq!(d3_difference(&p, &p).unwrap(), rat(0));
        let (a, b) = (plumbing(&[0, 0]), plumbing(&[0, 0, -1, -1]));
        assert!(classify(&cone_of_plumbing(&a)).lens.is_sphere());
        assert!(!classify(&cone_of_plumbing(&b)).lens.is_sphere());
        assert!(matches!(d3_difference(&a, &b), Err(Error::LensMismatch(..))));
    }

    #[test]
    fn report() {
        let r = invariants(&plumbing(&[0; 6])).unwrap();
        assert_eq!((r.chi, r.sigma), (7, 0));
        assert_eq!(r.c1_sq, rat(16));
        assert_eq!(r.theta, rat(2));
    }

    /// `(k, l)` up to `l ↦ l⁻¹ mod k`: lens space together with its
    /// orientation. `L(k,l)` and `L(k,-l)` share an unoriented label but are
    /// orientation-reversed, and θ sees the orientation.
    fn oriented_lens(p: &Plumbing) -> (i64, i64) {
        let n = cone_of_plumbing(p).canonical();
        let k = i64::try_from(n.r2().y()).unwrap().abs();
        let l = i64::try_from(n.r2().x()).unwrap();
        if k <= 1 {
            return (k, 0);
        }
        let l = l.rem_euclid(k);
        let inv = (1..k).find(|x| (x * l) % k == 1).unwrap();
        (k, l.min(inv))
    }

    #[test]
    fn tight_fillings_agree_on_theta() {
        use std::collections::HashMap;
        let mut seen: HashMap<(i64, i64), (Plumbing, Rational)> = HashMap::new();
        for len in 2..=4u32 {
            for code in 0..8i64.pow(len) {
                let chain: Vec<i64> = (0..len).map(|i| (code / 8i64.pow(i)) % 8 - 4).collect();
                let Ok(p) = Plumbing::validate(chain) else { continue };
                if !classify(&cone_of_plumbing(&p)).contact.is_tight() {
                    continue;
                }
                let Ok(t) = theta(&p) else { continue };
                let key = oriented_lens(&p);
                match seen.get(&key) {
                    Some((first, t0)) => assert_eq!(&t, t0, "{p} vs {first} on {key:?}"),
                    None => {
                        seen.insert(key, (p, t));
                    }
                }
            }
        }
        assert!(seen.len() > 100);
        // Orientation reversal is visible: (3,-2) bounds L(7,2), (2,-3) bounds
        // L(7,3) = -L(7,2).
        let (a, b) = (plumbing(&[3, -2]), plumbing(&[2, -3]));
        assert_eq!(classify(&cone_of_plumbing(&a)).lens, classify(&cone_of_plumbing(&b)).lens);
        assert_ne!(theta(&a).unwrap(), theta(&b).unwrap());
    }

    fn arb_plumbing() -> impl Strategy<Value = Plumbing> {
        prop::collection::vec(-4i64..=3, 2..=6).prop_filter_map("no pivot", |v| Plumbing::validate(v).ok())
    }

    proptest! {
        #[test]
        fn signature_bounds(p in arb_plumbing()) {
            let q = intersection_form(&p);
            let i = inertia(&q);
            prop_assert_eq!(i.positive + i.negative + i.zero, q.dim());
            prop_assert!(i.signature().unsigned_abs() as usize <= q.dim());
            prop_assert_eq!(i.signature().rem_euclid(2) as usize, i.rank() % 2);
            // Nonsingular iff no zero in the diagonalization.
            prop_assert_eq!(q.matrix().det().is_zero(), i.zero > 0);
        }

        #[test]
        fn c1_square_ignores_elimination_order(p in arb_plumbing()) {
            let q = intersection_form(&p);
            let d = adjunction_vector(&p);
            let fwd: Vec<usize> = (0..q.dim()).collect();
            let rev: Vec<usize> = fwd.iter().rev().copied().collect();
            match (solve(q.matrix(), &d, &fwd), solve(q.matrix(), &d, &rev)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(dot(&a, &d), dot(&b, &d)),
                (Err(e1), Err(e2)) => {
                    prop_assert_eq!(e1, Error::NoTorsionC1);
                    prop_assert_eq!(e2, Error::NoTorsionC1);
                }
                _ => prop_assert!(false, "solvability depends on order"),
            }
        }

        #[test]
        fn theta_survives_blow_up(p in arb_plumbing(), i in 0usize..6) {
            prop_assume!(i + 1 < p.len());
            if let (Ok(q), Ok(t)) = (blow_up(&p, i), theta(&p)) {
                prop_assert_eq!(theta(&q).unwrap(), t);
            }
        }
    }
}
