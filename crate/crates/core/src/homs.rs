//! Words in the discrete Heisenberg group and homomorphisms into `G`.

use std::fmt;

use crate::heis::{HeisPoint, LieVector};
use crate::linalg::{Mat2, Mat3};
use crate::scalar::{Rational, Scalar, Sign, Tolerance};
use num_traits::ToPrimitive;

/// Element `[m, n, k]` of `Γ = G ∩ GL₃ℤ`.
///
/// As a product of generators, `[m,n,k] = γ1^m · γ2^n · z^(k − mn)` with
/// `z = [γ1, γ2] = [0, 0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaWord {
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

impl GammaWord {
    pub const IDENTITY: GammaWord = GammaWord { m: 0, n: 0, k: 0 };
    pub const GAMMA1: GammaWord = GammaWord { m: 1, n: 0, k: 0 };
    pub const GAMMA2: GammaWord = GammaWord { m: 0, n: 1, k: 0 };
    pub const CENTER: GammaWord = GammaWord { m: 0, n: 0, k: 1 };

    pub const fn new(m: i64, n: i64, k: i64) -> Self {
        Self { m, n, k }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.m + rhs.m,
            self.n + rhs.n,
            self.k + rhs.k + self.m * rhs.n,
        )
    }

    pub fn inv(&self) -> Self {
        Self::new(-self.m, -self.n, self.m * self.n - self.k)
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).mul(&self.inv()).mul(&rhs.inv())
    }

    /// Largest absolute coordinate; words with `max_coord() <= N` form the word box of size `N`.
    pub fn max_coord(&self) -> i64 {
        self.m.abs().max(self.n.abs()).max(self.k.abs())
    }

    pub fn to_point<S: Scalar>(&self) -> HeisPoint<S> {
        HeisPoint::from_ints(self.m, self.n, self.k)
    }

    /// All words in the box `|m|, |n|, |k| <= bound`, in lexicographic order.
    pub fn box_iter(bound: i64) -> impl Iterator<Item = GammaWord> {
        let r = -bound..=bound;
        r.clone().flat_map(move |m| {
            let r2 = -bound..=bound;
            r2.flat_map(move |n| (-bound..=bound).map(move |k| GammaWord::new(m, n, k)))
        })
    }

    pub fn to_array(&self) -> [i64; 3] {
        [self.m, self.n, self.k]
    }

    /// The word for an integral point of `G`, if it is one.
    pub fn from_point(p: &HeisPoint<Rational>) -> Option<Self> {
        let int = |x: &Rational| x.is_integer().then(|| x.to_integer().to_i64()).flatten();
        Some(GammaWord::new(int(&p.a)?, int(&p.b)?, int(&p.c)?))
    }
}

impl fmt::Display for GammaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.k)
    }
}

/// A homomorphism `ρ: Γ → G`, determined by the images of `γ1` and `γ2`.
///
/// Γ's only relation (its commutator is central) holds for any two elements
/// of `G`, so every pair of images defines a homomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct HeisHom<S> {
    pub g1: HeisPoint<S>,
    pub g2: HeisPoint<S>,
}

impl<S: Scalar> HeisHom<S> {
    pub fn new(g1: HeisPoint<S>, g2: HeisPoint<S>) -> Self {
        Self { g1, g2 }
    }

    /// The inclusion `Γ ⊂ G`.
    pub fn inclusion() -> Self {
        Self::new(HeisPoint::from_ints(1, 0, 0), HeisPoint::from_ints(0, 1, 0))
    }

    /// The trivial homomorphism.
    pub fn trivial() -> Self {
        Self::new(HeisPoint::identity(), HeisPoint::identity())
    }

    /// `A = (a1 a2; b1 b2)`: the abelianized part of the homomorphism.
    pub fn a_matrix(&self) -> Mat2<S> {
        Mat2::new(
            self.g1.a.clone(),
            self.g2.a.clone(),
            self.g1.b.clone(),
            self.g2.b.clone(),
        )
    }

    /// `det A = a1·b2 − a2·b1`, also the central entry of `ρ(z)`.
    pub fn det_a(&self) -> S {
        self.g1.a.clone() * &self.g2.b - &(self.g2.a.clone() * &self.g1.b)
    }

    /// Image of the central generator `z = [γ1, γ2]`.
    pub fn central_image(&self) -> HeisPoint<S> {
        HeisPoint::new(S::zero(), S::zero(), self.det_a())
    }

    pub fn apply(&self, w: &GammaWord) -> HeisPoint<S> {
        self.g1
            .pow(w.m)
            .mul(&self.g2.pow(w.n))
            .mul(&self.central_image().pow(w.k - w.m * w.n))
    }

    /// Matrix of the induced Lie algebra map in the basis `(e1, e2, e3)`.
    pub fn hom_matrix(&self) -> Mat3<S> {
        let c1 = self.g1.log().to_array();
        let c2 = self.g2.log().to_array();
        Mat3::from_columns(c1, c2, [S::zero(), S::zero(), self.det_a()])
    }

    /// The unique continuous extension `exp ∘ ρ₀ ∘ log : G → G`.
    pub fn extend(&self, g: &HeisPoint<S>) -> HeisPoint<S> {
        LieVector::from_array(self.hom_matrix().apply(&g.log().to_array())).exp()
    }

    /// Injective iff `det A ≠ 0`.
    pub fn is_injective(&self, tol: Tolerance) -> bool {
        self.det_a().sign(tol) != Sign::Zero
    }

    /// Composes with conjugation by `h`: `w ↦ h ρ(w) h⁻¹`.
    pub fn conjugate(&self, h: &HeisPoint<S>) -> Self {
        // only the bracket term survives: c_i ↦ c_i + u·b_i − v·a_i
        let shift = |g: &HeisPoint<S>| {
            HeisPoint::new(
                g.a.clone(),
                g.b.clone(),
                g.c.clone() + &(h.a.clone() * &g.b) - &(h.b.clone() * &g.a),
            )
        };
        Self::new(shift(&self.g1), shift(&self.g2))
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T + Copy) -> HeisHom<T>
    where
        T: Scalar,
    {
        HeisHom {
            g1: self.g1.map(f),
            g2: self.g2.map(f),
        }
    }
}
