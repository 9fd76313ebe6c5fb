//! Proper discontinuity of `Γ_{ρ,ρ'}` acting on `G×G/ΔG`.
//!
//! The action is properly discontinuous (and then automatically cocompact)
//! exactly when
//!
//! * (a) `det(A − A') ≠ 0`, and
//! * (b) `det A − det A' ≠ 0`,
//!
//! where `A`, `A'` are the abelianized 2×2 matrices of `ρ`, `ρ'`. The
//! underlying test is that `ρ₀(X) = Ad_h ρ'₀(X)` forces `X = 0` for every
//! `h ∈ G`; [`HomPair::ci_kernel`] computes that solution space directly.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{DeformError, Result};
use crate::heis::{HeisPoint, LieVector};
use crate::homs::HeisHom;
use crate::linalg::{Mat2, Mat3};
use crate::scalar::{Scalar, Sign, Tolerance};

/// A pair of homomorphisms `(ρ, ρ')` defining `Γ_{ρ,ρ'} ⊂ G×G`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomPair<S> {
    rho: HeisHom<S>,
    rho_prime: HeisHom<S>,
    a: Mat2<S>,
    a_prime: Mat2<S>,
}

/// Connected component of the proper region, labelled by the orientation of
/// the base torus (`sign det(A − A')`) and of the circle fiber
/// (`sign(det A − det A')`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Signs { torus: Sign, fiber: Sign },
    Boundary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProperVerdict<S> {
    /// `det(A − A') ≠ 0`
    pub cond_a: bool,
    /// `det A − det A' ≠ 0`
    pub cond_b: bool,
    pub proper: bool,
    /// Float path only: a determinant fell within the tolerance, so the
    /// pair sits numerically on the boundary and no verdict is claimed.
    pub undecided: bool,
    pub torus_matrix: Mat2<S>,
    pub torus_det: S,
    pub fiber_value: S,
    pub component: Component,
    pub rho_injective: bool,
    pub rho_prime_injective: bool,
}

/// Geometric data of the double coset space viewed as a circle bundle
/// over a torus.
#[derive(Debug, Clone, PartialEq)]
pub struct Geometry<S> {
    pub torus_matrix: Mat2<S>,
    pub fiber_length: S,
    pub fiber_orientation: Sign,
    pub torus_orientation: Sign,
}

impl<S: Scalar> HomPair<S> {
    pub fn new(rho: HeisHom<S>, rho_prime: HeisHom<S>) -> Self {
        let a = rho.a_matrix();
        let a_prime = rho_prime.a_matrix();
        Self {
            rho,
            rho_prime,
            a,
            a_prime,
        }
    }

    /// The pair with abelianized matrices `a`, `a_prime` and central entries
    /// `(c1, c2, c1', c2')`.
    pub fn from_matrices(a: &Mat2<S>, a_prime: &Mat2<S>, c: [S; 4]) -> Self {
        let hom = |m: &Mat2<S>, c1: S, c2: S| {
            HeisHom::new(
                HeisPoint::new(m.0[0][0].clone(), m.0[1][0].clone(), c1),
                HeisPoint::new(m.0[0][1].clone(), m.0[1][1].clone(), c2),
            )
        };
        let [c1, c2, c1p, c2p] = c;
        Self::new(hom(a, c1, c2), hom(a_prime, c1p, c2p))
    }

    /// The standard left action of `Γ ⊂ G`.
    pub fn inclusion_trivial() -> Self {
        Self::new(HeisHom::inclusion(), HeisHom::trivial())
    }

    pub fn rho(&self) -> &HeisHom<S> {
        &self.rho
    }

    pub fn rho_prime(&self) -> &HeisHom<S> {
        &self.rho_prime
    }

    pub fn a(&self) -> &Mat2<S> {
        &self.a
    }

    pub fn a_prime(&self) -> &Mat2<S> {
        &self.a_prime
    }

    pub fn torus_matrix(&self) -> Mat2<S> {
        self.a.sub(&self.a_prime)
    }

    pub fn fiber_value(&self) -> S {
        self.rho.det_a() - &self.rho_prime.det_a()
    }

    pub fn swap(&self) -> Self {
        Self::new(self.rho_prime.clone(), self.rho.clone())
    }

    pub fn is_proper(&self, tol: Tolerance) -> ProperVerdict<S> {
        let torus_matrix = self.torus_matrix();
        let torus_det = torus_matrix.det();
        let fiber_value = self.fiber_value();
        let torus = torus_det.sign(tol);
        let fiber = fiber_value.sign(tol);
        let cond_a = torus != Sign::Zero;
        let cond_b = fiber != Sign::Zero;
        let proper = cond_a && cond_b;
        let component = if proper {
            Component::Signs { torus, fiber }
        } else {
            Component::Boundary
        };
        ProperVerdict {
            cond_a,
            cond_b,
            proper,
            undecided: !S::EXACT && !proper,
            torus_matrix,
            torus_det,
            fiber_value,
            component,
            rho_injective: self.rho.is_injective(tol),
            rho_prime_injective: self.rho_prime.is_injective(tol),
        }
    }

    /// Basis of `{X ∈ 𝔤 : ρ₀(X) = Ad_h ρ'₀(X)}`.
    pub fn ci_kernel(&self, h: &HeisPoint<S>, tol: Tolerance) -> Vec<LieVector<S>> {
        self.ci_matrix(h)
            .kernel(tol)
            .into_iter()
            .map(LieVector::from_array)
            .collect()
    }

    /// `M − Ad_h·M'`; block lower-triangular with diagonal blocks `A − A'`
    /// and `det A − det A'` for every `h`.
    pub fn ci_matrix(&self, h: &HeisPoint<S>) -> Mat3<S> {
        let m = self.rho.hom_matrix();
        let m_prime = self.rho_prime.hom_matrix();
        m.sub(&adjoint_matrix(h).mul(&m_prime))
    }

    /// Trivial-intersection check at `h = e` and at `samples` seeded random `h`.
    pub fn ci_check(&self, samples: usize, tol: Tolerance) -> bool {
        sample_points::<S>(samples, CI_SEED)
            .iter()
            .chain(std::iter::once(&HeisPoint::identity()))
            .all(|h| self.ci_kernel(h, tol).is_empty())
    }

    pub fn geometry(&self, tol: Tolerance) -> Result<Geometry<S>> {
        let verdict = self.is_proper(tol);
        let Component::Signs { torus, fiber } = verdict.component else {
            return Err(DeformError::NotProper {
                det_diff_matrix: verdict.torus_det.to_string(),
                fiber: verdict.fiber_value.to_string(),
            });
        };
        Ok(Geometry {
            torus_matrix: verdict.torus_matrix,
            fiber_length: verdict.fiber_value.abs(),
            fiber_orientation: fiber,
            torus_orientation: torus,
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> HomPair<T> {
        HomPair::new(self.rho.map(f), self.rho_prime.map(f))
    }
}

/// Default number of random `h` in [`HomPair::ci_check`].
pub const DEFAULT_CI_SAMPLES: usize = 8;

const CI_SEED: u64 = 0x005e_edc1;

/// The 3×3 matrix of `Ad_h` in the basis `(e1, e2, e3)`.
pub fn adjoint_matrix<S: Scalar>(h: &HeisPoint<S>) -> Mat3<S> {
    let (o, z) = (S::one(), S::zero());
    Mat3([
        [o.clone(), z.clone(), z.clone()],
        [z.clone(), o.clone(), z],
        [-h.b.clone(), h.a.clone(), o],
    ])
}

/// Seeded random points with coordinates `p/q`, `|p| ≤ 40`, `1 ≤ q ≤ 8`.
pub fn sample_points<S: Scalar>(count: usize, seed: u64) -> Vec<HeisPoint<S>> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coord = || S::ratio(rng.gen_range(-40..=40), rng.gen_range(1..=8));
    (0..count)
        .map(|_| {
            let (a, b, c) = (coord(), coord(), coord());
            HeisPoint::new(a, b, c)
        })
        .collect()
}
