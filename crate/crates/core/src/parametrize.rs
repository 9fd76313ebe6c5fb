//! Explicit coordinates on the parameter space of proper pairs and on its
//! quotient by conjugation.
//!
//! A parameter point `(S, t0, t1, t2, t3, c1, c2, c1', c2')` with
//! `S ∈ GL₂ℝ`, `t0 ≠ 0` maps to the pair whose abelianized matrices are
//!
//! ```text
//! A  = ½(S·V + S)
//! A' = ½(S·V − S)        V = (t0+t3  t1 ; t2  t0−t3)
//! ```
//!
//! and whose central entries are the four `c`'s. Then `A − A' = S` and
//! `det A − det A' = t0·det S`, so every image is proper. The inverse goes
//! through `ω(A, A') = (A − A', (A − A')⁻¹(A + A'))`.

use crate::error::{DeformError, Result};
use crate::heis::HeisPoint;
use crate::homs::HeisHom;
use crate::linalg::Mat2;
use crate::properness::HomPair;
use crate::scalar::{Scalar, Sign, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct ParamPoint<S> {
    pub s: Mat2<S>,
    /// `(t0, t1, t2, t3)`
    pub t: [S; 4],
    /// `(c1, c2, c1', c2')`
    pub c: [S; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct UVPair<S> {
    pub u: Mat2<S>,
    pub v: Mat2<S>,
}

/// Coordinates on the deformation space `GL₂ℝ × ℝ^× × ℝ³`.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalCoords<S> {
    pub s: Mat2<S>,
    pub t0: S,
    /// `(t1, t2, t3)`
    pub t: [S; 3],
}

/// Result of [`canonicalize`]: the coordinates plus the conjugate of the
/// input with vanishing central entries and the conjugators that produce it.
#[derive(Debug, Clone, PartialEq)]
pub struct Canonicalized<S> {
    pub coords: CanonicalCoords<S>,
    pub representative: HomPair<S>,
    pub h1: HeisPoint<S>,
    pub h2: HeisPoint<S>,
}

impl<S: Scalar> ParamPoint<S> {
    pub fn new(s: Mat2<S>, t: [S; 4], c: [S; 4]) -> Self {
        Self { s, t, c }
    }

    pub fn validate(&self, tol: Tolerance) -> Result<()> {
        let det = self.s.det();
        if det.is_zero_at(tol) {
            return Err(DeformError::SingularS(det.to_string()));
        }
        if self.t[0].is_zero_at(tol) {
            return Err(DeformError::ZeroT0);
        }
        Ok(())
    }

    /// `V = (t0+t3, t1; t2, t0−t3)`
    pub fn v_matrix(&self) -> Mat2<S> {
        let [t0, t1, t2, t3] = &self.t;
        Mat2::new(t0.clone() + t3, t1.clone(), t2.clone(), t0.clone() - t3)
    }

    /// Reads `(t0, t1, t2, t3)` back off `V`.
    pub fn t_from_v(v: &Mat2<S>) -> [S; 4] {
        let m = &v.0;
        [
            v.trace().half(),
            m[0][1].clone(),
            m[1][0].clone(),
            (m[0][0].clone() - &m[1][1]).half(),
        ]
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        let scalars = |p: &Self| {
            p.t.iter()
                .chain(p.c.iter())
                .map(Scalar::to_f64)
                .collect::<Vec<_>>()
        };
        scalars(self)
            .iter()
            .zip(scalars(rhs))
            .map(|(a, b)| (a - b).abs())
            .fold(self.s.max_abs_diff(&rhs.s), f64::max)
    }
}

/// The parametrization map: generator images written out entry by entry.
pub fn alpha<S: Scalar>(p: &ParamPoint<S>, tol: Tolerance) -> Result<HomPair<S>> {
    p.validate(tol)?;
    let [s0, s1, s2, s3] = [&p.s.0[0][0], &p.s.0[0][1], &p.s.0[1][0], &p.s.0[1][1]];
    let [t0, t1, t2, t3] = &p.t;
    let [c1, c2, c1p, c2p] = p.c.clone();
    let plus = t0.clone() + t3;
    let minus = t0.clone() - t3;
    // shared parts of a1, b1 (resp. a2, b2) before adding or subtracting S
    let g1a = s0.clone() * &plus + &(s1.clone() * t2);
    let g1b = s2.clone() * &plus + &(s3.clone() * t2);
    let g2a = s1.clone() * &minus + &(s0.clone() * t1);
    let g2b = s3.clone() * &minus + &(s2.clone() * t1);
    let rho = HeisHom::new(
        HeisPoint::new((g1a.clone() + s0).half(), (g1b.clone() + s2).half(), c1),
        HeisPoint::new((g2a.clone() + s1).half(), (g2b.clone() + s3).half(), c2),
    );
    let rho_prime = HeisHom::new(
        HeisPoint::new((g1a - s0).half(), (g1b - s2).half(), c1p),
        HeisPoint::new((g2a - s1).half(), (g2b - s3).half(), c2p),
    );
    Ok(HomPair::new(rho, rho_prime))
}

pub fn omega<S: Scalar>(p: &HomPair<S>, tol: Tolerance) -> Result<UVPair<S>> {
    let u = p.a().sub(p.a_prime());
    let u_inv = u
        .inverse(tol)
        .ok_or_else(|| DeformError::SingularDifference(u.det().to_string()))?;
    let v = u_inv.mul(&p.a().add(p.a_prime()));
    Ok(UVPair { u, v })
}

/// `(U, V) ↦ (½(UV + U), ½(UV − U))`
pub fn alpha0<S: Scalar>(uv: &UVPair<S>) -> (Mat2<S>, Mat2<S>) {
    let uv_prod = uv.u.mul(&uv.v);
    (uv_prod.add(&uv.u).half(), uv_prod.sub(&uv.u).half())
}

/// Inverse of [`alpha`]: recovers the parameter point of a proper pair.
pub fn coords<S: Scalar>(p: &HomPair<S>, tol: Tolerance) -> Result<ParamPoint<S>> {
    let verdict = p.is_proper(tol);
    if !verdict.proper {
        return Err(DeformError::NotProper {
            det_diff_matrix: verdict.torus_det.to_string(),
            fiber: verdict.fiber_value.to_string(),
        });
    }
    let UVPair { u, v } = omega(p, tol)?;
    let c = [
        p.rho().g1.c.clone(),
        p.rho().g2.c.clone(),
        p.rho_prime().g1.c.clone(),
        p.rho_prime().g2.c.clone(),
    ];
    Ok(ParamPoint::new(u, ParamPoint::t_from_v(&v), c))
}

/// Conjugates `ρ` by `h1` and `ρ'` by `h2`. Central components of `h1`,
/// `h2` have no effect.
pub fn conj<S: Scalar>(p: &HomPair<S>, h1: &HeisPoint<S>, h2: &HeisPoint<S>) -> HomPair<S> {
    HomPair::new(p.rho().conjugate(h1), p.rho_prime().conjugate(h2))
}

/// The conjugator `h = [u, v, 0]` with `h ρ h⁻¹` having zero central entries.
///
/// Solves `u·b_i − v·a_i = −c_i`, a system with determinant `det A`.
fn centralizing_conjugator<S: Scalar>(rho: &HeisHom<S>, tol: Tolerance) -> Option<HeisPoint<S>> {
    let (g1, g2) = (&rho.g1, &rho.g2);
    let system = Mat2::new(g1.b.clone(), -g1.a.clone(), g2.b.clone(), -g2.a.clone());
    let [u, v] = system.inverse(tol)?.apply([&-g1.c.clone(), &-g2.c.clone()]);
    Some(HeisPoint::new(u, v, S::zero()))
}

pub fn canonicalize<S: Scalar>(p: &HomPair<S>, tol: Tolerance) -> Result<Canonicalized<S>> {
    let point = coords(p, tol)?;
    let (det_a, det_a_prime) = (p.rho().det_a(), p.rho_prime().det_a());
    let degenerate = || DeformError::DegenerateStratum {
        det_a: det_a.to_string(),
        det_a_prime: det_a_prime.to_string(),
    };
    if det_a.sign(tol) == Sign::Zero || det_a_prime.sign(tol) == Sign::Zero {
        return Err(degenerate());
    }
    let h1 = centralizing_conjugator(p.rho(), tol).ok_or_else(degenerate)?;
    let h2 = centralizing_conjugator(p.rho_prime(), tol).ok_or_else(degenerate)?;
    let representative = conj(p, &h1, &h2);
    let [t0, t1, t2, t3] = point.t;
    Ok(Canonicalized {
        coords: CanonicalCoords {
            s: point.s,
            t0,
            t: [t1, t2, t3],
        },
        representative,
        h1,
        h2,
    })
}
