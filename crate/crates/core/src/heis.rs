//! The real Heisenberg group `G` and its Lie algebra.
//!
//! Points use bracket coordinates: `[a, b, c]` is the unitriangular matrix
//!
//! ```text
//! 1 a c
//! 0 1 b
//! 0 0 1
//! ```
//!
//! Lie algebra vectors `(x, y, z)` are taken in the basis `e1 = log γ1`,
//! `e2 = log γ2`, `e3 = [e1, e2]`.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct HeisPoint<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieVector<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> HeisPoint<S> {
    pub fn new(a: S, b: S, c: S) -> Self {
        Self { a, b, c }
    }

    pub fn identity() -> Self {
        Self::new(S::zero(), S::zero(), S::zero())
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(S::from_i64(a), S::from_i64(b), S::from_i64(c))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `[a,b,c]·[a',b',c'] = [a+a', b+b', c+c'+a·b']`
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.a.clone() + &rhs.a,
            self.b.clone() + &rhs.b,
            self.c.clone() + &rhs.c + &(self.a.clone() * &rhs.b),
        )
    }

    pub fn inv(&self) -> Self {
        Self::new(
            -self.a.clone(),
            -self.b.clone(),
            self.a.clone() * &self.b - &self.c,
        )
    }

    /// `g h g⁻¹ h⁻¹`
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).mul(&self.inv()).mul(&rhs.inv())
    }

    /// Integer power in closed form: `[a,b,c]^m = [ma, mb, mc + ½m(m−1)ab]`.
    pub fn pow(&self, m: i64) -> Self {
        let ms = S::from_i64(m);
        let tri = S::ratio(m * (m - 1), 2);
        Self::new(
            ms.clone() * &self.a,
            ms.clone() * &self.b,
            ms * &self.c + &(tri * &self.a * &self.b),
        )
    }

    pub fn log(&self) -> LieVector<S> {
        LieVector::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone() - &(self.a.clone() * &self.b).half(),
        )
    }

    /// `Ad_g` applied to a Lie algebra vector: `(x, y, z + a·y − b·x)`.
    pub fn adjoint(&self, v: &LieVector<S>) -> LieVector<S> {
        LieVector::new(
            v.x.clone(),
            v.y.clone(),
            v.z.clone() + &(self.a.clone() * &v.y) - &(self.b.clone() * &v.x),
        )
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> HeisPoint<T> {
        HeisPoint {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
        }
    }

    pub fn to_array(&self) -> [S; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

impl<S: Scalar> LieVector<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero())
    }

    pub fn basis(i: usize) -> Self {
        let mut v = [S::zero(), S::zero(), S::zero()];
        v[i] = S::one();
        let [x, y, z] = v;
        Self::new(x, y, z)
    }

    pub fn exp(&self) -> HeisPoint<S> {
        HeisPoint::new(
            self.x.clone(),
            self.y.clone(),
            self.z.clone() + &(self.x.clone() * &self.y).half(),
        )
    }

    pub fn bracket(&self, rhs: &Self) -> Self {
        Self::new(
            S::zero(),
            S::zero(),
            self.x.clone() * &rhs.y - &(self.y.clone() * &rhs.x),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.x.clone() + &rhs.x,
            self.y.clone() + &rhs.y,
            self.z.clone() + &rhs.z,
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.x.clone() * s, self.y.clone() * s, self.z.clone() * s)
    }

    pub fn to_array(&self) -> [S; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn from_array([x, y, z]: [S; 3]) -> Self {
        Self::new(x, y, z)
    }
}

impl<S: fmt::Display> fmt::Display for HeisPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

impl<S: fmt::Display> fmt::Display for LieVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
