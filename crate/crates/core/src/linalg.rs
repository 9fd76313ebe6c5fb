//! Fixed-size 2×2 and 3×3 matrices over a [`Scalar`].

use std::fmt;

use crate::scalar::{Scalar, Sign, Tolerance};

/// Row-major 2×2 matrix `[[m00, m01], [m10, m11]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<S>(pub [[S; 2]; 2]);

/// Row-major 3×3 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3<S>(pub [[S; 3]; 3]);

impl<S: Scalar> Mat2<S> {
    pub fn new(m00: S, m01: S, m10: S, m11: S) -> Self {
        Mat2([[m00, m01], [m10, m11]])
    }

    pub fn from_ints(m00: i64, m01: i64, m10: i64, m11: i64) -> Self {
        Self::new(
            S::from_i64(m00),
            S::from_i64(m01),
            S::from_i64(m10),
            S::from_i64(m11),
        )
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.0[i][j]
    }

    pub fn det(&self) -> S {
        let m = &self.0;
        m[0][0].clone() * &m[1][1] - &(m[0][1].clone() * &m[1][0])
    }

    pub fn trace(&self) -> S {
        self.0[0][0].clone() + &self.0[1][1]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].clone() + &rhs.0[i][j])
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].clone() - &rhs.0[i][j])
        }))
    }

    pub fn scale(&self, s: &S) -> Self {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].clone() * s)
        }))
    }

    pub fn half(&self) -> Self {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].half())
        }))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                self.0[i][0].clone() * &rhs.0[0][j] + &(self.0[i][1].clone() * &rhs.0[1][j])
            })
        }))
    }

    pub fn apply(&self, v: [&S; 2]) -> [S; 2] {
        std::array::from_fn(|i| self.0[i][0].clone() * v[0] + &(self.0[i][1].clone() * v[1]))
    }

    /// Inverse, or `None` when the determinant is zero at `tol`.
    pub fn inverse(&self, tol: Tolerance) -> Option<Self> {
        let d = self.det();
        if d.sign(tol) == Sign::Zero {
            return None;
        }
        let m = &self.0;
        Some(Self::new(
            m[1][1].clone() / d.clone(),
            -m[0][1].clone() / d.clone(),
            -m[1][0].clone() / d.clone(),
            m[0][0].clone() / d,
        ))
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max)
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Mat2<T> {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| f(&self.0[i][j]))
        }))
    }
}

impl<S: Scalar> Mat3<S> {
    pub fn identity() -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { S::one() } else { S::zero() })
        }))
    }

    pub fn from_columns(c0: [S; 3], c1: [S; 3], c2: [S; 3]) -> Self {
        let cols = [c0, c1, c2];
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| cols[j][i].clone())
        }))
    }

    pub fn column(&self, j: usize) -> [S; 3] {
        std::array::from_fn(|i| self.0[i][j].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j].clone() - &rhs.0[i][j])
        }))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(S::zero(), |acc, k| {
                    acc + &(self.0[i][k].clone() * &rhs.0[k][j])
                })
            })
        }))
    }

    pub fn apply(&self, v: &[S; 3]) -> [S; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(S::zero(), |acc, k| acc + &(self.0[i][k].clone() * &v[k]))
        })
    }

    pub fn det(&self) -> S {
        let m = &self.0;
        // cofactor expansion along the first row
        let minor =
            |c0: usize, c1: usize| m[1][c0].clone() * &m[2][c1] - &(m[1][c1].clone() * &m[2][c0]);
        m[0][0].clone() * &minor(1, 2) - &(m[0][1].clone() * &minor(0, 2))
            + &(m[0][2].clone() * &minor(0, 1))
    }

    /// Basis of the null space, by Gauss–Jordan elimination with partial
    /// pivoting. Entries whose magnitude is zero at `tol` are treated as zero.
    pub fn kernel(&self, tol: Tolerance) -> Vec<[S; 3]> {
        let mut m = self.0.clone();
        let mut pivot_cols = Vec::with_capacity(3);
        let mut row = 0;
        for col in 0..3 {
            if row == 3 {
                break;
            }
            // largest-magnitude pivot; for exact scalars any nonzero entry would do
            let pivot = (row..3)
                .filter(|&r| m[r][col].sign(tol) != Sign::Zero)
                .max_by(|&r, &s| {
                    m[r][col]
                        .abs()
                        .partial_cmp(&m[s][col].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
            let Some(p) = pivot else { continue };
            m.swap(row, p);
            let lead = m[row][col].clone();
            for x in m[row].iter_mut() {
                *x = x.clone() / lead.clone();
            }
            for r in 0..3 {
                if r != row && m[r][col].sign(tol) != Sign::Zero {
                    let f = m[r][col].clone();
                    let pivot_row = m[row].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                        *x = x.clone() - &(f.clone() * p);
                    }
                } else if r != row {
                    m[r][col] = S::zero();
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        (0..3)
            .filter(|c| !pivot_cols.contains(c))
            .map(|free| {
                let mut v: [S; 3] = std::array::from_fn(|_| S::zero());
                v[free] = S::one();
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = -m[r][free].clone();
                }
                v
            })
            .collect()
    }
}

impl<S: fmt::Display> fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "({} {}; {} {})", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
