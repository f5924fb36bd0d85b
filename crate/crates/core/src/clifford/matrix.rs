use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense `N × N` complex matrix with value semantics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareMatrix<const N: usize> {
    entries: [[Complex64; N]; N],
}

pub type Mat2 = SquareMatrix<2>;
pub type Mat4 = SquareMatrix<4>;

impl<const N: usize> SquareMatrix<N> {
    pub const DIM: usize = N;

    pub fn new(entries: [[Complex64; N]; N]) -> Self {
        Self { entries }
    }

    /// Matrix from real entries.
    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = Complex64::new(rows[i][j], 0.0);
            }
        }
        m
    }

    pub fn zero() -> Self {
        Self { entries: [[ZERO; N]; N] }
    }

    pub fn identity() -> Self {
        Self::diagonal([ONE; N])
    }

    pub fn diagonal(d: [Complex64; N]) -> Self {
        let mut m = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.entries[i][i] = v;
        }
        m
    }

    pub fn entries(&self) -> &[[Complex64; N]; N] {
        &self.entries
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        m
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.entries[i][i]).sum()
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (*self - self.dagger()).max_abs() <= tol
    }
}

impl Mat2 {
    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Mat2) -> Mat4 {
        let mut m = Mat4::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.entries[2 * i + k][2 * j + l] = self.entries[i][j] * other.entries[k][l];
                    }
                }
            }
        }
        m
    }
}

impl<const N: usize> Index<(usize, usize)> for SquareMatrix<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for SquareMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i][j]
    }
}

impl<const N: usize> Add for SquareMatrix<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] += rhs.entries[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for SquareMatrix<N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] -= rhs.entries[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Neg for SquareMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl<const N: usize> Mul for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                let mut acc = ZERO;
                for k in 0..N {
                    acc += self.entries[i][k] * rhs.entries[k][j];
                }
                m.entries[i][j] = acc;
            }
        }
        m
    }
}

impl<const N: usize> Mul<Complex64> for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> Mul<f64> for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale_real(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let a = Mat2::from_real([[1.0, 2.0], [3.0, 4.0]]);
        assert_eq!(a * Mat2::identity(), a);
        assert_eq!(Mat2::identity() * a, a);
        assert_eq!(a.trace(), Complex64::new(5.0, 0.0));
    }

    #[test]
    fn kron_layout() {
        let a = Mat2::from_real([[0.0, 1.0], [1.0, 0.0]]);
        let k = a.kron(&Mat2::identity());
        assert_eq!(k[(0, 2)], ONE);
        assert_eq!(k[(3, 1)], ONE);
        assert_eq!(k[(0, 1)], ZERO);
    }
}
