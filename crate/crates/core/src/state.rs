//! Fixed-capacity state vectors and small dense matrices.
//!
//! Every fluid state, flux, and eigenvector block in this crate has at most
//! `MAX_COMP = 6` components (two species + three velocities + energy), so
//! all small linear algebra lives on the stack.

/// Largest number of state components: N = 2 species, d = 3 velocities, energy.
pub const MAX_COMP: usize = 6;

/// A stack-allocated vector with runtime length `len <= MAX_COMP`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVec {
    data: [f64; MAX_COMP],
    len: usize,
}

impl StateVec {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_COMP);
        Self {
            data: [0.0; MAX_COMP],
            len,
        }
    }

    pub fn from_slice(s: &[f64]) -> Self {
        let mut v = Self::zeros(s.len());
        v.data[..s.len()].copy_from_slice(s);
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.data[..self.len]
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data[..self.len]
    }

    pub fn dot(&self, other: &StateVec) -> f64 {
        debug_assert_eq!(self.len, other.len);
        let mut s = 0.0;
        for i in 0..self.len {
            s += self.data[i] * other.data[i];
        }
        s
    }

    pub fn axpy(&mut self, a: f64, x: &StateVec) {
        debug_assert_eq!(self.len, x.len);
        for i in 0..self.len {
            self.data[i] += a * x.data[i];
        }
    }

    pub fn scale(&mut self, a: f64) {
        for i in 0..self.len {
            self.data[i] *= a;
        }
    }

    pub fn scaled(&self, a: f64) -> StateVec {
        let mut v = *self;
        v.scale(a);
        v
    }

    pub fn sub(&self, other: &StateVec) -> StateVec {
        debug_assert_eq!(self.len, other.len);
        let mut v = *self;
        for i in 0..self.len {
            v.data[i] -= other.data[i];
        }
        v
    }

    pub fn add(&self, other: &StateVec) -> StateVec {
        debug_assert_eq!(self.len, other.len);
        let mut v = *self;
        for i in 0..self.len {
            v.data[i] += other.data[i];
        }
        v
    }

    pub fn max_abs(&self) -> f64 {
        self.as_slice().iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl std::ops::Index<usize> for StateVec {
    type Output = f64;
    #[inline]
    fn index(&self, i: usize) -> &f64 {
        debug_assert!(i < self.len);
        &self.data[i]
    }
}

impl std::ops::IndexMut<usize> for StateVec {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        debug_assert!(i < self.len);
        &mut self.data[i]
    }
}

/// A stack-allocated square matrix with runtime dimension `n <= MAX_COMP`.
/// Row-major storage.
#[derive(Debug, Clone, Copy)]
pub struct SmallMat {
    data: [[f64; MAX_COMP]; MAX_COMP],
    n: usize,
}

impl SmallMat {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= MAX_COMP);
        Self {
            data: [[0.0; MAX_COMP]; MAX_COMP],
            n,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i][i] = 1.0;
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.n && j < self.n);
        self.data[i][j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.n && j < self.n);
        self.data[i][j] = v;
    }

    pub fn transpose(&self) -> SmallMat {
        let mut t = SmallMat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.data[j][i] = self.data[i][j];
            }
        }
        t
    }

    pub fn matmul(&self, other: &SmallMat) -> SmallMat {
        debug_assert_eq!(self.n, other.n);
        let mut c = SmallMat::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.data[i][k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..self.n {
                    c.data[i][j] += a * other.data[k][j];
                }
            }
        }
        c
    }

    pub fn apply(&self, v: &StateVec) -> StateVec {
        debug_assert_eq!(self.n, v.len());
        let mut out = StateVec::zeros(self.n);
        for i in 0..self.n {
            let mut s = 0.0;
            for j in 0..self.n {
                s += self.data[i][j] * v[j];
            }
            out[i] = s;
        }
        out
    }

    /// v^T applied from the left: returns M^T v without forming the transpose.
    pub fn apply_transposed(&self, v: &StateVec) -> StateVec {
        debug_assert_eq!(self.n, v.len());
        let mut out = StateVec::zeros(self.n);
        for j in 0..self.n {
            let mut s = 0.0;
            for i in 0..self.n {
                s += self.data[i][j] * v[i];
            }
            out[j] = s;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                m = m.max(self.data[i][j].abs());
            }
        }
        m
    }

    pub fn scale(&mut self, a: f64) {
        for i in 0..self.n {
            for j in 0..self.n {
                self.data[i][j] *= a;
            }
        }
    }
}
