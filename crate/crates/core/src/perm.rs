//! Signed permutations of `{±1, …, ±n}`.
//!
//! Every element of every supported group is stored as a signed
//! permutation. Type-A elements are the ones with positive images only and
//! type-D elements are the ones with an even number of negative images.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation `w` of `±[n]` with `w(-i) = -w(i)`, stored through its
/// restriction to `[n]`: `images[i - 1] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(Self { images })
    }

    /// Caller guarantees `images` is a valid signed permutation.
    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i32).collect(),
        }
    }

    /// The central element `-1`.
    pub fn negative_identity(n: usize) -> Self {
        Self {
            images: (1..=n as i32).map(|v| -v).collect(),
        }
    }

    /// Negates coordinate `i` (1-based); `sign_change(n, 1)` is the generator `t`.
    pub fn sign_change(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.images[i - 1] = -(i as i32);
        w
    }

    /// The transposition `(i j)` of coordinates (1-based); `(i, i+1)` is `s_i`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.images.swap(i - 1, j - 1);
        w
    }

    /// The reflection `i ↦ -j, j ↦ -i` in the hyperplane `x_i + x_j = 0`.
    pub fn signed_transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.images[i - 1] = -(j as i32);
        w.images[j - 1] = -(i as i32);
        w
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Evaluates `w(v)` for `v ∈ ±[n]`.
    #[inline]
    pub fn apply(&self, v: i32) -> i32 {
        let w = self.images[v.unsigned_abs() as usize - 1];
        if v < 0 {
            -w
        } else {
            w
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            let j = v.unsigned_abs() as usize - 1;
            images[j] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self { images }
    }

    /// `x · self · x⁻¹`.
    pub fn conjugated_by(&self, x: &Self) -> Self {
        &(x * self) * &x.inverse()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && (0..self.degree()).all(|i| {
                let v = i as i32 + 1;
                self.apply(other.apply(v)) == other.apply(self.apply(v))
            })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Number of `i ∈ [n]` with `w(i) < 0`.
    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// True when every image is positive, i.e. `w` lies in `S_n`.
    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&v| v > 0)
    }

    /// Sign of the underlying permutation `i ↦ |w(i)|`.
    pub fn underlying_sign(&self) -> i32 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut sign = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i].unsigned_abs() as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Determinant of the signed permutation matrix.
    pub fn determinant(&self) -> i32 {
        let flips = if self.negative_count().is_multiple_of(2) {
            1
        } else {
            -1
        };
        flips * self.underlying_sign()
    }

    /// Action on coordinate vectors: `(w·x)_{|w(i)|} = sign(w(i)) · x_i`.
    pub fn act_on_vector<T>(&self, x: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T> + Default,
    {
        let mut out = vec![T::default(); x.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let j = v.unsigned_abs() as usize - 1;
            out[j] = if v < 0 { -x[i].clone() } else { x[i].clone() };
        }
        out
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = &p * self;
            k += 1;
        }
        k
    }
}

impl Mul for &SignedPermutation {
    type Output = SignedPermutation;

    /// Composition `self ∘ rhs`. Panics on mismatched degrees.
    fn mul(self, rhs: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
