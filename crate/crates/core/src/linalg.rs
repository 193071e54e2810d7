//! Exact rational linear algebra: reduced row-echelon forms, null spaces,
//! canonical subspaces and determinants.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

pub type Rational = Ratio<i64>;

pub type Vector = Vec<Rational>;

/// Brings `rows` into reduced row-echelon form in place, drops zero rows and
/// returns the pivot columns.
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r].iter_mut() {
                *v *= inv;
            }
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                for j in c..ncols {
                    let d = rows[r][j] * f;
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ x : row · x = 0 for every row }`, in reduced row-echelon form.
pub fn null_space(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    for row in &m {
        assert_eq!(row.len(), ncols, "ragged matrix");
    }
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free];
        }
        basis.push(v);
    }
    rref(&mut basis);
    basis
}

/// Determinant by fraction-free (Bareiss) elimination on integer-scaled rows.
pub fn det(matrix: &[Vector]) -> Result<Rational> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: row.len(),
            });
        }
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    // scale each row to integers; the determinant picks up the product of the scales
    let mut scale = Rational::one();
    let mut a: Vec<Vec<i128>> = Vec::with_capacity(n);
    for row in matrix {
        let l = row
            .iter()
            .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
        scale *= Rational::from_integer(l);
        a.push(
            row.iter()
                .map(|x| (x.numer() * (l / x.denom())) as i128)
                .collect(),
        );
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Ok(Rational::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    let d = sign * a[n - 1][n - 1];
    Ok(Rational::from_integer(d as i64) / scale)
}

/// A subspace of `ℚⁿ`, stored as its canonical reduced row-echelon basis, so
/// equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    left: ambient,
                    right: v.len(),
                });
            }
        }
        let mut basis = vectors;
        let pivots = rref(&mut basis);
        Ok(Self {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Self {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Solution space of `constraints · x = 0`.
    pub fn from_constraints(ambient: usize, constraints: &[Vector]) -> Result<Self> {
        for c in constraints {
            if c.len() != ambient {
                return Err(Error::DimensionMismatch {
                    left: ambient,
                    right: c.len(),
                });
            }
        }
        Self::span(ambient, null_space(constraints, ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// The orthogonal complement (with respect to the standard form), whose
    /// basis doubles as a set of defining equations.
    pub fn annihilator(&self) -> Self {
        Self::span(self.ambient, null_space(&self.basis, self.ambient)).expect("same ambient")
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let mut eqs = self.annihilator().basis;
        eqs.extend(other.annihilator().basis);
        Self::from_constraints(self.ambient, &eqs)
    }

    /// Whether the subspace lies in the hyperplane `normal · x = 0`.
    pub fn is_orthogonal_to(&self, normal: &[i32]) -> bool {
        self.basis.iter().all(|b| dot_int(normal, b).is_zero())
    }

    /// `self ∩ {normal · x = 0}`.
    pub fn intersect_hyperplane(&self, normal: &[i32]) -> Self {
        let values: Vec<Rational> = self.basis.iter().map(|b| dot_int(normal, b)).collect();
        let Some(p) = values.iter().position(|v| !v.is_zero()) else {
            return self.clone();
        };
        let vectors = self
            .basis
            .iter()
            .zip(&values)
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, (b, &a))| {
                let f = a / values[p];
                b.iter()
                    .zip(&self.basis[p])
                    .map(|(x, y)| x - f * y)
                    .collect()
            })
            .collect();
        Self::span(self.ambient, vectors).expect("same ambient")
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        // expand v in the rref basis using its pivot coordinates and compare
        let mut rest: Vector = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = rest[p];
            if !c.is_zero() {
                for (r, x) in rest.iter_mut().zip(b) {
                    *r -= c * x;
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains_vector(b))
    }

    /// Coordinates of `v` in the stored basis, assuming `v` lies in the span.
    pub fn coordinates_of(&self, v: &[Rational]) -> Vector {
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    /// Image `w(X)` under the signed permutation action.
    pub fn image_under(&self, w: &SignedPermutation) -> Self {
        let vectors = self.basis.iter().map(|b| w.act_on_vector(b)).collect();
        Self::span(self.ambient, vectors).expect("same ambient")
    }

    /// Fixed points of `w` on `ℚⁿ`.
    pub fn fixed_points(w: &SignedPermutation) -> Self {
        let n = w.degree();
        // rows of (w - I)
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, &v) in w.images().iter().enumerate() {
            let j = v.unsigned_abs() as usize - 1;
            rows[j][i] += Rational::from_integer(v.signum() as i64);
            rows[i][i] -= Rational::one();
        }
        Self::from_constraints(n, &rows).expect("square matrix")
    }

    /// Matrix of `w` restricted to this (w-stable) subspace, in the stored basis.
    pub fn restricted_matrix(&self, w: &SignedPermutation) -> Result<Vec<Vector>> {
        let images: Vec<Vector> = self.basis.iter().map(|b| w.act_on_vector(b)).collect();
        if !images.iter().all(|v| self.contains_vector(v)) {
            return Err(Error::NotStable);
        }
        // column j = coordinates of w·b_j
        let cols: Vec<Vector> = images.iter().map(|v| self.coordinates_of(v)).collect();
        let k = self.dim();
        Ok((0..k)
            .map(|i| (0..k).map(|j| cols[j][i]).collect())
            .collect())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: ", self.dim(), self.ambient)?;
        for b in &self.basis {
            let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", s.join(" "))?;
        }
        write!(f, ")")
    }
}

fn dot_int(normal: &[i32], v: &[Rational]) -> Rational {
    normal
        .iter()
        .zip(v)
        .filter(|(&a, _)| a != 0)
        .map(|(&a, x)| x * Rational::from_integer(a as i64))
        .sum()
}

pub fn int_vector(v: &[i64]) -> Vector {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}
