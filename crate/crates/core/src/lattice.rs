//! The intersection lattice of the reflection arrangement, fixed subposets
//! `L^w`, their Möbius functions and the equivariant Poincaré polynomials
//! `P_w(t) = Σ_{X ∈ L^w} μ_w(X) (-t)^{codim X}`.
//!
//! Each flat carries the set of hyperplanes containing it as a bitset, so
//! `X ⊆ Y` is `inc(Y) ⊆ inc(X)` and `w X = X` is `w(inc(X)) = inc(X)`.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;

use crate::class_function::ClassFunction;
use crate::classes::ClassTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Budget, Group};
use crate::linalg::Subspace;
use crate::perm::SignedPermutation;
use crate::polynomial::Polynomial;
use crate::shape::{shape_fixed_space, shapes, Shape};

/// Hyperplane incidence; bit `h` is set when the flat lies in hyperplane `h`.
pub type Incidence = u128;

const MAX_HYPERPLANES: usize = Incidence::BITS as usize;

#[derive(Clone, Debug)]
pub struct Flat {
    pub subspace: Subspace,
    pub incidence: Incidence,
    pub dim: usize,
    /// Index into [`Lattice::shapes`] of the orbit containing the flat.
    pub shape: usize,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    group: Group,
    normals: Vec<Vec<i32>>,
    normal_index: HashMap<Vec<i32>, usize>,
    /// Sorted by decreasing dimension, starting with `V`.
    flats: Vec<Flat>,
    index: HashMap<Incidence, usize>,
    shapes: Vec<Shape>,
}

fn normalize(mut v: Vec<i32>) -> Vec<i32> {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    v
}

impl Lattice {
    /// Worklist closure from `V`: every flat is cut by each hyperplane not
    /// containing it. New flats are deduplicated by incidence.
    pub fn build(group: &Group, budget: &Budget) -> Result<Self> {
        let normals = group.hyperplane_normals();
        if normals.len() > MAX_HYPERPLANES {
            return Err(Error::BudgetExceeded {
                what: "hyperplanes in the incidence bitset",
                needed: normals.len() as u64,
                budget: MAX_HYPERPLANES as u64,
            });
        }
        let normal_index = normals
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let incidence_of = |x: &Subspace| -> Incidence {
            normals
                .iter()
                .enumerate()
                .filter(|(_, n)| x.is_orthogonal_to(n))
                .fold(0, |acc, (h, _)| acc | (1 << h))
        };
        let ambient = group.ambient();
        let mut flats = vec![Flat {
            dim: ambient.dim(),
            incidence: 0,
            subspace: ambient,
            shape: usize::MAX,
        }];
        let mut index: HashMap<Incidence, usize> = HashMap::from([(0, 0)]);
        let mut queue = VecDeque::from([0usize]);
        let all: Incidence = if normals.len() == MAX_HYPERPLANES {
            Incidence::MAX
        } else {
            (1 << normals.len()) - 1
        };
        while let Some(i) = queue.pop_front() {
            // hyperplanes already accounted for by a child of this flat
            let mut covered = flats[i].incidence;
            for h in 0..normals.len() {
                if covered & (1 << h) != 0 {
                    continue;
                }
                let y = flats[i].subspace.intersect_hyperplane(&normals[h]);
                let inc = incidence_of(&y);
                covered |= inc;
                if index.contains_key(&inc) {
                    continue;
                }
                if flats.len() as u64 >= budget.max_flats {
                    return Err(Error::BudgetExceeded {
                        what: "intersection lattice",
                        needed: flats.len() as u64 + 1,
                        budget: budget.max_flats,
                    });
                }
                index.insert(inc, flats.len());
                queue.push_back(flats.len());
                flats.push(Flat {
                    dim: y.dim(),
                    incidence: inc,
                    subspace: y,
                    shape: usize::MAX,
                });
                if covered == all {
                    break;
                }
            }
        }
        let mut lattice = Self {
            group: *group,
            normals,
            normal_index,
            flats,
            index,
            shapes: shapes(group),
        };
        lattice.label_shapes()?;
        Ok(lattice)
    }

    /// Labels each flat by the shape whose `X_L` lies in its orbit.
    fn label_shapes(&mut self) -> Result<()> {
        let gens: Vec<Vec<usize>> = self
            .group
            .simple_reflections()
            .iter()
            .map(|s| self.hyperplane_permutation(s))
            .collect();
        for (k, shape) in self.shapes.clone().iter().enumerate() {
            let x = shape_fixed_space(&self.group, shape)?;
            let inc = self
                .normals
                .iter()
                .enumerate()
                .filter(|(_, n)| x.is_orthogonal_to(n))
                .fold(0, |acc: Incidence, (h, _)| acc | (1 << h));
            let start = *self.index.get(&inc).ok_or_else(|| {
                Error::Precondition(format!("X_L of shape {shape} is not a flat"))
            })?;
            if self.flats[start].shape != usize::MAX {
                return Err(Error::Precondition(format!(
                    "shapes {} and {shape} share an orbit",
                    self.shapes[self.flats[start].shape]
                )));
            }
            self.flats[start].shape = k;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for perm in &gens {
                    let j = self.index[&permute(self.flats[i].incidence, perm)];
                    if self.flats[j].shape == usize::MAX {
                        self.flats[j].shape = k;
                        stack.push(j);
                    } else if self.flats[j].shape != k {
                        return Err(Error::Precondition(format!(
                            "shapes {} and {shape} share an orbit",
                            self.shapes[self.flats[j].shape]
                        )));
                    }
                }
            }
        }
        if let Some(f) = self.flats.iter().find(|f| f.shape == usize::MAX) {
            return Err(Error::Precondition(format!(
                "flat {:?} lies in no shape orbit",
                f.subspace
            )));
        }
        Ok(())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    pub fn hyperplane_normals(&self) -> &[Vec<i32>] {
        &self.normals
    }

    pub fn flat_index(&self, incidence: Incidence) -> Option<usize> {
        self.index.get(&incidence).copied()
    }

    /// `codim X = dim V - dim X`.
    pub fn codim(&self, i: usize) -> usize {
        self.group.rank() - self.flats[i].dim
    }

    /// The permutation `h ↦ w(h)` of hyperplane indices.
    pub fn hyperplane_permutation(&self, w: &SignedPermutation) -> Vec<usize> {
        self.normals
            .iter()
            .map(|n| {
                let image: Vec<i32> = w.act_on_vector(n);
                self.normal_index[&normalize(image)]
            })
            .collect()
    }

    /// Flats `X` with `w X = X`, in lattice order; always includes `V`.
    pub fn fixed_subposet(&self, w: &SignedPermutation) -> Result<Vec<usize>> {
        self.group.check_member(w)?;
        let perm = self.hyperplane_permutation(w);
        Ok((0..self.flats.len())
            .filter(|&i| permute(self.flats[i].incidence, &perm) == self.flats[i].incidence)
            .collect())
    }

    /// Möbius function of the subposet (ordered by reverse inclusion, `V`
    /// at the bottom), computed by its own recursion:
    /// `μ(V) = 1`, `μ(X) = -Σ_{Y ⊋ X} μ(Y)`.
    pub fn moebius(&self, subposet: &[usize]) -> Result<Vec<i64>> {
        if subposet.first() != Some(&0) {
            return Err(Error::Precondition("subposet must contain V".into()));
        }
        let incs: Vec<Incidence> = subposet.iter().map(|&i| self.flats[i].incidence).collect();
        let mut mu = vec![0i64; subposet.len()];
        mu[0] = 1;
        for x in 1..subposet.len() {
            let ix = incs[x];
            let dx = self.flats[subposet[x]].dim;
            let mut s = 0;
            for y in 0..x {
                if self.flats[subposet[y]].dim > dx && incs[y] & !ix == 0 {
                    s += mu[y];
                }
            }
            mu[x] = -s;
        }
        Ok(mu)
    }

    /// Fixed flats of `w` with their `μ_w` values.
    pub fn equivariant_moebius(&self, w: &SignedPermutation) -> Result<Vec<(usize, i64)>> {
        let sub = self.fixed_subposet(w)?;
        let mu = self.moebius(&sub)?;
        Ok(sub.into_iter().zip(mu).collect())
    }

    /// `P_w(t)`; the coefficient of `t^p` is the trace of `w` on `H^p` of
    /// the complement.
    pub fn poincare_polynomial(&self, w: &SignedPermutation) -> Result<Polynomial> {
        let mut coeffs = vec![0i64; self.group.rank() + 1];
        for (i, mu) in self.equivariant_moebius(w)? {
            let p = self.codim(i);
            coeffs[p] += if p.is_multiple_of(2) { mu } else { -mu };
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Per class: for each shape and degree `p`, `(-1)^p Σ μ_w(X)` over the
    /// fixed flats `X` of that shape's orbit with codimension `p`.
    pub fn os_data(&self, table: &ClassTable) -> Result<OsData> {
        let rank = self.group.rank();
        let nshapes = self.shapes.len();
        // −1 fixes every flat, so L^w = L^{w0 w}
        let w0 = self.group.central_longest_element();
        let mut primary: Vec<usize> = Vec::new();
        let mut partner: Vec<Option<usize>> = vec![None; table.len()];
        for (c, class) in table.classes().iter().enumerate() {
            if partner[c].is_some() {
                continue;
            }
            primary.push(c);
            if let Some(w0) = &w0 {
                let d = table.class_of(&(w0 * &class.representative))?;
                if d != c {
                    partner[d] = Some(c);
                }
            }
        }
        let computed: Vec<(usize, Vec<Vec<i64>>)> = primary
            .par_iter()
            .map(|&c| {
                let w = &table.classes()[c].representative;
                let mut by_shape = vec![vec![0i64; rank + 1]; nshapes];
                for (i, mu) in self.equivariant_moebius(w)? {
                    let p = self.codim(i);
                    by_shape[self.flats[i].shape][p] += if p.is_multiple_of(2) { mu } else { -mu };
                }
                Ok((c, by_shape))
            })
            .collect::<Result<_>>()?;
        let mut values = vec![Vec::new(); table.len()];
        for (c, v) in computed {
            values[c] = v;
        }
        for c in 0..table.len() {
            if let Some(p) = partner[c] {
                values[c] = values[p].clone();
            }
        }
        Ok(OsData {
            shapes: self.shapes.clone(),
            rank,
            values,
        })
    }
}

fn permute(inc: Incidence, perm: &[usize]) -> Incidence {
    let mut out = 0;
    let mut bits = inc;
    while bits != 0 {
        let h = bits.trailing_zeros() as usize;
        out |= 1 << perm[h];
        bits &= bits - 1;
    }
    out
}

/// Orlik–Solomon character values per class, shape and degree.
#[derive(Clone, Debug)]
pub struct OsData {
    shapes: Vec<Shape>,
    rank: usize,
    /// `values[class][shape][p]`.
    values: Vec<Vec<Vec<i64>>>,
}

impl OsData {
    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    /// `P_w(t)` for the class with index `class`.
    pub fn poincare(&self, class: usize) -> Polynomial {
        let mut coeffs = vec![0i64; self.rank + 1];
        for by_degree in &self.values[class] {
            for (p, v) in by_degree.iter().enumerate() {
                coeffs[p] += v;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Degree-`p` Orlik–Solomon characters, `p = 0..=rank`.
    pub fn graded(&self, table: &Arc<ClassTable>) -> Vec<ClassFunction> {
        (0..=self.rank)
            .map(|p| {
                ClassFunction::from_fn(table.clone(), |c| {
                    let i = table.index_of(&c.label).expect("own class");
                    Cyclotomic::from_integer(self.values[i].iter().map(|v| v[p]).sum())
                })
            })
            .collect()
    }

    /// Degree-`p` characters of the summand indexed by `shape`.
    pub fn shape_graded(
        &self,
        table: &Arc<ClassTable>,
        shape: &Shape,
    ) -> Result<Vec<ClassFunction>> {
        let k = self
            .shapes
            .iter()
            .position(|s| s == shape)
            .ok_or_else(|| Error::InvalidLabel {
                group: table.group().to_string(),
                label: shape.to_string(),
            })?;
        Ok((0..=self.rank)
            .map(|p| {
                ClassFunction::from_fn(table.clone(), |c| {
                    let i = table.index_of(&c.label).expect("own class");
                    Cyclotomic::from_integer(self.values[i][k][p])
                })
            })
            .collect())
    }
}

/// Sum over degrees.
pub fn total(graded: &[ClassFunction]) -> Result<ClassFunction> {
    let mut iter = graded.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Precondition("no degrees".into()))?
        .clone();
    iter.try_fold(first, |acc, f| acc.add(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassLabel;

    fn lattice(g: Group) -> Lattice {
        Lattice::build(&g, &Budget::default()).unwrap()
    }

    #[test]
    fn small_lattices() {
        let b2 = lattice(Group::b(2).unwrap());
        assert_eq!(b2.len(), 6);
        let a2 = lattice(Group::a(2).unwrap());
        assert_eq!(a2.len(), 5);
        assert_eq!(a2.flats()[0].dim, 2);
        // the centre is the line spanned by (1,1,1), i.e. 0 in the sum-zero space
        assert_eq!(a2.flats()[4].dim, 0);
        for g in [Group::b(3), Group::d(4), Group::a(4)] {
            let g = g.unwrap();
            let l = lattice(g);
            let codim1 = (0..l.len()).filter(|&i| l.codim(i) == 1).count();
            assert_eq!(codim1, g.hyperplane_count());
        }
    }

    #[test]
    fn b2_moebius_values() {
        let b2 = lattice(Group::b(2).unwrap());
        let id = SignedPermutation::identity(2);
        let mu: Vec<i64> = b2
            .equivariant_moebius(&id)
            .unwrap()
            .iter()
            .map(|x| x.1)
            .collect();
        assert_eq!(mu, vec![1, -1, -1, -1, -1, 3]);
        let t = SignedPermutation::sign_change(2, 1);
        let sub = b2.fixed_subposet(&t).unwrap();
        assert_eq!(sub.len(), 4);
        let mu: Vec<i64> = b2.moebius(&sub).unwrap();
        assert_eq!(mu, vec![1, -1, -1, 1]);
        assert_eq!(b2.poincare_polynomial(&id).unwrap().coeffs(), &[1, 4, 3]);
        assert_eq!(b2.poincare_polynomial(&t).unwrap().coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn budget_is_enforced() {
        let small = Budget::default().with_flats(10);
        assert!(matches!(
            Lattice::build(&Group::b(3).unwrap(), &small),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn central_element_has_the_same_subposet() {
        let b3 = Group::b(3).unwrap();
        let l = lattice(b3);
        let w0 = SignedPermutation::negative_identity(3);
        for w in b3.elements(&Budget::default()).unwrap() {
            assert_eq!(
                l.fixed_subposet(&w).unwrap(),
                l.fixed_subposet(&(&w0 * &w)).unwrap()
            );
        }
    }

    #[test]
    fn shape_sums_give_the_graded_character() {
        for g in [Group::b(3), Group::d(4), Group::a(3)] {
            let g = g.unwrap();
            let l = lattice(g);
            let table = Arc::new(ClassTable::new(g, &Budget::default()).unwrap());
            let data = l.os_data(&table).unwrap();
            let graded = data.graded(&table);
            for p in 0..=g.rank() {
                let mut sum = ClassFunction::zero(table.clone());
                for s in l.shapes() {
                    sum = sum.add(&data.shape_graded(&table, s).unwrap()[p]).unwrap();
                }
                assert_eq!(sum, graded[p]);
            }
            for (c, class) in table.classes().iter().enumerate() {
                assert_eq!(
                    data.poincare(c),
                    l.poincare_polynomial(&class.representative).unwrap()
                );
            }
        }
    }

    #[test]
    fn b2_shape_of_coordinate_lines() {
        let b2 = Group::b(2).unwrap();
        let l = lattice(b2);
        let table = Arc::new(ClassTable::new(b2, &Budget::default()).unwrap());
        let data = l.os_data(&table).unwrap();
        // shape (1): W_1 × S_1, whose fixed line is x_1 = 0; its orbit is {x_1 = 0, x_2 = 0}
        let deg1 = &data.shape_graded(&table, &"1".parse().unwrap()).unwrap()[1];
        let at = |s: &str| {
            deg1.value(table.index_of(&s.parse::<ClassLabel>().unwrap()).unwrap())
                .to_integer()
                .unwrap()
        };
        assert_eq!(at("+1+1"), 2);
        assert_eq!(at("-1+1"), 2);
        assert_eq!(at("-1-1"), 2);
        assert_eq!(at("+2"), 0);
        assert_eq!(at("-2"), 0);
    }
}
