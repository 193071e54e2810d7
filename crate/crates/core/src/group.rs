//! The groups `A_{n-1} = S_n`, `B_n = W_n` and `D_n = W'_n` as groups of
//! signed permutations, together with their reflection representations.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Rational, Subspace, Vector};
use crate::perm::SignedPermutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" | "C" | "c" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse {
                what: "family",
                input: other.to_string(),
            }),
        }
    }
}

/// Enumeration and lattice limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Largest group or centralizer that may be enumerated element by element.
    pub max_elements: u64,
    /// Largest intersection lattice that may be built.
    pub max_flats: u64,
}

impl Budget {
    /// `|W(B_6)| = 2⁶·6!` elements and room for the `B_6` lattice.
    pub const DESK: Self = Self {
        max_elements: 46_080,
        max_flats: 10_000,
    };

    pub fn unlimited() -> Self {
        Self {
            max_elements: u64::MAX,
            max_flats: u64::MAX,
        }
    }

    pub fn with_elements(self, max_elements: u64) -> Self {
        Self {
            max_elements,
            ..self
        }
    }

    pub fn with_flats(self, max_flats: u64) -> Self {
        Self { max_flats, ..self }
    }

    pub(crate) fn check_elements(&self, what: &'static str, needed: u64) -> Result<()> {
        if needed > self.max_elements {
            return Err(Error::BudgetExceeded {
                what,
                needed,
                budget: self.max_elements,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    /// `2⁸·8!` elements, enough to enumerate all of `W(B_8)`.
    fn default() -> Self {
        Self {
            max_elements: 10_321_920,
            max_flats: 250_000,
        }
    }
}

/// A Coxeter group of classical type. For type A the rank is `n - 1` and
/// the group is `S_n` acting on `n` coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Group {
    family: Family,
    rank: usize,
}

impl Group {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B => rank >= 1,
            Family::D => rank >= 4,
        };
        if !ok || rank > 16 {
            return Err(Error::InvalidGroup(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn b(rank: usize) -> Result<Self> {
        Self::new(Family::B, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of coordinates the signed permutations act on.
    pub fn degree(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::D => self.rank,
        }
    }

    pub fn order(&self) -> u64 {
        let n = self.degree() as u64;
        let fact: u64 = (1..=n).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << n,
            Family::D => fact << (n - 1),
        }
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        w.degree() == self.degree()
            && match self.family {
                Family::A => w.is_unsigned(),
                Family::B => true,
                Family::D => w.negative_count().is_multiple_of(2),
            }
    }

    pub(crate) fn check_member(&self, w: &SignedPermutation) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInGroup {
                element: w.to_string(),
                group: self.to_string(),
            })
        }
    }

    /// The Coxeter generators: `s_1, …, s_{n-1}` for A; `t, s_1, …` for B;
    /// `t' = t s_1 t, s_1, …` for D.
    pub fn simple_reflections(&self) -> Vec<SignedPermutation> {
        let n = self.degree();
        let mut gens = Vec::new();
        match self.family {
            Family::A => {}
            Family::B => gens.push(SignedPermutation::sign_change(n, 1)),
            Family::D => gens.push(SignedPermutation::signed_transposition(n, 1, 2)),
        }
        gens.extend((1..n).map(|i| SignedPermutation::transposition(n, i, i + 1)));
        gens
    }

    /// All reflections, one per reflecting hyperplane, in the same order as
    /// [`Group::hyperplane_normals`].
    pub fn reflections(&self) -> Vec<SignedPermutation> {
        let n = self.degree();
        let mut out = Vec::new();
        if self.family == Family::B {
            out.extend((1..=n).map(|i| SignedPermutation::sign_change(n, i)));
        }
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(SignedPermutation::transposition(n, i, j));
                if self.family != Family::A {
                    out.push(SignedPermutation::signed_transposition(n, i, j));
                }
            }
        }
        out
    }

    /// Integer normal vectors of the reflecting hyperplanes, first nonzero
    /// entry positive: `e_i` (B only), `e_i - e_j`, `e_i + e_j` (B and D).
    pub fn hyperplane_normals(&self) -> Vec<Vec<i32>> {
        let n = self.degree();
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i - 1] = 1;
            v
        };
        let mut out = Vec::new();
        if self.family == Family::B {
            out.extend((1..=n).map(unit));
        }
        for i in 1..=n {
            for j in i + 1..=n {
                let mut minus = unit(i);
                minus[j - 1] = -1;
                out.push(minus);
                if self.family != Family::A {
                    let mut plus = unit(i);
                    plus[j - 1] = 1;
                    out.push(plus);
                }
            }
        }
        out
    }

    /// Exponents `m_1, …, m_r`; `|W| = ∏ (1 + m_i)` and the Poincaré
    /// polynomial of the complement is `∏ (1 + m_i t)`.
    pub fn exponents(&self) -> Vec<i64> {
        let r = self.rank as i64;
        match self.family {
            Family::A => (1..=r).collect(),
            Family::B => (1..=r).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<i64> = (1..r).map(|i| 2 * i - 1).collect();
                e.push(r - 1);
                e.sort_unstable();
                e
            }
        }
    }

    pub fn hyperplane_count(&self) -> usize {
        let n = self.degree();
        match self.family {
            Family::A => n * (n - 1) / 2,
            Family::B => n * n,
            Family::D => n * n - n,
        }
    }

    /// Every element, in lexicographic order of image arrays.
    pub fn elements(&self, budget: &Budget) -> Result<Vec<SignedPermutation>> {
        budget.check_elements("group enumeration", self.order())?;
        let n = self.degree();
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut images = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.fill(&mut images, &mut used, &mut out);
        Ok(out)
    }

    fn fill(&self, images: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
        let n = used.len();
        if images.len() == n {
            let w = SignedPermutation::from_images_unchecked(images.clone());
            if self.contains(&w) {
                out.push(w);
            }
            return;
        }
        let signs: &[i32] = if self.family == Family::A {
            &[1]
        } else {
            &[-1, 1]
        };
        for j in 0..n {
            if used[j] {
                continue;
            }
            used[j] = true;
            for &s in signs {
                images.push(s * (j as i32 + 1));
                self.fill(images, used, out);
                images.pop();
            }
            used[j] = false;
        }
    }

    /// The longest element when it is central (`-1` in `B_n`, and in `D_n`
    /// for even `n`).
    pub fn central_longest_element(&self) -> Option<SignedPermutation> {
        let n = self.degree();
        let w0 = SignedPermutation::negative_identity(n);
        match self.family {
            Family::B => Some(w0),
            Family::D if n.is_multiple_of(2) => Some(w0),
            _ => None,
        }
    }

    /// The reflection representation `V`: all of `ℚⁿ` for B and D, the
    /// sum-zero hyperplane for A.
    pub fn ambient(&self) -> Subspace {
        let n = self.degree();
        match self.family {
            Family::A => {
                let ones: Vector = vec![Rational::one(); n];
                Subspace::from_constraints(n, &[ones]).expect("dimension")
            }
            Family::B | Family::D => Subspace::full(n),
        }
    }

    /// `Fix_V(w)`.
    pub fn fixed_space(&self, w: &SignedPermutation) -> Result<Subspace> {
        self.check_member(w)?;
        let fix = Subspace::fixed_points(w);
        match self.family {
            Family::A => fix.intersect(&self.ambient()),
            _ => Ok(fix),
        }
    }

    /// `dim V - dim Fix_V(w)`, the minimal number of reflections whose
    /// product is `w`.
    pub fn reflection_length(&self, w: &SignedPermutation) -> Result<usize> {
        Ok(self.rank - self.fixed_space(w)?.dim())
    }

    /// `ε(w) = det(w|_V)`.
    pub fn sign_character(&self, w: &SignedPermutation) -> Result<i32> {
        self.check_member(w)?;
        Ok(w.determinant())
    }

    /// Common fixed space of a set of elements.
    pub fn common_fixed_space(&self, elements: &[SignedPermutation]) -> Result<Subspace> {
        let mut x = self.ambient();
        for g in elements {
            x = x.intersect(&self.fixed_space(g)?)?;
        }
        Ok(x)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Group {
    type Err = Error;

    /// `B4`, `D5`, `A3`, …
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse {
            what: "group",
            input: s.to_string(),
        };
        let (fam, rank) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let family: Family = fam.parse().map_err(|_| err())?;
        let rank: usize = rank.parse().map_err(|_| err())?;
        Group::new(family, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_validation() {
        assert_eq!(Group::a(2).unwrap().order(), 6);
        assert_eq!(Group::b(3).unwrap().order(), 48);
        assert_eq!(Group::d(4).unwrap().order(), 192);
        assert_eq!(Group::b(8).unwrap().order(), 10_321_920);
        assert!(Group::d(3).is_err());
        assert!(Group::a(0).is_err());
        assert_eq!("D5".parse::<Group>().unwrap(), Group::d(5).unwrap());
        assert!("E8".parse::<Group>().is_err());
    }

    #[test]
    fn element_enumeration_counts() {
        for g in [Group::a(3), Group::b(3), Group::d(4)] {
            let g = g.unwrap();
            let els = g.elements(&Budget::default()).unwrap();
            assert_eq!(els.len() as u64, g.order());
            assert!(els.iter().all(|w| g.contains(w)));
        }
        let err = Group::b(4)
            .unwrap()
            .elements(&Budget::DESK.with_elements(100));
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn reflection_lengths() {
        let b3 = Group::b(3).unwrap();
        assert_eq!(
            b3.reflection_length(&SignedPermutation::identity(3))
                .unwrap(),
            0
        );
        for r in b3.reflections() {
            assert_eq!(b3.reflection_length(&r).unwrap(), 1);
        }
        let w = SignedPermutation::new(vec![-1, 3, -2]).unwrap();
        assert_eq!(b3.fixed_space(&w).unwrap().dim(), 0);
        assert_eq!(b3.reflection_length(&w).unwrap(), 3);
        let a2 = Group::a(2).unwrap();
        assert_eq!(a2.ambient().dim(), 2);
        let c = SignedPermutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(a2.reflection_length(&c).unwrap(), 2);
        for r in a2.reflections() {
            assert_eq!(a2.reflection_length(&r).unwrap(), 1);
        }
    }

    #[test]
    fn sign_character_examples() {
        let b2 = Group::b(2).unwrap();
        assert_eq!(
            b2.sign_character(&SignedPermutation::identity(2)).unwrap(),
            1
        );
        assert_eq!(
            b2.sign_character(&SignedPermutation::sign_change(2, 1))
                .unwrap(),
            -1
        );
        assert_eq!(
            b2.sign_character(&SignedPermutation::negative_identity(2))
                .unwrap(),
            1
        );
        let d4 = Group::d(4).unwrap();
        assert!(d4
            .sign_character(&SignedPermutation::sign_change(4, 1))
            .is_err());
    }

    #[test]
    fn exponents_multiply_to_order() {
        for g in [Group::a(5), Group::b(4), Group::d(4), Group::d(7)] {
            let g = g.unwrap();
            let prod: i64 = g.exponents().iter().map(|m| m + 1).product();
            assert_eq!(prod as u64, g.order());
            assert_eq!(
                g.exponents().iter().sum::<i64>() as usize,
                g.hyperplane_count()
            );
        }
    }

    #[test]
    fn hyperplane_counts() {
        assert_eq!(Group::b(2).unwrap().hyperplane_normals().len(), 4);
        assert_eq!(Group::a(2).unwrap().hyperplane_normals().len(), 3);
        assert_eq!(Group::d(4).unwrap().hyperplane_normals().len(), 12);
        for g in [Group::a(5), Group::b(6), Group::d(6)] {
            let g = g.unwrap();
            assert_eq!(g.hyperplane_normals().len(), g.hyperplane_count());
            assert_eq!(g.reflections().len(), g.hyperplane_count());
        }
    }

    #[test]
    fn simple_reflections_lie_in_group() {
        for g in [Group::a(3), Group::b(3), Group::d(4)] {
            let g = g.unwrap();
            assert_eq!(g.simple_reflections().len(), g.rank());
            for s in g.simple_reflections() {
                assert!(g.contains(&s));
                assert_eq!(s.order(), 2);
                assert_eq!(g.reflection_length(&s).unwrap(), 1);
            }
        }
    }
}
