//! Shapes (conjugacy classes of parabolic subgroups), their standard
//! parabolic generators, class representatives and cuspidal classes.
//!
//! * `A_{n-1}`: one shape per `λ ⊢ n`, the Young subgroup `S_λ`.
//! * `B_n`: one shape per `λ ⊢ m`, `0 ≤ m ≤ n`, with `W_λ = W_{n-m} × S_λ`.
//! * `D_n`: `λ ⊢ m ≤ n-2` with `W'_λ = W'_{n-m} × S_λ`; `λ ⊢ n` with an odd
//!   part, giving `S_λ`; and `λ ⊢ n` with all parts even, giving the two
//!   classes `S_λ` and `t S_λ t`.
//!
//! The factor `W_{n-m}` (or `W'_{n-m}`) sits on the first `n-m` coordinates,
//! followed by one block per part of `λ`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::centralizer::w_mu;
use crate::classes::{class_labels, ClassLabel, SplitTag};
use crate::error::{Error, Result};
use crate::group::{Family, Group};
use crate::linalg::Subspace;
use crate::partition::{partitions, Partition, SignedPartition};
use crate::perm::SignedPermutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub partition: Partition,
    pub split: Option<SplitTag>,
}

impl Shape {
    pub fn new(partition: Partition) -> Self {
        Self {
            partition,
            split: None,
        }
    }

    pub fn split(partition: Partition, tag: SplitTag) -> Self {
        Self {
            partition,
            split: Some(tag),
        }
    }

    /// The empty partition: the trivial parabolic in type A is `S_{(1ⁿ)}`,
    /// so this is only the minimal shape for B and D.
    pub fn empty() -> Self {
        Self::new(Partition::empty())
    }

    /// Rank of the parabolic subgroup, `n - l(λ)` in every family.
    pub fn rank(&self, group: &Group) -> usize {
        group.degree() - self.partition.len()
    }

    /// Number of leading coordinates carrying the `W_k` / `W'_k` factor.
    fn hyperoctahedral_part(&self, group: &Group) -> usize {
        match group.family() {
            Family::A => 0,
            Family::B | Family::D => group.degree() - self.partition.size() as usize,
        }
    }

    pub fn validate(&self, group: &Group) -> Result<()> {
        let n = group.degree() as u32;
        let m = self.partition.size();
        let ok = match group.family() {
            Family::A => m == n && self.split.is_none(),
            Family::B => m <= n && self.split.is_none(),
            Family::D => {
                if m + 2 <= n {
                    self.split.is_none()
                } else if m == n {
                    self.split.is_some() == self.partition.all_even()
                } else {
                    false
                }
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel {
                group: group.to_string(),
                label: self.to_string(),
            })
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        match self.split {
            Some(SplitTag::Plus) => f.write_str("^+"),
            Some(SplitTag::Minus) => f.write_str("^-"),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shape({self})")
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// `2+1`, `()`, or `2+2^+` / `2+2^-`.
    fn from_str(s: &str) -> Result<Self> {
        let (body, split) = SplitTag::strip(s.trim());
        Ok(Self {
            partition: body.parse()?,
            split,
        })
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All shapes of `group`, ordered by `|λ|` and then partition order.
pub fn shapes(group: &Group) -> Vec<Shape> {
    let n = group.degree() as u32;
    match group.family() {
        Family::A => partitions(n).into_iter().map(Shape::new).collect(),
        Family::B => (0..=n).flat_map(partitions).map(Shape::new).collect(),
        Family::D => {
            let mut out: Vec<Shape> = (0..=n - 2).flat_map(partitions).map(Shape::new).collect();
            for lambda in partitions(n) {
                if lambda.all_even() {
                    out.push(Shape::split(lambda.clone(), SplitTag::Plus));
                    out.push(Shape::split(lambda, SplitTag::Minus));
                } else {
                    out.push(Shape::new(lambda));
                }
            }
            out
        }
    }
}

/// Standard generators of the parabolic subgroup of `shape`.
pub fn parabolic_generators(group: &Group, shape: &Shape) -> Result<Vec<SignedPermutation>> {
    shape.validate(group)?;
    let n = group.degree();
    let k = shape.hyperoctahedral_part(group);
    let mut gens = Vec::new();
    match group.family() {
        Family::B if k >= 1 => gens.push(SignedPermutation::sign_change(n, 1)),
        Family::D if k >= 2 => gens.push(SignedPermutation::signed_transposition(n, 1, 2)),
        _ => {}
    }
    gens.extend((1..k).map(|i| SignedPermutation::transposition(n, i, i + 1)));
    let mut u = k;
    for &p in shape.partition.parts() {
        let p = p as usize;
        gens.extend((u + 1..u + p).map(|i| SignedPermutation::transposition(n, i, i + 1)));
        u += p;
    }
    if shape.split == Some(SplitTag::Minus) {
        let t = SignedPermutation::sign_change(n, 1);
        gens = gens.iter().map(|g| g.conjugated_by(&t)).collect();
    }
    Ok(gens)
}

/// `X_L = Fix_V(W_L)`.
pub fn shape_fixed_space(group: &Group, shape: &Shape) -> Result<Subspace> {
    group.common_fixed_space(&parabolic_generators(group, shape)?)
}

/// The standard representative of a class: `w_λ` in type A, `w_μ` in types
/// B and D, and `t w_λ t` for the `-` side of a split type-D class.
pub fn class_rep(group: &Group, label: &ClassLabel) -> Result<SignedPermutation> {
    let n = group.degree();
    let mu = &label.partition;
    let invalid = || Error::InvalidLabel {
        group: group.to_string(),
        label: label.to_string(),
    };
    if mu.size() as usize != n {
        return Err(invalid());
    }
    match group.family() {
        Family::A if !mu.neg().is_empty() || label.split.is_some() => return Err(invalid()),
        Family::B if label.split.is_some() => return Err(invalid()),
        Family::D
            if !mu.neg().len().is_multiple_of(2) || label.split.is_some() != mu.is_d_split() =>
        {
            return Err(invalid())
        }
        _ => {}
    }
    let w = w_mu(n, mu);
    Ok(if label.split == Some(SplitTag::Minus) {
        w.conjugated_by(&SignedPermutation::sign_change(n, 1))
    } else {
        w
    })
}

/// Labels of the cuspidal classes of the parabolic subgroup of `shape`,
/// as classes of `group`. Each class of `group` is cuspidal for exactly one
/// shape.
pub fn cuspidal_labels(group: &Group, shape: &Shape) -> Result<Vec<ClassLabel>> {
    shape.validate(group)?;
    let lambda = &shape.partition;
    let k = shape.hyperoctahedral_part(group) as u32;
    let target = if k == 0 {
        SignedPartition::positive(lambda)
    } else {
        SignedPartition::new(vec![k], lambda.parts().to_vec()).expect("positive parts")
    };
    let labels = class_labels(group)
        .into_iter()
        .filter(|l| l.partition.mu_bar() == target && l.split == shape.split)
        .collect();
    Ok(labels)
}

/// Whether `w ∈ W_L` is cuspidal there, i.e. `Fix_V(w) = Fix_V(W_L)`.
pub fn is_cuspidal(group: &Group, w: &SignedPermutation, shape: &Shape) -> Result<bool> {
    let x = shape_fixed_space(group, shape)?;
    // a parabolic subgroup is the pointwise stabilizer of its fixed space
    if !group.contains(w) || !x.basis().iter().all(|b| w.act_on_vector(b) == *b) {
        return Err(Error::NotInGroup {
            element: w.to_string(),
            group: format!("parabolic {shape} of {group}"),
        });
    }
    Ok(group.fixed_space(w)?.dim() == x.dim())
}

/// The shape for which the class `label` is cuspidal.
pub fn cuspidal_shape(group: &Group, label: &ClassLabel) -> Result<Shape> {
    let mu = &label.partition;
    let shape = Shape {
        partition: mu.pos_partition(),
        split: label.split,
    };
    shape.validate(group).map_err(|_| Error::InvalidLabel {
        group: group.to_string(),
        label: label.to_string(),
    })?;
    Ok(shape)
}
