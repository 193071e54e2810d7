//! Conjugacy classes: signed cycle types, the type-D split rule and class
//! tables with sizes and centralizer orders.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::centralizer::w_mu;
use crate::error::{Error, Result};
use crate::group::{Budget, Family, Group};
use crate::partition::{multiplicities, partitions, signed_partitions, SignedPartition};
use crate::perm::SignedPermutation;
use crate::shape::class_rep;

/// Which of the two `W'_n`-classes of an all-even positive cycle type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitTag {
    /// Conjugate to `w_λ ∈ S_λ`.
    Plus,
    /// Conjugate to `t w_λ t`.
    Minus,
}

impl SplitTag {
    fn suffix(self) -> &'static str {
        match self {
            SplitTag::Plus => "^+",
            SplitTag::Minus => "^-",
        }
    }

    pub(crate) fn strip(s: &str) -> (&str, Option<SplitTag>) {
        if let Some(rest) = s.strip_suffix("^+") {
            (rest, Some(SplitTag::Plus))
        } else if let Some(rest) = s.strip_suffix("^-") {
            (rest, Some(SplitTag::Minus))
        } else {
            (s, None)
        }
    }
}

impl fmt::Display for SplitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitTag::Plus => "+",
            SplitTag::Minus => "-",
        })
    }
}

/// Conjugacy class label: a signed partition, plus a split tag for the
/// type-D classes that split.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub partition: SignedPartition,
    pub split: Option<SplitTag>,
}

impl ClassLabel {
    pub fn new(partition: SignedPartition) -> Self {
        Self {
            partition,
            split: None,
        }
    }

    pub fn split(partition: SignedPartition, tag: SplitTag) -> Self {
        Self {
            partition,
            split: Some(tag),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(tag) = self.split {
            f.write_str(tag.suffix())?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    /// `-1-2+3+1`, or `+2+2^+` / `+2+2^-` for split type-D classes.
    fn from_str(s: &str) -> Result<Self> {
        let (body, split) = SplitTag::strip(s.trim());
        Ok(Self {
            partition: body.parse()?,
            split,
        })
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Decomposes `w` into signed cycles. A cycle is negative when following it
/// once returns to `-i`.
pub fn signed_cycle_type(w: &SignedPermutation) -> SignedPartition {
    let n = w.degree();
    let mut seen = vec![false; n];
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for i in 1..=n {
        if seen[i - 1] {
            continue;
        }
        let mut len = 0;
        let mut v = i as i32;
        loop {
            seen[v.unsigned_abs() as usize - 1] = true;
            v = w.apply(v);
            len += 1;
            if v.unsigned_abs() as usize == i {
                break;
            }
        }
        if v < 0 {
            neg.push(len);
        } else {
            pos.push(len);
        }
    }
    SignedPartition::new(neg, pos).expect("cycle lengths are positive")
}

/// For `w ∈ W'_n` whose cycles are all positive of even length, decides
/// which of the two `W'_n`-classes of that type contains `w`.
///
/// Builds `x ∈ W_n` with `x w x⁻¹ = w_λ` by sending each cycle of `w` onto a
/// block of `w_λ` in cycle order, and returns the parity of the sign changes
/// of `x`. Every centralizer of an all-even positive `w_λ` lies in `W'_n`,
/// so the parity does not depend on the choice of `x`.
pub fn d_split_side(w: &SignedPermutation) -> Result<SplitTag> {
    let n = w.degree();
    if !w.negative_count().is_multiple_of(2) {
        return Err(Error::Precondition(format!("{w} is not in W'_{n}")));
    }
    let mu = signed_cycle_type(w);
    if !mu.is_d_split() {
        return Err(Error::Precondition(format!(
            "{w} has cycle type {mu}, not all even and positive"
        )));
    }
    // first unused block start for each cycle length
    let mut next_block: HashMap<u32, Vec<usize>> = HashMap::new();
    let mut u = 0;
    for &p in mu.pos().iter() {
        next_block.entry(p).or_default().push(u);
        u += p as usize;
    }
    for starts in next_block.values_mut() {
        starts.reverse();
    }
    let mut x = vec![0i32; n];
    let mut seen = vec![false; n];
    let mut negatives = 0usize;
    for a in 1..=n {
        if seen[a - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = a as i32;
        loop {
            seen[v.unsigned_abs() as usize - 1] = true;
            cycle.push(v);
            v = w.apply(v);
            if v == a as i32 {
                break;
            }
        }
        let start = next_block
            .get_mut(&(cycle.len() as u32))
            .and_then(Vec::pop)
            .expect("cycle type matches blocks");
        for (r, &v) in cycle.iter().enumerate() {
            let target = (start + r + 1) as i32;
            let i = v.unsigned_abs() as usize - 1;
            if v < 0 {
                x[i] = -target;
                negatives += 1;
            } else {
                x[i] = target;
            }
        }
    }
    let x = SignedPermutation::from_images_unchecked(x);
    debug_assert_eq!(
        w.conjugated_by(&x),
        w_mu(n, &mu),
        "conjugator does not reach w_lambda"
    );
    Ok(if negatives.is_multiple_of(2) {
        SplitTag::Plus
    } else {
        SplitTag::Minus
    })
}

/// `|C_{W_n}(w_μ)| = ∏_{i∈μ⁻} (2i)^{μ⁻(i)} μ⁻(i)! · ∏_{j∈μ⁺} (2j)^{μ⁺(j)} μ⁺(j)!`.
pub fn hyperoctahedral_centralizer_order(mu: &SignedPartition) -> u64 {
    let fact = |k: usize| -> u64 { (1..=k as u64).product() };
    let mut order = 1u64;
    for (i, m) in multiplicities(mu.neg()) {
        order *= (2 * i as u64).pow(m as u32) * fact(m);
    }
    for (j, m) in multiplicities(mu.pos()) {
        order *= (2 * j as u64).pow(m as u32) * fact(m);
    }
    order
}

/// Centralizer order of the class `label` in `group`.
pub fn centralizer_order(group: &Group, label: &ClassLabel) -> u64 {
    let mu = &label.partition;
    match group.family() {
        Family::A => {
            let fact = |k: usize| -> u64 { (1..=k as u64).product() };
            multiplicities(mu.pos())
                .into_iter()
                .map(|(j, m)| (j as u64).pow(m as u32) * fact(m))
                .product()
        }
        Family::B => hyperoctahedral_centralizer_order(mu),
        Family::D => {
            // C_{W_n}(w_μ) has an odd element unless the type splits
            let full = hyperoctahedral_centralizer_order(mu);
            if mu.is_d_split() {
                full
            } else {
                full / 2
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: ClassLabel,
    pub representative: SignedPermutation,
    pub size: u64,
    pub centralizer_order: u64,
}

/// All class labels of `group` in canonical order.
pub fn class_labels(group: &Group) -> Vec<ClassLabel> {
    let n = group.degree() as u32;
    match group.family() {
        Family::A => partitions(n)
            .iter()
            .map(|l| ClassLabel::new(SignedPartition::positive(l)))
            .collect(),
        Family::B => signed_partitions(n)
            .into_iter()
            .map(ClassLabel::new)
            .collect(),
        Family::D => {
            let mut out = Vec::new();
            for mu in signed_partitions(n) {
                if mu.neg().len() % 2 != 0 {
                    continue;
                }
                if mu.is_d_split() {
                    out.push(ClassLabel::split(mu.clone(), SplitTag::Plus));
                    out.push(ClassLabel::split(mu, SplitTag::Minus));
                } else {
                    out.push(ClassLabel::new(mu));
                }
            }
            out
        }
    }
}

pub fn conjugacy_classes(group: &Group, budget: &Budget) -> Result<Vec<ConjClass>> {
    budget.check_elements("conjugacy classes", group.order())?;
    class_labels(group)
        .into_iter()
        .map(|label| {
            let representative = class_rep(group, &label)?;
            let c = centralizer_order(group, &label);
            Ok(ConjClass {
                size: group.order() / c,
                centralizer_order: c,
                representative,
                label,
            })
        })
        .collect()
}

/// Class data of one group, with fusion of elements into classes keyed by
/// signed cycle type and, in type D, the split side.
#[derive(Clone, Debug)]
pub struct ClassTable {
    group: Group,
    classes: Vec<ConjClass>,
    index: HashMap<ClassLabel, usize>,
}

impl ClassTable {
    pub fn new(group: Group, budget: &Budget) -> Result<Self> {
        let classes = conjugacy_classes(&group, budget)?;
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.label.clone(), i))
            .collect();
        Ok(Self {
            group,
            classes,
            index,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, label: &ClassLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label_of(&self, w: &SignedPermutation) -> Result<ClassLabel> {
        self.group.check_member(w)?;
        let mu = signed_cycle_type(w);
        if self.group.family() == Family::D && mu.is_d_split() {
            let tag = d_split_side(w)?;
            return Ok(ClassLabel::split(mu, tag));
        }
        Ok(ClassLabel::new(mu))
    }

    /// Index of the class containing `w`.
    pub fn class_of(&self, w: &SignedPermutation) -> Result<usize> {
        let label = self.label_of(w)?;
        self.index_of(&label).ok_or_else(|| Error::InvalidLabel {
            group: self.group.to_string(),
            label: label.to_string(),
        })
    }

    pub fn identity_class(&self) -> usize {
        self.class_of(&SignedPermutation::identity(self.group.degree()))
            .expect("identity lies in every group")
    }
}
