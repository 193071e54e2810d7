//! Class functions on a fixed group and induction of linear characters from
//! centralizers.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::centralizer::BlockClassSums;
use crate::character::LinearCharacterSpec;
use crate::classes::{ClassTable, ConjClass};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Budget;
use crate::linalg::Rational;

/// One exact value per conjugacy class, in class-table order.
#[derive(Clone)]
pub struct ClassFunction {
    table: Arc<ClassTable>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(table: Arc<ClassTable>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != table.len() {
            return Err(Error::DimensionMismatch {
                left: table.len(),
                right: values.len(),
            });
        }
        Ok(Self { table, values })
    }

    pub fn from_fn(table: Arc<ClassTable>, f: impl Fn(&ConjClass) -> Cyclotomic) -> Self {
        let values = table.classes().iter().map(f).collect();
        Self { table, values }
    }

    pub fn zero(table: Arc<ClassTable>) -> Self {
        Self::from_fn(table, |_| Cyclotomic::zero())
    }

    /// `ρ`: `|G|` at the identity, `0` elsewhere.
    pub fn regular(table: Arc<ClassTable>) -> Self {
        let order = table.group().order() as i64;
        Self::from_fn(table, |c| {
            if c.representative.is_identity() {
                Cyclotomic::from_integer(order)
            } else {
                Cyclotomic::zero()
            }
        })
    }

    pub fn trivial(table: Arc<ClassTable>) -> Self {
        Self::from_fn(table, |_| Cyclotomic::one())
    }

    /// `ε`, the determinant on the reflection representation.
    pub fn sign(table: Arc<ClassTable>) -> Self {
        Self::from_fn(table, |c| {
            Cyclotomic::from_integer(c.representative.determinant() as i64)
        })
    }

    pub fn table(&self) -> &Arc<ClassTable> {
        &self.table
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity.
    pub fn degree(&self) -> Cyclotomic {
        self.values[self.table.identity_class()].clone()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.table.group() != other.table.group() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Self> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Self {
            table: self.table.clone(),
            values,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn multiply_pointwise(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    /// `ε · f`.
    pub fn scale_by_sign(&self) -> Self {
        let values = self
            .table
            .classes()
            .iter()
            .zip(&self.values)
            .map(|(c, v)| {
                if c.representative.determinant() < 0 {
                    -v
                } else {
                    v.clone()
                }
            })
            .collect();
        Self {
            table: self.table.clone(),
            values,
        }
    }

    pub fn scale(&self, s: Rational) -> Self {
        Self {
            table: self.table.clone(),
            values: self.values.iter().map(|v| v.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// `(1/|G|) Σ_g f(g) conj(h(g))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.check_same(other)?;
        let mut total = Cyclotomic::zero();
        for ((c, a), b) in self
            .table
            .classes()
            .iter()
            .zip(&self.values)
            .zip(&other.values)
        {
            let term = (a * &b.conj()).scale(Rational::from_integer(c.size as i64));
            total = &total + &term;
        }
        Ok(total.scale(Rational::new(1, self.table.group().order() as i64)))
    }

    /// Integer values, when every value is a rational integer.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.values.iter().map(Cyclotomic::to_integer).collect()
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.table.group() == other.table.group() && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction({}: {self})", self.table.group())
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (c, v) in self.table.classes().iter().zip(&self.values) {
            map.serialize_entry(&c.label, v)?;
        }
        map.end()
    }
}

type FusionKey = (usize, Vec<BlockClassSums>);

/// How the elements of a centralizer `C_G(w)` fuse into the classes of `G`,
/// refined by their abelianization coordinates. Any linear character of
/// `C_G(w)` is a function of those coordinates, so one scan of the
/// centralizer serves every such character.
#[derive(Clone, Debug)]
pub struct CentralizerFusion {
    spec: LinearCharacterSpec,
    order: u64,
    counts: HashMap<FusionKey, u64>,
}

impl CentralizerFusion {
    /// Scans the centralizer of `spec` in parallel.
    pub fn compute(
        table: &ClassTable,
        spec: &LinearCharacterSpec,
        budget: &Budget,
    ) -> Result<Self> {
        let total = spec.centralizer().order();
        // the hyperoctahedral centralizer is walked, but only the domain is kept
        budget.check_elements("centralizer enumeration", spec.domain_order())?;
        if !table.group().contains(spec.base()) {
            return Err(Error::NotInGroup {
                element: spec.base().to_string(),
                group: table.group().to_string(),
            });
        }
        let centralizer = spec.centralizer();
        let conj = spec.conjugator();
        let domain = spec.domain();
        let counts = (0..total)
            .into_par_iter()
            .try_fold(HashMap::<FusionKey, u64>::new, |mut acc, i| {
                let (g, coords) = centralizer.element(i);
                let g = match conj {
                    Some(x) => g.conjugated_by(x),
                    None => g,
                };
                if domain.contains(&g) {
                    let class = table.class_of(&g)?;
                    *acc.entry((class, centralizer.class_sums(&coords)))
                        .or_default() += 1;
                }
                Ok::<_, Error>(acc)
            })
            .try_reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                Ok(a)
            })?;
        let order: u64 = counts.values().sum();
        if order != spec.domain_order() {
            return Err(Error::Precondition(format!(
                "centralizer scan found {order} elements, expected {}",
                spec.domain_order()
            )));
        }
        Ok(Self {
            spec: spec.clone(),
            order,
            counts,
        })
    }

    /// `|C_G(w)|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of elements of `C_G(w)` in each class of `G`.
    pub fn class_counts(&self, classes: usize) -> Vec<u64> {
        let mut out = vec![0; classes];
        for ((c, _), n) in &self.counts {
            out[*c] += n;
        }
        out
    }

    /// `Ind_{C_G(w)}^G χ(g) = |C_G(g)|/|C_G(w)| · Σ_{h ∈ C_G(w) ∩ g^G} χ(h)`.
    pub fn induce(
        &self,
        table: &Arc<ClassTable>,
        chi: &LinearCharacterSpec,
    ) -> Result<ClassFunction> {
        if !chi.same_domain(&self.spec) {
            return Err(Error::Precondition(
                "character lives on a different centralizer".into(),
            ));
        }
        let n = chi.value_order();
        let k = table.len();
        let mut exps = vec![0i64; k * n as usize];
        for ((c, sums), count) in &self.counts {
            let e = chi.evaluate_sums(sums).exponent_in(n) as usize;
            exps[c * n as usize + e] += *count as i64;
        }
        let values = table
            .classes()
            .iter()
            .enumerate()
            .map(|(c, class)| {
                let s =
                    Cyclotomic::from_power_counts(n, &exps[c * n as usize..(c + 1) * n as usize]);
                if s.is_zero() {
                    return s;
                }
                s.scale(Rational::new(
                    class.centralizer_order as i64,
                    self.order as i64,
                ))
            })
            .collect();
        ClassFunction::new(table.clone(), values)
    }
}

/// `Ind_{C_G(w)}^G χ`, after a spot check that `χ` is multiplicative.
pub fn induce_from_centralizer(
    table: &Arc<ClassTable>,
    chi: &LinearCharacterSpec,
    budget: &Budget,
) -> Result<ClassFunction> {
    chi.check_homomorphism(64)?;
    CentralizerFusion::compute(table, chi, budget)?.induce(table, chi)
}
