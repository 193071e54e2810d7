//! Linear characters of centralizers `C_G(w)`, given by their values on the
//! generators `c_i, x_i, d_j, y_j, r_j` and evaluated through centralizer
//! coordinates.
//!
//! For each cycle length and sign one value is stored for the cycle, one
//! for the swap of two equal cycles and (positive cycles) one for the
//! negation of a cycle. A character of `C_{W_n}(w_μ)` is determined by
//! these, and any choice with the right orders extends.

use std::sync::Arc;

use crate::centralizer::{BlockClassSums, Centralizer, CentralizerCoordinates};
use crate::classes::{ClassLabel, SplitTag};
use crate::cyclotomic::RootOfUnity;
use crate::error::{Error, Result};
use crate::group::{Family, Group};
use crate::linalg::{det, Subspace};
use crate::partition::SignedPartition;
use crate::perm::SignedPermutation;
use crate::shape::{shape_fixed_space, Shape};

/// Which subgroup of `C_{W_n}(w)` the character lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// `C_{W_n}(w)`.
    Hyperoctahedral,
    /// `C_{W'_n}(w) = W'_n ∩ C_{W_n}(w)`.
    Even,
    /// `C_{S_n}(w)`.
    Symmetric,
}

impl Domain {
    pub fn contains(self, g: &SignedPermutation) -> bool {
        match self {
            Domain::Hyperoctahedral => true,
            Domain::Even => g.negative_count().is_multiple_of(2),
            Domain::Symmetric => g.is_unsigned(),
        }
    }

    pub fn of_family(family: Family) -> Self {
        match family {
            Family::A => Domain::Symmetric,
            Family::B => Domain::Hyperoctahedral,
            Family::D => Domain::Even,
        }
    }
}

/// Generator values for the cycles of one length and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorValues {
    pub len: u32,
    pub negative: bool,
    /// `c_i` or `d_j`.
    pub cycle: RootOfUnity,
    /// `x_i` or `y_j`.
    pub swap: RootOfUnity,
    /// `r_j`; unused for negative cycles.
    pub flip: RootOfUnity,
}

#[derive(Clone, Debug)]
pub struct LinearCharacterSpec {
    centralizer: Arc<Centralizer>,
    /// `x` with base element `x w_μ x⁻¹`; `x` is an involution.
    conjugator: Option<SignedPermutation>,
    base: SignedPermutation,
    domain: Domain,
    values: Vec<GeneratorValues>,
}

impl LinearCharacterSpec {
    /// Checks the order conditions: the cycle value has order dividing `2i`
    /// for a negative `i`-cycle and `j` for a positive `j`-cycle, and swap
    /// and flip values are `±1`.
    pub fn new(
        centralizer: Arc<Centralizer>,
        domain: Domain,
        values: Vec<GeneratorValues>,
    ) -> Result<Self> {
        let classes = centralizer.block_classes();
        if classes.len() != values.len() {
            return Err(Error::Precondition(format!(
                "{} generator groups for {} cycle classes",
                values.len(),
                classes.len()
            )));
        }
        for (c, v) in classes.iter().zip(&values) {
            let period = if c.negative { 2 * c.len } else { c.len } as u32;
            let ok = v.len as usize == c.len
                && v.negative == c.negative
                && period.is_multiple_of(v.cycle.order())
                && v.swap.as_sign().is_some()
                && v.flip.as_sign().is_some();
            if !ok {
                return Err(Error::Precondition(format!(
                    "generator values {v:?} violate the order conditions"
                )));
            }
        }
        if domain == Domain::Symmetric && centralizer.is_signed() {
            return Err(Error::Precondition(
                "symmetric-group characters need an unsigned centralizer".into(),
            ));
        }
        let base = centralizer.base().clone();
        Ok(Self {
            centralizer,
            conjugator: None,
            base,
            domain,
            values,
        })
    }

    /// The same character transported to `C(x w x⁻¹)` for an involution `x`.
    pub fn conjugated(mut self, x: &SignedPermutation) -> Self {
        debug_assert!((x * x).is_identity());
        self.base = self.base.conjugated_by(x);
        self.conjugator = Some(x.clone());
        self
    }

    /// Pointwise product of two characters of the same centralizer.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if !self.same_domain(other) {
            return Err(Error::Precondition(
                "characters of different centralizers".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| GeneratorValues {
                cycle: a.cycle * b.cycle,
                swap: a.swap * b.swap,
                flip: a.flip * b.flip,
                ..*a
            })
            .collect();
        Ok(Self {
            values,
            ..self.clone()
        })
    }

    /// The centralized element.
    pub fn base(&self) -> &SignedPermutation {
        &self.base
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn values(&self) -> &[GeneratorValues] {
        &self.values
    }

    pub fn centralizer(&self) -> &Centralizer {
        &self.centralizer
    }

    pub fn conjugator(&self) -> Option<&SignedPermutation> {
        self.conjugator.as_ref()
    }

    /// Whether both characters live on the same subgroup, so that they can
    /// share fusion data.
    pub fn same_domain(&self, other: &Self) -> bool {
        self.base == other.base
            && self.domain == other.domain
            && self.conjugator == other.conjugator
            && self.centralizer.is_signed() == other.centralizer.is_signed()
    }

    /// Smallest `N` such that every value is a power of `ζ_N`.
    pub fn value_order(&self) -> u32 {
        use num_integer::Integer;
        self.values
            .iter()
            .fold(2, |acc, v| acc.lcm(&v.cycle.order()))
    }

    /// Order of the domain of the character.
    pub fn domain_order(&self) -> u64 {
        let full = self.centralizer.order();
        match self.domain {
            Domain::Symmetric | Domain::Hyperoctahedral => full,
            // C_{W_n}(w) contains an element with an odd number of sign
            // changes unless every cycle is positive of even length
            Domain::Even => {
                if self.centralizer.mu().is_d_split() {
                    full
                } else {
                    full / 2
                }
            }
        }
    }

    /// Value in terms of the coordinates of `x g x⁻¹` in `C(w_μ)`.
    pub fn evaluate_coordinates(&self, coords: &CentralizerCoordinates) -> RootOfUnity {
        self.evaluate_sums(&self.centralizer.class_sums(coords))
    }

    /// Value on an element with the given abelianization coordinates.
    pub fn evaluate_sums(&self, class_sums: &[BlockClassSums]) -> RootOfUnity {
        let mut value = RootOfUnity::ONE;
        for (sums, v) in class_sums.iter().zip(&self.values) {
            if sums.permutation_odd {
                value = value * v.swap;
            }
            value = value * v.cycle.pow(sums.shift as i64);
            if sums.flips % 2 == 1 {
                value = value * v.flip;
            }
        }
        value
    }

    pub fn evaluate(&self, g: &SignedPermutation) -> Result<RootOfUnity> {
        if !self.domain.contains(g) {
            return Err(Error::NotInCentralizer(g.to_string()));
        }
        let h = match &self.conjugator {
            Some(x) => g.conjugated_by(x),
            None => g.clone(),
        };
        let coords = self.centralizer.coordinates(&h)?;
        Ok(self.evaluate_coordinates(&coords))
    }

    /// Element of `C(w)` with the given centralizer index, its value, and
    /// whether it lies in the domain.
    pub fn element(&self, index: u64) -> (SignedPermutation, RootOfUnity, bool) {
        let (g, coords) = self.centralizer.element(index);
        let value = self.evaluate_coordinates(&coords);
        let g = match &self.conjugator {
            Some(x) => g.conjugated_by(x),
            None => g,
        };
        let inside = self.domain.contains(&g);
        (g, value, inside)
    }

    /// Every element of the domain, in index order.
    pub fn domain_elements(&self) -> impl Iterator<Item = (SignedPermutation, RootOfUnity)> + '_ {
        (0..self.centralizer.order()).filter_map(move |i| {
            let (g, v, inside) = self.element(i);
            inside.then_some((g, v))
        })
    }

    /// Checks multiplicativity on `samples` pseudo-random pairs.
    pub fn check_homomorphism(&self, samples: usize) -> Result<()> {
        let order = self.centralizer.order();
        let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ order;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % order
        };
        let mut checked = 0;
        let mut attempts = 0;
        while checked < samples && attempts < 8 * samples {
            attempts += 1;
            let (g, gv, gin) = self.element(next());
            let (h, hv, hin) = self.element(next());
            if !(gin && hin) {
                continue;
            }
            checked += 1;
            let gh = &g * &h;
            if self.evaluate(&gh)? != gv * hv {
                return Err(Error::NotAHomomorphism(format!("{g} * {h}")));
            }
        }
        Ok(())
    }
}

fn values_from(
    centralizer: &Centralizer,
    f: impl Fn(u32, bool) -> (RootOfUnity, RootOfUnity, RootOfUnity),
) -> Vec<GeneratorValues> {
    centralizer
        .block_classes()
        .iter()
        .map(|c| {
            let (cycle, swap, flip) = f(c.len as u32, c.negative);
            GeneratorValues {
                len: c.len as u32,
                negative: c.negative,
                cycle,
                swap,
                flip,
            }
        })
        .collect()
}

fn odd_part(mut k: u32) -> u32 {
    while k.is_multiple_of(2) {
        k /= 2;
    }
    k
}

/// `φ^A_λ` on `C_{S_n}(w_λ)`: `c ↦ ζ_{|c|}`, swaps `↦ 1`.
pub fn phi_a(n: usize, lambda: &SignedPartition) -> Result<LinearCharacterSpec> {
    let c = Arc::new(Centralizer::symmetric(n, lambda)?);
    let values = values_from(&c, |len, _| {
        (RootOfUnity::zeta(len), RootOfUnity::ONE, RootOfUnity::ONE)
    });
    LinearCharacterSpec::new(c, Domain::Symmetric, values)
}

/// `φ^B_μ` on `C_{W_n}(w_μ)`: `c_i ↦ ζ_{2k}` where `μ⁻_i = 2^l k` with `k`
/// odd, `x_i ↦ -1`, `d_j ↦ ζ_{μ⁺_j}`, `y_j ↦ 1`, `r_j ↦ (-1)^{μ⁺_j - 1}`.
pub fn phi_b(n: usize, mu: &SignedPartition) -> Result<LinearCharacterSpec> {
    let c = Arc::new(Centralizer::new(n, mu)?);
    let values = values_from(&c, |len, negative| {
        if negative {
            (
                RootOfUnity::zeta(2 * odd_part(len)),
                RootOfUnity::MINUS_ONE,
                RootOfUnity::ONE,
            )
        } else {
            (
                RootOfUnity::zeta(len),
                RootOfUnity::ONE,
                RootOfUnity::sign(len % 2 == 1),
            )
        }
    });
    LinearCharacterSpec::new(c, Domain::Hyperoctahedral, values)
}

/// `ψ_μ` on `C_{W_n}(w_μ)`: `c ↦ ζ_{|c|}`, `x_i ↦ -1`, `d_j ↦ ζ_{μ⁺_j}`,
/// `y_j ↦ 1`, `r_j ↦ -1`. Requires `l(μ⁻)` even.
pub fn psi_mu(n: usize, mu: &SignedPartition) -> Result<LinearCharacterSpec> {
    if !mu.neg().len().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "{mu} has an odd number of negative cycles"
        )));
    }
    let c = Arc::new(Centralizer::new(n, mu)?);
    let values = values_from(&c, |len, negative| {
        if negative {
            (
                RootOfUnity::zeta(2 * len),
                RootOfUnity::MINUS_ONE,
                RootOfUnity::ONE,
            )
        } else {
            (
                RootOfUnity::zeta(len),
                RootOfUnity::ONE,
                RootOfUnity::MINUS_ONE,
            )
        }
    });
    LinearCharacterSpec::new(c, Domain::Hyperoctahedral, values)
}

/// `φ^D_μ`, the restriction of `ψ_μ` to `C_{W'_n}(w_μ)`.
pub fn phi_d(n: usize, mu: &SignedPartition) -> Result<LinearCharacterSpec> {
    let psi = psi_mu(n, mu)?;
    Ok(LinearCharacterSpec {
        domain: Domain::Even,
        ..psi
    })
}

/// The character `φ_w` attached to a class of `group`: `φ^A` in type A,
/// `φ^B` in type B, and `φ^D` in type D, transported by `t` to `t w_λ t`
/// on the `-` side of a split class.
pub fn phi_for_class(group: &Group, label: &ClassLabel) -> Result<LinearCharacterSpec> {
    let n = group.degree();
    let mu = &label.partition;
    match group.family() {
        Family::A => phi_a(n, mu),
        Family::B => phi_b(n, mu),
        Family::D => {
            let phi = phi_d(n, mu)?;
            Ok(match label.split {
                Some(SplitTag::Minus) => phi.conjugated(&SignedPermutation::sign_change(n, 1)),
                _ => phi,
            })
        }
    }
}

/// `ε` restricted to the centralizer of `spec`, as a character of the same
/// shape: a negative `i`-cycle and the swap of two `i`-cycles have
/// determinant `(-1)^i`, a positive `j`-cycle `(-1)^{j-1}`, and swapping or
/// negating positive `j`-cycles `(-1)^j`.
pub fn epsilon_like(spec: &LinearCharacterSpec) -> LinearCharacterSpec {
    let parity = |k: u32| RootOfUnity::sign(k.is_multiple_of(2));
    let values = values_from(&spec.centralizer, |len, negative| {
        if negative {
            (parity(len), parity(len), RootOfUnity::ONE)
        } else {
            (parity(len - 1), parity(len), parity(len))
        }
    });
    LinearCharacterSpec {
        values,
        ..spec.clone()
    }
}

/// `α_w` restricted to the centralizer of `spec`: `Fix(w)` is spanned by
/// the sums over the positive cycles, so `α_w` is the sign of the induced
/// signed permutation of the positive cycles.
pub fn alpha_like(spec: &LinearCharacterSpec) -> LinearCharacterSpec {
    let values = values_from(&spec.centralizer, |_, negative| {
        if negative {
            (RootOfUnity::ONE, RootOfUnity::ONE, RootOfUnity::ONE)
        } else {
            (
                RootOfUnity::ONE,
                RootOfUnity::MINUS_ONE,
                RootOfUnity::MINUS_ONE,
            )
        }
    });
    LinearCharacterSpec {
        values,
        ..spec.clone()
    }
}

/// `χ_w = α_w ε φ_w`.
pub fn chi_for_class(group: &Group, label: &ClassLabel) -> Result<LinearCharacterSpec> {
    let phi = phi_for_class(group, label)?;
    phi.product(&alpha_like(&phi))?.product(&epsilon_like(&phi))
}

/// `α_L` on `N_W(W_L)`: the determinant of the action on `X_L = Fix(W_L)`.
#[derive(Clone, Debug)]
pub struct FixedSpaceDeterminant {
    fix: Subspace,
}

impl FixedSpaceDeterminant {
    pub fn new(fix: Subspace) -> Self {
        Self { fix }
    }

    pub fn fixed_space(&self) -> &Subspace {
        &self.fix
    }

    /// `det(g|_{X_L})`; errors when `g` does not stabilize `X_L`.
    pub fn evaluate(&self, g: &SignedPermutation) -> Result<i32> {
        let m = self.fix.restricted_matrix(g)?;
        let d = det(&m)?;
        Ok(*d.numer() as i32 / *d.denom() as i32)
    }
}

/// `α_w = α_L|_{C_W(w)}` for `w` cuspidal in the parabolic of `shape`.
pub fn alpha_on_centralizer(
    group: &Group,
    shape: &Shape,
    w: &SignedPermutation,
) -> Result<FixedSpaceDeterminant> {
    let fix = shape_fixed_space(group, shape)?;
    if group.fixed_space(w)? != fix {
        return Err(Error::Precondition(format!(
            "{w} is not cuspidal in the parabolic of shape {shape}"
        )));
    }
    Ok(FixedSpaceDeterminant::new(fix))
}
