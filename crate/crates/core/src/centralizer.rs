//! Centralizers `C_{W_n}(w_μ)` of the standard class representatives.
//!
//! The centralizer is a direct product, over cycle lengths, of wreath
//! products: `(Z_{2i})^{μ⁻(i)} ⋊ S_{μ⁻(i)}` for the negative `i`-cycles and
//! `(Z_j)^{μ⁺(j)} ⋊ W_{μ⁺(j)}` for the positive `j`-cycles. An element is
//! described by [`CentralizerCoordinates`]: where each cycle block goes, by
//! which rotation, and (for positive blocks) whether it is negated.

use crate::error::{Error, Result};
use crate::partition::SignedPartition;
use crate::perm::SignedPermutation;

/// The support `{start+1, …, start+len}` of one cycle of `w_μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub len: usize,
    pub negative: bool,
}

impl Block {
    fn contains(&self, v: usize) -> bool {
        v > self.start && v <= self.start + self.len
    }

    /// Order of the rotation group acting on the block.
    fn period(&self) -> usize {
        if self.negative {
            2 * self.len
        } else {
            self.len
        }
    }

    /// `c^p(start+1)` for a negative block, `d^p(start+1)` for a positive one.
    fn rotate(&self, p: usize) -> i32 {
        let p = p % self.period();
        if p < self.len {
            (self.start + 1 + p) as i32
        } else {
            -((self.start + 1 + p - self.len) as i32)
        }
    }
}

/// Blocks of `w_μ`: negative cycles in the order `μ⁻₁ ≤ … ≤ μ⁻ₐ`, then the
/// positive cycles `μ⁺₁ ≥ … ≥ μ⁺_b`.
pub fn blocks(mu: &SignedPartition) -> Vec<Block> {
    let mut out = Vec::new();
    let mut u = 0;
    for &len in mu.neg() {
        out.push(Block {
            start: u,
            len: len as usize,
            negative: true,
        });
        u += len as usize;
    }
    for &len in mu.pos() {
        out.push(Block {
            start: u,
            len: len as usize,
            negative: false,
        });
        u += len as usize;
    }
    out
}

fn cycle_on_block(n: usize, b: &Block) -> SignedPermutation {
    let mut images: Vec<i32> = (1..=n as i32).collect();
    for r in 0..b.len {
        images[b.start + r] = b.rotate(r + 1);
    }
    SignedPermutation::from_images_unchecked(images)
}

fn swap_blocks(n: usize, a: &Block, b: &Block) -> SignedPermutation {
    debug_assert_eq!(a.len, b.len);
    let mut images: Vec<i32> = (1..=n as i32).collect();
    for r in 0..a.len {
        images[a.start + r] = (b.start + 1 + r) as i32;
        images[b.start + r] = (a.start + 1 + r) as i32;
    }
    SignedPermutation::from_images_unchecked(images)
}

fn negate_block(n: usize, b: &Block) -> SignedPermutation {
    let mut images: Vec<i32> = (1..=n as i32).collect();
    for r in 0..b.len {
        images[b.start + r] = -((b.start + 1 + r) as i32);
    }
    SignedPermutation::from_images_unchecked(images)
}

fn check_size(n: usize, mu: &SignedPartition) -> Result<()> {
    if mu.size() as usize != n {
        return Err(Error::Precondition(format!(
            "{mu} is not a signed partition of {n}"
        )));
    }
    Ok(())
}

/// `w_μ = c_1 ⋯ c_a d_1 ⋯ d_b`. Panics if `|μ| ≠ n`.
pub fn w_mu(n: usize, mu: &SignedPartition) -> SignedPermutation {
    check_size(n, mu).expect("signed partition of n");
    let mut images: Vec<i32> = (1..=n as i32).collect();
    for b in blocks(mu) {
        for r in 0..b.len {
            images[b.start + r] = b.rotate(r + 1);
        }
    }
    SignedPermutation::from_images_unchecked(images)
}

/// The elements `c_i, d_j, x_i, y_j, r_j` attached to `w_μ`. Swaps carry the
/// 1-based index `i` of the first of the two exchanged cycles.
#[derive(Clone, Debug)]
pub struct CentralizerGenSet {
    pub n: usize,
    pub mu: SignedPartition,
    pub neg_cycles: Vec<SignedPermutation>,
    pub pos_cycles: Vec<SignedPermutation>,
    pub neg_swaps: Vec<(usize, SignedPermutation)>,
    pub pos_swaps: Vec<(usize, SignedPermutation)>,
    pub flips: Vec<SignedPermutation>,
}

impl CentralizerGenSet {
    pub fn all(&self) -> Vec<SignedPermutation> {
        let mut out = self.neg_cycles.clone();
        out.extend(self.pos_cycles.iter().cloned());
        out.extend(self.neg_swaps.iter().map(|(_, g)| g.clone()));
        out.extend(self.pos_swaps.iter().map(|(_, g)| g.clone()));
        out.extend(self.flips.iter().cloned());
        out
    }
}

pub fn centralizer_generators(n: usize, mu: &SignedPartition) -> Result<CentralizerGenSet> {
    check_size(n, mu)?;
    let bl = blocks(mu);
    let a = mu.neg().len();
    let (negb, posb) = bl.split_at(a);
    let swaps = |bs: &[Block]| {
        bs.windows(2)
            .enumerate()
            .filter(|(_, w)| w[0].len == w[1].len)
            .map(|(i, w)| (i + 1, swap_blocks(n, &w[0], &w[1])))
            .collect::<Vec<_>>()
    };
    Ok(CentralizerGenSet {
        n,
        mu: mu.clone(),
        neg_cycles: negb.iter().map(|b| cycle_on_block(n, b)).collect(),
        pos_cycles: posb.iter().map(|b| cycle_on_block(n, b)).collect(),
        neg_swaps: swaps(negb),
        pos_swaps: swaps(posb),
        flips: posb.iter().map(|b| negate_block(n, b)).collect(),
    })
}

/// Image of one block under a centralizing element: the target block, the
/// rotation exponent `k` and (positive blocks only) the negation bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockImage {
    pub target: usize,
    pub shift: u32,
    pub flip: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerCoordinates {
    pub images: Vec<BlockImage>,
}

/// Blocks of one cycle length and sign, which the centralizer permutes
/// among themselves.
#[derive(Clone, Debug)]
pub struct BlockClass {
    pub len: usize,
    pub negative: bool,
    pub members: Vec<usize>,
}

/// Exponent sums of one element over one [`BlockClass`]: these are the
/// images in the abelianization `Z_{2i} × Z_2` or `Z_j × Z_2 × Z_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockClassSums {
    pub permutation_odd: bool,
    pub shift: u32,
    pub flips: u32,
}

/// `C_{W_n}(w_μ)` with explicit coordinates.
#[derive(Clone, Debug)]
pub struct Centralizer {
    n: usize,
    mu: SignedPartition,
    base: SignedPermutation,
    blocks: Vec<Block>,
    classes: Vec<BlockClass>,
    signed: bool,
}

impl Centralizer {
    pub fn new(n: usize, mu: &SignedPartition) -> Result<Self> {
        Self::build(n, mu, true)
    }

    /// `C_{S_n}(w_λ)` for a signed partition with no negative parts: the
    /// elements of `C_{W_n}(w_λ)` without sign changes.
    pub fn symmetric(n: usize, mu: &SignedPartition) -> Result<Self> {
        if !mu.neg().is_empty() {
            return Err(Error::Precondition(format!("{mu} has negative cycles")));
        }
        Self::build(n, mu, false)
    }

    fn build(n: usize, mu: &SignedPartition, signed: bool) -> Result<Self> {
        check_size(n, mu)?;
        let blocks = blocks(mu);
        let mut classes: Vec<BlockClass> = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            match classes.last_mut() {
                Some(c) if c.len == b.len && c.negative == b.negative => c.members.push(i),
                _ => classes.push(BlockClass {
                    len: b.len,
                    negative: b.negative,
                    members: vec![i],
                }),
            }
        }
        Ok(Self {
            n,
            mu: mu.clone(),
            base: w_mu(n, mu),
            blocks,
            classes,
            signed,
        })
    }

    /// Whether sign changes are allowed, i.e. this is a centralizer in `W_n`
    /// rather than in `S_n`.
    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &SignedPartition {
        &self.mu
    }

    /// `w_μ`.
    pub fn base(&self) -> &SignedPermutation {
        &self.base
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_classes(&self) -> &[BlockClass] {
        &self.classes
    }

    pub fn order(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| {
                let m = c.members.len() as u32;
                let fact: u64 = (1..=m as u64).product();
                fact * self.block_group_order(c).pow(m)
            })
            .product()
    }

    /// `Z_{2i}` per negative block, `Z_j × {±1}` per positive block, just
    /// `Z_j` without sign changes.
    fn block_group_order(&self, c: &BlockClass) -> u64 {
        if self.signed {
            2 * c.len as u64
        } else {
            c.len as u64
        }
    }

    fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(v))
            .expect("v in [n]")
    }

    /// Decomposes a centralizing element into block coordinates.
    pub fn coordinates(&self, g: &SignedPermutation) -> Result<CentralizerCoordinates> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: g.degree(),
            });
        }
        if !g.commutes_with(&self.base) || (!self.signed && !g.is_unsigned()) {
            return Err(Error::NotInCentralizer(g.to_string()));
        }
        let coords = self.coordinates_unchecked(g)?;
        if self.reassemble(&coords)? != *g {
            return Err(Error::InconsistentBlock(g.to_string()));
        }
        Ok(coords)
    }

    fn coordinates_unchecked(&self, g: &SignedPermutation) -> Result<CentralizerCoordinates> {
        let mut used = vec![false; self.blocks.len()];
        let mut images = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let v = g.apply(b.start as i32 + 1);
            let target = self.block_of(v.unsigned_abs() as usize);
            let tb = &self.blocks[target];
            if tb.len != b.len || tb.negative != b.negative || used[target] {
                return Err(Error::InconsistentBlock(g.to_string()));
            }
            used[target] = true;
            let offset = v.unsigned_abs() as usize - tb.start - 1;
            let (shift, flip) = match (b.negative, v < 0) {
                (true, false) => (offset, false),
                (true, true) => (offset + b.len, false),
                (false, neg) => (offset, neg),
            };
            images.push(BlockImage {
                target,
                shift: shift as u32,
                flip,
            });
        }
        Ok(CentralizerCoordinates { images })
    }

    /// Rebuilds the element with the given coordinates.
    pub fn reassemble(&self, coords: &CentralizerCoordinates) -> Result<SignedPermutation> {
        if coords.images.len() != self.blocks.len() {
            return Err(Error::InconsistentBlock(format!("{coords:?}")));
        }
        let mut images = vec![0i32; self.n];
        let mut used = vec![false; self.blocks.len()];
        for (b, im) in self.blocks.iter().zip(&coords.images) {
            let tb = self
                .blocks
                .get(im.target)
                .filter(|tb| tb.len == b.len && tb.negative == b.negative)
                .ok_or_else(|| Error::InconsistentBlock(format!("{coords:?}")))?;
            if used[im.target] || im.shift as usize >= b.period() || (b.negative && im.flip) {
                return Err(Error::InconsistentBlock(format!("{coords:?}")));
            }
            used[im.target] = true;
            for r in 0..b.len {
                let v = tb.rotate(r + im.shift as usize);
                images[b.start + r] = if im.flip { -v } else { v };
            }
        }
        Ok(SignedPermutation::from_images_unchecked(images))
    }

    /// Abelianization coordinates, one entry per [`BlockClass`].
    pub fn class_sums(&self, coords: &CentralizerCoordinates) -> Vec<BlockClassSums> {
        self.classes
            .iter()
            .map(|c| {
                let m = c.members.len();
                // permutation of the member positions
                let perm: Vec<usize> = c
                    .members
                    .iter()
                    .map(|&b| {
                        let t = coords.images[b].target;
                        c.members.iter().position(|&x| x == t).expect("same class")
                    })
                    .collect();
                let modulus = if c.negative { 2 * c.len } else { c.len } as u32;
                let shift = c
                    .members
                    .iter()
                    .map(|&b| coords.images[b].shift)
                    .sum::<u32>()
                    % modulus;
                let flips = c.members.iter().filter(|&&b| coords.images[b].flip).count() as u32 % 2;
                BlockClassSums {
                    permutation_odd: permutation_is_odd(&perm, m),
                    shift,
                    flips,
                }
            })
            .collect()
    }

    /// The element with mixed-radix index `index ∈ [0, order)`. Every
    /// element of the centralizer arises from exactly one index.
    pub fn element(&self, index: u64) -> (SignedPermutation, CentralizerCoordinates) {
        debug_assert!(index < self.order());
        let mut idx = index;
        let mut images = vec![
            BlockImage {
                target: 0,
                shift: 0,
                flip: false
            };
            self.blocks.len()
        ];
        for c in &self.classes {
            let m = c.members.len();
            let fact: u64 = (1..=m as u64).product();
            let perm = nth_permutation(m, idx % fact);
            idx /= fact;
            for (pos, &b) in c.members.iter().enumerate() {
                let shift_radix = c.len as u64 * if c.negative { 2 } else { 1 };
                let shift = idx % shift_radix;
                idx /= shift_radix;
                let flip = if c.negative || !self.signed {
                    false
                } else {
                    let f = idx % 2 == 1;
                    idx /= 2;
                    f
                };
                images[b] = BlockImage {
                    target: c.members[perm[pos]],
                    shift: shift as u32,
                    flip,
                };
            }
        }
        let coords = CentralizerCoordinates { images };
        let g = self.reassemble(&coords).expect("valid coordinates");
        (g, coords)
    }

    pub fn elements(&self) -> impl Iterator<Item = SignedPermutation> + '_ {
        (0..self.order()).map(move |i| self.element(i).0)
    }
}

fn permutation_is_odd(perm: &[usize], m: usize) -> bool {
    let mut seen = vec![false; m];
    let mut odd = false;
    for s in 0..m {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Permutation of `0..m` with Lehmer rank `k`.
fn nth_permutation(m: usize, mut k: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(m);
    for i in (0..m).rev() {
        let f: u64 = (1..=i as u64).product();
        let j = (k / f) as usize;
        k %= f;
        out.push(pool.remove(j));
    }
    out
}
