//! Partitions and signed partitions, with the text syntax used on the
//! command line: `3+1` for a partition, `-1-2+3+1` for a signed partition
//! (negative parts ascending, then positive parts descending), `()` for the
//! empty tuple.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers. The empty tuple is the
/// unique partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                what: "partition",
                input: format!("{parts:?}"),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        multiplicities(&self.parts)
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|p| p % 2 == 1)
    }
}

pub(crate) fn multiplicities(parts: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All partitions of `m`, starting with `(1, …, 1)` and ending with `(m)`
/// (lexicographic order on the decreasing part sequence).
pub fn partitions(m: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=remaining.min(max) {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// A pair of partitions stored as `neg = (μ⁻₁ ≤ … ≤ μ⁻ₐ)` and
/// `pos = (μ⁺₁ ≥ … ≥ μ⁺_b)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedPartition {
    neg: Vec<u32>,
    pos: Vec<u32>,
}

impl SignedPartition {
    pub fn new(mut neg: Vec<u32>, mut pos: Vec<u32>) -> Result<Self> {
        if neg.contains(&0) || pos.contains(&0) {
            return Err(Error::Parse {
                what: "signed partition",
                input: format!("{neg:?} {pos:?}"),
            });
        }
        neg.sort_unstable();
        pos.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { neg, pos })
    }

    /// Positive-only signed partition `((), λ)`.
    pub fn positive(lambda: &Partition) -> Self {
        Self {
            neg: Vec::new(),
            pos: lambda.parts.clone(),
        }
    }

    /// Negative parts in ascending order.
    pub fn neg(&self) -> &[u32] {
        &self.neg
    }

    /// Positive parts in descending order.
    pub fn pos(&self) -> &[u32] {
        &self.pos
    }

    pub fn neg_size(&self) -> u32 {
        self.neg.iter().sum()
    }

    pub fn pos_size(&self) -> u32 {
        self.pos.iter().sum()
    }

    pub fn size(&self) -> u32 {
        self.neg_size() + self.pos_size()
    }

    pub fn neg_partition(&self) -> Partition {
        Partition::new(self.neg.clone()).expect("positive parts")
    }

    pub fn pos_partition(&self) -> Partition {
        Partition {
            parts: self.pos.clone(),
        }
    }

    /// `μ̄ = ((|μ⁻|), μ⁺)`; the negative part is omitted when `|μ⁻| = 0`.
    pub fn mu_bar(&self) -> Self {
        let k = self.neg_size();
        Self {
            neg: if k == 0 { Vec::new() } else { vec![k] },
            pos: self.pos.clone(),
        }
    }

    /// All cycles positive and of even length: the classes that split in
    /// type D.
    pub fn is_d_split(&self) -> bool {
        self.neg.is_empty() && self.pos.iter().all(|p| p % 2 == 0)
    }
}

/// All signed partitions of `n`: by increasing `|μ⁻|`, then partition order
/// of `μ⁻`, then of `μ⁺`. The identity class `((), (1ⁿ))` comes first.
pub fn signed_partitions(n: u32) -> Vec<SignedPartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        let negs = partitions(k);
        let poss = partitions(n - k);
        for neg in &negs {
            for pos in &poss {
                let mut neg = neg.parts.clone();
                neg.reverse();
                out.push(SignedPartition {
                    neg,
                    pos: pos.parts.clone(),
                });
            }
        }
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg.is_empty() && self.pos.is_empty() {
            return write!(f, "()");
        }
        for p in &self.neg {
            write!(f, "-{p}")?;
        }
        for p in &self.pos {
            write!(f, "+{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPartition({self})")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for SignedPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_number(tok: &str, what: &'static str, input: &str) -> Result<u32> {
    match tok.parse::<u32>() {
        Ok(v) if v > 0 && tok.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
        _ => Err(Error::Parse {
            what,
            input: input.to_string(),
        }),
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `()` (or the empty string) and `a+b+…` in any order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::empty());
        }
        let s = s.strip_prefix('+').unwrap_or(s);
        let parts = s
            .split('+')
            .map(|tok| parse_number(tok, "partition", s))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl FromStr for SignedPartition {
    type Err = Error;

    /// Accepts `()` and a sequence of `-k` and `+k` tokens; the leading sign
    /// may be omitted for a positive first part.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::default());
        }
        let err = || Error::Parse {
            what: "signed partition",
            input: s.to_string(),
        };
        let mut neg = Vec::new();
        let mut pos = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let negative = match bytes[i] {
                b'-' => {
                    i += 1;
                    true
                }
                b'+' => {
                    i += 1;
                    false
                }
                b'0'..=b'9' if i == 0 => false,
                _ => return Err(err()),
            };
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err());
            }
            let v = parse_number(&s[start..i], "signed partition", s)?;
            if negative {
                neg.push(v);
            } else {
                pos.push(v);
            }
        }
        SignedPartition::new(neg, pos)
    }
}
