//! Brute-force reference implementations shared by the integration tests.
//! None of these go through the centralizer coordinates, the fusion tables
//! or the lattice code they are compared against.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use coxeter_ls::character::LinearCharacterSpec;
use coxeter_ls::cyclotomic::Cyclotomic;
use coxeter_ls::{Family, Group, RootOfUnity, SignedPermutation};
use num_rational::Ratio;

/// Closure of `gens` under multiplication, by breadth-first search.
pub fn closure(n: usize, gens: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let id = SignedPermutation::identity(n);
    let mut seen: HashSet<SignedPermutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = &g * s;
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out
}

pub fn elements(group: &Group) -> Vec<SignedPermutation> {
    closure(group.degree(), &group.simple_reflections())
}

pub fn centralizer(
    elements: &[SignedPermutation],
    w: &SignedPermutation,
) -> Vec<SignedPermutation> {
    elements
        .iter()
        .filter(|x| x.commutes_with(w))
        .cloned()
        .collect()
}

/// Conjugacy classes as sets, by orbit computation.
pub fn conjugacy_classes(elements: &[SignedPermutation]) -> Vec<BTreeSet<SignedPermutation>> {
    let mut done: HashSet<SignedPermutation> = HashSet::new();
    let mut out = Vec::new();
    for g in elements {
        if done.contains(g) {
            continue;
        }
        let orbit: BTreeSet<_> = elements.iter().map(|x| g.conjugated_by(x)).collect();
        done.extend(orbit.iter().cloned());
        out.push(orbit);
    }
    out
}

/// `Ind_H^G χ (g) = |H|⁻¹ Σ_{x ∈ G} χ°(x⁻¹ g x)`, with `H` the centralizer of
/// `chi.base()` in `G` and `χ°` zero off `H`.
pub fn direct_induction(
    elements: &[SignedPermutation],
    chi: &LinearCharacterSpec,
    g: &SignedPermutation,
) -> Cyclotomic {
    let base = chi.base();
    let h_order = elements.iter().filter(|x| x.commutes_with(base)).count() as i64;
    let order = chi.value_order();
    let mut counts = vec![0i64; order as usize];
    for x in elements {
        let y = g.conjugated_by(&x.inverse());
        if !y.commutes_with(base) {
            continue;
        }
        let v = chi.evaluate(&y).expect("centralizer element");
        counts[v.exponent_in(order) as usize] += 1;
    }
    let mut sum = Cyclotomic::zero();
    for (e, &c) in counts.iter().enumerate() {
        if c != 0 {
            let term =
                &Cyclotomic::from_integer(c) * &Cyclotomic::root(RootOfUnity::new(e as i64, order));
            sum = &sum + &term;
        }
    }
    sum.scale(Ratio::new(1, h_order))
}

/// Points of `F_p^n` off every hyperplane `⟨a, x⟩ = 0`, by backtracking over
/// coordinates. In type A the first coordinate is fixed to 0, which removes
/// the line `x_1 = … = x_n` and leaves the essential arrangement.
pub fn complement_points(group: &Group, p: i64) -> i64 {
    let n = group.degree();
    let normals = group.hyperplane_normals();
    // normals grouped by their last nonzero coordinate
    let mut by_last: Vec<Vec<Vec<i64>>> = vec![Vec::new(); n];
    for a in &normals {
        let last = a.iter().rposition(|&c| c != 0).expect("nonzero normal");
        by_last[last].push(a.iter().map(|&c| c as i64).collect());
    }
    let mut x = vec![0i64; n];
    let first: Vec<i64> = if group.family() == Family::A {
        vec![0]
    } else {
        (0..p).collect()
    };
    let mut count = 0;
    for v in first {
        x[0] = v;
        if by_last[0].iter().all(|a| (a[0] * v).rem_euclid(p) != 0) {
            count += extend(&by_last, &mut x, 1, p);
        }
    }
    count
}

fn extend(by_last: &[Vec<Vec<i64>>], x: &mut [i64], k: usize, p: i64) -> i64 {
    if k == x.len() {
        return 1;
    }
    let mut count = 0;
    for v in 0..p {
        x[k] = v;
        let ok = by_last[k].iter().all(|a| {
            let s: i64 = a[..=k].iter().zip(&x[..=k]).map(|(c, y)| c * y).sum();
            s.rem_euclid(p) != 0
        });
        if ok {
            count += extend(by_last, x, k + 1, p);
        }
    }
    count
}

/// Lagrange interpolation of integer data known to come from an integer
/// polynomial of degree `< xs.len()`, coefficients ascending.
pub fn interpolate(xs: &[i64], ys: &[i64]) -> Vec<i64> {
    let k = xs.len();
    let mut coeffs = vec![Ratio::from_integer(0i128); k];
    for i in 0..k {
        // basis polynomial ∏_{j≠i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![Ratio::from_integer(1i128)];
        let mut denom = 1i128;
        for j in 0..k {
            if j == i {
                continue;
            }
            let mut next = vec![Ratio::from_integer(0i128); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += *c;
                next[d] -= *c * xs[j] as i128;
            }
            basis = next;
            denom *= (xs[i] - xs[j]) as i128;
        }
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += *c * ys[i] as i128 / denom;
        }
    }
    coeffs
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral interpolant");
            *c.numer() as i64
        })
        .collect()
}

/// `P(t) = (-t)^r χ(-1/t)` from the characteristic polynomial `χ`
/// (ascending coefficients, degree `r`).
pub fn poincare_from_characteristic(chi: &[i64]) -> Vec<i64> {
    let r = chi.len() - 1;
    (0..=r)
        .map(|k| {
            let c = chi[r - k];
            // (-t)^r (-1/t)^{r-k} = (-1)^k t^k
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

pub const PRIMES: [i64; 7] = [3, 5, 7, 11, 13, 17, 19];

/// Poincaré polynomial of the arrangement from finite-field point counts.
pub fn point_count_poincare(group: &Group) -> Vec<i64> {
    let r = group.rank();
    let xs = &PRIMES[..=r];
    let ys: Vec<i64> = xs.iter().map(|&p| complement_points(group, p)).collect();
    poincare_from_characteristic(&interpolate(xs, &ys))
}

/// Small deterministic generator for sampling tests.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}
