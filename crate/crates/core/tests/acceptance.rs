//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Run with `cargo test -p coxeter-ls --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use coxeter_ls::centralizer::{w_mu, Centralizer};
use coxeter_ls::character::{chi_for_class, phi_b, phi_for_class, psi_mu, LinearCharacterSpec};
use coxeter_ls::class_function::induce_from_centralizer;
use coxeter_ls::classes::{centralizer_order, class_labels, hyperoctahedral_centralizer_order};
use coxeter_ls::lattice::Lattice;
use coxeter_ls::partition::signed_partitions;
use coxeter_ls::polynomial::Polynomial;
use coxeter_ls::shape::shapes;
use coxeter_ls::{
    Budget, ClassTable, Group, SignedPartition, SignedPermutation, VerificationReport, Verifier,
};

const REGULAR_LIMIT: Duration = Duration::from_secs(10 * 60);
const OS_LIMIT: Duration = Duration::from_secs(15 * 60);
const STRETCH_LIMIT: Duration = Duration::from_secs(2 * 60 * 60);
/// Random pairs per character for n = 5, 6.
const RANDOM_PAIRS: usize = 10_000;
/// Largest group order for the direct-scan induction oracle.
const SCAN_ORDER: u64 = 5000;
/// Element budget for the rank-7 stretch run: `|W(B_7)| = 645120`.
const STRETCH_ELEMENTS: u64 = 1_000_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn a(r: usize) -> Group {
    Group::a(r).unwrap()
}
fn b(r: usize) -> Group {
    Group::b(r).unwrap()
}
fn d(r: usize) -> Group {
    Group::d(r).unwrap()
}

fn require(report: VerificationReport) -> Result<(), String> {
    if report.passed() {
        Ok(())
    } else {
        Err(report.to_string())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    if t <= limit {
        Ok(format!(
            "{:.1} s, limit {} s",
            t.as_secs_f64(),
            limit.as_secs()
        ))
    } else {
        Err(format!(
            "took {:.1} s, limit {} s",
            t.as_secs_f64(),
            limit.as_secs()
        ))
    }
}

fn regular_small() -> Outcome {
    let start = Instant::now();
    let groups = (1..=5).map(a).chain((2..=6).map(b)).chain((4..=6).map(d));
    for g in groups {
        require(
            Verifier::new(g, Budget::DESK)
                .map_err(|e| e.to_string())?
                .verify_regular()
                .map_err(|e| e.to_string())?,
        )?;
    }
    within(start, REGULAR_LIMIT)
}

fn os_and_graded() -> Outcome {
    let start = Instant::now();
    let groups = (1..=4).map(a).chain((2..=5).map(b)).chain([d(4), d(5)]);
    for g in groups {
        let v = Verifier::new(g, Budget::DESK).map_err(|e| e.to_string())?;
        require(v.verify_os().map_err(|e| e.to_string())?)?;
        require(v.verify_graded().map_err(|e| e.to_string())?)?;
    }
    within(start, OS_LIMIT)
}

fn every_shape() -> Outcome {
    let mut count = 0;
    for g in [b(4), b(5), d(4), d(5)] {
        let v = Verifier::new(g, Budget::DESK).map_err(|e| e.to_string())?;
        for s in shapes(&g) {
            require(v.verify_shape(&s).map_err(|e| e.to_string())?)?;
            count += 1;
        }
    }
    Ok(format!("{count} shapes"))
}

/// Exponents written out per family, independent of the library's list.
fn exponents(g: &Group) -> Vec<i64> {
    let n = g.degree() as i64;
    match g.family() {
        coxeter_ls::Family::A => (1..n).collect(),
        coxeter_ls::Family::B => (1..=n).map(|i| 2 * i - 1).collect(),
        coxeter_ls::Family::D => (1..n).map(|i| 2 * i - 1).chain([n - 1]).collect(),
    }
}

fn poincare_identities() -> Outcome {
    let groups: Vec<Group> = (1..=6)
        .map(a)
        .chain((2..=6).map(b))
        .chain((4..=6).map(d))
        .collect();
    for g in &groups {
        let lattice = Lattice::build(g, &Budget::DESK).map_err(|e| e.to_string())?;
        let p = lattice
            .poincare_polynomial(&SignedPermutation::identity(g.degree()))
            .map_err(|e| e.to_string())?
            .padded(g.rank() + 1);
        let product = Polynomial::from_exponents(&exponents(g)).padded(g.rank() + 1);
        let counted = common::point_count_poincare(g);
        if p != product || p != counted {
            return Err(format!(
                "{g}: lattice {p:?}, exponents {product:?}, point count {counted:?}"
            ));
        }
    }
    Ok(format!("{} groups, exact", groups.len()))
}

fn b2_moebius() -> Outcome {
    let lattice = Lattice::build(&b(2), &Budget::DESK).map_err(|e| e.to_string())?;
    let all: Vec<usize> = (0..lattice.len()).collect();
    let full = lattice.moebius(&all).map_err(|e| e.to_string())?;
    let t = SignedPermutation::sign_change(2, 1);
    let sub = lattice.fixed_subposet(&t).map_err(|e| e.to_string())?;
    let fixed = lattice.moebius(&sub).map_err(|e| e.to_string())?;
    if full != [1, -1, -1, -1, -1, 3] || fixed != [1, -1, -1, 1] {
        return Err(format!("full {full:?}, w = t {fixed:?}"));
    }
    Ok("full -1/-1/-1/-1/3, w = t -1/-1/1".into())
}

fn check_pair(
    spec: &LinearCharacterSpec,
    g: &SignedPermutation,
    h: &SignedPermutation,
) -> Result<(), String> {
    let lhs = spec.evaluate(&(g * h)).map_err(|e| e.to_string())?;
    let rhs = spec.evaluate(g).map_err(|e| e.to_string())?
        * spec.evaluate(h).map_err(|e| e.to_string())?;
    if lhs != rhs {
        return Err(format!("{} at {g}, {h}", spec.base()));
    }
    Ok(())
}

fn specs(n: usize, mu: &SignedPartition) -> Vec<LinearCharacterSpec> {
    let mut out = vec![phi_b(n, mu).unwrap()];
    if mu.neg().len().is_multiple_of(2) {
        out.push(psi_mu(n, mu).unwrap());
    }
    out
}

fn homomorphisms() -> Outcome {
    let mut pairs = 0u64;
    for n in 1..=4usize {
        for mu in signed_partitions(n as u32) {
            for spec in specs(n, &mu) {
                let elements: Vec<_> = spec.centralizer().elements().collect();
                for g in &elements {
                    for h in &elements {
                        check_pair(&spec, g, h)?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    let mut rng = common::XorShift(0x9e37_79b9_7f4a_7c15);
    for n in 5..=6usize {
        for mu in signed_partitions(n as u32) {
            for spec in specs(n, &mu) {
                let order = spec.centralizer().order();
                for _ in 0..RANDOM_PAIRS {
                    let (g, _) = spec.centralizer().element(rng.next() % order);
                    let (h, _) = spec.centralizer().element(rng.next() % order);
                    check_pair(&spec, &g, &h)?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 failures"))
}

fn induction_oracle() -> Outcome {
    let groups: Vec<Group> = (1..=6)
        .map(a)
        .chain((1..=6).map(b))
        .chain((4..=6).map(d))
        .filter(|g| g.order() <= SCAN_ORDER)
        .collect();
    let mut compared = 0;
    for g in &groups {
        let elements = common::elements(g);
        let table = Arc::new(ClassTable::new(*g, &Budget::DESK).map_err(|e| e.to_string())?);
        for class in table.classes() {
            for chi in [
                phi_for_class(g, &class.label).map_err(|e| e.to_string())?,
                chi_for_class(g, &class.label).map_err(|e| e.to_string())?,
            ] {
                let fused = induce_from_centralizer(&table, &chi, &Budget::DESK)
                    .map_err(|e| e.to_string())?;
                for (k, target) in table.classes().iter().enumerate() {
                    let direct = common::direct_induction(&elements, &chi, &target.representative);
                    if fused.value(k) != &direct {
                        return Err(format!("{g}: from {} at {}", class.label, target.label));
                    }
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{} groups, {compared} values", groups.len()))
}

fn factorial(m: u64) -> u64 {
    (1..=m).product()
}

/// `∏_i (2i)^{a_i} a_i! · ∏_j j^{b_j} 2^{b_j} b_j!`.
fn product_formula(mu: &SignedPartition) -> u64 {
    let mut neg: BTreeMap<u32, u32> = BTreeMap::new();
    let mut pos: BTreeMap<u32, u32> = BTreeMap::new();
    for &i in mu.neg() {
        *neg.entry(i).or_default() += 1;
    }
    for &j in mu.pos() {
        *pos.entry(j).or_default() += 1;
    }
    let mut order = 1;
    for (i, m) in neg {
        order *= (2 * i as u64).pow(m) * factorial(m as u64);
    }
    for (j, m) in pos {
        order *= (j as u64).pow(m) * 2u64.pow(m) * factorial(m as u64);
    }
    order
}

fn centralizer_orders() -> Outcome {
    let mut checked = 0;
    for n in 1..=8usize {
        let bn = b(n);
        let elements = (n <= 5).then(|| common::elements(&bn));
        let mut class_sum = 0;
        for mu in signed_partitions(n as u32) {
            let expected = product_formula(&mu);
            let c = Centralizer::new(n, &mu).map_err(|e| e.to_string())?;
            if c.order() != expected || hyperoctahedral_centralizer_order(&mu) != expected {
                return Err(format!("{mu}: {} vs {expected}", c.order()));
            }
            if let Some(elements) = &elements {
                let w = w_mu(n, &mu);
                let brute = elements.iter().filter(|x| x.commutes_with(&w)).count() as u64;
                if brute != expected {
                    return Err(format!("{mu}: enumerated {brute} vs {expected}"));
                }
            }
            class_sum += bn.order() / expected;
            checked += 1;
        }
        // class equation for B_n, and for D_n via the library's orders
        if class_sum != bn.order() {
            return Err(format!("B{n}: class sizes sum to {class_sum}"));
        }
        if n >= 4 {
            let dn = d(n);
            let sum: u64 = class_labels(&dn)
                .iter()
                .map(|l| dn.order() / centralizer_order(&dn, l))
                .sum();
            if sum != dn.order() {
                return Err(format!("D{n}: class sizes sum to {sum}"));
            }
        }
    }
    Ok(format!(
        "{checked} signed partitions, n <= 8; enumerated n <= 5"
    ))
}

fn stretch() -> Outcome {
    let start = Instant::now();
    let budget = Budget::DESK.with_elements(STRETCH_ELEMENTS);
    for g in [b(7), d(7)] {
        require(
            Verifier::new(g, budget)
                .map_err(|e| e.to_string())?
                .verify_regular()
                .map_err(|e| e.to_string())?,
        )?;
    }
    within(start, STRETCH_LIMIT).map(|s| format!("B7, D7 at {STRETCH_ELEMENTS} elements, {s}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("regular character, A1-A5 B2-B6 D4-D6", regular_small),
        ("OS and graded OS, A1-A4 B2-B5 D4 D5", os_and_graded),
        ("every shape of B4 B5 D4 D5", every_shape),
        (
            "P_1 = prod(1 + m_i t) = point count, rank <= 6",
            poincare_identities,
        ),
        ("B2 Moebius values", b2_moebius),
        ("phi^B and psi are homomorphisms", homomorphisms),
        (
            "fusion induction = direct scan, |G| <= 5000",
            induction_oracle,
        ),
        ("centralizer orders, n <= 8", centralizer_orders),
        ("stretch: regular character of B7 and D7", stretch),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("criterion {}", i + 1);
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| id.contains(f.as_str()) || name.contains(f.as_str()))
        {
            continue;
        }
        match run() {
            Ok(detail) => println!("{id} [{name}]: pass ({detail})"),
            Err(why) => {
                println!("{id} [{name}]: FAIL ({why})");
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
