//! Library results against brute-force computations on small groups.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use coxeter_ls::centralizer::{centralizer_generators, w_mu, Centralizer};
use coxeter_ls::character::{chi_for_class, phi_b, phi_d, phi_for_class};
use coxeter_ls::class_function::induce_from_centralizer;
use coxeter_ls::classes::{centralizer_order, hyperoctahedral_centralizer_order};
use coxeter_ls::lattice::Lattice;
use coxeter_ls::partition::signed_partitions;
use coxeter_ls::shape::{parabolic_generators, shapes};
use coxeter_ls::{Budget, ClassTable, Cyclotomic, Group, SignedPermutation, Verifier};
use num_rational::Ratio;

fn small_groups() -> Vec<Group> {
    let mut out = Vec::new();
    for r in 1..=5 {
        out.push(Group::a(r).unwrap());
    }
    for r in 1..=5 {
        out.push(Group::b(r).unwrap());
    }
    for r in 4..=5 {
        out.push(Group::d(r).unwrap());
    }
    out.retain(|g| g.order() <= 5000);
    out
}

fn table(g: Group) -> Arc<ClassTable> {
    Arc::new(ClassTable::new(g, &Budget::DESK).unwrap())
}

#[test]
fn class_table_matches_orbits() {
    for g in small_groups() {
        let elements = common::elements(&g);
        assert_eq!(elements.len() as u64, g.order(), "{g}");
        let t = table(g);
        let orbits = common::conjugacy_classes(&elements);
        assert_eq!(orbits.len(), t.len(), "{g}");
        let mut seen = BTreeSet::new();
        for orbit in &orbits {
            let c = t.class_of(orbit.first().unwrap()).unwrap();
            assert!(seen.insert(c), "{g}: two orbits share class {c}");
            assert_eq!(t.classes()[c].size, orbit.len() as u64, "{g}");
            assert!(orbit.iter().all(|x| t.class_of(x).unwrap() == c));
            assert!(orbit.contains(&t.classes()[c].representative));
        }
    }
}

#[test]
fn centralizers_match_brute_force() {
    for n in 1..=5usize {
        let g = Group::b(n).unwrap();
        let elements = common::elements(&g);
        for mu in signed_partitions(n as u32) {
            let w = w_mu(n, &mu);
            let brute = common::centralizer(&elements, &w);
            let c = Centralizer::new(n, &mu).unwrap();
            assert_eq!(c.order(), brute.len() as u64, "{mu}");
            assert_eq!(hyperoctahedral_centralizer_order(&mu), brute.len() as u64);
            let gens = centralizer_generators(n, &mu).unwrap().all();
            assert_eq!(common::closure(n, &gens).len(), brute.len(), "{mu}");
            let listed: BTreeSet<SignedPermutation> = c.elements().collect();
            let brute: BTreeSet<SignedPermutation> = brute.into_iter().collect();
            assert_eq!(listed, brute, "{mu}");
        }
    }
    for g in [
        Group::a(4).unwrap(),
        Group::d(4).unwrap(),
        Group::d(5).unwrap(),
    ] {
        let elements = common::elements(&g);
        for class in table(g).classes() {
            let brute = common::centralizer(&elements, &class.representative);
            assert_eq!(
                centralizer_order(&g, &class.label),
                brute.len() as u64,
                "{g} {}",
                class.label
            );
        }
    }
}

#[test]
fn induction_matches_direct_scan() {
    for g in small_groups() {
        let elements = common::elements(&g);
        let t = table(g);
        for class in t.classes() {
            for chi in [
                phi_for_class(&g, &class.label).unwrap(),
                chi_for_class(&g, &class.label).unwrap(),
            ] {
                let fused = induce_from_centralizer(&t, &chi, &Budget::DESK).unwrap();
                for (k, target) in t.classes().iter().enumerate() {
                    let direct = common::direct_induction(&elements, &chi, &target.representative);
                    assert_eq!(
                        fused.value(k),
                        &direct,
                        "{g}: Ind from {} at {}",
                        class.label,
                        target.label
                    );
                }
            }
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    for g in [
        Group::b(3).unwrap(),
        Group::d(4).unwrap(),
        Group::a(4).unwrap(),
    ] {
        let elements = common::elements(&g);
        let t = table(g);
        for class in t.classes() {
            let chi = chi_for_class(&g, &class.label).unwrap();
            let induced = induce_from_centralizer(&t, &chi, &Budget::DESK).unwrap();
            let h = common::centralizer(&elements, chi.base());
            for sign in [false, true] {
                let psi = if sign {
                    coxeter_ls::class_function::ClassFunction::sign(t.clone())
                } else {
                    coxeter_ls::class_function::ClassFunction::trivial(t.clone())
                };
                let mut restricted = Cyclotomic::zero();
                for x in &h {
                    let v = Cyclotomic::root(chi.evaluate(x).unwrap());
                    let s = if sign {
                        g.sign_character(x).unwrap()
                    } else {
                        1
                    };
                    restricted = &restricted + &(&v * &Cyclotomic::from_integer(s as i64));
                }
                let restricted = restricted.scale(Ratio::new(1, h.len() as i64));
                assert_eq!(
                    induced.inner_product(&psi).unwrap(),
                    restricted,
                    "{g} {}",
                    class.label
                );
            }
        }
    }
}

#[test]
fn characters_are_integral() {
    for g in [
        Group::b(4).unwrap(),
        Group::d(5).unwrap(),
        Group::a(5).unwrap(),
    ] {
        let v = Verifier::new(g, Budget::DESK).unwrap();
        for f in v.graded_os_character().unwrap() {
            assert!(f.to_integers().is_some(), "{g}");
        }
        let triv = coxeter_ls::class_function::ClassFunction::trivial(v.table().clone());
        for class in v.table().classes() {
            let f = v.induced_chi(&class.label).unwrap();
            let m = f.inner_product(&triv).unwrap().to_integer();
            assert!(matches!(m, Some(k) if k >= 0), "{g} {}", class.label);
        }
    }
}

#[test]
fn poincare_polynomials_match_point_counts() {
    let mut groups = Vec::new();
    for r in 1..=5 {
        groups.push(Group::a(r).unwrap());
        groups.push(Group::b(r).unwrap());
    }
    groups.extend([Group::d(4).unwrap(), Group::d(5).unwrap()]);
    for g in groups {
        let lattice = Lattice::build(&g, &Budget::DESK).unwrap();
        let p = lattice
            .poincare_polynomial(&SignedPermutation::identity(g.degree()))
            .unwrap();
        assert_eq!(
            p.padded(g.rank() + 1),
            common::point_count_poincare(&g),
            "{g}"
        );
    }
}

#[test]
fn interpolation_recovers_known_polynomials() {
    let xs = common::PRIMES;
    // (q - 1)(q - 3) = q² - 4q + 3
    let ys: Vec<i64> = xs[..3].iter().map(|q| (q - 1) * (q - 3)).collect();
    assert_eq!(common::interpolate(&xs[..3], &ys), vec![3, -4, 1]);
    assert_eq!(
        common::poincare_from_characteristic(&[3, -4, 1]),
        vec![1, 4, 3]
    );
    // B_2 over F_5: x, y ≠ 0 and x ≠ ±y leaves 4·2 points
    assert_eq!(common::complement_points(&Group::b(2).unwrap(), 5), 8);
}

#[test]
fn lattice_order_is_subspace_containment() {
    for g in [
        Group::b(3).unwrap(),
        Group::d(4).unwrap(),
        Group::a(4).unwrap(),
    ] {
        let lattice = Lattice::build(&g, &Budget::DESK).unwrap();
        let flats = lattice.flats();
        let normals = lattice.hyperplane_normals();
        for f in flats {
            for (i, a) in normals.iter().enumerate() {
                assert_eq!(
                    f.incidence >> i & 1 == 1,
                    f.subspace.is_orthogonal_to(a),
                    "{g}"
                );
            }
        }
        for x in flats {
            for y in flats {
                let by_bits = x.incidence & y.incidence == y.incidence;
                assert_eq!(by_bits, x.subspace.is_subspace_of(&y.subspace), "{g}");
            }
        }
        let distinct: BTreeSet<_> = flats.iter().map(|f| f.incidence).collect();
        assert_eq!(distinct.len(), flats.len());
    }
}

/// Canonical form of a subgroup up to conjugacy: the least sorted conjugate.
fn conjugacy_key(
    elements: &[SignedPermutation],
    subgroup: &[SignedPermutation],
) -> Vec<SignedPermutation> {
    elements
        .iter()
        .map(|x| {
            let mut c: Vec<_> = subgroup.iter().map(|h| h.conjugated_by(x)).collect();
            c.sort();
            c
        })
        .min()
        .unwrap()
}

#[test]
fn shapes_are_parabolic_conjugacy_classes() {
    for g in [
        Group::d(4).unwrap(),
        Group::d(5).unwrap(),
        Group::b(4).unwrap(),
        Group::a(4).unwrap(),
    ] {
        let n = g.degree();
        let elements = common::elements(&g);
        let simple = g.simple_reflections();
        let mut standard: HashMap<Vec<SignedPermutation>, usize> = HashMap::new();
        for mask in 0u32..1 << simple.len() {
            let gens: Vec<_> = (0..simple.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| simple[i].clone())
                .collect();
            let sub = common::closure(n, &gens);
            *standard.entry(conjugacy_key(&elements, &sub)).or_default() += 1;
        }
        let all = shapes(&g);
        assert_eq!(all.len(), standard.len(), "{g}");
        let mut keys = BTreeSet::new();
        for s in &all {
            let sub = common::closure(n, &parabolic_generators(&g, s).unwrap());
            let key = conjugacy_key(&elements, &sub);
            assert!(standard.contains_key(&key), "{g} {s} is not parabolic");
            assert!(keys.insert(key), "{g}: {s} repeats a class");
        }
    }
}

#[test]
fn phi_d_differs_from_restricted_phi_b() {
    // search for a signed partition where the restriction of φ^B to the
    // even part of the centralizer is not φ^D
    let mut witnesses = Vec::new();
    for n in 4..=5usize {
        for mu in signed_partitions(n as u32) {
            if mu.neg().len() % 2 != 0 {
                continue;
            }
            let b = phi_b(n, &mu).unwrap();
            let d = phi_d(n, &mu).unwrap();
            let differ = d
                .domain_elements()
                .find(|(g, v)| b.evaluate(g).unwrap() != *v);
            if let Some((g, v)) = differ {
                assert!(!mu.neg().is_empty(), "pure positive {mu} should agree");
                let bv = b.evaluate(&g).unwrap();
                witnesses.push((n, mu.to_string(), g, v, bv));
            }
        }
    }
    let (n, mu, g, d, b) = witnesses.first().expect("a witness exists").clone();
    assert_eq!(n, 4, "first witness {mu} at {g}");
    assert_ne!(d, b);
    let (_, _, g, d, b) = witnesses
        .iter()
        .find(|w| w.0 == 4 && w.1 == "-1-1+1+1")
        .expect("-1-1+1+1 is a witness");
    assert_eq!((d.as_sign(), b.as_sign()), (Some(1), Some(-1)), "at {g}");
}
