mod common;

use std::sync::Arc;

use common::*;
use eqorient::burnside::{BurnsideElement, BurnsideFunctor, BurnsideRing, UnitGroup};
use eqorient::Int;
use num_traits::{One, Signed};
use proptest::prelude::*;

const GROUPS: &[&str] = &["C1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C2xC2xC2"];

fn top(name: &str) -> Arc<BurnsideRing> {
    BurnsideFunctor::new(table(name)).top().clone()
}

#[test]
fn marks_match_fixed_point_counts() {
    for name in GROUPS {
        let ring = top(name);
        let counted = marks_by_counting(&ring);
        for (i, row) in counted.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                assert_eq!(ring.marks().mark(j, i), &Int::from(m), "{name} ({i}, {j})");
            }
        }
    }
}

#[test]
fn multiplication_matches_double_cosets() {
    for name in ["C4", "C2xC2", "S3", "D4", "Q8", "S4"] {
        let ring = top(name);
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let lib = &BurnsideElement::basis(&ring, i).unwrap() * &BurnsideElement::basis(&ring, j).unwrap();
                assert_eq!(lib, double_coset_product(&ring, i, j), "{name} {i}·{j}");
            }
        }
    }
}

#[test]
fn norm_matches_coinduced_sets() {
    for name in ["C2", "C4", "C2xC2", "S3", "D4", "Q8"] {
        let t = table(name);
        let b = BurnsideFunctor::new(t.clone());
        for h in 0..t.len() {
            let ring = b.ring(h);
            for c in 0..ring.rank() {
                let mut mult = vec![0; ring.rank()];
                mult[c] = 1;
                let x = BurnsideElement::basis(ring, c).unwrap();
                let lib = b.norm(&x, t.whole()).unwrap();
                assert_eq!(lib, coinduced_norm(b.top(), ring, &hset(ring, &mult)), "{name} H{h} class {c}");
            }
            // a non-orbit H-set: two points plus the free orbit
            let mut mult = vec![0; ring.rank()];
            mult[0] += 1;
            *mult.last_mut().unwrap() += 2;
            let x = &BurnsideElement::basis(ring, 0).unwrap() + &BurnsideElement::integer(ring, 2);
            assert_eq!(b.norm(&x, t.whole()).unwrap(), coinduced_norm(b.top(), ring, &hset(ring, &mult)));
        }
    }
}

#[test]
fn unit_counts_match_mark_search() {
    for name in GROUPS.iter().chain(&["S4"]) {
        let ring = top(name);
        let units = UnitGroup::new(&ring).unwrap();
        assert_eq!(units.order(), unit_count(&ring), "{name}");
    }
}

#[test]
fn matsuda_count_for_abelian_groups() {
    for name in ["C2", "C3", "C4", "C5", "C8", "C2xC2", "C2xC2xC2"] {
        let units = UnitGroup::new(&top(name)).unwrap();
        assert_eq!(units.dim(), units.matsuda_dim(), "{name}");
    }
}

#[test]
fn cyclic_norm_of_integers() {
    for (name, k) in [("C2", 1), ("C4", 2), ("C8", 3)] {
        let t = table(name);
        let b = BurnsideFunctor::new(t.clone());
        for l in -3..=3 {
            let n = b.norm(&BurnsideElement::integer(b.ring(t.trivial()), l), t.whole()).unwrap();
            assert_eq!(n.coeffs(), cyclic_norm_of_integer(k, l).as_slice(), "{name} l = {l}");
        }
    }
}

fn element(ring: &Arc<BurnsideRing>, coeffs: &[i64]) -> BurnsideElement {
    BurnsideElement::from_coeffs(ring, coeffs.iter().take(ring.rank()).map(|&c| Int::from(c)).collect()).unwrap()
}

fn group_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["C2", "C4", "C2xC2", "S3", "D4"])
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(name in group_name(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let ring = top(name);
        let (x, y, z) = (element(&ring, &a), element(&ring, &b), element(&ring, &c));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        let one = BurnsideElement::one(&ring);
        prop_assert_eq!(&x * &one, x.clone());
        let marks: Vec<Int> = x.mark_vector().iter().zip(y.mark_vector()).map(|(p, q)| p * q).collect();
        prop_assert_eq!(BurnsideElement::from_marks(&ring, &marks).unwrap(), &x * &y);
    }

    #[test]
    fn restriction_transfer_and_norm(name in group_name(), a in coeffs(), b in coeffs(), pick in 0usize..64) {
        let t = table(name);
        let f = BurnsideFunctor::new(t.clone());
        let k = pick % t.len();
        let (x, y) = (element(f.top(), &a), element(f.top(), &b));
        let (rx, ry) = (f.restrict(&x, k).unwrap(), f.restrict(&y, k).unwrap());
        // restriction is a ring map
        prop_assert_eq!(f.restrict(&(&x * &y), k).unwrap(), &rx * &ry);
        prop_assert_eq!(f.restrict(&(&x + &y), k).unwrap(), &rx + &ry);
        // Frobenius reciprocity
        let z = element(f.ring(k), &a);
        prop_assert_eq!(f.transfer(&(&z * &ry), t.whole()).unwrap(), &f.transfer(&z, t.whole()).unwrap() * &y);
        // the norm is multiplicative and sends 1 to 1
        let w = element(f.ring(k), &b);
        prop_assert_eq!(
            f.norm(&(&z * &w), t.whole()).unwrap(),
            &f.norm(&z, t.whole()).unwrap() * &f.norm(&w, t.whole()).unwrap()
        );
        prop_assert!(f.norm(&BurnsideElement::one(f.ring(k)), t.whole()).unwrap().is_one());
        // conjugation by any element fixes the top level
        let g = pick % t.group().order();
        prop_assert_eq!(f.conjugate(&x, g).unwrap(), x);
    }

    #[test]
    fn units_square_to_one_and_coordinates_round_trip(name in group_name(), pick in 0usize..1024) {
        let units = UnitGroup::new(&top(name)).unwrap();
        let u = &units.units()[pick % units.order()];
        prop_assert!((u * u).is_one());
        let c = units.coordinates(u).unwrap();
        prop_assert_eq!(&units.from_coordinates(&c), u);
        prop_assert!(u.augmentation().abs() == Int::one());
    }
}
