mod common;

use std::sync::Arc;

use common::{cyclic_norm_of_integer, table};
use eqorient::burnside::{BurnsideElement, BurnsideFunctor, UnitGroup};
use eqorient::group::{builtin::named, hom_classes, FiniteGroup, SubgroupTable};
use eqorient::orientation::{
    augmentation_kernel_dim, classifying_pi0, gamma_rho_verdict, norm_minus_one_congruence, odd_order_collapse,
    twofold_sum_verdict, w1_induced_line, Coefficient, InducedLine,
};
use eqorient::reps::{fiber_character, homogeneity_check, is_regular_multiple_pattern, Character, ProductRep, Rep};
use eqorient::{Error, Matrix, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(named(name).unwrap())
}

fn sign(g: &Arc<FiniteGroup>) -> Option<Rep<Rational>> {
    let t = SubgroupTable::new(g.clone()).unwrap();
    let h = t.index_two_subgroups(t.whole()).first().copied()?;
    Some(Rep::sign(g.clone(), t.subgroup(h)).unwrap())
}

fn structure_reps(pi: &Arc<FiniteGroup>) -> Vec<Rep<Rational>> {
    let mut out = vec![Rep::trivial(pi.clone()), Rep::permutation(pi.clone())];
    out.extend(sign(pi));
    out.push(Rep::trivial(pi.clone()).direct_sum(&sign(pi).unwrap_or_else(|| Rep::trivial(pi.clone()))).unwrap());
    out.retain(|w| w.dim() <= 3);
    out
}

#[test]
fn remark_examples() {
    let (c2, s2) = (group("C2"), group("Sigma2"));
    let t = SubgroupTable::new(c2.clone()).unwrap();
    let tau = sign(&s2).unwrap();
    let rho_tau = ProductRep::external(&tau, &Rep::regular(c2.clone()));
    assert!(homogeneity_check(&rho_tau, &t).unwrap().homogeneous);
    let sigma_tau = ProductRep::external(&tau, &sign(&c2).unwrap());
    let report = homogeneity_check(&sigma_tau, &t).unwrap();
    assert!(!report.homogeneous);
    assert_eq!(report.levels[0].coordinate.as_ref().map(|c| c.values.len()), Some(1));
    assert!(report.levels[1].coordinate.is_none());
}

#[test]
fn regular_multiples_are_homogeneous() {
    for g in ["C2", "C3", "C4", "C2xC2", "S3"] {
        for pi in ["Sigma2", "C3", "S3"] {
            let (g, pi) = (group(g), group(pi));
            let t = SubgroupTable::new(g.clone()).unwrap();
            for w in structure_reps(&pi) {
                for n in 1..=2 {
                    let v = ProductRep::external(&w, &Rep::regular(g.clone()).multiple(n));
                    let report = homogeneity_check(&v, &t).unwrap();
                    assert!(report.homogeneous);
                    assert!(is_regular_multiple_pattern(&v).holds);
                    // coordinates restrict along inclusions of representatives
                    for a in &report.levels {
                        for b in &report.levels {
                            if t.contains(a.subgroup, b.subgroup) {
                                let small = t.subgroup(b.subgroup).elements();
                                assert_eq!(
                                    a.coordinate.as_ref().unwrap().restrict(&g, small),
                                    *b.coordinate.as_ref().unwrap()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn fiber_characters_are_conjugation_invariant() {
    for (g, pi) in [("C2", "S3"), ("C4", "S3"), ("C2xC2", "D4")] {
        let (g, pi) = (group(g), group(pi));
        let t = SubgroupTable::new(g.clone()).unwrap();
        let v = ProductRep::external(&Rep::permutation(pi.clone()), &Rep::permutation(g.clone()));
        for h in 0..t.len() {
            for class in hom_classes(&g, t.subgroup(h), &pi) {
                let chars: Vec<Character<Rational>> = class.members.iter().map(|th| fiber_character(&v, th)).collect();
                assert!(chars.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}

fn invertible(n: usize, seed: &[i64]) -> Matrix<Rational> {
    // unit lower times unit upper triangular
    let q = |x: i64| Rational::from_integer(BigInt::from(x));
    let lower = Matrix::from_fn(n, n, |i, j| if i == j { q(1) } else if i > j { q(seed[(i * n + j) % seed.len()]) } else { q(0) });
    let upper = Matrix::from_fn(n, n, |i, j| if i == j { q(1) } else if i < j { q(seed[(j * n + i + 1) % seed.len()]) } else { q(0) });
    &lower * &upper
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn characters_survive_change_of_basis(seed in prop::collection::vec(-3i64..=3, 1..12), which in 0usize..3) {
        let g = group(["C4", "S3", "C2xC2"][which]);
        let rep = Rep::<Rational>::permutation(g.clone()).direct_sum(&Rep::regular(g.clone())).unwrap();
        let p = invertible(rep.dim(), &seed);
        prop_assert_eq!(Character::of(&rep.conjugated_by(&p).unwrap()), Character::of(&rep));
    }
}

#[test]
fn components_of_fixed_points() {
    let d = classifying_pi0(&table("C2"), &group("Sigma2"));
    assert_eq!(d.component_counts(), vec![1, 2]);
    assert!(d.levels()[1].components.iter().all(|c| c.centralizer_order == 2));
    for g in ["C2", "C4", "C2xC2", "S3", "D4"] {
        for pi in ["C1", "Sigma2", "C4", "S3"] {
            let t = table(g);
            let d = classifying_pi0(&t, &group(pi));
            assert_eq!(d.component_counts()[0], 1);
            assert!(d.restrictions_compose());
            // orbit-stabilizer inside every level
            let pi_order = group(pi).order();
            for level in d.levels() {
                for c in &level.components {
                    assert_eq!(c.class_size * c.centralizer_order, pi_order);
                }
            }
        }
    }
}

#[test]
fn induced_line_is_the_norm_of_minus_one() {
    for (g, k) in [("C2", Some(1)), ("C4", Some(2)), ("C8", Some(3)), ("C2xC2", None), ("S3", None), ("D4", None)] {
        let t = table(g);
        let InducedLine::A(w) = w1_induced_line(&t, Coefficient::A).unwrap() else { panic!() };
        let b = BurnsideFunctor::new(t.clone());
        let n = b.norm(&BurnsideElement::integer(b.ring(t.trivial()), -1), t.whole()).unwrap();
        assert_eq!(w, n, "{g}");
        if let Some(k) = k {
            assert_eq!(w.coeffs(), cyclic_norm_of_integer(k, -1).as_slice());
        }
        let InducedLine::Z(z) = w1_induced_line(&t, Coefficient::Z).unwrap() else { panic!() };
        assert_eq!(z.bit(), t.group().order() % 2 == 1);
    }
}

#[test]
fn verdicts() {
    for g in ["C2", "C4", "C2xC2", "S3", "D4", "Q8"] {
        let t = table(g);
        let v = gamma_rho_verdict(&t).unwrap();
        assert_eq!((v.hz_orientable, v.ha_orientable), (true, false), "{g}");
        assert!(norm_minus_one_congruence(&t).unwrap());
        assert!(augmentation_kernel_dim(&t).unwrap() > 0);
        assert_eq!(odd_order_collapse(&t), Err(Error::EvenOrderInput));
    }
    for g in ["C1", "C3", "C5", "C7"] {
        let t = table(g);
        let v = gamma_rho_verdict(&t).unwrap();
        assert_eq!((v.hz_orientable, v.ha_orientable), (false, false), "{g}");
        assert!(odd_order_collapse(&t).unwrap());
        assert_eq!(augmentation_kernel_dim(&t).unwrap(), 0);
    }
}

#[test]
fn twofold_sums_of_every_unit() {
    for g in ["C2", "C4", "C2xC2", "S3", "D4", "C2xC2xC2"] {
        let b = BurnsideFunctor::new(table(g));
        let units = UnitGroup::new(b.top()).unwrap();
        for u in units.units() {
            assert!(twofold_sum_verdict(u).unwrap());
        }
        let not_unit = BurnsideElement::integer(b.top(), 2);
        assert_eq!(twofold_sum_verdict(&not_unit), Err(Error::NotAUnit));
    }
}
