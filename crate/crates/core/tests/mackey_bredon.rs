mod common;

use std::sync::Arc;

use common::table;
use eqorient::bredon::{
    bredon_cohomology, by_name as complex_by_name, cochain_complex, smith_normal_form, BoundaryEntry, BoundaryTerm,
    CellSpec, ComplexSpec, GCWComplex, COMPLEX_NAMES,
};
use eqorient::group::SubgroupTable;
use eqorient::mackey::{by_name, tn_formulas, verify_mackey_axiom, COEFFICIENT_NAMES};
use eqorient::{Int, IntMatrix};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const MACKEY_GROUPS: &[&str] = &["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C2xC2xC2"];

#[test]
fn builtin_functors_satisfy_the_axioms() {
    for g in MACKEY_GROUPS {
        let t = table(g);
        for name in COEFFICIENT_NAMES {
            let m = by_name(name, &t).unwrap();
            let v = verify_mackey_axiom(&m);
            assert!(v.is_empty(), "{name} over {g}: {:?}", v.first());
        }
    }
}

#[test]
fn elementary_abelian_tables() {
    for n in 1..=3 {
        assert!(tn_formulas(n).is_ok(), "n = {n}");
    }
}

/// A free circle: one free 0-cell and one free 1-cell with `∂ = f_e − f_g`.
fn free_circle(t: &Arc<SubgroupTable>, g: usize) -> GCWComplex {
    let e = t.group().identity();
    let spec = ComplexSpec {
        cells: vec![vec![CellSpec { isotropy_class: 0 }], vec![CellSpec { isotropy_class: 0 }]],
        boundary: vec![BoundaryEntry {
            from: 1,
            to: 0,
            terms: vec![BoundaryTerm { coeff: 1, conjugator: e }, BoundaryTerm { coeff: -1, conjugator: g }],
        }],
    };
    GCWComplex::new(t.clone(), spec).unwrap()
}

#[test]
fn coboundaries_square_to_zero_in_every_builtin() {
    for g in ["C2", "C4", "S3"] {
        let t = table(g);
        let mut complexes: Vec<GCWComplex> = COMPLEX_NAMES.iter().filter_map(|n| complex_by_name(n, &t).ok()).collect();
        complexes.push(free_circle(&t, t.group().order() - 1));
        for x in &complexes {
            for name in COEFFICIENT_NAMES {
                let m = by_name(name, &t).unwrap();
                let c = cochain_complex(x, &m).unwrap();
                assert!(c.is_complex());
                let h = c.cohomology().unwrap();
                assert!(c.euler_consistent(&h));
            }
        }
    }
}

#[test]
fn free_complexes_have_vanishing_ghost_cohomology() {
    for g in MACKEY_GROUPS {
        let t = table(g);
        let m = by_name("ghost", &t).unwrap();
        for x in 0..t.group().order() {
            assert!(bredon_cohomology(&free_circle(&t, x), &m).unwrap().vanishes(), "{g}");
        }
    }
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
            IntMatrix::from_fn(r, c, |i, j| Int::from(v[i * c + j]))
        })
    })
}

fn det(m: &IntMatrix) -> Int {
    // fraction-free elimination (Bareiss)
    let n = m.rows();
    let mut a = m.clone();
    let mut sign = Int::from(1);
    let mut prev = Int::from(1);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * prev
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_normal_form_is_exact(a in matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert_eq!(det(&s.u).abs(), Int::from(1));
        prop_assert_eq!(det(&s.v).abs(), Int::from(1));
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|x| x.is_positive()));
        prop_assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= f.len() {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
    }
}
