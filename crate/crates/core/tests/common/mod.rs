//! Brute-force oracles shared by the integration tests and the acceptance
//! harness. They use the library only for groups and subgroup lists and
//! recompute everything else from the multiplication table.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use eqorient::burnside::{BurnsideElement, BurnsideRing};
use eqorient::group::{builtin::named, FiniteGroup, SubgroupTable};
use eqorient::Int;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn table(name: &str) -> Arc<SubgroupTable> {
    Arc::new(SubgroupTable::new(Arc::new(named(name).unwrap())).unwrap())
}

fn set(xs: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    xs.into_iter().collect()
}

fn conj_set(g: &FiniteGroup, x: usize, s: &BTreeSet<usize>) -> BTreeSet<usize> {
    set(s.iter().map(|&y| g.conjugate(x, y)))
}

/// Index of the `G`-conjugacy class of the subgroup `s`, among the class
/// representatives of the top-level table of marks.
pub fn class_of(ring: &BurnsideRing, s: &BTreeSet<usize>) -> usize {
    let table = ring.table();
    let g = table.group();
    ring.marks()
        .classes()
        .iter()
        .position(|&r| {
            let rep = set(table.subgroup(r).elements().iter().copied());
            (0..g.order()).any(|x| conj_set(g, x, s) == rep)
        })
        .expect("every subgroup is conjugate to a representative")
}

fn members(ring: &BurnsideRing, class: usize) -> BTreeSet<usize> {
    let r = ring.marks().classes()[class];
    set(ring.table().subgroup(r).elements().iter().copied())
}

/// `[G/H]·[G/K] = Σ_{HgK} [G/(H ∩ gKg⁻¹)]`, double cosets found by
/// sweeping the group.
pub fn double_coset_product(ring: &Arc<BurnsideRing>, i: usize, j: usize) -> BurnsideElement {
    let g = ring.table().group();
    let (h, k) = (members(ring, i), members(ring, j));
    let mut seen = BTreeSet::new();
    let mut coeffs = vec![Int::zero(); ring.rank()];
    for x in 0..g.order() {
        if seen.contains(&x) {
            continue;
        }
        for &a in &h {
            for &b in &k {
                seen.insert(g.mul(g.mul(a, x), b));
            }
        }
        let kx = conj_set(g, x, &k);
        let meet: BTreeSet<usize> = h.intersection(&kx).copied().collect();
        coeffs[class_of(ring, &meet)] += 1;
    }
    BurnsideElement::from_coeffs(ring, coeffs).unwrap()
}

/// `|(G/L)^K|` by counting cosets `xL` fixed by every element of `K`.
pub fn fixed_cosets(g: &FiniteGroup, k: &BTreeSet<usize>, l: &BTreeSet<usize>) -> usize {
    let cosets: BTreeSet<BTreeSet<usize>> = (0..g.order()).map(|x| set(l.iter().map(|&y| g.mul(x, y)))).collect();
    cosets
        .iter()
        .filter(|c| k.iter().all(|&a| set(c.iter().map(|&y| g.mul(a, y))) == **c))
        .count()
}

/// Marks matrix `M[i][j] = |(G/L_j)^{L_i}|` over the class representatives.
pub fn marks_by_counting(ring: &BurnsideRing) -> Vec<Vec<usize>> {
    let g = ring.table().group();
    let n = ring.rank();
    (0..n)
        .map(|i| (0..n).map(|j| fixed_cosets(g, &members(ring, i), &members(ring, j))).collect())
        .collect()
}

fn solve_rational(marks: &[Vec<usize>], target: Vec<BigRational>) -> Vec<BigRational> {
    let n = marks.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = marks[i].iter().map(|&x| BigRational::from_integer(Int::from(x))).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("marks matrix is invertible");
        a.swap(c, p);
        let pivot = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x = x.clone() / pivot.clone();
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let row_c = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(row_c) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n].clone()).collect()
}

/// Solves `Σ_j c_j M[i][j] = m_i` over `Q` by Gaussian elimination;
/// `None` when a solution is not integral.
pub fn coefficients_from_marks(marks: &[Vec<usize>], target: &[Int]) -> Option<Vec<Int>> {
    let target = target.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    solve_rational(marks, target)
        .into_iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Number of `ε ∈ {±1}ⁿ` that are mark vectors of elements of `A(G)`.
pub fn unit_count(ring: &BurnsideRing) -> usize {
    let marks = marks_by_counting(ring);
    let n = marks.len();
    // columns of the inverse, all over one common denominator
    let columns: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let e: Vec<BigRational> = (0..n)
                .map(|i| BigRational::from_integer(Int::from((i == j) as u8)))
                .collect();
            solve_rational(&marks, e)
        })
        .collect();
    let den = columns
        .iter()
        .flatten()
        .fold(Int::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scaled: Vec<Vec<i64>> = columns
        .iter()
        .map(|col| col.iter().map(|x| i64::try_from(x.numer() * (&den / x.denom())).unwrap()).collect())
        .collect();
    let den = i64::try_from(den).unwrap();
    (0..1usize << n)
        .filter(|bits| {
            (0..n).all(|r| {
                let s: i64 = (0..n)
                    .map(|j| if bits >> j & 1 == 1 { -scaled[j][r] } else { scaled[j][r] })
                    .sum();
                s % den == 0
            })
        })
        .count()
}

/// A finite `H`-set given by the action of each element of `H` on
/// `0..size`.
pub struct HSet {
    pub size: usize,
    /// `act[(h, x)]` for `h` in the sorted member list of `H`.
    pub act: Vec<Vec<usize>>,
}

/// The disjoint union of `mult[c]` copies of `H/L_c` for the classes of
/// the Burnside ring of `H`.
pub fn hset(ring: &BurnsideRing, mult: &[usize]) -> HSet {
    let table = ring.table();
    let g = table.group();
    let h: Vec<usize> = table.subgroup(ring.level()).elements().to_vec();
    let mut points: Vec<BTreeSet<usize>> = Vec::new();
    let mut block_start = Vec::new();
    for (c, &m) in mult.iter().enumerate() {
        let l = members(ring, c);
        let cosets: BTreeSet<BTreeSet<usize>> = h.iter().map(|&x| set(l.iter().map(|&y| g.mul(x, y)))).collect();
        for _ in 0..m {
            block_start.push((points.len(), cosets.len()));
            points.extend(cosets.iter().cloned());
        }
    }
    let act = h
        .iter()
        .map(|&a| {
            let mut images = Vec::with_capacity(points.len());
            for &(start, len) in &block_start {
                for p in &points[start..start + len] {
                    let image = set(p.iter().map(|&y| g.mul(a, y)));
                    let offset = points[start..start + len].iter().position(|q| *q == image).unwrap();
                    images.push(start + offset);
                }
            }
            images
        })
        .collect();
    HSet { size: points.len(), act }
}

/// `Map_H(G, X) = {f: G → X | f(hg) = h·f(g)}` with `G` acting by
/// `(x·f)(g) = f(gx)`, as an element of `A(G)` recovered from the counts
/// of `K`-fixed functions.
pub fn coinduced_norm(top: &Arc<BurnsideRing>, h_level: &BurnsideRing, x: &HSet) -> BurnsideElement {
    let table = top.table();
    let g = table.group();
    let h: Vec<usize> = table.subgroup(h_level.level()).elements().to_vec();
    let pos = |a: usize| h.binary_search(&a).unwrap();
    // right cosets Hr
    let mut reps = Vec::new();
    let mut covered = BTreeSet::new();
    for r in 0..g.order() {
        if covered.insert(r) {
            reps.push(r);
            for &a in &h {
                covered.insert(g.mul(a, r));
            }
        }
    }
    // each g = a·r for a unique rep r and a ∈ H
    let decompose: Vec<(usize, usize)> = (0..g.order())
        .map(|y| {
            reps.iter()
                .enumerate()
                .find_map(|(i, &r)| {
                    let a = g.mul(y, g.inv(r));
                    h.binary_search(&a).ok().map(|_| (i, a))
                })
                .unwrap()
        })
        .collect();
    let total = x.size.pow(reps.len() as u32);
    let n = top.rank();
    let marks: Vec<Int> = (0..n)
        .map(|i| {
            let k = members(top, i);
            let fixed = (0..total)
                .filter(|&code| {
                    let value = |y: usize| {
                        let (ri, a) = decompose[y];
                        let phi = code / x.size.pow(ri as u32) % x.size;
                        x.act[pos(a)][phi]
                    };
                    (0..g.order()).all(|y| k.iter().all(|&c| value(g.mul(y, c)) == value(y)))
                })
                .count();
            Int::from(fixed)
        })
        .collect();
    let coeffs = coefficients_from_marks(&marks_by_counting(top), &marks).expect("a G-set has integral coefficients");
    BurnsideElement::from_coeffs(top, coeffs).unwrap()
}

/// `l + (l² − l)/2·[C₄/C₂] + (l⁴ − l²)/4·[C₄/e]`-style expansion of the
/// norm of the integer `l` from `e` to a cyclic group of order `2^k`:
/// the coefficient of `[C_{2^k}/C_{2^j}]` is `(l^{2^{k−j}} − l^{2^{k−j−1}}) / 2^{k−j}`.
pub fn cyclic_norm_of_integer(k: u32, l: i64) -> Vec<Int> {
    let l = Int::from(l);
    // classes ordered by subgroup order: C₁, C₂, …, C_{2^k}
    (0..=k)
        .map(|j| {
            if j == k {
                l.clone()
            } else {
                let e = 1u32 << (k - j);
                (num_traits::pow(l.clone(), e as usize) - num_traits::pow(l.clone(), (e / 2) as usize)) / Int::from(e)
            }
        })
        .collect()
}

pub fn abs_sum(v: &[Int]) -> Int {
    v.iter().map(|x| x.abs()).sum()
}
