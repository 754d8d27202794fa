use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{BurnsideElement, BurnsideRing};
use crate::error::{Error, Result};
use crate::scalar::F2;
use crate::F2Matrix;

/// The unit group `A_H^×`, an elementary abelian 2-group.
///
/// Units are found by searching all ±1 mark vectors. Coordinates are taken
/// in the basis `{-1} ∪ {[H/L] - 1 : L of index two}` (index-two classes in
/// class order). For abelian `H` this is a basis by Matsuda's theorem and
/// the unit count is checked against it. For nonabelian `H` there can be
/// further units; the basis is then extended by the first units of the
/// search that are independent of it.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    ring: Arc<BurnsideRing>,
    index_two: Vec<usize>,
    basis: Vec<BurnsideElement>,
    units: Vec<BurnsideElement>,
    // column i: sign vector (bit set where the mark is -1) of basis[i]
    signs: F2Matrix,
}

impl UnitGroup {
    pub fn new(ring: &Arc<BurnsideRing>) -> Result<Self> {
        let units = search(ring);
        let marks = ring.marks();
        let n = ring.rank();
        let order = ring.group_order();
        let index_two: Vec<usize> = (0..n)
            .filter(|&i| 2 * ring.table().subgroup(marks.classes()[i]).order() == order)
            .collect();
        let matsuda_dim = index_two.len() + 1;
        let abelian = is_abelian(ring);
        if abelian && units.len() != 1 << matsuda_dim {
            return Err(Error::MatsudaMismatch {
                expected_dim: matsuda_dim,
                found: units.len(),
            });
        }
        let one = BurnsideElement::one(ring);
        let mut basis = vec![-&one];
        for &l in &index_two {
            basis.push(&BurnsideElement::basis(ring, l)? - &one);
        }
        let mut columns: Vec<Vec<F2>> = basis.iter().map(sign_vector).collect();
        if F2Matrix::from_columns(n, &columns).rank() != basis.len() {
            return Err(Error::Internal("unit basis is not independent".into()));
        }
        for u in &units {
            let candidate = sign_vector(u);
            columns.push(candidate);
            if F2Matrix::from_columns(n, &columns).rank() == columns.len() {
                basis.push(u.clone());
            } else {
                columns.pop();
            }
        }
        if units.len() != 1 << basis.len() {
            return Err(Error::Internal(format!(
                "{} units do not form a group of order 2^{}",
                units.len(),
                basis.len()
            )));
        }
        let signs = F2Matrix::from_columns(n, &columns);
        Ok(UnitGroup {
            ring: ring.clone(),
            index_two,
            basis,
            units,
            signs,
        })
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `m + 1`, with `m` the number of index-two classes.
    pub fn matsuda_dim(&self) -> usize {
        self.index_two.len() + 1
    }

    pub fn order(&self) -> usize {
        self.units.len()
    }

    /// Local classes of the index-two subgroups, labelling `basis()[1..]`.
    pub fn index_two_classes(&self) -> &[usize] {
        &self.index_two
    }

    pub fn basis(&self) -> &[BurnsideElement] {
        &self.basis
    }

    /// Every unit, in the order the sign search produced them.
    pub fn units(&self) -> &[BurnsideElement] {
        &self.units
    }

    /// Coordinates of a unit in the canonical basis.
    pub fn coordinates(&self, u: &BurnsideElement) -> Result<Vec<F2>> {
        u.same_ring(&self.basis[0])?;
        if !u.is_unit() {
            return Err(Error::NotAUnit);
        }
        self.signs
            .solve(&sign_vector(u))
            .ok_or_else(|| Error::Internal("unit outside the span of the canonical basis".into()))
    }

    /// The unit with the given coordinates.
    pub fn from_coordinates(&self, coords: &[F2]) -> BurnsideElement {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let one = BurnsideElement::one(&self.ring);
        coords
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| c.bit())
            .fold(one, |acc, (_, b)| &acc * b)
    }

    /// Augmentation bits of the basis: 1 where the basis element has
    /// cardinality -1.
    pub fn augmentation_functional(&self) -> Vec<F2> {
        (0..self.dim()).map(|i| self.signs[(0, i)]).collect()
    }

    /// Basis of the kernel of the augmentation `A_H^× → {±1}`, in
    /// coordinates.
    pub fn kernel_basis(&self) -> Vec<Vec<F2>> {
        F2Matrix::from_rows(vec![self.augmentation_functional()]).nullspace()
    }
}

/// The sign of the cardinality of a unit.
pub fn augmentation_sign(u: &BurnsideElement) -> Result<i32> {
    if !u.is_unit() {
        return Err(Error::NotAUnit);
    }
    Ok(if u.augmentation().is_negative() { -1 } else { 1 })
}

fn is_abelian(ring: &BurnsideRing) -> bool {
    let g = ring.table().group();
    let members = ring.table().subgroup(ring.level()).elements();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

fn sign_vector(u: &BurnsideElement) -> Vec<F2> {
    u.mark_vector().iter().map(|m| F2::new(m.is_negative())).collect()
}

/// Depth-first search over ±1 marks, choosing from the top class down and
/// pruning as soon as a coefficient fails to be integral.
fn search(ring: &Arc<BurnsideRing>) -> Vec<BurnsideElement> {
    let n = ring.rank();
    let mut coeffs = vec![BigInt::zero(); n];
    let mut found = Vec::new();
    descend(ring, n, &mut coeffs, &mut found);
    found
}

fn descend(ring: &Arc<BurnsideRing>, j: usize, coeffs: &mut Vec<BigInt>, found: &mut Vec<BurnsideElement>) {
    if j == 0 {
        found.push(BurnsideElement::from_coeffs(ring, coeffs.clone()).expect("rank-sized vector"));
        return;
    }
    let j = j - 1;
    let t = ring.marks();
    let rest = coeffs
        .iter()
        .enumerate()
        .skip(j + 1)
        .fold(BigInt::zero(), |acc, (i, c)| acc + c * t.mark(i, j));
    for sign in [BigInt::one(), -BigInt::one()] {
        let (q, r) = (sign - &rest).div_rem(t.mark(j, j));
        if r.is_zero() {
            coeffs[j] = q;
            descend(ring, j, coeffs, found);
        }
    }
    coeffs[j] = BigInt::zero();
}
