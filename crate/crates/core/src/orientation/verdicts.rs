use std::sync::Arc;

use num_traits::Zero;

use crate::bredon::{bredon_cohomology, GCWComplex};
use crate::burnside::{BurnsideElement, BurnsideFunctor, BurnsideRing, UnitGroup};
use crate::error::{Error, Result};
use crate::group::SubgroupTable;
use crate::mackey::{constant_f2, ghost_kernel_mackey, UnitsData};
use crate::F2;

/// Coefficients for a first Stiefel–Whitney class: the constant functor
/// `Z`, whose units `{±1}` are written additively as `F₂`, or the Burnside
/// functor `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Z,
    A,
}

/// `w₁` of a bundle with respect to `Z` and `A_G`, with the resulting
/// orientability verdicts.
#[derive(Clone, Debug)]
pub struct ObstructionVerdict {
    pub label: String,
    /// `0` or `1` at the level `G/G` of the constant functor `F₂`.
    pub w1_z: F2,
    pub w1_a: BurnsideElement,
    /// `w1_a` in the basis of the unit group.
    pub w1_a_coordinates: Vec<F2>,
    pub hz_orientable: bool,
    pub ha_orientable: bool,
    pub ghost_note: String,
}

fn minus_one(ring: &Arc<BurnsideRing>) -> BurnsideElement {
    BurnsideElement::integer(ring, -1)
}

pub enum InducedLine {
    Z(F2),
    A(BurnsideElement),
}

/// `w₁` of `Ind_e^G(m)`, `m` the Möbius line over a point with `w₁ = -1`:
/// the transfer of `-1` from the trivial subgroup in the units functor
/// (the norm) for `A`, and in the constant functor `F₂` for `Z`.
pub fn w1_induced_line(table: &Arc<SubgroupTable>, coefficient: Coefficient) -> Result<InducedLine> {
    let (e, top) = (table.trivial(), table.whole());
    match coefficient {
        Coefficient::Z => {
            let f2 = constant_f2(table);
            let tr = f2.tr(e, top).expect("e is contained in G");
            let image = tr.apply(&[1.into()]);
            Ok(InducedLine::Z(F2::from_int(&image[0])))
        }
        Coefficient::A => {
            let data = UnitsData::new(table)?;
            let source = &data.units[e];
            let coords = source.coordinates(&minus_one(source.ring()))?;
            let image = data.tr(e, top)?.apply(&coords);
            Ok(InducedLine::A(data.units[top].from_coordinates(&image)))
        }
    }
}

/// `N_e^G(-1) ≡ -1` modulo the span of the proper orbits `[G/H]`, and
/// `N_e^G(-1) ≠ 1`.
pub fn norm_minus_one_congruence(table: &Arc<SubgroupTable>) -> Result<bool> {
    if table.group().order() % 2 == 1 {
        return Err(Error::OddOrderInput);
    }
    let burnside = BurnsideFunctor::new(table.clone());
    let n = burnside.norm(&minus_one(burnside.ring(table.trivial())), table.whole())?;
    let shifted = &n + &BurnsideElement::one(burnside.top());
    let top_class = burnside.top().rank() - 1;
    Ok(shifted.coeff(top_class).is_zero() && !n.is_one())
}

/// Whether the augmentation `A_H^× → {±1}` is an isomorphism at every
/// class of subgroups.
pub fn odd_order_collapse(table: &Arc<SubgroupTable>) -> Result<bool> {
    if table.group().order().is_multiple_of(2) {
        return Err(Error::EvenOrderInput);
    }
    let burnside = BurnsideFunctor::new(table.clone());
    for &h in table.class_reps() {
        let units = UnitGroup::new(burnside.ring(h))?;
        let functional = units.augmentation_functional();
        if units.dim() != 1 || functional != [F2::new(true)] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the kernel of the augmentation on `A_G^×`.
pub fn augmentation_kernel_dim(table: &Arc<SubgroupTable>) -> Result<usize> {
    let burnside = BurnsideFunctor::new(table.clone());
    Ok(UnitGroup::new(burnside.top())?.kernel_basis().len())
}

/// Verdicts for the tautological bundle `γ_ρ` over `B_G Σ₂`.
///
/// For even `|G|`, `w₁^Z` is transferred from `0` at the first subgroup of
/// order two, and `w₁^A` is detected on `Ind_e^G(m)`, giving
/// `N_e^G(-1) ≠ 1`. For odd `|G|` the underlying class is `|G|·w₁(γ₁) ≠ 0`,
/// and `w₁^A = w₁^Z` because the augmentation is an isomorphism.
pub fn gamma_rho_verdict(table: &Arc<SubgroupTable>) -> Result<ObstructionVerdict> {
    let group = table.group();
    let burnside = BurnsideFunctor::new(table.clone());
    let top_units = UnitGroup::new(burnside.top())?;
    let InducedLine::A(w1_a) = w1_induced_line(table, Coefficient::A)? else {
        unreachable!()
    };
    let w1_a_coordinates = top_units.coordinates(&w1_a)?;
    let label = format!("gamma_rho over a group of order {}", group.order());
    if group.order().is_multiple_of(2) {
        let t = table
            .subgroups()
            .iter()
            .position(|s| s.order() == 2)
            .ok_or_else(|| Error::Internal("even-order group without an element of order two".into()))?;
        let f2 = constant_f2(table);
        let tr = f2.tr(t, table.whole()).expect("subgroup of G");
        let w1_z = F2::from_int(&tr.apply(&[0.into()])[0]);
        if !norm_minus_one_congruence(table)? {
            return Err(Error::Internal("N_e^G(-1) is not congruent to -1 modulo proper orbits".into()));
        }
        Ok(ObstructionVerdict {
            label,
            w1_z,
            hz_orientable: w1_z == F2::new(false),
            ha_orientable: w1_a.is_one(),
            w1_a,
            w1_a_coordinates,
            ghost_note: format!(
                "even order: w1^Z = tr from H{t} of 0; w1^A restricts on the 1-skeleton to N_e^G(-1) != 1"
            ),
        })
    } else {
        if !odd_order_collapse(table)? {
            return Err(Error::Internal("augmentation is not an isomorphism at odd order".into()));
        }
        let w1_z = F2::new(true);
        Ok(ObstructionVerdict {
            label,
            w1_z,
            hz_orientable: false,
            ha_orientable: false,
            w1_a: minus_one(burnside.top()),
            w1_a_coordinates: top_units.coordinates(&minus_one(burnside.top()))?,
            ghost_note: "odd order: underlying class |G|·w1(gamma_1) != 0, and w1^A = w1^Z by the augmentation isomorphism".into(),
        })
    }
}

/// `w₁(ξ ⊕ ξ) = w₁(ξ)²`, which is `1` for every unit; returns the verdict
/// that the two-fold sum is orientable.
pub fn twofold_sum_verdict(w1: &BurnsideElement) -> Result<bool> {
    if !w1.is_unit() {
        return Err(Error::NotAUnit);
    }
    let square = w1 * w1;
    if !square.is_one() {
        return Err(Error::Internal(format!("unit {w1} does not square to 1")));
    }
    Ok(true)
}

/// Whether all Bredon cohomology of a free complex with coefficients in
/// the augmentation kernel of the units functor vanishes.
pub fn free_action_ghost_vanishing(x: &GCWComplex) -> Result<bool> {
    if !x.is_free() {
        return Err(Error::NotFree);
    }
    let m = ghost_kernel_mackey(x.table())?;
    Ok(bredon_cohomology(x, &m)?.vanishes())
}
