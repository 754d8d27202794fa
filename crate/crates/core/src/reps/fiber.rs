use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::character::Character;
use super::rep::Rep;
use crate::error::{Error, Result};
use crate::group::{hom_classes, FiniteGroup, GroupHom, SubgroupTable};
use crate::Rational;

/// A representation of `Π × G`, remembering both factors.
#[derive(Clone, Debug)]
pub struct ProductRep {
    structure: Arc<FiniteGroup>,
    group: Arc<FiniteGroup>,
    rep: Rep<Rational>,
}

impl ProductRep {
    /// `rep` must be a representation of `FiniteGroup::direct_product(structure, group)`.
    pub fn new(structure: Arc<FiniteGroup>, group: Arc<FiniteGroup>, rep: Rep<Rational>) -> Result<Self> {
        let product = FiniteGroup::direct_product(&structure, &group);
        if **rep.group() != product {
            return Err(Error::InvalidRepresentation(
                "representation is not over the product of the structure group and the group".into(),
            ));
        }
        Ok(ProductRep { structure, group, rep })
    }

    /// `W ⊠ U` for `W` over `Π` and `U` over `G`.
    pub fn external(w: &Rep<Rational>, u: &Rep<Rational>) -> Self {
        ProductRep {
            structure: w.group().clone(),
            group: u.group().clone(),
            rep: w.external(u),
        }
    }

    pub fn structure(&self) -> &Arc<FiniteGroup> {
        &self.structure
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rep(&self) -> &Rep<Rational> {
        &self.rep
    }

    /// Index of `(π, g)` in the product group.
    pub fn pair(&self, pi: usize, g: usize) -> usize {
        pi * self.group.order() + g
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(ProductRep {
            structure: self.structure.clone(),
            group: self.group.clone(),
            rep: self.rep.direct_sum(&other.rep)?,
        })
    }
}

/// The character of `h ↦ V(θ(h), h)` on the source of `θ`.
pub fn fiber_character(v: &ProductRep, theta: &GroupHom) -> Character<Rational> {
    Character::from_fn(v.group(), theta.source(), |h| {
        let pi = theta.image(h).expect("element of the source");
        v.rep().matrix(v.pair(pi, h)).trace()
    })
}

/// Fiber characters over one subgroup class representative.
#[derive(Clone, Debug)]
pub struct LevelFibers {
    pub subgroup: usize,
    /// One entry per `Π`-conjugacy class of homomorphisms, in the order of
    /// [`hom_classes`].
    pub characters: Vec<Character<Rational>>,
    /// The common fiber character when all entries agree.
    pub coordinate: Option<Character<Rational>>,
}

#[derive(Clone, Debug)]
pub struct HomogeneityReport {
    pub homogeneous: bool,
    pub levels: Vec<LevelFibers>,
}

/// Decides homogeneity by comparing fiber characters over every
/// homomorphism class `H → Π`, for every subgroup class `H` of `G`.
pub fn homogeneity_check(v: &ProductRep, table: &SubgroupTable) -> Result<HomogeneityReport> {
    if **table.group() != **v.group() {
        return Err(Error::InvalidRepresentation("subgroup table is for a different group".into()));
    }
    let g = v.group();
    let mut levels = Vec::new();
    for &h in table.class_reps() {
        let classes = hom_classes(g, table.subgroup(h), v.structure());
        let characters: Vec<Character<Rational>> = classes
            .iter()
            .map(|c| fiber_character(v, &c.representative))
            .collect();
        let coordinate = match characters.split_first() {
            Some((first, rest)) if rest.iter().all(|c| c == first) => Some(first.clone()),
            _ => None,
        };
        levels.push(LevelFibers {
            subgroup: h,
            characters,
            coordinate,
        });
    }
    Ok(HomogeneityReport {
        homogeneous: levels.iter().all(|l| l.coordinate.is_some()),
        levels,
    })
}

/// Outcome of [`is_regular_multiple_pattern`].
#[derive(Clone, Debug)]
pub struct RegularPattern {
    pub holds: bool,
    /// `χ_V(π, e) / |G|` on the conjugacy classes of `Π`, when the pattern
    /// holds. This is only a candidate for the character of `W`.
    pub candidate: Option<Character<Rational>>,
}

/// Tests the character pattern of `n ρ_G ⊗ W`: `χ_V(π, g) = 0` for
/// `g ≠ e`, and `χ_V(π, e)` an integer multiple of `|G|`.
pub fn is_regular_multiple_pattern(v: &ProductRep) -> RegularPattern {
    let g = v.group();
    let pi = v.structure();
    let traces = v.rep().traces();
    let vanishes = (0..pi.order())
        .all(|p| (0..g.order()).filter(|&x| x != g.identity()).all(|x| traces[v.pair(p, x)].is_zero()));
    let order = Rational::from_integer(BigInt::from(g.order()));
    let quotient = |p: usize| traces[v.pair(p, g.identity())].clone() / order.clone();
    let divisible = (0..pi.order()).all(|p| quotient(p).is_integer());
    let holds = vanishes && divisible;
    let all: Vec<usize> = (0..pi.order()).collect();
    RegularPattern {
        holds,
        candidate: holds.then(|| Character::from_fn(pi, &all, quotient)),
    }
}
