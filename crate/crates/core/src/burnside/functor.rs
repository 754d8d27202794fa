use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::ring::{BurnsideElement, BurnsideRing};
use crate::error::{Error, Result};
use crate::group::SubgroupTable;

/// The Burnside rings of every subgroup of one group, with restriction,
/// transfer, norm, and conjugation between them.
#[derive(Debug)]
pub struct BurnsideFunctor {
    table: Arc<SubgroupTable>,
    rings: Vec<Arc<BurnsideRing>>,
}

impl BurnsideFunctor {
    pub fn new(table: Arc<SubgroupTable>) -> Self {
        let rings = (0..table.len()).map(|s| BurnsideRing::new(table.clone(), s)).collect();
        BurnsideFunctor { table, rings }
    }

    pub fn table(&self) -> &Arc<SubgroupTable> {
        &self.table
    }

    /// `A_H` for the subgroup with global index `s`.
    pub fn ring(&self, s: usize) -> &Arc<BurnsideRing> {
        &self.rings[s]
    }

    /// `A_G`.
    pub fn top(&self) -> &Arc<BurnsideRing> {
        &self.rings[self.table.whole()]
    }

    fn check_inclusion(&self, big: usize, small: usize) -> Result<()> {
        if self.table.contains(big, small) {
            Ok(())
        } else {
            Err(Error::NotASubgroup(format!(
                "subgroup {small} is not contained in subgroup {big}"
            )))
        }
    }

    fn own(&self, x: &BurnsideElement) -> Result<usize> {
        let s = x.ring().level();
        if Arc::ptr_eq(x.ring().table(), &self.table) {
            Ok(s)
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `res^H_K` on basis elements: `[H/L] ↦ Σ_{KgL ⊆ H} [K/(K ∩ gLg⁻¹)]`.
    pub fn restrict(&self, x: &BurnsideElement, k: usize) -> Result<BurnsideElement> {
        let h = self.own(x)?;
        self.check_inclusion(h, k)?;
        let source = x.ring().marks();
        let target = self.ring(k);
        let mut out = vec![BigInt::from(0); target.rank()];
        for (i, c) in x.coeffs().iter().enumerate() {
            if c == &BigInt::from(0) {
                continue;
            }
            for dc in self.table.double_cosets_in(h, k, source.classes()[i]) {
                let j = target.marks().class_of(dc.intersection).expect("intersection lies in K");
                out[j] += c;
            }
        }
        BurnsideElement::from_coeffs(target, out)
    }

    /// `tr_K^H`: `[K/J] ↦ [H/J]`.
    pub fn transfer(&self, y: &BurnsideElement, h: usize) -> Result<BurnsideElement> {
        let k = self.own(y)?;
        self.check_inclusion(h, k)?;
        let target = self.ring(h);
        let mut out = vec![BigInt::from(0); target.rank()];
        for (i, c) in y.coeffs().iter().enumerate() {
            let j = target.marks().class_of(y.ring().marks().classes()[i]).expect("J lies in H");
            out[j] += c;
        }
        BurnsideElement::from_coeffs(target, out)
    }

    /// The multiplicative transfer `N_K^H`, through the mark formula
    /// `mark_M(N y) = Π_{KgM ⊆ H} mark_{K ∩ gMg⁻¹}(y)`.
    pub fn norm(&self, y: &BurnsideElement, h: usize) -> Result<BurnsideElement> {
        let k = self.own(y)?;
        self.check_inclusion(h, k)?;
        let target = self.ring(h);
        let marks: Vec<BigInt> = target
            .marks()
            .classes()
            .iter()
            .map(|&m| {
                self.table
                    .double_cosets_in(h, k, m)
                    .iter()
                    .map(|dc| y.mark_at(dc.intersection).expect("intersection lies in K"))
                    .fold(BigInt::one(), |acc, v| acc * v)
            })
            .collect();
        BurnsideElement::from_marks(target, &marks).map_err(|_| {
            Error::Internal(format!("norm from subgroup {k} to {h} left the mark lattice"))
        })
    }

    /// `c_g: A_H → A_{gHg⁻¹}`, `[H/L] ↦ [gHg⁻¹/gLg⁻¹]`.
    pub fn conjugate(&self, x: &BurnsideElement, g: usize) -> Result<BurnsideElement> {
        let h = self.own(x)?;
        if g >= self.table.group().order() {
            return Err(Error::Parse(format!("element index {g} out of range")));
        }
        let target = self.ring(self.table.conjugate(g, h));
        let mut out = vec![BigInt::from(0); target.rank()];
        for (i, c) in x.coeffs().iter().enumerate() {
            let l = self.table.conjugate(g, x.ring().marks().classes()[i]);
            out[target.marks().class_of(l).expect("conjugate subgroup")] += c;
        }
        BurnsideElement::from_coeffs(target, out)
    }
}
