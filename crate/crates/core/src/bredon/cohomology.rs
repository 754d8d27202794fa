use num_bigint::BigInt;
use num_traits::One;

use super::complex::GCWComplex;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::mackey::{AbelianGroupPresentation, MackeyFunctor, ValueRing};
use crate::{IntMatrix, F2};

/// Cellular cochains `Cⁿ = ⊕_{n-cells} M(G/H_cell)` and coboundaries
/// `δⁿ: Cⁿ → Cⁿ⁺¹`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub value_ring: ValueRing,
    /// Rank of each cochain group.
    pub ranks: Vec<usize>,
    /// `coboundaries[n] = δⁿ`, one fewer than the number of degrees.
    pub coboundaries: Vec<IntMatrix>,
}

/// `Hⁿ` for `n = 0..=dim X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degrees: Vec<AbelianGroupPresentation>,
}

impl CohomologyResult {
    pub fn vanishes(&self) -> bool {
        self.degrees.iter().all(AbelianGroupPresentation::is_zero)
    }
}

/// The matrix of `M(f_g): M(G/K) → M(G/H)` for `f_g(eH) = gK`, namely
/// `c_g ∘ res^K_{g⁻¹Hg}`.
fn orbit_map(m: &MackeyFunctor, h: usize, k: usize, g: usize) -> Result<IntMatrix> {
    let table = m.table();
    let group = table.group();
    let l = table.conjugate(group.inv(g), h);
    let res = m
        .res(l, k)
        .ok_or_else(|| Error::InvalidComplex(format!("H{l} is not contained in H{k}")))?;
    Ok(m.conj(g, l) * res)
}

pub fn cochain_complex(x: &GCWComplex, m: &MackeyFunctor) -> Result<CochainComplex> {
    if x.table().group() != m.table().group() {
        return Err(Error::CoefficientMismatch);
    }
    let counts = x.cell_counts();
    let offsets: Vec<Vec<usize>> = (0..counts.len())
        .map(|n| {
            let mut acc = 0;
            (0..counts[n])
                .map(|i| {
                    let at = acc;
                    acc += m.rank(x.isotropy(n, i));
                    at
                })
                .collect()
        })
        .collect();
    let ranks: Vec<usize> = (0..counts.len())
        .map(|n| (0..counts[n]).map(|i| m.rank(x.isotropy(n, i))).sum())
        .collect();
    let mut coboundaries: Vec<IntMatrix> = (1..counts.len())
        .map(|n| IntMatrix::zeros(ranks[n], ranks[n - 1]))
        .collect();
    for entry in &x.spec().boundary {
        let (n, i) = x.position(entry.from);
        let (_, j) = x.position(entry.to);
        let (h, k) = (x.isotropy(n, i), x.isotropy(n - 1, j));
        for term in &entry.terms {
            let block = orbit_map(m, h, k, term.conjugator)?.scale(&BigInt::from(term.coeff));
            coboundaries[n - 1].add_block(offsets[n][i], offsets[n - 1][j], &block);
        }
    }
    let coboundaries = coboundaries.iter().map(|d| m.value_ring().reduce(d)).collect();
    Ok(CochainComplex {
        value_ring: m.value_ring(),
        ranks,
        coboundaries,
    })
}

impl CochainComplex {
    /// Whether `δⁿ⁺¹ δⁿ = 0` for all `n`, computed in the value ring.
    pub fn is_complex(&self) -> bool {
        self.coboundaries
            .windows(2)
            .all(|w| self.value_ring.reduce(&(&w[1] * &w[0])).is_zero())
    }

    pub fn cohomology(&self) -> Result<CohomologyResult> {
        let top = self.ranks.len();
        let degrees = match self.value_ring {
            ValueRing::Integers => {
                let forms: Vec<_> = self.coboundaries.iter().map(smith_normal_form).collect();
                (0..top)
                    .map(|n| {
                        let out = if n < forms.len() { forms[n].rank() } else { 0 };
                        let (inc, torsion) = if n > 0 {
                            let f = forms[n - 1].invariant_factors();
                            (f.len(), f.into_iter().filter(|d| !d.is_one()).collect())
                        } else {
                            (0, Vec::new())
                        };
                        AbelianGroupPresentation::new(self.ranks[n] - out - inc, torsion)
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            ValueRing::Mod2 => {
                let ranks: Vec<usize> = self
                    .coboundaries
                    .iter()
                    .map(|d| d.map(F2::from_int).rank())
                    .collect();
                (0..top)
                    .map(|n| {
                        let out = if n < ranks.len() { ranks[n] } else { 0 };
                        let inc = if n > 0 { ranks[n - 1] } else { 0 };
                        AbelianGroupPresentation::elementary_two(self.ranks[n] - out - inc)
                    })
                    .collect()
            }
        };
        Ok(CohomologyResult { degrees })
    }

    /// `Σ (-1)ⁿ rank Cⁿ = Σ (-1)ⁿ rank Hⁿ`, ranks taken over `Q` for
    /// integral coefficients and over `F₂` for mod-2 coefficients.
    pub fn euler_consistent(&self, h: &CohomologyResult) -> bool {
        let rank = |p: &AbelianGroupPresentation| match self.value_ring {
            ValueRing::Integers => p.free_rank as i64,
            ValueRing::Mod2 => p.torsion.len() as i64,
        };
        let alt = |n: usize, x: i64| if n.is_multiple_of(2) { x } else { -x };
        let chains: i64 = self.ranks.iter().enumerate().map(|(n, &r)| alt(n, r as i64)).sum();
        let homology: i64 = h.degrees.iter().enumerate().map(|(n, p)| alt(n, rank(p))).sum();
        chains == homology
    }
}

pub fn bredon_cohomology(x: &GCWComplex, m: &MackeyFunctor) -> Result<CohomologyResult> {
    let cochains = cochain_complex(x, m)?;
    if !cochains.is_complex() {
        return Err(Error::InvalidComplex(format!(
            "the boundary does not square to zero with {} coefficients",
            m.name()
        )));
    }
    let h = cochains.cohomology()?;
    if !cochains.euler_consistent(&h) {
        return Err(Error::Internal("Euler characteristic of cochains and cohomology differ".into()));
    }
    Ok(h)
}
