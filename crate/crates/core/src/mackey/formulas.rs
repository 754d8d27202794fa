//! Closed-form restriction and transfer on unit groups for elementary
//! abelian and cyclic 2-groups, checked against the computed maps.
//!
//! In both families every unit group has the basis `a_H = -1` followed by
//! `b_{H/K} = [H/K] - 1` for the index-two subgroups `K` of `H` in table
//! order, which is the canonical basis of [`crate::burnside::UnitGroup`].

use std::sync::Arc;

use super::builtin::UnitsData;
use crate::error::{Error, Result};
use crate::group::builtin::{cyclic, named};
use crate::group::SubgroupTable;
use crate::scalar::F2;
use crate::F2Matrix;

/// Unit restriction and transfer for one index-two pair `K < H`.
#[derive(Clone, Debug)]
pub struct FormulaEntry {
    pub big: usize,
    pub small: usize,
    /// `res: A_H^× → A_K^×` in canonical coordinates.
    pub res: F2Matrix,
    /// `tr: A_K^× → A_H^×`, the norm.
    pub tr: F2Matrix,
}

#[derive(Clone, Debug)]
pub struct FormulaTable {
    pub group: String,
    pub table: Arc<SubgroupTable>,
    pub entries: Vec<FormulaEntry>,
}

struct Levels<'a> {
    table: &'a SubgroupTable,
    data: &'a UnitsData,
}

impl Levels<'_> {
    fn dim(&self, h: usize) -> usize {
        self.data.units[h].dim()
    }

    /// Coordinate of `b_{H/K}` at level `H`.
    fn b(&self, h: usize, k: usize) -> usize {
        let u = &self.data.units[h];
        let local = u.ring().marks().class_of(k).expect("subgroup of H");
        1 + u.index_two_classes().iter().position(|&c| c == local).expect("index-two subgroup")
    }

    /// The index-two subgroup behind coordinate `i ≥ 1` at level `H`.
    fn subgroup_of(&self, h: usize, i: usize) -> usize {
        let u = &self.data.units[h];
        u.ring().marks().classes()[u.index_two_classes()[i - 1]]
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.table.len())
            .flat_map(|h| self.table.index_two_subgroups(h).into_iter().map(move |k| (h, k)))
            .collect()
    }
}

fn column(dim: usize, ones: &[usize]) -> Vec<F2> {
    let mut v = vec![F2::ZERO; dim];
    for &i in ones {
        v[i] = v[i] + F2::ONE;
    }
    v
}

fn compare(group: &str, what: &str, h: usize, k: usize, computed: &F2Matrix, expected: &F2Matrix) -> Result<()> {
    if computed == expected {
        Ok(())
    } else {
        Err(Error::FormulaMismatch(format!(
            "{group}: {what} between subgroups {h} and {k} is {computed:?}, closed form gives {expected:?}"
        )))
    }
}

fn build(group: &str, table: Arc<SubgroupTable>, expect: impl Fn(&Levels, usize, usize) -> (F2Matrix, F2Matrix)) -> Result<FormulaTable> {
    let data = UnitsData::new(&table)?;
    let levels = Levels { table: &table, data: &data };
    let mut entries = Vec::new();
    for (h, k) in levels.pairs() {
        let res = data.res(k, h)?;
        let tr = data.tr(k, h)?;
        let (res_expected, tr_expected) = expect(&levels, h, k);
        compare(group, "restriction", h, k, &res, &res_expected)?;
        compare(group, "transfer", h, k, &tr, &tr_expected)?;
        entries.push(FormulaEntry { big: h, small: k, res, tr });
    }
    Ok(FormulaTable {
        group: group.to_string(),
        table,
        entries,
    })
}

/// Restriction and transfer for every index-two pair in `C₂ⁿ`, `1 ≤ n ≤ 3`.
///
/// Closed forms: `res a_H = a_K`; `res b_{H/K'} = b_{K/(K∩K')}` for
/// `K' ≠ K` and `0` for `K' = K`; `tr a_K = b_{H/K}`; and
/// `tr b_{K/L'} = b_{H/K} + b_{H/K₁} + b_{H/K₂}` with `K₁, K₂` the other
/// index-two subgroups of `H` meeting `K` in `L'`.
pub fn tn_formulas(n: usize) -> Result<FormulaTable> {
    if !(1..=3).contains(&n) {
        return Err(Error::Parse(format!("n must be between 1 and 3, got {n}")));
    }
    let name = vec!["C2"; n].join("x");
    let table = Arc::new(SubgroupTable::new(Arc::new(named(&name)?))?);
    let t = table.clone();
    build(&name, table, move |lv, h, k| {
        let res_cols: Vec<Vec<F2>> = (0..lv.dim(h))
            .map(|i| {
                if i == 0 {
                    return column(lv.dim(k), &[0]);
                }
                let other = lv.subgroup_of(h, i);
                if other == k {
                    column(lv.dim(k), &[])
                } else {
                    column(lv.dim(k), &[lv.b(k, t.intersection(k, other))])
                }
            })
            .collect();
        let tr_cols: Vec<Vec<F2>> = (0..lv.dim(k))
            .map(|i| {
                if i == 0 {
                    return column(lv.dim(h), &[lv.b(h, k)]);
                }
                let l = lv.subgroup_of(k, i);
                let mut ones = vec![lv.b(h, k)];
                for other in t.index_two_subgroups(h) {
                    if other != k && t.intersection(other, k) == l {
                        ones.push(lv.b(h, other));
                    }
                }
                column(lv.dim(h), &ones)
            })
            .collect();
        (
            F2Matrix::from_columns(lv.dim(k), &res_cols),
            F2Matrix::from_columns(lv.dim(h), &tr_cols),
        )
    })
}

/// Restriction and transfer between consecutive subgroups of `C_{2ⁿ}`.
///
/// Closed forms: `res a_k = a_{k-1}`, `res b_k = 0`, and
/// `tr a_{k-1} = tr b_{k-1} = b_k`.
pub fn cyclic_formulas(n: usize) -> Result<FormulaTable> {
    if !(1..=6).contains(&n) {
        return Err(Error::Parse(format!("n must be between 1 and 6, got {n}")));
    }
    let name = format!("C{}", 1usize << n);
    let table = Arc::new(SubgroupTable::new(Arc::new(cyclic(1 << n)))?);
    build(&name, table, |lv, h, k| {
        // at level C_{2^k}, k ≥ 1, coordinates are (a_k, b_k); at e only a_0
        let res_cols = vec![column(lv.dim(k), &[0]), column(lv.dim(k), &[])];
        let tr_cols: Vec<Vec<F2>> = (0..lv.dim(k)).map(|_| column(2, &[1])).collect();
        debug_assert_eq!(lv.dim(h), 2);
        (
            F2Matrix::from_columns(lv.dim(k), &res_cols),
            F2Matrix::from_columns(lv.dim(h), &tr_cols),
        )
    })
}
