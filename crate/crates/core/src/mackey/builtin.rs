use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::functor::{MackeyFunctor, MackeyParts, ValueRing};
use super::presentation::AbelianGroupPresentation;
use crate::burnside::{BurnsideElement, BurnsideFunctor, UnitGroup};
use crate::error::{Error, Result};
use crate::group::SubgroupTable;
use crate::scalar::F2;
use crate::{F2Matrix, IntMatrix};

/// Names accepted by [`by_name`].
pub const COEFFICIENT_NAMES: &[&str] = &["burnside", "constZ", "constF2", "units", "ghost"];

pub fn by_name(name: &str, table: &Arc<SubgroupTable>) -> Result<MackeyFunctor> {
    match name {
        "burnside" => burnside_mackey(table),
        "constZ" => Ok(constant_z(table)),
        "constF2" => Ok(constant_f2(table)),
        "units" => units_mackey(table),
        "ghost" => ghost_kernel_mackey(table),
        other => Err(Error::Parse(format!(
            "unknown coefficient functor `{other}` (expected one of {})",
            COEFFICIENT_NAMES.join(", ")
        ))),
    }
}

fn subgroup_label(s: usize) -> String {
    format!("H{s}")
}

/// Matrices of a map given on basis vectors, one column per basis element.
fn matrix_from_images(rows: usize, columns: Vec<Vec<BigInt>>) -> IntMatrix {
    IntMatrix::from_columns(rows, &columns)
}

fn f2_to_int(v: &[F2]) -> Vec<BigInt> {
    v.iter().map(|x| BigInt::from(x.as_u8())).collect()
}

/// `H ↦ A_H` with the Burnside restriction, induction, and conjugation.
pub fn burnside_mackey(table: &Arc<SubgroupTable>) -> Result<MackeyFunctor> {
    let f = BurnsideFunctor::new(table.clone());
    let n = table.len();
    let basis = |s: usize| -> Result<Vec<BurnsideElement>> {
        (0..f.ring(s).rank()).map(|i| BurnsideElement::basis(f.ring(s), i)).collect()
    };
    let bases: Vec<Vec<BurnsideElement>> = (0..n).map(basis).collect::<Result<_>>()?;
    let mut parts = MackeyParts {
        levels: (0..n).map(|s| AbelianGroupPresentation::free(f.ring(s).rank())).collect(),
        labels: (0..n)
            .map(|s| {
                f.ring(s)
                    .marks()
                    .classes()
                    .iter()
                    .map(|&l| format!("[{}/{}]", subgroup_label(s), subgroup_label(l)))
                    .collect()
            })
            .collect(),
        res: BTreeMap::new(),
        tr: BTreeMap::new(),
        conj: Vec::new(),
    };
    for h in 0..n {
        for k in table.subgroups_of(h) {
            let res = bases[h]
                .iter()
                .map(|x| Ok(f.restrict(x, k)?.coeffs().to_vec()))
                .collect::<Result<Vec<_>>>()?;
            parts.res.insert((k, h), matrix_from_images(f.ring(k).rank(), res));
            let tr = bases[k]
                .iter()
                .map(|y| Ok(f.transfer(y, h)?.coeffs().to_vec()))
                .collect::<Result<Vec<_>>>()?;
            parts.tr.insert((k, h), matrix_from_images(f.ring(h).rank(), tr));
        }
    }
    for g in 0..table.group().order() {
        let row = (0..n)
            .map(|h| {
                let cols = bases[h]
                    .iter()
                    .map(|x| Ok(f.conjugate(x, g)?.coeffs().to_vec()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(matrix_from_images(f.ring(table.conjugate(g, h)).rank(), cols))
            })
            .collect::<Result<Vec<_>>>()?;
        parts.conj.push(row);
    }
    MackeyFunctor::from_parts("burnside", table.clone(), ValueRing::Integers, parts)
}

fn constant(table: &Arc<SubgroupTable>, ring: ValueRing) -> MackeyFunctor {
    let n = table.len();
    let one = || IntMatrix::identity(1);
    let level = match ring {
        ValueRing::Integers => AbelianGroupPresentation::free(1),
        ValueRing::Mod2 => AbelianGroupPresentation::elementary_two(1),
    };
    let mut parts = MackeyParts {
        levels: vec![level; n],
        labels: vec![vec!["1".to_string()]; n],
        res: BTreeMap::new(),
        tr: BTreeMap::new(),
        conj: vec![vec![one(); n]; table.group().order()],
    };
    for h in 0..n {
        for k in table.subgroups_of(h) {
            let index = table.subgroup(h).order() / table.subgroup(k).order();
            parts.res.insert((k, h), one());
            parts.tr.insert((k, h), IntMatrix::from_rows(vec![vec![BigInt::from(index)]]));
        }
    }
    let name = match ring {
        ValueRing::Integers => "constZ",
        ValueRing::Mod2 => "constF2",
    };
    MackeyFunctor::from_parts(name, table.clone(), ring, parts).expect("constant functor shapes")
}

/// The constant functor `Z`: restriction is the identity and transfer is
/// multiplication by the index.
pub fn constant_z(table: &Arc<SubgroupTable>) -> MackeyFunctor {
    constant(table, ValueRing::Integers)
}

/// The constant functor `F₂`, transfer by the index mod 2.
pub fn constant_f2(table: &Arc<SubgroupTable>) -> MackeyFunctor {
    constant(table, ValueRing::Mod2)
}

/// Unit groups of all the Burnside rings together with the maps of the
/// Burnside functor on them, transfer being the norm.
pub struct UnitsData {
    pub burnside: BurnsideFunctor,
    pub units: Vec<UnitGroup>,
}

impl UnitsData {
    pub fn new(table: &Arc<SubgroupTable>) -> Result<Self> {
        let burnside = BurnsideFunctor::new(table.clone());
        let units = (0..table.len())
            .map(|s| UnitGroup::new(burnside.ring(s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(UnitsData { burnside, units })
    }

    fn map_basis(&self, source: usize, target: usize, f: impl Fn(&BurnsideElement) -> Result<BurnsideElement>) -> Result<F2Matrix> {
        let cols = self.units[source]
            .basis()
            .iter()
            .map(|u| self.units[target].coordinates(&f(u)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(F2Matrix::from_columns(self.units[target].dim(), &cols))
    }

    pub fn res(&self, k: usize, h: usize) -> Result<F2Matrix> {
        self.map_basis(h, k, |u| self.burnside.restrict(u, k))
    }

    pub fn tr(&self, k: usize, h: usize) -> Result<F2Matrix> {
        self.map_basis(k, h, |u| self.burnside.norm(u, h))
    }

    pub fn conj(&self, g: usize, h: usize) -> Result<F2Matrix> {
        let target = self.burnside.table().conjugate(g, h);
        self.map_basis(h, target, |u| self.burnside.conjugate(u, g))
    }

    fn labels(&self, s: usize) -> Vec<String> {
        let u = &self.units[s];
        let classes = u.ring().marks().classes();
        let mut labels = vec!["-1".to_string()];
        labels.extend(
            u.index_two_classes()
                .iter()
                .map(|&l| format!("[{}/{}]-1", subgroup_label(s), subgroup_label(classes[l]))),
        );
        labels.extend(u.basis()[u.matsuda_dim()..].iter().map(|x| x.to_string()));
        labels
    }
}

fn f2_matrix_to_int(m: &F2Matrix) -> IntMatrix {
    m.map(|x| BigInt::from(x.as_u8()))
}

/// `H ↦ A_H^×` as `F₂`-vector spaces, transfer given by the norm.
pub fn units_mackey(table: &Arc<SubgroupTable>) -> Result<MackeyFunctor> {
    let data = UnitsData::new(table)?;
    let n = table.len();
    let mut parts = MackeyParts {
        levels: (0..n).map(|s| AbelianGroupPresentation::elementary_two(data.units[s].dim())).collect(),
        labels: (0..n).map(|s| data.labels(s)).collect(),
        res: BTreeMap::new(),
        tr: BTreeMap::new(),
        conj: Vec::new(),
    };
    for h in 0..n {
        for k in table.subgroups_of(h) {
            parts.res.insert((k, h), f2_matrix_to_int(&data.res(k, h)?));
            parts.tr.insert((k, h), f2_matrix_to_int(&data.tr(k, h)?));
        }
    }
    for g in 0..table.group().order() {
        let row = (0..n)
            .map(|h| Ok(f2_matrix_to_int(&data.conj(g, h)?)))
            .collect::<Result<Vec<_>>>()?;
        parts.conj.push(row);
    }
    MackeyFunctor::from_parts("units", table.clone(), ValueRing::Mod2, parts)
}

/// The kernel of the augmentation `A_H^× → {±1}` at every level, as a
/// subfunctor of [`units_mackey`].
pub fn ghost_kernel_mackey(table: &Arc<SubgroupTable>) -> Result<MackeyFunctor> {
    let data = UnitsData::new(table)?;
    let n = table.len();
    let kernels: Vec<Vec<Vec<F2>>> = data.units.iter().map(UnitGroup::kernel_basis).collect();
    let inclusion: Vec<F2Matrix> = (0..n)
        .map(|s| F2Matrix::from_columns(data.units[s].dim(), &kernels[s]))
        .collect();
    // expresses a map of unit groups in kernel coordinates
    let restrict_to_kernel = |what: &str, source: usize, target: usize, m: &F2Matrix| -> Result<IntMatrix> {
        let cols = kernels[source]
            .iter()
            .map(|v| {
                let image = m.apply(v);
                inclusion[target].solve(&image).map(|c| f2_to_int(&c)).ok_or_else(|| {
                    Error::Internal(format!("{what} from subgroup {source} to {target} leaves the augmentation kernel"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(matrix_from_images(kernels[target].len(), cols))
    };
    let mut parts = MackeyParts {
        levels: kernels.iter().map(|k| AbelianGroupPresentation::elementary_two(k.len())).collect(),
        labels: (0..n)
            .map(|s| {
                let unit_labels = data.labels(s);
                kernels[s]
                    .iter()
                    .map(|v| {
                        let terms: Vec<&str> = v
                            .iter()
                            .zip(&unit_labels)
                            .filter(|(c, _)| c.bit())
                            .map(|(_, l)| l.as_str())
                            .collect();
                        terms.join(" * ")
                    })
                    .collect()
            })
            .collect(),
        res: BTreeMap::new(),
        tr: BTreeMap::new(),
        conj: Vec::new(),
    };
    for h in 0..n {
        for k in table.subgroups_of(h) {
            parts.res.insert((k, h), restrict_to_kernel("restriction", h, k, &data.res(k, h)?)?);
            parts.tr.insert((k, h), restrict_to_kernel("transfer", k, h, &data.tr(k, h)?)?);
        }
    }
    for g in 0..table.group().order() {
        let row = (0..n)
            .map(|h| restrict_to_kernel("conjugation", h, table.conjugate(g, h), &data.conj(g, h)?))
            .collect::<Result<Vec<_>>>()?;
        parts.conj.push(row);
    }
    MackeyFunctor::from_parts("ghost", table.clone(), ValueRing::Mod2, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::named;
    use crate::mackey::verify_mackey_axiom;

    fn table(name: &str) -> Arc<SubgroupTable> {
        Arc::new(SubgroupTable::new(Arc::new(named(name).unwrap())).unwrap())
    }

    #[test]
    fn burnside_levels() {
        let t = table("C2");
        let m = burnside_mackey(&t).unwrap();
        assert_eq!(m.level(0), &AbelianGroupPresentation::free(1));
        assert_eq!(m.level(1), &AbelianGroupPresentation::free(2));
    }

    #[test]
    fn constant_transfer_is_the_index() {
        let t = table("C2");
        let f2 = constant_f2(&t);
        assert!(f2.tr(0, 1).unwrap().is_zero());
        let z = constant_z(&t);
        assert_eq!(z.tr(0, 1).unwrap()[(0, 0)], BigInt::from(2));
        let e = table("C1");
        assert_eq!(constant_z(&e).level(0), &AbelianGroupPresentation::free(1));
        assert_eq!(constant_f2(&e).level(0), &AbelianGroupPresentation::elementary_two(1));
    }

    #[test]
    fn ghost_kernel_of_odd_group_is_zero() {
        let t = table("C3");
        let m = ghost_kernel_mackey(&t).unwrap();
        assert!((0..t.len()).all(|s| m.level(s).is_zero()));
    }

    #[test]
    fn builtins_satisfy_the_axioms_on_small_groups() {
        for name in ["C2", "C3", "S3"] {
            let t = table(name);
            for c in COEFFICIENT_NAMES {
                let m = by_name(c, &t).unwrap();
                assert_eq!(verify_mackey_axiom(&m), vec![], "{c} over {name}");
            }
        }
    }

    #[test]
    fn corrupted_transfer_is_reported() {
        let t = table("C4");
        let mut m = burnside_mackey(&t).unwrap();
        let (k, h) = (1, t.whole());
        let mut bad = m.tr(k, h).unwrap().clone();
        bad[(0, 0)] += BigInt::from(1);
        m.set_tr(k, h, bad).unwrap();
        let report = verify_mackey_axiom(&m);
        assert!(!report.is_empty());
        assert!(report.iter().any(|v| v.identity == "double coset formula" && v.subgroups.contains(&k)));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(by_name("tambara", &table("C2")), Err(Error::Parse(_))));
    }
}
