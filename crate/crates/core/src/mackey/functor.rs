use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::presentation::AbelianGroupPresentation;
use crate::error::{Error, Result};
use crate::group::SubgroupTable;
use crate::IntMatrix;

/// Ground ring of the values of a Mackey functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueRing {
    Integers,
    /// Values are `F₂`-vector spaces; matrix entries are kept in `{0, 1}`.
    Mod2,
}

impl ValueRing {
    pub fn reduce(self, m: &IntMatrix) -> IntMatrix {
        match self {
            ValueRing::Integers => m.clone(),
            ValueRing::Mod2 => m.map(|x| x.mod_floor(&BigInt::from(2))),
        }
    }
}

/// A Mackey functor on the subgroups of a finite group `G`.
///
/// Values and maps are stored for every subgroup, not only for class
/// representatives. Each value `M(H)` is a group with a fixed ordered
/// generating set, and maps are matrices acting on coordinate columns:
/// `res[(K, H)]: M(H) → M(K)`, `tr[(K, H)]: M(K) → M(H)` for `K ≤ H`, and
/// `conj[g][H]: M(H) → M(gHg⁻¹)`.
#[derive(Clone, Debug)]
pub struct MackeyFunctor {
    name: String,
    table: Arc<SubgroupTable>,
    ring: ValueRing,
    levels: Vec<AbelianGroupPresentation>,
    labels: Vec<Vec<String>>,
    res: BTreeMap<(usize, usize), IntMatrix>,
    tr: BTreeMap<(usize, usize), IntMatrix>,
    conj: Vec<Vec<IntMatrix>>,
}

/// A failed Mackey identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    /// Global subgroup indices involved, outermost first.
    pub subgroups: Vec<usize>,
    pub element: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at subgroups {:?}", self.identity, self.subgroups)?;
        if let Some(g) = self.element {
            write!(f, " with element {g}")?;
        }
        Ok(())
    }
}

/// Data for [`MackeyFunctor::from_parts`].
pub struct MackeyParts {
    pub levels: Vec<AbelianGroupPresentation>,
    pub labels: Vec<Vec<String>>,
    pub res: BTreeMap<(usize, usize), IntMatrix>,
    pub tr: BTreeMap<(usize, usize), IntMatrix>,
    pub conj: Vec<Vec<IntMatrix>>,
}

impl MackeyFunctor {
    /// Assembles a functor, checking that every map is present with the
    /// right shape. Axioms are not checked here; see [`verify_mackey_axiom`].
    pub fn from_parts(name: &str, table: Arc<SubgroupTable>, ring: ValueRing, parts: MackeyParts) -> Result<Self> {
        let n = table.len();
        let rank = |s: usize| parts.levels[s].generator_count();
        let shape_error = |what: String| Error::Internal(format!("{name}: {what}"));
        if parts.levels.len() != n || parts.labels.len() != n {
            return Err(shape_error("one value per subgroup expected".into()));
        }
        for h in 0..n {
            if parts.labels[h].len() != rank(h) {
                return Err(shape_error(format!("labels at subgroup {h}")));
            }
            for k in table.subgroups_of(h) {
                let r = parts.res.get(&(k, h)).ok_or_else(|| shape_error(format!("missing res {k} <= {h}")))?;
                let t = parts.tr.get(&(k, h)).ok_or_else(|| shape_error(format!("missing tr {k} <= {h}")))?;
                if (r.rows(), r.cols()) != (rank(k), rank(h)) || (t.rows(), t.cols()) != (rank(h), rank(k)) {
                    return Err(shape_error(format!("map shape for {k} <= {h}")));
                }
            }
        }
        if parts.conj.len() != table.group().order() {
            return Err(shape_error("one conjugation family per element expected".into()));
        }
        for (g, row) in parts.conj.iter().enumerate() {
            for (h, c) in row.iter().enumerate() {
                let target = table.conjugate(g, h);
                if (c.rows(), c.cols()) != (rank(target), rank(h)) {
                    return Err(shape_error(format!("conjugation shape for element {g} on {h}")));
                }
            }
        }
        let reduce_all = |m: BTreeMap<(usize, usize), IntMatrix>| {
            m.into_iter().map(|(key, v)| (key, ring.reduce(&v))).collect()
        };
        Ok(MackeyFunctor {
            name: name.to_string(),
            ring,
            levels: parts.levels,
            labels: parts.labels,
            res: reduce_all(parts.res),
            tr: reduce_all(parts.tr),
            conj: parts
                .conj
                .into_iter()
                .map(|row| row.iter().map(|c| ring.reduce(c)).collect())
                .collect(),
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &Arc<SubgroupTable> {
        &self.table
    }

    pub fn value_ring(&self) -> ValueRing {
        self.ring
    }

    pub fn level(&self, s: usize) -> &AbelianGroupPresentation {
        &self.levels[s]
    }

    /// Number of coordinates at subgroup `s`.
    pub fn rank(&self, s: usize) -> usize {
        self.levels[s].generator_count()
    }

    /// Names of the generators at subgroup `s`.
    pub fn labels(&self, s: usize) -> &[String] {
        &self.labels[s]
    }

    /// `res^H_K: M(H) → M(K)`
    pub fn res(&self, k: usize, h: usize) -> Option<&IntMatrix> {
        self.res.get(&(k, h))
    }

    /// `tr_K^H: M(K) → M(H)`
    pub fn tr(&self, k: usize, h: usize) -> Option<&IntMatrix> {
        self.tr.get(&(k, h))
    }

    /// `c_g: M(H) → M(gHg⁻¹)`
    pub fn conj(&self, g: usize, h: usize) -> &IntMatrix {
        &self.conj[g][h]
    }

    /// Replaces a transfer matrix. Intended for building variants of the
    /// built-in functors, e.g. to exercise [`verify_mackey_axiom`].
    pub fn set_tr(&mut self, k: usize, h: usize, m: IntMatrix) -> Result<()> {
        let old = self.tr.get(&(k, h)).ok_or_else(|| Error::NotASubgroup(format!("{k} is not below {h}")))?;
        if (old.rows(), old.cols()) != (m.rows(), m.cols()) {
            return Err(Error::Parse("transfer matrix has the wrong shape".into()));
        }
        self.tr.insert((k, h), self.ring.reduce(&m));
        Ok(())
    }

    fn same(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        self.ring.reduce(a) == self.ring.reduce(b)
    }
}

/// Checks identities, inner conjugations, transitivity, functoriality and
/// equivariance of conjugation, and the double coset formula
/// `res^H_K tr^H_L = Σ_{KgL ⊆ H} tr^K_{K∩gLg⁻¹} c_g res^L_{g⁻¹Kg∩L}`
/// over all subgroups. Returns every failure found; empty means valid.
pub fn verify_mackey_axiom(m: &MackeyFunctor) -> Vec<Violation> {
    let t = &**m.table();
    let g = t.group();
    let n = t.len();
    let gens = g.generator_indices();
    let mut out = Vec::new();
    let mut fail = |identity: &'static str, subgroups: Vec<usize>, element: Option<usize>| {
        out.push(Violation {
            identity,
            subgroups,
            element,
        })
    };

    for h in 0..n {
        let id = IntMatrix::identity(m.rank(h));
        if !m.same(&m.res[&(h, h)], &id) {
            fail("restriction to itself is the identity", vec![h], None);
        }
        if !m.same(&m.tr[&(h, h)], &id) {
            fail("transfer from itself is the identity", vec![h], None);
        }
        for &x in t.subgroup(h).elements() {
            if !m.same(m.conj(x, h), &id) {
                fail("conjugation by an element of the subgroup is the identity", vec![h], Some(x));
            }
        }
        for k in t.subgroups_of(h) {
            for l in t.subgroups_of(k) {
                if !m.same(&(&m.res[&(l, k)] * &m.res[&(k, h)]), &m.res[&(l, h)]) {
                    fail("restriction is transitive", vec![h, k, l], None);
                }
                if !m.same(&(&m.tr[&(k, h)] * &m.tr[&(l, k)]), &m.tr[&(l, h)]) {
                    fail("transfer is transitive", vec![h, k, l], None);
                }
            }
        }
    }

    for &s in &gens {
        for x in 0..g.order() {
            let sx = g.mul(s, x);
            for h in 0..n {
                let lhs = m.conj(s, t.conjugate(x, h)) * m.conj(x, h);
                if !m.same(&lhs, m.conj(sx, h)) {
                    fail("conjugation composes", vec![h], Some(sx));
                }
            }
        }
        for h in 0..n {
            let gh = t.conjugate(s, h);
            for k in t.subgroups_of(h) {
                let gk = t.conjugate(s, k);
                let lhs = m.conj(s, k) * &m.res[&(k, h)];
                let rhs = &m.res[&(gk, gh)] * m.conj(s, h);
                if !m.same(&lhs, &rhs) {
                    fail("restriction commutes with conjugation", vec![h, k], Some(s));
                }
                let lhs = m.conj(s, h) * &m.tr[&(k, h)];
                let rhs = &m.tr[&(gk, gh)] * m.conj(s, k);
                if !m.same(&lhs, &rhs) {
                    fail("transfer commutes with conjugation", vec![h, k], Some(s));
                }
            }
        }
    }

    for h in 0..n {
        let below = t.subgroups_of(h);
        for &k in &below {
            for &l in &below {
                let lhs = &m.res[&(k, h)] * &m.tr[&(l, h)];
                let mut rhs = IntMatrix::zeros(m.rank(k), m.rank(l));
                for dc in t.double_cosets_in(h, k, l) {
                    let x = dc.representative;
                    let inner = t.intersection(t.conjugate(g.inv(x), k), l);
                    let term = &(&m.tr[&(dc.intersection, k)] * m.conj(x, inner)) * &m.res[&(inner, l)];
                    rhs = &rhs + &term;
                }
                if !m.same(&lhs, &rhs) {
                    fail("double coset formula", vec![h, k, l], None);
                }
            }
        }
    }
    out
}
