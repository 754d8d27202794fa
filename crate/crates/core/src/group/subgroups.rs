use std::collections::HashMap;
use std::sync::Arc;

use super::elemset::ElemSet;
use super::finite::FiniteGroup;
use crate::error::{Error, Result};

/// Default bound on the number of subgroups enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 10_000;

/// A subgroup of a fixed [`FiniteGroup`], by element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    mask: ElemSet,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mask(&self) -> &ElemSet {
        &self.mask
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }
}

/// One double coset `H g K` with its canonical (smallest) representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub representative: usize,
    pub size: usize,
    /// Index of `H ∩ g K g⁻¹` in the subgroup table.
    pub intersection: usize,
}

/// Every subgroup of a group, sorted by order and then element list, with
/// conjugacy classes and the subconjugacy relation between classes.
#[derive(Debug)]
pub struct SubgroupTable {
    group: Arc<FiniteGroup>,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<ElemSet, usize>,
    class_reps: Vec<usize>,
    class_of: Vec<usize>,
    subconjugacy: Vec<Vec<bool>>,
    witnesses: Vec<Vec<Option<usize>>>,
    // conj[g][s] = index of g s g⁻¹
    conj: Vec<Vec<usize>>,
}

impl SubgroupTable {
    pub fn new(group: Arc<FiniteGroup>) -> Result<Self> {
        Self::with_cap(group, DEFAULT_SUBGROUP_CAP)
    }

    /// Enumerates subgroups by cyclic extension: start from the cyclic
    /// subgroups and repeatedly adjoin a cyclic generator to known ones.
    pub fn with_cap(group: Arc<FiniteGroup>, cap: usize) -> Result<Self> {
        let g = &*group;
        let n = g.order();
        let mut found: HashMap<ElemSet, usize> = HashMap::new();
        let mut subgroups: Vec<Subgroup> = Vec::new();
        let mut cyclic_gens: Vec<usize> = Vec::new();
        let push = |gens: Vec<usize>, found: &mut HashMap<ElemSet, usize>, subgroups: &mut Vec<Subgroup>| {
            let (elements, mask) = g.generate(&gens);
            if found.contains_key(&mask) {
                return Ok(false);
            }
            if subgroups.len() >= cap {
                return Err(Error::SubgroupCapExceeded { cap });
            }
            found.insert(mask.clone(), subgroups.len());
            let generators = g.generating_set(&elements);
            subgroups.push(Subgroup {
                mask,
                elements,
                generators,
            });
            Ok(true)
        };
        push(vec![], &mut found, &mut subgroups)?;
        for x in 0..n {
            if x != g.identity() && push(vec![x], &mut found, &mut subgroups)? {
                cyclic_gens.push(x);
            }
        }
        let mut next = 0;
        while next < subgroups.len() {
            let base = subgroups[next].clone();
            next += 1;
            for &c in &cyclic_gens {
                if base.contains(c) {
                    continue;
                }
                let mut gens = base.generators.clone();
                gens.push(c);
                push(gens, &mut found, &mut subgroups)?;
            }
        }

        subgroups.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        let lookup: HashMap<ElemSet, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s.mask.clone(), i)).collect();

        let conj: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                subgroups
                    .iter()
                    .map(|s| {
                        let m = ElemSet::from_indices(n, s.elements.iter().map(|&e| g.conjugate(x, e)));
                        lookup[&m]
                    })
                    .collect()
            })
            .collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut class_reps = Vec::new();
        for s in 0..subgroups.len() {
            if class_of[s] != usize::MAX {
                continue;
            }
            let c = class_reps.len();
            class_reps.push(s);
            for row in &conj {
                class_of[row[s]] = c;
            }
        }

        let k = class_reps.len();
        let mut subconjugacy = vec![vec![false; k]; k];
        let mut witnesses = vec![vec![None; k]; k];
        for (a, &ka) in class_reps.iter().enumerate() {
            for (b, &hb) in class_reps.iter().enumerate() {
                if subgroups[ka].order() > subgroups[hb].order() || !subgroups[hb].order().is_multiple_of(subgroups[ka].order()) {
                    continue;
                }
                if let Some(x) = (0..n).find(|&x| subgroups[conj[x][ka]].is_subgroup_of(&subgroups[hb])) {
                    subconjugacy[a][b] = true;
                    witnesses[a][b] = Some(x);
                }
            }
        }

        Ok(SubgroupTable {
            group,
            subgroups,
            lookup,
            class_reps,
            class_of,
            subconjugacy,
            witnesses,
            conj,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, s: usize) -> &Subgroup {
        &self.subgroups[s]
    }

    /// Index of the trivial subgroup.
    pub fn trivial(&self) -> usize {
        0
    }

    /// Index of the whole group.
    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn index_of(&self, mask: &ElemSet) -> Option<usize> {
        self.lookup.get(mask).copied()
    }

    /// Index of the subgroup with exactly these members, if they form one.
    pub fn find(&self, members: &[usize]) -> Result<usize> {
        let mask = ElemSet::from_indices(self.group.order(), members.iter().copied());
        self.index_of(&mask)
            .ok_or_else(|| Error::NotASubgroup(format!("{members:?} is not a subgroup")))
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn class_rep(&self, class: usize) -> Result<usize> {
        self.class_reps.get(class).copied().ok_or(Error::ClassOutOfRange {
            index: class,
            count: self.class_reps.len(),
        })
    }

    pub fn class_of(&self, s: usize) -> usize {
        self.class_of[s]
    }

    /// Members of a conjugacy class, in table order.
    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.class_of[s] == class).collect()
    }

    /// Whether some conjugate of class `k` lies in class `h`.
    pub fn is_subconjugate(&self, k: usize, h: usize) -> bool {
        self.subconjugacy[k][h]
    }

    pub fn subconjugacy(&self) -> &[Vec<bool>] {
        &self.subconjugacy
    }

    /// The smallest `g` with `g K g⁻¹ ⊆ H` for class representatives `K`, `H`.
    pub fn witness(&self, k: usize, h: usize) -> Option<usize> {
        self.witnesses[k][h]
    }

    /// Index of `g S g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, s: usize) -> usize {
        self.conj[g][s]
    }

    pub fn contains(&self, big: usize, small: usize) -> bool {
        self.subgroups[small].is_subgroup_of(&self.subgroups[big])
    }

    pub fn intersection(&self, a: usize, b: usize) -> usize {
        let m = self.subgroups[a].mask.intersection(&self.subgroups[b].mask);
        self.lookup[&m]
    }

    /// Subgroups of `s` (including `s`), in table order.
    pub fn subgroups_of(&self, s: usize) -> Vec<usize> {
        (0..=s).filter(|&t| self.contains(s, t)).collect()
    }

    /// Index-two subgroups of `s`, in table order.
    pub fn index_two_subgroups(&self, s: usize) -> Vec<usize> {
        let order = self.subgroups[s].order();
        self.subgroups_of(s)
            .into_iter()
            .filter(|&t| 2 * self.subgroups[t].order() == order)
            .collect()
    }

    pub fn normalizer(&self, s: usize) -> usize {
        let members: Vec<usize> = (0..self.group.order()).filter(|&g| self.conj[g][s] == s).collect();
        self.find(&members).expect("normalizer is a subgroup")
    }

    pub fn weyl_order(&self, s: usize) -> usize {
        self.subgroups[self.normalizer(s)].order() / self.subgroups[s].order()
    }

    /// Double cosets `H g K` inside the subgroup `ambient` (which must
    /// contain `H` and `K`), representatives in increasing element order.
    pub fn double_cosets_in(&self, ambient: usize, h: usize, k: usize) -> Vec<DoubleCoset> {
        let g = &*self.group;
        let hs = &self.subgroups[h];
        let ks = &self.subgroups[k];
        let mut covered = ElemSet::empty(g.order());
        let mut out = Vec::new();
        for &x in self.subgroups[ambient].elements() {
            if covered.contains(x) {
                continue;
            }
            let mut size = 0;
            for &a in hs.elements() {
                let ax = g.mul(a, x);
                for &b in ks.elements() {
                    if covered.insert(g.mul(ax, b)) {
                        size += 1;
                    }
                }
            }
            out.push(DoubleCoset {
                representative: x,
                size,
                intersection: self.intersection(h, self.conj[x][k]),
            });
        }
        out
    }

    /// Double cosets `H g K` in the whole group.
    pub fn double_cosets(&self, h: usize, k: usize) -> Vec<DoubleCoset> {
        self.double_cosets_in(self.whole(), h, k)
    }

    /// Left coset representatives `x` of `x·S` inside `ambient`.
    pub fn left_coset_reps(&self, ambient: usize, s: usize) -> Vec<usize> {
        let g = &*self.group;
        let mut covered = ElemSet::empty(g.order());
        let mut reps = Vec::new();
        for &x in self.subgroups[ambient].elements() {
            if covered.contains(x) {
                continue;
            }
            reps.push(x);
            for &y in self.subgroups[s].elements() {
                covered.insert(g.mul(x, y));
            }
        }
        reps
    }

    /// Right coset representatives `x` of `S·x` inside `ambient`.
    pub fn right_coset_reps(&self, ambient: usize, s: usize) -> Vec<usize> {
        let g = &*self.group;
        let mut covered = ElemSet::empty(g.order());
        let mut reps = Vec::new();
        for &x in self.subgroups[ambient].elements() {
            if covered.contains(x) {
                continue;
            }
            reps.push(x);
            for &y in self.subgroups[s].elements() {
                covered.insert(g.mul(y, x));
            }
        }
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin::named;

    fn table(name: &str) -> SubgroupTable {
        SubgroupTable::new(Arc::new(named(name).unwrap())).unwrap()
    }

    #[test]
    fn small_counts() {
        let t = table("C2");
        assert_eq!((t.len(), t.class_count()), (2, 2));
        let t = table("C2xC2");
        assert_eq!((t.len(), t.class_count()), (5, 5));
        let t = table("S3");
        assert_eq!((t.len(), t.class_count()), (6, 4));
        let t = table("S4");
        assert_eq!((t.len(), t.class_count()), (30, 11));
        let t = table("D4");
        assert_eq!((t.len(), t.class_count()), (10, 8));
        let t = table("Q8");
        assert_eq!((t.len(), t.class_count()), (6, 6));
    }

    #[test]
    fn class_reps_are_sorted_by_order() {
        let t = table("S4");
        let orders: Vec<usize> = t.class_reps().iter().map(|&s| t.subgroup(s).order()).collect();
        assert!(orders.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(t.subgroup(t.trivial()).order(), 1);
        assert_eq!(t.subgroup(t.whole()).order(), 24);
    }

    #[test]
    fn normalizers_and_weyl_orders() {
        let t = table("S3");
        let g = t.group().clone();
        let swap = g.index_of(&crate::group::Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let h = t.find(&g.generate(&[swap]).0).unwrap();
        assert_eq!(t.normalizer(h), h);
        assert_eq!(t.weyl_order(h), 1);
        assert_eq!(t.normalizer(t.whole()), t.whole());
        assert_eq!(t.weyl_order(t.whole()), 1);

        let t = table("C2xC2");
        for s in 0..t.len() {
            if t.subgroup(s).order() == 2 {
                assert_eq!(t.normalizer(s), t.whole());
                assert_eq!(t.weyl_order(s), 2);
            }
        }
    }

    #[test]
    fn double_coset_examples() {
        let t = table("S3");
        let g = t.group().clone();
        let swap = g.index_of(&crate::group::Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let h = t.find(&g.generate(&[swap]).0).unwrap();
        let dc = t.double_cosets(h, h);
        assert_eq!(dc.len(), 2);
        let mut orders: Vec<usize> = dc.iter().map(|d| t.subgroup(d.intersection).order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2]);

        let t = table("C2");
        assert_eq!(t.double_cosets(t.trivial(), t.trivial()).len(), 2);
        let whole = t.double_cosets(t.whole(), t.whole());
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].intersection, t.whole());
    }

    #[test]
    fn subconjugacy_implies_order_divisibility() {
        let t = table("S4");
        for a in 0..t.class_count() {
            for b in 0..t.class_count() {
                if t.is_subconjugate(a, b) {
                    let (ka, hb) = (t.class_reps()[a], t.class_reps()[b]);
                    assert!(t.subgroup(ka).order() <= t.subgroup(hb).order());
                    let w = t.witness(a, b).unwrap();
                    assert!(t.contains(hb, t.conjugate(w, ka)));
                }
            }
        }
    }
}
