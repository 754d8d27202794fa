use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::elemset::ElemSet;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default bound on group orders accepted by [`FiniteGroup::close`].
pub const DEFAULT_ORDER_CAP: usize = 2000;

/// A finite permutation group with its elements listed in lexicographic
/// order of their image sequences and a full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

/// JSON input form: `{"degree": n, "generators": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Closes a generator list under composition.
    pub fn close(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} but the group degree is {degree}",
                g.degree()
            )));
        }
        let id = Perm::identity(degree);
        let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in &generators {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    frontier.push(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_iter().collect();
        Ok(Self::from_sorted_elements(degree, generators, elements))
    }

    pub fn from_spec(spec: &GroupSpec, cap: usize) -> Result<Self> {
        let gens = spec
            .generators
            .iter()
            .map(|g| {
                if g.len() != spec.degree {
                    return Err(Error::InvalidPermutation(format!(
                        "generator {g:?} does not have length {}",
                        spec.degree
                    )));
                }
                Perm::new(g.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::close(spec.degree, gens, cap)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.images().to_vec()).collect(),
        }
    }

    fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let n = elements.len();
        let index = |p: &Perm| elements.binary_search(p).expect("closed set");
        let mut mult = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mult.push(index(&a.compose(b)));
            }
        }
        let inverse = elements.iter().map(|p| index(&p.inverse())).collect();
        let identity = index(&Perm::identity(degree));
        FiniteGroup {
            degree,
            generators,
            elements,
            mult,
            inverse,
            identity,
        }
    }

    /// The direct product `A × B` acting on disjoint blocks of points.
    /// The element `(a_i, b_j)` has index `i·|B| + j`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let degree = a.degree + b.degree;
        let lift = |p: &Perm, q: &Perm| {
            let mut images = p.images().to_vec();
            images.extend(q.images().iter().map(|x| x + a.degree));
            Perm::new(images).expect("block permutation")
        };
        let mut generators: Vec<Perm> = a.generators.iter().map(|g| lift(g, &b.elements[b.identity])).collect();
        generators.extend(b.generators.iter().map(|g| lift(&a.elements[a.identity], g)));
        let elements: Vec<Perm> = a
            .elements
            .iter()
            .flat_map(|p| b.elements.iter().map(move |q| (p, q)))
            .map(|(p, q)| lift(p, q))
            .collect();
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let nb = b.order();
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (i1, j1) = (x / nb, x % nb);
                let (i2, j2) = (y / nb, y % nb);
                mult.push(a.mul(i1, i2) * nb + b.mul(j1, j2));
            }
        }
        let inverse = (0..n).map(|x| a.inv(x / nb) * nb + b.inv(x % nb)).collect();
        FiniteGroup {
            degree,
            generators,
            elements,
            mult,
            inverse,
            identity: a.identity * nb + b.identity,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Indices of the generators in the element list.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index_of(g).expect("generator is an element")).collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.elements.len() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by the given element indices, as a sorted
    /// element list together with its membership set.
    pub fn generate(&self, gens: &[usize]) -> (Vec<usize>, ElemSet) {
        let mut set = ElemSet::from_indices(self.order(), [self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        (set.iter().collect(), set)
    }

    /// A small generating set of the subgroup with the given members:
    /// greedily adds the smallest element not yet generated.
    pub fn generating_set(&self, members: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElemSet::from_indices(self.order(), [self.identity]);
        for &m in members {
            if !span.contains(m) {
                gens.push(m);
                span = self.generate(&gens).1;
            }
        }
        gens
    }

    /// Conjugacy classes of `members` (a subgroup) under conjugation by
    /// `members`, each sorted, ordered by smallest element.
    pub fn conjugacy_classes_within(&self, members: &[usize]) -> Vec<Vec<usize>> {
        let mut assigned = ElemSet::empty(self.order());
        let mut classes = Vec::new();
        for &x in members {
            if assigned.contains(x) {
                continue;
            }
            let mut class: BTreeSet<usize> = BTreeSet::new();
            for &h in members {
                class.insert(self.conjugate(h, x));
            }
            for &c in &class {
                assigned.insert(c);
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.order()).collect();
        self.conjugacy_classes_within(&all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn closes_involution_and_trivial() {
        let c2 = FiniteGroup::close(2, vec![perm(2, &[&[0, 1]])], 100).unwrap();
        assert_eq!(c2.order(), 2);
        let e = FiniteGroup::close(1, vec![], 100).unwrap();
        assert_eq!(e.order(), 1);
        assert_eq!(e.identity(), 0);
    }

    #[test]
    fn klein_four_matches_bruteforce_closure() {
        let gens = vec![perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])];
        let g = FiniteGroup::close(4, gens.clone(), 100).unwrap();
        // brute-force: repeatedly compose everything with everything until stable
        let mut set: BTreeSet<Perm> = gens.into_iter().collect();
        set.insert(Perm::identity(4));
        loop {
            let before = set.len();
            let cur: Vec<Perm> = set.iter().cloned().collect();
            for a in &cur {
                for b in &cur {
                    set.insert(a.compose(b));
                }
            }
            if set.len() == before {
                break;
            }
        }
        assert_eq!(g.order(), 4);
        assert_eq!(set.into_iter().collect::<Vec<_>>(), g.elements().to_vec());
    }

    #[test]
    fn cap_and_invalid_generators() {
        let s4 = vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])];
        assert_eq!(FiniteGroup::close(4, s4, 10), Err(Error::OrderCapExceeded { cap: 10 }));
        let bad = GroupSpec {
            degree: 2,
            generators: vec![vec![1, 1]],
        };
        assert!(matches!(FiniteGroup::from_spec(&bad, 10), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn multiplication_table_is_associative_and_indexed() {
        let g = FiniteGroup::close(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], 100).unwrap();
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn direct_product_indexing() {
        let c2 = FiniteGroup::close(2, vec![perm(2, &[&[0, 1]])], 10).unwrap();
        let c3 = FiniteGroup::close(3, vec![perm(3, &[&[0, 1, 2]])], 10).unwrap();
        let p = FiniteGroup::direct_product(&c2, &c3);
        let closed = FiniteGroup::close(5, p.generators().to_vec(), 100).unwrap();
        assert_eq!(p.elements(), closed.elements());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(p.mul(x, y), closed.mul(x, y));
            }
        }
    }
}
