use crate::group::FiniteGroup;
use crate::scalar::FieldScalar;

use super::rep::Rep;

/// A class function on a subgroup: one value per conjugacy class of the
/// subgroup (conjugation within the subgroup itself).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character<T> {
    /// Conjugacy classes as sorted element lists, ordered by least element.
    pub classes: Vec<Vec<usize>>,
    pub values: Vec<T>,
}

impl<T: FieldScalar> Character<T> {
    /// Character of `rep` restricted to the subgroup with the given members.
    pub fn of_restriction(rep: &Rep<T>, members: &[usize]) -> Self {
        Self::from_fn(rep.group(), members, |g| rep.matrix(g).trace())
    }

    pub fn of(rep: &Rep<T>) -> Self {
        let all: Vec<usize> = (0..rep.group().order()).collect();
        Self::of_restriction(rep, &all)
    }

    /// Evaluates `f` at the least element of each class.
    pub fn from_fn(group: &FiniteGroup, members: &[usize], f: impl Fn(usize) -> T) -> Self {
        let classes = group.conjugacy_classes_within(members);
        let values = classes.iter().map(|c| f(c[0])).collect();
        Character { classes, values }
    }

    pub fn value_at(&self, g: usize) -> Option<&T> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&g).is_ok())
            .map(|i| &self.values[i])
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, group: &FiniteGroup, members: &[usize]) -> Self {
        Self::from_fn(group, members, |g| self.value_at(g).expect("element of the domain").clone())
    }
}
