use num_bigint::BigInt;

use crate::group::SubgroupTable;
use crate::IntMatrix;

/// The table of marks of one subgroup `H` of the ambient group.
///
/// Classes are the `H`-conjugacy classes of subgroups of `H`, each
/// represented by its first member in subgroup-table order, so class `0` is
/// the trivial subgroup and the last class is `H` itself. Row `i` holds the
/// marks of `[H/L_i]`: `marks[i][j] = |(H/L_i)^{L_j}|`.
#[derive(Clone, Debug)]
pub struct TableOfMarks {
    level: usize,
    classes: Vec<usize>,
    class_of: Vec<Option<usize>>,
    marks: IntMatrix,
}

impl TableOfMarks {
    pub fn new(table: &SubgroupTable, level: usize) -> Self {
        let g = table.group();
        let members = table.subgroup(level).elements();
        let mut class_of = vec![None; table.len()];
        let mut classes = Vec::new();
        for s in table.subgroups_of(level) {
            if class_of[s].is_some() {
                continue;
            }
            for &h in members {
                class_of[table.conjugate(h, s)] = Some(classes.len());
            }
            classes.push(s);
        }
        let marks = IntMatrix::from_fn(classes.len(), classes.len(), |i, j| {
            let (l, k) = (classes[i], classes[j]);
            let fixed = members
                .iter()
                .filter(|&&h| table.contains(l, table.conjugate(g.inv(h), k)))
                .count();
            BigInt::from(fixed / table.subgroup(l).order())
        });
        TableOfMarks {
            level,
            classes,
            class_of,
            marks,
        }
    }

    /// Global subgroup index of the group whose marks these are.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Global subgroup indices of the class representatives.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    /// Local class of a subgroup of `H` given by global index.
    pub fn class_of(&self, subgroup: usize) -> Option<usize> {
        self.class_of.get(subgroup).copied().flatten()
    }

    pub fn mark(&self, i: usize, j: usize) -> &BigInt {
        &self.marks[(i, j)]
    }

    pub fn marks(&self) -> &IntMatrix {
        &self.marks
    }
}
