use std::sync::Arc;

use crate::group::{classify, hom_classes, FiniteGroup, HomClass, SubgroupTable};

/// One component `BZ(θ)` of `(B_G Π)^H`.
#[derive(Clone, Debug)]
pub struct Component {
    /// Images of the generators of `H` under the representative `θ`.
    pub generator_images: Vec<usize>,
    /// Number of homomorphisms in the `Π`-conjugacy class.
    pub class_size: usize,
    pub centralizer_order: usize,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct Pi0Level {
    /// Global index of the class representative `H`.
    pub subgroup: usize,
    pub components: Vec<Component>,
    classes: Vec<HomClass>,
}

/// Components of the fixed points `(B_G Π)^H` for each class of subgroups
/// `H`, indexed by `Π`-conjugacy classes of homomorphisms `H → Π`, with the
/// restriction maps `θ ↦ θ|_K` between levels.
#[derive(Clone, Debug)]
pub struct Pi0Data {
    table: Arc<SubgroupTable>,
    structure: Arc<FiniteGroup>,
    levels: Vec<Pi0Level>,
}

pub fn classifying_pi0(table: &Arc<SubgroupTable>, structure: &Arc<FiniteGroup>) -> Pi0Data {
    let group = table.group();
    let levels = table
        .class_reps()
        .iter()
        .map(|&h| {
            let sub = table.subgroup(h);
            let classes = hom_classes(group, sub, structure);
            let components = classes
                .iter()
                .map(|c| {
                    let generator_images: Vec<usize> = sub
                        .generators()
                        .iter()
                        .map(|&x| c.representative.image(x).expect("generator in source"))
                        .collect();
                    let label = if generator_images.is_empty() {
                        "trivial".to_string()
                    } else {
                        let pairs: Vec<String> = sub
                            .generators()
                            .iter()
                            .zip(&generator_images)
                            .map(|(g, p)| format!("{g}->{p}"))
                            .collect();
                        pairs.join(", ")
                    };
                    Component {
                        generator_images,
                        class_size: c.size(),
                        centralizer_order: c.centralizer.len(),
                        label,
                    }
                })
                .collect();
            Pi0Level {
                subgroup: h,
                components,
                classes,
            }
        })
        .collect();
    Pi0Data {
        table: table.clone(),
        structure: structure.clone(),
        levels,
    }
}

impl Pi0Data {
    pub fn table(&self) -> &Arc<SubgroupTable> {
        &self.table
    }

    pub fn structure(&self) -> &Arc<FiniteGroup> {
        &self.structure
    }

    /// One level per class of subgroups, in class order.
    pub fn levels(&self) -> &[Pi0Level] {
        &self.levels
    }

    pub fn component_counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.components.len()).collect()
    }

    /// For classes `k`, `h` whose representatives satisfy `K ⊆ H`, the
    /// component of level `k` reached from each component of level `h`.
    pub fn restriction(&self, k: usize, h: usize) -> Option<Vec<usize>> {
        let (lk, lh) = (&self.levels[k], &self.levels[h]);
        if !self.table.contains(lh.subgroup, lk.subgroup) {
            return None;
        }
        let group = self.table.group();
        let small = self.table.subgroup(lk.subgroup);
        lh.classes
            .iter()
            .map(|c| {
                let theta = c.representative.pull_back(group, small, group.identity())?;
                classify(&lk.classes, &theta)
            })
            .collect()
    }

    /// Whether restriction along `K ⊆ L ⊆ H` agrees with the composite of
    /// the two steps, for all chains of class representatives.
    pub fn restrictions_compose(&self) -> bool {
        let n = self.levels.len();
        (0..n).all(|h| {
            (0..n).all(|l| {
                (0..n).all(|k| match (self.restriction(k, h), self.restriction(l, h), self.restriction(k, l)) {
                    (Some(direct), Some(first), Some(second)) => first.iter().map(|&c| second[c]).eq(direct),
                    _ => true,
                })
            })
        })
    }
}
