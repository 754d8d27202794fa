use std::collections::BTreeSet;

use super::finite::FiniteGroup;
use super::subgroups::Subgroup;

/// A homomorphism from a subgroup `H ≤ G` to a group `Π`.
///
/// `source` lists the element indices of `H` in `G` (sorted); `images` are
/// the corresponding element indices in `Π`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupHom {
    source: Vec<usize>,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, g: usize) -> Option<usize> {
        self.source.binary_search(&g).ok().map(|i| self.images[i])
    }

    pub fn is_trivial(&self, target: &FiniteGroup) -> bool {
        self.images.iter().all(|&x| x == target.identity())
    }

    /// The image as a sorted set of element indices of `Π`.
    pub fn image_set(&self) -> Vec<usize> {
        self.images.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// `π θ π⁻¹`
    pub fn conjugated(&self, target: &FiniteGroup, pi: usize) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            images: self.images.iter().map(|&x| target.conjugate(pi, x)).collect(),
        }
    }

    /// The composite `k ↦ θ(g k g⁻¹)` on a subgroup `K` with `g K g⁻¹ ⊆ H`.
    pub fn pull_back(&self, group: &FiniteGroup, k: &Subgroup, g: usize) -> Option<GroupHom> {
        let images = k
            .elements()
            .iter()
            .map(|&x| self.image(group.conjugate(g, x)))
            .collect::<Option<Vec<_>>>()?;
        Some(GroupHom {
            source: k.elements().to_vec(),
            images,
        })
    }

    /// Checks `θ(ab) = θ(a)θ(b)` on all pairs of source elements.
    pub fn is_homomorphism(&self, group: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.source.iter().enumerate().all(|(i, &a)| {
            self.source.iter().enumerate().all(|(j, &b)| {
                self.image(group.mul(a, b)) == Some(target.mul(self.images[i], self.images[j]))
            })
        })
    }
}

/// A `Π`-conjugacy class of homomorphisms `H → Π`.
#[derive(Clone, Debug)]
pub struct HomClass {
    pub representative: GroupHom,
    pub members: Vec<GroupHom>,
    /// `Z(θ)`: elements of `Π` commuting with the image of the representative.
    pub centralizer: Vec<usize>,
}

impl HomClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, theta: &GroupHom) -> bool {
        self.members.binary_search(theta).is_ok()
    }
}

/// Every homomorphism `H → Π`, in lexicographic order of the images of the
/// generators of `H`.
pub fn hom_enumerate(group: &FiniteGroup, source: &Subgroup, target: &FiniteGroup) -> Vec<GroupHom> {
    let gens = source.generators();
    let elements = source.elements();
    let pos = |g: usize| elements.binary_search(&g).expect("element of the source subgroup");
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(images) = extend(group, target, elements, gens, &choice, &pos) {
            let theta = GroupHom {
                source: elements.to_vec(),
                images,
            };
            if theta.is_homomorphism(group, target) {
                out.push(theta);
            }
        }
        // odometer, last generator fastest
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < target.order() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn extend(
    group: &FiniteGroup,
    target: &FiniteGroup,
    elements: &[usize],
    gens: &[usize],
    choice: &[usize],
    pos: &impl Fn(usize) -> usize,
) -> Option<Vec<usize>> {
    let mut images = vec![usize::MAX; elements.len()];
    images[pos(group.identity())] = target.identity();
    let mut queue = vec![group.identity()];
    while let Some(x) = queue.pop() {
        let fx = images[pos(x)];
        for (&s, &t) in gens.iter().zip(choice) {
            let y = group.mul(x, s);
            let fy = target.mul(fx, t);
            let slot = &mut images[pos(y)];
            if *slot == usize::MAX {
                *slot = fy;
                queue.push(y);
            } else if *slot != fy {
                return None;
            }
        }
    }
    Some(images)
}

/// Homomorphisms `H → Π` up to `Π`-conjugation, with class sizes and the
/// centralizer `Z(θ)` of each representative's image.
pub fn hom_classes(group: &FiniteGroup, source: &Subgroup, target: &FiniteGroup) -> Vec<HomClass> {
    let homs = hom_enumerate(group, source, target);
    let mut taken = vec![false; homs.len()];
    let mut classes = Vec::new();
    for i in 0..homs.len() {
        if taken[i] {
            continue;
        }
        let rep = homs[i].clone();
        let orbit: BTreeSet<GroupHom> = (0..target.order()).map(|p| rep.conjugated(target, p)).collect();
        for (j, h) in homs.iter().enumerate().skip(i) {
            if orbit.contains(h) {
                taken[j] = true;
            }
        }
        let image = rep.image_set();
        let centralizer = (0..target.order())
            .filter(|&p| image.iter().all(|&x| target.mul(p, x) == target.mul(x, p)))
            .collect();
        classes.push(HomClass {
            representative: rep,
            members: orbit.into_iter().collect(),
            centralizer,
        });
    }
    classes
}

/// Index of the class containing `theta`.
pub fn classify(classes: &[HomClass], theta: &GroupHom) -> Option<usize> {
    classes.iter().position(|c| c.contains(theta))
}
