use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::matrix::Matrix;
use crate::scalar::FieldScalar;

/// A linear representation given by one matrix per group element.
#[derive(Clone, Debug)]
pub struct Rep<T> {
    group: Arc<FiniteGroup>,
    dim: usize,
    matrices: Vec<Matrix<T>>,
}

impl<T: FieldScalar> Rep<T> {
    /// Checks that `matrices` (indexed like the group's elements) form a
    /// homomorphism on every pair of elements.
    pub fn from_matrices(group: Arc<FiniteGroup>, dim: usize, matrices: Vec<Matrix<T>>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        if let Some(m) = matrices.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidRepresentation(format!(
                "matrix of shape {}x{} in a representation of dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        if matrices[group.identity()] != Matrix::identity(dim) {
            return Err(Error::InvalidRepresentation("identity does not act trivially".into()));
        }
        let n = group.order();
        for a in 0..n {
            for b in 0..n {
                if &matrices[a] * &matrices[b] != matrices[group.mul(a, b)] {
                    return Err(Error::InvalidRepresentation(format!(
                        "not multiplicative on elements {a} and {b}"
                    )));
                }
            }
        }
        Ok(Rep { group, dim, matrices })
    }

    /// Extends matrices for the group's generators along the Cayley graph,
    /// failing if two paths to the same element disagree.
    pub fn from_generators(group: Arc<FiniteGroup>, dim: usize, generators: Vec<Matrix<T>>) -> Result<Self> {
        let gens = group.generator_indices();
        if generators.len() != gens.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} generator matrices for {} generators",
                generators.len(),
                gens.len()
            )));
        }
        if let Some(m) = generators.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidRepresentation(format!(
                "generator matrix of shape {}x{} in dimension {dim}",
                m.rows(),
                m.cols()
            )));
        }
        let mut matrices: Vec<Option<Matrix<T>>> = vec![None; group.order()];
        matrices[group.identity()] = Some(Matrix::identity(dim));
        let mut queue = std::collections::VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            let mx = matrices[x].clone().expect("visited");
            for (&s, ms) in gens.iter().zip(&generators) {
                let y = group.mul(x, s);
                let my = &mx * ms;
                match &matrices[y] {
                    None => {
                        matrices[y] = Some(my);
                        queue.push_back(y);
                    }
                    Some(existing) if *existing != my => {
                        return Err(Error::InvalidRepresentation(
                            "generator matrices do not satisfy the group relations".into(),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
        let matrices = matrices.into_iter().map(|m| m.expect("generators generate")).collect();
        Ok(Rep { group, dim, matrices })
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let matrices = vec![Matrix::identity(1); group.order()];
        Rep { group, dim: 1, matrices }
    }

    /// The zero-dimensional representation.
    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let matrices = vec![Matrix::zeros(0, 0); group.order()];
        Rep { group, dim: 0, matrices }
    }

    /// Left multiplication on the basis `{e_x : x ∈ G}`.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let matrices = (0..n)
            .map(|g| Matrix::from_fn(n, n, |i, j| if group.mul(g, j) == i { T::one() } else { T::zero() }))
            .collect();
        Rep { group, dim: n, matrices }
    }

    /// The natural permutation representation on the points the group acts on.
    pub fn permutation(group: Arc<FiniteGroup>) -> Self {
        let d = group.degree();
        let matrices = group
            .elements()
            .iter()
            .map(|p| Matrix::from_fn(d, d, |i, j| if p.apply(j) == i { T::one() } else { T::zero() }))
            .collect();
        Rep { group, dim: d, matrices }
    }

    /// The one-dimensional representation with kernel `h`, which must have
    /// index two.
    pub fn sign(group: Arc<FiniteGroup>, h: &Subgroup) -> Result<Self> {
        if 2 * h.order() != group.order() {
            return Err(Error::NotIndexTwo);
        }
        let matrices = (0..group.order())
            .map(|g| {
                let v = if h.contains(g) { T::one() } else { -T::one() };
                Matrix::from_rows(vec![vec![v]])
            })
            .collect();
        Ok(Rep { group, dim: 1, matrices })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix<T> {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.matrices
    }

    /// `χ(g) = tr ρ(g)` for every element.
    pub fn traces(&self) -> Vec<T> {
        self.matrices.iter().map(Matrix::trace).collect()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::InvalidRepresentation("representations of different groups".into()))
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Rep {
            group: self.group.clone(),
            dim: self.dim + other.dim,
            matrices: self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.direct_sum(b)).collect(),
        })
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Rep {
            group: self.group.clone(),
            dim: self.dim * other.dim,
            matrices: self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.kron(b)).collect(),
        })
    }

    /// `n` copies of `self`.
    pub fn multiple(&self, n: usize) -> Self {
        (0..n).fold(Self::zero(self.group.clone()), |acc, _| {
            acc.direct_sum(self).expect("same group")
        })
    }

    /// The external tensor product `self ⊠ other`, a representation of
    /// `A × B` where `self` is over `A` and `other` over `B`. Element
    /// `(a, b)` has index `a·|B| + b`.
    pub fn external(&self, other: &Self) -> Self {
        let product = Arc::new(FiniteGroup::direct_product(&self.group, &other.group));
        let nb = other.group.order();
        let matrices = (0..product.order())
            .map(|x| self.matrices[x / nb].kron(&other.matrices[x % nb]))
            .collect();
        Rep {
            group: product,
            dim: self.dim * other.dim,
            matrices,
        }
    }

    /// `P ρ(g) P⁻¹`
    pub fn conjugated_by(&self, p: &Matrix<T>) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidRepresentation("conjugating matrix is singular".into()))?;
        Ok(Rep {
            group: self.group.clone(),
            dim: self.dim,
            matrices: self.matrices.iter().map(|m| &(p * m) * &inv).collect(),
        })
    }
}
