use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::marks::TableOfMarks;
use crate::error::{Error, Result};
use crate::group::SubgroupTable;

/// The Burnside ring `A_H` of a subgroup `H` of the ambient group.
#[derive(Debug)]
pub struct BurnsideRing {
    table: Arc<SubgroupTable>,
    marks: TableOfMarks,
}

impl BurnsideRing {
    pub fn new(table: Arc<SubgroupTable>, level: usize) -> Arc<Self> {
        let marks = TableOfMarks::new(&table, level);
        Arc::new(BurnsideRing { table, marks })
    }

    pub fn table(&self) -> &Arc<SubgroupTable> {
        &self.table
    }

    pub fn marks(&self) -> &TableOfMarks {
        &self.marks
    }

    /// Global subgroup index of `H`.
    pub fn level(&self) -> usize {
        self.marks.level()
    }

    pub fn rank(&self) -> usize {
        self.marks.class_count()
    }

    /// Order of the group `H` itself.
    pub fn group_order(&self) -> usize {
        self.table.subgroup(self.level()).order()
    }

    fn same(&self, other: &BurnsideRing) -> bool {
        Arc::ptr_eq(&self.table, &other.table) && self.level() == other.level()
    }
}

/// A virtual `H`-set `Σ c_i [H/L_i]`, coefficients indexed by local classes.
#[derive(Clone)]
pub struct BurnsideElement {
    ring: Arc<BurnsideRing>,
    coeffs: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn from_coeffs(ring: &Arc<BurnsideRing>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != ring.rank() {
            return Err(Error::Parse(format!(
                "expected {} coefficients, got {}",
                ring.rank(),
                coeffs.len()
            )));
        }
        Ok(BurnsideElement {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn zero(ring: &Arc<BurnsideRing>) -> Self {
        BurnsideElement {
            ring: ring.clone(),
            coeffs: vec![BigInt::zero(); ring.rank()],
        }
    }

    /// The integer `n`, i.e. `n·[H/H]`.
    pub fn integer(ring: &Arc<BurnsideRing>, n: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(ring);
        let last = ring.rank() - 1;
        x.coeffs[last] = n.into();
        x
    }

    pub fn one(ring: &Arc<BurnsideRing>) -> Self {
        Self::integer(ring, 1)
    }

    /// The transitive set `[H/L_i]`.
    pub fn basis(ring: &Arc<BurnsideRing>, class: usize) -> Result<Self> {
        if class >= ring.rank() {
            return Err(Error::ClassOutOfRange {
                index: class,
                count: ring.rank(),
            });
        }
        let mut x = Self::zero(ring);
        x.coeffs[class] = BigInt::one();
        Ok(x)
    }

    /// Recovers an element from its marks by back substitution, starting at
    /// the class of `H` itself.
    pub fn from_marks(ring: &Arc<BurnsideRing>, marks: &[BigInt]) -> Result<Self> {
        let n = ring.rank();
        assert_eq!(marks.len(), n, "mark vector length");
        let t = ring.marks();
        let mut coeffs = vec![BigInt::zero(); n];
        for j in (0..n).rev() {
            let mut rest = marks[j].clone();
            for (i, c) in coeffs.iter().enumerate().skip(j + 1) {
                if !c.is_zero() {
                    rest -= c * t.mark(i, j);
                }
            }
            let (q, r) = rest.div_rem(t.mark(j, j));
            if !r.is_zero() {
                return Err(Error::NonIntegralElement);
            }
            coeffs[j] = q;
        }
        Ok(BurnsideElement {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> &BigInt {
        &self.coeffs[class]
    }

    /// Marks `|X^{L_j}|` for every local class `j`.
    pub fn mark_vector(&self) -> Vec<BigInt> {
        let t = self.ring.marks();
        (0..self.ring.rank())
            .map(|j| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .skip(j)
                    .filter(|(_, c)| !c.is_zero())
                    .fold(BigInt::zero(), |acc, (i, c)| acc + c * t.mark(i, j))
            })
            .collect()
    }

    /// Mark at an arbitrary subgroup of `H`, given by global index.
    pub fn mark_at(&self, subgroup: usize) -> Option<BigInt> {
        let j = self.ring.marks().class_of(subgroup)?;
        let t = self.ring.marks();
        Some(
            self.coeffs
                .iter()
                .enumerate()
                .skip(j)
                .fold(BigInt::zero(), |acc, (i, c)| acc + c * t.mark(i, j)),
        )
    }

    /// The cardinality, i.e. the mark at the trivial subgroup.
    pub fn augmentation(&self) -> BigInt {
        self.mark_vector().swap_remove(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        let last = self.coeffs.len() - 1;
        self.coeffs[..last].iter().all(Zero::is_zero) && self.coeffs[last].is_one()
    }

    pub fn is_unit(&self) -> bool {
        self.mark_vector().iter().all(|m| m.abs().is_one())
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn zip(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        self.same_ring(other).expect("Burnside elements from different rings");
        BurnsideElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: Self) -> BurnsideElement {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: Self) -> BurnsideElement {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Product through the mark homomorphism.
impl Mul for &BurnsideElement {
    type Output = BurnsideElement;
    fn mul(self, rhs: Self) -> BurnsideElement {
        self.same_ring(rhs).expect("Burnside elements from different rings");
        let marks: Vec<BigInt> = self
            .mark_vector()
            .iter()
            .zip(rhs.mark_vector())
            .map(|(a, b)| a * b)
            .collect();
        BurnsideElement::from_marks(&self.ring, &marks).expect("products of virtual sets are integral")
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurnsideElement(level {}, {:?})", self.ring.level(), self.coeffs)
    }
}

/// Renders `c·[G/Hi]` terms in class order, `0` for the zero element.
impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            write!(f, "{}·[G/H{i}]", c.abs())?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
