use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with
/// `d₁ | d₂ | … | d_k` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianGroupPresentation {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupPresentation {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        if torsion.iter().any(|d| d < &BigInt::from(2)) {
            return Err(Error::Internal(format!("invariant factors must be at least 2: {torsion:?}")));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::Internal(format!("invariant factors do not divide successively: {torsion:?}")));
        }
        Ok(AbelianGroupPresentation { free_rank, torsion })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupPresentation {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `(Z/2)^k`
    pub fn elementary_two(k: usize) -> Self {
        AbelianGroupPresentation {
            free_rank: 0,
            torsion: vec![BigInt::from(2); k],
        }
    }

    /// Builds the presentation from the nonzero diagonal of a Smith form,
    /// dropping unit factors.
    pub fn from_factors(free_rank: usize, factors: impl IntoIterator<Item = BigInt>) -> Result<Self> {
        let torsion = factors.into_iter().filter(|d| !d.is_one() && !d.is_zero()).collect();
        Self::new(free_rank, torsion)
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of cyclic summands.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}
