//! Named permutation groups.
//!
//! Accepted names: `C<n>` (cyclic), `S<n>` or `Sigma<n>` (symmetric),
//! `D<n>` (dihedral of order `2n`, so `D4` has order 8), `Q8`, `1`/`e`
//! (trivial), and direct products joined by `x`, e.g. `C2xC2xC2`.

use super::finite::{FiniteGroup, DEFAULT_ORDER_CAP};
use super::perm::Perm;
use crate::error::{Error, Result};

/// Names exercised by the test suites and listed by the CLI.
pub const BUILTIN_NAMES: &[&str] = &[
    "C2", "C3", "C4", "C5", "C8", "C2xC2", "C2xC2xC2", "S3", "D4", "Q8", "S4",
];

pub fn trivial() -> FiniteGroup {
    FiniteGroup::close(1, vec![], 1).expect("trivial group")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group of order zero");
    if n == 1 {
        return trivial();
    }
    let gen = Perm::new((0..n).map(|i| (i + 1) % n).collect()).expect("rotation");
    FiniteGroup::close(n, vec![gen], n).expect("cyclic group")
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownGroup("S0".into()));
    }
    if n == 1 {
        return Ok(trivial());
    }
    let mut gens = vec![Perm::from_cycles(n, &[&[0, 1]])?];
    if n > 2 {
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Perm::from_cycles(n, &[&cycle])?);
    }
    FiniteGroup::close(n, gens, DEFAULT_ORDER_CAP)
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(Error::UnknownGroup("D0".into())),
        1 => Ok(cyclic(2)),
        2 => Ok(FiniteGroup::direct_product(&cyclic(2), &cyclic(2))),
        _ => {
            let rot = Perm::new((0..n).map(|i| (i + 1) % n).collect())?;
            let refl = Perm::new((0..n).map(|i| (n - i) % n).collect())?;
            FiniteGroup::close(n, vec![rot, refl], DEFAULT_ORDER_CAP)
        }
    }
}

/// The quaternion group in its regular representation on 8 points.
pub fn quaternion() -> FiniteGroup {
    // Points encode ±1, ±i, ±j, ±k as 2·unit + sign, unit ∈ {1, i, j, k}.
    // Unit products: UNIT[a][b] = (sign, unit) of a·b.
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let encode = |neg: bool, u: usize| 2 * u + neg as usize;
    let left_mult = |u: usize| {
        let images = (0..8)
            .map(|p| {
                let (neg, v) = (p % 2 == 1, p / 2);
                let (s, w) = UNIT[u][v];
                encode(neg ^ s, w)
            })
            .collect();
        Perm::new(images).expect("left multiplication")
    };
    FiniteGroup::close(8, vec![left_mult(1), left_mult(2)], 8).expect("quaternion group")
}

/// Looks up a group by name.
pub fn named(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    if name.contains('x') {
        let mut factors = name.split('x').map(named);
        let first = factors.next().ok_or_else(|| Error::UnknownGroup(name.into()))??;
        return factors.try_fold(first, |acc, f| Ok(FiniteGroup::direct_product(&acc, &f?)));
    }
    let unknown = || Error::UnknownGroup(name.to_string());
    let number = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(unknown);
    match name {
        "1" | "e" | "C1" | "trivial" => Ok(trivial()),
        "Q8" => Ok(quaternion()),
        _ => {
            if let Some(rest) = name.strip_prefix("Sigma") {
                symmetric(number(rest)?)
            } else if let Some(rest) = name.strip_prefix('C') {
                let n = number(rest)?;
                if n > DEFAULT_ORDER_CAP {
                    return Err(Error::OrderCapExceeded { cap: DEFAULT_ORDER_CAP });
                }
                Ok(cyclic(n))
            } else if let Some(rest) = name.strip_prefix('S') {
                symmetric(number(rest)?)
            } else if let Some(rest) = name.strip_prefix('D') {
                dihedral(number(rest)?)
            } else {
                Err(unknown())
            }
        }
    }
}
