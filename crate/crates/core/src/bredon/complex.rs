use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cohomology::cochain_complex;
use crate::error::{Error, Result};
use crate::group::SubgroupTable;
use crate::mackey::{burnside_mackey, constant_z};

/// Highest cell dimension accepted.
pub const MAX_DIMENSION: usize = 4;

/// One term `coeff · f_g` of a boundary, where `f_g: G/H → G/K` sends
/// `eH` to `gK` and requires `g⁻¹Hg ⊆ K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTerm {
    pub coeff: i64,
    pub conjugator: usize,
}

/// The part of the boundary of cell `from` lying on cell `to`, by global
/// cell id (cells numbered consecutively through all dimensions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryEntry {
    pub from: usize,
    pub to: usize,
    pub terms: Vec<BoundaryTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CellSpec {
    pub isotropy_class: usize,
}

/// JSON form of a [`GCWComplex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub cells: Vec<Vec<CellSpec>>,
    #[serde(default)]
    pub boundary: Vec<BoundaryEntry>,
}

/// A finite G-CW complex described by its orbit cells `G/H × Dⁿ` and the
/// boundary of each cell as a combination of orbit maps.
#[derive(Clone, Debug)]
pub struct GCWComplex {
    table: Arc<SubgroupTable>,
    spec: ComplexSpec,
    // global cell id -> (dimension, position)
    positions: Vec<(usize, usize)>,
}

impl GCWComplex {
    /// Validates cell classes, dimensions, that every term is a
    /// well-defined orbit map, and that `∂∂ = 0` after evaluation in the
    /// Burnside and constant `Z` coefficient systems.
    pub fn new(table: Arc<SubgroupTable>, spec: ComplexSpec) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidComplex(msg);
        if spec.cells.is_empty() {
            return Err(invalid("no cells".into()));
        }
        if spec.cells.len() > MAX_DIMENSION + 1 {
            return Err(invalid(format!("dimension exceeds {MAX_DIMENSION}")));
        }
        let mut positions = Vec::new();
        for (n, cells) in spec.cells.iter().enumerate() {
            for (i, c) in cells.iter().enumerate() {
                if c.isotropy_class >= table.class_count() {
                    return Err(Error::ClassOutOfRange {
                        index: c.isotropy_class,
                        count: table.class_count(),
                    });
                }
                positions.push((n, i));
            }
        }
        let g = table.group();
        for entry in &spec.boundary {
            let (&(n, _), &(m, _)) = match (positions.get(entry.from), positions.get(entry.to)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(invalid(format!("boundary entry {} -> {} names a missing cell", entry.from, entry.to))),
            };
            if n != m + 1 {
                return Err(invalid(format!(
                    "boundary of cell {} (dimension {n}) lands on cell {} of dimension {m}",
                    entry.from, entry.to
                )));
            }
            let h = table.class_rep(spec.cells[n][positions[entry.from].1].isotropy_class)?;
            let k = table.class_rep(spec.cells[m][positions[entry.to].1].isotropy_class)?;
            for term in &entry.terms {
                if term.conjugator >= g.order() {
                    return Err(invalid(format!("conjugator {} is not a group element", term.conjugator)));
                }
                if !table.contains(k, table.conjugate(g.inv(term.conjugator), h)) {
                    return Err(invalid(format!(
                        "term with conjugator {} from cell {} to cell {} is not an orbit map",
                        term.conjugator, entry.from, entry.to
                    )));
                }
            }
        }
        let complex = GCWComplex { table, spec, positions };
        if complex.dimension() >= 2 {
            for m in [burnside_mackey(&complex.table)?, constant_z(&complex.table)] {
                if !cochain_complex(&complex, &m)?.is_complex() {
                    return Err(invalid(format!("the boundary does not square to zero in {} coefficients", m.name())));
                }
            }
        }
        Ok(complex)
    }

    pub fn from_json(table: Arc<SubgroupTable>, text: &str) -> Result<Self> {
        let spec: ComplexSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(table, spec)
    }

    pub fn table(&self) -> &Arc<SubgroupTable> {
        &self.table
    }

    pub fn spec(&self) -> &ComplexSpec {
        &self.spec
    }

    pub fn dimension(&self) -> usize {
        self.spec.cells.len() - 1
    }

    /// Number of orbit cells in each dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.spec.cells.iter().map(Vec::len).collect()
    }

    /// Isotropy subgroup (global index) of the `i`-th cell of dimension `n`.
    pub fn isotropy(&self, n: usize, i: usize) -> usize {
        self.table.class_reps()[self.spec.cells[n][i].isotropy_class]
    }

    /// `(dimension, position)` of a global cell id.
    pub fn position(&self, id: usize) -> (usize, usize) {
        self.positions[id]
    }

    pub fn is_free(&self) -> bool {
        self.spec.cells.iter().flatten().all(|c| c.isotropy_class == 0)
    }
}

fn check_order_two(table: &SubgroupTable) -> Result<()> {
    if table.group().order() == 2 {
        Ok(())
    } else {
        Err(Error::InvalidComplex("this complex is defined for the group of order two".into()))
    }
}

type Terms<'a> = &'a [(i64, usize)];

fn build(table: &Arc<SubgroupTable>, cells: &[&[usize]], boundary: &[(usize, usize, Terms)]) -> Result<GCWComplex> {
    let spec = ComplexSpec {
        cells: cells
            .iter()
            .map(|d| d.iter().map(|&c| CellSpec { isotropy_class: c }).collect())
            .collect(),
        boundary: boundary
            .iter()
            .map(|&(from, to, terms)| BoundaryEntry {
                from,
                to,
                terms: terms
                    .iter()
                    .map(|&(coeff, conjugator)| BoundaryTerm { coeff, conjugator })
                    .collect(),
            })
            .collect(),
    };
    GCWComplex::new(table.clone(), spec)
}

/// A single fixed point.
pub fn point(table: &Arc<SubgroupTable>) -> GCWComplex {
    let top = table.class_count() - 1;
    build(table, &[&[top]], &[]).expect("point")
}

/// The circle with trivial action: one fixed 0-cell and one fixed 1-cell
/// attached with zero boundary.
pub fn circle_trivial(table: &Arc<SubgroupTable>) -> GCWComplex {
    let top = table.class_count() - 1;
    build(table, &[&[top], &[top]], &[]).expect("trivial circle")
}

/// The free orbit `G/e` as a 0-dimensional complex.
pub fn free_orbit(table: &Arc<SubgroupTable>) -> GCWComplex {
    build(table, &[&[0]], &[]).expect("free orbit")
}

/// The sign-representation sphere over `C₂`: two fixed 0-cells `N`, `S`
/// joined by one free 1-cell, `∂ = S - N`.
pub fn sigma_sphere(table: &Arc<SubgroupTable>) -> Result<GCWComplex> {
    check_order_two(table)?;
    let e = table.group().identity();
    build(table, &[&[1, 1], &[0]], &[(2, 1, &[(1, e)]), (2, 0, &[(-1, e)])])
}

/// The unit circle of `2σ` over `C₂`: one free 0-cell and one free 1-cell
/// with `∂ = f_e - f_σ`.
pub fn s2sigma_circle(table: &Arc<SubgroupTable>) -> Result<GCWComplex> {
    check_order_two(table)?;
    let e = table.group().identity();
    let sigma = 1 - e;
    build(table, &[&[0], &[0]], &[(1, 0, &[(1, e), (-1, sigma)])])
}

/// Names accepted by [`by_name`].
pub const COMPLEX_NAMES: &[&str] = &["point", "circle", "free", "sigma_sphere", "s2sigma"];

pub fn by_name(name: &str, table: &Arc<SubgroupTable>) -> Result<GCWComplex> {
    match name {
        "point" => Ok(point(table)),
        "circle" | "circle_trivial" => Ok(circle_trivial(table)),
        "free" | "free_orbit" => Ok(free_orbit(table)),
        "sigma_sphere" => sigma_sphere(table),
        "s2sigma" | "s2sigma_circle" => s2sigma_circle(table),
        other => Err(Error::Parse(format!(
            "unknown complex `{other}` (expected one of {} or a JSON file)",
            COMPLEX_NAMES.join(", ")
        ))),
    }
}
