//! The Dyson maps `ρ₁` and `ψ₂`, their inverses, and the decomposition of a
//! partition into a {1,2}-composition.
//!
//! Writing `j` for the first (bottom) row length and `k` for the first column
//! height:
//!
//! * `ρ₁` removes the first row, adds a box, and inserts it as a new first
//!   column of height `j+1`. Defined when `j ≥ k − 2`.
//! * `ψ₂` removes the first column, adds two boxes, and inserts it as a new
//!   first row of length `k+2`. Defined when `j ≤ k + 3`.
//! * `ρ₁⁻¹` is defined when `j ≤ k`, `ψ₂⁻¹` when `j > k`; exactly one applies
//!   to any non-empty diagram, which makes the decomposition unique.
//!
//! Compositions are written outermost-first: entry 1 is the last map applied
//! when building the partition from `∅`.

use std::fmt;

use crate::enumerate::{Composition12, Part12};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// One of the two Dyson maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DysonStep {
    Rho1,
    Psi2,
}

impl DysonStep {
    pub fn apply(self, lam: &Partition) -> Result<Partition> {
        match self {
            DysonStep::Rho1 => rho1(lam),
            DysonStep::Psi2 => psi2(lam),
        }
    }

    pub fn part(self) -> Part12 {
        match self {
            DysonStep::Rho1 => Part12::One,
            DysonStep::Psi2 => Part12::Two,
        }
    }
}

impl From<Part12> for DysonStep {
    fn from(p: Part12) -> Self {
        match p {
            Part12::One => DysonStep::Rho1,
            Part12::Two => DysonStep::Psi2,
        }
    }
}

impl fmt::Display for DysonStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DysonStep::Rho1 => "rho1",
            DysonStep::Psi2 => "psi2",
        })
    }
}

/// First row length `j` and first column height `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FirstRowCol {
    pub j: u32,
    pub k: u32,
}

impl FirstRowCol {
    pub fn of(lam: &Partition) -> Self {
        FirstRowCol { j: lam.num_cols(), k: lam.num_rows() }
    }
}

fn undefined(map: &'static str, fc: FirstRowCol) -> Error {
    Error::UndefinedMap { map, first_row: fc.j, first_col: fc.k }
}

/// New first column of height `j+1`; the remaining rows slide one column right.
pub fn rho1(lam: &Partition) -> Result<Partition> {
    let fc = FirstRowCol::of(lam);
    if fc.j + 2 < fc.k {
        return Err(undefined("rho1", fc));
    }
    let rest = lam.rows().get(1..).unwrap_or(&[]);
    let rows = (0..=fc.j as usize).map(|i| 1 + rest.get(i).copied().unwrap_or(0)).collect();
    Ok(Partition::from_rows_unchecked(rows))
}

/// New first row of length `k+2`; the remaining columns slide one row up.
pub fn psi2(lam: &Partition) -> Result<Partition> {
    let fc = FirstRowCol::of(lam);
    if fc.j > fc.k + 3 {
        return Err(undefined("psi2", fc));
    }
    let mut rows = Vec::with_capacity(lam.rows().len() + 1);
    rows.push(fc.k + 2);
    rows.extend(lam.rows().iter().filter(|&&r| r > 1).map(|&r| r - 1));
    Ok(Partition::from_rows_unchecked(rows))
}

/// Removes the first column, drops one box, and lays the rest as a new first row.
pub fn rho1_inv(lam: &Partition) -> Result<Partition> {
    let fc = FirstRowCol::of(lam);
    if lam.is_empty() || fc.j > fc.k {
        return Err(undefined("rho1_inv", fc));
    }
    let mut rows = Vec::with_capacity(lam.rows().len());
    if fc.k > 1 {
        rows.push(fc.k - 1);
    }
    rows.extend(lam.rows().iter().filter(|&&r| r > 1).map(|&r| r - 1));
    Ok(Partition::from_rows_unchecked(rows))
}

/// Removes the first row, drops two boxes, and stands the rest up as a new
/// first column.
pub fn psi2_inv(lam: &Partition) -> Result<Partition> {
    let fc = FirstRowCol::of(lam);
    if lam.is_empty() || fc.j <= fc.k {
        return Err(undefined("psi2_inv", fc));
    }
    let rest = &lam.rows()[1..];
    let rows = (0..(fc.j - 2) as usize).map(|i| 1 + rest.get(i).copied().unwrap_or(0)).collect();
    Ok(Partition::from_rows_unchecked(rows))
}

/// The inverse map that applies to a non-empty `lam`, and its result.
pub fn peel(lam: &Partition) -> Option<(DysonStep, Partition)> {
    if lam.is_empty() {
        return None;
    }
    let fc = FirstRowCol::of(lam);
    // Exactly one inverse is defined, so neither call below can fail.
    let step = if fc.j <= fc.k { DysonStep::Rho1 } else { DysonStep::Psi2 };
    let prev = match step {
        DysonStep::Rho1 => rho1_inv(lam),
        DysonStep::Psi2 => psi2_inv(lam),
    }
    .expect("the selected inverse is defined");
    Some((step, prev))
}

/// Decomposes `lam` into its unique {1,2}-composition, outermost map first.
pub fn phi(lam: &Partition) -> Composition12 {
    let mut entries = Vec::new();
    let mut cur = lam.clone();
    while let Some((step, prev)) = peel(&cur) {
        entries.push(step.part());
        cur = prev;
    }
    Composition12::new(entries)
}

/// Applies the maps of `c` to `∅`, innermost (last entry) first.
///
/// Fails with [`Error::Inadmissible`] naming the 1-based entry whose map is
/// undefined on the diagram built so far.
pub fn build(c: &Composition12) -> Result<Partition> {
    let mut lam = Partition::empty();
    for (idx, &part) in c.entries().iter().enumerate().rev() {
        lam = DysonStep::from(part).apply(&lam).map_err(|_| Error::Inadmissible { step: idx + 1 })?;
    }
    Ok(lam)
}

/// Whether `c` lies in the image of [`phi`].
pub fn is_admissible(c: &Composition12) -> bool {
    build(c).is_ok()
}

/// Stair-step property and landing number of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StairReport {
    pub is_stair: bool,
    /// Number of adjacent equal-height column pairs; 0 when not stair-step.
    pub landing: u32,
}

/// Consecutive column heights may drop by at most 1; the landing number
/// counts the adjacent equal-height pairs.
pub fn stair_report(lam: &Partition) -> StairReport {
    let heights = lam.column_heights();
    let is_stair = heights.windows(2).all(|w| w[0] <= w[1] + 1);
    let landing = if is_stair { heights.windows(2).filter(|w| w[0] == w[1]).count() as u32 } else { 0 };
    StairReport { is_stair, landing }
}

/// Stair-step including the final drop to the floor, i.e. the last column
/// has a single box. This is the form that `ψ₂` preserves when the landing
/// number is at most 2; a lone column of height ≥ 2 is stair-step but not
/// grounded, and `ψ₂` turns it into a single row with a long landing.
pub fn is_grounded_stair(lam: &Partition) -> bool {
    stair_report(lam).is_stair && lam.column_heights().last().is_none_or(|&h| h <= 1)
}
