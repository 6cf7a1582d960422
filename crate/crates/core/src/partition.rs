//! Young diagrams and their cell statistics.
//!
//! A [`Partition`] is drawn southwest-justified: row 1 is the bottom (longest)
//! row and rows shrink weakly going up. For a cell, the *arm* counts the boxes
//! strictly above it in its column and the *leg* counts the boxes strictly to
//! its right in its row.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive row lengths, bottom row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    rows: Vec<u32>,
}

/// A box of a diagram, addressed 1-based by column and row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

impl Cell {
    pub fn new(col: u32, row: u32) -> Self {
        Cell { col, row }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellStat {
    pub arm: u32,
    pub leg: u32,
}

/// Selects which mod-3 weight to count.
///
/// `WtTilde` counts every cell with `arm + 1 ≡ leg (mod 3)`; `Wt` counts the
/// same cells but only those with a positive leg.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightKind {
    Wt,
    WtTilde,
}

impl WeightKind {
    pub const ALL: [WeightKind; 2] = [WeightKind::Wt, WeightKind::WtTilde];

    pub fn as_str(self) -> &'static str {
        match self {
            WeightKind::Wt => "wt",
            WeightKind::WtTilde => "wt-tilde",
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WeightKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "wt" => Ok(WeightKind::Wt),
            "wt-tilde" => Ok(WeightKind::WtTilde),
            other => Err(format!("unknown weight `{other}` (expected wt or wt-tilde)")),
        }
    }
}

#[inline]
fn satisfies_mod3(arm: u32, leg: u32) -> bool {
    (arm + 1) % 3 == leg % 3
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// Validates that `rows` is weakly decreasing with positive entries.
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if let Some(pos) = rows.iter().position(|&r| r == 0) {
            return Err(Error::InvalidPartition(format!("row {} has length 0", pos + 1)));
        }
        if let Some(w) = rows.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::InvalidPartition(format!(
                "row {} ({}) is longer than row {} ({})",
                w + 2,
                rows[w + 1],
                w + 1,
                rows[w]
            )));
        }
        Ok(Partition { rows })
    }

    /// Caller guarantees the invariants; checked in debug builds.
    pub(crate) fn from_rows_unchecked(rows: Vec<u32>) -> Self {
        debug_assert!(rows.iter().all(|&r| r > 0));
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Partition { rows }
    }

    /// Row lengths, bottom row first.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn num_cols(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Length of row `row` (1-based), 0 above the diagram.
    pub fn row_len(&self, row: u32) -> u32 {
        match row {
            0 => 0,
            r => self.rows.get(r as usize - 1).copied().unwrap_or(0),
        }
    }

    /// Column heights `c_1 ≥ c_2 ≥ …`, leftmost column first.
    pub fn column_heights(&self) -> Vec<u32> {
        let mut heights = vec![0u32; self.num_cols() as usize];
        for &r in &self.rows {
            for h in &mut heights[..r as usize] {
                *h += 1;
            }
        }
        heights
    }

    /// The transpose diagram.
    pub fn conjugate(&self) -> Partition {
        Partition::from_rows_unchecked(self.column_heights())
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All cells, row by row from the bottom, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |col| Cell::new(col, i as u32 + 1)))
    }

    pub fn cell_stats(&self, cell: Cell) -> Result<CellStat> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfDiagram { col: cell.col, row: cell.row });
        }
        let arm = self.rows[cell.row as usize..].iter().take_while(|&&r| r >= cell.col).count() as u32;
        let leg = self.rows[cell.row as usize - 1] - cell.col;
        Ok(CellStat { arm, leg })
    }

    /// Counts the cells selected by `kind`.
    pub fn weight(&self, kind: WeightKind) -> u32 {
        let heights = self.column_heights();
        let mut count = 0;
        for (i, &len) in self.rows.iter().enumerate() {
            let row = i as u32 + 1;
            for col in 1..=len {
                let arm = heights[col as usize - 1] - row;
                let leg = len - col;
                if satisfies_mod3(arm, leg) && (kind == WeightKind::WtTilde || leg > 0) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Cells with zero leg and `arm + 1 ≡ 0 (mod 3)`; the cells on which the
    /// two weights disagree.
    pub fn leg_zero_defect(&self) -> u32 {
        let heights = self.column_heights();
        self.rows
            .iter()
            .enumerate()
            .filter(|&(i, &len)| (heights[len as usize - 1] - (i as u32 + 1) + 1).is_multiple_of(3))
            .count() as u32
    }

    /// Labels of the northeast boundary path, from `(0, c_1)` to `(λ_1, 0)`.
    ///
    /// A horizontal step `(x,y) → (x+1,y)` carries `x+y+1`; a vertical step
    /// `(x,y) → (x,y-1)` carries `x+y-1`.
    pub fn boundary_sequence(&self) -> Vec<u32> {
        let heights = self.column_heights();
        let mut labels = Vec::with_capacity(heights.len() + self.rows.len());
        for (x, &y) in heights.iter().enumerate() {
            let x = x as u32;
            labels.push(x + y + 1);
            let next = heights.get(x as usize + 1).copied().unwrap_or(0);
            for yy in (next + 1..=y).rev() {
                labels.push(x + 1 + yy - 1);
            }
        }
        labels
    }

    /// Mod-3 contribution test read off the boundary path: the label on the
    /// horizontal step capping the cell's column against the label on the
    /// vertical step closing the cell's row.
    pub fn contributes_by_boundary(&self, cell: Cell) -> Result<bool> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfDiagram { col: cell.col, row: cell.row });
        }
        let labels = self.boundary_sequence();
        Ok(self.boundary_test(&labels, &self.column_heights(), cell))
    }

    /// Same as [`Partition::contributes_by_boundary`] with the boundary labels
    /// and column heights already computed.
    pub(crate) fn boundary_test(&self, labels: &[u32], heights: &[u32], cell: Cell) -> bool {
        let rows = self.num_rows();
        // Steps before the horizontal step of column `col`: col-1 horizontals
        // plus the verticals already descended from height c_1 to c_col.
        let above = (cell.col - 1) + (rows - heights[cell.col as usize - 1]);
        // Steps before the vertical step leaving row `row`: λ_row horizontals
        // plus the verticals for rows above it.
        let right = self.row_len(cell.row) + (rows - cell.row);
        labels[above as usize] % 3 == labels[right as usize] % 3
    }

    /// Multiplicity of each row length, indexed by length (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.num_cols() as usize + 1];
        for &r in &self.rows {
            m[r as usize] += 1;
        }
        m
    }

    /// No cell has zero leg and `arm + 1 ≡ 0 (mod 3)`; equivalently no
    /// column-height drop exceeds 2.
    pub fn in_lambda_prime(&self) -> bool {
        self.multiplicities().iter().all(|&m| m <= 2)
    }

    /// Every column height is a multiple of 3.
    pub fn in_lambda_double_prime(&self) -> bool {
        self.column_heights().iter().all(|&h| h % 3 == 0)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<u32>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"5,3,3,1"`; `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty literal (use `-` for the empty partition)".into()));
        }
        let rows = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("`{}` is not a row length", part.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn size_examples() {
        assert_eq!(p("5,3,3,1").size(), 12);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(p("6,4").size(), 10);
    }

    #[test]
    fn cell_stats_examples() {
        assert_eq!(p("5,3,3,1").cell_stats(Cell::new(2, 1)).unwrap(), CellStat { arm: 2, leg: 3 });
        assert_eq!(p("1").cell_stats(Cell::new(1, 1)).unwrap(), CellStat { arm: 0, leg: 0 });
        assert_eq!(p("6,4").cell_stats(Cell::new(3, 2)).unwrap(), CellStat { arm: 0, leg: 1 });
    }

    #[test]
    fn cell_out_of_diagram() {
        let lam = p("6,4");
        for cell in [Cell::new(5, 2), Cell::new(1, 3), Cell::new(0, 1), Cell::new(7, 1)] {
            assert_eq!(lam.cell_stats(cell), Err(Error::CellOutOfDiagram { col: cell.col, row: cell.row }));
            assert!(lam.contributes_by_boundary(cell).is_err());
        }
        assert!(Partition::empty().cell_stats(Cell::new(1, 1)).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(p("6,4").weight(WeightKind::WtTilde), 4);
        assert_eq!(Partition::empty().weight(WeightKind::Wt), 0);
        assert_eq!(p("3,1").weight(WeightKind::WtTilde), 2);
        assert_eq!(p("2").weight(WeightKind::Wt), 1);
        assert_eq!(p("1,1").weight(WeightKind::Wt), 0);
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(p("6,4").boundary_sequence(), vec![3, 4, 5, 6, 5, 6, 7, 6]);
        assert!(Partition::empty().boundary_sequence().is_empty());
        assert_eq!(p("1").boundary_sequence(), vec![2, 1]);
    }

    #[test]
    fn boundary_contribution_examples() {
        assert!(p("6,4").contributes_by_boundary(Cell::new(3, 2)).unwrap());
        assert!(!p("1").contributes_by_boundary(Cell::new(1, 1)).unwrap());
        let lam = p("6,4");
        let shaded = lam.cells().filter(|&c| lam.contributes_by_boundary(c).unwrap()).count();
        assert_eq!(shaded, 4);
    }

    #[test]
    fn lambda_prime_examples() {
        assert!(!p("1,1,1").in_lambda_prime());
        assert!(p("6,4").in_lambda_prime());
        assert!(Partition::empty().in_lambda_prime());
    }

    #[test]
    fn lambda_double_prime_examples() {
        assert!(p("1,1,1").in_lambda_double_prime());
        assert!(!p("2").in_lambda_double_prime());
        assert!(Partition::empty().in_lambda_double_prime());
    }

    #[test]
    fn column_heights_and_conjugate() {
        let lam = p("5,3,3,1");
        assert_eq!(lam.column_heights(), vec![4, 3, 3, 1, 1]);
        assert_eq!(lam.conjugate(), p("4,3,3,1,1"));
        assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn defect_counts_leg_zero_cells() {
        // (1,1,1): only the bottom cell has arm 2, leg 0.
        assert_eq!(p("1,1,1").leg_zero_defect(), 1);
        assert_eq!(p("6,4").leg_zero_defect(), 0);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5, 3,3,1").rows(), &[5, 3, 3, 1]);
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(p("5,3,3,1").to_string(), "5,3,3,1");
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_validates() {
        let lam: Partition = serde_json::from_str("[4,2,2]").unwrap();
        assert_eq!(lam, p("4,2,2"));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
