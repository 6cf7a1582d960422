//! Streaming generators for partitions of `n` and {1,2}-compositions of `n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Membership test used to restrict a [`PartitionStream`].
pub type PartitionFilter = fn(&Partition) -> bool;

/// Resumable cursor over the partitions of `n` in reverse-lexicographic order,
/// starting from `(n)` and ending at `(1,…,1)`.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    n: u32,
    filter: Option<PartitionFilter>,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> PartitionStream {
    PartitionStream::new(n, None)
}

/// Partitions of `n` accepted by `filter`.
pub fn partitions_where(n: u32, filter: PartitionFilter) -> PartitionStream {
    PartitionStream::new(n, Some(filter))
}

/// All partitions with at most `max_n` boxes, grouped by size then in
/// stream order.
pub fn partitions_up_to(max_n: u32) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(partitions_of)
}

impl PartitionStream {
    pub fn new(n: u32, filter: Option<PartitionFilter>) -> Self {
        PartitionStream { n, filter, current: Vec::new(), started: false, done: false }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.current = if self.n == 0 { Vec::new() } else { vec![self.n] };
            return true;
        }
        // Rightmost part exceeding 1; everything after it is a run of 1s.
        let Some(pos) = self.current.iter().rposition(|&r| r > 1) else {
            return false;
        };
        let ones = (self.current.len() - pos - 1) as u32;
        let part = self.current[pos] - 1;
        let mut rest = self.current[pos] + ones;
        self.current.truncate(pos);
        while rest > 0 {
            let next = part.min(rest);
            self.current.push(next);
            rest -= next;
        }
        true
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            let lam = Partition::from_rows_unchecked(self.current.clone());
            if self.filter.is_none_or(|f| f(&lam)) {
                return Some(lam);
            }
        }
        None
    }
}

/// Which of the two Dyson maps a composition entry names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part12 {
    One,
    Two,
}

impl Part12 {
    pub fn value(self) -> u32 {
        match self {
            Part12::One => 1,
            Part12::Two => 2,
        }
    }
}

/// An ordered sequence over {1, 2}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition12 {
    entries: Vec<Part12>,
}

impl Composition12 {
    pub fn new(entries: Vec<Part12>) -> Self {
        Composition12 { entries }
    }

    pub fn from_values(values: &[u32]) -> Result<Self> {
        values
            .iter()
            .map(|&v| match v {
                1 => Ok(Part12::One),
                2 => Ok(Part12::Two),
                other => Err(Error::InvalidComposition(format!("entry {other} is not 1 or 2"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition12::new)
    }

    pub fn entries(&self) -> &[Part12] {
        &self.entries
    }

    pub fn values(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entries.
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|e| e.value()).sum()
    }

    pub fn count_twos(&self) -> u32 {
        self.entries.iter().filter(|&&e| e == Part12::Two).count() as u32
    }

    /// Whether `block` occurs as a contiguous run.
    pub fn contains_block(&self, block: &[Part12]) -> bool {
        block.is_empty() || self.entries.windows(block.len()).any(|w| w == block)
    }
}

impl From<Vec<Part12>> for Composition12 {
    fn from(entries: Vec<Part12>) -> Self {
        Composition12 { entries }
    }
}

impl fmt::Display for Composition12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("-");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e.value())?;
        }
        Ok(())
    }
}

impl FromStr for Composition12 {
    type Err = Error;

    /// Parses `"2,2,1,2"`; `"-"` is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Composition12::default());
        }
        if s.is_empty() {
            return Err(Error::InvalidComposition("empty literal (use `-` for the empty composition)".into()));
        }
        let values = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidComposition(format!("`{}` is not an entry", part.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition12::from_values(&values)
    }
}

/// Cursor over the {1,2}-compositions of `n` in lexicographic order
/// (`1 < 2`), starting from all ones.
#[derive(Debug, Clone)]
pub struct CompositionStream {
    current: Vec<Part12>,
    started: bool,
    done: bool,
}

pub fn compositions_12(n: u32) -> CompositionStream {
    CompositionStream { current: vec![Part12::One; n as usize], started: false, done: false }
}

impl CompositionStream {
    /// Moves to the next composition without allocating; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        // Rightmost 1 that still has at least one unit after it to absorb.
        let mut suffix = 0u32;
        let mut found = None;
        for i in (0..self.current.len()).rev() {
            if self.current[i] == Part12::One && suffix >= 1 {
                found = Some(i);
                break;
            }
            suffix += self.current[i].value();
        }
        let Some(i) = found else {
            self.done = true;
            return false;
        };
        self.current.truncate(i);
        self.current.push(Part12::Two);
        self.current.extend(std::iter::repeat_n(Part12::One, suffix as usize - 1));
        true
    }

    /// Entries at the cursor; meaningful after a successful [`advance`](Self::advance).
    pub fn current(&self) -> &[Part12] {
        &self.current
    }
}

impl Iterator for CompositionStream {
    type Item = Composition12;

    fn next(&mut self) -> Option<Composition12> {
        self.advance().then(|| Composition12::new(self.current.clone()))
    }

    fn count(mut self) -> usize {
        let mut n = 0;
        while self.advance() {
            n += 1;
        }
        n
    }
}
