//! Row insertion `f: Λ′ × Λ″ → Λ` and its inverse.
//!
//! `Λ′` holds the partitions with no row length repeated more than twice
//! (no column-height drop above 2); `Λ″` holds those whose row-length
//! multiplicities are all multiples of 3 (all column heights divisible by 3).
//! Inserting each row of the `Λ″` factor as high as it fits keeps the legs of
//! every box and shifts arms by multiples of 3, so both weights add.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Inserts the rows of `ldp ∈ Λ″` into `lp ∈ Λ′`.
///
/// The row multiset of the result is the union of both; rows of `ldp` sit
/// above `lp` rows of equal length.
pub fn insert_f(lp: &Partition, ldp: &Partition) -> Result<Partition> {
    if !lp.in_lambda_prime() {
        return Err(Error::DomainViolation(format!("{lp} is not in Λ′")));
    }
    if !ldp.in_lambda_double_prime() {
        return Err(Error::DomainViolation(format!("{ldp} is not in Λ″")));
    }
    Ok(merge_rows(lp, ldp))
}

fn merge_rows(bottom: &Partition, top: &Partition) -> Partition {
    let (a, b) = (bottom.rows(), top.rows());
    let mut rows = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        // Ties go to the lower factor first so that inserted rows land above it.
        if j == b.len() || (i < a.len() && a[i] >= b[j]) {
            rows.push(a[i]);
            i += 1;
        } else {
            rows.push(b[j]);
            j += 1;
        }
    }
    Partition::from_rows_unchecked(rows)
}

/// Scan order for the row lengths that violate `Λ′` during extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtractionOrder {
    #[default]
    LargestFirst,
    SmallestFirst,
}

/// Splits `lam` into the unique `(λ′, λ″) ∈ Λ′ × Λ″` with `f(λ′, λ″) = lam`.
pub fn split_f_inv(lam: &Partition) -> (Partition, Partition) {
    split_f_inv_ordered(lam, ExtractionOrder::LargestFirst)
}

/// [`split_f_inv`] with an explicit scan order: while some row length occurs
/// three or more times in the remainder, move the topmost three such rows to
/// the `Λ″` factor.
pub fn split_f_inv_ordered(lam: &Partition, order: ExtractionOrder) -> (Partition, Partition) {
    let mut remaining: Vec<u32> = lam.rows().to_vec();
    let mut extracted: Vec<u32> = Vec::new();
    loop {
        let mult = Partition::from_rows_unchecked(remaining.clone()).multiplicities();
        let mut violating = mult.iter().enumerate().filter(|&(_, &m)| m >= 3).map(|(x, _)| x as u32);
        let x = match order {
            ExtractionOrder::LargestFirst => violating.next_back(),
            ExtractionOrder::SmallestFirst => violating.next(),
        };
        let Some(x) = x else { break };
        // Rows of length x form a contiguous block; its topmost three are at the end.
        let last = remaining.iter().rposition(|&r| r == x).expect("x occurs");
        remaining.drain(last - 2..=last);
        extracted.extend([x; 3]);
    }
    extracted.sort_unstable_by(|a, b| b.cmp(a));
    (Partition::from_rows_unchecked(remaining), Partition::from_rows_unchecked(extracted))
}
