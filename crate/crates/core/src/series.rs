//! Truncated bivariate series in `t` and `q` with big-integer coefficients.
//!
//! Truncation is by `q`-degree only. Every generator used here has
//! `t`-degree at most its `q`-degree, so the `t`-degree stays bounded too.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enumerate::{partitions_of, PartitionFilter, PartitionStream};
use crate::error::{Error, Result};
use crate::partition::WeightKind;
use crate::shard;

/// Sparse `Σ c_{k,n} t^k q^n` with `n ≤ qbound`.
///
/// Entries are keyed `(n, k)` so iteration runs in export order; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    qbound: u32,
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

/// Where two series first disagree, scanning `n` then `k` upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub k: u32,
    pub n: u32,
    pub left: BigInt,
    pub right: BigInt,
}

impl BiSeries {
    pub fn zero(qbound: u32) -> Self {
        BiSeries { qbound, coeffs: BTreeMap::new() }
    }

    pub fn one(qbound: u32) -> Self {
        BiSeries::monomial(0, 0, BigInt::one(), qbound)
    }

    /// `c · t^k q^n`, or zero when `n` exceeds the bound.
    pub fn monomial(k: u32, n: u32, c: BigInt, qbound: u32) -> Self {
        let mut s = BiSeries::zero(qbound);
        s.add_term(k, n, c);
        s
    }

    /// Sum of `(k, n, c)` terms; terms above the bound are dropped.
    pub fn from_terms<I>(terms: I, qbound: u32) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigInt)>,
    {
        let mut s = BiSeries::zero(qbound);
        for (k, n, c) in terms {
            s.add_term(k, n, c);
        }
        s
    }

    pub fn qbound(&self) -> u32 {
        self.qbound
    }

    pub fn add_term(&mut self, k: u32, n: u32, c: BigInt) {
        if n > self.qbound || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((n, k)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(n, k));
        }
    }

    /// Coefficient of `t^k q^n`.
    pub fn coefficient(&self, k: u32, n: u32) -> BigInt {
        self.coeffs.get(&(n, k)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(k, n, c)`, sorted by `(n, k)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&(n, k), c)| (k, n, c))
    }

    /// Nonzero `(k, c)` pairs of the `q^n` row, ascending in `k`.
    pub fn row(&self, n: u32) -> Vec<(u32, BigInt)> {
        self.coeffs.range((n, 0)..=(n, u32::MAX)).map(|(&(_, k), c)| (k, c.clone())).collect()
    }

    /// Coefficient of `q^n` after setting `t = 1`.
    pub fn at_t_one(&self, n: u32) -> BigInt {
        self.coeffs.range((n, 0)..=(n, u32::MAX)).map(|(_, c)| c).sum()
    }

    pub fn max_t_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(_, k)| k).max()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    fn check_bound(&self, other: &BiSeries) -> Result<()> {
        if self.qbound != other.qbound {
            return Err(Error::BoundMismatch { left: self.qbound, right: other.qbound });
        }
        Ok(())
    }

    pub fn add(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (k, n, c) in other.terms() {
            out.add_term(k, n, c.clone());
        }
        Ok(out)
    }

    /// Truncated product.
    pub fn mul(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check_bound(other)?;
        let mut out = BiSeries::zero(self.qbound);
        for (&(n1, k1), c1) in &self.coeffs {
            for (&(n2, k2), c2) in other.coeffs.range(..=(self.qbound - n1, u32::MAX)) {
                out.add_term(k1 + k2, n1 + n2, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Lowest `(n, k)` where `self` and `other` disagree.
    pub fn first_difference(&self, other: &BiSeries) -> Option<CoefficientMismatch> {
        let keys: std::collections::BTreeSet<_> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().find_map(|&(n, k)| {
            let (l, r) = (self.coefficient(k, n), other.coefficient(k, n));
            (l != r).then_some(CoefficientMismatch { k, n, left: l, right: r })
        })
    }

    /// CSV with header `n,k,coefficient`, one row per nonzero coefficient.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,coefficient\n");
        for (k, n, c) in self.terms() {
            let _ = writeln!(out, "{n},{k},{c}");
        }
        out
    }

    /// JSON object keyed by `n` (every `0..=qbound`) holding `[k, "c"]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        for n in 0..=self.qbound {
            let row = self.row(n).into_iter().map(|(k, c)| serde_json::json!([k, c.to_string()])).collect();
            obj.insert(n.to_string(), serde_json::Value::Array(row));
        }
        serde_json::Value::Object(obj)
    }

    /// [`BiSeries::to_json`] rendered with one `n` per line.
    pub fn to_json_string(&self) -> String {
        let serde_json::Value::Object(obj) = self.to_json() else { unreachable!() };
        let lines: Vec<String> = obj.iter().map(|(n, row)| format!("  \"{n}\": {row}")).collect();
        format!("{{\n{}\n}}\n", lines.join(",\n"))
    }

    /// One line per `n`: `q^4: 1 + 3t + t^2`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for n in 0..=self.qbound {
            let _ = writeln!(out, "q^{n}: {}", format_t_polynomial(&self.row(n)));
        }
        out
    }
}

fn format_t_polynomial(row: &[(u32, BigInt)]) -> String {
    if row.is_empty() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (k, c)) in row.iter().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let unit = mag.is_one() && *k > 0;
        if !unit {
            let _ = write!(out, "{mag}");
        }
        match k {
            0 => {}
            1 => out.push('t'),
            k => {
                let _ = write!(out, "t^{k}");
            }
        }
    }
    out
}

/// `Σ_{i ≥ 0, i·q_exp ≤ N} t^{i·t_exp} q^{i·q_exp}`, the truncated expansion of
/// `1 / (1 − t^{t_exp} q^{q_exp})`.
pub fn geom_inverse(t_exp: u32, q_exp: u32, qbound: u32) -> Result<BiSeries> {
    if q_exp == 0 {
        return Err(Error::NonInvertible);
    }
    let terms = (0..=qbound / q_exp).map(|i| (i * t_exp, i * q_exp, BigInt::one()));
    Ok(BiSeries::from_terms(terms, qbound))
}

/// `(t_exp, q_exp)` of a monomial.
type TqExp = (u32, u32);

/// The infinite products appearing in the two conjectured identities and the
/// leg-condition correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductFormula {
    /// `∏ 1/((1−t^{m−1}q^{3m−2})(1−t^m q^{3m−1})(1−t^{m−1}q^{3m}))`
    Conj2Rhs,
    /// `∏ 1/((1−t^{m−1}q^{3m−2})(1−t^m q^{3m−1})(1−t^m q^{3m}))`
    Conj3Rhs,
    /// `∏ (1−t^{m−1}q^{3m}) / (1−t^m q^{3m})`
    Correction,
    /// `∏ 1/(1−t^m q^{3m})`
    LambdaDblPrimeWtTilde,
    /// `∏ 1/(1−t^{m−1}q^{3m})`
    LambdaDblPrimeWt,
}

impl ProductFormula {
    pub const ALL: [ProductFormula; 5] = [
        ProductFormula::Conj2Rhs,
        ProductFormula::Conj3Rhs,
        ProductFormula::Correction,
        ProductFormula::LambdaDblPrimeWtTilde,
        ProductFormula::LambdaDblPrimeWt,
    ];

    /// `(t_exp, q_exp)` of the geometric denominators and the binomial
    /// numerators `(1 − t^a q^b)` contributed by index `m`.
    fn factors(self, m: u32) -> (Vec<TqExp>, Vec<TqExp>) {
        match self {
            ProductFormula::Conj2Rhs => (vec![(m - 1, 3 * m - 2), (m, 3 * m - 1), (m - 1, 3 * m)], vec![]),
            ProductFormula::Conj3Rhs => (vec![(m - 1, 3 * m - 2), (m, 3 * m - 1), (m, 3 * m)], vec![]),
            ProductFormula::Correction => (vec![(m, 3 * m)], vec![(m - 1, 3 * m)]),
            ProductFormula::LambdaDblPrimeWtTilde => (vec![(m, 3 * m)], vec![]),
            ProductFormula::LambdaDblPrimeWt => (vec![(m - 1, 3 * m)], vec![]),
        }
    }
}

/// Expands `which` up to `q^N`.
pub fn product_formula(which: ProductFormula, qbound: u32) -> BiSeries {
    let mut acc = BiSeries::one(qbound);
    // Every factor at index m has q-exponent ≥ 3m − 2.
    for m in 1..=qbound.div_ceil(3) {
        let (denominators, numerators) = which.factors(m);
        for (a, b) in denominators.into_iter().filter(|&(_, b)| b <= qbound) {
            let g = geom_inverse(a, b, qbound).expect("q-exponent is positive");
            acc = acc.mul(&g).expect("same bound");
        }
        for (a, b) in numerators.into_iter().filter(|&(_, b)| b <= qbound) {
            let binomial = BiSeries::from_terms([(0, 0, BigInt::one()), (a, b, -BigInt::one())], qbound);
            acc = acc.mul(&binomial).expect("same bound");
        }
    }
    acc
}

/// Weight histogram of one stream: index `k` counts partitions of weight `k`.
fn weight_histogram(stream: PartitionStream, kind: WeightKind) -> Vec<u64> {
    let mut hist = Vec::new();
    for lam in stream {
        let w = lam.weight(kind) as usize;
        if hist.len() <= w {
            hist.resize(w + 1, 0);
        }
        hist[w] += 1;
    }
    hist
}

fn assemble(rows: Vec<Vec<u64>>, qbound: u32) -> BiSeries {
    let mut s = BiSeries::zero(qbound);
    for (n, hist) in rows.into_iter().enumerate() {
        for (k, count) in hist.into_iter().enumerate() {
            s.add_term(k as u32, n as u32, BigInt::from(count));
        }
    }
    s
}

/// `Σ_{|λ| ≤ N} q^{|λ|} t^{weight(λ, kind)}` by direct enumeration.
pub fn lhs_sum(kind: WeightKind, qbound: u32) -> BiSeries {
    lhs_sum_jobs(kind, qbound, 1)
}

/// [`lhs_sum`] with partition sizes spread over `jobs` workers.
pub fn lhs_sum_jobs(kind: WeightKind, qbound: u32, jobs: usize) -> BiSeries {
    let rows = shard::map_sizes(qbound, jobs, |n| weight_histogram(partitions_of(n), kind));
    assemble(rows, qbound)
}

/// [`lhs_sum`] restricted to partitions accepted by `filter`.
pub fn lhs_sum_filtered(kind: WeightKind, qbound: u32, filter: PartitionFilter, jobs: usize) -> BiSeries {
    let rows = shard::map_sizes(qbound, jobs, |n| weight_histogram(PartitionStream::new(n, Some(filter)), kind));
    assemble(rows, qbound)
}
