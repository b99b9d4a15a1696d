//! Partitions, Young diagrams, arm/leg statistics, dominance order,
//! vertical strips, and the combinatorial coefficient formulas c, b and Psi
//! in both the (q,t) and alpha variants.
//!
//! Cells are 1-indexed: row i increases downwards, column j to the right.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::{RatFunc, VarSet};
use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A diagram cell (row, col), both 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single_column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-indexed part; zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.col as u32 <= self.part(s.row)
    }

    fn stat(&self, s: Cell) -> Result<()> {
        if self.contains_cell(s) {
            Ok(())
        } else {
            Err(Error::CellOutsideDiagram(s.row, s.col))
        }
    }

    /// Squares east of s.
    pub fn arm(&self, s: Cell) -> Result<u32> {
        self.stat(s)?;
        Ok(self.part(s.row) - s.col as u32)
    }

    /// Squares west of s.
    pub fn coarm(&self, s: Cell) -> Result<u32> {
        self.stat(s)?;
        Ok(s.col as u32 - 1)
    }

    /// Squares south of s.
    pub fn leg(&self, s: Cell) -> Result<u32> {
        self.stat(s)?;
        Ok(self.conjugate().part(s.col) - s.row as u32)
    }

    /// Squares north of s.
    pub fn coleg(&self, s: Cell) -> Result<u32> {
        self.stat(s)?;
        Ok(s.row as u32 - 1)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| {
            (1..=p as usize).map(move |j| Cell { row: i + 1, col: j })
        })
    }

    /// lambda + (1^k): one square added to each of the first k rows.
    pub fn plus_ones(&self, k: usize) -> Partition {
        let mut parts: Vec<u32> = (1..=k.max(self.len())).map(|i| self.part(i)).collect();
        for p in parts.iter_mut().take(k) {
            *p += 1;
        }
        Partition { parts }
    }

    /// Dominance comparison for equal weights; `None` when incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Option<Ordering>> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch);
        }
        let n = self.len().max(other.len());
        let mut le = true;
        let mut ge = true;
        let (mut sa, mut sb) = (0u32, 0u32);
        for i in 1..=n {
            sa += self.part(i);
            sb += other.part(i);
            if sa > sb {
                le = false;
            }
            if sa < sb {
                ge = false;
            }
        }
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    /// True iff self <= other in dominance order (equal weights required).
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        Ok(matches!(
            self.dominance_cmp(other)?,
            Some(Ordering::Less) | Some(Ordering::Equal)
        ))
    }

    /// All partitions of weight n with at most `max_len` parts, in
    /// lexicographically decreasing order.
    pub fn all(n: u32, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(n: u32, max_part: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            let hi = max_part.min(n);
            for p in (1..=hi).rev() {
                prefix.push(p);
                rec(n - p, p, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        rec(n, n, max_len, &mut prefix, &mut out);
        out
    }

    /// All mu >= lambda (containment) with mu - lambda a vertical k-strip and
    /// at most `max_len` rows, lexicographically decreasing.
    pub fn vertical_strips(&self, k: usize, max_len: usize) -> Vec<Partition> {
        let rows = max_len.max(self.len());
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        fn rec(
            lam: &Partition,
            row: usize,
            rows: usize,
            max_len: usize,
            remaining: usize,
            chosen: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                let mut parts = chosen.clone();
                parts.extend((chosen.len() + 1..=lam.len()).map(|i| lam.part(i)));
                if let Ok(p) = Partition::new(parts) {
                    if p.len() <= max_len {
                        out.push(p);
                    }
                }
                return;
            }
            if row > rows {
                return;
            }
            for add in [1u32, 0] {
                let v = lam.part(row) + add;
                if chosen.last().map_or(true, |&prev| prev >= v) {
                    chosen.push(v);
                    rec(lam, row + 1, rows, max_len, remaining - add as usize, chosen, out);
                    chosen.pop();
                }
            }
        }
        rec(self, 1, rows, max_len, k, &mut chosen, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    /// True iff self - other is a vertical strip (any size).
    pub fn is_vertical_strip_over(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|i| {
            let d = self.part(i) as i64 - other.part(i) as i64;
            d == 0 || d == 1
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {p:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

// ---------------------------------------------------------------------------
// Coefficient formulas
// ---------------------------------------------------------------------------

/// c_lambda(q,t) = prod over cells (1 - q^a t^(l+1)).
pub fn c_lambda_qt(lam: &Partition) -> RatFunc {
    let mut out = RatFunc::one(VarSet::Qt);
    for s in lam.cells() {
        let a = lam.arm(s).unwrap() as i64;
        let l = lam.leg(s).unwrap() as i64;
        out = out * RatFunc::one_minus_qt(a, l + 1);
    }
    out
}

/// c_lambda(alpha) = prod over cells (alpha a + l + 1).
pub fn c_lambda_alpha(lam: &Partition) -> RatFunc {
    let mut out = RatFunc::one(VarSet::Alpha);
    for s in lam.cells() {
        let a = lam.arm(s).unwrap() as i64;
        let l = lam.leg(s).unwrap() as i64;
        out = out
            * (RatFunc::from_int(a, VarSet::Alpha) * RatFunc::alpha()
                + RatFunc::from_int(l + 1, VarSet::Alpha));
    }
    out
}

/// b_lambda(s) in the (q,t) form; 1 for cells outside the diagram.
pub fn b_lambda_qt(lam: &Partition, s: Cell) -> RatFunc {
    if !lam.contains_cell(s) {
        return RatFunc::one(VarSet::Qt);
    }
    let a = lam.arm(s).unwrap() as i64;
    let l = lam.leg(s).unwrap() as i64;
    RatFunc::one_minus_qt(a, l + 1)
        .try_div(&RatFunc::one_minus_qt(a + 1, l))
        .expect("denominator 1-q^(a+1)t^l is nonzero")
}

/// b_lambda(s) in the alpha form; 1 for cells outside the diagram.
pub fn b_lambda_alpha(lam: &Partition, s: Cell) -> RatFunc {
    if !lam.contains_cell(s) {
        return RatFunc::one(VarSet::Alpha);
    }
    let a = lam.arm(s).unwrap() as i64;
    let l = lam.leg(s).unwrap() as i64;
    let al = RatFunc::alpha();
    let num = RatFunc::from_int(a, VarSet::Alpha) * &al + RatFunc::from_int(l + 1, VarSet::Alpha);
    let den = RatFunc::from_int(a + 1, VarSet::Alpha) * &al + RatFunc::from_int(l, VarSet::Alpha);
    num.try_div(&den).expect("alpha(a+1)+l is nonzero")
}

/// Cells entering the Psi product: cells of mu whose column meets mu - lambda
/// but whose row does not.
fn psi_cells(mu: &Partition, lam: &Partition) -> Result<Vec<Cell>> {
    if !mu.contains(lam) || !mu.is_vertical_strip_over(lam) {
        return Err(Error::NotVerticalStrip);
    }
    let mut cols = Vec::new();
    let mut rows = Vec::new();
    for i in 1..=mu.len() {
        if mu.part(i) > lam.part(i) {
            rows.push(i);
            cols.push(mu.part(i) as usize);
        }
    }
    Ok(mu
        .cells()
        .filter(|s| cols.contains(&s.col) && !rows.contains(&s.row))
        .collect())
}

/// Pieri coefficient Psi_{mu/lambda}(q,t).
pub fn psi_qt(mu: &Partition, lam: &Partition) -> Result<RatFunc> {
    let mut out = RatFunc::one(VarSet::Qt);
    for s in psi_cells(mu, lam)? {
        out = out * b_lambda_qt(mu, s).try_div(&b_lambda_qt(lam, s))?;
    }
    Ok(out)
}

/// Pieri coefficient Psi_{mu/lambda}(alpha).
pub fn psi_alpha(mu: &Partition, lam: &Partition) -> Result<RatFunc> {
    let mut out = RatFunc::one(VarSet::Alpha);
    for s in psi_cells(mu, lam)? {
        out = out * b_lambda_alpha(mu, s).try_div(&b_lambda_alpha(lam, s))?;
    }
    Ok(out)
}

/// Check Psi_{mu+1/lambda+1} = Psi_{mu/lambda} (the shift adds a full column
/// of height n to both shapes).
pub fn shift_invariance_check(mu: &Partition, lam: &Partition, n: usize) -> Result<bool> {
    let n = n.max(mu.len()).max(lam.len());
    let a = psi_qt(&mu.plus_ones(n), &lam.plus_ones(n))?;
    let b = psi_qt(mu, lam)?;
    Ok(a == b)
}

// ---------------------------------------------------------------------------
// Extended partitions
// ---------------------------------------------------------------------------

/// A partition extended to allow a common rational shift: entries
/// beta_i = base_i + offset for i = 1..n_vars, with base a partition whose
/// n_vars-th entry is 0 (the canonical anchor beta - beta_N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPartition {
    base: Partition,
    offset: BigRational,
    n_vars: usize,
}

impl ExtendedPartition {
    pub fn new(base: Partition, offset: BigRational, n_vars: usize) -> Result<Self> {
        if base.len() > n_vars {
            return Err(Error::TooManyParts(base.len(), n_vars));
        }
        let mut base = base;
        let mut offset = offset;
        // canonicalize so the last entry of base is zero
        let last = base.part(n_vars);
        if last > 0 {
            offset += BigRational::from(BigInt::from(last));
            let parts = (1..=n_vars).map(|i| base.part(i) - last).collect();
            base = Partition::new(parts).expect("shift preserves monotonicity");
        }
        Ok(ExtendedPartition { base, offset, n_vars })
    }

    pub fn from_partition(p: &Partition, n_vars: usize) -> Result<Self> {
        Self::new(p.clone(), BigRational::zero(), n_vars)
    }

    /// Parse entries like "(1,1,-1,-1)" (integer entries) into an extended
    /// partition on n_vars = number of entries.
    pub fn parse_int_entries(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries: Vec<i64> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad entry {p:?}")))
            })
            .collect::<Result<_>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty extended partition".into()));
        }
        let n = entries.len();
        let last = entries[n - 1];
        let parts: Vec<u32> = entries
            .iter()
            .map(|&e| {
                let d = e - last;
                if d < 0 {
                    Err(Error::Invalid("entries not weakly decreasing".into()))
                } else {
                    Ok(d as u32)
                }
            })
            .collect::<Result<_>>()?;
        Self::new(Partition::new(parts)?, BigRational::from(BigInt::from(last)), n)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// The shifted partition beta - beta_N.
    pub fn base(&self) -> &Partition {
        &self.base
    }

    /// The common shift beta_N.
    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn offset_as_int(&self) -> Option<i64> {
        if self.offset.is_integer() {
            let n = self.offset.to_integer();
            i64::try_from(&n).ok()
        } else {
            None
        }
    }

    /// Replace the base, keeping the anchor, then re-canonicalize.
    pub fn with_base(&self, base: Partition) -> Result<Self> {
        Self::new(base, self.offset.clone(), self.n_vars)
    }
}

impl fmt::Display for ExtendedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = (1..=self.n_vars)
            .map(|i| {
                let v = BigRational::from(BigInt::from(self.base.part(i))) + &self.offset;
                if v.is_integer() {
                    v.to_integer().to_string()
                } else {
                    v.to_string()
                }
            })
            .collect();
        write!(f, "({})", entries.join(","))
    }
}
