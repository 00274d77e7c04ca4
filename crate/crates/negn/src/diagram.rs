//! Young-diagram primitives: construction, transposition, hooks, contents,
//! area, run-length decomposition, and partition enumeration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A Young diagram stored as its weakly decreasing row lengths.
///
/// The representation is canonical: rows are positive and weakly decreasing,
/// so structural equality coincides with equality of partitions. The empty
/// diagram is the empty row list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Builds a diagram from row lengths, rejecting non-canonical input.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition {
                input: format!("{rows:?}"),
                reason: "row lengths must be positive".into(),
            });
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                input: format!("{rows:?}"),
                reason: "row lengths must be weakly decreasing".into(),
            });
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of rows (equivalently, the height of the first column).
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Length of the first row; 0 for the empty diagram.
    pub fn width(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn area(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Reflection across the main diagonal: row j of the transpose has length
    /// equal to the number of rows of `self` with length >= j.
    pub fn transpose(&self) -> YoungDiagram {
        let cols = self.width();
        let rows = (1..=cols)
            .map(|j| self.rows.iter().filter(|&&r| r >= j).count())
            .collect();
        YoungDiagram { rows }
    }

    /// Hook length per box: boxes to the right, plus boxes below, plus one.
    /// Tables are ragged and 1-based in (row, column) like the diagram itself.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let col_heights = self.transpose();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .map(|j| (len - j) + (col_heights.rows[j - 1] - (i + 1)) + 1)
                    .collect()
            })
            .collect()
    }

    /// Content per box: column index minus row index (1-based), so the top
    /// left box has content 0 and contents increase to the right.
    pub fn contents(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &len)| (1..=len).map(|j| j as i64 - (i + 1) as i64).collect())
            .collect()
    }

    /// Run-length decomposition; errors on the empty diagram where k is
    /// undefined.
    pub fn runs(&self) -> Result<RunDecomposition> {
        if self.is_empty() {
            return Err(Error::EmptyRuns);
        }
        let a = run_multiplicities(&self.rows);
        let b = run_multiplicities(self.transpose().rows());
        debug_assert_eq!(a.len(), b.len());
        RunDecomposition::new(a, b)
    }
}

fn run_multiplicities(parts: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((value, count)) if *value == p => *count += 1,
            _ => out.push((p, 1usize)),
        }
    }
    out.into_iter().map(|(_, count)| count).collect()
}

impl fmt::Display for YoungDiagram {
    /// Comma-separated row lengths; the empty diagram prints as the empty
    /// string, matching the textual partition format accepted by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.rows {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungDiagram({:?})", self.rows)
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let mut rows = Vec::new();
        for token in trimmed.split(',') {
            let part: usize = token.trim().parse().map_err(|_| Error::InvalidPartition {
                input: s.into(),
                reason: format!("cannot parse {token:?} as a positive integer"),
            })?;
            rows.push(part);
        }
        YoungDiagram::new(rows).map_err(|_| Error::InvalidPartition {
            input: s.into(),
            reason: "row lengths must be positive and weakly decreasing".into(),
        })
    }
}

/// Run-length view of a nonempty diagram: `a[i]` counts rows of equal width
/// from the top down, `b[i]` counts columns of equal height from left to
/// right. Both lists have the same length k, with prefix sums `A` and `B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunDecomposition {
    a: Vec<usize>,
    b: Vec<usize>,
    prefix_a: Vec<usize>,
    prefix_b: Vec<usize>,
}

impl RunDecomposition {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyRuns);
        }
        if a.len() != b.len() {
            return Err(Error::RunCountMismatch {
                rows: a.len(),
                cols: b.len(),
            });
        }
        if a.iter().chain(b.iter()).any(|&m| m == 0) {
            return Err(Error::ZeroRunMultiplicity);
        }
        let prefix_a = prefix_sums(&a);
        let prefix_b = prefix_sums(&b);
        Ok(RunDecomposition {
            a,
            b,
            prefix_a,
            prefix_b,
        })
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    /// Row-run multiplicities a_1..a_k, top to bottom.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// Column-run multiplicities b_1..b_k, left to right.
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Prefix sums A_i = a_1 + ... + a_i.
    pub fn prefix_a(&self) -> &[usize] {
        &self.prefix_a
    }

    /// Prefix sums B_i = b_1 + ... + b_i.
    pub fn prefix_b(&self) -> &[usize] {
        &self.prefix_b
    }

    /// Reconstructs the unique diagram with this run structure. The i-th row
    /// group (a_i rows) has width B_{k+1-i}: the leftmost column group is the
    /// tallest, so widths are the reversed prefix sums of b.
    pub fn to_diagram(&self) -> YoungDiagram {
        let k = self.k();
        let mut rows = Vec::with_capacity(self.prefix_a[k - 1]);
        for i in 0..k {
            let width = self.prefix_b[k - 1 - i];
            rows.extend(std::iter::repeat_n(width, self.a[i]));
        }
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        YoungDiagram { rows }
    }
}

fn prefix_sums(xs: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    xs.iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect()
}

/// All partitions of `n` in descending lexicographic order of row vectors,
/// e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1) for n = 4.
pub fn partitions_of(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(rem: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
    if rem == 0 {
        out.push(YoungDiagram {
            rows: current.clone(),
        });
        return;
    }
    for part in (1..=cap.min(rem)).rev() {
        current.push(part);
        descend(rem - part, part, current, out);
        current.pop();
    }
}

/// All partitions of every area in 0..=max_area, by area and then in the
/// order of [`partitions_of`].
pub fn partitions_up_to(max_area: usize) -> Vec<YoungDiagram> {
    (0..=max_area).flat_map(partitions_of).collect()
}
