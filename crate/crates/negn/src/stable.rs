//! Stable representation families D(lambda, tau): conversions between Young
//! diagrams and Dynkin labels, realization at a concrete rank, and the
//! involutions appearing in the duality identities.
//!
//! The label vector of D(lambda, tau) at rank N is
//! (lambda_1, ..., lambda_k, 0, ..., 0, tau_k, ..., tau_1): the lambda block
//! stays at the left end, the tau block at the right end, and only the zero
//! gap grows with N. The two blocks use different encodings, fixed by the
//! defining examples: lambda enters by column multiplicities (label i counts
//! columns of lambda of height i) while tau enters by row multiplicities
//! (the label at position N-j counts rows of tau of length j, equivalently
//! columns of tau^T of height j).

use std::fmt;

use serde::Serialize;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};

/// A concrete highest weight for the rank N - 1 unitary series: N - 1
/// nonnegative integer labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinLabels {
    labels: Vec<usize>,
    rank_n: usize,
}

impl DynkinLabels {
    pub fn new(labels: Vec<usize>, rank_n: usize) -> Result<Self> {
        if rank_n < 2 {
            return Err(Error::RankTooSmallForLabels(rank_n as i64));
        }
        if labels.len() != rank_n - 1 {
            return Err(Error::LabelCountMismatch {
                labels: labels.len(),
                rank: rank_n as i64,
                expected: rank_n as i64 - 1,
            });
        }
        Ok(DynkinLabels { labels, rank_n })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn rank_n(&self) -> usize {
        self.rank_n
    }
}

/// Label i = number of columns of `y` of height i, up to the tallest column,
/// so the final entry is positive and no trailing zeros appear.
pub fn young_to_labels_cols(y: &YoungDiagram) -> Vec<usize> {
    let rows = y.rows();
    (0..rows.len())
        .map(|i| rows[i] - rows.get(i + 1).copied().unwrap_or(0))
        .collect()
}

/// Label j = number of rows of `y` of length j; equals
/// `young_to_labels_cols(transpose(y))`.
pub fn young_to_labels_rows(y: &YoungDiagram) -> Vec<usize> {
    young_to_labels_cols(&y.transpose())
}

/// Inverse of the column encoding: build labels[i] columns of height i + 1
/// and read off the row lengths. Trailing or interior zeros are fine.
pub fn labels_to_young(labels: &[usize]) -> YoungDiagram {
    // Row r has one box per column of height >= r, i.e. the suffix sum.
    let mut rows: Vec<usize> = Vec::with_capacity(labels.len());
    let mut suffix = 0;
    for &label in labels.iter().rev() {
        suffix += label;
        rows.push(suffix);
    }
    rows.reverse();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    YoungDiagram::new(rows).expect("suffix sums are weakly decreasing")
}

/// A stable family of representations named by two N-independent diagrams.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StableRep {
    lambda: YoungDiagram,
    tau: YoungDiagram,
}

impl StableRep {
    pub fn new(lambda: YoungDiagram, tau: YoungDiagram) -> Self {
        StableRep { lambda, tau }
    }

    pub fn lambda(&self) -> &YoungDiagram {
        &self.lambda
    }

    pub fn tau(&self) -> &YoungDiagram {
        &self.tau
    }

    /// Smallest rank at which the family is realized: the lambda block
    /// (tallest column of lambda) and the tau block (widest row of tau) must
    /// fit side by side in N - 1 labels, and the rank is at least 2.
    pub fn n_min(&self) -> i64 {
        let blocks = self.lambda.row_count() + self.tau.width() + 1;
        (blocks as i64).max(2)
    }

    /// The Dynkin labels of the family member at rank `n`.
    pub fn realize(&self, n: i64) -> Result<DynkinLabels> {
        let n_min = self.n_min();
        if n < n_min {
            return Err(Error::RankBelowMin {
                n,
                n_min,
                rep: self.to_string(),
            });
        }
        let rank = n as usize;
        let mut labels = vec![0usize; rank - 1];
        for (i, &l) in young_to_labels_cols(&self.lambda).iter().enumerate() {
            labels[i] = l;
        }
        for (j, &t) in young_to_labels_rows(&self.tau).iter().enumerate() {
            // tau_j sits at position N - j (1-based), counted from the right.
            labels[rank - 2 - j] = t;
        }
        DynkinLabels::new(labels, rank)
    }

    /// The N-dependent Young diagram of the member at rank `n`; all column
    /// heights are at most n - 1.
    pub fn realized_young(&self, n: i64) -> Result<YoungDiagram> {
        Ok(labels_to_young(self.realize(n)?.labels()))
    }

    /// D(tau, lambda), the partner in the dimension duality.
    pub fn swap(&self) -> StableRep {
        StableRep::new(self.tau.clone(), self.lambda.clone())
    }

    /// D(lambda^T, tau^T), the partner in the Casimir duality.
    pub fn transpose_both(&self) -> StableRep {
        StableRep::new(self.lambda.transpose(), self.tau.transpose())
    }

    /// D(tau^T, lambda^T), the image under the Dynkin-diagram automorphism;
    /// equals swap composed with transpose_both.
    pub fn z2_partner(&self) -> StableRep {
        StableRep::new(self.tau.transpose(), self.lambda.transpose())
    }
}

impl fmt::Display for StableRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} tau={}", self.lambda, self.tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::partitions_up_to;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn rep(lambda: &[usize], tau: &[usize]) -> StableRep {
        StableRep::new(yd(lambda), yd(tau))
    }

    // Independent oracle: histogram column heights by scanning the diagram.
    fn column_height_histogram(y: &YoungDiagram) -> Vec<usize> {
        let mut hist = vec![0usize; y.row_count()];
        for j in 1..=y.width() {
            let height = y.rows().iter().filter(|&&r| r >= j).count();
            hist[height - 1] += 1;
        }
        hist
    }

    #[test]
    fn labels_cols_fixtures() {
        assert_eq!(young_to_labels_cols(&yd(&[4, 2, 1])), vec![2, 1, 1]);
        assert_eq!(young_to_labels_cols(&yd(&[1])), vec![1]);
        assert_eq!(young_to_labels_cols(&yd(&[3, 1])), vec![2, 1]);
        assert_eq!(
            young_to_labels_cols(&yd(&[3, 1])),
            column_height_histogram(&yd(&[3, 1]))
        );
        assert!(young_to_labels_cols(&YoungDiagram::empty()).is_empty());
    }

    #[test]
    fn labels_rows_fixtures() {
        assert_eq!(young_to_labels_rows(&yd(&[3, 1])), vec![1, 0, 1]);
        assert_eq!(young_to_labels_rows(&yd(&[1])), vec![1]);
        assert_eq!(young_to_labels_rows(&yd(&[2, 2])), vec![0, 2]);
    }

    #[test]
    fn labels_to_young_fixtures() {
        assert_eq!(labels_to_young(&[2, 1, 1]), yd(&[4, 2, 1]));
        assert_eq!(labels_to_young(&[]), YoungDiagram::empty());
        assert_eq!(labels_to_young(&[1, 0, 1]), yd(&[2, 1, 1]));
        assert_eq!(labels_to_young(&[0, 0]), YoungDiagram::empty());
    }

    #[test]
    fn labels_encodings_agree_exhaustively() {
        for y in partitions_up_to(10) {
            assert_eq!(
                young_to_labels_rows(&y),
                young_to_labels_cols(&y.transpose())
            );
            assert_eq!(labels_to_young(&young_to_labels_cols(&y)), y);
            assert_eq!(young_to_labels_cols(&y), column_height_histogram(&y));
        }
    }

    #[test]
    fn n_min_fixtures() {
        assert_eq!(rep(&[1], &[1]).n_min(), 3);
        assert_eq!(rep(&[4, 2, 1], &[3, 1]).n_min(), 7);
        assert_eq!(rep(&[], &[]).n_min(), 2);
        assert_eq!(rep(&[1], &[]).n_min(), 2);
    }

    #[test]
    fn realize_fixtures() {
        assert_eq!(rep(&[1], &[1]).realize(5).unwrap().labels(), &[1, 0, 0, 1]);
        assert_eq!(
            rep(&[4, 2, 1], &[3, 1]).realize(10).unwrap().labels(),
            &[2, 1, 1, 0, 0, 0, 1, 0, 1]
        );
        assert_eq!(rep(&[], &[]).realize(4).unwrap().labels(), &[0, 0, 0]);
        // Zero-gap realization at exactly n_min is accepted.
        assert_eq!(rep(&[1], &[1]).realize(3).unwrap().labels(), &[1, 1]);
    }

    #[test]
    fn realize_below_n_min_is_an_error() {
        let r = rep(&[4, 2, 1], &[3, 1]);
        match r.realize(6) {
            Err(Error::RankBelowMin { n, n_min, .. }) => {
                assert_eq!((n, n_min), (6, 7));
            }
            other => panic!("expected RankBelowMin, got {other:?}"),
        }
    }

    #[test]
    fn realized_young_fixtures() {
        assert_eq!(rep(&[1], &[1]).realized_young(4).unwrap(), yd(&[2, 1, 1]));
        assert_eq!(rep(&[1], &[]).realized_young(7).unwrap(), yd(&[1]));

        // Realized diagram of the worked example at rank 10, confirmed
        // against the column-height histogram oracle.
        let y = rep(&[4, 2, 1], &[3, 1]).realized_young(10).unwrap();
        let mut heights: Vec<usize> = (1..=y.width())
            .map(|j| y.rows().iter().filter(|&&r| r >= j).count())
            .collect();
        heights.sort_unstable_by(|x, y| y.cmp(x));
        assert_eq!(heights, vec![9, 7, 3, 2, 1, 1]);
        assert_eq!(y, yd(&[6, 4, 3, 2, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn tau_free_family_keeps_its_diagram() {
        for lambda in partitions_up_to(6) {
            let r = StableRep::new(lambda.clone(), YoungDiagram::empty());
            let n_min = r.n_min();
            for n in n_min..n_min + 4 {
                assert_eq!(r.realized_young(n).unwrap(), lambda);
            }
        }
    }

    #[test]
    fn realization_shape() {
        for lambda in partitions_up_to(4) {
            for tau in partitions_up_to(4) {
                let r = StableRep::new(lambda.clone(), tau.clone());
                let n_min = r.n_min();
                for n in n_min..n_min + 3 {
                    let labels = r.realize(n).unwrap();
                    assert_eq!(labels.labels().len(), (n - 1) as usize);
                    // At least one zero separates the blocks past n_min.
                    if n > n_min && !lambda.is_empty() && !tau.is_empty() {
                        let gap_start = lambda.row_count();
                        let gap_end = n as usize - 1 - tau.width();
                        assert!(gap_start < gap_end);
                        assert!(labels.labels()[gap_start..gap_end].iter().all(|&l| l == 0));
                    }
                    // Column heights of the realized diagram stay below n.
                    let y = r.realized_young(n).unwrap();
                    assert!(y.row_count() <= (n - 1) as usize);
                }
            }
        }
    }

    #[test]
    fn involution_fixtures() {
        let r = rep(&[4, 2, 1], &[3, 1]);
        assert_eq!(r.swap(), rep(&[3, 1], &[4, 2, 1]));
        assert_eq!(rep(&[1], &[1]).transpose_both(), rep(&[1], &[1]));
        assert_eq!(rep(&[2], &[1]).z2_partner(), rep(&[1], &[1, 1]));
    }

    #[test]
    fn involutions_compose() {
        for lambda in partitions_up_to(5) {
            for tau in partitions_up_to(4) {
                let r = StableRep::new(lambda.clone(), tau.clone());
                assert_eq!(r.swap().swap(), r);
                assert_eq!(r.transpose_both().transpose_both(), r);
                assert_eq!(r.z2_partner().z2_partner(), r);
                assert_eq!(r.z2_partner(), r.transpose_both().swap());
                assert_eq!(r.z2_partner(), r.swap().transpose_both());
            }
        }
    }

    #[test]
    fn dynkin_labels_validation() {
        assert!(DynkinLabels::new(vec![1, 0, 1], 4).is_ok());
        assert!(DynkinLabels::new(vec![1], 1).is_err());
        assert!(DynkinLabels::new(vec![1, 2], 4).is_err());
    }

    #[test]
    fn rep_serializes_to_documented_json() {
        let r = rep(&[4, 2, 1], &[3, 1]);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"lambda":[4,2,1],"tau":[3,1]}"#
        );
        assert_eq!(r.to_string(), "lambda=4,2,1 tau=3,1");
    }
}
