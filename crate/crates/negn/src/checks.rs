//! Exact verification of the duality identities, and deterministic random
//! corpus generation for sweeps.
//!
//! Every check compares canonical Laurent polynomials, never sampled values:
//! each report carries the left side and the fully transformed right side
//! (sign and N -> -N substitution already applied), and holds exactly when
//! the two are identical.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::YoungDiagram;
use crate::error::Result;
use crate::invariants::{casimir_formula, dim_polynomial};
use crate::poly::LaurentPoly;
use crate::stable::StableRep;

/// Which identity a report is about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Identity {
    /// dim(Y, N) = (-1)^area dim(Y^T, -N) for a fixed diagram.
    Classic,
    /// dim(D(lambda,tau), N) = (-1)^(area sum) dim(D(tau,lambda), -N).
    Prop1,
    /// C(D(lambda,tau), N) = -C(D(lambda^T,tau^T), -N).
    Prop2,
    /// dim(D(lambda,tau)) = dim(D(tau^T,lambda^T)).
    Z2,
    /// Vanishing constant term of the Casimir for self-transpose shapes.
    ConstTerm,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Classic => "classic",
            Identity::Prop1 => "prop1",
            Identity::Prop2 => "prop2",
            Identity::Z2 => "z2",
            Identity::ConstTerm => "const-term",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a check was run on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Subject {
    Diagram(YoungDiagram),
    Rep(StableRep),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Diagram(y) => write!(f, "lambda={y}"),
            Subject::Rep(r) => write!(f, "{r}"),
        }
    }
}

/// Outcome of one identity check. `holds` is true exactly when `lhs` and
/// `rhs_transformed` are identical canonical polynomials; the sign, where
/// one applies, is reported separately so that a failure distinguishes a
/// wrong sign from a wrong shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub identity: Identity,
    pub subject: Subject,
    pub holds: bool,
    pub sign: Option<i8>,
    pub lhs: LaurentPoly,
    pub rhs_transformed: LaurentPoly,
    pub detail: String,
}

impl CheckReport {
    fn from_sides(
        identity: Identity,
        subject: Subject,
        sign: Option<i8>,
        lhs: LaurentPoly,
        rhs_transformed: LaurentPoly,
        detail: String,
    ) -> CheckReport {
        let holds = lhs == rhs_transformed;
        CheckReport {
            identity,
            subject,
            holds,
            sign,
            lhs,
            rhs_transformed,
            detail,
        }
    }
}

fn parity_sign(area: usize) -> i8 {
    if area.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn apply_sign(p: &LaurentPoly, sign: i8) -> LaurentPoly {
    if sign >= 0 {
        p.clone()
    } else {
        -p
    }
}

/// Classic duality for a fixed (N-independent) diagram:
/// dim(Y, N) = (-1)^area(Y) dim(Y^T, -N) as exact polynomials.
pub fn check_classic(y: &YoungDiagram) -> Result<CheckReport> {
    let sign = parity_sign(y.area());
    let lhs = dim_polynomial(&StableRep::new(y.clone(), YoungDiagram::empty()))?;
    let partner = dim_polynomial(&StableRep::new(y.transpose(), YoungDiagram::empty()))?;
    let rhs = apply_sign(&partner.substitute_neg(), sign);
    let detail = format!("dim({y}) vs {sign:+} * dim(transpose, -N)");
    Ok(CheckReport::from_sides(
        Identity::Classic,
        Subject::Diagram(y.clone()),
        Some(sign),
        lhs,
        rhs,
        detail,
    ))
}

/// Dimension duality of a stable family against its swapped partner:
/// dim(D(lambda,tau), N) = (-1)^(area(lambda)+area(tau)) dim(D(tau,lambda), -N).
pub fn check_prop1(rep: &StableRep) -> Result<CheckReport> {
    let sign = parity_sign(rep.lambda().area() + rep.tau().area());
    let lhs = dim_polynomial(rep)?;
    let partner = dim_polynomial(&rep.swap())?;
    let rhs = apply_sign(&partner.substitute_neg(), sign);
    let detail = format!("dim({rep}) vs {sign:+} * dim(swap, -N)");
    Ok(CheckReport::from_sides(
        Identity::Prop1,
        Subject::Rep(rep.clone()),
        Some(sign),
        lhs,
        rhs,
        detail,
    ))
}

/// Casimir duality: C(D(lambda,tau), N) = -C(D(lambda^T,tau^T), -N) as exact
/// Laurent polynomials.
pub fn check_prop2(rep: &StableRep) -> Result<CheckReport> {
    let lhs = casimir_formula(rep);
    let rhs = -casimir_formula(&rep.transpose_both()).substitute_neg();
    let detail = format!("casimir({rep}) vs -casimir(transpose_both, -N)");
    Ok(CheckReport::from_sides(
        Identity::Prop2,
        Subject::Rep(rep.clone()),
        Some(-1),
        lhs,
        rhs,
        detail,
    ))
}

/// Dynkin-automorphism identity: the families D(lambda,tau) and
/// D(tau^T,lambda^T) have the same dimension polynomial.
pub fn check_z2(rep: &StableRep) -> Result<CheckReport> {
    let lhs = dim_polynomial(rep)?;
    let rhs = dim_polynomial(&rep.z2_partner())?;
    let detail = format!("dim({rep}) vs dim(z2 partner)");
    Ok(CheckReport::from_sides(
        Identity::Z2,
        Subject::Rep(rep.clone()),
        Some(1),
        lhs,
        rhs,
        detail,
    ))
}

/// Vanishing constant term of the Casimir: applies when tau is empty and
/// lambda is self-transpose, or when lambda = tau^T. Reps matching neither
/// hypothesis are reported as not applicable (and hold vacuously).
pub fn check_constant_term(rep: &StableRep) -> Result<CheckReport> {
    let self_dual = rep.tau().is_empty() && rep.lambda() == &rep.lambda().transpose();
    let mirrored = rep.lambda() == &rep.tau().transpose();
    if !self_dual && !mirrored {
        return Ok(CheckReport::from_sides(
            Identity::ConstTerm,
            Subject::Rep(rep.clone()),
            None,
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            "not applicable: lambda is not self-transpose with empty tau, nor transpose of tau"
                .into(),
        ));
    }
    let casimir = casimir_formula(rep);
    let lhs = LaurentPoly::constant(casimir.constant_term());
    let hypothesis = if self_dual {
        "lambda self-transpose, tau empty"
    } else {
        "lambda = transpose(tau)"
    };
    let detail = format!("constant term of {casimir} under {hypothesis}");
    Ok(CheckReport::from_sides(
        Identity::ConstTerm,
        Subject::Rep(rep.clone()),
        None,
        lhs,
        LaurentPoly::zero(),
        detail,
    ))
}

/// Counting table P[n][m] = number of partitions of n with parts <= m.
fn partition_counts(max: usize) -> Vec<Vec<u128>> {
    let mut table = vec![vec![0u128; max + 1]; max + 1];
    table[0].fill(1);
    for n in 1..=max {
        for m in 1..=max {
            table[n][m] = table[n][m - 1]
                + if m <= n {
                    table[n - m][m.min(n - m)]
                } else {
                    0
                };
        }
    }
    table
}

fn sample_partition(rng: &mut ChaCha8Rng, n: usize, counts: &[Vec<u128>]) -> YoungDiagram {
    let mut rows = Vec::new();
    let mut rem = n;
    let mut cap = n;
    while rem > 0 {
        let total = counts[rem][cap.min(rem)];
        let mut ticket = rng.gen_range(0..total);
        for part in (1..=cap.min(rem)).rev() {
            let weight = counts[rem - part][part.min(rem - part)];
            if ticket < weight {
                rows.push(part);
                rem -= part;
                cap = part;
                break;
            }
            ticket -= weight;
        }
    }
    YoungDiagram::new(rows).expect("sampled parts are weakly decreasing")
}

/// Deterministic pseudo-random reps: for each rep, an area is drawn
/// uniformly from 0..=max_area for lambda and then tau, and a partition of
/// that area is drawn uniformly using exact counting tables. The same seed
/// always yields the same corpus.
pub fn random_corpus(seed: u64, max_area: usize, count: usize) -> Vec<StableRep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = partition_counts(max_area);
    (0..count)
        .map(|_| {
            let lam_area = rng.gen_range(0..=max_area);
            let lambda = sample_partition(&mut rng, lam_area, &counts);
            let tau_area = rng.gen_range(0..=max_area);
            let tau = sample_partition(&mut rng, tau_area, &counts);
            StableRep::new(lambda, tau)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{partitions_of, partitions_up_to};
    use std::collections::HashMap;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn rep(lambda: &[usize], tau: &[usize]) -> StableRep {
        StableRep::new(yd(lambda), yd(tau))
    }

    #[test]
    fn classic_fixtures() {
        let r = check_classic(&yd(&[1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.sign, Some(-1));
        assert_eq!(r.lhs.to_string(), "N");

        let r = check_classic(&yd(&[3, 3, 1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.sign, Some(-1));

        // Symmetric/antisymmetric square pair.
        let r = check_classic(&yd(&[2])).unwrap();
        assert!(r.holds);
        assert_eq!(r.sign, Some(1));
        assert_eq!(r.lhs.to_string(), "N^2/2 + N/2");
    }

    #[test]
    fn prop1_fixtures() {
        let r = check_prop1(&rep(&[1], &[1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.sign, Some(1));
        assert_eq!(r.lhs.to_string(), "N^2 - 1");
        assert_eq!(r.rhs_transformed.to_string(), "N^2 - 1");

        let r = check_prop1(&rep(&[4, 2, 1], &[3, 1])).unwrap();
        assert!(r.holds);
        assert_eq!(r.sign, Some(-1));

        let r = check_prop1(&rep(&[1], &[])).unwrap();
        assert!(r.holds);
        assert_eq!(r.sign, Some(-1));
        assert_eq!(r.lhs.to_string(), "N");
    }

    #[test]
    fn prop2_fixtures() {
        assert!(check_prop2(&rep(&[1], &[1])).unwrap().holds);
        assert!(check_prop2(&rep(&[2], &[])).unwrap().holds);
        assert!(check_prop2(&rep(&[4, 2, 1], &[3, 1])).unwrap().holds);
    }

    #[test]
    fn z2_fixtures() {
        assert!(check_z2(&rep(&[1], &[1])).unwrap().holds);
        assert!(check_z2(&rep(&[2], &[1])).unwrap().holds);
        assert!(check_z2(&rep(&[4, 2, 1], &[3, 1])).unwrap().holds);
    }

    #[test]
    fn const_term_fixtures() {
        let r = check_constant_term(&rep(&[2, 1], &[])).unwrap();
        assert!(r.holds);
        assert!(!r.detail.starts_with("not applicable"));

        let r = check_constant_term(&rep(&[1], &[1])).unwrap();
        assert!(r.holds);

        let r = check_constant_term(&rep(&[2], &[])).unwrap();
        assert!(r.holds);
        assert!(r.detail.starts_with("not applicable"));
    }

    #[test]
    fn const_term_reports_honest_failures() {
        // lambda = transpose(tau) falls under the checked hypothesis but the
        // constant term is genuinely nonzero for asymmetric shapes; the
        // report must say so.
        let r = check_constant_term(&rep(&[2], &[1, 1])).unwrap();
        assert!(!r.holds);
        assert_eq!(r.lhs.to_string(), "4");
        // Equal diagrams do have a vanishing constant term, but sit outside
        // the checked hypotheses.
        let r = check_constant_term(&rep(&[2], &[2])).unwrap();
        assert!(r.holds);
        assert!(r.detail.starts_with("not applicable"));
    }

    #[test]
    fn prop1_same_sign_under_swap() {
        for lambda in partitions_up_to(3) {
            for tau in partitions_up_to(3) {
                let r = StableRep::new(lambda.clone(), tau.clone());
                let a = check_prop1(&r).unwrap();
                let b = check_prop1(&r.swap()).unwrap();
                assert_eq!(a.sign, b.sign);
                assert_eq!(a.holds, b.holds);
                // Mirrored witnesses: each side is the sign-twisted
                // substitution of the other report's opposite side.
                assert_eq!(
                    a.lhs,
                    apply_sign(&b.rhs_transformed.substitute_neg(), a.sign.unwrap())
                );
            }
        }
    }

    #[test]
    fn double_substitution_restores_witnesses() {
        for rep in random_corpus(7, 4, 20) {
            let r = check_prop1(&rep).unwrap();
            assert_eq!(r.lhs.substitute_neg().substitute_neg(), r.lhs);
            assert_eq!(
                r.rhs_transformed.substitute_neg().substitute_neg(),
                r.rhs_transformed
            );
        }
    }

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = random_corpus(42, 6, 100);
        let b = random_corpus(42, 6, 100);
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        for r in &a {
            assert!(r.lambda().area() <= 6);
            assert!(r.tau().area() <= 6);
        }
        let c = random_corpus(43, 6, 100);
        assert_ne!(a, c);
    }

    #[test]
    fn corpus_with_zero_area_is_trivial() {
        let reps = random_corpus(42, 0, 3);
        assert_eq!(reps, vec![rep(&[], &[]), rep(&[], &[]), rep(&[], &[])]);
    }

    #[test]
    fn partition_sampling_is_uniform_per_area() {
        // Area is drawn first, then a partition of that area uniformly; with
        // max_area = 4 each of the five partitions of 4 should appear with
        // frequency 1/5 within the area-4 slice.
        let reps = random_corpus(1, 4, 20_000);
        let mut by_shape: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut total = 0usize;
        for r in &reps {
            if r.lambda().area() == 4 {
                *by_shape.entry(r.lambda().rows().to_vec()).or_default() += 1;
                total += 1;
            }
        }
        assert_eq!(by_shape.len(), partitions_of(4).len());
        for (shape, &count) in &by_shape {
            let freq = count as f64 / total as f64;
            assert!(
                (freq - 0.2).abs() < 0.03,
                "partition {shape:?} has frequency {freq}"
            );
        }
    }

    #[test]
    fn reports_serialize_identity_names() {
        assert_eq!(Identity::Prop1.name(), "prop1");
        assert_eq!(Identity::ConstTerm.name(), "const-term");
    }
}
