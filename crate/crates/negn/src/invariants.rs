//! Dimensions and second-order Casimir eigenvalues.
//!
//! Dimensions come in three forms: the hook/content product at a concrete
//! rank, an independent Weyl-formula product used as a runtime oracle, and
//! the exact polynomial in N obtained by interpolating a stable family over
//! its stable range. The Casimir eigenvalue of a stable family is a Laurent
//! polynomial with exponents in {1, 0, -1}; it is cross-checked against the
//! highest-weight inner product (lambda, lambda) + 2 (lambda, rho) computed
//! directly from the inverse Cartan pairing.

use num::{BigInt, BigRational, One, Zero};

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::poly::{interpolate, LaurentPoly, Rational};
use crate::stable::{young_to_labels_cols, young_to_labels_rows, DynkinLabels, StableRep};

/// Dimension of the SU(n) irrep with diagram `y` by the hook/content
/// formula: the product over boxes of (n + content) divided by the product
/// of hook lengths. Returns 0 when the diagram has more than `n` rows.
pub fn dim_hook(y: &YoungDiagram, n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidRank(n));
    }
    if y.row_count() as i64 > n {
        return Ok(BigInt::zero());
    }
    let mut numer = BigInt::one();
    for row in y.contents() {
        for content in row {
            numer *= BigInt::from(n + content);
        }
    }
    let mut denom = BigInt::one();
    for row in y.hook_lengths() {
        for hook in row {
            denom *= BigInt::from(hook);
        }
    }
    let (quot, rem) = num::Integer::div_rem(&numer, &denom);
    debug_assert!(rem.is_zero(), "hook product must divide content product");
    Ok(quot)
}

/// Independent dimension oracle: the Weyl formula as the product over
/// 1 <= i < j <= n of (l_i - l_j + j - i) / (j - i), with l the row lengths
/// padded to n entries. Agrees with `dim_hook` on all inputs; the agreement
/// is a checked property, not an assumption.
pub fn dim_weyl_oracle(y: &YoungDiagram, n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidRank(n));
    }
    if y.row_count() as i64 > n {
        return Ok(BigInt::zero());
    }
    let size = n as usize;
    let mut l = vec![0i64; size];
    for (i, &r) in y.rows().iter().enumerate() {
        l[i] = r as i64;
    }
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for i in 0..size {
        for j in i + 1..size {
            numer *= BigInt::from(l[i] - l[j] + (j - i) as i64);
            denom *= BigInt::from((j - i) as i64);
        }
    }
    let (quot, rem) = num::Integer::div_rem(&numer, &denom);
    debug_assert!(rem.is_zero(), "Weyl product must be integral");
    Ok(quot)
}

/// Dimension of the rank-n member of a stable family.
pub fn dim_stable(rep: &StableRep, n: i64) -> Result<BigInt> {
    dim_hook(&rep.realized_young(n)?, n)
}

/// Degree bound asserted for the dimension polynomial of a stable family.
pub fn dim_degree_bound(rep: &StableRep) -> i64 {
    (rep.lambda().area() + rep.tau().area()) as i64
}

/// The unique polynomial in N agreeing with `dim_stable` on the whole
/// stable range, obtained by exact interpolation at the nodes
/// n_min ..= n_min + area(lambda) + area(tau) + 3. The extra nodes have no
/// freedom left: any coefficient above the area bound means the convention
/// is broken somewhere, and is reported as an error rather than truncated.
pub fn dim_polynomial(rep: &StableRep) -> Result<LaurentPoly> {
    let n_min = rep.n_min();
    let bound = dim_degree_bound(rep);
    let points: Vec<(i64, Rational)> = (n_min..=n_min + bound + 3)
        .map(|n| Ok((n, Rational::from_integer(dim_stable(rep, n)?))))
        .collect::<Result<_>>()?;
    let poly = interpolate(&points)?;
    if let Some(found) = poly.degree().filter(|&d| d > bound) {
        return Err(Error::DegreeBound {
            rep: rep.to_string(),
            bound,
            found,
        });
    }
    Ok(poly)
}

/// Label sequences entering the Casimir formula, zero-padded to a common
/// length: lambda by column multiplicities, tau by row multiplicities.
fn casimir_labels(rep: &StableRep) -> (Vec<i64>, Vec<i64>) {
    let mut lam: Vec<i64> = young_to_labels_cols(rep.lambda())
        .into_iter()
        .map(|l| l as i64)
        .collect();
    let mut tau: Vec<i64> = young_to_labels_rows(rep.tau())
        .into_iter()
        .map(|t| t as i64)
        .collect();
    let k = lam.len().max(tau.len());
    lam.resize(k, 0);
    tau.resize(k, 0);
    (lam, tau)
}

/// Second-order Casimir eigenvalue of the family D(lambda, tau) as an exact
/// Laurent polynomial in N with exponents in {1, 0, -1}:
///
///   N * sum_i i (lambda_i + tau_i)
///   + sum_{i,j} min(i,j) (lambda_i lambda_j + tau_i tau_j)
///   - sum_i i^2 (lambda_i + tau_i)
///   - (1/N) (sum_i i (lambda_i - tau_i))^2
///
/// The N coefficient is area(lambda) + area(tau).
pub fn casimir_formula(rep: &StableRep) -> LaurentPoly {
    let (lam, tau) = casimir_labels(rep);
    let k = lam.len();

    let mut linear = BigInt::zero();
    let mut constant = BigInt::zero();
    let mut skew = BigInt::zero();
    for i in 1..=k {
        let (li, ti) = (lam[i - 1], tau[i - 1]);
        linear += BigInt::from(i as i64 * (li + ti));
        constant -= BigInt::from((i * i) as i64 * (li + ti));
        skew += BigInt::from(i as i64 * (li - ti));
        for j in 1..=k {
            let m = i.min(j) as i64;
            constant += BigInt::from(m * (li * lam[j - 1] + ti * tau[j - 1]));
        }
    }
    let inverse = -(&skew * &skew);

    LaurentPoly::from_terms([
        (1, Rational::from_integer(linear)),
        (0, Rational::from_integer(constant)),
        (-1, Rational::from_integer(inverse)),
    ])
}

/// The mixed part of the Casimir, (2/N) * area(lambda) * area(tau), so that
/// C(D(lambda, tau)) = C(D(lambda, 0)) + C(D(0, tau)) + cross term exactly.
pub fn casimir_cross_term(rep: &StableRep) -> LaurentPoly {
    let product = BigInt::from(rep.lambda().area()) * BigInt::from(rep.tau().area());
    LaurentPoly::monomial(-1, Rational::from_integer(BigInt::from(2) * product))
}

/// Casimir eigenvalue (lambda, lambda) + 2 (lambda, rho) straight from the
/// highest weight, using the pairing (w_i, w_j) = min(i,j) - ij/N between
/// fundamental weights in the minimal normalization (long roots of squared
/// length 2) and rho the sum of all fundamental weights. Validated against
/// `casimir_formula` rather than trusted.
pub fn casimir_direct(labels: &DynkinLabels) -> Rational {
    let n = BigRational::from_integer(BigInt::from(labels.rank_n() as i64));
    let rank = labels.rank_n() - 1;
    let l = labels.labels();

    let pairing = |i: usize, j: usize| -> Rational {
        let min = BigRational::from_integer(BigInt::from(i.min(j) as i64));
        let prod = BigRational::from_integer(BigInt::from((i * j) as i64));
        min - prod / &n
    };

    let mut value = Rational::zero();
    for i in 1..=rank {
        if l[i - 1] == 0 {
            continue;
        }
        let li = BigRational::from_integer(BigInt::from(l[i - 1] as i64));
        // (lambda, lambda) contribution.
        for j in 1..=rank {
            if l[j - 1] == 0 {
                continue;
            }
            let lj = BigRational::from_integer(BigInt::from(l[j - 1] as i64));
            value += &li * &lj * pairing(i, j);
        }
        // 2 (lambda, rho) contribution: rho pairs with every fundamental weight.
        for j in 1..=rank {
            value += BigRational::from_integer(BigInt::from(2)) * &li * pairing(i, j);
        }
    }
    value
}
