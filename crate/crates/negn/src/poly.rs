//! Laurent polynomials in the indeterminate N with exact rational
//! coefficients, plus Newton interpolation from exact sample points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A Laurent polynomial in N: a finite map from integer exponent to nonzero
/// rational coefficient. The zero polynomial has an empty map, so equality
/// of values is structural equality of the canonical form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// c * N^exp; collapses to zero when c = 0.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (exp, c) in iter {
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with nonzero coefficient; None for the zero polynomial.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.degree()
            .map(|d| self.coeff(d))
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// The substitution N -> -N: the coefficient at exponent e picks up a
    /// factor (-1)^e. An involution.
    pub fn substitute_neg(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| {
                let c = if e.rem_euclid(2) == 1 {
                    -c.clone()
                } else {
                    c.clone()
                };
                (e, c)
            })
            .collect();
        LaurentPoly { terms }
    }

    /// Exact evaluation at a rational point. Evaluating at 0 is an error when
    /// negative exponents are present.
    pub fn evaluate(&self, n: &Rational) -> Result<Rational> {
        if n.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(Error::PoleAtZero);
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            acc += c * rational_pow(n, e);
        }
        Ok(acc)
    }

    pub fn evaluate_int(&self, n: i64) -> Result<Rational> {
        self.evaluate(&Rational::from_integer(BigInt::from(n)))
    }

    /// Serialized form used by the JSON output: exponent (as a string key)
    /// to coefficient string, lexicographically ordered by key.
    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json_map()).expect("string map serializes")
    }

    pub fn from_json_map(map: &BTreeMap<String, String>) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for (key, value) in map {
            let exp: i64 = key
                .parse()
                .map_err(|_| Error::InvalidPolyJson(format!("bad exponent {key:?}")))?;
            let coeff = Rational::from_str(value)
                .map_err(|_| Error::InvalidPolyJson(format!("bad coefficient {value:?}")))?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }

    pub fn from_json_string(s: &str) -> Result<LaurentPoly> {
        let map: BTreeMap<String, String> =
            serde_json::from_str(s).map_err(|e| Error::InvalidPolyJson(e.to_string()))?;
        LaurentPoly::from_json_map(&map)
    }

    /// LaTeX rendering, terms in descending exponent order, e.g. "N^{2}-1".
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let abs = c.abs();
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            let power = match e {
                0 => String::new(),
                1 => "N".into(),
                _ => format!("N^{{{e}}}"),
            };
            if power.is_empty() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&power);
            } else {
                out.push_str(&coeff);
                out.push_str(&power);
            }
        }
        out
    }
}

fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mag = exp.unsigned_abs() as u32;
    let powered = Rational::new(
        num::pow::pow(base.numer().clone(), mag as usize),
        num::pow::pow(base.denom().clone(), mag as usize),
    );
    if exp < 0 {
        powered.recip()
    } else {
        powered
    }
}

impl fmt::Display for LaurentPoly {
    /// Text rendering in descending exponent order: "N^2 - 1", "2N",
    /// "N - 1/N", "N^2/2 + N/2".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", term_magnitude(e, &c.abs()))?;
        }
        Ok(())
    }
}

fn term_magnitude(e: i64, abs: &Rational) -> String {
    let numer = abs.numer().to_string();
    let denom = abs.denom().to_string();
    let integral = abs.is_integer();
    match e {
        0 => {
            if integral {
                numer
            } else {
                format!("{numer}/{denom}")
            }
        }
        _ if e > 0 => {
            let power = if e == 1 { "N".into() } else { format!("N^{e}") };
            let head = if numer == "1" {
                power
            } else {
                format!("{numer}{power}")
            };
            if integral {
                head
            } else {
                format!("{head}/{denom}")
            }
        }
        _ => {
            let power = if e == -1 {
                "N".into()
            } else {
                format!("N^{}", -e)
            };
            if integral {
                format!("{numer}/{power}")
            } else {
                format!("{numer}/({denom}{power})")
            }
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect();
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Exact polynomial through the given (integer node, value) points, computed
/// by Newton divided differences. The result has nonnegative exponents and
/// degree below the number of points.
pub fn interpolate(points: &[(i64, Rational)]) -> Result<LaurentPoly> {
    if points.is_empty() {
        return Err(Error::EmptyInterpolation);
    }
    let mut seen = std::collections::HashSet::new();
    for &(x, _) in points {
        if !seen.insert(x) {
            return Err(Error::DuplicateNode(x));
        }
    }

    let nodes: Vec<Rational> = points
        .iter()
        .map(|&(x, _)| Rational::from_integer(BigInt::from(x)))
        .collect();
    // diffs[j] holds f[x_{j}, ..., x_{j+level}] as the level grows.
    let mut diffs: Vec<Rational> = points.iter().map(|(_, v)| v.clone()).collect();
    let mut newton_coeffs = vec![diffs[0].clone()];
    for level in 1..points.len() {
        for j in 0..points.len() - level {
            diffs[j] = (&diffs[j + 1] - &diffs[j]) / (&nodes[j + level] - &nodes[j]);
        }
        diffs.truncate(points.len() - level);
        newton_coeffs.push(diffs[0].clone());
    }

    // Expand c_0 + c_1 (N - x_0) + c_2 (N - x_0)(N - x_1) + ...
    let mut result = LaurentPoly::zero();
    let mut basis = LaurentPoly::one();
    for (level, coeff) in newton_coeffs.into_iter().enumerate() {
        result = &result + &(&basis * &LaurentPoly::constant(coeff));
        if level < points.len() - 1 {
            let linear =
                LaurentPoly::from_terms([(1, Rational::one()), (0, -nodes[level].clone())]);
            basis = &basis * &linear;
        }
    }
    Ok(result)
}
