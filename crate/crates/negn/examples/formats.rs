//! Exact Laurent arithmetic and the three output formats: plain text,
//! LaTeX, and the JSON map form (exponent string -> coefficient string),
//! which round-trips byte-identically.
//!
//! ```bash
//! cargo run -p negn --example formats
//! ```

use negn::render::ReportJson;
use negn::{check_prop1, interpolate, LaurentPoly, Rational, StableRep};

fn main() -> negn::Result<()> {
    let rep = StableRep::new("1".parse()?, "1".parse()?);
    let dim = negn::dim_polynomial(&rep)?;
    let casimir = negn::casimir_formula(&rep);

    println!("text : dim = {dim}, casimir = {casimir}");
    println!(
        "latex: dim = {}, casimir = {}",
        dim.to_latex(),
        casimir.to_latex()
    );
    println!("json : dim = {}", dim.to_json_string());

    // JSON round trip is exact and byte-identical.
    let serialized = dim.to_json_string();
    let parsed = LaurentPoly::from_json_string(&serialized)?;
    assert_eq!(parsed, dim);
    assert_eq!(parsed.to_json_string(), serialized);
    println!("round trip of {serialized} is byte-identical");

    // N -> -N substitution and exact evaluation.
    let sub = casimir.substitute_neg();
    println!("\nC(N) = {casimir}, C(-N) = {sub}");
    println!("C(7) = {}", casimir.evaluate_int(7)?);

    // Exact interpolation through integer nodes recovers polynomials with
    // rational coefficients exactly.
    let points: Vec<(i64, Rational)> = (1..=4)
        .map(|n| (n, Rational::new((n * n * n - n).into(), 6.into())))
        .collect();
    println!("\ninterpolated binomial(N+1, 3): {}", interpolate(&points)?);

    // Check reports serialize to a stable JSON schema.
    let report = check_prop1(&rep)?;
    println!(
        "\nreport json: {}",
        serde_json::to_string(&ReportJson::from_report(&report)).unwrap()
    );

    Ok(())
}
