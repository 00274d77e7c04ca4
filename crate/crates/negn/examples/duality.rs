//! The N <-> -N duality identities as exact polynomial identities: the
//! classic transpose duality for fixed diagrams, the stable-family dimension
//! duality, the Casimir duality, and the Dynkin-automorphism identity.
//!
//! ```bash
//! cargo run -p negn --example duality
//! ```

use negn::{check_classic, check_constant_term, check_prop1, check_prop2, check_z2, StableRep};

fn main() -> negn::Result<()> {
    // Fixed diagrams: dim(Y, N) = (-1)^area dim(Y^T, -N). The symmetric and
    // antisymmetric squares swap into each other.
    for rows in ["2", "1,1", "3,3,1"] {
        let y = rows.parse()?;
        let report = check_classic(&y)?;
        println!(
            "classic  ({rows}): {} with sign {:+}, dim = {}",
            if report.holds { "holds" } else { "FAILS" },
            report.sign.unwrap(),
            report.lhs
        );
    }

    // Stable families: the swap partner picks up (-1)^(area sum) together
    // with N -> -N, and both sides are compared as canonical polynomials.
    let rep = StableRep::new("4,2,1".parse()?, "3,1".parse()?);
    let p1 = check_prop1(&rep)?;
    println!(
        "\nprop1 {rep}: {} with sign {:+}",
        if p1.holds { "holds" } else { "FAILS" },
        p1.sign.unwrap()
    );
    println!("  lhs            : {}", p1.lhs);
    println!("  transformed rhs: {}", p1.rhs_transformed);

    // Casimir eigenvalues flip sign under transposing both diagrams.
    let p2 = check_prop2(&rep)?;
    println!(
        "prop2 {rep}: {} ({} = {})",
        if p2.holds { "holds" } else { "FAILS" },
        p2.lhs,
        p2.rhs_transformed
    );

    // The Dynkin-diagram automorphism identifies D(lambda,tau) with
    // D(tau^T,lambda^T) without any sign.
    let z2 = check_z2(&rep)?;
    println!(
        "z2    {rep} vs {}: {}",
        rep.z2_partner(),
        if z2.holds { "holds" } else { "FAILS" }
    );

    // Constant-term check for a self-transpose lambda: C = 3N - 9/N.
    let hook = StableRep::new("2,1".parse()?, "".parse()?);
    let ct = check_constant_term(&hook)?;
    println!(
        "\nconst-term {hook}: {} ({})",
        if ct.holds { "holds" } else { "FAILS" },
        ct.detail
    );

    Ok(())
}
