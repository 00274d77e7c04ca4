//! Second-order Casimir eigenvalues of stable families: the closed Laurent
//! polynomial in N, its cross-check against the direct highest-weight inner
//! product, and the decomposition into lambda part, tau part and mixed term.
//!
//! ```bash
//! cargo run -p negn --example casimir
//! ```

use negn::{casimir_cross_term, casimir_direct, casimir_formula, StableRep, YoungDiagram};

fn main() -> negn::Result<()> {
    let showcase = [("1", "1"), ("1", ""), ("2,1", "1"), ("4,2,1", "3,1")];
    for (lambda, tau) in showcase {
        let rep = StableRep::new(lambda.parse()?, tau.parse()?);
        let c = casimir_formula(&rep);
        println!("C({rep}) = {c}");

        // The closed formula and (lambda,lambda) + 2(lambda,rho) from the
        // inverse Cartan pairing must agree at every stable rank.
        for n in rep.n_min()..rep.n_min() + 3 {
            let from_poly = c.evaluate_int(n)?;
            let direct = casimir_direct(&rep.realize(n)?);
            assert_eq!(from_poly, direct);
            println!("  rank {n}: {from_poly} (direct value agrees)");
        }
    }

    // C(D(lambda,tau)) = C(D(lambda,0)) + C(D(0,tau)) + (2/N) area * area.
    let rep = StableRep::new("2,1".parse()?, "1".parse()?);
    let lam_only = StableRep::new(rep.lambda().clone(), YoungDiagram::empty());
    let tau_only = StableRep::new(YoungDiagram::empty(), rep.tau().clone());
    let cross = casimir_cross_term(&rep);
    println!("\ndecomposition for {rep}:");
    println!("  lambda part : {}", casimir_formula(&lam_only));
    println!("  tau part    : {}", casimir_formula(&tau_only));
    println!("  cross term  : {cross}");
    let assembled = casimir_formula(&lam_only) + casimir_formula(&tau_only) + cross;
    assert_eq!(assembled, casimir_formula(&rep));
    println!("  total       : {}", casimir_formula(&rep));

    Ok(())
}
