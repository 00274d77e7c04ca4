//! Dimensions three ways: the hook/content product at a concrete rank, the
//! independent Weyl-formula oracle, and the exact dimension polynomial of a
//! stable family.
//!
//! ```bash
//! cargo run -p negn --example dimensions
//! ```

use negn::{dim_hook, dim_polynomial, dim_stable, dim_weyl_oracle, StableRep, YoungDiagram};

fn main() -> negn::Result<()> {
    let y: YoungDiagram = "3,3,1".parse()?;

    println!("diagram ({y}), area {}", y.area());
    println!("hook lengths : {:?}", y.hook_lengths());
    println!("contents     : {:?}", y.contents());
    for n in 3..=6 {
        println!(
            "dim at rank {n}: hook/content = {}, Weyl oracle = {}",
            dim_hook(&y, n)?,
            dim_weyl_oracle(&y, n)?
        );
    }

    // A fixed diagram is the tau-free stable family D(Y, 0); its dimension
    // polynomial has degree equal to the area.
    let fixed = StableRep::new(y.clone(), YoungDiagram::empty());
    let p = dim_polynomial(&fixed)?;
    println!("dim({y}) as a polynomial in N: {p}");
    println!(
        "degree {} with leading coefficient {}",
        p.degree().unwrap(),
        p.leading_coeff()
    );

    // The adjoint family D((1),(1)) keeps one label at each end of the
    // Dynkin diagram; its realized Young diagram grows with N but the
    // dimension stays the polynomial N^2 - 1.
    let adjoint = StableRep::new("1".parse()?, "1".parse()?);
    println!("\nadjoint family {adjoint}");
    for n in adjoint.n_min()..adjoint.n_min() + 4 {
        println!(
            "  rank {n}: realized diagram ({}), dimension {}",
            adjoint.realized_young(n)?,
            dim_stable(&adjoint, n)?
        );
    }
    println!("  symbolically: {}", dim_polynomial(&adjoint)?);

    Ok(())
}
