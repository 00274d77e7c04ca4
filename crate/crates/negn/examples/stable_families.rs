//! The D(lambda, tau) data model: how two fixed Young diagrams name a whole
//! sequence of representations, one per rank N, with a growing zero gap in
//! the middle of the Dynkin labels.
//!
//! ```bash
//! cargo run -p negn --example stable_families
//! ```

use negn::{labels_to_young, young_to_labels_cols, young_to_labels_rows, StableRep};

fn main() -> negn::Result<()> {
    let lambda: negn::YoungDiagram = "4,2,1".parse()?;
    let tau: negn::YoungDiagram = "3,1".parse()?;

    // lambda enters by column multiplicities, tau by row multiplicities.
    println!(
        "lambda = ({lambda}): column labels {:?}",
        young_to_labels_cols(&lambda)
    );
    println!(
        "tau    = ({tau}): row labels    {:?}",
        young_to_labels_rows(&tau)
    );
    assert_eq!(labels_to_young(&young_to_labels_cols(&lambda)), lambda);

    let rep = StableRep::new(lambda, tau);
    println!("\nfamily {rep}, defined for N >= {}", rep.n_min());
    for n in rep.n_min()..rep.n_min() + 4 {
        let labels = rep.realize(n)?;
        println!(
            "  N = {n:2}: labels {:?} -> diagram ({})",
            labels.labels(),
            rep.realized_young(n)?
        );
    }

    // The three involutions appearing in the duality identities.
    println!("\nswap           : {}", rep.swap());
    println!("transpose both : {}", rep.transpose_both());
    println!("z2 partner     : {}", rep.z2_partner());
    assert_eq!(rep.z2_partner(), rep.swap().transpose_both());

    // A family with empty tau keeps its diagram at every rank.
    let fixed = StableRep::new("2,2".parse()?, "".parse()?);
    for n in fixed.n_min()..fixed.n_min() + 3 {
        assert_eq!(fixed.realized_young(n)?, *fixed.lambda());
    }
    println!("\n{fixed} keeps the diagram (2,2) at every rank");

    Ok(())
}
