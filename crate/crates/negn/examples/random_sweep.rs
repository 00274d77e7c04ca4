//! Seeded random verification sweep: sample diagram pairs uniformly by area
//! and by partition, then confirm all three stable-family identities on
//! every sample. The corpus is fully determined by the seed.
//!
//! ```bash
//! cargo run -p negn --example random_sweep
//! ```

use std::time::Instant;

use negn::{check_prop1, check_prop2, check_z2, random_corpus};

fn main() -> negn::Result<()> {
    let (seed, max_area, count) = (42, 6, 200);
    let corpus = random_corpus(seed, max_area, count);
    assert_eq!(corpus, random_corpus(seed, max_area, count));
    println!("seed {seed}, {count} pairs with areas <= {max_area}");

    let start = Instant::now();
    let mut held = 0usize;
    let mut checked = 0usize;
    for rep in &corpus {
        for report in [check_prop1(rep)?, check_prop2(rep)?, check_z2(rep)?] {
            checked += 1;
            if report.holds {
                held += 1;
            } else {
                println!("counterexample? {} on {rep}", report.identity);
            }
        }
    }
    println!(
        "{held}/{checked} identities hold ({:.2?} total)",
        start.elapsed()
    );

    // A few samples, with their dimension polynomials.
    for rep in corpus.iter().take(5) {
        println!("  {rep}: dim = {}", negn::dim_polynomial(rep)?);
    }

    Ok(())
}
