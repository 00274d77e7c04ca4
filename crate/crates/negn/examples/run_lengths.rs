//! Run-length decomposition of a Young diagram: multiplicities of equal
//! row widths (a) and equal column heights (b), their prefix sums, the
//! lossless round trip, and the a <-> b swap under transposition.
//!
//! ```bash
//! cargo run -p negn --example run_lengths
//! ```

use negn::{RunDecomposition, YoungDiagram};

fn main() -> negn::Result<()> {
    let y: YoungDiagram = "6,5,3,3,1,1,1".parse()?;
    let runs = y.runs()?;

    println!("diagram ({y}) with k = {}", runs.k());
    println!("a (row runs, top to bottom)    : {:?}", runs.a());
    println!("b (column runs, left to right) : {:?}", runs.b());
    println!("A (prefix sums of a)           : {:?}", runs.prefix_a());
    println!("B (prefix sums of b)           : {:?}", runs.prefix_b());

    // The decomposition determines the diagram.
    assert_eq!(runs.to_diagram(), y);
    let rebuilt = RunDecomposition::new(runs.a().to_vec(), runs.b().to_vec())?;
    println!("rebuilt from (a, b): ({})", rebuilt.to_diagram());

    // Transposing swaps the two run lists.
    let t = y.transpose();
    let t_runs = t.runs()?;
    println!("\ntranspose ({t})");
    println!("a of transpose: {:?} (= b above)", t_runs.a());
    println!("b of transpose: {:?} (= a above)", t_runs.b());
    assert_eq!(t_runs.a(), runs.b());
    assert_eq!(t_runs.b(), runs.a());

    Ok(())
}
