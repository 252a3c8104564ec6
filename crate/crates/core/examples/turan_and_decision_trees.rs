//! Exact Turán numbers for the triangle and a decision tree for AND.

use superhyper::combinatorics::{turan_density_estimate, turan_number, DecisionTree, UniformHypergraph};

fn main() -> superhyper::Result<()> {
    let triangle = UniformHypergraph::complete(3, 2)?;
    for n in 3..=7 {
        let t = turan_number(n, 2, &triangle)?;
        println!("ex_2({n}, K3) = {} witness {:?}", t.ex, t.witness.edges());
    }
    let d = turan_density_estimate(2, &triangle, 3..=7)?;
    let ratios: Vec<String> = d.points.iter().map(|p| format!("{:.3}", p.ratio)).collect();
    println!("densities {} (non-increasing: {})", ratios.join(", "), d.non_increasing);

    let tree = DecisionTree::build(&[false, false, false, true], &[0, 1])?;
    println!("AND leaves: {:?}", tree.leaves());
    println!("AND(1,1) = {}", tree.evaluate(&[true, true])?);
    Ok(())
}
