//! Multilevel balanced partitioning with cut and SOED objectives.

use superhyper::partition::{
    cut_objective, multilevel_partition, soed_objective, Objective, PartitionConfig,
};
use superhyper::structures::Hypergraph;

fn main() -> superhyper::Result<()> {
    // Two dense communities of 20 vertices with a few bridging edges.
    let mut edges = Vec::new();
    for side in [0usize, 20] {
        for i in 0..20 {
            edges.push((vec![side + i, side + (i + 1) % 20, side + (i + 7) % 20], 1.0));
        }
    }
    edges.push((vec![3, 27], 1.0));
    edges.push((vec![12, 35], 1.0));
    let h = Hypergraph::with_indexed_vertices(40, edges)?;

    for objective in [Objective::Cut, Objective::Soed] {
        let mut cfg = PartitionConfig::new(2, 1.05, 9);
        cfg.objective = objective;
        let report = multilevel_partition(&h, &cfg)?;
        println!(
            "{objective:?}: sizes {:?}, cut {}, soed {}, levels {}, passes {}",
            report.partition.part_sizes(),
            cut_objective(&h, &report.partition)?,
            soed_objective(&h, &report.partition)?,
            report.levels,
            report.passes.len()
        );
    }
    Ok(())
}
