//! Balanced k-way partitioning, spectral clustering and degree centrality.

mod coarsen;
mod multilevel;
mod objective;
mod spectral;

pub use coarsen::{coarsen, coarsen_weighted, CoarseLevel, COARSENING_RATIO};
pub use multilevel::{
    multilevel_partition, multilevel_partition_shg, supervertex_hypergraph, PartitionConfig, PartitionReport,
    PassRecord,
};
pub use objective::{
    balance_bounds, check_feasible, cut_objective, soed_objective, spans, weighted_cut, Objective, Partition,
};
pub use spectral::{
    degree_centrality, hypergraph_degree_centrality, ncut_spectral, ncut_spectral_capped, ncut_value,
};
