//! Uncertain-membership graphs: fuzzy, neutrosophic, k-partitioned and
//! plithogenic annotations with their validators, fuzzy hypergraphs with the
//! fuzzy incidence and Laplacian, and the rule-based graph networks.

mod fuzzy_hypergraph;
mod membership;
mod networks;
mod rules;

pub use fuzzy_hypergraph::{
    c_cut, fhgnn_convolve, fuzzy_incidence, fuzzy_laplacian, height, FuzzyEdge, FuzzyHypergraph,
};
pub use membership::{
    appurtenance_grade, AnnotatedGraph, Annotations, EdgeContradiction, FuzzyMembership,
    NeutrosophicTriplet, PartitionKind, PartitionedMembership, PlithogenicContext,
    PlithogenicEdge, PlithogenicVertex,
};
pub use networks::{fgnn_forward, grades, ngnn_forward, pgnn_forward};
pub use rules::{
    rule_network_hidden, Consequent, Grades, MembershipFunction, Rule, RuleLayer, RuleSet,
};
