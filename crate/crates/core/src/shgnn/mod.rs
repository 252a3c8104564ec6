//! Spectral superhypergraph convolution layers, multi-layer networks,
//! attention, dynamic construction and a single-layer parameter gradient.

mod attention;
mod conv;
mod dynamic;
mod grad;
mod network;

pub use attention::{
    attention_convolve, attention_incidence, edge_mean_features, shg_attention_convolve,
    shg_attention_incidence, AttentionParams,
};
pub use conv::{
    hgnn_convolve, nshgnn_convolve, shgnn_convolve, shgnn_pre_activation, LayerParams,
};
pub use dynamic::{
    default_vertex_names, dshgnn_forward, dynamic_construct, dynamic_construct_named,
    DynamicConfig,
};
pub(crate) use conv::check_inputs as check_layer_inputs;
pub use grad::grad_theta;
pub use network::{forward, NetworkConfig, Readout};
