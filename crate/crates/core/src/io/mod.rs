//! The JSON graph document, CSV matrices and partition tables.

mod document;
mod json;
mod table;

pub use document::{
    load, parse_document, save, AnnotationsDoc, EdgeContradictionDoc, ElementDoc, FuzzyEdgeDoc, FuzzyHypergraphDoc,
    GraphDocument, Loaded, SuperedgeDoc, FORMAT_VERSION,
};
pub use json::{format_real, pointer_segment, to_json_string};
pub use table::{matrix_to_csv, partition_to_csv, read_matrix, read_matrix_file, write_matrix};
