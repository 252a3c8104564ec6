//! Transition kernels, a seeded trajectory and stationary distributions.

use superhyper::io::parse_document;
use superhyper::linalg::DenseMatrix;
use superhyper::walk::{
    expanded_transition_kernel, shg_transition_kernel, simulate, stationary, DanglingPolicy, Selection,
    TransitionKernel, WalkConfig,
};

fn main() -> superhyper::Result<()> {
    let shg = parse_document(include_str!("../data/worked_example.json"), true)?
        .document
        .superhypergraph()?;
    let base = expanded_transition_kernel(&shg, &Selection::Uniform, DanglingPolicy::Error)?;
    println!("base-vertex kernel: {:?}", base.matrix().to_rows());
    let sup = shg_transition_kernel(&shg, &Selection::Uniform, DanglingPolicy::Lazy)?;
    println!("supervertex states: {:?}", sup.states());
    println!("supervertex kernel: {:?}", sup.matrix().to_rows());

    let path = simulate(&base, &WalkConfig { start: 1, steps: 8, seed: 3 })?;
    let names: Vec<&str> = path.iter().map(|&i| base.states()[i].as_str()).collect();
    println!("walk: {}", names.join(" -> "));
    println!("stationary: {:?}", stationary(&base, 1e-12)?);

    let weather = TransitionKernel::new(
        vec!["sunny".into(), "rainy".into()],
        DenseMatrix::from_rows(&[[0.9, 0.1], [0.5, 0.5]])?,
    )?;
    println!("weather stationary: {:?}", stationary(&weather, 1e-14)?);
    Ok(())
}
