//! Fuzzy, neutrosophic and plithogenic rule networks on annotated paths.

use superhyper::io::parse_document;
use superhyper::linalg::{Activation, DenseMatrix};
use superhyper::uncertain::{
    fgnn_forward, grades, ngnn_forward, pgnn_forward, Consequent, MembershipFunction, Rule, RuleLayer, RuleSet,
};

fn main() -> superhyper::Result<()> {
    let rules = RuleSet::new(vec![
        Rule {
            vertex: MembershipFunction::Triangular { a: 0.0, b: 1.0, c: 2.0 },
            neighbor: MembershipFunction::One,
        },
        Rule {
            vertex: MembershipFunction::Gaussian { mean: 0.0, sigma: 0.5 },
            neighbor: MembershipFunction::One,
        },
    ])?;
    let mut mixing = Consequent::identity(2);
    mixing.u = DenseMatrix::identity(2).scale(0.5);
    let layers = [RuleLayer {
        consequents: vec![mixing, Consequent::identity(2)],
        activation: Activation::Relu,
        residual: false,
    }];
    let x = DenseMatrix::from_rows(&[[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])?;

    let fuzzy = parse_document(include_str!("../data/fuzzy_path.json"), true)?.document;
    let g = fuzzy.annotated_graph(true)?.expect("annotated");
    println!("fuzzy grades: {:?}", grades(&g)?.vertex);
    println!("F-GNN:\n{:?}", fgnn_forward(&g, &x, &rules, &layers)?.to_rows());

    let neutro = parse_document(include_str!("../data/neutrosophic_path.json"), true)?.document;
    let g = neutro.annotated_graph(true)?.expect("annotated");
    println!("N-GNN:\n{:?}", ngnn_forward(&g, &x, &rules, &layers)?.to_rows());

    let plith = parse_document(include_str!("../data/plithogenic_path.json"), true)?.document;
    let g = plith.annotated_graph(true)?.expect("annotated");
    println!("P-GNN:\n{:?}", pgnn_forward(&g, &x, &rules, &layers)?.to_rows());
    Ok(())
}
