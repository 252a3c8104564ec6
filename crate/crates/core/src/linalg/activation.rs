use super::DenseMatrix;

/// Pointwise activation used by the network layers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Activation {
    Identity,
    Relu,
    LeakyRelu(f64),
}

pub const DEFAULT_LEAKY_SLOPE: f64 = 0.01;

impl Activation {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Activation::Identity => x,
            Activation::Relu => x.max(0.0),
            Activation::LeakyRelu(slope) => {
                if x >= 0.0 {
                    x
                } else {
                    slope * x
                }
            }
        }
    }

    /// Derivative, taking the right-hand value at 0.
    pub fn derivative(self, x: f64) -> f64 {
        match self {
            Activation::Identity => 1.0,
            Activation::Relu => {
                if x >= 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Activation::LeakyRelu(slope) => {
                if x >= 0.0 {
                    1.0
                } else {
                    slope
                }
            }
        }
    }

    pub fn apply_matrix(self, m: &DenseMatrix) -> DenseMatrix {
        m.map(|x| self.apply(x))
    }

    pub fn is_piecewise_linear_kink(self, x: f64) -> bool {
        !matches!(self, Activation::Identity) && x == 0.0
    }
}

pub fn relu(m: &DenseMatrix) -> DenseMatrix {
    Activation::Relu.apply_matrix(m)
}

pub fn leaky_relu(m: &DenseMatrix, slope: f64) -> DenseMatrix {
    Activation::LeakyRelu(slope).apply_matrix(m)
}

/// Row-wise softmax with max subtraction.
pub fn softmax_rows(m: &DenseMatrix) -> DenseMatrix {
    let mut out = m.clone();
    for i in 0..out.rows() {
        softmax_in_place(out.row_mut(i));
    }
    out
}

pub(crate) fn softmax_in_place(row: &mut [f64]) {
    if row.is_empty() {
        return;
    }
    let max = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for v in row.iter_mut() {
        *v = (*v - max).exp();
        sum += *v;
    }
    for v in row.iter_mut() {
        *v /= sum;
    }
}
