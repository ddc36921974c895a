//! Exact scalars, dense matrices and sparse structure-constant tensors.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::{Matrix, RankKernelImage, RowSpace};
pub use scalar::{Field, Scalar, MAX_PRIME};
pub use tensor::SparseTensor3;

/// Vector helpers shared by the structure modules.
pub mod vector {
    use super::{Field, Scalar};

    pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn basis(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a += &(c * x);
            }
        }
    }

    /// Row-major tensor of two vectors.
    pub fn tensor(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let field = a.first().or(b.first()).map(Scalar::field);
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(if x.is_zero() || y.is_zero() {
                    field.expect("nonempty").zero()
                } else {
                    x * y
                });
            }
        }
        out
    }

    pub fn format(v: &[Scalar]) -> String {
        let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(", "))
    }
}
