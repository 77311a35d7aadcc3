//! Dense tensors and the reverse-mode tape.
//!
//! `Tensor<T>` is a flat row-major array with shape metadata and an optional
//! gradient slot. All differentiable computation goes through [`Graph`], which
//! records ops and replays them in reverse; backward passes themselves emit
//! taped ops, so gradients of gradients (needed by the R1 penalty) come for
//! free.

mod gradcheck;
mod graph;
mod init;
mod store;

pub use gradcheck::{finite_diff_check, finite_diff_check_multi};
pub use graph::{Graph, Var};
pub use init::{glorot_uniform, truncated_normal};
pub use store::{ParamId, ParamStore};

use std::fmt::{Debug, Display};
use std::iter::Sum;

use crate::error::{Error, Result};

/// Scalar element type: the run-level precision switch. f64 for oracle and
/// test builds, f32 for training runs.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Copy
    + Debug
    + Display
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Element tag stored in checkpoints (4 = f32, 8 = f64).
    const TAG: u8;
    const BYTES: usize;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn write_le(self, buf: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
}

impl Real for f32 {
    const TAG: u8 = 4;
    const BYTES: usize = 4;

    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn write_le(self, buf: &mut Vec<u8>) {
        buf.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f32::from_le_bytes(bytes[..4].try_into().unwrap())
    }
}

impl Real for f64 {
    const TAG: u8 = 8;
    const BYTES: usize = 8;

    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn write_le(self, buf: &mut Vec<u8>) {
        buf.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f64::from_le_bytes(bytes[..8].try_into().unwrap())
    }
}

/// Shorthand for converting an f64 literal into the active precision.
#[inline]
pub fn rf<T: Real>(v: f64) -> T {
    T::from_f64(v)
}

/// Dense N-dimensional array, row major. The universal value carrier.
#[derive(Clone, Debug)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
    pub requires_grad: bool,
    pub grad: Option<Box<Tensor<T>>>,
}

impl<T: Real> Tensor<T> {
    pub fn new(shape: &[usize], data: Vec<T>) -> Result<Self> {
        let numel: usize = shape.iter().product();
        if numel != data.len() {
            return Err(Error::Shape(format!(
                "shape {:?} wants {} elements, got {}",
                shape,
                numel,
                data.len()
            )));
        }
        Ok(Tensor { shape: shape.to_vec(), data, requires_grad: false, grad: None })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let numel = shape.iter().product();
        Tensor { shape: shape.to_vec(), data: vec![T::zero(); numel], requires_grad: false, grad: None }
    }

    pub fn ones(shape: &[usize]) -> Self {
        Self::full(shape, T::one())
    }

    pub fn full(shape: &[usize], v: T) -> Self {
        let numel = shape.iter().product();
        Tensor { shape: shape.to_vec(), data: vec![v; numel], requires_grad: false, grad: None }
    }

    pub fn scalar(v: T) -> Self {
        Tensor { shape: vec![], data: vec![v], requires_grad: false, grad: None }
    }

    /// Builds a tensor by evaluating `f` at every multi-index.
    pub fn from_fn(shape: &[usize], mut f: impl FnMut(&[usize]) -> T) -> Self {
        let numel: usize = shape.iter().product();
        let mut data = Vec::with_capacity(numel);
        let mut idx = vec![0usize; shape.len()];
        for _ in 0..numel {
            data.push(f(&idx));
            for d in (0..shape.len()).rev() {
                idx[d] += 1;
                if idx[d] < shape[d] {
                    break;
                }
                idx[d] = 0;
            }
        }
        Tensor { shape: shape.to_vec(), data, requires_grad: false, grad: None }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    /// A scalar tensor's single value.
    pub fn item(&self) -> T {
        debug_assert_eq!(self.numel(), 1, "item() on non-scalar tensor");
        self.data[0]
    }

    pub fn get(&self, idx: &[usize]) -> T {
        self.data[flat_index(&self.shape, idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: T) {
        let i = flat_index(&self.shape, idx);
        self.data[i] = v;
    }

    pub fn reshaped(mut self, shape: &[usize]) -> Result<Self> {
        let numel: usize = shape.iter().product();
        if numel != self.data.len() {
            return Err(Error::Shape(format!(
                "cannot reshape {:?} ({} elems) to {:?}",
                self.shape,
                self.data.len(),
                shape
            )));
        }
        self.shape = shape.to_vec();
        Ok(self)
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
            requires_grad: false,
            grad: None,
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Converts element precision (used when serializing across precisions is
    /// not wanted; checkpoints keep the native precision instead).
    pub fn cast<U: Real>(&self) -> Tensor<U> {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| U::from_f64(v.to_f64())).collect(),
            requires_grad: false,
            grad: None,
        }
    }
}

/// Value equality: shape and elements only; gradient slots are ignored.
impl<T: Real> PartialEq for Tensor<T> {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.data == other.data
    }
}

/// Row-major strides for a shape.
pub fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; shape.len()];
    for d in (0..shape.len().saturating_sub(1)).rev() {
        s[d] = s[d + 1] * shape[d + 1];
    }
    s
}

pub(crate) fn flat_index(shape: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(shape.len(), idx.len());
    let mut flat = 0;
    for (d, &i) in idx.iter().enumerate() {
        debug_assert!(i < shape[d], "index {:?} out of bounds for {:?}", idx, shape);
        flat = flat * shape[d] + i;
    }
    flat
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_length_mismatch() {
        let err = Tensor::<f64>::new(&[2, 3], vec![0.0; 5]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("[2, 3]") && msg.contains('5'), "{msg}");
    }

    #[test]
    fn from_fn_row_major_order() {
        let t = Tensor::<f64>::from_fn(&[2, 3], |idx| (idx[0] * 10 + idx[1]) as f64);
        assert_eq!(t.data(), &[0.0, 1.0, 2.0, 10.0, 11.0, 12.0]);
        assert_eq!(t.get(&[1, 2]), 12.0);
    }

    #[test]
    fn scalar_has_empty_shape() {
        let t = Tensor::<f32>::scalar(3.0);
        assert_eq!(t.shape(), &[] as &[usize]);
        assert_eq!(t.item(), 3.0);
    }

    #[test]
    fn strides_row_major() {
        assert_eq!(strides(&[2, 3, 4]), vec![12, 4, 1]);
        assert_eq!(strides(&[]), Vec::<usize>::new());
    }
}
