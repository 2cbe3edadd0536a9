#![no_std]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dynamics;
pub mod error;
pub mod fock1d;
pub mod math;
pub mod moments;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod reference_forms;
pub mod specfun;
pub mod symbol;

pub use error::{Error, Result};
