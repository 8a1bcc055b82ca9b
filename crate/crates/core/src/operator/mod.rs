//! Differential operators in normal order and the operator families whose
//! common kernels are studied.

mod diffop;
mod family;
mod reduce;

pub use diffop::DiffOperator;
pub use family::{is_symmetric_op, FamilyKind, OperatorFamily};
pub use reduce::reduce_composition;
