//! Hecke operators, nonsymmetric Macdonald polynomials and the Weyl character formula.

mod emac;
mod fermionic;
mod operators;
pub mod perm;

pub use emac::{e_poly, intertwiner_coeff, EMemo};
pub use fermionic::{
    a_delta_factor, classical_a, delta, ferm_a, hall_littlewood, match_product_form, vandermonde_like, wcf_p,
    ProductFactor,
};
pub use operators::{apply_partial, apply_ti, apply_tw};
pub use perm::min_sorting_perm;

use thiserror::Error;

use crate::qt::QtError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("operator index {0} out of range for {1} variables")]
    BadIndex(usize, usize),
    #[error("weight {0:?} is not strictly decreasing")]
    NotStrictlyDecreasing(Vec<usize>),
    #[error("partition has {0} parts, more than {1} variables")]
    ShapeTooLong(usize, usize),
    #[error(transparent)]
    Qt(#[from] QtError),
}
