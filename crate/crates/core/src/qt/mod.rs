//! Exact coefficient field and Laurent polynomials in `x_1..x_n`.

mod coeff;
mod param;
mod rat;
mod serial;
mod upoly;
mod xpoly;

pub use coeff::{parse_specialization, CoeffElem};
pub use param::{one_plus, ParamExp, ParamPoly};
pub use rat::{parse_rat, rat, rat_to_string, ratio, Rat};
pub use serial::{xpoly_from_json, xpoly_to_json, XPolyJson};
pub use upoly::UPoly;
pub use xpoly::{XMonomial, XPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QtError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("variable index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("division is not exact")]
    InexactDivision,
    #[error("specialization makes a denominator vanish")]
    SpecializationPole,
    #[error("parse error: {0}")]
    Parse(String),
}
