//! Exact p-adic special functions: polylogarithms, polygamma functions,
//! Kubota–Leopoldt values, Dwork's hypergeometric functions and the
//! hypergeometric functions of logarithmic type, with point-counting checks
//! of unit-root formulas.

pub mod curves;
pub mod error;
pub mod hypergeo;
pub mod padic;
pub mod special;

pub use error::{Error, Result};
pub use padic::{PadicRing, RationalParam, ScalarRecord, UnramifiedRing, Zp, Zq};
pub use hypergeo::{HGParams, TruncatedSeries, Twist};
pub use curves::{Family, HGCurveSpec};
