//! Fixed-precision arithmetic in Z_p and its finite unramified extensions.

pub mod arith;
pub mod fp_poly;
pub mod hensel;
pub mod log;
pub mod qp;
pub mod rational;
pub mod ring;
pub mod roots;
pub mod serial;
pub mod zp;
pub mod zq;

pub use hensel::{hensel_quadratic_unit_root, unit_root_factor};
pub use qp::Qp;
pub use log::{iwasawa_log, log_one_unit, log_p_twisted, teichmuller};
pub use rational::{embed_rational, RationalParam};
pub use ring::PadicRing;
pub use roots::{roots_of_unity, roots_of_unity_in, RootsOfUnity};
pub use serial::ScalarRecord;
pub use zp::Zp;
pub use zq::{UnramifiedRing, Zq};
