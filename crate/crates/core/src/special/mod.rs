//! p-adic polylogarithms, the Euler constant, polygamma functions,
//! Kubota–Leopoldt values and Bernoulli numbers.

pub mod bernoulli;
pub mod euler;
pub mod kubota;
pub mod polygamma;
pub mod polylog;
pub mod volkenborn;

pub use bernoulli::{bernoulli, BernoulliCache};
pub use euler::euler_gamma;
pub use kubota::{kubota_leopoldt, kubota_leopoldt_bernoulli, kubota_leopoldt_limit, kubota_leopoldt_with_n};
pub use polygamma::{digamma, polygamma, psi_tilde, psi_tilde_rational, PolygammaArg, PolygammaRequest};
pub use polylog::{polylog, polylog_at_roots, polylog_limit};
pub use volkenborn::volkenborn_psi;
