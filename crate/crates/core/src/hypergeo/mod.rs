//! Hypergeometric series F_a(t), Dwork's F^Dw and the logarithmic-type
//! functions G_a(t)/F_a(t).

pub mod coeffs;
pub mod congruence;
pub mod eval;
pub mod gauss;
pub mod params;
pub mod series;

pub use coeffs::{g_coeffs, g_constant, g_tail_exact, hg_coeffs, hg_coeffs_exact, hg_valued, ValuedCoeffs};
pub use params::{dwork_orbit, dwork_orbit_tuple, dwork_prime, dwork_prime_tuple, DworkOrbit, HGParams, Twist};
pub use series::{SeriesRecord, TruncatedSeries};
pub use eval::{check_domain, dwork_eval, dwork_ratio, h_poly, h_value, logtype_eval, logtype_ratio};
pub use congruence::{congruence_report, dwork_congruence_report, CongruenceKind, CongruenceReport};
pub use gauss::{gauss_mod_p, GaussReport};
