//! Information quantities, lower bounds and numeric checks of the
//! inequalities behind the regret analysis.

mod bounds;
mod cramer;
mod density;
mod family;
mod quadrature;
mod verify;

pub use bounds::{burnetas_katehakis_bound, lai_robbins_bound, m_of_g, ArmCoefficient, LowerBoundReport};
pub use cramer::{cramer_transform, CumulantGenerating, LaplaceCgf};
pub use density::{ctj_coefficient, de_density, de_tail, DoubleExponentialSum};
pub use family::{kl_divergence, kl_divergence_of_means, rate_function, ExponentialFamily};
pub use quadrature::{adaptive_simpson, integrate_to_infinity};
pub use verify::{
    chisq_chernoff_bound, verify_b2_bound, verify_chisq_chernoff, verify_ctj_inequality, verify_min1_asymptotic, B2Point, B2Report,
    ChernoffPoint, ChernoffReport, CtjReport, Min1Report, MIN1_BAND,
};
