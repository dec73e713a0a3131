//! Series construction: falling factorials, perturbed coefficients and the
//! Frobenius-type extractions.

pub mod coefficients;
pub mod frobenius;
pub mod logseries;
pub mod poly;

pub use coefficients::{a_u_expansion, falling_factorial, Expansion};
pub use frobenius::{
    frobenius_method1, frobenius_method1_extra, frobenius_method2, method1_condition,
    method2_condition, phi_series, phi_series_unchecked, Certificate, Window, DEFAULT_WEIGHT_CAP,
};
pub use logseries::{compare_combinations, LogSeries, StartingMonomial, Truncation};
pub use poly::Poly;
