//! Numerical kernels for transition rates of uniformly accelerated atoms
//! between reflecting boundaries.
//!
//! All quantities are in natural units (ħ = c = k_B = 1). The central object
//! is the kernel [`g_kernel`] and the four image sums built from it
//! ([`f_sum`], [`h_sum`], [`m_sum`], [`n_sum`]).

mod error;
mod kernel;
mod occupation;
mod series;
mod units;

pub use error::{Error, Result};
pub use kernel::{g_kernel, g_second_derivative_bound};
pub use occupation::{planck_occupation, planck_occupation_plus_one};
pub use series::{f_sum, h_sum, m_sum, n_sum, SeriesControl, SeriesValue};
pub use units::{Acceleration, Energy, Length};
