//! Brute-force oracle: differential operators realized on the normal
//! coordinate model, their symbols, and the inverse quantization.

mod calibrate;
mod lemmas;
mod model;
mod ops;
mod state;

pub use calibrate::{calibrate, calibration_family, CalibrationReport, C_GAMMA_GRID, C_OMEGA_GRID};
pub use lemmas::{binom, reordered_power_operator, factorial, mixed_power_top};
pub use model::{Calibration, Model};
pub use ops::{DiffOp, Generator, Letter};
pub use state::{ModelState, XMono};
