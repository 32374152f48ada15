//! Shared numeric substrate.

pub mod accel;
pub mod ode;
pub mod path;
pub mod qmc;
pub mod quadrature;
pub mod sum;
mod value;

pub use accel::accelerate_alternating;
pub use ode::{iterated_integral, ode_along_path, OdeOptions};
pub use path::{IntegrationPath, Segment};
pub use qmc::{QuadMethod, QuadratureConfig};
pub use quadrature::{integrate_1d, try_integrate_1d, QuadOptions, QuadResult};
pub use sum::{pairwise_sum, CompensatedSum};
pub use value::ValueWithError;
