pub mod algebra;
pub mod analytic;
pub mod cli;
pub mod curve;
pub mod error;
pub mod genus2;
pub mod listings;
pub mod psi;
pub mod reference;
pub mod report;
pub mod toda;
pub mod ultradiscrete;
pub mod valuation;

pub use error::{Error, Result};
