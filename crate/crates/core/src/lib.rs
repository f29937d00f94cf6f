pub mod algebra_core;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod grossman_larson;
pub mod identities;
pub mod magnus;
pub mod ode;
pub mod rota_baxter;

pub use error::{Error, Result};
