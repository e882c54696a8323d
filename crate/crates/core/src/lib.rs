pub mod cli;
pub mod codegen;
pub mod combin;
pub mod error;
pub mod essdecode;
pub mod essrank;
pub mod field;
pub mod gabidulin;
pub mod galois;
pub mod io;
pub mod linalg;
pub mod orbits;
pub mod polyring;

pub use error::{Error, Result};
pub use field::Field;
