pub mod error;
pub mod exactla;
pub mod hammock;
pub mod appkit;
pub mod arquiver;
pub mod catalogs;
pub mod coklemma;
pub mod repcore;

pub use error::{Error, Result};
