pub mod ab;
pub mod dk;
pub mod error;
pub mod sset;
pub mod straight;
pub mod superpos;
pub mod verify;

pub use error::{Error, Result};
