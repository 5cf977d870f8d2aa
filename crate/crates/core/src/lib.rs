pub mod action;
pub mod arith;
pub mod atlas;
pub mod bsgs;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod field;
pub mod forms;
pub mod matrix;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
