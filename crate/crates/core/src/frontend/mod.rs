//! File formats, random generation and the command-line driver.

mod apx;
pub mod cli;
mod format;
mod generate;
mod names;
mod tgf;

pub use apx::{parse_apx, write_apx};
pub use format::{format_answer, format_set};
pub use generate::{generate, GeneratorConfig};
pub use names::NameMap;
pub use tgf::{parse_tgf, write_tgf};
